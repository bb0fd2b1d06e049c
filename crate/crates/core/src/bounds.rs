//! Explicit upper bounds for the Ramsey-type constants: `R_e(l; c)`, the
//! Erdős–Szekeres number `N(k)`, the colour-class count `c(t)` and the
//! composed bound on `n2`.
//!
//! Values quickly outgrow any exact representation (`R_3(9; 27)` has far
//! more digits than atoms in the universe), so [`BigCount`] stores either an
//! exact integer below `2^LIMIT_BITS` or an upper bound of the form `2^E`
//! with `E` itself a `BigCount`. Every operation rounds up, so a returned
//! value is always at least the true constant.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact values are kept up to this many bits.
pub const LIMIT_BITS: u64 = 1 << 16;

/// A nonnegative integer, or an upper bound `2^E` once it is too large to
/// store.
///
/// Invariant: `Exact` values have at most `LIMIT_BITS` bits and `Pow2`
/// exponents exceed `LIMIT_BITS`, so every `Pow2` is larger than every
/// `Exact`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BigCount {
    Exact(BigUint),
    /// At most `2^E`.
    Pow2(Box<BigCount>),
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount::Exact(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount::normalize(v)
    }
}

impl Ord for BigCount {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BigCount::Exact(a), BigCount::Exact(b)) => a.cmp(b),
            (BigCount::Exact(_), BigCount::Pow2(_)) => Ordering::Less,
            (BigCount::Pow2(_), BigCount::Exact(_)) => Ordering::Greater,
            (BigCount::Pow2(a), BigCount::Pow2(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for BigCount {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BigCount {
    fn normalize(v: BigUint) -> Self {
        if v.bits() > LIMIT_BITS {
            BigCount::Pow2(Box::new(BigCount::from(v.bits())))
        } else {
            BigCount::Exact(v)
        }
    }

    /// The bound `2^e`, exact when small enough.
    pub fn pow2(e: BigCount) -> Self {
        match &e {
            BigCount::Exact(v) if *v <= BigUint::from(LIMIT_BITS) => {
                let shift = v.to_u64().unwrap_or(LIMIT_BITS);
                BigCount::Exact(BigUint::one() << shift)
            }
            _ => BigCount::Pow2(Box::new(e)),
        }
    }

    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            BigCount::Exact(v) => Some(v),
            BigCount::Pow2(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact().is_some()
    }

    /// Smallest `L` with `self <= 2^L` (for exact values).
    pub fn log2_ceil(&self) -> BigCount {
        match self {
            BigCount::Exact(v) if v.is_zero() => BigCount::from(0),
            BigCount::Exact(v) => BigCount::from((v - 1u32).bits()),
            BigCount::Pow2(e) => (**e).clone(),
        }
    }

    pub fn add(&self, other: &BigCount) -> BigCount {
        match (self, other) {
            (BigCount::Exact(a), BigCount::Exact(b)) => BigCount::normalize(a + b),
            _ => {
                let e = self.log2_ceil().max(other.log2_ceil());
                BigCount::pow2(e.add(&BigCount::from(1)))
            }
        }
    }

    pub fn mul(&self, other: &BigCount) -> BigCount {
        match (self, other) {
            (BigCount::Exact(a), _) if a.is_zero() => BigCount::from(0),
            (_, BigCount::Exact(b)) if b.is_zero() => BigCount::from(0),
            (BigCount::Exact(a), BigCount::Exact(b)) if a.bits() + b.bits() <= LIMIT_BITS + 1 => BigCount::normalize(a * b),
            _ => BigCount::pow2(self.log2_ceil().add(&other.log2_ceil())),
        }
    }

    pub fn pow(&self, exp: &BigCount) -> BigCount {
        if let BigCount::Exact(b) = self {
            if b.is_zero() {
                return BigCount::from(u64::from(exp.exact().map_or(false, |e| e.is_zero())));
            }
            if b.is_one() {
                return BigCount::from(1);
            }
        }
        if let Some(e) = exp.exact() {
            if e.is_zero() {
                return BigCount::from(1);
            }
            if let (Some(b), Some(e64)) = (self.exact(), e.to_u64()) {
                if b.bits().saturating_mul(e64) <= LIMIT_BITS + 64 {
                    return BigCount::normalize(b.pow(e64 as u32));
                }
            }
        }
        BigCount::pow2(self.log2_ceil().mul(exp))
    }

    /// Binomial coefficient `C(self, k)`, bounded by `self^k` when large.
    pub fn binom(&self, k: u64) -> BigCount {
        if let BigCount::Exact(n) = self {
            if *n < BigUint::from(k) {
                return BigCount::from(0);
            }
            if n.bits().saturating_mul(k) <= LIMIT_BITS + 64 {
                let mut num = BigUint::one();
                let mut den = BigUint::one();
                for i in 0..k {
                    num *= n - i;
                    den *= i + 1;
                }
                return BigCount::normalize(num / den);
            }
        }
        self.pow(&BigCount::from(k))
    }

    /// Decimal digit count of an exact value.
    pub fn decimal_digits(&self) -> Option<usize> {
        self.exact().map(|v| v.to_str_radix(10).len())
    }

    /// Decimal text, or a digit count for exact values longer than
    /// `max_digits`; bounds print as `2^(...)`.
    pub fn describe(&self, max_digits: usize) -> String {
        match self {
            BigCount::Exact(v) => {
                let s = v.to_str_radix(10);
                if s.len() > max_digits {
                    format!("[{}-digit number]", s.len())
                } else {
                    s
                }
            }
            BigCount::Pow2(e) => format!("2^({})", e.describe(max_digits)),
        }
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigCount::Exact(v) => write!(f, "{v}"),
            BigCount::Pow2(e) => write!(f, "2^({e})"),
        }
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn binomial_exact(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num.div_floor(&den)
}

/// `C(2k-4, k-2) + 1`, the classical bound on the Erdős–Szekeres number.
pub fn erdos_szekeres_upper(k: u64) -> Result<BigCount> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("need k >= 3, got {k}")));
    }
    Ok(BigCount::from(binomial_exact(2 * k - 4, k - 2) + 1u32))
}

/// An upper bound on `R_e(l; c)`.
///
/// * `e = 1`: pigeonhole, `c(l-1) + 1`.
/// * `e = 2`: `R(s, t) <= C(s+t-2, s-1)` for two colours, nested as
///   `R(l; c) <= R(l, R(l; c-1))`.
/// * `e >= 3`: with `m = R_{e-1}(l-1; c) + 1`, a set of
///   `1 + sum_{j=0}^{m-2} c^C(j, e-1)` points contains an end-homogeneous
///   sequence of length `m`, whose first `m-1` points carry a colouring of
///   `(e-1)`-sets.
pub fn ramsey_upper(e: u64, l: u64, c: u64) -> Result<BigCount> {
    if e < 1 || l < e || c < 1 {
        return Err(Error::InvalidParameters(format!(
            "need e >= 1, l >= e, c >= 1; got e = {e}, l = {l}, c = {c}"
        )));
    }
    Ok(ramsey_rec(e, l, c))
}

fn ramsey_rec(e: u64, l: u64, c: u64) -> BigCount {
    if c == 1 {
        return BigCount::from(l);
    }
    match e {
        1 => BigCount::from(BigUint::from(c) * (l - 1) + 1u32),
        2 => {
            let mut r = BigCount::from(l);
            for _ in 1..c {
                r = two_color(l, &r);
            }
            r
        }
        _ => {
            let m = ramsey_rec(e - 1, l - 1, c).add(&BigCount::from(1));
            let cc = BigCount::from(c);
            if let Some(mv) = m.exact().and_then(ToPrimitive::to_u64).filter(|&v| v <= 10_000) {
                let mut sum = BigCount::from(1);
                let mut all_exact = true;
                for j in 0..mv.saturating_sub(1) {
                    let term = cc.pow(&BigCount::from(binomial_exact(j, e - 1)));
                    if !term.is_exact() {
                        all_exact = false;
                        break;
                    }
                    sum = sum.add(&term);
                }
                if all_exact && sum.is_exact() {
                    return sum;
                }
            }
            // terms with j >= e-1 at least double, so the sum is at most
            // (e-1) + 2 c^C(m-2, e-1) <= (e-1) + c^(C(m-2, e-1) + 1)
            let top = match m.exact() {
                Some(mv) if *mv >= BigUint::from(2u32) => BigCount::Exact(mv - 2u32),
                _ => m.clone(),
            };
            let exponent = top.binom(e - 1).add(&BigCount::from(1));
            cc.pow(&exponent).add(&BigCount::from(e))
        }
    }
}

/// `C(l + t - 2, l - 1)`, an upper bound on the two-colour `R(l, t)`.
fn two_color(l: u64, t: &BigCount) -> BigCount {
    let n = t.add(&BigCount::from(l - 2));
    n.binom(l - 1)
}

/// `C(t-1, 3) + C(t-1, 2) + (t-1)`: colour patterns of a tripleton's three
/// edges over `t-1` layers, counted as sets of one, two or three layers.
pub fn theorem_color_classes(t: u64) -> Result<BigCount> {
    if t < 2 {
        return Err(Error::InvalidParameters(format!("need t >= 2, got {t}")));
    }
    let s = t - 1;
    Ok(BigCount::from(binomial_exact(s, 3) + binomial_exact(s, 2) + BigUint::from(s)))
}

/// The bound on `n2` and the named sub-bounds it is built alongside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineBound {
    pub t: u64,
    pub n1: u64,
    pub color_classes: BigCount,
    /// `ramsey_upper(3, n1, c(t))`.
    pub n2: BigCount,
    /// `ramsey_upper(3, n1, 27)`: uniform layer pattern for low, middle and
    /// high edges.
    pub coherent: BigCount,
    /// `ramsey_upper(3, n1, 2)`: all tripletons inside or all outside.
    pub inner_outer: BigCount,
}

/// Upper bound on the `n2` for which any `(t-1)`-layer colouring of
/// `G_3(n2)` contains a three-coloured `G_3(n1)`.
pub fn separation_pipeline_bound(t: u64, n1: u64) -> Result<PipelineBound> {
    if n1 < 3 {
        return Err(Error::InvalidParameters(format!("need n1 >= 3, got {n1}")));
    }
    let color_classes = theorem_color_classes(t)?;
    let c = color_classes
        .exact()
        .and_then(ToPrimitive::to_u64)
        .ok_or_else(|| Error::TooLarge(format!("colour class count for t = {t}")))?;
    Ok(PipelineBound {
        t,
        n1,
        n2: ramsey_upper(3, n1, c.max(1))?,
        color_classes,
        coherent: ramsey_upper(3, n1, 27)?,
        inner_outer: ramsey_upper(3, n1, 2)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn n(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn erdos_szekeres_examples() {
        assert_eq!(erdos_szekeres_upper(3).unwrap(), n(3));
        assert_eq!(erdos_szekeres_upper(4).unwrap(), n(7));
        assert_eq!(erdos_szekeres_upper(5).unwrap(), n(21));
        assert!(erdos_szekeres_upper(2).is_err());
        // known exact values 5 and 9 as floors
        assert!(erdos_szekeres_upper(4).unwrap() >= n(5));
        assert!(erdos_szekeres_upper(5).unwrap() >= n(9));
    }

    #[test]
    fn ramsey_examples() {
        assert_eq!(ramsey_upper(1, 3, 2).unwrap(), n(5));
        assert_eq!(ramsey_upper(2, 3, 2).unwrap(), n(6));
        assert_eq!(ramsey_upper(2, 2, 7).unwrap(), n(2));
        assert!(ramsey_upper(3, 2, 2).is_err());
        assert!(ramsey_upper(0, 2, 2).is_err());
        assert!(ramsey_upper(2, 3, 0).is_err());
        // known R(3,3,3) = 17, R(4,4) = 18 as floors
        assert!(ramsey_upper(2, 3, 3).unwrap() >= n(17));
        assert!(ramsey_upper(2, 4, 2).unwrap() >= n(18));
    }

    #[test]
    fn diagonal_base_cases() {
        for e in 1..=5 {
            for c in 1..=6 {
                assert_eq!(ramsey_upper(e, e, c).unwrap(), n(e), "e={e} c={c}");
            }
        }
        for e in 1..=4 {
            for l in e..=8 {
                assert_eq!(ramsey_upper(e, l, 1).unwrap(), n(l));
            }
        }
    }

    #[test]
    fn two_color_binomial_bound() {
        for l in 2..=10u64 {
            let b = BigCount::from(binomial_exact(2 * l - 2, l - 1));
            assert!(ramsey_upper(2, l, 2).unwrap() <= b, "l={l}");
        }
    }

    #[test]
    fn small_three_uniform_value() {
        // m = R_2(3; 2) + 1 = 7, sum over j = 0..=5 of 2^C(j, 2)
        let expected: u64 = 1 + (0..=5u64).map(|j| 1u64 << (j * j.saturating_sub(1) / 2)).sum::<u64>();
        assert_eq!(ramsey_upper(3, 4, 2).unwrap(), n(expected));
    }

    #[test]
    fn monotone_grid() {
        for e in 1..=3u64 {
            for l in e..=7 {
                for c in 1..=5 {
                    let v = ramsey_upper(e, l, c).unwrap();
                    assert!(v >= n(l));
                    assert!(ramsey_upper(e, l + 1, c).unwrap() >= v, "l e={e} l={l} c={c}");
                    assert!(ramsey_upper(e, l, c + 1).unwrap() >= v, "c e={e} l={l} c={c}");
                }
            }
        }
    }

    #[test]
    fn color_class_examples() {
        assert_eq!(theorem_color_classes(2).unwrap(), n(1));
        assert_eq!(theorem_color_classes(3).unwrap(), n(3));
        assert_eq!(theorem_color_classes(4).unwrap(), n(7));
        assert_eq!(theorem_color_classes(5).unwrap(), n(14));
        assert!(theorem_color_classes(1).is_err());
    }

    #[test]
    fn pipeline_examples() {
        assert_eq!(separation_pipeline_bound(2, 3).unwrap().n2, n(3));
        let p33 = separation_pipeline_bound(3, 3).unwrap();
        assert_eq!(p33.n2, ramsey_upper(3, 3, 3).unwrap());
        let p44 = separation_pipeline_bound(4, 4).unwrap();
        assert!(p44.n2 >= n(4));
        assert!(p44.n2 >= separation_pipeline_bound(4, 3).unwrap().n2);
        assert!(separation_pipeline_bound(4, 2).is_err());
        let p = separation_pipeline_bound(4, 9).unwrap();
        assert!(!p.n2.is_exact());
        assert!(p.coherent >= p.n2);
        assert!(p.inner_outer <= p.n2);
    }

    #[test]
    fn bound_arithmetic_rounds_up() {
        let big = BigCount::pow2(n(LIMIT_BITS + 10));
        assert!(!big.is_exact());
        assert!(big.add(&n(1)) >= big);
        assert!(big.mul(&n(3)) >= big);
        assert_eq!(BigCount::pow2(n(10)), n(1024));
        assert_eq!(n(7).log2_ceil(), n(3));
        assert_eq!(n(8).log2_ceil(), n(3));
        assert_eq!(n(27).pow(&n(2)), n(729));
        assert_eq!(n(10).binom(3), n(120));
        assert_eq!(n(2).binom(3), n(0));
        let huge = n(2).pow(&n(LIMIT_BITS * 2));
        assert_eq!(huge, BigCount::Pow2(Box::new(n(LIMIT_BITS * 2))));
        assert_eq!(n(5).describe(3), "5");
        assert_eq!(n(123456).describe(3), "[6-digit number]");
    }

    proptest! {
        #[test]
        fn exact_ops_match_biguint(a in 0u64..1_000_000, b in 0u64..1_000_000) {
            prop_assert_eq!(n(a).add(&n(b)), BigCount::from(BigUint::from(a) + b));
            prop_assert_eq!(n(a).mul(&n(b)), BigCount::from(BigUint::from(a) * b));
        }

        #[test]
        fn powers_are_exact_or_dominating(a in 2u64..1000, e in 0u64..200_000) {
            let p = n(a).pow(&n(e));
            match &p {
                BigCount::Exact(v) => prop_assert_eq!(v.clone(), BigUint::from(a).pow(e as u32)),
                BigCount::Pow2(exp) => {
                    // 2^E >= a^e needs E >= e log2(a) > e (bits(a) - 1)
                    prop_assert!(**exp >= n(e * (BigUint::from(a).bits() - 1)));
                    prop_assert!(BigUint::from(a).bits() * e > LIMIT_BITS);
                }
            }
        }
    }
}
