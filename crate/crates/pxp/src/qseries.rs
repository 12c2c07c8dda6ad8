//! Exact polynomials, truncated power series and Hilbert-series style
//! rational functions `N(t) / prod (1 - t^a)`.
//!
//! Everything is generic over an exact [`Field`]; the crate root fixes the
//! default to [`BigRational`](num_rational::BigRational).

use std::fmt;
use std::ops::Neg;

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};
use thiserror::Error;

/// Coefficient ring for this module. Division must be exact, so in practice
/// this means a rational type.
pub trait Field: Clone + Num + Neg<Output = Self> + FromPrimitive + fmt::Debug {}

impl<T> Field for T where T: Clone + Num + Neg<Output = T> + FromPrimitive + fmt::Debug {}

/// Coefficients checked past the claimed numerator degree.
pub const STABILIZATION_MARGIN: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("numerator does not stabilize: coefficient of t^{index} is {value} (bound {bound})")]
    NonStabilized {
        index: usize,
        value: String,
        bound: usize,
    },
    #[error("series of order {order} too short to check bound {bound} with margin {margin}")]
    SeriesTooShort {
        order: usize,
        bound: usize,
        margin: usize,
    },
    #[error("pole at t=1 is not of order 4 ({detail})")]
    WrongPoleOrder { detail: String },
}

fn from_i64<T: Field>(n: i64) -> T {
    T::from_i64(n).expect("integer fits the coefficient field")
}

/// Dense polynomial in `t`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T = BigRational> {
    coeffs: Vec<T>,
}

impl<T: Field> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval_one(&self) -> T {
        self.coeffs.iter().cloned().fold(T::zero(), |a, c| a + c)
    }

    pub fn mul(&self, other: &Poly<T>) -> Poly<T> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    /// Multiply by `1 - t^a`.
    pub fn mul_one_minus(&self, a: usize) -> Poly<T> {
        let mut out = vec![T::zero(); self.coeffs.len() + a];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].clone() + c.clone();
            out[i + a] = out[i + a].clone() - c.clone();
        }
        Poly::new(out)
    }

    /// Exact division by `1 - t`; `None` if there is a remainder.
    pub fn div_one_minus_t(&self) -> Option<Poly<T>> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        // p = (1 - t) q  =>  q_k = p_0 + ... + p_k, and the full sum must vanish
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = T::zero();
        for c in &self.coeffs {
            acc = acc + c.clone();
            q.push(acc.clone());
        }
        let last = q.pop().unwrap();
        if !last.is_zero() {
            return None;
        }
        Some(Poly::new(q))
    }
}

impl<T: Field + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// First `order + 1` coefficients of a power series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries<T = BigRational> {
    coeffs: Vec<T>,
}

impl<T: Field> TruncSeries<T> {
    /// Panics on an empty list: a truncated series always has order >= 0.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> TruncSeries<T> {
        let n = (order + 1).min(self.coeffs.len());
        TruncSeries::new(self.coeffs[..n].to_vec())
    }

    /// Multiply by `1 / (1 - t^a)` in place: a strided prefix sum.
    fn div_one_minus(&mut self, a: usize) {
        for k in a..self.coeffs.len() {
            let prev = self.coeffs[k - a].clone();
            self.coeffs[k] = self.coeffs[k].clone() + prev;
        }
    }

    /// Multiply by `1 - t^a` in place.
    fn mul_one_minus(&mut self, a: usize) {
        for k in (a..self.coeffs.len()).rev() {
            let prev = self.coeffs[k - a].clone();
            self.coeffs[k] = self.coeffs[k].clone() - prev;
        }
    }
}

/// `numerator / prod_{a in denom} (1 - t^a)`. The denominator is kept as a
/// factor multiset and never multiplied out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalForm<T = BigRational> {
    pub numerator: Poly<T>,
    pub denom: Vec<u32>,
}

impl<T: Field> RationalForm<T> {
    pub fn new(numerator: Poly<T>, mut denom: Vec<u32>) -> Self {
        denom.sort_unstable();
        RationalForm { numerator, denom }
    }
}

/// Power series expansion of `f` up to and including `t^order`.
pub fn expand<T: Field>(f: &RationalForm<T>, order: usize) -> TruncSeries<T> {
    let mut s = TruncSeries::new((0..=order).map(|k| f.numerator.coeff(k)).collect());
    for &a in &f.denom {
        assert!(a >= 1, "denominator factors are 1 - t^a with a >= 1");
        s.div_one_minus(a as usize);
    }
    s
}

/// Multiply a series back by its denominator and read off the numerator,
/// insisting the next [`STABILIZATION_MARGIN`] coefficients vanish.
pub fn recover_numerator<T: Field + fmt::Display>(
    s: &TruncSeries<T>,
    denom: &[u32],
    degree_bound: usize,
) -> Result<Poly<T>, SeriesError> {
    let need = degree_bound + STABILIZATION_MARGIN;
    if s.order() < need {
        return Err(SeriesError::SeriesTooShort {
            order: s.order(),
            bound: degree_bound,
            margin: STABILIZATION_MARGIN,
        });
    }
    let mut w = s.truncate(need);
    for &a in denom {
        w.mul_one_minus(a as usize);
    }
    for k in degree_bound + 1..=need {
        if !w.coeffs[k].is_zero() {
            return Err(SeriesError::NonStabilized {
                index: k,
                value: w.coeffs[k].to_string(),
                bound: degree_bound,
            });
        }
    }
    Ok(Poly::new(w.coeffs[..=degree_bound].to_vec()))
}

/// `lim_{t -> 1} (1 - t)^4 f(t)` for a series with a pole of order exactly 4.
pub fn degree_d3<T: Field>(f: &RationalForm<T>) -> Result<T, SeriesError> {
    let e = f.denom.len();
    if e < 4 {
        return Err(SeriesError::WrongPoleOrder {
            detail: format!("only {e} denominator factors"),
        });
    }
    let mut q = f.numerator.clone();
    for i in 0..e - 4 {
        q = q.div_one_minus_t().ok_or_else(|| SeriesError::WrongPoleOrder {
            detail: format!("numerator divisible by (1-t)^{i} but not (1-t)^{}", i + 1),
        })?;
    }
    let top = q.eval_one();
    if top.is_zero() {
        return Err(SeriesError::WrongPoleOrder {
            detail: "pole order below 4".into(),
        });
    }
    // (1 - t^a) / (1 - t) = 1 + ... + t^(a-1) takes the value a at t = 1
    let prod = f
        .denom
        .iter()
        .fold(T::one(), |acc, &a| acc * from_i64::<T>(a as i64));
    Ok(top / prod)
}

/// `t^socle p(1/t) == p(t)`.
pub fn palindrome_check<T: Field>(p: &Poly<T>, socle: usize) -> bool {
    match p.degree() {
        None => true,
        Some(d) if d > socle => false,
        Some(_) => (0..=socle).all(|k| p.coeff(k) == p.coeff(socle - k)),
    }
}

/// Coefficient of `h^2` in `prod (1 - n_i h) / prod (1 - m_j h)`.
pub fn h2_coefficient<T: Field>(numer_roots: &[T], denom_roots: &[T]) -> T {
    // work with [c0, c1, c2]
    let mul = |s: [T; 3], x: &T, invert: bool| -> [T; 3] {
        if invert {
            // times 1 + x h + x^2 h^2
            let x2 = x.clone() * x.clone();
            [
                s[0].clone(),
                s[1].clone() + s[0].clone() * x.clone(),
                s[2].clone() + s[1].clone() * x.clone() + s[0].clone() * x2,
            ]
        } else {
            // times 1 - x h
            [
                s[0].clone(),
                s[1].clone() - s[0].clone() * x.clone(),
                s[2].clone() - s[1].clone() * x.clone(),
            ]
        }
    };
    let mut s = [T::one(), T::zero(), T::zero()];
    for n in numer_roots {
        s = mul(s, n, false);
    }
    for m in denom_roots {
        s = mul(s, m, true);
    }
    let [_, _, c2] = s;
    c2
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = BigRational;

    fn ints(s: &TruncSeries<Q>) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                c.to_integer().try_into().unwrap()
            })
            .collect()
    }

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn expand_binomial() {
        let f = RationalForm::new(Poly::<Q>::one(), vec![1, 1, 1, 1]);
        assert_eq!(ints(&expand(&f, 3)), vec![1, 4, 10, 20]);
    }

    #[test]
    fn expand_one_plus_t_over_one_minus_t() {
        let f = RationalForm::new(Poly::<Q>::from_ints(&[1, 0, -1]), vec![1, 1]);
        assert_eq!(ints(&expand(&f, 4)), vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn recover_trivial() {
        let f = RationalForm::new(Poly::<Q>::one(), vec![1, 1, 1, 1]);
        let p = recover_numerator(&expand(&f, 20), &f.denom, 0).unwrap();
        assert_eq!(p, Poly::one());
    }

    #[test]
    fn recover_too_short_and_unstable() {
        let f = RationalForm::new(Poly::<Q>::from_ints(&[1, 0, 0, 5]), vec![2]);
        let s = expand(&f, 8);
        assert!(matches!(
            recover_numerator(&s, &f.denom, 0),
            Err(SeriesError::SeriesTooShort { .. })
        ));
        let s = expand(&f, 30);
        assert!(matches!(
            recover_numerator(&s, &f.denom, 2),
            Err(SeriesError::NonStabilized { index: 3, .. })
        ));
        assert_eq!(recover_numerator(&s, &f.denom, 3).unwrap(), f.numerator);
    }

    #[test]
    fn d3_of_p3_and_complete_intersection() {
        let f = RationalForm::new(Poly::<Q>::one(), vec![1, 1, 1, 1]);
        assert_eq!(degree_d3(&f).unwrap(), q(1));
        // quintic threefold
        let f = RationalForm::new(Poly::<Q>::one().mul_one_minus(5), vec![1; 5]);
        assert_eq!(degree_d3(&f).unwrap(), q(5));
        // not a threefold
        let f = RationalForm::new(Poly::<Q>::one(), vec![1, 1, 1, 1, 1]);
        assert!(matches!(degree_d3(&f), Err(SeriesError::WrongPoleOrder { .. })));
        let f = RationalForm::new(Poly::<Q>::one().mul_one_minus(1), vec![1; 4]);
        assert!(matches!(degree_d3(&f), Err(SeriesError::WrongPoleOrder { .. })));
    }

    #[test]
    fn palindromes() {
        assert!(palindrome_check(&Poly::<Q>::from_ints(&[1, 0, -9, 16, -9, 0, 1]), 6));
        assert!(!palindrome_check(&Poly::<Q>::from_ints(&[1, 0, 0, 1]), 2));
        assert!(!palindrome_check(&Poly::<Q>::from_ints(&[1, 2, 1]), 3));
    }

    #[test]
    fn h2_examples() {
        let n: Vec<Q> = [1, 1, 2, 2, 6].map(q).to_vec();
        let d: Vec<Q> = [3, 4, 4, 4].map(q).to_vec();
        assert_eq!(h2_coefficient(&n, &d), q(10));
        let n: Vec<Q> = [1, 1, 2, 2, 5].map(q).to_vec();
        let d: Vec<Q> = [3, 3, 4, 4].map(q).to_vec();
        assert_eq!(h2_coefficient(&n, &d), q(12));
        assert_eq!(h2_coefficient::<Q>(&[], &[]), q(0));
    }

    #[test]
    fn h2_matches_symmetric_function_formula() {
        // e2(m) + e1(m) e1(-n) + e2(-n), with half-integers
        let n: Vec<Q> = vec![Ratio::new(1.into(), 2.into()), q(3), q(-1)];
        let m: Vec<Q> = vec![q(2), Ratio::new(7.into(), 2.into())];
        let e1 = |v: &[Q]| v.iter().cloned().fold(q(0), |a, b| a + b);
        let e2 = |v: &[Q]| {
            let mut s = q(0);
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    s += v[i].clone() * v[j].clone();
                }
            }
            s
        };
        // complete homogeneous h2(m) = e1^2 - e2
        let h2m = e1(&m) * e1(&m) - e2(&m);
        let want = h2m - e1(&m) * e1(&n) + e2(&n);
        assert_eq!(h2_coefficient(&n, &m), want);
    }

    #[test]
    fn generic_over_small_rationals() {
        let f = RationalForm::new(Poly::<Ratio<i64>>::one(), vec![1, 2]);
        let s = expand(&f, 4);
        let want: Vec<Ratio<i64>> = [1, 1, 2, 2, 3].iter().map(|&x| Ratio::from_integer(x)).collect();
        assert_eq!(s.coeffs(), &want[..]);
    }

    #[test]
    fn display() {
        let p = Poly::<Q>::from_ints(&[1, 0, -9, 16, -9, 0, 1]);
        assert_eq!(p.to_string(), "1 - 9t^2 + 16t^3 - 9t^4 + t^6");
    }
}
