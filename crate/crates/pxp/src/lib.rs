//! Calabi-Yau 3-folds in weighted P2xP2 format.
//!
//! [`qseries`] is the exact series kernel, [`format`] builds candidates,
//! [`search`] enumerates them, [`stratum`] handles orbifold points and
//! [`unproj`] does the Tom/Jerry bookkeeping.

pub mod format;
pub mod qseries;
pub mod search;
pub mod stratum;
pub mod unproj;

/// Default exact scalar.
pub type Rational = num_rational::BigRational;
pub type Poly = qseries::Poly<Rational>;
pub type TruncSeries = qseries::TruncSeries<Rational>;
pub type RationalForm = qseries::RationalForm<Rational>;

/// `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
