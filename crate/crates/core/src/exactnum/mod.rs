//! Exact arithmetic over Q(i): scalars, univariate and sparse bivariate
//! polynomials.

mod bipoly;
mod scalar;
mod unipoly;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use thiserror::Error;

pub(crate) use bipoly::subst_many as bipoly_subst_many;
pub use bipoly::BiPoly;
pub(crate) use bipoly::ZPoly;
pub use scalar::{scalar_arith, GaussianRational, ScalarOp};
pub use unipoly::UniPoly;

/// Default bound on the total degree of any polynomial produced by
/// substitution.
pub const DEFAULT_DEGREE_CAP: u32 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("total degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: u64, cap: u32 },
    #[error("malformed scalar literal {0:?}")]
    BadLiteral(String),
}

/// Polynomial degree; the zero polynomial has degree `NegInfinity`, which
/// is absorbing under addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }

    /// Degree as an integer with the zero polynomial mapped to `0`.
    pub fn or_zero(self) -> u32 {
        self.finite().unwrap_or(0)
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Writes `c1*m1 + c2*m2 - ...`; `terms` yields coefficients with an already
/// rendered monomial (empty for the constant term).
pub(crate) fn write_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a GaussianRational, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.leading_negative();
        let mag = if neg { -c } else { c.clone() };
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if mono.is_empty() {
            if mag.is_atomic() || mag.is_real() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "({mag})")?;
            }
        } else if num_traits::One::is_one(&mag) {
            f.write_str(&mono)?;
        } else if mag.is_atomic() {
            write!(f, "{mag}*{mono}")?;
        } else {
            write!(f, "({mag})*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn monomial(var: char, exp: u32) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}
