use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{monomial, write_sum, Degree, GaussianRational};

/// Dense univariate polynomial in `y`; `coeffs[k]` multiplies `y^k`.
///
/// Trailing zeros are never stored, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| GaussianRational::int(c)).collect())
    }

    pub fn constant(c: GaussianRational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// `c * y^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut v = vec![GaussianRational::zero(); k];
        v.push(c);
        UniPoly::from_coeffs(v)
    }

    /// The polynomial `y`.
    pub fn var() -> Self {
        UniPoly::monomial(GaussianRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n as u32 - 1),
        }
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, y: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * y + c;
        }
        acc
    }

    /// `p(s(y))`, expanded by Horner's rule.
    pub fn compose(&self, s: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * s) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// `p(a*y + b)`.
    pub fn compose_affine(&self, a: &GaussianRational, b: &GaussianRational) -> UniPoly {
        self.compose(&UniPoly::from_coeffs(vec![b.clone(), a.clone()]))
    }

    /// Forward difference `p(y+1) - p(y)`.
    pub fn forward_difference(&self) -> UniPoly {
        let shifted = self.compose_affine(&GaussianRational::one(), &GaussianRational::one());
        &shifted - self
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::constant(GaussianRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Drops the coefficients of `y^0 .. y^(k-1)`.
    pub fn truncate_below(&self, k: usize) -> UniPoly {
        let mut v = self.coeffs.clone();
        for c in v.iter_mut().take(k) {
            *c = GaussianRational::zero();
        }
        UniPoly::from_coeffs(v)
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c, monomial('y', k as u32)));
        write_sum(f, terms)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y() -> UniPoly {
        UniPoly::var()
    }

    #[test]
    fn compose_examples() {
        let sq = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(
            sq.compose(&UniPoly::from_ints(&[1, 1])),
            UniPoly::from_ints(&[1, 2, 1])
        );
        let cube = UniPoly::from_ints(&[0, 0, 0, 1]);
        assert_eq!(
            cube.compose(&UniPoly::from_ints(&[0, 2])),
            UniPoly::from_ints(&[0, 0, 0, 8])
        );
    }

    #[test]
    fn compose_by_repeated_multiplication() {
        // oracle: (y-1)^3 + (y-1) expanded by explicit products
        let s = UniPoly::from_ints(&[-1, 1]);
        let expected = &(&(&s * &s) * &s) + &s;
        assert_eq!(expected, UniPoly::from_ints(&[-2, 4, -3, 1]));
        let p = UniPoly::from_ints(&[0, 1, 0, 1]);
        assert_eq!(p.compose(&s), expected);
    }

    #[test]
    fn degree_of_product_and_composition() {
        let p = UniPoly::from_ints(&[3, 0, 2]);
        let q = UniPoly::from_ints(&[1, 1, 1, 5]);
        assert_eq!((&p * &q).degree(), Degree::Finite(5));
        assert_eq!(p.compose(&q).degree(), Degree::Finite(6));
        assert_eq!(UniPoly::zero().degree(), Degree::NegInfinity);
        assert_eq!((&p * &UniPoly::zero()).degree(), Degree::NegInfinity);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = UniPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn forward_difference_lowers_degree() {
        let p = y().pow(3);
        assert_eq!(p.forward_difference(), UniPoly::from_ints(&[1, 3, 3]));
        assert!(UniPoly::constant(GaussianRational::int(7))
            .forward_difference()
            .is_zero());
    }

    #[test]
    fn display() {
        let p = UniPoly::from_coeffs(vec![
            GaussianRational::int(-3),
            GaussianRational::ratio(1, 2),
            GaussianRational::int(1),
        ]);
        assert_eq!(p.to_string(), "y^2 + (1/2)*y - 3");
        assert_eq!(UniPoly::zero().to_string(), "0");
        let q = UniPoly::from_coeffs(vec![
            GaussianRational::zero(),
            "-i".parse().unwrap(),
            "1+i".parse().unwrap(),
        ]);
        assert_eq!(q.to_string(), "(1+i)*y^2 - i*y");
    }
}
