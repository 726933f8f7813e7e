use std::fmt;

use num_traits::Zero;

use super::structured::{recognize, AffineMap, JonquieresMap, Recognized, UElement};
use super::PolyMap;
use crate::error::{Error, Result};
use crate::exactnum::{BiPoly, Degree, GaussianRational, UniPoly, DEFAULT_DEGREE_CAP};

/// A coset representative letter.
///
/// `I(λ)` is `(λx + y, -x)` and stands for `A \ U`; `J(p)` is
/// `(x + p(y), y)` with `p ∈ y²C[y] \ {0}` and stands for `B \ U`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CosetRep {
    I(GaussianRational),
    J(UniPoly),
}

/// Which factor of the amalgam a letter belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    A,
    B,
}

impl CosetRep {
    /// Checked `J` constructor: `p` must be nonzero with no constant or
    /// linear term.
    pub fn j(p: UniPoly) -> Result<Self> {
        if p.is_zero() || !p.coeff(0).is_zero() || !p.coeff(1).is_zero() {
            return Err(Error::InvalidWord(format!(
                "J letter needs p in y^2·C[y] \\ {{0}}, got {p}"
            )));
        }
        Ok(CosetRep::J(p))
    }

    pub fn side(&self) -> Side {
        match self {
            CosetRep::I(_) => Side::A,
            CosetRep::J(_) => Side::B,
        }
    }

    pub fn to_map(&self) -> PolyMap {
        match self {
            CosetRep::I(lambda) => {
                PolyMap::new(&BiPoly::x().scale(lambda) + &BiPoly::y(), -BiPoly::x())
            }
            CosetRep::J(p) => PolyMap::new(&BiPoly::x() + &BiPoly::from_uni_y(p), BiPoly::y()),
        }
    }

    pub fn as_affine(&self) -> Option<AffineMap> {
        match self {
            CosetRep::I(lambda) => Some(
                AffineMap::new(
                    lambda.clone(),
                    1.into(),
                    (-1).into(),
                    0.into(),
                    0.into(),
                    0.into(),
                )
                .expect("det = 1"),
            ),
            CosetRep::J(_) => None,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            CosetRep::I(_) => 1,
            CosetRep::J(p) => p.degree().or_zero(),
        }
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetRep::I(lambda) => write!(f, "I({lambda})"),
            CosetRep::J(p) => write!(f, "J({p})"),
        }
    }
}

/// Splits `g ∈ (A ∪ B) \ U` as `g = u · r` (apply `u` first) with `u ∈ U` and
/// `r` a coset representative. The pair is unique; the result is checked by
/// recomposition.
pub fn split_right(g: &PolyMap) -> Result<(UElement, CosetRep)> {
    let (u, r) = match recognize(g)? {
        Recognized::InU(_) => return Err(Error::InU),
        Recognized::NotInAUnionB => return Err(Error::NotInFactor),
        Recognized::InAOnly(m) => split_affine(&m)?,
        Recognized::InBOnly(m) => split_jonquieres(&m)?,
    };
    let cap = DEFAULT_DEGREE_CAP.max(g.degree());
    let back = u.to_map().then(&r.to_map(), cap)?;
    assert_eq!(&back, g, "coset split does not recompose");
    Ok((u, r))
}

fn split_affine(m: &AffineMap) -> Result<(UElement, CosetRep)> {
    // u = (αx + βy + ε, α⁻¹y + φ) followed by (λx + y, -x) gives
    // (λαx + (λβ + α⁻¹)y + λε + φ, -αx - βy - ε)
    let alpha = -&m.c;
    let lambda = m.a.checked_div(&alpha)?;
    let beta = -&m.d;
    let eps = -&m.f;
    let phi = &m.e - &(&lambda * &eps);
    let u = UElement::new(alpha, beta, eps, phi)?;
    Ok((u, CosetRep::I(lambda)))
}

fn split_jonquieres(m: &JonquieresMap) -> Result<(UElement, CosetRep)> {
    // u = (a x + βy + ε, a⁻¹y + f) followed by (x + p(y), y) needs
    // q(y) = βy + ε + p(a⁻¹y + f); write s(z) = q(a(z - f)).
    let af = &m.a * &m.f;
    let s = m.q.compose_affine(&m.a, &-&af);
    let (s0, s1) = (s.coeff(0), s.coeff(1));
    let p = s.truncate_below(2);
    debug_assert!(p.degree() >= Degree::Finite(2));
    let beta = s1.checked_div(&m.a)?;
    let eps = &s0 + &(&s1 * &m.f);
    let u = UElement::new(m.a.clone(), beta, eps, m.f.clone())?;
    Ok((u, CosetRep::j(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planeauto::compose;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn split_rotation() {
        let rot = AffineMap::linear(0, 1, -1, 0).unwrap().to_map();
        let (u, r) = split_right(&rot).unwrap();
        assert!(u.is_identity());
        assert_eq!(r, CosetRep::I(GaussianRational::zero()));
    }

    #[test]
    fn split_strips_low_part() {
        let m = JonquieresMap::shear(UniPoly::from_ints(&[1, 3, 1])).to_map();
        let (u, r) = split_right(&m).unwrap();
        assert_eq!(u, UElement::new(g("1"), g("3"), g("1"), g("0")).unwrap());
        assert_eq!(r, CosetRep::J(UniPoly::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn split_scaled_triangular() {
        // (2x + y³, y/2) = (2x, y/2) · (x + 8y³, y)
        let m = JonquieresMap::new(g("2"), UniPoly::from_ints(&[0, 0, 0, 1]), g("0")).unwrap();
        let (u, r) = split_right(&m.to_map()).unwrap();
        assert_eq!(u, UElement::new(g("2"), g("0"), g("0"), g("0")).unwrap());
        assert_eq!(r, CosetRep::J(UniPoly::from_ints(&[0, 0, 0, 8])));
        assert_eq!(compose(&u.to_map(), &r.to_map()).unwrap(), m.to_map());
    }

    #[test]
    fn split_errors() {
        let u = UElement::new(g("2"), g("1"), g("0"), g("3")).unwrap();
        assert_eq!(split_right(&u.to_map()), Err(Error::InU));
        let h = PolyMap::new(BiPoly::y(), &-BiPoly::x() + &BiPoly::y().pow(2));
        assert_eq!(split_right(&h), Err(Error::NotInFactor));
    }

    #[test]
    fn j_letter_validation() {
        assert!(CosetRep::j(UniPoly::from_ints(&[0, 1, 1])).is_err());
        assert!(CosetRep::j(UniPoly::zero()).is_err());
        assert!(CosetRep::j(UniPoly::from_ints(&[0, 0, 0, 2])).is_ok());
    }
}
