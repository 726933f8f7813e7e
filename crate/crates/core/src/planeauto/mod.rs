//! Polynomial self-maps of the plane and the structured subgroups
//! `A` (symplectic affine), `B` (Jonquières) and `U = A ∩ B`.
//!
//! Group multiplication is *diagrammatic*: `g · h` applies `g` first, so
//! `(g · h)(p) = h(g(p))`. Classical composition `g ∘ h` is available as
//! [`compose_classical`].

mod coset;
mod structured;

use std::fmt;

use num_traits::One;

use crate::error::Result;
use crate::exactnum::{BiPoly, GaussianRational, DEFAULT_DEGREE_CAP};

pub use coset::{split_right, CosetRep, Side};
pub use structured::{recognize, AffineMap, JonquieresMap, Recognized, UElement};

/// The map `(x, y) ↦ (P(x, y), Q(x, y))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    p: BiPoly,
    q: BiPoly,
}

impl PolyMap {
    pub fn new(p: BiPoly, q: BiPoly) -> Self {
        PolyMap { p, q }
    }

    pub fn identity() -> Self {
        PolyMap {
            p: BiPoly::x(),
            q: BiPoly::y(),
        }
    }

    pub fn p(&self) -> &BiPoly {
        &self.p
    }

    pub fn q(&self) -> &BiPoly {
        &self.q
    }

    pub fn is_identity(&self) -> bool {
        self.p == BiPoly::x() && self.q == BiPoly::y()
    }

    /// Max of the two component total degrees (0 for constant maps).
    pub fn degree(&self) -> u32 {
        self.p.total_degree().max(self.q.total_degree()).or_zero()
    }

    pub fn jacobian(&self) -> BiPoly {
        &(&self.p.partial_x() * &self.q.partial_y()) - &(&self.p.partial_y() * &self.q.partial_x())
    }

    pub fn is_unimodular(&self) -> bool {
        let j = self.jacobian();
        j.is_constant() && j.coeff(0, 0).is_one()
    }

    pub fn evaluate(
        &self,
        pt: &(GaussianRational, GaussianRational),
    ) -> (GaussianRational, GaussianRational) {
        (self.p.eval(&pt.0, &pt.1), self.q.eval(&pt.0, &pt.1))
    }

    /// Diagrammatic product `self · h`: apply `self`, then `h`.
    pub fn then(&self, h: &PolyMap, cap: u32) -> Result<PolyMap> {
        let mut out = crate::exactnum::bipoly_subst_many(&[&h.p, &h.q], &self.p, &self.q, cap)?;
        let q = out.pop().unwrap();
        let p = out.pop().unwrap();
        Ok(PolyMap { p, q })
    }
}

/// Group product `g · h` under the diagrammatic convention, using the
/// default degree cap.
pub fn compose(g: &PolyMap, h: &PolyMap) -> Result<PolyMap> {
    g.then(h, DEFAULT_DEGREE_CAP)
}

/// Classical composition `g ∘ h` (apply `h` first); equals `compose(h, g)`.
pub fn compose_classical(g: &PolyMap, h: &PolyMap) -> Result<PolyMap> {
    h.then(g, DEFAULT_DEGREE_CAP)
}

pub fn jacobian(g: &PolyMap) -> BiPoly {
    g.jacobian()
}

pub fn evaluate(
    g: &PolyMap,
    pt: &(GaussianRational, GaussianRational),
) -> (GaussianRational, GaussianRational) {
    g.evaluate(pt)
}

/// Tuple syntax, e.g. `(y^3 + 2*x, (1/2)*y)`.
impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

impl fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::UniPoly;

    fn c(n: i64) -> GaussianRational {
        GaussianRational::int(n)
    }

    fn x() -> BiPoly {
        BiPoly::x()
    }

    fn y() -> BiPoly {
        BiPoly::y()
    }

    fn map(p: BiPoly, q: BiPoly) -> PolyMap {
        PolyMap::new(p, q)
    }

    #[test]
    fn product_with_identity() {
        let g = map(&x() + &y().pow(2), y());
        assert_eq!(compose(&g, &PolyMap::identity()).unwrap(), g);
        assert_eq!(compose(&PolyMap::identity(), &g).unwrap(), g);
    }

    #[test]
    fn diagonal_conjugation_of_triangular_map() {
        // (ν⁻¹x, νy)·(x + y², y)·(νx, ν⁻¹y) with ν = i gives (x - i y², y)
        let nu = GaussianRational::i();
        let nu_inv = nu.inv().unwrap();
        let d1 = map(x().scale(&nu_inv), y().scale(&nu));
        let g = map(&x() + &y().pow(2), y());
        let d2 = map(x().scale(&nu), y().scale(&nu_inv));
        let r = compose(&compose(&d1, &g).unwrap(), &d2).unwrap();
        assert_eq!(r, map(&x() - &y().pow(2).scale(&nu), y()));
    }

    #[test]
    fn translation_then_triangular() {
        // apply (x, y+1) first, then (x + y³, y): (x + (y+1)³, y + 1)
        let t = map(x(), &y() + &BiPoly::one());
        let j = map(&x() + &y().pow(3), y());
        let r = compose(&t, &j).unwrap();
        let shifted = BiPoly::from_uni_y(&UniPoly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(r, map(&x() + &shifted, &y() + &BiPoly::one()));
        assert_eq!(compose_classical(&j, &t).unwrap(), r);
    }

    #[test]
    fn jacobian_examples() {
        let p = BiPoly::from_uni_y(&UniPoly::from_ints(&[4, 0, -1, 7]));
        assert_eq!(map(&x() + &p, y()).jacobian(), BiPoly::one());
        assert_eq!(map(y(), x()).jacobian(), BiPoly::constant(c(-1)));
        let lam: GaussianRational = "2/3-5*i".parse().unwrap();
        assert_eq!(map(&x().scale(&lam) + &y(), -x()).jacobian(), BiPoly::one());
    }

    #[test]
    fn evaluate_examples() {
        let id = PolyMap::identity();
        assert_eq!(id.evaluate(&(c(3), c(5))), (c(3), c(5)));
        let g = map(&x() + &y().pow(2), y());
        assert_eq!(g.evaluate(&(c(0), c(2))), (c(4), c(2)));
        let h = map(y(), &-x() + &y().pow(2));
        assert_eq!(
            h.evaluate(&(c(1), GaussianRational::i())),
            (GaussianRational::i(), c(-2))
        );
    }

    #[test]
    fn display() {
        let g = map(
            &x().scale(&c(2)) + &y().pow(3),
            y().scale(&GaussianRational::ratio(1, 2)),
        );
        assert_eq!(g.to_string(), "(y^3 + 2*x, (1/2)*y)");
    }
}
