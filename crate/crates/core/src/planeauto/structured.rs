use std::fmt;

use num_traits::{One, Zero};

use super::PolyMap;
use crate::error::{Error, Result};
use crate::exactnum::{BiPoly, Degree, GaussianRational, UniPoly};

/// `(a x + b y + e, c x + d y + f)` with `ad - bc = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineMap {
    pub a: GaussianRational,
    pub b: GaussianRational,
    pub c: GaussianRational,
    pub d: GaussianRational,
    pub e: GaussianRational,
    pub f: GaussianRational,
}

impl AffineMap {
    pub fn new(
        a: GaussianRational,
        b: GaussianRational,
        c: GaussianRational,
        d: GaussianRational,
        e: GaussianRational,
        f: GaussianRational,
    ) -> Result<Self> {
        let det = &(&a * &d) - &(&b * &c);
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(AffineMap { a, b, c, d, e, f })
    }

    pub fn linear(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        AffineMap::new(a.into(), b.into(), c.into(), d.into(), 0.into(), 0.into())
    }

    pub fn translation(e: GaussianRational, f: GaussianRational) -> Self {
        AffineMap {
            a: GaussianRational::one(),
            b: GaussianRational::zero(),
            c: GaussianRational::zero(),
            d: GaussianRational::one(),
            e,
            f,
        }
    }

    pub fn to_map(&self) -> PolyMap {
        let x = BiPoly::x();
        let y = BiPoly::y();
        let p = &(&x.scale(&self.a) + &y.scale(&self.b)) + &BiPoly::constant(self.e.clone());
        let q = &(&x.scale(&self.c) + &y.scale(&self.d)) + &BiPoly::constant(self.f.clone());
        PolyMap::new(p, q)
    }

    pub fn inverse(&self) -> AffineMap {
        // x = d(X - e) - b(Y - f), y = -c(X - e) + a(Y - f)
        let e = &(&self.b * &self.f) - &(&self.d * &self.e);
        let f = &(&self.c * &self.e) - &(&self.a * &self.f);
        AffineMap {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
            e,
            f,
        }
    }

    pub fn is_linear(&self) -> bool {
        self.e.is_zero() && self.f.is_zero()
    }

    pub fn in_u(&self) -> bool {
        self.c.is_zero()
    }
}

/// `(a x + q(y), a⁻¹ y + f)` with `a ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JonquieresMap {
    pub a: GaussianRational,
    pub q: UniPoly,
    pub f: GaussianRational,
}

impl JonquieresMap {
    pub fn new(a: GaussianRational, q: UniPoly, f: GaussianRational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::NotUnimodular("0".into()));
        }
        Ok(JonquieresMap { a, q, f })
    }

    /// `(x + q(y), y)`.
    pub fn shear(q: UniPoly) -> Self {
        JonquieresMap {
            a: GaussianRational::one(),
            q,
            f: GaussianRational::zero(),
        }
    }

    pub fn to_map(&self) -> PolyMap {
        let a_inv = self.a.inv().expect("a is nonzero");
        let p = &BiPoly::x().scale(&self.a) + &BiPoly::from_uni_y(&self.q);
        let q = &BiPoly::y().scale(&a_inv) + &BiPoly::constant(self.f.clone());
        PolyMap::new(p, q)
    }

    pub fn inverse(&self) -> JonquieresMap {
        // (a⁻¹x - a⁻¹ q(a y - a f), a y - a f)
        let a_inv = self.a.inv().expect("a is nonzero");
        let af = &self.a * &self.f;
        let q = self.q.compose_affine(&self.a, &-&af).scale(&-&a_inv);
        JonquieresMap {
            a: a_inv,
            q,
            f: -af,
        }
    }

    pub fn in_u(&self) -> bool {
        self.q.degree() <= Degree::Finite(1)
    }
}

/// `(a x + b y + e, a⁻¹ y + f)`, an element of both `A` and `B`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UElement {
    pub a: GaussianRational,
    pub b: GaussianRational,
    pub e: GaussianRational,
    pub f: GaussianRational,
}

impl UElement {
    pub fn new(
        a: GaussianRational,
        b: GaussianRational,
        e: GaussianRational,
        f: GaussianRational,
    ) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::NotUnimodular("0".into()));
        }
        Ok(UElement { a, b, e, f })
    }

    pub fn identity() -> Self {
        UElement {
            a: GaussianRational::one(),
            b: GaussianRational::zero(),
            e: GaussianRational::zero(),
            f: GaussianRational::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.e.is_zero() && self.f.is_zero()
    }

    pub fn as_affine(&self) -> AffineMap {
        AffineMap {
            a: self.a.clone(),
            b: self.b.clone(),
            c: GaussianRational::zero(),
            d: self.a.inv().expect("a is nonzero"),
            e: self.e.clone(),
            f: self.f.clone(),
        }
    }

    pub fn as_jonquieres(&self) -> JonquieresMap {
        JonquieresMap {
            a: self.a.clone(),
            q: UniPoly::from_coeffs(vec![self.e.clone(), self.b.clone()]),
            f: self.f.clone(),
        }
    }

    pub fn to_map(&self) -> PolyMap {
        self.as_affine().to_map()
    }

    pub fn inverse(&self) -> UElement {
        let inv = self.as_affine().inverse();
        UElement {
            a: inv.a,
            b: inv.b,
            e: inv.e,
            f: inv.f,
        }
    }
}

/// Outcome of [`recognize`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Recognized {
    InU(UElement),
    InAOnly(AffineMap),
    InBOnly(JonquieresMap),
    NotInAUnionB,
}

/// Decides membership in `U`, `A \ U`, `B \ U` from the shape of the
/// components; fails if the Jacobian is not identically 1.
pub fn recognize(g: &PolyMap) -> Result<Recognized> {
    let jac = g.jacobian();
    if !(jac.is_constant() && jac.coeff(0, 0).is_one()) {
        return Err(Error::NotUnimodular(jac.to_string()));
    }
    let (p, q) = (g.p(), g.q());
    if p.total_degree() <= Degree::Finite(1) && q.total_degree() <= Degree::Finite(1) {
        let aff = AffineMap {
            a: p.coeff(1, 0),
            b: p.coeff(0, 1),
            c: q.coeff(1, 0),
            d: q.coeff(0, 1),
            e: p.coeff(0, 0),
            f: q.coeff(0, 0),
        };
        if aff.c.is_zero() {
            return Ok(Recognized::InU(UElement {
                a: aff.a,
                b: aff.b,
                e: aff.e,
                f: aff.f,
            }));
        }
        return Ok(Recognized::InAOnly(aff));
    }
    // Jonquières shape: P = a x + q(y), Q = a⁻¹ y + f
    let p_x_part_ok = p.terms().all(|(&(i, j), _)| i == 0 || (i, j) == (1, 0));
    let q_ok = q.terms().all(|(&(i, j), _)| i == 0 && j <= 1);
    if p_x_part_ok && q_ok {
        let a = p.coeff(1, 0);
        let rest = p - &BiPoly::term(a.clone(), 1, 0);
        let qy = rest.as_uni_y().expect("only y-terms remain");
        return Ok(Recognized::InBOnly(JonquieresMap {
            a,
            q: qy,
            f: q.coeff(0, 0),
        }));
    }
    Ok(Recognized::NotInAUnionB)
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_map())
    }
}

impl fmt::Display for JonquieresMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_map())
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_map())
    }
}
