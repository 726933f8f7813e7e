//! The amalgamated-product engine for `G = A *_U B`.
//!
//! Every operation is a method on [`Engine`], which only carries the degree
//! cap applied to intermediate polynomials. Free functions with the same
//! names use the default cap.

mod classify;
mod factor;
mod henon;
mod word;

use crate::error::Result;
use crate::exactnum::{UniPoly, DEFAULT_DEGREE_CAP};
use crate::planeauto::{recognize, split_right, CosetRep, PolyMap, Recognized, UElement};

pub use classify::{ElementClass, Verdict};
pub use factor::Factor;
pub use henon::{HenonFactor, HenonForm};
pub use word::AmalgamWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    cap: u32,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            cap: DEFAULT_DEGREE_CAP,
        }
    }
}

impl Engine {
    pub fn with_degree_cap(cap: u32) -> Self {
        Engine { cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Diagrammatic product `g · h`.
    pub fn mul(&self, g: &PolyMap, h: &PolyMap) -> Result<PolyMap> {
        g.then(h, self.cap)
    }

    /// Left-to-right product of a sequence; the empty product is the identity.
    pub fn product<'a, I>(&self, maps: I) -> Result<PolyMap>
    where
        I: IntoIterator<Item = &'a PolyMap>,
    {
        let mut acc = PolyMap::identity();
        for m in maps {
            acc = acc.then(m, self.cap)?;
        }
        Ok(acc)
    }

    pub fn realize(&self, w: &AmalgamWord) -> Result<PolyMap> {
        w.realize(self.cap)
    }

    /// The unique word `head · r₁ · … · rₙ` realizing `g`.
    pub fn normal_form(&self, g: &PolyMap) -> Result<AmalgamWord> {
        let factors = self.factor_maps(g)?;
        self.normal_form_of_factors(factors)
    }

    fn normal_form_of_factors(&self, factors: factor::Factors) -> Result<AmalgamWord> {
        if let [(_, Recognized::InU(u))] = factors.as_slice() {
            return Ok(AmalgamWord::from_head(u.clone()));
        }
        let mut reps = Vec::with_capacity(factors.len());
        let mut carry: Option<UElement> = None;
        for (m, _) in factors.iter().rev() {
            let cur = match &carry {
                None => m.clone(),
                Some(u) => m.then(&u.to_map(), self.cap)?,
            };
            let (u, r) = split_right(&cur)?;
            reps.push(r);
            carry = Some(u);
        }
        reps.reverse();
        Ok(AmalgamWord {
            head: carry.unwrap_or_else(UElement::identity),
            reps,
        })
    }

    /// Algebraic length: the number of letters in the normal form.
    pub fn length(&self, g: &PolyMap) -> Result<usize> {
        Ok(self.normal_form(g)?.len())
    }

    /// Inverse computed letter by letter from the normal form.
    pub fn invert(&self, g: &PolyMap) -> Result<PolyMap> {
        let w = self.normal_form(g)?;
        let mut acc = PolyMap::identity();
        for r in w.reps.iter().rev() {
            let inv = match r {
                CosetRep::I(_) => r
                    .as_affine()
                    .expect("I letter is affine")
                    .inverse()
                    .to_map(),
                CosetRep::J(p) => CosetRep::J(-p).to_map(),
            };
            acc = acc.then(&inv, self.cap)?;
        }
        acc.then(&w.head.inverse().to_map(), self.cap)
    }

    /// Inverse of an element of `A ∪ B` from its structured parameters.
    pub(crate) fn invert_letter(&self, g: &PolyMap) -> Result<PolyMap> {
        match recognize(g)? {
            Recognized::InU(u) => Ok(u.inverse().to_map()),
            Recognized::InAOnly(a) => Ok(a.inverse().to_map()),
            Recognized::InBOnly(b) => Ok(b.inverse().to_map()),
            Recognized::NotInAUnionB => self.invert(g),
        }
    }

    /// `g^n`; negative exponents go through [`Engine::invert`].
    pub fn power(&self, g: &PolyMap, n: i64) -> Result<PolyMap> {
        let base = if n < 0 { self.invert(g)? } else { g.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = PolyMap::identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq, self.cap)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.then(&sq, self.cap)?;
            }
        }
        Ok(acc)
    }

    /// `s · g · s⁻¹`.
    pub fn conjugate(&self, g: &PolyMap, s: &PolyMap) -> Result<PolyMap> {
        let s_inv = self.invert(s)?;
        self.product([s, g, &s_inv])
    }

    /// `[g, h] = g · h · g⁻¹ · h⁻¹`.
    pub fn commutator(&self, g: &PolyMap, h: &PolyMap) -> Result<PolyMap> {
        let g_inv = self.invert(g)?;
        let h_inv = self.invert(h)?;
        self.product([g, h, &g_inv, &h_inv])
    }
}

/// `(x + p(y), y)`.
pub fn shear(p: UniPoly) -> PolyMap {
    crate::planeauto::JonquieresMap::shear(p).to_map()
}

pub fn factorize(g: &PolyMap) -> Result<Vec<Factor>> {
    Engine::default().factorize(g)
}

pub fn normal_form(g: &PolyMap) -> Result<AmalgamWord> {
    Engine::default().normal_form(g)
}

pub fn length(g: &PolyMap) -> Result<usize> {
    Engine::default().length(g)
}

pub fn invert(g: &PolyMap) -> Result<PolyMap> {
    Engine::default().invert(g)
}

pub fn power(g: &PolyMap, n: i64) -> Result<PolyMap> {
    Engine::default().power(g, n)
}

pub fn conjugate(g: &PolyMap, s: &PolyMap) -> Result<PolyMap> {
    Engine::default().conjugate(g, s)
}

pub fn commutator(g: &PolyMap, h: &PolyMap) -> Result<PolyMap> {
    Engine::default().commutator(g, h)
}

pub fn cyclic_reduce(w: &AmalgamWord) -> Result<(AmalgamWord, PolyMap)> {
    Engine::default().cyclic_reduce(w)
}

pub fn classify(g: &PolyMap) -> Result<ElementClass> {
    Engine::default().classify(g)
}

pub fn henon_form(g: &PolyMap) -> Result<HenonForm> {
    Engine::default().henon_form(g)
}
