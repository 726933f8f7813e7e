//! Jung–van der Kulk degree reduction.

use std::fmt;

use num_traits::Zero;

use super::Engine;
use crate::error::{Error, Result};
use crate::exactnum::{BiPoly, Degree, UniPoly, ZPoly};
use crate::planeauto::{recognize, AffineMap, JonquieresMap, PolyMap, Recognized};

/// A factor of a tame decomposition: an element of `A` or of `B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Factor {
    Affine(AffineMap),
    Jonquieres(JonquieresMap),
}

impl Factor {
    pub fn to_map(&self) -> PolyMap {
        match self {
            Factor::Affine(a) => a.to_map(),
            Factor::Jonquieres(j) => j.to_map(),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Affine(a) => write!(f, "A {a}"),
            Factor::Jonquieres(j) => write!(f, "B {j}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tag {
    U,
    A,
    B,
}

fn tag(r: &Recognized) -> Tag {
    match r {
        Recognized::InU(_) => Tag::U,
        Recognized::InAOnly(_) => Tag::A,
        Recognized::InBOnly(_) => Tag::B,
        Recognized::NotInAUnionB => unreachable!("factors always lie in A or B"),
    }
}

/// A reduced factor sequence with the recognition result of each factor.
pub(crate) type Factors = Vec<(PolyMap, Recognized)>;

/// Both in `A \ U` or both in `B \ U`.
pub(crate) fn same_factor(a: &Recognized, b: &Recognized) -> bool {
    let (ta, tb) = (tag(a), tag(b));
    ta == tb && ta != Tag::U
}

/// `(y, -x)`.
fn rotation() -> PolyMap {
    PolyMap::new(BiPoly::y(), -BiPoly::x())
}

/// Peels elementary factors off the right of `g` until the remainder is
/// affine. Returns `[remainder, e_n, …, e_1]` with `g = remainder · e_n · … · e_1`.
fn peel(g: &PolyMap) -> Result<Vec<PolyMap>> {
    let mut peeled: Vec<PolyMap> = Vec::new();
    let mut p = g.p().clone();
    let mut q = g.q().clone();
    // powers of q, valid until q changes
    let mut qpows: Vec<ZPoly> = vec![ZPoly::new(&BiPoly::one())];
    loop {
        let (dp, dq) = (p.total_degree(), q.total_degree());
        if dp <= Degree::Finite(1) && dq <= Degree::Finite(1) {
            break;
        }
        if dp < dq {
            // g = (-q, p) · (y, -x)
            let np = -&q;
            q = std::mem::replace(&mut p, np);
            qpows.truncate(1);
            peeled.push(rotation());
            continue;
        }
        let (Degree::Finite(dp), Degree::Finite(dq)) = (dp, dq) else {
            return Err(Error::NotAnAutomorphism(PolyMap::new(p, q).to_string()));
        };
        if dq == 0 || dp % dq != 0 {
            return Err(Error::NotAnAutomorphism(PolyMap::new(p, q).to_string()));
        }
        let k = (dp / dq) as usize;
        if qpows.len() == 1 {
            qpows.push(ZPoly::new(&q));
        }
        while qpows.len() <= k {
            let next = qpows.last().unwrap().mul(&qpows[1]);
            qpows.push(next);
        }
        let lead_p = p.leading_form();
        let lead_qk = qpows[k].leading_form();
        let (key, val) = lead_qk.terms().next().expect("q is nonzero");
        let c = lead_p.coeff(key.0, key.1).checked_div(val)?;
        if c.is_zero() || lead_p != lead_qk.scale(&c) {
            return Err(Error::NotAnAutomorphism(PolyMap::new(p, q).to_string()));
        }
        // g = (p - c q^k, q) · (x + c y^k, y)
        let mut pz = ZPoly::new(&p);
        pz.add_scaled(&qpows[k], &-&c);
        p = pz.into_bipoly();
        peeled.push(JonquieresMap::shear(UniPoly::monomial(c, k)).to_map());
    }
    let mut seq = vec![PolyMap::new(p, q)];
    seq.extend(peeled.into_iter().rev());
    Ok(seq)
}

impl Engine {
    /// Reduced factor sequence as maps with their recognition results: the
    /// product equals `g`, no two neighbours lie in the same factor, and a
    /// `U` element only appears when it is the whole sequence.
    pub(crate) fn factor_maps(&self, g: &PolyMap) -> Result<Factors> {
        // a successful peel writes g as affine · (Jacobian-1 shears), so the
        // Jacobian of g is the determinant of the affine remainder
        match peel(g) {
            Ok(seq) => self.reduce_sequence(seq),
            Err(e) if g.is_unimodular() => Err(e),
            Err(_) => Err(Error::NotUnimodular(g.jacobian().to_string())),
        }
    }

    /// Multiplies together neighbours that lie in a common factor.
    pub(crate) fn reduce_sequence(&self, seq: Vec<PolyMap>) -> Result<Factors> {
        let mut stack: Vec<(PolyMap, Recognized)> = Vec::with_capacity(seq.len());
        for m in seq {
            let r = recognize(&m)?;
            if r == Recognized::NotInAUnionB {
                return Err(Error::NotInFactor);
            }
            stack.push((m, r));
            while stack.len() >= 2 {
                let t2 = tag(&stack[stack.len() - 1].1);
                let t1 = tag(&stack[stack.len() - 2].1);
                if !(t1 == Tag::U || t2 == Tag::U || t1 == t2) {
                    break;
                }
                let (m2, _) = stack.pop().unwrap();
                let (m1, _) = stack.pop().unwrap();
                let m = m1.then(&m2, self.cap())?;
                let r = recognize(&m)?;
                stack.push((m, r));
            }
        }
        Ok(stack)
    }

    /// Tame decomposition of `g`: factors in `A` or `B` whose diagrammatic
    /// product is `g`, alternating between the two subgroups.
    pub fn factorize(&self, g: &PolyMap) -> Result<Vec<Factor>> {
        Ok(self
            .factor_maps(g)?
            .into_iter()
            .map(|(_, r)| match r {
                Recognized::InU(u) => Factor::Affine(u.as_affine()),
                Recognized::InAOnly(a) => Factor::Affine(a),
                Recognized::InBOnly(b) => Factor::Jonquieres(b),
                Recognized::NotInAUnionB => unreachable!(),
            })
            .collect())
    }
}
