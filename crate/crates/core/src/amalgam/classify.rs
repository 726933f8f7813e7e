use std::fmt;

use super::factor::{same_factor, Factors};
use super::{AmalgamWord, Engine};
use crate::error::Result;
use crate::planeauto::PolyMap;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    Elementary,
    Henon,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Elementary => "Elementary",
            Verdict::Henon => "Henon",
        })
    }
}

/// Result of [`Engine::classify`]. `witness` is the normal form of
/// `conjugator · g · conjugator⁻¹`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementClass {
    pub verdict: Verdict,
    pub witness: AmalgamWord,
    pub conjugator: PolyMap,
}

impl Engine {
    /// Conjugates away matching first and last letters until the word is
    /// cyclically reduced. Returns the reduced word and `s` with
    /// `realize(reduced) = s · realize(w) · s⁻¹`.
    pub fn cyclic_reduce(&self, w: &AmalgamWord) -> Result<(AmalgamWord, PolyMap)> {
        let mut maps = vec![w.head.to_map()];
        for r in &w.reps {
            maps.push(r.to_map());
        }
        let (seq, conj) = self.cyclic_reduce_factors(self.reduce_sequence(maps)?)?;
        Ok((self.normal_form_of_factors(seq)?, conj))
    }

    /// Cyclic reduction on a reduced factor sequence: while the first and
    /// last factors lie in the same subgroup, conjugate the last one to the
    /// front and merge. Only neighbouring factors are multiplied, so the
    /// coefficients of the other factors are untouched.
    pub(crate) fn cyclic_reduce_factors(&self, mut seq: Factors) -> Result<(Factors, PolyMap)> {
        let mut conj = PolyMap::identity();
        while seq.len() >= 2 && same_factor(&seq[0].1, &seq[seq.len() - 1].1) {
            let (last, _) = seq.pop().expect("nonempty");
            let mut maps = Vec::with_capacity(seq.len() + 1);
            maps.push(last.clone());
            maps.extend(seq.into_iter().map(|(m, _)| m));
            seq = self.reduce_sequence(maps)?;
            conj = last.then(&conj, self.cap())?;
        }
        Ok((seq, conj))
    }

    pub fn classify(&self, g: &PolyMap) -> Result<ElementClass> {
        let (seq, conjugator) = self.cyclic_reduce_factors(self.factor_maps(g)?)?;
        let witness = self.normal_form_of_factors(seq)?;
        let verdict = if witness.len() <= 1 {
            Verdict::Elementary
        } else {
            Verdict::Henon
        };
        Ok(ElementClass {
            verdict,
            witness,
            conjugator,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::{conjugate, shear};
    use crate::exactnum::{BiPoly, UniPoly};

    fn henon() -> PolyMap {
        PolyMap::new(BiPoly::y(), &-BiPoly::x() + &BiPoly::y().pow(2))
    }

    #[test]
    fn verdicts() {
        let e = Engine::default();
        let sq = shear(UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(e.classify(&sq).unwrap().verdict, Verdict::Elementary);
        assert_eq!(
            e.classify(&PolyMap::identity()).unwrap().verdict,
            Verdict::Elementary
        );
        let c = e.classify(&henon()).unwrap();
        assert_eq!(c.verdict, Verdict::Henon);
        assert_eq!(c.witness.len(), 2);
        assert_eq!(Verdict::Henon.to_string(), "Henon");
    }

    #[test]
    fn conjugated_elementary_reduces() {
        let e = Engine::default();
        let s = henon();
        let g = conjugate(&shear(UniPoly::from_ints(&[0, 0, 0, 1])), &s).unwrap();
        assert_eq!(e.length(&g).unwrap(), 5);
        let c = e.classify(&g).unwrap();
        assert_eq!(c.verdict, Verdict::Elementary);
        let back = e.conjugate(&g, &c.conjugator).unwrap();
        assert_eq!(back, e.realize(&c.witness).unwrap());
    }

    #[test]
    fn conjugator_realizes_reduction() {
        let e = Engine::default();
        let s = PolyMap::new(&BiPoly::x() + &BiPoly::y().pow(3), BiPoly::y());
        let g = conjugate(&henon(), &s).unwrap();
        let c = e.classify(&g).unwrap();
        assert_eq!(c.verdict, Verdict::Henon);
        assert_eq!(c.witness.len(), 2);
        assert_eq!(
            e.conjugate(&g, &c.conjugator).unwrap(),
            e.realize(&c.witness).unwrap()
        );
    }
}
