use std::fmt;

use num_traits::{One, Zero};

use super::Engine;
use crate::error::{Error, Result};
use crate::exactnum::{BiPoly, GaussianRational, UniPoly};
use crate::planeauto::{recognize, split_right, CosetRep, PolyMap, Recognized};

/// The generalized Hénon map `(y, δx + q(y))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HenonFactor {
    pub delta: GaussianRational,
    pub q: UniPoly,
}

impl HenonFactor {
    pub fn to_map(&self) -> PolyMap {
        PolyMap::new(
            BiPoly::y(),
            &BiPoly::x().scale(&self.delta) + &BiPoly::from_uni_y(&self.q),
        )
    }

    /// True for the plain form `(y, x + q(y))`.
    pub fn is_pure(&self) -> bool {
        self.delta.is_one()
    }
}

impl fmt::Display for HenonFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_map())
    }
}

/// `sigma · g · sigma⁻¹ = factors[0] · factors[1] · …`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HenonForm {
    pub sigma: PolyMap,
    pub factors: Vec<HenonFactor>,
}

impl HenonForm {
    pub fn product(&self, cap: u32) -> Result<PolyMap> {
        let mut acc = PolyMap::identity();
        for h in &self.factors {
            acc = acc.then(&h.to_map(), cap)?;
        }
        Ok(acc)
    }
}

/// `(a x + q(y), a⁻¹ y + f)` read off a map known to lie in `B`.
fn jonquieres_parts(m: &PolyMap) -> (GaussianRational, UniPoly, GaussianRational) {
    match recognize(m).expect("unimodular") {
        Recognized::InBOnly(j) => (j.a, j.q, j.f),
        Recognized::InU(u) => {
            let j = u.as_jonquieres();
            (j.a, j.q, j.f)
        }
        other => unreachable!("expected a Jonquières map, got {other:?}"),
    }
}

fn diag(a: &GaussianRational, b: &GaussianRational) -> PolyMap {
    PolyMap::new(BiPoly::x().scale(a), BiPoly::y().scale(b))
}

impl Engine {
    /// Conjugates a Hénon-type element to a product of maps `(y, δᵢx + qᵢ(y))`
    /// with every `deg qᵢ ≥ 2`. All `δᵢ` except the last two are normalized to 1;
    /// the last two are conjugacy invariants of the chosen factorization and
    /// are 1 whenever `g` is conjugate to a product of plain Hénon maps.
    pub fn henon_form(&self, g: &PolyMap) -> Result<HenonForm> {
        let (mut seq, mut sigma) = self.cyclic_reduce_factors(self.factor_maps(g)?)?;
        if seq.len() <= 1 {
            return Err(Error::NotHenon);
        }
        if matches!(seq[0].1, Recognized::InAOnly(_)) {
            let first = seq.remove(0);
            sigma = self.invert_letter(&first.0)?.then(&sigma, self.cap())?;
            seq.push(first);
        }
        // seq = b₁ a₁ ⋯ b_m a_m with a_i = u_i · I(λ_i) and
        // I(λ) = (y, -x) · (x - λy, y)
        let m = seq.len() / 2;
        let mut bs_maps = Vec::with_capacity(m);
        let mut us = Vec::with_capacity(m);
        let mut ts = Vec::with_capacity(m);
        for pair in seq.chunks(2) {
            let (u, r) = split_right(&pair[1].0)?;
            let CosetRep::I(l) = r else {
                unreachable!("cyclically reduced sequence starting in B")
            };
            bs_maps.push(pair[0].0.clone());
            us.push(u.to_map());
            ts.push(PolyMap::new(
                &BiPoly::x() - &BiPoly::y().scale(&l),
                BiPoly::y(),
            ));
        }
        let t_last = ts[m - 1].clone();
        // conjugating by T_m turns g into b̃₁ (y, -x) ⋯ b̃_m (y, -x) with
        // b̃_i = T_{i-1} · b_i · u_i
        let mut parts = Vec::with_capacity(m);
        for i in 0..m {
            let prev_t = &ts[(i + m - 1) % m];
            let bt = self.product([prev_t, &bs_maps[i], &us[i]])?;
            parts.push(jonquieres_parts(&bt));
        }
        let (a_last, _, f_last) = &parts[m - 1];
        let big_b = a_last.inv()?;
        if m == 1 && !big_b.is_one() {
            return Err(Error::NoHenonForm(format!(
                "single letter pair with scaling {big_b} needs a square root"
            )));
        }
        let v0 = PolyMap::new(
            &BiPoly::x().scale(&big_b) + &BiPoly::constant(f_last.clone()),
            BiPoly::y(),
        );
        // absorb (C x + E, y) into the following factor
        let (mut c, mut e) = (big_b.clone(), f_last.clone());
        let mut raw = Vec::with_capacity(m);
        for (a, q, f) in &parts {
            let delta = -&(a * &c);
            let r = &(-q) - &UniPoly::constant(a * &e);
            raw.push((delta, r));
            c = a.inv()?;
            e = f.clone();
        }
        // diagonal conjugation d₀ = (x, y/B); between factors d_i = (b_{i-1} x, b_i y)
        let mut bs: Vec<GaussianRational> = vec![GaussianRational::one(), big_b.inv()?];
        let mut factors = Vec::with_capacity(m);
        for (i, (delta, r)) in raw.into_iter().enumerate() {
            let k = i + 1;
            let b_prev2 = bs[k - 1].clone();
            let b_prev = bs[k].clone();
            let b_k = if k + 2 <= m {
                &delta * &b_prev2
            } else if k + 1 == m {
                GaussianRational::one()
            } else {
                bs[1].clone()
            };
            let delta_n = (&delta * &b_prev2).checked_div(&b_k)?;
            let inv_bk = b_k.inv()?;
            let q = r
                .compose_affine(&b_prev, &GaussianRational::zero())
                .scale(&inv_bk);
            factors.push(HenonFactor { delta: delta_n, q });
            bs.push(b_k);
        }
        let d0 = diag(&GaussianRational::one(), &bs[1]);
        sigma = self.product([&d0, &v0, &t_last, &sigma])?;
        let form = HenonForm { sigma, factors };
        assert!(
            self.verify_henon_form(g, &form)?,
            "Hénon form does not recompose"
        );
        Ok(form)
    }

    /// Checks `sigma · g = (factor product) · sigma`, which is equivalent to
    /// the conjugation identity and needs no inverse.
    pub fn verify_henon_form(&self, g: &PolyMap, form: &HenonForm) -> Result<bool> {
        let lhs = self.mul(&form.sigma, g)?;
        let rhs = self.mul(&form.product(self.cap())?, &form.sigma)?;
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::{conjugate, shear};

    fn pure(q: &[i64]) -> PolyMap {
        HenonFactor {
            delta: GaussianRational::one(),
            q: UniPoly::from_ints(q),
        }
        .to_map()
    }

    #[test]
    fn single_henon_map() {
        let h = PolyMap::new(BiPoly::y(), &-BiPoly::x() + &BiPoly::y().pow(2));
        let f = Engine::default().henon_form(&h).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].delta, GaussianRational::int(-1));
        assert_eq!(f.factors[0].q.degree().or_zero(), 2);
    }

    #[test]
    fn pure_pair_stays_pure() {
        let e = Engine::default();
        let g = e.mul(&pure(&[0, 0, 1]), &pure(&[1, 0, 0, 2])).unwrap();
        let f = e.henon_form(&g).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert!(
            f.factors.iter().all(HenonFactor::is_pure),
            "{:?}",
            f.factors
        );
        let degs: Vec<u32> = f.factors.iter().map(|h| h.q.degree().or_zero()).collect();
        assert_eq!(degs.iter().product::<u32>(), 6);
    }

    #[test]
    fn conjugated_pure_product() {
        let e = Engine::default();
        let g = e
            .product([
                &pure(&[0, 0, 1]),
                &pure(&[0, 0, -1, 1]),
                &pure(&[0, 0, 2]),
                &pure(&[0, 1, 0, 1]),
            ])
            .unwrap();
        let s = e
            .mul(
                &shear(UniPoly::from_ints(&[0, 0, 1])),
                &PolyMap::new(BiPoly::y(), -BiPoly::x()),
            )
            .unwrap();
        let g = conjugate(&g, &s).unwrap();
        let f = e.henon_form(&g).unwrap();
        assert_eq!(f.factors.len(), 4);
        assert!(
            f.factors.iter().all(HenonFactor::is_pure),
            "{:?}",
            f.factors
        );
        assert!(f.factors.iter().all(|h| h.q.degree().or_zero() >= 2));
    }

    #[test]
    fn elementary_is_rejected() {
        let g = shear(UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(Engine::default().henon_form(&g), Err(Error::NotHenon));
    }
}
