//! Seeded generators for the check corpora.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::amalgam::AmalgamWord;
use crate::exactnum::{GaussianRational, UniPoly};
use crate::planeauto::{AffineMap, CosetRep, UElement};

/// Size limits for [`random_word`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordBounds {
    pub max_len: usize,
    pub max_deg: u32,
    pub max_height: i64,
    /// Upper bound on the product of the `J` letter degrees, which is the
    /// degree of the realized map.
    pub max_total_degree: u64,
}

impl Default for WordBounds {
    fn default() -> Self {
        WordBounds {
            max_len: 10,
            max_deg: 5,
            max_height: 8,
            max_total_degree: 32,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `num/den` with `|num| ≤ height`, `1 ≤ den ≤ height`.
pub fn random_rational_part<R: Rng>(rng: &mut R, height: i64) -> GaussianRational {
    let h = height.max(1);
    let num = rng.gen_range(-h..=h);
    let den = rng.gen_range(1..=h);
    GaussianRational::ratio(num, den)
}

/// Real with probability 1/2, otherwise a full Gaussian rational.
pub fn random_scalar<R: Rng>(rng: &mut R, height: i64) -> GaussianRational {
    let re = random_rational_part(rng, height);
    if rng.gen_bool(0.5) {
        re
    } else {
        let im = random_rational_part(rng, height);
        &re + &(&im * &GaussianRational::i())
    }
}

pub fn random_nonzero<R: Rng>(rng: &mut R, height: i64) -> GaussianRational {
    loop {
        let s = random_scalar(rng, height);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A polynomial of exact degree `deg` whose coefficients below `min_exp`
/// vanish.
pub fn random_poly<R: Rng>(rng: &mut R, min_exp: u32, deg: u32, height: i64) -> UniPoly {
    let mut coeffs = vec![GaussianRational::zero(); deg as usize + 1];
    for c in coeffs.iter_mut().take(deg as usize).skip(min_exp as usize) {
        *c = random_scalar(rng, height);
    }
    coeffs[deg as usize] = random_nonzero(rng, height);
    UniPoly::from_coeffs(coeffs)
}

pub fn random_u_element<R: Rng>(rng: &mut R, height: i64) -> UElement {
    UElement::new(
        random_nonzero(rng, height),
        random_scalar(rng, height),
        random_scalar(rng, height),
        random_scalar(rng, height),
    )
    .expect("a is nonzero")
}

/// A symplectic linear part `(a, b, c, d)` with `a ≠ 0`.
pub fn random_sl2<R: Rng>(rng: &mut R, height: i64) -> AffineMap {
    let a = random_nonzero(rng, height);
    let b = random_scalar(rng, height);
    let c = random_scalar(rng, height);
    let d = (&GaussianRational::int(1) + &(&b * &c))
        .checked_div(&a)
        .expect("a is nonzero");
    AffineMap::new(
        a,
        b,
        c,
        d,
        GaussianRational::zero(),
        GaussianRational::zero(),
    )
    .expect("det = 1")
}

/// Deterministic alternating word within `bounds`. The number of letters is
/// uniform in `0..=max_len`, shortened if the `J` letters could not fit in
/// the total degree budget even at degree 2.
pub fn random_word(seed: u64, bounds: &WordBounds) -> AmalgamWord {
    let mut rng = rng(seed);
    let head = random_u_element(&mut rng, bounds.max_height);
    let mut n = rng.gen_range(0..=bounds.max_len);
    let start_j = rng.gen_bool(0.5);
    let j_count = |n: usize| if start_j { n.div_ceil(2) } else { n / 2 };
    let max_deg = bounds.max_deg.max(2);
    while n > 0 && 2u64.saturating_pow(j_count(n) as u32) > bounds.max_total_degree {
        n -= 1;
    }
    let mut remaining_j = j_count(n) as u32;
    let mut budget = bounds.max_total_degree;
    let mut reps = Vec::with_capacity(n);
    for k in 0..n {
        let is_j = (k % 2 == 0) == start_j;
        if is_j {
            let reserve = 2u64.pow(remaining_j - 1);
            let cap = (budget / reserve).min(max_deg as u64) as u32;
            let deg = rng.gen_range(2..=cap);
            budget /= deg as u64;
            remaining_j -= 1;
            reps.push(CosetRep::J(random_poly(
                &mut rng,
                2,
                deg,
                bounds.max_height,
            )));
        } else {
            reps.push(CosetRep::I(random_scalar(&mut rng, bounds.max_height)));
        }
    }
    AmalgamWord::new(head, reps).expect("generated word alternates")
}
