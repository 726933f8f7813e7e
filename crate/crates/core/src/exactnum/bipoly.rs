use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{monomial, write_sum, Degree, GaussianRational, NumError, UniPoly};

/// Sparse polynomial in `x, y`; the key `(i, j)` stands for `x^i y^j`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), GaussianRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(GaussianRational::one())
    }

    pub fn x() -> Self {
        BiPoly::term(GaussianRational::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::term(GaussianRational::one(), 0, 1)
    }

    pub fn constant(c: GaussianRational) -> Self {
        BiPoly::term(c, 0, 0)
    }

    /// `c * x^i * y^j`.
    pub fn term(c: GaussianRational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), GaussianRational)>,
    {
        let mut p = BiPoly::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    /// Embeds a polynomial in `y`.
    pub fn from_uni_y(p: &UniPoly) -> Self {
        BiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((0, k as u32), c.clone())),
        )
    }

    /// The polynomial as one in `y` alone, if `x` does not occur.
    pub fn as_uni_y(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|&(i, _)| i != 0) {
            return None;
        }
        let n = self
            .terms
            .keys()
            .map(|&(_, j)| j as usize + 1)
            .max()
            .unwrap_or(0);
        let mut v = vec![GaussianRational::zero(); n];
        for (&(_, j), c) in &self.terms {
            v[j as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(v))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> GaussianRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(i, j)| i + j)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn degree_in_x(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(i, _)| i)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn degree_in_y(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(_, j)| j)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// The homogeneous component of top total degree.
    pub fn leading_form(&self) -> BiPoly {
        let Degree::Finite(d) = self.total_degree() else {
            return BiPoly::zero();
        };
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Terms of total degree at most `d`.
    pub fn truncate_degree(&self, d: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j <= d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, k: (u32, u32), c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    pub fn eval(&self, x: &GaussianRational, y: &GaussianRational) -> GaussianRational {
        let mut xp: Vec<GaussianRational> = vec![GaussianRational::one()];
        let mut yp: Vec<GaussianRational> = vec![GaussianRational::one()];
        let mut acc = GaussianRational::zero();
        for (&(i, j), c) in &self.terms {
            while xp.len() <= i as usize {
                let next = xp.last().unwrap() * x;
                xp.push(next);
            }
            while yp.len() <= j as usize {
                let next = yp.last().unwrap() * y;
                yp.push(next);
            }
            acc += &(&(c * &xp[i as usize]) * &yp[j as usize]);
        }
        acc
    }

    pub fn partial_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * &GaussianRational::int(i as i64))),
        )
    }

    pub fn partial_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * &GaussianRational::int(j as i64))),
        )
    }

    /// `P(X, Y)` expanded, failing if the result's total degree exceeds `cap`.
    pub fn subst(&self, x: &BiPoly, y: &BiPoly, cap: u32) -> Result<BiPoly, NumError> {
        let mut out = subst_many(&[self], x, y, cap)?;
        Ok(out.pop().unwrap())
    }
}

/// Upper bound on `deg P(X, Y)` from the exponents of `P`.
fn subst_degree_bound(p: &BiPoly, dx: u64, dy: u64) -> u64 {
    p.terms
        .keys()
        .map(|&(i, j)| i as u64 * dx + j as u64 * dy)
        .max()
        .unwrap_or(0)
}

/// Substitutes the same pair `(X, Y)` into several polynomials, sharing the
/// powers of `Y`. Inputs whose exponent bound exceeds four times the cap are
/// rejected before any expansion; otherwise the exact result degree is
/// checked against `cap`.
pub(crate) fn subst_many(
    polys: &[&BiPoly],
    x: &BiPoly,
    y: &BiPoly,
    cap: u32,
) -> Result<Vec<BiPoly>, NumError> {
    let dx = x.total_degree().or_zero() as u64;
    let dy = y.total_degree().or_zero() as u64;
    for p in polys {
        let bound = subst_degree_bound(p, dx, dy);
        if bound > 4 * cap as u64 {
            return Err(NumError::DegreeCapExceeded { degree: bound, cap });
        }
    }
    let (zx, zy) = (ZPoly::new(x), ZPoly::new(y));
    let mut ypows: Vec<ZPoly> = vec![ZPoly::new(&BiPoly::one())];
    let mut out = Vec::with_capacity(polys.len());
    for p in polys {
        // group by x-exponent, highest first, for Horner in X
        let mut rows: BTreeMap<u32, Vec<(u32, &GaussianRational)>> = BTreeMap::new();
        for (&(i, j), c) in &p.terms {
            rows.entry(i).or_default().push((j, c));
        }
        let mut acc = ZPoly::zero();
        let mut prev: Option<u32> = None;
        for (&i, row) in rows.iter().rev() {
            if let Some(pi) = prev {
                for _ in i..pi {
                    acc = acc.mul(&zx);
                }
            }
            let mut sum = ZPoly::zero();
            for &(j, c) in row {
                while ypows.len() <= j as usize {
                    let next = ypows.last().unwrap().mul(&zy);
                    ypows.push(next);
                }
                sum.add_scaled(&ypows[j as usize], c);
            }
            acc.add_scaled(&sum, &GaussianRational::one());
            prev = Some(i);
        }
        if let Some(pi) = prev {
            for _ in 0..pi {
                acc = acc.mul(&zx);
            }
        }
        let acc = acc.into_bipoly();
        if let Degree::Finite(d) = acc.total_degree() {
            if d > cap {
                return Err(NumError::DegreeCapExceeded {
                    degree: d as u64,
                    cap,
                });
            }
        }
        out.push(acc);
    }
    Ok(out)
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

/// `terms / den` with Gaussian-integer numerators, so that products and
/// sums need no gcd until [`ZPoly::into_bipoly`].
pub(crate) struct ZPoly {
    den: BigInt,
    terms: HashMap<(u32, u32), (BigInt, BigInt)>,
}

fn common_denominator(c: &GaussianRational) -> BigInt {
    c.re().denom().lcm(c.im().denom())
}

impl ZPoly {
    pub(crate) fn zero() -> ZPoly {
        ZPoly {
            den: BigInt::one(),
            terms: HashMap::new(),
        }
    }

    pub(crate) fn new(p: &BiPoly) -> ZPoly {
        let den = p
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(&common_denominator(c)));
        let scale = |r: &BigRational| r.numer() * (&den / r.denom());
        let terms = p
            .terms
            .iter()
            .map(|(&k, c)| (k, (scale(c.re()), scale(c.im()))))
            .collect();
        ZPoly { den, terms }
    }

    pub(crate) fn mul(&self, other: &ZPoly) -> ZPoly {
        let mut acc: HashMap<(u32, u32), (BigInt, BigInt)> =
            HashMap::with_capacity((self.terms.len() * other.terms.len()).min(1 << 16));
        for (&(i1, j1), (ar, ai)) in &self.terms {
            for (&(i2, j2), (br, bi)) in &other.terms {
                let e = acc
                    .entry((i1 + i2, j1 + j2))
                    .or_insert_with(|| (BigInt::zero(), BigInt::zero()));
                if !ar.is_zero() {
                    e.0 += ar * br;
                    e.1 += ar * bi;
                }
                if !ai.is_zero() {
                    e.0 -= ai * bi;
                    e.1 += ai * br;
                }
            }
        }
        ZPoly {
            den: &self.den * &other.den,
            terms: acc,
        }
    }

    /// `self += c · other`.
    pub(crate) fn add_scaled(&mut self, other: &ZPoly, c: &GaussianRational) {
        if other.terms.is_empty() || c.is_zero() {
            return;
        }
        let cd = common_denominator(c);
        let cr = c.re().numer() * (&cd / c.re().denom());
        let ci = c.im().numer() * (&cd / c.im().denom());
        let oden = &other.den * &cd;
        let den = self.den.lcm(&oden);
        let fs = &den / &self.den;
        if !fs.is_one() {
            for v in self.terms.values_mut() {
                v.0 *= &fs;
                v.1 *= &fs;
            }
        }
        let fo = &den / &oden;
        let (cr, ci) = (&cr * &fo, &ci * &fo);
        for (&k, (br, bi)) in &other.terms {
            let e = self
                .terms
                .entry(k)
                .or_insert_with(|| (BigInt::zero(), BigInt::zero()));
            if !cr.is_zero() {
                e.0 += &cr * br;
                e.1 += &cr * bi;
            }
            if !ci.is_zero() {
                e.0 -= &ci * bi;
                e.1 += &ci * br;
            }
        }
        self.den = den;
    }

    /// Terms of top total degree.
    pub(crate) fn leading_form(&self) -> BiPoly {
        let d = self
            .terms
            .iter()
            .filter(|(_, (re, im))| !(re.is_zero() && im.is_zero()))
            .map(|(&(i, j), _)| i + j)
            .max();
        let Some(d) = d else {
            return BiPoly::zero();
        };
        ZPoly {
            den: self.den.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
        .into_bipoly()
    }

    pub(crate) fn into_bipoly(self) -> BiPoly {
        let den = self.den;
        BiPoly {
            terms: self
                .terms
                .into_iter()
                .filter(|(_, (re, im))| !(re.is_zero() && im.is_zero()))
                .map(|(k, (re, im))| {
                    let c = GaussianRational::new(
                        BigRational::new(re, den.clone()),
                        BigRational::new(im, den.clone()),
                    );
                    (k, c)
                })
                .collect(),
        }
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.terms.len() * rhs.terms.len() > 16 {
            return ZPoly::new(self).mul(&ZPoly::new(rhs)).into_bipoly();
        }
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), &(a * b));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

fn render_monomial(i: u32, j: u32) -> String {
    match (i, j) {
        (0, _) => monomial('y', j),
        (_, 0) => monomial('x', i),
        _ => format!("{}*{}", monomial('x', i), monomial('y', j)),
    }
}

/// Descending total degree; within a degree, higher powers of `x` first.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        write_sum(
            f,
            keys.into_iter()
                .map(|k| (&self.terms[k], render_monomial(k.0, k.1))),
        )
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
