//! Gaussian rationals: exact elements of Q(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::NumError;

/// An exact complex number `re + im*i` with rational parts.
///
/// Both parts are kept as reduced `BigRational`s with positive denominators,
/// so derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational {
            re: BigRational::new(re_num.into(), re_den.into()),
            im: BigRational::new(im_num.into(), im_den.into()),
        }
    }

    pub fn int(n: i64) -> Self {
        GaussianRational::real(BigRational::from_integer(n.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        GaussianRational::real(BigRational::new(num.into(), den.into()))
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, exp: i64) -> Result<Self, NumError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = GaussianRational::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Largest absolute numerator or denominator over both parts.
    pub fn height(&self) -> BigInt {
        [
            self.re.numer(),
            self.re.denom(),
            self.im.numer(),
            self.im.denom(),
        ]
        .into_iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_default()
    }

    /// True when the value is a plain integer with no imaginary part.
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    /// Sign used when printing a sum: a term is written with a leading minus
    /// when its first nonzero part is negative.
    pub(crate) fn leading_negative(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }

    /// True when the printed form is a single token (no `+`/`-` connective,
    /// no `/`, no `*`).
    pub(crate) fn is_atomic(&self) -> bool {
        if self.im.is_zero() {
            return self.re.is_integer();
        }
        self.re.is_zero() && self.im.abs().is_one()
    }
}

/// Exact binary arithmetic on two scalars, the single entry point for the
/// four field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(
    a: &GaussianRational,
    b: &GaussianRational,
    op: ScalarOp,
) -> Result<GaussianRational, NumError> {
    match op {
        ScalarOp::Add => Ok(a + b),
        ScalarOp::Sub => Ok(a - b),
        ScalarOp::Mul => Ok(a * b),
        ScalarOp::Div => a.checked_div(b),
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::int(1)
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        GaussianRational::real(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

/// Panics on a zero divisor; use [`GaussianRational::checked_div`] when the
/// divisor is not known to be nonzero.
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_rat(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

fn fmt_imag(im: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if im.is_one() {
        f.write_str("i")
    } else if (-im).is_one() {
        f.write_str("-i")
    } else {
        fmt_rat(im, f)?;
        f.write_str("*i")
    }
}

/// Literal syntax: `3`, `-1/2`, `i`, `-i`, `2*i`, `1/2-3/4*i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rat(&self.re, f),
            (true, false) => fmt_imag(&self.im, f),
            (false, false) => {
                fmt_rat(&self.re, f)?;
                if !self.im.is_negative() {
                    f.write_str("+")?;
                }
                fmt_imag(&self.im, f)
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rat(s: &str) -> Result<BigRational, NumError> {
    let bad = || NumError::BadLiteral(s.to_string());
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let digits = |t: &str| -> Result<BigInt, NumError> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    let r = match body.split_once('/') {
        Some((n, d)) => {
            let d = digits(d)?;
            if d.is_zero() {
                return Err(NumError::DivisionByZero);
            }
            BigRational::new(digits(n)?, d)
        }
        None => BigRational::from_integer(digits(body)?),
    };
    Ok(if neg { -r } else { r })
}

fn parse_imag(s: &str) -> Result<BigRational, NumError> {
    match s {
        "i" | "+i" => Ok(BigRational::one()),
        "-i" => Ok(-BigRational::one()),
        _ => {
            let head = s
                .strip_suffix("*i")
                .ok_or_else(|| NumError::BadLiteral(s.to_string()))?;
            parse_rat(head.strip_prefix('+').unwrap_or(head))
        }
    }
}

impl FromStr for GaussianRational {
    type Err = NumError;

    /// Accepts the literal forms produced by `Display`; whitespace is ignored.
    fn from_str(text: &str) -> Result<Self, NumError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(NumError::BadLiteral(text.to_string()));
        }
        if !s.ends_with('i') {
            return Ok(GaussianRational::real(parse_rat(&s)?));
        }
        // split at the connective between real and imaginary parts, if any
        let split = s
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            Some(k) => Ok(GaussianRational::new(
                parse_rat(&s[..k])?,
                parse_imag(&s[k..])?,
            )),
            None => Ok(GaussianRational::new(BigRational::zero(), parse_imag(&s)?)),
        }
    }
}

/// JSON shape: `{"re":{"num":"1","den":"2"},"im":{"num":"0","den":"1"}}` with
/// decimal-string integers.
#[derive(Serialize, Deserialize)]
struct RatJson {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    re: RatJson,
    im: RatJson,
}

fn rat_json(r: &BigRational) -> RatJson {
    RatJson {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
}

fn rat_from_json(j: &RatJson) -> Result<BigRational, String> {
    let n: BigInt = j
        .num
        .parse()
        .map_err(|_| format!("bad numerator {:?}", j.num))?;
    let d: BigInt = j
        .den
        .parse()
        .map_err(|_| format!("bad denominator {:?}", j.den))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(n, d))
}

impl Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarJson {
            re: rat_json(&self.re),
            im: rat_json(&self.im),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ScalarJson::deserialize(d)?;
        let re = rat_from_json(&j.re).map_err(serde::de::Error::custom)?;
        let im = rat_from_json(&j.im).map_err(serde::de::Error::custom)?;
        Ok(GaussianRational::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn one_over_i_is_minus_i() {
        let r = scalar_arith(&g("1"), &g("i"), ScalarOp::Div).unwrap();
        assert_eq!(r, g("-i"));
    }

    #[test]
    fn conjugate_sum_is_real() {
        let r = scalar_arith(&g("1/2+1/3*i"), &g("1/2-1/3*i"), ScalarOp::Add).unwrap();
        assert_eq!(r, GaussianRational::one());
    }

    #[test]
    fn i_squared() {
        let r = scalar_arith(
            &GaussianRational::i(),
            &GaussianRational::i(),
            ScalarOp::Mul,
        )
        .unwrap();
        assert_eq!(r, GaussianRational::int(-1));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            scalar_arith(&g("3"), &GaussianRational::zero(), ScalarOp::Div),
            Err(NumError::DivisionByZero)
        );
        assert_eq!(
            GaussianRational::zero().inv(),
            Err(NumError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form() {
        assert_eq!(g("2/4"), g("1/2"));
        assert_eq!(g("-6/4").re().denom(), &BigInt::from(2));
        let x = GaussianRational::from_parts(3, -6, 4, 8);
        assert_eq!(x.re().denom(), &BigInt::from(2));
        assert_eq!(x, g("-1/2+1/2*i"));
    }

    #[test]
    fn display_parse_forms() {
        for s in [
            "0", "3", "-1/2", "i", "-i", "2*i", "-3/4*i", "1/2+i", "1/2-3*i", "-5+2/3*i",
        ] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g(" 1 / 2 + 1 / 3 * i ").to_string(), "1/2+1/3*i");
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("x".parse::<GaussianRational>().is_err());
        assert!("".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn powers() {
        let i = GaussianRational::i();
        assert_eq!(i.pow(4).unwrap(), GaussianRational::one());
        assert_eq!(i.pow(3).unwrap(), g("-i"));
        assert_eq!(i.pow(-1).unwrap(), g("-i"));
        assert_eq!(g("2").pow(-3).unwrap(), g("1/8"));
        assert_eq!(
            GaussianRational::zero().pow(0).unwrap(),
            GaussianRational::one()
        );
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(g("1/2-3*i")).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"re":{"num":"1","den":"2"},"im":{"num":"-3","den":"1"}})
        );
        let back: GaussianRational = serde_json::from_value(v).unwrap();
        assert_eq!(back, g("1/2-3*i"));
    }
}
