//! Recursive-descent parser for automorphism expressions.
//!
//! ```text
//! expr    := power ("*" power)*
//! power   := primary ("^" int)*
//! primary := map | "(" expr ")" | "inv(" expr ")"
//!          | "conj(" expr ";" expr ")" | "comm(" expr ";" expr ")"
//! map     := "(" poly "," poly ")"
//! poly    := ["+"|"-"] term (("+"|"-") term)*
//! term    := factor ("*" factor)*
//! factor  := base ["^" uint]
//! base    := uint ["/" uint] | "i" | "x" | "y" | "(" poly ")"
//! ```
//!
//! `*` between maps is the diagrammatic product: `g * h` applies `g` first.

use std::fmt;

use crate::amalgam::Engine;
use crate::error::{Error, Result};
use crate::exactnum::{BiPoly, Degree, GaussianRational};
use crate::planeauto::PolyMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Map(PolyMap),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Inv(Box<Expr>),
    Conj(Box<Expr>, Box<Expr>),
    Comm(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, e: &Engine) -> Result<PolyMap> {
        match self {
            Expr::Map(m) => Ok(m.clone()),
            Expr::Mul(a, b) => e.mul(&a.eval(e)?, &b.eval(e)?),
            Expr::Pow(a, n) => e.power(&a.eval(e)?, *n),
            Expr::Inv(a) => e.invert(&a.eval(e)?),
            Expr::Conj(g, s) => e.conjugate(&g.eval(e)?, &s.eval(e)?),
            Expr::Comm(g, h) => e.commutator(&g.eval(e)?, &h.eval(e)?),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Map(m) => write!(f, "{m}"),
            Expr::Mul(a, b) => write!(f, "{a} * {b}"),
            Expr::Pow(a, n) => match **a {
                Expr::Mul(..) => write!(f, "({a})^{n}"),
                _ => write!(f, "{a}^{n}"),
            },
            Expr::Inv(a) => write!(f, "inv({a})"),
            Expr::Conj(g, s) => write!(f, "conj({g}; {s})"),
            Expr::Comm(g, h) => write!(f, "comm({g}; {h})"),
        }
    }
}

/// Source text together with its syntax tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expression {
    pub source: String,
    pub ast: Expr,
}

impl Expression {
    pub fn eval(&self, e: &Engine) -> Result<PolyMap> {
        self.ast.eval(e)
    }
}

/// Parses an expression; polynomial powers inside literals are bounded by
/// the default degree cap.
pub fn parse(text: &str) -> Result<Expression> {
    parse_with_cap(text, Engine::default().cap())
}

pub fn parse_with_cap(text: &str, cap: u32) -> Result<Expression> {
    let mut p = Parser {
        src: text,
        pos: 0,
        cap,
    };
    let ast = p.expr()?;
    p.ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(Expression {
        source: text.to_string(),
        ast,
    })
}

/// Parses a single map literal `(P, Q)`.
pub fn parse_map(text: &str) -> Result<PolyMap> {
    let mut p = Parser {
        src: text,
        pos: 0,
        cap: Engine::default().cap(),
    };
    let m = p.map()?;
    p.ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(m)
}

/// Parses a polynomial in `x, y`.
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    let mut p = Parser {
        src: text,
        pos: 0,
        cap: Engine::default().cap(),
    };
    let q = p.poly()?;
    p.ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(q)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    cap: u32,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        let found = match self.src[self.pos..].chars().next() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        Error::Syntax {
            offset: self.pos,
            message: format!("{message}, found {found}"),
        }
    }

    fn ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .find(|&(k, c)| !(c.is_alphabetic() || c == '_' || (k > 0 && c.is_alphanumeric())))
            .map_or(rest.len(), |(k, _)| k);
        if len == 0 {
            return None;
        }
        let start = self.pos;
        self.pos += len;
        Some((start, &self.src[start..start + len]))
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let start = self.pos;
        self.pos += len;
        Some(&self.src[start..start + len])
    }

    fn uint(&mut self) -> Result<u32> {
        let at = self.pos;
        let Some(d) = self.digits() else {
            return Err(self.error("expected an exponent"));
        };
        d.parse().map_err(|_| Error::Syntax {
            offset: at,
            message: format!("exponent {d} is too large"),
        })
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let at = self.pos;
        let Some(d) = self.digits() else {
            return Err(self.error("expected an integer exponent"));
        };
        let n: i64 = d.parse().map_err(|_| Error::Syntax {
            offset: at,
            message: format!("exponent {d} is too large"),
        })?;
        Ok(if neg { -n } else { n })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            let rhs = self.power()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Expr> {
        let mut acc = self.primary()?;
        while self.eat(b'^') {
            let n = self.int()?;
            acc = Expr::Pow(Box::new(acc), n);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') if self.map_ahead() => self.map().map(Expr::Map),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(_) if self.at_ident() => {
                let (at, name) = self.ident().expect("identifier start");
                let name = name.to_string();
                match name.as_str() {
                    "inv" => {
                        self.expect(b'(')?;
                        let a = self.expr()?;
                        self.expect(b')')?;
                        Ok(Expr::Inv(Box::new(a)))
                    }
                    "conj" | "comm" => {
                        self.expect(b'(')?;
                        let a = self.expr()?;
                        self.expect(b';')?;
                        let b = self.expr()?;
                        self.expect(b')')?;
                        let (a, b) = (Box::new(a), Box::new(b));
                        Ok(if name == "conj" {
                            Expr::Conj(a, b)
                        } else {
                            Expr::Comm(a, b)
                        })
                    }
                    _ => Err(Error::Semantic(format!(
                        "unknown function '{name}' at byte {at}"
                    ))),
                }
            }
            _ => Err(self.error("expected a map, inv, conj or comm")),
        }
    }

    fn map(&mut self) -> Result<PolyMap> {
        self.expect(b'(')?;
        let p = self.poly()?;
        self.expect(b',')?;
        let q = self.poly()?;
        self.expect(b')')?;
        Ok(PolyMap::new(p, q))
    }

    fn poly(&mut self) -> Result<BiPoly> {
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = BiPoly::zero();
        loop {
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let e = self.uint()?;
        if let Degree::Finite(d) = base.total_degree() {
            let degree = d as u64 * e as u64;
            if degree > self.cap as u64 {
                return Err(Error::DegreeCapExceeded {
                    degree,
                    cap: self.cap,
                });
            }
        }
        if base.is_zero() && e == 0 {
            return Err(Error::Syntax {
                offset: at,
                message: "0^0 is undefined".into(),
            });
        }
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<BiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                self.expect(b')')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                self.digits();
                if self.eat(b'/') && self.digits().is_none() {
                    return Err(self.error("expected a denominator"));
                }
                let lit: String = self.src[start..self.pos]
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .collect();
                let c: GaussianRational = lit.parse().map_err(Error::from)?;
                Ok(BiPoly::constant(c))
            }
            Some(_) if self.at_ident() => {
                let (at, name) = self.ident().expect("identifier start");
                match name {
                    "x" => Ok(BiPoly::x()),
                    "y" => Ok(BiPoly::y()),
                    "i" => Ok(BiPoly::constant(GaussianRational::i())),
                    other => Err(Error::Semantic(format!(
                        "unknown variable '{other}' at byte {at}; only x and y are allowed"
                    ))),
                }
            }
            _ => Err(self.error("expected a number, x, y, i or '('")),
        }
    }

    /// A parenthesis opens a map literal when a comma occurs at its own
    /// nesting level.
    fn map_ahead(&self) -> bool {
        let mut depth = 0usize;
        for b in self.src[self.pos..].bytes() {
            match b {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        return false;
                    }
                }
                b',' if depth == 1 => return true,
                _ => {}
            }
        }
        false
    }

    fn at_ident(&self) -> bool {
        self.src[self.pos..]
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> PolyMap {
        parse_map(s).unwrap()
    }

    #[test]
    fn map_literals() {
        let g = m("(x + y^2, y)");
        assert_eq!(
            g,
            PolyMap::new(&BiPoly::x() + &BiPoly::y().pow(2), BiPoly::y())
        );
        let h = m("((1/2+i)*x*y - 3, -x)");
        assert_eq!(h.to_string(), "((1/2+i)*x*y - 3, -x)");
        assert_eq!(m(" ( x , y ) "), PolyMap::identity());
        assert_eq!(
            m("(2*i*x, (x+1)^2)").to_string(),
            "((2*i)*x, x^2 + 2*x + 1)"
        );
        assert_eq!(m("(1/2*x, 2*y)").to_string(), "((1/2)*x, 2*y)");
    }

    #[test]
    fn products_are_diagrammatic() {
        let e = Engine::default();
        let g = parse("(x,y+1) * (x+y^3,y)").unwrap().eval(&e).unwrap();
        let expect = e.mul(&m("(x,y+1)"), &m("(x+y^3,y)")).unwrap();
        assert_eq!(g, expect);
        assert_eq!(g, m("(x + y^3 + 3*y^2 + 3*y + 1, y + 1)"));
    }

    #[test]
    fn function_forms() {
        let e = Engine::default();
        let g = parse("comm((x+y^2,y); conj((x+y^2,y); (-y,x)))")
            .unwrap()
            .eval(&e)
            .unwrap();
        assert_eq!(e.length(&g).unwrap(), 8);
        let h = parse("inv((x+y^2,y))^-2 * ((x,y))")
            .unwrap()
            .eval(&e)
            .unwrap();
        assert_eq!(h, m("(x + 2*y^2, y)"));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse("(x + , y)") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("(x, y"),
            Err(Error::Syntax { offset: 5, .. })
        ));
        assert!(matches!(
            parse("((x, y)"),
            Err(Error::Syntax { offset: 7, .. })
        ));
        assert!(matches!(
            parse("(x, y) (x, y)"),
            Err(Error::Syntax { offset: 7, .. })
        ));
        assert!(matches!(parse(""), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(parse("(x + z, y)"), Err(Error::Semantic(_))));
        assert!(matches!(parse("foo((x,y))"), Err(Error::Semantic(_))));
        assert!(matches!(parse("(1/0*x, y)"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn print_parse_examples() {
        for s in [
            "(x, y)",
            "(-x, -y)",
            "(x + (1/2)*y - 3, y)",
            "((2*i)*x^2*y - (1/3-i)*y^3 - x + 1/2, (1-i))",
            "(i*x - i, -y - (3/4*i))",
            "(0, 0)",
        ] {
            assert_eq!(m(s).to_string(), s);
        }
    }
}
