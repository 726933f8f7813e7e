use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use super::random::{
    random_nonzero, random_poly, random_scalar, random_sl2, random_word, rng, WordBounds,
};
use super::Report;
use crate::amalgam::{shear, Engine, Verdict};
use crate::exactnum::{BiPoly, Degree, GaussianRational, UniPoly};
use crate::planeauto::{recognize, AffineMap, PolyMap, Recognized, UElement};

fn gr(n: i64) -> GaussianRational {
    GaussianRational::int(n)
}

fn diag(a: &GaussianRational, b: &GaussianRational) -> PolyMap {
    PolyMap::new(BiPoly::x().scale(a), BiPoly::y().scale(b))
}

/// `(x, y + 1)`.
pub fn unit_translation() -> PolyMap {
    PolyMap::new(BiPoly::x(), &BiPoly::y() + &BiPoly::one())
}

/// The four units `1, -1, i, -i`.
pub fn units() -> [GaussianRational; 4] {
    let i = GaussianRational::i();
    [gr(1), gr(-1), i.clone(), -i]
}

fn err_report(check: &str, params: Value, e: crate::Error) -> Report {
    Report::new(check, params, false, json!({ "error": e.to_string() }))
}

/// `(ν⁻¹x, νy) · (x + λyᵏ, y) · (νx, ν⁻¹y) = (x + λν^{k+1}yᵏ, y)`. When
/// `ν^{k+1}` is an integer `m`, the conjugate is also checked to be the
/// `m`-th power of the original shear.
pub fn check_eigenvalue_identity(
    e: &Engine,
    k: u32,
    lambda: &GaussianRational,
    nu: &GaussianRational,
) -> Report {
    let params = json!({ "k": k, "lambda": lambda.to_string(), "nu": nu.to_string() });
    let run = || -> crate::Result<Report> {
        let nu_inv = nu.inv()?;
        let orig = shear(UniPoly::monomial(lambda.clone(), k as usize));
        let lhs = e.product([&diag(&nu_inv, nu), &orig, &diag(nu, &nu_inv)])?;
        let nu_pow = nu.pow(k as i64 + 1)?;
        let rhs = shear(UniPoly::monomial(lambda * &nu_pow, k as usize));
        let mut pass = lhs == rhs;
        let mut power = Value::Null;
        if nu_pow.is_integer() {
            let m: i64 = nu_pow.to_string().parse().expect("integer literal");
            let pw = e.power(&orig, m)?;
            pass &= pw == lhs;
            power = json!(m);
        }
        Ok(Report::new(
            "eigenvalue-identity",
            params.clone(),
            pass,
            json!({
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
                "nu_pow": nu_pow.to_string(),
                "power_of_original": power,
            }),
        ))
    };
    run().unwrap_or_else(|err| err_report("eigenvalue-identity", params, err))
}

/// Outcome of conjugating a `U` element by `μ = (x + p(y), y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionOutcome {
    pub conjugate: PolyMap,
    pub in_a: bool,
    pub degree_condition: bool,
    pub root_of_unity: bool,
    pub in_h: bool,
}

impl IntersectionOutcome {
    /// The claim "in A exactly when λ^{n+1} = 1, and then in H".
    pub fn literal_claim(&self) -> bool {
        self.in_a == self.root_of_unity && (!self.in_a || self.in_h)
    }
}

pub fn intersection_outcome(
    e: &Engine,
    p: &UniPoly,
    g: &UElement,
) -> crate::Result<IntersectionOutcome> {
    let n = p.degree().or_zero();
    let mu = shear(p.clone());
    let mu_inv = shear(-p);
    let conjugate = e.product([&mu, &g.to_map(), &mu_inv])?;
    let lambda = &g.a;
    let lambda_inv = lambda.inv()?;
    let diff = &p.scale(lambda) - &p.compose_affine(&lambda_inv, &g.f);
    let degree_condition = diff.degree() <= Degree::Finite(1);
    let root_of_unity = lambda.pow(n as i64 + 1)?.is_one();
    let (in_a, in_h) = match recognize(&conjugate)? {
        Recognized::InU(u) => {
            let in_h = u.f.is_zero() && u.a.pow(n as i64 + 1)?.is_one();
            (true, in_h)
        }
        Recognized::InAOnly(_) => (true, false),
        _ => (false, false),
    };
    Ok(IntersectionOutcome {
        conjugate,
        in_a,
        degree_condition,
        root_of_unity,
        in_h,
    })
}

/// Conjugation of `g = (λx + by + e, λ⁻¹y + f)` by `μ = (x + p(y), y)`.
/// Passes when membership in `A` matches the degree condition, membership
/// forces `λ^{n+1} = 1`, and for `f = 0` membership lands in `H`. The
/// stronger two-sided statement is recorded as `literal_claim`.
pub fn check_intersection_criterion(e: &Engine, p: &UniPoly, g: &UElement) -> Report {
    let params = json!({ "p": p.to_string(), "g": g.to_string() });
    match intersection_outcome(e, p, g) {
        Err(err) => err_report("intersection-criterion", params, err),
        Ok(o) => {
            let pass = o.in_a == o.degree_condition
                && (!o.in_a || o.root_of_unity)
                && (!(o.in_a && g.f.is_zero()) || o.in_h);
            Report::new(
                "intersection-criterion",
                params,
                pass,
                json!({
                    "conjugate": o.conjugate.to_string(),
                    "in_a": o.in_a,
                    "degree_condition": o.degree_condition,
                    "root_of_unity": o.root_of_unity,
                    "in_h": o.in_h,
                    "literal_claim": o.literal_claim(),
                }),
            )
        }
    }
}

/// `[(x, y+1), (x + p(y), y)] = (x + p(y+1) - p(y), y)`, repeated
/// `iterations` times.
pub fn check_degree_lowering(e: &Engine, p: &UniPoly, iterations: u32) -> Report {
    let params = json!({ "p": p.to_string(), "iterations": iterations });
    let n = p.degree().or_zero();
    let run = || -> crate::Result<Report> {
        let t = unit_translation();
        let mut cur = p.clone();
        let mut steps = Vec::new();
        let mut pass = true;
        for _ in 0..iterations {
            let c = e.commutator(&t, &shear(cur.clone()))?;
            let next = cur.forward_difference();
            pass &= c == shear(next.clone());
            pass &= next.degree() == Degree::Finite(cur.degree().or_zero() - 1);
            steps.push(c.to_string());
            cur = next;
        }
        if n >= 2 && iterations == n - 2 {
            pass &= cur.degree() == Degree::Finite(2);
        }
        Ok(Report::new(
            "degree-lowering",
            params.clone(),
            pass,
            json!({ "steps": steps, "final": cur.to_string() }),
        ))
    };
    run().unwrap_or_else(|err| err_report("degree-lowering", params, err))
}

/// The `P` with `P(y+1) - P(y) = target` and `P(0) = 0`.
pub fn antidifference(target: &UniPoly) -> UniPoly {
    let mut rest = target.clone();
    let mut out = UniPoly::zero();
    while let Degree::Finite(j) = rest.degree() {
        let c = rest
            .leading_coeff()
            .checked_div(&gr(j as i64 + 1))
            .expect("nonzero divisor");
        let term = UniPoly::monomial(c, j as usize + 1);
        rest = &rest - &term.forward_difference();
        out = &out + &term;
    }
    out
}

/// Exhibits `(x + target(y), y)` as the commutator `[(x, y+1), (x + P(y), y)]`.
pub fn check_commutator_realization(e: &Engine, target: &UniPoly) -> Report {
    let params = json!({ "target": target.to_string() });
    let big_p = antidifference(target);
    let run = || -> crate::Result<Report> {
        let c = e.commutator(&unit_translation(), &shear(big_p.clone()))?;
        let pass = big_p.forward_difference() == *target
            && big_p.coeff(0).is_zero()
            && c == shear(target.clone());
        Ok(Report::new(
            "commutator-realization",
            params.clone(),
            pass,
            json!({ "antidifference": big_p.to_string(), "commutator": c.to_string() }),
        ))
    };
    run().unwrap_or_else(|err| err_report("commutator-realization", params, err))
}

/// The commutator of `(x + y², y)` and `(-y, x)(x + y², y)(y, -x)`.
pub fn length8_element(e: &Engine) -> crate::Result<PolyMap> {
    let g = shear(UniPoly::from_ints(&[0, 0, 1]));
    let s = PolyMap::new(-BiPoly::y(), BiPoly::x());
    let h = e.conjugate(&g, &s)?;
    e.commutator(&g, &h)
}

pub fn check_length8(e: &Engine) -> Report {
    let run = || -> crate::Result<Report> {
        let g = shear(UniPoly::from_ints(&[0, 0, 1]));
        let h = e.conjugate(&g, &PolyMap::new(-BiPoly::y(), BiPoly::x()))?;
        let c = e.commutator(&g, &h)?;
        let (lg, lh, lc) = (e.length(&g)?, e.length(&h)?, e.length(&c)?);
        let w = e.normal_form(&c)?;
        Ok(Report::new(
            "length8",
            json!({}),
            lg == 1 && lh == 3 && lc == 8,
            json!({
                "element": c.to_string(),
                "length": lc,
                "constituent_lengths": [lg, lh],
                "normal_form": w.to_json(),
            }),
        ))
    };
    run().unwrap_or_else(|err| err_report("length8", json!({}), err))
}

/// Whether `g` commutes with `(-x, -y)`.
pub fn commutes_with_minus_identity(e: &Engine, g: &AffineMap) -> crate::Result<bool> {
    let m = diag(&gr(-1), &gr(-1));
    let gm = g.to_map();
    Ok(e.mul(&gm, &m)? == e.mul(&m, &gm)?)
}

pub fn check_centralizer_sl2(e: &Engine, seed: u64, samples: usize) -> Report {
    let params = json!({ "seed": seed, "samples": samples });
    let mut r = rng(seed);
    let mut failures = Vec::new();
    let mut commuting = 0usize;
    let mut fixed = vec![
        AffineMap::linear(0, 1, -1, 0).expect("det = 1"),
        AffineMap::translation(gr(1), gr(0)),
    ];
    fixed.truncate(samples.min(2));
    let mut maps = fixed;
    while maps.len() < samples {
        let lin = random_sl2(&mut r, 8);
        let (ev, fv) = match r.gen_range(0..3u8) {
            0 => (gr(0), gr(0)),
            1 => (random_scalar(&mut r, 8), gr(0)),
            _ => (random_scalar(&mut r, 8), random_scalar(&mut r, 8)),
        };
        maps.push(AffineMap {
            e: ev,
            f: fv,
            ..lin
        });
    }
    for g in &maps {
        match commutes_with_minus_identity(e, g) {
            Ok(c) => {
                commuting += c as usize;
                if c != g.is_linear() {
                    failures.push(g.to_string());
                }
            }
            Err(err) => failures.push(err.to_string()),
        }
    }
    Report::new(
        "centralizer-sl2",
        params,
        failures.is_empty(),
        json!({ "cases": maps.len(), "commuting": commuting, "failures": failures }),
    )
}

/// Aggregates per-case reports into one.
fn aggregate(check: &str, params: Value, cases: Vec<Report>) -> Report {
    let total = cases.len();
    let failures: Vec<Value> = cases
        .iter()
        .filter(|c| !c.pass)
        .map(Report::to_json)
        .collect();
    let example = cases.first().map(Report::to_json).unwrap_or(Value::Null);
    Report::new(
        check,
        params,
        failures.is_empty(),
        json!({ "cases": total, "failures": failures, "example": example }),
    )
}

pub fn eigenvalue_suite(e: &Engine, seed: u64, samples: usize) -> Report {
    let mut r = rng(seed);
    let mut cases = Vec::new();
    for k in 0..=6u32 {
        for nu in units() {
            for _ in 0..samples {
                let lambda = random_nonzero(&mut r, 8);
                cases.push(check_eigenvalue_identity(e, k, &lambda, &nu));
            }
        }
    }
    let params = json!({ "seed": seed, "k": "0..=6", "nu": ["1", "-1", "i", "-i"], "lambdas_per_cell": samples });
    aggregate("eigenvalue-identity", params, cases)
}

/// `p ∈ {y², y³, y⁴}`, `λ` over the four units plus two non-roots of unity,
/// `f` both zero and random.
pub fn intersection_suite(e: &Engine, seed: u64, samples: usize) -> Report {
    let mut r = rng(seed);
    let mut cases = Vec::new();
    let mut lambdas: Vec<GaussianRational> = units().to_vec();
    lambdas.push(gr(2));
    lambdas.push("1/2+i".parse().expect("literal"));
    for n in 2..=4u32 {
        for lambda in &lambdas {
            for s in 0..samples {
                let p = if s == 0 {
                    UniPoly::monomial(gr(1), n as usize)
                } else {
                    random_poly(&mut r, 2, n, 8)
                };
                let f = if s % 2 == 0 {
                    gr(0)
                } else {
                    random_nonzero(&mut r, 8)
                };
                let g = UElement::new(
                    lambda.clone(),
                    random_scalar(&mut r, 8),
                    random_scalar(&mut r, 8),
                    f,
                )
                .expect("unit is nonzero");
                cases.push(check_intersection_criterion(e, &p, &g));
            }
        }
    }
    let members = cases
        .iter()
        .filter(|c| c.witness["in_a"] == json!(true))
        .count();
    let params = json!({
        "seed": seed,
        "deg_p": [2, 3, 4],
        "lambda": lambdas.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "samples_per_cell": samples,
    });
    let mut rep = aggregate("intersection-criterion", params, cases);
    rep.witness["members"] = json!(members);
    rep.pass &= members > 0 && members < rep.witness["cases"].as_u64().unwrap_or(0) as usize;
    rep
}

pub fn degree_lowering_suite(e: &Engine, seed: u64, samples: usize) -> Report {
    let mut r = rng(seed);
    let cases = (0..samples)
        .map(|_| {
            let n = r.gen_range(2..=10u32);
            let p = random_poly(&mut r, 0, n, 8);
            check_degree_lowering(e, &p, n - 2)
        })
        .collect();
    aggregate(
        "degree-lowering",
        json!({ "seed": seed, "samples": samples, "deg": "2..=10" }),
        cases,
    )
}

pub fn commutator_realization_suite(e: &Engine, seed: u64, samples: usize) -> Report {
    let mut r = rng(seed);
    let cases = (0..samples)
        .map(|_| {
            let n = r.gen_range(0..=8u32);
            let p = random_poly(&mut r, 0, n, 8);
            check_commutator_realization(e, &p)
        })
        .collect();
    aggregate(
        "commutator-realization",
        json!({ "seed": seed, "samples": samples, "deg": "0..=8" }),
        cases,
    )
}

/// `normal_form(realize(w)) = w` and exact factor recomposition on random words.
pub fn round_trip_suite(e: &Engine, seed: u64, samples: usize, bounds: &WordBounds) -> Report {
    use rayon::prelude::*;
    let cases: Vec<Report> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let w = random_word(seed.wrapping_add(i), bounds);
            let params = json!({ "word": w.to_string() });
            let run = || -> crate::Result<Report> {
                let g = e.realize(&w)?;
                let nf = e.normal_form(&g)?;
                let factors = e.factorize(&g)?;
                let maps: Vec<PolyMap> = factors.iter().map(|f| f.to_map()).collect();
                let back = e.product(&maps)?;
                Ok(Report::new(
                    "round-trip",
                    params.clone(),
                    nf == w && back == g,
                    json!({ "normal_form": nf.to_string(), "factors": factors.len() }),
                ))
            };
            run().unwrap_or_else(|err| err_report("round-trip", params, err))
        })
        .collect();
    let params = json!({
        "seed": seed,
        "samples": samples,
        "max_len": bounds.max_len,
        "max_deg": bounds.max_deg,
        "max_height": bounds.max_height,
        "max_total_degree": bounds.max_total_degree,
    });
    aggregate("round-trip", params, cases)
}

/// `(y, -x + y²)`.
pub fn quadratic_henon() -> PolyMap {
    PolyMap::new(BiPoly::y(), &-BiPoly::x() + &BiPoly::y().pow(2))
}

/// Conjugators for the invariance checks: short words with small degrees.
pub fn conjugator_bounds() -> WordBounds {
    WordBounds {
        max_len: 4,
        max_deg: 3,
        max_height: 4,
        max_total_degree: 9,
    }
}

pub fn degree_growth_suite(e: &Engine, seed: u64, samples: usize) -> Report {
    let h = quadratic_henon();
    let run = || -> crate::Result<Report> {
        let mut degrees = Vec::new();
        let mut pass = true;
        let mut cur = PolyMap::identity();
        for n in 1..=8u32 {
            cur = e.mul(&cur, &h)?;
            degrees.push(cur.degree());
            pass &= cur.degree() == 1 << n;
        }
        pass &= e.classify(&h)?.verdict == Verdict::Henon;
        let mut invariant = 0usize;
        let mut failures = Vec::new();
        for i in 0..samples as u64 {
            let s = e.realize(&random_word(seed.wrapping_add(i), &conjugator_bounds()))?;
            let v = e.classify(&e.conjugate(&h, &s)?)?.verdict;
            if v == Verdict::Henon {
                invariant += 1;
            } else {
                failures.push(s.to_string());
            }
        }
        pass &= failures.is_empty();
        Ok(Report::new(
            "degree-growth",
            json!({ "seed": seed, "samples": samples, "map": h.to_string() }),
            pass,
            json!({ "degrees": degrees, "conjugates_henon": invariant, "failures": failures }),
        ))
    };
    run().unwrap_or_else(|err| err_report("degree-growth", json!({ "seed": seed }), err))
}

/// `(y, x + q(y))`.
pub fn pure_henon(q: UniPoly) -> PolyMap {
    PolyMap::new(BiPoly::y(), &BiPoly::x() + &BiPoly::from_uni_y(&q))
}

/// An even product of plain Hénon maps, conjugated by a short random word.
/// Two factors have degrees in `2..=3` and a conjugator with at most one
/// quadratic `J` letter; four factors are quadratic and conjugated by an
/// affine map. Either way the degree stays at most 36.
pub fn random_henon_element(e: &Engine, seed: u64) -> crate::Result<(PolyMap, usize)> {
    let mut r = rng(seed);
    let m = 2 * r.gen_range(1..=2usize);
    let max_deg = if m == 2 { 3 } else { 2 };
    let mut g = PolyMap::identity();
    for _ in 0..m {
        let deg = r.gen_range(2..=max_deg);
        g = e.mul(&g, &pure_henon(random_poly(&mut r, 0, deg, 4)))?;
    }
    let bounds = WordBounds {
        max_len: if m == 2 { 2 } else { 1 },
        max_deg: 2,
        max_height: 3,
        max_total_degree: if m == 2 { 2 } else { 1 },
    };
    let s = e.realize(&random_word(r.gen(), &bounds))?;
    Ok((e.conjugate(&g, &s)?, m))
}

pub fn henon_suite(e: &Engine, seed: u64, samples: usize) -> Report {
    let mut cases = Vec::new();
    for i in 0..samples as u64 {
        let params = json!({ "seed": seed.wrapping_add(i) });
        let run = || -> crate::Result<Report> {
            let (g, m) = random_henon_element(e, seed.wrapping_add(i))?;
            let form = e.henon_form(&g)?;
            let lhs = e.conjugate(&g, &form.sigma)?;
            let rhs = form.product(e.cap())?;
            let degs: Vec<u32> = form
                .factors
                .iter()
                .map(|h| h.q.degree().or_zero())
                .collect();
            let pure = form.factors.iter().all(|h| h.is_pure());
            let pass = lhs == rhs
                && degs.iter().all(|&d| d >= 2)
                && degs.iter().product::<u32>() == lhs.degree()
                && form.factors.len() == m
                && pure;
            Ok(Report::new(
                "henon-form",
                params.clone(),
                pass,
                json!({
                    "element": g.to_string(),
                    "sigma": form.sigma.to_string(),
                    "factors": form.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
            ))
        };
        cases.push(run().unwrap_or_else(|err| err_report("henon-form", params, err)));
    }
    aggregate(
        "henon-form",
        json!({ "seed": seed, "samples": samples }),
        cases,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> Engine {
        Engine::default()
    }

    #[test]
    fn eigenvalue_examples() {
        let i = GaussianRational::i();
        let rep = check_eigenvalue_identity(&e(), 1, &gr(1), &i);
        assert!(rep.pass);
        assert_eq!(rep.witness["lhs"], "(x - y, y)");
        let rep = check_eigenvalue_identity(&e(), 0, &gr(5), &gr(1));
        assert!(rep.pass);
        assert_eq!(rep.witness["lhs"], "(x + 5, y)");
        let l: GaussianRational = "2+i".parse().unwrap();
        let rep = check_eigenvalue_identity(&e(), 3, &l, &gr(-1));
        assert!(rep.pass);
        assert_eq!(rep.witness["nu_pow"], "1");
    }

    #[test]
    fn intersection_examples() {
        let i = GaussianRational::i();
        let cube = UniPoly::from_ints(&[0, 0, 0, 1]);
        let g = UElement::new(i, gr(2), gr(1), gr(0)).unwrap();
        let o = intersection_outcome(&e(), &cube, &g).unwrap();
        assert!(o.in_a && o.in_h && o.literal_claim());
        let sq = UniPoly::from_ints(&[0, 0, 1]);
        let g = UElement::new(gr(-1), gr(1), gr(0), gr(3)).unwrap();
        let o = intersection_outcome(&e(), &sq, &g).unwrap();
        assert!(!o.in_a);
        let t = UElement::new(gr(1), gr(0), gr(4), gr(0)).unwrap();
        let p = UniPoly::from_ints(&[0, 0, 3, -1, 2]);
        assert!(intersection_outcome(&e(), &p, &t).unwrap().in_a);
    }

    #[test]
    fn intersection_translation_in_y() {
        // p = y³, λ = 1, f = 1: λ⁴ = 1 but the conjugate leaves A
        let cube = UniPoly::from_ints(&[0, 0, 0, 1]);
        let g = UElement::new(gr(1), gr(0), gr(0), gr(1)).unwrap();
        let o = intersection_outcome(&e(), &cube, &g).unwrap();
        assert!(o.root_of_unity && !o.in_a && !o.literal_claim());
        assert!(check_intersection_criterion(&e(), &cube, &g).pass);
        // p = y², λ = 1, f = 1: in A with a translation in y, outside H
        let sq = UniPoly::from_ints(&[0, 0, 1]);
        let o = intersection_outcome(&e(), &sq, &g).unwrap();
        assert!(o.in_a && !o.in_h);
        assert!(check_intersection_criterion(&e(), &sq, &g).pass);
    }

    #[test]
    fn degree_lowering_examples() {
        let rep = check_degree_lowering(&e(), &UniPoly::from_ints(&[0, 0, 0, 1]), 1);
        assert!(rep.pass);
        assert_eq!(rep.witness["steps"][0], "(3*y^2 + x + 3*y + 1, y)");
        let rep = check_degree_lowering(&e(), &UniPoly::from_ints(&[0, 0, 1]), 0);
        assert!(rep.pass);
        assert_eq!(rep.witness["final"], "y^2");
        // Δ³(y⁵ + y²) = 60y² + 180y + 150
        let rep = check_degree_lowering(&e(), &UniPoly::from_ints(&[0, 0, 1, 0, 0, 1]), 3);
        assert!(rep.pass);
        assert_eq!(rep.witness["final"], "60*y^2 + 180*y + 150");
    }

    #[test]
    fn antidifference_examples() {
        assert!(antidifference(&UniPoly::zero()).is_zero());
        assert_eq!(antidifference(&UniPoly::from_ints(&[1])), UniPoly::var());
        let faulhaber = UniPoly::from_coeffs(vec![
            gr(0),
            GaussianRational::ratio(1, 6),
            GaussianRational::ratio(-1, 2),
            GaussianRational::ratio(1, 3),
        ]);
        assert_eq!(antidifference(&UniPoly::from_ints(&[0, 0, 1])), faulhaber);
        for d in 0..=12usize {
            let t = UniPoly::monomial(gr(3), d);
            assert_eq!(antidifference(&t).forward_difference(), t);
        }
    }

    #[test]
    fn length8_report() {
        let rep = check_length8(&e());
        assert!(rep.pass, "{}", rep.to_json());
        assert_eq!(rep.witness["length"], 8);
    }

    #[test]
    fn centralizer_examples() {
        let rot = AffineMap::linear(0, 1, -1, 0).unwrap();
        assert!(commutes_with_minus_identity(&e(), &rot).unwrap());
        let t = AffineMap::translation(gr(1), gr(0));
        assert!(!commutes_with_minus_identity(&e(), &t).unwrap());
        assert!(check_centralizer_sl2(&e(), 3, 30).pass);
    }

    #[test]
    fn small_eigenvalue_suite() {
        assert!(eigenvalue_suite(&e(), 1, 1).pass);
    }

    #[test]
    fn small_intersection_suite() {
        assert!(intersection_suite(&e(), 1, 2).pass);
    }

    #[test]
    fn small_degree_suites() {
        assert!(degree_lowering_suite(&e(), 1, 5).pass);
        assert!(commutator_realization_suite(&e(), 1, 5).pass);
    }

    #[test]
    fn small_round_trip_suite() {
        let r = round_trip_suite(&e(), 1, 10, &WordBounds::default());
        assert!(r.pass, "{}", r.to_json());
    }

    #[test]
    fn small_degree_growth_suite() {
        assert!(degree_growth_suite(&e(), 1, 2).pass);
    }

    #[test]
    fn small_henon_suite() {
        let h = henon_suite(&e(), 1, 3);
        assert!(h.pass, "{}", h.to_json());
    }
}
