//! Exact verification of the explicit identities about `G`, with seeded
//! random corpora. Every check returns a [`Report`].

mod checks;
mod random;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::amalgam::Engine;

pub use checks::{
    antidifference, check_centralizer_sl2, check_commutator_realization, check_degree_lowering,
    check_eigenvalue_identity, check_intersection_criterion, check_length8,
    commutator_realization_suite, commutes_with_minus_identity, conjugator_bounds,
    degree_growth_suite, degree_lowering_suite, eigenvalue_suite, henon_suite,
    intersection_outcome, intersection_suite, length8_element, pure_henon, quadratic_henon,
    random_henon_element, round_trip_suite, unit_translation, units, IntersectionOutcome,
};
pub use random::{
    random_nonzero, random_poly, random_scalar, random_sl2, random_u_element, random_word, rng,
    WordBounds,
};

/// Machine-readable check outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    pub witness: Value,
}

impl Report {
    pub fn new(check: &str, params: Value, pass: bool, witness: Value) -> Self {
        Report {
            check: check.to_string(),
            params,
            pass,
            witness,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Settings shared by the registered checks. `samples` overrides each
/// check's default sample count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub samples: Option<usize>,
    pub engine: Engine,
}

struct Check {
    name: &'static str,
    default_samples: usize,
    run: fn(&Engine, u64, usize) -> Report,
}

const CHECKS: &[Check] = &[
    Check {
        name: "centralizer-sl2",
        default_samples: 100,
        run: check_centralizer_sl2,
    },
    Check {
        name: "commutator-realization",
        default_samples: 20,
        run: commutator_realization_suite,
    },
    Check {
        name: "degree-growth",
        default_samples: 20,
        run: degree_growth_suite,
    },
    Check {
        name: "degree-lowering",
        default_samples: 50,
        run: degree_lowering_suite,
    },
    Check {
        name: "eigenvalue-identity",
        default_samples: 10,
        run: eigenvalue_suite,
    },
    Check {
        name: "henon-form",
        default_samples: 20,
        run: henon_suite,
    },
    Check {
        name: "intersection-criterion",
        default_samples: 4,
        run: intersection_suite,
    },
    Check {
        name: "length8",
        default_samples: 1,
        run: |e, _, _| check_length8(e),
    },
    Check {
        name: "round-trip",
        default_samples: 500,
        run: |e, seed, n| round_trip_suite(e, seed, n, &WordBounds::default()),
    },
];

/// Names accepted by [`run_check`], sorted.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

/// Runs one registered check, or `None` for an unknown name.
pub fn run_check(name: &str, cfg: &Config) -> Option<Report> {
    let c = CHECKS.iter().find(|c| c.name == name)?;
    Some((c.run)(
        &cfg.engine,
        cfg.seed,
        cfg.samples.unwrap_or(c.default_samples),
    ))
}

/// Every registered check, evaluated in parallel, sorted by name.
pub fn run_all(cfg: &Config) -> Vec<Report> {
    let mut out: Vec<Report> = CHECKS
        .par_iter()
        .map(|c| {
            (c.run)(
                &cfg.engine,
                cfg.seed,
                cfg.samples.unwrap_or(c.default_samples),
            )
        })
        .collect();
    out.sort_by(|a, b| a.check.cmp(&b.check));
    out
}
