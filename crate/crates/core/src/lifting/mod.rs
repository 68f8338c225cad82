//! Map enumeration and extension checking between finite ε-simplicial sets,
//! and the property suites built on top.

mod characterize;
mod engine;
mod extract;
mod theorems;

pub use characterize::{characterize, extends, roundtrip, Characterization, Condition, Rejection};
pub use engine::{Engine, State};
pub use extract::{delta_recovery, extract_structure, DeltaRecoveryReport, ExtractedStructure};
pub use theorems::{
    cancellation_suite, eps_horn_suite, face_union_shapes, face_union_suite, frobenius_shape_groups,
    frobenius_shapes, CancellationReport, EquivalenceReport, Predicate, ShapeVerdict,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::shapes::Inclusion;
use crate::simplicial::{EpsSimplicialSet, SimplicialMap};

/// Default cap on the number of failing instances kept in a report.
pub const DEFAULT_FAILURE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exists,
    Unique,
}

/// A map written out on the non-degenerate cells and witnesses of its
/// source, as `(dimension, cell, image)` and `(witness, image)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapWitness {
    pub cells: Vec<(usize, String, String)>,
    pub eps: Vec<(String, String)>,
}

impl MapWitness {
    pub fn new(f: &SimplicialMap, a: &EpsSimplicialSet, x: &EpsSimplicialSet) -> Self {
        let mut cells = Vec::new();
        for d in 0..=a.trunc_dim() {
            for &c in a.nondegenerate(d) {
                cells.push((d, a.name(d, c).to_string(), x.name(d, f.cells[d][c]).to_string()));
            }
        }
        let eps = (0..a.eps_len())
            .map(|e| (a.eps_name(e).to_string(), x.eps_name(f.eps[e]).to_string()))
            .collect();
        MapWitness { cells, eps }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftFailure {
    pub instance: MapWitness,
    /// Number of extensions found, capped at 2.
    pub extensions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftingReport {
    pub holds: bool,
    pub mode: Mode,
    pub total_instances: usize,
    pub failure_count: usize,
    pub failures: Vec<LiftFailure>,
}

/// Every map `a → x`, sorted.
pub fn enumerate_maps(a: &EpsSimplicialSet, x: &EpsSimplicialSet) -> Vec<SimplicialMap> {
    let engine = Engine::new(a, x);
    let mut st = engine.state();
    let mut out = Vec::new();
    engine.search(&mut st, &mut |s| {
        out.push(engine.to_map(s));
        true
    });
    out.sort();
    for f in &out {
        debug_assert!(f.check(a, x).is_ok());
    }
    out
}

/// Extensions of `f: A → X` along `A ↪ B`, at most `cap` of them. Every
/// returned extension is re-verified.
pub fn extensions(engine: &Engine<'_>, inc: &Inclusion, f: &SimplicialMap, cap: usize) -> Vec<SimplicialMap> {
    let a = &inc.domain;
    let mut st = engine.state();
    for d in 0..=a.trunc_dim() {
        for &c in a.nondegenerate(d) {
            if !engine.seed_cell(&mut st, d, inc.map.cells[d][c], f.cells[d][c]) {
                return Vec::new();
            }
        }
    }
    for e in 0..a.eps_len() {
        if !engine.seed_eps(&mut st, inc.map.eps[e], f.eps[e]) {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    engine.search(&mut st, &mut |s| {
        out.push(engine.to_map(s));
        out.len() < cap
    });
    let (b, x) = (engine.source(), engine.target());
    for g in &out {
        assert!(g.check(b, x).is_ok(), "solver produced a non-natural lift");
        assert_eq!(&inc.map.then(g), f, "solver produced a lift that does not extend");
    }
    out
}

/// Decides `(A ↪ B) ⊠ X`: every map `A → X` extends (uniquely, in unique
/// mode). Failures keep instance order; at most `failure_cap` are listed.
pub fn check_extension(
    inc: &Inclusion,
    x: &EpsSimplicialSet,
    mode: Mode,
    failure_cap: usize,
) -> LiftingReport {
    let instances = enumerate_maps(&inc.domain, x);
    let engine = Engine::new(&inc.codomain, x);
    let cap = match mode {
        Mode::Exists => 1,
        Mode::Unique => 2,
    };
    let counts: Vec<usize> = instances
        .par_iter()
        .map(|f| extensions(&engine, inc, f, cap).len())
        .collect();
    let bad = |n: usize| match mode {
        Mode::Exists => n == 0,
        Mode::Unique => n != 1,
    };
    let failing: Vec<usize> = (0..instances.len()).filter(|&i| bad(counts[i])).collect();
    let failures = failing
        .iter()
        .take(failure_cap)
        .map(|&i| LiftFailure {
            instance: MapWitness::new(&instances[i], &inc.domain, x),
            extensions: counts[i],
        })
        .collect();
    LiftingReport {
        holds: failing.is_empty(),
        mode,
        total_instances: instances.len(),
        failure_count: failing.len(),
        failures,
    }
}
