//! Property suites comparing algebraic conditions with lifting conditions.

use serde::Serialize;

use super::{check_extension, LiftFailure, LiftingReport, Mode};
use crate::nerve::nerve_monoid;
use crate::relcore::RelMonoid;
use crate::shapes::{delta, face, sigma, span, Inclusion, ShapeName};
use crate::simplicial::{EpsSimplicialSet, Subobject};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicate {
    pub name: String,
    pub holds: bool,
}

/// A group of predicates that are claimed to be equivalent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub name: String,
    pub predicates: Vec<Predicate>,
    pub agree: bool,
}

impl EquivalenceReport {
    fn new(name: &str, predicates: Vec<Predicate>) -> Self {
        let agree = predicates.windows(2).all(|w| w[0].holds == w[1].holds);
        EquivalenceReport {
            name: name.into(),
            predicates,
            agree,
        }
    }
}

/// One shape checked against `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeVerdict {
    pub shape: String,
    pub holds: bool,
    pub instances: usize,
    pub first_failure: Option<LiftFailure>,
}

impl ShapeVerdict {
    fn from_report(shape: impl Into<String>, r: LiftingReport) -> Self {
        ShapeVerdict {
            shape: shape.into(),
            holds: r.holds,
            instances: r.total_instances,
            first_failure: r.failures.into_iter().next(),
        }
    }
}

pub fn verdict(shape: &str, inc: &Inclusion, x: &EpsSimplicialSet, mode: Mode) -> ShapeVerdict {
    ShapeVerdict::from_report(shape, check_extension(inc, x, mode, 1))
}

fn named(shape: &ShapeName, x: &EpsSimplicialSet, mode: Mode) -> Result<ShapeVerdict> {
    let inc = shape.realize(x.trunc_dim())?;
    Ok(verdict(&shape.to_string(), &inc, x, mode))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancellationReport {
    pub equivalences: Vec<EquivalenceReport>,
    pub all_agree: bool,
}

/// Cancellation and partiality of `μ` against inner and outer 3-horn
/// lifting on the nerve.
pub fn cancellation_suite(m: &RelMonoid) -> Result<CancellationReport> {
    let x = nerve_monoid(m, 3)?;
    let horn = |j: usize| -> Result<Predicate> {
        let v = named(&ShapeName::Horn(3, j), &x, Mode::Exists)?;
        Ok(Predicate {
            name: v.shape,
            holds: v.holds,
        })
    };
    let alg = |name: &str, holds: bool| Predicate {
        name: name.into(),
        holds,
    };
    let equivalences = vec![
        EquivalenceReport::new(
            "left cancellation",
            vec![
                alg("cancellative in the first coordinate", m.is_left_cancellative()),
                horn(0)?,
            ],
        ),
        EquivalenceReport::new(
            "right cancellation",
            vec![
                alg("cancellative in the second coordinate", m.is_right_cancellative()),
                horn(3)?,
            ],
        ),
        EquivalenceReport::new(
            "partiality",
            vec![alg("partial operation", m.is_partial()), horn(1)?, horn(2)?],
        ),
    ];
    let all_agree = equivalences.iter().all(|e| e.agree);
    Ok(CancellationReport {
        equivalences,
        all_agree,
    })
}

/// Unique extension along `εΛⁿ₀ ↪ Σⁿ` and `εΛⁿₙ ↪ Σⁿ` for `n = 1..=max_n`.
pub fn eps_horn_suite(x: &EpsSimplicialSet, max_n: usize) -> Result<Vec<ShapeVerdict>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(x.trunc_dim()) {
        for i in [0, n] {
            out.push(named(&ShapeName::EpsHorn(n, i), x, Mode::Unique)?);
        }
    }
    Ok(out)
}

/// Existence of ε-horn fillers up to dimension `max_n`.
pub(crate) fn eps_horns_exist(x: &EpsSimplicialSet, max_n: usize) -> Result<bool> {
    for n in 1..=max_n.min(x.trunc_dim()) {
        for i in [0, n] {
            if !named(&ShapeName::EpsHorn(n, i), x, Mode::Exists)?.holds {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn union_of(parts: &[Subobject]) -> Subobject {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, p| acc.union(p).expect("same parent"))
}

/// The extra inclusions of the two equivalence groups, as
/// `(label, inclusion)`: first the I-group, then the J-group.
pub fn frobenius_shapes(k: usize) -> Result<(Vec<(String, Inclusion)>, Vec<(String, Inclusion)>)> {
    let s4 = sigma(4, k)?;
    let d3 = delta(3, k);
    let inc = |parts: &[Subobject]| Inclusion::from_subobject(&union_of(parts));
    let i_group = vec![
        (
            "d1Σ4 ∪ d3Σ4 ↪ Σ4".to_string(),
            inc(&[face(&s4, 4, 1)?, face(&s4, 4, 3)?]),
        ),
        (
            "d2Σ4 ∪ Δ{123} ↪ Σ4".to_string(),
            inc(&[face(&s4, 4, 2)?, span(&s4, &[1, 2, 3], false)?]),
        ),
        (
            "d1Δ3 ∪ d3Δ3 ↪ Δ3".to_string(),
            inc(&[face(&d3, 3, 1)?, face(&d3, 3, 3)?]),
        ),
        (
            "d0Δ3 ∪ d2Δ3 ↪ Δ3".to_string(),
            inc(&[face(&d3, 3, 0)?, face(&d3, 3, 2)?]),
        ),
    ];
    let j_group = vec![
        (
            "Σ{0124} ∪ Δ{023} ↪ Σ4".to_string(),
            inc(&[span(&s4, &[0, 1, 2, 4], true)?, span(&s4, &[0, 2, 3], false)?]),
        ),
        (
            "Σ{0234} ∪ Δ{124} ↪ Σ4".to_string(),
            inc(&[span(&s4, &[0, 2, 3, 4], true)?, span(&s4, &[1, 2, 4], false)?]),
        ),
        (
            "Σ{0124} ∪ Σ{0234} ↪ Σ4".to_string(),
            inc(&[span(&s4, &[0, 1, 2, 4], true)?, span(&s4, &[0, 2, 3, 4], true)?]),
        ),
    ];
    Ok((i_group, j_group))
}

/// Each predicate is "ε-horn fillers up to dimension 4, and extension along
/// the extra inclusion"; members of each group should agree.
pub fn frobenius_shape_groups(x: &EpsSimplicialSet) -> Result<Vec<EquivalenceReport>> {
    let k = x.trunc_dim();
    let horns = eps_horns_exist(x, 4)?;
    let (i_group, j_group) = frobenius_shapes(k)?;
    let eval = |group: &[(String, Inclusion)]| -> Vec<Predicate> {
        group
            .iter()
            .map(|(label, inc)| Predicate {
                name: format!("ε-horns + {label}"),
                holds: horns && check_extension(inc, x, Mode::Exists, 1).holds,
            })
            .collect()
    };
    Ok(vec![
        EquivalenceReport::new("I-group", eval(&i_group)),
        EquivalenceReport::new("J-group", eval(&j_group)),
    ])
}

/// All `⋃_{i∈I} ∂ᵢΣⁿ ↪ Σⁿ` with `|I ∩ {0, n}| = 1`, `1 ≤ n ≤ max_n`.
pub fn face_union_shapes(max_n: usize) -> Vec<ShapeName> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let inner: Vec<usize> = (1..n).collect();
        for outer in [0, n] {
            for mask in 0..(1usize << inner.len()) {
                let mut is: Vec<usize> = inner
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect();
                is.push(outer);
                is.sort_unstable();
                out.push(ShapeName::FaceUnionSigma(n, is));
            }
        }
    }
    out
}

/// `None` when the ε-horn precondition fails.
pub fn face_union_suite(x: &EpsSimplicialSet) -> Result<Option<Vec<ShapeVerdict>>> {
    let max_n = x.trunc_dim().min(4);
    if !eps_horns_exist(x, max_n)? {
        return Ok(None);
    }
    face_union_shapes(max_n)
        .iter()
        .map(|s| named(s, x, Mode::Exists))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}
