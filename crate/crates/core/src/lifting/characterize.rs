//! Recognising nerves of Frobenius algebras among ε-simplicial sets.

use serde::Serialize;

use super::extract::extract_structure;
use super::theorems::{verdict, ShapeVerdict};
use super::{check_extension, Mode};
use crate::nerve::{nerve_frobenius, nerve_map};
use crate::relcore::{find_isomorphism, FrobeniusAlgebra};
use crate::shapes::ShapeName;
use crate::simplicial::{coskeletal_completion, face_tuple_map, EpsSimplicialSet, SimplicialMap};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// Unique fillers for ε-horns `εΛⁿ₀`, `εΛⁿₙ`, `n = 1..=4`.
    EpsHornExtension,
    /// Unique fillers for `∂Δⁿ ↪ Δⁿ`, `n = 3, 4`.
    BoundaryExtension,
    /// `X` agrees with the coskeletal completion of its 2-truncation.
    CoskeletalAgreement,
    /// Fillers for `∂₁Σ⁴ ∪ ∂₃Σ⁴ ↪ Σ⁴`.
    FrobeniusIdentity,
    /// The extracted algebra fails an axiom.
    ExtractedAlgebra,
    /// `X` is not isomorphic to the nerve of the extracted algebra.
    NerveIsomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub condition: Condition,
    pub detail: String,
    pub witness: Option<ShapeVerdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Characterization {
    pub accepted: bool,
    #[serde(skip)]
    pub algebra: Option<FrobeniusAlgebra>,
    pub failure: Option<Rejection>,
    /// Verdict with the uniqueness requirements of the boundary condition
    /// dropped; expected to equal `accepted`.
    pub accepted_without_boundary_uniqueness: bool,
    /// Frobenius-identity violations of the extracted relations found while
    /// the ε-horn and Frobenius-identity lifting conditions hold.
    pub consistency_violations: Vec<String>,
    #[serde(skip)]
    pub nerve_iso: Option<SimplicialMap>,
}

struct Checks {
    horns: Option<ShapeVerdict>,
    boundary_unique: Option<ShapeVerdict>,
    boundary_exists: Option<ShapeVerdict>,
    completion_injective: bool,
    completion_surjective: bool,
    frobenius: Option<ShapeVerdict>,
}

fn first_failure(
    x: &EpsSimplicialSet,
    shapes: impl IntoIterator<Item = ShapeName>,
    mode: Mode,
) -> Result<Option<ShapeVerdict>> {
    for s in shapes {
        let inc = s.realize(x.trunc_dim())?;
        let v = verdict(&s.to_string(), &inc, x, mode);
        if !v.holds {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

fn run_checks(x: &EpsSimplicialSet) -> Result<Checks> {
    let k = x.trunc_dim();
    let top = k.min(4);
    let horn_shapes = (1..=top).flat_map(|n| [ShapeName::EpsHorn(n, 0), ShapeName::EpsHorn(n, n)]);
    let horns = first_failure(x, horn_shapes, Mode::Unique)?;
    let boundary = || (3..=top).map(ShapeName::BoundaryDelta);
    let boundary_unique = first_failure(x, boundary(), Mode::Unique)?;
    let boundary_exists = first_failure(x, boundary(), Mode::Exists)?;
    let completed = coskeletal_completion(x, k)?;
    let (completion_injective, completion_surjective) = match face_tuple_map(x, &completed) {
        None => (false, false),
        Some(m) => {
            let inj = m.is_injective();
            let surj = (0..=k).all(|d| {
                let mut img = m.cells[d].clone();
                img.sort_unstable();
                img.dedup();
                img.len() == completed.count(d)
            });
            (inj, surj)
        }
    };
    let frobenius = if k >= 4 {
        first_failure(x, [ShapeName::FaceUnionSigma(4, vec![1, 3])], Mode::Exists)?
    } else {
        None
    };
    Ok(Checks {
        horns,
        boundary_unique,
        boundary_exists,
        completion_injective,
        completion_surjective,
        frobenius,
    })
}

/// Decides whether `X` is (isomorphic to) the nerve of a Frobenius algebra,
/// and if so reconstructs the algebra on the edge set of `X`.
pub fn characterize(x: &EpsSimplicialSet) -> Result<Characterization> {
    if x.trunc_dim() < 4 {
        return Err(Error::input("characterization needs cells up to dimension 4"));
    }
    let report = x.validate();
    if !report.ok {
        return Err(Error::input(report.violation.unwrap_or_default()));
    }
    let c = run_checks(x)?;
    let strict_ok = c.horns.is_none()
        && c.boundary_unique.is_none()
        && c.completion_injective
        && c.completion_surjective
        && c.frobenius.is_none();
    let relaxed_ok =
        c.horns.is_none() && c.boundary_exists.is_none() && c.completion_surjective && c.frobenius.is_none();

    let mut consistency_violations = Vec::new();
    if c.horns.is_none() && c.frobenius.is_none() {
        if let Ok(f) = extract_structure(x).to_frobenius() {
            let r = f.check_frobenius_identity();
            if !r.ok {
                consistency_violations.push(format!(
                    "{} at {}",
                    r.violated_axiom.expect("violation"),
                    r.witness.unwrap_or_default().join(", ")
                ));
            }
        }
    }

    let reject = |condition, detail: &str, witness| Characterization {
        accepted: false,
        algebra: None,
        failure: Some(Rejection {
            condition,
            detail: detail.to_string(),
            witness,
        }),
        accepted_without_boundary_uniqueness: relaxed_ok,
        consistency_violations: consistency_violations.clone(),
        nerve_iso: None,
    };
    if let Some(v) = c.horns {
        return Ok(reject(
            Condition::EpsHornExtension,
            "an ε-horn lacks a unique filler",
            Some(v),
        ));
    }
    if let Some(v) = c.boundary_unique {
        return Ok(reject(
            Condition::BoundaryExtension,
            "a simplex boundary lacks a unique filler",
            Some(v),
        ));
    }
    if !(c.completion_injective && c.completion_surjective) {
        return Ok(reject(
            Condition::CoskeletalAgreement,
            "higher cells are not determined by their boundaries",
            None,
        ));
    }
    if let Some(v) = c.frobenius {
        return Ok(reject(
            Condition::FrobeniusIdentity,
            "the Frobenius-identity shape does not extend",
            Some(v),
        ));
    }
    debug_assert!(strict_ok);

    let f = extract_structure(x).to_frobenius()?;
    let r = f.check();
    if !r.ok {
        let detail = format!(
            "{} fails at {}",
            r.violated_axiom.expect("violation"),
            r.witness.unwrap_or_default().join(", ")
        );
        return Ok(reject(Condition::ExtractedAlgebra, &detail, None));
    }
    let nf = nerve_frobenius(&f, x.trunc_dim())?;
    let identity: Vec<usize> = (0..f.len()).collect();
    let iso = nerve_map(&identity, x, &nf).filter(|m| m.is_bijective(&nf));
    let Some(iso) = iso else {
        return Ok(reject(
            Condition::NerveIsomorphism,
            "no isomorphism onto the nerve",
            None,
        ));
    };
    Ok(Characterization {
        accepted: true,
        algebra: Some(f),
        failure: None,
        accepted_without_boundary_uniqueness: relaxed_ok,
        consistency_violations,
        nerve_iso: Some(iso),
    })
}

/// `characterize(N(f))` and an isomorphism back to `f`, if any.
pub fn roundtrip(f: &FrobeniusAlgebra, k: usize) -> Result<(Characterization, Option<Vec<usize>>)> {
    let x = nerve_frobenius(f, k)?;
    let ch = characterize(&x)?;
    let iso = ch.algebra.as_ref().and_then(|g| find_isomorphism(f, g));
    Ok((ch, iso))
}

/// Exists-mode check used by callers that only need a yes/no answer.
pub fn extends(x: &EpsSimplicialSet, shape: &ShapeName, mode: Mode) -> Result<bool> {
    let inc = shape.realize(x.trunc_dim())?;
    Ok(check_extension(&inc, x, mode, 1).holds)
}
