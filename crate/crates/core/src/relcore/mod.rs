//! Relational monoids and Frobenius algebras in **Rel**.
//!
//! Elements are dense indices internally; every report translates them back
//! to the user-facing names.

mod constructors;
mod frobenius;
mod hom;
mod monoid;

pub use constructors::{
    from_effect_algebra, from_effect_algebroid, from_groupoid, EffectAlgebraInput, EffectAlgebroidInput,
    GroupoidInput, MorphismDecl,
};
pub use frobenius::{AlphaBeta, FrobeniusAlgebra};
pub use hom::{
    enumerate_frobenius_homs, enumerate_monoid_homs, find_isomorphism, is_frobenius_hom, is_monoid_hom,
};
pub use monoid::RelMonoid;

use serde::Serialize;

/// `(a, b, c)`: for μ this reads `μ: (a, b) ⇸ c`, for δ it reads `δ: a ⇸ (b, c)`.
pub type Triple = (usize, usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    LeftUnit,
    RightUnit,
    Associativity,
    LeftCounit,
    RightCounit,
    Coassociativity,
    /// `(μ, id) ∘ (id, δ) = δ ∘ μ`
    FrobeniusLeft,
    /// `δ ∘ μ = (id, μ) ∘ (δ, id)`
    FrobeniusRight,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::LeftUnit => "left unit",
            Axiom::RightUnit => "right unit",
            Axiom::Associativity => "associativity",
            Axiom::LeftCounit => "left counit",
            Axiom::RightCounit => "right counit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::FrobeniusLeft => "Frobenius identity (left)",
            Axiom::FrobeniusRight => "Frobenius identity (right)",
        };
        f.write_str(s)
    }
}

/// Outcome of an axiom scan. The witness is the first violating tuple in
/// lexicographic order of element ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub ok: bool,
    pub violated_axiom: Option<Axiom>,
    pub witness: Option<Vec<String>>,
}

impl AxiomReport {
    pub fn ok() -> Self {
        AxiomReport {
            ok: true,
            violated_axiom: None,
            witness: None,
        }
    }

    pub fn violation(axiom: Axiom, witness: Vec<String>) -> Self {
        AxiomReport {
            ok: false,
            violated_axiom: Some(axiom),
            witness: Some(witness),
        }
    }
}

/// Compares two finite relations and returns the first tuple in their
/// symmetric difference.
pub(crate) fn first_difference<T: Ord + Clone>(
    lhs: &std::collections::BTreeSet<T>,
    rhs: &std::collections::BTreeSet<T>,
) -> Option<T> {
    lhs.symmetric_difference(rhs).next().cloned()
}
