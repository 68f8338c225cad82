use std::collections::BTreeSet;

use serde::Serialize;

use super::{first_difference, Axiom, AxiomReport, RelMonoid, Triple};
use crate::{Error, Result};

/// A Frobenius algebra in **Rel**: a relational monoid `(μ, η)` together
/// with a comultiplication `δ` and counit elements `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusAlgebra {
    monoid: RelMonoid,
    delta: BTreeSet<Triple>,
    epsilon: BTreeSet<usize>,
}

/// The rotations `α̂` and `β̂` read off from `α = ε ∘ μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaBeta {
    pub alpha_hat: Vec<usize>,
    pub beta_hat: Vec<usize>,
}

impl FrobeniusAlgebra {
    pub fn new(
        monoid: RelMonoid,
        delta: impl IntoIterator<Item = Triple>,
        epsilon: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let n = monoid.len();
        let delta: BTreeSet<Triple> = delta.into_iter().collect();
        let epsilon: BTreeSet<usize> = epsilon.into_iter().collect();
        if let Some(&(a, b, c)) = delta.iter().find(|&&(a, b, c)| a >= n || b >= n || c >= n) {
            return Err(Error::input(format!("delta triple ({a}, {b}, {c}) out of range")));
        }
        if let Some(&e) = epsilon.iter().find(|&&e| e >= n) {
            return Err(Error::input(format!("counit id {e} out of range")));
        }
        Ok(FrobeniusAlgebra {
            monoid,
            delta,
            epsilon,
        })
    }

    pub fn from_named<S: AsRef<str>>(
        elements: &[S],
        mu: &[[S; 3]],
        eta: &[S],
        delta: &[[S; 3]],
        epsilon: &[S],
    ) -> Result<Self> {
        let monoid = RelMonoid::from_named(elements, mu, eta)?;
        let lookup = |s: &str| {
            monoid
                .index_of(s)
                .ok_or_else(|| Error::input(format!("unknown element `{s}`")))
        };
        let delta = delta
            .iter()
            .map(|[a, b, c]| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?, lookup(c.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        let epsilon = epsilon
            .iter()
            .map(|e| lookup(e.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        FrobeniusAlgebra::new(monoid, delta, epsilon)
    }

    /// Builds the unique comultiplication compatible with `μ`, `η` and the
    /// given counit: `δ: x ⇸ (y, z)` iff `μ: (x, α̂(z)) ⇸ y`.
    pub fn from_monoid_and_counit(
        monoid: RelMonoid,
        epsilon: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let draft = FrobeniusAlgebra::new(monoid, [], epsilon)?;
        let ab = draft.alpha_beta()?;
        let n = draft.len();
        let mut delta = BTreeSet::new();
        for x in 0..n {
            for z in 0..n {
                for &y in draft.monoid.products(x, ab.alpha_hat[z]) {
                    delta.insert((x, y, z));
                }
            }
        }
        FrobeniusAlgebra::new(draft.monoid, delta, draft.epsilon)
    }

    pub fn monoid(&self) -> &RelMonoid {
        &self.monoid
    }

    pub fn len(&self) -> usize {
        self.monoid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monoid.is_empty()
    }

    pub fn names(&self) -> &[String] {
        self.monoid.names()
    }

    pub fn name(&self, a: usize) -> &str {
        self.monoid.name(a)
    }

    pub fn mu(&self) -> &BTreeSet<Triple> {
        self.monoid.mu()
    }

    pub fn eta(&self) -> &BTreeSet<usize> {
        self.monoid.eta()
    }

    pub fn delta(&self) -> &BTreeSet<Triple> {
        &self.delta
    }

    pub fn epsilon(&self) -> &BTreeSet<usize> {
        &self.epsilon
    }

    pub fn is_counit(&self, a: usize) -> bool {
        self.epsilon.contains(&a)
    }

    /// Unit, counit, Frobenius identity, then (co)associativity.
    ///
    /// Associativity follows from the other axioms, so a failure there with
    /// everything else passing points at a bug rather than bad input.
    pub fn check(&self) -> AxiomReport {
        let m = &self.monoid;
        if let Some(r) = m.check_units() {
            return r;
        }
        if let Some(r) = self.check_counits() {
            return r;
        }
        if let Some((axiom, w)) = self.frobenius_witness() {
            return AxiomReport::violation(axiom, m.names_of(&w));
        }
        if let Some(w) = m.associativity_witness() {
            return AxiomReport::violation(Axiom::Associativity, m.names_of(&w));
        }
        if let Some(w) = self.coassociativity_witness() {
            return AxiomReport::violation(Axiom::Coassociativity, m.names_of(&w));
        }
        AxiomReport::ok()
    }

    /// Only the Frobenius identity, as equality of the three composites.
    pub fn check_frobenius_identity(&self) -> AxiomReport {
        match self.frobenius_witness() {
            Some((axiom, w)) => AxiomReport::violation(axiom, self.monoid.names_of(&w)),
            None => AxiomReport::ok(),
        }
    }

    fn check_counits(&self) -> Option<AxiomReport> {
        let n = self.len();
        let mut left = vec![BTreeSet::new(); n];
        let mut right = vec![BTreeSet::new(); n];
        for &(x, y, z) in &self.delta {
            // (ε × id) ∘ δ
            if self.is_counit(y) {
                left[x].insert(z);
            }
            // (id × ε) ∘ δ
            if self.is_counit(z) {
                right[x].insert(y);
            }
        }
        for (axiom, table) in [(Axiom::LeftCounit, &left), (Axiom::RightCounit, &right)] {
            for (x, hits) in table.iter().enumerate() {
                let w = if !hits.contains(&x) {
                    Some(vec![x])
                } else {
                    hits.iter().find(|&&y| y != x).map(|&y| vec![x, y])
                };
                if let Some(w) = w {
                    return Some(AxiomReport::violation(axiom, self.monoid.names_of(&w)));
                }
            }
        }
        None
    }

    /// Compares the three composites of the Frobenius identity as relations
    /// `X × X ⇸ X × X`, stored as tuples `(a, b, c, d)` for `(a, b) ↦ (c, d)`.
    fn frobenius_witness(&self) -> Option<(Axiom, Vec<usize>)> {
        let m = &self.monoid;
        let n = self.len();
        let mut by_source: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for &(x, y, z) in &self.delta {
            by_source[x].push((y, z));
        }
        // (μ, id) ∘ (id, δ): b ⇸ (c, d), then (a, c) ⇸ e
        let mut left = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                for &(c, d) in &by_source[b] {
                    for &e in m.products(a, c) {
                        left.insert((a, b, e, d));
                    }
                }
            }
        }
        // δ ∘ μ
        let mut middle = BTreeSet::new();
        for &(a, b, x) in m.mu() {
            for &(e, d) in &by_source[x] {
                middle.insert((a, b, e, d));
            }
        }
        // (id, μ) ∘ (δ, id): a ⇸ (e, c), then (c, b) ⇸ d
        let mut right = BTreeSet::new();
        for a in 0..n {
            for &(e, c) in &by_source[a] {
                for b in 0..n {
                    for &d in m.products(c, b) {
                        right.insert((a, b, e, d));
                    }
                }
            }
        }
        if let Some((a, b, c, d)) = first_difference(&left, &middle) {
            return Some((Axiom::FrobeniusLeft, vec![a, b, c, d]));
        }
        first_difference(&middle, &right).map(|(a, b, c, d)| (Axiom::FrobeniusRight, vec![a, b, c, d]))
    }

    fn coassociativity_witness(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut by_source: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for &(x, y, z) in &self.delta {
            by_source[x].push((y, z));
        }
        let mut left = BTreeSet::new();
        let mut right = BTreeSet::new();
        for &(x, y, z) in &self.delta {
            for &(p, q) in &by_source[y] {
                left.insert((x, p, q, z));
            }
            for &(q, r) in &by_source[z] {
                right.insert((x, y, q, r));
            }
        }
        first_difference(&left, &right).map(|(a, b, c, d)| vec![a, b, c, d])
    }

    /// The relation `α = ε ∘ μ ⊆ X × X`.
    pub fn alpha(&self) -> BTreeSet<(usize, usize)> {
        self.mu()
            .iter()
            .filter(|&&(_, _, c)| self.is_counit(c))
            .map(|&(a, b, _)| (a, b))
            .collect()
    }

    /// `α̂(x)` is the unique `y` with `(x, y) ∈ α`; `β̂(y)` the unique `x`.
    /// Fails when `α` is not the graph of a bijection.
    pub fn alpha_beta(&self) -> Result<AlphaBeta> {
        let n = self.len();
        let mut alpha_hat = vec![None; n];
        let mut beta_hat = vec![None; n];
        for (x, y) in self.alpha() {
            if alpha_hat[x].replace(y).is_some() {
                return Err(Error::NotFrobenius(format!(
                    "alpha is not functional at `{}`",
                    self.name(x)
                )));
            }
            if beta_hat[y].replace(x).is_some() {
                return Err(Error::NotFrobenius(format!(
                    "alpha is not injective at `{}`",
                    self.name(y)
                )));
            }
        }
        let total = |v: Vec<Option<usize>>, what: &str| -> Result<Vec<usize>> {
            v.into_iter()
                .enumerate()
                .map(|(i, y)| {
                    y.ok_or_else(|| Error::NotFrobenius(format!("{what} undefined at `{}`", self.name(i))))
                })
                .collect()
        };
        Ok(AlphaBeta {
            alpha_hat: total(alpha_hat, "alpha-hat")?,
            beta_hat: total(beta_hat, "beta-hat")?,
        })
    }

    /// Checks `δ: x ⇸ (y, z) ⇔ μ: (x, α̂(z)) ⇸ y ⇔ μ: (β̂(y), x) ⇸ z` on all
    /// triples. Returns the first failing triple.
    pub fn delta_recovery_witness(&self) -> Result<Option<Triple>> {
        let ab = self.alpha_beta()?;
        let m = &self.monoid;
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let d = self.delta.contains(&(x, y, z));
                    let l = m.relates(x, ab.alpha_hat[z], y);
                    let r = m.relates(ab.beta_hat[y], x, z);
                    if d != l || l != r {
                        return Ok(Some((x, y, z)));
                    }
                }
            }
        }
        Ok(None)
    }
}
