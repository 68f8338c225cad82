use std::collections::{BTreeSet, HashMap};

use super::{first_difference, Axiom, AxiomReport, Triple};
use crate::{Error, Result};

/// A finite monoid in **Rel**: a carrier with a multivalued multiplication
/// `μ ⊆ X × X × X` and a set of unit elements `η ⊆ X`.
#[derive(Clone, Debug)]
pub struct RelMonoid {
    names: Vec<String>,
    index: HashMap<String, usize>,
    mu: BTreeSet<Triple>,
    eta: BTreeSet<usize>,
    // products[a][b] = sorted list of c with μ: (a, b) ⇸ c
    products: Vec<Vec<Vec<usize>>>,
}

impl PartialEq for RelMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.mu == other.mu && self.eta == other.eta
    }
}

impl Eq for RelMonoid {}

impl RelMonoid {
    /// Builds a monoid from dense ids. Only well-formedness is checked here;
    /// the axioms are checked by [`RelMonoid::check`].
    pub fn new(
        names: Vec<String>,
        mu: impl IntoIterator<Item = Triple>,
        eta: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::input("carrier must be nonempty"));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate element `{n}`")));
            }
        }
        let n = names.len();
        let mu: BTreeSet<Triple> = mu.into_iter().collect();
        let eta: BTreeSet<usize> = eta.into_iter().collect();
        if let Some(&(a, b, c)) = mu.iter().find(|&&(a, b, c)| a >= n || b >= n || c >= n) {
            return Err(Error::input(format!("mu triple ({a}, {b}, {c}) out of range")));
        }
        if let Some(&r) = eta.iter().find(|&&r| r >= n) {
            return Err(Error::input(format!("unit id {r} out of range")));
        }
        let mut products = vec![vec![Vec::new(); n]; n];
        for &(a, b, c) in &mu {
            products[a][b].push(c);
        }
        Ok(RelMonoid {
            names,
            index,
            mu,
            eta,
            products,
        })
    }

    /// Builds a monoid from element names; dangling names are input errors.
    pub fn from_named<S: AsRef<str>>(elements: &[S], mu: &[[S; 3]], eta: &[S]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let lookup = name_lookup(&names)?;
        let mu = mu
            .iter()
            .map(|[a, b, c]| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?, lookup(c.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        let eta = eta
            .iter()
            .map(|r| lookup(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        drop(lookup);
        RelMonoid::new(names, mu, eta)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn mu(&self) -> &BTreeSet<Triple> {
        &self.mu
    }

    pub fn eta(&self) -> &BTreeSet<usize> {
        &self.eta
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.eta.contains(&a)
    }

    /// All `c` with `μ: (a, b) ⇸ c`, ascending.
    pub fn products(&self, a: usize, b: usize) -> &[usize] {
        &self.products[a][b]
    }

    pub fn relates(&self, a: usize, b: usize, c: usize) -> bool {
        self.products[a][b].binary_search(&c).is_ok()
    }

    pub(crate) fn names_of(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Unit law and associativity, in that order.
    pub fn check(&self) -> AxiomReport {
        if let Some(r) = self.check_units() {
            return r;
        }
        if let Some(w) = self.associativity_witness() {
            return AxiomReport::violation(Axiom::Associativity, self.names_of(&w));
        }
        AxiomReport::ok()
    }

    pub(crate) fn check_units(&self) -> Option<AxiomReport> {
        // μ ∘ (η × id) = id
        for a in 0..self.len() {
            let hits: BTreeSet<usize> = self
                .eta
                .iter()
                .flat_map(|&r| self.products(r, a).iter().copied())
                .collect();
            if let Some(w) = unit_witness(a, &hits) {
                return Some(AxiomReport::violation(Axiom::LeftUnit, self.names_of(&w)));
            }
        }
        // μ ∘ (id × η) = id
        for a in 0..self.len() {
            let hits: BTreeSet<usize> = self
                .eta
                .iter()
                .flat_map(|&r| self.products(a, r).iter().copied())
                .collect();
            if let Some(w) = unit_witness(a, &hits) {
                return Some(AxiomReport::violation(Axiom::RightUnit, self.names_of(&w)));
            }
        }
        None
    }

    /// First `(a, b, c, d)` in the symmetric difference of
    /// `μ ∘ (μ × id)` and `μ ∘ (id × μ)`.
    pub(crate) fn associativity_witness(&self) -> Option<Vec<usize>> {
        let mut left = BTreeSet::new();
        for &(a, b, x) in &self.mu {
            for c in 0..self.len() {
                for &d in self.products(x, c) {
                    left.insert((a, b, c, d));
                }
            }
        }
        let mut right = BTreeSet::new();
        for &(b, c, y) in &self.mu {
            for a in 0..self.len() {
                for &d in self.products(a, y) {
                    right.insert((a, b, c, d));
                }
            }
        }
        first_difference(&left, &right).map(|(a, b, c, d)| vec![a, b, c, d])
    }

    /// Source and target units of `a`: `μ: (a, s) ⇸ a` and `μ: (t, a) ⇸ a`.
    /// Returns `(s, t)`.
    pub fn source_target(&self, a: usize) -> Result<(usize, usize)> {
        let unique = |it: Vec<usize>, what: &str| -> Result<usize> {
            match it.as_slice() {
                [r] => Ok(*r),
                [] => Err(Error::input(format!("no {what} unit for `{}`", self.names[a]))),
                _ => Err(Error::input(format!(
                    "several {what} units for `{}`",
                    self.names[a]
                ))),
            }
        };
        let s = unique(
            self.eta
                .iter()
                .copied()
                .filter(|&r| self.relates(a, r, a))
                .collect(),
            "source",
        )?;
        let t = unique(
            self.eta
                .iter()
                .copied()
                .filter(|&r| self.relates(r, a, a))
                .collect(),
            "target",
        )?;
        Ok((s, t))
    }

    /// `μ` is a partial operation: at most one product per pair.
    pub fn is_partial(&self) -> bool {
        self.products.iter().flatten().all(|cs| cs.len() <= 1)
    }

    /// Cancellation in the first coordinate:
    /// `μ: (a₁, b) ⇸ c` and `μ: (a₂, b) ⇸ c` imply `a₁ = a₂`.
    pub fn is_left_cancellative(&self) -> bool {
        let mut seen = HashMap::new();
        self.mu
            .iter()
            .all(|&(a, b, c)| *seen.entry((b, c)).or_insert(a) == a)
    }

    /// Cancellation in the second coordinate.
    pub fn is_right_cancellative(&self) -> bool {
        let mut seen = HashMap::new();
        self.mu
            .iter()
            .all(|&(a, b, c)| *seen.entry((a, c)).or_insert(b) == b)
    }
}

fn unit_witness(a: usize, hits: &BTreeSet<usize>) -> Option<Vec<usize>> {
    if !hits.contains(&a) {
        return Some(vec![a]);
    }
    hits.iter().find(|&&c| c != a).map(|&c| vec![a, c])
}

pub(crate) fn name_lookup(names: &[String]) -> Result<impl Fn(&str) -> Result<usize> + '_> {
    let mut index = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.as_str(), i).is_some() {
            return Err(Error::input(format!("duplicate element `{n}`")));
        }
    }
    Ok(move |s: &str| {
        index
            .get(s)
            .copied()
            .ok_or_else(|| Error::input(format!("unknown element `{s}`")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2() -> RelMonoid {
        RelMonoid::from_named(
            &["e", "a"],
            &[
                ["e", "e", "e"],
                ["e", "a", "a"],
                ["a", "e", "a"],
                ["a", "a", "e"],
                ["a", "a", "a"],
            ],
            &["e"],
        )
        .unwrap()
    }

    #[test]
    fn terminal_monoid_is_ok() {
        let m = RelMonoid::from_named(&["e"], &[["e", "e", "e"]], &["e"]).unwrap();
        assert!(m.check().ok);
        assert_eq!(m.source_target(0).unwrap(), (0, 0));
    }

    #[test]
    fn multivalued_m2_is_a_monoid() {
        let m = m2();
        assert_eq!(m.check(), AxiomReport::ok());
        assert!(!m.is_partial());
        assert!(!m.is_left_cancellative());
        assert!(!m.is_right_cancellative());
    }

    #[test]
    fn broken_unit_reports_witness() {
        let m = RelMonoid::from_named(
            &["e", "a"],
            &[["e", "e", "e"], ["a", "e", "a"], ["a", "a", "e"]],
            &["e"],
        )
        .unwrap();
        let r = m.check();
        assert!(!r.ok);
        assert_eq!(r.violated_axiom, Some(Axiom::LeftUnit));
        assert_eq!(r.witness.unwrap()[0], "a");
    }

    #[test]
    fn dangling_names_are_input_errors() {
        let err = RelMonoid::from_named(&["e"], &[["e", "x", "e"]], &["e"]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
        assert!(RelMonoid::from_named::<&str>(&[], &[], &[]).is_err());
    }

    #[test]
    fn non_associative_table_is_caught() {
        // a·a = b, b·a = e, a·b = a: (a·a)·a = e but a·(a·a) = a
        let m = RelMonoid::from_named(
            &["e", "a", "b"],
            &[
                ["e", "e", "e"],
                ["e", "a", "a"],
                ["a", "e", "a"],
                ["e", "b", "b"],
                ["b", "e", "b"],
                ["a", "a", "b"],
                ["b", "a", "e"],
                ["a", "b", "a"],
            ],
            &["e"],
        )
        .unwrap();
        let r = m.check();
        assert_eq!(r.violated_axiom, Some(Axiom::Associativity));
    }
}
