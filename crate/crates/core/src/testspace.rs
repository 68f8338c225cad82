//! Test spaces from quantum logic and their ε-simplicial presentation.
//!
//! Events and tests are bitmasks over the outcome list. An `n`-cell is an
//! `n`-tuple of pairwise disjoint events whose union lies in some test;
//! `d₀` drops the first entry, `dₙ` the last, an inner `dᵢ` merges entries
//! `i` and `i+1` (1-based), and `sᵢ` inserts `∅` as the new entry `i+1`.
//! Tests are the ε-witnesses, each on its own 1-tuple.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::lifting::{check_extension, LiftingReport, Mode};
use crate::shapes::{marked_simplex, Inclusion};
use crate::simplicial::{EpsSimplicialSet, SSetParts, Subobject};
use crate::{Error, Result};

pub type Event = u64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestSpaceInput {
    pub outcomes: Vec<String>,
    pub tests: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestSpace {
    outcomes: Vec<String>,
    tests: Vec<Event>,
}

/// A quadruple violating algebraicity: `B` is a local orthocomplement of
/// `A`, `C` of `B` and `D` of `C`, but `D` is not one of `A` (they overlap
/// or `A∪D` is not a test).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraicityReport {
    pub algebraic: bool,
    pub witness: Option<[String; 4]>,
}

impl TestSpace {
    pub fn new(outcomes: Vec<String>, tests: Vec<Event>) -> Result<Self> {
        if outcomes.len() > 64 {
            return Err(Error::input("at most 64 outcomes are supported"));
        }
        let full: Event = if outcomes.len() == 64 {
            !0
        } else {
            (1 << outcomes.len()) - 1
        };
        if tests.iter().any(|&t| t & !full != 0) {
            return Err(Error::input("test mentions an unknown outcome"));
        }
        if !outcomes.is_empty() && tests.contains(&0) {
            return Err(Error::input("empty test in a test space with outcomes"));
        }
        let union = tests.iter().fold(0, |acc, &t| acc | t);
        if union != full {
            return Err(Error::input("tests do not cover the outcome set"));
        }
        let mut seen = HashSet::new();
        for o in &outcomes {
            if !seen.insert(o) {
                return Err(Error::input(format!("duplicate outcome `{o}`")));
            }
        }
        let tests: BTreeSet<Event> = tests.into_iter().collect();
        Ok(TestSpace {
            outcomes,
            tests: tests.into_iter().collect(),
        })
    }

    pub fn from_input(input: &TestSpaceInput) -> Result<Self> {
        let index: HashMap<&str, usize> = input
            .outcomes
            .iter()
            .enumerate()
            .map(|(i, o)| (o.as_str(), i))
            .collect();
        let tests = input
            .tests
            .iter()
            .map(|t| {
                t.iter().try_fold(0, |acc, o| {
                    index
                        .get(o.as_str())
                        .map(|&i| acc | 1 << i)
                        .ok_or_else(|| Error::input(format!("unknown outcome `{o}`")))
                })
            })
            .collect::<Result<Vec<Event>>>()?;
        TestSpace::new(input.outcomes.clone(), tests)
    }

    pub fn to_input(&self) -> TestSpaceInput {
        TestSpaceInput {
            outcomes: self.outcomes.clone(),
            tests: self
                .tests
                .iter()
                .map(|&t| {
                    self.members(t)
                        .into_iter()
                        .map(|i| self.outcomes[i].clone())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn tests(&self) -> &[Event] {
        &self.tests
    }

    pub fn is_test(&self, e: Event) -> bool {
        self.tests.binary_search(&e).is_ok()
    }

    fn members(&self, e: Event) -> Vec<usize> {
        (0..self.outcomes.len()).filter(|&i| e >> i & 1 == 1).collect()
    }

    pub fn event_name(&self, e: Event) -> String {
        let inner: Vec<&str> = self
            .members(e)
            .iter()
            .map(|&i| self.outcomes[i].as_str())
            .collect();
        format!("{{{}}}", inner.join(","))
    }

    /// All subsets of all tests, ascending.
    pub fn events(&self) -> Vec<Event> {
        let mut out = BTreeSet::new();
        for &t in &self.tests {
            let mut s = t;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & t;
            }
        }
        out.into_iter().collect()
    }

    /// Scans every quadruple. For fixed `B` and `C` the events `A` and `D`
    /// are determined by the tests `A∪B` and `C∪D`, so it suffices to range
    /// over splittings of a test into `B ⊔ C` and over tests containing `B`
    /// and `C`.
    pub fn check_algebraicity(&self) -> AlgebraicityReport {
        for &t2 in &self.tests {
            let mut b = t2;
            loop {
                let c = t2 & !b;
                for &t1 in self.tests.iter().filter(|&&t| t & b == b) {
                    let a = t1 & !b;
                    for &t3 in self.tests.iter().filter(|&&t| t & c == c) {
                        let d = t3 & !c;
                        if a & d != 0 || !self.is_test(a | d) {
                            return AlgebraicityReport {
                                algebraic: false,
                                witness: Some([a, b, c, d].map(|e| self.event_name(e))),
                            };
                        }
                    }
                }
                if b == 0 {
                    break;
                }
                b = (b - 1) & t2;
            }
        }
        AlgebraicityReport {
            algebraic: true,
            witness: None,
        }
    }

    /// The ε-simplicial set of disjoint event tuples, stored up to `k`.
    pub fn to_sset(&self, k: usize) -> EpsSimplicialSet {
        let mut levels: Vec<Vec<Vec<Event>>> = Vec::with_capacity(k + 1);
        for n in 0..=k {
            let mut set: BTreeSet<Vec<Event>> = BTreeSet::new();
            for &t in &self.tests {
                let m = self.members(t);
                let mut tuple = vec![0; n];
                fill(&m, 0, &mut tuple, &mut set);
            }
            // Without tests the all-∅ tuples still form a point.
            set.insert(vec![0; n]);
            levels.push(set.into_iter().collect());
        }
        let index: Vec<HashMap<Vec<Event>, usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect())
            .collect();
        let mut parts = SSetParts::default();
        for n in 0..=k {
            let cells = &levels[n];
            parts.names.push(
                cells
                    .iter()
                    .map(|t| {
                        let inner: Vec<String> = t.iter().map(|&e| self.event_name(e)).collect();
                        format!("({})", inner.join(","))
                    })
                    .collect(),
            );
            let faces = if n == 0 { 0 } else { n + 1 };
            parts.face.push(
                (0..faces)
                    .map(|i| {
                        cells
                            .iter()
                            .map(|t| {
                                let mut f = t.clone();
                                if i == 0 {
                                    f.remove(0);
                                } else if i == n {
                                    f.pop();
                                } else {
                                    let merged = f[i - 1] | f[i];
                                    f.remove(i);
                                    f[i - 1] = merged;
                                }
                                index[n - 1][&f]
                            })
                            .collect()
                    })
                    .collect(),
            );
            let degens = if n < k { n + 1 } else { 0 };
            parts.degen.push(
                (0..degens)
                    .map(|i| {
                        cells
                            .iter()
                            .map(|t| {
                                let mut s = t.clone();
                                s.insert(i, 0);
                                index[n + 1][&s]
                            })
                            .collect()
                    })
                    .collect(),
            );
        }
        if k >= 1 {
            for &t in &self.tests {
                parts.eps_names.push(self.event_name(t));
                parts.eps_edge.push(index[1][&vec![t]]);
            }
        }
        EpsSimplicialSet::new(parts).expect("test-space tables are well-formed")
    }
}

// Distributes the outcomes of one test over the tuple entries or leaves
// them out.
fn fill(members: &[usize], pos: usize, tuple: &mut Vec<Event>, out: &mut BTreeSet<Vec<Event>>) {
    if pos == members.len() {
        out.insert(tuple.clone());
        return;
    }
    fill(members, pos + 1, tuple, out);
    for j in 0..tuple.len() {
        tuple[j] |= 1 << members[pos];
        fill(members, pos + 1, tuple, out);
        tuple[j] &= !(1 << members[pos]);
    }
}

/// The lifting problem encoding algebraicity, on vertices ordered
/// `x < z < o < y < w`: the domain has the triangles `xoy`, `zoy`, `zow`
/// with ε-edges `xy`, `zy`, `zw`; the codomain adds the triangle `xow` and
/// the ε-edge `xw`.
pub fn algebraicity_shape() -> Inclusion {
    let labels: Vec<String> = ["x", "z", "o", "y", "w"].iter().map(|s| s.to_string()).collect();
    let (x, z, y, w) = (0, 1, 3, 4);
    let parent =
        Arc::new(marked_simplex(4, 2, &labels, &[(x, y), (z, y), (z, w), (x, w)]).expect("valid shape"));
    let tri = |name: &str| (2, parent.index_of(2, name).expect("triangle exists"));
    let eps = |name: &str| parent.eps_index_of(name).expect("witness exists");
    let inner = Subobject::generated(
        parent.clone(),
        &[tri("xoy"), tri("zoy"), tri("zow")],
        &[eps("exy"), eps("ezy"), eps("ezw")],
    );
    let outer = Subobject::generated(
        parent.clone(),
        &[tri("xoy"), tri("zoy"), tri("zow"), tri("xow")],
        &[eps("exy"), eps("ezy"), eps("ezw"), eps("exw")],
    );
    Inclusion::between(&outer, &inner).expect("domain sits inside codomain")
}

pub fn algebraicity_as_lifting(t: &TestSpace) -> LiftingReport {
    check_extension(&algebraicity_shape(), &t.to_sset(2), Mode::Exists, 1)
}

/// All test spaces on exactly `0..=max_outcomes` outcomes (named `a`, `b`,
/// ...) with at most `max_tests` tests, one per relabelling class.
pub fn enumerate_test_spaces(max_outcomes: usize, max_tests: usize) -> Vec<TestSpace> {
    assert!(
        max_outcomes <= 8,
        "exhaustive generation is limited to 8 outcomes"
    );
    let mut out = vec![TestSpace::new(Vec::new(), Vec::new()).expect("empty space")];
    if max_tests >= 1 {
        out.push(TestSpace::new(Vec::new(), vec![0]).expect("space with the empty test"));
    }
    for n in 1..=max_outcomes {
        let outcomes: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let full: Event = (1 << n) - 1;
        let perms = permutations(n);
        let relabel: Vec<Vec<Event>> = perms
            .iter()
            .map(|p| {
                (0..=full)
                    .map(|m| {
                        (0..n)
                            .filter(|&i| m >> i & 1 == 1)
                            .fold(0, |acc, i| acc | 1 << p[i])
                    })
                    .collect()
            })
            .collect();
        let canonical = |tests: &[Event]| -> Vec<Event> {
            relabel
                .iter()
                .map(|r| {
                    let mut v: Vec<Event> = tests.iter().map(|&t| r[t as usize]).collect();
                    v.sort_unstable();
                    v
                })
                .min()
                .expect("at least one permutation")
        };
        let mut seen: BTreeSet<Vec<Event>> = BTreeSet::new();
        let mut stack: Vec<Event> = Vec::new();
        combinations(1, full, max_tests, &mut stack, &mut |tests| {
            if tests.iter().fold(0, |acc, &t| acc | t) == full {
                seen.insert(canonical(tests));
            }
        });
        out.extend(
            seen.into_iter()
                .map(|tests| TestSpace::new(outcomes.clone(), tests).expect("generated space is valid")),
        );
    }
    out
}

fn combinations(
    next: Event,
    full: Event,
    left: usize,
    stack: &mut Vec<Event>,
    visit: &mut dyn FnMut(&[Event]),
) {
    if !stack.is_empty() {
        visit(stack);
    }
    if left == 0 {
        return;
    }
    for m in next..=full {
        stack.push(m);
        combinations(m + 1, full, left - 1, stack, visit);
        stack.pop();
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(outcomes: &[&str], tests: &[&[&str]]) -> TestSpace {
        TestSpace::from_input(&TestSpaceInput {
            outcomes: outcomes.iter().map(|s| s.to_string()).collect(),
            tests: tests
                .iter()
                .map(|t| t.iter().map(|s| s.to_string()).collect())
                .collect(),
        })
        .unwrap()
    }

    #[test]
    fn single_test_events() {
        let t = space(&["a", "b"], &[&["a", "b"]]);
        assert_eq!(t.events(), vec![0, 1, 2, 3]);
        assert!(t.check_algebraicity().algebraic);
    }

    #[test]
    fn overlapping_tests_events() {
        let t = space(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]);
        assert_eq!(t.events().len(), 6);
    }

    #[test]
    fn generated_spaces_on_two_outcomes() {
        // {ab}, {a,b}, {a,ab} (same class as {b,ab}) and {a,b,ab}.
        let spaces = enumerate_test_spaces(2, 3);
        let two: Vec<_> = spaces.iter().filter(|t| t.outcomes().len() == 2).collect();
        assert_eq!(two.len(), 4);
    }

    #[test]
    fn empty_test_rejected() {
        let r = TestSpace::from_input(&TestSpaceInput {
            outcomes: vec!["a".into()],
            tests: vec![vec!["a".into()], vec![]],
        });
        assert!(r.is_err());
    }

    #[test]
    fn singleton_sset() {
        let t = space(&["a"], &[&["a"]]);
        let x = t.to_sset(2);
        assert!(x.validate().ok);
        assert_eq!(x.names(1), &["({})".to_string(), "({a})".to_string()]);
        assert_eq!(x.eps_len(), 1);
        assert_eq!(x.name(1, x.eps_edge(0)), "({a})");
    }

    #[test]
    fn empty_space_is_a_point() {
        let t = TestSpace::new(vec![], vec![0]).unwrap();
        let x = t.to_sset(3);
        for d in 0..=3 {
            assert_eq!(x.count(d), 1);
        }
        assert_eq!(x.eps_len(), 1);
        let none = TestSpace::new(vec![], vec![]).unwrap().to_sset(2);
        assert_eq!(none.eps_len(), 0);
    }

    #[test]
    fn shape_counts() {
        let inc = algebraicity_shape();
        assert_eq!(inc.domain.nondegenerate(2).len(), 3);
        assert_eq!(inc.codomain.nondegenerate(2).len(), 4);
        assert_eq!(inc.domain.eps_len(), 3);
        assert_eq!(inc.codomain.eps_len(), 4);
        assert_eq!(inc.codomain.nondegenerate(1).len(), 8);
    }
}
