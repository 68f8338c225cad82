//! Reading multiplication, rotation and comultiplication off an
//! ε-simplicial set.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{check_extension, Mode};
use crate::relcore::{FrobeniusAlgebra, RelMonoid, Triple};
use crate::shapes::ShapeName;
use crate::simplicial::EpsSimplicialSet;
use crate::Result;

/// Relations on the edge set `X₁` of an ε-simplicial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractedStructure {
    pub names: Vec<String>,
    /// Degenerate edges.
    pub units: BTreeSet<usize>,
    /// Edges carrying an ε-witness.
    pub counits: BTreeSet<usize>,
    /// `(b, a, c)` for every 2-cell with `d₀ = b`, `d₂ = a`, `d₁ = c`.
    pub mu: BTreeSet<Triple>,
    /// `(b, a)` for every 2-cell with `d₀ = b`, `d₂ = a` and `d₁` an ε-edge.
    pub alpha: BTreeSet<(usize, usize)>,
    /// `(c, a, b)`, i.e. `δ: c ⇸ (a, b)`, whenever some 3-cell has its
    /// `⟨0,3⟩` edge marked, `⟨1,2⟩ = c`, `⟨0,2⟩ = a` and `⟨1,3⟩ = b`.
    pub delta: BTreeSet<Triple>,
}

pub fn extract_structure(x: &EpsSimplicialSet) -> ExtractedStructure {
    let names = x.names(1).to_vec();
    let units = (0..x.count(1)).filter(|&e| x.is_degenerate(1, e)).collect();
    let counits: BTreeSet<usize> = x.eps_edges().into_iter().collect();
    let mut mu = BTreeSet::new();
    let mut alpha = BTreeSet::new();
    if x.trunc_dim() >= 2 {
        for c in 0..x.count(2) {
            let (d0, d1, d2) = (x.face(2, 0, c), x.face(2, 1, c), x.face(2, 2, c));
            mu.insert((d0, d2, d1));
            if counits.contains(&d1) {
                alpha.insert((d0, d2));
            }
        }
    }
    let mut delta = BTreeSet::new();
    if x.trunc_dim() >= 3 {
        for s in 0..x.count(3) {
            if counits.contains(&x.sub_simplex(3, s, &[0, 3])) {
                let c = x.sub_simplex(3, s, &[1, 2]);
                let a = x.sub_simplex(3, s, &[0, 2]);
                let b = x.sub_simplex(3, s, &[1, 3]);
                delta.insert((c, a, b));
            }
        }
    }
    ExtractedStructure {
        names,
        units,
        counits,
        mu,
        alpha,
        delta,
    }
}

impl ExtractedStructure {
    pub fn to_frobenius(&self) -> Result<FrobeniusAlgebra> {
        let m = RelMonoid::new(
            self.names.clone(),
            self.mu.iter().copied(),
            self.units.iter().copied(),
        )?;
        FrobeniusAlgebra::new(m, self.delta.iter().copied(), self.counits.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaRecoveryReport {
    pub precondition_holds: bool,
    pub holds: Option<bool>,
    pub triples_checked: usize,
    /// `(a, b, c)` where exactly one side exists.
    pub counterexample: Option<[String; 3]>,
}

/// For every edge triple `(a, b, c)`: some `p` with `α̂(b) = p` and a 2-cell
/// for `μ: (c, p) ⇸ a` exists iff some `q` with `β̂(a) = q` and a 2-cell for
/// `μ: (q, c) ⇸ b` exists. Only evaluated when `X` has ε-horn extensions.
pub fn delta_recovery(x: &EpsSimplicialSet) -> DeltaRecoveryReport {
    let k = x.trunc_dim();
    let pre = (1..=k.min(4)).all(|n| {
        [0, n].iter().all(|&i| {
            ShapeName::EpsHorn(n, i)
                .realize(k)
                .map(|inc| check_extension(&inc, x, Mode::Exists, 1).holds)
                .unwrap_or(false)
        })
    });
    if !pre {
        return DeltaRecoveryReport {
            precondition_holds: false,
            holds: None,
            triples_checked: 0,
            counterexample: None,
        };
    }
    let s = extract_structure(x);
    let n = s.names.len();
    let mut alpha_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut beta_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(b, p) in &s.alpha {
        alpha_of[b].push(p);
        beta_of[p].push(b);
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = alpha_of[b].iter().any(|&p| s.mu.contains(&(c, p, a)));
                let right = beta_of[a].iter().any(|&q| s.mu.contains(&(q, c, b)));
                if left != right {
                    return DeltaRecoveryReport {
                        precondition_holds: true,
                        holds: Some(false),
                        triples_checked: a * n * n + b * n + c + 1,
                        counterexample: Some([s.names[a].clone(), s.names[b].clone(), s.names[c].clone()]),
                    };
                }
            }
        }
    }
    DeltaRecoveryReport {
        precondition_holds: true,
        holds: Some(true),
        triples_checked: n * n * n,
        counterexample: None,
    }
}
