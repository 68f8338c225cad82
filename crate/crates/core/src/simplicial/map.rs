use serde::Serialize;

use super::EpsSimplicialSet;

/// A map of ε-simplicial sets: one cell assignment per stored dimension of
/// the source, plus an assignment of ε-witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimplicialMap {
    pub cells: Vec<Vec<usize>>,
    pub eps: Vec<usize>,
}

impl SimplicialMap {
    pub fn identity(x: &EpsSimplicialSet) -> Self {
        SimplicialMap {
            cells: (0..=x.trunc_dim()).map(|d| (0..x.count(d)).collect()).collect(),
            eps: (0..x.eps_len()).collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        SimplicialMap {
            cells: self
                .cells
                .iter()
                .enumerate()
                .map(|(d, m)| m.iter().map(|&c| other.cells[d][c]).collect())
                .collect(),
            eps: self.eps.iter().map(|&e| other.eps[e]).collect(),
        }
    }

    /// Checks shape and naturality with respect to faces, degeneracies and
    /// the witness map. Returns a description of the first failure.
    pub fn check(&self, a: &EpsSimplicialSet, x: &EpsSimplicialSet) -> Result<(), String> {
        let k = a.trunc_dim();
        if k > x.trunc_dim() {
            return Err("source is stored in more dimensions than the target".into());
        }
        if self.cells.len() != k + 1 || self.eps.len() != a.eps_len() {
            return Err("map has the wrong number of components".into());
        }
        for d in 0..=k {
            if self.cells[d].len() != a.count(d) || self.cells[d].iter().any(|&c| c >= x.count(d)) {
                return Err(format!("component in dimension {d} is malformed"));
            }
        }
        if self.eps.iter().any(|&e| e >= x.eps_len()) {
            return Err("ε-component is malformed".into());
        }
        let f = &self.cells;
        for d in 1..=k {
            for c in 0..a.count(d) {
                for i in 0..=d {
                    if f[d - 1][a.face(d, i, c)] != x.face(d, i, f[d][c]) {
                        return Err(format!(
                            "does not commute with d{i} at {d}-cell `{}`",
                            a.name(d, c)
                        ));
                    }
                }
            }
        }
        for d in 0..k {
            for c in 0..a.count(d) {
                for i in 0..=d {
                    if f[d + 1][a.degen(d, i, c)] != x.degen(d, i, f[d][c]) {
                        return Err(format!(
                            "does not commute with s{i} at {d}-cell `{}`",
                            a.name(d, c)
                        ));
                    }
                }
            }
        }
        for e in 0..a.eps_len() {
            if x.eps_edge(self.eps[e]) != f[1][a.eps_edge(e)] {
                return Err(format!("does not commute with w at witness `{}`", a.eps_name(e)));
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        let inj = |v: &[usize]| {
            let mut s = v.to_vec();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        };
        self.cells.iter().all(|v| inj(v)) && inj(&self.eps)
    }

    /// Levelwise bijective (naturality is checked separately).
    pub fn is_bijective(&self, x: &EpsSimplicialSet) -> bool {
        self.is_injective()
            && self.cells.iter().enumerate().all(|(d, v)| v.len() == x.count(d))
            && self.eps.len() == x.eps_len()
    }
}
