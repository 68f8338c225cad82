use std::sync::Arc;

use super::{EpsSimplicialSet, SSetParts, SimplicialMap};
use crate::{Error, Result};

/// A sub-ε-simplicial set, stored as membership masks over its parent.
#[derive(Clone, Debug)]
pub struct Subobject {
    parent: Arc<EpsSimplicialSet>,
    cells: Vec<Vec<bool>>,
    eps: Vec<bool>,
}

impl PartialEq for Subobject {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.cells == other.cells && self.eps == other.eps
    }
}

impl Eq for Subobject {}

impl Subobject {
    pub fn empty(parent: Arc<EpsSimplicialSet>) -> Self {
        let cells = (0..=parent.trunc_dim())
            .map(|d| vec![false; parent.count(d)])
            .collect();
        let eps = vec![false; parent.eps_len()];
        Subobject { parent, cells, eps }
    }

    pub fn full(parent: Arc<EpsSimplicialSet>) -> Self {
        let mut s = Subobject::empty(parent);
        s.cells.iter_mut().flatten().for_each(|b| *b = true);
        s.eps.iter_mut().for_each(|b| *b = true);
        s
    }

    /// The smallest subobject containing the given `(dim, cell)` pairs and
    /// witnesses.
    pub fn generated(parent: Arc<EpsSimplicialSet>, cells: &[(usize, usize)], eps: &[usize]) -> Self {
        let mut s = Subobject::empty(parent);
        for &(d, c) in cells {
            s.cells[d][c] = true;
        }
        for &e in eps {
            s.eps[e] = true;
            let edge = s.parent.eps_edge(e);
            s.cells[1][edge] = true;
        }
        s.close();
        s
    }

    /// Everything except the given cell and the cells having it as an
    /// iterated face (and witnesses sitting on removed edges).
    pub fn without(parent: Arc<EpsSimplicialSet>, d: usize, c: usize) -> Self {
        let mut s = Subobject::full(parent);
        s.cells[d][c] = false;
        let p = s.parent.clone();
        for dim in d + 1..=p.trunc_dim() {
            for cell in 0..p.count(dim) {
                if (0..=dim).any(|i| !s.cells[dim - 1][p.face(dim, i, cell)]) {
                    s.cells[dim][cell] = false;
                }
            }
        }
        for e in 0..p.eps_len() {
            if !s.cells[1][p.eps_edge(e)] {
                s.eps[e] = false;
            }
        }
        s
    }

    fn close(&mut self) {
        let p = self.parent.clone();
        let k = p.trunc_dim();
        for d in (1..=k).rev() {
            for c in 0..p.count(d) {
                if self.cells[d][c] {
                    for i in 0..=d {
                        self.cells[d - 1][p.face(d, i, c)] = true;
                    }
                }
            }
        }
        for d in 0..k {
            for c in 0..p.count(d) {
                if self.cells[d][c] {
                    for i in 0..=d {
                        self.cells[d + 1][p.degen(d, i, c)] = true;
                    }
                }
            }
        }
    }

    pub fn parent(&self) -> &Arc<EpsSimplicialSet> {
        &self.parent
    }

    pub fn contains(&self, d: usize, c: usize) -> bool {
        self.cells[d][c]
    }

    pub fn contains_eps(&self, e: usize) -> bool {
        self.eps[e]
    }

    pub fn count(&self, d: usize) -> usize {
        self.cells[d].iter().filter(|&&b| b).count()
    }

    fn same_parent(&self, other: &Subobject) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent
    }

    fn zip(&self, other: &Subobject, op: impl Fn(bool, bool) -> bool) -> Result<Subobject> {
        if !self.same_parent(other) {
            return Err(Error::ParentMismatch);
        }
        let cells = self
            .cells
            .iter()
            .zip(&other.cells)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect())
            .collect();
        let eps = self.eps.iter().zip(&other.eps).map(|(&x, &y)| op(x, y)).collect();
        let s = Subobject {
            parent: self.parent.clone(),
            cells,
            eps,
        };
        assert!(
            s.is_closed(),
            "union/intersection of subobjects must be a subobject"
        );
        Ok(s)
    }

    pub fn union(&self, other: &Subobject) -> Result<Subobject> {
        self.zip(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Subobject) -> Result<Subobject> {
        self.zip(other, |a, b| a && b)
    }

    /// Closed under faces, degeneracies and the witness map.
    pub fn is_closed(&self) -> bool {
        let p = &self.parent;
        let k = p.trunc_dim();
        for d in 0..=k {
            for c in 0..p.count(d) {
                if !self.cells[d][c] {
                    continue;
                }
                if d > 0 && (0..=d).any(|i| !self.cells[d - 1][p.face(d, i, c)]) {
                    return false;
                }
                if d < k && (0..=d).any(|i| !self.cells[d + 1][p.degen(d, i, c)]) {
                    return false;
                }
            }
        }
        (0..p.eps_len()).all(|e| !self.eps[e] || self.cells[1][p.eps_edge(e)])
    }

    /// The subobject as a standalone set (keeping cell names) together
    /// with its inclusion into the parent.
    pub fn to_sset(&self) -> (EpsSimplicialSet, SimplicialMap) {
        let p = &self.parent;
        let k = p.trunc_dim();
        let kept: Vec<Vec<usize>> = self
            .cells
            .iter()
            .map(|m| (0..m.len()).filter(|&c| m[c]).collect())
            .collect();
        let mut local = vec![Vec::new(); k + 1];
        for d in 0..=k {
            local[d] = vec![usize::MAX; p.count(d)];
            for (i, &c) in kept[d].iter().enumerate() {
                local[d][c] = i;
            }
        }
        let eps_kept: Vec<usize> = (0..p.eps_len()).filter(|&e| self.eps[e]).collect();
        let mut parts = SSetParts::default();
        for d in 0..=k {
            parts
                .names
                .push(kept[d].iter().map(|&c| p.name(d, c).to_string()).collect());
            let faces = if d == 0 { 0 } else { d + 1 };
            parts.face.push(
                (0..faces)
                    .map(|i| kept[d].iter().map(|&c| local[d - 1][p.face(d, i, c)]).collect())
                    .collect(),
            );
            let degens = if d < k { d + 1 } else { 0 };
            parts.degen.push(
                (0..degens)
                    .map(|i| kept[d].iter().map(|&c| local[d + 1][p.degen(d, i, c)]).collect())
                    .collect(),
            );
        }
        parts.eps_names = eps_kept.iter().map(|&e| p.eps_name(e).to_string()).collect();
        parts.eps_edge = eps_kept.iter().map(|&e| local[1][p.eps_edge(e)]).collect();
        let x = EpsSimplicialSet::new(parts).expect("closed subobject yields well-formed tables");
        let inclusion = SimplicialMap {
            cells: kept,
            eps: eps_kept,
        };
        (x, inclusion)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::delta1;
    use super::*;

    fn delta1_arc() -> Arc<EpsSimplicialSet> {
        Arc::new(EpsSimplicialSet::new(delta1()).unwrap())
    }

    #[test]
    fn generated_closes_under_faces_and_degeneracies() {
        let p = delta1_arc();
        let s = Subobject::generated(p.clone(), &[(1, 1)], &[]);
        assert_eq!(s, Subobject::full(p.clone()));
        let v = Subobject::generated(p, &[(0, 1)], &[]);
        assert_eq!(v.count(0), 1);
        assert_eq!(v.count(1), 1);
        let (x, inc) = v.to_sset();
        assert!(x.validate().ok);
        assert_eq!(inc.cells[1], vec![2]);
    }

    #[test]
    fn union_is_idempotent_and_parents_must_match() {
        let p = delta1_arc();
        let a = Subobject::generated(p.clone(), &[(0, 0)], &[]);
        assert_eq!(a.union(&a).unwrap(), a);
        let b = Subobject::generated(p, &[(0, 1)], &[]);
        assert_eq!(a.intersection(&b).unwrap().count(0), 0);
        let mut other = delta1();
        other.names[0][0] = "z".into();
        let q = Arc::new(EpsSimplicialSet::new(other).unwrap());
        let c = Subobject::full(q);
        assert!(matches!(a.union(&c), Err(Error::ParentMismatch)));
    }

    #[test]
    fn without_drops_cofaces() {
        let p = delta1_arc();
        let s = Subobject::without(p, 0, 0);
        assert!(s.is_closed());
        assert_eq!(s.count(1), 1);
    }
}
