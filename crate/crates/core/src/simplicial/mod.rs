//! Truncated ε-simplicial sets: simplicial sets stored up to a fixed dimension,
//! together with a set of ε-witnesses, each sitting on an edge.

mod completion;
mod map;
mod pushout;
mod subobject;

pub use completion::{coskeletal_completion, face_tuple_map};
pub use map::SimplicialMap;
pub use pushout::{pushout, Pushout};
pub use subobject::Subobject;

use std::collections::HashMap;

use serde::Serialize;

use crate::{Error, Result};

/// Raw tables of an ε-simplicial set. `face[d][i][c]` is `d_i` on
/// `d`-cells (`face[0]` is empty) and `degen[d][i][c]` is `s_i` from
/// `d`-cells to `(d+1)`-cells, for `d < trunc_dim`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SSetParts {
    pub names: Vec<Vec<String>>,
    pub face: Vec<Vec<Vec<usize>>>,
    pub degen: Vec<Vec<Vec<usize>>>,
    pub eps_names: Vec<String>,
    pub eps_edge: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct EpsSimplicialSet {
    parts: SSetParts,
    index: Vec<HashMap<String, usize>>,
    eps_index: HashMap<String, usize>,
    // Eilenberg-Zilber data: cell = s_{ops[k-1]} ... s_{ops[0]} (root).
    ez_root: Vec<Vec<usize>>,
    ez_ops: Vec<Vec<Vec<usize>>>,
    nondegenerate: Vec<Vec<usize>>,
}

impl PartialEq for EpsSimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for EpsSimplicialSet {}

/// Outcome of [`EpsSimplicialSet::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violation: Option<String>,
}

impl EpsSimplicialSet {
    /// Checks table shapes and id ranges; identities are checked by
    /// [`EpsSimplicialSet::validate`].
    pub fn new(parts: SSetParts) -> Result<Self> {
        let levels = parts.names.len();
        if levels == 0 {
            return Err(Error::input("at least the vertex level must be stored"));
        }
        let k = levels - 1;
        if parts.face.len() != levels || parts.degen.len() != levels {
            return Err(Error::input(
                "face/degeneracy tables do not match the dimension count",
            ));
        }
        let count = |d: usize| parts.names[d].len();
        for d in 0..=k {
            let faces = if d == 0 { 0 } else { d + 1 };
            if parts.face[d].len() != faces {
                return Err(Error::input(format!("dimension {d} needs {faces} face maps")));
            }
            for (i, table) in parts.face[d].iter().enumerate() {
                if table.len() != count(d) || table.iter().any(|&c| c >= count(d - 1)) {
                    return Err(Error::input(format!(
                        "face map d{i} on dimension {d} is malformed"
                    )));
                }
            }
            let degens = if d < k { d + 1 } else { 0 };
            if parts.degen[d].len() != degens {
                return Err(Error::input(format!(
                    "dimension {d} needs {degens} degeneracy maps"
                )));
            }
            for (i, table) in parts.degen[d].iter().enumerate() {
                if table.len() != count(d) || table.iter().any(|&c| c >= count(d + 1)) {
                    return Err(Error::input(format!(
                        "degeneracy map s{i} on dimension {d} is malformed"
                    )));
                }
            }
        }
        if parts.eps_names.len() != parts.eps_edge.len() {
            return Err(Error::input("every ε-witness needs exactly one edge"));
        }
        if !parts.eps_edge.is_empty() && (k == 0 || parts.eps_edge.iter().any(|&e| e >= count(1))) {
            return Err(Error::input("ε-witness on a missing edge"));
        }
        let mut index = Vec::with_capacity(levels);
        for (d, names) in parts.names.iter().enumerate() {
            let mut m = HashMap::with_capacity(names.len());
            for (c, n) in names.iter().enumerate() {
                if m.insert(n.clone(), c).is_some() {
                    return Err(Error::input(format!("duplicate {d}-cell `{n}`")));
                }
            }
            index.push(m);
        }
        let mut eps_index = HashMap::new();
        for (e, n) in parts.eps_names.iter().enumerate() {
            if eps_index.insert(n.clone(), e).is_some() {
                return Err(Error::input(format!("duplicate ε-witness `{n}`")));
            }
        }
        let mut ez_root: Vec<Vec<usize>> = Vec::with_capacity(levels);
        let mut ez_ops: Vec<Vec<Vec<usize>>> = Vec::with_capacity(levels);
        let mut nondegenerate = Vec::with_capacity(levels);
        for d in 0..=k {
            let mut source: Vec<Option<(usize, usize)>> = vec![None; count(d)];
            if d > 0 {
                for (i, table) in parts.degen[d - 1].iter().enumerate() {
                    for (y, &c) in table.iter().enumerate() {
                        source[c].get_or_insert((i, y));
                    }
                }
            }
            let mut roots = Vec::with_capacity(count(d));
            let mut ops = Vec::with_capacity(count(d));
            let mut nd = Vec::new();
            for (c, src) in source.iter().enumerate() {
                match *src {
                    None => {
                        roots.push(c);
                        ops.push(Vec::new());
                        nd.push(c);
                    }
                    Some((i, y)) => {
                        roots.push(ez_root[d - 1][y]);
                        let mut o = ez_ops[d - 1][y].clone();
                        o.push(i);
                        ops.push(o);
                    }
                }
            }
            ez_root.push(roots);
            ez_ops.push(ops);
            nondegenerate.push(nd);
        }
        Ok(EpsSimplicialSet {
            parts,
            index,
            eps_index,
            ez_root,
            ez_ops,
            nondegenerate,
        })
    }

    pub fn parts(&self) -> &SSetParts {
        &self.parts
    }

    pub fn into_parts(self) -> SSetParts {
        self.parts
    }

    pub fn trunc_dim(&self) -> usize {
        self.parts.names.len() - 1
    }

    pub fn count(&self, d: usize) -> usize {
        self.parts.names.get(d).map_or(0, Vec::len)
    }

    pub fn name(&self, d: usize, c: usize) -> &str {
        &self.parts.names[d][c]
    }

    pub fn names(&self, d: usize) -> &[String] {
        &self.parts.names[d]
    }

    pub fn index_of(&self, d: usize, name: &str) -> Option<usize> {
        self.index.get(d)?.get(name).copied()
    }

    pub fn face(&self, d: usize, i: usize, c: usize) -> usize {
        self.parts.face[d][i][c]
    }

    pub fn degen(&self, d: usize, i: usize, c: usize) -> usize {
        self.parts.degen[d][i][c]
    }

    /// `(d_0 c, …, d_d c)`.
    pub fn faces_of(&self, d: usize, c: usize) -> Vec<usize> {
        (0..=d).map(|i| self.face(d, i, c)).collect()
    }

    pub fn eps_len(&self) -> usize {
        self.parts.eps_names.len()
    }

    pub fn eps_name(&self, e: usize) -> &str {
        &self.parts.eps_names[e]
    }

    pub fn eps_index_of(&self, name: &str) -> Option<usize> {
        self.eps_index.get(name).copied()
    }

    pub fn eps_edge(&self, e: usize) -> usize {
        self.parts.eps_edge[e]
    }

    /// Edges carrying at least one ε-witness, ascending and deduplicated.
    pub fn eps_edges(&self) -> Vec<usize> {
        let mut v = self.parts.eps_edge.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_degenerate(&self, d: usize, c: usize) -> bool {
        !self.ez_ops[d][c].is_empty()
    }

    /// Non-degenerate root of a cell; it lives in dimension
    /// `d - ez_ops(d, c).len()`.
    pub fn ez_root(&self, d: usize, c: usize) -> usize {
        self.ez_root[d][c]
    }

    /// Degeneracy indices taking the root to the cell, innermost first.
    pub fn ez_ops(&self, d: usize, c: usize) -> &[usize] {
        &self.ez_ops[d][c]
    }

    pub fn nondegenerate(&self, d: usize) -> &[usize] {
        self.nondegenerate.get(d).map_or(&[], Vec::as_slice)
    }

    /// Largest dimension holding a non-degenerate cell.
    pub fn dimension(&self) -> usize {
        (0..=self.trunc_dim())
            .rev()
            .find(|&d| !self.nondegenerate[d].is_empty())
            .unwrap_or(0)
    }

    /// The face of the `d`-cell `c` spanned by the given ascending vertex
    /// positions.
    pub fn sub_simplex(&self, d: usize, c: usize, vertices: &[usize]) -> usize {
        let mut cell = c;
        let mut dim = d;
        for v in (0..=d).rev() {
            if !vertices.contains(&v) {
                cell = self.face(dim, v, cell);
                dim -= 1;
            }
        }
        cell
    }

    /// The `j`-th vertex of a `d`-cell.
    pub fn vertex(&self, d: usize, c: usize, j: usize) -> usize {
        self.sub_simplex(d, c, &[j])
    }

    /// Repeated degeneracy `s_{ops[last]} … s_{ops[0]}` starting in dimension `d`.
    pub fn apply_degens(&self, d: usize, c: usize, ops: &[usize]) -> Option<usize> {
        let mut cell = c;
        for (k, &i) in ops.iter().enumerate() {
            let dim = d + k;
            if dim >= self.trunc_dim() || i > dim {
                return None;
            }
            cell = self.degen(dim, i, cell);
        }
        Some(cell)
    }

    /// The restriction to dimensions `0..=k`.
    pub fn truncate(&self, k: usize) -> EpsSimplicialSet {
        let k = k.min(self.trunc_dim());
        let mut p = self.parts.clone();
        p.names.truncate(k + 1);
        p.face.truncate(k + 1);
        p.degen.truncate(k + 1);
        p.degen[k].clear();
        if k == 0 {
            p.eps_names.clear();
            p.eps_edge.clear();
        }
        EpsSimplicialSet::new(p).expect("truncation of a well-formed set")
    }

    /// Same cells with extra ε-witnesses appended.
    pub fn with_eps(&self, extra: &[(String, usize)]) -> Result<EpsSimplicialSet> {
        let mut p = self.parts.clone();
        for (n, e) in extra {
            p.eps_names.push(n.clone());
            p.eps_edge.push(*e);
        }
        EpsSimplicialSet::new(p)
    }

    /// Same cells with every ε-witness removed.
    pub fn without_eps(&self) -> EpsSimplicialSet {
        let mut p = self.parts.clone();
        p.eps_names.clear();
        p.eps_edge.clear();
        EpsSimplicialSet::new(p).expect("dropping witnesses keeps the set well-formed")
    }

    /// Checks the simplicial identities on every stored dimension, plus
    /// injectivity of degeneracies.
    pub fn validate(&self) -> ValidationReport {
        match self.first_violation() {
            None => ValidationReport {
                ok: true,
                violation: None,
            },
            Some(v) => ValidationReport {
                ok: false,
                violation: Some(v),
            },
        }
    }

    fn first_violation(&self) -> Option<String> {
        let k = self.trunc_dim();
        let nm = |d: usize, c: usize| self.name(d, c).to_string();
        // d_i d_j = d_{j-1} d_i for i < j
        for d in 2..=k {
            for c in 0..self.count(d) {
                for j in 1..=d {
                    for i in 0..j {
                        let l = self.face(d - 1, i, self.face(d, j, c));
                        let r = self.face(d - 1, j - 1, self.face(d, i, c));
                        if l != r {
                            return Some(format!(
                                "d{i} d{j} = d{} d{i} fails on {d}-cell `{}`",
                                j - 1,
                                nm(d, c)
                            ));
                        }
                    }
                }
            }
        }
        for d in 0..k {
            for c in 0..self.count(d) {
                for j in 0..=d {
                    let s = self.degen(d, j, c);
                    for i in 0..=d + 1 {
                        let lhs = self.face(d + 1, i, s);
                        let (rhs, law) = if i < j {
                            (
                                self.degen(d - 1, j - 1, self.face(d, i, c)),
                                "d_i s_j = s_{j-1} d_i",
                            )
                        } else if i == j || i == j + 1 {
                            (c, "d_j s_j = d_{j+1} s_j = id")
                        } else {
                            (
                                self.degen(d - 1, j, self.face(d, i - 1, c)),
                                "d_i s_j = s_j d_{i-1}",
                            )
                        };
                        if lhs != rhs {
                            return Some(format!(
                                "{law} fails for (i={i}, j={j}) on {d}-cell `{}`",
                                nm(d, c)
                            ));
                        }
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i <= j
        for d in 0..k.saturating_sub(1) {
            for c in 0..self.count(d) {
                for j in 0..=d {
                    for i in 0..=j {
                        let l = self.degen(d + 1, i, self.degen(d, j, c));
                        let r = self.degen(d + 1, j + 1, self.degen(d, i, c));
                        if l != r {
                            return Some(format!(
                                "s{i} s{j} = s{} s{i} fails on {d}-cell `{}`",
                                j + 1,
                                nm(d, c)
                            ));
                        }
                    }
                }
            }
        }
        for d in 0..k {
            for (i, table) in self.parts.degen[d].iter().enumerate() {
                let mut seen = HashMap::new();
                for (c, &t) in table.iter().enumerate() {
                    if let Some(prev) = seen.insert(t, c) {
                        return Some(format!(
                            "s{i} on dimension {d} is not injective: `{}` and `{}`",
                            nm(d, prev),
                            nm(d, c)
                        ));
                    }
                }
            }
        }
        None
    }
}

/// Index of a target set by face data, shared by the lifting engine and the
/// coskeletal completion.
#[derive(Clone, Debug)]
pub struct FaceIndex {
    /// `by_faces[d]`: face tuple → `d`-cells with exactly those faces.
    pub by_faces: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    /// `by_face[d][i][v]`: `d`-cells whose `i`-th face is `v`.
    pub by_face: Vec<Vec<Vec<Vec<usize>>>>,
    /// `eps_on_edge[e]`: witnesses on edge `e`.
    pub eps_on_edge: Vec<Vec<usize>>,
}

impl FaceIndex {
    pub fn new(x: &EpsSimplicialSet) -> Self {
        let k = x.trunc_dim();
        let mut by_faces = vec![HashMap::new()];
        let mut by_face = vec![Vec::new()];
        for d in 1..=k {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            let mut per = vec![vec![Vec::new(); x.count(d - 1)]; d + 1];
            for c in 0..x.count(d) {
                let f = x.faces_of(d, c);
                for (i, &v) in f.iter().enumerate() {
                    per[i][v].push(c);
                }
                m.entry(f).or_default().push(c);
            }
            by_faces.push(m);
            by_face.push(per);
        }
        let mut eps_on_edge = vec![Vec::new(); x.count(1)];
        for e in 0..x.eps_len() {
            eps_on_edge[x.eps_edge(e)].push(e);
        }
        FaceIndex {
            by_faces,
            by_face,
            eps_on_edge,
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Δ¹ by hand: vertices 0, 1; edges 00, 01, 11.
    pub(crate) fn delta1() -> SSetParts {
        SSetParts {
            names: vec![
                vec!["0".into(), "1".into()],
                vec!["00".into(), "01".into(), "11".into()],
            ],
            face: vec![vec![], vec![vec![0, 1, 1], vec![0, 0, 1]]],
            degen: vec![vec![vec![0, 2]], vec![]],
            eps_names: vec![],
            eps_edge: vec![],
        }
    }

    #[test]
    fn delta1_validates() {
        let x = EpsSimplicialSet::new(delta1()).unwrap();
        assert!(x.validate().ok);
        assert_eq!(x.nondegenerate(1), &[1]);
        assert_eq!(x.dimension(), 1);
        assert_eq!(x.vertex(1, 1, 0), 0);
        assert_eq!(x.vertex(1, 1, 1), 1);
    }

    #[test]
    fn sigma1_validates() {
        let mut p = delta1();
        p.eps_names.push("w".into());
        p.eps_edge.push(1);
        let x = EpsSimplicialSet::new(p).unwrap();
        assert!(x.validate().ok);
        assert_eq!(x.eps_edges(), vec![1]);
    }

    #[test]
    fn corrupted_face_is_named() {
        let mut p = delta1();
        p.face[1][0][2] = 0;
        let x = EpsSimplicialSet::new(p).unwrap();
        let r = x.validate();
        assert!(!r.ok);
        assert!(r.violation.unwrap().contains("0-cell `1`"));
    }

    #[test]
    fn dangling_ids_are_input_errors() {
        let mut p = delta1();
        p.face[1][0][1] = 7;
        assert!(EpsSimplicialSet::new(p).is_err());
        let mut p = delta1();
        p.eps_names.push("w".into());
        p.eps_edge.push(9);
        assert!(EpsSimplicialSet::new(p).is_err());
    }
}
