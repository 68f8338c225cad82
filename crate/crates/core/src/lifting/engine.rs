//! Backtracking search for maps of ε-simplicial sets.
//!
//! Only non-degenerate source cells are assigned; images of degenerate
//! cells follow from the Eilenberg-Zilber decomposition. Assigning a cell
//! pushes values down to the roots of its faces, so conflicts surface early.
//! The next cell to branch on is the one with the fewest candidates.

use crate::simplicial::{EpsSimplicialSet, FaceIndex, SimplicialMap};

const UNSET: usize = usize::MAX;

/// A face (or witness edge) seen from a node: the node of its root and the
/// degeneracies applied to it, innermost first.
#[derive(Clone, Debug)]
struct Link {
    root: usize,
    root_dim: usize,
    ops: Vec<usize>,
}

/// Precomputed source/target data, shared read-only across searches.
pub struct Engine<'a> {
    src: &'a EpsSimplicialSet,
    tgt: &'a EpsSimplicialSet,
    idx: FaceIndex,
    nodes: Vec<(usize, usize)>,
    node_of: Vec<Vec<usize>>,
    faces: Vec<Vec<Link>>,
    eps_links: Vec<Link>,
}

impl<'a> Engine<'a> {
    pub fn new(src: &'a EpsSimplicialSet, tgt: &'a EpsSimplicialSet) -> Self {
        assert!(
            src.trunc_dim() <= tgt.trunc_dim(),
            "source must not be stored in more dimensions than the target"
        );
        let k = src.trunc_dim();
        let mut nodes = Vec::new();
        let mut node_of = Vec::with_capacity(k + 1);
        for d in 0..=k {
            let mut m = vec![UNSET; src.count(d)];
            for &c in src.nondegenerate(d) {
                m[c] = nodes.len();
                nodes.push((d, c));
            }
            node_of.push(m);
        }
        let link = |d: usize, c: usize| {
            let ops = src.ez_ops(d, c).to_vec();
            let root_dim = d - ops.len();
            Link {
                root: node_of[root_dim][src.ez_root(d, c)],
                root_dim,
                ops,
            }
        };
        let faces = nodes
            .iter()
            .map(|&(d, c)| {
                if d == 0 {
                    Vec::new()
                } else {
                    (0..=d).map(|i| link(d - 1, src.face(d, i, c))).collect()
                }
            })
            .collect();
        let eps_links = (0..src.eps_len()).map(|e| link(1, src.eps_edge(e))).collect();
        Engine {
            src,
            tgt,
            idx: FaceIndex::new(tgt),
            nodes,
            node_of,
            faces,
            eps_links,
        }
    }

    pub fn source(&self) -> &EpsSimplicialSet {
        self.src
    }

    pub fn target(&self) -> &EpsSimplicialSet {
        self.tgt
    }

    pub fn state(&self) -> State {
        State {
            cells: vec![UNSET; self.nodes.len()],
            eps: vec![UNSET; self.src.eps_len()],
            trail: Vec::new(),
        }
    }

    /// Target value of a link, if its root is assigned.
    fn resolve(&self, st: &State, l: &Link) -> Option<usize> {
        let v = st.cells[l.root];
        if v == UNSET {
            return None;
        }
        self.tgt.apply_degens(l.root_dim, v, &l.ops)
    }

    /// Recovers the root value from the value of a link and checks it.
    fn unwind(&self, l: &Link, value: usize) -> Option<usize> {
        let mut z = value;
        let mut dim = l.root_dim + l.ops.len();
        for &op in l.ops.iter().rev() {
            z = self.tgt.face(dim, op, z);
            dim -= 1;
        }
        (self.tgt.apply_degens(l.root_dim, z, &l.ops) == Some(value)).then_some(z)
    }

    fn set_node(&self, st: &mut State, node: usize, value: usize) -> bool {
        let cur = st.cells[node];
        if cur != UNSET {
            return cur == value;
        }
        st.cells[node] = value;
        st.trail.push(Slot::Cell(node));
        let d = self.nodes[node].0;
        for (i, l) in self.faces[node].iter().enumerate() {
            let f = self.tgt.face(d, i, value);
            match self.unwind(l, f) {
                Some(z) if self.set_node(st, l.root, z) => {}
                _ => return false,
            }
        }
        true
    }

    fn set_eps(&self, st: &mut State, e: usize, value: usize) -> bool {
        let cur = st.eps[e];
        if cur != UNSET {
            return cur == value;
        }
        st.eps[e] = value;
        st.trail.push(Slot::Eps(e));
        let l = &self.eps_links[e];
        match self.unwind(l, self.tgt.eps_edge(value)) {
            Some(z) => self.set_node(st, l.root, z),
            None => false,
        }
    }

    fn undo(&self, st: &mut State, mark: usize) {
        while st.trail.len() > mark {
            match st.trail.pop().expect("trail entry") {
                Slot::Cell(n) => st.cells[n] = UNSET,
                Slot::Eps(e) => st.eps[e] = UNSET,
            }
        }
    }

    /// Fixes the image of a source cell (any cell, degenerate or not).
    pub fn seed_cell(&self, st: &mut State, d: usize, c: usize, value: usize) -> bool {
        let ops = self.src.ez_ops(d, c);
        let l = Link {
            root: self.node_of[d - ops.len()][self.src.ez_root(d, c)],
            root_dim: d - ops.len(),
            ops: ops.to_vec(),
        };
        match self.unwind(&l, value) {
            Some(z) => self.set_node(st, l.root, z),
            None => false,
        }
    }

    pub fn seed_eps(&self, st: &mut State, e: usize, value: usize) -> bool {
        self.set_eps(st, e, value)
    }

    fn candidates(&self, st: &State, node: usize) -> Vec<usize> {
        let d = self.nodes[node].0;
        if d == 0 {
            return (0..self.tgt.count(0)).collect();
        }
        let known: Vec<Option<usize>> = self.faces[node].iter().map(|l| self.resolve(st, l)).collect();
        if known.iter().all(Option::is_some) {
            let key: Vec<usize> = known.iter().map(|v| v.expect("known")).collect();
            return self.idx.by_faces[d].get(&key).cloned().unwrap_or_default();
        }
        let best = known
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|v| (i, v)))
            .min_by_key(|&(i, v)| self.idx.by_face[d][i][v].len());
        match best {
            None => (0..self.tgt.count(d)).collect(),
            Some((i0, v0)) => self.idx.by_face[d][i0][v0]
                .iter()
                .copied()
                .filter(|&t| {
                    known
                        .iter()
                        .enumerate()
                        .all(|(i, v)| v.is_none_or(|v| self.tgt.face(d, i, t) == v))
                })
                .collect(),
        }
    }

    fn eps_candidates(&self, st: &State, e: usize) -> Vec<usize> {
        match self.resolve(st, &self.eps_links[e]) {
            Some(edge) => self.idx.eps_on_edge[edge].clone(),
            None => (0..self.tgt.eps_len()).collect(),
        }
    }

    /// Enumerates every completion of the current state. `visit` returns
    /// `false` to stop early; the return value tells whether the search ran
    /// to completion.
    pub fn search(&self, st: &mut State, visit: &mut dyn FnMut(&State) -> bool) -> bool {
        let mut best: Option<(Slot, Vec<usize>)> = None;
        for n in 0..self.nodes.len() {
            if st.cells[n] != UNSET {
                continue;
            }
            let c = self.candidates(st, n);
            if best.as_ref().is_none_or(|(_, b)| c.len() < b.len()) {
                let empty = c.is_empty();
                best = Some((Slot::Cell(n), c));
                if empty {
                    return true;
                }
            }
        }
        for e in 0..self.src.eps_len() {
            if st.eps[e] != UNSET {
                continue;
            }
            let c = self.eps_candidates(st, e);
            if best.as_ref().is_none_or(|(_, b)| c.len() < b.len()) {
                let empty = c.is_empty();
                best = Some((Slot::Eps(e), c));
                if empty {
                    return true;
                }
            }
        }
        let Some((slot, cands)) = best else {
            return visit(st);
        };
        for t in cands {
            let mark = st.trail.len();
            let ok = match slot {
                Slot::Cell(n) => self.set_node(st, n, t),
                Slot::Eps(e) => self.set_eps(st, e, t),
            };
            let go_on = !ok || self.search(st, visit);
            self.undo(st, mark);
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Expands a complete state into a full map.
    pub fn to_map(&self, st: &State) -> SimplicialMap {
        let src = self.src;
        let cells = (0..=src.trunc_dim())
            .map(|d| {
                (0..src.count(d))
                    .map(|c| {
                        let ops = src.ez_ops(d, c);
                        let rd = d - ops.len();
                        let v = st.cells[self.node_of[rd][src.ez_root(d, c)]];
                        self.tgt
                            .apply_degens(rd, v, ops)
                            .expect("degenerate image in range")
                    })
                    .collect()
            })
            .collect();
        SimplicialMap {
            cells,
            eps: st.eps.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    Cell(usize),
    Eps(usize),
}

/// Mutable search state: one value per node and witness, plus an undo trail.
#[derive(Clone, Debug)]
pub struct State {
    cells: Vec<usize>,
    eps: Vec<usize>,
    trail: Vec<Slot>,
}
