use std::collections::HashMap;

use super::{EpsSimplicialSet, SSetParts, SimplicialMap};
use crate::{Error, Result};

/// Rebuilds dimensions `3..=k` from the 2-truncation of `x`: an `n`-cell is a
/// tuple `(x_0, …, x_n)` of `(n-1)`-cells with `d_i x_j = d_{j-1} x_i` for
/// `i < j`, faces are projections and degeneracies are forced by the
/// simplicial identities. Cells are named `[f0,f1,…]` after their faces.
pub fn coskeletal_completion(x: &EpsSimplicialSet, k: usize) -> Result<EpsSimplicialSet> {
    if x.trunc_dim() < 2 {
        return Err(Error::input(
            "coskeletal completion needs cells up to dimension 2",
        ));
    }
    let mut parts = x.truncate(2).into_parts();
    if k < 2 {
        return Ok(x.truncate(k));
    }
    for n in 3..=k {
        extend_level(&mut parts, n);
    }
    EpsSimplicialSet::new(parts)
}

fn extend_level(parts: &mut SSetParts, n: usize) {
    let lower = n - 1;
    let lower_count = parts.names[lower].len();
    let face = |i: usize, c: usize| parts.face[lower][i][c];
    // Cells of dimension n-1 grouped by their 0-th face.
    let mut by_face0: HashMap<usize, Vec<usize>> = HashMap::new();
    for c in 0..lower_count {
        by_face0.entry(face(0, c)).or_default().push(c);
    }
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut prefix = Vec::with_capacity(n + 1);
    for x0 in 0..lower_count {
        prefix.push(x0);
        grow(&mut prefix, n, &face, &by_face0, &mut tuples);
        prefix.pop();
    }
    let index: HashMap<Vec<usize>, usize> = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let names = tuples
        .iter()
        .map(|t| {
            let inner: Vec<&str> = t.iter().map(|&c| parts.names[lower][c].as_str()).collect();
            format!("[{}]", inner.join(","))
        })
        .collect();
    let faces: Vec<Vec<usize>> = (0..=n).map(|i| tuples.iter().map(|t| t[i]).collect()).collect();
    let mut degen = Vec::with_capacity(n);
    for i in 0..n {
        let table = (0..lower_count)
            .map(|y| {
                let t: Vec<usize> = (0..=n)
                    .map(|j| {
                        if j < i {
                            parts.degen[lower - 1][i - 1][face(j, y)]
                        } else if j == i || j == i + 1 {
                            y
                        } else {
                            parts.degen[lower - 1][i][face(j - 1, y)]
                        }
                    })
                    .collect();
                *index
                    .get(&t)
                    .expect("degenerate tuple is boundary-compatible when identities hold")
            })
            .collect();
        degen.push(table);
    }
    parts.degen[lower] = degen;
    parts.names.push(names);
    parts.face.push(faces);
    parts.degen.push(Vec::new());
}

fn grow(
    prefix: &mut Vec<usize>,
    n: usize,
    face: &impl Fn(usize, usize) -> usize,
    by_face0: &HashMap<usize, Vec<usize>>,
    out: &mut Vec<Vec<usize>>,
) {
    let j = prefix.len();
    if j == n + 1 {
        out.push(prefix.clone());
        return;
    }
    let Some(cands) = by_face0.get(&face(j - 1, prefix[0])) else {
        return;
    };
    for &c in cands {
        if (1..j).all(|i| face(i, c) == face(j - 1, prefix[i])) {
            prefix.push(c);
            grow(prefix, n, face, by_face0, out);
            prefix.pop();
        }
    }
}

/// The comparison map from `x` to `completed` (a completion of `x`'s own
/// 2-truncation): identity up to dimension 2, face tuples above. `None` if
/// some face tuple of `x` is not a cell of `completed`.
pub fn face_tuple_map(x: &EpsSimplicialSet, completed: &EpsSimplicialSet) -> Option<SimplicialMap> {
    let k = x.trunc_dim();
    if completed.trunc_dim() < k || k < 2 {
        return None;
    }
    let mut cells: Vec<Vec<usize>> = (0..=2).map(|d| (0..x.count(d)).collect()).collect();
    for n in 3..=k {
        let index: HashMap<Vec<usize>, usize> = (0..completed.count(n))
            .map(|c| (completed.faces_of(n, c), c))
            .collect();
        let prev = &cells[n - 1];
        let level = (0..x.count(n))
            .map(|c| {
                let t: Vec<usize> = x.faces_of(n, c).iter().map(|&f| prev[f]).collect();
                index.get(&t).copied()
            })
            .collect::<Option<Vec<_>>>()?;
        cells.push(level);
    }
    Some(SimplicialMap {
        cells,
        eps: (0..x.eps_len()).collect(),
    })
}
