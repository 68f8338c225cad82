use std::collections::HashSet;

use super::{EpsSimplicialSet, SSetParts, SimplicialMap};
use crate::{Error, Result};

/// `P = C ⊔_A B` with its two structure maps `j: C → P` and `g: B → P`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: EpsSimplicialSet,
    pub j: SimplicialMap,
    pub g: SimplicialMap,
}

/// Pushout of an injective `i: A → B` along `f: A → C`, computed levelwise:
/// `P_d = C_d ⊔ (B_d \ i(A_d))`. Cells coming from `B` keep their names,
/// primed if they clash with a name in `C`.
pub fn pushout(
    a: &EpsSimplicialSet,
    b: &EpsSimplicialSet,
    c: &EpsSimplicialSet,
    i: &SimplicialMap,
    f: &SimplicialMap,
) -> Result<Pushout> {
    i.check(a, b).map_err(Error::input)?;
    f.check(a, c).map_err(Error::input)?;
    if !i.is_injective() {
        return Err(Error::input("pushout needs an injective leg"));
    }
    let k = b.trunc_dim();
    if c.trunc_dim() != k || a.trunc_dim() != k {
        return Err(Error::input("pushout needs equal truncation levels"));
    }
    // g on B: through f on the image of i, fresh cells elsewhere.
    let mut g_cells = Vec::with_capacity(k + 1);
    let mut parts = SSetParts::default();
    for d in 0..=k {
        let mut from_a = vec![None; b.count(d)];
        for (x, &y) in i.cells[d].iter().enumerate() {
            from_a[y] = Some(x);
        }
        let mut names: Vec<String> = c.names(d).to_vec();
        let mut taken: HashSet<String> = names.iter().cloned().collect();
        let mut g = Vec::with_capacity(b.count(d));
        for (y, pre) in from_a.iter().enumerate() {
            match pre {
                Some(x) => g.push(f.cells[d][*x]),
                None => {
                    let mut n = b.name(d, y).to_string();
                    while !taken.insert(n.clone()) {
                        n.push('\'');
                    }
                    g.push(names.len());
                    names.push(n);
                }
            }
        }
        parts.names.push(names);
        g_cells.push(g);
    }
    let mut from_a_eps = vec![None; b.eps_len()];
    for (x, &y) in i.eps.iter().enumerate() {
        from_a_eps[y] = Some(x);
    }
    parts.eps_names = c.parts().eps_names.clone();
    parts.eps_edge = c.parts().eps_edge.clone();
    let mut taken: HashSet<String> = parts.eps_names.iter().cloned().collect();
    let mut g_eps = Vec::with_capacity(b.eps_len());
    for (y, pre) in from_a_eps.iter().enumerate() {
        match pre {
            Some(x) => g_eps.push(f.eps[*x]),
            None => {
                let mut n = b.eps_name(y).to_string();
                while !taken.insert(n.clone()) {
                    n.push('\'');
                }
                g_eps.push(parts.eps_names.len());
                parts.eps_names.push(n);
                parts.eps_edge.push(g_cells[1][b.eps_edge(y)]);
            }
        }
    }
    // Structure maps: C's tables, extended by B's tables on fresh cells.
    for d in 0..=k {
        let size = parts.names[d].len();
        let fresh: Vec<(usize, usize)> = (0..b.count(d))
            .filter(|&y| g_cells[d][y] >= c.count(d))
            .map(|y| (y, g_cells[d][y]))
            .collect();
        let faces = if d == 0 { 0 } else { d + 1 };
        let mut face = Vec::with_capacity(faces);
        for idx in 0..faces {
            let mut t = c.parts().face[d][idx].clone();
            t.resize(size, 0);
            for &(y, p) in &fresh {
                t[p] = g_cells[d - 1][b.face(d, idx, y)];
            }
            face.push(t);
        }
        parts.face.push(face);
        let degens = if d < k { d + 1 } else { 0 };
        let mut degen = Vec::with_capacity(degens);
        for idx in 0..degens {
            let mut t = c.parts().degen[d][idx].clone();
            t.resize(size, 0);
            for &(y, p) in &fresh {
                t[p] = g_cells[d + 1][b.degen(d, idx, y)];
            }
            degen.push(t);
        }
        parts.degen.push(degen);
    }
    let object = EpsSimplicialSet::new(parts)?;
    let j = SimplicialMap {
        cells: (0..=k).map(|d| (0..c.count(d)).collect()).collect(),
        eps: (0..c.eps_len()).collect(),
    };
    let g = SimplicialMap {
        cells: g_cells,
        eps: g_eps,
    };
    assert!(j.check(c, &object).is_ok() && g.check(b, &object).is_ok());
    assert_eq!(i.then(&g), f.then(&j), "pushout square must commute");
    Ok(Pushout { object, j, g })
}
