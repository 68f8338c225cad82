//! Nerves of relational monoids and Frobenius algebras.
//!
//! Low dimensions are written out explicitly: vertices are the units, edges
//! are all elements, and a 2-cell is a triple `μ: (a, b) ⇸ c` with
//! `d₀ = a`, `d₁ = c`, `d₂ = b`. Higher dimensions come from coskeletal
//! completion.

use std::collections::HashMap;

use crate::lifting::enumerate_maps;
use crate::relcore::{FrobeniusAlgebra, RelMonoid};
use crate::simplicial::{coskeletal_completion, EpsSimplicialSet, FaceIndex, SSetParts, SimplicialMap};
use crate::{Error, Result};

/// Name of the 2-cell for `μ: (a, b) ⇸ c`.
pub fn triangle_name(a: &str, b: &str, c: &str) -> String {
    format!("({a},{b},{c})")
}

pub fn nerve_monoid(m: &RelMonoid, k: usize) -> Result<EpsSimplicialSet> {
    if k < 2 {
        return Err(Error::input("nerves are built with at least dimension 2"));
    }
    let report = m.check();
    if !report.ok {
        return Err(Error::Axiom {
            structure: "monoid",
            axiom: report.violated_axiom.expect("violation").to_string(),
            witness: report.witness.unwrap_or_default().join(", "),
        });
    }
    let units: Vec<usize> = m.eta().iter().copied().collect();
    let vertex_of: HashMap<usize, usize> = units.iter().enumerate().map(|(v, &r)| (r, v)).collect();
    let n = m.len();
    let st: Vec<(usize, usize)> = (0..n).map(|a| m.source_target(a)).collect::<Result<_>>()?;
    let triangles: Vec<(usize, usize, usize)> = m.mu().iter().copied().collect();
    let tri_index: HashMap<(usize, usize, usize), usize> =
        triangles.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let parts = SSetParts {
        names: vec![
            units.iter().map(|&r| m.name(r).to_string()).collect(),
            m.names().to_vec(),
            triangles
                .iter()
                .map(|&(a, b, c)| triangle_name(m.name(a), m.name(b), m.name(c)))
                .collect(),
        ],
        face: vec![
            vec![],
            vec![
                (0..n).map(|a| vertex_of[&st[a].1]).collect(),
                (0..n).map(|a| vertex_of[&st[a].0]).collect(),
            ],
            vec![
                triangles.iter().map(|t| t.0).collect(),
                triangles.iter().map(|t| t.2).collect(),
                triangles.iter().map(|t| t.1).collect(),
            ],
        ],
        degen: vec![
            vec![units.clone()],
            vec![
                (0..n).map(|a| tri_index[&(a, st[a].0, a)]).collect(),
                (0..n).map(|a| tri_index[&(st[a].1, a, a)]).collect(),
            ],
            vec![],
        ],
        eps_names: vec![],
        eps_edge: vec![],
    };
    coskeletal_completion(&EpsSimplicialSet::new(parts)?, k)
}

/// The monoid nerve with one ε-witness per counit element, named after it.
pub fn nerve_frobenius(f: &FrobeniusAlgebra, k: usize) -> Result<EpsSimplicialSet> {
    let report = f.check();
    if !report.ok {
        return Err(Error::Axiom {
            structure: "Frobenius algebra",
            axiom: report.violated_axiom.expect("violation").to_string(),
            witness: report.witness.unwrap_or_default().join(", "),
        });
    }
    let x = nerve_monoid(f.monoid(), k)?;
    let extra: Vec<(String, usize)> = f.epsilon().iter().map(|&e| (f.name(e).to_string(), e)).collect();
    x.with_eps(&extra)
}

/// The map of nerves induced by an element map `h: A → B` (a homomorphism).
/// Witnesses follow `h` when both nerves carry them.
pub fn nerve_map(h: &[usize], na: &EpsSimplicialSet, nb: &EpsSimplicialSet) -> Option<SimplicialMap> {
    let k = na.trunc_dim();
    let idx = FaceIndex::new(nb);
    let mut cells: Vec<Vec<usize>> = Vec::with_capacity(k + 1);
    // A vertex is a unit, which is its own degenerate edge.
    cells.push(
        (0..na.count(0))
            .map(|v| {
                let e = h[na.degen(0, 0, v)];
                (0..nb.count(0)).find(|&w| nb.degen(0, 0, w) == e)
            })
            .collect::<Option<_>>()?,
    );
    cells.push(h.to_vec());
    for d in 2..=k {
        let prev = &cells[d - 1];
        let level = (0..na.count(d))
            .map(|c| {
                let t: Vec<usize> = na.faces_of(d, c).iter().map(|&x| prev[x]).collect();
                idx.by_faces[d].get(&t).and_then(|v| v.first().copied())
            })
            .collect::<Option<_>>()?;
        cells.push(level);
    }
    let eps = (0..na.eps_len())
        .map(|e| {
            let target = h[na.eps_edge(e)];
            idx.eps_on_edge[target].first().copied()
        })
        .collect::<Option<_>>()?;
    let map = SimplicialMap { cells, eps };
    map.check(na, nb).ok()?;
    Some(map)
}

/// All maps `N(A) → N(B)`, found by the lifting engine.
pub fn enumerate_nerve_maps(na: &EpsSimplicialSet, nb: &EpsSimplicialSet) -> Vec<SimplicialMap> {
    enumerate_maps(na, nb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bool2() -> FrobeniusAlgebra {
        FrobeniusAlgebra::from_named(
            &["0", "1"],
            &[["0", "0", "0"], ["0", "1", "1"], ["1", "0", "1"]],
            &["0"],
            &[["1", "1", "1"], ["0", "0", "1"], ["0", "1", "0"]],
            &["1"],
        )
        .unwrap()
    }

    #[test]
    fn bool2_nerve_low_dimensions() {
        let x = nerve_frobenius(&bool2(), 4).unwrap();
        assert!(x.validate().ok);
        assert_eq!(x.count(0), 1);
        assert_eq!(x.count(1), 2);
        assert_eq!(x.count(2), 3);
        assert_eq!(x.nondegenerate(2).len(), 0);
        assert_eq!(x.eps_len(), 1);
        assert_eq!(x.name(1, x.eps_edge(0)), "1");
    }

    #[test]
    fn point_nerve() {
        let m = RelMonoid::from_named(&["e"], &[["e", "e", "e"]], &["e"]).unwrap();
        let x = nerve_monoid(&m, 4).unwrap();
        for d in 0..=4 {
            assert_eq!(x.count(d), 1);
        }
    }

    #[test]
    fn identity_hom_gives_identity_map() {
        let x = nerve_frobenius(&bool2(), 3).unwrap();
        let id = nerve_map(&[0, 1], &x, &x).unwrap();
        assert_eq!(id, SimplicialMap::identity(&x));
    }
}
