//! Standard simplices, horns, ε-horns and face unions, as inclusions into
//! their ambient simplex.
//!
//! Cells of `Δⁿ` are monotone maps `[d] → [n]`, named by their vertex
//! sequence (`"013"`, `"0112"`, …). `Σⁿ` is `Δⁿ` with one ε-witness on the
//! edge `⟨0, n⟩`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::simplicial::{EpsSimplicialSet, SSetParts, SimplicialMap, Subobject};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub enum ShapeName {
    Delta(usize),
    BoundaryDelta(usize),
    Horn(usize, usize),
    Sigma(usize),
    FaceSigma(usize, usize),
    EpsHorn(usize, usize),
    FaceUnionSigma(usize, Vec<usize>),
    FaceUnionDelta(usize, Vec<usize>),
    Custom(Subobject),
}

/// A realized shape `A ↪ B`.
#[derive(Clone, Debug)]
pub struct Inclusion {
    pub domain: EpsSimplicialSet,
    pub codomain: Arc<EpsSimplicialSet>,
    pub map: SimplicialMap,
}

impl Inclusion {
    /// `inner ↪ outer` for two subobjects of one parent, `inner ⊆ outer`.
    /// Cells are matched by name.
    pub fn between(outer: &Subobject, inner: &Subobject) -> Result<Self> {
        let (cod, _) = outer.to_sset();
        let cod = Arc::new(cod);
        let (dom, _) = inner.to_sset();
        let mut cells = Vec::new();
        for d in 0..=dom.trunc_dim() {
            for c in 0..dom.count(d) {
                let t = cod
                    .index_of(d, dom.name(d, c))
                    .ok_or_else(|| Error::Shape("inner subobject is not contained in outer".into()))?;
                cells.push((d, t));
            }
        }
        let eps = (0..dom.eps_len())
            .map(|e| {
                cod.eps_index_of(dom.eps_name(e))
                    .ok_or_else(|| Error::Shape("inner witness is not contained in outer".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Inclusion::from_subobject(&Subobject::generated(
            cod, &cells, &eps,
        )))
    }

    pub fn from_subobject(sub: &Subobject) -> Self {
        let (domain, map) = sub.to_sset();
        Inclusion {
            domain,
            codomain: sub.parent().clone(),
            map,
        }
    }
}

fn digit_labels(n: usize) -> Vec<String> {
    (0..=n).map(|v| v.to_string()).collect()
}

/// `Δⁿ` truncated at `k`, with ε-witnesses on the listed edges `(a, b)`,
/// `a < b`. Cells are named by concatenating vertex labels; witnesses are
/// named `e` followed by their edge's name.
pub fn marked_simplex(
    n: usize,
    k: usize,
    labels: &[String],
    marked: &[(usize, usize)],
) -> Result<EpsSimplicialSet> {
    if labels.len() != n + 1 {
        return Err(Error::Shape(format!("need {} vertex labels", n + 1)));
    }
    if marked.iter().any(|&(a, b)| a > b || b > n) {
        return Err(Error::Shape("marked edge out of range".into()));
    }
    if !marked.is_empty() && k == 0 {
        return Err(Error::Shape("marked edges need dimension 1".into()));
    }
    let mut levels: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k + 1);
    for d in 0..=k {
        let mut seqs = Vec::new();
        let mut cur = Vec::with_capacity(d + 1);
        monotone(d + 1, 0, n, &mut cur, &mut seqs);
        levels.push(seqs);
    }
    let lookup = |d: usize, s: &[usize]| -> usize {
        levels[d]
            .binary_search_by(|t| t.as_slice().cmp(s))
            .expect("monotone sequence is a cell")
    };
    let name = |s: &[usize]| s.iter().map(|&v| labels[v].as_str()).collect::<String>();
    let mut parts = SSetParts::default();
    for d in 0..=k {
        parts.names.push(levels[d].iter().map(|s| name(s)).collect());
        let faces = if d == 0 { 0 } else { d + 1 };
        parts.face.push(
            (0..faces)
                .map(|i| {
                    levels[d]
                        .iter()
                        .map(|s| {
                            let mut t = s.clone();
                            t.remove(i);
                            lookup(d - 1, &t)
                        })
                        .collect()
                })
                .collect(),
        );
        let degens = if d < k { d + 1 } else { 0 };
        parts.degen.push(
            (0..degens)
                .map(|i| {
                    levels[d]
                        .iter()
                        .map(|s| {
                            let mut t = s.clone();
                            t.insert(i, s[i]);
                            lookup(d + 1, &t)
                        })
                        .collect()
                })
                .collect(),
        );
    }
    for &(a, b) in marked {
        parts.eps_names.push(format!("e{}", name(&[a, b])));
        parts.eps_edge.push(lookup(1, &[a, b]));
    }
    EpsSimplicialSet::new(parts)
}

// Lexicographic generation, so every level is sorted.
fn monotone(len: usize, lo: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for v in lo..=n {
        cur.push(v);
        monotone(len, v, n, cur, out);
        cur.pop();
    }
}

pub fn delta(n: usize, k: usize) -> Arc<EpsSimplicialSet> {
    Arc::new(marked_simplex(n, k, &digit_labels(n), &[]).expect("valid simplex"))
}

/// `Σⁿ` for `n ≥ 1`.
pub fn sigma(n: usize, k: usize) -> Result<Arc<EpsSimplicialSet>> {
    if n == 0 {
        return Err(Error::Shape("Σⁿ needs n ≥ 1".into()));
    }
    Ok(Arc::new(marked_simplex(n, k, &digit_labels(n), &[(0, n)])?))
}

/// The subsimplex on the given vertices (labels are single digits, so
/// this is for ambient simplices built by [`delta`] / [`sigma`]). Witnesses
/// whose edge lies in it are included only when `marked` is set.
pub fn span(parent: &Arc<EpsSimplicialSet>, vertices: &[usize], marked: bool) -> Result<Subobject> {
    let vs: BTreeSet<usize> = vertices.iter().copied().collect();
    let dim = vs
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::Shape("empty vertex set".into()))?;
    if dim > parent.trunc_dim() {
        return Err(Error::Shape("subsimplex above truncation level".into()));
    }
    let name: String = vs.iter().map(|v| v.to_string()).collect();
    let cell = parent
        .index_of(dim, &name)
        .ok_or_else(|| Error::Shape(format!("no simplex `{name}`")))?;
    let mut sub = Subobject::generated(parent.clone(), &[(dim, cell)], &[]);
    if marked {
        let eps: Vec<usize> = (0..parent.eps_len())
            .filter(|&e| sub.contains(1, parent.eps_edge(e)))
            .collect();
        sub = Subobject::generated(parent.clone(), &[(dim, cell)], &eps);
    }
    Ok(sub)
}

/// `∂ᵢ` of the ambient `n`-simplex; the marked edge survives iff it lies in the face.
pub fn face(parent: &Arc<EpsSimplicialSet>, n: usize, i: usize) -> Result<Subobject> {
    if i > n {
        return Err(Error::Shape(format!("face index {i} exceeds {n}")));
    }
    let vs: Vec<usize> = (0..=n).filter(|&v| v != i).collect();
    span(parent, &vs, true)
}

pub fn face_union(parent: &Arc<EpsSimplicialSet>, n: usize, faces: &[usize]) -> Result<Subobject> {
    let mut acc = Subobject::empty(parent.clone());
    for &i in faces {
        acc = acc.union(&face(parent, n, i)?)?;
    }
    Ok(acc)
}

impl ShapeName {
    /// Ambient dimension and whether the ambient simplex is marked.
    fn ambient(&self) -> Option<(usize, bool)> {
        Some(match self {
            ShapeName::Delta(n)
            | ShapeName::BoundaryDelta(n)
            | ShapeName::Horn(n, _)
            | ShapeName::FaceUnionDelta(n, _) => (*n, false),
            ShapeName::Sigma(n)
            | ShapeName::FaceSigma(n, _)
            | ShapeName::EpsHorn(n, _)
            | ShapeName::FaceUnionSigma(n, _) => (*n, true),
            ShapeName::Custom(_) => return None,
        })
    }

    /// The faces of the ambient simplex making up the domain, or `None` for
    /// the whole simplex.
    fn faces(&self) -> Result<Option<Vec<usize>>> {
        let all_but = |n: usize, j: usize| (0..=n).filter(|&i| i != j).collect::<Vec<_>>();
        Ok(match self {
            ShapeName::Delta(_) | ShapeName::Sigma(_) | ShapeName::Custom(_) => None,
            ShapeName::BoundaryDelta(n) => Some((0..=*n).collect()),
            ShapeName::Horn(n, j) => {
                if j > n {
                    return Err(Error::Shape(format!("horn index {j} exceeds {n}")));
                }
                Some(all_but(*n, *j))
            }
            ShapeName::FaceSigma(_, i) => Some(vec![*i]),
            ShapeName::EpsHorn(n, i) => {
                if *i != 0 && i != n {
                    return Err(Error::Shape(format!("ε-horn index must be 0 or {n}")));
                }
                Some(all_but(*n, *i))
            }
            ShapeName::FaceUnionSigma(n, is) | ShapeName::FaceUnionDelta(n, is) => {
                if let Some(i) = is.iter().find(|&&i| i > *n) {
                    return Err(Error::Shape(format!("face index {i} exceeds {n}")));
                }
                Some(is.clone())
            }
        })
    }

    /// Realizes the shape at truncation `k` as an inclusion into its ambient
    /// `Δⁿ` or `Σⁿ`.
    pub fn realize(&self, k: usize) -> Result<Inclusion> {
        if let ShapeName::Custom(sub) = self {
            return Ok(Inclusion::from_subobject(sub));
        }
        let (n, marked) = self.ambient().expect("non-custom shape");
        if n > 6 {
            return Err(Error::Shape("shapes above dimension 6 are not supported".into()));
        }
        if k < n.max(2) {
            return Err(Error::Shape(format!("truncation {k} too low for dimension {n}")));
        }
        let parent = if marked { sigma(n, k)? } else { delta(n, k) };
        let sub = match self.faces()? {
            None => Subobject::full(parent),
            Some(fs) => face_union(&parent, n, &fs)?,
        };
        Ok(Inclusion::from_subobject(&sub))
    }
}

impl fmt::Display for ShapeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |is: &[usize]| is.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        match self {
            ShapeName::Delta(n) => write!(f, "delta:{n}"),
            ShapeName::BoundaryDelta(n) => write!(f, "boundary:{n}"),
            ShapeName::Horn(n, j) => write!(f, "horn:{n}:{j}"),
            ShapeName::Sigma(n) => write!(f, "sigma:{n}"),
            ShapeName::FaceSigma(n, i) => write!(f, "face-sigma:{n}:{i}"),
            ShapeName::EpsHorn(n, i) => write!(f, "eps-horn:{n}:{i}"),
            ShapeName::FaceUnionSigma(n, is) => write!(f, "faces-sigma:{n}:{}", list(is)),
            ShapeName::FaceUnionDelta(n, is) => write!(f, "faces-delta:{n}:{}", list(is)),
            ShapeName::Custom(_) => write!(f, "custom"),
        }
    }
}

impl FromStr for ShapeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Shape(format!("cannot parse shape `{s}`"));
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let list = |t: &str| -> Result<Vec<usize>> {
            let mut v = t.split(',').map(num).collect::<Result<Vec<_>>>()?;
            v.sort_unstable();
            v.dedup();
            Ok(v)
        };
        let shape = match parts.as_slice() {
            ["delta", n] => ShapeName::Delta(num(n)?),
            ["boundary", n] => ShapeName::BoundaryDelta(num(n)?),
            ["horn", n, j] => ShapeName::Horn(num(n)?, num(j)?),
            ["sigma", n] => ShapeName::Sigma(num(n)?),
            ["face-sigma", n, i] => ShapeName::FaceSigma(num(n)?, num(i)?),
            ["eps-horn", n, i] => ShapeName::EpsHorn(num(n)?, num(i)?),
            ["faces-sigma", n, is] => ShapeName::FaceUnionSigma(num(n)?, list(is)?),
            ["faces-delta", n, is] => ShapeName::FaceUnionDelta(num(n)?, list(is)?),
            _ => return Err(bad()),
        };
        shape.faces()?;
        Ok(shape)
    }
}
