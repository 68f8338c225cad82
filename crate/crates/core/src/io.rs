//! JSON formats for algebras, ε-simplicial sets and test spaces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::relcore::{
    from_effect_algebra, from_effect_algebroid, from_groupoid, EffectAlgebraInput, EffectAlgebroidInput,
    FrobeniusAlgebra, GroupoidInput, RelMonoid,
};
use crate::simplicial::{EpsSimplicialSet, SSetParts};
use crate::{Error, Result};

/// `algebra.json`, discriminated by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraFile {
    Monoid(MonoidInput),
    Frobenius(FrobeniusInput),
    EffectAlgebra(EffectAlgebraInput),
    Groupoid(GroupoidInput),
    EffectAlgebroid(EffectAlgebroidInput),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidInput {
    pub elements: Vec<String>,
    pub mu: Vec<[String; 3]>,
    pub eta: Vec<String>,
}

/// Without `delta`, the comultiplication is derived from `μ`, `η` and `ε`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusInput {
    pub elements: Vec<String>,
    pub mu: Vec<[String; 3]>,
    pub eta: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<[String; 3]>>,
    pub epsilon: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Monoid(RelMonoid),
    Frobenius(FrobeniusAlgebra),
}

impl Algebra {
    pub fn monoid(&self) -> &RelMonoid {
        match self {
            Algebra::Monoid(m) => m,
            Algebra::Frobenius(f) => f.monoid(),
        }
    }

    pub fn frobenius(&self) -> Option<&FrobeniusAlgebra> {
        match self {
            Algebra::Monoid(_) => None,
            Algebra::Frobenius(f) => Some(f),
        }
    }
}

fn triples(names: &[String], ts: impl IntoIterator<Item = (usize, usize, usize)>) -> Vec<[String; 3]> {
    ts.into_iter()
        .map(|(a, b, c)| [names[a].clone(), names[b].clone(), names[c].clone()])
        .collect()
}

impl AlgebraFile {
    /// Builds the algebra; constructors validate their input structure,
    /// plain monoid/Frobenius tables are only checked for well-formedness.
    pub fn build(&self) -> Result<Algebra> {
        Ok(match self {
            AlgebraFile::Monoid(MonoidInput { elements, mu, eta }) => {
                Algebra::Monoid(RelMonoid::from_named(elements, mu, eta)?)
            }
            AlgebraFile::Frobenius(FrobeniusInput {
                elements,
                mu,
                eta,
                delta: Some(delta),
                epsilon,
            }) => Algebra::Frobenius(FrobeniusAlgebra::from_named(elements, mu, eta, delta, epsilon)?),
            AlgebraFile::Frobenius(FrobeniusInput {
                elements,
                mu,
                eta,
                delta: None,
                epsilon,
            }) => {
                let m = RelMonoid::from_named(elements, mu, eta)?;
                let eps = epsilon
                    .iter()
                    .map(|e| {
                        m.index_of(e)
                            .ok_or_else(|| Error::input(format!("unknown element `{e}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Algebra::Frobenius(FrobeniusAlgebra::from_monoid_and_counit(m, eps)?)
            }
            AlgebraFile::EffectAlgebra(i) => Algebra::Frobenius(from_effect_algebra(i)?),
            AlgebraFile::Groupoid(i) => Algebra::Frobenius(from_groupoid(i)?),
            AlgebraFile::EffectAlgebroid(i) => Algebra::Frobenius(from_effect_algebroid(i)?),
        })
    }

    pub fn from_monoid(m: &RelMonoid) -> Self {
        let names = m.names();
        AlgebraFile::Monoid(MonoidInput {
            elements: names.to_vec(),
            mu: triples(names, m.mu().iter().copied()),
            eta: m.eta().iter().map(|&r| names[r].clone()).collect(),
        })
    }

    pub fn from_frobenius(f: &FrobeniusAlgebra) -> Self {
        let names = f.names();
        AlgebraFile::Frobenius(FrobeniusInput {
            elements: names.to_vec(),
            mu: triples(names, f.mu().iter().copied()),
            eta: f.eta().iter().map(|&r| names[r].clone()).collect(),
            delta: Some(triples(names, f.delta().iter().copied())),
            epsilon: f.epsilon().iter().map(|&e| names[e].clone()).collect(),
        })
    }

    /// Parses `algebra.json`. The body is decoded against the concrete
    /// schema for its `kind` so that errors keep their line and column.
    pub fn parse(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Kind {
            kind: String,
        }
        let Kind { kind } = serde_json::from_str(text)?;
        Ok(match kind.as_str() {
            "monoid" => AlgebraFile::Monoid(serde_json::from_str(text)?),
            "frobenius" => AlgebraFile::Frobenius(serde_json::from_str(text)?),
            "effect_algebra" => AlgebraFile::EffectAlgebra(serde_json::from_str(text)?),
            "groupoid" => AlgebraFile::Groupoid(serde_json::from_str(text)?),
            "effect_algebroid" => AlgebraFile::EffectAlgebroid(serde_json::from_str(text)?),
            other => return Err(Error::input(format!("unknown algebra kind `{other}`"))),
        })
    }
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    AlgebraFile::parse(text)?.build()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsDecl {
    pub id: String,
    pub edge: String,
}

/// `sset.json`. Face and degeneracy tables are keyed `"d,i"` where `d` is
/// the dimension of the cells the map is applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSetFile {
    pub trunc_dim: usize,
    pub cells: BTreeMap<String, Vec<String>>,
    pub face: BTreeMap<String, BTreeMap<String, String>>,
    pub degen: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub eps: Vec<EpsDecl>,
}

impl SSetFile {
    pub fn from_sset(x: &EpsSimplicialSet) -> Self {
        let k = x.trunc_dim();
        let mut cells = BTreeMap::new();
        let mut face = BTreeMap::new();
        let mut degen = BTreeMap::new();
        for d in 0..=k {
            cells.insert(d.to_string(), x.names(d).to_vec());
            if d > 0 {
                for i in 0..=d {
                    let m = (0..x.count(d))
                        .map(|c| {
                            (
                                x.name(d, c).to_string(),
                                x.name(d - 1, x.face(d, i, c)).to_string(),
                            )
                        })
                        .collect();
                    face.insert(format!("{d},{i}"), m);
                }
            }
            if d < k {
                for i in 0..=d {
                    let m = (0..x.count(d))
                        .map(|c| {
                            (
                                x.name(d, c).to_string(),
                                x.name(d + 1, x.degen(d, i, c)).to_string(),
                            )
                        })
                        .collect();
                    degen.insert(format!("{d},{i}"), m);
                }
            }
        }
        let eps = (0..x.eps_len())
            .map(|e| EpsDecl {
                id: x.eps_name(e).to_string(),
                edge: x.name(1, x.eps_edge(e)).to_string(),
            })
            .collect();
        SSetFile {
            trunc_dim: k,
            cells,
            face,
            degen,
            eps,
        }
    }

    pub fn to_sset(&self) -> Result<EpsSimplicialSet> {
        let k = self.trunc_dim;
        let mut parts = SSetParts::default();
        for d in 0..=k {
            let names = self
                .cells
                .get(&d.to_string())
                .cloned()
                .ok_or_else(|| Error::input(format!("missing cells of dimension {d}")))?;
            parts.names.push(names);
        }
        let index: Vec<BTreeMap<&str, usize>> = parts
            .names
            .iter()
            .map(|ns| ns.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect())
            .collect();
        let table = |tables: &BTreeMap<String, BTreeMap<String, String>>,
                     d: usize,
                     i: usize,
                     to: usize,
                     what: &str|
         -> Result<Vec<usize>> {
            let key = format!("{d},{i}");
            let m = tables
                .get(&key)
                .ok_or_else(|| Error::input(format!("missing {what} table `{key}`")))?;
            parts.names[d]
                .iter()
                .map(|c| {
                    let v = m
                        .get(c)
                        .ok_or_else(|| Error::input(format!("{what} `{key}` undefined on `{c}`")))?;
                    index[to]
                        .get(v.as_str())
                        .copied()
                        .ok_or_else(|| Error::input(format!("{what} `{key}` maps to unknown cell `{v}`")))
                })
                .collect()
        };
        let mut faces = Vec::with_capacity(k + 1);
        let mut degens = Vec::with_capacity(k + 1);
        for d in 0..=k {
            let f = if d == 0 {
                Vec::new()
            } else {
                (0..=d)
                    .map(|i| table(&self.face, d, i, d - 1, "face"))
                    .collect::<Result<_>>()?
            };
            faces.push(f);
            let s = if d < k {
                (0..=d)
                    .map(|i| table(&self.degen, d, i, d + 1, "degeneracy"))
                    .collect::<Result<_>>()?
            } else {
                Vec::new()
            };
            degens.push(s);
        }
        parts.face = faces;
        parts.degen = degens;
        for e in &self.eps {
            let edge = index
                .get(1)
                .and_then(|m| m.get(e.edge.as_str()))
                .copied()
                .ok_or_else(|| Error::input(format!("witness `{}` on unknown edge `{}`", e.id, e.edge)))?;
            parts.eps_names.push(e.id.clone());
            parts.eps_edge.push(edge);
        }
        EpsSimplicialSet::new(parts)
    }
}

pub fn parse_sset(text: &str) -> Result<EpsSimplicialSet> {
    let file: SSetFile = serde_json::from_str(text)?;
    file.to_sset()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::nerve_frobenius;

    #[test]
    fn sset_json_round_trip() {
        let f = FrobeniusAlgebra::from_named(
            &["0", "1"],
            &[["0", "0", "0"], ["0", "1", "1"], ["1", "0", "1"]],
            &["0"],
            &[["1", "1", "1"], ["0", "0", "1"], ["0", "1", "0"]],
            &["1"],
        )
        .unwrap();
        let x = nerve_frobenius(&f, 3).unwrap();
        let text = serde_json::to_string(&SSetFile::from_sset(&x)).unwrap();
        assert_eq!(parse_sset(&text).unwrap(), x);
    }

    #[test]
    fn frobenius_without_delta_derives_it() {
        let text = r#"{"kind":"frobenius","elements":["0","1"],
            "mu":[["0","0","0"],["0","1","1"],["1","0","1"]],"eta":["0"],"epsilon":["1"]}"#;
        let f = parse_algebra(text).unwrap();
        let f = f.frobenius().unwrap();
        assert!(f.check().ok);
        assert_eq!(f.delta().len(), 3);
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_algebra("{\"kind\": \"monoid\",\n \"elements\": [1]}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
