//! Bundled example algebras and test spaces.

use crate::io::{AlgebraFile, FrobeniusInput, MonoidInput};
use crate::relcore::{
    EffectAlgebraInput, EffectAlgebroidInput, FrobeniusAlgebra, GroupoidInput, MorphismDecl, RelMonoid,
};
use crate::simplicial::{coskeletal_completion, EpsSimplicialSet, Subobject};
use crate::testspace::{TestSpace, TestSpaceInput};
use crate::{Error, Result};
use std::sync::Arc;

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn triples(xs: &[[&str; 3]]) -> Vec<[String; 3]> {
    xs.iter().map(|t| t.map(str::to_string)).collect()
}

fn pairs(xs: &[[&str; 2]]) -> Vec<[String; 2]> {
    xs.iter().map(|t| t.map(str::to_string)).collect()
}

fn mor(id: &str, src: &str, dst: &str) -> MorphismDecl {
    MorphismDecl {
        id: id.into(),
        src: src.into(),
        dst: dst.into(),
    }
}

/// Effect algebra given by its zero, one and the sums not involving zero;
/// `0 ⊕ a = a ⊕ 0 = a` is filled in.
fn effect_algebra(elements: &[&str], sums: &[[&str; 3]]) -> AlgebraFile {
    let zero = elements[0];
    let one = elements[elements.len() - 1];
    let mut plus = Vec::new();
    for &a in elements {
        plus.push([zero, a, a]);
        if a != zero {
            plus.push([a, zero, a]);
        }
    }
    plus.extend_from_slice(sums);
    AlgebraFile::EffectAlgebra(EffectAlgebraInput {
        elements: strs(elements),
        plus: triples(&plus),
        zero: zero.into(),
        one: one.into(),
    })
}

/// One-object groupoid from a group table given as `[f, g, f∘g]`.
fn group(elements: &[&str], table: &[[&str; 3]], inverses: &[[&str; 2]]) -> AlgebraFile {
    AlgebraFile::Groupoid(GroupoidInput {
        objects: strs(&["*"]),
        morphisms: elements.iter().map(|e| mor(e, "*", "*")).collect(),
        comp: triples(table),
        inv: pairs(inverses),
    })
}

fn cyclic(n: usize) -> AlgebraFile {
    let names: Vec<String> = (0..n)
        .map(|i| if i == 0 { "e".into() } else { format!("g{i}") })
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut table = Vec::new();
    let mut inv = Vec::new();
    for i in 0..n {
        for j in 0..n {
            table.push([refs[i], refs[j], refs[(i + j) % n]]);
        }
        inv.push([refs[i], refs[(n - i) % n]]);
    }
    group(&refs, &table, &inv)
}

fn klein() -> AlgebraFile {
    let els = ["e", "a", "b", "c"];
    let mut table = Vec::new();
    for (i, &x) in els.iter().enumerate() {
        for (j, &y) in els.iter().enumerate() {
            table.push([x, y, els[i ^ j]]);
        }
    }
    let inv: Vec<[&str; 2]> = els.iter().map(|&x| [x, x]).collect();
    group(&els, &table, &inv)
}

fn codiscrete_groupoid() -> AlgebraFile {
    AlgebraFile::Groupoid(GroupoidInput {
        objects: strs(&["x", "y"]),
        morphisms: vec![
            mor("1x", "x", "x"),
            mor("1y", "y", "y"),
            mor("f", "x", "y"),
            mor("g", "y", "x"),
        ],
        comp: triples(&[
            ["1x", "1x", "1x"],
            ["1y", "1y", "1y"],
            ["f", "1x", "f"],
            ["1y", "f", "f"],
            ["g", "1y", "g"],
            ["1x", "g", "g"],
            ["f", "g", "1y"],
            ["g", "f", "1x"],
        ]),
        inv: pairs(&[["1x", "1x"], ["1y", "1y"], ["f", "g"], ["g", "f"]]),
    })
}

fn discrete_groupoid() -> AlgebraFile {
    AlgebraFile::Groupoid(GroupoidInput {
        objects: strs(&["x", "y"]),
        morphisms: vec![mor("1x", "x", "x"), mor("1y", "y", "y")],
        comp: triples(&[["1x", "1x", "1x"], ["1y", "1y", "1y"]]),
        inv: pairs(&[["1x", "1x"], ["1y", "1y"]]),
    })
}

/// Two points `x`, `y`, one segment each way (`u: x → y`, `v: y → x`) with
/// `u ∪ v = 1x`, `v ∪ u = 1y`.
fn circle() -> AlgebraFile {
    AlgebraFile::EffectAlgebroid(EffectAlgebroidInput {
        points: strs(&["x", "y"]),
        segments: vec![
            mor("0x", "x", "x"),
            mor("1x", "x", "x"),
            mor("0y", "y", "y"),
            mor("1y", "y", "y"),
            mor("u", "x", "y"),
            mor("v", "y", "x"),
        ],
        cup: triples(&[
            ["0x", "0x", "0x"],
            ["0x", "1x", "1x"],
            ["1x", "0x", "1x"],
            ["0x", "u", "u"],
            ["u", "0y", "u"],
            ["0y", "0y", "0y"],
            ["0y", "1y", "1y"],
            ["1y", "0y", "1y"],
            ["0y", "v", "v"],
            ["v", "0x", "v"],
            ["u", "v", "1x"],
            ["v", "u", "1y"],
        ]),
        perp: pairs(&[
            ["0x", "1x"],
            ["1x", "0x"],
            ["0y", "1y"],
            ["1y", "0y"],
            ["u", "v"],
            ["v", "u"],
        ]),
        zeros: pairs(&[["x", "0x"], ["y", "0y"]]),
        ones: pairs(&[["x", "1x"], ["y", "1y"]]),
    })
}

/// Every bundled Frobenius algebra as `(name, file)`.
pub fn frobenius_files() -> Vec<(&'static str, AlgebraFile)> {
    vec![
        (
            "one-element",
            AlgebraFile::Frobenius(FrobeniusInput {
                elements: strs(&["e"]),
                mu: triples(&[["e", "e", "e"]]),
                eta: strs(&["e"]),
                delta: Some(triples(&[["e", "e", "e"]])),
                epsilon: strs(&["e"]),
            }),
        ),
        ("bool2", effect_algebra(&["0", "1"], &[])),
        (
            "bool4",
            effect_algebra(&["0", "p", "q", "1"], &[["p", "q", "1"], ["q", "p", "1"]]),
        ),
        ("mv3", effect_algebra(&["0", "h", "1"], &[["h", "h", "1"]])),
        (
            "mv4",
            effect_algebra(
                &["0", "t", "u", "1"],
                &[["t", "t", "u"], ["t", "u", "1"], ["u", "t", "1"]],
            ),
        ),
        (
            "diamond",
            effect_algebra(&["0", "a", "b", "1"], &[["a", "b", "1"], ["b", "a", "1"]]),
        ),
        ("z2", cyclic(2)),
        ("z3", cyclic(3)),
        ("klein4", klein()),
        ("codiscrete2", codiscrete_groupoid()),
        ("discrete2", discrete_groupoid()),
        ("circle", circle()),
    ]
}

/// The bundled Frobenius algebras, built.
pub fn frobenius_algebras() -> Vec<(&'static str, FrobeniusAlgebra)> {
    frobenius_files()
        .into_iter()
        .map(|(n, f)| {
            let alg = f.build().expect("catalog entries are valid");
            (n, alg.frobenius().expect("catalog entry is Frobenius").clone())
        })
        .collect()
}

pub fn frobenius(name: &str) -> Option<FrobeniusAlgebra> {
    frobenius_algebras()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f)
}

/// `{e, a}` with `a · a ∈ {e, a}`: associative, multivalued, not cancellative.
pub fn m2_file() -> AlgebraFile {
    AlgebraFile::Monoid(MonoidInput {
        elements: strs(&["e", "a"]),
        mu: triples(&[
            ["e", "e", "e"],
            ["e", "a", "a"],
            ["a", "e", "a"],
            ["a", "a", "e"],
            ["a", "a", "a"],
        ]),
        eta: strs(&["e"]),
    })
}

pub fn m2() -> RelMonoid {
    m2_file().build().expect("valid monoid").monoid().clone()
}

/// All 2-subsets of `{a, b, c}`.
pub fn triangle_input() -> TestSpaceInput {
    TestSpaceInput {
        outcomes: strs(&["a", "b", "c"]),
        tests: vec![strs(&["a", "b"]), strs(&["b", "c"]), strs(&["a", "c"])],
    }
}

pub fn triangle_space() -> TestSpace {
    TestSpace::from_input(&triangle_input()).expect("valid test space")
}

/// Relational monoids on `1..=max_n` elements whose unit is the single
/// element `e`, one per isomorphism class. Products of non-unit elements
/// range over all subsets of the carrier; associativity filters them.
pub fn small_monoids(max_n: usize) -> Vec<RelMonoid> {
    let mut out: Vec<RelMonoid> = Vec::new();
    for n in 1..=max_n {
        let names: Vec<String> = (0..n)
            .map(|i| {
                if i == 0 {
                    "e".into()
                } else {
                    ((b'a' + i as u8 - 1) as char).to_string()
                }
            })
            .collect();
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
        let subsets = 1u64 << n;
        let total = subsets.pow(pairs.len() as u32);
        let mut found: Vec<RelMonoid> = Vec::new();
        for code in 0..total {
            let mut mu: Vec<(usize, usize, usize)> = (0..n).flat_map(|a| [(0, a, a), (a, 0, a)]).collect();
            let mut rest = code;
            for &(a, b) in &pairs {
                let set = rest % subsets;
                rest /= subsets;
                mu.extend((0..n).filter(|c| set >> c & 1 == 1).map(|c| (a, b, c)));
            }
            let m = RelMonoid::new(names.clone(), mu, [0]).expect("indices in range");
            if m.check().ok && !found.iter().any(|g| is_isomorphic(g, &m)) {
                found.push(m);
            }
        }
        out.extend(found);
    }
    out
}

fn is_isomorphic(a: &RelMonoid, b: &RelMonoid) -> bool {
    // A bijective homomorphism between equally sized relations is an isomorphism.
    a.len() == b.len()
        && a.mu().len() == b.mu().len()
        && a.eta().len() == b.eta().len()
        && crate::relcore::enumerate_monoid_homs(a, b).iter().any(|h| {
            let mut seen = vec![false; b.len()];
            h.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
}

/// `X` with the non-degenerate 2-cell `name` removed and the result
/// recompleted coskeletally up to the original truncation.
pub fn delete_triangle(x: &EpsSimplicialSet, name: &str) -> Result<EpsSimplicialSet> {
    let c = x
        .index_of(2, name)
        .ok_or_else(|| Error::input(format!("no 2-cell `{name}`")))?;
    if x.is_degenerate(2, c) {
        return Err(Error::input(format!("2-cell `{name}` is degenerate")));
    }
    let low = Arc::new(x.truncate(2));
    let (y, _) = Subobject::without(low, 2, c).to_sset();
    coskeletal_completion(&y, x.trunc_dim())
}

/// `X` with a second ε-witness on the edge `edge`.
pub fn duplicate_witness(x: &EpsSimplicialSet, edge: &str) -> Result<EpsSimplicialSet> {
    let c = x
        .index_of(1, edge)
        .ok_or_else(|| Error::input(format!("no edge `{edge}`")))?;
    x.with_eps(&[(format!("{edge}'"), c)])
}
