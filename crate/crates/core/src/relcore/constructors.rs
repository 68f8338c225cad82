//! Frobenius algebras built from groupoids, effect algebras and effect
//! algebroids. Each constructor validates the input structure first and
//! reports the failed axiom as an input error.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::monoid::name_lookup;
use super::{FrobeniusAlgebra, RelMonoid, Triple};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDecl {
    pub id: String,
    pub src: String,
    pub dst: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidInput {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDecl>,
    /// `[f, g, h]` means `f ∘ g = h` (`g` first).
    pub comp: Vec<[String; 3]>,
    pub inv: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectAlgebraInput {
    pub elements: Vec<String>,
    /// `[a, b, c]` means `a ⊕ b = c`.
    pub plus: Vec<[String; 3]>,
    pub zero: String,
    pub one: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectAlgebroidInput {
    pub points: Vec<String>,
    pub segments: Vec<MorphismDecl>,
    /// `[a, b, c]` means `a ∪ b = c` for `a: x → y`, `b: y → z`.
    pub cup: Vec<[String; 3]>,
    /// `[a, b]` means `a^⊥ = b`.
    pub perp: Vec<[String; 2]>,
    /// `[x, s]` means `0_x = s`.
    pub zeros: Vec<[String; 2]>,
    /// `[x, s]` means `1_x = s`.
    pub ones: Vec<[String; 2]>,
}

fn axiom_err(structure: &'static str, axiom: &str, witness: impl std::fmt::Display) -> Error {
    Error::Axiom {
        structure,
        axiom: axiom.to_string(),
        witness: witness.to_string(),
    }
}

fn lookup_triples(triples: &[[String; 3]], lookup: &impl Fn(&str) -> Result<usize>) -> Result<Vec<Triple>> {
    triples
        .iter()
        .map(|[a, b, c]| Ok((lookup(a)?, lookup(b)?, lookup(c)?)))
        .collect()
}

/// Endpoints of each arrow, resolved against the object list.
fn endpoints(objects: &[String], arrows: &[MorphismDecl]) -> Result<(Vec<String>, Vec<(usize, usize)>)> {
    let obj = name_lookup(objects)?;
    let names: Vec<String> = arrows.iter().map(|m| m.id.clone()).collect();
    let ends = arrows
        .iter()
        .map(|m| Ok((obj(&m.src)?, obj(&m.dst)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((names, ends))
}

/// Single-valued composition table, indexed by the pair of arguments.
fn partial_table(
    structure: &'static str,
    names: &[String],
    triples: &[Triple],
) -> Result<HashMap<(usize, usize), usize>> {
    let mut table = HashMap::new();
    for &(a, b, c) in triples {
        if let Some(old) = table.insert((a, b), c) {
            if old != c {
                return Err(axiom_err(
                    structure,
                    "single-valued composition",
                    format!("({}, {})", names[a], names[b]),
                ));
            }
        }
    }
    Ok(table)
}

/// A groupoid as a Frobenius algebra: `μ = ∘`, `η = ε = identities`, and
/// `δ` the converse of `μ`.
pub fn from_groupoid(input: &GroupoidInput) -> Result<FrobeniusAlgebra> {
    const S: &str = "groupoid";
    if input.objects.is_empty() {
        return Err(Error::input("groupoid: no objects"));
    }
    let (names, ends) = endpoints(&input.objects, &input.morphisms)?;
    let lookup = name_lookup(&names)?;
    let comp = lookup_triples(&input.comp, &lookup)?;
    let table = partial_table(S, &names, &comp)?;
    let n = names.len();
    // f ∘ g is defined exactly when src(f) = dst(g), landing in src(g) → dst(f).
    for f in 0..n {
        for g in 0..n {
            let composable = ends[f].0 == ends[g].1;
            match table.get(&(f, g)) {
                Some(&h) if !composable || ends[h] != (ends[g].0, ends[f].1) => {
                    return Err(axiom_err(
                        S,
                        "endpoint matching",
                        format!("{} ∘ {} = {}", names[f], names[g], names[h]),
                    ));
                }
                None if composable => {
                    return Err(axiom_err(
                        S,
                        "totality on composable pairs",
                        format!("({}, {})", names[f], names[g]),
                    ));
                }
                _ => {}
            }
        }
    }
    for f in 0..n {
        for g in 0..n {
            for h in 0..n {
                let (Some(&fg), Some(&gh)) = (table.get(&(f, g)), table.get(&(g, h))) else {
                    continue;
                };
                if table.get(&(fg, h)) != table.get(&(f, gh)) {
                    return Err(axiom_err(
                        S,
                        "associativity",
                        format!("({}, {}, {})", names[f], names[g], names[h]),
                    ));
                }
            }
        }
    }
    let mut identities = Vec::with_capacity(input.objects.len());
    for (x, xname) in input.objects.iter().enumerate() {
        let id = (0..n).find(|&e| {
            ends[e] == (x, x)
                && (0..n).all(|g| ends[g].1 != x || table.get(&(e, g)) == Some(&g))
                && (0..n).all(|f| ends[f].0 != x || table.get(&(f, e)) == Some(&f))
        });
        match id {
            Some(e) => identities.push(e),
            None => return Err(axiom_err(S, "identity", xname)),
        }
    }
    let mut has_inverse = vec![false; n];
    for [f, g] in &input.inv {
        let (f, g) = (lookup(f)?, lookup(g)?);
        let ok = table.get(&(f, g)) == Some(&identities[ends[g].0])
            && table.get(&(g, f)) == Some(&identities[ends[f].0]);
        if !ok {
            return Err(axiom_err(S, "inverse", format!("({}, {})", names[f], names[g])));
        }
        has_inverse[f] = true;
    }
    if let Some(f) = has_inverse.iter().position(|&b| !b) {
        return Err(axiom_err(S, "every morphism invertible", &names[f]));
    }
    drop(lookup);
    let monoid = RelMonoid::new(names, comp.iter().copied(), identities.iter().copied())?;
    let delta: Vec<Triple> = comp.iter().map(|&(f, g, h)| (h, f, g)).collect();
    FrobeniusAlgebra::new(monoid, delta, identities)
}

/// An effect algebra as a Frobenius algebra: `μ = ⊕`, `η = {0}`, `ε = {1}`,
/// and `δ: a ⇸ (b, c)` iff `a = (b' ⊕ c')'`.
pub fn from_effect_algebra(input: &EffectAlgebraInput) -> Result<FrobeniusAlgebra> {
    const S: &str = "effect algebra";
    let names = input.elements.clone();
    let lookup = name_lookup(&names)?;
    let plus = lookup_triples(&input.plus, &lookup)?;
    let (zero, one) = (lookup(&input.zero)?, lookup(&input.one)?);
    let table = partial_table(S, &names, &plus)?;
    let n = names.len();
    for (&(a, b), &c) in &table {
        if table.get(&(b, a)) != Some(&c) {
            return Err(axiom_err(
                S,
                "commutativity",
                format!("({}, {})", names[a], names[b]),
            ));
        }
    }
    let monoid = RelMonoid::new(names.clone(), plus.iter().copied(), [zero])?;
    let report = monoid.check();
    if !report.ok {
        return Err(axiom_err(
            S,
            &format!("partial monoid {}", report.violated_axiom.expect("violation")),
            report.witness.unwrap_or_default().join(", "),
        ));
    }
    let mut supplement = vec![0; n];
    for a in 0..n {
        let cands: Vec<usize> = (0..n).filter(|&b| table.get(&(a, b)) == Some(&one)).collect();
        match cands.as_slice() {
            [b] => supplement[a] = *b,
            _ => return Err(axiom_err(S, "unique orthosupplement", &names[a])),
        }
    }
    if let Some(a) = (0..n).find(|&a| a != zero && table.contains_key(&(a, one))) {
        return Err(axiom_err(S, "zero-one law", &names[a]));
    }
    let mut delta = Vec::new();
    for b in 0..n {
        for c in 0..n {
            if let Some(&s) = table.get(&(supplement[b], supplement[c])) {
                delta.push((supplement[s], b, c));
            }
        }
    }
    FrobeniusAlgebra::new(monoid, delta, [one])
}

/// An effect algebroid as a Frobenius algebra on its segments: `μ = ∪`,
/// `η = {0_x}`, `ε = {1_x}`, `δ: a ⇸ (b, c)` iff `μ: (c^⊥, b^⊥) ⇸ a^⊥`.
pub fn from_effect_algebroid(input: &EffectAlgebroidInput) -> Result<FrobeniusAlgebra> {
    const S: &str = "effect algebroid";
    if input.points.is_empty() {
        return Err(Error::input("effect algebroid: no points"));
    }
    let (names, ends) = endpoints(&input.points, &input.segments)?;
    let lookup = name_lookup(&names)?;
    let point = name_lookup(&input.points)?;
    let cup = lookup_triples(&input.cup, &lookup)?;
    let table = partial_table(S, &names, &cup)?;
    let n = names.len();
    for (&(a, b), &c) in &table {
        if ends[a].1 != ends[b].0 || ends[c] != (ends[a].0, ends[b].1) {
            return Err(axiom_err(
                S,
                "endpoint-compatible cup",
                format!("{} ∪ {} = {}", names[a], names[b], names[c]),
            ));
        }
    }
    let distinguished = |pairs: &[[String; 2]], what: &str| -> Result<Vec<usize>> {
        let mut by_point: BTreeMap<usize, usize> = BTreeMap::new();
        for [x, s] in pairs {
            let (x, s) = (point(x)?, lookup(s)?);
            if ends[s] != (x, x) || by_point.insert(x, s).is_some_and(|old| old != s) {
                return Err(axiom_err(S, what, &names[s]));
            }
        }
        if by_point.len() != input.points.len() {
            return Err(axiom_err(S, what, "missing point"));
        }
        Ok(by_point.into_values().collect())
    };
    let zeros = distinguished(&input.zeros, "0_x in Hom(x, x)")?;
    let ones = distinguished(&input.ones, "1_x in Hom(x, x)")?;
    let mut perp: Vec<Option<usize>> = vec![None; n];
    for [a, b] in &input.perp {
        let (a, b) = (lookup(a)?, lookup(b)?);
        if ends[b] != (ends[a].1, ends[a].0) || perp[a].replace(b).is_some_and(|old| old != b) {
            return Err(axiom_err(S, "perp maps Hom(x, y) to Hom(y, x)", &names[a]));
        }
    }
    let perp = perp
        .into_iter()
        .enumerate()
        .map(|(a, p)| p.ok_or_else(|| axiom_err(S, "perp is total", &names[a])))
        .collect::<Result<Vec<_>>>()?;
    let monoid = RelMonoid::new(names.clone(), cup.iter().copied(), zeros.iter().copied())?;
    let report = monoid.check();
    if !report.ok {
        return Err(axiom_err(
            S,
            &format!("partial monoid {}", report.violated_axiom.expect("violation")),
            report.witness.unwrap_or_default().join(", "),
        ));
    }
    // Units must be the designated zeros of the right points, not just some unit.
    for a in 0..n {
        let (x, y) = ends[a];
        if table.get(&(zeros[x], a)) != Some(&a) || table.get(&(a, zeros[y])) != Some(&a) {
            return Err(axiom_err(S, "0_x units", &names[a]));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if ends[a].1 != ends[b].0 || ends[b].1 != ends[a].0 {
                continue;
            }
            let x = ends[a].0;
            let is_one = table.get(&(a, b)) == Some(&ones[x]);
            if is_one != (a == perp[b]) || is_one != (b == perp[a]) {
                return Err(axiom_err(
                    S,
                    "a ∪ b = 1_x ⇔ a = b^⊥ ⇔ b = a^⊥",
                    format!("({}, {})", names[a], names[b]),
                ));
            }
        }
    }
    let one_set: BTreeSet<usize> = ones.iter().copied().collect();
    for &(a, b) in table.keys() {
        let offender = if one_set.contains(&a) {
            Some(b)
        } else if one_set.contains(&b) {
            Some(a)
        } else {
            None
        };
        if let Some(s) = offender {
            if !zeros.contains(&s) {
                return Err(axiom_err(S, "zero-one law", &names[s]));
            }
        }
    }
    let mut delta = Vec::new();
    for &(cp, bp, ap) in &cup {
        // cp = c^⊥ etc.; perp is a bijection since a = (a^⊥)^⊥ follows from the perp axiom.
        let inv = |p: usize| (0..n).find(|&s| perp[s] == p).expect("perp is bijective");
        delta.push((inv(ap), inv(bp), inv(cp)));
    }
    FrobeniusAlgebra::new(monoid, delta, ones)
}
