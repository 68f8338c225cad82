//! Homomorphism enumeration and isomorphism search by backtracking.

use std::collections::BTreeSet;

use super::{FrobeniusAlgebra, RelMonoid, Triple};

/// A finite structure with some unary and ternary relations, flattened so
/// monoids and Frobenius algebras share one search.
struct Signature<'a> {
    len: usize,
    unary: Vec<&'a BTreeSet<usize>>,
    ternary: Vec<&'a BTreeSet<Triple>>,
}

impl<'a> Signature<'a> {
    fn monoid(m: &'a RelMonoid) -> Self {
        Signature {
            len: m.len(),
            unary: vec![m.eta()],
            ternary: vec![m.mu()],
        }
    }

    fn frobenius(f: &'a FrobeniusAlgebra, with_delta: bool) -> Self {
        let mut ternary = vec![f.mu()];
        if with_delta {
            ternary.push(f.delta());
        }
        Signature {
            len: f.len(),
            unary: vec![f.eta(), f.epsilon()],
            ternary,
        }
    }

    fn preserved_by(&self, other: &Signature<'_>, h: &[usize]) -> bool {
        self.unary
            .iter()
            .zip(&other.unary)
            .all(|(a, b)| a.iter().all(|x| b.contains(&h[*x])))
            && self
                .ternary
                .iter()
                .zip(&other.ternary)
                .all(|(a, b)| a.iter().all(|&(x, y, z)| b.contains(&(h[x], h[y], h[z]))))
    }
}

/// Backtracking over maps `0..src.len → 0..dst.len` in lexicographic order.
/// Each relation tuple is checked as soon as its largest element is assigned.
fn search(
    src: &Signature<'_>,
    dst: &Signature<'_>,
    injective: bool,
    limit: Option<usize>,
) -> Vec<Vec<usize>> {
    let n = src.len;
    let mut unary_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut ternary_at: Vec<Vec<(usize, Triple)>> = vec![Vec::new(); n];
    for (k, rel) in src.unary.iter().enumerate() {
        for &x in rel.iter() {
            unary_at[x].push(k);
        }
    }
    for (k, rel) in src.ternary.iter().enumerate() {
        for &t in rel.iter() {
            ternary_at[t.0.max(t.1).max(t.2)].push((k, t));
        }
    }
    let mut out = Vec::new();
    let mut h = vec![0usize; n];
    let mut used = vec![false; dst.len];
    fn go(
        i: usize,
        h: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ctx: (
            &Signature<'_>,
            &[Vec<usize>],
            &[Vec<(usize, Triple)>],
            bool,
            Option<usize>,
        ),
        out: &mut Vec<Vec<usize>>,
    ) {
        let (dst, unary_at, ternary_at, injective, limit) = ctx;
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if i == h.len() {
            out.push(h.clone());
            return;
        }
        for v in 0..dst.len {
            if injective && used[v] {
                continue;
            }
            h[i] = v;
            let ok = unary_at[i].iter().all(|&k| dst.unary[k].contains(&v))
                && ternary_at[i]
                    .iter()
                    .all(|&(k, (x, y, z))| dst.ternary[k].contains(&(h[x], h[y], h[z])));
            if ok {
                used[v] = true;
                go(i + 1, h, used, ctx, out);
                used[v] = false;
            }
        }
    }
    go(
        0,
        &mut h,
        &mut used,
        (dst, &unary_at, &ternary_at, injective, limit),
        &mut out,
    );
    out
}

pub fn is_monoid_hom(a: &RelMonoid, b: &RelMonoid, h: &[usize]) -> bool {
    h.len() == a.len()
        && h.iter().all(|&v| v < b.len())
        && Signature::monoid(a).preserved_by(&Signature::monoid(b), h)
}

/// Preserves `η`, `μ` and `ε`.
pub fn is_frobenius_hom(a: &FrobeniusAlgebra, b: &FrobeniusAlgebra, h: &[usize]) -> bool {
    h.len() == a.len()
        && h.iter().all(|&v| v < b.len())
        && Signature::frobenius(a, false).preserved_by(&Signature::frobenius(b, false), h)
}

/// All monoid homomorphisms `a → b` in lexicographic order of images.
pub fn enumerate_monoid_homs(a: &RelMonoid, b: &RelMonoid) -> Vec<Vec<usize>> {
    search(&Signature::monoid(a), &Signature::monoid(b), false, None)
}

/// All Frobenius homomorphisms `a → b` in lexicographic order of images.
pub fn enumerate_frobenius_homs(a: &FrobeniusAlgebra, b: &FrobeniusAlgebra) -> Vec<Vec<usize>> {
    search(
        &Signature::frobenius(a, false),
        &Signature::frobenius(b, false),
        false,
        None,
    )
}

/// A bijection preserving `η`, `ε`, `μ` and `δ` in both directions.
pub fn find_isomorphism(a: &FrobeniusAlgebra, b: &FrobeniusAlgebra) -> Option<Vec<usize>> {
    let (sa, sb) = (Signature::frobenius(a, true), Signature::frobenius(b, true));
    let sizes_match = sa.len == sb.len
        && sa.unary.iter().zip(&sb.unary).all(|(x, y)| x.len() == y.len())
        && sa
            .ternary
            .iter()
            .zip(&sb.ternary)
            .all(|(x, y)| x.len() == y.len());
    if !sizes_match {
        return None;
    }
    // Injective and relation-preserving with equal relation sizes forces
    // the inverse to preserve everything too.
    search(&sa, &sb, true, Some(1)).into_iter().next()
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

    fn point() -> FrobeniusAlgebra {
        FrobeniusAlgebra::from_named(&["e"], &[["e", "e", "e"]], &["e"], &[["e", "e", "e"]], &["e"]).unwrap()
    }

    #[test]
    fn point_into_bool2() {
        let (p, b) = (point(), bool2());
        assert_eq!(enumerate_monoid_homs(p.monoid(), b.monoid()), vec![vec![0]]);
        assert!(enumerate_frobenius_homs(&p, &b).is_empty());
    }

    #[test]
    fn bool2_endomorphisms() {
        let b = bool2();
        assert_eq!(enumerate_frobenius_homs(&b, &b), vec![vec![0, 1]]);
    }

    #[test]
    fn everything_maps_to_the_point() {
        let (p, b) = (point(), bool2());
        assert_eq!(enumerate_frobenius_homs(&b, &p), vec![vec![0, 0]]);
        assert_eq!(enumerate_monoid_homs(b.monoid(), p.monoid()).len(), 1);
    }

    #[test]
    fn isomorphism_up_to_renaming() {
        let b = bool2();
        let renamed = FrobeniusAlgebra::from_named(
            &["top", "bot"],
            &[
                ["bot", "bot", "bot"],
                ["bot", "top", "top"],
                ["top", "bot", "top"],
            ],
            &["bot"],
            &[
                ["top", "top", "top"],
                ["bot", "bot", "top"],
                ["bot", "top", "bot"],
            ],
            &["top"],
        )
        .unwrap();
        assert_eq!(find_isomorphism(&b, &renamed), Some(vec![1, 0]));
        assert_eq!(find_isomorphism(&b, &point()), None);
    }
}
