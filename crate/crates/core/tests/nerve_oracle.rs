//! Nerves and completions against direct enumeration of `Hom([n], M)`, and
//! nerve maps against algebra homomorphisms.

use relfrob::catalog;
use relfrob::lifting::{delta_recovery, extract_structure};
use relfrob::nerve::{enumerate_nerve_maps, nerve_frobenius, nerve_map, nerve_monoid};
use relfrob::relcore::{enumerate_frobenius_homs, enumerate_monoid_homs, RelMonoid};
use relfrob::shapes::delta;
use relfrob::simplicial::{coskeletal_completion, face_tuple_map};

/// Number of families `(m_ij)_{i≤j≤n}` with `m_ii ∈ η` and
/// `μ(m_jk, m_ij, m_ik)` for all `i ≤ j ≤ k`.
fn hom_count(m: &RelMonoid, n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    let idx = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let mut assign = vec![usize::MAX; pairs.len()];
    fn go(
        m: &RelMonoid,
        n: usize,
        pairs: &[(usize, usize)],
        idx: &dyn Fn(usize, usize) -> usize,
        pos: usize,
        assign: &mut Vec<usize>,
    ) -> usize {
        if pos == pairs.len() {
            for i in 0..=n {
                for j in i..=n {
                    for k in j..=n {
                        if !m.relates(assign[idx(j, k)], assign[idx(i, j)], assign[idx(i, k)]) {
                            return 0;
                        }
                    }
                }
            }
            return 1;
        }
        let (i, j) = pairs[pos];
        let mut total = 0;
        for v in 0..m.len() {
            if i == j && !m.is_unit(v) {
                continue;
            }
            assign[pos] = v;
            total += go(m, n, pairs, idx, pos + 1, assign);
        }
        total
    }
    go(m, n, &pairs, &idx, 0, &mut assign)
}

fn monoids() -> Vec<(String, RelMonoid)> {
    let mut out: Vec<(String, RelMonoid)> = catalog::frobenius_algebras()
        .into_iter()
        .filter(|(_, f)| f.len() <= 4)
        .map(|(n, f)| (n.to_string(), f.monoid().clone()))
        .collect();
    out.push(("m2".into(), catalog::m2()));
    out.extend(
        catalog::small_monoids(3)
            .into_iter()
            .enumerate()
            .step_by(7)
            .map(|(i, m)| (format!("generated#{i}"), m)),
    );
    out
}

#[test]
fn nerve_cell_counts_match_hom_enumeration() {
    for (name, m) in monoids() {
        let x = nerve_monoid(&m, 4).unwrap();
        for n in 0..=4 {
            assert_eq!(x.count(n), hom_count(&m, n), "{name}, dimension {n}");
        }
        assert!(x.validate().ok, "{name}");
    }
}

#[test]
fn bool2_completion_has_four_three_cells() {
    let f = catalog::frobenius("bool2").unwrap();
    let x2 = nerve_frobenius(&f, 2).unwrap();
    let completed = coskeletal_completion(&x2, 4).unwrap();
    assert_eq!(completed.count(3), hom_count(f.monoid(), 3));
    assert_eq!(completed.count(3), 4);
    assert_eq!(completed.count(4), hom_count(f.monoid(), 4));
}

#[test]
fn delta2_completion_counts_monotone_maps() {
    let d2 = delta(2, 2);
    let completed = coskeletal_completion(&d2, 4).unwrap();
    // nondecreasing maps [n] → [2]
    let monotone = |n: usize| -> usize {
        (0..3usize.pow(n as u32 + 1))
            .filter(|code| {
                let digits: Vec<usize> = (0..=n).map(|i| code / 3usize.pow(i as u32) % 3).collect();
                digits.windows(2).all(|w| w[0] <= w[1])
            })
            .count()
    };
    assert_eq!(completed.count(3), monotone(3));
    assert_eq!(completed.count(3), 15);
    assert_eq!(completed.count(4), monotone(4));
    assert!(completed.nondegenerate(3).is_empty());
    let full = delta(2, 4);
    let m = face_tuple_map(&full, &completed).expect("Δ² maps to its completion");
    assert!(m.is_bijective(&completed));
}

#[test]
fn nerve_maps_match_monoid_homs() {
    let ms = monoids();
    for (an, a) in ms.iter().take(8) {
        for (bn, b) in ms.iter().take(8) {
            let na = nerve_monoid(a, 3).unwrap();
            let nb = nerve_monoid(b, 3).unwrap();
            let maps = enumerate_nerve_maps(&na, &nb);
            let homs = enumerate_monoid_homs(a, b);
            assert_eq!(maps.len(), homs.len(), "{an} → {bn}");
            for h in &homs {
                let m = nerve_map(h, &na, &nb).expect("homomorphisms induce maps");
                assert!(maps.contains(&m), "{an} → {bn}: {h:?}");
            }
        }
    }
}

#[test]
fn m2_endomorphisms() {
    let m2 = catalog::m2();
    let n = nerve_monoid(&m2, 4).unwrap();
    assert_eq!(n.count(2), 5);
    assert_eq!(
        enumerate_nerve_maps(&n, &n).len(),
        enumerate_monoid_homs(&m2, &m2).len()
    );
}

#[test]
fn frobenius_nerve_maps_match_frobenius_homs() {
    let fs = catalog::frobenius_algebras();
    let bool2 = nerve_frobenius(&fs[1].1, 4).unwrap();
    assert_eq!(enumerate_nerve_maps(&bool2, &bool2).len(), 1);
    for (an, a) in &fs {
        for (bn, b) in &fs {
            let na = nerve_frobenius(a, 3).unwrap();
            let nb = nerve_frobenius(b, 3).unwrap();
            assert_eq!(
                enumerate_nerve_maps(&na, &nb).len(),
                enumerate_frobenius_homs(a, b).len(),
                "{an} → {bn}"
            );
        }
    }
}

#[test]
fn extracted_relations_equal_the_algebra() {
    for (name, f) in catalog::frobenius_algebras() {
        let x = nerve_frobenius(&f, 4).unwrap();
        let s = extract_structure(&x);
        assert_eq!(&s.mu, f.mu(), "{name}: μ");
        assert_eq!(&s.delta, f.delta(), "{name}: δ");
        assert_eq!(&s.units, f.eta(), "{name}: η");
        assert_eq!(&s.counits, f.epsilon(), "{name}: ε");
        assert_eq!(s.alpha, f.alpha(), "{name}: α");
        assert_eq!(delta_recovery(&x).holds, Some(true), "{name}");
    }
}

#[test]
fn bool2_rotation_relation() {
    let x = nerve_frobenius(&catalog::frobenius("bool2").unwrap(), 4).unwrap();
    let s = extract_structure(&x);
    assert_eq!(s.alpha.into_iter().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
}

#[test]
fn delta_recovery_skipped_without_eps_horn_fillers() {
    // The plain nerve of M2 has no witnesses, so εΛ¹₀ already has no filler.
    let x = nerve_monoid(&catalog::m2(), 4).unwrap();
    let r = delta_recovery(&x);
    assert!(!r.precondition_holds);
    assert_eq!(r.holds, None);
}

#[test]
fn one_point_nerve_delta_recovery_holds() {
    let x = nerve_frobenius(&catalog::frobenius("one-element").unwrap(), 4).unwrap();
    assert_eq!(delta_recovery(&x).holds, Some(true));
}
