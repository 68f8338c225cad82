//! Property tests over generated monoids, shapes, test spaces and relabelled
//! algebras.

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::subsequence;

use relfrob::catalog;
use relfrob::io::{AlgebraFile, SSetFile};
use relfrob::lifting::{characterize, check_extension, Mode};
use relfrob::nerve::{nerve_frobenius, nerve_monoid};
use relfrob::relcore::{find_isomorphism, RelMonoid};
use relfrob::shapes::{face_union, sigma, ShapeName};
use relfrob::simplicial::{coskeletal_completion, pushout, EpsSimplicialSet, SimplicialMap};
use relfrob::testspace::TestSpace;

fn monoids() -> &'static [RelMonoid] {
    static CELL: OnceLock<Vec<RelMonoid>> = OnceLock::new();
    CELL.get_or_init(|| catalog::small_monoids(3))
}

fn by_name(a: &EpsSimplicialSet, x: &EpsSimplicialSet) -> SimplicialMap {
    SimplicialMap {
        cells: (0..=a.trunc_dim())
            .map(|d| {
                (0..a.count(d))
                    .map(|c| x.index_of(d, a.name(d, c)).unwrap())
                    .collect()
            })
            .collect(),
        eps: (0..a.eps_len())
            .map(|e| x.eps_index_of(a.eps_name(e)).unwrap())
            .collect(),
    }
}

fn rename(file: &AlgebraFile, perm: &[usize]) -> AlgebraFile {
    let AlgebraFile::Frobenius(mut f) = file.clone() else {
        panic!("expected a Frobenius file")
    };
    let old = f.elements.clone();
    let new_name = |s: &String| format!("r{}", old.iter().position(|o| o == s).unwrap());
    let map3 = |v: &mut Vec<[String; 3]>| {
        for t in v.iter_mut() {
            *t = [new_name(&t[0]), new_name(&t[1]), new_name(&t[2])];
        }
    };
    map3(&mut f.mu);
    if let Some(d) = f.delta.as_mut() {
        map3(d);
    }
    f.eta = f.eta.iter().map(new_name).collect();
    f.epsilon = f.epsilon.iter().map(new_name).collect();
    f.elements = perm.iter().map(|&i| format!("r{i}")).collect();
    AlgebraFile::Frobenius(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nerves_of_generated_monoids_validate(i in 0usize..1000) {
        let m = &monoids()[i % monoids().len()];
        prop_assert!(m.check().ok);
        let x = nerve_monoid(m, 3).unwrap();
        prop_assert!(x.validate().ok);
    }

    #[test]
    fn sset_json_round_trips(i in 0usize..1000) {
        let m = &monoids()[i % monoids().len()];
        let x = nerve_monoid(m, 3).unwrap();
        let text = serde_json::to_string(&SSetFile::from_sset(&x)).unwrap();
        let back: SSetFile = serde_json::from_str(&text).unwrap();
        let y = back.to_sset().unwrap();
        prop_assert_eq!(y.parts(), x.parts());
    }

    #[test]
    fn face_unions_and_their_pushout_validate(
        f in subsequence(vec![0usize, 1, 2, 3, 4], 1..=4),
        g in subsequence(vec![0usize, 1, 2, 3, 4], 1..=4),
    ) {
        let s = sigma(4, 4).unwrap();
        let a = face_union(&s, 4, &f).unwrap();
        let b = face_union(&s, 4, &g).unwrap();
        let u = a.union(&b).unwrap();
        let m = a.intersection(&b).unwrap();
        for sub in [&a, &b, &u, &m] {
            prop_assert!(sub.is_closed());
            prop_assert!(sub.to_sset().0.validate().ok);
        }
        let (ms, _) = m.to_sset();
        let (as_, _) = a.to_sset();
        let (bs, _) = b.to_sset();
        let p = pushout(&ms, &as_, &bs, &by_name(&ms, &as_), &by_name(&ms, &bs)).unwrap();
        prop_assert!(p.object.validate().ok);
        let (us, _) = u.to_sset();
        prop_assert!(by_name(&p.object, &us).is_bijective(&us));
    }

    #[test]
    fn unique_extension_implies_existence(i in 0usize..1000, shape in 0usize..6) {
        let m = &monoids()[i % monoids().len()];
        let x = nerve_monoid(m, 3).unwrap();
        let shape = ["horn:2:0", "horn:2:1", "horn:2:2", "horn:3:0", "horn:3:1", "boundary:3"][shape];
        let inc = shape.parse::<ShapeName>().unwrap().realize(3).unwrap();
        let unique = check_extension(&inc, &x, Mode::Unique, usize::MAX);
        let exists = check_extension(&inc, &x, Mode::Exists, usize::MAX);
        prop_assert!(!unique.holds || exists.holds);
        prop_assert!(exists.failure_count <= unique.failure_count);
        prop_assert_eq!(unique.total_instances, exists.total_instances);
    }

    #[test]
    fn test_space_ssets_validate(n in 1usize..5, raw in prop::collection::vec(1u64..16, 1..5)) {
        let full = (1u64 << n) - 1;
        let mut tests: Vec<u64> = raw.into_iter().map(|t| t & full).filter(|&t| t != 0).collect();
        let covered = tests.iter().fold(0, |a, &t| a | t);
        if covered != full {
            tests.push(full & !covered);
        }
        let outcomes = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let t = TestSpace::new(outcomes, tests).unwrap();
        let x = t.to_sset(3);
        prop_assert!(x.validate().ok);
        prop_assert_eq!(x.count(1), t.events().len());
        prop_assert_eq!(x.eps_len(), t.tests().len());
    }

    #[test]
    fn completion_is_idempotent_on_generated_nerves(i in 0usize..1000) {
        let m = &monoids()[i % monoids().len()];
        let x = nerve_monoid(m, 2).unwrap();
        let once = coskeletal_completion(&x, 4).unwrap();
        let twice = coskeletal_completion(&once, 4).unwrap();
        prop_assert_eq!(once.parts(), twice.parts());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn relabelled_algebras_are_recognised(
        which in prop::sample::select(vec!["bool2", "mv3", "z3", "discrete2", "codiscrete2"]),
        shuffled in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let file = catalog::frobenius_files().into_iter().find(|(n, _)| *n == which).unwrap().1;
        let original = file.build().unwrap().frobenius().unwrap().clone();
        let plain = AlgebraFile::from_frobenius(&original);
        let n = original.len();
        let perm: Vec<usize> = shuffled.into_iter().filter(|&i| i < n).collect();
        let relabelled = rename(&plain, &perm).build().unwrap().frobenius().unwrap().clone();
        prop_assert!(relabelled.check().ok);
        prop_assert!(find_isomorphism(&original, &relabelled).is_some());

        let x = nerve_frobenius(&relabelled, 4).unwrap();
        let c = characterize(&x).unwrap();
        prop_assert!(c.accepted);
        let extracted = c.algebra.unwrap();
        prop_assert!(find_isomorphism(&original, &extracted).is_some());
    }
}
