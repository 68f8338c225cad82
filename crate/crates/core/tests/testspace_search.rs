//! Algebraicity of generated test spaces against a brute-force scan over all
//! quadruples of events, under both readings of the conclusion.

use relfrob::catalog;
use relfrob::testspace::{algebraicity_as_lifting, enumerate_test_spaces, Event, TestSpace};

/// Every quadruple `(A, B, C, D)` of events with `A⊥B`, `B⊥C`, `C⊥D`
/// (disjoint, union a test). `strict` asks for `A⊥D`; otherwise only that
/// `A∪D` is a test.
fn brute_force_algebraic(t: &TestSpace, strict: bool) -> bool {
    let events = t.events();
    let orth = |x: Event, y: Event| x & y == 0 && t.is_test(x | y);
    for &a in &events {
        for &b in events.iter().filter(|&&b| orth(a, b)) {
            for &c in events.iter().filter(|&&c| orth(b, c)) {
                for &d in events.iter().filter(|&&d| orth(c, d)) {
                    let ok = if strict { orth(a, d) } else { t.is_test(a | d) };
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn space(outcomes: &[&str], tests: &[&[&str]]) -> TestSpace {
    let outcomes: Vec<String> = outcomes.iter().map(|s| s.to_string()).collect();
    let mask = |t: &[&str]| -> Event {
        t.iter()
            .map(|o| 1 << outcomes.iter().position(|x| x == o).unwrap())
            .sum()
    };
    let tests = tests.iter().map(|t| mask(t)).collect();
    TestSpace::new(outcomes, tests).unwrap()
}

#[test]
fn scan_agrees_with_brute_force_and_lifting() {
    let spaces = enumerate_test_spaces(4, 4);
    assert!(spaces.len() > 100);
    for t in &spaces {
        let expected = brute_force_algebraic(t, true);
        let r = t.check_algebraicity();
        assert_eq!(r.algebraic, expected, "{:?}", t.to_input());
        assert_eq!(r.witness.is_some(), !expected);
        assert_eq!(algebraicity_as_lifting(t).holds, expected, "{:?}", t.to_input());
    }
}

#[test]
fn literal_reading_differs_on_nested_tests() {
    let t = space(&["a", "b"], &[&["a"], &["a", "b"]]);
    assert!(brute_force_algebraic(&t, false));
    assert!(!brute_force_algebraic(&t, true));
    assert!(!algebraicity_as_lifting(&t).holds);
    assert!(!t.check_algebraicity().algebraic);
}

#[test]
fn smallest_non_algebraic_space() {
    let spaces = enumerate_test_spaces(3, 3);
    let smallest = spaces
        .iter()
        .filter(|t| !brute_force_algebraic(t, true))
        .min_by_key(|t| (t.outcomes().len(), t.tests().len()))
        .expect("some space is not algebraic");
    let r = smallest.check_algebraicity();
    assert!(!r.algebraic);
    assert!(r.witness.is_some());
    // on one outcome the only test is {a}, which is algebraic
    assert_eq!(smallest.outcomes().len(), 2);
}

#[test]
fn triangle_space_is_not_algebraic() {
    let t = catalog::triangle_space();
    assert!(!brute_force_algebraic(&t, true));
    let r = t.check_algebraicity();
    assert!(!r.algebraic);
    assert!(!algebraicity_as_lifting(&t).holds);
    // seven events: ∅, three singletons, three pairs
    assert_eq!(t.to_sset(2).count(1), 7);
}

#[test]
fn orthogonal_pairs_are_algebraic() {
    let t = space(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]]);
    assert!(brute_force_algebraic(&t, true));
    assert!(t.check_algebraicity().algebraic);
    assert!(algebraicity_as_lifting(&t).holds);
}
