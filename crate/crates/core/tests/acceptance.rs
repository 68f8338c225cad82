//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use relfrob::catalog::{self, delete_triangle, duplicate_witness, small_monoids};
use relfrob::lifting::{self as theorems, characterize, delta_recovery, roundtrip, Condition, Mode};
use relfrob::nerve::{enumerate_nerve_maps, nerve_frobenius};
use relfrob::relcore::{enumerate_frobenius_homs, FrobeniusAlgebra, RelMonoid};
use relfrob::shapes::ShapeName;
use relfrob::simplicial::EpsSimplicialSet;
use relfrob::testspace::{algebraicity_as_lifting, enumerate_test_spaces};

const K: usize = 4;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_nerves() -> Vec<(&'static str, FrobeniusAlgebra, EpsSimplicialSet)> {
    catalog::frobenius_algebras()
        .into_iter()
        .map(|(n, f)| {
            let x = nerve_frobenius(&f, K).expect("catalog nerve");
            (n, f, x)
        })
        .collect()
}

fn nondegenerate_triangles(x: &EpsSimplicialSet) -> Vec<String> {
    x.nondegenerate(2)
        .iter()
        .map(|&c| x.name(2, c).to_string())
        .collect()
}

fn round_trip() -> Outcome {
    let cat = catalog::frobenius_algebras();
    ensure(cat.len() >= 10, || format!("only {} catalog algebras", cat.len()))?;
    for (name, f) in &cat {
        let (ch, iso) = roundtrip(f, K).map_err(|e| format!("{name}: {e}"))?;
        ensure(ch.accepted, || format!("{name}: rejected with {:?}", ch.failure))?;
        ensure(iso.is_some(), || {
            format!("{name}: extracted algebra not isomorphic")
        })?;
    }
    Ok(format!("{} algebras", cat.len()))
}

fn eps_horns() -> Outcome {
    let mut checked = 0;
    for (name, _, x) in catalog_nerves() {
        for v in theorems::eps_horn_suite(&x, 4).map_err(|e| e.to_string())? {
            ensure(v.holds, || format!("{name}: {} fails", v.shape))?;
            checked += 1;
        }
    }
    let mut deletions = 0;
    for name in ["bool2", "diamond", "mv3", "bool4"] {
        let f = catalog::frobenius(name).expect("catalog entry");
        let x = nerve_frobenius(&f, K).map_err(|e| e.to_string())?;
        for t in nondegenerate_triangles(&x) {
            let y = delete_triangle(&x, &t).map_err(|e| e.to_string())?;
            let verdicts = theorems::eps_horn_suite(&y, 4).map_err(|e| e.to_string())?;
            ensure(verdicts.iter().any(|v| !v.holds), || {
                format!("{name} without {t}: every ε-horn still has a unique filler")
            })?;
            deletions += 1;
        }
    }
    Ok(format!(
        "{checked} shape checks, {deletions} deletions each break an ε-horn"
    ))
}

fn cancellation_and_partiality() -> Outcome {
    let mut monoids: Vec<(String, RelMonoid)> = catalog::frobenius_algebras()
        .into_iter()
        .map(|(n, f)| (n.to_string(), f.monoid().clone()))
        .collect();
    monoids.push(("m2".into(), catalog::m2()));
    monoids.extend(
        small_monoids(3)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (format!("generated#{i}"), m)),
    );
    ensure(monoids.len() >= 20, || format!("only {} monoids", monoids.len()))?;
    let reports: Vec<_> = monoids
        .par_iter()
        .map(|(n, m)| theorems::cancellation_suite(m).map(|r| (n, r)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for (n, r) in &reports {
        for eq in &r.equivalences {
            ensure(eq.agree, || {
                format!("{n}: {} disagrees: {:?}", eq.name, eq.predicates)
            })?;
        }
    }
    Ok(format!("{} monoids", reports.len()))
}

fn coskeletality_and_faithfulness() -> Outcome {
    let nerves = catalog_nerves();
    for (name, _, x) in &nerves {
        for n in [3, 4] {
            let ok = relfrob::lifting::extends(x, &ShapeName::BoundaryDelta(n), Mode::Unique)
                .map_err(|e| e.to_string())?;
            ensure(ok, || format!("{name}: ∂Δ{n} lacks unique fillers"))?;
        }
    }
    let pairs: Vec<(usize, usize)> = (0..nerves.len())
        .flat_map(|a| (0..nerves.len()).map(move |b| (a, b)))
        .collect();
    let mismatch = pairs.par_iter().find_map_first(|&(a, b)| {
        let maps = enumerate_nerve_maps(&nerves[a].2, &nerves[b].2).len();
        let homs = enumerate_frobenius_homs(&nerves[a].1, &nerves[b].1).len();
        (maps != homs).then(|| {
            format!(
                "{} → {}: {maps} nerve maps, {homs} homs",
                nerves[a].0, nerves[b].0
            )
        })
    });
    if let Some(m) = mismatch {
        return Err(m);
    }
    Ok(format!("{} nerves, {} pairs", nerves.len(), pairs.len()))
}

fn controls() -> Vec<(String, EpsSimplicialSet)> {
    let x = |n: &str| nerve_frobenius(&catalog::frobenius(n).expect("catalog entry"), K).expect("nerve");
    let bool2 = x("bool2");
    let diamond = x("diamond");
    let mv3 = x("mv3");
    let z3 = x("z3");
    let mut out = vec![
        (
            "bool2 with a duplicated witness".to_string(),
            duplicate_witness(&bool2, "1").expect("edge"),
        ),
        ("bool2 without witnesses".to_string(), bool2.without_eps()),
        ("diamond without witnesses".to_string(), diamond.without_eps()),
    ];
    let first = |y: &EpsSimplicialSet| nondegenerate_triangles(y).into_iter().next().expect("a triangle");
    for (n, y) in [("diamond", &diamond), ("mv3", &mv3), ("z3", &z3)] {
        let t = first(y);
        out.push((
            format!("{n} without {t}"),
            delete_triangle(y, &t).expect("deletion"),
        ));
    }
    out
}

fn frobenius_shape_groups_agree() -> Outcome {
    let mut inputs: Vec<(String, EpsSimplicialSet)> = catalog_nerves()
        .into_iter()
        .map(|(n, _, x)| (n.to_string(), x))
        .collect();
    let c = controls();
    ensure(c.len() >= 5, || "fewer than 5 controls".into())?;
    inputs.extend(c);
    for (name, x) in &inputs {
        for eq in theorems::frobenius_shape_groups(x).map_err(|e| e.to_string())? {
            ensure(eq.agree, || {
                format!("{name}: {} disagrees: {:?}", eq.name, eq.predicates)
            })?;
        }
    }
    Ok(format!("{} inputs", inputs.len()))
}

fn face_unions() -> Outcome {
    let shapes = theorems::face_union_shapes(4).len();
    for (name, _, x) in catalog_nerves() {
        let vs = theorems::face_union_suite(&x)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{name}: ε-horn precondition fails"))?;
        for v in vs {
            ensure(v.holds, || format!("{name}: {} fails", v.shape))?;
        }
    }
    Ok(format!("{shapes} shapes per nerve"))
}

fn negative_controls() -> Outcome {
    let x = |n: &str| nerve_frobenius(&catalog::frobenius(n).expect("catalog entry"), K).expect("nerve");
    let bool2 = x("bool2");
    let diamond = x("diamond");
    let ab1 = diamond
        .nondegenerate(2)
        .iter()
        .map(|&c| diamond.name(2, c).to_string())
        .find(|n| n == "(a,b,1)")
        .ok_or("diamond nerve lacks (a,b,1)")?;
    let cases = [
        (
            "duplicated witness",
            duplicate_witness(&bool2, "1").map_err(|e| e.to_string())?,
            Condition::EpsHornExtension,
        ),
        (
            "deleted 2-cell",
            delete_triangle(&diamond, &ab1).map_err(|e| e.to_string())?,
            Condition::EpsHornExtension,
        ),
        ("no ε-edges", bool2.without_eps(), Condition::EpsHornExtension),
    ];
    for (label, y, expected) in &cases {
        let ch = characterize(y).map_err(|e| e.to_string())?;
        let got = ch.failure.as_ref().map(|f| f.condition);
        ensure(!ch.accepted && got == Some(*expected), || {
            format!("{label}: expected rejection at {expected:?}, got {got:?}")
        })?;
        ensure(ch.accepted_without_boundary_uniqueness == ch.accepted, || {
            format!("{label}: relaxed boundary condition changes the verdict")
        })?;
    }
    for (name, _, y) in catalog_nerves() {
        let ch = characterize(&y).map_err(|e| e.to_string())?;
        ensure(ch.accepted_without_boundary_uniqueness == ch.accepted, || {
            format!("{name}: relaxed boundary condition changes the verdict")
        })?;
    }
    Ok(format!("{} controls rejected as expected", cases.len()))
}

fn test_spaces() -> Outcome {
    let spaces = enumerate_test_spaces(5, 6);
    let results: Vec<(bool, bool)> = spaces
        .par_iter()
        .map(|t| (t.check_algebraicity().algebraic, algebraicity_as_lifting(t).holds))
        .collect();
    let non_algebraic = results.iter().filter(|r| !r.0).count();
    let mismatches: Vec<usize> = (0..spaces.len())
        .filter(|&i| results[i].0 != results[i].1)
        .collect();
    if let Some(&i) = mismatches.first() {
        let t = spaces[i].to_input();
        return Err(format!(
            "{} of {} spaces disagree; first: {:?} (algebraic: {}, lifting: {})",
            mismatches.len(),
            spaces.len(),
            t.tests,
            results[i].0,
            results[i].1
        ));
    }
    ensure(non_algebraic > 0, || "no non-algebraic space found".into())?;
    Ok(format!("{} spaces, {non_algebraic} non-algebraic", spaces.len()))
}

/// `α̂`, `β̂` read off `ε ∘ μ` by direct scan.
fn rotations(f: &FrobeniusAlgebra) -> Result<(Vec<usize>, Vec<usize>), String> {
    let n = f.len();
    let pairs: BTreeSet<(usize, usize)> = f
        .mu()
        .iter()
        .filter(|t| f.epsilon().contains(&t.2))
        .map(|t| (t.0, t.1))
        .collect();
    let unique = |x: usize, first: bool| -> Result<usize, String> {
        let ys: Vec<usize> = pairs
            .iter()
            .filter(|p| if first { p.0 == x } else { p.1 == x })
            .map(|p| if first { p.1 } else { p.0 })
            .collect();
        match ys.as_slice() {
            [y] => Ok(*y),
            _ => Err(format!("rotation at `{}` has {} values", f.name(x), ys.len())),
        }
    };
    let alpha = (0..n).map(|x| unique(x, true)).collect::<Result<Vec<_>, _>>()?;
    let beta = (0..n).map(|x| unique(x, false)).collect::<Result<Vec<_>, _>>()?;
    Ok((alpha, beta))
}

fn rotation_identities() -> Outcome {
    let mut triples = 0;
    for (name, f, x) in catalog_nerves() {
        let (alpha, beta) = rotations(&f).map_err(|e| format!("{name}: {e}"))?;
        for a in 0..f.len() {
            ensure(beta[alpha[a]] == a && alpha[beta[a]] == a, || {
                format!("{name}: α̂ and β̂ are not inverse at `{}`", f.name(a))
            })?;
        }
        for a in 0..f.len() {
            for b in 0..f.len() {
                for c in 0..f.len() {
                    let d = f.delta().contains(&(a, b, c));
                    let via_alpha = f.mu().contains(&(a, alpha[c], b));
                    let via_beta = f.mu().contains(&(beta[b], a, c));
                    ensure(d == via_alpha && d == via_beta, || {
                        format!(
                            "{name}: δ recovery fails at ({}, {}, {})",
                            f.name(a),
                            f.name(b),
                            f.name(c)
                        )
                    })?;
                    triples += 1;
                }
            }
        }
        let l = delta_recovery(&x);
        ensure(l.holds == Some(true), || {
            format!("{name}: δ recovery check gave {l:?}")
        })?;
    }
    Ok(format!("{triples} triples"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("1 round-trip through characterize", 5, round_trip),
        ("2 unique ε-horn extension and deletion controls", 10, eps_horns),
        (
            "3 cancellation and partiality vs 3-horn lifting",
            60,
            cancellation_and_partiality,
        ),
        (
            "4 boundary fillers and nerve maps vs homomorphisms",
            30,
            coskeletality_and_faithfulness,
        ),
        (
            "5 Frobenius-identity equivalence groups",
            120,
            frobenius_shape_groups_agree,
        ),
        ("6 face unions of Σⁿ meeting one end", 60, face_unions),
        ("7 characterization negative controls", 10, negative_controls),
        ("8 algebraicity vs lifting on small test spaces", 120, test_spaces),
        (
            "9 rotation identities and comultiplication recovery",
            5,
            rotation_identities,
        ),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        match (&outcome, over) {
            (Ok(detail), false) => {
                println!(
                    "PASS {name} ({:.2}s, budget {budget}s): {detail}",
                    elapsed.as_secs_f64()
                )
            }
            (Ok(detail), true) => {
                failed += 1;
                println!(
                    "FAIL {name} ({:.2}s, over budget {budget}s): {detail}",
                    elapsed.as_secs_f64()
                )
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {name} ({:.2}s): {why}", elapsed.as_secs_f64())
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
