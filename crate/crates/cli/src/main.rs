use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use relfrob::io::{parse_algebra, parse_sset, Algebra, AlgebraFile, SSetFile};
use relfrob::lifting::{
    cancellation_suite, characterize, check_extension, delta_recovery, eps_horn_suite, extract_structure,
    face_union_suite, frobenius_shape_groups, roundtrip, Mode, DEFAULT_FAILURE_CAP,
};
use relfrob::nerve::{nerve_frobenius, nerve_monoid};
use relfrob::shapes::ShapeName;
use relfrob::simplicial::EpsSimplicialSet;
use relfrob::testspace::{algebraicity_as_lifting, TestSpace, TestSpaceInput};
use relfrob::{catalog, Error, DEFAULT_MAX_DIM};

#[derive(Parser)]
#[command(
    name = "relfrob",
    version,
    about = "Frobenius algebras in Rel and their ε-simplicial nerves"
)]
struct Cli {
    /// Print only the JSON report; no summary on stderr.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra.
    Check { input: PathBuf },
    /// Write the nerve of an algebra as an ε-simplicial set.
    Nerve {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an extension property of an ε-simplicial set (or of an algebra's nerve).
    Lift {
        #[arg(long)]
        shape: ShapeName,
        /// Require fillers to be unique.
        #[arg(long)]
        unique: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        input: PathBuf,
    },
    /// Compare algebraic conditions with their lifting counterparts.
    Theorem {
        which: Suite,
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Decide whether an ε-simplicial set is the nerve of a Frobenius algebra.
    Characterize {
        input: PathBuf,
        /// Where to write the reconstructed algebra on acceptance.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Read μ, α̂ and δ off an ε-simplicial set.
    Extract { input: PathBuf },
    /// Characterize the nerve of an algebra and compare the result with it.
    Roundtrip {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Inspect a test space.
    Testspace {
        input: PathBuf,
        #[arg(long)]
        check_algebraicity: bool,
        /// Also decide algebraicity as a lifting problem and compare.
        #[arg(long, requires = "check_algebraicity")]
        via_lifting: bool,
    },
    /// Write the bundled examples.
    Catalog {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Cancellation and partiality vs 3-horn lifting.
    #[value(name = "4.2")]
    Cancellation,
    /// Unique ε-horn extensions.
    #[value(name = "5.6")]
    EpsHorns,
    /// Comultiplication read via α̂ vs via 3-cells.
    #[value(name = "5.9")]
    DeltaRecovery,
    /// Face unions of Σⁿ meeting exactly one end.
    #[value(name = "6.4")]
    FaceUnions,
    /// Equivalence groups of the Frobenius-identity shapes.
    #[value(name = "6.x")]
    FrobeniusShapes,
    /// Nerve characterization.
    #[value(name = "7.2")]
    Characterization,
}

struct Report {
    holds: bool,
    json: Value,
    summary: String,
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, value: &Value) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_algebra(path: &Path) -> anyhow::Result<Algebra> {
    parse_algebra(&read(path)?).with_context(|| format!("in {}", path.display()))
}

/// An ε-simplicial set, or the nerve of an algebra when the file has a `kind`.
fn load_space(path: &Path, k: usize) -> anyhow::Result<EpsSimplicialSet> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("in {}", path.display()))?;
    if value.get("kind").is_some() {
        let alg = parse_algebra(&text).with_context(|| format!("in {}", path.display()))?;
        Ok(nerve_of(&alg, k)?)
    } else {
        parse_sset(&text).with_context(|| format!("in {}", path.display()))
    }
}

fn nerve_of(alg: &Algebra, k: usize) -> relfrob::Result<EpsSimplicialSet> {
    match alg {
        Algebra::Monoid(m) => nerve_monoid(m, k),
        Algebra::Frobenius(f) => nerve_frobenius(f, k),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn check(input: &Path) -> anyhow::Result<Report> {
    let alg = match parse_algebra(&read(input)?) {
        Err(Error::Axiom {
            structure,
            axiom,
            witness,
        }) => {
            return Ok(Report {
                holds: false,
                summary: format!("{structure}: {axiom} fails at {witness}"),
                json: json!({"ok": false, "structure": structure, "violated_axiom": axiom, "witness": witness}),
            })
        }
        Err(Error::NotFrobenius(why)) => {
            return Ok(Report {
                holds: false,
                summary: format!("not Frobenius: {why}"),
                json: json!({"ok": false, "structure": "frobenius", "reason": why}),
            })
        }
        other => other.with_context(|| format!("in {}", input.display()))?,
    };
    let r = match &alg {
        Algebra::Monoid(m) => m.check(),
        Algebra::Frobenius(f) => f.check(),
    };
    let summary = match (&r.violated_axiom, &r.witness) {
        (Some(a), Some(w)) => format!("{a} fails at ({})", w.join(", ")),
        _ => "all axioms hold".to_string(),
    };
    Ok(Report {
        holds: r.ok,
        json: to_json(&r),
        summary,
    })
}

fn lift(shape: &ShapeName, unique: bool, k: usize, input: &Path) -> anyhow::Result<Report> {
    let x = load_space(input, k)?;
    let inc = shape.realize(x.trunc_dim())?;
    let mode = if unique { Mode::Unique } else { Mode::Exists };
    let r = check_extension(&inc, &x, mode, DEFAULT_FAILURE_CAP);
    let summary = format!(
        "{shape}: {} ({} instances, {} failing)",
        if r.holds { "extends" } else { "does not extend" },
        r.total_instances,
        r.failure_count
    );
    Ok(Report {
        holds: r.holds,
        json: json!({"shape": shape.to_string(), "report": to_json(&r)}),
        summary,
    })
}

fn theorem(which: Suite, input: &Path, k: usize) -> anyhow::Result<Report> {
    Ok(match which {
        Suite::Cancellation => {
            let alg = load_algebra(input)?;
            let r = cancellation_suite(alg.monoid())?;
            let lines: Vec<String> = r
                .equivalences
                .iter()
                .map(|e| {
                    let ps: Vec<String> = e
                        .predicates
                        .iter()
                        .map(|p| format!("{}={}", p.name, p.holds))
                        .collect();
                    format!("{}: {}", e.name, ps.join(", "))
                })
                .collect();
            Report {
                holds: r.all_agree,
                json: to_json(&r),
                summary: lines.join("\n"),
            }
        }
        Suite::EpsHorns => {
            let x = load_space(input, k)?;
            let vs = eps_horn_suite(&x, 4)?;
            let holds = vs.iter().all(|v| v.holds);
            let failing: Vec<&str> = vs.iter().filter(|v| !v.holds).map(|v| v.shape.as_str()).collect();
            Report {
                holds,
                json: to_json(&vs),
                summary: if holds {
                    format!("all {} ε-horns have unique fillers", vs.len())
                } else {
                    format!("failing: {}", failing.join(", "))
                },
            }
        }
        Suite::DeltaRecovery => {
            let x = load_space(input, k)?;
            let r = delta_recovery(&x);
            let summary = match r.holds {
                None => "ε-horn fillers missing; check skipped".to_string(),
                Some(true) => format!("both readings of δ agree on {} triples", r.triples_checked),
                Some(false) => format!("readings of δ differ at {:?}", r.counterexample),
            };
            Report {
                holds: r.holds != Some(false),
                json: to_json(&r),
                summary,
            }
        }
        Suite::FaceUnions => {
            let x = load_space(input, k)?;
            match face_union_suite(&x)? {
                None => Report {
                    holds: true,
                    json: json!({"precondition_holds": false, "verdicts": []}),
                    summary: "ε-horn fillers missing; check skipped".into(),
                },
                Some(vs) => {
                    let holds = vs.iter().all(|v| v.holds);
                    Report {
                        holds,
                        summary: format!(
                            "{} of {} face unions extend",
                            vs.iter().filter(|v| v.holds).count(),
                            vs.len()
                        ),
                        json: json!({"precondition_holds": true, "verdicts": to_json(&vs)}),
                    }
                }
            }
        }
        Suite::FrobeniusShapes => {
            let x = load_space(input, k)?;
            let rs = frobenius_shape_groups(&x)?;
            let holds = rs.iter().all(|r| r.agree);
            let summary = rs
                .iter()
                .map(|r| {
                    let vals: Vec<String> = r.predicates.iter().map(|p| p.holds.to_string()).collect();
                    format!(
                        "{}: [{}] {}",
                        r.name,
                        vals.join(", "),
                        if r.agree { "agree" } else { "DISAGREE" }
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Report {
                holds,
                json: to_json(&rs),
                summary,
            }
        }
        Suite::Characterization => run_characterize(input, None)?,
    })
}

fn run_characterize(input: &Path, output: Option<&Path>) -> anyhow::Result<Report> {
    let x = load_space(input, DEFAULT_MAX_DIM)?;
    let ch = characterize(&x)?;
    let mut json = to_json(&ch);
    if let Some(f) = &ch.algebra {
        let file = to_json(&AlgebraFile::from_frobenius(f));
        json["algebra"] = file.clone();
        if let Some(path) = output {
            write(path, &file)?;
        }
    }
    let summary = match &ch.failure {
        None => format!("accepted: nerve of a {}-element Frobenius algebra", x.count(1)),
        Some(r) => format!("rejected ({:?}): {}", r.condition, r.detail),
    };
    Ok(Report {
        holds: ch.accepted,
        json,
        summary,
    })
}

fn extract(input: &Path) -> anyhow::Result<Report> {
    let x = load_space(input, DEFAULT_MAX_DIM)?;
    let s = extract_structure(&x);
    let n = |i: &usize| s.names[*i].clone();
    let t = |&(a, b, c): &(usize, usize, usize)| [n(&a), n(&b), n(&c)];
    let json = json!({
        "elements": s.names,
        "units": s.units.iter().map(n).collect::<Vec<_>>(),
        "counits": s.counits.iter().map(n).collect::<Vec<_>>(),
        "mu": s.mu.iter().map(t).collect::<Vec<_>>(),
        "alpha": s.alpha.iter().map(|(a, b)| [n(a), n(b)]).collect::<Vec<_>>(),
        "delta": s.delta.iter().map(t).collect::<Vec<_>>(),
    });
    let summary = format!(
        "{} edges, {} μ-triples, {} δ-triples",
        s.names.len(),
        s.mu.len(),
        s.delta.len()
    );
    Ok(Report {
        holds: true,
        json,
        summary,
    })
}

fn run_roundtrip(input: &Path, k: usize) -> anyhow::Result<Report> {
    let alg = load_algebra(input)?;
    let f = alg
        .frobenius()
        .ok_or_else(|| anyhow!("{} is a monoid, not a Frobenius algebra", input.display()))?;
    let (ch, iso) = roundtrip(f, k)?;
    let isomorphism = iso.as_ref().map(|h| {
        let g = ch.algebra.as_ref().expect("isomorphism implies an algebra");
        (0..h.len())
            .map(|a| (f.name(a).to_string(), Value::String(g.name(h[a]).to_string())))
            .collect::<serde_json::Map<_, _>>()
    });
    let json = json!({
        "accepted": ch.accepted,
        "isomorphic": iso.is_some(),
        "isomorphism": isomorphism,
        "failure": to_json(&ch.failure),
    });
    Ok(Report {
        holds: iso.is_some(),
        json,
        summary: format!("accepted: {}, isomorphic: {}", ch.accepted, iso.is_some()),
    })
}

fn testspace(input: &Path, algebraicity: bool, via_lifting: bool) -> anyhow::Result<Report> {
    let text = read(input)?;
    let parsed: TestSpaceInput =
        serde_json::from_str(&text).with_context(|| format!("in {}", input.display()))?;
    let t = TestSpace::from_input(&parsed)?;
    let events = t.events().len();
    let mut json = json!({
        "outcomes": t.outcomes().len(),
        "tests": t.tests().len(),
        "events": events,
    });
    let mut summary = format!(
        "{} outcomes, {} tests, {events} events",
        t.outcomes().len(),
        t.tests().len()
    );
    let mut holds = true;
    if algebraicity {
        let r = t.check_algebraicity();
        holds = r.algebraic;
        json["algebraicity"] = to_json(&r);
        summary += &format!("; algebraic: {}", r.algebraic);
        if let Some(w) = &r.witness {
            summary += &format!(" (A={}, B={}, C={}, D={})", w[0], w[1], w[2], w[3]);
        }
        if via_lifting {
            let l = algebraicity_as_lifting(&t);
            json["lifting"] = to_json(&l);
            json["agree"] = Value::Bool(l.holds == r.algebraic);
            summary += &format!("; lifting: {}", l.holds);
            anyhow::ensure!(
                l.holds == r.algebraic,
                "algebraicity and its lifting encoding disagree"
            );
        }
    }
    Ok(Report { holds, json, summary })
}

fn catalog_cmd(output: Option<&Path>) -> anyhow::Result<Report> {
    let mut files: Vec<(String, Value)> = catalog::frobenius_files()
        .into_iter()
        .map(|(n, f)| (n.to_string(), to_json(&f)))
        .collect();
    files.push(("m2".into(), to_json(&catalog::m2_file())));
    files.push(("triangle".into(), to_json(&catalog::triangle_input())));
    let names: Vec<String> = files.iter().map(|(n, _)| format!("{n}.json")).collect();
    let json = match output {
        Some(dir) => {
            std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            for (n, v) in &files {
                write(&dir.join(format!("{n}.json")), v)?;
            }
            json!({ "written": names })
        }
        None => Value::Object(files.into_iter().collect()),
    };
    Ok(Report {
        holds: true,
        json,
        summary: format!("{} examples", names.len()),
    })
}

fn nerve_cmd(input: &Path, k: usize, output: Option<&Path>) -> anyhow::Result<Report> {
    let alg = load_algebra(input)?;
    let x = nerve_of(&alg, k)?;
    let file = to_json(&SSetFile::from_sset(&x));
    let summary = format!(
        "cells per dimension: {:?}, {} ε-witnesses",
        (0..=k).map(|d| x.count(d)).collect::<Vec<_>>(),
        x.eps_len()
    );
    let json = match output {
        Some(path) => {
            write(path, &file)?;
            json!({ "written": path.display().to_string() })
        }
        None => file,
    };
    Ok(Report {
        holds: true,
        json,
        summary,
    })
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Check { input } => check(input),
        Command::Nerve {
            input,
            max_dim,
            output,
        } => nerve_cmd(input, *max_dim, output.as_deref()),
        Command::Lift {
            shape,
            unique,
            max_dim,
            input,
        } => lift(shape, *unique, *max_dim, input),
        Command::Theorem {
            which,
            input,
            max_dim,
        } => theorem(*which, input, *max_dim),
        Command::Characterize { input, output } => run_characterize(input, output.as_deref()),
        Command::Extract { input } => extract(input),
        Command::Roundtrip { input, max_dim } => run_roundtrip(input, *max_dim),
        Command::Testspace {
            input,
            check_algebraicity,
            via_lifting,
        } => testspace(input, *check_algebraicity, *via_lifting),
        Command::Catalog { output } => catalog_cmd(output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report.json).expect("json value");
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if !cli.json {
                eprintln!("{}", report.summary);
            }
            if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
