//! `semiconj`: command-line front end.
//!
//! Exit codes: 0 verified true / success, 1 verified false or a negative
//! mathematical answer, 2 input error, 3 degree cap exceeded.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semiconj_core::chains::{
    chi1, chi2, good_chain_length_bound, is_good_chain, is_nonnegative, is_stable,
    luroth_step_bound, primitive_degree_bound, theta_bound, validate_chain, Chain, LogBound,
};
use semiconj_core::equations::{
    classify_special, decompose_eb, is_good_solution, luroth_generator, verify_semiconjugacy,
    LattesEvidence, SolutionSquare, SpecialClass,
};
use semiconj_core::expr::parse_expression_capped;
use semiconj_core::families::make;
use semiconj_core::orbifold::orbifolds_of_map;
use semiconj_core::ramification::portrait;
use semiconj_core::{classify_mu_equivalence, print_map, Error, FamilyTag, MuClass, RatMap};

#[derive(Parser)]
#[command(name = "semiconj", version, about = "Exact rational-map workbench")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Largest degree any parsed or composed map may reach.
    #[arg(long, global = true, default_value_t = semiconj_core::expr::DEFAULT_DEGREE_CAP)]
    max_degree: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Critical values and the local degrees over them.
    Portrait {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// The orbifolds O_1^f, O_2^f with Euler characteristics.
    Orbifold {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Special-map verdict and μ-equivalence class.
    Classify {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Checks A∘X = X∘B.
    VerifySemi {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Checks A∘C = D∘B, optionally with the goodness report.
    VerifySquare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        good: bool,
    },
    /// Greatest common right factor of X and B.
    Luroth {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// X = X̃∘U∘B^k for a semiconjugacy A∘X = X∘B.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Validates a chain file: one step `U ; V` per line, `#` comments.
    ChainCheck { file: PathBuf },
    /// θ(d), 2θ(d)+26, the Lüroth step bound and max(60, 2d-1).
    Bounds { d: u64 },
    /// Prints a family member, e.g. `T(5)`, `Delta`, `lattes233_4`.
    Family {
        #[arg(allow_hyphen_values = true)]
        tag: String,
    },
}

enum Failure {
    Input(String),
    Limit(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidInput(_) | Error::UnsupportedPoint(_) => {
                Failure::Input(e.to_string())
            }
            Error::LimitExceeded(_) => Failure::Limit(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

/// A report: text lines, the structured record, and whether it verified.
struct Report {
    lines: Vec<String>,
    record: Value,
    ok: bool,
}

struct Ctx {
    cap: usize,
}

impl Ctx {
    fn parse(&self, s: &str) -> Result<RatMap, Failure> {
        Ok(parse_expression_capped(s, self.cap)?)
    }

    fn capped(&self, degree: usize) -> Result<(), Failure> {
        if degree > self.cap {
            return Err(Failure::Limit(format!(
                "degree {degree} exceeds the cap {}",
                self.cap
            )));
        }
        Ok(())
    }
}

fn bound_text(b: &LogBound) -> String {
    match b.as_rational() {
        Some(r) => r.to_string(),
        None => format!("{b} (between {} and {})", b.floor(), b.ceil()),
    }
}

fn bound_record(b: &LogBound) -> Value {
    json!({
        "expr": b.to_string(),
        "floor": b.floor().to_string(),
        "ceil": b.ceil().to_string(),
        "exact": b.as_rational().map(|r| r.to_string()),
    })
}

fn special_text(c: &SpecialClass) -> String {
    match c {
        SpecialClass::PowerConjugate { n, inverse: false } => format!("conjugate to z^{n}"),
        SpecialClass::PowerConjugate { n, inverse: true } => format!("conjugate to z^-{n}"),
        SpecialClass::ChebyshevConjugate { n } => format!("conjugate to T({n}) or -T({n})"),
        SpecialClass::LattesCandidate(LattesEvidence::PostcriticalCovering(o)) => {
            format!("Lattès candidate, covering self-map of {o}")
        }
        SpecialClass::LattesCandidate(LattesEvidence::ExceptionalPattern { source, target }) => {
            format!("Lattès candidate, covering {source} -> {target}")
        }
        SpecialClass::NonSpecial => "not special".into(),
    }
}

fn mu_text(c: &MuClass) -> String {
    match c {
        MuClass::None {
            portrait_matches: true,
        } => "none (branching matches a family)".into(),
        MuClass::None {
            portrait_matches: false,
        } => "none".into(),
        c => c.family().map(|t| t.to_string()).unwrap_or_default(),
    }
}

fn run(ctx: &Ctx, cmd: Cmd) -> Result<Report, Failure> {
    match cmd {
        Cmd::Portrait { f } => {
            let f = ctx.parse(&f)?;
            let p = portrait(&f)?;
            Ok(Report {
                lines: vec![
                    format!("map: {}", print_map(&f)),
                    format!("degree: {}", p.degree),
                    format!("portrait: {p}"),
                ],
                record: json!({"map": print_map(&f), "portrait": p}),
                ok: true,
            })
        }
        Cmd::Orbifold { f } => {
            let f = ctx.parse(&f)?;
            let (o1, o2) = orbifolds_of_map(&f)?;
            let (c1, c2) = (o1.euler_char(), o2.euler_char());
            Ok(Report {
                lines: vec![
                    format!("O1: {o1}  chi = {c1}  {:?}", o1.classify()),
                    format!("O2: {o2}  chi = {c2}  {:?}", o2.classify()),
                ],
                record: json!({
                    "map": print_map(&f),
                    "o1": {"orbifold": o1, "chi": c1.to_string(), "class": o1.classify()},
                    "o2": {"orbifold": o2, "chi": c2.to_string(), "class": o2.classify()},
                }),
                ok: true,
            })
        }
        Cmd::Classify { f } => {
            let f = ctx.parse(&f)?;
            if f.degree() < 2 {
                return Err(Failure::Input("classify needs degree >= 2".into()));
            }
            let v = classify_special(&f);
            let mu = classify_mu_equivalence(&f);
            let witness = v.witness.as_ref().map(|m| m.to_string());
            let mu_w = mu
                .witnesses
                .as_ref()
                .map(|(a, b)| [a.to_string(), b.to_string()]);
            let mut lines = vec![format!("special: {}", special_text(&v.class))];
            if let Some(w) = &witness {
                lines.push(format!("conjugating map: {w}"));
            }
            lines.push(format!("mu-class: {}", mu_text(&mu.class)));
            if let Some([a, b]) = &mu_w {
                lines.push(format!("mu-witnesses: {a} ; {b}"));
            }
            Ok(Report {
                lines,
                record: json!({
                    "map": print_map(&f),
                    "special": v.class,
                    "is_special": v.is_special(),
                    "witness": witness,
                    "mu_class": mu.class,
                    "mu_witnesses": mu_w,
                }),
                ok: true,
            })
        }
        Cmd::VerifySemi { a, x, b } => {
            let (a, x, b) = (ctx.parse(&a)?, ctx.parse(&x)?, ctx.parse(&b)?);
            ctx.capped(a.degree() * x.degree())?;
            let ok = verify_semiconjugacy(&a, &x, &b);
            Ok(Report {
                lines: vec![ok.to_string()],
                record: json!({"a": print_map(&a), "x": print_map(&x), "b": print_map(&b), "holds": ok}),
                ok,
            })
        }
        Cmd::VerifySquare { a, c, d, b, good } => {
            let (a, c, d, b) = (
                ctx.parse(&a)?,
                ctx.parse(&c)?,
                ctx.parse(&d)?,
                ctx.parse(&b)?,
            );
            ctx.capped((a.degree() * c.degree()).max(d.degree() * b.degree()))?;
            let mut record = json!({
                "a": print_map(&a), "c": print_map(&c), "d": print_map(&d), "b": print_map(&b),
            });
            match SolutionSquare::new(a, c, d, b) {
                Err(_) => {
                    record["holds"] = json!(false);
                    Ok(Report {
                        lines: vec!["false".into()],
                        record,
                        ok: false,
                    })
                }
                Ok(sq) => {
                    record["holds"] = json!(true);
                    let mut lines = vec!["true".into()];
                    let mut ok = true;
                    if good {
                        let r = is_good_solution(&sq);
                        lines.push(format!("degrees match: {}", r.degrees_match));
                        lines.push(format!(
                            "coprime local degrees: {}",
                            r.no_common_right_factor
                        ));
                        lines.push("fiber product irreducible: not checked".into());
                        lines.push(format!("good: {}", r.verdict));
                        ok = r.verdict;
                        record["goodness"] = json!(r);
                    }
                    Ok(Report { lines, record, ok })
                }
            }
        }
        Cmd::Luroth { x, b } => {
            let (x, b) = (ctx.parse(&x)?, ctx.parse(&b)?);
            let g = luroth_generator(&x, &b);
            Ok(Report {
                lines: vec![
                    format!("U: {}", print_map(&g.u)),
                    format!("degree index: {}", g.degree_index),
                    format!("primitive: {}", g.degree_index == 1),
                ],
                record: json!({
                    "x": print_map(&x), "b": print_map(&b), "u": print_map(&g.u),
                    "degree_index": g.degree_index, "canonical": g.canonical,
                    "primitive": g.degree_index == 1,
                }),
                ok: true,
            })
        }
        Cmd::Decompose { x, b } => {
            let (x, b) = (ctx.parse(&x)?, ctx.parse(&b)?);
            ctx.capped(x.degree() * b.degree())?;
            let dec = decompose_eb(&x, &b)?;
            let steps: Vec<[String; 2]> = dec
                .chain
                .steps()
                .iter()
                .map(|(u, v)| [print_map(u), print_map(v)])
                .collect();
            let mut lines = vec![
                format!("A: {}", print_map(&dec.a)),
                format!("X~: {}", print_map(&dec.x_tilde)),
                format!("U: {}", print_map(&dec.u)),
                format!("k: {}", dec.k),
            ];
            for (i, [u, v]) in steps.iter().enumerate() {
                lines.push(format!("step {}: U = {u} ; V = {v}", i + 1));
            }
            match &dec.bounds {
                None => lines.push("B is special: bounds not asserted".into()),
                Some(bc) => {
                    lines.push(format!("chi(O2 of X~) > 0: {}", bc.chi_positive));
                    lines.push(format!("deg X~ <= {}: {}", bc.degree_bound, bc.degree_ok));
                    if let Some(ok) = bc.chain_length_ok {
                        lines.push(format!("steps within bound: {ok}"));
                    }
                }
            }
            let ok = dec.bounds.as_ref().is_none_or(|b| b.holds());
            Ok(Report {
                lines,
                record: json!({
                    "a": print_map(&dec.a), "x_tilde": print_map(&dec.x_tilde),
                    "u": print_map(&dec.u), "k": dec.k, "steps": steps,
                    "relaxed": dec.chain.is_relaxed(), "special": dec.special.class,
                    "bounds": dec.bounds,
                }),
                ok,
            })
        }
        Cmd::ChainCheck { file } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            let mut steps = Vec::new();
            for (n, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap().trim();
                if line.is_empty() {
                    continue;
                }
                let (u, v) = line
                    .split_once(';')
                    .ok_or_else(|| Failure::Input(format!("line {}: expected `U ; V`", n + 1)))?;
                steps.push((ctx.parse(u)?, ctx.parse(v)?));
            }
            let chain = Chain::new(steps)?;
            let valid = validate_chain(&chain);
            let basis = chain.basis().unwrap();
            let mut record = json!({
                "length": chain.len(),
                "basis": print_map(&basis),
                "steps": chain.steps().iter().map(|(u, v)| [print_map(u), print_map(v)]).collect::<Vec<_>>(),
                "valid": valid,
            });
            let mut lines = vec![
                format!("length: {}", chain.len()),
                format!("basis: {}", print_map(&basis)),
                format!("valid: {valid}"),
            ];
            if valid {
                let (good, nonneg, stable) = (
                    is_good_chain(&chain),
                    is_nonnegative(&chain),
                    is_stable(&chain),
                );
                lines.push(format!("good: {good}"));
                lines.push(format!("non-negative: {nonneg}"));
                lines.push(format!("stable: {stable}"));
                record["good"] = json!(good);
                record["nonnegative"] = json!(nonneg);
                record["stable"] = json!(stable);
                if stable {
                    let (c1, c2) = (chi1(&chain)?, chi2(&chain)?);
                    lines.push(format!("chi1: {c1}"));
                    lines.push(format!("chi2: {c2}"));
                    record["chi1"] = json!(c1.to_string());
                    record["chi2"] = json!(c2.to_string());
                }
                let d = basis.degree() as u64;
                if d >= 4 {
                    let bound = good_chain_length_bound(d)?;
                    let within = bound.admits(chain.len() as i64);
                    lines.push(format!("length <= {}: {within}", bound_text(&bound)));
                    record["within_good_chain_bound"] = json!(within);
                }
            }
            Ok(Report {
                lines,
                record,
                ok: valid,
            })
        }
        Cmd::Bounds { d } => {
            let theta = theta_bound(d)?;
            let chain = good_chain_length_bound(d)?;
            let steps = luroth_step_bound(d)?;
            let prim = primitive_degree_bound(d);
            Ok(Report {
                lines: vec![
                    format!("d: {d}"),
                    format!("theta: {}", bound_text(&theta)),
                    format!("good chain bound: {}", bound_text(&chain)),
                    format!("luroth step bound: {}", bound_text(&steps)),
                    format!("primitive degree bound: {prim}"),
                ],
                record: json!({
                    "d": d,
                    "theta": bound_record(&theta),
                    "good_chain_bound": bound_record(&chain),
                    "luroth_step_bound": bound_record(&steps),
                    "primitive_degree_bound": prim,
                }),
                ok: true,
            })
        }
        Cmd::Family { tag } => {
            let tag: FamilyTag = tag.parse()?;
            let f = make(tag)?;
            ctx.capped(f.degree())?;
            Ok(Report {
                lines: vec![format!("{tag} = {}", f.text())],
                record: json!({"name": tag.to_string(), "map": f.text(), "degree": f.degree()}),
                ok: true,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let structured = cli.output == Output::Structured;
    let ctx = Ctx {
        cap: cli.max_degree,
    };
    match run(&ctx, cli.cmd) {
        Ok(r) => {
            let text = if structured {
                serde_json::to_string_pretty(&r.record).unwrap()
            } else {
                r.lines.join("\n")
            };
            // A closed pipe is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(if r.ok { 0 } else { 1 })
        }
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Input(m) => (2, "input", m),
                Failure::Limit(m) => (3, "limit", m),
                Failure::Math(m) => (1, "math", m),
            };
            if structured {
                let _ = writeln!(
                    std::io::stdout().lock(),
                    "{}",
                    json!({"error": kind, "message": msg})
                );
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
