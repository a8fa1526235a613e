use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use halfrib::dsl::{emit, parse_link, Format, InvariantReport};
use halfrib::halftwist::{
    braiding, classify_ribbons, fs_indicator, half_twist_operator, Operator, RibbonChoice,
};
use halfrib::qmodule::{irrep, Module};
use halfrib::root_data::{RootDatum, Weight};
use halfrib::skein::{kauffman_bracket, Convention};
use halfrib::suite;
use halfrib::tangle::{link_invariant, LabelRegistry};

/// Exact half-twists, ribbon elements and link invariants for quantum
/// groups of simply-laced type.
///
/// Irreducible modules are memoized in $HALFRIB_CACHE_DIR when it is set.
#[derive(Parser)]
#[command(name = "halfrib", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the irreducible module V_λ, e.g. `irrep A2 1,1`.
    Irrep {
        ty: String,
        weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// The half-twist X = J·T_w0 on V_λ.
    Xelement {
        ty: String,
        weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// R = (X⁻¹⊗X⁻¹)Δ(X) and σ = Flip∘R on V_λ⊗V_μ.
    Rmatrix {
        ty: String,
        left: String,
        right: String,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Frobenius-Schur indicator of V_λ for a ribbon choice.
    Fs {
        ty: String,
        weight: String,
        #[arg(long, default_value = "X2")]
        ribbon: String,
    },
    /// All ribbon elements s(φ)X⁻² with their axiom checks.
    Ribbons { ty: String },
    /// Invariant of a closed link diagram (DSL file, DSL text or braid word).
    Invariant {
        #[arg(long)]
        link: String,
        /// `TYPE:weight` for the label V, or `LABEL=TYPE:weight`; repeatable.
        #[arg(long, default_value = "A1:1")]
        rep: Vec<String>,
        /// `C`, `X2` or `phi:<k>` (k-th character of order at most 2).
        #[arg(long, default_value = "X2")]
        ribbon: String,
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Kauffman bracket of a link and its comparison with the functor.
    Skein {
        #[arg(long)]
        link: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Run the numbered verification checks.
    Verify {
        /// Only this criterion (1-10).
        #[arg(long)]
        criterion: Option<u8>,
        /// Print every item, not just failures.
        #[arg(long, short)]
        verbose: bool,
    },
    /// The startup self-test on the 2- and 3-dimensional sl2 modules.
    Selftest,
}

enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A check that ran and failed: exit code 1.
    Check(String),
}

type Outcome = Result<(), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn datum(ty: &str) -> Result<Arc<RootDatum>, Failure> {
    RootDatum::parse(ty).map(Arc::new).map_err(usage)
}

fn weight(d: &RootDatum, s: &str) -> Result<Weight, Failure> {
    let w = Weight::parse(s).map_err(usage)?;
    if w.rank() != d.rank() {
        return Err(Failure::Usage(format!(
            "weight {w} has rank {}, {} needs {}",
            w.rank(),
            d.name(),
            d.rank()
        )));
    }
    Ok(w)
}

fn module(d: &Arc<RootDatum>, s: &str) -> Result<(Weight, Arc<Module>), Failure> {
    let w = weight(d, s)?;
    let m = irrep(d, &w).map_err(usage)?;
    Ok((w, m))
}

fn ribbon(d: &Arc<RootDatum>, s: &str) -> Result<RibbonChoice, Failure> {
    match s {
        "C" => RibbonChoice::standard(d).map_err(usage),
        "X2" => Ok(RibbonChoice::x_squared_inverse(d)),
        _ => {
            let k = s
                .strip_prefix("phi:")
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| Failure::Usage(format!("unknown ribbon choice {s}; use C, X2 or phi:<k>")))?;
            RibbonChoice::from_index(d, k).ok_or_else(|| {
                Failure::Usage(format!(
                    "{} has {} characters of order at most 2",
                    d.name(),
                    d.order2_characters().len()
                ))
            })
        }
    }
}

fn print_operator(op: &Operator, format: OutFormat) {
    match format {
        OutFormat::Json => println!("{}", serde_json::to_string_pretty(&op.to_json()).expect("serializable")),
        OutFormat::Text => {
            println!("{} -> {} ({}x{})", op.source.label(), op.target.label(), op.matrix.rows(), op.matrix.cols());
            for (r, c, s) in op.matrix.entries() {
                println!("{r} {c} {s}");
            }
        }
    }
}

/// `--rep` values into a registry; an unlabeled entry binds `V`.
fn registry(reps: &[String]) -> Result<LabelRegistry, Failure> {
    let mut parsed = Vec::new();
    for r in reps {
        let (label, spec) = match r.split_once('=') {
            Some((l, s)) => (l.trim().to_string(), s),
            None => ("V".to_string(), r.as_str()),
        };
        let (ty, w) = spec
            .split_once(':')
            .ok_or_else(|| Failure::Usage(format!("--rep {r}: expected TYPE:weight")))?;
        parsed.push((label, ty.trim().to_string(), w.to_string()));
    }
    let ty = &parsed.first().ok_or_else(|| Failure::Usage("no --rep given".into()))?.1;
    if let Some(p) = parsed.iter().find(|p| &p.1 != ty) {
        return Err(Failure::Usage(format!("--rep {} mixes types {} and {}", p.0, ty, p.1)));
    }
    let d = datum(ty)?;
    let mut reg = LabelRegistry::new(d.clone());
    for (label, _, w) in parsed {
        let (w, m) = module(&d, &w)?;
        reg.insert(&label, w, m);
    }
    Ok(reg)
}

fn read_link(link: &str) -> Result<String, Failure> {
    if Path::new(link).is_file() {
        std::fs::read_to_string(link).map_err(|e| Failure::Usage(format!("{link}: {e}")))
    } else {
        Ok(link.to_string())
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Irrep { ty, weight, format } => {
            let d = datum(&ty)?;
            let (_, m) = module(&d, &weight)?;
            match format {
                OutFormat::Json => println!("{}", serde_json::to_string_pretty(&m.to_json()).expect("serializable")),
                OutFormat::Text => {
                    println!("{} {} dim {}", d.name(), m.label(), m.dim());
                    for (w, idx) in m.weight_spaces() {
                        println!("  weight {w}: multiplicity {}", idx.len());
                    }
                }
            }
        }
        Command::Xelement { ty, weight, format } => {
            let d = datum(&ty)?;
            let (_, m) = module(&d, &weight)?;
            print_operator(&half_twist_operator(&m), format);
        }
        Command::Rmatrix { ty, left, right, format } => {
            let d = datum(&ty)?;
            let (_, a) = module(&d, &left)?;
            let (_, b) = module(&d, &right)?;
            let br = braiding(&a, &b).map_err(usage)?;
            let r = Operator { source: br.source.clone(), target: br.source.clone(), matrix: br.r };
            let sigma = Operator { source: br.source, target: br.target, matrix: br.sigma };
            match format {
                OutFormat::Json => {
                    let v = json!({"R": r.to_json(), "sigma": sigma.to_json()});
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
                OutFormat::Text => {
                    println!("R:");
                    print_operator(&r, format);
                    println!("sigma:");
                    print_operator(&sigma, format);
                }
            }
        }
        Command::Fs { ty, weight, ribbon: r } => {
            let d = datum(&ty)?;
            let (w, m) = module(&d, &weight)?;
            let c = ribbon(&d, &r)?;
            println!("FS_{{{c}}}(V{w}) = {}", fs_indicator(&c, &m));
        }
        Command::Ribbons { ty } => {
            let d = datum(&ty)?;
            let list = classify_ribbons(&d).map_err(usage)?;
            println!("{}: {} ribbon element(s) relative to X^-2", d.name(), list.len());
            let mut all = true;
            for (k, c) in list.iter().enumerate() {
                let tags = [
                    (c.is_standard, "standard C"),
                    (c.half_ribbon, "from a half-ribbon element"),
                ];
                let tags: Vec<&str> = tags.iter().filter(|t| t.0).map(|t| t.1).collect();
                println!("phi:{k}  {}  [{}]", c.choice, tags.join(", "));
                for (name, ok) in c.axioms.lines() {
                    println!("    {} {name}", if ok { "ok  " } else { "FAIL" });
                    all &= ok;
                }
            }
            if !all {
                return Err(Failure::Check("a ribbon axiom failed".into()));
            }
        }
        Command::Invariant { link, rep, ribbon: r, normalize, format } => {
            let reg = registry(&rep)?;
            let c = ribbon(reg.datum(), &r)?;
            let text = read_link(&link)?;
            let labels = reg.labels();
            let diag = parse_link(&text, Some(&labels)).map_err(usage)?;
            let report = InvariantReport::compute(link.trim(), &rep.join(" "), &diag, &c, &reg, normalize)
                .map_err(usage)?;
            print!("{}", emit(&report, format.into()));
        }
        Command::Skein { link, format } => {
            let text = read_link(&link)?;
            let reg = registry(&["A1:1".to_string()])?;
            let diag = parse_link(&text, Some(&reg.labels())).map_err(usage)?;
            let bracket = kauffman_bracket(&diag).map_err(usage)?;
            let conv = Convention::preferred();
            let normalized = conv.normalized(&diag).map_err(usage)?;
            let x2 = RibbonChoice::x_squared_inverse(reg.datum());
            let functor = link_invariant(&diag, &x2, &reg, true).map_err(usage)?;
            let agree = normalized == functor;
            match format {
                OutFormat::Json => {
                    let v = json!({
                        "input": link.trim(),
                        "convention": conv.to_string(),
                        "bracket": bracket.to_json(),
                        "normalized": normalized.to_json(),
                        "functor": functor.to_json(),
                        "agree": agree,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
                OutFormat::Text => {
                    println!("input: {}", link.trim());
                    println!("convention: {conv}");
                    println!("bracket: {bracket}");
                    println!("normalized: {normalized}");
                    println!("functor: {functor}");
                    println!("agree: {agree}");
                }
            }
            if !agree {
                return Err(Failure::Check("bracket and functor disagree".into()));
            }
        }
        Command::Verify { criterion, verbose } => {
            let checks = match criterion {
                Some(id) => vec![suite::criterion(id)
                    .ok_or_else(|| Failure::Usage(format!("criterion must be 1-10, got {id}")))?],
                None => suite::run_all(),
            };
            for c in &checks {
                if verbose {
                    print!("{}", c.render());
                } else {
                    println!("{}", c.summary());
                    for i in c.items.iter().filter(|i| !i.passed) {
                        println!("    failed: {}", i.name);
                    }
                }
            }
            let failed = checks.iter().filter(|c| !c.passed()).count();
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} check(s) failed")));
            }
        }
        Command::Selftest => {
            println!("PASS half-twist lemma on V(1) and V(2) of A1");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = suite::startup_selftest() {
        eprintln!("halfrib: startup self-test failed: {e}");
        return ExitCode::from(1);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("halfrib: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("halfrib: {m}");
            ExitCode::from(2)
        }
    }
}
