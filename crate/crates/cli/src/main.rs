//! `cohrep`: batch front end for the cohomological representation toolkit.

mod report;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cohrep::autdegrees::{degree_support, li_coverage, relth_coverage};
use cohrep::cohomreps::{enumerate, full_cohomology, lp_character, poincare_closed, r_g};
use cohrep::glrestrict::{restrict, ClipMode, GLRep};
use cohrep::isolation::{isolated, isolated_d0, isolated_u_search, IsolationVerdict};
use cohrep::{CohRep, Family, FamilyKind, Partition};
use serde_json::{json, Map, Value};

use report::{envelope, CONDITIONAL_ON};
use verify::Suite;

#[derive(Parser)]
#[command(
    name = "cohrep",
    version,
    about = "Cohomological representations of U(p,q), O(p,q) and Sp(p,q)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args)]
struct Signature {
    /// U, O or Sp.
    family: FamilyKind,
    p: u32,
    q: u32,
}

impl Signature {
    fn family(&self) -> Result<Family, cohrep::Error> {
        Ok(Family::new(self.family, self.p, self.q)?)
    }
}

#[derive(Args)]
struct RepArgs {
    /// Inner partition, e.g. `[2,1]`.
    #[arg(long)]
    lambda: Partition,
    /// Outer partition (U and Sp); defaults to the full box.
    #[arg(long)]
    mu: Option<Partition>,
    /// Sp flag, 0 or 1; defaults to 1.
    #[arg(long)]
    flag: Option<u8>,
}

impl RepArgs {
    fn build(&self, sig: &Signature) -> Result<CohRep, cohrep::Error> {
        Ok(CohRep::new(
            sig.family()?,
            self.lambda.clone(),
            self.mu.clone(),
            self.flag,
        )?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every cohomological representation of a family.
    Enumerate {
        #[command(flatten)]
        sig: Signature,
    },
    /// Poincaré polynomial of the (g, K)-cohomology of one representation.
    Cohomology {
        #[command(flatten)]
        sig: Signature,
        #[command(flatten)]
        rep: RepArgs,
        /// Also run the Weyl-integration oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Isolation in the unitary dual and under d = 0.
    Isolate {
        #[command(flatten)]
        sig: Signature,
        #[command(flatten)]
        rep: RepArgs,
    },
    /// Possible degrees of automorphic cohomology of U(p,q), n = p + q.
    Degrees { n: u64, p: u64, q: u64 },
    /// Automorphic realisation tags; all representations unless one is given.
    Coverage {
        #[command(flatten)]
        sig: Signature,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long, requires = "lambda")]
        mu: Option<Partition>,
        #[arg(long, requires = "lambda")]
        flag: Option<u8>,
    },
    /// Predicted exponents of the restriction of a GL(n) representation to GL(m).
    Restrict {
        /// Block list such as `u(1,3)+u(2,2)[1/3]`.
        rep: GLRep,
        m: usize,
        #[arg(long, default_value_t = ClipMode::Outer)]
        clip_mode: ClipMode,
    },
    /// Run oracle sweeps; exits 1 on any mismatch.
    Verify {
        /// lemC, gaussian, t1intro, isolU or all.
        suite: Suite,
        #[arg(long)]
        max_n: Option<u32>,
    },
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::Enumerate { .. } => "enumerate",
            Command::Cohomology { .. } => "cohomology",
            Command::Isolate { .. } => "isolate",
            Command::Degrees { .. } => "degrees",
            Command::Coverage { .. } => "coverage",
            Command::Restrict { .. } => "restrict",
            Command::Verify { .. } => "verify",
        }
    }
}

/// A successful body and whether the run counts as passing.
type Outcome = Result<(Map<String, Value>, bool), cohrep::Error>;

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("report bodies are objects"),
    }
}

fn verdict(v: &IsolationVerdict) -> Value {
    json!({
        "isolated": v.isolated,
        "criterion": v.criterion.to_string(),
        "witnesses": v.witnesses.iter().map(|w| Value::Object(report::rep(w))).collect::<Vec<_>>(),
    })
}

fn run(command: &Command) -> Outcome {
    let body = match command {
        Command::Enumerate { sig } => {
            let family = sig.family()?;
            let reps = enumerate(family);
            json!({
                "family": family.to_string(),
                "r_G": r_g(family),
                "count": reps.len(),
                "representations": reps.iter().map(report::rep_detailed).collect::<Vec<_>>(),
            })
        }
        Command::Cohomology { sig, rep, oracle } => {
            let rep = rep.build(sig)?;
            let closed = poincare_closed(&rep)?;
            let (group, _) = lp_character(&rep);
            let scale = match rep.kind() {
                FamilyKind::U => 2,
                FamilyKind::O => 1,
                FamilyKind::Sp => 4,
            };
            let mut m = obj(json!({
                "family": rep.family.to_string(),
                "representation": report::rep_detailed(&rep),
                "degree": rep.degree,
                "lp_group": group.to_string(),
                "lp_dim": scale * rep.family.p * rep.family.q - 2 * rep.degree,
                "poincare": report::poly(&closed),
                "total_dimension": closed.coeffs().iter().sum::<u64>(),
            }));
            if *oracle {
                let dims = full_cohomology(&rep)?;
                let agrees = closed.terms()
                    == dims
                        .iter()
                        .map(|&(d, c)| (d as usize, c))
                        .collect::<Vec<_>>();
                m.insert("oracle".into(), json!(dims));
                m.insert("oracle_agrees".into(), json!(agrees));
                return Ok((m, agrees));
            }
            Value::Object(m)
        }
        Command::Isolate { sig, rep } => {
            let rep = rep.build(sig)?;
            let v = isolated(&rep);
            let mut m = obj(json!({
                "family": rep.family.to_string(),
                "representation": Value::Object(report::rep(&rep)),
                "isolated": v.isolated,
                "criterion": v.criterion.to_string(),
                "witnesses": verdict(&v)["witnesses"].take(),
                "d0": verdict(&isolated_d0(&rep)),
            }));
            if rep.kind() == FamilyKind::U {
                m.insert(
                    "search_agrees".into(),
                    json!(isolated_u_search(&rep)?.isolated == v.isolated),
                );
            }
            Value::Object(m)
        }
        Command::Degrees { n, p, q } => {
            let s = degree_support(*n, *p, *q)?;
            json!({
                "n": n,
                "p": p,
                "q": q,
                "conditional_on": CONDITIONAL_ON,
                "divisors": s.intervals.iter().map(|iv| json!({
                    "b": iv.b,
                    "N": iv.n_b,
                    "interval": [iv.lo, iv.hi],
                })).collect::<Vec<_>>(),
                "support": s.to_vec(),
                "parity": s.parity,
            })
        }
        Command::Coverage {
            sig,
            lambda,
            mu,
            flag,
        } => {
            let family = sig.family()?;
            let reps = match lambda {
                Some(l) => vec![CohRep::new(family, l.clone(), mu.clone(), *flag)?],
                None => enumerate(family),
            };
            let rows: Vec<Value> = reps
                .iter()
                .map(|r| {
                    let (li, rel) = (li_coverage(r), relth_coverage(r));
                    let mut m = report::rep(r);
                    m.insert("li".into(), report::coverage(&li));
                    m.insert("relth".into(), report::coverage(&rel));
                    m.insert("level".into(), json!(li.level.max(rel.level).to_string()));
                    Value::Object(m)
                })
                .collect();
            json!({
                "family": family.to_string(),
                "conditional_on": CONDITIONAL_ON,
                "representations": rows,
            })
        }
        Command::Restrict { rep, m, clip_mode } => {
            let r = restrict(rep, *m)?;
            json!({
                "rep": rep.to_string(),
                "n": rep.n(),
                "m": m,
                "clip_mode": clip_mode.to_string(),
                "T": report::rationals(r.t.entries()),
                "prediction": report::rationals(r.prediction(*clip_mode)),
                "mode_disagreement": r.mode_disagreement(),
                "outer": report::rationals(&r.outer),
                "top": report::rationals(&r.top),
            })
        }
        Command::Verify { suite, max_n } => {
            let reports = verify::run(*suite, *max_n)?;
            let pass = reports.iter().all(|r| r.failures == 0);
            let m = obj(json!({
                "pass": pass,
                "suites": reports.iter().map(verify::SuiteReport::to_json).collect::<Vec<_>>(),
            }));
            return Ok((m, pass));
        }
    };
    Ok((obj(body), true))
}

fn emit(format: Format, v: &Value) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(v).expect("JSON values serialize")
        ),
        Format::Tsv => print!("{}", report::to_tsv(v)),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let input: Vec<String> = std::env::args().skip(1).collect();
    let verb = cli.command.verb();
    match run(&cli.command) {
        Ok((body, pass)) => {
            emit(cli.format, &envelope(verb, &input, body));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let mut body = Map::new();
            body.insert(
                "error".into(),
                json!({"kind": e.kind(), "message": e.to_string()}),
            );
            emit(cli.format, &envelope(verb, &input, body));
            ExitCode::from(3)
        }
    }
}
