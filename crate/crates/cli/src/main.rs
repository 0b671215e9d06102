use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ims_core::atoms::{check_n, AtomSet, DEFAULT_MAX_N, HARD_MAX_N};
use ims_core::expr::{parse, Expr};
use ims_core::gsbasis::{complete, parse_presentation, DEFAULT_MAX_ROUNDS};
use ims_core::imeasure::{
    canonical, check_identity, random_markov_distribution, symbolic_measure,
    verify_markov_vanishing, JointDistribution, Mode, Verdict, DEFAULT_TRIALS,
};
use ims_core::markov::{k_set, markov_universe};
use ims_core::selftest::{run_all, run_criterion};
use ims_core::Error;

#[derive(Parser)]
#[command(
    name = "ims",
    version,
    about = "Canonical forms and entropy identities for information diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Number of variables
    #[arg(short = 'n')]
    n: usize,
    /// Work in the Markov-chain quotient x1 -> x2 -> ... -> xn
    #[arg(long)]
    markov: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical atom sum of an expression
    Normalize {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Decide whether two expressions are equal; exit status 0 if equal, 1 if not
    Eq {
        #[command(flatten)]
        common: Common,
        lhs: String,
        rhs: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Express the measure of an expression through joint entropies
    Entropy {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Atoms eliminated by the Markov-chain constraints
    Kset {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Complete a presentation file to a Gröbner-Shirshov basis
    Complete {
        #[arg(long)]
        pres: PathBuf,
        /// Number of variables; read from a `# n = N` line when omitted
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS)]
        max_rounds: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the Markov-chain constraints numerically on a distribution
    Verify {
        #[arg(
            long,
            conflicts_with = "random_markov",
            required_unless_present = "random_markov"
        )]
        dist: Option<PathBuf>,
        /// Sample a random Markov chain instead of reading a file
        #[arg(long, requires = "n")]
        random_markov: bool,
        #[arg(short = 'n')]
        n: Option<usize>,
        /// Alphabet size of every variable for --random-markov
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the acceptance criteria
    Selftest {
        /// Run a single criterion
        #[arg(long)]
        only: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted(_) => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn max_n() -> Result<usize, Failure> {
    match std::env::var("IMS_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if (1..=HARD_MAX_N).contains(&cap) => Ok(cap),
            _ => Err(Failure::Usage(format!(
                "IMS_MAX_N must be an integer in 1..={HARD_MAX_N}, got `{v}`"
            ))),
        },
    }
}

fn check_config(n: usize, markov: bool) -> Result<(), Failure> {
    check_n(n)?;
    let cap = max_n()?;
    if n > cap {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the cap of {cap} (set IMS_MAX_N to raise it)"
        )));
    }
    if markov && n < 3 {
        return Err(Failure::Usage("--markov needs n >= 3".into()));
    }
    Ok(())
}

fn mode(markov: bool) -> Mode {
    if markov {
        Mode::Markov
    } else {
        Mode::Free
    }
}

fn parse_expr(text: &str, n: usize) -> Result<Expr, Failure> {
    parse(text, n).map_err(|e| Failure::Usage(format!("`{text}`: {e}")))
}

fn one_of(n: usize, markov: bool) -> Result<AtomSet, Failure> {
    Ok(if markov {
        markov_universe(n)?
    } else {
        AtomSet::full(n)?
    })
}

fn print_json(v: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Normalize { common, expr } => {
            check_config(common.n, common.markov)?;
            let e = parse_expr(&expr, common.n)?;
            let s = canonical(&e, common.n, mode(common.markov))?;
            match common.format {
                Format::Text => {
                    println!("{}", s.render_relative(&one_of(common.n, common.markov)?))
                }
                Format::Json => print_json(&serde_json::to_value(&s).expect("atom sets serialize")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq {
            common,
            lhs,
            rhs,
            seed,
            trials,
        } => {
            check_config(common.n, common.markov)?;
            let a = parse_expr(&lhs, common.n)?;
            let b = parse_expr(&rhs, common.n)?;
            let verdict = check_identity(&a, &b, common.n, mode(common.markov), trials, seed)?;
            let equal = verdict.is_equal();
            match (common.format, &verdict) {
                (Format::Text, Verdict::Equal) => println!("equal"),
                (Format::Text, Verdict::NotEqual(None)) => {
                    println!("not_equal");
                    println!("no separating distribution found in {trials} trials");
                }
                (Format::Text, Verdict::NotEqual(Some(c))) => {
                    println!("not_equal");
                    println!(
                        "counterexample seed {}: f(lhs) = {:.9}, f(rhs) = {:.9}",
                        c.seed, c.f1, c.f2
                    );
                    println!("{}", c.distribution.to_json());
                }
                (Format::Json, _) => {
                    let counterexample = match &verdict {
                        Verdict::NotEqual(Some(c)) => json!({
                            "seed": c.seed,
                            "f_lhs": c.f1,
                            "f_rhs": c.f2,
                            "distribution": serde_json::from_str::<serde_json::Value>(&c.distribution.to_json())
                                .expect("own output parses"),
                        }),
                        _ => serde_json::Value::Null,
                    };
                    print_json(&json!({
                        "verdict": if equal { "equal" } else { "not_equal" },
                        "counterexample": counterexample,
                    }));
                }
            }
            Ok(if equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Entropy { common, expr } => {
            check_config(common.n, common.markov)?;
            let e = parse_expr(&expr, common.n)?;
            let combo = symbolic_measure(&canonical(&e, common.n, mode(common.markov))?);
            match common.format {
                Format::Text => println!("{combo}"),
                Format::Json => print_json(&combo.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kset { n, format } => {
            check_config(n, true)?;
            let k = k_set(n)?;
            match format {
                Format::Text => {
                    println!("eliminated: {:?}", k.eliminated);
                    for t in &k.terms {
                        println!("i={}: {:?}", t.i, t.atoms);
                    }
                    println!("remaining: {:?}", k.atoms().complement().to_vec());
                }
                Format::Json => print_json(&serde_json::to_value(&k).expect("k sets serialize")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Complete {
            pres,
            n,
            max_rounds,
            format,
        } => {
            let text = fs::read_to_string(&pres)
                .map_err(|e| Failure::Usage(format!("{}: {e}", pres.display())))?;
            let n = match n.or_else(|| header_n(&text)) {
                Some(n) => n,
                None => return Err(Failure::Usage("pass -n or add a `# n = N` line".into())),
            };
            check_config(n, false)?;
            let p = parse_presentation(&text, n)?;
            let c = complete(&p, max_rounds)?;
            match format {
                Format::Text => {
                    print!("{}", c.presentation.to_text());
                    eprintln!(
                        "{} after {} rounds, {} relations",
                        if c.complete { "fixpoint" } else { "incomplete" },
                        c.rounds,
                        c.presentation.len()
                    );
                }
                Format::Json => print_json(&json!({
                    "n": n,
                    "complete": c.complete,
                    "rounds": c.rounds,
                    "eliminated": c.presentation.eliminated_atoms(),
                    "relations": c.presentation.relations().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            dist,
            random_markov,
            n,
            alphabet,
            seed,
            format,
        } => {
            let d = if random_markov {
                let n = n.expect("clap enforces -n");
                check_config(n, false)?;
                random_markov_distribution(&vec![alphabet; n], seed)?
            } else {
                let path = dist.expect("clap enforces --dist");
                let text = fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                let d = JointDistribution::from_json(&text)?;
                check_config(d.n(), false)?;
                d
            };
            let report = verify_markov_vanishing(&d)?;
            match format {
                Format::Text => {
                    for c in &report.constraints {
                        println!(
                            "constraint {}: {:+.3e} {}",
                            c.i,
                            c.value,
                            if c.ok { "ok" } else { "VIOLATED" }
                        );
                    }
                    for (k, v) in &report.k_atoms {
                        println!("atom y{k}: {v:+.3e}");
                    }
                    println!(
                        "{}",
                        if report.all_ok {
                            "all constraints vanish"
                        } else {
                            "constraint violated"
                        }
                    );
                }
                Format::Json => {
                    print_json(&serde_json::to_value(&report).expect("reports serialize"))
                }
            }
            Ok(if report.all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Selftest { only } => {
            let results = match only {
                Some(id) => match run_criterion(id) {
                    Some(r) => vec![r],
                    None => return Err(Failure::Usage(format!("no criterion {id}"))),
                },
                None => run_all(),
            };
            for r in &results {
                println!("{r}");
            }
            Ok(if results.iter().all(|r| r.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn header_n(text: &str) -> Option<usize> {
    text.lines().find_map(|l| {
        let rest = l.trim().strip_prefix('#')?.trim().strip_prefix("n")?.trim();
        rest.strip_prefix('=')?.trim().parse().ok()
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
