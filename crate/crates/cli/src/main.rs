use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sccheck::dominance::{dominant_chain, top_cycle};
use sccheck::io::{
    describe_witness, parse_graph, parse_profile, render_theorem_report, serialize_graph, serialize_profile,
    serialize_report, theorem_report_json,
};
use sccheck::mcgarvey::realize;
use sccheck::verify::{
    check_axiom, corroborate_theorems, find_group_manipulation, find_manipulation, search_manipulation, Axiom,
    SearchParams, Witness, BUDGET_ENV,
};
use sccheck::{ExtensionKind, MarginMatrix, Outcome, Profile, Rule, SweepConfig, Universe};

/// Set-valued voting rules and bounded axiom verification.
#[derive(Parser)]
#[command(name = "sccheck", version)]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Refuse sweeps estimated to need more rule evaluations than this.
    #[arg(long, global = true, env = BUDGET_ENV)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a rule on a profile.
    Eval {
        #[arg(long)]
        rule: Rule,
        #[arg(long)]
        profile: PathBuf,
    },
    /// Print the majority margins of a profile.
    Margins {
        #[arg(long)]
        profile: PathBuf,
        /// Emit a graph document instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Top cycle and dominant chain of a profile or graph.
    Tc {
        #[command(flatten)]
        source: Source,
    },
    /// Search a profile for a manipulation.
    Manipulate {
        #[arg(long)]
        rule: Rule,
        #[arg(long)]
        profile: PathBuf,
        #[arg(long, default_value = "fishburn")]
        extension: ExtensionKind,
        /// Search coalitions of up to this many voters (Fishburn only).
        #[arg(long)]
        group: Option<usize>,
    },
    /// Check axioms for one rule on a bounded universe.
    Axioms {
        #[arg(long)]
        rule: Rule,
        #[command(flatten)]
        universe: UniverseArgs,
        /// Axioms to check (default: the full suite).
        #[arg(long = "axiom", value_delimiter = ',')]
        axioms: Vec<Axiom>,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run the axiom suite on the whole catalog and check the characterization results.
    Sweep {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long = "axiom", value_delimiter = ',')]
        axioms: Vec<Axiom>,
        #[arg(long)]
        json: bool,
    },
    /// Build a profile realizing a weighted majority graph.
    Mcgarvey {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Randomized manipulation search for instances too large to enumerate.
    Search {
        #[arg(long)]
        rule: Rule,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rule evaluations to spend.
        #[arg(long = "evaluations", default_value_t = 10_000_000)]
        evaluations: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long)]
    profile: Option<PathBuf>,
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct UniverseArgs {
    #[arg(long)]
    m: usize,
    /// Largest electorate.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k_hom: usize,
    #[arg(long)]
    margin_cap: Option<u32>,
    /// Odd electorates only.
    #[arg(long)]
    odd_only: bool,
    /// One profile per multiset of ballots.
    #[arg(long)]
    canonical: bool,
}

impl UniverseArgs {
    fn universe(&self) -> Universe {
        let mut u = Universe::new(self.m, self.n).with_k_hom(self.k_hom);
        u.margin_cap = self.margin_cap;
        u.odd_only = self.odd_only;
        u.canonical = self.canonical;
        u
    }
}

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

const FOUND: u8 = 1;

fn read(path: &Path) -> Result<String, Box<dyn std::error::Error>> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_profile(path: &Path) -> Result<Profile, Box<dyn std::error::Error>> {
    parse_profile(&read(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn margin_table(g: &MarginMatrix) -> String {
    g.rows().iter().map(|r| r.iter().map(|v| format!("{v:>4}")).collect::<String>() + "\n").collect()
}

fn run(cli: Cli) -> CliResult {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    let config = cli.budget.map(SweepConfig::with_budget).unwrap_or_default();
    match cli.command {
        Command::Eval { rule, profile } => {
            let p = load_profile(&profile)?;
            println!("{}", rule.evaluate(&p)?.display(p.m()));
        }
        Command::Margins { profile, json } => {
            let g = MarginMatrix::of(&load_profile(&profile)?);
            if json {
                println!("{}", serialize_graph(&g));
            } else {
                print!("{}", margin_table(&g));
            }
        }
        Command::Tc { source } => {
            let (m, rel) = match (source.profile, source.graph) {
                (Some(path), _) => {
                    let p = load_profile(&path)?;
                    (p.m(), MarginMatrix::of(&p).relation())
                }
                (_, Some(path)) => {
                    let g = parse_graph(&read(&path)?)?;
                    (g.m(), g.target().relation())
                }
                _ => unreachable!("clap enforces one source"),
            };
            println!("top cycle: {}", top_cycle(&rel).display(m));
            let chain: Vec<String> = dominant_chain(&rel).iter().map(|s| s.display(m)).collect();
            println!("dominant chain: {}", chain.join(" < "));
        }
        Command::Manipulate { rule, profile, extension, group } => {
            let p = load_profile(&profile)?;
            let witness = match group {
                Some(k) => find_group_manipulation(rule, &p, k, &config)?.map(Witness::GroupManipulation),
                None => find_manipulation(rule, &p, extension)?.map(Witness::Manipulation),
            };
            let Some(w) = witness else {
                println!("no manipulation");
                return Ok(ExitCode::SUCCESS);
            };
            println!("{}", describe_witness(&w, p.m()));
            let after = &w.profiles()[1];
            print!("{}", serialize_profile(after));
            return Ok(ExitCode::from(FOUND));
        }
        Command::Axioms { rule, universe, axioms, json } => {
            let u = universe.universe();
            let axioms = if axioms.is_empty() { Axiom::suite() } else { axioms };
            let verdicts = axioms.iter().map(|&a| check_axiom(a, rule, &u, &config)).collect::<Result<Vec<_>, _>>()?;
            let report = serialize_report(&verdicts);
            if json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            if verdicts.iter().any(|v| v.outcome == Outcome::ViolatedWithWitness) {
                return Ok(ExitCode::from(FOUND));
            }
        }
        Command::Sweep { universe, axioms, json } => {
            let axioms = if axioms.is_empty() { Axiom::suite() } else { axioms };
            let report = corroborate_theorems(&universe.universe(), &axioms, &config)?;
            if json {
                println!("{}", theorem_report_json(&report));
            } else {
                print!("{}", render_theorem_report(&report));
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(FOUND));
            }
        }
        Command::Mcgarvey { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            print!("{}", serialize_profile(&realize(&g)));
        }
        Command::Search { rule, m, n, seed, evaluations } => {
            let out = search_manipulation(rule, &SearchParams::new(m, n, evaluations, seed))?;
            let Some(found) = out.manipulation else {
                println!("no manipulation in {} profiles ({} evaluations)", out.profiles_tried, out.evaluations);
                return Ok(ExitCode::SUCCESS);
            };
            let w = Witness::Manipulation(found);
            println!("{}", describe_witness(&w, m));
            print!("{}", serialize_profile(&w.profiles()[0]));
            return Ok(ExitCode::from(FOUND));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
