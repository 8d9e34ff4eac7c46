//! `csgame` command line: evaluate allocation rules on game files, inspect
//! dividends and relations, run axiom checks and independence suites.
//!
//! Exit status: 0 when every expectation is met, 1 when an expected outcome
//! is missing, 2 on usage or parse errors, 3 when an independence suite hits
//! a contradiction (a listed pass-axiom actually fails).

mod report;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use csgame::axioms::{check_axiom, verify_witness, Axiom, Outcome};
use csgame::family::{generate_family, FamilySpec};
use csgame::format::parse_game_file;
use csgame::independence::{run_independence, Theorem};
use csgame::rational::parse_rational;
use csgame::values::{UnionChoice, ValueRule, WeightScheme};

const EXIT_UNMET: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CONTRADICTION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "csgame",
    version,
    about = "Exact cooperative-game calculator with coalition structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Args)]
struct FamilyArgs {
    /// Seed for the deterministic family (default: $CSGAME_SEED or 42).
    #[arg(long)]
    seed: Option<u64>,
    /// Largest roster in the generated family.
    #[arg(long, default_value_t = 4)]
    family_n: usize,
    /// Comma-separated dividend values for enumeration and sampling.
    #[arg(long, default_value = "-1,0,1,2")]
    family_dividends: String,
    /// Number of seeded random games.
    #[arg(long, default_value_t = 600)]
    family_samples: usize,
}

impl FamilyArgs {
    fn to_spec(&self) -> anyhow::Result<FamilySpec> {
        let seed = match self.seed {
            Some(s) => s,
            None => match std::env::var("CSGAME_SEED") {
                Ok(text) => text
                    .parse()
                    .map_err(|_| anyhow::anyhow!("CSGAME_SEED must be an integer"))?,
                Err(_) => 42,
            },
        };
        let dividend_values = self
            .family_dividends
            .split(',')
            .map(|part| parse_rational(part).map_err(anyhow::Error::from))
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(FamilySpec {
            max_players: self.family_n,
            dividend_values,
            samples: self.family_samples,
            seed,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate allocation rules on a game file.
    Eval {
        file: String,
        /// Rule names: owen, owen-marginal, shapley, shapley-blind, se,
        /// phi1..phi5, owen-p, zero.
        rules: Vec<String>,
        /// Also print per-union totals of the Owen value against the
        /// Shapley value of the quotient game.
        #[arg(long)]
        eq5: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the dividend table and its support.
    Dividends {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Summarize player and union relations of a game file.
    Inspect {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check one axiom for one rule over the generated family.
    Check {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        axiom: String,
        /// Outcome that counts as success for the exit status.
        #[arg(long, value_enum, default_value_t = Expect::Pass)]
        expect: Expect,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Persist any witness games as game files under this directory.
        #[arg(long)]
        witness_dir: Option<String>,
    },
    /// Run one characterization's independence suite.
    Independence {
        /// t1, t2 or t3.
        theorem: String,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Persist witness games as game files under this directory.
        #[arg(long)]
        witness_dir: Option<String>,
    },
}

fn usage_error(message: String) -> ExitCode {
    let _ = writeln!(std::io::stderr(), "error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn load_game(path: &str) -> Result<(csgame::CsGame, csgame::GameFileParams), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))?;
    parse_game_file(&text).map_err(|e| format!("cannot parse `{path}`: {e}"))
}

fn resolve_rule(name: &str, params: &csgame::GameFileParams) -> Result<ValueRule, String> {
    let mut rule = ValueRule::parse(name).map_err(|e| e.to_string())?;
    match &mut rule {
        ValueRule::Phi2(scheme) => match &params.weights {
            Some(w) => *scheme = WeightScheme::Explicit(w.clone()),
            None => return Err("rule phi2 needs a weights block in the game file".to_owned()),
        },
        ValueRule::Phi5(choice) => {
            if let Some(p) = params.distinguished_union {
                *choice = UnionChoice::Index(p);
            }
        }
        _ => {}
    }
    Ok(rule)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval {
            file,
            rules,
            eq5,
            format,
        } => {
            let (cs, params) = match load_game(&file) {
                Ok(x) => x,
                Err(e) => return usage_error(e),
            };
            if rules.is_empty() {
                return usage_error("eval needs at least one rule name".to_owned());
            }
            let mut resolved = Vec::new();
            for name in &rules {
                match resolve_rule(name, &params) {
                    Ok(rule) => resolved.push(rule),
                    Err(e) => return usage_error(e),
                }
            }
            match report::eval_report(&cs, &resolved, eq5) {
                Ok(doc) => {
                    print!(
                        "{}",
                        match format {
                            Format::Text => report::eval_text(&doc),
                            Format::Structured => report::to_json(&doc),
                        }
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e.to_string()),
            }
        }
        Command::Dividends { file, format } => {
            let (cs, _) = match load_game(&file) {
                Ok(x) => x,
                Err(e) => return usage_error(e),
            };
            let doc = report::dividend_report(&cs);
            print!(
                "{}",
                match format {
                    Format::Text => report::dividends_text(&doc),
                    Format::Structured => report::to_json(&doc),
                }
            );
            ExitCode::SUCCESS
        }
        Command::Inspect { file, format } => {
            let (cs, _) = match load_game(&file) {
                Ok(x) => x,
                Err(e) => return usage_error(e),
            };
            match report::inspect_report(&cs) {
                Ok(doc) => {
                    print!(
                        "{}",
                        match format {
                            Format::Text => report::inspect_text(&doc),
                            Format::Structured => report::to_json(&doc),
                        }
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e.to_string()),
            }
        }
        Command::Check {
            rule,
            axiom,
            expect,
            family,
            format,
            witness_dir,
        } => {
            let rule = match ValueRule::parse(&rule) {
                Ok(r) => r,
                Err(e) => return usage_error(e.to_string()),
            };
            let axiom = match Axiom::parse(&axiom) {
                Some(a) => a,
                None => return usage_error(format!("unknown axiom `{axiom}`")),
            };
            let spec = match family.to_spec() {
                Ok(s) => s,
                Err(e) => return usage_error(e.to_string()),
            };
            let family = match generate_family(&spec) {
                Ok(f) => f,
                Err(e) => return usage_error(e.to_string()),
            };
            let verdict = match check_axiom(&rule, axiom, &family) {
                Ok(v) => v,
                Err(e) => return usage_error(e.to_string()),
            };
            let reverified = match &verdict.witness {
                Some(w) => match verify_witness(&rule, axiom, w) {
                    Ok(ok) => Some(ok),
                    Err(e) => return usage_error(e.to_string()),
                },
                None => None,
            };
            if let (Some(dir), Some(w)) = (&witness_dir, &verdict.witness) {
                if let Err(e) = report::persist_witness(dir, &verdict.rule, axiom.name(), w) {
                    return usage_error(e.to_string());
                }
            }
            let doc = report::check_report(&spec, &family, &verdict, reverified);
            print!(
                "{}",
                match format {
                    Format::Text => report::check_text(&doc),
                    Format::Structured => report::to_json(&doc),
                }
            );
            let met = match expect {
                Expect::Pass => verdict.outcome == Outcome::PassOnFamily,
                Expect::Fail => verdict.outcome == Outcome::Fail && reverified == Some(true),
                Expect::Vacuous => verdict.outcome == Outcome::VacuousPass,
            };
            if met {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_UNMET)
            }
        }
        Command::Independence {
            theorem,
            family,
            format,
            witness_dir,
        } => {
            let theorem = match Theorem::parse(&theorem) {
                Some(t) => t,
                None => return usage_error(format!("unknown theorem `{theorem}`")),
            };
            let spec = match family.to_spec() {
                Ok(s) => s,
                Err(e) => return usage_error(e.to_string()),
            };
            let family = match generate_family(&spec) {
                Ok(f) => f,
                Err(e) => return usage_error(e.to_string()),
            };
            let outcome = match run_independence(theorem, &family) {
                Ok(r) => r,
                Err(e) => return usage_error(e.to_string()),
            };
            if let Some(dir) = &witness_dir {
                for row in &outcome.rows {
                    if let Some(w) = &row.fail_verdict.witness {
                        if let Err(e) = report::persist_witness(
                            dir,
                            &row.rule_name,
                            row.fail_verdict.axiom.name(),
                            w,
                        ) {
                            return usage_error(e.to_string());
                        }
                    }
                }
            }
            let doc = report::independence_report(&spec, &family, &outcome);
            print!(
                "{}",
                match format {
                    Format::Text => report::independence_text(&doc),
                    Format::Structured => report::to_json(&doc),
                }
            );
            if outcome.contradiction {
                ExitCode::from(EXIT_CONTRADICTION)
            } else if outcome.all_confirmed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_UNMET)
            }
        }
    }
}
