//! Report documents and their text rendering.
//!
//! Report bodies are deterministic: no timestamps, stable orderings, exact
//! rational strings everywhere. Re-running a command with the same seed must
//! reproduce the bytes.

use serde::Serialize;

use csgame::axioms::{AxiomVerdict, Witness};
use csgame::family::{FamilySpec, GameFamily};
use csgame::format::{to_canonical_string, to_doc, GameFileDoc};
use csgame::independence::{IndependenceReport, Problem};
use csgame::predicates::{
    are_mutually_dependent, is_necessary_player, is_null_player, unions_highly_mutually_dependent,
    unions_highly_symmetric, unions_mutually_dependent, unions_symmetric, PredicateError,
};
use csgame::rational::format_rational;
use csgame::values::{quotient_consistency, Allocation, ValueError, ValueRule};
use csgame::{Coalition, CsGame};

#[derive(Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

fn tool() -> ToolInfo {
    ToolInfo {
        name: "csgame",
        version: env!("CARGO_PKG_VERSION"),
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("report serializes");
    text.push('\n');
    text
}

fn ids(cs: &CsGame, c: Coalition) -> Vec<u32> {
    cs.game.members(c).iter().map(|p| p.0).collect()
}

// ---------------------------------------------------------------- eval

#[derive(Serialize)]
pub struct EvalDoc {
    pub tool: ToolInfo,
    pub players: Vec<u32>,
    pub structure: Vec<Vec<u32>>,
    pub allocations: Vec<AllocationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_consistency: Option<Eq5Doc>,
}

#[derive(Serialize)]
pub struct AllocationDoc {
    pub rule: String,
    pub payoffs: Vec<String>,
    pub total: String,
}

#[derive(Serialize)]
pub struct Eq5Doc {
    pub union_totals: Vec<String>,
    pub quotient_shapley: Vec<String>,
    pub holds: bool,
}

fn allocation_doc(rule: &ValueRule, alloc: &Allocation) -> AllocationDoc {
    AllocationDoc {
        rule: rule.name().to_owned(),
        payoffs: alloc.iter().map(|(_, x)| format_rational(x)).collect(),
        total: format_rational(&alloc.total()),
    }
}

pub fn eval_report(cs: &CsGame, rules: &[ValueRule], eq5: bool) -> Result<EvalDoc, ValueError> {
    let mut allocations = Vec::new();
    for rule in rules {
        let alloc = rule.evaluate(cs)?;
        allocations.push(allocation_doc(rule, &alloc));
    }
    let quotient = eq5.then(|| {
        let report = quotient_consistency(cs);
        Eq5Doc {
            union_totals: report.union_totals.iter().map(format_rational).collect(),
            quotient_shapley: report
                .quotient_shapley
                .iter()
                .map(format_rational)
                .collect(),
            holds: report.holds,
        }
    });
    let doc = to_doc(cs);
    Ok(EvalDoc {
        tool: tool(),
        players: doc.players,
        structure: doc.structure,
        allocations,
        quotient_consistency: quotient,
    })
}

pub fn eval_text(doc: &EvalDoc) -> String {
    let mut out = String::new();
    let players: Vec<String> = doc.players.iter().map(u32::to_string).collect();
    let structure: Vec<String> = doc
        .structure
        .iter()
        .map(|b| {
            format!(
                "{{{}}}",
                b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    out.push_str(&format!(
        "players: {}\nstructure: {}\n",
        players.join(" "),
        structure.join(" | ")
    ));
    let width = players.iter().map(|p| p.len()).max().unwrap_or(1).max(6);
    out.push_str(&format!("{:<14}", "rule"));
    for p in &players {
        out.push_str(&format!(" {p:>width$}"));
    }
    out.push_str("    total\n");
    for alloc in &doc.allocations {
        out.push_str(&format!("{:<14}", alloc.rule));
        for payoff in &alloc.payoffs {
            out.push_str(&format!(" {payoff:>width$}"));
        }
        out.push_str(&format!("    {}\n", alloc.total));
    }
    if let Some(eq5) = &doc.quotient_consistency {
        out.push_str(&format!(
            "owen union totals:   {}\nquotient shapley:    {}\nagreement: {}\n",
            eq5.union_totals.join(" "),
            eq5.quotient_shapley.join(" "),
            if eq5.holds { "exact" } else { "BROKEN" }
        ));
    }
    out
}

// ------------------------------------------------------------ dividends

#[derive(Serialize)]
pub struct DividendDoc {
    pub tool: ToolInfo,
    pub players: Vec<u32>,
    pub dividends: Vec<(String, String)>,
    pub support_size: usize,
}

pub fn dividend_report(cs: &CsGame) -> DividendDoc {
    let d = cs.game.dividends();
    let mut rows = Vec::new();
    for mask in 1..(1u32 << cs.n()) {
        let c = Coalition(mask);
        let value = d.get(c);
        if !num::Zero::is_zero(value) {
            let key: Vec<String> = ids(cs, c).iter().map(u32::to_string).collect();
            rows.push((key.join(","), format_rational(value)));
        }
    }
    DividendDoc {
        tool: tool(),
        players: cs.game.roster().iter().map(|p| p.0).collect(),
        support_size: rows.len(),
        dividends: rows,
    }
}

pub fn dividends_text(doc: &DividendDoc) -> String {
    let mut out = format!(
        "players: {}\nsupport: {} coalition(s)\n",
        doc.players
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        doc.support_size
    );
    for (key, value) in &doc.dividends {
        out.push_str(&format!("  {{{key}}}: {value}\n"));
    }
    out
}

// -------------------------------------------------------------- inspect

#[derive(Serialize)]
pub struct InspectDoc {
    pub tool: ToolInfo,
    pub players: Vec<u32>,
    pub structure: Vec<Vec<u32>>,
    pub dividend_support: Vec<String>,
    pub null_players: Vec<u32>,
    pub necessary_players: Vec<u32>,
    pub mutually_dependent_pairs: Vec<(u32, u32)>,
    pub union_relations: Vec<UnionPairDoc>,
}

#[derive(Serialize)]
pub struct UnionPairDoc {
    pub unions: (Vec<u32>, Vec<u32>),
    pub symmetric: bool,
    pub mutually_dependent: bool,
    pub highly_mutually_dependent: bool,
    pub highly_symmetric: bool,
}

pub fn inspect_report(cs: &CsGame) -> Result<InspectDoc, PredicateError> {
    let doc = to_doc(cs);
    let d = cs.game.dividends();
    let dividend_support = d
        .support()
        .iter()
        .map(|&c| {
            format!(
                "{{{}}}",
                ids(cs, c)
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    let mut null_players = Vec::new();
    let mut necessary_players = Vec::new();
    for &id in cs.game.roster() {
        if is_null_player(&cs.game, id)?.holds {
            null_players.push(id.0);
        }
        if is_necessary_player(&cs.game, id)?.holds {
            necessary_players.push(id.0);
        }
    }
    let roster = cs.game.roster();
    let mut mutually_dependent_pairs = Vec::new();
    for a in 0..roster.len() {
        for b in a + 1..roster.len() {
            if are_mutually_dependent(&cs.game, roster[a], roster[b])?.holds {
                mutually_dependent_pairs.push((roster[a].0, roster[b].0));
            }
        }
    }
    let mut union_relations = Vec::new();
    for p in 0..cs.m() {
        for q in p + 1..cs.m() {
            union_relations.push(UnionPairDoc {
                unions: (
                    ids(cs, cs.structure.blocks()[p]),
                    ids(cs, cs.structure.blocks()[q]),
                ),
                symmetric: unions_symmetric(cs, p, q)?.holds,
                mutually_dependent: unions_mutually_dependent(cs, p, q)?.holds,
                highly_mutually_dependent: unions_highly_mutually_dependent(cs, p, q)?.holds,
                highly_symmetric: unions_highly_symmetric(cs, p, q)?.holds,
            });
        }
    }
    Ok(InspectDoc {
        tool: tool(),
        players: doc.players,
        structure: doc.structure,
        dividend_support,
        null_players,
        necessary_players,
        mutually_dependent_pairs,
        union_relations,
    })
}

pub fn inspect_text(doc: &InspectDoc) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "players: {}\nstructure: {}\n",
        doc.players
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        doc.structure
            .iter()
            .map(|b| format!(
                "{{{}}}",
                b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            ))
            .collect::<Vec<_>>()
            .join(" | ")
    ));
    out.push_str(&format!(
        "dividend support: {}\n",
        if doc.dividend_support.is_empty() {
            "(empty)".to_owned()
        } else {
            doc.dividend_support.join(" ")
        }
    ));
    let list = |items: &[u32]| {
        if items.is_empty() {
            "(none)".to_owned()
        } else {
            items
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        }
    };
    out.push_str(&format!("null players: {}\n", list(&doc.null_players)));
    out.push_str(&format!(
        "necessary players: {}\n",
        list(&doc.necessary_players)
    ));
    let pairs = if doc.mutually_dependent_pairs.is_empty() {
        "(none)".to_owned()
    } else {
        doc.mutually_dependent_pairs
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&format!("mutually dependent pairs: {pairs}\n"));
    for rel in &doc.union_relations {
        let fmt_block = |b: &Vec<u32>| {
            format!(
                "{{{}}}",
                b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            )
        };
        out.push_str(&format!(
            "unions {} vs {}: symmetric={} mutually-dependent={} highly-mutually-dependent={} highly-symmetric={}\n",
            fmt_block(&rel.unions.0),
            fmt_block(&rel.unions.1),
            rel.symmetric,
            rel.mutually_dependent,
            rel.highly_mutually_dependent,
            rel.highly_symmetric
        ));
    }
    out
}

// ---------------------------------------------------------------- check

#[derive(Serialize)]
pub struct WitnessDoc {
    pub games: Vec<GameFileDoc>,
    pub players: Vec<u32>,
    pub unions: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removed_player: Option<u32>,
    pub equation: String,
    pub lhs: String,
    pub rhs: String,
    pub reverified: bool,
}

pub fn witness_doc(witness: &Witness, reverified: bool) -> WitnessDoc {
    let reference = &witness.games[0];
    WitnessDoc {
        games: witness.games.iter().map(to_doc).collect(),
        players: witness.players.iter().map(|p| p.0).collect(),
        unions: witness
            .unions
            .iter()
            .map(|&p| ids(reference, reference.structure.blocks()[p]))
            .collect(),
        removed_player: witness.removed.map(|p| p.0),
        equation: witness.equation.to_owned(),
        lhs: format_rational(&witness.lhs),
        rhs: format_rational(&witness.rhs),
        reverified,
    }
}

#[derive(Serialize)]
pub struct VerdictDoc {
    pub rule: String,
    pub axiom: String,
    pub outcome: String,
    pub hypothesis_hits: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

pub fn verdict_doc(verdict: &AxiomVerdict, reverified: Option<bool>) -> VerdictDoc {
    VerdictDoc {
        rule: verdict.rule.clone(),
        axiom: verdict.axiom.name().to_owned(),
        outcome: verdict.outcome.name().to_owned(),
        hypothesis_hits: verdict.hypothesis_hits,
        witness: verdict
            .witness
            .as_ref()
            .map(|w| witness_doc(w, reverified.unwrap_or(false))),
    }
}

#[derive(Serialize)]
pub struct CheckDoc {
    pub tool: ToolInfo,
    pub seed: u64,
    pub family: String,
    pub results: Vec<VerdictDoc>,
}

pub fn check_report(
    spec: &FamilySpec,
    family: &GameFamily,
    verdict: &AxiomVerdict,
    reverified: Option<bool>,
) -> CheckDoc {
    CheckDoc {
        tool: tool(),
        seed: spec.seed,
        family: family.description.clone(),
        results: vec![verdict_doc(verdict, reverified)],
    }
}

fn witness_text(doc: &WitnessDoc, indent: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{indent}violated: {}  (lhs {} vs rhs {}; reverified {})\n",
        doc.equation, doc.lhs, doc.rhs, doc.reverified
    ));
    if !doc.players.is_empty() {
        out.push_str(&format!(
            "{indent}players: {}\n",
            doc.players
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    if let Some(removed) = doc.removed_player {
        out.push_str(&format!("{indent}removed player: {removed}\n"));
    }
    if !doc.unions.is_empty() {
        out.push_str(&format!(
            "{indent}unions: {}\n",
            doc.unions
                .iter()
                .map(|b| format!(
                    "{{{}}}",
                    b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                ))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    for (k, game) in doc.games.iter().enumerate() {
        let worths = game
            .worths
            .as_ref()
            .map(|w| {
                w.iter()
                    .map(|(key, value)| format!("{{{key}}}={value}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_default();
        let structure = game
            .structure
            .iter()
            .map(|b| {
                format!(
                    "{{{}}}",
                    b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                )
            })
            .collect::<Vec<_>>()
            .join(" | ");
        out.push_str(&format!(
            "{indent}game {}: structure {structure}; worths {}\n",
            k + 1,
            if worths.is_empty() {
                "(all zero)"
            } else {
                &worths
            }
        ));
    }
    out
}

pub fn check_text(doc: &CheckDoc) -> String {
    let mut out = format!("family: {}\nseed: {}\n", doc.family, doc.seed);
    for v in &doc.results {
        out.push_str(&format!(
            "{} / {}: {} (hypothesis hits {})\n",
            v.rule, v.axiom, v.outcome, v.hypothesis_hits
        ));
        if let Some(w) = &v.witness {
            out.push_str(&witness_text(w, "  "));
        }
    }
    out
}

// --------------------------------------------------------- independence

#[derive(Serialize)]
pub struct IndependenceDoc {
    pub tool: ToolInfo,
    pub theorem: String,
    pub seed: u64,
    pub family: String,
    pub rows: Vec<RowDoc>,
    pub all_confirmed: bool,
    pub contradiction: bool,
}

#[derive(Serialize)]
pub struct RowDoc {
    pub rule: String,
    pub expected_fail: String,
    pub confirmed: bool,
    pub pass_results: Vec<VerdictDoc>,
    pub fail_result: VerdictDoc,
    pub problems: Vec<String>,
}

fn problem_text(problem: &Problem) -> String {
    match problem {
        Problem::Contradiction { axiom } => {
            format!("contradiction: expected pass on `{axiom}` but found a violation")
        }
        Problem::VacuousPass { axiom } => {
            format!("hypothesis for `{axiom}` never fired on the family")
        }
        Problem::MissingViolation { axiom, outcome } => format!(
            "expected a violation of `{axiom}` but the check came back {}",
            outcome.name()
        ),
        Problem::WitnessRejected { axiom } => {
            format!("witness for `{axiom}` failed re-verification")
        }
    }
}

pub fn independence_report(
    spec: &FamilySpec,
    family: &GameFamily,
    report: &IndependenceReport,
) -> IndependenceDoc {
    // witnesses embedded in the report are re-verified here, including the
    // ones behind contradiction outcomes
    let suite_rows = csgame::independence::suite(report.theorem);
    let rows = report
        .rows
        .iter()
        .zip(&suite_rows)
        .map(|(row, suite_row)| {
            let reverify = |verdict: &AxiomVerdict| {
                verdict.witness.as_ref().map(|w| {
                    csgame::axioms::verify_witness(&suite_row.rule, verdict.axiom, w)
                        .unwrap_or(false)
                })
            };
            RowDoc {
                rule: row.rule_name.clone(),
                expected_fail: row.fail_verdict.axiom.name().to_owned(),
                confirmed: row.confirmed,
                pass_results: row
                    .pass_verdicts
                    .iter()
                    .map(|v| verdict_doc(v, reverify(v)))
                    .collect(),
                fail_result: verdict_doc(&row.fail_verdict, reverify(&row.fail_verdict)),
                problems: row.problems.iter().map(problem_text).collect(),
            }
        })
        .collect();
    IndependenceDoc {
        tool: tool(),
        theorem: report.theorem.name().to_owned(),
        seed: spec.seed,
        family: family.description.clone(),
        rows,
        all_confirmed: report.all_confirmed,
        contradiction: report.contradiction,
    }
}

pub fn independence_text(doc: &IndependenceDoc) -> String {
    let mut out = format!(
        "theorem: {}\nfamily: {}\nseed: {}\n",
        doc.theorem, doc.family, doc.seed
    );
    for row in &doc.rows {
        out.push_str(&format!(
            "rule {:<14} expected-fail {:<13} {}\n",
            row.rule,
            row.expected_fail,
            if row.confirmed {
                "CONFIRMED"
            } else {
                "UNCONFIRMED"
            }
        ));
        for v in &row.pass_results {
            out.push_str(&format!(
                "  pass {:<13} {} (hits {})\n",
                v.axiom, v.outcome, v.hypothesis_hits
            ));
        }
        out.push_str(&format!(
            "  fail {:<13} {} (hits {})\n",
            row.fail_result.axiom, row.fail_result.outcome, row.fail_result.hypothesis_hits
        ));
        if let Some(w) = &row.fail_result.witness {
            out.push_str(&witness_text(w, "    "));
        }
        for p in &row.problems {
            out.push_str(&format!("  problem: {p}\n"));
        }
    }
    out.push_str(&format!(
        "result: {}\n",
        if doc.all_confirmed {
            "all rows confirmed"
        } else if doc.contradiction {
            "CONTRADICTION"
        } else {
            "unconfirmed rows present"
        }
    ));
    out
}

/// Writes each witness game to `<dir>/witness-<rule>-<axiom>[-k].json`.
pub fn persist_witness(
    dir: &str,
    rule: &str,
    axiom: &str,
    witness: &Witness,
) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (k, game) in witness.games.iter().enumerate() {
        let suffix = if witness.games.len() > 1 {
            format!("-{}", k + 1)
        } else {
            String::new()
        };
        let path = format!("{dir}/witness-{rule}-{axiom}{suffix}.json");
        std::fs::write(path, to_canonical_string(&to_doc(game)))?;
    }
    Ok(())
}
