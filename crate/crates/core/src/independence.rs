//! Logical-independence harness: for each characterization, every listed
//! rule must pass its listed axioms on the family and fail its designated
//! axiom with a re-verified witness. A listed pass-axiom that fails is a
//! contradiction and is reported as such, never ignored.

use crate::axioms::{check_axiom, verify_witness, Axiom, AxiomVerdict, CheckError, Outcome};
use crate::family::GameFamily;
use crate::values::{UnionChoice, ValueRule, WeightScheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    T1,
    T2,
    T3,
}

impl Theorem {
    pub fn parse(name: &str) -> Option<Theorem> {
        match name.to_ascii_lowercase().as_str() {
            "t1" | "1" => Some(Theorem::T1),
            "t2" | "2" => Some(Theorem::T2),
            "t3" | "3" => Some(Theorem::T3),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Theorem::T1 => "t1",
            Theorem::T2 => "t2",
            Theorem::T3 => "t3",
        }
    }

    /// The axiom set of the characterization.
    pub fn axioms(&self) -> Vec<Axiom> {
        match self {
            Theorem::T1 => vec![
                Axiom::E,
                Axiom::A,
                Axiom::Swu,
                Axiom::MbuMinus,
                Axiom::Iag,
                Axiom::N,
            ],
            Theorem::T2 => vec![Axiom::E, Axiom::Swu, Axiom::MbuMinus, Axiom::IumPlus],
            Theorem::T3 => vec![Axiom::E, Axiom::UdmMd, Axiom::DmuMdMinus, Axiom::Npo],
        }
    }
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One independence row: the rule must pass every axiom in `pass` and fail
/// `fail`.
#[derive(Debug, Clone)]
pub struct SuiteRow {
    pub rule: ValueRule,
    pub pass: Vec<Axiom>,
    pub fail: Axiom,
}

fn row(rule: ValueRule, theorem: Theorem, fail: Axiom) -> SuiteRow {
    let pass = theorem
        .axioms()
        .into_iter()
        .filter(|a| *a != fail)
        .collect();
    SuiteRow { rule, pass, fail }
}

/// The rows of one characterization's independence table.
pub fn suite(theorem: Theorem) -> Vec<SuiteRow> {
    match theorem {
        Theorem::T1 => vec![
            row(ValueRule::Zero, theorem, Axiom::E),
            row(ValueRule::Se, theorem, Axiom::N),
            row(ValueRule::Phi1, theorem, Axiom::A),
            row(
                ValueRule::Phi2(WeightScheme::ByPlayerId),
                theorem,
                Axiom::Swu,
            ),
            row(ValueRule::Phi3, theorem, Axiom::Iag),
            row(ValueRule::OwenP, theorem, Axiom::MbuMinus),
        ],
        Theorem::T2 => vec![
            row(ValueRule::Zero, theorem, Axiom::E),
            row(
                ValueRule::Phi2(WeightScheme::ByPlayerId),
                theorem,
                Axiom::Swu,
            ),
            row(ValueRule::OwenP, theorem, Axiom::MbuMinus),
            row(ValueRule::Se, theorem, Axiom::IumPlus),
        ],
        Theorem::T3 => vec![
            row(ValueRule::Zero, theorem, Axiom::E),
            row(ValueRule::Phi4, theorem, Axiom::Npo),
            row(
                ValueRule::Phi5(UnionChoice::SmallestMember),
                theorem,
                Axiom::UdmMd,
            ),
            row(ValueRule::ShapleyBlind, theorem, Axiom::DmuMdMinus),
        ],
    }
}

/// Why a row failed to confirm.
#[derive(Debug, Clone)]
pub enum Problem {
    /// A listed pass-axiom produced a violation: either the rule or the
    /// listing is wrong, and the witness shows which equality broke.
    Contradiction { axiom: Axiom },
    /// A listed pass-axiom never had its hypothesis fire.
    VacuousPass { axiom: Axiom },
    /// The designated fail-axiom did not fail on the family.
    MissingViolation { axiom: Axiom, outcome: Outcome },
    /// The recorded witness did not survive re-verification.
    WitnessRejected { axiom: Axiom },
}

#[derive(Debug)]
pub struct RowReport {
    pub rule_name: String,
    pub pass_verdicts: Vec<AxiomVerdict>,
    pub fail_verdict: AxiomVerdict,
    pub confirmed: bool,
    pub problems: Vec<Problem>,
}

#[derive(Debug)]
pub struct IndependenceReport {
    pub theorem: Theorem,
    pub rows: Vec<RowReport>,
    pub all_confirmed: bool,
    /// True when some listed pass-axiom actually failed.
    pub contradiction: bool,
}

pub fn run_independence(
    theorem: Theorem,
    family: &GameFamily,
) -> Result<IndependenceReport, CheckError> {
    let mut rows = Vec::new();
    let mut all_confirmed = true;
    let mut contradiction = false;
    for r in suite(theorem) {
        let mut problems = Vec::new();
        let mut pass_verdicts = Vec::new();
        for axiom in &r.pass {
            let verdict = check_axiom(&r.rule, *axiom, family)?;
            match verdict.outcome {
                Outcome::PassOnFamily => {}
                Outcome::VacuousPass => problems.push(Problem::VacuousPass { axiom: *axiom }),
                Outcome::Fail => {
                    contradiction = true;
                    problems.push(Problem::Contradiction { axiom: *axiom });
                }
            }
            pass_verdicts.push(verdict);
        }
        let fail_verdict = check_axiom(&r.rule, r.fail, family)?;
        match fail_verdict.outcome {
            Outcome::Fail => {
                let witness = fail_verdict.witness.as_ref().expect("fail carries witness");
                if !verify_witness(&r.rule, r.fail, witness)? {
                    problems.push(Problem::WitnessRejected { axiom: r.fail });
                }
            }
            other => problems.push(Problem::MissingViolation {
                axiom: r.fail,
                outcome: other,
            }),
        }
        let confirmed = problems.is_empty();
        all_confirmed &= confirmed;
        rows.push(RowReport {
            rule_name: r.rule.name().to_owned(),
            pass_verdicts,
            fail_verdict,
            confirmed,
            problems,
        });
    }
    Ok(IndependenceReport {
        theorem,
        rows,
        all_confirmed,
        contradiction,
    })
}
