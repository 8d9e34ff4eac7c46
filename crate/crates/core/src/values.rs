//! Allocation rules on CS-games, all exact.
//!
//! The Owen value has two independent routes: the dividend-sharing sum
//! ([`owen`]) and the double marginal average over union orders and
//! intra-union orders ([`owen_by_marginals`]). They must agree on every
//! input, which the acceptance suite sweeps.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use crate::game::{Coalition, Game, GameError, PlayerId};
use crate::predicates::{is_null_player, PredicateError};
use crate::structure::{CsGame, StructureError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValueError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
    #[error("weight for player {0} must be strictly positive")]
    NonPositiveWeight(u32),
    #[error("weights must cover exactly the roster; player {0} is unmatched")]
    WeightRosterMismatch(u32),
    #[error("distinguished union index {0} out of range")]
    BadDistinguishedUnion(usize),
    #[error("unknown rule name `{0}`")]
    UnknownRule(String),
}

/// Exact payoff vector keyed by player id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Allocation {
    players: Vec<PlayerId>,
    payoff: Vec<BigRational>,
}

impl Allocation {
    pub fn new(players: Vec<PlayerId>, payoff: Vec<BigRational>) -> Allocation {
        debug_assert_eq!(players.len(), payoff.len());
        Allocation { players, payoff }
    }

    pub fn zero(players: Vec<PlayerId>) -> Allocation {
        let payoff = vec![BigRational::zero(); players.len()];
        Allocation { players, payoff }
    }

    pub fn players(&self) -> &[PlayerId] {
        &self.players
    }

    pub fn get(&self, id: PlayerId) -> Option<&BigRational> {
        self.players
            .binary_search(&id)
            .ok()
            .map(|pos| &self.payoff[pos])
    }

    pub fn at(&self, pos: usize) -> &BigRational {
        &self.payoff[pos]
    }

    pub fn iter(&self) -> impl Iterator<Item = (PlayerId, &BigRational)> {
        self.players.iter().copied().zip(self.payoff.iter())
    }

    pub fn total(&self) -> BigRational {
        self.payoff.iter().sum()
    }

    /// Sum of payoffs over the members of one union.
    pub fn block_total(&self, block: Coalition) -> BigRational {
        block.positions().map(|p| &self.payoff[p]).sum()
    }
}

/// Strictly positive exogenous weights, one per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights(BTreeMap<u32, BigRational>);

impl Weights {
    pub fn new(entries: BTreeMap<u32, BigRational>) -> Result<Weights, ValueError> {
        for (id, w) in &entries {
            if !w.is_positive() {
                return Err(ValueError::NonPositiveWeight(*id));
            }
        }
        Ok(Weights(entries))
    }

    pub fn get(&self, id: PlayerId) -> Option<&BigRational> {
        self.0.get(&id.0)
    }

    pub fn entries(&self) -> &BTreeMap<u32, BigRational> {
        &self.0
    }

    fn resolve(&self, roster: &[PlayerId]) -> Result<Vec<BigRational>, ValueError> {
        if self.0.len() != roster.len() {
            let unmatched = roster
                .iter()
                .find(|p| !self.0.contains_key(&p.0))
                .map(|p| p.0)
                .or_else(|| {
                    self.0
                        .keys()
                        .find(|id| roster.binary_search(&PlayerId(**id)).is_err())
                        .copied()
                })
                .unwrap_or(0);
            return Err(ValueError::WeightRosterMismatch(unmatched));
        }
        roster
            .iter()
            .map(|p| {
                self.0
                    .get(&p.0)
                    .cloned()
                    .ok_or(ValueError::WeightRosterMismatch(p.0))
            })
            .collect()
    }
}

/// How the weighted rule obtains its weights on an arbitrary roster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightScheme {
    /// Every player weighs 1; collapses to the Owen value.
    Equal,
    /// `w_i = id + 1`: unequal, deterministic, stable under restriction.
    ByPlayerId,
    /// Explicit table; must cover exactly the roster it is applied to.
    Explicit(Weights),
}

impl WeightScheme {
    fn resolve(&self, roster: &[PlayerId]) -> Result<Vec<BigRational>, ValueError> {
        match self {
            WeightScheme::Equal => Ok(vec![BigRational::one(); roster.len()]),
            WeightScheme::ByPlayerId => Ok(roster
                .iter()
                .map(|p| BigRational::from_integer(BigInt::from(p.0 + 1)))
                .collect()),
            WeightScheme::Explicit(w) => w.resolve(roster),
        }
    }
}

/// Which union plays the distinguished role in the branching correction rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionChoice {
    /// The union containing the smallest player id.
    SmallestMember,
    /// A fixed union index into the canonical block order.
    Index(usize),
}

impl UnionChoice {
    fn resolve(&self, cs: &CsGame) -> Result<usize, ValueError> {
        match self {
            UnionChoice::SmallestMember => Ok(cs.structure.block_of(0)),
            UnionChoice::Index(p) => {
                if *p < cs.m() {
                    Ok(*p)
                } else {
                    Err(ValueError::BadDistinguishedUnion(*p))
                }
            }
        }
    }
}

/// Shapley value through dividend sharing: each coalition's dividend is
/// split equally among its members.
pub fn shapley(game: &Game) -> Allocation {
    let d = game.dividends();
    let n = game.n();
    let mut payoff = vec![BigRational::zero(); n];
    for mask in 1..(1u32 << n) {
        let t = Coalition(mask);
        let dividend = d.get(t);
        if dividend.is_zero() {
            continue;
        }
        let share = dividend / BigRational::from_integer(BigInt::from(t.len()));
        for pos in t.positions() {
            payoff[pos] += &share;
        }
    }
    Allocation::new(game.roster().to_vec(), payoff)
}

/// Owen value by dividend sharing: the dividend of `T` is split first over
/// the unions `T` touches, then equally inside `B(i) ∩ T`.
pub fn owen(cs: &CsGame) -> Allocation {
    let d = cs.game.dividends();
    let n = cs.n();
    let mut payoff = vec![BigRational::zero(); n];
    for mask in 1..(1u32 << n) {
        let t = Coalition(mask);
        let dividend = d.get(t);
        if dividend.is_zero() {
            continue;
        }
        let m_t = BigInt::from(cs.structure.meeting_count(t));
        for pos in t.positions() {
            let block = cs.structure.blocks()[cs.structure.block_of(pos)];
            let in_block = BigInt::from(block.intersect(t).len());
            payoff[pos] += dividend / BigRational::from_integer(&in_block * &m_t);
        }
    }
    Allocation::new(cs.game.roster().to_vec(), payoff)
}

fn factorial(k: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=k {
        out *= BigInt::from(i);
    }
    out
}

/// Owen value by the marginal-contribution average: orders over unions and
/// over the player's own union, weighting the marginal contribution to
/// `Q(R) ∪ S`.
pub fn owen_by_marginals(cs: &CsGame) -> Allocation {
    let n = cs.n();
    let m = cs.m();
    let m_fact = factorial(m);
    let mut payoff = vec![BigRational::zero(); n];
    for h in 0..m {
        let block = cs.structure.blocks()[h];
        let b_len = block.len();
        let b_fact = factorial(b_len);
        let foreign: Vec<Coalition> = cs
            .structure
            .blocks()
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != h)
            .map(|(_, &b)| b)
            .collect();
        for pos in block.positions() {
            let own = block.remove(pos);
            let mut acc = BigRational::zero();
            for rbits in 0..(1u32 << foreign.len()) {
                let mut q = Coalition::EMPTY;
                let mut r_len = 0usize;
                for (k, &b) in foreign.iter().enumerate() {
                    if rbits & (1 << k) != 0 {
                        q = q.union(b);
                        r_len += 1;
                    }
                }
                let union_coeff =
                    BigRational::new(factorial(r_len) * factorial(m - r_len - 1), m_fact.clone());
                for s in own.subsets() {
                    let player_coeff = BigRational::new(
                        factorial(s.len()) * factorial(b_len - s.len() - 1),
                        b_fact.clone(),
                    );
                    acc += &union_coeff * player_coeff * cs.game.marginal(pos, q.union(s));
                }
            }
            payoff[pos] = acc;
        }
    }
    Allocation::new(cs.game.roster().to_vec(), payoff)
}

/// Union-egalitarian rule: every coalition's dividend is shared over the
/// unions it touches and then split equally among *all* members of the
/// union, null or not.
pub fn se_value(cs: &CsGame) -> Allocation {
    let d = cs.game.dividends();
    let n = cs.n();
    let mut payoff = vec![BigRational::zero(); n];
    for mask in 1..(1u32 << n) {
        let t = Coalition(mask);
        let dividend = d.get(t);
        if dividend.is_zero() {
            continue;
        }
        let m_t = BigInt::from(cs.structure.meeting_count(t));
        for (_, &block) in cs
            .structure
            .blocks()
            .iter()
            .enumerate()
            .filter(|(_, &b)| b.intersects(t))
        {
            let share = dividend / BigRational::from_integer(BigInt::from(block.len()) * &m_t);
            for pos in block.positions() {
                payoff[pos] += &share;
            }
        }
    }
    Allocation::new(cs.game.roster().to_vec(), payoff)
}

/// Under the all-singleton structure, splits the grand worth equally over
/// the non-null players (zero vector when everyone is null); otherwise the
/// Owen value.
pub fn phi1(cs: &CsGame) -> Result<Allocation, ValueError> {
    if cs.m() != cs.n() {
        return Ok(owen(cs));
    }
    let roster = cs.game.roster().to_vec();
    let mut null_flags = Vec::with_capacity(roster.len());
    for &id in &roster {
        null_flags.push(is_null_player(&cs.game, id)?.holds);
    }
    let productive = null_flags.iter().filter(|f| !**f).count();
    if productive == 0 {
        return Ok(Allocation::zero(roster));
    }
    let share = cs.game.grand_worth() / BigRational::from_integer(BigInt::from(productive));
    let payoff = null_flags
        .iter()
        .map(|&is_null| {
            if is_null {
                BigRational::zero()
            } else {
                share.clone()
            }
        })
        .collect();
    Ok(Allocation::new(roster, payoff))
}

/// Weighted variant of the Owen value: inside `B(i) ∩ T` the dividend share
/// is proportional to the exogenous weights.
pub fn phi2(cs: &CsGame, scheme: &WeightScheme) -> Result<Allocation, ValueError> {
    let weights = scheme.resolve(cs.game.roster())?;
    let d = cs.game.dividends();
    let n = cs.n();
    let mut payoff = vec![BigRational::zero(); n];
    for mask in 1..(1u32 << n) {
        let t = Coalition(mask);
        let dividend = d.get(t);
        if dividend.is_zero() {
            continue;
        }
        let m_t = BigRational::from_integer(BigInt::from(cs.structure.meeting_count(t)));
        for pos in t.positions() {
            let block = cs.structure.blocks()[cs.structure.block_of(pos)];
            let weight_sum: BigRational = block
                .intersect(t)
                .positions()
                .map(|p| weights[p].clone())
                .sum();
            payoff[pos] += &weights[pos] * dividend / (weight_sum * &m_t);
        }
    }
    Ok(Allocation::new(cs.game.roster().to_vec(), payoff))
}

/// On structures whose unions all have the same size, shares each dividend
/// proportionally to union sizes over the members of `T`; otherwise the Owen
/// value.
pub fn phi3(cs: &CsGame) -> Allocation {
    let sizes: Vec<usize> = cs.structure.blocks().iter().map(|b| b.len()).collect();
    let equal_sized = sizes.windows(2).all(|w| w[0] == w[1]);
    if !equal_sized {
        return owen(cs);
    }
    let d = cs.game.dividends();
    let n = cs.n();
    let mut payoff = vec![BigRational::zero(); n];
    for mask in 1..(1u32 << n) {
        let t = Coalition(mask);
        let dividend = d.get(t);
        if dividend.is_zero() {
            continue;
        }
        let size_sum: BigInt = t
            .positions()
            .map(|p| BigInt::from(sizes[cs.structure.block_of(p)]))
            .sum();
        for pos in t.positions() {
            let own = BigInt::from(sizes[cs.structure.block_of(pos)]);
            payoff[pos] += dividend * BigRational::new(own, size_sum.clone());
        }
    }
    Allocation::new(cs.game.roster().to_vec(), payoff)
}

/// Proportional-to-union-size variant: the dividend of `T` is shared over
/// the touched unions proportionally to their full sizes.
pub fn owen_p(cs: &CsGame) -> Allocation {
    let d = cs.game.dividends();
    let n = cs.n();
    let mut payoff = vec![BigRational::zero(); n];
    for mask in 1..(1u32 << n) {
        let t = Coalition(mask);
        let dividend = d.get(t);
        if dividend.is_zero() {
            continue;
        }
        let touched_size: BigInt = cs
            .structure
            .blocks()
            .iter()
            .filter(|b| b.intersects(t))
            .map(|b| BigInt::from(b.len()))
            .sum();
        for pos in t.positions() {
            let block = cs.structure.blocks()[cs.structure.block_of(pos)];
            let own = BigInt::from(block.len());
            let in_block = BigInt::from(block.intersect(t).len());
            payoff[pos] += dividend * BigRational::new(own, in_block * touched_size.clone());
        }
    }
    Allocation::new(cs.game.roster().to_vec(), payoff)
}

fn singleton_worth(game: &Game, pos: usize) -> BigRational {
    game.worth(Coalition::singleton(pos)).clone()
}

/// Owen value with singleton worths re-averaged inside each union.
pub fn phi4(cs: &CsGame) -> Allocation {
    let base = owen(cs);
    let n = cs.n();
    let mut payoff = Vec::with_capacity(n);
    for pos in 0..n {
        let block = cs.structure.blocks()[cs.structure.block_of(pos)];
        let avg: BigRational = block
            .positions()
            .map(|p| singleton_worth(&cs.game, p))
            .sum::<BigRational>()
            / BigRational::from_integer(BigInt::from(block.len()));
        payoff.push(base.at(pos) - singleton_worth(&cs.game, pos) + avg);
    }
    Allocation::new(cs.game.roster().to_vec(), payoff)
}

/// Like [`phi4`] but the correction applies only inside the distinguished
/// union and only when the grand coalition's dividend is non-zero.
pub fn phi5(cs: &CsGame, choice: UnionChoice) -> Result<Allocation, ValueError> {
    let base = owen(cs);
    let distinguished = choice.resolve(cs)?;
    let top_dividend = cs.game.dividends().get(cs.game.grand()).clone();
    if top_dividend.is_zero() {
        return Ok(base);
    }
    let block = cs.structure.blocks()[distinguished];
    let avg: BigRational = block
        .positions()
        .map(|p| singleton_worth(&cs.game, p))
        .sum::<BigRational>()
        / BigRational::from_integer(BigInt::from(block.len()));
    let n = cs.n();
    let mut payoff = Vec::with_capacity(n);
    for pos in 0..n {
        if block.contains(pos) {
            payoff.push(base.at(pos) - singleton_worth(&cs.game, pos) + avg.clone());
        } else {
            payoff.push(base.at(pos).clone());
        }
    }
    Ok(Allocation::new(cs.game.roster().to_vec(), payoff))
}

/// Shapley value of the underlying game, ignoring the structure.
pub fn shapley_blind(cs: &CsGame) -> Allocation {
    shapley(&cs.game)
}

/// The zero allocation.
pub fn null_rule(cs: &CsGame) -> Allocation {
    Allocation::zero(cs.game.roster().to_vec())
}

/// Per-union payoff totals in canonical block order.
pub fn union_totals(cs: &CsGame, alloc: &Allocation) -> Vec<BigRational> {
    cs.structure
        .blocks()
        .iter()
        .map(|&b| alloc.block_total(b))
        .collect()
}

/// Union totals of the Owen value against the Shapley value of the quotient
/// game; the two must agree union by union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientConsistency {
    pub union_totals: Vec<BigRational>,
    pub quotient_shapley: Vec<BigRational>,
    pub holds: bool,
}

pub fn quotient_consistency(cs: &CsGame) -> QuotientConsistency {
    let totals = union_totals(cs, &owen(cs));
    let q = shapley(&cs.quotient());
    let quotient_shapley: Vec<BigRational> = (0..cs.m()).map(|p| q.at(p).clone()).collect();
    let holds = totals == quotient_shapley;
    QuotientConsistency {
        union_totals: totals,
        quotient_shapley,
        holds,
    }
}

/// A named, parameterized allocation rule; the single interface the axiom
/// engine consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueRule {
    Owen,
    OwenMarginal,
    Shapley,
    ShapleyBlind,
    Se,
    Phi1,
    Phi2(WeightScheme),
    Phi3,
    Phi4,
    Phi5(UnionChoice),
    OwenP,
    Zero,
}

impl ValueRule {
    /// Canonical rule names usable from the command line and suite configs.
    pub fn parse(name: &str) -> Result<ValueRule, ValueError> {
        Ok(match name {
            "owen" => ValueRule::Owen,
            "owen-marginal" => ValueRule::OwenMarginal,
            "shapley" => ValueRule::Shapley,
            "shapley-blind" => ValueRule::ShapleyBlind,
            "se" => ValueRule::Se,
            "phi1" => ValueRule::Phi1,
            "phi2" => ValueRule::Phi2(WeightScheme::ByPlayerId),
            "phi3" => ValueRule::Phi3,
            "phi4" => ValueRule::Phi4,
            "phi5" => ValueRule::Phi5(UnionChoice::SmallestMember),
            "owen-p" => ValueRule::OwenP,
            "zero" => ValueRule::Zero,
            other => return Err(ValueError::UnknownRule(other.to_owned())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            ValueRule::Owen => "owen",
            ValueRule::OwenMarginal => "owen-marginal",
            ValueRule::Shapley => "shapley",
            ValueRule::ShapleyBlind => "shapley-blind",
            ValueRule::Se => "se",
            ValueRule::Phi1 => "phi1",
            ValueRule::Phi2(_) => "phi2",
            ValueRule::Phi3 => "phi3",
            ValueRule::Phi4 => "phi4",
            ValueRule::Phi5(_) => "phi5",
            ValueRule::OwenP => "owen-p",
            ValueRule::Zero => "zero",
        }
    }

    pub fn evaluate(&self, cs: &CsGame) -> Result<Allocation, ValueError> {
        Ok(match self {
            ValueRule::Owen => owen(cs),
            ValueRule::OwenMarginal => owen_by_marginals(cs),
            ValueRule::Shapley | ValueRule::ShapleyBlind => shapley_blind(cs),
            ValueRule::Se => se_value(cs),
            ValueRule::Phi1 => phi1(cs)?,
            ValueRule::Phi2(scheme) => phi2(cs, scheme)?,
            ValueRule::Phi3 => phi3(cs),
            ValueRule::Phi4 => phi4(cs),
            ValueRule::Phi5(choice) => phi5(cs, *choice)?,
            ValueRule::OwenP => owen_p(cs),
            ValueRule::Zero => null_rule(cs),
        })
    }

    /// Every rule under its default parameters, in display order.
    pub fn all_default() -> Vec<ValueRule> {
        vec![
            ValueRule::Owen,
            ValueRule::OwenMarginal,
            ValueRule::Shapley,
            ValueRule::ShapleyBlind,
            ValueRule::Se,
            ValueRule::Phi1,
            ValueRule::Phi2(WeightScheme::ByPlayerId),
            ValueRule::Phi3,
            ValueRule::Phi4,
            ValueRule::Phi5(UnionChoice::SmallestMember),
            ValueRule::OwenP,
            ValueRule::Zero,
        ]
    }
}
