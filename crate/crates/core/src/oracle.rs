//! Slow reference implementations used as independent test oracles.
//!
//! Everything here evaluates defining sums directly (double-exponential
//! subset loops, permutation averages) and deliberately shares no code with
//! the fast paths it is used to check.

use num::rational::BigRational;
use num::{BigInt, One, Zero};

use crate::game::{Coalition, Game, PlayerId};
use crate::structure::CsGame;
use crate::values::Allocation;

/// `λ_T(v) = Σ_{S⊆T} (−1)^{|T|−|S|} v(S)` by direct enumeration.
pub fn naive_dividend(game: &Game, t: Coalition) -> BigRational {
    let mut acc = BigRational::zero();
    for s in t.subsets() {
        let term = game.worth(s).clone();
        if (t.len() - s.len()).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `v(S) = Σ_{∅≠T⊆S} λ_T` by direct enumeration over a dividend slice
/// indexed by mask.
pub fn naive_worth(dividends: &[BigRational], s: Coalition) -> BigRational {
    let mut acc = BigRational::zero();
    for t in s.subsets() {
        if !t.is_empty() {
            acc += &dividends[t.0 as usize];
        }
    }
    acc
}

fn factorial(k: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=k {
        out *= BigInt::from(i);
    }
    out
}

/// Shapley value through the order-based marginal average
/// `Σ_S |S|!(n−|S|−1)!/n! · [v(S∪{i})−v(S)]`, independent of the dividend
/// route.
pub fn shapley_by_marginals(game: &Game) -> Allocation {
    let n = game.n();
    let n_fact = factorial(n);
    let full = game.grand();
    let mut payoffs = vec![BigRational::zero(); n];
    for (pos, payoff) in payoffs.iter_mut().enumerate() {
        let others = full.remove(pos);
        let mut acc = BigRational::zero();
        for s in others.subsets() {
            let coeff = BigRational::new(
                factorial(s.len()) * factorial(n - s.len() - 1),
                n_fact.clone(),
            );
            acc += coeff * game.marginal(pos, s);
        }
        *payoff = acc;
    }
    Allocation::new(game.roster().to_vec(), payoffs)
}

/// Right-hand side of the quotient dividend identity in the reading that
/// keeps coalitions inside the selected unions: coalitions `T` with
/// `T ∩ B_r ≠ ∅` for every `r ∈ R` and `T ⊆ ⋃_{r∈R} B_r`.
pub fn quotient_dividend_rhs_contained(cs: &CsGame, union_set: u32) -> BigRational {
    let dividends = cs.game.dividends();
    let mut allowed = Coalition::EMPTY;
    for (p, &b) in cs.structure.blocks().iter().enumerate() {
        if union_set & (1 << p) != 0 {
            allowed = allowed.union(b);
        }
    }
    let mut acc = BigRational::zero();
    for mask in 1..(1u32 << cs.n()) {
        let t = Coalition(mask);
        if !t.is_subset_of(allowed) {
            continue;
        }
        let touches_all = cs
            .structure
            .blocks()
            .iter()
            .enumerate()
            .filter(|(p, _)| union_set & (1 << p) != 0)
            .all(|(_, &b)| b.intersects(t));
        if touches_all {
            acc += dividends.get(t);
        }
    }
    acc
}

/// Right-hand side in the looser reading that only asks `T ∩ B_r ≠ ∅` for
/// every `r ∈ R`, letting `T` spill into unions outside `R`. Kept to
/// demonstrate that this reading does not satisfy the identity.
pub fn quotient_dividend_rhs_spilling(cs: &CsGame, union_set: u32) -> BigRational {
    let dividends = cs.game.dividends();
    let mut acc = BigRational::zero();
    for mask in 1..(1u32 << cs.n()) {
        let t = Coalition(mask);
        let touches_all = cs
            .structure
            .blocks()
            .iter()
            .enumerate()
            .filter(|(p, _)| union_set & (1 << p) != 0)
            .all(|(_, &b)| b.intersects(t));
        if touches_all {
            acc += dividends.get(t);
        }
    }
    acc
}

/// Dividend of a union index set in the quotient game, computed from scratch.
pub fn quotient_dividend_lhs(cs: &CsGame, union_set: u32) -> BigRational {
    naive_dividend(&cs.quotient(), Coalition(union_set))
}

pub fn player_ids(game: &Game) -> Vec<PlayerId> {
    game.roster().to_vec()
}
