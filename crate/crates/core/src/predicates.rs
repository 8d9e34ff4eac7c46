//! Player-level and union-level relations that axiom hypotheses quantify
//! over.
//!
//! Every universally quantified predicate is decided by full enumeration of
//! its quantifier domain and reports a concrete witness coalition on failure.
//! The dividend-based routes (`*_by_dividends`) decide the same relations
//! through the dividend table; the two routes must agree everywhere, which
//! the property tests assert.

use num::Zero;
use thiserror::Error;

use crate::game::{Coalition, Game, GameError, PlayerId};
use crate::structure::{CsGame, StructureError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PredicateError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("the two players must be distinct")]
    SamePlayer,
    #[error("the two unions must be distinct")]
    SameUnion,
    #[error("games must share one roster")]
    RosterMismatch,
    #[error("games must share one coalition structure")]
    StructureMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlayerRelation {
    Null,
    Necessary,
    SymmetricPair,
    MutuallyDependentPair,
}

/// Outcome of one player-level predicate; `witness` is a coalition violating
/// the defining condition when `holds` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayerRelationReport {
    pub relation: PlayerRelation,
    pub holds: bool,
    pub witness: Option<Coalition>,
}

impl PlayerRelationReport {
    fn holds(relation: PlayerRelation) -> Self {
        PlayerRelationReport {
            relation,
            holds: true,
            witness: None,
        }
    }

    fn fails(relation: PlayerRelation, witness: Coalition) -> Self {
        PlayerRelationReport {
            relation,
            holds: false,
            witness: Some(witness),
        }
    }
}

/// `i` contributes nothing: `v(S∪{i}) = v(S)` for every `S ⊆ N∖{i}`.
pub fn is_null_player(game: &Game, i: PlayerId) -> Result<PlayerRelationReport, PredicateError> {
    let pos = game.position(i)?;
    let others = game.grand().remove(pos);
    for s in others.subsets() {
        if !game.marginal(pos, s).is_zero() {
            return Ok(PlayerRelationReport::fails(PlayerRelation::Null, s));
        }
    }
    Ok(PlayerRelationReport::holds(PlayerRelation::Null))
}

/// Dividend route: `i` is null iff every coalition containing `i` has zero
/// dividend.
pub fn null_player_by_dividends(game: &Game, i: PlayerId) -> Result<bool, PredicateError> {
    let pos = game.position(i)?;
    let d = game.dividends();
    for mask in 0..(1u32 << game.n()) {
        let t = Coalition(mask);
        if t.contains(pos) && !d.get(t).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nothing works without `i`: `v(S) = 0` for every `S ⊆ N∖{i}`.
pub fn is_necessary_player(
    game: &Game,
    i: PlayerId,
) -> Result<PlayerRelationReport, PredicateError> {
    let pos = game.position(i)?;
    let others = game.grand().remove(pos);
    for s in others.subsets() {
        if !game.worth(s).is_zero() {
            return Ok(PlayerRelationReport::fails(PlayerRelation::Necessary, s));
        }
    }
    Ok(PlayerRelationReport::holds(PlayerRelation::Necessary))
}

/// Dividend route: `i` is necessary iff every non-empty coalition avoiding
/// `i` has zero dividend.
pub fn necessary_player_by_dividends(game: &Game, i: PlayerId) -> Result<bool, PredicateError> {
    let pos = game.position(i)?;
    let d = game.dividends();
    for mask in 1..(1u32 << game.n()) {
        let t = Coalition(mask);
        if !t.contains(pos) && !d.get(t).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equal marginals everywhere both are absent.
pub fn are_symmetric(
    game: &Game,
    i: PlayerId,
    j: PlayerId,
) -> Result<PlayerRelationReport, PredicateError> {
    if i == j {
        return Err(PredicateError::SamePlayer);
    }
    let pi = game.position(i)?;
    let pj = game.position(j)?;
    let others = game.grand().remove(pi).remove(pj);
    for s in others.subsets() {
        if game.marginal(pi, s) != game.marginal(pj, s) {
            return Ok(PlayerRelationReport::fails(
                PlayerRelation::SymmetricPair,
                s,
            ));
        }
    }
    Ok(PlayerRelationReport::holds(PlayerRelation::SymmetricPair))
}

/// Both marginals vanish everywhere both are absent.
pub fn are_mutually_dependent(
    game: &Game,
    i: PlayerId,
    j: PlayerId,
) -> Result<PlayerRelationReport, PredicateError> {
    if i == j {
        return Err(PredicateError::SamePlayer);
    }
    let pi = game.position(i)?;
    let pj = game.position(j)?;
    let others = game.grand().remove(pi).remove(pj);
    for s in others.subsets() {
        if !game.marginal(pi, s).is_zero() || !game.marginal(pj, s).is_zero() {
            return Ok(PlayerRelationReport::fails(
                PlayerRelation::MutuallyDependentPair,
                s,
            ));
        }
    }
    Ok(PlayerRelationReport::holds(
        PlayerRelation::MutuallyDependentPair,
    ))
}

/// Dividend route: `i`, `j` are mutually dependent iff every coalition
/// containing exactly one of them has zero dividend.
pub fn mutually_dependent_by_dividends(
    game: &Game,
    i: PlayerId,
    j: PlayerId,
) -> Result<bool, PredicateError> {
    if i == j {
        return Err(PredicateError::SamePlayer);
    }
    let pi = game.position(i)?;
    let pj = game.position(j)?;
    let d = game.dividends();
    for mask in 1..(1u32 << game.n()) {
        let t = Coalition(mask);
        if t.contains(pi) != t.contains(pj) && !d.get(t).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Null in both games or non-null in both games.
pub fn same_productive_identity(v: &Game, w: &Game, i: PlayerId) -> Result<bool, PredicateError> {
    if v.roster() != w.roster() {
        return Err(PredicateError::RosterMismatch);
    }
    let in_v = is_null_player(v, i)?.holds;
    let in_w = is_null_player(w, i)?.holds;
    Ok(in_v == in_w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionRelation {
    NullUnion,
    NecessaryUnion,
    SymmetricUnions,
    MutuallyDependentUnions,
    HighlyMutuallyDependent,
    HighlySymmetric,
}

/// Outcome of one union-level predicate. For the quotient-level relations
/// the witness coalition is a set of union indices; for the highly-* ones it
/// is a coalition of the underlying game together with the violating cross
/// pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionRelationReport {
    pub relation: UnionRelation,
    pub holds: bool,
    pub witness: Option<Coalition>,
    pub witness_pair: Option<(PlayerId, PlayerId)>,
}

impl UnionRelationReport {
    fn from_player_report(relation: UnionRelation, r: PlayerRelationReport) -> Self {
        UnionRelationReport {
            relation,
            holds: r.holds,
            witness: r.witness,
            witness_pair: None,
        }
    }
}

fn quotient_player(p: usize) -> PlayerId {
    PlayerId(p as u32)
}

/// `B_p` is a null union when index `p` is null in the quotient game.
pub fn union_is_null(cs: &CsGame, p: usize) -> Result<UnionRelationReport, PredicateError> {
    cs.structure.block(p)?;
    let r = is_null_player(&cs.quotient(), quotient_player(p))?;
    Ok(UnionRelationReport::from_player_report(
        UnionRelation::NullUnion,
        r,
    ))
}

pub fn union_is_necessary(cs: &CsGame, p: usize) -> Result<UnionRelationReport, PredicateError> {
    cs.structure.block(p)?;
    let r = is_necessary_player(&cs.quotient(), quotient_player(p))?;
    Ok(UnionRelationReport::from_player_report(
        UnionRelation::NecessaryUnion,
        r,
    ))
}

pub fn unions_mutually_dependent(
    cs: &CsGame,
    p: usize,
    q: usize,
) -> Result<UnionRelationReport, PredicateError> {
    if p == q {
        return Err(PredicateError::SameUnion);
    }
    cs.structure.block(p)?;
    cs.structure.block(q)?;
    let r = are_mutually_dependent(&cs.quotient(), quotient_player(p), quotient_player(q))?;
    Ok(UnionRelationReport::from_player_report(
        UnionRelation::MutuallyDependentUnions,
        r,
    ))
}

pub fn unions_symmetric(
    cs: &CsGame,
    p: usize,
    q: usize,
) -> Result<UnionRelationReport, PredicateError> {
    if p == q {
        return Err(PredicateError::SameUnion);
    }
    cs.structure.block(p)?;
    cs.structure.block(q)?;
    let r = are_symmetric(&cs.quotient(), quotient_player(p), quotient_player(q))?;
    Ok(UnionRelationReport::from_player_report(
        UnionRelation::SymmetricUnions,
        r,
    ))
}

/// Every cross pair, one player from each union, is mutually dependent in
/// the underlying game.
pub fn unions_highly_mutually_dependent(
    cs: &CsGame,
    p: usize,
    q: usize,
) -> Result<UnionRelationReport, PredicateError> {
    if p == q {
        return Err(PredicateError::SameUnion);
    }
    let bp = cs.structure.block(p)?;
    let bq = cs.structure.block(q)?;
    for i in cs.game.members(bp) {
        for j in cs.game.members(bq) {
            let r = are_mutually_dependent(&cs.game, i, j)?;
            if !r.holds {
                return Ok(UnionRelationReport {
                    relation: UnionRelation::HighlyMutuallyDependent,
                    holds: false,
                    witness: r.witness,
                    witness_pair: Some((i, j)),
                });
            }
        }
    }
    Ok(UnionRelationReport {
        relation: UnionRelation::HighlyMutuallyDependent,
        holds: true,
        witness: None,
        witness_pair: None,
    })
}

/// Every cross pair is symmetric in the underlying game.
pub fn unions_highly_symmetric(
    cs: &CsGame,
    p: usize,
    q: usize,
) -> Result<UnionRelationReport, PredicateError> {
    if p == q {
        return Err(PredicateError::SameUnion);
    }
    let bp = cs.structure.block(p)?;
    let bq = cs.structure.block(q)?;
    for i in cs.game.members(bp) {
        for j in cs.game.members(bq) {
            let r = are_symmetric(&cs.game, i, j)?;
            if !r.holds {
                return Ok(UnionRelationReport {
                    relation: UnionRelation::HighlySymmetric,
                    holds: false,
                    witness: r.witness,
                    witness_pair: Some((i, j)),
                });
            }
        }
    }
    Ok(UnionRelationReport {
        relation: UnionRelation::HighlySymmetric,
        holds: true,
        witness: None,
        witness_pair: None,
    })
}

/// Diagnosis of the union-wise mutual dependence test between two games on a
/// shared structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnionWiseFailure {
    GrandWorthsDiffer,
    UnionIdentityDiffers { union: usize },
    NotMutuallyDependent { in_first: bool, p: usize, q: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionWiseReport {
    pub holds: bool,
    pub failure: Option<UnionWiseFailure>,
    /// Unions that are non-null (in both games when the identity condition
    /// holds).
    pub non_null_unions: Vec<usize>,
}

/// Equal grand worth, identical union productive identities, and all
/// non-null unions pairwise mutually dependent in both games.
pub fn union_wise_mutually_dependent(
    csv: &CsGame,
    csw: &CsGame,
) -> Result<UnionWiseReport, PredicateError> {
    if csv.game.roster() != csw.game.roster() {
        return Err(PredicateError::RosterMismatch);
    }
    if csv.structure != csw.structure {
        return Err(PredicateError::StructureMismatch);
    }
    if csv.game.grand_worth() != csw.game.grand_worth() {
        return Ok(UnionWiseReport {
            holds: false,
            failure: Some(UnionWiseFailure::GrandWorthsDiffer),
            non_null_unions: Vec::new(),
        });
    }
    let qv = csv.quotient();
    let qw = csw.quotient();
    let m = csv.m();
    let mut non_null = Vec::new();
    for p in 0..m {
        let null_v = is_null_player(&qv, quotient_player(p))?.holds;
        let null_w = is_null_player(&qw, quotient_player(p))?.holds;
        if null_v != null_w {
            return Ok(UnionWiseReport {
                holds: false,
                failure: Some(UnionWiseFailure::UnionIdentityDiffers { union: p }),
                non_null_unions: Vec::new(),
            });
        }
        if !null_v {
            non_null.push(p);
        }
    }
    for (a, &p) in non_null.iter().enumerate() {
        for &q in &non_null[a + 1..] {
            let dep_v = are_mutually_dependent(&qv, quotient_player(p), quotient_player(q))?.holds;
            if !dep_v {
                return Ok(UnionWiseReport {
                    holds: false,
                    failure: Some(UnionWiseFailure::NotMutuallyDependent {
                        in_first: true,
                        p,
                        q,
                    }),
                    non_null_unions: non_null.clone(),
                });
            }
            let dep_w = are_mutually_dependent(&qw, quotient_player(p), quotient_player(q))?.holds;
            if !dep_w {
                return Ok(UnionWiseReport {
                    holds: false,
                    failure: Some(UnionWiseFailure::NotMutuallyDependent {
                        in_first: false,
                        p,
                        q,
                    }),
                    non_null_unions: non_null.clone(),
                });
            }
        }
    }
    Ok(UnionWiseReport {
        holds: true,
        failure: None,
        non_null_unions: non_null,
    })
}

/// Direct quantifier form of the cross-union difference hypothesis: every
/// `i ∈ B_p`, `j ∈ B_q` has equal marginals in the two games at every
/// `S ⊆ N∖{i,j}`. Equivalent to `B_p`, `B_q` being highly mutually dependent
/// in the difference game; the equivalence itself is asserted by tests and
/// the difference-game route is what the checkers use.
pub fn cross_union_marginals_match(
    csv: &CsGame,
    csw: &CsGame,
    p: usize,
    q: usize,
) -> Result<bool, PredicateError> {
    if csv.game.roster() != csw.game.roster() {
        return Err(PredicateError::RosterMismatch);
    }
    if csv.structure != csw.structure {
        return Err(PredicateError::StructureMismatch);
    }
    if p == q {
        return Err(PredicateError::SameUnion);
    }
    let bp = csv.structure.block(p)?;
    let bq = csv.structure.block(q)?;
    for pi in bp.positions() {
        for pj in bq.positions() {
            let others = csv.game.grand().remove(pi).remove(pj);
            for s in others.subsets() {
                if csv.game.marginal(pi, s) != csw.game.marginal(pi, s)
                    || csv.game.marginal(pj, s) != csw.game.marginal(pj, s)
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Witness of unequal inter-union marginal contributions: the union index
/// set `R` and the intra-union coalition `S` at which they differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterUnionWitness {
    pub union_set: u32,
    pub intra: Coalition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterUnionReport {
    pub holds: bool,
    pub witness: Option<InterUnionWitness>,
}

/// Equal marginal contributions of `i` to every coalition of the shape
/// `Q(R) ∪ S` with `R` a set of foreign unions and `S` inside `i`'s own
/// union.
pub fn same_inter_union_marginals(
    csv: &CsGame,
    csw: &CsGame,
    i: PlayerId,
) -> Result<InterUnionReport, PredicateError> {
    if csv.game.roster() != csw.game.roster() {
        return Err(PredicateError::RosterMismatch);
    }
    if csv.structure != csw.structure {
        return Err(PredicateError::StructureMismatch);
    }
    let pos = csv.game.position(i)?;
    let h = csv.structure.block_of(pos);
    let own = csv.structure.block(h)?.remove(pos);
    let m = csv.m();
    let foreign: Vec<usize> = (0..m).filter(|&p| p != h).collect();
    for rbits in 0..(1u32 << foreign.len()) {
        let mut union_set = 0u32;
        let mut q = Coalition::EMPTY;
        for (k, &p) in foreign.iter().enumerate() {
            if rbits & (1 << k) != 0 {
                union_set |= 1 << p;
                q = q.union(csv.structure.block(p)?);
            }
        }
        for s in own.subsets() {
            let base = q.union(s);
            if csv.game.marginal(pos, base) != csw.game.marginal(pos, base) {
                return Ok(InterUnionReport {
                    holds: false,
                    witness: Some(InterUnionWitness {
                        union_set,
                        intra: s,
                    }),
                });
            }
        }
    }
    Ok(InterUnionReport {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::players;
    use crate::rational::rat;
    use crate::structure::CoalitionStructure;

    fn u_t(ids: &[u32], t_positions: &[usize]) -> Game {
        Game::unanimity(
            players(ids),
            Coalition::from_positions(t_positions.iter().copied()),
            rat(1),
        )
        .unwrap()
    }

    #[test]
    fn null_player_in_unanimity() {
        let g = u_t(&[1, 2, 3], &[0, 2]);
        assert!(is_null_player(&g, PlayerId(2)).unwrap().holds);
        let r = is_null_player(&g, PlayerId(1)).unwrap();
        assert!(!r.holds);
        // the witness completes T without the player
        assert_eq!(r.witness, Some(Coalition::singleton(2)));
        assert!(null_player_by_dividends(&g, PlayerId(2)).unwrap());
        assert!(!null_player_by_dividends(&g, PlayerId(1)).unwrap());
    }

    #[test]
    fn embedded_fresh_player_is_null() {
        let g = u_t(&[1, 2], &[0]).with_null_player(PlayerId(9)).unwrap();
        assert!(is_null_player(&g, PlayerId(9)).unwrap().holds);
    }

    #[test]
    fn necessary_player_in_unanimity() {
        let g = u_t(&[1, 2, 3], &[0, 2]);
        assert!(is_necessary_player(&g, PlayerId(1)).unwrap().holds);
        assert!(is_necessary_player(&g, PlayerId(3)).unwrap().holds);
        assert!(!is_necessary_player(&g, PlayerId(2)).unwrap().holds);
        assert!(necessary_player_by_dividends(&g, PlayerId(1)).unwrap());
    }

    #[test]
    fn two_player_game_necessity_witness() {
        let g = Game::new(players(&[1, 2]), vec![rat(0), rat(1), rat(2), rat(4)]).unwrap();
        let r = is_necessary_player(&g, PlayerId(1)).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(Coalition(0b10)));
    }

    #[test]
    fn everyone_is_necessary_in_the_zero_game() {
        let g = Game::zero(players(&[1, 2, 3])).unwrap();
        for id in [1, 2, 3] {
            assert!(is_necessary_player(&g, PlayerId(id)).unwrap().holds);
            assert!(necessary_player_by_dividends(&g, PlayerId(id)).unwrap());
        }
    }

    #[test]
    fn symmetry_inside_and_outside_t() {
        let g = u_t(&[1, 2, 3], &[0, 2]);
        assert!(are_symmetric(&g, PlayerId(1), PlayerId(3)).unwrap().holds);
        let r = are_symmetric(&u_t(&[1, 2], &[0]), PlayerId(1), PlayerId(2)).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(Coalition::EMPTY));
        assert_eq!(
            are_symmetric(&g, PlayerId(1), PlayerId(1)).unwrap_err(),
            PredicateError::SamePlayer
        );
    }

    #[test]
    fn additive_game_with_equal_singletons_is_symmetric() {
        let g = Game::additive(players(&[1, 2, 3]), vec![rat(2), rat(2), rat(5)]).unwrap();
        assert!(are_symmetric(&g, PlayerId(1), PlayerId(2)).unwrap().holds);
        assert!(!are_symmetric(&g, PlayerId(1), PlayerId(3)).unwrap().holds);
    }

    #[test]
    fn mutual_dependence_in_unanimity() {
        let g = u_t(&[1, 2, 3], &[0, 2]);
        assert!(
            are_mutually_dependent(&g, PlayerId(1), PlayerId(3))
                .unwrap()
                .holds
        );
        let r = are_mutually_dependent(&g, PlayerId(1), PlayerId(2)).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(Coalition::singleton(2)));
        assert!(mutually_dependent_by_dividends(&g, PlayerId(1), PlayerId(3)).unwrap());
        assert!(!mutually_dependent_by_dividends(&g, PlayerId(1), PlayerId(2)).unwrap());
    }

    #[test]
    fn necessary_players_are_mutually_dependent() {
        let g = u_t(&[1, 2, 3], &[0, 1, 2]);
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            assert!(
                are_mutually_dependent(&g, PlayerId(i), PlayerId(j))
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn productive_identity_requires_matching_nullity() {
        let v = u_t(&[1, 2], &[0]);
        let w = Game::zero(players(&[1, 2])).unwrap();
        assert!(same_productive_identity(&v, &v, PlayerId(2)).unwrap());
        assert!(!same_productive_identity(&v, &w, PlayerId(1)).unwrap());
        assert!(same_productive_identity(&v, &w, PlayerId(2)).unwrap());
    }

    fn u13_cs() -> CsGame {
        let g = u_t(&[1, 2, 3], &[0, 2]);
        let b = CoalitionStructure::new(
            vec![Coalition::from_positions([0, 1]), Coalition::singleton(2)],
            3,
        )
        .unwrap();
        CsGame::new(g, b).unwrap()
    }

    #[test]
    fn union_relations_via_quotient() {
        let cs = u13_cs();
        assert!(unions_mutually_dependent(&cs, 0, 1).unwrap().holds);
        assert!(unions_symmetric(&cs, 0, 1).unwrap().holds);
        assert!(!union_is_null(&cs, 0).unwrap().holds);

        let g = u_t(&[1, 2], &[0]);
        let cs2 = CsGame::new(g, CoalitionStructure::singletons(2)).unwrap();
        assert!(union_is_null(&cs2, 1).unwrap().holds);
        assert!(union_is_necessary(&cs2, 0).unwrap().holds);
    }

    #[test]
    fn grand_union_is_vacuously_necessary() {
        let cs = CsGame::new(u13_cs().game, CoalitionStructure::grand(3)).unwrap();
        assert!(union_is_necessary(&cs, 0).unwrap().holds);
    }

    #[test]
    fn high_mutual_dependence_needs_every_cross_pair() {
        let cs = u13_cs();
        let r = unions_highly_mutually_dependent(&cs, 0, 1).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness_pair, Some((PlayerId(2), PlayerId(3))));

        let un = u_t(&[1, 2, 3], &[0, 1, 2]);
        let cs_un = CsGame::new(un, cs.structure.clone()).unwrap();
        assert!(
            unions_highly_mutually_dependent(&cs_un, 0, 1)
                .unwrap()
                .holds
        );

        let zero = Game::zero(players(&[1, 2, 3])).unwrap();
        let cs_zero = CsGame::new(zero, cs.structure.clone()).unwrap();
        assert!(
            unions_highly_mutually_dependent(&cs_zero, 0, 1)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn high_symmetry_examples() {
        let cs = u13_cs();
        let un = u_t(&[1, 2, 3], &[0, 1, 2]);
        let cs_un = CsGame::new(un, cs.structure.clone()).unwrap();
        assert!(unions_highly_symmetric(&cs_un, 0, 1).unwrap().holds);

        let g = u_t(&[1, 2], &[0]);
        let cs2 = CsGame::new(g, CoalitionStructure::singletons(2)).unwrap();
        assert!(!unions_highly_symmetric(&cs2, 0, 1).unwrap().holds);

        let additive = Game::additive(players(&[1, 2, 3]), vec![rat(2), rat(2), rat(2)]).unwrap();
        let cs3 = CsGame::new(additive, cs.structure.clone()).unwrap();
        assert!(unions_highly_symmetric(&cs3, 0, 1).unwrap().holds);
    }

    #[test]
    fn union_wise_mutual_dependence_cases() {
        let b = CoalitionStructure::new(
            vec![Coalition::from_positions([0, 1]), Coalition::singleton(2)],
            3,
        )
        .unwrap();
        let un = u_t(&[1, 2, 3], &[0, 1, 2]);
        let cs_un = CsGame::new(un, b.clone()).unwrap();
        assert!(union_wise_mutually_dependent(&cs_un, &cs_un).unwrap().holds);

        let zero = Game::zero(players(&[1, 2, 3])).unwrap();
        let cs_zero = CsGame::new(zero, b).unwrap();
        let r = union_wise_mutually_dependent(&cs_un, &cs_zero).unwrap();
        assert!(!r.holds);
        assert_eq!(r.failure, Some(UnionWiseFailure::GrandWorthsDiffer));
    }

    #[test]
    fn inter_union_marginals_detect_intra_union_changes() {
        let cs = u13_cs();
        assert!(
            same_inter_union_marginals(&cs, &cs, PlayerId(1))
                .unwrap()
                .holds
        );
        // adding a scaled unanimity game on the player's own union changes an
        // intra-union marginal
        let bump = Game::unanimity(
            players(&[1, 2, 3]),
            Coalition::from_positions([0, 1]),
            rat(1),
        )
        .unwrap();
        let changed = CsGame::new(cs.game.add(&bump).unwrap(), cs.structure.clone()).unwrap();
        let r = same_inter_union_marginals(&cs, &changed, PlayerId(1)).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.union_set, 0);
        assert_eq!(w.intra, Coalition::singleton(1));
    }

    #[test]
    fn null_difference_gives_equal_inter_union_marginals() {
        let cs = u13_cs();
        // a perturbation in which player 1 is null
        let bump = Game::unanimity(players(&[1, 2, 3]), Coalition::singleton(1), rat(3)).unwrap();
        let shifted = CsGame::new(cs.game.add(&bump).unwrap(), cs.structure.clone()).unwrap();
        assert!(
            same_inter_union_marginals(&cs, &shifted, PlayerId(1))
                .unwrap()
                .holds
        );
    }
}
