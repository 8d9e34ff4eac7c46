//! Coalition structures (partitions of the roster into unions), CS-games,
//! quotient games and structure restriction.

use num::rational::BigRational;
use num::Zero;
use thiserror::Error;

use crate::game::{Coalition, Game, GameError, PlayerId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("blocks must be non-empty")]
    EmptyBlock,
    #[error("blocks overlap")]
    Overlap,
    #[error("blocks do not cover the roster")]
    Incomplete,
    #[error("block mask {0:#x} has bits outside the roster")]
    MaskOutOfRange(u32),
    #[error("union index {0} out of range")]
    BadUnionIndex(usize),
    #[error("structures must be identical")]
    StructureMismatch,
    #[error(transparent)]
    Game(#[from] GameError),
}

/// A partition of roster positions into non-empty, pairwise disjoint unions.
/// Canonical order: ascending smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoalitionStructure {
    blocks: Vec<Coalition>,
    n: usize,
}

impl CoalitionStructure {
    pub fn new(mut blocks: Vec<Coalition>, n: usize) -> Result<Self, StructureError> {
        let full = Coalition::full(n);
        let mut seen = Coalition::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(StructureError::EmptyBlock);
            }
            if !b.is_subset_of(full) {
                return Err(StructureError::MaskOutOfRange(b.0));
            }
            if seen.intersects(b) {
                return Err(StructureError::Overlap);
            }
            seen = seen.union(b);
        }
        if seen != full {
            return Err(StructureError::Incomplete);
        }
        blocks.sort_by_key(|b| b.0.trailing_zeros());
        Ok(CoalitionStructure { blocks, n })
    }

    /// Every player in a union of their own.
    pub fn singletons(n: usize) -> Self {
        CoalitionStructure {
            blocks: (0..n).map(Coalition::singleton).collect(),
            n,
        }
    }

    /// One union holding the whole roster.
    pub fn grand(n: usize) -> Self {
        CoalitionStructure {
            blocks: vec![Coalition::full(n)],
            n,
        }
    }

    pub fn blocks(&self) -> &[Coalition] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn roster_size(&self) -> usize {
        self.n
    }

    pub fn block(&self, p: usize) -> Result<Coalition, StructureError> {
        self.blocks
            .get(p)
            .copied()
            .ok_or(StructureError::BadUnionIndex(p))
    }

    /// Index of the union containing a roster position.
    pub fn block_of(&self, pos: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(pos))
            .expect("every position is covered")
    }

    /// Unions that intersect `t`, as indices.
    pub fn meeting(&self, t: Coalition) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&p| self.blocks[p].intersects(t))
            .collect()
    }

    /// `|{ B ∈ ℬ : B ∩ T ≠ ∅ }|`, the number of unions `t` touches.
    pub fn meeting_count(&self, t: Coalition) -> usize {
        self.blocks.iter().filter(|b| b.intersects(t)).count()
    }

    /// Structure restricted to `keep`, re-packed to the positions of the
    /// restricted roster. Emptied unions are dropped.
    pub fn restricted(&self, keep: Coalition) -> Result<CoalitionStructure, StructureError> {
        if keep.is_empty() {
            return Err(StructureError::EmptyBlock);
        }
        let old_positions: Vec<usize> = keep.positions().collect();
        let remap = |b: Coalition| {
            let mut out = Coalition::EMPTY;
            for (new_pos, &old_pos) in old_positions.iter().enumerate() {
                if b.contains(old_pos) {
                    out = out.insert(new_pos);
                }
            }
            out
        };
        let blocks: Vec<Coalition> = self
            .blocks
            .iter()
            .map(|&b| remap(b.intersect(keep)))
            .filter(|b| !b.is_empty())
            .collect();
        CoalitionStructure::new(blocks, old_positions.len())
    }
}

/// A TU-game together with a coalition structure over its roster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsGame {
    pub game: Game,
    pub structure: CoalitionStructure,
}

impl CsGame {
    pub fn new(game: Game, structure: CoalitionStructure) -> Result<CsGame, StructureError> {
        if structure.roster_size() != game.n() {
            return Err(StructureError::Incomplete);
        }
        Ok(CsGame { game, structure })
    }

    pub fn n(&self) -> usize {
        self.game.n()
    }

    /// Number of unions.
    pub fn m(&self) -> usize {
        self.structure.len()
    }

    /// Union index of a player id.
    pub fn union_of(&self, id: PlayerId) -> Result<usize, StructureError> {
        Ok(self.structure.block_of(self.game.position(id)?))
    }

    pub fn union_members(&self, p: usize) -> Result<Vec<PlayerId>, StructureError> {
        Ok(self.game.members(self.structure.block(p)?))
    }

    /// The game played by unions: one player per union (id = union index),
    /// worth of an index set `R` equal to the worth of `⋃_{r∈R} B_r`.
    pub fn quotient(&self) -> Game {
        let m = self.m();
        let roster: Vec<PlayerId> = (0..m as u32).map(PlayerId).collect();
        let mut worth = Vec::with_capacity(1 << m);
        for rmask in 0..(1usize << m) {
            let mut union_of_blocks = Coalition::EMPTY;
            for (p, &b) in self.structure.blocks().iter().enumerate() {
                if rmask & (1 << p) != 0 {
                    union_of_blocks = union_of_blocks.union(b);
                }
            }
            worth.push(self.game.worth(union_of_blocks).clone());
        }
        Game::new(roster, worth).expect("quotient table is well-formed")
    }

    /// Restricts game and structure to `keep` in one step.
    pub fn restrict(&self, keep: Coalition) -> Result<CsGame, StructureError> {
        let game = self.game.restrict(keep)?;
        let structure = self.structure.restricted(keep)?;
        CsGame::new(game, structure)
    }
}

/// All partitions of `{0,…,n−1}` via restricted-growth strings. Blocks come
/// out ordered by smallest member, so each structure is canonical. The count
/// is the Bell number of `n`.
pub fn all_partitions(n: usize) -> Vec<CoalitionStructure> {
    assert!(n >= 1, "partitions need at least one element");
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(
        labels: &mut Vec<usize>,
        pos: usize,
        max_used: usize,
        n: usize,
        out: &mut Vec<CoalitionStructure>,
    ) {
        if pos == n {
            let block_count = max_used + 1;
            let mut blocks = vec![Coalition::EMPTY; block_count];
            for (i, &l) in labels.iter().enumerate() {
                blocks[l] = blocks[l].insert(i);
            }
            out.push(CoalitionStructure::new(blocks, n).expect("RGS yields a partition"));
            return;
        }
        for label in 0..=max_used + 1 {
            labels[pos] = label;
            rec(labels, pos + 1, max_used.max(label), n, out);
        }
    }
    // position 0 always takes label 0
    rec(&mut labels, 1, 0, n, &mut out);
    out
}

/// Outcome of checking the quotient dividend identity
/// `λ_R(v^ℬ) = Σ_{T} λ_T(v)` over every union index set `R`, where the sum
/// ranges over coalitions that touch every union in `R` and stay inside
/// `⋃_{r∈R} B_r`. Allowing coalitions that spill into other unions breaks the
/// identity; see `oracle::quotient_dividend_rhs_spilling` and its tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientDividendCheck {
    Pass,
    FailAt {
        union_set: u32,
        quotient_dividend: BigRational,
        dividend_sum: BigRational,
    },
}

pub fn quotient_dividend_check(cs: &CsGame) -> QuotientDividendCheck {
    let m = cs.m();
    let quotient_dividends = cs.quotient().dividends();
    let dividends = cs.game.dividends();
    // accumulate Σ λ_T per exact union support of T
    let mut per_support = vec![BigRational::zero(); 1 << m];
    for mask in 1..(1u32 << cs.n()) {
        let t = Coalition(mask);
        let d = dividends.get(t);
        if d.is_zero() {
            continue;
        }
        let mut support = 0u32;
        for (p, &b) in cs.structure.blocks().iter().enumerate() {
            if b.intersects(t) {
                support |= 1 << p;
            }
        }
        per_support[support as usize] += d;
    }
    for rmask in 1..(1u32 << m) {
        let lhs = quotient_dividends.get(Coalition(rmask));
        let rhs = &per_support[rmask as usize];
        if lhs != rhs {
            return QuotientDividendCheck::FailAt {
                union_set: rmask,
                quotient_dividend: lhs.clone(),
                dividend_sum: rhs.clone(),
            };
        }
    }
    QuotientDividendCheck::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::players;
    use crate::rational::rat;

    fn u13_cs() -> CsGame {
        let g = Game::unanimity(
            players(&[1, 2, 3]),
            Coalition::from_positions([0, 2]),
            rat(1),
        )
        .unwrap();
        let b = CoalitionStructure::new(
            vec![Coalition::from_positions([0, 1]), Coalition::singleton(2)],
            3,
        )
        .unwrap();
        CsGame::new(g, b).unwrap()
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        assert_eq!(all_partitions(1).len(), 1);
        assert_eq!(all_partitions(2).len(), 2);
        assert_eq!(all_partitions(3).len(), 5);
        assert_eq!(all_partitions(4).len(), 15);
        assert_eq!(all_partitions(5).len(), 52);
    }

    #[test]
    fn structure_validation() {
        assert_eq!(
            CoalitionStructure::new(vec![Coalition::singleton(0)], 2).unwrap_err(),
            StructureError::Incomplete
        );
        assert_eq!(
            CoalitionStructure::new(
                vec![Coalition::from_positions([0, 1]), Coalition::singleton(1)],
                2
            )
            .unwrap_err(),
            StructureError::Overlap
        );
        assert_eq!(
            CoalitionStructure::new(vec![Coalition::full(2), Coalition::EMPTY], 2).unwrap_err(),
            StructureError::EmptyBlock
        );
    }

    #[test]
    fn blocks_are_canonically_ordered() {
        let b = CoalitionStructure::new(
            vec![Coalition::singleton(2), Coalition::from_positions([0, 1])],
            3,
        )
        .unwrap();
        assert_eq!(
            b.blocks(),
            &[Coalition::from_positions([0, 1]), Coalition::singleton(2)]
        );
        assert_eq!(b.block_of(1), 0);
        assert_eq!(b.block_of(2), 1);
    }

    #[test]
    fn quotient_of_grand_structure_is_single_player() {
        let cs = CsGame::new(u13_cs().game, CoalitionStructure::grand(3)).unwrap();
        let q = cs.quotient();
        assert_eq!(q.n(), 1);
        assert_eq!(q.grand_worth(), cs.game.grand_worth());
    }

    #[test]
    fn quotient_of_singletons_is_isomorphic() {
        let cs = CsGame::new(u13_cs().game, CoalitionStructure::singletons(3)).unwrap();
        let q = cs.quotient();
        assert_eq!(q.worth_table(), cs.game.worth_table());
    }

    #[test]
    fn quotient_merges_unions() {
        // both unions are needed to complete {1,3}, so the quotient is the
        // unanimity game on the full index set
        let q = u13_cs().quotient();
        let expected =
            Game::unanimity(players(&[0, 1]), Coalition::from_positions([0, 1]), rat(1)).unwrap();
        assert_eq!(q, expected);
    }

    #[test]
    fn restriction_drops_emptied_unions() {
        let cs = u13_cs();
        let keep = Coalition::from_positions([1, 2]);
        let restricted = cs.restrict(keep).unwrap();
        assert_eq!(restricted.game.roster(), &players(&[2, 3])[..]);
        assert_eq!(
            restricted.structure.blocks(),
            &[Coalition::singleton(0), Coalition::singleton(1)]
        );
    }

    #[test]
    fn restricting_to_t_keeps_unanimity() {
        let cs = u13_cs();
        let keep = Coalition::from_positions([0, 2]);
        let r = cs.restrict(keep).unwrap();
        assert_eq!(
            r.game,
            Game::unanimity(players(&[1, 3]), Coalition::from_positions([0, 1]), rat(1)).unwrap()
        );
    }

    #[test]
    fn quotient_dividend_identity_on_unanimity_and_zero() {
        assert_eq!(
            quotient_dividend_check(&u13_cs()),
            QuotientDividendCheck::Pass
        );
        let zero = CsGame::new(
            Game::zero(players(&[1, 2, 3])).unwrap(),
            CoalitionStructure::new(
                vec![Coalition::from_positions([0, 1]), Coalition::singleton(2)],
                3,
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(quotient_dividend_check(&zero), QuotientDividendCheck::Pass);
    }
}
