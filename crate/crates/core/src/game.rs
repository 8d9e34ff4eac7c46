//! TU-games with exact rational worth tables over the full coalition lattice.
//!
//! A roster of up to [`MAX_PLAYERS`] players is kept in ascending id order;
//! that order fixes the bit position of each player inside a [`Coalition`]
//! mask. Worth tables are dense `Vec<BigRational>` of length `2^n` indexed by
//! mask, which lets the dividend (Möbius) and worth (zeta) transforms run as
//! per-bit sweeps in `O(n·2^n)`.

use num::rational::BigRational;
use num::Zero;
use thiserror::Error;

/// Hard cap on roster size; worth tables are dense so anything beyond this is
/// out of scope anyway.
pub const MAX_PLAYERS: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("roster must be non-empty, ascending and duplicate-free")]
    RosterNotCanonical,
    #[error("roster of {0} players exceeds the supported maximum of {max}", max = MAX_PLAYERS)]
    RosterTooLarge(usize),
    #[error("worth table has {got} entries, expected {expected}")]
    WorthTableLength { got: usize, expected: usize },
    #[error("the empty coalition must have worth 0")]
    NonZeroEmptyWorth,
    #[error("the empty coalition dividend slot must be 0")]
    NonZeroEmptyDividend,
    #[error("coalition must be non-empty")]
    EmptyCoalition,
    #[error("coalition mask {0:#x} has bits outside the roster")]
    MaskOutOfRange(u32),
    #[error("unknown player id {0}")]
    UnknownPlayer(u32),
    #[error("player id {0} is already in the roster")]
    DuplicatePlayer(u32),
    #[error("games must share one roster")]
    RosterMismatch,
}

/// Player identifier, unique within a roster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(pub u32);

impl std::fmt::Display for PlayerId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Subset of roster positions packed into a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coalition(pub u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn full(n: usize) -> Coalition {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(pos: usize) -> Coalition {
        Coalition(1 << pos)
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Coalition {
        let mut mask = 0u32;
        for p in positions {
            mask |= 1 << p;
        }
        Coalition(mask)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, pos: usize) -> bool {
        self.0 & (1 << pos) != 0
    }

    pub fn insert(self, pos: usize) -> Coalition {
        Coalition(self.0 | (1 << pos))
    }

    pub fn remove(self, pos: usize) -> Coalition {
        Coalition(self.0 & !(1 << pos))
    }

    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    pub fn intersect(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn minus(self, other: Coalition) -> Coalition {
        Coalition(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Coalition) -> bool {
        self.0 & other.0 != 0
    }

    /// Positions of the members, ascending.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |p| mask & (1 << p) != 0)
    }

    /// All subsets of this mask in ascending mask order, `∅` first and the
    /// full mask last. Ascending order keeps failure witnesses minimal-ish.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            current: 0,
            done: false,
        }
    }
}

pub struct Subsets {
    mask: u32,
    current: u32,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        if self.done {
            return None;
        }
        let out = Coalition(self.current);
        if self.current == self.mask {
            self.done = true;
        } else {
            self.current = self.current.wrapping_sub(self.mask) & self.mask;
        }
        Some(out)
    }
}

/// A TU-game: canonical roster plus a dense worth table with `v(∅) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    roster: Vec<PlayerId>,
    worth: Vec<BigRational>,
}

fn check_roster(roster: &[PlayerId]) -> Result<(), GameError> {
    if roster.is_empty() || !roster.windows(2).all(|w| w[0] < w[1]) {
        return Err(GameError::RosterNotCanonical);
    }
    if roster.len() > MAX_PLAYERS {
        return Err(GameError::RosterTooLarge(roster.len()));
    }
    Ok(())
}

impl Game {
    pub fn new(roster: Vec<PlayerId>, worth: Vec<BigRational>) -> Result<Game, GameError> {
        check_roster(&roster)?;
        let expected = 1usize << roster.len();
        if worth.len() != expected {
            return Err(GameError::WorthTableLength {
                got: worth.len(),
                expected,
            });
        }
        if !worth[0].is_zero() {
            return Err(GameError::NonZeroEmptyWorth);
        }
        Ok(Game { roster, worth })
    }

    /// The game whose every coalition is worth zero.
    pub fn zero(roster: Vec<PlayerId>) -> Result<Game, GameError> {
        check_roster(&roster)?;
        let worth = vec![BigRational::zero(); 1 << roster.len()];
        Ok(Game { roster, worth })
    }

    /// `v(S) = scale` when `T ⊆ S`, `0` otherwise. `T` must be non-empty.
    pub fn unanimity(
        roster: Vec<PlayerId>,
        t: Coalition,
        scale: BigRational,
    ) -> Result<Game, GameError> {
        check_roster(&roster)?;
        if t.is_empty() {
            return Err(GameError::EmptyCoalition);
        }
        if !t.is_subset_of(Coalition::full(roster.len())) {
            return Err(GameError::MaskOutOfRange(t.0));
        }
        let mut worth = vec![BigRational::zero(); 1 << roster.len()];
        for (mask, slot) in worth.iter_mut().enumerate() {
            if t.is_subset_of(Coalition(mask as u32)) {
                *slot = scale.clone();
            }
        }
        Ok(Game { roster, worth })
    }

    /// Additive game built from singleton worths, one per roster member.
    pub fn additive(roster: Vec<PlayerId>, singles: Vec<BigRational>) -> Result<Game, GameError> {
        check_roster(&roster)?;
        if singles.len() != roster.len() {
            return Err(GameError::WorthTableLength {
                got: singles.len(),
                expected: roster.len(),
            });
        }
        let mut worth = vec![BigRational::zero(); 1 << roster.len()];
        for (mask, slot) in worth.iter_mut().enumerate() {
            for (pos, single) in singles.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    *slot += single;
                }
            }
        }
        Ok(Game { roster, worth })
    }

    pub fn roster(&self) -> &[PlayerId] {
        &self.roster
    }

    pub fn n(&self) -> usize {
        self.roster.len()
    }

    pub fn grand(&self) -> Coalition {
        Coalition::full(self.n())
    }

    pub fn worth(&self, c: Coalition) -> &BigRational {
        &self.worth[c.0 as usize]
    }

    pub fn worth_table(&self) -> &[BigRational] {
        &self.worth
    }

    pub fn grand_worth(&self) -> &BigRational {
        self.worth(self.grand())
    }

    /// Roster position of a player id.
    pub fn position(&self, id: PlayerId) -> Result<usize, GameError> {
        self.roster
            .binary_search(&id)
            .map_err(|_| GameError::UnknownPlayer(id.0))
    }

    pub fn player_at(&self, pos: usize) -> PlayerId {
        self.roster[pos]
    }

    /// Builds a coalition mask from player ids.
    pub fn coalition_of(&self, ids: &[PlayerId]) -> Result<Coalition, GameError> {
        let mut mask = Coalition::EMPTY;
        for &id in ids {
            mask = mask.insert(self.position(id)?);
        }
        Ok(mask)
    }

    /// Members of a coalition as player ids.
    pub fn members(&self, c: Coalition) -> Vec<PlayerId> {
        c.positions().map(|p| self.roster[p]).collect()
    }

    /// Marginal contribution `v(S ∪ {pos}) − v(S)`; `S` must avoid `pos`.
    pub fn marginal(&self, pos: usize, s: Coalition) -> BigRational {
        debug_assert!(!s.contains(pos));
        self.worth(s.insert(pos)) - self.worth(s)
    }

    /// Harsanyi dividends of every coalition, by the in-place subset Möbius
    /// sweep. Inverse of [`Game::from_dividends`].
    pub fn dividends(&self) -> DividendTable {
        let mut table = self.worth.clone();
        let n = self.n();
        for bit in 0..n {
            let b = 1usize << bit;
            for mask in 0..table.len() {
                if mask & b != 0 {
                    let low = table[mask ^ b].clone();
                    table[mask] -= low;
                }
            }
        }
        DividendTable {
            roster: self.roster.clone(),
            dividend: table,
        }
    }

    /// Reconstructs worths from dividends via the subset zeta sweep:
    /// `v(S) = Σ_{∅≠T⊆S} λ_T`.
    pub fn from_dividends(d: &DividendTable) -> Game {
        let mut table = d.dividend.clone();
        let n = d.roster.len();
        for bit in 0..n {
            let b = 1usize << bit;
            for mask in 0..table.len() {
                if mask & b != 0 {
                    let low = table[mask ^ b].clone();
                    table[mask] += low;
                }
            }
        }
        Game {
            roster: d.roster.clone(),
            worth: table,
        }
    }

    pub fn add(&self, other: &Game) -> Result<Game, GameError> {
        if self.roster != other.roster {
            return Err(GameError::RosterMismatch);
        }
        let worth = self
            .worth
            .iter()
            .zip(&other.worth)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Game {
            roster: self.roster.clone(),
            worth,
        })
    }

    pub fn sub(&self, other: &Game) -> Result<Game, GameError> {
        if self.roster != other.roster {
            return Err(GameError::RosterMismatch);
        }
        let worth = self
            .worth
            .iter()
            .zip(&other.worth)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Game {
            roster: self.roster.clone(),
            worth,
        })
    }

    pub fn scale(&self, c: &BigRational) -> Game {
        Game {
            roster: self.roster.clone(),
            worth: self.worth.iter().map(|w| w * c).collect(),
        }
    }

    /// Sub-game on `keep`: worths agree with the original on subsets of
    /// `keep`, positions are re-packed, player ids survive.
    pub fn restrict(&self, keep: Coalition) -> Result<Game, GameError> {
        if keep.is_empty() {
            return Err(GameError::EmptyCoalition);
        }
        if !keep.is_subset_of(self.grand()) {
            return Err(GameError::MaskOutOfRange(keep.0));
        }
        let old_positions: Vec<usize> = keep.positions().collect();
        let roster: Vec<PlayerId> = old_positions.iter().map(|&p| self.roster[p]).collect();
        let mut worth = Vec::with_capacity(1 << roster.len());
        for mask in 0..(1usize << roster.len()) {
            let mut old = Coalition::EMPTY;
            for (new_pos, &old_pos) in old_positions.iter().enumerate() {
                if mask & (1 << new_pos) != 0 {
                    old = old.insert(old_pos);
                }
            }
            worth.push(self.worth(old).clone());
        }
        Ok(Game { roster, worth })
    }

    /// Embeds the game into a roster extended by one fresh player who
    /// contributes nothing to any coalition.
    pub fn with_null_player(&self, id: PlayerId) -> Result<Game, GameError> {
        if self.roster.contains(&id) {
            return Err(GameError::DuplicatePlayer(id.0));
        }
        let mut roster = self.roster.clone();
        roster.push(id);
        roster.sort();
        check_roster(&roster)?;
        let new_positions: Vec<usize> = self
            .roster
            .iter()
            .map(|p| roster.binary_search(p).unwrap())
            .collect();
        let mut worth = Vec::with_capacity(1 << roster.len());
        for mask in 0..(1usize << roster.len()) {
            let mut old = Coalition::EMPTY;
            for (old_pos, &new_pos) in new_positions.iter().enumerate() {
                if mask & (1 << new_pos) != 0 {
                    old = old.insert(old_pos);
                }
            }
            worth.push(self.worth(old).clone());
        }
        Ok(Game { roster, worth })
    }
}

/// Dividend table of a game; slot `∅` is identically zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividendTable {
    roster: Vec<PlayerId>,
    dividend: Vec<BigRational>,
}

impl DividendTable {
    pub fn new(roster: Vec<PlayerId>, dividend: Vec<BigRational>) -> Result<Self, GameError> {
        check_roster(&roster)?;
        let expected = 1usize << roster.len();
        if dividend.len() != expected {
            return Err(GameError::WorthTableLength {
                got: dividend.len(),
                expected,
            });
        }
        if !dividend[0].is_zero() {
            return Err(GameError::NonZeroEmptyDividend);
        }
        Ok(DividendTable { roster, dividend })
    }

    pub fn roster(&self) -> &[PlayerId] {
        &self.roster
    }

    pub fn get(&self, c: Coalition) -> &BigRational {
        &self.dividend[c.0 as usize]
    }

    pub fn table(&self) -> &[BigRational] {
        &self.dividend
    }

    /// Coalitions with non-zero dividend, ascending by mask.
    pub fn support(&self) -> Vec<Coalition> {
        self.dividend
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(mask, _)| Coalition(mask as u32))
            .collect()
    }
}

pub fn players(ids: &[u32]) -> Vec<PlayerId> {
    ids.iter().map(|&i| PlayerId(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn two_player_game() -> Game {
        // v({1}) = 1, v({2}) = 2, v({1,2}) = 4
        Game::new(players(&[1, 2]), vec![rat(0), rat(1), rat(2), rat(4)]).unwrap()
    }

    #[test]
    fn dividends_of_zero_game_vanish() {
        let g = Game::zero(players(&[1, 2, 3])).unwrap();
        assert!(g.dividends().table().iter().all(|d| d.is_zero()));
        assert!(g.dividends().support().is_empty());
    }

    #[test]
    fn unanimity_dividend_is_the_indicator_of_t() {
        let t = Coalition::from_positions([0, 2]);
        let g = Game::unanimity(players(&[1, 2, 3]), t, rat(1)).unwrap();
        let d = g.dividends();
        for mask in 0..8u32 {
            let expected = if Coalition(mask) == t { rat(1) } else { rat(0) };
            assert_eq!(*d.get(Coalition(mask)), expected);
        }
        assert_eq!(d.support(), vec![t]);
    }

    #[test]
    fn scaled_unanimity_scales_the_dividend() {
        let t = Coalition::from_positions([0, 2]);
        let g = Game::unanimity(players(&[1, 2, 3]), t, rat(-2)).unwrap();
        assert_eq!(*g.worth(t), rat(-2));
        assert_eq!(*g.grand_worth(), rat(-2));
        assert_eq!(*g.worth(Coalition::from_positions([0, 1])), rat(0));
        assert_eq!(*g.dividends().get(t), rat(-2));
    }

    #[test]
    fn unanimity_worth_tables() {
        // T = N: only the grand coalition is worth anything
        let grand = Game::unanimity(players(&[1, 2]), Coalition::full(2), rat(1)).unwrap();
        assert_eq!(*grand.grand_worth(), rat(1));
        assert_eq!(*grand.worth(Coalition(0b01)), rat(0));
        assert_eq!(*grand.worth(Coalition(0b10)), rat(0));
        // T = {1}: every coalition containing player 1 is worth 1
        let dictator = Game::unanimity(players(&[1, 2]), Coalition::singleton(0), rat(1)).unwrap();
        assert_eq!(*dictator.worth(Coalition(0b01)), rat(1));
        assert_eq!(*dictator.worth(Coalition(0b11)), rat(1));
        assert_eq!(*dictator.worth(Coalition(0b10)), rat(0));
    }

    #[test]
    fn unanimity_rejects_empty_t() {
        assert_eq!(
            Game::unanimity(players(&[1]), Coalition::EMPTY, rat(1)).unwrap_err(),
            GameError::EmptyCoalition
        );
    }

    #[test]
    fn two_player_dividends_match_hand_computation() {
        let d = two_player_game().dividends();
        assert_eq!(*d.get(Coalition(0b01)), rat(1));
        assert_eq!(*d.get(Coalition(0b10)), rat(2));
        assert_eq!(*d.get(Coalition(0b11)), rat(1));
        assert_eq!(
            d.support(),
            vec![Coalition(0b01), Coalition(0b10), Coalition(0b11)]
        );
    }

    #[test]
    fn worths_from_dividends_inverts_dividends() {
        let g = two_player_game();
        assert_eq!(Game::from_dividends(&g.dividends()), g);
        // and the specific sum: v({1,2}) = 1 + 2 + 1
        let d = g.dividends();
        assert_eq!(*Game::from_dividends(&d).worth(Coalition(0b11)), rat(4));
    }

    #[test]
    fn dividend_table_with_single_entry_reconstructs_unanimity() {
        let roster = players(&[1, 2]);
        let mut table = vec![rat(0); 4];
        table[0b10] = rat(1);
        let d = DividendTable::new(roster.clone(), table).unwrap();
        let g = Game::from_dividends(&d);
        assert_eq!(g, Game::unanimity(roster, Coalition(0b10), rat(1)).unwrap());
    }

    #[test]
    fn algebra_is_pointwise() {
        let g = two_player_game();
        let zero = Game::zero(players(&[1, 2])).unwrap();
        assert_eq!(g.add(&zero).unwrap(), g);
        assert_eq!(g.sub(&g).unwrap(), zero);
        let u = Game::unanimity(players(&[1, 2]), Coalition(0b11), rat(1)).unwrap();
        assert_eq!(
            u.scale(&rat(2)),
            Game::unanimity(players(&[1, 2]), Coalition(0b11), rat(2)).unwrap()
        );
        let other = Game::zero(players(&[1, 3])).unwrap();
        assert_eq!(g.add(&other).unwrap_err(), GameError::RosterMismatch);
    }

    #[test]
    fn restrict_keeps_sub_worths_and_ids() {
        let t = Coalition::from_positions([0, 2]);
        let g = Game::unanimity(players(&[1, 2, 3]), t, rat(1)).unwrap();
        let r = g.restrict(t).unwrap();
        assert_eq!(r.roster(), &players(&[1, 3])[..]);
        assert_eq!(
            r,
            Game::unanimity(players(&[1, 3]), Coalition(0b11), rat(1)).unwrap()
        );
        // restricting to the full roster is the identity
        assert_eq!(g.restrict(g.grand()).unwrap(), g);
        assert_eq!(
            g.restrict(Coalition::EMPTY).unwrap_err(),
            GameError::EmptyCoalition
        );
    }

    #[test]
    fn restriction_filters_dividends() {
        let g = two_player_game();
        let extended = g.with_null_player(PlayerId(7)).unwrap();
        assert_eq!(extended.n(), 3);
        // the fresh player changes nothing
        let back = extended
            .restrict(Coalition::from_positions([0, 1]))
            .unwrap();
        assert_eq!(back, g);
        // every dividend of a coalition containing the fresh player is zero
        let d = extended.dividends();
        let fresh_pos = extended.position(PlayerId(7)).unwrap();
        for mask in 0..8u32 {
            if Coalition(mask).contains(fresh_pos) {
                assert!(d.get(Coalition(mask)).is_zero());
            }
        }
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(
            Game::new(players(&[1, 2]), vec![rat(1); 4]),
            Err(GameError::NonZeroEmptyWorth)
        ));
        assert!(matches!(
            Game::new(players(&[1, 2]), vec![rat(0); 3]),
            Err(GameError::WorthTableLength { .. })
        ));
        assert!(matches!(
            Game::new(players(&[2, 1]), vec![rat(0); 4]),
            Err(GameError::RosterNotCanonical)
        ));
    }

    #[test]
    fn additive_games_sum_singletons() {
        let g = Game::additive(players(&[1, 2, 3]), vec![rat(1), rat(2), ratio(1, 2)]).unwrap();
        assert_eq!(*g.worth(Coalition::from_positions([0, 2])), ratio(3, 2));
        assert_eq!(*g.grand_worth(), ratio(7, 2));
        let d = g.dividends();
        assert_eq!(d.support().len(), 3);
    }

    #[test]
    fn subset_iterator_covers_the_lattice() {
        let mask = Coalition::from_positions([0, 2, 3]);
        let subs: Vec<Coalition> = mask.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], Coalition::EMPTY);
        assert_eq!(*subs.last().unwrap(), mask);
        assert!(subs.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(subs.iter().all(|s| s.is_subset_of(mask)));
    }
}
