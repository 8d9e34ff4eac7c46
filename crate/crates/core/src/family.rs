//! Deterministic game families for axiom checking.
//!
//! A family is hand-built fixtures first (so stored witnesses are found
//! before anything else), then exhaustive enumerations of small dividend
//! lattices, then seeded random draws. Two-game axioms run on a pair list
//! built from fixture pairs, self pairs and structured perturbations
//! `(v, v + c·u_T)`; unrelated random pairs almost never satisfy the
//! difference-game hypotheses, so perturbations are what makes them
//! non-vacuous.

use num::rational::BigRational;
use num::{BigInt, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{players, Coalition, Game, GameError};
use crate::rational::rat;
use crate::structure::{all_partitions, CoalitionStructure, CsGame, StructureError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family roster size must be between 1 and {max}, got {got}", max = MAX_FAMILY_PLAYERS)]
    RosterSize { got: usize },
    #[error("dividend value set must be non-empty")]
    EmptyDividendSet,
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Enumeration cap for axiom families.
pub const MAX_FAMILY_PLAYERS: usize = 6;

/// Parameters of the deterministic default family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub max_players: usize,
    pub dividend_values: Vec<BigRational>,
    pub samples: usize,
    pub seed: u64,
}

impl Default for FamilySpec {
    fn default() -> Self {
        FamilySpec {
            max_players: 4,
            dividend_values: vec![rat(-1), rat(0), rat(1), rat(2)],
            samples: 600,
            seed: 42,
        }
    }
}

impl FamilySpec {
    pub fn describe(&self) -> String {
        let values: Vec<String> = self
            .dividend_values
            .iter()
            .map(crate::rational::format_rational)
            .collect();
        format!(
            "n<={} dividends{{{}}} samples={} seed={}",
            self.max_players,
            values.join(","),
            self.samples,
            self.seed
        )
    }
}

/// A finite list of CS-games plus a list of structure-sharing game pairs.
#[derive(Debug, Clone)]
pub struct GameFamily {
    pub description: String,
    pub seed: u64,
    pub singles: Vec<CsGame>,
    pub pairs: Vec<(CsGame, CsGame)>,
}

fn unanimity_cs(ids: &[u32], t_positions: &[usize], scale: i64, blocks: Vec<Coalition>) -> CsGame {
    let n = ids.len();
    let game = Game::unanimity(
        players(ids),
        Coalition::from_positions(t_positions.iter().copied()),
        rat(scale),
    )
    .expect("fixture");
    CsGame::new(game, CoalitionStructure::new(blocks, n).expect("fixture")).expect("fixture")
}

fn blocks_12_3() -> Vec<Coalition> {
    vec![Coalition::from_positions([0, 1]), Coalition::singleton(2)]
}

fn blocks_12_34() -> Vec<Coalition> {
    vec![
        Coalition::from_positions([0, 1]),
        Coalition::from_positions([2, 3]),
    ]
}

/// Majority game on three players: worth 1 for every coalition of size at
/// least two. All player pairs are symmetric, no cross pair over
/// `{{1,2},{3}}` is mutually dependent, and the two unions are not symmetric
/// in the quotient. This is the stored witness showing pairwise cross-union
/// symmetry does not force equal union totals under the Owen value.
pub fn majority_three() -> CsGame {
    let mut worth = vec![rat(0); 8];
    for mask in 1..8u32 {
        if Coalition(mask).len() >= 2 {
            worth[mask as usize] = rat(1);
        }
    }
    let game = Game::new(players(&[1, 2, 3]), worth).expect("fixture");
    CsGame::new(
        game,
        CoalitionStructure::new(blocks_12_3(), 3).expect("fixture"),
    )
    .expect("fixture")
}

/// Hand-built single-game fixtures. Order matters: stored witnesses come
/// first so the checkers report them rather than some enumeration artifact.
pub fn fixtures() -> Vec<CsGame> {
    // stored witnesses first
    let mut out = vec![
        unanimity_cs(&[1, 2, 3], &[0, 2], 1, blocks_12_3()),
        unanimity_cs(&[1, 2, 3], &[0, 1, 2], 1, blocks_12_3()),
        majority_three(),
        unanimity_cs(&[1, 2], &[0, 1], 1, vec![Coalition::full(2)]),
        unanimity_cs(&[1, 2], &[0], 1, vec![Coalition::full(2)]),
    ];
    // zero games and a lone player
    out.push(
        CsGame::new(
            Game::zero(players(&[1, 2, 3])).expect("fixture"),
            CoalitionStructure::new(blocks_12_3(), 3).expect("fixture"),
        )
        .expect("fixture"),
    );
    out.push(
        CsGame::new(
            Game::zero(players(&[1])).expect("fixture"),
            CoalitionStructure::grand(1),
        )
        .expect("fixture"),
    );
    out.push(
        CsGame::new(
            Game::new(players(&[1]), vec![rat(0), rat(7)]).expect("fixture"),
            CoalitionStructure::grand(1),
        )
        .expect("fixture"),
    );
    // every unanimity game for n = 2 and n = 3 under every partition
    for n in [2usize, 3] {
        let ids: Vec<u32> = (1..=n as u32).collect();
        for structure in all_partitions(n) {
            for mask in 1..(1u32 << n) {
                let game =
                    Game::unanimity(players(&ids), Coalition(mask), rat(1)).expect("fixture");
                out.push(CsGame::new(game, structure.clone()).expect("fixture"));
            }
        }
    }
    // additive games, equal and unequal singletons
    for singles in [vec![rat(1), rat(1), rat(1)], vec![rat(1), rat(2), rat(3)]] {
        let game = Game::additive(players(&[1, 2, 3]), singles).expect("fixture");
        for structure in [
            CoalitionStructure::new(blocks_12_3(), 3).expect("fixture"),
            CoalitionStructure::singletons(3),
        ] {
            out.push(CsGame::new(game.clone(), structure).expect("fixture"));
        }
    }
    // a negatively scaled unanimity game
    out.push(unanimity_cs(&[1, 2, 3], &[0, 2], -2, blocks_12_3()));
    // four-player shapes
    out.push(unanimity_cs(&[1, 2, 3, 4], &[0, 2], 1, blocks_12_34()));
    out.push(unanimity_cs(&[1, 2, 3, 4], &[0, 1, 2], 1, blocks_12_34()));
    out.push(unanimity_cs(
        &[1, 2, 3, 4],
        &[0, 1, 2, 3],
        1,
        blocks_12_34(),
    ));
    out.push(unanimity_cs(
        &[1, 2, 3, 4],
        &[0, 1, 2, 3],
        1,
        vec![
            Coalition::singleton(0),
            Coalition::from_positions([1, 2, 3]),
        ],
    ));
    out
}

/// Hand-built pairs sharing roster and structure; the stored two-game
/// witnesses come first.
pub fn pair_fixtures() -> Vec<(CsGame, CsGame)> {
    let mut out = Vec::new();
    let singles2 = CoalitionStructure::singletons(2);
    let grand2 = CoalitionStructure::grand(2);
    let ids2 = players(&[1, 2]);

    let u1 = Game::unanimity(ids2.clone(), Coalition::singleton(0), rat(1)).expect("fixture");
    let u2 = Game::unanimity(ids2.clone(), Coalition::singleton(1), rat(1)).expect("fixture");
    let u12 = Game::unanimity(ids2.clone(), Coalition::full(2), rat(1)).expect("fixture");

    // additivity witness pair under singletons
    out.push((
        CsGame::new(u1.clone(), singles2.clone()).expect("fixture"),
        CsGame::new(u12.clone(), singles2.clone()).expect("fixture"),
    ));
    // within-union difference pair whose singleton worths split
    out.push((
        CsGame::new(u2.add(&u12).expect("fixture"), grand2.clone()).expect("fixture"),
        CsGame::new(u2.clone(), grand2.clone()).expect("fixture"),
    ));
    // grand unanimity against the zero game over an unbalanced partition
    let zero3 = Game::zero(players(&[1, 2, 3])).expect("fixture");
    out.push((
        unanimity_cs(&[1, 2, 3], &[0, 1, 2], 1, blocks_12_3()),
        CsGame::new(
            zero3,
            CoalitionStructure::new(blocks_12_3(), 3).expect("fixture"),
        )
        .expect("fixture"),
    ));
    // dictator against zero inside one union
    out.push((
        CsGame::new(u1.clone(), grand2.clone()).expect("fixture"),
        CsGame::new(Game::zero(ids2.clone()).expect("fixture"), grand2.clone()).expect("fixture"),
    ));
    // equal-size-union pair with matching union identities
    out.push((
        unanimity_cs(&[1, 2, 3, 4], &[0, 2], 1, blocks_12_34()),
        unanimity_cs(&[1, 2, 3, 4], &[0, 1, 2], 1, blocks_12_34()),
    ));
    // unanimity target widened by the unions it touches
    out.push((
        unanimity_cs(&[1, 2, 3], &[0, 2], 1, blocks_12_3()),
        unanimity_cs(&[1, 2, 3], &[0, 1, 2], 1, blocks_12_3()),
    ));
    out.push((
        unanimity_cs(&[1, 2, 3], &[0, 2], -2, blocks_12_3()),
        unanimity_cs(&[1, 2, 3], &[0, 1, 2], -2, blocks_12_3()),
    ));
    // self pairs keep invariance hypotheses non-vacuous
    for f in fixtures().into_iter().take(8) {
        out.push((f.clone(), f));
    }
    out
}

fn index_to_dividends(index: usize, slots: usize, values: &[BigRational]) -> Vec<BigRational> {
    let base = values.len();
    let mut rest = index;
    let mut out = Vec::with_capacity(slots + 1);
    out.push(BigRational::zero());
    for _ in 0..slots {
        out.push(values[rest % base].clone());
        rest /= base;
    }
    out
}

/// Every game over `n` players whose non-empty coalition dividends all lie
/// in `values`, paired with every partition of the roster.
pub fn exhaustive_singles(n: usize, values: &[BigRational]) -> Result<Vec<CsGame>, FamilyError> {
    if n == 0 || n > MAX_FAMILY_PLAYERS {
        return Err(FamilyError::RosterSize { got: n });
    }
    if values.is_empty() {
        return Err(FamilyError::EmptyDividendSet);
    }
    let ids: Vec<u32> = (1..=n as u32).collect();
    let roster = players(&ids);
    let slots = (1usize << n) - 1;
    let total = values.len().pow(slots as u32);
    let partitions = all_partitions(n);
    let mut out = Vec::with_capacity(total * partitions.len());
    for index in 0..total {
        let table = index_to_dividends(index, slots, values);
        let dividends = crate::game::DividendTable::new(roster.clone(), table)?;
        let game = Game::from_dividends(&dividends);
        for structure in &partitions {
            out.push(CsGame::new(game.clone(), structure.clone())?);
        }
    }
    Ok(out)
}

/// Seeded random game on `1..=n` with dividends drawn from `values` and a
/// random partition.
pub fn random_single(
    n: usize,
    values: &[BigRational],
    partitions: &[CoalitionStructure],
    rng: &mut ChaCha8Rng,
) -> CsGame {
    let ids: Vec<u32> = (1..=n as u32).collect();
    let roster = players(&ids);
    let mut table = vec![BigRational::zero(); 1 << n];
    for slot in table.iter_mut().skip(1) {
        *slot = values[rng.gen_range(0..values.len())].clone();
    }
    let dividends = crate::game::DividendTable::new(roster, table).expect("table is well-formed");
    let game = Game::from_dividends(&dividends);
    let structure = partitions[rng.gen_range(0..partitions.len())].clone();
    CsGame::new(game, structure).expect("partition matches roster")
}

/// Seeded random game with small-fraction dividends.
pub fn random_rational_single(
    n: usize,
    partitions: &[CoalitionStructure],
    rng: &mut ChaCha8Rng,
) -> CsGame {
    let ids: Vec<u32> = (1..=n as u32).collect();
    let roster = players(&ids);
    let mut table = vec![BigRational::zero(); 1 << n];
    for slot in table.iter_mut().skip(1) {
        let numer = rng.gen_range(-3i64..=3);
        let denom = rng.gen_range(1i64..=4);
        *slot = BigRational::new(BigInt::from(numer), BigInt::from(denom));
    }
    let dividends = crate::game::DividendTable::new(roster, table).expect("table is well-formed");
    let game = Game::from_dividends(&dividends);
    let structure = partitions[rng.gen_range(0..partitions.len())].clone();
    CsGame::new(game, structure).expect("partition matches roster")
}

fn theorem_style_pairs(max_players: usize) -> Vec<(CsGame, CsGame)> {
    // (α·u_T, α·u_T₁) where T₁ widens T by every touched union except the
    // one holding T's smallest member, plus the further widening by that
    // union itself
    let mut out = Vec::new();
    for n in 3..=max_players.min(4) {
        let ids: Vec<u32> = (1..=n as u32).collect();
        let roster = players(&ids);
        for structure in all_partitions(n) {
            if structure.len() < 2 {
                continue;
            }
            for mask in 1..(1u32 << n) {
                let t = Coalition(mask);
                if t.len() < 2 || structure.meeting_count(t) < 2 {
                    continue;
                }
                let anchor = structure.block_of(t.positions().next().unwrap());
                let mut t1 = t;
                for (p, &b) in structure.blocks().iter().enumerate() {
                    if p != anchor && b.intersects(t) {
                        t1 = t1.union(b);
                    }
                }
                let t2 = t1.union(structure.blocks()[anchor]);
                for scale in [rat(1), rat(-2)] {
                    let v = Game::unanimity(roster.clone(), t, scale.clone()).expect("mask ok");
                    let w1 = Game::unanimity(roster.clone(), t1, scale.clone()).expect("mask ok");
                    let w2 = Game::unanimity(roster.clone(), t2, scale).expect("mask ok");
                    out.push((
                        CsGame::new(v, structure.clone()).expect("roster ok"),
                        CsGame::new(w1.clone(), structure.clone()).expect("roster ok"),
                    ));
                    if t2 != t1 {
                        out.push((
                            CsGame::new(w1, structure.clone()).expect("roster ok"),
                            CsGame::new(w2, structure.clone()).expect("roster ok"),
                        ));
                    }
                }
                // one configuration per (partition, anchor) is plenty
                break;
            }
        }
    }
    out
}

/// Builds the deterministic default family: fixtures, exhaustive small
/// lattices, seeded draws, then the pair list.
pub fn generate_family(spec: &FamilySpec) -> Result<GameFamily, FamilyError> {
    if spec.max_players == 0 || spec.max_players > MAX_FAMILY_PLAYERS {
        return Err(FamilyError::RosterSize {
            got: spec.max_players,
        });
    }
    if spec.dividend_values.is_empty() {
        return Err(FamilyError::EmptyDividendSet);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let binary = vec![rat(0), rat(1)];

    let mut singles: Vec<CsGame> = fixtures()
        .into_iter()
        .filter(|cs| cs.n() <= spec.max_players)
        .collect();
    singles.extend(exhaustive_singles(1, &binary)?);
    if spec.max_players >= 2 {
        singles.extend(exhaustive_singles(2, &spec.dividend_values)?);
    }
    if spec.max_players >= 3 {
        singles.extend(exhaustive_singles(3, &binary)?);
    }
    let mut partition_cache: Vec<Vec<CoalitionStructure>> = Vec::new();
    for n in 0..=spec.max_players {
        partition_cache.push(if n == 0 {
            Vec::new()
        } else {
            all_partitions(n)
        });
    }
    for _ in 0..spec.samples {
        let n = rng.gen_range(2..=spec.max_players);
        singles.push(random_single(
            n,
            &spec.dividend_values,
            &partition_cache[n],
            &mut rng,
        ));
    }
    for _ in 0..spec.samples / 4 {
        let n = spec.max_players;
        singles.push(random_rational_single(n, &partition_cache[n], &mut rng));
    }

    let mut pairs: Vec<(CsGame, CsGame)> = pair_fixtures()
        .into_iter()
        .filter(|(a, _)| a.n() <= spec.max_players)
        .collect();
    pairs.extend(theorem_style_pairs(spec.max_players));
    // structured perturbations over a deterministic slice of the singles
    let stride = (singles.len() / 240).max(1);
    let scales = [rat(1), rat(-1), rat(2)];
    for (k, base) in singles.iter().step_by(stride).enumerate() {
        let n = base.n();
        let mask = 1 + (rng.gen_range(0..((1u32 << n) - 1)));
        let delta = Game::unanimity(
            base.game.roster().to_vec(),
            Coalition(mask),
            scales[k % scales.len()].clone(),
        )
        .expect("mask is in range");
        let shifted = base.game.add(&delta)?;
        pairs.push((base.clone(), CsGame::new(shifted, base.structure.clone())?));
    }

    Ok(GameFamily {
        description: format!(
            "fixtures + exhaustive lattices + seeded draws ({}): {} games, {} pairs",
            spec.describe(),
            singles.len(),
            pairs.len()
        ),
        seed: spec.seed,
        singles,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_count_matches_lattice_size() {
        // 2^7 dividend vectors × 5 partitions
        let family = exhaustive_singles(3, &[rat(0), rat(1)]).unwrap();
        assert_eq!(family.len(), 640);
    }

    #[test]
    fn single_player_family() {
        let family = exhaustive_singles(1, &[rat(0), rat(1)]).unwrap();
        assert_eq!(family.len(), 2);
        assert!(family.iter().all(|cs| cs.n() == 1 && cs.m() == 1));
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = FamilySpec {
            samples: 50,
            ..FamilySpec::default()
        };
        let a = generate_family(&spec).unwrap();
        let b = generate_family(&spec).unwrap();
        assert_eq!(a.singles, b.singles);
        assert_eq!(a.pairs, b.pairs);
    }

    #[test]
    fn different_seeds_differ() {
        let a = generate_family(&FamilySpec {
            samples: 50,
            seed: 1,
            ..FamilySpec::default()
        })
        .unwrap();
        let b = generate_family(&FamilySpec {
            samples: 50,
            seed: 2,
            ..FamilySpec::default()
        })
        .unwrap();
        assert_ne!(a.singles, b.singles);
    }

    #[test]
    fn requested_sample_count_is_respected() {
        let spec = FamilySpec {
            samples: 200,
            ..FamilySpec::default()
        };
        let base = generate_family(&FamilySpec {
            samples: 0,
            ..spec.clone()
        })
        .unwrap();
        let grown = generate_family(&spec).unwrap();
        assert_eq!(grown.singles.len() - base.singles.len(), 200 + 200 / 4);
    }

    #[test]
    fn pairs_share_roster_and_structure() {
        let family = generate_family(&FamilySpec {
            samples: 40,
            ..FamilySpec::default()
        })
        .unwrap();
        for (a, b) in &family.pairs {
            assert_eq!(a.game.roster(), b.game.roster());
            assert_eq!(a.structure, b.structure);
        }
    }

    #[test]
    fn rejects_oversized_rosters() {
        assert!(matches!(
            generate_family(&FamilySpec {
                max_players: 9,
                ..FamilySpec::default()
            }),
            Err(FamilyError::RosterSize { got: 9 })
        ));
    }
}
