//! The on-disk game file format and report building blocks.
//!
//! A game file is a single JSON document: player ids, the structure as a
//! list of id lists, and either a `worths` or a `dividends` block keyed by
//! comma-joined ascending id strings. Omitted coalitions are worth zero.
//! Numbers are exact rational strings; decimals are parsed by integer
//! scaling. Serialization is canonical (sorted keys, zero entries omitted),
//! so equal games produce byte-identical documents.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{Coalition, DividendTable, Game, GameError, PlayerId};
use crate::rational::{format_rational, parse_rational, NumberError};
use crate::structure::{CoalitionStructure, CsGame, StructureError};
use crate::values::{ValueError, Weights};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate player id {0}")]
    DuplicatePlayer(u32),
    #[error("coalition key `{0}` mentions unknown player id {1}")]
    UnknownIdInKey(String, u32),
    #[error("structure mentions unknown player id {0}")]
    UnknownIdInStructure(u32),
    #[error("weights mention unknown player id {0}")]
    UnknownIdInWeights(u32),
    #[error("a game file may carry worths or dividends, not both")]
    BothWorthsAndDividends,
    #[error("malformed coalition key `{0}`")]
    MalformedKey(String),
    #[error("coalition key `{0}` names the same player twice")]
    DuplicateInKey(String),
    #[error("empty coalitions may not be listed; their worth is fixed at 0")]
    EmptyCoalitionKey,
    #[error("distinguished union does not match any structure block")]
    DistinguishedUnionMismatch,
    #[error("bad number: {0}")]
    Number(#[from] NumberError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Value(#[from] ValueError),
}

/// Wire form of one CS-game, optionally with rule parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFileDoc {
    pub players: Vec<u32>,
    pub structure: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worths: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dividends: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished_union: Option<Vec<u32>>,
}

/// Optional parameters carried alongside a parsed game.
#[derive(Debug, Clone, Default)]
pub struct GameFileParams {
    pub weights: Option<Weights>,
    pub distinguished_union: Option<usize>,
}

fn parse_key(key: &str, roster: &[PlayerId]) -> Result<Coalition, FormatError> {
    if key.trim().is_empty() {
        return Err(FormatError::EmptyCoalitionKey);
    }
    let mut mask = Coalition::EMPTY;
    for part in key.split(',') {
        let id: u32 = part
            .trim()
            .parse()
            .map_err(|_| FormatError::MalformedKey(key.to_owned()))?;
        let pos = roster
            .binary_search(&PlayerId(id))
            .map_err(|_| FormatError::UnknownIdInKey(key.to_owned(), id))?;
        if mask.contains(pos) {
            return Err(FormatError::DuplicateInKey(key.to_owned()));
        }
        mask = mask.insert(pos);
    }
    Ok(mask)
}

fn coalition_key(game: &Game, c: Coalition) -> String {
    let ids: Vec<String> = game.members(c).iter().map(|p| p.0.to_string()).collect();
    ids.join(",")
}

/// Parses a game file into an exact CS-game plus optional parameters.
pub fn parse_game_file(text: &str) -> Result<(CsGame, GameFileParams), FormatError> {
    let doc: GameFileDoc = serde_json::from_str(text)?;
    from_doc(&doc)
}

pub fn from_doc(doc: &GameFileDoc) -> Result<(CsGame, GameFileParams), FormatError> {
    let mut roster: Vec<PlayerId> = doc.players.iter().map(|&id| PlayerId(id)).collect();
    roster.sort();
    if let Some(dup) = roster.windows(2).find(|w| w[0] == w[1]) {
        return Err(FormatError::DuplicatePlayer(dup[0].0));
    }

    let blocks: Vec<Coalition> = doc
        .structure
        .iter()
        .map(|ids| {
            let mut mask = Coalition::EMPTY;
            for &id in ids {
                let pos = roster
                    .binary_search(&PlayerId(id))
                    .map_err(|_| FormatError::UnknownIdInStructure(id))?;
                mask = mask.insert(pos);
            }
            Ok(mask)
        })
        .collect::<Result<_, FormatError>>()?;
    let structure = CoalitionStructure::new(blocks, roster.len())?;

    let game = match (&doc.worths, &doc.dividends) {
        (Some(_), Some(_)) => return Err(FormatError::BothWorthsAndDividends),
        (Some(worths), None) => {
            let mut table = vec![BigRational::zero(); 1 << roster.len()];
            for (key, value) in worths {
                let mask = parse_key(key, &roster)?;
                table[mask.0 as usize] = parse_rational(value)?;
            }
            Game::new(roster.clone(), table)?
        }
        (None, Some(dividends)) => {
            let mut table = vec![BigRational::zero(); 1 << roster.len()];
            for (key, value) in dividends {
                let mask = parse_key(key, &roster)?;
                table[mask.0 as usize] = parse_rational(value)?;
            }
            Game::from_dividends(&DividendTable::new(roster.clone(), table)?)
        }
        (None, None) => Game::zero(roster.clone())?,
    };

    let weights = doc
        .weights
        .as_ref()
        .map(|entries| {
            let mut map = BTreeMap::new();
            for (key, value) in entries {
                let id: u32 = key
                    .trim()
                    .parse()
                    .map_err(|_| FormatError::MalformedKey(key.clone()))?;
                if roster.binary_search(&PlayerId(id)).is_err() {
                    return Err(FormatError::UnknownIdInWeights(id));
                }
                map.insert(id, parse_rational(value)?);
            }
            Weights::new(map).map_err(FormatError::from)
        })
        .transpose()?;

    let cs = CsGame::new(game, structure)?;
    let distinguished_union = doc
        .distinguished_union
        .as_ref()
        .map(|ids| {
            let mut mask = Coalition::EMPTY;
            for &id in ids {
                let pos = cs
                    .game
                    .position(PlayerId(id))
                    .map_err(|_| FormatError::UnknownIdInStructure(id))?;
                mask = mask.insert(pos);
            }
            cs.structure
                .blocks()
                .iter()
                .position(|&b| b == mask)
                .ok_or(FormatError::DistinguishedUnionMismatch)
        })
        .transpose()?;

    Ok((
        cs,
        GameFileParams {
            weights,
            distinguished_union,
        },
    ))
}

/// Canonical document for a CS-game: ascending ids, worths only, zero
/// entries omitted.
pub fn to_doc(cs: &CsGame) -> GameFileDoc {
    let players: Vec<u32> = cs.game.roster().iter().map(|p| p.0).collect();
    let structure: Vec<Vec<u32>> = cs
        .structure
        .blocks()
        .iter()
        .map(|&b| cs.game.members(b).iter().map(|p| p.0).collect())
        .collect();
    let mut worths = BTreeMap::new();
    for mask in 1..(1u32 << cs.n()) {
        let c = Coalition(mask);
        let w = cs.game.worth(c);
        if !w.is_zero() {
            worths.insert(coalition_key(&cs.game, c), format_rational(w));
        }
    }
    GameFileDoc {
        players,
        structure,
        worths: Some(worths),
        dividends: None,
        weights: None,
        distinguished_union: None,
    }
}

/// Canonical text form (pretty JSON, stable key order).
pub fn to_canonical_string(doc: &GameFileDoc) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::players;
    use crate::rational::{rat, ratio};

    #[test]
    fn parses_the_unanimity_example() {
        let text = r#"{
            "players": [1, 2, 3],
            "structure": [[1, 2], [3]],
            "worths": {"1,3": "1", "1,2,3": "1"}
        }"#;
        let (cs, params) = parse_game_file(text).unwrap();
        let expected = Game::unanimity(
            players(&[1, 2, 3]),
            Coalition::from_positions([0, 2]),
            rat(1),
        )
        .unwrap();
        assert_eq!(cs.game, expected);
        assert_eq!(cs.m(), 2);
        assert!(params.weights.is_none());
    }

    #[test]
    fn dividends_block_routes_through_reconstruction() {
        let text = r#"{
            "players": [1, 2, 3],
            "structure": [[1, 2, 3]],
            "dividends": {"1,2,3": "-2"}
        }"#;
        let (cs, _) = parse_game_file(text).unwrap();
        let expected = Game::unanimity(players(&[1, 2, 3]), Coalition::full(3), rat(-2)).unwrap();
        assert_eq!(cs.game, expected);
    }

    #[test]
    fn decimal_worths_are_exact() {
        let text = r#"{
            "players": [1],
            "structure": [[1]],
            "worths": {"1": "0.5"}
        }"#;
        let (cs, _) = parse_game_file(text).unwrap();
        assert_eq!(*cs.game.worth(Coalition(0b1)), ratio(1, 2));
    }

    #[test]
    fn rejects_malformed_documents() {
        let dup = r#"{"players": [1, 1], "structure": [[1]], "worths": {}}"#;
        assert!(matches!(
            parse_game_file(dup).unwrap_err(),
            FormatError::DuplicatePlayer(1)
        ));

        let not_partition = r#"{"players": [1, 2], "structure": [[1]], "worths": {}}"#;
        assert!(matches!(
            parse_game_file(not_partition).unwrap_err(),
            FormatError::Structure(_)
        ));

        let unknown = r#"{"players": [1, 2], "structure": [[1, 2]], "worths": {"3": "1"}}"#;
        assert!(matches!(
            parse_game_file(unknown).unwrap_err(),
            FormatError::UnknownIdInKey(_, 3)
        ));

        let both = r#"{"players": [1], "structure": [[1]], "worths": {}, "dividends": {}}"#;
        assert!(matches!(
            parse_game_file(both).unwrap_err(),
            FormatError::BothWorthsAndDividends
        ));

        let bad_number = r#"{"players": [1], "structure": [[1]], "worths": {"1": "one"}}"#;
        assert!(matches!(
            parse_game_file(bad_number).unwrap_err(),
            FormatError::Number(_)
        ));

        let empty_key = r#"{"players": [1], "structure": [[1]], "worths": {"": "1"}}"#;
        assert!(matches!(
            parse_game_file(empty_key).unwrap_err(),
            FormatError::EmptyCoalitionKey
        ));

        let repeated = r#"{"players": [1, 2], "structure": [[1, 2]], "worths": {"1,1": "1"}}"#;
        assert!(matches!(
            parse_game_file(repeated).unwrap_err(),
            FormatError::DuplicateInKey(_)
        ));
    }

    #[test]
    fn weights_and_distinguished_union_parse() {
        let text = r#"{
            "players": [1, 2],
            "structure": [[1], [2]],
            "worths": {"1,2": "1"},
            "weights": {"1": "1", "2": "1/2"},
            "distinguished_union": [2]
        }"#;
        let (_, params) = parse_game_file(text).unwrap();
        let w = params.weights.unwrap();
        assert_eq!(*w.get(PlayerId(2)).unwrap(), ratio(1, 2));
        assert_eq!(params.distinguished_union, Some(1));
    }

    #[test]
    fn canonical_roundtrip_is_identity() {
        let text = r#"{
            "players": [1, 2, 3],
            "structure": [[1, 2], [3]],
            "worths": {"1,3": "1", "1,2,3": "1", "2": "0"}
        }"#;
        let (cs, _) = parse_game_file(text).unwrap();
        let canonical = to_canonical_string(&to_doc(&cs));
        let (cs2, _) = parse_game_file(&canonical).unwrap();
        assert_eq!(cs, cs2);
        assert_eq!(canonical, to_canonical_string(&to_doc(&cs2)));
    }
}
