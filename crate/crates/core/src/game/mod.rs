//! Finite normal-form games with a shared action set and exact payoffs.
//!
//! Profiles are indexed in mixed radix with player 0 as the most significant
//! digit, so index order is lexicographic order on profiles. Payoffs are
//! interned: each cell stores the id of a distinct rational, and ids are
//! assigned in cell order, so two games are equal iff their tables are.

mod file;
mod profile;

use std::collections::HashMap;

pub use file::{parse_game, parse_rational, serialize_game};
pub use profile::{
    act, commutative_image, extend, restrict, witness_permutation, CommutativeImage, Profile,
    ReducedProfile,
};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub type Payoff = BigRational;

/// Largest table the dense representation accepts (profiles × players).
pub const MAX_CELLS: usize = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Game {
    players: usize,
    actions: Vec<String>,
    values: Vec<Payoff>,
    cells: Vec<u32>,
    strides: Vec<usize>,
}

impl Game {
    /// Builds a game from a dense table, `table[p]` being the payoff vector of
    /// the profile with index `p`.
    pub fn new(players: usize, actions: Vec<String>, table: Vec<Vec<Payoff>>) -> Result<Self> {
        let s = actions.len();
        if players < 2 {
            return Err(Error::InvalidGame(format!("need at least 2 players, got {players}")));
        }
        if s < 2 {
            return Err(Error::InvalidGame(format!("need at least 2 actions, got {s}")));
        }
        for (k, name) in actions.iter().enumerate() {
            if name.is_empty() || name.contains(',') || name.trim() != name {
                return Err(Error::InvalidGame(format!("invalid action name {name:?}")));
            }
            if actions[..k].contains(name) {
                return Err(Error::InvalidGame(format!("duplicate action name {name:?}")));
            }
        }
        let num_profiles = profile_count(players, s)
            .filter(|&p| p.saturating_mul(players) <= MAX_CELLS)
            .ok_or_else(|| Error::InvalidGame(format!("{s}^{players} profiles is too large")))?;
        if table.len() != num_profiles {
            return Err(Error::SizeMismatch {
                expected: num_profiles,
                found: table.len(),
            });
        }
        let mut ids: HashMap<Payoff, u32> = HashMap::new();
        let mut values = Vec::new();
        let mut cells = Vec::with_capacity(num_profiles * players);
        for row in table {
            if row.len() != players {
                return Err(Error::SizeMismatch {
                    expected: players,
                    found: row.len(),
                });
            }
            for v in row {
                let id = *ids.entry(v.clone()).or_insert_with(|| {
                    values.push(v);
                    (values.len() - 1) as u32
                });
                cells.push(id);
            }
        }
        let mut strides = vec![1; players];
        for k in (0..players - 1).rev() {
            strides[k] = strides[k + 1] * s;
        }
        Ok(Game {
            players,
            actions,
            values,
            cells,
            strides,
        })
    }

    /// Builds a game by evaluating `f` on every profile in index order.
    pub fn from_fn<F>(players: usize, actions: Vec<String>, mut f: F) -> Result<Self>
    where
        F: FnMut(&Profile) -> Vec<Payoff>,
    {
        let s = actions.len();
        let count = profile_count(players, s)
            .filter(|&p| p <= MAX_CELLS)
            .ok_or_else(|| Error::InvalidGame(format!("{s}^{players} profiles is too large")))?;
        let mut table = Vec::with_capacity(count);
        let mut coords = vec![0; players];
        for idx in 0..count {
            decode(idx, s, &mut coords);
            table.push(f(&Profile::new(coords.clone())));
        }
        Game::new(players, actions, table)
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn num_actions(&self) -> usize {
        self.actions.len()
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    pub fn num_profiles(&self) -> usize {
        self.cells.len() / self.players
    }

    pub fn action_index(&self, name: &str) -> Option<usize> {
        self.actions.iter().position(|a| a == name)
    }

    /// Profiles in index (lexicographic) order.
    pub fn profiles(&self) -> impl Iterator<Item = Profile> + '_ {
        (0..self.num_profiles()).map(move |idx| self.profile_at(idx))
    }

    pub fn profile_at(&self, idx: usize) -> Profile {
        let mut coords = vec![0; self.players];
        self.decode_into(idx, &mut coords);
        Profile::new(coords)
    }

    #[inline]
    pub fn decode_into(&self, idx: usize, out: &mut [usize]) {
        decode(idx, self.num_actions(), out)
    }

    pub fn profile_index(&self, a: &Profile) -> Result<usize> {
        if a.len() != self.players {
            return Err(Error::SizeMismatch {
                expected: self.players,
                found: a.len(),
            });
        }
        let s = self.num_actions();
        let mut idx = 0;
        for &x in a.coords() {
            if x >= s {
                return Err(Error::IndexOutOfRange { index: x, bound: s });
            }
            idx = idx * s + x;
        }
        Ok(idx)
    }

    #[inline]
    pub fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().fold(0, |acc, &x| acc * self.num_actions() + x)
    }

    /// Index of the action player `player` takes in profile `idx`.
    #[inline]
    pub fn digit(&self, idx: usize, player: usize) -> usize {
        (idx / self.strides[player]) % self.num_actions()
    }

    /// Index of `profile_at(idx)·σ`, without materializing the profile.
    #[inline]
    pub fn act_index(&self, idx: usize, sigma: &Permutation) -> usize {
        (0..self.players)
            .map(|k| self.digit(idx, sigma.apply(k)) * self.strides[k])
            .sum()
    }

    /// Interned id of `π_player` at profile `idx`; equal ids iff equal payoffs.
    #[inline]
    pub fn payoff_id(&self, idx: usize, player: usize) -> u32 {
        self.cells[idx * self.players + player]
    }

    pub fn value(&self, id: u32) -> &Payoff {
        &self.values[id as usize]
    }

    /// Payoff of `player` at profile index `idx`.
    #[inline]
    pub fn payoff_at(&self, idx: usize, player: usize) -> &Payoff {
        self.value(self.payoff_id(idx, player))
    }

    pub fn payoff(&self, a: &Profile) -> Result<Vec<Payoff>> {
        let idx = self.profile_index(a)?;
        Ok((0..self.players).map(|i| self.payoff_at(idx, i).clone()).collect())
    }

    pub fn payoff_of(&self, player: usize, a: &Profile) -> Result<&Payoff> {
        if player >= self.players {
            return Err(Error::IndexOutOfRange {
                index: player,
                bound: self.players,
            });
        }
        let idx = self.profile_index(a)?;
        Ok(self.payoff_at(idx, player))
    }

    /// The full table, one payoff vector per profile index.
    pub fn to_table(&self) -> Vec<Vec<Payoff>> {
        self.cells
            .chunks(self.players)
            .map(|row| row.iter().map(|&id| self.value(id).clone()).collect())
            .collect()
    }

    /// `(a,b,c)` using action names.
    pub fn format_profile(&self, a: &Profile) -> String {
        format!("({})", self.profile_key(a))
    }

    /// `a,b,c` using action names, as in game file keys.
    pub fn profile_key(&self, a: &Profile) -> String {
        a.coords()
            .iter()
            .map(|&x| self.actions[x].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses `a,b,c` or `(a,b,c)` into a profile.
    pub fn parse_profile(&self, text: &str) -> Result<Profile> {
        let body = text.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let coords = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                self.action_index(tok)
                    .ok_or_else(|| Error::UnknownAction(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != self.players {
            return Err(Error::SizeMismatch {
                expected: self.players,
                found: coords.len(),
            });
        }
        Ok(Profile::new(coords))
    }
}

fn profile_count(players: usize, s: usize) -> Option<usize> {
    (0..players).try_fold(1usize, |acc, _| acc.checked_mul(s))
}

#[inline]
fn decode(mut idx: usize, s: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % s;
        idx /= s;
    }
}

/// Shorthand for building payoffs from integers.
pub fn int(v: i64) -> Payoff {
    BigRational::from_integer(v.into())
}
