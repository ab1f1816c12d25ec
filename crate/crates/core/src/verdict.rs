//! Verdicts and the counterexamples that refute them.

use crate::game::{Game, Payoff, Profile};
use crate::permutation::Permutation;

/// One side of a payoff comparison: `π_player(profile) = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PayoffRef {
    pub player: usize,
    pub profile: Profile,
    pub value: Payoff,
}

impl PayoffRef {
    pub fn at(g: &Game, player: usize, profile_idx: usize) -> Self {
        PayoffRef {
            player,
            profile: g.profile_at(profile_idx),
            value: g.payoff_at(profile_idx, player).clone(),
        }
    }
}

/// A pair of payoffs that a predicate requires to be equal but which differ.
///
/// `permutation` is the permutation relating the two profiles, when the
/// predicate quantifies over one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub permutation: Option<Permutation>,
    pub left: PayoffRef,
    pub right: PayoffRef,
}

impl Counterexample {
    /// Human-readable form with 1-based players and named actions.
    pub fn describe(&self, g: &Game) -> String {
        let side = |r: &PayoffRef| {
            format!("π{}{} = {}", r.player + 1, g.format_profile(&r.profile), r.value)
        };
        match &self.permutation {
            Some(p) => format!("{} ≠ {} under {}", side(&self.left), side(&self.right), p),
            None => format!("{} ≠ {}", side(&self.left), side(&self.right)),
        }
    }
}

/// A boolean verdict with the first counterexample found when it is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            counterexample: None,
        }
    }

    pub fn fail(cx: Counterexample) -> Self {
        Verdict {
            holds: false,
            counterexample: Some(cx),
        }
    }
}
