//! Whole-game symmetry: invariance under player permutations, the
//! invariance group, profile orbits, the anonymity/symmetry classification,
//! and the anonymous (occupancy-count) representation.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{CommutativeImage, Game, Payoff, Profile};
use crate::permutation::{all_permutations, Permutation};
use crate::verdict::{Counterexample, PayoffRef, Verdict};

/// Checks `π_{σ(i)}(a) = π_i(a·σ)` for every profile `a` and player `i`.
///
/// On failure the counterexample has `left = π_{σ(i)}(a)` and
/// `right = π_i(a·σ)` for the first failing profile (then player).
pub fn is_invariant(g: &Game, sigma: &Permutation) -> Result<Verdict> {
    check_size(g, sigma)?;
    Ok(match first_invariance_failure(g, sigma) {
        None => Verdict::pass(),
        Some((idx, i)) => Verdict::fail(invariance_counterexample(g, sigma, idx, i)),
    })
}

fn check_size(g: &Game, sigma: &Permutation) -> Result<()> {
    if sigma.degree() != g.players() {
        return Err(Error::SizeMismatch {
            expected: g.players(),
            found: sigma.degree(),
        });
    }
    Ok(())
}

fn first_invariance_failure(g: &Game, sigma: &Permutation) -> Option<(usize, usize)> {
    (0..g.num_profiles()).find_map(|idx| {
        let moved = g.act_index(idx, sigma);
        (0..g.players())
            .find(|&i| g.payoff_id(idx, sigma.apply(i)) != g.payoff_id(moved, i))
            .map(|i| (idx, i))
    })
}

fn invariance_counterexample(g: &Game, sigma: &Permutation, idx: usize, i: usize) -> Counterexample {
    Counterexample {
        permutation: Some(sigma.clone()),
        left: PayoffRef::at(g, sigma.apply(i), idx),
        right: PayoffRef::at(g, i, g.act_index(idx, sigma)),
    }
}

/// The set of permutations under which a game is invariant. It is a
/// subgroup of `S_n`; elements are kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl InvarianceGroup {
    /// Number of players permuted.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.elements.binary_search(sigma).is_ok()
    }

    /// True when every permutation of the players leaves the game invariant.
    pub fn is_full(&self) -> bool {
        self.len() == (1..=self.degree).product::<usize>()
    }

    /// Contains the identity and is closed under composition and inverse.
    pub fn is_closed(&self) -> bool {
        self.contains(&Permutation::identity(self.degree))
            && self.elements.iter().all(|s| {
                self.contains(&s.inverse())
                    && self
                        .elements
                        .iter()
                        .all(|t| self.contains(&s.compose(t).expect("same degree")))
            })
    }
}

/// Computes the invariance group.
///
/// Candidates are first filtered by a per-player signature: for every orbit,
/// the multiset of player `i`'s payoffs over the orbit must equal that of
/// `σ(i)`, since `a ↦ a·σ` permutes each orbit. Survivors get the full
/// check, evaluated in parallel and collected in order.
pub fn invariance_group(g: &Game) -> InvarianceGroup {
    let n = g.players();
    let signatures = player_signatures(g);
    let candidates: Vec<Permutation> = all_permutations(n)
        .filter(|sigma| (0..n).all(|i| signatures[sigma.apply(i)] == signatures[i]))
        .collect();
    let elements = candidates
        .into_par_iter()
        .filter(|sigma| first_invariance_failure(g, sigma).is_none())
        .collect();
    InvarianceGroup { degree: n, elements }
}

fn player_signatures(g: &Game) -> Vec<Vec<Vec<u32>>> {
    let orbits = orbit_partition(g.players(), g.num_actions());
    (0..g.players())
        .map(|i| {
            orbits
                .classes
                .iter()
                .map(|class| {
                    let mut ids: Vec<u32> = class.iter().map(|&idx| g.payoff_id(idx, i)).collect();
                    ids.sort_unstable();
                    ids
                })
                .collect()
        })
        .collect()
}

/// Profiles grouped into orbits of the `S_n` action, i.e. by commutative image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    players: usize,
    num_actions: usize,
    /// Profile indices per class; classes ordered by their first profile.
    classes: Vec<Vec<usize>>,
    /// Class id of each profile index.
    index: Vec<usize>,
    images: Vec<CommutativeImage>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, profile_idx: usize) -> usize {
        self.index[profile_idx]
    }

    /// Profile indices of class `c`, in increasing order.
    pub fn class_indices(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn image(&self, c: usize) -> &CommutativeImage {
        &self.images[c]
    }

    /// Classes as profiles.
    pub fn classes(&self) -> Vec<Vec<Profile>> {
        self.classes
            .iter()
            .map(|class| class.iter().map(|&idx| self.profile(idx)).collect())
            .collect()
    }

    fn profile(&self, mut idx: usize) -> Profile {
        let mut coords = vec![0; self.players];
        for slot in coords.iter_mut().rev() {
            *slot = idx % self.num_actions;
            idx /= self.num_actions;
        }
        Profile::new(coords)
    }
}

pub fn orbits(g: &Game) -> OrbitPartition {
    orbit_partition(g.players(), g.num_actions())
}

/// Orbit partition of the `s^n` profiles of `n` players over `s` actions.
pub fn orbit_partition(players: usize, num_actions: usize) -> OrbitPartition {
    let total = num_actions.pow(players as u32);
    let mut by_image: HashMap<CommutativeImage, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut images = Vec::new();
    let mut index = Vec::with_capacity(total);
    let mut coords = vec![0; players];
    for idx in 0..total {
        let mut rest = idx;
        for slot in coords.iter_mut().rev() {
            *slot = rest % num_actions;
            rest /= num_actions;
        }
        let image = CommutativeImage::of(&coords, num_actions);
        let c = *by_image.entry(image.clone()).or_insert_with(|| {
            classes.push(Vec::new());
            images.push(image);
            classes.len() - 1
        });
        classes[c].push(idx);
        index.push(c);
    }
    OrbitPartition {
        players,
        num_actions,
        classes,
        index,
        images,
    }
}

/// The five whole-game predicates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    Anonymous,
    Symmetric,
    SelfAnonymous,
    SelfSymmetric,
    DmSymmetric,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::Anonymous,
        Predicate::Symmetric,
        Predicate::SelfAnonymous,
        Predicate::SelfSymmetric,
        Predicate::DmSymmetric,
    ];

    /// Key used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Anonymous => "anonymous",
            Predicate::Symmetric => "symmetric",
            Predicate::SelfAnonymous => "self_anonymous",
            Predicate::SelfSymmetric => "self_symmetric",
            Predicate::DmSymmetric => "dm_symmetric",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub anonymous: Verdict,
    pub symmetric: Verdict,
    pub self_anonymous: Verdict,
    pub self_symmetric: Verdict,
    /// `π_i(a) = π_{σ(i)}(a·σ)` for all `σ`, `a`, `i`.
    pub dm_symmetric: Verdict,
}

impl Classification {
    pub fn get(&self, p: Predicate) -> &Verdict {
        match p {
            Predicate::Anonymous => &self.anonymous,
            Predicate::Symmetric => &self.symmetric,
            Predicate::SelfAnonymous => &self.self_anonymous,
            Predicate::SelfSymmetric => &self.self_symmetric,
            Predicate::DmSymmetric => &self.dm_symmetric,
        }
    }
}

pub fn classify(g: &Game) -> Classification {
    Classification {
        anonymous: keyed_equality(g, |_, i, own, others| (Some(i), Some(own), others)),
        symmetric: keyed_equality(g, |_, _, own, others| (None, Some(own), others)),
        self_anonymous: keyed_equality(g, |full, i, _, _| (Some(i), None, full)),
        self_symmetric: keyed_equality(g, |full, _, _, _| (None, None, full)),
        dm_symmetric: dm_symmetric(g),
    }
}

type Key = (Option<usize>, Option<usize>, Vec<usize>);

/// Decides a predicate of the form "equal keys imply equal payoffs" with
/// one hash-map pass. `key(#a, i, a_i, #a_{-i})` picks what the predicate
/// conditions on. The first clash (by profile, then player) is reported
/// with the earlier payoff on the left.
fn keyed_equality<F>(g: &Game, key: F) -> Verdict
where
    F: Fn(Vec<usize>, usize, usize, Vec<usize>) -> Key,
{
    let s = g.num_actions();
    let mut seen: HashMap<Key, (usize, usize, u32)> = HashMap::new();
    let mut coords = vec![0; g.players()];
    for idx in 0..g.num_profiles() {
        g.decode_into(idx, &mut coords);
        let full = CommutativeImage::of(&coords, s).counts().to_vec();
        for (i, &own) in coords.iter().enumerate() {
            let mut others = full.clone();
            others[own] -= 1;
            let id = g.payoff_id(idx, i);
            match seen.entry(key(full.clone(), i, own, others)) {
                Entry::Vacant(v) => {
                    v.insert((idx, i, id));
                }
                Entry::Occupied(o) => {
                    let &(first_idx, first_player, first_id) = o.get();
                    if first_id != id {
                        return Verdict::fail(Counterexample {
                            permutation: None,
                            left: PayoffRef::at(g, first_player, first_idx),
                            right: PayoffRef::at(g, i, idx),
                        });
                    }
                }
            }
        }
    }
    Verdict::pass()
}

fn dm_symmetric(g: &Game) -> Verdict {
    let perms: Vec<Permutation> = all_permutations(g.players()).collect();
    for idx in 0..g.num_profiles() {
        for sigma in &perms {
            let moved = g.act_index(idx, sigma);
            for i in 0..g.players() {
                if g.payoff_id(idx, i) != g.payoff_id(moved, sigma.apply(i)) {
                    return Verdict::fail(Counterexample {
                        permutation: Some(sigma.clone()),
                        left: PayoffRef::at(g, i, idx),
                        right: PayoffRef::at(g, sigma.apply(i), moved),
                    });
                }
            }
        }
    }
    Verdict::pass()
}

/// Occupancy counts of the other players' actions; sums to `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(counts: Vec<usize>) -> Self {
        Partition(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All ways to write `total` as an ordered sum of `parts` non-negative
/// integers, first coordinate descending, then recursively.
///
/// Returns `C(total + parts - 1, parts - 1)` partitions; `parts == 0` yields
/// nothing.
pub fn enumerate_partitions(total: usize, parts: usize) -> Vec<Partition> {
    fn go(remaining: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if parts == 1 {
            prefix.push(remaining);
            out.push(Partition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            prefix.push(first);
            go(remaining - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// A game given by utilities `u^i_a : P_{n-1} → ℚ`, so that
/// `π_i(a) = u^i_{a_i}(#a_{-i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnonymousGame {
    players: usize,
    actions: Vec<String>,
    partitions: Vec<Partition>,
    rank: HashMap<Partition, usize>,
    /// `utilities[(i * s + a) * |P| + rank(x)]`
    utilities: Vec<Payoff>,
}

impl AnonymousGame {
    /// Builds the `n·s` utility functions by evaluating `u(i, a, x)` on every
    /// partition `x ∈ P_{n-1}`.
    pub fn from_fn<F>(players: usize, actions: Vec<String>, mut u: F) -> Self
    where
        F: FnMut(usize, usize, &Partition) -> Payoff,
    {
        let s = actions.len();
        let partitions = enumerate_partitions(players.saturating_sub(1), s);
        let rank = partitions
            .iter()
            .enumerate()
            .map(|(r, p)| (p.clone(), r))
            .collect();
        let mut utilities = Vec::with_capacity(players * s * partitions.len());
        for i in 0..players {
            for a in 0..s {
                for x in &partitions {
                    utilities.push(u(i, a, x));
                }
            }
        }
        AnonymousGame {
            players,
            actions,
            partitions,
            rank,
            utilities,
        }
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    /// `P_{n-1}` in enumeration order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// `u^i_a(x)`, or `None` if `x ∉ P_{n-1}` or an index is out of range.
    pub fn utility(&self, player: usize, action: usize, x: &Partition) -> Option<&Payoff> {
        if player >= self.players || action >= self.actions.len() {
            return None;
        }
        let r = *self.rank.get(x)?;
        Some(&self.utilities[self.slot(player, action, r)])
    }

    fn slot(&self, player: usize, action: usize, rank: usize) -> usize {
        (player * self.actions.len() + action) * self.partitions.len() + rank
    }

    /// Lifts the utilities to a payoff table.
    pub fn to_game(&self) -> Result<Game> {
        let s = self.actions.len();
        Game::from_fn(self.players, self.actions.clone(), |a| {
            let counts = CommutativeImage::of(a.coords(), s);
            a.coords()
                .iter()
                .enumerate()
                .map(|(i, &own)| {
                    let mut others = counts.counts().to_vec();
                    others[own] -= 1;
                    self.utility(i, own, &Partition(others))
                        .expect("every reduced image is a partition")
                        .clone()
                })
                .collect()
        })
    }
}

/// Recovers `u^i_a` from the payoff table, or reports two profiles with the
/// same own action and other-player counts but different payoffs for the
/// same player.
#[allow(clippy::result_large_err)]
pub fn anonymous_representation(g: &Game) -> std::result::Result<AnonymousGame, Counterexample> {
    let n = g.players();
    let s = g.num_actions();
    let partitions = enumerate_partitions(n - 1, s);
    let rank: HashMap<Partition, usize> = partitions
        .iter()
        .enumerate()
        .map(|(r, p)| (p.clone(), r))
        .collect();
    let width = partitions.len();
    let mut slots: Vec<Option<(usize, u32)>> = vec![None; n * s * width];
    let mut coords = vec![0; n];
    for idx in 0..g.num_profiles() {
        g.decode_into(idx, &mut coords);
        let counts = CommutativeImage::of(&coords, s);
        for (i, &own) in coords.iter().enumerate() {
            let mut others = counts.counts().to_vec();
            others[own] -= 1;
            let slot = (i * s + own) * width + rank[&Partition(others)];
            let id = g.payoff_id(idx, i);
            match slots[slot] {
                None => slots[slot] = Some((idx, id)),
                Some((first_idx, first_id)) if first_id != id => {
                    return Err(Counterexample {
                        permutation: None,
                        left: PayoffRef::at(g, i, first_idx),
                        right: PayoffRef::at(g, i, idx),
                    });
                }
                Some(_) => {}
            }
        }
    }
    let utilities = slots
        .into_iter()
        .map(|slot| {
            let (_, id) = slot.expect("every (player, action, partition) is realized");
            g.value(id).clone()
        })
        .collect();
    Ok(AnonymousGame {
        players: n,
        actions: g.actions().to_vec(),
        partitions,
        rank,
        utilities,
    })
}
