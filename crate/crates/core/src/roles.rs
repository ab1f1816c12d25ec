//! Roles `r_i^j` and the blind (`B_r`), twisted (`T_r`) and simulation
//! (`M_r`) relations between them.
//!
//! Comparing `r_i^j` with `r_k^l` ranges over the pinned permutations
//! `σ(k) = i, σ(l) = j` (only `σ(k) = i` for diagonal roles) and compares
//! `π_i(a)` with `π_k(a·σ)`:
//!
//! * `B_r`: equal for every pinned `σ` and every `a`;
//! * `T_r`: some single pinned `σ` works for every `a`;
//! * `M_r`: every `a` has its own pinned `σ_a`.
//!
//! Relations are only defined between roles of the same arity; mixing a
//! diagonal role with a non-diagonal one is an invalid query.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{extend, Game, Payoff, ReducedProfile};
use crate::permutation::{enumerate_constrained, Permutation};
use crate::verdict::{Counterexample, PayoffRef};

/// `r_owner^counterpart`: the role the counterpart plays for the owner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoleRef {
    pub owner: usize,
    pub counterpart: usize,
}

impl RoleRef {
    pub fn new(owner: usize, counterpart: usize) -> Self {
        RoleRef { owner, counterpart }
    }

    pub fn is_diagonal(self) -> bool {
        self.owner == self.counterpart
    }
}

impl fmt::Display for RoleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r_{}^{}", self.owner + 1, self.counterpart + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RoleRelation {
    Blind,
    Twisted,
    Simulates,
}

impl RoleRelation {
    pub const ALL: [RoleRelation; 3] = [RoleRelation::Blind, RoleRelation::Twisted, RoleRelation::Simulates];

    pub fn name(self) -> &'static str {
        match self {
            RoleRelation::Blind => "B_r",
            RoleRelation::Twisted => "T_r",
            RoleRelation::Simulates => "M_r",
        }
    }
}

/// Evidence accompanying a positive verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    /// A single permutation that works for every profile.
    Permutation(Permutation),
    /// One permutation per profile index.
    PerProfile(Vec<Permutation>),
    /// For `Q^X`: the chosen counterpart `l` for every `k`.
    Matching(Vec<(usize, usize)>),
}

/// A verdict with its witness, or the counterexamples refuting it.
///
/// For `T_r`, a negative verdict lists one counterexample per candidate
/// permutation; for `M_r`, one per candidate at the first unmatched profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationResult {
    pub holds: bool,
    pub witness: Witness,
    pub counterexamples: Vec<Counterexample>,
}

impl RelationResult {
    pub(crate) fn holds_with(witness: Witness) -> Self {
        RelationResult {
            holds: true,
            witness,
            counterexamples: Vec::new(),
        }
    }

    pub(crate) fn fails_with(counterexamples: Vec<Counterexample>) -> Self {
        RelationResult {
            holds: false,
            witness: Witness::None,
            counterexamples,
        }
    }

    /// The per-profile witness for profile index `idx`, if any.
    pub fn witness_for(&self, idx: usize) -> Option<&Permutation> {
        match &self.witness {
            Witness::Permutation(p) => Some(p),
            Witness::PerProfile(v) => v.get(idx),
            _ => None,
        }
    }
}

fn check_player(g: &Game, p: usize) -> Result<()> {
    if p >= g.players() {
        return Err(Error::IndexOutOfRange {
            index: p,
            bound: g.players(),
        });
    }
    Ok(())
}

/// Pinned permutations for comparing `x = r_i^j` with `y = r_k^l`, in
/// lexicographic order.
pub fn pinned_permutations(g: &Game, x: RoleRef, y: RoleRef) -> Result<Vec<Permutation>> {
    for p in [x.owner, x.counterpart, y.owner, y.counterpart] {
        check_player(g, p)?;
    }
    if x.is_diagonal() != y.is_diagonal() {
        return Err(Error::InvalidQuery(format!(
            "{x} and {y} have different arity; role relations compare like with like"
        )));
    }
    let pins: Vec<(usize, usize)> = if x.is_diagonal() {
        vec![(y.owner, x.owner)]
    } else {
        vec![(y.owner, x.owner), (y.counterpart, x.counterpart)]
    };
    Ok(enumerate_constrained(g.players(), &pins)?.collect())
}

fn counterexample(g: &Game, x: RoleRef, y: RoleRef, sigma: &Permutation, idx: usize) -> Counterexample {
    Counterexample {
        permutation: Some(sigma.clone()),
        left: PayoffRef::at(g, x.owner, idx),
        right: PayoffRef::at(g, y.owner, g.act_index(idx, sigma)),
    }
}

#[inline]
fn matches(g: &Game, x: RoleRef, y: RoleRef, sigma: &Permutation, idx: usize) -> bool {
    g.payoff_id(idx, x.owner) == g.payoff_id(g.act_index(idx, sigma), y.owner)
}

/// `x B_r y`.
pub fn blind_related(g: &Game, x: RoleRef, y: RoleRef) -> Result<RelationResult> {
    let perms = pinned_permutations(g, x, y)?;
    for idx in 0..g.num_profiles() {
        if let Some(sigma) = perms.iter().find(|s| !matches(g, x, y, s, idx)) {
            return Ok(RelationResult::fails_with(vec![counterexample(g, x, y, sigma, idx)]));
        }
    }
    Ok(RelationResult::holds_with(Witness::None))
}

/// `x T_r y`; the witness is the lexicographically first working permutation.
pub fn twisted_related(g: &Game, x: RoleRef, y: RoleRef) -> Result<RelationResult> {
    let perms = pinned_permutations(g, x, y)?;
    let mut refutations = Vec::with_capacity(perms.len());
    for sigma in perms {
        match (0..g.num_profiles()).find(|&idx| !matches(g, x, y, &sigma, idx)) {
            None => return Ok(RelationResult::holds_with(Witness::Permutation(sigma))),
            Some(idx) => refutations.push(counterexample(g, x, y, &sigma, idx)),
        }
    }
    Ok(RelationResult::fails_with(refutations))
}

/// `x M_r y`; the witness records the first working permutation per profile.
pub fn simulates(g: &Game, x: RoleRef, y: RoleRef) -> Result<RelationResult> {
    let perms = pinned_permutations(g, x, y)?;
    let mut chosen = Vec::with_capacity(g.num_profiles());
    for idx in 0..g.num_profiles() {
        match perms.iter().find(|s| matches(g, x, y, s, idx)) {
            Some(sigma) => chosen.push(sigma.clone()),
            None => {
                let all = perms.iter().map(|s| counterexample(g, x, y, s, idx)).collect();
                return Ok(RelationResult::fails_with(all));
            }
        }
    }
    Ok(RelationResult::holds_with(Witness::PerProfile(chosen)))
}

pub fn role_relation(g: &Game, rel: RoleRelation, x: RoleRef, y: RoleRef) -> Result<RelationResult> {
    match rel {
        RoleRelation::Blind => blind_related(g, x, y),
        RoleRelation::Twisted => twisted_related(g, x, y),
        RoleRelation::Simulates => simulates(g, x, y),
    }
}

/// Verdict only, without building witnesses.
pub fn role_holds(g: &Game, rel: RoleRelation, x: RoleRef, y: RoleRef) -> Result<bool> {
    let perms = pinned_permutations(g, x, y)?;
    let profiles = 0..g.num_profiles();
    Ok(match rel {
        RoleRelation::Blind => profiles.into_iter().all(|idx| perms.iter().all(|s| matches(g, x, y, s, idx))),
        RoleRelation::Twisted => perms
            .iter()
            .any(|s| (0..g.num_profiles()).all(|idx| matches(g, x, y, s, idx))),
        RoleRelation::Simulates => profiles.into_iter().all(|idx| perms.iter().any(|s| matches(g, x, y, s, idx))),
    })
}

/// All roles: non-diagonal ones in lexicographic order, then diagonal ones.
pub fn all_roles(n: usize) -> (Vec<RoleRef>, Vec<RoleRef>) {
    let off = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| RoleRef::new(i, j)))
        .collect();
    let diag = (0..n).map(|i| RoleRef::new(i, i)).collect();
    (off, diag)
}

/// Verdicts of one role relation for every same-arity pair of roles.
#[derive(Clone, Debug)]
pub struct RoleGrid {
    players: usize,
    relation: RoleRelation,
    /// `verdicts[(x.owner*n + x.counterpart) * n*n + (y.owner*n + y.counterpart)]`;
    /// mixed-arity slots are false.
    verdicts: Vec<bool>,
}

impl RoleGrid {
    pub fn compute(g: &Game, relation: RoleRelation) -> Self {
        let n = g.players();
        let nn = n * n;
        let verdicts = (0..nn * nn)
            .into_par_iter()
            .map(|slot| {
                let (a, b) = (slot / nn, slot % nn);
                let x = RoleRef::new(a / n, a % n);
                let y = RoleRef::new(b / n, b % n);
                x.is_diagonal() == y.is_diagonal()
                    && role_holds(g, relation, x, y).expect("indices in range, arity matched")
            })
            .collect();
        RoleGrid {
            players: n,
            relation,
            verdicts,
        }
    }

    pub fn relation(&self) -> RoleRelation {
        self.relation
    }

    pub fn holds(&self, x: RoleRef, y: RoleRef) -> bool {
        let n = self.players;
        self.verdicts[(x.owner * n + x.counterpart) * n * n + y.owner * n + y.counterpart]
    }
}

/// Classes of the equivalence `T_r`, diagonal and non-diagonal roles
/// partitioned separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoleClasses {
    pub non_diagonal: Vec<Vec<RoleRef>>,
    pub diagonal: Vec<Vec<RoleRef>>,
}

pub fn tr_equivalence_classes(g: &Game) -> RoleClasses {
    let (off, diag) = all_roles(g.players());
    RoleClasses {
        non_diagonal: union_find_classes(g, &off),
        diagonal: union_find_classes(g, &diag),
    }
}

fn union_find_classes(g: &Game, roles: &[RoleRef]) -> Vec<Vec<RoleRef>> {
    let pairs: Vec<(usize, usize)> = (0..roles.len())
        .flat_map(|a| (a + 1..roles.len()).map(move |b| (a, b)))
        .collect();
    let related: Vec<bool> = pairs
        .par_iter()
        .map(|&(a, b)| role_holds(g, RoleRelation::Twisted, roles[a], roles[b]).expect("same arity"))
        .collect();

    let mut parent: Vec<usize> = (0..roles.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (&(a, b), &hit) in pairs.iter().zip(&related) {
        if hit {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut classes: Vec<Vec<RoleRef>> = Vec::new();
    let mut slot_of_root = vec![usize::MAX; roles.len()];
    for (idx, &role) in roles.iter().enumerate() {
        let r = find(&mut parent, idx);
        if slot_of_root[r] == usize::MAX {
            slot_of_root[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot_of_root[r]].push(role);
    }
    classes
}

/// The materialized role `r_i^j`: for each reduced profile `a_{-ij}` (or
/// `a_{-i}`), the payoffs of the owner as a function of the owner's and the
/// counterpart's actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Role {
    role: RoleRef,
    players: usize,
    num_actions: usize,
    /// Indexed by `reduced_index * s^2 + own * s + other` (non-diagonal) or
    /// `reduced_index * s + own` (diagonal).
    table: Vec<Payoff>,
}

pub fn extract_role(g: &Game, owner: usize, counterpart: usize) -> Result<Role> {
    check_player(g, owner)?;
    check_player(g, counterpart)?;
    let role = RoleRef::new(owner, counterpart);
    let s = g.num_actions();
    let mut table = vec![Payoff::default(); g.num_profiles()];
    let mut coords = vec![0; g.players()];
    for idx in 0..g.num_profiles() {
        g.decode_into(idx, &mut coords);
        let removed: &[usize] = if role.is_diagonal() { &[owner] } else { &[owner, counterpart] };
        let reduced: Vec<usize> = (0..g.players())
            .filter(|k| !removed.contains(k))
            .map(|k| coords[k])
            .collect();
        let r_idx = reduced.iter().fold(0, |acc, &x| acc * s + x);
        let slot = if role.is_diagonal() {
            r_idx * s + coords[owner]
        } else {
            (r_idx * s + coords[owner]) * s + coords[counterpart]
        };
        table[slot] = g.payoff_at(idx, owner).clone();
    }
    Ok(Role {
        role,
        players: g.players(),
        num_actions: s,
        table,
    })
}

impl Role {
    pub fn role(&self) -> RoleRef {
        self.role
    }

    fn reduced_index(&self, reduced: &ReducedProfile) -> Result<usize> {
        let expected: Vec<usize> = if self.role.is_diagonal() {
            vec![self.role.owner]
        } else {
            let mut v = vec![self.role.owner, self.role.counterpart];
            v.sort_unstable();
            v
        };
        if reduced.removed() != expected.as_slice() || reduced.full_len() != self.players {
            return Err(Error::InvalidQuery(format!(
                "reduced profile does not match the domain of {}",
                self.role
            )));
        }
        let s = self.num_actions;
        reduced.coords().iter().try_fold(0, |acc, &x| {
            if x >= s {
                Err(Error::IndexOutOfRange { index: x, bound: s })
            } else {
                Ok(acc * s + x)
            }
        })
    }

    /// `[r_i^j(a_{-ij})](a_i, a_j)`.
    pub fn matrix_entry(&self, reduced: &ReducedProfile, own: usize, other: usize) -> Result<&Payoff> {
        if self.role.is_diagonal() {
            return Err(Error::InvalidQuery(format!("{} is diagonal", self.role)));
        }
        let s = self.num_actions;
        if own >= s || other >= s {
            return Err(Error::IndexOutOfRange { index: own.max(other), bound: s });
        }
        Ok(&self.table[(self.reduced_index(reduced)? * s + own) * s + other])
    }

    /// `[r_i^i(a_{-i})](a_i)`.
    pub fn vector_entry(&self, reduced: &ReducedProfile, own: usize) -> Result<&Payoff> {
        if !self.role.is_diagonal() {
            return Err(Error::InvalidQuery(format!("{} is not diagonal", self.role)));
        }
        let s = self.num_actions;
        if own >= s {
            return Err(Error::IndexOutOfRange { index: own, bound: s });
        }
        Ok(&self.table[self.reduced_index(reduced)? * s + own])
    }

    /// The payoff table of the owner reassembled as full profiles, for
    /// reporting: `(profile, payoff)` for every entry.
    pub fn entries(&self, reduced_profiles: &[ReducedProfile]) -> Result<Vec<(crate::game::Profile, Payoff)>> {
        let s = self.num_actions;
        let mut out = Vec::new();
        for r in reduced_profiles {
            if self.role.is_diagonal() {
                for own in 0..s {
                    out.push((extend(r, &[own])?, self.vector_entry(r, own)?.clone()));
                }
            } else {
                for own in 0..s {
                    for other in 0..s {
                        let values = if self.role.owner < self.role.counterpart {
                            [own, other]
                        } else {
                            [other, own]
                        };
                        out.push((extend(r, &values)?, self.matrix_entry(r, own, other)?.clone()));
                    }
                }
            }
        }
        Ok(out)
    }
}
