//! Reference implementations and random games.
//!
//! The `naive_*` functions evaluate each definition by brute force over
//! explicit profiles and permutations. They share nothing with the fast
//! paths beyond [`Game::payoff_of`], and exist to be compared against them.
//!
//! Generated games draw integer payoffs from a ChaCha8 stream seeded with
//! `seed_from_u64(seed)`; each draw is `low + next_u64() mod (high - low + 1)`.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::game::{serialize_game, Game, Payoff, Profile};
use crate::permutation::Permutation;
use crate::relations::{self, Relation};
use crate::roles::{self, RoleRef, RoleRelation};
use crate::symmetry::{self, AnonymousGame, Predicate};

/// Largest table the naive functions accept, in profiles.
pub const NAIVE_MAX_PROFILES: usize = 4096;

fn guard(g: &Game) -> Result<()> {
    if g.players() > 7 || g.num_profiles() > NAIVE_MAX_PROFILES {
        return Err(Error::Guard(format!(
            "naive evaluation limited to 7 players and {NAIVE_MAX_PROFILES} profiles, got {} players and {} profiles",
            g.players(),
            g.num_profiles()
        )));
    }
    Ok(())
}

/// Every profile, built by counting in base `s` with the last player fastest.
fn all_profiles(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    loop {
        out.push(cur.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < s {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Every permutation of `0..n` as an image vector, by insertion.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut perms = vec![Vec::new()];
    for x in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for pos in 0..=p.len() {
                let mut q: Vec<usize> = p.clone();
                q.insert(pos, x);
                next.push(q);
            }
        }
        perms = next;
    }
    perms
}

/// `(a·σ)_i = a_{σ(i)}`.
fn permute(a: &[usize], sigma: &[usize]) -> Vec<usize> {
    sigma.iter().map(|&k| a[k]).collect()
}

fn pay<'g>(g: &'g Game, i: usize, a: &[usize]) -> &'g Payoff {
    g.payoff_of(i, &Profile::new(a.to_vec())).expect("profile in range")
}

fn counts(a: &[usize], s: usize, skip: Option<usize>) -> Vec<usize> {
    let mut c = vec![0; s];
    for (k, &x) in a.iter().enumerate() {
        if Some(k) != skip {
            c[x] += 1;
        }
    }
    c
}

/// `π_{σ(i)}(a) = π_i(a·σ)` for all `a` and `i`.
pub fn naive_invariance(g: &Game, sigma: &Permutation) -> Result<bool> {
    guard(g)?;
    if sigma.degree() != g.players() {
        return Err(Error::SizeMismatch {
            expected: g.players(),
            found: sigma.degree(),
        });
    }
    let s_img = sigma.images();
    let profiles = all_profiles(g.players(), g.num_actions());
    Ok(profiles.iter().all(|a| {
        let b = permute(a, s_img);
        (0..g.players()).all(|i| pay(g, s_img[i], a) == pay(g, i, &b))
    }))
}

/// Every invariance permutation, in lexicographic order of images.
pub fn naive_invariance_group(g: &Game) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for p in all_perms(g.players()) {
        let sigma = Permutation::from_images(p)?;
        if naive_invariance(g, &sigma)? {
            out.push(sigma);
        }
    }
    out.sort();
    Ok(out)
}

/// Number of orbits, by grouping profiles reachable from each other.
pub fn naive_orbit_count(g: &Game) -> Result<usize> {
    guard(g)?;
    let profiles = all_profiles(g.players(), g.num_actions());
    let perms = all_perms(g.players());
    let mut seen = std::collections::HashSet::new();
    let mut count = 0;
    for a in &profiles {
        if seen.contains(a) {
            continue;
        }
        count += 1;
        for p in &perms {
            seen.insert(permute(a, p));
        }
    }
    Ok(count)
}

/// Verdicts for the classification predicates, by comparing all pairs of
/// profiles (or all permutations, for `dm_symmetric`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NaiveClassification {
    pub anonymous: bool,
    pub symmetric: bool,
    pub self_anonymous: bool,
    pub self_symmetric: bool,
    pub dm_symmetric: bool,
}

impl NaiveClassification {
    pub fn get(&self, p: Predicate) -> bool {
        match p {
            Predicate::Anonymous => self.anonymous,
            Predicate::Symmetric => self.symmetric,
            Predicate::SelfAnonymous => self.self_anonymous,
            Predicate::SelfSymmetric => self.self_symmetric,
            Predicate::DmSymmetric => self.dm_symmetric,
        }
    }
}

pub fn naive_classification(g: &Game) -> Result<NaiveClassification> {
    guard(g)?;
    let (n, s) = (g.players(), g.num_actions());
    let profiles = all_profiles(n, s);
    let mut out = NaiveClassification {
        anonymous: true,
        symmetric: true,
        self_anonymous: true,
        self_symmetric: true,
        dm_symmetric: true,
    };
    for a in &profiles {
        for b in &profiles {
            let same_all = counts(a, s, None) == counts(b, s, None);
            for i in 0..n {
                let pa = pay(g, i, a);
                let others_i = counts(a, s, Some(i));
                if a[i] == b[i] && others_i == counts(b, s, Some(i)) && pa != pay(g, i, b) {
                    out.anonymous = false;
                }
                if same_all && pa != pay(g, i, b) {
                    out.self_anonymous = false;
                }
                for j in 0..n {
                    let pb = pay(g, j, b);
                    if a[i] == b[j] && others_i == counts(b, s, Some(j)) && pa != pb {
                        out.symmetric = false;
                    }
                    if same_all && pa != pb {
                        out.self_symmetric = false;
                    }
                }
            }
        }
    }
    for sigma in all_perms(n) {
        for a in &profiles {
            let b = permute(a, &sigma);
            for (i, &si) in sigma.iter().enumerate() {
                if pay(g, i, a) != pay(g, si, &b) {
                    out.dm_symmetric = false;
                }
            }
        }
    }
    Ok(out)
}

/// Whether utilities `u^i_a(#a_{-i})` reproduce the game: equal own action
/// and equal counts of the others must give equal payoffs.
pub fn naive_has_anonymous_representation(g: &Game) -> Result<bool> {
    Ok(naive_classification(g)?.anonymous)
}

fn pinned(n: usize, pins: &[(usize, usize)]) -> Vec<Vec<usize>> {
    all_perms(n)
        .into_iter()
        .filter(|p| pins.iter().all(|&(from, to)| p[from] == to))
        .collect()
}

fn role_pins(x: RoleRef, y: RoleRef) -> Result<Vec<(usize, usize)>> {
    if x.is_diagonal() != y.is_diagonal() {
        return Err(Error::InvalidQuery(format!("{x} and {y} have different arity")));
    }
    Ok(if x.is_diagonal() {
        vec![(y.owner, x.owner)]
    } else {
        vec![(y.owner, x.owner), (y.counterpart, x.counterpart)]
    })
}

fn check_role(g: &Game, x: RoleRef) -> Result<()> {
    for p in [x.owner, x.counterpart] {
        if p >= g.players() {
            return Err(Error::IndexOutOfRange {
                index: p,
                bound: g.players(),
            });
        }
    }
    Ok(())
}

/// Table `eq[σ][a]`: `π_i(a) = π_k(a·σ)` for each pinned `σ` and profile `a`.
fn role_equalities(g: &Game, x: RoleRef, y: RoleRef) -> Result<Vec<Vec<bool>>> {
    guard(g)?;
    check_role(g, x)?;
    check_role(g, y)?;
    let pins = role_pins(x, y)?;
    let profiles = all_profiles(g.players(), g.num_actions());
    Ok(pinned(g.players(), &pins)
        .iter()
        .map(|sigma| {
            profiles
                .iter()
                .map(|a| pay(g, x.owner, a) == pay(g, y.owner, &permute(a, sigma)))
                .collect()
        })
        .collect())
}

pub fn naive_role_relation(g: &Game, rel: RoleRelation, x: RoleRef, y: RoleRef) -> Result<bool> {
    let eq = role_equalities(g, x, y)?;
    let m = eq.first().map_or(0, Vec::len);
    Ok(match rel {
        RoleRelation::Blind => eq.iter().all(|row| row.iter().all(|&e| e)),
        RoleRelation::Twisted => eq.iter().any(|row| row.iter().all(|&e| e)),
        RoleRelation::Simulates => (0..m).all(|a| eq.iter().any(|row| row[a])),
    })
}

pub fn naive_rigid(g: &Game, i: usize, j: usize) -> Result<bool> {
    guard(g)?;
    check_role(g, RoleRef::new(i, j))?;
    let mut swap: Vec<usize> = (0..g.players()).collect();
    swap.swap(i, j);
    Ok(all_profiles(g.players(), g.num_actions())
        .iter()
        .all(|a| pay(g, i, a) == pay(g, j, &permute(a, &swap))))
}

pub fn naive_p(g: &Game, i: usize, j: usize, x: RoleRelation) -> Result<bool> {
    check_role(g, RoleRef::new(i, j))?;
    let n = g.players();
    for tau in pinned(n, &[(i, j)]) {
        let mut ok = true;
        for (k, &tk) in tau.iter().enumerate() {
            ok &= naive_role_relation(g, x, RoleRef::new(i, k), RoleRef::new(j, tk))?;
        }
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn naive_q(g: &Game, i: usize, j: usize, x: RoleRelation) -> Result<bool> {
    check_role(g, RoleRef::new(i, j))?;
    let n = g.players();
    let mut ok = naive_role_relation(g, x, RoleRef::new(i, i), RoleRef::new(j, j))?;
    for k in (0..n).filter(|&k| k != i) {
        let mut found = false;
        for l in (0..n).filter(|&l| l != j) {
            found |= naive_role_relation(g, x, RoleRef::new(i, k), RoleRef::new(j, l))?;
        }
        ok &= found;
    }
    Ok(ok)
}

/// Naive twin of [`relations::relation`].
pub fn naive_relation(g: &Game, rel: Relation, i: usize, j: usize) -> Result<bool> {
    let roles = |x| naive_role_relation(g, x, RoleRef::new(i, j), RoleRef::new(j, i));
    match rel {
        Relation::B => roles(RoleRelation::Blind),
        Relation::T => roles(RoleRelation::Twisted),
        Relation::M => roles(RoleRelation::Simulates),
        Relation::R if i == j => {
            check_role(g, RoleRef::new(i, j))?;
            Ok(true)
        }
        Relation::R => naive_rigid(g, i, j),
        Relation::PB | Relation::PT | Relation::PM => naive_p(g, i, j, rel.role_relation().unwrap()),
        Relation::QB | Relation::QT | Relation::QM => naive_q(g, i, j, rel.role_relation().unwrap()),
    }
}

/// A predicate on which the fast and naive paths disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub predicate: String,
    pub fast: bool,
    pub naive: bool,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: fast {} vs naive {}", self.predicate, self.fast, self.naive)
    }
}

/// Compares every fast predicate with its naive twin on `g`.
pub fn differential(g: &Game) -> Result<Vec<Divergence>> {
    let mut out = Vec::new();
    let mut cmp = |predicate: String, fast: bool, naive: bool| {
        if fast != naive {
            out.push(Divergence { predicate, fast, naive });
        }
    };
    let n = g.players();

    let group = symmetry::invariance_group(g);
    let naive_group = naive_invariance_group(g)?;
    cmp("invariance group".into(), group.elements() == naive_group.as_slice(), true);
    for p in all_perms(n) {
        let sigma = Permutation::from_images(p)?;
        cmp(
            format!("invariance under {sigma}"),
            symmetry::is_invariant(g, &sigma)?.holds,
            naive_invariance(g, &sigma)?,
        );
    }
    cmp("orbit count".into(), symmetry::orbits(g).len() == naive_orbit_count(g)?, true);

    let fast = symmetry::classify(g);
    let naive = naive_classification(g)?;
    for p in Predicate::ALL {
        cmp(p.name().to_string(), fast.get(p).holds, naive.get(p));
    }
    cmp(
        "anonymous representation".into(),
        symmetry::anonymous_representation(g).is_ok(),
        naive_has_anonymous_representation(g)?,
    );

    let (off, diag) = roles::all_roles(n);
    for rel in RoleRelation::ALL {
        for set in [&off, &diag] {
            for &x in set {
                for &y in set {
                    cmp(
                        format!("{x} {} {y}", rel.name()),
                        roles::role_relation(g, rel, x, y)?.holds,
                        naive_role_relation(g, rel, x, y)?,
                    );
                }
            }
        }
    }
    for rel in Relation::ALL {
        let m = relations::relation_matrix(g, rel);
        for i in 0..n {
            for j in 0..n {
                cmp(
                    format!("{} {rel} {}", i + 1, j + 1),
                    m.holds(i, j),
                    naive_relation(g, rel, i, j)?,
                );
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    General,
    Anonymous,
    SelfSymmetric,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::General => "general",
            Mode::Anonymous => "anonymous",
            Mode::SelfSymmetric => "self_symmetric",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "general" => Ok(Mode::General),
            "anonymous" => Ok(Mode::Anonymous),
            "self_symmetric" => Ok(Mode::SelfSymmetric),
            _ => Err(Error::Guard(format!("unknown generator mode '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub players: usize,
    pub actions: usize,
    pub seed: u64,
    /// Payoffs are the integers in `[low, high]`.
    pub low: Payoff,
    pub high: Payoff,
    pub mode: Mode,
}

impl GeneratorConfig {
    pub fn new(players: usize, actions: usize, seed: u64, mode: Mode) -> Self {
        GeneratorConfig {
            players,
            actions,
            seed,
            low: Payoff::from_integer((-9).into()),
            high: Payoff::from_integer(9.into()),
            mode,
        }
    }

    fn validate(&self) -> Result<(i64, u64)> {
        if !(2..=7).contains(&self.players) {
            return Err(Error::Guard(format!("players must be in 2..=7, got {}", self.players)));
        }
        if !(2..=4).contains(&self.actions) {
            return Err(Error::Guard(format!("actions must be in 2..=4, got {}", self.actions)));
        }
        let lo = self.low.ceil().to_integer();
        let hi = self.high.floor().to_integer();
        if lo > hi {
            return Err(Error::Guard(format!("no integer in [{}, {}]", self.low, self.high)));
        }
        let span = (&hi - &lo + 1u32).to_u64().filter(|s| *s > 0);
        match (lo.to_i64(), span) {
            (Some(lo), Some(span)) if lo.checked_add((span - 1) as i64).is_some() => Ok((lo, span)),
            _ => Err(Error::Guard("payoff range too wide".into())),
        }
    }

    pub fn action_names(&self) -> Vec<String> {
        (0..self.actions)
            .map(|a| char::from(b'a' + a as u8).to_string())
            .collect()
    }
}

struct Draws {
    rng: ChaCha8Rng,
    low: i64,
    span: u64,
}

impl Draws {
    fn next(&mut self) -> Payoff {
        let v = self.low + self.rng.next_u64().mod_floor(&self.span) as i64;
        Payoff::from_integer(v.into())
    }
}

fn draws(cfg: &GeneratorConfig) -> Result<Draws> {
    let (low, span) = cfg.validate()?;
    Ok(Draws {
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        low,
        span,
    })
}

/// The utilities behind an anonymous-mode game, drawn in the order
/// player, own action, partition.
pub fn generate_utilities(cfg: &GeneratorConfig) -> Result<AnonymousGame> {
    let mut d = draws(cfg)?;
    Ok(AnonymousGame::from_fn(cfg.players, cfg.action_names(), |_, _, _| d.next()))
}

pub fn generate(cfg: &GeneratorConfig) -> Result<Game> {
    match cfg.mode {
        Mode::General => {
            let mut d = draws(cfg)?;
            Game::from_fn(cfg.players, cfg.action_names(), |_| (0..cfg.players).map(|_| d.next()).collect())
        }
        Mode::Anonymous => generate_utilities(cfg)?.to_game(),
        Mode::SelfSymmetric => {
            let mut d = draws(cfg)?;
            let orbits = symmetry::orbit_partition(cfg.players, cfg.actions);
            let values: Vec<Payoff> = (0..orbits.len()).map(|_| d.next()).collect();
            let profiles = cfg.actions.pow(cfg.players as u32);
            let table = (0..profiles)
                .map(|idx| vec![values[orbits.class_of(idx)].clone(); cfg.players])
                .collect();
            Game::new(cfg.players, cfg.action_names(), table)
        }
    }
}

/// The comment header written ahead of an emitted game.
pub fn header(cfg: &GeneratorConfig) -> String {
    format!(
        "# generated game\n\
         # rng: ChaCha8 (rand_chacha), seed_from_u64({seed}); draw = low + next_u64 mod (high - low + 1)\n\
         # mode: {mode}, players: {n}, actions: {s}, range: [{lo}, {hi}]\n",
        seed = cfg.seed,
        mode = cfg.mode.name(),
        n = cfg.players,
        s = cfg.actions,
        lo = cfg.low,
        hi = cfg.high,
    )
}

/// A generated game in file form, comment header included.
pub fn emit(cfg: &GeneratorConfig) -> Result<String> {
    let g = generate(cfg)?;
    Ok(format!("{}{}", header(cfg), serialize_game(&g)))
}
