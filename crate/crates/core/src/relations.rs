//! Player-level relations and the reports built on them.
//!
//! `i B j`, `i T j`, `i M j` compare the roles `r_i^j` and `r_j^i`;
//! `i R j` compares payoffs under the single transposition `(i j)`.
//! `P^X` and `Q^X` match every role of `i` with a role of `j`, through a
//! permutation `τ` (P) or one counterpart at a time (Q).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::permutation::{enumerate_constrained, Permutation};
use crate::roles::{self, all_roles, RelationResult, RoleGrid, RoleRef, RoleRelation, Witness};
use crate::symmetry::classify;
use crate::verdict::{Counterexample, PayoffRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    B,
    R,
    T,
    M,
    PB,
    PT,
    PM,
    QB,
    QT,
    QM,
}

impl Relation {
    pub const ALL: [Relation; 10] = [
        Relation::B,
        Relation::R,
        Relation::T,
        Relation::M,
        Relation::PB,
        Relation::PT,
        Relation::PM,
        Relation::QB,
        Relation::QT,
        Relation::QM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::B => "B",
            Relation::R => "R",
            Relation::T => "T",
            Relation::M => "M",
            Relation::PB => "PB",
            Relation::PT => "PT",
            Relation::PM => "PM",
            Relation::QB => "QB",
            Relation::QT => "QT",
            Relation::QM => "QM",
        }
    }

    /// The role relation a P/Q relation is built from.
    pub fn role_relation(self) -> Option<RoleRelation> {
        match self {
            Relation::PB | Relation::QB => Some(RoleRelation::Blind),
            Relation::PT | Relation::QT => Some(RoleRelation::Twisted),
            Relation::PM | Relation::QM => Some(RoleRelation::Simulates),
            _ => None,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    /// Accepts `B`, `PB`, `P^B`, `pb` and the like.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| *c != '^').collect::<String>().to_ascii_uppercase();
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == key)
            .ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

fn check_players(g: &Game, i: usize, j: usize) -> Result<()> {
    for p in [i, j] {
        if p >= g.players() {
            return Err(Error::IndexOutOfRange {
                index: p,
                bound: g.players(),
            });
        }
    }
    Ok(())
}

/// `i B j`: `r_i^j B_r r_j^i` (diagonal role relation when `i = j`).
pub fn blind(g: &Game, i: usize, j: usize) -> Result<RelationResult> {
    roles::blind_related(g, RoleRef::new(i, j), RoleRef::new(j, i))
}

/// `i R j`: `π_i(a) = π_j(a·(i j))` for every `a`. `i R i` holds by the
/// convention `(i i) = id`.
pub fn rigid(g: &Game, i: usize, j: usize) -> Result<RelationResult> {
    check_players(g, i, j)?;
    let n = g.players();
    if i == j {
        return Ok(RelationResult {
            holds: true,
            witness: Witness::Permutation(Permutation::identity(n)),
            counterexamples: Vec::new(),
        });
    }
    let swap = Permutation::transposition(n, i, j)?;
    for idx in 0..g.num_profiles() {
        let moved = g.act_index(idx, &swap);
        if g.payoff_id(idx, i) != g.payoff_id(moved, j) {
            return Ok(RelationResult {
                holds: false,
                witness: Witness::None,
                counterexamples: vec![Counterexample {
                    permutation: Some(swap),
                    left: PayoffRef::at(g, i, idx),
                    right: PayoffRef::at(g, j, moved),
                }],
            });
        }
    }
    Ok(RelationResult {
        holds: true,
        witness: Witness::Permutation(swap),
        counterexamples: Vec::new(),
    })
}

/// `i T j`: `r_i^j T_r r_j^i`.
pub fn twisted(g: &Game, i: usize, j: usize) -> Result<RelationResult> {
    roles::twisted_related(g, RoleRef::new(i, j), RoleRef::new(j, i))
}

/// `i M j`: `r_i^j M_r r_j^i`.
pub fn simulates_player(g: &Game, i: usize, j: usize) -> Result<RelationResult> {
    roles::simulates(g, RoleRef::new(i, j), RoleRef::new(j, i))
}

/// Memoized role verdicts for one role relation.
struct RoleMemo<'g> {
    game: &'g Game,
    relation: RoleRelation,
    seen: HashMap<(RoleRef, RoleRef), bool>,
}

impl RoleMemo<'_> {
    fn holds(&mut self, x: RoleRef, y: RoleRef) -> bool {
        let (g, rel) = (self.game, self.relation);
        *self
            .seen
            .entry((x, y))
            .or_insert_with(|| roles::role_holds(g, rel, x, y).expect("players checked, arity matched"))
    }
}

fn p_search(g: &Game, i: usize, j: usize, mut holds: impl FnMut(RoleRef, RoleRef) -> bool) -> Option<Permutation> {
    let candidates = enumerate_constrained(g.players(), &[(i, j)]).expect("indices checked");
    candidates.into_iter().find(|tau| {
        (0..g.players()).all(|k| holds(RoleRef::new(i, k), RoleRef::new(j, tau.apply(k))))
    })
}

fn q_search(g: &Game, i: usize, j: usize, mut holds: impl FnMut(RoleRef, RoleRef) -> bool) -> Option<Vec<(usize, usize)>> {
    if !holds(RoleRef::new(i, i), RoleRef::new(j, j)) {
        return None;
    }
    let n = g.players();
    (0..n)
        .filter(|&k| k != i)
        .map(|k| {
            (0..n)
                .filter(|&l| l != j)
                .find(|&l| holds(RoleRef::new(i, k), RoleRef::new(j, l)))
                .map(|l| (k, l))
        })
        .collect()
}

/// Counterexamples for a failing role pair, for reporting.
fn role_refutation(g: &Game, rel: RoleRelation, x: RoleRef, y: RoleRef) -> Vec<Counterexample> {
    roles::role_relation(g, rel, x, y)
        .map(|r| r.counterexamples)
        .unwrap_or_default()
}

fn p_failure(g: &Game, i: usize, j: usize, rel: RoleRelation, holds: &mut impl FnMut(RoleRef, RoleRef) -> bool) -> RelationResult {
    // report the first failing role pair under the first candidate τ
    let tau = enumerate_constrained(g.players(), &[(i, j)])
        .expect("indices checked")
        .next()
        .expect("pinned set is nonempty");
    let k = (0..g.players())
        .find(|&k| !holds(RoleRef::new(i, k), RoleRef::new(j, tau.apply(k))))
        .expect("candidate failed somewhere");
    RelationResult::fails_with(role_refutation(g, rel, RoleRef::new(i, k), RoleRef::new(j, tau.apply(k))))
}

fn q_failure(g: &Game, i: usize, j: usize, rel: RoleRelation, holds: &mut impl FnMut(RoleRef, RoleRef) -> bool) -> RelationResult {
    let n = g.players();
    let (x, y) = if !holds(RoleRef::new(i, i), RoleRef::new(j, j)) {
        (RoleRef::new(i, i), RoleRef::new(j, j))
    } else {
        let k = (0..n)
            .filter(|&k| k != i)
            .find(|&k| (0..n).filter(|&l| l != j).all(|l| !holds(RoleRef::new(i, k), RoleRef::new(j, l))))
            .expect("some k is unmatched");
        let l = (0..n).find(|&l| l != j).expect("n ≥ 2");
        (RoleRef::new(i, k), RoleRef::new(j, l))
    };
    RelationResult::fails_with(role_refutation(g, rel, x, y))
}

/// `i P^X j`; the witness is the first matching permutation `τ`.
pub fn p_relation(g: &Game, i: usize, j: usize, x: RoleRelation) -> Result<RelationResult> {
    check_players(g, i, j)?;
    let mut memo = RoleMemo {
        game: g,
        relation: x,
        seen: HashMap::new(),
    };
    let mut holds = |a, b| memo.holds(a, b);
    Ok(match p_search(g, i, j, &mut holds) {
        Some(tau) => RelationResult::holds_with(Witness::Permutation(tau)),
        None => p_failure(g, i, j, x, &mut holds),
    })
}

/// `i Q^X j`; the witness maps each `k ≠ i` to the first matching `l ≠ j`.
pub fn q_relation(g: &Game, i: usize, j: usize, x: RoleRelation) -> Result<RelationResult> {
    check_players(g, i, j)?;
    let mut memo = RoleMemo {
        game: g,
        relation: x,
        seen: HashMap::new(),
    };
    let mut holds = |a, b| memo.holds(a, b);
    Ok(match q_search(g, i, j, &mut holds) {
        Some(m) => RelationResult::holds_with(Witness::Matching(m)),
        None => q_failure(g, i, j, x, &mut holds),
    })
}

pub fn relation(g: &Game, rel: Relation, i: usize, j: usize) -> Result<RelationResult> {
    match rel {
        Relation::B => blind(g, i, j),
        Relation::R => rigid(g, i, j),
        Relation::T => twisted(g, i, j),
        Relation::M => simulates_player(g, i, j),
        Relation::PB | Relation::PT | Relation::PM => p_relation(g, i, j, rel.role_relation().unwrap()),
        Relation::QB | Relation::QT | Relation::QM => q_relation(g, i, j, rel.role_relation().unwrap()),
    }
}

/// An `n × n` grid of verdicts with per-cell witnesses and counterexamples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMatrix {
    relation: Relation,
    players: usize,
    cells: Vec<RelationResult>,
}

impl RelationMatrix {
    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn cell(&self, i: usize, j: usize) -> &RelationResult {
        &self.cells[i * self.players + j]
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.cell(i, j).holds
    }

    pub fn grid(&self) -> Vec<Vec<bool>> {
        self.cells.chunks(self.players).map(|row| row.iter().map(|c| c.holds).collect()).collect()
    }
}

pub fn relation_matrix(g: &Game, rel: Relation) -> RelationMatrix {
    let n = g.players();
    let cells = match rel.role_relation() {
        Some(x) => {
            let grid = RoleGrid::compute(g, x);
            (0..n * n)
                .into_par_iter()
                .map(|c| {
                    let (i, j) = (c / n, c % n);
                    let mut holds = |a, b| grid.holds(a, b);
                    if matches!(rel, Relation::PB | Relation::PT | Relation::PM) {
                        match p_search(g, i, j, &mut holds) {
                            Some(tau) => RelationResult::holds_with(Witness::Permutation(tau)),
                            None => p_failure(g, i, j, x, &mut holds),
                        }
                    } else {
                        match q_search(g, i, j, &mut holds) {
                            Some(m) => RelationResult::holds_with(Witness::Matching(m)),
                            None => q_failure(g, i, j, x, &mut holds),
                        }
                    }
                })
                .collect()
        }
        None => (0..n * n)
            .into_par_iter()
            .map(|c| relation(g, rel, c / n, c % n).expect("indices in range"))
            .collect(),
    };
    RelationMatrix {
        relation: rel,
        players: n,
        cells,
    }
}

/// Something a relation relates: a player or a role.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    Player(usize),
    Role(RoleRef),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Player(i) => write!(f, "{}", i + 1),
            Subject::Role(r) => write!(f, "{r}"),
        }
    }
}

/// A property verdict; when false, `counterexample` holds the element (for
/// reflexivity), pair (symmetry) or triple (transitivity) that breaks it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub counterexample: Vec<Subject>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyRow {
    pub relation: &'static str,
    pub reflexive: PropertyVerdict,
    pub symmetric: PropertyVerdict,
    pub transitive: PropertyVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub rows: Vec<PropertyRow>,
}

impl PropertyReport {
    pub fn row(&self, relation: &str) -> Option<&PropertyRow> {
        self.rows.iter().find(|r| r.relation == relation)
    }
}

/// Reflexivity, symmetry and transitivity over `blocks` of mutually
/// comparable elements; `rel(a, b)` is only called within a block.
fn scan_properties<T: Copy + Sync>(
    name: &'static str,
    blocks: &[Vec<T>],
    rel: impl Fn(T, T) -> bool + Sync,
    wrap: impl Fn(T) -> Subject,
) -> PropertyRow {
    let mut reflexive = None;
    let mut symmetric = None;
    let mut transitive = None;
    for block in blocks {
        let m = block.len();
        let verdicts: Vec<bool> = (0..m * m)
            .into_par_iter()
            .map(|c| rel(block[c / m], block[c % m]))
            .collect();
        let at = |a: usize, b: usize| verdicts[a * m + b];
        if reflexive.is_none() {
            reflexive = (0..m).find(|&a| !at(a, a)).map(|a| vec![wrap(block[a])]);
        }
        if symmetric.is_none() {
            symmetric = (0..m * m)
                .map(|c| (c / m, c % m))
                .find(|&(a, b)| at(a, b) && !at(b, a))
                .map(|(a, b)| vec![wrap(block[a]), wrap(block[b])]);
        }
        if transitive.is_none() {
            transitive = (0..m * m * m)
                .map(|c| (c / (m * m), (c / m) % m, c % m))
                .find(|&(a, b, c)| at(a, b) && at(b, c) && !at(a, c))
                .map(|(a, b, c)| vec![wrap(block[a]), wrap(block[b]), wrap(block[c])]);
        }
    }
    let verdict = |cx: Option<Vec<Subject>>| PropertyVerdict {
        holds: cx.is_none(),
        counterexample: cx.unwrap_or_default(),
    };
    PropertyRow {
        relation: name,
        reflexive: verdict(reflexive),
        symmetric: verdict(symmetric),
        transitive: verdict(transitive),
    }
}

/// Per-game verdicts for reflexivity, symmetry and transitivity of the role
/// relations (within each arity) and of `B`, `R`, `T`, `M`.
pub fn property_report(g: &Game) -> PropertyReport {
    let (off, diag) = all_roles(g.players());
    let role_blocks = vec![off, diag];
    let mut rows = Vec::new();
    for rel in RoleRelation::ALL {
        let grid = RoleGrid::compute(g, rel);
        rows.push(scan_properties(rel.name(), &role_blocks, |x, y| grid.holds(x, y), Subject::Role));
    }
    let players = vec![(0..g.players()).collect::<Vec<_>>()];
    for rel in [Relation::B, Relation::R, Relation::T, Relation::M] {
        let matrix = relation_matrix(g, rel);
        rows.push(scan_properties(rel.name(), &players, |i, j| matrix.holds(i, j), Subject::Player));
    }
    PropertyReport { rows }
}

/// One internal-consistency check: `holds` is false only if a stated
/// equivalence or inclusion is violated on this game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagnosticCheck {
    pub name: String,
    pub holds: bool,
    /// First violating cell or a short description of the mismatch.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub checks: Vec<DiagnosticCheck>,
}

impl Diagnostics {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn check(&self, name: &str) -> Option<&DiagnosticCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DiagnosticCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Name of the inclusion check `a ⊆ b`.
pub fn inclusion_name(a: Relation, b: Relation) -> String {
    format!("{a} ⊆ {b}")
}

/// Evaluates the equivalences and inclusions relating classification,
/// relations and their refinements on `g`.
pub fn diagnostics(g: &Game) -> Diagnostics {
    let n = g.players();
    let matrices: HashMap<Relation, RelationMatrix> = Relation::ALL
        .into_par_iter()
        .map(|r| (r, relation_matrix(g, r)))
        .collect();
    let class = classify(g);
    let mut checks = Vec::new();

    let iff = |name: &str, left: bool, right: bool, checks: &mut Vec<DiagnosticCheck>| {
        checks.push(DiagnosticCheck {
            name: name.to_string(),
            holds: left == right,
            detail: (left != right).then(|| format!("left side {left}, right side {right}")),
        });
    };

    let b = &matrices[&Relation::B];
    let r = &matrices[&Relation::R];
    let all_diag_b = (0..n).all(|i| b.holds(i, i));
    let all_b = (0..n).all(|i| (0..n).all(|j| b.holds(i, j)));
    let all_r = (0..n).all(|i| (0..n).all(|j| r.holds(i, j)));
    iff("anonymous ⇔ i B i for all i", class.anonymous.holds, all_diag_b, &mut checks);
    iff("symmetric ⇔ i B j for all i, j", class.symmetric.holds, all_b, &mut checks);
    checks.push(DiagnosticCheck {
        name: "i R j for all i, j ⇒ symmetric".into(),
        holds: !all_r || class.symmetric.holds,
        detail: (all_r && !class.symmetric.holds).then(|| "all pairs R but not symmetric".to_string()),
    });

    use Relation::*;
    let inclusions = [
        (B, R),
        (R, T),
        (T, M),
        (PB, PT),
        (PT, PM),
        (QB, QT),
        (QT, QM),
        (PB, QB),
        (PT, QT),
        (PM, QM),
        (T, PB),
        (T, PT),
    ];
    for (a, bb) in inclusions {
        let (ma, mb) = (&matrices[&a], &matrices[&bb]);
        let bad = (0..n * n).map(|c| (c / n, c % n)).find(|&(i, j)| ma.holds(i, j) && !mb.holds(i, j));
        checks.push(DiagnosticCheck {
            name: inclusion_name(a, bb),
            holds: bad.is_none(),
            detail: bad.map(|(i, j)| format!("cell ({},{})", i + 1, j + 1)),
        });
    }
    Diagnostics { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, FIXTURE_NAMES};

    fn perm(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn holds(g: &Game, rel: Relation, i: usize, j: usize) -> bool {
        relation(g, rel, i - 1, j - 1).unwrap().holds
    }

    #[test]
    fn relation_names_parse() {
        assert_eq!("P^B".parse::<Relation>().unwrap(), Relation::PB);
        assert_eq!("qm".parse::<Relation>().unwrap(), Relation::QM);
        assert_eq!("T".parse::<Relation>().unwrap(), Relation::T);
        assert!(matches!("X".parse::<Relation>(), Err(Error::UnknownRelation(_))));
    }

    #[test]
    fn notrans_blind_and_rigid() {
        let g = fixture("notrans3").unwrap();
        assert!(holds(&g, Relation::B, 1, 2));
        assert!(holds(&g, Relation::B, 2, 3));
        assert!(!holds(&g, Relation::B, 1, 3));
        assert!(!holds(&g, Relation::B, 1, 1));
        assert!(holds(&g, Relation::R, 1, 2));
        assert!(holds(&g, Relation::R, 2, 3));
        assert!(!holds(&g, Relation::R, 1, 3));

        let cx = &blind(&g, 0, 2).unwrap().counterexamples[0];
        assert_eq!(cx.describe(&g), "π1(a,b,c) = 0 ≠ π3(c,b,a) = 3 under (1 3)");
        let cx = &blind(&g, 0, 0).unwrap().counterexamples[0];
        assert_eq!(cx.describe(&g), "π1(a,b,c) = 0 ≠ π1(a,c,b) = 3 under (2 3)");
    }

    #[test]
    fn separating_games() {
        let g = fixture("g4").unwrap();
        assert!(holds(&g, Relation::M, 1, 2));
        assert!(!holds(&g, Relation::T, 1, 2));
        let m = simulates_player(&g, 0, 1).unwrap();
        let at = |t: &str| g.profile_index(&g.parse_profile(t).unwrap()).unwrap();
        assert_eq!(m.witness_for(at("a,b,a,b")).unwrap(), &perm("(1 2)", 4));
        assert_eq!(m.witness_for(at("a,a,a,b")).unwrap(), &perm("(1 2)(3 4)", 4));

        let gp = fixture("gprime4").unwrap();
        assert_eq!(twisted(&gp, 0, 1).unwrap().witness, Witness::Permutation(perm("(1 2)(3 4)", 4)));
        assert!(!holds(&gp, Relation::R, 1, 2));

        let gs = fixture("gsecond4").unwrap();
        assert!(holds(&gs, Relation::R, 1, 2));
        assert!(!holds(&gs, Relation::B, 1, 2));
    }

    #[test]
    fn tnotrans_twisted() {
        let g = fixture("tnotrans4").unwrap();
        let t = relation_matrix(&g, Relation::T);
        assert!(t.holds(0, 1) && t.holds(1, 0) && t.holds(1, 2) && t.holds(2, 1));
        assert!(!t.holds(0, 2) && !t.holds(2, 0));
        assert!((0..4).all(|i| t.holds(i, i)));
    }

    #[test]
    fn exsym_simulation_is_one_way() {
        let g = fixture("exsym4").unwrap();
        assert!(holds(&g, Relation::M, 1, 2));
        assert!(!holds(&g, Relation::M, 2, 1));
        let report = property_report(&g);
        let m = report.row("M").unwrap();
        assert!(!m.symmetric.holds);
        assert_eq!(m.symmetric.counterexample, vec![Subject::Player(0), Subject::Player(1)]);
        assert!(!report.row("M_r").unwrap().symmetric.holds);
    }

    #[test]
    fn notrans_properties() {
        let g = fixture("notrans3").unwrap();
        let report = property_report(&g);
        let b = report.row("B").unwrap();
        assert!(!b.reflexive.holds);
        assert!(b.symmetric.holds);
        assert!(!b.transitive.holds);
        let tri = &b.transitive.counterexample;
        let (x, y, z) = match tri[..] {
            [Subject::Player(x), Subject::Player(y), Subject::Player(z)] => (x, y, z),
            _ => panic!("player triple expected"),
        };
        assert!(blind(&g, x, y).unwrap().holds && blind(&g, y, z).unwrap().holds);
        assert!(!blind(&g, x, z).unwrap().holds);
        assert!(!report.row("R").unwrap().transitive.holds);
        assert!(report.row("R").unwrap().reflexive.holds);
        assert!(report.row("T_r").unwrap().transitive.holds);
    }

    #[test]
    fn overdet_is_all_true() {
        let g = fixture("overdet3").unwrap();
        for rel in Relation::ALL {
            let m = relation_matrix(&g, rel);
            assert!(m.grid().iter().flatten().all(|&x| x), "{rel}");
        }
        assert!(diagnostics(&g).all_hold());
    }

    #[test]
    fn p_relation_matches_by_permutation() {
        let g = fixture("overdet3").unwrap();
        let res = p_relation(&g, 0, 2, RoleRelation::Blind).unwrap();
        assert_eq!(res.witness, Witness::Permutation(perm("(1 3 2)", 3)));
        let q = q_relation(&g, 0, 2, RoleRelation::Simulates).unwrap();
        assert_eq!(q.witness, Witness::Matching(vec![(1, 0), (2, 0)]));
    }

    #[test]
    fn twisted_does_not_imply_pb_on_notrans() {
        // i T j picks one permutation; i P^B j demands every σ with σ(j) = i
        let g = fixture("notrans3").unwrap();
        assert!(twisted(&g, 0, 1).unwrap().holds);
        let pb = p_relation(&g, 0, 1, RoleRelation::Blind).unwrap();
        assert!(!pb.holds);
        assert!(pb.counterexamples[0].describe(&g).contains("under (1 3 2)"));
        assert!(p_relation(&g, 0, 1, RoleRelation::Twisted).unwrap().holds);
    }

    #[test]
    fn fixture_diagnostics() {
        for name in FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            let d = diagnostics(&g);
            for c in d.failures() {
                assert_eq!(c.name, inclusion_name(Relation::T, Relation::PB), "{name}: {c:?}");
            }
        }
        let d = diagnostics(&fixture("notrans3").unwrap());
        assert!(!d.check("T ⊆ PB").unwrap().holds);
        assert!(d.check("T ⊆ PT").unwrap().holds);
    }

    #[test]
    fn matrix_cells_match_direct_queries() {
        let g = fixture("tnotrans4").unwrap();
        for rel in Relation::ALL {
            let m = relation_matrix(&g, rel);
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(m.cell(i, j), &relation(&g, rel, i, j).unwrap(), "{rel} ({i},{j})");
                }
            }
        }
    }
}
