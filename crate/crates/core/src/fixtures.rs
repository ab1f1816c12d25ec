//! Built-in example games, and a checker for the verdicts they are known to
//! produce.
//!
//! Unlisted profiles pay zero to everyone. Some tables leave payoffs open
//! (`*`); those are filled with zero unless another fill is requested
//! through [`fixture_with_star_fill`].

use std::fmt;

use crate::error::{Error, Result};
use crate::game::{int, Game, Payoff};
use crate::permutation::Permutation;
use crate::relations::{blind, rigid, simulates_player, twisted};
use crate::roles::{simulates, twisted_related, RoleRef, Witness};
use crate::symmetry::{classify, orbits};

pub const FIXTURE_NAMES: [&str; 8] = [
    "overdet3", "notrans3", "tnotrans4", "exsym4", "g4", "gprime4", "gsecond4", "gthird4",
];

/// Fixtures whose tables contain open (`*`) entries.
pub const STARRED: [&str; 4] = ["g4", "gprime4", "gsecond4", "gthird4"];

#[derive(Clone, Copy)]
enum E {
    V(i64),
    Star,
}

use E::{Star, V};

struct Table {
    name: &'static str,
    about: &'static str,
    players: usize,
    actions: &'static [&'static str],
    rows: &'static [(&'static str, [E; 4])],
}

const AB: &[&str] = &["a", "b"];
const ABC: &[&str] = &["a", "b", "c"];
const ABCD: &[&str] = &["a", "b", "c", "d"];

// three-player rows carry a trailing unused slot
const Z: E = V(0);

static TABLES: [Table; 8] = [
    Table {
        name: "overdet3",
        about: "three players, payoffs shared by all and constant on orbits",
        players: 3,
        actions: AB,
        rows: &[
            ("a,a,a", [V(10), V(10), V(10), Z]),
            ("a,b,a", [V(5), V(5), V(5), Z]),
            ("b,a,a", [V(5), V(5), V(5), Z]),
            ("b,b,a", [V(-5), V(-5), V(-5), Z]),
            ("a,a,b", [V(5), V(5), V(5), Z]),
            ("a,b,b", [V(-5), V(-5), V(-5), Z]),
            ("b,a,b", [V(-5), V(-5), V(-5), Z]),
            ("b,b,b", [V(0), V(0), V(0), Z]),
        ],
    },
    Table {
        name: "notrans3",
        about: "1B2 and 2B3 but not 1B3; B is not reflexive",
        players: 3,
        actions: ABC,
        rows: &[
            ("a,b,c", [V(0), V(1), V(2), Z]),
            ("a,c,b", [V(3), V(2), V(1), Z]),
            ("b,a,c", [V(1), V(0), V(4), Z]),
            ("b,c,a", [V(5), V(4), V(0), Z]),
            ("c,a,b", [V(2), V(3), V(5), Z]),
            ("c,b,a", [V(4), V(5), V(3), Z]),
        ],
    },
    Table {
        name: "tnotrans4",
        about: "1T2 and 2T3 but not 1T3",
        players: 4,
        actions: ABCD,
        rows: &[
            ("a,b,c,d", [V(1), V(2), V(3), V(0)]),
            ("a,c,b,d", [V(4), V(3), V(2), V(0)]),
            ("c,a,b,d", [V(3), V(4), V(5), V(0)]),
            ("c,b,a,d", [V(6), V(5), V(4), V(0)]),
            ("b,c,a,d", [V(5), V(6), V(1), V(0)]),
            ("b,a,c,d", [V(2), V(1), V(6), V(0)]),
        ],
    },
    Table {
        name: "exsym4",
        about: "a single nonzero payoff; 1M2 but not 2M1",
        players: 4,
        actions: ABCD,
        rows: &[("a,b,c,d", [V(0), V(1), V(0), V(0)])],
    },
    Table {
        name: "g4",
        about: "1M2 but not 1T2",
        players: 4,
        actions: AB,
        rows: &[
            ("a,a,a,b", [V(1), V(2), Star, Star]),
            ("a,a,b,a", [V(2), V(1), Star, Star]),
            ("a,b,a,b", [V(3), V(4), Star, Star]),
            ("b,a,a,b", [V(4), V(3), Star, Star]),
        ],
    },
    Table {
        name: "gprime4",
        about: "1T2 but not 1R2",
        players: 4,
        actions: AB,
        rows: &[
            ("a,b,a,b", [V(1), V(2), Star, Star]),
            ("a,b,b,a", [V(3), V(4), Star, Star]),
            ("b,a,a,b", [V(4), V(3), Star, Star]),
            ("b,a,b,a", [V(2), V(1), Star, Star]),
        ],
    },
    Table {
        name: "gsecond4",
        about: "1R2 but not 1B2",
        players: 4,
        actions: AB,
        rows: &[
            ("a,b,a,b", [V(1), V(2), Star, Star]),
            ("a,b,b,a", [V(3), V(4), Star, Star]),
            ("b,a,a,b", [V(2), V(1), Star, Star]),
            ("b,a,b,a", [V(4), V(3), Star, Star]),
        ],
    },
    Table {
        name: "gthird4",
        about: "completion left open; unlisted profiles filled with zero",
        players: 4,
        actions: AB,
        rows: &[
            ("a,b,a,b", [V(1), V(2), Star, Star]),
            ("a,b,b,a", [V(1), V(2), Star, Star]),
            ("b,a,a,b", [V(2), V(1), Star, Star]),
            ("b,a,b,a", [V(2), V(1), Star, Star]),
        ],
    },
];

fn table(name: &str) -> Result<&'static Table> {
    TABLES
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

/// One-line description of a fixture.
pub fn describe(name: &str) -> Result<&'static str> {
    Ok(table(name)?.about)
}

pub fn fixture(name: &str) -> Result<Game> {
    fixture_with_star_fill(name, &Payoff::default())
}

/// The fixture with every `*` entry replaced by `fill`.
pub fn fixture_with_star_fill(name: &str, fill: &Payoff) -> Result<Game> {
    let t = table(name)?;
    let actions: Vec<String> = t.actions.iter().map(|a| a.to_string()).collect();
    let zero = Game::new(
        t.players,
        actions.clone(),
        vec![vec![Payoff::default(); t.players]; actions.len().pow(t.players as u32)],
    )?;
    let mut cells = zero.to_table();
    for (key, entries) in t.rows {
        let idx = zero.profile_index(&zero.parse_profile(key)?)?;
        cells[idx] = entries[..t.players]
            .iter()
            .map(|e| match e {
                V(v) => int(*v),
                Star => fill.clone(),
            })
            .collect();
    }
    Game::new(t.players, actions, cells)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A verdict the example game was built to exhibit.
    Asserted,
    /// Reported as computed; no expected value exists.
    Computed,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Asserted => "asserted",
            Provenance::Computed => "computed, not asserted",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub fixture: &'static str,
    pub claim: String,
    pub provenance: Provenance,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Checker {
    checks: Vec<FixtureCheck>,
}

impl Checker {
    fn assert(&mut self, fixture: &'static str, claim: impl Into<String>, passed: bool) {
        self.checks.push(FixtureCheck {
            fixture,
            claim: claim.into(),
            provenance: Provenance::Asserted,
            passed,
            detail: None,
        });
    }

    fn relation(&mut self, g: &Game, fixture: &'static str, claim: &str, expected: bool, got: Result<bool>) {
        match got {
            Ok(v) => self.assert(fixture, format!("{claim} is {expected}"), v == expected),
            Err(e) => self.checks.push(FixtureCheck {
                fixture,
                claim: claim.to_string(),
                provenance: Provenance::Asserted,
                passed: false,
                detail: Some(format!("{e} ({} players)", g.players())),
            }),
        }
    }
}

fn perm(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n).expect("literal cycle")
}

fn payoff_is(g: &Game, key: &str, expected: &[i64]) -> bool {
    g.parse_profile(key)
        .and_then(|p| g.payoff(&p).map(|v| v.to_vec()))
        .map(|v| v == expected.iter().map(|&x| int(x)).collect::<Vec<_>>())
        .unwrap_or(false)
}

fn witness_at(g: &Game, w: &crate::roles::RelationResult, key: &str) -> Option<Permutation> {
    let idx = g.profile_index(&g.parse_profile(key).ok()?).ok()?;
    w.witness_for(idx).cloned()
}

/// Checks the fixtures against the verdicts they were built to show, using
/// star fill `fill` for the starred tables.
pub fn verify_fixtures_with_fill(fill: &Payoff) -> Result<FixtureReport> {
    let mut c = Checker { checks: Vec::new() };
    let load = |name| fixture_with_star_fill(name, fill);

    let g = load("overdet3")?;
    c.assert("overdet3", "π(a,a,a) = (10,10,10)", payoff_is(&g, "a,a,a", &[10, 10, 10]));
    c.assert("overdet3", "π(b,a,a) = (5,5,5)", payoff_is(&g, "b,a,a", &[5, 5, 5]));
    c.assert("overdet3", "π(b,b,b) = (0,0,0)", payoff_is(&g, "b,b,b", &[0, 0, 0]));
    c.assert("overdet3", "self-symmetric", classify(&g).self_symmetric.holds);
    let got: Vec<Vec<String>> = orbits(&g)
        .classes()
        .iter()
        .map(|class| {
            let mut v: Vec<String> = class.iter().map(|p| g.format_profile(p)).collect();
            v.sort();
            v
        })
        .collect();
    let mut expected = vec![
        vec!["(a,a,a)"],
        vec!["(a,a,b)", "(a,b,a)", "(b,a,a)"],
        vec!["(a,b,b)", "(b,a,b)", "(b,b,a)"],
        vec!["(b,b,b)"],
    ];
    let mut got_sorted = got.clone();
    got_sorted.sort();
    expected.sort();
    c.assert("overdet3", "four orbits as listed", got_sorted == expected);

    let g = load("notrans3")?;
    c.assert("notrans3", "π(c,a,b) = (2,3,5)", payoff_is(&g, "c,a,b", &[2, 3, 5]));
    c.assert("notrans3", "27 profiles", g.num_profiles() == 27);
    for (claim, expected, got) in [
        ("1B2", true, blind(&g, 0, 1)),
        ("2B3", true, blind(&g, 1, 2)),
        ("1B3", false, blind(&g, 0, 2)),
        ("1B1", false, blind(&g, 0, 0)),
        ("1R2", true, rigid(&g, 0, 1)),
        ("2R3", true, rigid(&g, 1, 2)),
        ("1R3", false, rigid(&g, 0, 2)),
    ] {
        c.relation(&g, "notrans3", claim, expected, got.map(|r| r.holds));
    }
    c.assert("notrans3", "not anonymous", !classify(&g).anonymous.holds);

    let g = load("tnotrans4")?;
    for (claim, expected, got) in [
        ("1T2", true, twisted(&g, 0, 1)),
        ("2T3", true, twisted(&g, 1, 2)),
        ("1T3", false, twisted(&g, 0, 2)),
    ] {
        c.relation(&g, "tnotrans4", claim, expected, got.map(|r| r.holds));
    }
    let t13 = twisted_related(&g, RoleRef::new(0, 2), RoleRef::new(2, 0))?;
    let tried: Vec<Option<Permutation>> = t13.counterexamples.iter().map(|x| x.permutation.clone()).collect();
    c.assert(
        "tnotrans4",
        "1T3 refuted by (1 3) and (1 3)(2 4)",
        tried == vec![Some(perm("(1 3)", 4)), Some(perm("(1 3)(2 4)", 4))],
    );
    c.assert(
        "tnotrans4",
        "1T2 witness (1 2)",
        twisted(&g, 0, 1)?.witness == Witness::Permutation(perm("(1 2)", 4)),
    );

    let g = load("exsym4")?;
    let nonzero: Vec<(String, usize)> = g
        .profiles()
        .flat_map(|p| {
            let key = g.format_profile(&p);
            let row = g.payoff(&p).expect("own profile").to_vec();
            row.into_iter()
                .enumerate()
                .filter(|(_, v)| *v != Payoff::default())
                .map(move |(i, _)| (key.clone(), i))
        })
        .collect();
    c.assert("exsym4", "every payoff zero except π2(a,b,c,d)", nonzero == vec![("(a,b,c,d)".to_string(), 1)]);
    c.assert("exsym4", "π2(a,b,c,d) = 1", payoff_is(&g, "a,b,c,d", &[0, 1, 0, 0]));
    let fwd = simulates(&g, RoleRef::new(0, 1), RoleRef::new(1, 0))?;
    c.assert("exsym4", "r_1^2 M_r r_2^1", fwd.holds);
    c.assert(
        "exsym4",
        "σ(b,a,c,d) = (1 2)(3 4)",
        witness_at(&g, &fwd, "b,a,c,d") == Some(perm("(1 2)(3 4)", 4)),
    );
    c.assert("exsym4", "σ(b,a,d,c) = (1 2)", witness_at(&g, &fwd, "b,a,d,c") == Some(perm("(1 2)", 4)));
    let back = simulates(&g, RoleRef::new(1, 0), RoleRef::new(0, 1))?;
    let at_abcd = back
        .counterexamples
        .first()
        .map(|x| g.format_profile(&x.left.profile) == "(a,b,c,d)")
        .unwrap_or(false);
    c.assert("exsym4", "not r_2^1 M_r r_1^2, refuted at (a,b,c,d)", !back.holds && at_abcd);
    c.assert("exsym4", "not symmetric", !classify(&g).symmetric.holds);

    let g = load("g4")?;
    let m = simulates_player(&g, 0, 1)?;
    c.assert("g4", "1M2", m.holds);
    c.relation(&g, "g4", "1T2", false, twisted(&g, 0, 1).map(|r| r.holds));
    c.assert("g4", "σ(a,b,a,b) = (1 2)", witness_at(&g, &m, "a,b,a,b") == Some(perm("(1 2)", 4)));
    c.assert("g4", "σ(a,a,a,b) = (1 2)(3 4)", witness_at(&g, &m, "a,a,a,b") == Some(perm("(1 2)(3 4)", 4)));

    let g = load("gprime4")?;
    c.assert(
        "gprime4",
        "1T2 with witness (1 2)(3 4)",
        twisted(&g, 0, 1)?.witness == Witness::Permutation(perm("(1 2)(3 4)", 4)),
    );
    c.relation(&g, "gprime4", "1R2", false, rigid(&g, 0, 1).map(|r| r.holds));

    let g = load("gsecond4")?;
    c.relation(&g, "gsecond4", "1R2", true, rigid(&g, 0, 1).map(|r| r.holds));
    c.relation(&g, "gsecond4", "1B2", false, blind(&g, 0, 1).map(|r| r.holds));

    let g = load("gthird4")?;
    let b = blind(&g, 0, 1)?;
    c.checks.push(FixtureCheck {
        fixture: "gthird4",
        claim: format!("1B2 is {} with zero completion", b.holds),
        provenance: Provenance::Computed,
        passed: true,
        detail: b.counterexamples.first().map(|x| x.describe(&g)),
    });

    Ok(FixtureReport { checks: c.checks })
}

pub fn verify_fixtures() -> Result<FixtureReport> {
    verify_fixtures_with_fill(&Payoff::default())
}
