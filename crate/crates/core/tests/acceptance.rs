//! Acceptance suite: one PASS/FAIL line per criterion, exact equality
//! throughout. Exits nonzero when any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rayon::prelude::*;

use gamesym::fixtures::{fixture, fixture_with_star_fill, FIXTURE_NAMES};
use gamesym::game::{commutative_image, int, restrict, Game, Payoff, Profile};
use gamesym::oracle::{self, GeneratorConfig, Mode};
use gamesym::permutation::{enumerate_constrained, Permutation};
use gamesym::relations::{
    blind, relation_matrix, rigid, simulates_player, twisted, Relation, RelationMatrix,
};
use gamesym::roles::{all_roles, simulates, twisted_related, RoleGrid, RoleRef, RoleRelation, Witness};
use gamesym::symmetry::{anonymous_representation, classify, invariance_group, orbits};

/// Outcome of one clause: `None` when it held everywhere, otherwise the
/// first violation found.
struct Clause {
    name: String,
    violation: Option<String>,
    checked: usize,
}

struct Criterion {
    clauses: Vec<Clause>,
    notes: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Criterion {
            clauses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn clause(&mut self, name: &str) -> usize {
        self.clauses.push(Clause {
            name: name.to_string(),
            violation: None,
            checked: 0,
        });
        self.clauses.len() - 1
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let idx = match self.clauses.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => self.clause(name),
        };
        let c = &mut self.clauses[idx];
        c.checked += 1;
        if !ok && c.violation.is_none() {
            c.violation = Some(detail());
        }
    }

    fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.violation.is_none())
    }

    fn print(&self, number: usize, title: &str) -> bool {
        let ok = self.passed();
        println!("[{}] {number}. {title}", if ok { "PASS" } else { "FAIL" });
        for c in &self.clauses {
            match &c.violation {
                None => println!("       ok    {} ({} instances)", c.name, c.checked),
                Some(v) => println!("       FAIL  {} ({} instances): {v}", c.name, c.checked),
            }
        }
        for n in &self.notes {
            println!("       note  {n}");
        }
        ok
    }
}

fn perm(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n).unwrap()
}

fn idx(g: &Game, key: &str) -> usize {
    g.profile_index(&g.parse_profile(key).unwrap()).unwrap()
}

// 1. -----------------------------------------------------------------------

/// The verdicts and witnesses of criterion 1 for one starred fixture.
fn starred_verdicts(g: &Game, name: &str) -> Vec<(String, bool)> {
    match name {
        "g4" => {
            let m = simulates_player(g, 0, 1).unwrap();
            vec![
                ("1M2".into(), m.holds),
                ("not 1T2".into(), !twisted(g, 0, 1).unwrap().holds),
                ("σ(a,b,a,b) = (1 2)".into(), m.witness_for(idx(g, "a,b,a,b")) == Some(&perm("(1 2)", 4))),
                (
                    "σ(a,a,a,b) = (1 2)(3 4)".into(),
                    m.witness_for(idx(g, "a,a,a,b")) == Some(&perm("(1 2)(3 4)", 4)),
                ),
            ]
        }
        "gprime4" => {
            let t = twisted(g, 0, 1).unwrap();
            vec![
                ("1T2".into(), t.holds),
                ("witness (1 2)(3 4)".into(), t.witness == Witness::Permutation(perm("(1 2)(3 4)", 4))),
                ("not 1R2".into(), !rigid(g, 0, 1).unwrap().holds),
            ]
        }
        "gsecond4" => vec![
            ("1R2".into(), rigid(g, 0, 1).unwrap().holds),
            ("not 1B2".into(), !blind(g, 0, 1).unwrap().holds),
        ],
        _ => unreachable!(),
    }
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new();

    let g = fixture("notrans3").unwrap();
    let b = |i, j| blind(&g, i, j).unwrap().holds;
    let r = |i, j| rigid(&g, i, j).unwrap().holds;
    for (name, got) in [
        ("notrans3 1B2", b(0, 1)),
        ("notrans3 2B3", b(1, 2)),
        ("notrans3 not 1B3", !b(0, 2)),
        ("notrans3 not 1B1", !b(0, 0)),
        ("notrans3 1R2", r(0, 1)),
        ("notrans3 2R3", r(1, 2)),
        ("notrans3 not 1R3", !r(0, 2)),
    ] {
        c.check(name, got, || "verdict differs".into());
    }

    let g = fixture("tnotrans4").unwrap();
    let t = |i, j| twisted(&g, i, j).unwrap().holds;
    c.check("tnotrans4 1T2", t(0, 1), || "verdict differs".into());
    c.check("tnotrans4 2T3", t(1, 2), || "verdict differs".into());
    c.check("tnotrans4 not 1T3", !t(0, 2), || "verdict differs".into());
    let t13 = twisted_related(&g, RoleRef::new(0, 2), RoleRef::new(2, 0)).unwrap();
    let tried: Vec<String> = t13
        .counterexamples
        .iter()
        .map(|x| x.permutation.as_ref().unwrap().to_string())
        .collect();
    c.check(
        "tnotrans4 (1,3) refuted by exactly (1 3), (1 3)(2 4)",
        tried == ["(1 3)", "(1 3)(2 4)"],
        || format!("refuted candidates {tried:?}"),
    );
    let values: Vec<(String, Payoff, Payoff)> = t13
        .counterexamples
        .iter()
        .map(|x| (g.format_profile(&x.left.profile), x.left.value.clone(), x.right.value.clone()))
        .collect();
    c.check(
        "tnotrans4 refutations π1(a,b,c,d)=1 ≠ 4 and ≠ 0",
        values
            == vec![
                ("(a,b,c,d)".to_string(), int(1), int(4)),
                ("(a,b,c,d)".to_string(), int(1), int(0)),
            ],
        || format!("{values:?}"),
    );

    let g = fixture("exsym4").unwrap();
    let fwd = simulates(&g, RoleRef::new(0, 1), RoleRef::new(1, 0)).unwrap();
    let back = simulates(&g, RoleRef::new(1, 0), RoleRef::new(0, 1)).unwrap();
    c.check("exsym4 r_1^2 M_r r_2^1", fwd.holds, || "verdict differs".into());
    c.check("exsym4 not r_2^1 M_r r_1^2", !back.holds, || "verdict differs".into());
    let profiles: BTreeSet<String> = back
        .counterexamples
        .iter()
        .map(|x| g.format_profile(&x.left.profile))
        .collect();
    c.check(
        "exsym4 counterexample profile (a,b,c,d)",
        profiles.len() == 1 && profiles.contains("(a,b,c,d)"),
        || format!("{profiles:?}"),
    );

    for name in ["g4", "gprime4", "gsecond4"] {
        let g = fixture(name).unwrap();
        for (claim, ok) in starred_verdicts(&g, name) {
            c.check(&format!("{name} {claim}"), ok, || "verdict differs".into());
        }
    }
    c
}

// 2. -----------------------------------------------------------------------

fn criterion_2() -> Criterion {
    let mut c = Criterion::new();
    let g = fixture("overdet3").unwrap();
    let got: BTreeSet<BTreeSet<String>> = orbits(&g)
        .classes()
        .iter()
        .map(|class| class.iter().map(|p| g.format_profile(p)).collect())
        .collect();
    let expected: BTreeSet<BTreeSet<String>> = [
        vec!["(a,a,a)"],
        vec!["(a,b,a)", "(b,a,a)", "(a,a,b)"],
        vec!["(b,b,a)", "(b,a,b)", "(a,b,b)"],
        vec!["(b,b,b)"],
    ]
    .iter()
    .map(|v| v.iter().map(|s| s.to_string()).collect())
    .collect();
    c.check("overdet3 orbits equal the four listed sets", got == expected, || format!("{got:?}"));

    // actions s, r, t
    let a = Profile::new(vec![0, 1, 2, 1, 1]);
    let img = commutative_image(&a, 3);
    c.check("#(s,r,t,r,r) = (1,3,1)", img.counts() == [1, 3, 1], || format!("{:?}", img.counts()));
    let red = restrict(&a, &[2]).unwrap().commutative_image(3);
    c.check("#((s,r,t,r,r)_-3) = (1,3,0)", red.counts() == [1, 3, 0], || format!("{:?}", red.counts()));
    c
}

// 3. -----------------------------------------------------------------------

/// Seeded games for the property suite. Modes and payoff ranges rotate so
/// that collisions, and hence nontrivial relations, are common.
fn random_games(count: usize, max_players: usize) -> Vec<(String, Game)> {
    (0..count)
        .map(|k| {
            let n = 2 + k % (max_players - 1);
            let s = 2 + (k / (max_players - 1)) % 2;
            let mode = [Mode::General, Mode::Anonymous, Mode::SelfSymmetric][(k / 8) % 3];
            let mut cfg = GeneratorConfig::new(n, s, k as u64, mode);
            if (k / 24) % 2 == 1 {
                cfg.low = int(0);
                cfg.high = int(1);
            }
            let label = format!(
                "seed {k} ({}, n={n}, s={s}, range [{}, {}])",
                mode.name(),
                cfg.low,
                cfg.high
            );
            (label, oracle::generate(&cfg).unwrap())
        })
        .collect()
}

fn all_cells(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn cell(i: usize, j: usize) -> String {
    format!("({},{})", i + 1, j + 1)
}

/// Per-game theorem checks; returns `(clause, ok, detail)` triples.
fn theorem_instances(label: &str, g: &Game) -> Vec<(&'static str, bool, String)> {
    let n = g.players();
    let mut out: Vec<(&'static str, bool, String)> = Vec::new();
    let mut push = |name: &'static str, ok: bool, detail: String| out.push((name, ok, format!("{label}: {detail}")));

    let group = invariance_group(g);
    push("invariance set closed under composition and inverse", group.is_closed(), format!("group {:?}", group.elements()));

    let class = classify(g);
    let dm = class.dm_symmetric.holds;
    push(
        "dm_symmetric ⇔ self_symmetric",
        dm == class.self_symmetric.holds,
        format!("dm_symmetric {dm}, self_symmetric {}", class.self_symmetric.holds),
    );
    let equal_rows = g.profiles().all(|a| {
        let row = g.payoff(&a).unwrap();
        row.iter().all(|v| v == &row[0])
    });
    push(
        "dm_symmetric ∧ n ≥ 3 ⇒ equal payoffs in every profile",
        !(dm && n >= 3) || equal_rows,
        "dm_symmetric but payoffs differ within a profile".into(),
    );

    let m: Vec<RelationMatrix> = Relation::ALL.iter().map(|&r| relation_matrix(g, r)).collect();
    let mat = |r: Relation| &m[Relation::ALL.iter().position(|&x| x == r).unwrap()];
    let (b, r, t, mm) = (mat(Relation::B), mat(Relation::R), mat(Relation::T), mat(Relation::M));

    let all_diag_b = (0..n).all(|i| b.holds(i, i));
    let rep = anonymous_representation(g).is_ok();
    let anon = class.anonymous.holds;
    push(
        "anonymous ⇔ all i B i ⇔ anonymous representation exists",
        anon == all_diag_b && anon == rep,
        format!("anonymous {anon}, all iBi {all_diag_b}, representation {rep}"),
    );
    let all_b = all_cells(n).all(|(i, j)| b.holds(i, j));
    let sym = class.symmetric.holds;
    push(
        "symmetric ⇔ all i B j ⇔ invariance group = S_n",
        sym == all_b && sym == group.is_full(),
        format!("symmetric {sym}, all iBj {all_b}, full group {}", group.is_full()),
    );
    let all_r = all_cells(n).all(|(i, j)| r.holds(i, j));
    push("all i R j ⇒ symmetric", !all_r || sym, "all pairs R but not symmetric".into());

    for (x, y, name) in [
        (b, r, "B ⊆ R ⊆ T ⊆ M per cell"),
        (r, t, "B ⊆ R ⊆ T ⊆ M per cell"),
        (t, mm, "B ⊆ R ⊆ T ⊆ M per cell"),
    ] {
        let bad = all_cells(n).find(|&(i, j)| x.holds(i, j) && !y.holds(i, j));
        push(name, bad.is_none(), format!("{} ⊄ {} at {}", x.relation(), y.relation(), bad.map_or(String::new(), |(i, j)| cell(i, j))));
    }

    let grids: Vec<RoleGrid> = RoleRelation::ALL.iter().map(|&x| RoleGrid::compute(g, x)).collect();
    let (gb, gt, gm) = (&grids[0], &grids[1], &grids[2]);
    let (off, diag) = all_roles(n);
    let blocks = [off, diag];
    let pairs = || blocks.iter().flat_map(|bl| bl.iter().flat_map(move |&x| bl.iter().map(move |&y| (x, y))));
    let bad = pairs().find(|&(x, y)| (gb.holds(x, y) && !gt.holds(x, y)) || (gt.holds(x, y) && !gm.holds(x, y)));
    push("B_r ⊆ T_r ⊆ M_r per role pair", bad.is_none(), format!("{bad:?}"));

    let refl = |grid: &RoleGrid| blocks.iter().flatten().find(|&&x| !grid.holds(x, x)).copied();
    let symm = |grid: &RoleGrid| pairs().find(|&(x, y)| grid.holds(x, y) && !grid.holds(y, x));
    let trans = |grid: &RoleGrid| {
        blocks.iter().find_map(|bl| {
            bl.iter().find_map(|&x| {
                bl.iter().find_map(|&y| {
                    bl.iter()
                        .find(|&&z| grid.holds(x, y) && grid.holds(y, z) && !grid.holds(x, z))
                        .map(|&z| (x, y, z))
                })
            })
        })
    };
    let (tr_r, tr_s, tr_t) = (refl(gt), symm(gt), trans(gt));
    push(
        "T_r is an equivalence relation",
        tr_r.is_none() && tr_s.is_none() && tr_t.is_none(),
        format!("reflexivity {tr_r:?}, symmetry {tr_s:?}, transitivity {tr_t:?}"),
    );
    let mr_t = trans(gm);
    push("M_r is transitive", mr_t.is_none(), format!("{mr_t:?}"));

    if n >= 4 {
        let bad = (0..n).find_map(|i| {
            (0..n).find_map(|j| {
                (0..n)
                    .find(|&k| i != j && j != k && i != k && b.holds(i, j) && b.holds(j, k) && !b.holds(i, k))
                    .map(|k| (i + 1, j + 1, k + 1))
            })
        });
        push("B transitive when n ≥ 4 (distinct players)", bad.is_none(), format!("{bad:?}"));
    }

    let bad = all_cells(n).find(|&(i, j)| t.holds(i, j) && !mat(Relation::PB).holds(i, j));
    push("T ⊆ P^B", bad.is_none(), format!("i T j but not i P^B j at {}", bad.map_or(String::new(), |(i, j)| cell(i, j))));

    use Relation::*;
    for (x, y) in [(PB, QB), (PT, QT), (PM, QM), (PB, PT), (PT, PM), (QB, QT), (QT, QM)] {
        let bad = all_cells(n).find(|&(i, j)| mat(x).holds(i, j) && !mat(y).holds(i, j));
        push(
            "P^X ⊆ Q^X and both monotone in X",
            bad.is_none(),
            format!("{x} ⊄ {y} at {}", bad.map_or(String::new(), |(i, j)| cell(i, j))),
        );
    }

    // single-quantifier forms over σ with σ(j) = i
    for (i, j) in all_cells(n) {
        let verdicts: Vec<bool> = enumerate_constrained(n, &[(j, i)])
            .unwrap()
            .map(|sigma| (0..g.num_profiles()).all(|a| g.payoff_id(a, i) == g.payoff_id(g.act_index(a, &sigma), j)))
            .collect();
        let exists = verdicts.iter().any(|&v| v);
        let forall = verdicts.iter().all(|&v| v);
        push(
            "i P^B j ⇔ ∃σ, σ(j)=i, ∀a π_i(a) = π_j(aσ)",
            mat(PB).holds(i, j) == exists,
            format!("cell {}: P^B {}, ∃σ form {exists}", cell(i, j), mat(PB).holds(i, j)),
        );
        push(
            "i Q^B j ⇔ ∀σ, σ(j)=i, ∀a π_i(a) = π_j(aσ)",
            mat(QB).holds(i, j) == forall,
            format!("cell {}: Q^B {}, ∀σ form {forall}", cell(i, j), mat(QB).holds(i, j)),
        );
        push(
            "(note) i P^T j ⇔ ∃σ form",
            mat(PT).holds(i, j) == exists,
            format!("cell {}: P^T {}, ∃σ form {exists}", cell(i, j), mat(PT).holds(i, j)),
        );
        push(
            "(note) i P^B j ⇔ ∀σ form",
            mat(PB).holds(i, j) == forall,
            format!("cell {}: P^B {}, ∀σ form {forall}", cell(i, j), mat(PB).holds(i, j)),
        );
        push(
            "(note) T ⊆ P^T",
            !t.holds(i, j) || mat(PT).holds(i, j),
            format!("cell {}", cell(i, j)),
        );
    }
    out
}

fn criterion_3() -> Criterion {
    let mut games: Vec<(String, Game)> = FIXTURE_NAMES.iter().map(|n| (n.to_string(), fixture(n).unwrap())).collect();
    games.extend(random_games(1000, 5));
    let results: Vec<Vec<(&'static str, bool, String)>> = games.par_iter().map(|(l, g)| theorem_instances(l, g)).collect();
    let mut c = Criterion::new();
    let mut notes = Criterion::new();
    for res in results {
        for (name, ok, detail) in res {
            if let Some(note) = name.strip_prefix("(note) ") {
                notes.check(note, ok, || detail);
            } else {
                c.check(name, ok, || detail);
            }
        }
    }
    for cl in notes.clauses {
        c.notes.push(match cl.violation {
            None => format!("{} held on all {} instances", cl.name, cl.checked),
            Some(v) => format!("{} fails: {v}", cl.name),
        });
    }
    c.notes.push(format!("{} games: {} fixtures and 1000 seeded random games", games.len(), FIXTURE_NAMES.len()));
    c
}

// 4. -----------------------------------------------------------------------

fn criterion_4() -> Criterion {
    let mut games: Vec<(String, Game)> = FIXTURE_NAMES.iter().map(|n| (n.to_string(), fixture(n).unwrap())).collect();
    games.extend(random_games(500, 4));
    let results: Vec<(String, Result<Vec<oracle::Divergence>, String>)> = games
        .par_iter()
        .map(|(l, g)| (l.clone(), oracle::differential(g).map_err(|e| e.to_string())))
        .collect();
    let mut c = Criterion::new();
    for (label, res) in results {
        match res {
            Ok(d) => c.check("optimized predicates equal their naive twins", d.is_empty(), || {
                format!("{label}: {}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "))
            }),
            Err(e) => c.check("optimized predicates equal their naive twins", false, || format!("{label}: {e}")),
        }
    }
    c
}

// 5. -----------------------------------------------------------------------

fn criterion_5() -> Criterion {
    let mut c = Criterion::new();
    for seed in 0..100u64 {
        let n = 2 + (seed % 4) as usize;
        let s = 2 + ((seed / 4) % 2) as usize;
        let cfg = GeneratorConfig::new(n, s, seed, Mode::Anonymous);
        let g = oracle::generate(&cfg).unwrap();
        c.check("anonymous mode classifies anonymous", classify(&g).anonymous.holds, || format!("seed {seed}"));
        let utilities = oracle::generate_utilities(&cfg).unwrap();
        let recovered = anonymous_representation(&g);
        c.check(
            "anonymous mode round-trips its utilities",
            recovered.as_ref().is_ok_and(|u| u == &utilities) && utilities.to_game().unwrap() == g,
            || format!("seed {seed}"),
        );
        let cfg = GeneratorConfig::new(n, s, seed, Mode::SelfSymmetric);
        let g = oracle::generate(&cfg).unwrap();
        c.check("self_symmetric mode classifies self-symmetric", classify(&g).self_symmetric.holds, || format!("seed {seed}"));
    }
    c
}

// 6. -----------------------------------------------------------------------

fn criterion_6() -> Criterion {
    let mut c = Criterion::new();
    for name in ["g4", "gprime4", "gsecond4"] {
        let base = fixture(name).unwrap();
        let reference = starred_verdicts(&base, name);
        let cells = |g: &Game| -> Vec<(Relation, usize, usize, bool)> {
            Relation::ALL
                .iter()
                .flat_map(|&r| {
                    let m = relation_matrix(g, r);
                    [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(i, j)| (r, i, j, m.holds(i, j)))
                })
                .collect()
        };
        let reference_cells = cells(&base);
        for fill in [int(0), int(7), int(-3)] {
            let g = fixture_with_star_fill(name, &fill).unwrap();
            c.check("criterion 1 verdicts unchanged by star fill", starred_verdicts(&g, name) == reference, || {
                format!("{name} with fill {fill}")
            });
            c.check("player 1/2 cells of every relation unchanged", cells(&g) == reference_cells, || {
                format!("{name} with fill {fill}")
            });
        }
    }
    c
}

// 7. -----------------------------------------------------------------------

fn criterion_7() -> Criterion {
    let mut c = Criterion::new();
    let args = ["relations", "--fixture", "tnotrans4", "--relation", "T", "--format", "json"];
    let runs: Vec<Vec<u8>> = (0..5)
        .map(|_| {
            let out = Command::new(env!("CARGO_BIN_EXE_gamesym")).args(args).output().expect("binary runs");
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    c.check("repeated runs give identical bytes", runs.windows(2).all(|w| w[0] == w[1]), || "outputs differ".into());
    let in_process = gamesym::cli::run(std::iter::once("gamesym").chain(args));
    c.check("in-process run matches the binary", in_process.stdout.as_bytes() == runs[0].as_slice(), || {
        "outputs differ".into()
    });
    let v: serde_json::Value = serde_json::from_slice(&runs[0]).unwrap();
    c.check("output includes the witness for 1 T 2", v["witnesses"]["1,2"] == "(1 2)", || v["witnesses"].to_string());
    c
}

type Named = (&'static str, fn() -> Criterion);

fn main() -> ExitCode {
    let criteria: [Named; 7] = [
        ("Worked-example reproduction", criterion_1),
        ("Orbit reproduction", criterion_2),
        ("Theorem instances on fixtures and 1000 random games", criterion_3),
        ("Differential testing against the naive oracle", criterion_4),
        ("Generator postconditions", criterion_5),
        ("Star-independence", criterion_6),
        ("Determinism of JSON output", criterion_7),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        if !result.print(k + 1, title) {
            failed += 1;
        }
        println!("       time  {:.1} s", start.elapsed().as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
