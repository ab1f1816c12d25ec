//! The `gamesym` command line.
//!
//! [`run`] takes the full argument vector and returns the exit code with the
//! text destined for stdout and stderr, so the binary is a thin wrapper and
//! every command can be exercised in-process.
//!
//! Exit codes: 0 on success, 1 when an analysis reports a conflict the user
//! asked to treat as fatal (`--strict`) or when fixture checks fail, 2 on
//! input errors.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::fixtures::{self, FIXTURE_NAMES};
use crate::game::{parse_game, parse_rational, serialize_game, Game};
use crate::oracle::{self, GeneratorConfig, Mode};
use crate::relations::{self, diagnostics, property_report, relation_matrix, Relation};
use crate::report::*;
use crate::roles::{self, extract_role, tr_equivalence_classes, RoleRef, RoleRelation};
use crate::symmetry::{anonymous_representation, classify, invariance_group, orbits};

#[derive(Debug, Parser)]
#[command(name = "gamesym", version, about = "Symmetry and role analysis of finite strategic games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Args)]
struct Input {
    /// Game file to analyse.
    path: Option<PathBuf>,
    /// Use a built-in game instead of a file.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Anonymity and symmetry predicates.
    Classify(Input),
    /// Permutations of the players that leave the game invariant.
    Group(Input),
    /// Orbits of profiles under permutations of the players.
    Orbits(Input),
    /// Relation matrices between players (B, R, T, M, PB, PT, PM, QB, QT, QM).
    Relations {
        #[command(flatten)]
        input: Input,
        /// Relation to compute; all of them when omitted.
        #[arg(long)]
        relation: Option<String>,
        /// Restrict to one pair of players, `i,j` (1-based).
        #[arg(long)]
        pair: Option<String>,
    },
    /// Roles and the relations between them.
    ///
    /// With `--pair i,j` prints the role r_i^j; with `--pair i,j,k,l` compares
    /// r_i^j with r_k^l; without a pair, prints the twisted-equivalence classes.
    Roles {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pair: Option<String>,
        /// Role relation to test: Br, Tr or Mr; all three when omitted.
        #[arg(long)]
        relation: Option<String>,
    },
    /// Classification, anonymous representation, relation properties and
    /// consistency checks.
    Report {
        #[command(flatten)]
        input: Input,
        /// Exit with status 1 when the game has no anonymous representation.
        #[arg(long)]
        strict: bool,
    },
    /// Print a built-in game, or list them when no name is given.
    Fixture {
        name: Option<String>,
        /// Write the game file here instead of printing it.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Generate a random game.
    Generate {
        #[arg(long, default_value_t = 3)]
        players: usize,
        #[arg(long, default_value_t = 2)]
        actions: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// general, anonymous or self_symmetric.
        #[arg(long, default_value = "general")]
        mode: String,
        #[arg(long, default_value = "-9", allow_hyphen_values = true)]
        low: String,
        #[arg(long, default_value = "9", allow_hyphen_values = true)]
        high: String,
        /// Write the game file here instead of printing it.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check the built-in games against their expected verdicts.
    Verify {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
                _ => Outcome::input_error(rendered.lines().next().unwrap_or("invalid arguments").trim()),
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(msg) => Outcome::input_error(format!("error: {msg}")),
    }
}

type Exec = std::result::Result<Outcome, String>;

fn load(input: &Input) -> std::result::Result<Game, String> {
    match (&input.path, &input.fixture) {
        (Some(_), Some(_)) => Err("give either a game file or --fixture, not both".into()),
        (None, None) => Err("no input: give a game file or --fixture <name>".into()),
        (None, Some(name)) => fixtures::fixture(name).map_err(|e| match e {
            Error::UnknownFixture(n) => format!("unknown fixture '{n}' (known: {})", FIXTURE_NAMES.join(", ")),
            other => other.to_string(),
        }),
        (Some(path), None) => {
            let bytes = fs::read(path).map_err(|e| format!("cannot read '{}': {e}", path.display()))?;
            parse_game(&bytes).map_err(|e| format!("'{}': {e}", path.display()))
        }
    }
}

fn render(format: Format, json: impl FnOnce() -> Value, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => to_json_string(&json()),
        Format::Table => table(),
    }
}

/// Parses `i,j` or `i,j,k,l` (1-based) into 0-based player indices.
fn parse_players(text: &str, n: usize, allowed: &[usize]) -> std::result::Result<Vec<usize>, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if !allowed.contains(&parts.len()) {
        return Err(format!("--pair '{text}' must list {} player numbers", allowed.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" or ")));
    }
    parts
        .iter()
        .map(|p| match p.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            Ok(_) => Err(format!("player '{p}' out of range 1..={n}")),
            Err(_) => Err(format!("player '{p}' is not a number")),
        })
        .collect()
}

fn parse_role_relation(text: &str) -> std::result::Result<RoleRelation, String> {
    match text.to_ascii_lowercase().replace('_', "").as_str() {
        "br" | "b" => Ok(RoleRelation::Blind),
        "tr" | "t" => Ok(RoleRelation::Twisted),
        "mr" | "m" => Ok(RoleRelation::Simulates),
        _ => Err(format!("unknown role relation '{text}' (expected Br, Tr or Mr)")),
    }
}

fn write_or_print(text: String, emit: Option<PathBuf>) -> Exec {
    match emit {
        None => Ok(Outcome::ok(text)),
        Some(path) => {
            fs::write(&path, text).map_err(|e| format!("cannot write '{}': {e}", path.display()))?;
            Ok(Outcome::ok(format!("wrote {}\n", path.display())))
        }
    }
}

fn execute(cmd: Command) -> Exec {
    match cmd {
        Command::Classify(input) => {
            let g = load(&input)?;
            let c = classify(&g);
            Ok(Outcome::ok(render(input.format, || classification_json(&g, &c), || classification_table(&g, &c))))
        }
        Command::Group(input) => {
            let g = load(&input)?;
            let group = invariance_group(&g);
            Ok(Outcome::ok(render(input.format, || group_json(&group), || group_table(&group))))
        }
        Command::Orbits(input) => {
            let g = load(&input)?;
            let o = orbits(&g);
            Ok(Outcome::ok(render(input.format, || orbits_json(&g, &o), || orbits_table(&g, &o))))
        }
        Command::Relations { input, relation, pair } => relations_cmd(input, relation, pair),
        Command::Roles { input, pair, relation } => roles_cmd(input, pair, relation),
        Command::Report { input, strict } => report_cmd(input, strict),
        Command::Fixture { name, emit } => match name {
            None => {
                let mut out = String::new();
                for name in FIXTURE_NAMES {
                    out.push_str(&format!("{name:<10} {}\n", fixtures::describe(name).expect("listed")));
                }
                Ok(Outcome::ok(out))
            }
            Some(name) => {
                let g = load(&Input {
                    path: None,
                    fixture: Some(name),
                    format: Format::Table,
                })?;
                write_or_print(serialize_game(&g), emit)
            }
        },
        Command::Generate {
            players,
            actions,
            seed,
            mode,
            low,
            high,
            emit,
        } => {
            let mode: Mode = mode.parse().map_err(|e: Error| e.to_string())?;
            let mut cfg = GeneratorConfig::new(players, actions, seed, mode);
            cfg.low = parse_rational(&low).map_err(|e| format!("--low '{low}': {e}"))?;
            cfg.high = parse_rational(&high).map_err(|e| format!("--high '{high}': {e}"))?;
            let text = oracle::emit(&cfg).map_err(|e| e.to_string())?;
            write_or_print(text, emit)
        }
        Command::Verify { format } => {
            let report = fixtures::verify_fixtures().map_err(|e| e.to_string())?;
            let text = render(format, || fixture_report_json(&report), || fixture_report_table(&report));
            Ok(Outcome {
                code: if report.all_pass() { 0 } else { 1 },
                stdout: text,
                stderr: String::new(),
            })
        }
    }
}

fn relations_cmd(input: Input, relation: Option<String>, pair: Option<String>) -> Exec {
    let g = load(&input)?;
    let rels: Vec<Relation> = match &relation {
        Some(name) => vec![name.parse().map_err(|_| {
            format!("unknown relation '{name}' (expected one of B, R, T, M, PB, PT, PM, QB, QT, QM)")
        })?],
        None => Relation::ALL.to_vec(),
    };
    if let Some(pair) = pair {
        let p = parse_players(&pair, g.players(), &[2])?;
        let results: Vec<(Relation, roles::RelationResult)> = rels
            .iter()
            .map(|&r| relations::relation(&g, r, p[0], p[1]).map(|res| (r, res)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let json = || {
            Value::Object(
                results
                    .iter()
                    .map(|(r, res)| (r.name().to_string(), relation_result_json(&g, res)))
                    .collect(),
            )
        };
        let table = || {
            results
                .iter()
                .map(|(r, res)| relation_result_table(&g, &format!("{} {} {}", p[0] + 1, r, p[1] + 1), res))
                .collect::<String>()
        };
        return Ok(Outcome::ok(render(input.format, json, table)));
    }
    let matrices: Vec<_> = rels.iter().map(|&r| relation_matrix(&g, r)).collect();
    let text = match (input.format, matrices.len()) {
        (Format::Json, 1) => to_json_string(&matrix_json(&g, &matrices[0])),
        (Format::Json, _) => to_json_string(&Value::Array(matrices.iter().map(|m| matrix_json(&g, m)).collect())),
        (Format::Table, _) => matrices.iter().map(|m| matrix_table(&g, m)).collect::<Vec<_>>().join("\n"),
    };
    Ok(Outcome::ok(text))
}

fn roles_cmd(input: Input, pair: Option<String>, relation: Option<String>) -> Exec {
    let g = load(&input)?;
    let Some(pair) = pair else {
        let classes = tr_equivalence_classes(&g);
        return Ok(Outcome::ok(render(input.format, || role_classes_json(&classes), || role_classes_table(&classes))));
    };
    let p = parse_players(&pair, g.players(), &[2, 4])?;
    if p.len() == 2 {
        let role = extract_role(&g, p[0], p[1]).map_err(|e| e.to_string())?;
        let removed: Vec<usize> = if p[0] == p[1] { vec![p[0]] } else { vec![p[0], p[1]] };
        let mut reduced: Vec<_> = g
            .profiles()
            .map(|a| crate::game::restrict(&a, &removed).expect("valid players"))
            .collect();
        reduced.sort();
        reduced.dedup();
        let entries = role.entries(&reduced).map_err(|e| e.to_string())?;
        let name = role.role().to_string();
        let json = || {
            json!({
                "role": name,
                "entries": Value::Object(entries.iter().map(|(a, v)| (g.profile_key(a), payoff_json(v))).collect()),
            })
        };
        let table = || {
            let mut out = format!("{name}: payoff of player {} by profile\n", p[0] + 1);
            for (a, v) in &entries {
                out.push_str(&format!("  {} {}\n", g.format_profile(a), v));
            }
            out
        };
        return Ok(Outcome::ok(render(input.format, json, table)));
    }
    let (x, y) = (RoleRef::new(p[0], p[1]), RoleRef::new(p[2], p[3]));
    let rels = match relation {
        Some(r) => vec![parse_role_relation(&r)?],
        None => RoleRelation::ALL.to_vec(),
    };
    let results: Vec<(RoleRelation, roles::RelationResult)> = rels
        .iter()
        .map(|&r| roles::role_relation(&g, r, x, y).map(|res| (r, res)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let json = || {
        Value::Object(
            results
                .iter()
                .map(|(r, res)| (r.name().to_string(), relation_result_json(&g, res)))
                .collect(),
        )
    };
    let table = || {
        results
            .iter()
            .map(|(r, res)| relation_result_table(&g, &format!("{x} {} {y}", r.name()), res))
            .collect::<String>()
    };
    Ok(Outcome::ok(render(input.format, json, table)))
}

fn report_cmd(input: Input, strict: bool) -> Exec {
    let g = load(&input)?;
    let class = classify(&g);
    let group = invariance_group(&g);
    let orbit_count = orbits(&g).len();
    let rep = anonymous_representation(&g);
    let props = property_report(&g);
    let diag = diagnostics(&g);
    let text = match input.format {
        Format::Json => {
            let representation = match &rep {
                Ok(u) => json!({ "holds": true, "representation": anonymous_json(u) }),
                Err(cx) => json!({ "holds": false, "conflict": counterexample_json(&g, cx) }),
            };
            to_json_string(&json!({
                "players": g.players(),
                "actions": g.actions(),
                "classification": classification_json(&g, &class),
                "group_order": group.len(),
                "orbits": orbit_count,
                "anonymous_representation": representation,
                "properties": properties_json(&props),
                "diagnostics": diagnostics_json(&diag),
                "conventions": ["i R i holds by the convention (i i) = identity"],
            }))
        }
        Format::Table => {
            let mut out = format!("{} players, actions {}\n\n", g.players(), g.actions().join(","));
            out.push_str(&classification_table(&g, &class));
            out.push_str(&format!("\ninvariance group order {}, {} orbits\n\n", group.len(), orbit_count));
            match &rep {
                Ok(u) => out.push_str(&anonymous_table(u)),
                Err(cx) => out.push_str(&format!("no anonymous representation: {}\n", cx.describe(&g))),
            }
            out.push('\n');
            out.push_str(&properties_table(&props));
            out.push_str("(i R i holds by the convention (i i) = identity)\n\nconsistency checks\n");
            out.push_str(&diagnostics_table(&diag));
            out
        }
    };
    let code = if strict && rep.is_err() { 1 } else { 0 };
    Ok(Outcome {
        code,
        stdout: text,
        stderr: if code == 1 {
            "conflict: game has no anonymous representation\n".into()
        } else {
            String::new()
        },
    })
}
