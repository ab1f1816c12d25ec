//! JSON game files.
//!
//! ```text
//! {
//!   "players": 3,
//!   "actions": ["a", "b", "c"],
//!   "default": [0, 0, 0],
//!   "payoffs": { "a,b,c": [0, 1, 2], "a,c,b": ["3", "1/2", "0.25"] }
//! }
//! ```
//!
//! Keys are comma-joined action names in player order. Payoffs may be JSON
//! integers, `"p/q"` strings, or finite decimal strings/numbers; all are
//! converted exactly. Profiles missing from `payoffs` take `default`, which is
//! optional. Lines starting with `#` before the JSON body are treated as a
//! comment header and ignored.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde_json::Value;

use super::{Game, Payoff, Profile};
use crate::error::{Error, Result};

/// Parses a game file. See the module docs for the format.
pub fn parse_game(bytes: &[u8]) -> Result<Game> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::InvalidGame(format!("game file is not UTF-8: {e}")))?;
    let body = strip_comment_header(text);
    let raw: RawGame = serde_json::from_str(body)?;

    let players = raw.players;
    let actions = raw.actions;
    if players < 2 {
        return Err(Error::InvalidGame(format!("need at least 2 players, got {players}")));
    }
    let default = raw
        .default
        .map(|v| payoff_vector("default", &v, players))
        .transpose()?;

    // validate names before sizing the table
    let probe = Game::new(
        players,
        actions.clone(),
        vec![vec![Payoff::zero(); players]; actions.len().checked_pow(players as u32).unwrap_or(0)],
    )?;

    let mut table: Vec<Option<Vec<Payoff>>> = vec![None; probe.num_profiles()];
    for (key, value) in raw.payoffs {
        let profile = parse_key(&probe, &key)?;
        let idx = probe.profile_index(&profile)?;
        if table[idx].is_some() {
            return Err(Error::DuplicateProfile(key));
        }
        table[idx] = Some(payoff_vector(&key, &value, players)?);
    }
    let full = table
        .into_iter()
        .enumerate()
        .map(|(idx, row)| match (row, &default) {
            (Some(r), _) => Ok(r),
            (None, Some(d)) => Ok(d.clone()),
            (None, None) => Err(Error::MissingProfile(probe.profile_key(&probe.profile_at(idx)))),
        })
        .collect::<Result<Vec<_>>>()?;
    Game::new(players, actions, full)
}

/// Serializes a game. All-zero payoff vectors are folded into `"default"`.
///
/// Output is deterministic: profiles appear in index order.
pub fn serialize_game(g: &Game) -> String {
    let n = g.players();
    let is_zero_row = |idx: usize| (0..n).all(|i| g.payoff_at(idx, i).is_zero());
    let any_zero = (0..g.num_profiles()).any(is_zero_row);

    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"players\": {n},\n"));
    let names: Vec<String> = g.actions().iter().map(|a| json_string(a)).collect();
    out.push_str(&format!("  \"actions\": [{}],\n", names.join(", ")));
    if any_zero {
        let zeros = vec!["0"; n].join(", ");
        out.push_str(&format!("  \"default\": [{zeros}],\n"));
    }
    out.push_str("  \"payoffs\": {");
    let mut first = true;
    for idx in 0..g.num_profiles() {
        if any_zero && is_zero_row(idx) {
            continue;
        }
        let key = g.profile_key(&g.profile_at(idx));
        let vals: Vec<String> = (0..n).map(|i| rational_json(g.payoff_at(idx, i))).collect();
        out.push_str(if first { "\n" } else { ",\n" });
        out.push_str(&format!("    {}: [{}]", json_string(&key), vals.join(", ")));
        first = false;
    }
    out.push_str(if first { "}\n" } else { "\n  }\n" });
    out.push_str("}\n");
    out
}

/// Parses an exact rational from `"p"`, `"p/q"`, or a finite decimal such as
/// `"-2.50"` or `"1.5e-3"`.
pub fn parse_rational(text: &str) -> Result<Payoff> {
    let bad = || Error::MalformedRational(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let num = parse_int(num.trim()).ok_or_else(bad)?;
        let den = parse_int(den.trim()).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = t[pos + 1..].parse().map_err(|_| bad())?;
            (&t[..pos], exp)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if exponent.unsigned_abs() > 4096 {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(all_digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let factor = BigRational::from_integer(num_traits::pow(ten, scale.unsigned_abs() as usize));
    if scale >= 0 {
        value *= factor;
    } else {
        value /= factor;
    }
    Ok(if negative { -value } else { value })
}

fn parse_int(t: &str) -> Option<BigInt> {
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    t.parse().ok()
}

fn rational_json(v: &Payoff) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        let sign = if v.is_negative() { "-" } else { "" };
        format!("\"{}{}/{}\"", sign, v.numer().abs(), v.denom())
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn strip_comment_header(text: &str) -> &str {
    let mut rest = text;
    loop {
        let trimmed = rest.trim_start();
        if !trimmed.starts_with('#') {
            return trimmed;
        }
        rest = match trimmed.find('\n') {
            Some(pos) => &trimmed[pos + 1..],
            None => "",
        };
    }
}

fn parse_key(g: &Game, key: &str) -> Result<Profile> {
    g.parse_profile(key).map_err(|e| match e {
        Error::SizeMismatch { expected, found } => Error::InvalidGame(format!(
            "profile key {key:?} names {found} actions, expected {expected}"
        )),
        other => other,
    })
}

fn payoff_vector(key: &str, v: &Value, players: usize) -> Result<Vec<Payoff>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidGame(format!("payoffs for {key:?} must be an array")))?;
    if arr.len() != players {
        return Err(Error::PayoffLength {
            key: key.to_string(),
            expected: players,
            found: arr.len(),
        });
    }
    arr.iter().map(rational_value).collect()
}

fn rational_value(v: &Value) -> Result<Payoff> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(Error::MalformedRational(other.to_string())),
    }
}

struct RawGame {
    players: usize,
    actions: Vec<String>,
    default: Option<Value>,
    payoffs: Vec<(String, Value)>,
}

impl<'de> serde::Deserialize<'de> for RawGame {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_map(RawGameVisitor)
    }
}

struct RawGameVisitor;

impl<'de> Visitor<'de> for RawGameVisitor {
    type Value = RawGame;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a game object with players, actions and payoffs")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<RawGame, A::Error> {
        let mut players: Option<usize> = None;
        let mut actions: Option<Vec<String>> = None;
        let mut default: Option<Value> = None;
        let mut payoffs: Option<Vec<(String, Value)>> = None;
        while let Some(field) = map.next_key::<String>()? {
            let dup = || de::Error::custom(format!("duplicate field {field:?}"));
            match field.as_str() {
                "players" if players.is_none() => players = Some(map.next_value()?),
                "actions" if actions.is_none() => actions = Some(map.next_value()?),
                "default" if default.is_none() => default = Some(map.next_value()?),
                "payoffs" if payoffs.is_none() => {
                    payoffs = Some(map.next_value::<OrderedEntries>()?.0)
                }
                "players" | "actions" | "default" | "payoffs" => return Err(dup()),
                other => return Err(de::Error::unknown_field(other, FIELDS)),
            }
        }
        Ok(RawGame {
            players: players.ok_or_else(|| de::Error::missing_field("players"))?,
            actions: actions.ok_or_else(|| de::Error::missing_field("actions"))?,
            default,
            payoffs: payoffs.ok_or_else(|| de::Error::missing_field("payoffs"))?,
        })
    }
}

const FIELDS: &[&str] = &["players", "actions", "default", "payoffs"];

/// Object entries in source order, duplicates preserved.
struct OrderedEntries(Vec<(String, Value)>);

impl<'de> serde::Deserialize<'de> for OrderedEntries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = OrderedEntries;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping profile keys to payoff arrays")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<OrderedEntries, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Value>()? {
                    out.push((k, v));
                }
                Ok(OrderedEntries(out))
            }
        }
        deserializer.deserialize_map(V)
    }
}
