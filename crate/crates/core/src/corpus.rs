//! Bundled automata and presentations.

use crate::automaton::Automaton;
use crate::complex::parse_squares;
use crate::error::{Error, Result};

const ALESHIN: &str = include_str!("../data/aleshin.aut");
const BELLATERRA: &str = include_str!("../data/bellaterra.aut");
const LAMPLIGHTER: &str = include_str!("../data/lamplighter.aut");
const DELTA_D: &str = include_str!("../data/delta_d.sq");
const DELTA_S: &str = include_str!("../data/delta_s.sq");
const EX71: &str = include_str!("../data/ex71.pres");
const EX72: &str = include_str!("../data/ex72.pres");
const TABLE1: &str = include_str!("../data/table1.pres");

/// Names accepted by [`automaton`]; `wise` is the Aleshin automaton under
/// the name of its complex.
pub const AUTOMATA: [&str; 6] = ["aleshin", "bellaterra", "lamplighter", "delta_d", "delta_s", "wise"];

/// Names accepted by [`presentation_source`].
pub const PRESENTATIONS: [&str; 3] = ["ex71", "ex72", "table1"];

/// Raw text of a bundled automaton, with a flag telling whether it is in
/// the squares format.
pub fn source(name: &str) -> Option<(&'static str, bool)> {
    Some(match name {
        "aleshin" | "wise" => (ALESHIN, false),
        "bellaterra" => (BELLATERRA, false),
        "lamplighter" => (LAMPLIGHTER, false),
        "delta_d" => (DELTA_D, true),
        "delta_s" => (DELTA_S, true),
        _ => return None,
    })
}

pub fn automaton(name: &str) -> Result<Automaton> {
    let (text, squares) = source(name).ok_or_else(|| Error::UnknownSymbol(format!("bundled:{name}")))?;
    let a = if squares { parse_squares(text)? } else { Automaton::parse(text)? };
    Ok(if name == "wise" { a.with_name("wise") } else { a })
}

pub fn presentation_source(name: &str) -> Option<&'static str> {
    match name {
        "ex71" => Some(EX71),
        "ex72" => Some(EX72),
        "table1" => Some(TABLE1),
        _ => None,
    }
}

pub fn aleshin() -> Automaton {
    automaton("aleshin").unwrap()
}

pub fn bellaterra() -> Automaton {
    automaton("bellaterra").unwrap()
}

pub fn lamplighter() -> Automaton {
    automaton("lamplighter").unwrap()
}

pub fn delta_d() -> Automaton {
    automaton("delta_d").unwrap()
}

pub fn delta_s() -> Automaton {
    automaton("delta_s").unwrap()
}

/// The one-state automaton fixing every letter of `letters`.
pub fn identity(letters: &[&str]) -> Automaton {
    let mut text = format!("name: identity\nalphabet: {}\nstates: e\n", letters.join(" "));
    for x in letters {
        text.push_str(&format!("e {x} -> {x} e\n"));
    }
    Automaton::parse(&text).unwrap()
}

/// The five distinct bundled automata.
pub fn all() -> Vec<Automaton> {
    ["aleshin", "bellaterra", "lamplighter", "delta_d", "delta_s"]
        .iter()
        .map(|n| automaton(n).unwrap())
        .collect()
}
