//! One-vertex VH complexes given by their squares, and the signed
//! automaton they define.

use std::collections::BTreeMap;

use crate::automaton::{Arrow, Automaton};
use crate::error::{Error, Result};
use crate::word::{split_inverse, Kind, Names, Sym};

/// A square `left * top = bottom * right`, with vertical sides `left`,
/// `right` (states) and horizontal sides `top`, `bottom` (letters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub left: Sym,
    pub top: Sym,
    pub bottom: Sym,
    pub right: Sym,
}

impl Square {
    /// The four corner arrows of the square.
    pub fn arrows(&self) -> [Arrow; 4] {
        let (s, x, y, t) = (self.left, self.top, self.bottom, self.right);
        [
            Arrow::new(s, x, y, t),
            Arrow::new(s.inverse(), y, x, t.inverse()),
            Arrow::new(t, x.inverse(), y.inverse(), s),
            Arrow::new(t.inverse(), y.inverse(), x.inverse(), s.inverse()),
        ]
    }

    pub fn from_arrow(a: &Arrow) -> Square {
        Square {
            left: a.from,
            top: a.input,
            bottom: a.output,
            right: a.to,
        }
    }
}

/// Inverse-closed symbol list: positives in first-appearance order, then
/// their inverses in reverse order (`a b b^-1 a^-1`).
pub fn signed_order(kind: Kind, n: usize) -> Vec<Sym> {
    let mut out: Vec<Sym> = (0..n as u32).map(|b| Sym::new(kind, b, false)).collect();
    out.extend((0..n as u32).rev().map(|b| Sym::new(kind, b, true)));
    out
}

/// Builds the signed automaton of a set of squares. Every pair in
/// `S± x X±` must be the corner of exactly one square.
pub fn automaton_from_squares(name: &str, names: Names, squares: &[Square]) -> Result<Automaton> {
    let states = signed_order(Kind::State, names.states.len());
    let letters = signed_order(Kind::Letter, names.letters.len());
    let mut seen: BTreeMap<(Sym, Sym), Arrow> = BTreeMap::new();
    for sq in squares {
        for a in sq.arrows() {
            if seen.insert((a.from, a.input), a).is_some() {
                return Err(Error::DuplicateTransition {
                    state: names.sym_name(a.from),
                    letter: names.sym_name(a.input),
                });
            }
        }
    }
    for &s in &states {
        for &x in &letters {
            if !seen.contains_key(&(s, x)) {
                return Err(Error::MissingTransition {
                    state: names.sym_name(s),
                    letter: names.sym_name(x),
                });
            }
        }
    }
    Automaton::from_arrows(name, names, states, letters, seen.into_values())
}

/// One representative square per 4-arrow orbit of a signed automaton, in
/// arrow order.
pub fn squares_of(a: &Automaton) -> Vec<Square> {
    let mut done = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for r in a.arrows() {
        if done.contains(&r) {
            continue;
        }
        let sq = Square::from_arrow(&r);
        done.extend(sq.arrows());
        out.push(sq);
    }
    out
}

/// Parses the `squares:` format:
///
/// ```text
/// name: delta_d
/// squares:
/// a x y b
/// ```
///
/// State names are read from the vertical sides, letter names from the
/// horizontal sides, interned in order of appearance.
pub fn parse_squares(text: &str) -> Result<Automaton> {
    let mut name = String::new();
    let mut in_squares = false;
    let mut rows: Vec<[(String, bool); 4]> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name:") {
            name = rest.trim().to_string();
            continue;
        }
        if line == "squares:" {
            in_squares = true;
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if !in_squares || toks.len() != 4 {
            return Err(Error::Syntax {
                line: i + 1,
                msg: "expected `<left> <top> <bottom> <right>` after `squares:`".into(),
            });
        }
        let parsed = |t: &str| {
            let (base, inv) = split_inverse(t);
            (base.to_string(), inv)
        };
        rows.push([parsed(toks[0]), parsed(toks[1]), parsed(toks[2]), parsed(toks[3])]);
    }
    if rows.is_empty() {
        return Err(Error::Syntax {
            line: 0,
            msg: "no squares".into(),
        });
    }
    let mut names = Names::default();
    let mut sym = |kind: Kind, (base, inv): &(String, bool)| -> Sym {
        let table = match kind {
            Kind::State => &mut names.states,
            Kind::Letter => &mut names.letters,
        };
        let b = match table.iter().position(|n| n == base) {
            Some(p) => p,
            None => {
                table.push(base.clone());
                table.len() - 1
            }
        };
        Sym::new(kind, b as u32, *inv)
    };
    let squares: Vec<Square> = rows
        .iter()
        .map(|r| Square {
            left: sym(Kind::State, &r[0]),
            top: sym(Kind::Letter, &r[1]),
            bottom: sym(Kind::Letter, &r[2]),
            right: sym(Kind::State, &r[3]),
        })
        .collect();
    for n in names.states.iter() {
        if names.letters.contains(n) {
            return Err(Error::NameCollision(n.clone()));
        }
    }
    automaton_from_squares(&name, names, &squares)
}

/// Serializes squares in the format read by [`parse_squares`].
pub fn squares_to_text(a: &Automaton) -> String {
    let mut out = format!("name: {}\nsquares:\n", a.name());
    for sq in squares_of(a) {
        out.push_str(&format!(
            "{} {} {} {}\n",
            a.sym_name(sq.left),
            a.sym_name(sq.top),
            a.sym_name(sq.bottom),
            a.sym_name(sq.right)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_d_squares_match_arrow_file() {
        let from_sq = parse_squares(include_str!("../data/delta_d.sq")).unwrap();
        let from_aut = Automaton::parse(include_str!("../data/delta_d.aut")).unwrap();
        assert_eq!(from_sq, from_aut);
        assert!(from_sq.is_signed());
        assert_eq!(squares_of(&from_sq).len(), 4);
    }

    #[test]
    fn delta_s_squares_match_arrow_file() {
        let from_sq = parse_squares(include_str!("../data/delta_s.sq")).unwrap();
        let from_aut = Automaton::parse(include_str!("../data/delta_s.aut")).unwrap();
        assert_eq!(from_sq, from_aut);
    }

    #[test]
    fn squares_round_trip() {
        let a = parse_squares(include_str!("../data/delta_s.sq")).unwrap();
        assert_eq!(parse_squares(&squares_to_text(&a)).unwrap(), a);
    }

    #[test]
    fn incomplete_and_overlapping_corners() {
        let three = "squares:\na x y b\na y y^-1 b\nb x x a^-1\n";
        assert!(matches!(parse_squares(three), Err(Error::MissingTransition { .. })));
        let dup = "squares:\na x y b\na x y b\nb x x a^-1\nb y x^-1 a\n";
        assert!(matches!(parse_squares(dup), Err(Error::DuplicateTransition { .. })));
        assert!(matches!(parse_squares("a x y b\n"), Err(Error::Syntax { .. })));
    }
}
