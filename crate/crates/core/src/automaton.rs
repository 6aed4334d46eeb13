//! Complete deterministic Mealy automata and their text/DOT formats.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{split_inverse, Kind, Names, Sym};

/// `from --input|output--> to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub from: Sym,
    pub input: Sym,
    pub output: Sym,
    pub to: Sym,
}

impl Arrow {
    pub fn new(from: Sym, input: Sym, output: Sym, to: Sym) -> Arrow {
        Arrow {
            from,
            input,
            output,
            to,
        }
    }
}

const NONE: u32 = u32::MAX;

/// A complete deterministic transducer `S x X -> X x S`.
///
/// States and letters are lists of signed symbols. Unsigned automata use
/// positive symbols only; a dual automaton has inverse symbols throughout;
/// a *signed* automaton lists every symbol together with its inverse and
/// carries the four arrows of each square (see [`Automaton::is_signed`]).
#[derive(Debug, Clone)]
pub struct Automaton {
    name: String,
    names: Names,
    states: Vec<Sym>,
    letters: Vec<Sym>,
    /// `(output letter position, next state position)` by `state_pos * |X| + letter_pos`.
    table: Vec<(u32, u32)>,
    state_pos: Vec<u32>,
    letter_pos: Vec<u32>,
    signed: bool,
}

impl PartialEq for Automaton {
    /// Structural equality; the display name is ignored.
    fn eq(&self, other: &Automaton) -> bool {
        self.names == other.names
            && self.states == other.states
            && self.letters == other.letters
            && self.table == other.table
    }
}

impl Eq for Automaton {}

fn position_index(syms: &[Sym], nbases: usize) -> Vec<u32> {
    let mut pos = vec![NONE; 2 * nbases.max(1)];
    for (i, s) in syms.iter().enumerate() {
        pos[s.code() as usize] = i as u32;
    }
    pos
}

impl Automaton {
    /// Builds an automaton from an arrow list, checking completeness and
    /// determinism, and the inverse closure when both symbol sets are closed
    /// under formal inversion.
    pub fn from_arrows(
        name: impl Into<String>,
        names: Names,
        states: Vec<Sym>,
        letters: Vec<Sym>,
        arrows: impl IntoIterator<Item = Arrow>,
    ) -> Result<Automaton> {
        let ns_b = names.states.len();
        let nl_b = names.letters.len();
        for s in &states {
            if s.kind() != Kind::State || s.base() as usize >= ns_b {
                return Err(Error::UnknownSymbol(format!("{s:?}")));
            }
        }
        for x in &letters {
            if x.kind() != Kind::Letter || x.base() as usize >= nl_b {
                return Err(Error::UnknownSymbol(format!("{x:?}")));
            }
        }
        let state_pos = position_index(&states, ns_b);
        let letter_pos = position_index(&letters, nl_b);
        if state_pos.iter().filter(|&&p| p != NONE).count() != states.len()
            || letter_pos.iter().filter(|&&p| p != NONE).count() != letters.len()
        {
            return Err(Error::Syntax {
                line: 0,
                msg: "repeated state or letter declaration".into(),
            });
        }
        let nl = letters.len();
        let mut table = vec![(NONE, NONE); states.len() * nl];
        let lookup = |pos: &[u32], s: Sym, names: &Names| -> Result<u32> {
            pos.get(s.code() as usize)
                .copied()
                .filter(|&p| p != NONE)
                .ok_or_else(|| Error::UnknownSymbol(sym_label(names, s)))
        };
        for a in arrows {
            if a.from.kind() != Kind::State
                || a.to.kind() != Kind::State
                || a.input.kind() != Kind::Letter
                || a.output.kind() != Kind::Letter
            {
                return Err(Error::KindMismatch(format!("{a:?}")));
            }
            let sp = lookup(&state_pos, a.from, &names)?;
            let tp = lookup(&state_pos, a.to, &names)?;
            let xp = lookup(&letter_pos, a.input, &names)?;
            let yp = lookup(&letter_pos, a.output, &names)?;
            let slot = &mut table[sp as usize * nl + xp as usize];
            if slot.0 != NONE && *slot != (yp, tp) {
                return Err(Error::DuplicateTransition {
                    state: names.sym_name(a.from),
                    letter: names.sym_name(a.input),
                });
            }
            *slot = (yp, tp);
        }
        for (i, slot) in table.iter().enumerate() {
            if slot.0 == NONE {
                return Err(Error::MissingTransition {
                    state: names.sym_name(states[i / nl]),
                    letter: names.sym_name(letters[i % nl]),
                });
            }
        }
        let mut a = Automaton {
            name: name.into(),
            names,
            states,
            letters,
            table,
            state_pos,
            letter_pos,
            signed: false,
        };
        let closed = |syms: &[Sym], pos: &[u32]| {
            syms.iter()
                .all(|s| pos.get(s.inverse().code() as usize).is_some_and(|&p| p != NONE))
        };
        let has_inverse = a.states.iter().chain(&a.letters).any(|s| s.is_inverse());
        if has_inverse && closed(&a.states, &a.state_pos) && closed(&a.letters, &a.letter_pos) {
            a.check_inverse_closure()?;
            a.signed = true;
        }
        Ok(a)
    }

    fn check_inverse_closure(&self) -> Result<()> {
        for ar in self.arrows() {
            let (s, x, y, t) = (ar.from, ar.input, ar.output, ar.to);
            let required = [
                Arrow::new(s.inverse(), y, x, t.inverse()),
                Arrow::new(t, x.inverse(), y.inverse(), s),
                Arrow::new(t.inverse(), y.inverse(), x.inverse(), s.inverse()),
            ];
            for r in required {
                if self.step(r.from, r.input) != Some((r.output, r.to)) {
                    return Err(Error::BadInverseClosure(self.fmt_arrow(&r)));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Automaton {
        self.name = name.into();
        self
    }

    pub fn names(&self) -> &Names {
        &self.names
    }

    pub fn states(&self) -> &[Sym] {
        &self.states
    }

    pub fn letters(&self) -> &[Sym] {
        &self.letters
    }

    /// State and letter sets are closed under formal inverse and every arrow
    /// comes with its three companions `s^-1 -y|x-> t^-1`, `t -x^-1|y^-1-> s`,
    /// `t^-1 -y^-1|x^-1-> s^-1`.
    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_letters(&self) -> usize {
        self.letters.len()
    }

    pub fn state_index(&self, s: Sym) -> Option<usize> {
        self.state_pos
            .get(s.code() as usize)
            .filter(|&&p| p != NONE && s.kind() == Kind::State)
            .map(|&p| p as usize)
    }

    pub fn letter_index(&self, x: Sym) -> Option<usize> {
        self.letter_pos
            .get(x.code() as usize)
            .filter(|&&p| p != NONE && x.kind() == Kind::Letter)
            .map(|&p| p as usize)
    }

    /// Transition by positions: `(output position, next state position)`.
    #[inline]
    pub fn transition(&self, state: usize, letter: usize) -> (usize, usize) {
        let (y, t) = self.table[state * self.letters.len() + letter];
        (y as usize, t as usize)
    }

    /// Transition by symbols: `(output, next state)`.
    pub fn step(&self, s: Sym, x: Sym) -> Option<(Sym, Sym)> {
        let sp = self.state_index(s)?;
        let xp = self.letter_index(x)?;
        let (y, t) = self.transition(sp, xp);
        Some((self.letters[y], self.states[t]))
    }

    /// Arrows sorted by `(state position, letter position)`.
    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        let nl = self.letters.len();
        self.table.iter().enumerate().map(move |(i, &(y, t))| Arrow {
            from: self.states[i / nl],
            input: self.letters[i % nl],
            output: self.letters[y as usize],
            to: self.states[t as usize],
        })
    }

    pub fn sym_name(&self, s: Sym) -> String {
        self.names.sym_name(s)
    }

    pub fn fmt_arrow(&self, a: &Arrow) -> String {
        format!(
            "{} {} -> {} {}",
            self.sym_name(a.from),
            self.sym_name(a.input),
            self.sym_name(a.output),
            self.sym_name(a.to)
        )
    }

    /// Position-level table, the canonical encoding used for deduplication.
    pub fn raw_table(&self) -> &[(u32, u32)] {
        &self.table
    }

    /// Relabels base names and symbols. `fs` and `fl` map state and letter
    /// symbols of `self` to symbols over `names`.
    pub fn relabel(
        &self,
        name: impl Into<String>,
        names: Names,
        fs: impl Fn(Sym) -> Sym,
        fl: impl Fn(Sym) -> Sym,
    ) -> Result<Automaton> {
        let states = self.states.iter().map(|&s| fs(s)).collect();
        let letters = self.letters.iter().map(|&x| fl(x)).collect();
        let arrows: Vec<Arrow> = self
            .arrows()
            .map(|a| Arrow::new(fs(a.from), fl(a.input), fl(a.output), fs(a.to)))
            .collect();
        Automaton::from_arrows(name, names, states, letters, arrows)
    }

    /// Same automaton with every state symbol made positive (valid when no
    /// base occurs with both signs among the states).
    pub fn with_positive_states(&self) -> Result<Automaton> {
        self.relabel(self.name.clone(), self.names.clone(), |s| s.positive(), |x| x)
    }

    pub fn with_positive_letters(&self) -> Result<Automaton> {
        self.relabel(self.name.clone(), self.names.clone(), |s| s, |x| x.positive())
    }

    /// Appends `suffix` to every state base name.
    pub fn rename_states(&self, suffix: &str) -> Automaton {
        let mut a = self.clone();
        for n in &mut a.names.states {
            n.push_str(suffix);
        }
        a
    }

    /// Parses the automaton text format:
    ///
    /// ```text
    /// name: aleshin
    /// alphabet: 0 1
    /// states: a b c
    /// a 0 -> 0 b     # one arrow per line
    /// ```
    pub fn parse(text: &str) -> Result<Automaton> {
        let mut name: Option<String> = None;
        let mut alphabet: Option<Vec<String>> = None;
        let mut states: Option<Vec<String>> = None;
        let mut arrow_lines: Vec<(usize, Vec<String>)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |msg: &str| Error::Syntax {
                line: line_no,
                msg: msg.to_string(),
            };
            if let Some(rest) = line.strip_prefix("name:") {
                name = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("alphabet:") {
                alphabet = Some(rest.split_whitespace().map(String::from).collect());
            } else if let Some(rest) = line.strip_prefix("states:") {
                states = Some(rest.split_whitespace().map(String::from).collect());
            } else {
                let (lhs, rhs) = line
                    .split_once("->")
                    .ok_or_else(|| syntax("expected `<state> <letter> -> <letter> <state>`"))?;
                let l: Vec<&str> = lhs.split_whitespace().collect();
                let r: Vec<&str> = rhs.split_whitespace().collect();
                if l.len() != 2 || r.len() != 2 {
                    return Err(syntax("expected `<state> <letter> -> <letter> <state>`"));
                }
                arrow_lines.push((line_no, vec![l[0].into(), l[1].into(), r[0].into(), r[1].into()]));
            }
        }
        let header = |what: &str| Error::Syntax {
            line: 0,
            msg: format!("missing `{what}:` header"),
        };
        let alphabet = alphabet.ok_or_else(|| header("alphabet"))?;
        let states = states.ok_or_else(|| header("states"))?;
        if alphabet.is_empty() || states.is_empty() {
            return Err(Error::Syntax {
                line: 0,
                msg: "empty state set or alphabet".into(),
            });
        }
        let mut names = Names::default();
        let state_syms = intern(&mut names.states, Kind::State, &states);
        let letter_syms = intern(&mut names.letters, Kind::Letter, &alphabet);
        let mut arrows = Vec::with_capacity(arrow_lines.len());
        for (_, toks) in &arrow_lines {
            arrows.push(Arrow::new(
                names.resolve_kind(Kind::State, &toks[0])?,
                names.resolve_kind(Kind::Letter, &toks[1])?,
                names.resolve_kind(Kind::Letter, &toks[2])?,
                names.resolve_kind(Kind::State, &toks[3])?,
            ));
        }
        // Unlisted inverse symbols in arrows are unknown.
        for a in &arrows {
            for (s, pos) in [
                (a.from, &state_syms),
                (a.to, &state_syms),
                (a.input, &letter_syms),
                (a.output, &letter_syms),
            ] {
                if !pos.contains(&s) {
                    return Err(Error::UnknownSymbol(names.sym_name(s)));
                }
            }
        }
        Automaton::from_arrows(name.unwrap_or_default(), names, state_syms, letter_syms, arrows)
    }

    /// Serializes in the format read by [`Automaton::parse`]; arrows sorted by
    /// `(state index, letter index)`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "name: {}", self.name);
        let join = |syms: &[Sym]| {
            syms.iter()
                .map(|&s| self.sym_name(s))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(out, "alphabet: {}", join(&self.letters));
        let _ = writeln!(out, "states: {}", join(&self.states));
        for a in self.arrows() {
            let _ = writeln!(out, "{}", self.fmt_arrow(&a));
        }
        out
    }

    /// Graphviz rendering with arrows labelled `x|y`; parallel arrows merged.
    pub fn to_dot(&self) -> String {
        let mut edges: Vec<((usize, usize), Vec<String>)> = Vec::new();
        for a in self.arrows() {
            let key = (
                self.state_index(a.from).unwrap(),
                self.state_index(a.to).unwrap(),
            );
            let label = format!("{}|{}", self.sym_name(a.input), self.sym_name(a.output));
            match edges.iter_mut().find(|(k, _)| *k == key) {
                Some((_, labels)) => labels.push(label),
                None => edges.push((key, vec![label])),
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.name);
        let _ = writeln!(out, "  rankdir=LR;");
        for (i, &s) in self.states.iter().enumerate() {
            let _ = writeln!(out, "  q{i} [shape=circle,label=\"{}\"];", self.sym_name(s));
        }
        for ((f, t), labels) in edges {
            let _ = writeln!(out, "  q{f} -> q{t} [label=\"{}\"];", labels.join(", "));
        }
        out.push_str("}\n");
        out
    }
}

fn sym_label(names: &Names, s: Sym) -> String {
    let table = names.table(s.kind());
    if (s.base() as usize) < table.len() {
        names.sym_name(s)
    } else {
        format!("{s:?}")
    }
}

/// Interns a declaration list: base names in first-appearance order.
fn intern(table: &mut Vec<String>, kind: Kind, idents: &[String]) -> Vec<Sym> {
    let mut index: HashMap<String, u32> = HashMap::new();
    let mut out = Vec::with_capacity(idents.len());
    for ident in idents {
        let (base, inv) = split_inverse(ident);
        let b = *index.entry(base.to_string()).or_insert_with(|| {
            table.push(base.to_string());
            (table.len() - 1) as u32
        });
        out.push(Sym::new(kind, b, inv));
    }
    out
}
