//! Exhaustive enumeration of small bireversible automata and of one-vertex
//! VH complexes with four squares.

use std::collections::BTreeMap;

use crate::action::{Caps, Engine, Verdict};
use crate::automaton::{Arrow, Automaton};
use crate::canon::{key, signed_key, Policy};
use crate::complex::{automaton_from_squares, signed_order, Square};
use crate::error::{Error, Result};
use crate::ops::{dual, is_bireversible, names};
use crate::par;
use crate::word::{Kind, Sym};

/// Largest search space (rows with permutational output, raised to the
/// number of states) accepted by [`enumerate`].
pub const MAX_SEARCH: u128 = 5_000_000;

/// Caps used to tag catalog entries.
pub fn catalog_caps() -> Caps {
    Caps {
        max_elements: 2_000,
        max_len: 24,
    }
}

#[derive(Debug, Clone)]
pub struct Entry {
    /// The first automaton of the class met in enumeration order.
    pub automaton: Automaton,
    pub class_size: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub n_states: usize,
    pub n_letters: usize,
    pub policy: Policy,
    /// Automata with invertible states that were examined.
    pub examined: usize,
    pub bireversible: usize,
    pub entries: Vec<Entry>,
}

impl Catalog {
    pub fn non_finite(&self) -> Vec<&Entry> {
        self.entries.iter().filter(|e| !e.verdict.is_finite()).collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("class\tsize\tverdict\tarrows\n");
        for (i, e) in self.entries.iter().enumerate() {
            let arrows: Vec<String> = e.automaton.arrows().map(|r| e.automaton.fmt_arrow(&r)).collect();
            out.push_str(&format!("{i}\t{}\t{}\t{}\n", e.class_size, e.verdict.summary(), arrows.join("; ")));
        }
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "states={} letters={} policy={} examined={} bireversible={} classes={} non_finite={}",
            self.n_states,
            self.n_letters,
            self.policy.label(),
            self.examined,
            self.bireversible,
            self.entries.len(),
            self.non_finite().len()
        )
    }
}

fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

fn letter_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of automata with invertible states of the given shape.
pub fn search_size(n_states: usize, n_letters: usize) -> u128 {
    let row = factorial(n_letters) * (n_states as u128).pow(n_letters as u32);
    row.saturating_pow(n_states as u32)
}

/// One row per state: a permutation of the letters and a target per letter.
fn rows(n_states: usize, n_letters: usize) -> Vec<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    for perm in crate::canon::permutations(n_letters) {
        let total = n_states.pow(n_letters as u32);
        for mut code in 0..total {
            let mut row = Vec::with_capacity(n_letters);
            for &y in perm.iter() {
                row.push((y as u32, (code % n_states) as u32));
                code /= n_states;
            }
            out.push(row);
        }
    }
    out
}

fn build(n_states: usize, n_letters: usize, table: &[(u32, u32)]) -> Automaton {
    let sn = state_names(n_states);
    let ln = letter_names(n_letters);
    let sref: Vec<&str> = sn.iter().map(String::as_str).collect();
    let lref: Vec<&str> = ln.iter().map(String::as_str).collect();
    let states: Vec<Sym> = (0..n_states as u32).map(|i| Sym::new(Kind::State, i, false)).collect();
    let letters: Vec<Sym> = (0..n_letters as u32).map(|i| Sym::new(Kind::Letter, i, false)).collect();
    let arrows: Vec<Arrow> = table
        .iter()
        .enumerate()
        .map(|(i, &(y, t))| Arrow::new(states[i / n_letters], letters[i % n_letters], letters[y as usize], states[t as usize]))
        .collect();
    Automaton::from_arrows("enumerated", names(&sref, &lref), states.clone(), letters.clone(), arrows)
        .expect("complete by construction")
}

/// All bireversible automata of the given shape, grouped into classes under
/// `policy`, each tagged with the verdict of its representative.
pub fn enumerate(n_states: usize, n_letters: usize, policy: Policy, caps: Caps) -> Result<Catalog> {
    if n_states == 0 || n_letters == 0 || search_size(n_states, n_letters) > MAX_SEARCH {
        return Err(Error::SizeTooLarge(format!(
            "{n_states} states x {n_letters} letters: {} automata exceeds {MAX_SEARCH}",
            search_size(n_states, n_letters)
        )));
    }
    let rows = rows(n_states, n_letters);
    let count = rows.len().pow(n_states as u32);
    let found: Vec<Option<(Vec<u32>, Automaton)>> = par::map_range(count, |mut code| {
        let mut table = Vec::with_capacity(n_states * n_letters);
        for _ in 0..n_states {
            table.extend_from_slice(&rows[code % rows.len()]);
            code /= rows.len();
        }
        let a = build(n_states, n_letters, &table);
        match is_bireversible(&a) {
            Ok(true) => Some((key(&a, policy).expect("key"), a)),
            _ => None,
        }
    });
    let mut classes: BTreeMap<Vec<u32>, (Automaton, usize)> = BTreeMap::new();
    let mut order: Vec<Vec<u32>> = Vec::new();
    let mut bireversible = 0;
    for (k, a) in found.into_iter().flatten() {
        bireversible += 1;
        classes
            .entry(k.clone())
            .and_modify(|e| e.1 += 1)
            .or_insert_with(|| {
                order.push(k);
                (a, 1)
            });
    }
    let reps: Vec<(Automaton, usize)> = order.iter().map(|k| classes[k].clone()).collect();
    let entries = par::map(&reps, |(a, n)| Entry {
        automaton: a.clone(),
        class_size: *n,
        verdict: Engine::new(a).expect("engine").group_order(caps),
    });
    Ok(Catalog {
        n_states,
        n_letters,
        policy,
        examined: count,
        bireversible,
        entries,
    })
}

#[derive(Debug, Clone)]
pub struct Vh4Entry {
    pub automaton: Automaton,
    pub squares: Vec<Square>,
    pub class_size: usize,
    pub verdict: Verdict,
    pub dual_verdict: Verdict,
}

impl Vh4Entry {
    pub fn is_finite(&self) -> bool {
        self.verdict.is_finite() && self.dual_verdict.is_finite()
    }
}

#[derive(Debug, Clone)]
pub struct Vh4Catalog {
    pub complexes: usize,
    pub entries: Vec<Vh4Entry>,
}

impl Vh4Catalog {
    pub fn non_finite(&self) -> Vec<&Vh4Entry> {
        self.entries.iter().filter(|e| !e.is_finite()).collect()
    }

    pub fn summary(&self) -> String {
        format!(
            "complexes={} classes={} non_finite={}",
            self.complexes,
            self.entries.len(),
            self.non_finite().len()
        )
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("class\tsize\tverdict\tdual_verdict\tsquares\n");
        for (i, e) in self.entries.iter().enumerate() {
            let sq: Vec<String> = e
                .squares
                .iter()
                .map(|q| {
                    let n = |s: Sym| e.automaton.sym_name(s);
                    format!("{} {} {} {}", n(q.left), n(q.top), n(q.bottom), n(q.right))
                })
                .collect();
            out.push_str(&format!(
                "{i}\t{}\t{}\t{}\t{}\n",
                e.class_size,
                e.verdict.summary(),
                e.dual_verdict.summary(),
                sq.join("; ")
            ));
        }
        out
    }
}

/// Every exact cover of the 16 corners `S± x X±` (states a, b; letters
/// x, y) by four squares with four distinct corners each.
pub fn vh4_complexes() -> Vec<Vec<Square>> {
    let states = signed_order(Kind::State, 2);
    let letters = signed_order(Kind::Letter, 2);
    let slot = |s: Sym, x: Sym| s.code() as usize * 4 + x.code() as usize;
    let mut out = Vec::new();
    let mut covered = [false; 16];
    let mut chosen: Vec<Square> = Vec::new();
    fn go(
        covered: &mut [bool; 16],
        chosen: &mut Vec<Square>,
        out: &mut Vec<Vec<Square>>,
        states: &[Sym],
        letters: &[Sym],
        slot: &dyn Fn(Sym, Sym) -> usize,
    ) {
        let Some(first) = (0..16).find(|&i| !covered[i]) else {
            out.push(chosen.clone());
            return;
        };
        let s = Sym::new(Kind::State, (first / 4 / 2) as u32, first / 4 % 2 == 1);
        let x = Sym::new(Kind::Letter, (first % 4 / 2) as u32, first % 2 == 1);
        for &y in letters {
            for &t in states {
                let sq = Square { left: s, top: x, bottom: y, right: t };
                let slots: Vec<usize> = sq.arrows().iter().map(|a| slot(a.from, a.input)).collect();
                let distinct = (0..4).all(|i| (i + 1..4).all(|j| slots[i] != slots[j]));
                if !distinct || slots.iter().any(|&i| covered[i]) {
                    continue;
                }
                for &i in &slots {
                    covered[i] = true;
                }
                chosen.push(sq);
                go(covered, chosen, out, states, letters, slot);
                chosen.pop();
                for &i in &slots {
                    covered[i] = false;
                }
            }
        }
    }
    go(&mut covered, &mut chosen, &mut out, &states, &letters, &slot);
    out
}

/// Classes of complete one-vertex VH complexes with two loops of each kind
/// and four squares, up to renaming, reorienting and exchanging the two
/// kinds of loops. Each class is tagged with the verdicts of its automaton
/// and of the dual.
pub fn enumerate_vh4(caps: Caps) -> Vh4Catalog {
    let nm = names(&["a", "b"], &["x", "y"]);
    let complexes = vh4_complexes();
    let autos: Vec<Automaton> = complexes
        .iter()
        .map(|sq| automaton_from_squares("vh4", nm.clone(), sq).expect("exact cover"))
        .collect();
    let keys = par::map(&autos, |a| signed_key(a, true));
    let mut classes: BTreeMap<&Vec<u32>, usize> = BTreeMap::new();
    let mut reps: Vec<usize> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        let n = classes.entry(k).or_insert(0);
        if *n == 0 {
            reps.push(i);
        }
        *n += 1;
    }
    let entries = par::map(&reps, |&i| {
        let a = &autos[i];
        Vh4Entry {
            automaton: a.clone(),
            squares: complexes[i].clone(),
            class_size: classes[&keys[i]],
            verdict: Engine::new(a).expect("engine").group_order(caps),
            dual_verdict: Engine::new(&dual(a)).expect("engine").group_order(caps),
        }
    });
    Vh4Catalog {
        complexes: complexes.len(),
        entries,
    }
}
