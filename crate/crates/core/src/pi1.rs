//! The square complex side: presentations, exact-factorization normal
//! forms in the fundamental group, commutation scans, Wang tiles and
//! tilings.

use std::fmt::Write as _;

use crate::action::Engine;
use crate::automaton::Automaton;
use crate::complex::squares_of;
use crate::word::{push_reduced, Kind, MixedWord, Names, Sym, Word};

/// Generators and relators of a finitely presented group. Generators are
/// the positive states followed by the positive letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub names: Names,
    pub generators: Vec<Sym>,
    pub relators: Vec<MixedWord>,
}

impl Presentation {
    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|&g| self.names.sym_name(g)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\nrelators:\n", self.generator_names().join(" "));
        for r in &self.relators {
            let _ = writeln!(out, "{}", self.names.fmt_mixed(r));
        }
        out
    }
}

fn positive_bases(syms: &[Sym]) -> Vec<Sym> {
    let mut out: Vec<Sym> = Vec::new();
    for s in syms {
        if !out.contains(&s.positive()) {
            out.push(s.positive());
        }
    }
    out
}

/// `s x t^-1 y^-1` for an arrow `s --x|y--> t`.
fn relator(s: Sym, x: Sym, y: Sym, t: Sym) -> MixedWord {
    MixedWord::new([s, x, t.inverse(), y.inverse()])
}

/// One relator per arrow for a directed automaton; one per square for a
/// signed automaton, whose inverse symbols are inverse loops rather than
/// new generators.
pub fn presentation(a: &Automaton) -> Presentation {
    let mut generators = positive_bases(a.states());
    generators.extend(positive_bases(a.letters()));
    let relators = if a.is_signed() {
        squares_of(a)
            .iter()
            .map(|q| relator(q.left, q.top, q.bottom, q.right))
            .collect()
    } else {
        a.arrows()
            .map(|r| relator(r.from, r.input, r.output, r.to))
            .collect()
    };
    Presentation {
        names: a.names().clone(),
        generators,
        relators,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `γ = g v` with `g` a state word and `v` a letter word.
    Left,
    /// `γ = u h` with `u` a letter word and `h` a state word.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub orientation: Orientation,
    pub states: Word,
    pub letters: Word,
}

impl NormalForm {
    pub fn to_mixed(&self) -> MixedWord {
        let (s, l) = (self.states.to_mixed(), self.letters.to_mixed());
        match self.orientation {
            Orientation::Left => s.concat(&l),
            Orientation::Right => l.concat(&s),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.states.is_empty() && self.letters.is_empty()
    }

    pub fn describe(&self, names: &Names) -> String {
        format!("({}, {})", names.fmt_word(&self.states), names.fmt_word(&self.letters))
    }
}

/// Left form: letters are appended to `v`; a state `t` is moved left
/// through `v` one exchange `z t = s x` at a time.
fn left_form(e: &Engine, w: &MixedWord) -> (Vec<Sym>, Vec<Sym>) {
    let mut g: Vec<Sym> = Vec::new();
    let mut v: Vec<Sym> = Vec::new();
    for &sym in w.syms() {
        match sym.kind() {
            Kind::Letter => push_reduced(&mut v, sym),
            Kind::State => {
                let mut t = sym;
                for z in v.iter_mut().rev() {
                    let (s, x) = e.step_back(t, *z);
                    *z = x;
                    t = s;
                }
                push_reduced(&mut g, t);
            }
        }
    }
    (g, v)
}

/// Right form: states are appended to `h`; a letter `z` is moved left
/// through `h` by the action, leaving the section behind.
fn right_form(e: &Engine, w: &MixedWord) -> (Vec<Sym>, Vec<Sym>) {
    let mut u: Vec<Sym> = Vec::new();
    let mut h: Vec<Sym> = Vec::new();
    for &sym in w.syms() {
        match sym.kind() {
            Kind::State => push_reduced(&mut h, sym),
            Kind::Letter => {
                let y = e.push_letter(&mut h, sym);
                let mut red = Vec::with_capacity(h.len());
                for &s in &h {
                    push_reduced(&mut red, s);
                }
                h = red;
                push_reduced(&mut u, y);
            }
        }
    }
    (u, h)
}

pub fn normal_form(e: &Engine, w: &MixedWord, orientation: Orientation) -> NormalForm {
    let (states, letters) = match orientation {
        Orientation::Left => left_form(e, w),
        Orientation::Right => {
            let (u, h) = right_form(e, w);
            (h, u)
        }
    };
    NormalForm {
        orientation,
        states: Word::new(Kind::State, states).expect("state word"),
        letters: Word::new(Kind::Letter, letters).expect("letter word"),
    }
}

pub fn pi1_is_trivial(e: &Engine, w: &MixedWord) -> bool {
    normal_form(e, w, Orientation::Left).is_identity()
}

/// Commutation matrix of `p^n q^m p^-n q^-m` for `1 <= n <= N`, `1 <= m <= M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Commutation {
    /// `matrix[n-1][m-1]` is true when the commutator is trivial.
    pub matrix: Vec<Vec<bool>>,
}

impl Commutation {
    /// True when no entry commutes: an anti-torus up to the scanned bounds.
    pub fn no_commutation(&self) -> bool {
        self.matrix.iter().flatten().all(|&b| !b)
    }
}

pub fn commutes(e: &Engine, p: &Word, q: &Word, n_max: usize, m_max: usize) -> Commutation {
    let matrix = (1..=n_max)
        .map(|n| {
            let pn = p.pow(n as i64).to_mixed();
            (1..=m_max)
                .map(|m| {
                    let qm = q.pow(m as i64).to_mixed();
                    pi1_is_trivial(e, &MixedWord::commutator(&pn, &qm))
                })
                .collect()
        })
        .collect();
    Commutation { matrix }
}

/// A Wang tile: the square `left * top = bottom * right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tile {
    pub left: Sym,
    pub top: Sym,
    pub bottom: Sym,
    pub right: Sym,
}

/// A periodic pair `(w, u)` read off a cycle `(s1,x1) -> ... -> (sn,xn)` in
/// the functional graph `(s,x) -> (t,y)` of the arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicTiling {
    pub cycle: Vec<(Sym, Sym)>,
    /// `sn ... s2 s1`.
    pub w: Word,
    /// `x1 x2 ... xn`.
    pub u: Word,
}

impl PeriodicTiling {
    /// Checks `w u w^-1 u^-1 = 1` in the fundamental group.
    pub fn verify(&self, e: &Engine) -> bool {
        pi1_is_trivial(e, &MixedWord::commutator(&self.w.to_mixed(), &self.u.to_mixed()))
    }
}

/// The cycle reached from the first state and first letter.
pub fn periodic_tiling(a: &Automaton) -> PeriodicTiling {
    let nl = a.num_letters();
    let mut seen = vec![usize::MAX; a.num_states() * nl];
    let mut path: Vec<(usize, usize)> = Vec::new();
    let (mut s, mut x) = (0usize, 0usize);
    while seen[s * nl + x] == usize::MAX {
        seen[s * nl + x] = path.len();
        path.push((s, x));
        let (y, t) = a.transition(s, x);
        s = t;
        x = y;
    }
    let cycle: Vec<(Sym, Sym)> = path[seen[s * nl + x]..]
        .iter()
        .map(|&(s, x)| (a.states()[s], a.letters()[x]))
        .collect();
    let w = Word::new(Kind::State, cycle.iter().rev().map(|c| c.0)).expect("state word");
    let u = Word::new(Kind::Letter, cycle.iter().map(|c| c.1)).expect("letter word");
    PeriodicTiling { cycle, w, u }
}

/// A `|left| x |top|` block of tiles. Row 0 is the top row; its left edge
/// is the last symbol of `left`, which reads the top letters first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rectangle {
    pub rows: Vec<Vec<Tile>>,
    pub bottom: Word,
    pub right: Word,
}

pub fn tile_rectangle(e: &Engine, left: &Word, top: &Word) -> Rectangle {
    let mut rows = Vec::with_capacity(left.len());
    let mut letters: Vec<Sym> = top.syms().to_vec();
    let mut right_edge: Vec<Sym> = Vec::with_capacity(left.len());
    for &s0 in left.syms().iter().rev() {
        let mut s = s0;
        let mut row = Vec::with_capacity(letters.len());
        for z in letters.iter_mut() {
            let (y, t) = e.step(s, *z);
            row.push(Tile {
                left: s,
                top: *z,
                bottom: y,
                right: t,
            });
            *z = y;
            s = t;
        }
        right_edge.push(s);
        rows.push(row);
    }
    right_edge.reverse();
    Rectangle {
        rows,
        bottom: Word::new(Kind::Letter, letters).expect("letter word"),
        right: Word::new(Kind::State, right_edge).expect("state word"),
    }
}

impl Rectangle {
    /// Adjacent tiles agree on shared edges.
    pub fn edges_match(&self) -> bool {
        let horizontal = self
            .rows
            .iter()
            .all(|r| r.windows(2).all(|p| p[0].right == p[1].left));
        let vertical = self.rows.windows(2).all(|p| {
            p[0].iter().zip(&p[1]).all(|(up, down)| up.bottom == down.top)
        });
        horizontal && vertical
    }

    /// One cell per tile, four labelled edges.
    pub fn render(&self, names: &Names, top: &Word) -> String {
        let label = |s: Sym| names.sym_name(s);
        let width = self
            .rows
            .iter()
            .flatten()
            .flat_map(|t| [label(t.left), label(t.top), label(t.bottom), label(t.right)])
            .map(|l| l.len())
            .max()
            .unwrap_or(1)
            .max(1);
        let cell = width + 2;
        let mut out = String::new();
        let border = |out: &mut String, labels: Vec<String>| {
            out.push('+');
            for l in labels {
                let _ = write!(out, "{:-^cell$}+", l);
            }
            out.push('\n');
        };
        if self.rows.is_empty() {
            let _ = writeln!(out, "{}", names.fmt_word(top));
            return out;
        }
        border(&mut out, self.rows[0].iter().map(|t| label(t.top)).collect());
        for row in &self.rows {
            let wl = row.iter().map(|t| label(t.left).len()).max().unwrap_or(0);
            let _ = write!(out, "{:>wl$}", label(row[0].left));
            for t in row {
                let _ = write!(out, "{:cell$}{}", "", label(t.right));
            }
            out.push('\n');
            border(&mut out, row.iter().map(|t| label(t.bottom)).collect());
        }
        out
    }
}

/// Checks that every relator maps to `(0, 0)` under states -> `(1, 0)`,
/// letters -> `(0, 1)`.
pub fn abelianization_check(p: &Presentation) -> bool {
    p.relators.iter().all(|r| {
        let mut v = (0i64, 0i64);
        for s in r.syms() {
            let e = if s.is_inverse() { -1 } else { 1 };
            match s.kind() {
                Kind::State => v.0 += e,
                Kind::Letter => v.1 += e,
            }
        }
        v == (0, 0)
    })
}

/// One tile per arrow of `A±` (`signed`) or of `A`.
pub fn tileset(a: &Automaton, e: Option<&Engine>) -> Vec<Tile> {
    let src = e.map(|e| e.closure()).unwrap_or(a);
    src.arrows()
        .map(|r| Tile {
            left: r.from,
            top: r.input,
            bottom: r.output,
            right: r.to,
        })
        .collect()
}

pub fn tiles_to_text(names: &Names, tiles: &[Tile]) -> String {
    let mut out = String::new();
    for t in tiles {
        let _ = writeln!(
            out,
            "{} {} {} {}",
            names.sym_name(t.left),
            names.sym_name(t.top),
            names.sym_name(t.bottom),
            names.sym_name(t.right)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn mixed(a: &Automaton, text: &str) -> MixedWord {
        a.names().parse_mixed(text).unwrap()
    }

    #[test]
    fn presentation_sizes() {
        let p = presentation(&corpus::aleshin());
        assert_eq!((p.generators.len(), p.relators.len()), (5, 6));
        let p = presentation(&corpus::delta_d());
        assert_eq!((p.generators.len(), p.relators.len()), (4, 4));
        let id = corpus::identity(&["0", "1"]);
        let p = presentation(&id);
        assert_eq!(p.relators.len(), 2);
        assert!(p.relators.iter().all(|r| r.len() == 4));
    }

    #[test]
    fn single_exchanges() {
        let a = corpus::aleshin();
        let e = Engine::new(&a).unwrap();
        let nf = normal_form(&e, &mixed(&a, "a 0"), Orientation::Right);
        assert_eq!(nf.describe(a.names()), "(b, 0)");
        let gv = mixed(&a, "a b^-1 c 0 1 1");
        let nf = normal_form(&e, &gv, Orientation::Left);
        assert_eq!(nf.to_mixed(), gv);
        let d = corpus::delta_d();
        let e = Engine::new(&d).unwrap();
        let nf = normal_form(&e, &mixed(&d, "a x"), Orientation::Right);
        assert_eq!(nf.describe(d.names()), "(b, y)");
    }

    #[test]
    fn relators_are_trivial_generators_are_not() {
        for a in corpus::all() {
            let e = Engine::new(&a).unwrap();
            let p = presentation(&a);
            assert!(p.relators.iter().all(|r| pi1_is_trivial(&e, r)));
            for &g in &p.generators {
                assert!(!pi1_is_trivial(&e, &MixedWord::new([g])));
            }
        }
        let a = corpus::aleshin();
        let e = Engine::new(&a).unwrap();
        assert!(!pi1_is_trivial(&e, &mixed(&a, "0^-1 1")));
    }

    #[test]
    fn aleshin_periodic_cycle() {
        let a = corpus::aleshin();
        let t = periodic_tiling(&a);
        assert_eq!(t.cycle.len(), 6);
        assert_eq!(a.names().fmt_word(&t.w), "c c b a b a");
        assert!(t.verify(&Engine::new(&a).unwrap()));
        let id = corpus::identity(&["0", "1"]);
        let t = periodic_tiling(&id);
        assert!(t.w.len() == 1 && t.u.len() == 1);
    }

    #[test]
    fn rectangles() {
        let a = corpus::aleshin();
        let e = Engine::new(&a).unwrap();
        let g = a.names().parse_word(Kind::State, "a b c^-1").unwrap();
        let v = a.names().parse_word(Kind::Letter, "0 1 1^-1 0").unwrap();
        let r = tile_rectangle(&e, &g, &v);
        assert!(r.edges_match());
        assert_eq!(r.bottom, e.act(&g, &v));
        assert_eq!(r.right, e.section(&g, &v));
        let empty = tile_rectangle(&e, &Word::empty(Kind::State), &v);
        assert_eq!(empty.bottom, v);
        let s = corpus::delta_s();
        let e = Engine::new(&s).unwrap();
        let r = tile_rectangle(
            &e,
            &s.names().parse_word(Kind::State, "a").unwrap(),
            &s.names().parse_word(Kind::Letter, "x").unwrap(),
        );
        assert_eq!(s.names().fmt_word(&r.bottom), "x^-1");
        assert_eq!(s.names().fmt_word(&r.right), "b");
    }

    #[test]
    fn abelianization() {
        assert!(abelianization_check(&presentation(&corpus::aleshin())));
        let mut p = presentation(&corpus::aleshin());
        p.relators[0] = p.relators[0].concat(&MixedWord::new([p.generators[0]]));
        assert!(!abelianization_check(&p));
    }

    #[test]
    fn tiles() {
        let a = corpus::aleshin();
        assert_eq!(tileset(&a, None).len(), 6);
        let d = corpus::delta_d();
        let e = Engine::new(&d).unwrap();
        assert_eq!(tileset(&d, Some(&e)).len(), 16);
        assert_eq!(tileset(&corpus::identity(&["0", "1", "2"]), None).len(), 3);
    }
}
