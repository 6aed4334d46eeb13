//! The operation calculus on automata: dual, inverse, the eight derived
//! automata, bireversibility, the `A±` closure, isomorphism, union,
//! minimization and connected components.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::automaton::{Arrow, Automaton};
use crate::error::{Error, Result};
use crate::word::{Kind, Names, Sym};

fn as_state(x: Sym) -> Sym {
    x.with_kind(Kind::State)
}

fn as_letter(s: Sym) -> Sym {
    s.with_kind(Kind::Letter)
}

/// The dual automaton: `x^-1 --s^-1|t^-1--> y^-1` for each `s --x|y--> t`.
/// Always complete and deterministic.
pub fn dual(a: &Automaton) -> Automaton {
    let states = a.letters().iter().map(|&x| as_state(x.inverse())).collect();
    let letters = a.states().iter().map(|&s| as_letter(s.inverse())).collect();
    let arrows: Vec<Arrow> = a
        .arrows()
        .map(|r| {
            Arrow::new(
                as_state(r.input.inverse()),
                as_letter(r.from.inverse()),
                as_letter(r.to.inverse()),
                as_state(r.output.inverse()),
            )
        })
        .collect();
    Automaton::from_arrows(
        format!("d({})", a.name()),
        a.names().swapped(),
        states,
        letters,
        arrows,
    )
    .expect("dual of a complete deterministic automaton is well defined")
}

/// Which of the eight automata obtained by dual and inverse operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Derived {
    A,
    D,
    I,
    ID,
    DI,
    DID,
    IDI,
    IDID,
}

impl Derived {
    pub const ALL: [Derived; 8] = [
        Derived::A,
        Derived::D,
        Derived::I,
        Derived::ID,
        Derived::DI,
        Derived::DID,
        Derived::IDI,
        Derived::IDID,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Derived::A => "A",
            Derived::D => "dA",
            Derived::I => "iA",
            Derived::ID => "idA",
            Derived::DI => "diA",
            Derived::DID => "didA",
            Derived::IDI => "idiA",
            Derived::IDID => "ididA",
        }
    }

    /// Whether states of the member come from the letters of `A`.
    fn swaps(self) -> bool {
        matches!(self, Derived::D | Derived::DI | Derived::ID | Derived::IDI)
    }

    /// The member's arrow for an arrow `s --x|y--> t` of `A`.
    fn arrow(self, r: &Arrow) -> Arrow {
        let (s, x, y, t) = (r.from, r.input, r.output, r.to);
        let st = as_state;
        let le = as_letter;
        match self {
            Derived::A => *r,
            Derived::D => Arrow::new(st(x.inverse()), le(s.inverse()), le(t.inverse()), st(y.inverse())),
            Derived::I => Arrow::new(s.inverse(), y, x, t.inverse()),
            Derived::DI => Arrow::new(st(y.inverse()), le(s), le(t), st(x.inverse())),
            Derived::DID => Arrow::new(t, x.inverse(), y.inverse(), s),
            Derived::ID => Arrow::new(st(x), le(t.inverse()), le(s.inverse()), st(y)),
            Derived::IDID => Arrow::new(t.inverse(), y.inverse(), x.inverse(), s.inverse()),
            Derived::IDI => Arrow::new(st(y), le(t), le(s), st(x)),
        }
    }

    fn state_set(self, a: &Automaton) -> Vec<Sym> {
        match self {
            Derived::A | Derived::DID => a.states().to_vec(),
            Derived::I | Derived::IDID => a.states().iter().map(|s| s.inverse()).collect(),
            Derived::D | Derived::DI => a.letters().iter().map(|&x| st_inv(x)).collect(),
            Derived::ID | Derived::IDI => a.letters().iter().map(|&x| as_state(x)).collect(),
        }
    }

    fn letter_set(self, a: &Automaton) -> Vec<Sym> {
        match self {
            Derived::A | Derived::I => a.letters().to_vec(),
            Derived::DID | Derived::IDID => a.letters().iter().map(|x| x.inverse()).collect(),
            Derived::D | Derived::ID => a.states().iter().map(|&s| as_letter(s.inverse())).collect(),
            Derived::DI | Derived::IDI => a.states().iter().map(|&s| as_letter(s)).collect(),
        }
    }
}

fn st_inv(x: Sym) -> Sym {
    as_state(x.inverse())
}

/// Builds one member of the derived family by mapping arrows literally.
pub fn derived(a: &Automaton, which: Derived) -> Result<Automaton> {
    let names = if which.swaps() {
        a.names().swapped()
    } else {
        a.names().clone()
    };
    let states = which.state_set(a);
    let letters = which.letter_set(a);
    let arrows: Vec<Arrow> = a.arrows().map(|r| which.arrow(&r)).collect();
    // Count arrows per (state, input) slot to detect non-determinism and
    // incompleteness before the table builder sees them.
    let nl = letters.len();
    let mut counts = vec![0usize; states.len() * nl];
    for r in &arrows {
        let sp = states.iter().position(|&s| s == r.from).expect("state in set");
        let xp = letters.iter().position(|&x| x == r.input).expect("letter in set");
        counts[sp * nl + xp] += 1;
    }
    if let Some(i) = counts.iter().position(|&c| c != 1) {
        return Err(Error::NotInvertible {
            state: names.sym_name(states[i / nl]),
            letter: names.sym_name(letters[i % nl]),
            count: counts[i],
        });
    }
    let label = which.label().trim_end_matches('A');
    Automaton::from_arrows(
        format!("{label}({})", a.name()),
        names,
        states,
        letters,
        arrows,
    )
}

/// The inverse automaton `s^-1 --y|x--> t^-1`. The witness of failure names
/// the original state `s` and output letter `y`.
pub fn inverse(a: &Automaton) -> Result<Automaton> {
    derived(a, Derived::I).map_err(|e| match e {
        Error::NotInvertible {
            state,
            letter,
            count,
        } => Error::NotInvertible {
            state: match state.strip_suffix("^-1") {
                Some(s) => s.to_string(),
                None => format!("{state}^-1"),
            },
            letter,
            count,
        },
        other => other,
    })
}

/// All eight members, in the order `A, dA, iA, idA, diA, didA, idiA, ididA`.
pub fn derived_family(a: &Automaton) -> Vec<(Derived, Result<Automaton>)> {
    Derived::ALL.iter().map(|&d| (d, derived(a, d))).collect()
}

/// The link of the vertex of the square complex: a bipartite multigraph on
/// `(S ∪ S^-1) ⊔ (X ∪ X^-1)`, with states and letters taken as independent
/// colours (signs of a signed automaton's symbols are not identified).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGraph {
    /// Left vertex `(state position, formal sign)`, right vertex likewise.
    pub left: Vec<(usize, bool)>,
    pub right: Vec<(usize, bool)>,
    /// Edge multiplicities, `left index * right.len() + right index`.
    pub multiplicity: Vec<u32>,
}

impl LinkGraph {
    pub fn new(a: &Automaton) -> LinkGraph {
        let ns = a.num_states();
        let nl = a.num_letters();
        let left = (0..ns).flat_map(|s| [(s, false), (s, true)]).collect();
        let right = (0..nl).flat_map(|x| [(x, false), (x, true)]).collect();
        let mut multiplicity = vec![0u32; 4 * ns * nl];
        let idx = |s: usize, sinv: bool, x: usize, xinv: bool| {
            (2 * s + sinv as usize) * 2 * nl + 2 * x + xinv as usize
        };
        for s in 0..ns {
            for x in 0..nl {
                let (y, t) = a.transition(s, x);
                multiplicity[idx(s, false, x, false)] += 1;
                multiplicity[idx(s, true, y, false)] += 1;
                multiplicity[idx(t, false, x, true)] += 1;
                multiplicity[idx(t, true, y, true)] += 1;
            }
        }
        LinkGraph {
            left,
            right,
            multiplicity,
        }
    }

    pub fn edge_count(&self) -> u32 {
        self.multiplicity.iter().sum()
    }

    /// Complete bipartite with every pair joined by exactly one edge.
    pub fn is_complete_simple(&self) -> bool {
        self.multiplicity.iter().all(|&m| m == 1)
    }

    pub fn to_dot(&self, a: &Automaton) -> String {
        let label = |syms: &[Sym], (p, inv): (usize, bool)| {
            let s = syms[p];
            a.sym_name(if inv { s.inverse() } else { s })
        };
        let mut out = String::from("graph link {\n");
        for (i, &v) in self.left.iter().enumerate() {
            let _ = writeln!(out, "  l{i} [label=\"{}\"];", label(a.states(), v));
        }
        for (j, &v) in self.right.iter().enumerate() {
            let _ = writeln!(out, "  r{j} [label=\"{}\",shape=box];", label(a.letters(), v));
        }
        let nr = self.right.len();
        for (k, &m) in self.multiplicity.iter().enumerate() {
            for _ in 0..m {
                let _ = writeln!(out, "  l{} -- r{};", k / nr, k % nr);
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Bireversibility, decided twice: by completeness of the link graph and by
/// well-definedness of all eight derived automata. Disagreement is an error.
pub fn is_bireversible(a: &Automaton) -> Result<bool> {
    let link_graph = LinkGraph::new(a).is_complete_simple();
    let eight_automata = derived_family(a).iter().all(|(_, r)| r.is_ok());
    if link_graph != eight_automata {
        return Err(Error::InternalDisagreement {
            link_graph,
            eight_automata,
        });
    }
    Ok(link_graph)
}

/// `A±`: the union of `A`, `iA`, `didA`, `ididA` over `S^±1` and `X^±1`.
pub fn pm_closure(a: &Automaton) -> Result<Automaton> {
    if !is_bireversible(a)? {
        return Err(Error::NotBireversible);
    }
    let close = |syms: &[Sym]| {
        let mut out = syms.to_vec();
        for s in syms {
            if !out.contains(&s.inverse()) {
                out.push(s.inverse());
            }
        }
        out
    };
    let states = close(a.states());
    let letters = close(a.letters());
    let mut arrows = BTreeSet::new();
    for d in [Derived::A, Derived::I, Derived::DID, Derived::IDID] {
        arrows.extend(derived(a, d)?.arrows());
    }
    let out = Automaton::from_arrows(
        format!("pm({})", a.name()),
        a.names().clone(),
        states,
        letters,
        arrows,
    )?;
    debug_assert!(out.is_signed());
    Ok(out)
}

/// Bijections between two automata, by positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Isomorphism {
    /// `states[i]` is the position in `B` of the image of state `i` of `A`.
    pub states: Vec<usize>,
    pub letters: Vec<usize>,
}

impl Isomorphism {
    pub fn inverse(&self) -> Isomorphism {
        let inv = |p: &[usize]| {
            let mut out = vec![0; p.len()];
            for (i, &j) in p.iter().enumerate() {
                out[j] = i;
            }
            out
        };
        Isomorphism {
            states: inv(&self.states),
            letters: inv(&self.letters),
        }
    }

    /// Checks that arrows are carried to arrows.
    pub fn verify(&self, a: &Automaton, b: &Automaton) -> bool {
        if self.states.len() != a.num_states()
            || self.letters.len() != a.num_letters()
            || a.num_states() != b.num_states()
            || a.num_letters() != b.num_letters()
        {
            return false;
        }
        (0..a.num_states()).all(|s| {
            (0..a.num_letters()).all(|x| {
                let (y, t) = a.transition(s, x);
                b.transition(self.states[s], self.letters[x]) == (self.letters[y], self.states[t])
            })
        })
    }

    /// Human-readable `a->y, ...` over symbol names.
    pub fn describe(&self, a: &Automaton, b: &Automaton) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, &j) in self.states.iter().enumerate() {
            out.push((a.sym_name(a.states()[i]), b.sym_name(b.states()[j])));
        }
        for (i, &j) in self.letters.iter().enumerate() {
            out.push((a.sym_name(a.letters()[i]), b.sym_name(b.letters()[j])));
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Whether a position map respects formal inverses (`f(s^-1) = f(s)^-1`).
fn sign_compatible(from: &[Sym], to: &[Sym], map: &[usize]) -> bool {
    from.iter().enumerate().all(|(i, s)| {
        match from.iter().position(|&u| u == s.inverse()) {
            Some(j) => to[map[j]] == to[map[i]].inverse(),
            None => true,
        }
    })
}

/// Exhaustive isomorphism search. With `fix_alphabet` the letter bijection
/// must be the identity on letter symbols. When both automata are signed only
/// maps respecting formal inverses are considered. Returns the
/// lexicographically first `(state map, letter map)` by target positions.
pub fn find_isomorphism(a: &Automaton, b: &Automaton, fix_alphabet: bool) -> Option<Isomorphism> {
    all_isomorphisms(a, b, fix_alphabet).into_iter().min()
}

/// The lexicographically first isomorphism agreeing with `partial`, a list
/// of `(symbol of A, symbol of B)` pairs.
pub fn find_isomorphism_extending(
    a: &Automaton,
    b: &Automaton,
    fix_alphabet: bool,
    partial: &[(Sym, Sym)],
) -> Option<Isomorphism> {
    all_isomorphisms(a, b, fix_alphabet)
        .into_iter()
        .filter(|iso| {
            partial.iter().all(|&(from, to)| match from.kind() {
                Kind::State => a.state_index(from).map(|i| b.states()[iso.states[i]]) == Some(to),
                Kind::Letter => a.letter_index(from).map(|i| b.letters()[iso.letters[i]]) == Some(to),
            })
        })
        .min()
}

/// Every isomorphism under the rules of [`find_isomorphism`].
pub fn all_isomorphisms(a: &Automaton, b: &Automaton, fix_alphabet: bool) -> Vec<Isomorphism> {
    let (ns, nl) = (a.num_states(), a.num_letters());
    if ns != b.num_states() || nl != b.num_letters() || ns > 9 || nl > 9 {
        return Vec::new();
    }
    let signed = a.is_signed() && b.is_signed();
    let letter_maps: Vec<Vec<usize>> = if fix_alphabet {
        if a.letters() != b.letters() || a.names().letters != b.names().letters {
            return Vec::new();
        }
        vec![(0..nl).collect()]
    } else {
        permutations(nl)
            .into_iter()
            .filter(|p| !signed || sign_compatible(a.letters(), b.letters(), p))
            .collect()
    };
    let mut out = Vec::new();
    for lm in letter_maps {
        let mut sm = vec![usize::MAX; ns];
        let mut used = vec![false; ns];
        extend_state_map(a, b, &lm, &mut sm, &mut used, &mut |sm| {
            if !signed || sign_compatible(a.states(), b.states(), sm) {
                out.push(Isomorphism {
                    states: sm.to_vec(),
                    letters: lm.clone(),
                });
            }
        });
    }
    out
}

/// Backtracking with forced propagation along arrows.
fn extend_state_map(
    a: &Automaton,
    b: &Automaton,
    lm: &[usize],
    sm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let Some(free) = sm.iter().position(|&v| v == usize::MAX) else {
        emit(sm);
        return;
    };
    for cand in 0..b.num_states() {
        if used[cand] {
            continue;
        }
        let (saved_sm, saved_used) = (sm.clone(), used.clone());
        if propagate(a, b, lm, sm, used, free, cand) {
            extend_state_map(a, b, lm, sm, used, emit);
        }
        *sm = saved_sm;
        *used = saved_used;
    }
}

fn propagate(
    a: &Automaton,
    b: &Automaton,
    lm: &[usize],
    sm: &mut [usize],
    used: &mut [bool],
    s0: usize,
    img: usize,
) -> bool {
    sm[s0] = img;
    used[img] = true;
    let mut stack = vec![s0];
    while let Some(s) = stack.pop() {
        for x in 0..a.num_letters() {
            let (y, t) = a.transition(s, x);
            let (by, bt) = b.transition(sm[s], lm[x]);
            if by != lm[y] {
                return false;
            }
            if sm[t] == usize::MAX {
                if used[bt] {
                    return false;
                }
                sm[t] = bt;
                used[bt] = true;
                stack.push(t);
            } else if sm[t] != bt {
                return false;
            }
        }
    }
    true
}

/// Disjoint union over a common alphabet.
pub fn union(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    if a.letters() != b.letters() || a.names().letters != b.names().letters {
        return Err(Error::AlphabetMismatch);
    }
    for n in &b.names().states {
        if a.names().states.contains(n) {
            return Err(Error::NameCollision(n.clone()));
        }
    }
    let offset = a.names().states.len() as u32;
    let shift = |s: Sym| Sym::new(Kind::State, s.base() + offset, s.is_inverse());
    let mut names = a.names().clone();
    names.states.extend(b.names().states.iter().cloned());
    let mut states = a.states().to_vec();
    states.extend(b.states().iter().map(|&s| shift(s)));
    let arrows: Vec<Arrow> = a
        .arrows()
        .chain(
            b.arrows()
                .map(|r| Arrow::new(shift(r.from), r.input, r.output, shift(r.to))),
        )
        .collect();
    Automaton::from_arrows(
        format!("{}+{}", a.name(), b.name()),
        names,
        states,
        letters_of(a),
        arrows,
    )
}

fn letters_of(a: &Automaton) -> Vec<Sym> {
    a.letters().to_vec()
}

/// Moore partition refinement: merges states defining equal transformations
/// of letter words. Returns the quotient (one representative per class, the
/// first in declaration order) and the class index of every state.
pub fn minimize(a: &Automaton) -> (Automaton, Vec<usize>) {
    let (ns, nl) = (a.num_states(), a.num_letters());
    let mut class: Vec<usize> = number_classes(
        (0..ns)
            .map(|s| (0..nl).map(|x| a.transition(s, x).0).collect::<Vec<_>>())
            .collect(),
    );
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..ns)
            .map(|s| (class[s], (0..nl).map(|x| class[a.transition(s, x).1]).collect()))
            .collect();
        let next = number_classes(sig);
        let done = next.iter().max() == class.iter().max();
        class = next;
        if done {
            break;
        }
    }
    let nclasses = class.iter().max().map_or(0, |m| m + 1);
    let reps: Vec<usize> = (0..nclasses)
        .map(|c| class.iter().position(|&k| k == c).unwrap())
        .collect();
    let states: Vec<Sym> = reps.iter().map(|&r| a.states()[r]).collect();
    let (reps_ref, class_ref) = (&reps, &class);
    let arrows: Vec<Arrow> = reps
        .iter()
        .flat_map(|&r| {
            (0..nl).map(move |x| {
                let (y, t) = a.transition(r, x);
                Arrow::new(a.states()[r], a.letters()[x], a.letters()[y], a.states()[reps_ref[class_ref[t]]])
            })
        })
        .collect();
    let m = Automaton::from_arrows(
        format!("min({})", a.name()),
        a.names().clone(),
        states,
        a.letters().to_vec(),
        arrows,
    )
    .expect("quotient of a complete deterministic automaton");
    (m, class)
}

fn number_classes<K: Ord + Clone>(keys: Vec<K>) -> Vec<usize> {
    let mut seen: Vec<K> = Vec::new();
    keys.iter()
        .map(|k| match seen.iter().position(|s| s == k) {
            Some(i) => i,
            None => {
                seen.push(k.clone());
                seen.len() - 1
            }
        })
        .collect()
}

/// Connected components of the underlying undirected arrow graph, as lists
/// of state symbols ordered by declaration.
pub fn connected_components(a: &Automaton) -> Vec<Vec<Sym>> {
    let ns = a.num_states();
    let mut parent: Vec<usize> = (0..ns).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    for s in 0..ns {
        for x in 0..a.num_letters() {
            let t = a.transition(s, x).1;
            let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
            if rs != rt {
                parent[rs.max(rt)] = rs.min(rt);
            }
        }
    }
    let mut comps: Vec<(usize, Vec<Sym>)> = Vec::new();
    for s in 0..ns {
        let r = find(&mut parent, s);
        match comps.iter_mut().find(|(k, _)| *k == r) {
            Some((_, v)) => v.push(a.states()[s]),
            None => comps.push((r, vec![a.states()[s]])),
        }
    }
    comps.into_iter().map(|(_, v)| v).collect()
}

/// The subautomaton on a transition-closed set of states.
pub fn restrict(a: &Automaton, states: &[Sym]) -> Result<Automaton> {
    let arrows: Vec<Arrow> = a.arrows().filter(|r| states.contains(&r.from)).collect();
    Automaton::from_arrows(
        a.name().to_string(),
        a.names().clone(),
        states.to_vec(),
        a.letters().to_vec(),
        arrows,
    )
}

/// Names helper for callers constructing automata in code.
pub fn names(states: &[&str], letters: &[&str]) -> Names {
    Names {
        states: states.iter().map(|s| s.to_string()).collect(),
        letters: letters.iter().map(|s| s.to_string()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn dual_is_an_involution() {
        for a in corpus::all() {
            assert_eq!(dual(&dual(&a)), a, "{}", a.name());
        }
    }

    #[test]
    fn inverse_is_an_involution() {
        let a = corpus::aleshin();
        assert_eq!(inverse(&inverse(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn non_invertible_witness() {
        let a = Automaton::parse("alphabet: 0 1\nstates: s\ns 0 -> 0 s\ns 1 -> 0 s\n").unwrap();
        let err = inverse(&a).unwrap_err();
        assert!(matches!(err, Error::NotInvertible { ref state, ref letter, count: 2 } if state == "s" && letter == "0"));
        let fam = derived_family(&a);
        assert!(fam.iter().find(|(d, _)| *d == Derived::I).unwrap().1.is_err());
        assert!(fam.iter().find(|(d, _)| *d == Derived::D).unwrap().1.is_ok());
    }

    #[test]
    fn aleshin_family_and_did_arrows() {
        let a = corpus::aleshin();
        let fam = derived_family(&a);
        assert!(fam.iter().all(|(_, r)| r.is_ok()));
        let did = derived(&a, Derived::DID).unwrap();
        for r in a.arrows() {
            assert_eq!(
                did.step(r.to, r.input.inverse()),
                Some((r.output.inverse(), r.from))
            );
        }
    }

    #[test]
    fn derived_members_match_compositions() {
        let a = corpus::aleshin();
        let d = |x: &Automaton| dual(x);
        let i = |x: &Automaton| inverse(x).unwrap();
        let check = |which: Derived, composed: Automaton| {
            assert_eq!(derived(&a, which).unwrap(), composed, "{which:?}");
        };
        check(Derived::D, d(&a));
        check(Derived::I, i(&a));
        check(Derived::ID, i(&d(&a)));
        check(Derived::DI, d(&i(&a)));
        check(Derived::DID, d(&i(&d(&a))));
        check(Derived::IDI, i(&d(&i(&a))));
        check(Derived::IDID, i(&d(&i(&d(&a)))));
        assert_eq!(d(&i(&d(&i(&a)))), i(&d(&i(&d(&a)))));
    }

    #[test]
    fn bireversibility_examples() {
        assert!(is_bireversible(&corpus::aleshin()).unwrap());
        assert!(is_bireversible(&corpus::delta_d()).unwrap());
        let adding = Automaton::parse(
            "alphabet: 0 1\nstates: a e\na 0 -> 1 e\na 1 -> 0 a\ne 0 -> 0 e\ne 1 -> 1 e\n",
        )
        .unwrap();
        let lg = LinkGraph::new(&adding);
        // Brute-force count: 4 edges per arrow, some pair hit twice.
        assert_eq!(lg.edge_count(), 16);
        assert!(lg.multiplicity.iter().any(|&m| m >= 2));
        assert!(!is_bireversible(&adding).unwrap());
    }

    #[test]
    fn closure_sizes_and_restriction() {
        let a = corpus::aleshin();
        let pm = pm_closure(&a).unwrap();
        assert_eq!((pm.num_states(), pm.num_letters()), (6, 4));
        assert!(pm.is_signed());
        assert!(is_bireversible(&pm).unwrap());
        for r in a.arrows() {
            assert_eq!(pm.step(r.from, r.input), Some((r.output, r.to)));
        }
        let dd = corpus::delta_s();
        assert_eq!(pm_closure(&dd).unwrap(), dd);
    }

    #[test]
    fn isomorphism_basics() {
        let a = corpus::aleshin();
        let id = find_isomorphism(&a, &a, false).unwrap();
        assert_eq!(id.states, vec![0, 1, 2]);
        assert_eq!(id.letters, vec![0, 1]);
        assert!(find_isomorphism(&a, &corpus::bellaterra(), false).is_none());
        let ds = corpus::delta_s();
        let dds = dual(&ds);
        let iso = find_isomorphism(&ds, &dds, false).unwrap();
        assert!(iso.verify(&ds, &dds));
        assert!(iso.inverse().verify(&dds, &ds));
    }

    #[test]
    fn union_minimize_components() {
        let a = corpus::aleshin();
        let r = derived(&a, Derived::DID)
            .unwrap()
            .with_positive_letters()
            .unwrap()
            .rename_states("'");
        let u = union(&a, &r).unwrap();
        assert_eq!(u.num_states(), 6);
        assert!(matches!(union(&a, &a), Err(Error::NameCollision(_))));
        assert!(matches!(
            union(&a, &corpus::lamplighter()),
            Err(Error::AlphabetMismatch)
        ));
        let (m, classes) = minimize(&a);
        assert_eq!(m, a);
        assert_eq!(classes, vec![0, 1, 2]);
        assert_eq!(connected_components(&a).len(), 1);
        assert_eq!(connected_components(&u).len(), 2);
    }
}
