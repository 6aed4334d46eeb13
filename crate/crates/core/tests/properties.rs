use proptest::prelude::*;

use bireversible::action::Engine;
use bireversible::corpus;
use bireversible::ops::{dual, find_isomorphism, inverse, is_bireversible};
use bireversible::pi1::{normal_form, pi1_is_trivial, Orientation};
use bireversible::{Automaton, Kind, MixedWord, Sym, Word};

/// A random complete deterministic automaton over `ns` states and `nl`
/// letters, as text.
fn table_text(ns: usize, nl: usize, table: &[(usize, usize)]) -> String {
    let states: Vec<String> = (0..ns).map(|i| format!("s{i}")).collect();
    let letters: Vec<String> = (0..nl).map(|i| i.to_string()).collect();
    let mut out = format!("alphabet: {}\nstates: {}\n", letters.join(" "), states.join(" "));
    for (i, &(y, t)) in table.iter().enumerate() {
        out += &format!("{} {} -> {} {}\n", states[i / nl], letters[i % nl], letters[y], states[t]);
    }
    out
}

fn random_automaton() -> impl Strategy<Value = Automaton> {
    (1usize..=3, 2usize..=3).prop_flat_map(|(ns, nl)| {
        prop::collection::vec((0..nl, 0..ns), ns * nl)
            .prop_map(move |t| Automaton::parse(&table_text(ns, nl, &t)).expect("complete table"))
    })
}

fn engines() -> Vec<(Automaton, Engine)> {
    corpus::all()
        .into_iter()
        .map(|a| {
            let e = Engine::new(&a).expect("bundled automata are invertible");
            (a, e)
        })
        .collect()
}

/// Picks symbols of the closed automaton by index.
fn pick(alphabet: &[Sym], picks: &[usize]) -> Vec<Sym> {
    let mut out: Vec<Sym> = Vec::new();
    for &i in picks {
        let s = alphabet[i % alphabet.len()];
        if out.last() == Some(&s.inverse()) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

fn word(kind: Kind, alphabet: &[Sym], picks: &[usize]) -> Word {
    Word::new(kind, pick(alphabet, picks)).unwrap()
}

fn picks() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 0..8)
}

proptest! {
    #[test]
    fn dual_is_an_involution(a in random_automaton()) {
        let dd = dual(&dual(&a));
        prop_assert!(find_isomorphism(&dd, &a, false).is_some());
        prop_assert_eq!(dd.raw_table(), a.raw_table());
        prop_assert_eq!(dd.names(), a.names());
    }

    #[test]
    fn inverse_is_an_involution(a in random_automaton()) {
        if let Ok(i) = inverse(&a) {
            let ii = inverse(&i).unwrap();
            prop_assert!(find_isomorphism(&ii, &a, true).is_some());
        }
    }

    #[test]
    fn bireversibility_is_dual_invariant(a in random_automaton()) {
        prop_assert_eq!(is_bireversible(&a).unwrap(), is_bireversible(&dual(&a)).unwrap());
    }

    #[test]
    fn action_laws(i in 0usize..5, g in picks(), h in picks(), u in picks(), v in picks()) {
        let (_, e) = &engines()[i];
        let (g, h) = (word(Kind::State, e.states(), &g), word(Kind::State, e.states(), &h));
        let (u, v) = (word(Kind::Letter, e.letters(), &u), word(Kind::Letter, e.letters(), &v));
        // Length preserving and invertible.
        let gv = e.act(&g, &v);
        prop_assert_eq!(gv.len(), v.len());
        prop_assert_eq!(e.act(&g.inverse(), &gv), v.clone());
        // Words act from the right end: `g h` applies `h` first.
        prop_assert_eq!(e.act(&g.concat(&h), &v), e.act(&g, &e.act(&h, &v)));
        // Cocycle rule for sections.
        let uv = u.concat(&v);
        let su = e.section(&g, &u);
        prop_assert_eq!(e.act(&g, &uv), e.act(&g, &u).concat(&e.act(&su, &v)));
        prop_assert_eq!(e.section(&g, &uv), e.section(&su, &v));
    }

    #[test]
    fn normal_forms(i in 0usize..5, w in prop::collection::vec(0usize..64, 0..12)) {
        let (_, e) = &engines()[i];
        let all: Vec<Sym> = e.states().iter().chain(e.letters()).copied().collect();
        let w = MixedWord::new(pick(&all, &w));
        for o in [Orientation::Left, Orientation::Right] {
            let nf = normal_form(e, &w, o);
            // Same element, and a fixed point of normalization.
            prop_assert!(pi1_is_trivial(e, &w.concat(&nf.to_mixed().inverse())));
            prop_assert_eq!(normal_form(e, &nf.to_mixed(), o), nf.clone());
            prop_assert!(normal_form(e, &w.concat(&w.inverse()), o).is_identity());
        }
    }
}
