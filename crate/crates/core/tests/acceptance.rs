//! Acceptance suite: one PASS/FAIL line per criterion, with time limits.
//!
//! Runs without the libtest harness so the lines always print:
//! `cargo test -p bireversible --test acceptance`.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bireversible::action::{Engine, Order};
use bireversible::automaton::Automaton;
use bireversible::canon::Policy;
use bireversible::catalog::{catalog_caps, enumerate};
use bireversible::corpus;
use bireversible::coset::{quotient_order, GroupPresentation};
use bireversible::ops::{dual, find_isomorphism_extending};
use bireversible::pi1::periodic_tiling;
use bireversible::record::Record;
use bireversible::reproduce::{passed, reproduce, PM_KNOWN_FAILURES};
use bireversible::word::{reduced_words, Kind, Sym, Word};

/// Criteria expected to fail; see the P_m discussion in the README.
const KNOWN_FAILURES: [u32; 1] = [9];

/// Number, label, time limit in seconds, check.
type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_record(r: &Record) -> Outcome {
    Outcome {
        ok: passed(r),
        detail: match r.get("failed") {
            Some("") | None => String::new(),
            Some(f) => format!("failed checks: {f}"),
        },
    }
}

fn combine(parts: Vec<(&str, bool)>) -> Outcome {
    let bad: Vec<&str> = parts.iter().filter(|p| !p.1).map(|p| p.0).collect();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() { String::new() } else { format!("failed: {}", bad.join(", ")) },
    }
}

fn experiment(name: &str) -> bool {
    let r = reproduce(name, 0).expect("experiment runs");
    if !passed(&r) {
        eprintln!("{}", r.to_text());
    }
    passed(&r)
}

/// Bireversibility straight from the arrows: each of the four corner pairs
/// `(s,x)`, `(s,y)`, `(t,x)`, `(t,y)` of an arrow `s --x|y--> t` must
/// determine it.
fn corners_determine_arrows(arrows: &[[u32; 4]]) -> bool {
    [(0, 1), (0, 2), (3, 1), (3, 2)].iter().all(|&(i, j)| {
        let mut seen = HashSet::new();
        arrows.iter().all(|r| seen.insert((r[i], r[j])))
    })
}

fn arrow_codes(a: &Automaton) -> Vec<[u32; 4]> {
    a.arrows()
        .map(|r| [r.from.code(), r.input.code(), r.output.code(), r.to.code()])
        .collect()
}

fn c1() -> Outcome {
    let oracle = ["aleshin", "bellaterra", "delta_d", "delta_s", "lamplighter"]
        .iter()
        .all(|n| corners_determine_arrows(&arrow_codes(&corpus::automaton(n).unwrap())));
    combine(vec![("both checks", experiment("bireversibility")), ("corner oracle", oracle)])
}

/// Counts bireversible tables over all `(|S||X|)^(|S||X|)` raw tables.
fn brute_force_bireversible(ns: u32, nl: u32) -> usize {
    let slots = (ns * nl) as usize;
    let choices = (ns * nl) as u64;
    (0..choices.pow(slots as u32))
        .filter(|&code| {
            let mut c = code;
            let arrows: Vec<[u32; 4]> = (0..slots as u32)
                .map(|i| {
                    let v = (c % choices) as u32;
                    c /= choices;
                    [i / nl, i % nl, v % nl, v / nl]
                })
                .collect();
            corners_determine_arrows(&arrows)
        })
        .count()
}

fn c2() -> Outcome {
    let two = enumerate(2, 2, Policy::Iso, catalog_caps()).unwrap();
    let three = enumerate(3, 2, Policy::Iso, catalog_caps()).unwrap();
    combine(vec![
        ("classification", experiment("classification")),
        ("2x2 count oracle", brute_force_bireversible(2, 2) == two.bireversible),
        ("3x2 count oracle", brute_force_bireversible(3, 2) == three.bireversible),
    ])
}

fn c3() -> Outcome {
    combine(vec![
        ("group structure", experiment("group_structure")),
        ("bellaterra involutions", experiment("bellaterra_involutions")),
    ])
}

/// Orbit of the first reduced word of length `n` under the generators,
/// by breadth-first search with `act` only.
fn brute_orbit_is_everything(e: &Engine, n: usize) -> bool {
    let words = reduced_words(e.letters(), n);
    let gens: Vec<Word> = e
        .generators()
        .into_iter()
        .flat_map(|g| [Word::single(g), Word::single(g.inverse())])
        .collect();
    let start = Word::new(Kind::Letter, words[0].clone()).unwrap();
    let mut seen: HashSet<Word> = HashSet::from([start.clone()]);
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        for g in &gens {
            let w = e.act(g, &v);
            if seen.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    seen.len() == words.len()
}

fn c4() -> Outcome {
    let e = Engine::new(&corpus::delta_d()).unwrap();
    let oracle = (1..=5).all(|n| brute_orbit_is_everything(&e, n));
    combine(vec![("orbits", experiment("delta_d_orbits")), ("transitivity oracle", oracle)])
}

fn c5() -> Outcome {
    // Apply the displayed map to every arrow and compare arrow sets.
    let s = corpus::delta_s();
    let ds = dual(&s);
    let sym = |a: &Automaton, kind: Kind, n: &str| a.names().resolve_kind(kind, n).unwrap();
    let pairs = [
        (sym(&s, Kind::State, "a"), sym(&ds, Kind::State, "y")),
        (sym(&s, Kind::State, "b"), sym(&ds, Kind::State, "x")),
        (sym(&s, Kind::Letter, "x"), sym(&ds, Kind::Letter, "b").inverse()),
        (sym(&s, Kind::Letter, "y"), sym(&ds, Kind::Letter, "a").inverse()),
    ];
    let map = |x: Sym| -> Sym {
        let (from, to) = pairs.iter().find(|p| p.0.base() == x.base() && p.0.kind() == x.kind()).unwrap();
        if x == *from { *to } else { to.inverse() }
    };
    let image: BTreeSet<[u32; 4]> = s
        .arrows()
        .map(|r| [map(r.from).code(), map(r.input).code(), map(r.output).code(), map(r.to).code()])
        .collect();
    let target: BTreeSet<[u32; 4]> = arrow_codes(&ds).into_iter().collect();
    let search_agrees = find_isomorphism_extending(&s, &ds, false, &pairs).is_some();
    combine(vec![
        ("delta_s suite", experiment("delta_s")),
        ("displayed map is an isomorphism", image == target && search_agrees),
    ])
}

fn c6() -> Outcome {
    from_record(&reproduce("endomorphisms", 0).unwrap())
}

fn c7() -> Outcome {
    from_record(&reproduce("normal_forms", 0).unwrap())
}

/// Cycle length of the functional graph `(s,x) -> (t,y)` from `(0,0)`.
fn cycle_length(a: &Automaton) -> usize {
    let nl = a.num_letters();
    let mut first = vec![usize::MAX; a.num_states() * nl];
    let (mut s, mut x, mut step) = (0, 0, 0);
    while first[s * nl + x] == usize::MAX {
        first[s * nl + x] = step;
        let (y, t) = a.transition(s, x);
        (s, x, step) = (t, y, step + 1);
    }
    step - first[s * nl + x]
}

fn c8() -> Outcome {
    let a = corpus::aleshin();
    combine(vec![
        ("tilings", experiment("tiling")),
        ("aleshin cycle oracle", cycle_length(&a) == 6 && periodic_tiling(&a).cycle.len() == 6),
    ])
}

fn c9() -> Outcome {
    let r = reproduce("pm_delta_d", 0).unwrap();
    let failing: Vec<usize> = (1..=6)
        .filter(|m| r.get(&format!("check.m{m}.contained")) == Some("FAIL"))
        .collect();
    let nonempty = (1..=6).all(|m| r.get(&format!("check.m{m}.nonempty")) == Some("pass"));
    let mut o = from_record(&r);
    o.detail = format!(
        "nonempty for all m: {nonempty}; containment fails for m in {failing:?} \
         (odd powers leave the first level stabilizer, so single generators move a to b); \
         documented as {:?}",
        PM_KNOWN_FAILURES
    );
    if failing != PM_KNOWN_FAILURES || !nonempty {
        o.detail.push_str(" -- UNEXPECTED");
    }
    o
}

fn c10() -> Outcome {
    let mut parts = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let limit = Duration::from_secs(10);
    for (name, extra) in [("ex71", "(b1^-1 b2)^4"), ("ex72", "a1^2 a2^-2")] {
        let p = GroupPresentation::parse(corpus::presentation_source(name).unwrap()).unwrap();
        let q = p.with_relators(&[p.parse_word(extra).unwrap()]);
        let t0 = Instant::now();
        let order = quotient_order(&q, &[], 100_000);
        parts.push((name, order == Order::Exact(4) && t0.elapsed() < limit));
        let mut same = true;
        for _ in 0..3 {
            let mut s = q.clone();
            s.relators.shuffle(&mut rng);
            let t0 = Instant::now();
            same &= quotient_order(&s, &[], 100_000) == order && t0.elapsed() < limit;
        }
        parts.push((if name == "ex71" { "ex71 shuffles" } else { "ex72 shuffles" }, same));
    }
    combine(parts)
}

fn c11() -> Outcome {
    from_record(&reproduce("nrf", 0).unwrap())
}

fn c12() -> Outcome {
    from_record(&reproduce("vh4", 0).unwrap())
}

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "bireversibility suite", Some(1), c1),
        (2, "classification", Some(300), c2),
        (3, "group structure", Some(60), c3),
        (4, "delta_d orbits", None, c4),
        (5, "delta_s suite", Some(120), c5),
        (6, "endomorphisms", None, c6),
        (7, "normal forms", None, c7),
        (8, "periodic tiling", None, c8),
        (9, "P_m for the dual of delta_d", Some(60), c9),
        (10, "coset enumeration, 10s per run", None, c10),
        (11, "NRF reports", None, c11),
        (12, "VH-4 classification", Some(600), c12),
    ];
    let mut failures = Vec::new();
    for (n, label, limit, run) in criteria {
        let t0 = Instant::now();
        let outcome = run();
        let elapsed = t0.elapsed();
        let in_time = limit.is_none_or(|s| elapsed <= Duration::from_secs(s));
        let ok = outcome.ok && in_time;
        let limit_text = limit.map(|s| format!(" limit {s}s")).unwrap_or_default();
        let mut detail = outcome.detail;
        if !in_time {
            detail.push_str(" over time limit");
        }
        println!(
            "criterion {n:>2} {}: {label} ({:.2}s{limit_text}) {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !ok {
            failures.push(n);
        }
    }
    if failures != KNOWN_FAILURES {
        println!("unexpected set of failing criteria: {failures:?}, expected {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
    println!("acceptance: failing set matches the documented {KNOWN_FAILURES:?}");
}
