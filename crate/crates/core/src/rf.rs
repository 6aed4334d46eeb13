//! Residual finiteness: stabilizer partition, dual exponent, the
//! endomorphisms of the fundamental group, subautomaton embeddings, `P_m`
//! sets and the assembled non-residual-finiteness report.

use std::collections::{BTreeMap, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::action::{Caps, Engine, Order, ReplicationCert, Verdict};
use crate::automaton::Automaton;
use crate::corpus;
use crate::error::{Error, Result};
use crate::ops::{connected_components, find_isomorphism};
use crate::par;
use crate::pi1::{normal_form, pi1_is_trivial, presentation, Orientation, Presentation};
use crate::record::Record;
use crate::word::{push_reduced, random_reduced, reduced_words, Kind, MixedWord, Names, Sym, Word};

/// Images of generators; generators without an entry are fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMap {
    pub images: Vec<(Sym, MixedWord)>,
}

impl GeneratorMap {
    pub fn image(&self, s: Sym) -> MixedWord {
        match self.images.iter().find(|(g, _)| *g == s.positive()) {
            Some((_, w)) if s.is_inverse() => w.inverse(),
            Some((_, w)) => w.clone(),
            None => MixedWord::new([s]),
        }
    }

    pub fn apply(&self, w: &MixedWord) -> MixedWord {
        let mut out = Vec::new();
        for &s in w.syms() {
            for &t in self.image(s).syms() {
                push_reduced(&mut out, t);
            }
        }
        MixedWord::new(out)
    }

    pub fn compose(&self, other: &GeneratorMap) -> GeneratorMap {
        // (self ∘ other)(g) = self(other(g)).
        let mut gens: Vec<Sym> = self.images.iter().map(|p| p.0).collect();
        for (g, _) in &other.images {
            if !gens.contains(g) {
                gens.push(*g);
            }
        }
        GeneratorMap {
            images: gens
                .into_iter()
                .map(|g| (g, self.apply(&other.image(g))))
                .collect(),
        }
    }

    /// `g -> image` for every generator of `p`, in generator order.
    pub fn describe(&self, names: &Names, p: &Presentation) -> Vec<(String, String)> {
        p.generators
            .iter()
            .map(|&g| (names.sym_name(g), names.fmt_mixed(&self.image(g))))
            .collect()
    }

    /// Parses `g -> word` pairs separated by `;` or newlines.
    pub fn parse(names: &Names, text: &str) -> Result<GeneratorMap> {
        let mut images = Vec::new();
        for part in text.split([';', '\n']) {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (lhs, rhs) = part.split_once("->").ok_or_else(|| Error::Syntax {
                line: 0,
                msg: format!("expected `gen -> word`, got `{part}`"),
            })?;
            let g = names.resolve(lhs.trim())?;
            if g.is_inverse() {
                return Err(Error::Syntax {
                    line: 0,
                    msg: "map a positive generator".into(),
                });
            }
            images.push((g, names.parse_mixed(rhs)?));
        }
        Ok(GeneratorMap { images })
    }
}

/// States fixing both positive letters, states fixing both inverse letters,
/// and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub plus: Vec<Sym>,
    pub minus: Vec<Sym>,
    pub rest: Vec<Sym>,
}

fn binary_letters(e: &Engine) -> Result<(Sym, Sym)> {
    match e.positive_letters()[..] {
        [x, y] => Ok((x, y)),
        _ => Err(Error::NotBinary),
    }
}

pub fn stabilizer_partition(e: &Engine) -> Result<Partition> {
    let (x, y) = binary_letters(e)?;
    let mut p = Partition {
        plus: vec![],
        minus: vec![],
        rest: vec![],
    };
    let fixes = |s: Sym, z: Sym| e.step(s, z).0 == z;
    for &s in e.automaton().states() {
        if fixes(s, x) != fixes(s, y) || fixes(s, x.inverse()) != fixes(s, y.inverse()) {
            return Err(Error::DichotomyViolation(e.automaton().sym_name(s)));
        }
        if fixes(s, x) {
            p.plus.push(s);
        }
        if fixes(s, x.inverse()) {
            p.minus.push(s);
        }
        if !fixes(s, x) && !fixes(s, x.inverse()) {
            p.rest.push(s);
        }
    }
    Ok(p)
}

/// Least `n >= 1` with `(y^-1 x)^n` and `(x^-1 y)^n` fixing every state of
/// `A±` under the dual action.
pub fn dual_exponent(e: &Engine) -> Result<usize> {
    let (x, y) = binary_letters(e)?;
    let p = [y.inverse(), x];
    let q = [x.inverse(), y];
    exponent_fixing(e.states(), |s, n| {
        let word = |base: &[Sym]| base.repeat(n);
        e.act_section_syms(&[s], &word(&p)).1 == [s] && e.act_section_syms(&[s], &word(&q)).1 == [s]
    })
    .ok_or_else(|| Error::NotApplicable("dual exponent exceeds 10000".into()))
}

fn exponent_fixing(items: &[Sym], ok: impl Fn(Sym, usize) -> bool) -> Option<usize> {
    (1..=10_000).find(|&n| items.iter().all(|&s| ok(s, n)))
}

/// Which generators the endomorphism fixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedSide {
    States,
    Letters,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    pub map: GeneratorMap,
    pub fixed: FixedSide,
    /// Which construction produced it.
    pub construction: &'static str,
    /// `n` in `x (y^-1 x)^n`, or `N` in `s -> s^(1+N)`.
    pub exponent: usize,
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn power_word(base: &[Sym], n: usize) -> MixedWord {
    MixedWord::new(base.repeat(n))
}

/// The endomorphism of the fundamental group used for non-residual
/// finiteness:
///
/// * binary alphabet: `x -> x (y^-1 x)^n`, `y -> y (x^-1 y)^n`, states fixed;
/// * two-state components `{s, t}`: the same on the state side, using the
///   exponent of the dual pair `t^-1 s`, `s^-1 t` acting on letters;
/// * signed automata whose states have finite orders: `s -> s^(1+N)` with
///   `N` the lcm of the orders, letters fixed.
pub fn build_endomorphism(e: &Engine) -> Result<Endomorphism> {
    let a = e.automaton();
    if a.is_signed() {
        let mut n = 1;
        for s in e.generators() {
            match e.element_order(&Word::single(s), 64) {
                Order::Exact(k) => n = lcm(n, k),
                Order::AtLeast(_) => {
                    return Err(Error::NotApplicable(format!(
                        "state {} has order at least 64",
                        a.sym_name(s)
                    )))
                }
            }
        }
        let images = e
            .generators()
            .into_iter()
            .map(|s| (s, power_word(&[s], n + 1)))
            .collect();
        return Ok(Endomorphism {
            map: GeneratorMap { images },
            fixed: FixedSide::Letters,
            construction: "power map on states",
            exponent: n,
        });
    }
    if let Ok((x, y)) = binary_letters(e) {
        let n = dual_exponent(e)?;
        let mut fx = vec![x];
        fx.extend([y.inverse(), x].repeat(n));
        let mut fy = vec![y];
        fy.extend([x.inverse(), y].repeat(n));
        return Ok(Endomorphism {
            map: GeneratorMap {
                images: vec![(x, MixedWord::new(fx)), (y, MixedWord::new(fy))],
            },
            fixed: FixedSide::States,
            construction: "binary alphabet",
            exponent: n,
        });
    }
    let comps = connected_components(a);
    if comps.iter().all(|c| c.len() == 2) {
        let mut images = Vec::new();
        let mut exponent = 1;
        for c in &comps {
            let (s, t) = (c[0], c[1]);
            let p = [t.inverse(), s];
            let q = [s.inverse(), t];
            let n = (1..=10_000)
                .find(|&n| {
                    e.letters().iter().all(|&z| {
                        e.act_section_syms(&p.repeat(n), &[z]).0 == [z]
                            && e.act_section_syms(&q.repeat(n), &[z]).0 == [z]
                    })
                })
                .ok_or_else(|| Error::NotApplicable("component exponent exceeds 10000".into()))?;
            exponent = lcm(exponent, n);
            let mut fs = vec![s];
            fs.extend(p.repeat(n));
            let mut ft = vec![t];
            ft.extend(q.repeat(n));
            images.push((s, MixedWord::new(fs)));
            images.push((t, MixedWord::new(ft)));
        }
        return Ok(Endomorphism {
            map: GeneratorMap { images },
            fixed: FixedSide::Letters,
            construction: "two-state components",
            exponent,
        });
    }
    Err(Error::NotApplicable(
        "alphabet is not binary, components are not two-state, automaton is not signed".into(),
    ))
}

/// Result of [`verify_morphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismCheck {
    pub relators_checked: usize,
    /// First relator whose image is nontrivial.
    pub failing_relator: Option<MixedWord>,
}

impl MorphismCheck {
    pub fn ok(&self) -> bool {
        self.failing_relator.is_none()
    }
}

/// Checks that every defining relator maps to the identity.
pub fn verify_morphism(e: &Engine, map: &GeneratorMap) -> MorphismCheck {
    let p = presentation(e.automaton());
    let mut checked = 0;
    for r in &p.relators {
        checked += 1;
        if !pi1_is_trivial(e, &map.apply(r)) {
            return MorphismCheck {
                relators_checked: checked,
                failing_relator: Some(r.clone()),
            };
        }
    }
    MorphismCheck {
        relators_checked: checked,
        failing_relator: None,
    }
}

/// Sampled evidence that the fixed subgroup is the fixed side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedEvidence {
    pub generators_fixed: bool,
    pub samples: usize,
    /// Words on the moving side whose image is strictly longer.
    pub lengthened: usize,
    /// Mixed words with a nonempty moving part whose image differs.
    pub moved: usize,
}

impl FixedEvidence {
    pub fn ok(&self) -> bool {
        self.generators_fixed && self.lengthened == self.samples && self.moved == self.samples
    }
}

pub fn fixed_set_evidence(e: &Engine, endo: &Endomorphism, samples: usize, seed: u64) -> FixedEvidence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (fixed_syms, moving_syms): (&[Sym], &[Sym]) = match endo.fixed {
        FixedSide::States => (e.states(), e.letters()),
        FixedSide::Letters => (e.letters(), e.states()),
    };
    let generators_fixed = fixed_syms
        .iter()
        .all(|&s| pi1_is_trivial(e, &endo.map.apply(&MixedWord::new([s])).concat(&MixedWord::new([s.inverse()]))));
    let mut lengthened = 0;
    for _ in 0..samples {
        let len = rand::Rng::gen_range(&mut rng, 1..=10);
        let w = MixedWord::new(random_reduced(&mut rng, moving_syms, len));
        if endo.map.apply(&w).len() > w.len() {
            lengthened += 1;
        }
    }
    let moving_part = |nf: &crate::pi1::NormalForm| match endo.fixed {
        FixedSide::States => nf.letters.len(),
        FixedSide::Letters => nf.states.len(),
    };
    let all: Vec<Sym> = e.states().iter().chain(e.letters()).copied().collect();
    let mut moved = 0;
    let mut drawn = 0;
    while drawn < samples {
        let len = rand::Rng::gen_range(&mut rng, 1..=20);
        let w = MixedWord::new(random_reduced(&mut rng, &all, len));
        let nf = normal_form(e, &w, Orientation::Left);
        if moving_part(&nf) == 0 {
            continue;
        }
        drawn += 1;
        if normal_form(e, &endo.map.apply(&w), Orientation::Left) != nf {
            moved += 1;
        }
    }
    FixedEvidence {
        generators_fixed,
        samples,
        lengthened,
        moved,
    }
}

/// An assignment of equal-length state words to states which is an
/// isomorphism onto a subautomaton of the word automaton, with letters fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub images: Vec<(Sym, Word)>,
}

impl Embedding {
    pub fn endomorphism(&self) -> GeneratorMap {
        GeneratorMap {
            images: self.images.iter().map(|(s, w)| (*s, w.to_mixed())).collect(),
        }
    }
}

/// First non-identity embedding with image length `<= depth`, searched by
/// length and then lexicographically on the image of the first state; the
/// remaining images are forced along arrows.
pub fn subautomaton_embedding(e: &Engine, depth: usize) -> Option<Embedding> {
    let a = e.automaton();
    let ns = a.num_states();
    for len in 1..=depth {
        for w0 in reduced_words(e.states(), len) {
            let mut images: Vec<Option<Vec<Sym>>> = vec![None; ns];
            images[0] = Some(w0);
            let mut stack = vec![0usize];
            let mut ok = true;
            'prop: while let Some(s) = stack.pop() {
                let ws = images[s].clone().unwrap();
                for x in 0..a.num_letters() {
                    let (y, t) = a.transition(s, x);
                    let (out, sec) = e.act_section_syms(&ws, &[a.letters()[x]]);
                    if out != [a.letters()[y]] || sec.len() != len {
                        ok = false;
                        break 'prop;
                    }
                    match &images[t] {
                        Some(wt) if *wt != sec => {
                            ok = false;
                            break 'prop;
                        }
                        Some(_) => {}
                        None => {
                            images[t] = Some(sec);
                            stack.push(t);
                        }
                    }
                }
            }
            if !ok || images.iter().any(|i| i.is_none()) {
                continue;
            }
            let images: Vec<Vec<Sym>> = images.into_iter().map(|i| i.unwrap()).collect();
            let distinct: HashSet<&Vec<Sym>> = images.iter().collect();
            let identity = images.iter().enumerate().all(|(i, w)| *w == [a.states()[i]]);
            if distinct.len() != ns || identity {
                continue;
            }
            return Some(Embedding {
                images: a
                    .states()
                    .iter()
                    .zip(images)
                    .map(|(&s, w)| (s, Word::new(Kind::State, w).expect("state word")))
                    .collect(),
            });
        }
    }
    None
}

/// Pairs `(x, y)`, `x != y`, with `g^m(u x) = u y` for some `g` and `u`,
/// found within the bounds, each with its first witness `(g, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmSet {
    pub m: usize,
    pub max_g_len: usize,
    pub max_u_len: usize,
    pub pairs: BTreeMap<(Sym, Sym), (Word, Word)>,
}

impl PmSet {
    /// Re-checks every stored witness.
    pub fn verify(&self, e: &Engine) -> bool {
        self.pairs.iter().all(|(&(x, y), (g, u))| {
            let h = g.pow(self.m as i64);
            let mut ux = u.syms().to_vec();
            ux.push(x);
            let mut uy = u.syms().to_vec();
            uy.push(y);
            e.act_section_syms(h.syms(), &ux).0 == uy
        })
    }
}

/// Walks, for each `g`, the tree of letter words fixed by `h = g^m`,
/// merging equal sections, and records where a section moves a letter.
pub fn compute_pm(e: &Engine, m: usize, max_g_len: usize, max_u_len: usize) -> PmSet {
    let mut gs: Vec<Vec<Sym>> = Vec::new();
    for len in 1..=max_g_len {
        gs.extend(reduced_words(e.states(), len));
    }
    let letters = e.letters();
    let found = par::map(&gs, |g| {
        let h = g.repeat(m);
        let mut local: BTreeMap<(Sym, Sym), Vec<Sym>> = BTreeMap::new();
        let mut seen: HashSet<Vec<Sym>> = HashSet::new();
        let (_, h0) = e.act_section_syms(&h, &[]);
        if h0.is_empty() {
            return local;
        }
        seen.insert(h0.clone());
        let mut frontier: Vec<(Vec<Sym>, Vec<Sym>)> = vec![(h0, Vec::new())];
        for depth in 0..=max_u_len {
            let mut next = Vec::new();
            for (k, u) in &frontier {
                for &z in letters {
                    let (out, sec) = e.act_section_syms(k, &[z]);
                    if out[0] != z {
                        local.entry((z, out[0])).or_insert_with(|| u.clone());
                    } else if depth < max_u_len && !sec.is_empty() && seen.insert(sec.clone()) {
                        let mut u2 = u.clone();
                        u2.push(z);
                        next.push((sec, u2));
                    }
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        local
    });
    let mut pairs = BTreeMap::new();
    for (g, local) in gs.iter().zip(found) {
        for (pair, u) in local {
            pairs.entry(pair).or_insert_with(|| {
                (
                    Word::new(Kind::State, g.clone()).expect("state word"),
                    Word::new(Kind::Letter, u).expect("letter word"),
                )
            });
        }
    }
    PmSet {
        m,
        max_g_len,
        max_u_len,
        pairs,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infiniteness {
    Certified(ReplicationCert),
    /// Infinite by a known description of the group.
    Cited(String),
    Finite(usize),
    Unknown(usize),
}

/// Known infinite groups among the bundled automata, matched up to
/// isomorphism.
fn citation(a: &Automaton) -> Option<String> {
    let known = [
        ("aleshin", "free group of rank three"),
        ("bellaterra", "free product of three groups of order 2"),
        ("delta_d", "free product of two groups of order 3"),
        ("lamplighter", "lamplighter group"),
    ];
    known.iter().find_map(|(name, what)| {
        let b = corpus::automaton(name).ok()?;
        find_isomorphism(a, &b, false).map(|_| format!("{what} ({name})"))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NrfVerdict {
    NonResiduallyFinite,
    Inconclusive(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NrfReport {
    pub automaton: String,
    pub infiniteness: Infiniteness,
    pub endomorphism: Option<Endomorphism>,
    pub morphism: Option<MorphismCheck>,
    pub evidence: Option<FixedEvidence>,
    /// Disjunctive set: at least one of these lies in every finite-index
    /// subgroup.
    pub witnesses: Vec<MixedWord>,
    pub witnesses_nontrivial: bool,
    pub chain: Vec<&'static str>,
    pub verdict: NrfVerdict,
}

pub const FINITE_GROUP_REASON: &str =
    "FiniteGroup: the automaton group is finite, so the fundamental group is virtually a direct product of two free groups";

pub fn nrf_report(e: &Engine, caps: Caps, seed: u64) -> NrfReport {
    let a = e.automaton();
    let infiniteness = match e.group_order(caps) {
        Verdict::InfiniteCertified { cert } => Infiniteness::Certified(cert),
        Verdict::Finite { order, .. } => Infiniteness::Finite(order),
        Verdict::LowerBound {
            distinct_elements_found,
        } => match citation(a) {
            Some(c) => Infiniteness::Cited(c),
            None => Infiniteness::Unknown(distinct_elements_found),
        },
    };
    let mut report = NrfReport {
        automaton: a.name().to_string(),
        infiniteness: infiniteness.clone(),
        endomorphism: None,
        morphism: None,
        evidence: None,
        witnesses: Vec::new(),
        witnesses_nontrivial: false,
        chain: vec![
            "an injective endomorphism with fixed subgroup H makes the group H-separable if residually finite",
            "an infinite automaton group makes the complex group neither <S>- nor <X>-separable",
        ],
        verdict: NrfVerdict::Inconclusive(String::new()),
    };
    match infiniteness {
        Infiniteness::Finite(_) => {
            report.verdict = NrfVerdict::Inconclusive(FINITE_GROUP_REASON.into());
            return report;
        }
        Infiniteness::Unknown(n) => {
            report.verdict = NrfVerdict::Inconclusive(format!(
                "UnknownInfiniteness: no certificate, {n} distinct elements found"
            ));
            return report;
        }
        _ => {}
    }
    let endo = match build_endomorphism(e) {
        Ok(x) => x,
        Err(err) => {
            report.verdict = NrfVerdict::Inconclusive(format!("NoEndomorphism: {err}"));
            return report;
        }
    };
    let check = verify_morphism(e, &endo.map);
    let evidence = fixed_set_evidence(e, &endo, 1000, seed);
    report.witnesses = match endo.construction {
        "binary alphabet" => {
            let (x, y) = binary_letters(e).expect("binary");
            vec![power_word(&[x.inverse(), y], 2 * endo.exponent)]
        }
        "power map on states" => e
            .generators()
            .into_iter()
            .map(|s| power_word(&[s], 2 * endo.exponent))
            .collect(),
        _ => {
            let c = &connected_components(a)[0];
            vec![power_word(&[c[0].inverse(), c[1]], 2 * endo.exponent)]
        }
    };
    report.witnesses_nontrivial = report.witnesses.iter().all(|w| !pi1_is_trivial(e, w));
    let reason = if !check.ok() {
        Some("MorphismFailed: a relator image is nontrivial".to_string())
    } else if !evidence.ok() {
        Some("FixedSetEvidence: sampled words were not moved".to_string())
    } else if !report.witnesses_nontrivial {
        Some("TrivialWitness".to_string())
    } else {
        None
    };
    report.verdict = match reason {
        Some(r) => NrfVerdict::Inconclusive(r),
        None => NrfVerdict::NonResiduallyFinite,
    };
    report.endomorphism = Some(endo);
    report.morphism = Some(check);
    report.evidence = Some(evidence);
    report
}

impl NrfReport {
    /// All premises present and verified.
    pub fn premises_hold(&self) -> bool {
        matches!(self.infiniteness, Infiniteness::Certified(_) | Infiniteness::Cited(_))
            && self.morphism.as_ref().is_some_and(|m| m.ok())
            && self.evidence.as_ref().is_some_and(|e| e.ok())
            && self.witnesses_nontrivial
    }

    pub fn to_record(&self, a: &Automaton) -> Record {
        let names = a.names();
        let mut r = Record::new();
        r.push("automaton", &self.automaton);
        r.push(
            "infiniteness",
            match &self.infiniteness {
                Infiniteness::Certified(c) => format!("certified (replication k={} m={})", c.k, c.m),
                Infiniteness::Cited(c) => format!("cited ({c})"),
                Infiniteness::Finite(n) => format!("finite ({n})"),
                Infiniteness::Unknown(n) => format!("unknown (at least {n} elements)"),
            },
        );
        if let Some(endo) = &self.endomorphism {
            let p = presentation(a);
            let desc: Vec<String> = endo
                .map
                .describe(names, &p)
                .into_iter()
                .map(|(g, w)| format!("{g} -> {w}"))
                .collect();
            r.push("endomorphism", desc.join("; "));
            r.push("construction", endo.construction);
        }
        if let Some(m) = &self.morphism {
            r.push(
                "morphism",
                match &m.failing_relator {
                    None => format!("verified ({} relators)", m.relators_checked),
                    Some(rel) => format!("fails on {}", names.fmt_mixed(rel)),
                },
            );
        }
        if let Some(ev) = &self.evidence {
            r.push(
                "fixed_set",
                format!(
                    "generators_fixed={} lengthened={}/{} moved={}/{}",
                    ev.generators_fixed, ev.lengthened, ev.samples, ev.moved, ev.samples
                ),
            );
        }
        if !self.witnesses.is_empty() {
            let ws: Vec<String> = self.witnesses.iter().map(|w| names.fmt_mixed(w)).collect();
            r.push("witness", ws.join(" | "));
            r.push("witness_nontrivial", self.witnesses_nontrivial.to_string());
        }
        r.push(
            "verdict",
            match &self.verdict {
                NrfVerdict::NonResiduallyFinite => "NonResiduallyFinite".to_string(),
                NrfVerdict::Inconclusive(why) => format!("Inconclusive ({why})"),
            },
        );
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::dual;

    fn engine(a: &Automaton) -> Engine {
        Engine::new(a).unwrap()
    }

    #[test]
    fn partitions() {
        let a = corpus::aleshin();
        let p = stabilizer_partition(&engine(&a)).unwrap();
        assert_eq!(p.plus, vec![a.states()[0]]);
        let b = corpus::bellaterra();
        let p = stabilizer_partition(&engine(&b)).unwrap();
        assert_eq!(p.plus, b.states()[1..].to_vec());
        let id = corpus::identity(&["0", "1"]);
        assert_eq!(stabilizer_partition(&engine(&id)).unwrap().plus.len(), 1);
        assert_eq!(
            stabilizer_partition(&engine(&corpus::lamplighter())),
            Err(Error::NotBinary)
        );
    }

    #[test]
    fn exponents() {
        assert_eq!(dual_exponent(&engine(&corpus::aleshin())).unwrap(), 2);
        assert_eq!(dual_exponent(&engine(&corpus::identity(&["0", "1"]))).unwrap(), 1);
        // Brute force: iterate the dual permutation until both return.
        let b = corpus::bellaterra();
        let e = engine(&b);
        let (x, y) = (b.letters()[0], b.letters()[1]);
        let perm = |word: [Sym; 2]| -> Vec<Sym> {
            e.states().iter().map(|&s| e.act_section_syms(&[s], &word).1[0]).collect()
        };
        let (p, q) = (perm([y.inverse(), x]), perm([x.inverse(), y]));
        let order = |p: &[Sym]| {
            let mut cur: Vec<Sym> = e.states().to_vec();
            (1..).find(|_| {
                cur = cur.iter().map(|s| p[e.states().iter().position(|t| t == s).unwrap()]).collect();
                cur == e.states()
            }).unwrap()
        };
        assert_eq!(dual_exponent(&e).unwrap(), lcm(order(&p), order(&q)));
    }

    #[test]
    fn aleshin_endomorphism() {
        let a = corpus::aleshin();
        let e = engine(&a);
        let endo = build_endomorphism(&e).unwrap();
        let zero = a.names().resolve("0").unwrap();
        assert_eq!(a.names().fmt_mixed(&endo.map.image(zero)), "0 1^-1 0 1^-1 0");
        assert!(verify_morphism(&e, &endo.map).ok());
        let bad = GeneratorMap::parse(a.names(), "0 -> 0 1").unwrap();
        let check = verify_morphism(&e, &bad);
        assert!(check.failing_relator.is_some());
    }

    #[test]
    fn delta_d_power_map_and_gamma() {
        let d = corpus::delta_d();
        let e = engine(&d);
        let endo = build_endomorphism(&e).unwrap();
        let a = d.names().resolve("a").unwrap();
        assert_eq!(endo.map.image(a), d.names().parse_mixed("a^4").unwrap());
        assert!(verify_morphism(&e, &endo.map).ok());
        let gamma = GeneratorMap::parse(d.names(), "a -> b; b -> a; x -> x^-1; y -> y^-1").unwrap();
        assert!(verify_morphism(&e, &gamma).ok());
        let twice = gamma.compose(&gamma);
        assert!(twice.images.iter().all(|(g, w)| *w == MixedWord::new([*g])));
    }

    #[test]
    fn embeddings() {
        let b = corpus::bellaterra();
        let emb = subautomaton_embedding(&engine(&b), 1).unwrap();
        let desc: Vec<String> = emb.images.iter().map(|(s, w)| format!("{}->{}", b.sym_name(*s), b.names().fmt_word(w))).collect();
        assert_eq!(desc, ["a->a^-1", "b->b^-1", "c->c^-1"]);
        assert!(verify_morphism(&engine(&b), &emb.endomorphism()).ok());
        // The only candidate for the identity automaton is e -> e^-1.
        let id = corpus::identity(&["0", "1"]);
        let emb = subautomaton_embedding(&engine(&id), 2).unwrap();
        assert_eq!(id.names().fmt_word(&emb.images[0].1), "e^-1");
    }

    #[test]
    fn pm_sets() {
        let d = dual(&corpus::delta_d());
        let e = engine(&d);
        // Odd powers need not stabilize the first level, so P_1 holds pairs
        // such as (a, b) from a single generator.
        let p1 = compute_pm(&e, 1, 2, 2);
        assert!(p1.pairs.keys().any(|(x, y)| x.base() != y.base()));
        let pm = compute_pm(&e, 2, 4, 4);
        assert!(!pm.pairs.is_empty());
        assert!(pm.verify(&e));
        for &(x, y) in pm.pairs.keys() {
            assert_eq!(x.base(), y.base());
            assert_ne!(x, y);
        }
        let id = corpus::identity(&["0", "1"]);
        assert!(compute_pm(&engine(&id), 3, 3, 3).pairs.is_empty());
        let a = corpus::aleshin();
        assert!(!compute_pm(&engine(&a), 1, 4, 4).pairs.is_empty());
    }

    #[test]
    fn identity_report_is_inconclusive() {
        let id = corpus::identity(&["0", "1"]);
        let r = nrf_report(&engine(&id), Caps::default(), 0);
        assert_eq!(r.verdict, NrfVerdict::Inconclusive(FINITE_GROUP_REASON.into()));
    }
}
