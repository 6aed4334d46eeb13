//! The action of state words on letter words through the `A±` closure:
//! sections, the word problem, orbits and finiteness probing.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::ops::pm_closure;
use crate::par;
use crate::word::{push_reduced, reduced_words, Kind, Sym, Word};

const NONE: u32 = u32::MAX;

/// Transition tables of `A±` indexed by symbol codes, for fast action.
#[derive(Debug, Clone)]
pub struct Engine {
    base: Automaton,
    pm: Automaton,
    nlc: usize,
    /// `(state code, letter code) -> (output code, next state code)`.
    fwd: Vec<(u32, u32)>,
    /// `(next state code, output code) -> (state code, input code)`.
    rev: Vec<(u32, u32)>,
}

/// Result of an order computation bounded by a cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Exact(usize),
    AtLeast(usize),
}

/// Limits for [`Engine::group_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_elements: usize,
    pub max_len: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            max_elements: 100_000,
            max_len: 24,
        }
    }
}

/// Search bounds for [`Engine::replication_certificate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertBounds {
    pub max_k: u32,
    pub max_m: u32,
    /// Longest base word tried for the pumping witness.
    pub max_word_len: usize,
    /// Largest orbit computed while looking for the witness.
    pub orbit_cap: usize,
}

impl Default for CertBounds {
    fn default() -> CertBounds {
        CertBounds {
            max_k: 4,
            max_m: 4,
            max_word_len: 4,
            orbit_cap: 100_000,
        }
    }
}

/// A scale embedding `x -> x^(+-k)`, `s -> s^(+-m)` of `A±` into its power
/// extension, together with a state `g` and word `v` whose `<g>`-orbit has
/// size `r` with `gcd(r, m) > 1`.
///
/// If `g` had finite order `N`, the embedding would give `τ(g)` order `N`
/// as well, forcing `gcd(N, m) = 1`; but `r` divides `N`. So `g` has
/// infinite order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplicationCert {
    pub k: u32,
    pub m: u32,
    /// Image of every positive letter.
    pub sigma: Vec<(Sym, Word)>,
    /// Image of every positive state.
    pub tau: Vec<(Sym, Word)>,
    pub pumped_state: Sym,
    pub base_word: Word,
    pub orbit_size: usize,
}

/// Outcome of [`Engine::group_order`]. `LowerBound` makes no claim about
/// infiniteness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Finite { order: usize, elements: Vec<Word> },
    InfiniteCertified { cert: ReplicationCert },
    LowerBound { distinct_elements_found: usize },
}

impl Verdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, Verdict::Finite { .. })
    }

    pub fn summary(&self) -> String {
        match self {
            Verdict::Finite { order, .. } => format!("Finite({order})"),
            Verdict::InfiniteCertified { .. } => "InfiniteCertified".into(),
            Verdict::LowerBound {
                distinct_elements_found,
            } => format!("LowerBound({distinct_elements_found})"),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Engine {
    /// Builds the engine on `pm_closure(a)`.
    pub fn new(a: &Automaton) -> Result<Engine> {
        let pm = pm_closure(a)?;
        let nsc = 2 * pm.names().states.len();
        let nlc = 2 * pm.names().letters.len();
        let mut fwd = vec![(NONE, NONE); nsc * nlc];
        let mut rev = vec![(NONE, NONE); nsc * nlc];
        for r in pm.arrows() {
            fwd[r.from.code() as usize * nlc + r.input.code() as usize] = (r.output.code(), r.to.code());
            rev[r.to.code() as usize * nlc + r.output.code() as usize] = (r.from.code(), r.input.code());
        }
        Ok(Engine {
            base: a.clone(),
            pm,
            nlc,
            fwd,
            rev,
        })
    }

    /// The automaton the engine was built from.
    pub fn automaton(&self) -> &Automaton {
        &self.base
    }

    pub fn closure(&self) -> &Automaton {
        &self.pm
    }

    /// States of `A±`, in closure order.
    pub fn states(&self) -> &[Sym] {
        self.pm.states()
    }

    /// Letters of `A±`, in closure order.
    pub fn letters(&self) -> &[Sym] {
        self.pm.letters()
    }

    /// Positive generators of the group: the distinct positive states.
    pub fn generators(&self) -> Vec<Sym> {
        let mut out: Vec<Sym> = Vec::new();
        for s in self.pm.states() {
            let p = s.positive();
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    pub fn positive_letters(&self) -> Vec<Sym> {
        let mut out: Vec<Sym> = Vec::new();
        for x in self.pm.letters() {
            let p = x.positive();
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    #[inline]
    pub fn step(&self, s: Sym, x: Sym) -> (Sym, Sym) {
        let (y, t) = self.fwd[s.code() as usize * self.nlc + x.code() as usize];
        (Sym::from_code(Kind::Letter, y), Sym::from_code(Kind::State, t))
    }

    /// The unique `(s, x)` with `s --x|y--> t`.
    #[inline]
    pub fn step_back(&self, t: Sym, y: Sym) -> (Sym, Sym) {
        let (s, x) = self.rev[t.code() as usize * self.nlc + y.code() as usize];
        (Sym::from_code(Kind::State, s), Sym::from_code(Kind::Letter, x))
    }

    /// Runs letter `z` through the state word `g` (last symbol first),
    /// updating `g` in place to its section. Returns the output letter.
    #[inline]
    pub fn push_letter(&self, g: &mut [Sym], mut z: Sym) -> Sym {
        for s in g.iter_mut().rev() {
            let (y, t) = self.step(*s, z);
            z = y;
            *s = t;
        }
        z
    }

    /// `(g(v), g|_v)` on raw symbol slices; the section is reduced.
    pub fn act_section_syms(&self, g: &[Sym], v: &[Sym]) -> (Vec<Sym>, Vec<Sym>) {
        let mut cur = g.to_vec();
        let out: Vec<Sym> = v.iter().map(|&z| self.push_letter(&mut cur, z)).collect();
        let mut sec = Vec::with_capacity(cur.len());
        for s in cur {
            push_reduced(&mut sec, s);
        }
        (out, sec)
    }

    pub fn act(&self, g: &Word, v: &Word) -> Word {
        let (out, _) = self.act_section_syms(g.syms(), v.syms());
        Word::new(Kind::Letter, out).expect("letter word")
    }

    pub fn section(&self, g: &Word, v: &Word) -> Word {
        let (_, sec) = self.act_section_syms(g.syms(), v.syms());
        Word::new(Kind::State, sec).expect("state word")
    }

    /// Dual action: `v` acting on the right of `g`, i.e. the section.
    pub fn act_section(&self, g: &Word, v: &Word) -> (Word, Word) {
        let (out, sec) = self.act_section_syms(g.syms(), v.syms());
        (
            Word::new(Kind::Letter, out).expect("letter word"),
            Word::new(Kind::State, sec).expect("state word"),
        )
    }

    /// Word problem in the group: depth-first search over sections by
    /// single letters. Sections of bireversible automata never grow, so the
    /// visited set is finite.
    pub fn is_trivial(&self, g: &Word) -> bool {
        self.is_trivial_syms(g.syms())
    }

    pub fn is_trivial_syms(&self, g: &[Sym]) -> bool {
        let mut start = Vec::with_capacity(g.len());
        for &s in g {
            push_reduced(&mut start, s);
        }
        if start.is_empty() {
            return true;
        }
        let letters = self.pm.letters();
        let mut seen: HashSet<Vec<Sym>> = HashSet::new();
        let mut stack = vec![start.clone()];
        seen.insert(start);
        let mut buf = Vec::new();
        while let Some(h) = stack.pop() {
            for &z in letters {
                buf.clear();
                buf.extend_from_slice(&h);
                if self.push_letter(&mut buf, z) != z {
                    return false;
                }
                let mut sec = Vec::with_capacity(buf.len());
                for &s in &buf {
                    push_reduced(&mut sec, s);
                }
                if !sec.is_empty() && seen.insert(sec.clone()) {
                    stack.push(sec);
                }
            }
        }
        true
    }

    /// Least `n <= cutoff` with `g^n` trivial.
    pub fn element_order(&self, g: &Word, cutoff: usize) -> Order {
        let mut p = Word::empty(Kind::State);
        for n in 1..=cutoff {
            p = p.concat(g);
            if self.is_trivial(&p) {
                return Order::Exact(n);
            }
        }
        Order::AtLeast(cutoff)
    }

    /// Orbit of `seed` under `gens` and their inverses, in BFS order.
    pub fn orbit(&self, seed: &Word, gens: &[Word], cap: Option<usize>) -> Result<Vec<Word>> {
        let mut all_gens: Vec<&[Sym]> = Vec::new();
        let inverses: Vec<Word> = gens.iter().map(|g| g.inverse()).collect();
        for (g, gi) in gens.iter().zip(&inverses) {
            all_gens.push(g.syms());
            all_gens.push(gi.syms());
        }
        let mut seen: HashSet<Vec<Sym>> = HashSet::new();
        let mut order = vec![seed.syms().to_vec()];
        seen.insert(seed.syms().to_vec());
        let mut i = 0;
        while i < order.len() {
            let v = order[i].clone();
            i += 1;
            for g in &all_gens {
                let (w, _) = self.act_section_syms(g, &v);
                if seen.insert(w.clone()) {
                    if let Some(c) = cap {
                        if order.len() >= c {
                            return Err(Error::OrbitCapExceeded(c));
                        }
                    }
                    order.push(w);
                }
            }
        }
        Ok(order
            .into_iter()
            .map(|w| Word::new(Kind::Letter, w).expect("letter word"))
            .collect())
    }

    /// Size of the orbit of `v` under the cyclic group generated by `g`,
    /// or `None` past `cap`.
    pub fn cyclic_orbit_size(&self, g: &[Sym], v: &[Sym], cap: usize) -> Option<usize> {
        let mut cur = v.to_vec();
        for n in 1..=cap {
            cur = self.act_section_syms(g, &cur).0;
            if cur == v {
                return Some(n);
            }
        }
        None
    }

    /// For each `n <= max_level`, whether the group acts transitively on
    /// reduced letter words of length `n`.
    pub fn is_level_transitive_reduced(&self, max_level: usize, cap: Option<usize>) -> Result<Vec<bool>> {
        let gens: Vec<Word> = self.generators().into_iter().map(Word::single).collect();
        let letters = self.pm.letters();
        let mut out = Vec::with_capacity(max_level + 1);
        for n in 0..=max_level {
            let words = reduced_words(letters, n);
            let seed = Word::new(Kind::Letter, words[0].clone())?;
            let orbit = self.orbit(&seed, &gens, cap)?;
            out.push(orbit.len() == words.len());
        }
        Ok(out)
    }

    /// The permutation of `words` induced by a state word.
    fn permutation(&self, g: &[Sym], words: &[Vec<Sym>], index: &HashMap<Vec<Sym>, usize>) -> Vec<u32> {
        words
            .iter()
            .map(|w| index[&self.act_section_syms(g, w).0] as u32)
            .collect()
    }

    /// Nontrivial orbits, on reduced words of length 2, of the subgroup of
    /// elements fixing every letter. The group is generated as a
    /// permutation group on the 2-letter words; `cap` bounds its size.
    pub fn level_stabilizer_orbits(&self, cap: usize) -> Result<Vec<Vec<Word>>> {
        let letters = self.pm.letters();
        let words = reduced_words(letters, 2);
        let index: HashMap<Vec<Sym>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let gens: Vec<Vec<u32>> = self
            .pm
            .states()
            .iter()
            .map(|&s| self.permutation(&[s], &words, &index))
            .collect();
        let identity: Vec<u32> = (0..words.len() as u32).collect();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        let mut stab: Vec<Vec<u32>> = Vec::new();
        let first_fixed = |p: &[u32]| {
            p.iter()
                .enumerate()
                .all(|(i, &j)| words[i][0] == words[j as usize][0])
        };
        while let Some(p) = queue.pop_front() {
            if first_fixed(&p) {
                stab.push(p.clone());
            }
            for g in &gens {
                let q: Vec<u32> = p.iter().map(|&i| g[i as usize]).collect();
                if seen.insert(q.clone()) {
                    if seen.len() > cap {
                        return Err(Error::OrbitCapExceeded(cap));
                    }
                    queue.push_back(q);
                }
            }
        }
        let mut parent: Vec<usize> = (0..words.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for p in &stab {
            for (i, &j) in p.iter().enumerate() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: Vec<Vec<Word>> = Vec::new();
        let mut rep_of: HashMap<usize, usize> = HashMap::new();
        for (i, w) in words.iter().enumerate() {
            let r = find(&mut parent, i);
            let k = *rep_of.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[k].push(Word::new(Kind::Letter, w.clone())?);
        }
        Ok(classes.into_iter().filter(|c| c.len() > 1).collect())
    }

    /// Searches power-shaped embeddings `x -> x^(+-k)`, `s -> s^(+-m)` in
    /// increasing `(k, m)`, positive signs first, verified on every arrow of
    /// `A±`, and a pumping witness for them.
    pub fn replication_certificate(&self, bounds: CertBounds) -> Option<ReplicationCert> {
        let letters = self.positive_letters();
        let states = self.generators();
        let (nl, ns) = (letters.len(), states.len());
        if nl + ns > 20 {
            return None;
        }
        for k in 1..=bounds.max_k {
            for m in 1..=bounds.max_m {
                if m == 1 {
                    // gcd(r, 1) = 1 never pumps.
                    continue;
                }
                for lsigns in 0u32..(1 << nl) {
                    for ssigns in 0u32..(1 << ns) {
                        let sigma: Vec<(Sym, Word)> = letters
                            .iter()
                            .enumerate()
                            .map(|(i, &x)| (x, Word::single(x).pow(if lsigns >> i & 1 == 1 { -(k as i64) } else { k as i64 })))
                            .collect();
                        let tau: Vec<(Sym, Word)> = states
                            .iter()
                            .enumerate()
                            .map(|(i, &s)| (s, Word::single(s).pow(if ssigns >> i & 1 == 1 { -(m as i64) } else { m as i64 })))
                            .collect();
                        if !self.embedding_holds(&sigma, &tau) {
                            continue;
                        }
                        if let Some((g, v, r)) = self.pumping_witness(m as usize, bounds) {
                            return Some(ReplicationCert {
                                k,
                                m,
                                sigma,
                                tau,
                                pumped_state: g,
                                base_word: v,
                                orbit_size: r,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    fn image(map: &[(Sym, Word)], s: Sym) -> Word {
        let w = &map.iter().find(|(p, _)| *p == s.positive()).expect("mapped symbol").1;
        if s.is_inverse() {
            w.inverse()
        } else {
            w.clone()
        }
    }

    /// `τ(s)` reads `σ(x)`, writes `σ(y)` and moves to `τ(t)` for every
    /// arrow `s --x|y--> t` of `A±`.
    pub fn embedding_holds(&self, sigma: &[(Sym, Word)], tau: &[(Sym, Word)]) -> bool {
        self.pm.arrows().all(|r| {
            let (out, sec) = self.act_section(&Self::image(tau, r.from), &Self::image(sigma, r.input));
            out == Self::image(sigma, r.output) && sec == Self::image(tau, r.to)
        })
    }

    fn pumping_witness(&self, m: usize, bounds: CertBounds) -> Option<(Sym, Word, usize)> {
        for s in self.generators() {
            for len in 1..=bounds.max_word_len {
                for v in reduced_words(self.pm.letters(), len) {
                    if let Some(r) = self.cyclic_orbit_size(&[s], &v, bounds.orbit_cap) {
                        if gcd(r, m) > 1 {
                            return Some((s, Word::new(Kind::Letter, v).ok()?, r));
                        }
                    }
                }
            }
        }
        None
    }

    /// Re-checks a certificate from scratch.
    pub fn verify_certificate(&self, cert: &ReplicationCert) -> bool {
        self.embedding_holds(&cert.sigma, &cert.tau)
            && gcd(cert.orbit_size, cert.m as usize) > 1
            && self.cyclic_orbit_size(&[cert.pumped_state], cert.base_word.syms(), cert.orbit_size)
                == Some(cert.orbit_size)
    }

    /// Test words for fingerprinting group elements: all reduced words of
    /// the largest length with at most 256 of them.
    fn fingerprint_words(&self) -> Vec<Vec<Sym>> {
        let letters = self.pm.letters();
        let mut len = 1;
        while reduced_words(letters, len + 1).len() <= 256 && len < 8 {
            len += 1;
        }
        reduced_words(letters, len)
    }

    /// Finiteness probe: a certificate search first, then a shortlex BFS
    /// over reduced state words, deduplicated by the word problem.
    pub fn group_order(&self, caps: Caps) -> Verdict {
        self.group_order_with(caps, CertBounds::default())
    }

    pub fn group_order_with(&self, caps: Caps, bounds: CertBounds) -> Verdict {
        if let Some(cert) = self.replication_certificate(bounds) {
            return Verdict::InfiniteCertified { cert };
        }
        let probe = self.fingerprint_words();
        let fingerprint = |g: &[Sym]| -> Vec<Sym> {
            let mut out = Vec::new();
            for v in &probe {
                out.extend(self.act_section_syms(g, v).0);
            }
            out
        };
        let gens: Vec<Sym> = self.pm.states().to_vec();
        let mut reps: Vec<Vec<Sym>> = vec![Vec::new()];
        let mut buckets: HashMap<Vec<Sym>, Vec<usize>> = HashMap::new();
        buckets.insert(fingerprint(&[]), vec![0]);
        let mut i = 0;
        while i < reps.len() {
            let u = reps[i].clone();
            i += 1;
            for &s in &gens {
                if u.last() == Some(&s.inverse()) {
                    continue;
                }
                let mut w = u.clone();
                w.push(s);
                if w.len() > caps.max_len {
                    return Verdict::LowerBound {
                        distinct_elements_found: reps.len(),
                    };
                }
                let fp = fingerprint(&w);
                let bucket = buckets.entry(fp).or_default();
                let dup = bucket.iter().any(|&j| {
                    let mut q = w.clone();
                    q.extend(reps[j].iter().rev().map(|s| s.inverse()));
                    self.is_trivial_syms(&q)
                });
                if !dup {
                    bucket.push(reps.len());
                    reps.push(w);
                    if reps.len() > caps.max_elements {
                        return Verdict::LowerBound {
                            distinct_elements_found: reps.len(),
                        };
                    }
                }
            }
        }
        Verdict::Finite {
            order: reps.len(),
            elements: reps
                .into_iter()
                .map(|w| Word::new(Kind::State, w).expect("state word"))
                .collect(),
        }
    }

    /// Brute-force probe: `g` fixes every reduced word of length `<= n`.
    pub fn fixes_words_up_to(&self, g: &Word, n: usize) -> bool {
        (1..=n).all(|len| {
            let words = reduced_words(self.pm.letters(), len);
            par::all(&words, |v| self.act_section_syms(g.syms(), v).0 == *v)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::word::all_words;

    fn w(a: &Automaton, kind: Kind, text: &str) -> Word {
        a.names().parse_word(kind, text).unwrap()
    }

    #[test]
    fn aleshin_single_steps() {
        let a = corpus::aleshin();
        let e = Engine::new(&a).unwrap();
        let (g, v) = (w(&a, Kind::State, "a"), w(&a, Kind::Letter, "0"));
        assert_eq!(e.act(&g, &v), v);
        assert_eq!(e.section(&g, &v), w(&a, Kind::State, "b"));
        let long = w(&a, Kind::Letter, "0 1 1 0");
        assert_eq!(e.act(&Word::empty(Kind::State), &long), long);
        assert_eq!(e.section(&g, &Word::empty(Kind::Letter)), g);
    }

    #[test]
    fn delta_s_fourth_power() {
        let a = corpus::delta_s();
        let e = Engine::new(&a).unwrap();
        let x = w(&a, Kind::Letter, "x");
        assert_eq!(e.act(&w(&a, Kind::State, "a"), &x), w(&a, Kind::Letter, "x^-1"));
        assert_eq!(e.act(&w(&a, Kind::State, "a^4"), &x), x);
        let xx = w(&a, Kind::Letter, "x^2");
        assert_ne!(e.act(&w(&a, Kind::State, "a^4"), &xx), xx);
    }

    #[test]
    fn word_problem_examples() {
        let b = corpus::bellaterra();
        let e = Engine::new(&b).unwrap();
        assert!(e.is_trivial(&w(&b, Kind::State, "a^2")));
        assert!(!e.is_trivial(&w(&b, Kind::State, "a b")));
        assert!(e.is_trivial(&Word::empty(Kind::State)));
        let d = corpus::delta_d();
        let e = Engine::new(&d).unwrap();
        assert!(e.is_trivial(&w(&d, Kind::State, "a^3")));
        assert!(!e.is_trivial(&w(&d, Kind::State, "a")));
    }

    #[test]
    fn word_problem_agrees_with_bounded_brute_force() {
        for a in [corpus::aleshin(), corpus::bellaterra()] {
            let e = Engine::new(&a).unwrap();
            for len in 1..=4 {
                for g in reduced_words(e.states(), len) {
                    let g = Word::new(Kind::State, g).unwrap();
                    assert_eq!(e.is_trivial(&g), e.fixes_words_up_to(&g, len + 2), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn orders() {
        let b = corpus::bellaterra();
        assert_eq!(Engine::new(&b).unwrap().element_order(&w(&b, Kind::State, "a"), 10), Order::Exact(2));
        let d = corpus::delta_d();
        assert_eq!(Engine::new(&d).unwrap().element_order(&w(&d, Kind::State, "a"), 10), Order::Exact(3));
        let s = corpus::delta_s();
        assert_eq!(Engine::new(&s).unwrap().element_order(&w(&s, Kind::State, "a"), 64), Order::AtLeast(64));
    }

    #[test]
    fn orbit_examples() {
        let s = corpus::delta_s();
        let e = Engine::new(&s).unwrap();
        let seed = w(&s, Kind::Letter, "x^2");
        assert_eq!(e.orbit(&seed, &[], None).unwrap(), vec![seed.clone()]);
        assert!(e.orbit(&seed, &[w(&s, Kind::State, "a")], None).unwrap().len() > 4);
        assert!(matches!(
            e.orbit(&seed, &[w(&s, Kind::State, "a")], Some(2)),
            Err(Error::OrbitCapExceeded(2))
        ));
    }

    #[test]
    fn identity_and_small_groups() {
        let id = corpus::identity(&["0", "1"]);
        let e = Engine::new(&id).unwrap();
        match e.group_order(Caps::default()) {
            Verdict::Finite { order, .. } => assert_eq!(order, 1),
            v => panic!("{v:?}"),
        }
        assert!(e.replication_certificate(CertBounds::default()).is_none());
        let b = corpus::bellaterra();
        assert!(!Engine::new(&b).unwrap().group_order(Caps { max_elements: 500, max_len: 10 }).is_finite());
    }

    #[test]
    fn delta_s_certificate() {
        let s = corpus::delta_s();
        let e = Engine::new(&s).unwrap();
        let cert = e.replication_certificate(CertBounds::default()).unwrap();
        assert_eq!((cert.k, cert.m), (3, 3));
        assert!(e.verify_certificate(&cert));
        for (x, img) in &cert.sigma {
            assert_eq!(*img, Word::single(*x).pow(3));
        }
        for (st, img) in &cert.tau {
            assert_eq!(*img, Word::single(*st).pow(-3));
        }
    }

    #[test]
    fn delta_d_has_no_small_certificate() {
        let d = corpus::delta_d();
        assert!(Engine::new(&d).unwrap().replication_certificate(CertBounds::default()).is_none());
    }

    #[test]
    fn action_laws_on_all_short_words() {
        let a = corpus::aleshin();
        let e = Engine::new(&a).unwrap();
        let gs = reduced_words(e.states(), 2);
        let vs = all_words(e.letters(), 3);
        for g in &gs {
            for h in &gs {
                let gh: Vec<Sym> = g.iter().chain(h).copied().collect();
                for v in &vs {
                    let lhs = e.act_section_syms(&gh, v).0;
                    let rhs = e.act_section_syms(g, &e.act_section_syms(h, v).0).0;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
