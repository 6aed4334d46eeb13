//! Todd-Coxeter coset enumeration (HLT strategy, no lookahead).

use std::fmt::Write as _;

use crate::action::Order;
use crate::error::{Error, Result};
use crate::pi1;
use crate::word::{parse_word_tokens, Kind, Sym};

const NONE: u32 = u32::MAX;

/// A finite presentation over named generators. Words are lists of column
/// indices: generator `i` is column `2i`, its inverse `2i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<usize>>,
    pub subgroup: Vec<Vec<usize>>,
}

#[inline]
fn inv(col: usize) -> usize {
    col ^ 1
}

impl GroupPresentation {
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let gens = &self.generators;
        let syms = parse_word_tokens(text, &mut |ident: &str| {
            gens.iter()
                .position(|g| g == ident)
                .map(|i| Sym::new(Kind::State, i as u32, false))
                .ok_or_else(|| Error::UnknownSymbol(ident.to_string()))
        })?;
        let mut out: Vec<usize> = Vec::with_capacity(syms.len());
        for s in syms {
            let c = s.code() as usize;
            if out.last() == Some(&inv(c)) {
                out.pop();
            } else {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Reads `generators:`, then `relators:` and optional `subgroup:`
    /// sections with one word per line.
    pub fn parse(text: &str) -> Result<GroupPresentation> {
        let mut p = GroupPresentation {
            generators: Vec::new(),
            relators: Vec::new(),
            subgroup: Vec::new(),
        };
        let mut section = "";
        let mut seen_generators = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: Error| match e {
                Error::Syntax { msg, .. } => Error::Syntax { line: i + 1, msg },
                other => other,
            };
            if let Some(rest) = line.strip_prefix("generators:") {
                p.generators = rest.split_whitespace().map(String::from).collect();
                seen_generators = true;
                section = "";
            } else if line == "relators:" || line == "subgroup:" {
                section = if line == "relators:" { "r" } else { "s" };
            } else if !seen_generators || section.is_empty() {
                return Err(Error::Syntax {
                    line: i + 1,
                    msg: "expected `generators:`, `relators:` or `subgroup:`".into(),
                });
            } else {
                let w = p.parse_word(line).map_err(at)?;
                if section == "r" {
                    p.relators.push(w);
                } else {
                    p.subgroup.push(w);
                }
            }
        }
        if !seen_generators {
            return Err(Error::Syntax {
                line: 0,
                msg: "missing `generators:`".into(),
            });
        }
        Ok(p)
    }

    pub fn from_pi1(p: &pi1::Presentation) -> GroupPresentation {
        let index = |s: Sym| {
            let pos = p.generators.iter().position(|&g| g == s.positive()).expect("generator");
            2 * pos + s.is_inverse() as usize
        };
        GroupPresentation {
            generators: p.generator_names(),
            relators: p
                .relators
                .iter()
                .map(|r| r.syms().iter().map(|&s| index(s)).collect())
                .collect(),
            subgroup: Vec::new(),
        }
    }

    pub fn fmt_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "e".into();
        }
        w.iter()
            .map(|&c| {
                let g = &self.generators[c / 2];
                if c % 2 == 1 {
                    format!("{g}^-1")
                } else {
                    g.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\nrelators:\n", self.generators.join(" "));
        for r in &self.relators {
            let _ = writeln!(out, "{}", self.fmt_word(r));
        }
        if !self.subgroup.is_empty() {
            out.push_str("subgroup:\n");
            for w in &self.subgroup {
                let _ = writeln!(out, "{}", self.fmt_word(w));
            }
        }
        out
    }

    pub fn with_relators(&self, extra: &[Vec<usize>]) -> GroupPresentation {
        let mut p = self.clone();
        p.relators.extend(extra.iter().cloned());
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Closed,
    Capped,
}

/// Coset table; row 0 is the subgroup. For a capped table the rows are the
/// live cosets at the moment the cap was hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub ncols: usize,
    pub rows: Vec<Vec<u32>>,
    pub status: Status,
    /// Cosets defined over the whole run.
    pub defined: usize,
    /// Largest number of simultaneously live cosets.
    pub max_live: usize,
}

impl CosetTable {
    pub fn index(&self) -> Option<usize> {
        (self.status == Status::Closed).then_some(self.rows.len())
    }

    fn trace(&self, c: u32, w: &[usize]) -> Option<u32> {
        let mut c = c;
        for &x in w {
            c = self.rows[c as usize][x];
            if c == NONE {
                return None;
            }
        }
        Some(c)
    }

    /// Post-hoc check of a closed table: every column a permutation,
    /// inverse columns inverse to each other, every relator a loop at every
    /// coset, every subgroup generator a loop at coset 0.
    pub fn verify(&self, p: &GroupPresentation) -> bool {
        if self.status != Status::Closed {
            return false;
        }
        let n = self.rows.len();
        for x in 0..self.ncols {
            let mut hit = vec![false; n];
            for c in 0..n {
                let d = self.rows[c][x];
                if d == NONE || d as usize >= n || hit[d as usize] || self.rows[d as usize][inv(x)] != c as u32 {
                    return false;
                }
                hit[d as usize] = true;
            }
        }
        let relators_ok = (0..n as u32).all(|c| p.relators.iter().all(|r| self.trace(c, r) == Some(c)));
        relators_ok && p.subgroup.iter().all(|w| self.trace(0, w) == Some(0))
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    deductions: Vec<(u32, usize)>,
    live: usize,
    max_live: usize,
    cap: usize,
    capped: bool,
}

impl Enumerator {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn count(&self) -> usize {
        self.parent.len()
    }

    fn define(&mut self, c: u32, x: usize) -> bool {
        if self.live >= self.cap {
            self.capped = true;
            return false;
        }
        let d = self.count() as u32;
        self.parent.push(d);
        self.live += 1;
        self.max_live = self.max_live.max(self.live);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.set(c, x, d);
        self.set(d, inv(x), c);
        self.deductions.push((c, x));
        true
    }

    fn rep(&mut self, k: u32) -> u32 {
        let mut r = k;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut k = k;
        while self.parent[k as usize] != r {
            let next = self.parent[k as usize];
            self.parent[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, k: u32, l: u32) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (lo, hi) = (k.min(l), k.max(l));
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, inv(x), NONE);
                let (e1, f1) = (self.rep(e), self.rep(f));
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, inv(x));
                    if fx != NONE {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, inv(x), e1);
                        self.deductions.push((e1, x));
                    }
                }
            }
        }
    }

    /// Scans `w` at `c` from both ends, defining cosets to complete it.
    fn scan_and_fill(&mut self, c: u32, w: &[usize]) {
        if w.is_empty() {
            return;
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        let at = |k: isize| w[k as usize];
        loop {
            while i <= j && self.get(f, at(i)) != NONE {
                f = self.get(f, at(i));
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j >= i && self.get(b, inv(at(j))) != NONE {
                b = self.get(b, inv(at(j)));
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return;
            }
            if i == j {
                self.set(f, at(i), b);
                self.set(b, inv(at(i)), f);
                self.deductions.push((f, at(i)));
                return;
            }
            if !self.define(f, at(i)) {
                return;
            }
        }
    }
}

impl Enumerator {
    fn new(ncols: usize, cap: usize) -> Enumerator {
        Enumerator {
            ncols,
            table: vec![NONE; ncols],
            parent: vec![0],
            queue: Vec::new(),
            deductions: Vec::new(),
            live: 1,
            max_live: 1,
            cap: cap.max(1),
            capped: false,
        }
    }

    /// Like `scan_and_fill` but never defines: closes a single gap or
    /// records a coincidence.
    fn scan(&mut self, c: u32, w: &[usize]) {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        let at = |k: isize| w[k as usize];
        while i <= j && self.get(f, at(i)) != NONE {
            f = self.get(f, at(i));
            i += 1;
        }
        if i > j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j >= i && self.get(b, inv(at(j))) != NONE {
            b = self.get(b, inv(at(j)));
            j -= 1;
        }
        if j < i {
            self.coincidence(f, b);
        } else if i == j {
            self.set(f, at(i), b);
            self.set(b, inv(at(i)), f);
            self.deductions.push((f, at(i)));
        }
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        for k in 0..self.count() as u32 {
            for r in relators {
                if !self.alive(k) {
                    break;
                }
                self.scan(k, r);
            }
        }
        self.deductions.clear();
    }

    fn process_deductions(&mut self, by_col: &[Vec<Vec<usize>>]) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.alive(c) {
                continue;
            }
            for r in &by_col[x] {
                self.scan(c, r);
                if !self.alive(c) {
                    break;
                }
            }
            if !self.alive(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE || !self.alive(d) {
                continue;
            }
            for r in &by_col[inv(x)] {
                self.scan(d, r);
                if !self.alive(d) {
                    break;
                }
            }
        }
    }

    fn into_table(mut self) -> CosetTable {
        let ncols = self.ncols;
        let live: Vec<u32> = (0..self.count() as u32).filter(|&k| self.alive(k)).collect();
        let mut new_index = vec![NONE; self.count()];
        for (i, &k) in live.iter().enumerate() {
            new_index[k as usize] = i as u32;
        }
        let rows = live
            .iter()
            .map(|&k| {
                (0..ncols)
                    .map(|x| {
                        let d = self.get(k, x);
                        if d == NONE {
                            NONE
                        } else {
                            new_index[self.rep(d) as usize]
                        }
                    })
                    .collect()
            })
            .collect();
        CosetTable {
            ncols,
            rows,
            status: if self.capped { Status::Capped } else { Status::Closed },
            defined: self.count(),
            max_live: self.max_live,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Relator-based: scan every relator at each coset, defining as needed.
    Hlt,
    /// Deduction-based: define the first empty entry, then scan the cyclic
    /// conjugates of relators through every new entry.
    #[default]
    Felsch,
}

fn cyclic_conjugates_by_column(p: &GroupPresentation, ncols: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_col: Vec<Vec<Vec<usize>>> = vec![Vec::new(); ncols];
    for r in &p.relators {
        for k in 0..r.len() {
            let conj: Vec<usize> = r[k..].iter().chain(&r[..k]).copied().collect();
            if !by_col[conj[0]].contains(&conj) {
                by_col[conj[0]].push(conj);
            }
        }
        let rinv: Vec<usize> = r.iter().rev().map(|&x| inv(x)).collect();
        for k in 0..rinv.len() {
            let conj: Vec<usize> = rinv[k..].iter().chain(&rinv[..k]).copied().collect();
            if !by_col[conj[0]].contains(&conj) {
                by_col[conj[0]].push(conj);
            }
        }
    }
    by_col
}

fn felsch(p: &GroupPresentation, cap: usize) -> CosetTable {
    let ncols = 2 * p.generators.len();
    let by_col = cyclic_conjugates_by_column(p, ncols);
    let mut en = Enumerator::new(ncols, cap);
    for w in &p.subgroup {
        en.scan_and_fill(0, w);
        en.process_deductions(&by_col);
    }
    // Relators with every letter empty at coset 0 are never reached by a
    // deduction; a single pass covers them.
    for r in &p.relators {
        en.scan(0, r);
    }
    en.process_deductions(&by_col);
    let mut c = 0u32;
    'outer: while (c as usize) < en.count() {
        for x in 0..ncols {
            if !en.alive(c) {
                break;
            }
            if en.get(c, x) == NONE {
                if !en.define(c, x) {
                    break 'outer;
                }
                en.process_deductions(&by_col);
            }
        }
        c += 1;
    }
    en.into_table()
}

/// Enumerates cosets of the subgroup with the given strategy. `cap` bounds
/// the number of cosets ever defined.
pub fn enumerate(p: &GroupPresentation, strategy: Strategy, cap: usize) -> CosetTable {
    match strategy {
        Strategy::Hlt => todd_coxeter(p, cap),
        Strategy::Felsch => felsch(p, cap),
    }
}

/// HLT enumeration: subgroup generators scanned at coset 0, then each live
/// coset in creation order is scanned against every relator and its row
/// completed. `cap` bounds the number of cosets ever defined.
pub fn todd_coxeter(p: &GroupPresentation, cap: usize) -> CosetTable {
    let ncols = 2 * p.generators.len();
    let mut en = Enumerator::new(ncols, cap);
    for w in &p.subgroup {
        en.scan_and_fill(0, w);
    }
    let mut c = 0u32;
    while (c as usize) < en.count() {
        if en.alive(c) {
            for r in &p.relators {
                en.scan_and_fill(c, r);
                if !en.alive(c) || en.capped {
                    break;
                }
            }
            if en.alive(c) && !en.capped {
                for x in 0..ncols {
                    if en.get(c, x) == NONE && !en.define(c, x) {
                        break;
                    }
                }
            }
        }
        if en.capped {
            // Lookahead: scan every live coset without defining, then
            // resume at `c` if that freed room.
            let before = en.live;
            en.lookahead(&p.relators);
            if en.live >= before || en.live >= en.cap {
                break;
            }
            en.capped = false;
            continue;
        }
        c += 1;
    }
    en.deductions.clear();
    en.into_table()
}

fn free_reduce(w: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(w.len());
    for &c in w {
        if out.last() == Some(&inv(c)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

fn cyclic_reduce(w: &[usize]) -> Vec<usize> {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == inv(w[w.len() - 1]) {
        w.pop();
        w.remove(0);
    }
    w
}

/// Tietze simplification: repeatedly eliminates a generator occurring
/// exactly once in some relator, choosing the elimination that keeps the
/// total relator length smallest and never letting it exceed `max_total`.
/// The result presents the same group; subgroup words are rewritten too.
pub fn simplify(p: &GroupPresentation, max_total: usize) -> GroupPresentation {
    let mut gens: Vec<Option<Vec<usize>>> = vec![None; p.generators.len()];
    let mut relators: Vec<Vec<usize>> = p.relators.iter().map(|r| cyclic_reduce(r)).collect();
    let mut subgroup = p.subgroup.clone();
    let substitute = |w: &[usize], g: usize, image: &[usize]| -> Vec<usize> {
        let image_inv: Vec<usize> = image.iter().rev().map(|&x| inv(x)).collect();
        let mut out = Vec::new();
        for &c in w {
            if c / 2 == g {
                out.extend_from_slice(if c % 2 == 0 { image } else { &image_inv });
            } else {
                out.push(c);
            }
        }
        free_reduce(&out)
    };
    loop {
        relators.retain(|r| !r.is_empty());
        relators.sort();
        relators.dedup();
        let total: usize = relators.iter().map(Vec::len).sum();
        let mut best: Option<(usize, usize, usize)> = None; // (new total, relator, position)
        for (ri, r) in relators.iter().enumerate() {
            for (pos, &c) in r.iter().enumerate() {
                let g = c / 2;
                if r.iter().filter(|&&d| d / 2 == g).count() != 1 {
                    continue;
                }
                let image_len = r.len() - 1;
                let occurrences: usize = relators
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != ri)
                    .map(|(_, w)| w.iter().filter(|&&d| d / 2 == g).count())
                    .sum();
                let new_total = total - r.len() + occurrences * (image_len.saturating_sub(1));
                if new_total <= max_total && best.is_none_or(|b| new_total < b.0) {
                    best = Some((new_total, ri, pos));
                }
            }
        }
        let Some((_, ri, pos)) = best else { break };
        let r = relators.remove(ri);
        // r = u c v with c = g^{+-1}: g^{+-1} = u^-1 v^-1.
        let c = r[pos];
        let g = c / 2;
        let rotated: Vec<usize> = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        let mut image: Vec<usize> = rotated.iter().rev().map(|&x| inv(x)).collect();
        if c % 2 == 1 {
            image = image.iter().rev().map(|&x| inv(x)).collect();
        }
        relators = relators.iter().map(|w| cyclic_reduce(&substitute(w, g, &image))).collect();
        subgroup = subgroup.iter().map(|w| substitute(w, g, &image)).collect();
        for img in gens.iter_mut().flatten() {
            *img = substitute(img, g, &image);
        }
        gens[g] = Some(image);
    }
    // Renumber surviving generators.
    let keep: Vec<usize> = (0..gens.len()).filter(|&g| gens[g].is_none()).collect();
    let mut col = vec![usize::MAX; 2 * gens.len()];
    for (i, &g) in keep.iter().enumerate() {
        col[2 * g] = 2 * i;
        col[2 * g + 1] = 2 * i + 1;
    }
    let renumber = |w: &Vec<usize>| w.iter().map(|&c| col[c]).collect::<Vec<_>>();
    GroupPresentation {
        generators: keep.iter().map(|&g| p.generators[g].clone()).collect(),
        relators: relators.iter().map(renumber).collect(),
        subgroup: subgroup.iter().map(renumber).collect(),
    }
}

/// Reidemeister-Schreier: a presentation of the subgroup whose closed
/// coset table is `t`. Schreier generators are the non-tree edges of a
/// breadth-first spanning tree, named `s<coset>_<generator>`.
pub fn schreier_presentation(p: &GroupPresentation, t: &CosetTable) -> GroupPresentation {
    assert_eq!(t.status, Status::Closed);
    let n = t.rows.len();
    let ngens = p.generators.len();
    let mut tree = vec![vec![false; ngens]; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for x in 0..2 * ngens {
            let d = t.rows[c][x] as usize;
            if !seen[d] {
                seen[d] = true;
                queue.push_back(d);
                // The positive edge of the pair carries the label.
                if x % 2 == 0 {
                    tree[c][x / 2] = true;
                } else {
                    tree[d][x / 2] = true;
                }
            }
        }
    }
    let mut label = vec![vec![usize::MAX; ngens]; n];
    let mut generators = Vec::new();
    for c in 0..n {
        for g in 0..ngens {
            if !tree[c][g] {
                label[c][g] = generators.len();
                generators.push(format!("s{}_{}", c, p.generators[g]));
            }
        }
    }
    let rewrite = |start: usize, w: &[usize]| -> Vec<usize> {
        let mut c = start;
        let mut out = Vec::new();
        for &x in w {
            let d = t.rows[c][x] as usize;
            let (from, g, inverse) = if x % 2 == 0 { (c, x / 2, false) } else { (d, x / 2, true) };
            if !tree[from][g] {
                out.push(2 * label[from][g] + inverse as usize);
            }
            c = d;
        }
        free_reduce(&out)
    };
    let mut relators = Vec::new();
    for c in 0..n {
        for r in &p.relators {
            relators.push(cyclic_reduce(&rewrite(c, r)));
        }
    }
    relators.retain(|r| !r.is_empty());
    relators.sort();
    relators.dedup();
    GroupPresentation {
        generators,
        relators,
        subgroup: Vec::new(),
    }
}

/// Order of the group with the extra relators added.
///
/// First an enumeration over the trivial subgroup. If that hits `cap`, a
/// cyclic subgroup of index 1 reduces the question to the abelianization;
/// otherwise a subgroup of index > 1 generated by some of the generators is
/// enumerated, and the order of that subgroup is computed recursively from its
/// Reidemeister-Schreier presentation. Every
/// enumeration in the chain stays under `cap` live cosets.
pub fn quotient_order(p: &GroupPresentation, extra: &[Vec<usize>], cap: usize) -> Order {
    let mut q = p.with_relators(extra);
    q.subgroup.clear();
    order_by_chain(&q, cap, CHAIN_DEPTH)
}

const CHAIN_DEPTH: usize = 4;

fn order_by_chain(q: &GroupPresentation, cap: usize, depth: usize) -> Order {
    let t = enumerate(q, Strategy::default(), cap);
    if t.status == Status::Closed {
        return Order::Exact(t.rows.len());
    }
    let bound = Order::AtLeast(t.max_live);
    // A generator whose cyclic subgroup has index 1 makes the group cyclic,
    // hence equal to its abelianization.
    for g in 0..q.generators.len() {
        let mut h = q.clone();
        h.subgroup = vec![vec![2 * g]];
        let th = enumerate(&h, Strategy::default(), cap);
        if th.status == Status::Closed && th.rows.len() == 1 {
            return match abelianization_order(q) {
                Some(n) => Order::Exact(n),
                None => bound,
            };
        }
    }
    if depth == 0 || q.generators.len() < 2 {
        return bound;
    }
    for gens in candidate_subgroups(q.generators.len()) {
        let mut h = q.clone();
        h.subgroup = gens.iter().map(|&g| vec![2 * g]).collect();
        let th = enumerate(&h, Strategy::default(), cap);
        if th.status != Status::Closed || th.rows.len() < 2 || !th.verify(&h) {
            continue;
        }
        let sub = schreier_presentation(q, &th);
        return match order_by_chain(&sub, cap, depth - 1) {
            Order::Exact(m) => Order::Exact(th.rows.len() * m),
            Order::AtLeast(_) => bound,
        };
    }
    bound
}

/// Order of the abelianization, `None` when it is infinite. Smith normal
/// form of the exponent-sum matrix.
pub fn abelianization_order(p: &GroupPresentation) -> Option<usize> {
    let n = p.generators.len();
    let mut m: Vec<Vec<i128>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![0i128; n];
            for &c in r {
                row[c / 2] += if c % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect();
    let mut order: i128 = 1;
    for col in 0..n {
        // Reduce until the pivot divides the rest of its row and column.
        loop {
            let pivot = (col..m.len())
                .flat_map(|i| (col..n).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs());
            let (pi, pj) = pivot?;
            m.swap(col, pi);
            for row in m.iter_mut() {
                row.swap(col, pj);
            }
            let a = m[col][col];
            let mut clean = true;
            for i in col + 1..m.len() {
                let q = m[i][col] / a;
                if q != 0 {
                    let (top, rest) = m.split_at_mut(i);
                    for (x, &p) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                        *x -= q * p;
                    }
                }
                clean &= m[i][col] == 0;
            }
            for j in col + 1..n {
                let q = m[col][j] / a;
                if q != 0 {
                    for row in m[col..].iter_mut() {
                        row[j] -= q * row[col];
                    }
                }
                clean &= m[col][j] == 0;
            }
            if clean {
                break;
            }
        }
        order = order.checked_mul(m[col][col].abs())?;
    }
    usize::try_from(order).ok()
}

/// Generator subsets tried as chain subgroups: all but one, then proper
/// prefixes and suffixes from longest to shortest.
fn candidate_subgroups(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for skip in 0..n {
        out.push((0..n).filter(|&g| g != skip).collect());
    }
    for len in (1..n - 1).rev() {
        out.push((0..len).collect());
        out.push((n - len..n).collect());
    }
    out.dedup();
    out
}

pub const DEFAULT_CAP: usize = 1_000_000;

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> GroupPresentation {
        GroupPresentation::parse(text).unwrap()
    }

    #[test]
    fn cyclic_group() {
        let p = pres("generators: a\nrelators:\na^5\n");
        let t = todd_coxeter(&p, 100);
        assert_eq!(t.index(), Some(5));
        assert!(t.verify(&p));
    }

    #[test]
    fn abelian_collapse() {
        let p = pres("generators: a b\nrelators:\na b a^-1 b^-1\n");
        let a = p.parse_word("a").unwrap();
        let b = p.parse_word("b").unwrap();
        assert_eq!(quotient_order(&p, &[a, b], 100), Order::Exact(1));
    }

    #[test]
    fn symmetric_group_and_subgroup_index() {
        // S3 = <a, b | a^2, b^3, (ab)^2>, index 3 over <a>.
        let mut p = pres("generators: a b\nrelators:\na^2\nb^3\n(a b)^2\n");
        assert_eq!(todd_coxeter(&p, 100).index(), Some(6));
        p.subgroup.push(p.parse_word("a").unwrap());
        let t = todd_coxeter(&p, 100);
        assert_eq!(t.index(), Some(3));
        assert!(t.verify(&p));
    }

    #[test]
    fn free_group_hits_cap() {
        let p = pres("generators: a b\nrelators:\n");
        assert_eq!(quotient_order(&p, &[], 50), Order::AtLeast(50));
    }

    #[test]
    fn coxeter_group_order() {
        // Symmetries of the cube: [4,3], order 48.
        let p = pres("generators: r s t\nrelators:\nr^2\ns^2\nt^2\n(r s)^4\n(s t)^3\n(r t)^2\n");
        let t = todd_coxeter(&p, 10_000);
        assert_eq!(t.index(), Some(48));
        assert!(t.verify(&p));
    }

    #[test]
    fn syntax_errors() {
        assert!(GroupPresentation::parse("relators:\na\n").is_err());
        assert!(matches!(
            GroupPresentation::parse("generators: a\nrelators:\nb\n"),
            Err(Error::UnknownSymbol(_))
        ));
    }

    fn bundled(name: &str) -> GroupPresentation {
        pres(crate::corpus::presentation_source(name).unwrap())
    }

    #[test]
    fn bundled_quotients() {
        let p = bundled("ex71");
        let r = p.parse_word("(b1^-1 b2)^4").unwrap();
        assert_eq!(quotient_order(&p, &[r], 100_000), Order::Exact(4));
        let p = bundled("ex72");
        let r = p.parse_word("a1^2 a2^-2").unwrap();
        assert_eq!(quotient_order(&p, &[r], 100_000), Order::Exact(4));
        assert!(matches!(quotient_order(&bundled("ex71"), &[], 2000), Order::AtLeast(_)));
    }

    #[test]
    fn table_presentation_parses() {
        let p = bundled("table1");
        assert_eq!(p.generators.len(), 23);
        assert_eq!(p.relators.len(), 56);
        assert_eq!(p.relators.iter().map(Vec::len).sum::<usize>(), 216);
        assert_eq!(GroupPresentation::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn schreier_presentation_of_subgroup() {
        let mut p = pres("generators: a b\nrelators:\na^2\nb^3\n(a b)^2\n");
        p.subgroup.push(p.parse_word("b").unwrap());
        let t = todd_coxeter(&p, 100);
        assert_eq!(t.index(), Some(2));
        p.subgroup.clear();
        let h = schreier_presentation(&p, &t);
        assert_eq!(todd_coxeter(&h, 100).index(), Some(3));
    }

    #[test]
    fn abelianization() {
        let p = pres("generators: a b\nrelators:\na^2\nb^3\na b a^-1 b^-1\n");
        assert_eq!(abelianization_order(&p), Some(6));
        let p = pres("generators: a b\nrelators:\na b a^-1 b^-1\n");
        assert_eq!(abelianization_order(&p), None);
        let p = pres("generators: a b\nrelators:\na^4 b^6\na^6 b^4\n");
        assert_eq!(abelianization_order(&p), Some(20));
    }

    #[test]
    fn simplification_preserves_order() {
        let p = pres("generators: r s t\nrelators:\nr^2\ns^2\nt^2\n(r s)^4\n(s t)^3\n(r t)^2\n");
        let q = pres("generators: a b c\nrelators:\na b^-1 c\na^5\nb^3\n");
        for p in [p, q] {
            let s = simplify(&p, 200);
            assert!(s.generators.len() <= p.generators.len());
            assert_eq!(
                todd_coxeter(&s, 10_000).index(),
                todd_coxeter(&p, 10_000).index()
            );
        }
    }

    #[test]
    fn order_through_subgroup_chain() {
        // Generated as a cyclic group through one generator once the
        // direct enumeration is capped.
        let p = pres("generators: r s t\nrelators:\nr^2\ns^2\nt^2\n(r s)^4\n(s t)^3\n(r t)^2\n");
        assert_eq!(quotient_order(&p, &[], 20), Order::Exact(48));
        let p = pres("generators: a b\nrelators:\na^4\nb^5\na b a^-1 b^-1\n");
        assert_eq!(quotient_order(&p, &[], 5), Order::Exact(20));
    }

    #[test]
    fn relator_order_invariance() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let p = bundled("ex72");
        let base = p.with_relators(&[p.parse_word("a1^2 a2^-2").unwrap()]);
        for _ in 0..3 {
            let mut q = base.clone();
            q.relators.shuffle(&mut rng);
            assert_eq!(quotient_order(&q, &[], 100_000), Order::Exact(4));
        }
    }
}
