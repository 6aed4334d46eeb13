//! Canonical keys for automata up to symmetry.

use crate::automaton::Automaton;
use crate::error::Result;
use crate::ops::{derived, Derived};

/// Symmetries to quotient by; each level includes the previous ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Policy {
    /// Renaming states and letters.
    Iso,
    /// Also passing to the inverse automaton.
    Inverse,
    /// Also the members of the dual/inverse family of the same shape.
    Dual,
}

impl Policy {
    pub const ALL: [Policy; 3] = [Policy::Iso, Policy::Inverse, Policy::Dual];

    pub fn parse(s: &str) -> Option<Policy> {
        match s {
            "iso" => Some(Policy::Iso),
            "inverse" | "iso+inverse" => Some(Policy::Inverse),
            "dual" | "iso+inverse+dual" => Some(Policy::Dual),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Policy::Iso => "iso",
            Policy::Inverse => "iso+inverse",
            Policy::Dual => "iso+inverse+dual",
        }
    }

    fn members(self) -> &'static [Derived] {
        match self {
            Policy::Iso => &[Derived::A],
            Policy::Inverse => &[Derived::A, Derived::I],
            Policy::Dual => &Derived::ALL,
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Minimal table encoding over all renamings of state and letter positions.
/// Entry `(y, t)` of slot `(s, x)` becomes `(pi(y), sigma(t))` at slot
/// `(sigma(s), pi(x))`.
pub fn table_key(n_states: usize, n_letters: usize, table: &[(u32, u32)]) -> Vec<u32> {
    let sp = permutations(n_states);
    let lp = permutations(n_letters);
    let mut best: Option<Vec<u32>> = None;
    let mut cur = vec![0u32; 2 * table.len()];
    for sigma in &sp {
        for pi in &lp {
            for s in 0..n_states {
                for x in 0..n_letters {
                    let (y, t) = table[s * n_letters + x];
                    let slot = sigma[s] * n_letters + pi[x];
                    cur[2 * slot] = pi[y as usize] as u32;
                    cur[2 * slot + 1] = sigma[t as usize] as u32;
                }
            }
            if best.as_ref().is_none_or(|b| cur < *b) {
                best = Some(cur.clone());
            }
        }
    }
    let mut key = vec![n_states as u32, n_letters as u32];
    key.extend(best.unwrap_or_default());
    key
}

/// Canonical key of an automaton under `policy`. Family members of a
/// different shape, or that fail to exist, are skipped.
pub fn key(a: &Automaton, policy: Policy) -> Result<Vec<u32>> {
    let shape = (a.num_states(), a.num_letters());
    let mut best: Option<Vec<u32>> = None;
    for &d in policy.members() {
        let b = if d == Derived::A { a.clone() } else {
            match derived(a, d) {
                Ok(b) => b,
                Err(_) => continue,
            }
        };
        if (b.num_states(), b.num_letters()) != shape {
            continue;
        }
        let k = table_key(shape.0, shape.1, b.raw_table());
        if best.as_ref().is_none_or(|x| k < *x) {
            best = Some(k);
        }
    }
    Ok(best.expect("the automaton itself is a member"))
}

/// Canonical key of a signed automaton under renaming and reorienting
/// states and letters, and, with `with_dual`, exchanging the two (when the
/// numbers of bases agree). Arrows are encoded by symbol codes.
pub fn signed_key(a: &Automaton, with_dual: bool) -> Vec<u32> {
    let ns = a.names().states.len();
    let nl = a.names().letters.len();
    let arrows: Vec<[u32; 4]> = a
        .arrows()
        .map(|r| [r.from.code(), r.input.code(), r.output.code(), r.to.code()])
        .collect();
    let maps = |n: usize| -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for p in permutations(n) {
            for flips in 0..(1u32 << n) {
                let m: Vec<u32> = (0..2 * n)
                    .map(|c| 2 * p[c / 2] as u32 + ((c as u32 & 1) ^ ((flips >> (c / 2)) & 1)))
                    .collect();
                out.push(m);
            }
        }
        out
    };
    let sm = maps(ns);
    let lm = maps(nl);
    let mut best: Option<Vec<[u32; 4]>> = None;
    let mut consider = |v: Vec<[u32; 4]>| {
        let mut v = v;
        v.sort_unstable();
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    };
    for f in &sm {
        for g in &lm {
            let direct: Vec<[u32; 4]> = arrows
                .iter()
                .map(|&[s, x, y, t]| [f[s as usize], g[x as usize], g[y as usize], f[t as usize]])
                .collect();
            if with_dual && ns == nl {
                consider(direct.iter().map(|&[s, x, y, t]| [x, s, t, y]).collect());
            }
            consider(direct);
        }
    }
    let mut key = vec![ns as u32, nl as u32];
    key.extend(best.unwrap_or_default().into_iter().flatten());
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ops::{dual, find_isomorphism};

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[5], vec![2, 1, 0]);
    }

    #[test]
    fn keys_agree_with_isomorphism_search() {
        let a = corpus::aleshin();
        let b = corpus::bellaterra();
        assert_ne!(key(&a, Policy::Iso).unwrap(), key(&b, Policy::Iso).unwrap());
        let shuffled = Automaton::parse(
            "alphabet: 1 0\nstates: c a b\n\
             c 1 -> 1 a\nc 0 -> 0 a\na 1 -> 0 c\na 0 -> 1 b\nb 1 -> 0 b\nb 0 -> 1 c\n",
        )
        .unwrap();
        assert!(find_isomorphism(&shuffled, &a, false).is_some());
        assert_eq!(key(&shuffled, Policy::Iso).unwrap(), key(&a, Policy::Iso).unwrap());
        for x in corpus::all() {
            for y in corpus::all() {
                let same_shape = (x.num_states(), x.num_letters()) == (y.num_states(), y.num_letters());
                if same_shape && !x.is_signed() && !y.is_signed() {
                    assert_eq!(
                        key(&x, Policy::Iso).unwrap() == key(&y, Policy::Iso).unwrap(),
                        find_isomorphism(&x, &y, false).is_some()
                    );
                }
            }
        }
    }

    #[test]
    fn inverse_policy_identifies_inverse() {
        for a in [corpus::aleshin(), corpus::bellaterra(), corpus::lamplighter()] {
            let i = crate::ops::inverse(&a).unwrap();
            assert_eq!(key(&a, Policy::Inverse).unwrap(), key(&i, Policy::Inverse).unwrap());
            assert_eq!(key(&a, Policy::Dual).unwrap(), key(&i, Policy::Dual).unwrap());
        }
    }

    #[test]
    fn signed_keys() {
        let d = corpus::delta_d();
        let s = corpus::delta_s();
        assert_ne!(signed_key(&d, true), signed_key(&s, true));
        assert_eq!(signed_key(&s, true), signed_key(&dual(&s), true));
        assert_eq!(signed_key(&d, true), signed_key(&dual(&d), true));
        assert_eq!(
            signed_key(&d, false),
            signed_key(&d.rename_states("'"), false)
        );
    }
}
