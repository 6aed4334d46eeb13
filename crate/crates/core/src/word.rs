//! Signed symbols and freely reduced words over states or letters.
//!
//! A [`Sym`] is a base name index together with a sign. Formal inverses are
//! written with a trailing `^-1` in every text format of the crate.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    State,
    Letter,
}

impl Kind {
    pub fn other(self) -> Kind {
        match self {
            Kind::State => Kind::Letter,
            Kind::Letter => Kind::State,
        }
    }
}

/// A generator or its formal inverse. Ordered by `(kind, base, sign)` with the
/// positive sign first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym {
    kind: Kind,
    code: u32,
}

impl Sym {
    pub fn new(kind: Kind, base: u32, inverse: bool) -> Sym {
        Sym {
            kind,
            code: base * 2 + inverse as u32,
        }
    }

    pub fn state(base: u32) -> Sym {
        Sym::new(Kind::State, base, false)
    }

    pub fn letter(base: u32) -> Sym {
        Sym::new(Kind::Letter, base, false)
    }

    pub fn from_code(kind: Kind, code: u32) -> Sym {
        Sym { kind, code }
    }

    /// `2 * base + sign`, the dense index used by action tables.
    #[inline]
    pub fn code(self) -> u32 {
        self.code
    }

    #[inline]
    pub fn base(self) -> u32 {
        self.code >> 1
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.code & 1 == 1
    }

    #[inline]
    pub fn kind(self) -> Kind {
        self.kind
    }

    #[inline]
    pub fn inverse(self) -> Sym {
        Sym {
            kind: self.kind,
            code: self.code ^ 1,
        }
    }

    pub fn positive(self) -> Sym {
        Sym {
            kind: self.kind,
            code: self.code & !1,
        }
    }

    pub fn with_kind(self, kind: Kind) -> Sym {
        Sym {
            kind,
            code: self.code,
        }
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::State => 's',
            Kind::Letter => 'x',
        };
        write!(f, "{k}{}", self.base())?;
        if self.is_inverse() {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// Appends `s` to a stack of symbols, cancelling against the top if they are
/// mutually inverse.
#[inline]
pub(crate) fn push_reduced(stack: &mut Vec<Sym>, s: Sym) {
    if stack.last() == Some(&s.inverse()) {
        stack.pop();
    } else {
        stack.push(s);
    }
}

pub(crate) fn reduce_into(out: &mut Vec<Sym>, syms: impl IntoIterator<Item = Sym>) {
    for s in syms {
        push_reduced(out, s);
    }
}

/// A freely reduced word whose symbols all have one [`Kind`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    kind: Kind,
    syms: Vec<Sym>,
}

impl Word {
    pub fn empty(kind: Kind) -> Word {
        Word {
            kind,
            syms: Vec::new(),
        }
    }

    /// Builds a word, freely reducing the input. Fails if a symbol has the
    /// wrong kind.
    pub fn new(kind: Kind, syms: impl IntoIterator<Item = Sym>) -> Result<Word> {
        let mut out = Vec::new();
        for s in syms {
            if s.kind() != kind {
                return Err(Error::KindMismatch(format!("{s:?} in a {kind:?} word")));
            }
            push_reduced(&mut out, s);
        }
        Ok(Word { kind, syms: out })
    }

    pub fn single(s: Sym) -> Word {
        Word {
            kind: s.kind(),
            syms: vec![s],
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn syms(&self) -> &[Sym] {
        &self.syms
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            kind: self.kind,
            syms: self.syms.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.kind, other.kind, "concatenating words of different kinds");
        let mut out = self.syms.clone();
        reduce_into(&mut out, other.syms.iter().copied());
        Word {
            kind: self.kind,
            syms: out,
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty(self.kind);
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn to_mixed(&self) -> MixedWord {
        MixedWord {
            syms: self.syms.clone(),
        }
    }

    /// Shortlex comparison key: length first, then symbols.
    pub fn shortlex_key(&self) -> (usize, &[Sym]) {
        (self.syms.len(), &self.syms)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.syms)
    }
}

/// A word over states and letters interleaved: a raw element of the
/// fundamental group of a square complex. Stored freely reduced.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MixedWord {
    syms: Vec<Sym>,
}

impl MixedWord {
    pub fn new(syms: impl IntoIterator<Item = Sym>) -> MixedWord {
        let mut out = Vec::new();
        reduce_into(&mut out, syms);
        MixedWord { syms: out }
    }

    pub fn syms(&self) -> &[Sym] {
        &self.syms
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn inverse(&self) -> MixedWord {
        MixedWord {
            syms: self.syms.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &MixedWord) -> MixedWord {
        let mut out = self.syms.clone();
        reduce_into(&mut out, other.syms.iter().copied());
        MixedWord { syms: out }
    }

    pub fn pow(&self, n: i64) -> MixedWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = MixedWord::default();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Commutator `p q p^-1 q^-1`.
    pub fn commutator(p: &MixedWord, q: &MixedWord) -> MixedWord {
        p.concat(q).concat(&p.inverse()).concat(&q.inverse())
    }
}

impl From<&Word> for MixedWord {
    fn from(w: &Word) -> MixedWord {
        w.to_mixed()
    }
}

impl fmt::Debug for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.syms)
    }
}

/// Base names of states and letters; resolves and prints symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Names {
    pub states: Vec<String>,
    pub letters: Vec<String>,
}

impl Names {
    pub fn table(&self, kind: Kind) -> &[String] {
        match kind {
            Kind::State => &self.states,
            Kind::Letter => &self.letters,
        }
    }

    pub fn sym_name(&self, s: Sym) -> String {
        let base = &self.table(s.kind())[s.base() as usize];
        if s.is_inverse() {
            format!("{base}^-1")
        } else {
            base.clone()
        }
    }

    pub fn fmt_syms(&self, syms: &[Sym]) -> String {
        if syms.is_empty() {
            return "e".to_string();
        }
        syms.iter()
            .map(|&s| self.sym_name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        self.fmt_syms(w.syms())
    }

    pub fn fmt_mixed(&self, w: &MixedWord) -> String {
        self.fmt_syms(w.syms())
    }

    /// Looks up an identifier (with optional `^-1`) in both tables.
    pub fn resolve(&self, ident: &str) -> Result<Sym> {
        let (base, inv) = split_inverse(ident);
        let states = self.states.iter().position(|n| n == base);
        let letters = self.letters.iter().position(|n| n == base);
        match (states, letters) {
            (Some(i), None) => Ok(Sym::new(Kind::State, i as u32, inv)),
            (None, Some(i)) => Ok(Sym::new(Kind::Letter, i as u32, inv)),
            (Some(_), Some(_)) => Err(Error::UnknownSymbol(format!("{ident} (ambiguous)"))),
            (None, None) => Err(Error::UnknownSymbol(ident.to_string())),
        }
    }

    pub fn resolve_kind(&self, kind: Kind, ident: &str) -> Result<Sym> {
        let (base, inv) = split_inverse(ident);
        self.table(kind)
            .iter()
            .position(|n| n == base)
            .map(|i| Sym::new(kind, i as u32, inv))
            .ok_or_else(|| Error::UnknownSymbol(ident.to_string()))
    }

    /// Parses a mixed word in the text syntax (see [`parse_word_tokens`]).
    pub fn parse_mixed(&self, text: &str) -> Result<MixedWord> {
        let syms = parse_word_tokens(text, &mut |id| self.resolve(id))?;
        Ok(MixedWord::new(syms))
    }

    pub fn parse_word(&self, kind: Kind, text: &str) -> Result<Word> {
        let syms = parse_word_tokens(text, &mut |id| self.resolve_kind(kind, id))?;
        Word::new(kind, syms)
    }

    pub fn swapped(&self) -> Names {
        Names {
            states: self.letters.clone(),
            letters: self.states.clone(),
        }
    }
}

/// Splits a trailing `^-1` off an identifier.
pub fn split_inverse(ident: &str) -> (&str, bool) {
    match ident.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (ident, false),
    }
}

/// Word syntax shared by every input format.
///
/// Tokens are identifiers separated by whitespace, `*` or `.`; an identifier
/// may carry `^-1` or an integer exponent `^n` / `^-n`; parenthesised groups
/// may carry an exponent; `lhs = rhs` denotes `lhs rhs^-1`; `e` or an empty
/// string is the identity.
pub fn parse_word_tokens(
    text: &str,
    resolve: &mut dyn FnMut(&str) -> Result<Sym>,
) -> Result<Vec<Sym>> {
    if let Some((lhs, rhs)) = text.split_once('=') {
        let mut out = parse_word_tokens(lhs, resolve)?;
        let rhs = parse_word_tokens(rhs, resolve)?;
        out.extend(rhs.iter().rev().map(|s| s.inverse()));
        return Ok(out);
    }
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let out = parse_seq(&chars, &mut pos, resolve)?;
    if pos < chars.len() {
        return Err(syntax(format!("unexpected `{}` in word `{text}`", chars[pos])));
    }
    Ok(out)
}

fn syntax(msg: String) -> Error {
    Error::Syntax { line: 0, msg }
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn parse_seq(
    chars: &[char],
    pos: &mut usize,
    resolve: &mut dyn FnMut(&str) -> Result<Sym>,
) -> Result<Vec<Sym>> {
    let mut out = Vec::new();
    loop {
        while *pos < chars.len() && (chars[*pos].is_whitespace() || matches!(chars[*pos], '*' | '.' | '·')) {
            *pos += 1;
        }
        if *pos >= chars.len() || chars[*pos] == ')' {
            return Ok(out);
        }
        let atom: Vec<Sym> = if chars[*pos] == '(' {
            *pos += 1;
            let inner = parse_seq(chars, pos, resolve)?;
            if *pos >= chars.len() || chars[*pos] != ')' {
                return Err(syntax("unbalanced parenthesis".into()));
            }
            *pos += 1;
            inner
        } else if is_ident_char(chars[*pos]) {
            let start = *pos;
            while *pos < chars.len() && is_ident_char(chars[*pos]) {
                *pos += 1;
            }
            let ident: String = chars[start..*pos].iter().collect();
            if ident == "e" {
                Vec::new()
            } else {
                vec![resolve(&ident)?]
            }
        } else {
            return Err(syntax(format!("unexpected `{}`", chars[*pos])));
        };
        let exp = parse_exponent(chars, pos)?;
        let rep: Vec<Sym> = if exp < 0 {
            atom.iter().rev().map(|s| s.inverse()).collect()
        } else {
            atom
        };
        for _ in 0..exp.unsigned_abs() {
            out.extend_from_slice(&rep);
        }
    }
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<i64> {
    if *pos >= chars.len() || chars[*pos] != '^' {
        return Ok(1);
    }
    *pos += 1;
    let start = *pos;
    if *pos < chars.len() && chars[*pos] == '-' {
        *pos += 1;
    }
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let s: String = chars[start..*pos].iter().collect();
    s.parse::<i64>()
        .map_err(|_| syntax(format!("bad exponent `^{s}`")))
}

/// All freely reduced words of length exactly `n` over `alphabet`
/// (`alphabet` must be closed under inversion), in lexicographic order of
/// alphabet positions.
pub fn reduced_words(alphabet: &[Sym], n: usize) -> Vec<Vec<Sym>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for &s in alphabet {
                if w.last() != Some(&s.inverse()) {
                    let mut v: Vec<Sym> = w.clone();
                    v.push(s);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

/// All words (not necessarily reduced) of length exactly `n` over `alphabet`.
pub fn all_words(alphabet: &[Sym], n: usize) -> Vec<Vec<Sym>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for &s in alphabet {
                let mut v: Vec<Sym> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// A uniformly random freely reduced word of length `n` (`alphabet` closed
/// under inversion).
pub fn random_reduced(rng: &mut impl rand::Rng, alphabet: &[Sym], n: usize) -> Vec<Sym> {
    let mut out: Vec<Sym> = Vec::with_capacity(n);
    while out.len() < n {
        let s = alphabet[rng.gen_range(0..alphabet.len())];
        if out.last() != Some(&s.inverse()) {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Names {
        Names {
            states: vec!["a".into(), "b".into()],
            letters: vec!["x".into(), "y".into()],
        }
    }

    #[test]
    fn inverse_is_involutive_and_flips_sign_only() {
        let s = Sym::new(Kind::State, 3, false);
        assert_eq!(s.inverse().inverse(), s);
        assert_eq!(s.inverse().base(), 3);
        assert!(s.inverse().is_inverse());
        assert_ne!(Sym::state(0), Sym::letter(0));
    }

    #[test]
    fn words_are_freely_reduced() {
        let a = Sym::state(0);
        let b = Sym::state(1);
        let w = Word::new(Kind::State, [a, b, b.inverse(), a.inverse(), b]).unwrap();
        assert_eq!(w.syms(), &[b]);
        assert!(Word::new(Kind::State, [Sym::letter(0)]).is_err());
    }

    #[test]
    fn parses_exponents_groups_and_equations() {
        let n = names();
        let w = n.parse_mixed("(x^-1 y)^2").unwrap();
        assert_eq!(n.fmt_mixed(&w), "x^-1 y x^-1 y");
        let w = n.parse_mixed("a^3").unwrap();
        assert_eq!(w.len(), 3);
        let w = n.parse_mixed("a x = y b").unwrap();
        assert_eq!(n.fmt_mixed(&w), "a x b^-1 y^-1");
        assert!(n.parse_mixed("e").unwrap().is_empty());
        assert!(n.parse_mixed("z").is_err());
        assert!(n.parse_mixed("(a").is_err());
    }

    #[test]
    fn reduced_word_counts() {
        let alpha = [
            Sym::letter(0),
            Sym::letter(0).inverse(),
            Sym::letter(1),
            Sym::letter(1).inverse(),
        ];
        for n in 1..5 {
            assert_eq!(reduced_words(&alpha, n).len(), 4 * 3usize.pow(n as u32 - 1));
        }
    }
}
