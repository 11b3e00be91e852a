//! Free-group words over a named alphabet.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Ordered list of distinct generator names. The order indexes tensor coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(Arc<Vec<String>>);

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for n in names {
            let n = n.into();
            if !is_identifier(&n) {
                return Err(Error::InvalidIdentifier(n));
            }
            if out.contains(&n) {
                return Err(Error::DuplicateGenerator(n));
            }
            out.push(n);
        }
        Ok(Alphabet(Arc::new(out)))
    }

    /// Whitespace- or comma-separated generator names, e.g. `"x y z"`.
    pub fn parse(text: &str) -> Result<Self> {
        Alphabet::new(text.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub(crate) fn same(&self, other: &Alphabet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub(crate) fn check(&self, other: &Alphabet) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A sequence of letters. Words are not reduced implicitly; see [`Word::free_reduce`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: &Alphabet) -> Self {
        Word { alphabet: alphabet.clone(), letters: Vec::new() }
    }

    pub fn generator(alphabet: &Alphabet, gen: usize) -> Self {
        assert!(gen < alphabet.len(), "generator index out of range");
        Word { alphabet: alphabet.clone(), letters: alloc::vec![Letter::new(gen, false)] }
    }

    pub fn from_letters(alphabet: &Alphabet, letters: Vec<Letter>) -> Self {
        assert!(letters.iter().all(|l| l.gen < alphabet.len()), "generator index out of range");
        Word { alphabet: alphabet.clone(), letters }
    }

    /// Parses the word grammar: generator names, juxtaposition or `*` for products,
    /// `^k` powers, `[u,v]` commutators, parentheses, and `1` or empty input for the
    /// identity. The result is not reduced.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let mut p = WordParser { src: text, pos: 0, alphabet };
        let letters = p.product(&[])?;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(match c {
                ')' | ']' => Error::UnbalancedBracket { pos: p.pos },
                _ => Error::Unexpected { found: c.to_string(), pos: p.pos },
            });
        }
        Ok(Word { alphabet: alphabet.clone(), letters })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { alphabet: self.alphabet.clone(), letters: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inv())
    }

    pub fn inverse(&self) -> Word {
        Word { alphabet: self.alphabet.clone(), letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// Letter concatenation, no reduction.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.alphabet.check(&other.alphabet)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { alphabet: self.alphabet.clone(), letters })
    }

    /// `u v u⁻¹ v⁻¹`, no reduction.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.concat(other)?.concat(&self.inverse())?.concat(&other.inverse())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { alphabet: self.alphabet.clone(), letters }
    }

    /// Image under the homomorphism sending generator `i` to `images[i]`, freely reduced.
    pub fn substitute(&self, target: &Alphabet, images: &[Word]) -> Result<Word> {
        if images.len() < self.alphabet.len() {
            return Err(Error::MissingImage(self.alphabet.name(images.len()).to_string()));
        }
        for im in images {
            target.check(&im.alphabet)?;
        }
        let mut letters = Vec::new();
        for l in &self.letters {
            let im = &images[l.gen];
            if l.inverse {
                letters.extend(im.letters.iter().rev().map(|x| x.inv()));
            } else {
                letters.extend_from_slice(&im.letters);
            }
        }
        Ok(Word { alphabet: target.clone(), letters }.free_reduce())
    }

    /// Exponent sum of each generator.
    pub fn abelianization(&self) -> Vec<i64> {
        let mut v = alloc::vec![0; self.alphabet.len()];
        for l in &self.letters {
            v[l.gen] += l.sign();
        }
        v
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(l.gen))?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

struct WordParser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl WordParser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Factors up to (not including) one of `stops` or end of input.
    fn product(&mut self, stops: &[char]) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(c) if stops.contains(&c) => return Ok(out),
                Some(')') | Some(']') => return Err(Error::UnbalancedBracket { pos: self.pos }),
                Some('*') if !out.is_empty() => {
                    self.pos += 1;
                    self.skip_ws();
                    if matches!(self.peek(), None | Some(')') | Some(']') | Some(',') | Some('*')) {
                        return Err(self.unexpected());
                    }
                }
                Some(_) => {
                    let f = self.factor()?;
                    out.extend(f);
                }
            }
        }
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            None => Error::Unexpected { found: "end of input".to_string(), pos: self.pos },
            Some(c) => Error::Unexpected { found: c.to_string(), pos: self.pos },
        }
    }

    fn factor(&mut self) -> Result<Vec<Letter>> {
        let start = self.pos;
        let base: Vec<Letter> = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.product(&[')'])?;
                if self.peek() != Some(')') {
                    return Err(Error::UnbalancedBracket { pos: start });
                }
                self.pos += 1;
                inner
            }
            Some('[') => {
                self.pos += 1;
                let u = self.product(&[',', ']'])?;
                if self.peek() != Some(',') {
                    return match self.peek() {
                        None => Err(Error::UnbalancedBracket { pos: start }),
                        _ => Err(self.unexpected()),
                    };
                }
                self.pos += 1;
                let v = self.product(&[']', ','])?;
                match self.peek() {
                    Some(']') => self.pos += 1,
                    None => return Err(Error::UnbalancedBracket { pos: start }),
                    _ => return Err(self.unexpected()),
                }
                let inv = |w: &[Letter]| w.iter().rev().map(|l| l.inv()).collect::<Vec<_>>();
                let mut out = u.clone();
                out.extend_from_slice(&v);
                out.extend(inv(&u));
                out.extend(inv(&v));
                out
            }
            Some('1') => {
                self.pos += 1;
                if matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    return Err(Error::Unexpected { found: "1".to_string(), pos: start });
                }
                Vec::new()
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let end = self.src[self.pos..]
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .map_or(self.src.len(), |i| self.pos + i);
                let name = &self.src[self.pos..end];
                let gen = self
                    .alphabet
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownGenerator { name: name.to_string(), pos: start })?;
                self.pos = end;
                alloc::vec![Letter::new(gen, false)]
            }
            _ => return Err(self.unexpected()),
        };
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let exp_pos = self.pos;
        let rest = &self.src[self.pos..];
        let mut len = 0;
        if rest.starts_with(['-', '+']) {
            len = 1;
        }
        len += rest[len..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - len);
        let k: i64 = rest[..len].parse().map_err(|_| Error::MalformedExponent { pos: exp_pos })?;
        if k.unsigned_abs() > 1_000_000 {
            return Err(Error::MalformedExponent { pos: exp_pos });
        }
        self.pos += len;
        let w = Word { alphabet: self.alphabet.clone(), letters: base };
        Ok(w.pow(k).letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn ab() -> Alphabet {
        Alphabet::parse("x y").unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s, &ab()).unwrap()
    }

    #[test]
    fn commutator_expansion() {
        assert_eq!(format!("{}", w("[x,y]")), "x y x^-1 y^-1");
        assert_eq!(format!("{}", w("[x*y, x^-2]").free_reduce()), "x y x^-1 x^-1 y^-1 x");
        assert_eq!(format!("{}", w("[x*y, x^-2]")), "x y x^-1 x^-1 y^-1 x^-1 x x");
        assert!(w("x^0").is_empty());
        assert!(w("").is_empty());
        assert!(w("1").is_empty());
    }

    #[test]
    fn group_ops() {
        assert_eq!(w("x x^-1 y").free_reduce(), w("y"));
        assert_eq!(w("x y").inverse(), w("y^-1 x^-1"));
        assert_eq!(w("x").commutator(&w("y")).unwrap(), w("x y x^-1 y^-1"));
        assert_eq!(w("(x y)^2 * x^-1"), w("x y x y x^-1"));
    }

    #[test]
    fn substitution() {
        let e = Alphabet::parse("e1 e2").unwrap();
        let img = Word::parse("e1 e2", &e).unwrap();
        let s = Alphabet::parse("x").unwrap();
        let x = Word::parse("x", &s).unwrap();
        assert_eq!(x.substitute(&e, core::slice::from_ref(&img)).unwrap(), img);
        assert_eq!(
            x.inverse().substitute(&e, core::slice::from_ref(&img)).unwrap(),
            Word::parse("e2^-1 e1^-1", &e).unwrap()
        );
        let a = Alphabet::parse("a").unwrap();
        let aw = Word::parse("a", &a).unwrap();
        assert!(w("[x,y]").substitute(&a, &[aw.clone(), aw.clone()]).unwrap().is_empty());
        assert!(matches!(w("[x,y]").substitute(&a, &[aw]), Err(Error::MissingImage(n)) if n == "y"));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Word::parse("x z", &ab()), Err(Error::UnknownGenerator { name: "z".into(), pos: 2 }));
        assert_eq!(Word::parse("x^a", &ab()), Err(Error::MalformedExponent { pos: 2 }));
        assert_eq!(Word::parse("(x y", &ab()), Err(Error::UnbalancedBracket { pos: 0 }));
        assert_eq!(Word::parse("x y)", &ab()), Err(Error::UnbalancedBracket { pos: 3 }));
        assert!(matches!(Word::parse("[x y]", &ab()), Err(Error::Unexpected { .. })));
        assert!(Alphabet::parse("x x").is_err());
        assert!(Alphabet::parse("1x").is_err());
    }
}
