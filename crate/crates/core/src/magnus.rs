//! Truncated Magnus expansion, the free group ring and Fox calculus.
//!
//! These are independent of the circle model in [`crate::braiding`] and serve as
//! oracles for it.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::coalg::{Monomial, TensorElement};
use crate::coeff::{RingSpec, Scalar};
use crate::words::{Alphabet, Letter, Word};
use crate::{Error, Result};

fn add_term<K: Ord>(terms: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// A noncommutative polynomial in the generator variables, truncated below degree `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    ring: RingSpec,
    alphabet: Alphabet,
    order: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl TruncSeries {
    pub fn zero(alphabet: &Alphabet, ring: RingSpec, order: usize) -> Self {
        TruncSeries { ring, alphabet: alphabet.clone(), order, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: &Alphabet, ring: RingSpec, order: usize) -> Self {
        TruncSeries::monomial(alphabet, ring, order, Monomial::unit(), ring.one())
    }

    /// `c·m`, dropped if `deg m ≥ order`.
    pub fn monomial(alphabet: &Alphabet, ring: RingSpec, order: usize, m: Monomial, c: Scalar) -> Self {
        let mut s = TruncSeries::zero(alphabet, ring, order);
        if m.len() < order {
            add_term(&mut s.terms, m, c);
        }
        s
    }

    pub fn variable(alphabet: &Alphabet, ring: RingSpec, order: usize, gen: usize) -> Self {
        TruncSeries::monomial(alphabet, ring, order, Monomial(alloc::vec![gen]), ring.one())
    }

    pub fn from_terms<I>(alphabet: &Alphabet, ring: RingSpec, order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut s = TruncSeries::zero(alphabet, ring, order);
        for (m, c) in terms {
            if m.len() < order {
                add_term(&mut s.terms, m, c);
            }
        }
        s
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, key: &[usize]) -> Scalar {
        self.terms.get(&Monomial(key.to_vec())).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest degree of a nonzero term, `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().next().map(Monomial::len)
    }

    fn compatible(&self, other: &TruncSeries) -> Result<()> {
        self.alphabet.check(&other.alphabet)?;
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.add(&other.scale(&-self.ring.one()))
    }

    pub fn scale(&self, s: &Scalar) -> TruncSeries {
        let mut out = TruncSeries::zero(&self.alphabet, self.ring, self.order);
        for (k, c) in &self.terms {
            add_term(&mut out.terms, k.clone(), c * s);
        }
        out
    }

    /// Concatenation product, truncated at the common order.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.compatible(other)?;
        let mut out = TruncSeries::zero(&self.alphabet, self.ring, self.order);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.len() + b.len() >= self.order {
                    // keys are graded, so longer `b` only get worse
                    break;
                }
                add_term(&mut out.terms, a.concat(b), x * y);
            }
        }
        Ok(out)
    }

    /// Right multiplication by the expansion of one letter.
    fn mul_letter(&self, l: Letter) -> TruncSeries {
        let mut out = self.clone();
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_zero() && k < self.order {
            let mut next = TruncSeries::zero(&self.alphabet, self.ring, self.order);
            for (m, c) in &power.terms {
                if m.len() + 1 < self.order {
                    let mut v = m.0.clone();
                    v.push(l.gen);
                    let c = if l.inverse { -c } else { c.clone() };
                    add_term(&mut next.terms, Monomial(v), c);
                }
            }
            for (m, c) in &next.terms {
                add_term(&mut out.terms, m.clone(), c.clone());
            }
            if !l.inverse {
                break;
            }
            power = next;
            k += 1;
        }
        out
    }

    /// The tensor with the same coefficients.
    pub fn to_tensor(&self) -> TensorElement {
        TensorElement::from_terms(&self.alphabet, self.ring, self.terms.clone()).expect("same ring and alphabet")
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = TensorElement::from_terms(&self.alphabet, self.ring, self.terms.clone()).map_err(|_| fmt::Error)?;
        f.write_str(&t.display_with(" "))
    }
}

/// `M(w)` truncated at order `n`: `x ↦ 1 + X`, `x⁻¹ ↦ 1 - X + X² - ...`.
pub fn magnus_expand(w: &Word, ring: RingSpec, order: usize) -> TruncSeries {
    let mut s = TruncSeries::one(w.alphabet(), ring, order);
    for &l in w.letters() {
        s = s.mul_letter(l);
    }
    s
}

/// An element of the free group ring `A[F_S]`, keyed by reduced words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGroupRingElement {
    ring: RingSpec,
    alphabet: Alphabet,
    terms: BTreeMap<Word, Scalar>,
}

impl FreeGroupRingElement {
    pub fn zero(alphabet: &Alphabet, ring: RingSpec) -> Self {
        FreeGroupRingElement { ring, alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn from_word(w: &Word, ring: RingSpec) -> Self {
        let mut e = FreeGroupRingElement::zero(w.alphabet(), ring);
        add_term(&mut e.terms, w.free_reduce(), ring.one());
        e
    }

    pub fn from_terms<I>(alphabet: &Alphabet, ring: RingSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut e = FreeGroupRingElement::zero(alphabet, ring);
        for (w, c) in terms {
            alphabet.check(w.alphabet())?;
            if c.ring() != ring {
                return Err(Error::RingMismatch { left: ring.to_string(), right: c.ring().to_string() });
            }
            add_term(&mut e.terms, w.free_reduce(), c);
        }
        Ok(e)
    }

    /// `w - 1`.
    pub fn shifted(w: &Word, ring: RingSpec) -> Self {
        let mut e = FreeGroupRingElement::from_word(w, ring);
        add_term(&mut e.terms, Word::identity(w.alphabet()), -ring.one());
        e
    }

    /// Parses a combination such as `2 x y - x + 1/2 [x,y]`: terms separated by `+`/`-`,
    /// each an optional scalar followed by an optional word.
    pub fn parse(text: &str, alphabet: &Alphabet, ring: RingSpec) -> Result<Self> {
        let mut out = FreeGroupRingElement::zero(alphabet, ring);
        for (start, negative, body) in split_terms(text) {
            let trimmed = body.trim_start();
            let lead = start + (body.len() - trimmed.len());
            if trimmed.is_empty() {
                return Err(Error::Unexpected { found: "empty term".to_string(), pos: lead });
            }
            let digits = trimmed.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(trimmed.len());
            let (coeff, rest, rest_pos) = if digits > 0 {
                let text = &trimmed[..digits];
                let rest = &trimmed[digits..];
                let s = ring
                    .parse_scalar(text)
                    .map_err(|_| Error::MalformedScalar { text: text.to_string(), pos: lead })?;
                (s, rest, lead + digits)
            } else {
                (ring.one(), trimmed, lead)
            };
            let rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == '*');
            let w = Word::parse(rest, alphabet)
                .map_err(|e| shift_pos(e, rest_pos + (trimmed.len() - digits - rest.len())))?;
            let coeff = if negative { -coeff } else { coeff };
            add_term(&mut out.terms, w.free_reduce(), coeff);
        }
        Ok(out)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(&w.free_reduce()).cloned().unwrap_or_else(|| self.ring.zero())
    }

    fn compatible(&self, other: &FreeGroupRingElement) -> Result<()> {
        self.alphabet.check(&other.alphabet)?;
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() });
        }
        Ok(())
    }

    pub fn add(&self, other: &FreeGroupRingElement) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = FreeGroupRingElement::zero(&self.alphabet, self.ring);
        for (w, c) in &self.terms {
            add_term(&mut out.terms, w.clone(), c * s);
        }
        out
    }

    /// Convolution product.
    pub fn mul(&self, other: &FreeGroupRingElement) -> Result<Self> {
        self.compatible(other)?;
        let mut out = FreeGroupRingElement::zero(&self.alphabet, self.ring);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                add_term(&mut out.terms, u.concat(v)?.free_reduce(), a * b);
            }
        }
        Ok(out)
    }

    /// The augmentation `ε`: sum of coefficients.
    pub fn augment(&self) -> Scalar {
        self.terms.values().fold(self.ring.zero(), |a, c| &a + c)
    }

    /// `∂/∂x_gen`, extended linearly from `∂(uv) = ∂u + u ∂v`.
    pub fn fox_derivative(&self, gen: usize) -> Self {
        let mut out = FreeGroupRingElement::zero(&self.alphabet, self.ring);
        for (w, c) in &self.terms {
            let letters = w.letters();
            for (i, l) in letters.iter().enumerate() {
                if l.gen != gen {
                    continue;
                }
                if l.inverse {
                    let prefix = Word::from_letters(&self.alphabet, letters[..=i].to_vec()).free_reduce();
                    add_term(&mut out.terms, prefix, -c);
                } else {
                    let prefix = Word::from_letters(&self.alphabet, letters[..i].to_vec()).free_reduce();
                    add_term(&mut out.terms, prefix, c.clone());
                }
            }
        }
        out
    }

    /// `ε(∂_{i₁} ⋯ ∂_{i_k} self)` with `∂_{i_k}` applied first. This equals the Magnus
    /// coefficient of `X_{i₁} ⋯ X_{i_k}`.
    pub fn iterated_fox(&self, seq: &[usize]) -> Scalar {
        let mut e = self.clone();
        for &g in seq.iter().rev() {
            e = e.fox_derivative(g);
        }
        e.augment()
    }

    /// `Σ c M(w)`.
    pub fn magnus(&self, order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(&self.alphabet, self.ring, order);
        for (w, c) in &self.terms {
            let m = magnus_expand(w, self.ring, order);
            for (k, v) in m.terms {
                add_term(&mut s.terms, k, &v * c);
            }
        }
        s
    }
}

impl fmt::Display for FreeGroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if w.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push(' ');
                }
                out.push_str(&w.to_string());
            }
        }
        f.write_str(&out)
    }
}

fn shift_pos(e: Error, by: usize) -> Error {
    match e {
        Error::UnknownGenerator { name, pos } => Error::UnknownGenerator { name, pos: pos + by },
        Error::MalformedExponent { pos } => Error::MalformedExponent { pos: pos + by },
        Error::UnbalancedBracket { pos } => Error::UnbalancedBracket { pos: pos + by },
        Error::Unexpected { found, pos } => Error::Unexpected { found, pos: pos + by },
        other => other,
    }
}

/// Splits at top-level `+`/`-` (not inside brackets, not an exponent sign).
fn split_terms(text: &str) -> Vec<(usize, bool, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let mut prev = None;
    let mut first = true;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' | '-' if depth == 0 && prev != Some('^') => {
                let body = &text[start..i];
                if first && body.trim().is_empty() {
                    negative = c == '-';
                } else {
                    out.push((start, negative, body));
                    negative = c == '-';
                }
                first = false;
                start = i + 1;
                prev = Some(c);
                continue;
            }
            _ => {}
        }
        if !c.is_whitespace() {
            prev = Some(c);
            first = false;
        }
    }
    out.push((start, negative, &text[start..]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn setup() -> (Alphabet, RingSpec) {
        (Alphabet::parse("x y").unwrap(), RingSpec::Integers)
    }

    #[test]
    fn truncated_products() {
        let (a, z) = setup();
        let s = |text: &str| {
            let t = TensorElement::parse(text, &a, z).unwrap();
            TruncSeries::from_terms(&a, z, 3, t.into_terms())
        };
        assert_eq!(s("1 + x").mul(&s("1 - x + x x")).unwrap(), s("1"));
        assert_eq!(s("x").mul(&s("y")).unwrap().coeff(&[0, 1]).to_string(), "1");
        assert_eq!(s("y").mul(&s("x")).unwrap().coeff(&[0, 1]).to_string(), "0");
        assert!(s("x + y").mul(&s("0")).unwrap().is_zero());
        let other = TruncSeries::one(&a, z, 4);
        assert_eq!(s("x").mul(&other), Err(Error::OrderMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn expansions() {
        let (a, z) = setup();
        let c = Word::parse("[x,y]", &a).unwrap();
        assert_eq!(format!("{}", magnus_expand(&c, z, 3)), "x y - y x + 1");
        let xi = Word::parse("x^-1", &a).unwrap();
        assert_eq!(format!("{}", magnus_expand(&xi, z, 3)), "x x - x + 1");
        let w = Word::parse("[x*y, x^-2]", &a).unwrap();
        assert_eq!(magnus_expand(&w, z, 5).coeff(&[0, 0, 1, 0]).to_string(), "-1");
        assert_eq!(magnus_expand(&w, z, 5).coeff(&[0, 1, 0, 0]).to_string(), "1");
    }

    #[test]
    fn fox_calculus() {
        let (a, z) = setup();
        let x = Word::parse("x", &a).unwrap();
        let e = FreeGroupRingElement::from_word(&x, z);
        assert_eq!(format!("{}", e.fox_derivative(0)), "1");
        let xi = FreeGroupRingElement::from_word(&x.inverse(), z);
        assert_eq!(format!("{}", xi.fox_derivative(0)), "-x^-1");
        let c = FreeGroupRingElement::from_word(&Word::parse("[x,y]", &a).unwrap(), z);
        assert_eq!(c.iterated_fox(&[0, 1]).to_string(), "1");
        assert_eq!(c.iterated_fox(&[1, 0]).to_string(), "-1");
    }

    #[test]
    fn group_ring() {
        let (a, z) = setup();
        let x = Word::parse("x", &a).unwrap();
        let y = Word::parse("y", &a).unwrap();
        let p = FreeGroupRingElement::shifted(&x, z).mul(&FreeGroupRingElement::shifted(&y, z)).unwrap();
        assert_eq!(p, FreeGroupRingElement::parse("x y - x - y + 1", &a, z).unwrap());
        assert!(p.augment().is_zero());
        let e = FreeGroupRingElement::parse("3x + 2 y^-1", &a, z).unwrap();
        assert_eq!(e.augment().to_string(), "5");
        let e = FreeGroupRingElement::parse("-x^-1 + [x,y]", &a, z).unwrap();
        assert_eq!(format!("{e}"), "x y x^-1 y^-1 - x^-1");
        assert!(matches!(FreeGroupRingElement::parse("x + q", &a, z), Err(Error::UnknownGenerator { pos: 4, .. })));
    }
}
