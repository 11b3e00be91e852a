//! The tensor coalgebra on the dual generator functionals.
//!
//! A [`TensorElement`] is a finite combination of generator-index sequences. The key
//! `[i1, ..., ik]` stands for the pure tensor `X_i1 | ... | X_ik`; the empty key is the
//! unit, and its coefficient is the counit value. The leftmost factor pairs with the
//! earliest letter of a word.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::coeff::{RingSpec, Scalar};
use crate::words::Alphabet;
use crate::{Error, Result};

/// A generator-index sequence, ordered graded-lexicographically (length first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub Vec<usize>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    pub fn split_at(&self, i: usize) -> (Monomial, Monomial) {
        (Monomial(self.0[..i].to_vec()), Monomial(self.0[i..].to_vec()))
    }

    /// Generator names joined by `sep`; the unit renders as `"1"`.
    pub fn display(&self, alphabet: &Alphabet, sep: &str) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let names: Vec<&str> = self.0.iter().map(|&i| alphabet.name(i)).collect();
        names.join(sep)
    }

    /// All monomials of length `< n` over `gens` generators, in graded-lex order.
    pub fn all_below(gens: usize, n: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut layer = alloc::vec![Monomial::unit()];
        for _ in 0..n {
            let next: Vec<Monomial> = if gens == 0 {
                Vec::new()
            } else {
                layer
                    .iter()
                    .flat_map(|m| {
                        (0..gens).map(move |g| {
                            let mut v = m.0.clone();
                            v.push(g);
                            Monomial(v)
                        })
                    })
                    .collect()
            };
            out.append(&mut layer);
            layer = next;
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<usize>> for Monomial {
    fn from(v: Vec<usize>) -> Self {
        Monomial(v)
    }
}

/// A linear functional on generators, i.e. an element of `A^S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    alphabet: Alphabet,
    coeffs: Vec<Scalar>,
}

impl Functional {
    pub fn new(alphabet: &Alphabet, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != alphabet.len() {
            return Err(Error::DimensionMismatch { expected: alphabet.len(), found: coeffs.len() });
        }
        Ok(Functional { alphabet: alphabet.clone(), coeffs })
    }

    /// The dual functional of generator `gen`.
    pub fn dual(alphabet: &Alphabet, ring: RingSpec, gen: usize) -> Self {
        let coeffs = (0..alphabet.len()).map(|i| if i == gen { ring.one() } else { ring.zero() }).collect();
        Functional { alphabet: alphabet.clone(), coeffs }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn eval(&self, gen: usize) -> &Scalar {
        &self.coeffs[gen]
    }
}

fn insert(terms: &mut BTreeMap<Monomial, Scalar>, key: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// An element of the tensor coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    ring: RingSpec,
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, Scalar>,
}

impl TensorElement {
    pub fn zero(alphabet: &Alphabet, ring: RingSpec) -> Self {
        TensorElement { ring, alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn unit(alphabet: &Alphabet, ring: RingSpec) -> Self {
        TensorElement::monomial(alphabet, ring, Monomial::unit(), ring.one())
    }

    pub fn monomial(alphabet: &Alphabet, ring: RingSpec, key: Monomial, c: Scalar) -> Self {
        assert!(key.0.iter().all(|&g| g < alphabet.len()), "generator index out of range");
        let mut t = TensorElement::zero(alphabet, ring);
        insert(&mut t.terms, key, c);
        t
    }

    /// The pure tensor `X_i1 | ... | X_ik` with coefficient 1.
    pub fn pure(alphabet: &Alphabet, ring: RingSpec, key: &[usize]) -> Self {
        TensorElement::monomial(alphabet, ring, Monomial(key.to_vec()), ring.one())
    }

    pub fn from_terms<I>(alphabet: &Alphabet, ring: RingSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut t = TensorElement::zero(alphabet, ring);
        for (k, c) in terms {
            if c.ring() != ring {
                return Err(Error::RingMismatch { left: ring.to_string(), right: c.ring().to_string() });
            }
            if let Some(&g) = k.0.iter().find(|&&g| g >= alphabet.len()) {
                return Err(Error::DimensionMismatch { expected: alphabet.len(), found: g + 1 });
            }
            insert(&mut t.terms, k, c);
        }
        Ok(t)
    }

    /// `a_1 | ... | a_r` for arbitrary functionals, expanded over the dual basis.
    pub fn from_functionals(alphabet: &Alphabet, ring: RingSpec, factors: &[Functional]) -> Result<Self> {
        let mut acc = TensorElement::unit(alphabet, ring);
        for f in factors {
            alphabet.check(&f.alphabet)?;
            let mut lin = TensorElement::zero(alphabet, ring);
            for (g, c) in f.coeffs.iter().enumerate() {
                insert(&mut lin.terms, Monomial(alloc::vec![g]), c.clone());
            }
            acc = acc.concat(&lin)?;
        }
        Ok(acc)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub fn coeff(&self, key: &[usize]) -> Scalar {
        self.terms.get(&Monomial(key.to_vec())).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Longest key length (0 for the zero tensor).
    pub fn weight(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Monomial::len)
    }

    /// The counit: the coefficient of the empty key.
    pub fn counit(&self) -> Scalar {
        self.coeff(&[])
    }

    /// The homogeneous weight-`n` part.
    pub fn leading_term(&self, n: usize) -> TensorElement {
        self.filter(|k| k.len() == n)
    }

    /// The part without the unit term.
    pub fn reduced(&self) -> TensorElement {
        self.filter(|k| !k.is_empty())
    }

    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> TensorElement {
        TensorElement {
            ring: self.ring,
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    fn compatible(&self, other: &TensorElement) -> Result<()> {
        self.alphabet.check(&other.alphabet)?;
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() });
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            insert(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&-self.ring.one())
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(&self.alphabet, self.ring);
        for (k, c) in &self.terms {
            insert(&mut out.terms, k.clone(), c * s);
        }
        out
    }

    /// Concatenation product of tensors.
    pub fn concat(&self, other: &TensorElement) -> Result<TensorElement> {
        self.compatible(other)?;
        let mut out = TensorElement::zero(&self.alphabet, self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                insert(&mut out.terms, a.concat(b), x * y);
            }
        }
        Ok(out)
    }

    /// Deconcatenation coproduct `Δ`, including the trivial splits.
    pub fn coproduct(&self) -> MultiTensor {
        let mut out = MultiTensor::zero(&self.alphabet, self.ring, 2);
        for (k, c) in &self.terms {
            for i in 0..=k.len() {
                let (l, r) = k.split_at(i);
                out.insert(alloc::vec![l, r], c.clone());
            }
        }
        out
    }

    /// Reduced coproduct `Δ̄`: only splits with both sides nonempty.
    pub fn reduced_coproduct(&self) -> MultiTensor {
        self.iterated_reduced_coproduct(1)
    }

    /// `Δ̄^k`, a `(k+1)`-fold tensor: every split of each key into `k+1` nonempty pieces.
    pub fn iterated_reduced_coproduct(&self, k: usize) -> MultiTensor {
        let mut out = MultiTensor::zero(&self.alphabet, self.ring, k + 1);
        for (key, c) in &self.terms {
            if key.len() < k + 1 {
                continue;
            }
            for cuts in compositions(key.len(), k + 1) {
                let mut parts = Vec::with_capacity(k + 1);
                let mut start = 0;
                for len in cuts {
                    parts.push(Monomial(key.0[start..start + len].to_vec()));
                    start += len;
                }
                out.insert(parts, c.clone());
            }
        }
        out
    }

    /// Parses the tensor grammar: scalars (`3`, `-1/2`), generator names for their dual
    /// functionals, `|`, `*` or juxtaposition for the tensor product, `+`/`-`, and
    /// parentheses.
    pub fn parse(text: &str, alphabet: &Alphabet, ring: RingSpec) -> Result<Self> {
        let mut p = TensorParser { src: text, pos: 0, alphabet, ring };
        let t = p.sum()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.unexpected());
        }
        Ok(t)
    }

    /// Human-readable form, e.g. `x|y + z`; terms by descending weight.
    pub fn display_with(&self, sep: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.0.cmp(&b.0)));
        for (i, k) in keys.into_iter().enumerate() {
            let c = &self.terms[k];
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = k.display(&self.alphabet, sep);
            if k.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&mag);
                out.push(' ');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("|"))
    }
}

/// All ordered ways of writing `n` as a sum of `parts` positive integers.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { alloc::vec![Vec::new()] } else { Vec::new() };
    }
    if parts == 1 {
        return if n >= 1 { alloc::vec![alloc::vec![n]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A combination of `arity`-fold tensors of monomials, the target of iterated coproducts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiTensor {
    ring: RingSpec,
    alphabet: Alphabet,
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

impl MultiTensor {
    pub fn zero(alphabet: &Alphabet, ring: RingSpec, arity: usize) -> Self {
        MultiTensor { ring, alphabet: alphabet.clone(), arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Monomial>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert(&mut self, key: Vec<Monomial>, c: Scalar) {
        assert_eq!(key.len(), self.arity, "tensor arity");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(|| self.ring.zero());
        *e += &c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Applies the full coproduct to the `i`-th factor.
    pub fn coproduct_at(&self, i: usize) -> MultiTensor {
        let mut out = MultiTensor::zero(&self.alphabet, self.ring, self.arity + 1);
        for (key, c) in &self.terms {
            for s in 0..=key[i].len() {
                let (l, r) = key[i].split_at(s);
                let mut k = key[..i].to_vec();
                k.push(l);
                k.push(r);
                k.extend_from_slice(&key[i + 1..]);
                out.insert(k, c.clone());
            }
        }
        out
    }

    /// Applies the counit to the `i`-th factor.
    pub fn counit_at(&self, i: usize) -> MultiTensor {
        let mut out = MultiTensor::zero(&self.alphabet, self.ring, self.arity - 1);
        for (key, c) in &self.terms {
            if key[i].is_empty() {
                let mut k = key.clone();
                k.remove(i);
                out.insert(k, c.clone());
            }
        }
        out
    }

    /// For arity 1, the underlying tensor.
    pub fn to_tensor(&self) -> TensorElement {
        assert_eq!(self.arity, 1, "arity must be 1");
        let mut t = TensorElement::zero(&self.alphabet, self.ring);
        for (k, c) in &self.terms {
            insert(&mut t.terms, k[0].clone(), c.clone());
        }
        t
    }
}

impl fmt::Display for MultiTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "{c} ")?;
            }
            let parts: Vec<String> = k.iter().map(|m| m.display(&self.alphabet, "|")).collect();
            f.write_str(&parts.join(" ⊗ "))?;
        }
        Ok(())
    }
}

/// An element of `A[t]`, coefficients from the constant term up, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidPolynomial {
    ring: RingSpec,
    coeffs: Vec<Scalar>,
}

impl BraidPolynomial {
    pub fn new(ring: RingSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        BraidPolynomial { ring, coeffs }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl fmt::Display for BraidPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => alloc::format!("t^{i}"),
            };
            if i == 0 || mag != "1" {
                f.write_str(&mag)?;
            }
            f.write_str(&var)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

struct TensorParser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
    ring: RingSpec,
}

impl TensorParser<'_> {
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

    fn unexpected(&self) -> Error {
        match self.peek() {
            None => Error::Unexpected { found: "end of input".to_string(), pos: self.pos },
            Some(c) => Error::Unexpected { found: c.to_string(), pos: self.pos },
        }
    }

    fn sum(&mut self) -> Result<TensorElement> {
        let mut acc = TensorElement::zero(self.alphabet, self.ring);
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some('-') {
            negate = true;
            self.pos += 1;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let t = self.product()?;
            acc = acc.add(&if negate { t.neg() } else { t })?;
            self.skip_ws();
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(c) if c == '(' || c.is_ascii_alphanumeric() || c == '_')
    }

    fn product(&mut self) -> Result<TensorElement> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('|') | Some('*') => {
                    self.pos += 1;
                    self.skip_ws();
                    let f = self.factor()?;
                    acc = acc.concat(&f)?;
                }
                _ if self.starts_factor() => {
                    let f = self.factor()?;
                    acc = acc.concat(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<TensorElement> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(Error::UnbalancedBracket { pos: start });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let rest = &self.src[self.pos..];
                let mut len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
                if rest[len..].starts_with('/') {
                    let den = &rest[len + 1..];
                    len += 1 + den.find(|c: char| !c.is_ascii_digit()).unwrap_or(den.len());
                }
                let text = &rest[..len];
                self.pos += len;
                let s = self
                    .ring
                    .parse_scalar(text)
                    .map_err(|_| Error::MalformedScalar { text: text.to_string(), pos: start })?;
                Ok(TensorElement::monomial(self.alphabet, self.ring, Monomial::unit(), s))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let rest = &self.src[self.pos..];
                let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
                let name = &rest[..len];
                let g = self
                    .alphabet
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownGenerator { name: name.to_string(), pos: start })?;
                self.pos += len;
                Ok(TensorElement::pure(self.alphabet, self.ring, &[g]))
            }
            Some(')') => Err(Error::UnbalancedBracket { pos: start }),
            _ => Err(self.unexpected()),
        }
    }
}
