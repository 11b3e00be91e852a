//! Finitely presented groups and their truncated group rings.
//!
//! For `Γ = ⟨S | R⟩` the quotient `A[Γ]/I^N` is realized inside the Magnus monomials of
//! degree `< N`: it is `A⟨X_S⟩_{<N}` modulo the span of all sandwiches
//! `m₁·(M(r) - 1)·m₂` truncated at `N`. Invariants of weight `< N` are exactly the
//! functionals on monomials that kill this span.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::coalg::{Monomial, TensorElement};
use crate::coeff::{column_echelon, kernel_basis, smith_form, ColumnEchelon, Matrix, RingSpec, Scalar};
use crate::magnus::{magnus_expand, FreeGroupRingElement, TruncSeries};
use crate::words::{is_identifier, Alphabet, Word};
use crate::{Error, Result};

/// Largest number of monomials a truncated quotient may have.
pub const MAX_MONOMIALS: usize = 4096;
/// Largest number of sandwich generators a truncated quotient may have.
pub const MAX_SANDWICHES: usize = 60_000;

/// A finite presentation `⟨S | R⟩`; relators are stored freely reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(alphabet: &Alphabet, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            alphabet.check(r.alphabet())?;
        }
        let relators = relators.iter().map(Word::free_reduce).collect();
        Ok(Presentation { alphabet: alphabet.clone(), relators })
    }

    /// The free group on `alphabet`.
    pub fn free(alphabet: &Alphabet) -> Self {
        Presentation { alphabet: alphabet.clone(), relators: Vec::new() }
    }

    /// Parses the line format
    ///
    /// ```text
    /// gens: x y z
    /// rel: x^2
    /// rel: [x,y] z^-1
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored. `gens:` must come first.
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Alphabet> = None;
        let mut relators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: String| Error::Syntax { line: line_no, message };
            let (head, body) = line.split_once(':').ok_or_else(|| syntax("expected `gens:` or `rel:`".to_string()))?;
            match head.trim() {
                "gens" => {
                    if alphabet.is_some() {
                        return Err(syntax("generators declared twice".to_string()));
                    }
                    let names: Vec<&str> = body.split_whitespace().collect();
                    if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
                        return Err(syntax(format!("invalid generator name `{bad}`")));
                    }
                    alphabet = Some(Alphabet::new(names).map_err(|e| syntax(e.to_string()))?);
                }
                "rel" => {
                    let a = alphabet.as_ref().ok_or_else(|| syntax("`rel:` before `gens:`".to_string()))?;
                    let w = Word::parse(body, a).map_err(|e| syntax(e.to_string()))?;
                    relators.push(w.free_reduce());
                }
                other => return Err(syntax(format!("unknown declaration `{other}`"))),
            }
        }
        let alphabet =
            alphabet.ok_or_else(|| Error::Syntax { line: 0, message: "missing `gens:` line".to_string() })?;
        Ok(Presentation { alphabet, relators })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.alphabet)?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        Ok(())
    }
}

/// Depth of an element in the dimension series, as far as the truncation can tell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Depth {
    Exact(usize),
    /// At least the given bound (the truncation order).
    AtLeast(usize),
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Exact(k) => write!(f, "{k}"),
            Depth::AtLeast(n) => write!(f, "≥ {n}"),
        }
    }
}

/// A sandwich generator `m₁·(M(r) - 1)·m₂` of the relator ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sandwich {
    pub left: Monomial,
    pub relator: usize,
    pub right: Monomial,
}

/// Index of `m` among all monomials of degree `< N` in graded-lex order.
fn monomial_index(gens: usize, m: &Monomial) -> usize {
    let mut offset = 0;
    let mut layer = 1;
    for _ in 0..m.len() {
        offset += layer;
        layer *= gens;
    }
    offset + m.0.iter().fold(0, |acc, &g| acc * gens + g)
}

fn monomials_of_degree(gens: usize, d: usize) -> Vec<Monomial> {
    let all = Monomial::all_below(gens, d + 1);
    all.into_iter().filter(|m| m.len() == d).collect()
}

fn count_below(gens: usize, n: usize) -> usize {
    let mut total = 0usize;
    let mut layer = 1usize;
    for _ in 0..n {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(gens);
    }
    total
}

/// Enumerates sandwiches by total degree, then relator, then left monomial.
fn sandwiches(gens: usize, relators: usize, order: usize) -> Vec<Sandwich> {
    let mut out = Vec::new();
    if order < 2 {
        return out;
    }
    let by_degree: Vec<Vec<Monomial>> = (0..=order - 2).map(|d| monomials_of_degree(gens, d)).collect();
    for d in 0..=order - 2 {
        for relator in 0..relators {
            for p in 0..=d {
                for left in &by_degree[p] {
                    for right in &by_degree[d - p] {
                        out.push(Sandwich { left: left.clone(), relator, right: right.clone() });
                    }
                }
            }
        }
    }
    out
}

fn sandwich_count(gens: usize, relators: usize, order: usize) -> usize {
    if order < 2 {
        return 0;
    }
    let mut total = 0usize;
    let mut layer = 1usize;
    for d in 0..=order - 2 {
        total = total.saturating_add((d + 1).saturating_mul(layer));
        layer = layer.saturating_mul(gens);
    }
    total.saturating_mul(relators)
}

/// `M(r) - 1` truncated at `order`, as a term list.
fn shifted_magnus(r: &Word, ring: RingSpec, order: usize) -> Vec<(Monomial, Scalar)> {
    magnus_expand(r, ring, order)
        .terms()
        .iter()
        .filter(|(k, _)| !k.is_empty())
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect()
}

/// Value of the functional `t` on a sandwich.
fn sandwich_value(
    t: &BTreeMap<Monomial, Scalar>,
    s: &Sandwich,
    shifted: &[(Monomial, Scalar)],
    order: usize,
    ring: RingSpec,
) -> Scalar {
    let mut acc = ring.zero();
    for (k, c) in shifted {
        if s.left.len() + k.len() + s.right.len() >= order {
            break;
        }
        let m = s.left.concat(k).concat(&s.right);
        if let Some(v) = t.get(&m) {
            acc += &(v * c);
        }
    }
    acc
}

/// `A[Γ]/I^N` for a presented group, with its normal-form reduction.
#[derive(Clone, Debug)]
pub struct TruncatedQuotient {
    ring: RingSpec,
    presentation: Presentation,
    order: usize,
    monomials: Vec<Monomial>,
    sandwiches: Vec<Sandwich>,
    ideal: Matrix,
    echelon: ColumnEchelon,
    standard: Vec<usize>,
    torsion: Vec<BigInt>,
}

impl TruncatedQuotient {
    pub fn build(p: &Presentation, order: usize, ring: RingSpec) -> Result<Self> {
        assert!(order >= 1, "truncation order must be at least 1");
        let gens = p.alphabet.len();
        let m = count_below(gens, order);
        if m > MAX_MONOMIALS {
            return Err(Error::TooLarge { size: m, limit: MAX_MONOMIALS });
        }
        let c = sandwich_count(gens, p.relators.len(), order);
        if c > MAX_SANDWICHES {
            return Err(Error::TooLarge { size: c, limit: MAX_SANDWICHES });
        }
        let monomials = Monomial::all_below(gens, order);
        let sandwiches = sandwiches(gens, p.relators.len(), order);
        let shifted: Vec<_> = p.relators.iter().map(|r| shifted_magnus(r, ring, order)).collect();
        let mut ideal = Matrix::zeros(ring, m, sandwiches.len());
        for (j, s) in sandwiches.iter().enumerate() {
            for (k, c) in &shifted[s.relator] {
                if s.left.len() + k.len() + s.right.len() >= order {
                    break;
                }
                let row = monomial_index(gens, &s.left.concat(k).concat(&s.right));
                let v = ideal.get(row, j) + c;
                ideal.set(row, j, v);
            }
        }
        let echelon = column_echelon(&ideal);
        let mut standard = Vec::new();
        let mut pivots = echelon.pivots.iter().peekable();
        for r in 0..m {
            if pivots.peek() == Some(&&r) {
                pivots.next();
            } else {
                standard.push(r);
            }
        }
        let torsion = if ring == RingSpec::Integers && !sandwiches.is_empty() {
            smith_form(&ideal).divisors.into_iter().filter(|d| !d.is_zero_or_one()).collect()
        } else {
            Vec::new()
        };
        Ok(TruncatedQuotient {
            ring,
            presentation: p.clone(),
            order,
            monomials,
            sandwiches,
            ideal,
            echelon,
            standard,
            torsion,
        })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.presentation.alphabet
    }

    /// All monomials of degree `< N`, graded-lex; these index the rows of [`Self::ideal`].
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn sandwiches(&self) -> &[Sandwich] {
        &self.sandwiches
    }

    /// The ideal span: one column per sandwich generator.
    pub fn ideal(&self) -> &Matrix {
        &self.ideal
    }

    /// Rank of the quotient (of its free part over ℤ).
    pub fn rank(&self) -> usize {
        self.standard.len()
    }

    /// Monomials not reducible by the ideal. Their classes form a basis of the quotient
    /// over a field; over ℤ they span a full-rank sublattice of the free part. The
    /// filtration degree of each class is the monomial's degree.
    pub fn basis(&self) -> Vec<Monomial> {
        self.standard.iter().map(|&i| self.monomials[i].clone()).collect()
    }

    /// Torsion coefficients of the quotient over ℤ (elementary divisors other than 0, 1).
    pub fn elementary_divisors(&self) -> &[BigInt] {
        &self.torsion
    }

    fn series_vector(&self, v: &TruncSeries) -> Result<Vec<Scalar>> {
        self.alphabet().check(v.alphabet())?;
        if v.ring() != self.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: v.ring().to_string() });
        }
        if v.order() != self.order {
            return Err(Error::OrderMismatch { left: self.order, right: v.order() });
        }
        let gens = self.alphabet().len();
        let mut out = vec![self.ring.zero(); self.monomials.len()];
        for (k, c) in v.terms() {
            out[monomial_index(gens, k)] = c.clone();
        }
        Ok(out)
    }

    /// Canonical representative of `v` modulo the ideal (reduced echelon reduction over a
    /// field, Hermite reduction over ℤ).
    pub fn normal_form(&self, v: &TruncSeries) -> Result<TruncSeries> {
        let mut x = self.series_vector(v)?;
        let h = &self.echelon.form;
        for (k, &r) in self.echelon.pivots.iter().enumerate() {
            if x[r].is_zero() {
                continue;
            }
            let q = if self.ring.is_field() {
                x[r].checked_div(h.get(r, k)).expect("field pivot")
            } else {
                let a = x[r].as_integer().expect("integer");
                let p = h.get(r, k).as_integer().expect("integer");
                self.ring.from_bigint(&num_integer::Integer::div_floor(a, p))
            };
            if q.is_zero() {
                continue;
            }
            for (i, slot) in x.iter_mut().enumerate().skip(r) {
                let e = h.get(i, k);
                if !e.is_zero() {
                    *slot -= &(&q * e);
                }
            }
        }
        Ok(TruncSeries::from_terms(self.alphabet(), self.ring, self.order, self.monomials.iter().cloned().zip(x)))
    }

    /// Whether `v` lies in the relator ideal.
    pub fn in_ideal(&self, v: &TruncSeries) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// The largest `k` with `v ∈ ideal + span(degree ≥ k)`, read off the normal form.
    pub fn filtration(&self, v: &TruncSeries) -> Result<Depth> {
        Ok(match self.normal_form(v)?.valuation() {
            Some(k) => Depth::Exact(k),
            None => Depth::AtLeast(self.order),
        })
    }

    /// Depth of `w` in the dimension series: the filtration degree of `M(w) - 1`.
    pub fn dimension_depth(&self, w: &Word) -> Result<Depth> {
        self.alphabet().check(w.alphabet())?;
        let m = magnus_expand(w, self.ring, self.order);
        let v = m.sub(&TruncSeries::one(self.alphabet(), self.ring, self.order))?;
        self.filtration(&v)
    }

    fn check_tensor(&self, t: &TensorElement) -> Result<()> {
        self.alphabet().check(t.alphabet())?;
        if t.ring() != self.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: t.ring().to_string() });
        }
        if t.weight() >= self.order {
            return Err(Error::WeightTooLarge { weight: t.weight(), order: self.order });
        }
        Ok(())
    }

    /// `⟨T, Σ cᵢ wᵢ⟩`: the coefficient functional of `T` applied to `Σ cᵢ M(wᵢ)`.
    pub fn pair(&self, t: &TensorElement, combo: &FreeGroupRingElement) -> Result<Scalar> {
        self.check_tensor(t)?;
        self.alphabet().check(combo.alphabet())?;
        let m = combo.magnus(self.order);
        Ok(apply(t, &m))
    }

    pub fn pair_word(&self, t: &TensorElement, w: &Word) -> Result<Scalar> {
        self.pair(t, &FreeGroupRingElement::from_word(w, self.ring))
    }

    /// Basis of all invariants of weight `< N`.
    ///
    /// Computed as the annihilator of the ideal span with monomials ordered from the
    /// top down, so each element has a distinct leading monomial and is reduced against
    /// the others there. Elements are sorted by leading monomial.
    pub fn invariants(&self) -> InvariantBasis {
        let m = self.monomials.len();
        let ring = self.ring;
        // columns in descending graded-lex order
        let mut at = Matrix::zeros(ring, self.ideal.cols(), m);
        for j in 0..self.ideal.cols() {
            for i in 0..m {
                let v = self.ideal.get(i, j);
                if !v.is_zero() {
                    at.set(j, m - 1 - i, v.clone());
                }
            }
        }
        let mut elements: Vec<TensorElement> = kernel_basis(&at)
            .into_iter()
            .map(|v| {
                let terms = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (self.monomials[m - 1 - i].clone(), c));
                TensorElement::from_terms(self.alphabet(), ring, terms).expect("same ring")
            })
            .collect();
        elements.sort_by_key(leading_monomial);
        let basis = self.basis();
        let rows = elements
            .iter()
            .map(|t| basis.iter().map(|mono| t.terms().get(mono).cloned().unwrap_or_else(|| ring.zero())).collect())
            .collect();
        let pairing = Matrix::from_rows(ring, basis.len(), rows).expect("rectangular");
        InvariantBasis {
            ring,
            alphabet: self.alphabet().clone(),
            max_weight: self.order - 1,
            elements,
            quotient_basis: basis,
            pairing,
            elementary_divisors: (ring == RingSpec::Integers).then(|| self.torsion.clone()),
        }
    }
}

trait ZeroOrOne {
    fn is_zero_or_one(&self) -> bool;
}

impl ZeroOrOne for BigInt {
    fn is_zero_or_one(&self) -> bool {
        num_traits::Zero::is_zero(self) || self.abs().is_one()
    }
}

fn leading_monomial(t: &TensorElement) -> Monomial {
    t.terms().keys().next_back().cloned().unwrap_or_default()
}

/// `Σ_m T_m · v_m`.
pub(crate) fn apply(t: &TensorElement, v: &TruncSeries) -> Scalar {
    let mut acc = t.ring().zero();
    let (small, large) = (t.terms(), v.terms());
    for (k, c) in small {
        if let Some(x) = large.get(k) {
            acc += &(c * x);
        }
    }
    acc
}

/// A basis of the invariants of weight `≤ max_weight`.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    pub ring: RingSpec,
    pub alphabet: Alphabet,
    pub max_weight: usize,
    pub elements: Vec<TensorElement>,
    /// Standard monomials of the truncated quotient (see [`TruncatedQuotient::basis`]).
    pub quotient_basis: Vec<Monomial>,
    /// `pairing[i][j] = ⟨elements[i], quotient_basis[j]⟩`, the change of basis to the
    /// dual of the quotient basis.
    pub pairing: Matrix,
    /// Torsion coefficients of the quotient over ℤ; `None` over a field.
    pub elementary_divisors: Option<Vec<BigInt>>,
}

impl InvariantBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn weights(&self) -> Vec<usize> {
        self.elements.iter().map(TensorElement::weight).collect()
    }
}

pub fn invariants_basis(p: &Presentation, order: usize, ring: RingSpec) -> Result<InvariantBasis> {
    Ok(TruncatedQuotient::build(p, order, ring)?.invariants())
}

/// A failed lift: `T` is nonzero on `left·(M(r) - 1)·right`, which is the
/// multi-evaluation `ℓ_T(s_a | ... | r | ... | s_b)` along the letters of the monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub left: Monomial,
    pub relator: usize,
    pub relator_word: Word,
    pub right: Monomial,
    pub value: Scalar,
}

impl Witness {
    /// The words `s_a, ..., r, ..., s_b` of the equivalent multi-evaluation.
    pub fn words(&self) -> Vec<Word> {
        let a = self.relator_word.alphabet();
        let mut out: Vec<Word> = self.left.0.iter().map(|&g| Word::generator(a, g)).collect();
        out.push(self.relator_word.clone());
        out.extend(self.right.0.iter().map(|&g| Word::generator(a, g)));
        out
    }
}

/// Outcome of the lifting test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariance {
    pub invariant: bool,
    /// The truncation order used, `weight(T) + 1`.
    pub order: usize,
    pub witness: Option<Witness>,
}

/// Whether `T` annihilates every sandwich of the relator ideal at order `weight(T) + 1`.
pub fn is_invariant(p: &Presentation, t: &TensorElement) -> Result<Invariance> {
    p.alphabet.check(t.alphabet())?;
    let ring = t.ring();
    let order = t.weight() + 1;
    let shifted: Vec<_> = p.relators.iter().map(|r| shifted_magnus(r, ring, order)).collect();
    for s in sandwiches(p.alphabet.len(), p.relators.len(), order) {
        let value = sandwich_value(t.terms(), &s, &shifted[s.relator], order, ring);
        if !value.is_zero() {
            let relator_word = p.relators[s.relator].clone();
            return Ok(Invariance {
                invariant: false,
                order,
                witness: Some(Witness { left: s.left, relator: s.relator, relator_word, right: s.right, value }),
            });
        }
    }
    Ok(Invariance { invariant: true, order, witness: None })
}

/// A homomorphism from a free group on `source` to the group on `target`, given by
/// generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl GroupHom {
    pub fn new(source: &Alphabet, target: &Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() < source.len() {
            return Err(Error::MissingImage(source.name(images.len()).to_string()));
        }
        if images.len() > source.len() {
            return Err(Error::DimensionMismatch { expected: source.len(), found: images.len() });
        }
        for w in &images {
            target.check(w.alphabet())?;
        }
        Ok(GroupHom { source: source.clone(), target: target.clone(), images })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = (0..alphabet.len()).map(|g| Word::generator(alphabet, g)).collect();
        GroupHom { source: alphabet.clone(), target: alphabet.clone(), images }
    }

    /// Parses `s -> x y, t -> y^-1`; the source generators are the left-hand sides in
    /// order of appearance.
    pub fn parse(text: &str, target: &Alphabet) -> Result<Self> {
        let pairs = parse_assignments(text)?;
        let source = Alphabet::new(pairs.iter().map(|(n, _, _)| n.to_string())).map_err(|e| match e {
            Error::DuplicateGenerator(n) => Error::DuplicateImage(n),
            other => other,
        })?;
        let mut images = Vec::new();
        for (_, body, pos) in pairs {
            images.push(Word::parse(body, target).map_err(|e| shift_error(e, pos))?.free_reduce());
        }
        Ok(GroupHom { source, target: target.clone(), images })
    }

    /// Parses assignments for a fixed source alphabet; every generator needs an image.
    pub fn parse_with_source(text: &str, source: &Alphabet, target: &Alphabet) -> Result<Self> {
        let pairs = parse_assignments(text)?;
        let mut images: Vec<Option<Word>> = vec![None; source.len()];
        for (name, body, pos) in pairs {
            let g = source.index_of(name).ok_or_else(|| Error::UnknownGenerator { name: name.to_string(), pos })?;
            if images[g].is_some() {
                return Err(Error::DuplicateImage(name.to_string()));
            }
            images[g] = Some(Word::parse(body, target).map_err(|e| shift_error(e, pos))?.free_reduce());
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(g, w)| w.ok_or_else(|| Error::MissingImage(source.name(g).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupHom { source: source.clone(), target: target.clone(), images })
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.source.check(w.alphabet())?;
        w.substitute(&self.target, &self.images)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        self.source.check(&other.target)?;
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>>>()?;
        Ok(GroupHom { source: other.source.clone(), target: self.target.clone(), images })
    }
}

impl fmt::Display for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, w) in self.images.iter().enumerate() {
            if g > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} -> {}", self.source.name(g), w)?;
        }
        Ok(())
    }
}

fn shift_error(e: Error, by: usize) -> Error {
    match e {
        Error::UnknownGenerator { name, pos } => Error::UnknownGenerator { name, pos: pos + by },
        Error::MalformedExponent { pos } => Error::MalformedExponent { pos: pos + by },
        Error::UnbalancedBracket { pos } => Error::UnbalancedBracket { pos: pos + by },
        Error::Unexpected { found, pos } => Error::Unexpected { found, pos: pos + by },
        other => other,
    }
}

/// Splits `a -> w1, b -> w2` at top-level commas: `(name, body, body offset)`.
fn parse_assignments(text: &str) -> Result<Vec<(&str, &str, usize)>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' | ';' if depth == 0 => {
                parts.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &text[start..]));
    let mut out = Vec::new();
    for (offset, part) in parts {
        if part.trim().is_empty() {
            continue;
        }
        let arrow = part.find("->").ok_or_else(|| Error::Unexpected {
            found: part.trim().to_string(),
            pos: offset + (part.len() - part.trim_start().len()),
        })?;
        let name = part[..arrow].trim();
        if !is_identifier(name) {
            return Err(Error::InvalidIdentifier(name.to_string()));
        }
        out.push((name, &part[arrow + 2..], offset + arrow + 2));
    }
    Ok(out)
}

/// `h*(T)`: the coefficient at `(s₁, ..., s_k)` is `⟨T, (h(s₁) - 1) ⋯ (h(s_k) - 1)⟩`,
/// and the unit coefficient is `η(T)`.
pub fn pullback(h: &GroupHom, t: &TensorElement, q: &TruncatedQuotient) -> Result<TensorElement> {
    q.check_tensor(t)?;
    h.target.check(t.alphabet())?;
    let ring = t.ring();
    let order = t.weight() + 1;
    let one = TruncSeries::one(&h.target, ring, order);
    let shifted: Vec<TruncSeries> =
        h.images.iter().map(|w| magnus_expand(w, ring, order).sub(&one)).collect::<Result<Vec<_>>>()?;
    let mut terms: Vec<(Monomial, Scalar)> = vec![(Monomial::unit(), t.counit())];
    let mut stack: Vec<(Vec<usize>, TruncSeries)> = vec![(Vec::new(), one)];
    while let Some((key, prod)) = stack.pop() {
        if key.len() == t.weight() {
            continue;
        }
        for (g, s) in shifted.iter().enumerate() {
            let next = prod.mul(s)?;
            if next.is_zero() {
                continue;
            }
            let mut k = key.clone();
            k.push(g);
            let v = apply(t, &next);
            terms.push((Monomial(k.clone()), v));
            stack.push((k, next));
        }
    }
    TensorElement::from_terms(&h.source, ring, terms)
}
