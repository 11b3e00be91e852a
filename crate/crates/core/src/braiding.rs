//! Letter-braiding numbers and polynomials of free-group words.
//!
//! A word `w` of length `n` is modelled as a circle subdivided into `n + 1` segments:
//! segment `i ≥ 1` carries letter `i`, segment 0 is the standard segment. Vertex `i`
//! sits between segments `i - 1` and `i` (indices mod `n + 1`). A 1-form on the circle
//! is a [`CircleForm`]: its value at index 0 is the coefficient of `t = δ₀` (the
//! standard segment), its values at `1..=n` are the `f dx` part. Pulling a tensor of
//! functionals back to the circle and reducing its weight yields the braiding
//! polynomial.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::coalg::{BraidPolynomial, Functional, Monomial, TensorElement};
use crate::coeff::{RingSpec, Scalar};
use crate::words::Word;
use crate::{Error, Result};

/// A word viewed as a subdivided circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleWord {
    word: Word,
}

impl CircleWord {
    pub fn new(word: &Word) -> Self {
        CircleWord { word: word.clone() }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Number of letter segments.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `(∂₀, ∂₁)` of segment `i`: start and end vertex along its orientation.
    pub fn boundary(&self, i: usize) -> (usize, usize) {
        let m = self.n() + 1;
        if i == 0 {
            return (0, 1 % m);
        }
        let (a, b) = (i, (i + 1) % m);
        if self.word.letters()[i - 1].inverse {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// `dF` of a vertex function: `F(i+1) - F(i)` on segment `i`, all indices mod `n + 1`.
    pub fn differential(&self, g: &[Scalar]) -> CircleForm {
        let m = self.n() + 1;
        assert_eq!(g.len(), m, "vertex function length");
        CircleForm { values: (0..m).map(|i| &g[(i + 1) % m] - &g[i]).collect() }
    }

    /// The cup product `h ⌣ g` of a 1-form with a vertex function: `h(i) · g(∂₁ i)`.
    pub fn cup_right(&self, h: &CircleForm, g: &[Scalar]) -> CircleForm {
        let values = (0..=self.n()).map(|i| &h.values[i] * &g[self.boundary(i).1]).collect();
        CircleForm { values }
    }

    /// The cup product `g ⌣ h` of a vertex function with a 1-form: `g(∂₀ i) · h(i)`.
    pub fn cup_left(&self, g: &[Scalar], h: &CircleForm) -> CircleForm {
        let values = (0..=self.n()).map(|i| &g[self.boundary(i).0] * &h.values[i]).collect();
        CircleForm { values }
    }
}

/// A 1-cochain on a subdivided circle, indexed by segments `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CircleForm {
    values: Vec<Scalar>,
}

impl CircleForm {
    pub fn new(values: Vec<Scalar>) -> Self {
        assert!(!values.is_empty(), "a circle has at least the standard segment");
        CircleForm { values }
    }

    /// The form `t = δ₀` on a circle with `n` letter segments.
    pub fn t(ring: RingSpec, n: usize) -> Self {
        let mut values = vec![ring.zero(); n + 1];
        values[0] = ring.one();
        CircleForm { values }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Coefficient of `δ₀`.
    pub fn delta0(&self) -> &Scalar {
        &self.values[0]
    }

    /// The `f dx` part (the same form with the standard segment zeroed).
    pub fn fdx_part(&self) -> CircleForm {
        let mut values = self.values.clone();
        values[0] = values[0].ring().zero();
        CircleForm { values }
    }

    /// `∫ f dx = f(1) + ... + f(n)`.
    pub fn integral(&self) -> Scalar {
        let mut acc = self.values[0].ring().zero();
        for v in &self.values[1..] {
            acc += v;
        }
        acc
    }

    fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }
}

/// `w̃*(α)`: the value on segment `i ≥ 1` is `±α(gen)` with the sign of letter `i`.
pub fn pullback_to_circle(alpha: &Functional, w: &Word) -> Result<CircleForm> {
    alpha.alphabet().check(w.alphabet())?;
    let ring = alpha.coeffs().first().map_or(RingSpec::Integers, Scalar::ring);
    let mut values = Vec::with_capacity(w.len() + 1);
    values.push(ring.zero());
    for l in w.letters() {
        let v = alpha.eval(l.gen);
        values.push(if l.inverse { -v } else { v.clone() });
    }
    Ok(CircleForm { values })
}

fn pullback_dual(ring: RingSpec, gen: usize, w: &Word) -> CircleForm {
    let mut values = Vec::with_capacity(w.len() + 1);
    values.push(ring.zero());
    for l in w.letters() {
        values.push(if l.gen != gen {
            ring.zero()
        } else if l.inverse {
            -ring.one()
        } else {
            ring.one()
        });
    }
    CircleForm { values }
}

/// `d⁻¹(f dx)`: the vertex function `g` with `g(0) = 0` and `g(j) = -(f(j) + ... + f(n))`,
/// so that `dg = f dx - (∫ f dx)·δ₀`.
pub fn cobound(fdx: &CircleForm) -> Result<Vec<Scalar>> {
    if !fdx.delta0().is_zero() {
        return Err(Error::NonzeroStandardPart);
    }
    Ok(cobound_unchecked(&fdx.values))
}

fn cobound_unchecked(f: &[Scalar]) -> Vec<Scalar> {
    let n = f.len() - 1;
    let ring = f[0].ring();
    let mut g = vec![ring.zero(); n + 1];
    let mut tail = ring.zero();
    for j in (1..=n).rev() {
        tail += &f[j];
        g[j] = -&tail;
    }
    g
}

/// A factor of a bar tensor on the circle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Factor {
    /// The class `t = δ₀`.
    T,
    Form(CircleForm),
}

/// A formal combination of bar tensors `[a₁ | ... | a_r]` of 1-forms on one circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarTensor {
    circle: CircleWord,
    ring: RingSpec,
    terms: Vec<(Scalar, Vec<Factor>)>,
}

impl BarTensor {
    pub fn new(circle: CircleWord, ring: RingSpec) -> Self {
        BarTensor { circle, ring, terms: Vec::new() }
    }

    pub fn push(&mut self, coeff: Scalar, factors: Vec<Factor>) {
        self.terms.push((coeff, factors));
    }

    /// The pullback of a tensor to the circle of `w`.
    pub fn pullback(t: &TensorElement, w: &Word) -> Result<Self> {
        t.alphabet().check(w.alphabet())?;
        let ring = t.ring();
        let mut out = BarTensor::new(CircleWord::new(w), ring);
        for (k, c) in t.terms() {
            let factors = k.0.iter().map(|&g| Factor::Form(pullback_dual(ring, g, w))).collect();
            out.push(c.clone(), factors);
        }
        Ok(out)
    }

    pub fn circle(&self) -> &CircleWord {
        &self.circle
    }

    pub fn terms(&self) -> &[(Scalar, Vec<Factor>)] {
        &self.terms
    }

    /// Modified weight: the largest number of non-`t` factors in a term.
    pub fn modified_weight(&self) -> usize {
        self.terms.iter().map(|(_, fs)| fs.iter().filter(|f| matches!(f, Factor::Form(_))).count()).max().unwrap_or(0)
    }
}

/// Internal factor: `t`, or the `f` values of a pure `f dx` form (index 0 is zero).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Pure {
    T,
    F(Vec<Scalar>),
}

struct Reducer<'a> {
    circle: &'a CircleWord,
    ring: RingSpec,
    memo: BTreeMap<Vec<Pure>, Vec<Scalar>>,
}

fn poly_add_scaled(acc: &mut Vec<Scalar>, p: &[Scalar], s: &Scalar, shift: usize, ring: RingSpec) {
    if s.is_zero() {
        return;
    }
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, ring.zero());
    }
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            acc[i + shift] += &(c * s);
        }
    }
}

impl Reducer<'_> {
    /// The polynomial in `t` cohomologous to `[core]`, pivoting on the rightmost form.
    fn reduce(&mut self, core: &[Pure]) -> Vec<Scalar> {
        let ring = self.ring;
        let d = core.iter().rev().take_while(|f| matches!(f, Pure::T)).count();
        if core.len() == d {
            let mut p = vec![ring.zero(); d + 1];
            p[d] = ring.one();
            return p;
        }
        if let Some(p) = self.memo.get(core) {
            return p.clone();
        }
        let mut out = Vec::new();
        if d > 0 {
            let inner = self.reduce(&core[..core.len() - d]);
            poly_add_scaled(&mut out, &inner, &ring.one(), d, ring);
        } else {
            let k = core.len() - 1;
            let Pure::F(f) = &core[k] else { unreachable!() };
            let integral = f[1..].iter().fold(ring.zero(), |a, b| &a + b);
            let g = cobound_unchecked(f);
            if !integral.is_zero() {
                let inner = self.reduce(&core[..k]);
                poly_add_scaled(&mut out, &inner, &integral, 1, ring);
            }
            if k > 0 {
                // [.. | a | dg] ~ -[.. | a ⌣ g]; split a ⌣ g into its f dx and δ₀ parts
                let minus_one = -ring.one();
                let mut prefix = core[..k - 1].to_vec();
                match &core[k - 1] {
                    Pure::T => {
                        // t ⌣ g = -(∫ f dx)·t
                        if !integral.is_zero() {
                            prefix.push(Pure::T);
                            let inner = self.reduce(&prefix);
                            poly_add_scaled(&mut out, &inner, &integral, 0, ring);
                        }
                    }
                    Pure::F(a) => {
                        let cup = self.circle.cup_right(&CircleForm { values: a.clone() }, &g);
                        let t_part = cup.values[0].clone();
                        let fdx = cup.fdx_part();
                        if !fdx.is_zero() {
                            prefix.push(Pure::F(fdx.values));
                            let inner = self.reduce(&prefix);
                            poly_add_scaled(&mut out, &inner, &minus_one, 0, ring);
                            prefix.pop();
                        }
                        if !t_part.is_zero() {
                            prefix.push(Pure::T);
                            let inner = self.reduce(&prefix);
                            poly_add_scaled(&mut out, &inner, &-t_part, 0, ring);
                        }
                    }
                }
            }
        }
        self.memo.insert(core.to_vec(), out.clone());
        out
    }
}

/// Expands general factors `α = f dx + a·δ₀` into pure ones.
fn split_factors(factors: &[Factor], ring: RingSpec) -> Vec<(Scalar, Vec<Pure>)> {
    let mut acc: Vec<(Scalar, Vec<Pure>)> = vec![(ring.one(), Vec::new())];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (c, fs) in acc {
            match f {
                Factor::T => {
                    let mut v = fs;
                    v.push(Pure::T);
                    next.push((c, v));
                }
                Factor::Form(form) => {
                    let a = form.delta0();
                    if !a.is_zero() {
                        let mut v = fs.clone();
                        v.push(Pure::T);
                        next.push((&c * a, v));
                    }
                    let fdx = form.fdx_part();
                    if !fdx.is_zero() {
                        let mut v = fs;
                        v.push(Pure::F(fdx.values));
                        next.push((c, v));
                    }
                }
            }
        }
        acc = next;
    }
    acc
}

/// Weight reduction: the unique polynomial in `t` cohomologous to the bar tensor.
pub fn weight_reduce(b: &BarTensor) -> BraidPolynomial {
    let ring = b.ring;
    let mut r = Reducer { circle: &b.circle, ring, memo: BTreeMap::new() };
    let mut out = Vec::new();
    for (c, factors) in &b.terms {
        for (s, core) in split_factors(factors, ring) {
            let p = r.reduce(&core);
            poly_add_scaled(&mut out, &p, &(c * &s), 0, ring);
        }
    }
    BraidPolynomial::new(ring, out)
}

/// Iterated sum over chains `i₁ ≤ ... ≤ i_r` of letter positions, where a step from a
/// positive letter must advance and a step from an inverse letter may stay. Each
/// position contributes the sign-extended value of its factor on that letter.
fn chain_sum(ring: RingSpec, w: &Word, value: impl Fn(usize, usize) -> Scalar, r: usize) -> Scalar {
    let n = w.len();
    if r == 0 {
        return ring.one();
    }
    // suffix[i] = Σ_{j ≥ i} S_{k+1}(j), positions 0-based, suffix[n] = 0
    let mut suffix = vec![ring.zero(); n + 1];
    for k in (0..r).rev() {
        let mut s = vec![ring.zero(); n];
        for (i, l) in w.letters().iter().enumerate() {
            let v = value(k, i);
            if v.is_zero() {
                continue;
            }
            s[i] = if k == r - 1 {
                v
            } else {
                let next = if l.inverse { i } else { i + 1 };
                &v * &suffix[next]
            };
        }
        let mut acc = ring.zero();
        for i in (0..n).rev() {
            acc += &s[i];
            suffix[i] = acc.clone();
        }
        suffix[n] = ring.zero();
    }
    suffix[0].clone()
}

fn signed(ring: RingSpec, v: &Scalar, inverse: bool) -> Scalar {
    if v.is_zero() {
        ring.zero()
    } else if inverse {
        -v
    } else {
        v.clone()
    }
}

/// The letter-braiding number of `α₁ | ... | α_r` on `w` as an iterated sum.
pub fn iterated_sum(ring: RingSpec, factors: &[Functional], w: &Word) -> Result<Scalar> {
    for f in factors {
        f.alphabet().check(w.alphabet())?;
        if let Some(c) = f.coeffs().iter().find(|c| c.ring() != ring) {
            return Err(Error::RingMismatch { left: ring.to_string(), right: c.ring().to_string() });
        }
    }
    let letters = w.letters();
    Ok(chain_sum(ring, w, |k, i| signed(ring, factors[k].eval(letters[i].gen), letters[i].inverse), factors.len()))
}

/// Braiding number of a pure key `X_i1 | ... | X_ir`.
pub(crate) fn key_number(ring: RingSpec, key: &[usize], w: &Word) -> Scalar {
    let letters = w.letters();
    let one = ring.one();
    chain_sum(
        ring,
        w,
        |k, i| {
            if letters[i].gen == key[k] {
                signed(ring, &one, letters[i].inverse)
            } else {
                ring.zero()
            }
        },
        key.len(),
    )
}

fn check(t: &TensorElement, w: &Word) -> Result<()> {
    t.alphabet().check(w.alphabet())
}

/// `ℓ_T(w)`: linear in `T`, the unit part contributes nothing.
pub fn braiding_number(t: &TensorElement, w: &Word) -> Result<Scalar> {
    check(t, w)?;
    let ring = t.ring();
    let mut acc = ring.zero();
    for (k, c) in t.terms() {
        if !k.is_empty() {
            acc += &(c * &key_number(ring, &k.0, w));
        }
    }
    Ok(acc)
}

/// The pairing `⟨T, w⟩ = η(T) + ℓ_T(w)`.
pub(crate) fn pairing(t: &TensorElement, w: &Word) -> Scalar {
    let ring = t.ring();
    let mut acc = ring.zero();
    for (k, c) in t.terms() {
        acc += &(c * &key_number(ring, &k.0, w));
    }
    acc
}

/// `L_T(w) = η(T) + Σ_k ℓ(w)^{⊗k+1}(Δ̄^k T) t^{k+1}`.
fn reconstruct(t: &TensorElement, w: &Word) -> BraidPolynomial {
    let ring = t.ring();
    let mut coeffs = vec![t.counit()];
    let mut cache: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for k in 0..t.weight() {
        let d = t.iterated_reduced_coproduct(k);
        let mut acc = ring.zero();
        for (parts, c) in d.terms() {
            let mut prod = c.clone();
            for m in parts {
                let v = cache.entry(m.clone()).or_insert_with(|| key_number(ring, &m.0, w));
                prod = &prod * &*v;
                if prod.is_zero() {
                    break;
                }
            }
            acc += &prod;
        }
        coeffs.push(acc);
    }
    BraidPolynomial::new(ring, coeffs)
}

/// The braiding polynomial, by weight reduction of the pullback to the circle.
///
/// In debug builds it is cross-checked against the coproduct reconstruction.
pub fn braiding_polynomial(t: &TensorElement, w: &Word) -> Result<BraidPolynomial> {
    check(t, w)?;
    let reduced = weight_reduce(&BarTensor::pullback(t, w)?);
    debug_assert_eq!(reduced, reconstruct(t, w), "weight reduction disagrees with reconstruction");
    Ok(reduced)
}

/// The braiding polynomial via the coproduct reconstruction only.
pub fn braiding_polynomial_by_coproduct(t: &TensorElement, w: &Word) -> Result<BraidPolynomial> {
    check(t, w)?;
    Ok(reconstruct(t, w))
}

/// `ℓ_T(w₀ | ... | w_n) = ⟨T, (w₀ - 1) ⋯ (w_n - 1)⟩`, by inclusion-exclusion over
/// sub-products of the words.
pub fn multi_evaluation(t: &TensorElement, words: &[Word]) -> Result<Scalar> {
    for w in words {
        check(t, w)?;
    }
    let ring = t.ring();
    let m = words.len();
    assert!(m < 24, "too many words for inclusion-exclusion");
    let mut acc = ring.zero();
    for mask in 0u32..(1 << m) {
        let mut w = Word::identity(t.alphabet());
        for (i, wi) in words.iter().enumerate() {
            if mask & (1 << i) != 0 {
                w = w.concat(wi)?;
            }
        }
        let v = pairing(t, &w);
        if (m as u32 - mask.count_ones()).is_multiple_of(2) {
            acc += &v;
        } else {
            acc -= &v;
        }
    }
    Ok(acc)
}

/// Both sides of `ℓ_T(w₁w₂) = ℓ_T(w₁) + ℓ_T(w₂) + Σ ℓ_{T'}(w₁)ℓ_{T''}(w₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCheck {
    pub lhs: Scalar,
    pub left: Scalar,
    pub right: Scalar,
    /// The coproduct term `Σ ℓ_{T'}(w₁)ℓ_{T''}(w₂)` over `Δ̄T = Σ T' ⊗ T''`.
    pub cross: Scalar,
}

impl ProductCheck {
    pub fn rhs(&self) -> Scalar {
        &(&self.left + &self.right) + &self.cross
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs()
    }
}

pub fn product_check(t: &TensorElement, w1: &Word, w2: &Word) -> Result<ProductCheck> {
    check(t, w1)?;
    check(t, w2)?;
    let ring = t.ring();
    let lhs = braiding_number(t, &w1.concat(w2)?)?;
    let left = braiding_number(t, w1)?;
    let right = braiding_number(t, w2)?;
    let mut cross = ring.zero();
    for (parts, c) in t.reduced_coproduct().terms() {
        let a = key_number(ring, &parts[0].0, w1);
        if a.is_zero() {
            continue;
        }
        cross += &(&(c * &a) * &key_number(ring, &parts[1].0, w2));
    }
    Ok(ProductCheck { lhs, left, right, cross })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn setup() -> (Alphabet, RingSpec) {
        (Alphabet::parse("x y").unwrap(), RingSpec::Integers)
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| RingSpec::Integers.from_i64(x)).collect()
    }

    #[test]
    fn pullback_values() {
        let (a, z) = setup();
        let x = Functional::dual(&a, z, 0);
        let w = Word::parse("[x*y, x^-2]", &a).unwrap().free_reduce();
        assert_eq!(pullback_to_circle(&x, &w).unwrap().values(), &ints(&[0, 1, 0, -1, -1, 0, 1])[..]);
        let y = Word::parse("y", &a).unwrap();
        assert_eq!(pullback_to_circle(&x, &y).unwrap().values(), &ints(&[0, 0])[..]);
        let xi = Word::parse("x^-1", &a).unwrap();
        assert_eq!(pullback_to_circle(&x, &xi).unwrap().values(), &ints(&[0, -1])[..]);
    }

    #[test]
    fn cobound_examples() {
        let (a, z) = setup();
        assert_eq!(cobound(&CircleForm::new(ints(&[0, 1, 0]))).unwrap(), ints(&[0, -1, 0]));
        assert_eq!(cobound(&CircleForm::new(ints(&[0, 0, 0]))).unwrap(), ints(&[0, 0, 0]));
        assert_eq!(cobound(&CircleForm::new(ints(&[1, 0]))), Err(Error::NonzeroStandardPart));
        let w = Word::parse("[x*y, x^-2]", &a).unwrap().free_reduce();
        let f = pullback_to_circle(&Functional::dual(&a, z, 0), &w).unwrap();
        let g = cobound(&f).unwrap();
        let circle = CircleWord::new(&w);
        let mut expected = f.values().to_vec();
        expected[0] = -f.integral();
        assert_eq!(circle.differential(&g).values(), &expected[..]);
    }

    #[test]
    fn reduce_examples() {
        let (a, z) = setup();
        let w = Word::parse("[x*y, x^-2]", &a).unwrap().free_reduce();
        let t = TensorElement::pure(&a, z, &[0, 0, 1, 0]);
        let p = weight_reduce(&BarTensor::pullback(&t, &w).unwrap());
        assert_eq!(p.coeff(1).to_string(), "-1");
        let x = Word::parse("x", &a).unwrap();
        let p = weight_reduce(&BarTensor::pullback(&TensorElement::pure(&a, z, &[0]), &x).unwrap());
        assert_eq!(p.to_string(), "t");
        let empty = BarTensor::pullback(&TensorElement::unit(&a, z), &x).unwrap();
        assert_eq!(weight_reduce(&empty).to_string(), "1");
        let xx = Word::parse("x^2", &a).unwrap();
        let p = braiding_polynomial(&TensorElement::pure(&a, z, &[0, 0]), &xx).unwrap();
        assert_eq!(p.to_string(), "t + 4t^2");
    }

    #[test]
    fn general_forms_split() {
        let (a, z) = setup();
        let x = Word::parse("x y", &a).unwrap();
        let circle = CircleWord::new(&x);
        let mut b = BarTensor::new(circle, z);
        // (X + 2t) | Y
        b.push(
            z.one(),
            vec![Factor::Form(CircleForm::new(ints(&[2, 1, 0]))), Factor::Form(CircleForm::new(ints(&[0, 0, 1])))],
        );
        // [X|Y] = t + t^2 and [t|Y] = [t|t] + [t] since Y = dg + t on this circle
        assert_eq!(weight_reduce(&b).to_string(), "3t + 3t^2");
    }

    #[test]
    fn iterated_sum_examples() {
        let (a, z) = setup();
        let (x, y) = (Functional::dual(&a, z, 0), Functional::dual(&a, z, 1));
        let c = Word::parse("[x,y]", &a).unwrap();
        assert_eq!(iterated_sum(z, &[x.clone(), y.clone()], &c).unwrap().to_string(), "1");
        assert_eq!(iterated_sum(z, &[y.clone(), x.clone()], &c).unwrap().to_string(), "-1");
        let xi = Word::parse("x^-1", &a).unwrap();
        for r in 0..5 {
            let fs = vec![x.clone(); r];
            let expected = if r % 2 == 0 { "1" } else { "-1" };
            assert_eq!(iterated_sum(z, &fs, &xi).unwrap().to_string(), expected);
        }
        let xy = Word::parse("x y", &a).unwrap();
        assert_eq!(iterated_sum(z, &[x.clone(), y.clone()], &xy).unwrap().to_string(), "1");
        assert_eq!(iterated_sum(z, &[y, x], &xy).unwrap().to_string(), "0");
    }

    #[test]
    fn numbers_and_multi_evaluations() {
        let (a, z) = setup();
        let w = Word::parse("[x*y, x^-2]", &a).unwrap();
        let t = |s: &str| TensorElement::parse(s, &a, z).unwrap();
        assert_eq!(braiding_number(&t("x|x|y|x"), &w).unwrap().to_string(), "-1");
        assert_eq!(braiding_number(&t("x|y|x|x"), &w).unwrap().to_string(), "1");
        let x5 = Word::parse("x^5", &a).unwrap();
        assert_eq!(braiding_polynomial(&t("x"), &x5).unwrap().to_string(), "5t");
        let x = Word::parse("x", &a).unwrap();
        let y = Word::parse("y", &a).unwrap();
        assert_eq!(multi_evaluation(&t("x|y"), &[x.clone(), y.clone()]).unwrap().to_string(), "1");
        assert_eq!(multi_evaluation(&t("x"), &[x.clone(), y.clone()]).unwrap().to_string(), "0");
        assert_eq!(multi_evaluation(&t("x|y"), &[y.clone(), x.clone()]).unwrap().to_string(), "0");
        let pc = product_check(&t("x|y"), &x, &y).unwrap();
        assert_eq!((pc.lhs.to_string(), pc.cross.to_string()), ("1".into(), "1".into()));
        assert!(pc.holds());
        let pc = product_check(&t("x|x"), &x, &x).unwrap();
        assert_eq!(pc.lhs.to_string(), "1");
        assert!(pc.holds());
    }
}
