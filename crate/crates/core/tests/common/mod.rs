#![allow(dead_code)]

use letterbraid_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(names: &str) -> Alphabet {
    Alphabet::parse(names).unwrap()
}

pub fn word(text: &str, a: &Alphabet) -> Word {
    Word::parse(text, a).unwrap()
}

pub fn tensor(text: &str, a: &Alphabet, ring: RingSpec) -> TensorElement {
    TensorElement::parse(text, a, ring).unwrap()
}

pub fn random_word(rng: &mut impl Rng, a: &Alphabet, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| Letter::new(rng.gen_range(0..a.len()), rng.gen_bool(0.5))).collect();
    Word::from_letters(a, letters)
}

pub fn random_key(rng: &mut impl Rng, gens: usize, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..gens)).collect()
}

/// A few terms of weight `≤ max_weight` with small integer coefficients.
pub fn random_tensor(
    rng: &mut impl Rng,
    a: &Alphabet,
    ring: RingSpec,
    max_weight: usize,
    terms: usize,
) -> TensorElement {
    let items: Vec<(Monomial, Scalar)> = (0..terms)
        .map(|_| {
            let len = rng.gen_range(0..=max_weight);
            (Monomial(random_key(rng, a.len(), len)), ring.from_i64(rng.gen_range(-3..=3)))
        })
        .collect();
    TensorElement::from_terms(a, ring, items).unwrap()
}

/// Homogeneous of the given weight.
pub fn random_homogeneous(
    rng: &mut impl Rng,
    a: &Alphabet,
    ring: RingSpec,
    weight: usize,
    terms: usize,
) -> TensorElement {
    let items: Vec<(Monomial, Scalar)> = (0..terms)
        .map(|_| (Monomial(random_key(rng, a.len(), weight)), ring.from_i64(rng.gen_range(-3..=3))))
        .collect();
    TensorElement::from_terms(a, ring, items).unwrap()
}

/// All words of exactly `len` letters, signs included.
pub fn all_words(a: &Alphabet, len: usize) -> Vec<Word> {
    let choices = 2 * a.len();
    let total = choices.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let letters = (0..len)
                .map(|_| {
                    let c = code % choices;
                    code /= choices;
                    Letter::new(c / 2, c % 2 == 1)
                })
                .collect();
            Word::from_letters(a, letters)
        })
        .collect()
}

/// All keys of exactly `len` letters.
pub fn all_keys(gens: usize, len: usize) -> Vec<Vec<usize>> {
    Monomial::all_below(gens, len + 1).into_iter().filter(|m| m.len() == len).map(|m| m.0).collect()
}

/// `[[g0, g1], g2], ...]`, a left-normed commutator of `k` generators (`k ≥ 2`), or the
/// generator itself for `k = 1`.
pub fn left_normed(a: &Alphabet, gens: &[usize]) -> Word {
    let mut w = Word::generator(a, gens[0]);
    for &g in &gens[1..] {
        w = w.commutator(&Word::generator(a, g)).unwrap();
    }
    w
}

pub fn heisenberg_presentation() -> Presentation {
    Presentation::parse("gens: x y z\nrel: x^2\nrel: y^2\nrel: z^2\nrel: [x,y] z^-1\n").unwrap()
}

/// Upper unitriangular 3×3 matrices over 𝔽₂; `(a, b, c)` at index `4a + 2b + c` for
/// `[[1, a, c], [0, 1, b], [0, 0, 1]]`.
pub fn heisenberg_table() -> FiniteGroupTable {
    let decode = |g: usize| (g >> 2 & 1, g >> 1 & 1, g & 1);
    let mul = (0..8)
        .map(|g| {
            (0..8)
                .map(|h| {
                    let (a, b, c) = decode(g);
                    let (d, e, f) = decode(h);
                    4 * ((a + d) % 2) + 2 * ((b + e) % 2) + (c + f + a * e) % 2
                })
                .collect()
        })
        .collect();
    FiniteGroupTable::new(mul, vec![("x".into(), 4), ("y".into(), 2), ("z".into(), 1)]).unwrap()
}

/// The finite fixture groups with their natural presentations.
pub fn finite_fixtures() -> Vec<(&'static str, Presentation, FiniteGroupTable)> {
    let cyc = |n: usize| {
        (Presentation::parse(&format!("gens: x\nrel: x^{n}\n")).unwrap(), FiniteGroupTable::cyclic(n, "x").unwrap())
    };
    let (c2p, c2) = cyc(2);
    let (c3p, c3) = cyc(3);
    let (c4p, c4) = cyc(4);
    let (c5p, c5) = cyc(5);
    let klein =
        FiniteGroupTable::cyclic(2, "x").unwrap().direct_product(&FiniteGroupTable::cyclic(2, "y").unwrap()).unwrap();
    let kleinp = Presentation::parse("gens: x y\nrel: x^2\nrel: y^2\nrel: [x,y]\n").unwrap();
    vec![
        ("C2", c2p, c2),
        ("C4", c4p, c4),
        ("C2xC2", kleinp, klein),
        ("C3", c3p, c3),
        ("C5", c5p, c5),
        ("Heisenberg", heisenberg_presentation(), heisenberg_table()),
    ]
}

pub fn pb3() -> Presentation {
    Presentation::parse("gens: a12 a13 a23\nrel: [a12 a13 a23, a13]\nrel: [a12 a13 a23, a23]\n").unwrap()
}

pub fn surface2() -> Presentation {
    Presentation::parse("gens: a1 b1 a2 b2\nrel: [a1,b1][a2,b2]\n").unwrap()
}

/// `⟨T, Π(wᵢ - 1)⟩` computed in the free group ring, then through the Magnus map.
pub fn ring_multi_evaluation(t: &TensorElement, words: &[Word]) -> Scalar {
    let ring = t.ring();
    let mut prod = FreeGroupRingElement::from_word(&Word::identity(t.alphabet()), ring);
    for w in words {
        prod = prod.mul(&FreeGroupRingElement::shifted(w, ring)).unwrap();
    }
    let m = prod.magnus(t.weight() + 1);
    let mut acc = ring.zero();
    for (k, c) in t.terms() {
        acc += &(c * &m.coeff(&k.0));
    }
    acc
}

/// One elementary Nielsen move on `F(x, y)` and its inverse, as generator images.
pub fn nielsen(rng: &mut impl Rng, a: &Alphabet) -> (Vec<Word>, Vec<Word>) {
    let (x, y) = (Word::generator(a, 0), Word::generator(a, 1));
    match rng.gen_range(0..4) {
        0 => (vec![y.clone(), x.clone()], vec![y, x]),
        1 => (vec![x.inverse(), y.clone()], vec![x.inverse(), y]),
        2 => (vec![x.concat(&y).unwrap(), y.clone()], vec![x.concat(&y.inverse()).unwrap(), y]),
        _ => (vec![x.clone(), y.concat(&x).unwrap()], vec![x.clone(), y.concat(&x.inverse()).unwrap()]),
    }
}

/// A random automorphism as a product of Nielsen moves, with its inverse.
pub fn random_automorphism(rng: &mut impl Rng, p: &Presentation) -> (Endo, Endo) {
    let mut fwd = Endo::identity(p);
    let mut back = Endo::identity(p);
    for _ in 0..rng.gen_range(1..=4) {
        let (m, inv) = nielsen(rng, p.alphabet());
        fwd = fwd.compose(&Endo::new(p, m).unwrap()).unwrap();
        back = Endo::new(p, inv).unwrap().compose(&back).unwrap();
    }
    (fwd, back)
}

pub fn conjugation(p: &Presentation, g: &Word) -> Endo {
    let a = p.alphabet();
    let images = (0..a.len())
        .map(|s| g.concat(&Word::generator(a, s)).unwrap().concat(&g.inverse()).unwrap().free_reduce())
        .collect();
    Endo::new(p, images).unwrap()
}

/// An element of the `k`-th lower central term: a left-normed commutator of random words.
pub fn deep_word(rng: &mut impl Rng, a: &Alphabet, k: usize) -> Word {
    let mut w = random_word(rng, a, 3);
    for _ in 1..k {
        w = w.commutator(&random_word(rng, a, 3)).unwrap();
    }
    w.free_reduce()
}

/// Inner automorphisms of `F₂` twisted by Nielsen automorphisms, at level `≥ k`.
pub fn level_k_pair(rng: &mut impl Rng, p: &Presentation, k: usize) -> (Endo, Endo) {
    let make = |rng: &mut _| {
        let (chi, chi_inv) = random_automorphism(rng, p);
        let g = deep_word(rng, p.alphabet(), k);
        chi.compose(&conjugation(p, &g)).unwrap().compose(&chi_inv).unwrap()
    };
    (make(rng), make(rng))
}
