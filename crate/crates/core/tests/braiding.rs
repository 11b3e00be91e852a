mod common;

use common::*;
use letterbraid_core::braiding::braiding_polynomial_by_coproduct;
use letterbraid_core::magnus::magnus_expand;
use letterbraid_core::*;
use rand::Rng;

fn ring_for(i: usize) -> RingSpec {
    [RingSpec::Integers, RingSpec::Rationals, RingSpec::PrimeField(5)][i % 3]
}

#[test]
fn inserting_cancelling_pairs_preserves_numbers() {
    let a = alphabet("x y z");
    let mut rng = rng(20);
    for i in 0..500 {
        let ring = ring_for(i);
        let t = random_tensor(&mut rng, &a, ring, 4, 3);
        let w = random_word(&mut rng, &a, 8);
        let at = rng.gen_range(0..=w.len());
        let l = Letter::new(rng.gen_range(0..3), rng.gen_bool(0.5));
        let mut letters = w.letters().to_vec();
        letters.splice(at..at, [l, l.inv()]);
        let padded = Word::from_letters(&a, letters);
        assert_eq!(braiding_number(&t, &padded).unwrap(), braiding_number(&t, &w).unwrap(), "{t} on {w}");
        assert_eq!(braiding_polynomial(&t, &padded).unwrap(), braiding_polynomial(&t, &w).unwrap());
    }
}

/// The `t^{k+1}` coefficient of `L_T(w)` is `ℓ(w)^{⊗k+1}` applied to `Δ̄^k T`, with `ℓ`
/// of each piece read from the Magnus expansion.
#[test]
fn polynomial_coefficients_follow_the_coproduct() {
    let a = alphabet("x y");
    let mut rng = rng(21);
    for i in 0..150 {
        let ring = ring_for(i);
        let t = random_tensor(&mut rng, &a, ring, 4, 4);
        let w = random_word(&mut rng, &a, 7);
        let m = magnus_expand(&w, ring, 5);
        let poly = braiding_polynomial(&t, &w).unwrap();
        assert_eq!(poly.coeff(0), t.counit());
        for k in 0..5 {
            let mut expected = ring.zero();
            for (parts, c) in t.iterated_reduced_coproduct(k).terms() {
                let mut prod = c.clone();
                for p in parts {
                    prod = &prod * &m.coeff(&p.0);
                }
                expected += &prod;
            }
            assert_eq!(poly.coeff(k + 1), expected, "t^{} of L_{t}({w})", k + 1);
        }
        assert_eq!(poly, braiding_polynomial_by_coproduct(&t, &w).unwrap());
    }
}

#[test]
fn inverse_word_evaluates_polynomial_at_minus_one() {
    let a = alphabet("x y z");
    let mut rng = rng(22);
    for i in 0..300 {
        let ring = ring_for(i);
        let t = random_tensor(&mut rng, &a, ring, 4, 3);
        let w = random_word(&mut rng, &a, 8);
        let at_minus_one = braiding_polynomial(&t, &w).unwrap().eval(&ring.from_i64(-1));
        let lhs = &t.counit() + &braiding_number(&t, &w.inverse()).unwrap();
        assert_eq!(lhs, at_minus_one, "{t} on {w}");
    }
}

fn nested(a: &Alphabet, rng: &mut impl Rng, depth: usize) -> Word {
    let mut w = random_word(rng, a, 2);
    while w.free_reduce().is_empty() {
        w = random_word(rng, a, 2);
    }
    for _ in 1..depth {
        let mut s = random_word(rng, a, 2);
        while s.free_reduce().is_empty() {
            s = random_word(rng, a, 2);
        }
        w = if rng.gen_bool(0.5) { w.commutator(&s).unwrap() } else { s.commutator(&w).unwrap() };
    }
    w
}

#[test]
fn degree_is_bounded_on_nested_commutators() {
    let mut rng = rng(23);
    for (i, names) in ["x y", "x y z"].iter().cycle().take(120).enumerate() {
        let a = alphabet(names);
        let k = 1 + i % 4;
        let n = 1 + (i / 4) % 8;
        let w =
            if k == 4 && n > 5 { left_normed(&a, &random_key(&mut rng, a.len(), 4)) } else { nested(&a, &mut rng, k) };
        let t = random_homogeneous(&mut rng, &a, RingSpec::Integers, n, 4);
        let poly = braiding_polynomial(&t, &w).unwrap();
        if let Some(d) = poly.degree() {
            assert!(d <= n / k, "deg L_{t}({w}) = {d} > {n}/{k}");
        }
        if n < k {
            assert!(braiding_number(&t, &w).unwrap().is_zero());
        }
    }
}

#[test]
fn commutator_recursion() {
    let z = RingSpec::Integers;
    for names in ["x y", "x y z"] {
        let a = alphabet(names);
        let gens = a.len();
        for n in 1..=3 {
            for inner in all_keys(gens, n) {
                let w = left_normed(&a, &inner);
                for s in 0..gens {
                    let ws = w.commutator(&Word::generator(&a, s)).unwrap();
                    for key in all_keys(gens, n + 1) {
                        let head = TensorElement::pure(&a, z, &key[..n]);
                        let tail = TensorElement::pure(&a, z, &key[1..]);
                        let alpha = |g: usize| z.from_i64((g == s) as i64);
                        let expected = &(&braiding_number(&head, &w).unwrap() * &alpha(key[n]))
                            - &(&alpha(key[0]) * &braiding_number(&tail, &w).unwrap());
                        let got = braiding_number(&TensorElement::pure(&a, z, &key), &ws).unwrap();
                        assert_eq!(got, expected, "key {key:?} on [{w}, {s}]");
                    }
                }
            }
        }
    }
}

#[test]
fn product_formula_on_random_pairs() {
    let a = alphabet("x y");
    let mut rng = rng(24);
    for i in 0..200 {
        let t = random_tensor(&mut rng, &a, ring_for(i), 4, 3);
        let (u, v) = (random_word(&mut rng, &a, 6), random_word(&mut rng, &a, 6));
        assert!(product_check(&t, &u, &v).unwrap().holds(), "{t} on {u} · {v}");
    }
}

#[test]
fn multi_evaluation_of_one_word_is_the_number() {
    let a = alphabet("x y");
    let mut rng = rng(25);
    for _ in 0..100 {
        let t = random_tensor(&mut rng, &a, RingSpec::Integers, 3, 3);
        let w = random_word(&mut rng, &a, 6);
        assert_eq!(multi_evaluation(&t, std::slice::from_ref(&w)).unwrap(), braiding_number(&t, &w).unwrap());
        assert_eq!(multi_evaluation(&t, &[]).unwrap(), t.counit());
    }
}

#[test]
fn empty_word_pairs_as_counit() {
    let a = alphabet("x y");
    let t = tensor("3 + x|y - 2 y", &a, RingSpec::Integers);
    let poly = braiding_polynomial(&t, &Word::identity(&a)).unwrap();
    assert_eq!(poly.coeffs(), &[RingSpec::Integers.from_i64(3)]);
}

#[test]
fn circle_pullback_integrates_to_abelianization() {
    let a = alphabet("x y");
    let mut rng = rng(26);
    let z = RingSpec::Integers;
    for _ in 0..100 {
        let w = random_word(&mut rng, &a, 9);
        let ab = w.abelianization();
        for (g, &count) in ab.iter().enumerate() {
            let form = pullback_to_circle(&Functional::dual(&a, z, g), &w).unwrap();
            assert_eq!(form.integral(), z.from_i64(count));
        }
    }
}
