mod common;

use common::*;
use letterbraid_core::{Monomial, MultiTensor, RingSpec, TensorElement};

fn samples() -> Vec<TensorElement> {
    let mut rng = rng(10);
    let mut out = Vec::new();
    for (i, ring) in
        [RingSpec::Integers, RingSpec::Rationals, RingSpec::PrimeField(3)].into_iter().cycle().take(200).enumerate()
    {
        let a = alphabet(["x", "x y", "x y z"][i % 3]);
        out.push(random_tensor(&mut rng, &a, ring, 4, 1 + i % 5));
    }
    out
}

#[test]
fn coassociative() {
    for t in samples() {
        let d = t.coproduct();
        assert_eq!(d.coproduct_at(0), d.coproduct_at(1), "{t}");
    }
}

#[test]
fn counit_laws() {
    for t in samples() {
        let d = t.coproduct();
        assert_eq!(d.counit_at(0).to_tensor(), t);
        assert_eq!(d.counit_at(1).to_tensor(), t);
    }
}

#[test]
fn weight_is_order_of_vanishing() {
    for t in samples() {
        let k = (0..).find(|&k| t.iterated_reduced_coproduct(k).is_zero()).unwrap();
        assert_eq!(t.weight(), k, "{t}");
    }
}

#[test]
fn reduced_coproduct_drops_trivial_splits() {
    for t in samples() {
        let r = t.reduced();
        let mut expected = r.coproduct();
        for (k, c) in r.terms() {
            expected.insert(vec![k.clone(), Monomial::unit()], -c.clone());
            expected.insert(vec![Monomial::unit(), k.clone()], -c.clone());
        }
        assert_eq!(t.reduced_coproduct(), expected, "{t}");
    }
}

#[test]
fn iterated_coproduct_is_repeated_reduced_coproduct() {
    for t in samples().into_iter().take(60) {
        let two = t.iterated_reduced_coproduct(2);
        let mut manual = MultiTensor::zero(t.alphabet(), t.ring(), 3);
        for (parts, c) in t.reduced_coproduct().terms() {
            if parts[0].len() < 2 {
                continue;
            }
            for s in 1..parts[0].len() {
                let (l, r) = parts[0].split_at(s);
                manual.insert(vec![l, r, parts[1].clone()], c.clone());
            }
        }
        assert_eq!(two, manual, "{t}");
    }
}

#[test]
fn display_round_trips() {
    for t in samples() {
        let back = TensorElement::parse(&t.to_string(), t.alphabet(), t.ring()).unwrap();
        assert_eq!(back, t);
    }
}

#[test]
fn leading_term_of_heisenberg_invariant() {
    let a = alphabet("x y z");
    let f2 = RingSpec::PrimeField(2);
    let t = tensor("x|y + z", &a, f2);
    assert_eq!(t.leading_term(2), tensor("x|y", &a, f2));
    assert_eq!(t.weight(), 2);
}
