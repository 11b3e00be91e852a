mod common;

use common::*;
use letterbraid_core::{Letter, Word};
use rand::Rng;

/// Free reduction by repeatedly cancelling a random adjacent inverse pair.
fn reduce_randomly(w: &Word, rng: &mut impl Rng) -> Word {
    let mut letters: Vec<Letter> = w.letters().to_vec();
    loop {
        let spots: Vec<usize> =
            (0..letters.len().saturating_sub(1)).filter(|&i| letters[i + 1] == letters[i].inv()).collect();
        if spots.is_empty() {
            return Word::from_letters(w.alphabet(), letters);
        }
        let i = spots[rng.gen_range(0..spots.len())];
        letters.drain(i..i + 2);
    }
}

#[test]
fn word_times_inverse_is_trivial() {
    let a = alphabet("x y z");
    let mut rng = rng(1);
    for _ in 0..500 {
        let w = random_word(&mut rng, &a, 12);
        assert!(w.concat(&w.inverse()).unwrap().free_reduce().is_empty(), "{w}");
        assert!(w.inverse().concat(&w).unwrap().free_reduce().is_empty(), "{w}");
    }
}

#[test]
fn reduction_is_confluent() {
    let a = alphabet("x y");
    let mut rng = rng(2);
    for _ in 0..500 {
        let u = random_word(&mut rng, &a, 8);
        let v = random_word(&mut rng, &a, 8);
        let t = random_word(&mut rng, &a, 8);
        let whole = u.concat(&v).unwrap().concat(&t).unwrap();
        let canonical = whole.free_reduce();
        assert!(canonical.is_reduced());
        assert_eq!(reduce_randomly(&whole, &mut rng), canonical);
        let staged = u.concat(&v).unwrap().free_reduce().concat(&t).unwrap().free_reduce();
        assert_eq!(staged, canonical);
    }
}

#[test]
fn substitution_is_a_homomorphism() {
    let a = alphabet("x y");
    let b = alphabet("p q r");
    let mut rng = rng(3);
    for _ in 0..300 {
        let images = vec![random_word(&mut rng, &b, 4), random_word(&mut rng, &b, 4)];
        let u = random_word(&mut rng, &a, 6);
        let v = random_word(&mut rng, &a, 6);
        let lhs = u.concat(&v).unwrap().substitute(&b, &images).unwrap();
        let rhs = u.substitute(&b, &images).unwrap().concat(&v.substitute(&b, &images).unwrap()).unwrap().free_reduce();
        assert_eq!(lhs, rhs);
        assert_eq!(u.inverse().substitute(&b, &images).unwrap(), u.substitute(&b, &images).unwrap().inverse());
    }
}

#[test]
fn display_round_trips() {
    let a = alphabet("x y z");
    let mut rng = rng(4);
    for _ in 0..300 {
        let w = random_word(&mut rng, &a, 10);
        assert_eq!(word(&w.to_string(), &a), w);
    }
}

#[test]
fn parsing_keeps_letters_unreduced() {
    let a = alphabet("x y");
    let w = word("x x^-1 y", &a);
    assert_eq!(w.len(), 3);
    assert_eq!(w.free_reduce(), word("y", &a));
    assert_eq!(word("[x*y, x^-2]", &a).len(), 8);
    assert_eq!(word("(x y)^2", &a), word("x y x y", &a));
    assert_eq!(word("1", &a), Word::identity(&a));
}
