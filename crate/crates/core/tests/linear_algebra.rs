mod common;

use letterbraid_core::coeff::{kernel_basis, membership, smith_form};
use letterbraid_core::{Matrix, RingSpec, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn int_matrix(rows: &[Vec<i64>], cols: usize) -> Matrix {
    let z = RingSpec::Integers;
    Matrix::from_rows(z, cols, rows.iter().map(|r| r.iter().map(|&v| z.from_i64(v)).collect()).collect()).unwrap()
}

fn matrix_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=8, 1usize..=8)
        .prop_flat_map(|(r, c)| (Just(c), proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r)))
}

/// Null space over ℚ by plain Gauss-Jordan, independent of the crate.
fn rational_kernel(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for v in a[row].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[row].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn smith_form_is_an_equivalence((cols, rows) in matrix_strategy()) {
        let m = int_matrix(&rows, cols);
        let s = smith_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.determinant().unwrap().as_integer().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().as_integer().unwrap().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for w in s.divisors.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn integer_kernel_is_saturated((cols, rows) in matrix_strategy(), seed in any::<u64>()) {
        let z = RingSpec::Integers;
        let m = int_matrix(&rows, cols);
        let basis = kernel_basis(&m);
        for v in &basis {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
        let rational = rational_kernel(&rows, cols);
        prop_assert_eq!(rational.len(), basis.len());
        if rational.is_empty() {
            return Ok(());
        }
        let mut rng = common::rng(seed);
        let mut v = vec![BigRational::zero(); cols];
        for k in &rational {
            let c = BigRational::from_integer(rng.gen_range(-5i64..=5).into());
            for (x, y) in v.iter_mut().zip(k) {
                *x = &*x + &c * y;
            }
        }
        let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if content.is_zero() {
            return Ok(());
        }
        let primitive: Vec<Scalar> = ints.iter().map(|x| z.from_bigint(&(x / &content))).collect();
        let lattice = Matrix::from_columns(z, cols, &basis);
        prop_assert!(membership(&lattice, &primitive).unwrap().is_some());
    }

    #[test]
    fn rational_field_axioms(a in (-50i64..50, 1i64..20), b in (-50i64..50, 1i64..20), c in (-50i64..50, 1i64..20)) {
        let q = RingSpec::Rationals;
        let s = |(n, d): (i64, i64)| q.from_ratio(&n.into(), &d.into()).unwrap();
        field_axioms(s(a), s(b), s(c))?;
    }

    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 101]), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let f = RingSpec::prime_field(p).unwrap();
        field_axioms(f.from_i64(a), f.from_i64(b), f.from_i64(c))?;
    }
}

fn field_axioms(a: Scalar, b: Scalar, c: Scalar) -> Result<(), TestCaseError> {
    let ring = a.ring();
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&a + &ring.zero(), a.clone());
    prop_assert_eq!(&a * &ring.one(), a.clone());
    prop_assert!((&a + &(-a.clone())).is_zero());
    if a.is_zero() {
        prop_assert!(a.inv().is_none());
    } else {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }
    Ok(())
}

#[test]
fn integer_arithmetic_is_exact() {
    let z = RingSpec::Integers;
    let big = z.parse_scalar("123456789012345678901234567890").unwrap();
    assert_eq!((&big * &big).checked_div(&big), Some(big.clone()));
    assert_eq!(z.from_i64(7).checked_div(&z.from_i64(2)), None);
    assert_eq!(z.from_i64(2).inv(), None);
}
