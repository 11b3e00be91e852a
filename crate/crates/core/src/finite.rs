//! Literal group algebras of finite groups given by multiplication tables.
//!
//! This is brute force on purpose: `A[Γ]` is `A^|Γ|` and `I^k` is spanned by products
//! of `g - e`. It is used to check the truncated quotients of presented groups.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coeff::{row_canonical, smith_form, Matrix, RingSpec, Scalar};
use crate::words::{is_identifier, Word};
use crate::{Error, Result};

/// A finite group as a multiplication table, with named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    gens: Vec<(String, usize)>,
}

/// Size of `A[Γ]/I^k`: rank, plus torsion coefficients over ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSize {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FiniteGroupTable {
    /// Validates the table: identity and inverses exactly, associativity on all triples
    /// up to order 16 and on a strided sample beyond.
    pub fn new(mul: Vec<Vec<usize>>, gens: Vec<(String, usize)>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".to_string()));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotAGroup(format!("entry {bad} out of range in row {i}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".to_string()))?;
        let mut inverses = Vec::with_capacity(n);
        for (g, row) in mul.iter().enumerate() {
            let inv = (0..n)
                .find(|&h| row[h] == identity && mul[h][g] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))?;
            inverses.push(inv);
        }
        let stride = if n <= 16 { 1 } else { n / 16 + 1 };
        let sample: Vec<usize> = (0..n).step_by(stride).chain(core::iter::once(n - 1)).collect();
        for &a in &sample {
            for &b in &sample {
                for &c in &sample {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        for (name, g) in &gens {
            if !is_identifier(name) {
                return Err(Error::InvalidIdentifier(name.clone()));
            }
            if *g >= n {
                return Err(Error::NotAGroup(format!("generator `{name}` labels {g}, outside the table")));
            }
        }
        Ok(FiniteGroupTable { mul, identity, inverses, gens })
    }

    /// `C_n` with generator `name ↦ 1`.
    pub fn cyclic(n: usize, name: &str) -> Result<Self> {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroupTable::new(mul, vec![(name.to_string(), 1 % n)])
    }

    /// `self × other`, elements `(a, b)` at index `a·|other| + b`, generators of both.
    pub fn direct_product(&self, other: &FiniteGroupTable) -> Result<Self> {
        let (n, m) = (self.size(), other.size());
        let mul = (0..n * m)
            .map(|x| (0..n * m).map(|y| self.mul[x / m][y / m] * m + other.mul[x % m][y % m]).collect())
            .collect();
        let mut gens: Vec<(String, usize)> =
            self.gens.iter().map(|(s, g)| (s.clone(), g * m + other.identity)).collect();
        gens.extend(other.gens.iter().map(|(s, g)| (s.clone(), self.identity * m + g)));
        FiniteGroupTable::new(mul, gens)
    }

    pub fn size(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.gens
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.gens.iter().find(|(n, _)| n == name).map(|&(_, g)| g)
    }

    /// Evaluates a word; its generator names must be labelled in the table.
    pub fn word_image(&self, w: &Word) -> Result<usize> {
        let names = w.alphabet();
        let labels = (0..names.len())
            .map(|g| self.generator(names.name(g)).ok_or_else(|| Error::UnlabeledGenerator(names.name(g).to_string())))
            .collect::<Result<Vec<_>>>()?;
        let mut acc = self.identity;
        for l in w.letters() {
            let g = labels[l.gen];
            acc = self.mul[acc][if l.inverse { self.inverses[g] } else { g }];
        }
        Ok(acc)
    }

    /// `v · g` in the group algebra.
    fn right_mul(&self, v: &[Scalar], g: usize, ring: RingSpec) -> Vec<Scalar> {
        let mut out = vec![ring.zero(); self.size()];
        for (h, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[self.mul[h][g]] = c.clone();
            }
        }
        out
    }

    /// Canonical basis of `I^k` inside `A^|Γ|` (`I^0` is the whole algebra).
    pub fn ideal_power_basis(&self, ring: RingSpec, k: usize) -> Vec<Vec<Scalar>> {
        let n = self.size();
        let mut basis: Vec<Vec<Scalar>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect()).collect();
        for _ in 0..k {
            let mut span = Vec::new();
            for v in &basis {
                for g in 0..n {
                    if g == self.identity {
                        continue;
                    }
                    let vg = self.right_mul(v, g, ring);
                    span.push(vg.iter().zip(v).map(|(a, b)| a - b).collect());
                }
            }
            basis = row_canonical(ring, n, &span);
            if basis.is_empty() {
                break;
            }
        }
        basis
    }

    /// `A[Γ]/I^k` for `k = 1..=order`.
    pub fn ideal_power_dims(&self, ring: RingSpec, order: usize) -> Vec<QuotientSize> {
        let n = self.size();
        (1..=order)
            .map(|k| {
                let basis = self.ideal_power_basis(ring, k);
                if ring.is_field() || basis.is_empty() {
                    return QuotientSize { rank: n - basis.len(), torsion: Vec::new() };
                }
                let m = Matrix::from_columns(ring, n, &basis);
                let torsion =
                    smith_form(&m).divisors.into_iter().filter(|d| !d.is_zero() && !d.abs().is_one()).collect();
                QuotientSize { rank: n - basis.len(), torsion }
            })
            .collect()
    }

    /// The indicator vector of one element in `A^|Γ|`.
    pub fn element_vector(&self, g: usize, ring: RingSpec) -> Vec<Scalar> {
        (0..self.size()).map(|h| if h == g { ring.one() } else { ring.zero() }).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn ranks(t: &FiniteGroupTable, ring: RingSpec, n: usize) -> Vec<usize> {
        t.ideal_power_dims(ring, n).into_iter().map(|q| q.rank).collect()
    }

    #[test]
    fn small_groups() {
        let f2 = RingSpec::PrimeField(2);
        assert_eq!(ranks(&FiniteGroupTable::cyclic(2, "x").unwrap(), f2, 4), [1, 2, 2, 2]);
        assert_eq!(ranks(&FiniteGroupTable::cyclic(3, "x").unwrap(), f2, 4), [1, 1, 1, 1]);
        assert_eq!(ranks(&FiniteGroupTable::cyclic(1, "x").unwrap(), f2, 3), [1, 1, 1]);
        let z = RingSpec::Integers;
        let c2 = FiniteGroupTable::cyclic(2, "x").unwrap().ideal_power_dims(z, 3);
        assert_eq!(c2[1], QuotientSize { rank: 1, torsion: vec![BigInt::from(2)] });
    }

    #[test]
    fn words_and_validation() {
        let c2 = FiniteGroupTable::cyclic(2, "x").unwrap();
        let a = Alphabet::parse("x").unwrap();
        assert_eq!(c2.word_image(&Word::parse("x^2", &a).unwrap()).unwrap(), c2.identity());
        assert_eq!(c2.word_image(&Word::identity(&a)).unwrap(), c2.identity());
        let b = Alphabet::parse("x y").unwrap();
        assert_eq!(c2.word_image(&Word::parse("y", &b).unwrap()), Err(Error::UnlabeledGenerator("y".into())));
        assert!(FiniteGroupTable::new(vec![vec![0, 0], vec![0, 1]], vec![]).is_err());
        let prod = c2.direct_product(&FiniteGroupTable::cyclic(2, "y").unwrap()).unwrap();
        assert_eq!(prod.size(), 4);
        assert_eq!(ranks(&prod, RingSpec::PrimeField(2), 4), [1, 3, 4, 4]);
    }
}
