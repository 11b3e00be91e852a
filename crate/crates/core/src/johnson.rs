//! The Johnson filtration modulo `A` and the dual Johnson homomorphism.
//!
//! An endomorphism `φ` has level `≥ k` when it fixes `A[Γ]/I^{k+1}`, which can be read
//! off the generators. At level `k` the map `T ↦ T - φ*(T)` sends weight-`(k+1)`
//! invariants to weight-1 invariants.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::coalg::{Monomial, TensorElement};
use crate::coeff::{membership, Matrix, RingSpec, Scalar};
use crate::magnus::magnus_expand;
use crate::presented::{pullback, Depth, GroupHom, Presentation, TruncatedQuotient};
use crate::words::Word;
use crate::{Error, Result};

/// An endomorphism of a presented group, given on generators. It is not checked to be
/// well defined on the group, let alone invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endo {
    presentation: Presentation,
    hom: GroupHom,
}

impl Endo {
    pub fn new(p: &Presentation, images: Vec<Word>) -> Result<Self> {
        let hom = GroupHom::new(p.alphabet(), p.alphabet(), images)?;
        Ok(Endo { presentation: p.clone(), hom })
    }

    pub fn identity(p: &Presentation) -> Self {
        Endo { presentation: p.clone(), hom: GroupHom::identity(p.alphabet()) }
    }

    /// Parses `x -> x, y -> x y x^-1`; every generator needs exactly one image.
    pub fn parse(p: &Presentation, text: &str) -> Result<Self> {
        let hom = GroupHom::parse_with_source(text, p.alphabet(), p.alphabet())?;
        Ok(Endo { presentation: p.clone(), hom })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn images(&self) -> &[Word] {
        self.hom.images()
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.hom.apply(w)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Endo) -> Result<Endo> {
        Ok(Endo { presentation: self.presentation.clone(), hom: self.hom.compose(&other.hom)? })
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.hom.fmt(f)
    }
}

/// Level in the Johnson filtration, as far as the truncation can tell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JohnsonLevel {
    Exact(usize),
    /// Every generator is fixed modulo the truncation; the level is at least this.
    AtLeast(usize),
}

impl JohnsonLevel {
    /// Whether the level is known to be `≥ k`.
    pub fn reaches(self, k: usize) -> bool {
        match self {
            JohnsonLevel::Exact(l) | JohnsonLevel::AtLeast(l) => l >= k,
        }
    }
}

impl fmt::Display for JohnsonLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JohnsonLevel::Exact(k) => write!(f, "{k}"),
            JohnsonLevel::AtLeast(k) => write!(f, "≥ {k}"),
        }
    }
}

fn check(q: &TruncatedQuotient, phi: &Endo) -> Result<()> {
    q.alphabet().check(phi.presentation.alphabet())
}

/// Filtration degree of `M(φ(s)) - M(s)` for every generator `s`.
fn generator_shifts(q: &TruncatedQuotient, phi: &Endo) -> Result<Vec<Depth>> {
    let ring = q.ring();
    let n = q.order();
    let a = q.alphabet();
    (0..a.len())
        .map(|g| {
            let moved = magnus_expand(&phi.images()[g], ring, n);
            let fixed = magnus_expand(&Word::generator(a, g), ring, n);
            q.filtration(&moved.sub(&fixed)?)
        })
        .collect()
}

/// The largest `k ≤ N - 2` such that every generator satisfies
/// `M(φ(s)) ≡ M(s)` modulo the ideal and degree `≥ k + 1`; `AtLeast(N - 1)` if every
/// generator is fixed in the quotient of order `N`.
pub fn johnson_level(q: &TruncatedQuotient, phi: &Endo) -> Result<JohnsonLevel> {
    check(q, phi)?;
    let bound = q.order().saturating_sub(1);
    let level = generator_shifts(q, phi)?
        .into_iter()
        .filter_map(|d| match d {
            Depth::Exact(k) => Some(k.saturating_sub(1).min(bound.saturating_sub(1))),
            Depth::AtLeast(_) => None,
        })
        .min();
    Ok(match level {
        Some(k) => JohnsonLevel::Exact(k),
        None => JohnsonLevel::AtLeast(bound),
    })
}

/// Relators whose image under `φ` is nonzero in the quotient: evidence that `φ` is not
/// well defined on the group.
pub fn relator_warnings(q: &TruncatedQuotient, phi: &Endo) -> Result<Vec<usize>> {
    check(q, phi)?;
    let mut out = Vec::new();
    for (i, r) in q.presentation().relators().iter().enumerate() {
        if let Depth::Exact(_) = q.dimension_depth(&phi.apply(r)?)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// `τ_φ` at stage `k`, as a matrix from weight-`(k+1)` invariants to weight-1 invariants.
#[derive(Clone, Debug)]
pub struct JohnsonReport {
    pub ring: RingSpec,
    pub stage: usize,
    /// Level of `φ` in the quotient of order `stage + 2`.
    pub level: JohnsonLevel,
    /// The weight-`(stage+1)` basis invariants (rows).
    pub sources: Vec<TensorElement>,
    /// Their leading terms, spanning `K_{stage+1}`.
    pub leading_terms: Vec<TensorElement>,
    /// The weight-1 basis invariants (columns).
    pub targets: Vec<TensorElement>,
    /// `τ_φ(T) = T - φ*(T)` for each row.
    pub images: Vec<TensorElement>,
    /// Coordinates of each image in the weight-1 basis.
    pub matrix: Matrix,
    /// Relators not killed by `φ` within the truncation.
    pub relator_warnings: Vec<usize>,
}

impl JohnsonReport {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `T - φ*(T)` for one invariant `T` of weight `< N`.
pub fn tau_tensor(q: &TruncatedQuotient, phi: &Endo, t: &TensorElement) -> Result<TensorElement> {
    check(q, phi)?;
    t.sub(&pullback(phi.hom(), t, q)?)
}

/// The dual Johnson homomorphism at stage `k`; needs `φ` at level `≥ k`.
pub fn johnson_tau(p: &Presentation, phi: &Endo, k: usize, ring: RingSpec) -> Result<JohnsonReport> {
    p.alphabet().check(phi.presentation.alphabet())?;
    let q = TruncatedQuotient::build(p, k + 2, ring)?;
    let level = johnson_level(&q, phi)?;
    if !level.reaches(k) {
        let shifts = generator_shifts(&q, phi)?;
        let (g, found) = shifts
            .iter()
            .enumerate()
            .find_map(|(g, d)| match d {
                Depth::Exact(f) if *f < k + 1 => Some((g, *f - 1)),
                _ => None,
            })
            .expect("some generator moves below the level");
        return Err(Error::LevelTooSmall { generator: p.alphabet().name(g).to_string(), level: found, required: k });
    }
    let basis = q.invariants();
    for t in basis.elements.iter().filter(|t| t.weight() <= k) {
        let tau = tau_tensor(&q, phi, t)?;
        assert!(tau.is_zero(), "τ of a weight-{} invariant {t} is {tau}", t.weight());
    }
    let targets: Vec<TensorElement> = basis.elements.iter().filter(|t| t.weight() == 1).cloned().collect();
    let sources: Vec<TensorElement> = basis.elements.iter().filter(|t| t.weight() == k + 1).cloned().collect();
    let unit_and_linear: Vec<Monomial> = Monomial::all_below(p.alphabet().len(), 2);
    let column = |t: &TensorElement| -> Vec<Scalar> {
        unit_and_linear.iter().map(|m| t.terms().get(m).cloned().unwrap_or_else(|| ring.zero())).collect()
    };
    let target_matrix =
        Matrix::from_columns(ring, unit_and_linear.len(), &targets.iter().map(column).collect::<Vec<_>>());
    let mut images = Vec::with_capacity(sources.len());
    let mut rows = Vec::with_capacity(sources.len());
    for t in &sources {
        let tau = tau_tensor(&q, phi, t)?;
        if tau.weight() > 1 {
            return Err(Error::ImageWeight { tensor: t.to_string(), weight: tau.weight() });
        }
        let coords = membership(&target_matrix, &column(&tau))?
            .ok_or_else(|| Error::ImageOutsideBasis { tensor: t.to_string() })?;
        rows.push(coords);
        images.push(tau);
    }
    let matrix = Matrix::from_rows(ring, targets.len(), rows)?;
    Ok(JohnsonReport {
        ring,
        stage: k,
        level,
        leading_terms: sources.iter().map(|t| t.leading_term(k + 1)).collect(),
        sources,
        targets,
        images,
        matrix,
        relator_warnings: relator_warnings(&q, phi)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn f2() -> Presentation {
        Presentation::free(&Alphabet::parse("x y").unwrap())
    }

    #[test]
    fn levels() {
        let p = f2();
        let z = RingSpec::Integers;
        let q = TruncatedQuotient::build(&p, 4, z).unwrap();
        assert_eq!(johnson_level(&q, &Endo::identity(&p)).unwrap(), JohnsonLevel::AtLeast(3));
        let conj = Endo::parse(&p, "x -> x, y -> x y x^-1").unwrap();
        assert_eq!(johnson_level(&q, &conj).unwrap(), JohnsonLevel::Exact(1));
        let shear = Endo::parse(&p, "x -> x, y -> x y").unwrap();
        assert_eq!(johnson_level(&q, &shear).unwrap(), JohnsonLevel::Exact(0));
    }

    #[test]
    fn conjugation_tau() {
        let p = f2();
        let z = RingSpec::Integers;
        let conj = Endo::parse(&p, "x -> x, y -> x y x^-1").unwrap();
        let r = johnson_tau(&p, &conj, 1, z).unwrap();
        let a = p.alphabet();
        let t = |s: &str| TensorElement::parse(s, a, z).unwrap();
        for (src, img) in r.sources.iter().zip(&r.images) {
            let expected = if *src == t("x|y") {
                t("-y")
            } else if *src == t("y|x") {
                t("y")
            } else {
                t("0")
            };
            assert_eq!(img, &expected, "τ({src})");
        }
        assert!(johnson_tau(&p, &Endo::identity(&p), 1, z).unwrap().is_zero());
        let shear = Endo::parse(&p, "x -> x, y -> x y").unwrap();
        assert!(matches!(johnson_tau(&p, &shear, 1, z), Err(Error::LevelTooSmall { level: 0, required: 1, .. })));
    }
}
