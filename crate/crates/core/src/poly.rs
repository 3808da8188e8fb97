//! Vanishing polynomials `f_S(X) = prod_{s in S} (X - s)` and their
//! evaluation in the exponent against commitment-key powers.

use ff::Field;
use group::Group;
use thiserror::Error;

use crate::pairing::{scalar_cmp, G1Point, G2Point, Scalar};
use crate::set_commitment::CommitmentKey;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("duplicate element in root set")]
    DuplicateElement,
    #[error("polynomial degree {degree} exceeds key capacity {capacity}")]
    Capacity { degree: usize, capacity: usize },
}

/// A finite set of distinct scalars, iterated in ascending order of their
/// canonical representatives.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootSet {
    elements: Vec<Scalar>,
}

impl RootSet {
    pub fn empty() -> Self {
        RootSet::default()
    }

    /// Builds a set, refusing duplicates.
    pub fn new(elements: impl IntoIterator<Item = Scalar>) -> Result<Self, PolyError> {
        let mut elements: Vec<Scalar> = elements.into_iter().collect();
        elements.sort_by(scalar_cmp);
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(PolyError::DuplicateElement);
        }
        Ok(RootSet { elements })
    }

    /// Builds a set, silently merging duplicates.
    pub fn from_dedup(elements: impl IntoIterator<Item = Scalar>) -> Self {
        let mut elements: Vec<Scalar> = elements.into_iter().collect();
        elements.sort_by(scalar_cmp);
        elements.dedup();
        RootSet { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scalar> + '_ {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.elements
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        self.elements
            .binary_search_by(|probe| scalar_cmp(probe, s))
            .is_ok()
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.elements.iter().all(|s| other.contains(s))
    }

    /// `self \ other`
    pub fn difference(&self, other: &RootSet) -> RootSet {
        RootSet {
            elements: self
                .elements
                .iter()
                .filter(|s| !other.contains(s))
                .copied()
                .collect(),
        }
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        RootSet {
            elements: self
                .elements
                .iter()
                .filter(|s| other.contains(s))
                .copied()
                .collect(),
        }
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet::from_dedup(self.elements.iter().chain(other.elements.iter()).copied())
    }
}

impl<'a> IntoIterator for &'a RootSet {
    type Item = &'a Scalar;
    type IntoIter = std::slice::Iter<'a, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Polynomial coefficients, low degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Poly { coeffs }
    }

    /// Expands `prod_{s in S} (X - s)` by repeated multiplication with a
    /// linear factor. The empty product is the constant 1.
    pub fn vanishing(set: &RootSet) -> Self {
        let mut coeffs = Vec::with_capacity(set.len() + 1);
        coeffs.push(Scalar::ONE);
        for s in set {
            // (c_0 + c_1 X + ... ) * (X - s)
            coeffs.push(Scalar::ZERO);
            for i in (0..coeffs.len()).rev() {
                let lower = if i > 0 { coeffs[i - 1] } else { Scalar::ZERO };
                coeffs[i] = lower - coeffs[i] * s;
            }
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::ZERO, |acc, c| acc * x + c)
    }

    /// `sum_i f_i [a^i]_1`, with `[a^0]_1` the G1 generator.
    pub fn eval_in_g1(&self, ck: &CommitmentKey) -> Result<G1Point, PolyError> {
        self.check_capacity(ck)?;
        Ok(eval_in_exponent(
            &self.coeffs,
            ck.generator_g1(),
            ck.powers_g1(),
        ))
    }

    /// `sum_i f_i [a^i]_2`, with `[a^0]_2` the G2 generator.
    pub fn eval_in_g2(&self, ck: &CommitmentKey) -> Result<G2Point, PolyError> {
        self.check_capacity(ck)?;
        Ok(eval_in_exponent(
            &self.coeffs,
            ck.generator_g2(),
            ck.powers_g2(),
        ))
    }

    fn check_capacity(&self, ck: &CommitmentKey) -> Result<(), PolyError> {
        if self.degree() > ck.max_set_size() {
            return Err(PolyError::Capacity {
                degree: self.degree(),
                capacity: ck.max_set_size(),
            });
        }
        Ok(())
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;

    /// Schoolbook product.
    fn mul(self, rhs: &Poly) -> Poly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly { coeffs: Vec::new() };
        }
        let mut out = vec![Scalar::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly { coeffs: out }
    }
}

fn eval_in_exponent<G>(coeffs: &[Scalar], generator: &G, powers: &[G]) -> G
where
    G: Group<Scalar = Scalar>,
{
    let mut acc = G::identity();
    for (i, c) in coeffs.iter().enumerate() {
        if bool::from(c.is_zero()) {
            continue;
        }
        let base = if i == 0 { generator } else { &powers[i - 1] };
        // monic leading term
        if *c == Scalar::ONE {
            acc += base;
        } else {
            acc += *base * c;
        }
    }
    acc
}
