//! Set commitments with subset openings over a type-3 pairing.
//!
//! A commitment to `S` is `C = [rho * f_S(a)]_1` where `f_S` is the
//! vanishing polynomial of `S` and `a` the trapdoor behind the commitment
//! key. A witness that `T` is a subset of `S` is `[rho * f_{S \ T}(a)]_1`,
//! checked with a single pairing equation.
//!
//! The degenerate case where a committed set happens to contain the trapdoor
//! itself is handled explicitly on every path: such sets are detected by
//! comparing `[s]_1` against the first key power.

use rand::RngCore;
use thiserror::Error;

use crate::pairing::{
    is_identity_g1, multi_pairing, random_nonzero_scalar, random_scalar, scalar_inverse, G1Point,
    G2Point, GroupDescription, GtElement, Scalar,
};
use crate::poly::{Poly, PolyError, RootSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScError {
    #[error("maximum set size must be at least 1")]
    ZeroCapacity,
    #[error("cannot commit to an empty set")]
    EmptySet,
    #[error("set of {size} elements exceeds key capacity {capacity}")]
    SetTooLarge { size: usize, capacity: usize },
    #[error("opening does not match the commitment")]
    OpeningMismatch,
    #[error("subset is empty")]
    EmptySubset,
    #[error("requested subset is not contained in the committed set")]
    NotASubset,
}

/// Security level of the bilinear group. Only the 128-bit BLS12-381
/// instantiation is provided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SecurityLevel {
    #[default]
    Bits128,
}

impl SecurityLevel {
    pub fn group(self) -> GroupDescription {
        match self {
            SecurityLevel::Bits128 => GroupDescription::bls12_381(),
        }
    }
}

/// Public parameters: the bilinear group. The message space is its scalar
/// field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScPublicParams {
    pub group: GroupDescription,
}

impl ScPublicParams {
    pub fn new(level: SecurityLevel) -> Self {
        ScPublicParams {
            group: level.group(),
        }
    }
}

pub fn setup(level: SecurityLevel) -> ScPublicParams {
    ScPublicParams::new(level)
}

/// Powers `([a^i]_1, [a^i]_2)` for `i = 1..=ell`.
#[derive(Clone)]
pub struct CommitmentKey {
    generator_g1: G1Point,
    generator_g2: G2Point,
    powers_g1: Vec<G1Point>,
    powers_g2: Vec<G2Point>,
    #[cfg(any(test, feature = "test-oracle"))]
    trapdoor: Option<Scalar>,
}

impl std::fmt::Debug for CommitmentKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CommitmentKey")
            .field("max_set_size", &self.max_set_size())
            .finish_non_exhaustive()
    }
}

// Equality ignores the test trapdoor, which never leaves memory.
impl PartialEq for CommitmentKey {
    fn eq(&self, other: &Self) -> bool {
        self.generator_g1 == other.generator_g1
            && self.generator_g2 == other.generator_g2
            && self.powers_g1 == other.powers_g1
            && self.powers_g2 == other.powers_g2
    }
}

impl Eq for CommitmentKey {}

impl CommitmentKey {
    /// Reassembles a key from decoded powers. Both sequences must have the
    /// same non-zero length.
    pub fn from_powers(
        pp: &ScPublicParams,
        powers_g1: Vec<G1Point>,
        powers_g2: Vec<G2Point>,
    ) -> Result<Self, ScError> {
        if powers_g1.is_empty() || powers_g1.len() != powers_g2.len() {
            return Err(ScError::ZeroCapacity);
        }
        Ok(CommitmentKey {
            generator_g1: pp.group.generator_g1,
            generator_g2: pp.group.generator_g2,
            powers_g1,
            powers_g2,
            #[cfg(any(test, feature = "test-oracle"))]
            trapdoor: None,
        })
    }

    /// The bound `ell` on committed set sizes.
    pub fn max_set_size(&self) -> usize {
        self.powers_g1.len()
    }

    pub fn generator_g1(&self) -> &G1Point {
        &self.generator_g1
    }

    pub fn generator_g2(&self) -> &G2Point {
        &self.generator_g2
    }

    /// `[a^1]_1 .. [a^ell]_1`
    pub fn powers_g1(&self) -> &[G1Point] {
        &self.powers_g1
    }

    /// `[a^1]_2 .. [a^ell]_2`
    pub fn powers_g2(&self) -> &[G2Point] {
        &self.powers_g2
    }

    /// True if `s` is the trapdoor, i.e. `[s]_1 = [a]_1`.
    pub fn is_trapdoor(&self, s: &Scalar) -> bool {
        self.generator_g1 * s == self.powers_g1[0]
    }

    /// First element of `set` that equals the trapdoor, if any.
    pub fn find_trapdoor(&self, set: &RootSet) -> Option<Scalar> {
        set.iter().find(|s| self.is_trapdoor(s)).copied()
    }

    /// Spot-checks that the powers are consecutive and agree across groups:
    /// `e([a^i]_1, [1]_2) = e([1]_1, [a^i]_2)` and
    /// `e([a^i]_1, [a]_2) = e([a^{i+1}]_1, [1]_2)` at the first, middle and
    /// last index.
    pub fn is_consistent(&self) -> bool {
        let ell = self.max_set_size();
        let mut idx = vec![0, ell / 2, ell - 1];
        idx.dedup();
        let g1 = self.generator_g1;
        let g2 = self.generator_g2;
        idx.into_iter().all(|i| {
            let cross = multi_pairing(&[(self.powers_g1[i], g2), (-g1, self.powers_g2[i])])
                == GtElement::identity();
            let step = i + 1 >= ell
                || multi_pairing(&[
                    (self.powers_g1[i], self.powers_g2[0]),
                    (-self.powers_g1[i + 1], g2),
                ]) == GtElement::identity();
            cross && step
        })
    }

    /// The trapdoor `a`, available only when the key was generated in a
    /// build with the test oracle enabled.
    #[cfg(any(test, feature = "test-oracle"))]
    pub fn trapdoor(&self) -> Option<Scalar> {
        self.trapdoor
    }
}

fn powers_from_trapdoor(pp: &ScPublicParams, ell: usize, a: Scalar) -> CommitmentKey {
    let mut powers_g1 = Vec::with_capacity(ell);
    let mut powers_g2 = Vec::with_capacity(ell);
    let mut cur = a;
    for _ in 0..ell {
        powers_g1.push(pp.group.g1(&cur));
        powers_g2.push(pp.group.g2(&cur));
        cur *= a;
    }
    CommitmentKey {
        generator_g1: pp.group.generator_g1,
        generator_g2: pp.group.generator_g2,
        powers_g1,
        powers_g2,
        #[cfg(any(test, feature = "test-oracle"))]
        trapdoor: Some(a),
    }
}

/// Samples a fresh trapdoor and returns the key for sets of up to `ell`
/// elements. Outside test builds the trapdoor is dropped here.
pub fn kgen<R: RngCore + ?Sized>(
    pp: &ScPublicParams,
    ell: usize,
    rng: &mut R,
) -> Result<CommitmentKey, ScError> {
    if ell == 0 {
        return Err(ScError::ZeroCapacity);
    }
    Ok(powers_from_trapdoor(pp, ell, random_scalar(rng)))
}

/// Builds a key from a caller-chosen trapdoor.
#[cfg(any(test, feature = "test-oracle"))]
pub fn kgen_with_trapdoor(
    pp: &ScPublicParams,
    ell: usize,
    a: Scalar,
) -> Result<CommitmentKey, ScError> {
    if ell == 0 {
        return Err(ScError::ZeroCapacity);
    }
    Ok(powers_from_trapdoor(pp, ell, a))
}

/// A commitment `C`. Honest commitments are never the identity; the
/// verification routines reject an identity `C` on their own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Commitment(G1Point);

impl Commitment {
    pub fn from_point(point: G1Point) -> Self {
        Commitment(point)
    }

    pub fn point(&self) -> &G1Point {
        &self.0
    }
}

/// Opening information `(b, rho)`. `b = 1` marks the degenerate branch where
/// `rho` is the trapdoor itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Opening {
    pub trapdoor_branch: bool,
    pub rho: Scalar,
}

/// A subset witness, or the distinguished `Bottom` value produced when the
/// subset contains the trapdoor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetWitness {
    Present(G1Point),
    Bottom,
}

fn check_set_range(ck: &CommitmentKey, set: &RootSet) -> Result<(), ScError> {
    if set.is_empty() {
        return Err(ScError::EmptySet);
    }
    if set.len() > ck.max_set_size() {
        return Err(ScError::SetTooLarge {
            size: set.len(),
            capacity: ck.max_set_size(),
        });
    }
    Ok(())
}

fn capacity_error(e: PolyError) -> ScError {
    match e {
        PolyError::Capacity { degree, capacity } => ScError::SetTooLarge {
            size: degree,
            capacity,
        },
        PolyError::DuplicateElement => unreachable!("root sets are duplicate-free"),
    }
}

/// Commits to a set of `1..=ell` scalars.
pub fn commit<R: RngCore + ?Sized>(
    pp: &ScPublicParams,
    ck: &CommitmentKey,
    set: &RootSet,
    rng: &mut R,
) -> Result<(Commitment, Opening), ScError> {
    check_set_range(ck, set)?;
    if let Some(a) = ck.find_trapdoor(set) {
        let c = pp.group.g1(&random_nonzero_scalar(rng));
        return Ok((
            Commitment(c),
            Opening {
                trapdoor_branch: true,
                rho: a,
            },
        ));
    }
    let rho = random_nonzero_scalar(rng);
    let c = Poly::vanishing(set).eval_in_g1(ck).map_err(capacity_error)? * rho;
    Ok((
        Commitment(c),
        Opening {
            trapdoor_branch: false,
            rho,
        },
    ))
}

/// Checks that `opening` opens `c` to exactly `set`.
pub fn open(
    pp: &ScPublicParams,
    ck: &CommitmentKey,
    c: &Commitment,
    set: &RootSet,
    opening: &Opening,
) -> bool {
    if is_identity_g1(&c.0) {
        return false;
    }
    if check_set_range(ck, set).is_err() {
        return false;
    }
    if opening.trapdoor_branch {
        return pp.group.g1(&opening.rho) == ck.powers_g1[0];
    }
    match Poly::vanishing(set).eval_in_g1(ck) {
        Ok(f) => c.0 == f * opening.rho,
        Err(_) => false,
    }
}

/// Derives a witness that `subset` is contained in the committed `set`.
pub fn open_subset(
    pp: &ScPublicParams,
    ck: &CommitmentKey,
    c: &Commitment,
    set: &RootSet,
    opening: &Opening,
    subset: &RootSet,
) -> Result<SubsetWitness, ScError> {
    if !open(pp, ck, c, set, opening) {
        return Err(ScError::OpeningMismatch);
    }
    if subset.is_empty() {
        return Err(ScError::EmptySubset);
    }
    if !subset.is_subset(set) {
        return Err(ScError::NotASubset);
    }
    if opening.trapdoor_branch {
        if subset.contains(&opening.rho) {
            return Ok(SubsetWitness::Bottom);
        }
        // rho is not a root of f_{S'}, so the evaluation is invertible
        let f = Poly::vanishing(subset).eval(&opening.rho);
        let inv = scalar_inverse(&f).expect("rho outside subset");
        return Ok(SubsetWitness::Present(c.0 * inv));
    }
    let rest = set.difference(subset);
    let w = Poly::vanishing(&rest).eval_in_g1(ck).map_err(capacity_error)? * opening.rho;
    Ok(SubsetWitness::Present(w))
}

/// Checks a witness that `subset` is contained in the set committed by `c`.
pub fn verify_subset(
    pp: &ScPublicParams,
    ck: &CommitmentKey,
    c: &Commitment,
    subset: &RootSet,
    witness: &SubsetWitness,
) -> bool {
    if is_identity_g1(&c.0) {
        return false;
    }
    if check_set_range(ck, subset).is_err() {
        return false;
    }
    if ck.find_trapdoor(subset).is_some() {
        return *witness == SubsetWitness::Bottom;
    }
    let w = match witness {
        SubsetWitness::Present(w) if !is_identity_g1(w) => w,
        _ => return false,
    };
    let f_t = match Poly::vanishing(subset).eval_in_g2(ck) {
        Ok(p) => p,
        Err(_) => return false,
    };
    // e(W, [f_T(a)]_2) * e(-C, [1]_2) == 1
    multi_pairing(&[(*w, f_t), (-c.0, pp.group.generator_g2)]) == GtElement::identity()
}
