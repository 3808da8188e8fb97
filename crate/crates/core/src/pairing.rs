//! Thin layer over the BLS12-381 curve.
//!
//! Every other module goes through this one for scalar arithmetic, group
//! operations, pairings, and canonical point encodings. Swapping the curve
//! means replacing this file and the `CurveId` table in the codec.

use bls12_381::{G1Affine, G2Affine, G2Prepared};
use ff::Field;
use group::Curve;
use rand::RngCore;
use thiserror::Error;

pub use bls12_381::{G1Projective as G1Point, G2Projective as G2Point, Gt as GtElement, Scalar};

/// Compressed byte length of a G1 point.
pub const G1_BYTES: usize = 48;
/// Compressed byte length of a G2 point.
pub const G2_BYTES: usize = 96;
/// Byte length of a canonical scalar.
pub const SCALAR_BYTES: usize = 32;

/// Big-endian encoding of the scalar field modulus q.
pub const SCALAR_MODULUS_BE: [u8; 32] = [
    0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8, 0x08, 0x09, 0xa1, 0xd8, 0x05,
    0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe, 0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01,
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("{group} encoding must be {expected} bytes, got {actual}")]
    BadLength {
        group: GroupTag,
        expected: usize,
        actual: usize,
    },
    #[error("{0} encoding is not a canonical on-curve subgroup point")]
    InvalidPoint(GroupTag),
    #[error("scalar encoding is not canonical (value >= q)")]
    NonCanonicalScalar,
}

/// Names one of the two source groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    G1,
    G2,
}

impl std::fmt::Display for GroupTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupTag::G1 => f.write_str("G1"),
            GroupTag::G2 => f.write_str("G2"),
        }
    }
}

/// Compressed sizes of the curve's encodings, in bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointSizes {
    pub g1: usize,
    pub g2: usize,
    pub scalar: usize,
}

/// Description of the type-3 bilinear group shared by every scheme in the
/// crate: prime order, fixed generators, and encoding sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescription {
    pub curve_id: &'static str,
    pub prime_order_be: [u8; 32],
    pub generator_g1: G1Point,
    pub generator_g2: G2Point,
    pub point_sizes: PointSizes,
}

impl GroupDescription {
    pub fn bls12_381() -> Self {
        GroupDescription {
            curve_id: "BLS12-381",
            prime_order_be: SCALAR_MODULUS_BE,
            generator_g1: G1Point::generator(),
            generator_g2: G2Point::generator(),
            point_sizes: PointSizes {
                g1: G1_BYTES,
                g2: G2_BYTES,
                scalar: SCALAR_BYTES,
            },
        }
    }

    /// Checks the structural invariants: non-identity generators and a
    /// non-degenerate pairing on them.
    pub fn is_valid(&self) -> bool {
        !bool::from(self.generator_g1.is_identity())
            && !bool::from(self.generator_g2.is_identity())
            && pairing(&self.generator_g1, &self.generator_g2) != GtElement::identity()
    }

    pub fn g1(&self, x: &Scalar) -> G1Point {
        self.generator_g1 * x
    }

    pub fn g2(&self, x: &Scalar) -> G2Point {
        self.generator_g2 * x
    }

    /// `e(G1, G2)`, the generator of GT.
    pub fn gt_generator(&self) -> GtElement {
        pairing(&self.generator_g1, &self.generator_g2)
    }
}

impl Default for GroupDescription {
    fn default() -> Self {
        Self::bls12_381()
    }
}

// --- scalars ---------------------------------------------------------------

pub fn random_scalar<R: RngCore + ?Sized>(rng: &mut R) -> Scalar {
    Scalar::random(RngWrap(rng))
}

/// Uniform element of Z_q^*, by rejection of zero.
pub fn random_nonzero_scalar<R: RngCore + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let s = random_scalar(rng);
        if !bool::from(s.is_zero()) {
            return s;
        }
    }
}

pub fn scalar_inverse(a: &Scalar) -> Result<Scalar, GroupError> {
    Option::from(a.invert()).ok_or(GroupError::ZeroInverse)
}

pub fn scalar_from_u64(v: u64) -> Scalar {
    Scalar::from(v)
}

/// Reduces an arbitrary-length big-endian integer mod q.
pub fn scalar_from_integer_be(bytes: &[u8]) -> Scalar {
    let base = Scalar::from(256u64);
    bytes
        .iter()
        .fold(Scalar::ZERO, |acc, b| acc * base + Scalar::from(u64::from(*b)))
}

pub fn scalar_to_bytes_be(s: &Scalar) -> [u8; SCALAR_BYTES] {
    let mut out = s.to_bytes();
    out.reverse();
    out
}

pub fn scalar_from_bytes_be(bytes: &[u8]) -> Result<Scalar, GroupError> {
    let mut le: [u8; SCALAR_BYTES] =
        bytes.try_into().map_err(|_| GroupError::NonCanonicalScalar)?;
    le.reverse();
    Option::from(Scalar::from_bytes(&le)).ok_or(GroupError::NonCanonicalScalar)
}

/// Total order on scalars by canonical big-endian representative.
pub fn scalar_cmp(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    scalar_to_bytes_be(a).cmp(&scalar_to_bytes_be(b))
}

// --- pairings --------------------------------------------------------------

pub fn pairing(p: &G1Point, q: &G2Point) -> GtElement {
    bls12_381::pairing(&p.to_affine(), &q.to_affine())
}

/// Product of pairings over `pairs`, sharing one final exponentiation.
pub fn multi_pairing(pairs: &[(G1Point, G2Point)]) -> GtElement {
    if pairs.is_empty() {
        return GtElement::identity();
    }
    let g1: Vec<G1Affine> = pairs.iter().map(|(p, _)| p.to_affine()).collect();
    let g2: Vec<G2Prepared> = pairs
        .iter()
        .map(|(_, q)| G2Prepared::from(q.to_affine()))
        .collect();
    let terms: Vec<(&G1Affine, &G2Prepared)> = g1.iter().zip(g2.iter()).collect();
    bls12_381::multi_miller_loop(&terms).final_exponentiation()
}

/// `x^e` in multiplicative notation for GT.
pub fn gt_pow(x: &GtElement, e: &Scalar) -> GtElement {
    x * e
}

pub fn is_identity_g1(p: &G1Point) -> bool {
    bool::from(p.is_identity())
}

// --- encodings -------------------------------------------------------------

pub fn g1_to_bytes(p: &G1Point) -> [u8; G1_BYTES] {
    p.to_affine().to_compressed()
}

pub fn g2_to_bytes(p: &G2Point) -> [u8; G2_BYTES] {
    p.to_affine().to_compressed()
}

/// Decodes a compressed G1 point; rejects wrong lengths, non-canonical
/// encodings, off-curve points and points outside the prime-order subgroup.
pub fn g1_from_bytes(bytes: &[u8]) -> Result<G1Point, GroupError> {
    let arr: &[u8; G1_BYTES] = bytes.try_into().map_err(|_| GroupError::BadLength {
        group: GroupTag::G1,
        expected: G1_BYTES,
        actual: bytes.len(),
    })?;
    Option::<G1Affine>::from(G1Affine::from_compressed(arr))
        .map(G1Point::from)
        .ok_or(GroupError::InvalidPoint(GroupTag::G1))
}

pub fn g2_from_bytes(bytes: &[u8]) -> Result<G2Point, GroupError> {
    let arr: &[u8; G2_BYTES] = bytes.try_into().map_err(|_| GroupError::BadLength {
        group: GroupTag::G2,
        expected: G2_BYTES,
        actual: bytes.len(),
    })?;
    Option::<G2Affine>::from(G2Affine::from_compressed(arr))
        .map(G2Point::from)
        .ok_or(GroupError::InvalidPoint(GroupTag::G2))
}

// `ff::Field::random` takes its RNG by value; this lets callers pass
// `&mut dyn RngCore` or any unsized RNG.
struct RngWrap<'a, R: RngCore + ?Sized>(&'a mut R);

impl<R: RngCore + ?Sized> RngCore for RngWrap<'_, R> {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }
    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }
    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.0.fill_bytes(dest)
    }
    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.0.try_fill_bytes(dest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn rng() -> ChaCha20Rng {
        ChaCha20Rng::seed_from_u64(0x9a1)
    }

    #[test]
    fn field_axioms() {
        let mut rng = rng();
        let a = random_nonzero_scalar(&mut rng);
        assert_eq!(a * scalar_inverse(&a).unwrap(), Scalar::ONE);
        assert_eq!(a + Scalar::ZERO, a);
        assert_eq!(a - a, Scalar::ZERO);
        assert_eq!(-a + a, Scalar::ZERO);
        assert_eq!(scalar_inverse(&Scalar::ZERO), Err(GroupError::ZeroInverse));
    }

    #[test]
    fn integer_reduction() {
        assert_eq!(scalar_from_integer_be(&SCALAR_MODULUS_BE), Scalar::ZERO);
        assert_eq!(scalar_from_integer_be(&[1, 0]), scalar_from_u64(256));
        let mut q_plus_5 = SCALAR_MODULUS_BE;
        q_plus_5[31] += 5;
        assert_eq!(scalar_from_integer_be(&q_plus_5), scalar_from_u64(5));
        assert!(scalar_from_bytes_be(&SCALAR_MODULUS_BE).is_err());
    }

    #[test]
    fn scalar_be_round_trip() {
        let mut rng = rng();
        for _ in 0..16 {
            let s = random_scalar(&mut rng);
            assert_eq!(scalar_from_bytes_be(&scalar_to_bytes_be(&s)).unwrap(), s);
        }
        assert_eq!(scalar_to_bytes_be(&Scalar::ONE)[31], 1);
    }

    #[test]
    fn pairing_examples() {
        let gd = GroupDescription::bls12_381();
        assert!(gd.is_valid());
        let e = gd.gt_generator();
        assert_ne!(e, GtElement::identity());
        assert_eq!(
            pairing(&G1Point::identity(), &gd.generator_g2),
            GtElement::identity()
        );
        let lhs = pairing(&gd.g1(&scalar_from_u64(2)), &gd.g2(&scalar_from_u64(3)));
        assert_eq!(lhs, gt_pow(&e, &scalar_from_u64(6)));
    }

    #[test]
    fn multi_pairing_examples() {
        let gd = GroupDescription::bls12_381();
        let mut rng = rng();
        assert_eq!(multi_pairing(&[]), GtElement::identity());
        let p = gd.g1(&random_scalar(&mut rng));
        let q = gd.g2(&random_scalar(&mut rng));
        assert_eq!(multi_pairing(&[(p, q)]), pairing(&p, &q));
        assert_eq!(multi_pairing(&[(p, q), (-p, q)]), GtElement::identity());
    }

    #[test]
    fn encodings() {
        let gd = GroupDescription::bls12_381();
        let b1 = g1_to_bytes(&gd.generator_g1);
        let b2 = g2_to_bytes(&gd.generator_g2);
        assert_eq!(b1.len(), gd.point_sizes.g1);
        assert_eq!(b2.len(), gd.point_sizes.g2);
        assert_eq!(g1_from_bytes(&b1).unwrap(), gd.generator_g1);
        assert_eq!(g2_from_bytes(&b2).unwrap(), gd.generator_g2);
        assert!(matches!(
            g1_from_bytes(&[0u8; 47]),
            Err(GroupError::BadLength { actual: 47, .. })
        ));
        assert!(g2_from_bytes(&[0u8; 95]).is_err());
        // compression flag unset
        assert!(g1_from_bytes(&[0u8; 48]).is_err());
    }
}
