//! Structure-preserving signatures on a single G1 element (Kiltz–Pan–Wee,
//! SXDH instance, `k = 1`).
//!
//! Messages, keys and signatures are all group elements, so a set
//! commitment can be signed directly. Row vectors over `Z_q` are lifted
//! componentwise; a row paired with a column is the product of the
//! componentwise pairings.

use rand::RngCore;

use crate::pairing::{multi_pairing, random_scalar, G1Point, G2Point, GroupDescription, GtElement, Scalar};

/// Public parameters: the bilinear group; the message space is G1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpsPublicParams {
    pub group: GroupDescription,
}

impl SpsPublicParams {
    pub fn new(group: GroupDescription) -> Self {
        SpsPublicParams { group }
    }
}

/// `([D0]_2, [D1]_2, [D]_2, [A]_2)`, each a column of two G2 points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpsPublicKey {
    pub a: [G2Point; 2],
    pub d: [G2Point; 2],
    pub d0: [G2Point; 2],
    pub d1: [G2Point; 2],
}

/// Signing key. `K0` and `K1` are not kept; only their images `P0 = B^T K0`,
/// `P1 = B^T K1` in G1 and `D0`, `D1` in G2 are needed.
#[derive(Clone, PartialEq, Eq)]
pub struct SpsSecretKey {
    /// Row-major 2x2 matrix `K`.
    pub k: [[Scalar; 2]; 2],
    pub p0: [G1Point; 2],
    pub p1: [G1Point; 2],
    pub b: [G1Point; 2],
    pub public: SpsPublicKey,
}

impl std::fmt::Debug for SpsSecretKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpsSecretKey").finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpsSignature {
    pub theta1: [G1Point; 2],
    pub theta2: [G1Point; 2],
    pub theta3: [G1Point; 2],
    pub theta4: G2Point,
}

/// Every scalar sampled by key generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeygenScalars {
    pub a: Scalar,
    pub b: Scalar,
    pub k: [[Scalar; 2]; 2],
    pub k0: [[Scalar; 2]; 2],
    pub k1: [[Scalar; 2]; 2],
}

impl KeygenScalars {
    pub fn random<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        let mut mat = || {
            [
                [random_scalar(rng), random_scalar(rng)],
                [random_scalar(rng), random_scalar(rng)],
            ]
        };
        let (k, k0, k1) = (mat(), mat(), mat());
        KeygenScalars {
            a: random_scalar(rng),
            b: random_scalar(rng),
            k,
            k0,
            k1,
        }
    }
}

/// `M * (1, x)^T`
pub(crate) fn mat_times_col(m: &[[Scalar; 2]; 2], x: &Scalar) -> [Scalar; 2] {
    [m[0][0] + m[0][1] * x, m[1][0] + m[1][1] * x]
}

/// `(1, x) * M`
pub(crate) fn row_times_mat(x: &Scalar, m: &[[Scalar; 2]; 2]) -> [Scalar; 2] {
    [m[0][0] + x * m[1][0], m[0][1] + x * m[1][1]]
}

fn derive_keys(pp: &SpsPublicParams, s: &KeygenScalars) -> (SpsPublicKey, SpsSecretKey) {
    let g = &pp.group;
    let lift2 = |v: [Scalar; 2]| [g.g2(&v[0]), g.g2(&v[1])];
    let lift1 = |v: [Scalar; 2]| [g.g1(&v[0]), g.g1(&v[1])];

    let public = SpsPublicKey {
        a: [g.generator_g2, g.g2(&s.a)],
        d: lift2(mat_times_col(&s.k, &s.a)),
        d0: lift2(mat_times_col(&s.k0, &s.a)),
        d1: lift2(mat_times_col(&s.k1, &s.a)),
    };
    let secret = SpsSecretKey {
        k: s.k,
        p0: lift1(row_times_mat(&s.b, &s.k0)),
        p1: lift1(row_times_mat(&s.b, &s.k1)),
        b: [g.generator_g1, g.g1(&s.b)],
        public: public.clone(),
    };
    (public, secret)
}

pub fn keygen<R: RngCore + ?Sized>(
    pp: &SpsPublicParams,
    rng: &mut R,
) -> (SpsPublicKey, SpsSecretKey) {
    derive_keys(pp, &KeygenScalars::random(rng))
}

/// Key generation from caller-supplied scalars.
#[cfg(any(test, feature = "test-oracle"))]
pub fn keygen_from_scalars(
    pp: &SpsPublicParams,
    scalars: &KeygenScalars,
) -> (SpsPublicKey, SpsSecretKey) {
    derive_keys(pp, scalars)
}

fn sign_with_randomness(
    pp: &SpsPublicParams,
    sk: &SpsSecretKey,
    message: &G1Point,
    r: Scalar,
    tau: Scalar,
) -> SpsSignature {
    let g1 = pp.group.generator_g1;
    let theta1 = [0, 1].map(|j| {
        g1 * sk.k[0][j] + message * sk.k[1][j] + (sk.p0[j] + sk.p1[j] * tau) * r
    });
    let theta2 = [sk.b[0] * r, sk.b[1] * r];
    let theta3 = [theta2[0] * tau, theta2[1] * tau];
    SpsSignature {
        theta1,
        theta2,
        theta3,
        theta4: pp.group.g2(&tau),
    }
}

/// Signs `message` with fresh `r, tau` drawn from `Z_q`.
pub fn sign<R: RngCore + ?Sized>(
    pp: &SpsPublicParams,
    sk: &SpsSecretKey,
    message: &G1Point,
    rng: &mut R,
) -> SpsSignature {
    let r = random_scalar(rng);
    let tau = random_scalar(rng);
    sign_with_randomness(pp, sk, message, r, tau)
}

/// Signs with caller-chosen `r` and `tau`.
#[cfg(any(test, feature = "test-oracle"))]
pub fn sign_with(
    pp: &SpsPublicParams,
    sk: &SpsSecretKey,
    message: &G1Point,
    r: Scalar,
    tau: Scalar,
) -> SpsSignature {
    sign_with_randomness(pp, sk, message, r, tau)
}

/// Checks both pairing-product equations:
///
/// ```text
/// e(θ1, [A]_2) = e([(1, m)]_1, [D]_2) · e(θ2, [D0]_2) · e(θ3, [D1]_2)
/// e(θ2[i], θ4) = e(θ3[i], [1]_2)            for i in {0, 1}
/// ```
pub fn verify(
    pp: &SpsPublicParams,
    pk: &SpsPublicKey,
    message: &G1Point,
    sig: &SpsSignature,
) -> bool {
    let g1 = pp.group.generator_g1;
    let g2 = pp.group.generator_g2;
    let mut first = Vec::with_capacity(10);
    for i in 0..2 {
        first.push((sig.theta1[i], pk.a[i]));
        first.push((-sig.theta2[i], pk.d0[i]));
        first.push((-sig.theta3[i], pk.d1[i]));
    }
    first.push((-g1, pk.d[0]));
    first.push((-message, pk.d[1]));
    if multi_pairing(&first) != GtElement::identity() {
        return false;
    }
    (0..2).all(|i| {
        multi_pairing(&[(sig.theta2[i], sig.theta4), (-sig.theta3[i], g2)]) == GtElement::identity()
    })
}

impl SpsSignature {
    /// The six G1 components in wire order.
    pub fn g1_points(&self) -> [G1Point; 6] {
        [
            self.theta1[0],
            self.theta1[1],
            self.theta2[0],
            self.theta2[1],
            self.theta3[0],
            self.theta3[1],
        ]
    }
}
