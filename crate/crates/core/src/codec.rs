//! Versioned binary encodings for keys and signatures.
//!
//! Every artifact starts with a five-byte envelope
//!
//! ```text
//! [magic "RS" 2B][version 1B][curve id 1B][kind 1B]
//! ```
//!
//! followed by a payload whose length is fixed by the kind, the curve and
//! (for keys) the bound `ell`. Points use the curve's standard compressed
//! encoding; scalars and integers are big-endian.
//!
//! | kind | payload |
//! |------|---------|
//! | `0x01` original signature | `C`, `θ1[0..2]`, `θ2[0..2]`, `θ3[0..2]`, `θ4`, branch bit, `ρ` |
//! | `0x02` redacted signature | `C`, `θ1..θ3`, `θ4`, presence bit, `W` (identity encoding when absent) |
//! | `0x10` commitment key | `ell` (u32), `[a^i]_1` × ell, `[a^i]_2` × ell |
//! | `0x11` public key | `ell`, `A[0..2]`, `D[0..2]`, `D0[0..2]`, `D1[0..2]`, commitment-key powers |
//! | `0x12` secret key | `ell`, `K` (row-major), `B[0..2]`, `P0[0..2]`, `P1[0..2]`, then the public-key body |

use rand::RngCore;
use thiserror::Error;

use crate::pairing::{
    g1_from_bytes, g1_to_bytes, g2_from_bytes, g2_to_bytes, is_identity_g1, scalar_from_bytes_be,
    scalar_to_bytes_be, G1Point, G2Point, GroupDescription, GroupError, PointSizes, Scalar,
    G1_BYTES, G2_BYTES, SCALAR_BYTES,
};
use crate::poly::RootSet;
use crate::redactable::{self, Proof, RsError, RsPublicKey, RsPublicParams, RsSecretKey, RsSignature};
use crate::set_commitment::{
    Commitment, CommitmentKey, Opening, ScPublicParams, SecurityLevel, SubsetWitness,
};
use crate::sps::{SpsPublicKey, SpsSecretKey, SpsSignature};

pub const MAGIC: [u8; 2] = *b"RS";
pub const VERSION: u8 = 1;
pub const ENVELOPE_LEN: usize = 5;

/// Wire identifier of a supported curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum CurveId {
    Bls12_381 = 0x01,
}

impl CurveId {
    pub fn from_byte(b: u8) -> Result<Self, DecodeError> {
        match b {
            0x01 => Ok(CurveId::Bls12_381),
            other => Err(DecodeError::UnknownCurve(other)),
        }
    }

    pub fn group(self) -> GroupDescription {
        match self {
            CurveId::Bls12_381 => SecurityLevel::Bits128.group(),
        }
    }

    fn of(group: &GroupDescription) -> CurveId {
        match group.curve_id {
            "BLS12-381" => CurveId::Bls12_381,
            other => unreachable!("no wire id for curve {other}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum ArtifactKind {
    OriginalSignature = 0x01,
    RedactedSignature = 0x02,
    CommitmentKey = 0x10,
    PublicKey = 0x11,
    SecretKey = 0x12,
}

impl ArtifactKind {
    pub fn from_byte(b: u8) -> Result<Self, DecodeError> {
        Ok(match b {
            0x01 => ArtifactKind::OriginalSignature,
            0x02 => ArtifactKind::RedactedSignature,
            0x10 => ArtifactKind::CommitmentKey,
            0x11 => ArtifactKind::PublicKey,
            0x12 => ArtifactKind::SecretKey,
            other => return Err(DecodeError::UnknownKind(other)),
        })
    }

    /// Conventional file extension.
    pub fn extension(self) -> &'static str {
        match self {
            ArtifactKind::OriginalSignature | ArtifactKind::RedactedSignature => "rssig",
            ArtifactKind::CommitmentKey => "rsck",
            ArtifactKind::PublicKey => "rspk",
            ArtifactKind::SecretKey => "rssk",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            ArtifactKind::OriginalSignature => "original signature",
            ArtifactKind::RedactedSignature => "redacted signature",
            ArtifactKind::CommitmentKey => "commitment key",
            ArtifactKind::PublicKey => "public key",
            ArtifactKind::SecretKey => "secret key",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("input truncated: needed {needed} more bytes")]
    Truncated { needed: usize },
    #[error("{0} trailing bytes after payload")]
    TrailingBytes(usize),
    #[error("bad magic bytes")]
    BadMagic,
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u8),
    #[error("unknown curve id {0:#04x}")]
    UnknownCurve(u8),
    #[error("unknown artifact kind {0:#04x}")]
    UnknownKind(u8),
    #[error("expected {expected}, found {found}")]
    UnexpectedKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("identity point where a non-identity element is required")]
    IdentityNotAllowed,
    #[error("invalid flag byte {0:#04x}")]
    InvalidFlag(u8),
    #[error("invalid key: {0}")]
    InvalidKey(&'static str),
}

/// Marker required to serialize a secret key. There is no other path.
#[derive(Debug, Clone, Copy)]
pub struct AllowSecretExport;

// --- writer / reader -------------------------------------------------------

struct Writer(Vec<u8>);

impl Writer {
    fn new(kind: ArtifactKind, group: &GroupDescription) -> Self {
        let mut v = Vec::with_capacity(256);
        v.extend_from_slice(&MAGIC);
        v.push(VERSION);
        v.push(CurveId::of(group) as u8);
        v.push(kind as u8);
        Writer(v)
    }
    fn g1(&mut self, p: &G1Point) {
        self.0.extend_from_slice(&g1_to_bytes(p));
    }
    fn g2(&mut self, p: &G2Point) {
        self.0.extend_from_slice(&g2_to_bytes(p));
    }
    fn scalar(&mut self, s: &Scalar) {
        self.0.extend_from_slice(&scalar_to_bytes_be(s));
    }
    fn byte(&mut self, b: u8) {
        self.0.push(b);
    }
    fn u32(&mut self, v: u32) {
        self.0.extend_from_slice(&v.to_be_bytes());
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], DecodeError> {
        let rest = self.buf.len() - self.pos;
        if rest < n {
            return Err(DecodeError::Truncated { needed: n - rest });
        }
        let out = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(out)
    }
    fn g1(&mut self) -> Result<G1Point, DecodeError> {
        Ok(g1_from_bytes(self.take(G1_BYTES)?)?)
    }
    fn g1_nonzero(&mut self) -> Result<G1Point, DecodeError> {
        let p = self.g1()?;
        if is_identity_g1(&p) {
            return Err(DecodeError::IdentityNotAllowed);
        }
        Ok(p)
    }
    fn g2(&mut self) -> Result<G2Point, DecodeError> {
        Ok(g2_from_bytes(self.take(G2_BYTES)?)?)
    }
    fn scalar(&mut self) -> Result<Scalar, DecodeError> {
        Ok(scalar_from_bytes_be(self.take(SCALAR_BYTES)?)?)
    }
    fn byte(&mut self) -> Result<u8, DecodeError> {
        Ok(self.take(1)?[0])
    }
    fn u32(&mut self) -> Result<u32, DecodeError> {
        let b = self.take(4)?;
        Ok(u32::from_be_bytes([b[0], b[1], b[2], b[3]]))
    }
    fn finish(self) -> Result<(), DecodeError> {
        match self.buf.len() - self.pos {
            0 => Ok(()),
            n => Err(DecodeError::TrailingBytes(n)),
        }
    }
}

/// Parsed envelope header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Envelope {
    pub version: u8,
    pub curve: CurveId,
    pub kind: ArtifactKind,
}

pub fn read_envelope(bytes: &[u8]) -> Result<Envelope, DecodeError> {
    if bytes.len() < ENVELOPE_LEN {
        return Err(DecodeError::Truncated {
            needed: ENVELOPE_LEN - bytes.len(),
        });
    }
    if bytes[..2] != MAGIC {
        return Err(DecodeError::BadMagic);
    }
    if bytes[2] != VERSION {
        return Err(DecodeError::UnsupportedVersion(bytes[2]));
    }
    Ok(Envelope {
        version: bytes[2],
        curve: CurveId::from_byte(bytes[3])?,
        kind: ArtifactKind::from_byte(bytes[4])?,
    })
}

fn open_envelope<'a>(
    bytes: &'a [u8],
    accept: &[ArtifactKind],
) -> Result<(Envelope, Reader<'a>), DecodeError> {
    let env = read_envelope(bytes)?;
    if !accept.contains(&env.kind) {
        return Err(DecodeError::UnexpectedKind {
            expected: accept[0].describe(),
            found: env.kind.describe(),
        });
    }
    Ok((
        env,
        Reader {
            buf: bytes,
            pos: ENVELOPE_LEN,
        },
    ))
}

// --- commitment key --------------------------------------------------------

fn write_ck_body(w: &mut Writer, ck: &CommitmentKey) {
    for p in ck.powers_g1() {
        w.g1(p);
    }
    for p in ck.powers_g2() {
        w.g2(p);
    }
}

fn read_ck_body(
    r: &mut Reader<'_>,
    group: &GroupDescription,
    ell: usize,
) -> Result<CommitmentKey, DecodeError> {
    let g1 = (0..ell).map(|_| r.g1()).collect::<Result<Vec<_>, _>>()?;
    let g2 = (0..ell).map(|_| r.g2()).collect::<Result<Vec<_>, _>>()?;
    let pp = ScPublicParams {
        group: group.clone(),
    };
    CommitmentKey::from_powers(&pp, g1, g2).map_err(|_| DecodeError::InvalidKey("empty key"))
}

pub fn encode_commitment_key(group: &GroupDescription, ck: &CommitmentKey) -> Vec<u8> {
    let mut w = Writer::new(ArtifactKind::CommitmentKey, group);
    w.u32(ck.max_set_size() as u32);
    write_ck_body(&mut w, ck);
    w.0
}

pub fn decode_commitment_key(bytes: &[u8]) -> Result<CommitmentKey, DecodeError> {
    let (env, mut r) = open_envelope(bytes, &[ArtifactKind::CommitmentKey])?;
    let ell = r.u32()? as usize;
    let ck = read_ck_with_ell(&mut r, &env.curve.group(), ell)?;
    r.finish()?;
    Ok(ck)
}

// --- public / secret keys --------------------------------------------------

fn write_sps_pk(w: &mut Writer, pk: &SpsPublicKey) {
    for v in [&pk.a, &pk.d, &pk.d0, &pk.d1] {
        w.g2(&v[0]);
        w.g2(&v[1]);
    }
}

fn read_sps_pk(r: &mut Reader<'_>, group: &GroupDescription) -> Result<SpsPublicKey, DecodeError> {
    let mut pair = || -> Result<[G2Point; 2], DecodeError> { Ok([r.g2()?, r.g2()?]) };
    let pk = SpsPublicKey {
        a: pair()?,
        d: pair()?,
        d0: pair()?,
        d1: pair()?,
    };
    if pk.a[0] != group.generator_g2 {
        return Err(DecodeError::InvalidKey("A must start with the G2 generator"));
    }
    Ok(pk)
}

pub fn encode_public_key(group: &GroupDescription, pk: &RsPublicKey) -> Vec<u8> {
    let mut w = Writer::new(ArtifactKind::PublicKey, group);
    w.u32(pk.ck.max_set_size() as u32);
    write_sps_pk(&mut w, &pk.sps);
    write_ck_body(&mut w, &pk.ck);
    w.0
}

pub fn decode_public_key(bytes: &[u8]) -> Result<RsPublicKey, DecodeError> {
    let (env, mut r) = open_envelope(bytes, &[ArtifactKind::PublicKey])?;
    let group = env.curve.group();
    let ell = r.u32()? as usize;
    let sps = read_sps_pk(&mut r, &group)?;
    let ck = read_ck_with_ell(&mut r, &group, ell)?;
    r.finish()?;
    Ok(RsPublicKey { sps, ck })
}

fn read_ck_with_ell(
    r: &mut Reader<'_>,
    group: &GroupDescription,
    ell: usize,
) -> Result<CommitmentKey, DecodeError> {
    if ell == 0 {
        return Err(DecodeError::InvalidKey("ell must be at least 1"));
    }
    let rest = r.buf.len() - r.pos;
    let need = ell.saturating_mul(G1_BYTES + G2_BYTES);
    if need > rest {
        return Err(DecodeError::Truncated {
            needed: need - rest,
        });
    }
    read_ck_body(r, group, ell)
}

pub fn export_secret_key(
    group: &GroupDescription,
    sk: &RsSecretKey,
    _: AllowSecretExport,
) -> Vec<u8> {
    let mut w = Writer::new(ArtifactKind::SecretKey, group);
    w.u32(sk.ck.max_set_size() as u32);
    for row in &sk.sps.k {
        w.scalar(&row[0]);
        w.scalar(&row[1]);
    }
    for v in [&sk.sps.b, &sk.sps.p0, &sk.sps.p1] {
        w.g1(&v[0]);
        w.g1(&v[1]);
    }
    write_sps_pk(&mut w, &sk.sps.public);
    write_ck_body(&mut w, &sk.ck);
    w.0
}

pub fn decode_secret_key(bytes: &[u8]) -> Result<RsSecretKey, DecodeError> {
    let (env, mut r) = open_envelope(bytes, &[ArtifactKind::SecretKey])?;
    let group = env.curve.group();
    let ell = r.u32()? as usize;
    let k = [[r.scalar()?, r.scalar()?], [r.scalar()?, r.scalar()?]];
    let b = [r.g1()?, r.g1()?];
    let p0 = [r.g1()?, r.g1()?];
    let p1 = [r.g1()?, r.g1()?];
    if b[0] != group.generator_g1 {
        return Err(DecodeError::InvalidKey("B must start with the G1 generator"));
    }
    let public = read_sps_pk(&mut r, &group)?;
    let ck = read_ck_with_ell(&mut r, &group, ell)?;
    r.finish()?;
    Ok(RsSecretKey {
        sps: SpsSecretKey {
            k,
            p0,
            p1,
            b,
            public,
        },
        ck,
    })
}

// --- signatures ------------------------------------------------------------

/// Byte length of an encoded original signature.
pub fn original_signature_len(sizes: &PointSizes) -> usize {
    ENVELOPE_LEN + 7 * sizes.g1 + sizes.g2 + 1 + sizes.scalar
}

/// Byte length of an encoded redacted signature.
pub fn redacted_signature_len(sizes: &PointSizes) -> usize {
    ENVELOPE_LEN + 8 * sizes.g1 + sizes.g2 + 1
}

/// Byte length of an encoded public key for bound `ell`.
pub fn public_key_len(sizes: &PointSizes, ell: usize) -> usize {
    ENVELOPE_LEN + 4 + 8 * sizes.g2 + ell * (sizes.g1 + sizes.g2)
}

pub fn encode_signature(group: &GroupDescription, sig: &RsSignature) -> Vec<u8> {
    let kind = match sig.proof {
        Proof::Opening(_) => ArtifactKind::OriginalSignature,
        Proof::Witness(_) => ArtifactKind::RedactedSignature,
    };
    let mut w = Writer::new(kind, group);
    w.g1(sig.commitment.point());
    for p in sig.sigma_c.g1_points() {
        w.g1(&p);
    }
    w.g2(&sig.sigma_c.theta4);
    match &sig.proof {
        Proof::Opening(o) => {
            w.byte(o.trapdoor_branch as u8);
            w.scalar(&o.rho);
        }
        Proof::Witness(SubsetWitness::Present(p)) => {
            w.byte(1);
            w.g1(p);
        }
        Proof::Witness(SubsetWitness::Bottom) => {
            w.byte(0);
            w.g1(&G1Point::default());
        }
    }
    w.0
}

pub fn decode_signature(bytes: &[u8]) -> Result<RsSignature, DecodeError> {
    let (_, mut r) = open_envelope(
        bytes,
        &[ArtifactKind::OriginalSignature, ArtifactKind::RedactedSignature],
    )?;
    let kind = ArtifactKind::from_byte(bytes[4])?;
    let commitment = Commitment::from_point(r.g1_nonzero()?);
    let mut g1 = || r.g1();
    let theta1 = [g1()?, g1()?];
    let theta2 = [g1()?, g1()?];
    let theta3 = [g1()?, g1()?];
    let theta4 = r.g2()?;
    let proof = match kind {
        ArtifactKind::OriginalSignature => {
            let flag = r.byte()?;
            if flag > 1 {
                return Err(DecodeError::InvalidFlag(flag));
            }
            Proof::Opening(Opening {
                trapdoor_branch: flag == 1,
                rho: r.scalar()?,
            })
        }
        _ => match r.byte()? {
            1 => Proof::Witness(SubsetWitness::Present(r.g1_nonzero()?)),
            0 => {
                if !is_identity_g1(&r.g1()?) {
                    return Err(DecodeError::InvalidFlag(0));
                }
                Proof::Witness(SubsetWitness::Bottom)
            }
            flag => return Err(DecodeError::InvalidFlag(flag)),
        },
    };
    r.finish()?;
    Ok(RsSignature {
        commitment,
        sigma_c: SpsSignature {
            theta1,
            theta2,
            theta3,
            theta4,
        },
        proof,
    })
}

// --- size accounting -------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeRow {
    pub set_size: usize,
    pub subset_size: usize,
    pub original_bytes: usize,
    pub redacted_bytes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub max_set_size: usize,
    pub public_key_bytes: usize,
    pub rows: Vec<SizeRow>,
}

impl SizeReport {
    /// True when every row has the same original length and the same
    /// redacted length.
    pub fn is_constant(&self) -> bool {
        match self.rows.first() {
            None => true,
            Some(first) => self.rows.iter().all(|r| {
                r.original_bytes == first.original_bytes && r.redacted_bytes == first.redacted_bytes
            }),
        }
    }
}

/// Signs and redacts random sets of each sampled size under a fresh key of
/// bound `ell`, recording encoded lengths. Each set is redacted to its
/// first half (at least one element).
pub fn measure_sizes<R: RngCore + ?Sized>(
    pp: &RsPublicParams,
    ell: usize,
    samples: &[usize],
    rng: &mut R,
) -> Result<SizeReport, RsError> {
    let group = pp.group();
    let (pk, sk) = redactable::keygen(pp, ell, rng)?;
    let mut rows = Vec::with_capacity(samples.len());
    for &n in samples {
        let m = RootSet::from_dedup((0..n).map(|_| crate::pairing::random_scalar(rng)));
        let sig = redactable::sign(pp, &sk, &m, rng)?;
        let keep = n.div_ceil(2).max(1);
        let sub = RootSet::new(m.iter().take(keep).copied()).expect("subset of a set");
        let red = redactable::redact(pp, &pk, &m, &sig, &sub)?;
        rows.push(SizeRow {
            set_size: n,
            subset_size: sub.len(),
            original_bytes: encode_signature(group, &sig).len(),
            redacted_bytes: encode_signature(group, &red).len(),
        });
    }
    Ok(SizeReport {
        max_set_size: ell,
        public_key_bytes: encode_public_key(group, &pk).len(),
        rows,
    })
}
