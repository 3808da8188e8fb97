//! The redactable signature scheme.
//!
//! A signature on a set `M` is a set commitment `C` to `M`, a
//! structure-preserving signature on `C`, and the opening of `C`. Anyone
//! holding the public key can replace the opening by a subset witness for
//! any non-empty `M' ⊆ M`; the result is again a valid signature, now on
//! `M'`, of constant size.

use rand::RngCore;
use thiserror::Error;

use crate::pairing::GroupDescription;
use crate::poly::RootSet;
use crate::set_commitment::{
    self, Commitment, CommitmentKey, Opening, ScError, ScPublicParams, SecurityLevel,
    SubsetWitness,
};
use crate::sps::{self, SpsPublicKey, SpsPublicParams, SpsSecretKey, SpsSignature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RsError {
    #[error("maximum message size must be at least 1")]
    ZeroCapacity,
    #[error("message must contain at least one element")]
    EmptyMessage,
    #[error("message of {size} elements exceeds key capacity {capacity}")]
    MessageTooLarge { size: usize, capacity: usize },
    #[error("signature on the commitment does not verify")]
    InvalidSignature,
    #[error("signature is already redacted")]
    AlreadyRedacted,
    #[error("redaction failed: {0}")]
    Redaction(ScError),
}

impl From<ScError> for RsError {
    fn from(e: ScError) -> Self {
        match e {
            ScError::ZeroCapacity => RsError::ZeroCapacity,
            ScError::EmptySet => RsError::EmptyMessage,
            ScError::SetTooLarge { size, capacity } => RsError::MessageTooLarge { size, capacity },
            other => RsError::Redaction(other),
        }
    }
}

/// Public parameters for both building blocks, over one shared group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsPublicParams {
    pub sps: SpsPublicParams,
    pub sc: ScPublicParams,
}

impl RsPublicParams {
    pub fn group(&self) -> &GroupDescription {
        &self.sc.group
    }
}

pub fn setup(level: SecurityLevel) -> RsPublicParams {
    let sc = set_commitment::setup(level);
    RsPublicParams {
        sps: SpsPublicParams::new(sc.group.clone()),
        sc,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsPublicKey {
    pub sps: SpsPublicKey,
    pub ck: CommitmentKey,
}

impl RsPublicKey {
    pub fn max_message_size(&self) -> usize {
        self.ck.max_set_size()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsSecretKey {
    pub sps: SpsSecretKey,
    pub ck: CommitmentKey,
}

impl RsSecretKey {
    pub fn public_key(&self) -> RsPublicKey {
        RsPublicKey {
            sps: self.sps.public.clone(),
            ck: self.ck.clone(),
        }
    }

    pub fn max_message_size(&self) -> usize {
        self.ck.max_set_size()
    }
}

/// How the commitment is opened: the signer's opening for the exact set, or
/// a subset witness produced by redaction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Proof {
    Opening(Opening),
    Witness(SubsetWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsSignature {
    pub commitment: Commitment,
    pub sigma_c: SpsSignature,
    pub proof: Proof,
}

impl RsSignature {
    pub fn is_redacted(&self) -> bool {
        matches!(self.proof, Proof::Witness(_))
    }
}

pub fn keygen<R: RngCore + ?Sized>(
    pp: &RsPublicParams,
    max_message_size: usize,
    rng: &mut R,
) -> Result<(RsPublicKey, RsSecretKey), RsError> {
    let ck = set_commitment::kgen(&pp.sc, max_message_size, rng)?;
    let (sps_pk, sps_sk) = sps::keygen(&pp.sps, rng);
    Ok((
        RsPublicKey {
            sps: sps_pk,
            ck: ck.clone(),
        },
        RsSecretKey { sps: sps_sk, ck },
    ))
}

pub fn sign<R: RngCore + ?Sized>(
    pp: &RsPublicParams,
    sk: &RsSecretKey,
    message: &RootSet,
    rng: &mut R,
) -> Result<RsSignature, RsError> {
    let (commitment, opening) = set_commitment::commit(&pp.sc, &sk.ck, message, rng)?;
    let sigma_c = sps::sign(&pp.sps, &sk.sps, commitment.point(), rng);
    Ok(RsSignature {
        commitment,
        sigma_c,
        proof: Proof::Opening(opening),
    })
}

/// Derives a signature on `subset` from a signer-issued signature on
/// `message`. Uses only public material.
pub fn redact(
    pp: &RsPublicParams,
    pk: &RsPublicKey,
    message: &RootSet,
    sig: &RsSignature,
    subset: &RootSet,
) -> Result<RsSignature, RsError> {
    let opening = match &sig.proof {
        Proof::Opening(o) => o,
        Proof::Witness(_) => return Err(RsError::AlreadyRedacted),
    };
    if !sps::verify(&pp.sps, &pk.sps, sig.commitment.point(), &sig.sigma_c) {
        return Err(RsError::InvalidSignature);
    }
    let witness = set_commitment::open_subset(
        &pp.sc,
        &pk.ck,
        &sig.commitment,
        message,
        opening,
        subset,
    )
    .map_err(RsError::Redaction)?;
    Ok(RsSignature {
        commitment: sig.commitment,
        sigma_c: sig.sigma_c,
        proof: Proof::Witness(witness),
    })
}

/// Original signatures verify only against the exact signed set; redacted
/// ones against the set they were redacted to.
pub fn verify(pp: &RsPublicParams, pk: &RsPublicKey, message: &RootSet, sig: &RsSignature) -> bool {
    if !sps::verify(&pp.sps, &pk.sps, sig.commitment.point(), &sig.sigma_c) {
        return false;
    }
    match &sig.proof {
        Proof::Opening(o) => set_commitment::open(&pp.sc, &pk.ck, &sig.commitment, message, o),
        Proof::Witness(w) => {
            set_commitment::verify_subset(&pp.sc, &pk.ck, &sig.commitment, message, w)
        }
    }
}
