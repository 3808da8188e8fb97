//! Compact redactable signatures for set-structured documents.
//!
//! A signer commits to the set of encoded document blocks with a
//! polynomial set commitment and signs the commitment with a
//! structure-preserving signature. Anyone holding the public key can later
//! replace the commitment opening with a subset witness, producing a
//! signature on any non-empty subset of the blocks. Both signature forms
//! have a fixed size, independent of the document and of the key bound.
//!
//! ```
//! use rand::rngs::OsRng;
//! use redsig::{encoding, redactable, SecurityLevel};
//! use redsig::encoding::{DocumentBlocks, EncodingMode, RedactionMask};
//!
//! let pp = redactable::setup(SecurityLevel::default());
//! let (pk, sk) = redactable::keygen(&pp, 8, &mut OsRng).unwrap();
//!
//! let doc = DocumentBlocks::from_strs(EncodingMode::List, &["name: Ada", "dob: 1815", "id: 42"]);
//! let full = encoding::encode_blocks(&doc).unwrap();
//! let sig = redactable::sign(&pp, &sk, &full, &mut OsRng).unwrap();
//!
//! let masked = encoding::apply_mask(&doc, &RedactionMask::new([0, 2]).unwrap()).unwrap();
//! let red = redactable::redact(&pp, &pk, &masked.full, &sig, &masked.subset).unwrap();
//! assert!(redactable::verify(&pp, &pk, &masked.subset, &red));
//! ```

pub mod cli;
pub mod codec;
pub mod encoding;
pub mod pairing;
pub mod poly;
pub mod redactable;
pub mod set_commitment;
pub mod sps;

pub use codec::DecodeError;
pub use encoding::{DocumentBlocks, EncodingMode, RedactionMask};
pub use pairing::{GroupDescription, Scalar};
pub use poly::RootSet;
pub use redactable::{Proof, RsError, RsPublicKey, RsPublicParams, RsSecretKey, RsSignature};
pub use set_commitment::SecurityLevel;
