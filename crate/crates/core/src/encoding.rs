//! Mapping documents to sets of scalars.
//!
//! A document is a sequence of byte blocks. In `Set` mode each block is
//! hashed on its own, so the signed object is an unordered set. In `List`
//! mode every block is bound to its original position (an order-ID), which
//! stops a redactor from re-ordering blocks; positions survive redaction, so
//! gaps stay visible.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha512};
use thiserror::Error;

use crate::pairing::Scalar;
use crate::poly::RootSet;

const SET_TAG: &[u8] = b"REDSIG-V1-SET-BLOCK";
const LIST_TAG: &[u8] = b"REDSIG-V1-LIST-BLOCK";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodingError {
    #[error("document has no blocks")]
    EmptyDocument,
    #[error("blocks {first} and {second} encode to the same element; set mode needs distinct blocks")]
    DuplicateBlock { first: usize, second: usize },
    #[error("block positions must be strictly increasing")]
    UnorderedPositions,
    #[error("redaction mask keeps no blocks")]
    EmptyMask,
    #[error("mask index {index} out of range for a {len}-block document")]
    MaskOutOfRange { index: usize, len: usize },
    #[error("malformed document: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodingMode {
    Set,
    #[default]
    List,
}

impl std::str::FromStr for EncodingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "set" => Ok(EncodingMode::Set),
            "list" => Ok(EncodingMode::List),
            other => Err(format!("unknown mode `{other}` (expected set or list)")),
        }
    }
}

/// A block together with its position in the original document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub position: u64,
    pub data: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentBlocks {
    mode: EncodingMode,
    blocks: Vec<Block>,
}

impl DocumentBlocks {
    /// A fresh document; positions are assigned `0..n`.
    pub fn new(mode: EncodingMode, blocks: Vec<Vec<u8>>) -> Self {
        DocumentBlocks {
            mode,
            blocks: blocks
                .into_iter()
                .enumerate()
                .map(|(i, data)| Block {
                    position: i as u64,
                    data,
                })
                .collect(),
        }
    }

    /// A (possibly redacted) document whose blocks carry explicit positions.
    pub fn with_positions(mode: EncodingMode, blocks: Vec<Block>) -> Result<Self, EncodingError> {
        if blocks.windows(2).any(|w| w[0].position >= w[1].position) {
            return Err(EncodingError::UnorderedPositions);
        }
        Ok(DocumentBlocks { mode, blocks })
    }

    pub fn from_strs<S: AsRef<str>>(mode: EncodingMode, blocks: &[S]) -> Self {
        Self::new(
            mode,
            blocks.iter().map(|s| s.as_ref().as_bytes().to_vec()).collect(),
        )
    }

    pub fn mode(&self) -> EncodingMode {
        self.mode
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// `SHA-512(len(tag) || tag || payload)` read as a little-endian 512-bit
/// integer and reduced mod q.
pub fn hash_to_scalar(tag: &[u8], payload: &[&[u8]]) -> Scalar {
    let mut h = Sha512::new();
    h.update([tag.len() as u8]);
    h.update(tag);
    for p in payload {
        h.update(p);
    }
    let digest: [u8; 64] = h.finalize().into();
    Scalar::from_bytes_wide(&digest)
}

/// The scalar a single block encodes to.
pub fn encode_block(mode: EncodingMode, block: &Block) -> Scalar {
    match mode {
        EncodingMode::Set => hash_to_scalar(SET_TAG, &[&block.data]),
        EncodingMode::List => {
            hash_to_scalar(LIST_TAG, &[&block.position.to_be_bytes(), &block.data])
        }
    }
}

pub fn encode_blocks(doc: &DocumentBlocks) -> Result<RootSet, EncodingError> {
    if doc.is_empty() {
        return Err(EncodingError::EmptyDocument);
    }
    let scalars: Vec<Scalar> = doc
        .blocks
        .iter()
        .map(|b| encode_block(doc.mode, b))
        .collect();
    for (i, s) in scalars.iter().enumerate() {
        if let Some(j) = scalars[..i].iter().position(|t| t == s) {
            return Err(EncodingError::DuplicateBlock {
                first: j,
                second: i,
            });
        }
    }
    Ok(RootSet::new(scalars).expect("duplicates checked above"))
}

/// Indices (into the document's block list) of the blocks to keep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedactionMask {
    keep: BTreeSet<usize>,
}

impl RedactionMask {
    pub fn new(keep: impl IntoIterator<Item = usize>) -> Result<Self, EncodingError> {
        let keep: BTreeSet<usize> = keep.into_iter().collect();
        if keep.is_empty() {
            return Err(EncodingError::EmptyMask);
        }
        Ok(RedactionMask { keep })
    }

    /// Parses `"0,2,5"`; whitespace around entries is ignored.
    pub fn parse(spec: &str) -> Result<Self, EncodingError> {
        let keep = spec
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| EncodingError::Malformed(format!("bad mask entry `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(keep)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.keep.iter().copied()
    }
}

/// The outcome of applying a mask: the kept sub-document and the encoded
/// full and kept sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskedDocument {
    pub kept: DocumentBlocks,
    pub full: RootSet,
    pub subset: RootSet,
}

pub fn apply_mask(
    doc: &DocumentBlocks,
    mask: &RedactionMask,
) -> Result<MaskedDocument, EncodingError> {
    if let Some(&index) = mask.keep.iter().next_back().filter(|&&i| i >= doc.len()) {
        return Err(EncodingError::MaskOutOfRange {
            index,
            len: doc.len(),
        });
    }
    let full = encode_blocks(doc)?;
    let kept = DocumentBlocks {
        mode: doc.mode,
        blocks: mask.indices().map(|i| doc.blocks[i].clone()).collect(),
    };
    let subset = encode_blocks(&kept)?;
    Ok(MaskedDocument { kept, full, subset })
}

/// Input formats for documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentFormat {
    /// One block per `\n`-terminated line. A final newline does not start
    /// an extra block; `\r` and all other bytes are kept verbatim.
    Lines,
    /// A JSON array of strings, one block per element (UTF-8 bytes).
    Json,
}

pub fn parse_blocks(input: &[u8], format: DocumentFormat) -> Result<Vec<Vec<u8>>, EncodingError> {
    match format {
        DocumentFormat::Lines => {
            if input.is_empty() {
                return Ok(Vec::new());
            }
            let body = input.strip_suffix(b"\n").unwrap_or(input);
            Ok(body.split(|b| *b == b'\n').map(<[u8]>::to_vec).collect())
        }
        DocumentFormat::Json => {
            let items: Vec<String> = serde_json::from_slice(input)
                .map_err(|e| EncodingError::Malformed(e.to_string()))?;
            Ok(items.into_iter().map(String::into_bytes).collect())
        }
    }
}
