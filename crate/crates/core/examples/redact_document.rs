//! Sign a record, then release only some of its fields.

use rand::rngs::OsRng;
use redsig::encoding::{self, DocumentBlocks, EncodingMode, RedactionMask};
use redsig::{redactable, SecurityLevel};

fn main() {
    let pp = redactable::setup(SecurityLevel::default());
    let (pk, sk) = redactable::keygen(&pp, 16, &mut OsRng).unwrap();

    let record = ["name: Ada Lovelace", "born: 1815-12-10", "passport: X1234567", "city: London"];
    let doc = DocumentBlocks::from_strs(EncodingMode::List, &record);
    let full = encoding::encode_blocks(&doc).unwrap();
    let sig = redactable::sign(&pp, &sk, &full, &mut OsRng).unwrap();
    println!("original verifies: {}", redactable::verify(&pp, &pk, &full, &sig));

    // the holder drops the passport number; no signing key needed
    let masked = encoding::apply_mask(&doc, &RedactionMask::new([0, 1, 3]).unwrap()).unwrap();
    let red = redactable::redact(&pp, &pk, &masked.full, &sig, &masked.subset).unwrap();
    for block in masked.kept.blocks() {
        println!("  [{}] {}", block.position, String::from_utf8_lossy(&block.data));
    }
    println!("redacted verifies: {}", redactable::verify(&pp, &pk, &masked.subset, &red));

    // a redacted signature cannot be redacted further
    let again = redactable::redact(&pp, &pk, &masked.subset, &red, &masked.subset);
    println!("second redaction:  {:?}", again.err());
}
