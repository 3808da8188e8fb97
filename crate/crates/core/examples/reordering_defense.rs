//! LIST mode binds each block to its position; SET mode does not.

use rand::rngs::OsRng;
use redsig::encoding::{self, DocumentBlocks, EncodingMode};
use redsig::{redactable, SecurityLevel};

fn main() {
    let pp = redactable::setup(SecurityLevel::default());
    let (pk, sk) = redactable::keygen(&pp, 8, &mut OsRng).unwrap();
    let original = ["pay", "Alice", "100", "not", "Bob"];
    let swapped = ["pay", "Bob", "100", "not", "Alice"];

    for mode in [EncodingMode::List, EncodingMode::Set] {
        let set = encoding::encode_blocks(&DocumentBlocks::from_strs(mode, &original)).unwrap();
        let sig = redactable::sign(&pp, &sk, &set, &mut OsRng).unwrap();
        let moved = encoding::encode_blocks(&DocumentBlocks::from_strs(mode, &swapped)).unwrap();
        println!(
            "{mode:?}: original {}, reordered {}",
            redactable::verify(&pp, &pk, &set, &sig),
            redactable::verify(&pp, &pk, &moved, &sig)
        );
    }
}
