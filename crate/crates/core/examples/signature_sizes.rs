//! Signature sizes stay fixed while the key grows with the block bound.

use rand::rngs::OsRng;
use redsig::codec;
use redsig::{redactable, SecurityLevel};

fn main() {
    let pp = redactable::setup(SecurityLevel::default());
    let sizes = pp.group().point_sizes;
    for ell in [16, 64] {
        let report = codec::measure_sizes(&pp, ell, &[1, 4, 8, 16], &mut OsRng).unwrap();
        println!("ell = {ell}: public key {} bytes", report.public_key_bytes);
        for row in &report.rows {
            println!(
                "  #M = {:>2}, #M' = {:>2}: original {} B, redacted {} B",
                row.set_size, row.subset_size, row.original_bytes, row.redacted_bytes
            );
        }
        println!("  constant: {}", report.is_constant());
    }
    println!(
        "layout: original {} B, redacted {} B",
        codec::original_signature_len(&sizes),
        codec::redacted_signature_len(&sizes)
    );
}
