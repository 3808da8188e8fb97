//! Write keys and signatures to disk and read them back.

use rand::rngs::OsRng;
use redsig::codec::{self, AllowSecretExport};
use redsig::pairing::scalar_from_u64;
use redsig::{redactable, RootSet, SecurityLevel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pp = redactable::setup(SecurityLevel::default());
    let g = pp.group();
    let (pk, sk) = redactable::keygen(&pp, 4, &mut OsRng)?;
    let m = RootSet::new([1, 2, 3].map(scalar_from_u64))?;
    let sig = redactable::sign(&pp, &sk, &m, &mut OsRng)?;

    let dir = std::env::temp_dir().join("redsig-wire-format");
    std::fs::create_dir_all(&dir)?;
    let files = [
        ("key.rspk", codec::encode_public_key(g, &pk)),
        ("key.rssk", codec::export_secret_key(g, &sk, AllowSecretExport)),
        ("doc.rssig", codec::encode_signature(g, &sig)),
    ];
    for (name, bytes) in &files {
        let path = dir.join(name);
        std::fs::write(&path, bytes)?;
        let env = codec::read_envelope(&std::fs::read(&path)?)?;
        println!("{name}: {} bytes, {}", bytes.len(), env.kind.describe());
    }

    let pk2 = codec::decode_public_key(&std::fs::read(dir.join("key.rspk"))?)?;
    let sig2 = codec::decode_signature(&std::fs::read(dir.join("doc.rssig"))?)?;
    println!("reloaded signature verifies: {}", redactable::verify(&pp, &pk2, &m, &sig2));

    let mut corrupt = files[2].1.clone();
    corrupt.truncate(100);
    println!("truncated file: {}", codec::decode_signature(&corrupt).unwrap_err());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
