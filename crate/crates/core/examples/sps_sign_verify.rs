//! Structure-preserving signatures on a G1 element.

use rand::rngs::OsRng;
use redsig::pairing::{random_scalar, GroupDescription};
use redsig::sps::{self, SpsPublicParams};

fn main() {
    let g = GroupDescription::bls12_381();
    let pp = SpsPublicParams::new(g.clone());
    let (pk, sk) = sps::keygen(&pp, &mut OsRng);

    let m = g.g1(&random_scalar(&mut OsRng));
    let sig = sps::sign(&pp, &sk, &m, &mut OsRng);
    println!("verify(m):     {}", sps::verify(&pp, &pk, &m, &sig));

    let sig2 = sps::sign(&pp, &sk, &m, &mut OsRng);
    println!("randomized:    {}", sig != sig2);

    let other = m + g.generator_g1;
    println!("verify(m + g): {}", sps::verify(&pp, &pk, &other, &sig));
}
