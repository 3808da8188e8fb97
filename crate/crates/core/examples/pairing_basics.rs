//! Bilinearity of the BLS12-381 pairing and the point encodings.

use rand::rngs::OsRng;
use redsig::pairing::{self, GroupDescription};

fn main() {
    let g = GroupDescription::bls12_381();
    let x = pairing::random_scalar(&mut OsRng);
    let y = pairing::random_scalar(&mut OsRng);

    let lhs = pairing::pairing(&g.g1(&x), &g.g2(&y));
    let rhs = pairing::gt_pow(&g.gt_generator(), &(x * y));
    println!("e([x]1, [y]2) == e(g1, g2)^(xy): {}", lhs == rhs);

    let p = g.g1(&x);
    let bytes = pairing::g1_to_bytes(&p);
    println!("G1 point: {} bytes, {}", bytes.len(), hex::encode(&bytes[..8]));
    println!("decodes back: {}", pairing::g1_from_bytes(&bytes).unwrap() == p);
    println!("G2 point: {} bytes", pairing::g2_to_bytes(&g.g2(&y)).len());
}
