//! Commit to a set, open it, and prove a subset with one group element.

use rand::rngs::OsRng;
use redsig::pairing::scalar_from_u64;
use redsig::poly::RootSet;
use redsig::set_commitment::{self, SecurityLevel};

fn main() {
    let pp = set_commitment::setup(SecurityLevel::default());
    let ck = set_commitment::kgen(&pp, 8, &mut OsRng).unwrap();

    let set = RootSet::new([3, 5, 7, 11].map(scalar_from_u64)).unwrap();
    let (c, opening) = set_commitment::commit(&pp, &ck, &set, &mut OsRng).unwrap();
    println!("open(S):           {}", set_commitment::open(&pp, &ck, &c, &set, &opening));

    let other = RootSet::new([3, 5, 7, 13].map(scalar_from_u64)).unwrap();
    println!("open(other set):   {}", set_commitment::open(&pp, &ck, &c, &other, &opening));

    let subset = RootSet::new([5, 11].map(scalar_from_u64)).unwrap();
    let w = set_commitment::open_subset(&pp, &ck, &c, &set, &opening, &subset).unwrap();
    println!("verify {{5, 11}}:    {}", set_commitment::verify_subset(&pp, &ck, &c, &subset, &w));

    let outsider = RootSet::new([5, 13].map(scalar_from_u64)).unwrap();
    println!("verify {{5, 13}}:    {}", set_commitment::verify_subset(&pp, &ck, &c, &outsider, &w));
}
