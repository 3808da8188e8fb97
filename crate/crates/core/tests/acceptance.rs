//! Acceptance suite. Runs every exit criterion and prints one PASS/FAIL line
//! per criterion; exits non-zero if any fails.
//!
//! `cargo test -p redsig --test acceptance`
//!
//! Fixtures for criterion 9 live in `tests/fixtures/`; regenerate them with
//! `REDSIG_UPDATE_GOLDEN=1` (this changes pinned bytes, so only do it on a
//! deliberate format change).

use std::path::PathBuf;
use std::time::Instant;

use ff::Field;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use redsig::codec::{self, AllowSecretExport, DecodeError};
use redsig::encoding::{self, DocumentBlocks, EncodingMode};
use redsig::pairing::{
    g1_to_bytes, gt_pow, multi_pairing, pairing, random_scalar, scalar_to_bytes_be, G1Point,
    GroupDescription, GroupError, Scalar,
};
use redsig::poly::{Poly, RootSet};
use redsig::redactable::{self, Proof, RsPublicParams, RsSignature};
use redsig::set_commitment::{self, Opening, SecurityLevel, SubsetWitness};
use redsig::sps::{self, KeygenScalars, SpsPublicParams, SpsSignature};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Mutation = fn(&mut SpsSignature, &GroupDescription);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_set<R: Rng>(rng: &mut R, n: usize) -> RootSet {
    RootSet::new((0..n).map(|_| random_scalar(rng))).expect("random scalars are distinct")
}

/// Uniformly random non-empty subset.
fn random_subset<R: Rng>(rng: &mut R, set: &RootSet) -> RootSet {
    loop {
        let picked: Vec<Scalar> = set.iter().filter(|_| rng.gen_bool(0.5)).copied().collect();
        if !picked.is_empty() {
            return RootSet::new(picked).unwrap();
        }
    }
}

fn pp() -> RsPublicParams {
    redactable::setup(SecurityLevel::default())
}

// 1 -------------------------------------------------------------------------

fn end_to_end_correctness() -> Outcome {
    let pp = pp();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA1);
    let trials = 200;
    let start = Instant::now();
    let mut ok = 0;
    for t in 0..trials {
        let (pk, sk) = redactable::keygen(&pp, 16, &mut rng).unwrap();
        let n = rng.gen_range(1..=16);
        let m = random_set(&mut rng, n);
        let sub = random_subset(&mut rng, &m);
        let sig = redactable::sign(&pp, &sk, &m, &mut rng).map_err(|e| e.to_string())?;
        let red = redactable::redact(&pp, &pk, &m, &sig, &sub).map_err(|e| e.to_string())?;
        ensure(redactable::verify(&pp, &pk, &m, &sig), || {
            format!("trial {t}: original rejected")
        })?;
        ensure(redactable::verify(&pp, &pk, &sub, &red), || {
            format!("trial {t}: redacted rejected")
        })?;
        ok += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s (limit 60s)"))?;
    Ok(format!("{ok}/{trials} trials, both forms verify ({secs:.1}s)"))
}

// 2 -------------------------------------------------------------------------

fn compactness() -> Outcome {
    let pp = pp();
    let g = pp.group();
    let s = g.point_sizes;
    // field-by-field layout: envelope, C, theta1..theta3, theta4, then the
    // proof (flag + rho, or presence + W)
    let envelope = 2 + 1 + 1 + 1;
    let sigma = 6 * s.g1 + s.g2;
    let want_orig = envelope + s.g1 + sigma + 1 + s.scalar;
    let want_red = envelope + s.g1 + sigma + 1 + s.g1;
    ensure(want_orig == 470 && want_red == 486, || {
        format!("layout gives {want_orig}/{want_red}, expected 470/486")
    })?;

    let mut rng = ChaCha20Rng::seed_from_u64(0xA2);
    let mut checked = 0;
    for ell in [16usize, 64] {
        let (pk, sk) = redactable::keygen(&pp, ell, &mut rng).unwrap();
        for n in [1usize, 4, 8, 16] {
            let m = random_set(&mut rng, n);
            let sig = redactable::sign(&pp, &sk, &m, &mut rng).unwrap();
            let len = codec::encode_signature(g, &sig).len();
            ensure(len == want_orig, || {
                format!("ell={ell} #M={n}: original {len} bytes")
            })?;
            for k in 1..=n {
                let sub = RootSet::new(m.iter().take(k).copied()).unwrap();
                let red = redactable::redact(&pp, &pk, &m, &sig, &sub).unwrap();
                let len = codec::encode_signature(g, &red).len();
                ensure(len == want_red, || {
                    format!("ell={ell} #M={n} #M'={k}: redacted {len} bytes")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "original {want_orig} B, redacted {want_red} B across {checked} redactions"
    ))
}

// 3 -------------------------------------------------------------------------

fn trapdoor_oracle() -> Outcome {
    let pp = pp();
    let g = pp.group();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA3);
    let mut count = 0;
    for i in 0..100 {
        let ell = 16;
        let ck = set_commitment::kgen(&pp.sc, ell, &mut rng).unwrap();
        let a = ck.trapdoor().ok_or("trapdoor not retained")?;
        let n = rng.gen_range(1..=ell);
        let s = random_set(&mut rng, n);
        let (c, o) = set_commitment::commit(&pp.sc, &ck, &s, &mut rng).unwrap();
        ensure(!o.trapdoor_branch, || format!("instance {i}: trapdoor branch"))?;
        // f_S(a) as a direct product of (a - s)
        let f_a = s.iter().fold(Scalar::ONE, |acc, x| acc * (a - x));
        ensure(*c.point() == g.g1(&(o.rho * f_a)), || {
            format!("instance {i}: C differs from (rho f_S(a)) G1")
        })?;
        count += 1;
    }
    Ok(format!("{count}/100 commitments match the trapdoor oracle"))
}

// 4 -------------------------------------------------------------------------

fn sps_oracle() -> Outcome {
    let g = GroupDescription::bls12_381();
    let pp = SpsPublicParams::new(g.clone());
    let gt = g.gt_generator();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA4);

    for i in 0..50 {
        let s = KeygenScalars::random(&mut rng);
        let (pk, sk) = sps::keygen_from_scalars(&pp, &s);
        let m = random_scalar(&mut rng);
        let r = random_scalar(&mut rng);
        let tau = random_scalar(&mut rng);
        let sig = sps::sign_with(&pp, &sk, &g.g1(&m), r, tau);

        let a = [Scalar::ONE, s.a];
        let b = [Scalar::ONE, s.b];
        let row = [Scalar::ONE, m];
        let col = |mat: &[[Scalar; 2]; 2]| -> [Scalar; 2] {
            [0, 1].map(|i| mat[i][0] * a[0] + mat[i][1] * a[1])
        };
        let row_mat = |v: &[Scalar; 2], mat: &[[Scalar; 2]; 2]| -> [Scalar; 2] {
            [0, 1].map(|j| v[0] * mat[0][j] + v[1] * mat[1][j])
        };
        let dot = |x: &[Scalar; 2], y: &[Scalar; 2]| x[0] * y[0] + x[1] * y[1];
        let (d, d0, d1) = (col(&s.k), col(&s.k0), col(&s.k1));
        let (p0, p1) = (row_mat(&b, &s.k0), row_mat(&b, &s.k1));

        // θ exponents
        let mk = row_mat(&row, &s.k);
        let th1 = [0, 1].map(|j| mk[j] + r * (p0[j] + tau * p1[j]));
        let th2 = [r * b[0], r * b[1]];
        let th3 = [th2[0] * tau, th2[1] * tau];
        ensure(
            sig.theta1 == th1.map(|x| g.g1(&x))
                && sig.theta2 == th2.map(|x| g.g1(&x))
                && sig.theta3 == th3.map(|x| g.g1(&x))
                && sig.theta4 == g.g2(&tau),
            || format!("instance {i}: signature points differ from exponents"),
        )?;

        // equation 1 as a scalar identity
        let lhs = dot(&th1, &a);
        let rhs = dot(&row, &d) + dot(&th2, &d0) + dot(&th3, &d1);
        let expanded = dot(&row, &d) + r * dot(&b, &d0) + tau * r * dot(&b, &d1);
        ensure(lhs == rhs && rhs == expanded, || {
            format!("instance {i}: exponent identity fails")
        })?;
        // and in GT against the actual pairing products
        let gt_lhs = multi_pairing(&[(sig.theta1[0], pk.a[0]), (sig.theta1[1], pk.a[1])]);
        let gt_rhs = multi_pairing(&[
            (g.generator_g1, pk.d[0]),
            (g.g1(&m), pk.d[1]),
            (sig.theta2[0], pk.d0[0]),
            (sig.theta2[1], pk.d0[1]),
            (sig.theta3[0], pk.d1[0]),
            (sig.theta3[1], pk.d1[1]),
        ]);
        ensure(gt_lhs == gt_pow(&gt, &lhs) && gt_rhs == gt_pow(&gt, &rhs), || {
            format!("instance {i}: GT products differ from exponent oracle")
        })?;
        // equation 2, componentwise
        for (k, t2) in th2.iter().enumerate() {
            let e1 = pairing(&sig.theta2[k], &sig.theta4);
            let e2 = pairing(&sig.theta3[k], &g.generator_g2);
            ensure(e1 == gt_pow(&gt, &(t2 * tau)) && e1 == e2, || {
                format!("instance {i}: equation 2 component {k}")
            })?;
        }
        ensure(sps::verify(&pp, &pk, &g.g1(&m), &sig), || {
            format!("instance {i}: honest signature rejected")
        })?;
    }

    // mutation suite: 7 components x 20 instances
    let mut rejected = 0;
    for _ in 0..20 {
        let (pk, sk) = sps::keygen(&pp, &mut rng);
        let m = g.g1(&random_scalar(&mut rng));
        let sig = sps::sign(&pp, &sk, &m, &mut rng);
        let muts: [Mutation; 7] = [
            |s, g| s.theta1[0] += g.generator_g1,
            |s, g| s.theta1[1] += g.generator_g1,
            |s, g| s.theta2[0] += g.generator_g1,
            |s, g| s.theta2[1] += g.generator_g1,
            |s, g| s.theta3[0] += g.generator_g1,
            |s, g| s.theta3[1] += g.generator_g1,
            |s, g| s.theta4 += g.generator_g2,
        ];
        for (k, f) in muts.iter().enumerate() {
            let mut bad = sig;
            f(&mut bad, &g);
            ensure(!sps::verify(&pp, &pk, &m, &bad), || {
                format!("mutation of component {k} still verifies")
            })?;
            rejected += 1;
        }
    }
    ensure(rejected == 140, || format!("{rejected}/140 mutations rejected"))?;
    Ok("50/50 exponent identities hold; 140/140 mutations rejected".into())
}

// 5 -------------------------------------------------------------------------

fn forger_taxonomy() -> Outcome {
    let pp = pp();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA5);
    let (pk, sk) = redactable::keygen(&pp, 16, &mut rng).unwrap();
    let ck = &sk.ck;
    let a = ck.trapdoor().ok_or("trapdoor not retained")?;
    let (mut a1, mut a2, mut a3) = (0, 0, 0);

    for i in 0..20 {
        let n = rng.gen_range(2..=12);
        let m = random_set(&mut rng, n);
        let sig = redactable::sign(&pp, &sk, &m, &mut rng).unwrap();
        let Proof::Opening(opening) = sig.proof else {
            return Err("sign produced a witness".into());
        };

        // A1: fresh commitment under the old signature
        let m_star = random_set(&mut rng, n);
        let (c_star, o_star) = set_commitment::commit(&pp.sc, ck, &m_star, &mut rng).unwrap();
        let forged = RsSignature {
            commitment: c_star,
            sigma_c: sig.sigma_c,
            proof: Proof::Opening(o_star),
        };
        ensure(!redactable::verify(&pp, &pk, &m_star, &forged), || {
            format!("instance {i}: A1 commitment swap accepted")
        })?;
        a1 += 1;

        // A2: keep (C, sigma_C), open to a different set
        let other = m.union(&random_set(&mut rng, 1));
        let forged_a = RsSignature {
            proof: Proof::Opening(o_star),
            ..sig.clone()
        };
        let forged_b = RsSignature {
            proof: Proof::Opening(Opening {
                trapdoor_branch: false,
                rho: opening.rho,
            }),
            ..sig.clone()
        };
        ensure(
            !redactable::verify(&pp, &pk, &m_star, &forged_a)
                && !redactable::verify(&pp, &pk, &other, &forged_b),
            || format!("instance {i}: A2 opening swap accepted"),
        )?;
        a2 += 1;

        // A3: keep (C, sigma_C), witness for a non-subset
        let sub = random_subset(&mut rng, &m);
        let target = sub.union(&random_set(&mut rng, 1));
        let rest = m.difference(&m.intersection(&target));
        let w = Poly::vanishing(&rest).eval_in_g1(ck).unwrap() * opening.rho;
        let f_rest = rest.iter().fold(Scalar::ONE, |acc, x| acc * (a - x));
        ensure(w == pp.group().g1(&(opening.rho * f_rest)), || {
            format!("instance {i}: wrong-witness construction")
        })?;
        let forged = RsSignature {
            proof: Proof::Witness(SubsetWitness::Present(w)),
            ..sig.clone()
        };
        ensure(!redactable::verify(&pp, &pk, &target, &forged), || {
            format!("instance {i}: A3 non-subset witness accepted")
        })?;
        a3 += 1;
    }
    Ok(format!("A1 {a1}/20, A2 {a2}/20, A3 {a3}/20 rejected"))
}

// 6 -------------------------------------------------------------------------

fn subset_soundness() -> Outcome {
    let pp = pp();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA6);
    let ck = set_commitment::kgen(&pp.sc, 16, &mut rng).unwrap();
    let mut rejected = 0;
    for i in 0..50 {
        let n = rng.gen_range(1..=12);
        let s = random_set(&mut rng, n);
        let (c, o) = set_commitment::commit(&pp.sc, &ck, &s, &mut rng).unwrap();
        // S' = (part of S) + 1..=3 outsiders
        let inside: Vec<Scalar> = s.iter().filter(|_| rng.gen_bool(0.5)).copied().collect();
        let outside = rng.gen_range(1..=3);
        let s_prime = RootSet::new(
            inside
                .into_iter()
                .chain((0..outside).map(|_| random_scalar(&mut rng))),
        )
        .unwrap();
        ensure(!s_prime.is_subset(&s), || format!("pair {i} is a subset"))?;
        let rest = s.difference(&s.intersection(&s_prime));
        let w = Poly::vanishing(&rest).eval_in_g1(&ck).unwrap() * o.rho;
        ensure(
            !set_commitment::verify_subset(&pp.sc, &ck, &c, &s_prime, &SubsetWitness::Present(w)),
            || format!("pair {i}: wrong witness accepted"),
        )?;
        rejected += 1;
    }
    Ok(format!("{rejected}/50 non-subset witnesses rejected"))
}

// 7 -------------------------------------------------------------------------

fn reordering_defense() -> Outcome {
    let pp = pp();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA7);
    let (pk, sk) = redactable::keygen(&pp, 16, &mut rng).unwrap();
    let mut rejected = 0;
    for d in 0..20 {
        let n = rng.gen_range(2..=10);
        let blocks: Vec<String> = (0..n).map(|i| format!("block {d}.{i} {}", rng.gen::<u32>())).collect();
        let doc = DocumentBlocks::from_strs(EncodingMode::List, &blocks);
        let set = encoding::encode_blocks(&doc).unwrap();
        let sig = redactable::sign(&pp, &sk, &set, &mut rng).unwrap();
        ensure(redactable::verify(&pp, &pk, &set, &sig), || {
            format!("doc {d}: honest signature rejected")
        })?;
        let red = redactable::redact(&pp, &pk, &set, &sig, &set).unwrap();
        let mut done = 0;
        while done < 10 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            if perm.iter().enumerate().all(|(i, p)| i == *p) {
                continue;
            }
            let shuffled: Vec<&str> = perm.iter().map(|&p| blocks[p].as_str()).collect();
            let pdoc = DocumentBlocks::from_strs(EncodingMode::List, &shuffled);
            let pset = encoding::encode_blocks(&pdoc).unwrap();
            ensure(
                !redactable::verify(&pp, &pk, &pset, &sig)
                    && !redactable::verify(&pp, &pk, &pset, &red),
                || format!("doc {d}: permutation {perm:?} accepted"),
            )?;
            done += 1;
            rejected += 1;
        }
    }
    Ok(format!("{rejected}/200 permutations rejected"))
}

// 8 -------------------------------------------------------------------------

fn privacy_surface() -> Outcome {
    let pp = pp();
    let g = pp.group();
    let mut rng = ChaCha20Rng::seed_from_u64(0xA8);
    let (pk, sk) = redactable::keygen(&pp, 16, &mut rng).unwrap();
    for t in 0..100 {
        let n = rng.gen_range(2..=16);
        let m = random_set(&mut rng, n);
        let keep = rng.gen_range(1..n);
        let sub = RootSet::new(m.iter().take(keep).copied()).unwrap();
        let sig = redactable::sign(&pp, &sk, &m, &mut rng).unwrap();
        let red = redactable::redact(&pp, &pk, &m, &sig, &sub).unwrap();
        let bytes = codec::encode_signature(g, &red);
        for removed in m.difference(&sub).iter() {
            let be = scalar_to_bytes_be(removed);
            let le = removed.to_bytes();
            let hit = bytes.windows(32).any(|w| w == be || w == le);
            ensure(!hit, || format!("trial {t}: removed element found in bytes"))?;
        }
    }
    let ck = &sk.ck;
    let s = random_set(&mut rng, 5);
    let mut seen: Vec<G1Point> = Vec::new();
    for t in 0..100 {
        let (c, _) = set_commitment::commit(&pp.sc, ck, &s, &mut rng).unwrap();
        ensure(!bool::from(c.point().is_identity()), || format!("commit {t} is identity"))?;
        ensure(!seen.contains(c.point()), || format!("commit {t} repeats"))?;
        seen.push(*c.point());
    }
    Ok("100/100 redactions leak no removed element; 100/100 commitments distinct".into())
}

// 9 -------------------------------------------------------------------------

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Deterministic artifacts of every kind, from a fixed seed.
fn golden_artifacts() -> Vec<(&'static str, Vec<u8>)> {
    let pp = pp();
    let g = pp.group();
    let mut rng = ChaCha20Rng::seed_from_u64(20240901);
    let (pk, sk) = redactable::keygen(&pp, 4, &mut rng).unwrap();
    let doc = DocumentBlocks::from_strs(EncodingMode::List, &["We", "mustn't", "go.", "wait."]);
    let full = encoding::encode_blocks(&doc).unwrap();
    let sig = redactable::sign(&pp, &sk, &full, &mut rng).unwrap();
    let kept = encoding::apply_mask(&doc, &redsig::RedactionMask::new([0, 2]).unwrap()).unwrap();
    let red = redactable::redact(&pp, &pk, &kept.full, &sig, &kept.subset).unwrap();
    vec![
        ("commitment_key.rsck", codec::encode_commitment_key(g, &pk.ck)),
        ("public_key.rspk", codec::encode_public_key(g, &pk)),
        ("secret_key.rssk", codec::export_secret_key(g, &sk, AllowSecretExport)),
        ("original.rssig", codec::encode_signature(g, &sig)),
        ("redacted.rssig", codec::encode_signature(g, &red)),
    ]
}

fn reencode(name: &str, bytes: &[u8]) -> Result<Vec<u8>, DecodeError> {
    let g = GroupDescription::bls12_381();
    Ok(match name {
        "commitment_key.rsck" => codec::encode_commitment_key(&g, &codec::decode_commitment_key(bytes)?),
        "public_key.rspk" => codec::encode_public_key(&g, &codec::decode_public_key(bytes)?),
        "secret_key.rssk" => {
            codec::export_secret_key(&g, &codec::decode_secret_key(bytes)?, AllowSecretExport)
        }
        _ => codec::encode_signature(&g, &codec::decode_signature(bytes)?),
    })
}

fn decode_any(name: &str, bytes: &[u8]) -> Result<(), DecodeError> {
    reencode(name, bytes).map(|_| ())
}

fn codec_golden() -> Outcome {
    let dir = fixture_dir();
    let artifacts = golden_artifacts();
    if std::env::var_os("REDSIG_UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
        for (name, bytes) in &artifacts {
            std::fs::write(dir.join(format!("{name}.hex")), hex::encode(bytes) + "\n")
                .map_err(|e| e.to_string())?;
        }
    }
    for (name, bytes) in &artifacts {
        let path = dir.join(format!("{name}.hex"));
        let text = std::fs::read_to_string(&path)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let pinned = hex::decode(text.trim()).map_err(|e| e.to_string())?;
        ensure(&pinned == bytes, || format!("{name}: bytes differ from fixture"))?;
        let again = reencode(name, &pinned).map_err(|e| format!("{name}: {e}"))?;
        ensure(again == pinned, || format!("{name}: decode/encode not bit-exact"))?;
    }

    // malformed-input classes, applied to every kind
    let mut classes = 0;
    for (name, good) in &artifacts {
        let mut cases: Vec<(&str, Vec<u8>)> = vec![
            ("truncated", good[..good.len() - 1].to_vec()),
            ("extended", [good.as_slice(), &[0]].concat()),
            ("empty", Vec::new()),
        ];
        for (idx, label, val) in [(0, "bad magic", b'X'), (2, "bad version", 9), (3, "bad curve", 0x77), (4, "bad kind", 0x7f)] {
            let mut b = good.clone();
            b[idx] = val;
            cases.push((label, b));
        }
        for (label, bad) in cases {
            ensure(decode_any(name, &bad).is_err(), || {
                format!("{name}: {label} input accepted")
            })?;
            classes += 1;
        }
    }

    // point-level classes on a signature
    let sig_bytes = &artifacts[3].1;
    let g1_at = 5; // commitment C
    let mut bad = sig_bytes.clone();
    bad[g1_at..g1_at + 48].copy_from_slice(&g1_to_bytes(&G1Point::identity()));
    ensure(
        codec::decode_signature(&bad) == Err(DecodeError::IdentityNotAllowed),
        || "identity C accepted".into(),
    )?;
    let (off_curve, off_subgroup) = bad_g1_encodings();
    for (label, enc) in [("off-curve", off_curve), ("non-subgroup", off_subgroup)] {
        let mut bad = sig_bytes.clone();
        bad[g1_at..g1_at + 48].copy_from_slice(&enc);
        ensure(
            matches!(codec::decode_signature(&bad), Err(DecodeError::Group(GroupError::InvalidPoint(_)))),
            || format!("{label} point accepted"),
        )?;
    }
    let mut bad = sig_bytes.clone();
    let n = bad.len();
    bad[n - 32..].copy_from_slice(&redsig::pairing::SCALAR_MODULUS_BE);
    ensure(
        codec::decode_signature(&bad) == Err(DecodeError::Group(GroupError::NonCanonicalScalar)),
        || "non-canonical rho accepted".into(),
    )?;
    let mut bad = sig_bytes.clone();
    bad[5 + 7 * 48 + 96] = 2;
    ensure(codec::decode_signature(&bad) == Err(DecodeError::InvalidFlag(2)), || {
        "bad branch flag accepted".into()
    })?;
    let red_bytes = &artifacts[4].1;
    let mut bad = red_bytes.clone();
    let n = bad.len();
    bad[n - 48..].copy_from_slice(&g1_to_bytes(&G1Point::identity()));
    ensure(codec::decode_signature(&bad) == Err(DecodeError::IdentityNotAllowed), || {
        "identity witness accepted".into()
    })?;
    classes += 6;

    Ok(format!(
        "{} fixtures bit-exact; {classes} malformed inputs rejected",
        artifacts.len()
    ))
}

/// A compressed G1 encoding that is not on the curve, and one that is on
/// the curve but outside the prime-order subgroup.
fn bad_g1_encodings() -> ([u8; 48], [u8; 48]) {
    use bls12_381::G1Affine;
    let mut off_curve = None;
    let mut off_subgroup = None;
    for x in 1u8..=255 {
        let mut enc = [0u8; 48];
        enc[0] = 0x80; // compressed, not infinity, sign bit clear
        enc[47] = x;
        let unchecked = bool::from(G1Affine::from_compressed_unchecked(&enc).is_some());
        let checked = bool::from(G1Affine::from_compressed(&enc).is_some());
        if !unchecked && off_curve.is_none() {
            off_curve = Some(enc);
        }
        if unchecked && !checked && off_subgroup.is_none() {
            off_subgroup = Some(enc);
        }
        if off_curve.is_some() && off_subgroup.is_some() {
            break;
        }
    }
    (off_curve.unwrap(), off_subgroup.unwrap())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 end-to-end correctness", end_to_end_correctness),
        ("2 compactness", compactness),
        ("3 trapdoor-oracle equivalence", trapdoor_oracle),
        ("4 SPS exponent oracle + mutations", sps_oracle),
        ("5 forger taxonomy", forger_taxonomy),
        ("6 subset soundness", subset_soundness),
        ("7 re-ordering defense", reordering_defense),
        ("8 privacy surface", privacy_surface),
        ("9 codec golden files", codec_golden),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{secs:.2}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
