//! The `redsig` command-line driver.
//!
//! Exit codes: 0 success (or valid signature), 1 invalid signature or
//! failed size check, 2 usage and input-guard errors, 3 I/O errors,
//! 4 undecodable artifacts, 5 redaction refused.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::OsRng;
use rand::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{self, AllowSecretExport, ArtifactKind, DecodeError};
use crate::encoding::{
    self, Block, DocumentBlocks, DocumentFormat, EncodingError, EncodingMode, RedactionMask,
};
use crate::redactable::{self, Proof, RsError};
use crate::set_commitment::{SecurityLevel, SubsetWitness};

pub const EXIT_VALID: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_DECODE: u8 = 4;
pub const EXIT_REFUSED: u8 = 5;

const BUNDLE_FORMAT: &str = "redsig-redacted/1";

#[derive(Debug, Parser)]
#[command(name = "redsig", version, about = "Sign documents once, redact blocks later without the signing key")]
pub struct Cli {
    /// More diagnostics on stderr (repeatable). Secret material is never printed.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    /// Deterministic RNG seed (test builds only).
    #[cfg(feature = "test-oracle")]
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a key pair for documents of up to ELL blocks.
    Keygen {
        #[arg(long)]
        ell: usize,
        /// Writes PREFIX.rspk and PREFIX.rssk.
        #[arg(long)]
        out: PathBuf,
    },
    /// Sign a document.
    Sign {
        #[command(flatten)]
        doc: DocArgs,
        #[arg(long)]
        sk: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Keep a subset of blocks; writes the kept blocks and the redacted
    /// signature into one bundle file.
    Redact {
        #[command(flatten)]
        doc: DocArgs,
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        pk: PathBuf,
        /// Comma-separated zero-based indices of blocks to keep.
        #[arg(long, conflicts_with = "mask_file", required_unless_present = "mask_file")]
        keep: Option<String>,
        /// File holding the kept indices (commas or whitespace).
        #[arg(long)]
        mask_file: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a document and signature, or a redaction bundle.
    Verify {
        #[arg(long, required_unless_present = "bundle", requires = "sig")]
        doc: Option<PathBuf>,
        #[arg(long)]
        sig: Option<PathBuf>,
        #[arg(long, conflicts_with_all = ["doc", "sig"])]
        bundle: Option<PathBuf>,
        #[arg(long)]
        pk: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Describe a key, signature or bundle file.
    Inspect { path: PathBuf },
    /// Report encoded signature sizes across message sizes.
    BenchSize {
        #[arg(long, default_value_t = 16)]
        ell: usize,
        /// Comma-separated message sizes.
        #[arg(long, default_value = "1,4,8,16", value_delimiter = ',')]
        samples: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct DocArgs {
    #[arg(long)]
    doc: PathBuf,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Defaults to json for *.json files, lines otherwise.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Set,
    List,
}

impl From<ModeArg> for EncodingMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Set => EncodingMode::Set,
            ModeArg::List => EncodingMode::List,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Lines,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Decode { path: PathBuf, source: DecodeError },
    #[error("{0}")]
    Refused(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Decode { .. } => EXIT_DECODE,
            CliError::Refused(_) => EXIT_REFUSED,
        }
    }
}

impl From<EncodingError> for CliError {
    fn from(e: EncodingError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Redacted document plus signature, as written by `redact`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub format: String,
    pub mode: EncodingMode,
    pub blocks: Vec<BundleBlock>,
    /// Hex of the encoded redacted signature.
    pub signature: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleBlock {
    pub position: u64,
    #[serde(flatten)]
    pub data: BlockData,
}

/// UTF-8 blocks are stored as text, anything else as hex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockData {
    Text(String),
    Hex(String),
}

impl Bundle {
    pub fn new(doc: &DocumentBlocks, signature: &[u8]) -> Self {
        Bundle {
            format: BUNDLE_FORMAT.to_owned(),
            mode: doc.mode(),
            blocks: doc
                .blocks()
                .iter()
                .map(|b| BundleBlock {
                    position: b.position,
                    data: match std::str::from_utf8(&b.data) {
                        Ok(s) => BlockData::Text(s.to_owned()),
                        Err(_) => BlockData::Hex(hex::encode(&b.data)),
                    },
                })
                .collect(),
            signature: hex::encode(signature),
        }
    }

    pub fn document(&self) -> Result<DocumentBlocks, String> {
        if self.format != BUNDLE_FORMAT {
            return Err(format!("unsupported bundle format `{}`", self.format));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let data = match &b.data {
                    BlockData::Text(s) => s.as_bytes().to_vec(),
                    BlockData::Hex(h) => hex::decode(h).map_err(|e| e.to_string())?,
                };
                Ok(Block {
                    position: b.position,
                    data,
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        DocumentBlocks::with_positions(self.mode, blocks).map_err(|e| e.to_string())
    }

    pub fn signature_bytes(&self) -> Result<Vec<u8>, String> {
        hex::decode(&self.signature).map_err(|e| e.to_string())
    }
}

/// Parses process arguments, runs the command and maps the outcome to an
/// exit code.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("redsig: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Runs one command, writing human output to `out`. Returns the exit code
/// for non-error outcomes (0 or 1).
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    check_curve_override()?;
    let pp = redactable::setup(SecurityLevel::default());
    let mut rng = make_rng(cli);
    let verbose = cli.verbose;
    let group = pp.group();

    match &cli.command {
        Command::Keygen { ell, out: prefix } => {
            if *ell == 0 {
                return Err(CliError::Usage("--ell must be at least 1".into()));
            }
            let pk_path = with_ext(prefix, "rspk");
            let sk_path = with_ext(prefix, "rssk");
            check_writable(&pk_path)?;
            let (pk, sk) = redactable::keygen(&pp, *ell, &mut *rng).map_err(rs_usage)?;
            let pk_bytes = codec::encode_public_key(group, &pk);
            let sk_bytes = codec::export_secret_key(group, &sk, AllowSecretExport);
            write_atomic(&pk_path, &pk_bytes)?;
            write_atomic(&sk_path, &sk_bytes)?;
            if verbose > 0 {
                eprintln!(
                    "wrote {} ({} bytes) and {}",
                    pk_path.display(),
                    pk_bytes.len(),
                    sk_path.display()
                );
            }
            Ok(EXIT_VALID)
        }
        Command::Sign { doc, sk, out: sig_path } => {
            let document = load_document(doc)?;
            let sk_bytes = read_file(sk)?;
            check_writable(sig_path)?;
            let sk = codec::decode_secret_key(&sk_bytes).map_err(|e| decode_err(sk, e))?;
            let set = encoding::encode_blocks(&document)?;
            let sig = redactable::sign(&pp, &sk, &set, &mut *rng).map_err(rs_usage)?;
            let bytes = codec::encode_signature(group, &sig);
            write_atomic(sig_path, &bytes)?;
            if verbose > 0 {
                eprintln!("signed {} blocks, {} bytes", document.len(), bytes.len());
            }
            Ok(EXIT_VALID)
        }
        Command::Redact {
            doc,
            sig,
            pk,
            keep,
            mask_file,
            out: bundle_path,
        } => {
            let document = load_document(doc)?;
            let sig_bytes = read_file(sig)?;
            let pk_bytes = read_file(pk)?;
            let mask_spec = match (keep, mask_file) {
                (Some(k), _) => k.clone(),
                (None, Some(p)) => String::from_utf8(read_file(p)?)
                    .map_err(|_| CliError::Usage(format!("{}: mask file is not UTF-8", p.display())))?,
                (None, None) => unreachable!("clap requires one of --keep/--mask-file"),
            };
            check_writable(bundle_path)?;
            let mask = RedactionMask::parse(&mask_spec)?;
            let sig_v = codec::decode_signature(&sig_bytes).map_err(|e| decode_err(sig, e))?;
            let pk_v = codec::decode_public_key(&pk_bytes).map_err(|e| decode_err(pk, e))?;
            let masked = encoding::apply_mask(&document, &mask)?;
            let red = redactable::redact(&pp, &pk_v, &masked.full, &sig_v, &masked.subset)
                .map_err(|e| CliError::Refused(format!("redaction refused: {e}")))?;
            let bundle = Bundle::new(&masked.kept, &codec::encode_signature(group, &red));
            let json = serde_json::to_vec_pretty(&bundle).expect("bundle serializes");
            write_atomic(bundle_path, &json)?;
            if verbose > 0 {
                eprintln!("kept {} of {} blocks", masked.kept.len(), document.len());
            }
            Ok(EXIT_VALID)
        }
        Command::Verify {
            doc,
            sig,
            bundle,
            pk,
            mode,
            format,
        } => {
            let pk_bytes = read_file(pk)?;
            let (document, sig_bytes, sig_path) = match (bundle, doc, sig) {
                (Some(b), _, _) => {
                    let raw = read_file(b)?;
                    let bundle: Bundle = serde_json::from_slice(&raw)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", b.display())))?;
                    let document = bundle
                        .document()
                        .map_err(|e| CliError::Usage(format!("{}: {e}", b.display())))?;
                    let sig = bundle
                        .signature_bytes()
                        .map_err(|e| CliError::Usage(format!("{}: {e}", b.display())))?;
                    (document, sig, b.clone())
                }
                (None, Some(d), Some(s)) => {
                    let document = load_document(&DocArgs {
                        doc: d.clone(),
                        mode: *mode,
                        format: *format,
                    })?;
                    (document, read_file(s)?, s.clone())
                }
                _ => return Err(CliError::Usage("need --bundle or --doc with --sig".into())),
            };
            let pk_v = codec::decode_public_key(&pk_bytes).map_err(|e| decode_err(pk, e))?;
            let sig_v =
                codec::decode_signature(&sig_bytes).map_err(|e| decode_err(&sig_path, e))?;
            let valid = match encoding::encode_blocks(&document) {
                Ok(set) => redactable::verify(&pp, &pk_v, &set, &sig_v),
                // duplicate blocks can never have been signed in set mode
                Err(EncodingError::DuplicateBlock { .. }) => false,
                Err(e) => return Err(e.into()),
            };
            writeln!(out, "{}", if valid { "valid" } else { "INVALID" }).map_err(stdout_err)?;
            Ok(if valid { EXIT_VALID } else { EXIT_INVALID })
        }
        Command::Inspect { path } => {
            let raw = read_file(path)?;
            inspect(path, &raw, out)?;
            Ok(EXIT_VALID)
        }
        Command::BenchSize { ell, samples, json } => {
            if *ell == 0 {
                return Err(CliError::Usage("--ell must be at least 1".into()));
            }
            if let Some(bad) = samples.iter().find(|&&n| n == 0 || n > *ell) {
                return Err(CliError::Usage(format!(
                    "sample size {bad} outside 1..={ell}"
                )));
            }
            let report = codec::measure_sizes(&pp, *ell, samples, &mut *rng).map_err(rs_usage)?;
            let want_orig = codec::original_signature_len(&group.point_sizes);
            let want_red = codec::redacted_signature_len(&group.point_sizes);
            let pass = report.is_constant()
                && report
                    .rows
                    .iter()
                    .all(|r| r.original_bytes == want_orig && r.redacted_bytes == want_red);
            if *json {
                let rows: Vec<_> = report
                    .rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "set_size": r.set_size,
                            "subset_size": r.subset_size,
                            "original_bytes": r.original_bytes,
                            "redacted_bytes": r.redacted_bytes,
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "curve": group.curve_id,
                    "ell": report.max_set_size,
                    "public_key_bytes": report.public_key_bytes,
                    "expected_original_bytes": want_orig,
                    "expected_redacted_bytes": want_red,
                    "rows": rows,
                    "verdict": if pass { "PASS" } else { "FAIL" },
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())
                    .map_err(stdout_err)?;
            } else {
                writeln!(
                    out,
                    "curve {}  ell {}  public key {} bytes",
                    group.curve_id, report.max_set_size, report.public_key_bytes
                )
                .map_err(stdout_err)?;
                writeln!(out, "{:>6} {:>6} {:>10} {:>10}", "#M", "#M'", "original", "redacted")
                    .map_err(stdout_err)?;
                for r in &report.rows {
                    writeln!(
                        out,
                        "{:>6} {:>6} {:>10} {:>10}",
                        r.set_size, r.subset_size, r.original_bytes, r.redacted_bytes
                    )
                    .map_err(stdout_err)?;
                }
                writeln!(out, "constant size: {}", if pass { "PASS" } else { "FAIL" })
                    .map_err(stdout_err)?;
            }
            Ok(if pass { EXIT_VALID } else { EXIT_INVALID })
        }
    }
}

fn inspect(path: &Path, raw: &[u8], out: &mut dyn Write) -> Result<(), CliError> {
    if raw.first() == Some(&b'{') {
        let bundle: Bundle = serde_json::from_slice(raw)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let positions: Vec<String> = bundle.blocks.iter().map(|b| b.position.to_string()).collect();
        writeln!(out, "kind: redaction bundle ({})", bundle.format).map_err(stdout_err)?;
        writeln!(out, "mode: {:?}", bundle.mode).map_err(stdout_err)?;
        writeln!(out, "kept positions: {}", positions.join(",")).map_err(stdout_err)?;
        let sig = bundle
            .signature_bytes()
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        return inspect(path, &sig, out);
    }
    let env = codec::read_envelope(raw).map_err(|e| decode_err(path, e))?;
    let group = env.curve.group();
    writeln!(out, "kind: {}", env.kind.describe()).map_err(stdout_err)?;
    writeln!(out, "curve: {}", group.curve_id).map_err(stdout_err)?;
    writeln!(out, "version: {}", env.version).map_err(stdout_err)?;
    writeln!(out, "bytes: {}", raw.len()).map_err(stdout_err)?;
    match env.kind {
        ArtifactKind::OriginalSignature | ArtifactKind::RedactedSignature => {
            let sig = codec::decode_signature(raw).map_err(|e| decode_err(path, e))?;
            let proof = match sig.proof {
                Proof::Opening(_) => "opening",
                Proof::Witness(SubsetWitness::Present(_)) => "subset witness",
                Proof::Witness(SubsetWitness::Bottom) => "empty subset witness",
            };
            writeln!(out, "proof: {proof}").map_err(stdout_err)?;
        }
        ArtifactKind::PublicKey => {
            let pk = codec::decode_public_key(raw).map_err(|e| decode_err(path, e))?;
            writeln!(out, "ell: {}", pk.max_message_size()).map_err(stdout_err)?;
        }
        ArtifactKind::SecretKey => {
            let sk = codec::decode_secret_key(raw).map_err(|e| decode_err(path, e))?;
            writeln!(out, "ell: {}", sk.max_message_size()).map_err(stdout_err)?;
        }
        ArtifactKind::CommitmentKey => {
            let ck = codec::decode_commitment_key(raw).map_err(|e| decode_err(path, e))?;
            writeln!(out, "ell: {}", ck.max_set_size()).map_err(stdout_err)?;
        }
    }
    Ok(())
}

fn load_document(args: &DocArgs) -> Result<DocumentBlocks, CliError> {
    let raw = read_file(&args.doc)?;
    let format = match args.format {
        Some(FormatArg::Json) => DocumentFormat::Json,
        Some(FormatArg::Lines) => DocumentFormat::Lines,
        None if args.doc.extension().is_some_and(|e| e == "json") => DocumentFormat::Json,
        None => DocumentFormat::Lines,
    };
    let blocks = encoding::parse_blocks(&raw, format)
        .map_err(|e| CliError::Usage(format!("{}: {e}", args.doc.display())))?;
    let mode = args.mode.map(EncodingMode::from).unwrap_or_default();
    Ok(DocumentBlocks::new(mode, blocks))
}

fn make_rng(cli: &Cli) -> Box<dyn RngCore> {
    #[cfg(feature = "test-oracle")]
    if let Some(seed) = cli.seed {
        use rand::SeedableRng;
        return Box::new(rand_chacha::ChaCha20Rng::seed_from_u64(seed));
    }
    let _ = cli;
    Box::new(OsRng)
}

/// `REDSIG_CURVE` may name the curve in test builds; only BLS12-381 exists.
fn check_curve_override() -> Result<(), CliError> {
    if cfg!(feature = "test-oracle") {
        if let Ok(v) = std::env::var("REDSIG_CURVE") {
            if !v.eq_ignore_ascii_case("bls12-381") {
                return Err(CliError::Usage(format!("unsupported curve `{v}`")));
            }
        }
    }
    Ok(())
}

fn rs_usage(e: RsError) -> CliError {
    CliError::Usage(e.to_string())
}

fn decode_err(path: &Path, source: DecodeError) -> CliError {
    CliError::Decode {
        path: path.to_owned(),
        source,
    }
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn parent_dir(path: &Path) -> &Path {
    match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    }
}

fn check_writable(path: &Path) -> Result<(), CliError> {
    let dir = parent_dir(path);
    match fs::metadata(dir) {
        Ok(m) if m.is_dir() && !m.permissions().readonly() => Ok(()),
        Ok(_) => Err(CliError::Io {
            path: dir.to_owned(),
            source: io::Error::new(io::ErrorKind::PermissionDenied, "not a writable directory"),
        }),
        Err(source) => Err(CliError::Io {
            path: dir.to_owned(),
            source,
        }),
    }
}

/// Writes via a sibling temporary file and a rename.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let tmp = with_ext(path, "tmp");
    fs::write(&tmp, bytes).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io_err(e)
    })
}
