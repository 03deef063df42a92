//! Command-line front end: construction, verification, decoding, channel
//! simulation, bound tables and parameter optimization as reproducible
//! batch runs.
//!
//! Exit codes: 0 success, 1 verification verdict false, 2 usage or IO error.
//! All randomness flows from --seed; identical argv + seed give byte-equal
//! output files. The resolved configuration is echoed to stderr and, for
//! table output, into `#` header lines.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use supercode::bounds;
use supercode::channels::{ChannelModel, EnsembleKind, EnsembleSpec, SymmetricMac};
use supercode::codebook::{
    parse_code, pools_json, write_binary, write_qary, AnyCode, BinaryCode, BitColumn, QaryCode,
};
use supercode::constructions::{
    binary_expand, circulant_design, complement_double, concatenate, pair_code, powers_of_two_row,
    recurrent_homogeneous, shorten_rs, subset_incidence, three_row_disjunct, three_row_hash,
    CharMatrix,
};
use supercode::decoding::{cover_decode, design_decode, error_rate, ml_decode, u_decode, Decoder};
use supercode::galois::Field;
use supercode::paramsearch::{concat_search, optimal_rs, CwTable, OuterCode};
use supercode::verify::{verify_property, PropertyKind, PropertySpec, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(name = "supercode", version, about = "Superimposed code toolkit")]
struct Cli {
    /// Master seed for all randomness.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Print the resolved plan and work estimate without executing.
    #[arg(long, global = true)]
    dry_run: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write it in the text code format.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Check a combinatorial property by exhaustive oracle.
    Verify(VerifyArgs),
    /// Decode one outcome word.
    Decode(DecodeArgs),
    /// Monte-Carlo error-rate experiment over a code ensemble.
    Simulate(SimulateArgs),
    /// Rate/length bound tables.
    Bounds(BoundsArgs),
    /// Optimal-parameter searches.
    Optimize {
        #[command(subcommand)]
        kind: OptimizeKind,
    },
    /// Emit the pool layout of a binary code as JSON.
    ExportPools {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Extended / shortened Reed-Solomon code over GF(q0).
    Rs {
        #[arg(long)]
        q0: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        r: u32,
        /// Emit the binary expansion instead of the q-ary code.
        #[arg(long)]
        expand: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Circulant pair-code expansion (first row defaults to the powers of
    /// two when --k is given).
    Circulant {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Explicit first row as a 0/1 string.
        #[arg(long)]
        first_row: Option<String>,
        /// Emit the q-ary pair code instead of the binary expansion.
        #[arg(long)]
        qary: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recurrent homogeneous construction: (q,k,s) -> (kq,k,s+1).
    Homogeneous {
        base: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Three-row 2-disjunct homogeneous code.
    ThreeRow {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Three-row 3-hash homogeneous code (q >= k^2).
    Hash3 {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Product of two characteristic matrices.
    Product {
        left: PathBuf,
        right: PathBuf,
        /// Emit the homogeneous code of the product instead of the matrix.
        #[arg(long)]
        as_code: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Subset-incidence code on s- and (s+l)-subsets of 1..n.
    Subset {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Concatenate a q-ary outer code with a binary constant-weight inner
    /// code.
    Concat {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Stack a code over its bitwise complement.
    ComplementDouble {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Disjunct,
    Superimposed,
    Design,
    Symmetric,
    QaryDisjunct,
    QarySeparable,
    QaryHash,
    Bs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    A,
    D,
    Sd,
    Mac,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    property: PropertyArg,
    #[arg(long)]
    s: usize,
    #[arg(long, default_value_t = 1)]
    list: usize,
    #[arg(long, value_enum, default_value = "d")]
    model: ModelArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    Cover,
    Design,
    Ml,
    U,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long, value_enum, default_value = "d")]
    model: ModelArg,
    /// MAC transition table (JSON), required with --model mac.
    #[arg(long)]
    mac: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "cover")]
    decoder: DecoderArg,
    /// Q(0) for universal decoding.
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    #[arg(long)]
    s: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    codefile: PathBuf,
    /// Outcome word: one character per position, or comma-separated symbols.
    zword: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnsembleArg {
    Cre,
    Cwe,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    mac: PathBuf,
    #[arg(long, value_enum, default_value = "cwe")]
    ensemble: EnsembleArg,
    /// Q(1): ones probability / weight fraction.
    #[arg(long, default_value_t = 0.5)]
    q1: f64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    s: usize,
    #[arg(long, value_enum, default_value = "ml")]
    decoder: DecoderArg,
    /// Q(0) for universal decoding.
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    #[arg(long, default_value_t = 200)]
    trials: u64,
    /// Reuse one code for all trials instead of resampling per trial.
    #[arg(long)]
    fixed_code: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    T1,
    T2,
    Ks,
    Adder,
    MacBs,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    table: TableArg,
    /// Inclusive strength range, e.g. 2..8.
    #[arg(long, default_value = "2..8")]
    s_range: String,
    #[arg(long, default_value_t = 2)]
    list: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum OptimizeKind {
    /// Shortened-RS length optimizer for strength s and size >= 2^m.
    Rs {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Concatenated-code candidates over a constant-weight code table.
    Concat {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        m: u32,
        /// Table file `n D w A`; the shipped table is used when omitted.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn write_out(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_code(path: &Path) -> Result<AnyCode> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_code(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn read_binary(path: &Path) -> Result<BinaryCode> {
    match read_code(path)? {
        AnyCode::Binary(c) => Ok(c),
        AnyCode::Qary(_) => bail!("{} holds a q-ary code, need binary", path.display()),
    }
}

fn read_qary(path: &Path) -> Result<QaryCode> {
    match read_code(path)? {
        AnyCode::Qary(c) => Ok(c),
        AnyCode::Binary(_) => bail!("{} holds a binary code, need q-ary", path.display()),
    }
}

fn parse_range(text: &str) -> Result<(u32, u32)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| anyhow!("range must look like 2..8"))?;
    let lo: u32 = a.trim().parse().context("range start")?;
    let hi: u32 = b.trim().parse().context("range end")?;
    if lo > hi {
        bail!("empty range {text}");
    }
    Ok((lo, hi))
}

fn parse_zword(text: &str, names: &[&str]) -> Result<Vec<u16>> {
    let toks: Vec<String> = if text.contains(',') {
        text.split(',').map(|t| t.trim().to_string()).collect()
    } else {
        text.chars().map(|c| c.to_string()).collect()
    };
    toks.iter()
        .map(|tok| {
            names
                .iter()
                .position(|n| n == tok)
                .map(|i| i as u16)
                .ok_or_else(|| anyhow!("symbol {tok:?} not in output alphabet {names:?}"))
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .ok();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct { kind } => {
            construct(kind, cli.dry_run)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify(args, cli.dry_run),
        Command::Decode(args) => {
            decode(args, cli.dry_run)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate(args) => {
            simulate(args, cli.seed, cli.dry_run)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds(args) => {
            bounds_tables(args, cli.dry_run)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Optimize { kind } => {
            optimize(kind, cli.dry_run)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportPools { file, output } => {
            eprintln!("# supercode export-pools {}", file.display());
            if cli.dry_run {
                println!("plan: parse {} and emit pool JSON", file.display());
                return Ok(ExitCode::SUCCESS);
            }
            let code = read_binary(&file)?;
            write_out(output.as_deref(), &(pools_json(&code) + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn construct(kind: ConstructKind, dry_run: bool) -> Result<()> {
    match kind {
        ConstructKind::Rs {
            q0,
            k,
            r,
            expand,
            output,
        } => {
            eprintln!("# supercode construct rs q0={q0} k={k} r={r} expand={expand}");
            if dry_run {
                let t = (q0 as u128).saturating_pow(k - r);
                println!(
                    "plan: shortened RS over GF({q0}), t={t}, length {}, expand={expand}",
                    q0 + 1 - r
                );
                return Ok(());
            }
            let f = Field::new(q0)?;
            let rs = shorten_rs(&f, k, r)?;
            let text = if expand {
                write_binary(&binary_expand(&rs.code))
            } else {
                write_qary(&rs.code)
            };
            write_out(output.as_deref(), &text)
        }
        ConstructKind::Circulant {
            q,
            k,
            first_row,
            qary,
            output,
        } => {
            let row: Vec<u8> = match (&first_row, k) {
                (Some(bits), _) => bits
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        other => Err(anyhow!("invalid bit {other:?} in first row")),
                    })
                    .collect::<Result<_>>()?,
                (None, Some(k)) => powers_of_two_row(q, k),
                (None, None) => bail!("need --first-row or --k"),
            };
            eprintln!(
                "# supercode construct circulant q={q} first_row={}",
                row.iter().map(|b| b.to_string()).collect::<String>()
            );
            if dry_run {
                println!(
                    "plan: circulant over q={q}, weight {}",
                    row.iter().filter(|&&b| b != 0).count()
                );
                return Ok(());
            }
            if qary {
                let c = supercode::constructions::circulant_matrix(q, &row)?;
                write_out(output.as_deref(), &write_qary(&pair_code(&c)?))
            } else {
                write_out(
                    output.as_deref(),
                    &write_binary(&circulant_design(q, &row)?),
                )
            }
        }
        ConstructKind::Homogeneous { base, output } => {
            eprintln!("# supercode construct homogeneous base={}", base.display());
            if dry_run {
                println!("plan: recurrent construction over {}", base.display());
                return Ok(());
            }
            let code = recurrent_homogeneous(&read_qary(&base)?)?;
            write_out(output.as_deref(), &write_qary(&code))
        }
        ConstructKind::ThreeRow { q, k, output } => {
            eprintln!("# supercode construct three-row q={q} k={k}");
            if dry_run {
                println!("plan: three-row (q={q},k={k},3) code, t={}", q * k);
                return Ok(());
            }
            write_out(output.as_deref(), &write_qary(&three_row_disjunct(q, k)?))
        }
        ConstructKind::Hash3 { q, k, output } => {
            eprintln!("# supercode construct hash3 q={q} k={k}");
            if dry_run {
                println!("plan: three-row hash (q={q},k={k},3) code, t={}", q * k);
                return Ok(());
            }
            write_out(output.as_deref(), &write_qary(&three_row_hash(q, k)?))
        }
        ConstructKind::Product {
            left,
            right,
            as_code,
            output,
        } => {
            eprintln!(
                "# supercode construct product {} {}",
                left.display(),
                right.display()
            );
            let read = |p: &Path| -> Result<CharMatrix> {
                let text = std::fs::read_to_string(p)
                    .with_context(|| format!("reading {}", p.display()))?;
                CharMatrix::parse(&text).map_err(|e| anyhow!("{}: {e}", p.display()))
            };
            if dry_run {
                println!("plan: characteristic-matrix product");
                return Ok(());
            }
            let prod = read(&left)?.product(&read(&right)?)?;
            if as_code {
                write_out(output.as_deref(), &write_qary(&prod.to_code()))
            } else {
                write_out(output.as_deref(), &prod.to_text())
            }
        }
        ConstructKind::Subset { n, s, l, output } => {
            eprintln!("# supercode construct subset n={n} s={s} l={l}");
            if dry_run {
                println!("plan: subset incidence code on {n} points");
                return Ok(());
            }
            write_out(
                output.as_deref(),
                &write_binary(&subset_incidence(n, s, l)?),
            )
        }
        ConstructKind::Concat {
            outer,
            inner,
            output,
        } => {
            eprintln!(
                "# supercode construct concat outer={} inner={}",
                outer.display(),
                inner.display()
            );
            if dry_run {
                println!("plan: concatenation");
                return Ok(());
            }
            let code = concatenate(&read_qary(&outer)?, &read_binary(&inner)?)?;
            write_out(output.as_deref(), &write_binary(&code))
        }
        ConstructKind::ComplementDouble { file, output } => {
            eprintln!("# supercode construct complement-double {}", file.display());
            if dry_run {
                println!("plan: stack code over complement");
                return Ok(());
            }
            let code = complement_double(&read_binary(&file)?);
            write_out(output.as_deref(), &write_binary(&code))
        }
    }
}

fn model_of(arg: ModelArg) -> Result<ChannelModel> {
    Ok(match arg {
        ModelArg::A => ChannelModel::Adder,
        ModelArg::D => ChannelModel::Disjunct,
        ModelArg::Sd => ChannelModel::SymmetricDisjunct,
        ModelArg::Mac => bail!("this operation needs a deterministic model (a, d or sd)"),
    })
}

fn verify(args: VerifyArgs, dry_run: bool) -> Result<ExitCode> {
    let kind = match args.property {
        PropertyArg::Disjunct => PropertyKind::Superimposed { s: args.s, list: 1 },
        PropertyArg::Superimposed => PropertyKind::Superimposed {
            s: args.s,
            list: args.list,
        },
        PropertyArg::Design => PropertyKind::Design {
            s: args.s,
            model: model_of(args.model)?,
        },
        PropertyArg::Symmetric => PropertyKind::SymmetricSuperimposed {
            s: args.s,
            list: args.list,
        },
        PropertyArg::QaryDisjunct => PropertyKind::QaryDisjunct { s: args.s },
        PropertyArg::QarySeparable => PropertyKind::QarySeparable { s: args.s },
        PropertyArg::QaryHash => PropertyKind::QaryHash { s: args.s },
        PropertyArg::Bs => PropertyKind::BsCode { s: args.s },
    };
    eprintln!(
        "# supercode verify property={kind:?} budget={} file={}",
        args.budget,
        args.file.display()
    );
    let code = read_code(&args.file)?;
    let code_ref = match &code {
        AnyCode::Binary(c) => supercode::verify::CodeRef::Binary(c),
        AnyCode::Qary(c) => supercode::verify::CodeRef::Qary(c),
    };
    let (t, len) = match &code {
        AnyCode::Binary(c) => (c.size(), c.len()),
        AnyCode::Qary(c) => (c.size(), c.rows()),
    };
    if dry_run {
        println!(
            "plan: verify {kind:?} on t={t}, estimated work {}",
            supercode::verify::work_estimate(kind, t, len)
        );
        return Ok(ExitCode::SUCCESS);
    }
    let mut verdict = verify_property(code_ref, PropertySpec::with_budget(kind, args.budget))?;
    if let Some(w) = &mut verdict.witness {
        witness_one_based(w);
    }
    println!("{}", serde_json::to_string(&verdict)?);
    Ok(if verdict.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn witness_one_based(w: &mut supercode::verify::Witness) {
    use supercode::verify::Witness;
    let bump = |v: &mut Vec<usize>| v.iter_mut().for_each(|u| *u += 1);
    match w {
        Witness::CoverViolation { subset, covered } => {
            bump(subset);
            bump(covered);
        }
        Witness::Collision { a, b } => {
            bump(a);
            bump(b);
        }
        Witness::HashViolation { subset } => bump(subset),
        Witness::QaryCover { outsider, subset } => {
            *outsider += 1;
            bump(subset);
        }
    }
}

fn decode(args: DecodeArgs, dry_run: bool) -> Result<()> {
    let code = read_binary(&args.codefile)?;
    let mac = match (&args.mac, args.model) {
        (Some(path), _) => Some(SymmetricMac::from_json(
            &std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
        )?),
        (None, ModelArg::Mac) => bail!("--model mac needs --mac <file>"),
        _ => None,
    };
    eprintln!(
        "# supercode decode s={} decoder={:?} file={}",
        args.s,
        args.decoder as u8,
        args.codefile.display()
    );
    if dry_run {
        println!("plan: decode one word over t={}", code.size());
        return Ok(());
    }
    let names: Vec<String> = match (&mac, args.model) {
        (Some(m), _) => m.z_names.clone(),
        (None, ModelArg::A) => (0..=args.s).map(|v| v.to_string()).collect(),
        (None, ModelArg::D) => vec!["0".into(), "1".into()],
        (None, ModelArg::Sd) => vec!["0".into(), "1".into(), "*".into()],
        (None, ModelArg::Mac) => unreachable!("handled above"),
    };
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let z = parse_zword(&args.zword, &name_refs)?;
    if z.len() != code.len() {
        bail!(
            "outcome word has {} symbols, code length is {}",
            z.len(),
            code.len()
        );
    }
    let out = match args.decoder {
        DecoderArg::Cover => {
            let mut y = BitColumn::zero(code.len());
            for (i, &zi) in z.iter().enumerate() {
                if zi != 0 {
                    y.set(i, true);
                }
            }
            let hits: Vec<usize> = cover_decode(&code, &y).iter().map(|u| u + 1).collect();
            serde_json::json!({ "covered": hits }).to_string()
        }
        DecoderArg::Design => {
            let model = model_of(args.model)?;
            let r = design_decode(&code, &z, args.s, model, args.budget)?;
            serde_json::to_string(&one_based(r))?
        }
        DecoderArg::Ml => {
            let mac = mac.ok_or_else(|| anyhow!("ml decoding needs --mac <file>"))?;
            let r = ml_decode(&code, &z, &mac, args.s, args.budget)?;
            serde_json::to_string(&one_based(r))?
        }
        DecoderArg::U => {
            let z_size = names.len();
            let r = u_decode(&code, &z, z_size, args.q, args.s, args.budget)?;
            serde_json::to_string(&one_based(r))?
        }
    };
    println!("{out}");
    Ok(())
}

fn one_based(mut r: supercode::decoding::DecodeResult) -> supercode::decoding::DecodeResult {
    if let Some(m) = &mut r.message {
        m.iter_mut().for_each(|u| *u += 1);
    }
    for c in &mut r.candidates {
        c.iter_mut().for_each(|u| *u += 1);
    }
    r
}

fn simulate(args: SimulateArgs, seed: u64, dry_run: bool) -> Result<()> {
    let mac = SymmetricMac::from_json(
        &std::fs::read_to_string(&args.mac)
            .with_context(|| format!("reading {}", args.mac.display()))?,
    )?;
    let spec = EnsembleSpec {
        kind: match args.ensemble {
            EnsembleArg::Cre => EnsembleKind::Cre,
            EnsembleArg::Cwe => EnsembleKind::Cwe,
        },
        q1: args.q1,
        n: args.n,
        t: args.t,
        seed,
    };
    let decoder = match args.decoder {
        DecoderArg::Ml => Decoder::Ml,
        DecoderArg::U => Decoder::Universal { q0: args.q },
        _ => bail!("simulate supports --decoder ml or u"),
    };
    eprintln!(
        "# supercode simulate ensemble={:?} q1={} n={} t={} s={} trials={} seed={seed} fixed_code={}",
        spec.kind, spec.q1, spec.n, spec.t, args.s, args.trials, args.fixed_code
    );
    if dry_run {
        println!(
            "plan: {} trials, each decoding one of C({},{}) messages",
            args.trials, args.t, args.s
        );
        return Ok(());
    }
    let report = error_rate(
        &mac,
        &spec,
        decoder,
        args.s,
        args.trials,
        seed,
        args.fixed_code,
        u128::MAX,
    )?;
    println!("{}", serde_json::to_string(&report)?);
    Ok(())
}

fn bounds_tables(args: BoundsArgs, dry_run: bool) -> Result<()> {
    let (lo, hi) = parse_range(&args.s_range)?;
    let csv = matches!(args.format, FormatArg::Csv);
    eprintln!(
        "# supercode bounds table={:?} s={lo}..{hi} L={}",
        args.table as u8, args.list
    );
    if dry_run {
        println!("plan: bounds table over s={lo}..{hi}");
        return Ok(());
    }
    let mut out = String::new();
    let sep = if csv { "," } else { "  " };
    match args.table {
        TableArg::T1 => {
            writeln!(out, "# rate bounds, list-decoding superimposed codes")?;
            writeln!(out, "s{sep}lower_cw{sep}upper_list1{sep}lower_design_ref{sep}lower_list2_ref{sep}upper_list2")?;
            for s in lo..=hi {
                let low = bounds::lower_rate_cw(s);
                let up1 = bounds::upper_rate_recurrence(s, 1)?;
                let up2 = bounds::upper_rate_recurrence(s, 2)?;
                let rd = bounds::reference::LOWER_RATE_DESIGN
                    .get((s as usize).wrapping_sub(2))
                    .map(|v| format!("{v:.3}"))
                    .unwrap_or_else(|| "-".into());
                let r2 = bounds::reference::LOWER_RATE_LIST2
                    .get((s as usize).wrapping_sub(2))
                    .map(|v| format!("{v:.3}"))
                    .unwrap_or_else(|| "-".into());
                writeln!(
                    out,
                    "{s}{sep}{:.6}{sep}{:.6}{sep}{rd}{sep}{r2}{sep}{:.6}",
                    low.value, up1.value, up2.value
                )?;
            }
            writeln!(
                out,
                "# _ref columns are published reference data, not recomputed"
            )?;
        }
        TableArg::T2 => {
            writeln!(out, "s{sep}upper_list{}", args.list)?;
            for s in lo..=hi {
                let b = bounds::upper_rate_recurrence(s, args.list)?;
                writeln!(out, "{s}{sep}{:.6}", b.value)?;
            }
        }
        TableArg::Ks => {
            writeln!(out, "s{sep}p{sep}lower{sep}upper")?;
            for s in lo..=hi {
                let b = bounds::ks_rate_bounds(s);
                writeln!(
                    out,
                    "{s}{sep}{:.6}{sep}{:.6}{sep}{:.6}",
                    b.lower.params[0].1, b.lower.value, b.upper.value
                )?;
            }
        }
        TableArg::Adder => {
            writeln!(
                out,
                "s{sep}entropy_upper{sep}refined_upper{sep}random_lower{sep}bose_lower"
            )?;
            for s in lo.max(2)..=hi {
                let b = bounds::adder_bounds(s);
                writeln!(
                    out,
                    "{s}{sep}{:.6}{sep}{:.6}{sep}{:.6}{sep}{:.6}",
                    b.entropy_upper, b.refined_upper, b.random_lower, b.bose_lower
                )?;
            }
        }
        TableArg::MacBs => {
            writeln!(
                out,
                "s{sep}cwe{sep}beta1{sep}beta2{sep}Q{sep}cre{sep}zero_error_cwe"
            )?;
            for s in lo.max(2)..=hi {
                let cwe = bounds::boolean_bs(s, EnsembleKind::Cwe);
                let cre = bounds::boolean_bs(s, EnsembleKind::Cre);
                let p = |name: &str| {
                    cwe.bound
                        .params
                        .iter()
                        .find(|x| x.0 == name)
                        .map(|x| x.1)
                        .unwrap_or(f64::NAN)
                };
                writeln!(
                    out,
                    "{s}{sep}{:.4}{sep}{:.3}{sep}{:.3}{sep}{:.3}{sep}{:.6}{sep}{:.4}",
                    cwe.bound.value,
                    p("beta1"),
                    p("beta2"),
                    p("Q"),
                    cre.bound.value,
                    cwe.zero_error_lower
                )?;
            }
        }
    }
    write_out(args.output.as_deref(), &out)
}

fn optimize(kind: OptimizeKind, dry_run: bool) -> Result<()> {
    match kind {
        OptimizeKind::Rs {
            s,
            m,
            format,
            output,
        } => {
            eprintln!("# supercode optimize rs s={s} m={m}");
            if dry_run {
                println!("plan: shortened-RS optimum for s={s}, m={m}");
                return Ok(());
            }
            let sep = if matches!(format, FormatArg::Csv) {
                ","
            } else {
                "  "
            };
            let r = optimal_rs(s, m);
            let mut out = String::new();
            writeln!(
                out,
                "kind{sep}q0{sep}lambda0{sep}k{sep}r{sep}w{sep}N{sep}t{sep}in_window"
            )?;
            let line = |tag: &str, c: &supercode::paramsearch::RsOptimum| {
                format!(
                    "{tag}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}",
                    c.q0, c.lambda0, c.k, c.r, c.w, c.n, c.t, c.in_window
                )
            };
            writeln!(out, "{}", line("best", &r.best))?;
            match &r.table_cell {
                Some(c) => writeln!(out, "{}", line("table-cell", c))?,
                None => writeln!(
                    out,
                    "table-cell{sep}dash (optimum size outside the 2^m window)"
                )?,
            }
            for c in &r.window_candidates {
                writeln!(out, "{}", line("window", c))?;
            }
            write_out(output.as_deref(), &out)
        }
        OptimizeKind::Concat {
            s,
            m,
            table,
            format,
            output,
        } => {
            eprintln!("# supercode optimize concat s={s} m={m}");
            if dry_run {
                println!("plan: concatenated candidates for s={s}, m={m}");
                return Ok(());
            }
            let table = match table {
                Some(path) => CwTable::load(&path)?,
                None => CwTable::builtin(),
            };
            let sep = if matches!(format, FormatArg::Csv) {
                ","
            } else {
                "  "
            };
            let cands = concat_search(s, m, &table)?;
            let mut out = String::new();
            writeln!(out, "q{sep}q_prime{sep}w_prime{sep}outer{sep}q0{sep}k{sep}r{sep}n0{sep}lambda0{sep}N{sep}w{sep}t")?;
            for c in &cands {
                let (outer, q0, k, r) = match c.outer {
                    OuterCode::ShortenedRs { q0, k, r } => ("rs", q0, k, r),
                    OuterCode::LatinSquare { q0 } => ("latin", q0, 0, 0),
                };
                writeln!(
                    out,
                    "{}{sep}{}{sep}{}{sep}{outer}{sep}{q0}{sep}{k}{sep}{r}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}",
                    c.q, c.q_prime, c.w_prime, c.n0, c.lambda0, c.n, c.w, c.t
                )?;
            }
            write_out(output.as_deref(), &out)
        }
    }
}
