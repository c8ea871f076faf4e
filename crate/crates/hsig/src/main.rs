use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hsig::{input, tables};
use hsig_core::classification::{
    bz_to_kl, bz_to_langlands, is_irreducible_standard, is_tempered, is_unitary, is_unramified,
};
use hsig_core::combinat::{character_at_w0, kostka, partitions};
use hsig_core::intertwiner::{
    det_order, isotypic_signature, oracle_report, IsotypicSignature, RegularOperator,
};
use hsig_core::sigengine::{
    kostka_identity_check, sig_at_infinity, sig_at_infinity_raw, sigma_family,
    signature_unramified, telescoping_holds, Engine, FamilyPoint, InfinityInput, Mode,
    UnramifiedMode,
};
use hsig_core::walls::HermitianParameter;
use hsig_core::wmodule::max_lambda;
use hsig_core::{
    CharacterTable, Error, Multisegment, Partition, Provenance, Rational, SignatureCharacter,
};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

const DEFAULT_MAX_N: usize = 12;

#[derive(Parser)]
#[command(
    name = "hsig",
    version,
    about = "Signature characters of Hermitian modules of the graded Hecke algebra of GL_N"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Reserved: every perturbation is already deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    /// Upper bound on N for enumerations; also read from HSIG_MAX_N.
    #[arg(long, global = true, env = "HSIG_MAX_N")]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Proven,
    Conjectural,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    /// chi(w_0) against the alternating Kostka sum
    KostkaIdentity,
    /// signature at infinity of the principal series against chi(w_0)
    Infinity,
    /// Sigma(m, r-1) - Sigma(m, r) = 2 Sigma(m-1, r-1)
    Telescoping,
    /// family formula at r = m against the signature at infinity
    Family,
    /// zeta(zeta(M)) = M on every small multisegment
    Involution,
    /// recompute the reference tables
    Tables,
}

#[derive(Subcommand)]
enum Command {
    /// Character table of S_N (rows: irreducibles, columns: cycle types).
    Chartable { n: usize },
    /// Kostka matrix of size N, or a single K_{lambda,mu}.
    Kostka {
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
    },
    /// Zelevinsky (Moeglin-Waldspurger) dual of a multisegment.
    Zel { multisegment: String },
    /// Kazhdan-Lusztig and Langlands data, and the basic predicates.
    Classify { multisegment: String },
    /// Signature character of L(M). Give a multisegment, an unramified
    /// parameter (--nu), or a Langlands datum (--blocks, --tempered, --nu).
    Sig {
        multisegment: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long)]
        tempered: Option<String>,
        #[arg(long, value_enum, default_value = "conjectural")]
        mode: ModeArg,
    },
    /// Signature at infinity of a Hermitian block datum.
    Infinity {
        #[arg(long)]
        blocks: String,
        #[arg(long)]
        tempered: Option<String>,
    },
    /// Closed formula Sigma^N(m, r) for the singleton-pair families.
    SigmaNmr { n: usize, m: usize, r: usize },
    /// Signatures read off the intertwining operator at an unramified point.
    Oracle {
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        lambda: Option<String>,
        /// Also print the vanishing order of the determinant along a line.
        #[arg(long)]
        det_order: bool,
        /// Direction of that line; defaults to (N-1)/2, .., -(N-1)/2.
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
    },
    /// Run an exact identity check up to --max-n.
    Verify {
        #[arg(value_enum)]
        check: Check,
    },
    /// Recompute the N = 2, 3, 4 reference tables with errata annotations.
    ReferenceTables {
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed:\n{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Parse(_)) | CliError::Usage(_) => 2,
            CliError::Core(Error::RequiresConjecture(_)) => 3,
            _ => 1,
        }
    }
}

type Out = Result<Output, CliError>;

enum Output {
    Text(String),
    Json(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(&cli) {
        Ok(Output::Text(s)) if s.ends_with('\n') => s,
        Ok(Output::Text(s)) => s + "\n",
        Ok(Output::Json(v)) => serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n",
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    // a closed pipe (`hsig ... | head`) is not an error
    let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
    ExitCode::SUCCESS
}

fn cap(cli: &Cli) -> usize {
    cli.max_n.unwrap_or(DEFAULT_MAX_N)
}

fn within_cap(cli: &Cli, n: usize) -> Result<(), CliError> {
    let max = cap(cli);
    if n > max {
        return Err(Error::Bounds {
            what: "N",
            value: n,
            max,
        }
        .into());
    }
    Ok(())
}

fn parse_multisegment(s: &str) -> Result<Multisegment, CliError> {
    Ok(s.parse::<Multisegment>().map_err(Error::from)?)
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse::<Partition>().map_err(Error::from)?)
}

fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Chartable { n } => chartable(cli, *n),
        Command::Kostka { n, lambda, mu } => kostka_cmd(cli, *n, lambda.as_deref(), mu.as_deref()),
        Command::Zel { multisegment } => {
            let m = parse_multisegment(multisegment)?;
            let dual = m.zelevinsky();
            Ok(if cli.json {
                Output::Json(json!({"input": m.to_string(), "dual": dual.to_string()}))
            } else {
                Output::Text(dual.to_string())
            })
        }
        Command::Classify { multisegment } => classify(cli, &parse_multisegment(multisegment)?),
        Command::Sig {
            multisegment,
            nu,
            blocks,
            tempered,
            mode,
        } => sig(
            cli,
            multisegment.as_deref(),
            nu.as_deref(),
            blocks.as_deref(),
            tempered.as_deref(),
            *mode,
        ),
        Command::Infinity { blocks, tempered } => infinity(cli, blocks, tempered.as_deref()),
        Command::SigmaNmr { n, m, r } => {
            within_cap(cli, *n)?;
            let s = sigma_family(*n, *m, *r)?;
            Ok(if cli.json {
                let mut v = signature_json(&s);
                v["input"] = json!({"n": n, "m": m, "r": r});
                Output::Json(v)
            } else {
                Output::Text(signature_line(&s))
            })
        }
        Command::Oracle {
            nu,
            lambda,
            det_order,
            direction,
        } => oracle(cli, nu, lambda.as_deref(), *det_order, direction.as_deref()),
        Command::Verify { check } => verify(cli, *check),
        Command::ReferenceTables { n } => {
            if let Some(n) = n {
                if !(2..=4).contains(n) {
                    return Err(CliError::Usage(format!(
                        "reference tables exist for N = 2, 3, 4, not {n}"
                    )));
                }
            }
            let checks = tables::check_tables(*n)?;
            Ok(if cli.json {
                Output::Json(tables::render_json(&checks))
            } else {
                Output::Text(tables::render_text(&checks))
            })
        }
    }
}

fn chartable(cli: &Cli, n: usize) -> Out {
    within_cap(cli, n)?;
    let t = CharacterTable::new(n)?;
    let labels: Vec<String> = t.labels().iter().map(Partition::symbol).collect();
    let k = labels.len();
    if cli.json {
        let rows: Vec<Vec<i64>> = (0..k).map(|i| t.row(i).to_vec()).collect();
        return Ok(Output::Json(
            json!({"n": n, "labels": labels, "table": rows}),
        ));
    }
    let rows: Vec<Vec<String>> = (0..k)
        .map(|i| t.row(i).iter().map(i64::to_string).collect())
        .collect();
    Ok(Output::Text(grid(&labels, &labels, &rows)))
}

fn kostka_cmd(cli: &Cli, n: Option<usize>, lambda: Option<&str>, mu: Option<&str>) -> Out {
    match (n, lambda, mu) {
        (None, Some(l), Some(m)) => {
            let (l, m) = (parse_partition(l)?, parse_partition(m)?);
            within_cap(cli, l.n())?;
            let k = kostka(&l, &m)?;
            Ok(if cli.json {
                Output::Json(json!({"lambda": l.symbol(), "mu": m.symbol(), "kostka": k}))
            } else {
                Output::Text(k.to_string())
            })
        }
        (Some(n), None, None) => {
            within_cap(cli, n)?;
            let labels = partitions(n)?;
            let matrix: Vec<Vec<u64>> = labels
                .iter()
                .map(|l| labels.iter().map(|m| kostka(l, m)).collect())
                .collect::<Result<_, _>>()?;
            let names: Vec<String> = labels.iter().map(Partition::symbol).collect();
            if cli.json {
                return Ok(Output::Json(
                    json!({"n": n, "labels": names, "matrix": matrix}),
                ));
            }
            let cells: Vec<Vec<String>> = matrix
                .iter()
                .map(|r| r.iter().map(u64::to_string).collect())
                .collect();
            Ok(Output::Text(grid(&names, &names, &cells)))
        }
        _ => Err(CliError::Usage(
            "give either N or both --lambda and --mu".into(),
        )),
    }
}

/// Right-aligned table with row and column headers.
fn grid(rows: &[String], cols: &[String], cells: &[Vec<String>]) -> String {
    let head = rows.iter().map(String::len).max().unwrap_or(0);
    let width: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            cells
                .iter()
                .map(|r| r[j].len())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = format!("{:head$}", "");
    for (c, w) in cols.iter().zip(&width) {
        out.push_str(&format!("  {c:>w$}"));
    }
    out.push('\n');
    for (r, row) in rows.iter().zip(cells) {
        out.push_str(&format!("{r:head$}"));
        for (v, w) in row.iter().zip(&width) {
            out.push_str(&format!("  {v:>w$}"));
        }
        out.push('\n');
    }
    out
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

fn classify(cli: &Cli, m: &Multisegment) -> Out {
    let kl = bz_to_kl(m);
    let l = bz_to_langlands(m);
    let flags = json!({
        "tempered": is_tempered(m),
        "unramified": is_unramified(m),
        "hermitian": m.is_hermitian(),
        "unitary": is_unitary(m),
        "irreducible_standard": is_irreducible_standard(m),
    });
    let tempered: Vec<String> = l
        .tempered_parts
        .iter()
        .map(Multisegment::to_string)
        .collect();
    if cli.json {
        return Ok(Output::Json(json!({
            "multisegment": m.to_string(),
            "s": rationals(&kl.s),
            "e": kl.e.symbol(),
            "block_sizes": l.block_sizes,
            "tempered_parts": tempered,
            "nu": rationals(&l.nu),
        "flags": flags,
        })));
    }
    let mut out = String::new();
    out.push_str(&format!("multisegment    {m}\n"));
    out.push_str(&format!(
        "s               ({})\n",
        rationals(&kl.s).join(",")
    ));
    out.push_str(&format!("e               {}\n", kl.e.symbol()));
    out.push_str(&format!(
        "block sizes     ({})\n",
        l.block_sizes
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    ));
    out.push_str(&format!("tempered parts  {}\n", tempered.join(" | ")));
    out.push_str(&format!(
        "nu              ({})\n",
        rationals(&l.nu).join(",")
    ));
    for (k, v) in flags.as_object().expect("flags is an object") {
        out.push_str(&format!("{:<16}{}\n", k, v));
    }
    Ok(Output::Text(out))
}

fn provenance_label(s: &SignatureCharacter) -> String {
    match s.provenance() {
        Provenance::Proven => "proven".into(),
        Provenance::Conjectural => {
            let names: Vec<&str> = s.conjectures().iter().map(|c| c.name()).collect();
            format!("conjectural [{}]", names.join(", "))
        }
    }
}

fn signature_line(s: &SignatureCharacter) -> String {
    format!("{}  {}", s.render(false), provenance_label(s))
}

fn signature_json(s: &SignatureCharacter) -> Value {
    let coeffs: Map<String, Value> = s
        .labels()
        .iter()
        .zip(s.coeffs())
        .map(|(p, c)| (p.symbol(), json!(c)))
        .collect();
    json!({
        "signature": coeffs,
        "rendered": s.render(true),
        "provenance": s.provenance().to_string(),
        "conjecture_uses": s.conjectures().iter().map(|c| c.name()).collect::<Vec<_>>(),
    })
}

fn sig(
    cli: &Cli,
    multisegment: Option<&str>,
    nu: Option<&str>,
    blocks: Option<&str>,
    tempered: Option<&str>,
    mode: ModeArg,
) -> Out {
    let m = match (multisegment, nu, blocks) {
        (Some(s), None, None) => parse_multisegment(s)?,
        (None, Some(nu), Some(b)) => input::langlands_multisegment(b, tempered, nu)?,
        (None, Some(nu), None) if tempered.is_none() => {
            HermitianParameter::parse(nu, None)?.multisegment()
        }
        _ => {
            return Err(CliError::Usage(
                "give a multisegment, --nu, or --blocks with --nu (and --tempered)".into(),
            ))
        }
    };
    within_cap(cli, m.n())?;
    let unramified = is_unramified(&m)
        .then(|| HermitianParameter::new(m.content()))
        .transpose();
    let s = match (mode, unramified) {
        (ModeArg::Oracle, Ok(Some(p))) => signature_unramified(&p, UnramifiedMode::Oracle)?,
        (ModeArg::Oracle, _) => {
            return Err(Error::InvalidParameter(format!(
                "operator mode needs a Hermitian unramified parameter, got {m}"
            ))
            .into())
        }
        (ModeArg::Proven, Ok(Some(p))) => signature_unramified(&p, UnramifiedMode::ProvenOnly)?,
        (ModeArg::Conjectural, Ok(Some(p))) => {
            signature_unramified(&p, UnramifiedMode::AllowConjectures)?
        }
        (ModeArg::Proven, _) => Engine::new().signature(&m, Mode::ProvenOnly)?,
        (ModeArg::Conjectural, _) => Engine::new().signature(&m, Mode::AllowConjectures)?,
    };
    let notes = tables::errata_for(&m);
    if cli.json {
        let mut v = signature_json(&s);
        v["input"] = json!(m.to_string());
        v["errata_notes"] = json!(notes);
        return Ok(Output::Json(v));
    }
    let mut out = signature_line(&s);
    for n in notes {
        out.push_str(&format!("\nnote: {n}"));
    }
    Ok(Output::Text(out))
}

fn infinity(cli: &Cli, blocks: &str, tempered: Option<&str>) -> Out {
    let sizes = input::parse_blocks(blocks)?;
    let parts = input::parse_tempered(tempered, &sizes)?;
    let inp = InfinityInput::from_tempered(&parts)?;
    within_cap(cli, inp.n())?;
    let union = parts
        .iter()
        .fold(Multisegment::new(Vec::new()), |a, b| a.union(b));
    let s = sig_at_infinity(&inp, &max_lambda(&union))?;
    Ok(if cli.json {
        let mut v = signature_json(&s);
        v["input"] = json!({"blocks": sizes, "tempered_parts": parts.iter().map(Multisegment::to_string).collect::<Vec<_>>()});
        Output::Json(v)
    } else {
        Output::Text(signature_line(&s))
    })
}

fn isotypic_json(e: &IsotypicSignature) -> Value {
    json!({
        "lambda": e.lambda.symbol(),
        "positive": e.positive,
        "negative": e.negative,
        "zero": e.zero,
        "signature": e.signature(),
    })
}

fn isotypic_line(e: &IsotypicSignature) -> String {
    format!(
        "{:<10} +{} -{} 0:{}  signature {}",
        e.lambda.symbol(),
        e.positive,
        e.negative,
        e.zero,
        e.signature()
    )
}

fn oracle(
    cli: &Cli,
    nu: &str,
    lambda: Option<&str>,
    with_det: bool,
    direction: Option<&str>,
) -> Out {
    let p = HermitianParameter::parse(nu, None)?;
    within_cap(cli, p.n())?;
    let mut text = String::new();
    let mut v = json!({"nu": p.to_string()});
    if let Some(l) = lambda {
        let lam = parse_partition(l)?;
        let a = RegularOperator::build(&p)?;
        let e = isotypic_signature(&a, &lam)?;
        text.push_str(&isotypic_line(&e));
        v["isotypic"] = json!([isotypic_json(&e)]);
    } else {
        let report = oracle_report(&p)?;
        text.push_str("per type, before the global sign normalization:\n");
        for e in &report.entries {
            text.push_str(&isotypic_line(e));
            text.push('\n');
        }
        text.push_str(&format!("signature  {}", report.signature.render(true)));
        v["isotypic"] = Value::Array(report.entries.iter().map(isotypic_json).collect());
        v["signature"] = signature_json(&report.signature)["signature"].clone();
    }
    if with_det {
        let n = p.n() as i64;
        let dir = match direction {
            Some(d) => input::parse_rationals(d)?,
            None => (0..n)
                .map(|i| Rational::new(n - 1 - 2 * i, 2).expect("nonzero denominator"))
                .collect(),
        };
        let order = det_order(p.nu(), &dir)?;
        match order {
            Some(k) => text.push_str(&format!("\ndet order  {k}")),
            None => text.push_str("\ndet order  determinant vanishes identically along this line"),
        }
        v["det_order"] = json!(order);
    }
    Ok(if cli.json {
        Output::Json(v)
    } else {
        Output::Text(text)
    })
}

/// Every multisegment of total size `<= max_n` built from segments starting
/// in `{-1, -1/2, 0, 1/2, 1}` of length at most 3.
fn small_multisegments(max_n: usize) -> Vec<Multisegment> {
    let mut kinds = Vec::new();
    for num in -2..=2 {
        for len in 1..=3 {
            kinds.push((Rational::new(num, 2).expect("nonzero denominator"), len));
        }
    }
    let mut out = Vec::new();
    // (next kind allowed, chosen (start, len) pairs, total size)
    type Partial = (usize, Vec<(Rational, usize)>, usize);
    let mut stack: Vec<Partial> = vec![(0, Vec::new(), 0)];
    while let Some((from, chosen, size)) = stack.pop() {
        if size > 0 {
            out.push(Multisegment::new(
                chosen
                    .iter()
                    .map(|&(s, l)| hsig_core::Segment::new(s, l))
                    .collect(),
            ));
        }
        for (k, &(s, l)) in kinds.iter().enumerate().skip(from) {
            if size + l <= max_n {
                let mut next = chosen.clone();
                next.push((s, l));
                stack.push((k, next, size + l));
            }
        }
    }
    out
}

fn verify(cli: &Cli, check: Check) -> Out {
    let default = match check {
        Check::KostkaIdentity => 12,
        Check::Infinity => 8,
        Check::Telescoping => 10,
        Check::Family => 6,
        Check::Involution => 5,
        Check::Tables => 4,
    };
    let max = cli.max_n.map_or(default, |m| m.min(DEFAULT_MAX_N));
    let ns: Vec<usize> = (1..=max).collect();
    let (ok, summary, detail): (bool, String, Vec<String>) = match check {
        Check::KostkaIdentity => {
            let reports = ns
                .par_iter()
                .map(|&n| kostka_identity_check(n))
                .collect::<Result<Vec<_>, _>>()?;
            let counts: Vec<String> = reports.iter().map(|r| r.checked.to_string()).collect();
            let total: usize = reports.iter().map(|r| r.checked).sum();
            let ok = reports.iter().all(|r| r.holds());
            let detail = reports
                .iter()
                .filter(|r| !r.holds())
                .map(|r| r.summary())
                .collect();
            (
                ok,
                format!(
                    "{} = {total} identities hold (N <= {max})",
                    counts.join("+")
                ),
                detail,
            )
        }
        Check::Infinity => {
            let rows = ns
                .par_iter()
                .map(|&n| -> Result<(usize, bool), Error> {
                    let raw = sig_at_infinity_raw(&InfinityInput::unramified(n))?;
                    let chi = partitions(n)?
                        .iter()
                        .map(character_at_w0)
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok((n, raw == chi))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let bad: Vec<String> = rows
                .iter()
                .filter(|r| !r.1)
                .map(|r| format!("N={} differs", r.0))
                .collect();
            (
                bad.is_empty(),
                format!("signature at infinity equals chi(w_0) for N <= {max}"),
                bad,
            )
        }
        Check::Telescoping => {
            let triples: Vec<(usize, usize, usize)> = ns
                .iter()
                .flat_map(|&n| (1..=n / 2).flat_map(move |m| (1..=m).map(move |r| (n, m, r))))
                .collect();
            let results = triples
                .par_iter()
                .map(|&(n, m, r)| telescoping_holds(n, m, r).map(|ok| (n, m, r, ok)))
                .collect::<Result<Vec<_>, _>>()?;
            let bad: Vec<String> = results
                .iter()
                .filter(|t| !t.3)
                .map(|t| format!("N={} m={} r={}", t.0, t.1, t.2))
                .collect();
            (
                bad.is_empty(),
                format!("{} telescoping identities hold (N <= {max})", results.len()),
                bad,
            )
        }
        Check::Family => {
            let pairs: Vec<(usize, usize)> = ns
                .iter()
                .flat_map(|&n| (0..=n / 2).map(move |m| (n, m)))
                .collect();
            let results = pairs
                .par_iter()
                .map(|&(n, m)| -> Result<(usize, usize, bool), Error> {
                    let fp = FamilyPoint::new(n, m, m)?;
                    let parts = fp.tempered_parts();
                    let union = parts
                        .iter()
                        .fold(Multisegment::new(Vec::new()), |a, b| a.union(b));
                    let inf = sig_at_infinity(
                        &InfinityInput::from_tempered(&parts)?,
                        &max_lambda(&union),
                    )?;
                    Ok((n, m, sigma_family(n, m, m)?.coeffs() == inf.coeffs()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let bad: Vec<String> = results
                .iter()
                .filter(|t| !t.2)
                .map(|t| format!("N={} m={}", t.0, t.1))
                .collect();
            (
                bad.is_empty(),
                format!(
                    "{} family values match the signature at infinity (N <= {max})",
                    results.len()
                ),
                bad,
            )
        }
        Check::Involution => {
            let all = small_multisegments(max);
            let bad: Vec<String> = all
                .par_iter()
                .filter(|m| m.zelevinsky().zelevinsky() != **m)
                .map(|m| m.to_string())
                .collect();
            (
                bad.is_empty(),
                format!(
                    "zeta is an involution on {} multisegments (N <= {max})",
                    all.len()
                ),
                bad,
            )
        }
        Check::Tables => {
            let checks = tables::check_tables(None)?;
            let bad: Vec<String> = checks
                .iter()
                .filter(|c| !c.passes())
                .map(|c| format!("N={} {} {}", c.entry.n, c.entry.family, c.entry.stratum))
                .collect();
            (
                bad.is_empty(),
                format!("{} reference table entries reproduced", checks.len()),
                bad,
            )
        }
    };
    if !ok {
        return Err(CliError::Failed(detail.join("\n")));
    }
    Ok(if cli.json {
        Output::Json(json!({"ok": true, "summary": summary}))
    } else {
        Output::Text(format!("OK: {summary}"))
    })
}
