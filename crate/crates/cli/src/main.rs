//! Command-line surface for the smooth-word calculus.
//!
//! Exit codes: 0 success, 1 invalid input, 2 resource ceiling exceeded,
//! 3 internal invariant failure.

mod cache;

use cache::Cache;
use clap::{Parser, Subcommand, ValueEnum};
use smoothwords_core as core;
use smoothwords_core::{AlphabetParams, Chain, ChainFamily, Error, Method, StatsRecord, Word};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "smoothwords",
    version,
    about = "Run-length derivative calculus on smooth words: height classes, \
             chain partitions, length enumeration and Kolakoski statistics"
)]
struct Cli {
    /// Two-letter alphabet as "a,b" with 1 <= a < b <= 9
    #[arg(long, global = true, default_value = "1,2", value_parser = parse_alphabet)]
    alphabet: AlphabetParams,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Directory for persistent memoization of expensive enumerations
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Canonical orderings are always on; accepted for command-line hygiene
    #[arg(long = "seedless-deterministic", global = true)]
    seedless_deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Extension,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Extension => Method::Extension,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run-length derivative of WORD; --iterate K prints D^1..D^K
    Derive {
        word: String,
        #[arg(long)]
        iterate: Option<u32>,
    },
    /// Smooth height of WORD (number of derivatives down to the empty word)
    Height { word: String },
    /// All primitives of WORD (words whose derivative is WORD)
    Primitives { word: String },
    /// The height class P^K(ε), in length-then-lexicographic order
    Class { k: u32 },
    /// The chain family H^K; --split separates by first letter
    Chains {
        k: u32,
        #[arg(long)]
        split: bool,
    },
    /// Check the chain partition of the height-K class and report
    VerifyPartition { k: u32 },
    /// γ(N): the number of smooth words of length N
    Gamma {
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Extension)]
        method: MethodArg,
    },
    /// Per-length table of γ, γ', height extrema and frequency extrema
    Stats { n_max: usize },
    /// Chain sandwich bounds around γ(N)
    Bounds { n: usize },
    /// Kolakoski prefix of length N; --stats, --alpha I or --complexity N,W
    Kolakoski {
        n: usize,
        #[arg(long)]
        stats: bool,
        #[arg(long, value_name = "I")]
        alpha: Option<u32>,
        #[arg(long, value_name = "N,WINDOW")]
        complexity: Option<String>,
    },
    /// Growth-exponent calculators: --theta T, --xi X (uses --alphabet) or --sing A,B
    Exponents {
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        xi: Option<f64>,
        #[arg(long, value_name = "A,B")]
        sing: Option<String>,
    },
    /// Least-squares growth exponent of γ over lengths [N_MIN, N_MAX]
    Fit { n_min: usize, n_max: usize },
}

fn parse_alphabet(s: &str) -> Result<AlphabetParams, String> {
    let (a, b) = parse_pair(s).map_err(|e| e.to_string())?;
    let a = u8::try_from(a).map_err(|_| "letter out of range".to_string())?;
    let b = u8::try_from(b).map_err(|_| "letter out of range".to_string())?;
    AlphabetParams::new(a, b).map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(usize, usize), Error> {
    let mut it = s.split(',');
    let parse = |part: Option<&str>| {
        part.and_then(|p| p.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Domain(format!("expected two comma-separated integers, got '{s}'")))
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(Error::Domain(format!("expected exactly two values in '{s}'")));
    }
    Ok((a, b))
}

fn main() {
    // streamed output is routinely piped to head and friends; dying on
    // SIGPIPE is the expected behavior, not a panic
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(&cli) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::ResourceLimit(_) => 2,
                Error::Internal(_) => 3,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let p = cli.alphabet;
    let base = p == AlphabetParams::base();
    let cache = match &cli.cache {
        Some(dir) => match Cache::new(dir) {
            Ok(c) => Some(c),
            Err(err) => {
                eprintln!("warning: cache directory unusable ({err}), continuing without");
                None
            }
        },
        None => None,
    };
    match &cli.command {
        Command::Derive { word, iterate } => {
            let mut w = Word::parse(word)?;
            let steps = iterate.unwrap_or(1);
            if steps == 0 {
                return Err(Error::Domain("--iterate must be at least 1".into()));
            }
            let mut lines = Vec::new();
            for _ in 0..steps {
                w = if base {
                    core::derivative(&w)?
                } else {
                    core::gen_derivative(&w, &p)?
                };
                lines.push(display_word(&w));
            }
            emit_lines(cli.format, "derivative", &lines)
        }
        Command::Height { word } => {
            let w = Word::parse(word)?;
            let h = if base {
                core::height(&w)?
            } else {
                core::gen_height(&w, &p)?
            };
            emit_scalar(cli.format, "height", serde_json::json!(h))
        }
        Command::Primitives { word } => {
            let w = Word::parse(word)?;
            let set = if base {
                core::primitives(&w)?
            } else {
                core::gen_primitives(&w, &p)?
            };
            let lines: Vec<String> = set.iter().map(display_word).collect();
            emit_lines(cli.format, "word", &lines)
        }
        Command::Class { k } => {
            let key = format!("k={k};alphabet={p}");
            let payload = with_cache(&cache, "height_class", &key, || {
                let members: Vec<String> = if base {
                    core::height_class(*k)?.members.iter().map(display_word).collect()
                } else {
                    core::gen_height_class(*k, &p)?.iter().map(display_word).collect()
                };
                Ok(serde_json::to_string(&members).expect("string list serializes"))
            })?;
            let lines: Vec<String> =
                serde_json::from_str(&payload).map_err(|e| Error::Internal(e.to_string()))?;
            emit_lines(cli.format, "word", &lines)
        }
        Command::Chains { k, split } => {
            let family = chain_family(&cache, *k, &p, base)?;
            let members = |c: &Chain| -> Vec<String> {
                c.members().iter().map(display_word).collect()
            };
            if *split {
                if cli.format == Format::Json {
                    let mut object = serde_json::Map::new();
                    for letter in p.letters() {
                        let group: Vec<Vec<String>> = family
                            .chains
                            .iter()
                            .filter(|c| c.first_letter() == letter)
                            .map(members)
                            .collect();
                        object.insert(letter.to_string(), serde_json::json!(group));
                    }
                    println!("{}", serde_json::Value::Object(object));
                    return Ok(());
                }
                let mut lines = Vec::new();
                for letter in p.letters() {
                    for chain in family.chains.iter().filter(|c| c.first_letter() == letter) {
                        lines.push(format!("{letter},{chain}"));
                    }
                }
                emit_lines(cli.format, "first_letter,chain", &lines)
            } else {
                if cli.format == Format::Json {
                    let chains: Vec<Vec<String>> = family.chains.iter().map(members).collect();
                    println!("{}", serde_json::to_string(&chains).unwrap());
                    return Ok(());
                }
                let lines: Vec<String> = family.chains.iter().map(|c| c.to_string()).collect();
                emit_lines(cli.format, "chain", &lines)
            }
        }
        Command::VerifyPartition { k } => {
            if base {
                let report = core::verify_partition(*k)?;
                let pass = report.pass();
                emit_report(cli.format, serde_json::to_value(&report).unwrap())?;
                if !pass {
                    return Err(Error::Internal(format!("partition check failed at k={k}")));
                }
                Ok(())
            } else {
                let family = core::gen_chains_of_height(*k, &p)?;
                let covered = family.total_members();
                let gap = core::gen_coverage_gap(*k, &p)?.len();
                let class_size = core::gen_height_class(*k, &p)?.len();
                let pass = covered + gap == class_size;
                let report = serde_json::json!({
                    "k": k,
                    "alphabet": p.to_string(),
                    "class_size": class_size,
                    "chain_count": family.chains.len(),
                    "covered": covered,
                    "coverage_gap": gap,
                    "accounting_ok": pass,
                });
                emit_report(cli.format, report)?;
                if !pass {
                    return Err(Error::Internal(format!(
                        "chain accounting failed at k={k} over {p}"
                    )));
                }
                Ok(())
            }
        }
        Command::Gamma { n, method } => {
            let count = if base {
                core::gamma(*n, (*method).into())?
            } else {
                core::gen_gamma(*n, &p, (*method).into())?
            };
            emit_scalar(cli.format, "gamma", serde_json::json!(count))
        }
        Command::Stats { n_max } => {
            require_base(base, "stats")?;
            let records = stats_records(&cache, *n_max)?;
            emit_stats(cli.format, &records)
        }
        Command::Bounds { n } => {
            require_base(base, "bounds")?;
            let report = core::chain_bounds_check(*n)?;
            let pass = report.pass;
            emit_report(cli.format, serde_json::to_value(&report).unwrap())?;
            if !pass {
                return Err(Error::Internal(format!("chain sandwich violated at n={n}")));
            }
            Ok(())
        }
        Command::Kolakoski {
            n,
            stats,
            alpha,
            complexity,
        } => {
            require_base(base, "kolakoski")?;
            if let Some(arg) = complexity {
                let (len, window) = parse_pair(arg)?;
                let count = core::factor_complexity(len, window)?;
                return emit_scalar(cli.format, "factor_complexity", serde_json::json!(count));
            }
            if let Some(i) = alpha {
                let report = serde_json::json!({
                    "i": i,
                    "estimate": core::alpha_estimate(*i)?,
                    "candidate": core::alpha_candidate(),
                });
                return emit_report(cli.format, report);
            }
            if *stats {
                let (ones, twos, ratio) = core::prefix_letter_stats(*n);
                let report = serde_json::json!({
                    "n": n,
                    "ones": ones,
                    "twos": twos,
                    "ratio": ratio,
                });
                return emit_report(cli.format, report);
            }
            emit_scalar(cli.format, "prefix", serde_json::json!(display_word(&core::kolakoski_prefix(*n))))
        }
        Command::Exponents { theta, xi, sing } => {
            let picked = [theta.is_some(), xi.is_some(), sing.is_some()]
                .iter()
                .filter(|&&b| b)
                .count();
            if picked != 1 {
                return Err(Error::Domain(
                    "pass exactly one of --theta, --xi, --sing".into(),
                ));
            }
            if let Some(t) = theta {
                let report = core::theorem6_exponents(*t)?;
                return emit_report(cli.format, serde_json::to_value(report).unwrap());
            }
            if let Some(x) = xi {
                let report = core::theorem5_exponents(&p, *x)?;
                return emit_report(cli.format, serde_json::to_value(report).unwrap());
            }
            let params = parse_alphabet(sing.as_deref().unwrap()).map_err(Error::Domain)?;
            let (delta, theta_rev) = core::sing_exponents(&params)?;
            let report = serde_json::json!({
                "alphabet": params.to_string(),
                "delta": delta,
                "theta_rev": theta_rev,
            });
            emit_report(cli.format, report)
        }
        Command::Fit { n_min, n_max } => {
            require_base(base, "fit")?;
            let records = stats_records(&cache, *n_max)?;
            let slope = core::fit_growth_exponent(&records, *n_min, *n_max)?;
            emit_scalar(cli.format, "exponent", serde_json::json!(slope))
        }
    }
}

fn require_base(base: bool, command: &str) -> Result<(), Error> {
    if base {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{command} is defined over the 1,2 alphabet only"
        )))
    }
}

fn with_cache(
    cache: &Option<Cache>,
    kind: &str,
    key: &str,
    compute: impl FnOnce() -> Result<String, Error>,
) -> Result<String, Error> {
    if let Some(c) = cache {
        if let Some(payload) = c.read(kind, key) {
            return Ok(payload);
        }
    }
    let payload = compute()?;
    if let Some(c) = cache {
        c.write(kind, key, &payload);
    }
    Ok(payload)
}

fn chain_family(
    cache: &Option<Cache>,
    k: u32,
    p: &AlphabetParams,
    base: bool,
) -> Result<ChainFamily, Error> {
    let key = format!("k={k};alphabet={p}");
    let payload = with_cache(cache, "chain_family", &key, || {
        let family = if base {
            core::chains_of_height(k)?
        } else {
            core::gen_chains_of_height(k, p)?
        };
        let chains: Vec<Vec<String>> = family
            .chains
            .iter()
            .map(|c| c.members().iter().map(display_word).collect())
            .collect();
        Ok(serde_json::to_string(&chains).expect("string lists serialize"))
    })?;
    let chains: Vec<Vec<String>> =
        serde_json::from_str(&payload).map_err(|e| Error::Internal(e.to_string()))?;
    let chains = chains
        .into_iter()
        .map(|members| {
            let members = members
                .iter()
                .map(|s| Word::parse(s))
                .collect::<Result<Vec<_>, _>>()?;
            Chain::new(members)
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Error::Internal(format!("cached chain family invalid: {e}")))?;
    Ok(ChainFamily { k, chains })
}

fn stats_records(cache: &Option<Cache>, n_max: usize) -> Result<Vec<StatsRecord>, Error> {
    let key = format!("n_max={n_max};alphabet=1,2");
    let payload = with_cache(cache, "stats", &key, || {
        let records = core::stats_table(n_max)?;
        Ok(serde_json::to_string(&records).expect("stats records serialize"))
    })?;
    serde_json::from_str(&payload).map_err(|e| Error::Internal(format!("cached stats invalid: {e}")))
}

fn display_word(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

/// 12 significant digits, plain notation in a sane magnitude band.
fn fmt_real(v: f64) -> String {
    if v == 0.0 {
        return "0.00000000000".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-4..12).contains(&exp) {
        return format!("{v:.11e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

fn json_scalar(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => "none".to_string(),
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.to_string()
            } else if let Some(u) = n.as_u64() {
                u.to_string()
            } else {
                fmt_real(n.as_f64().unwrap_or(f64::NAN))
            }
        }
        serde_json::Value::Bool(b) => b.to_string(),
        other => other.to_string(),
    }
}

fn emit_scalar(format: Format, name: &str, value: serde_json::Value) -> Result<(), Error> {
    match format {
        Format::Plain => println!("{}", json_scalar(&value)),
        Format::Csv => println!("{name}\n{}", json_scalar(&value)),
        Format::Json => println!("{}", serde_json::json!({ name: value })),
    }
    Ok(())
}

fn emit_lines(format: Format, header: &str, lines: &[String]) -> Result<(), Error> {
    match format {
        Format::Plain => {
            for line in lines {
                println!("{line}");
            }
        }
        Format::Csv => {
            println!("{header}");
            for line in lines {
                println!("{line}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string(lines).unwrap()),
    }
    Ok(())
}

/// Flat single-record report: plain prints key=value lines, csv one header
/// and one value row, json the object itself. serde_json orders keys
/// alphabetically, keeping every format byte-deterministic.
fn emit_report(format: Format, report: serde_json::Value) -> Result<(), Error> {
    let map = report
        .as_object()
        .ok_or_else(|| Error::Internal("report is not an object".into()))?;
    match format {
        Format::Plain => {
            for (key, value) in map {
                println!("{key}={}", json_scalar(value));
            }
        }
        Format::Csv => {
            let keys: Vec<&str> = map.keys().map(String::as_str).collect();
            let values: Vec<String> = map.values().map(json_scalar).collect();
            println!("{}", keys.join(","));
            println!("{}", values.join(","));
        }
        Format::Json => println!("{report}"),
    }
    Ok(())
}

fn emit_stats(format: Format, records: &[StatsRecord]) -> Result<(), Error> {
    match format {
        Format::Plain | Format::Csv => {
            println!("n,gamma,gamma_prime,h1,h2,freq_min_num,freq_min_den,freq_max_num,freq_max_den");
            for r in records {
                let gp = r.gamma_prime.map_or(String::new(), |v| v.to_string());
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.gamma,
                    gp,
                    r.h1,
                    r.h2,
                    r.freq_min.0,
                    r.freq_min.1,
                    r.freq_max.0,
                    r.freq_max.1
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string(records).unwrap()),
    }
    Ok(())
}
