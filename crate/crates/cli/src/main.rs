use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use vtcode::analysis::{
    binary_size_bounds, census_binary, census_q, deletion_upper_bound, qary_lower_bound,
    rate_bounds, write_csv, EnumerationLimits, HARD_MAX_BINARY_N, HARD_MAX_QARY_WORDS,
};
use vtcode::bits::{format_bits, format_symbols, parse_bits, parse_symbols};
use vtcode::channel::{run_trials, ChannelKind, SimCode};
use vtcode::{
    correct_binary, correct_q, encode_binary, encode_q, extract_binary, extract_q, is_member,
    is_member_q, validate_syndrome_positions, BinaryVtParams, BinaryWord, PairTable, QaryCode,
    QaryVtParams, QaryWord, VtError,
};

/// Encode, decode and analyse Varshamov-Tenengolts codes. `--q 2` selects the binary code.
#[derive(Parser)]
#[command(name = "vtc", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a bitstring message into a codeword.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Message bits as contiguous 0/1 text; read from stdin when absent.
        #[arg(long)]
        message: Option<String>,
    },
    /// Recover the message bits from a codeword.
    Extract {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        word: WordArg,
    },
    /// Correct a single deletion or insertion; the edit is inferred from the length.
    Correct {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        word: WordArg,
    },
    /// Test code membership.
    Member {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        word: WordArg,
    },
    /// Count code sizes by exhaustive enumeration and print them as CSV.
    Enumerate {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Only report this syndrome.
        #[arg(long)]
        a: Option<usize>,
        /// Only report this modular sum.
        #[arg(long)]
        b: Option<u32>,
        /// Maximum number of words to enumerate.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Message length, rates and size bounds.
    Bounds {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
    },
    /// Run seeded single-edit channel trials.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        /// identity, deletion, insertion or mixed.
        #[arg(long, default_value = "mixed")]
        channel: String,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dump the pair table and the c_5 list used by the q-ary encoder.
    Tables {
        #[arg(long)]
        q: u32,
    },
    /// Check whether bits at the given positions can reach every binary syndrome.
    ValidatePositions {
        #[arg(long)]
        n: usize,
        /// 1-indexed positions, separated by spaces or commas.
        #[arg(long)]
        positions: String,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a: usize,
    /// Modular sum; required when q > 2.
    #[arg(long)]
    b: Option<u32>,
}

#[derive(Args)]
struct WordArg {
    /// Space-separated decimal symbols (contiguous bits also accepted for q = 2); read from stdin when absent.
    #[arg(long)]
    word: Option<String>,
}

enum CliError {
    Usage(String),
    Codec(VtError),
    Io(io::Error),
}

impl From<VtError> for CliError {
    fn from(e: VtError) -> Self {
        CliError::Codec(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Codec(e) if e.is_codec_failure() => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

enum Code {
    Binary(BinaryVtParams),
    Qary(QaryCode),
}

impl CodeArgs {
    fn resolve(&self) -> CliResult<Code> {
        match (self.q, self.b) {
            (2, None) => Ok(Code::Binary(BinaryVtParams::new(self.n, self.a)?)),
            (2, Some(_)) => Err(CliError::Usage("--b applies only to q > 2".into())),
            (_, None) => Err(CliError::Usage("--b is required when q > 2".into())),
            (q, Some(b)) => Ok(Code::Qary(QaryCode::new(self.n, q, self.a, b)?)),
        }
    }

    fn encoder(&self) -> CliResult<Code> {
        match self.resolve()? {
            Code::Qary(code) => {
                QaryVtParams::new(code.n(), code.q(), code.a(), code.b())?;
                Ok(Code::Qary(code))
            }
            binary => Ok(binary),
        }
    }
}

fn qary_params(code: &QaryCode) -> CliResult<QaryVtParams> {
    Ok(QaryVtParams::new(code.n(), code.q(), code.a(), code.b())?)
}

fn input(arg: Option<&str>, what: &str) -> CliResult<String> {
    match arg {
        Some(text) => Ok(text.trim().to_string()),
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            let text = text.trim().to_string();
            if text.is_empty() {
                return Err(CliError::Usage(format!(
                    "no {what} given on the command line or stdin"
                )));
            }
            Ok(text)
        }
    }
}

fn parse_binary_word(text: &str) -> CliResult<BinaryWord> {
    let bits = if text.chars().any(char::is_whitespace) {
        let symbols = parse_symbols(text)?;
        symbols
            .into_iter()
            .map(|s| u8::try_from(s).unwrap_or(u8::MAX))
            .collect()
    } else {
        parse_bits(text)?
    };
    Ok(BinaryWord::new(bits)?)
}

fn parse_qary_word(text: &str, q: u32) -> CliResult<QaryWord> {
    Ok(QaryWord::new(q, parse_symbols(text)?)?)
}

fn check_len(expected: usize, actual: usize) -> CliResult<()> {
    if expected != actual {
        return Err(VtError::WordLength { expected, actual }.into());
    }
    Ok(())
}

enum Output {
    Text(String),
    Json(Value),
}

fn emit<T: Serialize>(json: bool, text: impl FnOnce() -> String, value: &T) -> CliResult<Output> {
    if json {
        Ok(Output::Json(
            serde_json::to_value(value).map_err(|e| CliError::Usage(e.to_string()))?,
        ))
    } else {
        Ok(Output::Text(text()))
    }
}

fn run(cli: Cli) -> CliResult<Output> {
    let json = cli.json;
    match cli.command {
        Command::Encode { code, message } => {
            let message = parse_bits(&input(message.as_deref(), "message")?)?;
            let symbols: Vec<u32> = match code.encoder()? {
                Code::Binary(p) => encode_binary(&message, &p)?
                    .bits()
                    .iter()
                    .map(|&b| b as u32)
                    .collect(),
                Code::Qary(c) => encode_q(&message, &qary_params(&c)?)?.into_symbols(),
            };
            emit(
                json,
                || format_symbols(&symbols),
                &json!({ "word": symbols }),
            )
        }
        Command::Extract { code, word } => {
            let text = input(word.word.as_deref(), "word")?;
            let message = match code.encoder()? {
                Code::Binary(p) => {
                    let w = parse_binary_word(&text)?;
                    check_len(p.n(), w.len())?;
                    extract_binary(&w, &p)?
                }
                Code::Qary(c) => extract_q(&parse_qary_word(&text, c.q())?, &qary_params(&c)?)?,
            };
            let bits = format_bits(&message);
            emit(json, || bits.clone(), &json!({ "message": bits }))
        }
        Command::Correct { code, word } => {
            let text = input(word.word.as_deref(), "word")?;
            let (n, received, corrected): (usize, usize, Vec<u32>) = match code.resolve()? {
                Code::Binary(p) => {
                    let w = parse_binary_word(&text)?;
                    let fixed = correct_binary(&w, &p)?;
                    (
                        p.n(),
                        w.len(),
                        fixed.bits().iter().map(|&b| b as u32).collect(),
                    )
                }
                Code::Qary(c) => {
                    let w = parse_qary_word(&text, c.q())?;
                    (c.n(), w.len(), correct_q(&w, &c)?.into_symbols())
                }
            };
            let edit = match received.cmp(&n) {
                std::cmp::Ordering::Less => "deletion",
                std::cmp::Ordering::Equal => "none",
                std::cmp::Ordering::Greater => "insertion",
            };
            emit(
                json,
                || format_symbols(&corrected),
                &json!({ "edit": edit, "word": corrected }),
            )
        }
        Command::Member { code, word } => {
            let text = input(word.word.as_deref(), "word")?;
            let member = match code.resolve()? {
                Code::Binary(p) => {
                    let w = parse_binary_word(&text)?;
                    check_len(p.n(), w.len())?;
                    is_member(&w, p.a())?
                }
                Code::Qary(c) => is_member_q(&parse_qary_word(&text, c.q())?, &c)?,
            };
            emit(json, || member.to_string(), &json!({ "member": member }))
        }
        Command::Enumerate { q, n, a, b, limit } => {
            let limits = match limit {
                None => EnumerationLimits::default(),
                Some(words) => {
                    let max_n = if words == 0 {
                        0
                    } else {
                        words.ilog2() as usize
                    };
                    EnumerationLimits::new(
                        max_n.min(HARD_MAX_BINARY_N),
                        words.min(HARD_MAX_QARY_WORDS),
                    )?
                }
            };
            let mut rows = if q == 2 {
                if b.is_some() {
                    return Err(CliError::Usage("--b applies only to q > 2".into()));
                }
                census_binary(n, &limits)?
            } else {
                census_q(n, q, &limits)?
            };
            rows.retain(|r| a.map_or(true, |a| r.a == a) && b.map_or(true, |b| r.b == Some(b)));
            if json {
                return emit(json, String::new, &rows);
            }
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            Ok(Output::Text(
                String::from_utf8_lossy(&buf).trim_end().to_string(),
            ))
        }
        Command::Bounds { q, n } => {
            let rates = rate_bounds(n, q)?;
            let (lower, upper) = if q == 2 {
                let (lo, hi) = binary_size_bounds(n);
                (json!(lo), json!(hi))
            } else {
                let lower = qary_lower_bound(n, q).ok().map(|v| v.to_string());
                (json!(lower), json!(deletion_upper_bound(n, q)?.to_string()))
            };
            let value = json!({ "rates": rates, "size_lower": lower, "size_upper": upper });
            let text = || {
                let opt = |v: Option<f64>| v.map_or("n/a".to_string(), |x| format!("{x:.6}"));
                let show = |v: &Value| match v {
                    Value::String(s) => s.clone(),
                    Value::Null => "n/a".into(),
                    other => other.to_string(),
                };
                [
                    format!("n = {}", rates.n),
                    format!("q = {}", rates.q),
                    format!("t = {}", rates.t),
                    format!("k = {}", rates.k),
                    format!("r_encoder = {:.6}", rates.r_encoder),
                    format!("rmin_upper = {:.6}", rates.rmin_upper),
                    format!("rmax_upper = {:.6}", rates.rmax_upper),
                    format!("lower_bound_rate = {}", opt(rates.lower_bound_rate)),
                    format!("ternary_rate_lower = {}", opt(rates.ternary_rate_lower)),
                    format!("size_lower = {}", show(&lower)),
                    format!("size_upper = {}", show(&upper)),
                ]
                .join("\n")
            };
            emit(json, text, &value)
        }
        Command::Simulate {
            code,
            channel,
            trials,
            seed,
        } => {
            let kind: ChannelKind = channel
                .parse()
                .map_err(|e: VtError| CliError::Usage(e.to_string()))?;
            let sim = match code.encoder()? {
                Code::Binary(p) => SimCode::binary(p.n(), p.a())?,
                Code::Qary(c) => SimCode::qary(c.n(), c.q(), c.a(), c.b())?,
            };
            let report = run_trials(&sim, kind, trials, seed)?;
            let text = || {
                let mut lines = vec![format!(
                    "{}/{} trials succeeded, rate {:.6}, seed {}, {:.1} ms",
                    report.successes, report.trials, report.rate, report.seed, report.wall_time_ms
                )];
                for f in &report.failures {
                    let err = f.error.as_deref().unwrap_or("wrong codeword");
                    lines.push(format!(
                        "trial {} message {} event {}: {err}",
                        f.trial, f.message, f.event
                    ));
                }
                lines.join("\n")
            };
            emit(json, text, &report)
        }
        Command::Tables { q } => {
            let table = PairTable::new(q)?;
            let text = || {
                let mut lines = vec![format!("pairs ({}):", table.pairs.len())];
                lines.extend(
                    table
                        .pairs
                        .iter()
                        .enumerate()
                        .map(|(i, (r, l))| format!("{i} {r} {l}")),
                );
                lines.push(format!("c5: {}", format_symbols(&table.c5_values)));
                lines.join("\n")
            };
            emit(json, text, &table)
        }
        Command::ValidatePositions { n, positions } => {
            let parsed = parse_symbols(&positions.replace(',', " "))?;
            let parsed: Vec<usize> = parsed.into_iter().map(|p| p as usize).collect();
            let valid = validate_syndrome_positions(n, &parsed)?;
            emit(
                json,
                || valid.to_string(),
                &json!({ "n": n, "positions": parsed, "valid": valid }),
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            let text = match out {
                Output::Text(t) => t,
                Output::Json(v) => v.to_string(),
            };
            let mut stdout = io::stdout().lock();
            if writeln!(stdout, "{text}").is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (code, msg) = match &e {
                CliError::Usage(m) => (e.exit_code(), m.clone()),
                CliError::Codec(err) => (e.exit_code(), err.to_string()),
                CliError::Io(err) => (e.exit_code(), err.to_string()),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
