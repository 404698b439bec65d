//! Command-line front end.
//!
//! Every command renders its whole output into memory first; with `--out`
//! the bytes go to a temporary file that is renamed into place only on
//! success, so a failed run never leaves a partial file.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::asymptotics::{
    self, fmt_f64, linear_regression, log_peri_table, quotient_series, rational_fit,
    LN_GOLDEN_RATIO,
};
use crate::enumeration::{aux_bivariate, build_table, CACHE_ENV_VAR};
use crate::error::Error;
use crate::freewords::{
    count_reduced, count_reduced_rooted, format_word, is_reduced, is_reduced_triality,
    nodal_class, normalize_full, parse_full_word, EnumerationLimits, OpSymbol,
};

/// Exact mode refuses `n` above this unless `--allow-large-exact` is given.
pub const EXACT_CEILING: usize = 3000;

/// Published reference values the asymptotic commands compare against.
pub mod reference {
    pub const REGRESSION_SLOPE: f64 = 3.576;
    pub const REGRESSION_INTERCEPT: f64 = -1.102;
    pub const FIT_NUMERATOR: f64 = 0.01929;
    pub const FIT_POLE: f64 = 0.4811;
}

#[derive(Debug, Parser)]
#[command(name = "pcat", version, about = "Peri-Catalan numbers: exact values, oracles and asymptotics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Logspace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory for cached exact values.
    #[arg(long, env = CACHE_ENV_VAR)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one value P^s_n (exact) or ln P^s_n (logspace).
    Compute {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        #[arg(long)]
        allow_large_exact: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Table of P^s_n for several s.
    Table {
        #[arg(long, value_delimiter = ',', required = true)]
        s_list: Vec<u64>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        #[arg(long)]
        allow_large_exact: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compare brute-force counts with the formula.
    Oracle {
        #[arg(long)]
        s: u32,
        /// Check only this length.
        #[arg(long, conflicts_with = "n_max")]
        n: Option<usize>,
        /// Check every length 1..=n_max.
        #[arg(long)]
        n_max: Option<usize>,
        /// Rooted counts for a split `a,b` under each of the six operations.
        #[arg(long, value_delimiter = ',')]
        rooted: Option<Vec<usize>>,
        /// Largest number of candidate trees to enumerate.
        #[arg(long, default_value_t = EnumerationLimits::DEFAULT_BUDGET)]
        budget: u128,
        /// Largest word length to enumerate.
        #[arg(long, default_value_t = EnumerationLimits::DEFAULT_MAX_N)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Quotient series ln P / ln(3^{n-1} s^n C_n).
    Quotient {
        #[arg(long)]
        s: u64,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Linear regression of ln P^s_n - ln C_n on n.
    Regress {
        #[arg(long, default_value_t = 12)]
        s: u64,
        #[arg(long, default_value_t = 100)]
        n_min: usize,
        #[arg(long, default_value_t = 2800)]
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Fit the cancelation defect at the proxy n to a / (s - b).
    Fit {
        #[arg(long, default_value_t = 1)]
        s_min: u64,
        #[arg(long, default_value_t = 100)]
        s_max: u64,
        #[arg(long, default_value_t = asymptotics::DEFAULT_PROXY_N)]
        proxy_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Reducedness and nodal class of a single word.
    Word {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 26)]
        s: u32,
        /// Print the nodal class, one word per line.
        #[arg(long)]
        dump_class: bool,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
}

/// Result of a successful command.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: Vec<u8>,
    /// Notes for standard error.
    pub notes: Vec<String>,
    /// Nonzero when the command ran but found a mismatch.
    pub exit_code: i32,
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CacheIo { .. } | Error::CacheIntegrity { .. } => 3,
        Error::ResourceGuard(_) => 4,
        Error::Domain(_)
        | Error::Stability { .. }
        | Error::Syntax { .. }
        | Error::UnknownGenerator { .. } => 2,
    }
}

type CmdResult = crate::error::Result<Output>;

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Compute { common, .. }
            | Command::Table { common, .. }
            | Command::Oracle { common, .. }
            | Command::Quotient { common, .. }
            | Command::Regress { common, .. }
            | Command::Fit { common, .. }
            | Command::Word { common, .. } => common,
        }
    }
}

/// Runs a parsed command and, on success, writes its output.
pub fn run(cli: &Cli) -> CmdResult {
    let out = execute(&cli.command)?;
    if let Some(path) = &cli.command.common().out {
        write_atomic(path, &out.stdout)?;
        return Ok(Output {
            stdout: Vec::new(),
            ..out
        });
    }
    Ok(out)
}

fn write_atomic(path: &Path, bytes: &[u8]) -> crate::error::Result<()> {
    let io = |source| Error::CacheIo {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Runs a command, returning its output without writing it anywhere.
pub fn execute(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Compute {
            s,
            n,
            mode,
            allow_large_exact,
            common,
        } => compute(*s, *n, *mode, *allow_large_exact, common),
        Command::Table {
            s_list,
            n_max,
            mode,
            allow_large_exact,
            common,
        } => table(s_list, *n_max, *mode, *allow_large_exact, common),
        Command::Oracle {
            s,
            n,
            n_max,
            rooted,
            budget,
            max_n,
            common,
        } => {
            let limits = EnumerationLimits {
                max_n: *max_n,
                budget: *budget,
            };
            oracle(*s, *n, *n_max, rooted.as_deref(), &limits, common)
        }
        Command::Quotient {
            s,
            n_min,
            n_max,
            common,
        } => quotient(*s, *n_min, *n_max, common),
        Command::Regress {
            s,
            n_min,
            n_max,
            common,
        } => regress(*s, *n_min, *n_max, common),
        Command::Fit {
            s_min,
            s_max,
            proxy_n,
            common,
        } => fit(*s_min, *s_max, *proxy_n, common),
        Command::Word {
            word,
            s,
            dump_class,
            max_n,
            common,
        } => word_query(word, *s, *dump_class, *max_n, common),
    }
}

fn check_exact_ceiling(n: usize, allow: bool) -> crate::error::Result<()> {
    if n > EXACT_CEILING && !allow {
        return Err(Error::domain(format!(
            "exact mode above n = {EXACT_CEILING} needs --allow-large-exact (or use --mode logspace)"
        )));
    }
    Ok(())
}

/// Six significant digits for human-readable output.
fn fmt_text(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-5..6).contains(&exponent) {
        format!("{x:.*}", (5 - exponent) as usize)
    } else {
        format!("{x:.5e}")
    }
}

fn json_line<T: Serialize>(value: &T) -> Vec<u8> {
    let mut v = serde_json::to_vec_pretty(value).expect("serializable");
    v.push(b'\n');
    v
}

fn compute(s: u64, n: usize, mode: Mode, allow: bool, common: &Common) -> CmdResult {
    let format = common.format.unwrap_or(Format::Text);
    let mut out = Output::default();
    if s == 0 || n == 0 {
        out.notes.push(format!(
            "note: degenerate input s={s}, n={n}; P is 0 (no constants in the language of quasigroups)"
        ));
    }
    #[derive(Serialize)]
    struct Row {
        s: u64,
        n: usize,
        #[serde(skip_serializing_if = "Option::is_none", rename = "P")]
        p: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none", rename = "logP")]
        log_p: Option<f64>,
    }
    let (text, row) = match mode {
        Mode::Exact => {
            check_exact_ceiling(n, allow)?;
            let value = if s == 0 || n == 0 {
                BigUint::default()
            } else {
                build_table(s, n, common.cache_dir.as_deref())?.values()[n].clone()
            };
            let text = value.to_string();
            let row = Row {
                s,
                n,
                p: Some(text.clone()),
                log_p: None,
            };
            (text, row)
        }
        Mode::Logspace => {
            let value = if s == 0 || n == 0 {
                f64::NEG_INFINITY
            } else {
                log_peri_table(s, n.max(2))?.log_p(n).expect("in range")
            };
            let text = match format {
                Format::Text => fmt_text(value),
                _ => fmt_f64(value),
            };
            let row = Row {
                s,
                n,
                p: None,
                log_p: Some(value).filter(|v| v.is_finite()),
            };
            (text, row)
        }
    };
    out.stdout = match format {
        Format::Text => format!("{text}\n").into_bytes(),
        Format::Csv => match mode {
            Mode::Exact => format!("n,s,P\n{n},{s},{text}\n").into_bytes(),
            Mode::Logspace => format!("n,s,logP\n{n},{s},{text}\n").into_bytes(),
        },
        Format::Json => json_line(&row),
    };
    Ok(out)
}

fn table(s_list: &[u64], n_max: usize, mode: Mode, allow: bool, common: &Common) -> CmdResult {
    if n_max == 0 {
        return Err(Error::domain("--n-max must be >= 1"));
    }
    let format = common.format.unwrap_or(Format::Csv);
    let mut out = Output::default();
    // (n, s, exact or log value)
    let mut rows: Vec<(usize, u64, String)> = Vec::new();
    let mut json_rows = Vec::new();
    for &s in s_list {
        if s == 0 {
            out.notes.push(
                "note: s=0 is degenerate; every P is 0 (no constants in the language of quasigroups)"
                    .to_string(),
            );
        }
        match mode {
            Mode::Exact => {
                check_exact_ceiling(n_max, allow)?;
                let values = if s == 0 {
                    vec![BigUint::default(); n_max + 1]
                } else {
                    build_table(s, n_max, common.cache_dir.as_deref())?
                        .values()
                        .to_vec()
                };
                for (n, v) in values.iter().enumerate().skip(1) {
                    rows.push((n, s, v.to_string()));
                    json_rows.push(serde_json::json!({"n": n, "s": s, "P": v.to_string()}));
                }
            }
            Mode::Logspace => {
                let t = if s == 0 {
                    None
                } else {
                    Some(log_peri_table(s, n_max.max(2))?)
                };
                for n in 1..=n_max {
                    let v = t.as_ref().map_or(f64::NEG_INFINITY, |t| t.log_p(n).unwrap());
                    let text = if format == Format::Text { fmt_text(v) } else { fmt_f64(v) };
                    rows.push((n, s, text));
                    json_rows.push(serde_json::json!({"n": n, "s": s, "logP": v.is_finite().then_some(v)}));
                }
            }
        }
    }
    let value_name = if mode == Mode::Exact { "P" } else { "logP" };
    out.stdout = match format {
        Format::Csv => {
            let mut text = format!("n,s,{value_name}\n");
            for (n, s, v) in &rows {
                let _ = writeln!(text, "{n},{s},{v}");
            }
            text.into_bytes()
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.2.len()).max().unwrap_or(1).max(1);
            let mut text = format!("{:>6} {:>6} {:>width$}\n", "n", "s", value_name);
            for (n, s, v) in &rows {
                let _ = writeln!(text, "{n:>6} {s:>6} {v:>width$}");
            }
            text.into_bytes()
        }
        Format::Json => json_line(&json_rows),
    };
    Ok(out)
}

fn oracle(
    s: u32,
    n: Option<usize>,
    n_max: Option<usize>,
    rooted: Option<&[usize]>,
    limits: &EnumerationLimits,
    common: &Common,
) -> CmdResult {
    let format = common.format.unwrap_or(Format::Text);
    let mut out = Output::default();
    let mut text = String::new();
    let mut csv = String::new();
    let mut json = Vec::new();
    let mut mismatch = false;

    if let Some(split) = rooted {
        let &[a, b] = split else {
            return Err(Error::domain("--rooted takes exactly two sizes, e.g. 2,2"));
        };
        if let Some(n) = n {
            if n != a + b {
                return Err(Error::domain(format!(
                    "--n {n} disagrees with --rooted {a},{b}"
                )));
            }
        }
        let formula = aux_bivariate(s as u64, a as i64, b as i64)?;
        let _ = writeln!(text, "rooted counts s={s} a={a} b={b}, m^s(a,b) = {formula}");
        csv.push_str("op,group_element,count,formula,match\n");
        for op in OpSymbol::ALL {
            let count = count_reduced_rooted(s, a, b, op, limits)?;
            let ok = BigUint::from(count) == formula;
            mismatch |= !ok;
            let verdict = if ok { "match" } else { "MISMATCH" };
            let _ = writeln!(
                text,
                "  {:<3} ({:<3}) {count:>12} {verdict}",
                op.token(),
                op.group_name()
            );
            let _ = writeln!(csv, "{},{},{count},{formula},{ok}", op.token(), op.group_name());
            json.push(serde_json::json!({
                "op": op.token(), "group_element": op.group_name(),
                "count": count, "formula": formula.to_string(), "match": ok
            }));
        }
    } else {
        let lengths: Vec<usize> = match (n, n_max) {
            (Some(n), _) => vec![n],
            (None, Some(m)) => (1..=m).collect(),
            (None, None) => return Err(Error::domain("oracle needs --n, --n-max or --rooted")),
        };
        if lengths.contains(&0) || s == 0 {
            return Err(Error::domain("oracle needs s >= 1 and n >= 1"));
        }
        // refuse up front so no rows are computed for a doomed run
        for &len in &lengths {
            limits.check(s, len)?;
        }
        let top = *lengths.iter().max().expect("non-empty");
        let formula = build_table(s as u64, top, common.cache_dir.as_deref())?;
        let _ = writeln!(text, "{:>4} {:>4} {:>14} {:>14}  result", "s", "n", "oracle", "formula");
        csv.push_str("s,n,oracle,formula,match\n");
        for len in lengths {
            let count = count_reduced(s, len, limits)?;
            let f = &formula.values()[len];
            let ok = &BigUint::from(count) == f;
            mismatch |= !ok;
            let verdict = if ok { "match" } else { "MISMATCH" };
            let _ = writeln!(text, "{s:>4} {len:>4} {count:>14} {f:>14}  {verdict}");
            let _ = writeln!(csv, "{s},{len},{count},{f},{ok}");
            json.push(serde_json::json!({
                "s": s, "n": len, "oracle": count, "formula": f.to_string(), "match": ok
            }));
        }
    }
    out.stdout = match format {
        Format::Text => text.into_bytes(),
        Format::Csv => csv.into_bytes(),
        Format::Json => json_line(&json),
    };
    if mismatch {
        out.exit_code = 1;
        out.notes.push("oracle mismatch".to_string());
    }
    Ok(out)
}

fn quotient(s: u64, n_min: usize, n_max: usize, common: &Common) -> CmdResult {
    let format = common.format.unwrap_or(Format::Csv);
    if s == 0 {
        return Err(Error::domain("quotient needs s >= 1"));
    }
    if n_max < 2 {
        return Err(Error::domain("quotient needs --n-max >= 2"));
    }
    let table = log_peri_table(s, n_max)?;
    let rows = quotient_series(&table, n_min, n_max)?;
    let mut buf = Vec::new();
    match format {
        Format::Csv => asymptotics::write_quotient_csv(&mut buf, &rows),
        Format::Json => asymptotics::write_quotient_json(&mut buf, &rows).map(|_| buf.push(b'\n')),
        Format::Text => {
            let mut text = format!("{:>6} {:>12} {:>12} {:>10}\n", "n", "logP", "logBound", "quotient");
            for r in &rows {
                let _ = writeln!(
                    text,
                    "{:>6} {:>12} {:>12} {:>10}",
                    r.n,
                    fmt_text(r.log_p),
                    fmt_text(r.log_bound),
                    fmt_text(r.quotient)
                );
            }
            buf = text.into_bytes();
            Ok(())
        }
    }
    .expect("writing to memory");
    Ok(Output {
        stdout: buf,
        ..Output::default()
    })
}

fn regress(s: u64, n_min: usize, n_max: usize, common: &Common) -> CmdResult {
    let format = common.format.unwrap_or(Format::Text);
    if s == 0 || n_min < 1 || n_max < n_min.max(2) {
        return Err(Error::domain("regress needs s >= 1 and 1 <= n-min < n-max"));
    }
    let table = log_peri_table(s, n_max)?;
    let points: Vec<(f64, f64)> = (n_min..=n_max)
        .map(|n| (n as f64, table.log_p(n).unwrap() - table.log_catalan(n).unwrap()))
        .collect();
    let r = linear_regression(&points)?;
    let ln36 = 36f64.ln();
    let ln3 = 3f64.ln();
    let stdout = match format {
        Format::Text => {
            let mut t = String::new();
            let _ = writeln!(t, "fit of ln P^{s}_n - ln C_n over n in [{n_min}, {n_max}]");
            let _ = writeln!(t, "slope      {}", fmt_text(r.slope));
            let _ = writeln!(t, "intercept  {}", fmt_text(r.intercept));
            let _ = writeln!(t, "residual   {}", fmt_text(r.residual_std_error));
            let _ = writeln!(
                t,
                "reference  slope {} (diff {}), intercept {} (diff {})",
                reference::REGRESSION_SLOPE,
                fmt_text(r.slope - reference::REGRESSION_SLOPE),
                reference::REGRESSION_INTERCEPT,
                fmt_text(r.intercept - reference::REGRESSION_INTERCEPT)
            );
            let _ = writeln!(
                t,
                "ln 36 = {} (diff {}), -ln 3 = {} (diff {})",
                fmt_text(ln36),
                fmt_text(r.slope - ln36),
                fmt_text(-ln3),
                fmt_text(r.intercept + ln3)
            );
            t.into_bytes()
        }
        Format::Csv => format!(
            "s,n_min,n_max,slope,intercept,residual\n{s},{n_min},{n_max},{},{},{}\n",
            fmt_f64(r.slope),
            fmt_f64(r.intercept),
            fmt_f64(r.residual_std_error)
        )
        .into_bytes(),
        Format::Json => json_line(&serde_json::json!({
            "s": s, "n_min": n_min, "n_max": n_max,
            "slope": r.slope, "intercept": r.intercept, "residual": r.residual_std_error,
            "reference": {
                "slope": reference::REGRESSION_SLOPE,
                "intercept": reference::REGRESSION_INTERCEPT,
                "ln36": ln36, "minus_ln3": -ln3
            }
        })),
    };
    Ok(Output {
        stdout,
        ..Output::default()
    })
}

fn fit(s_min: u64, s_max: u64, proxy_n: usize, common: &Common) -> CmdResult {
    let format = common.format.unwrap_or(Format::Text);
    if s_min == 0 || s_max <= s_min || proxy_n < 2 {
        return Err(Error::domain("fit needs 1 <= s-min < s-max and proxy-n >= 2"));
    }
    let s_values: Vec<u64> = (s_min..=s_max).collect();
    let defects = asymptotics::defects_at(&s_values, proxy_n)?;
    let points: Vec<(f64, f64)> = defects.iter().map(|&(s, f)| (s as f64, f)).collect();
    let r = rational_fit(&points)?;
    let rows = asymptotics::defect_series(&defects);
    let mut buf = Vec::new();
    match format {
        Format::Csv => asymptotics::write_defect_csv(&mut buf, &rows).expect("memory"),
        Format::Json => {
            buf = json_line(&serde_json::json!({
                "proxy_n": proxy_n,
                "defects": rows,
                "fit": r,
                "reference": {
                    "a": reference::FIT_NUMERATOR,
                    "b": reference::FIT_POLE,
                    "ln_golden_ratio": LN_GOLDEN_RATIO
                }
            }))
        }
        Format::Text => {
            let mut t = String::new();
            let _ = writeln!(t, "defect at n = {proxy_n}, s in [{s_min}, {s_max}] fitted to a / (s - b)");
            let _ = writeln!(t, "a          {}", fmt_text(r.a));
            let _ = writeln!(t, "b          {}", fmt_text(r.b));
            let _ = writeln!(t, "residual   {}", fmt_text(r.residual));
            let _ = writeln!(
                t,
                "reference  a {} (rel diff {}), b {} (rel diff {})",
                reference::FIT_NUMERATOR,
                fmt_text(r.a / reference::FIT_NUMERATOR - 1.0),
                reference::FIT_POLE,
                fmt_text(r.b / reference::FIT_POLE - 1.0)
            );
            let _ = writeln!(
                t,
                "ln((1+sqrt 5)/2) = {} (b - it = {})",
                fmt_text(LN_GOLDEN_RATIO),
                fmt_text(r.b - LN_GOLDEN_RATIO)
            );
            buf = t.into_bytes();
        }
    }
    Ok(Output {
        stdout: buf,
        ..Output::default()
    })
}

fn word_query(text: &str, s: u32, dump_class: bool, max_n: usize, common: &Common) -> CmdResult {
    let format = common.format.unwrap_or(Format::Text);
    let full = parse_full_word(text, s)?;
    let basic = normalize_full(&full);
    let reduced = is_reduced(&basic);
    let triality = is_reduced_triality(&full);
    let limits = EnumerationLimits {
        max_n,
        ..EnumerationLimits::default()
    };
    let class = if dump_class {
        Some(nodal_class(&basic, &limits)?)
    } else {
        None
    };
    let mut out = Output::default();
    if reduced != triality {
        out.exit_code = 1;
        out.notes.push("predicate disagreement".to_string());
    }
    out.stdout = match format {
        Format::Json => json_line(&serde_json::json!({
            "word": format_word(&full),
            "basic": format_word(&basic),
            "length": basic.leaf_count(),
            "reduced": reduced,
            "reduced_triality": triality,
            "class": class.as_ref().map(|c| c.iter().map(format_word).collect::<Vec<_>>()),
        })),
        _ if dump_class => {
            let mut t = String::new();
            for w in class.as_ref().expect("requested") {
                let _ = writeln!(t, "{}", format_word(w));
            }
            t.into_bytes()
        }
        Format::Csv => format!(
            "word,basic,length,reduced\n{},{},{},{reduced}\n",
            format_word(&full),
            format_word(&basic),
            basic.leaf_count()
        )
        .into_bytes(),
        Format::Text => format!(
            "word     {}\nbasic    {}\nlength   {}\nreduced  {reduced}\n",
            format_word(&full),
            format_word(&basic),
            basic.leaf_count()
        )
        .into_bytes(),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CmdResult {
        let cli = Cli::try_parse_from(std::iter::once("pcat").chain(args.iter().copied()))
            .expect("valid arguments");
        execute(&cli.command)
    }

    fn stdout(args: &[&str]) -> String {
        String::from_utf8(run_args(args).unwrap().stdout).unwrap()
    }

    #[test]
    fn text_rounding() {
        assert_eq!(fmt_text(1752f64.ln()), "7.46851");
        assert_eq!(fmt_text(0.00123456789), "0.00123457");
        assert_eq!(fmt_text(3.5765256), "3.57653");
        assert_eq!(fmt_text(1e-9), "1.00000e-9");
    }

    #[test]
    fn compute_values() {
        assert_eq!(stdout(&["compute", "--s", "2", "--n", "10"]), "61689134928\n");
        assert_eq!(stdout(&["compute", "--s", "1", "--n", "1"]), "1\n");
        assert!(stdout(&["compute", "--s", "2", "--n", "4", "--mode", "logspace"]).starts_with("7.4685"));
        let out = run_args(&["compute", "--s", "0", "--n", "3"]).unwrap();
        assert_eq!(out.stdout, b"0\n");
        assert_eq!(out.notes.len(), 1);
    }

    #[test]
    fn exact_ceiling() {
        let err = run_args(&["compute", "--s", "1", "--n", "3001"]).unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }

    #[test]
    fn table_rows() {
        assert_eq!(
            stdout(&["table", "--s-list", "4", "--n-max", "2"]),
            "n,s,P\n1,4,4\n2,4,48\n"
        );
        let out = run_args(&["table", "--s-list", "0", "--n-max", "3"]).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,s,P\n1,0,0\n2,0,0\n3,0,0\n");
        assert!(!out.notes.is_empty());
    }

    #[test]
    fn oracle_guard() {
        let err = run_args(&["oracle", "--s", "3", "--n", "9"]).unwrap_err();
        assert_eq!(exit_code(&err), 4);
    }

    #[test]
    fn rooted_oracle() {
        let out = stdout(&["oracle", "--s", "2", "--n", "4", "--rooted", "2,2"]);
        assert!(out.contains("m^s(a,b) = 144"), "{out}");
        assert_eq!(out.matches(" 144 match").count(), 6, "{out}");
        let err = run_args(&["oracle", "--s", "2", "--rooted", "2,2,1"]).unwrap_err();
        assert_eq!(exit_code(&err), 2);
        let err = run_args(&["oracle", "--s", "2", "--n", "5", "--rooted", "2,2"]).unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }

    #[test]
    fn word_queries() {
        assert!(stdout(&["word", "--word", "(a*(a\\b))"]).contains("reduced  false"));
        assert_eq!(
            stdout(&["word", "--word", "((a*b)/c)", "--dump-class"]),
            "((a*b)/c)\n((b@a)/c)\n(c//(a*b))\n(c//(b@a))\n"
        );
        let err = run_args(&["word", "--word", "(a*b"]).unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }
}
