//! Command surface of the `dyadic` binary: `dim`, `graph`, `classify`,
//! `matrix` and `verify`.
//!
//! [`run`] takes the argument list and two sinks and returns the exit
//! status, so the whole surface can be driven in-process.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad input,
//! 3 a computation hit a resource or convergence limit, 4 an I/O failure.

pub mod checks;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::calculus::{
    f_power_of_one, is_minimal_word, is_shift_bounded, level_of, minimal_prefix, p_reduce,
    LevelClass, DEFAULT_SEARCH_LIMIT,
};
use crate::dimension::{
    phi_with, plateaus_with, DimensionResult, Plateau, Settings, SpectralCache,
};
use crate::error::Error;
use crate::sft::{build_sft_with, DEFAULT_MAX_WINDOW};
use crate::word::{Seq, Word};

/// Environment variable overriding the default window cap.
pub const MAX_WINDOW_ENV: &str = "DYADIC_MAX_WINDOW";

pub const CSV_HEADER: &str = "left_num,left_den,right_num,right_den,dim,level,representative";

#[derive(Parser, Debug)]
#[command(name = "dyadic", version, about = "Hausdorff dimension of dyadically badly approximable sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Width of dimension enclosures.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Longest level-1 representative in the plateau enumeration.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_len: usize,
    /// Deepest level the enumeration maps plateaus to.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_level: u32,
    /// Longest window word turned into a transition system
    /// [default: $DYADIC_MAX_WINDOW or 24].
    #[arg(long, global = true)]
    pub max_window: Option<usize>,
    /// Worker threads for the enumeration [default: logical CPUs].
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Spectral cache file, read before and written after the run.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Report how many spectral radii were computed.
    #[arg(long, global = true)]
    pub stats: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, level and plateau of a point given as `001`, `000(110)` or `3/28`.
    Dim { input: String },
    /// Plateau table as CSV.
    Graph {
        /// CSV destination (stdout if absent).
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Also draw the step function as SVG.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Shift-boundedness, level, minimal prefix and p-chain of a word.
    Classify { input: String },
    /// Transition system of a word as JSON.
    Matrix {
        input: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run the numbered acceptance checks.
    Verify {
        /// A single check, by name or number.
        #[arg(long, value_name = "NAME")]
        only: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub tolerance: f64,
    pub max_window: usize,
    pub max_len: usize,
    pub max_level: u32,
    pub workers: usize,
    pub cache_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tolerance: 1e-9,
            max_window: env_max_window().unwrap_or(DEFAULT_MAX_WINDOW),
            max_len: 8,
            max_level: 3,
            workers: default_workers(),
            cache_path: None,
        }
    }
}

fn env_max_window() -> Option<usize> {
    std::env::var(MAX_WINDOW_ENV).ok()?.trim().parse().ok()
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<RunConfig, String> {
        let config = RunConfig {
            tolerance: cli.tol,
            max_window: cli.max_window.or_else(env_max_window).unwrap_or(DEFAULT_MAX_WINDOW),
            max_len: cli.max_len,
            max_level: cli.max_level,
            workers: cli.workers.unwrap_or_else(default_workers),
            cache_path: cli.cache.clone(),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(format!("--tol must be positive, got {}", self.tolerance));
        }
        if self.max_window == 0 || self.max_len == 0 || self.max_level == 0 || self.workers == 0 {
            return Err("--max-window, --max-len, --max-level and --workers must be positive".into());
        }
        Ok(())
    }

    pub fn settings(&self, cache: Arc<SpectralCache>) -> Settings {
        Settings {
            tol: self.tolerance,
            max_window: self.max_window,
            cache: Some(cache),
            ..Settings::default()
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Decode(_) | Error::Parse(_) => 2,
        Error::Resource(_) | Error::Convergence { .. } | Error::Consistency(_) => 3,
    }
}

fn report_error(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    if let Error::Convergence { lower, upper, .. } = e {
        let _ = writeln!(err, "best enclosure: [{lower:.12}, {upper:.12}]");
    }
    exit_code(e)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let config = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let cache = Arc::new(match &config.cache_path {
        Some(path) => SpectralCache::load(path),
        None => SpectralCache::new(),
    });
    let settings = config.settings(cache.clone());

    let code = match &cli.command {
        Command::Dim { input } => cmd_dim(input, &settings, cli.json, out, err),
        Command::Graph { out: path, svg } => {
            cmd_graph(&config, &settings, path.as_deref(), svg.as_deref(), out, err)
        }
        Command::Classify { input } => cmd_classify(input, cli.json, out, err),
        Command::Matrix { input, out: path } => {
            cmd_matrix(input, config.max_window, path.as_deref(), out, err)
        }
        Command::Verify { only } => cmd_verify(only.as_deref(), &settings, out, err),
    };

    if cli.stats {
        let _ = writeln!(
            err,
            "spectral computations: {} (cache hits: {})",
            cache.computed(),
            cache.hits()
        );
    }
    if let Some(path) = &config.cache_path {
        if let Err(e) = cache.save(path) {
            let _ = writeln!(err, "error: writing cache {}: {e}", path.display());
            return if code == 0 { 4 } else { code };
        }
    }
    code
}

/// Ten significant digits.
pub fn format_dim(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let decimals = (9 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

fn cmd_dim(input: &str, settings: &Settings, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let c: Seq = match input.parse() {
        Ok(c) => c,
        Err(e) => return report_error(err, &e),
    };
    let r = match phi_with(&c, settings) {
        Ok(r) => r,
        Err(e) => return report_error(err, &e),
    };
    let text = if json { dim_json(&c, &r) } else { dim_text(&c, &r) };
    let _ = write!(out, "{text}");
    0
}

fn plateau_json(p: &Plateau) -> serde_json::Value {
    json!({
        "left": p.left.to_string(),
        "right": p.right.to_string(),
        "left_decimal": p.left.to_f64(),
        "right_decimal": p.right.to_f64(),
        "left_word": p.left_word.to_string(),
        "right_word": p.right_word.to_string(),
        "dim": p.dim,
        "level": p.level,
        "representative": p.representative.to_string(),
    })
}

fn dim_json(c: &Seq, r: &DimensionResult) -> String {
    let value = json!({
        "input": c.to_string(),
        "level": r.level.to_string(),
        "representative": r.representative.as_ref().map(Word::to_string),
        "reduced_e1": r.reduced_e1.as_ref().map(Word::to_string),
        "dim": r.dim(),
        "dim_lower": r.dim_lower,
        "dim_upper": r.dim_upper,
        "empty": r.empty,
        "plateau": r.plateau.as_ref().map(plateau_json),
    });
    serde_json::to_string_pretty(&value).expect("plain data") + "\n"
}

fn dim_text(c: &Seq, r: &DimensionResult) -> String {
    let mut s = String::new();
    let word = |w: &Option<Word>| w.as_ref().map_or("-".to_string(), Word::to_string);
    let _ = writeln!(s, "input           {c}");
    let _ = writeln!(s, "level           {}", r.level);
    let _ = writeln!(s, "representative  {}", word(&r.representative));
    let _ = writeln!(s, "reduced         {}", word(&r.reduced_e1));
    let _ = writeln!(
        s,
        "dimension       {} in [{:.12}, {:.12}]",
        format_dim(r.dim()),
        r.dim_lower,
        r.dim_upper
    );
    match &r.plateau {
        Some(p) => {
            let _ = writeln!(
                s,
                "plateau         [{}, {}] = [{:.12}, {:.12}]",
                p.left,
                p.right,
                p.left.to_f64(),
                p.right.to_f64()
            );
            let _ = writeln!(s, "endpoints       {} .. {}", p.left_word, p.right_word);
        }
        None if r.empty => {
            let _ = writeln!(s, "plateau         - (value at least 1/2, the set is empty)");
        }
        None => {
            let _ = writeln!(s, "plateau         -");
        }
    }
    s
}

/// The plateau table for the enumeration, computed on `workers` threads.
pub fn graph_csv(max_len: usize, max_level: u32, workers: usize, settings: &Settings) -> crate::Result<String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Resource(format!("worker pool: {e}")))?;
    let list = pool.install(|| plateaus_with(max_len, max_level, settings))?;
    Ok(render_csv(&list))
}

pub fn render_csv(list: &[Plateau]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for p in list {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            p.left.numer(),
            p.left.denom(),
            p.right.numer(),
            p.right.denom(),
            format_dim(p.dim),
            p.level,
            p.representative
        );
    }
    s
}

/// Step plot of a plateau CSV: one horizontal segment per row and the zero
/// ray past the last positive plateau.
pub fn render_svg(csv: &str) -> String {
    const W: f64 = 800.0;
    const H: f64 = 500.0;
    const PAD: f64 = 50.0;
    const X_MAX: f64 = 0.25;
    let x = |c: f64| PAD + c / X_MAX * (W - 2.0 * PAD);
    let y = |d: f64| H - PAD - d * (H - 2.0 * PAD);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{:.2} {:.2} H{:.2} M{:.2} {:.2} V{:.2}" stroke="black" fill="none"/>"#,
        x(0.0),
        y(0.0),
        x(X_MAX),
        x(0.0),
        y(0.0),
        y(1.0)
    );
    for tick in [0.05, 0.1, 0.15, 0.2, 0.25] {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle">{tick}</text>"#,
            x(tick),
            y(0.0) + 18.0
        );
    }
    for tick in [0.5, 1.0] {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="end">{tick}</text>"#,
            x(0.0) - 6.0,
            y(tick) + 4.0
        );
    }
    let mut zero_from = 0.0f64;
    for line in csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() < 5 {
            continue;
        }
        let ratio = |n: &str, d: &str| n.parse::<f64>().unwrap_or(0.0) / d.parse::<f64>().unwrap_or(1.0);
        let (left, right) = (ratio(f[0], f[1]), ratio(f[2], f[3]));
        let dim: f64 = f[4].parse().unwrap_or(0.0);
        if dim > 0.0 {
            zero_from = zero_from.max(right);
        }
        let _ = writeln!(
            s,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="steelblue" stroke-width="1.5"/>"#,
            x(left),
            y(dim),
            x(right.min(X_MAX)),
            y(dim)
        );
    }
    let _ = writeln!(
        s,
        r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="steelblue" stroke-width="1.5"/>"#,
        x(zero_from),
        y(0.0),
        x(X_MAX),
        y(0.0)
    );
    s.push_str("</svg>\n");
    s
}

fn write_file(path: &Path, text: &str, err: &mut dyn Write) -> i32 {
    match std::fs::write(path, text) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: writing {}: {e}", path.display());
            4
        }
    }
}

fn cmd_graph(
    config: &RunConfig,
    settings: &Settings,
    path: Option<&Path>,
    svg: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let csv = match graph_csv(config.max_len, config.max_level, config.workers, settings) {
        Ok(csv) => csv,
        Err(e) => return report_error(err, &e),
    };
    let code = match path {
        Some(p) => write_file(p, &csv, err),
        None => match out.write_all(csv.as_bytes()) {
            Ok(()) => 0,
            Err(_) => 4,
        },
    };
    if code != 0 {
        return code;
    }
    match svg {
        Some(p) => write_file(p, &render_svg(&csv), err),
        None => 0,
    }
}

fn cmd_classify(input: &str, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let s: Word = match input.parse() {
        Ok(s) => s,
        Err(e) => return report_error(err, &e),
    };
    if !s.contains_one() {
        let _ = writeln!(err, "error: {input} is not a valid c (it contains no 1)");
        return 2;
    }
    match classify(&s) {
        Ok(c) => {
            let text = if json { c.json() } else { c.text() };
            let _ = write!(out, "{text}");
            0
        }
        Err(e) => report_error(err, &e),
    }
}

/// The facts `dyadic classify` reports about a word.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub word: Word,
    pub shift_bounded: bool,
    pub level: LevelClass,
    pub m: Option<usize>,
    pub prefix: Option<Word>,
    pub minimal: bool,
    /// `prefix, p(prefix), …, f^i(1)`.
    pub chain: Vec<Word>,
}

pub fn classify(s: &Word) -> crate::Result<Classification> {
    let c = Seq::Finite(s.clone());
    let shift_bounded = is_shift_bounded(s)?;
    let level = level_of(&c)?;
    let (m, prefix, chain) = match level {
        LevelClass::AboveAll => (None, None, Vec::new()),
        LevelClass::Level(i) => {
            let report = minimal_prefix(&c, DEFAULT_SEARCH_LIMIT)?;
            let target = f_power_of_one(i as usize);
            let mut chain = Vec::new();
            if let Some(r) = &report.prefix {
                chain.push(r.clone());
                while chain.last().is_some_and(|x| x.len() > target.len()) {
                    let next = p_reduce(chain.last().expect("non-empty"))?;
                    chain.push(next);
                }
            }
            (report.m, report.prefix, chain)
        }
    };
    Ok(Classification {
        word: s.clone(),
        shift_bounded,
        level,
        m,
        prefix,
        minimal: is_minimal_word(s),
        chain,
    })
}

impl Classification {
    fn chain_text(&self) -> String {
        if self.chain.is_empty() {
            return "-".into();
        }
        self.chain.iter().map(Word::to_string).collect::<Vec<_>>().join(" -> ")
    }

    pub fn text(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        let _ = writeln!(s, "word           {}", self.word);
        let _ = writeln!(s, "shift-bounded  {}", yes(self.shift_bounded));
        let _ = writeln!(s, "level          {}", self.level);
        let _ = writeln!(s, "m              {}", self.m.map_or("-".into(), |m| m.to_string()));
        let _ = writeln!(s, "minimal        {}", yes(self.minimal));
        let _ = writeln!(
            s,
            "prefix         {}",
            self.prefix.as_ref().map_or("-".into(), Word::to_string)
        );
        let _ = writeln!(s, "chain          {}", self.chain_text());
        s
    }

    pub fn json(&self) -> String {
        let value = json!({
            "word": self.word.to_string(),
            "shift_bounded": self.shift_bounded,
            "level": self.level.to_string(),
            "m": self.m,
            "minimal": self.minimal,
            "prefix": self.prefix.as_ref().map(Word::to_string),
            "chain": self.chain.iter().map(Word::to_string).collect::<Vec<_>>(),
        });
        serde_json::to_string_pretty(&value).expect("plain data") + "\n"
    }
}

fn cmd_matrix(input: &str, max_window: usize, path: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let c: Word = match input.parse() {
        Ok(c) => c,
        Err(e) => return report_error(err, &e),
    };
    let ts = match build_sft_with(&c, max_window) {
        Ok(ts) => ts,
        Err(e) => return report_error(err, &e),
    };
    let text = ts.export_json() + "\n";
    match path {
        Some(p) => write_file(p, &text, err),
        None => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(_) => 4,
        },
    }
}

fn cmd_verify(only: Option<&str>, settings: &Settings, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let reports = match only {
        Some(key) => match checks::run_one(key, settings) {
            Some(r) => vec![r],
            None => {
                let names: Vec<_> = checks::names().collect();
                let _ = writeln!(err, "error: unknown check {key:?}; known: {}", names.join(", "));
                return 2;
            }
        },
        None => checks::run_all(settings),
    };
    for r in &reports {
        let _ = writeln!(out, "{}", r.line());
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} passed, {failed} failed", reports.len() - failed);
    i32::from(failed > 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["dyadic"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_dim(0.694_241_913_630_617_3), "0.6942419136");
        assert_eq!(format_dim(0.086_780_239_203_827), "0.08678023920");
        assert_eq!(format_dim(0.0), "0");
    }

    #[test]
    fn dim_command() {
        let (code, out, _) = call(&["dim", "001"]);
        assert_eq!(code, 0);
        assert!(out.contains("0.6942419136") && out.contains("[3/28, 1/7]"), "{out}");
        let (code, out, _) = call(&["dim", "3/28"]);
        assert_eq!(code, 0);
        assert!(out.contains("[3/28, 1/7]"));
        let (code, out, _) = call(&["dim", "1/4", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dim"], 0.0);
        assert_eq!(call(&["dim", "0.25"]).0, 2);
    }

    #[test]
    fn small_graph() {
        let (code, out, _) = call(&["graph", "--max-len", "3", "--max-level", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, format!("{CSV_HEADER}\n3,28,1,7,0.6942419136,1,001\n"));
    }

    #[test]
    fn classify_command() {
        let (code, out, _) = call(&["classify", "000111"]);
        assert_eq!(code, 0);
        assert!(out.contains("shift-bounded  yes"));
        assert!(out.contains("m              3"));
        assert!(out.contains("prefix         001"));
        assert!(out.contains("chain          001 -> 01"));
        let (_, out, _) = call(&["classify", "001011"]);
        assert!(out.contains("level          2") && out.contains("minimal        yes"));
        assert!(out.contains("chain          001011 -> 0011"), "{out}");
        assert_eq!(call(&["classify", "0"]).0, 2);
    }

    #[test]
    fn matrix_command() {
        let (code, out, _) = call(&["matrix", "001"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["states"].as_array().unwrap().len(), 6);
        assert_eq!(v["edges"].as_array().unwrap().len(), 10);
        assert_eq!(call(&["matrix", "0000000000000000000000001"]).0, 3);
        assert_eq!(call(&["matrix", "10"]).0, 2);
    }

    #[test]
    fn verify_filter() {
        let (code, out, _) = call(&["verify", "--only", "two-point"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("[PASS]"));
        assert_eq!(call(&["verify", "--only", "nope"]).0, 2);
        assert_eq!(call(&["verify", "--only", "golden", "--tol", "0.01"]).0, 1);
    }

    #[test]
    fn config_validation() {
        assert_eq!(call(&["dim", "001", "--tol", "-1"]).0, 2);
        assert_eq!(call(&["graph", "--max-len", "0"]).0, 2);
        assert_eq!(call(&["graph", "--max-len", "9", "--max-window", "8"]).0, 3);
    }
}
