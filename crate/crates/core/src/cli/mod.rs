//! Command-line front end. [`run`] is the whole program minus process exit.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 internal
//! guard failure.

mod spec;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{ads_json, ads_of_sequence, report_json};
use crate::constructions::{
    construct_v, construct_w, default_primitive_poly, gmw, legendre, mseq, twin_prime, GmwParams, LegendreParams,
    LegendreVariant, TwinPrimeParams, WParams,
};
use crate::correlation::{auto_spectrum, cross_spectrum, fast_auto_spectrum_checked, CorrelationSpectrum};
use crate::error::{Error, Result};
use crate::search::{configured_max_period, exhaustive_search, SearchSpec, SearchTarget, DEFAULT_MAX_PERIOD};
use crate::seq::{interleave4_masked, BinarySequence, InterleaveMask};
use crate::verify::{
    verify_lemma3, verify_lemma4, verify_lemma5, verify_lemma6, verify_lemma7, verify_theorem1, verify_theorem2,
    verify_theorem3, verify_theorem7, verify_theorem_instance, verify_wlist, InputOrder, Lemma3Family, SeriesFamily,
    VerificationReport,
};

pub use spec::{parse_key_values, resolve, split_top_level, SequenceSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "optseq", version, about = "Binary sequences with low periodic autocorrelation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a sequence and print it as a 0/1 line.
    #[command(subcommand)]
    Gen(Gen),
    /// Correlation spectra.
    #[command(subcommand)]
    Corr(Corr),
    /// Classify an autocorrelation spectrum (JSON report).
    Classify { spec: String },
    /// Difference function of the support (JSON).
    Ads { spec: String },
    /// Check a closed-form spectrum against brute force (JSON report).
    Verify(VerifyArgs),
    /// Exhaustive search for a target off-phase value set.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    First,
    Second,
}

#[derive(Debug, Subcommand)]
enum Gen {
    Legendre {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "first")]
        variant: VariantArg,
    },
    Mseq {
        #[arg(long)]
        degree: u32,
        /// Hex bitmask, bit i is the coefficient of x^i.
        #[arg(long)]
        poly: Option<String>,
    },
    Gmw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        modified: bool,
    },
    Twinprime {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        modified: bool,
    },
    V {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    W {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        eta: i64,
    },
    Interleave4 {
        /// Four SPECs separated by commas.
        #[arg(long)]
        cols: String,
        #[arg(long, default_value = "0000")]
        mask: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Corr {
    Auto {
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Transform-based evaluation with a rounding guard.
        #[arg(long)]
        fast: bool,
    },
    Cross {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    target: String,
    /// Comma-separated key=value pairs.
    #[arg(long, default_value = "")]
    params: String,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    period: usize,
    /// perfect, optimal or values=<csv>.
    #[arg(long, allow_hyphen_values = true)]
    target: String,
    #[arg(long)]
    canonical: bool,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Override the period cap (also OPTSEQ_MAX_N).
    #[arg(long)]
    max_n: Option<usize>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Guard(_) => EXIT_GUARD,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Guard(format!("output: {e}"))
}

fn poly_arg(poly: Option<String>) -> Result<Option<u64>> {
    poly.as_deref().map(spec::parse_hex).transpose()
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen(g) => {
            let s = generate(g)?;
            writeln!(out, "{s}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Corr(Corr::Auto { spec, format, fast }) => {
            let a = resolve(&spec)?;
            let spectrum = if fast {
                let (spectrum, outcome) = fast_auto_spectrum_checked(&a);
                if outcome.is_fallback() {
                    writeln!(err, "warning: transform guard tripped ({outcome:?}); used direct evaluation").map_err(io)?;
                }
                spectrum
            } else {
                auto_spectrum(&a)
            };
            emit_spectrum(&spectrum, format, out)
        }
        Command::Corr(Corr::Cross { a, b, format }) => {
            let spectrum = cross_spectrum(&resolve(&a)?, &resolve(&b)?)?;
            emit_spectrum(&spectrum, format, out)
        }
        Command::Classify { spec } => {
            emit_json(&report_json(&resolve(&spec)?), out)
        }
        Command::Ads { spec } => {
            let report = ads_of_sequence(&resolve(&spec)?);
            emit_json(&ads_json(&report), out)
        }
        Command::Verify(args) => {
            let report = run_verify(&args.target, &parse_key_values(&args.params)?)?;
            emit_json(&report.to_json(), out)?;
            Ok(if report.verified() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Search(args) => {
            let target: SearchTarget = args.target.parse()?;
            let cap = args.max_n.unwrap_or_else(configured_max_period);
            if cap > DEFAULT_MAX_PERIOD && args.period > DEFAULT_MAX_PERIOD {
                writeln!(err, "warning: period {} is above the default cap {DEFAULT_MAX_PERIOD}; this may take very long", args.period)
                    .map_err(io)?;
            }
            let spec = SearchSpec::new(args.period, target)
                .canonical(args.canonical)
                .jobs(args.jobs)
                .max_period(cap);
            let outcome = exhaustive_search(&spec)?;
            for s in &outcome.sequences {
                writeln!(out, "{s}").map_err(io)?;
            }
            writeln!(out, "{}", outcome.summary.to_json()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn generate(g: Gen) -> Result<BinarySequence> {
    match g {
        Gen::Legendre { p, variant } => {
            let variant = match variant {
                VariantArg::First => LegendreVariant::First,
                VariantArg::Second => LegendreVariant::Second,
            };
            legendre(LegendreParams::new(p, variant))
        }
        Gen::Mseq { degree, poly } => {
            let poly = match poly_arg(poly)? {
                Some(p) => p,
                None => default_primitive_poly(degree).ok_or(Error::UnsupportedDegree(degree))?,
            };
            mseq(degree, poly)
        }
        Gen::Gmw { n, poly, modified } => {
            let mut params = GmwParams::new(n).modified(modified);
            if let Some(p) = poly_arg(poly)? {
                params = params.with_poly(p);
            }
            gmw(params)
        }
        Gen::Twinprime { p, modified } => twin_prime(TwinPrimeParams::new(p).modified(modified)),
        Gen::V { a, b } => construct_v(&resolve(&a)?, &resolve(&b)?),
        Gen::W { a, b, eta } => construct_w(&resolve(&a)?, &resolve(&b)?, WParams::new(eta)),
        Gen::Interleave4 { cols, mask } => {
            let cols = split_top_level(&cols)?
                .into_iter()
                .map(resolve)
                .collect::<Result<Vec<_>>>()?;
            let cols: [BinarySequence; 4] = cols
                .try_into()
                .map_err(|c: Vec<_>| Error::MaskLength { mask: 4, columns: c.len() })?;
            let mask: InterleaveMask = mask.parse()?;
            interleave4_masked(&cols, &mask)
        }
    }
}

fn emit_spectrum(spectrum: &CorrelationSpectrum, format: Format, out: &mut dyn Write) -> Result<i32> {
    match format {
        Format::Text => out.write_all(spectrum.to_text().as_bytes()).map_err(io)?,
        Format::Csv => out.write_all(spectrum.to_csv().as_bytes()).map_err(io)?,
        Format::Json => return emit_json(&spectrum.to_json(), out),
    }
    Ok(EXIT_OK)
}

fn emit_json(value: &serde_json::Value, out: &mut dyn Write) -> Result<i32> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Guard(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)?;
    Ok(EXIT_OK)
}

struct Params<'a>(&'a std::collections::BTreeMap<String, String>);

impl Params<'_> {
    fn get<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        let raw = self
            .0
            .get(key)
            .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {key:?}")))?;
        raw.parse()
            .map_err(|_| Error::InvalidParameter(format!("bad value {raw:?} for {key:?}")))
    }

    fn get_or<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T> {
        if self.0.contains_key(key) {
            self.get(key)
        } else {
            Ok(default)
        }
    }

    fn seq(&self, key: &str) -> Result<BinarySequence> {
        resolve(self.0.get(key).ok_or_else(|| Error::InvalidParameter(format!("missing parameter {key:?}")))?)
    }

    fn order(&self) -> Result<InputOrder> {
        self.0.get("order").map_or(Ok(InputOrder::Forward), |o| o.parse())
    }

    /// `family=gmw,n=..`, `family=legendre,p=..` or `family=twinprime,p=..`;
    /// `default` names the family when the key is absent.
    fn series(&self, default: &str) -> Result<SeriesFamily> {
        let family = self.0.get("family").map_or(default, String::as_str);
        match family {
            "gmw" => Ok(SeriesFamily::Gmw { n: self.get("n")? }),
            "legendre" => Ok(SeriesFamily::Legendre { p: self.get("p")? }),
            "twinprime" => Ok(SeriesFamily::TwinPrime { p: self.get("p")? }),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

fn run_verify(target: &str, raw: &std::collections::BTreeMap<String, String>) -> Result<VerificationReport> {
    let p = Params(raw);
    match target {
        "lemma3" => match p.series("gmw")? {
            SeriesFamily::Gmw { n } => verify_lemma3(Lemma3Family::Gmw { n }),
            SeriesFamily::TwinPrime { p } => verify_lemma3(Lemma3Family::TwinPrime { p }),
            SeriesFamily::Legendre { .. } => Err(Error::InvalidParameter("lemma3 takes gmw or twinprime".into())),
        },
        "lemma4" => verify_lemma4(p.get("n")?),
        "lemma5" => verify_lemma5(p.get("p")?),
        "lemma6" => verify_lemma6(p.get("p")?),
        "lemma7" => verify_lemma7(p.get("p")?),
        "thm1" => verify_theorem1(&p.seq("a")?, &p.seq("b")?),
        "thm2" => verify_theorem2(&p.seq("a")?, &p.seq("b")?),
        "thm3" => verify_theorem3(&p.seq("a")?, &p.seq("b")?),
        "thm4" | "thm5" | "thm6" => {
            let family = match target {
                "thm4" => SeriesFamily::Gmw { n: p.get("n")? },
                "thm5" => SeriesFamily::Legendre { p: p.get("p")? },
                _ => SeriesFamily::TwinPrime { p: p.get("p")? },
            };
            verify_theorem_instance(family, p.get_or("eta1", 0)?, p.get_or("eta2", 0)?, p.order()?)
        }
        "thm7" => verify_theorem7(&p.seq("a")?, &p.seq("b")?, p.get_or("eta", 0)?),
        "wlists" => verify_wlist(p.series("gmw")?, p.order()?, p.get_or("eta", 0)?),
        other => Err(Error::InvalidParameter(format!("unknown verification target {other:?}"))),
    }
}
