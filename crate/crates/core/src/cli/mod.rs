//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error or a failed check, 2 on a
//! usage error. Domain errors print `error[<code>]: <message>` to stderr.

mod report;

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use num::BigUint;
use serde::Serialize;

use crate::automorphisms::{apply, aut_commutator, Automorphism, FactorMap, GenKind};
use crate::codes::{code, is_generic, weighted_z_code, Pattern};
use crate::error::{Error, Result};
use crate::factors::GroupConfig;
use crate::parser::{load_config, parse_reduced};
use crate::quasimorphisms::{a_priori_defect, evaluate, homogenise, CodeKind, QmSpec, DEFAULT_HOMOGENISATION_POWER};
use crate::verify::{
    self, scl_lower_bound, witness_commutator_word, witness_qm, witness_word, CampaignReport, CommutatorChoices,
    WitnessMode, WitnessSpec,
};
use crate::words::{ReducedWord, Side};

pub use report::{decimal, homogenisation_line, OutputMode};
use report::{campaign_text, machine, HomogenisationDoc, SclDoc};

#[derive(Parser, Debug)]
#[command(name = "qmcode", version, about = "Code quasimorphisms on free products A * B")]
struct Cli {
    /// Group configuration (TOML).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Campaign {
    /// Seed; defaults to one derived from the clock, always printed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<u64>,
    /// Maximum length of sampled words.
    #[arg(long, default_value_t = verify::DEFAULT_MAX_LEN)]
    max_len: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced form of a word.
    Reduce { word: String },
    /// A- or B-code of a word.
    Code {
        #[arg(long, default_value = "A")]
        side: Side,
        word: String,
    },
    /// Weighted Z-code; the side defaults to the integer factor.
    Wcode {
        #[arg(long)]
        side: Option<Side>,
        word: String,
    },
    /// Value of a quasimorphism on a word.
    Qm {
        #[arg(long)]
        spec: String,
        word: String,
    },
    /// Certified interval for the homogenisation.
    #[command(alias = "homogenize")]
    Homogenise {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = DEFAULT_HOMOGENISATION_POWER)]
        power: u64,
        word: String,
    },
    /// Whether a pattern is generic.
    Generic { pattern: String },
    /// Image of a word under an automorphism.
    ApplyAut {
        #[arg(long)]
        aut: String,
        word: String,
    },
    /// Aut-commutator phi(w) w^-1.
    Commutator {
        #[arg(long)]
        aut: String,
        word: String,
    },
    /// Witness word for a generic pattern, with values on its powers.
    Witness {
        #[arg(long, default_value = "code-distinct-factors")]
        mode: WitnessMode,
        #[arg(long)]
        z: String,
        #[arg(long)]
        m: Option<BigUint>,
        #[arg(long)]
        a1: Option<String>,
        #[arg(long)]
        a2: Option<String>,
        #[arg(long)]
        b1: Option<String>,
        #[arg(long)]
        b2: Option<String>,
        /// Evaluate on w^1 .. w^powers.
        #[arg(long, default_value_t = 5)]
        powers: u32,
    },
    /// Commutator witness in [Aut(G),G] and its certified scl_Aut bound.
    WitnessScl {
        /// Distinct positive integers, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "5,6,7")]
        n: Vec<u64>,
        #[arg(long, default_value_t = 3000)]
        power: u64,
        /// Factor carrying the automorphism f.
        #[arg(long)]
        side: Option<Side>,
        /// Factor map for f, e.g. mul=2.
        #[arg(long)]
        map: Option<String>,
        #[arg(long)]
        a1: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        h: Option<String>,
    },
    /// Randomized defect campaign (and theta subadditivity for single atoms).
    VerifyDefect {
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        campaign: Campaign,
    },
    /// Randomized invariance campaign over the given generator kinds.
    VerifyInvariance {
        #[arg(long)]
        spec: String,
        /// Comma separated: factor_auto, partial_conjugation, swap, transvection.
        #[arg(long, value_delimiter = ',', default_value = "factor_auto")]
        kinds: Vec<GenKind>,
        #[command(flatten)]
        campaign: Campaign,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_AUT_LEN)]
        max_aut_len: usize,
    },
    /// Certified scl_Aut lower bound of a word from a quasimorphism.
    SclBound {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = DEFAULT_HOMOGENISATION_POWER)]
        power: u64,
        word: String,
    },
}

enum Failure {
    Domain(Error),
    Usage(String),
    /// A campaign found violations; the report has been printed.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Ctx<'io> {
    config: Option<PathBuf>,
    mode: OutputMode,
    stdin: &'io mut dyn BufRead,
    out: &'io mut dyn Write,
}

impl Ctx<'_> {
    fn group(&self) -> std::result::Result<Arc<GroupConfig>, Failure> {
        let path = self.config.as_ref().ok_or_else(|| Failure::Usage("this command needs --config <FILE>".into()))?;
        Ok(load_config(path)?.into_shared())
    }

    /// `-` reads the word from stdin.
    fn word(&mut self, group: &Arc<GroupConfig>, text: &str) -> Result<ReducedWord> {
        if text == "-" {
            let mut buf = String::new();
            self.stdin.read_to_string(&mut buf)?;
            parse_reduced(buf.trim(), group)
        } else {
            parse_reduced(text, group)
        }
    }

    fn emit(&mut self, text: &str, doc: String) -> Result<()> {
        match self.mode {
            OutputMode::Text => write!(self.out, "{text}")?,
            OutputMode::Machine => write!(self.out, "{doc}")?,
        }
        Ok(())
    }
}

fn seed_or_clock(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let d = SystemTime::now().duration_since(UNIX_EPOCH).unwrap_or_default();
        d.as_secs() ^ (d.subsec_nanos() as u64) << 20
    })
}

#[derive(Serialize)]
struct WordDoc {
    word: String,
    length: usize,
}

#[derive(Serialize)]
struct CodeDoc {
    word: String,
    side: String,
    code: String,
}

#[derive(Serialize)]
struct ValueDoc {
    qm: String,
    word: String,
    value: String,
}

#[derive(Serialize)]
struct GenericDoc {
    pattern: String,
    generic: bool,
}

#[derive(Serialize)]
struct AutDoc {
    automorphism: String,
    word: String,
    image: String,
}

#[derive(Serialize)]
struct WitnessDoc {
    mode: String,
    word: String,
    code: String,
    qm: String,
    values: Vec<String>,
}

#[derive(Serialize)]
struct SclBoundDoc {
    homogenisation: HomogenisationDoc,
    scl_lower_bound: String,
}

fn element(cfg: &GroupConfig, side: Side, text: &Option<String>) -> Result<Option<crate::factors::Element>> {
    text.as_deref().map(|t| cfg.factor(side).parse_element(t)).transpose()
}

fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> std::result::Result<(), Failure> {
    match command {
        Command::Reduce { word } => {
            let g = ctx.group()?;
            let w = ctx.word(&g, &word)?;
            let doc = machine("reduce", &WordDoc { word: w.to_string(), length: w.len() });
            ctx.emit(&format!("{w}\n"), doc)?;
        }
        Command::Code { side, word } => {
            let g = ctx.group()?;
            let w = ctx.word(&g, &word)?;
            let c = code(&w, side);
            let doc = machine("code", &CodeDoc { word: w.to_string(), side: side.to_string(), code: c.to_string() });
            ctx.emit(&format!("{c}\n"), doc)?;
        }
        Command::Wcode { side, word } => {
            let g = ctx.group()?;
            let side = side.or(g.integer_side()).ok_or(Error::NotIntegerFactor(Side::A))?;
            let w = ctx.word(&g, &word)?;
            let c = weighted_z_code(&w, side)?;
            let doc = machine("wcode", &CodeDoc { word: w.to_string(), side: side.to_string(), code: c.to_string() });
            ctx.emit(&format!("{c}\n"), doc)?;
        }
        Command::Qm { spec, word } => {
            let g = ctx.group()?;
            let q: QmSpec = spec.parse()?;
            let w = ctx.word(&g, &word)?;
            let v = evaluate(&q, &w)?;
            let doc = machine("qm", &ValueDoc { qm: q.to_string(), word: w.to_string(), value: v.to_string() });
            ctx.emit(&format!("{v}\n"), doc)?;
        }
        Command::Homogenise { spec, power, word } => {
            let g = ctx.group()?;
            let q: QmSpec = spec.parse()?;
            let w = ctx.word(&g, &word)?;
            let h = homogenise(&q, &w, power)?;
            let d = a_priori_defect(&q).value().clone();
            let text = format!("{}\n  exact: [{}, {}]\n", homogenisation_line(&h, &d), h.lower(), h.upper());
            let doc = machine("homogenise", &HomogenisationDoc::new(q.to_string(), w.to_string(), &h, &d));
            ctx.emit(&text, doc)?;
        }
        Command::Generic { pattern } => {
            let z: Pattern = pattern.parse()?;
            let generic = is_generic(&z);
            let doc = machine("generic", &GenericDoc { pattern: z.to_string(), generic });
            ctx.emit(&format!("{generic}\n"), doc)?;
        }
        Command::ApplyAut { aut, word } => {
            let g = ctx.group()?;
            let phi = Automorphism::parse(&aut, &g)?;
            let w = ctx.word(&g, &word)?;
            let img = apply(&phi, &w)?;
            let doc = machine(
                "apply-aut",
                &AutDoc { automorphism: phi.format(&g), word: w.to_string(), image: img.to_string() },
            );
            ctx.emit(&format!("{img}\n"), doc)?;
        }
        Command::Commutator { aut, word } => {
            let g = ctx.group()?;
            let phi = Automorphism::parse(&aut, &g)?;
            let w = ctx.word(&g, &word)?;
            let c = aut_commutator(&phi, &w)?;
            let doc = machine(
                "commutator",
                &AutDoc { automorphism: phi.format(&g), word: w.to_string(), image: c.to_string() },
            );
            ctx.emit(&format!("{c}\n"), doc)?;
        }
        Command::Witness { mode, z, m, a1, a2, b1, b2, powers } => {
            let g = ctx.group()?;
            let z: Pattern = z.parse()?;
            let mut spec = WitnessSpec::with_defaults(z, m, &g, mode)?;
            let (sa, sb) = match mode {
                WitnessMode::Weighted => {
                    let s = g.integer_side().expect("checked by with_defaults");
                    (s, s.other())
                }
                _ => (Side::A, Side::B),
            };
            if let Some(x) = element(&g, sa, &a1)? {
                spec.a1 = x;
            }
            if let Some(x) = element(&g, sa, &a2)? {
                spec.a2 = x;
            }
            if let Some(x) = element(&g, sb, &b1)? {
                spec.b1 = x;
            }
            if let Some(x) = element(&g, sb, &b2)? {
                spec.b2 = x;
            }
            let w = witness_word(&spec, &g, mode)?;
            let q = witness_qm(&spec, &g, mode)?;
            let c = match mode {
                WitnessMode::Weighted => weighted_z_code(&w, sa)?,
                _ => code(&w, Side::A),
            };
            let mut values = Vec::new();
            for l in 1..=powers.max(1) {
                values.push(evaluate(&q, &w.power(l as i64)?)?);
            }
            let mut text = format!("w = {w}\ncode: {c}\nqm: {q}\n");
            for (l, v) in values.iter().enumerate() {
                text.push_str(&format!("f(w^{}) = {v}\n", l + 1));
            }
            let doc = machine(
                "witness",
                &WitnessDoc {
                    mode: mode.to_string(),
                    word: w.to_string(),
                    code: c.to_string(),
                    qm: q.to_string(),
                    values: values.iter().map(ToString::to_string).collect(),
                },
            );
            ctx.emit(&text, doc)?;
        }
        Command::WitnessScl { n, power, side, map, a1, a, h } => {
            let g = ctx.group()?;
            let s = side.unwrap_or(Side::A);
            let map = match map {
                Some(m) => Some(FactorMap::parse(&m, g.factor(s))?),
                None => None,
            };
            let choices = CommutatorChoices {
                side,
                map,
                a1: element(&g, s, &a1)?,
                a: element(&g, s, &a)?,
                h: element(&g, s.other(), &h)?,
            };
            let wit = witness_commutator_word(&g, &n, &choices)?;
            let hom = homogenise(&wit.qm, &wit.word, power)?;
            let d = a_priori_defect(&wit.qm);
            let bound = scl_lower_bound(&hom, &d)?;
            let doc = SclDoc::new(&wit, &hom, d.value(), &bound);
            let text = doc.text(&hom, d.value());
            ctx.emit(&text, machine("witness-scl", &doc))?;
        }
        Command::VerifyDefect { spec, campaign } => {
            let g = ctx.group()?;
            let q: QmSpec = spec.parse()?;
            let seed = seed_or_clock(campaign.seed);
            let trials = campaign.trials.unwrap_or(verify::DEFAULT_DEFECT_TRIALS);
            let mut reports = vec![verify::estimate_defect(&q, &g, trials, campaign.max_len, seed)?];
            let atom = match &q {
                QmSpec::Code { side, pattern } => Some((*side, pattern.clone(), CodeKind::Plain)),
                QmSpec::Weighted { side, pattern } => Some((*side, pattern.clone(), CodeKind::Weighted)),
                QmSpec::Combination(_) => None,
            };
            if let Some((side, z, kind)) = atom {
                reports.push(verify::check_theta_subadditivity(side, &z, kind, &g, trials, campaign.max_len, seed)?);
            }
            emit_campaigns(ctx, &reports)?;
        }
        Command::VerifyInvariance { spec, kinds, campaign, max_aut_len } => {
            let g = ctx.group()?;
            let q: QmSpec = spec.parse()?;
            let seed = seed_or_clock(campaign.seed);
            let trials = campaign.trials.unwrap_or(verify::DEFAULT_INVARIANCE_TRIALS);
            let r = verify::check_invariance_with(&q, &g, &kinds, trials, campaign.max_len, max_aut_len, seed)?;
            emit_campaigns(ctx, &[r])?;
        }
        Command::SclBound { spec, power, word } => {
            let g = ctx.group()?;
            let q: QmSpec = spec.parse()?;
            let w = ctx.word(&g, &word)?;
            let hom = homogenise(&q, &w, power)?;
            let d = a_priori_defect(&q);
            let bound = scl_lower_bound(&hom, &d)?;
            let text = format!("{}\nscl_Aut(w) ≥ {bound}\n", homogenisation_line(&hom, d.value()));
            let doc = machine(
                "scl-bound",
                &SclBoundDoc {
                    homogenisation: HomogenisationDoc::new(q.to_string(), w.to_string(), &hom, d.value()),
                    scl_lower_bound: bound.to_string(),
                },
            );
            ctx.emit(&text, doc)?;
        }
    }
    Ok(())
}

fn emit_campaigns(ctx: &mut Ctx<'_>, reports: &[CampaignReport]) -> std::result::Result<(), Failure> {
    match ctx.mode {
        OutputMode::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(ctx.out).map_err(Error::from)?;
                }
                write!(ctx.out, "{}", campaign_text(r)).map_err(Error::from)?;
            }
        }
        OutputMode::Machine => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(ctx.out, "\n# ---").map_err(Error::from)?;
                }
                write!(ctx.out, "{}", r.to_toml()).map_err(Error::from)?;
            }
        }
    }
    if reports.iter().all(CampaignReport::passed) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

/// Runs one command line (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let mut ctx = Ctx { config: cli.config, mode: cli.format, stdin, out };
    match dispatch(cli.command, &mut ctx) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check) => {
            let _ = writeln!(err, "error[bound-violated]: the campaign found counterexamples");
            1
        }
    }
}
