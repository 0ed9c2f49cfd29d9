//! Driver for `braidforce-core`: parallel evaluation with stage timings and
//! budgets, and the text / JSON report formats used by the `braidforce`
//! command.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use braidforce_core::garside::{normal_form, ConjugacyCache};
use braidforce_core::groupring::render_word;
use braidforce_core::pipeline::{classify_term, sort_terms, terms_of, ForcingOptions, ForcingReport};
use braidforce_core::zeta::Zeta;
use braidforce_core::{curves, BraidWord, ClassSum, Error, SummitConfig, Tag, ThurstonType, TraceTerm};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const UNCLASSIFIED: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{stage}: stage timeout of {limit:?} exceeded")]
    Timeout { stage: &'static str, limit: Duration },
    #[error("classification unavailable: β is {0}, and forced extensions are only classified for pseudo-Anosov braids")]
    Unclassified(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Core(e) => match e.root() {
                Error::Budget { .. } => exit::BUDGET,
                _ => exit::INVALID,
            },
            RunError::Timeout { .. } => exit::BUDGET,
            RunError::Unclassified(_) => exit::UNCLASSIFIED,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub n: usize,
    pub m: usize,
    pub word: String,
    pub forcing: ForcingOptions,
    pub require_classification: bool,
    /// Applies to each stage separately.
    pub stage_timeout: Option<Duration>,
}

/// A report together with per-stage wall-clock times.
#[derive(Clone, Debug)]
pub struct Run {
    pub report: ForcingReport,
    pub raw_terms: usize,
    pub timings: Vec<(&'static str, Duration)>,
    pub stage_timeout: Option<Duration>,
}

struct Clock {
    start: Instant,
    limit: Option<Duration>,
    stage: &'static str,
}

impl Clock {
    fn new(stage: &'static str, limit: Option<Duration>) -> Self {
        Clock { start: Instant::now(), limit, stage }
    }

    fn check(&self) -> Result<(), RunError> {
        match self.limit {
            Some(limit) if self.start.elapsed() > limit => Err(RunError::Timeout { stage: self.stage, limit }),
            _ => Ok(()),
        }
    }

    fn finish(self, timings: &mut Vec<(&'static str, Duration)>) -> Result<(), RunError> {
        self.check()?;
        timings.push((self.stage, self.start.elapsed()));
        Ok(())
    }
}

/// Runs the pipeline with parallel class merging and classification. The
/// result does not depend on the number of threads.
pub fn run(opts: &RunOptions) -> Result<Run, RunError> {
    let mut timings = Vec::new();
    let limit = opts.stage_timeout;
    let cfg = opts.forcing.summit;

    let clock = Clock::new("parse", limit);
    let beta = BraidWord::parse(&opts.word, opts.n).map_err(|e| e.at_stage("parse"))?;
    if opts.m == 0 {
        return Err(Error::InvalidArgument("extensions need m ≥ 1 extra strands".into()).at_stage("parse").into());
    }
    if normal_form(&beta)?.is_identity() {
        return Err(Error::InvalidArgument(
            "the braid is trivial; forced extensions are only defined for nontrivial braids".into(),
        )
        .at_stage("parse")
        .into());
    }
    clock.finish(&mut timings)?;

    let clock = Clock::new("trace", limit);
    let zeta = Zeta::new(opts.n, opts.m).map_err(|e| e.at_stage("trace"))?;
    let raw = zeta.rep(&beta).map_err(|e| e.at_stage("trace"))?.trace();
    clock.finish(&mut timings)?;

    let clock = Clock::new("merge", limit);
    let raw_terms: Vec<_> = raw.terms().map(|(k, c, w)| (k.clone(), c.clone(), w.clone())).collect();
    let reps: Vec<Result<_, RunError>> = raw_terms
        .par_iter()
        .map_init(
            || ConjugacyCache::new(cfg),
            |cache, (key, _, _)| {
                clock.check()?;
                Ok(cache.representative(key).map_err(|e| e.at_stage("merge"))?)
            },
        )
        .collect();
    let mut classes = ClassSum::zero(opts.n + opts.m);
    for ((_, coeff, word), rep) in raw_terms.iter().zip(reps) {
        classes.add_term(rep?, coeff.clone(), word.clone());
    }
    clock.finish(&mut timings)?;

    let mut terms = terms_of(&classes, opts.n, opts.m);
    if opts.forcing.elementary_only {
        terms.retain(|t| t.has(Tag::Elementary));
    }

    let mut beta_type = None;
    if opts.forcing.classify {
        let clock = Clock::new("classify", limit);
        let ty = curves::thurston_type(&beta, &cfg).map_err(|e| e.at_stage("classify"))?;
        if ty == ThurstonType::PseudoAnosov {
            let tags: Vec<Result<Vec<Tag>, RunError>> = terms
                .par_iter()
                .map(|t| {
                    clock.check()?;
                    Ok(classify_term(&t.representative, &cfg).map_err(|e| e.at_stage("classify"))?)
                })
                .collect();
            for (t, tags) in terms.iter_mut().zip(tags) {
                t.tags.extend(tags?);
            }
        } else {
            terms.iter_mut().for_each(|t| {
                t.tags.insert(Tag::Unclassified);
            });
        }
        clock.finish(&mut timings)?;
        beta_type = Some(ty);
    } else {
        terms.iter_mut().for_each(|t| {
            t.tags.insert(Tag::Unclassified);
        });
    }
    if opts.require_classification && beta_type != Some(ThurstonType::PseudoAnosov) {
        let what = beta_type.map_or("not classified (classification disabled)".to_string(), |t| t.to_string());
        return Err(RunError::Unclassified(what));
    }
    sort_terms(&mut terms);

    let report = ForcingReport { n: opts.n, m: opts.m, beta, beta_type, terms, options: opts.forcing };
    Ok(Run { report, raw_terms: raw_terms.len(), timings, stage_timeout: limit })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub factor_beta: bool,
    pub lefschetz_signs: bool,
}

fn term_word(t: &TraceTerm, beta: &BraidWord, ro: &RenderOptions) -> String {
    if ro.factor_beta {
        t.factored_display(beta)
    } else {
        render_word(&t.sample_word)
    }
}

fn tag_list(t: &TraceTerm) -> Vec<&'static str> {
    t.tags.iter().map(|g| g.as_str()).collect()
}

#[derive(Serialize)]
struct JsonTerm {
    word: String,
    normal_form: String,
    coefficient: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    lefschetz_coefficient: Option<serde_json::Value>,
    tags: Vec<&'static str>,
}

#[derive(Serialize)]
struct JsonStages {
    timings: BTreeMap<&'static str, f64>,
    budgets: BTreeMap<&'static str, serde_json::Value>,
}

#[derive(Serialize)]
struct JsonReport {
    n: usize,
    m: usize,
    word: String,
    beta_type: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lefschetz_sign: Option<i32>,
    terms: Vec<JsonTerm>,
    stages: JsonStages,
}

fn int_value(x: &BigInt) -> serde_json::Value {
    match i64::try_from(x) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(x.to_string()),
    }
}

fn budgets(run: &Run) -> BTreeMap<&'static str, serde_json::Value> {
    let cfg: SummitConfig = run.report.options.summit;
    let mut b = BTreeMap::new();
    b.insert("summit_kind", serde_json::Value::from(cfg.kind.to_string()));
    b.insert("summit_elements", serde_json::Value::from(cfg.budget));
    b.insert(
        "stage_timeout_seconds",
        run.stage_timeout.map_or(serde_json::Value::Null, |d| serde_json::Value::from(d.as_secs_f64())),
    );
    b
}

pub fn to_json(run: &Run, ro: &RenderOptions) -> serde_json::Value {
    let r = &run.report;
    let sign = r.lefschetz_sign();
    let terms = r
        .terms
        .iter()
        .map(|t| JsonTerm {
            word: term_word(t, &r.beta, ro),
            normal_form: t.representative.to_string(),
            coefficient: int_value(&t.coefficient),
            lefschetz_coefficient: ro.lefschetz_signs.then(|| int_value(&(&t.coefficient * sign))),
            tags: tag_list(t),
        })
        .collect();
    let report = JsonReport {
        n: r.n,
        m: r.m,
        word: r.beta.to_string(),
        beta_type: r.beta_type.map(|t| t.as_str()),
        lefschetz_sign: ro.lefschetz_signs.then_some(sign),
        terms,
        stages: JsonStages {
            timings: run.timings.iter().map(|(s, d)| (*s, d.as_secs_f64() * 1e3)).collect(),
            budgets: budgets(run),
        },
    };
    serde_json::to_value(report).expect("report serializes")
}

pub fn to_text(run: &Run, ro: &RenderOptions) -> String {
    use std::fmt::Write;
    let r = &run.report;
    let mut out = String::new();
    let _ = writeln!(out, "braid    {} on {} strands, {} extra", render_word(&r.beta), r.n, r.m);
    match r.beta_type {
        Some(t) => {
            let _ = writeln!(out, "type     {t}");
        }
        None => {
            let _ = writeln!(out, "type     not computed");
        }
    }
    let forced = r.forced().count();
    let _ = writeln!(out, "classes  {} ({} raw terms, {} forced)", r.terms.len(), run.raw_terms, forced);
    if r.beta_type.is_some_and(|t| t != ThurstonType::PseudoAnosov) {
        let _ = writeln!(out, "note     terms are only classified when the braid is pseudo-Anosov");
    }
    if ro.lefschetz_signs {
        let _ = writeln!(out, "sign     (-1)^m = {:+}", r.lefschetz_sign());
    }
    let words: Vec<String> = r.terms.iter().map(|t| term_word(t, &r.beta, ro)).collect();
    let width = words.iter().map(|w| w.chars().count()).max().unwrap_or(0);
    for (t, w) in r.terms.iter().zip(&words) {
        let mut line = format!("  {:>+4}  {:<width$}  {}", t.coefficient, w, tag_list(t).join(","));
        if ro.lefschetz_signs {
            let _ = write!(line, "  index {:+}", &t.coefficient * r.lefschetz_sign());
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    let stages: Vec<String> = run.timings.iter().map(|(s, d)| format!("{s} {:.1}ms", d.as_secs_f64() * 1e3)).collect();
    let _ = writeln!(out, "stages   {}", stages.join(", "));
    out
}
