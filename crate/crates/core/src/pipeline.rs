//! From a braid to its forced extensions: trace, merge, tag, classify.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::braid::BraidWord;
use crate::curves::{reducing_witness, thurston_type_form};
use crate::error::{Error, Result};
use crate::garside::{is_periodic_form, normal_form, CanonicalForm, ConjugacyCache, SummitConfig};
use crate::groupring::{render_word, ClassSum, GroupRingElement};
use crate::zeta::{RepMatrix, Zeta};

pub use crate::curves::ThurstonType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Elementary,
    Periodic,
    Reducible,
    PseudoAnosov,
    Forced,
    Excluded,
    Unclassified,
}

impl Tag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tag::Elementary => "elementary",
            Tag::Periodic => "periodic",
            Tag::Reducible => "reducible",
            Tag::PseudoAnosov => "pseudo_anosov",
            Tag::Forced => "forced",
            Tag::Excluded => "excluded",
            Tag::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One conjugacy class with nonzero coefficient in the merged trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceTerm {
    pub representative: CanonicalForm,
    pub coefficient: BigInt,
    /// A term of the raw trace lying in this class.
    pub sample_word: BraidWord,
    pub tags: BTreeSet<Tag>,
}

impl TraceTerm {
    pub fn has(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    /// The sample word written as `β · w`, where `β` is embedded on the
    /// first strands.
    pub fn factored_display(&self, beta: &BraidWord) -> String {
        let beta = beta.embed(self.sample_word.strands()).expect("β has no more strands than its extensions");
        let rest = beta.inverse().concat(&self.sample_word).expect("same strand count").free_reduce();
        if rest.is_empty() {
            String::from("β")
        } else {
            format!("β · {}", render_word(&rest))
        }
    }
}

/// Raw diagonal sum, before classes are merged.
pub fn trace(matrix: &RepMatrix) -> GroupRingElement {
    matrix.trace()
}

fn nontrivial(beta: &BraidWord) -> Result<()> {
    if normal_form(beta)?.is_identity() {
        return Err(Error::invalid("the braid is trivial; forced extensions are only defined for nontrivial braids"));
    }
    Ok(())
}

/// The trace of `ζ_{n,m}(β)` as a sum of conjugacy classes of `B_{n+m}`.
pub fn merged_trace(beta: &BraidWord, m: usize, config: &SummitConfig) -> Result<ClassSum> {
    merged_trace_with(beta, m, &mut ConjugacyCache::new(*config))
}

pub fn merged_trace_with(beta: &BraidWord, m: usize, cache: &mut ConjugacyCache) -> Result<ClassSum> {
    nontrivial(beta)?;
    let zeta = Zeta::new(beta.strands(), m)?;
    trace(&zeta.rep(beta)?).project_classes_with(cache)
}

/// Whether the term's last `m` strands close up into a single cycle.
///
/// Read from the sample word: it preserves the last `m` positions, while a
/// class representative need not.
pub fn tag_elementary(term: &TraceTerm, n: usize, m: usize) -> bool {
    m >= 1 && term.sample_word.permutation().is_single_cycle_on(n + 1, n + m)
}

/// Tags for a single term of the trace of a pseudo-Anosov braid.
pub fn classify_term(representative: &CanonicalForm, config: &SummitConfig) -> Result<Vec<Tag>> {
    if is_periodic_form(representative) {
        return Ok(alloc::vec![Tag::Periodic, Tag::Excluded]);
    }
    if reducing_witness(representative, config)?.is_some() {
        Ok(alloc::vec![Tag::Reducible, Tag::Excluded])
    } else {
        Ok(alloc::vec![Tag::PseudoAnosov, Tag::Forced])
    }
}

/// Turns merged classes into tagged terms. Terms are classified only when
/// `β` is pseudo-Anosov; otherwise they are marked unclassified.
pub fn classify(
    beta: &BraidWord,
    classes: &ClassSum,
    m: usize,
    config: &SummitConfig,
) -> Result<(ThurstonType, Vec<TraceTerm>)> {
    let beta_type = thurston_type_form(&normal_form(beta)?, config)?;
    let mut terms = terms_of(classes, beta.strands(), m);
    for t in &mut terms {
        if beta_type == ThurstonType::PseudoAnosov {
            t.tags.extend(classify_term(&t.representative, config)?);
        } else {
            t.tags.insert(Tag::Unclassified);
        }
    }
    Ok((beta_type, terms))
}

/// Terms of a class sum in report order, tagged `elementary` where it applies.
pub fn terms_of(classes: &ClassSum, n: usize, m: usize) -> Vec<TraceTerm> {
    let mut terms: Vec<TraceTerm> = classes
        .terms()
        .map(|(rep, c, w)| {
            let mut t = TraceTerm {
                representative: rep.clone(),
                coefficient: c.clone(),
                sample_word: w.clone(),
                tags: BTreeSet::new(),
            };
            if tag_elementary(&t, n, m) {
                t.tags.insert(Tag::Elementary);
            }
            t
        })
        .collect();
    sort_terms(&mut terms);
    terms
}

/// Positive coefficients first, then by representative.
pub fn sort_terms(terms: &mut [TraceTerm]) {
    terms.sort_by(|x, y| {
        x.coefficient
            .is_negative()
            .cmp(&y.coefficient.is_negative())
            .then_with(|| x.representative.cmp(&y.representative))
    });
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcingOptions {
    pub elementary_only: bool,
    pub classify: bool,
    pub summit: SummitConfig,
}

impl Default for ForcingOptions {
    fn default() -> Self {
        ForcingOptions { elementary_only: false, classify: true, summit: SummitConfig::default() }
    }
}

#[derive(Clone, Debug)]
pub struct ForcingReport {
    pub n: usize,
    pub m: usize,
    pub beta: BraidWord,
    /// `None` when classification was switched off.
    pub beta_type: Option<ThurstonType>,
    pub terms: Vec<TraceTerm>,
    pub options: ForcingOptions,
}

impl ForcingReport {
    /// `(-1)^m`, the sign relating trace coefficients to fixed-point indices.
    pub fn lefschetz_sign(&self) -> i32 {
        if self.m % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn forced(&self) -> impl Iterator<Item = &TraceTerm> {
        self.terms.iter().filter(|t| t.has(Tag::Forced))
    }
}

/// Parse, trace, merge, tag and classify. Errors carry the stage that
/// raised them.
pub fn forced_extensions(text: &str, n: usize, m: usize, options: &ForcingOptions) -> Result<ForcingReport> {
    let beta = BraidWord::parse(text, n).map_err(|e| e.at_stage("parse"))?;
    if m == 0 {
        return Err(Error::invalid("extensions need m ≥ 1 extra strands").at_stage("parse"));
    }
    let classes = merged_trace(&beta, m, &options.summit).map_err(|e| e.at_stage("trace"))?;
    let mut terms = terms_of(&classes, n, m);
    if options.elementary_only {
        terms.retain(|t| t.has(Tag::Elementary));
    }
    let mut beta_type = None;
    if options.classify {
        let ty = thurston_type_form(&normal_form(&beta)?, &options.summit).map_err(|e| e.at_stage("classify"))?;
        for t in &mut terms {
            if ty == ThurstonType::PseudoAnosov {
                let tags = classify_term(&t.representative, &options.summit).map_err(|e| e.at_stage("classify"))?;
                t.tags.extend(tags);
            } else {
                t.tags.insert(Tag::Unclassified);
            }
        }
        beta_type = Some(ty);
    } else {
        for t in &mut terms {
            t.tags.insert(Tag::Unclassified);
        }
    }
    Ok(ForcingReport { n, m, beta, beta_type, terms, options: *options })
}
