//! The integral group ring `ℤB_N` and its projection onto conjugacy classes.
//!
//! Keys are normal forms, so equal group elements merge automatically.
//! Every term also remembers a short word that produced it; the word is
//! used only for display and never affects equality.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::{CanonicalForm, ConjugacyCache, SummitConfig};

#[derive(Clone, Debug)]
struct Term {
    coeff: BigInt,
    word: BraidWord,
}

fn better_word(a: &BraidWord, b: &BraidWord) -> bool {
    (a.len(), a.letters()) < (b.len(), b.letters())
}

fn insert_term(
    terms: &mut BTreeMap<CanonicalForm, Term>,
    key: CanonicalForm,
    coeff: BigInt,
    word: BraidWord,
) {
    if coeff.is_zero() {
        return;
    }
    match terms.get_mut(&key) {
        Some(t) => {
            t.coeff += coeff;
            if better_word(&word, &t.word) {
                t.word = word;
            }
            if t.coeff.is_zero() {
                terms.remove(&key);
            }
        }
        None => {
            terms.insert(key, Term { coeff, word });
        }
    }
}

/// A finite formal integer combination of elements of `B_N`.
#[derive(Clone)]
pub struct GroupRingElement {
    strands: usize,
    terms: BTreeMap<CanonicalForm, Term>,
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.strands == other.strands
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((ka, ta), (kb, tb))| ka == kb && ta.coeff == tb.coeff)
    }
}

impl Eq for GroupRingElement {}

impl GroupRingElement {
    pub fn zero(strands: usize) -> Self {
        GroupRingElement { strands, terms: BTreeMap::new() }
    }

    pub fn one(strands: usize) -> Self {
        Self::from_form(CanonicalForm::identity(strands), BraidWord::identity(strands), 1)
    }

    /// `coeff · [word]`.
    pub fn from_word(word: &BraidWord, coeff: i64) -> Result<Self> {
        let key = CanonicalForm::from_word(word)?;
        Ok(Self::from_form(key, word.clone(), coeff))
    }

    pub(crate) fn from_form(key: CanonicalForm, word: BraidWord, coeff: i64) -> Self {
        let mut x = Self::zero(key.strands());
        insert_term(&mut x.terms, key, BigInt::from(coeff), word);
        x
    }

    /// Builds an element from `(coefficient, word)` pairs.
    pub fn from_terms<'a>(strands: usize, terms: impl IntoIterator<Item = (i64, &'a BraidWord)>) -> Result<Self> {
        let mut x = Self::zero(strands);
        for (c, w) in terms {
            x.check_strands(w.strands())?;
            x.add_word(w, BigInt::from(c))?;
        }
        Ok(x)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct group elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &CanonicalForm) -> BigInt {
        self.terms.get(key).map(|t| t.coeff.clone()).unwrap_or_default()
    }

    /// `(key, coefficient, sample word)` in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalForm, &BigInt, &BraidWord)> {
        self.terms.iter().map(|(k, t)| (k, &t.coeff, &t.word))
    }

    fn check_strands(&self, other: usize) -> Result<()> {
        if self.strands != other {
            return Err(Error::StrandMismatch { left: self.strands, right: other });
        }
        Ok(())
    }

    pub fn add_word(&mut self, word: &BraidWord, coeff: BigInt) -> Result<()> {
        self.check_strands(word.strands())?;
        let key = CanonicalForm::from_word(word)?;
        insert_term(&mut self.terms, key, coeff, word.clone());
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_strands(other.strands)?;
        let mut out = self.clone();
        for (k, t) in &other.terms {
            insert_term(&mut out.terms, k.clone(), t.coeff.clone(), t.word.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.strands);
        }
        let mut out = self.clone();
        for t in out.terms.values_mut() {
            t.coeff *= k;
        }
        out
    }

    /// Ring product; `(Σ a_g g)(Σ b_h h) = Σ a_g b_h (gh)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_strands(other.strands)?;
        let mut out = Self::zero(self.strands);
        for (ka, ta) in &self.terms {
            for (kb, tb) in &other.terms {
                let word = ta.word.concat(&tb.word)?.free_reduce();
                insert_term(&mut out.terms, ka.multiply(kb), &ta.coeff * &tb.coeff, word);
            }
        }
        Ok(out)
    }

    /// The anti-automorphism induced by `g ↦ g⁻¹`.
    pub fn involution(&self) -> Self {
        let mut out = Self::zero(self.strands);
        for (k, t) in &self.terms {
            insert_term(&mut out.terms, k.inverse(), t.coeff.clone(), t.word.inverse());
        }
        out
    }

    /// Projection onto conjugacy classes, sharing a representative cache.
    pub fn project_classes_with(&self, cache: &mut ConjugacyCache) -> Result<ClassSum> {
        let mut out = ClassSum::zero(self.strands);
        for (k, t) in &self.terms {
            let rep = cache.representative(k)?;
            out.add_term(rep, t.coeff.clone(), t.word.clone());
        }
        Ok(out)
    }

    /// Projection onto conjugacy classes.
    pub fn project_classes(&self, config: &SummitConfig) -> Result<ClassSum> {
        self.project_classes_with(&mut ConjugacyCache::new(*config))
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(BigInt, String)> = self
            .terms
            .values()
            .map(|t| (t.coeff.clone(), render_word(&t.word)))
            .collect();
        f.write_str(&render_sum(&items))
    }
}

/// A finite formal integer combination of conjugacy classes of `B_N`,
/// keyed by class representatives.
#[derive(Clone)]
pub struct ClassSum {
    strands: usize,
    terms: BTreeMap<CanonicalForm, Term>,
}

impl PartialEq for ClassSum {
    fn eq(&self, other: &Self) -> bool {
        self.strands == other.strands
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((ka, ta), (kb, tb))| ka == kb && ta.coeff == tb.coeff)
    }
}

impl Eq for ClassSum {}

impl ClassSum {
    pub fn zero(strands: usize) -> Self {
        ClassSum { strands, terms: BTreeMap::new() }
    }

    /// Adds `coeff` to the class whose representative is `rep`.
    pub fn add_term(&mut self, rep: CanonicalForm, coeff: BigInt, sample: BraidWord) {
        insert_term(&mut self.terms, rep, coeff, sample);
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, rep: &CanonicalForm) -> BigInt {
        self.terms.get(rep).map(|t| t.coeff.clone()).unwrap_or_default()
    }

    /// `(representative, coefficient, sample word)` in representative order.
    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalForm, &BigInt, &BraidWord)> {
        self.terms.iter().map(|(k, t)| (k, &t.coeff, &t.word))
    }

    /// The representatives as a group-ring element (used to check that
    /// projection is idempotent).
    pub fn to_group_ring(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.strands);
        for (k, t) in &self.terms {
            insert_term(&mut out.terms, k.clone(), t.coeff.clone(), t.word.clone());
        }
        out
    }
}

impl fmt::Debug for ClassSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ClassSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(BigInt, String)> = self
            .terms
            .values()
            .map(|t| (t.coeff.clone(), render_word(&t.word)))
            .collect();
        f.write_str("[")?;
        f.write_str(&render_sum(&items))?;
        f.write_str("]")
    }
}

/// Formats `Σ c_k w_k` as `w1 - 2 w2 + ...`; `0` for the empty sum.
pub fn render_sum(items: &[(BigInt, String)]) -> String {
    if items.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (k, (c, w)) in items.iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&alloc::format!("{abs} "));
        }
        out.push_str(w);
    }
    out
}

/// Renders a word with `s<i>` / `s<i>^-1` letters, compressing standard
/// pure braids to `A(i,j)` / `A(i,j)^-1`. The empty word renders as `1`.
pub fn render_word(w: &BraidWord) -> String {
    let letters = w.letters();
    if letters.is_empty() {
        return String::from("1");
    }
    let mut parts: Vec<String> = Vec::new();
    let mut pos = 0;
    while pos < letters.len() {
        if let Some((i, j, inverse, len)) = match_pure_braid(&letters[pos..]) {
            parts.push(if inverse {
                alloc::format!("A({i},{j})^-1")
            } else {
                alloc::format!("A({i},{j})")
            });
            pos += len;
            continue;
        }
        let l = letters[pos];
        parts.push(if l > 0 {
            alloc::format!("s{l}")
        } else {
            alloc::format!("s{}^-1", -l)
        });
        pos += 1;
    }
    parts.join(" ")
}

/// Longest `A(i,j)^{±1}` spelled at the start of `letters`.
fn match_pure_braid(letters: &[i32]) -> Option<(usize, usize, bool, usize)> {
    let first = *letters.first()?;
    if first == 0 {
        return None;
    }
    // A(i,j) starts with σ_{j-1} (or σ_i itself when j = i+1).
    let top = first.unsigned_abs() as usize;
    let mut best = None;
    for i in 1..=top {
        let j = top + 1;
        for inverse in [false, true] {
            let core_sign = if inverse { -1 } else { 1 };
            let mut pattern: Vec<i32> = (i + 1..j).rev().map(|k| k as i32).collect();
            pattern.push(core_sign * i as i32);
            pattern.push(core_sign * i as i32);
            pattern.extend((i + 1..j).map(|k| -(k as i32)));
            if letters.starts_with(&pattern) {
                let len = pattern.len();
                if best.is_none_or(|(_, _, _, l)| len > l) {
                    best = Some((i, j, inverse, len));
                }
            }
        }
    }
    best
}
