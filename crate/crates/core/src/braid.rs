//! Braid words and permutations.
//!
//! A [`BraidWord`] is a word in the Artin generators of `B_n`; letter `k`
//! stands for `σ_k` and `-k` for `σ_k⁻¹`. Words compose left to right.
//!
//! The permutation of a braid is the product of the transpositions
//! `(i i+1)` of its letters, composed in word order as functions:
//! `perm(σ_{i_1}⋯σ_{i_k}) = s_{i_1} ∘ ⋯ ∘ s_{i_k}`. Concretely `perm(w)(j)` is
//! the starting position of the strand that ends at position `j`, and
//! `perm(ab) = perm(a) ∘ perm(b)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A word in the Artin generators `σ_1, …, σ_{n-1}` of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// Builds a word from signed generator indices, checking bounds.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::invalid("a braid needs at least one strand"));
        }
        for &l in &letters {
            let k = l.unsigned_abs() as usize;
            if l == 0 || k >= strands {
                return Err(Error::invalid(format!(
                    "letter {l} out of range for B_{strands}"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    /// The single generator `σ_i` (or `σ_i⁻¹` when `i` is negative).
    pub fn generator(strands: usize, i: i32) -> Result<Self> {
        Self::new(strands, alloc::vec![i])
    }

    /// Parses whitespace-separated tokens.
    ///
    /// Accepted tokens: signed integers (`3`, `-2`), `s3` / `s3^-1` / `s3^2`,
    /// and pure braids `A(i,j)` with an optional integer exponent.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::invalid("a braid needs at least one strand"));
        }
        let mut letters = Vec::new();
        for token in tokenize(text) {
            parse_token(&token, strands, &mut letters)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Concatenation of several words with equal strand counts.
    pub fn product<'a>(strands: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<BraidWord> {
        let mut acc = BraidWord::identity(strands);
        for w in words {
            if w.strands != strands {
                return Err(Error::StrandMismatch { left: strands, right: w.strands });
            }
            acc.letters.extend_from_slice(&w.letters);
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self` repeated `k` times; negative `k` repeats the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent `σ_i^{±1} σ_i^{∓1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The underlying permutation, see the module docs for the convention.
    pub fn permutation(&self) -> Permutation {
        // perm(w)(j) = s_{i_1}(s_{i_2}(⋯ s_{i_k}(j))): apply letters right to left.
        let mut images: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            // images ← images ∘ s_i
            images.swap(i, i + 1);
        }
        Permutation { images }
    }

    /// The same letters regarded as a braid on `strands ≥ self.strands()` strands.
    pub fn embed(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::invalid(format!(
                "cannot embed B_{} into B_{strands}",
                self.strands
            )));
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// Shifts every generator index by `offset`, regarding the result as a
    /// braid on `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (l.abs() + offset as i32))
            .collect();
        BraidWord::new(strands, letters)
    }

    /// Linking number of the strand starting (and ending) at `strand`
    /// with all other strands: half the signed count of crossings it takes
    /// part in. Only meaningful when `strand` is a fixed point of the
    /// permutation.
    pub fn strand_linking(&self, strand: usize) -> i64 {
        let mut pos = strand - 1;
        let mut twice = 0i64;
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            if pos == i {
                twice += l.signum() as i64;
                pos = i + 1;
            } else if pos == i + 1 {
                twice += l.signum() as i64;
                pos = i;
            }
        }
        twice / 2
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, self)
    }
}

/// Space-separated signed integers, the same syntax [`BraidWord::parse`] reads.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The standard pure braid `A_{i,j} = σ_{j-1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j-1}⁻¹`.
pub fn pure_braid(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > strands {
        return Err(Error::invalid(format!(
            "A({i},{j}) needs 1 <= i < j <= {strands}"
        )));
    }
    let mut letters = Vec::with_capacity(2 * (j - i));
    letters.extend((i + 1..j).rev().map(|k| k as i32));
    letters.push(i as i32);
    letters.push(i as i32);
    letters.extend((i + 1..j).map(|k| -(k as i32)));
    Ok(BraidWord { strands, letters })
}

/// The positive permutation braid of `p`: every pair of strands crosses at
/// most once and `permutation_braid(p).permutation() == p`.
///
/// Built as the bubble-sort crossing sequence of the strands.
pub fn permutation_braid(p: &Permutation) -> BraidWord {
    let n = p.size();
    // end position of the strand starting at s
    let target = p.inverse().images;
    let mut arr: Vec<usize> = (0..n).collect();
    let mut letters = Vec::new();
    loop {
        let mut swapped = false;
        for pos in 0..n.saturating_sub(1) {
            if target[arr[pos]] > target[arr[pos + 1]] {
                arr.swap(pos, pos + 1);
                letters.push(pos as i32 + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    BraidWord { strands: n.max(1), letters }
}

/// A permutation of `{1, …, size}`.
///
/// Stored 0-based; the public accessors are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation { images: (0..size).collect() }
    }

    /// From 1-based images `[π(1), …, π(size)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::invalid(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    /// The transposition `(a b)` on `size` points, 1-based.
    pub fn transposition(size: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(size);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `π(j)`, 1-based.
    pub fn image(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.size()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x] = j;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &x)| j == x)
    }

    pub fn inversions(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i32 {
        if self.inversions() % 2 == 0 { 1 } else { -1 }
    }

    /// Cycle lengths in non-increasing order (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.size();
        let mut seen = alloc::vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Whether the 1-based range `lo..=hi` is mapped onto itself.
    pub fn preserves_range(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi).all(|j| (lo..=hi).contains(&self.image(j)))
    }

    /// Whether the restriction to the invariant range `lo..=hi` is a single cycle.
    pub fn is_single_cycle_on(&self, lo: usize, hi: usize) -> bool {
        if lo > hi || !self.preserves_range(lo, hi) {
            return false;
        }
        let mut len = 1;
        let mut x = self.image(lo);
        while x != lo {
            x = self.image(x);
            len += 1;
        }
        len == hi - lo + 1
    }

    /// The permutation of `{1..size}` acting as `self` on `offset+1..offset+self.size()`.
    pub fn shifted(&self, offset: usize, size: usize) -> Permutation {
        let mut p = Self::identity(size);
        for (j, &x) in self.images.iter().enumerate() {
            p.images[offset + j] = offset + x;
        }
        p
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One-line notation, e.g. `[2,3,1]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}

fn tokenize(text: &str) -> Vec<String> {
    // Whitespace separates tokens except inside parentheses, so `A(1, 4)` is one token.
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    tokens.push(core::mem::take(&mut current));
                }
            }
            c if c.is_whitespace() => {}
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

fn parse_token(token: &str, strands: usize, out: &mut Vec<i32>) -> Result<()> {
    let err = |reason: &str| Error::Parse { token: token.to_string(), reason: reason.to_string() };
    let (base, exponent) = match token.split_once('^') {
        Some((b, e)) => {
            let e: i64 = e.parse().map_err(|_| err("exponent is not an integer"))?;
            (b, e)
        }
        None => (token, 1),
    };
    let word = if let Some(rest) = base.strip_prefix("A(").or_else(|| base.strip_prefix("a(")) {
        let inner = rest.strip_suffix(')').ok_or_else(|| err("missing `)`"))?;
        let (i, j) = inner.split_once(',').ok_or_else(|| err("expected A(i,j)"))?;
        let i: usize = i.trim().parse().map_err(|_| err("A(i,j) index is not an integer"))?;
        let j: usize = j.trim().parse().map_err(|_| err("A(i,j) index is not an integer"))?;
        pure_braid(i, j, strands).map_err(|_| err("A(i,j) needs 1 <= i < j <= n"))?
    } else {
        let digits = base
            .strip_prefix('s')
            .or_else(|| base.strip_prefix('σ'))
            .unwrap_or(base);
        let k: i64 = digits.parse().map_err(|_| err("not an integer generator"))?;
        if k == 0 {
            return Err(err("generator index 0"));
        }
        if k.unsigned_abs() as usize >= strands {
            return Err(err("generator index out of range"));
        }
        BraidWord { strands, letters: alloc::vec![k as i32] }
    };
    out.extend_from_slice(&word.pow(exponent).letters);
    Ok(())
}
