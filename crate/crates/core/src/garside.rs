//! Garside theory for `B_n`: left normal forms, cycling, summit sets and the
//! conjugacy problem.
//!
//! Simple elements (positive permutation braids) are stored as strand maps:
//! `t[j]` is the end position of the strand that starts at position `j`
//! (0-based). This is the inverse of the permutation returned by
//! [`BraidWord::permutation`], and products read naturally:
//! `(ab).t[j] = b.t[a.t[j]]`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 32;

/// A positive permutation braid (simple element of the Garside structure).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple {
    n: u8,
    t: [u8; MAX_STRANDS],
}

impl Simple {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_STRANDS, "too many strands");
        let mut t = [0u8; MAX_STRANDS];
        for (j, x) in t.iter_mut().enumerate() {
            *x = j as u8;
        }
        Simple { n: n as u8, t }
    }

    /// The half twist `Δ`.
    pub fn delta(n: usize) -> Self {
        let mut s = Self::identity(n);
        for j in 0..n {
            s.t[j] = (n - 1 - j) as u8;
        }
        s
    }

    /// The generator `σ_i`, 1-based.
    pub fn atom(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator index out of range");
        let mut s = Self::identity(n);
        s.t.swap(i - 1, i);
        s
    }

    /// The permutation braid of `p` (same convention as [`BraidWord::permutation`]).
    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.size();
        let mut s = Self::identity(n);
        for (j, &x) in p.zero_based().iter().enumerate() {
            // t = p⁻¹
            s.t[x] = j as u8;
        }
        s
    }

    /// The underlying permutation, in the [`BraidWord::permutation`] convention.
    pub fn permutation(&self) -> Permutation {
        let inv = self.inverse_map();
        Permutation::from_zero_based(inv[..self.n()].iter().map(|&x| x as usize).collect())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// End position of the strand starting at `j` (0-based).
    pub fn end_of(&self, j: usize) -> usize {
        self.t[j] as usize
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|j| self.t[j] as usize == j)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        (0..n).all(|j| self.t[j] as usize == n - 1 - j)
    }

    /// Number of crossings, i.e. word length.
    pub fn length(&self) -> usize {
        let rows = self.crossing_rows();
        rows[..self.n()].iter().map(|r| r.count_ones() as usize).sum()
    }

    fn inverse_map(&self) -> [u8; MAX_STRANDS] {
        let mut inv = self.t;
        for j in 0..self.n() {
            inv[self.t[j] as usize] = j as u8;
        }
        inv
    }

    /// The product `self · other`; only meaningful when it is again simple.
    pub fn then(&self, other: &Simple) -> Simple {
        let mut s = *self;
        for j in 0..self.n() {
            s.t[j] = other.t[self.t[j] as usize];
        }
        s
    }

    /// `self⁻¹ · other`, simple whenever `self ≼ other`.
    pub fn left_div(&self, other: &Simple) -> Simple {
        let inv = self.inverse_map();
        let mut s = *self;
        for j in 0..self.n() {
            s.t[j] = other.t[inv[j] as usize];
        }
        s
    }

    /// `other · self⁻¹`, simple whenever `other ≽ self`.
    pub fn right_div_of(&self, other: &Simple) -> Simple {
        let inv = self.inverse_map();
        let mut s = *self;
        for j in 0..self.n() {
            s.t[j] = inv[other.t[j] as usize];
        }
        s
    }

    /// `∂(a) = a⁻¹Δ`, so that `a · ∂(a) = Δ`.
    pub fn right_complement(&self) -> Simple {
        let n = self.n();
        let inv = self.inverse_map();
        let mut s = *self;
        for j in 0..n {
            s.t[j] = (n - 1) as u8 - inv[j];
        }
        s
    }

    /// `Δa⁻¹`, so that `(Δa⁻¹) · a = Δ`.
    pub fn left_complement(&self) -> Simple {
        let n = self.n();
        let inv = self.inverse_map();
        let mut s = *self;
        for j in 0..n {
            s.t[j] = inv[n - 1 - j];
        }
        s
    }

    /// `τ(a) = Δ⁻¹aΔ`, which sends `σ_i` to `σ_{n-i}`.
    pub fn tau(&self) -> Simple {
        let n = self.n();
        let mut s = *self;
        for j in 0..n {
            s.t[j] = (n - 1) as u8 - self.t[n - 1 - j];
        }
        s
    }

    /// `τ^k`; `τ` is an involution on simple elements.
    pub fn tau_pow(&self, k: i64) -> Simple {
        if k.rem_euclid(2) == 1 { self.tau() } else { *self }
    }

    /// Bit `i` set iff `σ_{i+1} ≼ self`.
    pub fn starting_set(&self) -> u32 {
        let mut mask = 0;
        for i in 0..self.n().saturating_sub(1) {
            if self.t[i] > self.t[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Bit `i` set iff `self ≽ σ_{i+1}`.
    pub fn finishing_set(&self) -> u32 {
        let inv = self.inverse_map();
        let mut mask = 0;
        for i in 0..self.n().saturating_sub(1) {
            if inv[i] > inv[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Row `i` has bit `j > i` set iff the strands starting at `i` and `j` cross.
    fn crossing_rows(&self) -> [u32; MAX_STRANDS] {
        let n = self.n();
        let mut rows = [0u32; MAX_STRANDS];
        for i in 0..n {
            for j in i + 1..n {
                if self.t[i] > self.t[j] {
                    rows[i] |= 1 << j;
                }
            }
        }
        rows
    }

    fn from_crossing_rows(n: usize, rows: &[u32; MAX_STRANDS]) -> Simple {
        let mut s = Self::identity(n);
        let mut crossed_from_left = [0u32; MAX_STRANDS];
        for i in 0..n {
            let mut r = rows[i];
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                crossed_from_left[j] += 1;
                r &= r - 1;
            }
        }
        for i in 0..n {
            s.t[i] = (i as u32 + rows[i].count_ones() - crossed_from_left[i]) as u8;
        }
        s
    }

    fn upper_mask(n: usize, i: usize) -> u32 {
        let below = |k: usize| if k >= 32 { u32::MAX } else { (1u32 << k) - 1 };
        below(n) & !below(i + 1)
    }

    fn close(n: usize, rows: &mut [u32; MAX_STRANDS]) {
        for k in 0..n {
            for i in 0..k {
                if rows[i] >> k & 1 == 1 {
                    rows[i] |= rows[k];
                }
            }
        }
    }

    /// Prefix order: `self ≼ other` iff `other = self · c` with `c` positive.
    pub fn is_prefix_of(&self, other: &Simple) -> bool {
        let a = self.crossing_rows();
        let b = other.crossing_rows();
        (0..self.n()).all(|i| a[i] & !b[i] == 0)
    }

    /// Least common multiple for the prefix order.
    pub fn join(&self, other: &Simple) -> Simple {
        let n = self.n();
        let mut rows = self.crossing_rows();
        let b = other.crossing_rows();
        for i in 0..n {
            rows[i] |= b[i];
        }
        Self::close(n, &mut rows);
        Self::from_crossing_rows(n, &rows)
    }

    /// Greatest common prefix.
    pub fn meet(&self, other: &Simple) -> Simple {
        let n = self.n();
        let a = self.crossing_rows();
        let b = other.crossing_rows();
        let mut rows = [0u32; MAX_STRANDS];
        for i in 0..n {
            let upper = Self::upper_mask(n, i);
            rows[i] = upper & !(a[i] & b[i]);
        }
        Self::close(n, &mut rows);
        for i in 0..n {
            rows[i] = Self::upper_mask(n, i) & !rows[i];
        }
        Self::from_crossing_rows(n, &rows)
    }

    /// A positive word for this simple element.
    pub fn to_word(&self) -> BraidWord {
        crate::braid::permutation_braid(&self.permutation())
    }
}

impl fmt::Debug for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.permutation())
    }
}

/// Incremental left normal form: `Δ^p · factors`, kept left-weighted.
struct Builder {
    n: usize,
    p: i64,
    factors: Vec<Simple>,
}

impl Builder {
    fn new(n: usize, p: i64) -> Self {
        Builder { n, p, factors: Vec::new() }
    }

    fn push(&mut self, s: Simple) {
        if s.is_identity() {
            return;
        }
        if s.is_delta() {
            // XΔ = Δτ(X)
            self.p += 1;
            for f in &mut self.factors {
                *f = f.tau();
            }
            return;
        }
        self.factors.push(s);
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let a = self.factors[k - 1];
            let b = self.factors[k];
            let t = a.right_complement().meet(&b);
            if t.is_identity() {
                break;
            }
            self.factors[k - 1] = a.then(&t);
            self.factors[k] = t.left_div(&b);
            k -= 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.p += leading as i64;
            self.factors.drain(..leading);
        }
    }

    fn finish(self) -> CanonicalForm {
        CanonicalForm { strands: self.n, delta_power: self.p, factors: self.factors }
    }
}

/// Left normal form `Δ^p · x_1 ⋯ x_r`: every `x_k` is a simple element other
/// than `1` and `Δ`, and each pair `(x_k, x_{k+1})` is left-weighted.
///
/// Two braids are equal iff their forms are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Simple>,
}

impl CanonicalForm {
    pub fn identity(strands: usize) -> Self {
        CanonicalForm { strands, delta_power: 0, factors: Vec::new() }
    }

    /// `Δ^p`.
    pub fn delta_pow(strands: usize, p: i64) -> Self {
        CanonicalForm { strands, delta_power: p, factors: Vec::new() }
    }

    pub fn from_simple(s: Simple) -> Self {
        let mut b = Builder::new(s.n(), 0);
        b.push(s);
        b.finish()
    }

    pub fn from_word(w: &BraidWord) -> Result<Self> {
        let n = w.strands();
        if n > MAX_STRANDS {
            return Err(Error::TooManyStrands(n));
        }
        let letters = w.letters();
        let mut negatives_after = letters.iter().filter(|&&l| l < 0).count() as i64;
        let mut b = Builder::new(n, -negatives_after);
        // σ_i⁻¹ = ∂(σ_i)Δ⁻¹; every Δ⁻¹ is moved to the front, applying τ to what it passes.
        for &l in letters {
            let i = l.unsigned_abs() as usize;
            let s = if l > 0 {
                Simple::atom(n, i)
            } else {
                Simple::atom(n, i).right_complement()
            };
            b.push(s.tau_pow(negatives_after));
            if l < 0 {
                negatives_after -= 1;
            }
        }
        Ok(b.finish())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn simples(&self) -> &[Simple] {
        &self.factors
    }

    /// The factors as permutations (in the [`BraidWord::permutation`] convention).
    pub fn factors(&self) -> Vec<Permutation> {
        self.factors.iter().map(Simple::permutation).collect()
    }

    /// Canonical length `r`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// The underlying permutation of the braid.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        let mut perm = Permutation::identity(n);
        if self.delta_power.rem_euclid(2) == 1 {
            perm = Simple::delta(n).permutation();
        }
        for f in &self.factors {
            perm = perm.compose(&f.permutation());
        }
        perm
    }

    /// A word representing this element: `Δ^p` spelled out, then the factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = Simple::delta(n).to_word();
        let mut letters = delta.pow(self.delta_power).letters().to_vec();
        for f in &self.factors {
            letters.extend_from_slice(f.to_word().letters());
        }
        BraidWord::from_letters_unchecked(n.max(1), letters)
    }

    fn check(&self, other: &CanonicalForm) {
        assert_eq!(self.strands, other.strands, "strand count mismatch in braid product");
    }

    /// `τ^k` applied to the element (conjugation by `Δ^k`).
    pub fn tau_pow(&self, k: i64) -> CanonicalForm {
        CanonicalForm {
            strands: self.strands,
            delta_power: self.delta_power,
            factors: self.factors.iter().map(|f| f.tau_pow(k)).collect(),
        }
    }

    pub fn multiply(&self, other: &CanonicalForm) -> CanonicalForm {
        self.check(other);
        // Δ^p X Δ^q Y = Δ^{p+q} τ^q(X) Y
        let q = other.delta_power;
        let mut b = Builder::new(self.strands, self.delta_power + q);
        b.factors = self.factors.iter().map(|f| f.tau_pow(q)).collect();
        for &f in &other.factors {
            b.push(f);
        }
        b.finish()
    }

    /// Right multiplication by a simple element.
    pub fn multiply_simple(&self, s: Simple) -> CanonicalForm {
        let mut b = Builder::new(self.strands, self.delta_power);
        b.factors = self.factors.clone();
        b.push(s);
        b.finish()
    }

    pub fn inverse(&self) -> CanonicalForm {
        // x⁻¹ = ∂(x_r)Δ⁻¹ ⋯ ∂(x_1)Δ⁻¹ Δ^{-p}
        let r = self.factors.len() as i64;
        let p = self.delta_power;
        let mut b = Builder::new(self.strands, -r - p);
        for (k, f) in self.factors.iter().rev().enumerate() {
            let passed = r - k as i64 + p;
            b.push(f.right_complement().tau_pow(passed));
        }
        b.finish()
    }

    pub fn pow(&self, k: i64) -> CanonicalForm {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CanonicalForm::identity(self.strands);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    /// `a⁻¹ · self · a`.
    pub fn conjugate_by(&self, a: &CanonicalForm) -> CanonicalForm {
        a.inverse().multiply(self).multiply(a)
    }

    fn conjugate_by_simple(&self, s: Simple) -> CanonicalForm {
        CanonicalForm::from_simple(s).inverse().multiply(self).multiply_simple(s)
    }

    /// Cycling together with the conjugator `a` such that the result is `a⁻¹ x a`.
    pub fn cycling_with_conjugator(&self) -> (CanonicalForm, CanonicalForm) {
        let Some(&first) = self.factors.first() else {
            return (self.clone(), CanonicalForm::identity(self.strands));
        };
        let a = first.tau_pow(self.delta_power);
        let mut b = Builder::new(self.strands, self.delta_power);
        b.factors = self.factors[1..].to_vec();
        b.push(a);
        (b.finish(), CanonicalForm::from_simple(a))
    }

    /// Cycling: `Δ^p x_2 ⋯ x_r τ^{-p}(x_1)`.
    pub fn cycling(&self) -> CanonicalForm {
        self.cycling_with_conjugator().0
    }

    /// Decycling together with the conjugator `a` such that the result is `a⁻¹ x a`.
    pub fn decycling_with_conjugator(&self) -> (CanonicalForm, CanonicalForm) {
        let Some(&last) = self.factors.last() else {
            return (self.clone(), CanonicalForm::identity(self.strands));
        };
        let r = self.factors.len();
        let mut b = Builder::new(self.strands, self.delta_power);
        b.push(last.tau_pow(self.delta_power));
        for &f in &self.factors[..r - 1] {
            b.push(f);
        }
        (b.finish(), CanonicalForm::from_simple(last).inverse())
    }

    /// Decycling: `Δ^p τ^p(x_r) x_1 ⋯ x_{r-1}`.
    pub fn decycling(&self) -> CanonicalForm {
        self.decycling_with_conjugator().0
    }
}

impl Mul for &CanonicalForm {
    type Output = CanonicalForm;
    fn mul(self, rhs: &CanonicalForm) -> CanonicalForm {
        self.multiply(rhs)
    }
}

/// Total order: strand count, `Δ`-power, number of factors, then the factors
/// lexicographically.
impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.strands
            .cmp(&other.strands)
            .then(self.delta_power.cmp(&other.delta_power))
            .then(self.factors.len().cmp(&other.factors.len()))
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `Δ^p | f1 | f2 | ...`, factors in one-line notation.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_power)?;
        for s in &self.factors {
            write!(f, " | {}", s.permutation())?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}<{}>", self.strands, self)
    }
}

/// Left normal form of a word.
pub fn normal_form(a: &BraidWord) -> Result<CanonicalForm> {
    CanonicalForm::from_word(a)
}

/// Word problem.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    Ok(normal_form(a)? == normal_form(b)?)
}

/// Whether some power `a^n` or `a^{n-1}` is a power of the full twist `Δ²`.
pub fn is_periodic(a: &BraidWord) -> Result<bool> {
    Ok(is_periodic_form(&normal_form(a)?))
}

pub fn is_periodic_form(x: &CanonicalForm) -> bool {
    let n = x.strands() as i64;
    if n <= 1 {
        return true;
    }
    [n, n - 1].iter().any(|&k| {
        let y = x.pow(k);
        y.factors.is_empty() && y.delta_power % 2 == 0
    })
}

/// Which summit set to use as the conjugacy-class invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SummitKind {
    /// Maximal infimum and minimal supremum.
    Super,
    /// The part of the super summit set lying on closed cycling orbits.
    Ultra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SummitConfig {
    pub kind: SummitKind,
    /// Maximum number of super summit elements explored before giving up.
    pub budget: usize,
}

impl Default for SummitConfig {
    fn default() -> Self {
        SummitConfig { kind: SummitKind::Ultra, budget: 100_000 }
    }
}

/// A summit set of a conjugacy class together with conjugators.
///
/// For every stored element `e_k` the conjugator `g_k` satisfies
/// `e_k = g_k⁻¹ · x · g_k`, where `x` is the braid the set was built from.
#[derive(Clone, Debug)]
pub struct SummitSet {
    kind: SummitKind,
    elements: Vec<CanonicalForm>,
    conjugators: Vec<CanonicalForm>,
    index: BTreeMap<CanonicalForm, usize>,
}

impl SummitSet {
    pub fn kind(&self) -> SummitKind {
        self.kind
    }

    pub fn elements(&self) -> &[CanonicalForm] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &CanonicalForm) -> bool {
        self.index.contains_key(x)
    }

    /// The conjugator `g` with `x = g⁻¹ · input · g`, if `x` is stored.
    pub fn conjugator_to(&self, x: &CanonicalForm) -> Option<&CanonicalForm> {
        self.index.get(x).map(|&k| &self.conjugators[k])
    }

    /// Least element under the [`CanonicalForm`] order.
    pub fn minimum(&self) -> &CanonicalForm {
        self.elements.iter().min().expect("summit sets are never empty")
    }
}

/// Conjugates `x` into its super summit set by iterated cycling and
/// decycling. Returns `(y, h)` with `y = h⁻¹ x h`.
pub fn reach_super_summit(x: &CanonicalForm) -> (CanonicalForm, CanonicalForm) {
    let n = x.strands();
    let bound = (n * n.saturating_sub(1) / 2).max(1);
    let mut y = x.clone();
    let mut h = CanonicalForm::identity(n);
    'inf: loop {
        if y.factors.is_empty() {
            return (y, h);
        }
        let (mut z, mut g) = (y.clone(), h.clone());
        for _ in 0..bound {
            let (z2, c) = z.cycling_with_conjugator();
            g = g.multiply(&c);
            z = z2;
            if z.inf() > y.inf() {
                y = z;
                h = g;
                continue 'inf;
            }
        }
        break;
    }
    'sup: loop {
        if y.factors.is_empty() {
            return (y, h);
        }
        let (mut z, mut g) = (y.clone(), h.clone());
        for _ in 0..bound {
            let (z2, c) = z.decycling_with_conjugator();
            g = g.multiply(&c);
            z = z2;
            if z.sup() < y.sup() {
                y = z;
                h = g;
                continue 'sup;
            }
        }
        break;
    }
    (y, h)
}

/// Iterates cycling from a super summit element until the orbit closes.
/// Returns an ultra summit element `y = h⁻¹ x h`.
pub fn reach_ultra_summit(x: &CanonicalForm) -> (CanonicalForm, CanonicalForm) {
    let (mut y, mut h) = reach_super_summit(x);
    let mut seen: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
    while seen.insert(y.clone(), ()).is_none() {
        let (z, c) = y.cycling_with_conjugator();
        h = h.multiply(&c);
        y = z;
    }
    (y, h)
}

/// Smallest `c` with `τ^q(ρ) ≼ W ρ c`, where `Δ^q W` is a normal form.
fn remainder(q: i64, w: &[Simple], rho: Simple) -> Simple {
    let mut a = rho.tau_pow(q);
    for f in w.iter().chain(core::iter::once(&rho)) {
        if a.is_identity() {
            break;
        }
        a = f.left_div(&f.join(&a));
    }
    a
}

/// The minimal simple `ρ ≽ s` such that `ρ⁻¹ y ρ` stays in the super summit
/// set (`y` and `y_inv = y⁻¹` must already be super summit elements).
fn minimal_simple(y: &CanonicalForm, y_inv: &CanonicalForm, s: Simple) -> Simple {
    let mut rho = s;
    loop {
        let c = remainder(y.delta_power, &y.factors, rho);
        if !c.is_identity() {
            rho = rho.then(&c);
            continue;
        }
        let c = remainder(y_inv.delta_power, &y_inv.factors, rho);
        if !c.is_identity() {
            rho = rho.then(&c);
            continue;
        }
        return rho;
    }
}

/// The neighbours of a super summit element under conjugation by minimal
/// simple elements, one per generator (duplicates removed).
fn summit_moves(y: &CanonicalForm) -> Vec<Simple> {
    let n = y.strands();
    let y_inv = y.inverse();
    let mut out: BTreeSet<Simple> = BTreeSet::new();
    for i in 1..n {
        out.insert(minimal_simple(y, &y_inv, Simple::atom(n, i)));
    }
    out.into_iter().collect()
}

/// The super or ultra summit set of the conjugacy class of `x`, with
/// conjugators from `x`.
pub fn summit_set_of(x: &CanonicalForm, config: &SummitConfig) -> Result<SummitSet> {
    let (root, h) = reach_super_summit(x);
    let mut elements = alloc::vec![root.clone()];
    let mut conjugators = alloc::vec![h];
    let mut index = BTreeMap::new();
    index.insert(root, 0usize);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let y = elements[k].clone();
        if y.factors.is_empty() {
            continue;
        }
        for rho in summit_moves(&y) {
            let z = y.conjugate_by_simple(rho);
            if index.contains_key(&z) {
                continue;
            }
            if elements.len() >= config.budget {
                return Err(Error::Budget { what: "summit set", budget: config.budget });
            }
            let g = conjugators[k].multiply_simple(rho);
            index.insert(z.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(z);
            conjugators.push(g);
        }
    }
    let sss = SummitSet { kind: SummitKind::Super, elements, conjugators, index };
    Ok(match config.kind {
        SummitKind::Super => sss,
        SummitKind::Ultra => ultra_subset(sss),
    })
}

fn ultra_subset(sss: SummitSet) -> SummitSet {
    // Cycling maps the super summit set to itself; keep the periodic points.
    let next: Vec<usize> = sss
        .elements
        .iter()
        .map(|e| sss.index[&e.cycling()])
        .collect();
    let len = next.len();
    let mut on_cycle = alloc::vec![false; len];
    let mut state = alloc::vec![0u8; len]; // 0 unvisited, 1 on stack, 2 done
    for start in 0..len {
        if state[start] != 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            path.push(v);
            v = next[v];
        }
        if state[v] == 1 {
            let pos = path.iter().position(|&u| u == v).unwrap();
            for &u in &path[pos..] {
                on_cycle[u] = true;
            }
        }
        for &u in &path {
            state[u] = 2;
        }
    }
    let mut elements = Vec::new();
    let mut conjugators = Vec::new();
    let mut index = BTreeMap::new();
    for (k, (e, g)) in sss.elements.into_iter().zip(sss.conjugators).enumerate() {
        if on_cycle[k] {
            index.insert(e.clone(), elements.len());
            elements.push(e);
            conjugators.push(g);
        }
    }
    SummitSet { kind: SummitKind::Ultra, elements, conjugators, index }
}

pub fn summit_set(a: &BraidWord, config: &SummitConfig) -> Result<SummitSet> {
    summit_set_of(&normal_form(a)?, config)
}

fn reach(x: &CanonicalForm, kind: SummitKind) -> (CanonicalForm, CanonicalForm) {
    match kind {
        SummitKind::Super => reach_super_summit(x),
        SummitKind::Ultra => reach_ultra_summit(x),
    }
}

fn cheap_invariants_differ(a: &CanonicalForm, b: &CanonicalForm) -> bool {
    let exp = |x: &CanonicalForm| {
        let n = x.strands() as i64;
        x.delta_power * n * (n - 1) / 2 + x.factors.iter().map(|f| f.length() as i64).sum::<i64>()
    };
    exp(a) != exp(b) || a.permutation().cycle_type() != b.permutation().cycle_type()
}

/// Conjugacy test on normal forms. Returns `w` with `w a w⁻¹ = b`.
pub fn conjugate_test_forms(
    a: &CanonicalForm,
    b: &CanonicalForm,
    config: &SummitConfig,
) -> Result<Option<CanonicalForm>> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    if cheap_invariants_differ(a, b) {
        return Ok(None);
    }
    let (b_top, h) = reach(b, config.kind);
    let (a_top, _) = reach_super_summit(a);
    if a_top.inf() != b_top.inf() || a_top.sup() != b_top.sup() {
        return Ok(None);
    }
    let set = summit_set_of(a, config)?;
    Ok(set.conjugator_to(&b_top).map(|g| {
        // b_top = g⁻¹ a g = h⁻¹ b h
        h.multiply(&g.inverse())
    }))
}

/// Returns a conjugator `w` with `w a w⁻¹ = b`, or `None` when the braids
/// are not conjugate.
pub fn conjugate_test(a: &BraidWord, b: &BraidWord, config: &SummitConfig) -> Result<Option<BraidWord>> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    let found = conjugate_test_forms(&normal_form(a)?, &normal_form(b)?, config)?;
    Ok(found.map(|w| w.to_word()))
}

/// The least element of the summit set: a canonical key for the conjugacy class.
pub fn class_representative(a: &BraidWord, config: &SummitConfig) -> Result<CanonicalForm> {
    Ok(summit_set(a, config)?.minimum().clone())
}

/// Memoizing class-representative computation.
///
/// Every summit element seen is remembered, so later members of a known
/// class are resolved after a single walk into the summit set.
#[derive(Clone, Debug)]
pub struct ConjugacyCache {
    config: SummitConfig,
    known: BTreeMap<CanonicalForm, CanonicalForm>,
}

impl ConjugacyCache {
    pub fn new(config: SummitConfig) -> Self {
        ConjugacyCache { config, known: BTreeMap::new() }
    }

    pub fn config(&self) -> &SummitConfig {
        &self.config
    }

    pub fn representative(&mut self, x: &CanonicalForm) -> Result<CanonicalForm> {
        if let Some(r) = self.known.get(x) {
            return Ok(r.clone());
        }
        let (y, _) = reach_super_summit(x);
        if let Some(r) = self.known.get(&y).cloned() {
            self.known.insert(x.clone(), r.clone());
            return Ok(r);
        }
        let sss = summit_set_of(
            &y,
            &SummitConfig { kind: SummitKind::Super, budget: self.config.budget },
        )?;
        let rep = match self.config.kind {
            SummitKind::Super => sss.minimum().clone(),
            SummitKind::Ultra => ultra_subset(sss.clone()).minimum().clone(),
        };
        for e in sss.elements {
            self.known.insert(e, rep.clone());
        }
        self.known.insert(x.clone(), rep.clone());
        Ok(rep)
    }

    /// Absorbs the entries of another cache built with the same configuration.
    pub fn merge(&mut self, other: ConjugacyCache) {
        self.known.extend(other.known);
    }
}

impl fmt::Display for SummitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SummitKind::Super => "super",
            SummitKind::Ultra => "ultra",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn nf(n: usize, letters: &[i32]) -> CanonicalForm {
        normal_form(&word(n, letters)).unwrap()
    }

    fn all_simples(n: usize) -> Vec<Simple> {
        fn rec(n: usize, prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Simple>) {
            if prefix.len() == n {
                let imgs: Vec<usize> = prefix.iter().map(|x| x + 1).collect();
                out.push(Simple::from_permutation(&Permutation::from_images(&imgs).unwrap()));
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(n, prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    // a ≼ b by definition: a⁻¹b is a permutation braid and lengths add up.
    fn prefix_by_length(a: &Simple, b: &Simple) -> bool {
        a.length() + a.left_div(b).length() == b.length()
    }

    #[test]
    fn simple_basics() {
        let n = 4;
        let d = Simple::delta(n);
        assert_eq!(d.length(), 6);
        assert!(d.right_complement().is_identity());
        assert_eq!(Simple::atom(n, 1).tau(), Simple::atom(n, 3));
        for s in all_simples(n) {
            assert_eq!(s.then(&s.right_complement()), d);
            assert_eq!(s.left_complement().then(&s), d);
            assert_eq!(s.tau().tau(), s);
            assert_eq!(Simple::from_permutation(&s.permutation()), s);
            assert_eq!(s.to_word().len(), s.length());
            assert_eq!(normal_form(&s.to_word()).unwrap(), CanonicalForm::from_simple(s));
        }
    }

    #[test]
    fn lattice_operations_agree_with_definitions() {
        for n in 2..=5 {
            let all = all_simples(n);
            for a in &all {
                for b in &all {
                    assert_eq!(a.is_prefix_of(b), prefix_by_length(a, b), "{a:?} {b:?}");
                }
            }
            // meet and join checked against brute force on a sample (all pairs for n ≤ 4)
            let step = if n <= 4 { 1 } else { 7 };
            for a in all.iter().step_by(step) {
                for b in all.iter().step_by(step) {
                    let m = a.meet(b);
                    let j = a.join(b);
                    assert!(m.is_prefix_of(a) && m.is_prefix_of(b));
                    assert!(a.is_prefix_of(&j) && b.is_prefix_of(&j));
                    for c in &all {
                        if c.is_prefix_of(a) && c.is_prefix_of(b) {
                            assert!(c.is_prefix_of(&m));
                        }
                        if a.is_prefix_of(c) && b.is_prefix_of(c) {
                            assert!(j.is_prefix_of(c));
                        }
                    }
                }
            }
            for a in &all {
                let s = a.starting_set();
                let f = a.finishing_set();
                for i in 1..n {
                    let at = Simple::atom(n, i);
                    assert_eq!(s >> (i - 1) & 1 == 1, at.is_prefix_of(a));
                    let ends = a.then(&Simple::identity(n));
                    let right = at.right_div_of(&ends);
                    assert_eq!(f >> (i - 1) & 1 == 1, right.length() + 1 == a.length());
                }
            }
        }
    }

    #[test]
    fn normal_form_examples() {
        assert!(nf(3, &[1, -1]).is_identity());
        let d = nf(3, &[1, 2, 1]);
        assert_eq!(d.delta_power(), 1);
        assert!(d.simples().is_empty());
        assert_eq!(nf(3, &[1, 2, 1]), nf(3, &[2, 1, 2]));
        assert_eq!(nf(5, &[1, 3]), nf(5, &[3, 1]));
        assert_ne!(nf(3, &[1]), nf(3, &[2]));
        let x = nf(3, &[1, -2]);
        assert_eq!(x.delta_power(), -1);
        assert_eq!(x.canonical_length(), 2);
        assert_eq!(format!("{}", nf(3, &[1])), "Δ^0 | [2,1,3]");
        assert_eq!(format!("{}", nf(3, &[-1, -2, -1])), "Δ^-1");
    }

    #[test]
    fn normal_form_is_left_weighted() {
        let w = word(5, &[1, 2, -3, 4, 4, -1, 2, 3, -2, 1, 1, -4, 3]);
        let x = normal_form(&w).unwrap();
        for pair in x.simples().windows(2) {
            assert_eq!(pair[0].finishing_set() & pair[1].starting_set(), pair[1].starting_set());
            assert!(!pair[0].is_identity() && !pair[0].is_delta());
        }
        assert_eq!(normal_form(&x.to_word()).unwrap(), x);
        assert_eq!(x.permutation(), w.permutation());
    }

    #[test]
    fn inverse_and_product() {
        let a = nf(4, &[1, -2, 3, 3, -1, 2]);
        let b = nf(4, &[-3, 2, 2, 1, -2]);
        assert!(a.multiply(&a.inverse()).is_identity());
        assert!(a.inverse().multiply(&a).is_identity());
        let ab = nf(4, &[1, -2, 3, 3, -1, 2, -3, 2, 2, 1, -2]);
        assert_eq!(a.multiply(&b), ab);
        assert_eq!(a.pow(3), a.multiply(&a).multiply(&a));
        assert_eq!(a.pow(-2), a.inverse().multiply(&a.inverse()));
    }

    #[test]
    fn cycling_and_decycling_conjugate() {
        let x = nf(4, &[1, 2, -3, 1, 2, 2, -1, 3]);
        let (c, a) = x.cycling_with_conjugator();
        assert_eq!(c, x.conjugate_by(&a));
        let (d, b) = x.decycling_with_conjugator();
        assert_eq!(d, x.conjugate_by(&b));
        let delta2 = CanonicalForm::delta_pow(4, 2);
        assert_eq!(delta2.cycling(), delta2);
        assert_eq!(delta2.decycling(), delta2);
    }

    #[test]
    fn summit_sets_small() {
        let cfg = SummitConfig::default();
        let id = summit_set(&BraidWord::identity(3), &cfg).unwrap();
        assert_eq!(id.elements(), &[CanonicalForm::identity(3)]);
        let d2 = summit_set(&word(3, &[1, 2, 1, 1, 2, 1]), &cfg).unwrap();
        assert_eq!(d2.len(), 1);
        let s1 = summit_set(&word(3, &[1]), &SummitConfig { kind: SummitKind::Super, ..cfg }).unwrap();
        let mut got: Vec<_> = s1.elements().to_vec();
        got.sort();
        let mut want = vec![nf(3, &[1]), nf(3, &[2])];
        want.sort();
        assert_eq!(got, want);
        for e in s1.elements() {
            let g = s1.conjugator_to(e).unwrap();
            assert_eq!(&nf(3, &[1]).conjugate_by(g), e);
        }
    }

    #[test]
    fn conjugacy_examples() {
        let cfg = SummitConfig::default();
        let (a, b) = (word(3, &[1]), word(3, &[2]));
        let w = conjugate_test(&a, &b, &cfg).unwrap().unwrap();
        let lhs = w.concat(&a).unwrap().concat(&w.inverse()).unwrap();
        assert!(equal(&lhs, &b).unwrap());
        assert!(conjugate_test(&a, &word(3, &[-1]), &cfg).unwrap().is_none());
        assert_eq!(
            class_representative(&a, &cfg).unwrap(),
            class_representative(&b, &cfg).unwrap()
        );
        assert!(class_representative(&BraidWord::identity(4), &cfg).unwrap().is_identity());
    }

    #[test]
    fn budget_is_reported() {
        let cfg = SummitConfig { kind: SummitKind::Super, budget: 1 };
        let r = summit_set(&word(4, &[1, 2, 3]), &cfg);
        assert!(matches!(r, Err(Error::Budget { budget: 1, .. })));
    }

    #[test]
    fn periodicity() {
        assert!(is_periodic(&word(3, &[1, 2, 1, 1, 2, 1])).unwrap());
        assert!(is_periodic(&word(3, &[1, 2])).unwrap());
        assert!(is_periodic(&word(4, &[1, 2, 3, 1])).unwrap());
        assert!(!is_periodic(&word(3, &[1, -2])).unwrap());
        assert!(!is_periodic(&word(3, &[1, 1])).unwrap());
        assert!(is_periodic(&word(2, &[1])).unwrap());
    }
}
