//! The representation `ζ_{n,m}` of `B_n` by matrices over `ℤB_{n+m}`.
//!
//! The basis is the set `E_{n,m}` of compositions `μ = (μ_1, …, μ_{n-1})`
//! of `m`. Matrices act on row vectors: `μ · ζ(σ_i) = Σ_ν c_{μν} ν`, so the
//! matrix of a word is the ordered product of its generator matrices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braid::{permutation_braid, pure_braid, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::groupring::GroupRingElement;

/// An element `μ` of the basis `E_{n,m}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    n: usize,
    m: usize,
    parts: Vec<usize>,
}

impl Composition {
    /// `parts` must have `n - 1` entries summing to `m`.
    pub fn new(n: usize, parts: Vec<usize>) -> Result<Self> {
        if n < 2 || parts.len() != n - 1 {
            return Err(Error::invalid(format!(
                "a composition for n = {n} needs {} parts",
                n.saturating_sub(1)
            )));
        }
        let m = parts.iter().sum();
        Ok(Composition { n, m, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `μ_k` for `1 ≤ k ≤ n-1`, and `0` outside that range.
    pub fn part(&self, k: usize) -> usize {
        if k >= 1 && k < self.n { self.parts[k - 1] } else { 0 }
    }

    /// Suffix sum `u_j = Σ_{k ≥ j} μ_k`, so `u_0 = u_1 = m` and `u_n = 0`.
    pub fn suffix(&self, j: usize) -> usize {
        (j.max(1)..self.n).map(|k| self.parts[k - 1]).sum()
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All compositions of `m` into `n - 1` parts, in colexicographic order
/// (compare the last part first).
pub fn basis(n: usize, m: usize) -> Result<Vec<Composition>> {
    if n < 2 {
        return Err(Error::invalid(format!("the basis E_(n,m) needs n >= 2, got {n}")));
    }
    fn rec(slots: usize, m: usize, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        // fill parts from the last one, smallest value first
        if slots == 1 {
            let mut parts = Vec::with_capacity(suffix.len() + 1);
            parts.push(m);
            parts.extend(suffix.iter().rev());
            out.push(parts);
            return;
        }
        for last in 0..=m {
            suffix.push(last);
            rec(slots - 1, m - last, suffix, out);
            suffix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n - 1, m, &mut Vec::new(), &mut raw);
    Ok(raw.into_iter().map(|parts| Composition { n, m, parts }).collect())
}

/// `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, j| acc * (n - j) / (j + 1))
}

/// `θ_{i,j,k,l} ∈ Σ_m`: sends `i+1, …, l` in order to
/// `k+1, …, l, k, k-1, …, j+1, i+1, …, j` and fixes everything else.
pub fn theta_perm(i: usize, j: usize, k: usize, l: usize, m: usize) -> Result<Permutation> {
    if !(i <= j && j <= k && k <= l && l <= m) {
        return Err(Error::invalid(format!(
            "theta({i},{j},{k},{l}) needs i <= j <= k <= l <= m = {m}"
        )));
    }
    let mut images: Vec<usize> = (1..=m).collect();
    let targets = (k + 1..=l).chain((j + 1..=k).rev()).chain(i + 1..=j);
    for (src, dst) in (i + 1..=l).zip(targets) {
        images[src - 1] = dst;
    }
    Permutation::from_images(&images)
}

/// `Θ_{j,k,l}`: permutations fixing everything outside `j+1..=l` that are
/// increasing on `j+1..=k` and on `k+1..=l`.
pub fn theta_set(j: usize, k: usize, l: usize, m: usize) -> Result<Vec<Permutation>> {
    if !(j <= k && k <= l && l <= m) {
        return Err(Error::invalid(format!("Theta({j},{k},{l}) needs j <= k <= l <= m = {m}")));
    }
    let first = k - j;
    let width = l - j;
    let mut out = Vec::new();
    // choose the images of j+1..=k as a subset of j+1..=l
    let mut chosen: Vec<usize> = Vec::with_capacity(first);
    fn rec(
        start: usize,
        width: usize,
        first: usize,
        j: usize,
        m: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if chosen.len() == first {
            let mut images: Vec<usize> = (1..=m).collect();
            let rest: Vec<usize> = (0..width).filter(|x| !chosen.contains(x)).collect();
            for (idx, &c) in chosen.iter().chain(rest.iter()).enumerate() {
                images[j + idx] = j + c + 1;
            }
            out.push(Permutation::from_images(&images).expect("shuffle is a permutation"));
            return;
        }
        for c in start..width {
            chosen.push(c);
            rec(c + 1, width, first, j, m, chosen, out);
            chosen.pop();
        }
    }
    rec(0, width, first, j, m, &mut chosen, &mut out);
    Ok(out)
}

/// Which power of a permutation braid to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// The positive permutation braid `α_η` acting on the last `m` of `n + m`
/// strands: the strand starting at position `n + j` ends at `n + η(j)`.
pub fn alpha_word(eta: &Permutation, n: usize) -> BraidWord {
    let m = eta.size();
    let shifted = eta.inverse().shifted(n, n + m);
    let w = permutation_braid(&shifted);
    BraidWord::from_letters_unchecked(n + m, w.letters().to_vec())
}

fn eta_term(eta: &Permutation, sign: Sign, n: usize) -> (i64, BraidWord) {
    let a = alpha_word(eta, n);
    let w = match sign {
        Sign::Plus => a,
        Sign::Minus => a.inverse(),
    };
    (eta.sign() as i64, w)
}

/// `η^± = sgn η · α_η^{±1}` in `ℤB_{n+m}`.
pub fn eta_signed(eta: &Permutation, sign: Sign, n: usize, m: usize) -> Result<GroupRingElement> {
    if eta.size() != m {
        return Err(Error::invalid(format!("eta has size {}, expected {m}", eta.size())));
    }
    let (c, w) = eta_term(eta, sign, n);
    GroupRingElement::from_word(&w, c)
}

/// Sum of signed words; multiplied out lazily as lists of terms.
type Terms = Vec<(i64, BraidWord)>;

fn times(left: &Terms, right: &Terms) -> Terms {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for (a, wa) in left {
        for (b, wb) in right {
            out.push((a * b, wa.concat(wb).expect("equal strand counts")));
        }
    }
    out
}

fn single(w: BraidWord) -> Terms {
    alloc::vec![(1, w)]
}

fn theta_sum(j: usize, k: usize, l: usize, n: usize, m: usize) -> Terms {
    theta_set(j, k, l, m)
        .expect("indices ordered by the non-vanishing condition")
        .iter()
        .map(|eta| eta_term(eta, Sign::Plus, n))
        .collect()
}

fn a_product(i: usize, lo: usize, hi: usize, n: usize, m: usize) -> BraidWord {
    let mut letters = Vec::new();
    for k in lo..=hi {
        letters.extend_from_slice(pure_braid(i, n + k, n + m).expect("valid pure braid").letters());
    }
    BraidWord::from_letters_unchecked(n + m, letters)
}

/// Whether `c^{(i)}_{μν}` (equivalently `d^{(i)}_{μν}`) can be nonzero.
fn entry_allowed(i: usize, mu: &Composition, nu: &Composition) -> bool {
    let n = mu.n;
    (1..n).all(|k| {
        if k + 1 == i || k == i + 1 {
            mu.part(k) <= nu.part(k)
        } else if k == i {
            true
        } else {
            mu.part(k) == nu.part(k)
        }
    })
}

/// The entry of `ζ_{n,m}(σ_i^{±1})` in row `μ`, column `ν`, as signed words.
fn entry_terms(i: usize, sign: Sign, mu: &Composition, nu: &Composition) -> Terms {
    let (n, m) = (mu.n, mu.m);
    let strands = n + m;
    if !entry_allowed(i, mu, nu) {
        return Vec::new();
    }
    let u = |j: usize| mu.suffix(j);
    let v = |j: usize| nu.suffix(j);
    let eps: i64 = if nu.part(i) % 2 == 0 { 1 } else { -1 };
    let outer = theta_sum(v(i), u(i), v(i - 1), n, m);
    let inner = theta_sum(v(i + 2), u(i + 1), v(i + 1), n, m);
    let tail = times(&outer, &inner);
    match sign {
        Sign::Plus => {
            let mut head = BraidWord::from_letters_unchecked(strands, alloc::vec![i as i32]);
            head = head.concat(&a_product(i, u(i + 1) + 1, v(i), n, m)).unwrap();
            let th = theta_perm(v(i + 1), v(i + 1), v(i), v(i), m).expect("ordered");
            let (s, w) = eta_term(&th, Sign::Plus, n);
            let head = alloc::vec![(eps * s, head.concat(&w).unwrap())];
            times(&head, &tail)
        }
        Sign::Minus => {
            // θ⁻ is taken as the inverse of α_{θ⁻¹}, which moves the last
            // strands by θ. With α_θ⁻¹ instead, ζ(σ_i⁻¹) fails to invert
            // ζ(σ_i) once m ≥ 3; the two agree for m ≤ 2.
            let th = theta_perm(u(i + 1), v(i + 1), v(i), u(i), m).expect("ordered").inverse();
            let (s, w) = eta_term(&th, Sign::Minus, n);
            let head = w.concat(&a_product(i, v(i + 1) + 1, u(i), n, m).inverse()).unwrap();
            let head = alloc::vec![(eps * s, head)];
            let last = single(BraidWord::from_letters_unchecked(strands, alloc::vec![-(i as i32)]));
            times(&times(&head, &tail), &last)
        }
    }
}

/// A square matrix over `ℤB_{n+m}` indexed by `E_{n,m}`.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix {
    n: usize,
    m: usize,
    dim: usize,
    entries: BTreeMap<(usize, usize), GroupRingElement>,
}

impl RepMatrix {
    pub fn identity(n: usize, m: usize) -> Result<Self> {
        let dim = basis(n, m)?.len();
        let mut entries = BTreeMap::new();
        for r in 0..dim {
            entries.insert((r, r), GroupRingElement::one(n + m));
        }
        Ok(RepMatrix { n, m, dim, entries })
    }

    pub fn zero(n: usize, m: usize) -> Result<Self> {
        let dim = basis(n, m)?.len();
        Ok(RepMatrix { n, m, dim, entries: BTreeMap::new() })
    }

    /// Builds a matrix from explicit entries (zero entries are dropped).
    pub fn from_entries(
        n: usize,
        m: usize,
        entries: impl IntoIterator<Item = ((usize, usize), GroupRingElement)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n, m)?;
        for ((r, c), e) in entries {
            if r >= out.dim || c >= out.dim {
                return Err(Error::invalid(format!("entry ({r},{c}) outside a {0}x{0} matrix", out.dim)));
            }
            if e.strands() != n + m {
                return Err(Error::StrandMismatch { left: n + m, right: e.strands() });
            }
            if !e.is_zero() {
                out.entries.insert((r, c), e);
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn strands(&self) -> usize {
        self.n + self.m
    }

    pub fn entry(&self, row: usize, col: usize) -> GroupRingElement {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| GroupRingElement::zero(self.n + self.m))
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &GroupRingElement)> {
        self.entries.iter()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    pub fn mul(&self, other: &RepMatrix) -> Result<RepMatrix> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(Error::invalid("matrices for different (n, m)"));
        }
        let mut out: BTreeMap<(usize, usize), GroupRingElement> = BTreeMap::new();
        for (&(r, k), a) in &self.entries {
            for (&(_, c), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                let prod = a.mul(b)?;
                let slot = out
                    .entry((r, c))
                    .or_insert_with(|| GroupRingElement::zero(self.n + self.m));
                *slot = slot.add(&prod)?;
            }
        }
        out.retain(|_, e| !e.is_zero());
        Ok(RepMatrix { n: self.n, m: self.m, dim: self.dim, entries: out })
    }

    /// Sum of diagonal entries, before any projection to conjugacy classes.
    pub fn trace(&self) -> GroupRingElement {
        let mut acc = GroupRingElement::zero(self.n + self.m);
        for r in 0..self.dim {
            if let Some(e) = self.entries.get(&(r, r)) {
                acc = acc.add(e).expect("same strand count");
            }
        }
        acc
    }

    /// Transpose with the involution applied entrywise.
    pub fn dual(&self) -> RepMatrix {
        let entries = self.entries.iter().map(|(&(r, c), e)| ((c, r), e.involution())).collect();
        RepMatrix { n: self.n, m: self.m, dim: self.dim, entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.len() == self.dim
            && (0..self.dim).all(|r| {
                self.entries.get(&(r, r)) == Some(&GroupRingElement::one(self.n + self.m))
            })
    }

    /// Row-major dump, one row per line, entries separated by ` ; `.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| format!("{}", self.entry(r, c))).collect();
            out.push_str(&row.join(" ; "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMatrix(n={}, m={})\n{}", self.n, self.m, self.dump())
    }
}

/// The matrix of `ζ_{n,m}(σ_i^{±1})`.
pub fn gen_matrix(n: usize, m: usize, i: usize, sign: Sign) -> Result<RepMatrix> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::invalid(format!("generator index {i} out of range for B_{n}")));
    }
    let b = basis(n, m)?;
    let mut entries = BTreeMap::new();
    for (r, mu) in b.iter().enumerate() {
        for (c, nu) in b.iter().enumerate() {
            let terms = entry_terms(i, sign, mu, nu);
            if terms.is_empty() {
                continue;
            }
            let e = GroupRingElement::from_terms(n + m, terms.iter().map(|(k, w)| (*k, w)))?;
            if !e.is_zero() {
                entries.insert((r, c), e);
            }
        }
    }
    Ok(RepMatrix { n, m, dim: b.len(), entries })
}

/// `ζ_{n,m}` with its generator matrices computed once.
#[derive(Clone, Debug)]
pub struct Zeta {
    n: usize,
    m: usize,
    plus: Vec<RepMatrix>,
    minus: Vec<RepMatrix>,
}

impl Zeta {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("ζ_(n,m) needs n >= 2, got {n}")));
        }
        let mut plus = Vec::with_capacity(n - 1);
        let mut minus = Vec::with_capacity(n - 1);
        for i in 1..n {
            plus.push(gen_matrix(n, m, i, Sign::Plus)?);
            minus.push(gen_matrix(n, m, i, Sign::Minus)?);
        }
        Ok(Zeta { n, m, plus, minus })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generator(&self, letter: i32) -> &RepMatrix {
        let i = letter.unsigned_abs() as usize;
        if letter > 0 { &self.plus[i - 1] } else { &self.minus[i - 1] }
    }

    /// The ordered product of generator matrices along the word.
    pub fn rep(&self, a: &BraidWord) -> Result<RepMatrix> {
        if a.strands() != self.n {
            return Err(Error::StrandMismatch { left: self.n, right: a.strands() });
        }
        let mut acc = RepMatrix::identity(self.n, self.m)?;
        for &l in a.letters() {
            acc = acc.mul(self.generator(l))?;
        }
        Ok(acc)
    }
}

/// `ζ_{n,m}(a)` for a word in `B_n`.
pub fn rep(a: &BraidWord, m: usize) -> Result<RepMatrix> {
    Zeta::new(a.strands(), m)?.rep(a)
}

/// An integer Laurent polynomial in one variable `a`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · a^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, BigInt::from(c));
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplication by `a^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}a"),
                _ => format!("{c}a^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A dense square matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    rows: Vec<Vec<LaurentPoly>>,
}

impl PolyMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|r| (0..dim).map(|c| if r == c { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
            .collect();
        PolyMatrix { dim, rows }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::invalid("polynomial matrix is not square"));
        }
        Ok(PolyMatrix { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.rows[r][c]
    }

    pub fn trace(&self) -> LaurentPoly {
        (0..self.dim).fold(LaurentPoly::zero(), |acc, k| acc.add(&self.rows[k][k]))
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, other.dim);
        let mut rows = alloc::vec![alloc::vec![LaurentPoly::zero(); self.dim]; self.dim];
        for (r, row) in rows.iter_mut().enumerate() {
            for k in 0..self.dim {
                if self.rows[r][k].is_zero() {
                    continue;
                }
                for (c, slot) in row.iter_mut().enumerate() {
                    if !other.rows[k][c].is_zero() {
                        *slot = slot.add(&self.rows[r][k].mul(&other.rows[k][c]));
                    }
                }
            }
        }
        PolyMatrix { dim: self.dim, rows }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|p| format!("{p}")).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Substitutes `σ_j ↦ 1` and `A_{i,n+1} ↦ a` in a matrix of `ζ_{n,1}`.
///
/// Each group element goes to `a^k` where `k` is the linking number of the
/// last strand with the others.
pub fn specialize_entries(mat: &RepMatrix) -> Result<PolyMatrix> {
    if mat.m != 1 {
        return Err(Error::invalid(format!("Burau specialization needs m = 1, got m = {}", mat.m)));
    }
    let last = mat.n + 1;
    let mut rows = alloc::vec![alloc::vec![LaurentPoly::zero(); mat.dim]; mat.dim];
    for (&(r, c), e) in &mat.entries {
        let mut p = LaurentPoly::zero();
        for (key, coeff, _) in e.terms() {
            if key.permutation().image(last) != last {
                return Err(Error::invalid("entry term moves the last strand"));
            }
            let k = key.to_word().strand_linking(last);
            p.add_term(k, coeff.clone());
        }
        rows[r][c] = p;
    }
    Ok(PolyMatrix { dim: mat.dim, rows })
}

/// The reduced Burau matrix obtained from a matrix of `ζ_{n,1}`.
///
/// After the substitution of [`specialize_entries`] the basis vector `e_j`
/// is rescaled by `a^j`, which turns `σ_i` into the classical block
/// `(a, -a, 1)` in row `i`.
pub fn burau_specialize(mat: &RepMatrix) -> Result<PolyMatrix> {
    let raw = specialize_entries(mat)?;
    let mut out = raw.clone();
    for r in 0..raw.dim {
        for c in 0..raw.dim {
            out.rows[r][c] = raw.rows[r][c].shift(r as i64 - c as i64);
        }
    }
    Ok(out)
}

/// The reduced Burau matrix of `σ_i` on `n` strands, rows `(a, -a, 1)`.
pub fn reduced_burau_generator(n: usize, i: usize) -> PolyMatrix {
    let dim = n - 1;
    let mut m = PolyMatrix::identity(dim);
    let r = i - 1;
    if r >= 1 {
        m.rows[r][r - 1] = LaurentPoly::monomial(1, 1);
    }
    m.rows[r][r] = LaurentPoly::monomial(-1, 1);
    if r + 1 < dim {
        m.rows[r][r + 1] = LaurentPoly::one();
    }
    m
}

/// The reduced Burau matrix of `σ_i^{-1}`, rows `(1, -a^{-1}, a^{-1})`.
pub fn reduced_burau_inverse_generator(n: usize, i: usize) -> PolyMatrix {
    let dim = n - 1;
    let mut m = PolyMatrix::identity(dim);
    let r = i - 1;
    if r >= 1 {
        m.rows[r][r - 1] = LaurentPoly::one();
    }
    m.rows[r][r] = LaurentPoly::monomial(-1, -1);
    if r + 1 < dim {
        m.rows[r][r + 1] = LaurentPoly::monomial(1, -1);
    }
    m
}

/// The reduced Burau matrix of a word, built directly from the generator
/// blocks.
pub fn reduced_burau(w: &BraidWord) -> PolyMatrix {
    let n = w.strands();
    w.letters().iter().fold(PolyMatrix::identity(n - 1), |acc, &l| {
        let g = if l > 0 {
            reduced_burau_generator(n, l as usize)
        } else {
            reduced_burau_inverse_generator(n, l.unsigned_abs() as usize)
        };
        acc.mul(&g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn burau_inverse_blocks() {
        for n in 3..=6 {
            for i in 1..n {
                let g = reduced_burau_generator(n, i);
                let h = reduced_burau_inverse_generator(n, i);
                assert_eq!(g.mul(&h), PolyMatrix::identity(n - 1));
            }
        }
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.len() + 1, parts.to_vec()).unwrap()
    }

    #[test]
    fn basis_order_and_size() {
        let b = basis(3, 2).unwrap();
        assert_eq!(b, alloc::vec![comp(&[2, 0]), comp(&[1, 1]), comp(&[0, 2])]);
        assert_eq!(basis(5, 2).unwrap().len(), 10);
        let units = basis(4, 1).unwrap();
        assert_eq!(units, alloc::vec![comp(&[1, 0, 0]), comp(&[0, 1, 0]), comp(&[0, 0, 1])]);
        for n in 2..=6 {
            for m in 0..=4 {
                assert_eq!(basis(n, m).unwrap().len(), binomial(m + n - 2, m));
            }
        }
        assert!(basis(1, 2).is_err());
    }

    #[test]
    fn suffix_sums() {
        let mu = comp(&[1, 2, 0, 3]);
        assert_eq!(mu.suffix(0), 6);
        assert_eq!(mu.suffix(1), 6);
        assert_eq!(mu.suffix(2), 5);
        assert_eq!(mu.suffix(4), 3);
        assert_eq!(mu.suffix(5), 0);
        assert_eq!(mu.suffix(6), 0);
    }

    #[test]
    fn theta_permutations() {
        for i in 0..=3 {
            assert!(theta_perm(i, i, i, i, 3).unwrap().is_identity());
        }
        assert_eq!(theta_perm(1, 1, 2, 3, 3).unwrap(), Permutation::transposition(3, 2, 3));
        assert!(theta_perm(1, 2, 2, 2, 3).unwrap().is_identity());
        assert_eq!(theta_perm(0, 0, 2, 2, 2).unwrap(), Permutation::transposition(2, 1, 2));
        assert!(theta_perm(2, 1, 2, 3, 3).is_err());
    }

    #[test]
    fn theta_sets() {
        assert_eq!(theta_set(1, 1, 3, 3).unwrap().len(), 1);
        assert_eq!(theta_set(0, 2, 2, 3).unwrap().len(), 1);
        let two = theta_set(0, 1, 2, 2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&Permutation::identity(2)));
        assert!(two.contains(&Permutation::transposition(2, 1, 2)));
        assert_eq!(theta_set(0, 2, 4, 4).unwrap().len(), 6);
        assert_eq!(theta_set(1, 2, 4, 5).unwrap().len(), 3);
        for eta in theta_set(1, 3, 5, 6).unwrap() {
            assert!(eta.image(1) == 1 && eta.image(6) == 6);
            assert!(eta.image(2) < eta.image(3) && eta.image(4) < eta.image(5));
        }
        assert!(theta_set(2, 1, 3, 3).is_err());
    }

    #[test]
    fn eta_signed_examples() {
        let id = eta_signed(&Permutation::identity(2), Sign::Plus, 3, 2).unwrap();
        assert_eq!(id, GroupRingElement::one(5));
        let t = eta_signed(&Permutation::transposition(2, 1, 2), Sign::Plus, 3, 2).unwrap();
        let expected = GroupRingElement::from_word(&BraidWord::new(5, alloc::vec![4]).unwrap(), -1).unwrap();
        assert_eq!(t, expected);
        let eta = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(
            eta_signed(&eta, Sign::Plus, 2, 3).unwrap().involution(),
            eta_signed(&eta, Sign::Minus, 2, 3).unwrap()
        );
    }

    #[test]
    fn alpha_moves_strands_as_eta() {
        let eta = Permutation::from_images(&[2, 3, 1]).unwrap();
        let a = alpha_word(&eta, 2);
        // the strand starting at position 2 + j ends at 2 + η(j)
        let p = a.permutation();
        for j in 1..=3 {
            assert_eq!(p.image(2 + eta.image(j)), 2 + j);
        }
    }

    #[test]
    fn generators_invert() {
        for n in 2..=4 {
            for m in 0..=4 {
                for i in 1..n {
                    let p = gen_matrix(n, m, i, Sign::Plus).unwrap();
                    let q = gen_matrix(n, m, i, Sign::Minus).unwrap();
                    assert!(p.mul(&q).unwrap().is_identity(), "n={n} m={m} i={i}");
                    assert!(q.mul(&p).unwrap().is_identity(), "n={n} m={m} i={i}");
                }
            }
        }
    }

    #[test]
    fn braid_relations_m3() {
        let z = Zeta::new(3, 3).unwrap();
        let w = |l: &[i32]| BraidWord::new(3, l.to_vec()).unwrap();
        assert_eq!(z.rep(&w(&[1, 2, 1])).unwrap(), z.rep(&w(&[2, 1, 2])).unwrap());
    }

    #[test]
    fn burau_channel() {
        let z = Zeta::new(4, 1).unwrap();
        for i in 1..4 {
            let b = burau_specialize(z.generator(i as i32)).unwrap();
            assert_eq!(b, reduced_burau_generator(4, i));
        }
        let id = burau_specialize(&RepMatrix::identity(4, 1).unwrap()).unwrap();
        assert_eq!(id, PolyMatrix::identity(3));
        assert!(burau_specialize(&RepMatrix::identity(4, 2).unwrap()).is_err());
    }
}
