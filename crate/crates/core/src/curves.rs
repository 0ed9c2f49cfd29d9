//! Multicurves in the punctured disk and reducibility of braids.
//!
//! Curves are encoded by Dynnikov coordinates. Punctures `1..N` sit on a
//! horizontal line; for each interior puncture `p` the vertical arcs above
//! and below it meet a multicurve `U_p` and `D_p` times, and the vertical
//! line between punctures `k` and `k+1` meets it `β_k` times. The
//! coordinates are
//!
//! ```text
//! a_k = (D_{k+1} - U_{k+1}) / 2,   b_k = (β_k - β_{k+1}) / 2,   1 ≤ k ≤ N-2.
//! ```
//!
//! Every nonzero integer vector is the image of exactly one integral
//! lamination (a disjoint union of essential curves, none enclosing all
//! punctures).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::garside::{is_periodic_form, normal_form, summit_set_of, CanonicalForm, SummitConfig, SummitKind};

/// Coordinate scalar. Arithmetic is checked; an overflow panics rather
/// than produce a wrong coordinate.
pub type Coord = i128;

fn add(x: Coord, y: Coord) -> Coord {
    x.checked_add(y).expect("lamination coordinate overflow")
}

fn sub(x: Coord, y: Coord) -> Coord {
    x.checked_sub(y).expect("lamination coordinate overflow")
}

fn pos(x: Coord) -> Coord {
    x.max(0)
}

/// Dynnikov coordinates `(a_1, …, a_{N-2}; b_1, …, b_{N-2})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaminationCoords {
    punctures: usize,
    a: Vec<Coord>,
    b: Vec<Coord>,
}

impl LaminationCoords {
    /// The empty lamination.
    pub fn zero(punctures: usize) -> Result<Self> {
        let k = Self::check_punctures(punctures)?;
        Ok(LaminationCoords { punctures, a: alloc::vec![0; k], b: alloc::vec![0; k] })
    }

    pub fn new(punctures: usize, a: Vec<Coord>, b: Vec<Coord>) -> Result<Self> {
        let k = Self::check_punctures(punctures)?;
        if a.len() != k || b.len() != k {
            return Err(Error::invalid(format!(
                "{punctures} punctures need {k} a- and {k} b-coordinates"
            )));
        }
        Ok(LaminationCoords { punctures, a, b })
    }

    /// From the flat vector `(a_1, …, a_{N-2}, b_1, …, b_{N-2})`.
    pub fn from_vec(punctures: usize, coords: &[Coord]) -> Result<Self> {
        let k = Self::check_punctures(punctures)?;
        if coords.len() != 2 * k {
            return Err(Error::invalid(format!("expected {} coordinates", 2 * k)));
        }
        Self::new(punctures, coords[..k].to_vec(), coords[k..].to_vec())
    }

    fn check_punctures(punctures: usize) -> Result<usize> {
        if punctures < 3 {
            return Err(Error::invalid(format!(
                "Dynnikov coordinates need at least 3 punctures, got {punctures}"
            )));
        }
        Ok(punctures - 2)
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    pub fn a(&self) -> &[Coord] {
        &self.a
    }

    pub fn b(&self) -> &[Coord] {
        &self.b
    }

    pub fn to_vec(&self) -> Vec<Coord> {
        self.a.iter().chain(&self.b).copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.punctures, other.punctures);
        LaminationCoords {
            punctures: self.punctures,
            a: self.a.iter().zip(&other.a).map(|(&x, &y)| add(x, y)).collect(),
            b: self.b.iter().zip(&other.b).map(|(&x, &y)| add(x, y)).collect(),
        }
    }

    /// Intersection numbers `β_1, …, β_{N-1}` with the vertical lines
    /// between consecutive punctures.
    pub fn beta(&self) -> Vec<Coord> {
        let k = self.punctures - 2;
        let mut best: Coord = 0;
        let mut prefix: Coord = 0;
        for j in 0..k {
            best = best.max(add(add(self.a[j].abs(), pos(self.b[j])), prefix));
            prefix = add(prefix, self.b[j]);
        }
        let mut beta = Vec::with_capacity(self.punctures - 1);
        let mut cur = 2 * best;
        beta.push(cur);
        for j in 0..k {
            cur = sub(cur, 2 * self.b[j]);
            beta.push(cur);
        }
        beta
    }

    /// Intersection numbers `(U_p, D_p)` with the arcs above and below each
    /// puncture `p = 1..N`.
    pub fn vertical(&self) -> Vec<(Coord, Coord)> {
        let n = self.punctures;
        let beta = self.beta();
        let line = |i: usize| if i == 0 || i == n { 0 } else { beta[i - 1] };
        (1..=n)
            .map(|p| {
                let total = line(p - 1).max(line(p));
                let a = if p == 1 || p == n { 0 } else { self.a[p - 2] };
                (total / 2 - a, total / 2 + a)
            })
            .collect()
    }

    /// Number of components of the lamination, by reconstructing the curves
    /// from their intersection points. Intended for small coordinates.
    pub fn component_count(&self) -> usize {
        let n = self.punctures;
        let beta = self.beta();
        let vert = self.vertical();
        // points: for puncture p, up points 0..U (0 nearest the puncture), then down points
        let mut offset = Vec::with_capacity(n + 1);
        let mut total = 0usize;
        for &(u, d) in &vert {
            offset.push(total);
            total += (u + d) as usize;
        }
        let up = |p: usize, j: Coord| offset[p - 1] + j as usize;
        let down = |p: usize, j: Coord| offset[p - 1] + vert[p - 1].0 as usize + j as usize;
        let mut uf = UnionFind::new(total);
        let line = |i: usize| if i == 0 || i == n { 0 } else { beta[i - 1] };
        for p in 1..=n {
            let (u, d) = vert[p - 1];
            // turnarounds on the right of p (inside strip p) and on its left (strip p-1)
            let right_turns = (u + d - line(p)) / 2;
            let left_turns = (u + d - line(p - 1)) / 2;
            for j in 0..right_turns.max(left_turns) {
                uf.union(up(p, j), down(p, j));
            }
        }
        for s in 1..n {
            let (ul, dl) = vert[s - 1];
            let (ur, dr) = vert[s];
            let lt = (ul + dl - line(s)) / 2;
            let rt = (ur + dr - line(s)) / 2;
            let left: Vec<usize> = (lt..ul).rev().map(|j| up(s, j)).chain((lt..dl).map(|j| down(s, j))).collect();
            let right: Vec<usize> =
                (rt..ur).rev().map(|j| up(s + 1, j)).chain((rt..dr).map(|j| down(s + 1, j))).collect();
            debug_assert_eq!(left.len(), right.len());
            for (x, y) in left.into_iter().zip(right) {
                uf.union(x, y);
            }
        }
        uf.classes()
    }
}

impl fmt::Debug for LaminationCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaminationCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.a.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "; ")?;
        for (k, x) in self.b.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx] = ry;
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Applies `σ_i^{±1}` in place.
///
/// The vertical rays and the horizontal segments `e_k` between consecutive
/// punctures form a triangulation. The half twist on punctures `p = i`,
/// `q = i+1` pulls the rays `d_p` and `u_q` back to arcs reached from that
/// triangulation by two flips on each side, and swaps `u_p` with `u_q` and
/// `d_p` with `d_q`. The inverse is the mirror image in the horizontal line.
fn apply_generator(c: &mut LaminationCoords, letter: i32) {
    let n = c.punctures;
    let mut beta = alloc::vec![0 as Coord; n + 1];
    beta[1..n].copy_from_slice(&c.beta());
    // punctures 0 and n+1 are empty padding
    let mut up = alloc::vec![0 as Coord; n + 2];
    let mut down = alloc::vec![0 as Coord; n + 2];
    for (p, (u, d)) in c.vertical().into_iter().enumerate() {
        up[p + 1] = u;
        down[p + 1] = d;
    }
    if letter < 0 {
        core::mem::swap(&mut up, &mut down);
    }
    let total = |up: &[Coord], down: &[Coord], p: usize| add(up[p], down[p]);
    let seg = |k: usize| -> Coord {
        let left_turns = if k >= 1 { sub(total(&up, &down, k), beta[k]) / 2 } else { 0 };
        let right_turns = if k < n { sub(total(&up, &down, k + 1), beta[k]) / 2 } else { 0 };
        let crossing = sub(sub(up[k], left_turns), sub(up[k + 1], right_turns)).abs();
        add(add(left_turns, right_turns), crossing)
    };
    let flip = |a: Coord, c: Coord, b: Coord, d: Coord, e: Coord| sub(add(a, c).max(add(b, d)), e);
    let i = letter.unsigned_abs() as usize;
    let (p, q) = (i, i + 1);
    let (e_mid, e_left, e_right) = (seg(i), seg(i - 1), seg(i + 1));
    let over = flip(up[p - 1], e_mid, e_left, up[q], up[p]);
    let new_dp = flip(over, down[p], e_mid, down[p - 1], e_left);
    let under = flip(down[p], e_right, e_mid, down[q + 1], down[q]);
    let new_uq = flip(under, up[q], e_mid, up[q + 1], e_right);
    let new_up = up[q];
    let new_dq = down[p];
    up[p] = new_up;
    down[p] = new_dp;
    up[q] = new_uq;
    down[q] = new_dq;
    let twist = sub(sub(down[q], up[q]), sub(down[p], up[p])).abs();
    let doubled = sub(add(add(total(&up, &down, p), total(&up, &down, q)), twist), 2 * e_mid);
    beta[i] = doubled / 2;
    if letter < 0 {
        core::mem::swap(&mut up, &mut down);
    }
    for k in 1..n - 1 {
        c.a[k - 1] = sub(down[k + 1], up[k + 1]) / 2;
        c.b[k - 1] = sub(beta[k], beta[k + 1]) / 2;
    }
}

/// Image of a lamination under a braid, letters applied left to right.
pub fn act(coords: &LaminationCoords, a: &BraidWord) -> Result<LaminationCoords> {
    let n = coords.punctures;
    if a.strands() != n {
        return Err(Error::StrandMismatch { left: n, right: a.strands() });
    }
    let mut out = coords.clone();
    for &l in a.letters() {
        apply_generator(&mut out, l);
    }
    Ok(out)
}

/// A family of round curves, each given by the interval of punctures it
/// encloses.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoundMulticurve {
    punctures: usize,
    blocks: Vec<(usize, usize)>,
}

impl RoundMulticurve {
    /// Blocks must enclose at least two and fewer than all punctures, and be
    /// pairwise disjoint or nested.
    pub fn new(punctures: usize, blocks: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = blocks.into_iter().collect();
        for &(a, b) in &set {
            if a < 1 || a >= b || b > punctures || b - a + 1 >= punctures {
                return Err(Error::invalid(format!(
                    "block [{a},{b}] is not a round curve in a {punctures}-punctured disk"
                )));
            }
        }
        let blocks: Vec<(usize, usize)> = set.into_iter().collect();
        for (k, &(a1, b1)) in blocks.iter().enumerate() {
            for &(a2, b2) in &blocks[k + 1..] {
                let disjoint = b1 < a2 || b2 < a1;
                let nested = (a1 <= a2 && b2 <= b1) || (a2 <= a1 && b1 <= b2);
                if !disjoint && !nested {
                    return Err(Error::invalid(format!("blocks [{a1},{b1}] and [{a2},{b2}] cross")));
                }
            }
        }
        if blocks.is_empty() {
            return Err(Error::invalid("a round multicurve needs at least one block"));
        }
        Ok(RoundMulticurve { punctures, blocks })
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }
}

impl fmt::Debug for RoundMulticurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `{[1,2],[4,6]}`.
impl fmt::Display for RoundMulticurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{a},{b}]")?;
        }
        write!(f, "}}")
    }
}

/// Coordinates of a round multicurve (the sum over its blocks).
pub fn round_coords(r: &RoundMulticurve) -> LaminationCoords {
    let n = r.punctures;
    let mut c = LaminationCoords::zero(n).expect("round multicurves need at least 3 punctures");
    for &(a, b) in &r.blocks {
        if a >= 2 {
            c.b[a - 2] -= 1;
        }
        if b < n {
            c.b[b - 2] += 1;
        }
    }
    c
}

/// A round multicurve mapped to itself by `a`, if one exists.
///
/// Any invariant multicurve contains a single orbit of curves, so the
/// search runs over orbits of one interval under the braid permutation:
/// intervals by size, then by left end, keeping those whose orbit consists
/// of pairwise disjoint intervals, and testing each candidate with [`act`].
pub fn invariant_round_multicurve(a: &BraidWord) -> Option<RoundMulticurve> {
    let n = a.strands();
    if n < 3 {
        return None;
    }
    // strands starting in S end in perm⁻¹(S)
    let ends = a.permutation().inverse();
    for size in 2..n {
        for start in 1..=n - size + 1 {
            let Some(orbit) = interval_orbit(&ends, start, start + size - 1) else {
                continue;
            };
            let family = RoundMulticurve::new(n, orbit).expect("disjoint proper intervals");
            let c = round_coords(&family);
            if act(&c, a).expect("strand counts agree") == c {
                return Some(family);
            }
        }
    }
    None
}

fn interval_orbit(p: &Permutation, lo: usize, hi: usize) -> Option<Vec<(usize, usize)>> {
    let mut orbit = alloc::vec![(lo, hi)];
    let mut cur: Vec<usize> = (lo..=hi).collect();
    loop {
        let mut next: Vec<usize> = cur.iter().map(|&j| p.image(j)).collect();
        next.sort_unstable();
        let (a, b) = (next[0], *next.last().unwrap());
        if b - a + 1 != next.len() {
            return None;
        }
        if (a, b) == (lo, hi) {
            break;
        }
        if orbit.iter().any(|&(c, d)| !(d < a || b < c)) {
            return None;
        }
        orbit.push((a, b));
        cur = next;
    }
    Some(orbit)
}

/// The Nielsen–Thurston type of a braid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThurstonType {
    Periodic,
    Reducible,
    PseudoAnosov,
}

impl ThurstonType {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThurstonType::Periodic => "periodic",
            ThurstonType::Reducible => "reducible",
            ThurstonType::PseudoAnosov => "pseudo_anosov",
        }
    }
}

impl fmt::Display for ThurstonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A super summit element of the class of `x` with an invariant round
/// multicurve, if there is one.
pub fn reducing_witness(
    x: &CanonicalForm,
    config: &SummitConfig,
) -> Result<Option<(CanonicalForm, RoundMulticurve)>> {
    if x.strands() < 3 {
        return Ok(None);
    }
    if let Some(r) = invariant_round_multicurve(&x.to_word()) {
        return Ok(Some((x.clone(), r)));
    }
    let sss = summit_set_of(x, &SummitConfig { kind: SummitKind::Super, budget: config.budget })?;
    for e in sss.elements() {
        if let Some(r) = invariant_round_multicurve(&e.to_word()) {
            return Ok(Some((e.clone(), r)));
        }
    }
    Ok(None)
}

/// Whether the braid preserves some essential multicurve. Some element of
/// the super summit set then preserves a round one.
pub fn is_reducible(a: &BraidWord, config: &SummitConfig) -> Result<bool> {
    Ok(reducing_witness(&normal_form(a)?, config)?.is_some())
}

pub fn thurston_type_form(x: &CanonicalForm, config: &SummitConfig) -> Result<ThurstonType> {
    if is_periodic_form(x) {
        Ok(ThurstonType::Periodic)
    } else if reducing_witness(x, config)?.is_some() {
        Ok(ThurstonType::Reducible)
    } else {
        Ok(ThurstonType::PseudoAnosov)
    }
}

/// Periodic if some power is central, else reducible if a reducing round
/// multicurve is found in the super summit set, else pseudo-Anosov.
pub fn thurston_type(a: &BraidWord, config: &SummitConfig) -> Result<ThurstonType> {
    thurston_type_form(&normal_form(a)?, config)
}
