//! Independent oracles shared by the integration and acceptance suites.
//!
//! Nothing here uses Garside theory: word problems are decided by a
//! faithful 2x2 Burau matrix (B3) and by searching relator rewrites,
//! conjugacy by enumerating short conjugators.
#![allow(dead_code)]

use std::collections::{BTreeMap, BinaryHeap, HashSet};
use std::cmp::Reverse;

use braidforce_core::garside::normal_form;
use braidforce_core::{BraidWord, CanonicalForm};
use rand::rngs::StdRng;
use rand::Rng;

pub type Laurent = BTreeMap<i32, i64>;

fn lmul(x: &Laurent, y: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&e1, &c1) in x {
        for (&e2, &c2) in y {
            *out.entry(e1 + e2).or_insert(0) += c1 * c2;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn ladd(x: &Laurent, y: &Laurent) -> Laurent {
    let mut out = x.clone();
    for (&e, &c) in y {
        *out.entry(e).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn mono(c: i64, e: i32) -> Laurent {
    let mut p = Laurent::new();
    if c != 0 {
        p.insert(e, c);
    }
    p
}

pub type Mat2 = [[Laurent; 2]; 2];

fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let cell = |r: usize, c: usize| ladd(&lmul(&x[r][0], &y[0][c]), &lmul(&x[r][1], &y[1][c]));
    [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]]
}

fn burau_letter(l: i32) -> Mat2 {
    match l {
        1 => [[mono(-1, 1), mono(1, 0)], [mono(0, 0), mono(1, 0)]],
        -1 => [[mono(-1, -1), mono(1, -1)], [mono(0, 0), mono(1, 0)]],
        2 => [[mono(1, 0), mono(0, 0)], [mono(1, 1), mono(-1, 1)]],
        -2 => [[mono(1, 0), mono(0, 0)], [mono(1, 0), mono(-1, -1)]],
        _ => panic!("not a B3 letter: {l}"),
    }
}

/// Reduced Burau matrix of a 3-strand word; faithful on B3.
pub fn burau3(letters: &[i32]) -> Mat2 {
    let id: Mat2 = [[mono(1, 0), mono(0, 0)], [mono(0, 0), mono(1, 0)]];
    letters.iter().fold(id, |acc, &l| mat_mul(&acc, &burau_letter(l)))
}

fn free_reduce_cyclic(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    let (mut s, mut e) = (0, out.len());
    while e - s >= 2 && out[s] == -out[e - 1] {
        s += 1;
        e -= 1;
    }
    out[s..e].to_vec()
}

fn canonical_rotation(word: &[i32]) -> Vec<i32> {
    (0..word.len().max(1))
        .map(|k| word[k.min(word.len())..].iter().chain(&word[..k.min(word.len())]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn invert(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|x| -x).collect()
}

/// Every relator of B3 (cyclic rotations of `σ1σ2σ1σ2⁻¹σ1⁻¹σ2⁻¹` and its
/// inverse) split into rewrite rules `x → y` with `x y⁻¹` a relator.
fn b3_rules() -> Vec<(Vec<i32>, Vec<i32>)> {
    let base = vec![1, 2, 1, -2, -1, -2];
    let mut relators = HashSet::new();
    for r in [base.clone(), invert(&base)] {
        for k in 0..r.len() {
            let rot: Vec<i32> = r[k..].iter().chain(&r[..k]).copied().collect();
            relators.insert(rot);
        }
    }
    let mut rules = Vec::new();
    for r in relators {
        for k in 1..r.len() {
            rules.push((r[..k].to_vec(), invert(&r[k..])));
        }
    }
    rules
}

/// Searches relator rewrites (on cyclic words, shortest first) for a path
/// from `word` to the empty word. `None` when the search space under the
/// length cap and node budget is exhausted.
pub fn rewrites_to_identity(word: &[i32], cap: usize, budget: usize) -> Option<bool> {
    let rules = b3_rules();
    let start = canonical_rotation(&free_reduce_cyclic(word));
    let mut seen = HashSet::new();
    let mut heap = BinaryHeap::new();
    seen.insert(start.clone());
    heap.push(Reverse((start.len(), start)));
    while let Some(Reverse((_, w))) = heap.pop() {
        if w.is_empty() {
            return Some(true);
        }
        if seen.len() > budget {
            return None;
        }
        let len = w.len();
        let doubled: Vec<i32> = w.iter().chain(&w).copied().collect();
        for (x, y) in &rules {
            if x.len() > len {
                continue;
            }
            for pos in 0..len {
                if doubled[pos..pos + x.len()] != x[..] {
                    continue;
                }
                let mut next: Vec<i32> = y.clone();
                next.extend_from_slice(&doubled[pos + x.len()..pos + len]);
                let next = canonical_rotation(&free_reduce_cyclic(&next));
                if next.len() <= cap && seen.insert(next.clone()) {
                    heap.push(Reverse((next.len(), next)));
                }
            }
        }
    }
    None
}

/// Random word with letters in `±1..n-1`.
pub fn random_word(rng: &mut StdRng, n: usize, max_len: usize) -> Vec<i32> {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.random_range(1..n as i32);
            if rng.random_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// Applies `k` random relator rewrites, giving a word equal in B3.
pub fn scramble_b3(rng: &mut StdRng, word: &[i32], k: usize) -> Vec<i32> {
    let rules = b3_rules();
    let mut w = word.to_vec();
    for _ in 0..k {
        let (x, y) = &rules[rng.random_range(0..rules.len())];
        let hits: Vec<usize> = (0..=w.len().saturating_sub(x.len()))
            .filter(|&p| p + x.len() <= w.len() && w[p..p + x.len()] == x[..])
            .collect();
        if hits.is_empty() {
            // insert a trivial pair so some rule can apply later
            let p = rng.random_range(0..=w.len());
            let i = rng.random_range(1..3);
            w.splice(p..p, [i, -i]);
            continue;
        }
        let p = hits[rng.random_range(0..hits.len())];
        w.splice(p..p + x.len(), y.iter().copied());
    }
    w
}

/// All distinct group elements spelled by words of length at most `len`,
/// each with one spelling.
pub fn short_elements(n: usize, len: usize) -> Vec<BraidWord> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<i32>> = vec![vec![]];
    let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    for depth in 0..=len {
        let mut next = Vec::new();
        for w in &frontier {
            let word = BraidWord::new(n, w.clone()).unwrap();
            if seen.insert(normal_form(&word).unwrap()) {
                out.push(word);
            }
            if depth < len {
                for &l in &letters {
                    if w.last() != Some(&-l) {
                        let mut v = w.clone();
                        v.push(l);
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

/// Normal forms of `c⁻¹ a c` over the given conjugators.
pub fn conjugates(a: &BraidWord, conjugators: &[BraidWord]) -> HashSet<CanonicalForm> {
    conjugators
        .iter()
        .map(|c| normal_form(&c.inverse().concat(a).unwrap().concat(c).unwrap()).unwrap())
        .collect()
}
