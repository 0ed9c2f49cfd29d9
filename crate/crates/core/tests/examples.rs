//! Worked examples: raw and merged traces, and classification.

use braidforce_core::curves::thurston_type;
use braidforce_core::garside::conjugate_test;
use braidforce_core::pipeline::{merged_trace, trace};
use braidforce_core::zeta::{rep, reduced_burau, specialize_entries, LaurentPoly, PolyMatrix};
use braidforce_core::{BraidWord, ClassSum, GroupRingElement, RepMatrix, SummitConfig, ThurstonType};

fn w(n: usize, text: &str) -> BraidWord {
    BraidWord::parse(text, n).unwrap()
}

fn sum(n: usize, terms: &[(i64, &str)]) -> GroupRingElement {
    let words: Vec<(i64, BraidWord)> = terms.iter().map(|&(c, t)| (c, w(n, t))).collect();
    GroupRingElement::from_terms(n, words.iter().map(|(c, x)| (*c, x))).unwrap()
}

fn classes(n: usize, terms: &[(i64, &str)]) -> ClassSum {
    sum(n, terms).project_classes(&SummitConfig::default()).unwrap()
}

#[test]
fn three_strands_raw_trace() {
    let inner = [
        (-1, "A(1,4) A(1,5) 4"),
        (-1, "A(1,4) A(1,5) A(2,4)^-1"),
        (1, "A(1,4) A(1,5) A(2,4)^-1 4"),
        (1, "A(1,4) A(1,5) A(2,5)^-1 A(2,4)^-1"),
        (1, "A(1,5) A(2,4)^-1"),
        (1, "A(1,5) -4 A(2,5)^-1 A(2,4)^-1"),
        (-1, "A(1,5) A(2,5)^-1 A(2,4)^-1"),
        (-1, "-4 A(2,5)^-1 A(2,4)^-1"),
    ];
    let expected: Vec<(i64, String)> = inner.iter().map(|&(c, t)| (c, format!("1 {t} -2"))).collect();
    let expected: Vec<(i64, &str)> = expected.iter().map(|(c, t)| (*c, t.as_str())).collect();
    let raw = trace(&rep(&w(3, "1 -2"), 2).unwrap());
    assert_eq!(raw, sum(5, &expected));
}

#[test]
fn three_strands_merged_trace() {
    let cfg = SummitConfig::default();
    let got = merged_trace(&w(3, "1 -2"), 2, &cfg).unwrap();
    let written = [
        (1, "1 -2"),
        (-1, "1 -2 A(3,5)^-1 A(3,4)^-1 -4"),
        (-1, "1 -2 A(1,4) A(1,5) 4"),
        (-1, "1 -2 A(3,4)^-1"),
        (-1, "1 -2 A(1,5)"),
        (1, "1 -2 A(3,4)^-1 -4"),
        (1, "1 -2 A(1,5) 4"),
        (1, "1 -2 A(1,5) A(3,4)^-1"),
    ];
    assert_eq!(got.len(), 8);
    assert_eq!(got, classes(5, &written));
    for (c, text) in written {
        let target = w(5, text);
        let hit = got
            .terms()
            .filter(|(rep, _, _)| conjugate_test(&rep.to_word(), &target, &cfg).unwrap().is_some())
            .map(|(_, k, _)| k.clone())
            .collect::<Vec<_>>();
        assert_eq!(hit, vec![c.into()], "{text}");
    }
}

#[test]
fn three_strands_classification() {
    let cfg = SummitConfig::default();
    assert_eq!(thurston_type(&w(3, "1 -2"), &cfg).unwrap(), ThurstonType::PseudoAnosov);
    for text in ["A(3,5)^-1 A(3,4)^-1 -4", "A(1,4) A(1,5) 4", "A(3,4)^-1", "A(1,5)"] {
        let x = w(5, "1 -2").concat(&w(5, text)).unwrap();
        assert_eq!(thurston_type(&x, &cfg).unwrap(), ThurstonType::Reducible, "{text}");
    }
    // β itself, extended by two trivial strands
    assert_eq!(thurston_type(&w(5, "1 -2"), &cfg).unwrap(), ThurstonType::Reducible);
    for text in ["A(3,4)^-1 -4", "A(1,5) 4", "A(1,5) A(3,4)^-1"] {
        let x = w(5, "1 -2").concat(&w(5, text)).unwrap();
        assert_eq!(thurston_type(&x, &cfg).unwrap(), ThurstonType::PseudoAnosov, "{text}");
    }
}

/// Entries of `β⁻¹ζ_{5,1}(β)` for `β = σ1σ2σ3⁻¹σ4⁻¹` as printed in the
/// worked example, with the signs of entries (1,4) and (2,4) as printed.
fn five_strands_display() -> Vec<((usize, usize), Vec<(i64, &'static str)>)> {
    vec![
        ((0, 1), vec![(-1, "A(1,6) A(2,6)"), (1, "A(1,6) A(2,6) A(5,6)^-1")]),
        ((0, 3), vec![(1, "A(1,6) A(2,6) A(5,6)^-1")]),
        ((1, 0), vec![(1, "")]),
        ((1, 1), vec![(-1, "A(2,6)"), (1, "A(2,6) A(5,6)^-1")]),
        ((1, 3), vec![(1, "A(2,6) A(5,6)^-1")]),
        ((2, 1), vec![(1, "A(5,6)^-1")]),
        ((2, 3), vec![(-1, "A(5,6)^-1")]),
        ((3, 2), vec![(1, "A(5,6)^-1")]),
        ((3, 3), vec![(-1, "A(5,6)^-1")]),
    ]
}

fn display_matrix(flip: &[(usize, usize)]) -> RepMatrix {
    let b = "1 2 -3 -4";
    let entries = five_strands_display().into_iter().map(|(k, terms)| {
        let sign = if flip.contains(&k) { -1 } else { 1 };
        let full: Vec<(i64, String)> = terms.iter().map(|&(c, t)| (sign * c, format!("{b} {t}"))).collect();
        let full: Vec<(i64, &str)> = full.iter().map(|(c, t)| (*c, t.as_str())).collect();
        (k, sum(6, &full))
    });
    RepMatrix::from_entries(5, 1, entries).unwrap()
}

fn trace_powers(p: &PolyMatrix) -> Vec<LaurentPoly> {
    let mut acc = p.clone();
    let mut out = vec![acc.trace()];
    for _ in 1..p.dim() {
        acc = acc.mul(p);
        out.push(acc.trace());
    }
    out
}

#[test]
fn five_strands_one_extra() {
    let beta = w(5, "1 2 -3 -4");
    let got = rep(&beta, 1).unwrap();
    let corrected = display_matrix(&[(0, 3), (1, 3)]);
    for r in 0..4 {
        for c in 0..4 {
            assert_eq!(got.entry(r, c), corrected.entry(r, c), "entry ({r},{c})");
        }
    }
    let components: usize = got.entries().map(|(_, e)| e.len()).sum();
    assert_eq!(components, 11);
    assert!(got.mul(&rep(&beta.inverse(), 1).unwrap()).unwrap().is_identity());

    // The Burau specialization is a conjugacy invariant check on the
    // printed signs: with them, traces of powers disagree with the reduced
    // Burau matrix of β; with the flipped signs they agree.
    let burau = trace_powers(&reduced_burau(&beta));
    assert_eq!(trace_powers(&specialize_entries(&got).unwrap()), burau);
    let printed = display_matrix(&[]);
    assert_ne!(trace_powers(&specialize_entries(&printed).unwrap()), burau);
    assert!(!printed.mul(&rep(&beta.inverse(), 1).unwrap()).unwrap().is_identity());
}

#[test]
fn five_strands_merged_traces() {
    let cfg = SummitConfig::default();
    let beta = w(5, "1 2 -3 -4");
    let b = "1 2 -3 -4";
    let square = merged_trace(&beta.pow(2), 1, &cfg).unwrap();
    let want = classes(
        6,
        &[
            (1, &format!("{b} {b}")),
            (-1, &format!("{b} A(1,6) {b} A(1,6)")),
            (-1, &format!("{b} A(5,6)^-1 {b} A(5,6)^-1")),
        ],
    );
    assert_eq!(square, want);
    let two = merged_trace(&beta, 2, &cfg).unwrap();
    let want = classes(
        7,
        &[
            (1, b),
            (-1, &format!("{b} A(1,7)")),
            (-1, &format!("{b} A(5,6)^-1")),
            (1, &format!("{b} A(1,7) A(5,6)^-1")),
        ],
    );
    assert_eq!(two.len(), 4);
    assert_eq!(two, want);
}
