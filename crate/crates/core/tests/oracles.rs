mod common;

use common::*;
use zhu_chromatic::circulant::chromatic_number;
use zhu_chromatic::intmat::{distance_matrix, egcd, CollapseSign};
use zhu_chromatic::periodic::{certify, segment_colorable, LowerBound};
use zhu_chromatic::{chi_formula, make_circulant, DistanceTriple};

#[test]
fn closed_form_matches_window_automaton() {
    for t in DistanceTriple::enumerate(7) {
        let oracle = line_chromatic_number(&t.distances());
        assert_eq!(chi_formula(&t).0 as usize, oracle, "{t}");
    }
}

#[test]
fn certificate_chi_matches_window_automaton() {
    for t in DistanceTriple::enumerate(6) {
        let cert = certify(&t).unwrap();
        assert_eq!(
            cert.chi as usize,
            line_chromatic_number(&t.distances()),
            "{t}"
        );
        assert!(periodic_proper_on_window(
            &t.distances(),
            &cert.upper.colors,
            100
        ));
    }
}

#[test]
fn window_automaton_sanity() {
    assert!(line_colorable(&[1], 2));
    assert!(!line_colorable(&[1, 2], 2));
    assert!(!line_colorable(&[1, 2, 3], 3));
    assert!(line_colorable(&[1, 2, 3], 4));
}

#[test]
fn circulant_search_matches_enumeration() {
    for n in 2..=9usize {
        for gens in [
            vec![1i64],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![1, 2, 4],
            vec![1, 2, 3],
        ] {
            let Ok(c) = make_circulant(n as u64, &gens) else {
                continue;
            };
            let (k, w) = chromatic_number(&c);
            assert_eq!(k, circulant_chi_enum(n, &gens), "C_{n}{gens:?}");
            assert!(circulant_proper(n, c.conn(), &w.colors));
        }
    }
}

#[test]
fn named_circulant_values() {
    // C_8(1,2,6) is the quotient used for {1,2,6}; C_7(1,2) has independence number 2
    assert_eq!(circulant_chi_enum(8, &[1, 2, 6]), 4);
    assert_eq!(circulant_chi_enum(7, &[1, 2]), 4);
    assert_eq!(
        chromatic_number(&make_circulant(8, &[1, 2, 6]).unwrap()).0,
        4
    );
}

#[test]
fn segment_search_matches_enumeration() {
    for t in DistanceTriple::enumerate(5) {
        for len in 0..=9 {
            for k in 1..=3 {
                assert_eq!(
                    segment_colorable(&t, len as u64, k),
                    segment_colorable_enum(&t.distances(), len, k),
                    "{t} len {len} k {k}"
                );
            }
        }
    }
}

#[test]
fn minimal_uncolorable_segments() {
    // frozen from segment_colorable_enum
    let minimal = |a, b, c| {
        let d = [a, b, c];
        (0..20)
            .find(|&l| !segment_colorable_enum(&d, l, 3))
            .unwrap()
    };
    assert_eq!(minimal(1, 2, 6), 6);
    assert_eq!(minimal(2, 3, 5), 6);
    assert_eq!(minimal(1, 2, 3), 3);
    for (a, b, c, l) in [(1, 2, 6, 6), (2, 3, 5, 6), (1, 2, 3, 3)] {
        let t = DistanceTriple::new(a, b, c).unwrap();
        assert!(!segment_colorable(&t, l, 3));
        assert!(segment_colorable(&t, l - 1, 3));
    }
}

#[test]
fn segment_lower_bounds_hold_for_chi_four() {
    for t in DistanceTriple::enumerate(9).filter(|t| chi_formula(t).0 == 4) {
        let cert = certify(&t).unwrap();
        let LowerBound::Segment { length } = cert.lower else {
            panic!("{t}: expected a segment witness");
        };
        if length <= 11 {
            assert!(
                !segment_colorable_enum(&t.distances(), length as usize, 3),
                "{t}"
            );
        }
    }
}

#[test]
fn egcd_coefficients_are_minimal() {
    // no Bézout pair with strictly smaller |u| + |v| exists
    for x in 1..=25i64 {
        for y in -25..=25i64 {
            let (g, u, v) = egcd(x, y).unwrap();
            let best = (-30..=30)
                .flat_map(|p| (-30..=30).map(move |q| (p, q)))
                .filter(|&(p, q)| x * p + y * q == g)
                .map(|(p, q): (i64, i64)| p.abs() + q.abs())
                .min()
                .unwrap();
            assert_eq!(u.abs() + v.abs(), best, "egcd({x}, {y}) = ({g}, {u}, {v})");
        }
    }
}

#[test]
fn collapse_realizes_reduction() {
    // the quotient label generates exactly C_n(a, b, c)
    for t in DistanceTriple::enumerate(15) {
        let [a, b, c] = t.distances().map(|d| d as i64);
        let m = distance_matrix(a, b, c).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)] {
            for sign in CollapseSign::BOTH {
                let Ok(y) = m.collapse_rows(i, j, sign) else {
                    continue;
                };
                let n = y.modulus();
                let expected = if sign == CollapseSign::Subtract {
                    m.label()[i] + m.label()[j]
                } else {
                    (m.label()[i] - m.label()[j]).abs()
                };
                assert_eq!(n, expected);
                let from_label = make_circulant(n as u64, y.label()).unwrap();
                let from_triple = make_circulant(n as u64, &[a, b, c]).unwrap();
                assert_eq!(from_label, from_triple, "{t} rows {i},{j} {sign}");
            }
        }
    }
}
