//! Property tests for the representation layer: conversion round-trips,
//! the Hamming/codegree link, and text-format round-trips.

use altpaths::code::{code_from_coloring, coloring_from_code, hamming, Code};
use altpaths::codegree::codegree_table;
use altpaths::coloring::{Color, ColoringMatrix, Side};
use altpaths::constructions::random_complete_coloring;
use altpaths::io::{parse_coloring, write_coloring, write_complete_coloring, HostColoring};
use proptest::prelude::*;

fn arb_coloring() -> impl Strategy<Value = ColoringMatrix> {
    (1usize..=6, 1usize..=6, 2u8..=4).prop_flat_map(|(m, n, r)| {
        proptest::collection::vec(1..=r, m * n)
            .prop_map(move |colors| ColoringMatrix::from_raw(m, n, r, colors))
    })
}

fn arb_code() -> impl Strategy<Value = Code> {
    (1usize..=6, 1usize..=6, 2u8..=4).prop_flat_map(|(m, n, r)| {
        proptest::collection::vec(proptest::collection::vec(1..=r, m), n)
            .prop_map(move |words| Code::new(r, words).expect("generated in range"))
    })
}

proptest! {
    #[test]
    fn code_coloring_roundtrips(code in arb_code()) {
        let coloring = coloring_from_code(&code).unwrap();
        prop_assert_eq!(code_from_coloring(&coloring), code);
    }

    #[test]
    fn coloring_code_roundtrips(c in arb_coloring()) {
        let code = code_from_coloring(&c);
        prop_assert_eq!(coloring_from_code(&code).unwrap(), c);
    }

    /// dist(c_u, c_v) = m - (number of agreeing middles).
    #[test]
    fn hamming_equals_m_minus_agreements(c in arb_coloring(), picks in (0usize..100, 0usize..100)) {
        prop_assume!(c.n() >= 2);
        let u = picks.0 % c.n();
        let v = picks.1 % c.n();
        prop_assume!(u != v);
        let code = code_from_coloring(&c);
        let t = codegree_table(&c, Side::Right, u, v).unwrap();
        let d = hamming(code.word(u), code.word(v)).unwrap();
        prop_assert_eq!(d, c.m() as u64 - t.agreeing());
        prop_assert_eq!(t.total(), c.m() as u64);
    }

    /// Per-color degrees always resolve the opposite class size.
    #[test]
    fn degree_sums(c in arb_coloring()) {
        for u in 0..c.m() {
            prop_assert_eq!(c.degrees(Side::Left, u).iter().sum::<u64>(), c.n() as u64);
        }
        for v in 0..c.n() {
            prop_assert_eq!(c.degrees(Side::Right, v).iter().sum::<u64>(), c.m() as u64);
        }
    }

    #[test]
    fn bipartite_file_roundtrip(c in arb_coloring()) {
        match parse_coloring(&write_coloring(&c)).unwrap() {
            HostColoring::Bipartite(parsed) => prop_assert_eq!(parsed, c),
            _ => prop_assert!(false, "wrong host kind"),
        }
    }

    #[test]
    fn complete_file_roundtrip(n in 1usize..=12, r in 2u8..=4, seed in 0u64..1000) {
        let cc = random_complete_coloring(n.max(2), r as Color, seed);
        match parse_coloring(&write_complete_coloring(&cc)).unwrap() {
            HostColoring::Complete(parsed) => prop_assert_eq!(parsed, cc),
            _ => prop_assert!(false, "wrong host kind"),
        }
    }
}
