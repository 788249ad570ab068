//! Replays the worked F9 example and compares intermediate bases.

mod common;

use std::collections::BTreeMap;

use common::*;
use plane_ag::curve::Point;
use plane_ag::{DecoderState, Fe};

#[test]
fn alpha_table_matches_field() {
    let f = f9();
    for (i, &enc) in ALPHA.iter().enumerate() {
        assert_eq!(f.pow(Fe(3), i as u64), Fe(enc));
    }
}

#[test]
fn point_order_covers_curve() {
    let code = worked_code();
    let mut ours: Vec<Point> = code.points().to_vec();
    ours.sort();
    let mut all = code.curve().points();
    all.sort();
    assert_eq!(ours, all);
}

#[test]
fn interpolant() {
    let code = worked_code();
    let v = worked_received();
    let h = code.lagrange().interpolate(code.curve(), &v).unwrap();
    assert_eq!(h.row(2), &upoly("a3x8 + x7 + a7x6 + a5x5 + a3x4 + a6x3 + 2x2 + a2x"));
    assert_eq!(h.row(1), &upoly("a6x8 + x7 + x6 + a1x5 + a6x4 + a7x3 + a3x"));
    assert_eq!(h.row(0), &upoly("2x8 + a1x7 + a6x6 + 2x4 + a2x3 + x"));
    assert_eq!(code.curve().delta(&h), Some(32));
    for (p, &vi) in code.points().iter().zip(&v) {
        assert_eq!(code.curve().eval(&h, *p), vi);
    }
}

#[test]
fn basis_tables() {
    // Rows g0 g1 g2 f0 f1 f2 at each s; later entries patch earlier ones.
    let mut table: BTreeMap<&str, &str> = BTreeMap::from([
        ("g0", "[,,,,,x9]"),
        ("g1", "[,,,,x9,]"),
        ("g2", "[,,,x9,,]"),
        ("f0", "[,,1,a7x8,a2x8,x8]"),
        ("f1", "[,1,,a2x8,a6x8,a7x12]"),
        ("f2", "[1,,,a6x8,a7x12,a2x12]"),
    ]);
    let patches: [(i64, &[(&str, &str)]); 7] = [
        (32, &[]),
        (
            31,
            &[
                // g2 is the previous f0, so it keeps that element's z term.
                ("g2", "[,,1,a7x8,a2x8,x8]"),
                ("f0", "[,,x,2x8,a2x9,x9]"),
                ("f1", "[,1,,a2x8,a6x8,2x11]"),
                ("f2", "[1,,,a6x8,2x11,a2x12]"),
            ],
        ),
        (
            16,
            &[
                ("g0", "[,,,,,x9]"),
                ("g1", "[,x,a7x2,2x5,x7,a7x8]"),
                ("g2", "[,,x,a2x7,a5x8,x9]"),
                ("f0", "[,1,x2,,,]"),
                ("f1", "[,x2,a7x3,a7x4,a3x6,a7x8]"),
                ("f2", "[1,a3x,a7x2,a3x4,a7x6,a3x8]"),
            ],
        ),
        (15, &[("g0", "[1,a3x,a7x2,a3x4,a7x6,a3x8]"), ("f2", "[x,a3x2,a7x3,a3x5,a7x7,a5x8]")]),
        (14, &[]),
        (13, &[("f1", "[1,x2,a7x3,,,]"), ("f2", "[x,a3x2,a7x3,x4,2x6,x8]")]),
        (12, &[("f2", "[x,a3x2,a7x3,,,]")]),
    ];

    let code = worked_code();
    let mut st = DecoderState::init(&code, &worked_received()).unwrap();
    assert_eq!(st.s(), 32);
    for (s, patch) in patches {
        while st.s() > s {
            st.step(&code).unwrap();
        }
        table.extend(patch.iter().copied());
        for i in 0..3 {
            assert_eq!(leading_cells(&st.g()[i]), cells(table[format!("g{i}").as_str()]), "s={s} g{i}");
            assert_eq!(leading_cells(&st.f()[i]), cells(table[format!("f{i}").as_str()]), "s={s} f{i}");
        }
    }
}
