//! Exact identities among the network tradeoffs: the Z interference channel
//! and interference channel reduce to the MAC, the printed symmetric closed
//! forms agree with subset enumeration, and CSIT dominates no-CSIT exactly
//! on [0, 1/3] and [1/2, ∞).

use dmtnet_core::network::{
    ic_dmt_full_csit_symmetric, ic_dmt_no_csit, mac_dmt, mac_dmt_curve_symmetric, zic_dmt, MacSpec,
};
use dmtnet_core::piecewise::PiecewiseLinear;
use dmtnet_core::rational::{pos, rat, Rational};

/// The paper's three-term symmetric closed form, kept in test code as an
/// independent oracle for the subset enumeration.
fn symmetric_closed_form(r: Rational) -> Rational {
    let one = rat(1, 1);
    let t1 = pos(one - r);
    let t2 = rat(2, 1) * pos(one - rat(2, 1) * r);
    let t3 = rat(3, 1) * pos(one - rat(2, 1) * r);
    t1.min(t2).min(t3)
}

#[test]
fn zic_equals_ic_equals_mac_on_grid() {
    for i in 0..=100 {
        for j in 0..=100 {
            let (r1, r2) = (rat(i, 100), rat(j, 100));
            let mac = mac_dmt(&MacSpec::two_user_single_antenna(r1, r2));
            assert_eq!(zic_dmt(r1, r2), mac, "zic at ({i},{j})/100");
            assert_eq!(ic_dmt_no_csit(r1, r2), mac, "ic at ({i},{j})/100");
        }
    }
}

#[test]
fn symmetric_closed_form_matches_enumeration_on_diagonal() {
    for i in 0..=100 {
        let r = rat(i, 100);
        assert_eq!(ic_dmt_no_csit(r, r), symmetric_closed_form(r), "r={i}/100");
    }
}

#[test]
fn third_term_is_redundant_on_low_rates() {
    // on [0, 1/2]: min with and without 3(1-2r)+ agree, since
    // 2(1-2r)+ <= 3(1-2r)+ always
    for i in 0..=50 {
        let r = rat(i, 100);
        let one = rat(1, 1);
        let two_term = pos(one - r).min(rat(2, 1) * pos(one - rat(2, 1) * r));
        assert_eq!(symmetric_closed_form(r), two_term, "r={i}/100");
    }
}

#[test]
fn csit_dominates_no_csit_with_exact_crossovers() {
    let third = rat(1, 3);
    let half = rat(1, 2);
    for i in 0..=100 {
        let r = rat(i, 100);
        let with = ic_dmt_full_csit_symmetric(r);
        let without = ic_dmt_no_csit(r, r);
        assert!(with >= without, "r={i}/100");
        if r <= third || r >= half {
            assert_eq!(with, without, "r={i}/100");
        } else {
            assert!(with > without, "r={i}/100");
        }
    }
    // the exact boundary points
    assert_eq!(ic_dmt_full_csit_symmetric(third), rat(2, 3));
    assert_eq!(ic_dmt_no_csit(third, third), rat(2, 3));
    assert_eq!(ic_dmt_full_csit_symmetric(half), rat(0, 1));
}

#[test]
fn symmetric_curve_equals_closed_form_structurally() {
    let curve = mac_dmt_curve_symmetric(2, 1, 1);
    let closed = PiecewiseLinear::clamped_line(rat(1, 1), rat(1, 1))
        .min(&PiecewiseLinear::clamped_line(rat(2, 1), rat(4, 1)));
    assert_eq!(curve, closed);
    // and pointwise against the enumeration
    for i in 0..=120 {
        let r = rat(i, 100);
        assert_eq!(curve.eval(r), ic_dmt_no_csit(r, r), "r={i}/100");
    }
}

#[test]
fn diversity_is_monotone_in_each_rate() {
    for i in 0..60 {
        for j in 0..60 {
            let (r1, r2) = (rat(i, 60), rat(j, 60));
            let d = zic_dmt(r1, r2);
            assert!(zic_dmt(r1 + rat(1, 60), r2) <= d, "({i},{j}) in r1");
            assert!(zic_dmt(r1, r2 + rat(1, 60)) <= d, "({i},{j}) in r2");
        }
    }
}

#[test]
fn network_curves_are_non_increasing() {
    for (s, m, n) in [(1u32, 1u32, 1u32), (2, 1, 1), (3, 1, 1), (2, 2, 2), (3, 2, 1)] {
        assert!(
            mac_dmt_curve_symmetric(s, m, n).is_non_increasing(),
            "({s},{m},{n})"
        );
    }
}
