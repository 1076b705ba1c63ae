//! Grid properties of the femto-cell access policies.

use dmtnet_core::femto::{
    closed_access_dmt, open_access_dmt, orthogonal_dof, symmetric_dof, AccessPolicy, FemtoRates,
};
use dmtnet_core::rational::{rat, Rational};
use num::One;

fn alphas() -> Vec<Rational> {
    vec![rat(1, 4), rat(1, 2), rat(1, 1), rat(2, 1)]
}

#[test]
fn open_access_never_below_closed_access() {
    for alpha in alphas() {
        for i in 0..=100 {
            for j in 0..=100 {
                let rates = FemtoRates::new(rat(i, 100), rat(j, 100));
                assert!(
                    open_access_dmt(&rates, alpha) >= closed_access_dmt(&rates, alpha),
                    "alpha={alpha}, r=({i},{j})/100"
                );
            }
        }
    }
}

#[test]
fn policies_identical_at_alpha_one_and_two() {
    for alpha in [rat(1, 1), rat(2, 1)] {
        for i in 0..=100 {
            let rates = FemtoRates::symmetric(rat(i, 100));
            assert_eq!(
                open_access_dmt(&rates, alpha),
                closed_access_dmt(&rates, alpha),
                "alpha={alpha}, r={i}/100"
            );
        }
    }
}

#[test]
fn open_dof_is_half_the_cap_and_flat_below_one() {
    for i in 1..=300 {
        let alpha = rat(i, 100);
        let expect = Rational::one().min(Rational::one().max(alpha) / rat(2, 1));
        assert_eq!(symmetric_dof(AccessPolicy::Open, alpha), expect);
        if alpha <= Rational::one() {
            assert_eq!(symmetric_dof(AccessPolicy::Open, alpha), rat(1, 2));
        }
    }
}

#[test]
fn orthogonal_never_beats_closed() {
    for i in 1..=300 {
        let alpha = rat(i, 100);
        let orth = symmetric_dof(AccessPolicy::Orthogonal, alpha);
        let closed = symmetric_dof(AccessPolicy::Closed, alpha);
        assert!(orth <= closed, "alpha={i}/100");
        if alpha == Rational::one() {
            assert_eq!(orth, closed);
        } else {
            assert!(orth < closed, "alpha={i}/100");
        }
    }
}

#[test]
fn orthogonal_dof_is_time_share_optimum() {
    // alpha/(1+alpha) dominates every fixed share t on a fine grid:
    // min(t, (1-t) alpha) <= alpha/(1+alpha), with equality at the optimum
    for i in 1..=40 {
        let alpha = rat(i, 10);
        let best = orthogonal_dof(alpha);
        for t in 0..=100 {
            let share = rat(t, 100);
            let achieved = share.min((Rational::one() - share) * alpha);
            assert!(achieved <= best, "alpha={alpha}, t={t}/100");
        }
        let opt_share = alpha / (Rational::one() + alpha);
        assert_eq!(opt_share.min((Rational::one() - opt_share) * alpha), best);
    }
}
