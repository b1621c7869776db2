use instanton::betti;
use instanton::blowup::recursive_solve;
use instanton::exactalg::{rat, rational_sample, QSeries, SampleConstraints, SamplePoint};
use instanton::ktheory::{bernoulli, hilbert_product};
use instanton::perturb::{c_coefficients, pert_shift_at_samples};
use instanton::prepotential::{expand_f, ExpansionSpec};
use instanton::swcurve::{eta_quotient_check, jacobi_derivative_check, jacobi_quartic_check, mirror_map, sw_data};
use proptest::prelude::*;

fn sample(seed: u64, r: usize) -> SamplePoint {
    rational_sample(seed, &SampleConstraints::new(r)).unwrap()
}

#[test]
fn theta_identities_to_high_order() {
    let q = jacobi_quartic_check(24);
    assert!(q.pass, "{:?}", q);
    let d = jacobi_derivative_check(20);
    assert!(d.pass, "{:?}", d);
    let e = eta_quotient_check(20).unwrap();
    assert!(e.pass, "{:?}", e);
}

#[test]
fn mirror_map_round_trip() {
    let n = 8;
    let mm = mirror_map(&sw_data(n)).unwrap();
    let back = mm.v_of_q.compose(&mm.q_of_v).unwrap();
    assert_eq!(back.truncate(n as i64), QSeries::monomial("v", 1, 1, rat(1, 1), n as i64));
    let fwd = mm.q_of_v.compose(&mm.v_of_q).unwrap();
    assert_eq!(fwd.truncate(n as i64), QSeries::monomial("q", 1, 1, rat(1, 1), n as i64));
}

#[test]
fn prepotential_exponents_are_homogeneous() {
    // F₀ at q^n scales like a^{2−4n} at rank 2
    let sp = sample(21, 2);
    let lam = rat(3, 2);
    let scaled = SamplePoint { e1: sp.e1.clone(), e2: sp.e2.clone(), a: sp.a.iter().map(|x| x * &lam).collect() };
    let spec = ExpansionSpec { tau_degree: 0, tau1_cap: 0, eps_degree: 0 };
    let e = expand_f(2, &[sp, scaled], 3, &spec).unwrap();
    for n in 0..=3u32 {
        let f = e.samples[0].plain(n).f0();
        let g = e.samples[1].plain(n).f0();
        assert_eq!(g, f * lam.pow(2 - 4 * n as i32), "n={}", n);
    }
}

#[test]
fn quot_polynomials_are_positive_and_bounded() {
    for r in 1..=3usize {
        for n in 1..=6u32 {
            let p = betti::poincare_quot(r, n);
            for (e, c) in p.terms() {
                assert!(c.is_integer() && c > &rat(0, 1), "r={} n={}", r, n);
                assert!(e <= 2 * (r as i64 * n as i64 - 1), "r={} n={} degree {}", r, n, e);
            }
        }
    }
}

#[test]
fn rank_three_fixed_point_sums() {
    for k in 0..3 {
        for c in betti::alt_sum_checks(3, k, 3).unwrap() {
            assert!(c.pass, "{:?}", c);
        }
        assert!(betti::poincare_blowup_gen(3, k, 3).unwrap().pass);
        assert!(betti::virtual_hodge_check(3, k, 3).unwrap().pass);
    }
}

#[test]
fn bernoulli_recurrence() {
    // Σ_{k≤m} C(m+1, k) B_k = 0 for m ≥ 1
    let b = bernoulli(14);
    assert_eq!(b[0], rat(1, 1));
    for m in 1..=14usize {
        let mut binom = rat(1, 1);
        let mut s = rat(0, 1);
        for (k, bk) in b.iter().enumerate().take(m + 1) {
            s += &binom * bk;
            binom = binom * rat((m + 1 - k) as i64, (k + 1) as i64);
        }
        assert_eq!(s, rat(0, 1), "m={}", m);
    }
}

#[test]
fn character_coefficients_are_natural_numbers() {
    let h = hilbert_product(6, 8);
    for n in 0..=6usize {
        for (_, c) in h.coeffs[n].terms.iter() {
            assert!(c.is_integer() && c >= &rat(0, 1));
        }
    }
}

#[test]
fn c_n_are_homogeneous() {
    let q = c_coefficients(10).unwrap();
    for (n, p) in q.iter().enumerate() {
        assert!(!p.is_zero() || n % 2 == 1 && n > 1, "n={}", n);
        for (&(i, j), _) in p.terms() {
            assert_eq!((i + j) as usize, n);
        }
        // symmetric in ε₁ ↔ ε₂
        for (&(i, j), c) in p.terms() {
            assert_eq!(&p.coeff(j, i), c);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn recursion_matches_localization(seed in 0u64..1000, r in 2usize..=3) {
        let rep = recursive_solve(&sample(seed, r), if r == 2 { 3 } else { 2 }).unwrap();
        prop_assert!(rep.pass, "{:?}", rep);
    }

    #[test]
    fn shift_identity_vanishes_at_samples(seed in 0u64..1000, k in -3i64..=3) {
        let pts: Vec<SamplePoint> = (0..3).map(|i| sample(seed + i, 3)).collect();
        prop_assert!(pert_shift_at_samples(k, 5, &pts).unwrap());
    }
}
