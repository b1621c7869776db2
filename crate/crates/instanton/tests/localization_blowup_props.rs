use instanton::blowup::{check_blowup_gap, lambda_power_as_q, zhat_inst, CouplingSpec};
use instanton::combinatorics::{enumerate_tuples, CorootVector};
use instanton::exactalg::{rat, rational_sample, Rat, SampleConstraints, SamplePoint};
use instanton::localization::{all_tangent_weights, euler_class, shift_law_check, zinst, Evaluated, OmegaParams, TauSpec};
use proptest::prelude::*;

fn sample(seed: u64, r: usize) -> SamplePoint {
    rational_sample(seed, &SampleConstraints::new(r)).unwrap()
}

fn swapped(sp: &SamplePoint) -> SamplePoint {
    SamplePoint { e1: sp.e2.clone(), e2: sp.e1.clone(), a: sp.a.clone() }
}

#[test]
fn weight_count_is_dimension() {
    for r in 1..=3usize {
        for n in 0..=4u32 {
            for ys in enumerate_tuples(r, n) {
                assert_eq!(all_tangent_weights(&ys).len(), 2 * n as usize * r);
            }
        }
    }
}

#[test]
fn blowup_lattice_truncation_is_sound() {
    let sp = sample(3, 2);
    let cs = CouplingSpec { max_p: 2, degree: 1, tau1_cap: 1 };
    let base = OmegaParams::base(&sp.a);
    let ev = Evaluated::at(&sp);
    for k in 0..2 {
        let small = zhat_inst(&base, k, &ev, 2, &cs).unwrap();
        let big = zhat_inst(&base, k, &ev, 3, &cs).unwrap();
        assert!(big.order() > small.order());
        for u in 0..small.order() {
            let x: Vec<_> = small.coeff(u).unwrap().terms().map(|(m, c)| (*m, c.clone())).collect();
            let y: Vec<_> = big.coeff(u).unwrap().terms().map(|(m, c)| (*m, c.clone())).collect();
            assert_eq!(x, y, "k={} units={}", k, u);
        }
    }
}

#[test]
fn blowup_exponents_sit_on_the_sector_grid() {
    for r in 2..=3usize {
        let sp = sample(9, r);
        // degree 2 reaches past the gap for every sector
        let cs = CouplingSpec { max_p: 3, degree: 2, tau1_cap: 1 };
        for k in 0..r as i64 {
            let z = zhat_inst(&OmegaParams::base(&sp.a), k, &Evaluated::at(&sp), 2, &cs).unwrap();
            let den = 2 * r as i64;
            let shift = k * (r as i64 - k);
            let units: Vec<i64> = z.terms().map(|(u, _)| u).collect();
            assert!(!units.is_empty());
            for u in units {
                assert_eq!((u - shift).rem_euclid(den), 0, "r={} k={} units={}", r, k, u);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn euler_class_homogeneous(seed in 0u64..1000, num in 1i64..7, den in 1i64..5, n in 1u32..=3) {
        let sp = sample(seed, 2);
        let lam = rat(num, den);
        let scaled: Vec<Rat> = sp.a.iter().map(|x| x * &lam).collect();
        let ev = Evaluated::at(&sp);
        let ev_l = Evaluated { e1: &sp.e1 * &lam, e2: &sp.e2 * &lam };
        for ys in enumerate_tuples(2, n) {
            let e = euler_class(&ys, &OmegaParams::base(&sp.a), &ev).unwrap();
            let el = euler_class(&ys, &OmegaParams::base(&scaled), &ev_l).unwrap();
            prop_assert_eq!(el, e * lam.pow((4 * n) as i32));
        }
    }

    #[test]
    fn zinst_color_and_epsilon_symmetry(seed in 0u64..1000, r in 2usize..=3) {
        let sp = sample(seed, r);
        let tau = TauSpec::new(2, 1, 1);
        let q = if r == 2 { 3 } else { 2 };
        let z = zinst(&OmegaParams::base(&sp.a), &Evaluated::at(&sp), q, &tau).unwrap();
        let mut rev = sp.a.clone();
        rev.reverse();
        prop_assert_eq!(&zinst(&OmegaParams::base(&rev), &Evaluated::at(&sp), q, &tau).unwrap(), &z);
        let sw = swapped(&sp);
        prop_assert_eq!(&zinst(&OmegaParams::base(&sw.a), &Evaluated::at(&sw), q, &tau).unwrap(), &z);
    }

    #[test]
    fn shift_law_at_random_points(seed in 0u64..1000, r in 1usize..=2) {
        let sp = sample(seed, r);
        let rep = shift_law_check(&OmegaParams::base(&sp.a), &Evaluated::at(&sp), 3, 3, 2, 2).unwrap();
        prop_assert!(rep.pass, "{:?}", rep.first_mismatch);
    }

    #[test]
    fn lambda_power_matches_half_norm(entries in (1usize..=4).prop_flat_map(|r| prop::collection::vec(-4i64..=4, r))) {
        let k = CorootVector::new(entries);
        prop_assert_eq!(lambda_power_as_q(&k), k.half_norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn blowup_swap_symmetry(seed in 0u64..1000, r in 2usize..=3) {
        let sp = sample(seed, r);
        let sw = swapped(&sp);
        let cs = CouplingSpec { max_p: 2, degree: 1, tau1_cap: 1 };
        for k in 0..r as i64 {
            let k2 = (r as i64 - k) % r as i64;
            let a = zhat_inst(&OmegaParams::base(&sp.a), k, &Evaluated::at(&sp), 2, &cs).unwrap();
            let b = zhat_inst(&OmegaParams::base(&sw.a), k2, &Evaluated::at(&sw), 2, &cs).unwrap();
            prop_assert_eq!(a, b);
            let ga = check_blowup_gap(r, k, &[sp.clone()], 1, 1).unwrap();
            let gb = check_blowup_gap(r, k2, &[sw.clone()], 1, 1).unwrap();
            prop_assert_eq!(ga.violations, gb.violations);
            prop_assert!(ga.pass);
        }
    }
}
