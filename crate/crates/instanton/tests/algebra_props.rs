use instanton::combinatorics::{
    coroot_pairings, coroot_pairings_cartan, enumerate_coroots, enumerate_tuples, partitions, CorootVector, YoungDiagram,
};
use instanton::exactalg::{rat, Brf, LinearForm, Poly2, QSeries, Rat, Series};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn qseries(order: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small_rat(), 1..=order as usize).prop_map(move |c| Series::new("q", 1, 0, c, order))
}

fn diagram() -> impl Strategy<Value = YoungDiagram> {
    (0u32..=8).prop_flat_map(|n| {
        let ps = partitions(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

fn nonzero_form() -> impl Strategy<Value = LinearForm> {
    (-4i64..=4, -4i64..=4, -3i64..=3)
        .prop_filter("nonzero ε-part", |(a, b, _)| *a != 0 || *b != 0)
        .prop_map(|(a, b, c)| LinearForm::new(rat(a, 1), rat(b, 1), rat(c, 2)))
}

fn brf() -> impl Strategy<Value = Brf> {
    (prop::collection::vec((0u32..3, 0u32..3, small_rat()), 0..4), prop::collection::vec(nonzero_form(), 0..3)).prop_map(|(mons, forms)| {
        let p = mons.into_iter().fold(Poly2::zero(), |acc, (i, j, c)| acc.add(&Poly2::monomial(i, j, c)));
        Brf::from_poly(p).mul(&Brf::inv_product(&forms).expect("nonzero forms"))
    })
}

/// Equality up to the common known order.
fn same(x: &QSeries, y: &QSeries) -> bool {
    let k = x.order().min(y.order());
    x.truncate(k).sub(&y.truncate(k)).is_zero()
}

/// `∏ (1 − q^d)^{−r}` coefficients by integer dynamic programming.
fn colored_partition_counts(r: usize, n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for _ in 0..r {
        for d in 1..=n {
            for k in d..=n {
                c[k] += c[k - d];
            }
        }
    }
    c
}

#[test]
fn tuple_counts_match_product() {
    for r in 1..=4 {
        let want = colored_partition_counts(r, 10);
        for n in 0..=10u32 {
            if r == 4 && n > 8 {
                continue;
            }
            assert_eq!(enumerate_tuples(r, n).len() as u64, want[n as usize], "r={} n={}", r, n);
        }
    }
}

#[test]
fn coroots_match_box_scan() {
    for r in 1..=3usize {
        for sector in 0..r as i64 {
            let bound = rat(3, 1);
            let got = enumerate_coroots(r, sector, &bound).unwrap();
            let mut want = Vec::new();
            let range = -6i64..=6;
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(v) = stack.pop() {
                if v.len() == r {
                    let c = CorootVector::new(v);
                    if c.sector() == sector && c.half_norm() <= bound {
                        want.push(c);
                    }
                    continue;
                }
                for x in range.clone() {
                    let mut w = v.clone();
                    w.push(x);
                    stack.push(w);
                }
            }
            let mut g = got.clone();
            g.sort();
            want.sort();
            assert_eq!(g, want, "r={} k={}", r, sector);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn diagram_sizes_and_transpose(y in diagram()) {
        prop_assert_eq!(y.boxes().count() as u32, y.size());
        let t = y.transpose();
        prop_assert_eq!(t.size(), y.size());
        prop_assert_eq!(t.transpose(), y.clone());
        for (i, j) in y.boxes() {
            let a = y.arm_leg(i, j).unwrap();
            let b = t.arm_leg(j, i).unwrap();
            prop_assert_eq!(a.arm, b.leg);
            prop_assert_eq!(a.leg, b.arm);
        }
    }

    #[test]
    fn pairings_agree(entries in (1usize..=5).prop_flat_map(|r| prop::collection::vec(-4i64..=4, r))) {
        let k = CorootVector::new(entries);
        prop_assert_eq!(coroot_pairings(&k), coroot_pairings_cartan(&k));
    }

    #[test]
    fn series_ring_laws(a in qseries(12), b in qseries(12), c in qseries(12)) {
        prop_assert!(same(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(same(&a.add(&b).mul(&c), &a.mul(&c).add(&b.mul(&c))));
        prop_assert!(same(&a.mul(&b), &b.mul(&a)));
        prop_assert!(a.mul(&b).order() >= 12);
    }

    #[test]
    fn reencode_round_trip(c in prop::collection::vec(small_rat(), 1..10), low in -3i64..3) {
        let s = Series::new("q", 4, low, c, 40);
        let up = s.reencode(8);
        prop_assert_eq!(up.denom(), 8);
        prop_assert!(same(&up.reduce_denom().reencode(4), &s));
        prop_assert_eq!(up.reduce_denom().reencode(4).order(), s.order());
    }

    #[test]
    fn brf_distributes_and_evaluates(f in brf(), g in brf(), h in brf(), e1 in small_rat(), e2 in small_rat()) {
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        // evaluation is a ring map wherever everything is defined
        if let (Ok(x), Ok(y), Ok(z)) = (f.eval(&e1, &e2), g.eval(&e1, &e2), h.eval(&e1, &e2)) {
            prop_assert_eq!(f.add(&g).eval(&e1, &e2).unwrap(), &x + &y);
            prop_assert_eq!(f.mul(&h).eval(&e1, &e2).unwrap(), &x * &z);
            prop_assert_eq!(f.sub(&h).eval(&e1, &e2).unwrap(), &x - &z);
        }
    }
}
