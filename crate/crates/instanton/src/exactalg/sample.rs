//! Seeded rational sample points for polynomial identity testing.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::linear::LinearForm;
use super::ring::{fmt_rat, rat, Rat};
use super::AlgError;

/// Values for `(ε₁, ε₂, a₁..a_r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePoint {
    pub e1: Rat,
    pub e2: Rat,
    pub a: Vec<Rat>,
}

#[derive(Clone, Debug)]
pub struct SampleConstraints {
    pub rank: usize,
    /// Force `Σ a_α = 0`.
    pub traceless: bool,
    /// Reject points where `a_α − a_β + iε₁ + jε₂` or `iε₁ + jε₂` vanishes for `|i|, |j| <= bound`.
    pub bound: i64,
    pub max_attempts: u32,
}

impl SampleConstraints {
    pub fn new(rank: usize) -> Self {
        SampleConstraints { rank, traceless: true, bound: 16, max_attempts: 64 }
    }
}

impl SamplePoint {
    /// Coulomb values as constant forms.
    pub fn a_forms(&self) -> Vec<LinearForm> {
        self.a.iter().map(|x| LinearForm::constant(x.clone())).collect()
    }

    pub fn describe(&self) -> SampleJson {
        SampleJson {
            e1: fmt_rat(&self.e1),
            e2: fmt_rat(&self.e2),
            a: self.a.iter().map(fmt_rat).collect(),
        }
    }

    /// Genericity test over the small integer box.
    pub fn is_generic(&self, bound: i64) -> bool {
        let r = self.a.len();
        for i in -bound..=bound {
            for j in -bound..=bound {
                let e = rat(i, 1) * &self.e1 + rat(j, 1) * &self.e2;
                if (i, j) != (0, 0) && e.is_zero() {
                    return false;
                }
                for al in 0..r {
                    for be in 0..r {
                        if al != be && (&self.a[be] - &self.a[al] + &e).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SampleJson {
    pub e1: String,
    pub e2: String,
    pub a: Vec<String>,
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let n: i64 = rng.gen_range(-97..=97);
        let d: i64 = rng.gen_range(1..=89);
        if n != 0 {
            return rat(n, d);
        }
    }
}

/// Deterministic sample for `seed`; retries until the point is generic.
pub fn rational_sample(seed: u64, c: &SampleConstraints) -> Result<SamplePoint, AlgError> {
    if c.rank == 0 {
        return Err(AlgError::InvalidInput("rank must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..c.max_attempts {
        let e1 = random_rat(&mut rng);
        let e2 = random_rat(&mut rng);
        let mut a: Vec<Rat> = (0..c.rank).map(|_| random_rat(&mut rng)).collect();
        if c.traceless {
            let mean = a.iter().fold(Rat::zero(), |s, x| s + x) / rat(c.rank as i64, 1);
            for x in a.iter_mut() {
                *x -= &mean;
            }
        }
        let p = SamplePoint { e1, e2, a };
        if p.is_generic(c.bound) {
            return Ok(p);
        }
    }
    Err(AlgError::Sampling(format!("no generic point after {} attempts (seed {})", c.max_attempts, seed)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let c = SampleConstraints::new(2);
        assert_eq!(rational_sample(0, &c).unwrap(), rational_sample(0, &c).unwrap());
    }

    #[test]
    fn rank2_nondegenerate() {
        let p = rational_sample(0, &SampleConstraints::new(2)).unwrap();
        assert_eq!(&p.a[0] + &p.a[1], rat(0, 1));
        for v in [&p.a[0], &p.e1, &p.e2] {
            assert!(!v.is_zero());
        }
        assert!(!(&p.e1 - &p.e2).is_zero());
    }

    #[test]
    fn traceless_rank3() {
        let p = rational_sample(5, &SampleConstraints::new(3)).unwrap();
        assert_eq!(&p.a[0] + &p.a[1] + &p.a[2], rat(0, 1));
    }

    #[test]
    fn exhausted_attempts() {
        let mut c = SampleConstraints::new(2);
        c.max_attempts = 0;
        assert!(matches!(rational_sample(1, &c), Err(AlgError::Sampling(_))));
    }
}
