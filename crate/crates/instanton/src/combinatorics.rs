//! Young diagrams, diagram tuples and the `A_{r−1}` coroot lattice.
//!
//! **Column convention.** A diagram is stored as its column lengths
//! `λ₁ ≥ λ₂ ≥ …`; the box `(i, j)` sits in column `i` at height `j`, so
//! `1 ≤ j ≤ λ_i`. The transpose `λ′` lists row lengths.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{rat, Rat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct YoungDiagram {
    columns: Vec<u32>,
}

/// Arm, arm-colength, leg and leg-colength of a box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArmLeg {
    pub arm: i64,
    pub arm_co: i64,
    pub leg: i64,
    pub leg_co: i64,
}

impl YoungDiagram {
    pub fn new(columns: Vec<u32>) -> Result<Self> {
        if columns.iter().any(|&c| c == 0) {
            return Err(Error::InvalidInput("column lengths must be positive".into()));
        }
        if columns.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput("column lengths must be weakly decreasing".into()));
        }
        Ok(YoungDiagram { columns })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// `|Y|`.
    pub fn size(&self) -> u32 {
        self.columns.iter().sum()
    }

    /// `l(Y)`, the number of columns.
    pub fn num_columns(&self) -> u32 {
        self.columns.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `λ_i` (1-based), zero past the last column.
    pub fn column(&self, i: i64) -> i64 {
        if i >= 1 && (i as usize) <= self.columns.len() {
            self.columns[i as usize - 1] as i64
        } else {
            0
        }
    }

    /// `λ′_j`, the length of row `j`.
    pub fn row(&self, j: i64) -> i64 {
        if j < 1 {
            return 0;
        }
        self.columns.iter().filter(|&&c| c as i64 >= j).count() as i64
    }

    pub fn transpose(&self) -> Self {
        let h = self.columns.first().copied().unwrap_or(0) as i64;
        YoungDiagram { columns: (1..=h).map(|j| self.row(j) as u32).collect() }
    }

    /// Boxes `(i, j)` in column-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| (1..=c as i64).map(move |j| (i as i64 + 1, j)))
    }

    /// Statistics of box `(i, j)`; the box may lie outside the diagram.
    pub fn arm_leg(&self, i: i64, j: i64) -> Result<ArmLeg> {
        if i < 1 || j < 1 {
            return Err(Error::InvalidInput(format!("box ({}, {}) has an index below 1", i, j)));
        }
        Ok(ArmLeg { arm: self.column(i) - j, arm_co: j - 1, leg: self.row(j) - i, leg_co: i - 1 })
    }

    pub(crate) fn arm(&self, i: i64, j: i64) -> i64 {
        self.column(i) - j
    }

    pub(crate) fn leg(&self, i: i64, j: i64) -> i64 {
        self.row(j) - i
    }

    /// Multiplicities `m_h` = number of columns of length `h`, for `h = 1..=max`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let h = self.columns.first().copied().unwrap_or(0) as usize;
        let mut m = vec![0; h];
        for &c in &self.columns {
            m[c as usize - 1] += 1;
        }
        m
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<YoungDiagram> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        if n == 0 {
            out.push(YoungDiagram { columns: prefix.clone() });
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DiagramTuple {
    pub diagrams: Vec<YoungDiagram>,
}

impl DiagramTuple {
    pub fn new(diagrams: Vec<YoungDiagram>) -> Self {
        DiagramTuple { diagrams }
    }

    pub fn empty(r: usize) -> Self {
        DiagramTuple { diagrams: vec![YoungDiagram::empty(); r] }
    }

    pub fn rank(&self) -> usize {
        self.diagrams.len()
    }

    /// Instanton number `Σ|Y_α|`.
    pub fn size(&self) -> u32 {
        self.diagrams.iter().map(|y| y.size()).sum()
    }

    pub fn transpose(&self) -> Self {
        DiagramTuple { diagrams: self.diagrams.iter().map(|y| y.transpose()).collect() }
    }
}

impl fmt::Display for DiagramTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.diagrams.iter().map(|y| y.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All `r`-tuples of diagrams of total size `n`. The first diagram is
/// largest first; within a size, partitions run in decreasing lex order.
pub fn enumerate_tuples(r: usize, n: u32) -> Vec<DiagramTuple> {
    fn rec(r: usize, n: u32, prefix: &mut Vec<YoungDiagram>, out: &mut Vec<DiagramTuple>) {
        if r == 1 {
            for y in partitions(n) {
                prefix.push(y);
                out.push(DiagramTuple { diagrams: prefix.clone() });
                prefix.pop();
            }
            return;
        }
        for m in (0..=n).rev() {
            for y in partitions(m) {
                prefix.push(y);
                rec(r - 1, n - m, prefix, out);
                prefix.pop();
            }
        }
    }
    if r == 0 {
        return if n == 0 { vec![DiagramTuple { diagrams: vec![] }] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(r, n, &mut Vec::new(), &mut out);
    out
}

/// An integer vector `k₁..k_r` with sector `k = Σ k_α`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CorootVector {
    pub entries: Vec<i64>,
}

impl CorootVector {
    pub fn new(entries: Vec<i64>) -> Self {
        CorootVector { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn sector(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// `k_α − k/r`, summing to zero.
    pub fn shifted(&self) -> Vec<Rat> {
        let r = self.rank() as i64;
        let k = self.sector();
        self.entries.iter().map(|&x| rat(x * r - k, r)).collect()
    }

    pub fn half_norm(&self) -> Rat {
        coroot_pairings(self).0 / rat(2, 1)
    }
}

impl fmt::Display for CorootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `((k,k), ⟨k,ρ⟩)` from the pairwise-difference formulas.
pub fn coroot_pairings(k: &CorootVector) -> (Rat, Rat) {
    let r = k.rank() as i64;
    let e = &k.entries;
    let mut sq = 0i64;
    let mut rho = 0i64;
    for a in 0..e.len() {
        for b in 0..e.len() {
            sq += (e[a] - e[b]) * (e[a] - e[b]);
            if a < b {
                rho += e[a] - e[b];
            }
        }
    }
    (rat(sq, 2 * r), rat(rho, 2))
}

/// The same pairings through simple-coroot coordinates `k^i = Σ_{α≤i} k̄_α`
/// and the Cartan matrix of `A_{r−1}`.
pub fn coroot_pairings_cartan(k: &CorootVector) -> (Rat, Rat) {
    let kb = k.shifted();
    let r = kb.len();
    let mut coords = Vec::with_capacity(r.saturating_sub(1));
    let mut acc = Rat::zero();
    for x in kb.iter().take(r.saturating_sub(1)) {
        acc += x;
        coords.push(acc.clone());
    }
    let mut norm = Rat::zero();
    for i in 0..coords.len() {
        for j in 0..coords.len() {
            let c = if i == j {
                2
            } else if i.abs_diff(j) == 1 {
                -1
            } else {
                0
            };
            if c != 0 {
                norm += rat(c, 1) * &coords[i] * &coords[j];
            }
        }
    }
    let rho = coords.iter().fold(Rat::zero(), |s, x| s + x);
    (norm, rho)
}

/// Integer vectors with `Σk_α = sector` and `(k̄,k̄)/2 ≤ max_half_norm`,
/// ordered by half-norm, then decreasing lexicographically.
pub fn enumerate_coroots(r: usize, sector: i64, max_half_norm: &Rat) -> Result<Vec<CorootVector>> {
    if r == 0 {
        return Err(Error::InvalidInput("rank must be at least 1".into()));
    }
    if max_half_norm.is_negative() {
        return Ok(vec![]);
    }
    // |k̄_α|² ≤ 2B bounds each entry
    let mut m = 0i64;
    while rat(m * m, 1) <= rat(2, 1) * max_half_norm {
        m += 1;
    }
    let centre = sector.div_euclid(r as i64);
    let lo = centre - m - 1;
    let hi = centre + m + 2;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(
        r: usize,
        sector: i64,
        lo: i64,
        hi: i64,
        bound: &Rat,
        cur: &mut Vec<i64>,
        out: &mut Vec<CorootVector>,
    ) {
        if cur.len() == r - 1 {
            let last = sector - cur.iter().sum::<i64>();
            if last < lo || last > hi {
                return;
            }
            cur.push(last);
            let v = CorootVector::new(cur.clone());
            if &v.half_norm() <= bound {
                out.push(v);
            }
            cur.pop();
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            rec(r, sector, lo, hi, bound, cur, out);
            cur.pop();
        }
    }
    rec(r, sector, lo, hi, max_half_norm, &mut cur, &mut out);
    out.sort_by(|a, b| a.half_norm().cmp(&b.half_norm()).then_with(|| b.entries.cmp(&a.entries)));
    Ok(out)
}

/// A fixed point on the blowup: a coroot vector and two diagram tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupFixedPoint {
    pub coroot: CorootVector,
    pub y1: DiagramTuple,
    pub y2: DiagramTuple,
}

impl BlowupFixedPoint {
    /// `|Ȳ¹| + |Ȳ²| + (1/2r)Σ_{α<β}(k_α − k_β)²`.
    pub fn instanton_number(&self) -> Rat {
        rat((self.y1.size() + self.y2.size()) as i64, 1) + self.coroot.half_norm()
    }
}

/// All blowup fixed points of sector `k` with instanton number `n`.
pub fn enumerate_blowup_fixed_points(r: usize, k: i64, n: &Rat) -> Result<Vec<BlowupFixedPoint>> {
    let mut out = Vec::new();
    for c in enumerate_coroots(r, k, n)? {
        let rest = n - c.half_norm();
        if !rest.is_integer() {
            continue;
        }
        let m = rest.to_integer();
        let m: u32 = m.try_into().map_err(|_| Error::Internal("size overflow".into()))?;
        for s in 0..=m {
            for y1 in enumerate_tuples(r, s) {
                for y2 in enumerate_tuples(r, m - s) {
                    out.push(BlowupFixedPoint { coroot: c.clone(), y1: y1.clone(), y2 });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(c: &[u32]) -> YoungDiagram {
        YoungDiagram::new(c.to_vec()).unwrap()
    }

    #[test]
    fn arm_leg_examples() {
        let a = y(&[1]).arm_leg(1, 1).unwrap();
        assert_eq!((a.arm, a.arm_co, a.leg, a.leg_co), (0, 0, 0, 0));
        let b = y(&[2, 1]).arm_leg(1, 1).unwrap();
        assert_eq!((b.arm, b.leg), (1, 1));
        let c = y(&[2]).arm_leg(2, 1).unwrap();
        assert_eq!((c.arm, c.leg), (-1, -1));
        assert!(y(&[2]).arm_leg(0, 1).is_err());
    }

    #[test]
    fn rejects_bad_columns() {
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert!(YoungDiagram::new(vec![2, 0]).is_err());
    }

    #[test]
    fn tuple_examples() {
        assert_eq!(enumerate_tuples(1, 4).len(), 5);
        assert_eq!(enumerate_tuples(2, 0), vec![DiagramTuple::empty(2)]);
        let got: Vec<String> = enumerate_tuples(2, 2).iter().map(|t| t.to_string()).collect();
        assert_eq!(got, vec!["((2),∅)", "((1,1),∅)", "((1),(1))", "(∅,(2))", "(∅,(1,1))"]);
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(coroot_pairings(&CorootVector::new(vec![1, -1])), (rat(2, 1), rat(1, 1)));
        assert_eq!(coroot_pairings(&CorootVector::new(vec![1, 0, -1])), (rat(2, 1), rat(2, 1)));
        assert_eq!(coroot_pairings(&CorootVector::new(vec![0, 0])), (rat(0, 1), rat(0, 1)));
    }

    #[test]
    fn coroot_examples() {
        let v = |r, k, b: Rat| -> Vec<Vec<i64>> {
            enumerate_coroots(r, k, &b).unwrap().into_iter().map(|c| c.entries).collect()
        };
        assert_eq!(v(2, 0, rat(0, 1)), vec![vec![0, 0]]);
        assert_eq!(v(2, 0, rat(1, 1)), vec![vec![0, 0], vec![1, -1], vec![-1, 1]]);
        assert_eq!(v(2, 1, rat(1, 4)), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn blowup_instanton_numbers() {
        let fps = enumerate_blowup_fixed_points(2, 1, &rat(1, 4)).unwrap();
        assert_eq!(fps.len(), 2);
        for fp in &fps {
            assert_eq!(fp.instanton_number(), rat(1, 4));
        }
    }
}
