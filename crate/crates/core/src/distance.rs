//! Minimum-distance bounds, exact formulas and an exhaustive oracle.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{abelian_generator, bid_generator, binomial, CodeSpec, GeneratorMatrix, Kernel, WeightSet};
use crate::error::{Error, Result};
use crate::field::pow3;
use crate::gf2::BitVec;

/// Default dimension budget for [`brute_force_min_distance`].
pub const DEFAULT_DIM_BUDGET: usize = 20;

/// Bounds on the minimum distance of a code. Upper bounds produced by the
/// recursion are always finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceInterval {
    pub lower: u64,
    pub upper: u64,
}

impl DistanceInterval {
    pub fn exact(d: u64) -> Self {
        Self { lower: d, upper: d }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, d: u64) -> bool {
        self.lower <= d && d <= self.upper
    }
}

impl std::fmt::Display for DistanceInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "{}-{}", self.lower, self.upper)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BaseCase {
    /// `r1 = 0`: the dual of a Berman code.
    DualBerman,
    /// `r2 = m`: a Berman code.
    Berman,
    /// `W = {1}`, whose weights are known exactly.
    WeightOne,
    /// `W = {m-1}`, `m >= 3`.
    WeightMMinusOne,
}

fn check_params(m: usize, r1: usize, r2: usize) -> Result<()> {
    if m == 0 || r1 > r2 || r2 > m {
        return Err(Error::InvalidParams(format!(
            "need m >= 1 and 0 <= r1 <= r2 <= m, got ({m},{r1},{r2})"
        )));
    }
    Ok(())
}

fn base_case(m: usize, r1: usize, r2: usize) -> Option<(BaseCase, u64)> {
    if r1 == 0 {
        Some((BaseCase::DualBerman, pow3(m - r2) as u64))
    } else if r2 == m {
        Some((BaseCase::Berman, 1u64 << r1))
    } else {
        None
    }
}

/// Leaves of the recursion: the Berman and dual Berman codes plus the two
/// single-weight families with known distance.
fn leaf(m: usize, r1: usize, r2: usize) -> Option<(BaseCase, u64)> {
    base_case(m, r1, r2).or_else(|| match (r1, r2) {
        (1, 1) => Some((BaseCase::WeightOne, exact_w_one(m).ok()?.0)),
        (a, b) if a == b && a + 1 == m => Some((BaseCase::WeightMMinusOne, exact_w_m_minus_one(m).ok()?)),
        _ => None,
    })
}

/// Exact distance when `r1 = 0` (`3^(m-r2)`) or `r2 = m` (`2^r1`).
pub fn base_case_distance(m: usize, r1: usize, r2: usize) -> Option<u64> {
    base_case(m, r1, r2).map(|(_, d)| d)
}

/// Which sub-code of length `3^(m-1)` a recursion edge points to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Shift {
    /// `W`
    Same,
    /// `W_{0,-1}`
    DropTop,
    /// `W_{-1,0}`
    ExtendBottom,
    /// `W_{-1,-1}`
    ShiftDown,
}

impl Shift {
    pub fn label(self) -> &'static str {
        match self {
            Shift::Same => "W",
            Shift::DropTop => "W_{0,-1}",
            Shift::ExtendBottom => "W_{-1,0}",
            Shift::ShiftDown => "W_{-1,-1}",
        }
    }

    fn apply(self, r1: usize, r2: usize) -> (usize, usize) {
        match self {
            Shift::Same => (r1, r2),
            Shift::DropTop => (r1, r2 - 1),
            Shift::ExtendBottom => (r1 - 1, r2),
            Shift::ShiftDown => (r1 - 1, r2 - 1),
        }
    }
}

/// Children of a non-base node, as `(shift, r1, r2)` at length `3^(m-1)`.
fn children(r1: usize, r2: usize) -> Vec<(Shift, usize, usize)> {
    let mut out = vec![(Shift::Same, r1, r2)];
    if r2 > r1 {
        let (a, b) = Shift::DropTop.apply(r1, r2);
        out.push((Shift::DropTop, a, b));
    }
    for s in [Shift::ExtendBottom, Shift::ShiftDown] {
        let (a, b) = s.apply(r1, r2);
        out.push((s, a, b));
    }
    out
}

/// Memoized interval recursion.
#[derive(Default, Debug)]
pub struct DistanceBounds {
    memo: HashMap<(usize, usize, usize), DistanceInterval>,
}

impl DistanceBounds {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bounds(&mut self, m: usize, r1: usize, r2: usize) -> Result<DistanceInterval> {
        check_params(m, r1, r2)?;
        Ok(self.eval(m, r1, r2))
    }

    fn eval(&mut self, m: usize, r1: usize, r2: usize) -> DistanceInterval {
        if let Some((_, d)) = leaf(m, r1, r2) {
            return DistanceInterval::exact(d);
        }
        if let Some(&iv) = self.memo.get(&(m, r1, r2)) {
            return iv;
        }
        let same = self.eval(m - 1, r1, r2);
        let drop_top = (r2 > r1).then(|| self.eval(m - 1, r1, r2 - 1));
        let extend = self.eval(m - 1, r1 - 1, r2);
        let down = self.eval(m - 1, r1 - 1, r2 - 1);

        let combine = |pick: fn(&DistanceInterval) -> u64, lower: bool| {
            let d2 = drop_top.as_ref().map(pick).unwrap_or(u64::MAX);
            let d3 = 2 * pick(&down);
            let d4p = 3 * pick(&same);
            let d4 = if lower {
                let d4a = 3 * pick(&extend);
                let d4b = d4p.min(pick(&down) + pick(&extend));
                d4a.max(d4b)
            } else {
                d4p
            };
            d2.min(d3).min(d4)
        };
        let iv = DistanceInterval {
            lower: combine(|i| i.lower, true),
            upper: combine(|i| i.upper, false),
        };
        self.memo.insert((m, r1, r2), iv);
        iv
    }
}

/// Lower and upper bounds on `d_min(BiD(m, r1, r2))` from the four-way
/// recursion on sub-codes of length `3^(m-1)`.
///
/// Leaves with `W = {1}` or `W = {m-1}` use their exact distances; with only
/// the Berman leaves the upper bound at `BiD(2,1,1)` is already 6.
pub fn recursive_bounds(m: usize, r1: usize, r2: usize) -> Result<DistanceInterval> {
    DistanceBounds::new().bounds(m, r1, r2)
}

fn pow_ratio(base: i128, exp: isize) -> Ratio<i128> {
    if exp >= 0 {
        Ratio::from_integer(base.pow(exp as u32))
    } else {
        Ratio::new(1, base.pow((-exp) as u32))
    }
}

/// `ceil(max{4^r1 3^(m-r1-r2), 3^(m-r2) 2^(r1+r2-m)})`, computed exactly.
pub fn closed_form_lower(m: usize, r1: usize, r2: usize) -> Result<u64> {
    check_params(m, r1, r2)?;
    let (m, r1, r2) = (m as isize, r1 as isize, r2 as isize);
    let a = pow_ratio(4, r1) * pow_ratio(3, m - r1 - r2);
    let b = pow_ratio(3, m - r2) * pow_ratio(2, r1 + r2 - m);
    Ok(a.max(b).ceil().to_integer() as u64)
}

/// Minimum nonzero weight and maximum weight of `BiD(m, 1, 1)`.
pub fn exact_w_one(m: usize) -> Result<(u64, u64)> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("need m >= 2, got {m}")));
    }
    let t = pow3(m - 2) as u64;
    Ok((4 * t, 6 * t))
}

/// Minimum distance of `BiD(m, m-1, m-1)`.
pub fn exact_w_m_minus_one(m: usize) -> Result<u64> {
    if m < 3 {
        return Err(Error::InvalidParams(format!("need m >= 3, got {m}")));
    }
    Ok(3 << (m - 2))
}

/// Exact minimum distance by Gray-code enumeration of all `2^K - 1` nonzero
/// codewords. Returns the distance and one codeword attaining it.
pub fn brute_force_min_distance(g: &GeneratorMatrix, max_dim_budget: usize) -> Result<(usize, BitVec)> {
    let k = g.dimension();
    if k > max_dim_budget {
        return Err(Error::BudgetExceeded {
            dim: k,
            budget: max_dim_budget,
        });
    }
    if k == 0 {
        return Err(Error::InvalidParams("code has no nonzero codewords".into()));
    }
    let rows = g.rows();
    // The top bits pick a shard; each shard walks a Gray code over the rest.
    let shard_bits = k.saturating_sub(12).min(6);
    let low = k - shard_bits;
    let best = (0u64..1 << shard_bits)
        .into_par_iter()
        .map(|prefix| {
            let mut cur = BitVec::zeros(g.length());
            for b in 0..shard_bits {
                if prefix >> b & 1 == 1 {
                    cur.xor_assign(&rows[low + b]);
                }
            }
            let mut best: Option<(usize, u64)> = None;
            let mut consider = |cur: &BitVec, step: u64| {
                let w = cur.weight();
                if w > 0 && best.is_none_or(|(bw, _)| w < bw) {
                    best = Some((w, step));
                }
            };
            consider(&cur, 0);
            for step in 1u64..1 << low {
                cur.xor_assign(&rows[step.trailing_zeros() as usize]);
                consider(&cur, step);
            }
            best.map(|(w, step)| (w, prefix, step))
        })
        .flatten()
        .min()
        .expect("nonzero code");
    let (w, prefix, step) = best;
    let gray = step ^ (step >> 1);
    let coeffs = BitVec::from_bools((0..k).map(|i| {
        if i < low {
            gray >> i & 1 == 1
        } else {
            prefix >> (i - low) & 1 == 1
        }
    }));
    let word = g.encode(&coeffs);
    debug_assert_eq!(word.weight(), w);
    Ok((w, word))
}

/// Randomized search for a codeword of weight at most `target_wt`.
///
/// Phase one encodes `trials` uniform information words. Phase two runs
/// `trials` information-set rounds: the generator is brought to systematic
/// form on a random set of columns and every row and every pair of rows is
/// checked. Returns the first codeword found.
pub fn random_low_weight_search(spec: &CodeSpec, target_wt: usize, trials: usize, seed: u64) -> Result<Option<BitVec>> {
    let g = bid_generator(spec).or_else(|_| abelian_generator(spec.m, &spec.weight_set, spec.kernel))?;
    let k = g.dimension();
    if k == 0 {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hit = |c: &BitVec| !c.is_zero() && c.weight() <= target_wt;

    for _ in 0..trials {
        let info = BitVec::from_bools((0..k).map(|_| rng.random::<bool>()));
        let c = g.encode(&info);
        if hit(&c) {
            return Ok(Some(c));
        }
    }

    let n = g.length();
    let mut cols: Vec<usize> = (0..n).collect();
    for _ in 0..trials {
        cols.shuffle(&mut rng);
        let mut rows = g.rows().to_vec();
        let mut placed = 0;
        for &c in &cols {
            if placed == k {
                break;
            }
            let Some(p) = (placed..k).find(|&r| rows[r].get(c)) else {
                continue;
            };
            rows.swap(placed, p);
            let pivot = rows[placed].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != placed && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            placed += 1;
        }
        for i in 0..k {
            if hit(&rows[i]) {
                return Ok(Some(rows[i].clone()));
            }
            for j in i + 1..k {
                let s = rows[i].xor(&rows[j]);
                if hit(&s) {
                    return Ok(Some(s));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Weight of the sum of all generator rows of the code with all even (or
/// all odd) weights in `{0..m}`.
pub fn odd_even_all_ones_weight(m: usize, parity: Parity) -> Result<usize> {
    let ws = match parity {
        Parity::Even => WeightSet::even(m),
        Parity::Odd => WeightSet::odd(m),
    };
    let g = abelian_generator(m, &ws, Kernel::A3)?;
    Ok(g.encode(&BitVec::ones(g.dimension())).weight())
}

/// A node of the distance recursion.
#[derive(Clone, Debug, Serialize)]
pub struct RecursionNode {
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    pub interval: DistanceInterval,
    pub base_case: Option<BaseCase>,
    pub children: Vec<(Shift, RecursionNode)>,
}

impl RecursionNode {
    pub fn name(&self) -> String {
        format!("BiD({},{},{})", self.m, self.r1, self.r2)
    }

    /// Distinct edges of the recursion graph as `parent -> child [label]`
    /// lines; shared sub-codes appear once. A base case prints its name.
    pub fn to_edge_list(&self) -> String {
        let mut edges = BTreeSet::new();
        self.collect_edges(&mut edges);
        let mut s = String::new();
        if edges.is_empty() {
            let _ = writeln!(s, "{}", self.name());
        }
        for (p, c, l) in edges {
            let _ = writeln!(s, "{p} -> {c} [{l}]");
        }
        s
    }

    fn collect_edges(&self, out: &mut BTreeSet<(String, String, &'static str)>) {
        for (shift, child) in &self.children {
            out.insert((self.name(), child.name(), shift.label()));
            child.collect_edges(out);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

pub fn recursion_tree(m: usize, r1: usize, r2: usize) -> Result<RecursionNode> {
    check_params(m, r1, r2)?;
    let mut bounds = DistanceBounds::new();
    Ok(build_tree(&mut bounds, m, r1, r2))
}

fn build_tree(bounds: &mut DistanceBounds, m: usize, r1: usize, r2: usize) -> RecursionNode {
    let interval = bounds.eval(m, r1, r2);
    let base = leaf(m, r1, r2).map(|(b, _)| b);
    let children = if base.is_some() {
        Vec::new()
    } else {
        children(r1, r2)
            .into_iter()
            .map(|(s, a, b)| (s, build_tree(bounds, m - 1, a, b)))
            .collect()
    };
    RecursionNode {
        m,
        r1,
        r2,
        interval,
        base_case: base,
        children,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScatterRow {
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    pub k: usize,
    pub rate: f64,
    pub dmin_lower: u64,
    /// `ln(dmin_lower) / ln(N)`
    pub log_ratio: f64,
}

pub const SCATTER_HEADER: &str = "m,r1,r2,K,rate,dmin_lower,log_ratio";

impl ScatterRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{:.6},{},{:.6}",
            self.m, self.r1, self.r2, self.k, self.rate, self.dmin_lower, self.log_ratio
        )
    }
}

/// Rate against normalized log distance for every `(r1, r2)` at this `m`,
/// using the closed-form lower bound.
pub fn scatter_data(m: usize) -> Result<Vec<ScatterRow>> {
    let n = pow3(m) as f64;
    let mut out = Vec::new();
    for r1 in 0..=m {
        for r2 in r1..=m {
            let d = closed_form_lower(m, r1, r2)?;
            let k = bid_dimension(m, r1, r2);
            out.push(ScatterRow {
                m,
                r1,
                r2,
                k,
                rate: k as f64 / n,
                dmin_lower: d,
                log_ratio: (d as f64).ln() / n.ln(),
            });
        }
    }
    Ok(out)
}

fn bid_dimension(m: usize, r1: usize, r2: usize) -> usize {
    (r1..=r2).map(|w| binomial(m, w) << w).sum()
}

/// One line of the distance table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    pub k: usize,
    pub dmin_lower: u64,
    pub dmin_upper: u64,
    pub closed_form: u64,
    pub exact: bool,
}

pub const TABLE_HEADER: &str = "m,r1,r2,K,dmin_lower,dmin_upper,closed_form,exact_flag";

impl TableRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.m, self.r1, self.r2, self.k, self.dmin_lower, self.dmin_upper, self.closed_form, self.exact
        )
    }
}

/// Rows for every `0 <= r1 <= r2 <= m`, `m` in `min_m..=max_m`.
pub fn distance_table(min_m: usize, max_m: usize) -> Result<Vec<TableRow>> {
    let mut bounds = DistanceBounds::new();
    let mut rows = Vec::new();
    for m in min_m.max(1)..=max_m {
        for r1 in 0..=m {
            for r2 in r1..=m {
                let iv = bounds.bounds(m, r1, r2)?;
                rows.push(TableRow {
                    m,
                    r1,
                    r2,
                    k: bid_dimension(m, r1, r2),
                    dmin_lower: iv.lower,
                    dmin_upper: iv.upper,
                    closed_form: closed_form_lower(m, r1, r2)?,
                    exact: iv.is_exact(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut s = String::from(TABLE_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.to_csv());
        s.push('\n');
    }
    s
}

/// Published `(m, r1, r2, dmin_lower, dmin_upper, K)` for lengths 9 to 729.
pub const REFERENCE_TABLE: &[(usize, usize, usize, u64, u64, usize)] = &[
    (2, 0, 0, 9, 9, 1),
    (2, 0, 1, 3, 3, 5),
    (2, 0, 2, 1, 1, 9),
    (2, 1, 1, 4, 4, 4),
    (2, 1, 2, 2, 2, 8),
    (2, 2, 2, 4, 4, 4),
    (3, 0, 0, 27, 27, 1),
    (3, 0, 1, 9, 9, 7),
    (3, 0, 2, 3, 3, 19),
    (3, 0, 3, 1, 1, 27),
    (3, 1, 1, 12, 12, 6),
    (3, 1, 2, 4, 4, 18),
    (3, 1, 3, 2, 2, 26),
    (3, 2, 2, 6, 6, 12),
    (3, 2, 3, 4, 4, 20),
    (3, 3, 3, 8, 8, 8),
    (4, 0, 0, 81, 81, 1),
    (4, 0, 1, 27, 27, 9),
    (4, 0, 2, 9, 9, 33),
    (4, 0, 3, 3, 3, 65),
    (4, 0, 4, 1, 1, 81),
    (4, 1, 1, 36, 36, 8),
    (4, 1, 2, 12, 12, 32),
    (4, 1, 3, 4, 4, 64),
    (4, 1, 4, 2, 2, 80),
    (4, 2, 2, 16, 18, 24),
    (4, 2, 3, 6, 6, 56),
    (4, 2, 4, 4, 4, 72),
    (4, 3, 3, 12, 12, 32),
    (4, 3, 4, 8, 8, 48),
    (4, 4, 4, 16, 16, 16),
    (5, 0, 0, 243, 243, 1),
    (5, 0, 1, 81, 81, 11),
    (5, 0, 2, 27, 27, 51),
    (5, 0, 3, 9, 9, 131),
    (5, 0, 4, 3, 3, 211),
    (5, 0, 5, 1, 1, 243),
    (5, 1, 1, 108, 108, 10),
    (5, 1, 2, 36, 36, 50),
    (5, 1, 3, 12, 12, 130),
    (5, 1, 4, 4, 4, 210),
    (5, 1, 5, 2, 2, 242),
    (5, 2, 2, 48, 54, 40),
    (5, 2, 3, 16, 18, 120),
    (5, 2, 4, 6, 6, 200),
    (5, 2, 5, 4, 4, 232),
    (5, 3, 3, 22, 36, 80),
    (5, 3, 4, 12, 12, 160),
    (5, 3, 5, 8, 8, 192),
    (5, 4, 4, 24, 24, 80),
    (5, 4, 5, 16, 16, 112),
    (5, 5, 5, 32, 32, 32),
    (6, 0, 0, 729, 729, 1),
    (6, 0, 1, 243, 243, 13),
    (6, 0, 2, 81, 81, 73),
    (6, 0, 3, 27, 27, 233),
    (6, 0, 4, 9, 9, 473),
    (6, 0, 5, 3, 3, 665),
    (6, 0, 6, 1, 1, 729),
    (6, 1, 1, 324, 324, 12),
    (6, 1, 2, 108, 108, 72),
    (6, 1, 3, 36, 36, 232),
    (6, 1, 4, 12, 12, 472),
    (6, 1, 5, 4, 4, 664),
    (6, 1, 6, 2, 2, 728),
    (6, 2, 2, 144, 162, 60),
    (6, 2, 3, 48, 54, 220),
    (6, 2, 4, 16, 18, 460),
    (6, 2, 5, 6, 6, 652),
    (6, 2, 6, 4, 4, 716),
    (6, 3, 3, 64, 108, 160),
    (6, 3, 4, 22, 36, 400),
    (6, 3, 5, 12, 12, 592),
    (6, 3, 6, 8, 8, 656),
    (6, 4, 4, 36, 72, 240),
    (6, 4, 5, 24, 24, 432),
    (6, 4, 6, 16, 16, 496),
    (6, 5, 5, 48, 48, 192),
    (6, 5, 6, 32, 32, 256),
    (6, 6, 6, 64, 64, 64),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::Kernel;

    #[test]
    fn base_cases() {
        assert_eq!(base_case_distance(3, 0, 2), Some(3));
        assert_eq!(base_case_distance(3, 1, 3), Some(2));
        assert_eq!(base_case_distance(4, 0, 4), Some(1));
        assert_eq!(base_case_distance(4, 1, 2), None);
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(recursive_bounds(3, 1, 2).unwrap(), DistanceInterval::exact(4));
        assert_eq!(
            recursive_bounds(4, 2, 2).unwrap(),
            DistanceInterval { lower: 16, upper: 18 }
        );
        assert_eq!(
            recursive_bounds(5, 2, 2).unwrap(),
            DistanceInterval { lower: 48, upper: 54 }
        );
        assert_eq!(
            recursive_bounds(6, 3, 3).unwrap(),
            DistanceInterval { lower: 64, upper: 108 }
        );
        assert!(recursive_bounds(3, 2, 1).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_lower(5, 2, 2).unwrap(), 48);
        assert_eq!(closed_form_lower(3, 2, 2).unwrap(), 6);
        for m in 1..=6 {
            for r2 in 0..=m {
                let d = closed_form_lower(m, 0, r2).unwrap();
                assert_eq!(d, pow3(m - r2) as u64);
                assert!(d >= (1.5f64).powi((m - r2) as i32).ceil() as u64);
            }
        }
    }

    #[test]
    fn exact_formulas() {
        assert_eq!(exact_w_one(2).unwrap(), (4, 6));
        assert_eq!(exact_w_one(3).unwrap().0, 12);
        assert!(exact_w_one(1).is_err());
        assert_eq!(exact_w_m_minus_one(3).unwrap(), 6);
        assert_eq!(exact_w_m_minus_one(4).unwrap(), 12);
        assert_eq!(exact_w_m_minus_one(5).unwrap(), 24);
        assert!(exact_w_m_minus_one(2).is_err());
    }

    #[test]
    fn brute_force_examples() {
        for (m, r1, r2, d) in [(2, 1, 1, 4), (3, 2, 3, 4), (3, 1, 1, 12)] {
            let g = bid_generator(&CodeSpec::bid(m, r1, r2, Kernel::A3).unwrap()).unwrap();
            let (w, word) = brute_force_min_distance(&g, DEFAULT_DIM_BUDGET).unwrap();
            assert_eq!(w, d);
            assert_eq!(word.weight(), d);
            assert!(g.solve(&word).is_ok());
        }
        let big = bid_generator(&CodeSpec::bid(3, 1, 2, Kernel::A3).unwrap()).unwrap();
        assert_eq!(
            brute_force_min_distance(&big, 10).unwrap_err(),
            Error::BudgetExceeded { dim: 18, budget: 10 }
        );
    }

    #[test]
    fn parity_sets() {
        assert_eq!(odd_even_all_ones_weight(1, Parity::Even).unwrap(), 3);
        assert_eq!(odd_even_all_ones_weight(2, Parity::Even).unwrap(), 5);
        assert_eq!(odd_even_all_ones_weight(4, Parity::Odd).unwrap(), 8);
    }

    #[test]
    fn tree_structure() {
        let t = recursion_tree(4, 1, 2).unwrap();
        let kids: Vec<(Shift, usize, usize, usize)> = t.children.iter().map(|(s, c)| (*s, c.m, c.r1, c.r2)).collect();
        assert_eq!(
            kids,
            vec![
                (Shift::Same, 3, 1, 2),
                (Shift::DropTop, 3, 1, 1),
                (Shift::ExtendBottom, 3, 0, 2),
                (Shift::ShiftDown, 3, 0, 1),
            ]
        );
        assert!(recursion_tree(4, 2, 4).unwrap().children.is_empty());
        assert_eq!(recursion_tree(2, 1, 1).unwrap().to_edge_list(), "BiD(2,1,1)\n");
        let edges = t.to_edge_list();
        assert!(edges.contains("BiD(4,1,2) -> BiD(3,1,1) [W_{0,-1}]"));
        assert!(t.to_json().contains("\"base_case\""));
    }

    #[test]
    fn scatter_example() {
        let rows = scatter_data(5).unwrap();
        let r = rows.iter().find(|r| (r.r1, r.r2) == (2, 2)).unwrap();
        assert_eq!(r.k, 40);
        assert!((r.rate - 40.0 / 243.0).abs() < 1e-12);
        assert!((r.log_ratio - 0.7046).abs() < 1e-3);
        assert_eq!(rows.len(), 21);
    }

    #[test]
    fn table_csv_layout() {
        let rows = distance_table(2, 2).unwrap();
        let csv = table_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(TABLE_HEADER));
        assert_eq!(lines.next(), Some("2,0,0,1,9,9,9,true"));
        assert_eq!(csv.lines().count(), 7);
    }

    #[test]
    fn reference_table_shape() {
        assert_eq!(REFERENCE_TABLE.len(), 80);
    }
}
