//! Line-folds: finite line sets with parallels and concurrencies allowed,
//! and the exact region count for the complement of a completely split
//! polynomial's zero set.

use std::collections::BTreeMap;

use crate::kernel::{binomial, intersect, LineEq, Point};
use crate::regions::{oracle_enumerate, SignVector};

/// A line-fold: lines with multiplicities. Multiplicities only matter to the
/// input polynomial; all geometry runs on the reduced (deduplicated) lines.
#[derive(Clone, Debug)]
pub struct LineFold {
    factors: Vec<(LineEq, u32)>,
    reduced: Vec<LineEq>,
    parallel_classes: Vec<Vec<usize>>,
    concurrency_points: Vec<(Point, usize)>,
}

impl LineFold {
    pub fn new(lines: Vec<LineEq>) -> Self {
        Self::from_factored_polynomial(lines.into_iter().map(|l| (l, 1)).collect())
    }

    /// Build from the factored form of a completely split polynomial: the
    /// reduced line set is the distinct factors, a concurrency point records
    /// how many distinct lines pass through it (the vanishing order of the
    /// reduced polynomial there).
    pub fn from_factored_polynomial(factors: Vec<(LineEq, u32)>) -> Self {
        let mut reduced: Vec<LineEq> = Vec::new();
        for (l, _) in &factors {
            if !reduced.contains(l) {
                reduced.push(l.clone());
            }
        }
        let mut by_slope: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (i, l) in reduced.iter().enumerate() {
            by_slope
                .entry(crate::kernel::slope_order_key(&l.slope()))
                .or_default()
                .push(i);
        }
        let parallel_classes: Vec<Vec<usize>> = by_slope.into_values().collect();
        let mut through: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
        for i in 0..reduced.len() {
            for j in i + 1..reduced.len() {
                if let Some(p) = intersect(&reduced[i], &reduced[j]) {
                    let e = through.entry(p).or_default();
                    for t in [i, j] {
                        if !e.contains(&t) {
                            e.push(t);
                        }
                    }
                }
            }
        }
        let concurrency_points: Vec<(Point, usize)> =
            through.into_iter().map(|(p, ls)| (p, ls.len())).collect();
        LineFold {
            factors,
            reduced,
            parallel_classes,
            concurrency_points,
        }
    }

    pub fn factors(&self) -> &[(LineEq, u32)] {
        &self.factors
    }

    pub fn reduced_lines(&self) -> &[LineEq] {
        &self.reduced
    }

    /// Degree of the reduced polynomial.
    pub fn degree(&self) -> usize {
        self.reduced.len()
    }

    pub fn parallel_classes(&self) -> &[Vec<usize>] {
        &self.parallel_classes
    }

    /// Points with at least two reduced lines through them, with the count.
    pub fn concurrency_points(&self) -> &[(Point, usize)] {
        &self.concurrency_points
    }

    pub fn has_parallels(&self) -> bool {
        self.parallel_classes.iter().any(|c| c.len() > 1)
    }
}

/// Region tallies of a line-fold. The bounded/unbounded split is reported
/// only when no two lines are parallel; no closed form is stated otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldCounts {
    pub total: u64,
    pub bounded: Option<u64>,
    pub unbounded: Option<u64>,
}

/// Closed-form region count of the complement of the fold:
/// `1 + d + C(d,2) − Σ_p C(k_p − 1, 2) − Σ_i C(l_i, 2)` with `d` the reduced
/// degree, `k_p` the concurrency orders and `l_i` the parallel class sizes.
/// When every `l_i = 1`, the bounded count is
/// `C(d−1,2) − Σ_p C(k_p − 1, 2)` and the unbounded count is `2d`.
pub fn fold_census(fold: &LineFold) -> FoldCounts {
    let d = fold.degree();
    assert!(d >= 1);
    let concurrency_correction: u64 = fold
        .concurrency_points()
        .iter()
        .map(|(_, k)| binomial(k - 1, 2))
        .sum();
    let parallel_correction: u64 = fold
        .parallel_classes()
        .iter()
        .map(|c| binomial(c.len(), 2))
        .sum();
    let total = 1 + d as u64 + binomial(d, 2) - concurrency_correction - parallel_correction;
    if fold.has_parallels() {
        FoldCounts {
            total,
            bounded: None,
            unbounded: None,
        }
    } else {
        let bounded = binomial(d - 1, 2) - concurrency_correction;
        FoldCounts {
            total,
            bounded: Some(bounded),
            unbounded: Some(2 * d as u64),
        }
    }
}

/// Exhaustive oracle tallies over all sign vectors of the reduced lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleFoldCounts {
    pub total: u64,
    pub bounded: u64,
    pub unbounded: u64,
}

pub fn fold_oracle_census(fold: &LineFold) -> OracleFoldCounts {
    let cells = oracle_enumerate(fold.reduced_lines());
    let bounded = cells.iter().filter(|(_, v)| v.bounded).count() as u64;
    OracleFoldCounts {
        total: cells.len() as u64,
        bounded,
        unbounded: cells.len() as u64 - bounded,
    }
}

/// Feasible sign vectors of the reduced lines, for reporting.
pub fn fold_cells(fold: &LineFold) -> Vec<SignVector> {
    oracle_enumerate(fold.reduced_lines())
        .into_iter()
        .map(|(sv, _)| sv)
        .collect()
}

/// Replace a `k`-fold concurrency by a generic perturbation: all but two of
/// the lines through `point` are translated by distinct small offsets chosen
/// so that no incidence other than the split one changes. Region totals grow
/// by exactly `C(k−1, 2)`.
pub fn split_concurrency(fold: &LineFold, point: &Point) -> Option<LineFold> {
    let through: Vec<usize> = fold
        .reduced_lines()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.contains(point))
        .map(|(i, _)| i)
        .collect();
    if through.len() < 3 {
        return None;
    }
    let reference = reference_census(fold, Some(point));
    let mut eps = crate::kernel::rat(1, 2);
    for _ in 0..64 {
        let mut lines = fold.reduced_lines().to_vec();
        for (t, &i) in through.iter().enumerate().skip(2) {
            let delta = &eps * crate::kernel::int(t as i64 - 1);
            lines[i] = lines[i].with_intercept(lines[i].c() + delta);
        }
        let cand = LineFold::new(lines);
        if reference_census(&cand, None) == reference {
            return Some(cand);
        }
        eps /= crate::kernel::int(2);
    }
    None
}

/// Incidence data that must survive the split untouched: parallel class
/// sizes and the multiset of concurrency orders at least three, minus the
/// split point itself. Simple crossings (order two) contribute nothing to
/// the censuses and may relocate freely.
fn reference_census(fold: &LineFold, split: Option<&Point>) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<usize> = fold.parallel_classes().iter().map(|c| c.len()).collect();
    classes.sort_unstable();
    let mut pencils: Vec<usize> = fold
        .concurrency_points()
        .iter()
        .filter(|(p, k)| *k >= 3 && split != Some(p))
        .map(|(_, k)| *k)
        .collect();
    pencils.sort_unstable();
    (classes, pencils)
}
