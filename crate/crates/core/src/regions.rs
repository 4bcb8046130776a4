//! Region enumeration for an arrangement: sign vectors, boundary walks,
//! boundedness, gonality, crossing numbers, and the independent
//! Fourier–Motzkin feasibility oracle.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::arrangement::{Arrangement, VertexId};
use crate::error::{Error, Result};
use crate::kernel::{binomial, side_of, LineEq, Rational, Slope};

/// One strict side per line: a vector over `{-1, +1}`.
///
/// Feasible sign vectors are in bijection with the (open) regions of the
/// arrangement.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn flipped(&self, lines: &[usize]) -> SignVector {
        let mut v = self.0.clone();
        for &t in lines {
            v[t] = -v[t];
        }
        SignVector(v)
    }

    /// Number of positions where two sign vectors differ. For regions of one
    /// arrangement this counts the separating lines, which is exactly the
    /// crossing number along any generic segment between interior points.
    pub fn hamming(&self, other: &SignVector) -> usize {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

impl std::fmt::Display for SignVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.0 {
            write!(f, "{}", if *s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// A region of the arrangement, as the open cell of its sign vector plus the
/// boundary structure recovered from the vertex walk.
#[derive(Clone, Debug)]
pub struct Region {
    pub sign: SignVector,
    /// Corner vertices in walk order: a closed cycle for bounded regions, an
    /// open chain (first and last corners carry the rays) for unbounded ones.
    pub corners: Vec<VertexId>,
    /// Line of each walk edge; `edge_lines[t]` joins `corners[t]` to
    /// `corners[t+1]` (cyclically for bounded regions).
    pub edge_lines: Vec<usize>,
    /// All lines contributing an edge or ray, sorted.
    pub boundary_lines: Vec<usize>,
    pub bounded: bool,
    /// Number of boundary lines; for a bounded region this equals the number
    /// of corners.
    pub gonality: usize,
}

impl Region {
    /// Corner cycle of a bounded region oriented anticlockwise.
    pub fn acw_corners(&self, arr: &Arrangement) -> Vec<VertexId> {
        assert!(self.bounded);
        if signed_area_twice(arr, &self.corners).is_negative() {
            let mut rev = self.corners.clone();
            rev.reverse();
            rev
        } else {
            self.corners.clone()
        }
    }

    /// Ray lines of an unbounded region (the two lines meeting the region in
    /// a ray); empty for bounded regions, the single line for `n = 1`.
    pub fn ray_lines(&self) -> Vec<usize> {
        if self.bounded {
            return Vec::new();
        }
        if self.corners.is_empty() {
            return self.boundary_lines.clone();
        }
        if self.corners.len() == 1 {
            return self.corners[0].lines().to_vec();
        }
        let first = &self.corners[0];
        let last = &self.corners[self.corners.len() - 1];
        vec![
            first.other(self.edge_lines[0]),
            last.other(*self.edge_lines.last().unwrap()),
        ]
    }
}

/// Twice the signed area of the corner polygon (positive = anticlockwise).
pub fn signed_area_twice(arr: &Arrangement, corners: &[VertexId]) -> Rational {
    let mut acc = Rational::zero();
    let k = corners.len();
    for t in 0..k {
        let p = arr.vertex(corners[t]);
        let q = arr.vertex(corners[(t + 1) % k]);
        acc += &p.x * &q.y - &q.x * &p.y;
    }
    acc
}

/// All regions of the arrangement, sorted by sign vector.
///
/// Candidates come from the vertices: around `L_i ∩ L_j` the four sign
/// choices on `i, j` combined with the fixed sides of the other lines list
/// every cell with a boundary vertex, which for `n ≥ 2` is every cell. The
/// two half planes of `n = 1` are special-cased.
pub fn enumerate_regions(arr: &Arrangement) -> Vec<Region> {
    let n = arr.n();
    if n == 1 {
        return [-1i8, 1]
            .iter()
            .map(|&s| Region {
                sign: SignVector(vec![s]),
                corners: Vec::new(),
                edge_lines: Vec::new(),
                boundary_lines: vec![0],
                bounded: false,
                gonality: 1,
            })
            .collect();
    }
    let mut signs = BTreeSet::new();
    for (v, p) in arr.vertices() {
        let mut fixed = vec![0i8; n];
        for (t, slot) in fixed.iter_mut().enumerate() {
            if !v.contains(t) {
                let s = side_of(arr.line(t), p);
                debug_assert_ne!(s, 0, "no three lines concurrent");
                *slot = s;
            }
        }
        for &si in &[-1i8, 1] {
            for &sj in &[-1i8, 1] {
                let mut sv = fixed.clone();
                sv[v.lo] = si;
                sv[v.hi] = sj;
                signs.insert(SignVector(sv));
            }
        }
    }
    signs.into_iter().map(|sv| build_region(arr, sv)).collect()
}

fn build_region(arr: &Arrangement, sign: SignVector) -> Region {
    let n = arr.n();
    // Corners: vertices lying on the closure of the cell.
    let mut by_line: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for (v, p) in arr.vertices() {
        let ok = (0..n)
            .filter(|&t| !v.contains(t))
            .all(|t| side_of(arr.line(t), p) == sign.0[t]);
        if ok {
            by_line.entry(v.lo).or_default().push(v);
            by_line.entry(v.hi).or_default().push(v);
        }
    }
    debug_assert!(!by_line.is_empty(), "every cell has a boundary vertex");
    for corners in by_line.values() {
        debug_assert!(corners.len() <= 2);
    }
    let ray_lines: Vec<usize> = by_line
        .iter()
        .filter(|(_, cs)| cs.len() == 1)
        .map(|(&l, _)| l)
        .collect();
    let boundary_lines: Vec<usize> = by_line.keys().copied().collect();
    let bounded = ray_lines.is_empty();
    debug_assert!(bounded || ray_lines.len() == 2);

    // Walk the boundary: consecutive corners share a line.
    let (start, mut via) = if bounded {
        let v = *by_line.values().flatten().min().unwrap();
        (v, v.lo)
    } else {
        let l = ray_lines[0];
        let v = by_line[&l][0];
        (v, l)
    };
    let mut corners = vec![start];
    let mut edge_lines = Vec::new();
    loop {
        let cur = *corners.last().unwrap();
        let next_line = cur.other(via);
        let pair = &by_line[&next_line];
        let next = pair.iter().copied().find(|&w| w != cur);
        match next {
            Some(w) if bounded && w == start => {
                edge_lines.push(next_line);
                break;
            }
            Some(w) => {
                edge_lines.push(next_line);
                corners.push(w);
                via = next_line;
            }
            None => break, // reached the second ray line
        }
    }
    let gonality = boundary_lines.len();
    debug_assert_eq!(corners.len(), if bounded { gonality } else { gonality - 1 });
    Region {
        sign,
        corners,
        edge_lines,
        boundary_lines,
        bounded,
        gonality,
    }
}

/// Closed-form region tallies `(total, bounded, unbounded)`; asserted equal
/// to the enumeration before returning.
///
/// For a set of lines spanned by `n` points the total is bounded by
/// `(n⁴ − 2n³ + 3n² − 2n + 8) / 8`, substituting `C(n, 2)` lines into the
/// same counts.
pub fn region_counts(arr: &Arrangement) -> (u64, u64, u64) {
    let n = arr.n();
    let expect = (binomial(n + 1, 2) + 1, binomial(n - 1, 2), 2 * n as u64);
    let regions = enumerate_regions(arr);
    let bounded = regions.iter().filter(|r| r.bounded).count() as u64;
    let total = regions.len() as u64;
    assert_eq!((total, bounded, total - bounded), expect);
    expect
}

/// Verdict of the feasibility oracle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OracleVerdict {
    pub feasible: bool,
    /// Meaningful only when feasible.
    pub bounded: bool,
}

/// Decides by two-variable Fourier–Motzkin elimination whether the open
/// system `sign_t · (a_t·x + b_t·y − c_t) > 0` has a solution, entirely in
/// exact rationals. Works for arbitrary line lists: parallels and
/// concurrencies are allowed, which makes this the independent oracle for
/// every census in the crate.
///
/// Boundedness is decided on the homogeneous recession system
/// `sign_t · (a_t·x + b_t·y) ≥ 0`: the cell is unbounded exactly when that
/// cone contains a nonzero vector.
pub fn oracle_feasible(lines: &[LineEq], sv: &SignVector) -> OracleVerdict {
    assert_eq!(lines.len(), sv.len());
    let feasible = fm_feasible(lines, sv);
    let bounded = feasible && !recession_nonzero(lines, sv);
    OracleVerdict { feasible, bounded }
}

fn fm_feasible(lines: &[LineEq], sv: &SignVector) -> bool {
    // Constraints alpha·x + beta·y > gamma.
    let cons: Vec<(Rational, Rational, Rational)> = lines
        .iter()
        .zip(&sv.0)
        .map(|(l, &s)| {
            let s = crate::kernel::int(s as i64);
            (l.a() * &s, l.b() * &s, l.c() * &s)
        })
        .collect();
    // Eliminate y.
    let mut one_var: Vec<(Rational, Rational)> = Vec::new(); // p·x > q
    let lowers: Vec<_> = cons.iter().filter(|c| c.1.is_positive()).collect();
    let uppers: Vec<_> = cons.iter().filter(|c| c.1.is_negative()).collect();
    for c in cons.iter().filter(|c| c.1.is_zero()) {
        one_var.push((c.0.clone(), c.2.clone()));
    }
    for l in &lowers {
        for u in &uppers {
            // (beta_l·alpha_u − beta_u·alpha_l)·x > beta_l·gamma_u − beta_u·gamma_l
            let p = &l.1 * &u.0 - &u.1 * &l.0;
            let q = &l.1 * &u.2 - &u.1 * &l.2;
            one_var.push((p, q));
        }
    }
    // Eliminate x.
    let mut low: Option<Rational> = None;
    let mut high: Option<Rational> = None;
    for (p, q) in one_var {
        if p.is_zero() {
            if !q.is_negative() {
                return false;
            }
        } else {
            let bound = &q / &p;
            if p.is_positive() {
                low = Some(match low {
                    Some(cur) => cur.max(bound),
                    None => bound,
                });
            } else {
                high = Some(match high {
                    Some(cur) => cur.min(bound),
                    None => bound,
                });
            }
        }
    }
    match (low, high) {
        (Some(l), Some(h)) => l < h,
        _ => true,
    }
}

/// Nonzero recession direction test. A nontrivial polyhedral cone in the
/// plane always contains one of the boundary-aligned candidate directions
/// `±(b_t, −a_t)`.
fn recession_nonzero(lines: &[LineEq], sv: &SignVector) -> bool {
    let admits = |dx: &Rational, dy: &Rational| -> bool {
        lines.iter().zip(&sv.0).all(|(l, &s)| {
            let v = l.a() * dx + l.b() * dy;
            if s > 0 {
                !v.is_negative()
            } else {
                !v.is_positive()
            }
        })
    };
    for l in lines {
        let (dx, dy) = (l.b().clone(), -l.a().clone());
        if admits(&dx, &dy) || admits(&-dx.clone(), &-dy.clone()) {
            return true;
        }
    }
    false
}

/// All feasible sign vectors of an arbitrary line list, via the oracle.
pub fn oracle_enumerate(lines: &[LineEq]) -> Vec<(SignVector, OracleVerdict)> {
    let n = lines.len();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let sv = SignVector(
            (0..n)
                .map(|t| if mask >> t & 1 == 1 { 1 } else { -1 })
                .collect(),
        );
        let verdict = oracle_feasible(lines, &sv);
        if verdict.feasible {
            out.push((sv, verdict));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Crossing number between two distinct regions of one arrangement: the
/// number of lines separating them, i.e. the Hamming distance of their sign
/// vectors. A generic segment between interior points crosses exactly the
/// separating lines, so this is independent of any choice of witness line.
pub fn crossing_number(r1: &Region, r2: &Region) -> usize {
    r1.sign.hamming(&r2.sign)
}

/// Finds the region carrying a given sign vector.
pub fn region_with_sign<'a>(regions: &'a [Region], sv: &SignVector) -> Option<&'a Region> {
    regions.iter().find(|r| &r.sign == sv)
}

/// Does a cyclic slope sequence admit a 2-standard consecutive structure?
///
/// The four chains (non-negatives ascending to `∞`, negatives ascending,
/// positives ascending to `∞`, negatives ascending) concatenate into two
/// runs that each ascend in the circular slope order, and the split
/// conditions at the chain borders are exactly the circular descents. So
/// the criterion is: the cyclic sequence has exactly two positions where
/// the slope order does not strictly increase. This is what the boundary of
/// a convex polygon produces when traversed anticlockwise: its edge
/// directions wind the slope circle exactly twice.
pub fn has_two_standard_slope_structure(slopes: &[Slope]) -> bool {
    let r = slopes.len();
    if r < 3 {
        return false;
    }
    let descents = (0..r)
        .filter(|&t| {
            let a = &slopes[t];
            let b = &slopes[(t + 1) % r];
            a >= b // slope order, cut at +0
        })
        .count();
    descents == 2
}

/// Checks whether a closed traversal of vertices bounds a region: the edges
/// must join adjacent vertices, turn at every vertex, and carry slopes with
/// a 2-standard consecutive structure (in either traversal orientation).
/// The verdict is cross-checked against the enumerated bounded regions.
pub fn jordan_traversal_is_region(arr: &Arrangement, cycle: &[VertexId]) -> Result<bool> {
    let k = cycle.len();
    if k < 3 {
        return Err(Error::MalformedCycle("fewer than three vertices".into()));
    }
    let mut edge_lines = Vec::with_capacity(k);
    for t in 0..k {
        let v = cycle[t];
        let w = cycle[(t + 1) % k];
        match arr.adjacent_on(v, w) {
            Some(line) => edge_lines.push(line),
            None => {
                return Err(Error::MalformedCycle(format!(
                    "vertices ({},{}) and ({},{}) are not adjacent",
                    v.lo, v.hi, w.lo, w.hi
                )))
            }
        }
    }
    for t in 0..k {
        if edge_lines[t] == edge_lines[(t + 1) % k] {
            return Err(Error::MalformedCycle(
                "two consecutive edges lie on one line".into(),
            ));
        }
    }
    let slopes: Vec<Slope> = edge_lines.iter().map(|&l| arr.line(l).slope()).collect();
    let mut rev = slopes.clone();
    rev.reverse();
    let verdict =
        has_two_standard_slope_structure(&slopes) || has_two_standard_slope_structure(&rev);
    // Cross-check: the traversal is a region boundary exactly when the slope
    // criterion accepts it.
    let is_boundary = enumerate_regions(arr).iter().any(|r| {
        r.bounded && r.corners.len() == k && {
            let mut sorted_a = r.corners.clone();
            let mut sorted_b = cycle.to_vec();
            sorted_a.sort();
            sorted_b.sort();
            sorted_a == sorted_b
        }
    });
    assert_eq!(
        verdict, is_boundary,
        "slope criterion vs enumerated regions"
    );
    Ok(verdict)
}
