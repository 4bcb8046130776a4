//! Permutation-cycle invariants of an arrangement: the cycle at infinity,
//! local cycles in permutation charts, the consecutive standard
//! decomposition, the family `T_n` of 2-standard consecutive cycles, the
//! slope property, global cyclicity and the gonality censuses.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed};

use crate::arrangement::{Arrangement, PointClass, VertexId};
use crate::error::{Error, Result};
use crate::kernel::{int, slope_order_key, LineEq, Rational, Slope, Vec2};
use crate::regions::{enumerate_regions, signed_area_twice, Region};

/// A cyclic permutation on a finite set of distinct letters, stored as the
/// cyclic word rotated to start at the smallest letter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cycle {
    word: Vec<usize>,
}

impl Cycle {
    pub fn from_word(seq: &[usize]) -> Cycle {
        assert!(!seq.is_empty());
        let set: BTreeSet<usize> = seq.iter().copied().collect();
        assert_eq!(set.len(), seq.len(), "letters must be distinct");
        let min = *set.iter().next().unwrap();
        let start = seq.iter().position(|&x| x == min).unwrap();
        let word = (0..seq.len())
            .map(|t| seq[(start + t) % seq.len()])
            .collect();
        Cycle { word }
    }

    /// 1-based convenience constructor: `[1, 3, 2, 4]` becomes the cycle on
    /// letters `{0..3}` reading `(0 2 1 3)`.
    pub fn from_one_based(seq: &[usize]) -> Cycle {
        let shifted: Vec<usize> = seq.iter().map(|&x| x - 1).collect();
        Cycle::from_word(&shifted)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn letters(&self) -> BTreeSet<usize> {
        self.word.iter().copied().collect()
    }

    pub fn successor(&self, x: usize) -> usize {
        let p = self.word.iter().position(|&y| y == x).expect("letter");
        self.word[(p + 1) % self.word.len()]
    }

    /// Cycle obtained by dropping every letter outside `keep`.
    pub fn restricted(&self, keep: &BTreeSet<usize>) -> Cycle {
        let seq: Vec<usize> = self
            .word
            .iter()
            .copied()
            .filter(|x| keep.contains(x))
            .collect();
        Cycle::from_word(&seq)
    }

    /// Conjugate by the letter map, i.e. rename every letter.
    pub fn relabel(&self, map: &BTreeMap<usize, usize>) -> Cycle {
        let seq: Vec<usize> = self.word.iter().map(|x| map[x]).collect();
        Cycle::from_word(&seq)
    }

    pub fn format_one_based(&self) -> String {
        let parts: Vec<String> = self.word.iter().map(|x| (x + 1).to_string()).collect();
        format!("({})", parts.join(" "))
    }
}

/// The cycle at infinity: subscripts read along a far oriented generic line
/// with every vertex (and the frame reference) strictly on its origin side.
#[derive(Clone, Debug)]
pub struct InfinityCycle {
    /// The reading, in far-line travel order.
    pub order: Vec<usize>,
    /// The same reading as an abstract cycle (rotation-free).
    pub as_cycle: Cycle,
}

/// Deterministic far line: slope one past the largest finite slope, offset
/// one past the largest functional value over vertices and reference point.
pub fn far_line(arr: &Arrangement) -> LineEq {
    let mut far_slope = Rational::one();
    for line in arr.lines() {
        if let Slope::Finite(m) = line.slope() {
            let cand = &m + Rational::one();
            if cand > far_slope {
                far_slope = cand;
            }
        }
    }
    // functional -m·x + y
    let f = |p: &crate::kernel::Point| -> Rational { -&far_slope * &p.x + &p.y };
    let mut c = f(arr.frame_ref());
    for (_, p) in arr.vertices() {
        let v = f(p);
        if v > c {
            c = v;
        }
    }
    c += Rational::one();
    LineEq::new(-far_slope, int(1), c).expect("b = 1")
}

pub fn cycle_at_infinity(arr: &Arrangement) -> InfinityCycle {
    cycle_with_far_line(arr, &far_line(arr))
}

/// Reading along an explicitly supplied far line; the line must have a slope
/// outside the arrangement and keep all vertices plus the frame reference
/// strictly on one side.
pub fn cycle_with_far_line(arr: &Arrangement, far: &LineEq) -> InfinityCycle {
    let oriented = crate::kernel::orient(far, arr.frame_ref()).expect("far line misses reference");
    let base = far.base_point();
    let mut hits: Vec<(Rational, usize)> = arr
        .lines()
        .iter()
        .enumerate()
        .map(|(i, line)| {
            let p = crate::kernel::intersect(far, line).expect("slope differs");
            let rel = Vec2::new(&p.x - &base.x, &p.y - &base.y);
            (oriented.dir.dot(&rel), i)
        })
        .collect();
    hits.sort();
    let order: Vec<usize> = hits.into_iter().map(|(_, i)| i).collect();
    let as_cycle = Cycle::from_word(&order);
    InfinityCycle { order, as_cycle }
}

/// Local cycle in a permutation chart: drop the letters outside the chart,
/// then rename `chart[t] ↦ t`.
pub fn local_cycle(cy: &Cycle, chart: &[usize]) -> Cycle {
    let keep: BTreeSet<usize> = chart.iter().copied().collect();
    assert_eq!(keep.len(), chart.len());
    let map: BTreeMap<usize, usize> = chart.iter().enumerate().map(|(t, &x)| (x, t)).collect();
    cy.restricted(&keep).relabel(&map)
}

/// The unique consecutive standard decomposition of an `n`-cycle on letters
/// `0..n`, built greedily: write the word from its smallest letter; `t + 1`
/// joins the row of `t` exactly when it occurs to its right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomp {
    pub cycle: Cycle,
    /// Rows, each an interval of consecutive integers, in value order.
    pub rows: Vec<Vec<usize>>,
    /// Number of rows.
    pub standardness: usize,
    /// Rows tile `0..n` consecutively (holds for the greedy construction;
    /// kept as an explicit verdict).
    pub consecutive: bool,
}

pub fn decompose(cy: &Cycle) -> CycleDecomp {
    let n = cy.len();
    let letters = cy.letters();
    assert!(
        letters.iter().copied().eq(0..n),
        "decomposition expects letters 0..n"
    );
    let mut pos = vec![0usize; n];
    for (p, &x) in cy.word().iter().enumerate() {
        pos[x] = p;
    }
    let mut rows: Vec<Vec<usize>> = vec![vec![0]];
    for t in 0..n - 1 {
        if pos[t + 1] > pos[t] {
            rows.last_mut().unwrap().push(t + 1);
        } else {
            rows.push(vec![t + 1]);
        }
    }
    let standardness = rows.len();
    let mut expected = 0usize;
    let mut consecutive = true;
    for row in &rows {
        for &x in row {
            if x != expected {
                consecutive = false;
            }
            expected += 1;
        }
    }
    CycleDecomp {
        cycle: cy.clone(),
        rows,
        standardness,
        consecutive,
    }
}

/// Membership in `T_n`: the 2-standard consecutive `n`-cycles.
pub fn in_tn(cy: &Cycle) -> bool {
    decompose(cy).standardness == 2
}

/// All of `T_n`, generated as the shuffles of the two consecutive rows
/// `0..j` and `j..n` whose greedy decomposition reproduces exactly that
/// split. Cardinality is `2^{n−1} − n`.
pub fn enumerate_tn(n: usize) -> Vec<Cycle> {
    assert!(n >= 3);
    let mut out = Vec::new();
    for j in 1..n {
        let row1: Vec<usize> = (0..j).collect();
        let row2: Vec<usize> = (j..n).collect();
        let mut word = Vec::with_capacity(n);
        shuffles(&row1, &row2, &mut word, &mut |w| {
            if w[0] != 0 {
                return;
            }
            let cy = Cycle::from_word(w);
            let d = decompose(&cy);
            if d.standardness == 2 && d.rows[0].len() == j {
                out.push(cy);
            }
        });
    }
    out.sort();
    out.dedup();
    out
}

fn shuffles(a: &[usize], b: &[usize], acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if a.is_empty() && b.is_empty() {
        f(acc);
        return;
    }
    if let Some((&x, rest)) = a.split_first() {
        acc.push(x);
        shuffles(rest, b, acc, f);
        acc.pop();
    }
    if let Some((&x, rest)) = b.split_first() {
        acc.push(x);
        shuffles(a, rest, acc, f);
        acc.pop();
    }
}

/// Conjugate of a cycle on `0..n` by the rotation `x ↦ x + k (mod n)`.
pub fn rotate_letters(cy: &Cycle, k: usize, n: usize) -> Cycle {
    let map: BTreeMap<usize, usize> = (0..n).map(|x| (x, (x + k) % n)).collect();
    cy.relabel(&map)
}

/// Number of orbits of `T_n` under cyclic renumbering of the letters.
pub fn orbit_count_tn(n: usize) -> usize {
    let all: BTreeSet<Cycle> = enumerate_tn(n).into_iter().collect();
    let mut seen: BTreeSet<Cycle> = BTreeSet::new();
    let mut orbits = 0;
    for cy in &all {
        if seen.contains(cy) {
            continue;
        }
        orbits += 1;
        for k in 0..n {
            let img = rotate_letters(cy, k, n);
            debug_assert!(all.contains(&img), "T_n closed under renumbering");
            seen.insert(img);
        }
    }
    orbits
}

/// Circular position of each line's slope after cutting the slope circle at
/// the slope of `cut_line`, so that `cut_line` plays the least-non-negative
/// role. This is the combinatorial stand-in for a rotation of the plane.
fn slope_positions_cut_at(
    arr: &Arrangement,
    lines: &[usize],
    cut_line: usize,
) -> BTreeMap<usize, usize> {
    let mut sorted: Vec<usize> = lines.to_vec();
    sorted.sort_by_cached_key(|&i| slope_order_key(&arr.line(i).slope()));
    let cut_rank = sorted
        .iter()
        .position(|&i| i == cut_line)
        .expect("cut line");
    let k = sorted.len();
    sorted
        .iter()
        .enumerate()
        .map(|(rank, &i)| (i, (rank + k - cut_rank) % k))
        .collect()
}

/// Does the 2-standard consecutive structure of the cycle at infinity
/// respect the slope property, in the anticlockwise convention?
///
/// Two conditions: after re-cutting the slope circle at line 0's slope the
/// slopes ascend along each row (the four-chain structure), and when all
/// lines bound a common polygon, its anticlockwise side order is the
/// subscript order. A mirror image reverses the polygon orientation and
/// fails the second condition.
pub fn slope_property_check(arr: &Arrangement, decomp: &CycleDecomp) -> bool {
    if decomp.standardness != 2 {
        return false;
    }
    let all: Vec<usize> = (0..arr.n()).collect();
    let pos = slope_positions_cut_at(arr, &all, 0);
    let chains_ok = decomp
        .rows
        .iter()
        .all(|row| row.windows(2).all(|w| pos[&w[0]] < pos[&w[1]]));
    if !chains_ok {
        return false;
    }
    match global_cyclicity(arr) {
        None => true,
        Some(ngon) => {
            let n = arr.n();
            let start = ngon
                .sides_acw
                .iter()
                .position(|&l| l == 0)
                .expect("line 0 bounds the polygon");
            (0..n).all(|t| ngon.sides_acw[(start + t) % n] == t)
        }
    }
}

/// A global `n`-gon: the bounded region meeting every line, with its
/// anticlockwise side and corner orders.
#[derive(Clone, Debug)]
pub struct NGon {
    /// Lines in anticlockwise side order.
    pub sides_acw: Vec<usize>,
    /// `corners_acw[t]` joins side `t` to side `t + 1` (cyclically).
    pub corners_acw: Vec<VertexId>,
}

/// Anticlockwise side and corner orders of a bounded region.
pub fn polygon_of_region(arr: &Arrangement, region: &Region) -> NGon {
    assert!(region.bounded);
    let mut corners = region.corners.clone();
    if signed_area_twice(arr, &corners).is_negative() {
        corners.reverse();
    }
    let k = corners.len();
    // side t joins corner t to corner t+1 along their common line
    let sides_acw: Vec<usize> = (0..k)
        .map(|t| {
            let v = corners[t];
            let w = corners[(t + 1) % k];
            v.lines()
                .into_iter()
                .find(|&l| w.contains(l))
                .expect("consecutive corners share a line")
        })
        .collect();
    // corner between side t and side t+1 is corner t+1
    let corners_acw: Vec<VertexId> = (0..k).map(|t| corners[(t + 1) % k]).collect();
    for t in 0..k {
        debug_assert!(corners_acw[t].contains(sides_acw[t]));
        debug_assert!(corners_acw[t].contains(sides_acw[(t + 1) % k]));
    }
    NGon {
        sides_acw,
        corners_acw,
    }
}

/// The global cyclicity witness, if all `n` lines bound a common region.
pub fn global_cyclicity_in(arr: &Arrangement, regions: &[Region]) -> Option<NGon> {
    let r = regions
        .iter()
        .find(|r| r.bounded && r.boundary_lines.len() == arr.n())?;
    Some(polygon_of_region(arr, r))
}

pub fn global_cyclicity(arr: &Arrangement) -> Option<NGon> {
    global_cyclicity_in(arr, &enumerate_regions(arr))
}

/// Sufficient criterion for global cyclicity in the written indexing: for
/// every line `i`, the simple-transposition vertices `(t, t+1)` other than
/// the two on `L_i` lie strictly on one side of `L_i`.
pub fn one_sided_cyclicity_criterion(arr: &Arrangement) -> bool {
    let n = arr.n();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        let mut side = 0i8;
        for t in 0..n {
            let u = (t + 1) % n;
            if t == i || u == i {
                continue;
            }
            let v = VertexId::new(t, u);
            let s = crate::kernel::side_of(arr.line(i), arr.vertex(v));
            debug_assert_ne!(s, 0);
            if side == 0 {
                side = s;
            } else if side != s {
                return false;
            }
        }
    }
    true
}

/// Opposite vertex of a polygon side: rotate the side order to start at the
/// chosen side, cut the slope circle at that side's slope, and split the
/// resulting position sequence at its first descent.
pub fn opposite_vertex(arr: &Arrangement, ngon: &NGon, side_index: usize) -> Result<VertexId> {
    let r = ngon.sides_acw.len();
    if side_index >= r {
        return Err(Error::BadSubset);
    }
    let seq: Vec<usize> = (0..r)
        .map(|t| ngon.sides_acw[(side_index + t) % r])
        .collect();
    let pos = slope_positions_cut_at(arr, &seq, seq[0]);
    for t in 1..r {
        if pos[&seq[t]] < pos[&seq[t - 1]] {
            return Ok(VertexId::new(seq[t - 1], seq[t]));
        }
    }
    unreachable!("a convex polygon winds the slope circle twice")
}

/// Census of gonalities under global cyclicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GonalityCensus {
    /// Predicted bounded census `{3: k, n: 1, 4: C(n−1,2) − k − 1}`.
    pub bounded: BTreeMap<usize, u64>,
    /// Predicted unbounded census `{2: r, 4: k_T, 3: 2n − r − k_T}`.
    pub unbounded: BTreeMap<usize, u64>,
    /// Lines whose transposition vertices are one-sided with the skip vertex
    /// `L_{i−1} ∩ L_{i+1}` opposite.
    pub k_triangles: usize,
    /// Extreme points of the arrangement.
    pub r_extreme: usize,
    /// Non-outer points on the outer boundary traversal of the union of
    /// bounded regions.
    pub k_nonouter_on_t: usize,
}

/// Observed censuses from an enumeration: bounded and unbounded gonality
/// multisets.
pub fn observed_census(regions: &[Region]) -> (BTreeMap<usize, u64>, BTreeMap<usize, u64>) {
    let mut bounded = BTreeMap::new();
    let mut unbounded = BTreeMap::new();
    for r in regions {
        let m = if r.bounded {
            &mut bounded
        } else {
            &mut unbounded
        };
        *m.entry(r.gonality).or_insert(0u64) += 1;
    }
    (bounded, unbounded)
}

/// Predicted censuses for a globally cyclic arrangement, computed from the
/// combinatorial quantities `k`, `r` and `k_T` alone.
pub fn gonality_census(arr: &Arrangement) -> Result<GonalityCensus> {
    let regions = enumerate_regions(arr);
    let ngon = global_cyclicity_in(arr, &regions).ok_or(Error::NoGon)?;
    let n = arr.n();

    // k: sides whose transposition vertices are one-sided and whose skip
    // vertex lies on the other side, in the anticlockwise relabeling.
    let lam = &ngon.sides_acw;
    let mut k_triangles = 0usize;
    for t in 0..n {
        let line = lam[t];
        let mut side = 0i8;
        let mut ok = true;
        for s in 0..n {
            let u = (s + 1) % n;
            if s == t || u == t {
                continue;
            }
            let v = VertexId::new(lam[s], lam[u]);
            let sg = crate::kernel::side_of(arr.line(line), arr.vertex(v));
            if side == 0 {
                side = sg;
            } else if side != sg {
                ok = false;
                break;
            }
        }
        if !ok || side == 0 {
            continue;
        }
        let skip = VertexId::new(lam[(t + n - 1) % n], lam[(t + 1) % n]);
        if crate::kernel::side_of(arr.line(line), arr.vertex(skip)) == -side {
            k_triangles += 1;
        }
    }

    let r_extreme = arr
        .vertices()
        .filter(|(v, _)| arr.inner_coordinates(v.lo, v.hi).class() == PointClass::Extreme)
        .count();

    let k_nonouter_on_t = boundary_traversal(&regions)?
        .into_iter()
        .filter(|v| arr.inner_coordinates(v.lo, v.hi).class() == PointClass::NonOuter)
        .count();

    let mut bounded = BTreeMap::new();
    *bounded.entry(3).or_insert(0u64) += k_triangles as u64;
    *bounded.entry(n).or_insert(0u64) += 1;
    let quads = crate::kernel::binomial(n - 1, 2) - k_triangles as u64 - 1;
    *bounded.entry(4).or_insert(0u64) += quads;
    bounded.retain(|_, c| *c > 0);

    let mut unbounded = BTreeMap::new();
    let three = 2 * n as u64 - r_extreme as u64 - k_nonouter_on_t as u64;
    *unbounded.entry(2).or_insert(0u64) += r_extreme as u64;
    *unbounded.entry(4).or_insert(0u64) += k_nonouter_on_t as u64;
    *unbounded.entry(3).or_insert(0u64) += three;
    unbounded.retain(|_, c| *c > 0);

    Ok(GonalityCensus {
        bounded,
        unbounded,
        k_triangles,
        r_extreme,
        k_nonouter_on_t,
    })
}

/// Distinct vertices on the coherent (anticlockwise) outer boundary
/// traversal of the union of bounded regions.
pub fn boundary_traversal(regions: &[Region]) -> Result<Vec<VertexId>> {
    let mut edge_count: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for r in regions.iter().filter(|r| r.bounded) {
        let k = r.corners.len();
        for t in 0..k {
            let a = r.corners[t];
            let b = r.corners[(t + 1) % k];
            let key = (a.min(b), a.max(b));
            *edge_count.entry(key).or_insert(0) += 1;
        }
    }
    let boundary: Vec<(VertexId, VertexId)> = edge_count
        .into_iter()
        .filter(|(_, c)| *c == 1)
        .map(|(e, _)| e)
        .collect();
    if boundary.is_empty() {
        return Err(Error::NoGon);
    }
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (a, b) in &boundary {
        adj.entry(*a).or_default().push(*b);
        adj.entry(*b).or_default().push(*a);
    }
    for (v, nb) in &adj {
        if nb.len() != 2 {
            return Err(Error::MalformedCycle(format!(
                "outer boundary branches at ({}, {})",
                v.lo, v.hi
            )));
        }
    }
    let start = *adj.keys().next().unwrap();
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = adj[&start][0];
    while cur != start {
        walk.push(cur);
        let nb = &adj[&cur];
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    if walk.len() != adj.len() {
        return Err(Error::MalformedCycle(
            "outer boundary is not a single cycle".into(),
        ));
    }
    Ok(walk)
}

/// Report of the local gonality analysis for a subset of lines.
#[derive(Clone, Debug)]
pub struct LocalGonality {
    pub has_gonality: bool,
    /// Whether the witnessing region is bounded.
    pub bounded: Option<bool>,
    /// Local cycle in the witnessing chart, when a gonality exists.
    pub chart_cycle: Option<Cycle>,
    /// The chart order witnessing `T_k` membership.
    pub witness_chart: Option<Vec<usize>>,
    /// Local cycle lies in `T_k` for some gonality chart.
    pub in_tk: bool,
    /// For a bounded witness: whether the anticlockwise boundary chart
    /// itself lands in `T_k` (the local form of the global-cyclicity
    /// statement).
    pub acw_chart_in_tk: Option<bool>,
    /// The one-sided sufficiency hypothesis holds for some cyclic order of
    /// the subset: the subset's transposition vertices are one-sided for
    /// each subset line, and consecutive transposition vertices are adjacent
    /// along their line in the full arrangement.
    pub one_sided: bool,
    pub one_sided_chart: Option<Vec<usize>>,
}

/// Decide whether a subset of lines carries a gonality (a region of the
/// full arrangement meeting exactly these lines), compute its chart cycle,
/// and evaluate the one-sided sufficiency hypothesis.
pub fn local_gonality(arr: &Arrangement, subset: &[usize]) -> Result<LocalGonality> {
    let n = arr.n();
    let k = subset.len();
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    if k < 3 || k > n || set.len() != k || subset.iter().any(|&i| i >= n) {
        return Err(Error::BadSubset);
    }
    let regions = enumerate_regions(arr);
    let sorted: Vec<usize> = set.iter().copied().collect();
    let mut witnesses: Vec<&crate::regions::Region> = regions
        .iter()
        .filter(|r| r.boundary_lines == sorted)
        .collect();
    witnesses.sort_by_key(|r| !r.bounded); // bounded first

    let full = cycle_at_infinity(arr).as_cycle;
    let mut chart_cycle = None;
    let mut witness_chart = None;
    let mut in_tk = false;
    let mut acw_chart_in_tk = None;
    let bounded = witnesses.first().map(|r| r.bounded);
    'outer: for region in &witnesses {
        for order in gonality_line_orders(arr, region) {
            let lc = local_cycle(&full, &order);
            if region.bounded && acw_chart_in_tk.is_none() {
                acw_chart_in_tk = Some(in_tn(&lc));
            }
            if chart_cycle.is_none() {
                chart_cycle = Some(lc.clone());
                witness_chart = Some(order.clone());
            }
            if in_tn(&lc) {
                chart_cycle = Some(lc);
                witness_chart = Some(order);
                in_tk = true;
                break 'outer;
            }
        }
    }
    if !in_tk && !witnesses.is_empty() {
        // Unbounded gonalities carry no canonical cyclic order; search the
        // remaining permutation charts for the witnessing one.
        'search: for order in cyclic_orders(&sorted) {
            let lc = local_cycle(&full, &order);
            if in_tn(&lc) {
                chart_cycle = Some(lc);
                witness_chart = Some(order);
                in_tk = true;
                break 'search;
            }
        }
    }

    let (one_sided, one_sided_chart) = one_sided_search(arr, &sorted);

    Ok(LocalGonality {
        has_gonality: !witnesses.is_empty(),
        bounded,
        chart_cycle,
        witness_chart,
        in_tk,
        acw_chart_in_tk,
        one_sided,
        one_sided_chart,
    })
}

/// Candidate chart orders of a gonality region: the boundary line order in
/// both orientations (rotations do not affect `T_k` membership but are the
/// natural charts).
fn gonality_line_orders(arr: &Arrangement, region: &Region) -> Vec<Vec<usize>> {
    let order: Vec<usize> = if region.bounded {
        polygon_of_region(arr, region).sides_acw
    } else if region.corners.is_empty() {
        region.boundary_lines.clone()
    } else {
        let rays = region.ray_lines();
        let mut o = vec![rays[0]];
        o.extend(region.edge_lines.iter().copied());
        o.push(rays[1]);
        o
    };
    let mut rev = order.clone();
    rev.reverse();
    vec![order, rev]
}

/// All cyclic orders of `subset` (first element pinned).
fn cyclic_orders(subset: &[usize]) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = subset[1..].to_vec();
    rest.sort_unstable();
    let mut idx: Vec<usize> = (0..rest.len()).collect();
    let mut out = Vec::new();
    loop {
        out.push(
            std::iter::once(subset[0])
                .chain(idx.iter().map(|&t| rest[t]))
                .collect(),
        );
        if !next_permutation(&mut idx) {
            break;
        }
    }
    out
}

fn one_sided_search(arr: &Arrangement, subset: &[usize]) -> (bool, Option<Vec<usize>>) {
    let k = subset.len();
    let mut rest: Vec<usize> = subset[1..].to_vec();
    rest.sort_unstable();
    let mut perm_idx: Vec<usize> = (0..rest.len()).collect();
    loop {
        let order: Vec<usize> = std::iter::once(subset[0])
            .chain(perm_idx.iter().map(|&t| rest[t]))
            .collect();
        // skip reflected duplicates
        if (k <= 2 || order[1] < order[k - 1]) && one_sided_holds(arr, &order) {
            return (true, Some(order));
        }
        if !next_permutation(&mut perm_idx) {
            break;
        }
    }
    (false, None)
}

fn one_sided_holds(arr: &Arrangement, order: &[usize]) -> bool {
    let k = order.len();
    for t in 0..k {
        let line = order[t];
        let mut side = 0i8;
        for s in 0..k {
            let u = (s + 1) % k;
            if s == t || u == t {
                continue;
            }
            let v = VertexId::new(order[s], order[u]);
            let sg = crate::kernel::side_of(arr.line(line), arr.vertex(v));
            if side == 0 {
                side = sg;
            } else if side != sg {
                return false;
            }
        }
        // Consecutive transposition vertices must be adjacent along `line`
        // in the full arrangement, otherwise another line cuts the polygon.
        let prev = VertexId::new(order[(t + k - 1) % k], line);
        let next = VertexId::new(line, order[(t + 1) % k]);
        if arr.adjacent_on(prev, next).is_none() {
            return false;
        }
    }
    true
}

fn next_permutation(idx: &mut [usize]) -> bool {
    let n = idx.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && idx[i - 1] >= idx[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while idx[j] <= idx[i - 1] {
        j -= 1;
    }
    idx.swap(i - 1, j);
    idx[i..].reverse();
    true
}

/// Reconstruct the cycle at infinity of a globally cyclic arrangement from
/// the opposite vertices of all polygon sides, by filtering `T_n` against
/// the split each side induces.
pub fn cycle_from_opposites(ngon: &NGon, opposites: &BTreeMap<usize, VertexId>) -> Option<Cycle> {
    let n = ngon.sides_acw.len();
    let mut candidates = enumerate_tn(n);
    for side in 0..n {
        let opp = match opposites.get(&side) {
            Some(v) => *v,
            None => continue,
        };
        candidates.retain(|cy| {
            // Candidates live in polygon labels; re-cut the labeling so that
            // this side becomes letter 0.
            let map: BTreeMap<usize, usize> = (0..n).map(|x| (x, (x + n - side) % n)).collect();
            let local = cy.relabel(&map);
            let d = decompose(&local);
            if d.standardness != 2 {
                return false;
            }
            let j = d.rows[0].len();
            let a = ngon.sides_acw[(side + j - 1) % n];
            let b = ngon.sides_acw[(side + j) % n];
            VertexId::new(a, b) == opp
        });
    }
    if candidates.len() == 1 {
        candidates.pop()
    } else {
        None
    }
}

/// Relabeled cycle at infinity in the anticlockwise polygon labeling.
pub fn cycle_in_polygon_labels(arr: &Arrangement, ngon: &NGon) -> Cycle {
    let map: BTreeMap<usize, usize> = ngon
        .sides_acw
        .iter()
        .enumerate()
        .map(|(t, &line)| (line, t))
        .collect();
    cycle_at_infinity(arr).as_cycle.relabel(&map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, LineEq};

    fn triangle() -> Arrangement {
        Arrangement::build(vec![
            LineEq::slope_intercept(int(1), int(0)),
            LineEq::slope_intercept(int(-1), int(4)),
            LineEq::slope_intercept(int(0), int(3)),
        ])
        .unwrap()
    }

    /// The worked 4-gon: y = 0, x = 1, y = x + 2, y = −x with cycle (1324).
    fn worked_four_gon() -> Arrangement {
        Arrangement::build(vec![
            LineEq::slope_intercept(int(0), int(0)),
            LineEq::vertical(int(1)),
            LineEq::slope_intercept(int(1), int(2)),
            LineEq::slope_intercept(int(-1), int(0)),
        ])
        .unwrap()
    }

    #[test]
    fn triangle_cycle_is_a_three_cycle() {
        let cy = cycle_at_infinity(&triangle());
        assert_eq!(cy.as_cycle.len(), 3);
        assert_eq!(cy.as_cycle.letters(), (0..3).collect());
    }

    #[test]
    fn four_gon_cycle_matches_example() {
        let cy = cycle_at_infinity(&worked_four_gon());
        assert_eq!(cy.as_cycle, Cycle::from_one_based(&[1, 3, 2, 4]));
    }

    #[test]
    fn cycle_invariant_under_far_line_choice() {
        let arr = worked_four_gon();
        let reference = cycle_at_infinity(&arr).as_cycle;
        for (num, den, off) in [(3i64, 1i64, 40i64), (5, 2, 77), (9, 1, 1000)] {
            let m = rat(num, den);
            let f = |p: &crate::kernel::Point| -> Rational { -&m * &p.x + &p.y };
            let mut c = f(arr.frame_ref());
            for (_, p) in arr.vertices() {
                c = c.max(f(p));
            }
            c += int(off);
            let far = LineEq::new(-m, int(1), c).unwrap();
            let cy = cycle_with_far_line(&arr, &far);
            assert_eq!(cy.as_cycle, reference);
        }
    }

    #[test]
    fn relabeling_equivariance() {
        let arr = worked_four_gon();
        let perm = [2usize, 0, 3, 1];
        let lines: Vec<LineEq> = perm.iter().map(|&i| arr.line(i).clone()).collect();
        let relabeled = Arrangement::build(lines).unwrap();
        // new index t holds old line perm[t]; old letter x maps to new
        // letter position of x in perm.
        let map: BTreeMap<usize, usize> =
            perm.iter().enumerate().map(|(t, &old)| (old, t)).collect();
        assert_eq!(
            cycle_at_infinity(&relabeled).as_cycle,
            cycle_at_infinity(&arr).as_cycle.relabel(&map)
        );
    }

    #[test]
    fn local_cycle_examples() {
        let cy = Cycle::from_one_based(&[1, 4, 5, 2, 3]);
        let lc = local_cycle(&cy, &[0, 1, 2]);
        assert_eq!(lc, Cycle::from_word(&[0, 1, 2]));
        let full = local_cycle(&cy, &[0, 1, 2, 3, 4]);
        assert_eq!(full, cy);
        // a rotated chart conjugates by a rotation
        let rot = local_cycle(&cy, &[1, 2, 0]);
        assert_eq!(rot, rotate_letters(&lc, 2, 3));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&Cycle::from_one_based(&[1, 4, 5, 2, 3]));
        assert_eq!(d.rows, vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(d.standardness, 2);
        assert!(d.consecutive);

        let ident = decompose(&Cycle::from_word(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(ident.standardness, 1);

        let d = decompose(&Cycle::from_one_based(&[1, 3, 2, 4]));
        assert_eq!(d.rows, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(d.standardness, 2);
    }

    #[test]
    fn decompose_unique_under_rotation_rewrite() {
        // Rotating the reading and rewriting from the smallest letter gives
        // the same canonical cycle, hence the same decomposition.
        let reading = [3usize, 1, 4, 0, 2];
        let d0 = decompose(&Cycle::from_word(&reading));
        for r in 1..reading.len() {
            let rotated: Vec<usize> = (0..reading.len())
                .map(|t| reading[(t + r) % reading.len()])
                .collect();
            assert_eq!(decompose(&Cycle::from_word(&rotated)), d0);
        }
    }

    #[test]
    fn tn_small_cases() {
        assert_eq!(enumerate_tn(3), vec![Cycle::from_one_based(&[1, 3, 2])]);
        let t4 = enumerate_tn(4);
        let expect: BTreeSet<Cycle> = [
            Cycle::from_one_based(&[1, 3, 2, 4]),
            Cycle::from_one_based(&[1, 3, 4, 2]),
            Cycle::from_one_based(&[1, 4, 2, 3]),
            Cycle::from_one_based(&[1, 2, 4, 3]),
        ]
        .into_iter()
        .collect();
        assert_eq!(t4.iter().cloned().collect::<BTreeSet<_>>(), expect);
        assert_eq!(enumerate_tn(5).len(), 11);
    }

    #[test]
    fn tn_matches_brute_force() {
        for n in 3..=7 {
            let mut brute = Vec::new();
            let mut rest: Vec<usize> = (1..n).collect();
            let mut idx: Vec<usize> = (0..rest.len()).collect();
            loop {
                let word: Vec<usize> = std::iter::once(0)
                    .chain(idx.iter().map(|&t| rest[t]))
                    .collect();
                let cy = Cycle::from_word(&word);
                if in_tn(&cy) {
                    brute.push(cy);
                }
                if !next_permutation(&mut idx) {
                    break;
                }
            }
            brute.sort();
            assert_eq!(enumerate_tn(n), brute, "n = {}", n);
            rest.clear();
        }
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(orbit_count_tn(3), 1);
        assert_eq!(orbit_count_tn(4), 1);
        // Burnside over the rotation group: only x -> x + 3 commutes into
        // T_5, so (11 + 4) / 5 = 3 orbits.
        assert_eq!(orbit_count_tn(5), 3);
    }

    #[test]
    fn triangle_global_cyclicity_and_census() {
        let arr = triangle();
        let ngon = global_cyclicity(&arr).expect("triangle");
        assert_eq!(ngon.sides_acw.len(), 3);
        let census = gonality_census(&arr).unwrap();
        assert_eq!(census.bounded, BTreeMap::from([(3, 1)]));
        assert_eq!(census.unbounded, BTreeMap::from([(2, 3), (3, 3)]));
        assert_eq!(census.r_extreme, 3);
        assert_eq!(census.k_nonouter_on_t, 0);
        let (ob, ou) = observed_census(&enumerate_regions(&arr));
        assert_eq!(census.bounded, ob);
        assert_eq!(census.unbounded, ou);
    }

    #[test]
    fn triangle_opposite_vertices() {
        let arr = triangle();
        let ngon = global_cyclicity(&arr).unwrap();
        for side in 0..3 {
            let opp = opposite_vertex(&arr, &ngon, side).unwrap();
            assert!(!opp.contains(ngon.sides_acw[side]));
        }
    }

    #[test]
    fn one_sided_criterion_on_triangle() {
        assert!(one_sided_cyclicity_criterion(&triangle()));
    }

    #[test]
    fn four_gon_slope_property() {
        let arr = worked_four_gon();
        let cy = cycle_at_infinity(&arr);
        let d = decompose(&cy.as_cycle);
        assert_eq!(d.standardness, 2);
        assert!(slope_property_check(&arr, &d));
    }

    #[test]
    fn mirrored_four_gon_fails_slope_property() {
        let arr = worked_four_gon();
        let reflect = [[int(-1), int(0)], [int(0), int(1)]];
        let t = crate::kernel::Point::origin();
        let lines: Vec<LineEq> = arr
            .lines()
            .iter()
            .map(|l| l.affine_image(&reflect, &t).unwrap())
            .collect();
        let mirrored = Arrangement::build(lines).unwrap();
        let d = decompose(&cycle_at_infinity(&mirrored).as_cycle);
        assert!(!slope_property_check(&mirrored, &d) || d.standardness != 2);
    }

    #[test]
    fn local_gonality_full_set_on_triangle() {
        let arr = triangle();
        let rep = local_gonality(&arr, &[0, 1, 2]).unwrap();
        assert!(rep.has_gonality);
        assert_eq!(rep.bounded, Some(true));
        assert!(rep.in_tk);
        assert!(rep.one_sided);
    }

    #[test]
    fn local_gonality_rejects_bad_subsets() {
        let arr = triangle();
        assert_eq!(local_gonality(&arr, &[0, 1]).unwrap_err(), Error::BadSubset);
        assert_eq!(
            local_gonality(&arr, &[0, 1, 1]).unwrap_err(),
            Error::BadSubset
        );
    }
}
