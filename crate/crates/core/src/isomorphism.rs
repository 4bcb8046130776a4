//! Deciding arrangement isomorphism combinatorially: the order-preservation
//! criterion, invariant-pruned bijection search, quadrilateral substructures
//! with their nook points, and the slope-order nook criterion.

use std::collections::BTreeSet;

use crate::arrangement::{Arrangement, PointClass, VertexId};
use crate::error::{Error, Result};

/// A bijection of lines together with per-line orientation flags: flag `i`
/// set means line `i`'s intersection order maps to the reverse of its
/// image's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBijection {
    pub perm: Vec<usize>,
    pub flips: Vec<bool>,
}

impl LineBijection {
    pub fn identity(n: usize) -> Self {
        LineBijection {
            perm: (0..n).collect(),
            flips: vec![false; n],
        }
    }

    pub fn inverse(&self) -> LineBijection {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            flips[self.perm[i]] = self.flips[i];
        }
        LineBijection { perm, flips }
    }

    pub fn compose(&self, inner: &LineBijection) -> LineBijection {
        let n = self.perm.len();
        let perm: Vec<usize> = (0..n).map(|i| self.perm[inner.perm[i]]).collect();
        let flips: Vec<bool> = (0..n)
            .map(|i| inner.flips[i] ^ self.flips[inner.perm[i]])
            .collect();
        LineBijection { perm, flips }
    }
}

/// Does `f` preserve the order of intersection points on every line? The
/// order of line `i` must map to the order of `f(i)` exactly, or exactly
/// reversed when the flip flag is set. A passing check certifies the
/// existence of a piece-wise linear plane automorphism; only the
/// combinatorial certificate is returned.
pub fn iso_check_orders(a: &Arrangement, b: &Arrangement, f: &LineBijection) -> Result<bool> {
    if a.n() != b.n() || f.perm.len() != a.n() {
        return Err(Error::SizeMismatch);
    }
    let mut seen = vec![false; a.n()];
    for &p in &f.perm {
        if p >= a.n() || seen[p] {
            return Err(Error::SizeMismatch);
        }
        seen[p] = true;
    }
    for i in 0..a.n() {
        let mapped: Vec<usize> = a.per_line_order(i).iter().map(|&j| f.perm[j]).collect();
        let image = b.per_line_order(f.perm[i]);
        let ok = if f.flips[i] {
            mapped.iter().rev().eq(image.iter())
        } else {
            mapped.iter().eq(image.iter())
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Derive the orientation flags making `perm` order-preserving, if possible.
pub fn derive_orders_bijection(
    a: &Arrangement,
    b: &Arrangement,
    perm: &[usize],
) -> Option<LineBijection> {
    if a.n() != b.n() {
        return None;
    }
    let mut flips = vec![false; a.n()];
    for i in 0..a.n() {
        let mapped: Vec<usize> = a.per_line_order(i).iter().map(|&j| perm[j]).collect();
        let image = b.per_line_order(perm[i]);
        if mapped.iter().eq(image.iter()) {
            flips[i] = false;
        } else if mapped.iter().rev().eq(image.iter()) {
            flips[i] = true;
        } else {
            return None;
        }
    }
    Some(LineBijection {
        perm: perm.to_vec(),
        flips,
    })
}

/// Relabeling-invariant signature of a line: the sorted canonical ranks its
/// vertices occupy on the crossing lines.
fn line_signature(arr: &Arrangement, i: usize) -> Vec<(usize, usize)> {
    let mut sig: Vec<(usize, usize)> = (0..arr.n())
        .filter(|&j| j != i)
        .map(|j| {
            let ic = arr.inner_coordinates(i, j);
            let c = ic.canonical();
            let own = if VertexId::new(i, j).lo == i {
                c.0
            } else {
                c.1
            };
            let other = if VertexId::new(i, j).lo == i {
                c.1
            } else {
                c.0
            };
            (own, other)
        })
        .collect();
    sig.sort_unstable();
    sig
}

/// Search for a witnessing bijection by backtracking over signature-equal
/// candidates. Intended for desk scale (`n ≤ 8`).
pub fn iso_search(a: &Arrangement, b: &Arrangement) -> Option<LineBijection> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let sig_a: Vec<_> = (0..n).map(|i| line_signature(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| line_signature(b, i)).collect();
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for sig in &sig_a {
        let c: Vec<usize> = (0..n).filter(|&j| sig == &sig_b[j]).collect();
        if c.is_empty() {
            return None;
        }
        candidates.push(c);
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        a: &Arrangement,
        b: &Arrangement,
        candidates: &[Vec<usize>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> Option<LineBijection> {
        if depth == perm.len() {
            return derive_orders_bijection(a, b, perm);
        }
        for &cand in &candidates[depth] {
            if used[cand] {
                continue;
            }
            perm[depth] = cand;
            used[cand] = true;
            if let Some(hit) = backtrack(a, b, candidates, perm, used, depth + 1) {
                return Some(hit);
            }
            used[cand] = false;
        }
        perm[depth] = usize::MAX;
        None
    }
    backtrack(a, b, &candidates, &mut perm, &mut used, 0)
}

/// The six vertices of a 4-line sub-arrangement, partitioned around its
/// unique nook point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadStructure {
    /// The four lines, ascending.
    pub lines: [usize; 4],
    /// The unique vertex that is the middle point on both of its lines.
    pub nook: VertexId,
    /// The vertex of the two lines missing the nook.
    pub extreme_nook: VertexId,
    /// The remaining two extreme points.
    pub end_points: [VertexId; 2],
    /// The two points with exactly one middle rank.
    pub central_pair: [VertexId; 2],
}

/// Classify the six vertices of the 4-line sub-arrangement on the given
/// lines. The nook is unique in every generic quadruple.
pub fn quad_structure(arr: &Arrangement, mut lines: [usize; 4]) -> QuadStructure {
    lines.sort_unstable();
    let sub = arr
        .sub_arrangement(&lines)
        .expect("sub-arrangement of a generic arrangement is generic");
    let mut nook = None;
    let mut extremes = Vec::new();
    let mut central = Vec::new();
    for (v, _) in sub.vertices() {
        let ic = sub.inner_coordinates(v.lo, v.hi);
        let orig = VertexId::new(lines[v.lo], lines[v.hi]);
        match ic.class() {
            PointClass::NonOuter => {
                assert!(nook.is_none(), "nook point is unique");
                nook = Some(orig);
            }
            PointClass::Extreme => extremes.push(orig),
            PointClass::Outer => central.push(orig),
        }
    }
    let nook = nook.expect("every quadruple has a nook point");
    assert_eq!(extremes.len(), 3);
    assert_eq!(central.len(), 2);
    let rest: Vec<usize> = lines
        .iter()
        .copied()
        .filter(|&l| !nook.contains(l))
        .collect();
    let extreme_nook = VertexId::new(rest[0], rest[1]);
    assert!(
        extremes.contains(&extreme_nook),
        "the complementary vertex of the nook is extreme"
    );
    let mut end_points: Vec<VertexId> = extremes
        .into_iter()
        .filter(|v| *v != extreme_nook)
        .collect();
    end_points.sort();
    central.sort();
    QuadStructure {
        lines,
        nook,
        extreme_nook,
        end_points: [end_points[0], end_points[1]],
        central_pair: [central[0], central[1]],
    }
}

/// Nook-point isomorphism test for arrangements indexed by increasing slope
/// order (`0 → ∞ → −∞ → 0`): the subscript-identity bijection is an
/// isomorphism exactly when every 4-subset's nook lands on the same line
/// pair. Both inputs are re-indexed by slope order internally.
pub fn nook_iso_check(a: &Arrangement, b: &Arrangement) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch);
    }
    let n = a.n();
    if n < 4 {
        // no quadrilateral substructures; fall back to the order criterion
        let (a2, b2) = (slope_order_relabel(a), slope_order_relabel(b));
        return Ok(derive_orders_bijection(&a2, &b2, &(0..n).collect::<Vec<_>>()).is_some());
    }
    let a = slope_order_relabel(a);
    let b = slope_order_relabel(b);
    for quad in four_subsets(n) {
        let qa = quad_structure(&a, quad);
        let qb = quad_structure(&b, quad);
        if qa.nook != qb.nook {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same arrangement with lines re-indexed by the circular slope order.
pub fn slope_order_relabel(arr: &Arrangement) -> Arrangement {
    let order = arr.slope_sorted_indices();
    let lines = order.iter().map(|&i| arr.line(i).clone()).collect();
    let flips = order.iter().map(|&i| arr.flips()[i]).collect();
    Arrangement::build_with_flips(lines, flips).expect("relabeling preserves genericity")
}

fn four_subsets(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Order of the collineation automorphism group of the six-point quad
/// configuration fixing the nook point. Automorphisms are induced by
/// permutations of the four lines; the nook is fixed exactly by those
/// preserving its line pair, giving the Klein four-group.
pub fn nook_automorphisms(quad: &QuadStructure) -> usize {
    permutations4()
        .into_iter()
        .filter(|p| preserves_pair(quad, p, quad.nook))
        .count()
}

/// Order of the subgroup additionally preserving the central pair (as an
/// unordered point pair).
pub fn nook_central_automorphisms(quad: &QuadStructure) -> usize {
    permutations4()
        .into_iter()
        .filter(|p| {
            preserves_pair(quad, p, quad.nook) && {
                let img0 = map_vertex(quad, p, quad.central_pair[0]);
                let img1 = map_vertex(quad, p, quad.central_pair[1]);
                let mut img = [img0, img1];
                img.sort();
                img == quad.central_pair
            }
        })
        .count()
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let mut idx = [0usize, 1, 2, 3];
    loop {
        out.push(idx);
        // next permutation
        let mut i = 3;
        while i > 0 && idx[i - 1] >= idx[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = 3;
        while idx[j] <= idx[i - 1] {
            j -= 1;
        }
        idx.swap(i - 1, j);
        idx[i..].reverse();
    }
    out
}

fn map_vertex(quad: &QuadStructure, p: &[usize; 4], v: VertexId) -> VertexId {
    let slot = |line: usize| quad.lines.iter().position(|&l| l == line).unwrap();
    VertexId::new(quad.lines[p[slot(v.lo)]], quad.lines[p[slot(v.hi)]])
}

fn preserves_pair(quad: &QuadStructure, p: &[usize; 4], v: VertexId) -> bool {
    map_vertex(quad, p, v) == v
}

/// Does `f` preserve the nook point and the central pair of every
/// quadrilateral substructure (with respect to the image substructure)?
pub fn preserves_quad_structures(a: &Arrangement, b: &Arrangement, f: &LineBijection) -> bool {
    let n = a.n();
    if n < 4 {
        return true;
    }
    let map_v = |v: VertexId| VertexId::new(f.perm[v.lo], f.perm[v.hi]);
    for quad in four_subsets(n) {
        let qa = quad_structure(a, quad);
        let mut img: [usize; 4] = [
            f.perm[quad[0]],
            f.perm[quad[1]],
            f.perm[quad[2]],
            f.perm[quad[3]],
        ];
        img.sort_unstable();
        let qb = quad_structure(b, img);
        if map_v(qa.nook) != qb.nook {
            return false;
        }
        let mut central = [map_v(qa.central_pair[0]), map_v(qa.central_pair[1])];
        central.sort();
        if central != qb.central_pair {
            return false;
        }
    }
    true
}

/// Crossing-number multiset of an arrangement: a cheap isomorphism
/// invariant used by tests.
pub fn crossing_multiset(arr: &Arrangement) -> Vec<usize> {
    let regions = crate::regions::enumerate_regions(arr);
    let mut out = Vec::new();
    for (t, r1) in regions.iter().enumerate() {
        for r2 in regions.iter().skip(t + 1) {
            out.push(crate::regions::crossing_number(r1, r2));
        }
    }
    out.sort_unstable();
    out
}

/// All 4-subsets of `0..n`, exposed for tests.
pub fn all_four_subsets(n: usize) -> Vec<[usize; 4]> {
    four_subsets(n)
}

/// Quick structural sanity check used in tests: a bijection built from sets.
pub fn perm_from_pairs(pairs: &[(usize, usize)], n: usize) -> Option<Vec<usize>> {
    let mut perm = vec![usize::MAX; n];
    let mut used: BTreeSet<usize> = BTreeSet::new();
    for &(x, y) in pairs {
        if x >= n || y >= n || perm[x] != usize::MAX || used.contains(&y) {
            return None;
        }
        perm[x] = y;
        used.insert(y);
    }
    if perm.contains(&usize::MAX) {
        None
    } else {
        Some(perm)
    }
}
