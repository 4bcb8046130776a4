//! The validated arrangement model: generic-position checking, the vertex
//! set, per-line intersection orders, slope order and inner coordinates.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::kernel::{intersect, orient, rat, side_of, LineEq, Point, Rational, Vec2};

/// Key of the vertex `L_lo ∩ L_hi`, with `lo < hi` (0-based line indices).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId {
    pub lo: usize,
    pub hi: usize,
}

impl VertexId {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "a vertex needs two distinct lines");
        VertexId {
            lo: i.min(j),
            hi: i.max(j),
        }
    }

    pub fn contains(&self, line: usize) -> bool {
        self.lo == line || self.hi == line
    }

    /// The other line through this vertex.
    pub fn other(&self, line: usize) -> usize {
        debug_assert!(self.contains(line));
        if self.lo == line {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn lines(&self) -> [usize; 2] {
        [self.lo, self.hi]
    }
}

/// Classification of a vertex by its inner coordinates: `Extreme` when both
/// ranks are extremal, `Outer` when exactly one is, `NonOuter` otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointClass {
    Outer,
    NonOuter,
    Extreme,
}

/// Rank pair of a vertex among the `n−1` vertices along each of its two
/// oriented lines (1-based ranks).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InnerCoordinates {
    pub vertex: VertexId,
    pub rank_lo: usize,
    pub rank_hi: usize,
    /// Number of lines in the ambient arrangement.
    pub n: usize,
}

impl InnerCoordinates {
    pub fn rank_on(&self, line: usize) -> usize {
        if line == self.vertex.lo {
            self.rank_lo
        } else {
            debug_assert_eq!(line, self.vertex.hi);
            self.rank_hi
        }
    }

    /// Orientation-free form: each rank `k` collapses to `min(k, n−k)`, the
    /// representative of `±k mod n` inside `1..n−1`.
    pub fn canonical(&self) -> (usize, usize) {
        let f = |k: usize| k.min(self.n - k);
        (f(self.rank_lo), f(self.rank_hi))
    }

    pub fn class(&self) -> PointClass {
        let ext = |k: usize| k == 1 || k == self.n - 1;
        match (ext(self.rank_lo), ext(self.rank_hi)) {
            (true, true) => PointClass::Extreme,
            (false, false) => PointClass::NonOuter,
            _ => PointClass::Outer,
        }
    }
}

/// A set of lines in generic position: no two parallel, no three concurrent.
///
/// Immutable after construction; all query caches are computed by `build`.
#[derive(Clone, Debug)]
pub struct Arrangement {
    lines: Vec<LineEq>,
    flips: Vec<bool>,
    frame_ref: Point,
    vertices: BTreeMap<VertexId, Point>,
    directions: Vec<Vec2>,
    line_orders: Vec<Vec<usize>>,
}

impl Arrangement {
    pub fn build(lines: Vec<LineEq>) -> Result<Self> {
        let n = lines.len();
        Self::build_with_flips(lines, vec![false; n])
    }

    /// Build with explicit per-line orientation flags; a `true` flag reverses
    /// the default origin-on-the-left direction of that line.
    pub fn build_with_flips(lines: Vec<LineEq>, flips: Vec<bool>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        assert_eq!(lines.len(), flips.len());
        let n = lines.len();
        for i in 0..n {
            for j in i + 1..n {
                if lines[i].slope() == lines[j].slope() {
                    return Err(Error::ParallelLines(i, j));
                }
            }
        }
        let mut vertices = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let p = intersect(&lines[i], &lines[j]).expect("slopes distinct");
                for (t, line) in lines.iter().enumerate() {
                    if t != i && t != j && side_of(line, &p) == 0 {
                        let mut tri = [i, j, t];
                        tri.sort_unstable();
                        return Err(Error::ConcurrentLines(tri[0], tri[1], tri[2]));
                    }
                }
                vertices.insert(VertexId::new(i, j), p);
            }
        }
        let frame_ref = frame_reference(&lines);
        let mut directions = Vec::with_capacity(n);
        for (i, line) in lines.iter().enumerate() {
            let mut d = orient(line, &frame_ref)?.dir;
            if flips[i] {
                d = d.neg();
            }
            directions.push(d);
        }
        let mut line_orders = Vec::with_capacity(n);
        for i in 0..n {
            let base = lines[i].base_point();
            let mut others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            others.sort_by_cached_key(|&j| {
                let v = &vertices[&VertexId::new(i, j)];
                let rel = Vec2::new(&v.x - &base.x, &v.y - &base.y);
                directions[i].dot(&rel)
            });
            line_orders.push(others);
        }
        Ok(Arrangement {
            lines,
            flips,
            frame_ref,
            vertices,
            directions,
            line_orders,
        })
    }

    pub fn n(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[LineEq] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &LineEq {
        &self.lines[i]
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    /// Same lines with one orientation flag toggled.
    pub fn with_flip_toggled(&self, i: usize) -> Arrangement {
        let mut flips = self.flips.clone();
        flips[i] = !flips[i];
        Arrangement::build_with_flips(self.lines.clone(), flips).expect("already validated")
    }

    /// Reference point playing the role of the origin: chosen so that no
    /// line passes through it. Coordinates stay untranslated.
    pub fn frame_ref(&self) -> &Point {
        &self.frame_ref
    }

    pub fn vertex(&self, id: VertexId) -> &Point {
        &self.vertices[&id]
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, &Point)> {
        self.vertices.iter().map(|(k, v)| (*k, v))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Oriented travel direction of line `i` (flip applied).
    pub fn direction(&self, i: usize) -> &Vec2 {
        &self.directions[i]
    }

    /// Indices of the other lines in the order their intersection points
    /// appear along oriented line `i`.
    pub fn per_line_order(&self, i: usize) -> &[usize] {
        &self.line_orders[i]
    }

    /// 1-based position of vertex `(i, j)` along oriented line `i`.
    pub fn rank_on_line(&self, i: usize, j: usize) -> usize {
        1 + self.line_orders[i]
            .iter()
            .position(|&t| t == j)
            .expect("j crosses i")
    }

    pub fn inner_coordinates(&self, i: usize, j: usize) -> InnerCoordinates {
        let v = VertexId::new(i, j);
        InnerCoordinates {
            vertex: v,
            rank_lo: self.rank_on_line(v.lo, v.hi),
            rank_hi: self.rank_on_line(v.hi, v.lo),
            n: self.n(),
        }
    }

    /// Line indices sorted by the circular slope order cut at `+0`.
    pub fn slope_sorted_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.n()).collect();
        idx.sort_by_cached_key(|&i| crate::kernel::slope_order_key(&self.lines[i].slope()));
        idx
    }

    /// Sub-arrangement on the given distinct lines, in the given order.
    /// Entry `t` of the result is the old line `subset[t]`.
    pub fn sub_arrangement(&self, subset: &[usize]) -> Result<Arrangement> {
        let lines: Vec<LineEq> = subset.iter().map(|&i| self.lines[i].clone()).collect();
        let flips: Vec<bool> = subset.iter().map(|&i| self.flips[i]).collect();
        Arrangement::build_with_flips(lines, flips)
    }
}

/// Deterministic reference point missed by every line: the origin when
/// possible, otherwise `(1/q, 1/q²)` for the smallest positive integer `q`.
fn frame_reference(lines: &[LineEq]) -> Point {
    let origin = Point::origin();
    if lines.iter().all(|l| !l.contains(&origin)) {
        return origin;
    }
    let mut q: i64 = 1;
    loop {
        let p = Point::new(rat(1, q), rat(1, q * q));
        if lines.iter().all(|l| !l.contains(&p)) {
            return p;
        }
        q += 1;
    }
}

/// Slopes of all lines, by index.
pub fn slopes(arr: &Arrangement) -> Vec<crate::kernel::Slope> {
    arr.lines().iter().map(|l| l.slope()).collect()
}

impl Arrangement {
    /// Monotone parameter of a point along oriented line `i` (the point is
    /// assumed to lie on the line).
    pub fn param_along(&self, i: usize, p: &Point) -> Rational {
        let base = self.lines[i].base_point();
        let rel = Vec2::new(&p.x - &base.x, &p.y - &base.y);
        debug_assert!(self.lines[i].eval(p) == *self.lines[i].c());
        let t = self.directions[i].dot(&rel);
        debug_assert!(!self.directions[i].is_zero());
        t
    }

    /// True when `v` and `w` are consecutive intersection points on some
    /// common line; returns that line.
    pub fn adjacent_on(&self, v: VertexId, w: VertexId) -> Option<usize> {
        let common: Vec<usize> = v
            .lines()
            .iter()
            .copied()
            .filter(|&l| w.contains(l))
            .collect();
        if common.len() != 1 {
            return None;
        }
        let line = common[0];
        let rv = self.rank_on_line(line, v.other(line));
        let rw = self.rank_on_line(line, w.other(line));
        if rv.abs_diff(rw) == 1 {
            Some(line)
        } else {
            None
        }
    }
}
