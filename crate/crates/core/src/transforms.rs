//! Elementary collineation transformations (ECT): applicability windows,
//! application, clearing moves, realization of prescribed cycles with
//! prescribed slopes, and the finite graph of isomorphism classes.

use num_traits::{One, Signed, Zero};

use crate::arrangement::{Arrangement, VertexId};
use crate::cycles::{
    cycle_at_infinity, decompose, enumerate_tn, global_cyclicity_in, in_tn, observed_census, Cycle,
};
use crate::error::{Error, Result};
use crate::isomorphism::{iso_search, quad_structure};
use crate::kernel::{int, rat, slope_order_key, LineEq, Point, Rational, Slope, Vec2};
use crate::regions::{enumerate_regions, Region};

/// One elementary collineation transformation: line `k` of the triangle
/// `(i, j, k)` translated across the opposite vertex `L_i ∩ L_j` through a
/// vertex-free parallel strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EctMove {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c1: Rational,
    pub c2: Rational,
}

/// Admissible intercept window for an ECT.
#[derive(Clone, Debug)]
pub struct EctWindow {
    /// Canonical roles: anticlockwise from `L_i ∩ L_j` the triangle corners
    /// read `(v_ij, v_jk, v_ik)`.
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// The vertex crossed by the move.
    pub vertex: VertexId,
    /// Functional value of the crossed vertex on line `k`; `c2` must pass it.
    pub beyond: Rational,
    /// Nearest blocking value past `beyond`, exclusive; `None` if unbounded.
    pub limit: Option<Rational>,
    /// Direction of admissible intercepts relative to the current one.
    pub increasing: bool,
}

impl EctWindow {
    pub fn admits(&self, c2: &Rational) -> bool {
        let past = if self.increasing {
            c2 > &self.beyond
        } else {
            c2 < &self.beyond
        };
        let within = match &self.limit {
            None => true,
            Some(lim) => {
                if self.increasing {
                    c2 < lim
                } else {
                    c2 > lim
                }
            }
        };
        past && within
    }

    /// Deterministic admissible intercept: the midpoint of the window, or
    /// one unit past the vertex when the window is unbounded.
    pub fn default_c2(&self) -> Rational {
        match &self.limit {
            Some(lim) => (&self.beyond + lim) / int(2),
            None => {
                if self.increasing {
                    &self.beyond + Rational::one()
                } else {
                    &self.beyond - Rational::one()
                }
            }
        }
    }
}

/// The bounded triangular region on exactly the three given lines, if any.
fn triangle_region(regions: &[Region], i: usize, j: usize, k: usize) -> Option<&Region> {
    let mut key = vec![i, j, k];
    key.sort_unstable();
    regions
        .iter()
        .find(|r| r.bounded && r.boundary_lines == key)
}

/// Canonical `(i, j)` roles of a triangle with designated moving line `k`:
/// in the anticlockwise corner order starting at the vertex off `k`, the
/// second corner lies on `L_j` and the third on `L_i`.
fn canonical_roles(arr: &Arrangement, region: &Region, k: usize) -> (usize, usize) {
    let acw = region.acw_corners(arr);
    let start = acw
        .iter()
        .position(|v| !v.contains(k))
        .expect("one corner off the moving line");
    let second = acw[(start + 1) % 3];
    let third = acw[(start + 2) % 3];
    (third.other(k), second.other(k))
}

/// Admissible window for the ECT moving line `k` of triangle `(i, j, k)`.
/// Returns `Ok(None)` when the move is blocked by another vertex inside
/// every candidate strip.
pub fn ect_applicable(
    arr: &Arrangement,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Option<EctWindow>> {
    let set = [i, j, k];
    if i == j || j == k || i == k || set.iter().any(|&t| t >= arr.n()) {
        return Err(Error::NotATriangle);
    }
    let regions = enumerate_regions(arr);
    let region = triangle_region(&regions, i, j, k).ok_or(Error::NotATriangle)?;
    let (ri, rj) = canonical_roles(arr, region, k);
    let vertex = VertexId::new(ri, rj);
    let line_k = arr.line(k);
    let c1 = line_k.c().clone();
    let beyond = line_k.eval(arr.vertex(vertex));
    debug_assert!(beyond != c1);
    let increasing = beyond > c1;
    let mut limit: Option<Rational> = None;
    for (v, p) in arr.vertices() {
        if v.contains(k) || v == vertex {
            continue;
        }
        let value = line_k.eval(p);
        let between = if increasing {
            value > c1 && value <= beyond
        } else {
            value < c1 && value >= beyond
        };
        if between {
            return Ok(None); // a vertex blocks every admissible strip
        }
        let past = if increasing {
            value > beyond
        } else {
            value < beyond
        };
        if past {
            limit = Some(match limit {
                None => value,
                Some(cur) => {
                    if increasing {
                        cur.min(value)
                    } else {
                        cur.max(value)
                    }
                }
            });
        }
    }
    Ok(Some(EctWindow {
        i: ri,
        j: rj,
        k,
        vertex,
        beyond,
        limit,
        increasing,
    }))
}

/// Apply the ECT, replacing line `k`'s intercept by `c2`. The strip swept
/// between the old and new positions must contain exactly the one vertex
/// `L_i ∩ L_j`.
pub fn ect_apply(
    arr: &Arrangement,
    i: usize,
    j: usize,
    k: usize,
    c2: Rational,
) -> Result<(Arrangement, EctMove)> {
    let window = ect_applicable(arr, i, j, k)?.ok_or(Error::StripViolation)?;
    if !window.admits(&c2) {
        return Err(Error::StripViolation);
    }
    let mut lines = arr.lines().to_vec();
    let c1 = lines[k].c().clone();
    lines[k] = lines[k].with_intercept(c2.clone());
    let out = Arrangement::build_with_flips(lines, arr.flips().to_vec())?;
    Ok((
        out,
        EctMove {
            i: window.i,
            j: window.j,
            k,
            c1,
            c2,
        },
    ))
}

/// Translate every line other than `i, j, k` parallelly away from the fixed
/// triangle of lines until the ECT on `(i, j, k)` is applicable. Lines that
/// do not interfere are left untouched; push magnitudes are explicit
/// rational bounds.
pub fn make_applicable(arr: &Arrangement, i: usize, j: usize, k: usize) -> Result<Arrangement> {
    let set = [i, j, k];
    if i == j || j == k || i == k || set.iter().any(|&t| t >= arr.n()) {
        return Err(Error::NotATriangle);
    }
    let mut lines = arr.lines().to_vec();
    let tri = [
        crate::kernel::intersect(&lines[i], &lines[j]).expect("generic"),
        crate::kernel::intersect(&lines[i], &lines[k]).expect("generic"),
        crate::kernel::intersect(&lines[j], &lines[k]).expect("generic"),
    ];
    let v_opp = &tri[0];
    let line_k = lines[k].clone();
    let band_a = line_k.c().clone();
    let band_b = line_k.eval(v_opp);
    let lo = band_a.clone().min(band_b.clone()) - Rational::one();
    let hi = band_a.max(band_b) + Rational::one();

    for t in 0..lines.len() {
        if set.contains(&t) {
            continue;
        }
        if line_clear(&lines, t, &set, &tri, &lo, &hi) {
            continue;
        }
        // Push L_t beyond every bad value: the triangle band on its own
        // functional, the preimages of the k-band through each crossing, and
        // every intercept that would create a concurrency.
        let mut bound = lines[t]
            .eval(&tri[0])
            .max(lines[t].eval(&tri[1]))
            .max(lines[t].eval(&tri[2]));
        for s in 0..lines.len() {
            if s == t || s == k {
                continue;
            }
            // f_k(L_t ∩ L_s) = A + B·c_t with B ≠ 0 (s is not parallel to k)
            let (a_coef, b_coef) = k_value_of_crossing(&lines, t, s, k);
            debug_assert!(!b_coef.is_zero());
            let e1 = (&lo - &a_coef) / &b_coef;
            let e2 = (&hi - &a_coef) / &b_coef;
            bound = bound.max(e1.max(e2));
        }
        concurrency_bounds(&lines, t, &mut bound);
        let c_new = bound + Rational::one();
        lines[t] = lines[t].with_intercept(c_new);
    }
    let out = Arrangement::build_with_flips(lines, arr.flips().to_vec())?;
    debug_assert!(matches!(ect_applicable(&out, i, j, k), Ok(Some(_))));
    Ok(out)
}

/// Is line `t` already harmless: off the triangle hull and with all its
/// crossings outside the k-band?
fn line_clear(
    lines: &[LineEq],
    t: usize,
    fixed: &[usize; 3],
    tri: &[Point; 3],
    lo: &Rational,
    hi: &Rational,
) -> bool {
    let ft: Vec<Rational> = tri.iter().map(|p| lines[t].eval(p)).collect();
    let fmin = ft.iter().min().unwrap();
    let fmax = ft.iter().max().unwrap();
    let c = lines[t].c();
    if c >= fmin && c <= fmax {
        return false;
    }
    let k = fixed[2];
    for s in 0..lines.len() {
        if s == t || s == k {
            continue;
        }
        if let Some(p) = crate::kernel::intersect(&lines[t], &lines[s]) {
            let v = lines[k].eval(&p);
            if &v >= lo && &v <= hi {
                return false;
            }
        }
    }
    true
}

/// Coefficients `(A, B)` of `f_k(L_t ∩ L_s) = A + B·c_t`.
fn k_value_of_crossing(lines: &[LineEq], t: usize, s: usize, k: usize) -> (Rational, Rational) {
    let (at, bt) = (lines[t].a(), lines[t].b());
    let (as_, bs, cs) = (lines[s].a(), lines[s].b(), lines[s].c());
    let (ak, bk) = (lines[k].a(), lines[k].b());
    let det = at * bs - bt * as_;
    debug_assert!(!det.is_zero());
    let b = (ak * bs - bk * as_) / &det;
    let a = cs * &(bk * at - ak * bt) / &det;
    (a, b)
}

/// Raise `bound` past every intercept of line `t` that would pass through an
/// existing vertex of the other lines.
fn concurrency_bounds(lines: &[LineEq], t: usize, bound: &mut Rational) {
    for s in 0..lines.len() {
        for u in s + 1..lines.len() {
            if s == t || u == t {
                continue;
            }
            if let Some(p) = crate::kernel::intersect(&lines[s], &lines[u]) {
                let v = lines[t].eval(&p);
                if v > *bound {
                    *bound = v;
                }
            }
        }
    }
}

/// Result of realizing a cycle: the arrangement and the subscript
/// permutation `relabel` with `relabel[x] = y` mapping the prescribed cycle
/// onto the achieved one (it fixes letter 0).
#[derive(Clone, Debug)]
pub struct Realization {
    pub arrangement: Arrangement,
    pub relabel: Vec<usize>,
}

/// Build an arrangement with exactly the given slope set whose lines bound a
/// common `n`-gon anticlockwise in subscript order and whose cycle at
/// infinity realizes `sigma ∈ T_n`.
///
/// Construction: sort the slopes circularly; slope of rank `r` goes to the
/// polygon side `word[r]` where `word` is `sigma` written from 0. Sides in
/// the first decomposition row take the upward direction of their slope,
/// sides in the second row the opposite. Edge lengths start at one and the
/// closure defect is absorbed by the unique angular sector containing it,
/// which keeps every length positive.
pub fn realize_cycle(slopes: &[Slope], sigma: &Cycle) -> Result<Realization> {
    let n = slopes.len();
    if n < 3 || sigma.len() != n || sigma.letters() != (0..n).collect() {
        return Err(Error::NotInTn);
    }
    if !in_tn(sigma) {
        return Err(Error::NotInTn);
    }
    let mut dedup: Vec<&Slope> = slopes.iter().collect();
    dedup.sort_by_key(|s| slope_order_key(s));
    dedup.dedup();
    if dedup.len() != n {
        return Err(Error::RealizationFailed);
    }

    let mut ranked: Vec<Slope> = slopes.to_vec();
    ranked.sort_by_key(slope_order_key);
    let word = sigma.word();
    let decomp = decompose(sigma);
    let row1 = &decomp.rows[0];

    // slope of rank r sits on polygon side word[r]
    let mut side_slope: Vec<Slope> = vec![Slope::Infinity; n];
    for (r, &side) in word.iter().enumerate() {
        side_slope[side] = ranked[r].clone();
    }
    let mut dirs: Vec<Vec2> = Vec::with_capacity(n);
    for (side, slope) in side_slope.iter().enumerate() {
        let up = match slope {
            Slope::Infinity => Vec2::new(int(0), int(1)),
            Slope::Finite(m) => {
                if m.is_negative() {
                    Vec2::new(int(-1), -m.clone())
                } else {
                    Vec2::new(int(1), m.clone())
                }
            }
        };
        let d = if row1.contains(&side) { up } else { up.neg() };
        dirs.push(d.primitive());
    }

    for attempt in 0..64 {
        let mut lengths: Vec<Rational> = vec![Rational::one(); n];
        if attempt > 0 {
            lengths[attempt % n] += rat(1, 1 + attempt as i64);
        }
        let mut defect = Vec2::new(int(0), int(0));
        for (len, d) in lengths.iter().zip(&dirs) {
            defect.x += len * &d.x;
            defect.y += len * &d.y;
        }
        let target = defect.neg();
        if !target.is_zero() {
            let mut placed = false;
            for t in 0..n {
                let d1 = &dirs[t];
                let d2 = &dirs[(t + 1) % n];
                let det = d1.cross(d2);
                debug_assert!(det.is_positive(), "consecutive sector spans < pi");
                let mu = target.cross(d2) / &det;
                let nu = d1.cross(&target) / &det;
                if !mu.is_negative() && !nu.is_negative() {
                    lengths[t] += mu;
                    lengths[(t + 1) % n] += nu;
                    placed = true;
                    break;
                }
            }
            if !placed {
                return Err(Error::RealizationFailed);
            }
        }
        let mut verts = vec![Point::origin()];
        for t in 0..n - 1 {
            let prev = verts.last().unwrap();
            verts.push(Point::new(
                &prev.x + &lengths[t] * &dirs[t].x,
                &prev.y + &lengths[t] * &dirs[t].y,
            ));
        }
        let mut lines = Vec::with_capacity(n);
        for t in 0..n {
            let p = &verts[t];
            let q = Point::new(&p.x + &dirs[t].x, &p.y + &dirs[t].y);
            lines.push(LineEq::from_points(p, &q)?);
        }
        match Arrangement::build(lines) {
            Ok(arrangement) => {
                let actual = cycle_at_infinity(&arrangement).as_cycle;
                let mut relabel = vec![0usize; n];
                for (t, &x) in sigma.word().iter().enumerate() {
                    relabel[x] = actual.word()[t];
                }
                debug_assert_eq!(relabel[0], 0);
                return Ok(Realization {
                    arrangement,
                    relabel,
                });
            }
            Err(Error::ConcurrentLines(..)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RealizationFailed)
}

/// Canonical key of an isomorphism class: gonality censuses, the rotation
/// orbit of the cycle at infinity in polygon labels when global cyclicity
/// exists, and the relabeling-free nook signature table. The key prunes; a
/// full order-preservation search settles collisions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ClassKey {
    pub bounded: Vec<(usize, u64)>,
    pub unbounded: Vec<(usize, u64)>,
    pub cycle_orbit: Option<Vec<usize>>,
    pub nook_table: Vec<(usize, usize)>,
}

pub fn class_key(arr: &Arrangement) -> ClassKey {
    let regions = enumerate_regions(arr);
    let (b, u) = observed_census(&regions);
    let cycle_orbit = global_cyclicity_in(arr, &regions).map(|ngon| {
        let base = crate::cycles::cycle_in_polygon_labels(arr, &ngon);
        let n = arr.n();
        (0..n)
            .map(|k| crate::cycles::rotate_letters(&base, k, n).word().to_vec())
            .min()
            .unwrap()
    });
    let mut nook_table = Vec::new();
    let n = arr.n();
    if n >= 4 {
        for quad in subsets4(n) {
            let q = quad_structure(arr, quad);
            let ic = arr.inner_coordinates(q.nook.lo, q.nook.hi).canonical();
            nook_table.push((ic.0.min(ic.1), ic.0.max(ic.1)));
        }
        nook_table.sort_unstable();
    }
    ClassKey {
        bounded: b.into_iter().collect(),
        unbounded: u.into_iter().collect(),
        cycle_orbit,
        nook_table,
    }
}

fn subsets4(n: usize) -> Vec<[usize; 4]> {
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

/// Finite multigraph of isomorphism classes connected by applicable ECTs.
#[derive(Clone, Debug)]
pub struct IsoClassGraph {
    pub classes: Vec<(ClassKey, Arrangement)>,
    /// `(from, to, (i, j, k))` with canonical ECT roles.
    pub edges: Vec<(usize, usize, (usize, usize, usize))>,
    /// Classes of the `realize_cycle` seeds.
    pub seed_classes: Vec<usize>,
}

impl IsoClassGraph {
    fn class_of(&mut self, arr: Arrangement) -> usize {
        let key = class_key(&arr);
        for (idx, (k, rep)) in self.classes.iter().enumerate() {
            if *k == key && iso_search(rep, &arr).is_some() {
                return idx;
            }
        }
        self.classes.push((key, arr));
        self.classes.len() - 1
    }
}

/// Build the class graph for `n` lines: seeds are every realization of
/// `T_n` with the integer slope set, plus `sample_budget` random generic
/// arrangements; edges come from every ECT made applicable on a class
/// representative.
pub fn build_iso_class_graph(n: usize, sample_budget: usize, seed: u64) -> IsoClassGraph {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut graph = IsoClassGraph {
        classes: Vec::new(),
        edges: Vec::new(),
        seed_classes: Vec::new(),
    };
    let slopes: Vec<Slope> = (0..n).map(|t| Slope::Finite(int(t as i64))).collect();
    for sigma in enumerate_tn(n) {
        if let Ok(real) = realize_cycle(&slopes, &sigma) {
            let c = graph.class_of(real.arrangement);
            if !graph.seed_classes.contains(&c) {
                graph.seed_classes.push(c);
            }
        }
    }
    for _ in 0..sample_budget {
        let arr = crate::sample::random_arrangement(n, &mut rng);
        graph.class_of(arr);
    }
    // ECT closure over class representatives.
    let mut frontier: Vec<usize> = (0..graph.classes.len()).collect();
    let mut expanded = vec![false; graph.classes.len()];
    while let Some(cls) = frontier.pop() {
        if *expanded.get(cls).unwrap_or(&false) {
            continue;
        }
        if expanded.len() < graph.classes.len() {
            expanded.resize(graph.classes.len(), false);
        }
        expanded[cls] = true;
        let rep = graph.classes[cls].1.clone();
        let regions = enumerate_regions(&rep);
        let triangles: Vec<Vec<usize>> = regions
            .iter()
            .filter(|r| r.bounded && r.boundary_lines.len() == 3)
            .map(|r| r.boundary_lines.clone())
            .collect();
        for tri in triangles {
            for &k in &tri {
                let others: Vec<usize> = tri.iter().copied().filter(|&t| t != k).collect();
                let (i, j) = (others[0], others[1]);
                let Ok(prepared) = make_applicable(&rep, i, j, k) else {
                    continue;
                };
                let from = graph.class_of(prepared.clone());
                let Ok(Some(window)) = ect_applicable(&prepared, i, j, k) else {
                    continue;
                };
                let Ok((image, mv)) = ect_apply(&prepared, i, j, k, window.default_c2()) else {
                    continue;
                };
                let to = graph.class_of(image);
                graph.edges.push((from, to, (mv.i, mv.j, mv.k)));
                if expanded.len() < graph.classes.len() {
                    expanded.resize(graph.classes.len(), false);
                }
                if !expanded[from] {
                    frontier.push(from);
                }
                if !expanded[to] {
                    frontier.push(to);
                }
            }
        }
        if graph.classes.len() > 512 {
            break; // safety valve; desk-scale inputs stay tiny
        }
    }
    graph
}

/// Line-oriented export: `CLASS <key>` records then `EDGE <k1> <k2> ECT i j k`.
pub fn export_class_graph(graph: &IsoClassGraph) -> String {
    let mut out = String::new();
    let keys: Vec<String> = graph
        .classes
        .iter()
        .map(|(k, _)| format_class_key(k))
        .collect();
    for key in &keys {
        out.push_str(&format!("CLASS {}\n", key));
    }
    let mut edges: Vec<String> = graph
        .edges
        .iter()
        .map(|(a, b, (i, j, k))| {
            format!(
                "EDGE {} {} ECT {} {} {}",
                keys[*a],
                keys[*b],
                i + 1,
                j + 1,
                k + 1
            )
        })
        .collect();
    edges.sort();
    for e in edges {
        out.push_str(&e);
        out.push('\n');
    }
    out
}

fn format_class_key(key: &ClassKey) -> String {
    let fmt_census = |m: &Vec<(usize, u64)>| -> String {
        m.iter()
            .map(|(g, c)| format!("{}x{}", g, c))
            .collect::<Vec<_>>()
            .join(",")
    };
    let cyc = match &key.cycle_orbit {
        Some(w) => w
            .iter()
            .map(|x| (x + 1).to_string())
            .collect::<Vec<_>>()
            .join("."),
        None => "-".to_string(),
    };
    let nooks = key
        .nook_table
        .iter()
        .map(|(a, b)| format!("{}:{}", a, b))
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "B[{}]U[{}]C[{}]N[{}]",
        fmt_census(&key.bounded),
        fmt_census(&key.unbounded),
        cyc,
        nooks
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

    fn triangle() -> Arrangement {
        Arrangement::build(vec![
            LineEq::slope_intercept(int(1), int(0)),
            LineEq::slope_intercept(int(-1), int(4)),
            LineEq::slope_intercept(int(0), int(3)),
        ])
        .unwrap()
    }

    #[test]
    fn plain_triangle_is_applicable() {
        let arr = triangle();
        let w = ect_applicable(&arr, 0, 1, 2).unwrap().expect("no blockers");
        assert_eq!(w.k, 2);
        assert!(w.limit.is_none());
        let (img, mv) = ect_apply(&arr, 0, 1, 2, w.default_c2()).unwrap();
        assert_eq!(img.n(), 3);
        assert_eq!(mv.k, 2);
        // flipped triangle: corner orientation reverses
        let before = enumerate_regions(&arr);
        let after = enumerate_regions(&img);
        assert_eq!(before.len(), after.len());
    }

    #[test]
    fn blocked_strip_is_detected_and_cleared() {
        // Triangle y=x, y=-x+4, y=0 with a fourth line crossing just above
        // the opposite vertex's level.
        let arr = Arrangement::build(vec![
            LineEq::slope_intercept(int(1), int(0)),
            LineEq::slope_intercept(int(-1), int(4)),
            LineEq::slope_intercept(int(0), int(0)),
            LineEq::slope_intercept(rat(1, 7), rat(1, 2)), // cuts the triangle
        ])
        .unwrap();
        let window = ect_applicable(&arr, 0, 1, 2);
        // either there is no triangular region at all or the strip is blocked
        match window {
            Ok(None) | Err(Error::NotATriangle) => {}
            other => panic!("expected blocked, got {:?}", other),
        }
        let cleared = make_applicable(&arr, 0, 1, 2).unwrap();
        let w = ect_applicable(&cleared, 0, 1, 2).unwrap();
        assert!(w.is_some());
    }

    #[test]
    fn make_applicable_is_identity_when_clear() {
        let arr = triangle();
        let out = make_applicable(&arr, 0, 1, 2).unwrap();
        assert_eq!(out.lines(), arr.lines());
    }

    #[test]
    fn strip_violation_rejected() {
        let arr = triangle();
        let w = ect_applicable(&arr, 0, 1, 2).unwrap().unwrap();
        let bad = if w.increasing {
            &w.beyond - int(1)
        } else {
            &w.beyond + int(1)
        };
        assert_eq!(
            ect_apply(&arr, 0, 1, 2, bad).unwrap_err(),
            Error::StripViolation
        );
    }

    #[test]
    fn realize_triangle() {
        let slopes = vec![
            Slope::finite(0, 1),
            Slope::finite(1, 1),
            Slope::finite(-1, 1),
        ];
        let sigma = Cycle::from_one_based(&[1, 3, 2]);
        let real = realize_cycle(&slopes, &sigma).unwrap();
        assert_eq!(cycle_at_infinity(&real.arrangement).as_cycle, sigma);
        assert_eq!(real.relabel, vec![0, 1, 2]);
        assert!(crate::cycles::one_sided_cyclicity_criterion(
            &real.arrangement
        ));
    }

    #[test]
    fn realize_worked_four_gon() {
        let slopes = vec![
            Slope::finite(0, 1),
            Slope::finite(1, 1),
            Slope::Infinity,
            Slope::finite(-1, 1),
        ];
        let sigma = Cycle::from_one_based(&[1, 3, 2, 4]);
        let real = realize_cycle(&slopes, &sigma).unwrap();
        let arr = &real.arrangement;
        assert_eq!(cycle_at_infinity(arr).as_cycle, sigma);
        let ngon = crate::cycles::global_cyclicity(arr).expect("4-gon");
        assert_eq!(ngon.sides_acw.len(), 4);
        // uses exactly the prescribed slope set
        let mut got: Vec<Slope> = arr.lines().iter().map(|l| l.slope()).collect();
        got.sort_by_key(crate::kernel::slope_order_key);
        let mut want = slopes.clone();
        want.sort_by_key(crate::kernel::slope_order_key);
        assert_eq!(got, want);
    }

    #[test]
    fn realize_rejects_non_tn() {
        let slopes = vec![
            Slope::finite(0, 1),
            Slope::finite(1, 1),
            Slope::finite(-1, 1),
        ];
        let ident = Cycle::from_word(&[0, 1, 2]);
        assert_eq!(realize_cycle(&slopes, &ident).unwrap_err(), Error::NotInTn);
    }

    #[test]
    fn class_graph_n3_single_class() {
        let g = build_iso_class_graph(3, 6, 7);
        assert_eq!(g.classes.len(), 1);
        assert!(!g.edges.is_empty());
        for (a, b, _) in &g.edges {
            assert_eq!((*a, *b), (0, 0)); // loops
        }
    }
}
