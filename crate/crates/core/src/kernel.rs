//! Exact arithmetic primitives: rational scalars, points, canonical line
//! equations, slopes with their circular order, and the orientation rule.
//!
//! Everything downstream reasons through the predicates defined here; no
//! floating point ever participates in a geometric decision.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar of the working ordered field.
///
/// The field is fixed to the rationals: the total order is compatible with
/// addition and with multiplication by non-negatives, and every predicate
/// stays exact. Values are kept in canonical form (positive denominator,
/// reduced) by construction.
pub type Rational = BigRational;

/// Small rational constant `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Small integer constant.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Binomial coefficient, exact in `u64` for the sizes used here.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u64 / (t + 1) as u64;
    }
    acc
}

/// Point of the plane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(int(0), int(0))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Direction vector. Not a point: only its ray matters to callers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vec2 {
    pub x: Rational,
    pub y: Rational,
}

impl Vec2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vec2 { x, y }
    }

    pub fn cross(&self, other: &Vec2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vec2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn neg(&self) -> Vec2 {
        Vec2::new(-self.x.clone(), -self.y.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Scale to the primitive integer vector on the same ray.
    pub fn primitive(&self) -> Vec2 {
        let lcm = self.x.denom().lcm(self.y.denom());
        let nx = self.x.numer() * (&lcm / self.x.denom());
        let ny = self.y.numer() * (&lcm / self.y.denom());
        let g = nx.gcd(&ny);
        if g.is_zero() {
            return Vec2::new(int(0), int(0));
        }
        Vec2::new(
            Rational::from_integer(nx / &g),
            Rational::from_integer(ny / &g),
        )
    }
}

/// Line `a·x + b·y = c` in canonical form: the leading nonzero coefficient
/// among `(a, b)` equals one, so equality, hashing and slope extraction are
/// syntactic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LineEq {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl LineEq {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidLine);
        }
        let lead = if !a.is_zero() { a.clone() } else { b.clone() };
        Ok(LineEq {
            a: &a / &lead,
            b: &b / &lead,
            c: &c / &lead,
        })
    }

    /// Line through two distinct points.
    pub fn from_points(p: &Point, q: &Point) -> Result<Self> {
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        LineEq::new(a, b, c)
    }

    /// `y = m·x + k`.
    pub fn slope_intercept(m: Rational, k: Rational) -> Self {
        LineEq::new(-m, int(1), k).expect("b = 1")
    }

    /// Vertical line `x = x0`.
    pub fn vertical(x0: Rational) -> Self {
        LineEq::new(int(1), int(0), x0).expect("a = 1")
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Value of the defining functional `a·x + b·y` at `p`.
    pub fn eval(&self, p: &Point) -> Rational {
        &self.a * &p.x + &self.b * &p.y
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p) == self.c
    }

    pub fn slope(&self) -> Slope {
        if self.b.is_zero() {
            Slope::Infinity
        } else {
            Slope::Finite(-&self.a / &self.b)
        }
    }

    /// Parallel copy with the prescribed intercept for the same functional.
    pub fn with_intercept(&self, c: Rational) -> LineEq {
        LineEq {
            a: self.a.clone(),
            b: self.b.clone(),
            c,
        }
    }

    /// A point of the line, used as base for parametrizations.
    pub fn base_point(&self) -> Point {
        if !self.b.is_zero() {
            Point::new(int(0), &self.c / &self.b)
        } else {
            Point::new(&self.c / &self.a, int(0))
        }
    }

    /// Image under the invertible affine map `p ↦ M·p + t`.
    pub fn affine_image(&self, m: &[[Rational; 2]; 2], t: &Point) -> Result<LineEq> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::InvalidLine);
        }
        // Row vector (a, b) · M⁻¹.
        let inv = [
            [&m[1][1] / &det, -&m[0][1] / &det],
            [-&m[1][0] / &det, &m[0][0] / &det],
        ];
        let a = &self.a * &inv[0][0] + &self.b * &inv[1][0];
        let b = &self.a * &inv[0][1] + &self.b * &inv[1][1];
        let c = &self.c + &a * &t.x + &b * &t.y;
        LineEq::new(a, b, c)
    }
}

impl fmt::Debug for LineEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

/// Sign of `a·p.x + b·p.y - c` for the canonical form of `line`.
pub fn side_of(line: &LineEq, p: &Point) -> i8 {
    let v = line.eval(p) - line.c();
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Intersection point of two lines, or `None` when their slopes coincide
/// (parallel or identical lines).
pub fn intersect(l1: &LineEq, l2: &LineEq) -> Option<Point> {
    let det = l1.a() * l2.b() - l1.b() * l2.a();
    if det.is_zero() {
        return None;
    }
    let x = (l1.c() * l2.b() - l1.b() * l2.c()) / &det;
    let y = (l1.a() * l2.c() - l1.c() * l2.a()) / &det;
    Some(Point::new(x, y))
}

/// Slope of a line: a field value, or the distinguished symbol for vertical
/// lines.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Slope {
    Finite(Rational),
    Infinity,
}

impl Slope {
    pub fn finite(n: i64, d: i64) -> Slope {
        Slope::Finite(rat(n, d))
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Slope::Finite(m) if m.is_negative())
    }

    /// Class in the circular order: non-negatives, then infinity, then
    /// negatives.
    fn class(&self) -> u8 {
        match self {
            Slope::Finite(m) if !m.is_negative() => 0,
            Slope::Infinity => 1,
            Slope::Finite(_) => 2,
        }
    }
}

/// The total order on slopes is the circular order
/// `+0 → positives → ∞ → negatives → −0` cut at `+0`: non-negative values
/// ascend first, then the vertical slope, then negatives ascending towards
/// `−0`.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.class()
            .cmp(&other.class())
            .then_with(|| match (self, other) {
                (Slope::Finite(p), Slope::Finite(q)) => p.cmp(q),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(m) => write!(f, "{}", m),
            Slope::Infinity => write!(f, "inf"),
        }
    }
}

/// Key realizing the slope order; `sort_by_key`-friendly.
pub fn slope_order_key(s: &Slope) -> (u8, Option<Rational>) {
    match s {
        Slope::Finite(m) => (s.class(), Some(m.clone())),
        Slope::Infinity => (1, None),
    }
}

/// A line together with a travel direction.
#[derive(Clone, Debug)]
pub struct OrientedLine {
    pub line: LineEq,
    pub dir: Vec2,
}

/// Orient `line` so that `reference` lies strictly on its left (the plane is
/// oriented counterclockwise through the quadrants I → II → III → IV).
///
/// Fails with `DegenerateOrientation` when the line passes through
/// `reference`; callers translate the frame first.
pub fn orient(line: &LineEq, reference: &Point) -> Result<OrientedLine> {
    if line.contains(reference) {
        return Err(Error::DegenerateOrientation);
    }
    let base = line.base_point();
    let to_ref = Vec2::new(&reference.x - &base.x, &reference.y - &base.y);
    let mut dir = Vec2::new(line.b().clone(), -line.a().clone());
    if dir.cross(&to_ref).is_negative() {
        dir = dir.neg();
    }
    Ok(OrientedLine {
        line: line.clone(),
        dir: dir.primitive(),
    })
}

impl PartialEq for OrientedLine {
    fn eq(&self, other: &Self) -> bool {
        self.line == other.line && self.dir == other.dir
    }
}
