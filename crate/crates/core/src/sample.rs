//! Seeded random generators for arrangements, folds and affine maps, used by
//! the class-graph sampler and the test suites.

use rand::Rng;

use crate::arrangement::Arrangement;
use crate::kernel::{int, rat, LineEq, Point, Rational};
use crate::linefold::LineFold;

/// A random arrangement of `n` lines in generic position: distinct small
/// rational slopes (occasionally vertical) and small rational intercepts,
/// resampled until generic.
pub fn random_arrangement<R: Rng>(n: usize, rng: &mut R) -> Arrangement {
    for _ in 0..10_000 {
        let mut slopes: Vec<Option<Rational>> = Vec::with_capacity(n);
        while slopes.len() < n {
            let cand = if rng.gen_ratio(1, 10) {
                None // vertical
            } else {
                Some(rat(rng.gen_range(-9..=9), rng.gen_range(1..=3)))
            };
            if !slopes.contains(&cand) {
                slopes.push(cand);
            }
        }
        let lines: Vec<LineEq> = slopes
            .into_iter()
            .map(|s| {
                let c = rat(rng.gen_range(-12..=12), rng.gen_range(1..=2));
                match s {
                    Some(m) => LineEq::slope_intercept(m, c),
                    None => LineEq::vertical(c),
                }
            })
            .collect();
        if let Ok(arr) = Arrangement::build(lines) {
            return arr;
        }
    }
    panic!("failed to sample a generic arrangement");
}

/// A random line-fold with forced concurrency pencils (orders up to
/// `max_pencil`) and parallel classes (sizes up to `max_parallel`), at most
/// `max_d` distinct lines.
pub fn random_fold<R: Rng>(
    max_d: usize,
    max_pencil: usize,
    max_parallel: usize,
    rng: &mut R,
) -> LineFold {
    loop {
        let mut lines: Vec<LineEq> = Vec::new();
        // one concurrency pencil
        let pencil = rng.gen_range(2..=max_pencil.max(2));
        let px = rat(rng.gen_range(-4..=4), 1);
        let py = rat(rng.gen_range(-4..=4), 1);
        let p = Point::new(px.clone(), py.clone());
        let mut used_slopes: Vec<Option<Rational>> = Vec::new();
        for _ in 0..pencil {
            loop {
                let s = if rng.gen_ratio(1, 8) {
                    None
                } else {
                    Some(rat(rng.gen_range(-6..=6), rng.gen_range(1..=2)))
                };
                if used_slopes.contains(&s) {
                    continue;
                }
                used_slopes.push(s.clone());
                lines.push(match s {
                    Some(m) => {
                        let c = &py - &m * &px;
                        LineEq::slope_intercept(m, c)
                    }
                    None => LineEq::vertical(px.clone()),
                });
                break;
            }
        }
        let _ = p;
        // one parallel class
        let class = rng.gen_range(2..=max_parallel.max(2));
        let m = rat(rng.gen_range(-6..=6), rng.gen_range(1..=2));
        let mut offs: Vec<i64> = Vec::new();
        while offs.len() < class {
            let c = rng.gen_range(-9..=9);
            if !offs.contains(&c) {
                offs.push(c);
            }
        }
        for c in offs {
            lines.push(LineEq::slope_intercept(m.clone(), int(c)));
        }
        // singles up to max_d
        while lines.len() < max_d && rng.gen_bool(0.6) {
            let s = rat(rng.gen_range(-9..=9), rng.gen_range(1..=3));
            lines.push(LineEq::slope_intercept(s, rat(rng.gen_range(-9..=9), 1)));
        }
        lines.truncate(max_d);
        // dedupe identical lines
        let mut reduced: Vec<LineEq> = Vec::new();
        for l in lines {
            if !reduced.contains(&l) {
                reduced.push(l);
            }
        }
        if reduced.len() >= 2 {
            return LineFold::new(reduced);
        }
    }
}

/// Random invertible rational affine map `(M, t)`.
pub fn random_affine<R: Rng>(rng: &mut R) -> ([[Rational; 2]; 2], Point) {
    loop {
        let m = [
            [rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(-3..=3), 1)],
            [rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(-3..=3), 1)],
        ];
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det != int(0) {
            let t = Point::new(rat(rng.gen_range(-5..=5), 1), rat(rng.gen_range(-5..=5), 1));
            return (m, t);
        }
    }
}

/// Apply an affine map to every line of an arrangement.
pub fn affine_image(arr: &Arrangement, m: &[[Rational; 2]; 2], t: &Point) -> Arrangement {
    let lines: Vec<LineEq> = arr
        .lines()
        .iter()
        .map(|l| l.affine_image(m, t).expect("invertible"))
        .collect();
    Arrangement::build(lines).expect("affine image of a generic arrangement is generic")
}
