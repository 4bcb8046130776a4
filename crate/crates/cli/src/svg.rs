//! SVG rendering of an arrangement: lines clipped to a margin box around the
//! vertex set, vertices as dots, bounded regions shaded, and an optional
//! highlighted quadrilateral nook point. Presentation only; no geometric
//! decision reads these coordinates.

use std::fmt::Write as _;

use linarr::kernel::{int, LineEq, Point, Rational};
use linarr::regions::enumerate_regions;
use linarr::Arrangement;
use num_traits::ToPrimitive;

const FILLS: &[&str] = &[
    "#cfe8ff", "#ffe3cf", "#d8f5d3", "#f3d9f2", "#fdf3c7", "#d9f0f2",
];

pub fn render(arr: &Arrangement, quad: Option<[usize; 4]>) -> String {
    let (lo, hi) = bounding_box(arr);
    let width = &hi.x - &lo.x;
    let height = &hi.y - &lo.y;
    let to_px = |p: &Point| -> (f64, f64) {
        // y grows upwards mathematically, downwards in SVG
        let x = (&p.x - &lo.x).to_f64().unwrap_or(0.0);
        let y = (&hi.y - &p.y).to_f64().unwrap_or(0.0);
        (x * 40.0, y * 40.0)
    };
    let mut svg = String::new();
    let w = width.to_f64().unwrap_or(1.0) * 40.0;
    let h = height.to_f64().unwrap_or(1.0) * 40.0;
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {:.2} {:.2}\">",
        w, h
    );
    let _ = writeln!(
        svg,
        "<rect x=\"0\" y=\"0\" width=\"{:.2}\" height=\"{:.2}\" fill=\"white\"/>",
        w, h
    );
    // shaded bounded cells
    let regions = enumerate_regions(arr);
    for (fill_idx, region) in regions.iter().filter(|r| r.bounded).enumerate() {
        let pts: Vec<String> = region
            .corners
            .iter()
            .map(|&v| {
                let (x, y) = to_px(arr.vertex(v));
                format!("{:.2},{:.2}", x, y)
            })
            .collect();
        let _ = writeln!(
            svg,
            "<polygon points=\"{}\" fill=\"{}\" stroke=\"none\"/>",
            pts.join(" "),
            FILLS[fill_idx % FILLS.len()]
        );
    }
    // lines clipped to the box
    for (t, line) in arr.lines().iter().enumerate() {
        if let Some((p, q)) = clip(line, &lo, &hi) {
            let (x1, y1) = to_px(&p);
            let (x2, y2) = to_px(&q);
            let _ = writeln!(
                svg,
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#333333\" stroke-width=\"1.5\"/>",
                x1, y1, x2, y2
            );
            let (lx, ly) = to_px(&p);
            let _ = writeln!(
                svg,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" fill=\"#555555\">L{}</text>",
                lx + 4.0,
                ly - 4.0,
                t + 1
            );
        }
    }
    // vertices
    for (v, p) in arr.vertices() {
        let (x, y) = to_px(p);
        let _ = writeln!(
            svg,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#222222\"/>",
            x, y
        );
        let _ = v;
    }
    // nook highlight
    if let Some(quad) = quad {
        let q = linarr::isomorphism::quad_structure(arr, quad);
        let (x, y) = to_px(arr.vertex(q.nook));
        let _ = writeln!(
            svg,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"6\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"2\"/>",
            x, y
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn bounding_box(arr: &Arrangement) -> (Point, Point) {
    let mut xs: Vec<Rational> = Vec::new();
    let mut ys: Vec<Rational> = Vec::new();
    for (_, p) in arr.vertices() {
        xs.push(p.x.clone());
        ys.push(p.y.clone());
    }
    if xs.is_empty() {
        // n = 1: frame a unit box around the line's base point
        let p = arr.line(0).base_point();
        xs.push(p.x.clone());
        ys.push(p.y.clone());
    }
    let min_x = xs.iter().min().unwrap().clone();
    let max_x = xs.iter().max().unwrap().clone();
    let min_y = ys.iter().min().unwrap().clone();
    let max_y = ys.iter().max().unwrap().clone();
    let margin = ((&max_x - &min_x) + (&max_y - &min_y)) / int(4) + int(1);
    (
        Point::new(&min_x - &margin, &min_y - &margin),
        Point::new(&max_x + &margin, &max_y + &margin),
    )
}

/// Clip a line to the axis-aligned box, exactly.
fn clip(line: &LineEq, lo: &Point, hi: &Point) -> Option<(Point, Point)> {
    let mut hits: Vec<Point> = Vec::new();
    let sides = [
        LineEq::vertical(lo.x.clone()),
        LineEq::vertical(hi.x.clone()),
        LineEq::slope_intercept(int(0), lo.y.clone()),
        LineEq::slope_intercept(int(0), hi.y.clone()),
    ];
    for side in &sides {
        if let Some(p) = linarr::intersect(line, side) {
            if p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && !hits.contains(&p) {
                hits.push(p);
            }
        }
    }
    hits.sort();
    if hits.len() >= 2 {
        Some((hits.first().unwrap().clone(), hits.last().unwrap().clone()))
    } else {
        None
    }
}
