//! Randomized invariants for the kernel and the cycle machinery.

use proptest::prelude::*;

use linarr::kernel::{int, intersect, orient, rat, side_of, LineEq, Point, Rational, Vec2};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

fn line() -> impl Strategy<Value = LineEq> {
    (rational(), rational(), rational())
        .prop_filter("non-degenerate", |(a, b, _)| *a != int(0) || *b != int(0))
        .prop_map(|(a, b, c)| LineEq::new(a, b, c).unwrap())
}

proptest! {
    /// The two order axioms of the working field.
    #[test]
    fn order_compatible_with_addition(p in rational(), q in rational(), r in rational()) {
        if p <= q {
            prop_assert!(&p + &r <= &q + &r);
        }
    }

    #[test]
    fn nonnegative_products(p in rational(), q in rational()) {
        if p >= int(0) && q >= int(0) {
            prop_assert!(&p * &q >= int(0));
        }
    }

    #[test]
    fn intersect_symmetric(l1 in line(), l2 in line()) {
        prop_assert_eq!(intersect(&l1, &l2), intersect(&l2, &l1));
    }

    #[test]
    fn intersection_lies_on_both_lines(l1 in line(), l2 in line()) {
        if let Some(p) = intersect(&l1, &l2) {
            prop_assert_eq!(side_of(&l1, &p), 0);
            prop_assert_eq!(side_of(&l2, &p), 0);
        }
    }

    /// Reversing an oriented line flips which side the reference is on.
    #[test]
    fn orientation_reversal_flips_reference_side(l in line(), p in point()) {
        if let Ok(ol) = orient(&l, &p) {
            let base = l.base_point();
            let to_ref = Vec2::new(&p.x - &base.x, &p.y - &base.y);
            let s = ol.dir.cross(&to_ref);
            prop_assert!(s > int(0));
            prop_assert!(ol.dir.neg().cross(&to_ref) < int(0));
        }
    }

    /// Any reading rotation of a cyclic word decomposes identically.
    #[test]
    fn decomposition_is_rotation_invariant(word in Just((0usize..9).collect::<Vec<_>>()).prop_shuffle()) {
        let base = linarr::cycles::decompose(&linarr::cycles::Cycle::from_word(&word));
        for r in 0..word.len() {
            let mut rotated = word.clone();
            rotated.rotate_left(r);
            let d = linarr::cycles::decompose(&linarr::cycles::Cycle::from_word(&rotated));
            prop_assert_eq!(&d.rows, &base.rows);
            prop_assert_eq!(d.standardness, base.standardness);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Hamming distance on sign vectors is a metric.
    #[test]
    fn crossing_number_is_a_metric(n in 2usize..8, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let arr = linarr::sample::random_arrangement(n, &mut rng);
        let regions = linarr::regions::enumerate_regions(&arr);
        for a in regions.iter().take(6) {
            for b in regions.iter().take(6) {
                let ab = linarr::regions::crossing_number(a, b);
                prop_assert_eq!(ab, linarr::regions::crossing_number(b, a));
                prop_assert_eq!(ab == 0, a.sign == b.sign);
                for c in regions.iter().take(6) {
                    prop_assert!(
                        linarr::regions::crossing_number(a, c)
                            <= ab + linarr::regions::crossing_number(b, c)
                    );
                }
            }
        }
    }
}

/// Every shared value type is immutable after construction and safe to send
/// between threads.
#[test]
fn core_types_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<linarr::Arrangement>();
    check::<linarr::Region>();
    check::<linarr::SignVector>();
    check::<linarr::cycles::Cycle>();
    check::<linarr::linefold::LineFold>();
    check::<linarr::transforms::IsoClassGraph>();
}
