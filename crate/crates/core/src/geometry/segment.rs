//! Segment predicates used by crossing detection and embedding validation.
//!
//! Orientation tests run a cheap floating-point filter first and fall back
//! to exact rational arithmetic on the `f64` images of the coordinates
//! (every finite float is rational, so the fallback is exact).

use num_rational::BigRational;

/// Static filter constant for the 2x2 orientation determinant,
/// (3 + 16eps) * eps with eps = 2^-53.
const ORIENT_ERRBOUND: f64 = 3.3306690738754716e-16;

/// Sign of the signed area of the triangle (a, b, c).
///
/// Returns 1 for counterclockwise, -1 for clockwise, 0 for exactly
/// collinear points (exact with respect to the given coordinates).
pub fn orient2d(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> i8 {
    let detleft = (a[0] - c[0]) * (b[1] - c[1]);
    let detright = (a[1] - c[1]) * (b[0] - c[0]);
    let det = detleft - detright;
    let detsum = detleft.abs() + detright.abs();
    if det.abs() > ORIENT_ERRBOUND * detsum {
        return if det > 0.0 { 1 } else { -1 };
    }
    orient2d_rational(a, b, c)
}

fn rational(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite coordinate")
}

fn orient2d_rational(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> i8 {
    use std::cmp::Ordering;
    let acx = rational(a[0]) - rational(c[0]);
    let acy = rational(a[1]) - rational(c[1]);
    let bcx = rational(b[0]) - rational(c[0]);
    let bcy = rational(b[1]) - rational(c[1]);
    let det = acx * bcy - acy * bcx;
    match det.cmp(&num_traits::Zero::zero()) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// How two closed segments that share no endpoint relate to each other.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PairRelation {
    /// No common point.
    Disjoint,
    /// Exactly one common point, interior to both segments.
    Crossing,
    /// One common point which is an endpoint of at least one segment
    /// (T-junction); forbidden by the embedding rules.
    Touching,
    /// Infinitely many common points (collinear overlap); forbidden.
    Overlapping,
}

/// Classify two segments with endpoints `a1-a2` and `b1-b2`, assuming no
/// pair of endpoints coincides.
pub fn classify_pair(a1: [f64; 2], a2: [f64; 2], b1: [f64; 2], b2: [f64; 2]) -> PairRelation {
    // Bounding-box reject keeps the exact fall-back off the hot path and
    // settles far-apart collinear segments immediately.
    if a1[0].max(a2[0]) < b1[0].min(b2[0])
        || b1[0].max(b2[0]) < a1[0].min(a2[0])
        || a1[1].max(a2[1]) < b1[1].min(b2[1])
        || b1[1].max(b2[1]) < a1[1].min(a2[1])
    {
        return PairRelation::Disjoint;
    }

    let o1 = orient2d(a1, a2, b1);
    let o2 = orient2d(a1, a2, b2);
    let o3 = orient2d(b1, b2, a1);
    let o4 = orient2d(b1, b2, a2);

    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return if o1 != o2 && o3 != o4 {
            PairRelation::Crossing
        } else {
            PairRelation::Disjoint
        };
    }

    if o1 == 0 && o2 == 0 {
        // Collinear segments: overlap iff the 1D projections overlap.
        return if collinear_overlap(a1, a2, b1, b2) {
            PairRelation::Overlapping
        } else {
            PairRelation::Disjoint
        };
    }

    // Exactly one endpoint sits on the other segment's line; it violates
    // the embedding iff it also lies inside the segment's span.
    let touches = (o1 == 0 && within_span(b1, a1, a2))
        || (o2 == 0 && within_span(b2, a1, a2))
        || (o3 == 0 && within_span(a1, b1, b2))
        || (o4 == 0 && within_span(a2, b1, b2));
    if touches {
        PairRelation::Touching
    } else {
        PairRelation::Disjoint
    }
}

/// For two edges that share the endpoint `s`: true iff they run on top of
/// each other (collinear with the free endpoints on the same side).
pub fn overlap_at_shared(s: [f64; 2], p: [f64; 2], q: [f64; 2]) -> bool {
    if orient2d(s, p, q) != 0 {
        return false;
    }
    let dot = (p[0] - s[0]) * (q[0] - s[0]) + (p[1] - s[1]) * (q[1] - s[1]);
    dot > 0.0
}

fn within_span(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

fn collinear_overlap(a1: [f64; 2], a2: [f64; 2], b1: [f64; 2], b2: [f64; 2]) -> bool {
    // Project on the dominant axis of segment a.
    let axis = if (a2[0] - a1[0]).abs() >= (a2[1] - a1[1]).abs() {
        0
    } else {
        1
    };
    let (alo, ahi) = minmax(a1[axis], a2[axis]);
    let (blo, bhi) = minmax(b1[axis], b2[axis]);
    let lo = alo.max(blo);
    let hi = ahi.min(bhi);
    hi > lo
}

fn minmax(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_signs() {
        assert_eq!(orient2d([0.0, 0.0], [1.0, 0.0], [0.0, 1.0]), 1);
        assert_eq!(orient2d([0.0, 0.0], [1.0, 0.0], [0.0, -1.0]), -1);
        assert_eq!(orient2d([0.0, 0.0], [1.0, 0.0], [2.0, 0.0]), 0);
    }

    #[test]
    fn orientation_near_degenerate_is_exact() {
        // Points collinear up to the last ulp; the rational fall-back must
        // still decide the sign consistently with exact arithmetic.
        let a = [0.5, 0.5];
        let b = [12.0, 12.0];
        let c = [24.0, 24.000000000000004]; // one ulp above the diagonal
        assert_eq!(orient2d(a, b, c), 1);
        let c_exact = [24.0, 24.0];
        assert_eq!(orient2d(a, b, c_exact), 0);
    }

    #[test]
    fn classify_crossing_and_disjoint() {
        let r = classify_pair([0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]);
        assert_eq!(r, PairRelation::Crossing);
        let r = classify_pair([0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]);
        assert_eq!(r, PairRelation::Disjoint);
    }

    #[test]
    fn classify_touch_and_overlap() {
        // T-junction: endpoint of b interior to a.
        let r = classify_pair([0.0, 0.0], [2.0, 0.0], [1.0, 0.0], [1.0, 1.0]);
        assert_eq!(r, PairRelation::Touching);
        // Collinear overlap.
        let r = classify_pair([0.0, 0.0], [2.0, 0.0], [1.0, 0.0], [3.0, 0.0]);
        assert_eq!(r, PairRelation::Overlapping);
        // Collinear, disjoint spans.
        let r = classify_pair([0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]);
        assert_eq!(r, PairRelation::Disjoint);
    }

    #[test]
    fn shared_endpoint_overlap() {
        assert!(overlap_at_shared([2.0, 0.0], [0.0, 0.0], [1.0, 0.0]));
        assert!(!overlap_at_shared([0.0, 0.0], [1.0, 0.0], [0.0, 1.0]));
        assert!(!overlap_at_shared([0.0, 0.0], [1.0, 0.0], [-1.0, 0.0]));
    }
}
