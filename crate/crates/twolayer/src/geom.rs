//! Exact integer geometry: points, segments, orientation predicates and
//! segment relation classification. No floating point anywhere; coordinates
//! are arbitrary-precision integers so heavily stretched drawings stay exact.

use num_bigint::BigInt;
use num_traits::Signed;
use std::cmp::Ordering;
use std::fmt;

use crate::Error;

/// Exact grid point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigInt,
    pub y: BigInt,
}

impl Point {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    fn as_i64(&self) -> Option<(i64, i64)> {
        // Fast-path bound keeps every product in orient() inside i128.
        const LIMIT: i64 = 1 << 40;
        let x = i64::try_from(&self.x).ok()?;
        let y = i64::try_from(&self.y).ok()?;
        (x.abs() < LIMIT && y.abs() < LIMIT).then_some((x, y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Closed straight segment with distinct endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }
}

/// Sign of the signed area of the triangle (a, b, c): positive when c lies
/// strictly left of the directed line a -> b.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    if let (Some((ax, ay)), Some((bx, by)), Some((cx, cy))) =
        (a.as_i64(), b.as_i64(), c.as_i64())
    {
        let lhs = (bx - ax) as i128 * (cy - ay) as i128;
        let rhs = (by - ay) as i128 * (cx - ax) as i128;
        return lhs.cmp(&rhs);
    }
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    lhs.cmp(&rhs)
}

/// How two segments relate to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegRelation {
    /// No common point.
    Disjoint,
    /// Exactly one common point and it is an endpoint of both segments.
    SharedEndpointOnly,
    /// A common point in the interior of at least one segment
    /// (proper crossings and endpoint-on-interior touches alike).
    Crossing,
    /// Collinear with a common sub-segment of positive length.
    Overlapping,
}

fn cmp_lex(p: &Point, q: &Point) -> Ordering {
    p.x.cmp(&q.x).then_with(|| p.y.cmp(&q.y))
}

/// 1D-style containment test for a point known to be collinear with `s`.
fn collinear_on(s: &Segment, p: &Point) -> bool {
    let (lo, hi) = if cmp_lex(&s.a, &s.b) == Ordering::Greater {
        (&s.b, &s.a)
    } else {
        (&s.a, &s.b)
    };
    cmp_lex(lo, p) != Ordering::Greater && cmp_lex(p, hi) != Ordering::Greater
}

/// Exact classification of the relation between two non-degenerate segments.
pub fn segments_cross(s1: &Segment, s2: &Segment) -> Result<SegRelation, Error> {
    if s1.a == s1.b || s2.a == s2.b {
        return Err(Error::DegenerateSegment);
    }
    let o1 = orient(&s1.a, &s1.b, &s2.a);
    let o2 = orient(&s1.a, &s1.b, &s2.b);
    let o3 = orient(&s2.a, &s2.b, &s1.a);
    let o4 = orient(&s2.a, &s2.b, &s1.b);
    use Ordering::Equal;

    if o1 == Equal && o2 == Equal {
        // Same supporting line; reduce to interval logic along it.
        let mut shared = 0usize;
        for p in [&s2.a, &s2.b] {
            if collinear_on(s1, p) && *p != s1.a && *p != s1.b {
                return Ok(SegRelation::Overlapping);
            }
        }
        for p in [&s1.a, &s1.b] {
            if collinear_on(s2, p) && *p != s2.a && *p != s2.b {
                return Ok(SegRelation::Overlapping);
            }
        }
        for p in [&s1.a, &s1.b] {
            if *p == s2.a || *p == s2.b {
                shared += 1;
            }
        }
        return Ok(match shared {
            0 => SegRelation::Disjoint,
            1 => SegRelation::SharedEndpointOnly,
            _ => SegRelation::Overlapping,
        });
    }

    // Endpoint coincidences first: at most one is possible here.
    if s1.a == s2.a || s1.a == s2.b || s1.b == s2.a || s1.b == s2.b {
        // The segments may still touch elsewhere: check the far endpoints.
        let interior_touch = (o1 == Equal && collinear_on(s1, &s2.a) && s2.a != s1.a && s2.a != s1.b)
            || (o2 == Equal && collinear_on(s1, &s2.b) && s2.b != s1.a && s2.b != s1.b)
            || (o3 == Equal && collinear_on(s2, &s1.a) && s1.a != s2.a && s1.a != s2.b)
            || (o4 == Equal && collinear_on(s2, &s1.b) && s1.b != s2.a && s1.b != s2.b);
        return Ok(if interior_touch {
            SegRelation::Crossing
        } else {
            SegRelation::SharedEndpointOnly
        });
    }

    // Endpoint of one segment interior to the other counts as a crossing.
    if (o1 == Equal && collinear_on(s1, &s2.a))
        || (o2 == Equal && collinear_on(s1, &s2.b))
        || (o3 == Equal && collinear_on(s2, &s1.a))
        || (o4 == Equal && collinear_on(s2, &s1.b))
    {
        return Ok(SegRelation::Crossing);
    }

    let proper = o1 != Equal && o2 != Equal && o3 != Equal && o4 != Equal && o1 != o2 && o3 != o4;
    Ok(if proper {
        SegRelation::Crossing
    } else {
        SegRelation::Disjoint
    })
}

/// Exact rational point, used only while choosing the relocated start vertex;
/// drawings are rescaled back to integers before they leave the embedder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoint {
    pub x: num_rational::BigRational,
    pub y: num_rational::BigRational,
}

impl RatPoint {
    pub fn from_int(p: &Point) -> Self {
        RatPoint {
            x: num_rational::BigRational::from_integer(p.x.clone()),
            y: num_rational::BigRational::from_integer(p.y.clone()),
        }
    }

    /// Smallest positive integer that clears both denominators.
    pub fn scale_to_integer(&self) -> BigInt {
        let dx = self.x.denom().abs();
        let dy = self.y.denom().abs();
        num_integer::lcm(dx, dy)
    }
}

/// True when `max(|coordinates|)` of the drawing stays within the extent bound.
pub fn within_extent(points: &[Point], extent: &BigInt) -> bool {
    points
        .iter()
        .all(|p| !p.x.is_negative() && !p.y.is_negative() && p.x <= *extent && p.y <= *extent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment {
        Segment::new(pt(ax, ay), pt(bx, by))
    }

    #[test]
    fn diagonals_cross() {
        let r = segments_cross(&seg(0, 0, 2, 2), &seg(0, 2, 2, 0)).unwrap();
        assert_eq!(r, SegRelation::Crossing);
    }

    #[test]
    fn chained_segments_share_endpoint_only() {
        let r = segments_cross(&seg(0, 0, 1, 1), &seg(1, 1, 2, 0)).unwrap();
        assert_eq!(r, SegRelation::SharedEndpointOnly);
    }

    #[test]
    fn collinear_containment_overlaps() {
        let r = segments_cross(&seg(0, 0, 3, 0), &seg(1, 0, 2, 0)).unwrap();
        assert_eq!(r, SegRelation::Overlapping);
    }

    #[test]
    fn endpoint_in_interior_is_crossing() {
        let r = segments_cross(&seg(0, 0, 2, 0), &seg(1, 0, 1, 5)).unwrap();
        assert_eq!(r, SegRelation::Crossing);
        // Shared endpoint plus collinear run on the far side.
        let r = segments_cross(&seg(0, 0, 2, 0), &seg(0, 0, 3, 0)).unwrap();
        assert_eq!(r, SegRelation::Overlapping);
    }

    #[test]
    fn far_apart_disjoint() {
        let r = segments_cross(&seg(0, 0, 1, 0), &seg(5, 5, 6, 9)).unwrap();
        assert_eq!(r, SegRelation::Disjoint);
    }

    #[test]
    fn degenerate_rejected() {
        assert!(segments_cross(&seg(1, 1, 1, 1), &seg(0, 0, 1, 0)).is_err());
    }

    #[test]
    fn touch_at_shared_vertex_with_third_collinear() {
        // Segments meet at (1,0); the second continues along the same line.
        let r = segments_cross(&seg(0, 0, 1, 0), &seg(1, 0, 1, 4)).unwrap();
        assert_eq!(r, SegRelation::SharedEndpointOnly);
    }

    #[test]
    fn big_coordinates_stay_exact() {
        let huge: BigInt = BigInt::from(1u8) << 200;
        let a = Point::new(BigInt::from(0), BigInt::from(0));
        let b = Point::new(huge.clone(), huge.clone());
        let c = Point::new(huge.clone(), &huge - 1);
        assert_eq!(orient(&a, &b, &c), Ordering::Less);
    }
}
