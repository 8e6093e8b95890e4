//! Exact integer planar predicates.
//!
//! Every decision in this crate reduces to orientation tests on integer
//! points. Coordinates are bounded so that the 2x2 orientation determinant
//! fits a 128-bit signed intermediate, which makes all predicates exact:
//! there is no epsilon anywhere.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Maximum absolute coordinate value, 2^30.
pub const COORD_BOUND: i64 = 1 << 30;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("coordinate ({x}, {y}) outside the |c| <= 2^30 bound")]
    CoordinateOutOfBounds { x: i64, y: i64 },
    #[error("duplicate point ({0}, {1}) in point set")]
    DuplicatePoint(i64, i64),
    #[error("degenerate (collinear) triangle")]
    DegenerateTriangle,
    #[error("point set is not in general position")]
    NotGeneralPosition,
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
}

/// Planar point with integer coordinates, |x|, |y| <= 2^30.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Point {
    x: i64,
    y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Result<Self, GeomError> {
        if x.abs() > COORD_BOUND || y.abs() > COORD_BOUND {
            return Err(GeomError::CoordinateOutOfBounds { x, y });
        }
        Ok(Point { x, y })
    }

    #[inline]
    pub fn x(&self) -> i64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> i64 {
        self.y
    }
}

impl TryFrom<(i64, i64)> for Point {
    type Error = GeomError;

    fn try_from((x, y): (i64, i64)) -> Result<Self, GeomError> {
        Point::new(x, y)
    }
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let (x, y) = <(i64, i64)>::deserialize(de)?;
        Point::new(x, y).map_err(serde::de::Error::custom)
    }
}

/// Sign of an exact determinant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    #[inline]
    pub fn of(v: i128) -> Self {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    #[inline]
    pub fn value(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

/// Orientation of the ordered triple (p, q, r): sign of (q - p) x (r - p).
///
/// Positive means counterclockwise, zero collinear, negative clockwise.
/// Exact for all in-bound points: the cross product of two vectors with
/// components below 2^31 fits comfortably in i128.
#[inline]
pub fn orient(p: Point, q: Point, r: Point) -> Sign {
    let ux = (q.x - p.x) as i128;
    let uy = (q.y - p.y) as i128;
    let vx = (r.x - p.x) as i128;
    let vy = (r.y - p.y) as i128;
    Sign::of(ux * vy - uy * vx)
}

/// True iff `p` lies in the open interior of the triangle `t`.
///
/// Boundary points (vertices, points on an edge) are not inside. Fails on a
/// collinear triangle.
pub fn strictly_inside(p: Point, t: &[Point; 3]) -> Result<bool, GeomError> {
    let tri = orient(t[0], t[1], t[2]);
    if tri.is_zero() {
        return Err(GeomError::DegenerateTriangle);
    }
    Ok(orient(t[0], t[1], p) == tri && orient(t[1], t[2], p) == tri && orient(t[2], t[0], p) == tri)
}

/// True iff all triples of `points` are non-collinear (vacuous below 3).
///
/// A duplicated point makes some triple collinear, so general position also
/// implies distinctness once there are at least 3 points.
pub fn general_position(points: &[Point]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient(points[i], points[j], points[k]).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// An ordered point set, optionally validated to be in general position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    general_position: bool,
}

impl PointSet {
    /// Point set with distinct points; the general-position flag stays unset.
    pub fn new(points: Vec<Point>) -> Result<Self, GeomError> {
        let mut seen = std::collections::HashSet::new();
        for p in &points {
            if !seen.insert(*p) {
                return Err(GeomError::DuplicatePoint(p.x, p.y));
            }
        }
        Ok(PointSet {
            points,
            general_position: false,
        })
    }

    /// Point set validated to have no three collinear points.
    pub fn new_general_position(points: Vec<Point>) -> Result<Self, GeomError> {
        if !general_position(&points) {
            return Err(GeomError::NotGeneralPosition);
        }
        let mut set = Self::new(points)?;
        set.general_position = true;
        Ok(set)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_general_position(&self) -> bool {
        self.general_position
    }
}

/// The convex hull of `x` as a counterclockwise triangle, if it has exactly
/// three extreme points; `None` for hulls with four or more vertices.
pub fn hull_triangle(x: &PointSet) -> Result<Option<[Point; 3]>, GeomError> {
    if x.len() < 3 {
        return Err(GeomError::TooFewPoints {
            need: 3,
            got: x.len(),
        });
    }
    if !x.is_general_position() {
        return Err(GeomError::NotGeneralPosition);
    }
    let hull = convex_hull_ccw(x.points());
    if hull.len() == 3 {
        Ok(Some([hull[0], hull[1], hull[2]]))
    } else {
        Ok(None)
    }
}

/// Andrew's monotone chain; returns hull vertices in counterclockwise order.
/// Collinear hull points are dropped (irrelevant for general-position input).
fn convex_hull_ccw(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) != Sign::Positive
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) != Sign::Positive
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[inline]
fn on_closed_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p).is_zero()
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// True iff the closed segments intersect at some point that is not a shared
/// endpoint.
///
/// Proper interior crossings, T-junctions, and collinear overlaps all count;
/// two segments meeting only at a common endpoint do not.
pub fn segments_cross(s1: (Point, Point), s2: (Point, Point)) -> bool {
    let (p1, p2) = s1;
    let (q1, q2) = s2;
    let d1 = orient(q1, q2, p1).value();
    let d2 = orient(q1, q2, p2).value();
    let d3 = orient(p1, p2, q1).value();
    let d4 = orient(p1, p2, q2).value();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    // Any remaining intersection involves an endpoint lying on the other
    // segment; it counts unless that endpoint is shared by both segments.
    let shared = |e: Point| e == q1 || e == q2;
    if on_closed_segment(q1, q2, p1) && !shared(p1) {
        return true;
    }
    if on_closed_segment(q1, q2, p2) && !shared(p2) {
        return true;
    }
    let shared_rev = |e: Point| e == p1 || e == p2;
    if on_closed_segment(p1, p2, q1) && !shared_rev(q1) {
        return true;
    }
    if on_closed_segment(p1, p2, q2) && !shared_rev(q2) {
        return true;
    }
    false
}
