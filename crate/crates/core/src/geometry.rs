//! Points in Q² and exact orientation predicates.

use core::cmp::Ordering;
use core::fmt;

use crate::exact::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn add(&self, other: &Point) -> Point {
        Point {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `det[u, v]` for vectors `u`, `v`.
pub fn cross(u: &Point, v: &Point) -> Rational {
    &u.x * &v.y - &u.y * &v.x
}

/// Twice the signed area of triangle `abc`: `det[b - a, c - a]`, positive
/// for counterclockwise triples.
pub fn doubled_area(a: &Point, b: &Point, c: &Point) -> Rational {
    cross(&b.sub(a), &c.sub(a))
}

/// Sign of [`doubled_area`].
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Ordering {
    doubled_area(a, b, c).cmp(&Rational::zero())
}

/// True if `p` lies on segment `ab` strictly between its endpoints.
pub fn on_open_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orientation(a, b, p) != Ordering::Equal || p == a || p == b {
        return false;
    }
    let d = b.sub(a);
    let t = p.sub(a).dot(&d);
    t > Rational::zero() && t < d.dot(&d)
}
