//! Doubled areas: symbolic in a gauge-fixed ring, and numeric on drawings.
//!
//! In the gauge the corners sit at `p = (0,0)`, `q = (1,0)`, `s = (0,lam)`
//! and `r = s + t(q - p) = (t, lam)`; every other vertex `v` gets free
//! coordinates `x_v`, `y_v`. Every trapezoid drawing with `p, q, s` not
//! collinear is an affine image of a gauge drawing, and affine maps scale all
//! doubled areas by the same determinant, so the area variety is unchanged.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::complex::CombinatorialTriangulation;
use crate::exact::Rational;
use crate::geometry::{cross, doubled_area as point_area, Point};
use crate::poly::{Polynomial, Ring};

pub use crate::geometry::doubled_area;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AreaError {
    #[error("drawing has {found} coordinates, triangulation has {expected} vertices")]
    CoordinateCount { expected: usize, found: usize },
    #[error("no coordinates for vertex {0:?}")]
    MissingCoordinate(String),
    #[error("unknown vertex {0:?} in drawing")]
    UnknownVertex(String),
    #[error("corners do not form a trapezoid: q - p and r - s are not parallel")]
    NotTrapezoid,
    #[error("p, s, q are collinear (U = 0); no normalizing frame")]
    DegenerateFrame,
}

/// Trapezoid (`r - s` parallel to `q - p`) or parallelogram (`r - s = q - p`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrawingMode {
    Trapezoid,
    Parallelogram,
}

/// Rational coordinates for every vertex of a triangulation, indexed like the
/// triangulation's vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    coords: Vec<Point>,
}

impl Drawing {
    pub fn new(t: &CombinatorialTriangulation, coords: Vec<Point>) -> Result<Self, AreaError> {
        if coords.len() != t.vertex_count() {
            return Err(AreaError::CoordinateCount {
                expected: t.vertex_count(),
                found: coords.len(),
            });
        }
        let d = Drawing { coords };
        let [p, q, r, s] = d.corner_points(t);
        if !cross(&q.sub(p), &r.sub(s)).is_zero() {
            return Err(AreaError::NotTrapezoid);
        }
        Ok(d)
    }

    /// Builds a drawing from `(vertex id, point)` pairs.
    pub fn from_named<I, S>(t: &CombinatorialTriangulation, named: I) -> Result<Self, AreaError>
    where
        I: IntoIterator<Item = (S, Point)>,
        S: AsRef<str>,
    {
        let mut slots: Vec<Option<Point>> = alloc::vec![None; t.vertex_count()];
        for (name, pt) in named {
            let i = t
                .vertex_index(name.as_ref())
                .ok_or_else(|| AreaError::UnknownVertex(String::from(name.as_ref())))?;
            slots[i] = Some(pt);
        }
        let mut coords = Vec::with_capacity(slots.len());
        for (i, s) in slots.into_iter().enumerate() {
            coords.push(s.ok_or_else(|| AreaError::MissingCoordinate(String::from(t.vertex_name(i))))?);
        }
        Drawing::new(t, coords)
    }

    pub fn point(&self, vertex: usize) -> &Point {
        &self.coords[vertex]
    }

    pub fn points(&self) -> &[Point] {
        &self.coords
    }

    /// Corner images in the order `p, q, r, s`.
    pub fn corner_points<'a>(&'a self, t: &CombinatorialTriangulation) -> [&'a Point; 4] {
        let c = t.corners();
        [
            &self.coords[c[0]],
            &self.coords[c[1]],
            &self.coords[c[2]],
            &self.coords[c[3]],
        ]
    }

    pub fn is_parallelogram(&self, t: &CombinatorialTriangulation) -> bool {
        let [p, q, r, s] = self.corner_points(t);
        q.sub(p) == r.sub(s)
    }
}

/// The doubled-area vector of a drawing: `U` for `(p, s, q)` and one entry per
/// triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaVector {
    pub u: Rational,
    pub b: Vec<Rational>,
}

impl AreaVector {
    /// `(U, B_1, ..., B_n)` as one slice-ready vector.
    pub fn as_point(&self) -> Vec<Rational> {
        let mut v = Vec::with_capacity(self.b.len() + 1);
        v.push(self.u.clone());
        v.extend(self.b.iter().cloned());
        v
    }

    pub fn sum_b(&self) -> Rational {
        self.b.iter().fold(Rational::zero(), |a, x| a + x)
    }
}

/// Numeric doubled areas of every triangle and of `(p, s, q)`.
pub fn evaluate_area_vector(t: &CombinatorialTriangulation, d: &Drawing) -> Result<AreaVector, AreaError> {
    if d.coords.len() != t.vertex_count() {
        return Err(AreaError::CoordinateCount {
            expected: t.vertex_count(),
            found: d.coords.len(),
        });
    }
    let [p, q, _, s] = d.corner_points(t);
    let u = point_area(p, s, q);
    let b = t
        .triangles()
        .iter()
        .map(|tri| point_area(&d.coords[tri[0]], &d.coords[tri[1]], &d.coords[tri[2]]))
        .collect();
    Ok(AreaVector { u, b })
}

/// Doubled area of `(q, s, r)`, the complement of `U` in the quadrilateral.
pub fn u_prime(t: &CombinatorialTriangulation, d: &Drawing) -> Rational {
    let [_, q, r, s] = d.corner_points(t);
    point_area(q, s, r)
}

/// `(x, y) -> A (x, y) + offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: [[Rational; 2]; 2],
    pub offset: [Rational; 2],
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            linear: [[Rational::one(), Rational::zero()], [Rational::zero(), Rational::one()]],
            offset: [Rational::zero(), Rational::zero()],
        }
    }

    pub fn apply(&self, pt: &Point) -> Point {
        let [[a, b], [c, d]] = &self.linear;
        Point {
            x: a * &pt.x + b * &pt.y + &self.offset[0],
            y: c * &pt.x + d * &pt.y + &self.offset[1],
        }
    }

    pub fn determinant(&self) -> Rational {
        let [[a, b], [c, d]] = &self.linear;
        a * d - b * c
    }
}

/// The affine map sending `p, q, s` to `(0,0), (1,0), (0,1)`. Its determinant
/// is `-1/U`.
pub fn normalize_map(t: &CombinatorialTriangulation, d: &Drawing) -> Result<AffineMap, AreaError> {
    let [p, q, _, s] = d.corner_points(t);
    let e1 = q.sub(p);
    let e2 = s.sub(p);
    let det = cross(&e1, &e2);
    let inv = det.recip().map_err(|_| AreaError::DegenerateFrame)?;
    // inverse of the column matrix [e1 e2]
    let linear = [[&e2.y * &inv, -(&e2.x * &inv)], [-(&e1.y * &inv), &e1.x * &inv]];
    let [[a, b], [c, dd]] = &linear;
    let offset = [-(a * &p.x + b * &p.y), -(c * &p.x + dd * &p.y)];
    Ok(AffineMap { linear, offset })
}

/// The gauge-fixed polynomial ring: `t` (omitted for parallelograms), `lam`,
/// then `x_v, y_v` for each non-corner vertex.
#[derive(Debug, Clone)]
pub struct GaugedRing {
    ring: Ring,
    mode: DrawingMode,
    coords: Vec<(Polynomial, Polynomial)>,
}

impl GaugedRing {
    pub fn new(t: &CombinatorialTriangulation, mode: DrawingMode) -> Self {
        let interior = t.interior_vertices();
        let mut names: Vec<String> = Vec::new();
        if mode == DrawingMode::Trapezoid {
            names.push(String::from("t"));
        }
        names.push(String::from("lam"));
        for &v in &interior {
            names.push(format!("x_{}", t.vertex_name(v)));
            names.push(format!("y_{}", t.vertex_name(v)));
        }
        let ring = Ring::new(names).expect("vertex names are unique");
        let zero = Polynomial::zero(&ring);
        let one = Polynomial::one(&ring);
        let lam = ring.var("lam").expect("lam");
        let tv = match mode {
            DrawingMode::Trapezoid => ring.var("t").expect("t"),
            DrawingMode::Parallelogram => one.clone(),
        };
        let mut coords = alloc::vec![(zero.clone(), zero.clone()); t.vertex_count()];
        let [p, q, r, s] = t.corners();
        coords[p] = (zero.clone(), zero.clone());
        coords[q] = (one, zero.clone());
        coords[s] = (zero, lam.clone());
        coords[r] = (tv, lam);
        for &v in &interior {
            let name = t.vertex_name(v);
            coords[v] = (
                ring.var(&format!("x_{name}")).expect("x"),
                ring.var(&format!("y_{name}")).expect("y"),
            );
        }
        GaugedRing { ring, mode, coords }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn mode(&self) -> DrawingMode {
        self.mode
    }

    /// Names of all geometric variables, the ones elimination removes.
    pub fn variable_names(&self) -> Vec<&str> {
        self.ring.names().iter().map(String::as_str).collect()
    }

    pub fn vertex_coords(&self, v: usize) -> &(Polynomial, Polynomial) {
        &self.coords[v]
    }

    fn doubled_area(&self, a: usize, b: usize, c: usize) -> Polynomial {
        let (ax, ay) = &self.coords[a];
        let (bx, by) = &self.coords[b];
        let (cx, cy) = &self.coords[c];
        let ux = bx - ax;
        let uy = by - ay;
        let vx = cx - ax;
        let vy = cy - ay;
        &(&ux * &vy) - &(&uy * &vx)
    }

    /// Values of the ring variables for a drawing already in gauge position,
    /// or `None` when the drawing is not.
    pub fn gauge_point(&self, t: &CombinatorialTriangulation, d: &Drawing) -> Option<Vec<Rational>> {
        let [p, q, r, s] = d.corner_points(t);
        let zero = Rational::zero();
        if p.x != zero || p.y != zero || q.x != Rational::one() || q.y != zero || s.x != zero || r.y != s.y {
            return None;
        }
        if self.mode == DrawingMode::Parallelogram && r.x != Rational::one() {
            return None;
        }
        let mut vals = Vec::with_capacity(self.ring.len());
        if self.mode == DrawingMode::Trapezoid {
            vals.push(r.x.clone());
        }
        vals.push(s.y.clone());
        for v in t.interior_vertices() {
            vals.push(d.point(v).x.clone());
            vals.push(d.point(v).y.clone());
        }
        Some(vals)
    }
}

/// Symbolic doubled areas of a triangulation in the gauged ring.
#[derive(Debug, Clone)]
pub struct GaugedAreaPolynomials {
    pub gauge: GaugedRing,
    /// One per triangle, in triangle order.
    pub w: Vec<Polynomial>,
    /// Triangle `(p, s, q)`.
    pub w_u: Polynomial,
    /// Triangle `(q, s, r)`.
    pub w_u_prime: Polynomial,
}

/// Area polynomials in the trapezoid gauge.
pub fn area_polynomials(t: &CombinatorialTriangulation) -> GaugedAreaPolynomials {
    area_polynomials_in(t, DrawingMode::Trapezoid)
}

pub fn area_polynomials_in(t: &CombinatorialTriangulation, mode: DrawingMode) -> GaugedAreaPolynomials {
    let gauge = GaugedRing::new(t, mode);
    let w = t
        .triangles()
        .iter()
        .map(|tri| gauge.doubled_area(tri[0], tri[1], tri[2]))
        .collect();
    let [p, q, r, s] = t.corners();
    let w_u = gauge.doubled_area(p, s, q);
    let w_u_prime = gauge.doubled_area(q, s, r);
    GaugedAreaPolynomials {
        gauge,
        w,
        w_u,
        w_u_prime,
    }
}

const DENOMINATORS: [i64; 6] = [1, 2, 3, 4, 5, 8];

/// A rational with numerator in `[-9, 9]` and denominator in
/// `{1, 2, 3, 4, 5, 8}`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-9i64..=9);
    let d = DENOMINATORS[rng.gen_range(0..DENOMINATORS.len())];
    Rational::new(n, d).expect("nonzero denominator")
}

pub fn random_point<R: Rng + ?Sized>(rng: &mut R) -> Point {
    Point::new(random_rational(rng), random_rational(rng))
}

/// A random drawing with arbitrary (non-gauge) coordinates whose corners form
/// a trapezoid, `r = s + t(q - p)`, or a parallelogram (`t = 1`).
pub fn random_drawing<R: Rng + ?Sized>(t: &CombinatorialTriangulation, mode: DrawingMode, rng: &mut R) -> Drawing {
    let mut coords: Vec<Point> = (0..t.vertex_count()).map(|_| random_point(rng)).collect();
    let [p, q, r, s] = t.corners();
    let ratio = match mode {
        DrawingMode::Trapezoid => random_rational(rng),
        DrawingMode::Parallelogram => Rational::one(),
    };
    coords[r] = coords[s].add(&coords[q].sub(&coords[p]).scale(&ratio));
    Drawing::new(t, coords).expect("trapezoid by construction")
}

/// Like [`random_drawing`] but resampled until `p, s, q` are not collinear.
pub fn random_framed_drawing<R: Rng + ?Sized>(
    t: &CombinatorialTriangulation,
    mode: DrawingMode,
    rng: &mut R,
) -> Drawing {
    loop {
        let d = random_drawing(t, mode, rng);
        let [p, q, _, s] = d.corner_points(t);
        if !point_area(p, s, q).is_zero() {
            return d;
        }
    }
}

/// Deterministic generator used for every seeded sampling routine.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
