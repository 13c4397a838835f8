//! 2-adic three-coloring of drawings and rainbow-triangle certificates.
//!
//! After the affine map sending `p, q, s` to `(0,0), (1,0), (0,1)`, each
//! vertex is colored by the 2-adic valuations of its coordinates. Any line
//! meets at most two colors, the boundary reads `CAAB` or `CABB`, and so some
//! triangle carries all three colors. Its image under the map has an area of
//! valuation at most 0, which bounds `nu(W_j)` by `nu(U)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::areamap::{evaluate_area_vector, normalize_map, AreaError, Drawing};
use crate::complex::{poof, CombinatorialTriangulation, GeometricDissection, GeometryError};
use crate::exact::{val2, Rational, Valuation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    A,
    B,
    C,
}

impl Color {
    pub fn as_char(self) -> char {
        match self {
            Color::A => 'A',
            Color::B => 'B',
            Color::C => 'C',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonskyError {
    #[error(transparent)]
    Area(#[from] AreaError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("boundary p, q, r, s is colored {0}, expected CAAB or CABB")]
    BadBoundary(String),
    #[error("no ABC triangle although the boundary is {0}")]
    InternalContradiction(String),
    #[error("corners do not form a parallelogram")]
    NotParallelogram,
}

/// `A` if `nu(x) <= 0` and `nu(x) <= nu(y)`; else `B` if `nu(y) <= 0` and
/// `nu(y) < nu(x)`; else `C`.
pub fn color_point(x: &Rational, y: &Rational) -> Color {
    let (vx, vy) = (val2(x), val2(y));
    let zero = Valuation::Finite(0);
    if vx <= zero && vx <= vy {
        Color::A
    } else if vy <= zero && vy < vx {
        Color::B
    } else {
        Color::C
    }
}

/// Colors of every vertex of `d` after normalizing `p, q, s`.
pub fn color_drawing(t: &CombinatorialTriangulation, d: &Drawing) -> Result<Vec<Color>, MonskyError> {
    let m = normalize_map(t, d)?;
    Ok(d.points()
        .iter()
        .map(|pt| {
            let img = m.apply(pt);
            color_point(&img.x, &img.y)
        })
        .collect())
}

/// Colors of `p, q, r, s` as a four-letter word.
pub fn boundary_word(t: &CombinatorialTriangulation, colors: &[Color]) -> String {
    t.corners().iter().map(|&v| colors[v].as_char()).collect()
}

pub fn is_rainbow(tri: &[usize; 3], colors: &[Color]) -> bool {
    let mut seen = [false; 3];
    for &v in tri {
        seen[colors[v] as usize] = true;
    }
    seen.iter().all(|&s| s)
}

/// Index of the first triangle with one vertex of each color.
pub fn find_rainbow(t: &CombinatorialTriangulation, colors: &[Color]) -> Result<usize, MonskyError> {
    let word = boundary_word(t, colors);
    if word != "CAAB" && word != "CABB" {
        return Err(MonskyError::BadBoundary(word));
    }
    t.triangles()
        .iter()
        .position(|tri| is_rainbow(tri, colors))
        .ok_or(MonskyError::InternalContradiction(word))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowCertificate {
    pub colors: Vec<Color>,
    pub boundary: String,
    pub triangle: usize,
    pub vertices: [usize; 3],
    /// Doubled area of the rainbow triangle.
    pub w_j: Rational,
    pub u: Rational,
    pub nu_wj: Valuation,
    pub nu_u: Valuation,
    /// `nu(W_j) <= nu(U)` and `W_j != 0`.
    pub holds: bool,
}

pub fn rainbow_certificate(t: &CombinatorialTriangulation, d: &Drawing) -> Result<RainbowCertificate, MonskyError> {
    let colors = color_drawing(t, d)?;
    let triangle = find_rainbow(t, &colors)?;
    let av = evaluate_area_vector(t, d)?;
    let w_j = av.b[triangle].clone();
    let (nu_wj, nu_u) = (val2(&w_j), val2(&av.u));
    let holds = nu_wj <= nu_u && nu_wj.is_finite();
    Ok(RainbowCertificate {
        boundary: boundary_word(t, &colors),
        colors,
        triangle,
        vertices: t.triangles()[triangle],
        w_j,
        u: av.u,
        nu_wj,
        nu_u,
        holds,
    })
}

/// Parity consequence for dissections into triangles of equal area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualAreaParity {
    pub n: usize,
    /// `nu(sigma / n)`.
    pub nu_area: Valuation,
    pub even: bool,
}

#[derive(Debug, Clone)]
pub struct EquidissectionReport {
    pub triangles: usize,
    /// Zero-area triangles added to make the dissection simplicial.
    pub inserted: usize,
    pub triangulation: CombinatorialTriangulation,
    pub certificate: RainbowCertificate,
    /// Area `sigma` of the parallelogram.
    pub sigma: Rational,
    /// True (undoubled) area of the rainbow triangle.
    pub area: Rational,
    pub nu_area: Valuation,
    /// `nu(sigma / 2)`.
    pub bound: Valuation,
    pub equal_areas: Option<EqualAreaParity>,
    /// Area bound holds, and an equal-area dissection has an even count.
    pub consistent: bool,
}

/// Poofs a parallelogram dissection, certifies a rainbow triangle and reports
/// `nu(a_j) <= nu(sigma / 2)` for its true area `a_j`.
pub fn equidissection_report(d: &GeometricDissection) -> Result<EquidissectionReport, MonskyError> {
    d.validate()?;
    if !d.is_parallelogram() {
        return Err(MonskyError::NotParallelogram);
    }
    let poofed = poof(d)?;
    let t = &poofed.triangulation;
    let certificate = rainbow_certificate(t, &poofed.drawing)?;
    let half = Rational::new(1, 2).expect("nonzero");
    let sigma = d.doubled_area() * &half;
    let area = (&certificate.w_j * &half).abs();
    let nu_area = val2(&area);
    let bound = val2(&(&sigma * &half));
    let areas = &evaluate_area_vector(t, &poofed.drawing)?.b[..poofed.original];
    let equal_areas = areas.windows(2).all(|w| w[0] == w[1]).then(|| {
        let n = poofed.original;
        let each = &sigma * &Rational::new(1, n as i64).expect("nonzero");
        EqualAreaParity {
            n,
            nu_area: val2(&each),
            even: n % 2 == 0,
        }
    });
    let consistent =
        certificate.holds && nu_area <= bound && equal_areas.as_ref().is_none_or(|e| e.even && e.nu_area <= bound);
    Ok(EquidissectionReport {
        triangles: poofed.original,
        inserted: poofed.inserted(),
        triangulation: poofed.triangulation,
        certificate,
        sigma,
        area,
        nu_area,
        bound,
        equal_areas,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::areamap::{random_framed_drawing, seeded_rng, DrawingMode};
    use crate::complex::diagonal_family;
    use crate::corpus;
    use crate::geometry::{orientation, Point};
    use alloc::vec;
    use core::cmp::Ordering;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn corner_colors() {
        assert_eq!(color_point(&r("0"), &r("0")), Color::C);
        assert_eq!(color_point(&r("1"), &r("0")), Color::A);
        assert_eq!(color_point(&r("0"), &r("1")), Color::B);
        assert_eq!(color_point(&r("2"), &r("1")), Color::B);
        assert_eq!(color_point(&r("3"), &r("1")), Color::A);
        assert_eq!(color_point(&r("1/2"), &r("1/3")), Color::A);
        assert_eq!(color_point(&r("2"), &r("4")), Color::C);
    }

    #[test]
    fn unit_square_t0() {
        let t = diagonal_family(0);
        let d = Drawing::from_named(
            &t,
            [("p", "0", "0"), ("q", "1", "0"), ("r", "1", "1"), ("s", "0", "1")]
                .map(|(n, x, y)| (n, Point::new(r(x), r(y)))),
        )
        .unwrap();
        let colors = color_drawing(&t, &d).unwrap();
        assert_eq!(boundary_word(&t, &colors), "CAAB");
        let cert = rainbow_certificate(&t, &d).unwrap();
        assert!(cert.holds);
        assert_eq!((cert.nu_wj, cert.nu_u), (Valuation::Finite(0), Valuation::Finite(0)));
    }

    #[test]
    fn bad_boundary_and_contradiction() {
        let t = diagonal_family(1);
        let all_c = vec![Color::C; t.vertex_count()];
        assert!(matches!(find_rainbow(&t, &all_c), Err(MonskyError::BadBoundary(_))));
        let colors = vec![Color::C, Color::A, Color::A, Color::B, Color::C];
        assert!(find_rainbow(&t, &colors).is_ok());
        let t0 = diagonal_family(0);
        assert_eq!(find_rainbow(&t0, &[Color::C, Color::A, Color::A, Color::B]).unwrap(), 1);
        // not a disk: the lone triangle pqr never sees color B
        let broken = CombinatorialTriangulation::from_indices(t0.vertices().to_vec(), [0, 1, 2, 3], vec![[0, 1, 2]]);
        assert!(matches!(
            find_rainbow(&broken, &[Color::C, Color::A, Color::A, Color::B]),
            Err(MonskyError::InternalContradiction(_))
        ));
    }

    #[test]
    fn random_corpus_certificates() {
        let mut rng = seeded_rng(11);
        for (name, t) in corpus::triangulations() {
            for _ in 0..25 {
                let d = random_framed_drawing(&t, DrawingMode::Trapezoid, &mut rng);
                let cert = rainbow_certificate(&t, &d).unwrap_or_else(|e| panic!("{name}: {e}"));
                assert!(cert.holds, "{name}");
                assert!(cert.boundary == "CAAB" || cert.boundary == "CABB");
            }
        }
    }

    #[test]
    fn degenerate_frame() {
        let t = diagonal_family(0);
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(3, 0),
            Point::from_ints(2, 0),
        ];
        let d = Drawing::new(&t, pts).unwrap();
        assert_eq!(
            color_drawing(&t, &d),
            Err(MonskyError::Area(AreaError::DegenerateFrame))
        );
    }

    #[test]
    fn equidissection_corpus() {
        for (name, d) in corpus::square_dissections() {
            let rep = equidissection_report(&d).unwrap();
            assert!(rep.consistent, "{name}");
            assert_eq!(rep.bound, Valuation::Finite(-1));
            assert!(rep.nu_area <= Valuation::Finite(-1));
            match name {
                "halves" | "quarters" | "eighths" => {
                    let eq = rep.equal_areas.unwrap();
                    assert!(eq.even);
                    assert!(eq.nu_area <= Valuation::Finite(-1));
                }
                _ => assert!(rep.equal_areas.is_none(), "{name}"),
            }
        }
        let eighths = corpus::square_dissection("eighths").unwrap();
        let rep = equidissection_report(&eighths).unwrap();
        assert_eq!(rep.equal_areas.unwrap().n, 8);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, prop::sample::select(vec![1i64, 2, 3, 4, 6, 8, 16]))
            .prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn small_point() -> impl Strategy<Value = Point> {
        (small_rational(), small_rational()).prop_map(|(x, y)| Point::new(x, y))
    }

    /// Both coordinates even over an odd denominator.
    fn c_point() -> impl Strategy<Value = Point> {
        let coord = (-20i64..=20, prop::sample::select(vec![1i64, 3, 5, 7]))
            .prop_map(|(n, d)| Rational::new(2 * n, d).unwrap());
        (coord.clone(), coord).prop_map(|(x, y)| Point::new(x, y))
    }

    proptest! {
        #[test]
        fn collinear_points_are_never_rainbow(a in small_point(), b in small_point(), k in small_rational()) {
            let c = a.add(&b.sub(&a).scale(&k));
            prop_assert_eq!(orientation(&a, &b, &c), Ordering::Equal);
            let colors = [a, b, c].map(|p| color_point(&p.x, &p.y));
            prop_assert!(!is_rainbow(&[0, 1, 2], &colors));
        }

        #[test]
        fn translation_by_c_point_keeps_color(p in small_point(), c in c_point()) {
            prop_assert_eq!(color_point(&c.x, &c.y), Color::C);
            let moved = p.add(&c);
            prop_assert_eq!(color_point(&p.x, &p.y), color_point(&moved.x, &moved.y));
        }
    }
}
