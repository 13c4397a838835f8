//! Named triangulations and square dissections used by the checks.

use alloc::vec::Vec;

use crate::complex::{center_fan, diagonal_family, CombinatorialTriangulation, GeometricDissection};
use crate::exact::Rational;
use crate::geometry::Point;

/// `T0`, `T1`, `T2`, the center fan, and `T1` with its first triangle split
/// at a new interior vertex.
pub fn triangulations() -> Vec<(&'static str, CombinatorialTriangulation)> {
    let t1 = diagonal_family(1);
    let refined = t1.refine_barycentric(0).expect("triangle 0 exists");
    alloc::vec![
        ("T0", diagonal_family(0)),
        ("T1", t1),
        ("T2", diagonal_family(2)),
        ("center-fan", center_fan()),
        ("T1-refined", refined),
    ]
}

pub fn triangulation(name: &str) -> Option<CombinatorialTriangulation> {
    triangulations().into_iter().find(|(n, _)| *n == name).map(|(_, t)| t)
}

fn pt(x: i64, y: i64, den: i64) -> Point {
    Point::new(Rational::new(x, den).expect("den"), Rational::new(y, den).expect("den"))
}

fn unit_square() -> [Point; 4] {
    [pt(0, 0, 1), pt(1, 0, 1), pt(1, 1, 1), pt(0, 1, 1)]
}

/// Dissections of the unit square: equal-area ones into 2, 4 and 8
/// triangles, one into areas `1/2, 1/4, 1/4`, and one with a vertex in the
/// middle of another triangle's side.
pub fn square_dissections() -> Vec<(&'static str, GeometricDissection)> {
    let [p, q, r, s] = unit_square();
    let c = pt(1, 1, 2);
    let halves = alloc::vec![[q.clone(), r.clone(), p.clone()], [s.clone(), p.clone(), r.clone()]];
    let quarters = alloc::vec![
        [p.clone(), q.clone(), c.clone()],
        [q.clone(), r.clone(), c.clone()],
        [r.clone(), s.clone(), c.clone()],
        [s.clone(), p.clone(), c.clone()],
    ];
    let mut eighths = Vec::new();
    for (x0, x1) in [(0, 1), (1, 2)] {
        for (y0, y1) in [(0, 1), (1, 2)] {
            eighths.push([pt(x0, y0, 2), pt(x1, y0, 2), pt(x1, y1, 2)]);
            eighths.push([pt(x0, y0, 2), pt(x1, y1, 2), pt(x0, y1, 2)]);
        }
    }
    let unequal = alloc::vec![
        [p.clone(), q.clone(), s.clone()],
        [q.clone(), r.clone(), c.clone()],
        [r.clone(), s.clone(), c.clone()],
    ];
    let t_vertex = alloc::vec![[p.clone(), r.clone(), s], [p, q.clone(), c.clone()], [c, q, r]];
    let d = |tris| GeometricDissection::new(unit_square(), tris);
    alloc::vec![
        ("halves", d(halves)),
        ("quarters", d(quarters)),
        ("eighths", d(eighths)),
        ("unequal", d(unequal)),
        ("t-vertex", d(t_vertex)),
    ]
}

pub fn square_dissection(name: &str) -> Option<GeometricDissection> {
    square_dissections()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, d)| d)
}
