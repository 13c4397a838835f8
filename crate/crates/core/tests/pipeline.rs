use areapoly_core::areamap::{evaluate_area_vector, normalize_map, random_framed_drawing, seeded_rng, DrawingMode};
use areapoly_core::complex::poof;
use areapoly_core::corpus;
use areapoly_core::exact::Rational;
use areapoly_core::monsky::rainbow_certificate;
use areapoly_core::variety::{compute_zt, evaluate_at_areas, integral_equation};

/// A dissection's poofed triangulation has a z_T that vanishes on the
/// dissection's own areas, zero-area triangles included, and whose integral
/// equation has the true area of (p, s, q) as a root.
#[test]
fn poofed_dissections_satisfy_their_trapezoid_polynomial() {
    let mut ran = 0;
    for (name, d) in corpus::square_dissections() {
        let out = poof(&d).unwrap();
        let t = &out.triangulation;
        // eighths poofs to 12 triangles; too slow for a debug test run
        if t.triangle_count() > 8 {
            continue;
        }
        ran += 1;
        let z = compute_zt(t).unwrap_or_else(|e| panic!("{name}: {e}"));
        let av = evaluate_area_vector(t, &out.drawing).unwrap();
        assert!(evaluate_at_areas(&z, &av).unwrap().is_zero(), "{name}");
        let eq = integral_equation(&z, &av).unwrap();
        let u = &av.u * &Rational::new(1, 2).unwrap();
        assert!(eq.evaluate(&[u]).unwrap().is_zero(), "{name}");
    }
    assert_eq!(ran, 4);
}

#[test]
fn normalizing_map_has_determinant_minus_inverse_u() {
    let mut rng = seeded_rng(5);
    for (_, t) in corpus::triangulations() {
        for _ in 0..20 {
            let d = random_framed_drawing(&t, DrawingMode::Trapezoid, &mut rng);
            let m = normalize_map(&t, &d).unwrap();
            let u = evaluate_area_vector(&t, &d).unwrap().u;
            assert_eq!(m.determinant(), -u.recip().unwrap());
            let cert = rainbow_certificate(&t, &d).unwrap();
            assert!(cert.holds);
        }
    }
}
