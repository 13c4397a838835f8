//! The area variety of a triangulation: the trapezoid polynomial `z_T`, the
//! parallelogram polynomial `p_T`, and checks of their structural properties.
//!
//! Slots are named after triangle order: `B1, ..., Bn` for the doubled areas
//! of triangles `0..n`, and `U` for the doubled area of `(p, s, q)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::areamap::{area_polynomials_in, evaluate_area_vector, random_drawing, AreaError, AreaVector, DrawingMode};
use crate::complex::{diagonal_family, CombinatorialTriangulation};
use crate::exact::Rational;
use crate::linalg::nullspace;
use crate::poly::{
    divides, eliminate_with, principal_generator, GroebnerConfig, Monomial, PolyError, Polynomial, Ring,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VarietyError {
    #[error("invalid triangulation: {0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Area(#[from] AreaError),
    #[error("not monic in U: coefficient of U^{degree} is {coefficient}")]
    NotMonic { degree: u32, coefficient: Rational },
    #[error("restriction to {slot} is not +-U^e(U+B)^f; residual {residual}")]
    Proposition { slot: String, residual: String },
    #[error("p_T does not divide z_T(-S, 2B)")]
    NotDivisible,
    #[error("no relation of degree <= {cap} among sampled area vectors")]
    DegreeCap { cap: u32 },
    #[error("sampling degenerate at degree {degree}: nullspace dimension {dimension}")]
    Degenerate { degree: u32, dimension: usize },
}

impl VarietyError {
    /// True when a resource limit, not the input, stopped the computation.
    pub fn is_guard(&self) -> bool {
        matches!(self, VarietyError::Poly(PolyError::Guard { .. }))
    }
}

/// A homogeneous integer polynomial with content 1 whose leading coefficient
/// in graded lex order is positive.
///
/// With `U` as the first variable this makes the coefficient of `U^d`
/// positive whenever that term is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    poly: Polynomial,
    degree: u32,
}

impl IntegerPolynomial {
    pub fn from_polynomial(p: &Polynomial) -> Result<Self, VarietyError> {
        let degree = p.homogeneous_degree()?;
        let (_, poly) = p.content_primitive()?;
        Ok(IntegerPolynomial { poly, degree })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.poly
    }

    pub fn ring(&self) -> &Ring {
        self.poly.ring()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `B1, ..., Bn`.
pub fn slot_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("B{i}")).collect()
}

/// `U, B1, ..., Bn` for the triangles of `t`.
pub fn zt_ring(t: &CombinatorialTriangulation) -> Ring {
    let mut names = alloc::vec![String::from("U")];
    names.extend(slot_names(t.triangle_count()));
    Ring::new(names).expect("distinct names")
}

/// `B1, ..., Bn` for the triangles of `t`.
pub fn pt_ring(t: &CombinatorialTriangulation) -> Ring {
    Ring::new(slot_names(t.triangle_count())).expect("distinct names")
}

fn ensure_valid(t: &CombinatorialTriangulation) -> Result<(), VarietyError> {
    let report = t.validate();
    if report.is_valid() {
        return Ok(());
    }
    let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    Err(VarietyError::Invalid(msg.join("; ")))
}

/// Eliminates the gauge variables from `{slot - area}` relations and returns
/// the generator, moved into `target`.
fn area_relation(
    t: &CombinatorialTriangulation,
    mode: DrawingMode,
    with_u: bool,
    target: &Ring,
    config: &GroebnerConfig,
) -> Result<Vec<Polynomial>, VarietyError> {
    let areas = area_polynomials_in(t, mode);
    let geometric: Vec<&str> = areas.gauge.variable_names();
    let big = areas.gauge.ring().extend(target.names().iter().map(String::as_str))?;
    let mut gens = Vec::with_capacity(t.triangle_count() + 1);
    if with_u {
        gens.push(&big.var("U")? - &areas.w_u.to_ring(&big)?);
    }
    for (name, w) in slot_names(t.triangle_count()).iter().zip(&areas.w) {
        gens.push(&big.var(name)? - &w.to_ring(&big)?);
    }
    let basis = eliminate_with(&gens, &geometric, config)?;
    basis
        .iter()
        .map(|g| g.to_ring(target).map_err(VarietyError::from))
        .collect()
}

/// The trapezoid polynomial `z_T` in `U, B1, ..., Bn`, normalized so the
/// coefficient of `U^d` is `+1`.
pub fn compute_zt(t: &CombinatorialTriangulation) -> Result<IntegerPolynomial, VarietyError> {
    compute_zt_with(t, &GroebnerConfig::default())
}

pub fn compute_zt_with(
    t: &CombinatorialTriangulation,
    config: &GroebnerConfig,
) -> Result<IntegerPolynomial, VarietyError> {
    ensure_valid(t)?;
    let target = zt_ring(t);
    let basis = area_relation(t, DrawingMode::Trapezoid, true, &target, config)?;
    let z = IntegerPolynomial::from_polynomial(&principal_generator(&basis)?)?;
    let report = check_monic_zt(&z);
    if !report.passes {
        return Err(VarietyError::NotMonic {
            degree: report.degree,
            coefficient: report.coefficient,
        });
    }
    Ok(z)
}

/// The parallelogram polynomial `p_T` in `B1, ..., Bn`, with positive
/// leading coefficient.
pub fn compute_pt(t: &CombinatorialTriangulation) -> Result<IntegerPolynomial, VarietyError> {
    compute_pt_with(t, &GroebnerConfig::default())
}

pub fn compute_pt_with(
    t: &CombinatorialTriangulation,
    config: &GroebnerConfig,
) -> Result<IntegerPolynomial, VarietyError> {
    ensure_valid(t)?;
    let target = pt_ring(t);
    let basis = area_relation(t, DrawingMode::Parallelogram, false, &target, config)?;
    IntegerPolynomial::from_polynomial(&principal_generator(&basis)?)
}

/// True when the triangle areas of trapezoid drawings satisfy no polynomial
/// relation at all.
pub fn check_independence(t: &CombinatorialTriangulation) -> Result<bool, VarietyError> {
    check_independence_with(t, &GroebnerConfig::default())
}

pub fn check_independence_with(t: &CombinatorialTriangulation, config: &GroebnerConfig) -> Result<bool, VarietyError> {
    ensure_valid(t)?;
    let basis = area_relation(t, DrawingMode::Trapezoid, false, &pt_ring(t), config)?;
    Ok(basis.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicReport {
    pub degree: u32,
    /// Coefficient of `U^degree`.
    pub coefficient: Rational,
    pub passes: bool,
}

fn pure_power_coefficient(p: &IntegerPolynomial, var: usize) -> Rational {
    let mut exps = alloc::vec![0u32; p.ring().len()];
    exps[var] = p.degree();
    p.polynomial().coefficient(&Monomial::from_exponents(exps))
}

fn is_unit(c: &Rational) -> bool {
    c.abs().is_one()
}

pub fn check_monic_zt(z: &IntegerPolynomial) -> MonicReport {
    let coefficient = match z.ring().index_of("U") {
        Some(u) => pure_power_coefficient(z, u),
        None => Rational::zero(),
    };
    MonicReport {
        degree: z.degree(),
        passes: is_unit(&coefficient),
        coefficient,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicAllReport {
    pub degree: u32,
    /// `(variable, coefficient of variable^degree)` for every variable.
    pub leading: Vec<(String, Rational)>,
    pub passes: bool,
}

pub fn check_monic_all(p: &IntegerPolynomial) -> MonicAllReport {
    let leading: Vec<(String, Rational)> = (0..p.ring().len())
        .map(|v| (p.ring().name(v).to_string(), pure_power_coefficient(p, v)))
        .collect();
    let passes = leading.iter().all(|(_, c)| is_unit(c));
    MonicAllReport {
        degree: p.degree(),
        leading,
        passes,
    }
}

/// Variables of `z` other than `U`, in ring order.
pub fn triangle_slots(z: &IntegerPolynomial) -> Vec<String> {
    z.ring().names().iter().filter(|n| n.as_str() != "U").cloned().collect()
}

/// Sets every triangle slot except `slot` to zero and matches the result
/// against `+-U^e (U + B)^f`; returns `(e, f)`.
pub fn check_proposition(z: &IntegerPolynomial, slot: usize) -> Result<(u32, u32), VarietyError> {
    let slots = triangle_slots(z);
    let name = slots
        .get(slot)
        .ok_or_else(|| PolyError::UnknownVariable(format!("slot {slot}")))?
        .clone();
    let small = Ring::new(["U", "B"]).expect("distinct names");
    let (u, b) = (small.var("U")?, small.var("B")?);
    let images: Vec<Polynomial> = z
        .ring()
        .names()
        .iter()
        .map(|n| {
            if n == "U" {
                u.clone()
            } else if *n == name {
                b.clone()
            } else {
                Polynomial::zero(&small)
            }
        })
        .collect();
    let r = z.polynomial().compose(&small, &images)?;
    let fail = |residual: &Polynomial| VarietyError::Proposition {
        slot: name.clone(),
        residual: residual.to_string(),
    };
    let Some(e) = r.terms().map(|(m, _)| m.exponent(0)).min() else {
        return Err(fail(&r));
    };
    let f = z.degree() - e;
    let candidate = &u.pow(e) * &(&u + &b).pow(f);
    let sign = r.coefficient(&Monomial::from_exponents(alloc::vec![e, f]));
    if !is_unit(&sign) {
        return Err(fail(&r));
    }
    let residual = &r - &candidate.scale(&sign);
    if residual.is_zero() {
        Ok((e, f))
    } else {
        Err(fail(&residual))
    }
}

/// `z(-S, 2B1, ..., 2Bn)` with `S = B1 + ... + Bn`, in `target`.
pub fn parallelogram_substitution(z: &IntegerPolynomial, target: &Ring) -> Result<Polynomial, VarietyError> {
    let mut s = Polynomial::zero(target);
    for name in triangle_slots(z) {
        s = &s + &target.var(&name)?;
    }
    let two = Rational::from(2);
    let images = z
        .ring()
        .names()
        .iter()
        .map(|n| {
            if n == "U" {
                Ok(-&s)
            } else {
                Ok(target.var(n)?.scale(&two))
            }
        })
        .collect::<Result<Vec<_>, PolyError>>()?;
    Ok(z.polynomial().compose(target, &images)?)
}

/// The quotient `z(-S, 2B) / p`.
pub fn check_divisibility(z: &IntegerPolynomial, p: &IntegerPolynomial) -> Result<Polynomial, VarietyError> {
    let zt = parallelogram_substitution(z, p.ring())?;
    divides(p.polynomial(), &zt)?.ok_or(VarietyError::NotDivisible)
}

/// `z_{T_n}` from the closed product formula in the linear forms
/// `l_k = U + A_1 + ... + A_k + B_1 + ... + B_k`, in the slot order of
/// [`diagonal_family`].
pub fn diagonal_zt_oracle(n: usize) -> IntegerPolynomial {
    let ring = zt_ring(&diagonal_family(n));
    let var = |i: usize| Polynomial::var(&ring, i);
    let a = |i: usize| var(i + 1);
    let b = |i: usize| if i == 1 { var(1) } else { var(n + i + 1) };
    let mut ell = alloc::vec![var(0)];
    for k in 1..=n + 1 {
        let next = &(&ell[k - 1] + &a(k)) + &b(k);
        ell.push(next);
    }
    let product_except = |skip: &[usize]| {
        (0..=n + 1)
            .filter(|j| !skip.contains(j))
            .fold(Polynomial::one(&ring), |acc, j| &acc * &ell[j])
    };
    let mut z = product_except(&[0]);
    for k in 0..=n {
        z = &z - &(&a(k + 1) * &product_except(&[k, k + 1]));
    }
    IntegerPolynomial::from_polynomial(&z).expect("homogeneous of degree n + 1")
}

/// Exponent vectors of all monomials of total degree `d` in `k` variables.
fn monomials_of_degree(k: usize, d: u32) -> Vec<Monomial> {
    fn go(k: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == k {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(k, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(k, d, &mut Vec::new(), &mut out);
    }
    out
}

fn eval_monomial(m: &Monomial, point: &[Rational]) -> Rational {
    m.exponents()
        .iter()
        .zip(point)
        .filter(|(&e, _)| e > 0)
        .fold(Rational::one(), |acc, (&e, x)| acc * x.pow(e))
}

/// Limits for [`interpolation_oracle_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterpolationConfig {
    pub max_degree: u32,
    /// Samples per unknown coefficient.
    pub oversample: usize,
    /// Fresh sample sets tried when the nullspace is not one-dimensional.
    pub attempts: usize,
}

impl Default for InterpolationConfig {
    fn default() -> Self {
        InterpolationConfig {
            max_degree: 4,
            oversample: 3,
            attempts: 3,
        }
    }
}

/// Recovers the defining polynomial from sampled area vectors alone: the
/// lowest degree at which monomial evaluations have a one-dimensional kernel.
pub fn interpolation_oracle<R: Rng + ?Sized>(
    t: &CombinatorialTriangulation,
    mode: DrawingMode,
    rng: &mut R,
) -> Result<IntegerPolynomial, VarietyError> {
    interpolation_oracle_with(t, mode, rng, &InterpolationConfig::default())
}

pub fn interpolation_oracle_with<R: Rng + ?Sized>(
    t: &CombinatorialTriangulation,
    mode: DrawingMode,
    rng: &mut R,
    config: &InterpolationConfig,
) -> Result<IntegerPolynomial, VarietyError> {
    ensure_valid(t)?;
    let ring = match mode {
        DrawingMode::Trapezoid => zt_ring(t),
        DrawingMode::Parallelogram => pt_ring(t),
    };
    for d in 1..=config.max_degree {
        let monomials = monomials_of_degree(ring.len(), d);
        let mut dimension = 0;
        for _ in 0..config.attempts {
            let rows: Vec<Vec<Rational>> = (0..config.oversample * monomials.len())
                .map(|_| {
                    let drawing = random_drawing(t, mode, rng);
                    let av = evaluate_area_vector(t, &drawing).expect("drawing matches triangulation");
                    let point = match mode {
                        DrawingMode::Trapezoid => av.as_point(),
                        DrawingMode::Parallelogram => av.b,
                    };
                    monomials.iter().map(|m| eval_monomial(m, &point)).collect()
                })
                .collect();
            let kernel = nullspace(&rows, monomials.len());
            dimension = kernel.len();
            match dimension {
                0 => break,
                1 => {
                    let p = Polynomial::from_terms(&ring, monomials.iter().cloned().zip(kernel[0].iter().cloned()));
                    return IntegerPolynomial::from_polynomial(&p);
                }
                _ => continue,
            }
        }
        if dimension > 1 {
            return Err(VarietyError::Degenerate { degree: d, dimension });
        }
    }
    Err(VarietyError::DegreeCap { cap: config.max_degree })
}

/// Value of `p` at an area vector: `(U, B1, ..., Bn)` when `p` has a `U`
/// variable, `(B1, ..., Bn)` otherwise.
pub fn evaluate_at_areas(p: &IntegerPolynomial, av: &AreaVector) -> Result<Rational, VarietyError> {
    let point = if p.ring().index_of("U").is_some() {
        av.as_point()
    } else {
        av.b.clone()
    };
    Ok(p.polynomial().evaluate(&point)?)
}

/// `z(-S/2, B1, ..., Bn)`: on parallelogram drawings `-2U = S`.
pub fn evaluate_parallelogram_slot(z: &IntegerPolynomial, av: &AreaVector) -> Result<Rational, VarietyError> {
    let mut point = av.as_point();
    point[0] = -(av.sum_b() * Rational::new(1, 2).expect("nonzero"));
    Ok(z.polynomial().evaluate(&point)?)
}

/// The monic equation in `u` with coefficients evaluated at the true
/// (undoubled) triangle areas `a_i = B_i / 2`.
///
/// Since `z` is homogeneous of degree `d`, `z(u, a) = 2^-d z(2u, 2a)`, so the
/// true area `u = U / 2` of `(p, s, q)` is a root.
pub fn integral_equation(z: &IntegerPolynomial, av: &AreaVector) -> Result<Polynomial, VarietyError> {
    let target = Ring::new(["u"]).expect("one name");
    let half = Rational::new(1, 2).expect("nonzero");
    let slots = triangle_slots(z);
    if slots.len() != av.b.len() {
        return Err(PolyError::ArityMismatch {
            expected: slots.len(),
            found: av.b.len(),
        }
        .into());
    }
    let images: Vec<Polynomial> = z
        .ring()
        .names()
        .iter()
        .map(|n| {
            if n == "U" {
                Polynomial::var(&target, 0)
            } else {
                let k = slots.iter().position(|s| s == n).expect("slot");
                Polynomial::constant(&target, &av.b[k] * &half)
            }
        })
        .collect();
    Ok(z.polynomial().compose(&target, &images)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::areamap::{random_framed_drawing, seeded_rng};
    use crate::complex::center_fan;
    use alloc::vec;

    const PRINTED_ZT1: &str = "U^2 + 2*U*B1 + U*B2 + U*B4 + B1^2 + B1*B2 + B1*B3 + B1*B4";

    #[test]
    fn zt_of_t0_and_t1() {
        assert_eq!(compute_zt(&diagonal_family(0)).unwrap().to_string(), "U + B1");
        let z1 = compute_zt(&diagonal_family(1)).unwrap();
        assert_eq!(z1.to_string(), PRINTED_ZT1);
        assert_eq!(z1.degree(), 2);
    }

    #[test]
    fn oracle_matches_elimination() {
        for n in 0..2 {
            let o = diagonal_zt_oracle(n);
            assert_eq!(o.degree() as usize, n + 1);
            assert_eq!(o, compute_zt(&diagonal_family(n)).unwrap());
        }
        assert_eq!(diagonal_zt_oracle(1).to_string(), PRINTED_ZT1);
        assert!(check_monic_zt(&diagonal_zt_oracle(3)).passes);
    }

    #[test]
    fn pt_examples() {
        assert_eq!(compute_pt(&diagonal_family(0)).unwrap().to_string(), "B1 - B2");
        assert_eq!(
            compute_pt(&diagonal_family(1)).unwrap().to_string(),
            "B1 - B2 + B3 - B4"
        );
        assert_eq!(compute_pt(&center_fan()).unwrap().to_string(), "B1 - B2 + B3 - B4");
    }

    fn parse(ring: &Ring, terms: &[(i64, &[u32])]) -> IntegerPolynomial {
        let p = Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exponents(e.to_vec()), Rational::from(*c))),
        );
        IntegerPolynomial::from_polynomial(&p).unwrap()
    }

    #[test]
    fn monicity_checks() {
        let r = Ring::new(["U", "B1"]).unwrap();
        let good = parse(&r, &[(1, &[1, 0]), (1, &[0, 1])]);
        let rep = check_monic_zt(&good);
        assert_eq!(
            (rep.degree, rep.coefficient.clone(), rep.passes),
            (1, Rational::one(), true)
        );
        let bad = parse(&r, &[(2, &[2, 0]), (1, &[0, 2])]);
        assert!(!check_monic_zt(&bad).passes);

        let p = Ring::new(["B1", "B2"]).unwrap();
        assert!(check_monic_all(&parse(&p, &[(1, &[1, 0]), (-1, &[0, 1])])).passes);
        let mixed = check_monic_all(&parse(&p, &[(1, &[1, 1])]));
        assert!(!mixed.passes);
        assert!(mixed.leading.iter().all(|(_, c)| c.is_zero()));
    }

    #[test]
    fn proposition_exponents_t1() {
        let z = compute_zt(&diagonal_family(1)).unwrap();
        let got: Vec<(u32, u32)> = (0..4).map(|i| check_proposition(&z, i).unwrap()).collect();
        assert_eq!(got, vec![(0, 2), (1, 1), (2, 0), (1, 1)]);
        assert_eq!(check_proposition(&diagonal_zt_oracle(0), 0).unwrap(), (0, 1));
    }

    #[test]
    fn proposition_rejects_other_shapes() {
        let r = Ring::new(["U", "B1"]).unwrap();
        // U^2 + 3 U B1 + B1^2 restricts to itself
        let z = parse(&r, &[(1, &[2, 0]), (3, &[1, 1]), (1, &[0, 2])]);
        assert!(matches!(
            check_proposition(&z, 0),
            Err(VarietyError::Proposition { .. })
        ));
        assert!(check_proposition(&z, 5).is_err());
    }

    #[test]
    fn divisibility_quotients() {
        let t0 = diagonal_family(0);
        let q0 = check_divisibility(&compute_zt(&t0).unwrap(), &compute_pt(&t0).unwrap()).unwrap();
        assert_eq!(q0.to_string(), "1");
        let t1 = diagonal_family(1);
        let q1 = check_divisibility(&compute_zt(&t1).unwrap(), &compute_pt(&t1).unwrap()).unwrap();
        assert_eq!(q1.to_string(), "B1 + B2 + B3 + B4");
        let r = Ring::new(["B1", "B2"]).unwrap();
        let unrelated = parse(&r, &[(1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(
            check_divisibility(&compute_zt(&t0).unwrap(), &unrelated),
            Err(VarietyError::NotDivisible)
        );
    }

    #[test]
    fn independence() {
        assert!(check_independence(&diagonal_family(0)).unwrap());
        assert!(check_independence(&center_fan()).unwrap());
    }

    #[test]
    fn interpolation_examples() {
        let mut rng = seeded_rng(7);
        let z0 = interpolation_oracle(&diagonal_family(0), DrawingMode::Trapezoid, &mut rng).unwrap();
        assert_eq!(z0.to_string(), "U + B1");
        let z1 = interpolation_oracle(&diagonal_family(1), DrawingMode::Trapezoid, &mut rng).unwrap();
        assert_eq!(z1.to_string(), PRINTED_ZT1);
        let p = interpolation_oracle(&center_fan(), DrawingMode::Parallelogram, &mut rng).unwrap();
        assert_eq!(p.to_string(), "B1 - B2 + B3 - B4");
    }

    #[test]
    fn interpolation_degree_cap() {
        let mut rng = seeded_rng(1);
        let cfg = InterpolationConfig {
            max_degree: 1,
            ..Default::default()
        };
        let err = interpolation_oracle_with(&diagonal_family(1), DrawingMode::Trapezoid, &mut rng, &cfg);
        assert_eq!(err, Err(VarietyError::DegreeCap { cap: 1 }));
    }

    #[test]
    fn vanishing_and_integral_equation() {
        let t = diagonal_family(1);
        let z = compute_zt(&t).unwrap();
        let p = compute_pt(&t).unwrap();
        let mut rng = seeded_rng(3);
        for _ in 0..20 {
            let d = random_framed_drawing(&t, DrawingMode::Trapezoid, &mut rng);
            let av = evaluate_area_vector(&t, &d).unwrap();
            assert!(evaluate_at_areas(&z, &av).unwrap().is_zero());
            let eq = integral_equation(&z, &av).unwrap();
            assert_eq!(eq.degree_in(0), 2);
            assert!(eq.coefficient(&Monomial::from_exponents(vec![2])).is_one());
            let u = &av.u * &Rational::new(1, 2).unwrap();
            assert!(eq.evaluate(&[u]).unwrap().is_zero());

            let d = random_drawing(&t, DrawingMode::Parallelogram, &mut rng);
            let av = evaluate_area_vector(&t, &d).unwrap();
            assert!(evaluate_at_areas(&p, &av).unwrap().is_zero());
            assert!(evaluate_parallelogram_slot(&z, &av).unwrap().is_zero());
        }
    }

    #[test]
    fn invalid_input_is_rejected() {
        let t =
            CombinatorialTriangulation::new(&["p", "q", "r", "s"], ["p", "q", "r", "s"], &[["p", "q", "r"]]).unwrap();
        assert!(matches!(compute_zt(&t), Err(VarietyError::Invalid(_))));
    }

    #[test]
    fn guard_is_reported() {
        let cfg = GroebnerConfig {
            max_basis: 1,
            max_coeff_bits: 100_000,
        };
        let err = compute_zt_with(&diagonal_family(1), &cfg).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(5, 2).len(), 15);
        assert!(monomials_of_degree(3, 2).iter().all(|m| m.degree() == 2));
    }
}
