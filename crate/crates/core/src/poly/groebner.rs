//! Buchberger's algorithm with Gebauer–Möller pair pruning and the sugar
//! selection strategy.
//!
//! Internally polynomials carry integer coefficients and are kept primitive;
//! the reduced basis is handed back monic over Q.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, PolyError, Polynomial, Ring};
use crate::exact::Rational;

/// Limits that abort runaway computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of polynomials ever added to the basis.
    pub max_basis: usize,
    /// Maximum bit length of any integer coefficient.
    pub max_coeff_bits: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_basis: 20_000,
            max_coeff_bits: 100_000,
        }
    }
}

#[derive(Clone)]
struct IPoly {
    /// Sorted descending in the working order; never empty once inserted.
    terms: Vec<(Monomial, BigInt)>,
    sugar: u32,
}

impl IPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> IPoly {
        let mut lcm_den = BigInt::one();
        for (_, c) in p.terms() {
            lcm_den = lcm_den.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .map(|(m, c)| (m.clone(), c.numer() * (&lcm_den / c.denom())))
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let sugar = p.total_degree().unwrap_or(0);
        let mut out = IPoly { terms, sugar };
        out.make_primitive();
        out
    }

    fn to_monic(&self, ring: &Ring) -> Polynomial {
        let lc = Rational::from_integer(self.terms[0].1.clone());
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| {
                (
                    m.clone(),
                    Rational::from_integer(c.clone()).checked_div(&lc).expect("nonzero lc"),
                )
            }),
        )
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_primitive(&mut self) {
        primitive_in_place(&mut self.terms, &mut []);
    }

    fn max_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }
}

/// Divides both term lists by the gcd of all their coefficients and makes the
/// first coefficient of `a` (or of `b` when `a` is empty) positive.
fn primitive_in_place(a: &mut [(Monomial, BigInt)], b: &mut [(Monomial, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in a.iter().chain(b.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_neg = a
        .first()
        .or(b.first())
        .map(|t| t.1.sign() == Sign::Minus)
        .unwrap_or(false);
    if lead_neg {
        g = -g;
    }
    if g.is_one() {
        return;
    }
    for (_, c) in a.iter_mut().chain(b.iter_mut()) {
        *c /= &g;
    }
}

/// `a * f - b * shift * g`, both inputs sorted descending.
fn combine(
    f: &[(Monomial, BigInt)],
    a: &BigInt,
    g: &[(Monomial, BigInt)],
    b: &BigInt,
    shift: &Monomial,
    order: &MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let a_one = a.is_one();
    let mut i = 0;
    let mut gi = g.iter().map(|(m, c)| (m.mul(shift), c)).peekable();
    while i < f.len() || gi.peek().is_some() {
        let take = match (f.get(i), gi.peek()) {
            (Some(ft), Some(gt)) => order.cmp(&ft.0, &gt.0),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match take {
            Ordering::Greater => {
                let (m, c) = &f[i];
                out.push((m.clone(), if a_one { c.clone() } else { c * a }));
                i += 1;
            }
            Ordering::Less => {
                let (m, c) = gi.next().expect("peeked");
                out.push((m, -(c * b)));
            }
            Ordering::Equal => {
                let (m, c) = gi.next().expect("peeked");
                let fc = &f[i].1;
                let v = if a_one { fc - c * b } else { fc * a - c * b };
                if !v.is_zero() {
                    out.push((m, v));
                }
                i += 1;
            }
        }
    }
    out
}

/// Full normal form of `f` with respect to `basis`, up to a nonzero
/// constant factor.
fn reduce(f: &IPoly, basis: &[&IPoly], order: &MonomialOrder) -> IPoly {
    let mut cur = f.terms.clone();
    let mut start = 0usize;
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut steps = 0u32;
    while start < cur.len() {
        let (m, c) = &cur[start];
        let reducer = basis.iter().find(|g| g.lm().divides(m));
        match reducer {
            Some(g) => {
                let shift = m.checked_div(g.lm()).expect("divisible");
                let lcg = &g.terms[0].1;
                let d = c.gcd(lcg);
                let a = lcg / &d;
                let b = c / &d;
                cur = combine(&cur[start + 1..], &a, &g.terms[1..], &b, &shift, order);
                start = 0;
                if !a.is_one() {
                    for t in rem.iter_mut() {
                        t.1 *= &a;
                    }
                }
                steps += 1;
                if steps.is_multiple_of(16) {
                    primitive_in_place(&mut rem, &mut cur);
                }
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    let mut out = IPoly {
        terms: rem,
        sugar: f.sugar,
    };
    out.make_primitive();
    out
}

fn s_poly(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> IPoly {
    let lcm = f.lm().lcm(g.lm());
    let sf = lcm.checked_div(f.lm()).expect("lcm");
    let sg = lcm.checked_div(g.lm()).expect("lcm");
    let (cf, cg) = (&f.terms[0].1, &g.terms[0].1);
    let d = cf.gcd(cg);
    let a = cg / &d;
    let b = cf / &d;
    // a * sf * f - b * sg * g, leading terms cancel
    let f_shift: Vec<(Monomial, BigInt)> = f.terms[1..].iter().map(|(m, c)| (m.mul(&sf), c.clone())).collect();
    let terms = combine(&f_shift, &a, &g.terms[1..], &b, &sg, order);
    let sugar = (f.sugar + sf.degree()).max(g.sugar + sg.degree());
    let mut out = IPoly { terms, sugar };
    out.make_primitive();
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a> {
    order: &'a MonomialOrder,
    config: &'a GroebnerConfig,
    polys: Vec<IPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine<'_> {
    fn active_basis(&self) -> Vec<&IPoly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    fn check_guard(&self, p: &IPoly) -> Result<(), PolyError> {
        if self.polys.len() >= self.config.max_basis {
            return Err(PolyError::Guard {
                what: "basis size",
                limit: self.config.max_basis as u64,
            });
        }
        if p.max_bits() > self.config.max_coeff_bits {
            return Err(PolyError::Guard {
                what: "coefficient bits",
                limit: self.config.max_coeff_bits,
            });
        }
        Ok(())
    }

    /// Gebauer–Möller update for a new basis element `h`.
    fn insert(&mut self, h: IPoly) -> Result<(), PolyError> {
        self.check_guard(&h)?;
        let hi = self.polys.len();
        let lh = h.lm().clone();
        let sugar_h = h.sugar;
        self.polys.push(h);
        self.active.push(false);

        let mut cands: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, lh.lcm(self.polys[g].lm())))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while !cands.is_empty() {
            let (g1, l1) = cands.remove(0);
            let coprime = lh.is_coprime(self.polys[g1].lm());
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lh.is_coprime(self.polys[*g].lm()))
            .map(|(g, lcm)| {
                let pg = &self.polys[g];
                let sugar = (sugar_h + lcm.degree() - lh.degree()).max(pg.sugar + lcm.degree() - pg.lm().degree());
                Pair {
                    i: g,
                    j: hi,
                    lcm,
                    sugar,
                }
            })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lm().lcm(&lh);
            let lj = polys[p.j].lm().lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && lh.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
        Ok(())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self, gens: &[Polynomial]) -> Result<(), PolyError> {
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let ip = IPoly::from_poly(g, self.order);
            let h = reduce(&ip, &self.active_basis(), self.order);
            if !h.is_zero() {
                self.insert(h)?;
            }
        }
        while let Some(pair) = self.next_pair() {
            let mut s = s_poly(&self.polys[pair.i], &self.polys[pair.j], self.order);
            if s.is_zero() {
                continue;
            }
            s.sugar = pair.sugar;
            let h = reduce(&s, &self.active_basis(), self.order);
            if !h.is_zero() {
                self.insert(h)?;
            }
        }
        Ok(())
    }

    fn reduced_basis(&self) -> Vec<IPoly> {
        let order = self.order;
        let mut g: Vec<IPoly> = self.active_basis().into_iter().cloned().collect();
        g.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        // minimal basis; equal leading monomials keep the first
        let mut minimal: Vec<IPoly> = Vec::new();
        for (k, p) in g.iter().enumerate() {
            let redundant = g
                .iter()
                .enumerate()
                .any(|(l, q)| l != k && q.lm().divides(p.lm()) && (q.lm() != p.lm() || l < k));
            if !redundant {
                minimal.push(p.clone());
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<&IPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, q)| q)
                .collect();
            out.push(reduce(&minimal[k], &others, order));
        }
        out
    }
}

fn common_ring(gens: &[Polynomial]) -> Result<Ring, PolyError> {
    let first = gens.first().ok_or(PolyError::ZeroPolynomial)?;
    if gens.iter().any(|g| g.ring() != first.ring()) {
        return Err(PolyError::RingMismatch);
    }
    Ok(first.ring().clone())
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic over Q and
/// sorted ascending by leading monomial. The zero ideal yields an empty list.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>, PolyError> {
    buchberger_with(gens, order, &GroebnerConfig::default())
}

pub fn buchberger_with(
    gens: &[Polynomial],
    order: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<Vec<Polynomial>, PolyError> {
    let ring = common_ring(gens)?;
    let mut engine = Engine {
        order,
        config,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    engine.run(gens)?;
    Ok(engine.reduced_basis().iter().map(|p| p.to_monic(&ring)).collect())
}

/// Generators of the elimination ideal `(gens) ∩ Q[kept variables]`, read off
/// a block-order basis. The result stays in the input ring.
pub fn eliminate(gens: &[Polynomial], elim_vars: &[&str]) -> Result<Vec<Polynomial>, PolyError> {
    eliminate_with(gens, elim_vars, &GroebnerConfig::default())
}

pub fn eliminate_with(
    gens: &[Polynomial],
    elim_vars: &[&str],
    config: &GroebnerConfig,
) -> Result<Vec<Polynomial>, PolyError> {
    let ring = common_ring(gens)?;
    let mut idx = Vec::with_capacity(elim_vars.len());
    for v in elim_vars {
        idx.push(
            ring.index_of(v)
                .ok_or_else(|| PolyError::UnknownVariable(String::from(*v)))?,
        );
    }
    let order = MonomialOrder::elimination(ring.len(), &idx);
    let basis = buchberger_with(gens, &order, config)?;
    Ok(basis
        .into_iter()
        .filter(|p| idx.iter().all(|&i| !p.uses_variable(i)))
        .collect())
}

/// The single generator of a principal ideal given by its reduced basis.
pub fn principal_generator(basis: &[Polynomial]) -> Result<Polynomial, PolyError> {
    match basis {
        [p] => Ok(p.clone()),
        [] => Err(PolyError::NotPrincipal {
            size: 0,
            diagnostic: String::from("zero ideal"),
        }),
        _ => Err(PolyError::NotPrincipal {
            size: basis.len(),
            diagnostic: format!("reduced basis has {} elements", basis.len()),
        }),
    }
}

/// S-polynomial of `f` and `g` (up to a nonzero constant).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial, PolyError> {
    if f.ring() != g.ring() {
        return Err(PolyError::RingMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let s = s_poly(&IPoly::from_poly(f, order), &IPoly::from_poly(g, order), order);
    Ok(ipoly_to_poly(&s, f.ring()))
}

/// Normal form of `f` modulo `basis` (up to a nonzero constant).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial, PolyError> {
    if basis.iter().any(|b| b.ring() != f.ring()) {
        return Err(PolyError::RingMismatch);
    }
    let ib: Vec<IPoly> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| IPoly::from_poly(b, order))
        .collect();
    let refs: Vec<&IPoly> = ib.iter().collect();
    let r = reduce(&IPoly::from_poly(f, order), &refs, order);
    Ok(ipoly_to_poly(&r, f.ring()))
}

fn ipoly_to_poly(p: &IPoly, ring: &Ring) -> Polynomial {
    Polynomial::from_terms(
        ring,
        p.terms
            .iter()
            .map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()))),
    )
}
