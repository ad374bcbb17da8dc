//! Integral closure of monomial ideals through Newton polyhedron membership.
//!
//! A monomial `x^a` lies in the integral closure of `I` iff `a` dominates a
//! convex combination of generator exponents. Feasibility of that system is
//! decided by a phase-one simplex over exact rationals with Bland's rule, so
//! no floating point is involved and cycling cannot occur.
//!
//! The closure is generated inside the box `a <= m`, `m` the componentwise
//! max of generator exponents: if `a` is in the polyhedron then so is
//! `min(a, m)`, because every convex combination of generators is already
//! bounded by `m`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Exact rational vector; entries are always in lowest terms with positive
/// denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector {
    entries: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        RationalVector { entries }
    }

    pub fn zeros(arity: usize) -> Self {
        RationalVector {
            entries: vec![BigRational::zero(); arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn sum(&self) -> BigRational {
        self.entries.iter().fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// `sum_k self[k] * points[k]`, one coordinate per point entry.
    pub fn combine(&self, points: &[Monomial]) -> RationalVector {
        let arity = points.first().map_or(0, Monomial::arity);
        let mut out = vec![BigRational::zero(); arity];
        for (lambda, p) in self.entries.iter().zip(points) {
            for (o, &e) in out.iter_mut().zip(p.exponents()) {
                *o += lambda * BigRational::from_integer(BigInt::from(e));
            }
        }
        RationalVector::new(out)
    }
}

fn rat(v: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Convex weights `lambda` over the generators of `I` with
/// `sum lambda_g * exp(g) <= exp(a)`, if any exist.
pub fn newton_certificate(i: &MonomialIdeal, a: &Monomial) -> Result<Option<RationalVector>> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if a.arity() != i.arity() {
        return Err(Error::ArityMismatch {
            expected: i.arity(),
            found: a.arity(),
        });
    }
    let gens = i.generators();
    if let Some(k) = gens.iter().position(|g| g.divides(a)) {
        let mut lambda = RationalVector::zeros(gens.len());
        lambda.entries[k] = BigRational::one();
        return Ok(Some(lambda));
    }
    Ok(phase_one(gens, a.exponents()))
}

pub fn newton_membership(i: &MonomialIdeal, a: &Monomial) -> Result<bool> {
    Ok(newton_certificate(i, a)?.is_some())
}

/// Phase-one simplex on
/// `sum_g lambda_g e_g + s = a`, `sum_g lambda_g + r = 1`, all variables
/// nonnegative, minimizing the artificial `r`.
fn phase_one(gens: &[Monomial], a: &[u32]) -> Option<RationalVector> {
    let n = a.len();
    let m = gens.len();
    // columns: lambda (m), slack (n), artificial (1), rhs
    let cols = m + n + 1;
    let rhs = cols;
    let art = m + n;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
    for (row, &ai) in a.iter().enumerate() {
        let mut r = vec![BigRational::zero(); cols + 1];
        for (k, g) in gens.iter().enumerate() {
            r[k] = rat(g.exponents()[row]);
        }
        r[m + row] = BigRational::one();
        r[rhs] = rat(ai);
        t.push(r);
    }
    let mut conv = vec![BigRational::zero(); cols + 1];
    for c in conv.iter_mut().take(m) {
        *c = BigRational::one();
    }
    conv[art] = BigRational::one();
    conv[rhs] = BigRational::one();
    t.push(conv);
    let mut basis: Vec<usize> = (m..m + n).chain(std::iter::once(art)).collect();

    // reduced costs for minimizing r: c_j - c_B B^-1 A_j; r is basic in the
    // last row, so the objective row is the negated last row off the basis.
    let mut obj: Vec<BigRational> = t[n].iter().map(|x| -x).collect();
    obj[art] = BigRational::zero();

    loop {
        let entering = (0..cols).find(|&j| obj[j].is_negative());
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for (row, r) in t.iter().enumerate() {
            if r[j].is_positive() {
                let ratio = &r[rhs] / &r[j];
                let better = match &leave {
                    None => true,
                    Some((best_row, best)) => {
                        ratio < *best || (ratio == *best && basis[row] < basis[*best_row])
                    }
                };
                if better {
                    leave = Some((row, ratio));
                }
            }
        }
        // The objective is bounded below by zero, so some row always blocks.
        let (p, _) = leave.expect("phase one is bounded");
        let pivot = t[p][j].clone();
        for x in t[p].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[p].clone();
        for (row, r) in t.iter_mut().enumerate() {
            if row != p && !r[j].is_zero() {
                let factor = r[j].clone();
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        if !obj[j].is_zero() {
            let factor = obj[j].clone();
            for (x, y) in obj.iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
        }
        basis[p] = j;
    }

    // objective value is -obj[rhs]; feasible iff the artificial reached zero
    if !obj[rhs].is_zero() {
        return None;
    }
    let mut lambda = RationalVector::zeros(m);
    for (row, &b) in basis.iter().enumerate() {
        if b < m {
            lambda.entries[b] = t[row][rhs].clone();
        }
    }
    Some(lambda)
}

/// Mixed-radix decoding of box points `0 <= a <= bound`.
fn box_point(bound: &[u32], mut index: u64) -> Vec<u32> {
    bound
        .iter()
        .map(|&b| {
            let radix = b as u64 + 1;
            let digit = (index % radix) as u32;
            index /= radix;
            digit
        })
        .collect()
}

fn box_size(bound: &[u32]) -> Result<u64> {
    bound.iter().try_fold(1u64, |acc, &b| {
        acc.checked_mul(b as u64 + 1).ok_or(Error::SizeLimit {
            what: "closure candidate box",
            cap: u64::MAX as usize,
        })
    })
}

pub fn integral_closure(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let bound = i.exponent_bound();
    let total = box_size(&bound)?;
    let extra: Vec<Monomial> = (0..total)
        .into_par_iter()
        .filter_map(|k| {
            let a = Monomial::new(box_point(&bound, k)).expect("arity >= 1");
            if i.generators().iter().any(|g| g.divides(&a)) {
                return None;
            }
            phase_one(i.generators(), a.exponents()).map(|_| a)
        })
        .collect();
    let mut gens = i.generators().to_vec();
    gens.extend(extra);
    MonomialIdeal::minimalize(i.arity(), gens)
}

/// Equivalent to `equals(I, integral_closure(I))`, but only tests the
/// maximal box points outside `I`: the polyhedron is closed upwards, so it
/// meets the box outside `I` iff it contains one of those.
pub fn is_integrally_closed_ideal(i: &MonomialIdeal) -> Result<bool> {
    Ok(closure_witness(i)?.is_none())
}

/// A monomial in the integral closure of `I` but not in `I`, if one exists.
pub fn closure_witness(i: &MonomialIdeal) -> Result<Option<Monomial>> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let bound = i.exponent_bound();
    let total = box_size(&bound)?;
    let in_ideal = |e: &[u32]| i.generators().iter().any(|g| {
        g.exponents().iter().zip(e).all(|(x, y)| x <= y)
    });
    let found = (0..total).into_par_iter().find_first(|&k| {
        let a = box_point(&bound, k);
        if in_ideal(&a) {
            return false;
        }
        let maximal = (0..a.len()).all(|v| {
            if a[v] == bound[v] {
                return true;
            }
            let mut up = a.clone();
            up[v] += 1;
            in_ideal(&up)
        });
        maximal && phase_one(i.generators(), &a).is_some()
    });
    Ok(found.map(|k| Monomial::new(box_point(&bound, k)).expect("arity >= 1")))
}
