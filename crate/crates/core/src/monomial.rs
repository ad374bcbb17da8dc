//! Monomials and monomial ideals in a polynomial ring with a fixed number of
//! variables.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set, sorted
//! lexicographically by exponent vector, so two ideals are equal exactly when
//! their generator lists are equal. The unit ideal is deliberately not
//! representable: any operation whose result would be the whole ring returns
//! [`Error::UnitIdeal`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::ZeroArity);
        }
        Ok(Monomial { exps })
    }

    /// The unit monomial `1`.
    pub fn one(arity: usize) -> Self {
        assert!(arity > 0, "ring arity must be positive");
        Monomial {
            exps: vec![0; arity],
        }
    }

    /// The variable `x_{index+1}` (indices are 0-based).
    pub fn variable(arity: usize, index: usize) -> Self {
        let mut m = Monomial::one(arity);
        m.exps[index] = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bit `i` is set when `x_{i+1}` occurs in the monomial. Requires arity <= 64.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.arity() <= 64);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(())
    }

    /// `self | other`. Arities must agree (checked in debug builds).
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        })
    }

    /// `self / gcd(self, f)`, the generator of `(self) : f`.
    pub fn colon(&self, f: &Monomial) -> Result<Monomial> {
        self.check_arity(f)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&f.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        })
    }

    /// Relabels variables: variable `i` of `self` becomes variable `map[i]` of
    /// a ring with `arity` variables.
    pub fn embed(&self, arity: usize, map: &[usize]) -> Monomial {
        assert_eq!(map.len(), self.arity());
        let mut exps = vec![0; arity];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial { exps }
    }
}

impl TryFrom<Vec<u32>> for Monomial {
    type Error = Error;

    fn try_from(exps: Vec<u32>) -> Result<Self> {
        Monomial::new(exps)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exps
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial ideal given by its minimal generators in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<Monomial>,
}

/// Wire form: `{"arity": n, "generators": [[e1, ..., en], ...]}`.
#[derive(Serialize, Deserialize)]
struct IdealRepr {
    arity: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;

    fn try_from(repr: IdealRepr) -> Result<Self> {
        let gens = repr
            .generators
            .into_iter()
            .map(Monomial::new)
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(repr.arity, gens)
    }
}

impl From<MonomialIdeal> for IdealRepr {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealRepr {
            arity: ideal.arity,
            generators: ideal.gens.into_iter().map(Vec::from).collect(),
        }
    }
}

impl MonomialIdeal {
    pub fn zero(arity: usize) -> Self {
        assert!(arity > 0, "ring arity must be positive");
        MonomialIdeal {
            arity,
            gens: Vec::new(),
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(arity: usize) -> Self {
        Self::variables(arity, 0..arity)
    }

    /// The ideal generated by the given variables (0-based indices).
    pub fn variables(arity: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let gens = indices
            .into_iter()
            .map(|i| Monomial::variable(arity, i))
            .collect();
        MonomialIdeal::minimalize(arity, gens).expect("variables generate a proper ideal")
    }

    pub fn principal(m: Monomial) -> Result<Self> {
        MonomialIdeal::minimalize(m.arity(), vec![m])
    }

    /// Reduces `gens` to its divisibility-minimal subset in canonical order.
    pub fn minimalize(arity: usize, mut gens: Vec<Monomial>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        if let Some(bad) = gens.iter().find(|g| g.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: bad.arity(),
            });
        }
        if gens.iter().any(Monomial::is_one) {
            return Err(Error::UnitIdeal);
        }
        // A divisor never has larger degree, so scanning by degree means only
        // already-kept generators can divide the current candidate.
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort();
        Ok(MonomialIdeal { arity, gens: kept })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_arity(&self, found: usize) -> Result<()> {
        if self.arity != found {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_arity(m.arity())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_arity(other.arity)?;
        Ok(self.gens.iter().all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_arity(other.arity)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.arity)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal::minimalize(self.arity, gens)
    }

    /// `self + (x_i : i in indices)` with 0-based indices.
    pub fn with_variables(&self, indices: impl IntoIterator<Item = usize>) -> MonomialIdeal {
        self.sum(&MonomialIdeal::variables(self.arity, indices))
            .expect("same arity")
    }

    /// `self + (m)`.
    pub fn with_generator(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_arity(m.arity())?;
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        MonomialIdeal::minimalize(self.arity, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.arity)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        MonomialIdeal::minimalize(self.arity, gens)
    }

    /// `self^t` by repeated multiplication, minimalizing after every step.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(self : f)`, generated by `g / gcd(g, f)` over the generators `g`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_arity(f.arity())?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.colon(f))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(self.arity, gens)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.arity)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b)?);
            }
        }
        MonomialIdeal::minimalize(self.arity, gens)
    }

    /// `(self : other)`, the intersection of `(self : g)` over generators `g`
    /// of `other`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.arity)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            // (self : g) is the whole ring when g is in self; it does not
            // shrink the intersection.
            if self.contains(g)? {
                continue;
            }
            let part = self.colon_monomial(g)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersection(&part)?,
            });
        }
        acc.ok_or(Error::UnitIdeal)
    }

    /// Relabels variables into a ring with `arity` variables; see
    /// [`Monomial::embed`].
    pub fn embed(&self, arity: usize, map: &[usize]) -> Result<MonomialIdeal> {
        self.check_arity(map.len())?;
        let gens = self.gens.iter().map(|g| g.embed(arity, map)).collect();
        MonomialIdeal::minimalize(arity, gens)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn exponent_bound(&self) -> Vec<u32> {
        let mut bound = vec![0; self.arity];
        for g in &self.gens {
            for (b, &e) in bound.iter_mut().zip(g.exponents()) {
                *b = (*b).max(e);
            }
        }
        bound
    }

    /// Union of the generators' supports as a bit mask.
    pub fn support_mask(&self) -> u64 {
        self.gens.iter().fold(0, |acc, g| acc | g.support_mask())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[n={}]{}", self.arity, self)
    }
}

/// Shorthand for building a monomial from an exponent slice.
pub fn mono(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec()).expect("nonempty exponent vector")
}

/// Shorthand for building an ideal from exponent slices; panics on invalid
/// input, so it is meant for literals.
pub fn ideal(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(arity, gens.iter().map(|e| mono(e)).collect())
        .expect("valid ideal literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(2, &[&[1, 1], &[2, 1]]);
        assert_eq!(i.generators(), &[mono(&[1, 1])]);
    }

    #[test]
    fn minimalize_empty_is_zero() {
        let i = MonomialIdeal::minimalize(3, vec![]).unwrap();
        assert!(i.is_zero());
        assert_eq!(i, MonomialIdeal::zero(3));
    }

    #[test]
    fn minimalize_keeps_pairwise_products_of_triangle() {
        let t = triangle();
        let mut prods = Vec::new();
        for (i, a) in t.generators().iter().enumerate() {
            for b in &t.generators()[i..] {
                prods.push(a.mul(b).unwrap());
            }
        }
        assert_eq!(prods.len(), 6);
        // brute-force: no product divides a different one
        for a in &prods {
            for b in &prods {
                if a != b {
                    assert!(!a.divides(b));
                }
            }
        }
        let m = MonomialIdeal::minimalize(3, prods).unwrap();
        assert_eq!(m.num_generators(), 6);
    }

    #[test]
    fn minimalize_rejects_mixed_arity() {
        let err = MonomialIdeal::minimalize(2, vec![mono(&[1, 0]), mono(&[1, 0, 0])]);
        assert_eq!(
            err,
            Err(Error::ArityMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn unit_generator_is_rejected() {
        assert_eq!(
            MonomialIdeal::minimalize(2, vec![Monomial::one(2)]),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, &[&[1, 1, 0]]);
        assert!(i.contains(&mono(&[1, 1, 1])).unwrap());
        assert!(!MonomialIdeal::zero(3).contains(&mono(&[5, 5, 5])).unwrap());
        assert!(i.contains(&mono(&[1, 1])).is_err());
    }

    #[test]
    fn triangle_square_contains_x1x2sq_x3() {
        let sq = triangle().power(2).unwrap();
        assert!(sq.contains(&mono(&[1, 2, 1])).unwrap());
        // (x1x2)(x2x3) = x1 x2^2 x3, matches a brute-force expansion
        let t = triangle();
        let found = t.generators().iter().any(|a| {
            t.generators()
                .iter()
                .any(|b| a.mul(b).unwrap().divides(&mono(&[1, 2, 1])))
        });
        assert!(found);
    }

    #[test]
    fn power_examples() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.power(2).unwrap(), ideal(2, &[&[2, 2]]));
        assert_eq!(triangle().power(2).unwrap().num_generators(), 6);
        assert_eq!(triangle().power(1).unwrap(), triangle());
        assert_eq!(triangle().power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let t = triangle();
        assert_eq!(t.sum(&MonomialIdeal::zero(3)).unwrap(), t);
        assert!(t.equals(&t.sum(&MonomialIdeal::zero(3)).unwrap()).unwrap());
    }

    #[test]
    fn colon_examples() {
        // weighted triangle w = (2, 1, 1): (x1^2 x2^2, x2 x3, x1 x3)
        let i = ideal(3, &[&[2, 2, 0], &[0, 1, 1], &[1, 0, 1]]);
        let c = i.colon_monomial(&Monomial::variable(3, 2)).unwrap();
        assert_eq!(c, MonomialIdeal::variables(3, [0, 1]));
        assert_eq!(i.colon_monomial(&Monomial::one(3)).unwrap(), i);
    }

    #[test]
    fn colon_into_unit_is_error() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.colon_monomial(&mono(&[1, 2])), Err(Error::UnitIdeal));
        assert_eq!(i.colon_ideal(&i), Err(Error::UnitIdeal));
    }

    #[test]
    fn colon_by_zero_rejected() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.colon_ideal(&MonomialIdeal::zero(2)), Err(Error::ColonByZero));
    }

    #[test]
    fn intersection_of_variables() {
        let a = MonomialIdeal::variables(2, [0]);
        let b = MonomialIdeal::variables(2, [1]);
        assert_eq!(a.intersection(&b).unwrap(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn intersection_with_larger_ideal() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 1]]);
        let j = ideal(3, &[&[2, 1, 0]]);
        assert!(j.is_subset_of(&i).unwrap());
        assert_eq!(i.intersection(&i.sum(&j).unwrap()).unwrap(), i);
    }

    #[test]
    fn json_roundtrip_and_schema() {
        let i = ideal(3, &[&[0, 1, 1], &[1, 1, 0]]);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"arity":3,"generators":[[0,1,1],[1,1,0]]}"#);
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, i);
        // unsorted, redundant input is canonicalized on load
        let messy: MonomialIdeal =
            serde_json::from_str(r#"{"arity":2,"generators":[[2,1],[1,1]]}"#).unwrap();
        assert_eq!(messy, ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn overflow_is_reported() {
        let big = mono(&[u32::MAX, 0]);
        assert_eq!(big.mul(&mono(&[1, 0])), Err(Error::ExponentOverflow));
    }

    #[test]
    fn display_forms() {
        assert_eq!(mono(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(2).to_string(), "1");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "(0)");
    }
}
