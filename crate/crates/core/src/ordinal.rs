//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a finite list of [`Term`]s `ω^e·k` with strictly
//! decreasing exponents and positive coefficients; exponents are themselves
//! ordinals, so the representation is a finite tree. The empty list is 0.
//!
//! This module holds the classical (non-commutative) operations. The
//! Hessenberg operations live in [`crate::natural`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer used for coefficients and finite ordinals.
pub type Natural = BigUint;

/// A single monomial `ω^exponent · coefficient`.
///
/// Field order matters: the derived ordering compares exponents first, which
/// together with the derived ordering on `Vec` gives the CNF comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    exponent: Ordinal,
    coefficient: Natural,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> &Natural {
        &self.coefficient
    }
}

/// An ordinal below ε₀ in Cantor normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::finite(1u32)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    pub fn finite(n: impl Into<Natural>) -> Self {
        Ordinal::monomial(Ordinal::zero(), n.into())
    }

    /// `ω^e`.
    pub fn omega_pow(e: Ordinal) -> Self {
        Ordinal::monomial(e, Natural::one())
    }

    /// `ω^e · k`; returns 0 when `k` is 0.
    pub fn monomial(e: Ordinal, k: Natural) -> Self {
        if k.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent: e,
                coefficient: k,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, which must already
    /// be in Cantor normal form (strictly decreasing exponents, positive coefficients).
    pub fn from_terms(terms: Vec<(Ordinal, Natural)>) -> Result<Self> {
        for w in terms.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(Error::InvalidArgument(
                    "exponents must be strictly decreasing".into(),
                ));
            }
        }
        if terms.iter().any(|(_, k)| k.is_zero()) {
            return Err(Error::InvalidArgument(
                "coefficients must be positive".into(),
            ));
        }
        Ok(Ordinal::from_terms_unchecked(
            terms
                .into_iter()
                .map(|(exponent, coefficient)| Term {
                    exponent,
                    coefficient,
                })
                .collect(),
        ))
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].exponent > w[1].exponent));
        debug_assert!(terms.iter().all(|t| !t.coefficient.is_zero()));
        Ordinal { terms }
    }

    pub(crate) fn term(exponent: Ordinal, coefficient: Natural) -> Term {
        Term {
            exponent,
            coefficient,
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].exponent.is_zero()
            && self.terms[0].coefficient.is_one()
    }

    /// True for 0 and the positive integers.
    pub fn is_finite(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [t] => t.exponent.is_zero(),
            _ => false,
        }
    }

    pub fn to_finite(&self) -> Option<Natural> {
        match self.terms.as_slice() {
            [] => Some(Natural::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    /// True when the ordinal is `γ + 1` for some `γ`.
    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn predecessor(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().unwrap();
        last.coefficient -= 1u32;
        if last.coefficient.is_zero() {
            terms.pop();
        }
        Some(Ordinal { terms })
    }

    /// Largest exponent of the Cantor normal form.
    pub fn degree(&self) -> Result<&Ordinal> {
        self.terms
            .first()
            .map(|t| &t.exponent)
            .ok_or(Error::DegreeOfZero)
    }

    /// `ω^d(α)·r` for the leading term; `m(0) = 0`.
    pub fn leading_monomial(&self) -> Ordinal {
        Ordinal {
            terms: self.terms.first().cloned().into_iter().collect(),
        }
    }

    /// Coefficient of `ω^e` (0 if absent).
    pub fn coefficient_at(&self, e: &Ordinal) -> Natural {
        self.terms
            .iter()
            .find(|t| &t.exponent == e)
            .map(|t| t.coefficient.clone())
            .unwrap_or_default()
    }

    /// The terms with exponent strictly greater than `e`.
    pub fn part_above(&self, e: &Ordinal) -> Ordinal {
        Ordinal {
            terms: self
                .terms
                .iter()
                .take_while(|t| &t.exponent > e)
                .cloned()
                .collect(),
        }
    }

    /// For `r < self`, the unique `(e, q, rest)` with
    /// `r = self.part_above(e) + ω^e·q + rest`, where `ω^e` is a term of
    /// `self`, `q < self.coefficient_at(e)` and `rest < ω^e`.
    /// `None` when `r ≥ self`.
    pub fn locate(&self, r: &Ordinal) -> Option<(Ordinal, Natural, Ordinal)> {
        for (i, t) in self.terms.iter().enumerate() {
            match r.terms.get(i) {
                Some(s) if s == t => continue,
                Some(s) if s.exponent > t.exponent => return None,
                Some(s) if s.exponent == t.exponent => {
                    if s.coefficient > t.coefficient {
                        return None;
                    }
                    let rest = Ordinal {
                        terms: r.terms[i + 1..].to_vec(),
                    };
                    return Some((t.exponent.clone(), s.coefficient.clone(), rest));
                }
                _ => {
                    let rest = Ordinal {
                        terms: r.terms[i.min(r.terms.len())..].to_vec(),
                    };
                    return Some((t.exponent.clone(), Natural::zero(), rest));
                }
            }
        }
        None
    }

    /// Classical sum: terms of `self` below the degree of `rhs` are absorbed.
    pub fn ord_add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut carry = Natural::zero();
        for t in &self.terms {
            match t.exponent.cmp(&head.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => carry = t.coefficient.clone(),
                Ordering::Less => break,
            }
        }
        terms.push(Term {
            exponent: head.exponent.clone(),
            coefficient: carry + &head.coefficient,
        });
        terms.extend(rhs.terms[1..].iter().cloned());
        Ordinal { terms }
    }

    /// Classical product, distributing `self` over the terms of `rhs` from the left.
    pub fn ord_mul(&self, rhs: &Ordinal) -> Ordinal {
        if self.is_zero() || rhs.is_zero() {
            return Ordinal::zero();
        }
        let d = &self.terms[0].exponent;
        let mut acc = Ordinal::zero();
        for t in &rhs.terms {
            let piece = if t.exponent.is_zero() {
                self.mul_finite(&t.coefficient)
            } else {
                // α·ω^η = ω^(d(α)+η) for η > 0
                Ordinal::monomial(d.ord_add(&t.exponent), t.coefficient.clone())
            };
            acc = acc.ord_add(&piece);
        }
        acc
    }

    /// `self · n`: the leading term's coefficient is multiplied, the rest is kept.
    fn mul_finite(&self, n: &Natural) -> Ordinal {
        if n.is_zero() || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = self.terms.clone();
        terms[0].coefficient *= n;
        Ordinal { terms }
    }

    /// Left subtraction: the unique `z` with `prefix + z = self`, or `None` when `prefix > self`.
    pub fn left_sub(&self, prefix: &Ordinal) -> Option<Ordinal> {
        for (i, (p, s)) in prefix.terms.iter().zip(&self.terms).enumerate() {
            if p == s {
                continue;
            }
            return match p.exponent.cmp(&s.exponent) {
                Ordering::Less => Some(Ordinal {
                    terms: self.terms[i..].to_vec(),
                }),
                Ordering::Greater => None,
                Ordering::Equal if p.coefficient < s.coefficient => {
                    let mut terms = Vec::with_capacity(self.terms.len() - i);
                    terms.push(Term {
                        exponent: s.exponent.clone(),
                        coefficient: &s.coefficient - &p.coefficient,
                    });
                    terms.extend(self.terms[i + 1..].iter().cloned());
                    Some(Ordinal { terms })
                }
                Ordering::Equal => None,
            };
        }
        if prefix.terms.len() > self.terms.len() {
            return None;
        }
        Some(Ordinal {
            terms: self.terms[prefix.terms.len()..].to_vec(),
        })
    }

    /// Left division with remainder: `self = d·q + r` with `r < d`.
    pub fn ord_divmod(&self, d: &Ordinal) -> Result<(Ordinal, Ordinal)> {
        let Some(dh) = d.terms.first() else {
            return Err(Error::DivisionByZero);
        };
        if self < d {
            return Ok((Ordinal::zero(), self.clone()));
        }
        let dd = &dh.exponent;
        // Terms above d(d) come from the infinite part of the quotient:
        // d·ω^η·k = ω^(d(d)+η)·k.
        let mut q_terms = Vec::new();
        let mut split = 0;
        for t in &self.terms {
            if &t.exponent <= dd {
                break;
            }
            let eta = t.exponent.left_sub(dd).expect("exponent above degree");
            q_terms.push(Term {
                exponent: eta,
                coefficient: t.coefficient.clone(),
            });
            split += 1;
        }
        let low = Ordinal {
            terms: self.terms[split..].to_vec(),
        };
        let mut n = Natural::zero();
        if let Some(lh) = low.terms.first() {
            if &lh.exponent == dd {
                n = lh.coefficient.div_floor(&dh.coefficient);
                if d.mul_finite(&n) > low {
                    n -= 1u32;
                }
            }
        }
        let r = low
            .left_sub(&d.mul_finite(&n))
            .expect("d·n bounded by the low part");
        if !n.is_zero() {
            q_terms.push(Term {
                exponent: Ordinal::zero(),
                coefficient: n,
            });
        }
        Ok((Ordinal { terms: q_terms }, r))
    }

    /// Exponentiation restricted to base ω or to two finite operands.
    pub fn pow(&self, e: &Ordinal) -> Result<Ordinal> {
        if *self == Ordinal::omega() {
            return Ok(Ordinal::omega_pow(e.clone()));
        }
        match (self.to_finite(), e.to_finite()) {
            (Some(b), Some(x)) => {
                let x = x.to_u32().ok_or_else(|| {
                    Error::UnsupportedExponentiation(format!("exponent {x} is too large"))
                })?;
                Ok(Ordinal::finite(num_traits::pow::Pow::pow(b, x)))
            }
            _ => Err(Error::UnsupportedExponentiation(format!(
                "({self})^({e}): only base w or finite^finite is supported"
            ))),
        }
    }

    /// Largest coefficient appearing anywhere in the term tree, exponents included.
    pub fn max_coefficient(&self) -> Natural {
        self.terms
            .iter()
            .map(|t| std::cmp::max(t.coefficient.clone(), t.exponent.max_coefficient()))
            .max()
            .unwrap_or_default()
    }

    /// Nesting depth of the exponent tree; finite ordinals have height 0 or 1.
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.height())
            .max()
            .unwrap_or(0)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::finite(n)
    }
}

impl Add<&Ordinal> for &Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.ord_add(rhs)
    }
}

impl Mul<&Ordinal> for &Ordinal {
    type Output = Ordinal;
    fn mul(self, rhs: &Ordinal) -> Ordinal {
        self.ord_mul(rhs)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            if t.exponent.is_one() {
                f.write_str("w")?;
            } else {
                write!(f, "w^({})", t.exponent)?;
            }
            if !t.coefficient.is_one() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> Ordinal {
        Ordinal::from(k)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn wk(e: Ordinal, k: u64) -> Ordinal {
        Ordinal::monomial(e, k.into())
    }

    #[test]
    fn comparison() {
        assert_eq!(w().cmp(&w()), Ordering::Equal);
        assert!(&w() + &n(1) < wk(n(1), 2));
        let w2_5_3 = &wk(n(2), 5) + &n(3);
        assert!(Ordinal::omega_pow(w()) > w2_5_3);
        assert!(n(0) < n(1));
    }

    #[test]
    fn addition_absorbs_lower_terms() {
        let a = &Ordinal::omega_pow(n(2)) + &w();
        let b = &w() + &n(1);
        let expected = &(&Ordinal::omega_pow(n(2)) + &wk(n(1), 2)) + &n(1);
        assert_eq!(&a + &b, expected);
        assert_eq!(&n(1) + &w(), w());
        assert_eq!(&n(0) + &a, a);
        assert_eq!(&a + &n(0), a);
    }

    #[test]
    fn multiplication() {
        let w1 = &w() + &n(1);
        assert_eq!(&w1 * &n(2), &wk(n(1), 2) + &n(1));
        assert_eq!(&w1 * &w(), Ordinal::omega_pow(n(2)));
        assert_eq!(&w1 * &n(0), n(0));
        assert_eq!(&w1 * &n(1), w1);
        assert_eq!(&n(2) * &w(), w());
        assert_eq!(&w() * &n(2), wk(n(1), 2));
    }

    #[test]
    fn divmod_examples() {
        let a = &(&Ordinal::omega_pow(n(2)) + &wk(n(1), 2)) + &n(3);
        let (q, r) = a.ord_divmod(&w()).unwrap();
        assert_eq!(q, &w() + &n(2));
        assert_eq!(r, n(3));
        assert_eq!(&(&w() * &q) + &r, a);

        assert_eq!(a.ord_divmod(&n(1)).unwrap(), (a.clone(), n(0)));
        assert_eq!(n(5).ord_divmod(&w()).unwrap(), (n(0), n(5)));
        assert_eq!(a.ord_divmod(&n(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn divmod_with_lower_terms_in_divisor() {
        let d = &wk(n(1), 2) + &n(1);
        let a = &wk(n(1), 5) + &n(7);
        let (q, r) = a.ord_divmod(&d).unwrap();
        assert_eq!(&(&d * &q) + &r, a);
        assert!(r < d);
        assert_eq!(q, n(2));
    }

    #[test]
    fn degree_and_leading_monomial() {
        let a = &wk(&w() + &n(1), 3) + &wk(n(1), 2);
        assert_eq!(a.degree().unwrap(), &(&w() + &n(1)));
        assert_eq!(n(7).degree().unwrap(), &n(0));
        assert_eq!(w().degree().unwrap(), &n(1));
        assert_eq!(n(0).degree(), Err(Error::DegreeOfZero));

        let b = &(&wk(w(), 2) + &wk(n(1), 5)) + &n(1);
        assert_eq!(b.leading_monomial(), wk(w(), 2));
        assert_eq!(n(0).leading_monomial(), n(0));
        assert_eq!(n(4).leading_monomial(), n(4));
    }

    #[test]
    fn omega_powers() {
        assert_eq!(Ordinal::omega_pow(n(0)), n(1));
        assert_eq!(Ordinal::omega_pow(n(1)), w());
        assert_eq!(Ordinal::omega_pow(&w() + &n(1)).to_string(), "w^(w + 1)");
    }

    #[test]
    fn left_subtraction() {
        let a = &wk(n(1), 3) + &n(2);
        assert_eq!(a.left_sub(&w()), Some(&wk(n(1), 2) + &n(2)));
        assert_eq!(a.left_sub(&a), Some(n(0)));
        assert_eq!(a.left_sub(&n(5)), Some(a.clone()));
        assert_eq!(w().left_sub(&a), None);
    }

    #[test]
    fn locate_below() {
        // ω²+ω·2+1
        let t = &(&wk(n(2), 1) + &wk(n(1), 2)) + &n(1);
        assert_eq!(t.locate(&n(0)), Some((n(2), 0u32.into(), n(0))));
        assert_eq!(
            t.locate(&(&w() + &n(7))),
            Some((n(2), 0u32.into(), &w() + &n(7)))
        );
        assert_eq!(
            t.locate(&(&wk(n(2), 1) + &n(3))),
            Some((n(1), 0u32.into(), n(3)))
        );
        assert_eq!(
            t.locate(&(&wk(n(2), 1) + &w())),
            Some((n(1), 1u32.into(), n(0)))
        );
        assert_eq!(
            t.locate(&(&wk(n(2), 1) + &wk(n(1), 2))),
            Some((n(0), 0u32.into(), n(0)))
        );
        assert_eq!(t.locate(&t), None);
        assert_eq!(t.locate(&wk(n(3), 1)), None);
        for r in [n(0), n(5), w(), &wk(n(2), 1) + &w()] {
            let (e, q, rest) = t.locate(&r).unwrap();
            let rebuilt = &(&t.part_above(&e) + &Ordinal::monomial(e.clone(), q)) + &rest;
            assert_eq!(rebuilt, r);
        }
    }

    #[test]
    fn predecessor_of_successor() {
        let a = &w() + &n(1);
        assert_eq!(a.predecessor(), Some(w()));
        assert_eq!(w().predecessor(), None);
        assert_eq!(n(0).predecessor(), None);
    }

    #[test]
    fn pow_restrictions() {
        assert_eq!(n(2).pow(&n(10)).unwrap(), n(1024));
        assert_eq!(w().pow(&w()).unwrap(), Ordinal::omega_pow(w()));
        assert!(matches!(
            n(2).pow(&w()),
            Err(Error::UnsupportedExponentiation(_))
        ));
        assert!(matches!(
            (&w() + &n(1)).pow(&n(2)),
            Err(Error::UnsupportedExponentiation(_))
        ));
    }

    #[test]
    fn display_sugar() {
        let a = &(&wk(w(), 2) + &wk(n(1), 3)) + &n(5);
        assert_eq!(a.to_string(), "w^(w)*2 + w*3 + 5");
        assert_eq!(n(0).to_string(), "0");
        assert_eq!(Ordinal::omega_pow(n(2)).to_string(), "w^(2)");
    }
}
