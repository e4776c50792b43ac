//! Hessenberg natural sum `⊕` and natural product `⊗`.
//!
//! Both treat Cantor normal forms as polynomials in ω: `⊕` merges terms and
//! adds coefficients of equal exponents, `⊗` expands with
//! `ω^ξ ⊗ ω^η = ω^(ξ ⊕ η)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::ordinal::{Natural, Ordinal, Term};

pub fn nat_sum(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let (x, y) = (a.terms(), b.terms());
    let mut out: Vec<Term> = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].exponent().cmp(y[j].exponent()) {
            Ordering::Greater => {
                out.push(x[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(y[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(Ordinal::term(
                    x[i].exponent().clone(),
                    x[i].coefficient() + y[j].coefficient(),
                ));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    Ordinal::from_terms_unchecked(out)
}

pub fn nat_prod(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.is_zero() || b.is_zero() {
        return Ordinal::zero();
    }
    let mut acc: BTreeMap<Ordinal, Natural> = BTreeMap::new();
    for s in a.terms() {
        for t in b.terms() {
            let e = nat_sum(s.exponent(), t.exponent());
            *acc.entry(e).or_default() += s.coefficient() * t.coefficient();
        }
    }
    Ordinal::from_terms_unchecked(
        acc.into_iter()
            .rev()
            .map(|(e, k)| Ordinal::term(e, k))
            .collect(),
    )
}

/// `⊕` of a finite list; 0 for the empty list.
pub fn nat_sum_list<'a>(xs: impl IntoIterator<Item = &'a Ordinal>) -> Ordinal {
    xs.into_iter()
        .fold(Ordinal::zero(), |acc, x| nat_sum(&acc, x))
}

/// `⊗` of a finite list; 1 for the empty list.
pub fn nat_prod_list<'a>(xs: impl IntoIterator<Item = &'a Ordinal>) -> Ordinal {
    xs.into_iter()
        .fold(Ordinal::one(), |acc, x| nat_prod(&acc, x))
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

    #[test]
    fn natural_sum_merges() {
        let w1 = &w() + &n(1);
        assert_eq!(
            nat_sum(&w1, &w()),
            &Ordinal::monomial(n(1), 2u32.into()) + &n(1)
        );
        assert_eq!(nat_sum(&n(1), &w()), w1);
        assert_eq!(nat_sum(&w(), &n(1)), w1);
        assert_eq!(nat_sum(&w1, &n(0)), w1);
    }

    #[test]
    fn natural_product_expands() {
        // (ω⊗ω) ⊕ (ω⊗1) ⊕ (1⊗ω) ⊕ (1⊗1) = ω² ⊕ ω ⊕ ω ⊕ 1
        let w1 = &w() + &n(1);
        let expected = Ordinal::from_terms(vec![
            (n(2), 1u32.into()),
            (n(1), 2u32.into()),
            (n(0), 1u32.into()),
        ])
        .unwrap();
        assert_eq!(nat_prod(&w1, &w1), expected);
        assert_eq!(nat_prod(&w1, &n(1)), w1);
        assert_eq!(nat_prod(&w1, &n(0)), n(0));
    }

    #[test]
    fn omega_power_times_two_is_ordinary() {
        for e in [n(0), n(3), w(), &Ordinal::omega_pow(w()) + &n(1)] {
            let m = Ordinal::omega_pow(e.clone());
            assert_eq!(nat_prod(&m, &n(2)), &m * &n(2));
            assert_eq!(nat_prod(&m, &n(2)), Ordinal::monomial(e, 2u32.into()));
        }
    }

    #[test]
    fn list_folds() {
        assert_eq!(nat_prod_list(&[]), n(1));
        assert_eq!(nat_sum_list(&[]), n(0));
        assert_eq!(
            nat_prod_list(&[w(), w(), n(2)]),
            Ordinal::monomial(n(2), 2u32.into())
        );
        assert_eq!(nat_sum_list(&[n(1), n(1), n(1)]), n(3));
    }

    #[test]
    fn natural_ops_commute_where_classical_do_not() {
        let a = &w() + &n(1);
        let b = Ordinal::omega_pow(n(2));
        assert_ne!(&a + &b, &b + &a);
        assert_eq!(nat_sum(&a, &b), nat_sum(&b, &a));
        assert_ne!(&a * &b, &b * &a);
        assert_eq!(nat_prod(&a, &b), nat_prod(&b, &a));
    }
}
