use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use super::vector::{check_bounds, last_diff, FinSupportVector};
use crate::error::{Error, Result};
use crate::infinite::infinite_ord_prod;
use crate::ordinal::Ordinal;
use crate::sequence::OmegaSequence;

/// Longest prefix-product chain [`antilex_unrank`] will build.
pub const MAX_UNRANK_SCAN: usize = 100_000;

/// Anti-lexicographic order: compare at the last index where the vectors differ.
pub fn antilex_cmp(a: &FinSupportVector, b: &FinSupportVector) -> Result<Ordering> {
    check_bounds(a, b)?;
    if a == b {
        return Ok(Ordering::Equal);
    }
    let i = last_diff(a, b)?;
    Ok(a.coord(i).cmp(&b.coord(i)))
}

/// Position of `a` in the anti-lexicographic well-order of type `∏ α_i`:
/// the sum over the support, highest index first, of `(α_0·…·α_{i-1})·a_i`.
pub fn antilex_rank(a: &FinSupportVector) -> Ordinal {
    let Some(top) = a.max_index() else {
        return Ordinal::zero();
    };
    let bounds = a.bounds();
    let mut weights = Vec::with_capacity(top + 1);
    let mut w = Ordinal::one();
    for i in 0..=top {
        weights.push(w.clone());
        w = w.ord_mul(bounds.term_at(i));
    }
    a.entries()
        .iter()
        .rev()
        .fold(Ordinal::zero(), |acc, (i, v)| {
            acc.ord_add(&weights[*i].ord_mul(v))
        })
}

/// Inverse of [`antilex_rank`]: peel coordinates off `r` by division by the
/// prefix products, highest position first.
pub fn antilex_unrank(bounds: Arc<OmegaSequence>, r: &Ordinal) -> Result<FinSupportVector> {
    if bounds.has_zero() {
        return Err(Error::ZeroFactor(format!(
            "bounds {bounds} have an empty factor"
        )));
    }
    let total = infinite_ord_prod(&bounds);
    if r >= &total {
        return Err(Error::OutOfRange(format!("{r} is not below {total}")));
    }
    let mut weights = vec![Ordinal::one()];
    while r >= weights.last().expect("nonempty") {
        if weights.len() > MAX_UNRANK_SCAN {
            return Err(Error::CapExceeded {
                what: format!("prefix products needed to unrank {r}"),
                limit: MAX_UNRANK_SCAN as u64,
            });
        }
        let i = weights.len() - 1;
        let next = weights[i].ord_mul(bounds.term_at(i));
        weights.push(next);
    }
    let mut rest = r.clone();
    let mut entries = BTreeMap::new();
    for i in (0..weights.len() - 1).rev() {
        let (q, rem) = rest.ord_divmod(&weights[i])?;
        entries.insert(i, q);
        rest = rem;
    }
    FinSupportVector::new(bounds, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse, parse_sequence, parse_vector_entries};

    fn bounds(s: &str) -> Arc<OmegaSequence> {
        Arc::new(parse_sequence(s).unwrap())
    }

    fn vec_in(b: &Arc<OmegaSequence>, s: &str) -> FinSupportVector {
        FinSupportVector::new(b.clone(), parse_vector_entries(s).unwrap()).unwrap()
    }

    #[test]
    fn comparisons() {
        let b = bounds("[; 2]");
        let b0 = FinSupportVector::unit(b.clone(), 0).unwrap();
        let b1 = FinSupportVector::unit(b.clone(), 1).unwrap();
        assert_eq!(antilex_cmp(&b0, &b1).unwrap(), Ordering::Less);
        assert_eq!(antilex_cmp(&b1, &b1).unwrap(), Ordering::Equal);
        let w = bounds("[; w]");
        assert_eq!(
            antilex_cmp(&vec_in(&w, "{0:1}"), &vec_in(&w, "{0:1, 2:1}")).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn ranks() {
        let w = bounds("[; w]");
        assert_eq!(
            antilex_rank(&FinSupportVector::zero(w.clone()).unwrap()),
            Ordinal::zero()
        );
        assert_eq!(
            antilex_rank(&vec_in(&w, "{0:3, 2:5}")),
            parse("w^2*5 + 3").unwrap()
        );
        let two = bounds("[; 2]");
        for j in 0..10u32 {
            let u = FinSupportVector::unit(two.clone(), j as usize).unwrap();
            assert_eq!(antilex_rank(&u), Ordinal::from(2u64.pow(j)));
        }
    }

    #[test]
    fn unrank_inverts_rank() {
        let b = bounds("[2, w+1 ; w^2, 3]");
        for s in ["{}", "{0:1}", "{1:w}", "{0:1, 1:5, 3:2}", "{2:w*4+1, 5:1}"] {
            let v = vec_in(&b, s);
            assert_eq!(antilex_unrank(b.clone(), &antilex_rank(&v)).unwrap(), v);
        }
    }

    #[test]
    fn unrank_range() {
        let b = bounds("[w ; 1]");
        assert_eq!(
            antilex_unrank(b.clone(), &parse("5").unwrap()).unwrap(),
            vec_in(&b, "{0:5}")
        );
        assert!(matches!(
            antilex_unrank(b, &Ordinal::omega()),
            Err(Error::OutOfRange(_))
        ));
        assert!(antilex_unrank(bounds("[; 2]"), &Ordinal::omega()).is_err());
    }
}
