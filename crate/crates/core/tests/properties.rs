mod common;

use std::cmp::Ordering;
use std::sync::Arc;

use common::Cnf;
use natprod::carruth::{
    antilex_cmp, antilex_rank, antilex_unrank, fc_cmp, fc_rank, natural_product_rank, product_leq,
    strictly_above, FCDescriptor, FinSupportVector,
};
use natprod::infinite::{
    infinite_nat_prod, infinite_nat_sum, infinite_ord_prod, segue_check, segue_threshold,
    sup_oracle_check,
};
use natprod::natural::{nat_prod, nat_sum};
use natprod::parse::parse;
use natprod::random::Gen;
use natprod::rearrange::{arrangement_oracle, inf_prod_values, inf_sum_values, Caps};
use natprod::{OmegaSequence, Ordinal};
use proptest::prelude::*;

fn ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..6).prop_map(Ordinal::from);
    leaf.prop_recursive(3, 24, 3, |inner| {
        prop::collection::vec((inner, 1u64..5), 0..4).prop_map(|pairs| {
            pairs.into_iter().fold(Ordinal::zero(), |acc, (e, k)| {
                nat_sum(&acc, &Ordinal::monomial(e, k.into()))
            })
        })
    })
}

fn nonzero_ordinal() -> impl Strategy<Value = Ordinal> {
    ordinal().prop_map(|x| if x.is_zero() { Ordinal::one() } else { x })
}

fn sequence() -> impl Strategy<Value = OmegaSequence> {
    (
        prop::collection::vec(ordinal(), 0..4),
        prop::collection::vec(ordinal(), 1..3),
    )
        .prop_map(|(p, c)| OmegaSequence::new(p, c).unwrap())
}

fn nonzero_sequence() -> impl Strategy<Value = OmegaSequence> {
    (
        prop::collection::vec(nonzero_ordinal(), 0..4),
        prop::collection::vec(nonzero_ordinal(), 1..3),
    )
        .prop_map(|(p, c)| OmegaSequence::new(p, c).unwrap())
}

fn two() -> Ordinal {
    Ordinal::from(2)
}

proptest! {
    #[test]
    fn round_trip(a in ordinal()) {
        prop_assert_eq!(parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn classical_laws(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.ord_add(&b).ord_add(&c), a.ord_add(&b.ord_add(&c)));
        prop_assert_eq!(a.ord_mul(&b).ord_mul(&c), a.ord_mul(&b.ord_mul(&c)));
        prop_assert_eq!(a.ord_mul(&b.ord_add(&c)), a.ord_mul(&b).ord_add(&a.ord_mul(&c)));
    }

    #[test]
    fn divmod_reconstructs(a in ordinal(), d in nonzero_ordinal()) {
        let (q, r) = a.ord_divmod(&d).unwrap();
        prop_assert!(r < d);
        prop_assert_eq!(d.ord_mul(&q).ord_add(&r), a);
    }

    #[test]
    fn leading_monomial_chain(a in ordinal()) {
        let m = a.leading_monomial();
        let m2 = m.ord_mul(&two());
        prop_assert!(m <= a);
        prop_assert!(a <= m2);
        prop_assert_eq!(m.ord_add(&m), m2.clone());
        prop_assert!(m2 <= nat_prod(&m, &two()));
    }

    #[test]
    fn natural_ops_match_model(a in ordinal(), b in ordinal()) {
        let (ca, cb) = (Cnf::of(&a), Cnf::of(&b));
        prop_assert_eq!(Cnf::of(&nat_sum(&a, &b)), ca.hsum(&cb));
        prop_assert_eq!(Cnf::of(&nat_prod(&a, &b)), ca.hprod(&cb));
    }

    #[test]
    fn natural_laws(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(nat_sum(&a, &b), nat_sum(&b, &a));
        prop_assert_eq!(nat_prod(&a, &b), nat_prod(&b, &a));
        prop_assert_eq!(nat_prod(&nat_prod(&a, &b), &c), nat_prod(&a, &nat_prod(&b, &c)));
        prop_assert_eq!(nat_prod(&a, &nat_sum(&b, &c)), nat_sum(&nat_prod(&a, &b), &nat_prod(&a, &c)));
        prop_assert!(a.ord_add(&b) <= nat_sum(&a, &b));
        prop_assert!(a.ord_mul(&b) <= nat_prod(&a, &b));
    }

    #[test]
    fn natural_monotonicity(a in ordinal(), a2 in ordinal(), b in nonzero_ordinal()) {
        let (lo, hi) = if a <= a2 { (a, a2) } else { (a2, a) };
        prop_assume!(lo < hi);
        prop_assert!(nat_sum(&lo, &b) < nat_sum(&hi, &b));
        prop_assert!(nat_prod(&lo, &b) < nat_prod(&hi, &b));
        prop_assert_eq!(
            nat_prod(&hi, &b).leading_monomial(),
            nat_prod(&hi.leading_monomial(), &b.leading_monomial())
        );
    }

    #[test]
    fn cancellation(a in ordinal(), b in ordinal(), c in nonzero_ordinal()) {
        prop_assert_eq!(nat_sum(&a, &c) == nat_sum(&b, &c), a == b);
        prop_assert_eq!(nat_prod(&a, &c) == nat_prod(&b, &c), a == b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn classify_is_extensional(s in sequence(), extra in 0usize..3) {
        let mut prefix = s.prefix().to_vec();
        let mut cycle = s.cycle().to_vec();
        for _ in 0..extra {
            prefix.extend_from_slice(s.cycle());
        }
        cycle.extend_from_slice(s.cycle());
        let t = OmegaSequence::new(prefix, cycle).unwrap();
        prop_assert!(s.seq_equal(&t));
        prop_assert_eq!(s.classify(), t.classify());
        prop_assert_eq!(infinite_nat_prod(&s), infinite_nat_prod(&t));
    }

    #[test]
    fn partial_products_grow(s in nonzero_sequence(), i in 0usize..8, len in 0usize..6) {
        let j = i + len;
        let (pi, pj) = (s.partial_nat_prod(i), s.partial_nat_prod(j));
        let ones = (i..j).all(|k| s.term_at(k).is_one());
        prop_assert!(pi <= pj);
        prop_assert_eq!(pi == pj, ones);
    }

    #[test]
    fn regroup_blocks(s in sequence(), k in 1usize..6) {
        let r = s.regroup(k).unwrap();
        for n in 0..4 {
            prop_assert_eq!(r.partial_nat_prod(n), s.partial_nat_prod(k * n));
        }
        prop_assert_eq!(infinite_nat_prod(&r), infinite_nat_prod(&s));
    }

    #[test]
    fn transforms_commute_with_tails(s in nonzero_sequence(), n in 0usize..8) {
        prop_assert!(s.degrees().unwrap().tail_from(n).seq_equal(&s.tail_from(n).degrees().unwrap()));
        prop_assert!(s.monomials().tail_from(n).seq_equal(&s.tail_from(n).monomials()));
    }

    #[test]
    fn ordinary_below_natural(s in sequence()) {
        prop_assert!(infinite_ord_prod(&s) <= infinite_nat_prod(&s));
    }

    #[test]
    fn rearrangement_invariance(s in sequence(), seed in any::<u64>()) {
        let n = s.period_end();
        let mut g = Gen::new(seed);
        let mut sigma: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            sigma.swap(i, g.below_usize(i + 1));
        }
        let r = g.below_usize(s.cycle().len());
        let p = s.permute_head(&sigma).unwrap().rotate_cycle(r);
        prop_assert_eq!(infinite_nat_prod(&p), infinite_nat_prod(&s));
        prop_assert_eq!(infinite_nat_sum(&p), infinite_nat_sum(&s));
    }

    #[test]
    fn exponent_lemma(e in sequence()) {
        let powers = e.map(|x| Ordinal::omega_pow(x.clone()));
        prop_assert_eq!(infinite_nat_prod(&powers), Ordinal::omega_pow(infinite_nat_sum(&e)));
    }

    #[test]
    fn leading_monomial_reduction(s in nonzero_sequence()) {
        prop_assume!(s.eventually_one().is_none());
        prop_assert_eq!(infinite_nat_prod(&s), infinite_nat_prod(&s.monomials()));
        prop_assert_eq!(infinite_ord_prod(&s), infinite_ord_prod(&s.monomials()));
    }

    #[test]
    fn segue_identities_past_threshold(s in sequence()) {
        let m = segue_threshold(&s);
        for n in m..=m + s.period_end() {
            prop_assert!(segue_check(&s, n).all(), "cut {}", n);
        }
        if m > 0 {
            prop_assert!(!segue_check(&s, m - 1).all());
        }
    }

    #[test]
    fn natural_sum_shape(s in sequence()) {
        let v = infinite_nat_sum(&s);
        for n in 0..=s.period_end() + 2 {
            let b = s.partial_nat_sum(n);
            if s.cycle().iter().any(|x| !x.is_zero()) {
                prop_assert!(b < v);
            } else {
                prop_assert!(b <= v);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_form_is_least_upper_bound(s in nonzero_sequence()) {
        let v = infinite_nat_prod(&s);
        prop_assert_eq!(sup_oracle_check(&s, &v, 12), Ok(true));
    }

    #[test]
    fn rearranged_sums_match_brute_force(s in sequence()) {
        let caps = Caps::default();
        let n = s.period_end();
        prop_assume!(n <= 5);
        let closed = inf_sum_values(&s, &caps).unwrap();
        prop_assert_eq!(&closed, &arrangement_oracle(&s, n, &caps).unwrap());
        prop_assert!(inf_prod_values(&s, &caps).is_ok());
    }

    #[test]
    fn antilex_rank_is_an_isomorphism(s in nonzero_sequence(), seed in any::<u64>()) {
        let bounds = Arc::new(s);
        let total = infinite_ord_prod(&bounds);
        let mut g = Gen::new(seed);
        for _ in 0..8 {
            let (a, b) = (g.vector(&bounds, 6), g.vector(&bounds, 6));
            let (ra, rb) = (antilex_rank(&a), antilex_rank(&b));
            prop_assert_eq!(antilex_cmp(&a, &b).unwrap(), ra.cmp(&rb));
            prop_assert!(ra < total);
            prop_assert_eq!(antilex_unrank(bounds.clone(), &ra).unwrap(), a.clone());
            if product_leq(&a, &b).unwrap() {
                prop_assert!(antilex_cmp(&a, &b).unwrap() != Ordering::Greater);
            }
        }
    }

    #[test]
    fn natural_rank_contract(alpha in nonzero_ordinal(), beta in nonzero_ordinal(), seed in any::<u64>()) {
        let r = natural_product_rank(&alpha, &beta).unwrap();
        prop_assert_eq!(r.target(), &nat_prod(&alpha, &beta));
        let mut g = Gen::new(seed);
        for _ in 0..8 {
            let (x, x2) = (g.below(&alpha), g.below(&alpha));
            let (y, y2) = (g.below(&beta), g.below(&beta));
            let v = r.rank(&[x.clone(), y.clone()]).unwrap();
            prop_assert!(&v < r.target());
            prop_assert_eq!(r.unrank(&v).unwrap(), vec![x.clone(), y.clone()]);
            prop_assert_eq!(x.cmp(&x2), v.cmp(&r.rank(&[x2.clone(), y.clone()]).unwrap()));
            prop_assert_eq!(y.cmp(&y2), v.cmp(&r.rank(&[x.clone(), y2.clone()]).unwrap()));
            let u = g.below(r.target());
            prop_assert_eq!(r.rank(&r.unrank(&u).unwrap()).unwrap(), u);
        }
        let top = r.rank(&[alpha.predecessor().unwrap_or_else(|| g.below(&alpha)), beta.predecessor().unwrap_or_else(|| g.below(&beta))]).unwrap();
        if alpha.is_successor() && beta.is_successor() {
            prop_assert_eq!(Some(top), r.target().predecessor());
        }
    }

    #[test]
    fn finitely_carruth_order(s in nonzero_sequence(), seed in any::<u64>()) {
        let bounds = Arc::new(s);
        let d = FCDescriptor::realizing(bounds.clone()).unwrap();
        prop_assert_eq!(d.target(), infinite_nat_prod(&bounds));
        let mut g = Gen::new(seed);
        let vs: Vec<FinSupportVector> = (0..6).map(|_| g.vector(&bounds, 6)).collect();
        for a in &vs {
            let ra = fc_rank(&d, a).unwrap();
            prop_assert!(ra < d.target());
            for b in &vs {
                let ord_ab = fc_cmp(&d, a, b).unwrap();
                prop_assert_eq!(ord_ab, ra.cmp(&fc_rank(&d, b).unwrap()));
                prop_assert_eq!(ord_ab, fc_cmp(&d, b, a).unwrap().reverse());
                if product_leq(a, b).unwrap() {
                    prop_assert!(ord_ab != Ordering::Greater);
                }
                for c in &vs {
                    if ord_ab == Ordering::Less && fc_cmp(&d, b, c).unwrap() == Ordering::Less {
                        prop_assert_eq!(fc_cmp(&d, a, c).unwrap(), Ordering::Less);
                    }
                }
            }
            if bounds.eventually_one().is_none() {
                let up = strictly_above(a).unwrap();
                prop_assert!(product_leq(a, &up).unwrap() && &up != a);
            }
        }
    }
}
