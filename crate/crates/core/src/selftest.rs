//! Seeded randomized self-test suites over every module.
//!
//! Each suite draws from its own generator stream, so a report depends only
//! on the seed. Suites run in name order.

use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;

use crate::carruth::{
    antilex_cmp, antilex_rank, antilex_unrank, fc_cmp, fc_rank, natural_product_rank, FCDescriptor,
};
use crate::infinite::{
    infinite_nat_prod, infinite_nat_sum, infinite_ord_prod, infinite_ord_sum, segue_check,
    segue_threshold, sup_oracle_check,
};
use crate::natural::{nat_prod, nat_sum};
use crate::ordinal::Ordinal;
use crate::parse::parse;
use crate::random::Gen;
use crate::rearrange::{arrangement_oracle, inf_prod_values, inf_sum_values, Caps};
use crate::sequence::OmegaSequence;

pub type NatProdFn = fn(&Ordinal, &Ordinal) -> Ordinal;

/// Replaceable operations, so that a deliberately broken implementation can
/// be run through the suites.
#[derive(Clone, Copy)]
pub struct Hooks {
    pub nat_prod: NatProdFn,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks { nat_prod }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    /// The first failing case, if any.
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteReport::ok)
    }

    pub fn failed(&self) -> impl Iterator<Item = &SuiteReport> {
        self.suites.iter().filter(|s| !s.ok())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "selftest seed {}", self.seed)?;
        for s in &self.suites {
            match &s.failure {
                None => writeln!(f, "PASS {} {}/{}", s.name, s.passed, s.total)?,
                Some(why) => writeln!(f, "FAIL {} {}/{}: {}", s.name, s.passed, s.total, why)?,
            }
        }
        let failed = self.failed().count();
        write!(
            f,
            "{} suites, {} passed, {} failed",
            self.suites.len(),
            self.suites.len() - failed,
            failed
        )
    }
}

struct Tally {
    passed: usize,
    total: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

type Suite = fn(&mut Gen, &Hooks, &mut Tally);

const SUITES: &[(&str, Suite)] = &[
    ("carruth-lab/antilex", antilex_suite),
    ("carruth-lab/finitely-carruth", finitely_suite),
    ("carruth-lab/natural-product-rank", natural_rank_suite),
    ("inf-ops/lemma-identities", lemma_suite),
    ("inf-ops/monotonicity", inf_monotonicity_suite),
    ("inf-ops/ordinary-below-natural", ordinary_below_suite),
    ("inf-ops/permutation-invariance", permutation_suite),
    ("inf-ops/regroup-invariance", regroup_invariance_suite),
    ("inf-ops/rule-coverage", rule_coverage_suite),
    ("inf-ops/segue", segue_suite),
    ("natural-arith/commutativity-associativity", nat_laws_suite),
    ("natural-arith/distributivity", distributivity_suite),
    ("natural-arith/dominance", dominance_suite),
    ("natural-arith/leading-monomial", nat_leading_suite),
    ("natural-arith/monotonicity", nat_monotonicity_suite),
    ("omega-seq/classify-extensional", classify_suite),
    ("omega-seq/partial-products", partial_products_suite),
    ("omega-seq/regroup-blocks", regroup_blocks_suite),
    ("omega-seq/transforms-commute", transforms_suite),
    ("ordinal-core/associativity", associativity_suite),
    ("ordinal-core/canonical-form", canonical_suite),
    ("ordinal-core/divmod", divmod_suite),
    ("ordinal-core/leading-monomial", leading_suite),
    ("ordinal-core/round-trip", round_trip_suite),
    ("rearrange/closed-form-vs-oracle", rearrange_suite),
];

/// Names of all suites, in run order.
pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|(name, _)| *name)
}

pub fn selftest(seed: u64) -> Report {
    selftest_with(seed, &Hooks::default())
}

pub fn selftest_with(seed: u64, hooks: &Hooks) -> Report {
    let suites = SUITES
        .iter()
        .enumerate()
        .map(|(i, (name, run))| {
            let mut g = Gen::with_stream(seed, i as u64);
            let mut t = Tally {
                passed: 0,
                total: 0,
                failure: None,
            };
            run(&mut g, hooks, &mut t);
            SuiteReport {
                name,
                passed: t.passed,
                total: t.total,
                failure: t.failure,
            }
        })
        .collect();
    Report { seed, suites }
}

fn is_canonical(x: &Ordinal) -> bool {
    let terms = x.terms();
    terms.windows(2).all(|w| w[0].exponent() > w[1].exponent())
        && terms
            .iter()
            .all(|t| *t.coefficient() > 0u32.into() && is_canonical(t.exponent()))
}

fn two() -> Ordinal {
    Ordinal::from(2)
}

fn associativity_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..60 {
        let (a, b, c) = (g.ordinal(2), g.ordinal(2), g.ordinal(2));
        t.check(
            a.ord_add(&b).ord_add(&c) == a.ord_add(&b.ord_add(&c)),
            || format!("(a+b)+c != a+(b+c) for a={a}, b={b}, c={c}"),
        );
        t.check(
            a.ord_mul(&b).ord_mul(&c) == a.ord_mul(&b.ord_mul(&c)),
            || format!("(ab)c != a(bc) for a={a}, b={b}, c={c}"),
        );
        t.check(
            a.ord_mul(&b.ord_add(&c)) == a.ord_mul(&b).ord_add(&a.ord_mul(&c)),
            || format!("a(b+c) != ab+ac for a={a}, b={b}, c={c}"),
        );
    }
}

fn canonical_suite(g: &mut Gen, h: &Hooks, t: &mut Tally) {
    for _ in 0..60 {
        let mut acc = g.ordinal(2);
        for _ in 0..4 {
            let x = g.ordinal(2);
            acc = match g.below_usize(4) {
                0 => acc.ord_add(&x),
                1 => acc.ord_mul(&x),
                2 => nat_sum(&acc, &x),
                _ => (h.nat_prod)(&acc, &x),
            };
            t.check(is_canonical(&acc), || {
                format!("non-canonical result {acc:?}")
            });
        }
    }
}

fn divmod_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..60 {
        let (a, d) = (g.ordinal(2), g.nonzero_ordinal(2));
        match a.ord_divmod(&d) {
            Ok((q, r)) => t.check(d.ord_mul(&q).ord_add(&r) == a && r < d, || {
                format!("divmod({a}, {d}) = ({q}, {r}) does not reconstruct")
            }),
            Err(e) => t.check(false, || format!("divmod({a}, {d}) failed: {e}")),
        }
    }
}

fn leading_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..100 {
        let a = g.ordinal(2);
        let m = a.leading_monomial();
        let m2 = m.ord_mul(&two());
        t.check(m <= a && a <= m2 && m.ord_add(&m) == m2, || {
            format!("m(a) <= a <= m(a)*2 fails for a={a}")
        });
    }
}

fn round_trip_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..100 {
        let a = g.ordinal(3);
        t.check(parse(&a.to_string()).as_ref() == Ok(&a), || {
            format!("{a} does not re-parse to itself")
        });
    }
}

fn nat_laws_suite(g: &mut Gen, h: &Hooks, t: &mut Tally) {
    let np = h.nat_prod;
    for _ in 0..60 {
        let (a, b, c) = (g.ordinal(2), g.ordinal(2), g.ordinal(2));
        t.check(nat_sum(&a, &b) == nat_sum(&b, &a), || {
            format!("a#b != b#a for a={a}, b={b}")
        });
        t.check(np(&a, &b) == np(&b, &a), || {
            format!("a@b != b@a for a={a}, b={b}")
        });
        t.check(
            nat_sum(&nat_sum(&a, &b), &c) == nat_sum(&a, &nat_sum(&b, &c)),
            || format!("# not associative on a={a}, b={b}, c={c}"),
        );
        t.check(np(&np(&a, &b), &c) == np(&a, &np(&b, &c)), || {
            format!("@ not associative on a={a}, b={b}, c={c}")
        });
    }
}

fn distributivity_suite(g: &mut Gen, h: &Hooks, t: &mut Tally) {
    let np = h.nat_prod;
    for _ in 0..60 {
        let (a, b, c) = (g.ordinal(2), g.ordinal(2), g.ordinal(2));
        let lhs = np(&a, &nat_sum(&b, &c));
        let rhs = nat_sum(&np(&a, &b), &np(&a, &c));
        t.check(lhs == rhs, || {
            format!("a@(b#c) = {lhs} but (a@b)#(a@c) = {rhs} for a={a}, b={b}, c={c}")
        });
    }
}

fn dominance_suite(g: &mut Gen, h: &Hooks, t: &mut Tally) {
    for _ in 0..60 {
        let (a, b) = (g.ordinal(2), g.ordinal(2));
        t.check(a.ord_add(&b) <= nat_sum(&a, &b), || {
            format!("a+b > a#b for a={a}, b={b}")
        });
        t.check(a.ord_mul(&b) <= (h.nat_prod)(&a, &b), || {
            format!("ab > a@b for a={a}, b={b}")
        });
    }
}

fn nat_leading_suite(g: &mut Gen, h: &Hooks, t: &mut Tally) {
    let np = h.nat_prod;
    for _ in 0..60 {
        let (a, b) = (g.nonzero_ordinal(2), g.nonzero_ordinal(2));
        let (ma, mb) = (a.leading_monomial(), b.leading_monomial());
        t.check(np(&a, &b).leading_monomial() == np(&ma, &mb), || {
            format!("m(a@b) != m(a)@m(b) for a={a}, b={b}")
        });
        t.check(ma.ord_mul(&two()) <= np(&ma, &two()), || {
            format!("m(a)*2 > m(a)@2 for a={a}")
        });
    }
}

fn nat_monotonicity_suite(g: &mut Gen, h: &Hooks, t: &mut Tally) {
    for _ in 0..60 {
        let hi = g.nonzero_ordinal(2);
        let lo = g.below(&hi);
        let b = g.nonzero_ordinal(2);
        t.check((h.nat_prod)(&lo, &b) < (h.nat_prod)(&hi, &b), || {
            format!("{lo} < {hi} but not after @ {b}")
        });
        t.check(nat_sum(&lo, &b) < nat_sum(&hi, &b), || {
            format!("{lo} < {hi} but not after # {b}")
        });
    }
}

fn unrolled(s: &OmegaSequence) -> OmegaSequence {
    let mut prefix = s.prefix().to_vec();
    prefix.extend_from_slice(s.cycle());
    let mut cycle = s.cycle().to_vec();
    cycle.extend_from_slice(s.cycle());
    OmegaSequence::new(prefix, cycle).expect("nonempty cycle")
}

fn classify_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..60 {
        let s = g.sequence();
        let u = unrolled(&s);
        t.check(s.seq_equal(&u) && s.classify() == u.classify(), || {
            format!("{s} and {u} are equal but classify differently")
        });
    }
}

fn partial_products_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let s = g.nonzero_sequence();
        let end = s.period_end() + s.cycle().len();
        let i = g.below_usize(end);
        let j = i + 1 + g.below_usize(end - i);
        let (pi, pj) = (s.partial_nat_prod(i), s.partial_nat_prod(j));
        let ones = (i..j).all(|k| s.term_at(k).is_one());
        t.check(pi <= pj && (pi == pj) == ones, || {
            format!("P_{i} = {pi}, P_{j} = {pj} under {s}")
        });
    }
}

fn regroup_blocks_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let s = g.sequence();
        let k = [2, 3, 5][g.below_usize(3)];
        let r = s.regroup(k).expect("k >= 1");
        for n in 0..4 {
            t.check(r.partial_nat_prod(n) == s.partial_nat_prod(k * n), || {
                format!("regroup({s}, {k}) breaks block {n}")
            });
        }
    }
}

fn transforms_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let s = g.nonzero_sequence();
        let n = g.below_usize(s.period_end() + 1);
        let d1 = s.degrees().expect("nonzero").tail_from(n);
        let d2 = s.tail_from(n).degrees().expect("nonzero");
        t.check(d1.seq_equal(&d2), || {
            format!("degrees and tail_from({n}) do not commute on {s}")
        });
        let m1 = s.monomials().tail_from(n);
        let m2 = s.tail_from(n).monomials();
        t.check(m1.seq_equal(&m2), || {
            format!("monomials and tail_from({n}) do not commute on {s}")
        });
    }
}

fn lemma_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let e = g.sequence();
        let powers = e.map(|x| Ordinal::omega_pow(x.clone()));
        let lhs = infinite_nat_prod(&powers);
        let rhs = Ordinal::omega_pow(infinite_nat_sum(&e));
        t.check(lhs == rhs, || {
            format!("@ of w^b_i is {lhs}, w^(# b_i) is {rhs}, b = {e}")
        });
        let s = g.nonzero_sequence();
        if s.eventually_one().is_none() {
            let m = s.monomials();
            t.check(infinite_nat_prod(&s) == infinite_nat_prod(&m), || {
                format!("natural product changes under leading monomials for {s}")
            });
            t.check(infinite_ord_prod(&s) == infinite_ord_prod(&m), || {
                format!("classical product changes under leading monomials for {s}")
            });
        }
    }
}

fn ordinary_below_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..60 {
        let s = g.sequence();
        t.check(infinite_ord_prod(&s) <= infinite_nat_prod(&s), || {
            format!("classical product exceeds natural product for {s}")
        });
        t.check(infinite_ord_sum(&s) <= infinite_nat_sum(&s), || {
            format!("classical sum exceeds natural sum for {s}")
        });
    }
}

fn inf_monotonicity_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let s = g.sequence();
        let mut lower = |x: &Ordinal| {
            if x.is_zero() || g.chance(0.5) {
                x.clone()
            } else {
                g.below(x)
            }
        };
        let prefix: Vec<Ordinal> = s.prefix().iter().map(&mut lower).collect();
        let cycle: Vec<Ordinal> = s.cycle().iter().map(&mut lower).collect();
        let b = OmegaSequence::new(prefix, cycle).expect("nonempty cycle");
        t.check(infinite_nat_prod(&b) <= infinite_nat_prod(&s), || {
            format!("{b} lies termwise below {s} but has a larger natural product")
        });
    }
}

fn permutation_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let s = g.sequence();
        let n = s.period_end();
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(g.rng());
        let r = g.below_usize(s.cycle().len());
        let p = s.permute_head(&sigma).expect("permutation").rotate_cycle(r);
        t.check(infinite_nat_prod(&p) == infinite_nat_prod(&s), || {
            format!("natural product of {s} changes under rearrangement to {p}")
        });
        t.check(infinite_nat_sum(&p) == infinite_nat_sum(&s), || {
            format!("natural sum of {s} changes under rearrangement to {p}")
        });
    }
}

fn regroup_invariance_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let s = g.sequence();
        for k in [2, 3, 5] {
            let r = s.regroup(k).expect("k >= 1");
            t.check(infinite_nat_prod(&r) == infinite_nat_prod(&s), || {
                format!("natural product of {s} changes under regroup by {k}")
            });
        }
    }
}

fn rule_coverage_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..30 {
        let s = g.nonzero_sequence();
        let v = infinite_nat_prod(&s);
        let ok = sup_oracle_check(&s, &v, 10);
        t.check(ok == Ok(true), || {
            format!("least-upper-bound check rejects {v} for {s}: {ok:?}")
        });
    }
}

fn segue_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let s = g.sequence();
        let m = segue_threshold(&s);
        for n in m..=m + s.period_end() {
            t.check(segue_check(&s, n).all(), || {
                format!("threshold {m} for {s} but identities fail at {n}")
            });
        }
    }
}

fn rearrange_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    let caps = Caps::default();
    for _ in 0..20 {
        let s = g.sequence();
        let n = s.period_end().min(5);
        if n < s.prefix().len() {
            continue;
        }
        let closed = inf_sum_values(&s, &caps);
        let brute = arrangement_oracle(&s, n, &caps);
        t.check(closed.is_ok() && closed == brute, || {
            format!("rearranged sums of {s}: closed form {closed:?}, brute force {brute:?}")
        });
        t.check(inf_prod_values(&s, &caps).is_ok(), || {
            format!("no product values for {s}")
        });
    }
}

fn antilex_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..30 {
        let bounds = Arc::new(g.nonzero_sequence());
        let total = infinite_ord_prod(&bounds);
        for _ in 0..4 {
            let (a, b) = (g.vector(&bounds, 5), g.vector(&bounds, 5));
            let (ra, rb) = (antilex_rank(&a), antilex_rank(&b));
            t.check(antilex_cmp(&a, &b) == Ok(ra.cmp(&rb)), || {
                format!("rank order disagrees with anti-lex order on {a}, {b} under {bounds}")
            });
            t.check(ra < total, || format!("rank {ra} of {a} not below {total}"));
            t.check(
                antilex_unrank(bounds.clone(), &ra).as_ref() == Ok(&a),
                || format!("unrank(rank({a})) differs under {bounds}"),
            );
        }
    }
}

fn natural_rank_suite(g: &mut Gen, h: &Hooks, t: &mut Tally) {
    for _ in 0..40 {
        let (alpha, beta) = (g.nonzero_ordinal(2), g.nonzero_ordinal(2));
        let r = natural_product_rank(&alpha, &beta).expect("nonzero factors");
        t.check(r.target() == &(h.nat_prod)(&alpha, &beta), || {
            format!("rank target {} differs from {alpha} @ {beta}", r.target())
        });
        let (x, x2, y) = (g.below(&alpha), g.below(&alpha), g.below(&beta));
        let v = r.rank(&[x.clone(), y.clone()]).expect("in range");
        let v2 = r.rank(&[x2.clone(), y.clone()]).expect("in range");
        t.check(x.cmp(&x2) == v.cmp(&v2), || {
            format!("rank not monotone in x at ({x}, {y}) vs ({x2}, {y}) on {alpha} x {beta}")
        });
        t.check(
            r.unrank(&v).ok() == Some(vec![x.clone(), y.clone()]),
            || format!("unrank(rank({x}, {y})) differs on {alpha} x {beta}"),
        );
    }
}

fn finitely_suite(g: &mut Gen, _: &Hooks, t: &mut Tally) {
    for _ in 0..20 {
        let bounds = Arc::new(g.nonzero_sequence());
        let d = FCDescriptor::realizing(bounds.clone()).expect("nonzero bounds");
        let target = d.target();
        t.check(target == infinite_nat_prod(&bounds), || {
            format!("finitely Carruth type {target} differs from the natural product of {bounds}")
        });
        for _ in 0..4 {
            let (a, b) = (g.vector(&bounds, 5), g.vector(&bounds, 5));
            let (ra, rb) = (
                fc_rank(&d, &a).expect("same bounds"),
                fc_rank(&d, &b).expect("same bounds"),
            );
            t.check(fc_cmp(&d, &a, &b) == Ok(ra.cmp(&rb)), || {
                format!("fc rank order disagrees with fc order on {a}, {b} under {bounds}")
            });
            t.check(ra < target, || {
                format!("fc rank {ra} of {a} not below {target}")
            });
        }
    }
}
