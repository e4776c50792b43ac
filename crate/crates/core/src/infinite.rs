//! Infinite sums and products of eventually periodic ω-sequences.
//!
//! The natural versions are limits of the partial folds under `⊕`/`⊗`
//! (`0` if some factor is `0` for the product); the classical versions are
//! the usual ordinal series. All four are computed in closed form from the
//! prefix and the cycle, and [`sup_oracle_check`] re-derives the natural
//! product as a least upper bound of partial products.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::natural::{nat_prod, nat_sum_list};
use crate::ordinal::Ordinal;
use crate::sequence::{OmegaSequence, SeqClass};

/// Largest degree among the nonzero cycle values, `None` if the cycle is all 0.
pub(crate) fn cycle_degree(s: &OmegaSequence) -> Option<&Ordinal> {
    s.cycle().iter().filter_map(|x| x.degree().ok()).max()
}

/// `sup_n (α_0 ⊕ … ⊕ α_{n-1})`.
///
/// With `D` the largest degree of a nonzero cycle value, only finitely many
/// terms reach `ω^(D+1)` and the remaining ones sum to exactly `ω^(D+1)` in
/// the limit, so the result is `(⊕ of the large terms) + ω^(D+1)`.
pub fn infinite_nat_sum(s: &OmegaSequence) -> Ordinal {
    let Some(d) = cycle_degree(s) else {
        return nat_sum_list(s.prefix());
    };
    let threshold = Ordinal::omega_pow(d.ord_add(&Ordinal::one()));
    let high = nat_sum_list(s.prefix().iter().filter(|x| **x >= threshold));
    high.ord_add(&threshold)
}

/// `lim_n (α_0 ⊗ … ⊗ α_{n-1})`, dispatched on [`OmegaSequence::classify`].
pub fn infinite_nat_prod(s: &OmegaSequence) -> Ordinal {
    match s.classify() {
        SeqClass::HasZero => Ordinal::zero(),
        SeqClass::EventuallyOne(n) => s.partial_nat_prod(n),
        SeqClass::EventuallyFinite(n) => {
            let beta = nat_sum_list(s.head(n).iter().map(|x| x.degree().expect("nonzero")));
            Ordinal::omega_pow(beta.ord_add(&Ordinal::one()))
        }
        SeqClass::General => {
            let degrees = s.degrees().expect("no zero terms");
            Ordinal::omega_pow(infinite_nat_sum(&degrees))
        }
    }
}

/// The classical series `α_0 + α_1 + …`.
pub fn infinite_ord_sum(s: &OmegaSequence) -> Ordinal {
    let head = s.partial_ord_sum(s.prefix().len());
    let cycle = s
        .cycle()
        .iter()
        .fold(Ordinal::zero(), |acc, x| acc.ord_add(x));
    if cycle.is_zero() {
        return head;
    }
    head.ord_add(&cycle.ord_mul(&Ordinal::omega()))
}

/// The classical product `α_0 · α_1 · …`.
pub fn infinite_ord_prod(s: &OmegaSequence) -> Ordinal {
    match s.classify() {
        SeqClass::HasZero => Ordinal::zero(),
        SeqClass::EventuallyOne(n) => s.partial_ord_prod(n),
        SeqClass::EventuallyFinite(n) => {
            let beta = s.head(n).iter().fold(Ordinal::zero(), |acc, x| {
                acc.ord_add(x.degree().expect("nonzero"))
            });
            Ordinal::omega_pow(beta.ord_add(&Ordinal::one()))
        }
        SeqClass::General => {
            let degrees = s.degrees().expect("no zero terms");
            Ordinal::omega_pow(infinite_ord_sum(&degrees))
        }
    }
}

/// Which of the splitting identities hold at a cut `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SegueCheck {
    /// `⊗_{n≤i} α_i = ∏_{n≤i} α_i`.
    pub tails_agree: bool,
    /// `⊗ α = P_n · ⊗_{n≤i} α_i = P_n · ∏_{n≤i} α_i`.
    pub splits: bool,
    /// `⊗ α = ω^(β_0 ⊕ … ⊕ β_{n-1}) · (tail)` with `β_i = d(α_i)`; only
    /// checked for sequences with no zero term that are not eventually 1.
    pub splits_by_degree: Option<bool>,
}

impl SegueCheck {
    pub fn all(&self) -> bool {
        self.tails_agree && self.splits && self.splits_by_degree.unwrap_or(true)
    }
}

pub fn segue_check(s: &OmegaSequence, n: usize) -> SegueCheck {
    let total = infinite_nat_prod(s);
    let tail = s.tail_from(n);
    let nat_tail = infinite_nat_prod(&tail);
    let ord_tail = infinite_ord_prod(&tail);
    let p_n = s.partial_nat_prod(n);
    let splits_by_degree = (!s.has_zero() && s.eventually_one().is_none()).then(|| {
        let beta = nat_sum_list(s.head(n).iter().map(|x| x.degree().expect("nonzero")));
        let lead = Ordinal::omega_pow(beta);
        total == lead.ord_mul(&nat_tail) && total == lead.ord_mul(&ord_tail)
    });
    SegueCheck {
        tails_agree: nat_tail == ord_tail,
        splits: total == p_n.ord_mul(&nat_tail) && total == p_n.ord_mul(&ord_tail),
        splits_by_degree,
    }
}

/// Least `m` such that the identities of [`segue_check`] hold at every cut `n ≥ m`.
///
/// For `n ≥ |prefix|` every quantity involved is constant in `n`: the tail
/// products only depend on the multiset of cycle values, and the extra cycle
/// factors in `P_n` are absorbed by the tail. Scanning `0..=|prefix|+|cycle|`
/// therefore decides the threshold exactly.
pub fn segue_threshold(s: &OmegaSequence) -> usize {
    let end = s.period_end();
    let mut m = end + 1;
    for n in (0..=end).rev() {
        if !segue_check(s, n).all() {
            break;
        }
        m = n;
    }
    debug_assert!(
        m <= s.prefix().len(),
        "identities must hold past the prefix"
    );
    m
}

/// Ordinals below `x` reached by structured descent: dropping the lowest
/// monomial, decrementing a coefficient, and replacing one copy of a
/// monomial by monomials of smaller exponent with large coefficients.
pub fn descent_probes(x: &Ordinal, count: usize) -> Vec<Ordinal> {
    let mut found = BTreeSet::new();
    descend(x, 2, &mut found);
    let all: Vec<Ordinal> = found.into_iter().rev().collect();
    if all.len() <= count {
        return all;
    }
    match count {
        0 => Vec::new(),
        1 => vec![all[0].clone()],
        // evenly spaced, starting from the largest
        _ => (0..count)
            .map(|i| all[i * (all.len() - 1) / (count - 1)].clone())
            .collect(),
    }
}

const PROBE_COEFFICIENTS: [u32; 3] = [1, 5, 100];

fn descend(x: &Ordinal, depth: usize, out: &mut BTreeSet<Ordinal>) {
    let terms = x.terms();
    let Some(lead) = terms.first() else {
        return;
    };
    if terms.len() > 1 && *lead.coefficient() > 1u32.into() {
        let mut lowered = terms.to_vec();
        lowered[0] = Ordinal::term(lead.exponent().clone(), lead.coefficient() - 1u32);
        out.insert(Ordinal::from_terms_unchecked(lowered));
    }
    for (i, t) in terms.iter().enumerate() {
        let prefix = Ordinal::from_terms_unchecked(terms[..i].to_vec());
        let base = prefix.ord_add(&Ordinal::monomial(
            t.exponent().clone(),
            t.coefficient() - 1u32,
        ));
        out.insert(prefix);
        out.insert(base.clone());
        if depth == 0 || t.exponent().is_zero() {
            continue;
        }
        let mut smaller = BTreeSet::new();
        smaller.insert(Ordinal::zero());
        descend(t.exponent(), depth - 1, &mut smaller);
        for e in smaller {
            for k in PROBE_COEFFICIENTS {
                out.insert(base.ord_add(&Ordinal::monomial(e.clone(), k.into())));
            }
        }
    }
}

/// Scan limit past which no partial product is examined.
const MAX_SCAN: usize = 200_000;

/// Independent least-upper-bound check of a claimed value of `⊗_{i<ω} α_i`.
///
/// Returns true iff
/// (a) every `P_n` with `n ≤ |prefix| + |cycle| + 1` is `≤ result`, with
///     equality exactly when all terms from `n` on are 1, and no leading
///     monomial `m(P_n)` exceeds `result` up to the scan bound of `result`
///     itself, and
/// (b) for each of `probes` ordinals `V < result` obtained by structured
///     descent, some partial product exceeds `V`.
///
/// For (b) the scan stops at `n = |prefix| + |cycle|·(1 + c)`, where `c` is
/// the largest coefficient anywhere in `V` (exponents included). Past the
/// prefix each cycle adds at least one to the ω^E-coefficient of `d(P_n)`
/// (general case) or doubles the leading coefficient of `P_n` (eventually
/// finite case), so every `V` below the true supremum is passed by then.
/// Partial products past the first period are replaced by their leading
/// monomials `m(P_n) = ⊗ m(α_i) ≤ P_n`, which keeps the scan polynomial.
pub fn sup_oracle_check(s: &OmegaSequence, result: &Ordinal, probes: usize) -> Result<bool> {
    if s.has_zero() {
        return Err(Error::ZeroFactor(format!(
            "the least-upper-bound check needs nonzero terms, got {s}"
        )));
    }
    let ones_from = s.eventually_one();
    let full_limit = s.period_end() + 1;
    let mut full = Vec::with_capacity(full_limit + 1);
    let mut p = Ordinal::one();
    for n in 0..=full_limit {
        let stable = ones_from.is_some_and(|m| n >= m);
        if p > *result || (p == *result) != stable {
            return Ok(false);
        }
        full.push(p.clone());
        p = nat_prod(&p, s.term_at(n));
    }

    let mut mono = Ordinal::one();
    for n in 0..=scan_bound(s, result).unwrap_or(MAX_SCAN) {
        if mono > *result {
            return Ok(false);
        }
        mono = nat_prod(&mono, &s.term_at(n).leading_monomial());
    }

    for v in descent_probes(result, probes) {
        if !exceeded(s, &full, &v, scan_bound(s, &v)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn scan_bound(s: &OmegaSequence, v: &Ordinal) -> Result<usize> {
    let c = v.max_coefficient().to_usize().unwrap_or(usize::MAX);
    s.cycle()
        .len()
        .checked_mul(c.saturating_add(1))
        .and_then(|x| x.checked_add(s.prefix().len()))
        .filter(|&b| b <= MAX_SCAN)
        .ok_or_else(|| Error::CapExceeded {
            what: format!("scan bound for {v}"),
            limit: MAX_SCAN as u64,
        })
}

/// Whether some `P_n` with `n ≤ bound` exceeds `v`.
fn exceeded(s: &OmegaSequence, full: &[Ordinal], v: &Ordinal, bound: usize) -> bool {
    if full.iter().take(bound + 1).any(|p| p > v) {
        return true;
    }
    let mut mono = Ordinal::one();
    for n in 0..=bound {
        if n >= full.len() && mono > *v {
            return true;
        }
        mono = nat_prod(&mono, &s.term_at(n).leading_monomial());
    }
    false
}
