use std::cmp::Ordering;
use std::sync::Arc;

use super::antilex::antilex_rank;
use super::natural_rank::{nary_carruth_rank, PrefixRank};
use super::vector::{check_bounds, last_diff, product_leq, FinSupportVector};
use crate::error::{Error, Result};
use crate::infinite::{infinite_ord_prod, segue_threshold};
use crate::ordinal::Ordinal;
use crate::sequence::OmegaSequence;

/// A finitely Carruth order: anti-lexicographic from index `cut` on, and
/// ordered by `prefix` on the first `cut` coordinates when the vectors agree
/// from `cut` on.
#[derive(Clone, Debug)]
pub struct FCDescriptor {
    bounds: Arc<OmegaSequence>,
    cut: usize,
    prefix: PrefixRank,
}

impl FCDescriptor {
    pub fn new(bounds: Arc<OmegaSequence>, cut: usize, prefix: PrefixRank) -> Result<Self> {
        if bounds.has_zero() {
            return Err(Error::ZeroFactor(format!(
                "bounds {bounds} have an empty factor"
            )));
        }
        if prefix.factors() != bounds.head(cut).as_slice() {
            return Err(Error::BoundsMismatch(format!(
                "prefix rank factors do not match the first {cut} bounds"
            )));
        }
        Ok(FCDescriptor {
            bounds,
            cut,
            prefix,
        })
    }

    /// The descriptor whose prefix rank is the natural-product rank.
    pub fn carruth_max(bounds: Arc<OmegaSequence>, cut: usize) -> Result<Self> {
        let prefix = nary_carruth_rank(&bounds.head(cut))?;
        Self::new(bounds, cut, prefix)
    }

    /// `carruth_max` with the cut at `max(segue_threshold, |prefix|)`.
    pub fn realizing(bounds: Arc<OmegaSequence>) -> Result<Self> {
        let cut = segue_threshold(&bounds).max(bounds.prefix().len());
        Self::carruth_max(bounds, cut)
    }

    pub fn bounds(&self) -> &Arc<OmegaSequence> {
        &self.bounds
    }

    pub fn cut(&self) -> usize {
        self.cut
    }

    pub fn prefix_rank(&self) -> &PrefixRank {
        &self.prefix
    }

    /// Order type of the prefix order.
    pub fn tau(&self) -> &Ordinal {
        self.prefix.target()
    }

    /// Order type of the whole order: `tau · ∏_{i ≥ cut} α_i`.
    pub fn target(&self) -> Ordinal {
        self.tau()
            .ord_mul(&infinite_ord_prod(&self.bounds.tail_from(self.cut)))
    }

    fn check(&self, a: &FinSupportVector) -> Result<()> {
        let probe = FinSupportVector::zero(self.bounds.clone())?;
        check_bounds(a, &probe)
    }
}

pub fn fc_cmp(d: &FCDescriptor, a: &FinSupportVector, b: &FinSupportVector) -> Result<Ordering> {
    d.check(a)?;
    check_bounds(a, b)?;
    if a == b {
        return Ok(Ordering::Equal);
    }
    let i = last_diff(a, b)?;
    if i >= d.cut {
        return Ok(a.coord(i).cmp(&b.coord(i)));
    }
    let ra = d.prefix.rank(&a.restrict(d.cut))?;
    let rb = d.prefix.rank(&b.restrict(d.cut))?;
    Ok(ra.cmp(&rb))
}

/// `tau · antilex_rank(tail) + prefix_rank(head)`.
pub fn fc_rank(d: &FCDescriptor, a: &FinSupportVector) -> Result<Ordinal> {
    d.check(a)?;
    let head = d.prefix.rank(&a.restrict(d.cut))?;
    Ok(d.tau()
        .ord_mul(&antilex_rank(&a.tail(d.cut)))
        .ord_add(&head))
}

/// Sampled check that `cmp` is locally finitely Carruth at `c` with witness
/// `n`: among samples below `c`, pairs whose last difference is at index
/// `≥ n` are ordered by that coordinate. Also checks that `cmp` extends the
/// componentwise order on all samples. A `false` comes with a violating pair
/// among the samples.
pub fn locally_fc_check<F>(
    cmp: F,
    c: &FinSupportVector,
    n: usize,
    samples: &[FinSupportVector],
) -> bool
where
    F: Fn(&FinSupportVector, &FinSupportVector) -> Ordering,
{
    for a in samples {
        for b in samples {
            if a != b && product_leq(a, b).unwrap_or(false) && cmp(a, b) != Ordering::Less {
                return false;
            }
        }
    }
    let below: Vec<&FinSupportVector> = samples
        .iter()
        .filter(|a| cmp(a, c) == Ordering::Less)
        .collect();
    for (k, a) in below.iter().enumerate() {
        for b in &below[k + 1..] {
            let Ok(i) = last_diff(a, b) else {
                continue;
            };
            if i >= n && cmp(a, b) != a.coord(i).cmp(&b.coord(i)) {
                return false;
            }
        }
    }
    true
}

/// A vector strictly above `a` componentwise, if one exists. None exists
/// exactly when `a` is the maximum, which requires the bounds to be
/// eventually 1.
pub fn strictly_above(a: &FinSupportVector) -> Option<FinSupportVector> {
    let bounds = a.bounds();
    let start = a
        .max_index()
        .map_or(0, |i| i + 1)
        .max(bounds.prefix().len());
    if let Some(j) = (start..start + bounds.cycle().len()).find(|&j| !bounds.term_at(j).is_one()) {
        return a.with(j, Ordinal::one()).ok();
    }
    (0..start).find_map(|i| {
        let up = a.coord(i).ord_add(&Ordinal::one());
        (&up < bounds.term_at(i))
            .then(|| a.with(i, up).ok())
            .flatten()
    })
}
