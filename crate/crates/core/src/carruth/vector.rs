use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::sequence::OmegaSequence;

/// An element of the finite-support product `⨉⁰ α_i`: coordinate `i` lies
/// below `α_i` and all but finitely many coordinates are 0.
#[derive(Clone, Debug)]
pub struct FinSupportVector {
    entries: BTreeMap<usize, Ordinal>,
    bounds: Arc<OmegaSequence>,
}

impl FinSupportVector {
    /// Validates every coordinate against its bound. Zero entries are dropped.
    pub fn new(bounds: Arc<OmegaSequence>, entries: BTreeMap<usize, Ordinal>) -> Result<Self> {
        if bounds.has_zero() {
            return Err(Error::ZeroFactor(format!(
                "bounds {bounds} have an empty factor"
            )));
        }
        let mut kept = BTreeMap::new();
        for (i, v) in entries {
            if v.is_zero() {
                continue;
            }
            let bound = bounds.term_at(i);
            if &v >= bound {
                return Err(Error::OutOfRange(format!(
                    "coordinate {i} is {v}, which is not below {bound}"
                )));
            }
            kept.insert(i, v);
        }
        Ok(FinSupportVector {
            entries: kept,
            bounds,
        })
    }

    pub fn zero(bounds: Arc<OmegaSequence>) -> Result<Self> {
        Self::new(bounds, BTreeMap::new())
    }

    /// The vector with a 1 at index `j` and 0 elsewhere.
    pub fn unit(bounds: Arc<OmegaSequence>, j: usize) -> Result<Self> {
        Self::new(bounds, BTreeMap::from([(j, Ordinal::one())]))
    }

    /// Coordinates `0..xs.len()` taken from `xs`.
    pub fn from_slice(bounds: Arc<OmegaSequence>, xs: &[Ordinal]) -> Result<Self> {
        Self::new(bounds, xs.iter().cloned().enumerate().collect())
    }

    pub fn bounds(&self) -> &Arc<OmegaSequence> {
        &self.bounds
    }

    pub fn entries(&self) -> &BTreeMap<usize, Ordinal> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coord(&self, i: usize) -> Ordinal {
        self.entries.get(&i).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// The first `n` coordinates.
    pub fn restrict(&self, n: usize) -> Vec<Ordinal> {
        (0..n).map(|i| self.coord(i)).collect()
    }

    /// Coordinates from `n` on, reindexed from 0 under the shifted bounds.
    pub fn tail(&self, n: usize) -> FinSupportVector {
        FinSupportVector {
            entries: self
                .entries
                .range(n..)
                .map(|(i, v)| (i - n, v.clone()))
                .collect(),
            bounds: Arc::new(self.bounds.tail_from(n)),
        }
    }

    /// Returns a copy with coordinate `i` replaced.
    pub fn with(&self, i: usize, v: Ordinal) -> Result<Self> {
        let mut entries = self.entries.clone();
        entries.insert(i, v);
        Self::new(self.bounds.clone(), entries)
    }
}

impl PartialEq for FinSupportVector {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries && same_bounds(self, other)
    }
}

impl Eq for FinSupportVector {}

impl fmt::Display for FinSupportVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{v}")?;
        }
        f.write_str("}")
    }
}

fn same_bounds(a: &FinSupportVector, b: &FinSupportVector) -> bool {
    Arc::ptr_eq(&a.bounds, &b.bounds) || a.bounds.seq_equal(&b.bounds)
}

pub(crate) fn check_bounds(a: &FinSupportVector, b: &FinSupportVector) -> Result<()> {
    if same_bounds(a, b) {
        Ok(())
    } else {
        Err(Error::BoundsMismatch(format!(
            "{} and {} live under different sequences",
            a, b
        )))
    }
}

/// Componentwise order `≤×`.
pub fn product_leq(a: &FinSupportVector, b: &FinSupportVector) -> Result<bool> {
    check_bounds(a, b)?;
    Ok(a.entries
        .iter()
        .all(|(i, v)| b.entries.get(i).is_some_and(|w| v <= w)))
}

/// Largest index at which `a` and `b` differ.
pub fn last_diff(a: &FinSupportVector, b: &FinSupportVector) -> Result<usize> {
    check_bounds(a, b)?;
    let indices: BTreeSet<usize> = a.support().chain(b.support()).collect();
    indices
        .into_iter()
        .rev()
        .find(|i| a.entries.get(i) != b.entries.get(i))
        .ok_or_else(|| Error::InvalidArgument(format!("{a} has no difference from itself")))
}
