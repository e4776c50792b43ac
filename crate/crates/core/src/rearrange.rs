//! Values attainable by rearranging a sum or product.
//!
//! A classical series or product over ω takes only finitely many values
//! under all permutations of its terms. The closed forms here enumerate
//! those values; [`arrangement_oracle`] recomputes the sum values by brute
//! force over head permutations.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::infinite::{cycle_degree, infinite_ord_sum};
use crate::ordinal::Ordinal;
use crate::sequence::OmegaSequence;

/// Size limits for the enumerations in this module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest list handed to the finite value-set enumerations.
    pub max_specials: usize,
    /// Largest number of head permutations the brute-force oracle may visit.
    pub max_perms: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_specials: 8,
            max_perms: 3_628_800,
        }
    }
}

/// A nonempty, sorted, duplicate-free set of ordinals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueSet(BTreeSet<Ordinal>);

impl ValueSet {
    fn new(values: BTreeSet<Ordinal>) -> Self {
        debug_assert!(!values.is_empty());
        ValueSet(values)
    }

    pub fn singleton(x: Ordinal) -> Self {
        ValueSet(BTreeSet::from([x]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Ordinal> {
        self.0.iter()
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        self.0.contains(x)
    }

    pub fn is_subset(&self, other: &ValueSet) -> bool {
        self.0.is_subset(&other.0)
    }

    fn map(&self, f: impl Fn(&Ordinal) -> Ordinal) -> ValueSet {
        ValueSet::new(self.0.iter().map(f).collect())
    }
}

impl fmt::Display for ValueSet {
    /// One ordinal per line, ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// All classical left folds of `xs` over every ordering, computed by a
/// dynamic program over subsets (the last element of each ordering is
/// appended to every value of the remaining subset).
fn fold_values(
    xs: &[Ordinal],
    caps: &Caps,
    identity: Ordinal,
    op: impl Fn(&Ordinal, &Ordinal) -> Ordinal,
) -> Result<ValueSet> {
    if xs.len() > caps.max_specials {
        return Err(Error::CapExceeded {
            what: format!("list of {} terms", xs.len()),
            limit: caps.max_specials as u64,
        });
    }
    let full = (1usize << xs.len()) - 1;
    let mut table: Vec<BTreeSet<Ordinal>> = vec![BTreeSet::new(); full + 1];
    table[0].insert(identity);
    for mask in 1..=full {
        let mut here = BTreeSet::new();
        for (i, x) in xs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for v in &table[mask & !(1 << i)] {
                    here.insert(op(v, x));
                }
            }
        }
        table[mask] = here;
    }
    Ok(ValueSet::new(std::mem::take(&mut table[full])))
}

pub fn finite_sum_values(xs: &[Ordinal], caps: &Caps) -> Result<ValueSet> {
    fold_values(xs, caps, Ordinal::zero(), Ordinal::ord_add)
}

pub fn finite_prod_values(xs: &[Ordinal], caps: &Caps) -> Result<ValueSet> {
    fold_values(xs, caps, Ordinal::one(), Ordinal::ord_mul)
}

/// Values of `Σ γ_i` over all rearrangements `γ` of `s`.
///
/// Let `D` be the largest degree of a nonzero cycle value and call a term
/// special when its degree exceeds `D`; specials occur only in the prefix.
/// In any rearrangement, a non-special term sitting before some special is
/// absorbed by it, and the infinite remainder after the last special sums to
/// exactly `ω^(D+1)` (its partial sums stay below `ω^(D+1)` yet pass every
/// `ω^D·k`). So a rearrangement's value depends only on the order of the
/// specials, every order is reachable, and the value is
/// `(specials in that order) + ω^(D+1)`.
pub fn inf_sum_values(s: &OmegaSequence, caps: &Caps) -> Result<ValueSet> {
    let Some(d) = cycle_degree(s) else {
        let nonzero: Vec<Ordinal> = s
            .prefix()
            .iter()
            .filter(|x| !x.is_zero())
            .cloned()
            .collect();
        return finite_sum_values(&nonzero, caps);
    };
    let tail = Ordinal::omega_pow(d.ord_add(&Ordinal::one()));
    let specials: Vec<Ordinal> = s
        .prefix()
        .iter()
        .filter(|x| x.degree().is_ok_and(|e| e > d))
        .cloned()
        .collect();
    Ok(finite_sum_values(&specials, caps)?.map(|v| v.ord_add(&tail)))
}

/// Values of `∏ γ_i` over all rearrangements `γ` of `s`.
///
/// Products reduce to sums of degrees: with infinitely many infinite terms
/// every rearrangement gives `ω^(Σ d(γ_i))`; with finitely many it gives
/// `ω^(δ+1)` with `δ` the sum of the infinite terms' degrees in their
/// rearranged order (finite terms have degree 0).
pub fn inf_prod_values(s: &OmegaSequence, caps: &Caps) -> Result<ValueSet> {
    if s.has_zero() {
        return Ok(ValueSet::singleton(Ordinal::zero()));
    }
    if s.eventually_one().is_some() {
        let non_one: Vec<Ordinal> = s.prefix().iter().filter(|x| !x.is_one()).cloned().collect();
        return finite_prod_values(&non_one, caps);
    }
    if s.eventually_finite().is_some() {
        let degrees: Vec<Ordinal> = s
            .prefix()
            .iter()
            .filter(|x| !x.is_finite())
            .map(|x| x.degree().expect("nonzero").clone())
            .collect();
        return Ok(finite_sum_values(&degrees, caps)?
            .map(|d| Ordinal::omega_pow(d.ord_add(&Ordinal::one()))));
    }
    let degrees = s.degrees()?;
    Ok(inf_sum_values(&degrees, caps)?.map(|d| Ordinal::omega_pow(d.clone())))
}

/// Rearranges `xs` into the next lexicographic permutation; false after the last.
fn next_permutation(xs: &mut [Ordinal]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len())
        .rev()
        .find(|&j| xs[j] > xs[i - 1])
        .expect("pivot has a successor");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

fn factorial_within(n: usize, cap: u64) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k).filter(|&v| v <= cap))
}

/// Brute force: `Σ` of every sequence obtained from `s` by permuting its
/// first `n` terms, keeping the periodic tail. Permutations of equal terms
/// are visited once.
pub fn arrangement_oracle(s: &OmegaSequence, n: usize, caps: &Caps) -> Result<ValueSet> {
    if n < s.prefix().len() {
        return Err(Error::InvalidArgument(format!(
            "head length {n} is shorter than the prefix ({})",
            s.prefix().len()
        )));
    }
    if factorial_within(n, caps.max_perms).is_none() {
        return Err(Error::CapExceeded {
            what: format!("{n}! head permutations"),
            limit: caps.max_perms,
        });
    }
    let tail = s.tail_from(n);
    let mut head = s.head(n);
    head.sort();
    let mut values = BTreeSet::new();
    loop {
        let mut prefix = head.clone();
        prefix.extend_from_slice(tail.prefix());
        let arranged = OmegaSequence::new(prefix, tail.cycle().to_vec())?;
        values.insert(infinite_ord_sum(&arranged));
        if !next_permutation(&mut head) {
            break;
        }
    }
    Ok(ValueSet::new(values))
}

/// Result of running [`arrangement_oracle`] over growing head lengths.
#[derive(Clone, Debug)]
pub struct Stabilized {
    pub values: ValueSet,
    /// Least head length from which the value set no longer changed.
    pub stable_from: usize,
    /// Largest head length examined (`|prefix| + 2·|cycle|`).
    pub examined_to: usize,
}

/// Runs the oracle for head lengths `|prefix| ..= |prefix| + 2·|cycle|`.
/// The sets must grow monotonically; a shrinking set is reported as an error.
pub fn stable_arrangement_values(s: &OmegaSequence, caps: &Caps) -> Result<Stabilized> {
    let start = s.prefix().len();
    let end = start + 2 * s.cycle().len();
    let mut values = arrangement_oracle(s, start, caps)?;
    let mut stable_from = start;
    for n in start + 1..=end {
        let next = arrangement_oracle(s, n, caps)?;
        if !values.is_subset(&next) {
            return Err(Error::InvalidArgument(format!(
                "arrangement values shrank between head lengths {} and {n}",
                n - 1
            )));
        }
        if next != values {
            stable_from = n;
            values = next;
        }
    }
    Ok(Stabilized {
        values,
        stable_from,
        examined_to: end,
    })
}
