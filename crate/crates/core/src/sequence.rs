//! Eventually periodic ω-sequences of ordinals.
//!
//! An [`OmegaSequence`] is a finite prefix followed by a nonempty cycle
//! repeated forever. Every tail predicate used by the closed forms
//! ("some term is 0", "eventually 1", "eventually finite") is decidable by
//! inspecting the prefix and the cycle.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::natural::{nat_prod, nat_sum};
use crate::ordinal::Ordinal;

#[derive(Clone, Debug)]
pub struct OmegaSequence {
    prefix: Vec<Ordinal>,
    cycle: Vec<Ordinal>,
}

/// The case split used to evaluate infinite natural products.
///
/// `n` is the least index from which the tail condition holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqClass {
    HasZero,
    EventuallyOne(usize),
    EventuallyFinite(usize),
    General,
}

impl fmt::Display for SeqClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqClass::HasZero => f.write_str("HasZero"),
            SeqClass::EventuallyOne(n) => write!(f, "EventuallyOne({n})"),
            SeqClass::EventuallyFinite(n) => write!(f, "EventuallyFinite({n})"),
            SeqClass::General => f.write_str("General"),
        }
    }
}

impl OmegaSequence {
    pub fn new(prefix: Vec<Ordinal>, cycle: Vec<Ordinal>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidArgument(
                "the cycle of a sequence must be nonempty".into(),
            ));
        }
        Ok(OmegaSequence { prefix, cycle })
    }

    /// The constant sequence `x, x, x, ...`.
    pub fn constant(x: Ordinal) -> Self {
        OmegaSequence {
            prefix: Vec::new(),
            cycle: vec![x],
        }
    }

    pub fn prefix(&self) -> &[Ordinal] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[Ordinal] {
        &self.cycle
    }

    /// `|prefix| + |cycle|`: every tail from here on repeats one already seen.
    pub fn period_end(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    pub fn term_at(&self, i: usize) -> &Ordinal {
        match self.prefix.get(i) {
            Some(x) => x,
            None => &self.cycle[(i - self.prefix.len()) % self.cycle.len()],
        }
    }

    /// The first `n` terms.
    pub fn head(&self, n: usize) -> Vec<Ordinal> {
        (0..n).map(|i| self.term_at(i).clone()).collect()
    }

    fn terms(&self) -> impl Iterator<Item = &Ordinal> {
        self.prefix.iter().chain(&self.cycle)
    }

    pub fn has_zero(&self) -> bool {
        self.terms().any(Ordinal::is_zero)
    }

    /// Least `n` such that every term from index `n` on satisfies `pred`,
    /// or `None` if the cycle does not satisfy it.
    fn tail_cut(&self, pred: impl Fn(&Ordinal) -> bool) -> Option<usize> {
        if !self.cycle.iter().all(&pred) {
            return None;
        }
        let mut n = self.prefix.len();
        while n > 0 && pred(&self.prefix[n - 1]) {
            n -= 1;
        }
        Some(n)
    }

    /// Least `n` with `α_i = 1` for all `i ≥ n`.
    pub fn eventually_one(&self) -> Option<usize> {
        self.tail_cut(Ordinal::is_one)
    }

    /// Least `n` with `α_i < ω` for all `i ≥ n`.
    pub fn eventually_finite(&self) -> Option<usize> {
        self.tail_cut(Ordinal::is_finite)
    }

    pub fn classify(&self) -> SeqClass {
        if self.has_zero() {
            SeqClass::HasZero
        } else if let Some(n) = self.eventually_one() {
            SeqClass::EventuallyOne(n)
        } else if let Some(n) = self.eventually_finite() {
            SeqClass::EventuallyFinite(n)
        } else {
            SeqClass::General
        }
    }

    /// `P_n = α_0 ⊗ … ⊗ α_{n-1}`, with `P_0 = 1`.
    pub fn partial_nat_prod(&self, n: usize) -> Ordinal {
        (0..n).fold(Ordinal::one(), |acc, i| nat_prod(&acc, self.term_at(i)))
    }

    /// `B_n = α_0 ⊕ … ⊕ α_{n-1}`, with `B_0 = 0`.
    pub fn partial_nat_sum(&self, n: usize) -> Ordinal {
        (0..n).fold(Ordinal::zero(), |acc, i| nat_sum(&acc, self.term_at(i)))
    }

    /// Classical left fold `α_0 · … · α_{n-1}`.
    pub fn partial_ord_prod(&self, n: usize) -> Ordinal {
        (0..n).fold(Ordinal::one(), |acc, i| acc.ord_mul(self.term_at(i)))
    }

    /// Classical left fold `α_0 + … + α_{n-1}`.
    pub fn partial_ord_sum(&self, n: usize) -> Ordinal {
        (0..n).fold(Ordinal::zero(), |acc, i| acc.ord_add(self.term_at(i)))
    }

    /// Extensional equality: the two sequences agree at every index.
    pub fn seq_equal(&self, other: &OmegaSequence) -> bool {
        let bound =
            self.prefix.len().max(other.prefix.len()) + self.cycle.len().lcm(&other.cycle.len());
        (0..bound).all(|i| self.term_at(i) == other.term_at(i))
    }

    /// The sequence `α_n, α_{n+1}, ...`.
    pub fn tail_from(&self, n: usize) -> OmegaSequence {
        if n <= self.prefix.len() {
            return OmegaSequence {
                prefix: self.prefix[n..].to_vec(),
                cycle: self.cycle.clone(),
            };
        }
        let shift = (n - self.prefix.len()) % self.cycle.len();
        self.rotate_cycle(shift).tail_from(self.prefix.len())
    }

    /// Same prefix; the cycle rotated left by `r` positions.
    ///
    /// The result is a rearrangement of the original: every cycle value
    /// occurs infinitely often in both.
    pub fn rotate_cycle(&self, r: usize) -> OmegaSequence {
        let mut cycle = self.cycle.clone();
        let len = cycle.len();
        cycle.rotate_left(r % len);
        OmegaSequence {
            prefix: self.prefix.clone(),
            cycle,
        }
    }

    pub fn map(&self, f: impl Fn(&Ordinal) -> Ordinal) -> OmegaSequence {
        OmegaSequence {
            prefix: self.prefix.iter().map(&f).collect(),
            cycle: self.cycle.iter().map(&f).collect(),
        }
    }

    fn try_map(&self, f: impl Fn(&Ordinal) -> Result<Ordinal>) -> Result<OmegaSequence> {
        Ok(OmegaSequence {
            prefix: self.prefix.iter().map(&f).collect::<Result<_>>()?,
            cycle: self.cycle.iter().map(&f).collect::<Result<_>>()?,
        })
    }

    /// Termwise degree `d(α_i)`; fails if some term is 0.
    pub fn degrees(&self) -> Result<OmegaSequence> {
        self.try_map(|x| x.degree().cloned())
    }

    /// Termwise leading monomial `m(α_i)`.
    pub fn monomials(&self) -> OmegaSequence {
        self.map(Ordinal::leading_monomial)
    }

    /// Applies a permutation `σ` of `{0..N-1}` to the first `N = σ.len()`
    /// indices: the result holds `α_{σ(i)}` at each index `i < N`.
    pub fn permute_head(&self, sigma: &[usize]) -> Result<OmegaSequence> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &j in sigma {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidArgument(format!(
                    "{sigma:?} is not a permutation of 0..{n}"
                )));
            }
        }
        let tail = self.tail_from(n);
        let mut prefix: Vec<Ordinal> = sigma.iter().map(|&j| self.term_at(j).clone()).collect();
        prefix.extend(tail.prefix);
        Ok(OmegaSequence {
            prefix,
            cycle: tail.cycle,
        })
    }

    /// Replaces consecutive blocks of `k` terms by their natural product.
    pub fn regroup(&self, k: usize) -> Result<OmegaSequence> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "block size must be at least 1".into(),
            ));
        }
        let p = self.prefix.len().div_ceil(k) * k;
        let tail = self.tail_from(p);
        let c = tail.cycle.len().lcm(&k);
        let block = |start: usize, len: usize, seq: &OmegaSequence| -> Vec<Ordinal> {
            (0..len / k)
                .map(|b| {
                    (0..k).fold(Ordinal::one(), |acc, j| {
                        nat_prod(&acc, seq.term_at(start + b * k + j))
                    })
                })
                .collect()
        };
        Ok(OmegaSequence {
            prefix: block(0, p, self),
            cycle: block(0, c, &tail),
        })
    }
}

impl fmt::Display for OmegaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Ordinal]| {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        if self.prefix.is_empty() {
            write!(f, "[; {}]", join(&self.cycle))
        } else {
            write!(f, "[{} ; {}]", join(&self.prefix), join(&self.cycle))
        }
    }
}
