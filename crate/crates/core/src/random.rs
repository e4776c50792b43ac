//! Seeded generators for ordinals, sequences and vectors.
//!
//! Used by the self-test suites and by the property tests. Output depends
//! only on the seed and the stream number.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carruth::FinSupportVector;
use crate::ordinal::{Natural, Ordinal};
use crate::sequence::{OmegaSequence, SeqClass};

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// An independent generator for the same seed.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Gen { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below_usize(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn coefficient(&mut self, max: u64) -> Natural {
        Natural::from(self.rng.gen_range(1..=max))
    }

    /// A random ordinal whose exponent tree has height at most `depth`,
    /// with up to three terms and coefficients at most 4. May be 0.
    pub fn ordinal(&mut self, depth: usize) -> Ordinal {
        let len = self.rng.gen_range(0..=3);
        self.ordinal_with_terms(depth, len)
    }

    pub fn nonzero_ordinal(&mut self, depth: usize) -> Ordinal {
        let len = self.rng.gen_range(1..=3);
        self.ordinal_with_terms(depth, len)
    }

    fn ordinal_with_terms(&mut self, depth: usize, len: usize) -> Ordinal {
        let mut exps: Vec<Ordinal> = (0..len)
            .map(|_| {
                if depth == 0 {
                    Ordinal::zero()
                } else {
                    self.ordinal(depth - 1)
                }
            })
            .collect();
        exps.sort();
        exps.dedup();
        exps.reverse();
        let terms = exps.into_iter().map(|e| (e, self.coefficient(4))).collect();
        Ordinal::from_terms(terms).expect("sorted distinct exponents")
    }

    /// A sequence entry: mostly small values, with `0`, `1` and finite
    /// numbers frequent enough to reach every classification.
    fn entry(&mut self) -> Ordinal {
        match self.rng.gen_range(0..10) {
            0..=1 => Ordinal::finite(self.rng.gen_range(1u32..=4)),
            2 => Ordinal::one(),
            _ => self.nonzero_ordinal(2),
        }
    }

    fn finite_entry(&mut self) -> Ordinal {
        Ordinal::finite(self.rng.gen_range(1u32..=4))
    }

    /// A random sequence whose class is chosen uniformly among the four.
    pub fn sequence(&mut self) -> OmegaSequence {
        let class = self.rng.gen_range(0..4);
        self.sequence_of_class(class)
    }

    /// A random sequence without zero terms.
    pub fn nonzero_sequence(&mut self) -> OmegaSequence {
        let class = self.rng.gen_range(1..4);
        self.sequence_of_class(class)
    }

    /// `class`: 0 has a zero, 1 eventually one, 2 eventually finite, 3 general.
    pub fn sequence_of_class(&mut self, class: u8) -> OmegaSequence {
        let p = self.rng.gen_range(0..=3);
        let c = self.rng.gen_range(1..=2);
        let mut prefix: Vec<Ordinal> = (0..p).map(|_| self.entry()).collect();
        let cycle: Vec<Ordinal> = match class {
            1 => vec![Ordinal::one(); c],
            2 => {
                let mut cyc: Vec<Ordinal> = (0..c).map(|_| self.finite_entry()).collect();
                if cyc.iter().all(Ordinal::is_one) {
                    cyc[0] = Ordinal::from(2);
                }
                cyc
            }
            _ => {
                let mut cyc: Vec<Ordinal> = (0..c).map(|_| self.entry()).collect();
                if cyc.iter().all(Ordinal::is_finite) {
                    let k = self.below_usize(c);
                    cyc[k] = self.nonzero_ordinal(2).ord_add(&Ordinal::omega());
                }
                cyc
            }
        };
        let mut cycle = cycle;
        if class == 0 {
            let slot = self.below_usize(prefix.len() + cycle.len());
            if slot < prefix.len() {
                prefix[slot] = Ordinal::zero();
            } else {
                cycle[slot - prefix.len()] = Ordinal::zero();
            }
        }
        let s = OmegaSequence::new(prefix, cycle).expect("nonempty cycle");
        debug_assert!(match class {
            0 => s.classify() == SeqClass::HasZero,
            1 => matches!(s.classify(), SeqClass::EventuallyOne(_)),
            2 => matches!(s.classify(), SeqClass::EventuallyFinite(_)),
            _ => s.classify() == SeqClass::General,
        });
        s
    }

    /// A random ordinal strictly below `alpha`, which must be nonzero.
    pub fn below(&mut self, alpha: &Ordinal) -> Ordinal {
        assert!(!alpha.is_zero(), "nothing lies below 0");
        let terms = alpha.terms();
        let i = self.below_usize(terms.len());
        let t = &terms[i];
        let c = match t.coefficient().to_u64() {
            Some(k) => Natural::from(self.rng.gen_range(0..k)),
            None => t.coefficient() - 1u32,
        };
        let head = alpha.part_above(t.exponent());
        let rest = self.below_power(t.exponent());
        head.ord_add(&Ordinal::monomial(t.exponent().clone(), c))
            .ord_add(&rest)
    }

    /// A random ordinal below `ω^e`.
    fn below_power(&mut self, e: &Ordinal) -> Ordinal {
        if e.is_zero() {
            return Ordinal::zero();
        }
        let len = self.rng.gen_range(0..=2);
        let mut exps: Vec<Ordinal> = (0..len).map(|_| self.below(e)).collect();
        exps.sort();
        exps.dedup();
        exps.reverse();
        let terms = exps.into_iter().map(|x| (x, self.coefficient(4))).collect();
        Ordinal::from_terms(terms).expect("sorted distinct exponents")
    }

    /// A random vector supported on indices below `len`.
    pub fn vector(&mut self, bounds: &Arc<OmegaSequence>, len: usize) -> FinSupportVector {
        let mut entries = BTreeMap::new();
        for i in 0..len {
            if self.chance(0.5) {
                entries.insert(i, self.below(bounds.term_at(i)));
            }
        }
        FinSupportVector::new(bounds.clone(), entries).expect("coordinates below their bounds")
    }
}
