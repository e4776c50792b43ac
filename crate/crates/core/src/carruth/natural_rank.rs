//! Rank functions on finite products `α_0 × … × α_{n-1}` that are strictly
//! increasing in every coordinate and map bijectively onto the natural
//! product `α_0 ⊗ … ⊗ α_{n-1}`.
//!
//! For two factors `α = Σ ω^{a_k}·m_k` and `β = Σ ω^{b_l}·n_l`, a pair
//! `(x, y)` falls in block `(k, l)` when `x` leaves `α` at its `k`-th term
//! with copy index `c < m_k` and offset `x' < ω^{a_k}`, and likewise for `y`.
//! Blocks of equal exponent `e = a_k ⊕ b_l` share the slot `ω^e` of the
//! target; they are laid out by increasing `k`, each as an `m_k × n_l` grid
//! of copies read row by row. Inside a copy the offsets are combined by a
//! monomial rank `ω^a × ω^b → ω^(a⊕b)` that sends the CNF exponents of `x'`
//! and `y'` to disjoint parts of `a ⊕ b`, then takes the natural sum.

use crate::error::{Error, Result};
use crate::natural::{nat_prod, nat_sum};
use crate::ordinal::{Natural, Ordinal};

/// A bijective, coordinatewise strictly monotone rank on a finite product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixRank {
    factors: Vec<Ordinal>,
    /// `partials[i]` is the natural product of the first `i` factors.
    partials: Vec<Ordinal>,
}

/// The rank on `α × β` onto `α ⊗ β`.
pub fn natural_product_rank(alpha: &Ordinal, beta: &Ordinal) -> Result<PrefixRank> {
    nary_carruth_rank(&[alpha.clone(), beta.clone()])
}

/// Left fold of the two-factor rank: the tuple `(x_0, …, x_i)` is ranked as
/// the pair (rank of `(x_0, …, x_{i-1})`, `x_i`).
pub fn nary_carruth_rank(factors: &[Ordinal]) -> Result<PrefixRank> {
    if let Some(i) = factors.iter().position(Ordinal::is_zero) {
        return Err(Error::ZeroFactor(format!("factor {i} is 0")));
    }
    let mut partials = vec![Ordinal::one()];
    for f in factors {
        let next = nat_prod(partials.last().expect("nonempty"), f);
        partials.push(next);
    }
    Ok(PrefixRank {
        factors: factors.to_vec(),
        partials,
    })
}

impl PrefixRank {
    pub fn factors(&self) -> &[Ordinal] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    /// The order type of the product under this rank.
    pub fn target(&self) -> &Ordinal {
        self.partials.last().expect("nonempty")
    }

    pub fn rank(&self, xs: &[Ordinal]) -> Result<Ordinal> {
        if xs.len() != self.factors.len() {
            return Err(Error::BoundsMismatch(format!(
                "expected {} coordinates, got {}",
                self.factors.len(),
                xs.len()
            )));
        }
        let mut acc = Ordinal::zero();
        for (i, (x, f)) in xs.iter().zip(&self.factors).enumerate() {
            if x >= f {
                return Err(Error::OutOfRange(format!(
                    "coordinate {i} is {x}, which is not below {f}"
                )));
            }
            acc = pair_rank(&self.partials[i], f, &self.partials[i + 1], &acc, x);
        }
        Ok(acc)
    }

    pub fn unrank(&self, r: &Ordinal) -> Result<Vec<Ordinal>> {
        if r >= self.target() {
            return Err(Error::OutOfRange(format!(
                "{r} is not below {}",
                self.target()
            )));
        }
        let mut out = Vec::with_capacity(self.factors.len());
        let mut acc = r.clone();
        for i in (0..self.factors.len()).rev() {
            let (rest, x) = pair_unrank(
                &self.partials[i],
                &self.factors[i],
                &self.partials[i + 1],
                &acc,
            );
            out.push(x);
            acc = rest;
        }
        out.reverse();
        Ok(out)
    }
}

/// Exponent of `β` whose natural sum with `a` is `e`, with its coefficient.
fn partner(beta: &Ordinal, a: &Ordinal, e: &Ordinal) -> Option<Natural> {
    beta.terms()
        .iter()
        .find(|t| &nat_sum(a, t.exponent()) == e)
        .map(|t| t.coefficient().clone())
}

fn rebuild(head: &Ordinal, e: &Ordinal, q: Natural, rest: &Ordinal) -> Ordinal {
    head.part_above(e)
        .ord_add(&Ordinal::monomial(e.clone(), q))
        .ord_add(rest)
}

fn pair_rank(
    alpha: &Ordinal,
    beta: &Ordinal,
    target: &Ordinal,
    x: &Ordinal,
    y: &Ordinal,
) -> Ordinal {
    let (a, c, x_off) = alpha.locate(x).expect("x below alpha");
    let (b, d, y_off) = beta.locate(y).expect("y below beta");
    let e = nat_sum(&a, &b);
    let n_l = beta.coefficient_at(&b);
    let mut count = Natural::default();
    for t in alpha.terms().iter().take_while(|t| t.exponent() > &a) {
        if let Some(n) = partner(beta, t.exponent(), &e) {
            count += t.coefficient() * n;
        }
    }
    count += c * n_l + d;
    rebuild(target, &e, count, &monomial_rank(&a, &b, &x_off, &y_off))
}

fn pair_unrank(
    alpha: &Ordinal,
    beta: &Ordinal,
    target: &Ordinal,
    r: &Ordinal,
) -> (Ordinal, Ordinal) {
    let (e, mut q, r_off) = target.locate(r).expect("r below target");
    for t in alpha.terms() {
        let Some(n_l) = partner(beta, t.exponent(), &e) else {
            continue;
        };
        let block = t.coefficient() * &n_l;
        if q >= block {
            q -= block;
            continue;
        }
        let a = t.exponent();
        let b = beta
            .terms()
            .iter()
            .map(|s| s.exponent())
            .find(|b| nat_sum(a, b) == e)
            .expect("partner exists");
        let (x_off, y_off) = monomial_unrank(a, b, &r_off);
        let x = rebuild(alpha, a, &q / &n_l, &x_off);
        let y = rebuild(beta, b, &q % &n_l, &y_off);
        return (x, y);
    }
    unreachable!("the copy index lies inside the slot of exponent {e}")
}

/// Sends `u < a` to its position among the `a`-side exponents of `a ⊕ b`.
fn push_left(a: &Ordinal, s: &Ordinal, u: &Ordinal) -> Ordinal {
    let (e, c, rest) = a.locate(u).expect("u below a");
    rebuild(s, &e, c, &rest)
}

/// Sends `v < b` to its position among the `b`-side exponents of `a ⊕ b`.
fn push_right(a: &Ordinal, b: &Ordinal, s: &Ordinal, v: &Ordinal) -> Ordinal {
    let (e, d, rest) = b.locate(v).expect("v below b");
    let shift = a.coefficient_at(&e);
    rebuild(s, &e, shift + d, &rest)
}

enum Side {
    Left(Ordinal),
    Right(Ordinal),
}

fn pull(a: &Ordinal, b: &Ordinal, s: &Ordinal, z: &Ordinal) -> Side {
    let (e, q, rest) = s.locate(z).expect("z below a # b");
    let shift = a.coefficient_at(&e);
    if q < shift {
        Side::Left(rebuild(a, &e, q, &rest))
    } else {
        Side::Right(rebuild(b, &e, q - shift, &rest))
    }
}

fn map_exponents(x: &Ordinal, f: impl Fn(&Ordinal) -> Ordinal) -> Ordinal {
    Ordinal::from_terms_unchecked(
        x.terms()
            .iter()
            .map(|t| Ordinal::term(f(t.exponent()), t.coefficient().clone()))
            .collect(),
    )
}

fn monomial_rank(a: &Ordinal, b: &Ordinal, x: &Ordinal, y: &Ordinal) -> Ordinal {
    let s = nat_sum(a, b);
    let px = map_exponents(x, |u| push_left(a, &s, u));
    let py = map_exponents(y, |v| push_right(a, b, &s, v));
    nat_sum(&px, &py)
}

fn monomial_unrank(a: &Ordinal, b: &Ordinal, r: &Ordinal) -> (Ordinal, Ordinal) {
    let s = nat_sum(a, b);
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for t in r.terms() {
        match pull(a, b, &s, t.exponent()) {
            Side::Left(u) => xs.push(Ordinal::term(u, t.coefficient().clone())),
            Side::Right(v) => ys.push(Ordinal::term(v, t.coefficient().clone())),
        }
    }
    (
        Ordinal::from_terms_unchecked(xs),
        Ordinal::from_terms_unchecked(ys),
    )
}
