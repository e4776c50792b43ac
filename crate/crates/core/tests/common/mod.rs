//! Test-only oracles, written independently of the library's closed forms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use natprod::parse::{parse, parse_sequence};
use natprod::{OmegaSequence, Ordinal};

pub fn ord(s: &str) -> Ordinal {
    parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn seq(s: &str) -> OmegaSequence {
    parse_sequence(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// A plain polynomial model of Cantor normal form, with coefficients in u128.
/// Terms are kept in descending exponent order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cnf(pub Vec<(Cnf, u128)>);

impl Cnf {
    pub fn of(x: &Ordinal) -> Cnf {
        Cnf(x
            .terms()
            .iter()
            .map(|t| {
                let k: u128 = t.coefficient().try_into().expect("coefficient fits");
                (Cnf::of(t.exponent()), k)
            })
            .collect())
    }

    fn from_map(m: BTreeMap<Cnf, u128>) -> Cnf {
        Cnf(m.into_iter().rev().filter(|(_, k)| *k > 0).collect())
    }

    pub fn hsum(&self, other: &Cnf) -> Cnf {
        let mut m = BTreeMap::new();
        for (e, k) in self.0.iter().chain(&other.0) {
            *m.entry(e.clone()).or_insert(0) += k;
        }
        Cnf::from_map(m)
    }

    pub fn hprod(&self, other: &Cnf) -> Cnf {
        let mut m = BTreeMap::new();
        for (e, k) in &self.0 {
            for (f, l) in &other.0 {
                *m.entry(e.hsum(f)).or_insert(0) += k * l;
            }
        }
        Cnf::from_map(m)
    }
}

/// Least-upper-bound check for an increasing family `f(0), f(1), …`:
/// every `f(n)` with `n < scan` is at most `limit`, and every probe below
/// `limit` is exceeded by some `f(n)` with `n < scan`.
pub fn is_limit(
    f: impl Fn(usize) -> Ordinal,
    limit: &Ordinal,
    probes: &[Ordinal],
    scan: usize,
) -> bool {
    let values: Vec<Ordinal> = (0..scan).map(f).collect();
    values.iter().all(|v| v <= limit)
        && probes
            .iter()
            .all(|p| p >= limit || values.iter().any(|v| v > p))
}

/// Probes just below a limit ordinal `λ = γ + ω^e·k` (with `e > 0`): the
/// ordinals `γ + ω^e·(k-1) + ω^f·m` for a few `f < e` and large `m`.
pub fn probes_below_limit(limit: &Ordinal) -> Vec<Ordinal> {
    let terms = limit.terms();
    let last = terms.last().expect("nonzero limit");
    let e = last.exponent();
    assert!(!e.is_zero(), "{limit} is a successor");
    let k: u64 = last.coefficient().try_into().expect("small coefficient");
    let head = Ordinal::from_terms(
        terms[..terms.len() - 1]
            .iter()
            .map(|t| (t.exponent().clone(), t.coefficient().clone()))
            .collect(),
    )
    .expect("canonical");
    let base = head.ord_add(&Ordinal::monomial(e.clone(), (k - 1).into()));
    let mut fs = vec![Ordinal::zero()];
    // Exponents just below e: its predecessor if e is a successor, otherwise
    // e with its last term dropped plus a finite tail.
    match e.predecessor() {
        Some(p) => fs.push(p),
        None => {
            let eterms = e.terms();
            let elast = eterms.last().expect("nonzero");
            let mut lower: Vec<(Ordinal, natprod::Natural)> = eterms[..eterms.len() - 1]
                .iter()
                .map(|t| (t.exponent().clone(), t.coefficient().clone()))
                .collect();
            let c: u64 = elast.coefficient().try_into().expect("small");
            if c > 1 {
                lower.push((elast.exponent().clone(), (c - 1).into()));
            }
            let stem = Ordinal::from_terms(lower).expect("canonical");
            fs.push(stem.ord_add(&Ordinal::from(7)));
        }
    }
    let mut out = Vec::new();
    for f in fs {
        for m in [1u64, 3, 40] {
            out.push(base.ord_add(&Ordinal::monomial(f.clone(), m.into())));
        }
    }
    out
}

/// Every ordering of `xs`, folded with `op` from the identity.
pub fn all_orderings(
    xs: &[Ordinal],
    identity: Ordinal,
    op: fn(&Ordinal, &Ordinal) -> Ordinal,
) -> Vec<Ordinal> {
    fn go(
        rest: &mut Vec<Ordinal>,
        acc: Ordinal,
        op: fn(&Ordinal, &Ordinal) -> Ordinal,
        out: &mut Vec<Ordinal>,
    ) {
        if rest.is_empty() {
            out.push(acc);
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            go(rest, op(&acc, &x), op, out);
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut xs.to_vec(), identity, op, &mut out);
    out.sort();
    out.dedup();
    out
}

impl Cnf {
    pub fn to_ordinal(&self) -> Ordinal {
        Ordinal::from_terms(
            self.0
                .iter()
                .map(|(e, k)| (e.to_ordinal(), natprod::Natural::from(*k)))
                .collect(),
        )
        .expect("canonical")
    }
}

/// `α_0 ⊕ … ⊕ α_{n-1}` in the polynomial model.
pub fn model_partial_sum(s: &OmegaSequence, n: usize) -> Ordinal {
    (0..n)
        .fold(Cnf(vec![]), |acc, i| acc.hsum(&Cnf::of(s.term_at(i))))
        .to_ordinal()
}

/// `α_0 ⊗ … ⊗ α_{n-1}` in the polynomial model.
pub fn model_partial_prod(s: &OmegaSequence, n: usize) -> Ordinal {
    let one = Cnf(vec![(Cnf(vec![]), 1)]);
    (0..n)
        .fold(one, |acc, i| acc.hprod(&Cnf::of(s.term_at(i))))
        .to_ordinal()
}

/// Replays `tests/golden/commands.txt` through the CLI and renders the transcript.
pub fn render_golden() -> String {
    use std::fmt::Write;
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let commands = std::fs::read_to_string(dir.join("commands.txt")).unwrap();
    let mut out = String::new();
    for line in commands
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
    {
        let args: Vec<String> = line.split(" | ").map(str::to_string).collect();
        let (code, stdout, stderr) = natprod::cli::run(args.clone());
        let quoted: Vec<String> = args.iter().map(|a| format!("'{a}'")).collect();
        writeln!(out, "$ natprod {}", quoted.join(" ")).unwrap();
        writeln!(out, "[exit {code}]").unwrap();
        for l in stdout.lines() {
            writeln!(out, "  {l}").unwrap();
        }
        for l in stderr.lines() {
            writeln!(out, "! {l}").unwrap();
        }
    }
    out
}

pub fn golden_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/transcript.txt")
}
