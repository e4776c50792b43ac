//! Command-line front end. [`run`] maps arguments to `(exit code, stdout, stderr)`.
//!
//! Exit codes: 0 success, 1 malformed input or usage, 2 domain error,
//! 3 self-test failure.

use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::carruth::{
    antilex_rank, antilex_unrank, fc_rank, nary_carruth_rank, FCDescriptor, FinSupportVector,
};
use crate::error::{Error, Result};
use crate::infinite::{
    infinite_nat_prod, infinite_nat_sum, infinite_ord_prod, infinite_ord_sum, segue_threshold,
};
use crate::parse::{parse, parse_list, parse_sequence, parse_vector_entries};
use crate::rearrange::{
    finite_prod_values, finite_sum_values, inf_prod_values, inf_sum_values, Caps,
};
use crate::selftest::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SYNTAX: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "natprod",
    about = "Exact ordinal arithmetic below epsilon-zero"
)]
struct Cli {
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on head permutations for brute-force rearrangement.
    #[arg(long, global = true, default_value_t = Caps::default().max_perms)]
    max_perms: u64,
    /// Cap on list length for finite rearrangement value sets.
    #[arg(long, global = true, default_value_t = Caps::default().max_specials)]
    max_specials: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an ordinal expression.
    Eval { expr: String },
    /// Infinite natural product of a sequence.
    Infprod { seq: String },
    /// Infinite natural sum of a sequence.
    Infsum { seq: String },
    /// Infinite classical product of a sequence.
    Oprod { seq: String },
    /// Infinite classical sum of a sequence.
    Osum { seq: String },
    /// Tail classification of a sequence.
    Classify { seq: String },
    /// Least cut from which the product splits into head and tail.
    Threshold { seq: String },
    /// All values of the classical sum under rearrangement.
    RearrangeSum { seq: String },
    /// All values of the classical product under rearrangement.
    RearrangeProd { seq: String },
    /// All values of the classical sum of a finite list under reordering.
    RearrangeFiniteSum { list: String },
    /// All values of the classical product of a finite list under reordering.
    RearrangeFiniteProd { list: String },
    /// Anti-lexicographic rank of a vector under the bounds sequence.
    Rank { bounds: String, vector: String },
    /// Vector with the given anti-lexicographic rank.
    Unrank { bounds: String, rank: String },
    /// Rank in the finitely Carruth order with the natural-product prefix rank.
    Fcrank {
        bounds: String,
        vector: String,
        /// Cut index; defaults to max(threshold, prefix length).
        #[arg(long)]
        cut: Option<usize>,
    },
    /// Rank of a tuple under the natural-product rank on a finite product.
    Nprank { factors: String, vector: String },
    /// Run the seeded self-test suites.
    Selftest,
}

/// Runs one command. `args` excludes the program name.
pub fn run<I, S>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("natprod".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (EXIT_SYNTAX, String::new(), text)
            } else {
                (EXIT_OK, text, String::new())
            };
        }
    };
    let caps = Caps {
        max_specials: cli.max_specials,
        max_perms: cli.max_perms,
    };
    if let Command::Selftest = cli.command {
        let report = selftest(cli.seed);
        let code = if report.ok() { EXIT_OK } else { EXIT_SELFTEST };
        return (code, format!("{report}\n"), String::new());
    }
    match dispatch(cli.command, &caps) {
        Ok(out) => (EXIT_OK, format!("{out}\n"), String::new()),
        Err(e) => {
            let code = if e.is_syntax() {
                EXIT_SYNTAX
            } else {
                EXIT_DOMAIN
            };
            (code, String::new(), format!("error: {e}\n"))
        }
    }
}

fn vector(bounds: &Arc<crate::OmegaSequence>, text: &str) -> Result<FinSupportVector> {
    FinSupportVector::new(bounds.clone(), parse_vector_entries(text)?)
}

fn dispatch(command: Command, caps: &Caps) -> Result<String> {
    Ok(match command {
        Command::Eval { expr } => parse(&expr)?.to_string(),
        Command::Infprod { seq } => infinite_nat_prod(&parse_sequence(&seq)?).to_string(),
        Command::Infsum { seq } => infinite_nat_sum(&parse_sequence(&seq)?).to_string(),
        Command::Oprod { seq } => infinite_ord_prod(&parse_sequence(&seq)?).to_string(),
        Command::Osum { seq } => infinite_ord_sum(&parse_sequence(&seq)?).to_string(),
        Command::Classify { seq } => parse_sequence(&seq)?.classify().to_string(),
        Command::Threshold { seq } => segue_threshold(&parse_sequence(&seq)?).to_string(),
        Command::RearrangeSum { seq } => inf_sum_values(&parse_sequence(&seq)?, caps)?.to_string(),
        Command::RearrangeProd { seq } => {
            inf_prod_values(&parse_sequence(&seq)?, caps)?.to_string()
        }
        Command::RearrangeFiniteSum { list } => {
            finite_sum_values(&parse_list(&list)?, caps)?.to_string()
        }
        Command::RearrangeFiniteProd { list } => {
            finite_prod_values(&parse_list(&list)?, caps)?.to_string()
        }
        Command::Rank { bounds, vector: v } => {
            let bounds = Arc::new(parse_sequence(&bounds)?);
            antilex_rank(&vector(&bounds, &v)?).to_string()
        }
        Command::Unrank { bounds, rank } => {
            let bounds = Arc::new(parse_sequence(&bounds)?);
            let r = parse(&rank)?;
            antilex_unrank(bounds, &r)?.to_string()
        }
        Command::Fcrank {
            bounds,
            vector: v,
            cut,
        } => {
            let bounds = Arc::new(parse_sequence(&bounds)?);
            let a = vector(&bounds, &v)?;
            let d = match cut {
                Some(c) => FCDescriptor::carruth_max(bounds, c)?,
                None => FCDescriptor::realizing(bounds)?,
            };
            fc_rank(&d, &a)?.to_string()
        }
        Command::Nprank { factors, vector: v } => {
            let factors = parse_list(&factors)?;
            let entries = parse_vector_entries(&v)?;
            if let Some((&i, _)) = entries.range(factors.len()..).next() {
                return Err(Error::OutOfRange(format!(
                    "index {i} is outside a product of {} factors",
                    factors.len()
                )));
            }
            let xs: Vec<_> = (0..factors.len())
                .map(|i| entries.get(&i).cloned().unwrap_or_default())
                .collect();
            nary_carruth_rank(&factors)?.rank(&xs)?.to_string()
        }
        Command::Selftest => unreachable!("handled before dispatch"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> (i32, String, String) {
        run(args.iter().copied())
    }

    #[test]
    fn examples() {
        assert_eq!(out(&["infprod", "[; 2]"]), (0, "w\n".into(), String::new()));
        assert_eq!(out(&["eval", "(w+1)@(w+1)"]).1, "w^(2) + w*2 + 1\n");
        let (code, _, err) = out(&["eval", "w^"]);
        assert_eq!(code, 1);
        assert!(err.contains("position 2"), "{err}");
    }

    #[test]
    fn domain_errors_exit_two() {
        assert_eq!(out(&["nprank", "[w, 0]", "{}"]).0, 2);
        assert_eq!(out(&["unrank", "[; 2]", "w"]).0, 2);
        assert_eq!(
            out(&["rearrange-finite-sum", "[1,1,1]", "--max-specials", "2"]).0,
            2
        );
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(out(&["frobnicate"]).0, 1);
        assert_eq!(out(&["eval"]).0, 1);
        assert_eq!(out(&["--help"]).0, 0);
    }

    #[test]
    fn carruth_verbs() {
        assert_eq!(out(&["rank", "[; w]", "{0:3, 2:5}"]).1, "w^(2)*5 + 3\n");
        assert_eq!(out(&["unrank", "[; w]", "w^2*5+3"]).1, "{0:3, 2:5}\n");
        assert_eq!(
            out(&["nprank", "[w+1, w+1]", "{0:w, 1:w}"]).1,
            "w^(2) + w*2\n"
        );
        assert_eq!(
            out(&["fcrank", "[; 2]", "{0:1, 3:1}", "--cut", "0"]).1,
            "9\n"
        );
    }
}
