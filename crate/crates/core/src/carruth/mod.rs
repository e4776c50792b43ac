//! Orders on finite-support products `⨉⁰ α_i` and their rank functions.
//!
//! - [`vector`]: vectors, the componentwise order and the last difference.
//! - [`antilex`]: the anti-lexicographic well-order of type `∏ α_i`.
//! - [`natural_rank`]: coordinatewise monotone ranks onto `⊗` of finitely many factors.
//! - [`finitely`]: finitely Carruth orders, whose type reaches `⊗_{i<ω} α_i`.
//! - [`extensions`]: brute-force linear extensions of small grids.

pub mod antilex;
pub mod extensions;
pub mod finitely;
pub mod natural_rank;
pub mod vector;

pub use antilex::{antilex_cmp, antilex_rank, antilex_unrank};
pub use extensions::{finite_extensions_max, ExtensionSummary};
pub use finitely::{fc_cmp, fc_rank, locally_fc_check, strictly_above, FCDescriptor};
pub use natural_rank::{nary_carruth_rank, natural_product_rank, PrefixRank};
pub use vector::{last_diff, product_leq, FinSupportVector};
