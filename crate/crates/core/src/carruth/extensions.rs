use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// Largest grid `m × n` accepted by [`finite_extensions_max`].
pub const MAX_GRID: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSummary {
    /// Largest order type among all linear extensions.
    pub max_type: Ordinal,
    /// Number of linear extensions.
    pub count: u64,
}

/// Enumerates every linear extension of the componentwise order on
/// `m × n`. An extension is built one element at a time; the placed set is
/// always a down-set, stored as row lengths.
pub fn finite_extensions_max(m: usize, n: usize) -> Result<ExtensionSummary> {
    if m.saturating_mul(n) > MAX_GRID {
        return Err(Error::CapExceeded {
            what: format!("grid {m}x{n}"),
            limit: MAX_GRID as u64,
        });
    }
    let mut rows = vec![0usize; m];
    let mut summary = ExtensionSummary {
        max_type: Ordinal::zero(),
        count: 0,
    };
    extend(&mut rows, n, 0, &mut summary);
    Ok(summary)
}

fn extend(rows: &mut [usize], n: usize, placed: usize, summary: &mut ExtensionSummary) {
    let mut progressed = false;
    for i in 0..rows.len() {
        let j = rows[i];
        if j < n && (i == 0 || rows[i - 1] > j) {
            progressed = true;
            rows[i] += 1;
            extend(rows, n, placed + 1, summary);
            rows[i] -= 1;
        }
    }
    if !progressed {
        summary.count += 1;
        let t = Ordinal::from(placed as u64);
        if t > summary.max_type {
            summary.max_type = t;
        }
    }
}
