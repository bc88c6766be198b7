//! Size caps for every operation that materializes something exponential in n².
//!
//! Library functions enforce the hard limit (what can run at all); the CLI
//! additionally enforces the default limit unless `--allow-large` is given.
//! Memory estimates assume the dense transform buffer of 2^(n²) signed words.

use crate::error::{Error, Result};

/// One row of the cap table.
#[derive(Debug, Clone, Copy)]
pub struct Cap {
    pub op: &'static str,
    /// Largest n accepted without `--allow-large`.
    pub default_max: usize,
    /// Largest n accepted at all.
    pub hard_max: usize,
    pub memory: &'static str,
}

pub const CAPS: &[Cap] = &[
    Cap { op: "truth_table", default_max: 4, hard_max: 5, memory: "n=5: 4 MiB bitset" },
    Cap { op: "interpolate", default_max: 4, hard_max: 5, memory: "n=5: 256 MiB i64 buffer" },
    Cap { op: "dualize", default_max: 4, hard_max: 5, memory: "n=5: 256 MiB i64 buffer" },
    Cap { op: "to_fourier", default_max: 4, hard_max: 5, memory: "n=5: 256 MiB i64 buffer" },
    Cap { op: "enumerate_mc", default_max: 4, hard_max: 5, memory: "n=5: ~530 MiB if collected" },
    Cap { op: "primal_polynomial", default_max: 4, hard_max: 5, memory: "n=5: ~530 MiB of terms" },
    Cap { op: "dual_polynomial", default_max: 4, hard_max: 5, memory: "n=5: ~800 MiB peak" },
    Cap { op: "dual_coefficient", default_max: 4, hard_max: 5, memory: "streaming, O(1)" },
    Cap { op: "pm_probability", default_max: 4, hard_max: 5, memory: "streaming, O(1)" },
    Cap { op: "build_lattice", default_max: 4, hard_max: 4, memory: "n=4: 256 KiB index" },
    Cap { op: "umbrella", default_max: 4, hard_max: 4, memory: "n=4: 32 KiB supergraph table" },
    Cap { op: "lattice_dot", default_max: 3, hard_max: 3, memory: "readability cap" },
    Cap { op: "fourier_cli", default_max: 4, hard_max: 4, memory: "n=4: 512 KiB" },
    Cap { op: "coefficient_summary", default_max: 4, hard_max: 4, memory: "n=4: 2^16 canonical forms" },
];

pub fn cap(op: &str) -> &'static Cap {
    CAPS.iter()
        .find(|c| c.op == op)
        .unwrap_or_else(|| panic!("no cap entry for `{op}`"))
}

/// Hard limit check used by library entry points.
pub fn check(op: &'static str, n: usize) -> Result<()> {
    let c = cap(op);
    if n > c.hard_max {
        return Err(Error::ResourceCap { op, n, max: c.hard_max });
    }
    Ok(())
}

/// CLI-level check: the default limit applies unless large runs are allowed.
pub fn check_cli(op: &'static str, n: usize, allow_large: bool) -> Result<()> {
    let c = cap(op);
    let max = if allow_large { c.hard_max } else { c.default_max };
    if n > max {
        return Err(Error::ResourceCap { op, n, max });
    }
    Ok(())
}
