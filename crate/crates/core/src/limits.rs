use crate::error::{Error, Result};
use crate::model::MAX_ELEMENTS;

/// Default bound on `|X|` for operations that sweep all subsets.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// Default number of candidate combinations the optimum-basis search may test.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Search limits for the exhaustive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    subset_cap: usize,
    node_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            subset_cap: DEFAULT_SUBSET_CAP,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl Limits {
    pub fn subset_cap(&self) -> usize {
        self.subset_cap
    }

    pub fn node_budget(&self) -> u64 {
        self.node_budget
    }

    /// Lowering the cap is always allowed; raising it above the default needs
    /// `acknowledge_cost`, since runtime doubles per element.
    pub fn with_subset_cap(self, cap: usize, acknowledge_cost: bool) -> Result<Self> {
        if cap > DEFAULT_SUBSET_CAP && !acknowledge_cost {
            return Err(Error::CapNotAcknowledged(cap));
        }
        Ok(Self {
            subset_cap: cap.min(MAX_ELEMENTS - 1),
            ..self
        })
    }

    pub fn with_node_budget(self, budget: u64) -> Self {
        Self {
            node_budget: budget,
            ..self
        }
    }

    pub(crate) fn check(&self, size: usize) -> Result<()> {
        if size > self.subset_cap {
            Err(Error::CapExceeded {
                size,
                cap: self.subset_cap,
            })
        } else {
            Ok(())
        }
    }
}
