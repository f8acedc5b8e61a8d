use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock allowance for one exact computation. Not shared between
/// threads; each worker builds its own.
#[derive(Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    ticks: Cell<u32>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            ticks: Cell::new(0),
        }
    }

    pub fn new(limit: Option<Duration>) -> Self {
        Budget {
            deadline: limit.map(|d| Instant::now() + d),
            ticks: Cell::new(0),
        }
    }

    /// Counts one unit of search work; checks the clock every 256 units.
    pub fn tick(&self) -> Result<()> {
        let Some(deadline) = self.deadline else {
            return Ok(());
        };
        let t = self.ticks.get().wrapping_add(1);
        self.ticks.set(t);
        if t.is_multiple_of(256) && Instant::now() >= deadline {
            return Err(Error::BudgetExhausted);
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

/// Size and time limits for the exact procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest graph order accepted by automorphism enumeration.
    pub aut_order: usize,
    /// Largest number of group elements materialized explicitly.
    pub aut_elements: u64,
    /// Largest graph order accepted by the labeling solvers.
    pub label_order: usize,
    /// Largest graph order accepted by the Hamiltonian path test.
    pub hamiltonian_order: usize,
    /// Per exact call.
    pub time_budget: Option<Duration>,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            aut_order: 16,
            aut_elements: 4_000_000,
            label_order: 16,
            hamiltonian_order: 20,
            time_budget: Some(Duration::from_secs(60)),
        }
    }
}

impl Caps {
    pub fn budget(&self) -> Budget {
        Budget::new(self.time_budget)
    }

    pub fn unlimited_time(mut self) -> Self {
        self.time_budget = None;
        self
    }

    pub(crate) fn check_label_order(&self, order: usize) -> Result<()> {
        if order > self.label_order {
            return Err(Error::OverCap {
                what: "labeling solver",
                order,
                cap: self.label_order,
            });
        }
        Ok(())
    }
}
