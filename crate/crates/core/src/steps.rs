//! Basic-step instrumentation for delay measurements.
//!
//! Every adjacency probe on a [`MultiGraph`](crate::MultiGraph) and every
//! membership test against a residual vertex set counts as one step. The
//! counter is per thread, so independent enumerations running on different
//! threads never observe each other.

use std::cell::Cell;

thread_local! {
    static STEPS: Cell<u64> = const { Cell::new(0) };
}

#[inline]
pub fn tick() {
    STEPS.with(|s| s.set(s.get().wrapping_add(1)));
}

#[inline]
pub fn add(n: u64) {
    STEPS.with(|s| s.set(s.get().wrapping_add(n)));
}

/// Current value of this thread's step counter.
#[inline]
pub fn count() -> u64 {
    STEPS.with(|s| s.get())
}

/// Inter-output step statistics collected by [`DelayMeter`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DelayStats {
    pub outputs: u64,
    /// Steps before the first output (or the whole run when nothing is output).
    pub precalculation: u64,
    /// Steps after the last output until the stream reported exhaustion.
    pub postcalculation: u64,
    /// Largest gap between two consecutive outputs.
    pub max_between: u64,
    pub total_between: u64,
}

impl DelayStats {
    /// Largest of the precalculation, postcalculation and inter-output gaps.
    pub fn max_delay(&self) -> u64 {
        self.precalculation
            .max(self.postcalculation)
            .max(self.max_between)
    }

    pub fn mean_between(&self) -> f64 {
        if self.outputs <= 1 {
            0.0
        } else {
            self.total_between as f64 / (self.outputs - 1) as f64
        }
    }
}

/// Drains an iterator while recording step counts between outputs.
///
/// `limit` stops the drain after that many outputs; in that case the
/// postcalculation count stays zero.
pub fn measure<I, T>(iter: I, limit: Option<u64>, mut on_item: impl FnMut(T)) -> DelayStats
where
    I: IntoIterator<Item = T>,
{
    let mut stats = DelayStats::default();
    let mut iter = iter.into_iter();
    let mut last = count();
    loop {
        if limit.is_some_and(|l| stats.outputs >= l) {
            return stats;
        }
        match iter.next() {
            Some(item) => {
                let now = count();
                let gap = now.wrapping_sub(last);
                if stats.outputs == 0 {
                    stats.precalculation = gap;
                } else {
                    stats.max_between = stats.max_between.max(gap);
                    stats.total_between += gap;
                }
                stats.outputs += 1;
                on_item(item);
                last = count();
            }
            None => {
                let gap = count().wrapping_sub(last);
                if stats.outputs == 0 {
                    stats.precalculation = gap;
                } else {
                    stats.postcalculation = gap;
                }
                return stats;
            }
        }
    }
}
