use std::fmt;

use serde::{Deserialize, Serialize};

/// Per-rank cell counts with the gonality breakdown of the 2-cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<usize>,
    pub p5: usize,
    pub p6: usize,
    pub p_other: usize,
}

impl FVector {
    pub fn new(counts: Vec<usize>, gonalities: impl IntoIterator<Item = usize>) -> Self {
        let (mut p5, mut p6, mut p_other) = (0, 0, 0);
        for g in gonalities {
            match g {
                5 => p5 += 1,
                6 => p6 += 1,
                _ => p_other += 1,
            }
        }
        FVector { counts, p5, p6, p_other }
    }

    pub fn rank(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn get(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Gonality breakdown is consistent with the 2-cell count.
    pub fn is_consistent(&self) -> bool {
        self.counts.len() < 3 || self.p5 + self.p6 + self.p_other == self.counts[2]
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))?;
        if self.counts.len() > 2 {
            write!(f, " p5={} p6={}", self.p5, self.p6)?;
            if self.p_other > 0 {
                write!(f, " other={}", self.p_other)?;
            }
        }
        Ok(())
    }
}
