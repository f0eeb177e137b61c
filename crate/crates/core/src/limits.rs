use thiserror::Error;

/// Bound on exhaustive enumeration (states of a diagram, spanning subgraphs of a graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_states: u64,
}

impl Default for Limits {
    /// 2^24 states, i.e. 24 crossings or 24 edges.
    fn default() -> Self {
        Limits { max_states: 1 << 24 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("enumerating 2^{size} configurations exceeds the limit of {max_states}")]
pub struct CapExceeded {
    pub size: usize,
    pub max_states: u64,
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits { max_states: u64::MAX }
    }

    /// Checks that `2^size` configurations fit under the cap.
    pub fn check(&self, size: usize) -> Result<u64, CapExceeded> {
        let err = CapExceeded {
            size,
            max_states: self.max_states,
        };
        if size >= 64 {
            return Err(err);
        }
        let count = 1u64 << size;
        if count > self.max_states {
            return Err(err);
        }
        Ok(count)
    }
}
