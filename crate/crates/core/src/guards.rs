/// Size limits for the exhaustive (exponential) procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Simple-path enumeration oracles.
    pub oracle_max_vertices: usize,
    /// Brute-force kernel search over vertex subsets.
    pub kernel_max_vertices: usize,
    /// Subtournament enumeration for the color-count hypotheses.
    pub hypothesis_max_vertices: usize,
    /// Simple-cycle enumeration.
    pub cycle_max_vertices: usize,
    pub matching_max_edges: usize,
    pub matching_max_groups: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            oracle_max_vertices: 12,
            kernel_max_vertices: 24,
            hypothesis_max_vertices: 14,
            cycle_max_vertices: 12,
            matching_max_edges: 20,
            matching_max_groups: 6,
        }
    }
}

impl Guards {
    /// Limits used when verifying the reduction chain. The path oracle
    /// only ever sees the layered, acyclic `D_H`, and kernel search on a
    /// tournament closure stops at singletons, so both run on larger inputs.
    pub fn for_reduction_chain() -> Self {
        Guards {
            oracle_max_vertices: 32,
            kernel_max_vertices: 32,
            ..Guards::default()
        }
    }
}

pub(crate) fn check(what: &'static str, limit: usize, actual: usize) -> crate::Result<()> {
    if actual > limit {
        Err(crate::Error::GuardExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
