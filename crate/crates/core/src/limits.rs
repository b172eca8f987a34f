/// Caps on the exponential parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest sequence length accepted by realization enumeration.
    pub max_n: usize,
    /// Largest number of realizations enumerated before giving up.
    pub max_realizations: usize,
    /// Node expansions allowed to a single Hamiltonian-cycle search.
    pub hamilton_budget: u64,
}

/// Hard ceiling on `max_n`; realizations are stored as 128-bit edge masks.
pub const MAX_SUPPORTED_N: usize = 16;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 10,
            max_realizations: 100_000,
            hamilton_budget: 5_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_realizations(mut self, cap: usize) -> Self {
        self.max_realizations = cap;
        self
    }
}
