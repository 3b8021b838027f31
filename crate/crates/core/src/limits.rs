/// Resource caps shared by the enumeration, factorization and point-counting
/// routines. Every operation that can blow up checks its input against one of
/// these before doing any work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by the partition enumerators.
    pub enumeration: u64,
    /// Largest prime accepted by naive point counting.
    pub point_count: u64,
    /// Largest integer accepted by trial-division factorization.
    pub factorization: u64,
    /// Largest target accepted by the exceptional-integer search.
    pub exceptional: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 120,
            point_count: 1_000_000,
            factorization: 1_000_000_000_000,
            exceptional: 1_000_000,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, what: &'static str, requested: u128, cap: u64) -> crate::Result<()> {
        if requested > cap as u128 {
            Err(crate::Error::CapExceeded {
                what,
                requested,
                cap: cap as u128,
            })
        } else {
            Ok(())
        }
    }
}
