/// Resource limits shared by every exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound on the number of words a single search may hold: the size of
    /// an anagram class, the visited set of a BFS, or the words enumerated by an
    /// audit.
    pub max_states: usize,
    /// Longest word an enumeration will produce.
    pub max_word_len: usize,
}

impl Limits {
    pub const DEFAULT_MAX_STATES: usize = 500_000;
    pub const DEFAULT_MAX_WORD_LEN: usize = 64;

    pub fn with_max_states(max_states: usize) -> Self {
        Limits {
            max_states,
            ..Limits::default()
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: Self::DEFAULT_MAX_STATES,
            max_word_len: Self::DEFAULT_MAX_WORD_LEN,
        }
    }
}
