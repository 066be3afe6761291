//! Inputs shared by the benchmarks.

use lefsig_core::fixtures::{matsumoto_word, ozbagci_word};
use lefsig_core::MonodromyWord;

/// Words of increasing length for scaling runs: the positive family and
/// powers of the genus-two 4-chain.
pub fn scaling_words() -> Vec<(String, MonodromyWord)> {
    let mut out = Vec::new();
    for n in [1, 5, 20, 40] {
        out.push((format!("positive-{}", 3 * n), ozbagci_word().repeated(n)));
    }
    for n in [1, 5, 10, 30] {
        out.push((format!("chain4-{}", 4 * n), matsumoto_word().repeated(n)));
    }
    out
}
