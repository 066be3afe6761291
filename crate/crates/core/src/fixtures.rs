//! Worked examples with known signatures.
//!
//! The genus-two classes for the 4-chain and 3-chain words were found by
//! exhaustive search over chains of small integer vectors; the search lives in
//! `tests/fixture_search.rs` and re-derives these values.

use crate::ratlinalg::RationalMatrix;
use crate::symplectic::{MonodromyWord, SurfaceSignature, VanishingCycle};

fn word(genus: u32, boundary: u32, classes: &[&[i64]]) -> MonodromyWord {
    let cycles = classes.iter().map(|c| VanishingCycle::right(c.to_vec())).collect();
    MonodromyWord::new(SurfaceSignature::new(genus, boundary), cycles).expect("fixture dimensions are consistent")
}

/// Genus one, one boundary component, signature +1.
pub fn ozbagci_word() -> MonodromyWord {
    word(1, 1, &[&[1, 0], &[2, 5], &[1, 5]])
}

/// 4-chain `a_1, b_1, a_1 − a_2, b_2` on the closed genus-two surface.
/// Its tenth power is the identity and the 40-cycle fibration has signature −24.
pub fn matsumoto_word() -> MonodromyWord {
    word(2, 0, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 0, -1, 0], &[0, 0, 0, 1]])
}

/// Monodromy of [`matsumoto_word`].
pub fn matsumoto_monodromy() -> RationalMatrix {
    RationalMatrix::from_int_rows(&[[0, 1, 0, -1], [-1, 0, 0, 0], [1, 0, 1, 1], [-1, 0, -1, 0]])
        .expect("square fixture")
}

/// 3-chain `a_1, b_1, a_1 − a_2` on the genus-one surface with two boundary
/// components (closed up to genus two). Its fourth power acts like two twists
/// along the boundary class `a_2`.
pub fn chain_word() -> MonodromyWord {
    word(1, 2, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 0, -1, 0]])
}

/// Two twists along the boundary-parallel class `a_2` of the genus-one,
/// two-boundary surface.
pub fn boundary_pair_word() -> MonodromyWord {
    word(1, 2, &[&[0, 0, 1, 0], &[0, 0, 1, 0]])
}

/// Homological action of one twist along the boundary-parallel class.
pub fn boundary_twist() -> RationalMatrix {
    RationalMatrix::from_int_rows(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
        .expect("square fixture")
}

/// All named fixture words.
pub fn all_words() -> Vec<(&'static str, MonodromyWord)> {
    vec![
        ("ozbagci", ozbagci_word()),
        ("matsumoto", matsumoto_word()),
        ("chain", chain_word()),
        ("boundary-pair", boundary_pair_word()),
    ]
}
