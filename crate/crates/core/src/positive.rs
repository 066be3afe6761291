//! Lefschetz fibrations over the disk with signature `n` and `3n` singular fibers.
//!
//! One period is the genus-one word `([1,0], [2,5], [1,5])` with monodromy
//! `[[11, 6], [75, 41]]`. Higher genus and extra boundary components only add
//! handles the monodromy never touches, so the classes are zero-padded.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::ratlinalg::RationalMatrix;
use crate::symplectic::{MonodromyWord, SurfaceSignature, SymplecticSpace, VanishingCycle};

/// The genus-one period, first twist first.
pub const PERIOD: [[i64; 2]; 3] = [[1, 0], [2, 5], [1, 5]];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositiveFamilySpec {
    pub genus: u32,
    pub boundary: u32,
    pub repetitions: u32,
}

/// Word with `3n` cycles whose total space has signature `n`.
pub fn generate(spec: PositiveFamilySpec) -> Result<MonodromyWord> {
    if spec.genus == 0 {
        return Err(Error::InvalidInput("the positive family requires genus g >= 1".into()));
    }
    if spec.repetitions == 0 {
        return Err(Error::InvalidInput("the positive family requires n >= 1".into()));
    }
    let surface = SurfaceSignature::new(spec.genus, spec.boundary);
    let dim = surface.space().dim();
    let period: Vec<VanishingCycle> = PERIOD
        .iter()
        .map(|c| {
            let mut class = vec![0; dim];
            class[..2].copy_from_slice(c);
            VanishingCycle::right(class)
        })
        .collect();
    let n = period.len() * spec.repetitions as usize;
    MonodromyWord::new(surface, period.iter().cycle().take(n).cloned().collect())
}

/// Membership in `{A symmetric 2x2 : A_11 < 0, A_22 > 0}`. Such matrices have
/// negative determinant and therefore signature 0.
pub fn in_monoid_a(m: &RationalMatrix) -> bool {
    m.rows() == 2 && m.cols() == 2 && m.is_symmetric() && m[(0, 0)].is_negative() && m[(1, 1)].is_positive()
}

/// `Σ_{k=1}^{n} ((B^T)^k J − J B^k)` for an entrywise positive 2x2 matrix `B`,
/// and whether that sum lies in the monoid.
pub fn monoid_a_certificate(b: &RationalMatrix, n: u32) -> Result<(RationalMatrix, bool)> {
    if b.rows() != 2 || b.cols() != 2 {
        return Err(Error::DimensionMismatch { context: "monoid certificate", expected: 2, found: b.rows().max(b.cols()) });
    }
    if !(0..2).all(|i| (0..2).all(|j| b[(i, j)].is_positive())) {
        return Err(Error::InvalidInput(format!("matrix must have positive entries, got {b}")));
    }
    if n == 0 {
        return Err(Error::InvalidInput("certificate length n must be at least 1".into()));
    }
    let j = SymplecticSpace::standard(1).form().clone();
    let mut power = RationalMatrix::identity(2);
    let mut sum = RationalMatrix::zeros(2, 2);
    let mut every_term = true;
    for _ in 0..n {
        power = &power * b;
        let term = &(&power.transpose() * &j) - &(&j * &power);
        every_term &= in_monoid_a(&term);
        sum = &sum + &term;
    }
    let certified = every_term && in_monoid_a(&sum);
    Ok((sum, certified))
}
