//! Signatures of `n`-fold cyclic branched covers branched along a regular
//! fiber, i.e. of the fibration with monodromy word repeated `n` times.
//!
//! `σ(Ỹ) = n σ(Y) − Σ_{m=1}^{n-1} σ_c(m)` where `σ_c(m)` is the signature of
//! `Σ_{i=1}^{m} ((φ^T)^i J − J φ^i)`.

use crate::error::{Error, Result};
use crate::ratlinalg::{signature_symmetric, RationalMatrix};
use crate::symplectic::{is_symplectic, SymplecticSpace};

/// One correction term of the cover formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionTerm {
    /// `m`, so this term belongs to the monodromy `φ^{m+1}`.
    pub power: u32,
    /// `Σ_{i=1}^{m} ((φ^T)^i J − J φ^i)`, symmetric.
    pub matrix: RationalMatrix,
    pub sigma: i64,
}

/// Breakdown of a cover signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub folds: u32,
    pub base_sigma: i64,
    /// Terms for `m = 1 .. folds-1`.
    pub corrections: Vec<CorrectionTerm>,
    pub total: i64,
}

/// Iterates the partial sums `S_m` together with `φ^{m+1}`.
struct CorrectionSums<'a> {
    space: &'a SymplecticSpace,
    phi: &'a RationalMatrix,
    power: RationalMatrix,
    sum: RationalMatrix,
    m: u32,
}

impl<'a> CorrectionSums<'a> {
    fn new(space: &'a SymplecticSpace, phi: &'a RationalMatrix) -> Result<Self> {
        if !is_symplectic(space, phi)? {
            return Err(Error::NotSymplectic);
        }
        let n = space.dim();
        Ok(CorrectionSums { space, phi, power: RationalMatrix::identity(n), sum: RationalMatrix::zeros(n, n), m: 0 })
    }

    fn next_term(&mut self) -> Result<CorrectionTerm> {
        let j = self.space.form();
        self.m += 1;
        self.power = &self.power * self.phi;
        let term = &(&self.power.transpose() * j) - &(j * &self.power);
        self.sum = &self.sum + &term;
        if !self.sum.is_symmetric() {
            return Err(Error::Internal(format!("correction matrix for m = {} is not symmetric", self.m)));
        }
        // Fixed vectors of φ^{m+1} must lie in the radical of the pairing.
        let next_power = &self.power * self.phi;
        let fixed = &next_power - &RationalMatrix::identity(self.space.dim());
        for v in fixed.kernel_basis() {
            if !self.sum.mul_vec(&v)?.iter().all(num_traits::Zero::is_zero) {
                return Err(Error::Internal(format!(
                    "fixed vector of phi^{} is not in the radical of the correction pairing",
                    self.m + 1
                )));
            }
        }
        Ok(CorrectionTerm { power: self.m, matrix: self.sum.clone(), sigma: signature_symmetric(&self.sum)? })
    }
}

/// Correction term `σ_c(m)` for the monodromy `φ^{m+1}`.
pub fn correction_sigma(space: &SymplecticSpace, phi: &RationalMatrix, m: u32) -> Result<CorrectionTerm> {
    if m == 0 {
        return Err(Error::InvalidInput("correction power m must be at least 1".into()));
    }
    let mut sums = CorrectionSums::new(space, phi)?;
    let mut term = sums.next_term()?;
    while term.power < m {
        term = sums.next_term()?;
    }
    Ok(term)
}

/// Signature of the `n`-fold cover with every correction term listed.
pub fn cover_breakdown(space: &SymplecticSpace, base_sigma: i64, phi: &RationalMatrix, n: u32) -> Result<CoverReport> {
    if n == 0 {
        return Err(Error::InvalidInput("fold count n must be at least 1".into()));
    }
    let mut sums = CorrectionSums::new(space, phi)?;
    let corrections = (1..n).map(|_| sums.next_term()).collect::<Result<Vec<_>>>()?;
    let total = i64::from(n) * base_sigma - corrections.iter().map(|c| c.sigma).sum::<i64>();
    Ok(CoverReport { folds: n, base_sigma, corrections, total })
}

/// `n σ(Y) − Σ_{m=1}^{n-1} σ_c(m)`.
pub fn cover_signature(space: &SymplecticSpace, base_sigma: i64, phi: &RationalMatrix, n: u32) -> Result<i64> {
    cover_breakdown(space, base_sigma, phi, n).map(|r| r.total)
}
