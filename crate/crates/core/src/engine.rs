//! Local signature algorithm for Lefschetz fibrations over the disk.
//!
//! Adding the `k`-th vanishing cycle `γ_k` to the fibration with monodromy
//! `Φ_{k-1} = T_{k-1} ⋯ T_1` changes the signature by the local term
//! `−σ_k`, where `σ_k` comes from solving `(Id − Φ_k) x = γ_k`:
//!
//! - `γ_k = 0`: `σ_k = 0`, and the handle itself adds `−1` (`+1` if achiral);
//! - no solution: `σ_k = 0`;
//! - otherwise `σ_k = sign(1 + Q(γ_k, x))` for a right-handed twist and
//!   `σ_k = −sign(1 − Q(γ_k, x))` for a left-handed one.
//!
//! The value does not depend on which solution `x` is used. Each `σ_k` equals
//! the fiber-sum defect `τ(graph(T_k), graph(id), conjugate graph(Φ_{k-1}))`,
//! which [`local_sigma_via_maslov`] computes independently.

use num_traits::One;

use crate::error::{Error, Result};
use crate::maslov::fiber_sum_defect;
use crate::ratlinalg::{solve_linear, Rational, RationalMatrix};
use crate::symplectic::{rational_sign, transvection, Chirality, MonodromyWord, SymplecticSpace, VanishingCycle};

/// Outcome of one step of the algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    /// 1-based position in the word.
    pub index: usize,
    pub cycle: VanishingCycle,
    /// Whether `(Id − Φ_k) x = γ_k` has a solution; `true` for null-homologous cycles.
    pub solvable: bool,
    /// Local signature, chirality already applied.
    pub sigma: i64,
    /// The solution used; absent when unsolvable or `γ_k = 0`.
    pub witness: Option<Vec<Rational>>,
    /// `Φ_k = T_k ⋯ T_1`.
    pub cumulative_action: RationalMatrix,
}

impl StepRecord {
    /// Change in total signature caused by this cycle.
    pub fn contribution(&self) -> i64 {
        let handle = if self.cycle.is_null_homologous() { self.cycle.chirality.sign() } else { 0 };
        -self.sigma - handle
    }
}

/// Per-step records and the resulting signature of the total space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureTrace {
    pub word: MonodromyWord,
    pub steps: Vec<StepRecord>,
    pub null_homologous_count: usize,
    pub total: i64,
}

impl SignatureTrace {
    /// Signature after each prefix of the word.
    pub fn running_totals(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0, |acc, s| {
                *acc += s.contribution();
                Some(*acc)
            })
            .collect()
    }
}

fn check_step(word: &MonodromyWord, k: usize) -> Result<()> {
    if k == 0 || k > word.len() {
        return Err(Error::IndexOutOfRange { index: k, min: 1, max: word.len() });
    }
    Ok(())
}

fn step_record(
    space: &SymplecticSpace,
    index: usize,
    cycle: &VanishingCycle,
    cumulative_action: RationalMatrix,
) -> Result<StepRecord> {
    if cycle.is_null_homologous() {
        return Ok(StepRecord {
            index,
            cycle: cycle.clone(),
            solvable: true,
            sigma: 0,
            witness: None,
            cumulative_action,
        });
    }
    let gamma = cycle.class_vector();
    let system = &RationalMatrix::identity(space.dim()) - &cumulative_action;
    let solution = solve_linear(&system, &gamma)?;
    let Some(x) = solution.particular else {
        return Ok(StepRecord {
            index,
            cycle: cycle.clone(),
            solvable: false,
            sigma: 0,
            witness: None,
            cumulative_action,
        });
    };
    let q = space.pairing(&gamma, &x);
    let one = Rational::one();
    let sigma = match cycle.chirality {
        Chirality::Right => rational_sign(&(one + q)),
        // the inverse twist moves the dual by −γ, so the solve runs against −γ
        Chirality::Left => -rational_sign(&(one - q)),
    };
    Ok(StepRecord { index, cycle: cycle.clone(), solvable: true, sigma, witness: Some(x), cumulative_action })
}

/// Step `k` (1-based) of the algorithm.
pub fn local_sigma(word: &MonodromyWord, k: usize) -> Result<StepRecord> {
    check_step(word, k)?;
    let action = word.action(k)?;
    step_record(&word.space(), k, word.cycle(k)?, action)
}

/// Runs every step and assembles the signature.
pub fn signature(word: &MonodromyWord) -> Result<SignatureTrace> {
    let space = word.space();
    let mut action = RationalMatrix::identity(space.dim());
    let mut steps = Vec::with_capacity(word.len());
    for (i, cycle) in word.cycles().iter().enumerate() {
        action = &transvection(&space, cycle)? * &action;
        steps.push(step_record(&space, i + 1, cycle, action.clone())?);
    }
    let null_homologous_count = word.cycles().iter().filter(|c| c.is_null_homologous()).count();
    let total = steps.iter().map(StepRecord::contribution).sum();
    Ok(SignatureTrace { word: word.clone(), steps, null_homologous_count, total })
}

/// Step `k` computed as the Maslov index of the partial fiber sum that
/// splits off the `k`-th singular fiber.
pub fn local_sigma_via_maslov(word: &MonodromyWord, k: usize) -> Result<i64> {
    check_step(word, k)?;
    let space = word.space();
    let phi_minus = transvection(&space, word.cycle(k)?)?;
    let phi_plus = word.action(k - 1)?;
    fiber_sum_defect(&space, &phi_minus, &phi_plus)
}

/// Whether `Φ_{k-1}` fixes some dual `γ̃` of `γ_k` (`Q(γ_k, γ̃) = 1`).
/// When it does, `σ_k = 0`.
pub fn shortcut_dual_preserved(word: &MonodromyWord, k: usize) -> Result<bool> {
    check_step(word, k)?;
    let cycle = word.cycle(k)?;
    if cycle.is_null_homologous() {
        return Err(Error::InvalidInput(format!("cycle {k} is null-homologous and has no dual")));
    }
    let space = word.space();
    let n = space.dim();
    let fixed = &word.action(k - 1)? - &RationalMatrix::identity(n);
    let pairing = RationalMatrix::from_rows(vec![space.pairing_row(&cycle.class_vector())])?;
    let system = fixed.vcat(&pairing)?;
    let mut rhs = vec![Rational::from_integer(0.into()); n];
    rhs.push(Rational::one());
    Ok(solve_linear(&system, &rhs)?.is_consistent())
}

/// Whether the whole word acts trivially on homology. In that case the
/// signature is additive over the split `word[..split] | word[split..]`.
pub fn homologically_trivial_split_check(word: &MonodromyWord, split: usize) -> Result<bool> {
    if split > word.len() {
        return Err(Error::IndexOutOfRange { index: split, min: 0, max: word.len() });
    }
    Ok(word.monodromy().is_identity())
}
