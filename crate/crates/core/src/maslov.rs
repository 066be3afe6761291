//! Maslov triple index of Lagrangians via Wall's form, and the signature
//! defects built from it.
//!
//! For Lagrangians `A, B, C` the index is the signature of the symmetric form
//! `Ψ(b, b') = Q(b, c')` on `W = B∩(C+A) / ((B∩C)+(B∩A))`, where
//! `a' + b' + c' = 0` with `a' ∈ A`, `c' ∈ C`. With `Q(e_1, e_2) = 1` the
//! triple `(span e_1, span(e_1+e_2), span e_2)` has index −1.

use crate::error::{Error, Result};
use crate::ratlinalg::{independent_indices, inertia, Rational, RationalMatrix};
use crate::symplectic::{graph_lagrangians, Lagrangian, SymplecticSpace};

/// Wall's quotient space with its induced symmetric form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallSpace {
    pub ambient: SymplecticSpace,
    /// Representatives in `B∩(C+A)` of a basis of the quotient `W`.
    pub representatives: Vec<Vec<Rational>>,
    /// Gram matrix of `Ψ` on the representatives.
    pub form_matrix: RationalMatrix,
}

impl WallSpace {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn signature(&self) -> i64 {
        inertia(&self.form_matrix).expect("form matrix is symmetric by construction").signature()
    }
}

/// Spanning set of `span(B) ∩ span(other)`: the vectors `B u` for `(u, v)`
/// in the kernel of `[B | other]`.
fn intersect_with(b: &RationalMatrix, other: &RationalMatrix) -> Result<Vec<Vec<Rational>>> {
    b.hcat(other)?.kernel_basis().into_iter().map(|k| b.mul_vec(&k[..b.cols()])).collect()
}

/// Builds `W` and `Ψ` for the triple `(A, B, C)`.
pub fn wall_space(a: &Lagrangian, b: &Lagrangian, c: &Lagrangian) -> Result<WallSpace> {
    let space = b.space().clone();
    if a.space() != &space || c.space() != &space {
        return Err(Error::InvalidInput("Lagrangians live in different symplectic spaces".into()));
    }
    let (ma, mb, mc) = (a.basis_matrix(), b.basis_matrix(), c.basis_matrix());
    let gc = mc.cols();

    // B u + C v + A w = 0 gives b = Bu in C + A with c' = Cv, a' = Aw, a'+b+c' = 0.
    let stacked = mb.hcat(&mc)?.hcat(&ma)?;
    let mut sum_part: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
    for k in stacked.kernel_basis() {
        let (u, rest) = k.split_at(mb.cols());
        let (v, _) = rest.split_at(gc);
        // b = Bu, c' = Cv
        sum_part.push((mb.mul_vec(u)?, mc.mul_vec(v)?));
    }

    let mut radical = intersect_with(&mb, &mc)?;
    radical.extend(intersect_with(&mb, &ma)?);
    let radical_rank = independent_indices(&radical).len();

    let mut candidates = radical.clone();
    candidates.extend(sum_part.iter().map(|(x, _)| x.clone()));
    let kept = independent_indices(&candidates);
    let reps: Vec<&(Vec<Rational>, Vec<Rational>)> =
        kept.iter().filter(|&&i| i >= radical.len()).map(|&i| &sum_part[i - radical.len()]).collect();
    debug_assert_eq!(kept.len() - reps.len(), radical_rank);

    let n = reps.len();
    let mut form = RationalMatrix::zeros(n, n);
    for (i, (bi, _)) in reps.iter().enumerate() {
        for (j, (_, cj)) in reps.iter().enumerate() {
            form[(i, j)] = space.pairing(bi, cj);
        }
    }
    if !form.is_symmetric() {
        return Err(Error::Internal(format!("Wall form is not symmetric: {form}")));
    }
    let inertia = inertia(&form)?;
    if !inertia.is_nondegenerate() {
        return Err(Error::Internal(format!("Wall form is singular on W: {form}")));
    }
    Ok(WallSpace {
        ambient: space,
        representatives: reps.into_iter().map(|(b, _)| b.clone()).collect(),
        form_matrix: form,
    })
}

/// Maslov triple index `τ(A, B, C)`; zero when `W` is trivial.
pub fn maslov_index(a: &Lagrangian, b: &Lagrangian, c: &Lagrangian) -> Result<i64> {
    Ok(wall_space(a, b, c)?.signature())
}

/// Signature defect of gluing two sub-fibrations with monodromies
/// `phi_minus` and `phi_plus`:
/// `τ(graph(φ⁻), graph(id), conjugate graph(φ⁺))` in `(V ⊕ V, Q ⊕ −Q)`.
pub fn fiber_sum_defect(
    space: &SymplecticSpace,
    phi_minus: &RationalMatrix,
    phi_plus: &RationalMatrix,
) -> Result<i64> {
    let (a, _) = graph_lagrangians(space, phi_minus)?;
    let (b, _) = graph_lagrangians(space, &RationalMatrix::identity(space.dim()))?;
    let (_, c) = graph_lagrangians(space, phi_plus)?;
    maslov_index(&a, &b, &c)
}

/// Meyer's cocycle, `Mey(m1, m2) = −τ(graph(m1), graph(id), conjugate graph(m2))`.
pub fn meyer_cocycle(space: &SymplecticSpace, m1: &RationalMatrix, m2: &RationalMatrix) -> Result<i64> {
    fiber_sum_defect(space, m1, m2).map(|d| -d)
}
