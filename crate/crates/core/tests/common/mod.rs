//! Helpers shared by the integration test targets.

#![allow(dead_code)]

use lefsig_core::{Chirality, MonodromyWord, Rational, RationalMatrix, SurfaceSignature, VanishingCycle};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Signature from the characteristic polynomial alone.
///
/// The polynomial is built with the Faddeev–LeVerrier recursion in exact
/// rationals. A symmetric matrix has only real eigenvalues, so Descartes' rule
/// of signs counts the positive roots exactly; negative roots are the positive
/// roots of `p(−λ)`.
pub fn charpoly_signature(m: &RationalMatrix) -> i64 {
    let n = m.rows();
    // coeffs[k] is the coefficient of λ^(n-k)
    let mut coeffs = vec![Rational::from_integer(BigInt::from(1))];
    let mut mk = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        let prev = coeffs[k - 1].clone();
        let shifted = &mk + &RationalMatrix::identity(n).scale(&prev);
        mk = m * &shifted;
        let trace: Rational = (0..n).map(|i| mk[(i, i)].clone()).sum();
        coeffs.push(-trace / Rational::from_integer(BigInt::from(k as i64)));
    }
    let positive = sign_changes(coeffs.iter().cloned());
    // p(−λ): flip the sign of odd powers of λ
    let negative = sign_changes(
        coeffs.iter().enumerate().map(|(k, c)| if (n - k) % 2 == 1 { -c.clone() } else { c.clone() }),
    );
    positive as i64 - negative as i64
}

fn sign_changes(coeffs: impl Iterator<Item = Rational>) -> usize {
    let signs: Vec<bool> = coeffs.filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn int_matrix(rows: &[Vec<i64>]) -> RationalMatrix {
    RationalMatrix::from_int_rows(rows).unwrap()
}

#[allow(clippy::needless_range_loop)]
pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RationalMatrix {
    let mut rows = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-bound..=bound);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    int_matrix(&rows)
}

/// Random invertible integer matrix: a random integer matrix, retried until
/// its rank is full.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RationalMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
        let m = int_matrix(&rows);
        if m.rank() == n {
            return m;
        }
    }
}

/// Random word with small integer classes. Zero classes appear with a fair
/// probability so the null-homologous branch is exercised.
pub fn random_word<R: Rng>(rng: &mut R, genus: u32, boundary: u32, len: usize, achiral: bool) -> MonodromyWord {
    let surface = SurfaceSignature::new(genus, boundary);
    let dim = surface.space().dim();
    let cycles = (0..len)
        .map(|_| {
            let class = if rng.gen_bool(0.1) { vec![0; dim] } else { (0..dim).map(|_| rng.gen_range(-2..=2)).collect() };
            let chirality = if achiral && rng.gen_bool(0.3) { Chirality::Left } else { Chirality::Right };
            VanishingCycle::new(class, chirality)
        })
        .collect();
    MonodromyWord::new(surface, cycles).unwrap()
}

/// Random surface with closed genus at most `max_half_dim`.
pub fn random_surface<R: Rng>(rng: &mut R, max_half_dim: u32) -> (u32, u32) {
    loop {
        let g = rng.gen_range(0..=max_half_dim);
        let b = rng.gen_range(0..=2);
        let half = if b == 0 { g } else { g + b - 1 };
        if (1..=max_half_dim).contains(&half) {
            return (g, b);
        }
    }
}
