//! Symplectic vector spaces, Dehn-twist transvections and Lagrangian subspaces.
//!
//! Homology classes are column vectors in the basis `(a_1, b_1, ..., a_G, b_G)`
//! with `Q(a_i, b_i) = +1`. Matrices act on the left, so a word
//! `t_n ... t_1` is the matrix product `T_n * ... * T_1`.

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, LagrangianDefect, Result};
use crate::ratlinalg::{dot, independent_subset, int_vector, rat, Rational, RationalMatrix};

/// A finite-dimensional real vector space with a nondegenerate skew form,
/// stored as its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSpace {
    half_dim: usize,
    form: RationalMatrix,
}

impl SymplecticSpace {
    /// `R^{2g}` with the block-diagonal form `J = diag([[0,1],[-1,0]], ...)`.
    pub fn standard(half_dim: usize) -> Self {
        let n = 2 * half_dim;
        let mut form = RationalMatrix::zeros(n, n);
        for i in 0..half_dim {
            form[(2 * i, 2 * i + 1)] = Rational::one();
            form[(2 * i + 1, 2 * i)] = -Rational::one();
        }
        SymplecticSpace { half_dim, form }
    }

    /// `(V ⊕ V, Q ⊕ −Q)`, the home of graph Lagrangians.
    pub fn doubled(&self) -> Self {
        SymplecticSpace { half_dim: 2 * self.half_dim, form: self.form.direct_sum(&-&self.form) }
    }

    pub fn direct_sum(&self, other: &SymplecticSpace) -> Self {
        SymplecticSpace {
            half_dim: self.half_dim + other.half_dim,
            form: self.form.direct_sum(&other.form),
        }
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn dim(&self) -> usize {
        2 * self.half_dim
    }

    pub fn form(&self) -> &RationalMatrix {
        &self.form
    }

    /// `Q(x, y) = x^T J y`.
    pub fn pairing(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let jy = self.form.mul_vec(y).expect("pairing: vector length");
        dot(x, &jy)
    }

    /// Row vector `x ↦ Q(v, x)` as a coefficient list.
    pub fn pairing_row(&self, v: &[Rational]) -> Vec<Rational> {
        self.form.transpose().mul_vec(v).expect("pairing_row: vector length")
    }

    fn check_len(&self, context: &'static str, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch { context, expected: self.dim(), found: len });
        }
        Ok(())
    }

    fn check_square(&self, context: &'static str, m: &RationalMatrix) -> Result<()> {
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.dim(),
                found: if m.rows() != self.dim() { m.rows() } else { m.cols() },
            });
        }
        Ok(())
    }
}

/// Genus and number of boundary components of the regular fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceSignature {
    pub genus: u32,
    pub boundary: u32,
}

impl SurfaceSignature {
    pub fn new(genus: u32, boundary: u32) -> Self {
        SurfaceSignature { genus, boundary }
    }

    /// Genus of the closed surface obtained by joining the boundary
    /// components with 1-handles and capping off.
    pub fn closed_genus(&self) -> usize {
        if self.boundary == 0 {
            self.genus as usize
        } else {
            (self.genus + self.boundary - 1) as usize
        }
    }

    pub fn space(&self) -> SymplecticSpace {
        SymplecticSpace::standard(self.closed_genus())
    }
}

/// Dimension `2G` of the homology the monodromy acts on.
pub fn effective_dimension(surface: SurfaceSignature) -> usize {
    2 * surface.closed_genus()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Chirality {
    /// Right-handed Dehn twist, an ordinary Lefschetz singularity.
    #[default]
    Right,
    /// Left-handed twist, an achiral singularity.
    Left,
}

impl Chirality {
    pub fn sign(self) -> i64 {
        match self {
            Chirality::Right => 1,
            Chirality::Left => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(Chirality::Right),
            -1 => Ok(Chirality::Left),
            other => Err(Error::InvalidInput(format!("chirality must be 1 or -1, got {other}"))),
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Chirality::Right => Chirality::Left,
            Chirality::Left => Chirality::Right,
        }
    }
}

/// Homology class of a vanishing cycle together with the handedness of its twist.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VanishingCycle {
    pub class: Vec<i64>,
    pub chirality: Chirality,
}

impl VanishingCycle {
    pub fn new(class: Vec<i64>, chirality: Chirality) -> Self {
        VanishingCycle { class, chirality }
    }

    pub fn right(class: Vec<i64>) -> Self {
        Self::new(class, Chirality::Right)
    }

    pub fn left(class: Vec<i64>) -> Self {
        Self::new(class, Chirality::Left)
    }

    pub fn is_null_homologous(&self) -> bool {
        self.class.iter().all(|&x| x == 0)
    }

    pub fn class_vector(&self) -> Vec<Rational> {
        int_vector(&self.class)
    }
}

/// Homological action of the twist: `x ↦ x − Q(x,γ)γ` for a right-handed
/// twist, `x ↦ x + Q(x,γ)γ` for a left-handed one.
pub fn transvection(space: &SymplecticSpace, cycle: &VanishingCycle) -> Result<RationalMatrix> {
    space.check_len("vanishing cycle class", cycle.class.len())?;
    let gamma = cycle.class_vector();
    // Q(x, γ) = (Jγ)·x
    let j_gamma = space.form().mul_vec(&gamma)?;
    let eps = rat(cycle.chirality.sign());
    let n = space.dim();
    let mut m = RationalMatrix::identity(n);
    for i in 0..n {
        if gamma[i].is_zero() {
            continue;
        }
        for j in 0..n {
            m[(i, j)] -= &eps * &gamma[i] * &j_gamma[j];
        }
    }
    Ok(m)
}

/// Product `M^T J M == J`.
pub fn is_symplectic(space: &SymplecticSpace, m: &RationalMatrix) -> Result<bool> {
    space.check_square("symplectic test", m)?;
    Ok(&(&m.transpose() * space.form()) * m == *space.form())
}

/// Ordered vanishing cycles; index 1 is the first twist applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyWord {
    surface: SurfaceSignature,
    cycles: Vec<VanishingCycle>,
}

impl MonodromyWord {
    pub fn new(surface: SurfaceSignature, cycles: Vec<VanishingCycle>) -> Result<Self> {
        let dim = effective_dimension(surface);
        for c in &cycles {
            if c.class.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "vanishing cycle class",
                    expected: dim,
                    found: c.class.len(),
                });
            }
        }
        Ok(MonodromyWord { surface, cycles })
    }

    /// Word of right-handed twists on a closed surface of genus `dim / 2`.
    pub fn closed_right<R: AsRef<[i64]>>(genus: u32, classes: &[R]) -> Result<Self> {
        let cycles = classes.iter().map(|c| VanishingCycle::right(c.as_ref().to_vec())).collect();
        Self::new(SurfaceSignature::new(genus, 0), cycles)
    }

    pub fn surface(&self) -> SurfaceSignature {
        self.surface
    }

    pub fn space(&self) -> SymplecticSpace {
        self.surface.space()
    }

    pub fn cycles(&self) -> &[VanishingCycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// `k`-th cycle, 1-based.
    pub fn cycle(&self, k: usize) -> Result<&VanishingCycle> {
        if k == 0 || k > self.len() {
            return Err(Error::IndexOutOfRange { index: k, min: 1, max: self.len() });
        }
        Ok(&self.cycles[k - 1])
    }

    /// The word concatenated with itself `n` times (monodromy `phi^n`).
    pub fn repeated(&self, n: usize) -> Self {
        MonodromyWord { surface: self.surface, cycles: self.cycles.iter().cycle().take(self.cycles.len() * n).cloned().collect() }
    }

    /// First `k` cycles.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        if k > self.len() {
            return Err(Error::IndexOutOfRange { index: k, min: 0, max: self.len() });
        }
        Ok(MonodromyWord { surface: self.surface, cycles: self.cycles[..k].to_vec() })
    }

    /// Cycles after the first `k`.
    pub fn suffix(&self, k: usize) -> Result<Self> {
        if k > self.len() {
            return Err(Error::IndexOutOfRange { index: k, min: 0, max: self.len() });
        }
        Ok(MonodromyWord { surface: self.surface, cycles: self.cycles[k..].to_vec() })
    }

    /// Orientation-reversed word: every twist changes handedness and every
    /// class is reflected by `(a_i, b_i) ↦ (a_i, −b_i)`, an anti-symplectic map.
    pub fn mirrored(&self) -> Self {
        let cycles = self
            .cycles
            .iter()
            .map(|c| {
                let class = c.class.iter().enumerate().map(|(i, &x)| if i % 2 == 1 { -x } else { x }).collect();
                VanishingCycle::new(class, c.chirality.flipped())
            })
            .collect();
        MonodromyWord { surface: self.surface, cycles }
    }

    /// `T_k ⋯ T_1`; `k = 0` gives the identity.
    pub fn action(&self, k: usize) -> Result<RationalMatrix> {
        word_action(self, k)
    }

    /// Monodromy of the whole word.
    pub fn monodromy(&self) -> RationalMatrix {
        word_action(self, self.len()).expect("full word index is in range")
    }
}

/// `T_k ⋯ T_1` for the first `k` cycles of the word.
pub fn word_action(word: &MonodromyWord, k: usize) -> Result<RationalMatrix> {
    if k > word.len() {
        return Err(Error::IndexOutOfRange { index: k, min: 0, max: word.len() });
    }
    let space = word.space();
    word.cycles[..k].iter().try_fold(RationalMatrix::identity(space.dim()), |acc, c| {
        Ok(&transvection(&space, c)? * &acc)
    })
}

/// A Lagrangian subspace, stored as a reduced basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lagrangian {
    space: SymplecticSpace,
    basis: Vec<Vec<Rational>>,
}

impl Lagrangian {
    /// Validates half-dimensionality and isotropy of the span.
    pub fn new(space: &SymplecticSpace, spanning: Vec<Vec<Rational>>) -> Result<Self> {
        for v in &spanning {
            space.check_len("Lagrangian spanning vector", v.len())?;
        }
        for (i, u) in spanning.iter().enumerate() {
            for (j, v) in spanning.iter().enumerate().skip(i + 1) {
                if !space.pairing(u, v).is_zero() {
                    return Err(Error::NotLagrangian(LagrangianDefect::Isotropy { first: i, second: j }));
                }
            }
        }
        let basis = independent_subset(&spanning);
        if basis.len() != space.half_dim() {
            return Err(Error::NotLagrangian(LagrangianDefect::Rank {
                expected: space.half_dim(),
                found: basis.len(),
            }));
        }
        Ok(Lagrangian { space: space.clone(), basis })
    }

    pub fn from_int_vectors<R: AsRef<[i64]>>(space: &SymplecticSpace, spanning: &[R]) -> Result<Self> {
        Self::new(space, spanning.iter().map(|v| int_vector(v.as_ref())).collect())
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Basis vectors as the columns of a `2G x G` matrix.
    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.space.dim(), &self.basis).expect("basis vectors have ambient length")
    }

    /// Image under a symplectic automorphism.
    pub fn image(&self, m: &RationalMatrix) -> Result<Lagrangian> {
        if !is_symplectic(&self.space, m)? {
            return Err(Error::NotSymplectic);
        }
        let spanning = self.basis.iter().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        Lagrangian::new(&self.space, spanning)
    }

    /// `L ⊕ L'` inside `V ⊕ V'`.
    pub fn direct_sum(&self, other: &Lagrangian) -> Lagrangian {
        let space = self.space.direct_sum(&other.space);
        let zeros_right = vec![Rational::zero(); other.space.dim()];
        let zeros_left = vec![Rational::zero(); self.space.dim()];
        let mut basis: Vec<Vec<Rational>> =
            self.basis.iter().map(|v| [v.as_slice(), &zeros_right].concat()).collect();
        basis.extend(other.basis.iter().map(|v| [zeros_left.as_slice(), v].concat()));
        Lagrangian { space, basis }
    }

    /// Same subspace, regardless of basis.
    pub fn same_subspace(&self, other: &Lagrangian) -> bool {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        self.space == other.space && independent_subset(&all).len() == self.basis.len()
    }
}

/// `graph(M) = {(x, Mx)}` and `conjugate graph(M) = {(Mx, x)}` in `(V ⊕ V, Q ⊕ −Q)`.
pub fn graph_lagrangians(space: &SymplecticSpace, m: &RationalMatrix) -> Result<(Lagrangian, Lagrangian)> {
    if !is_symplectic(space, m)? {
        return Err(Error::NotSymplectic);
    }
    let doubled = space.doubled();
    let n = space.dim();
    let mut graph = Vec::with_capacity(n);
    let mut conjugate = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        let image = m.column(i);
        graph.push([e.as_slice(), &image].concat());
        conjugate.push([image.as_slice(), &e].concat());
    }
    Ok((Lagrangian::new(&doubled, graph)?, Lagrangian::new(&doubled, conjugate)?))
}

/// Random element of `Sp(2G, Z)` as a product of `twists` transvections along
/// classes with entries in `-2..=2`.
pub fn random_symplectic<R: Rng + ?Sized>(space: &SymplecticSpace, rng: &mut R, twists: usize) -> RationalMatrix {
    let mut m = RationalMatrix::identity(space.dim());
    for _ in 0..twists {
        let class: Vec<i64> = (0..space.dim()).map(|_| rng.gen_range(-2..=2)).collect();
        let chirality = if rng.gen_bool(0.5) { Chirality::Right } else { Chirality::Left };
        let t = transvection(space, &VanishingCycle::new(class, chirality)).expect("class has ambient length");
        m = &t * &m;
    }
    m
}

/// Random Lagrangian: the image of a coordinate Lagrangian under a random
/// symplectic matrix, spanned by randomly rescaled vectors.
pub fn random_lagrangian<R: Rng + ?Sized>(space: &SymplecticSpace, rng: &mut R) -> Lagrangian {
    let n = space.dim();
    let phi = random_symplectic(space, rng, 2 + n);
    let base = isotropic_half_basis(space);
    let spanning = base
        .iter()
        .map(|v| {
            let w = phi.mul_vec(v).expect("ambient length");
            let s = rat(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
            w.into_iter().map(|x| x * &s).collect()
        })
        .collect();
    Lagrangian::new(space, spanning).expect("symplectic image of a Lagrangian is Lagrangian")
}

/// Greedy maximal isotropic set of standard basis vectors (a Lagrangian for
/// the standard and doubled forms).
fn isotropic_half_basis(space: &SymplecticSpace) -> Vec<Vec<Rational>> {
    let n = space.dim();
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        if chosen.iter().all(|c| space.pairing(c, &e).is_zero()) {
            chosen.push(e);
        }
        if chosen.len() == space.half_dim() {
            break;
        }
    }
    chosen
}

/// Sign of a rational as `-1`, `0` or `1`.
pub(crate) fn rational_sign(x: &Rational) -> i64 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
