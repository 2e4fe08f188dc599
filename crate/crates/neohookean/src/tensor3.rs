//! Fixed-size tensor algebra in three dimensions.
//!
//! Second-order tensors come in two flavours: [`SymTensor3`] stores the six
//! independent components of a symmetric tensor, and [`FullTensor3`] is a plain
//! `nalgebra` 3×3 matrix used for deformation gradients, velocity gradients and
//! the first Piola–Kirchhoff stress. Fourth-order tensors with major and minor
//! symmetry are stored densely in [`SuperSymTensor4`].
//!
//! Symmetric tensors are decomposed into eigenprojections by [`spectral`]; the
//! projections drive the coaxial/orthogonal split used by the stability module.

use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use nalgebra::{Matrix3, Matrix6, SymmetricEigen, Vector3, Vector6};

/// General (non-symmetric) second-order tensor.
pub type FullTensor3 = Matrix3<f64>;

/// Default relative tolerance used to decide that two eigenvalues coincide.
pub const DEFAULT_REL_TOL: f64 = 1e-8;

/// Voigt slot order shared by vectors and matrices: 11, 22, 33, 23, 13, 12.
pub const VOIGT_PAIRS: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1)];

/// Symmetric second-order tensor with six stored components.
///
/// Components are kept in Voigt order `[11, 22, 33, 23, 13, 12]`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SymTensor3 {
    v: [f64; 6],
}

impl SymTensor3 {
    /// Builds a tensor from its components `xx, yy, zz, yz, xz, xy`.
    pub const fn new(xx: f64, yy: f64, zz: f64, yz: f64, xz: f64, xy: f64) -> Self {
        Self { v: [xx, yy, zz, yz, xz, xy] }
    }

    /// Builds a tensor from a Voigt-ordered component array.
    pub const fn from_components(v: [f64; 6]) -> Self {
        Self { v }
    }

    /// The zero tensor.
    pub const fn zero() -> Self {
        Self { v: [0.0; 6] }
    }

    /// The second-order identity.
    pub const fn identity() -> Self {
        Self::diag(1.0, 1.0, 1.0)
    }

    /// Diagonal tensor with the given entries.
    pub const fn diag(a: f64, b: f64, c: f64) -> Self {
        Self::new(a, b, c, 0.0, 0.0, 0.0)
    }

    /// Spherical tensor `a I`.
    pub const fn spherical(a: f64) -> Self {
        Self::diag(a, a, a)
    }

    /// Symmetric part of a general tensor, `(A + Aᵀ)/2`.
    pub fn sym_of(a: &FullTensor3) -> Self {
        Self::new(
            a[(0, 0)],
            a[(1, 1)],
            a[(2, 2)],
            0.5 * (a[(1, 2)] + a[(2, 1)]),
            0.5 * (a[(0, 2)] + a[(2, 0)]),
            0.5 * (a[(0, 1)] + a[(1, 0)]),
        )
    }

    /// Dyadic square `n ⊗ n` of a vector.
    pub fn dyad(n: &Vector3<f64>) -> Self {
        Self::new(n[0] * n[0], n[1] * n[1], n[2] * n[2], n[1] * n[2], n[0] * n[2], n[0] * n[1])
    }

    /// Voigt-ordered components.
    pub const fn components(&self) -> [f64; 6] {
        self.v
    }

    /// Component `(i, j)` with zero-based indices.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match (i.min(j), i.max(j)) {
            (0, 0) => self.v[0],
            (1, 1) => self.v[1],
            (2, 2) => self.v[2],
            (1, 2) => self.v[3],
            (0, 2) => self.v[4],
            (0, 1) => self.v[5],
            _ => panic!("index ({i}, {j}) out of range for a 3x3 tensor"),
        }
    }

    /// Dense 3×3 matrix representation.
    pub fn to_matrix(&self) -> FullTensor3 {
        let [xx, yy, zz, yz, xz, xy] = self.v;
        Matrix3::new(xx, xy, xz, xy, yy, yz, xz, yz, zz)
    }

    /// Trace.
    pub fn trace(&self) -> f64 {
        self.v[0] + self.v[1] + self.v[2]
    }

    /// Deviatoric part `A − (tr A / 3) I`.
    pub fn dev(&self) -> Self {
        let m = self.trace() / 3.0;
        Self::new(self.v[0] - m, self.v[1] - m, self.v[2] - m, self.v[3], self.v[4], self.v[5])
    }

    /// Double contraction `A : B`.
    pub fn ddot(&self, other: &Self) -> f64 {
        let a = &self.v;
        let b = &other.v;
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + 2.0 * (a[3] * b[3] + a[4] * b[4] + a[5] * b[5])
    }

    /// Frobenius norm `sqrt(A : A)`.
    pub fn norm(&self) -> f64 {
        self.ddot(self).sqrt()
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.v.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    /// Matrix product `A · B` (generally not symmetric).
    pub fn dot(&self, other: &Self) -> FullTensor3 {
        self.to_matrix() * other.to_matrix()
    }

    /// Symmetrised product `A · B + B · A`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        let p = self.dot(other);
        Self::sym_of(&(p + p.transpose()))
    }

    /// Congruence `Q · A · Qᵀ`.
    pub fn rotate(&self, q: &FullTensor3) -> Self {
        Self::sym_of(&(q * self.to_matrix() * q.transpose()))
    }

    /// Determinant.
    pub fn det(&self) -> f64 {
        self.to_matrix().determinant()
    }
}

impl Add for SymTensor3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut v = self.v;
        v.iter_mut().zip(rhs.v).for_each(|(a, b)| *a += b);
        Self { v }
    }
}

impl AddAssign for SymTensor3 {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for SymTensor3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut v = self.v;
        v.iter_mut().zip(rhs.v).for_each(|(a, b)| *a -= b);
        Self { v }
    }
}

impl SubAssign for SymTensor3 {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Neg for SymTensor3 {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

impl Mul<f64> for SymTensor3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self { v: self.v.map(|a| a * s) }
    }
}

impl Mul<SymTensor3> for f64 {
    type Output = SymTensor3;
    fn mul(self, t: SymTensor3) -> SymTensor3 {
        t * self
    }
}

/// Symmetric part of a general tensor.
pub fn sym(a: &FullTensor3) -> SymTensor3 {
    SymTensor3::sym_of(a)
}

/// Skew part `(A − Aᵀ)/2` of a general tensor.
pub fn skew(a: &FullTensor3) -> FullTensor3 {
    (a - a.transpose()) * 0.5
}

/// Double contraction of two general tensors, `A : B = tr(Aᵀ B)`.
pub fn ddot_full(a: &FullTensor3, b: &FullTensor3) -> f64 {
    a.component_mul(b).sum()
}

/// Spectral representation of a symmetric tensor in terms of eigenprojections.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralDecomp {
    /// Eigenindex: the number of distinct eigenvalues.
    pub m: usize,
    /// Distinct eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Algebraic multiplicity of each distinct eigenvalue.
    pub multiplicities: Vec<usize>,
    /// Eigenprojection onto each eigenspace.
    pub projections: Vec<SymTensor3>,
}

impl SpectralDecomp {
    /// Recomposes `Σ s_i S_i`.
    pub fn reconstruct(&self) -> SymTensor3 {
        self.values.iter().zip(&self.projections).fold(SymTensor3::zero(), |acc, (s, p)| acc + *p * *s)
    }

    /// Applies a scalar function to the eigenvalues, `Σ f(s_i) S_i`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> SymTensor3 {
        self.values.iter().zip(&self.projections).fold(SymTensor3::zero(), |acc, (s, p)| acc + *p * f(*s))
    }
}

/// Decomposes a symmetric tensor into distinct eigenvalues and eigenprojections.
///
/// Eigenvalues `s_a`, `s_b` are treated as equal when
/// `|s_a − s_b| ≤ rel_tol · max(1, |s_a|, |s_b|)`. For a double eigenvalue the
/// projection is formed as the complement `I − S_single` of the simple one, and
/// for a triple eigenvalue it is the identity.
pub fn spectral(s: &SymTensor3, rel_tol: f64) -> SpectralDecomp {
    let eig = SymmetricEigen::new(s.to_matrix());
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vecs: Vec<Vector3<f64>> = order.iter().map(|&k| eig.eigenvectors.column(k).into_owned()).collect();

    let close = |a: f64, b: f64| (a - b).abs() <= rel_tol * 1f64.max(a.abs()).max(b.abs());
    let mut groups: Vec<Vec<usize>> = vec![vec![0]];
    for k in 1..3 {
        let last = *groups.last().and_then(|g| g.last()).unwrap_or(&0);
        if close(vals[last], vals[k]) {
            groups.last_mut().expect("non-empty").push(k);
        } else {
            groups.push(vec![k]);
        }
    }

    let values: Vec<f64> = groups.iter().map(|g| g.iter().map(|&k| vals[k]).sum::<f64>() / g.len() as f64).collect();
    let multiplicities: Vec<usize> = groups.iter().map(Vec::len).collect();
    let projections = match groups.len() {
        3 => vecs.iter().map(SymTensor3::dyad).collect(),
        2 => {
            let single = if groups[0].len() == 1 { 0 } else { 1 };
            let p_single = SymTensor3::dyad(&vecs[groups[single][0]]);
            let p_double = SymTensor3::identity() - p_single;
            if single == 0 {
                vec![p_single, p_double]
            } else {
                vec![p_double, p_single]
            }
        }
        _ => vec![SymTensor3::identity()],
    };
    SpectralDecomp { m: groups.len(), values, multiplicities, projections }
}

/// Splits `H` into parts coaxial with and orthogonal to `S`.
///
/// Returns `(Ĥ, H̃)` with `Ĥ = Σ_i S_i·H·S_i` and `H̃ = H − Ĥ`, which equals
/// `Σ_{i≠j} S_i·H·S_j` because the projections sum to the identity.
pub fn coaxial_orthogonal_split(s: &SymTensor3, h: &SymTensor3) -> (SymTensor3, SymTensor3) {
    split_with(&spectral(s, DEFAULT_REL_TOL), h)
}

/// Coaxial/orthogonal split against a precomputed decomposition.
pub fn split_with(decomp: &SpectralDecomp, h: &SymTensor3) -> (SymTensor3, SymTensor3) {
    let hm = h.to_matrix();
    let hat = decomp.projections.iter().fold(SymTensor3::zero(), |acc, p| {
        let pm = p.to_matrix();
        acc + sym(&(pm * hm * pm))
    });
    (hat, *h - hat)
}

/// Fourth-order tensor with major and both minor symmetries.
///
/// All 81 components are stored; every constructor symmetrises, so
/// `X_ijkl = X_klij = X_jikl = X_ijlk` always holds exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperSymTensor4 {
    c: [f64; 81],
}

const fn idx(i: usize, j: usize, k: usize, l: usize) -> usize {
    27 * i + 9 * j + 3 * k + l
}

impl SuperSymTensor4 {
    /// The zero tensor.
    pub fn zero() -> Self {
        Self { c: [0.0; 81] }
    }

    /// Builds a tensor from a component function, averaging over the
    /// eight index permutations generated by the major and minor symmetries.
    pub fn from_fn(f: impl Fn(usize, usize, usize, usize) -> f64) -> Self {
        let mut raw = [0.0; 81];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        raw[idx(i, j, k, l)] = f(i, j, k, l);
                    }
                }
            }
        }
        let mut c = [0.0; 81];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let mut terms = [
                            raw[idx(i, j, k, l)],
                            raw[idx(j, i, k, l)],
                            raw[idx(i, j, l, k)],
                            raw[idx(j, i, l, k)],
                            raw[idx(k, l, i, j)],
                            raw[idx(l, k, i, j)],
                            raw[idx(k, l, j, i)],
                            raw[idx(l, k, j, i)],
                        ];
                        // Summing in sorted order makes the result identical for
                        // every permutation, so the symmetries hold bit for bit.
                        terms.sort_by(f64::total_cmp);
                        c[idx(i, j, k, l)] = terms.iter().sum::<f64>() / 8.0;
                    }
                }
            }
        }
        Self { c }
    }

    /// Component `X_ijkl` with zero-based indices.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.c[idx(i, j, k, l)]
    }

    /// Contraction `X : H`.
    pub fn contract(&self, h: &SymTensor3) -> SymTensor3 {
        let hm = h.to_matrix();
        let mut out = [0.0; 6];
        for (slot, &(i, j)) in VOIGT_PAIRS.iter().enumerate() {
            let mut s = 0.0;
            for k in 0..3 {
                for l in 0..3 {
                    s += self.get(i, j, k, l) * hm[(k, l)];
                }
            }
            out[slot] = s;
        }
        SymTensor3::from_components(out)
    }

    /// Quadratic form `H : X : H`.
    pub fn quad(&self, h: &SymTensor3) -> f64 {
        self.contract(h).ddot(h)
    }

    /// Scales every component.
    pub fn scaled(&self, s: f64) -> Self {
        Self { c: self.c.map(|x| x * s) }
    }

    /// Largest absolute componentwise difference to another tensor.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.c.iter().zip(other.c.iter()).fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    /// Largest violation of the major and minor symmetry relations.
    pub fn symmetry_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let x = self.get(i, j, k, l);
                        worst = worst
                            .max((x - self.get(k, l, i, j)).abs())
                            .max((x - self.get(j, i, k, l)).abs())
                            .max((x - self.get(i, j, l, k)).abs());
                    }
                }
            }
        }
        worst
    }

    /// Fourth-order symmetric identity `I ⊗_sym I`.
    pub fn sym_identity() -> Self {
        sym_outer(&SymTensor3::identity(), &SymTensor3::identity())
    }
}

impl Add for SuperSymTensor4 {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.c.iter_mut().zip(rhs.c).for_each(|(a, b)| *a += b);
        self
    }
}

impl Sub for SuperSymTensor4 {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.c.iter_mut().zip(rhs.c).for_each(|(a, b)| *a -= b);
        self
    }
}

/// Symmetric tensor product, `(A ⊗_sym B) : X = A · sym X · Bᵀ`.
///
/// The stored tensor is the fully symmetrised form `½(A ⊗_sym B + B ⊗_sym A)`,
/// which gives identical quadratic forms `H : X : H` for symmetric `H`.
pub fn sym_outer(a: &SymTensor3, b: &SymTensor3) -> SuperSymTensor4 {
    let am = a.to_matrix();
    let bm = b.to_matrix();
    SuperSymTensor4::from_fn(|i, j, k, l| 0.5 * (am[(i, k)] * bm[(j, l)] + am[(i, l)] * bm[(j, k)]))
}

/// Dyadic product `A ⊗ B`, stored in the major-symmetrised form `½(A ⊗ B + B ⊗ A)`.
pub fn dyad(a: &SymTensor3, b: &SymTensor3) -> SuperSymTensor4 {
    SuperSymTensor4::from_fn(|i, j, k, l| a.get(i, j) * b.get(k, l))
}

/// Isotropic tensor function of eigenprojections,
/// `X(S) = Σ_{i≠j} x(s_i, s_j) S_i ⊗_sym S_j`.
///
/// `x` must be symmetric in its arguments. For `m = 1` the result is zero.
pub fn eigenprojection_tensor(decomp: &SpectralDecomp, x: impl Fn(f64, f64) -> f64) -> SuperSymTensor4 {
    let mut out = SuperSymTensor4::zero();
    for i in 0..decomp.m {
        for j in 0..decomp.m {
            if i != j {
                let w = x(decomp.values[i], decomp.values[j]);
                out = out + sym_outer(&decomp.projections[i], &decomp.projections[j]).scaled(w);
            }
        }
    }
    out
}

/// Which Voigt convention a symmetric tensor follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VoigtKind {
    /// Strain-like: shear slots hold twice the tensor component.
    Strain,
    /// Stress-like: shear slots hold the tensor component itself.
    Stress,
}

/// Voigt vector of a symmetric tensor in the slot order 11, 22, 33, 23, 13, 12.
pub fn voigt_vector(h: &SymTensor3, kind: VoigtKind) -> Vector6<f64> {
    let f = match kind {
        VoigtKind::Strain => 2.0,
        VoigtKind::Stress => 1.0,
    };
    let v = h.components();
    Vector6::new(v[0], v[1], v[2], f * v[3], f * v[4], f * v[5])
}

/// Inverse of [`voigt_vector`].
pub fn from_voigt_vector(v: &Vector6<f64>, kind: VoigtKind) -> SymTensor3 {
    let f = match kind {
        VoigtKind::Strain => 0.5,
        VoigtKind::Stress => 1.0,
    };
    SymTensor3::new(v[0], v[1], v[2], f * v[3], f * v[4], f * v[5])
}

/// 6×6 Voigt matrix `C_mn = X_ijkl` with `(ij) ↦ m`, `(kl) ↦ n`.
///
/// It maps strain-kind vectors to stress-kind vectors: `[X:H] = C [H]`.
pub fn voigt_matrix(x: &SuperSymTensor4) -> Matrix6<f64> {
    Matrix6::from_fn(|m, n| {
        let (i, j) = VOIGT_PAIRS[m];
        let (k, l) = VOIGT_PAIRS[n];
        x.get(i, j, k, l)
    })
}

/// Evaluates `H : X : H` by the tensor path and by the Voigt matrix path.
pub fn voigt_roundtrip(x4: &SuperSymTensor4, h: &SymTensor3) -> (f64, f64) {
    let tensor_path = x4.quad(h);
    let hv = voigt_vector(h, VoigtKind::Strain);
    let matrix_path = hv.dot(&(voigt_matrix(x4) * hv));
    (tensor_path, matrix_path)
}

/// Orthonormal basis of the symmetric tensors, in Voigt slot order.
///
/// Used to turn a quadratic form on symmetric tensors into a 6×6 matrix.
pub fn orthonormal_sym_basis() -> [SymTensor3; 6] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [
        SymTensor3::diag(1.0, 0.0, 0.0),
        SymTensor3::diag(0.0, 1.0, 0.0),
        SymTensor3::diag(0.0, 0.0, 1.0),
        SymTensor3::new(0.0, 0.0, 0.0, r, 0.0, 0.0),
        SymTensor3::new(0.0, 0.0, 0.0, 0.0, r, 0.0),
        SymTensor3::new(0.0, 0.0, 0.0, 0.0, 0.0, r),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_single_eigenvalue() {
        let d = spectral(&SymTensor3::identity(), DEFAULT_REL_TOL);
        assert_eq!(d.m, 1);
        assert_eq!(d.multiplicities, vec![3]);
        assert_eq!(d.projections[0], SymTensor3::identity());
    }

    #[test]
    fn double_eigenvalue_uses_complement() {
        let d = spectral(&SymTensor3::diag(3.0, 0.5, 0.5), DEFAULT_REL_TOL);
        assert_eq!(d.m, 2);
        assert_eq!(d.multiplicities, vec![2, 1]);
        let e1 = SymTensor3::diag(1.0, 0.0, 0.0);
        assert!((d.projections[1] - e1).max_abs() < 1e-15);
        assert!((d.projections[0] - (SymTensor3::identity() - e1)).max_abs() < 1e-15);
    }

    #[test]
    fn distinct_diagonal_projections() {
        let d = spectral(&SymTensor3::diag(1.0, 2.0, 3.0), DEFAULT_REL_TOL);
        assert_eq!(d.m, 3);
        for (k, p) in d.projections.iter().enumerate() {
            let mut e = [0.0; 3];
            e[k] = 1.0;
            assert!((*p - SymTensor3::diag(e[0], e[1], e[2])).max_abs() < 1e-14);
        }
    }

    #[test]
    fn sym_identity_maps_to_sym_part() {
        let h = SymTensor3::new(1.0, -2.0, 0.5, 0.3, -0.7, 1.1);
        let x = SuperSymTensor4::sym_identity().contract(&h);
        assert!((x - h).max_abs() < 1e-15);
    }

    #[test]
    fn zero_tensor_roundtrip() {
        let (a, b) = voigt_roundtrip(&SuperSymTensor4::zero(), &SymTensor3::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0));
        assert_eq!((a, b), (0.0, 0.0));
    }

    #[test]
    fn split_of_off_diagonal_against_double_eigenvalue() {
        let s = SymTensor3::diag(1.0, 2.0, 2.0);
        let h = SymTensor3::new(0.0, 0.0, 0.0, 0.0, 0.4, -0.9);
        let (hat, tilde) = coaxial_orthogonal_split(&s, &h);
        assert!(hat.max_abs() < 1e-15);
        assert!((tilde - h).max_abs() < 1e-15);
    }
}
