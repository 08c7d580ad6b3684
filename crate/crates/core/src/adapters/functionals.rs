//! Representable positive functionals on finite-dimensional unital
//! *-algebras.
//!
//! A functional `f` induces the Gram operator `G[r][c] = f(b_c* b_r)` over the
//! canonical basis `(b_i)`, the matrix of `<Aa, b> = f(b* a)`. Decomposing the
//! Gram matrix of `g` with respect to that of `f` and reading the parts back
//! through the unit, `g_a(b_r) = (G_a u)_r`, yields the absolutely continuous
//! and singular functionals. Only commutative algebras `C^n` (weights) and
//! full matrix algebras `M_k` (densities, basis `E_11, E_12, ..., E_kk` in
//! row-major order) are supported.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eigen::jacobi_eigh;
use crate::error::{Error, Result};
use crate::lebesgue::decompose;
use crate::linalg::{c, frobenius, hermitian_part, real_diag, CMatrix, CVector, C64, ZERO};
use crate::psd::{make_psd, PsdMatrix};
use crate::tolerance::Tolerance;

/// Negativity allowed in reconstructed weights or densities.
pub const REPRESENTABILITY_TOL: f64 = 1e-8;

const GRAM_SPOT_CHECKS: usize = 20;
const GRAM_SEED: u64 = 0x676e_735f_6772_616d;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `C^n` with pointwise product and conjugation.
    Commutative { n: usize },
    /// `M_k(C)`.
    FullMatrix { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDescriptor {
    kind: AlgebraKind,
}

impl AlgebraDescriptor {
    pub fn new(kind: AlgebraKind) -> Result<Self> {
        let size = match kind {
            AlgebraKind::Commutative { n } => n,
            AlgebraKind::FullMatrix { k } => k,
        };
        if size == 0 {
            return Err(Error::InvalidData("algebra size must be positive".into()));
        }
        let algebra = AlgebraDescriptor { kind };
        algebra.validate()?;
        Ok(algebra)
    }

    pub fn commutative(n: usize) -> Result<Self> {
        AlgebraDescriptor::new(AlgebraKind::Commutative { n })
    }

    pub fn full_matrix(k: usize) -> Result<Self> {
        AlgebraDescriptor::new(AlgebraKind::FullMatrix { k })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            AlgebraKind::Commutative { n } => n,
            AlgebraKind::FullMatrix { k } => k * k,
        }
    }

    /// `b_i b_j`, which is either a basis element or zero.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        match self.kind {
            AlgebraKind::Commutative { .. } => (i == j).then_some(i),
            AlgebraKind::FullMatrix { k } => {
                let (a, b) = (i / k, i % k);
                let (c, d) = (j / k, j % k);
                (b == c).then_some(a * k + d)
            }
        }
    }

    /// Index of `b_i*`.
    pub fn star(&self, i: usize) -> usize {
        match self.kind {
            AlgebraKind::Commutative { .. } => i,
            AlgebraKind::FullMatrix { k } => (i % k) * k + i / k,
        }
    }

    pub fn unit(&self) -> CVector {
        let mut u = CVector::zeros(self.dim());
        match self.kind {
            AlgebraKind::Commutative { .. } => u.fill(c(1.0, 0.0)),
            AlgebraKind::FullMatrix { k } => {
                for i in 0..k {
                    u[i * k + i] = c(1.0, 0.0);
                }
            }
        }
        u
    }

    pub fn multiply(&self, x: &CVector, y: &CVector) -> CVector {
        let mut out = CVector::zeros(self.dim());
        for (i, &xi) in x.iter().enumerate() {
            if xi == ZERO {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if let Some(p) = self.product(i, j) {
                    out[p] += xi * yj;
                }
            }
        }
        out
    }

    pub fn adjoint(&self, x: &CVector) -> CVector {
        let mut out = CVector::zeros(self.dim());
        for (i, &xi) in x.iter().enumerate() {
            out[self.star(i)] += xi.conj();
        }
        out
    }

    pub fn basis(&self, i: usize) -> CVector {
        let mut e = CVector::zeros(self.dim());
        e[i] = c(1.0, 0.0);
        e
    }

    /// Unit laws and anti-multiplicativity of the involution on the basis.
    fn validate(&self) -> Result<()> {
        let u = self.unit();
        for i in 0..self.dim() {
            let b = self.basis(i);
            if self.multiply(&u, &b) != b || self.multiply(&b, &u) != b {
                return Err(Error::InvalidData(format!("unit law fails at basis element {i}")));
            }
            if self.star(self.star(i)) != i {
                return Err(Error::InvalidData(format!("involution is not involutive at {i}")));
            }
            for j in 0..self.dim() {
                let lhs = self.product(i, j).map(|p| self.star(p));
                let rhs = self.product(self.star(j), self.star(i));
                if lhs != rhs {
                    return Err(Error::InvalidData(format!(
                        "(b_{i} b_{j})* != b_{j}* b_{i}*"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub enum FunctionalData {
    /// `f(a) = Σ w_i a_i`.
    Weights(Vec<f64>),
    /// `f(a) = tr(ρ a)`.
    Density(CMatrix),
}

#[derive(Debug, Clone)]
pub struct FunctionalSpec {
    pub algebra: AlgebraDescriptor,
    pub data: FunctionalData,
    /// `G[r][c] = f(b_c* b_r)`.
    pub gram: PsdMatrix,
    /// `f(1)`, the squared norm of the cyclic vector.
    pub cyclic_norm: f64,
}

impl FunctionalSpec {
    pub fn evaluate(&self, a: &CVector) -> C64 {
        evaluate(&self.algebra, &self.data, a)
    }

    /// Smallest eigenvalue of the density, or smallest weight.
    pub fn data_min_eigenvalue(&self) -> f64 {
        data_min_eigenvalue(&self.data)
    }
}

fn evaluate(algebra: &AlgebraDescriptor, data: &FunctionalData, a: &CVector) -> C64 {
    match (algebra.kind, data) {
        (AlgebraKind::Commutative { .. }, FunctionalData::Weights(w)) => {
            a.iter().zip(w).map(|(&x, &wi)| x * wi).sum()
        }
        (AlgebraKind::FullMatrix { k }, FunctionalData::Density(rho)) => {
            // tr(ρ Σ a_ij E_ij) = Σ a_ij ρ_ji
            let mut s = ZERO;
            for i in 0..k {
                for j in 0..k {
                    s += a[i * k + j] * rho[(j, i)];
                }
            }
            s
        }
        _ => unreachable!("data kind is validated against the algebra at construction"),
    }
}

fn data_min_eigenvalue(data: &FunctionalData) -> f64 {
    match data {
        FunctionalData::Weights(w) => w.iter().copied().fold(f64::INFINITY, f64::min),
        FunctionalData::Density(rho) => jacobi_eigh(rho).values.last().copied().unwrap_or(0.0),
    }
}

/// Builds the functional and its Gram operator, checking the Gram matrix
/// against its closed form (`diag(w)`, resp. `δ_il ρ_jm`).
pub fn functional_from_data(
    algebra: &AlgebraDescriptor,
    data: FunctionalData,
    tol: &Tolerance,
) -> Result<FunctionalSpec> {
    let data = match (algebra.kind, data) {
        (AlgebraKind::Commutative { n }, FunctionalData::Weights(w)) => {
            if w.len() != n {
                return Err(Error::InvalidData(format!("expected {n} weights, got {}", w.len())));
            }
            if let Some(x) = w.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
                return Err(Error::InvalidData(format!("weight {x} is not a finite nonnegative number")));
            }
            FunctionalData::Weights(w)
        }
        (AlgebraKind::FullMatrix { k }, FunctionalData::Density(rho)) => {
            if rho.shape() != (k, k) {
                return Err(Error::InvalidData(format!(
                    "density must be {k}x{k}, got {}x{}",
                    rho.nrows(),
                    rho.ncols()
                )));
            }
            let checked = make_psd(&rho, tol)
                .map_err(|e| Error::InvalidData(format!("density rejected: {e}")))?;
            FunctionalData::Density(checked.entries().clone())
        }
        (AlgebraKind::Commutative { .. }, FunctionalData::Density(_)) => {
            return Err(Error::InvalidData("commutative algebras take weights".into()))
        }
        (AlgebraKind::FullMatrix { .. }, FunctionalData::Weights(_)) => {
            return Err(Error::InvalidData("full matrix algebras take a density".into()))
        }
    };

    let dim = algebra.dim();
    let mut gram = CMatrix::zeros(dim, dim);
    for r in 0..dim {
        for col in 0..dim {
            if let Some(p) = algebra.product(algebra.star(col), r) {
                gram[(r, col)] = evaluate(algebra, &data, &algebra.basis(p));
            }
        }
    }
    check_gram_closed_form(algebra, &data, &gram)?;
    let gram = make_psd(&gram, tol)?;
    let cyclic_norm = evaluate(algebra, &data, &algebra.unit()).re;
    Ok(FunctionalSpec {
        algebra: algebra.clone(),
        data,
        gram,
        cyclic_norm,
    })
}

fn check_gram_closed_form(algebra: &AlgebraDescriptor, data: &FunctionalData, gram: &CMatrix) -> Result<()> {
    let bad = |what: String| Err(Error::NumericalBreakdown(format!("Gram matrix mismatch: {what}")));
    match (algebra.kind, data) {
        (AlgebraKind::Commutative { .. }, FunctionalData::Weights(w)) => {
            if *gram != real_diag(w) {
                return bad("commutative Gram is not diag(w)".into());
            }
        }
        (AlgebraKind::FullMatrix { k }, FunctionalData::Density(rho)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(GRAM_SEED);
            for _ in 0..GRAM_SPOT_CHECKS {
                let r = rng.random_range(0..k * k);
                let col = rng.random_range(0..k * k);
                let (i, j) = (r / k, r % k);
                let (l, m) = (col / k, col % k);
                let expected = if i == l { rho[(j, m)] } else { ZERO };
                if (gram[(r, col)] - expected).norm() > 1e-12 * (1.0 + frobenius(rho)) {
                    return bad(format!("entry ({r}, {col})"));
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(())
}

/// Both parts of a functional decomposition with diagnostics.
#[derive(Debug, Clone)]
pub struct FunctionalSplit {
    pub absolutely_continuous: FunctionalSpec,
    pub singular: FunctionalSpec,
    /// Smallest eigenvalue (or weight) of each reconstructed part before clamping.
    pub raw_min_eigenvalues: [f64; 2],
    /// `max_i |g_a(b_i) + g_s(b_i) - g(b_i)|`.
    pub sum_error: f64,
    /// Distance between each rebuilt Gram matrix and the operator part it came from.
    pub gram_errors: [f64; 2],
}

pub fn functional_decompose(
    f: &FunctionalSpec,
    g: &FunctionalSpec,
) -> Result<(FunctionalSpec, FunctionalSpec)> {
    let split = functional_decompose_detailed(f, g)?;
    Ok((split.absolutely_continuous, split.singular))
}

pub fn functional_decompose_detailed(f: &FunctionalSpec, g: &FunctionalSpec) -> Result<FunctionalSplit> {
    if f.algebra != g.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let algebra = &g.algebra;
    let tol = *g.gram.tolerance();
    let parts = decompose(&f.gram, &g.gram)?;
    let unit = algebra.unit();

    let rebuild = |part: &PsdMatrix| -> Result<(FunctionalSpec, f64, f64)> {
        // g_part(b_r) = (G_part u)_r
        let values = part.entries() * &unit;
        let (data, raw_min) = read_back(algebra, &values)?;
        if raw_min < -REPRESENTABILITY_TOL {
            return Err(Error::NotRepresentable(format!(
                "reconstructed data has eigenvalue {raw_min:e}"
            )));
        }
        let spec = functional_from_data(algebra, data, &tol)?;
        let gram_error = frobenius(&(spec.gram.entries() - part.entries()));
        if gram_error > 1e-7 * (1.0 + g.gram.frobenius_norm()) {
            return Err(Error::NotRepresentable(format!(
                "Gram matrix of the rebuilt functional is off by {gram_error:e}"
            )));
        }
        Ok((spec, raw_min, gram_error))
    };
    let (abs_spec, abs_min, abs_gram) = rebuild(&parts.b_abs)?;
    let (sing_spec, sing_min, sing_gram) = rebuild(&parts.b_sing)?;

    let mut sum_error: f64 = 0.0;
    for i in 0..algebra.dim() {
        let b = algebra.basis(i);
        let d = abs_spec.evaluate(&b) + sing_spec.evaluate(&b) - g.evaluate(&b);
        sum_error = sum_error.max(d.norm());
    }
    if sum_error > 1e-8 * (1.0 + g.gram.frobenius_norm()) {
        return Err(Error::NumericalBreakdown(format!("g_a + g_s differs from g by {sum_error:e}")));
    }
    Ok(FunctionalSplit {
        absolutely_continuous: abs_spec,
        singular: sing_spec,
        raw_min_eigenvalues: [abs_min, sing_min],
        sum_error,
        gram_errors: [abs_gram, sing_gram],
    })
}

/// Recovers weights or a density from the values on the basis, clamping
/// roundoff-level negativity. Returns the data and its unclamped minimum.
fn read_back(algebra: &AlgebraDescriptor, values: &CVector) -> Result<(FunctionalData, f64)> {
    match algebra.kind {
        AlgebraKind::Commutative { .. } => {
            let scale = 1.0 + values.norm();
            if let Some(z) = values.iter().find(|z| z.im.abs() > REPRESENTABILITY_TOL * scale) {
                return Err(Error::NotRepresentable(format!("weight {z} is not real")));
            }
            let raw: Vec<f64> = values.iter().map(|z| z.re).collect();
            let min = raw.iter().copied().fold(f64::INFINITY, f64::min);
            Ok((FunctionalData::Weights(raw.into_iter().map(|x| x.max(0.0)).collect()), min))
        }
        AlgebraKind::FullMatrix { k } => {
            // tr(ρ E_ij) = ρ_ji
            let rho = CMatrix::from_fn(k, k, |j, i| values[i * k + j]);
            let asym = frobenius(&(&rho - rho.adjoint()));
            if asym > REPRESENTABILITY_TOL * (1.0 + frobenius(&rho)) {
                return Err(Error::NotRepresentable(format!("density is not Hermitian ({asym:e})")));
            }
            let eig = jacobi_eigh(&hermitian_part(&rho));
            let min = eig.values.last().copied().unwrap_or(0.0);
            let clamped: Vec<f64> = eig.values.iter().map(|&v| v.max(0.0)).collect();
            let rebuilt = &eig.vectors * real_diag(&clamped) * eig.vectors.adjoint();
            Ok((FunctionalData::Density(hermitian_part(&rebuilt)), min))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::from_real_rows;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn weights(w: &[f64]) -> FunctionalSpec {
        let alg = AlgebraDescriptor::commutative(w.len()).unwrap();
        functional_from_data(&alg, FunctionalData::Weights(w.to_vec()), &tol()).unwrap()
    }

    fn density(rho: CMatrix) -> FunctionalSpec {
        let alg = AlgebraDescriptor::full_matrix(rho.nrows()).unwrap();
        functional_from_data(&alg, FunctionalData::Density(rho), &tol()).unwrap()
    }

    #[test]
    fn algebra_structure() {
        let m2 = AlgebraDescriptor::full_matrix(2).unwrap();
        assert_eq!(m2.dim(), 4);
        // E12 E21 = E11, E21 E12 = E22, E12 E12 = 0
        assert_eq!(m2.product(1, 2), Some(0));
        assert_eq!(m2.product(2, 1), Some(3));
        assert_eq!(m2.product(1, 1), None);
        assert_eq!(m2.star(1), 2);
        assert_eq!(m2.unit(), crate::linalg::real_vector(&[1.0, 0.0, 0.0, 1.0]));
        assert!(AlgebraDescriptor::commutative(0).is_err());
    }

    #[test]
    fn uniform_weights() {
        let f = weights(&[1.0, 1.0]);
        assert_eq!(f.gram.entries(), &CMatrix::identity(2, 2));
        assert_eq!(f.cyclic_norm, 2.0);
    }

    #[test]
    fn scalar_algebra() {
        let f = density(from_real_rows(&[&[2.0]]));
        assert_eq!(f.gram.entries(), &from_real_rows(&[&[2.0]]));
        assert_eq!(f.cyclic_norm, 2.0);
    }

    /// Direct trace evaluation over all 16 basis pairs of M_2.
    #[test]
    fn matrix_gram_by_trace() {
        let rho = from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let f = density(rho.clone());
        let unit_matrix = |idx: usize| {
            let mut m = CMatrix::zeros(2, 2);
            m[(idx / 2, idx % 2)] = c(1.0, 0.0);
            m
        };
        for r in 0..4 {
            for col in 0..4 {
                let product = unit_matrix(col).adjoint() * unit_matrix(r);
                let expected = (&rho * product).trace();
                assert_eq!(f.gram.entries()[(r, col)], expected);
            }
        }
        assert_eq!(f.gram.entries(), &real_diag(&[1.0, 0.0, 1.0, 0.0]));
    }

    #[test]
    fn invalid_data() {
        let alg = AlgebraDescriptor::commutative(2).unwrap();
        let err = functional_from_data(&alg, FunctionalData::Weights(vec![1.0, -1.0]), &tol()).unwrap_err();
        assert_eq!(err.name(), "InvalidData");
        let alg = AlgebraDescriptor::full_matrix(2).unwrap();
        let err = functional_from_data(&alg, FunctionalData::Density(real_diag(&[1.0, -1.0])), &tol())
            .unwrap_err();
        assert_eq!(err.name(), "InvalidData");
        let err = functional_from_data(&alg, FunctionalData::Weights(vec![1.0; 4]), &tol()).unwrap_err();
        assert_eq!(err.name(), "InvalidData");
    }

    #[test]
    fn commutative_split_matches_atoms() {
        let (ga, gs) = functional_decompose(&weights(&[1.0, 0.0]), &weights(&[1.0, 1.0])).unwrap();
        match (&ga.data, &gs.data) {
            (FunctionalData::Weights(a), FunctionalData::Weights(s)) => {
                let close = |x: &[f64], y: &[f64]| x.iter().zip(y).all(|(p, q)| (p - q).abs() < 1e-12);
                assert!(close(a, &[1.0, 0.0]) && close(s, &[0.0, 1.0]), "{a:?} {s:?}");
            }
            _ => panic!("expected weights"),
        }
    }

    #[test]
    fn faithful_trace_dominates() {
        let f = density(CMatrix::identity(2, 2).scale(0.5));
        let rho_g = from_real_rows(&[&[2.0, 1.0], &[1.0, 1.0]]);
        let g = density(rho_g.clone());
        let (ga, gs) = functional_decompose(&f, &g).unwrap();
        match &ga.data {
            FunctionalData::Density(r) => assert!(frobenius(&(r - &rho_g)) < 1e-13),
            _ => panic!(),
        }
        assert!(gs.gram.is_zero());
    }

    #[test]
    fn zero_functional() {
        let (ga, gs) = functional_decompose(&weights(&[1.0, 0.0]), &weights(&[0.0, 0.0])).unwrap();
        assert!(ga.gram.is_zero() && gs.gram.is_zero());
    }

    #[test]
    fn algebra_mismatch() {
        let err = functional_decompose(&weights(&[1.0]), &density(from_real_rows(&[&[1.0]]))).unwrap_err();
        assert_eq!(err, Error::AlgebraMismatch);
    }
}
