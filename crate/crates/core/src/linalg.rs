//! Dense complex matrix helpers.

use nalgebra::{Complex, DMatrix, DVector};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub(crate) const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub(crate) const ONE: C64 = C64 { re: 1.0, im: 0.0 };

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Embeds a real row-major matrix.
pub fn from_real_rows(rows: &[&[f64]]) -> CMatrix {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    CMatrix::from_fn(nrows, ncols, |i, j| c(rows[i][j], 0.0))
}

pub fn real_diag(values: &[f64]) -> CMatrix {
    CMatrix::from_diagonal(&CVector::from_iterator(
        values.len(),
        values.iter().map(|&v| c(v, 0.0)),
    ))
}

pub fn real_vector(values: &[f64]) -> CVector {
    CVector::from_iterator(values.len(), values.iter().map(|&v| c(v, 0.0)))
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).scale(0.5)
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    singular_values(m).into_iter().fold(0.0, f64::max)
}

/// Thin singular value decomposition `m = u diag(sigma) v*`, with `sigma`
/// in descending order.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: CMatrix,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

const SVD_MAX_SWEEPS: usize = 80;

/// One-sided (Hestenes) Jacobi SVD.
pub fn svd(m: &CMatrix) -> Svd {
    let (rows, cols) = m.shape();
    if cols > rows {
        let t = svd(&m.adjoint());
        return Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        };
    }
    let mut w = m.clone();
    let mut v = CMatrix::identity(cols, cols);
    for _ in 0..SVD_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let alpha = w.column(p).norm_squared();
                let beta = w.column(q).norm_squared();
                let gamma = w.column(p).dotc(&w.column(q));
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // Rotate column q's phase so the inner product is real.
                let phase = gamma.unscale(g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                for target in [&mut w, &mut v] {
                    for i in 0..target.nrows() {
                        let xp = target[(i, p)];
                        let xq = target[(i, q)] * phase;
                        target[(i, p)] = xp.scale(cs) - xq.scale(sn);
                        target[(i, q)] = xp.scale(sn) + xq.scale(cs);
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<(usize, f64)> = (0..cols).map(|j| (j, w.column(j).norm())).collect();
    order.sort_by(|x, y| y.1.total_cmp(&x.1));
    let mut u = CMatrix::zeros(rows, cols);
    let mut v_sorted = CMatrix::zeros(cols, cols);
    let mut sigma = Vec::with_capacity(cols);
    for (dst, &(src, s)) in order.iter().enumerate() {
        if s > 0.0 {
            u.set_column(dst, &w.column(src).unscale(s));
        }
        v_sorted.set_column(dst, &v.column(src));
        sigma.push(s);
    }
    Svd { u, sigma, v: v_sorted }
}

pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    svd(m).sigma
}

/// Orthonormal basis for the column space of `m`, keeping left singular
/// vectors whose singular value exceeds `threshold`.
pub fn column_space(m: &CMatrix, threshold: f64) -> CMatrix {
    let n = m.nrows();
    if n == 0 || m.ncols() == 0 {
        return CMatrix::zeros(n, 0);
    }
    let d = svd(m);
    let keep = d.sigma.iter().filter(|&&s| s > threshold).count();
    d.u.columns(0, keep).into_owned()
}

/// Numerical rank with the cutoff `max(rel * sigma_max, abs)`.
pub fn numerical_rank(m: &CMatrix, rel: f64, abs: f64) -> usize {
    let sv = singular_values(m);
    let smax = sv.first().copied().unwrap_or(0.0);
    let cut = (rel * smax).max(abs);
    sv.iter().filter(|&&s| s > cut).count()
}

/// Moore-Penrose inverse of a general matrix via the SVD.
pub fn pinv_general(m: &CMatrix, rel: f64, abs: f64) -> CMatrix {
    let (rows, cols) = m.shape();
    if rows == 0 || cols == 0 {
        return CMatrix::zeros(cols, rows);
    }
    let d = svd(m);
    let smax = d.sigma.first().copied().unwrap_or(0.0);
    let cut = (rel * smax).max(abs);
    let keep = d.sigma.iter().filter(|&&s| s > cut).count();
    let mut out = CMatrix::zeros(cols, rows);
    for k in 0..keep {
        out += (d.v.column(k) * d.u.column(k).adjoint()).unscale(d.sigma[k]);
    }
    out
}

/// Rows of `m` with six significant digits; parts below `1e-12 * max|m_ij|`
/// print as zero.
pub fn pretty(m: &CMatrix) -> String {
    let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let clean = |x: f64| if x.abs() <= 1e-12 * scale { 0.0 } else { x };
    let cells: Vec<Vec<String>> = (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| {
                    let (re, im) = (clean(m[(i, j)].re), clean(m[(i, j)].im));
                    match (re == 0.0, im == 0.0) {
                        (_, true) => format!("{re:.6}"),
                        (true, false) => format!("{im:.6}i"),
                        (false, false) => format!("{re:.6}{im:+.6}i"),
                    }
                })
                .collect()
        })
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            format!("[ {} ]\n", padded.join("  "))
        })
        .collect()
}

/// Horizontal concatenation `[left | right]`.
pub fn hstack(left: &CMatrix, right: &CMatrix) -> CMatrix {
    assert_eq!(left.nrows(), right.nrows(), "hstack row mismatch");
    let mut out = CMatrix::zeros(left.nrows(), left.ncols() + right.ncols());
    out.columns_mut(0, left.ncols()).copy_from(left);
    out.columns_mut(left.ncols(), right.ncols()).copy_from(right);
    out
}

/// Vertical concatenation.
pub fn vstack(top: &CMatrix, bottom: &CMatrix) -> CMatrix {
    assert_eq!(top.ncols(), bottom.ncols(), "vstack column mismatch");
    let mut out = CMatrix::zeros(top.nrows() + bottom.nrows(), top.ncols());
    out.rows_mut(0, top.nrows()).copy_from(top);
    out.rows_mut(top.nrows(), bottom.nrows()).copy_from(bottom);
    out
}

/// `max |m_ij - δ_ij|` for `m = Q* Q`.
pub fn orthonormality_defect(q: &CMatrix) -> f64 {
    let g = q.adjoint() * q;
    let mut worst: f64 = 0.0;
    for i in 0..g.nrows() {
        for j in 0..g.ncols() {
            let target = if i == j { ONE } else { ZERO };
            worst = worst.max((g[(i, j)] - target).norm());
        }
    }
    worst
}
