//! Cyclic Jacobi diagonalization of dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then annihilates the (now real) pivot with a plane rotation.
//! Sweeps stop once the off-diagonal Frobenius norm drops to
//! `1e-12 * ||A||_F`.

use crate::linalg::{frobenius, CMatrix, C64, ZERO};

const OFF_DIAGONAL_RTOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Descending.
    pub values: Vec<f64>,
    /// Unitary; column `k` belongs to `values[k]`.
    pub vectors: CMatrix,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for j in 0..n {
        for i in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes `h`, which must be square; only its Hermitian part is used.
pub fn jacobi_eigh(h: &CMatrix) -> HermitianEigen {
    assert!(h.is_square(), "jacobi_eigh requires a square matrix");
    let n = h.nrows();
    let mut a = (h + h.adjoint()).scale(0.5);
    let mut v = CMatrix::identity(n, n);
    let target = OFF_DIAGONAL_RTOL * frobenius(&a);
    let mut sweeps = 0;

    while sweeps < MAX_SWEEPS && off_diagonal_norm(&a) > target {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                // Skip pivots that are negligible against both diagonal entries.
                if r < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
                    a[(p, q)] = ZERO;
                    a[(q, p)] = ZERO;
                    continue;
                }
                let phase = apq / r; // e^{i phi}
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * cs;

                // J = D R with D = diag(1, conj(phase)) on (p, q).
                let j_pp = C64::new(cs, 0.0);
                let j_pq = C64::new(sn, 0.0);
                let j_qp = phase.conj() * (-sn);
                let j_qq = phase.conj() * cs;

                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * j_pp + akq * j_qp;
                    a[(k, q)] = akp * j_pq + akq * j_qq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
                    a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * j_pp + vkq * j_qp;
                    v[(k, q)] = vkp * j_pq + vkq * j_qq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = CMatrix::from_element(n, n, ZERO);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &v.column(src));
    }
    // Canonical phase: first entry of (near-)maximal modulus made real positive.
    for k in 0..n {
        let mut best = 0;
        for i in 1..n {
            if vectors[(i, k)].norm() > vectors[(best, k)].norm() + 1e-12 {
                best = i;
            }
        }
        let pivot = vectors[(best, k)];
        if pivot.norm() > 0.0 {
            let fix = pivot.conj() / pivot.norm();
            let scaled = vectors.column(k) * fix;
            vectors.set_column(k, &scaled);
        }
    }
    HermitianEigen {
        values,
        vectors,
        sweeps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, from_real_rows, orthonormality_defect, real_diag};

    fn reconstruct(e: &HermitianEigen) -> CMatrix {
        let d = real_diag(&e.values);
        &e.vectors * d * e.vectors.adjoint()
    }

    #[test]
    fn all_ones_two_by_two() {
        let m = from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]);
        let e = jacobi_eigh(&m);
        assert!((e.values[0] - 2.0).abs() < 1e-14);
        assert!(e.values[1].abs() < 1e-14);
        let k = e.vectors.column(1);
        assert!((k[0].norm() - 0.5f64.sqrt()).abs() < 1e-14);
        assert!((k[0] + k[1]).norm() < 1e-14);
    }

    #[test]
    fn complex_hermitian_round_trip() {
        let m = CMatrix::from_row_slice(
            3,
            3,
            &[
                c(2.0, 0.0),
                c(1.0, 1.0),
                c(0.0, -0.5),
                c(1.0, -1.0),
                c(3.0, 0.0),
                c(0.25, 0.0),
                c(0.0, 0.5),
                c(0.25, 0.0),
                c(1.0, 0.0),
            ],
        );
        let e = jacobi_eigh(&m);
        assert!(orthonormality_defect(&e.vectors) < 1e-13);
        assert!(crate::linalg::frobenius(&(reconstruct(&e) - &m)) < 1e-12);
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn diagonal_input_needs_no_sweep() {
        let e = jacobi_eigh(&real_diag(&[0.0, 5.0, 1.0]));
        assert_eq!(e.sweeps, 0);
        assert_eq!(e.values, vec![5.0, 1.0, 0.0]);
    }

    #[test]
    fn empty_matrix() {
        let e = jacobi_eigh(&CMatrix::zeros(0, 0));
        assert!(e.values.is_empty());
    }
}
