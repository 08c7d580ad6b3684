//! Seeded random instances shared by the integration tests and the acceptance run.

#![allow(dead_code)]

use lebdecomp::linalg::{c, CMatrix, CVector};
use lebdecomp::{make_psd, PsdMatrix, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut impl Rng, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> CVector {
    CVector::from_fn(n, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
}

pub fn random_unitary(rng: &mut impl Rng, n: usize) -> CMatrix {
    random_complex(rng, n, n).qr().q()
}

/// `U diag(lambda) U*` for the first `lambda.len()` columns of `u`.
pub fn from_columns(u: &CMatrix, lambda: &[f64]) -> CMatrix {
    let cols = u.columns(0, lambda.len()).into_owned();
    let d = CMatrix::from_diagonal(&CVector::from_iterator(lambda.len(), lambda.iter().map(|&x| c(x, 0.0))));
    let m = &cols * d * cols.adjoint();
    (&m + m.adjoint()).scale(0.5)
}

/// Eigenvalues in `[0.1, 1] * scale`.
pub fn spectrum(rng: &mut impl Rng, rank: usize, scale: f64) -> Vec<f64> {
    (0..rank).map(|_| scale * rng.random_range(0.1..1.0)).collect()
}

/// Random PSD matrix of the given rank with a well-separated spectrum.
pub fn random_psd_raw(rng: &mut impl Rng, n: usize, rank: usize) -> CMatrix {
    let u = random_unitary(rng, n);
    let scale = rng.random_range(0.5..4.0);
    from_columns(&u, &spectrum(rng, rank, scale))
}

pub fn psd(raw: &CMatrix) -> PsdMatrix {
    make_psd(raw, &Tolerance::default()).expect("corpus matrices are PSD")
}

#[derive(Clone)]
pub struct Pair {
    pub a: PsdMatrix,
    pub b: PsdMatrix,
}

/// Independent pairs with `n` in 2..=16 and ranks uniform in `0..=n`.
pub fn corpus(seed: u64, count: usize) -> Vec<Pair> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(2..=16);
            let ra = r.random_range(0..=n);
            let rb = r.random_range(0..=n);
            Pair {
                a: psd(&random_psd_raw(&mut r, n, ra)),
                b: psd(&random_psd_raw(&mut r, n, rb)),
            }
        })
        .collect()
}

/// `A` and `B` supported on complementary blocks of one orthonormal basis.
pub fn singular_pairs(seed: u64, count: usize) -> Vec<Pair> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(2..=16);
            let split = r.random_range(1..n);
            let u = random_unitary(&mut r, n);
            let mut la = spectrum(&mut r, split, 1.0);
            la.resize(n, 0.0);
            let mut lb = vec![0.0; split];
            lb.extend(spectrum(&mut r, n - split, 2.0));
            let lb_rank = r.random_range(1..=n - split);
            lb.truncate(split + lb_rank);
            Pair {
                a: psd(&from_columns(&u, &la)),
                b: psd(&from_columns(&u, &lb)),
            }
        })
        .collect()
}

/// `ran B ⊆ ran A` by construction.
pub fn ac_pairs(seed: u64, count: usize) -> Vec<Pair> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(2..=16);
            let ra = r.random_range(1..=n);
            let u = random_unitary(&mut r, n);
            let a = from_columns(&u, &spectrum(&mut r, ra, 1.0));
            let rb = r.random_range(0..=ra);
            let inner = random_psd_raw(&mut r, ra, rb);
            let basis = u.columns(0, ra).into_owned();
            let b = &basis * inner * basis.adjoint();
            Pair {
                a: psd(&a),
                b: psd(&(&b + b.adjoint()).scale(0.5)),
            }
        })
        .collect()
}

pub fn max_abs_diff(x: &CMatrix, y: &CMatrix) -> f64 {
    (x - y).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
