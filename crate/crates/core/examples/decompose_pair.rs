//! Split B into its A-absolutely continuous and A-singular parts.

use lebdecomp::linalg::{c, pretty, CMatrix};
use lebdecomp::{check_ac, check_singular, decompose, make_psd, Tolerance};

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    // A sees only the first coordinate; B couples both.
    let a = make_psd(&lebdecomp::linalg::real_diag(&[1.0, 0.0]), &tol)?;
    let mut raw = CMatrix::identity(2, 2);
    raw[(0, 1)] = c(0.5, 0.5);
    raw[(1, 0)] = c(0.5, -0.5);
    let b = make_psd(&raw, &tol)?;

    let parts = decompose(&a, &b)?;
    println!("B_a =\n{}", pretty(parts.b_abs.entries()));
    println!("B_s =\n{}", pretty(parts.b_sing.entries()));
    println!("dim M = {}", parts.m_basis.dim());
    println!("B_a << A: {}", check_ac(&a, &parts.b_abs)?.verdict);
    println!("B_s singular to A: {}", check_singular(&a, &parts.b_sing)?.verdict);
    Ok(())
}
