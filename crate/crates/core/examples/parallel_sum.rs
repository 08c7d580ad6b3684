//! Parallel sum A:B and its variational characterization.

use lebdecomp::linalg::{real_diag, real_vector};
use lebdecomp::{make_psd, parallel_sum, pinv, Tolerance};

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    let a = make_psd(&real_diag(&[1.0, 2.0, 0.0]), &tol)?;
    let b = make_psd(&real_diag(&[1.0, 2.0, 5.0]), &tol)?;
    let ps = parallel_sum(&a, &b)?;
    println!("eigenvalues of A:B = {:?}", ps.eigenvalues());

    let x = real_vector(&[1.0, 1.0, 1.0]);
    let y = pinv(&a.sum(&b)?).entries() * (a.effective() * &x);
    let objective = a.quadratic_form(&(&x - &y)) + b.quadratic_form(&y);
    println!("<(A:B)x, x> = {:.12}", ps.quadratic_form(&x));
    println!("min_y <A(x-y), x-y> + <By, y> = {objective:.12}");
    Ok(())
}
