//! (2^k A):B increases to B_a.

use lebdecomp::linalg::{frobenius, from_real_rows};
use lebdecomp::{decompose, limit_ab_traced, make_psd, parallel_sum, Tolerance};

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    let a = make_psd(&from_real_rows(&[&[2.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 0.0]]), &tol)?;
    let b = make_psd(&from_real_rows(&[&[1.0, 0.0, 1.0], &[0.0, 1.0, 0.0], &[1.0, 0.0, 2.0]]), &tol)?;
    let b_abs = decompose(&a, &b)?.b_abs;

    for k in [0, 2, 4, 8, 16, 24] {
        let x = parallel_sum(&a.scaled(2f64.powi(k)), &b)?;
        println!("k = {k:2}: ||(2^k A):B - B_a|| = {:.3e}", frobenius(&(x.entries() - b_abs.entries())));
    }
    let lim = limit_ab_traced(&a, &b, &tol)?;
    println!(
        "limit after {} doublings, last step {:.3e}, distance to B_a {:.3e}",
        lim.doublings,
        lim.last_step,
        frobenius(&(lim.limit.entries() - b_abs.entries()))
    );
    Ok(())
}
