//! How well By can be approximated by Az, for an absolutely continuous and a
//! singular direction.

use lebdecomp::linalg::{real_diag, real_vector};
use lebdecomp::{domination_alpha, make_psd, rn_witness, Tolerance};

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    let a = make_psd(&real_diag(&[1.0, 0.5, 0.0]), &tol)?;
    let b = make_psd(&real_diag(&[2.0, 0.0, 1.0]), &tol)?;
    for y in [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]] {
        let w = rn_witness(&a, &b, &real_vector(&y))?;
        let z: Vec<f64> = w.z.iter().map(|v| v.re).collect();
        println!("y = {y:?}: residual {:.3e}, Re z = {z:?}", w.residual);
    }
    println!("B_a <= alpha A with alpha = {}", domination_alpha(&a, &b)?);
    Ok(())
}
