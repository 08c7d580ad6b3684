//! Range inclusion T1 = T2 D and the contraction behind B <= A.

use lebdecomp::linalg::{frobenius, from_real_rows, pretty};
use lebdecomp::{contract_factor, douglas_solve, make_psd, Tolerance};

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    let t2 = from_real_rows(&[&[1.0, 0.0], &[0.0, 1.0], &[0.0, 0.0]]);
    let t1 = from_real_rows(&[&[2.0], &[-1.0], &[0.0]]);
    let sol = douglas_solve(&t1, &t2, &tol)?;
    println!("D =\n{}", pretty(&sol.factor_d));
    println!("alpha_min = {}", sol.alpha_min);
    println!("conditions: {:?}", sol.conditions(&t1, &t2, &tol));

    let escapes = from_real_rows(&[&[0.0], &[0.0], &[1.0]]);
    match douglas_solve(&escapes, &t2, &tol) {
        Ok(_) => println!("unexpected factorization"),
        Err(e) => println!("third axis: {}", e.name()),
    }

    let a = make_psd(&from_real_rows(&[&[4.0, 0.0], &[0.0, 1.0]]), &tol)?;
    let b = make_psd(&from_real_rows(&[&[2.0, 0.5], &[0.5, 0.5]]), &tol)?;
    let cf = contract_factor(&a, &b)?;
    let root = a.sqrt();
    let rebuilt = root.entries() * &cf * root.entries();
    println!("C =\n{}", pretty(&cf));
    println!("||A^(1/2) C A^(1/2) - B|| = {:.2e}", frobenius(&(rebuilt - b.entries())));
    Ok(())
}
