//! Every route to absolute continuity and singularity, side by side.

use lebdecomp::linalg::real_diag;
use lebdecomp::{check_ac, check_mutual_ac, check_singular, make_psd, Tolerance};

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    let cases = [
        ("B inside ran A", [1.0, 1.0, 0.0], [3.0, 0.0, 0.0]),
        ("disjoint supports", [1.0, 0.0, 0.0], [0.0, 2.0, 1.0]),
        ("overlapping", [1.0, 1.0, 0.0], [1.0, 1.0, 1.0]),
    ];
    for (label, da, db) in cases {
        let a = make_psd(&real_diag(&da), &tol)?;
        let b = make_psd(&real_diag(&db), &tol)?;
        println!("{label}");
        println!("  {:?}", check_ac(&a, &b)?);
        println!("  {:?}", check_singular(&a, &b)?);
        println!("  {:?}", check_mutual_ac(&a, &b)?);
    }
    Ok(())
}
