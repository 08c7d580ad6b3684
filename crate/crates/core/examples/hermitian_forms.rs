//! Regular and singular parts of a form t relative to w.

use lebdecomp::adapters::{form_decompose, is_almost_dominated, is_closable, FormSpec};
use lebdecomp::linalg::{from_real_rows, pretty};
use lebdecomp::{make_psd, Tolerance};

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    let w = FormSpec::new(make_psd(&from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]), &tol)?);
    let t = FormSpec::new(make_psd(&from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]), &tol)?);
    println!("t closable w.r.t. w: {}", is_closable(&t, &w)?);
    let (regular, singular) = form_decompose(&t, &w)?;
    println!("t_r =\n{}", pretty(regular.gram().entries()));
    println!("t_s =\n{}", pretty(singular.gram().entries()));
    println!("t_r almost dominated by w: {}", is_almost_dominated(&regular, &w)?);
    Ok(())
}
