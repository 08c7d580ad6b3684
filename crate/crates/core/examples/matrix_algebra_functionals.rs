//! Decomposing a state on M_2 relative to a pure state.

use lebdecomp::adapters::{functional_decompose_detailed, functional_from_data, AlgebraDescriptor, FunctionalData};
use lebdecomp::linalg::{from_real_rows, pretty};
use lebdecomp::Tolerance;

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    let m2 = AlgebraDescriptor::full_matrix(2)?;
    let pure = FunctionalData::Density(from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]));
    let mixed = FunctionalData::Density(from_real_rows(&[&[0.5, 0.25], &[0.25, 0.5]]));
    let f = functional_from_data(&m2, pure, &tol)?;
    let g = functional_from_data(&m2, mixed, &tol)?;
    println!("Gram of f (basis E11, E12, E21, E22):\n{}", pretty(f.gram.entries()));

    let split = functional_decompose_detailed(&f, &g)?;
    for (label, part) in [("g_a", &split.absolutely_continuous), ("g_s", &split.singular)] {
        if let FunctionalData::Density(rho) = &part.data {
            println!("{label}: density\n{}g(1) = {:.6}", pretty(rho), part.cyclic_norm);
        }
    }
    println!("sum error {:.2e}", split.sum_error);
    Ok(())
}
