//! Lebesgue decomposition of measures on finitely many atoms, through their
//! diagonal operators.

use lebdecomp::adapters::{measure_decompose, measure_induced_operator, induces_measure, MeasureTable};
use lebdecomp::Tolerance;

fn main() -> lebdecomp::Result<()> {
    let tol = Tolerance::default();
    let atoms: Vec<String> = ["rain", "snow", "sun", "fog"].iter().map(|s| s.to_string()).collect();
    let alpha = MeasureTable::new(atoms.clone(), vec![0.5, 0.0, 2.0, 0.0])?;
    let beta = MeasureTable::new(atoms, vec![1.0, 3.0, 0.0, 0.25])?;
    let (abs, sing) = measure_decompose(&alpha, &beta, &tol)?;
    for (i, atom) in alpha.atoms().iter().enumerate() {
        println!("{atom:>5}: beta_a = {:.3}, beta_s = {:.3}", abs.values()[i], sing.values()[i]);
    }
    let op = measure_induced_operator(&beta, &tol)?;
    println!("beta(rain, snow) = {}", beta.measure_of(&[0, 1]));
    println!("operator of beta induces a measure: {}", induces_measure(&op)?);
    Ok(())
}
