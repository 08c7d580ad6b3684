mod common;

use common::*;
use lebdecomp::adapters::*;
use lebdecomp::linalg::{c, frobenius, CMatrix, CVector};
use lebdecomp::*;
use rand::Rng;

fn random_weights(r: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| if r.random_bool(0.35) { 0.0 } else { r.random_range(0.01..5.0) })
        .collect()
}

fn atomwise(alpha: &[f64], beta: &[f64]) -> (Vec<f64>, Vec<f64>) {
    alpha
        .iter()
        .zip(beta)
        .map(|(&a, &b)| if a > 0.0 { (b, 0.0) } else { (0.0, b) })
        .unzip()
}

#[test]
fn measures_match_atomwise_oracle() {
    let tol = Tolerance::default();
    let mut r = rng(41);
    for _ in 0..100 {
        let n = r.random_range(1..=12);
        let alpha = MeasureTable::from_values(random_weights(&mut r, n)).unwrap();
        let beta = MeasureTable::from_values(random_weights(&mut r, n)).unwrap();
        let (abs, sing) = measure_decompose(&alpha, &beta, &tol).unwrap();
        let (ea, es) = atomwise(alpha.values(), beta.values());
        for i in 0..n {
            assert!((abs.values()[i] - ea[i]).abs() <= 1e-9);
            assert!((sing.values()[i] - es[i]).abs() <= 1e-9);
        }
        assert!(abs.is_absolutely_continuous_wrt(&alpha));
        assert!(sing.is_singular_wrt(&alpha));
    }
}

#[test]
fn set_values_from_indicators() {
    let tol = Tolerance::default();
    let mut r = rng(42);
    for _ in 0..20 {
        let n = r.random_range(1..=12);
        let m = MeasureTable::from_values(random_weights(&mut r, n)).unwrap();
        let a = measure_induced_operator(&m, &tol).unwrap();
        assert!(induces_measure(&a).unwrap());
        for _ in 0..20 {
            let subset: Vec<usize> = (0..n).filter(|_| r.random_bool(0.5)).collect();
            let chi = m.indicator(&subset);
            let direct: f64 = subset.iter().map(|&i| m.values()[i]).sum();
            assert!((a.quadratic_form(&chi) - direct).abs() <= 1e-12 * (1.0 + direct));
            assert!((m.measure_of(&subset) - direct).abs() <= 1e-12 * (1.0 + direct));
        }
    }
}

#[test]
fn atom_mismatch_is_rejected() {
    let tol = Tolerance::default();
    let a = MeasureTable::new(vec!["x".into(), "y".into()], vec![1.0, 0.0]).unwrap();
    let b = MeasureTable::new(vec!["x".into(), "z".into()], vec![1.0, 1.0]).unwrap();
    assert_eq!(measure_decompose(&a, &b, &tol).unwrap_err().name(), "AtomMismatch");
}

#[test]
fn commutative_functionals_agree_with_measures() {
    let tol = Tolerance::default();
    let mut r = rng(43);
    for _ in 0..100 {
        let n = r.random_range(1..=8);
        let alg = AlgebraDescriptor::commutative(n).unwrap();
        let (wf, wg) = (random_weights(&mut r, n), random_weights(&mut r, n));
        let f = functional_from_data(&alg, FunctionalData::Weights(wf.clone()), &tol).unwrap();
        let g = functional_from_data(&alg, FunctionalData::Weights(wg.clone()), &tol).unwrap();
        let (ga, gs) = functional_decompose(&f, &g).unwrap();
        let alpha = MeasureTable::from_values(wf).unwrap();
        let beta = MeasureTable::from_values(wg).unwrap();
        let (ma, ms) = measure_decompose(&alpha, &beta, &tol).unwrap();
        for (part, measure) in [(&ga, &ma), (&gs, &ms)] {
            let FunctionalData::Weights(w) = &part.data else { panic!("commutative part has weights") };
            for (x, y) in w.iter().zip(measure.values()) {
                assert!((x - y).abs() <= 1e-9);
            }
        }
    }
}

fn random_density(r: &mut impl Rng, k: usize) -> CMatrix {
    let rank = r.random_range(0..=k);
    random_psd_raw(r, k, rank)
}

#[test]
fn matrix_functionals_split_into_representable_parts() {
    let tol = Tolerance::default();
    let mut r = rng(44);
    for trial in 0..100 {
        let k = 2 + trial % 2;
        let alg = AlgebraDescriptor::full_matrix(k).unwrap();
        let f = functional_from_data(&alg, FunctionalData::Density(random_density(&mut r, k)), &tol).unwrap();
        let g = functional_from_data(&alg, FunctionalData::Density(random_density(&mut r, k)), &tol).unwrap();
        let split = functional_decompose_detailed(&f, &g).unwrap();
        let (ga, gs) = (&split.absolutely_continuous, &split.singular);
        assert!(ga.data_min_eigenvalue() >= -1e-8);
        assert!(gs.data_min_eigenvalue() >= -1e-8);
        for i in 0..alg.dim() {
            let b = alg.basis(i);
            let diff = ga.evaluate(&b) + gs.evaluate(&b) - g.evaluate(&b);
            assert!(diff.norm() <= 1e-8 * (1.0 + g.cyclic_norm));
        }
        assert!(check_ac(&f.gram, &ga.gram).unwrap().verdict);
        assert!(check_singular(&f.gram, &gs.gram).unwrap().verdict);
        let lim = limit_ab(&f.gram, &g.gram, &tol).unwrap();
        assert!(frobenius(&(lim.entries() - ga.gram.entries())) <= 1e-6 * (1.0 + g.gram.frobenius_norm()));
    }
}

#[test]
fn algebra_mismatch_is_rejected() {
    let tol = Tolerance::default();
    let f = functional_from_data(&AlgebraDescriptor::commutative(4).unwrap(), FunctionalData::Weights(vec![1.0; 4]), &tol).unwrap();
    let g = functional_from_data(
        &AlgebraDescriptor::full_matrix(2).unwrap(),
        FunctionalData::Density(CMatrix::identity(2, 2)),
        &tol,
    )
    .unwrap();
    assert_eq!(functional_decompose(&f, &g).unwrap_err().name(), "AlgebraMismatch");
}

#[test]
fn induces_measure_on_diagonal_and_dense() {
    let tol = Tolerance::default();
    let mut r = rng(45);
    for trial in 0..200 {
        let n = r.random_range(1..=10);
        if trial % 2 == 0 {
            let d = CMatrix::from_diagonal(&CVector::from_iterator(n, random_weights(&mut r, n).into_iter().map(|x| c(x, 0.0))));
            assert!(induces_measure(&make_psd(&d, &tol).unwrap()).unwrap());
        } else if n > 1 {
            let rank = r.random_range(1..=n);
            let a = psd(&random_psd_raw(&mut r, n, rank));
            let off = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j);
            let biggest = off.map(|(i, j)| a.entries()[(i, j)].norm()).fold(0.0, f64::max);
            assert_eq!(induces_measure(&a).unwrap(), biggest <= 1e-9 * (1.0 + a.frobenius_norm()));
        }
    }
}

#[test]
fn forms_split_into_closable_and_singular() {
    let mut r = rng(46);
    for p in corpus(47, 50) {
        let t = FormSpec::new(p.b.clone());
        let w = FormSpec::new(p.a.clone());
        let (regular, singular) = form_decompose(&t, &w).unwrap();
        assert!(is_closable(&regular, &w).unwrap());
        assert!(is_almost_dominated(&regular, &w).unwrap());
        let x = random_vector(&mut r, p.a.dim());
        let y = random_vector(&mut r, p.a.dim());
        let total = regular.evaluate(&x, &y) + singular.evaluate(&x, &y);
        assert!((total - t.evaluate(&x, &y)).norm() <= 1e-7 * (1.0 + p.b.frobenius_norm()) * x.norm() * y.norm());
    }
}
