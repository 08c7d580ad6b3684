//! Reductions of concrete objects to pairs of PSD matrices: Hermitian forms,
//! finitely additive measures on finite algebras of sets, and positive
//! functionals on finite-dimensional *-algebras.

pub mod forms;
pub mod functionals;
pub mod measures;

pub use forms::{form_decompose, is_almost_dominated, is_closable, FormSpec};
pub use functionals::{
    functional_decompose, functional_decompose_detailed, functional_from_data, AlgebraDescriptor, AlgebraKind,
    FunctionalData, FunctionalSpec, FunctionalSplit,
};
pub use measures::{induces_measure, measure_decompose, measure_induced_operator, MeasureTable};
