//! Lebesgue-type decomposition of one positive operator with respect to
//! another, together with the characterizations of absolute continuity and
//! singularity that it rests on.

mod characterize;
mod decompose;
mod douglas;
mod parallel;
mod radon_nikodym;

pub use characterize::{
    check_ac, check_mutual_ac, check_singular, AcReport, MutualAcReport, SingularReport,
    LIMIT_GAP_RTOL, MUTUAL_AC_TOL,
};
pub use decompose::{decompose, domination_alpha, DecompositionResult};
pub use douglas::{contract_factor, douglas_solve, DouglasConditions, DouglasSolution};
pub use parallel::{
    limit_ab, limit_ab_traced, parallel_sum, AlmostDominatedLimit, ParallelSumPlan,
    SumFactorization, MAX_DOUBLINGS,
};
pub use radon_nikodym::{rn_witness, RnWitness};
