//! Hom complexes out of the chain and hook resolutions, their cohomology,
//! an independent Hom oracle, and the periodicity checks.

mod complex;
mod hook;
mod oracle;
mod verify;

pub use complex::{
    build_hom_complex, build_hom_complex_with, cohomology_dims, euler_check, ext_dims, CochainComplex,
    DegreeBasis, HomComplex, Limits, Target,
};
pub use hook::{hook_ext_crosscheck, hook_ext_dims, hook_hom_complex, HookCrossReport, ShiftedHookCheck};
pub use oracle::hom_dim_oracle;
pub use verify::{
    check_hypotheses, verify_complex_isomorphism, verify_periodicity, verify_theorem, Hypotheses,
    IsomorphismReport, PeriodicityReport, Theorem, Verdict,
};
