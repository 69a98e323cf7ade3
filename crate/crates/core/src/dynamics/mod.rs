//! Iteration of a polynomial on its critical points and the stability criteria
//! built from it.
//!
//! For `f` of degree `d` with derivative `f'` of degree `k >= 1`, the residues
//! `t_n = f^{(n)} mod f'` satisfy `t_{n+1} = f(t_n) mod f'`, so they form an orbit
//! of a self-map of the finite ring `F_q[X]/(f')`. The product of `f^{(n)}` over
//! the roots of `f'` depends only on `t_n` and can be read off a resultant, which
//! makes every "for all `n`" condition decidable after the orbit closes.

mod char3;
mod converse;
mod criterion;
mod identities;
mod orbit;

pub use char3::{cubic_char3_irreducible, cubic_char3_theorem_check, CubicIterateCheck};
pub use converse::{converse_counterexample, ConverseCertificate};
pub use criterion::{
    assess, direct_iterate_check, iterate, necessary_condition_test, quadratic_stability_test,
    reachable_depth,
    DirectCheck, StabilityReport, Verdict, Witness, REPORTED_VALUES,
};
pub use identities::{adjusted_resultant, norm_identity_check, NormIdentity, ResultantMethod};
pub use orbit::{
    critical_residue_orbit, orbit_sets, CriterionValue, CriticalOrbit, OrbitRecord, OrbitSets,
    Parity,
};
