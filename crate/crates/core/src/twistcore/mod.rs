//! The twist `E -> G = X x|_alpha F2` built from letter bundles.
//!
//! Every word `w` carries a principal circle bundle `B^w -> X`: the letter
//! bundles for `w_1, ..., w_n` chained through the action `alpha`, modulo the
//! anti-diagonal circle action. `E` is the disjoint union of the `B^w`, with
//! multiplication given by the balanced products `psi_{w,w'}`.

use thiserror::Error;

mod checks;
mod classes;
mod cocycle;
mod groupoid;
mod isotropy;
mod letters;
mod minimality;
mod psi;
pub mod sample;

pub use checks::{
    check_centrality, check_groupoid_axioms, check_twist_axioms, CheckReport, Failure,
};
pub use classes::{bar, canonicalize, t_act_class, tuple_validate, ClassRep, TupleElement};
pub use cocycle::{
    build_cocycle_twist, check_cocycle_identity, cocycle_from_section, BilinearCocycle,
    CoboundaryShift, CocycleElement, CocycleTwist, SectionCocycle, TwoCocycle, ZeroCocycle,
};
pub use groupoid::{
    e_invert, e_multiply, e_range, e_source, g_invert, g_multiply, g_range, g_source, iota, pi,
    t_act_elem, FreeGroupTwist, GroupoidElement, Sampler, TwistElement, TwistStructure, WordFilter,
};
pub use isotropy::{
    chern_of_word, is_isotropic, isotropy_interior, obstruction_certificate,
    obstruction_certificate_sampled, restrict_twist, word_clutching_samples, SeamTable,
};
pub use letters::{alpha, bar_letter, AlphaAction, LetterBundle};
pub use minimality::{minimality_report, minimality_report_for, orbit_max_gap, MinimalityReport};
pub use psi::{psi, psi_tuples};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    /// 1-based index `i` of the first failing condition
    /// `p(c_i) = alpha_{w_{i+1}}(p(c_{i+1}))`.
    #[error("chain condition fails after entry {0}")]
    ChainMismatch(usize),
    /// 1-based index of an entry that is not in its letter bundle.
    #[error("entry {0} does not lie in the bundle of its letter")]
    WrongBundle(usize),
    #[error("expected {expected} tuple entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("circle coordinates do not sum to zero")]
    NotInKernel,
    #[error("not composable: source {left} does not match range {right}")]
    NotComposable { left: String, right: String },
    #[error("arrow {0} violates range = alpha_w(source)")]
    InvalidArrow(String),
    #[error("word {0} is outside the grading of this twist")]
    NotInGrading(String),
    #[error("word filter is not closed under the groupoid operations: {0}")]
    NotSubgroupoid(String),
    #[error("map is not a section of pi: {0}")]
    NotASection(String),
    #[error("2-cocycle identity violated at {0}")]
    CocycleIdentityViolated(String),
}
