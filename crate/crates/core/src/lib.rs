//! Exact models of twisted groupoids over the irrational rotation of the torus.
//!
//! Angles are elements of `Q + Z*theta` modulo `Z` with `theta` the inverse
//! golden ratio, so every identity in the construction is checked with
//! equality rather than a tolerance.

pub mod bundle;
pub mod exact_arith;
pub mod freegroup;
pub mod kumjian;
pub mod twistcore;
