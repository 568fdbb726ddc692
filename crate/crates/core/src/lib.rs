//! Finite fields, matrix and permutation groups, and group actions for
//! checking half-transitivity of linear groups and 3/2-transitivity of
//! permutation groups.

pub mod actions;
pub mod atlas;
pub mod gfield;
pub mod groupkit;
pub mod matsemi;
