//! Exact computational toolkit for finite permutation groups: character
//! tables over cyclotomic fields, the Galois actions on their rows and
//! columns, braid/SL2(Z) orbits of commuting pairs, and explicit
//! covering-space deck-transformation models.
//!
//! All core arithmetic is exact (arbitrary-precision rationals); floating
//! point appears only in the [`cyclo::CycNumber::to_complex`] cross-check
//! oracle.

pub mod braid;
pub mod chartab;
pub mod cli;
pub mod cyclo;
pub mod galois;
pub mod permgrp;
pub mod profinite;
