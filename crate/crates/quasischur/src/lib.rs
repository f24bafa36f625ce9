//! Exact-arithmetic algebraic combinatorics: conversion of fundamental
//! quasisymmetric expansions into Schur expansions via the quasi-Kostka
//! matrix, plethysm expansions and leading terms through tableaux of
//! tableaux, and certified symmetric chain decompositions of partitions in
//! a box for widths 2, 3, and 4.

pub mod error;
pub mod lattice;
pub mod partition;
pub mod plethysm;
pub mod qk;
pub mod scd;
pub mod symfunc;
pub mod tableau;

pub use error::{Error, Result};
pub use lattice::BoxLattice;
pub use partition::{
    compositions_of, dominance_leq, lex_cmp, partitions_of, revlex_cmp, subpartition_strip,
    Composition, Partition,
};
pub use plethysm::{
    dynamic_reading_word, enumerate_stot, inverse_descent_composition, leading_term, plethysm_f,
    schur_two_rows, second_leading_term, shift_add, truncate_two_rows, two_var_c,
    two_var_plethysm, BivariatePoly, TableauOfTableaux, TwoRowPoly, TwoVarMethod,
    DEFAULT_SIZE_GUARD,
};
pub use qk::{
    enumerate_chains, f_to_schur, f_to_schur_via_chains, invert_unitriangular,
    quasi_kostka_matrix, ConvertOptions, QuasiKostkaMatrix, SignedChain,
};
pub use scd::{
    certify, e3, e4, f3, f4, scd, scd_coefficients, scd_w2, scd_w3, scd_w4, CertifyReport, Chain,
    ChainDecomposition,
};
pub use symfunc::{f_to_m, is_symmetric, schur_to_f, Basis, SymFunc};
pub use tableau::{
    descent_composition, destandardize, enumerate_qyt, enumerate_ssyt, enumerate_syt,
    is_quasi_yamanouchi, quasi_kostka, standardize, Tableau,
};
