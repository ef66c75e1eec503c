// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic for even positive-definite lattices of rank 2.
//!
//! A binary form `Q[a,b,c]` stands for the even lattice with Gram matrix
//! `[[2a, b], [b, 2c]]`, printed `L[2a,b,2c]`. On top of reduction and
//! equivalence the crate models the form class group of an imaginary
//! quadratic order through multiplication of grids (rank-2 modules in the
//! field), tests genera through the squares subgroup, and builds explicit
//! certificates that two lattices of one genus are carried to each other by
//! the class-group action.

pub mod arith;
pub mod class_group;
pub mod cli;
pub mod error;
pub mod field;
pub mod form;
pub mod genus;
pub mod grid;
pub mod jinv;
mod lattice;
pub mod zariski;

pub use class_group::{
    class_group, compose, inverse_class, principal_class, split_discriminant, squares_subgroup,
    ClassGroup, FormClass,
};
pub use error::{Error, Result};
pub use field::QFieldElement;
pub use form::{BQForm, Discriminant, UnimodularTransform};
pub use genus::{assigned_characters, genus_classes, genus_size, same_genus, GenusInvariant};
pub use grid::{Grid, OrderData};
pub use zariski::{table1, verify_row, ConjugationCertificate, ZariskiRow};

/// Integer type used for every coefficient. All arithmetic on it is checked.
pub type Int = i128;
