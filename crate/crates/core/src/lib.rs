//! Hopf quivers, ramification systems with irreducible representations, and
//! the Hopf algebras built from them, for finite permutation groups over a
//! splitting prime field.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact over
//! `F_p`; group elements are addressed by their index in the canonically
//! ordered element list of a [`Group`].
//!
//! Group products follow one convention throughout: `(s * t)(x) = t(s(x))`,
//! so the left factor is applied first.
#![no_std]

extern crate alloc;

pub mod automorphism;
pub mod bimodule;
pub mod chartable;
pub mod classes;
pub mod error;
pub mod field;
pub mod group;
pub mod irrep;
pub mod nichols;
pub mod perm;
pub mod prime;
pub mod quiver;
pub mod report;
pub mod rsr;
pub mod tensor_hopf;
pub mod yd;

pub use automorphism::{automorphisms, AutGroup, Automorphism};
pub use bimodule::{build_bimodule, transversal_iso, BimoduleMap, HopfBimodule, TransversalIso, VerifyMode};
pub use chartable::{character_table, CharTable};
pub use classes::{conjugacy_classes, ClassCtx};
pub use error::{Error, Result};
pub use field::{Fp, Matrix, SparseVec};
pub use group::{parse_group, Group, DEFAULT_ORDER_CAP};
pub use irrep::{irrep_matrices, rep_equal, Irrep};
pub use nichols::{nichols_dims, rsr_nichols_dims, GradedDims, NicholsLimits};
pub use perm::Permutation;
pub use prime::{choose_prime, FieldPrime};
pub use quiver::{build_quiver, parse_ramification, ArrowId, HopfQuiver, Ramification};
pub use report::{Check, Report};
pub use rsr::{count_classes, enumerate_types, isomorphic, GroupContext, IsoMode, IsoSearch, Rsr, RsrType};
pub use tensor_hopf::{type_one_dims, TruncatedHopf};
pub use yd::{braiding, coinvariant_yd, Braiding, YdModule};
