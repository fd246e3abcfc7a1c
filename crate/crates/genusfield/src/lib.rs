//! Genus fields and extended genus fields of elementary abelian l-extensions
//! of the rational function field k = F_q(T).
//!
//! Given K = k(l-th roots of gamma_1 D_1, ..., gamma_m D_m) with l a prime
//! dividing q - 1, the library computes the genus field K_ge and the extended
//! genus field K_gex as explicit Kummer lattices over the ramified prime
//! support, together with all ramification and splitting invariants. A
//! character-level branch handles the non-Kummer case l not dividing q - 1.
//! Every computation can be cross-checked against independent brute-force
//! oracles (`verify`), and the `sweep` driver grinds through exhaustive spec
//! families for regression checking.
//!
//! All arithmetic is exact over machine integers; supported field sizes are
//! bounded by [`gf::Q_MAX`].

pub mod characters;
pub mod cli;
pub mod error;
pub mod extension;
pub mod genus;
pub mod gf;
pub mod localdata;
pub mod polyring;
pub mod report;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use extension::{ExtensionSpec, KummerLattice, RadicalGenerator, RamifiedSupport};
pub use genus::{genus_field, genus_field_nonkummer, CaseLabel, FieldDescription, GenusReport};
pub use gf::{make_field, FieldDesc, FqElem};
pub use polyring::{factor_monic, parse_poly, render_poly, Factorization, Poly};
