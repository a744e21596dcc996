//! Classification of ternary linear codes up to monomial equivalence, and of
//! the `[12,5]` codes whose first ten coordinates carry a `[10,5]` code
//! with the weight/product congruence on the last two coordinates.
//!
//! Module map:
//!
//! * [`gf3`]: field, vectors, matrices, packed and indexed encodings;
//! * [`code`]: linear codes, weight enumerators, puncturing, duals;
//! * [`monomial`] and [`perm_group`]: signed permutations and stabilizer chains;
//! * [`equivalence`]: the code digraph, canonical certificates, automorphisms;
//! * [`classify10`]: exhaustive search and classification of `[10,5,3]` and
//!   `[10,5,4]` codes;
//! * [`extend12`]: two-column extensions, conditions C1–C3 and SZ-equivalence;
//! * [`analysis`]: refined weight enumerators, designs, property tallies;
//! * [`persist`]: archives, JSON summaries and checkpoints.

pub mod analysis;
pub mod classify10;
pub mod code;
pub mod equivalence;
pub mod error;
pub mod extend12;
pub mod fixtures;
pub mod format;
pub mod gf3;
pub mod monomial;
pub mod perm_group;
pub mod persist;

pub use code::{LinearCode, WeightEnumerator};
pub use equivalence::{CanonicalCert, Canonicalizer, CodeDigraph};
pub use error::{Error, Result};
pub use gf3::{Gf3, Gf3Matrix, Gf3Vector, Packed};
pub use monomial::MonomialMap;
