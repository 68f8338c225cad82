//! Frobenius algebras in the category of sets and relations, their nerves as
//! ε-simplicial sets (simplicial sets with marked edges), and an exhaustive
//! solver for lifting and extension problems between finite ε-simplicial sets.
//!
//! The crate is organised bottom-up:
//!
//! * [`relcore`]: relational monoids and Frobenius algebras, axiom checkers,
//!   rotations, and constructors from groupoids, effect algebras and effect
//!   algebroids.
//! * [`simplicial`]: truncated ε-simplicial sets, maps, subobjects, pushouts
//!   and coskeletal completion.
//! * [`shapes`]: the standard simplices, horns, ε-horns and face unions.
//! * [`nerve`]: nerve functors from algebras to ε-simplicial sets.
//! * [`lifting`]: map enumeration, extension checking and the property suites
//!   built on it, including reconstruction of an algebra from an ε-simplicial
//!   set.
//! * [`testspace`]: quantum-logic test spaces and their ε-simplicial form.
//! * [`catalog`] and [`io`]: bundled examples and JSON formats.

pub mod catalog;
pub mod error;
pub mod io;
pub mod lifting;
pub mod nerve;
pub mod relcore;
pub mod shapes;
pub mod simplicial;
pub mod testspace;

pub use error::{Error, Result};

/// Default truncation level for simplicial data.
pub const DEFAULT_MAX_DIM: usize = 4;
