//! Exact sequence calculus over the integers, the rationals and `Q[x]`.
//!
//! Sequences are 1-indexed truncated vectors ([`Seq`]). The crate provides
//! Cauchy, Hurwitz and Dirichlet products, the product isomorphism
//! [`phi::phi_plus`] with its inverses, partial Bell polynomial tables, the
//! doubling transform [`alpha::alpha`], D'Arcais polynomials with the
//! Ramanujan tau function, and the transform [`dirichlet::f_transform`].

pub mod alpha;
pub mod bell;
pub mod cli;
pub mod darcais;
pub mod dirichlet;
pub mod error;
pub mod phi;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use ring::{Poly, RingTag, RingValue};
pub use series::{Seq, Series};
