//! Rational Weyl group elements and their decompositions.
//!
//! This crate classifies Weyl group elements as *rational* through their
//! ν-sequences and rationality graphs, enumerates whole Weyl groups to build
//! the rationality graph Γ(W) per Lie type, and realizes the conjugation
//! decomposition `g = N·B·ū·N⁻¹` in GL_n over exact rational arithmetic.
//!
//! The main pieces:
//!
//! - [`roots`] — crystallographic root systems of types A–G with the root
//!   poset and its downward-closure operator.
//! - [`weyl`] — Weyl group elements acting on positive roots, compact
//!   per-type encodings, and streaming whole-group enumeration.
//! - [`rationality`] — ν-sequences (absolute and relative), the graph Γ(u),
//!   and the rationality predicates.
//! - [`atlas`] — exhaustive scans for rational elements and the graph Γ(W)
//!   with its connectivity, valency and symmetry analysis.
//! - [`matgroup`] — exact rational matrices, Gaussian decomposition, and
//!   Chevalley generators of GL_n.
//! - [`decompose`] — the parabolic-approximation solver for the conjugation
//!   decomposition, plus fiber witnesses certifying non-solutions.
//!
//! ```
//! use weylrat::atlas;
//! use weylrat::rationality;
//! use weylrat::roots::{Family, LieType, RootSystem};
//! use weylrat::weyl::WeylElement;
//!
//! let rs = RootSystem::build(LieType::new(Family::A, 4)).unwrap();
//! let coxeter = WeylElement::from_word(&rs, &[1, 2, 3, 4]).unwrap();
//! assert!(rationality::is_rational(&rs, &coxeter));
//! assert_eq!(atlas::count_rational(&rs, 1), 25);
//! ```

pub mod atlas;
pub mod decompose;
pub mod matgroup;
pub mod rationality;
pub mod roots;
pub mod weyl;

pub use roots::{Family, LieType, Root, RootSet, RootSystem};
pub use weyl::{CompactElement, WeylElement};
