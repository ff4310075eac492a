//! Borel-fixed ideals, double-generic initial ideals and lower bounds on the number of
//! irreducible components of Hilbert schemes of subschemes of projective space.
//!
//! Variables are `x0 ≺ x1 ≺ … ≺ xn` in `K[x0, …, xn]`. The census of saturated Borel
//! ideals with a given Hilbert polynomial is compared in its Gotzmann degree under the
//! extensor order `≺≺`; each maximal term witnesses a component.
//!
//! ```
//! use dgin::{component_lower_bound, HilbertPolynomial, TermOrder};
//!
//! let p: HilbertPolynomial = "3t+2".parse().unwrap();
//! let report = component_lower_bound(&p, 3, &TermOrder::DegRevLex).unwrap();
//! assert_eq!(report.count, 4);
//! assert_eq!(report.bound_basic, 1);
//! ```

pub mod census;
pub mod cli;
pub mod components;
pub mod error;
pub mod extensor;
pub mod grassmann;
pub mod hilbert;
pub mod ideal;
mod linalg;
pub mod monomial;
pub mod order;

pub use census::{enumerate_borel, CensusRecord};
pub use components::{component_lower_bound, CensusReport};
pub use error::{Error, Result};
pub use extensor::{dd_compare, eisenbud_compare, DdMethod, DdVerdict, ExtensorTerm};
pub use grassmann::{generic_initial_extensor, gin_ideal, HomogeneousPolynomial, Subspace};
pub use hilbert::{gotzmann_number, HilbertPolynomial};
pub use ideal::{DegreeSlice, MonomialIdeal};
pub use monomial::Monomial;
pub use order::TermOrder;
