//! Set-valued voting rules (social choice correspondences), majority graphs,
//! and bounded verification of strategyproofness and related axioms.
//!
//! ```
//! use sccheck::{Profile, Rule};
//!
//! let p = Profile::from_rankings(&[[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap();
//! assert_eq!(Rule::TopCycle.evaluate(&p).unwrap().len(), 3);
//! ```

pub mod dominance;
pub mod error;
pub mod extensions;
pub mod io;
pub mod majority;
pub mod mcgarvey;
pub mod profile;
pub mod rules;
pub mod set;
pub mod verify;

pub use error::{GraphError, ParseError, ProfileError, RuleError, VerifyError};
pub use extensions::{ExtensionKind, SetComparison};
pub use majority::{MajorityRelation, MarginMatrix, PairOutcome};
pub use mcgarvey::WeightedMajorityGraph;
pub use profile::{Ballot, Profile};
pub use rules::{BasisTag, Rule};
pub use set::{Alternative, ChoiceSet};
pub use verify::{AxiomVerdict, Outcome, SweepConfig, Universe};
