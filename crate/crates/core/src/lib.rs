//! A workbench for finite order theory.
//!
//! The crate models finite posets and lattices together with the machinery
//! that connects them: closure operators and their quotients, Moore families,
//! lattice-valued membership maps and their cut families, Birkhoff-style
//! up-set representations, and the order of realizable cut families.
//!
//! Every decision procedure here either verifies the witness it returns
//! (isomorphisms are checked in both directions, synthesized maps have their
//! cuts recomputed) or reports a refutation that an independent brute-force
//! route can confirm. Carriers are small by design; enumerations are guarded
//! by explicit caps.
//!
//! Module map:
//! - [`poset`], [`family`], [`iso`]: posets, subset families, isomorphism
//!   search and verification.
//! - [`lattice`]: finite lattices, family lattices under reverse inclusion,
//!   meet-irreducibles, up-set representation, bound-preserving embeddings.
//! - [`closure`]: closure operators, Moore-family duality, quotients,
//!   composition, and closure search against a target shape.
//! - [`fuzzy`]: membership maps into a lattice scale, cuts, the up-set
//!   criterion, cut-equivalence quotients, representability and restriction.
//! - [`quotient`]: the order of realizable cut families, the completeness
//!   decision, quotient up-set embeddings, and the interval isomorphism.
//! - [`enumerate`]: brute-force generation of all labeled posets, lattices,
//!   and monotone maps at desk scale.

pub mod bits;
pub mod closure;
pub mod enumerate;
pub mod family;
pub mod fuzzy;
pub mod iso;
pub mod lattice;
pub mod poset;
pub mod quotient;

pub use closure::{
    closed_elements, closure_from_moore_family, compose_closures, enumerate_closure_operators,
    find_closure_for_target, quotient_by_closure, subfamily_closure_candidate, validate_closure,
    Axiom, AxiomReport, ClosureCandidate, ClosureError, ClosureOperator, ClosureValidation,
    ComposedClosure, MeetSemantics, QuotientPoset,
};
pub use family::{format_set, SetFamily};
pub use fuzzy::{
    cut_quotient, represent_family, restrict_cuts, CutReport, FuzzyError, FuzzyMap,
    Representation, RepresentabilityRefutation, Restriction, UpSetCheck,
};
pub use iso::{poset_isomorphism, verify_order_embedding, verify_order_iso, IsoWitness, Preserves};
pub use lattice::{
    birkhoff_representation, find_bound_preserving_embedding, lattice_isomorphism,
    verify_lattice_preservation, BirkhoffRepresentation, FamilyLattice, FiniteLattice,
    LatticeError,
};
pub use poset::{OrderError, Poset};
pub use quotient::{
    birkhoff_embedding, embed_quotient_upsets, interval_isomorphism, quotient_completeness,
    quotient_completeness_cross_checked, realizable_families, BirkhoffDriverReport,
    ClosureRouteOutcome, CompletenessCertificate, CompletenessDecision, EmbeddingReport,
    FamilyProvenance, IntervalCounterexample, IntervalOutcome, IntervalReport, QuotientError,
    RealizableMode, RealizablePoset,
};
