//! Exact representation theory of the signed symmetric group `B_n` acting on
//! `C[(Z/mZ)^n]`, and of extending that action to `B_{n+1}`.
//!
//! * [`combinatorics`]: partitions, bipartitions and box moves.
//! * [`symchar`]: characters of `S_n` by the Murnaghan–Nakayama rule.
//! * [`hypchar`]: classes and characters of `B_n`, inner products.
//! * [`parkingspace`]: characters and decompositions of `C[(Z/mZ)^n]`.
//! * [`branching`]: restriction, the restriction matrix, closed-form extensions.
//! * [`ilpsolve`]: exact nonnegative-integer feasibility.
//! * [`oracle`]: brute-force reference computations used for cross-checking.
//! * [`verify`]: the end-to-end checks run by `octarep verify-paper`.
//!
//! All arithmetic is exact. The linear-algebra core is generic over the
//! traits in [`scalar`]; the aliases below fix the concrete types used by
//! default.

pub mod branching;
pub mod combinatorics;
pub mod error;
pub mod hypchar;
pub mod ilpsolve;
pub mod oracle;
pub mod parkingspace;
pub mod scalar;
pub mod symchar;
pub mod verify;

pub use branching::{
    build_restriction_matrix, closed_form_m3, ep2_doubled_family, ep2_extension, restrict, solve_tilde_extension, verify_extension,
    CandidateExtension, RestrictionMatrix, TildeSolution,
};
pub use combinatorics::{bipartitions_of, compare_lex, partitions_of, Bipartition, Partition};
pub use error::{Error, Result};
pub use hypchar::{
    class_size, decompose, epsilon, inner_product, irreducible_character, ClassFunction, HypCharacterTable,
    SignedClass,
};
pub use ilpsolve::{extension_exists, feasible, Budget, FeasibilityOutcome, FeasibilityProblem, Space, Status};
pub use parkingspace::{parking_character, parking_decomposition, support, weyl_dim, MultiplicityVector, ParkingSpec};
pub use symchar::{sym_character, sym_class_size, SymCharacterTable};

/// Default exact field: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// Machine-word rationals; fast but may overflow on large instances.
pub type Rational64 = num_rational::Ratio<i64>;

pub type Rational128 = num_rational::Ratio<i128>;

/// Branch-and-bound over [`Rational`], the solver behind [`feasible`].
pub type ExactBranchAndBound = ilpsolve::BranchAndBound<Rational>;
