//! Exact workbench for rational maps of the Riemann sphere: orbifolds,
//! ramification portraits, semiconjugacy equations, Lüroth generators,
//! and chains of elementary transformations.

pub mod chains;
pub mod equations;
mod error;
pub mod expr;
pub mod families;
pub mod numeric;
pub mod orbifold;
pub mod ramification;
pub mod ratmap;

pub use chains::{Chain, LogBound};
pub use equations::{
    Decomposition, GoodnessReport, LurothGenerator, SolutionSquare, SpecialClass, SpecialVerdict,
};
pub use error::{Error, Result};
pub use expr::{parse_expression, print_map};
pub use families::{FamilyTag, Lattes233};
pub use numeric::{
    frac, function_field_gcd, poly_gcd, rat, resultant, resultant_pencil, squarefree_decomposition,
    FunctionFieldPolynomial, Polynomial, Rational,
};
pub use orbifold::{Orbifold, Signature, SignatureClass};
pub use ramification::{FiberPortrait, Portrait};
pub use ratmap::{
    classify_mu_equivalence, compose, right_divide, MobiusMap, MuClass, MuEquivalence,
    ProjectivePoint, RatMap,
};
