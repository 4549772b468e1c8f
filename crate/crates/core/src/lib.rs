//! Computations around `Out(F_n)`: free-group automorphisms, Gersten's
//! presentation, exact representation theory of its finite subgroups,
//! graph actions, and the congruence-subgroup module `Sym²(V*)`.
//!
//! Linear algebra is generic over exact scalars; the aliases below fix the
//! arbitrary-precision rationals used everywhere else.

pub mod exactlin;
pub mod freegrp;
pub mod gersten;
pub mod graphact;
pub mod perm;
pub mod repdecomp;
pub mod torelli;

use num_rational::BigRational;

pub type Rational = BigRational;
pub type RationalMatrix = exactlin::Matrix<Rational>;
pub type RationalSubspace = exactlin::Subspace<Rational>;
pub type IntMatrix = exactlin::Matrix<i64>;
