pub mod cone;
pub mod error;
pub mod ktheory;
pub mod lattice;
pub mod matrix;
pub mod presentations;
pub mod quiver;
pub mod scalar;
pub mod weyl;
pub mod catalog;
pub mod suites;

pub type Int = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type IntMatrix = matrix::Matrix<Int>;
pub type Lattice = lattice::RootLattice<Int>;
pub type IntWeylElement = weyl::WeylElement<Int>;
pub type IntCollection = ktheory::KCollection<Int>;
pub type IntDualPoint = cone::DualPoint<Int>;
