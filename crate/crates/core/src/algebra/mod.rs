//! Exact arithmetic: rational scalars, dense matrices, polynomials and
//! reduced rational functions.

mod charpoly;
mod matrix;
mod poly;
mod ratfn;
mod roots;

pub use charpoly::{adjugate_quadratic_form, charpoly, faddeev_leverrier, FaddeevLeVerrier};
pub use matrix::Matrix;
pub use poly::{compose_with_rational, Poly};
pub use ratfn::RationalFn;
pub use roots::{integer_roots, real_roots, squarefree_decomposition, IntegerRoots};

pub(crate) use charpoly::quadratic_form_from_terms;

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
pub type Scalar = num_rational::BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(v.into())
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}
