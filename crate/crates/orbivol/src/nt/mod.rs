//! Number-theoretic machinery: prime sieves, exact polynomial arithmetic,
//! splitting types, number fields, and zeta / L special values.

pub mod field;
pub mod intpoly;
pub mod modpoly;
pub mod primes;
pub mod quadfield;
pub mod zeta;

pub use field::{builtin, builtin_fields, load_fields, resolve_field, FieldRecord, NumberField};
pub use intpoly::{is_irreducible_deg_le4, poly_disc, resultant};
pub use modpoly::{factor_degrees_mod_p, SplittingType};
pub use primes::primes_up_to;
pub use zeta::{
    dedekind_zeta_quadratic, dedekind_zeta_quadratic_euler, dedekind_zeta_quartic,
    dirichlet_l_quadratic, hurwitz_zeta, kronecker, relative_chi, relative_l, EulerProductValue,
    QuadAlgebraic,
};
