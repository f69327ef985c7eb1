//! Para-Bose realization of osp(1|2n), Verma modules and their contravariant form.

pub mod algebra;
pub mod catalog;
pub mod gram;
pub mod linalg;
pub mod poly;
pub mod singular;
pub mod vector;
pub mod verma;

pub use algebra::{Algebra, Generator, Kind, Osc};
pub use vector::{ModuleVector, Monomial};
pub use verma::{shared_algebra, GramMatrix, Operator, VermaModule};
pub use gram::{definiteness, gram_psd_check, Definiteness, PsdReport};
pub use poly::UniPoly;
pub use catalog::{norm_polynomial_in_d, printed_vector, verify_singular, verify_subsingular, Normalization, PrintedId};
pub use singular::{find_singular, is_singular, singular_space};
