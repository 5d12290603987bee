//! Integer normal forms: Smith form with transforms, gcd completions in
//! `GL(m, Z)` and `Sp(2g, Z)`, and the congruence form of skew matrices.

mod completion;
mod frobenius;
mod smith;

pub use completion::{gcd_row_completion, symplectic_gcd_completion};
pub(crate) use completion::bezout_min_v;
pub use frobenius::{skew_frobenius, SkewFrobeniusDecomposition};
pub use smith::{kernel_basis, smith_normal_form, SmithDecomposition};
