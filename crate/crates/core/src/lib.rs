//! Exact computation of the quantum Lie algebra `(sl2)_h` inside `U_q(sl2)`.
//!
//! - [`scalar`]: the coefficient field `Q(q)(s)`, `q`-conjugation, `q = 1`
//!   evaluation and power series in `h` (`q = e^h`).
//! - [`pbw`]: `U_q(sl2)` in the PBW basis `F^a K^b E^c`, normal ordering, the
//!   deformed adjoint action and the Casimir element.
//! - [`qlie`]: embeddings of `(sl2)_h`, the quantum Lie bracket, structure
//!   constants, `q`-antisymmetry and the classical limit.
//! - [`qrep`]: matrix representations with the `q`-commutator.
//! - [`frontend`]: expression parser, renderers and JSON documents.
//! - [`verify`]: the seeded verification suites driven by the `qlie` CLI.

macro_rules! forward_binops {
    ($t:ty) => {
        crate::forward_binops!(@op $t, Add, add);
        crate::forward_binops!(@op $t, Sub, sub);
        crate::forward_binops!(@op $t, Mul, mul);
        crate::forward_binops!(@op $t, Div, div);
    };
    (@op $t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binops;

pub mod frontend;
pub mod pbw;
pub mod qlie;
pub mod qrep;
pub mod random;
pub mod scalar;
pub mod verify;

pub use pbw::{AdLetter, AdWord, AlgElement, Monomial};
pub use qlie::{Basis, Embedding, QLieVector, StructureTable};
pub use qrep::{MatConjugation, RepMatrix, Representation};
pub use scalar::{ExtScalar, HSeries, RatFunc, Rational, ScalarError};
