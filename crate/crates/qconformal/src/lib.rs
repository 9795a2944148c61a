//! Exact symbolic engine for the q-deformed Minkowski algebra and the
//! q-conformal invariant equations built on it.
//!
//! Everything here is exact: scalars are rational functions of the
//! deformation parameter `q` over arbitrary-precision integers, and every
//! identity check reduces to deciding whether a canonical form is zero.
//! There is no floating point anywhere in the crate.
//!
//! The main layers, bottom up:
//!
//! * [`scalar`] — sparse Laurent polynomials in `q` and the field of
//!   rational functions [`scalar::QScalar`], together with the q-special
//!   scalars (`[n]_q`, `[n]_q!`, `1/Γ_q`, the plane-wave normalizers).
//! * [`algebra`] — the noncommutative coordinate and momentum algebras:
//!   words, normal ordering in the two conjugate orders, the conjugation
//!   `ω`, and reduction modulo the momentum cone ideal.
//! * [`fields`] — the commuting-variable representation space and the
//!   operator calculus (shifts, scalings, q-brackets, q-derivatives).
//! * [`equations`] — builders for the printed operators: q-d'Alembert,
//!   q-Maxwell intertwiners, current conservation, simple-root operators
//!   and the Weyl family.
//! * [`waves`] — the q-plane-wave components and all solution families of
//!   the q-Maxwell equations, homogeneous and inhomogeneous, with currents.
//! * [`gravity`] — classical (q = 1) index machinery: linearized Riemann
//!   and Weyl tensors, component dictionaries, and the index vs. indexless
//!   calibration.
//! * [`verify`] — the suite runner behind the `verify` binary.

pub mod algebra;
pub mod equations;
pub mod fields;
pub mod gravity;
pub mod scalar;
pub mod verify;
pub mod waves;

/// The two conjugate normal orders used throughout.
///
/// `Hat` orders coordinate words as `v^j x-^n x+^l vbar^m` (momenta as
/// `kv^a k-^b k+^c kvbar^d`); `Tilde` is the mirrored order
/// `vbar^m x+^l x-^n v^j` (momenta mirrored likewise). The tag travels with
/// every polynomial and field state: the same exponent data means a
/// different algebra element under the two tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Hat,
    Tilde,
}

impl Basis {
    /// The conjugate order.
    pub fn flip(self) -> Basis {
        match self {
            Basis::Hat => Basis::Tilde,
            Basis::Tilde => Basis::Hat,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Hat => "hat",
            Basis::Tilde => "tilde",
        }
    }
}

impl std::fmt::Display for Basis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/q-scalars.md")]
    mod q_scalars {}
    #[doc = include_str!("../../../book/src/minkowski-algebra.md")]
    mod minkowski_algebra {}
    #[doc = include_str!("../../../book/src/operator-calculus.md")]
    mod operator_calculus {}
    #[doc = include_str!("../../../book/src/equations.md")]
    mod equations {}
    #[doc = include_str!("../../../book/src/plane-waves.md")]
    mod plane_waves {}
    #[doc = include_str!("../../../book/src/gravity.md")]
    mod gravity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
