//! Exact number rings: the ambient cyclotomic field, its subrings, and the
//! real `α`-adic rings used by the adjoint representation.

mod cubic;
mod cyclo;
mod dalpha;
mod membership;

pub use cubic::{has_rational_root, rational_roots};
pub use cyclo::{Cyclo36, PhaseParseError, RootOfUnity, DEGREE, ORDER};
pub use dalpha::{AlphaElem, DalphaElem, Z3};
pub use membership::{in_ring, ring_coords, to_alpha, RingTag, RingTagParseError};

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("value is not real")]
    NotReal,
    #[error("value is not in A: coordinate denominator {0} has a prime factor other than 2 or 3")]
    NotInA(BigInt),
    #[error("exponent {k} is below the least denominator exponent {lde}")]
    KTooSmall { k: u32, lde: u32 },
}

/// Distinguished field elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Omega,
    Zeta9,
    I,
    Alpha,
    Sqrt3TimesI,
}

pub fn embed(symbol: Symbol) -> Cyclo36 {
    match symbol {
        Symbol::Omega => Cyclo36::omega(),
        Symbol::Zeta9 => Cyclo36::zeta9(),
        Symbol::I => Cyclo36::i(),
        Symbol::Alpha => Cyclo36::alpha(),
        Symbol::Sqrt3TimesI => Cyclo36::sqrt3_times_i(),
    }
}
