//! Finite ordered sets represented as families of subsets of closure spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`order`] — finite posets, bounded and orthocomplemented posets, and
//!   enumeration of two-valued (ortho)monotone valuations.
//! * [`closure`] — closure spaces generated by a base of subsets, their
//!   closed / open / clopen families, continuity and homeomorphism checks.
//! * [`mayet`] — the dual closure space of an orthocomplemented poset.
//! * [`duplication`] — the horizontal sum `P + P^op + {0, 1}`, the
//!   bi-closure space of monotone valuations of `P`, and the representation
//!   of `P` by sets closed for one closure and open for the other.
//! * [`involution`] — the involution induced on monotone valuations by a
//!   candidate complementation, and the complementation criterion built on it.
//!
//! Everything is finite and immutable once constructed.

pub mod closure;
pub mod duplication;
mod error;
pub mod involution;
pub mod mayet;
pub mod order;
pub mod report;

pub use error::{Error, Result};

/// Default bound on the number of valuations any enumeration may produce.
pub const DEFAULT_VALUATION_CAP: usize = 1 << 20;

/// Default bound on the size of an enumerated closed family.
pub const DEFAULT_FAMILY_CAP: usize = 1 << 16;

/// Enumeration limits shared by every verification routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub valuations: usize,
    pub family: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            valuations: DEFAULT_VALUATION_CAP,
            family: DEFAULT_FAMILY_CAP,
        }
    }
}

impl Caps {
    /// Same bound for both enumerations.
    pub fn uniform(cap: usize) -> Self {
        Caps {
            valuations: cap,
            family: cap,
        }
    }
}
