//! Reflexive unitary subsemigroups of finite left simple semigroups.
//!
//! Semigroups are given by Cayley tables over dense indices `0..n`; subsets
//! are 64-bit masks ([`ElemSet`]). On top of that the crate provides:
//!
//! * [`subset`]: reflexive / left / right unitary predicates with witnesses,
//!   the `HN` join, and exhaustive sweeps for reflexive unitary subsemigroups;
//! * [`congruence`]: principal congruences `P_H`, quotients, saturation and
//!   restriction;
//! * [`correspondence`]: the subgroup correspondence over `S/P_H`, the
//!   intersection isomorphism and the Zassenhaus isomorphism, each returning
//!   a verified [`IsoWitness`];
//! * [`series`]: normal series, their factor groups, Schreier refinement and
//!   Jordan–Hölder verification;
//! * [`factory`]: left zero semigroups, small groups, left groups and the
//!   doubling construction;
//! * [`certify`]: the whole battery of checks over a corpus;
//! * [`cli`]: the text/JSON file format and the command implementations
//!   behind the `leftsimple` binary.
//!
//! ```
//! use leftsimple::{factory, subset, congruence};
//!
//! let s = factory::by_name("L2xZ4").unwrap();
//! let ru = subset::enumerate_ru_subsemigroups(&s).unwrap();
//! assert_eq!(ru.len(), 3);
//! let pc = congruence::principal_congruence(&s, &ru[0]).unwrap();
//! let q = congruence::quotient(&s, &pc.congruence).unwrap();
//! assert_eq!(factory::describe(&q.quotient), "Z4");
//! ```

pub mod certify;
pub mod cli;
pub mod congruence;
pub mod correspondence;
pub mod elemset;
pub mod error;
pub mod factory;
pub mod group;
pub mod iso;
pub mod semigroup;
pub mod series;
pub mod subset;

pub use elemset::ElemSet;
pub use error::{Error, Precondition, Result};
pub use iso::{is_isomorphic, IsoWitness};
pub use semigroup::{order_bound, set_order_bound, Induced, Semigroup, DEFAULT_ORDER_BOUND};
