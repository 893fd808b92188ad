//! relaxkit: a desk-scale computable set-theory kernel.
//!
//! Everything here is finite and executable. The crate provides:
//!
//! * finite logical domains, binary functions, powersets, quotients and
//!   fiber unions ([`domain`]);
//! * the explicit Cantor-Bernstein bijection with its per-element case
//!   analysis ([`cb`]);
//! * well-orders, a recursion engine, maximal order-isomorphisms,
//!   choice-driven enumeration and the canonical product order ([`order`]);
//! * Cantor-normal-form ordinals below epsilon-0 and the canonical pairing
//!   bijection on the naturals ([`ordinal`]);
//! * finite cardinality and Cantor's diagonal ([`cardinal`]);
//! * the Ackermann-coded hereditarily finite universe with a beth/rank
//!   tower and an executable ZFC axiom battery ([`hf`]);
//! * well-founded finite relations and the Mostowski collapse into the
//!   Ackermann universe ([`mostowski`]);
//! * coherent families and the coherent-limit counterexample demonstrator
//!   ([`coherent`]).
//!
//! Each capability has a runnable demo under `examples/`, and the `relaxkit`
//! binary exposes the same operations over documented JSON and text formats
//! (see [`cli`]).
//!
//! All values are immutable after construction and all operations are pure;
//! everything can be shared freely across threads.

pub mod cardinal;
pub mod cb;
pub mod cli;
pub mod coherent;
pub mod domain;
pub mod hf;
pub mod mostowski;
pub mod order;
pub mod ordinal;

pub use cardinal::{cantor_diagonal, card, inj_exists};
pub use cb::{cantor_bernstein, Bijection, CaseTag, InjectionTable};
pub use coherent::{EvConstSeq, FiniteCoherentFamily, LambdaVerdict, OmegaFamily};
pub use domain::{BinFn, EqvTable, FinDomain, Quotient};
pub use hf::{BethTower, HfCode};
pub use mostowski::WfGraph;
pub use order::{PartialFn, WellOrder};
pub use ordinal::{pair_index, unpair, OrdCnf};
