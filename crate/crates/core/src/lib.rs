//! Motion planning for temporal-logic tasks in partially observable,
//! probabilistically labeled environments.
//!
//! The toolkit composes a labeled POMDP with a limit-deterministic
//! generalized Büchi automaton obtained from an LTL task formula, and
//! trains a recurrent deep-Q agent on the resulting product process.
//! Everything is model-free at training time; explicit enumeration and
//! value iteration exist as verification oracles for small instances.
//!
//! Module map:
//! - [`logic`]: LTL syntax, parsing, and lasso-word semantics.
//! - [`automata`]: LDGBAs, acceptance of lasso words, HOA subset I/O.
//! - [`translate`]: task-fragment LTL to LDGBA construction.
//! - [`pomdp`]: probabilistically labeled POMDPs and sampling.
//! - [`product`]: lazy product process, explicit enumeration, value iteration.
//! - [`neural`]: matrices, LSTM cells, the twin-LSTM Q-network, BPTT.
//! - [`agent`]: replay memory, history windows, the training loop, rollouts.
//! - [`worlds`]: gridworld, office, and warehouse environment builders.
//! - [`cli`]: command-line entry points.

pub mod agent;
pub mod automata;
pub mod cli;
pub mod logic;
pub mod neural;
pub mod pomdp;
pub mod product;
pub mod translate;
pub mod worlds;

pub use automata::Ldgba;
pub use logic::{AtomSet, Formula, LassoWord, Symbol};
pub use pomdp::PlPomdp;
pub use product::{Product, ProductState};
