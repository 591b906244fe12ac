//! Strong in-domination in digraphs.
//!
//! A set `S` of vertices of a digraph `D` is *in-dominating* when every
//! vertex outside `S` has an out-neighbor in `S`, and *strong in-dominating*
//! when moreover `D⟨S⟩` is strongly connected. The strong in-domatic number
//! `d_s⁻(D)` is the largest number of blocks in a partition of `V(D)` into
//! strong in-dominating sets; such a partition exists exactly when `D` is
//! strong.
//!
//! The crate provides:
//!
//! * [`Digraph`] and the domination predicates in [`domination`];
//! * exact solvers for `d_s⁻`, `d_s⁺`, `d⁻` and the strong-cover number `Λ`
//!   in [`solver`], backed by a brute-force [`solver::brute_force_oracle`];
//! * derived digraphs (line, subdivision, root, middle, total, Cartesian
//!   product, composition) and partition lifts in [`transforms`];
//! * extremal families with their known values in [`families`];
//! * criticality under arc deletion in [`critical`];
//! * a suite of checkable laws relating `d_s⁻` to other invariants in
//!   [`laws`];
//! * the undirected side (vertex connectivity, connected domatic number,
//!   clique domination, planarity) in [`undirected`];
//! * the text formats and command implementations behind the `indomatic`
//!   binary in [`cli`].
//!
//! ```
//! use indomatic::{families, solver};
//!
//! let k4 = families::complete_digraph(4).unwrap();
//! assert_eq!(solver::strong_in_domatic_number(&k4).unwrap().value, 4);
//! ```

pub mod cli;
pub mod critical;
pub mod digraph;
pub mod domination;
pub mod error;
pub mod families;
pub mod iso;
pub mod laws;
mod search;
pub mod solver;
pub mod transforms;
pub mod undirected;

pub use digraph::{Arc, ArcSet, Digraph, VertexSet, MAX_ORDER};
pub use domination::{ArcPartition, PartitionCheck, VertexPartition};
pub use error::{Error, Result};
