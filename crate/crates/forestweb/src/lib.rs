//! Forest degree-two webs and the pattern-avoiding permutations they
//! parameterize.
//!
//! The pipeline runs
//!
//! ```text
//! forest web --omega--> two-column tableau <--> Dyck path --pi--> permutation
//! ```
//!
//! with [`bijection::phi`] as the composite. The image of Φ is exactly the
//! class of permutations avoiding 132, 4321 and 3214, which is counted by
//! `r + 2·C(r,3)`; the [`verify`] module checks all of this exhaustively
//! for small `r`, and [`io`]/[`render`] handle JSON and DOT/TikZ export.
//!
//! With the default `parallel` feature the heavy sweeps (enumeration-scale
//! counting and verification) fan out over rayon; disabling it leaves the
//! same API running sequentially.

pub mod bijection;
pub mod catalan;
pub mod error;
pub mod io;
pub mod perm;
pub mod render;
pub mod verify;
pub mod webs;

pub use bijection::{phi, phi_inverse, pi, pi_inverse};
pub use catalan::{DyckPath, NoncrossingMatching, Step, Tableau2Col};
pub use error::{Error, Result};
pub use perm::{PatternSet, Permutation};
pub use verify::VerificationReport;
pub use webs::{ForestWeb, WebGraph, WebKind};
