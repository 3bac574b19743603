//! Linear algebra over the integer polynomial ring: generic rank by random
//! evaluation, exact determinants, and the cofactor vector perpendicular to
//! the rows of an `n x (n+1)` matrix.

mod det;
mod matrix;
mod omega;
mod rank;

pub use det::{det, det_with, maximal_minors, DetStrategy};
pub use matrix::PolyMatrix;
pub use omega::{
    build_paper_matrix, cofactor_perp, cofactor_perp_with, verify_perp, CoordStats, OmegaCertificate, OmegaEvaluator,
    PerpEntry, PerpReport, PAPER_ROW_SELECTION,
};
pub use rank::{generic_rank, rank_mod_p, DEFAULT_PRIME, DEFAULT_TRIALS, MIN_PRIME};
