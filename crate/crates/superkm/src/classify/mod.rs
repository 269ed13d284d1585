//! Decision procedures: regular Kac-Moody, finite type, subfinite; family recognition; `Q±(m,n,t)`.

mod family;
mod finite;
pub mod growth;
mod qmnt;
mod regular;
pub mod rootdata;
mod templates;

pub use family::{is_q_twisted, recognize_family, s_parameter, Family, FamilyLabel};
pub use finite::{d21_affine, d21_alpha, finite_type_label, is_finite_type, TABLE_LIMIT};
pub use growth::{det, even_gcm_type, GrowthType};
pub use qmnt::{
    defining_combinations, extract_qmnt, qmnt_matrix, qmnt_report, solve_qmnt, Branch,
    HyperbolicFailure, QmntReport, QmntSolution,
};
pub use regular::{
    is_regular_kac_moody, is_subfinite, isotropic_proper_subsets, RegularVerdict, SubfiniteVerdict,
};
pub use templates::{lookup as lookup_template, templates, Template};

use crate::cartan::CartanError;

#[derive(Debug, thiserror::Error)]
pub enum ClassifyError {
    #[error("diagram has no isotropic vertex")]
    NoIsotropic,
    #[error("diagram is not connected")]
    NotConnected,
    #[error("{0}")]
    Qmnt(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("internal check failed: {0}")]
    Internal(String),
}
