//! Exact multilinear algebra for alternating forms on oriented inner-product
//! spaces, with the pointwise theory of G₂ three-forms in dimension 7, SU(3)
//! pairs in dimension 6, and the 2:1 dictionary between them.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so values may be shared and evaluated in parallel freely. Two
//! scalar backends sit behind one trait: exact big rationals for algebraic
//! identities and `f64` for numerical work.

pub mod altform;
pub mod bilinear;
pub mod correspond;
pub mod error;
pub mod g2;
pub mod linalg;
pub mod scalar;
pub mod su3;

pub use altform::AltForm;
pub use bilinear::{flat, hodge, inner_product, sharp, volume_form, BilinearForm, OrientedFrame};
pub use correspond::{g2_from_su3, su3_from_g2, CorrespondenceTriple, Twisting};
pub use error::ExteriorError;
pub use g2::{
    b_form, hodge_dual_g2, is_positive_g2, metric_from_g2, standard_phi, G2Structure,
    TwoFormSplitting,
};
pub use linalg::Matrix;
pub use scalar::{Rat, Scalar};
pub use su3::{
    acs_and_metric, hitchin_dual, stability_data, standard_su3, validate_su3, ComplexForm,
    StabilityData, Su3Structure,
};
