//! Three-forms of G₂ type on a 7-dimensional oriented space.
//!
//! A positive three-form induces a metric through the Λ⁷-valued bilinear form
//! `b(u, v) = ι_u φ ∧ ι_v φ ∧ φ`. We normalize the induced metric so that
//! `ι_u φ ∧ ι_v φ ∧ φ = 6 g(u, v) vol_g`, which makes the seven-term reference
//! form induce the Euclidean metric. The raw intermediate `b` is
//! convention-dependent (it depends on the reference frame's volume
//! trivialization); only the calibrated metric is part of the public contract.

use crate::altform::AltForm;
use crate::bilinear::{hodge, inner_product, BilinearForm, OrientedFrame};
use crate::error::ExteriorError;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub const G2_DIM: u32 = 7;

/// The reference three-form: coefficients +1 on (123), (145), (167), (246)
/// and −1 on (257), (347), (356).
pub fn standard_phi_form<S: Scalar>() -> AltForm<S> {
    AltForm::from_terms(
        7,
        3,
        &[
            (&[1, 2, 3][..], S::one()),
            (&[1, 4, 5][..], S::one()),
            (&[1, 6, 7][..], S::one()),
            (&[2, 4, 6][..], S::one()),
            (&[2, 5, 7][..], -S::one()),
            (&[3, 4, 7][..], -S::one()),
            (&[3, 5, 6][..], -S::one()),
        ],
    )
}

/// `b(u, v) = ι_u φ ∧ ι_v φ ∧ φ`, trivialized against the positively oriented
/// reference top monomial `e_1 ∧ … ∧ e_7`.
pub fn b_form<S: Scalar>(phi: &AltForm<S>) -> Result<Matrix<S>, ExteriorError> {
    if phi.dim() != G2_DIM {
        return Err(ExteriorError::DimensionMismatch {
            left: phi.dim(),
            right: G2_DIM,
        });
    }
    assert_eq!(phi.degree(), 3, "b_form needs a three-form");
    let n = G2_DIM as usize;
    let contractions: Vec<AltForm<S>> =
        (1..=G2_DIM).map(|i| phi.interior_basis(i)).collect();
    let full_mask: u32 = (1 << G2_DIM) - 1;
    let mut m = Matrix::zeros(n, n);
    for u in 0..n {
        for v in u..n {
            let w = contractions[u]
                .wedge(&contractions[v])?
                .wedge(phi)?;
            let c = w.coeff_mask(full_mask);
            m.set(u, v, c.clone());
            if v != u {
                m.set(v, u, c);
            }
        }
    }
    Ok(m)
}

/// A certified positive three-form with its induced metric, volume form and
/// dual four-form.
#[derive(Clone, Debug)]
pub struct G2Structure<S: Scalar> {
    phi: AltForm<S>,
    metric: BilinearForm<S>,
    volume: AltForm<S>,
    star_phi: AltForm<S>,
}

impl<S: Scalar> G2Structure<S> {
    /// Certify a three-form as positive and cache the induced data.
    pub fn new(phi: AltForm<S>) -> Result<Self, ExteriorError> {
        let (metric, volume) = metric_from_g2(&phi)?;
        let star_phi = hodge(&phi, &metric, &OrientedFrame::standard(G2_DIM))?;
        Ok(G2Structure {
            phi,
            metric,
            volume,
            star_phi,
        })
    }

    pub fn phi(&self) -> &AltForm<S> {
        &self.phi
    }

    pub fn metric(&self) -> &BilinearForm<S> {
        &self.metric
    }

    pub fn volume(&self) -> &AltForm<S> {
        &self.volume
    }

    pub fn star_phi(&self) -> &AltForm<S> {
        &self.star_phi
    }
}

/// The seven-term reference structure; its metric is Euclidean.
pub fn standard_phi<S: Scalar>() -> G2Structure<S> {
    G2Structure::new(standard_phi_form()).expect("reference form is positive")
}

/// Induced metric and volume form of a positive three-form.
///
/// With `b` as in [`b_form`] and `s = ((det b)/6⁷)^{1/9}`, the calibrated
/// metric is `g = b / (6 s)` and the volume form is `s · e_1∧…∧e_7`; then
/// `ι_u φ ∧ ι_v φ ∧ φ = 6 g(u,v) vol_g` holds identically.
pub fn metric_from_g2<S: Scalar>(
    phi: &AltForm<S>,
) -> Result<(BilinearForm<S>, AltForm<S>), ExteriorError> {
    let b = b_form(phi)?;
    let det = b.det();
    if !det.is_positive() {
        return Err(ExteriorError::NotPositiveG2 {
            reason: format!("det of the induced bilinear form is {} <= 0", det.to_f64()),
        });
    }
    let ratio = det / pow_i64::<S>(6, 7);
    let s = ratio
        .nth_root_exact(9)
        .ok_or(ExteriorError::InexactRoot)?;
    let scale = (S::from_i64(6) * s.clone()).recip();
    let g = BilinearForm::new(b.scale(&scale));
    if !g.is_positive_definite() {
        return Err(ExteriorError::NotPositiveG2 {
            reason: "induced bilinear form is not positive-definite".to_string(),
        });
    }
    let full: u32 = (1 << G2_DIM) - 1;
    let mut vol = AltForm::zero(G2_DIM, G2_DIM);
    vol.insert_mask(full, s);
    Ok((g, vol))
}

fn pow_i64<S: Scalar>(base: i64, exp: u32) -> S {
    let mut acc = S::one();
    for _ in 0..exp {
        acc = acc * S::from_i64(base);
    }
    acc
}

/// Positivity report for a three-form.
#[derive(Clone, Debug)]
pub struct PositivityDiagnostic {
    pub positive: bool,
    pub reason: String,
}

/// Whether `phi` lies in the open orbit of the reference form.
///
/// Definiteness of the calibrated bilinear form is the criterion; a positive
/// determinant alone also occurs for indefinite signatures.
pub fn is_positive_g2<S: Scalar>(phi: &AltForm<S>) -> PositivityDiagnostic {
    if phi.dim() != G2_DIM || phi.degree() != 3 {
        return PositivityDiagnostic {
            positive: false,
            reason: "not a three-form in dimension 7".to_string(),
        };
    }
    let b = match b_form(phi) {
        Ok(b) => b,
        Err(e) => {
            return PositivityDiagnostic {
                positive: false,
                reason: e.to_string(),
            }
        }
    };
    let minors = b.leading_minors();
    if minors.iter().all(|m| m.is_positive()) {
        PositivityDiagnostic {
            positive: true,
            reason: "induced bilinear form is positive-definite".to_string(),
        }
    } else {
        let rank = minors.iter().take_while(|m| !m.is_zero()).count();
        PositivityDiagnostic {
            positive: false,
            reason: format!(
                "induced bilinear form fails definiteness (first non-positive leading minor at size {}, value {})",
                minors
                    .iter()
                    .position(|m| !m.is_positive())
                    .map(|i| i + 1)
                    .unwrap_or(0),
                minors
                    .iter()
                    .find(|m| !m.is_positive())
                    .map(|m| m.to_f64())
                    .unwrap_or(f64::NAN)
            ) + &format!(" (nonzero leading minors: {})", rank),
        }
    }
}

/// The dual four-form `*_φ φ` of a positive three-form.
pub fn hodge_dual_g2<S: Scalar>(phi: &AltForm<S>) -> Result<AltForm<S>, ExteriorError> {
    let (g, _) = metric_from_g2(phi)?;
    hodge(phi, &g, &OrientedFrame::standard(G2_DIM))
}

/// The splitting of two-forms into the 7-dimensional piece spanned by
/// contractions of `φ` and its 14-dimensional orthogonal complement.
#[derive(Clone, Debug)]
pub struct TwoFormSplitting<S: Scalar> {
    basis: Vec<AltForm<S>>,
    gram_inv: Matrix<S>,
    metric: BilinearForm<S>,
}

impl<S: Scalar> TwoFormSplitting<S> {
    pub fn new(structure: &G2Structure<S>) -> Result<Self, ExteriorError> {
        let basis: Vec<AltForm<S>> = (1..=G2_DIM)
            .map(|i| structure.phi().interior_basis(i))
            .collect();
        let n = basis.len();
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = inner_product(&basis[i], &basis[j], structure.metric())?;
                gram.set(i, j, v.clone());
                gram.set(j, i, v);
            }
        }
        let gram_inv = gram.inverse().ok_or(ExteriorError::Degenerate)?;
        Ok(TwoFormSplitting {
            basis,
            gram_inv,
            metric: structure.metric().clone(),
        })
    }

    pub fn basis(&self) -> &[AltForm<S>] {
        &self.basis
    }

    /// Orthogonal projection onto the span of the contraction basis; the pair
    /// `(β₇, β₁₄)` with `β = β₇ + β₁₄`.
    pub fn split(&self, beta: &AltForm<S>) -> Result<(AltForm<S>, AltForm<S>), ExteriorError> {
        assert_eq!(beta.degree(), 2, "split needs a two-form");
        let n = self.basis.len();
        let pairings: Vec<S> = self
            .basis
            .iter()
            .map(|b| inner_product(beta, b, &self.metric))
            .collect::<Result<_, _>>()?;
        let mut part7 = AltForm::zero(G2_DIM, 2);
        for j in 0..n {
            let mut coeff = S::zero();
            for i in 0..n {
                coeff += self.gram_inv.get(i, j).clone() * pairings[i].clone();
            }
            part7 = part7.add(&self.basis[j].scale(&coeff));
        }
        let part14 = beta.sub(&part7);
        Ok((part7, part14))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn reference_form_coefficients() {
        let phi = standard_phi_form::<Rat>();
        assert_eq!(phi.coeff(&[1, 2, 3]), Rat::from_i64(1));
        assert_eq!(phi.coeff(&[1, 4, 5]), Rat::from_i64(1));
        assert_eq!(phi.coeff(&[1, 6, 7]), Rat::from_i64(1));
        assert_eq!(phi.coeff(&[2, 4, 6]), Rat::from_i64(1));
        assert_eq!(phi.coeff(&[2, 5, 7]), Rat::from_i64(-1));
        assert_eq!(phi.coeff(&[3, 4, 7]), Rat::from_i64(-1));
        assert_eq!(phi.coeff(&[3, 5, 6]), Rat::from_i64(-1));
        assert_eq!(phi.num_terms(), 7);
    }

    #[test]
    fn reference_metric_is_euclidean() {
        let (g, vol) = metric_from_g2(&standard_phi_form::<Rat>()).unwrap();
        assert_eq!(g, BilinearForm::euclidean(7));
        assert_eq!(vol.coeff(&[1, 2, 3, 4, 5, 6, 7]), Rat::from_i64(1));
    }

    #[test]
    fn b_form_reference_values() {
        let b = b_form(&standard_phi_form::<Rat>()).unwrap();
        assert_eq!(*b.get(0, 0), Rat::from_i64(6));
        assert_eq!(*b.get(0, 1), Rat::from_i64(0));
        for i in 0..7 {
            assert_eq!(*b.get(i, i), Rat::from_i64(6));
        }
    }

    #[test]
    fn b_form_of_zero() {
        let b = b_form(&AltForm::<Rat>::zero(7, 3)).unwrap();
        for i in 0..7 {
            for j in 0..7 {
                assert!(b.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn decomposable_form_is_not_positive() {
        let decomposable = AltForm::monomial(7, &[1, 2, 3], Rat::from_i64(1));
        let d = is_positive_g2(&decomposable);
        assert!(!d.positive);
    }
}
