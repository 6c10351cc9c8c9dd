//! The pointwise 2:1 dictionary between positive three-forms on a
//! 7-dimensional space and triples `(z, Ω, ω)` on a distinguished
//! 6-dimensional coordinate subspace.
//!
//! The splitting is the coordinate one: the distinguished circle direction is
//! basis index 1 (covector `e¹`), and the 6-dimensional factor carries labels
//! 2..7, which the 6-dimensional structures see as 1..6. A triple assembles to
//! `φ = Re Ω + z ∧ ω` with metric `z ⊗ z + g_{Ω,ω}` and dual four-form
//! `*φ = ½ ω∧ω − z∧Im Ω`; for a positive `φ` the inverse recovers `z` as the
//! normalized metric dual of the circle direction. Reversing the orientation
//! produces the sign-twin `(−z, Ω̄, −ω)` and these are the only two
//! decompositions.

use crate::altform::AltForm;
use crate::bilinear::{flat, BilinearForm};
use crate::error::ExteriorError;
use crate::g2::{G2Structure, G2_DIM};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::su3::{validate_su3, ComplexForm, Su3Report, SU3_DIM};

/// Index of the distinguished circle covector (1-based).
pub const THETA_INDEX: u32 = 1;

/// A twisting covector together with its orientation certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct Twisting<S: Scalar> {
    /// 1-form on the 7-dimensional space, complementary to the 6-dimensional
    /// factor: nonzero `e¹`-component.
    pub z: AltForm<S>,
}

impl<S: Scalar> Twisting<S> {
    pub fn new(z: AltForm<S>) -> Result<Self, ExteriorError> {
        assert_eq!(z.dim(), G2_DIM);
        assert_eq!(z.degree(), 1);
        let theta_comp = z.coeff(&[THETA_INDEX]);
        if theta_comp.is_zero() {
            return Err(ExteriorError::DegenerateDirection { magnitude: 0.0 });
        }
        Ok(Twisting { z })
    }

    /// The `dθ`-component.
    pub fn theta_component(&self) -> S {
        self.z.coeff(&[THETA_INDEX])
    }

    pub fn positively_oriented(&self) -> bool {
        self.theta_component().is_positive()
    }
}

/// A decomposition `(z, Ω, ω)` in ambient 7-dimensional coordinates. The
/// forms `omega`, `re_omega`, `im_omega` carry no `e¹`-leg.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrespondenceTriple<S: Scalar> {
    pub z: AltForm<S>,
    pub re_omega: AltForm<S>,
    pub im_omega: AltForm<S>,
    pub omega: AltForm<S>,
}

/// Embed a form on the 6-dimensional factor (labels 1..6) into ambient
/// coordinates (labels 2..7).
pub fn promote<S: Scalar>(alpha6: &AltForm<S>) -> AltForm<S> {
    assert_eq!(alpha6.dim(), SU3_DIM);
    let mut out = AltForm::zero(G2_DIM, alpha6.degree());
    for (mask, c) in alpha6.terms() {
        out.insert_mask(mask << 1, c.clone());
    }
    out
}

/// Restrict an ambient form with no `e¹`-leg to the 6-dimensional factor.
pub fn restrict<S: Scalar>(alpha7: &AltForm<S>) -> Result<AltForm<S>, ExteriorError> {
    assert_eq!(alpha7.dim(), G2_DIM);
    let mut out = AltForm::zero(SU3_DIM, alpha7.degree());
    for (mask, c) in alpha7.terms() {
        if mask & 1 != 0 {
            return Err(ExteriorError::InvalidSu3(
                "form has a circle-direction leg".to_string(),
            ));
        }
        out.insert_mask(mask >> 1, c.clone());
    }
    Ok(out)
}

impl<S: Scalar> CorrespondenceTriple<S> {
    /// Build from 6-dimensional data and an ambient twisting covector.
    pub fn from_su3(
        z: AltForm<S>,
        omega_c: &ComplexForm<S>,
        omega: &AltForm<S>,
    ) -> Result<Self, ExteriorError> {
        Twisting::new(z.clone())?;
        Ok(CorrespondenceTriple {
            z,
            re_omega: promote(&omega_c.re),
            im_omega: promote(&omega_c.im),
            omega: promote(omega),
        })
    }

    /// The 6-dimensional pair `(Ω, ω)`.
    pub fn su3_forms(&self) -> Result<(ComplexForm<S>, AltForm<S>), ExteriorError> {
        Ok((
            ComplexForm::new(restrict(&self.re_omega)?, restrict(&self.im_omega)?),
            restrict(&self.omega)?,
        ))
    }

    /// Validate the SU(3) conditions of the 6-dimensional pair.
    pub fn validate(&self) -> Result<Su3Report, ExteriorError> {
        let (omega_c, omega) = self.su3_forms()?;
        Ok(validate_su3(&omega_c, &omega))
    }

    /// The sign-twin `(−z, Ω̄, −ω)`; assembles to the same three-form.
    pub fn sign_twin(&self) -> Self {
        CorrespondenceTriple {
            z: self.z.neg(),
            re_omega: self.re_omega.clone(),
            im_omega: self.im_omega.neg(),
            omega: self.omega.neg(),
        }
    }

    /// The predicted metric `z ⊗ z + g_{Ω,ω}` in ambient coordinates.
    pub fn product_metric(&self) -> Result<BilinearForm<S>, ExteriorError> {
        let (omega_c, omega) = self.su3_forms()?;
        let (_, g6) = crate::su3::acs_and_metric(&omega_c, &omega)?;
        let n = G2_DIM as usize;
        let mut zz = Matrix::zeros(n, n);
        let zcomp: Vec<S> = (1..=G2_DIM).map(|i| self.z.coeff(&[i])).collect();
        for i in 0..n {
            for j in 0..n {
                zz.set(i, j, zcomp[i].clone() * zcomp[j].clone());
            }
        }
        for i in 0..SU3_DIM as usize {
            for j in 0..SU3_DIM as usize {
                let v = zz.get(i + 1, j + 1).clone() + g6.matrix().get(i, j).clone();
                zz.set(i + 1, j + 1, v);
            }
        }
        Ok(BilinearForm::new(zz))
    }
}

/// Assemble `φ = Re Ω + z ∧ ω` and certify it as a positive three-form.
pub fn g2_from_su3<S: Scalar>(
    triple: &CorrespondenceTriple<S>,
) -> Result<G2Structure<S>, ExteriorError> {
    let phi = triple.re_omega.add(&triple.z.wedge(&triple.omega)?);
    G2Structure::new(phi)
}

/// Decompose a positive three-form along the coordinate splitting.
///
/// `theta_positive` picks the orientation of the circle direction and hence
/// which of the two sign-twin triples is returned.
pub fn su3_from_g2<S: Scalar>(
    structure: &G2Structure<S>,
    theta_positive: bool,
) -> Result<CorrespondenceTriple<S>, ExteriorError> {
    let g = structure.metric();
    // z = (∂θ)♭ / |∂θ|, then flipped to the requested orientation.
    let mut theta_vec = vec![S::zero(); G2_DIM as usize];
    theta_vec[(THETA_INDEX - 1) as usize] = S::one();
    let norm_sq = g.eval(&theta_vec, &theta_vec);
    let norm = norm_sq.sqrt_exact().ok_or(ExteriorError::InexactRoot)?;
    let mut z = flat(&theta_vec, g)?.scale(&norm.recip());
    let l = z.coeff(&[THETA_INDEX]);
    if !S::EXACT && l.to_f64().abs() < 1e-8 {
        return Err(ExteriorError::DegenerateDirection {
            magnitude: l.to_f64().abs(),
        });
    }
    if l.is_zero() {
        return Err(ExteriorError::DegenerateDirection { magnitude: 0.0 });
    }
    let flip = l.is_positive() != theta_positive;
    if flip {
        z = z.neg();
    }
    let l = z.coeff(&[THETA_INDEX]);

    // ω = (e¹-part of φ) / L, then Re Ω = φ − z ∧ ω.
    let phi1 = structure.phi().interior_basis(THETA_INDEX);
    let omega = phi1.scale(&l.recip());
    let re_omega = structure.phi().sub(&z.wedge(&omega)?);
    // Im Ω from *φ = ½ ω∧ω − z∧Im Ω, so Im Ω = −(e¹-part of *φ) / L.
    let im_omega = structure
        .star_phi()
        .interior_basis(THETA_INDEX)
        .scale(&(-l.recip()));
    debug_assert!(re_omega.terms().all(|(m, _)| m & 1 == 0));
    Ok(CorrespondenceTriple {
        z,
        re_omega,
        im_omega,
        omega,
    })
}

/// All unit covectors dual to the circle direction: exactly the two
/// orientations, yielding the sign-twin pair of decompositions.
pub fn enumerate_decompositions<S: Scalar>(
    structure: &G2Structure<S>,
) -> Result<Vec<CorrespondenceTriple<S>>, ExteriorError> {
    Ok(vec![
        su3_from_g2(structure, true)?,
        su3_from_g2(structure, false)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::standard_phi_form;
    use crate::scalar::Rat;
    use crate::su3::standard_su3;

    #[test]
    fn standard_assembly() {
        let s = standard_su3::<Rat>();
        let z = AltForm::basis_covector(7, 1);
        let triple = CorrespondenceTriple::from_su3(z, &s.omega_c, &s.omega).unwrap();
        let g2 = g2_from_su3(&triple).unwrap();
        assert_eq!(*g2.phi(), standard_phi_form::<Rat>());
    }

    #[test]
    fn standard_decomposition_roundtrip() {
        let s = standard_su3::<Rat>();
        let z = AltForm::basis_covector(7, 1);
        let triple = CorrespondenceTriple::from_su3(z, &s.omega_c, &s.omega).unwrap();
        let g2 = g2_from_su3(&triple).unwrap();
        let back = su3_from_g2(&g2, true).unwrap();
        assert_eq!(back, triple);
    }

    #[test]
    fn reversed_orientation_gives_sign_twin() {
        let s = standard_su3::<Rat>();
        let z = AltForm::basis_covector(7, 1);
        let triple = CorrespondenceTriple::from_su3(z, &s.omega_c, &s.omega).unwrap();
        let g2 = g2_from_su3(&triple).unwrap();
        let twin = su3_from_g2(&g2, false).unwrap();
        assert_eq!(twin, triple.sign_twin());
        assert!(twin.validate().unwrap().all_pass());
    }
}
