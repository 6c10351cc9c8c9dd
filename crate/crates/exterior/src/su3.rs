//! SU(3) structures on a 6-dimensional space: the five defining conditions,
//! the reconstruction of `Im Ω` from `Re Ω` for stable three-forms, and the
//! induced almost complex structure and metric.
//!
//! The dual of a stable three-form `ρ` is built through the endomorphism
//! `K_ρ(v) = A(ι_v ρ ∧ ρ)`, where `A` trivializes Λ⁵ ≅ V ⊗ Λ⁶ against the
//! reference volume. Then `λ = tr(K²)/6` is negative exactly on the stable
//! cone of complex type, `I = −K/√−λ` (the sign is calibrated so the
//! reference pair reproduces its own imaginary part), and
//! `ρ̂(X,Y,Z) = −ρ(IX,Y,Z)`.

use crate::altform::AltForm;
use crate::error::ExteriorError;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub const SU3_DIM: u32 = 6;

/// Stability data of a three-form: the endomorphism `K_ρ` and `λ = tr(K²)/6`.
#[derive(Clone, Debug)]
pub struct StabilityData<S: Scalar> {
    pub k_endo: Matrix<S>,
    pub lambda: S,
}

/// A complex three-form stored as a real pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexForm<S: Scalar> {
    pub re: AltForm<S>,
    pub im: AltForm<S>,
}

impl<S: Scalar> ComplexForm<S> {
    pub fn new(re: AltForm<S>, im: AltForm<S>) -> Self {
        assert_eq!(re.dim(), im.dim());
        assert_eq!(re.degree(), im.degree());
        ComplexForm { re, im }
    }

    pub fn conj(&self) -> Self {
        ComplexForm {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> Self {
        ComplexForm {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    /// Wedge of complex forms; returns (real, imaginary) parts.
    pub fn wedge(&self, other: &ComplexForm<S>) -> Result<ComplexForm<S>, ExteriorError> {
        let re = self.re.wedge(&other.re)?.sub(&self.im.wedge(&other.im)?);
        let im = self.re.wedge(&other.im)?.add(&self.im.wedge(&other.re)?);
        Ok(ComplexForm { re, im })
    }
}

/// An SU(3) structure `(Ω, ω)` with cached almost complex structure and metric.
#[derive(Clone, Debug)]
pub struct Su3Structure<S: Scalar> {
    pub omega_c: ComplexForm<S>,
    pub omega: AltForm<S>,
    acs: Matrix<S>,
    metric: crate::bilinear::BilinearForm<S>,
}

impl<S: Scalar> Su3Structure<S> {
    /// Validate the five conditions and cache the induced data.
    pub fn new(omega_c: ComplexForm<S>, omega: AltForm<S>) -> Result<Self, ExteriorError> {
        let report = validate_su3(&omega_c, &omega);
        if !report.all_pass() {
            return Err(ExteriorError::InvalidSu3(report.summary()));
        }
        let (acs, metric) = acs_and_metric_unchecked(&omega_c, &omega)?;
        Ok(Su3Structure {
            omega_c,
            omega,
            acs,
            metric,
        })
    }

    pub fn acs(&self) -> &Matrix<S> {
        &self.acs
    }

    pub fn metric(&self) -> &crate::bilinear::BilinearForm<S> {
        &self.metric
    }
}

/// The reference structure: `Ω = (e₁+ie₂)∧(e₃+ie₄)∧(e₅+ie₆)`,
/// `ω = e₁∧e₂ + e₃∧e₄ + e₅∧e₆`.
pub fn standard_su3<S: Scalar>() -> Su3Structure<S> {
    let re = AltForm::from_terms(
        6,
        3,
        &[
            (&[1, 3, 5][..], S::one()),
            (&[1, 4, 6][..], -S::one()),
            (&[2, 3, 6][..], -S::one()),
            (&[2, 4, 5][..], -S::one()),
        ],
    );
    let im = AltForm::from_terms(
        6,
        3,
        &[
            (&[1, 3, 6][..], S::one()),
            (&[1, 4, 5][..], S::one()),
            (&[2, 3, 5][..], S::one()),
            (&[2, 4, 6][..], -S::one()),
        ],
    );
    let omega = AltForm::from_terms(
        6,
        2,
        &[
            (&[1, 2][..], S::one()),
            (&[3, 4][..], S::one()),
            (&[5, 6][..], S::one()),
        ],
    );
    Su3Structure::new(ComplexForm::new(re, im), omega).expect("reference pair is valid")
}

/// `K_ρ` and `λ(ρ)` for a three-form on the oriented 6-dimensional space.
pub fn stability_data<S: Scalar>(rho: &AltForm<S>) -> StabilityData<S> {
    assert_eq!(rho.dim(), SU3_DIM);
    assert_eq!(rho.degree(), 3);
    let n = SU3_DIM as usize;
    let mut k = Matrix::zeros(n, n);
    for v in 0..n {
        let five = rho
            .interior_basis(v as u32 + 1)
            .wedge(rho)
            .expect("same dimension");
        // ι_w vol = Σ_i w_i (−1)^{i−1} e_{1..î..6}; read w back off the 5-form.
        for i in 0..n {
            let mask = ((1u32 << SU3_DIM) - 1) & !(1 << i);
            let c = five.coeff_mask(mask);
            let c = if i % 2 == 0 { c } else { -c };
            k.set(i, v, c);
        }
    }
    let k2 = k.mul(&k);
    let mut trace = S::zero();
    for i in 0..n {
        trace += k2.get(i, i).clone();
    }
    StabilityData {
        k_endo: k,
        lambda: trace / S::from_i64(6),
    }
}

/// Relative stability threshold: in float mode a form is only accepted as
/// stable when `λ < −ε ‖ρ‖⁴` with `ε = 1e−10`; exact negativity for rationals.
fn is_stable_complex<S: Scalar>(rho: &AltForm<S>, lambda: &S) -> bool {
    if S::EXACT {
        lambda.is_positive() == false && !lambda.is_zero()
    } else {
        let scale = rho.norm_sq_f64();
        lambda.to_f64() < -1e-10 * scale * scale
    }
}

/// The imaginary counterpart of a stable three-form, with its stability data.
///
/// `ρ + i·ρ̂` is decomposable; the branch is fixed so the reference real part
/// maps to the reference imaginary part.
pub fn hitchin_dual<S: Scalar>(
    rho: &AltForm<S>,
) -> Result<(AltForm<S>, StabilityData<S>), ExteriorError> {
    let data = stability_data(rho);
    if !is_stable_complex(rho, &data.lambda) {
        return Err(ExteriorError::NotStableComplex {
            lambda: data.lambda.to_f64(),
        });
    }
    let root = (-data.lambda.clone())
        .sqrt_exact()
        .ok_or(ExteriorError::InexactRoot)?;
    let i_mat = data.k_endo.scale(&(-root.recip()));
    let rho_hat = derivation_action(&i_mat, rho).scale(&S::from_ratio(-1, 3));
    Ok((rho_hat, data))
}

/// The almost complex structure of a stable three-form, as a matrix on vectors.
pub fn acs_from_stable<S: Scalar>(rho: &AltForm<S>) -> Result<Matrix<S>, ExteriorError> {
    let data = stability_data(rho);
    if !is_stable_complex(rho, &data.lambda) {
        return Err(ExteriorError::NotStableComplex {
            lambda: data.lambda.to_f64(),
        });
    }
    let root = (-data.lambda.clone())
        .sqrt_exact()
        .ok_or(ExteriorError::InexactRoot)?;
    Ok(data.k_endo.scale(&(-root.recip())))
}

/// Derivation action of a matrix on a form: `Σ_s α(X₁,…,M X_s,…,X_k)`,
/// with `M` acting on vectors.
pub fn derivation_action<S: Scalar>(m: &Matrix<S>, alpha: &AltForm<S>) -> AltForm<S> {
    let n = alpha.dim();
    let mut out = AltForm::zero(n, alpha.degree());
    for (mask, c) in alpha.terms() {
        for a in 0..n {
            if mask & (1 << a) == 0 {
                continue;
            }
            for b in 0..n {
                let entry = m.get(a as usize, b as usize);
                if entry.is_zero() {
                    continue;
                }
                if b != a && mask & (1 << b) != 0 {
                    continue;
                }
                let stripped = mask & !(1 << a);
                let sign_a = crate::altform::merge_sign(1 << a, stripped);
                let sign_b = crate::altform::merge_sign(1 << b, stripped);
                let sign = sign_a * sign_b;
                let term = c.clone() * entry.clone() * S::from_i64(sign as i64);
                out.add_to_mask(stripped | (1 << b), term);
            }
        }
    }
    out
}

/// Per-condition validation report.
#[derive(Clone, Debug)]
pub struct Su3Report {
    /// Decomposability of `Ω` (stability plus reconstruction of `Im Ω`).
    pub decomposable: ConditionResult,
    /// `Ω ∧ Ω̄ ≠ 0`.
    pub nonvanishing: ConditionResult,
    /// `Ω ∧ Ω̄ = −(4i/3) ω³`.
    pub normalization: ConditionResult,
    /// `ω ∧ Ω = 0`.
    pub compatibility: ConditionResult,
    /// `ω(v, Iv) > 0`.
    pub positivity: ConditionResult,
}

#[derive(Clone, Debug)]
pub struct ConditionResult {
    pub pass: bool,
    pub residual: f64,
    pub detail: String,
}

impl ConditionResult {
    fn pass(residual: f64) -> Self {
        ConditionResult {
            pass: true,
            residual,
            detail: String::new(),
        }
    }

    fn fail(residual: f64, detail: impl Into<String>) -> Self {
        ConditionResult {
            pass: false,
            residual,
            detail: detail.into(),
        }
    }
}

impl Su3Report {
    pub fn all_pass(&self) -> bool {
        self.decomposable.pass
            && self.nonvanishing.pass
            && self.normalization.pass
            && self.compatibility.pass
            && self.positivity.pass
    }

    pub fn max_residual(&self) -> f64 {
        [
            &self.decomposable,
            &self.nonvanishing,
            &self.normalization,
            &self.compatibility,
            &self.positivity,
        ]
        .iter()
        .map(|c| c.residual)
        .fold(0.0, f64::max)
    }

    pub fn summary(&self) -> String {
        let items = [
            ("decomposable", &self.decomposable),
            ("nonvanishing", &self.nonvanishing),
            ("normalization", &self.normalization),
            ("compatibility", &self.compatibility),
            ("positivity", &self.positivity),
        ];
        items
            .iter()
            .map(|(name, c)| {
                format!(
                    "{}: {}{}",
                    name,
                    if c.pass { "pass" } else { "FAIL" },
                    if c.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", c.detail)
                    }
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Tolerance used by the float backend for residual conditions; exact
/// comparisons for rationals.
fn cond_tol<S: Scalar>(scale: f64) -> f64 {
    if S::EXACT {
        0.0
    } else {
        1e-9 * scale.max(1.0)
    }
}

/// Check the five defining conditions of an SU(3) pair.
pub fn validate_su3<S: Scalar>(omega_c: &ComplexForm<S>, omega: &AltForm<S>) -> Su3Report {
    let dim_ok = omega_c.re.dim() == SU3_DIM
        && omega.dim() == SU3_DIM
        && omega_c.re.degree() == 3
        && omega.degree() == 2;
    if !dim_ok {
        let fail = ConditionResult::fail(f64::INFINITY, "wrong degree or dimension");
        return Su3Report {
            decomposable: fail.clone(),
            nonvanishing: fail.clone(),
            normalization: fail.clone(),
            compatibility: fail.clone(),
            positivity: fail,
        };
    }
    let scale3 = omega_c.re.norm_f64() + omega_c.im.norm_f64();
    let scale2 = omega.norm_f64();

    // i) decomposability: λ(Re Ω) < 0 and Im Ω is one of the two branches of
    // the stable dual (the conjugate form carries the opposite branch).
    let decomposable = match hitchin_dual(&omega_c.re) {
        Ok((dual, _)) => {
            let plus = dual.sub(&omega_c.im).norm_f64();
            let minus = dual.add(&omega_c.im).norm_f64();
            let residual = plus.min(minus);
            if residual <= cond_tol::<S>(scale3) {
                ConditionResult::pass(residual)
            } else {
                ConditionResult::fail(residual, "imaginary part does not match the stable dual")
            }
        }
        Err(e) => ConditionResult::fail(f64::INFINITY, e.to_string()),
    };

    // ii) Ω ∧ Ω̄ ≠ 0.
    let prod = omega_c.wedge(&omega_c.conj()).expect("same dimension");
    let full: u32 = (1 << SU3_DIM) - 1;
    let top_re = prod.re.coeff_mask(full);
    let top_im = prod.im.coeff_mask(full);
    let magnitude = (top_re.to_f64().powi(2) + top_im.to_f64().powi(2)).sqrt();
    let nonvanishing = if magnitude > cond_tol::<S>(scale3 * scale3) {
        ConditionResult::pass(magnitude)
    } else {
        ConditionResult::fail(magnitude, "Ω ∧ Ω̄ vanishes")
    };

    // iii) Ω ∧ Ω̄ = −(4i/3) ω³.
    let omega_cubed = omega
        .wedge(omega)
        .and_then(|w| w.wedge(omega))
        .expect("same dimension");
    let target_im = omega_cubed.scale(&S::from_ratio(-4, 3));
    let res_re = prod.re.norm_f64();
    let res_im = prod.im.sub(&target_im).norm_f64();
    let residual = (res_re * res_re + res_im * res_im).sqrt();
    let normalization = if residual <= cond_tol::<S>(scale3 * scale3 + scale2.powi(3)) {
        ConditionResult::pass(residual)
    } else {
        ConditionResult::fail(residual, "normalization between Ω and ω fails")
    };

    // iv) ω ∧ Ω = 0.
    let wre = omega.wedge(&omega_c.re).expect("same dimension");
    let wim = omega.wedge(&omega_c.im).expect("same dimension");
    let res = (wre.norm_sq_f64() + wim.norm_sq_f64()).sqrt();
    let compatibility = if res <= cond_tol::<S>(scale2 * scale3) {
        ConditionResult::pass(res)
    } else {
        ConditionResult::fail(res, "ω ∧ Ω does not vanish")
    };

    // v) ω(v, Iv) > 0 via positive-definiteness of the induced form.
    let positivity = match acs_and_metric_unchecked(omega_c, omega) {
        Ok((_, g)) => {
            if g.is_positive_definite() {
                ConditionResult::pass(0.0)
            } else {
                ConditionResult::fail(f64::INFINITY, "induced symmetric form is not positive-definite")
            }
        }
        Err(e) => ConditionResult::fail(f64::INFINITY, e.to_string()),
    };

    Su3Report {
        decomposable,
        nonvanishing,
        normalization,
        compatibility,
        positivity,
    }
}

/// Induced almost complex structure and metric, assuming a valid pair.
///
/// The structure `I` making `Ω` a (3,0)-form belongs to the branch of the
/// stable dual that reproduces the given `Im Ω`, so conjugating `Ω` flips `I`.
fn acs_and_metric_unchecked<S: Scalar>(
    omega_c: &ComplexForm<S>,
    omega: &AltForm<S>,
) -> Result<(Matrix<S>, crate::bilinear::BilinearForm<S>), ExteriorError> {
    let i0 = acs_from_stable(&omega_c.re)?;
    let dual = derivation_action(&i0, &omega_c.re).scale(&S::from_ratio(-1, 3));
    let plus = dual.sub(&omega_c.im).norm_f64();
    let minus = dual.add(&omega_c.im).norm_f64();
    let i_mat = if plus <= minus { i0 } else { i0.scale(&(-S::one())) };
    let n = SU3_DIM as usize;
    // g(X, Y) = ω(X, IY)
    let mut w = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mask = (1u32 << i) | (1u32 << j);
            let c = omega.coeff_mask(mask);
            let sign = if i < j { S::one() } else { -S::one() };
            w.set(i, j, sign * c);
        }
    }
    let g_mat = w.mul(&i_mat);
    // Symmetrize to absorb float roundoff; exact inputs are already symmetric.
    let g_sym = g_mat.add(&g_mat.transpose()).scale(&S::from_ratio(1, 2));
    Ok((i_mat, crate::bilinear::BilinearForm::new(g_sym)))
}

/// Induced almost complex structure and metric of a validated pair.
pub fn acs_and_metric<S: Scalar>(
    omega_c: &ComplexForm<S>,
    omega: &AltForm<S>,
) -> Result<(Matrix<S>, crate::bilinear::BilinearForm<S>), ExteriorError> {
    let report = validate_su3(omega_c, omega);
    if !report.all_pass() {
        return Err(ExteriorError::InvalidSu3(report.summary()));
    }
    acs_and_metric_unchecked(omega_c, omega)
}

/// The rescaling `(a^{3/2} Ω, a ω)`; requires `√a` in the scalar field.
pub fn rescale<S: Scalar>(
    a: &S,
    omega_c: &ComplexForm<S>,
    omega: &AltForm<S>,
) -> Result<(ComplexForm<S>, AltForm<S>), ExteriorError> {
    let root = a.sqrt_exact().ok_or(ExteriorError::InexactRoot)?;
    let a32 = a.clone() * root;
    Ok((
        ComplexForm {
            re: omega_c.re.scale(&a32),
            im: omega_c.im.scale(&a32),
        },
        omega.scale(a),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn standard_pair_validates() {
        let s = standard_su3::<Rat>();
        let report = validate_su3(&s.omega_c, &s.omega);
        assert!(report.all_pass(), "{}", report.summary());
    }

    #[test]
    fn standard_product_is_minus_8i_vol() {
        let s = standard_su3::<Rat>();
        let prod = s.omega_c.wedge(&s.omega_c.conj()).unwrap();
        assert!(prod.re.is_zero());
        assert_eq!(prod.im.coeff(&[1, 2, 3, 4, 5, 6]), Rat::from_i64(-8));
    }

    #[test]
    fn standard_lambda_is_minus_four() {
        let s = standard_su3::<Rat>();
        let data = stability_data(&s.omega_c.re);
        assert_eq!(data.lambda, Rat::from_i64(-4));
    }

    #[test]
    fn dual_of_reference_real_part() {
        let s = standard_su3::<Rat>();
        let (dual, _) = hitchin_dual(&s.omega_c.re).unwrap();
        assert_eq!(dual, s.omega_c.im);
    }

    #[test]
    fn standard_metric_is_euclidean() {
        let s = standard_su3::<Rat>();
        assert_eq!(
            s.metric().matrix().clone(),
            Matrix::identity(6)
        );
        // I e₁ = e₂
        assert_eq!(*s.acs().get(1, 0), Rat::from_i64(1));
        assert_eq!(*s.acs().get(0, 1), Rat::from_i64(-1));
    }
}
