//! Symmetric bilinear forms, oriented frames, musical isomorphisms and the
//! Hodge star on oriented inner-product spaces.
//!
//! Sign conventions are pinned by the pair `*1 = vol` and `⟨α,β⟩ vol = α ∧ *β`.

use crate::altform::{k_subsets, merge_sign, AltForm, Mask};
use crate::error::ExteriorError;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Symmetric bilinear form on an n-dimensional space.
#[derive(Clone, PartialEq, Debug)]
pub struct BilinearForm<S: Scalar> {
    matrix: Matrix<S>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn new(matrix: Matrix<S>) -> Self {
        assert_eq!(matrix.rows(), matrix.cols());
        for i in 0..matrix.rows() {
            for j in (i + 1)..matrix.cols() {
                assert!(
                    matrix.get(i, j) == matrix.get(j, i),
                    "bilinear form must be symmetric"
                );
            }
        }
        BilinearForm { matrix }
    }

    pub fn euclidean(dim: u32) -> Self {
        BilinearForm {
            matrix: Matrix::identity(dim as usize),
        }
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        BilinearForm { matrix: m }
    }

    pub fn dim(&self) -> u32 {
        self.matrix.rows() as u32
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn eval(&self, u: &[S], v: &[S]) -> S {
        let gv = self.matrix.mul_vec(v);
        u.iter()
            .zip(gv.iter())
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn det(&self) -> S {
        self.matrix.det()
    }

    /// Positive-definiteness by Sylvester's criterion (exact for rationals).
    pub fn is_positive_definite(&self) -> bool {
        self.matrix
            .leading_minors()
            .iter()
            .all(|m| m.is_positive())
    }

    /// Pullback `g(A·, A·)`.
    pub fn pullback(&self, a: &Matrix<S>) -> Self {
        BilinearForm::new(a.transpose().mul(&self.matrix).mul(a))
    }

    /// Inverse metric; requires non-degeneracy.
    pub fn inverse(&self) -> Result<Matrix<S>, ExteriorError> {
        self.matrix.inverse().ok_or(ExteriorError::Degenerate)
    }
}

/// An ordered basis label set with an orientation sign.
#[derive(Clone, PartialEq, Debug)]
pub struct OrientedFrame {
    dim: u32,
    orientation: i8,
}

impl OrientedFrame {
    pub fn standard(dim: u32) -> Self {
        OrientedFrame { dim, orientation: 1 }
    }

    pub fn with_orientation(dim: u32, orientation: i8) -> Self {
        assert!(orientation == 1 || orientation == -1);
        OrientedFrame { dim, orientation }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn reversed(&self) -> Self {
        OrientedFrame {
            dim: self.dim,
            orientation: -self.orientation,
        }
    }
}

/// Musical isomorphism `v ↦ g(v, ·)`.
pub fn flat<S: Scalar>(v: &[S], g: &BilinearForm<S>) -> Result<AltForm<S>, ExteriorError> {
    if v.len() as u32 != g.dim() {
        return Err(ExteriorError::DimensionMismatch {
            left: v.len() as u32,
            right: g.dim(),
        });
    }
    if g.det().is_zero() {
        return Err(ExteriorError::Degenerate);
    }
    let gv = g.matrix().mul_vec(v);
    let mut out = AltForm::zero(g.dim(), 1);
    for (i, c) in gv.into_iter().enumerate() {
        out.add_to_mask(1 << i, c);
    }
    Ok(out)
}

/// Inverse musical isomorphism: the vector `v` with `flat(v) = α`.
pub fn sharp<S: Scalar>(alpha: &AltForm<S>, g: &BilinearForm<S>) -> Result<Vec<S>, ExteriorError> {
    assert_eq!(alpha.degree(), 1, "sharp needs a 1-form");
    if alpha.dim() != g.dim() {
        return Err(ExteriorError::DimensionMismatch {
            left: alpha.dim(),
            right: g.dim(),
        });
    }
    let n = g.dim() as usize;
    let mut comps = vec![S::zero(); n];
    for (m, c) in alpha.terms() {
        comps[m.trailing_zeros() as usize] = c.clone();
    }
    g.matrix()
        .solve(&comps)
        .ok_or(ExteriorError::Degenerate)
}

/// Metric induced on k-forms: Gram matrix entry for monomial masks `a`, `b`
/// is `det( g^{-1}[a_i, b_j] )` over the index lists of the two masks.
fn kform_gram_entry<S: Scalar>(ginv: &Matrix<S>, a: Mask, b: Mask) -> S {
    let ai: Vec<usize> = (0..32).filter(|i| a & (1 << i) != 0).collect();
    let bi: Vec<usize> = (0..32).filter(|i| b & (1 << i) != 0).collect();
    let k = ai.len();
    if k == 0 {
        return S::one();
    }
    Matrix::from_fn(k, k, |r, c| ginv.get(ai[r], bi[c]).clone()).det()
}

/// Inner product of two k-forms under the metric `g`.
pub fn inner_product<S: Scalar>(
    alpha: &AltForm<S>,
    beta: &AltForm<S>,
    g: &BilinearForm<S>,
) -> Result<S, ExteriorError> {
    if alpha.dim() != beta.dim() || alpha.dim() != g.dim() {
        return Err(ExteriorError::DimensionMismatch {
            left: alpha.dim(),
            right: g.dim(),
        });
    }
    assert_eq!(alpha.degree(), beta.degree());
    let ginv = g.inverse()?;
    let mut acc = S::zero();
    for (ma, ca) in alpha.terms() {
        for (mb, cb) in beta.terms() {
            let gram = kform_gram_entry(&ginv, ma, mb);
            acc += ca.clone() * cb.clone() * gram;
        }
    }
    Ok(acc)
}

/// Volume form of `(g, o)`: `√(det g)` times the orientation monomial.
///
/// Errors with `InexactRoot` if `√(det g)` is not representable (rationals).
pub fn volume_form<S: Scalar>(
    g: &BilinearForm<S>,
    o: &OrientedFrame,
) -> Result<AltForm<S>, ExteriorError> {
    let det = g.det();
    if !det.is_positive() {
        return Err(ExteriorError::NotPositiveDefinite);
    }
    let root = det.sqrt_exact().ok_or(ExteriorError::InexactRoot)?;
    let n = g.dim();
    let full: Mask = (1u32 << n) - 1;
    let mut vol = AltForm::zero(n, n);
    let c = if o.orientation() > 0 { root } else { -root };
    vol.insert_mask(full, c);
    Ok(vol)
}

/// Hodge star for the metric `g` and orientation `o`.
///
/// Determined by `⟨α, β⟩ vol = α ∧ *β`; in particular `*1 = vol` and
/// `** = (−1)^{k(n−k)}` on k-forms for positive-definite `g`.
pub fn hodge<S: Scalar>(
    alpha: &AltForm<S>,
    g: &BilinearForm<S>,
    o: &OrientedFrame,
) -> Result<AltForm<S>, ExteriorError> {
    if alpha.dim() != g.dim() {
        return Err(ExteriorError::DimensionMismatch {
            left: alpha.dim(),
            right: g.dim(),
        });
    }
    if !g.is_positive_definite() {
        return Err(ExteriorError::NotPositiveDefinite);
    }
    let n = alpha.dim();
    let k = alpha.degree();
    let det = g.det();
    let sqrt_det = det.sqrt_exact().ok_or(ExteriorError::InexactRoot)?;
    let orient = S::from_i64(o.orientation() as i64);
    let ginv = g.inverse()?;
    let full: Mask = (1u32 << n) - 1;
    let mut out = AltForm::zero(n, n - k);
    // (*α)_J determined by α ∧ *α-pairing: for each target monomial J,
    // coefficient = Σ_I ⟨e_I, α⟩ ε(I, J) with indices raised by g⁻¹.
    for j in k_subsets(n, n - k) {
        let i_mask = full & !j;
        let sign = merge_sign(i_mask, j);
        debug_assert!(sign != 0);
        // ⟨e_{I}, α⟩ via the k-form Gram matrix
        let mut raised = S::zero();
        for (ma, ca) in alpha.terms() {
            raised += ca.clone() * kform_gram_entry(&ginv, i_mask, ma);
        }
        let c = raised * sqrt_det.clone() * orient.clone() * S::from_i64(sign as i64);
        out.add_to_mask(j, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn star_of_one_is_volume() {
        let g = BilinearForm::<Rat>::euclidean(6);
        let o = OrientedFrame::standard(6);
        let one = AltForm::constant(6, Rat::from_i64(1));
        let star = hodge(&one, &g, &o).unwrap();
        assert_eq!(star.coeff(&[1, 2, 3, 4, 5, 6]), Rat::from_i64(1));
        assert_eq!(star.num_terms(), 1);
    }

    #[test]
    fn star_of_orthonormal_monomial() {
        let g = BilinearForm::<Rat>::euclidean(7);
        let o = OrientedFrame::standard(7);
        let a = AltForm::monomial(7, &[1, 2, 3], Rat::from_i64(1));
        let star = hodge(&a, &g, &o).unwrap();
        assert_eq!(star.coeff(&[4, 5, 6, 7]), Rat::from_i64(1));
        assert_eq!(star.num_terms(), 1);
    }

    #[test]
    fn flat_diag_metric() {
        let g = BilinearForm::diagonal(vec![
            Rat::from_i64(4),
            Rat::from_i64(1),
            Rat::from_i64(1),
        ]);
        let v = vec![Rat::from_i64(1), Rat::from_i64(0), Rat::from_i64(0)];
        let f = flat(&v, &g).unwrap();
        assert_eq!(f.coeff(&[1]), Rat::from_i64(4));
        let back = sharp(&f, &g).unwrap();
        assert_eq!(back, v);
    }
}
