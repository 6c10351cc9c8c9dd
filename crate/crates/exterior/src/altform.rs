//! Alternating forms with canonical sorted-monomial storage.
//!
//! A monomial `e_{i1} ∧ … ∧ e_{ik}` with strictly increasing indices is keyed
//! by the bitmask with those bits set, so structural equality of the coefficient
//! map is semantic equality (for exact scalars). Zero coefficients are never
//! stored.

use crate::error::ExteriorError;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Monomial key: bit `i` set means covector `e_{i+1}` is a factor.
pub type Mask = u32;

/// Number of set bits below `bit` in `mask`.
#[inline]
fn bits_below(mask: Mask, bit: u32) -> u32 {
    (mask & ((1 << bit) - 1)).count_ones()
}

/// Sign of merging two disjoint sorted monomials, or 0 if they share an index.
#[inline]
pub fn merge_sign(a: Mask, b: Mask) -> i32 {
    if a & b != 0 {
        return 0;
    }
    // Count transpositions: for each bit of b, the bits of a above it.
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let bit = bb.trailing_zeros();
        swaps += (a >> (bit + 1)).count_ones();
        bb &= bb - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An alternating k-form on an n-dimensional real vector space.
#[derive(Clone, PartialEq)]
pub struct AltForm<S: Scalar> {
    dim: u32,
    degree: u32,
    coeffs: BTreeMap<Mask, S>,
}

impl<S: Scalar> AltForm<S> {
    /// The zero k-form.
    pub fn zero(dim: u32, degree: u32) -> Self {
        assert!(degree <= dim, "degree {} exceeds dimension {}", degree, dim);
        AltForm {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 0-form with value `c`.
    pub fn constant(dim: u32, c: S) -> Self {
        let mut f = AltForm::zero(dim, 0);
        f.insert_mask(0, c);
        f
    }

    /// Basis covector `e_i` (1-based index).
    pub fn basis_covector(dim: u32, i: u32) -> Self {
        assert!(i >= 1 && i <= dim);
        let mut f = AltForm::zero(dim, 1);
        f.insert_mask(1 << (i - 1), S::one());
        f
    }

    /// Monomial from strictly increasing 1-based indices.
    pub fn monomial(dim: u32, indices: &[u32], coeff: S) -> Self {
        let mut mask: Mask = 0;
        for w in indices.windows(2) {
            assert!(w[0] < w[1], "indices must be strictly increasing");
        }
        for &i in indices {
            assert!(i >= 1 && i <= dim);
            mask |= 1 << (i - 1);
        }
        let mut f = AltForm::zero(dim, indices.len() as u32);
        f.insert_mask(mask, coeff);
        f
    }

    /// Build a form from (indices, coefficient) pairs.
    pub fn from_terms(dim: u32, degree: u32, terms: &[(&[u32], S)]) -> Self {
        let mut f = AltForm::zero(dim, degree);
        for (idx, c) in terms {
            assert_eq!(idx.len() as u32, degree);
            let m = AltForm::monomial(dim, idx, c.clone());
            f = f.add(&m);
        }
        f
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &S)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of the monomial given by `mask` (zero if absent).
    pub fn coeff_mask(&self, mask: Mask) -> S {
        self.coeffs.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient for strictly increasing 1-based indices.
    pub fn coeff(&self, indices: &[u32]) -> S {
        let mut mask: Mask = 0;
        for &i in indices {
            mask |= 1 << (i - 1);
        }
        assert_eq!(mask.count_ones() as usize, indices.len());
        self.coeff_mask(mask)
    }

    pub fn insert_mask(&mut self, mask: Mask, c: S) {
        assert_eq!(mask.count_ones(), self.degree, "mask degree mismatch");
        assert!(mask < (1u32 << self.dim), "mask outside ambient dimension");
        if c.is_zero() {
            self.coeffs.remove(&mask);
        } else {
            self.coeffs.insert(mask, c);
        }
    }

    pub fn add_to_mask(&mut self, mask: Mask, c: S) {
        if c.is_zero() {
            return;
        }
        let cur = self.coeff_mask(mask);
        self.insert_mask(mask, cur + c);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (m, c) in other.coeffs.iter() {
            out.add_to_mask(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-S::one())))
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = AltForm::zero(self.dim, self.degree);
        if s.is_zero() {
            return out;
        }
        for (m, c) in self.coeffs.iter() {
            out.insert_mask(*m, c.clone() * s.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-S::one()))
    }

    /// Graded-commutative wedge product.
    pub fn wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let deg = self.degree + other.degree;
        if deg > self.dim {
            return Ok(AltForm::zero(self.dim, 0.min(self.dim)));
        }
        let mut out = AltForm::zero(self.dim, deg);
        for (ma, ca) in self.coeffs.iter() {
            for (mb, cb) in other.coeffs.iter() {
                let sign = merge_sign(*ma, *mb);
                if sign == 0 {
                    continue;
                }
                let c = ca.clone() * cb.clone();
                let c = if sign < 0 { -c } else { c };
                out.add_to_mask(ma | mb, c);
            }
        }
        Ok(out)
    }

    /// Interior product with a coordinate vector `e_i` (1-based).
    pub fn interior_basis(&self, i: u32) -> Self {
        assert!(i >= 1 && i <= self.dim);
        assert!(self.degree >= 1, "interior product needs degree >= 1");
        let bit = i - 1;
        let mut out = AltForm::zero(self.dim, self.degree - 1);
        for (m, c) in self.coeffs.iter() {
            if m & (1 << bit) != 0 {
                let pos = bits_below(*m, bit);
                let c = if pos % 2 == 0 {
                    c.clone()
                } else {
                    -c.clone()
                };
                out.add_to_mask(m & !(1 << bit), c);
            }
        }
        out
    }

    /// Interior product (contraction) with a vector given by components.
    pub fn interior(&self, v: &[S]) -> Result<Self, ExteriorError> {
        if v.len() as u32 != self.dim {
            return Err(ExteriorError::DimensionMismatch {
                left: self.dim,
                right: v.len() as u32,
            });
        }
        if self.degree == 0 {
            return Err(ExteriorError::DegreeTooLow);
        }
        let mut out = AltForm::zero(self.dim, self.degree - 1);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let part = self.interior_basis(i as u32 + 1).scale(vi);
            out = out.add(&part);
        }
        Ok(out)
    }

    /// Evaluate a k-form on k vectors.
    pub fn apply(&self, vectors: &[Vec<S>]) -> S {
        assert_eq!(vectors.len() as u32, self.degree);
        let mut cur = self.clone();
        for v in vectors {
            cur = cur.interior(v).expect("dimension checked");
        }
        cur.coeff_mask(0)
    }

    /// Pullback along the linear map sending `e_j ↦ Σ_i A[i][j] e_i`
    /// (matrix acts on vectors; row-major `dim × dim`).
    ///
    /// Covectors transform by `A* e^i = Σ_j A[i][j] e^j`.
    pub fn pullback(&self, a: &crate::linalg::Matrix<S>) -> Result<Self, ExteriorError> {
        if a.rows() as u32 != self.dim || a.cols() as u32 != self.dim {
            return Err(ExteriorError::DimensionMismatch {
                left: self.dim,
                right: a.rows() as u32,
            });
        }
        let n = self.dim as usize;
        // Pull back each basis covector, then expand monomials.
        let pulled: Vec<AltForm<S>> = (0..n)
            .map(|i| {
                let mut f = AltForm::zero(self.dim, 1);
                for j in 0..n {
                    f.add_to_mask(1 << j, a.get(i, j).clone());
                }
                f
            })
            .collect();
        let mut out = AltForm::zero(self.dim, self.degree);
        for (m, c) in self.coeffs.iter() {
            let mut acc: Option<AltForm<S>> = None;
            for bit in 0..n {
                if m & (1 << bit) != 0 {
                    let factor = &pulled[bit];
                    acc = Some(match acc {
                        None => factor.clone(),
                        Some(a) => a.wedge(factor)?,
                    });
                }
            }
            let term = match acc {
                None => AltForm::constant(self.dim, c.clone()),
                Some(a) => a.scale(c),
            };
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Map coefficients into another scalar type.
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AltForm<T> {
        let mut out = AltForm::zero(self.dim, self.degree);
        for (m, c) in self.coeffs.iter() {
            out.add_to_mask(*m, f(c));
        }
        out
    }

    /// Euclidean coefficient norm (sum of squares), as f64.
    pub fn norm_sq_f64(&self) -> f64 {
        self.coeffs
            .values()
            .map(|c| {
                let x = c.to_f64();
                x * x
            })
            .sum()
    }

    pub fn norm_f64(&self) -> f64 {
        self.norm_sq_f64().sqrt()
    }

    /// Largest coefficient magnitude, as f64.
    pub fn max_abs_f64(&self) -> f64 {
        self.coeffs
            .values()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> fmt::Debug for AltForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 (deg {} in dim {})", self.degree, self.dim);
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}·e", c)?;
            for bit in 0..self.dim {
                if m & (1 << bit) != 0 {
                    write!(f, "{}", bit + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Enumerate all strictly increasing k-subsets of {0..n-1} as masks.
pub fn k_subsets(n: u32, k: u32) -> Vec<Mask> {
    let mut out = Vec::new();
    let full = 1u32 << n;
    for m in 0..full {
        if m.count_ones() == k {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn e(i: u32) -> AltForm<Rat> {
        AltForm::basis_covector(7, i)
    }

    #[test]
    fn wedge_disjoint() {
        let e1 = e(1);
        let e23 = AltForm::monomial(7, &[2, 3], Rat::from_i64(1));
        let w = e1.wedge(&e23).unwrap();
        assert_eq!(w.coeff(&[1, 2, 3]), Rat::from_i64(1));
        assert_eq!(w.num_terms(), 1);
    }

    #[test]
    fn wedge_repeated_index_is_zero() {
        let e1 = e(1);
        let e12 = AltForm::monomial(7, &[1, 2], Rat::from_i64(1));
        assert!(e1.wedge(&e12).unwrap().is_zero());
    }

    #[test]
    fn wedge_antisymmetry_sign() {
        let e2 = e(2);
        let e1 = e(1);
        let w = e2.wedge(&e1).unwrap();
        assert_eq!(w.coeff(&[1, 2]), Rat::from_i64(-1));
    }

    #[test]
    fn interior_basis_examples() {
        let e12 = AltForm::monomial(7, &[1, 2], Rat::from_i64(1));
        let i1 = e12.interior_basis(1);
        assert_eq!(i1.coeff(&[2]), Rat::from_i64(1));
        let i2 = e12.interior_basis(2);
        assert_eq!(i2.coeff(&[1]), Rat::from_i64(-1));
    }
}
