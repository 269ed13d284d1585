//! Finite/affine test for ordinary (even) generalized Cartan matrices.

use crate::scalars::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthType {
    Finite,
    Affine,
    Indefinite,
}

impl GrowthType {
    pub fn label(self) -> &'static str {
        match self {
            GrowthType::Finite => "finite",
            GrowthType::Affine => "affine",
            GrowthType::Indefinite => "indefinite",
        }
    }
}

/// Exact determinant by fraction-exact Gaussian elimination.
pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut acc = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        let piv = a[c][c].clone();
        acc = &acc * &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x = &*x - &(&f * y);
            }
        }
    }
    acc
}

fn principal_minor(m: &[Vec<Scalar>], set: &[usize]) -> Scalar {
    let sub: Vec<Vec<Scalar>> = set
        .iter()
        .map(|&i| set.iter().map(|&j| m[i][j].clone()).collect())
        .collect();
    det(&sub)
}

/// For an indecomposable integer GCM: finite iff every principal minor is
/// positive; affine iff the determinant vanishes and every proper principal
/// minor is positive.
pub fn even_gcm_type(m: &[Vec<Scalar>]) -> GrowthType {
    let n = m.len();
    let mut proper_positive = true;
    for mask in 1u32..(1 << n) - 1 {
        let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if principal_minor(m, &set).sign().unwrap_or(0) <= 0 {
            proper_positive = false;
            break;
        }
    }
    if !proper_positive {
        return GrowthType::Indefinite;
    }
    match det(m).sign().unwrap_or(-1) {
        1 => GrowthType::Finite,
        0 => GrowthType::Affine,
        _ => GrowthType::Indefinite,
    }
}
