use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::IntMat;
use crate::{Error, Result};

/// Inertia `(n₊, n₀, n₋)` of a real symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Signature {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Signature {
            n_plus,
            n_zero,
            n_minus,
        }
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    pub fn is_negative_definite(&self) -> bool {
        self.n_plus == 0 && self.n_zero == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

/// Inertia by exact congruence diagonalization over `Q`.
///
/// A nonzero diagonal entry is used as a 1×1 pivot when one exists. Otherwise
/// a nonzero off-diagonal entry `b` spans a hyperbolic block `[[0,b],[b,0]]`,
/// which contributes `(1, 0, 1)` and is eliminated through its Schur
/// complement.
pub fn signature_of(m: &IntMat) -> Result<Signature> {
    if !m.is_symmetric() {
        return Err(Error::Contract("signature of a non-symmetric matrix".into()));
    }
    let mut a: Vec<Vec<BigRational>> = m
        .to_nested()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let n = a.len();
    let mut sig = Signature::new(0, 0, 0);
    let mut k = 0;

    let swap = |a: &mut Vec<Vec<BigRational>>, i: usize, j: usize| {
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };

    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap(&mut a, k, p);
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                sig.n_plus += 1;
            } else {
                sig.n_minus += 1;
            }
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k + 1..n {
                    let v = &f * &a[k][j];
                    a[i][j] -= v;
                }
            }
            k += 1;
            continue;
        }
        let Some((i, j)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            sig.n_zero += n - k;
            break;
        };
        swap(&mut a, k, i);
        swap(&mut a, k + 1, j);
        let b = a[k][k + 1].clone();
        // Schur complement of [[0,b],[b,0]]: subtract (x_r y_s + y_r x_s) / b
        for r in k + 2..n {
            for s in k + 2..n {
                let v = (&a[r][k] * &a[k + 1][s] + &a[r][k + 1] * &a[k][s]) / &b;
                a[r][s] -= v;
            }
        }
        sig.n_plus += 1;
        sig.n_minus += 1;
        k += 2;
    }
    Ok(sig)
}

/// Rank of the symmetric form, `n₊ + n₋`.
pub fn rank_of_symmetric(m: &IntMat) -> Result<usize> {
    let s = signature_of(m)?;
    Ok(s.n_plus + s.n_minus)
}
