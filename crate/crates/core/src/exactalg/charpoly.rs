use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntMat, IntPoly};
use crate::{Error, Result};

/// Monic characteristic polynomial `det(t·I - m)`.
///
/// The matrix is brought to upper Hessenberg form by rational similarity
/// transforms, then the polynomial is assembled from the standard
/// leading-principal-minor recurrence. All coefficients come out integral.
pub fn char_poly(m: &IntMat) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut h: Vec<Vec<BigRational>> = m
        .to_nested()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();

    for k in 0..n.saturating_sub(2) {
        let Some(p) = (k + 1..n).find(|&i| !h[i][k].is_zero()) else {
            continue;
        };
        if p != k + 1 {
            h.swap(p, k + 1);
            for row in h.iter_mut() {
                row.swap(p, k + 1);
            }
        }
        for i in k + 2..n {
            if h[i][k].is_zero() {
                continue;
            }
            let u = &h[i][k] / &h[k + 1][k];
            for j in 0..n {
                let v = &u * &h[k + 1][j];
                h[i][j] -= v;
            }
            for r in 0..n {
                let v = &u * &h[r][i];
                h[r][k + 1] += v;
            }
        }
    }

    // polys[m] = char poly of the leading m×m block, lowest degree first
    let mut polys: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![BigRational::zero(); m + 1];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * &h[m - 1][m - 1];
        }
        let mut sub = BigRational::one();
        for i in (1..m).rev() {
            sub *= &h[i][i - 1];
            if sub.is_zero() {
                break;
            }
            let coef = &h[i - 1][m - 1] * &sub;
            for (d, c) in polys[i - 1].iter().enumerate() {
                next[d] -= &coef * c;
            }
        }
        polys.push(next);
    }

    let coeffs = polys[n]
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Contract(format!("non-integral coefficient {c}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}
