//! Truncated power series in one grading parameter with exact scalar
//! coefficients. Used as the degreewise oracle for closed-form inner products
//! and compositions: determinant and exponential factors become honest formal
//! series here, with no square roots or transcendentals materialized.

use crate::minors::invert;
use crate::scalar::Scalar;

/// A power series truncated at order `trunc` (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Series {
    trunc: usize,
    c: Vec<Scalar>,
}

impl Series {
    pub fn zero(trunc: usize) -> Series {
        Series {
            trunc,
            c: vec![Scalar::zero(); trunc + 1],
        }
    }

    pub fn constant(trunc: usize, value: Scalar) -> Series {
        let mut s = Series::zero(trunc);
        s.c[0] = value;
        s
    }

    pub fn one(trunc: usize) -> Series {
        Series::constant(trunc, Scalar::one())
    }

    /// `value * x^order`.
    pub fn monomial(trunc: usize, order: usize, value: Scalar) -> Series {
        let mut s = Series::zero(trunc);
        if order <= trunc {
            s.c[order] = value;
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.c[k]
    }

    pub fn set_coeff(&mut self, k: usize, value: Scalar) {
        self.c[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Order of the lowest nonzero coefficient; `trunc + 1` for zero.
    pub fn order(&self) -> usize {
        self.c
            .iter()
            .position(|v| !v.is_zero())
            .unwrap_or(self.trunc + 1)
    }

    pub fn add(&self, other: &Series) -> Series {
        assert_eq!(self.trunc, other.trunc);
        Series {
            trunc: self.trunc,
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        assert_eq!(self.trunc, other.trunc);
        Series {
            trunc: self.trunc,
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Series {
        Series {
            trunc: self.trunc,
            c: self.c.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        assert_eq!(self.trunc, other.trunc);
        let mut out = Series::zero(self.trunc);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if i + j > self.trunc {
                    break;
                }
                if !b.is_zero() {
                    out.c[i + j] = &out.c[i + j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn scale(&self, v: &Scalar) -> Series {
        Series {
            trunc: self.trunc,
            c: self.c.iter().map(|a| a * v).collect(),
        }
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Series {
        assert!(self.c[0].is_zero(), "exp needs zero constant term");
        let mut out = Series::one(self.trunc);
        let mut power = Series::one(self.trunc);
        let mut kfact = Scalar::one();
        for k in 1..=self.trunc {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            kfact = &kfact * &Scalar::from_int(k as i64);
            let inv = kfact.recip().expect("factorial nonzero");
            out = out.add(&power.scale(&inv));
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Option<Series> {
        if self.c[0].is_zero() {
            return None;
        }
        let c0inv = self.c[0].recip().ok()?;
        // self = c0 (1 - r) with ord(r) >= 1; invert by geometric series
        let r = Series::one(self.trunc).sub(&self.scale(&c0inv));
        let mut out = Series::one(self.trunc);
        let mut power = Series::one(self.trunc);
        for _ in 1..=self.trunc {
            power = power.mul(&r);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Some(out.scale(&c0inv))
    }
}

/// `det(1 - x)^{-1/2}` as a series, for `x` of positive order:
/// `exp((1/2) sum_k tr(x^k)/k)`.
pub(crate) fn det_inv_sqrt_series(x: &[Vec<Series>]) -> Series {
    let n = x.len();
    if n == 0 {
        return Series::one(0);
    }
    let trunc = x[0][0].trunc();
    for row in x {
        for e in row {
            debug_assert!(e.order() >= 1, "matrix must have positive order");
        }
    }
    let mut log_acc = Series::zero(trunc);
    let mut power: Vec<Vec<Series>> = x.to_vec();
    for k in 1..=trunc {
        // trace of x^k
        let mut tr = Series::zero(trunc);
        for (i, row) in power.iter().enumerate() {
            tr = tr.add(&row[i]);
        }
        let kinv = Scalar::from_int(k as i64).recip().expect("k nonzero");
        log_acc = log_acc.add(&tr.scale(&kinv));
        if k < trunc {
            power = series_mat_mul(&power, x);
        }
    }
    log_acc.scale(&Scalar::from_frac(1, 2)).exp()
}

pub(crate) fn series_mat_mul(a: &[Vec<Series>], b: &[Vec<Series>]) -> Vec<Vec<Series>> {
    let n = a.len();
    let inner = a[0].len();
    let m = b[0].len();
    let trunc = a[0][0].trunc();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Series::zero(trunc);
                    for k in 0..inner {
                        acc = acc.add(&a[i][k].mul(&b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Inverse of a series matrix whose constant part is invertible:
/// `(m0 + m+)^{-1} = sum_k (-m0^{-1} m+)^k m0^{-1}`.
pub(crate) fn series_mat_inverse(m: &[Vec<Series>]) -> Option<Vec<Vec<Series>>> {
    let trunc = m[0][0].trunc();
    let m0: Vec<Vec<Scalar>> = m
        .iter()
        .map(|row| row.iter().map(|s| s.coeff(0).clone()).collect())
        .collect();
    let m0_inv = invert(&m0)?;
    let m0_inv_series: Vec<Vec<Series>> = m0_inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| Series::constant(trunc, v.clone()))
                .collect()
        })
        .collect();
    // plus = m - m0
    let plus: Vec<Vec<Series>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    let mut p = s.clone();
                    let c0 = p.coeff(0).clone();
                    p.set_coeff(0, &c0 - &m0[i][j]);
                    p
                })
                .collect()
        })
        .collect();
    let step = series_mat_mul(&m0_inv_series, &plus); // m0^{-1} m+, positive order
    let mut out = m0_inv_series.clone();
    let mut power = m0_inv_series.clone();
    for _ in 1..=trunc {
        // power <- (-step) * power
        let next = series_mat_mul(&step, &power);
        power = next
            .into_iter()
            .map(|row| row.into_iter().map(|s| s.neg()).collect())
            .collect();
        if power
            .iter()
            .all(|row| row.iter().all(|s| s.is_zero()))
        {
            break;
        }
        out = out
            .iter()
            .zip(&power)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a.add(b)).collect())
            .collect();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_and_inverse() {
        let trunc = 6;
        let x = Series::monomial(trunc, 1, Scalar::one());
        let e = x.exp();
        // coefficients 1/k!
        assert_eq!(e.coeff(0), &Scalar::one());
        assert_eq!(e.coeff(3), &Scalar::from_frac(1, 6));
        let one_minus = Series::one(trunc).sub(&x);
        let inv = one_minus.inverse().unwrap();
        for k in 0..=trunc {
            assert_eq!(inv.coeff(k), &Scalar::one());
        }
    }

    #[test]
    fn det_inv_sqrt_scalar_case() {
        // det(1 - c s^2)^{-1/2} = sum binom(2n,n)/4^n c^n s^{2n}
        let trunc = 8;
        let c = Scalar::from_int(3);
        let x = vec![vec![Series::monomial(trunc, 2, c.clone())]];
        let d = det_inv_sqrt_series(&x);
        assert_eq!(d.coeff(0), &Scalar::one());
        assert_eq!(d.coeff(2), &(&Scalar::from_frac(1, 2) * &c));
        // n=2: binom(4,2)/16 = 3/8 -> 3/8 * 9
        assert_eq!(
            d.coeff(4),
            &(&Scalar::from_frac(3, 8) * &(&c * &c))
        );
        assert!(d.coeff(1).is_zero() && d.coeff(3).is_zero());
    }

    #[test]
    fn matrix_inverse_roundtrip() {
        let trunc = 5;
        // m = [[1, s],[0, 1 - s]]
        let m = vec![
            vec![
                Series::one(trunc),
                Series::monomial(trunc, 1, Scalar::one()),
            ],
            vec![
                Series::zero(trunc),
                Series::one(trunc).sub(&Series::monomial(trunc, 1, Scalar::one())),
            ],
        ];
        let inv = series_mat_inverse(&m).unwrap();
        let prod = series_mat_mul(&m, &inv);
        assert_eq!(prod[0][0], Series::one(trunc));
        assert!(prod[0][1].is_zero());
        assert!(prod[1][0].is_zero());
        assert_eq!(prod[1][1], Series::one(trunc));
    }
}
