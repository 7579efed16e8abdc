//! Weighted-truncated polynomials in countably many commuting variables
//! `z_1, z_2, ...` with exact rational coefficients, where `z_j` carries
//! weight `j` and all monomials of weight above the cutoff are dropped.
//! Monomials are keyed by their weight partitions (one part `j` per factor
//! `z_j`), which matches the grading of the power-sum basis.

use crate::minors::Ring;
use crate::partition::Partition;
use crate::scalar::{factorial, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;

/// A truncated polynomial in the weighted variables; `cutoff` bounds the
/// total weight of every kept monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ZPoly {
    cutoff: u32,
    terms: BTreeMap<Partition, Rat>,
}

impl ZPoly {
    pub fn zero(cutoff: u32) -> ZPoly {
        ZPoly {
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(cutoff: u32, c: Rat) -> ZPoly {
        let mut p = ZPoly::zero(cutoff);
        p.insert_add(Partition::empty(), c);
        p
    }

    pub fn one(cutoff: u32) -> ZPoly {
        ZPoly::constant(cutoff, <Rat as One>::one())
    }

    /// The variable `z_j`.
    pub fn var(cutoff: u32, j: u32) -> ZPoly {
        let mut p = ZPoly::zero(cutoff);
        if j <= cutoff {
            p.insert_add(
                Partition::new(vec![j]).expect("positive part"),
                <Rat as One>::one(),
            );
        }
        p
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &Partition) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(<Rat as Zero>::zero)
    }

    pub fn insert_add(&mut self, key: Partition, c: Rat) {
        if Zero::is_zero(&c) || key.weight() > self.cutoff {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if Zero::is_zero(existing) {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }
}

impl Ring for ZPoly {
    // context-free constants carry an unbounded cutoff; binary operations
    // take the minimum, so they mix with any truncation
    fn zero() -> Self {
        ZPoly::zero(u32::MAX)
    }

    fn one() -> Self {
        ZPoly::one(u32::MAX)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.cutoff = self.cutoff.min(other.cutoff);
        out.terms.retain(|k, _| k.weight() <= out.cutoff);
        for (k, c) in &other.terms {
            out.insert_add(k.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.cutoff = self.cutoff.min(other.cutoff);
        out.terms.retain(|k, _| k.weight() <= out.cutoff);
        for (k, c) in &other.terms {
            out.insert_add(k.clone(), -c.clone());
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = ZPoly::zero(cutoff);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                if k1.weight() + k2.weight() > cutoff {
                    continue;
                }
                let mut parts = k1.parts().to_vec();
                parts.extend_from_slice(k2.parts());
                out.insert_add(Partition::from_unsorted(parts), c1 * c2);
            }
        }
        out
    }
}

/// The complete-exponential polynomials `R_n(z)` defined by
/// `exp(sum_j z_j x^j) = sum_n R_n(z) x^n`: explicitly
/// `R_n = sum over weight-n monomials of prod z_j^{m_j} / m_j!`, with
/// `R_0 = 1` and `R_{n<0} = 0`.
pub(crate) fn exp_series_poly(n: i64, cutoff: u32) -> ZPoly {
    if n < 0 {
        return ZPoly::zero(cutoff);
    }
    let n = n as u32;
    let mut out = ZPoly::zero(cutoff);
    if n > cutoff {
        return out;
    }
    for lam in Partition::enumerate(n) {
        let mults = lam.to_multiplicities();
        let mut denom = <Rat as One>::one();
        for &m in mults.as_slice() {
            if m > 1 {
                denom *= factorial(m as u64);
            }
        }
        out.insert_add(lam, <Rat as One>::one() / denom);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn exp_series_examples() {
        // R_1 = z_1, R_2 = z_1^2/2 + z_2
        let r1 = exp_series_poly(1, 6);
        assert_eq!(r1.coeff(&pt(&[1])), rat_int(1));
        assert_eq!(r1.terms().count(), 1);

        let r2 = exp_series_poly(2, 6);
        assert_eq!(r2.coeff(&pt(&[1, 1])), Rat::new(1.into(), 2.into()));
        assert_eq!(r2.coeff(&pt(&[2])), rat_int(1));
        assert_eq!(r2.terms().count(), 2);

        assert!(exp_series_poly(-1, 6).is_zero());
        assert_eq!(exp_series_poly(0, 6), ZPoly::one(6));
    }

    #[test]
    fn exp_series_generating_identity() {
        // sum_n R_n(z) x^n = exp(sum z_j x^j): check the x^n coefficient by
        // multiplying out exp truncated in x-degree
        let cutoff = 6u32;
        // exp as iterated series in x with ZPoly coefficients
        let mut coeffs: Vec<ZPoly> = vec![ZPoly::zero(cutoff); cutoff as usize + 1];
        coeffs[0] = ZPoly::one(cutoff);
        for j in 1..=cutoff {
            // multiply by exp(z_j x^j)
            let mut next = vec![ZPoly::zero(cutoff); cutoff as usize + 1];
            for (d, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut pow = ZPoly::one(cutoff);
                let mut k = 0usize;
                loop {
                    let deg = d + k * j as usize;
                    if deg > cutoff as usize {
                        break;
                    }
                    let kfact = factorial(k as u64);
                    let term = pow
                        .clone()
                        .mul(c)
                        .mul(&ZPoly::constant(cutoff, <Rat as One>::one() / kfact));
                    next[deg] = next[deg].add(&term);
                    k += 1;
                    pow = pow.mul(&ZPoly::var(cutoff, j));
                }
            }
            coeffs = next;
        }
        for n in 0..=cutoff {
            assert_eq!(coeffs[n as usize], exp_series_poly(n as i64, cutoff));
        }
    }
}
