//! Symmetric polynomials in finitely many variables, and the bialternant
//! construction of Schur polynomials (alternant determinant divided exactly
//! by the Vandermonde product).

use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A polynomial in `nvars` variables with exact coefficients, keyed by
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl FinitePoly {
    pub fn zero(nvars: usize) -> FinitePoly {
        FinitePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> FinitePoly {
        let mut p = FinitePoly::zero(nvars);
        p.insert_add(vec![0; nvars], c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, expts: &[u32]) -> Scalar {
        self.terms
            .get(expts)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn insert_add(&mut self, key: Vec<u32>, c: Scalar) {
        assert_eq!(key.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &FinitePoly) -> FinitePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FinitePoly) -> FinitePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(k.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &FinitePoly) -> FinitePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = FinitePoly::zero(self.nvars);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let key: Vec<u32> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                out.insert_add(key, c1 * c2);
            }
        }
        out
    }

    /// True when invariant under all adjacent variable swaps.
    pub fn is_symmetric(&self) -> bool {
        for (key, coeff) in &self.terms {
            for i in 0..self.nvars.saturating_sub(1) {
                if key[i] != key[i + 1] {
                    let mut swapped = key.clone();
                    swapped.swap(i, i + 1);
                    if self.coeff(&swapped) != *coeff {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Reads the monomial-basis coefficients of a symmetric polynomial:
    /// the coefficient of `m_mu` is the coefficient of the descending
    /// monomial `x^mu`.
    pub fn monomial_coefficients(&self) -> BTreeMap<Partition, Scalar> {
        let mut out = BTreeMap::new();
        for (key, coeff) in &self.terms {
            let mut sorted = key.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted == *key {
                let mu = Partition::from_unsorted(key.clone());
                out.insert(mu, coeff.clone());
            }
        }
        out
    }

    /// Exact division by `x_k - x_l`; error when not divisible.
    pub(crate) fn exact_div_diff(&self, k: usize, l: usize) -> Result<FinitePoly> {
        let mut rem = self.clone();
        let mut out = FinitePoly::zero(self.nvars);
        loop {
            // leading term in x_k degree
            let lead = rem
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| a[k].cmp(&b[k]).then(a.cmp(b)))
                .map(|(key, c)| (key.clone(), c.clone()));
            let Some((key, coeff)) = lead else {
                return Ok(out);
            };
            if key[k] == 0 {
                return Err(Error::invalid(
                    "bialternant",
                    "alternant not divisible by the Vandermonde factor",
                ));
            }
            let mut qkey = key.clone();
            qkey[k] -= 1;
            out.insert_add(qkey.clone(), coeff.clone());
            // rem -= (x_k - x_l) * coeff * x^qkey
            rem.insert_add(key, -&coeff);
            let mut lkey = qkey;
            lkey[l] += 1;
            rem.insert_add(lkey, coeff);
        }
    }
}

/// The alternant `det{ x_k^{lambda_j + n - j} }` expanded over permutations.
fn alternant(lam: &Partition, n: usize) -> FinitePoly {
    let expts: Vec<u32> = (0..n)
        .map(|j| lam.part(j) + (n - 1 - j) as u32)
        .collect();
    let mut out = FinitePoly::zero(n);
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        expts: &[u32],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        parity: bool,
        out: &mut FinitePoly,
    ) {
        if perm.len() == n {
            let key: Vec<u32> = perm.iter().map(|&j| expts[j]).collect();
            let c = if parity {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            out.insert_add(key, c);
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                // parity flips by the number of used entries after j
                let inversions = (j + 1..n).filter(|&i| used[i]).count();
                perm.push(j);
                rec(n, expts, perm, used, parity ^ (inversions % 2 == 1), out);
                perm.pop();
                used[j] = false;
            }
        }
    }
    rec(n, &expts, &mut perm, &mut used, false, &mut out);
    out
}

/// Schur polynomial in `n` variables as the alternant divided exactly by the
/// Vandermonde product. `n` must be at least the number of parts.
pub fn schur_from_bialternant(lam: &Partition, n: usize) -> Result<FinitePoly> {
    if n < lam.len() {
        return Err(Error::invalid(
            "nvars",
            format!("need at least {} variables for {}", lam.len(), lam),
        ));
    }
    if n == 0 {
        return Ok(FinitePoly::constant(0, Scalar::one()));
    }
    assert!(n <= 9, "bialternant expansion is for small variable counts");
    let mut poly = alternant(lam, n);
    for k in 0..n {
        for l in k + 1..n {
            poly = poly.exact_div_diff(k, l)?;
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mono(p: &FinitePoly, expts: &[u32]) -> Scalar {
        p.coeff(expts)
    }

    #[test]
    fn schur_small_cases() {
        // (1) in 2 vars: x1 + x2
        let s1 = schur_from_bialternant(&pt(&[1]), 2).unwrap();
        assert_eq!(mono(&s1, &[1, 0]), Scalar::one());
        assert_eq!(mono(&s1, &[0, 1]), Scalar::one());
        assert_eq!(s1.terms().count(), 2);

        // (2) in 2 vars: x1^2 + x1 x2 + x2^2
        let s2 = schur_from_bialternant(&pt(&[2]), 2).unwrap();
        assert_eq!(mono(&s2, &[2, 0]), Scalar::one());
        assert_eq!(mono(&s2, &[1, 1]), Scalar::one());
        assert_eq!(mono(&s2, &[0, 2]), Scalar::one());
        assert_eq!(s2.terms().count(), 3);

        // (1,1) in 2 vars: x1 x2
        let s11 = schur_from_bialternant(&pt(&[1, 1]), 2).unwrap();
        assert_eq!(mono(&s11, &[1, 1]), Scalar::one());
        assert_eq!(s11.terms().count(), 1);

        // too few variables
        assert!(schur_from_bialternant(&pt(&[2, 1]), 1).is_err());
    }

    #[test]
    fn schur_polynomials_are_symmetric() {
        for lam in Partition::enumerate(4) {
            let n = lam.weight() as usize;
            let s = schur_from_bialternant(&lam, n).unwrap();
            assert!(s.is_symmetric(), "s_{lam} not symmetric");
        }
    }
}
