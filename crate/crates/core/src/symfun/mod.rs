//! The degree-truncated graded ring of symmetric functions in the power-sum,
//! monomial and Schur bases.
//!
//! Every [`SymFun`] carries its truncation degree; operations never extend it
//! silently. Basis conversions are exact per degree through the cached
//! transition tables of [`tables`].

mod finite;
mod tables;

pub use finite::{schur_from_bialternant, FinitePoly};
pub(crate) use tables::degree_tables;

use crate::partition::Partition;
use crate::scalar::{Rat, Scalar};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Power sums `p_lambda`.
    P,
    /// Monomial symmetric functions `m_lambda`.
    M,
    /// Schur functions `s_lambda`.
    S,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::P => write!(f, "p"),
            Basis::M => write!(f, "m"),
            Basis::S => write!(f, "s"),
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Basis> {
        match s {
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            other => Err(Error::invalid("basis", format!("unknown basis `{other}`"))),
        }
    }
}

/// A degree-truncated symmetric function: finite coefficient map over
/// partitions in a declared basis, with all weights at most the truncation
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFun {
    basis: Basis,
    degree: u32,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl SymFun {
    pub fn zero(basis: Basis, degree: u32) -> SymFun {
        SymFun {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis, degree: u32) -> SymFun {
        let mut f = SymFun::zero(basis, degree);
        f.insert_add(Partition::empty(), Scalar::one());
        f
    }

    /// The basis element indexed by `lam`, e.g. `p_lam`, `m_lam` or `s_lam`.
    pub fn basis_element(basis: Basis, lam: Partition, degree: u32) -> Result<SymFun> {
        if lam.weight() > degree {
            return Err(Error::DegreeMismatch(format!(
                "partition {lam} exceeds truncation degree {degree}"
            )));
        }
        let mut f = SymFun::zero(basis, degree);
        f.insert_add(lam, Scalar::one());
        Ok(f)
    }

    /// The power sum `p_k`.
    pub fn power_sum(k: u32, degree: u32) -> Result<SymFun> {
        SymFun::basis_element(Basis::P, Partition::new(vec![k])?, degree)
    }

    pub fn from_terms(
        basis: Basis,
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, Scalar)>,
    ) -> Result<SymFun> {
        let mut f = SymFun::zero(basis, degree);
        for (lam, c) in terms {
            if lam.weight() > degree {
                return Err(Error::DegreeMismatch(format!(
                    "partition {lam} exceeds truncation degree {degree}"
                )));
            }
            f.insert_add(lam, c);
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lam: &Partition) -> Scalar {
        self.coeffs.get(lam).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn insert_add(&mut self, lam: Partition, c: Scalar) {
        debug_assert!(lam.weight() <= self.degree);
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&lam) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.coeffs.remove(&lam);
                }
            }
            None => {
                self.coeffs.insert(lam, c);
            }
        }
    }

    /// Sum in a common basis; truncates to the smaller degree.
    pub fn add(&self, other: &SymFun) -> SymFun {
        assert_eq!(self.basis, other.basis, "add requires a common basis");
        let degree = self.degree.min(other.degree);
        let mut out = SymFun::zero(self.basis, degree);
        for (lam, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if lam.weight() <= degree {
                out.insert_add(lam.clone(), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SymFun {
        if c.is_zero() {
            return SymFun::zero(self.basis, self.degree);
        }
        SymFun {
            basis: self.basis,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, v)| (l.clone(), v * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> SymFun {
        self.scale(&-Scalar::one())
    }

    /// The degree-`d` graded component.
    pub fn component(&self, d: u32) -> SymFun {
        let mut out = SymFun::zero(self.basis, self.degree);
        for (lam, c) in &self.coeffs {
            if lam.weight() == d {
                out.insert_add(lam.clone(), c.clone());
            }
        }
        out
    }

    /// Product, computed in the power-sum basis (part-multiset union) and
    /// converted back; the result is truncated to the smaller degree.
    pub fn multiply(&self, other: &SymFun) -> SymFun {
        let degree = self.degree.min(other.degree);
        let f = self.convert(Basis::P);
        let g = other.convert(Basis::P);
        let mut out = SymFun::zero(Basis::P, degree);
        for (lam, c) in &f.coeffs {
            for (mu, d) in &g.coeffs {
                if lam.weight() + mu.weight() > degree {
                    continue;
                }
                let mut parts = lam.parts().to_vec();
                parts.extend_from_slice(mu.parts());
                out.insert_add(Partition::from_unsorted(parts), c * d);
            }
        }
        out.convert(self.basis)
    }

    /// Exact change of basis, degree by degree.
    pub fn convert(&self, target: Basis) -> SymFun {
        if self.basis == target {
            return self.clone();
        }
        let mut out = SymFun::zero(target, self.degree);
        let mut by_degree: BTreeMap<u32, Vec<(&Partition, &Scalar)>> = BTreeMap::new();
        for (lam, c) in &self.coeffs {
            by_degree.entry(lam.weight()).or_default().push((lam, c));
        }
        for (d, terms) in by_degree {
            let t = degree_tables(d);
            // source -> m
            let mut mvec: Vec<Scalar> = vec![Scalar::zero(); t.parts.len()];
            match self.basis {
                Basis::M => {
                    for (lam, c) in &terms {
                        mvec[t.index[*lam]] = (*c).clone();
                    }
                }
                Basis::P | Basis::S => {
                    let table = if self.basis == Basis::P {
                        &t.p_to_m
                    } else {
                        &t.s_to_m
                    };
                    for (lam, c) in &terms {
                        let row = t.index[*lam];
                        for (col, entry) in table[row].iter().enumerate() {
                            if !num::Zero::is_zero(entry) {
                                mvec[col] = &mvec[col] + &mul_rat(c, entry);
                            }
                        }
                    }
                }
            }
            // m -> target
            match target {
                Basis::M => {
                    for (col, v) in mvec.into_iter().enumerate() {
                        out.insert_add(t.parts[col].clone(), v);
                    }
                }
                Basis::P | Basis::S => {
                    let table = if target == Basis::P {
                        &t.m_to_p
                    } else {
                        &t.m_to_s
                    };
                    for (row, v) in mvec.iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        for (col, entry) in table[row].iter().enumerate() {
                            if !num::Zero::is_zero(entry) {
                                out.insert_add(t.parts[col].clone(), mul_rat(v, entry));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Restriction to `n` variables (sets the others to zero).
    pub fn evaluate_finite(&self, n: usize) -> FinitePoly {
        assert!(n >= 1);
        let m = self.convert(Basis::M);
        let mut out = FinitePoly::zero(n);
        for (mu, c) in &m.coeffs {
            if mu.len() > n {
                continue;
            }
            let mut expts = vec![0u32; n];
            for (i, &p) in mu.parts().iter().enumerate() {
                expts[i] = p;
            }
            for perm in distinct_permutations(&expts) {
                out.insert_add(perm, c.clone());
            }
        }
        out
    }
}

pub(crate) fn mul_rat(s: &Scalar, r: &Rat) -> Scalar {
    s * &Scalar::from_rat(r.clone())
}

/// All distinct permutations of the given exponent vector.
fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(values.len());
    fn rec(remaining: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        let mut last: Option<u32> = None;
        for i in 0..remaining.len() {
            if last == Some(remaining[i]) {
                continue;
            }
            last = Some(remaining[i]);
            let v = remaining.remove(i);
            current.push(v);
            rec(remaining, current, out);
            current.pop();
            remaining.insert(i, v);
        }
    }
    rec(&mut sorted, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn p_elem(parts: &[u32], degree: u32) -> SymFun {
        SymFun::basis_element(Basis::P, Partition::new(parts.to_vec()).unwrap(), degree).unwrap()
    }

    fn s_elem(parts: &[u32], degree: u32) -> SymFun {
        SymFun::basis_element(Basis::S, Partition::new(parts.to_vec()).unwrap(), degree).unwrap()
    }

    #[test]
    fn power_sum_products() {
        let p1 = p_elem(&[1], 4);
        let p11 = p1.multiply(&p1);
        assert_eq!(p11.coeff(&pt(&[1, 1])), Scalar::one());
        assert_eq!(p11.len(), 1);

        let p2 = p_elem(&[2], 4);
        let p21 = p2.multiply(&p1);
        assert_eq!(p21.coeff(&pt(&[2, 1])), Scalar::one());
        assert_eq!(p21.len(), 1);
    }

    #[test]
    fn schur_product_via_conversion() {
        let s1 = s_elem(&[1], 4);
        let prod = s1.multiply(&s1);
        assert_eq!(prod.basis(), Basis::S);
        assert_eq!(prod.coeff(&pt(&[2])), Scalar::one());
        assert_eq!(prod.coeff(&pt(&[1, 1])), Scalar::one());
        assert_eq!(prod.len(), 2);
    }

    #[test]
    fn conversion_examples() {
        // s_(1) -> p: p_1
        let s1p = s_elem(&[1], 3).convert(Basis::P);
        assert_eq!(s1p.coeff(&pt(&[1])), Scalar::one());
        assert_eq!(s1p.len(), 1);

        // s_(2) -> p: (p_(1,1) + p_(2))/2
        let s2p = s_elem(&[2], 3).convert(Basis::P);
        assert_eq!(s2p.coeff(&pt(&[1, 1])), Scalar::from_frac(1, 2));
        assert_eq!(s2p.coeff(&pt(&[2])), Scalar::from_frac(1, 2));

        // p_(2) -> m: m_(2)
        let p2m = p_elem(&[2], 3).convert(Basis::M);
        assert_eq!(p2m.coeff(&pt(&[2])), Scalar::one());
        assert_eq!(p2m.len(), 1);
    }

    #[test]
    fn conversion_roundtrips() {
        for d in 0..=6u32 {
            for lam in Partition::enumerate(d) {
                let f = s_elem(lam.parts(), 6);
                assert_eq!(f.convert(Basis::P).convert(Basis::S), f);
                assert_eq!(f.convert(Basis::M).convert(Basis::S), f);
                let g = p_elem(lam.parts(), 6);
                assert_eq!(g.convert(Basis::S).convert(Basis::P), g);
            }
        }
    }

    #[test]
    fn evaluate_finite_examples() {
        let p2 = p_elem(&[2], 3).evaluate_finite(2);
        assert_eq!(p2.coeff(&[2, 0]), Scalar::one());
        assert_eq!(p2.coeff(&[0, 2]), Scalar::one());
        assert_eq!(p2.terms().count(), 2);

        let m11 = SymFun::basis_element(Basis::M, pt(&[1, 1]), 3)
            .unwrap()
            .evaluate_finite(2);
        assert_eq!(m11.coeff(&[1, 1]), Scalar::one());
        assert_eq!(m11.terms().count(), 1);

        let s21 = s_elem(&[2, 1], 3).evaluate_finite(1);
        assert!(s21.is_zero());
    }

    #[test]
    fn bialternant_matches_conversion() {
        for d in 1..=5u32 {
            for lam in Partition::enumerate(d) {
                let n = d as usize;
                let via_tables = s_elem(lam.parts(), d).evaluate_finite(n);
                let via_det = schur_from_bialternant(&lam, n).unwrap();
                assert_eq!(via_tables, via_det, "mismatch for {lam}");
            }
        }
    }

    #[test]
    fn grading_preserved_by_multiply() {
        let f = p_elem(&[2], 6).add(&p_elem(&[1], 6));
        let g = p_elem(&[3], 6).add(&p_elem(&[1, 1], 6));
        let prod = f.multiply(&g);
        for (lam, _) in prod.terms() {
            assert!(matches!(lam.weight(), 3 | 4 | 5));
        }
    }

    #[test]
    fn character_integrality() {
        // s-expansion of p_lambda has integer coefficients
        for d in 1..=6u32 {
            for lam in Partition::enumerate(d) {
                let ps = p_elem(lam.parts(), d).convert(Basis::S);
                for (_, c) in ps.terms() {
                    let r = c.as_plain().expect("classical data stays plain");
                    assert!(num::One::is_one(r.denom()), "non-integer in {lam}");
                }
            }
        }
    }
}
