//! Per-degree transition tables between the power-sum, monomial and Schur
//! bases, computed once and cached behind a read-mostly lock.
//!
//! The Schur-to-monomial table comes from the single-variable expansion
//! recursion of the bialternant (peel off the last variable; the surviving
//! inner shapes interlace the outer one); the power-sum-to-monomial table
//! comes from the multiplication rule for a power sum against a monomial
//! symmetric function. The other directions are exact matrix inverses.

use crate::minors::invert;
use crate::partition::Partition;
use crate::scalar::Rat;
use num::Zero;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// row lambda, column mu: coefficient of m_mu in p_lambda
    pub p_to_m: Vec<Vec<Rat>>,
    pub m_to_p: Vec<Vec<Rat>>,
    /// row lambda, column mu: coefficient of m_mu in s_lambda
    pub s_to_m: Vec<Vec<Rat>>,
    pub m_to_s: Vec<Vec<Rat>>,
}

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();

pub(crate) fn degree_tables(d: u32) -> Arc<DegreeTables> {
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&d) {
        return Arc::clone(t);
    }
    let built = Arc::new(build_tables(d));
    let mut guard = cache.write().unwrap();
    Arc::clone(guard.entry(d).or_insert(built))
}

fn build_tables(d: u32) -> DegreeTables {
    let parts = Partition::enumerate(d);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let n = parts.len();

    let mut p_to_m = vec![vec![Rat::zero(); n]; n];
    for (row, lam) in parts.iter().enumerate() {
        for (mu, coeff) in power_sum_monomials(lam) {
            let col = index[&mu];
            p_to_m[row][col] = Rat::from_integer(coeff.into());
        }
    }

    let mut s_to_m = vec![vec![Rat::zero(); n]; n];
    for (row, lam) in parts.iter().enumerate() {
        let mut memo = HashMap::new();
        for (col, mu) in parts.iter().enumerate() {
            let c = monomial_coeff(lam.parts(), mu.parts(), &mut memo);
            s_to_m[row][col] = Rat::from_integer(c.into());
        }
    }

    let m_to_p = invert(&p_to_m).expect("power-sum transition is invertible");
    let m_to_s = invert(&s_to_m).expect("Schur transition is invertible");

    DegreeTables {
        parts,
        index,
        p_to_m,
        m_to_p,
        s_to_m,
        m_to_s,
    }
}

/// Expansion of `p_lambda` in monomial symmetric functions:
/// `p_r * m_mu = sum_nu c_nu m_nu` where `nu` adds `r` to one part value of
/// `mu` (or appends `r`) and `c_nu` is the multiplicity of the enlarged part
/// in `nu`.
fn power_sum_monomials(lam: &Partition) -> HashMap<Partition, i64> {
    let mut acc: HashMap<Partition, i64> = HashMap::new();
    acc.insert(Partition::empty(), 1);
    for &r in lam.parts() {
        let mut next: HashMap<Partition, i64> = HashMap::new();
        for (mu, c) in &acc {
            // candidate targets: add r to one distinct part value of mu, or a new part
            let mut values: Vec<u32> = mu.parts().to_vec();
            values.dedup();
            values.push(0);
            for &v in &values {
                let mut parts: Vec<u32> = mu.parts().to_vec();
                if v == 0 {
                    parts.push(r);
                } else {
                    let pos = parts.iter().position(|&p| p == v).unwrap();
                    parts[pos] = v + r;
                }
                let nu = Partition::from_unsorted(parts);
                let mult = nu.parts().iter().filter(|&&p| p == v + r).count() as i64;
                *next.entry(nu).or_insert(0) += c * mult;
            }
        }
        acc = next;
    }
    acc.retain(|_, c| *c != 0);
    acc
}

type MonomialMemo = HashMap<(Vec<u32>, Vec<u32>), i64>;

/// Coefficient of the monomial `x_1^{nu_1} ... x_n^{nu_n}` in the Schur
/// polynomial of shape `lam` in `n = nu.len()` variables. Peeling the last
/// variable off the bialternant leaves the shapes interlacing `lam`.
fn monomial_coeff(lam: &[u32], nu: &[u32], memo: &mut MonomialMemo) -> i64 {
    if nu.is_empty() {
        return if lam.is_empty() { 1 } else { 0 };
    }
    if lam.len() > nu.len() {
        return 0;
    }
    let key = (lam.to_vec(), nu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let total: u32 = lam.iter().sum();
    let rest: u32 = nu[..nu.len() - 1].iter().sum();
    let last = nu[nu.len() - 1];
    debug_assert_eq!(total, rest + last);
    let mut acc = 0i64;
    for mu in interlacing(lam, rest) {
        acc += monomial_coeff(&mu, &nu[..nu.len() - 1], memo);
    }
    memo.insert(key, acc);
    acc
}

/// All partitions `mu` of `target` with `lam_i >= mu_i >= lam_{i+1}`.
fn interlacing(lam: &[u32], target: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        lam: &[u32],
        i: usize,
        remaining: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == lam.len() {
            if remaining == 0 {
                let mut mu = current.clone();
                while mu.last() == Some(&0) {
                    mu.pop();
                }
                out.push(mu);
            }
            return;
        }
        let hi = lam[i].min(remaining);
        let lo = if i + 1 < lam.len() { lam[i + 1] } else { 0 };
        if lo > hi {
            return;
        }
        for v in (lo..=hi).rev() {
            current.push(v);
            rec(lam, i + 1, remaining - v, current, out);
            current.pop();
        }
    }
    rec(lam, 0, target, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::mat_mul;
    use crate::scalar::rat_int;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn degree_two_tables() {
        let t = degree_tables(2);
        // p_(2) = m_(2); p_(1,1) = m_(2) + 2 m_(1,1)
        let i2 = t.index[&pt(&[2])];
        let i11 = t.index[&pt(&[1, 1])];
        assert_eq!(t.p_to_m[i2][i2], rat_int(1));
        assert_eq!(t.p_to_m[i2][i11], rat_int(0));
        assert_eq!(t.p_to_m[i11][i2], rat_int(1));
        assert_eq!(t.p_to_m[i11][i11], rat_int(2));
        // s_(2) = m_(2) + m_(1,1); s_(1,1) = m_(1,1)
        assert_eq!(t.s_to_m[i2][i2], rat_int(1));
        assert_eq!(t.s_to_m[i2][i11], rat_int(1));
        assert_eq!(t.s_to_m[i11][i2], rat_int(0));
        assert_eq!(t.s_to_m[i11][i11], rat_int(1));
    }

    #[test]
    fn inverses_compose_to_identity() {
        for d in 0..=7u32 {
            let t = degree_tables(d);
            let prod = mat_mul(&t.p_to_m, &t.m_to_p);
            for (i, row) in prod.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(*v, if i == j { rat_int(1) } else { rat_int(0) });
                }
            }
        }
    }
}
