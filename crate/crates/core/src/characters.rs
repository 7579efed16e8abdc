//! Symmetric-group character values three ways: as pairings of power sums
//! with Schur functions, through an independent border-strip recursion used
//! purely as ground truth, and as coefficients of two determinant generating
//! functions in formal variables.

use crate::inner::{inner_product, Weight};
use crate::partition::{MayaIndex, Partition};
use crate::scalar::Rat;
use crate::symfun::{Basis, SymFun};
use crate::zring::{exp_series_poly, ZPoly};
use crate::{par, Error, Result};
use num::{One, Zero};
use std::collections::HashMap;

/// `chi^mu(lambda) = <p_lambda, s_mu>` under the classical product; always an
/// integer.
pub fn char_value(mu: &Partition, lambda: &Partition) -> Result<i64> {
    if mu.weight() != lambda.weight() {
        return Err(Error::DegreeMismatch(format!(
            "|mu| = {} but |lambda| = {}",
            mu.weight(),
            lambda.weight()
        )));
    }
    let d = mu.weight();
    let p = SymFun::basis_element(Basis::P, lambda.clone(), d)?;
    let s = SymFun::basis_element(Basis::S, mu.clone(), d)?;
    let v = inner_product(&p, &s, &Weight::Classical);
    let plain = v.as_plain().expect("classical pairing is rational");
    debug_assert!(plain.denom().is_one(), "character value must be integral");
    Ok(i64::try_from(plain.numer().clone()).expect("character value fits i64"))
}

/// Border-strip (rim-hook) recursion on the slot sequence of the diagram:
/// removing a strip of length `r` moves one occupied slot down by `r`; the
/// sign counts the occupied slots jumped over. Serves as the independent
/// oracle for everything else in this module.
pub fn mn_oracle(mu: &Partition, lambda: &Partition) -> Result<i64> {
    if mu.weight() != lambda.weight() {
        return Err(Error::DegreeMismatch(format!(
            "|mu| = {} but |lambda| = {}",
            mu.weight(),
            lambda.weight()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(mu.clone(), lambda.parts().to_vec(), &mut memo))
}

fn mn_rec(
    mu: Partition,
    mut remaining: Vec<u32>,
    memo: &mut HashMap<(Partition, Vec<u32>), i64>,
) -> i64 {
    if remaining.is_empty() {
        return if mu.is_empty() { 1 } else { 0 };
    }
    let key = (mu.clone(), remaining.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = remaining.remove(0) as i64;
    let maya = mu.to_maya();
    // materialize slots far enough that every move of depth r is visible;
    // targets below the window are tail slots, hence always occupied
    let depth = maya.head().len() + r as usize + 1;
    let slots: Vec<i64> = (1..=depth).map(|j| maya.entry(j)).collect();
    let mut total = 0i64;
    for (pos, &k) in slots.iter().enumerate() {
        let target = k - r;
        if maya.contains(target) {
            continue;
        }
        // slots strictly between target and k that are occupied get jumped
        let jumped = slots[pos + 1..]
            .iter()
            .filter(|&&s| s > target)
            .count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut new_slots = slots.clone();
        new_slots[pos] = target;
        new_slots.sort_unstable_by(|a, b| b.cmp(a));
        let new_maya =
            MayaIndex::from_decreasing_head(new_slots).expect("strip removal keeps validity");
        total += sign * mn_rec(new_maya.to_partition(), remaining.clone(), memo);
    }
    memo.insert(key, total);
    total
}

/// The full character table of the symmetric group on `n` letters: rows are
/// representation labels, columns class labels, both in reverse-lexicographic
/// order. Columns are filled in parallel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: u32,
    labels: Vec<Partition>,
    /// `values[row][col] = chi^{labels[row]}(labels[col])`
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn value(&self, mu: &Partition, lambda: &Partition) -> Option<i64> {
        let row = self.labels.iter().position(|p| p == mu)?;
        let col = self.labels.iter().position(|p| p == lambda)?;
        Some(self.values[row][col])
    }
}

pub fn char_table(n: u32) -> Result<CharacterTable> {
    let labels = Partition::enumerate(n);
    let columns = par::map_collect(labels.clone(), |lambda| {
        labels
            .iter()
            .map(|mu| char_value(mu, &lambda))
            .collect::<Result<Vec<i64>>>()
    });
    let mut values = vec![vec![0i64; labels.len()]; labels.len()];
    for (col, column) in columns.into_iter().enumerate() {
        for (row, v) in column?.into_iter().enumerate() {
            values[row][col] = v;
        }
    }
    Ok(CharacterTable { n, labels, values })
}

/// Generating function for the characters of one representation: the
/// `h x h` determinant with complete-exponential entries `R_{m_i + j}`,
/// where `m_i = mu_i - i`. Its monomial `prod a_j^{l_j} / l_j!` carries
/// `chi^mu(lambda(l))`.
pub fn genfunc_r(mu: &Partition, cutoff: u32) -> ZPoly {
    let h = mu.len();
    let entries: Vec<Vec<ZPoly>> = (1..=h)
        .map(|i| {
            let m_i = mu.part(i - 1) as i64 - i as i64;
            (1..=h)
                .map(|j| exp_series_poly(m_i + j as i64, cutoff))
                .collect()
        })
        .collect();
    crate::minors::det_memo(h, |i, j| entries[i][j].clone())
}

/// The same generating function from the Frobenius side: the stabilized
/// minor of the difference-quotient rows at the Maya index of `mu`. The two
/// determinants agree as truncated series.
pub fn genfunc_q(mu: &Partition, cutoff: u32) -> Result<ZPoly> {
    crate::bosonfermion::q_pairing_minor(&mu.to_maya(), cutoff)
}

/// Reads `chi^mu(lambda)` out of a generating-function polynomial:
/// the coefficient of `a^lambda` times `prod_j l_j!`.
pub fn genfunc_coefficient(series: &ZPoly, lambda: &Partition) -> Rat {
    let mut factor = Rat::one();
    for &m in lambda.to_multiplicities().as_slice() {
        if m > 1 {
            factor *= crate::scalar::factorial(m as u64);
        }
    }
    series.coeff(lambda) * factor
}
