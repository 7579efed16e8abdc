//! Bisymmetric kernels and the operators they define: a kernel `K(x, y)`,
//! stored in the power-sum tensor basis, acts on a symmetric function by
//! pairing the `y` side under a Kerov weight. Composition pairs the inner
//! variables degreewise, which is exactly the composition of the truncated
//! operators because kernels are graded.

use crate::inner::{gram_p, inner_product, Weight};
use crate::minors::mat_mul;
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::series::Series;
use crate::symfun::{degree_tables, mul_rat, Basis, SymFun};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A bidegree-truncated bisymmetric kernel in the `p (x) p` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisymKernel {
    dx: u32,
    dy: u32,
    coeffs: BTreeMap<(Partition, Partition), Scalar>,
}

impl BisymKernel {
    pub fn zero(dx: u32, dy: u32) -> BisymKernel {
        BisymKernel {
            dx,
            dy,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant kernel 1.
    pub fn constant_one(dx: u32, dy: u32) -> BisymKernel {
        let mut k = BisymKernel::zero(dx, dy);
        k.insert_add(Partition::empty(), Partition::empty(), Scalar::one());
        k
    }

    /// The rank-one kernel `f(x) g(y)`.
    pub fn rank_one(f: &SymFun, g: &SymFun) -> BisymKernel {
        let fp = f.convert(Basis::P);
        let gp = g.convert(Basis::P);
        let mut k = BisymKernel::zero(f.degree(), g.degree());
        for (lam, a) in fp.terms() {
            for (mu, b) in gp.terms() {
                k.insert_add(lam.clone(), mu.clone(), a * b);
            }
        }
        k
    }

    pub fn from_terms(
        dx: u32,
        dy: u32,
        terms: impl IntoIterator<Item = (Partition, Partition, Scalar)>,
    ) -> Result<BisymKernel> {
        let mut k = BisymKernel::zero(dx, dy);
        for (lam, mu, c) in terms {
            if lam.weight() > dx || mu.weight() > dy {
                return Err(Error::DegreeMismatch(format!(
                    "kernel term ({lam},{mu}) exceeds bidegree ({dx},{dy})"
                )));
            }
            k.insert_add(lam, mu, c);
        }
        Ok(k)
    }

    pub fn dx(&self) -> u32 {
        self.dx
    }

    pub fn dy(&self) -> u32 {
        self.dy
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lam: &Partition, mu: &Partition) -> Scalar {
        self.coeffs
            .get(&(lam.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn insert_add(&mut self, lam: Partition, mu: Partition, c: Scalar) {
        debug_assert!(lam.weight() <= self.dx && mu.weight() <= self.dy);
        if c.is_zero() {
            return;
        }
        let key = (lam, mu);
        match self.coeffs.get_mut(&key) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
            None => {
                self.coeffs.insert(key, c);
            }
        }
    }

    pub fn scale(&self, v: &Scalar) -> BisymKernel {
        if v.is_zero() {
            return BisymKernel::zero(self.dx, self.dy);
        }
        BisymKernel {
            dx: self.dx,
            dy: self.dy,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (k.clone(), c * v))
                .collect(),
        }
    }

    pub fn add(&self, other: &BisymKernel) -> BisymKernel {
        let mut out = BisymKernel::zero(self.dx.min(other.dx), self.dy.min(other.dy));
        for ((lam, mu), c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if lam.weight() <= out.dx && mu.weight() <= out.dy {
                out.insert_add(lam.clone(), mu.clone(), c.clone());
            }
        }
        out
    }

    /// Restricts to a smaller bidegree.
    pub fn truncate(&self, dx: u32, dy: u32) -> BisymKernel {
        let mut out = BisymKernel::zero(dx, dy);
        for ((lam, mu), c) in &self.coeffs {
            if lam.weight() <= dx && mu.weight() <= dy {
                out.insert_add(lam.clone(), mu.clone(), c.clone());
            }
        }
        out
    }

    /// Transposes the two variable families.
    pub fn transpose(&self) -> BisymKernel {
        BisymKernel {
            dx: self.dy,
            dy: self.dx,
            coeffs: self
                .coeffs
                .iter()
                .map(|((l, m), c)| ((m.clone(), l.clone()), c.clone()))
                .collect(),
        }
    }

    /// Applies the operator defined by this kernel:
    /// the coefficient of `p_m(x)` in the image is
    /// `sum_n gamma_{m,n} ||p_n||^2 f_n`.
    pub fn apply(&self, f: &SymFun, weight: &Weight) -> Result<SymFun> {
        if f.degree() > self.dy {
            return Err(Error::DegreeMismatch(format!(
                "function degree {} exceeds kernel y-truncation {}",
                f.degree(),
                self.dy
            )));
        }
        let fp = f.convert(Basis::P);
        let mut grams: BTreeMap<Partition, Scalar> = BTreeMap::new();
        let mut out = SymFun::zero(Basis::P, self.dx);
        for ((lam, mu), gamma) in &self.coeffs {
            let c = fp.coeff(mu);
            if c.is_zero() {
                continue;
            }
            let g: &Scalar = grams
                .entry(mu.clone())
                .or_insert_with(|| gram_p(&mu.to_multiplicities(), weight));
            out.insert_add(lam.clone(), &(gamma * &c) * g);
        }
        Ok(out.convert(f.basis()))
    }

    /// Same operator computed through the monomial expansion of the `x` side:
    /// `K = sum_lam m_lam(x) u_lam(y)` and the image is
    /// `sum_lam m_lam(x) <u_lam, f>`. Exercises basis independence.
    pub fn apply_via_monomial_expansion(&self, f: &SymFun, weight: &Weight) -> Result<SymFun> {
        if f.degree() > self.dy {
            return Err(Error::DegreeMismatch(
                "function degree exceeds kernel y-truncation".into(),
            ));
        }
        // group terms by x-degree and convert the x side to the m basis
        let mut u: BTreeMap<Partition, SymFun> = BTreeMap::new();
        for ((lam, mu), gamma) in &self.coeffs {
            let t = degree_tables(lam.weight());
            let row = t.index[lam];
            for (col, entry) in t.p_to_m[row].iter().enumerate() {
                if num::Zero::is_zero(entry) {
                    continue;
                }
                let m_part = t.parts[col].clone();
                let dy = self.dy;
                let slot = u
                    .entry(m_part)
                    .or_insert_with(|| SymFun::zero(Basis::P, dy));
                slot.insert_add(mu.clone(), mul_rat(gamma, entry));
            }
        }
        let mut out = SymFun::zero(Basis::M, self.dx);
        for (lam, u_lam) in &u {
            let v = inner_product(u_lam, f, weight);
            out.insert_add(lam.clone(), v);
        }
        Ok(out.convert(f.basis()))
    }

    /// Kernel of the composed operator: pairs this kernel's `y` side with
    /// `other`'s `x` side degreewise. Requires matching inner truncations.
    pub fn compose(&self, other: &BisymKernel, weight: &Weight) -> Result<BisymKernel> {
        if self.dy != other.dx {
            return Err(Error::DegreeMismatch(format!(
                "inner truncations differ: {} vs {}",
                self.dy, other.dx
            )));
        }
        // index other's terms by x-partition
        let mut by_x: BTreeMap<&Partition, Vec<(&Partition, &Scalar)>> = BTreeMap::new();
        for ((nu, kap), c) in &other.coeffs {
            by_x.entry(nu).or_default().push((kap, c));
        }
        let mut out = BisymKernel::zero(self.dx, other.dy);
        for ((lam, nu), a) in &self.coeffs {
            let Some(rows) = by_x.get(nu) else { continue };
            let g = gram_p(&nu.to_multiplicities(), weight);
            let ag = &(a * &g);
            for (kap, b) in rows {
                out.insert_add(lam.clone(), (*kap).clone(), ag * *b);
            }
        }
        Ok(out)
    }

    /// `<A_K p_n, p_m> = gamma_{m,n} prod_j omega_j^{m_j+n_j} m_j! n_j!`.
    pub fn matrix_element_p(
        &self,
        m: &Partition,
        n: &Partition,
        weight: &Weight,
    ) -> Scalar {
        let gamma = self.coeff(m, n);
        if gamma.is_zero() {
            return Scalar::zero();
        }
        &(&gamma * &gram_p(&m.to_multiplicities(), weight))
            * &gram_p(&n.to_multiplicities(), weight)
    }

    /// Schur-basis matrix element `beta_{lam,mu}` where
    /// `K = sum beta_{lam,mu} s_lam(x) s_mu(y)`; classical weight only.
    pub fn matrix_element_s(
        &self,
        lam: &Partition,
        mu: &Partition,
        weight: &Weight,
    ) -> Result<Scalar> {
        if !weight.is_classical() {
            return Err(Error::NonClassicalWeight);
        }
        Ok(self.s_matrix_entry(lam, mu))
    }

    /// Coefficient on `s_lam(x) s_mu(y)` (weight-independent basis change).
    pub(crate) fn s_matrix_entry(&self, lam: &Partition, mu: &Partition) -> Scalar {
        let tx = degree_tables(lam.weight());
        let ty = degree_tables(mu.weight());
        let p_to_s_x = mat_mul(&tx.p_to_m, &tx.m_to_s);
        let p_to_s_y = if lam.weight() == mu.weight() {
            p_to_s_x.clone()
        } else {
            mat_mul(&ty.p_to_m, &ty.m_to_s)
        };
        let col_x = tx.index[lam];
        let col_y = ty.index[mu];
        let mut out = Scalar::zero();
        for ((a, b), gamma) in &self.coeffs {
            if a.weight() != lam.weight() || b.weight() != mu.weight() {
                continue;
            }
            let ca = &p_to_s_x[tx.index[a]][col_x];
            let cb = &p_to_s_y[ty.index[b]][col_y];
            if num::Zero::is_zero(ca) || num::Zero::is_zero(cb) {
                continue;
            }
            out = &out + &mul_rat(&mul_rat(gamma, ca), cb);
        }
        out
    }

    /// Builds a kernel from Schur-basis coefficients.
    pub fn from_s_coefficients(
        dx: u32,
        dy: u32,
        terms: impl IntoIterator<Item = (Partition, Partition, Scalar)>,
    ) -> Result<BisymKernel> {
        let mut out = BisymKernel::zero(dx, dy);
        for (lam, mu, beta) in terms {
            if lam.weight() > dx || mu.weight() > dy {
                return Err(Error::DegreeMismatch(format!(
                    "kernel term ({lam},{mu}) exceeds bidegree ({dx},{dy})"
                )));
            }
            if beta.is_zero() {
                continue;
            }
            let tx = degree_tables(lam.weight());
            let ty = degree_tables(mu.weight());
            let s_to_p_x = mat_mul(&tx.s_to_m, &tx.m_to_p);
            let s_to_p_y = mat_mul(&ty.s_to_m, &ty.m_to_p);
            let row_x = tx.index[&lam];
            let row_y = ty.index[&mu];
            for (cx, ex) in s_to_p_x[row_x].iter().enumerate() {
                if num::Zero::is_zero(ex) {
                    continue;
                }
                for (cy, ey) in s_to_p_y[row_y].iter().enumerate() {
                    if num::Zero::is_zero(ey) {
                        continue;
                    }
                    out.insert_add(
                        tx.parts[cx].clone(),
                        ty.parts[cy].clone(),
                        mul_rat(&mul_rat(&beta, ex), ey),
                    );
                }
            }
        }
        Ok(out)
    }
}

/// The reproducing (identity) kernel to bidegree `(d, d)`: diagonal in the
/// power-sum tensor basis with coefficient `1 / ||p_n||^2`.
pub fn identity_kernel(weight: &Weight, d: u32) -> BisymKernel {
    identity_kernel_bidegree(weight, d, d)
}

/// Identity kernel with independent side truncations; terms live on the
/// diagonal up to `min(dx, dy)`.
pub fn identity_kernel_bidegree(weight: &Weight, dx: u32, dy: u32) -> BisymKernel {
    let mut out = BisymKernel::zero(dx, dy);
    for n in Partition::enumerate_up_to(dx.min(dy)) {
        let c = gram_p(&n.to_multiplicities(), weight)
            .recip()
            .expect("gram norm is nonzero");
        out.insert_add(n.clone(), n, c);
    }
    out
}

/// Reconstructs the kernel of a linear degree-bounded operator by feeding it
/// the reproducing kernel: `gamma_{m,n} = [A p_n]_m / ||p_n||^2`.
pub fn kernel_from_operator(
    mut apply_fn: impl FnMut(&SymFun) -> Result<SymFun>,
    weight: &Weight,
    d: u32,
) -> Result<BisymKernel> {
    let mut out = BisymKernel::zero(d, d);
    for n in Partition::enumerate_up_to(d) {
        let image = apply_fn(&SymFun::basis_element(Basis::P, n.clone(), d)?)?;
        let image_p = image.convert(Basis::P);
        let c = gram_p(&n.to_multiplicities(), weight)
            .recip()
            .expect("gram norm is nonzero");
        for (m, v) in image_p.terms() {
            out.insert_add(m.clone(), n.clone(), v * &c);
        }
    }
    Ok(out)
}

/// Coefficients `c_0..c_d` of the one-variable-pair expansion
/// `exp(sum_j omega_j^{-1} u^j)` of the reproducing kernel.
pub fn identity_pair_coefficients(weight: &Weight, d: u32) -> Vec<Scalar> {
    let trunc = d as usize;
    let mut arg = Series::zero(trunc);
    for j in 1..=trunc {
        arg = arg.add(&Series::monomial(trunc, j, weight.omega_inv(j)));
    }
    let e = arg.exp();
    (0..=trunc).map(|k| e.coeff(k).clone()).collect()
}

/// The same coefficients from the closed product forms:
/// classical `1/(1-u)`, Jack `(1-u)^{-1/alpha}`, Hall-Littlewood
/// `(1-tu)/(1-u)`, Macdonald `prod_k (1-t u q^k)/(1-u q^k)` via its
/// `c_d = c_{d-1} (1-t q^{d-1})/(1-q^d)` recurrence. None for custom weights.
pub fn identity_pair_closed_form(weight: &Weight, d: u32) -> Option<Vec<Scalar>> {
    let mut out = Vec::with_capacity(d as usize + 1);
    out.push(Scalar::one());
    match weight {
        Weight::Classical => {
            for _ in 1..=d {
                out.push(Scalar::one());
            }
        }
        Weight::Jack(alpha) => {
            // binomial series of (1 - u)^(-1/alpha)
            let a = Scalar::from_rat(alpha.clone()).recip().expect("alpha nonzero");
            for k in 1..=d as i64 {
                let prev = out.last().unwrap().clone();
                let num = &a + &Scalar::from_int(k - 1);
                let c = (&prev * &num)
                    .checked_div(&Scalar::from_int(k))
                    .expect("k nonzero");
                out.push(c);
            }
        }
        Weight::HallLittlewood => {
            let c = &Scalar::one() - &Scalar::t();
            for _ in 1..=d {
                out.push(c.clone());
            }
        }
        Weight::Macdonald => {
            for k in 1..=d {
                let prev = out.last().unwrap().clone();
                let num = &Scalar::one() - &(&Scalar::t() * &Scalar::q().pow(k - 1));
                let den = &Scalar::one() - &Scalar::q().pow(k);
                out.push((&prev * &num).checked_div(&den).expect("1 - q^k nonzero"));
            }
        }
        Weight::Custom(_) => return None,
    }
    Some(out)
}
