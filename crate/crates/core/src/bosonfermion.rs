//! The dictionary between symmetric functions (classical scalar product) and
//! the semi-infinite wedge space: Schur functions map to wedge monomials,
//! decomposable vectors pull back to symmetric functions, the GL action is
//! transported through kernels, multiplicative vectors have banded images,
//! and two pairing formulas invert the correspondence.
//!
//! Everything here is classical-weight only; the square-root rescaling of the
//! underlying Fock dictionary is absorbed by working with power-sum
//! coefficients directly, so all data stays rational.

use crate::inner::Weight;
use crate::kernel::BisymKernel;
use crate::minors::{det_memo, Ring};
use crate::partition::{MayaIndex, Partition};
use crate::scalar::{Rat, Scalar};
use crate::symfun::{Basis, SymFun};
use crate::wedge::{
    expand_decomposable, gl_minor, DecomposableParams, GlMatrix, WedgeVector,
};
use crate::zring::{exp_series_poly, ZPoly};
use crate::{Error, Result};
use num::{One, Zero};

/// The unitary dictionary on basis vectors: `s_lambda` goes to the wedge
/// monomial of its Maya sequence. Requires the classical weight.
pub fn to_wedge(f: &SymFun, weight: &Weight, energy: u32) -> Result<WedgeVector> {
    if !weight.is_classical() {
        return Err(Error::NonClassicalWeight);
    }
    let fs = f.convert(Basis::S);
    let mut out = WedgeVector::zero(energy);
    for (lam, c) in fs.terms() {
        if lam.weight() > energy {
            return Err(Error::DegreeMismatch(format!(
                "term {lam} exceeds the energy cutoff {energy}"
            )));
        }
        out.insert_add(lam.to_maya(), c.clone());
    }
    Ok(out)
}

/// Inverse of [`to_wedge`] on basis vectors: wedge monomials back to Schur
/// functions.
pub fn wedge_to_symfun(v: &WedgeVector, degree: u32) -> Result<SymFun> {
    let mut out = SymFun::zero(Basis::S, degree);
    for (k, c) in v.terms() {
        if k.energy() > degree {
            return Err(Error::DegreeMismatch(format!(
                "index {k} exceeds the degree cutoff {degree}"
            )));
        }
        out.insert_add(k.to_partition(), c.clone());
    }
    Ok(out)
}

/// The symmetric function whose wedge image is the decomposable vector: its
/// Schur coefficients are the same stabilized minors.
pub fn decomposable_preimage(params: &DecomposableParams, degree: u32) -> Result<SymFun> {
    let v = expand_decomposable(params, degree)?;
    wedge_to_symfun(&v, degree)
}

/// The kernel of the GL element acting on symmetric functions: Schur-basis
/// matrix elements are the stabilized minors of the window matrix.
pub fn gl_kernel(h: &GlMatrix, d: u32) -> Result<BisymKernel> {
    gl_kernel_bidegree(h, d, d)
}

/// The largest energy a single application of the window can add: occupied
/// slots move within the window, gaining at most the paired slot distances.
pub fn gl_energy_shift(h: &GlMatrix) -> u32 {
    let size = h.size() as i64;
    if size == 0 {
        return 0;
    }
    let lo = h.offset();
    let hi = h.offset() + size;
    let mut gain = 0i64;
    let mut low = lo;
    let mut high = hi - 1;
    while low < high {
        gain += high - low;
        low += 1;
        high -= 1;
    }
    gain.max(0) as u32
}

/// GL kernel with independent side truncations; composing two elements
/// exactly needs the inner truncation widened by [`gl_energy_shift`].
pub fn gl_kernel_bidegree(h: &GlMatrix, dx: u32, dy: u32) -> Result<BisymKernel> {
    let mut terms = Vec::new();
    for lam in Partition::enumerate_up_to(dx) {
        let target = lam.to_maya();
        for mu in Partition::enumerate_up_to(dy) {
            let source = mu.to_maya();
            let t = target
                .head()
                .len()
                .max(source.head().len())
                .max(h.window_cols().iter().map(|&c| (-c).max(0) as usize).max().unwrap_or(0))
                + 1;
            let d1 = gl_minor(h, &source, &target, t);
            let d2 = gl_minor(h, &source, &target, t + 1);
            if d1 != d2 {
                return Err(Error::Stabilization(format!(
                    "GL kernel minor at ({lam},{mu}) changed when the window grew"
                )));
            }
            if !d1.is_zero() {
                terms.push((lam.clone(), mu, d1));
            }
        }
    }
    BisymKernel::from_s_coefficients(dx, dy, terms)
}

/// Applies the GL element to a symmetric function through its kernel
/// (classical weight).
pub fn gl_apply(h: &GlMatrix, f: &SymFun, d: u32) -> Result<SymFun> {
    gl_kernel(h, d)?.apply(f, &Weight::Classical)
}

/// Wedge image of the multiplicative vector with series
/// `1 + r_1 x + r_2 x^2 + ...`: the banded decomposable expansion.
pub fn multiplicative_image(r: &[Scalar], energy: u32) -> Result<WedgeVector> {
    expand_decomposable(&DecomposableParams::from_series(r), energy)
}

/// Coefficients of `(r(x)/r(u) - 1)/(x - u)` as a truncated double series:
/// entry `[alpha][beta]` is the coefficient of `x^alpha u^beta`. The `x`
/// degree is bounded by `deg r - 1`; the `u` direction is truncated at
/// `cutoff`. The constant term of `r` is 1 by construction.
pub fn canonical_form_coeffs(r: &[Scalar], cutoff: usize) -> Vec<Vec<Scalar>> {
    let deg = r.len();
    // numerator (r(x) - r(u)) / (x - u) = sum_k r_k sum_{a+b=k-1} x^a u^b
    let mut num = vec![vec![Scalar::zero(); cutoff + 1]; deg.max(1)];
    for (k1, coeff) in r.iter().enumerate() {
        let k = k1 + 1;
        for a in 0..k {
            let b = k - 1 - a;
            if b <= cutoff {
                num[a][b] = &num[a][b] + coeff;
            }
        }
    }
    // inverse series of r(u) to order cutoff
    let mut inv = vec![Scalar::zero(); cutoff + 1];
    inv[0] = Scalar::one();
    for n in 1..=cutoff {
        let mut acc = Scalar::zero();
        for k in 1..=n.min(deg) {
            acc = &acc + &(&r[k - 1] * &inv[n - k]);
        }
        inv[n] = -acc;
    }
    // zeta = num * (1/r(u)), truncated in u
    let mut out = vec![vec![Scalar::zero(); cutoff + 1]; deg.max(1)];
    for (a, row) in num.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (c, w) in inv.iter().enumerate() {
                if b + c > cutoff || w.is_zero() {
                    continue;
                }
                out[a][b + c] = &out[a][b + c] + &(v * w);
            }
        }
    }
    out
}

/// The canonical-form parameters of a multiplicative vector: row `m` takes
/// the coefficient `zeta_{j, m-1}` at nonnegative column `j`. The transposed
/// placement (column exponent first) is forced by matching the banded route:
/// the row-reduction producing the canonical form divides by `r`, which puts
/// the `x`-grading of the quotient kernel on the column index.
pub fn canonical_image_params(r: &[Scalar], row_cutoff: usize) -> Result<DecomposableParams> {
    let zeta = canonical_form_coeffs(r, row_cutoff);
    let mut a = Vec::new();
    for (j, row) in zeta.iter().enumerate() {
        for (beta, c) in row.iter().enumerate() {
            if !c.is_zero() {
                a.push(((beta + 1, j as i64), c.clone()));
            }
        }
    }
    DecomposableParams::new(a, [])
}

/// Stabilized head-block determinant over the z-ring: the tail columns pair
/// off against unit diagonal entries, so the determinant reduces to the head
/// block; the reduction is asserted by also computing one size up.
fn z_minor(
    index: &MayaIndex,
    cutoff: u32,
    entry: &impl Fn(usize, i64) -> ZPoly,
) -> Result<ZPoly> {
    let t = index.head().len();
    let d1 = det_memo(t, |r, c| entry(r + 1, index.entry(c + 1)));
    let d2 = det_memo(t + 1, |r, c| entry(r + 1, index.entry(c + 1)));
    let d1 = if t == 0 { ZPoly::one(cutoff) } else { d1 };
    let d2n = d2;
    if d1.sub(&d2n).is_zero() != true {
        return Err(Error::Stabilization(format!(
            "pairing minor at {index} changed when the window grew"
        )));
    }
    Ok(d1)
}

/// Stabilized pairing minor of the exponential band at one wedge index.
pub(crate) fn r_pairing_minor(index: &MayaIndex, cutoff: u32) -> Result<ZPoly> {
    let entry = |m: usize, col: i64| -> ZPoly { exp_series_poly(col + m as i64, cutoff) };
    z_minor(index, cutoff, &entry)
}

/// Stabilized pairing minor of the difference-quotient rows at one index.
pub(crate) fn q_pairing_minor(index: &MayaIndex, cutoff: u32) -> Result<ZPoly> {
    let table = q_table(cutoff as usize + 1, cutoff as usize + 1, cutoff);
    let entry = move |m: usize, col: i64| -> ZPoly {
        if col >= 0 {
            let j = col as usize;
            let beta = m - 1;
            if j < table.len() && beta < table[j].len() {
                table[j][beta].clone()
            } else {
                ZPoly::zero(cutoff)
            }
        } else if col == -(m as i64) {
            ZPoly::one(cutoff)
        } else {
            ZPoly::zero(cutoff)
        }
    };
    z_minor(index, cutoff, &entry)
}

/// Reads the symmetric function back from its wedge image by pairing against
/// the band of complete-exponential polynomials: the pairing polynomial's
/// monomial `z^m` carries the power-sum coefficient times `prod_j j^{m_j}`.
pub fn from_wedge(g: &WedgeVector, d: u32) -> Result<SymFun> {
    let entry = |m: usize, col: i64| -> ZPoly { exp_series_poly(col + m as i64, d) };
    pairing_to_symfun(g, d, &entry)
}

/// The second inversion formula: pairing against the rows of
/// `Q`-coefficients (the two-variable exponential difference quotient). As
/// with [`canonical_image_params`], row `m` at column `j` carries the
/// coefficient with the column exponent first, `Q_{j, m-1}`.
pub fn from_wedge_q(g: &WedgeVector, d: u32) -> Result<SymFun> {
    let table = q_table(d as usize + 1, d as usize + 1, d);
    let entry = move |m: usize, col: i64| -> ZPoly {
        if col >= 0 {
            let j = col as usize;
            let beta = m - 1;
            if j < table.len() && beta < table[j].len() {
                table[j][beta].clone()
            } else {
                ZPoly::zero(d)
            }
        } else if col == -(m as i64) {
            ZPoly::one(d)
        } else {
            ZPoly::zero(d)
        }
    };
    pairing_to_symfun(g, d, &entry)
}

fn pairing_to_symfun(
    g: &WedgeVector,
    d: u32,
    entry: &impl Fn(usize, i64) -> ZPoly,
) -> Result<SymFun> {
    let mut pairing = ZPoly::zero(d);
    for (k, c) in g.terms() {
        if k.energy() > d {
            continue;
        }
        let minor = z_minor(k, d, entry)?;
        if let Some(plain) = c.as_plain() {
            let scaled: Vec<(Partition, Rat)> = minor
                .terms()
                .map(|(key, v)| (key.clone(), v * plain))
                .collect();
            for (key, v) in scaled {
                pairing.insert_add(key, v);
            }
        } else {
            return Err(Error::Unsupported(
                "wedge coefficients must be plain rationals here".into(),
            ));
        }
    }
    // z^m coefficient = (p_m coefficient) * prod_j j^{m_j}
    let mut out = SymFun::zero(Basis::P, d);
    for (key, v) in pairing.terms() {
        let mut weight_factor = <Rat as One>::one();
        for &part in key.parts() {
            weight_factor *= Rat::from_integer((part as i64).into());
        }
        out.insert_add(key.clone(), Scalar::from_rat(v / weight_factor));
    }
    Ok(out)
}

/// Coefficients `Q_{mn}(z)` of
/// `(exp(sum_j z_j (x^j - y^j)) - 1)/(x - y)`, for `m < max_m`, `n < max_n`.
/// The quotient recurrence `Q_{a-1} = N_a + y Q_a` pulls in one higher
/// `x`-level per `y`-order, so the numerator is built `max_n` levels past
/// the requested `x`-range.
pub(crate) fn q_table(max_m: usize, max_n: usize, cutoff: u32) -> Vec<Vec<ZPoly>> {
    let xd = max_m + max_n + 2;
    let yd = max_n + 1;
    // E(x, y) = sum_{a,b} R_a(z) R_b(-z) x^a y^b
    let neg_exp = |n: i64| -> ZPoly {
        // R_n(-z): negate each monomial by parity of its length
        let base = exp_series_poly(n, cutoff);
        let mut out = ZPoly::zero(cutoff);
        for (key, c) in base.terms() {
            let sign = if key.len() % 2 == 1 { -c.clone() } else { c.clone() };
            out.insert_add(key.clone(), sign);
        }
        out
    };
    let mut numerator = vec![vec![ZPoly::zero(cutoff); yd + 1]; xd + 1];
    for (a, row) in numerator.iter_mut().enumerate() {
        let ra = exp_series_poly(a as i64, cutoff);
        for (b, slot) in row.iter_mut().enumerate() {
            let rb = neg_exp(b as i64);
            *slot = ra.mul(&rb);
        }
    }
    // subtract 1
    numerator[0][0] = numerator[0][0].sub(&ZPoly::one(cutoff));
    // divide by (x - y): Q_{a-1} = N_a + y Q_a (as series in y), descending a
    let mut q = vec![vec![ZPoly::zero(cutoff); yd + 1]; xd + 1];
    for a in (1..=xd).rev() {
        for b in 0..=yd {
            // Q[a-1][b] = N[a][b] + Q[a][b-1]
            let prev = if b == 0 {
                ZPoly::zero(cutoff)
            } else {
                q[a][b - 1].clone()
            };
            q[a - 1][b] = numerator[a][b].add(&prev);
        }
    }
    (0..max_m)
        .map(|m| (0..max_n).map(|n| q[m][n].clone()).collect())
        .collect()
}
