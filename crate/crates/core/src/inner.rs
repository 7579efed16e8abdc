//! The Kerov family of scalar products on symmetric functions: a weight
//! sequence `omega(j)` makes the power sums orthogonal with
//! `||p_m||^2 = prod_j m_j! omega(j)^{m_j}`.
//!
//! Four named specializations are provided (classical, Jack, Hall-Littlewood,
//! Macdonald) plus a custom finite weight list. Conjugation acts as the
//! identity on parametric scalars: `q` and `t` are treated as real formal
//! parameters, so the pairing is symmetric.

use crate::partition::{Multiplicities, Partition};
use crate::scalar::{factorial, Rat, Scalar};
use crate::symfun::{Basis, SymFun};
use crate::{Error, Result};
use std::fmt;

/// A Kerov weight: the diagonal `omega(1), omega(2), ...` of the Gram form in
/// the power-sum basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    /// `omega(j) = j` (the classical / Redfield product).
    Classical,
    /// `omega(j) = j * alpha` for a fixed rational `alpha`.
    Jack(Rat),
    /// `omega(j) = j / (1 - t^j)` with formal `t`.
    HallLittlewood,
    /// `omega(j) = j (1 - q^j) / (1 - t^j)` with formal `q`, `t`.
    Macdonald,
    /// Explicit finite list `omega(1..=len)`; entries must be nonzero.
    Custom(Vec<Scalar>),
}

impl Weight {
    pub fn jack(alpha: Rat) -> Result<Weight> {
        if num::Zero::is_zero(&alpha) {
            return Err(Error::invalid("weight", "jack alpha must be nonzero"));
        }
        Ok(Weight::Jack(alpha))
    }

    pub fn custom(values: Vec<Scalar>) -> Result<Weight> {
        if values.iter().any(Scalar::is_zero) {
            return Err(Error::invalid(
                "weight",
                "custom weight entries must be nonzero",
            ));
        }
        Ok(Weight::Custom(values))
    }

    /// A custom weight that is identically 1; the Fock-space gauge.
    pub fn unit(len: usize) -> Weight {
        Weight::Custom(vec![Scalar::one(); len])
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, Weight::Classical)
    }

    /// `omega(j)` for `j >= 1`. Panics when a custom list is too short.
    pub fn omega(&self, j: usize) -> Scalar {
        assert!(j >= 1, "omega is indexed from 1");
        match self {
            Weight::Classical => Scalar::from_int(j as i64),
            Weight::Jack(alpha) => Scalar::from_rat(Rat::from_integer((j as i64).into()) * alpha),
            Weight::HallLittlewood => {
                let tj = Scalar::t().pow(j as u32);
                Scalar::from_int(j as i64)
                    .checked_div(&(&Scalar::one() - &tj))
                    .expect("1 - t^j is nonzero")
            }
            Weight::Macdonald => {
                let qj = Scalar::q().pow(j as u32);
                let tj = Scalar::t().pow(j as u32);
                (&Scalar::from_int(j as i64) * &(&Scalar::one() - &qj))
                    .checked_div(&(&Scalar::one() - &tj))
                    .expect("1 - t^j is nonzero")
            }
            Weight::Custom(values) => values
                .get(j - 1)
                .cloned()
                .unwrap_or_else(|| panic!("custom weight has no omega({j})")),
        }
    }

    /// `omega(j)^{-1}`.
    pub fn omega_inv(&self, j: usize) -> Scalar {
        self.omega(j).recip().expect("omega(j) is nonzero")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Classical => write!(f, "classical"),
            Weight::Jack(a) => write!(f, "jack:{a}"),
            Weight::HallLittlewood => write!(f, "hl"),
            Weight::Macdonald => write!(f, "macdonald"),
            Weight::Custom(v) => write!(f, "custom[{}]", v.len()),
        }
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;

    /// CLI syntax: `classical`, `jack:3/2`, `hl`, `macdonald`.
    fn from_str(s: &str) -> Result<Weight> {
        match s {
            "classical" => Ok(Weight::Classical),
            "hl" | "hall-littlewood" => Ok(Weight::HallLittlewood),
            "macdonald" => Ok(Weight::Macdonald),
            other => {
                if let Some(alpha) = other.strip_prefix("jack:") {
                    let value: Scalar = alpha.parse()?;
                    let rat = value.as_plain().ok_or_else(|| {
                        Error::invalid("weight", "jack alpha must be a plain rational")
                    })?;
                    Weight::jack(rat.clone())
                } else {
                    Err(Error::invalid(
                        "weight",
                        format!(
                            "unknown weight `{other}` (expected classical, jack:A, hl, macdonald)"
                        ),
                    ))
                }
            }
        }
    }
}

/// `||p_m||^2 = prod_j m_j! * omega(j)^{m_j}`.
pub fn gram_p(m: &Multiplicities, weight: &Weight) -> Scalar {
    let mut out = Scalar::one();
    for (idx, &mult) in m.as_slice().iter().enumerate() {
        if mult == 0 {
            continue;
        }
        let j = idx + 1;
        out = &out * &Scalar::from_rat(factorial(mult as u64));
        out = &out * &weight.omega(j).pow(mult);
    }
    out
}

/// The pairing of two symmetric functions, computed degreewise in the
/// power-sum basis. Conjugation is the identity on exact data.
pub fn inner_product(f: &SymFun, g: &SymFun, weight: &Weight) -> Scalar {
    let fp = f.convert(Basis::P);
    let gp = g.convert(Basis::P);
    let mut out = Scalar::zero();
    for (lam, c) in fp.terms() {
        let d = gp.coeff(lam);
        if d.is_zero() {
            continue;
        }
        out = &out + &(&(c * &d) * &gram_p(&lam.to_multiplicities(), weight));
    }
    out
}

/// Gram matrix of the degree-`d` component in the chosen basis, rows and
/// columns in reverse-lexicographic partition order.
pub fn gram_matrix(d: u32, basis: Basis, weight: &Weight) -> Vec<Vec<Scalar>> {
    let parts = Partition::enumerate(d);
    let in_p: Vec<SymFun> = parts
        .iter()
        .map(|lam| {
            SymFun::basis_element(basis, lam.clone(), d)
                .expect("weight fits degree")
                .convert(Basis::P)
        })
        .collect();
    let n = parts.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = inner_product(&in_p[i], &in_p[j], weight);
            out[i][j] = v.clone();
            out[j][i] = v;
        }
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

    fn mults(m: &[u32]) -> Multiplicities {
        Multiplicities::new(m.to_vec())
    }

    fn s_elem(parts: &[u32], degree: u32) -> SymFun {
        SymFun::basis_element(Basis::S, pt(parts), degree).unwrap()
    }

    #[test]
    fn gram_p_examples() {
        assert_eq!(gram_p(&mults(&[1]), &Weight::Classical), Scalar::one());
        assert_eq!(
            gram_p(&mults(&[0, 1]), &Weight::Classical),
            Scalar::from_int(2)
        );
        // m = (2) with jack(alpha): 2 alpha^2
        let alpha = Rat::new(3.into(), 2.into());
        let got = gram_p(&mults(&[2]), &Weight::Jack(alpha.clone()));
        let expected = Scalar::from_rat(rat_int(2) * &alpha * &alpha);
        assert_eq!(got, expected);
    }

    #[test]
    fn schur_orthonormality_classical() {
        assert_eq!(
            inner_product(&s_elem(&[2], 4), &s_elem(&[2], 4), &Weight::Classical),
            Scalar::one()
        );
        assert_eq!(
            inner_product(&s_elem(&[2], 4), &s_elem(&[1, 1], 4), &Weight::Classical),
            Scalar::zero()
        );
    }

    #[test]
    fn macdonald_p1_norm() {
        let p1 = SymFun::power_sum(1, 2).unwrap();
        let got = inner_product(&p1, &p1, &Weight::Macdonald);
        let expected: Scalar = "(1 - q)/(1 - t)".parse().unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn gram_matrices() {
        // d=1, p basis, classical: [1]
        let g1 = gram_matrix(1, Basis::P, &Weight::Classical);
        assert_eq!(g1, vec![vec![Scalar::one()]]);
        // d=2, p basis, classical: diag(2, 2) over partitions (2), (1,1)
        let g2 = gram_matrix(2, Basis::P, &Weight::Classical);
        assert_eq!(g2[0][0], Scalar::from_int(2));
        assert_eq!(g2[1][1], Scalar::from_int(2));
        assert_eq!(g2[0][1], Scalar::zero());
        // d=2, s basis, classical: identity
        let gs = gram_matrix(2, Basis::S, &Weight::Classical);
        assert_eq!(gs[0][0], Scalar::one());
        assert_eq!(gs[1][1], Scalar::one());
        assert_eq!(gs[0][1], Scalar::zero());
    }

    #[test]
    fn gram_matrix_diagonal_all_families() {
        let alpha = Rat::new(2.into(), 1.into());
        let weights = [
            Weight::Classical,
            Weight::Jack(alpha),
            Weight::HallLittlewood,
            Weight::Macdonald,
        ];
        for w in &weights {
            for d in 0..=5u32 {
                let parts = Partition::enumerate(d);
                let g = gram_matrix(d, Basis::P, w);
                for (i, li) in parts.iter().enumerate() {
                    for j in 0..parts.len() {
                        if i == j {
                            assert_eq!(g[i][j], gram_p(&li.to_multiplicities(), w));
                        } else {
                            assert!(g[i][j].is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classical_schur_identity_matrix() {
        for d in 0..=6u32 {
            let g = gram_matrix(d, Basis::S, &Weight::Classical);
            for (i, row) in g.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if i == j {
                        assert!(v.is_one());
                    } else {
                        assert!(v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("classical".parse::<Weight>().unwrap(), Weight::Classical);
        assert_eq!("hl".parse::<Weight>().unwrap(), Weight::HallLittlewood);
        assert_eq!("macdonald".parse::<Weight>().unwrap(), Weight::Macdonald);
        let j: Weight = "jack:3/2".parse().unwrap();
        assert_eq!(j, Weight::Jack(Rat::new(3.into(), 2.into())));
        assert!("jack:q".parse::<Weight>().is_err());
        assert!("banana".parse::<Weight>().is_err());
    }

    #[test]
    fn symmetry_of_pairing() {
        let f = s_elem(&[2, 1], 4).add(&s_elem(&[3], 4).scale(&Scalar::from_int(2)));
        let g = s_elem(&[1, 1, 1], 4).add(&s_elem(&[2, 1], 4).scale(&Scalar::from_frac(1, 3)));
        for w in [Weight::Classical, Weight::Macdonald] {
            assert_eq!(inner_product(&f, &g, &w), inner_product(&g, &f, &w));
        }
    }
}
