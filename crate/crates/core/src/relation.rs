//! Finite-dimensional linear relations (subspaces of `V + W` generalizing
//! operator graphs), their set-theoretic composition by exact elimination,
//! the relation attached to a symmetric Gauss parameter block, and the
//! Lagrangian / positivity geometry checks that mirror the composition
//! semigroup.

use crate::gauss::MatrixWindow;
use crate::minors::{nullspace, rref, transpose};
use crate::scalar::{Rat, Scalar};
use crate::{Error, Result};

/// A linear relation `V => W`: a subspace of `V + W` kept in reduced row
/// echelon form, so subspace equality is structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRelation {
    dim_v: usize,
    dim_w: usize,
    rows: Vec<Vec<Scalar>>,
}

impl LinearRelation {
    /// Builds a relation from a spanning family (not necessarily
    /// independent).
    pub fn new(dim_v: usize, dim_w: usize, spanning: Vec<Vec<Scalar>>) -> Result<LinearRelation> {
        let ncols = dim_v + dim_w;
        if spanning.iter().any(|r| r.len() != ncols) {
            return Err(Error::invalid(
                "relation",
                format!("spanning vectors must have length {ncols}"),
            ));
        }
        let mut rows = spanning;
        rref(&mut rows);
        Ok(LinearRelation { dim_v, dim_w, rows })
    }

    /// The zero relation (only the zero vector).
    pub fn trivial(dim_v: usize, dim_w: usize) -> LinearRelation {
        LinearRelation {
            dim_v,
            dim_w,
            rows: Vec::new(),
        }
    }

    /// Graph of the linear map `x -> M x` from `V` to `W`, with `M` a
    /// `dim_w x dim_v` matrix.
    pub fn graph(m: &[Vec<Scalar>]) -> Result<LinearRelation> {
        let dim_w = m.len();
        let dim_v = if dim_w == 0 { 0 } else { m[0].len() };
        let mut rows = Vec::with_capacity(dim_v);
        for i in 0..dim_v {
            let mut row = vec![Scalar::zero(); dim_v + dim_w];
            row[i] = Scalar::one();
            for (k, mrow) in m.iter().enumerate() {
                row[dim_v + k] = mrow[i].clone();
            }
            rows.push(row);
        }
        LinearRelation::new(dim_v, dim_w, rows)
    }

    pub fn identity_graph(n: usize) -> LinearRelation {
        let m: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        LinearRelation::graph(&m).expect("square graph")
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_w(&self) -> usize {
        self.dim_w
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The canonical (reduced echelon) basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn contains(&self, vector: &[Scalar]) -> bool {
        assert_eq!(vector.len(), self.dim_v + self.dim_w);
        let mut rows = self.rows.clone();
        rows.push(vector.to_vec());
        let mut copy = rows;
        rref(&mut copy) == self.rows.len()
    }

    /// Intersection of subspaces of the same ambient space.
    fn intersect_rows(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let ncols = a[0].len();
        // stack rows, compute left null space; each combination gives an
        // intersection vector u^t A = -v^t B
        let stacked: Vec<Vec<Scalar>> = a.iter().chain(b.iter()).cloned().collect();
        let left_null = nullspace(&transpose(&stacked));
        let mut out = Vec::new();
        for coeffs in left_null {
            let mut z = vec![Scalar::zero(); ncols];
            for (i, c) in coeffs.iter().take(a.len()).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, zj) in z.iter_mut().enumerate() {
                    *zj = &*zj + &(c * &a[i][j]);
                }
            }
            if z.iter().any(|v| !v.is_zero()) {
                out.push(z);
            }
        }
        rref(&mut out);
        out
    }

    /// `Ker = P intersect V` and `Indef = P intersect W`, returned as bases
    /// of subspaces of `V` and `W` respectively.
    pub fn kernel_indef(&self) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
        let mut ker = Vec::new();
        let mut indef = Vec::new();
        // vectors in the relation with zero W part (resp. zero V part):
        // solve on the echelon basis
        let v_embedding: Vec<Vec<Scalar>> = (0..self.dim_v)
            .map(|i| {
                let mut row = vec![Scalar::zero(); self.dim_v + self.dim_w];
                row[i] = Scalar::one();
                row
            })
            .collect();
        for z in Self::intersect_rows(&self.rows, &v_embedding) {
            ker.push(z[..self.dim_v].to_vec());
        }
        let w_embedding: Vec<Vec<Scalar>> = (0..self.dim_w)
            .map(|i| {
                let mut row = vec![Scalar::zero(); self.dim_v + self.dim_w];
                row[self.dim_v + i] = Scalar::one();
                row
            })
            .collect();
        for z in Self::intersect_rows(&self.rows, &w_embedding) {
            indef.push(z[self.dim_v..].to_vec());
        }
        rref(&mut ker);
        rref(&mut indef);
        (ker, indef)
    }

    /// Composition `second o first`: `first: V => W` then `second: W => Y`.
    /// The result is `{ v + y : exists w, v + w in first, w + y in second }`.
    pub fn compose(second: &LinearRelation, first: &LinearRelation) -> Result<LinearRelation> {
        if first.dim_w != second.dim_v {
            return Err(Error::WindowMismatch(format!(
                "middle dimensions differ: {} vs {}",
                first.dim_w, second.dim_v
            )));
        }
        let (dv, dw, dy) = (first.dim_v, first.dim_w, second.dim_w);
        let total = dv + dw + dy;
        // first x Y, spanned by first-rows + unit vectors of Y
        let mut left: Vec<Vec<Scalar>> = first
            .rows
            .iter()
            .map(|r| {
                let mut row = r.clone();
                row.resize(total, Scalar::zero());
                row
            })
            .collect();
        for i in 0..dy {
            let mut row = vec![Scalar::zero(); total];
            row[dv + dw + i] = Scalar::one();
            left.push(row);
        }
        // V x second, spanned by unit vectors of V + second-rows shifted
        let mut right: Vec<Vec<Scalar>> = (0..dv)
            .map(|i| {
                let mut row = vec![Scalar::zero(); total];
                row[i] = Scalar::one();
                row
            })
            .collect();
        for r in &second.rows {
            let mut row = vec![Scalar::zero(); total];
            row[dv..].clone_from_slice(r);
            right.push(row);
        }
        let mid = Self::intersect_rows(&left, &right);
        // project out the middle coordinates
        let projected: Vec<Vec<Scalar>> = mid
            .into_iter()
            .map(|row| {
                let mut out = Vec::with_capacity(dv + dy);
                out.extend_from_slice(&row[..dv]);
                out.extend_from_slice(&row[dv + dw..]);
                out
            })
            .collect();
        LinearRelation::new(dv, dy, projected)
    }
}

/// The relation attached to symmetric blocks `(A, B, C)` on a window of size
/// `w`: vectors `[v+, v-, w+, w-]` (each block of length `w`) with
/// `v+ = A v- + B w+` and `w- = B^t v- + C w+`. The `V` side is `(v+, v-)`,
/// the `W` side `(w+, w-)`; the subspace has dimension `2w`.
pub fn relation_from_blocks(
    a: &MatrixWindow,
    b: &MatrixWindow,
    c: &MatrixWindow,
) -> LinearRelation {
    let w = a.size().max(b.size()).max(c.size());
    let a = a.padded(w);
    let b = b.padded(w);
    let c = c.padded(w);
    let bt = b.transpose();
    let mut rows = Vec::with_capacity(2 * w);
    // free parameters: v- = e_i, then w+ = e_i
    for i in 1..=w {
        let mut row = vec![Scalar::zero(); 4 * w];
        for k in 1..=w {
            row[k - 1] = a.get(k, i); // v+ = A v-
            row[3 * w + k - 1] = bt.get(k, i); // w- = B^t v-
        }
        row[w + i - 1] = Scalar::one(); // v-
        rows.push(row);
    }
    for i in 1..=w {
        let mut row = vec![Scalar::zero(); 4 * w];
        for k in 1..=w {
            row[k - 1] = b.get(k, i); // v+ = B w+
            row[3 * w + k - 1] = c.get(k, i); // w- = C w+
        }
        row[2 * w + i - 1] = Scalar::one(); // w+
        rows.push(row);
    }
    LinearRelation::new(2 * w, 2 * w, rows).expect("window rows have the right length")
}

/// Signature (positive, negative, zero) of a symmetric rational matrix by
/// exact congruence diagonalization.
fn signature(mut g: Vec<Vec<Rat>>) -> (usize, usize, usize) {
    use num::Signed;
    let n = g.len();
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&first) = active.first() {
        // find a nonzero diagonal among active indices
        let pivot = active
            .iter()
            .copied()
            .find(|&i| !num::Zero::is_zero(&g[i][i]));
        let p = match pivot {
            Some(p) => p,
            None => {
                // look for an off-diagonal entry; none means the block is zero
                let mut found = None;
                'outer: for &i in &active {
                    for &j in &active {
                        if i != j && !num::Zero::is_zero(&g[i][j]) {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        // e_i += e_j turns the 2x2 hyperbolic block diagonal
                        for k in 0..n {
                            let add = g[k][j].clone();
                            g[k][i] += add;
                        }
                        for k in 0..n {
                            let add = g[j][k].clone();
                            g[i][k] += add;
                        }
                        continue;
                    }
                    None => {
                        zero += active.len();
                        break;
                    }
                }
            }
        };
        let d = g[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        // clear row/column p against the remaining active indices
        let others: Vec<usize> = active.iter().copied().filter(|&i| i != p).collect();
        for &i in &others {
            if num::Zero::is_zero(&g[i][p]) {
                continue;
            }
            let factor = &g[i][p] / &d;
            for k in 0..n {
                let sub = &factor * &g[p][k];
                g[i][k] -= sub;
            }
            for k in 0..n {
                let sub = &factor * &g[k][p];
                g[k][i] -= sub;
            }
        }
        active.retain(|&i| i != p);
        let _ = first;
    }
    (pos, neg, zero)
}

/// Geometry report for a relation on the doubled window `V = W = l2 + l2`
/// restricted to `2w + 2w` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryReport {
    /// Isotropic for the skew form and of maximal dimension `2w`.
    pub lagrangian: bool,
    pub isotropic: bool,
    pub dimension: usize,
    /// Signature (pos, neg, zero) of the Hermitian form restricted to the
    /// relation.
    pub herm_signature: (usize, usize, usize),
    /// No negative directions in the restricted Hermitian form.
    pub herm_nonnegative: bool,
    pub ker_dim: usize,
    pub indef_dim: usize,
    /// The V-side form is positive definite on the kernel.
    pub ker_positive_definite: bool,
    /// The W-side form is negative definite on the indefiniteness space.
    pub indef_negative_definite: bool,
    /// Finite windows always satisfy the projector condition.
    pub projector_condition: bool,
}

fn as_plain_rows(rows: &[Vec<Scalar>]) -> Result<Vec<Vec<Rat>>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    v.as_plain().cloned().ok_or_else(|| {
                        Error::Unsupported(
                            "geometry checks require plain rational data".into(),
                        )
                    })
                })
                .collect()
        })
        .collect()
}

/// Checks the Lagrangian and positivity conditions of a relation produced by
/// [`relation_from_blocks`]; requires plain rational entries.
pub fn check_geometry(p: &LinearRelation) -> Result<GeometryReport> {
    if p.dim_v != p.dim_w || p.dim_v % 2 != 0 {
        return Err(Error::invalid(
            "relation",
            "geometry checks need ambient V = W of even dimension",
        ));
    }
    let w = p.dim_v / 2;
    let rows = as_plain_rows(&p.rows)?;
    let n = rows.len();

    // coordinates: [v+ (w), v- (w), w+ (w), w- (w)]
    let skew = |x: &[Rat], y: &[Rat]| -> Rat {
        let mut acc = Rat::from_integer(0.into());
        for j in 0..w {
            acc += &x[j] * &y[w + j] - &x[w + j] * &y[j];
            acc -= &x[2 * w + j] * &y[3 * w + j] - &x[3 * w + j] * &y[2 * w + j];
        }
        acc
    };
    let herm = |x: &[Rat], y: &[Rat]| -> Rat {
        let mut acc = Rat::from_integer(0.into());
        for j in 0..w {
            acc += &x[j] * &y[j] - &x[w + j] * &y[w + j];
            acc -= &x[2 * w + j] * &y[2 * w + j] - &x[3 * w + j] * &y[3 * w + j];
        }
        acc
    };

    let mut isotropic = true;
    'iso: for i in 0..n {
        for j in 0..n {
            if !num::Zero::is_zero(&skew(&rows[i], &rows[j])) {
                isotropic = false;
                break 'iso;
            }
        }
    }
    let lagrangian = isotropic && n == 2 * w;

    let gram: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| herm(&rows[i], &rows[j])).collect())
        .collect();
    let herm_signature = signature(gram);
    let herm_nonnegative = herm_signature.1 == 0;

    let (ker, indef) = p.kernel_indef();
    let ker = as_plain_rows(&ker)?;
    let indef = as_plain_rows(&indef)?;
    let herm_v = |x: &[Rat], y: &[Rat]| -> Rat {
        let mut acc = Rat::from_integer(0.into());
        for j in 0..w {
            acc += &x[j] * &y[j] - &x[w + j] * &y[w + j];
        }
        acc
    };
    let ker_gram: Vec<Vec<Rat>> = (0..ker.len())
        .map(|i| (0..ker.len()).map(|j| herm_v(&ker[i], &ker[j])).collect())
        .collect();
    let ker_sig = signature(ker_gram);
    let indef_gram: Vec<Vec<Rat>> = (0..indef.len())
        .map(|i| {
            (0..indef.len())
                .map(|j| herm_v(&indef[i], &indef[j]))
                .collect()
        })
        .collect();
    let indef_sig = signature(indef_gram);

    Ok(GeometryReport {
        lagrangian,
        isotropic,
        dimension: n,
        herm_signature,
        herm_nonnegative,
        ker_dim: ker.len(),
        indef_dim: indef.len(),
        ker_positive_definite: ker_sig.1 == 0 && ker_sig.2 == 0,
        indef_negative_definite: indef_sig.0 == 0 && indef_sig.2 == 0,
        projector_condition: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{compose as gauss_compose, GaussParams};
    use crate::inner::Weight;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sc(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| sc(v)).collect())
            .collect()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Scalar>> {
        (0..n)
            .map(|_| (0..n).map(|_| sc(rng.gen_range(-3..=3))).collect())
            .collect()
    }

    fn random_symmetric_window(rng: &mut ChaCha8Rng, n: usize) -> MatrixWindow {
        let mut m = MatrixWindow::zero(n);
        for i in 1..=n {
            for j in i..=n {
                let v = sc(rng.gen_range(-2..=2));
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        m
    }

    fn random_window(rng: &mut ChaCha8Rng, n: usize) -> MatrixWindow {
        MatrixWindow::from_entries(random_matrix(rng, n)).unwrap()
    }

    #[test]
    fn graph_composition_matches_matrix_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let m1 = random_matrix(&mut rng, 3);
            let m2 = random_matrix(&mut rng, 3);
            let g1 = LinearRelation::graph(&m1).unwrap();
            let g2 = LinearRelation::graph(&m2).unwrap();
            let prod = crate::minors::mat_mul(&m2, &m1);
            let expected = LinearRelation::graph(&prod).unwrap();
            // m1 first, then m2
            assert_eq!(LinearRelation::compose(&g2, &g1).unwrap(), expected);
        }
        let id = LinearRelation::identity_graph(3);
        assert_eq!(LinearRelation::compose(&id, &id).unwrap(), id);
    }

    #[test]
    fn kernel_indef_examples() {
        // invertible graph: trivial kernel and indefiniteness
        let g = LinearRelation::graph(&mat(&[&[1, 1], &[0, 1]])).unwrap();
        let (ker, indef) = g.kernel_indef();
        assert!(ker.is_empty());
        assert!(indef.is_empty());

        // full space V + W
        let mut rows = Vec::new();
        for i in 0..4 {
            let mut r = vec![Scalar::zero(); 4];
            r[i] = Scalar::one();
            rows.push(r);
        }
        let full = LinearRelation::new(2, 2, rows).unwrap();
        let (ker, indef) = full.kernel_indef();
        assert_eq!(ker.len(), 2);
        assert_eq!(indef.len(), 2);
    }

    #[test]
    fn rank_nullity_identities() {
        // dim P = dim Ker + rank(proj_W) = dim Indef + rank(proj_V)
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let dv = rng.gen_range(1..=3);
            let dw = rng.gen_range(1..=3);
            let k = rng.gen_range(0..=dv + dw);
            let rows: Vec<Vec<Scalar>> = (0..k)
                .map(|_| (0..dv + dw).map(|_| sc(rng.gen_range(-2..=2))).collect())
                .collect();
            let p = LinearRelation::new(dv, dw, rows).unwrap();
            let (ker, indef) = p.kernel_indef();
            let mut proj_w: Vec<Vec<Scalar>> =
                p.basis().iter().map(|r| r[dv..].to_vec()).collect();
            let mut proj_v: Vec<Vec<Scalar>> =
                p.basis().iter().map(|r| r[..dv].to_vec()).collect();
            let rank_w = rref(&mut proj_w);
            let rank_v = rref(&mut proj_v);
            assert_eq!(p.dim(), ker.len() + rank_w);
            assert_eq!(p.dim(), indef.len() + rank_v);
        }
    }

    #[test]
    fn relation_from_identity_blocks_is_identity_graph() {
        // S = ((0,1),(1,0)): the graph of the identity on V = W
        let w = 2;
        let rel = relation_from_blocks(
            &MatrixWindow::zero(w),
            &MatrixWindow::identity(w),
            &MatrixWindow::zero(w),
        );
        let expected = LinearRelation::identity_graph(2 * w);
        assert_eq!(rel, expected);
    }

    #[test]
    fn relation_from_zero_blocks() {
        // S = 0: constraints v+ = 0, w- = 0; free directions v-, w+
        let w = 2;
        let rel = relation_from_blocks(
            &MatrixWindow::zero(w),
            &MatrixWindow::zero(w),
            &MatrixWindow::zero(w),
        );
        assert_eq!(rel.dim(), 2 * w);
        for row in rel.basis() {
            for k in 0..w {
                assert!(row[k].is_zero(), "v+ must vanish");
                assert!(row[3 * w + k].is_zero(), "w- must vanish");
            }
        }
    }

    #[test]
    fn geometry_of_identity_relation() {
        let w = 2;
        let rel = relation_from_blocks(
            &MatrixWindow::zero(w),
            &MatrixWindow::identity(w),
            &MatrixWindow::zero(w),
        );
        let report = check_geometry(&rel).unwrap();
        assert!(report.lagrangian);
        // the Hermitian form vanishes identically on the identity graph
        assert_eq!(report.herm_signature, (0, 0, 2 * w));
        assert!(report.herm_nonnegative);
        assert_eq!(report.ker_dim, 0);
        assert_eq!(report.indef_dim, 0);
    }

    #[test]
    fn symmetric_blocks_give_lagrangian_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..15 {
            let w = rng.gen_range(1..=2);
            let rel = relation_from_blocks(
                &random_symmetric_window(&mut rng, w),
                &random_window(&mut rng, w),
                &random_symmetric_window(&mut rng, w),
            );
            let report = check_geometry(&rel).unwrap();
            assert!(report.lagrangian);
        }
        // non-symmetric A breaks the Lagrangian condition
        let mut a = MatrixWindow::zero(2);
        a.set(1, 2, sc(1));
        let rel = relation_from_blocks(&a, &MatrixWindow::identity(2), &MatrixWindow::zero(2));
        let report = check_geometry(&rel).unwrap();
        assert!(!report.lagrangian);
    }

    /// The composition dictionary: composing the relations of two parameter
    /// sets (unit weight, zero linear parts) gives the relation of the
    /// composed parameters. The first operator factor contributes the first
    /// relation leg.
    #[test]
    fn relation_composition_matches_gauss_composition() {
        let unit = |w: usize| Weight::unit(w);
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let mut checked = 0;
        while checked < 12 {
            let w = rng.gen_range(1..=2);
            let s1 = GaussParams::quadratic(
                random_symmetric_window(&mut rng, w),
                random_window(&mut rng, w),
                random_symmetric_window(&mut rng, w),
            )
            .unwrap();
            let s2 = GaussParams::quadratic(
                random_symmetric_window(&mut rng, w),
                random_window(&mut rng, w),
                random_symmetric_window(&mut rng, w),
            )
            .unwrap();
            let Ok(s3) = gauss_compose(&s1, &s2, &unit(w)) else {
                continue; // singular pencil: outside the semigroup domain
            };
            let r1 = relation_from_blocks(s1.block_a(), s1.block_b(), s1.block_c());
            let r2 = relation_from_blocks(s2.block_a(), s2.block_b(), s2.block_c());
            let r3 = relation_from_blocks(s3.block_a(), s3.block_b(), s3.block_c());
            let composed = LinearRelation::compose(&r2, &r1).unwrap();
            assert_eq!(composed, r3);
            checked += 1;
        }
    }
}
