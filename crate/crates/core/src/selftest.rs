//! The acceptance suite: ten exact criteria covering characters, generating
//! functions, reproducing kernels, the composition semigroup, linear
//! relations, the wedge space, the GL representation, the boson-fermion
//! dictionary, multiplicative vectors, and window stabilization.
//!
//! Every check is an exact identity; random instances are drawn from a
//! seeded generator so runs are reproducible. `run_all` powers both the
//! `selftest` CLI subcommand and the `acceptance` integration test.

use crate::bosonfermion::{
    canonical_image_params, decomposable_preimage, from_wedge, from_wedge_q, gl_apply,
    gl_energy_shift, gl_kernel, gl_kernel_bidegree, multiplicative_image, to_wedge,
    wedge_to_symfun,
};
use crate::characters::{char_table, genfunc_coefficient, genfunc_q, genfunc_r, mn_oracle};
use crate::gauss::{
    compose as gauss_compose, gauss_kernel, omega_window, GaussParams, MatrixWindow,
};
use crate::inner::{inner_product, Weight};
use crate::kernel::{identity_kernel, identity_pair_closed_form, identity_pair_coefficients};
use crate::minors::{det_memo, mat_mul};
use crate::partition::Partition;
use crate::relation::{relation_from_blocks, LinearRelation};
use crate::scalar::{Rat, Scalar};
use crate::symfun::{schur_from_bialternant, Basis, FinitePoly, SymFun};
use crate::wedge::{
    expand_decomposable, gl_action, premultiply, skew_expansion, DecomposableParams, GlMatrix,
    WedgeVector,
};
use crate::{par, Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5f0c;
pub const CRITERIA: usize = 10;

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

pub fn criterion_name(id: usize) -> &'static str {
    match id {
        1 => "characters match the border-strip oracle",
        2 => "generating-function determinants match the table",
        3 => "reproducing kernels fix every basis vector",
        4 => "composition semigroup of Gauss kernels",
        5 => "linear-relation composition matches parameters",
        6 => "wedge inner-product determinant",
        7 => "GL representation and intertwining",
        8 => "boson-fermion dictionary and inversions",
        9 => "multiplicative-vector routes coincide",
        10 => "window stabilization of limit definitions",
        _ => "unknown",
    }
}

pub fn run_criterion(id: usize, seed: u64) -> CriterionReport {
    let result = match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(seed),
        5 => criterion_5(seed),
        6 => criterion_6(seed),
        7 => criterion_7(seed),
        8 => criterion_8(seed),
        9 => criterion_9(seed),
        10 => criterion_10(seed),
        other => Err(Error::invalid("criterion", format!("no criterion {other}"))),
    };
    match result {
        Ok(details) => CriterionReport {
            id,
            name: criterion_name(id),
            passed: true,
            details,
        },
        Err(e) => CriterionReport {
            id,
            name: criterion_name(id),
            passed: false,
            details: e.to_string(),
        },
    }
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    (1..=CRITERIA).map(|id| run_criterion(id, seed)).collect()
}

fn check(cond: bool, message: impl Fn() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid("acceptance", message()))
    }
}

/// 1. Character values `<p_lambda, s_mu>` equal the border-strip recursion
/// for every pair of weight at most 8.
fn criterion_1() -> Result<String> {
    let mut pairs = 0usize;
    for n in 0..=8u32 {
        let table = char_table(n)?;
        let parts = Partition::enumerate(n);
        let columns: Vec<Result<usize>> = par::map_collect(parts.clone(), |lam| {
            let mut count = 0;
            for mu in &parts {
                let direct = table.value(mu, &lam).expect("labels cover the table");
                let oracle = mn_oracle(mu, &lam)?;
                check(direct == oracle, || {
                    format!("character mismatch at mu={mu}, lambda={lam}: {direct} vs {oracle}")
                })?;
                count += 1;
            }
            Ok(count)
        });
        for c in columns {
            pairs += c?;
        }
    }
    Ok(format!("{pairs} pairs up to weight 8"))
}

/// 2. Both determinant generating functions reproduce the character table
/// for every representation of weight at most 6.
fn criterion_2() -> Result<String> {
    let mut checked = 0usize;
    for n in 1..=6u32 {
        let mus = Partition::enumerate(n);
        let results: Vec<Result<usize>> = par::map_collect(mus, |mu| {
            let r = genfunc_r(&mu, n);
            let q = genfunc_q(&mu, n)?;
            check(r == q, || format!("determinant forms differ at {mu}"))?;
            let mut count = 0;
            for lam in Partition::enumerate(n) {
                let coeff = genfunc_coefficient(&r, &lam);
                let chi = Rat::from_integer(mn_oracle(&mu, &lam)?.into());
                check(coeff == chi, || {
                    format!("generating function wrong at mu={mu}, lambda={lam}")
                })?;
                count += 1;
            }
            Ok(count)
        });
        for c in results {
            checked += c?;
        }
    }
    Ok(format!("{checked} coefficients, both forms, weight <= 6"))
}

fn named_weights() -> Vec<Weight> {
    vec![
        Weight::Classical,
        Weight::Jack(Rat::new(2.into(), 1.into())),
        Weight::HallLittlewood,
        Weight::Macdonald,
    ]
}

/// 3. The reproducing kernel fixes every basis vector of degree at most 6 in
/// all three bases, for all four named weights, and the closed product forms
/// agree with the exponential expansion.
fn criterion_3() -> Result<String> {
    let d = 6u32;
    let mut applications = 0usize;
    for w in named_weights() {
        let kernel = identity_kernel(&w, d);
        for basis in [Basis::P, Basis::M, Basis::S] {
            for lam in Partition::enumerate_up_to(d) {
                let b = SymFun::basis_element(basis, lam.clone(), d)?;
                let image = kernel.apply(&b, &w)?;
                check(image == b, || {
                    format!("identity kernel moved {basis}-element {lam} under {w}")
                })?;
                applications += 1;
            }
        }
        let exp_form = identity_pair_coefficients(&w, 8);
        let closed = identity_pair_closed_form(&w, 8).expect("named weight");
        check(exp_form == closed, || {
            format!("closed product form disagrees with the exponential form for {w}")
        })?;
    }
    Ok(format!(
        "{applications} basis vectors fixed, 4 closed forms matched"
    ))
}

/// Random small rational.
fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_frac(rng.gen_range(-2..=2), rng.gen_range(1..=2))
}

fn random_symmetric(rng: &mut ChaCha8Rng, w: usize, density: f64) -> MatrixWindow {
    let mut m = MatrixWindow::zero(w);
    for i in 1..=w {
        for j in i..=w {
            if rng.gen_bool(density) {
                let v = small_scalar(rng);
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
    }
    m
}

fn random_window(rng: &mut ChaCha8Rng, w: usize, density: f64) -> MatrixWindow {
    let mut m = MatrixWindow::zero(w);
    for i in 1..=w {
        for j in 1..=w {
            if rng.gen_bool(density) {
                m.set(i, j, small_scalar(rng));
            }
        }
    }
    m
}

/// 4. The composition semigroup: kernel-level equality (with norms) on
/// terminating families, the determinant factor against an independent
/// cofactor determinant on fully random pairs, and associativity of blocks
/// and norms on random triples.
fn criterion_4(seed: u64) -> Result<String> {
    let d = 6u32;
    let weights = named_weights();

    // kernel-level samples: the three terminating families
    let mut kernel_instances = Vec::new();
    {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x41);
        for i in 0..54usize {
            let weight = weights[i % 4].clone();
            let parametric = matches!(weight, Weight::HallLittlewood | Weight::Macdonald);
            let w = if parametric {
                rng.gen_range(1..=2)
            } else {
                rng.gen_range(1..=3)
            };
            let density = if parametric { 0.4 } else { 0.6 };
            let class = i % 3;
            let (s1, s2) = match class {
                0 => {
                    // C1 = 0: the first factor has no pure-y quadratic part
                    let s1 = GaussParams::quadratic(
                        random_symmetric(&mut rng, w, density),
                        random_window(&mut rng, w, density),
                        MatrixWindow::zero(w),
                    )?;
                    let s2 = GaussParams::quadratic(
                        random_symmetric(&mut rng, w, density),
                        random_window(&mut rng, w, density),
                        random_symmetric(&mut rng, w, density),
                    )?;
                    (s1, s2)
                }
                1 => {
                    // U2 = 0: the second factor has no pure-x quadratic part
                    let s1 = GaussParams::quadratic(
                        random_symmetric(&mut rng, w, density),
                        random_window(&mut rng, w, density),
                        random_symmetric(&mut rng, w, density),
                    )?;
                    let s2 = GaussParams::quadratic(
                        MatrixWindow::zero(w),
                        random_window(&mut rng, w, density),
                        random_symmetric(&mut rng, w, density),
                    )?;
                    (s1, s2)
                }
                _ => {
                    // staircase supports: C1 omega U2 is nilpotent but nonzero
                    let mut c1 = MatrixWindow::zero(2);
                    let v = small_scalar(&mut rng);
                    c1.set(1, 2, v.clone());
                    c1.set(2, 1, v);
                    let mut u2 = MatrixWindow::zero(2);
                    u2.set(1, 1, small_scalar(&mut rng));
                    let s1 = GaussParams::quadratic(
                        random_symmetric(&mut rng, 2, density),
                        random_window(&mut rng, 2, density),
                        c1,
                    )?;
                    let s2 = GaussParams::quadratic(
                        u2,
                        random_window(&mut rng, 2, density),
                        random_symmetric(&mut rng, 2, density),
                    )?;
                    (s1, s2)
                }
            };
            kernel_instances.push((weight, s1, s2, class));
        }
    }
    let kernel_results: Vec<Result<()>> =
        par::map_collect(kernel_instances, |(weight, s1, s2, class)| {
            let s3 = gauss_compose(&s1, &s2, &weight)?;
            // independent determinant of 1 - C Omega U Omega by memoized Laplace
            let w = s1.window().max(s2.window());
            let s1p = s1.padded(w);
            let s2p = s2.padded(w);
            let omega = omega_window(&weight, w);
            let x = mat_mul(
                &mat_mul(&mat_mul(s1p.block_c().rows(), omega.rows()), s2p.block_a().rows()),
                omega.rows(),
            );
            let one_minus: Vec<Vec<Scalar>> = (0..w)
                .map(|i| {
                    (0..w)
                        .map(|j| {
                            let id = if i == j { Scalar::one() } else { Scalar::zero() };
                            &id - &x[i][j]
                        })
                        .collect()
                })
                .collect();
            let det = det_memo(w, |i, j| one_minus[i][j].clone());
            check(!det.is_zero(), || "degenerate pencil in sample".into())?;
            check(
                s3.norm().det_square() == &det.recip().expect("nonzero"),
                || "norm det-square differs from the independent determinant".into(),
            )?;
            check(s3.norm().det_square().is_one(), || {
                format!("terminating class {class} should have unit determinant")
            })?;

            // inner truncation wide enough to terminate, asserted by growing it
            let max_index = w as u32;
            let inner = d * max_index + if class == 2 { 8 } else { 2 };
            let lhs = gauss_kernel(&s1, d, inner)
                .compose(&gauss_kernel(&s2, inner, d), &weight)?;
            let lhs_grown = gauss_kernel(&s1, d, inner + 1)
                .compose(&gauss_kernel(&s2, inner + 1, d), &weight)?;
            check(lhs == lhs_grown, || {
                "inner truncation had not stabilized".into()
            })?;
            let rhs = gauss_kernel(&s3, d, d);
            check(lhs == rhs, || {
                format!("kernel semigroup identity failed (class {class}, weight {weight})")
            })?;
            Ok(())
        });
    let kernel_count = kernel_results.len();
    for r in kernel_results {
        r?;
    }

    // fully random pairs: determinant factor against the independent route
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x42);
    let mut generic_pairs = 0usize;
    while generic_pairs < 50 {
        let weight = weights[generic_pairs % 4].clone();
        let w = rng.gen_range(1..=2);
        let s1 = GaussParams::quadratic(
            random_symmetric(&mut rng, w, 0.7),
            random_window(&mut rng, w, 0.7),
            random_symmetric(&mut rng, w, 0.7),
        )?;
        let s2 = GaussParams::quadratic(
            random_symmetric(&mut rng, w, 0.7),
            random_window(&mut rng, w, 0.7),
            random_symmetric(&mut rng, w, 0.7),
        )?;
        let Ok(s3) = gauss_compose(&s1, &s2, &weight) else {
            continue;
        };
        let omega = omega_window(&weight, w);
        let x = mat_mul(
            &mat_mul(&mat_mul(s1.block_c().rows(), omega.rows()), s2.block_a().rows()),
            omega.rows(),
        );
        let one_minus: Vec<Vec<Scalar>> = (0..w)
            .map(|i| {
                (0..w)
                    .map(|j| {
                        let id = if i == j { Scalar::one() } else { Scalar::zero() };
                        &id - &x[i][j]
                    })
                    .collect()
            })
            .collect();
        let det = det_memo(w, |i, j| one_minus[i][j].clone());
        let product = &det * s3.norm().det_square();
        check(product.is_one(), || {
            "det-square times the independent determinant is not 1".into()
        })?;
        generic_pairs += 1;
    }

    // associativity on random triples, blocks and norms
    let mut triples = 0usize;
    while triples < 20 {
        let weight = weights[triples % 4].clone();
        let w = rng.gen_range(1..=2);
        let mk = |rng: &mut ChaCha8Rng| -> Result<GaussParams> {
            GaussParams::quadratic(
                random_symmetric(rng, w, 0.6),
                random_window(rng, w, 0.6),
                random_symmetric(rng, w, 0.6),
            )
        };
        let s1 = mk(&mut rng)?;
        let s2 = mk(&mut rng)?;
        let s3 = mk(&mut rng)?;
        let left = match gauss_compose(&s1, &s2, &weight)
            .and_then(|s12| gauss_compose(&s12, &s3, &weight))
        {
            Ok(v) => v,
            Err(_) => continue,
        };
        let right = match gauss_compose(&s2, &s3, &weight)
            .and_then(|s23| gauss_compose(&s1, &s23, &weight))
        {
            Ok(v) => v,
            Err(_) => continue,
        };
        check(left.same_blocks(&right), || {
            "associativity of the composed blocks failed".into()
        })?;
        check(left.norm() == right.norm(), || {
            "associativity of the norm cocycle failed".into()
        })?;
        triples += 1;
    }

    Ok(format!(
        "{kernel_count} kernel-level pairs, {generic_pairs} determinant checks, {triples} associativity triples"
    ))
}

/// 5. Composing the relations of two parameter sets equals the relation of
/// the composed parameters (unit weight), as exact subspace equality.
fn criterion_5(seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51);
    let mut pairs = 0usize;
    while pairs < 50 {
        let w = rng.gen_range(1..=3);
        let unit = Weight::unit(w);
        let s1 = GaussParams::quadratic(
            random_symmetric(&mut rng, w, 0.7),
            random_window(&mut rng, w, 0.7),
            random_symmetric(&mut rng, w, 0.7),
        )?;
        let s2 = GaussParams::quadratic(
            random_symmetric(&mut rng, w, 0.7),
            random_window(&mut rng, w, 0.7),
            random_symmetric(&mut rng, w, 0.7),
        )?;
        let Ok(s3) = gauss_compose(&s1, &s2, &unit) else {
            continue;
        };
        let r1 = relation_from_blocks(s1.block_a(), s1.block_b(), s1.block_c());
        let r2 = relation_from_blocks(s2.block_a(), s2.block_b(), s2.block_c());
        let r3 = relation_from_blocks(s3.block_a(), s3.block_b(), s3.block_c());
        let composed = LinearRelation::compose(&r2, &r1)?;
        check(composed == r3, || {
            "relation composition differs from the composed parameters".into()
        })?;
        pairs += 1;
    }
    Ok(format!("{pairs} subspace equalities, windows <= 3"))
}

fn random_params(rng: &mut ChaCha8Rng, rows: usize, cols: i64) -> DecomposableParams {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for m in 1..=rows {
        for i in 0..=cols {
            if rng.gen_bool(0.4) {
                a.push(((m, i), small_scalar(rng)));
            }
        }
        for j in -cols..0 {
            if j != -(m as i64) && rng.gen_bool(0.3) {
                b.push(((m, j), small_scalar(rng)));
            }
        }
    }
    DecomposableParams::new(a, b).expect("entries are placed validly")
}

/// 6. The inner-product determinant of two decomposable vectors equals the
/// coefficient pairing of their expansions; left multiplication by `1 + D`
/// scales expansions by `det(1 + D)`.
fn criterion_6(seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x61);
    let instances: Vec<(DecomposableParams, DecomposableParams, Vec<Vec<Scalar>>)> = (0..30)
        .map(|_| {
            let p1 = random_params(&mut rng, 2, 2);
            let p2 = random_params(&mut rng, 2, 2);
            let dmat: Vec<Vec<Scalar>> = (0..2)
                .map(|_| (0..2).map(|_| small_scalar(&mut rng)).collect())
                .collect();
            (p1, p2, dmat)
        })
        .collect();
    let results: Vec<Result<()>> = par::map_collect(instances, |(p1, p2, dmat)| {
        // every contributing index has energy comfortably below 12 for
        // rows <= 2 and columns <= 2
        let v1 = expand_decomposable(&p1, 12)?;
        let v2 = expand_decomposable(&p2, 12)?;
        let direct = crate::wedge::wedge_inner(&p1, &p2)?;
        check(direct == v1.pair(&v2), || {
            "determinant and coefficient pairing differ".into()
        })?;
        // scaling law
        let scaled = premultiply(&p1, &dmat)?;
        let det = {
            let m: Vec<Vec<Scalar>> = (0..2)
                .map(|i| {
                    (0..2)
                        .map(|j| {
                            let id = if i == j { Scalar::one() } else { Scalar::zero() };
                            &id + &dmat[i][j]
                        })
                        .collect()
                })
                .collect();
            crate::minors::det_gauss(&m)
        };
        check(expand_decomposable(&scaled, 8)? == expand_decomposable(&p1, 8)?.scale(&det), || {
            "premultiplication scaling law failed".into()
        })?;
        Ok(())
    });
    let n = results.len();
    for r in results {
        r?;
    }
    Ok(format!("{n} decomposable pairs with scaling law"))
}

fn random_gl(rng: &mut ChaCha8Rng, offset: i64, size: usize) -> GlMatrix {
    loop {
        let entries: Vec<Vec<Scalar>> = (0..size)
            .map(|_| {
                (0..size)
                    .map(|_| Scalar::from_int(rng.gen_range(-2..=2)))
                    .collect()
            })
            .collect();
        if let Ok(g) = GlMatrix::new(offset, entries) {
            return g;
        }
    }
}

/// 7. The GL representation: the group law on the wedge side and the
/// symmetric side, and the intertwining through the dictionary.
fn criterion_7(seed: u64) -> Result<String> {
    let e = 5u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x71);
    let pairs: Vec<(GlMatrix, GlMatrix)> = (0..20)
        .map(|_| (random_gl(&mut rng, -2, 4), random_gl(&mut rng, -2, 4)))
        .collect();
    let results: Vec<Result<()>> = par::map_collect(pairs, |(h1, h2)| {
        let product = h1.mul(&h2);
        let mid = e + gl_energy_shift(&h2);
        // wedge side
        for lam in Partition::enumerate_up_to(e) {
            let v = WedgeVector::from_terms(e, [(lam.to_maya(), Scalar::one())])?;
            let step = gl_action(&h2, &v, mid)?;
            let lhs = gl_action(&h1, &step, e)?;
            let rhs = gl_action(&product, &v, e)?;
            check(lhs == rhs, || format!("wedge group law failed at {lam}"))?;
        }
        // symmetric side through kernels
        let kh = gl_kernel_bidegree(&h1, e, mid)?;
        let kg = gl_kernel_bidegree(&h2, mid, e)?;
        let composed = kh.compose(&kg, &Weight::Classical)?;
        check(composed == gl_kernel(&product, e)?, || {
            "kernel group law failed".into()
        })?;
        // intertwining through the dictionary
        for lam in Partition::enumerate_up_to(e) {
            let f = SymFun::basis_element(Basis::S, lam.clone(), e)?;
            let lhs = to_wedge(&gl_apply(&h1, &f, e)?, &Weight::Classical, e)?;
            let rhs = gl_action(&h1, &to_wedge(&f, &Weight::Classical, e)?, e)?;
            check(lhs == rhs, || format!("intertwining failed at {lam}"))?;
        }
        Ok(())
    });
    let n = results.len();
    for r in results {
        r?;
    }
    Ok(format!("{n} window pairs, energy <= {e}"))
}

/// 8. The dictionary preserves inner products; the preimage of a
/// decomposable vector maps back onto its expansion; both inversion formulas
/// agree and invert the forward map.
fn criterion_8(seed: u64) -> Result<String> {
    let w = Weight::Classical;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x81);

    // inner products on degree <= 6
    for _ in 0..20 {
        let mut f = SymFun::zero(Basis::S, 6);
        let mut g = SymFun::zero(Basis::S, 6);
        for lam in Partition::enumerate_up_to(6) {
            if rng.gen_bool(0.3) {
                f.insert_add(lam.clone(), small_scalar(&mut rng));
            }
            if rng.gen_bool(0.3) {
                g.insert_add(lam, small_scalar(&mut rng));
            }
        }
        let fw = to_wedge(&f, &w, 6)?;
        let gw = to_wedge(&g, &w, 6)?;
        check(inner_product(&f, &g, &w) == fw.pair(&gw), || {
            "pairing not preserved".into()
        })?;
    }

    // preimages of decomposable vectors, coefficientwise
    for _ in 0..20 {
        let params = random_params(&mut rng, 3, 3);
        let pre = decomposable_preimage(&params, 6)?;
        let lhs = to_wedge(&pre, &w, 6)?;
        let rhs = expand_decomposable(&params, 6)?;
        check(lhs == rhs, || "preimage does not map onto the expansion".into())?;
    }

    // inversion formulas on random degree <= 5 inputs
    for _ in 0..20 {
        let mut f = SymFun::zero(Basis::P, 5);
        for lam in Partition::enumerate_up_to(5) {
            if rng.gen_bool(0.4) {
                f.insert_add(lam, small_scalar(&mut rng));
            }
        }
        let g = to_wedge(&f, &w, 5)?;
        let back = from_wedge(&g, 5)?;
        check(back == f, || "first inversion formula failed to round-trip".into())?;
        let back_q = from_wedge_q(&g, 5)?;
        check(back_q == back, || "the two inversion formulas disagree".into())?;
    }

    Ok("20 pairings, 20 preimages, 20 double inversions".into())
}

/// 9. The banded route and the canonical-form route produce the same wedge
/// vector for series of degree at most 3.
fn criterion_9(seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x91);
    let e = 6u32;
    let mut samples = 0usize;
    while samples < 10 {
        let deg = rng.gen_range(1..=3);
        let r: Vec<Scalar> = (0..deg).map(|_| small_scalar(&mut rng)).collect();
        if r.iter().all(Scalar::is_zero) {
            continue;
        }
        let band = multiplicative_image(&r, e)?;
        let canon = expand_decomposable(&canonical_image_params(&r, e as usize + 2)?, e)?;
        check(band == canon, || {
            "banded and canonical-form routes disagree".into()
        })?;
        samples += 1;
    }
    Ok(format!("{samples} series, energy <= {e}"))
}

/// 10. Every stabilized-window definition reports identical coefficients at
/// consecutive truncation orders: the long-monomial skew expansion, the
/// restriction formula for preimages, and the two-sided alternant quotient
/// of a GL kernel.
fn criterion_10(seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa1);

    // skew expansions stabilize, and agree with the minor route
    for _ in 0..5 {
        let params = random_params(&mut rng, 2, 2);
        let s4 = skew_expansion(&params, 4)?;
        let s5 = skew_expansion(&params, 5)?;
        let direct = expand_decomposable(&params, 8)?;
        for (idx, c) in &s5 {
            if idx.head().len() <= 4 {
                if let Some(c4) = s4.get(idx) {
                    check(c4 == c, || format!("skew series moved at {idx}"))?;
                }
                if idx.energy() <= 8 {
                    check(&direct.coeff(idx) == c, || {
                        format!("skew series disagrees with the minors at {idx}")
                    })?;
                }
            }
        }
    }

    // restriction formula for preimages at consecutive variable counts
    for _ in 0..5 {
        let params = random_params(&mut rng, 2, 2);
        let pre = decomposable_preimage(&params, 5)?;
        for n in 3..=4usize {
            let direct = restriction_formula(&params, n);
            let expected = pre.evaluate_finite(n);
            for (e, c) in direct.terms() {
                let deg: u32 = e.iter().sum();
                if deg <= 5 {
                    check(&expected.coeff(e) == c, || {
                        format!("restriction formula differs at {n} variables")
                    })?;
                }
            }
            for (e, c) in expected.terms() {
                let deg: u32 = e.iter().sum();
                if deg <= 5 {
                    check(&direct.coeff(e) == c, || {
                        format!("restriction formula misses terms at {n} variables")
                    })?;
                }
            }
        }
    }

    // the two-variable alternant quotient of a GL kernel at N and N + 1
    // (the window reaches index -1, so any N >= 2 is past it)
    for _ in 0..3 {
        let h = random_gl(&mut rng, -1, 2);
        let d = 3u32;
        let kernel = gl_kernel(&h, d)?;
        for n in 2..=3usize {
            let quotient = gl_restriction(&h, n, d);
            let mut expected = FinitePoly::zero(2 * n);
            for lam in Partition::enumerate_up_to(d) {
                if lam.len() > n {
                    continue;
                }
                let sx = schur_from_bialternant(&lam, n)?;
                for mu in Partition::enumerate_up_to(d) {
                    if mu.len() > n {
                        continue;
                    }
                    let beta = kernel.matrix_element_s(&lam, &mu, &Weight::Classical)?;
                    if beta.is_zero() {
                        continue;
                    }
                    let sy = schur_from_bialternant(&mu, n)?;
                    for (ex, cx) in sx.terms() {
                        for (ey, cy) in sy.terms() {
                            let mut key = ex.clone();
                            key.extend_from_slice(ey);
                            expected.insert_add(key, &(&beta * cx) * cy);
                        }
                    }
                }
            }
            // compare on monomials within the bidegree
            for (e, c) in quotient.terms() {
                let dx: u32 = e[..n].iter().sum();
                let dy: u32 = e[n..].iter().sum();
                if dx <= d && dy <= d {
                    check(&expected.coeff(e) == c, || {
                        format!("alternant quotient differs at {n} variables")
                    })?;
                }
            }
            for (e, c) in expected.terms() {
                let dx: u32 = e[..n].iter().sum();
                let dy: u32 = e[n..].iter().sum();
                if dx <= d && dy <= d {
                    check(&quotient.coeff(e) == c, || {
                        format!("alternant quotient misses terms at {n} variables")
                    })?;
                }
            }
        }
    }

    Ok("skew series, restriction formula, alternant quotient stable".into())
}

/// Test-side restriction formula: `prod_p x_p^n det{row series} / Vandermonde`.
fn restriction_formula(params: &DecomposableParams, n: usize) -> FinitePoly {
    let rows: Vec<Vec<(u32, Scalar)>> = (1..=n)
        .map(|m| {
            let mut cols = Vec::new();
            for col in -(n as i64)..=(n as i64 + 2) {
                let v = params.entry(m, col);
                if !v.is_zero() {
                    let shifted = col + n as i64;
                    if shifted >= 0 {
                        cols.push((shifted as u32, v));
                    }
                }
            }
            cols
        })
        .collect();
    let det = alternating_det(&rows, n);
    let mut out = det;
    for k in 0..n {
        for l in k + 1..n {
            out = out.exact_div_diff(k, l).expect("restriction divisible");
        }
    }
    out
}

/// The `n x n` alternant quotient defining a GL kernel on two variable
/// families, truncated entrywise to the degrees that can reach the compared
/// bidegree.
fn gl_restriction(h: &GlMatrix, n: usize, d: u32) -> FinitePoly {
    let shift = n as i64;
    // the quotient's per-side degree is the numerator's minus the
    // Vandermonde's, so shifted exponents beyond this cap cannot reach the
    // compared bidegree
    let degree_cap = d + (n * (n - 1) / 2) as u32;
    let imax = degree_cap as i64 - shift;
    // entry(k, l) is a polynomial in (x_k, y_l): sum over h_{ij} with the
    // exponents shifted by +n
    let mut support: Vec<(u32, u32, Scalar)> = Vec::new();
    for i in -shift..=imax {
        for j in -shift..=imax {
            let v = h.get(i, j);
            if !v.is_zero() {
                support.push(((i + shift) as u32, (j + shift) as u32, v));
            }
        }
    }
    // determinant over permutations, assigning entry (k, sigma(k)); partial
    // products are pruned once either side exceeds the cap
    let nv = 2 * n;
    let mut out = FinitePoly::zero(nv);
    let mut used = vec![false; n];
    let mut assign = Vec::with_capacity(n);
    #[allow(clippy::too_many_arguments)]
    fn choose(
        n: usize,
        cap: u32,
        support: &[(u32, u32, Scalar)],
        k: usize,
        assign: &[usize],
        expts: &mut Vec<u32>,
        xsum: u32,
        ysum: u32,
        coeff: &Scalar,
        negate: bool,
        out: &mut FinitePoly,
    ) {
        if k == n {
            let v = if negate { -coeff } else { coeff.clone() };
            out.insert_add(expts.clone(), v);
            return;
        }
        for (i, j, c) in support {
            if xsum + i > cap || ysum + j > cap {
                continue;
            }
            expts[k] += i;
            expts[n + assign[k]] += j;
            let next = coeff * c;
            choose(
                n,
                cap,
                support,
                k + 1,
                assign,
                expts,
                xsum + i,
                ysum + j,
                &next,
                negate,
                out,
            );
            expts[k] -= i;
            expts[n + assign[k]] -= j;
        }
    }
    fn rec(
        n: usize,
        cap: u32,
        support: &[(u32, u32, Scalar)],
        used: &mut Vec<bool>,
        assign: &mut Vec<usize>,
        parity: bool,
        out: &mut FinitePoly,
    ) {
        if assign.len() == n {
            let mut expts = vec![0u32; 2 * n];
            choose(
                n,
                cap,
                support,
                0,
                assign,
                &mut expts,
                0,
                0,
                &Scalar::one(),
                parity,
                out,
            );
            return;
        }
        for l in 0..n {
            if !used[l] {
                used[l] = true;
                let inversions = (l + 1..n).filter(|&i| used[i]).count();
                assign.push(l);
                rec(n, cap, support, used, assign, parity ^ (inversions % 2 == 1), out);
                assign.pop();
                used[l] = false;
            }
        }
    }
    rec(n, degree_cap, &support, &mut used, &mut assign, false, &mut out);
    // divide by both Vandermonde products
    let mut quotient = out;
    for k in 0..n {
        for l in k + 1..n {
            quotient = quotient.exact_div_diff(k, l).expect("x Vandermonde divides");
        }
    }
    for k in 0..n {
        for l in k + 1..n {
            quotient = quotient
                .exact_div_diff(n + k, n + l)
                .expect("y Vandermonde divides");
        }
    }
    quotient
}

/// Expansion of a determinant whose `(m, p)` entry is a one-variable
/// polynomial in `x_p` taken from `rows[m]`.
fn alternating_det(rows: &[Vec<(u32, Scalar)>], n: usize) -> FinitePoly {
    let mut out = FinitePoly::zero(n);
    let mut used = vec![false; n];
    let mut assign = Vec::with_capacity(n);
    fn rec(
        rows: &[Vec<(u32, Scalar)>],
        n: usize,
        used: &mut Vec<bool>,
        assign: &mut Vec<usize>,
        parity: bool,
        out: &mut FinitePoly,
    ) {
        if assign.len() == n {
            fn choose(
                p: usize,
                n: usize,
                rows: &[Vec<(u32, Scalar)>],
                assign: &[usize],
                expts: &mut Vec<u32>,
                coeff: &Scalar,
                negate: bool,
                out: &mut FinitePoly,
            ) {
                if p == n {
                    let v = if negate { -coeff } else { coeff.clone() };
                    out.insert_add(expts.clone(), v);
                    return;
                }
                for (e, c) in &rows[assign[p]] {
                    expts[p] = *e;
                    let next = coeff * c;
                    choose(p + 1, n, rows, assign, expts, &next, negate, out);
                }
            }
            let mut expts = vec![0u32; n];
            choose(0, n, rows, assign, &mut expts, &Scalar::one(), parity, out);
            return;
        }
        for r in 0..n {
            if !used[r] {
                used[r] = true;
                let inversions = (r + 1..n).filter(|&i| used[i]).count();
                assign.push(r);
                rec(rows, n, used, assign, parity ^ (inversions % 2 == 1), out);
                assign.pop();
                used[r] = false;
            }
        }
    }
    rec(rows, n, &mut used, &mut assign, false, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // fast criteria run here; the full suite is the `acceptance` target
    #[test]
    fn quick_criteria() {
        for id in [3, 6, 9] {
            let report = run_criterion(id, DEFAULT_SEED);
            assert!(report.passed, "criterion {id}: {}", report.details);
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        let report = run_criterion(11, DEFAULT_SEED);
        assert!(!report.passed);
    }

    // the wedge_to_symfun helper participates in several criteria
    #[test]
    fn wedge_to_symfun_inverts_to_wedge() {
        let f = SymFun::basis_element(
            Basis::S,
            Partition::new(vec![2, 1]).unwrap(),
            4,
        )
        .unwrap();
        let v = to_wedge(&f, &Weight::Classical, 4).unwrap();
        assert_eq!(wedge_to_symfun(&v, 4).unwrap(), f);
    }
}
