//! Timing of dense-block semigroup instances.

use std::time::Instant;
use symfock::gauss::{compose, gauss_kernel, GaussParams, MatrixWindow};
use symfock::inner::Weight;
use symfock::scalar::{Rat, Scalar};

fn dense_sym(w: usize, base: i64) -> MatrixWindow {
    let mut m = MatrixWindow::zero(w);
    for i in 1..=w {
        for j in i..=w {
            let v = Scalar::from_frac(base + (i + j) as i64 % 3 - 1, 2);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

fn dense_gen(w: usize, base: i64) -> MatrixWindow {
    let mut m = MatrixWindow::zero(w);
    for i in 1..=w {
        for j in 1..=w {
            m.set(i, j, Scalar::from_frac(base + (2 * i + j) as i64 % 3 - 1, 1));
        }
    }
    m
}

fn main() {
    let d = 6u32;
    for (name, weight, w) in [
        ("classical", Weight::Classical, 3usize),
        ("jack", Weight::Jack(Rat::new(2.into(), 1.into())), 3),
        ("hl", Weight::HallLittlewood, 2),
        ("macdonald", Weight::Macdonald, 2),
    ] {
        let s1 = GaussParams::quadratic(dense_sym(w, 1), dense_gen(w, 1), MatrixWindow::zero(w))
            .unwrap();
        let s2 =
            GaussParams::quadratic(dense_sym(w, 2), dense_gen(w, 0), dense_sym(w, 1)).unwrap();
        let total = Instant::now();
        let s3 = compose(&s1, &s2, &weight).unwrap();
        let inner = d * w as u32;
        let t0 = Instant::now();
        let k1 = gauss_kernel(&s1, d, inner);
        let t_k1 = t0.elapsed().as_secs_f64();
        let t0 = Instant::now();
        let k2 = gauss_kernel(&s2, inner, d);
        let t_k2 = t0.elapsed().as_secs_f64();
        let t0 = Instant::now();
        let lhs = k1.compose(&k2, &weight).unwrap();
        let t_comp = t0.elapsed().as_secs_f64();
        let rhs = gauss_kernel(&s3, d, d);
        println!(
            "{name} w={w}: k1 {t_k1:.2}s ({}) k2 {t_k2:.2}s ({}) compose {t_comp:.2}s equal={} total {:.2}s",
            k1.len(),
            k2.len(),
            lhs == rhs,
            total.elapsed().as_secs_f64()
        );
    }
}
