//! Rough per-instance timing of the semigroup kernel check.

use std::time::Instant;
use symfock::gauss::{compose, gauss_kernel, GaussParams, MatrixWindow};
use symfock::inner::Weight;
use symfock::scalar::{Rat, Scalar};

fn sc(v: i64) -> Scalar {
    Scalar::from_int(v)
}

fn main() {
    let weights = vec![
        ("classical", Weight::Classical),
        ("jack", Weight::Jack(Rat::new(2.into(), 1.into()))),
        ("hl", Weight::HallLittlewood),
        ("macdonald", Weight::Macdonald),
    ];
    let d = 6u32;
    for (name, weight) in &weights {
        for w in [2usize, 3] {
            if w == 3 && !matches!(weight, Weight::Classical | Weight::Jack(_)) {
                continue;
            }
            // class 0 instance: C1 = 0
            let mut a1 = MatrixWindow::zero(w);
            a1.set(1, 1, sc(1));
            if w > 1 {
                a1.set(1, 2, sc(2));
                a1.set(2, 1, sc(2));
            }
            let mut b1 = MatrixWindow::zero(w);
            b1.set(1, 1, sc(1));
            b1.set(w, 1, sc(-1));
            let s1 = GaussParams::quadratic(a1, b1, MatrixWindow::zero(w)).unwrap();
            let mut u2 = MatrixWindow::zero(w);
            u2.set(1, 1, sc(2));
            let mut v2 = MatrixWindow::zero(w);
            v2.set(1, w, sc(1));
            let mut w2 = MatrixWindow::zero(w);
            w2.set(w, w, sc(1));
            let s2 = GaussParams::quadratic(u2, v2, w2).unwrap();

            let t0 = Instant::now();
            let s3 = compose(&s1, &s2, weight).unwrap();
            let t_compose = t0.elapsed().as_secs_f64();

            let inner = d * w as u32;
            let t0 = Instant::now();
            let k1 = gauss_kernel(&s1, d, inner);
            let t_k1 = t0.elapsed().as_secs_f64();
            let t0 = Instant::now();
            let k2 = gauss_kernel(&s2, inner, d);
            let t_k2 = t0.elapsed().as_secs_f64();
            let t0 = Instant::now();
            let lhs = k1.compose(&k2, weight).unwrap();
            let t_comp = t0.elapsed().as_secs_f64();
            let rhs = gauss_kernel(&s3, d, d);
            println!(
                "{name} w={w}: param-compose {t_compose:.2}s k1 {t_k1:.2}s ({} terms) k2 {t_k2:.2}s ({} terms) kernel-compose {t_comp:.2}s equal={}",
                k1.len(),
                k2.len(),
                lhs == rhs
            );
        }
    }
}
