//! Timing of parameter-level composition chains over the function field.

use std::time::Instant;
use symfock::gauss::{compose, GaussParams, MatrixWindow};
use symfock::inner::Weight;
use symfock::scalar::Scalar;

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
    for (name, weight) in [
        ("hl", Weight::HallLittlewood),
        ("macdonald", Weight::Macdonald),
    ] {
        let w = 2usize;
        let mk = |b1: i64, b2: i64, b3: i64| {
            GaussParams::quadratic(dense_sym(w, b1), dense_gen(w, b2), dense_sym(w, b3)).unwrap()
        };
        let s1 = mk(1, 1, 0);
        let s2 = mk(2, 0, 1);
        let s3 = mk(0, 2, 2);
        let t0 = Instant::now();
        let s12 = compose(&s1, &s2, &weight).unwrap();
        println!("{name}: first compose {:.2}s", t0.elapsed().as_secs_f64());
        let t0 = Instant::now();
        let left = compose(&s12, &s3, &weight).unwrap();
        println!("{name}: second compose {:.2}s", t0.elapsed().as_secs_f64());
        let t0 = Instant::now();
        let s23 = compose(&s2, &s3, &weight).unwrap();
        let right = compose(&s1, &s23, &weight).unwrap();
        println!(
            "{name}: right side {:.2}s, assoc={}",
            t0.elapsed().as_secs_f64(),
            left.same_blocks(&right) && left.norm() == right.norm()
        );
    }
}
