//! Sparse bivariate polynomials over Q in the formal parameters `q` and `t`,
//! plus the integer gcd machinery used to keep quotients in reduced form.
//!
//! Monomials are keyed by `(t-degree, q-degree)` so the natural `BTreeMap`
//! order is the lexicographic monomial order with `t > q`; the last entry is
//! the leading term.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;

pub type Rat = BigRational;

pub(crate) fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPoly {
    /// (t-degree, q-degree) -> coefficient; zero coefficients never stored.
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiPoly { terms }
    }

    pub fn var_q() -> Self {
        BiPoly::monomial(1, 0, Rat::one())
    }

    pub fn var_t() -> Self {
        BiPoly::monomial(0, 1, Rat::one())
    }

    /// `c * q^qdeg * t^tdeg`
    pub fn monomial(qdeg: u32, tdeg: u32, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((tdeg, qdeg), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Some(c) if the polynomial is the constant c (including 0).
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Ascending (t-degree, q-degree) iteration.
    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<((u32, u32), &Rat)> {
        self.terms.iter().next_back().map(|(k, v)| (*k, v))
    }

    fn insert_add(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((t1, q1), c1) in &self.terms {
            for ((t2, q2), c2) in &other.terms {
                out.insert_add((t1 + t2, q1 + q2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> BiPoly {
        let mut base = self.clone();
        let mut out = BiPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    pub fn eval(&self, q: &Rat, t: &Rat) -> Rat {
        let mut qpow: Vec<Rat> = vec![Rat::one()];
        let mut tpow: Vec<Rat> = vec![Rat::one()];
        let mut out = Rat::zero();
        for ((td, qd), c) in &self.terms {
            while qpow.len() <= *qd as usize {
                let next = qpow.last().unwrap() * q;
                qpow.push(next);
            }
            while tpow.len() <= *td as usize {
                let next = tpow.last().unwrap() * t;
                tpow.push(next);
            }
            out += c * &qpow[*qd as usize] * &tpow[*td as usize];
        }
        out
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &BiPoly) -> Option<BiPoly> {
        assert!(!other.is_zero(), "division of BiPoly by zero");
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        let ((lt_t, lt_q), lc) = {
            let (k, c) = other.leading().unwrap();
            (k, c.clone())
        };
        while let Some(((rt, rq), rc)) = rem.leading().map(|(k, c)| (k, c.clone())) {
            if rt < lt_t || rq < lt_q {
                return None;
            }
            let key = (rt - lt_t, rq - lt_q);
            let coeff = rc / &lc;
            let term = BiPoly::monomial(key.1, key.0, coeff);
            rem = rem.sub(&term.mul(other));
            quot = quot.add(&term);
        }
        Some(quot)
    }

    /// Gcd of the two polynomials, primitive over Z with positive leading
    /// integer coefficient. Constant for coprime inputs.
    pub fn gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let ia = IntBi::from_bipoly(a);
        let ib = IntBi::from_bipoly(b);
        IntBi::gcd(&ia, &ib).to_bipoly()
    }
}

// ---- integer layer for gcd ----

/// Dense Z[q][t]: index = t-degree, entry = coefficient in Z[q].
struct IntBi(Vec<UniQ>);

/// Dense Z[q]: index = q-degree.
#[derive(Clone)]
struct UniQ(Vec<BigInt>);

fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num::integer::gcd(a.clone(), b.clone())
}

impl UniQ {
    fn zero() -> Self {
        UniQ(Vec::new())
    }

    fn trim(mut self) -> Self {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = int_gcd(&g, c);
        }
        g
    }

    fn div_int(&self, d: &BigInt) -> UniQ {
        UniQ(self.0.iter().map(|c| c / d).collect())
    }

    fn mul_int(&self, d: &BigInt) -> UniQ {
        UniQ(self.0.iter().map(|c| c * d).collect()).trim()
    }

    fn mul(&self, other: &UniQ) -> UniQ {
        if self.is_zero() || other.is_zero() {
            return UniQ::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniQ(out).trim()
    }

    fn sub(&self, other: &UniQ) -> UniQ {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        UniQ(out).trim()
    }

    fn shift(&self, k: usize) -> UniQ {
        if self.is_zero() {
            return UniQ::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.0.iter().cloned());
        UniQ(out)
    }

    fn primitive(&self) -> UniQ {
        if self.is_zero() {
            return UniQ::zero();
        }
        let mut c = self.content();
        if self.0.last().unwrap().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Primitive gcd over Z.
    fn gcd(a: &UniQ, b: &UniQ) -> UniQ {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let content = int_gcd(&a.content(), &b.content());
        let mut f = a.primitive();
        let mut g = b.primitive();
        if f.deg() < g.deg() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = UniQ::prem(&f, &g).primitive();
            f = g;
            g = r;
        }
        f.primitive().mul_int(&content)
    }

    /// Pseudo-remainder of f by g (deg f >= deg g assumed handled by caller).
    fn prem(f: &UniQ, g: &UniQ) -> UniQ {
        let mut r = f.clone();
        let gl = g.0.last().unwrap().clone();
        let dg = g.deg();
        while !r.is_zero() && r.deg() >= dg {
            let rl = r.0.last().unwrap().clone();
            let shift = r.deg() - dg;
            r = r.mul_int(&gl).sub(&g.shift(shift).mul_int(&rl));
        }
        r
    }

    fn exact_div(&self, g: &UniQ) -> Option<UniQ> {
        if self.is_zero() {
            return Some(UniQ::zero());
        }
        let mut r = self.clone();
        let gl = g.0.last().unwrap().clone();
        let dg = g.deg();
        let mut q = vec![BigInt::zero(); self.0.len()];
        while !r.is_zero() && r.deg() >= dg {
            let rl = r.0.last().unwrap().clone();
            if (&rl % &gl) != BigInt::zero() {
                return None;
            }
            let c = &rl / &gl;
            let shift = r.deg() - dg;
            q[shift] = c.clone();
            r = r.sub(&g.shift(shift).mul_int(&c));
        }
        if r.is_zero() {
            Some(UniQ(q).trim())
        } else {
            None
        }
    }
}

impl IntBi {
    fn from_bipoly(p: &BiPoly) -> IntBi {
        // Clear rational denominators; gcd is only defined up to a constant.
        let mut den = BigInt::one();
        for (_, c) in p.iter() {
            let d = c.denom();
            den = &den / int_gcd(&den, d) * d;
        }
        let tmax = p.iter().map(|((t, _), _)| *t).max().unwrap_or(0) as usize;
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); tmax + 1];
        for ((t, q), c) in p.iter() {
            let row = &mut rows[*t as usize];
            let qd = *q as usize;
            if row.len() <= qd {
                row.resize(qd + 1, BigInt::zero());
            }
            row[qd] = c.numer() * (&den / c.denom());
        }
        IntBi(rows.into_iter().map(|r| UniQ(r).trim()).collect()).trim()
    }

    fn trim(mut self) -> Self {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn to_bipoly(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (t, row) in self.0.iter().enumerate() {
            for (q, c) in row.0.iter().enumerate() {
                if !c.is_zero() {
                    out.insert_add((t as u32, q as u32), Rat::from_integer(c.clone()));
                }
            }
        }
        out
    }

    /// Content in Z[q] (primitive gcd of the t-coefficients).
    fn content(&self) -> UniQ {
        let mut g = UniQ::zero();
        for c in &self.0 {
            g = UniQ::gcd(&g, c);
        }
        g
    }

    fn div_uni(&self, d: &UniQ) -> IntBi {
        IntBi(
            self.0
                .iter()
                .map(|c| c.exact_div(d).expect("content division is exact"))
                .collect(),
        )
    }

    fn mul_uni(&self, d: &UniQ) -> IntBi {
        IntBi(self.0.iter().map(|c| c.mul(d)).collect()).trim()
    }

    fn sub(&self, other: &IntBi) -> IntBi {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![UniQ::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] = a.clone();
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] = out[i].sub(b);
        }
        IntBi(out).trim()
    }

    fn shift(&self, k: usize) -> IntBi {
        if self.is_zero() {
            return IntBi(Vec::new());
        }
        let mut out = vec![UniQ::zero(); k];
        out.extend(self.0.iter().cloned());
        IntBi(out)
    }

    fn primitive(&self) -> IntBi {
        if self.is_zero() {
            return IntBi(Vec::new());
        }
        self.div_uni(&self.content())
    }

    fn prem(f: &IntBi, g: &IntBi) -> IntBi {
        let mut r = IntBi(f.0.clone());
        let gl = g.0.last().unwrap().clone();
        let dg = g.deg();
        while !r.is_zero() && r.deg() >= dg {
            let rl = r.0.last().unwrap().clone();
            let shift = r.deg() - dg;
            r = r.mul_uni(&gl).sub(&g.shift(shift).mul_uni(&rl));
        }
        r
    }

    /// Primitive PRS gcd over Z[q][t].
    fn gcd(a: &IntBi, b: &IntBi) -> IntBi {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let content = UniQ::gcd(&a.content(), &b.content());
        let mut f = a.primitive();
        let mut g = b.primitive();
        if f.deg() < g.deg() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = IntBi::prem(&f, &g).primitive();
            f = g;
            g = r;
        }
        f.primitive().mul_uni(&content)
    }
}
