//! Univariate helpers over the rationals. Polynomials come in and out as
//! sparse `Polynomial` values restricted to one variable; the work happens
//! on dense coefficient vectors.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::Polynomial;

/// Ascending dense coefficients, no trailing zeros. Zero is the empty vector.
type Uni = Vec<BigRational>;

fn utrim(v: &mut Uni) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn to_uni(p: &Polynomial, v: usize) -> Uni {
    let mut u = p
        .to_univariate(v)
        .expect("polynomial must be univariate here");
    utrim(&mut u);
    u
}

fn uderiv(a: &Uni) -> Uni {
    let mut out = Vec::with_capacity(a.len().saturating_sub(1));
    for k in 1..a.len() {
        out.push(&a[k] * BigRational::from_integer(BigInt::from(k)));
    }
    utrim(&mut out);
    out
}

fn udivrem(a: &Uni, b: &Uni) -> (Uni, Uni) {
    assert!(!b.is_empty(), "univariate division by zero");
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q: Uni = if a.len() >= b.len() {
        vec![BigRational::zero(); a.len() - db]
    } else {
        Vec::new()
    };
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let c = r.last().unwrap() / lb;
        let k = dr - db;
        for i in 0..db {
            let t = &b[i] * &c;
            r[k + i] -= t;
        }
        r.pop();
        utrim(&mut r);
        q[k] = c;
    }
    utrim(&mut q);
    (q, r)
}

fn udiv_exact(a: &Uni, b: &Uni) -> Option<Uni> {
    let (q, r) = udivrem(a, b);
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

/// Integer coefficients, content 1, positive leading coefficient.
fn uprimitive(a: &Uni) -> Uni {
    if a.is_empty() {
        return Vec::new();
    }
    let mut l: BigInt = One::one();
    for c in a {
        l = l.lcm(c.denom());
    }
    let mut g: BigInt = Zero::zero();
    for c in a {
        g = g.gcd(&(c.numer() * (&l / c.denom())));
    }
    let mut s = BigRational::new(l, g);
    if a.last().unwrap().is_negative() {
        s = -s;
    }
    a.iter().map(|c| c * &s).collect()
}

/// Primitive gcd with positive leading coefficient. ugcd(a, 0) = primitive(a).
fn ugcd(a: &Uni, b: &Uni) -> Uni {
    let mut x = uprimitive(a);
    let mut y = uprimitive(b);
    while !y.is_empty() {
        let (_, r) = udivrem(&x, &y);
        x = y;
        y = uprimitive(&r);
    }
    x
}

fn usquarefree_part(f: &Uni) -> Uni {
    if f.len() <= 1 {
        return uprimitive(f);
    }
    let g = ugcd(f, &uderiv(f));
    uprimitive(&udiv_exact(f, &g).unwrap())
}

/// Pairwise coprime squarefree factors with their multiplicities,
/// product over factor^mult = f up to a constant.
fn uyun(f: &Uni) -> Vec<(Uni, u32)> {
    assert!(f.len() > 1, "squarefree decomposition needs degree >= 1");
    let f = uprimitive(f);
    let fp = uderiv(&f);
    let a0 = ugcd(&f, &fp);
    let mut b = udiv_exact(&f, &a0).unwrap();
    let c = udiv_exact(&fp, &a0).unwrap();
    let mut d = {
        let bp = uderiv(&b);
        usub(&c, &bp)
    };
    let mut out = Vec::new();
    let mut i = 1u32;
    while b.len() > 1 {
        let a = ugcd(&b, &d);
        b = udiv_exact(&b, &a).unwrap();
        let cnext = udiv_exact(&d, &a).unwrap();
        d = usub(&cnext, &uderiv(&b));
        if a.len() > 1 {
            out.push((uprimitive(&a), i));
        }
        i += 1;
    }
    out
}

fn usub(a: &Uni, b: &Uni) -> Uni {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    utrim(&mut out);
    out
}

fn ueval(f: &Uni, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn miller_rabin(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - BigInt::one();
    let s = n1.trailing_zeros().unwrap();
    let d = &n1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    // n odd composite, not covered by the trial primes
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

fn factorize(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(n.is_positive());
    let mut out: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    let cap = BigInt::from(100_000u32);
    while &p * &p <= m && p <= cap {
        while (&m % &p).is_zero() {
            *out.entry(p.clone()).or_insert(0) += 1;
            m /= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    let mut stack = Vec::new();
    if !m.is_one() {
        stack.push(m);
    }
    while let Some(m) = stack.pop() {
        if miller_rabin(&m) {
            *out.entry(m).or_insert(0) += 1;
        } else {
            let d = pollard_rho(&m);
            stack.push(&m / &d);
            stack.push(d);
        }
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// All rational roots with multiplicities, sorted by value.
fn urational_roots(f: &Uni) -> Vec<(BigRational, u32)> {
    assert!(!f.is_empty(), "zero polynomial has every point as a root");
    let mut f0 = uprimitive(f);
    let mut out: BTreeMap<BigRational, u32> = BTreeMap::new();
    let k = f0.iter().take_while(|c| c.is_zero()).count();
    if k > 0 {
        out.insert(BigRational::zero(), k as u32);
        f0.drain(..k);
    }
    if f0.len() > 1 {
        let a0 = f0[0].numer().abs();
        let ad = f0.last().unwrap().numer().abs();
        let mut cands: BTreeSet<BigRational> = BTreeSet::new();
        for p in divisors(&a0) {
            for q in divisors(&ad) {
                cands.insert(BigRational::new(p.clone(), q.clone()));
                cands.insert(BigRational::new(-&p, q));
            }
        }
        for r in cands {
            if !ueval(&f0, &r).is_zero() {
                continue;
            }
            let lin = vec![-r.clone(), BigRational::one()];
            let mut m = 0u32;
            let mut g = f0.clone();
            while let Some(q) = udiv_exact(&g, &lin) {
                m += 1;
                g = q;
            }
            out.insert(r, m);
        }
    }
    out.into_iter().collect()
}

pub fn gcd_uni(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    Polynomial::from_univariate(a.order(), v, &ugcd(&to_uni(a, v), &to_uni(b, v)))
}

pub fn gcd_many(polys: &[Polynomial], v: usize) -> Polynomial {
    let order = polys.first().expect("need at least one polynomial").order();
    let mut acc: Uni = Vec::new();
    for p in polys {
        acc = ugcd(&acc, &to_uni(p, v));
    }
    Polynomial::from_univariate(order, v, &acc)
}

pub fn squarefree_part(p: &Polynomial, v: usize) -> Polynomial {
    Polynomial::from_univariate(p.order(), v, &usquarefree_part(&to_uni(p, v)))
}

pub fn yun_decompose(p: &Polynomial, v: usize) -> Vec<(Polynomial, u32)> {
    uyun(&to_uni(p, v))
        .into_iter()
        .map(|(f, e)| (Polynomial::from_univariate(p.order(), v, &f), e))
        .collect()
}

pub fn rational_roots(p: &Polynomial, v: usize) -> Vec<(BigRational, u32)> {
    urational_roots(&to_uni(p, v))
}

/// Divides f out of p as often as it goes; returns the cofactor and count.
pub fn remove_factor(p: &Polynomial, f: &Polynomial) -> (Polynomial, u32) {
    let mut out = p.clone();
    let mut n = 0;
    while let Some(q) = out.divide_exact(f) {
        out = q;
        n += 1;
    }
    (out, n)
}

fn insert_coprime(basis: &mut Vec<Uni>, g: Uni) {
    let g = uprimitive(&g);
    if g.len() <= 1 {
        return;
    }
    for i in 0..basis.len() {
        let d = ugcd(&g, &basis[i]);
        if d.len() > 1 {
            let b = basis.remove(i);
            let b1 = udiv_exact(&b, &d).unwrap();
            let g1 = udiv_exact(&g, &d).unwrap();
            insert_coprime(basis, d);
            insert_coprime(basis, b1);
            insert_coprime(basis, g1);
            return;
        }
    }
    basis.push(g);
}

fn extract_linear(b: &Uni) -> Vec<Uni> {
    let mut out = Vec::new();
    let mut cof = b.clone();
    for (r, _) in urational_roots(b) {
        let lin = vec![-r.clone(), BigRational::one()];
        cof = udiv_exact(&cof, &lin).unwrap();
        out.push(uprimitive(&lin));
    }
    if cof.len() > 1 {
        out.push(uprimitive(&cof));
    }
    out
}

/// Pairwise coprime squarefree factors covering the zeros of the inputs.
/// Every nonconstant input must be univariate; rational roots come out as
/// their own linear factors, irreducibility is not pushed further.
pub fn coprime_split(polys: &[Polynomial]) -> crate::Result<Vec<Polynomial>> {
    let Some(first) = polys.iter().find(|p| !p.is_constant()) else {
        if polys.iter().any(|p| p.is_zero()) {
            return Err(Error::DegenerateInput(
                "zero polynomial has no factor split".into(),
            ));
        }
        return Ok(Vec::new());
    };
    let order = first.order().clone();
    let mut by_var: BTreeMap<usize, Vec<Uni>> = BTreeMap::new();
    for p in polys {
        if p.is_constant() {
            if p.is_zero() {
                return Err(Error::DegenerateInput(
                    "zero polynomial has no factor split".into(),
                ));
            }
            continue;
        }
        let used = p.used_vars();
        if used.len() != 1 {
            return Err(Error::Unsupported(format!(
                "factor split needs univariate polynomials, got `{}`",
                p
            )));
        }
        by_var
            .entry(used[0])
            .or_default()
            .push(usquarefree_part(&to_uni(p, used[0])));
    }
    let mut out: Vec<Polynomial> = Vec::new();
    for (v, group) in by_var {
        let mut basis: Vec<Uni> = Vec::new();
        for g in group {
            insert_coprime(&mut basis, g);
        }
        for b in basis {
            for piece in extract_linear(&b) {
                out.push(Polynomial::from_univariate(&order, v, &piece));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
