use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::vars::VarOrder;

/// Exponent vector. Always as long as the variable order it belongs to.
/// Comparison is lexicographic with the highest variable most significant,
/// so the maximal monomial of a polynomial carries its main variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v.into_boxed_slice())
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn highest_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// other / self, caller guarantees divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(
            other
                .0
                .iter()
                .zip(self.0.iter())
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.0.to_vec();
        v[i] = e;
        Monomial(v.into_boxed_slice())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        for i in (0..self.0.len()).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    order: Arc<VarOrder>,
    terms: BTreeMap<Monomial, BigRational>,
}

/// A nonconstant polynomial split along its main (highest) variable:
/// poly = initial * x_cls^ldeg + reductum, with deg(reductum, x_cls) < ldeg.
#[derive(Debug, Clone)]
pub struct MainVarView {
    pub cls: usize,
    pub ldeg: u32,
    pub initial: Polynomial,
    pub reductum: Polynomial,
}

impl Polynomial {
    pub fn zero(order: &Arc<VarOrder>) -> Self {
        Polynomial {
            order: order.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: &Arc<VarOrder>) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: &Arc<VarOrder>, c: BigRational) -> Self {
        let mut p = Self::zero(order);
        p.add_term(Monomial::unit(order.len()), c);
        p
    }

    pub fn int(order: &Arc<VarOrder>, n: i64) -> Self {
        Self::constant(order, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(order: &Arc<VarOrder>, i: usize) -> Self {
        Self::var_pow(order, i, 1)
    }

    pub fn var_pow(order: &Arc<VarOrder>, i: usize, e: u32) -> Self {
        let mut p = Self::zero(order);
        p.add_term(Monomial::var(order.len(), i, e), BigRational::one());
        p
    }

    pub fn from_terms<I>(order: &Arc<VarOrder>, it: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(order);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn order(&self) -> &Arc<VarOrder> {
        &self.order
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.exps().len(), self.order.len());
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_unit())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn max_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff_rational(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Highest variable index occurring anywhere, None for constants.
    pub fn cls(&self) -> Option<usize> {
        self.max_term().and_then(|(m, _)| m.highest_var())
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn used_vars(&self) -> Vec<usize> {
        let n = self.order.len();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    /// Coefficient of x_v^e, a polynomial with x_v removed.
    pub fn coeff_of(&self, v: usize, e: u32) -> Polynomial {
        let mut out = Self::zero(&self.order);
        for (m, c) in &self.terms {
            if m.exp(v) == e {
                out.add_term(m.with_exp(v, 0), c.clone());
            }
        }
        out
    }

    /// (deg, lead, rest) of self read as a polynomial in x_v:
    /// self = lead * x_v^deg + rest. For deg 0, lead = self and rest = 0.
    pub fn view_in(&self, v: usize) -> (u32, Polynomial, Polynomial) {
        let d = self.degree_in(v);
        let mut lead = Self::zero(&self.order);
        let mut rest = Self::zero(&self.order);
        for (m, c) in &self.terms {
            if m.exp(v) == d {
                lead.add_term(m.with_exp(v, 0), c.clone());
            } else {
                rest.add_term(m.clone(), c.clone());
            }
        }
        (d, lead, rest)
    }

    pub fn main_var_view(&self) -> Option<MainVarView> {
        let cls = self.cls()?;
        let (ldeg, initial, reductum) = self.view_in(cls);
        Some(MainVarView {
            cls,
            ldeg,
            initial,
            reductum,
        })
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        let mut out = Self::zero(&self.order);
        if c.is_zero() {
            return out;
        }
        for (ms, cs) in &self.terms {
            out.terms.insert(ms.mul(m), cs * c);
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Polynomial {
        self.mul_term(&Monomial::unit(self.order.len()), c)
    }

    pub fn mul_var_pow(&self, v: usize, e: u32) -> Polynomial {
        self.mul_term(&Monomial::var(self.order.len(), v, e), &BigRational::one())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(&self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient when the division is exact, None otherwise.
    pub fn divide_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.order, d.order, "mixed variable orders");
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let mut q = Self::zero(&self.order);
        let (dm, dc) = {
            let (m, c) = d.max_term().unwrap();
            (m.clone(), c.clone())
        };
        while !r.is_zero() {
            let (rm, rc) = {
                let (m, c) = r.max_term().unwrap();
                (m.clone(), c.clone())
            };
            if !dm.divides(&rm) {
                return None;
            }
            let tm = dm.div_into(&rm);
            let tc = &rc / &dc;
            q.add_term(tm.clone(), tc.clone());
            r -= &d.mul_term(&tm, &tc);
        }
        Some(q)
    }

    /// Scale to integer coefficients with content 1 and a positive leading
    /// coefficient. Returns (g, s) with g = s * self; (0, 1) for zero.
    pub fn integer_primitive(&self) -> (Polynomial, BigRational) {
        if self.is_zero() {
            return (self.clone(), BigRational::one());
        }
        let mut l: BigInt = One::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let mut g: BigInt = Zero::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut s = BigRational::new(l, g);
        if self.max_term().unwrap().1.is_negative() {
            s = -s;
        }
        (self.mul_scalar(&s), s)
    }

    pub fn eval_partial(&self, v: usize, val: &BigRational) -> Polynomial {
        let mut out = Self::zero(&self.order);
        let dmax = self.degree_in(v);
        let pows = rational_powers(val, dmax);
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out.add_term(m.with_exp(v, 0), c * &pows[e]);
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.order.len());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= point[i].pow(e as i32);
                }
            }
            acc += t;
        }
        acc
    }

    /// f(x + a): exact Taylor shift of every variable at once.
    pub fn shift(&self, point: &[BigRational]) -> Polynomial {
        assert_eq!(point.len(), self.order.len());
        let n = self.order.len();
        let mut shifted_pows: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
        for i in 0..n {
            let d = self.degree_in(i);
            let mut pows = Vec::with_capacity(d as usize + 1);
            pows.push(Self::one(&self.order));
            if d > 0 {
                let mut lin = Self::var(&self.order, i);
                lin.add_term(Monomial::unit(n), point[i].clone());
                for k in 1..=d as usize {
                    pows.push(&pows[k - 1] * &lin);
                }
            }
            shifted_pows.push(pows);
        }
        let mut acc = Self::zero(&self.order);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&self.order, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = &t * &shifted_pows[i][e as usize];
                }
            }
            acc += &t;
        }
        acc
    }

    pub fn derivative(&self, v: usize) -> Polynomial {
        let mut out = Self::zero(&self.order);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(
                    m.with_exp(v, e - 1),
                    c * BigRational::from_integer(BigInt::from(e)),
                );
            }
        }
        out
    }

    /// Dense coefficient vector when self only involves x_v. The vector is
    /// never empty; the zero polynomial gives [0].
    pub fn to_univariate(&self, v: usize) -> Option<Vec<BigRational>> {
        let used = self.used_vars();
        if !used.iter().all(|&u| u == v) {
            return None;
        }
        let d = self.degree_in(v) as usize;
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (m, c) in &self.terms {
            coeffs[m.exp(v) as usize] = c.clone();
        }
        Some(coeffs)
    }

    pub fn from_univariate(order: &Arc<VarOrder>, v: usize, coeffs: &[BigRational]) -> Polynomial {
        let mut p = Self::zero(order);
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(order.len(), v, e as u32), c.clone());
        }
        p
    }
}

fn rational_powers(val: &BigRational, dmax: u32) -> Vec<BigRational> {
    let mut pows = Vec::with_capacity(dmax as usize + 1);
    pows.push(BigRational::one());
    for k in 1..=dmax as usize {
        let next = &pows[k - 1] * val;
        pows.push(next);
    }
    pows
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.order, rhs.order, "mixed variable orders");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.order, rhs.order, "mixed variable orders");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.order, rhs.order, "mixed variable orders");
        let mut out = Polynomial::zero(&self.order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero(&self.order);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Term sequences compared in descending monomial order. Used as a
/// deterministic tie break, matching the order canonical printing sorts by.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => break,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    match ma.cmp(mb).then_with(|| ca.cmp(cb)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
            }
        }
        self.order.names().cmp(other.order.names())
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_unit() {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                let mut sep = false;
                for (i, &e) in m.exps().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if sep {
                        write!(f, "*")?;
                    }
                    sep = true;
                    if e == 1 {
                        write!(f, "{}", self.order.name(i))?;
                    } else {
                        write!(f, "{}^{}", self.order.name(i), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord3() -> Arc<VarOrder> {
        VarOrder::new(vec!["x", "y", "z"])
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn monomial_order_weighs_highest_variable_first() {
        let x2 = Monomial::var(3, 0, 2);
        let y = Monomial::var(3, 1, 1);
        let z = Monomial::var(3, 2, 1);
        assert!(y > x2);
        assert!(z > y);
        assert!(z > x2.mul(&y));
    }

    #[test]
    fn display_is_descending_with_explicit_operators() {
        let o = ord3();
        let x = Polynomial::var(&o, 0);
        let y = Polynomial::var(&o, 1);
        let p = &(&(&x * &x) * &y) - &(&x.mul_scalar(&r(2)) - &Polynomial::int(&o, 3));
        assert_eq!(p.to_string(), "x^2*y - 2*x + 3");
        let q = Polynomial::from_univariate(
            &o,
            0,
            &[BigRational::new(BigInt::from(-1), BigInt::from(2)), r(1)],
        );
        assert_eq!(q.to_string(), "x - 1/2");
        assert_eq!(Polynomial::zero(&o).to_string(), "0");
        assert_eq!((-&x).to_string(), "-x");
    }

    #[test]
    fn main_variable_split_reassembles() {
        let o = ord3();
        let x = Polynomial::var(&o, 0);
        let z = Polynomial::var(&o, 2);
        // (x+1)*z^2 + z + 1
        let p = &(&(&x + &Polynomial::one(&o)) * &z.pow(2)) + &(&z + &Polynomial::one(&o));
        let v = p.main_var_view().unwrap();
        assert_eq!(v.cls, 2);
        assert_eq!(v.ldeg, 2);
        assert_eq!(v.initial.to_string(), "x + 1");
        let back = &(&v.initial * &Polynomial::var_pow(&o, v.cls, v.ldeg)) + &v.reductum;
        assert_eq!(back, p);
    }

    #[test]
    fn exact_division_round_trips_and_rejects() {
        let o = ord3();
        let x = Polynomial::var(&o, 0);
        let y = Polynomial::var(&o, 1);
        let a = &(&x + &y) * &(&x - &Polynomial::one(&o));
        let q = a.divide_exact(&(&x + &y)).unwrap();
        assert_eq!(q, &x - &Polynomial::one(&o));
        assert!(a.divide_exact(&(&x + &Polynomial::one(&o))).is_none());
    }

    #[test]
    fn primitive_scaling_clears_denominators_and_sign() {
        let o = ord3();
        let p = Polynomial::from_univariate(
            &o,
            0,
            &[
                BigRational::new(BigInt::from(2), BigInt::from(3)),
                BigRational::zero(),
                r(-2),
            ],
        );
        let (g, s) = p.integer_primitive();
        assert_eq!(g.to_string(), "3*x^2 - 1");
        assert_eq!(g, p.mul_scalar(&s));
    }

    #[test]
    fn taylor_shift_matches_direct_substitution() {
        let o = ord3();
        let x = Polynomial::var(&o, 0);
        let y = Polynomial::var(&o, 1);
        let p = &(&x.pow(3) * &y) + &(&y.pow(2) - &Polynomial::int(&o, 7));
        let a = vec![r(2), r(-1), r(0)];
        let shifted = p.shift(&a);
        // f(x+2, y-1, z) at (s,t,0) equals f(s+2, t-1, 0)
        let pt = vec![r(5), r(3), r(0)];
        let direct = p.eval(&vec![r(7), r(2), r(0)]);
        assert_eq!(shifted.eval(&pt), direct);
    }

    #[test]
    fn eval_partial_drops_the_variable() {
        let o = ord3();
        let x = Polynomial::var(&o, 0);
        let z = Polynomial::var(&o, 2);
        let p = &(&x * &z.pow(2)) + &z;
        let q = p.eval_partial(2, &r(3));
        assert_eq!(q.to_string(), "9*x + 3");
    }
}
