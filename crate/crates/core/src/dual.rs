//! Local multiplicity of a system's zero, computed from the dual space of
//! differential conditions at the point. Independent of the elimination
//! machinery: only linear algebra over the Taylor coefficients.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::nullspace;
use crate::poly::{Monomial, Polynomial};
use crate::{Error, Result};

/// A linear functional on polynomials, written in the scaled-derivative
/// basis at a fixed point: applying it to f sums coeffs[j] times the
/// coefficient of (x - point)^j in f.
#[derive(Debug, Clone)]
pub struct Functional {
    pub coeffs: BTreeMap<Monomial, BigRational>,
}

impl Functional {
    pub fn apply(&self, f: &Polynomial, point: &[BigRational]) -> BigRational {
        let shifted = f.shift(point);
        let mut acc = BigRational::zero();
        for (m, c) in &self.coeffs {
            acc += c * &shifted.coeff_rational(m);
        }
        acc
    }

    /// Highest total degree with a nonzero coefficient.
    pub fn order(&self) -> u32 {
        self.coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug)]
pub struct MultiplicityResult {
    pub multiplicity: u32,
    /// First order at which the dimension sequence stabilizes.
    pub sigma: u32,
    /// Dual dimensions at orders 0, 1, ..., sigma + 1.
    pub dims: Vec<usize>,
    pub basis: Vec<Functional>,
}

fn monomials_up_to(nvars: usize, alpha: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(exps: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            out.push(Monomial::from_exps(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(exps, i + 1, left - e, out);
            exps[i] = 0;
        }
    }
    rec(&mut exps, 0, alpha, &mut out);
    out.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then(a.cmp(b)));
    out
}

fn min_support_degree(f: &Polynomial) -> u32 {
    f.terms().map(|(m, _)| m.total_degree()).min().unwrap_or(0)
}

/// Dimension of the dual space at truncation order alpha, for the system
/// already shifted so the zero of interest sits at the origin.
fn dim_shifted(shifted: &[Polynomial], nvars: usize, alpha: u32) -> (usize, Vec<Functional>) {
    let cols = monomials_up_to(nvars, alpha);
    let col_of: BTreeMap<&Monomial, usize> = cols.iter().zip(0..).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in shifted {
        let mind = min_support_degree(g);
        for beta in &cols {
            if beta.total_degree() + mind > alpha {
                continue;
            }
            let mut row = vec![BigRational::zero(); cols.len()];
            let mut any = false;
            for (t, c) in g.terms() {
                let j = beta.mul(t);
                if let Some(&jc) = col_of.get(&j) {
                    row[jc] = c.clone();
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    let ns = nullspace(&rows, cols.len());
    let basis = ns
        .basis
        .into_iter()
        .map(|v| Functional {
            coeffs: cols
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c))
                .collect(),
        })
        .collect();
    (cols.len() - ns.rank, basis)
}

fn check_zero(system: &[Polynomial], point: &[BigRational]) -> Result<Vec<Polynomial>> {
    if system.is_empty() {
        return Err(Error::DegenerateInput("empty system".into()));
    }
    let n = system[0].order().len();
    assert_eq!(point.len(), n, "point length must match the variable count");
    for f in system {
        if !f.eval(point).is_zero() {
            return Err(Error::PointNotZero {
                poly: f.to_string(),
            });
        }
    }
    Ok(system.iter().map(|f| f.shift(point)).collect())
}

/// Dimension of the space of differential conditions of order at most
/// alpha satisfied by every element of the ideal at the given zero.
pub fn dual_dim_at_order(system: &[Polynomial], point: &[BigRational], alpha: u32) -> Result<usize> {
    let shifted = check_zero(system, point)?;
    Ok(dim_shifted(&shifted, point.len(), alpha).0)
}

/// Local multiplicity of the point as a zero of the system: the dual
/// dimensions are computed order by order until they stabilize, and the
/// stable value is the multiplicity. Fails with a cap error if no
/// stabilization happens at order <= cap.
pub fn multiplicity(system: &[Polynomial], point: &[BigRational], cap: u32) -> Result<MultiplicityResult> {
    let shifted = check_zero(system, point)?;
    let n = point.len();
    let mut dims = Vec::new();
    let (d0, mut basis) = dim_shifted(&shifted, n, 0);
    dims.push(d0);
    let mut alpha = 0u32;
    loop {
        if alpha + 1 > cap {
            return Err(Error::CapExceeded { cap });
        }
        let (d, b) = dim_shifted(&shifted, n, alpha + 1);
        dims.push(d);
        if d == dims[alpha as usize] {
            let m = d as u32;
            assert!(alpha < m, "stabilization order must stay below the multiplicity");
            return Ok(MultiplicityResult {
                multiplicity: m,
                sigma: alpha,
                dims,
                basis,
            });
        }
        basis = b;
        alpha += 1;
    }
}

/// Checks that every dual functional of the system at the point kills
/// h * g^l, for g vanishing at the point. True exactly when the power is
/// high enough to push the product into the local ideal's dual kernel.
pub fn annihilation_check(
    system: &[Polynomial],
    point: &[BigRational],
    g: &Polynomial,
    h: &Polynomial,
    l: u32,
) -> Result<bool> {
    if !g.eval(point).is_zero() {
        return Err(Error::Unsupported(
            "the adjoined factor must vanish at the point".into(),
        ));
    }
    let mr = multiplicity(system, point, 64)?;
    let w = h * &g.pow(l);
    Ok(mr.basis.iter().all(|v| v.apply(&w, point).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::vars::VarOrder;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn squared_coordinates_stabilize_at_four() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let sys = vec![
            parse_polynomial("x^2", &ord).unwrap(),
            parse_polynomial("y^2", &ord).unwrap(),
        ];
        let origin = [r(0), r(0)];
        let seq: Vec<usize> = (0..4)
            .map(|a| dual_dim_at_order(&sys, &origin, a).unwrap())
            .collect();
        assert_eq!(seq, vec![1, 3, 4, 4]);
        let mr = multiplicity(&sys, &origin, 8).unwrap();
        assert_eq!(mr.multiplicity, 4);
        assert_eq!(mr.sigma, 2);
        assert_eq!(mr.dims, vec![1, 3, 4, 4]);
        assert_eq!(mr.basis.len(), 4);
    }

    #[test]
    fn simple_zero_has_multiplicity_one() {
        let ord = VarOrder::new(vec!["x"]);
        let sys = vec![parse_polynomial("x^2 - 1", &ord).unwrap()];
        let mr = multiplicity(&sys, &[r(1)], 8).unwrap();
        assert_eq!(mr.multiplicity, 1);
        assert_eq!(mr.sigma, 0);
    }

    #[test]
    fn univariate_power_counts_its_degree() {
        let ord = VarOrder::new(vec!["x"]);
        let sys = vec![parse_polynomial("x^2", &ord).unwrap()];
        let mr = multiplicity(&sys, &[r(0)], 8).unwrap();
        assert_eq!(mr.multiplicity, 2);
    }

    #[test]
    fn rejects_points_that_are_not_zeros() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let sys = vec![parse_polynomial("x^2 + y", &ord).unwrap()];
        let err = multiplicity(&sys, &[r(1), r(1)], 8).unwrap_err();
        assert!(matches!(err, Error::PointNotZero { .. }));
    }

    #[test]
    fn cap_reported_when_no_stabilization() {
        let ord = VarOrder::new(vec!["x", "y"]);
        // one equation in two variables, zero set is a curve
        let sys = vec![parse_polynomial("x*y", &ord).unwrap()];
        let err = multiplicity(&sys, &[r(0), r(0)], 4).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 4 }));
    }

    #[test]
    fn annihilation_turns_on_at_the_multiplicity_power() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let sys = vec![
            parse_polynomial("x^2", &ord).unwrap(),
            parse_polynomial("y^2", &ord).unwrap(),
        ];
        let origin = [r(0), r(0)];
        let g = parse_polynomial("x + y", &ord).unwrap();
        let h = parse_polynomial("3", &ord).unwrap();
        assert!(!annihilation_check(&sys, &origin, &g, &h, 0).unwrap());
        assert!(annihilation_check(&sys, &origin, &g, &h, 4).unwrap());
        assert!(annihilation_check(&sys, &origin, &g, &h, 7).unwrap());
    }
}
