//! Rational zeros of a triangular component by back-substitution, with the
//! per-level root multiplicities multiplied into a claimed local
//! multiplicity for each point.

use num_rational::BigRational;

use crate::decomp::{Component, ComponentKind};
use crate::poly::Polynomial;
use crate::univar::rational_roots;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalZero {
    pub point: Vec<BigRational>,
    /// Product of the root multiplicities along the chain levels.
    pub multiplicity: u32,
}

#[derive(Debug)]
pub struct ZeroEnumeration {
    pub zeros: Vec<RationalZero>,
    /// False when some level kept a factor without rational roots, so the
    /// component also has zeros this enumeration cannot reach.
    pub complete: bool,
}

fn substitute_prefix(f: &Polynomial, prefix: &[BigRational]) -> Polynomial {
    let mut u = f.clone();
    for (v, val) in prefix.iter().enumerate() {
        u = u.eval_partial(v, val);
    }
    u
}

fn saturation_excludes(comp: &Component, prefix: &[BigRational]) -> bool {
    comp.saturation
        .iter()
        .any(|f| substitute_prefix(f, prefix).is_zero())
}

fn descend(
    comp: &Component,
    partial: &mut Vec<BigRational>,
    acc: u32,
    zeros: &mut Vec<RationalZero>,
    complete: &mut bool,
) -> Result<()> {
    let level = partial.len();
    if level == comp.polys.len() {
        let keep = comp
            .saturation
            .iter()
            .all(|f| !substitute_prefix(f, partial).is_zero());
        if keep {
            zeros.push(RationalZero {
                point: partial.clone(),
                multiplicity: acc,
            });
        }
        return Ok(());
    }
    let u = substitute_prefix(&comp.polys[level], partial);
    if u.is_zero() {
        if saturation_excludes(comp, partial) {
            return Ok(());
        }
        return Err(Error::NotZeroDimensional(format!(
            "chain element {} vanishes identically over a partial point",
            level + 1
        )));
    }
    if u.is_constant() {
        // the leading terms died at this point and a nonzero constant is
        // left: nothing passes through
        return Ok(());
    }
    let roots = rational_roots(&u, level);
    let found: u32 = roots.iter().map(|(_, e)| e).sum();
    if found < u.degree_in(level) {
        *complete = false;
    }
    for (root, e) in roots {
        partial.push(root);
        descend(comp, partial, acc * e, zeros, complete)?;
        partial.pop();
    }
    Ok(())
}

/// Enumerate the rational zeros of a triangular component, respecting its
/// saturation. Multiplicities are the chain's claim; certification against
/// an independent count is the caller's business.
pub fn rational_zeros(comp: &Component) -> Result<ZeroEnumeration> {
    if comp.kind != ComponentKind::Triangular {
        return Err(Error::Unsupported(
            "only triangular components enumerate their zeros".into(),
        ));
    }
    let order = comp.polys[0].order().clone();
    let n = order.len();
    if comp.polys.len() != n || comp.polys.iter().enumerate().any(|(i, c)| c.cls() != Some(i)) {
        return Err(Error::NotZeroDimensional(
            "the chain does not determine every variable in order".into(),
        ));
    }
    let mut zeros = Vec::new();
    let mut complete = true;
    let mut partial = Vec::with_capacity(n);
    descend(comp, &mut partial, 1, &mut zeros, &mut complete)?;
    Ok(ZeroEnumeration { zeros, complete })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::vars::VarOrder;
    use num_bigint::BigInt;

    fn comp(polys: Vec<Polynomial>, sat: Vec<Polynomial>) -> Component {
        Component {
            polys,
            saturation: sat,
            kind: ComponentKind::Triangular,
            provenance: Vec::new(),
            path: Vec::new(),
            bound_used: 1,
        }
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn enumerates_points_in_root_order() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let c = comp(
            vec![
                parse_polynomial("x^2 - 1", &ord).unwrap(),
                parse_polynomial("y - x", &ord).unwrap(),
            ],
            Vec::new(),
        );
        let e = rational_zeros(&c).unwrap();
        assert!(e.complete);
        assert_eq!(
            e.zeros,
            vec![
                RationalZero { point: vec![r(-1), r(-1)], multiplicity: 1 },
                RationalZero { point: vec![r(1), r(1)], multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn multiplicities_multiply_across_levels() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let c = comp(
            vec![
                parse_polynomial("(x - 1)^2", &ord).unwrap(),
                parse_polynomial("(y - 2)^3", &ord).unwrap(),
            ],
            Vec::new(),
        );
        let e = rational_zeros(&c).unwrap();
        assert_eq!(e.zeros.len(), 1);
        assert_eq!(e.zeros[0].multiplicity, 6);
    }

    #[test]
    fn saturation_discards_points_and_dead_branches() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let x = parse_polynomial("x", &ord).unwrap();
        let c = comp(
            vec![
                parse_polynomial("x^2 - x", &ord).unwrap(),
                parse_polynomial("y - x", &ord).unwrap(),
            ],
            vec![x.clone()],
        );
        let e = rational_zeros(&c).unwrap();
        assert_eq!(e.zeros, vec![RationalZero { point: vec![r(1), r(1)], multiplicity: 1 }]);

        // a level that vanishes identically is fine when the saturation
        // already rules the partial point out
        let c = comp(
            vec![
                parse_polynomial("x^2", &ord).unwrap(),
                parse_polynomial("x*y", &ord).unwrap(),
            ],
            vec![x],
        );
        let e = rational_zeros(&c).unwrap();
        assert!(e.zeros.is_empty());
    }

    #[test]
    fn vanishing_level_without_exclusion_is_an_error() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let c = comp(
            vec![
                parse_polynomial("x^2", &ord).unwrap(),
                parse_polynomial("x*y", &ord).unwrap(),
            ],
            Vec::new(),
        );
        assert!(matches!(
            rational_zeros(&c),
            Err(Error::NotZeroDimensional(_))
        ));
    }

    #[test]
    fn irrational_roots_mark_the_enumeration_incomplete() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let c = comp(
            vec![
                parse_polynomial("x^2 - 2", &ord).unwrap(),
                parse_polynomial("y - x", &ord).unwrap(),
            ],
            Vec::new(),
        );
        let e = rational_zeros(&c).unwrap();
        assert!(e.zeros.is_empty());
        assert!(!e.complete);
    }
}
