//! Serializable view of a decomposition: everything printed as canonical
//! strings so the output round-trips through its own schema.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::decomp::{ComponentKind, DecompositionResult};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub vars: Vec<String>,
    pub bound: u32,
    pub strategy: StrategyReport,
    pub components: Vec<ComponentReport>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct StrategyReport {
    pub prop3: bool,
    pub factor_initials: bool,
    pub update_bound: bool,
    pub split_components: bool,
    pub parallel: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ComponentReport {
    pub kind: String,
    pub polys: Vec<String>,
    /// Product of the saturation factors; zeros count only where it is
    /// nonzero.
    pub saturation: String,
    pub provenance: Vec<String>,
    pub rational_zeros: Vec<ZeroReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ZeroReport {
    pub point: Vec<String>,
    pub multiplicity: u32,
    pub certified: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub certified_count: u32,
    pub completeness: bool,
}

/// Enumerated zeros for one component: (point, claimed multiplicity,
/// certified by the independent count).
pub struct ComponentZeros {
    pub zeros: Vec<(Vec<BigRational>, u32, bool)>,
    pub complete: bool,
}

pub fn build_report(res: &DecompositionResult, per: &[ComponentZeros]) -> Report {
    assert_eq!(res.components.len(), per.len());
    let mut certified_count = 0u32;
    let mut completeness = true;
    let components = res
        .components
        .iter()
        .zip(per)
        .map(|(c, z)| {
            if c.kind == ComponentKind::Unresolved || !z.complete {
                completeness = false;
            }
            let rational_zeros = z
                .zeros
                .iter()
                .map(|(pt, mult, certified)| {
                    if *certified {
                        certified_count += 1;
                    }
                    ZeroReport {
                        point: pt.iter().map(|c0| c0.to_string()).collect(),
                        multiplicity: *mult,
                        certified: *certified,
                    }
                })
                .collect();
            ComponentReport {
                kind: match c.kind {
                    ComponentKind::Triangular => "triangular".to_string(),
                    ComponentKind::Unresolved => "unresolved".to_string(),
                },
                polys: c.polys.iter().map(|p| p.to_string()).collect(),
                saturation: c.saturation_product().to_string(),
                provenance: c.provenance.clone(),
                rational_zeros,
            }
        })
        .collect();
    Report {
        vars: res.order.names().to_vec(),
        bound: res.bound,
        strategy: StrategyReport {
            prop3: res.flags.prop3,
            factor_initials: res.flags.factor_initials,
            update_bound: res.flags.update_bound,
            split_components: res.flags.split_components,
            parallel: res.flags.parallel,
        },
        components,
        summary: Summary {
            certified_count,
            completeness,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{zero_decomp_multi, BoundSpec, StrategyFlags};
    use crate::parse::parse_system;
    use crate::solve::rational_zeros;

    #[test]
    fn reports_round_trip_through_json() {
        let (_, polys) = parse_system("vars x, y\nx^2 - 1\ny - x\n").unwrap();
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, StrategyFlags::default()).unwrap();
        let per: Vec<ComponentZeros> = res
            .components
            .iter()
            .map(|c| {
                let e = rational_zeros(c).unwrap();
                ComponentZeros {
                    zeros: e
                        .zeros
                        .into_iter()
                        .map(|z| (z.point, z.multiplicity, true))
                        .collect(),
                    complete: e.complete,
                }
            })
            .collect();
        let rep = build_report(&res, &per);
        assert_eq!(rep.summary.certified_count, 2);
        assert!(rep.summary.completeness);
        let text = serde_json::to_string_pretty(&rep).unwrap();
        assert!(text.contains("rationalZeros"));
        assert!(text.contains("certifiedCount"));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(rep, back);
    }
}
