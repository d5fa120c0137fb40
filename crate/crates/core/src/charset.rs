//! Ascending chains and the characteristic-set loop: repeatedly take a
//! basic set of the pool, reduce everything else against it, and adjoin the
//! nonzero remainders until reduction closes.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::Polynomial;
use crate::prem::prem_seq;
use crate::univar::coprime_split;
use crate::vars::VarOrder;
use crate::{Error, Result};

/// Position of a polynomial in the elimination order: main variable first,
/// then leading degree. Constants sit below everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rank {
    pub cls: Option<usize>,
    pub ldeg: u32,
}

pub fn rank_of(p: &Polynomial) -> Rank {
    match p.cls() {
        Some(v) => Rank {
            cls: Some(v),
            ldeg: p.degree_in(v),
        },
        None => Rank { cls: None, ldeg: 0 },
    }
}

pub fn rank_compare(f: &Polynomial, g: &Polynomial) -> Ordering {
    rank_of(f).cmp(&rank_of(g))
}

/// f needs no reduction against c: its degree in c's main variable is
/// already below c's leading degree.
pub fn is_reduced(f: &Polynomial, c: &Polynomial) -> bool {
    let v = c.cls().expect("reduction target must not be constant");
    f.degree_in(v) < c.degree_in(v)
}

/// Chain with strictly increasing main variables, each element reduced
/// against all earlier ones. A single nonzero constant is the contradictory
/// chain (the system has no zeros).
#[derive(Debug, Clone, PartialEq)]
pub struct AscendingSet {
    polys: Vec<Polynomial>,
}

impl AscendingSet {
    pub fn new(polys: Vec<Polynomial>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::DegenerateInput("empty chain".into()));
        }
        if polys.len() == 1 && polys[0].is_constant() {
            if polys[0].is_zero() {
                return Err(Error::DegenerateInput("zero polynomial in chain".into()));
            }
            return Ok(AscendingSet { polys });
        }
        let mut last_cls: Option<usize> = None;
        for (i, p) in polys.iter().enumerate() {
            let Some(c) = p.cls() else {
                return Err(Error::DegenerateInput(
                    "constant inside a nontrivial chain".into(),
                ));
            };
            if let Some(l) = last_cls {
                if c <= l {
                    return Err(Error::DegenerateInput(
                        "main variables do not strictly increase".into(),
                    ));
                }
            }
            last_cls = Some(c);
            for q in &polys[..i] {
                if !is_reduced(p, q) {
                    return Err(Error::DegenerateInput(
                        "chain element not reduced against an earlier one".into(),
                    ));
                }
            }
        }
        Ok(AscendingSet { polys })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_contradictory(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn initials(&self) -> Vec<Polynomial> {
        self.polys
            .iter()
            .map(|c| c.main_var_view().expect("chain element is nonconstant").initial)
            .collect()
    }
}

enum Selection {
    Contradictory(usize),
    Chain(Vec<usize>),
}

fn candidate_less(a: &Polynomial, b: &Polynomial) -> bool {
    rank_of(a)
        .cmp(&rank_of(b))
        .then_with(|| a.num_terms().cmp(&b.num_terms()))
        .then_with(|| a.cmp(b))
        == Ordering::Less
}

fn basic_set_indices(pool: &[Polynomial]) -> Selection {
    if let Some(i) = pool.iter().position(|p| p.is_constant()) {
        return Selection::Contradictory(i);
    }
    let mut chain: Vec<usize> = Vec::new();
    let mut last_cls: Option<usize> = None;
    loop {
        let mut best: Option<usize> = None;
        'cand: for (i, p) in pool.iter().enumerate() {
            let c = p.cls().expect("constants were handled above");
            if let Some(l) = last_cls {
                if c <= l {
                    continue;
                }
            }
            for &j in &chain {
                if !is_reduced(p, &pool[j]) {
                    continue 'cand;
                }
            }
            best = match best {
                None => Some(i),
                Some(b) if candidate_less(p, &pool[b]) => Some(i),
                keep => keep,
            };
        }
        match best {
            Some(i) => {
                last_cls = pool[i].cls();
                chain.push(i);
            }
            None => return Selection::Chain(chain),
        }
    }
}

/// Minimal-rank ascending chain selectable from the pool, greedily from the
/// lowest main variable up, admitting only elements reduced against
/// everything already chosen. Ties go to fewer terms, then to the canonical
/// term-sequence order.
pub fn basic_set(pool: &[Polynomial]) -> Result<AscendingSet> {
    if pool.is_empty() || pool.iter().any(|p| p.is_zero()) {
        return Err(Error::DegenerateInput(
            "basic set needs a nonempty pool without zero polynomials".into(),
        ));
    }
    match basic_set_indices(pool) {
        Selection::Contradictory(i) => AscendingSet::new(vec![pool[i].clone()]),
        Selection::Chain(idx) => {
            AscendingSet::new(idx.into_iter().map(|i| pool[i].clone()).collect())
        }
    }
}

/// Wu's partial order on chains: compare ranks position by position; a
/// strictly longer chain with an equal prefix is lower.
fn chain_ranks_less(a: &[Rank], b: &[Rank]) -> bool {
    for (ra, rb) in a.iter().zip(b.iter()) {
        match ra.cmp(rb) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
    }
    a.len() > b.len()
}

/// Derivation record for a pool element: poly == multiplier * source poly
/// minus the sum of cofactor * chain-element products. Pool entries are
/// never mutated, so the indices stay valid.
#[derive(Debug, Clone)]
struct Cert {
    multiplier: Polynomial,
    source: usize,
    cofactors: Vec<(Polynomial, usize)>,
}

#[derive(Debug)]
struct PoolEntry {
    poly: Polynomial,
    cert: Option<Cert>,
}

#[cfg(debug_assertions)]
fn cert_holds(pool: &[PoolEntry], poly: &Polynomial, cert: &Cert) -> bool {
    let mut rhs = &cert.multiplier * &pool[cert.source].poly;
    for (q, i) in &cert.cofactors {
        rhs = &rhs - &(q * &pool[*i].poly);
    }
    rhs == *poly
}

#[derive(Debug)]
pub struct CharsetOutcome {
    pub charset: AscendingSet,
    /// Initial of each chain element, in chain order.
    pub initials: Vec<Polynomial>,
    /// Expanded running products of the initials: element k is the product
    /// of the first k+1 initials.
    pub initial_products: Vec<Polynomial>,
    /// True when reduction produced a nonzero constant: the system has no
    /// zeros at all.
    pub inconsistent: bool,
    /// The input closed under reduction: every nonzero remainder that
    /// appeared along the way, primitive-normalized.
    pub final_system: Vec<Polynomial>,
}

/// Divides a derived univariate head by factors of the later initials when
/// the whole derivation record divides exactly. The quotient is still in
/// the ideal, so it can join the pool and shrink the chain's head.
fn refine_head(pool: &mut Vec<PoolEntry>, idx: &[usize]) -> bool {
    let head_i = idx[0];
    let Some(cert) = pool[head_i].cert.clone() else {
        return false;
    };
    let head = pool[head_i].poly.clone();
    let uv = head.used_vars();
    if uv.len() != 1 {
        return false;
    }
    let v = uv[0];
    let mut cands: Vec<Polynomial> = Vec::new();
    for &j in &idx[1..] {
        let mv = pool[j].poly.main_var_view().expect("chain element is nonconstant");
        if mv.initial.is_constant() || mv.initial.used_vars() != [v] {
            continue;
        }
        cands.push(mv.initial);
    }
    if cands.is_empty() {
        return false;
    }
    let Ok(phis) = coprime_split(&cands) else {
        return false;
    };
    let mut cur = head;
    let mut mult = cert.multiplier.clone();
    let mut cofs = cert.cofactors.clone();
    let mut changed = false;
    for phi in &phis {
        loop {
            let Some(c2) = cur.divide_exact(phi) else { break };
            let Some(m2) = mult.divide_exact(phi) else { break };
            let Some(q2) = cofs
                .iter()
                .map(|(q, i)| q.divide_exact(phi).map(|d| (d, *i)))
                .collect::<Option<Vec<_>>>()
            else {
                break;
            };
            cur = c2;
            mult = m2;
            cofs = q2;
            changed = true;
        }
    }
    if !changed || pool.iter().any(|e| e.poly == cur) {
        return false;
    }
    debug_assert_eq!(cur.integer_primitive().0, cur);
    let cert = Cert {
        multiplier: mult,
        source: cert.source,
        cofactors: cofs,
    };
    #[cfg(debug_assertions)]
    debug_assert!(cert_holds(pool, &cur, &cert));
    pool.push(PoolEntry {
        poly: cur,
        cert: Some(cert),
    });
    true
}

/// Characteristic set of the system: a chain such that every input
/// polynomial pseudo-reduces to zero against it. The returned final system
/// is the input together with every remainder adjoined along the way.
pub fn wu_char_set(system: &[Polynomial]) -> Result<CharsetOutcome> {
    let mut order: Option<Arc<VarOrder>> = None;
    let mut pool: Vec<PoolEntry> = Vec::new();
    for f in system {
        if f.is_zero() {
            continue;
        }
        order.get_or_insert_with(|| f.order().clone());
        let (g, _) = f.integer_primitive();
        if !pool.iter().any(|e| e.poly == g) {
            pool.push(PoolEntry { poly: g, cert: None });
        }
    }
    let Some(order) = order else {
        return Err(Error::DegenerateInput(
            "the system has no nonzero polynomial".into(),
        ));
    };
    let mut prev_ranks: Option<Vec<Rank>> = None;
    loop {
        match basic_set_indices(&pool.iter().map(|e| e.poly.clone()).collect::<Vec<_>>()) {
            Selection::Contradictory(i) => {
                let charset = AscendingSet::new(vec![pool[i].poly.clone()])?;
                return Ok(CharsetOutcome {
                    charset,
                    initials: Vec::new(),
                    initial_products: Vec::new(),
                    inconsistent: true,
                    final_system: pool.into_iter().map(|e| e.poly).collect(),
                });
            }
            Selection::Chain(idx) => {
                let ranks: Vec<Rank> = idx.iter().map(|&i| rank_of(&pool[i].poly)).collect();
                if let Some(prev) = &prev_ranks {
                    debug_assert!(
                        chain_ranks_less(&ranks, prev),
                        "chain rank must strictly descend across rounds"
                    );
                }
                prev_ranks = Some(ranks);
                let chain: Vec<Polynomial> =
                    idx.iter().map(|&i| pool[i].poly.clone()).collect();
                let mut fresh: Vec<PoolEntry> = Vec::new();
                for (k, e) in pool.iter().enumerate() {
                    if idx.contains(&k) {
                        continue;
                    }
                    let mut ps = prem_seq(&e.poly, &chain);
                    if ps.remainder.is_zero() {
                        continue;
                    }
                    let (rn, s) = ps.remainder.integer_primitive();
                    ps.scale(&s);
                    debug_assert_eq!(ps.remainder, rn);
                    debug_assert!(
                        !pool.iter().any(|pe| pe.poly == rn),
                        "a reduced nonzero remainder cannot already be in the pool"
                    );
                    if fresh.iter().any(|pe| pe.poly == rn) {
                        continue;
                    }
                    let cert = Cert {
                        multiplier: ps.multiplier,
                        source: k,
                        cofactors: ps
                            .steps
                            .into_iter()
                            .map(|st| (st.cofactor, idx[st.chain_index]))
                            .collect(),
                    };
                    #[cfg(debug_assertions)]
                    debug_assert!(cert_holds(&pool, &rn, &cert));
                    fresh.push(PoolEntry {
                        poly: rn,
                        cert: Some(cert),
                    });
                }
                if !fresh.is_empty() {
                    pool.extend(fresh);
                    continue;
                }
                if refine_head(&mut pool, &idx) {
                    continue;
                }
                let charset = AscendingSet::new(chain)?;
                let initials = charset.initials();
                let mut initial_products = Vec::with_capacity(initials.len());
                let mut acc = Polynomial::one(&order);
                for i in &initials {
                    acc = &acc * i;
                    initial_products.push(acc.clone());
                }
                return Ok(CharsetOutcome {
                    charset,
                    initials,
                    initial_products,
                    inconsistent: false,
                    final_system: pool.into_iter().map(|e| e.poly).collect(),
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::prem::prem_seq;

    fn ord3() -> Arc<VarOrder> {
        VarOrder::new(vec!["x", "y", "z"])
    }

    #[test]
    fn basic_set_takes_only_strictly_reduced_elements() {
        let ord = ord3();
        let pool = vec![
            parse_polynomial("x^2 + y", &ord).unwrap(),
            parse_polynomial("4*x*y + 2*y^2", &ord).unwrap(),
            parse_polynomial("(x + y)*z^2 + z + 1", &ord).unwrap(),
        ];
        // the z-element has degree 1 in y, which is not below the leading
        // degree of x^2 + y, so it cannot join the chain
        let b = basic_set(&pool).unwrap();
        assert_eq!(b.polys(), &[pool[0].clone()]);
    }

    #[test]
    fn basic_set_reports_contradictions() {
        let ord = ord3();
        let pool = vec![
            parse_polynomial("x - 1", &ord).unwrap(),
            parse_polynomial("3", &ord).unwrap(),
        ];
        let b = basic_set(&pool).unwrap();
        assert!(b.is_contradictory());
    }

    #[test]
    fn already_triangular_systems_come_back_unchanged() {
        let ord = ord3();
        let sys = vec![
            parse_polynomial("x^2 - 1", &ord).unwrap(),
            parse_polynomial("x*y - 1", &ord).unwrap(),
        ];
        let out = wu_char_set(&sys).unwrap();
        assert!(!out.inconsistent);
        assert_eq!(out.charset.polys(), &sys[..]);
        assert_eq!(out.initials[0], parse_polynomial("1", &ord).unwrap());
        assert_eq!(out.initials[1], parse_polynomial("x", &ord).unwrap());
        assert_eq!(out.initial_products[1], parse_polynomial("x", &ord).unwrap());
    }

    #[test]
    fn incompatible_constraints_collapse_to_a_constant() {
        let ord = ord3();
        let sys = vec![
            parse_polynomial("x", &ord).unwrap(),
            parse_polynomial("x - 1", &ord).unwrap(),
        ];
        let out = wu_char_set(&sys).unwrap();
        assert!(out.inconsistent);
        assert!(out.charset.is_contradictory());
    }

    #[test]
    fn every_input_reduces_to_zero_against_the_charset() {
        let ord = ord3();
        let sys = vec![
            parse_polynomial("x^2 + y", &ord).unwrap(),
            parse_polynomial("4*x*y + 2*y^2", &ord).unwrap(),
            parse_polynomial("(x + y)*z^2 + z + 1", &ord).unwrap(),
        ];
        let out = wu_char_set(&sys).unwrap();
        assert!(!out.inconsistent);
        for f in &sys {
            assert!(prem_seq(f, out.charset.polys()).remainder.is_zero());
        }
        // chain covers all three variables for this zero-dimensional input
        assert_eq!(out.charset.len(), 3);
    }

    #[test]
    fn ranks_order_constants_below_everything() {
        let ord = ord3();
        let c = parse_polynomial("5", &ord).unwrap();
        let f = parse_polynomial("x", &ord).unwrap();
        let g = parse_polynomial("y^3", &ord).unwrap();
        assert_eq!(rank_compare(&c, &f), Ordering::Less);
        assert_eq!(rank_compare(&f, &g), Ordering::Less);
        assert!(is_reduced(&c, &f));
        assert!(!is_reduced(&g, &g));
    }
}
