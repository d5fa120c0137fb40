//! Worklist decomposition of a zero-dimensional system into components
//! whose zeros, with local multiplicity, exactly partition the input's
//! zeros. Each branch follows a characteristic set; vanishing initials
//! spawn child systems carrying saturation conditions.

use std::collections::VecDeque;
use std::sync::Arc;

use rayon::prelude::*;

use crate::charset::{is_reduced, wu_char_set};
use crate::poly::Polynomial;
use crate::prem::prem_seq;
use crate::univar::{coprime_split, gcd_many, gcd_uni, rational_roots, squarefree_part, yun_decompose};
use crate::vars::VarOrder;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSpec {
    /// Product of the total degrees of the input polynomials.
    Bezout,
    Fixed(u32),
}

#[derive(Debug, Clone, Copy)]
pub struct StrategyFlags {
    /// On a vanishing initial, retry the branch with the element's reductum
    /// before giving up on triangular form.
    pub prop3: bool,
    /// Branch on the coprime factors of univariate initials instead of the
    /// initials themselves.
    pub factor_initials: bool,
    /// Shrink the multiplicity bound as fully counted components are
    /// emitted. Forces sequential processing.
    pub update_bound: bool,
    /// Post-process triangular components by splitting their univariate
    /// heads into coprime branches.
    pub split_components: bool,
    pub parallel: bool,
}

impl Default for StrategyFlags {
    fn default() -> Self {
        StrategyFlags {
            prop3: true,
            factor_initials: false,
            update_bound: false,
            split_components: false,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// An ascending chain; zeros come from back-substitution.
    Triangular,
    /// Generators kept as a plain system: the branch could not be put in
    /// triangular form without losing zeros.
    Unresolved,
}

#[derive(Debug, Clone)]
pub struct Component {
    pub polys: Vec<Polynomial>,
    /// Zeros count only where every factor here is nonzero.
    pub saturation: Vec<Polynomial>,
    pub kind: ComponentKind,
    /// Human-readable derivation trace, one entry per branching step.
    pub provenance: Vec<String>,
    /// Position in the branch tree; components sort by it.
    pub path: Vec<usize>,
    /// Multiplicity bound in effect when this component was emitted.
    pub bound_used: u32,
}

impl Component {
    pub fn saturation_product(&self) -> Polynomial {
        let order = self.polys[0].order();
        let mut acc = Polynomial::one(order);
        for f in &self.saturation {
            acc = &acc * f;
        }
        acc
    }
}

#[derive(Debug)]
pub struct DecompositionResult {
    pub components: Vec<Component>,
    pub order: Arc<VarOrder>,
    /// Bound the run started from.
    pub bound: u32,
    /// Bound left after any updates; equals `bound` unless updating was on.
    pub final_bound: u32,
    pub flags: StrategyFlags,
}

impl DecompositionResult {
    pub fn triangular(&self) -> impl Iterator<Item = &Component> {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Triangular)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &Component> {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Unresolved)
    }
}

/// Product of the total degrees: an upper bound for the number of zeros
/// counted with multiplicity, hence for any single local multiplicity.
pub fn bezout_bound(system: &[Polynomial]) -> Result<u32> {
    if system.is_empty() {
        return Err(Error::DegenerateInput("empty system".into()));
    }
    let mut acc: u64 = 1;
    for f in system {
        let d = f.total_degree();
        if f.is_zero() || d == 0 {
            return Err(Error::DegenerateInput(
                "the degree bound needs every polynomial nonconstant".into(),
            ));
        }
        acc = acc.saturating_mul(d as u64);
    }
    u32::try_from(acc).map_err(|_| Error::Unsupported("degree bound overflows".into()))
}

#[derive(Debug)]
struct Task {
    system: Vec<Polynomial>,
    saturation: Vec<Polynomial>,
    path: Vec<usize>,
    notes: Vec<String>,
}

fn merge_factors<I>(base: &[Polynomial], extra: I) -> Vec<Polynomial>
where
    I: IntoIterator<Item = Polynomial>,
{
    let mut out = base.to_vec();
    for f in extra {
        if f.is_constant() {
            continue;
        }
        let (g, _) = f.integer_primitive();
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// True when the zeros demanded by `initial == 0` are all excluded by the
/// saturation factors, so the branch would be empty: either the expanded
/// factor product is an exact multiple of the initial, or (univariate case)
/// every root of the initial is a root of the same-variable factors.
fn branch_excluded(initial: &Polynomial, sat: &[Polynomial]) -> bool {
    if sat.is_empty() {
        return false;
    }
    let deg_sum: u32 = sat.iter().map(|f| f.total_degree()).sum();
    if deg_sum <= 64 {
        let order = initial.order();
        let mut prod = Polynomial::one(order);
        for f in sat {
            prod = &prod * f;
        }
        if prod.divide_exact(initial).is_some() {
            return true;
        }
    }
    let uv = initial.used_vars();
    if uv.len() == 1 {
        let v = uv[0];
        let same: Vec<&Polynomial> = sat.iter().filter(|f| f.used_vars() == [v]).collect();
        if !same.is_empty() {
            let mut prod = Polynomial::one(initial.order());
            for f in same {
                prod = &prod * f;
            }
            let s = squarefree_part(&prod, v);
            let si = squarefree_part(initial, v);
            if s.divide_exact(&si).is_some() {
                return true;
            }
        }
    }
    false
}

struct FactorPlan {
    /// Every coprime factor of the nonconstant initials, for the component
    /// saturation.
    factors: Vec<Polynomial>,
    /// (adjoined factor, saturation, note) for each branch task.
    seeds: Vec<(Polynomial, Vec<Polynomial>, String)>,
}

fn factor_strategy(task: &Task, initials: &[Polynomial], m: u32) -> Option<FactorPlan> {
    let nonconst: Vec<Polynomial> = initials
        .iter()
        .filter(|i| !i.is_constant())
        .cloned()
        .collect();
    if nonconst.is_empty() {
        return None;
    }
    if nonconst.iter().any(|i| i.used_vars().len() != 1) {
        return None;
    }
    let factors = coprime_split(&nonconst).ok()?;
    let mut seeds = Vec::new();
    let mut prefix: Vec<Polynomial> = Vec::new();
    for g in &factors {
        let sat = merge_factors(&task.saturation, prefix.iter().cloned());
        if !branch_excluded(g, &sat) {
            if task.system.contains(&g.pow(m)) {
                // the branch system would repeat an existing task
                return None;
            }
            let note = format!("branch on initial factor {g}: adjoined its power ({g})^{m}");
            seeds.push((g.clone(), sat, note));
        }
        prefix.push(g.clone());
    }
    Some(FactorPlan { factors, seeds })
}

fn push_unique(mut system: Vec<Polynomial>, p: Polynomial) -> Vec<Polynomial> {
    debug_assert!(!system.contains(&p), "adjoined remainder must be new");
    if !system.contains(&p) {
        system.push(p);
    }
    system
}

fn process_task(
    task: &Task,
    m: u32,
    flags: StrategyFlags,
    nvars: usize,
) -> Result<(Vec<Component>, Vec<Task>)> {
    let out = wu_char_set(&task.system)?;
    if out.inconsistent {
        return Ok((Vec::new(), Vec::new()));
    }
    let chain = out.charset.polys().to_vec();
    if chain.len() < nvars {
        return Err(Error::NotZeroDimensional(format!(
            "a characteristic set determines only {} of {} variables",
            chain.len(),
            nvars
        )));
    }
    let initials = &out.initials;
    let mut comps: Vec<Component> = Vec::new();
    let mut children: Vec<Task> = Vec::new();
    let mut removed = false;
    let mut slot = 0usize;

    let comp = |sat: Vec<Polynomial>, note: &str| Component {
        polys: chain.clone(),
        saturation: sat,
        kind: ComponentKind::Triangular,
        provenance: task
            .notes
            .iter()
            .cloned()
            .chain([note.to_string()])
            .collect(),
        path: task.path.iter().cloned().chain([0]).collect(),
        bound_used: m,
    };

    if flags.factor_initials {
        if let Some(plan) = factor_strategy(task, initials, m) {
            for (k, ii) in initials.iter().enumerate().skip(1) {
                if ii.is_constant() {
                    continue;
                }
                if prem_seq(&ii.pow(m), &chain).remainder.is_zero() {
                    // no zero of the chain satisfies the saturation
                    removed = true;
                    let _ = k;
                    break;
                }
            }
            if !removed {
                let sat = merge_factors(&task.saturation, plan.factors.iter().cloned());
                comps.push(comp(
                    sat,
                    "characteristic set, saturated by the factored initials",
                ));
            }
            for (g, sat, note) in plan.seeds {
                slot += 1;
                children.push(Task {
                    system: push_unique(task.system.clone(), g.pow(m)),
                    saturation: sat,
                    path: task.path.iter().cloned().chain([slot]).collect(),
                    notes: task.notes.iter().cloned().chain([note]).collect(),
                });
            }
            if flags.split_components {
                comps = comps.into_iter().flat_map(split_component).collect();
            }
            return Ok((comps, children));
        }
    }

    for k in 1..chain.len() {
        let ii = &initials[k];
        if ii.is_constant() {
            continue;
        }
        let branch_sat = merge_factors(
            &task.saturation,
            initials[..k].iter().filter(|i| !i.is_constant()).cloned(),
        );
        if branch_excluded(ii, &branch_sat) {
            continue;
        }
        let r = prem_seq(&ii.pow(m), &chain).remainder;
        if !r.is_zero() {
            let (rn, _) = r.integer_primitive();
            debug_assert!(chain.iter().all(|c| is_reduced(&rn, c)));
            slot += 1;
            children.push(Task {
                system: push_unique(out.final_system.clone(), rn.clone()),
                saturation: branch_sat,
                path: task.path.iter().cloned().chain([slot]).collect(),
                notes: task
                    .notes
                    .iter()
                    .cloned()
                    .chain([format!(
                        "level {}: initial {} may vanish; adjoined the reduced power {}",
                        k + 1,
                        ii,
                        rn
                    )])
                    .collect(),
            });
            continue;
        }
        // the whole chain component lies where this initial vanishes, so
        // keeping it alongside the saturation would count nothing
        removed = true;
        if flags.prop3 {
            let mv = chain[k].main_var_view().expect("chain element is nonconstant");
            if !mv.reductum.is_zero() {
                let r2 = prem_seq(&mv.reductum.pow(m), &chain).remainder;
                if !r2.is_zero() {
                    let (rn, _) = r2.integer_primitive();
                    slot += 1;
                    children.push(Task {
                        system: push_unique(out.final_system.clone(), rn.clone()),
                        saturation: branch_sat,
                        path: task.path.iter().cloned().chain([slot]).collect(),
                        notes: task
                            .notes
                            .iter()
                            .cloned()
                            .chain([format!(
                                "level {}: initial vanishes on the whole branch; adjoined the reduced reductum power {}",
                                k + 1,
                                rn
                            )])
                            .collect(),
                    });
                    continue;
                }
            }
        }
        slot += 1;
        let cand = Component {
            polys: out.final_system.clone(),
            saturation: branch_sat,
            kind: ComponentKind::Unresolved,
            provenance: task
                .notes
                .iter()
                .cloned()
                .chain([format!(
                    "level {}: initial power reduced to zero; generators kept unresolved",
                    k + 1
                )])
                .collect(),
            path: task.path.iter().cloned().chain([slot]).collect(),
            bound_used: m,
        };
        if !comps
            .iter()
            .any(|c| c.kind == ComponentKind::Unresolved && c.polys == cand.polys && c.saturation == cand.saturation)
        {
            comps.push(cand);
        }
    }

    if !removed {
        let sat = merge_factors(
            &task.saturation,
            initials.iter().filter(|i| !i.is_constant()).cloned(),
        );
        comps.insert(0, comp(sat, "characteristic set of the branch system"));
    }
    if flags.split_components {
        comps = comps.into_iter().flat_map(split_component).collect();
    }
    Ok((comps, children))
}

/// All roots of `phi` are already excluded by same-variable saturation
/// factors.
fn head_factor_excluded(phi: &Polynomial, sat: &[Polynomial], v: usize) -> bool {
    let same: Vec<&Polynomial> = sat.iter().filter(|f| f.used_vars() == [v]).collect();
    if same.is_empty() {
        return false;
    }
    let mut prod = Polynomial::one(phi.order());
    for f in same {
        prod = &prod * f;
    }
    squarefree_part(&prod, v).divide_exact(phi).is_some()
}

/// Divide out of `c` the part of its content (as a polynomial in its main
/// variable) that shares no root with `phi`: invertible on the branch, so
/// the zeros and their multiplicities stay put.
fn strip_invertible_content(c: &Polynomial, v: usize, phi: &Polynomial) -> Polynomial {
    let Some(w) = c.cls() else {
        return c.clone();
    };
    let mut coeffs = Vec::new();
    for e in 0..=c.degree_in(w) {
        let u = c.coeff_of(w, e);
        if u.is_zero() {
            continue;
        }
        if !u.used_vars().iter().all(|&x| x == v) {
            return c.clone();
        }
        coeffs.push(u);
    }
    let mut g = gcd_many(&coeffs, v);
    if g.is_constant() {
        return c.clone();
    }
    loop {
        let h = gcd_uni(&g, phi, v);
        if h.is_constant() {
            break;
        }
        g = g.divide_exact(&h).expect("gcd divides");
    }
    if g.is_constant() {
        return c.clone();
    }
    c.divide_exact(&g).expect("common coefficient factor divides")
}

/// Split a triangular component along the coprime factors of its univariate
/// head, keeping each factor's multiplicity as a power. Factors whose roots
/// the saturation excludes are dropped; later chain elements lose content
/// invertible on the branch.
fn split_component(comp: Component) -> Vec<Component> {
    if comp.kind != ComponentKind::Triangular {
        return vec![comp];
    }
    let head = &comp.polys[0];
    let uv = head.used_vars();
    if uv.len() != 1 {
        return vec![comp];
    }
    let v = uv[0];
    let order = head.order().clone();
    let mut pieces: Vec<(Polynomial, u32)> = Vec::new();
    for (a, e) in yun_decompose(head, v) {
        let mut rest = a.clone();
        for (root, _) in rational_roots(&a, v) {
            let lin = linear_from_root(&order, v, &root);
            rest = rest.divide_exact(&lin).expect("root factor divides");
            pieces.push((lin, e));
        }
        if !rest.is_constant() {
            pieces.push((rest, e));
        }
    }
    if pieces.len() <= 1 {
        return vec![comp];
    }
    let mut out = Vec::new();
    for (j, (phi, e)) in pieces.iter().enumerate() {
        if head_factor_excluded(phi, &comp.saturation, v) {
            continue;
        }
        let mut polys = vec![phi.pow(*e)];
        for c in &comp.polys[1..] {
            polys.push(strip_invertible_content(c, v, phi));
        }
        out.push(Component {
            polys,
            saturation: comp.saturation.clone(),
            kind: ComponentKind::Triangular,
            provenance: comp
                .provenance
                .iter()
                .cloned()
                .chain([format!("split off head factor {phi} with multiplicity {e}")])
                .collect(),
            path: comp.path.iter().cloned().chain([j]).collect(),
            bound_used: comp.bound_used,
        });
    }
    out
}

fn linear_from_root(
    order: &Arc<VarOrder>,
    v: usize,
    root: &num_rational::BigRational,
) -> Polynomial {
    let x = Polynomial::var(order, v);
    let c = Polynomial::constant(order, root.clone());
    let (lin, _) = (&x - &c).integer_primitive();
    lin
}

/// Emitted components with constant initials and a saturation certified
/// nonvanishing on the chain count exactly the product of the leading
/// degrees, so that much can come off the remaining bound.
fn apply_bound_update(m: u32, comp: &Component) -> u32 {
    if comp.kind != ComponentKind::Triangular {
        return m;
    }
    let head = &comp.polys[0];
    let head_var = match head.used_vars()[..] {
        [v] => Some(v),
        _ => None,
    };
    let mut count: u64 = 1;
    for c in &comp.polys {
        let Some(mv) = c.main_var_view() else {
            return m;
        };
        if !mv.initial.is_constant() {
            return m;
        }
        count *= mv.ldeg as u64;
    }
    for f in &comp.saturation {
        let r = prem_seq(f, &comp.polys).remainder;
        if r.is_zero() {
            // the factor vanishes on every chain zero: the component is
            // empty and counts nothing
            return m;
        }
        if r.is_constant() {
            continue;
        }
        let shares_no_root = match head_var {
            Some(v) => f.used_vars() == [v] && gcd_uni(f, head, v).is_constant(),
            None => false,
        };
        if !shares_no_root {
            return m;
        }
    }
    let count = u32::try_from(count).unwrap_or(u32::MAX);
    m.saturating_sub(count).max(1)
}

/// Decompose the system's zeros into components that partition them with
/// multiplicity. `bound` caps any single local multiplicity; the product
/// of total degrees always suffices.
pub fn zero_decomp_multi(
    system: &[Polynomial],
    bound: BoundSpec,
    flags: StrategyFlags,
) -> Result<DecompositionResult> {
    let mut root_system: Vec<Polynomial> = Vec::new();
    for f in system {
        if f.is_zero() {
            continue;
        }
        let (g, _) = f.integer_primitive();
        if !root_system.contains(&g) {
            root_system.push(g);
        }
    }
    let Some(first) = root_system.first() else {
        return Err(Error::DegenerateInput(
            "the system has no nonzero polynomial".into(),
        ));
    };
    let order = first.order().clone();
    let nvars = order.len();
    let m0 = match bound {
        BoundSpec::Bezout => bezout_bound(&root_system)?,
        BoundSpec::Fixed(0) => {
            return Err(Error::DegenerateInput("the bound must be at least 1".into()))
        }
        BoundSpec::Fixed(k) => k,
    };
    let root = Task {
        system: root_system,
        saturation: Vec::new(),
        path: Vec::new(),
        notes: vec!["input system".to_string()],
    };
    let mut components: Vec<Component> = Vec::new();
    let mut m = m0;
    if flags.parallel && !flags.update_bound {
        let mut wave = vec![root];
        while !wave.is_empty() {
            let results: Vec<Result<(Vec<Component>, Vec<Task>)>> = wave
                .par_iter()
                .map(|t| process_task(t, m0, flags, nvars))
                .collect();
            let mut next = Vec::new();
            for r in results {
                let (cs, ch) = r?;
                components.extend(cs);
                next.extend(ch);
            }
            wave = next;
        }
    } else {
        let mut queue: VecDeque<Task> = VecDeque::new();
        queue.push_back(root);
        while let Some(t) = queue.pop_front() {
            let (cs, ch) = process_task(&t, m, flags, nvars)?;
            if flags.update_bound {
                for c in &cs {
                    m = apply_bound_update(m, c);
                }
            }
            components.extend(cs);
            queue.extend(ch);
        }
    }
    components.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(DecompositionResult {
        components,
        order,
        bound: m0,
        final_bound: m,
        flags,
    })
}

/// Number of zeros, with multiplicity, of a triangular component whose
/// initials are certified nonvanishing where the component lives: the
/// product of the leading degrees. None when no certificate is available.
pub fn algebraic_zero_count(comp: &Component) -> Option<u64> {
    if comp.kind != ComponentKind::Triangular {
        return None;
    }
    let head = &comp.polys[0];
    let head_var = match head.used_vars()[..] {
        [v] => Some(v),
        _ => None,
    };
    let nonvanishing = |f: &Polynomial| -> bool {
        if f.is_constant() {
            return !f.is_zero();
        }
        let r = prem_seq(f, &comp.polys).remainder;
        if !r.is_zero() && r.is_constant() {
            return true;
        }
        match head_var {
            Some(v) => f.used_vars() == [v] && gcd_uni(f, head, v).is_constant(),
            None => false,
        }
    };
    let mut count: u64 = 1;
    for c in &comp.polys {
        let mv = c.main_var_view()?;
        count *= mv.ldeg as u64;
        if !nonvanishing(&mv.initial) {
            return None;
        }
    }
    // excluded points would make the count fall short of the degree product
    for f in &comp.saturation {
        if !nonvanishing(f) {
            return None;
        }
    }
    Some(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_system};

    fn sys2(lines: &[&str]) -> (Arc<VarOrder>, Vec<Polynomial>) {
        let text = format!("vars x, y\n{}\n", lines.join("\n"));
        parse_system(&text).unwrap()
    }

    #[test]
    fn degree_bound_rejects_constants() {
        let (ord, mut polys) = sys2(&["x^2 - 1", "y - x"]);
        assert_eq!(bezout_bound(&polys).unwrap(), 2);
        polys.push(parse_polynomial("5", &ord).unwrap());
        assert!(bezout_bound(&polys).is_err());
    }

    #[test]
    fn triangular_input_is_a_single_component() {
        let (_, polys) = sys2(&["x^2 - 1", "y - x"]);
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, StrategyFlags::default()).unwrap();
        assert_eq!(res.components.len(), 1);
        assert_eq!(res.components[0].kind, ComponentKind::Triangular);
        assert_eq!(res.components[0].polys, polys);
        assert!(res.components[0].saturation.is_empty());
    }

    #[test]
    fn vanishing_initial_spawns_a_branch_that_may_die() {
        let (ord, polys) = sys2(&["x^2 - x", "x*y - 1"]);
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, StrategyFlags::default()).unwrap();
        // x = 0 kills the second equation, so only the saturated chain stays
        assert_eq!(res.components.len(), 1);
        let c = &res.components[0];
        assert_eq!(c.kind, ComponentKind::Triangular);
        assert_eq!(c.saturation, vec![parse_polynomial("x", &ord).unwrap()]);
    }

    #[test]
    fn splitting_strips_invertible_content() {
        let (ord, polys) = sys2(&["x^2 - x", "x*y - 1"]);
        let flags = StrategyFlags {
            split_components: true,
            ..StrategyFlags::default()
        };
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, flags).unwrap();
        assert_eq!(res.components.len(), 1);
        let c = &res.components[0];
        assert_eq!(c.polys[0], parse_polynomial("x - 1", &ord).unwrap());
        assert_eq!(c.polys[1], parse_polynomial("x*y - 1", &ord).unwrap());
    }

    #[test]
    fn empty_branch_vanishes_entirely() {
        // x = 0 forces 1 = 0; the chain component is dropped because its
        // zeros all violate the saturation, and the retry branch dies
        let (_, polys) = sys2(&["x^2", "x*y + 1"]);
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, StrategyFlags::default()).unwrap();
        assert!(res.components.is_empty());
    }

    #[test]
    fn without_the_reductum_retry_the_branch_stays_unresolved() {
        let (_, polys) = sys2(&["x^2", "x*y + 1"]);
        let flags = StrategyFlags {
            prop3: false,
            ..StrategyFlags::default()
        };
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, flags).unwrap();
        assert_eq!(res.components.len(), 1);
        assert_eq!(res.components[0].kind, ComponentKind::Unresolved);
    }

    #[test]
    fn factoring_initials_keeps_the_same_zeros() {
        let (ord, polys) = sys2(&["x^2 - x", "x*y - 1"]);
        let flags = StrategyFlags {
            factor_initials: true,
            ..StrategyFlags::default()
        };
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, flags).unwrap();
        assert_eq!(res.components.len(), 1);
        let c = &res.components[0];
        assert_eq!(c.kind, ComponentKind::Triangular);
        assert_eq!(c.saturation, vec![parse_polynomial("x", &ord).unwrap()]);
    }

    #[test]
    fn bound_updates_count_fully_certified_components() {
        let (_, polys) = sys2(&["x^2 - 1", "y - x"]);
        let flags = StrategyFlags {
            update_bound: true,
            ..StrategyFlags::default()
        };
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, flags).unwrap();
        assert_eq!(res.bound, 2);
        assert_eq!(res.final_bound, 1);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let (_, polys) = sys2(&["x^2 - x", "x*y - 1"]);
        let seq = zero_decomp_multi(&polys, BoundSpec::Bezout, StrategyFlags::default()).unwrap();
        let flags = StrategyFlags {
            parallel: true,
            ..StrategyFlags::default()
        };
        let par = zero_decomp_multi(&polys, BoundSpec::Bezout, flags).unwrap();
        assert_eq!(seq.components.len(), par.components.len());
        for (a, b) in seq.components.iter().zip(par.components.iter()) {
            assert_eq!(a.polys, b.polys);
            assert_eq!(a.path, b.path);
        }
    }

    #[test]
    fn zero_count_certificates() {
        let (_, polys) = sys2(&["x^2 - 1", "y - x"]);
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, StrategyFlags::default()).unwrap();
        assert_eq!(algebraic_zero_count(&res.components[0]), Some(2));
        let (_, polys) = sys2(&["x^2 - x", "x*y - 1"]);
        let res = zero_decomp_multi(&polys, BoundSpec::Bezout, StrategyFlags::default()).unwrap();
        // initial x is invertible on the head x^2 - x only up to its root 0,
        // which the saturation excludes, but the gcd with the head is not
        // constant, so no certificate
        assert_eq!(algebraic_zero_count(&res.components[0]), None);
    }
}
