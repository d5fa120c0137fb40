use crate::poly::Polynomial;

/// Result of pseudo-division of f by g along one variable.
/// Identity: initial(g)^power * f == quotient * g + remainder,
/// where initial(g) is the leading coefficient of g in that variable.
#[derive(Debug, Clone)]
pub struct Prem {
    pub remainder: Polynomial,
    pub quotient: Polynomial,
    pub power: u32,
}

/// Pseudo-remainder of f by g in x_v. The divisor's initial multiplies f
/// once per elimination step, not once per degree gap, so the power stays
/// as small as the term structure allows.
pub fn prem(f: &Polynomial, g: &Polynomial, v: usize) -> Prem {
    let (dg, ig, _) = g.view_in(v);
    assert!(dg > 0, "divisor must involve the eliminated variable");
    let order = f.order().clone();
    let mut r = f.clone();
    let mut q = Polynomial::zero(&order);
    let mut power = 0u32;
    while !r.is_zero() {
        let (dr, lr, _) = r.view_in(v);
        if dr < dg {
            break;
        }
        let shift = lr.mul_var_pow(v, dr - dg);
        r = &(&ig * &r) - &(&shift * g);
        q = &(&ig * &q) + &shift;
        power += 1;
        debug_assert!(r.is_zero() || r.degree_in(v) < dr);
    }
    Prem {
        remainder: r,
        quotient: q,
        power,
    }
}

#[derive(Debug, Clone)]
pub struct PremSeqStep {
    pub chain_index: usize,
    pub cofactor: Polynomial,
}

/// Reduction of f by an ascending chain, highest main variable first.
/// Identity: multiplier * f == sum(step.cofactor * chain[step.chain_index])
///           + remainder.
/// The multiplier is the expanded product of the initial powers used.
#[derive(Debug, Clone)]
pub struct PremSeq {
    pub remainder: Polynomial,
    pub multiplier: Polynomial,
    pub steps: Vec<PremSeqStep>,
}

impl PremSeq {
    /// Rescale the whole identity in place.
    pub fn scale(&mut self, s: &num_rational::BigRational) {
        self.remainder = self.remainder.mul_scalar(s);
        self.multiplier = self.multiplier.mul_scalar(s);
        for st in &mut self.steps {
            st.cofactor = st.cofactor.mul_scalar(s);
        }
    }
}

pub fn prem_seq(f: &Polynomial, chain: &[Polynomial]) -> PremSeq {
    let order = f.order().clone();
    let mut r = f.clone();
    let mut multiplier = Polynomial::one(&order);
    let mut steps: Vec<PremSeqStep> = Vec::new();
    for (j, c) in chain.iter().enumerate().rev() {
        if r.is_zero() {
            break;
        }
        let v = c.cls().expect("chain element must not be constant");
        let p = prem(&r, c, v);
        if p.power > 0 {
            let (_, ig, _) = c.view_in(v);
            let m = ig.pow(p.power);
            multiplier = &multiplier * &m;
            for st in &mut steps {
                st.cofactor = &st.cofactor * &m;
            }
            steps.push(PremSeqStep {
                chain_index: j,
                cofactor: p.quotient,
            });
            r = p.remainder;
        }
    }
    PremSeq {
        remainder: r,
        multiplier,
        steps,
    }
}
