//! Exact rational linear feasibility by Fourier–Motzkin elimination, with
//! strict inequalities carried through the combination step. Problems here
//! have at most a dozen variables, so no effort is spent on redundancy
//! removal beyond the obvious.

use num_traits::{One, Signed, Zero};

use crate::linalg::{qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Ge,
    Gt,
}

/// `coeffs · x REL rhs`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
    pub rel: Rel,
}

impl Constraint {
    pub fn eq(coeffs: Vec<Q>, rhs: Q) -> Constraint {
        Constraint { coeffs, rhs, rel: Rel::Eq }
    }

    pub fn ge(coeffs: Vec<Q>, rhs: Q) -> Constraint {
        Constraint { coeffs, rhs, rel: Rel::Ge }
    }

    pub fn gt(coeffs: Vec<Q>, rhs: Q) -> Constraint {
        Constraint { coeffs, rhs, rel: Rel::Gt }
    }
}

enum Step {
    /// Variable fixed by an equality: `x_v = (rhs - rest·x) / coeff`.
    Subst { var: usize, row: Constraint },
    /// Variable bounded by the surviving inequalities at elimination time.
    Bounds { var: usize, lowers: Vec<Constraint>, uppers: Vec<Constraint> },
}

fn eval_rest(row: &Constraint, var: usize, x: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (j, c) in row.coeffs.iter().enumerate() {
        if j != var && !c.is_zero() {
            acc += c * &x[j];
        }
    }
    acc
}

/// Find one exact solution of the system, or `None` when infeasible.
/// Variables are eliminated in ascending index order; the returned point is
/// deterministic (midpoints of the final bound intervals).
pub fn solve(n_vars: usize, constraints: &[Constraint]) -> Option<Vec<Q>> {
    let mut rows: Vec<Constraint> = constraints.to_vec();
    let mut steps: Vec<Step> = Vec::new();

    for v in 0..n_vars {
        if let Some(pos) = rows.iter().position(|r| r.rel == Rel::Eq && !r.coeffs[v].is_zero()) {
            let pivot = rows.remove(pos);
            let pc = pivot.coeffs[v].clone();
            for r in rows.iter_mut() {
                if r.coeffs[v].is_zero() {
                    continue;
                }
                let f = &r.coeffs[v] / &pc;
                for j in 0..n_vars {
                    let sub = &f * &pivot.coeffs[j];
                    r.coeffs[j] = &r.coeffs[j] - sub;
                }
                r.rhs = &r.rhs - &f * &pivot.rhs;
                r.coeffs[v] = Q::zero();
            }
            steps.push(Step::Subst { var: v, row: pivot });
            continue;
        }
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        let mut rest = Vec::new();
        for r in rows.drain(..) {
            if r.coeffs[v].is_zero() {
                rest.push(r);
            } else if r.coeffs[v].is_positive() {
                lowers.push(r);
            } else {
                uppers.push(r);
            }
        }
        // combine every lower with every upper
        for lo in &lowers {
            for up in &uppers {
                let a = lo.coeffs[v].clone();
                let b = -up.coeffs[v].clone();
                // lo: a x_v + lo_rest >= lo_rhs ; up: -b x_v + up_rest >= up_rhs
                // => b·lo_rest + a·up_rest >= b·lo_rhs + a·up_rhs
                let mut coeffs = vec![Q::zero(); n_vars];
                for j in 0..n_vars {
                    if j == v {
                        continue;
                    }
                    coeffs[j] = &b * &lo.coeffs[j] + &a * &up.coeffs[j];
                }
                let rhs = &b * &lo.rhs + &a * &up.rhs;
                let rel = if lo.rel == Rel::Gt || up.rel == Rel::Gt { Rel::Gt } else { Rel::Ge };
                rest.push(Constraint { coeffs, rhs, rel });
            }
        }
        rows = rest;
        steps.push(Step::Bounds { var: v, lowers, uppers });
    }

    // only constant rows remain
    for r in &rows {
        debug_assert!(r.coeffs.iter().all(|c| c.is_zero()));
        let ok = match r.rel {
            Rel::Eq => r.rhs.is_zero(),
            Rel::Ge => !r.rhs.is_positive(),
            Rel::Gt => r.rhs.is_negative(),
        };
        if !ok {
            return None;
        }
    }

    let mut x = vec![Q::zero(); n_vars];
    for step in steps.iter().rev() {
        match step {
            Step::Subst { var, row } => {
                x[*var] = (&row.rhs - eval_rest(row, *var, &x)) / &row.coeffs[*var];
            }
            Step::Bounds { var, lowers, uppers } => {
                let mut lo: Option<(Q, bool)> = None;
                for r in lowers {
                    let bound = (&r.rhs - eval_rest(r, *var, &x)) / &r.coeffs[*var];
                    let strict = r.rel == Rel::Gt;
                    if lo.as_ref().map_or(true, |(b, s)| bound > *b || (bound == *b && strict && !s)) {
                        lo = Some((bound, strict));
                    }
                }
                let mut hi: Option<(Q, bool)> = None;
                for r in uppers {
                    let bound = (&r.rhs - eval_rest(r, *var, &x)) / &r.coeffs[*var];
                    let strict = r.rel == Rel::Gt;
                    if hi.as_ref().map_or(true, |(b, s)| bound < *b || (bound == *b && strict && !s)) {
                        hi = Some((bound, strict));
                    }
                }
                x[*var] = match (lo, hi) {
                    (Some((l, ls)), Some((h, hs))) => {
                        if l == h {
                            if ls || hs {
                                return None;
                            }
                            l
                        } else {
                            (l + h) / qi(2)
                        }
                    }
                    (Some((l, ls)), None) => {
                        if ls {
                            l + Q::one()
                        } else {
                            l
                        }
                    }
                    (None, Some((h, hs))) => {
                        if hs {
                            h - Q::one()
                        } else {
                            h
                        }
                    }
                    (None, None) => Q::zero(),
                };
            }
        }
    }
    Some(x)
}
