//! Small exact linear programs: dense two-phase simplex with Bland's rule.
//!
//! Sizes here are tens of rows and columns, so the tableau is kept dense
//! and reduced costs are recomputed at every pivot.

use num_traits::{One, Signed, Zero};

use crate::rational::{Rat, RatVec};

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rat, x: RatVec },
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// `maximize c·x` over linear constraints, each variable either `x ≥ 0` or
/// free.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    nvars: usize,
    objective: RatVec,
    free: Vec<bool>,
    rows: Vec<(RatVec, Relation, Rat)>,
}

impl LinearProgram {
    pub fn new(nvars: usize) -> Self {
        LinearProgram {
            nvars,
            objective: vec![Rat::zero(); nvars],
            free: vec![false; nvars],
            rows: Vec::new(),
        }
    }

    pub fn set_objective(&mut self, c: RatVec) -> &mut Self {
        assert_eq!(c.len(), self.nvars);
        self.objective = c;
        self
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn constrain(&mut self, coeffs: RatVec, rel: Relation, rhs: Rat) -> &mut Self {
        assert_eq!(coeffs.len(), self.nvars);
        self.rows.push((coeffs, rel, rhs));
        self
    }

    pub fn maximize(&self) -> LpOutcome {
        // Column layout: one column per nonnegative variable, two per free
        // variable (x = x⁺ - x⁻), then one slack per inequality.
        let mut col_of = Vec::with_capacity(self.nvars);
        let mut ncols = 0;
        for &f in &self.free {
            col_of.push(ncols);
            ncols += if f { 2 } else { 1 };
        }
        let structural = ncols;
        let nslack = self.rows.iter().filter(|r| r.1 != Relation::Eq).count();
        ncols += nslack;

        let mut a = Vec::with_capacity(self.rows.len());
        let mut b = Vec::with_capacity(self.rows.len());
        let mut slack = structural;
        for (coeffs, rel, rhs) in &self.rows {
            let mut row = vec![Rat::zero(); ncols];
            for (v, coef) in coeffs.iter().enumerate() {
                row[col_of[v]] = coef.clone();
                if self.free[v] {
                    row[col_of[v] + 1] = -coef.clone();
                }
            }
            match rel {
                Relation::Le => {
                    row[slack] = Rat::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rat::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            a.push(row);
            b.push(rhs.clone());
        }
        let mut c = vec![Rat::zero(); ncols];
        for (v, coef) in self.objective.iter().enumerate() {
            c[col_of[v]] = coef.clone();
            if self.free[v] {
                c[col_of[v] + 1] = -coef.clone();
            }
        }

        match maximize_standard(&c, &a, &b) {
            LpOutcome::Optimal { value, x } => {
                let orig = (0..self.nvars)
                    .map(|v| {
                        if self.free[v] {
                            &x[col_of[v]] - &x[col_of[v] + 1]
                        } else {
                            x[col_of[v]].clone()
                        }
                    })
                    .collect();
                LpOutcome::Optimal { value, x: orig }
            }
            other => other,
        }
    }
}

/// `maximize c·x  s.t.  A x = b, x ≥ 0`.
pub fn maximize_standard(c: &[Rat], a: &[RatVec], b: &[Rat]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    // Tableau columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<RatVec> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let neg = rhs.is_negative();
        let mut r = vec![Rat::zero(); width];
        for (j, x) in row.iter().enumerate() {
            r[j] = if neg { -x.clone() } else { x.clone() };
        }
        r[n + i] = Rat::one();
        r[width - 1] = if neg { -rhs.clone() } else { rhs.clone() };
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1: maximize -sum(artificials).
    let mut phase1 = vec![Rat::zero(); n + m];
    for p in phase1.iter_mut().skip(n) {
        *p = -Rat::one();
    }
    if run_simplex(&mut t, &mut basis, &phase1, n + m).is_err() {
        unreachable!("phase one is bounded");
    }
    let infeasibility: Rat = basis
        .iter()
        .zip(&t)
        .filter(|(&bv, _)| bv >= n)
        .map(|(_, row)| row[width - 1].clone())
        .sum();
    if !infeasibility.is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining (zero-valued) artificials out of the basis; rows
    // where that is impossible are redundant.
    let mut i = 0;
    while i < t.len() {
        if basis[i] >= n {
            match (0..n).find(|&j| !t[i][j].is_zero()) {
                Some(j) => pivot(&mut t, &mut basis, i, j),
                None => {
                    t.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    // Forbid artificials from re-entering by truncating them away.
    for row in t.iter_mut() {
        let rhs = row[width - 1].clone();
        row.truncate(n);
        row.push(rhs);
    }

    match run_simplex(&mut t, &mut basis, c, n) {
        Err(()) => LpOutcome::Unbounded,
        Ok(()) => {
            let mut x = vec![Rat::zero(); n];
            for (row, &bv) in t.iter().zip(&basis) {
                x[bv] = row[n].clone();
            }
            let value = crate::rational::dot(c, &x);
            LpOutcome::Optimal { value, x }
        }
    }
}

fn run_simplex(t: &mut [RatVec], basis: &mut [usize], c: &[Rat], ncols: usize) -> Result<(), ()> {
    let rhs = t.first().map_or(ncols, |r| r.len() - 1);
    loop {
        // Bland: first column with positive reduced profit.
        let entering = (0..ncols).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut r = c[j].clone();
            for (row, &bv) in t.iter().zip(basis.iter()) {
                if !row[j].is_zero() && !c[bv].is_zero() {
                    r -= &c[bv] * &row[j];
                }
            }
            r.is_positive()
        });
        let Some(j) = entering else {
            return Ok(());
        };
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[j].is_positive() {
                let ratio = &row[rhs] / &row[j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leave else {
            return Err(());
        };
        pivot(t, basis, i, j);
    }
}

fn pivot(t: &mut [RatVec], basis: &mut [usize], i: usize, j: usize) {
    let inv = t[i][j].recip();
    for x in t[i].iter_mut() {
        *x *= &inv;
    }
    let prow = t[i].clone();
    for (k, row) in t.iter_mut().enumerate() {
        if k == i || row[j].is_zero() {
            continue;
        }
        let f = row[j].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
    basis[i] = j;
}
