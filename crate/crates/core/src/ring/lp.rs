//! Exact feasibility for `A w = b, w >= 0` over the rationals (phase-one
//! simplex with Bland's rule). Used to find nonnegative combinations of
//! reduced squares.

use num_traits::{Signed, Zero};

use crate::poly::Rational;

const MAX_PIVOTS: usize = 20_000;

/// Returns a nonnegative solution of `cols · w = rhs`, where `cols[j]` is
/// the j-th column (length `rhs.len()`), or `None` if none exists (or the
/// pivot budget runs out).
pub(crate) fn nonneg_solution(cols: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let n = cols.len();
    if rows == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    // Tableau layout: n structural columns, `rows` artificials, rhs last.
    let width = n + rows + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(rows + 1);
    for i in 0..rows {
        let flip = rhs[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for col in cols {
            let v = col[i].clone();
            row.push(if flip { -v } else { v });
        }
        for k in 0..rows {
            row.push(if k == i { Rational::from_integer(1.into()) } else { Rational::zero() });
        }
        row.push(if flip { -rhs[i].clone() } else { rhs[i].clone() });
        t.push(row);
    }
    // Phase-one objective: minimize the sum of artificials.
    let mut z = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..n {
            z[j] -= &row[j];
        }
        z[width - 1] -= &row[width - 1];
    }
    t.push(z);
    let mut basis: Vec<usize> = (n..n + rows).collect();

    for _ in 0..MAX_PIVOTS {
        let zrow = &t[rows];
        let Some(enter) = (0..n).find(|&j| zrow[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..rows {
            let a = &t[i][enter];
            if a.is_positive() {
                let ratio = &t[i][width - 1] / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (pr, _) = leave?;
        pivot(&mut t, pr, enter);
        basis[pr] = enter;
    }

    if !t[rows][width - 1].is_zero() {
        return None;
    }
    let mut w = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            w[b] = t[i][width - 1].clone();
        }
    }
    Some(w)
}

fn pivot(t: &mut [Vec<Rational>], pr: usize, pc: usize) {
    let inv = t[pr][pc].recip();
    for v in t[pr].iter_mut() {
        *v *= &inv;
    }
    let prow = t[pr].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let factor = row[pc].clone();
        for (v, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    }
}
