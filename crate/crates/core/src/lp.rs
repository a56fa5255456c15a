//! Seidel's randomized incremental linear programming in low dimension.
//!
//! Maximizes `c·x` subject to `a_i·x <= b_i` inside the box `|x_k| <= bound`.
//! Expected time is `O(d! · m)`; intended for `d <= 4`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::Real;

/// Largest supported dimension.
pub const MAX_DIM: usize = 4;

/// `a·x <= b`; coefficients past the problem dimension are zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constraint<T> {
    pub a: [T; MAX_DIM],
    pub b: T,
}

impl<T: Real> Constraint<T> {
    pub fn new(a: impl AsRef<[T]>, b: T) -> Self {
        let a = a.as_ref();
        assert!(a.len() <= MAX_DIM, "at most {MAX_DIM} variables");
        let mut row = [T::zero(); MAX_DIM];
        row[..a.len()].copy_from_slice(a);
        Self { a: row, b }
    }

    fn slack(&self, x: &[T]) -> T {
        self.b - dot(&self.a, x)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Optimal(Vec<T>),
    Infeasible,
}

fn dot<T: Real>(a: &[T], x: &[T]) -> T {
    a.iter().zip(x).fold(T::zero(), |acc, (&u, &v)| acc + u * v)
}

/// Solves the LP; `tol` is the feasibility slack allowed per constraint.
pub fn maximize<T: Real>(c: &[T], constraints: &[Constraint<T>], bound: T, tol: T, seed: u64) -> LpOutcome<T> {
    assert!(!c.is_empty() && c.len() <= MAX_DIM, "dimension must be 1..={MAX_DIM}");
    let mut order: Vec<Constraint<T>> = constraints.to_vec();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut obj = [T::zero(); MAX_DIM];
    obj[..c.len()].copy_from_slice(c);
    match solve(c.len(), &obj, &order, bound, tol) {
        Some(x) => LpOutcome::Optimal(x[..c.len()].to_vec()),
        None => LpOutcome::Infeasible,
    }
}

type Row<T> = [T; MAX_DIM];

fn solve<T: Real>(d: usize, c: &Row<T>, cons: &[Constraint<T>], bound: T, tol: T) -> Option<Row<T>> {
    if d == 1 {
        return solve_1d(c[0], cons, bound, tol);
    }
    let mut x = [T::zero(); MAX_DIM];
    for k in 0..d {
        x[k] = if c[k] >= T::zero() { bound } else { -bound };
    }
    let mut sub: Vec<Constraint<T>> = Vec::with_capacity(cons.len() + 2);
    for i in 0..cons.len() {
        let h = &cons[i];
        if h.slack(&x[..d]) >= -tol {
            continue;
        }
        // Eliminate the variable with the largest coefficient on h.
        let k = (0..d).max_by(|&u, &v| h.a[u].abs().partial_cmp(&h.a[v].abs()).unwrap())?;
        let pivot = h.a[k];
        if pivot.abs() <= T::epsilon() {
            // 0·x <= b with b < 0.
            return None;
        }
        // x_k = (b - Σ_{j≠k} a_j x_j) / pivot
        let reduce = |a: &Row<T>| -> Row<T> {
            let mut out = [T::zero(); MAX_DIM];
            for (m, j) in (0..d).filter(|&j| j != k).enumerate() {
                out[m] = a[j] - a[k] * h.a[j] / pivot;
            }
            out
        };
        let sub_c = reduce(c);
        sub.clear();
        // Box bounds on the eliminated variable become general constraints.
        let mut e = [T::zero(); MAX_DIM];
        e[k] = T::one();
        let upper = Constraint { a: e, b: bound };
        e[k] = -T::one();
        let lower = Constraint { a: e, b: bound };
        for g in [&upper, &lower].into_iter().chain(cons[..i].iter()) {
            sub.push(Constraint { a: reduce(&g.a), b: g.b - g.a[k] * h.b / pivot });
        }
        let y = solve(d - 1, &sub_c, &sub, bound, tol)?;
        let mut full = [T::zero(); MAX_DIM];
        for (m, j) in (0..d).filter(|&j| j != k).enumerate() {
            full[j] = y[m];
        }
        let rest = (0..d).filter(|&j| j != k).fold(T::zero(), |acc, j| acc + h.a[j] * full[j]);
        full[k] = (h.b - rest) / pivot;
        x = full;
    }
    Some(x)
}

fn solve_1d<T: Real>(c: T, cons: &[Constraint<T>], bound: T, tol: T) -> Option<Row<T>> {
    let (mut lo, mut hi) = (-bound, bound);
    for h in cons {
        let a = h.a[0];
        if a.abs() <= T::epsilon() {
            if h.b < -tol {
                return None;
            }
        } else if a > T::zero() {
            hi = hi.min(h.b / a);
        } else {
            lo = lo.max(h.b / a);
        }
    }
    let mut x = [T::zero(); MAX_DIM];
    if lo > hi {
        // Within tolerance the interval collapses to a point.
        let gap = lo - hi;
        let scale = cons.iter().map(|h| h.a[0].abs()).fold(T::zero(), T::max).max(T::epsilon());
        if gap * scale > tol {
            return None;
        }
        x[0] = (lo + hi) * T::lit(0.5);
        return Some(x);
    }
    x[0] = if c >= T::zero() { hi } else { lo };
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    /// Brute force: every vertex of the arrangement (d tight constraints, box
    /// faces included), keep feasible ones, take the best objective.
    fn brute_force(c: &[f64], cons: &[Constraint<f64>], bound: f64) -> Option<f64> {
        let d = c.len();
        let mut all: Vec<Constraint<f64>> = cons.to_vec();
        for k in 0..d {
            let mut e = vec![0.0; d];
            e[k] = 1.0;
            all.push(Constraint::new(e.clone(), bound));
            e[k] = -1.0;
            all.push(Constraint::new(e, bound));
        }
        let m = all.len();
        let mut best: Option<f64> = None;
        let mut idx = vec![0usize; d];
        fn rec(start: usize, depth: usize, idx: &mut Vec<usize>, m: usize, f: &mut dyn FnMut(&[usize])) {
            if depth == idx.len() {
                f(idx);
                return;
            }
            for i in start..m {
                idx[depth] = i;
                rec(i + 1, depth + 1, idx, m, f);
            }
        }
        rec(0, 0, &mut idx, m, &mut |sel: &[usize]| {
            // Gaussian elimination on the d×d system.
            let mut a: Vec<Vec<f64>> = sel.iter().map(|&i| {
                let mut row = all[i].a[..d].to_vec();
                row.push(all[i].b);
                row
            }).collect();
            for col in 0..d {
                let piv = (col..d).max_by(|&u, &v| a[u][col].abs().partial_cmp(&a[v][col].abs()).unwrap()).unwrap();
                if a[piv][col].abs() < 1e-12_f64 {
                    return;
                }
                a.swap(col, piv);
                for r in 0..d {
                    if r != col {
                        let f = a[r][col] / a[col][col];
                        for k in col..=d {
                            a[r][k] -= f * a[col][k];
                        }
                    }
                }
            }
            let x: Vec<f64> = (0..d).map(|r| a[r][d] / a[r][r]).collect();
            if all.iter().all(|h| h.slack(&x) >= -1e-9) {
                let v = dot(c, &x);
                best = Some(best.map_or(v, |b: f64| b.max(v)));
            }
        });
        best
    }

    #[test]
    fn simple_triangle_lp() {
        // max x + y s.t. x <= 1, y <= 2, x + y <= 2.5
        let cons = vec![
            Constraint::new(vec![1.0, 0.0], 1.0),
            Constraint::new(vec![0.0, 1.0], 2.0),
            Constraint::new(vec![1.0, 1.0], 2.5),
        ];
        match maximize::<f64>(&[1.0, 1.0], &cons, 100.0, 1e-12, 0) {
            LpOutcome::Optimal(x) => assert!((x[0] + x[1] - 2.5).abs() < 1e-12),
            _ => panic!(),
        }
        let infeasible = vec![Constraint::new(vec![1.0, 0.0], -1.0), Constraint::new(vec![-1.0, 0.0], -1.0)];
        assert_eq!(maximize(&[1.0, 0.0], &infeasible, 100.0, 1e-12, 0), LpOutcome::Infeasible);
    }

    #[test]
    fn matches_vertex_enumeration_3d() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for trial in 0..150 {
            let m = rng.gen_range(3..14);
            let cons: Vec<Constraint<f64>> = (0..m)
                .map(|_| {
                    let a: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
                    Constraint::new(a, rng.gen_range(-0.3..1.0))
                })
                .collect();
            let c: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let bound = 5.0;
            let fast = maximize(&c, &cons, bound, 1e-10, trial);
            match (fast, brute_force(&c, &cons, bound)) {
                (LpOutcome::Optimal(x), Some(v)) => {
                    assert!((dot(&c, &x) - v).abs() < 1e-7, "trial {trial}: {} vs {v}", dot(&c, &x));
                    assert!(cons.iter().all(|h| h.slack(&x) >= -1e-8));
                }
                (LpOutcome::Infeasible, None) => {}
                (f, b) => panic!("trial {trial}: {f:?} vs {b:?}"),
            }
        }
    }
}
