//! Integer points inside a convex quadratic region.
//!
//! Points `x` with `xᵀMx + 2bᵀx + c ≤ bound` are visited in lexicographic
//! order. Coordinates are fixed one at a time and every partial assignment
//! is pruned with the exact real minimum of the form over the coordinates
//! still free, obtained by eliminating them one at a time.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{floor_i64, int, Rational};

#[derive(Clone, Debug)]
pub struct QuadraticRegion {
    pub matrix: Matrix,
    pub linear: Vec<Rational>,
    pub constant: Rational,
    pub bound: Rational,
    /// Per-coordinate lower bound, `None` for unbounded.
    pub lower: Vec<Option<i64>>,
}

/// The form minimized over all coordinates from `m.len()` onward.
struct Stage {
    m: Matrix,
    b: Vec<Rational>,
    c: Rational,
}

impl Stage {
    fn value(&self, x: &[i64]) -> Rational {
        let mut v = self.c.clone();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let xi = int(xi);
            v += int(2) * &self.b[i] * &xi;
            for (j, &xj) in x.iter().enumerate() {
                if xj != 0 && !self.m[i][j].is_zero() {
                    v += &self.m[i][j] * &xi * int(xj);
                }
            }
        }
        v
    }
}

impl QuadraticRegion {
    /// `xᵀMx ≤ bound`, over nonnegative or all integer vectors.
    pub fn homogeneous(matrix: Matrix, bound: Rational, nonnegative: bool) -> Self {
        let n = matrix.len();
        Self {
            matrix,
            linear: vec![Rational::zero(); n],
            constant: Rational::zero(),
            bound,
            lower: vec![if nonnegative { Some(0) } else { None }; n],
        }
    }

    fn stages(&self) -> Result<Vec<Stage>> {
        let n = self.matrix.len();
        let mut stage = Stage {
            m: self.matrix.clone(),
            b: self.linear.clone(),
            c: self.constant.clone(),
        };
        let mut out = Vec::with_capacity(n + 1);
        for t in (0..n).rev() {
            let p = stage.m[t][t].clone();
            if p <= Rational::zero() {
                return Err(Error::Singular);
            }
            let mut m = vec![vec![Rational::zero(); t]; t];
            let mut b = vec![Rational::zero(); t];
            for i in 0..t {
                for j in 0..t {
                    m[i][j] = &stage.m[i][j] - &stage.m[i][t] * &stage.m[t][j] / &p;
                }
                b[i] = &stage.b[i] - &stage.m[i][t] * &stage.b[t] / &p;
            }
            let c = &stage.c - &stage.b[t] * &stage.b[t] / &p;
            out.push(stage);
            stage = Stage { m, b, c };
        }
        out.push(stage);
        out.reverse();
        Ok(out)
    }

    /// Calls `visit(x, value)` for every admissible integer point.
    pub fn for_each(&self, mut visit: impl FnMut(&[i64], &Rational)) -> Result<()> {
        let stages = self.stages()?;
        if stages[0].c > self.bound {
            return Ok(());
        }
        let mut x = Vec::with_capacity(self.matrix.len());
        self.descend(&stages, &mut x, &mut visit);
        Ok(())
    }

    /// Collects all admissible points with their values.
    pub fn points(&self) -> Result<Vec<(Vec<i64>, Rational)>> {
        let mut out = Vec::new();
        self.for_each(|x, v| out.push((x.to_vec(), v.clone())))?;
        Ok(out)
    }

    fn descend(&self, stages: &[Stage], x: &mut Vec<i64>, visit: &mut impl FnMut(&[i64], &Rational)) {
        let t = x.len();
        if t == self.matrix.len() {
            let v = stages[t].value(x);
            visit(x, &v);
            return;
        }
        let stage = &stages[t + 1];
        let mut beta = stage.b[t].clone();
        for (j, &xj) in x.iter().enumerate() {
            beta += &stage.m[t][j] * int(xj);
        }
        let vertex = -beta / &stage.m[t][t];
        let lo = self.lower[t];
        let start = match lo {
            Some(l) => floor_i64(&vertex).max(l),
            None => floor_i64(&vertex),
        };
        let ok = |x: &mut Vec<i64>, xt: i64| {
            x.push(xt);
            let fits = stage.value(x) <= self.bound;
            x.pop();
            fits
        };
        let start_fits = ok(x, start);
        let mut up = if start_fits { start } else { start + 1 };
        while ok(x, up) {
            x.push(up);
            self.descend(stages, x, visit);
            x.pop();
            up += 1;
        }
        if start_fits {
            let mut down = start - 1;
            while lo.is_none_or(|l| down >= l) && ok(x, down) {
                x.push(down);
                self.descend(stages, x, visit);
                x.pop();
                down -= 1;
            }
        }
    }
}
