//! Dense matrices over any [`Field`].

use super::field::{AlgebraError, Field};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<F: Field> {
    ctx: F::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(ctx: &F::Ctx, rows: usize, cols: usize) -> Self {
        Mat { ctx: ctx.clone(), rows, cols, data: vec![F::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &F::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, F::one(ctx));
        }
        m
    }

    pub fn from_rows(ctx: &F::Ctx, rows: Vec<Vec<F>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Mat { ctx: ctx.clone(), rows: nr, cols: nc, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(ctx: &F::Ctx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { ctx: ctx.clone(), rows, cols, data }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &F> {
        self.data.iter()
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat { ctx: ctx.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<G: Field, E>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G, E>) -> Result<Mat<G>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Mat { ctx: ctx.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Self {
        Mat { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(F::conj).collect() }
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(Mat { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Mat { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &F) -> Self {
        Mat { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    /// Rows `rs` and columns `cs` as a new matrix.
    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> Self {
        Self::from_fn(&self.ctx, rs.len(), cs.len(), |i, j| self.get(rs[i], cs[j]).clone())
    }

    /// Write `block` with its top-left corner at rows `rs`, columns `cs`.
    pub fn set_block(&mut self, rs: &[usize], cs: &[usize], block: &Self) {
        for (i, &ri) in rs.iter().enumerate() {
            for (j, &cj) in cs.iter().enumerate() {
                self.set(ri, cj, block.get(i, j).clone());
            }
        }
    }

    /// Gauss–Jordan inverse with first-nonzero pivoting.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::Dimension(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(&self.ctx, n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a.get(i, c).is_zero()).ok_or(AlgebraError::Singular)?;
            if p != c {
                a.swap_rows(p, c);
                inv.swap_rows(p, c);
            }
            let pinv = a.get(c, c).inv()?;
            a.scale_row(c, &pinv);
            inv.scale_row(c, &pinv);
            for i in 0..n {
                if i == c {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                a.axpy_row(i, c, &f);
                inv.axpy_row(i, c, &f);
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<F, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::Dimension(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = F::one(&self.ctx);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return Ok(F::zero(&self.ctx));
            };
            if p != c {
                a.swap_rows(p, c);
                det = det.neg();
            }
            let piv = a.get(c, c).clone();
            det = det.mul(&piv);
            let pinv = piv.inv()?;
            for i in c + 1..n {
                let f = a.get(i, c).mul(&pinv);
                if !f.is_zero() {
                    a.axpy_row(i, c, &f);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn scale_row(&mut self, i: usize, c: &F) {
        for k in 0..self.cols {
            let v = self.get(i, k).mul(c);
            self.set(i, k, v);
        }
    }

    /// row_i -= f * row_j
    fn axpy_row(&mut self, i: usize, j: usize, f: &F) {
        for k in 0..self.cols {
            let b = self.get(j, k);
            if b.is_zero() {
                continue;
            }
            let v = self.get(i, k).sub(&f.mul(b));
            self.set(i, k, v);
        }
    }
}
