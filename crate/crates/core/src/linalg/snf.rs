//! Matrices over k[t] and their Smith normal form.

use std::fmt;

use super::unipoly::UniPoly;
use crate::field::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPolyMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<UniPoly>,
}

impl UniPolyMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        UniPolyMatrix {
            field,
            rows,
            cols,
            data: vec![UniPoly::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = UniPoly::one(field);
        }
        m
    }

    /// Build from column vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<UniPoly>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, p) in col.iter().enumerate() {
                m[(i, j)] = p.clone();
            }
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<UniPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        UniPolyMatrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<UniPoly> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<UniPoly>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hcat(&self, rhs: &UniPolyMatrix) -> UniPolyMatrix {
        assert_eq!(self.rows, rhs.rows);
        let mut cols = self.columns();
        cols.extend(rhs.columns());
        Self::from_columns(self.field, self.rows, &cols)
    }

    pub fn mul(&self, rhs: &UniPolyMatrix) -> UniPolyMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[UniPoly]) -> Vec<UniPoly> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(UniPoly::zero(self.field), |acc, k| {
                    acc.add(&self[(i, k)].mul(&v[k]))
                })
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(UniPoly::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &UniPoly) {
        for j in 0..self.cols {
            let s = &self[(src, j)];
            if !s.is_zero() {
                let v = self[(dst, j)].add(&f.mul(s));
                self[(dst, j)] = v;
            }
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &UniPoly) {
        for i in 0..self.rows {
            let s = &self[(i, src)];
            if !s.is_zero() {
                let v = self[(i, dst)].add(&f.mul(s));
                self[(i, dst)] = v;
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: &crate::field::Scalar) {
        for j in 0..self.cols {
            let v = self[(i, j)].scale(c);
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for UniPolyMatrix {
    type Output = UniPoly;
    fn index(&self, (i, j): (usize, usize)) -> &UniPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for UniPolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut UniPoly {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for UniPolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `u * m * v = d`, with `u`, `v` invertible over k[t] and `d` diagonal.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: UniPolyMatrix,
    pub d: UniPolyMatrix,
    pub v: UniPolyMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, each monic, in divisibility order.
    pub fn diagonal(&self) -> Vec<UniPoly> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|p| !p.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().len()
    }

    /// Columns of `v` past the rank: a basis of the kernel of `m`.
    pub fn kernel_columns(&self) -> Vec<Vec<UniPoly>> {
        (self.rank()..self.v.cols).map(|j| self.v.column(j)).collect()
    }

    /// Some `x` with `m * x = b`, if one exists.
    pub fn solve(&self, b: &[UniPoly]) -> Option<Vec<UniPoly>> {
        let c = self.u.mul_vec(b);
        let rank = self.rank();
        if c[rank..].iter().any(|p| !p.is_zero()) {
            return None;
        }
        let field = self.d.field;
        let mut y = vec![UniPoly::zero(field); self.v.cols];
        for i in 0..rank {
            let (q, r) = c[i].div_rem(&self.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
        Some(self.v.mul_vec(&y))
    }
}

fn min_degree_entry(d: &UniPolyMatrix, s: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, (usize, usize))> = None;
    for i in s..d.rows {
        for j in s..d.cols {
            if let Some(deg) = d[(i, j)].degree() {
                if best.map_or(true, |(b, _)| deg < b) {
                    best = Some((deg, (i, j)));
                }
            }
        }
    }
    best.map(|(_, pos)| pos)
}

/// Smith normal form over k[t]. Pivots are chosen by minimal degree, ties
/// broken by row-major position; diagonal entries are made monic.
pub fn snf_unipoly(m: &UniPolyMatrix) -> Snf {
    let field = m.field;
    let mut d = m.clone();
    let mut u = UniPolyMatrix::identity(field, m.rows);
    let mut v = UniPolyMatrix::identity(field, m.cols);
    for s in 0..m.rows.min(m.cols) {
        loop {
            let Some((pi, pj)) = min_degree_entry(&d, s) else {
                return Snf { u, d, v };
            };
            d.swap_rows(s, pi);
            u.swap_rows(s, pi);
            d.swap_cols(s, pj);
            v.swap_cols(s, pj);
            let pivot = d[(s, s)].clone();
            let mut clean = true;
            for i in s + 1..d.rows {
                if d[(i, s)].is_zero() {
                    continue;
                }
                let (q, r) = d[(i, s)].div_rem(&pivot);
                let f = q.neg();
                d.add_row(i, s, &f);
                u.add_row(i, s, &f);
                clean &= r.is_zero();
            }
            for j in s + 1..d.cols {
                if d[(s, j)].is_zero() {
                    continue;
                }
                let (q, r) = d[(s, j)].div_rem(&pivot);
                let f = q.neg();
                d.add_col(j, s, &f);
                v.add_col(j, s, &f);
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (s + 1..d.rows)
                .find(|&i| (s + 1..d.cols).any(|j| !pivot.divides(&d[(i, j)])));
            match offender {
                Some(i) => {
                    let one = UniPoly::one(field);
                    d.add_row(s, i, &one);
                    u.add_row(s, i, &one);
                }
                None => break,
            }
        }
        let lc = d[(s, s)].leading().expect("pivot is nonzero").inv();
        d.scale_row(s, &lc);
        u.scale_row(s, &lc);
    }
    Snf { u, d, v }
}

/// Reduced column Hermite form of the span of `columns` (each of length
/// `rows`): the returned columns generate the same k[t]-module, each has a
/// monic pivot in a distinct row with zeros above it, and entries in pivot
/// rows of the other columns are reduced below the pivot degree. The form
/// depends only on the span, which keeps repeated constructions small.
pub fn hermite_columns(rows: usize, columns: &[Vec<UniPoly>]) -> Vec<Vec<UniPoly>> {
    let is_zero = |c: &[UniPoly]| c.iter().all(UniPoly::is_zero);
    let axpy = |dst: &mut Vec<UniPoly>, q: &UniPoly, src: &[UniPoly]| {
        for (d, s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d = d.sub(&q.mul(s));
            }
        }
    };
    let mut rest: Vec<Vec<UniPoly>> = columns.iter().filter(|c| !is_zero(c)).cloned().collect();
    let mut pivots: Vec<(usize, Vec<UniPoly>)> = Vec::new();
    for i in 0..rows {
        loop {
            let live: Vec<usize> = (0..rest.len()).filter(|&j| !rest[j][i].is_zero()).collect();
            if live.len() <= 1 {
                break;
            }
            let j0 = *live
                .iter()
                .min_by_key(|&&j| rest[j][i].degree())
                .expect("nonempty");
            let src = rest[j0].clone();
            for &j in &live {
                if j != j0 {
                    let (q, _) = rest[j][i].div_rem(&src[i]);
                    axpy(&mut rest[j], &q, &src);
                }
            }
        }
        if let Some(j0) = (0..rest.len()).find(|&j| !rest[j][i].is_zero()) {
            let mut col = rest.swap_remove(j0);
            let lc = col[i].leading().expect("nonzero").inv();
            col = col.iter().map(|p| p.scale(&lc)).collect();
            for (_, c) in pivots.iter_mut() {
                let (q, _) = c[i].div_rem(&col[i]);
                if !q.is_zero() {
                    axpy(c, &q, &col);
                }
            }
            pivots.push((i, col));
        }
        rest.retain(|c| !is_zero(c));
    }
    pivots.into_iter().map(|(_, c)| c).collect()
}
