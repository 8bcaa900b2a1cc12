use super::{Element, FieldTower};

/// Dense row-major matrix over the ambient field. All elimination is exact;
/// the field a result lives in is whatever field the entries generate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Element::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Element::ONE);
        }
        m
    }

    /// Builds from rows of equal length. An empty row list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<Element>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn from_rows_with_cols(rows: Vec<Vec<Element>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Element {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Element) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = Element> + '_ {
        self.data.iter().copied()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn map(&self, f: impl Fn(Element) -> Element) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn mul(&self, tw: &FieldTower, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = tw.add(out.get(i, j), tw.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, tw: &FieldTower, v: &[Element]) -> Vec<Element> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Element::ZERO, |acc, (&a, &b)| tw.add(acc, tw.mul(a, b)))
            })
            .collect()
    }

    /// `v * self` for a row vector `v`.
    pub fn vec_mul(&self, tw: &FieldTower, v: &[Element]) -> Vec<Element> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![Element::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = tw.add(*o, tw.mul(c, self.get(i, j)));
            }
        }
        out
    }

    /// Reduced row echelon form in place; zero rows are dropped. Returns the
    /// pivot columns.
    pub fn rref_in_place(&mut self, tw: &FieldTower) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, r);
            let inv = tw.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = tw.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = tw.sub(self.get(i, j), tw.mul(f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.data.truncate(r * self.cols);
        self.rows = r;
        pivots
    }

    pub fn rref(&self, tw: &FieldTower) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(tw);
        (m, piv)
    }

    pub fn rank(&self, tw: &FieldTower) -> usize {
        self.rref(tw).1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// A basis of the right kernel `{v : M v = 0}`, one vector per free column.
    pub fn kernel(&self, tw: &FieldTower) -> Vec<Vec<Element>> {
        let (r, piv) = self.rref(tw);
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Element::ZERO; self.cols];
                v[f] = Element::ONE;
                for (i, &pc) in piv.iter().enumerate() {
                    v[pc] = tw.neg(r.get(i, f));
                }
                v
            })
            .collect()
    }

    /// Some `X` with `self * X = rhs`, free variables set to zero.
    pub fn solve(&self, tw: &FieldTower, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            for j in 0..rhs.cols {
                aug.set(i, self.cols + j, rhs.get(i, j));
            }
        }
        let piv = aug.rref_in_place(tw);
        if piv.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (i, &pc) in piv.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, aug.get(i, self.cols + j));
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_tower;

    #[test]
    fn rref_kernel_solve() {
        let t = make_tower(2, 1, 2, 0, 3).unwrap();
        let a = t.alpha();
        let m = Matrix::from_rows(vec![
            vec![Element::ONE, a, Element::ZERO],
            vec![a, t.mul(a, a), Element::ONE],
        ]);
        let (r, piv) = m.rref(&t);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(r.rows(), 2);
        let ker = m.kernel(&t);
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&t, &ker[0]).iter().all(|x| x.is_zero()));
        let rhs = Matrix::from_rows(vec![vec![Element::ONE], vec![a]]);
        let x = m.solve(&t, &rhs).unwrap();
        assert_eq!(m.mul(&t, &x), rhs);
    }
}
