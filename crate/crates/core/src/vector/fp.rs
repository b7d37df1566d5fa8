//! Dense matrices over a prime field `F_p`.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    // Fermat
    let mut result = 1u64;
    let mut base = (a % p) as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Mat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat, p: u32) -> Mat {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) as u64 + a * other.get(k, c) as u64) % p as u64;
                    out.set(r, c, v as u32);
                }
            }
        }
        out
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        debug_assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        debug_assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut out = Mat::zeros(self.rows, cols);
        for r in 0..self.rows {
            out.data[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * cols + self.cols..(r + 1) * cols].copy_from_slice(other.row(r));
        }
        out
    }

    /// Columns `range` of every row.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Mat {
        let width = range.len();
        let mut out = Mat::zeros(self.rows, width);
        for r in 0..self.rows {
            out.data[r * width..(r + 1) * width].copy_from_slice(&self.row(r)[range.clone()]);
        }
        out
    }

    /// In-place reduced row-echelon form, eliminating only within the first
    /// `limit` columns. Returns pivot columns; rows beyond the rank are zero.
    pub fn rref_limited(&mut self, p: u32, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit.min(self.cols) {
            if row == self.rows {
                break;
            }
            let Some(src) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if src != row {
                for c in 0..self.cols {
                    self.data.swap(src * self.cols + c, row * self.cols + c);
                }
            }
            let inv = inv_mod(self.get(row, col), p) as u64;
            for c in 0..self.cols {
                let v = self.get(row, c) as u64 * inv % p as u64;
                self.set(row, c, v as u32);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col) as u64;
                if factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let sub = factor * self.get(row, c) as u64 % p as u64;
                    let v = (self.get(r, c) as u64 + p as u64 - sub) % p as u64;
                    self.set(r, c, v as u32);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&mut self, p: u32) -> Vec<usize> {
        let limit = self.cols;
        self.rref_limited(p, limit)
    }

    /// The nonzero rows of the reduced row-echelon form.
    pub fn echelon_basis(&self, p: u32) -> Mat {
        let mut m = self.clone();
        let rank = m.rref(p).len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    pub fn rank(&self, p: u32) -> usize {
        self.clone().rref(p).len()
    }

    /// Basis (as rows) of `{x : self · x = 0}`.
    pub fn nullspace(&self, p: u32) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref(p);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            basis.set(i, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = m.get(r, fc);
                basis.set(i, pc, (p - v) % p);
            }
        }
        basis
    }

    /// Solves `self · X = rhs`, or `None` when inconsistent. Free variables
    /// are set to zero.
    pub fn solve(&self, rhs: &Mat, p: u32) -> Option<Mat> {
        debug_assert_eq!(self.rows, rhs.rows);
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref_limited(p, self.cols);
        let rank = pivots.len();
        for r in rank..aug.rows {
            if (self.cols..aug.cols).any(|c| aug.get(r, c) != 0) {
                return None;
            }
        }
        let mut x = Mat::zeros(self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, aug.get(r, self.cols + c));
            }
        }
        Some(x)
    }
}
