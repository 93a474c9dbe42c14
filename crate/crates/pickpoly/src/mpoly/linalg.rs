//! Exact Gaussian elimination over the Gaussian rationals; only the
//! nullspace computation is needed here.

use crate::grat::GRat;

/// Dense matrix in row-major order.
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<GRat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![GRat::zero(); rows * cols] }
    }

    pub fn at(&self, r: usize, c: usize) -> &GRat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GRat) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form in place; returns pivot column indices.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            // find a pivot in this column
            let mut piv = None;
            for r in row..self.rows {
                if !self.at(r, col).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != row {
                for c in 0..self.cols {
                    self.data.swap(piv * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.at(row, col).inv().expect("pivot nonzero");
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c) - &(&factor * self.at(row, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the right nullspace { x : A x = 0 }.
    pub fn nullspace(mut self) -> Vec<Vec<GRat>> {
        let pivots = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![GRat::zero(); self.cols];
            v[fc] = GRat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -self.at(r, fc);
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(k: i64) -> GRat {
        GRat::from_int(k)
    }

    #[test]
    fn nullspace_of_rank_one() {
        // rows all multiples of (1, 2, 3): nullspace dimension 2
        let mut m = QMat::zeros(2, 3);
        for (r, s) in [(0usize, 1i64), (1, 2)] {
            m.set(r, 0, gi(s));
            m.set(r, 1, gi(2 * s));
            m.set(r, 2, gi(3 * s));
        }
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = &(&v[0] * &gi(1)) + &(&(&v[1] * &gi(2)) + &(&v[2] * &gi(3)));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn nullspace_of_full_rank_is_trivial() {
        let mut m = QMat::zeros(2, 2);
        m.set(0, 0, gi(1));
        m.set(1, 1, GRat::i());
        assert!(m.nullspace().is_empty());
    }
}
