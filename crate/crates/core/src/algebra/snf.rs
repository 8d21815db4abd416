use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// `left * A * right` is diagonal with entries `diag`, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// Invariant factors, nonnegative, `min(rows, cols)` of them (trailing zeros kept).
    pub diag: Vec<BigInt>,
    /// Unimodular, `rows x rows`.
    pub left: IntegerMatrix,
    /// Unimodular, `cols x cols`.
    pub right: IntegerMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// The diagonal matrix with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(self.left.rows(), self.right.rows());
        for (i, x) in self.diag.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }
}

/// Free rank and torsion of `Z^rows / A Z^cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelInvariants {
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
}

struct Work {
    d: Vec<Vec<BigInt>>,
    left: Vec<Vec<BigInt>>,
    right: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap(a, b);
        self.left.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in self.d.iter_mut().chain(self.right.iter_mut()) {
            row.swap(a, b);
        }
    }

    // row[target] += f * row[src]
    fn add_row(&mut self, target: usize, src: usize, f: &BigInt) {
        for m in [&mut self.d, &mut self.left] {
            let s = m[src].clone();
            for (x, y) in m[target].iter_mut().zip(&s) {
                *x += f * y;
            }
        }
    }

    // col[target] += f * col[src]
    fn add_col(&mut self, target: usize, src: usize, f: &BigInt) {
        for row in self.d.iter_mut().chain(self.right.iter_mut()) {
            let s = row[src].clone();
            row[target] += f * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.d, &mut self.left] {
            for x in m[i].iter_mut() {
                *x = -&*x;
            }
        }
    }
}

fn to_rows(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    m.row_vecs()
}

fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> IntegerMatrix {
    let r = rows.len();
    IntegerMatrix::new(r, cols, rows.into_iter().flatten().collect()).expect("rectangular")
}

/// Smith normal form over the integers with unimodular transforms.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        d: to_rows(a),
        left: to_rows(&IntegerMatrix::identity(m)),
        right: to_rows(&IntegerMatrix::identity(n)),
    };
    let k = m.min(n);
    for t in 0..k {
        loop {
            // smallest nonzero entry of the trailing block
            let pivot = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !w.d[i][j].is_zero())
                .min_by(|&(a, b), &(c, e)| w.d[a][b].abs().cmp(&w.d[c][e].abs()));
            let Some((pi, pj)) = pivot else {
                return finish(w, m, n);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if w.d[i][t].is_zero() {
                    continue;
                }
                let q = w.d[i][t].div_floor(&w.d[t][t]);
                w.add_row(i, t, &-q);
                clean &= w.d[i][t].is_zero();
            }
            for j in t + 1..n {
                if w.d[t][j].is_zero() {
                    continue;
                }
                let q = w.d[t][j].div_floor(&w.d[t][t]);
                w.add_col(j, t, &-q);
                clean &= w.d[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.d[i][j].is_multiple_of(&w.d[t][t])));
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.d[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    finish(w, m, n)
}

fn finish(w: Work, m: usize, n: usize) -> SmithDecomposition {
    let diag = (0..m.min(n)).map(|i| w.d[i][i].clone()).collect();
    SmithDecomposition {
        diag,
        left: from_rows(w.left, m),
        right: from_rows(w.right, n),
    }
}

/// Cokernel of `A` viewed as a map `Z^cols -> Z^rows`.
pub fn cokernel_invariants(a: &IntegerMatrix) -> CokernelInvariants {
    let snf = smith_normal_form(a);
    CokernelInvariants {
        free_rank: a.rows() - snf.rank(),
        torsion: snf
            .diag
            .into_iter()
            .filter(|d| *d > BigInt::one())
            .collect(),
    }
}
