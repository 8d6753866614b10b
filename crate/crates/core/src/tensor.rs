//! Sparse rank-3 tensors and tensor-product actions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{shape, Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

fn zero() -> &'static Scalar {
    static ZERO: OnceLock<Scalar> = OnceLock::new();
    ZERO.get_or_init(Scalar::zero)
}

/// Rank-3 tensor with sparse storage. Absent entries read as zero and zero
/// entries are never stored, so `==` is exact tensor equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: [usize; 3],
    entries: BTreeMap<[usize; 3], Scalar>,
}

impl Tensor3 {
    pub fn zeros(d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 {
            dims: [d1, d2, d3],
            entries: BTreeMap::new(),
        }
    }

    /// Cubic zero tensor of side `n`.
    pub fn cube(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    /// Builds a cubic tensor from `(i, j, k, value)` with 0-based indices.
    /// Panics on out-of-range indices; meant for literals in code and tests.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut t = Self::cube(n);
        for &(i, j, k, v) in entries {
            t.set(i, j, k, Scalar::from_int(v)).expect("index in range");
        }
        t
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    /// Side length; meaningful for cubic tensors.
    pub fn side(&self) -> usize {
        self.dims[0]
    }

    pub fn is_cubic(&self) -> bool {
        self.dims[0] == self.dims[1] && self.dims[1] == self.dims[2]
    }

    fn check(&self, i: usize, j: usize, k: usize) -> Result<()> {
        for (idx, dim) in [i, j, k].into_iter().zip(self.dims) {
            if idx >= dim {
                return Err(Error::IndexOutOfRange { index: idx, dim });
            }
        }
        Ok(())
    }

    /// Dense read. Panics when out of range.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        debug_assert!(self.check(i, j, k).is_ok(), "tensor index out of range");
        self.entries.get(&[i, j, k]).unwrap_or(zero())
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) -> Result<()> {
        self.check(i, j, k)?;
        if v.is_zero() {
            self.entries.remove(&[i, j, k]);
        } else {
            self.entries.insert([i, j, k], v);
        }
        Ok(())
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) -> Result<()> {
        let cur = self.get(i, j, k) + v;
        self.set(i, j, k, cur)
    }

    /// Nonzero entries in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `t'_{jik} = t_{ijk}`.
    pub fn swap_first_two(&self) -> Tensor3 {
        Tensor3 {
            dims: [self.dims[1], self.dims[0], self.dims[2]],
            entries: self.entries.iter().map(|(&[i, j, k], v)| ([j, i, k], v.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Tensor3) -> Result<Tensor3> {
        if self.dims != other.dims {
            return Err(shape("tensor difference", format!("{:?}", self.dims), format!("{:?}", other.dims)));
        }
        let mut out = self.clone();
        for (idx, v) in other.iter() {
            out.add_at(idx[0], idx[1], idx[2], &-v)?;
        }
        Ok(out)
    }

    /// `t_{ijk} - t_{jik}`: structure constants of the commutator of a product.
    pub fn antisymmetrize(&self) -> Tensor3 {
        self.sub(&self.swap_first_two()).expect("cubic tensor")
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3{:?}{{", self.dims)?;
        for (n, (idx, v)) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}: {v}", idx)?;
        }
        write!(f, "}}")
    }
}

/// Matrix of `ρ(x)⊗1 + 1⊗μ(x)` on `V⊗W` in the lexicographic basis
/// `e_a⊗e_b ↦ index a·w + b`, where `p = ρ(x)` is `v×v` and `q = μ(x)` is `w×w`.
pub fn kron_sum_action(p: &Matrix, q: &Matrix) -> Result<Matrix> {
    if !p.is_square() || !q.is_square() {
        return Err(shape(
            "tensor-product action",
            "square factors",
            format!("{}x{} and {}x{}", p.rows(), p.cols(), q.rows(), q.cols()),
        ));
    }
    let (v, w) = (p.rows(), q.rows());
    let mut out = Matrix::zeros(v * w, v * w);
    for a2 in 0..v {
        for a in 0..v {
            let x = p.get(a2, a);
            if x.is_zero() {
                continue;
            }
            for b in 0..w {
                out.add_at(a2 * w + b, a * w + b, x);
            }
        }
    }
    for a in 0..v {
        for b2 in 0..w {
            for b in 0..w {
                let y = q.get(b2, b);
                if !y.is_zero() {
                    out.add_at(a * w + b2, a * w + b, y);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;
    use proptest::prelude::*;

    #[test]
    fn sparse_storage_reads_dense() {
        let mut t = Tensor3::cube(2);
        t.set(0, 1, 1, Scalar::from_int(3)).unwrap();
        assert_eq!(t.get(0, 1, 1), &Scalar::from_int(3));
        assert!(t.get(1, 1, 1).is_zero());
        t.set(0, 1, 1, Scalar::zero()).unwrap();
        assert!(t.is_zero());
        assert_eq!(t, Tensor3::cube(2));
        assert!(t.set(2, 0, 0, Scalar::one()).is_err());
    }

    #[test]
    fn kron_sum_of_zero_and_identity() {
        let z = kron_sum_action(&Matrix::zeros(2, 2), &Matrix::zeros(3, 3)).unwrap();
        assert!(z.is_zero() && z.rows() == 6);
        let two = kron_sum_action(&Matrix::identity(2), &Matrix::identity(3)).unwrap();
        assert_eq!(two, Matrix::identity(6).scale(&Scalar::from_int(2)));
    }

    #[test]
    fn kron_sum_elementary_factors() {
        // p = E11 (keeps e1), q = E22 (keeps e2) on V = W = K^2.
        // Basis order e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2. Expanding the definition:
        // e1⊗e1 ↦ e1⊗e1; e1⊗e2 ↦ e1⊗e2 + e1⊗e2; e2⊗e1 ↦ 0; e2⊗e2 ↦ e2⊗e2.
        let p = Matrix::unit(2, 0, 0);
        let q = Matrix::unit(2, 1, 1);
        let expected = Matrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(kron_sum_action(&p, &q).unwrap(), expected);
    }

    fn arb_square(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-2i64..3, n * n).prop_map(move |xs| {
            Matrix::from_rows(xs.chunks(n).map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
        })
    }

    proptest! {
        #[test]
        fn kron_sum_acts_on_pure_tensors(
            p in arb_square(2), q in arb_square(3),
            v in proptest::collection::vec(-2i64..3, 2), w in proptest::collection::vec(-2i64..3, 3),
        ) {
            let (v, w) = (Vector::from_ints(&v), Vector::from_ints(&w));
            let lhs = kron_sum_action(&p, &q).unwrap().apply(&v.tensor(&w)).unwrap();
            let rhs = &p.apply(&v).unwrap().tensor(&w) + &v.tensor(&q.apply(&w).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
