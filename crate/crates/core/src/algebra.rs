//! Finite-dimensional algebras given by structure constants.
//!
//! An [`Algebra`] of dimension `n` is a cubic tensor `c` with
//! `e_i·e_j = Σ_k c_ij^k e_k`. Every universal identity checked here is
//! multilinear, so it is verified on basis tuples only.

use std::fmt;

use crate::error::{shape, Error, Result};
use crate::linalg::{mat_commutator, mat_mul, Matrix, Vector};
use crate::report::{Check, Witness};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

#[derive(Clone)]
pub struct Algebra {
    c: Tensor3,
    name: Option<String>,
    // table[i*n + j] = e_i·e_j
    table: Vec<Vector>,
}

impl Algebra {
    pub fn new(c: Tensor3) -> Result<Self> {
        if !c.is_cubic() {
            return Err(shape("algebra structure constants", "cubic tensor", format!("{:?}", c.dims())));
        }
        let n = c.side();
        let mut table = vec![Vector::zeros(n); n * n];
        let mut rows: Vec<Vec<Scalar>> = table.iter().map(|v| v.entries().to_vec()).collect();
        for ([i, j, k], v) in c.iter() {
            rows[i * n + j][k] = v.clone();
        }
        for (slot, row) in table.iter_mut().zip(rows) {
            *slot = Vector::from(row);
        }
        Ok(Algebra { c, name: None, table })
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Tensor3::cube(n)).expect("cubic")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.c.side()
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.c
    }

    /// `e_i·e_j` (0-based).
    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    fn check_vec(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(shape("algebra element", self.dim(), v.dim()));
        }
        Ok(())
    }

    /// `(x·y)_k = Σ_{i,j} x_i y_j c_ij^k`.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                out.add_scaled(&(&x[i] * &y[j]), &self.table[i * n + j]);
            }
        }
        out
    }

    /// `x · e_k`
    fn mul_right_basis(&self, x: &Vector, k: usize) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for p in 0..n {
            out.add_scaled(&x[p], &self.table[p * n + k]);
        }
        out
    }

    /// `e_i · x`
    fn mul_left_basis(&self, i: usize, x: &Vector) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for p in 0..n {
            out.add_scaled(&x[p], &self.table[i * n + p]);
        }
        out
    }

    /// `(x·y)·z − x·(y·z)`.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        for v in [x, y, z] {
            self.check_vec(v)?;
        }
        Ok(&self.mul(&self.mul(x, y), z) - &self.mul(x, &self.mul(y, z)))
    }

    /// Associators of all basis triples, indexed `(i*n + j)*n + k`.
    pub fn associator_table(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i * n + j];
                for k in 0..n {
                    let left = self.mul_right_basis(ij, k);
                    let right = self.mul_left_basis(i, &self.table[j * n + k]);
                    out.push(&left - &right);
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        self.c.iter().all(|([i, j, k], v)| self.c.get(j, i, k) == v)
    }

    pub fn is_associative(&self) -> bool {
        self.associator_table().iter().all(Vector::is_zero)
    }

    /// First basis triple with `(e_i,e_j,e_k) ≠ (e_k,e_j,e_i)`.
    pub fn center_symmetry_violation(&self) -> Check {
        let n = self.dim();
        let ass = self.associator_table();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = &ass[(i * n + j) * n + k];
                    let rhs = &ass[(k * n + j) * n + i];
                    if lhs != rhs {
                        return Some(Witness::new(&[i, j, k], lhs, rhs));
                    }
                }
            }
        }
        None
    }

    pub fn is_center_symmetric(&self) -> bool {
        self.center_symmetry_violation().is_none()
    }

    pub(crate) fn require_center_symmetric(&self, what: &'static str) -> Result<()> {
        match self.center_symmetry_violation() {
            None => Ok(()),
            Some(witness) => Err(Error::NotCenterSymmetric { what, witness }),
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("c", &self.c)
            .finish()
    }
}

pub fn multiply(a: &Algebra, x: &Vector, y: &Vector) -> Result<Vector> {
    a.multiply(x, y)
}

pub fn associator(a: &Algebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    a.associator(x, y, z)
}

pub fn is_center_symmetric(a: &Algebra) -> bool {
    a.is_center_symmetric()
}

/// Subgroups of the symmetric group on three letters; each defines a class of
/// algebras whose signed sum of permuted associators vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GClass {
    /// `{id}`: associative.
    G1,
    /// `{id, τ12}`: Vinberg (left-symmetric).
    G2,
    /// `{id, τ23}`: pre-Lie.
    G3,
    /// `{id, τ13}`: center-symmetric.
    G4,
    /// Alternating group `A3`.
    G5,
    /// Full `Σ3`: Lie-admissible.
    G6,
}

/// A permutation of `{0,1,2}` given by its images, with its signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedPerm {
    pub images: [usize; 3],
    pub sign: i8,
}

const ID: SignedPerm = SignedPerm { images: [0, 1, 2], sign: 1 };
const T12: SignedPerm = SignedPerm { images: [1, 0, 2], sign: -1 };
const T23: SignedPerm = SignedPerm { images: [0, 2, 1], sign: -1 };
const T13: SignedPerm = SignedPerm { images: [2, 1, 0], sign: -1 };
const C123: SignedPerm = SignedPerm { images: [1, 2, 0], sign: 1 };
const C132: SignedPerm = SignedPerm { images: [2, 0, 1], sign: 1 };

impl SignedPerm {
    pub fn inverse(&self) -> [usize; 3] {
        let mut inv = [0; 3];
        for (p, &img) in self.images.iter().enumerate() {
            inv[img] = p;
        }
        inv
    }

    /// `σ(x1,x2,x3) = (x_{σ⁻¹(1)}, x_{σ⁻¹(2)}, x_{σ⁻¹(3)})`.
    pub fn act<T: Copy>(&self, xs: [T; 3]) -> [T; 3] {
        let inv = self.inverse();
        [xs[inv[0]], xs[inv[1]], xs[inv[2]]]
    }
}

impl GClass {
    pub const ALL: [GClass; 6] = [GClass::G1, GClass::G2, GClass::G3, GClass::G4, GClass::G5, GClass::G6];

    pub fn elements(self) -> &'static [SignedPerm] {
        match self {
            GClass::G1 => &[ID],
            GClass::G2 => &[ID, T12],
            GClass::G3 => &[ID, T23],
            GClass::G4 => &[ID, T13],
            GClass::G5 => &[ID, C123, C132],
            GClass::G6 => &[ID, T12, T23, T13, C123, C132],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            GClass::G1 => "G1",
            GClass::G2 => "G2",
            GClass::G3 => "G3",
            GClass::G4 => "G4",
            GClass::G5 => "G5",
            GClass::G6 => "G6",
        }
    }
}

/// First basis triple where `Σ_{σ∈G} sgn(σ) (ass∘σ)` is nonzero.
pub fn g_associativity_violation(a: &Algebra, g: GClass) -> Check {
    let n = a.dim();
    let ass = a.associator_table();
    let at = |t: [usize; 3]| &ass[(t[0] * n + t[1]) * n + t[2]];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut sum = Vector::zeros(n);
                for sigma in g.elements() {
                    let s = Scalar::from_int(sigma.sign.into());
                    sum.add_scaled(&s, at(sigma.act([i, j, k])));
                }
                if !sum.is_zero() {
                    return Some(Witness::new(&[i, j, k], sum, Vector::zeros(n)));
                }
            }
        }
    }
    None
}

pub fn is_g_associative(a: &Algebra, g: GClass) -> bool {
    g_associativity_violation(a, g).is_none()
}

/// Lie algebra given by bracket constants `[e_i, e_j] = Σ_k b_ij^k e_k`.
///
/// Antisymmetry and the Jacobi identity hold exactly for every value of this type.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    bracket: Tensor3,
}

impl LieAlgebra {
    pub fn new(bracket: Tensor3) -> Result<Self> {
        if !bracket.is_cubic() {
            return Err(shape("bracket constants", "cubic tensor", format!("{:?}", bracket.dims())));
        }
        if let Some(witness) = antisymmetry_violation(&bracket) {
            return Err(Error::Invalid { what: "bracket", condition: "antisymmetry", witness });
        }
        if let Some(witness) = jacobi_violation(&bracket) {
            return Err(Error::Invalid { what: "bracket", condition: "the Jacobi identity", witness });
        }
        Ok(LieAlgebra { bracket })
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra { bracket: Tensor3::cube(n) }
    }

    pub fn dim(&self) -> usize {
        self.bracket.side()
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.bracket
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let n = self.dim();
        if x.dim() != n || y.dim() != n {
            return Err(shape("Lie algebra element", n, x.dim().max(y.dim())));
        }
        Ok(apply_bilinear(&self.bracket, x, y))
    }

    /// `(ad_i)_kj = b_ij^k`.
    pub fn ad(&self, i: usize) -> Result<Matrix> {
        left_matrix(&self.bracket, i)
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("LieAlgebra").field(&self.bracket).finish()
    }
}

/// `Σ_{i,j} x_i y_j t_ij^k` for a tensor of shape `(|x|, |y|, d3)`.
pub(crate) fn apply_bilinear(t: &Tensor3, x: &Vector, y: &Vector) -> Vector {
    let mut out: Vec<Scalar> = vec![Scalar::zero(); t.dims()[2]];
    for ([i, j, k], v) in t.iter() {
        if x[i].is_zero() || y[j].is_zero() {
            continue;
        }
        out[k] += &(&x[i] * &y[j]) * v;
    }
    Vector::from(out)
}

fn left_matrix(t: &Tensor3, i: usize) -> Result<Matrix> {
    let n = t.side();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, dim: n });
    }
    let mut m = Matrix::zeros(n, n);
    for ([a, j, k], v) in t.iter() {
        if a == i {
            m.set(k, j, v.clone());
        }
    }
    Ok(m)
}

pub fn antisymmetry_violation(bracket: &Tensor3) -> Check {
    let n = bracket.side();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let (a, b) = (bracket.get(i, j, k), bracket.get(j, i, k));
                if a != &-b {
                    return Some(Witness::new(&[i, j, k], a, -b));
                }
            }
        }
    }
    None
}

/// First basis triple where `[[x,y],z] + [[y,z],x] + [[z,x],y] ≠ 0`.
pub fn jacobi_violation(bracket: &Tensor3) -> Check {
    let n = bracket.side();
    let e = |i| Vector::basis(n, i);
    let br = |x: &Vector, y: &Vector| apply_bilinear(bracket, x, y);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                let total = &(&br(&br(&x, &y), &z) + &br(&br(&y, &z), &x)) + &br(&br(&z, &x), &y);
                if !total.is_zero() {
                    return Some(Witness::new(&[i, j, k], total, Vector::zeros(n)));
                }
            }
        }
    }
    None
}

/// Checks `ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)]` for a list of matrices, one per
/// basis element of the Lie algebra with bracket constants `bracket`.
pub fn representation_violation(bracket: &Tensor3, rho: &[Matrix]) -> Result<Check> {
    let n = bracket.side();
    if rho.len() != n {
        return Err(shape("representation", format!("{n} matrices"), rho.len()));
    }
    let m = rho.first().map_or(0, Matrix::rows);
    if rho.iter().any(|r| r.rows() != m || r.cols() != m) {
        return Err(shape("representation", format!("{m}x{m} matrices"), "mixed shapes"));
    }
    for i in 0..n {
        for j in 0..n {
            let br = apply_bilinear(bracket, &Vector::basis(n, i), &Vector::basis(n, j));
            let lhs = combine(rho, &br, m)?;
            let rhs = mat_commutator(&rho[i], &rho[j])?;
            if lhs != rhs {
                return Ok(Some(Witness::new(&[i, j], lhs, rhs)));
            }
        }
    }
    Ok(None)
}

/// Linear extension `Σ_m x_m ops[m]`; `size` is the matrix side used when `ops` is empty.
pub fn combine(ops: &[Matrix], x: &Vector, size: usize) -> Result<Matrix> {
    if ops.len() != x.dim() {
        return Err(shape("linear extension of an action", ops.len(), x.dim()));
    }
    let (rows, cols) = ops.first().map_or((size, size), |m| (m.rows(), m.cols()));
    let mut out = Matrix::zeros(rows, cols);
    for (m, coeff) in ops.iter().zip(x.entries()) {
        out.add_scaled(coeff, m);
    }
    Ok(out)
}

/// Bracket constants `c_ij^k − c_ji^k` of the commutator, without any check.
pub fn commutator_constants(a: &Algebra) -> Tensor3 {
    a.structure().antisymmetrize()
}

/// The sub-adjacent Lie algebra `(A, [x,y] = x·y − y·x)` of a center-symmetric algebra.
pub fn sub_adjacent(a: &Algebra) -> Result<LieAlgebra> {
    a.require_center_symmetric("algebra")?;
    LieAlgebra::new(commutator_constants(a))
}

/// `(L_i)_kj = c_ij^k`.
pub fn left_op(a: &Algebra, i: usize) -> Result<Matrix> {
    left_matrix(a.structure(), i)
}

/// `(R_i)_kj = c_ji^k`.
pub fn right_op(a: &Algebra, i: usize) -> Result<Matrix> {
    let n = a.dim();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, dim: n });
    }
    let mut m = Matrix::zeros(n, n);
    for ([j, b, k], v) in a.structure().iter() {
        if b == i {
            m.set(k, j, v.clone());
        }
    }
    Ok(m)
}

/// `ad_i = L_i − R_i`.
pub fn ad_op(a: &Algebra, i: usize) -> Result<Matrix> {
    Ok(&left_op(a, i)? - &right_op(a, i)?)
}

pub fn left_ops(a: &Algebra) -> Vec<Matrix> {
    (0..a.dim()).map(|i| left_op(a, i).expect("in range")).collect()
}

pub fn right_ops(a: &Algebra) -> Vec<Matrix> {
    (0..a.dim()).map(|i| right_op(a, i).expect("in range")).collect()
}

pub fn ad_ops(a: &Algebra) -> Vec<Matrix> {
    (0..a.dim()).map(|i| ad_op(a, i).expect("in range")).collect()
}

/// First basis pair violating `[L_x,R_y] = [L_y,R_x]` or
/// `L_{x·y} − L_x L_y = R_x R_y − R_{y·x}`, with the name of the failed identity.
pub fn operator_identity_violation(a: &Algebra) -> Option<(&'static str, Witness)> {
    let n = a.dim();
    let (l, r) = (left_ops(a), right_ops(a));
    for i in 0..n {
        for j in 0..n {
            let lhs = mat_commutator(&l[i], &r[j]).expect("square");
            let rhs = mat_commutator(&l[j], &r[i]).expect("square");
            if lhs != rhs {
                return Some(("[L_x,R_y] = [L_y,R_x]", Witness::new(&[i, j], lhs, rhs)));
            }
            let l_xy = combine(&l, a.basis_product(i, j), n).expect("dims");
            let r_yx = combine(&r, a.basis_product(j, i), n).expect("dims");
            let lhs = &l_xy - &mat_mul(&l[i], &l[j]).expect("square");
            let rhs = &mat_mul(&r[i], &r[j]).expect("square") - &r_yx;
            if lhs != rhs {
                return Some(("L_{xy} - L_x L_y = R_x R_y - R_{yx}", Witness::new(&[i, j], lhs, rhs)));
            }
        }
    }
    None
}

pub fn check_operator_identities(a: &Algebra) -> bool {
    operator_identity_violation(a).is_none()
}

/// `ad_{[x,y]} = [ad_x, ad_y]` on basis pairs; refuses non-center-symmetric input.
pub fn check_ad_representation(a: &Algebra) -> Result<bool> {
    a.require_center_symmetric("algebra")?;
    Ok(representation_violation(&commutator_constants(a), &ad_ops(a))?.is_none())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// One-dimensional field, `e1·e1 = e1`.
    pub fn field() -> Algebra {
        Algebra::new(Tensor3::from_entries(1, &[(0, 0, 0, 1)])).unwrap()
    }

    /// `e1·e1 = e2`, `e2·e1 = e1`: not center-symmetric.
    pub fn counterexample() -> Algebra {
        Algebra::new(Tensor3::from_entries(2, &[(0, 0, 1, 1), (1, 0, 0, 1)])).unwrap()
    }

    /// Upper triangular 2x2 matrices, basis E11, E12, E22 (associative, noncommutative).
    pub fn upper_triangular() -> Algebra {
        // E11E11=E11, E11E12=E12, E12E22=E12, E22E22=E22
        Algebra::new(Tensor3::from_entries(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)])).unwrap()
    }

    /// `e1·e1 = e1 + e2`, `e1·e2 = e2`: center-symmetric, neither associative
    /// nor commutative (found by the exhaustive dim-2 search).
    pub fn cs_nonassociative() -> Algebra {
        Algebra::new(Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1)])).unwrap()
    }
}
