//! Center-symmetric bialgebras.
//!
//! A bialgebra is stored as two structure tensors on the same dimension:
//! `c` for the product on `A` and `f` for the product on the dual space,
//! `e*_i ∘ e*_j = Σ_k f_ij^k e*_k`. Equivalently the coproduct is
//! `α(e_k) = Σ_{i,j} f_ij^k e_i ⊗ e_j`, with `e_i ⊗ e_j` at coordinate `i*n + j`.
//!
//! The cocycle condition has two independent implementations:
//! [`cocycle_violation_direct`] applies the tensor-square coadjoint action to
//! coproduct vectors, [`cocycle_violation_constants`] evaluates the expanded
//! structure-constant identity. They share no intermediate data.

use serde::Serialize;

use crate::algebra::{ad_ops, commutator_constants, left_ops, right_ops, sub_adjacent, Algebra, LieAlgebra};
use crate::error::{shape, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::manin::{build_standard_manin_triple, verify_manin_triple};
use crate::matched::{CsMatchedPair, LieMatchedPair};
use crate::report::{Check, Item, Report, Witness};
use crate::scalar::Scalar;
use crate::tensor::{kron_sum_action, Tensor3};

/// Default largest dimension accepted by the O(n⁵) cocycle checks.
pub const DEFAULT_DIM_CAP: usize = 16;

pub const PRODUCT_CS: &str = "product is center-symmetric";
pub const DUAL_CS: &str = "dual product is center-symmetric";
pub const PRIMAL_COCYCLE: &str = "coproduct is a 1-cocycle of G(A)";
pub const DUAL_COCYCLE: &str = "dual coproduct is a 1-cocycle of G(A*)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bialgebra {
    c: Tensor3,
    f: Tensor3,
    name: Option<String>,
}

impl Bialgebra {
    /// Only shapes are validated here; see [`bialgebra_report`] for the axioms.
    pub fn new(c: Tensor3, f: Tensor3) -> Result<Self> {
        if !c.is_cubic() {
            return Err(shape("product tensor", "cubic", format!("{:?}", c.dims())));
        }
        if f.dims() != c.dims() {
            return Err(shape("dual product tensor", format!("{:?}", c.dims()), format!("{:?}", f.dims())));
        }
        Ok(Bialgebra { c, f, name: None })
    }

    /// The bialgebra with zero coproduct.
    pub fn trivial(a: &Algebra) -> Self {
        let n = a.dim();
        Bialgebra { c: a.structure().clone(), f: Tensor3::cube(n), name: a.name().map(str::to_owned) }
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

    pub fn product(&self) -> &Tensor3 {
        &self.c
    }

    pub fn dual_product(&self) -> &Tensor3 {
        &self.f
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::new(self.c.clone()).expect("cubic")
    }

    /// Swaps the roles of `A` and `A*`.
    pub fn dual(&self) -> Bialgebra {
        Bialgebra { c: self.f.clone(), f: self.c.clone(), name: None }
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.dim() > cap {
            return Err(Error::DimensionCap { dim: self.dim(), cap });
        }
        Ok(())
    }

    fn require_center_symmetric(&self) -> Result<(Algebra, Algebra)> {
        let a = self.algebra();
        let b = dual_algebra(self);
        a.require_center_symmetric("product")?;
        b.require_center_symmetric("dual product")?;
        Ok((a, b))
    }
}

/// The algebra `(A*, ∘)` with structure constants `f`.
pub fn dual_algebra(bg: &Bialgebra) -> Algebra {
    Algebra::new(bg.f.clone()).expect("cubic")
}

/// Matrices of `−ad*` on the dual space: entry `(k,j)` of the `i`-th matrix is
/// `−(c_ik^j − c_ki^j)`.
pub fn coadjoint_action(a: &Algebra) -> Result<Vec<Matrix>> {
    a.require_center_symmetric("algebra")?;
    let n = a.dim();
    let c = a.structure();
    Ok((0..n)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            for k in 0..n {
                for j in 0..n {
                    m.set(k, j, -(c.get(i, k, j) - c.get(k, i, j)));
                }
            }
            m
        })
        .collect())
}

fn coproduct_vector(coproduct: &Tensor3, k: usize) -> Vector {
    let n = coproduct.side();
    let mut v = vec![Scalar::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            v[i * n + j] = coproduct.get(i, j, k).clone();
        }
    }
    Vector::from(v)
}

/// Cocycle condition for an arbitrary bracket tensor:
/// `α([e_i,e_j]) = φ(e_i)α(e_j) − φ(e_j)α(e_i)` with `φ(x) = (−ad_x)⊗1 + 1⊗(−ad_x)`.
/// The witness is the basis pair `(i,j)`.
pub fn cocycle_violation_direct(bracket: &Tensor3, coproduct: &Tensor3) -> Result<Check> {
    if !bracket.is_cubic() {
        return Err(shape("bracket tensor", "cubic", format!("{:?}", bracket.dims())));
    }
    if coproduct.dims() != bracket.dims() {
        return Err(shape("coproduct tensor", format!("{:?}", bracket.dims()), format!("{:?}", coproduct.dims())));
    }
    let n = bracket.side();
    let alpha: Vec<Vector> = (0..n).map(|k| coproduct_vector(coproduct, k)).collect();
    let phi: Vec<Matrix> = (0..n)
        .map(|i| {
            let mut ad = Matrix::zeros(n, n);
            for j in 0..n {
                for k in 0..n {
                    ad.set(k, j, -bracket.get(i, j, k));
                }
            }
            kron_sum_action(&ad, &ad)
        })
        .collect::<Result<_>>()?;
    for i in 0..n {
        for j in 0..n {
            let mut lhs = Vector::zeros(n * n);
            for (k, a) in alpha.iter().enumerate() {
                lhs.add_scaled(bracket.get(i, j, k), a);
            }
            let rhs = &phi[i].apply(&alpha[j])? - &phi[j].apply(&alpha[i])?;
            if lhs != rhs {
                return Ok(Some(Witness::new(&[i, j], lhs, rhs)));
            }
        }
    }
    Ok(None)
}

/// Cocycle condition for a validated Lie algebra.
pub fn cocycle_check_direct(lie: &LieAlgebra, coproduct: &Tensor3) -> Result<bool> {
    Ok(cocycle_violation_direct(lie.structure(), coproduct)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Cocycle of `G(A)` with values in `A ⊗ A`.
    Primal,
    /// Cocycle of `G(A*)` with values in `A* ⊗ A*`.
    Dual,
}

/// Expanded identity, for every `(i,j,m,l)`:
/// `Σ_k g_ij^k f_ml^k = Σ_k [f_kl^i g_jk^m − f_kl^j g_ik^m + f_mk^i g_jk^l − f_mk^j g_ik^l]`
/// where `g_ij^k = c_ij^k − c_ji^k`. The dual side exchanges `c` and `f`.
pub fn cocycle_violation_constants(c: &Tensor3, f: &Tensor3, side: Side) -> Result<Check> {
    if !c.is_cubic() {
        return Err(shape("product tensor", "cubic", format!("{:?}", c.dims())));
    }
    if f.dims() != c.dims() {
        return Err(shape("dual product tensor", format!("{:?}", c.dims()), format!("{:?}", f.dims())));
    }
    let (c, f) = match side {
        Side::Primal => (c, f),
        Side::Dual => (f, c),
    };
    let n = c.side();
    let g = |i: usize, j: usize, k: usize| c.get(i, j, k) - c.get(j, i, k);
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                for l in 0..n {
                    let mut lhs = Scalar::zero();
                    let mut rhs = Scalar::zero();
                    for k in 0..n {
                        lhs += g(i, j, k) * f.get(m, l, k);
                        rhs += f.get(k, l, i) * g(j, k, m);
                        rhs -= f.get(k, l, j) * g(i, k, m);
                        rhs += f.get(m, k, i) * g(j, k, l);
                        rhs -= f.get(m, k, j) * g(i, k, l);
                    }
                    if lhs != rhs {
                        return Ok(Some(Witness::new(&[i, j, m, l], lhs, rhs)));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn cocycle_check_constants(c: &Tensor3, f: &Tensor3, side: Side) -> Result<bool> {
    Ok(cocycle_violation_constants(c, f, side)?.is_none())
}

/// Itemized axioms, evaluated with a dimension cap. Cocycle items are only
/// evaluated once both products are center-symmetric; otherwise they are
/// reported as failed without a witness.
pub fn bialgebra_report_with_cap(bg: &Bialgebra, cap: usize) -> Result<Report> {
    bg.check_cap(cap)?;
    let cs_a = bg.algebra().center_symmetry_violation();
    let cs_b = dual_algebra(bg).center_symmetry_violation();
    let items = if cs_a.is_none() && cs_b.is_none() {
        let primal = cocycle_violation_direct(&commutator_constants(&bg.algebra()), &bg.f)?;
        let dual = cocycle_violation_direct(&commutator_constants(&dual_algebra(bg)), &bg.c)?;
        vec![
            Item::new(PRODUCT_CS, "axiom", None),
            Item::new(DUAL_CS, "axiom", None),
            Item::new(PRIMAL_COCYCLE, "cocycle", primal),
            Item::new(DUAL_COCYCLE, "cocycle", dual),
        ]
    } else {
        vec![
            Item::new(PRODUCT_CS, "axiom", cs_a),
            Item::new(DUAL_CS, "axiom", cs_b),
            Item::from_bool(PRIMAL_COCYCLE, "cocycle", false),
            Item::from_bool(DUAL_COCYCLE, "cocycle", false),
        ]
    };
    Ok(Report::new("center-symmetric bialgebra", items))
}

pub fn bialgebra_report(bg: &Bialgebra) -> Result<Report> {
    bialgebra_report_with_cap(bg, DEFAULT_DIM_CAP)
}

/// The first failed axiom, by name.
pub fn bialgebra_violation(bg: &Bialgebra) -> Result<Option<(String, Option<Witness>)>> {
    Ok(bialgebra_report(bg)?.failures().next().map(|i| (i.name.clone(), i.witness.clone())))
}

pub fn is_bialgebra(bg: &Bialgebra) -> Result<bool> {
    Ok(bialgebra_report(bg)?.passed())
}

/// `(A, A*, R*·, L*·, R*∘, L*∘)`: transposed right and left multiplications of
/// each product acting on the other space. Unvalidated as a matched pair.
pub fn standard_cs_matched_pair(bg: &Bialgebra) -> Result<CsMatchedPair> {
    let (a, b) = bg.require_center_symmetric()?;
    let transposed = |ops: Vec<Matrix>| ops.iter().map(Matrix::transpose).collect::<Vec<_>>();
    Ok(CsMatchedPair {
        la: transposed(right_ops(&a)),
        ra: transposed(left_ops(&a)),
        lb: transposed(right_ops(&b)),
        rb: transposed(left_ops(&b)),
        a,
        b,
    })
}

/// `(G(A), G(A*), −ad·*, −ad∘*)`.
pub fn standard_lie_matched_pair(bg: &Bialgebra) -> Result<LieMatchedPair> {
    let (a, b) = bg.require_center_symmetric()?;
    Ok(LieMatchedPair {
        g: sub_adjacent(&a)?,
        h: sub_adjacent(&b)?,
        rho: coadjoint_action(&a)?,
        mu: coadjoint_action(&b)?,
    })
}

/// The four conditions expected to be equivalent for a pair of
/// center-symmetric products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub manin_triple: bool,
    pub lie_matched_pair: bool,
    pub cs_matched_pair: bool,
    pub bialgebra: bool,
}

impl Equivalence {
    pub fn as_array(&self) -> [bool; 4] {
        [self.manin_triple, self.lie_matched_pair, self.cs_matched_pair, self.bialgebra]
    }

    pub fn consistent(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }

    /// Compact `TTFT` style label.
    pub fn label(&self) -> String {
        self.as_array().iter().map(|&b| if b { 'T' } else { 'F' }).collect()
    }

    pub fn to_report(&self) -> Report {
        Report::new(
            "equivalence",
            vec![
                Item::from_bool("standard Manin triple", "equivalence", self.manin_triple),
                Item::from_bool("Lie matched pair (G(A), G(A*), -ad*, -ad*)", "equivalence", self.lie_matched_pair),
                Item::from_bool("center-symmetric matched pair (A, A*, R*, L*, R*, L*)", "equivalence", self.cs_matched_pair),
                Item::from_bool("center-symmetric bialgebra", "equivalence", self.bialgebra),
                Item::from_bool("all four conditions agree", "equivalence", self.consistent()),
            ],
        )
    }
}

/// Evaluates the four conditions independently. Refuses when either product
/// is not center-symmetric.
pub fn equivalence_report_with_cap(bg: &Bialgebra, cap: usize) -> Result<Equivalence> {
    bg.check_cap(cap)?;
    bg.require_center_symmetric()?;
    let manin_triple = verify_manin_triple(&build_standard_manin_triple(bg)?)?.passed();
    let lie_matched_pair = standard_lie_matched_pair(bg)?.is_valid()?;
    let cs_matched_pair = standard_cs_matched_pair(bg)?.is_valid()?;
    let bialgebra = bialgebra_report_with_cap(bg, cap)?.passed();
    Ok(Equivalence { manin_triple, lie_matched_pair, cs_matched_pair, bialgebra })
}

pub fn equivalence_report(bg: &Bialgebra) -> Result<Equivalence> {
    equivalence_report_with_cap(bg, DEFAULT_DIM_CAP)
}

/// `−(ad_i)ᵀ` computed from the adjoint matrices, for cross-checking.
pub fn negated_transposed_ad(a: &Algebra) -> Vec<Matrix> {
    ad_ops(a).iter().map(|m| -&m.transpose()).collect()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::algebra::fixtures::*;

    /// Dimension 2, noncommutative and non-associative product, nonzero
    /// coproduct; all four conditions hold.
    pub fn verified() -> Bialgebra {
        Bialgebra::new(
            Tensor3::from_entries(2, &[(1, 0, 0, -1), (1, 1, 0, -1), (1, 1, 1, -1)]),
            Tensor3::from_entries(2, &[(0, 0, 1, 1)]),
        )
        .unwrap()
    }

    /// `e_1 e_2 = −e_3` with zero coproduct, then one coproduct entry
    /// `f_12^3 = 1` switched on; all four conditions fail.
    pub fn mutated() -> Bialgebra {
        Bialgebra::new(Tensor3::from_entries(3, &[(0, 1, 2, -1)]), Tensor3::from_entries(3, &[(0, 1, 2, 1)])).unwrap()
    }

    pub fn field_pair() -> Bialgebra {
        Bialgebra::new(field().structure().clone(), field().structure().clone()).unwrap()
    }
}
