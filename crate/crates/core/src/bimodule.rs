//! Bimodules of center-symmetric algebras and the semidirect sum.
//!
//! A bimodule `(l, r, V)` of `A` is a pair of linear maps `A → gl(V)` with
//!
//! ```text
//! [l_x, r_y] = [l_y, r_x]
//! l_{xy} − l_x l_y = r_x r_y − r_{yx}
//! ```
//!
//! Actions are stored as one matrix per basis element of `A` acting on column
//! coordinates of `V`; `l_x` for a general `x` is the linear extension.

use crate::algebra::{combine, left_ops, representation_violation, right_ops, commutator_constants, Algebra};
use crate::error::{shape, Error, Result};
use crate::linalg::{mat_commutator, mat_mul, Matrix};
use crate::report::{Check, Witness};
use crate::tensor::Tensor3;

pub const COMMUTATOR_CONDITION: &str = "[l_x, r_y] = [l_y, r_x]";
pub const PRODUCT_CONDITION: &str = "l_{xy} - l_x l_y = r_x r_y - r_{yx}";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    base: Algebra,
    vdim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl Bimodule {
    /// Validates both bimodule identities.
    pub fn new(base: Algebra, vdim: usize, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        if let Some((condition, witness)) = bimodule_violation(&base, vdim, &l, &r)? {
            return Err(Error::Invalid { what: "bimodule", condition, witness });
        }
        Ok(Bimodule { base, vdim, l, r })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn left(&self) -> &[Matrix] {
        &self.l
    }

    pub fn right(&self) -> &[Matrix] {
        &self.r
    }

    /// Zero actions on a space of dimension `vdim`.
    pub fn zero(base: Algebra, vdim: usize) -> Result<Self> {
        let n = base.dim();
        Self::new(base, vdim, vec![Matrix::zeros(vdim, vdim); n], vec![Matrix::zeros(vdim, vdim); n])
    }

    /// `(L, R, A)`: the algebra acting on itself.
    pub fn regular(base: Algebra) -> Result<Self> {
        let (l, r) = (left_ops(&base), right_ops(&base));
        let n = base.dim();
        Self::new(base, n, l, r)
    }
}

fn check_shapes(a: &Algebra, vdim: usize, l: &[Matrix], r: &[Matrix]) -> Result<()> {
    let n = a.dim();
    if l.len() != n || r.len() != n {
        return Err(shape("bimodule actions", format!("{n} matrices each"), format!("{} and {}", l.len(), r.len())));
    }
    if let Some(m) = l.iter().chain(r).find(|m| m.rows() != vdim || m.cols() != vdim) {
        return Err(shape("bimodule actions", format!("{vdim}x{vdim}"), format!("{}x{}", m.rows(), m.cols())));
    }
    Ok(())
}

/// The first failed bimodule identity with its witnessing basis pair.
/// Refuses a base algebra that is not center-symmetric.
pub fn bimodule_violation(
    a: &Algebra,
    vdim: usize,
    l: &[Matrix],
    r: &[Matrix],
) -> Result<Option<(&'static str, Witness)>> {
    check_shapes(a, vdim, l, r)?;
    a.require_center_symmetric("bimodule base algebra")?;
    Ok(action_pair_violation(a, vdim, l, r))
}

/// Both identities on basis pairs, without the center-symmetry precondition.
pub(crate) fn action_pair_violation(
    a: &Algebra,
    vdim: usize,
    l: &[Matrix],
    r: &[Matrix],
) -> Option<(&'static str, Witness)> {
    commutator_condition_violation(a, l, r)
        .map(|w| (COMMUTATOR_CONDITION, w))
        .or_else(|| product_condition_violation(a, vdim, l, r).map(|w| (PRODUCT_CONDITION, w)))
}

/// `[l_x, r_y] = [l_y, r_x]` on basis pairs. Shapes are assumed valid.
pub fn commutator_condition_violation(a: &Algebra, l: &[Matrix], r: &[Matrix]) -> Check {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = mat_commutator(&l[i], &r[j]).expect("square");
            let rhs = mat_commutator(&l[j], &r[i]).expect("square");
            if lhs != rhs {
                return Some(Witness::new(&[i, j], lhs, rhs));
            }
        }
    }
    None
}

/// `l_{xy} − l_x l_y = r_x r_y − r_{yx}` on basis pairs. Shapes are assumed valid.
pub fn product_condition_violation(a: &Algebra, vdim: usize, l: &[Matrix], r: &[Matrix]) -> Check {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let l_xy = combine(l, a.basis_product(i, j), vdim).expect("shape");
            let r_yx = combine(r, a.basis_product(j, i), vdim).expect("shape");
            let lhs = &l_xy - &mat_mul(&l[i], &l[j]).expect("square");
            let rhs = &mat_mul(&r[i], &r[j]).expect("square") - &r_yx;
            if lhs != rhs {
                return Some(Witness::new(&[i, j], lhs, rhs));
            }
        }
    }
    None
}

/// Whether `(l, r)` is a bimodule of the center-symmetric algebra `a`.
pub fn is_bimodule(a: &Algebra, l: &[Matrix], r: &[Matrix]) -> Result<bool> {
    let vdim = l.first().or(r.first()).map_or(0, Matrix::rows);
    Ok(bimodule_violation(a, vdim, l, r)?.is_none())
}

/// Product on `A ⊕ V` (basis `e_1..e_n, v_1..v_m`):
/// `(x1 + v1)∗(x2 + v2) = x1·x2 + l_{x1} v2 + r_{x2} v1`, with no validation of `(l, r)`.
pub fn semidirect_candidate(a: &Algebra, vdim: usize, l: &[Matrix], r: &[Matrix]) -> Result<Algebra> {
    check_shapes(a, vdim, l, r)?;
    let n = a.dim();
    let mut t = Tensor3::cube(n + vdim);
    for ([i, j, k], v) in a.structure().iter() {
        t.set(i, j, k, v.clone())?;
    }
    for i in 0..n {
        for src in 0..vdim {
            for dst in 0..vdim {
                t.set(i, n + src, n + dst, l[i].get(dst, src).clone())?;
                t.set(n + src, i, n + dst, r[i].get(dst, src).clone())?;
            }
        }
    }
    Algebra::new(t)
}

/// The semidirect sum `A ⋉_{l,r} V`; center-symmetric for every bimodule.
pub fn semidirect_sum(b: &Bimodule) -> Algebra {
    semidirect_candidate(&b.base, b.vdim, &b.l, &b.r).expect("validated shapes")
}

/// `(r*, l*, V*)`, where the dual of an action is its transpose.
pub fn dual_bimodule(b: &Bimodule) -> Bimodule {
    Bimodule {
        base: b.base.clone(),
        vdim: b.vdim,
        l: b.r.iter().map(Matrix::transpose).collect(),
        r: b.l.iter().map(Matrix::transpose).collect(),
    }
}

/// `x ↦ l_x − r_x`, a representation of the sub-adjacent Lie algebra.
pub fn induced_lie_rep(b: &Bimodule) -> Vec<Matrix> {
    b.l.iter().zip(&b.r).map(|(l, r)| l - r).collect()
}

/// Checks the representation law of [`induced_lie_rep`] against the commutator of the base.
pub fn induced_rep_violation(b: &Bimodule) -> Result<Option<Witness>> {
    representation_violation(&commutator_constants(&b.base), &induced_lie_rep(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::algebra::{ad_ops, Algebra};
    use crate::scalar::Scalar;
    use proptest::prelude::*;

    fn transposed(ms: &[Matrix]) -> Vec<Matrix> {
        ms.iter().map(Matrix::transpose).collect()
    }

    #[test]
    fn zero_and_regular_bimodules() {
        for a in [field(), upper_triangular(), cs_nonassociative(), Algebra::zero(2)] {
            for vdim in [0, 1, 3] {
                assert!(Bimodule::zero(a.clone(), vdim).is_ok());
            }
            assert!(Bimodule::regular(a).is_ok());
        }
    }

    #[test]
    fn left_action_alone_is_not_a_bimodule() {
        let a = cs_nonassociative();
        let zeros = vec![Matrix::zeros(2, 2); 2];
        assert!(!is_bimodule(&a, &left_ops(&a), &zeros).unwrap());
    }

    #[test]
    fn refusals() {
        let bad = counterexample();
        let l = left_ops(&bad);
        assert!(matches!(is_bimodule(&bad, &l, &l), Err(Error::NotCenterSymmetric { .. })));
        let a = field();
        assert!(matches!(is_bimodule(&a, &[], &[]), Err(Error::Shape { .. })));
        let ragged = vec![Matrix::zeros(2, 3)];
        assert!(is_bimodule(&a, &ragged, &ragged).is_err());
    }

    #[test]
    fn semidirect_examples() {
        let z = Bimodule::zero(Algebra::zero(2), 3).unwrap();
        assert_eq!(semidirect_sum(&z), Algebra::zero(5));

        // field acting on itself: e1 e1 = e1, e1 v1 = v1, v1 e1 = v1, v1 v1 = 0
        let s = semidirect_sum(&Bimodule::regular(field()).unwrap());
        let expected = Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
        assert_eq!(s.structure(), &expected);
        assert!(s.is_associative());
    }

    #[test]
    fn mutated_action_breaks_semidirect_center_symmetry() {
        let a = upper_triangular();
        let reg = Bimodule::regular(a.clone()).unwrap();
        let mut l = reg.left().to_vec();
        l[0].set(0, 0, Scalar::from_int(2));
        let violation = bimodule_violation(&a, 3, &l, reg.right()).unwrap();
        assert!(violation.is_some());
        let cand = semidirect_candidate(&a, 3, &l, reg.right()).unwrap();
        assert!(!cand.is_center_symmetric());
    }

    #[test]
    fn dual_examples() {
        let z = Bimodule::zero(field(), 2).unwrap();
        assert_eq!(dual_bimodule(&z), z);
        let a = cs_nonassociative();
        let reg = Bimodule::regular(a.clone()).unwrap();
        let d = dual_bimodule(&reg);
        assert_eq!(d.left(), transposed(reg.right()).as_slice());
        assert!(is_bimodule(&a, d.left(), d.right()).unwrap());
        assert_eq!(dual_bimodule(&d), reg);
    }

    #[test]
    fn induced_representations() {
        let p = Algebra::new(Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])).unwrap();
        let reg = Bimodule::regular(p).unwrap();
        assert!(induced_lie_rep(&reg).iter().all(Matrix::is_zero));
        let a = cs_nonassociative();
        let reg = Bimodule::regular(a.clone()).unwrap();
        assert_eq!(induced_lie_rep(&reg), ad_ops(&a));
        assert!(induced_rep_violation(&reg).unwrap().is_none());
        assert!(induced_rep_violation(&dual_bimodule(&reg)).unwrap().is_none());
    }

    fn cs_pool() -> Vec<Algebra> {
        vec![field(), upper_triangular(), cs_nonassociative(), Algebra::zero(2)]
    }

    /// Random action pairs: perturbations of regular/dual/zero bimodules.
    fn arb_actions() -> impl Strategy<Value = (Algebra, usize, Vec<Matrix>, Vec<Matrix>)> {
        (0..4usize, 0..3usize, proptest::collection::vec((any::<bool>(), 0..3usize, 0..3usize, 0..3usize, -1i64..=1), 0..3))
            .prop_map(|(which, kind, muts)| {
                let a = cs_pool()[which].clone();
                let n = a.dim();
                let base = match kind {
                    0 => Bimodule::regular(a.clone()).unwrap(),
                    1 => dual_bimodule(&Bimodule::regular(a.clone()).unwrap()),
                    _ => Bimodule::zero(a.clone(), n).unwrap(),
                };
                let (mut l, mut r) = (base.left().to_vec(), base.right().to_vec());
                for (left, i, row, col, v) in muts {
                    let target = if left { &mut l } else { &mut r };
                    target[i % n].set(row % n, col % n, Scalar::from_int(v));
                }
                (a, n, l, r)
            })
    }

    proptest! {
        #[test]
        fn bimodule_iff_semidirect_is_center_symmetric((a, n, l, r) in arb_actions()) {
            let is_bi = is_bimodule(&a, &l, &r).unwrap();
            let cand = semidirect_candidate(&a, n, &l, &r).unwrap();
            prop_assert_eq!(is_bi, cand.is_center_symmetric());
        }

        #[test]
        fn dual_pair_has_same_verdict((a, _n, l, r) in arb_actions()) {
            prop_assert_eq!(
                is_bimodule(&a, &l, &r).unwrap(),
                is_bimodule(&a, &transposed(&r), &transposed(&l)).unwrap()
            );
        }

        #[test]
        fn valid_bimodules_induce_lie_reps((a, n, l, r) in arb_actions()) {
            if let Ok(b) = Bimodule::new(a, n, l, r) {
                prop_assert!(induced_rep_violation(&b).unwrap().is_none());
                prop_assert_eq!(dual_bimodule(&dual_bimodule(&b)), b);
            }
        }
    }
}
