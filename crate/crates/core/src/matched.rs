//! Matched pairs of Lie algebras and of center-symmetric algebras.
//!
//! Orientation conventions:
//! - In a [`LieMatchedPair`], `rho[i]` is the action of the `i`-th basis element
//!   of `g` on `h`, and `mu[p]` the action of the `p`-th basis element of `h` on `g`.
//! - In a [`CsMatchedPair`], `la`/`ra` are actions of `A` on `B`'s coordinate
//!   space (one matrix per `A`-basis element), `lb`/`rb` actions of `B` on `A`.
//! - Direct sums are ordered first factor, then second factor.
//!
//! The center-symmetric compatibility conditions are evaluated as associator
//! equalities inside the candidate product on `A ⊕ B`, one for each mixed
//! argument pattern, rather than as expanded formulas.

use crate::algebra::{apply_bilinear, combine, representation_violation, sub_adjacent, Algebra, LieAlgebra};
use crate::bimodule::bimodule_violation;
use crate::error::{shape, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Item, Report, Witness};
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieMatchedPair {
    pub g: LieAlgebra,
    pub h: LieAlgebra,
    pub rho: Vec<Matrix>,
    pub mu: Vec<Matrix>,
}

fn check_action_shapes(what: &'static str, count: usize, side: usize, ops: &[Matrix]) -> Result<()> {
    if ops.len() != count {
        return Err(shape(what, format!("{count} matrices"), ops.len()));
    }
    if let Some(m) = ops.iter().find(|m| m.rows() != side || m.cols() != side) {
        return Err(shape(what, format!("{side}x{side}"), format!("{}x{}", m.rows(), m.cols())));
    }
    Ok(())
}

impl LieMatchedPair {
    fn check_shapes(&self) -> Result<()> {
        let (n, m) = (self.g.dim(), self.h.dim());
        check_action_shapes("action of g on h", n, m, &self.rho)?;
        check_action_shapes("action of h on g", m, n, &self.mu)
    }

    /// The first failed condition, by name, with its witness.
    pub fn violation(&self) -> Result<Option<(&'static str, Witness)>> {
        self.check_shapes()?;
        let (n, m) = (self.g.dim(), self.h.dim());
        let (gb, hb) = (self.g.structure(), self.h.structure());
        if let Some(w) = representation_violation(gb, &self.rho)? {
            return Ok(Some(("rho is a representation of g", w)));
        }
        if let Some(w) = representation_violation(hb, &self.mu)? {
            return Ok(Some(("mu is a representation of h", w)));
        }
        let rho = |x: &Vector| combine(&self.rho, x, m).expect("shape");
        let mu = |a: &Vector| combine(&self.mu, a, n).expect("shape");
        let act = |op: Matrix, v: &Vector| op.apply(v).expect("shape");
        let eg = |i| Vector::basis(n, i);
        let eh = |p| Vector::basis(m, p);

        // ρ(x)[a,b] − [ρ(x)a,b] − [a,ρ(x)b] + ρ(μ(a)x)b − ρ(μ(b)x)a = 0
        for i in 0..n {
            let x = eg(i);
            for p in 0..m {
                for q in 0..m {
                    let (a, b) = (eh(p), eh(q));
                    let rx = rho(&x);
                    let mut lhs = act(rx.clone(), &apply_bilinear(hb, &a, &b));
                    lhs = &lhs - &apply_bilinear(hb, &act(rx.clone(), &a), &b);
                    lhs = &lhs - &apply_bilinear(hb, &a, &act(rx, &b));
                    lhs = &lhs + &act(rho(&act(mu(&a), &x)), &b);
                    lhs = &lhs - &act(rho(&act(mu(&b), &x)), &a);
                    if !lhs.is_zero() {
                        return Ok(Some(("compatibility of rho with the bracket of h", Witness::new(&[i, p, q], lhs, Vector::zeros(m)))));
                    }
                }
            }
        }
        // μ(a)[x,y] − [μ(a)x,y] − [x,μ(a)y] + μ(ρ(x)a)y − μ(ρ(y)a)x = 0
        for p in 0..m {
            let a = eh(p);
            for i in 0..n {
                for j in 0..n {
                    let (x, y) = (eg(i), eg(j));
                    let ma = mu(&a);
                    let mut lhs = act(ma.clone(), &apply_bilinear(gb, &x, &y));
                    lhs = &lhs - &apply_bilinear(gb, &act(ma.clone(), &x), &y);
                    lhs = &lhs - &apply_bilinear(gb, &x, &act(ma, &y));
                    lhs = &lhs + &act(mu(&act(rho(&x), &a)), &y);
                    lhs = &lhs - &act(mu(&act(rho(&y), &a)), &x);
                    if !lhs.is_zero() {
                        return Ok(Some(("compatibility of mu with the bracket of g", Witness::new(&[p, i, j], lhs, Vector::zeros(n)))));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_valid(&self) -> Result<bool> {
        Ok(self.violation()?.is_none())
    }
}

pub fn check_lie_matched_pair(g: &LieAlgebra, h: &LieAlgebra, rho: &[Matrix], mu: &[Matrix]) -> Result<bool> {
    LieMatchedPair { g: g.clone(), h: h.clone(), rho: rho.to_vec(), mu: mu.to_vec() }.is_valid()
}

/// Bracket on `g ⊕ h`:
/// `[x+a, y+b] = [x,y] + μ(a)y − μ(b)x + [a,b] + ρ(x)b − ρ(y)a`, unvalidated.
pub fn lie_bicross_constants(p: &LieMatchedPair) -> Result<Tensor3> {
    p.check_shapes()?;
    let (n, m) = (p.g.dim(), p.h.dim());
    let mut t = Tensor3::cube(n + m);
    for ([i, j, k], v) in p.g.structure().iter() {
        t.set(i, j, k, v.clone())?;
    }
    for ([a, b, c], v) in p.h.structure().iter() {
        t.set(n + a, n + b, n + c, v.clone())?;
    }
    for i in 0..n {
        for q in 0..m {
            // [e_i, f_q] = −μ(f_q) e_i + ρ(e_i) f_q
            for k in 0..n {
                let v = p.mu[q].get(k, i);
                t.add_at(i, n + q, k, &-v)?;
                t.add_at(n + q, i, k, v)?;
            }
            for s in 0..m {
                let v = p.rho[i].get(s, q);
                t.add_at(i, n + q, n + s, v)?;
                t.add_at(n + q, i, n + s, &-v)?;
            }
        }
    }
    Ok(t)
}

/// The Lie algebra `g ⋈ h`; refuses an invalid pair.
pub fn lie_bicross_sum(p: &LieMatchedPair) -> Result<LieAlgebra> {
    if let Some((condition, witness)) = p.violation()? {
        return Err(Error::Invalid { what: "Lie matched pair", condition, witness });
    }
    LieAlgebra::new(lie_bicross_constants(p)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsMatchedPair {
    pub a: Algebra,
    pub b: Algebra,
    pub la: Vec<Matrix>,
    pub ra: Vec<Matrix>,
    pub lb: Vec<Matrix>,
    pub rb: Vec<Matrix>,
}

pub const LEFT_BIMODULE: &str = "(la, ra) is a bimodule of A";
pub const RIGHT_BIMODULE: &str = "(lb, rb) is a bimodule of B";
pub const MIXED_XYC: &str = "(x,y,c) = (c,y,x)";
pub const MIXED_XBZ: &str = "(x,b,z) = (z,b,x)";
pub const MIXED_XBC: &str = "(x,b,c) = (c,b,x)";
pub const MIXED_AYC: &str = "(a,y,c) = (c,y,a)";

impl CsMatchedPair {
    fn check_shapes(&self) -> Result<()> {
        let (n, m) = (self.a.dim(), self.b.dim());
        check_action_shapes("la", n, m, &self.la)?;
        check_action_shapes("ra", n, m, &self.ra)?;
        check_action_shapes("lb", m, n, &self.lb)?;
        check_action_shapes("rb", m, n, &self.rb)
    }

    /// `(x+a)∗(y+b) = (x·y + lb(a)y + rb(b)x) + (a∘b + la(x)b + ra(y)a)`, unvalidated.
    pub fn candidate(&self) -> Result<Algebra> {
        self.check_shapes()?;
        let (n, m) = (self.a.dim(), self.b.dim());
        let mut t = Tensor3::cube(n + m);
        for ([i, j, k], v) in self.a.structure().iter() {
            t.set(i, j, k, v.clone())?;
        }
        for ([p, q, s], v) in self.b.structure().iter() {
            t.set(n + p, n + q, n + s, v.clone())?;
        }
        for i in 0..n {
            for q in 0..m {
                // e_i ∗ f_q = rb(f_q) e_i + la(e_i) f_q
                for k in 0..n {
                    t.add_at(i, n + q, k, self.rb[q].get(k, i))?;
                }
                for s in 0..m {
                    t.add_at(i, n + q, n + s, self.la[i].get(s, q))?;
                }
                // f_q ∗ e_i = lb(f_q) e_i + ra(e_i) f_q
                for k in 0..n {
                    t.add_at(n + q, i, k, self.lb[q].get(k, i))?;
                }
                for s in 0..m {
                    t.add_at(n + q, i, n + s, self.ra[i].get(s, q))?;
                }
            }
        }
        Algebra::new(t)
    }

    /// Itemized check: both bimodule conditions and the four mixed associator
    /// conditions. Refuses factors that are not center-symmetric.
    pub fn report(&self) -> Result<Report> {
        self.check_shapes()?;
        self.a.require_center_symmetric("first factor")?;
        self.b.require_center_symmetric("second factor")?;
        let (n, m) = (self.a.dim(), self.b.dim());
        let left = bimodule_violation(&self.a, m, &self.la, &self.ra)?.map(|(_, w)| w);
        let right = bimodule_violation(&self.b, n, &self.lb, &self.rb)?.map(|(_, w)| w);

        let total = self.candidate()?;
        let d = n + m;
        let ass = total.associator_table();
        let at = |i: usize, j: usize, k: usize| &ass[(i * d + j) * d + k];
        let in_a = 0..n;
        let in_b = n..d;
        let check = |xs: &std::ops::Range<usize>, ys: &std::ops::Range<usize>, zs: &std::ops::Range<usize>| {
            for i in xs.clone() {
                for j in ys.clone() {
                    for k in zs.clone() {
                        let (lhs, rhs) = (at(i, j, k), at(k, j, i));
                        if lhs != rhs {
                            return Some(Witness::new(&[i, j, k], lhs, rhs));
                        }
                    }
                }
            }
            None
        };
        let tag = "matched pair";
        Ok(Report::new(
            "center-symmetric matched pair",
            vec![
                Item::new(LEFT_BIMODULE, "bimodule", left),
                Item::new(RIGHT_BIMODULE, "bimodule", right),
                Item::new(MIXED_XYC, tag, check(&in_a, &in_a, &in_b)),
                Item::new(MIXED_XBZ, tag, check(&in_a, &in_b, &in_a)),
                Item::new(MIXED_XBC, tag, check(&in_a, &in_b, &in_b)),
                Item::new(MIXED_AYC, tag, check(&in_b, &in_a, &in_b)),
            ],
        ))
    }

    pub fn is_valid(&self) -> Result<bool> {
        Ok(self.report()?.passed())
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.report()?;
        let failed = report.failures().next().cloned();
        match failed {
            None => Ok(()),
            Some(item) => Err(Error::Invalid {
                what: "center-symmetric matched pair",
                condition: condition_name(&item.name),
                witness: item.witness.clone().unwrap_or_else(|| Witness::new(&[], "", "")),
            }),
        }
    }
}

fn condition_name(name: &str) -> &'static str {
    [LEFT_BIMODULE, RIGHT_BIMODULE, MIXED_XYC, MIXED_XBZ, MIXED_XBC, MIXED_AYC]
        .into_iter()
        .find(|c| *c == name)
        .unwrap_or("matched pair condition")
}

pub fn check_cs_matched_pair(
    a: &Algebra,
    b: &Algebra,
    la: &[Matrix],
    ra: &[Matrix],
    lb: &[Matrix],
    rb: &[Matrix],
) -> Result<bool> {
    CsMatchedPair {
        a: a.clone(),
        b: b.clone(),
        la: la.to_vec(),
        ra: ra.to_vec(),
        lb: lb.to_vec(),
        rb: rb.to_vec(),
    }
    .is_valid()
}

/// The center-symmetric algebra `A ⋈ B`; refuses an invalid pair.
pub fn bicross_product(p: &CsMatchedPair) -> Result<Algebra> {
    p.require_valid()?;
    p.candidate()
}

/// `(G(A), G(B), la − ra, lb − rb)`; refuses an invalid pair.
pub fn induced_lie_matched_pair(p: &CsMatchedPair) -> Result<LieMatchedPair> {
    p.require_valid()?;
    let diff = |l: &[Matrix], r: &[Matrix]| l.iter().zip(r).map(|(x, y)| x - y).collect();
    Ok(LieMatchedPair {
        g: sub_adjacent(&p.a)?,
        h: sub_adjacent(&p.b)?,
        rho: diff(&p.la, &p.ra),
        mu: diff(&p.lb, &p.rb),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::algebra::{commutator_constants, left_ops, right_ops};
    use crate::bimodule::{dual_bimodule, semidirect_candidate, semidirect_sum, Bimodule};
    use crate::scalar::Scalar;
    use crate::tensor::kron_sum_action;
    use proptest::prelude::*;

    fn zeros(count: usize, side: usize) -> Vec<Matrix> {
        vec![Matrix::zeros(side, side); count]
    }

    fn nonabelian_lie() -> LieAlgebra {
        sub_adjacent(&upper_triangular()).unwrap()
    }

    #[test]
    fn zero_actions_give_a_lie_matched_pair() {
        let (g, h) = (nonabelian_lie(), sub_adjacent(&cs_nonassociative()).unwrap());
        assert!(check_lie_matched_pair(&g, &h, &zeros(3, 2), &zeros(2, 3)).unwrap());
        let p = LieMatchedPair { g: g.clone(), h: h.clone(), rho: zeros(3, 2), mu: zeros(2, 3) };
        let sum = lie_bicross_sum(&p).unwrap();
        // direct sum: block structure only
        for ([i, j, k], _) in sum.structure().iter() {
            assert!((i < 3 && j < 3 && k < 3) || (i >= 3 && j >= 3 && k >= 3));
        }
        let ab = LieMatchedPair { g: LieAlgebra::abelian(2), h: LieAlgebra::abelian(3), rho: zeros(2, 3), mu: zeros(3, 2) };
        assert_eq!(lie_bicross_sum(&ab).unwrap(), LieAlgebra::abelian(5));
    }

    #[test]
    fn one_dimensional_abelian_factor() {
        // character of the upper-triangular Lie algebra vanishing on [g,g] = span(E12)
        let g = nonabelian_lie();
        let rho = vec![Matrix::from_int_rows(&[&[2]]), Matrix::zeros(1, 1), Matrix::from_int_rows(&[&[-1]])];
        assert!(representation_violation(g.structure(), &rho).unwrap().is_none());
        assert!(check_lie_matched_pair(&g, &LieAlgebra::abelian(1), &rho, &zeros(1, 3)).unwrap());
        // a non-representation is rejected
        let bad = vec![Matrix::zeros(1, 1), Matrix::from_int_rows(&[&[1]]), Matrix::zeros(1, 1)];
        assert!(!check_lie_matched_pair(&g, &LieAlgebra::abelian(1), &bad, &zeros(1, 3)).unwrap());
        assert!(check_lie_matched_pair(&g, &LieAlgebra::abelian(1), &rho[..2], &zeros(1, 3)).is_err());
    }

    fn semidirect_pair(b: &Bimodule) -> CsMatchedPair {
        let (n, m) = (b.base().dim(), b.vdim());
        CsMatchedPair {
            a: b.base().clone(),
            b: Algebra::zero(m),
            la: b.left().to_vec(),
            ra: b.right().to_vec(),
            lb: zeros(m, n),
            rb: zeros(m, n),
        }
    }

    #[test]
    fn zero_second_factor_reduces_to_semidirect_sum() {
        for a in [field(), upper_triangular(), cs_nonassociative()] {
            for b in [Bimodule::regular(a.clone()).unwrap(), dual_bimodule(&Bimodule::regular(a.clone()).unwrap())] {
                let p = semidirect_pair(&b);
                assert!(p.is_valid().unwrap());
                assert_eq!(bicross_product(&p).unwrap(), semidirect_sum(&b));
            }
            // invalid action pair: the matched-pair verdict follows the bimodule verdict
            let mut l = left_ops(&a);
            let bumped = l[0].get(0, 0) + &Scalar::one();
            l[0].set(0, 0, bumped);
            let n = a.dim();
            let p = CsMatchedPair { a: a.clone(), b: Algebra::zero(n), la: l.clone(), ra: right_ops(&a), lb: zeros(n, n), rb: zeros(n, n) };
            let expect = crate::bimodule::is_bimodule(&a, &l, &right_ops(&a)).unwrap();
            assert_eq!(p.is_valid().unwrap(), expect);
            assert_eq!(semidirect_candidate(&a, n, &l, &right_ops(&a)).unwrap().is_center_symmetric(), expect);
        }
    }

    #[test]
    fn zero_actions_give_the_direct_product() {
        let (a, b) = (upper_triangular(), cs_nonassociative());
        let p = CsMatchedPair { a: a.clone(), b: b.clone(), la: zeros(3, 2), ra: zeros(3, 2), lb: zeros(2, 3), rb: zeros(2, 3) };
        assert!(p.is_valid().unwrap());
        let prod = bicross_product(&p).unwrap();
        assert!(prod.is_center_symmetric());
        assert_eq!(prod.structure().nnz(), a.structure().nnz() + b.structure().nnz());
        let lie = induced_lie_matched_pair(&p).unwrap();
        assert!(lie.rho.iter().chain(&lie.mu).all(Matrix::is_zero));
        assert!(lie.is_valid().unwrap());
    }

    #[test]
    fn symmetric_actions_on_commutative_factors_induce_zero_lie_actions() {
        let p = Algebra::new(Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])).unwrap();
        let reg = Bimodule::regular(p.clone()).unwrap();
        let pair = semidirect_pair(&reg);
        let lie = induced_lie_matched_pair(&pair).unwrap();
        assert!(lie.rho.iter().chain(&lie.mu).all(Matrix::is_zero));
    }

    #[test]
    fn refusals() {
        let bad = counterexample();
        let p = CsMatchedPair { a: bad.clone(), b: field(), la: zeros(2, 1), ra: zeros(2, 1), lb: zeros(1, 2), rb: zeros(1, 2) };
        assert!(matches!(p.report(), Err(Error::NotCenterSymmetric { .. })));
        let q = CsMatchedPair { a: field(), b: field(), la: zeros(2, 1), ra: zeros(1, 1), lb: zeros(1, 1), rb: zeros(1, 1) };
        assert!(matches!(q.report(), Err(Error::Shape { .. })));
    }

    #[test]
    fn mutation_breaks_the_product() {
        let a = cs_nonassociative();
        let reg = Bimodule::regular(a.clone()).unwrap();
        let mut p = semidirect_pair(&reg);
        p.lb[0].set(1, 0, Scalar::one());
        let report = p.report().unwrap();
        assert!(!report.passed());
        assert!(!p.candidate().unwrap().is_center_symmetric());
        assert!(bicross_product(&p).is_err());
        assert!(induced_lie_matched_pair(&p).is_err());
    }

    #[test]
    fn kron_sum_of_representations_is_a_representation() {
        let a = cs_nonassociative();
        let reg = Bimodule::regular(a.clone()).unwrap();
        let rho = crate::bimodule::induced_lie_rep(&reg);
        let mu = crate::bimodule::induced_lie_rep(&dual_bimodule(&reg));
        let tensor: Vec<Matrix> = rho.iter().zip(&mu).map(|(p, q)| kron_sum_action(p, q).unwrap()).collect();
        assert!(representation_violation(&commutator_constants(&a), &tensor).unwrap().is_none());
        let t = upper_triangular();
        let ad = crate::algebra::ad_ops(&t);
        let tensor: Vec<Matrix> = ad.iter().map(|p| kron_sum_action(p, p).unwrap()).collect();
        assert!(representation_violation(&commutator_constants(&t), &tensor).unwrap().is_none());
    }

    fn pool() -> Vec<Algebra> {
        vec![field(), cs_nonassociative(), Algebra::zero(1), upper_triangular()]
    }

    /// Pairs of pool algebras with regular-type actions and sparse perturbations.
    fn arb_pair() -> impl Strategy<Value = CsMatchedPair> {
        (0..4usize, 0..4usize, 0..3usize, proptest::collection::vec((0..4usize, 0..3usize, 0..3usize, 0..3usize, -1i64..=1), 0..3))
            .prop_map(|(ia, ib, style, muts)| {
                let (a, b) = (pool()[ia].clone(), pool()[ib].clone());
                let (n, m) = (a.dim(), b.dim());
                let mut p = CsMatchedPair { a, b, la: zeros(n, m), ra: zeros(n, m), lb: zeros(m, n), rb: zeros(m, n) };
                if style == 1 && n == m {
                    p.la = right_ops(&p.a).iter().map(Matrix::transpose).collect();
                    p.ra = left_ops(&p.a).iter().map(Matrix::transpose).collect();
                } else if style == 2 && n == m {
                    p.lb = right_ops(&p.b).iter().map(Matrix::transpose).collect();
                    p.rb = left_ops(&p.b).iter().map(Matrix::transpose).collect();
                }
                for (which, i, r, c, v) in muts {
                    let (list, count, side) = match which {
                        0 => (&mut p.la, n, m),
                        1 => (&mut p.ra, n, m),
                        2 => (&mut p.lb, m, n),
                        _ => (&mut p.rb, m, n),
                    };
                    if count > 0 && side > 0 {
                        list[i % count].set(r % side, c % side, Scalar::from_int(v));
                    }
                }
                p
            })
    }

    proptest! {
        #[test]
        fn matched_pair_iff_product_center_symmetric_given_bimodules(p in arb_pair()) {
            let report = p.report().unwrap();
            let bimodules = report.items[0].passed() && report.items[1].passed();
            if bimodules {
                prop_assert_eq!(report.passed(), p.candidate().unwrap().is_center_symmetric());
            }
        }

        #[test]
        fn valid_pairs_induce_lie_matched_pairs(p in arb_pair()) {
            if p.is_valid().unwrap() {
                let lie = induced_lie_matched_pair(&p).unwrap();
                prop_assert!(lie.is_valid().unwrap());
                let lhs = sub_adjacent(&bicross_product(&p).unwrap()).unwrap();
                prop_assert_eq!(lhs, lie_bicross_sum(&lie).unwrap());
            }
        }
    }
}
