//! Bilinear forms, isotropic subspaces and Manin triples.

use crate::algebra::Algebra;
use crate::bialgebra::{standard_cs_matched_pair, Bialgebra};
use crate::error::{shape, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Check, Item, Report, Witness};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(shape("Gram matrix", "square", format!("{}x{}", gram.rows(), gram.cols())));
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `xᵀ G y`.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Result<Scalar> {
        x.dot(&self.gram.apply(y)?)
    }

    pub fn symmetry_violation(&self) -> Check {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (self.gram.get(i, j), self.gram.get(j, i));
                if a != b {
                    return Some(Witness::new(&[i, j], a, b));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.determinant().expect("square").is_zero()
    }
}

/// A subspace given by a linearly independent spanning list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn new(ambient: usize, basis: Vec<Vector>) -> Result<Self> {
        if let Some(v) = basis.iter().find(|v| v.dim() != ambient) {
            return Err(shape("subspace basis vector", ambient, v.dim()));
        }
        if Matrix::from_columns(&basis, ambient).rank() != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Subspace { ambient, basis })
    }

    /// `span(e_start, ..., e_{start+len-1})` in dimension `ambient`.
    pub fn coordinate(ambient: usize, start: usize, len: usize) -> Self {
        let basis = (start..start + len).map(|i| Vector::basis(ambient, i)).collect();
        Subspace::new(ambient, basis).expect("coordinate vectors")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut cols = self.basis.clone();
        cols.push(v.clone());
        Matrix::from_columns(&cols, self.ambient).rank() == self.basis.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManinTriple {
    pub total: Algebra,
    pub plus: Subspace,
    pub minus: Subspace,
    pub form: BilinearForm,
}

impl ManinTriple {
    pub fn new(total: Algebra, plus: Subspace, minus: Subspace, form: BilinearForm) -> Result<Self> {
        let n = total.dim();
        for (what, d) in [("plus subspace", plus.ambient()), ("minus subspace", minus.ambient()), ("bilinear form", form.dim())] {
            if d != n {
                return Err(shape(what, n, d));
            }
        }
        Ok(ManinTriple { total, plus, minus, form })
    }
}

pub const DIRECT_SUM: &str = "plus and minus span the total space";
pub const PLUS_SUBALGEBRA: &str = "plus is a subalgebra";
pub const MINUS_SUBALGEBRA: &str = "minus is a subalgebra";
pub const PLUS_ISOTROPIC: &str = "plus is isotropic";
pub const MINUS_ISOTROPIC: &str = "minus is isotropic";
pub const SYMMETRIC: &str = "form is symmetric";
pub const NONDEGENERATE: &str = "form is nondegenerate";
pub const INVARIANT: &str = "form is invariant";
pub const TOTAL_CS: &str = "total algebra is center-symmetric";

/// `B(e_i∗e_j, e_k) = B(e_i, e_j∗e_k)` over all basis triples.
pub fn invariance_violation(form: &BilinearForm, a: &Algebra) -> Result<Check> {
    let n = a.dim();
    if form.dim() != n {
        return Err(shape("bilinear form", n, form.dim()));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = form.eval(a.basis_product(i, j), &Vector::basis(n, k))?;
                let rhs = form.eval(&Vector::basis(n, i), a.basis_product(j, k))?;
                if lhs != rhs {
                    return Ok(Some(Witness::new(&[i, j, k], lhs, rhs)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_invariant(form: &BilinearForm, a: &Algebra) -> Result<bool> {
    Ok(invariance_violation(form, a)?.is_none())
}

/// Gram matrix `[[0, I], [I, 0]]` of the pairing `⟨x + a*, y + b*⟩ = b*(x) + a*(y)`.
pub fn standard_form(n: usize) -> BilinearForm {
    let mut g = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        g.set(i, n + i, Scalar::one());
        g.set(n + i, i, Scalar::one());
    }
    BilinearForm { gram: g }
}

/// `A ⊕ A*` with the bicrossed product of the standard matched pair, the two
/// coordinate summands and the standard pairing. The product is built even
/// when the pair is not valid, so that [`verify_manin_triple`] can report
/// where it breaks.
pub fn build_standard_manin_triple(bg: &Bialgebra) -> Result<ManinTriple> {
    let n = bg.dim();
    let total = standard_cs_matched_pair(bg)?.candidate()?;
    ManinTriple::new(total, Subspace::coordinate(2 * n, 0, n), Subspace::coordinate(2 * n, n, n), standard_form(n))
}

fn subalgebra_violation(a: &Algebra, s: &Subspace) -> Check {
    for (i, x) in s.basis().iter().enumerate() {
        for (j, y) in s.basis().iter().enumerate() {
            let p = a.mul(x, y);
            if !s.contains(&p) {
                return Some(Witness::new(&[i, j], p, "an element of the subspace"));
            }
        }
    }
    None
}

fn isotropy_violation(form: &BilinearForm, s: &Subspace) -> Check {
    for (i, x) in s.basis().iter().enumerate() {
        for (j, y) in s.basis().iter().enumerate() {
            let v = form.eval(x, y).expect("shape");
            if !v.is_zero() {
                return Some(Witness::new(&[i, j], v, 0));
            }
        }
    }
    None
}

/// Every condition is evaluated; nothing short-circuits.
pub fn verify_manin_triple(t: &ManinTriple) -> Result<Report> {
    let n = t.total.dim();
    if t.plus.ambient() != n || t.minus.ambient() != n || t.form.dim() != n {
        return Err(shape("Manin triple", n, format!("{}/{}/{}", t.plus.ambient(), t.minus.ambient(), t.form.dim())));
    }
    let mut all = t.plus.basis().to_vec();
    all.extend_from_slice(t.minus.basis());
    let direct = all.len() == n && Matrix::from_columns(&all, n).rank() == n;
    let items = vec![
        Item::from_bool(DIRECT_SUM, "decomposition", direct),
        Item::new(PLUS_SUBALGEBRA, "subalgebra", subalgebra_violation(&t.total, &t.plus)),
        Item::new(MINUS_SUBALGEBRA, "subalgebra", subalgebra_violation(&t.total, &t.minus)),
        Item::new(PLUS_ISOTROPIC, "isotropy", isotropy_violation(&t.form, &t.plus)),
        Item::new(MINUS_ISOTROPIC, "isotropy", isotropy_violation(&t.form, &t.minus)),
        Item::new(SYMMETRIC, "form", t.form.symmetry_violation()),
        Item::from_bool(NONDEGENERATE, "form", t.form.is_nondegenerate()),
        Item::new(INVARIANT, "form", invariance_violation(&t.form, &t.total)?),
        Item::new(TOTAL_CS, "algebra", t.total.center_symmetry_violation()),
    ];
    Ok(Report::new("Manin triple", items))
}
