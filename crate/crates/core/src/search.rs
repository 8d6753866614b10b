//! Exhaustive and seeded random search for low-dimensional structures.
//!
//! Enumeration walks every tensor over a coefficient grid in lexicographic
//! order: entries are visited as `(i,j,k)` with `k` fastest, each entry
//! running through the sorted coefficient set, the last entry changing
//! fastest.
//!
//! Random draws use SplitMix64:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15            (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (wrapping)
//! output z ^ (z >> 31)
//! ```
//!
//! seeded with the spec's seed. An index below `m` is drawn by rejecting
//! outputs at or above the largest multiple of `m`, then reducing mod `m`.
//! Tensor entries are drawn in the enumeration order.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::bialgebra::{equivalence_report, Bialgebra, Equivalence};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

/// Largest grid enumerated without an explicit limit.
pub const EXHAUSTIVE_CAP: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub dim: usize,
    pub coeffs: Vec<Scalar>,
    pub center_symmetric: bool,
    pub non_associative: bool,
    pub noncommutative: bool,
    pub seed: u64,
    pub limit: Option<usize>,
}

impl SearchSpec {
    pub fn new(dim: usize) -> Self {
        SearchSpec {
            dim,
            coeffs: [-1, 0, 1].into_iter().map(Scalar::from_int).collect(),
            center_symmetric: false,
            non_associative: false,
            noncommutative: false,
            seed: 0,
            limit: None,
        }
    }

    pub fn with_coeffs(mut self, coeffs: impl IntoIterator<Item = Scalar>) -> Self {
        self.coeffs = coeffs.into_iter().collect();
        self
    }

    pub fn center_symmetric(mut self) -> Self {
        self.center_symmetric = true;
        self
    }

    pub fn non_associative(mut self) -> Self {
        self.non_associative = true;
        self
    }

    pub fn noncommutative(mut self) -> Self {
        self.noncommutative = true;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    /// Sorted, deduplicated coefficient grid.
    pub fn grid(&self) -> Result<Vec<Scalar>> {
        let set: BTreeSet<&Scalar> = self.coeffs.iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(set.into_iter().cloned().collect())
    }

    /// Whether `a` passes every enabled filter.
    pub fn accepts(&self, a: &Algebra) -> bool {
        (!self.center_symmetric || a.is_center_symmetric())
            && (!self.non_associative || !a.is_associative())
            && (!self.noncommutative || !a.is_commutative())
    }

    /// `|grid|^(dim³)`, or `None` when it does not fit in a `u128`.
    pub fn space_size(&self) -> Result<Option<u128>> {
        let base = self.grid()?.len() as u128;
        let exp = self.dim.pow(3);
        let mut acc: u128 = 1;
        for _ in 0..exp {
            acc = match acc.checked_mul(base) {
                Some(v) => v,
                None => return Ok(None),
            };
        }
        Ok(Some(acc))
    }
}

fn tensor_from_digits(n: usize, grid: &[Scalar], digits: &[usize]) -> Tensor3 {
    let mut t = Tensor3::cube(n);
    for (idx, &d) in digits.iter().enumerate() {
        t.set(idx / (n * n), (idx / n) % n, idx % n, grid[d].clone()).expect("in range");
    }
    t
}

/// Every tensor on the grid passing the filters, in lexicographic order.
/// Refuses a grid larger than [`EXHAUSTIVE_CAP`] unless a limit is set.
pub fn enumerate_structures(s: &SearchSpec) -> Result<Vec<Algebra>> {
    let grid = s.grid()?;
    if s.limit.is_none() {
        match s.space_size()? {
            Some(size) if size <= EXHAUSTIVE_CAP => {}
            size => {
                let size = size.map_or_else(|| format!("{}^{}", grid.len(), s.dim.pow(3)), |v| v.to_string());
                return Err(Error::SearchTooLarge { size, cap: EXHAUSTIVE_CAP });
            }
        }
    }
    let n = s.dim;
    let len = n * n * n;
    let mut digits = vec![0usize; len];
    let mut out = Vec::new();
    loop {
        if s.limit.is_some_and(|l| out.len() >= l) {
            break;
        }
        let a = Algebra::new(tensor_from_digits(n, &grid, &digits))?;
        if s.accepts(&a) {
            out.push(a);
        }
        // odometer, last position fastest
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < grid.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
    Ok(out)
}

/// SplitMix64 generator, see the module docs.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..m` by rejection. `m` must be nonzero.
    pub fn below(&mut self, m: u64) -> u64 {
        assert!(m > 0, "empty range");
        let zone = u64::MAX - (u64::MAX % m);
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % m;
            }
        }
    }
}

fn draw(rng: &mut SplitMix64, n: usize, grid: &[Scalar]) -> Algebra {
    let digits: Vec<usize> = (0..n * n * n).map(|_| rng.below(grid.len() as u64) as usize).collect();
    Algebra::new(tensor_from_digits(n, grid, &digits)).expect("cubic")
}

/// One unfiltered tensor, a deterministic function of the spec's seed.
pub fn random_structure(s: &SearchSpec) -> Result<Algebra> {
    let grid = s.grid()?;
    Ok(draw(&mut SplitMix64::new(s.seed), s.dim, &grid))
}

/// Up to `limit` (default 1) filtered structures from one generator stream,
/// giving up after `max_draws` draws.
pub fn random_search(s: &SearchSpec, max_draws: usize) -> Result<Vec<Algebra>> {
    let grid = s.grid()?;
    let want = s.limit.unwrap_or(1);
    let mut rng = SplitMix64::new(s.seed);
    let mut out = Vec::new();
    for _ in 0..max_draws {
        if out.len() >= want {
            break;
        }
        let a = draw(&mut rng, s.dim, &grid);
        if s.accepts(&a) {
            out.push(a);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraFixture {
    pub bialgebra: Bialgebra,
    pub outcome: Equivalence,
}

/// `(c, 0)` for every pool member, then `(c, f)` for every ordered pair of
/// equal-dimension members with `f ≠ 0`, deduplicated, each tagged with its
/// equivalence outcome. Pool members must be center-symmetric.
pub fn derive_bialgebra_fixtures(pool: &[Algebra]) -> Result<Vec<BialgebraFixture>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |bg: Bialgebra| -> Result<()> {
        let key = (format!("{:?}", bg.product()), format!("{:?}", bg.dual_product()));
        if seen.insert(key) {
            let outcome = equivalence_report(&bg)?;
            out.push(BialgebraFixture { bialgebra: bg, outcome });
        }
        Ok(())
    };
    for a in pool {
        push(Bialgebra::trivial(a))?;
    }
    for a in pool {
        for b in pool {
            if a.dim() == b.dim() && !b.structure().is_zero() {
                push(Bialgebra::new(a.structure().clone(), b.structure().clone())?)?;
            }
        }
    }
    Ok(out)
}
