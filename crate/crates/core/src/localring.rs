//! Local invariants of Gorenstein curve singularities.
//!
//! Two views are provided. [`NumericalSemigroup`] covers unibranch monomial
//! singularities `C[t^a, t^b, ...]`, where the delta invariant is the number
//! of gaps and `n_P` equals the conductor. [`SingularPointModel`] is the
//! general branch model: each branch of the normalisation carries the
//! multiplier series `m` of the derivation `D(f) = m * df/dt` induced by a
//! local generator `u dt / h` of the dualising sheaf, so `m = h/u` and the
//! order of `m` is the order of the conductor on that branch.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::series::{Order, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalRingError {
    #[error("semigroup needs at least one positive generator")]
    NoGenerators,
    #[error("generators have gcd {0}; the semigroup would have infinitely many gaps")]
    NonCoprime(u64),
    #[error("conductor order on branch '{branch}' is undetermined within precision {precision}")]
    MultiplierOrder { branch: String, precision: usize },
    #[error("singular point needs at least one branch")]
    NoBranches,
    #[error("branch '{0}' has a unit multiplier but the point has several branches")]
    SmoothBranchInMultibranch(String),
    #[error("n_P = {0} is odd, so the point is not Gorenstein")]
    NonGorenstein(usize),
    #[error("semigroup with conductor {conductor} and delta {delta} is not symmetric")]
    NotSymmetric { conductor: u64, delta: u64 },
}

/// A numerical semigroup `S = <g_1, ..., g_k>` with `gcd = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    pub generators: Vec<u64>,
    /// `S ∩ [0, conductor)`.
    pub elements_below_conductor: Vec<u64>,
    pub gaps: Vec<u64>,
    pub delta: u64,
    pub conductor: u64,
    /// `conductor - 1`; `-1` for the full semigroup `N`.
    pub frobenius: i64,
    pub symmetric: bool,
}

/// Result of the Serre test `n_P = 2 delta_P` on a monomial branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    pub n_p: u64,
    pub delta: u64,
    pub symmetric: bool,
}

impl NumericalSemigroup {
    pub fn from_generators(gens: &[u64]) -> Result<Self, LocalRingError> {
        semigroup_from_generators(gens)
    }

    /// Membership test valid for every non-negative integer.
    pub fn contains(&self, x: u64) -> bool {
        x >= self.conductor || self.elements_below_conductor.binary_search(&x).is_ok()
    }
}

/// Enumerates the semigroup up to `min(gens) * max(gens)`, an upper bound for
/// the conductor, and derives gaps, conductor and symmetry.
pub fn semigroup_from_generators(gens: &[u64]) -> Result<NumericalSemigroup, LocalRingError> {
    let generators: Vec<u64> = gens
        .iter()
        .copied()
        .filter(|&g| g > 0)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if generators.is_empty() {
        return Err(LocalRingError::NoGenerators);
    }
    let g = generators.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(LocalRingError::NonCoprime(g));
    }
    let lo = generators[0];
    let hi = *generators.last().expect("nonempty");
    let bound = (lo * hi) as usize;

    let mut member = vec![false; bound + 1];
    member[0] = true;
    for x in 1..=bound {
        member[x] = generators
            .iter()
            .any(|&g| g as usize <= x && member[x - g as usize]);
    }
    let conductor = match member.iter().rposition(|&m| !m) {
        Some(last_gap) => last_gap as u64 + 1,
        None => 0,
    };
    let (elements_below_conductor, gaps): (Vec<u64>, Vec<u64>) =
        (0..conductor).partition(|&x| member[x as usize]);
    let symmetric =
        (0..conductor).all(|x| member[x as usize] != member[(conductor - 1 - x) as usize]);

    Ok(NumericalSemigroup {
        generators,
        delta: gaps.len() as u64,
        elements_below_conductor,
        gaps,
        conductor,
        frobenius: conductor as i64 - 1,
        symmetric,
    })
}

/// Serre's criterion on a monomial branch, where `n_P` is the conductor.
pub fn gorenstein_test_monomial(s: &NumericalSemigroup) -> GorensteinReport {
    GorensteinReport {
        gorenstein: s.conductor == 2 * s.delta,
        n_p: s.conductor,
        delta: s.delta,
        symmetric: s.symmetric,
    }
}

/// One branch of the normalisation over a singular point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchModel {
    pub name: String,
    pub multiplier: TruncatedSeries,
    pub conductor_order: usize,
}

impl BranchModel {
    /// Reads the conductor order off the multiplier series.
    pub fn new(
        name: impl Into<String>,
        multiplier: TruncatedSeries,
    ) -> Result<Self, LocalRingError> {
        let name = name.into();
        match multiplier.order() {
            Order::Known(k) => Ok(BranchModel {
                name,
                multiplier,
                conductor_order: k,
            }),
            Order::Undetermined(precision) => Err(LocalRingError::MultiplierOrder {
                branch: name,
                precision,
            }),
        }
    }

    /// Smooth branch with the ordinary derivative `d/dt`.
    pub fn smooth(name: impl Into<String>, precision: usize) -> Self {
        BranchModel {
            name: name.into(),
            multiplier: TruncatedSeries::one(precision),
            conductor_order: 0,
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.conductor_order == 0
    }
}

/// A Gorenstein point: its branches, `n_P` and `delta_P = n_P / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPointModel {
    pub branches: Vec<BranchModel>,
    pub n_p: usize,
    pub delta_p: usize,
}

impl SingularPointModel {
    pub fn new(branches: Vec<BranchModel>) -> Result<Self, LocalRingError> {
        build_singular_point(branches)
    }

    /// The unibranch point `C[S]` of a symmetric semigroup, with multiplier
    /// `t^conductor`.
    pub fn monomial(s: &NumericalSemigroup, precision: usize) -> Result<Self, LocalRingError> {
        if !gorenstein_test_monomial(s).gorenstein {
            return Err(LocalRingError::NotSymmetric {
                conductor: s.conductor,
                delta: s.delta,
            });
        }
        let c = s.conductor as usize;
        let multiplier = TruncatedSeries::monomial(crate::series::int(1), c, precision.max(c + 1));
        build_singular_point(vec![BranchModel::new("t", multiplier)?])
    }

    pub fn is_smooth(&self) -> bool {
        self.delta_p == 0
    }
}

/// Sums the branch conductor orders into `n_P` and halves it.
pub fn build_singular_point(
    branches: Vec<BranchModel>,
) -> Result<SingularPointModel, LocalRingError> {
    if branches.is_empty() {
        return Err(LocalRingError::NoBranches);
    }
    if branches.len() > 1 {
        if let Some(b) = branches.iter().find(|b| b.is_smooth()) {
            return Err(LocalRingError::SmoothBranchInMultibranch(b.name.clone()));
        }
    }
    let n_p: usize = branches.iter().map(|b| b.conductor_order).sum();
    if !n_p.is_multiple_of(2) {
        return Err(LocalRingError::NonGorenstein(n_p));
    }
    Ok(SingularPointModel {
        branches,
        n_p,
        delta_p: n_p / 2,
    })
}
