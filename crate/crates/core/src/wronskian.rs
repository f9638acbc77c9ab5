//! Widland-Lax Wronskians and ramification weights at Gorenstein points.
//!
//! On each branch the derivation is `D(f) = m * df/dt`, where `m` is the
//! branch multiplier of the [`SingularPointModel`]. The Wronskian of a basis
//! `v_0, ..., v_r` is the determinant whose row `k` holds `D^k v_j`; its order
//! on a branch is that branch's share of the weight of the point, and the
//! weight of the point is the sum over the branches.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::localring::{BranchModel, SingularPointModel};
use crate::series::{series_det, Order, Rat, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WronskianError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("a linear system needs at least one section")]
    EmptySystem,
    #[error("section {section} has {got} branch restrictions, expected {expected}")]
    BranchCount {
        section: usize,
        expected: usize,
        got: usize,
    },
    #[error("section {section} has different constant terms on different branches")]
    ConstantTermMismatch { section: usize },
    #[error("section {section} vanishes identically on branch '{branch}'")]
    ZeroRestriction { section: usize, branch: String },
    #[error("precision {precision} exhausted on branch '{branch}'; try precision {suggested}")]
    PrecisionExhausted {
        branch: String,
        precision: usize,
        suggested: usize,
    },
    #[error("sections are linearly dependent on branch '{branch}'")]
    RankDeficient { branch: String },
    #[error(
        "weight {total} is below the lower bound {lower_bound}; the input model is inconsistent"
    )]
    InconsistentModel { total: usize, lower_bound: usize },
}

impl WronskianError {
    fn on_branch(self, name: &str) -> Self {
        match self {
            WronskianError::PrecisionExhausted {
                branch,
                precision,
                suggested,
            } if branch.is_empty() => WronskianError::PrecisionExhausted {
                branch: name.to_owned(),
                precision,
                suggested,
            },
            WronskianError::RankDeficient { branch } if branch.is_empty() => {
                WronskianError::RankDeficient {
                    branch: name.to_owned(),
                }
            }
            other => other,
        }
    }
}

/// A basis `v_0, ..., v_r` of sections near a point, each given by its
/// restriction to every branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalLinearSystem {
    /// `sections[j][b]` is the restriction of `v_j` to branch `b`.
    sections: Vec<Vec<TruncatedSeries>>,
    pub degree: Option<i64>,
    pub genus: Option<i64>,
}

impl LocalLinearSystem {
    /// Checks that every section has the same number of branch restrictions,
    /// that constant terms agree across branches and that no restriction is
    /// identically zero.
    pub fn new(sections: Vec<Vec<TruncatedSeries>>) -> Result<Self, WronskianError> {
        let branches = sections.first().ok_or(WronskianError::EmptySystem)?.len();
        for (j, restrictions) in sections.iter().enumerate() {
            if restrictions.len() != branches || branches == 0 {
                return Err(WronskianError::BranchCount {
                    section: j,
                    expected: branches,
                    got: restrictions.len(),
                });
            }
            for (b, s) in restrictions.iter().enumerate() {
                if s.is_zero_within_precision() {
                    if s.is_exact() {
                        return Err(WronskianError::ZeroRestriction {
                            section: j,
                            branch: b.to_string(),
                        });
                    }
                    return Err(WronskianError::PrecisionExhausted {
                        branch: b.to_string(),
                        precision: s.precision(),
                        suggested: 2 * s.precision().max(1),
                    });
                }
            }
            let c0 = restrictions[0].constant_term();
            if restrictions.iter().any(|s| s.constant_term() != c0) {
                return Err(WronskianError::ConstantTermMismatch { section: j });
            }
        }
        Ok(LocalLinearSystem {
            sections,
            degree: None,
            genus: None,
        })
    }

    /// System on a unibranch point: one series per section.
    pub fn single_branch(sections: Vec<TruncatedSeries>) -> Result<Self, WronskianError> {
        Self::new(sections.into_iter().map(|s| vec![s]).collect())
    }

    pub fn with_globals(mut self, degree: i64, genus: i64) -> Self {
        self.degree = Some(degree);
        self.genus = Some(genus);
        self
    }

    /// `dim V - 1`.
    pub fn r(&self) -> usize {
        self.sections.len() - 1
    }

    pub fn branch_count(&self) -> usize {
        self.sections[0].len()
    }

    pub fn sections(&self) -> &[Vec<TruncatedSeries>] {
        &self.sections
    }

    /// The restrictions of all sections to branch `b`, in basis order.
    pub fn on_branch(&self, b: usize) -> Vec<TruncatedSeries> {
        self.sections.iter().map(|s| s[b].clone()).collect()
    }

    /// Highest nonzero coefficient index over all restrictions.
    pub fn max_degree(&self) -> usize {
        self.sections
            .iter()
            .flatten()
            .filter_map(TruncatedSeries::degree)
            .max()
            .unwrap_or(0)
    }

    /// Precision that certifies every Wronskian order for this system:
    /// `(r+1)(max degree + max conductor order + 1) + 8`.
    pub fn certification_precision(&self, point: &SingularPointModel) -> usize {
        let c = point
            .branches
            .iter()
            .map(|b| b.conductor_order)
            .max()
            .unwrap_or(0);
        certification_precision(self.r(), self.max_degree(), c)
    }
}

/// `(r+1)(max section degree + conductor order + 1) + 8`.
pub fn certification_precision(r: usize, max_degree: usize, conductor_order: usize) -> usize {
    (r + 1) * (max_degree + conductor_order + 1) + 8
}

/// Orders of an adapted basis of a system on one branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingProfile {
    /// `a_0 < a_1 < ... < a_r`.
    pub vanishing_sequence: Vec<usize>,
    /// The gaps `a_i + 1`.
    pub gap_sequence: Vec<usize>,
    /// `sum a_i - r(r+1)/2`.
    pub weight: usize,
}

/// Weight of a point with respect to a linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightReport {
    pub per_branch_order: Vec<usize>,
    /// Leading coefficient of the Wronskian on each branch.
    pub leading_coefficients: Vec<Rat>,
    pub total_weight: usize,
    /// `delta_P * r(r+1)`.
    pub lower_bound: usize,
    pub extraweight: usize,
    /// Vanishing profile of the pulled-back sections on each branch.
    pub branch_profiles: Vec<VanishingProfile>,
}

fn exhausted(precision: usize) -> WronskianError {
    WronskianError::PrecisionExhausted {
        branch: String::new(),
        precision,
        suggested: 2 * precision.max(8),
    }
}

/// `D(f) = m * df/dt` on one branch. Exact inputs keep their precision.
fn wl_derivative(f: &TruncatedSeries, multiplier: &TruncatedSeries) -> TruncatedSeries {
    let n = f.precision();
    let df = f.derivative().extend_exact(n);
    &df * &multiplier.extend_exact(n)
}

/// `(f, Df, ..., D^r f)` for the branch derivation.
pub fn wl_derivative_tower(
    f: &TruncatedSeries,
    branch: &BranchModel,
    r: usize,
) -> Result<Vec<TruncatedSeries>, WronskianError> {
    let mut tower = Vec::with_capacity(r + 1);
    tower.push(f.clone());
    for _ in 0..r {
        let next = wl_derivative(tower.last().expect("nonempty"), &branch.multiplier);
        if next.precision() == 0 {
            return Err(exhausted(f.precision()).on_branch(&branch.name));
        }
        tower.push(next);
    }
    Ok(tower)
}

fn check_attached(
    point: &SingularPointModel,
    sys: &LocalLinearSystem,
) -> Result<(), WronskianError> {
    if sys.branch_count() != point.branches.len() {
        return Err(WronskianError::BranchCount {
            section: 0,
            expected: point.branches.len(),
            got: sys.branch_count(),
        });
    }
    Ok(())
}

/// Wronskian of the system on a single branch.
pub fn branch_wronskian(
    branch: &BranchModel,
    sections: &[TruncatedSeries],
) -> Result<TruncatedSeries, WronskianError> {
    let r = sections.len().saturating_sub(1);
    let towers = sections
        .iter()
        .map(|f| wl_derivative_tower(f, branch, r))
        .collect::<Result<Vec<_>, _>>()?;
    // rows = derivative order, columns = basis index
    let matrix: Vec<Vec<TruncatedSeries>> = (0..=r)
        .map(|k| towers.iter().map(|t| t[k].clone()).collect())
        .collect();
    Ok(series_det(&matrix)?)
}

/// Per-branch Widland-Lax Wronskians.
pub fn wl_wronskian(
    point: &SingularPointModel,
    sys: &LocalLinearSystem,
) -> Result<Vec<TruncatedSeries>, WronskianError> {
    check_attached(point, sys)?;
    point
        .branches
        .iter()
        .enumerate()
        .map(|(b, branch)| branch_wronskian(branch, &sys.on_branch(b)))
        .collect()
}

/// Total weight, its lower bound `delta_P r(r+1)` and the extraweight.
pub fn point_weight(
    point: &SingularPointModel,
    sys: &LocalLinearSystem,
) -> Result<WeightReport, WronskianError> {
    let wronskians = wl_wronskian(point, sys)?;
    let mut per_branch_order = Vec::with_capacity(wronskians.len());
    let mut leading_coefficients = Vec::with_capacity(wronskians.len());
    let mut branch_profiles = Vec::with_capacity(wronskians.len());
    for (b, (w, branch)) in wronskians.iter().zip(&point.branches).enumerate() {
        match w.order() {
            Order::Known(k) => {
                per_branch_order.push(k);
                leading_coefficients.push(w.coeffs()[k].clone());
            }
            Order::Undetermined(precision) => {
                if w.is_exact() {
                    return Err(WronskianError::RankDeficient {
                        branch: branch.name.clone(),
                    });
                }
                let suggested = (2 * precision).max(sys.certification_precision(point));
                return Err(WronskianError::PrecisionExhausted {
                    branch: branch.name.clone(),
                    precision,
                    suggested,
                });
            }
        }
        let profile =
            vanishing_sequence(&sys.on_branch(b)).map_err(|e| e.on_branch(&branch.name))?;
        branch_profiles.push(profile);
    }
    let r = sys.r();
    let total_weight: usize = per_branch_order.iter().sum();
    let lower_bound = point.delta_p * r * (r + 1);
    if total_weight < lower_bound {
        return Err(WronskianError::InconsistentModel {
            total: total_weight,
            lower_bound,
        });
    }
    Ok(WeightReport {
        per_branch_order,
        leading_coefficients,
        total_weight,
        lower_bound,
        extraweight: total_weight - lower_bound,
        branch_profiles,
    })
}

/// Vanishing sequence of the span of `sections` at `t = 0`.
///
/// Column reduction over the coefficient matrix: at each step the column of
/// least order (leftmost on ties) becomes the pivot and its leading term is
/// cleared from every other remaining column.
pub fn vanishing_sequence(
    sections: &[TruncatedSeries],
) -> Result<VanishingProfile, WronskianError> {
    if sections.is_empty() {
        return Err(WronskianError::EmptySystem);
    }
    let precision = sections
        .iter()
        .map(TruncatedSeries::precision)
        .min()
        .unwrap_or(0);
    let mut cols: Vec<TruncatedSeries> = sections.iter().map(|s| s.truncate(precision)).collect();
    let mut orders = Vec::with_capacity(cols.len());
    while !cols.is_empty() {
        let pivot_idx = cols
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.order().known().map(|k| (k, i)))
            .min()
            .map(|(_, i)| i);
        let Some(pivot_idx) = pivot_idx else {
            if cols.iter().all(TruncatedSeries::is_exact) {
                return Err(WronskianError::RankDeficient {
                    branch: String::new(),
                });
            }
            return Err(exhausted(precision));
        };
        let pivot = cols.remove(pivot_idx);
        let k = pivot.order().known().expect("pivot has known order");
        let lead = pivot.coeffs()[k].clone();
        for c in cols.iter_mut() {
            let ck = &c.coeffs()[k];
            if !ck.is_zero() {
                let factor = ck / &lead;
                *c = &*c - &pivot.scale(&factor);
            }
        }
        orders.push(k);
    }
    let r = orders.len() - 1;
    let sum: usize = orders.iter().sum();
    Ok(VanishingProfile {
        gap_sequence: orders.iter().map(|a| a + 1).collect(),
        weight: sum - r * (r + 1) / 2,
        vanishing_sequence: orders,
    })
}

/// Total ramification weight `(r+1)d + (g-1)r(r+1)` of a `g^r_d` on a
/// Gorenstein curve of arithmetic genus `g`.
pub fn brill_segre(r: i64, d: i64, g: i64) -> BigInt {
    let r = BigInt::from(r);
    (&r + 1) * d + (BigInt::from(g) - 1) * &r * (&r + 1)
}

/// Weight `r(r+2)` of an ordinary cusp.
pub fn cusp_weight(r: u64) -> BigInt {
    BigInt::from(r) * (r + 2)
}

/// Number of pairs `(P, Q)` on a general curve of genus `g - 1` with `P` a
/// special ramification point of `K(2Q)`: `6g^4 + 14g^3 + 10g^2 - 14g - 16`.
pub fn sw_pair_count(g: u64) -> BigInt {
    let g = BigInt::from(g);
    let g2 = &g * &g;
    let g3 = &g2 * &g;
    let g4 = &g3 * &g;
    6 * g4 + 14 * g3 + 10 * g2 - 14 * g - 16
}
