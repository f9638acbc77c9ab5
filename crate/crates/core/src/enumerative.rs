//! Divisor classes on families of stable curves and the enumerative
//! pipelines built on them.
//!
//! Classes are formal Q-combinations of `λ, δ_0, ..., δ_⌊g/2⌋`. The class
//! `κ_1` never survives: it is rewritten as `12λ - Σ δ_i` as soon as it
//! appears.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::series::{int, Rat};

/// Fourth order automatic degeneracy of the ordinary cusp `y^2 - x^3`.
/// Reference value only; there is no general algorithm for non-nodal germs.
pub const AD4_CUSP: u64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerativeError {
    #[error("genus must be at least 1, got {0}")]
    InvalidGenus(u64),
    #[error("index {i} is outside 1..={max} for genus {g}")]
    IndexOutOfRange { g: u64, i: u64, max: u64 },
    #[error("degree assignment has no value for {0}")]
    MissingSymbol(Symbol),
    #[error("degree of {0} vanishes; cannot solve for its coefficient")]
    DegenerateAssignment(Symbol),
    #[error("{what} disagrees with its closed form for g = {g}: pipeline {pipeline}, closed form {closed}")]
    IdentityViolation {
        what: &'static str,
        g: u64,
        pipeline: Box<Rat>,
        closed: Box<Rat>,
    },
}

/// Generator of the rational Picard group of `M̄_g` used here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Lambda,
    Delta(usize),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Lambda => write!(f, "lambda"),
            Symbol::Delta(i) => write!(f, "delta{i}"),
        }
    }
}

/// `a λ + Σ_i d_i δ_i` in genus `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    genus: u64,
    lambda: Rat,
    /// Indexed `0..=g/2`.
    delta: Vec<Rat>,
}

impl DivisorClass {
    pub fn zero(genus: u64) -> Self {
        DivisorClass {
            genus,
            lambda: Rat::zero(),
            delta: vec![Rat::zero(); genus as usize / 2 + 1],
        }
    }

    /// Builds `lambda λ + Σ deltas[i] δ_i`. Missing trailing delta
    /// coefficients are zero; extra ones are rejected.
    pub fn new(genus: u64, lambda: Rat, deltas: Vec<Rat>) -> Result<Self, EnumerativeError> {
        let mut c = Self::zero(genus);
        if deltas.len() > c.delta.len() {
            return Err(EnumerativeError::IndexOutOfRange {
                g: genus,
                i: deltas.len() as u64 - 1,
                max: genus / 2,
            });
        }
        c.lambda = lambda;
        for (slot, d) in c.delta.iter_mut().zip(deltas) {
            *slot = d;
        }
        Ok(c)
    }

    pub fn from_integers(
        genus: u64,
        lambda: i64,
        deltas: &[i64],
    ) -> Result<Self, EnumerativeError> {
        Self::new(genus, int(lambda), deltas.iter().map(|&d| int(d)).collect())
    }

    /// `kappa κ_1 + lambda λ + Σ deltas[i] δ_i`, with `κ_1 = 12λ - Σ δ_i`
    /// substituted.
    pub fn with_kappa(
        genus: u64,
        kappa: &Rat,
        lambda: Rat,
        deltas: Vec<Rat>,
    ) -> Result<Self, EnumerativeError> {
        let mut c = Self::new(genus, lambda, deltas)?;
        c.lambda += kappa * int(12);
        for d in c.delta.iter_mut() {
            *d -= kappa;
        }
        Ok(c)
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn delta(&self, i: usize) -> Option<&Rat> {
        self.delta.get(i)
    }

    pub fn deltas(&self) -> &[Rat] {
        &self.delta
    }

    pub fn coefficient(&self, s: Symbol) -> Option<&Rat> {
        match s {
            Symbol::Lambda => Some(&self.lambda),
            Symbol::Delta(i) => self.delta.get(i),
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        std::iter::once(Symbol::Lambda).chain((0..self.delta.len()).map(Symbol::Delta))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        DivisorClass {
            genus: self.genus,
            lambda: &self.lambda * k,
            delta: self.delta.iter().map(|d| d * k).collect(),
        }
    }

    /// Copy with the coefficient of `s` replaced; unknown symbols are ignored.
    pub fn with_coefficient(&self, s: Symbol, value: Rat) -> Self {
        let mut c = self.clone();
        match s {
            Symbol::Lambda => c.lambda = value,
            Symbol::Delta(i) => {
                if let Some(slot) = c.delta.get_mut(i) {
                    *slot = value;
                }
            }
        }
        c
    }

    /// The restriction to the interior `M_g`, where every `δ_i` vanishes.
    pub fn smooth_part(&self) -> Self {
        let mut c = Self::zero(self.genus);
        c.lambda = self.lambda.clone();
        c
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.delta.iter().all(Zero::is_zero)
    }

    /// True when `self = k * other` for some rational `k` (including 0).
    pub fn is_proportional_to(&self, other: &DivisorClass) -> bool {
        if self.genus != other.genus {
            return false;
        }
        let pairs: Vec<(&Rat, &Rat)> = self
            .symbols()
            .map(|s| (self.coefficient(s).unwrap(), other.coefficient(s).unwrap()))
            .collect();
        let k = pairs
            .iter()
            .find(|(_, b)| !b.is_zero())
            .map(|(a, b)| *a / *b);
        match k {
            Some(k) => pairs.iter().all(|(a, b)| **a == *b * &k),
            None => pairs.iter().all(|(a, _)| a.is_zero()),
        }
    }

    fn zip_with(&self, other: &DivisorClass, f: impl Fn(&Rat, &Rat) -> Rat) -> DivisorClass {
        assert_eq!(self.genus, other.genus, "classes live in different genera");
        DivisorClass {
            genus: self.genus,
            lambda: f(&self.lambda, &other.lambda),
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in self.symbols() {
            let c = self.coefficient(s).expect("own symbol");
            if c.is_zero() {
                continue;
            }
            let name = match s {
                Symbol::Lambda => "λ".to_string(),
                Symbol::Delta(i) => format!("δ{i}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{abs}{name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Degrees of the generators on a one-parameter family.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeAssignment {
    pub degrees: BTreeMap<Symbol, Rat>,
}

impl DegreeAssignment {
    pub fn new(pairs: impl IntoIterator<Item = (Symbol, Rat)>) -> Self {
        DegreeAssignment {
            degrees: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, s: Symbol) -> Option<&Rat> {
        self.degrees.get(&s)
    }

    /// Elliptic tail moving in a pencil of plane cubics glued to a fixed
    /// general curve: `λ = 1, δ_0 = 12, δ_1 = -1` and `δ_i = 0` for `i >= 2`.
    pub fn harris_mumford(genus: u64) -> Self {
        let mut d = Self::new([
            (Symbol::Lambda, int(1)),
            (Symbol::Delta(0), int(12)),
            (Symbol::Delta(1), int(-1)),
        ]);
        for i in 2..=(genus as usize / 2) {
            d.degrees.insert(Symbol::Delta(i), Rat::zero());
        }
        d
    }

    /// A general pencil of plane cubics: `λ = 1`, `δ_0 = 12` nodal fibres.
    pub fn elliptic_pencil() -> Self {
        Self::new([
            (Symbol::Lambda, int(1)),
            (Symbol::Delta(0), Rat::from_integer(pencil_nodes(2, 3))),
        ])
    }

    /// A general pencil of plane quartics: `λ = 3`, `δ_0 = 27`, `δ_1 = 0`.
    pub fn quartic_pencil() -> Self {
        Self::new([
            (Symbol::Lambda, int(3)),
            (Symbol::Delta(0), Rat::from_integer(pencil_nodes(2, 4))),
            (Symbol::Delta(1), Rat::zero()),
        ])
    }
}

/// Degree of a class on a family: `Σ coefficient * degree`.
pub fn evaluate_class(c: &DivisorClass, deg: &DegreeAssignment) -> Result<Rat, EnumerativeError> {
    c.symbols().try_fold(Rat::zero(), |acc, s| {
        let d = deg.get(s).ok_or(EnumerativeError::MissingSymbol(s))?;
        Ok(acc + c.coefficient(s).expect("own symbol") * d)
    })
}

/// Intersection numbers of `η = c_1(ω_π)` and `ζ = c_1(L)` on a fibred
/// surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernModel {
    pub eta_sq: Rat,
    pub eta_zeta: Rat,
    pub zeta_sq: Rat,
}

impl ChernModel {
    /// Blown-up general pencil of plane curves of degree `d` with
    /// `L = O(d)`: `η² = 3d² - 12d + 9`, `ηζ = 2d - 3`, `ζ² = 1`.
    pub fn plane_pencil(d: i64) -> Self {
        ChernModel {
            eta_sq: int(3 * d * d - 12 * d + 9),
            eta_zeta: int(2 * d - 3),
            zeta_sq: int(1),
        }
    }

    /// Degree of `c_2` of the `k`-th jet bundle of `L`.
    pub fn c2_degree(&self, k: u64) -> Rat {
        let (a, b, c) = jet_c2(k);
        Rat::from_integer(a) * &self.eta_sq
            + Rat::from_integer(b) * &self.eta_zeta
            + Rat::from_integer(c) * &self.zeta_sq
    }
}

/// `c_1` of the top exterior power of the `k`-th jet bundle, as
/// `(ζ multiplier, η multiplier)`. The Chern roots are `ζ + jη` for `j = 0..=k`.
pub fn jet_c1(k: u64) -> (BigInt, BigInt) {
    let k = BigInt::from(k);
    let eta = &k * (&k + 1) / 2;
    (k + 1, eta)
}

/// `c_2 = A η² + B ηζ + C ζ²` of the `k`-th jet bundle, from the second
/// elementary symmetric function of the roots `ζ + jη`.
pub fn jet_c2(k: u64) -> (BigInt, BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    for i in 0..=k {
        for j in (i + 1)..=k {
            a += i * j;
            b += i + j;
        }
    }
    (a, b, binomial(BigInt::from(k + 1), BigInt::from(2)))
}

/// Number of singular fibres `(n+1)(d-1)^n` in a general pencil of degree
/// `d` hypersurfaces in `P^n`.
pub fn pencil_nodes(n: u32, d: u64) -> BigInt {
    BigInt::from(n + 1) * BigInt::from(d).sub(1u32).pow(n)
}

/// Automatic degeneracy `C(m+1, 4)` of a node.
pub fn ad_node(m: u64) -> BigInt {
    binomial(BigInt::from(m + 1), BigInt::from(4))
}

/// Hyperflexes in a general pencil of plane curves of degree `d`, computed as
/// `∫ c_2(J^3(L)) - AD^4(node) * #nodes` and checked against
/// `6(d-3)(3d-2)`.
pub fn hyperflex_count(d: u64) -> Result<BigInt, EnumerativeError> {
    let model = ChernModel::plane_pencil(d as i64);
    let correction = Rat::from_integer(ad_node(4) * pencil_nodes(2, d));
    let pipeline = model.c2_degree(3) - correction;
    let di = d as i64;
    let closed = int(6 * (di - 3) * (3 * di - 2));
    if pipeline != closed {
        return Err(EnumerativeError::IdentityViolation {
            what: "hyperflex count",
            g: d,
            pipeline: Box::new(pipeline),
            closed: Box::new(closed),
        });
    }
    Ok(closed.to_integer())
}

/// Vanishing multiplicity `C(g-i+1, 2)` of the family Wronskian along the
/// genus-`i` component of a `Δ_i` fibre.
pub fn multiplicity_m(g: u64, i: u64) -> Result<BigInt, EnumerativeError> {
    if g < 2 || i < 1 || i > g - 1 {
        return Err(EnumerativeError::IndexOutOfRange {
            g,
            i,
            max: g.saturating_sub(1),
        });
    }
    Ok(binomial(BigInt::from(g - i + 1), BigInt::from(2)))
}

/// Every intermediate coefficient of the special Weierstrass point class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwClassBreakdown {
    pub g: u64,
    /// `m_i` for `1 <= i <= g-1`.
    pub m: BTreeMap<u64, BigInt>,
    /// `c_i` for `1 <= i <= g/2`.
    pub c: BTreeMap<u64, Rat>,
    /// `b_i = c_i + g(g+1)(g²+g+2)/4`.
    pub b: BTreeMap<u64, Rat>,
    pub a0: Rat,
    pub lambda_coeff: Rat,
    pub final_class: DivisorClass,
}

fn check(what: &'static str, g: u64, pipeline: &Rat, closed: Rat) -> Result<(), EnumerativeError> {
    if *pipeline != closed {
        return Err(EnumerativeError::IdentityViolation {
            what,
            g,
            pipeline: Box::new(pipeline.clone()),
            closed: Box::new(closed),
        });
    }
    Ok(())
}

/// Class of the locus of stable curves of genus `g` with a special
/// Weierstrass point, `B λ - a_0 δ_0 - Σ b_i δ_i`.
///
/// The coefficients are assembled from the Wronskian multiplicities along
/// reducible fibres and the `κ_1` relation, then `a_0` is solved from the
/// elliptic-tail pencil on which the class has degree zero. Each result is
/// checked against its closed form.
pub fn sw_class(g: u64) -> Result<SwClassBreakdown, EnumerativeError> {
    if g == 0 {
        return Err(EnumerativeError::InvalidGenus(g));
    }
    let gr = int(g as i64);
    let one = int(1);
    let two = int(2);
    let g2 = &gr * &gr;
    let quad = &g2 + &gr + &one; // g² + g + 1
    let kappa = &gr * (&gr + &one) * (&g2 + &gr + &two) / int(4);
    let lambda_pre = -(&two * &quad * (&gr - &one));

    let mut m = BTreeMap::new();
    for i in 1..g {
        m.insert(i, multiplicity_m(g, i)?);
    }
    let mut c = BTreeMap::new();
    let mut b = BTreeMap::new();
    for i in 1..=g / 2 {
        let mi = Rat::from_integer(m[&i].clone());
        let mj = Rat::from_integer(m[&(g - i)].clone());
        let ir = int(i as i64);
        let jr = int((g - i) as i64);
        // K·F_ij term plus the self-intersection F_ij², written as +(m_i - m_{g-i})²
        let kf = &two * (&ir * &mi + &jr * &mj) - &mi - &mj;
        let diff = &mi - &mj;
        let ci = &quad * kf + &diff * &diff;
        let bi = &ci + &kappa;
        let closed = (&gr * &g2 + int(3) * &g2 + &two * &gr + &two) * &ir * &jr;
        check("b_i", g, &bi, closed)?;
        c.insert(i, ci);
        b.insert(i, bi);
    }

    // c_0 is unknown; its slot is overwritten once a_0 is solved for
    let deltas: Vec<Rat> = std::iter::once(Rat::zero())
        .chain((1..=g / 2).map(|i| -&c[&i]))
        .collect();
    let partial = DivisorClass::with_kappa(g, &kappa, lambda_pre, deltas)?;
    let lambda_coeff = partial.lambda().clone();
    let g4 = &g2 * &g2;
    let b_closed = int(3) * &g4 + int(4) * &g2 * &gr + int(9) * &g2 + int(6) * &gr + &two;
    check("lambda coefficient", g, &lambda_coeff, b_closed)?;

    let a0_closed = &gr * (&gr + &one) * (&two * &g2 + &gr + int(3)) / int(6);
    let a0 = if g >= 2 {
        // On the elliptic-tail pencil the class has degree 0:
        // 0 = deg(class without δ0) - a0 * deg δ0.
        let hm = DegreeAssignment::harris_mumford(g);
        let known = partial.with_coefficient(Symbol::Delta(0), Rat::zero());
        let d0 = hm.get(Symbol::Delta(0)).expect("assignment has δ0");
        if d0.is_zero() {
            return Err(EnumerativeError::DegenerateAssignment(Symbol::Delta(0)));
        }
        let a0 = evaluate_class(&known, &hm)? / d0;
        check("a_0", g, &a0, a0_closed)?;
        a0
    } else {
        a0_closed
    };

    let mut deltas = vec![-&a0];
    deltas.extend((1..=g / 2).map(|i| -&b[&i]));
    let final_class = DivisorClass::new(g, lambda_coeff.clone(), deltas)?;
    Ok(SwClassBreakdown {
        g,
        m,
        c,
        b,
        a0,
        lambda_coeff,
        final_class,
    })
}

/// Class of the closure of the hyperelliptic locus in genus 3,
/// `9λ - δ_0 - 3δ_1`, read off from `8[H̄] = 72λ - 8δ_0 - 24δ_1`.
pub fn hyperelliptic_class_g3() -> DivisorClass {
    let eight_h = DivisorClass::from_integers(3, 72, &[-8, -24]).expect("genus 3 has δ0, δ1");
    eight_h.scale(&Rat::new(1.into(), 8.into()))
}

/// A coefficient whose computed value differs from a published one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientDiscrepancy {
    pub symbol: Symbol,
    pub computed: Rat,
    pub printed: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperflexClass {
    pub class: DivisorClass,
    pub discrepancy: Option<CoefficientDiscrepancy>,
}

/// Published δ_1 coefficient of the genus-3 hyperflex class.
pub const PRINTED_HYPERFLEX_DELTA1: i64 = -82;

/// Class of the genus-3 hyperflex locus, `[wt(2)] - 16[H̄_3]`.
///
/// The δ_1 coefficient comes out as `-76`, while the value in circulation is
/// `-82`. Quartic pencils have no `Δ_1` fibres and cannot tell them apart, so
/// the difference is reported rather than resolved.
pub fn hyperflex_class_g3() -> Result<HyperflexClass, EnumerativeError> {
    let sw = sw_class(3)?;
    let class = &sw.final_class - &hyperelliptic_class_g3().scale(&int(16));
    let computed = class.delta(1).expect("genus 3").clone();
    let printed = int(PRINTED_HYPERFLEX_DELTA1);
    let discrepancy = (computed != printed).then_some(CoefficientDiscrepancy {
        symbol: Symbol::Delta(1),
        computed,
        printed,
    });
    Ok(HyperflexClass { class, discrepancy })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn jet_classes() {
        assert_eq!(jet_c1(0), (b(1), b(0)));
        assert_eq!(jet_c1(3), (b(4), b(6)));
        // ζ := η for k = g - 1 gives g(g+1)/2 η
        let (z, e) = jet_c1(2);
        assert_eq!(z + e, b(6));
        assert_eq!(jet_c2(3), (b(11), b(18), b(6)));
        assert_eq!(jet_c2(1), (b(0), b(1), b(1)));
        assert_eq!(jet_c2(0), (b(0), b(0), b(0)));
    }

    #[test]
    fn pencils_and_degeneracies() {
        assert_eq!(pencil_nodes(2, 4), b(27));
        assert_eq!(pencil_nodes(2, 3), b(12));
        assert_eq!(pencil_nodes(5, 1), b(0));
        assert_eq!(ad_node(4), b(5));
        assert_eq!(ad_node(3), b(1));
        assert_eq!(ad_node(2), b(0));
        assert_eq!(ad_node(0), b(0));
        assert_eq!(hyperflex_count(3).unwrap(), b(0));
        assert_eq!(hyperflex_count(4).unwrap(), b(60));
        assert_eq!(hyperflex_count(5).unwrap(), b(156));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_m(3, 1).unwrap(), b(3));
        assert_eq!(multiplicity_m(3, 2).unwrap(), b(1));
        assert_eq!(multiplicity_m(2, 1).unwrap(), b(1));
        assert_eq!(multiplicity_m(4, 1).unwrap(), b(6));
        assert!(multiplicity_m(3, 3).is_err());
        assert!(multiplicity_m(3, 0).is_err());
        assert!(multiplicity_m(1, 1).is_err());
    }

    #[test]
    fn low_genus_classes() {
        let g1 = sw_class(1).unwrap().final_class;
        assert_eq!(g1, DivisorClass::from_integers(1, 24, &[-2]).unwrap());
        let rel = DivisorClass::from_integers(1, 12, &[-1]).unwrap();
        assert!(g1.is_proportional_to(&rel));

        let g2 = sw_class(2).unwrap().final_class;
        assert_eq!(
            g2,
            DivisorClass::from_integers(2, 130, &[-13, -26]).unwrap()
        );
        let mumford = DivisorClass::from_integers(2, 10, &[-1, -2]).unwrap();
        assert_eq!(g2, mumford.scale(&int(13)));

        let g3 = sw_class(3).unwrap();
        assert_eq!(
            g3.final_class,
            DivisorClass::from_integers(3, 452, &[-48, -124]).unwrap()
        );
        assert_eq!(g3.c[&1], int(82));
        assert_eq!(g3.b[&1], int(124));
    }

    #[test]
    fn sw_class_rejects_genus_zero() {
        assert_eq!(sw_class(0), Err(EnumerativeError::InvalidGenus(0)));
    }

    #[test]
    fn kappa_elimination() {
        let c = DivisorClass::with_kappa(3, &int(1), Rat::zero(), vec![]).unwrap();
        assert_eq!(c, DivisorClass::from_integers(3, 12, &[-1, -1]).unwrap());
    }

    #[test]
    fn hyperelliptic_and_hyperflex() {
        let h = hyperelliptic_class_g3();
        assert_eq!(h, DivisorClass::from_integers(3, 9, &[-1, -3]).unwrap());
        assert_eq!(
            h.scale(&int(8)),
            DivisorClass::from_integers(3, 72, &[-8, -24]).unwrap()
        );
        assert_eq!(
            h.smooth_part(),
            DivisorClass::from_integers(3, 9, &[]).unwrap()
        );
        assert_eq!(
            evaluate_class(&h, &DegreeAssignment::harris_mumford(3)).unwrap(),
            int(0)
        );

        let hf = hyperflex_class_g3().unwrap();
        assert_eq!(
            hf.class,
            DivisorClass::from_integers(3, 308, &[-32, -76]).unwrap()
        );
        let d = hf.discrepancy.unwrap();
        assert_eq!((d.computed, d.printed), (int(-76), int(-82)));
        assert_eq!(
            evaluate_class(&hf.class, &DegreeAssignment::quartic_pencil()).unwrap(),
            int(60)
        );
    }

    #[test]
    fn evaluation() {
        let rel = DivisorClass::from_integers(1, 12, &[-1]).unwrap();
        assert_eq!(
            evaluate_class(&rel, &DegreeAssignment::elliptic_pencil()).unwrap(),
            int(0)
        );
        assert_eq!(
            evaluate_class(&DivisorClass::zero(4), &DegreeAssignment::harris_mumford(4)).unwrap(),
            int(0)
        );
        assert_eq!(
            evaluate_class(&DivisorClass::zero(4), &DegreeAssignment::quartic_pencil()),
            Err(EnumerativeError::MissingSymbol(Symbol::Delta(2)))
        );
    }

    #[test]
    fn display() {
        let c = DivisorClass::from_integers(3, 452, &[-48, -124]).unwrap();
        assert_eq!(c.to_string(), "452λ - 48δ0 - 124δ1");
        assert_eq!(DivisorClass::zero(2).to_string(), "0");
        assert_eq!(
            DivisorClass::from_integers(2, -1, &[0, 1])
                .unwrap()
                .to_string(),
            "-λ + δ1"
        );
    }
}
