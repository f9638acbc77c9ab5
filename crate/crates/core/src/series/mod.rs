//! Truncated univariate power series over exact rationals.
//!
//! A [`TruncatedSeries`] stores the coefficients of `t^0, ..., t^(N-1)` of an
//! element of `Q[[t]]` whose higher coefficients are unknown. Every operation
//! tracks how much of the result is still known. The `exact` marker records
//! the extra knowledge that every coefficient at or above the precision
//! vanishes, i.e. the series is a polynomial that fits in the window.

mod det;
mod parse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use det::{series_det, MAX_DET_SIZE};
pub use parse::{parse_polynomial, parse_series, parse_series_in, ParsedSeries};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rat = num_rational::BigRational;

/// Builds a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Builds an integral rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },
    #[error("precision must be positive")]
    ZeroPrecision,
    #[error("determinant needs a non-empty square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant size {0} exceeds the supported maximum of {MAX_DET_SIZE}")]
    TooLarge(usize),
}

/// Order of vanishing of a truncated series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// The coefficient of `t^k` is nonzero and every lower one vanishes.
    Known(usize),
    /// Every known coefficient vanishes; the precision is carried along so
    /// callers can report how far the check went.
    Undetermined(usize),
}

impl Order {
    pub fn known(self) -> Option<usize> {
        match self {
            Order::Known(k) => Some(k),
            Order::Undetermined(_) => None,
        }
    }

    pub fn is_known(self) -> bool {
        matches!(self, Order::Known(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Known(k) => write!(f, "{k}"),
            Order::Undetermined(n) => write!(f, ">={n} (undetermined)"),
        }
    }
}

/// An element of `Q[[t]]` known modulo `t^precision`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
    exact: bool,
}

impl TruncatedSeries {
    /// Series with the given leading coefficients, padded with zeros or cut
    /// to `precision`. Nothing is assumed about coefficients past the window.
    pub fn new(mut coeffs: Vec<Rat>, precision: usize) -> Self {
        coeffs.resize(precision, Rat::zero());
        TruncatedSeries {
            coeffs,
            exact: false,
        }
    }

    /// The polynomial `sum coeffs[i] t^i`, truncated to `precision`.
    ///
    /// The result is marked exact when no nonzero coefficient was dropped.
    pub fn from_polynomial(mut coeffs: Vec<Rat>, precision: usize) -> Self {
        let dropped = coeffs.iter().skip(precision).any(|c| !c.is_zero());
        coeffs.resize(precision, Rat::zero());
        TruncatedSeries {
            coeffs,
            exact: !dropped,
        }
    }

    pub fn from_integers(coeffs: &[i64], precision: usize) -> Self {
        Self::from_polynomial(coeffs.iter().map(|&c| int(c)).collect(), precision)
    }

    pub fn zero(precision: usize) -> Self {
        Self::from_polynomial(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Rat::one(), precision)
    }

    pub fn constant(c: Rat, precision: usize) -> Self {
        Self::from_polynomial(vec![c], precision)
    }

    /// `c * t^k`.
    pub fn monomial(c: Rat, k: usize, precision: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self::from_polynomial(coeffs, precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, or `None` past the precision.
    pub fn coeff(&self, i: usize) -> Option<&Rat> {
        self.coeffs.get(i)
    }

    pub fn constant_term(&self) -> Option<&Rat> {
        self.coeffs.first()
    }

    /// True when every coefficient at or above the precision is known to be
    /// zero.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Forgets that the tail is zero.
    pub fn inexact(mut self) -> Self {
        self.exact = false;
        self
    }

    /// Index of the highest nonzero known coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero_within_precision(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True for an exact series with every coefficient zero.
    pub fn is_identically_zero(&self) -> bool {
        self.exact && self.is_zero_within_precision()
    }

    pub fn order(&self) -> Order {
        series_order(self)
    }

    /// Keeps only the coefficients below `precision` (never raises it).
    pub fn truncate(&self, precision: usize) -> Self {
        if precision >= self.precision() {
            return self.clone();
        }
        let dropped = self.coeffs[precision..].iter().any(|c| !c.is_zero());
        TruncatedSeries {
            coeffs: self.coeffs[..precision].to_vec(),
            exact: self.exact && !dropped,
        }
    }

    /// Raises the precision of an exact series by padding with zeros. Inexact
    /// series are returned unchanged since their tail is unknown.
    pub fn extend_exact(&self, precision: usize) -> Self {
        if !self.exact || precision <= self.precision() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(precision, Rat::zero());
        TruncatedSeries {
            coeffs,
            exact: true,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            exact: self.exact,
        }
    }

    pub fn derivative(&self) -> Self {
        series_derivative(self)
    }

    /// `t^k * self`; the precision grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries {
            coeffs,
            exact: self.exact,
        }
    }

    /// Exact polynomial substitution `t -> t + a`, used to recenter a
    /// polynomial at another point. Returns `None` for inexact input, whose
    /// unknown tail would contaminate every coefficient.
    pub fn recenter(&self, a: &Rat) -> Option<Self> {
        if !self.exact {
            return None;
        }
        // Horner: p(t + a) = (...(c_n (t+a) + c_{n-1})(t+a) + ...)
        let n = self.precision();
        let mut acc: Vec<Rat> = Vec::new();
        for c in self.coeffs.iter().rev() {
            let mut next = vec![Rat::zero(); acc.len() + 1];
            for (i, x) in acc.iter().enumerate() {
                next[i + 1] += x;
                next[i] += x * a;
            }
            next[0] += c;
            acc = next;
        }
        Some(Self::from_polynomial(acc, n))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        if !self.exact {
            write!(f, " + O(t^{})", self.precision())?;
        }
        Ok(())
    }
}

/// Least `k` with a nonzero coefficient, or `Undetermined(N)` when the whole
/// known window vanishes.
pub fn series_order(a: &TruncatedSeries) -> Order {
    match a.coeffs.iter().position(|c| !c.is_zero()) {
        Some(k) => Order::Known(k),
        None => Order::Undetermined(a.precision()),
    }
}

/// Cauchy product modulo `t^min(Na, Nb)`.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let n = a.precision().min(b.precision());
    let mut coeffs = vec![Rat::zero(); n];
    for (i, x) in a.coeffs.iter().take(n).enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().take(n - i).enumerate() {
            if !y.is_zero() {
                coeffs[i + j] += x * y;
            }
        }
    }
    let exact = match (a.exact, b.exact) {
        _ if a.is_identically_zero() || b.is_identically_zero() => true,
        (true, true) => match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => da + db < n,
            _ => true,
        },
        _ => false,
    };
    TruncatedSeries { coeffs, exact }
}

/// Term-wise `d/dt`; the precision drops by one.
pub fn series_derivative(a: &TruncatedSeries) -> TruncatedSeries {
    let coeffs = a
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    TruncatedSeries {
        coeffs,
        exact: a.exact,
    }
}

fn combine(a: &TruncatedSeries, b: &TruncatedSeries, negate_b: bool) -> TruncatedSeries {
    let n = a.precision().min(b.precision());
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| if negate_b { x - y } else { x + y })
        .collect();
    let fits = |s: &TruncatedSeries| s.degree().is_none_or(|d| d < n);
    TruncatedSeries {
        coeffs,
        exact: a.exact && b.exact && fits(a) && fits(b),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        combine(self, rhs, false)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        combine(self, rhs, true)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        series_mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            exact: self.exact,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}
