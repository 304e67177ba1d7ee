//! The four concrete semiring instances and context-tagged scalars.
//!
//! Every instance lives on a sub-interval of the nonnegative reals with
//! `0̄ = 0.0` and `1̄ = 1.0`, so one `f64` plus a [`SemiringId`] tag is enough
//! to represent any scalar. Infinities and NaN are not part of any carrier
//! and are rejected at construction time rather than clamped.

use std::fmt;

use crate::error::Error;
use crate::Result;

/// Identifies one of the four supported semiring instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemiringId {
    /// `([0, ∞), max, ·)` — the max-times algebra.
    MaxTimes,
    /// `([0, ∞), +, ·)` — ordinary nonnegative arithmetic.
    Nonnegative,
    /// `([0, 1], max, min)` — the fuzzy/bottleneck lattice.
    MaxMin,
    /// `([0, 1], max, max(0, a + b − 1))` — the Łukasiewicz t-norm.
    Lukasiewicz,
}

impl SemiringId {
    /// All instances, in canonical order.
    pub const ALL: [SemiringId; 4] = [
        SemiringId::MaxTimes,
        SemiringId::Nonnegative,
        SemiringId::MaxMin,
        SemiringId::Lukasiewicz,
    ];

    /// Parses the stable string id used by files and the CLI.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "max-times" => Ok(SemiringId::MaxTimes),
            "nonnegative" => Ok(SemiringId::Nonnegative),
            "max-min" => Ok(SemiringId::MaxMin),
            "lukasiewicz" => Ok(SemiringId::Lukasiewicz),
            other => Err(Error::InvalidArgument(format!(
                "unknown semiring id {other:?}; expected one of \
                 max-times, nonnegative, max-min, lukasiewicz"
            ))),
        }
    }

    /// The stable string id.
    pub fn name(self) -> &'static str {
        match self {
            SemiringId::MaxTimes => "max-times",
            SemiringId::Nonnegative => "nonnegative",
            SemiringId::MaxMin => "max-min",
            SemiringId::Lukasiewicz => "lukasiewicz",
        }
    }

    /// Additive identity (0 in every instance).
    pub fn zero(self) -> f64 {
        0.0
    }

    /// Multiplicative identity (1 in every instance).
    pub fn one(self) -> f64 {
        1.0
    }

    /// Whether `v` belongs to the carrier. Infinities and NaN never do.
    pub fn contains(self, v: f64) -> bool {
        let bounded = match self {
            SemiringId::MaxTimes | SemiringId::Nonnegative => true,
            SemiringId::MaxMin | SemiringId::Lukasiewicz => v <= 1.0,
        };
        v.is_finite() && v >= 0.0 && bounded
    }

    /// Semiring addition ⊕ of two carrier values.
    pub fn add(self, a: f64, b: f64) -> f64 {
        match self {
            SemiringId::Nonnegative => a + b,
            _ => a.max(b),
        }
    }

    /// Semiring multiplication ⊗ of two carrier values.
    pub fn mul(self, a: f64, b: f64) -> f64 {
        match self {
            SemiringId::MaxTimes | SemiringId::Nonnegative => a * b,
            SemiringId::MaxMin => a.min(b),
            SemiringId::Lukasiewicz => (a + b - 1.0).max(0.0),
        }
    }

    /// Largest `x` with `divisor ⊗ x = a`, when the divisor is invertible.
    ///
    /// Only invertible divisors are accepted: any positive value for the
    /// two multiplicative instances, exactly `1̄` for the lattice ones.
    pub fn try_div(self, a: f64, divisor: f64) -> Result<f64> {
        let invertible = match self {
            SemiringId::MaxTimes | SemiringId::Nonnegative => divisor > 0.0,
            SemiringId::MaxMin | SemiringId::Lukasiewicz => divisor == 1.0,
        };
        if !invertible {
            return Err(Error::NotInvertible {
                value: divisor,
                semiring: self,
            });
        }
        Ok(match self {
            SemiringId::MaxTimes | SemiringId::Nonnegative => a / divisor,
            SemiringId::MaxMin | SemiringId::Lukasiewicz => a,
        })
    }

    /// Canonical order `a ≤ b ⇔ a ⊕ b = b`; it coincides with the numeric
    /// order on every instance (for `nonnegative` via `b − a ≥ 0`).
    pub fn le(self, a: f64, b: f64) -> bool {
        a <= b
    }

    /// Whether ⊕ is idempotent (`a ⊕ a = a`). Only `nonnegative` is not.
    pub fn is_idempotent(self) -> bool {
        !matches!(self, SemiringId::Nonnegative)
    }

    /// Least `b` with `a ⊕ b = c`, defined whenever `a ≤ c`.
    ///
    /// For the idempotent instances this is `c` itself unless `a = c`
    /// (then `0̄`); for `nonnegative` it is the difference `c − a`.
    pub fn least_addend(self, a: f64, c: f64) -> Result<f64> {
        if !self.le(a, c) {
            return Err(Error::InvalidArgument(format!(
                "no addend exists: {a} exceeds {c}"
            )));
        }
        Ok(match self {
            SemiringId::Nonnegative => c - a,
            _ => {
                if a == c {
                    0.0
                } else {
                    c
                }
            }
        })
    }

    fn check_member(self, v: f64) -> Result<f64> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(Error::OutsideCarrier {
                value: v,
                semiring: self,
            })
        }
    }
}

impl fmt::Display for SemiringId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A carrier value tagged with the instance it lives in.
///
/// Operations on scalars from different instances fail with
/// [`Error::SemiringMismatch`] instead of silently mixing arithmetics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scalar {
    value: f64,
    context: SemiringId,
}

impl Scalar {
    /// Validates membership of `value` in the carrier of `context`.
    pub fn new(value: f64, context: SemiringId) -> Result<Self> {
        context.check_member(value)?;
        Ok(Scalar { value, context })
    }

    /// The additive identity of `context`.
    pub fn zero(context: SemiringId) -> Self {
        Scalar {
            value: 0.0,
            context,
        }
    }

    /// The multiplicative identity of `context`.
    pub fn one(context: SemiringId) -> Self {
        Scalar {
            value: 1.0,
            context,
        }
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn context(self) -> SemiringId {
        self.context
    }

    fn same_context(self, other: Scalar) -> Result<SemiringId> {
        if self.context == other.context {
            Ok(self.context)
        } else {
            Err(Error::SemiringMismatch {
                expected: self.context,
                found: other.context,
            })
        }
    }

    /// `self ⊕ other`.
    pub fn add(self, other: Scalar) -> Result<Scalar> {
        let ctx = self.same_context(other)?;
        Ok(Scalar {
            value: ctx.add(self.value, other.value),
            context: ctx,
        })
    }

    /// `self ⊗ other`.
    pub fn mul(self, other: Scalar) -> Result<Scalar> {
        let ctx = self.same_context(other)?;
        Ok(Scalar {
            value: ctx.mul(self.value, other.value),
            context: ctx,
        })
    }

    /// Division by an invertible scalar; see [`SemiringId::try_div`].
    pub fn try_div(self, divisor: Scalar) -> Result<Scalar> {
        let ctx = self.same_context(divisor)?;
        Ok(Scalar {
            value: ctx.try_div(self.value, divisor.value)?,
            context: ctx,
        })
    }

    /// Canonical order.
    pub fn le(self, other: Scalar) -> Result<bool> {
        let ctx = self.same_context(other)?;
        Ok(ctx.le(self.value, other.value))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
