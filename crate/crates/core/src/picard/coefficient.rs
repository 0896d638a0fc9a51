use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Rational;

/// What is known about one coefficient of a divisor class.
///
/// Some coefficients are pinned only by a one-sided bound, and some are not
/// determined at all by the available data. Arithmetic keeps track of this:
/// exact values combine exactly, bounds of the same direction add, and
/// anything that cannot be justified degrades to `Unknown`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficient {
    Exact(Rational),
    /// The coefficient is `>=` the stored value.
    AtLeast(Rational),
    /// The coefficient is `<=` the stored value.
    AtMost(Rational),
    Unknown,
}

impl Default for Coefficient {
    fn default() -> Self {
        Coefficient::zero()
    }
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::Exact(Rational::zero())
    }

    pub fn exact(value: impl Into<Rational>) -> Self {
        Coefficient::Exact(value.into())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Coefficient::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coefficient::Exact(v) if v.is_zero())
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Coefficient::Exact(v) => Some(v),
            _ => None,
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        use Coefficient::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Exact(a + b),
            (Exact(a), AtLeast(b)) | (AtLeast(a), Exact(b)) | (AtLeast(a), AtLeast(b)) => AtLeast(a + b),
            (Exact(a), AtMost(b)) | (AtMost(a), Exact(b)) | (AtMost(a), AtMost(b)) => AtMost(a + b),
            _ => Unknown,
        }
    }

    /// Positive factors keep the variant. Zero annihilates. A negative factor
    /// keeps exact values exact but drops any bound to `Unknown`.
    pub fn scale(&self, c: &Rational) -> Coefficient {
        use Coefficient::*;
        if c.is_zero() {
            return Coefficient::zero();
        }
        match self {
            Exact(a) => Exact(a * c),
            AtLeast(a) if c.is_positive() => AtLeast(a * c),
            AtMost(a) if c.is_positive() => AtMost(a * c),
            _ => Unknown,
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    /// Whether the coefficient is provably `>= 0`.
    pub fn is_provably_nonnegative(&self) -> bool {
        match self {
            Coefficient::Exact(v) | Coefficient::AtLeast(v) => !v.is_negative(),
            _ => false,
        }
    }

    /// Whether the coefficient is provably `< 0`.
    pub fn is_provably_negative(&self) -> bool {
        match self {
            Coefficient::Exact(v) | Coefficient::AtMost(v) => v.is_negative(),
            _ => false,
        }
    }
}

impl From<Rational> for Coefficient {
    fn from(v: Rational) -> Self {
        Coefficient::Exact(v)
    }
}

impl From<i64> for Coefficient {
    fn from(v: i64) -> Self {
        Coefficient::Exact(Rational::from_int(v))
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Exact(v) => write!(f, "{v}"),
            Coefficient::AtLeast(v) => write!(f, "≥{v}"),
            Coefficient::AtMost(v) => write!(f, "≤{v}"),
            Coefficient::Unknown => write!(f, "?"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use Coefficient::*;

    #[test]
    fn addition_table() {
        assert_eq!(Coefficient::from(2).add(&3.into()), Exact(5.into()));
        assert_eq!(Coefficient::from(2).add(&AtLeast(1.into())), AtLeast(3.into()));
        assert_eq!(AtLeast(q(1, 2)).add(&AtLeast(q(1, 2))), AtLeast(1.into()));
        assert_eq!(AtMost((-1).into()).add(&Coefficient::from(4)), AtMost(3.into()));
        assert_eq!(AtLeast(1.into()).add(&AtMost(1.into())), Unknown);
        assert_eq!(Unknown.add(&Coefficient::from(1)), Unknown);
        assert_eq!(Coefficient::from(1).add(&Unknown), Unknown);
    }

    #[test]
    fn negative_scaling_loses_bound_direction() {
        assert_eq!(AtLeast(1.into()).scale(&(-1).into()), Unknown);
        assert_eq!(AtMost((-1).into()).scale(&q(-1, 2)), Unknown);
        assert_eq!(Coefficient::from(3).scale(&(-1).into()), Exact((-3).into()));
    }

    #[test]
    fn positive_and_zero_scaling() {
        assert_eq!(AtLeast(1.into()).scale(&q(1, 3)), AtLeast(q(1, 3)));
        assert_eq!(AtMost((-1).into()).scale(&2.into()), AtMost((-2).into()));
        assert_eq!(Unknown.scale(&Rational::zero()), Coefficient::zero());
    }

    #[test]
    fn json_forms() {
        assert_eq!(serde_json::to_string(&Exact(q(7, 272))).unwrap(), r#"{"exact":"7/272"}"#);
        assert_eq!(serde_json::to_string(&AtLeast(1.into())).unwrap(), r#"{"at_least":"1"}"#);
        assert_eq!(serde_json::to_string(&Unknown).unwrap(), r#""unknown""#);
        let c: Coefficient = serde_json::from_str(r#"{"exact":"7/272"}"#).unwrap();
        assert_eq!(c, Exact(q(7, 272)));
        assert!(serde_json::from_str::<Coefficient>(r#"{"exact":0.5}"#).is_err());
    }

    #[test]
    fn sign_predicates() {
        assert!(AtLeast(0.into()).is_provably_nonnegative());
        assert!(!AtMost(5.into()).is_provably_nonnegative());
        assert!(AtMost((-1).into()).is_provably_negative());
        assert!(!Unknown.is_provably_negative());
    }
}
