//! Numbers of the form `a + b·√d` over a generic coefficient type.
//!
//! The radicand `d` is carried with the value. Values with different radicands
//! never mix; arithmetic between them panics. When `d` is a perfect square the
//! irrational part is folded into the rational part, so structural equality is
//! exact equality whenever the coefficient type is exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_integer::Roots;
use num_traits::{FromPrimitive, Num, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Coefficient bound for [`Surd`]. Blanket-implemented.
pub trait Coefficient: Num + Clone + PartialOrd + FromPrimitive + fmt::Debug {}
impl<T: Num + Clone + PartialOrd + FromPrimitive + fmt::Debug> Coefficient for T {}

/// `rational + irrational·√radicand`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surd<T> {
    rational: T,
    irrational: T,
    radicand: u64,
}

fn exact_sqrt(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

impl<T: Coefficient> Surd<T> {
    /// Builds `a + b·√d` in canonical form.
    pub fn new(a: T, b: T, radicand: u64) -> Self {
        assert!(radicand > 0, "radicand must be positive");
        match exact_sqrt(radicand) {
            Some(root) => {
                let root = T::from_u64(root).expect("square root fits the coefficient type");
                Surd {
                    rational: a + b * root,
                    irrational: T::zero(),
                    radicand,
                }
            }
            None => Surd {
                rational: a,
                irrational: b,
                radicand,
            },
        }
    }

    pub fn from_rational(a: T, radicand: u64) -> Self {
        Self::new(a, T::zero(), radicand)
    }

    pub fn from_int(n: i64, radicand: u64) -> Self {
        Self::from_rational(T::from_i64(n).expect("integer fits"), radicand)
    }

    pub fn zero(radicand: u64) -> Self {
        Self::from_rational(T::zero(), radicand)
    }

    pub fn one(radicand: u64) -> Self {
        Self::from_rational(T::one(), radicand)
    }

    /// `√radicand` itself.
    pub fn root(radicand: u64) -> Self {
        Self::new(T::zero(), T::one(), radicand)
    }

    pub fn rational(&self) -> &T {
        &self.rational
    }

    pub fn irrational(&self) -> &T {
        &self.irrational
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.irrational.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.rational.is_one()
    }

    /// `self · n` for a nonnegative integer `n`.
    pub fn scale(&self, n: u64) -> Self {
        let n = T::from_u64(n).expect("integer fits");
        Surd {
            rational: self.rational.clone() * n.clone(),
            irrational: self.irrational.clone() * n,
            radicand: self.radicand,
        }
    }

    /// Sign of `self` as an ordering against zero.
    fn sign(&self) -> Option<Ordering> {
        let zero = T::zero();
        let a = self.rational.partial_cmp(&zero)?;
        let b = self.irrational.partial_cmp(&zero)?;
        if a == b || b == Ordering::Equal {
            return Some(a);
        }
        if a == Ordering::Equal {
            return Some(b);
        }
        // Opposite signs: compare a² against b²·d.
        let a2 = self.rational.clone() * self.rational.clone();
        let d = T::from_u64(self.radicand)?;
        let b2d = self.irrational.clone() * self.irrational.clone() * d;
        Some(match a2.partial_cmp(&b2d)? {
            Ordering::Greater => a,
            Ordering::Less => b,
            Ordering::Equal => Ordering::Equal,
        })
    }

    fn negate(&self) -> Self {
        Surd {
            rational: T::zero() - self.rational.clone(),
            irrational: T::zero() - self.irrational.clone(),
            radicand: self.radicand,
        }
    }

    /// Applies `f` to both coefficients, keeping the radicand.
    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> Surd<U> {
        Surd::new(f(&self.rational), f(&self.irrational), self.radicand)
    }
}

impl<T: Coefficient + ToPrimitive> Surd<T> {
    /// Floating-point approximation.
    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        let b = self.irrational.to_f64().unwrap_or(f64::NAN);
        a + b * (self.radicand as f64).sqrt()
    }
}

impl<T: Coefficient> Add for Surd<T> {
    type Output = Surd<T>;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Coefficient> Add for &Surd<T> {
    type Output = Surd<T>;

    fn add(self, rhs: Self) -> Surd<T> {
        assert_eq!(self.radicand, rhs.radicand, "radicand mismatch");
        Surd {
            rational: self.rational.clone() + rhs.rational.clone(),
            irrational: self.irrational.clone() + rhs.irrational.clone(),
            radicand: self.radicand,
        }
    }
}

impl<T: Coefficient> Mul for Surd<T> {
    type Output = Surd<T>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Coefficient> Mul for &Surd<T> {
    type Output = Surd<T>;

    // (a + b√d)(c + e√d) = (ac + d·be) + (ae + bc)√d
    fn mul(self, rhs: Self) -> Surd<T> {
        assert_eq!(self.radicand, rhs.radicand, "radicand mismatch");
        let d = T::from_u64(self.radicand).expect("radicand fits the coefficient type");
        let (a, b) = (self.rational.clone(), self.irrational.clone());
        let (c, e) = (rhs.rational.clone(), rhs.irrational.clone());
        Surd {
            rational: a.clone() * c.clone() + d * b.clone() * e.clone(),
            irrational: a * e + b * c,
            radicand: self.radicand,
        }
    }
}

impl<T: Coefficient> std::iter::Sum for Surd<T> {
    /// Panics on an empty iterator, since the radicand is unknown.
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty Surd iterator");
        iter.fold(first, |acc, x| acc + x)
    }
}

impl<T: Coefficient> PartialOrd for Surd<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.radicand != other.radicand {
            return None;
        }
        (self + &other.negate()).sign()
    }
}

impl<T: Coefficient + fmt::Display> fmt::Display for Surd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = format!("√{}", self.radicand);
        match (self.rational.is_zero(), self.irrational.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) if self.irrational.is_one() => write!(f, "{root}"),
            (true, false) => write!(f, "{}{root}", self.irrational),
            (false, false) if self.irrational.is_one() => write!(f, "{}+{root}", self.rational),
            (false, false) => write!(f, "{}+{}{root}", self.rational, self.irrational),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;
    use proptest::prelude::*;

    type Q = Surd<Rational64>;

    fn q(a: i64, b: i64, d: u64) -> Q {
        Q::new(Rational64::from_integer(a), Rational64::from_integer(b), d)
    }

    #[test]
    fn perfect_square_radicand_folds() {
        let two = Q::root(4);
        assert_eq!(two, Q::from_int(2, 4));
        assert!(two.is_rational());
        assert_eq!(Q::root(16).scale(3), Q::from_int(12, 16));
    }

    #[test]
    fn root_squared_is_radicand() {
        for d in [2u64, 3, 6, 8, 10] {
            assert_eq!(&Q::root(d) * &Q::root(d), Q::from_int(d as i64, d));
        }
    }

    #[test]
    fn ordering_against_one() {
        assert!(Q::root(2) >= Q::one(2));
        assert!(Q::one(6) >= Q::one(6));
        let small = Q::new(Rational64::new(1, 2), Rational64::new(1, 5), 2);
        assert!(small < Q::one(2));
        assert_eq!(Q::one(2).partial_cmp(&Q::one(3)), None);
    }

    #[test]
    fn display() {
        assert_eq!(Q::root(6).to_string(), "√6");
        assert_eq!(q(2, 0, 6).to_string(), "2");
        assert_eq!(q(1, 3, 2).to_string(), "1+3√2");
        assert_eq!(Q::root(2).scale(2).to_string(), "2√2");
    }

    #[test]
    fn approximation_agrees() {
        let golden = Q::new(Rational64::new(1, 2), Rational64::new(1, 2), 5);
        assert!((golden.to_f64() - 1.618_033_988_749_895).abs() < 1e-12);
        let approx: Surd<f64> = golden.map(|r| *r.numer() as f64 / *r.denom() as f64);
        assert!((approx.to_f64() - golden.to_f64()).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn product_matches_expansion(a in 0i64..50, b in 0i64..50, c in 0i64..50, e in 0i64..50, d in 1u64..40) {
            let lhs = &q(a, b, d) * &q(c, e, d);
            let expected = q(a * c + d as i64 * b * e, a * e + b * c, d);
            prop_assert_eq!(lhs, expected);
        }

        #[test]
        fn ring_laws(a in 0i64..30, b in 0i64..30, c in 0i64..30, e in 0i64..30, f in 0i64..30, g in 0i64..30, d in 1u64..30) {
            let (x, y, z) = (q(a, b, d), q(c, e, d), q(f, g, d));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn order_matches_floats(a in -40i64..40, b in -40i64..40, d in 2u64..30) {
            let x = q(a, b, d);
            let approx = x.to_f64();
            if approx.abs() > 1e-9 {
                prop_assert_eq!(x.partial_cmp(&Q::zero(d)), approx.partial_cmp(&0.0));
            }
        }
    }
}
