use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Element of `Q/Z`, kept as `num/den` in lowest terms with `0 <= num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QZ {
    num: i64,
    den: i64,
}

impl QZ {
    pub const ZERO: QZ = QZ { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> QZ {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-(num as i128), -(den as i128)) } else { (num as i128, den as i128) };
        let n = num.rem_euclid(den);
        let g = num_integer::gcd(n, den);
        QZ { num: (n / g) as i64, den: (den / g) as i64 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Additive order.
    pub fn order(&self) -> i64 {
        self.den
    }

    pub fn add(self, o: QZ) -> QZ {
        let l = num_integer::lcm(self.den, o.den);
        QZ::new_wide(self.num as i128 * (l / self.den) as i128 + o.num as i128 * (l / o.den) as i128, l)
    }

    pub fn neg(self) -> QZ {
        QZ::new(-self.num, self.den)
    }

    pub fn sub(self, o: QZ) -> QZ {
        self.add(o.neg())
    }

    pub fn mul_int(self, k: i64) -> QZ {
        QZ::new_wide(self.num as i128 * k as i128, self.den)
    }

    fn new_wide(num: i128, den: i64) -> QZ {
        let n = num.rem_euclid(den as i128) as i64;
        QZ::new(n, den)
    }

    /// Numerator when written over `d`; requires `den | d`.
    pub fn scaled_to(&self, d: i64) -> i64 {
        debug_assert_eq!(d % self.den, 0, "{self} does not live in (1/{d})Z/Z");
        self.num * (d / self.den)
    }

    pub fn sum<I: IntoIterator<Item = QZ>>(it: I) -> QZ {
        it.into_iter().fold(QZ::ZERO, QZ::add)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for QZ {
    type Err = Error;
    fn from_str(s: &str) -> Result<QZ> {
        let bad = || Error::InvalidData(format!("malformed Q/Z value {s:?}"));
        let (a, b) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        let a: i64 = a.parse().map_err(|_| bad())?;
        let b: i64 = b.parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        Ok(QZ::new(a, b))
    }
}

/// Squarefree part of a positive integer: the canonical square class.
pub fn squarefree(mut n: u128) -> u128 {
    assert!(n > 0, "square classes are defined for positive integers");
    let mut out = 1u128;
    let mut p = 2u128;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out * n
}

/// Product of square classes.
pub fn square_class_mul(a: u128, b: u128) -> u128 {
    let g = num_integer::gcd(a, b);
    (a / g) * (b / g)
}

pub fn is_perfect_square(n: u128) -> bool {
    squarefree(n) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = QZ::new(1, 2);
        assert_eq!(a.add(a), QZ::ZERO);
        assert_eq!(a.neg(), a);
        assert_eq!(QZ::new(-1, 3), QZ::new(2, 3));
        assert_eq!(QZ::new(4, 6).to_string(), "2/3");
        assert_eq!("5/4".parse::<QZ>().unwrap(), QZ::new(1, 4));
        assert_eq!("0".parse::<QZ>().unwrap(), QZ::ZERO);
        assert!("1/0".parse::<QZ>().is_err());
        assert_eq!(QZ::new(1, 3).add(QZ::new(1, 6)), QZ::new(1, 2));
        assert_eq!(QZ::new(1, 6).mul_int(4), QZ::new(2, 3));
    }

    #[test]
    fn square_classes() {
        assert_eq!(squarefree(12), 3);
        assert_eq!(squarefree(1), 1);
        assert_eq!(squarefree(72), 2);
        assert_eq!(square_class_mul(6, 10), 15);
        assert!(is_perfect_square(49));
    }

    proptest::proptest! {
        #[test]
        fn group_law(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
            let x = QZ::new(a, b);
            let y = QZ::new(c, d);
            proptest::prop_assert_eq!(x.add(y), y.add(x));
            proptest::prop_assert_eq!(x.add(y).sub(y), x);
            proptest::prop_assert_eq!(x == x.neg(), x.mul_int(2).is_zero());
            proptest::prop_assert_eq!(x.to_string().parse::<QZ>().unwrap(), x);
        }

        #[test]
        fn squarefree_multiplicative(a in 1u128..500, b in 1u128..500) {
            proptest::prop_assert_eq!(squarefree(a * b), square_class_mul(squarefree(a), squarefree(b)));
        }
    }
}
