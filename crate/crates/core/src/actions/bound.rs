use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An exact lower bound on a count together with its ceiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: BigRational,
    pub ceiling: BigInt,
}

impl Bound {
    fn new(value: BigRational) -> Self {
        let ceiling = value.ceil().to_integer();
        Self { value, ceiling }
    }

    pub fn ceiling_u64(&self) -> Option<u64> {
        self.ceiling.to_u64()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Bound", 3)?;
        s.serialize_field("value", &self.value.to_string())?;
        s.serialize_field("approx", &self.to_f64())?;
        match self.ceiling_u64() {
            Some(c) => s.serialize_field("ceiling", &c)?,
            None => s.serialize_field("ceiling", &self.ceiling.to_string())?,
        }
        s.end()
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(n-1)!^2 / (2 |Aut_x0(H)| |Aut| |Iso|)`.
pub fn lower_bound(aut_order: u64, iso_order: u64, aut_x0_order: u64, n: u64) -> Bound {
    assert!(aut_order > 0 && iso_order > 0 && aut_x0_order > 0 && n > 0);
    let f = factorial(n - 1);
    let denom = BigInt::from(2u8) * aut_x0_order * aut_order * iso_order;
    Bound::new(BigRational::new(&f * &f, denom))
}

/// `(2^k - 1)!^2 / (2^(3k) * prod_{i<k} (2^k - 2^i))`.
pub fn sylvester_bound(k: u32) -> Bound {
    assert!((1..=6).contains(&k), "exponent must lie in 1..=6");
    let n = 1u64 << k;
    let f = factorial(n - 1);
    let gl: BigInt = (0..k).fold(BigInt::one(), |acc, i| acc * (n - (1u64 << i)));
    let denom = (BigInt::one() << (3 * k)) * gl;
    Bound::new(BigRational::new(&f * &f, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_eight_rows() {
        let b = lower_bound(48, 48, 168, 8);
        assert_eq!(b.value, BigRational::new(BigInt::from(525), BigInt::from(16)));
        assert_eq!(b.ceiling_u64(), Some(33));
        assert_eq!(lower_bound(24, 48, 168, 8).ceiling_u64(), Some(66));
        assert_eq!(lower_bound(24, 24, 6, 4).ceiling_u64(), Some(1));
    }

    #[test]
    fn sylvester_formula_agrees_with_general_bound() {
        for k in 1..=6u32 {
            let n = 1u64 << k;
            let gl: u128 = (0..k).map(|i| (n - (1 << i)) as u128).product();
            let b = sylvester_bound(k);
            if let Ok(gl) = u64::try_from(gl) {
                assert_eq!(b, lower_bound(n, n * n / 2, gl, n));
            }
        }
        let b = sylvester_bound(3);
        assert_eq!(b.to_f64(), 295.3125);
        assert_eq!(b.ceiling_u64(), Some(296));
        assert_eq!(sylvester_bound(1).ceiling_u64(), Some(1));
        assert!(sylvester_bound(1).to_f64() < 1.0);
    }

    #[test]
    fn integral_values_are_their_own_ceiling() {
        // 3!^2 / (2 * 1 * 1 * 1) = 18
        let b = lower_bound(1, 1, 1, 4);
        assert_eq!(b.ceiling_u64(), Some(18));
        assert!(b.value.is_integer());
    }
}
