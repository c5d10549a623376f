//! Field scalars: residues modulo a small prime.

use super::GfError;

/// A residue in GF(p).  Arithmetic panics on field mismatch; construction
/// checks the prime is supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GFScalar {
    p: u8,
    value: u8,
}

impl GFScalar {
    pub fn new(p: u8, value: i64) -> Result<Self, GfError> {
        if !super::is_supported_prime(p) {
            return Err(GfError::UnsupportedPrime(p));
        }
        Ok(GFScalar {
            p,
            value: value.rem_euclid(p as i64) as u8,
        })
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "field mismatch");
        GFScalar {
            p: self.p,
            value: (self.value + other.value) % self.p,
        }
    }

    pub fn neg(&self) -> Self {
        GFScalar {
            p: self.p,
            value: (self.p - self.value) % self.p,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "field mismatch");
        GFScalar {
            p: self.p,
            value: ((self.value as u16 * other.value as u16) % self.p as u16) as u8,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(self.value != 0, "inverse of zero");
        GFScalar {
            p: self.p,
            value: inv_mod(self.value, self.p),
        }
    }
}

/// Inverse of `a` modulo the prime `p`, by exhaustion (p is tiny).
#[inline]
pub(crate) fn inv_mod(a: u8, p: u8) -> u8 {
    debug_assert!(a % p != 0);
    let a = a % p;
    for x in 1..p {
        if (a as u16 * x as u16) % p as u16 == 1 {
            return x;
        }
    }
    unreachable!("p not prime or a == 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for p in [2u8, 3, 5, 7] {
            for a in 0..p {
                let x = GFScalar::new(p, a as i64).unwrap();
                assert_eq!(x.add(&x.neg()).value(), 0);
                if a != 0 {
                    assert_eq!(x.mul(&x.inv()).value(), 1);
                }
            }
        }
    }

    #[test]
    fn negative_construction_wraps() {
        assert_eq!(GFScalar::new(3, -1).unwrap().value(), 2);
        assert_eq!(GFScalar::new(5, -7).unwrap().value(), 3);
    }

    #[test]
    fn unsupported_prime_rejected() {
        assert!(GFScalar::new(4, 1).is_err());
        assert!(GFScalar::new(9, 1).is_err());
    }
}
