//! Exact arithmetic in a prime field `F_p`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
}

/// A residue in `[0, p)`. The modulus lives in the owning [`PrimeField`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..(1u64 << 31)).contains(&p) || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Canonical residue of an arbitrary integer.
    pub fn element(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    /// Checked construction; `None` when `v` is not already reduced.
    pub fn canonical(&self, v: u64) -> Option<Fe> {
        (v < self.p as u64).then_some(Fe(v as u32))
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let s = a.0 as u64 + b.0 as u64;
        Fe((s % self.p as u64) as u32)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if a.0 == 0 {
            a
        } else {
            Fe(self.p - a.0)
        }
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.element(t0))
    }

    /// `a / b`; panics on `b = 0`, which callers rule out by construction
    /// (leading coefficients are nonzero).
    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b).expect("division by a nonzero leading coefficient"))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.add(Fe(1), Fe(1)), Fe(0));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.inv(Fe(2)).unwrap(), Fe(3));
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.mul(Fe(2), Fe(2)), Fe(1));
    }

    #[test]
    fn rejects_composites_and_bounds() {
        for p in [0u64, 1, 4, 9, 91, 1 << 31, (1 << 31) + 11] {
            assert!(PrimeField::new(p).is_err(), "{p}");
        }
        assert!(PrimeField::new(2147483647).is_ok());
    }

    #[test]
    fn zero_has_no_inverse() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(Fe::ZERO), Err(FieldError::DivisionByZero(7)));
    }

    #[test]
    fn element_is_canonical() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.element(-1), Fe(4));
        assert_eq!(f5.element(12), Fe(2));
        assert_eq!(f5.canonical(7), None);
    }

    fn field_and_triple() -> impl Strategy<Value = (PrimeField, Fe, Fe, Fe)> {
        prop::sample::select(vec![2u64, 3, 5, 7, 101, 65521, 2147483647]).prop_flat_map(|p| {
            let f = PrimeField::new(p).unwrap();
            let e = (0..p).prop_map(|v| Fe(v as u32));
            (Just(f), e.clone(), e.clone(), e)
        })
    }

    proptest! {
        #[test]
        fn inverse_law((f, a, _, _) in field_and_triple()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }

        #[test]
        fn ring_axioms((f, a, b, c) in field_and_triple()) {
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            prop_assert!(f.add(a, b).0 < f.characteristic());
        }
    }
}
