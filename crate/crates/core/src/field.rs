//! Exact coefficient fields: the rationals and prime fields.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields. Products of two residues must
/// fit comfortably in `u128` and root finding enumerates residues.
pub const MAX_PRIME: u64 = 1 << 31;

/// The coefficient field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::Input(alloc::format!(
                "{p} is not a supported prime modulus"
            )));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        self.from_i64(den).inv().map(|d| &self.from_i64(num) * &d)
    }

    /// Parses `"3"`, `"-1/2"` (and, for prime fields, reduces modulo `p`).
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Input(alloc::format!("cannot parse scalar `{text}`"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = BigInt::from(*p);
                    let r = ((x % &m) + &m) % &m;
                    r.to_u64().unwrap_or(0)
                };
                let n = Scalar::Mod {
                    value: reduce(&num),
                    modulus: *p,
                };
                let d = Scalar::Mod {
                    value: reduce(&den),
                    modulus: *p,
                };
                d.inv().map(|d| &n * &d).ok_or_else(bad)
            }
        }
    }

    /// Elements `x` with `x^order = 1`.
    pub fn roots_of_unity(&self, order: u64) -> alloc::vec::Vec<Scalar> {
        match self {
            FieldSpec::Rationals => {
                let mut out = alloc::vec![self.one()];
                if order % 2 == 0 {
                    out.push(self.from_i64(-1));
                }
                out
            }
            FieldSpec::Prime(p) => (1..*p)
                .filter(|&x| pow_mod(x, order, *p) == 1)
                .map(|x| Scalar::Mod {
                    value: x,
                    modulus: *p,
                })
                .collect(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("F"))
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| {
                Error::Input(alloc::format!("unknown field `{s}` (expected Q or Fp:p)"))
            })?;
        FieldSpec::prime(p)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// A field element in canonical form: lowest terms, or least non-negative
/// residue.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Mod { value: 0, .. } => None,
            Scalar::Mod { value, modulus } => Some(Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Numerator and denominator for rationals; `None` for residues.
    pub fn as_ratio(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    /// Residue for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rat(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&Scalar> for String {
    fn from(s: &Scalar) -> String {
        s.to_string()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modop:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat($rat(a, b)),
                    (
                        Scalar::Mod {
                            value: a,
                            modulus: p,
                        },
                        Scalar::Mod {
                            value: b,
                            modulus: q,
                        },
                    ) if p == q => Scalar::Mod {
                        value: $modop(*a, *b, *p),
                        modulus: *p,
                    },
                    _ => panic!("mixed fields in scalar arithmetic"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| (a + b) % p
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| (a + p - b) % p
);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, mul_mod);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    #[inline]
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    #[inline]
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    #[inline]
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    #[inline]
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}
