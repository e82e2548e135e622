//! Univariate polynomials over the coefficient field: just enough to split
//! elements of an algebra along their eigenvalues.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::field::{FieldSpec, Scalar};

/// Coefficients, lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Self {
        Poly::new(field, vec![c])
    }

    /// `t - root`.
    pub fn linear(field: FieldSpec, root: &Scalar) -> Self {
        Poly::new(field, vec![-root, field.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::new(self.field, Vec::new());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        let out = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) - rhs.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::constant(self.field, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.field.zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = &rem[rem.len() - 1] * &inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &(&c * dc);
            }
            quo[k] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(self.field, quo), Poly::new(self.field, rem))
    }

    /// `(g, u, v)` with `u*self + v*rhs = g = gcd`, `g` monic.
    pub fn gcdext(&self, rhs: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Poly::constant(f, f.one()), Poly::new(f, Vec::new()));
        let (mut t0, mut t1) = (Poly::new(f, Vec::new()), Poly::constant(f, f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let inv = r0.lead().inv().unwrap_or_else(|| f.one());
        let c = Poly::constant(f, inv);
        (r0.mul(&c), s0.mul(&c), t0.mul(&c))
    }

    /// Multiplicity of `root`, and the cofactor with that root removed.
    pub fn split_root(&self, root: &Scalar) -> (usize, Poly) {
        let lin = Poly::linear(self.field, root);
        let mut rest = self.clone();
        let mut m = 0;
        loop {
            if rest.degree().unwrap_or(0) == 0 || !rest.eval(root).is_zero() {
                return (m, rest);
            }
            rest = rest.divrem(&lin).0;
            m += 1;
        }
    }

    /// Roots lying in the coefficient field, without multiplicity, or `None`
    /// if the search would be too expensive.
    pub fn roots(&self) -> Option<Vec<Scalar>> {
        let mut out = Vec::new();
        let Some(d) = self.degree() else {
            return Some(out);
        };
        if d == 0 {
            return Some(out);
        }
        match self.field {
            FieldSpec::Prime(p) => {
                if p > (1 << 20) {
                    return None;
                }
                for x in 0..p {
                    let s = self.field.from_i64(x as i64);
                    if self.eval(&s).is_zero() {
                        out.push(s);
                    }
                }
            }
            FieldSpec::Rationals => {
                let (zero_mult, rest) = self.split_root(&self.field.zero());
                if zero_mult > 0 {
                    out.push(self.field.zero());
                }
                let ints = integer_coefficients(&rest)?;
                let a0 = ints.first()?.abs().to_u64()?;
                let an = ints.last()?.abs().to_u64()?;
                if a0 > 1 << 40 || an > 1 << 40 {
                    return None;
                }
                let mut seen = Vec::new();
                for num in divisors(a0) {
                    for den in divisors(an) {
                        if num.gcd(&den) != 1 {
                            continue;
                        }
                        for sign in [1i64, -1] {
                            let r = BigRational::new(
                                BigInt::from(num) * BigInt::from(sign),
                                BigInt::from(den),
                            );
                            if seen.contains(&r) {
                                continue;
                            }
                            seen.push(r.clone());
                            let s = Scalar::Rat(r);
                            if rest.eval(&s).is_zero() {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
        Some(out)
    }
}

fn integer_coefficients(p: &Poly) -> Option<Vec<BigInt>> {
    let mut lcm = BigInt::one();
    for c in &p.coeffs {
        lcm = lcm.lcm(c.as_ratio()?.denom());
    }
    p.coeffs
        .iter()
        .map(|c| {
            let r = c.as_ratio()?;
            Some(r.numer() * (&lcm / r.denom()))
        })
        .collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Minimal polynomial of an element, given its powers as coordinate vectors.
/// `power(k)` returns the coordinates of `x^k` (with `x^0` the unit).
pub fn minimal_polynomial(
    field: FieldSpec,
    dim: usize,
    mut power: impl FnMut(usize) -> Vec<Scalar>,
) -> Poly {
    use crate::matrix::Span;
    let mut span = Span::new(field, dim);
    for k in 0..=dim {
        let v = power(k);
        if let Some(c) = span.coordinates(&v) {
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        span.insert(&v);
    }
    unreachable!("powers of an element of a {dim}-dimensional algebra are dependent")
}

/// Given the minimal polynomial `m` of some element and a root `λ` with
/// `m = (t-λ)^a q`, `q` non-constant, returns a polynomial `P` with
/// `P ≡ 1 mod (t-λ)^a` and `P ≡ 0 mod q`. Evaluating `P` at the element
/// yields the idempotent projecting onto the generalized `λ`-eigenspace.
pub fn eigen_projector(m: &Poly, root: &Scalar) -> Option<Poly> {
    let (a, q) = m.split_root(root);
    if a == 0 || q.degree().unwrap_or(0) == 0 {
        return None;
    }
    let field = q.field;
    let lin_pow = Poly::linear(field, root).pow(a);
    let (g, _u, v) = lin_pow.gcdext(&q);
    debug_assert_eq!(g.degree(), Some(0));
    Some(v.mul(&q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots() {
        let q = FieldSpec::Rationals;
        // (2t - 1)(t + 3) t = 2t^3 + 5t^2 - 3t
        let p = Poly::new(
            q,
            vec![q.zero(), q.from_i64(-3), q.from_i64(5), q.from_i64(2)],
        );
        let mut roots = p.roots().unwrap();
        roots.sort_by_key(|r| alloc::format!("{r}"));
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&q.from_ratio(1, 2).unwrap()));
        assert!(roots.contains(&q.from_i64(-3)));
        // t^2 + 1 has no rational roots
        let p = Poly::new(q, vec![q.one(), q.zero(), q.one()]);
        assert!(p.roots().unwrap().is_empty());
    }

    #[test]
    fn projector_is_idempotent_mod_minpoly() {
        let q = FieldSpec::Rationals;
        // m = t^2 - 1
        let m = Poly::new(q, vec![q.from_i64(-1), q.zero(), q.one()]);
        let p = eigen_projector(&m, &q.one()).unwrap();
        let (_, r) = p.mul(&p).sub(&p).divrem(&m);
        assert!(r.is_zero());
        assert_eq!(p.eval(&q.one()), q.one());
        assert!(p.eval(&q.from_i64(-1)).is_zero());
    }
}
