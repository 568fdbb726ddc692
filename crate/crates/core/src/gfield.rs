//! Arithmetic in finite fields `F_q`, `q = p^a`.
//!
//! Elements are stored as their coefficient vector with respect to the
//! power basis `1, t, .., t^(a-1)` of `F_p[t] / (f)`, packed into a single
//! integer `c_0 + c_1 p + .. + c_(a-1) p^(a-1)`. Numeric order of the packed
//! value is the canonical element order used everywhere determinism matters:
//! it is lexicographic on the coefficient sequence read from the highest
//! degree down.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

const MAX_DEGREE: u32 = 8;
const MAX_ORDER: u64 = 1 << 31;
/// Fields up to this size carry a precomputed Frobenius table.
const FROB_TABLE_LIMIT: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements of F_{left} and F_{right} mixed in one operation")]
    MixedFields { left: u32, right: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of some `F_q`. The field size travels with the value so that
/// mixing elements of different fields is detectable; since the modulus is a
/// deterministic function of `(p, a)`, `q` identifies the field exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    q: u32,
    index: u32,
}

impl FieldElement {
    /// Packed coefficient value; the canonical sort key inside one field.
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn field_order(self) -> u32 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

#[derive(Debug)]
pub struct FieldSpec {
    p: u32,
    a: u32,
    q: u32,
    /// Monic modulus, lowest degree first, length `a + 1`.
    modulus: Vec<u32>,
    frob_table: Option<Vec<u32>>,
}

/// Shared handle to an immutable [`FieldSpec`].
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.q == other.0.q
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
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

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

/// Polynomial helpers over `F_p`, coefficient vectors lowest degree first.
mod poly {
    use super::inv_mod;

    pub fn trim(v: &mut Vec<u64>) {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
    }

    /// Remainder of `num` modulo `den` (den nonzero).
    pub fn rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
        let mut r = num.to_vec();
        trim(&mut r);
        let dd = den.len() - 1;
        let lead_inv = inv_mod(den[dd], p);
        while r.len() > dd && !(r.len() == 1 && r[0] == 0) {
            let shift = r.len() - 1 - dd;
            let c = r[r.len() - 1] * lead_inv % p;
            for (i, &d) in den.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - c * d % p) % p;
            }
            trim(&mut r);
            if r.len() - 1 < dd {
                break;
            }
        }
        r
    }

    pub fn mul_mod(x: &[u64], y: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut prod = vec![0u64; x.len() + y.len() - 1];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        rem(&prod, m, p)
    }

    pub fn pow_x_mod(exp: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut base = rem(&[0, 1], m, p);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, m, p);
            }
            base = mul_mod(&base, &base, m, p);
            e >>= 1;
        }
        acc
    }
}

fn decode(index: u32, p: u32, a: u32) -> [u64; MAX_DEGREE as usize] {
    let mut c = [0u64; MAX_DEGREE as usize];
    let mut v = index;
    for slot in c.iter_mut().take(a as usize) {
        *slot = (v % p) as u64;
        v /= p;
    }
    c
}

fn encode(c: &[u64], p: u32) -> u32 {
    c.iter().rev().fold(0u32, |acc, &x| acc * p + x as u32)
}

/// Monic polynomial of degree `a` with lower coefficients given by `code`.
fn monic_from_code(code: u64, p: u64, a: u32) -> Vec<u64> {
    let mut m = Vec::with_capacity(a as usize + 1);
    let mut v = code;
    for _ in 0..a {
        m.push(v % p);
        v /= p;
    }
    m.push(1);
    m
}

/// Trial division by every monic polynomial of degree `1..=a/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let a = (f.len() - 1) as u32;
    for d in 1..=a / 2 {
        let count = p.pow(d);
        for code in 0..count {
            let g = monic_from_code(code, p, d);
            let r = poly::rem(f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn root_is_primitive(f: &[u64], p: u64, q: u64) -> bool {
    prime_divisors(q - 1).into_iter().all(|r| {
        let v = poly::pow_x_mod((q - 1) / r, f, p);
        !(v.len() == 1 && v[0] == 1)
    })
}

impl Field {
    /// Builds `F_{p^a}`. The modulus is the smallest (in canonical order)
    /// monic irreducible polynomial of degree `a` whose root is primitive.
    pub fn new(p: u32, a: u32) -> Result<Field, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::InvalidArgument(format!("{p} is not prime")));
        }
        if a == 0 || a > MAX_DEGREE {
            return Err(FieldError::InvalidArgument(format!(
                "extension degree {a} outside 1..={MAX_DEGREE}"
            )));
        }
        let q = (p as u64)
            .checked_pow(a)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| FieldError::InvalidArgument(format!("{p}^{a} exceeds 2^31")))?;
        let modulus: Vec<u32> = if a == 1 {
            vec![0, 1]
        } else {
            let pp = p as u64;
            (0..pp.pow(a))
                .map(|code| monic_from_code(code, pp, a))
                .filter(|f| f[0] != 0)
                .find(|f| is_irreducible(f, pp) && root_is_primitive(f, pp, q))
                .expect("a primitive polynomial exists for every degree")
                .into_iter()
                .map(|c| c as u32)
                .collect()
        };
        let mut spec = FieldSpec {
            p,
            a,
            q: q as u32,
            modulus,
            frob_table: None,
        };
        if a > 1 && spec.q <= FROB_TABLE_LIMIT {
            let field = Field(Arc::new(spec));
            let table = (0..field.q())
                .map(|i| field.pow(field.from_index_unchecked(i), p as u64).index)
                .collect();
            spec = Arc::try_unwrap(field.0).expect("sole owner");
            spec.frob_table = Some(table);
        }
        Ok(Field(Arc::new(spec)))
    }

    /// Shorthand for a field of order `q`, which must be a prime power.
    pub fn of_order(q: u32) -> Result<Field, FieldError> {
        let p = prime_divisors(q as u64);
        if p.len() != 1 {
            return Err(FieldError::InvalidArgument(format!("{q} is not a prime power")));
        }
        let p = p[0] as u32;
        let mut a = 0;
        let mut v = q;
        while v > 1 {
            v /= p;
            a += 1;
        }
        Field::new(p, a)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn a(&self) -> u32 {
        self.0.a
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.from_index_unchecked(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_index_unchecked(1)
    }

    /// The class of `t` in `F_p[t]/(f)`; equals `0` in a prime field.
    pub fn generator_root(&self) -> FieldElement {
        if self.a() == 1 {
            self.zero()
        } else {
            self.from_index_unchecked(self.p())
        }
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.p() as i64;
        self.from_index_unchecked(n.rem_euclid(p) as u32)
    }

    pub fn from_index(&self, index: u32) -> Result<FieldElement, FieldError> {
        if index >= self.q() {
            return Err(FieldError::InvalidArgument(format!(
                "index {index} outside F_{}",
                self.q()
            )));
        }
        Ok(self.from_index_unchecked(index))
    }

    pub(crate) fn from_index_unchecked(&self, index: u32) -> FieldElement {
        FieldElement { q: self.q(), index }
    }

    /// Element with the given coefficients (lowest degree first, exactly `a`).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.a() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(FieldError::InvalidArgument(format!(
                "coefficients {coeffs:?} do not describe an element of F_{}",
                self.q()
            )));
        }
        let c: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
        Ok(self.from_index_unchecked(encode(&c, self.p())))
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        decode(x.index, self.p(), self.a())[..self.a() as usize]
            .iter()
            .map(|&c| c as u32)
            .collect()
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.q == self.q()
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(move |i| self.from_index_unchecked(i))
    }

    /// True if `x` lies in the prime subfield.
    pub fn in_prime_field(&self, x: FieldElement) -> bool {
        x.index < self.p()
    }

    fn check(&self, x: FieldElement) -> Result<(), FieldError> {
        if x.q != self.q() {
            return Err(FieldError::MixedFields {
                left: self.q(),
                right: x.q,
            });
        }
        Ok(())
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(x.q == self.q() && y.q == self.q());
        let p = self.p();
        if self.a() == 1 {
            let s = x.index + y.index;
            return self.from_index_unchecked(if s >= p { s - p } else { s });
        }
        let (mut u, mut v, mut out, mut place) = (x.index, y.index, 0u32, 1u32);
        for _ in 0..self.a() {
            let d = (u % p + v % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            u /= p;
            v /= p;
        }
        self.from_index_unchecked(out)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        debug_assert!(x.q == self.q());
        let p = self.p();
        if self.a() == 1 {
            return self.from_index_unchecked(if x.index == 0 { 0 } else { p - x.index });
        }
        let (mut u, mut out, mut place) = (x.index, 0u32, 1u32);
        for _ in 0..self.a() {
            let d = (p - u % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            u /= p;
        }
        self.from_index_unchecked(out)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(x.q == self.q() && y.q == self.q());
        let p = self.p() as u64;
        if self.a() == 1 {
            return self.from_index_unchecked((x.index as u64 * y.index as u64 % p) as u32);
        }
        if x.index == 0 || y.index == 0 {
            return self.zero();
        }
        let a = self.a() as usize;
        let cx = decode(x.index, self.p(), self.a());
        let cy = decode(y.index, self.p(), self.a());
        let mut prod = [0u64; 2 * MAX_DEGREE as usize];
        for i in 0..a {
            if cx[i] == 0 {
                continue;
            }
            for j in 0..a {
                prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % p;
            }
        }
        // reduce with the monic modulus, top degree down
        let m = &self.0.modulus;
        for deg in (a..2 * a - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for k in 0..a {
                let idx = deg - a + k;
                prod[idx] = (prod[idx] + (p - c) * m[k] as u64) % p;
            }
        }
        self.from_index_unchecked(encode(&prod[..a], self.p()))
    }

    pub fn pow(&self, x: FieldElement, mut k: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        if x.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.a() == 1 {
            let p = self.p() as u64;
            return Ok(self.from_index_unchecked(inv_mod(x.index as u64, p) as u32));
        }
        Ok(self.pow(x, self.q() as u64 - 2))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(x)?;
        Ok(self.mul(x, self.inv(y)?))
    }

    /// Checked binary arithmetic.
    pub fn arith(
        &self,
        x: FieldElement,
        y: FieldElement,
        op: ArithOp,
    ) -> Result<FieldElement, FieldError> {
        if x.q != y.q {
            return Err(FieldError::MixedFields {
                left: x.q,
                right: y.q,
            });
        }
        self.check(x)?;
        Ok(match op {
            ArithOp::Add => self.add(x, y),
            ArithOp::Sub => self.sub(x, y),
            ArithOp::Mul => self.mul(x, y),
            ArithOp::Div => self.div(x, y)?,
        })
    }

    /// `x -> x^(p^i)`; exponents are taken modulo `a`.
    pub fn frobenius(&self, x: FieldElement, i: u32) -> FieldElement {
        let i = i % self.a();
        if i == 0 {
            return x;
        }
        match &self.0.frob_table {
            Some(table) => (0..i).fold(x, |y, _| self.from_index_unchecked(table[y.index as usize])),
            None => (0..i).fold(x, |y, _| self.pow(y, self.p() as u64)),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: FieldElement) -> Result<u64, FieldError> {
        self.check(x)?;
        if x.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let mut n = self.q() as u64 - 1;
        for r in prime_divisors(n) {
            while n % r == 0 && self.pow(x, n / r) == self.one() {
                n /= r;
            }
        }
        Ok(n)
    }

    /// Smallest generator of the multiplicative group in canonical order.
    pub fn primitive_element(&self) -> FieldElement {
        let target = self.q() as u64 - 1;
        self.elements()
            .skip(1)
            .find(|&x| self.element_order(x).unwrap() == target)
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// Roots of `t^2 + b t + c` in canonical order, by exhaustive scan.
    pub fn roots_of_quadratic(&self, b: FieldElement, c: FieldElement) -> Vec<FieldElement> {
        self.elements()
            .filter(|&t| self.add(self.add(self.mul(t, t), self.mul(b, t)), c).is_zero())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multiplicative order by repeated multiplication, independent of
    /// `element_order`.
    fn naive_order(f: &Field, x: FieldElement) -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != f.one() {
            y = f.mul(y, x);
            k += 1;
        }
        k
    }

    #[test]
    fn prime_field_examples() {
        let f = Field::new(11, 1).unwrap();
        assert_eq!(f.q(), 11);
        assert_eq!(f.add(f.from_int(7), f.from_int(5)), f.from_int(1));
        let g = Field::new(19, 1).unwrap();
        assert_eq!(g.inv(g.from_int(2)).unwrap(), g.from_int(10));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(12, 1), Err(FieldError::InvalidArgument(_))));
        assert!(matches!(Field::new(2, 9), Err(FieldError::InvalidArgument(_))));
        assert!(matches!(Field::new(3, 0), Err(FieldError::InvalidArgument(_))));
        assert!(matches!(Field::new(65537, 2), Err(FieldError::InvalidArgument(_))));
        assert!(matches!(Field::of_order(12), Err(FieldError::InvalidArgument(_))));
    }

    #[test]
    fn division_by_zero_and_mixing() {
        let f = Field::new(11, 1).unwrap();
        let g = Field::new(13, 1).unwrap();
        assert_eq!(f.inv(f.zero()), Err(FieldError::DivisionByZero));
        assert_eq!(
            f.arith(f.one(), f.zero(), ArithOp::Div),
            Err(FieldError::DivisionByZero)
        );
        assert!(matches!(
            f.arith(f.one(), g.one(), ArithOp::Add),
            Err(FieldError::MixedFields { .. })
        ));
    }

    #[test]
    fn primitive_elements_by_brute_force() {
        // oracle: scan candidates 1, 2, 3, ... and count powers
        for (p, a) in [(11, 1), (2, 3), (13, 2), (7, 2), (2, 4), (3, 3)] {
            let f = Field::new(p, a).unwrap();
            let first = f
                .elements()
                .skip(1)
                .find(|&x| naive_order(&f, x) == f.q() as u64 - 1)
                .unwrap();
            assert_eq!(f.primitive_element(), first, "F_{}", f.q());
        }
        assert_eq!(Field::new(11, 1).unwrap().primitive_element().index(), 2);
    }

    #[test]
    fn f8_uses_t_cubed_equals_t_plus_one() {
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        let t = f.generator_root();
        assert_eq!(f.primitive_element(), t);
        assert_eq!(naive_order(&f, t), 7);
        assert_eq!(f.pow(t, 3), f.add(t, f.one()));
    }

    #[test]
    fn f169_root_is_primitive() {
        let f = Field::new(13, 2).unwrap();
        let t = f.generator_root();
        assert_eq!(f.primitive_element(), t);
        assert_eq!(f.mul(t, f.pow(t, 167)), f.one());
        assert_eq!(f.pow(t, 168), f.one());
        assert_ne!(f.pow(t, 84), f.one());
    }

    #[test]
    fn frobenius_examples() {
        let f = Field::new(13, 2).unwrap();
        for x in f.elements() {
            assert_eq!(f.frobenius(x, 2), x);
            if f.in_prime_field(x) {
                assert_eq!(f.frobenius(x, 1), x);
            }
        }
        let g = Field::new(2, 3).unwrap();
        for x in g.elements() {
            let y = g.frobenius(g.frobenius(g.frobenius(x, 1), 1), 1);
            assert_eq!(y, x);
            assert_eq!(g.frobenius(x, 1), g.mul(x, x));
        }
    }

    #[test]
    fn modulus_is_deterministic_and_irreducible() {
        for (p, a) in [(13, 2), (7, 2), (2, 5), (3, 4), (5, 3)] {
            let f1 = Field::new(p, a).unwrap();
            let f2 = Field::new(p, a).unwrap();
            assert_eq!(f1.modulus(), f2.modulus());
            let m: Vec<u64> = f1.modulus().iter().map(|&c| c as u64).collect();
            assert!(is_irreducible(&m, p as u64));
        }
    }

    #[test]
    fn element_roundtrip_through_coefficients() {
        let f = Field::new(3, 3).unwrap();
        for x in f.elements() {
            assert_eq!(f.element(&f.coeffs(x)).unwrap(), x);
        }
        assert!(f.element(&[0, 3, 0]).is_err());
        assert!(f.element(&[0, 1]).is_err());
    }
}
