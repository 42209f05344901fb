//! Exact arithmetic in finite fields GF(p^m) in the polynomial basis.
//!
//! Fields are capped at p^m <= 2^16. The modulus is the canonically least
//! monic irreducible polynomial of the requested degree: candidates are
//! ordered by the value of their lower-coefficient vector read as a base-p
//! integer (constant term least significant), so element encodings are
//! reproducible across runs.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

const MAX_FIELD_SIZE: u64 = 1 << 16;

#[derive(Debug)]
struct FieldRepr {
    p: u64,
    m: usize,
    /// Monic modulus of degree m, coefficients low-to-high, length m + 1.
    modulus: Vec<u64>,
    /// Coefficients of a fixed primitive element (least by element index).
    primitive: Vec<u64>,
    order: u64,
}

/// A finite field GF(p^m). Cheap to clone; equality compares (p, m, modulus).
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.m == other.0.m
                && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.m)
        }
    }
}

/// Serializable field description: {p, m, modulus coefficients}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: usize,
    pub modulus: Vec<u64>,
}

/// An element of a [`Field`], stored as its coefficient list of length m.
#[derive(Debug, Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
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

/// Splits a prime power q = p^m into (p, m). Errors if q is not a prime power.
pub fn prime_power_split(q: u64) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let fs = prime_factors(q);
    if fs.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = fs[0];
    let mut m = 0usize;
    let mut v = q;
    while v > 1 {
        v /= p;
        m += 1;
    }
    Ok((p, m))
}

// ---- dense polynomial arithmetic over GF(p), coefficients low-to-high ----

fn poly_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let df = poly_deg(f).expect("nonzero modulus");
    let lead_inv = mod_inv(f[df], p);
    while let Some(da) = poly_deg(&a) {
        if da < df {
            break;
        }
        let factor = a[da] * lead_inv % p;
        let shift = da - df;
        for (i, &fc) in f.iter().enumerate().take(df + 1) {
            let sub = factor * fc % p;
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
    }
    a.truncate(df);
    a.resize(df, 0);
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(prod, f, p)
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let m = poly_deg(f).unwrap();
    let mut result = vec![0u64; m];
    if m > 0 {
        result[0] = 1;
    }
    let mut acc = poly_rem(base.to_vec(), f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &acc, f, p);
        }
        acc = poly_mulmod(&acc, &acc, f, p);
        e >>= 1;
    }
    result
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    loop {
        let db = match poly_deg(&b) {
            Some(d) => d,
            None => return a,
        };
        let mut f = b.clone();
        f.truncate(db + 1);
        let r = poly_rem(a, &f, p);
        a = b;
        b = r;
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1u64 % n;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    r
}

/// x^(p^k) mod f, computed by k successive p-th powers.
fn frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
    let m = poly_deg(f).unwrap();
    let mut x = vec![0u64; m];
    if m >= 2 {
        x[1] = 1;
    } else {
        // deg-1 modulus: x reduces to a constant
        x = poly_rem(vec![0, 1], f, p);
    }
    for _ in 0..k {
        x = poly_powmod(&x, p, f, p);
    }
    x
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = match poly_deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if m == 1 {
        return true;
    }
    // x^(p^m) == x mod f
    let xpm = frobenius_power(f, p, m);
    let mut x = vec![0u64; m];
    x[1] = 1;
    if xpm != x {
        return false;
    }
    // gcd(x^(p^(m/r)) - x, f) must be constant for each prime r | m
    for r in prime_factors(m as u64) {
        let k = m / r as usize;
        let mut g = frobenius_power(f, p, k);
        g[1] = (g[1] + p - 1) % p;
        let gcd = poly_gcd(f.to_vec(), g, p);
        if poly_deg(&gcd).unwrap_or(0) != 0 {
            return false;
        }
    }
    true
}

impl Field {
    /// Constructs GF(p^m) with the canonically least irreducible modulus.
    pub fn new(p: u64, m: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || m > 16 {
            return Err(Error::DegreeOutOfRange(m as u64));
        }
        let mut order: u64 = 1;
        for _ in 0..m {
            order = order
                .checked_mul(p)
                .filter(|&o| o <= MAX_FIELD_SIZE)
                .ok_or(Error::DegreeOutOfRange(m as u64))?;
        }
        let modulus = if m == 1 {
            vec![0, 1] // prime-field fast path: modulus x
        } else {
            Self::least_irreducible(p, m, order)
        };
        let mut repr = FieldRepr {
            p,
            m,
            modulus,
            primitive: vec![0; m],
            order,
        };
        repr.primitive = Self::find_primitive(&repr);
        Ok(Field(Arc::new(repr)))
    }

    /// Constructs the field of size q for a prime power q.
    pub fn of_size(q: u64) -> Result<Field> {
        let (p, m) = prime_power_split(q)?;
        Field::new(p, m)
    }

    fn least_irreducible(p: u64, m: usize, order: u64) -> Vec<u64> {
        for c in 0..order {
            let mut f = vec![0u64; m + 1];
            let mut v = c;
            for coeff in f.iter_mut().take(m) {
                *coeff = v % p;
                v /= p;
            }
            f[m] = 1;
            if is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over GF(p)")
    }

    fn find_primitive(repr: &FieldRepr) -> Vec<u64> {
        let group_order = repr.order - 1;
        if group_order == 1 {
            return Self::coeffs_of_index(repr, 1);
        }
        let factors = prime_factors(group_order);
        for idx in 2..repr.order {
            let cand = Self::coeffs_of_index(repr, idx);
            let primitive = factors.iter().all(|&r| {
                let e = group_order / r;
                let pw = poly_powmod(&cand, e, &repr.modulus, repr.p);
                !Self::is_one(repr, &pw)
            });
            if primitive {
                return cand;
            }
        }
        unreachable!("a primitive element always exists")
    }

    fn coeffs_of_index(repr: &FieldRepr, mut idx: u64) -> Vec<u64> {
        let mut c = vec![0u64; repr.m];
        for coeff in c.iter_mut() {
            *coeff = idx % repr.p;
            idx /= repr.p;
        }
        c
    }

    fn is_one(_repr: &FieldRepr, c: &[u64]) -> bool {
        c[0] == 1 && c[1..].iter().all(|&x| x == 0)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn m(&self) -> usize {
        self.0.m
    }
    /// Field size p^m.
    pub fn order(&self) -> u64 {
        self.0.order
    }
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.0.m],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.element_from_index(1)
    }

    pub fn primitive(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: self.0.primitive.clone(),
        }
    }

    /// Element whose coefficient vector, read as a base-p integer, equals idx.
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        assert!(idx < self.0.order, "element index out of range");
        FieldElement {
            field: self.clone(),
            coeffs: Self::coeffs_of_index(&self.0, idx),
        }
    }

    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.0.m {
            return Err(Error::LengthMismatch {
                expected: self.0.m,
                got: coeffs.len(),
            });
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs: coeffs.iter().map(|&c| c % self.0.p).collect(),
        })
    }

    /// Embeds an integer via repeated addition of 1 (the prime-subfield map).
    pub fn from_int(&self, v: u64) -> FieldElement {
        let mut c = vec![0u64; self.0.m];
        c[0] = v % self.0.p;
        FieldElement {
            field: self.clone(),
            coeffs: c,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.order).map(move |i| self.element_from_index(i))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.0.p,
            m: self.0.m,
            modulus: self.0.modulus.clone(),
        }
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        let f = Field::new(spec.p, spec.m)?;
        if f.modulus() != spec.modulus.as_slice() {
            return Err(Error::FieldMismatch);
        }
        Ok(f)
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Coefficient vector read as a base-p integer.
    pub fn index(&self) -> u64 {
        let p = self.field.p();
        self.coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "arithmetic between elements of distinct fields"
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let repr = &self.field.0;
        let coeffs = poly_mulmod(&self.coeffs, &other.coeffs, &repr.modulus, repr.p);
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        let repr = &self.field.0;
        let coeffs = poly_powmod(&self.coeffs, e, &repr.modulus, repr.p);
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// Multiplicative order; 0 has no order and panics.
    pub fn mult_order(&self) -> u64 {
        assert!(!self.is_zero());
        let n = self.field.order() - 1;
        let mut ord = n;
        for r in prime_factors(n) {
            while ord % r == 0 && self.pow(ord / r).is_one() {
                ord /= r;
            }
        }
        ord
    }
}

/// The four checked field operations of the public contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// Checked arithmetic entry point: rejects mixed-field operands.
pub fn field_arith(op: ArithOp, a: &FieldElement, b: Option<&FieldElement>) -> Result<FieldElement> {
    match op {
        ArithOp::Add | ArithOp::Mul => {
            let b = b.ok_or(Error::FieldMismatch)?;
            if a.field() != b.field() {
                return Err(Error::FieldMismatch);
            }
            Ok(if op == ArithOp::Add {
                a.add(b)
            } else {
                a.mul(b)
            })
        }
        ArithOp::Neg => Ok(a.neg()),
        ArithOp::Inv => a.inv(),
    }
}

/// Smallest l >= 1 with q^l = 1 (mod n); mult_order(q, 1) = 1 by convention.
pub fn mult_order(q: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::GcdNotOne(q, n));
    }
    if num_integer::gcd(q, n) != 1 {
        return Err(Error::GcdNotOne(q, n));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut acc = q % n;
    let mut l = 1u64;
    while acc != 1 {
        acc = acc * (q % n) % n;
        l += 1;
    }
    Ok(l)
}

/// Euler's totient; phi(1) = 1 by the standard empty-product convention.
pub fn euler_totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    for r in prime_factors(n) {
        result = result / r * (r - 1);
    }
    result
}

/// Returns GF(q^E) with E = mult_order(q, n), and an element of order exactly n.
pub fn root_of_unity(q: u64, n: u64) -> Result<(Field, FieldElement)> {
    let (p, m) = prime_power_split(q)?;
    let e = mult_order(q, n)?;
    let big_m = m
        .checked_mul(e as usize)
        .ok_or(Error::DegreeOutOfRange(e))?;
    let field = Field::new(p, big_m)?;
    let omega = field.primitive().pow((field.order() - 1) / n);
    debug_assert_eq!(omega.mult_order(), n);
    Ok((field, omega))
}

/// A subfield embedding GF(p^a) -> GF(p^b) for a | b, determined by mapping
/// the small field's generator to the least root of its modulus in the big field.
#[derive(Debug, Clone)]
pub struct Embedding {
    from: Field,
    to: Field,
    /// Powers root^0 .. root^(a-1) of the chosen root, in the big field.
    root_powers: Vec<FieldElement>,
}

impl Embedding {
    pub fn new(from: &Field, to: &Field) -> Result<Embedding> {
        if from.p() != to.p() || to.m() % from.m() != 0 {
            return Err(Error::NoEmbedding(from.order(), to.order()));
        }
        if from == to {
            let root = if from.m() >= 2 {
                to.element_from_index(from.p()) // the generator x itself
            } else {
                to.zero()
            };
            return Ok(Self::from_root(from, to, root));
        }
        let modulus = from.modulus();
        for idx in 0..to.order() {
            let cand = to.element_from_index(idx);
            // evaluate the small modulus at cand via Horner
            let mut acc = to.zero();
            for &c in modulus.iter().rev() {
                acc = acc.mul(&cand).add(&to.from_int(c));
            }
            if acc.is_zero() {
                return Ok(Self::from_root(from, to, cand));
            }
        }
        Err(Error::NoEmbedding(from.order(), to.order()))
    }

    fn from_root(from: &Field, to: &Field, root: FieldElement) -> Embedding {
        let mut root_powers = Vec::with_capacity(from.m());
        let mut acc = to.one();
        for _ in 0..from.m() {
            root_powers.push(acc.clone());
            acc = acc.mul(&root);
        }
        Embedding {
            from: from.clone(),
            to: to.clone(),
            root_powers,
        }
    }

    pub fn from_field(&self) -> &Field {
        &self.from
    }
    pub fn to_field(&self) -> &Field {
        &self.to
    }

    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != &self.from {
            return Err(Error::FieldMismatch);
        }
        let mut acc = self.to.zero();
        for (c, pw) in x.coeffs().iter().zip(&self.root_powers) {
            acc = acc.add(&self.to.from_int(*c).mul(pw));
        }
        Ok(acc)
    }
}

// ---- hex packing of coefficient vectors ----

/// Packs a coefficient vector over GF(p) as hex, little-endian: for p = 2 one
/// bit per coefficient, otherwise one byte (p <= 256) or two bytes per
/// coefficient.
pub fn pack_hex(coeffs: &[u64], p: u64) -> String {
    let bytes: Vec<u8> = if p == 2 {
        let mut out = vec![0u8; coeffs.len().div_ceil(8)];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                out[i / 8] |= 1 << (i % 8);
            }
        }
        out
    } else if p <= 256 {
        coeffs.iter().map(|&c| c as u8).collect()
    } else {
        coeffs
            .iter()
            .flat_map(|&c| [(c & 0xff) as u8, (c >> 8) as u8])
            .collect()
    };
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn unpack_hex(hex: &str, p: u64, len: usize) -> Result<Vec<u64>> {
    if hex.len() % 2 != 0 {
        return Err(Error::BadHex(hex.to_string()));
    }
    let bytes: Vec<u8> = (0..hex.len() / 2)
        .map(|i| u8::from_str_radix(&hex[2 * i..2 * i + 2], 16))
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::BadHex(hex.to_string()))?;
    let coeffs: Vec<u64> = if p == 2 {
        if bytes.len() != len.div_ceil(8) {
            return Err(Error::BadHex(hex.to_string()));
        }
        (0..len)
            .map(|i| ((bytes[i / 8] >> (i % 8)) & 1) as u64)
            .collect()
    } else if p <= 256 {
        if bytes.len() != len {
            return Err(Error::BadHex(hex.to_string()));
        }
        bytes.iter().map(|&b| b as u64).collect()
    } else {
        if bytes.len() != 2 * len {
            return Err(Error::BadHex(hex.to_string()));
        }
        bytes
            .chunks(2)
            .map(|c| c[0] as u64 | (c[1] as u64) << 8)
            .collect()
    };
    if coeffs.iter().any(|&c| c >= p) {
        return Err(Error::BadHex(hex.to_string()));
    }
    Ok(coeffs)
}

impl FieldElement {
    pub fn to_hex(&self) -> String {
        pack_hex(&self.coeffs, self.field.p())
    }

    pub fn from_hex(field: &Field, hex: &str) -> Result<FieldElement> {
        let coeffs = unpack_hex(hex, field.p(), field.m())?;
        field.element_from_coeffs(&coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        let one = f.one();
        assert!(one.add(&one).is_zero()); // 1 + 1 = 0 in GF(2)
    }

    #[test]
    fn gf4_primitive_satisfies_modulus() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]); // x^2 + x + 1
        let a = f.primitive();
        // alpha * alpha = alpha + 1
        assert_eq!(a.mul(&a), a.add(&f.one()));
    }

    #[test]
    fn gf16_order_divides_fifteen() {
        let f = Field::new(2, 4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]); // x^4 + x + 1
        let a = f.primitive();
        assert!(a.pow(15).is_one());
        assert_eq!(a.mult_order(), 15);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(2, 0).unwrap_err(), Error::DegreeOutOfRange(0));
        assert_eq!(Field::new(2, 17).unwrap_err(), Error::DegreeOutOfRange(17));
        assert!(Field::new(3, 16).is_err()); // 3^16 > 2^16
    }

    #[test]
    fn inverse_of_zero_rejected() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.zero().inv().unwrap_err(), Error::ZeroInverse);
    }

    #[test]
    fn mixed_field_arith_rejected() {
        let f1 = Field::new(2, 2).unwrap();
        let f2 = Field::new(2, 3).unwrap();
        let e = field_arith(ArithOp::Add, &f1.one(), Some(&f2.one()));
        assert_eq!(e.unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(2, 15).unwrap(), 4);
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert_eq!(mult_order(2, 9).unwrap(), 6);
        assert_eq!(mult_order(2, 1).unwrap(), 1);
        assert!(mult_order(2, 6).is_err());
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_totient(15), 8);
        assert_eq!(euler_totient(7), 6);
        assert_eq!(euler_totient(1), 1);
    }

    #[test]
    fn roots_of_unity() {
        let (f, w) = root_of_unity(2, 15).unwrap();
        assert_eq!(f.order(), 16);
        assert_eq!(w.mult_order(), 15);

        let (f, w) = root_of_unity(2, 7).unwrap();
        assert_eq!(f.order(), 8);
        assert_eq!(w.mult_order(), 7);

        let (f, w) = root_of_unity(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert!(w.is_one());

        assert!(root_of_unity(2, 6).is_err());
    }

    #[test]
    fn root_of_unity_proper_divisors() {
        for n in [3u64, 5, 7, 9, 15] {
            let (_, w) = root_of_unity(2, n).unwrap();
            assert!(w.pow(n).is_one());
            for d in 1..n {
                if n % d == 0 {
                    assert!(!w.pow(d).is_one(), "w^{d} = 1 for n = {n}");
                }
            }
        }
    }

    #[test]
    fn embedding_gf4_into_gf16() {
        let small = Field::new(2, 2).unwrap();
        let big = Field::new(2, 4).unwrap();
        let emb = Embedding::new(&small, &big).unwrap();
        let a = small.primitive();
        let img = emb.apply(&a).unwrap();
        // image must satisfy the GF(4) relation x^2 = x + 1
        assert_eq!(img.mul(&img), img.add(&big.one()));
        assert_eq!(img.mult_order(), 3);
    }

    #[test]
    fn hex_round_trip() {
        let f = Field::new(2, 4).unwrap();
        for i in 0..16 {
            let x = f.element_from_index(i);
            assert_eq!(FieldElement::from_hex(&f, &x.to_hex()).unwrap(), x);
        }
        let f3 = Field::new(3, 2).unwrap();
        for i in 0..9 {
            let x = f3.element_from_index(i);
            assert_eq!(FieldElement::from_hex(&f3, &x.to_hex()).unwrap(), x);
        }
    }
}
