//! The group algebra F_q[G]: convolution arithmetic, the natural embedding
//! tau_nat into F_q^n, the regular matrix representation, and the
//! permute-and-add action of algebra elements on length-n edge vectors.
//!
//! Edge vectors over GF(2) are stored bit-packed in machine words; the action
//! of a weight-w element is w permutations with XOR accumulation, and the
//! single-factor cyclic case uses word-level rotation instead of a general
//! permutation.

use crate::error::{Error, Result};
use crate::gf::{pack_hex, unpack_hex, Field, FieldElement, FieldSpec};
use crate::group::Group;
use crate::linalg::Mat;
use serde::{Deserialize, Serialize};

/// An element sum a_g g of F_q[G], coefficients in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    group: Group,
    field: Field,
    coeffs: Vec<FieldElement>,
}

/// Serializable form: group factor orders, field spec, coefficient indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraElementSpec {
    pub group: Vec<u64>,
    pub field: FieldSpec,
    pub coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn new(group: &Group, field: &Field, coeffs: Vec<FieldElement>) -> Result<AlgebraElement> {
        if coeffs.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::ContextMismatch);
        }
        Ok(AlgebraElement {
            group: group.clone(),
            field: field.clone(),
            coeffs,
        })
    }

    pub fn zero(group: &Group, field: &Field) -> AlgebraElement {
        AlgebraElement {
            group: group.clone(),
            field: field.clone(),
            coeffs: vec![field.zero(); group.order()],
        }
    }

    /// The multiplicative identity 1e.
    pub fn one(group: &Group, field: &Field) -> AlgebraElement {
        Self::basis(group, field, 0)
    }

    /// The basis element 1g for the group element with the given index.
    pub fn basis(group: &Group, field: &Field, g: usize) -> AlgebraElement {
        let mut a = Self::zero(group, field);
        a.coeffs[g] = field.one();
        a
    }

    /// Sum of 1g over all g.
    pub fn all_ones(group: &Group, field: &Field) -> AlgebraElement {
        AlgebraElement {
            group: group.clone(),
            field: field.clone(),
            coeffs: vec![field.one(); group.order()],
        }
    }

    pub fn from_terms(
        group: &Group,
        field: &Field,
        terms: &[(usize, FieldElement)],
    ) -> Result<AlgebraElement> {
        let mut a = Self::zero(group, field);
        for (g, c) in terms {
            if c.field() != field {
                return Err(Error::ContextMismatch);
            }
            a.coeffs[*g] = a.coeffs[*g].add(c);
        }
        Ok(a)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }
    pub fn coeff(&self, g: usize) -> &FieldElement {
        &self.coeffs[g]
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Hamming weight of tau_nat(self).
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check_context(&self, other: &AlgebraElement) -> Result<()> {
        if self.group != other.group || self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_context(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(AlgebraElement {
            group: self.group.clone(),
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            group: self.group.clone(),
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> AlgebraElement {
        AlgebraElement {
            group: self.group.clone(),
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Convolution product: sum over g of (sum over h of a_h b_{h^-1 g}) g.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_context(other)?;
        let mut out = AlgebraElement::zero(&self.group, &self.field);
        for (h, ah) in self.coeffs.iter().enumerate() {
            if ah.is_zero() {
                continue;
            }
            for (k, bk) in other.coeffs.iter().enumerate() {
                if bk.is_zero() {
                    continue;
                }
                let g = self.group.mul_indices(h, k);
                out.coeffs[g] = out.coeffs[g].add(&ah.mul(bk));
            }
        }
        Ok(out)
    }

    /// The n x n matrix of left-multiplication by self: M[i][j] = a_{i j^-1},
    /// so M * tau_nat(m) = tau_nat(self * m).
    pub fn matrix_rep(&self) -> Mat {
        let n = self.group.order();
        let mut m = Mat::zero(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                let g = self.group.mul_indices(i, self.group.inv_index(j));
                m.set(i, j, self.coeffs[g].clone());
            }
        }
        m
    }

    /// The coordinate embedding of self into F_q^n (identity on storage).
    pub fn tau_nat(&self) -> EdgeVector {
        EdgeVector::from_elements(&self.field, &self.coeffs)
    }

    /// Inverse of tau_nat under the fixed enumeration.
    pub fn tau_inv(group: &Group, v: &EdgeVector) -> Result<AlgebraElement> {
        if v.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: v.len(),
            });
        }
        AlgebraElement::new(group, v.field(), v.to_elements())
    }

    /// Permute-and-add action: tau_nat(self * tau_inv(v)). Applies exactly
    /// weight(self) permutations of v with accumulation; never builds the
    /// dense matrix.
    pub fn apply(&self, v: &EdgeVector) -> Result<EdgeVector> {
        if v.len() != self.group.order() {
            return Err(Error::LengthMismatch {
                expected: self.group.order(),
                got: v.len(),
            });
        }
        if v.field() != &self.field {
            return Err(Error::ContextMismatch);
        }
        let mut out = EdgeVector::zero(&self.field, v.len());
        for (g, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.accumulate_permuted(v, &self.group, g, c);
        }
        Ok(out)
    }

    pub fn spec(&self) -> AlgebraElementSpec {
        AlgebraElementSpec {
            group: self.group.factor_orders().to_vec(),
            field: self.field.spec(),
            coeffs: self.coeffs.iter().map(|c| c.index()).collect(),
        }
    }

    pub fn from_spec(spec: &AlgebraElementSpec) -> Result<AlgebraElement> {
        let group = Group::new(&spec.group)?;
        let field = Field::from_spec(&spec.field)?;
        if spec.coeffs.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: spec.coeffs.len(),
            });
        }
        let coeffs = spec
            .coeffs
            .iter()
            .map(|&i| field.element_from_index(i))
            .collect();
        AlgebraElement::new(&group, &field, coeffs)
    }
}

// ---- edge vectors ----

#[derive(Debug, Clone, PartialEq, Eq)]
enum VecData {
    /// GF(2) only: one bit per coordinate, little-endian within words.
    Bits(Vec<u64>),
    Elems(Vec<FieldElement>),
}

/// A length-n vector over GF(q) carried on a network edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeVector {
    field: Field,
    len: usize,
    data: VecData,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

fn mask_top(words: &mut [u64], n: usize) {
    if n % 64 != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << (n % 64)) - 1;
        }
    }
}

/// words shifted left by s bits (bit i -> bit i+s), overflow past n dropped.
fn shift_left(src: &[u64], n: usize, s: usize) -> Vec<u64> {
    let wc = word_count(n);
    let mut out = vec![0u64; wc];
    let (ws, bs) = (s / 64, s % 64);
    for i in (ws..wc).rev() {
        let mut w = src[i - ws] << bs;
        if bs > 0 && i > ws {
            w |= src[i - ws - 1] >> (64 - bs);
        }
        out[i] = w;
    }
    mask_top(&mut out, n);
    out
}

/// words shifted right by s bits (bit i -> bit i-s).
fn shift_right(src: &[u64], n: usize, s: usize) -> Vec<u64> {
    let wc = word_count(n);
    let mut out = vec![0u64; wc];
    let (ws, bs) = (s / 64, s % 64);
    for i in 0..wc.saturating_sub(ws) {
        let mut w = src[i + ws] >> bs;
        if bs > 0 && i + ws + 1 < wc {
            w |= src[i + ws + 1] << (64 - bs);
        }
        out[i] = w;
    }
    out
}

impl EdgeVector {
    pub fn zero(field: &Field, n: usize) -> EdgeVector {
        let data = if field.order() == 2 {
            VecData::Bits(vec![0u64; word_count(n)])
        } else {
            VecData::Elems(vec![field.zero(); n])
        };
        EdgeVector {
            field: field.clone(),
            len: n,
            data,
        }
    }

    pub fn from_elements(field: &Field, elems: &[FieldElement]) -> EdgeVector {
        let mut v = EdgeVector::zero(field, elems.len());
        for (i, e) in elems.iter().enumerate() {
            v.set(i, e.clone());
        }
        v
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn len(&self) -> usize {
        self.len
    }
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> FieldElement {
        assert!(i < self.len);
        match &self.data {
            VecData::Bits(w) => {
                if (w[i / 64] >> (i % 64)) & 1 == 1 {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            }
            VecData::Elems(e) => e[i].clone(),
        }
    }

    pub fn set(&mut self, i: usize, v: FieldElement) {
        assert!(i < self.len);
        match &mut self.data {
            VecData::Bits(w) => {
                if v.is_zero() {
                    w[i / 64] &= !(1u64 << (i % 64));
                } else {
                    w[i / 64] |= 1u64 << (i % 64);
                }
            }
            VecData::Elems(e) => e[i] = v,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            VecData::Bits(w) => w.iter().all(|&x| x == 0),
            VecData::Elems(e) => e.iter().all(|x| x.is_zero()),
        }
    }

    pub fn weight(&self) -> usize {
        match &self.data {
            VecData::Bits(w) => w.iter().map(|x| x.count_ones() as usize).sum(),
            VecData::Elems(e) => e.iter().filter(|x| !x.is_zero()).count(),
        }
    }

    pub fn to_elements(&self) -> Vec<FieldElement> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn add(&self, other: &EdgeVector) -> Result<EdgeVector> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: other.len,
            });
        }
        let mut out = self.clone();
        match (&mut out.data, &other.data) {
            (VecData::Bits(a), VecData::Bits(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
            (VecData::Elems(a), VecData::Elems(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = x.add(y);
                }
            }
            _ => unreachable!("storage variant is determined by the field"),
        }
        Ok(out)
    }

    /// out += c * (v permuted by the regular action of the group element with
    /// index g). Uses word rotation for bit vectors on a single cyclic factor.
    fn accumulate_permuted(&mut self, v: &EdgeVector, group: &Group, g: usize, c: &FieldElement) {
        let n = self.len;
        match (&mut self.data, &v.data) {
            (VecData::Bits(dst), VecData::Bits(src)) => {
                // c is 1 over GF(2)
                if group.factor_orders().len() <= 1 {
                    // cyclic: the regular action of g is the circular shift by g
                    let rotated = if g == 0 {
                        src.clone()
                    } else {
                        let mut r = shift_left(src, n, g);
                        for (a, b) in r.iter_mut().zip(shift_right(src, n, n - g)) {
                            *a |= b;
                        }
                        r
                    };
                    for (a, b) in dst.iter_mut().zip(rotated) {
                        *a ^= b;
                    }
                } else {
                    for i in 0..n {
                        if (src[i / 64] >> (i % 64)) & 1 == 1 {
                            let j = group.mul_indices(g, i);
                            dst[j / 64] ^= 1u64 << (j % 64);
                        }
                    }
                }
            }
            (VecData::Elems(dst), VecData::Elems(src)) => {
                for (i, x) in src.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let j = group.mul_indices(g, i);
                    dst[j] = dst[j].add(&c.mul(x));
                }
            }
            _ => unreachable!("storage variant is determined by the field"),
        }
    }

    /// Sum of all coordinates.
    pub fn coordinate_sum(&self) -> FieldElement {
        match &self.data {
            VecData::Bits(w) => {
                let parity: u32 = w.iter().map(|x| x.count_ones()).sum::<u32>() & 1;
                self.field.from_int(parity as u64)
            }
            VecData::Elems(e) => e.iter().fold(self.field.zero(), |acc, x| acc.add(x)),
        }
    }

    /// Hex packing of the coordinate index list (bit-packed for GF(2)).
    pub fn to_hex(&self) -> String {
        let idxs: Vec<u64> = (0..self.len).map(|i| self.get(i).index()).collect();
        pack_hex(&idxs, self.field.order())
    }

    pub fn from_hex(field: &Field, n: usize, hex: &str) -> Result<EdgeVector> {
        let idxs = unpack_hex(hex, field.order(), n)?;
        let elems: Vec<FieldElement> = idxs.iter().map(|&i| field.element_from_index(i)).collect();
        Ok(EdgeVector::from_elements(field, &elems))
    }
}

/// Drops the last coordinate of a vector whose coordinates sum to zero.
pub fn bit_truncate(v: &EdgeVector) -> Result<EdgeVector> {
    if !v.coordinate_sum().is_zero() {
        return Err(Error::TruncateParity);
    }
    let elems = v.to_elements();
    Ok(EdgeVector::from_elements(
        v.field(),
        &elems[..v.len() - 1],
    ))
}

/// Appends the negated sum of the coordinates, inverting [`bit_truncate`].
pub fn bit_expand(w: &EdgeVector) -> EdgeVector {
    let mut elems = w.to_elements();
    let sum = w.coordinate_sum();
    elems.push(sum.neg());
    EdgeVector::from_elements(w.field(), &elems)
}
