//! The semisimple decomposition Phi : F_q[G] -> F_{q_1} x ... x F_{q_t} for
//! abelian G with gcd(|G|, q) = 1, realized by finite-field Fourier
//! transforms in a single splitting field GF(q^E), E = mult_order(q, exp(G)).
//!
//! Component ordering convention: the identity class is component 1 (so q_1 =
//! q), and the remaining classes are ordered by descending class size, ties
//! by least representative index. This keeps spectral supports T(M) stable
//! across runs and matches the component numbering used by the worked C15
//! examples (sizes 2, 16, 16, 16, 4).

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::gf::{mult_order, root_of_unity, Embedding, Field, FieldElement};
use crate::group::{ConjClass, Group};
use std::collections::HashMap;
use std::sync::Arc;

/// Spectral tuple (m_hat_1, ..., m_hat_t), components in the splitting field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub components: Vec<FieldElement>,
}

/// The decomposition data for one (group, base field) pair: conjugacy
/// classes, the splitting field, and the full character table.
#[derive(Debug)]
pub struct Decomposition {
    group: Group,
    base: Field,
    splitting: Field,
    embedding: Embedding,
    classes: Vec<ConjClass>,
    /// chars[h][g] = chi_h(g) = prod_f omega_f^{h_f g_f} in the splitting field.
    chars: Vec<Vec<FieldElement>>,
    n_inv: FieldElement,
    /// splitting-field index of embed(x) -> x, for pulling coefficients back.
    unembed: HashMap<u64, FieldElement>,
}

/// Builds the decomposition of F_q[G]. Requires gcd(|G|, q) = 1.
pub fn decompose(group: &Group, q: u64) -> Result<Arc<Decomposition>> {
    let base = Field::of_size(q)?;
    if num_integer::gcd(group.order() as u64, q) != 1 {
        return Err(Error::GcdNotOne(group.order() as u64, q));
    }
    let exp = group.exponent();
    let (splitting, omega_exp) = root_of_unity(q, exp)?;
    let embedding = Embedding::new(&base, &splitting)?;
    let classes = group.conjugacy_classes(q)?;

    // per-factor roots of unity of order n_f
    let factor_roots: Vec<FieldElement> = group
        .factor_orders()
        .iter()
        .map(|&nf| omega_exp.pow(exp / nf))
        .collect();

    let n = group.order();
    let mut chars = Vec::with_capacity(n);
    for h in 0..n {
        let he = group.element_from_index(h);
        let mut row = Vec::with_capacity(n);
        for g in 0..n {
            let ge = group.element_from_index(g);
            let mut v = splitting.one();
            for ((hf, gf), w) in he.exps().iter().zip(ge.exps()).zip(&factor_roots) {
                v = v.mul(&w.pow(hf * gf));
            }
            row.push(v);
        }
        chars.push(row);
    }

    let n_inv = splitting.from_int(n as u64).inv().expect("gcd(n, q) = 1");
    let mut unembed = HashMap::new();
    for x in base.elements() {
        let img = embedding.apply(&x)?;
        unembed.insert(img.index(), x);
    }

    Ok(Arc::new(Decomposition {
        group: group.clone(),
        base,
        splitting,
        embedding,
        classes,
        chars,
        n_inv,
        unembed,
    }))
}

impl Decomposition {
    pub fn group(&self) -> &Group {
        &self.group
    }
    pub fn base_field(&self) -> &Field {
        &self.base
    }
    pub fn splitting_field(&self) -> &Field {
        &self.splitting
    }
    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }
    /// Number of components t.
    pub fn num_components(&self) -> usize {
        self.classes.len()
    }
    /// Class size l_k for a 1-based component index.
    pub fn class_size(&self, k: usize) -> usize {
        self.classes[k - 1].size()
    }
    /// Component field size q_k = q^{l_k} for a 1-based component index.
    pub fn component_size(&self, k: usize) -> u64 {
        self.base.order().pow(self.classes[k - 1].size() as u32)
    }
    pub fn component_sizes(&self) -> Vec<u64> {
        (1..=self.num_components())
            .map(|k| self.component_size(k))
            .collect()
    }

    pub fn check_component_index(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.num_components() {
            return Err(Error::ComponentOutOfRange(k, self.num_components()));
        }
        Ok(())
    }

    fn check_element(&self, a: &AlgebraElement) -> Result<()> {
        if a.group() != &self.group || a.field() != &self.base {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// True if x lies in the subfield of size q^l of the splitting field.
    fn in_subfield(&self, x: &FieldElement, l: usize) -> bool {
        let ql = self.base.order().pow(l as u32);
        x.pow(ql) == *x
    }

    /// Forward transform: m_hat_k = sum_g a_g chi_{rep_k}(g).
    pub fn phi_forward(&self, a: &AlgebraElement) -> Result<Spectrum> {
        self.check_element(a)?;
        let embedded: Vec<FieldElement> = a
            .coeffs()
            .iter()
            .map(|c| self.embedding.apply(c))
            .collect::<Result<_>>()?;
        let components = self
            .classes
            .iter()
            .map(|cls| {
                let row = &self.chars[cls.rep];
                let mut acc = self.splitting.zero();
                for (c, chi) in embedded.iter().zip(row) {
                    if !c.is_zero() {
                        acc = acc.add(&c.mul(chi));
                    }
                }
                acc
            })
            .collect();
        Ok(Spectrum { components })
    }

    /// Inverse transform. Each component must lie in its declared subfield
    /// GF(q^{l_k}); otherwise no preimage exists in F_q[G].
    pub fn phi_inverse(&self, s: &Spectrum) -> Result<AlgebraElement> {
        let t = self.num_components();
        if s.components.len() != t {
            return Err(Error::LengthMismatch {
                expected: t,
                got: s.components.len(),
            });
        }
        let n = self.group.order();
        let q = self.base.order();
        // extend the class components to the full transform over all of G:
        // member j of class k is rep^(q^j) and carries s_k^(q^j)
        let mut full = vec![self.splitting.zero(); n];
        for (k, cls) in self.classes.iter().enumerate() {
            let sk = &s.components[k];
            if sk.field() != &self.splitting {
                return Err(Error::FieldMismatch);
            }
            if !self.in_subfield(sk, cls.size()) {
                return Err(Error::SubfieldViolation(k + 1));
            }
            let mut v = sk.clone();
            for &member in &cls.members {
                full[member] = v.clone();
                v = v.pow(q);
            }
        }
        // a_g = n^{-1} sum_h full(h) chi_h(g^{-1})  (character orthogonality)
        let mut coeffs = Vec::with_capacity(n);
        for g in 0..n {
            let ginv = self.group.inv_index(g);
            let mut acc = self.splitting.zero();
            for (h, val) in full.iter().enumerate() {
                if !val.is_zero() {
                    acc = acc.add(&val.mul(&self.chars[h][ginv]));
                }
            }
            let scaled = acc.mul(&self.n_inv);
            let back = self
                .unembed
                .get(&scaled.index())
                .cloned()
                .expect("subfield-constrained spectrum has a base-field preimage");
            coeffs.push(back);
        }
        AlgebraElement::new(&self.group, &self.base, coeffs)
    }

    /// The minimal idempotent theta_k, i.e. phi_inverse of the k-th unit
    /// tuple (1-based k).
    pub fn minimal_ideal_generator(&self, k: usize) -> Result<AlgebraElement> {
        self.check_component_index(k)?;
        let components = (0..self.num_components())
            .map(|i| {
                if i + 1 == k {
                    self.splitting.one()
                } else {
                    self.splitting.zero()
                }
            })
            .collect();
        self.phi_inverse(&Spectrum { components })
    }

    /// A GF(q)-basis of the component-k subfield GF(q^{l_k}) inside the
    /// splitting field: powers of a generator of that subfield.
    pub fn component_subfield_basis(&self, k: usize) -> Result<Vec<FieldElement>> {
        self.check_component_index(k)?;
        let l = self.class_size(k);
        let big_q = self.splitting.order();
        let ql = self.base.order().pow(l as u32);
        let zeta = self.splitting.primitive().pow((big_q - 1) / (ql - 1));
        let mut basis = Vec::with_capacity(l);
        let mut acc = self.splitting.one();
        for _ in 0..l {
            basis.push(acc.clone());
            acc = acc.mul(&zeta);
        }
        Ok(basis)
    }

    /// Embeds a base-field scalar into the splitting field.
    pub fn embed_base(&self, x: &FieldElement) -> Result<FieldElement> {
        self.embedding.apply(x)
    }
}

/// Number of distinct elements of GF(2^{l_0}) (l_0 = ord of 2 mod n)
/// expressible as sums of at most delta distinct powers of a primitive n-th
/// root of unity, by breadth-first layer growth with early saturation.
pub fn k_delta(n: u64, delta: u64) -> Result<u64> {
    if n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    let l0 = mult_order(2, n)?;
    let cap = 1u64 << l0;
    let (_, alpha) = root_of_unity(2, n)?;
    let powers: Vec<FieldElement> = (0..n).map(|i| alpha.pow(i)).collect();
    let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
    seen.insert(alpha.field().zero().index());
    let mut frontier: Vec<FieldElement> = vec![alpha.field().zero()];
    for _ in 0..delta {
        if seen.len() as u64 == cap {
            break;
        }
        let mut next = Vec::new();
        for s in &frontier {
            for p in &powers {
                let v = s.add(p);
                if seen.insert(v.index()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len() as u64)
}
