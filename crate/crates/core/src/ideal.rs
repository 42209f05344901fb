//! Group codes: ideals M of F_q[G], their annihilators Ann(M), rates,
//! spectral supports T(M), and the degree-reduction map on coefficients.
//!
//! Annihilators are computed two independent ways whenever spectral data is
//! available — as the kernel of r -> (r m_1, ..., r m_k) and as the ideal on
//! the complement of T(M) — and the two must agree exactly; a mismatch is a
//! hard internal error, not a recoverable one.

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::linalg::Mat;
use crate::lincode::{code_from_basis, LinearCode};
use crate::group::Group;
use crate::spectral::{Decomposition, Spectrum};
use num_rational::Ratio;
use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

/// An ideal of F_q[G] viewed as a linear code of length n = |G| via tau_nat.
#[derive(Debug)]
pub struct GroupCode {
    group: Group,
    field: Field,
    decomp: Option<Arc<Decomposition>>,
    /// 1-based spectral support T(M), when spectral data exists.
    support: Option<BTreeSet<usize>>,
    basis: Vec<AlgebraElement>,
    code: LinearCode,
    ann: OnceLock<Arc<GroupCode>>,
}

fn basis_to_code(field: &Field, n: usize, basis: &[AlgebraElement]) -> Result<LinearCode> {
    let rows: Vec<Vec<FieldElement>> = basis.iter().map(|b| b.coeffs().to_vec()).collect();
    code_from_basis(field, n, &rows)
}

/// Canonical basis (tau_inv of the generator rows) of a linear code.
fn code_to_basis(group: &Group, field: &Field, code: &LinearCode) -> Vec<AlgebraElement> {
    code.generator()
        .row_vecs()
        .into_iter()
        .map(|row| AlgebraElement::new(group, field, row).expect("row length n"))
        .collect()
}

/// The ideal supported on the component set T (1-based indices).
pub fn ideal_from_t(decomp: &Arc<Decomposition>, t_set: &BTreeSet<usize>) -> Result<GroupCode> {
    for &k in t_set {
        decomp.check_component_index(k)?;
    }
    let group = decomp.group().clone();
    let field = decomp.base_field().clone();
    let splitting = decomp.splitting_field().clone();
    let t = decomp.num_components();
    let mut basis = Vec::new();
    for &k in t_set {
        for b in decomp.component_subfield_basis(k)? {
            let components = (0..t)
                .map(|i| if i + 1 == k { b.clone() } else { splitting.zero() })
                .collect();
            basis.push(decomp.phi_inverse(&Spectrum { components })?);
        }
    }
    let code = basis_to_code(&field, group.order(), &basis)?;
    let expected: usize = t_set.iter().map(|&k| decomp.class_size(k)).sum();
    assert_eq!(code.dimension(), expected, "component dimensions must add up");
    let basis = code_to_basis(&group, &field, &code);
    Ok(GroupCode {
        group,
        field,
        decomp: Some(decomp.clone()),
        support: Some(t_set.clone()),
        basis,
        code,
        ann: OnceLock::new(),
    })
}

/// The smallest ideal containing the given generators (closure under the
/// group action). When a decomposition is supplied, the spectral support is
/// recovered from the generators' spectra.
pub fn ideal_from_generators(
    group: &Group,
    field: &Field,
    decomp: Option<Arc<Decomposition>>,
    generators: &[AlgebraElement],
) -> Result<GroupCode> {
    let n = group.order();
    let mut closure = Vec::new();
    for gen in generators {
        if gen.group() != group || gen.field() != field {
            return Err(Error::ContextMismatch);
        }
        for g in 0..n {
            let shifted = AlgebraElement::basis(group, field, g).mul(gen)?;
            closure.push(shifted);
        }
    }
    let code = basis_to_code(field, n, &closure)?;
    let basis = code_to_basis(group, field, &code);
    let support = match &decomp {
        Some(d) => {
            let mut t_set = BTreeSet::new();
            for b in &basis {
                let s = d.phi_forward(b)?;
                for (k, c) in s.components.iter().enumerate() {
                    if !c.is_zero() {
                        t_set.insert(k + 1);
                    }
                }
            }
            let expected: usize = t_set.iter().map(|&k| d.class_size(k)).sum();
            assert_eq!(code.dimension(), expected, "ideal dimension vs support");
            Some(t_set)
        }
        None => None,
    };
    Ok(GroupCode {
        group: group.clone(),
        field: field.clone(),
        decomp,
        support,
        basis,
        code,
        ann: OnceLock::new(),
    })
}

/// The whole algebra F_q[G] as an ideal.
pub fn full_algebra(decomp: &Arc<Decomposition>) -> Result<GroupCode> {
    let all: BTreeSet<usize> = (1..=decomp.num_components()).collect();
    ideal_from_t(decomp, &all)
}

impl GroupCode {
    pub fn group(&self) -> &Group {
        &self.group
    }
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn decomposition(&self) -> Option<&Arc<Decomposition>> {
        self.decomp.as_ref()
    }
    pub fn support(&self) -> Option<&BTreeSet<usize>> {
        self.support.as_ref()
    }
    pub fn basis(&self) -> &[AlgebraElement] {
        &self.basis
    }
    pub fn linear_code(&self) -> &LinearCode {
        &self.code
    }
    pub fn dimension(&self) -> usize {
        self.code.dimension()
    }
    pub fn length(&self) -> usize {
        self.group.order()
    }

    pub fn contains(&self, a: &AlgebraElement) -> Result<bool> {
        if a.group() != &self.group || a.field() != &self.field {
            return Err(Error::ContextMismatch);
        }
        self.code.contains(a.coeffs())
    }

    /// dim(M)/n as an exact rational.
    pub fn code_rate(&self) -> Ratio<u64> {
        Ratio::new(self.dimension() as u64, self.length() as u64)
    }

    /// Ann(M) = { r | r m = 0 for all m in M }, computed by the kernel method
    /// and cross-checked against the complement-of-T construction.
    pub fn annihilator(&self) -> &Arc<GroupCode> {
        self.ann.get_or_init(|| {
            let kernel_code = self.annihilator_by_kernel();
            match (&self.decomp, &self.support) {
                (Some(d), Some(t_set)) => {
                    let complement: BTreeSet<usize> = (1..=d.num_components())
                        .filter(|k| !t_set.contains(k))
                        .collect();
                    let spectral = ideal_from_t(d, &complement)
                        .expect("complement support indices are valid");
                    assert!(
                        spectral.code.equals(&kernel_code),
                        "annihilator cross-check failed: kernel method and \
                         complement-of-T disagree"
                    );
                    Arc::new(spectral)
                }
                _ => {
                    let basis = code_to_basis(&self.group, &self.field, &kernel_code);
                    Arc::new(GroupCode {
                        group: self.group.clone(),
                        field: self.field.clone(),
                        decomp: self.decomp.clone(),
                        support: None,
                        basis,
                        code: kernel_code,
                        ann: OnceLock::new(),
                    })
                }
            }
        })
    }

    fn annihilator_by_kernel(&self) -> LinearCode {
        let n = self.group.order();
        // constraints: matrix_rep(m_i) * tau(r) = 0 for every basis element
        let mut rows = Vec::with_capacity(self.basis.len() * n);
        for m in &self.basis {
            rows.extend(m.matrix_rep().row_vecs());
        }
        let mut constraint = Mat::zero(&self.field, rows.len(), n);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                constraint.set(i, j, x.clone());
            }
        }
        let kernel = constraint.kernel();
        code_from_basis(&self.field, n, &kernel).expect("kernel vectors have length n")
    }

    /// Achievable degree: the covering radius of tau_nat(Ann(M)).
    pub fn degree_bound(&self) -> Result<usize> {
        self.annihilator().code.covering_radius()
    }

    /// Replaces k by the coset representative k - tau_inv(nearest annihilator
    /// codeword), whose weight is at most degree_bound. The action of the
    /// result on M is unchanged.
    pub fn degree_reduce(&self, k: &AlgebraElement) -> Result<AlgebraElement> {
        if k.group() != &self.group || k.field() != &self.field {
            return Err(Error::ContextMismatch);
        }
        let ann = self.annihilator();
        let (nearest, _) = ann.code.nearest_codeword(k.coeffs())?;
        let a = AlgebraElement::new(&self.group, &self.field, nearest)?;
        k.sub(&a)
    }

    /// True iff every element of M has even weight, i.e. the all-ones vector
    /// lies in Ann(M). Defined over GF(2) only.
    pub fn is_even_weight_ideal(&self) -> Result<bool> {
        if self.field.order() != 2 {
            return Err(Error::Precondition(
                "even-weight test requires q = 2".to_string(),
            ));
        }
        let ones = AlgebraElement::all_ones(&self.group, &self.field);
        self.annihilator().contains(&ones)
    }

    /// True when self is contained in other as a set.
    pub fn subideal_of(&self, other: &GroupCode) -> bool {
        self.code.subcode_of(&other.code)
    }
}
