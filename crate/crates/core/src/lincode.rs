//! Linear codes over GF(q): bases, membership, exact covering radius, and
//! coset-leader (nearest-codeword) decoding.
//!
//! The coset-leader table is built by growing Hamming spheres in weight
//! layers over syndrome space (cost ~ q^{n-k} * n instead of q^n); within the
//! minimum weight the lexicographically least error vector is kept, so
//! decoding is deterministic.

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::linalg::Mat;
use std::sync::OnceLock;

const SYNDROME_GUARD: u64 = 1 << 24;

/// A linear [n, k] code over GF(q).
#[derive(Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    /// k x n generator matrix in reduced row-echelon form.
    gen: Mat,
    /// (n - k) x n parity-check matrix.
    h: Mat,
    /// syndrome index -> sparse coset leader (position, value index), by need.
    leaders: OnceLock<LeaderTable>,
}

#[derive(Debug)]
struct LeaderTable {
    table: Vec<Option<Vec<(u32, u32)>>>,
    covering_radius: usize,
}

/// Code spanned by the given length-n vectors.
pub fn code_from_basis(field: &Field, n: usize, vectors: &[Vec<FieldElement>]) -> Result<LinearCode> {
    for v in vectors {
        if v.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: v.len(),
            });
        }
        if v.iter().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch);
        }
    }
    let mut m = Mat::zero(field, vectors.len(), n);
    for (i, v) in vectors.iter().enumerate() {
        for (j, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    let pivots = m.rref();
    let k = pivots.len();
    let mut gen = Mat::zero(field, k, n);
    for i in 0..k {
        for j in 0..n {
            gen.set(i, j, m.get(i, j).clone());
        }
    }
    // rows of H = basis of the right kernel of G
    let ker = gen.kernel();
    let mut h = Mat::zero(field, ker.len(), n);
    for (i, v) in ker.iter().enumerate() {
        for (j, x) in v.iter().enumerate() {
            h.set(i, j, x.clone());
        }
    }
    debug_assert_eq!(h.rows(), n - k);
    Ok(LinearCode {
        field: field.clone(),
        n,
        k,
        gen,
        h,
        leaders: OnceLock::new(),
    })
}

impl LinearCode {
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn length(&self) -> usize {
        self.n
    }
    pub fn dimension(&self) -> usize {
        self.k
    }
    pub fn generator(&self) -> &Mat {
        &self.gen
    }
    pub fn parity_check(&self) -> &Mat {
        &self.h
    }

    fn check_len(&self, v: &[FieldElement]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.h.mul_vec(v).iter().all(|x| x.is_zero()))
    }

    /// Iterates all q^k codewords (small-k use only, e.g. test oracles).
    pub fn codewords(&self) -> impl Iterator<Item = Vec<FieldElement>> + '_ {
        let q = self.field.order();
        let total = q.pow(self.k as u32);
        (0..total).map(move |mut idx| {
            let mut v = vec![self.field.zero(); self.n];
            for r in 0..self.k {
                let c = self.field.element_from_index(idx % q);
                idx /= q;
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    v[j] = v[j].add(&c.mul(self.gen.get(r, j)));
                }
            }
            v
        })
    }

    fn syndrome_index(&self, synd: &[FieldElement]) -> usize {
        let q = self.field.order();
        synd.iter()
            .rev()
            .fold(0u64, |acc, x| acc * q + x.index()) as usize
    }

    fn num_syndromes(&self) -> Result<u64> {
        let q = self.field.order();
        let r = (self.n - self.k) as u32;
        let total = q
            .checked_pow(r)
            .filter(|&t| t <= SYNDROME_GUARD)
            .ok_or_else(|| {
                Error::GuardExceeded(format!("coset table of {q}^{r} syndromes"))
            })?;
        Ok(total)
    }

    fn leaders(&self) -> Result<&LeaderTable> {
        if let Some(t) = self.leaders.get() {
            return Ok(t);
        }
        let total = self.num_syndromes()? as usize;
        let mut table: Vec<Option<Vec<(u32, u32)>>> = vec![None; total];
        let q = self.field.order();
        let nonzero: Vec<FieldElement> = (1..q).map(|i| self.field.element_from_index(i)).collect();
        // syndrome columns: h_col[j][i] = H[i][j]
        let cols: Vec<Vec<FieldElement>> = (0..self.n)
            .map(|j| (0..self.h.rows()).map(|i| self.h.get(i, j).clone()).collect())
            .collect();
        let mut filled = 1usize;
        table[0] = Some(Vec::new()); // zero coset
        let mut covering_radius = 0usize;
        let mut w = 1usize;
        while filled < total && w <= self.n {
            // all supports of size w, all nonzero value assignments
            let mut support: Vec<usize> = (0..w).collect();
            loop {
                let mut vals = vec![0usize; w]; // indices into `nonzero`
                loop {
                    // syndrome of this error pattern
                    let mut synd = vec![self.field.zero(); self.h.rows()];
                    for (pos, &vi) in support.iter().zip(&vals) {
                        for (i, s) in synd.iter_mut().enumerate() {
                            *s = s.add(&nonzero[vi].mul(&cols[*pos][i]));
                        }
                    }
                    let si = self.syndrome_index(&synd);
                    let cand: Vec<(u32, u32)> = support
                        .iter()
                        .zip(&vals)
                        .map(|(&p, &vi)| (p as u32, (vi + 1) as u32))
                        .collect();
                    match &table[si] {
                        None => {
                            table[si] = Some(cand);
                            filled += 1;
                            covering_radius = w;
                        }
                        Some(prev) if prev.len() == w => {
                            // same weight: keep the lexicographically least
                            // full error vector
                            if self.sparse_lex_less(&cand, prev) {
                                table[si] = Some(cand);
                            }
                        }
                        Some(_) => {}
                    }
                    // odometer over value assignments
                    let mut i = 0;
                    loop {
                        if i == w {
                            break;
                        }
                        vals[i] += 1;
                        if vals[i] < nonzero.len() {
                            break;
                        }
                        vals[i] = 0;
                        i += 1;
                    }
                    if i == w {
                        break;
                    }
                }
                // next combination in lexicographic position order
                let mut i = w;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if support[i] != i + self.n - w {
                        support[i] += 1;
                        for j in i + 1..w {
                            support[j] = support[j - 1] + 1;
                        }
                        i = usize::MAX;
                        break;
                    }
                }
                if i != usize::MAX {
                    break;
                }
            }
            w += 1;
        }
        debug_assert_eq!(filled, total, "every syndrome must get a leader");
        let _ = self.leaders.set(LeaderTable {
            table,
            covering_radius,
        });
        Ok(self.leaders.get().unwrap())
    }

    /// True if the full error vector of a is lexicographically less than b's
    /// (both sparse with ascending positions, values as element indices).
    fn sparse_lex_less(&self, a: &[(u32, u32)], b: &[(u32, u32)]) -> bool {
        let (mut i, mut j) = (0usize, 0usize);
        loop {
            let ap = a.get(i).map_or(u32::MAX, |t| t.0);
            let bp = b.get(j).map_or(u32::MAX, |t| t.0);
            if ap == u32::MAX && bp == u32::MAX {
                return false; // equal
            }
            if ap < bp {
                return false; // a nonzero where b is zero: a > b
            }
            if bp < ap {
                return true; // b nonzero where a is zero: a < b
            }
            if a[i].1 != b[j].1 {
                return a[i].1 < b[j].1;
            }
            i += 1;
            j += 1;
        }
    }

    /// Exact covering radius via the coset-leader table.
    pub fn covering_radius(&self) -> Result<usize> {
        Ok(self.leaders()?.covering_radius)
    }

    /// Nearest codeword to v and its Hamming distance; deterministic
    /// tie-break by lexicographically least error pattern.
    pub fn nearest_codeword(&self, v: &[FieldElement]) -> Result<(Vec<FieldElement>, usize)> {
        self.check_len(v)?;
        let leaders = self.leaders()?;
        let synd = self.h.mul_vec(v);
        let si = self.syndrome_index(&synd);
        let leader = leaders.table[si]
            .as_ref()
            .expect("complete coset-leader table");
        let mut cw = v.to_vec();
        for &(pos, vi) in leader {
            let e = self.field.element_from_index(vi as u64);
            cw[pos as usize] = cw[pos as usize].sub(&e);
        }
        Ok((cw, leader.len()))
    }

    /// True when self is a subcode of other (row-space containment).
    pub fn subcode_of(&self, other: &LinearCode) -> bool {
        if self.n != other.n || self.field != other.field {
            return false;
        }
        self.gen
            .row_vecs()
            .iter()
            .all(|row| other.contains(row).unwrap_or(false))
    }

    /// Row-space equality with another code.
    pub fn equals(&self, other: &LinearCode) -> bool {
        self.gen.row_space_eq(&other.gen)
    }
}
