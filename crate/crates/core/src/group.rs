//! Finite abelian groups as direct products of cyclic factors, their regular
//! permutation representation, and q-conjugacy classes.
//!
//! Elements are enumerated in mixed-radix order with the last factor varying
//! fastest; the identity always has index 0.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct GroupRepr {
    orders: Vec<u64>,
    n: usize,
    /// strides[i] = product of orders of the later factors
    strides: Vec<usize>,
}

/// A finite abelian group Z_{n_1} x ... x Z_{n_r}. The empty product is the
/// trivial group. Cheap to clone; equality compares factor orders.
#[derive(Debug, Clone)]
pub struct Group(Arc<GroupRepr>);

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.orders == other.0.orders
    }
}
impl Eq for Group {}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.orders.is_empty() {
            return write!(f, "C1");
        }
        let parts: Vec<String> = self.0.orders.iter().map(|o| format!("C{o}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// An element of a [`Group`], stored as its exponent tuple.
#[derive(Debug, Clone)]
pub struct GroupElement {
    group: Group,
    exps: Vec<u64>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.exps == other.exps
    }
}
impl Eq for GroupElement {}

/// A bijection on [0, n), used as the regular permutation representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// self after other: (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Some(s) if this is the circular shift i -> (i + s) mod n.
    pub fn as_shift(&self) -> Option<usize> {
        let n = self.len();
        if n == 0 {
            return Some(0);
        }
        let s = self.images[0];
        for (i, &img) in self.images.iter().enumerate() {
            if img != (i + s) % n {
                return None;
            }
        }
        Some(s)
    }
}

/// One q-conjugacy class: the orbit of its representative under g -> g^q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    /// Least member index; the class representative.
    pub rep: usize,
    /// Member indices in orbit order starting from the representative.
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl Group {
    /// Builds Z_{n_1} x ... x Z_{n_r}; every factor order must be >= 2.
    pub fn new(orders: &[u64]) -> Result<Group> {
        let mut n = 1usize;
        for &o in orders {
            if o < 2 {
                return Err(Error::BadGroupOrder(o));
            }
            n = n
                .checked_mul(o as usize)
                .ok_or(Error::BadGroupOrder(o))?;
        }
        if n > 1 << 20 {
            return Err(Error::GuardExceeded(format!("group order {n} too large")));
        }
        let mut strides = vec![1usize; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1] as usize;
        }
        Ok(Group(Arc::new(GroupRepr {
            orders: orders.to_vec(),
            n,
            strides,
        })))
    }

    /// Parses a CLI group spec like "C15", "C3xC3", "C5xC9" (case-insensitive).
    pub fn parse(spec: &str) -> Result<Group> {
        let lowered = spec.to_ascii_lowercase();
        let mut orders = Vec::new();
        for part in lowered.split('x') {
            let part = part.trim();
            let digits = part
                .strip_prefix('c')
                .ok_or_else(|| Error::BadNetwork(format!("bad group spec '{spec}'")))?;
            let o: u64 = digits
                .parse()
                .map_err(|_| Error::BadNetwork(format!("bad group spec '{spec}'")))?;
            orders.push(o);
        }
        if orders == [1] {
            return Group::new(&[]);
        }
        Group::new(&orders)
    }

    pub fn order(&self) -> usize {
        self.0.n
    }
    pub fn factor_orders(&self) -> &[u64] {
        &self.0.orders
    }

    /// lcm of the factor orders (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.0
            .orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            exps: vec![0; self.0.orders.len()],
        }
    }

    pub fn element(&self, exps: &[u64]) -> Result<GroupElement> {
        if exps.len() != self.0.orders.len() {
            return Err(Error::LengthMismatch {
                expected: self.0.orders.len(),
                got: exps.len(),
            });
        }
        let exps = exps
            .iter()
            .zip(&self.0.orders)
            .map(|(&e, &o)| e % o)
            .collect();
        Ok(GroupElement {
            group: self.clone(),
            exps,
        })
    }

    pub fn element_from_index(&self, idx: usize) -> GroupElement {
        assert!(idx < self.0.n, "group element index out of range");
        let mut exps = vec![0u64; self.0.orders.len()];
        let mut rem = idx;
        for (i, stride) in self.0.strides.iter().enumerate() {
            exps[i] = (rem / stride) as u64;
            rem %= stride;
        }
        GroupElement {
            group: self.clone(),
            exps,
        }
    }

    pub fn index_of(&self, exps: &[u64]) -> usize {
        exps.iter()
            .zip(&self.0.strides)
            .zip(&self.0.orders)
            .map(|((&e, &s), &o)| (e % o) as usize * s)
            .sum()
    }

    /// Index arithmetic used by inner loops.
    pub fn mul_indices(&self, a: usize, b: usize) -> usize {
        let r = self.0.orders.len();
        let mut idx = 0usize;
        let mut ra = a;
        let mut rb = b;
        for i in 0..r {
            let s = self.0.strides[i];
            let o = self.0.orders[i] as usize;
            let ea = ra / s;
            let eb = rb / s;
            ra %= s;
            rb %= s;
            idx += ((ea + eb) % o) * s;
        }
        idx
    }

    pub fn inv_index(&self, a: usize) -> usize {
        let r = self.0.orders.len();
        let mut idx = 0usize;
        let mut ra = a;
        for i in 0..r {
            let s = self.0.strides[i];
            let o = self.0.orders[i] as usize;
            let e = ra / s;
            ra %= s;
            idx += ((o - e) % o) * s;
        }
        idx
    }

    pub fn pow_index(&self, a: usize, k: u64) -> usize {
        let r = self.0.orders.len();
        let mut idx = 0usize;
        let mut ra = a;
        for i in 0..r {
            let s = self.0.strides[i];
            let o = self.0.orders[i] as u64;
            let e = (ra / s) as u64;
            ra %= s;
            idx += ((e * (k % o)) % o) as usize * s;
        }
        idx
    }

    /// The permutation h -> g*h of the element enumeration (Cayley action).
    pub fn regular_permutation(&self, g: &GroupElement) -> Permutation {
        assert!(self == &g.group, "element of a different group");
        let gi = self.index_of(&g.exps);
        Permutation {
            images: (0..self.0.n).map(|h| self.mul_indices(gi, h)).collect(),
        }
    }

    /// Partition of the group into orbits of g -> g^q. The identity class
    /// comes first; the rest are ordered by descending size, ties by least
    /// member index (this matches the component numbering used throughout).
    pub fn conjugacy_classes(&self, q: u64) -> Result<Vec<ConjClass>> {
        if num_integer::gcd(self.0.n as u64, q) != 1 {
            return Err(Error::GcdNotOne(self.0.n as u64, q));
        }
        let mut seen = vec![false; self.0.n];
        let mut classes = Vec::new();
        for start in 0..self.0.n {
            if seen[start] {
                continue;
            }
            let mut members = Vec::new();
            let mut cur = start;
            loop {
                seen[cur] = true;
                members.push(cur);
                cur = self.pow_index(cur, q);
                if cur == start {
                    break;
                }
            }
            classes.push(ConjClass {
                rep: start,
                members,
            });
        }
        // identity first, then by descending size, ties by least member index
        classes.sort_by(|a, b| {
            (a.rep != 0)
                .cmp(&(b.rep != 0))
                .then(b.size().cmp(&a.size()))
                .then(a.rep.cmp(&b.rep))
        });
        Ok(classes)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.0.n).map(move |i| self.element_from_index(i))
    }
}

impl GroupElement {
    pub fn group(&self) -> &Group {
        &self.group
    }
    pub fn exps(&self) -> &[u64] {
        &self.exps
    }
    pub fn index(&self) -> usize {
        self.group.index_of(&self.exps)
    }
    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn op(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let idx = self.group.mul_indices(self.index(), other.index());
        Ok(self.group.element_from_index(idx))
    }

    pub fn inv(&self) -> GroupElement {
        self.group
            .element_from_index(self.group.inv_index(self.index()))
    }

    pub fn pow(&self, k: u64) -> GroupElement {
        self.group
            .element_from_index(self.group.pow_index(self.index(), k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::mult_order;

    #[test]
    fn mixed_radix_bijection() {
        let g = Group::new(&[3, 5]).unwrap();
        assert_eq!(g.order(), 15);
        for i in 0..15 {
            assert_eq!(g.element_from_index(i).index(), i);
        }
        // last factor varies fastest
        assert_eq!(g.element_from_index(1).exps(), &[0, 1]);
        assert_eq!(g.element_from_index(5).exps(), &[1, 0]);
    }

    #[test]
    fn parse_specs() {
        assert_eq!(Group::parse("C15").unwrap().factor_orders(), &[15]);
        assert_eq!(Group::parse("c3xC3").unwrap().factor_orders(), &[3, 3]);
        assert_eq!(Group::parse("C5xC9").unwrap().factor_orders(), &[5, 9]);
        assert!(Group::parse("D4").is_err());
        assert!(Group::new(&[1]).is_err());
        assert_eq!(Group::new(&[]).unwrap().order(), 1);
    }

    #[test]
    fn cyclic_ops() {
        let g = Group::new(&[15]).unwrap();
        let y7 = g.element(&[7]).unwrap();
        let y14 = g.element(&[14]).unwrap();
        assert_eq!(y7.op(&y14).unwrap(), g.element(&[6]).unwrap());
        assert!(g.identity().inv().is_identity());
    }

    #[test]
    fn product_ops() {
        let h = Group::new(&[3, 3]).unwrap();
        let xy = h.element(&[1, 1]).unwrap();
        let x2y2 = h.element(&[2, 2]).unwrap();
        assert!(xy.op(&x2y2).unwrap().is_identity());
    }

    #[test]
    fn regular_permutation_is_homomorphism() {
        for orders in [vec![3u64], vec![3, 3], vec![15]] {
            let g = Group::new(&orders).unwrap();
            for a in g.elements() {
                for b in g.elements() {
                    let pa = g.regular_permutation(&a);
                    let pb = g.regular_permutation(&b);
                    let pab = g.regular_permutation(&a.op(&b).unwrap());
                    assert_eq!(pa.compose(&pb), pab);
                }
            }
        }
    }

    #[test]
    fn cyclic_shift_structure() {
        let g = Group::new(&[15]).unwrap();
        let y = g.element(&[1]).unwrap();
        let p = g.regular_permutation(&y);
        assert_eq!(p.as_shift(), Some(1));
        let e = g.regular_permutation(&g.identity());
        assert_eq!(e, Permutation::identity(15));
    }

    #[test]
    fn conjugacy_classes_c15() {
        let g = Group::new(&[15]).unwrap();
        let classes = g.conjugacy_classes(2).unwrap();
        let as_sets: Vec<Vec<usize>> = classes
            .iter()
            .map(|c| {
                let mut m = c.members.clone();
                m.sort();
                m
            })
            .collect();
        assert_eq!(
            as_sets,
            vec![
                vec![0],
                vec![1, 2, 4, 8],
                vec![3, 6, 9, 12],
                vec![7, 11, 13, 14],
                vec![5, 10],
            ]
        );
    }

    #[test]
    fn conjugacy_classes_c3c3() {
        let h = Group::new(&[3, 3]).unwrap();
        let classes = h.conjugacy_classes(2).unwrap();
        assert_eq!(classes.len(), 5);
        assert_eq!(classes[0].members, vec![0]);
        let sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 2]);
        // reps after identity: y (idx 1), x (idx 3), xy (idx 4), xy^2 (idx 5)
        let reps: Vec<usize> = classes.iter().map(|c| c.rep).collect();
        assert_eq!(reps, vec![0, 1, 3, 4, 5]);
    }

    #[test]
    fn conjugacy_classes_c9_sizes() {
        let g = Group::new(&[9]).unwrap();
        let classes = g.conjugacy_classes(2).unwrap();
        let sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 6, 2]);
    }

    #[test]
    fn classes_partition_and_closed() {
        for (orders, q) in [(vec![15u64], 2u64), (vec![3, 3], 2), (vec![5], 3)] {
            let g = Group::new(&orders).unwrap();
            let classes = g.conjugacy_classes(q).unwrap();
            let total: usize = classes.iter().map(|c| c.size()).sum();
            assert_eq!(total, g.order());
            for c in &classes {
                for &m in &c.members {
                    assert!(c.members.contains(&g.pow_index(m, q)));
                }
            }
        }
    }

    #[test]
    fn coprime_class_size_is_mult_order() {
        for n in [7u64, 9, 15, 21] {
            let g = Group::new(&[n]).unwrap();
            let l0 = mult_order(2, n).unwrap();
            let classes = g.conjugacy_classes(2).unwrap();
            for j in 1..n {
                if num_integer::gcd(j, n) == 1 {
                    let cls = classes
                        .iter()
                        .find(|c| c.members.contains(&(j as usize)))
                        .unwrap();
                    assert_eq!(cls.size() as u64, l0);
                }
            }
        }
    }

    #[test]
    fn gcd_guard() {
        let g = Group::new(&[6]).unwrap();
        assert!(g.conjugacy_classes(2).is_err());
    }
}
