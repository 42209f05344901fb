//! Property-based checks of the algebraic laws the library relies on.

use permadd_core::algebra::{AlgebraElement, EdgeVector};
use permadd_core::gf::Field;
use permadd_core::group::Group;
use permadd_core::spectral::decompose;
use proptest::prelude::*;

fn gf16_element(f: &Field, idx: u64) -> permadd_core::FieldElement {
    f.element_from_index(idx % f.order())
}

proptest! {
    #[test]
    fn field_ring_laws(a in 0u64..16, b in 0u64..16, c in 0u64..16) {
        let f = Field::new(2, 4).unwrap();
        let (a, b, c) = (gf16_element(&f, a), gf16_element(&f, b), gf16_element(&f, c));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn ternary_field_inverses(a in 1u64..27) {
        let f = Field::new(3, 3).unwrap();
        let a = f.element_from_index(a);
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        prop_assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn algebra_convolution_laws(
        a in prop::collection::vec(0u64..2, 15),
        b in prop::collection::vec(0u64..2, 15),
        c in prop::collection::vec(0u64..2, 15),
    ) {
        let g = Group::new(&[15]).unwrap();
        let f = Field::new(2, 1).unwrap();
        let elem = |v: &[u64]| {
            let coeffs = v.iter().map(|&x| f.element_from_index(x)).collect();
            AlgebraElement::new(&g, &f, coeffs).unwrap()
        };
        let (a, b, c) = (elem(&a), elem(&b), elem(&c));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap()); // abelian group
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn spectral_transform_is_ring_homomorphism(
        a in prop::collection::vec(0u64..2, 9),
        b in prop::collection::vec(0u64..2, 9),
    ) {
        let g = Group::new(&[3, 3]).unwrap();
        let d = decompose(&g, 2).unwrap();
        let f = d.base_field().clone();
        let elem = |v: &[u64]| {
            let coeffs = v.iter().map(|&x| f.element_from_index(x)).collect();
            AlgebraElement::new(&g, &f, coeffs).unwrap()
        };
        let (a, b) = (elem(&a), elem(&b));
        let sa = d.phi_forward(&a).unwrap();
        let sb = d.phi_forward(&b).unwrap();
        let sum = d.phi_forward(&a.add(&b).unwrap()).unwrap();
        let prod = d.phi_forward(&a.mul(&b).unwrap()).unwrap();
        for k in 0..d.num_components() {
            prop_assert_eq!(&sum.components[k], &sa.components[k].add(&sb.components[k]));
            prop_assert_eq!(&prod.components[k], &sa.components[k].mul(&sb.components[k]));
        }
        // and Phi^{-1} inverts
        prop_assert_eq!(d.phi_inverse(&sa).unwrap(), a);
    }

    #[test]
    fn apply_matches_matrix_representation(
        a in prop::collection::vec(0u64..2, 21),
        v in prop::collection::vec(0u64..2, 21),
    ) {
        let g = Group::new(&[21]).unwrap();
        let f = Field::new(2, 1).unwrap();
        let coeffs: Vec<_> = a.iter().map(|&x| f.element_from_index(x)).collect();
        let a = AlgebraElement::new(&g, &f, coeffs).unwrap();
        let elems: Vec<_> = v.iter().map(|&x| f.element_from_index(x)).collect();
        let fast = a.apply(&EdgeVector::from_elements(&f, &elems)).unwrap();
        prop_assert_eq!(fast.to_elements(), a.matrix_rep().mul_vec(&elems));
    }

    #[test]
    fn edge_vector_hex_round_trip(v in prop::collection::vec(0u64..2, 1..64)) {
        let f = Field::new(2, 1).unwrap();
        let elems: Vec<_> = v.iter().map(|&x| f.element_from_index(x)).collect();
        let ev = EdgeVector::from_elements(&f, &elems);
        let back = EdgeVector::from_hex(&f, ev.len(), &ev.to_hex()).unwrap();
        prop_assert_eq!(ev, back);
    }

    #[test]
    fn nearest_codeword_is_within_covering_radius(v in prop::collection::vec(0u64..2, 15)) {
        let d = decompose(&Group::new(&[15]).unwrap(), 2).unwrap();
        let t = [2usize, 3].into_iter().collect();
        let m = permadd_core::ideal::ideal_from_t(&d, &t).unwrap();
        let code = m.annihilator().linear_code();
        let f = Field::new(2, 1).unwrap();
        let v: Vec<_> = v.iter().map(|&x| f.element_from_index(x)).collect();
        let (cw, dist) = code.nearest_codeword(&v).unwrap();
        prop_assert!(code.contains(&cw).unwrap());
        prop_assert!(dist <= code.covering_radius().unwrap());
        let actual: usize = cw.iter().zip(&v).filter(|(a, b)| a != b).count();
        prop_assert_eq!(actual, dist);
    }
}
