//! Property tests for the algebraic invariants of the diagram calculus and
//! the scalar ring.

use proptest::prelude::*;

use diagram_algebra::algebra::Element;
use diagram_algebra::diagram::{compose, parse_diagram};
use diagram_algebra::enumerate::enumerate;
use diagram_algebra::poly::{IntPoly, Rational};
use diagram_algebra::{Diagram, Family};

/// A random diagram of a random family, drawn by indexing the enumerated
/// basis at small size.
fn any_family_diagram(kmax: usize) -> impl Strategy<Value = (Family, Diagram)> {
    (0usize..Family::ALL.len(), 0usize..=kmax, any::<prop::sample::Index>()).prop_map(
        move |(fi, k, which)| {
            let family = Family::ALL[fi];
            let all = enumerate(family, k);
            let d = all[which.index(all.len())].clone();
            (family, d)
        },
    )
}

fn diagram_pair(kmax: usize) -> impl Strategy<Value = (Family, Diagram, Diagram)> {
    (
        0usize..Family::ALL.len(),
        0usize..=kmax,
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
    )
        .prop_map(move |(fi, k, a, b)| {
            let family = Family::ALL[fi];
            let all = enumerate(family, k);
            (family, all[a.index(all.len())].clone(), all[b.index(all.len())].clone())
        })
}

fn sparse_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((0u32..6, -9i64..=9), 0..5).prop_map(|terms| {
        terms.into_iter().fold(IntPoly::zero(), |acc, (e, c)| {
            &acc + &IntPoly::monomial(e, c.into())
        })
    })
}

fn rational_point() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

proptest! {
    #[test]
    fn transpose_is_an_involution((_, d) in any_family_diagram(4)) {
        prop_assert_eq!(d.transpose().transpose(), d.clone());
        prop_assert_eq!(d.transpose().rank(), d.rank());
    }

    #[test]
    fn transpose_reverses_products((_, a, b) in diagram_pair(3)) {
        let (ab, kappa) = compose(&a, &b).unwrap();
        let (rev, kappa_rev) = compose(&b.transpose(), &a.transpose()).unwrap();
        prop_assert_eq!(ab.transpose(), rev);
        prop_assert_eq!(kappa, kappa_rev);
    }

    #[test]
    fn rank_never_grows((_, a, b) in diagram_pair(3)) {
        let (ab, _) = compose(&a, &b).unwrap();
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn conjugation_preserves_symmetry((_, d, t) in diagram_pair(3)) {
        prop_assume!(t.is_symmetric());
        let (dt, _) = compose(&d, &t).unwrap();
        let (dtd, _) = compose(&dt, &d.transpose()).unwrap();
        prop_assert!(dtd.is_symmetric());
    }

    #[test]
    fn composition_closes_in_family((fam, a, b) in diagram_pair(3)) {
        let (ab, _) = compose(&a, &b).unwrap();
        prop_assert!(fam.contains(&ab));
        prop_assert!(fam.contains(&a.transpose()));
    }

    #[test]
    fn text_round_trip((_, d) in any_family_diagram(5)) {
        let text = d.to_string();
        prop_assert_eq!(parse_diagram(&text, d.k()).unwrap(), d);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in sparse_poly(), b in sparse_poly(), x0 in rational_point()) {
        let sum = (&a + &b).evaluate(&x0);
        prop_assert_eq!(sum, a.evaluate(&x0) + b.evaluate(&x0));
        let prod = (&a * &b).evaluate(&x0);
        prop_assert_eq!(prod, a.evaluate(&x0) * b.evaluate(&x0));
        let diff = (&a - &b).evaluate(&x0);
        prop_assert_eq!(diff, a.evaluate(&x0) - b.evaluate(&x0));
    }

    #[test]
    fn algebra_multiplication_is_bilinear((fam, a, b) in diagram_pair(2), (_, c) in any_family_diagram(2)) {
        prop_assume!(a.k() == c.k());
        prop_assume!(fam.contains(&c));
        let ea = Element::from_diagram(fam, a).unwrap();
        let eb = Element::from_diagram(fam, b).unwrap();
        let ec = Element::from_diagram(fam, c).unwrap();
        let lhs = ea.add(&eb).unwrap().multiply(&ec).unwrap();
        let rhs = ea.multiply(&ec).unwrap().add(&eb.multiply(&ec).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
