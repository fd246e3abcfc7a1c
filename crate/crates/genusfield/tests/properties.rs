//! Property tests for the algebraic invariants that exhaustive examples do
//! not already pin down.

use proptest::prelude::*;

use genusfield::extension::KummerLattice;
use genusfield::gf::make_field;
use genusfield::polyring::{
    self, factor_monic_seeded, is_irreducible, parse_poly, render_poly, Poly,
};

fn poly_from_digits(field: &genusfield::FieldDesc, digits: &[u64]) -> Poly {
    let coeffs = digits
        .iter()
        .map(|&d| {
            field
                .elements()
                .nth((d % field.q()) as usize)
                .unwrap()
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

proptest! {
    /// parse . render is the identity on canonical forms, over a prime
    /// field and an extension field.
    #[test]
    fn render_parse_roundtrip(digits in prop::collection::vec(0u64..64, 0..8)) {
        for field in [make_field(7, 1, None).unwrap(), make_field(3, 2, None).unwrap()] {
            let poly = poly_from_digits(&field, &digits);
            let text = render_poly(&field, &poly);
            prop_assert_eq!(parse_poly(&field, &text).unwrap(), poly);
        }
    }

    /// Complete factorization: the product of the factors re-expands to the
    /// input, every factor is irreducible by the independent Ben-Or check,
    /// and the factor sequence does not depend on the seed.
    #[test]
    fn factorization_is_complete_and_deterministic(
        digits in prop::collection::vec(0u64..64, 1..7),
        seed in 0u64..1000,
    ) {
        let field = make_field(5, 1, None).unwrap();
        let mut coeffs: Vec<_> = digits
            .iter()
            .map(|&d| field.from_int(d))
            .collect();
        coeffs.push(field.one()); // monic, degree = len(digits)
        let poly = Poly::from_coeffs(coeffs);
        let fact = factor_monic_seeded(&field, &poly, seed).unwrap();
        prop_assert_eq!(fact.expand(&field), poly.clone());
        for (g, e) in &fact.factors {
            prop_assert!(*e >= 1);
            prop_assert!(g.is_monic(&field));
            prop_assert!(is_irreducible(&field, g));
        }
        let again = factor_monic_seeded(&field, &poly, seed.wrapping_add(17)).unwrap();
        prop_assert_eq!(fact, again);
    }

    /// power_class is a homomorphism onto Z/g splitting the l-th powers.
    #[test]
    fn power_class_homomorphism(a in 1u64..13, b in 1u64..13) {
        let field = make_field(13, 1, None).unwrap();
        for l in [2u64, 3] {
            let x = field.from_int(a);
            let y = field.from_int(b);
            let lhs = field.power_class(&field.mul(&x, &y), l);
            let rhs = (field.power_class(&x, l) + field.power_class(&y, l)) % l;
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(field.power_class(&x, l) == 0, field.is_lth_power(&x, l));
        }
    }

    /// Lattice algebra: join is commutative and monotone, membership of
    /// every generating radical holds, and l^rank is the field degree.
    #[test]
    fn lattice_join_laws(
        d1 in prop::collection::vec(0u64..7, 1..4),
        d2 in prop::collection::vec(0u64..7, 1..4),
        g1 in 1u64..7,
        g2 in 1u64..7,
    ) {
        let field = make_field(7, 1, None).unwrap();
        let mut p1 = poly_from_digits(&field, &d1);
        let mut p2 = poly_from_digits(&field, &d2);
        if p1.is_zero() { p1 = Poly::var(&field); }
        if p2.is_zero() { p2 = Poly::var(&field); }
        let a = KummerLattice::span(&field, 3, &[(field.from_int(g1), p1.clone())]).unwrap();
        let b = KummerLattice::span(&field, 3, &[(field.from_int(g2), p2.clone())]).unwrap();
        let ab = a.join(&b).unwrap();
        let ba = b.join(&a).unwrap();
        prop_assert_eq!(&ab, &ba);
        prop_assert!(ab.contains(&a) && ab.contains(&b));
        prop_assert!(ab.member(&field.from_int(g1), &p1).unwrap());
        prop_assert!(ab.rank() <= a.rank() + b.rank());
        let mut deg = 1u64;
        for _ in 0..ab.rank() { deg *= 3; }
        prop_assert_eq!(ab.field_degree(), deg);
    }
}

/// Squarefree products over distinct supports stay independent: the join of
/// lattices over disjoint prime sets has full rank. Deterministic companion
/// to the proptest laws above.
#[test]
fn disjoint_support_join_is_direct() {
    let field = make_field(7, 1, None).unwrap();
    let polys = ["T", "T+1", "T+2", "T+3"];
    let mut acc = KummerLattice::empty(&field, 3);
    for (i, s) in polys.iter().enumerate() {
        let lat = KummerLattice::span(
            &field,
            3,
            &[(field.one(), parse_poly(&field, s).unwrap())],
        )
        .unwrap();
        acc = acc.join(&lat).unwrap();
        assert_eq!(acc.rank(), i + 1);
    }
    assert_eq!(
        polyring::render_poly(&field, &acc.row_poly(0)),
        "T"
    );
}
