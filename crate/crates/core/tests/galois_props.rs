use hitbox_core::arith::{is_prime, int, PrimeModulus};
use hitbox_core::factor::{cycle_type_mod_p, is_irreducible};
use hitbox_core::galois::{identify, is_square, resolvent_cubic, TransitiveTables, DEFAULT_PRIME_BUDGET};
use hitbox_core::UniPoly;
use proptest::prelude::*;

/// Monic integer polynomials of degree 3 to 6.
fn monic_poly() -> impl Strategy<Value = UniPoly> {
    (3usize..=6).prop_flat_map(|n| {
        prop::collection::vec(-6i64..=6, n).prop_map(|mut c| {
            c.push(1);
            UniPoly::from_ints(&c)
        })
    })
}

fn irreducible_poly() -> impl Strategy<Value = UniPoly> {
    monic_poly().prop_filter("irreducible", |f| is_irreducible(f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// Every Frobenius cycle type at an unramified prime lies in each
    /// reported candidate group.
    #[test]
    fn frobenius_types_lie_in_candidates(f in irreducible_poly()) {
        let tables = TransitiveTables::load().unwrap();
        let id = identify(&f, &tables, DEFAULT_PRIME_BUDGET).unwrap();
        prop_assert!(id.transitive);
        prop_assert!(!id.candidates.is_empty());
        for p in (3u64..400).filter(|&p| is_prime(p)) {
            let Some(ct) = cycle_type_mod_p(&f, PrimeModulus::new(p).unwrap()) else { continue };
            for c in &id.candidates {
                let entry = tables.by_label(&c.label).unwrap();
                prop_assert!(entry.cycle_types.contains(&ct), "{} at p = {} for {}", c.label, p, f);
            }
        }
    }

    #[test]
    fn square_discriminant_iff_alternating(f in irreducible_poly()) {
        let tables = TransitiveTables::load().unwrap();
        let id = identify(&f, &tables, DEFAULT_PRIME_BUDGET).unwrap();
        let square = is_square(&f.discriminant().unwrap());
        prop_assert_eq!(id.evidence.disc_square, square);
        for c in &id.candidates {
            prop_assert_eq!(tables.by_label(&c.label).unwrap().in_alternating, square);
        }
    }

    #[test]
    fn identification_is_translation_invariant(f in irreducible_poly(), c in -5i64..=5) {
        let tables = TransitiveTables::load().unwrap();
        let g = f.compose(&UniPoly::from_ints(&[c, 1]));
        let a = identify(&f, &tables, DEFAULT_PRIME_BUDGET).unwrap();
        let b = identify(&g, &tables, DEFAULT_PRIME_BUDGET).unwrap();
        if a.is_definitive() && b.is_definitive() {
            prop_assert_eq!(a.label(), b.label());
        }
        prop_assert_eq!(a.order.is_some() && b.order.is_some() && a.order != b.order, false);
    }

    #[test]
    fn resolvent_cubic_shares_the_discriminant(
        c in prop::collection::vec(-9i64..=9, 4),
        lead in prop_oneof![Just(1i64), Just(2), Just(3), Just(-5)],
    ) {
        let f = UniPoly::from_ints(&[c[0], c[1], c[2], c[3], lead]);
        let r = resolvent_cubic(&f).unwrap();
        prop_assert_eq!(r.discriminant().unwrap(), f.monic().discriminant().unwrap());
        prop_assert_eq!(r.lc().unwrap(), &int(1));
    }
}
