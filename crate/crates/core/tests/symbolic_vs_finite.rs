//! On universes of single points a schematic family is just a finite open
//! family, so every symbolic verdict can be recomputed by brute force over
//! the explicit list of opens.

use std::sync::Arc;

use bispace_lab::props;
use bispace_lab::{Atom, AtomUniverse, Bispace, Cardinality, IndexPair, Mask, SchematicFamily, SchematicSpace};
use proptest::prelude::*;

/// `{X, ∅} ∪ {C ∪ P : C ⊆ R}` written out.
fn explicit_opens(n: usize, region: u64, mandatory: u64) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    let mut opens = vec![0, full];
    let mut c = region;
    loop {
        opens.push(c | mandatory);
        if c == 0 {
            break;
        }
        c = (c - 1) & region;
    }
    opens.sort_unstable();
    opens.dedup();
    opens
}

fn closure(opens: &[u64], full: u64, s: u64) -> u64 {
    opens
        .iter()
        .filter(|&&u| u & s == 0)
        .fold(full, |acc, &u| acc & !u & full)
}

fn interior(opens: &[u64], s: u64) -> u64 {
    opens.iter().filter(|&&u| u & !s == 0).fold(0, |acc, &u| acc | u)
}

fn preopen(opens_i: &[u64], opens_j: &[u64], full: u64, a: u64) -> bool {
    let cl = closure(opens_j, full, a);
    opens_i.iter().any(|&u| a & !u == 0 && u & !cl == 0)
}

fn weakly_preopen(opens_i: &[u64], opens_j: &[u64], full: u64, a: u64) -> bool {
    a & !interior(opens_i, closure(opens_j, full, a)) == 0
}

fn universe(n: usize) -> Arc<AtomUniverse> {
    let atoms = (0..n)
        .map(|k| Atom::new(&format!("p{k}"), Cardinality::Singleton, ""))
        .collect();
    Arc::new(AtomUniverse::new(atoms).unwrap())
}

fn space(u: &Arc<AtomUniverse>, region: u64, mandatory: u64) -> SchematicSpace {
    let family = SchematicFamily::new(u, Mask::from_bits(region), Mask::from_bits(mandatory)).unwrap();
    SchematicSpace::new(Arc::clone(u), family)
}

/// A point count and two (region, mandatory) pairs with disjoint parts.
fn structures() -> impl Strategy<Value = (usize, (u64, u64), (u64, u64))> {
    (1usize..=5).prop_flat_map(|n| {
        let full = (1u64 << n) - 1;
        let family = (0..=full, 0..=full).prop_map(move |(r, p)| (r, p & !r));
        (Just(n), family.clone(), family)
    })
}

fn compare(n: usize, first: (u64, u64), second: (u64, u64)) -> Result<(), TestCaseError> {
    let full = (1u64 << n) - 1;
    let u = universe(n);
    let spaces = [space(&u, first.0, first.1), space(&u, second.0, second.1)];
    let opens = [
        explicit_opens(n, first.0, first.1),
        explicit_opens(n, second.0, second.1),
    ];
    let bi = Bispace::new(spaces[0].clone(), spaces[1].clone()).unwrap();
    for bits in 0..=full {
        let s = Mask::from_bits(bits);
        for k in 0..2 {
            prop_assert_eq!(
                spaces[k].is_open(s),
                opens[k].contains(&bits),
                "open {} in space {}",
                s,
                k
            );
            prop_assert_eq!(
                spaces[k].closure(s).bits(),
                closure(&opens[k], full, bits),
                "closure {}",
                s
            );
            prop_assert_eq!(
                spaces[k].interior(s).bits(),
                interior(&opens[k], bits),
                "interior {}",
                s
            );
        }
        for (pair, (i, j)) in [(IndexPair::OneTwo, (0, 1)), (IndexPair::TwoOne, (1, 0))] {
            prop_assert_eq!(
                props::is_ij_preopen(&bi, pair, s),
                preopen(&opens[i], &opens[j], full, bits),
                "preopen {} {:?}",
                s,
                pair
            );
            prop_assert_eq!(
                props::is_ij_weakly_preopen(&bi, pair, s),
                weakly_preopen(&opens[i], &opens[j], full, bits),
                "weakly preopen {} {:?}",
                s,
                pair
            );
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symbolic_verdicts_match_brute_force((n, first, second) in structures()) {
        compare(n, first, second)?;
    }

    #[test]
    fn materialized_family_is_the_explicit_one((n, first, _) in structures()) {
        let u = universe(n);
        let finite = space(&u, first.0, first.1).materialize().unwrap();
        let bits: Vec<u64> = {
            let mut b: Vec<u64> = finite.opens().iter().map(|o| o.bits()).collect();
            b.sort_unstable();
            b
        };
        prop_assert_eq!(bits, explicit_opens(n, first.0, first.1));
    }
}
