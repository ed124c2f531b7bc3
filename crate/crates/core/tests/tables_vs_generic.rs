//! The sweep tables must give the same map verdicts as the generic
//! predicates they cache.

use bispace_lab::enumerate_spaces;
use bispace_lab::harness::map_suites::{generic_verdicts, table_verdicts};
use bispace_lab::harness::tables::{bispaces, BispaceTable, MapTable};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tables(n: usize) -> Vec<BispaceTable> {
    bispaces(&enumerate_spaces(n).unwrap())
        .into_iter()
        .map(BispaceTable::new)
        .collect()
}

#[test]
fn every_triple_up_to_two_points() {
    for ns in 1..=2 {
        let xs = tables(ns);
        for nt in 1..=2 {
            let ys = tables(nt);
            for x in &xs {
                for y in &ys {
                    for f in MapTable::all(ns, nt) {
                        assert_eq!(
                            table_verdicts(x, y, &f),
                            generic_verdicts(&x.bispace, &y.bispace, &f),
                            "X: {} Y: {} {}",
                            x.describe(),
                            y.describe(),
                            f.describe()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn sampled_triples_on_three_points() {
    let xs = tables(3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let x = &xs[rng.gen_range(0..xs.len())];
        let y = &xs[rng.gen_range(0..xs.len())];
        let f = MapTable::new(3, 3, (0..3).map(|_| rng.gen_range(0..3)).collect());
        assert_eq!(
            table_verdicts(x, y, &f),
            generic_verdicts(&x.bispace, &y.bispace, &f),
            "X: {} Y: {} {}",
            x.describe(),
            y.describe(),
            f.describe()
        );
    }
}
