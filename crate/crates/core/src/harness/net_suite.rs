//! The net-convergence sweep.
//!
//! Its hypotheses only involve `τ_i`, `τ_j` and `σ_i`, so the sweep runs
//! over those triples and every map, rather than over full bispace pairs.
//! Whether image nets converge does not depend on `τ_j` at all, so for each
//! `(τ_i, σ_i, f)` the net check runs once and is weighted by the number of
//! `τ_j` for which the hypotheses hold.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exec::Execution;
use crate::finite::{enumerate_spaces, FiniteSpace};
use crate::maps::{net_converges, FiniteDirectedSet, Net};
use crate::mask::Mask;
use crate::props::{self, Bispace, IndexPair};

use super::map_suites::{fresh, random_map, sampled_sizes, CHECKS, T46, T46_C_FAILS, T46_C_HOLDS};
use super::tables::{describe_space, MapTable};
use super::tally::{merge_all, Tally};

/// Largest directed set used to index nets.
pub const MAX_DIRECTED: usize = 3;

/// Every net on directed sets of at most [`MAX_DIRECTED`] elements with
/// values in `n` points, addressable by (directed set, values).
struct NetCatalog {
    n: usize,
    directed: Vec<FiniteDirectedSet>,
    offsets: Vec<usize>,
    nets: Vec<(usize, Vec<usize>)>,
}

impl NetCatalog {
    fn new(n: usize, directed: &[FiniteDirectedSet]) -> Self {
        let mut offsets = Vec::new();
        let mut nets = Vec::new();
        for (d, set) in directed.iter().enumerate() {
            offsets.push(nets.len());
            let m = set.len();
            for code in 0..n.pow(m as u32) {
                let mut values = vec![0; m];
                let mut rest = code;
                for v in values.iter_mut() {
                    *v = rest % n;
                    rest /= n;
                }
                nets.push((d, values));
            }
        }
        NetCatalog {
            n,
            directed: directed.to_vec(),
            offsets,
            nets,
        }
    }

    fn index(&self, d: usize, values: &[usize]) -> usize {
        let code = values.iter().rev().fold(0, |acc, &v| acc * self.n + v);
        self.offsets[d] + code
    }

    fn net(&self, i: usize) -> Net {
        let (d, values) = &self.nets[i];
        Net::new(self.directed[*d].clone(), values.clone()).expect("lengths match")
    }

    /// For each net, the points it converges to in `space`.
    fn limits(&self, space: &FiniteSpace) -> Vec<Mask> {
        (0..self.nets.len())
            .map(|i| {
                let net = self.net(i);
                space
                    .points()
                    .iter()
                    .filter(|&p| net_converges(space, &net, p))
                    .collect()
            })
            .collect()
    }

    fn describe(&self, i: usize) -> String {
        let (d, values) = &self.nets[i];
        let set = &self.directed[*d];
        let order: Vec<String> = (0..set.len()).map(|a| format!("{a}≤{}", set.above(a))).collect();
        format!("net D=[{}] values={values:?}", order.join(","))
    }
}

struct World {
    spaces: Vec<FiniteSpace>,
    nets: NetCatalog,
    limits: Vec<Vec<Mask>>,
    /// `closures[s][a]`: closure of subset `a` in space `s`.
    closures: Vec<Vec<Mask>>,
    /// `preopen[a * len + b]`: one bit per subset that is (1,2)-preopen in
    /// the bispace `(spaces[a], spaces[b])`.
    preopen: Vec<u64>,
}

impl World {
    fn new(n: usize, directed: &[FiniteDirectedSet], exec: Execution) -> Self {
        let spaces = enumerate_spaces(n).expect("n within range");
        let nets = NetCatalog::new(n, directed);
        let limits = exec.map(&spaces, |s| nets.limits(s));
        let ground = Mask::prefix(n);
        let closures = spaces
            .iter()
            .map(|s| (0..1u64 << n).map(|bits| s.closure(Mask::from_bits(bits))).collect())
            .collect();
        let pairs: Vec<(usize, usize)> = (0..spaces.len())
            .flat_map(|a| (0..spaces.len()).map(move |b| (a, b)))
            .collect();
        let preopen = exec.map(&pairs, |&(a, b)| {
            let bi = Bispace::new(spaces[a].clone(), spaces[b].clone()).expect("same carrier");
            ground
                .submasks()
                .filter(|&s| props::is_ij_preopen(&bi, IndexPair::OneTwo, s))
                .fold(0u64, |acc, s| acc | 1 << s.bits())
        });
        World {
            spaces,
            nets,
            limits,
            closures,
            preopen,
        }
    }

    /// Hypotheses of the convergence statement with `τ_i = spaces[a]` and
    /// `τ_j = spaces[b]`: every `σ_i`-open preimage is (i,j)-preopen, and
    /// condition C holds.
    fn hypotheses(&self, a: usize, b: usize, sigma_i: &FiniteSpace, f: &MapTable) -> (bool, bool) {
        let flags = self.preopen[a * self.spaces.len() + b];
        let precontinuous = sigma_i.opens().iter().all(|&v| flags >> f.preimage(v).bits() & 1 == 1);
        let condition_c = sigma_i
            .opens()
            .iter()
            .all(|&v| f.image(self.closures[b][f.preimage(v).bits() as usize]) == v);
        (precontinuous, condition_c)
    }
}

#[allow(clippy::too_many_arguments)]
fn check_nets(
    x: &World,
    y: &World,
    a: usize,
    c: usize,
    f: &MapTable,
    weight: u64,
    t: &mut Tally,
    context: &dyn Fn() -> String,
) {
    for (i, (d, values)) in x.nets.nets.iter().enumerate() {
        let limits = x.limits[a][i];
        if limits.is_empty() {
            continue;
        }
        let image: Vec<usize> = values.iter().map(|&v| f.assignment[v]).collect();
        let image_limits = y.limits[c][y.nets.index(*d, &image)];
        for p in limits.iter() {
            let ok = image_limits.contains(f.assignment[p]);
            t.add(weight, !ok, || format!("{} {} x={p}", context(), x.nets.describe(i)));
        }
    }
}

fn shard(x: &World, y: &World, a: usize, maps: &[MapTable]) -> Vec<Tally> {
    let mut t = fresh();
    for (c, sigma) in y.spaces.iter().enumerate() {
        for f in maps {
            let mut weight = 0;
            for (b, tau_j) in x.spaces.iter().enumerate() {
                let (pre, cond) = x.hypotheses(a, b, sigma, f);
                let d = || {
                    format!(
                        "τi={} τj={} σi={} {}",
                        describe_space(&x.spaces[a]),
                        describe_space(tau_j),
                        describe_space(sigma),
                        f.describe()
                    )
                };
                t[T46_C_HOLDS].search(pre && cond, d);
                t[T46_C_FAILS].search(pre && !cond, d);
                if pre && cond {
                    weight += 1;
                }
            }
            if weight > 0 {
                let context = || {
                    format!(
                        "τi={} σi={} {}",
                        describe_space(&x.spaces[a]),
                        describe_space(sigma),
                        f.describe()
                    )
                };
                check_nets(x, y, a, c, f, weight, &mut t[T46], &context);
            }
        }
    }
    t
}

/// The convergence sweep over carriers of 1..=max points; sizes above three
/// are sampled with `sample = (count, seed)`.
pub fn sweep(max: usize, sample: Option<(usize, u64)>, exec: Execution) -> Vec<Tally> {
    exec.install(|| {
        let directed = FiniteDirectedSet::enumerate(MAX_DIRECTED);
        let exhaustive_max = max.min(3);
        let worlds: Vec<World> = (1..=max).map(|n| World::new(n, &directed, exec)).collect();
        let world = |n: usize| &worlds[n - 1];
        let mut jobs = Vec::new();
        for ns in 1..=exhaustive_max {
            for nt in 1..=exhaustive_max {
                let maps = MapTable::all(ns, nt);
                for a in 0..world(ns).spaces.len() {
                    jobs.push((ns, nt, a, maps.clone()));
                }
            }
        }
        let mut shards = exec.map(&jobs, |(ns, nt, a, maps)| shard(world(*ns), world(*nt), *a, maps));

        if max > exhaustive_max {
            if let Some((count, seed)) = sample {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6e65_7473);
                let draws: Vec<_> = (0..count)
                    .map(|_| {
                        let (ns, nt) = sampled_sizes(&mut rng, max);
                        let a = rng.gen_range(0..world(ns).spaces.len());
                        let f = random_map(&mut rng, ns, nt);
                        (ns, nt, a, vec![f])
                    })
                    .collect();
                shards.extend(exec.map(&draws, |(ns, nt, a, maps)| shard(world(*ns), world(*nt), *a, maps)));
            }
        }
        merge_all(shards, CHECKS.len())
    })
}
