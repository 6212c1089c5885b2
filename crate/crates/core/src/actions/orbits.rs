//! Orbits of `K` on an equivalence class of Hadamard matrices.
//!
//! The class is enumerated by breadth-first search under generators of the
//! full monomial group, then orbits are read off a disjoint-set forest over
//! the edges given by generators of `K`. In normalized mode every state is a
//! normalized matrix standing for its whole sign orbit, which has
//! `2^(2n-1)` members; this works because `K` contains all sign pairs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::groups::{aut_group, iso_group};
use super::packed::{Layout, PackedMove};
use crate::error::{Error, Result};
use crate::hadamard::{HadamardMatrix, MonomialPair, Signs};
use crate::perm::Perm;
use crate::scheme::AssociationScheme;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitMode {
    /// Every signed matrix is a state. Orders up to 4.
    Full,
    /// One normalized matrix per sign orbit. Orders up to 8.
    Normalized,
}

impl OrbitMode {
    pub fn name(self) -> &'static str {
        match self {
            OrbitMode::Full => "full",
            OrbitMode::Normalized => "normalized",
        }
    }

    fn max_order(self) -> usize {
        match self {
            OrbitMode::Full => 4,
            OrbitMode::Normalized => 8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrbitOptions {
    /// `None` picks full mode up to order 4 and normalized mode above.
    pub mode: Option<OrbitMode>,
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
    /// Picks the member of the class the search starts from.
    pub seed: u64,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        Self {
            mode: None,
            threads: 0,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrbitPartition {
    n: usize,
    mode: OrbitMode,
    states: Vec<u64>,
    orbit_of: Vec<u32>,
    /// Sizes in matrices, indexed by orbit id. Orbit ids follow the smallest
    /// packed word in each orbit.
    orbit_sizes: Vec<u64>,
    class_of_orbit: Vec<u32>,
    class_count: usize,
}

/// One-line summary of an orbit computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub scheme_id: String,
    pub mode: OrbitMode,
    pub orbit_sizes: Vec<u64>,
    pub k_orbits: usize,
    pub similarity_classes: usize,
    pub states_enumerated: usize,
}

impl OrbitPartition {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> OrbitMode {
        self.mode
    }

    pub fn states_enumerated(&self) -> usize {
        self.states.len()
    }

    pub fn k_orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }

    pub fn similarity_class_count(&self) -> usize {
        self.class_count
    }

    pub fn orbit_sizes(&self) -> &[u64] {
        &self.orbit_sizes
    }

    pub fn orbit_sizes_desc(&self) -> Vec<u64> {
        let mut sizes = self.orbit_sizes.clone();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Total number of matrices in the class.
    pub fn class_size(&self) -> u64 {
        self.orbit_sizes.iter().sum()
    }

    fn key(&self, h: &HadamardMatrix) -> Option<u64> {
        if h.order() != self.n {
            return None;
        }
        let word = h.packed()?;
        Some(match self.mode {
            OrbitMode::Full => word,
            OrbitMode::Normalized => Layout::new(self.n).normalize(word),
        })
    }

    /// Orbit id of `h`, or `None` if `h` is outside the class.
    pub fn orbit_of(&self, h: &HadamardMatrix) -> Option<usize> {
        let key = self.key(h)?;
        let i = self.states.binary_search(&key).ok()?;
        Some(self.orbit_of[i] as usize)
    }

    pub fn similarity_class_of(&self, h: &HadamardMatrix) -> Option<usize> {
        self.orbit_of(h).map(|o| self.class_of_orbit[o] as usize)
    }

    /// The member of orbit `id` with the smallest packed word.
    pub fn representative(&self, id: usize) -> HadamardMatrix {
        let i = self
            .orbit_of
            .iter()
            .position(|&o| o as usize == id)
            .expect("orbit id in range");
        HadamardMatrix::from_packed(self.n, self.states[i])
    }

    pub fn report(&self, scheme_id: &str) -> OrbitReport {
        OrbitReport {
            scheme_id: scheme_id.to_string(),
            mode: self.mode,
            orbit_sizes: self.orbit_sizes_desc(),
            k_orbits: self.k_orbit_count(),
            similarity_classes: self.class_count,
            states_enumerated: self.states.len(),
        }
    }
}

/// Partitions the equivalence class of `h0` into `K`-orbits and merges
/// orbits exchanged by transposition into similarity classes.
pub fn k_orbits(
    scheme: &AssociationScheme,
    h0: &HadamardMatrix,
    options: &OrbitOptions,
) -> Result<OrbitPartition> {
    let n = h0.order();
    if scheme.order() != n {
        return Err(Error::DimensionMismatch {
            scheme: scheme.order(),
            matrix: n,
        });
    }
    let mode = options.mode.unwrap_or(if n <= 4 {
        OrbitMode::Full
    } else {
        OrbitMode::Normalized
    });
    if n > mode.max_order() {
        return Err(Error::OrderUnsupported {
            order: n,
            mode: mode.name(),
        });
    }
    let aut = aut_group(scheme)?;
    let iso = iso_group(scheme)?;
    let mut k_pairs: Vec<MonomialPair> = Vec::new();
    for alpha in aut.generators() {
        k_pairs.push(MonomialPair::perms(alpha, Perm::identity(n)));
    }
    for sigma in iso.generators() {
        k_pairs.push(MonomialPair::perms(sigma.clone(), sigma));
    }
    if mode == OrbitMode::Full {
        for x in 0..n {
            k_pairs.push(MonomialPair::signs(Signs::flip_at(n, x), Signs::ones(n)));
            k_pairs.push(MonomialPair::signs(Signs::ones(n), Signs::flip_at(n, x)));
        }
    }
    let run = || enumerate(n, mode, h0, &k_pairs, options.seed);
    if options.threads == 0 {
        Ok(run())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::BadInput(format!("thread pool: {e}")))?;
        Ok(pool.install(run))
    }
}

fn enumerate(
    n: usize,
    mode: OrbitMode,
    h0: &HadamardMatrix,
    k_pairs: &[MonomialPair],
    seed: u64,
) -> OrbitPartition {
    let layout = Layout::new(n);
    let canon = |w: u64| match mode {
        OrbitMode::Full => w,
        OrbitMode::Normalized => layout.normalize(w),
    };

    let mut g_pairs: Vec<MonomialPair> = (0..n.saturating_sub(1))
        .flat_map(|i| {
            let t = Perm::transposition(n, i, i + 1);
            [
                MonomialPair::perms(t.clone(), Perm::identity(n)),
                MonomialPair::perms(Perm::identity(n), t),
            ]
        })
        .collect();
    if mode == OrbitMode::Full {
        g_pairs.push(MonomialPair::signs(Signs::flip_at(n, 0), Signs::ones(n)));
        g_pairs.push(MonomialPair::signs(Signs::ones(n), Signs::flip_at(n, 0)));
    }
    let g_moves: Vec<PackedMove> = g_pairs.iter().map(|p| PackedMove::new(layout, p)).collect();
    let k_moves: Vec<PackedMove> = k_pairs.iter().map(|p| PackedMove::new(layout, p)).collect();

    let start = canon(random_member(h0, seed).packed().expect("order at most 8"));
    let mut seen: HashSet<u64> = HashSet::from([start]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let produced: Vec<u64> = frontier
            .par_iter()
            .flat_map_iter(|&w| g_moves.iter().map(move |m| canon(m.apply(w))))
            .collect();
        frontier = produced.into_iter().filter(|&w| seen.insert(w)).collect();
    }
    let mut states: Vec<u64> = seen.into_iter().collect();
    states.sort_unstable();

    let index = |w: u64| states.binary_search(&w).expect("class closed under K") as u32;
    let edges: Vec<(u32, u32)> = states
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, &w)| k_moves.iter().map(move |m| (i as u32, canon(m.apply(w)))))
        .map(|(i, w)| (i, index(w)))
        .collect();
    let mut forest = DisjointSets::new(states.len());
    for (a, b) in edges {
        forest.union(a as usize, b as usize);
    }

    let weight: u64 = match mode {
        OrbitMode::Full => 1,
        OrbitMode::Normalized => 1 << (2 * n - 1),
    };
    let mut id_of_root = vec![u32::MAX; states.len()];
    let mut orbit_of = vec![0u32; states.len()];
    let mut orbit_sizes: Vec<u64> = Vec::new();
    let mut first_state: Vec<u64> = Vec::new();
    for i in 0..states.len() {
        let root = forest.find(i);
        if id_of_root[root] == u32::MAX {
            id_of_root[root] = orbit_sizes.len() as u32;
            orbit_sizes.push(0);
            first_state.push(states[i]);
        }
        orbit_of[i] = id_of_root[root];
        orbit_sizes[orbit_of[i] as usize] += weight;
    }

    // transposition maps K-orbits onto K-orbits, so one member per orbit decides
    let mut classes = DisjointSets::new(orbit_sizes.len());
    for (id, &w) in first_state.iter().enumerate() {
        if let Ok(j) = states.binary_search(&canon(layout.transpose(w))) {
            classes.union(id, orbit_of[j] as usize);
        }
    }
    let mut class_of_root = vec![u32::MAX; orbit_sizes.len()];
    let mut class_of_orbit = vec![0u32; orbit_sizes.len()];
    let mut class_count = 0;
    for id in 0..orbit_sizes.len() {
        let root = classes.find(id);
        if class_of_root[root] == u32::MAX {
            class_of_root[root] = class_count;
            class_count += 1;
        }
        class_of_orbit[id] = class_of_root[root];
    }

    OrbitPartition {
        n,
        mode,
        states,
        orbit_of,
        orbit_sizes,
        class_of_orbit,
        class_count: class_count as usize,
    }
}

/// `h0` moved by a monomial pair drawn from `seed`; seed 0 keeps `h0`.
fn random_member(h0: &HadamardMatrix, seed: u64) -> HadamardMatrix {
    if seed == 0 {
        return h0.clone();
    }
    let n = h0.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perm = |rng: &mut ChaCha8Rng| {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        Perm::new(v).expect("shuffled identity")
    };
    let signs = |rng: &mut ChaCha8Rng| Signs((0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect());
    let pair = MonomialPair {
        row_perm: perm(&mut rng),
        row_signs: signs(&mut rng),
        col_perm: perm(&mut rng),
        col_signs: signs(&mut rng),
    };
    pair.apply(h0)
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::{order_four, sylvester};
    use crate::scheme::{catalog, trivial};

    fn run(scheme: &AssociationScheme, h: &HadamardMatrix, mode: OrbitMode) -> OrbitPartition {
        let options = OrbitOptions {
            mode: Some(mode),
            ..OrbitOptions::default()
        };
        k_orbits(scheme, h, &options).unwrap()
    }

    #[test]
    fn order_four_orbit_sizes() {
        let expected: [&[u64]; 4] = [&[768], &[512, 256], &[384, 256, 128], &[512, 256]];
        for (i, sizes) in expected.iter().enumerate() {
            let p = run(&catalog::as4(i + 1), &order_four(0), OrbitMode::Full);
            assert_eq!(p.class_size(), 768);
            assert_eq!(p.states_enumerated(), 768);
            assert_eq!(p.orbit_sizes_desc(), sizes.to_vec(), "AS(4,{})", i + 1);
        }
    }

    #[test]
    fn order_four_representatives_land_in_the_stated_orbits() {
        // (scheme, groups of representatives, orbit size of each group)
        let cases: [(usize, &[&[usize]], &[u64]); 4] = [
            (1, &[&[0, 1, 2, 3]], &[768]),
            (2, &[&[0, 1], &[2, 3]], &[256, 512]),
            (3, &[&[0, 2], &[1], &[3]], &[384, 128, 256]),
            (4, &[&[0, 1], &[2, 3]], &[256, 512]),
        ];
        for (i, groups, sizes) in cases {
            let p = run(&catalog::as4(i), &order_four(0), OrbitMode::Full);
            let mut ids = Vec::new();
            for (group, &size) in groups.iter().zip(sizes) {
                let id = p.orbit_of(&order_four(group[0])).unwrap();
                assert!(group.iter().all(|&j| p.orbit_of(&order_four(j)) == Some(id)), "AS(4,{i})");
                assert_eq!(p.orbit_sizes()[id], size, "AS(4,{i})");
                ids.push(id);
            }
            ids.dedup();
            assert_eq!(ids.len(), groups.len());
            assert_eq!(p.k_orbit_count(), groups.len());
        }
    }

    #[test]
    fn normalized_mode_matches_full_mode_at_order_four() {
        for i in 1..=4 {
            let s = catalog::as4(i);
            let full = run(&s, &order_four(0), OrbitMode::Full);
            let norm = run(&s, &order_four(0), OrbitMode::Normalized);
            assert_eq!(norm.states_enumerated(), 6);
            assert_eq!(full.orbit_sizes_desc(), norm.orbit_sizes_desc());
            assert_eq!(full.similarity_class_count(), norm.similarity_class_count());
            for j in 0..4 {
                for k in 0..4 {
                    let same_full = full.orbit_of(&order_four(j)) == full.orbit_of(&order_four(k));
                    let same_norm = norm.orbit_of(&order_four(j)) == norm.orbit_of(&order_four(k));
                    assert_eq!(same_full, same_norm);
                }
            }
        }
    }

    #[test]
    fn seed_does_not_change_the_partition() {
        let s = catalog::as4(3);
        let base = run(&s, &order_four(0), OrbitMode::Full);
        for seed in 1..=5 {
            let options = OrbitOptions {
                seed,
                ..OrbitOptions::default()
            };
            let p = k_orbits(&s, &order_four(0), &options).unwrap();
            assert_eq!(p.states, base.states);
            assert_eq!(p.orbit_of, base.orbit_of);
            assert_eq!(p.class_of_orbit, base.class_of_orbit);
        }
    }

    #[test]
    fn thread_count_does_not_change_the_partition() {
        let s = catalog::as4(2);
        let one = k_orbits(&s, &order_four(1), &OrbitOptions { threads: 1, ..Default::default() }).unwrap();
        let four = k_orbits(&s, &order_four(1), &OrbitOptions { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(one.report("x"), four.report("x"));
        assert_eq!(one.orbit_of, four.orbit_of);
    }

    #[test]
    fn order_eight_trivial_scheme_has_one_orbit() {
        let p = run(&trivial(8), &sylvester(3), OrbitMode::Normalized);
        assert_eq!(p.states_enumerated(), 151_200);
        assert_eq!(p.k_orbit_count(), 1);
        assert_eq!(p.similarity_class_count(), 1);
    }

    #[test]
    fn unsupported_orders() {
        assert_eq!(
            k_orbits(&trivial(8), &sylvester(3), &OrbitOptions { mode: Some(OrbitMode::Full), ..Default::default() })
                .unwrap_err(),
            Error::OrderUnsupported { order: 8, mode: "full" }
        );
        assert!(matches!(
            k_orbits(&trivial(4), &sylvester(3), &OrbitOptions::default()),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
