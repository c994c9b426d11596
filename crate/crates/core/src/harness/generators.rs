//! Exhaustive and seeded instance streams.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::family::SubsetFamily;
use crate::universe::{BinaryRelation, Subset};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every relation on `n` points, in code order (`n ≤ 4`).
pub fn all_relations(n: usize) -> impl Iterator<Item = BinaryRelation> {
    assert!(n <= 4, "all_relations is limited to 4 points");
    let bits = n * n;
    (0u64..1 << bits).map(move |code| BinaryRelation::from_fn(n, |a, b| code >> (a * n + b) & 1 == 1))
}

/// Every reflexive relation on `n` points (`n ≤ 4`).
pub fn reflexive_relations(n: usize) -> impl Iterator<Item = BinaryRelation> {
    assert!(n <= 4, "reflexive_relations is limited to 4 points");
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    (0u64..1 << off.len()).map(move |code| {
        BinaryRelation::from_fn(n, |a, b| {
            a == b || off.iter().position(|&p| p == (a, b)).is_some_and(|i| code >> i & 1 == 1)
        })
    })
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Subset {
    Subset::from_bits(rng.gen::<u64>() & Subset::full(n).bits())
}

/// Each pair present independently with probability `p`.
pub fn random_relation<R: Rng>(rng: &mut R, n: usize, p: f64) -> BinaryRelation {
    let rows = (0..n)
        .map(|_| (0..n).filter(|_| rng.gen_bool(p)).collect())
        .collect();
    BinaryRelation::from_rows(rows)
}

pub fn random_reflexive_relation<R: Rng>(rng: &mut R, n: usize, p: f64) -> BinaryRelation {
    let r = random_relation(rng, n, p);
    BinaryRelation::from_fn(n, |a, b| a == b || r.contains(a, b))
}

/// Ancestor order of a random rooted tree on shuffled labels: `σ a b` iff `b` is
/// an ancestor of `a` or `a = b`. Every pair has a least common upper bound.
pub fn random_tree_order<R: Rng>(rng: &mut R, n: usize) -> BinaryRelation {
    tree_order(rng, n, false)
}

/// [`random_tree_order`] where the root has a single child, so every set
/// avoiding the root has a least upper bound below it.
pub fn random_capped_tree_order<R: Rng>(rng: &mut R, n: usize) -> BinaryRelation {
    tree_order(rng, n, true)
}

fn tree_order<R: Rng>(rng: &mut R, n: usize, capped: bool) -> BinaryRelation {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let lowest = usize::from(capped);
    let parent: Vec<Option<usize>> = (0..n)
        .map(|i| match i {
            0 => None,
            1 => Some(0),
            _ => Some(rng.gen_range(lowest..i)),
        })
        .collect();
    let mut up = vec![Subset::EMPTY; n];
    for i in 0..n {
        up[i] = Subset::singleton(i) | parent[i].map_or(Subset::EMPTY, |p| up[p]);
    }
    BinaryRelation::from_fn(n, |a, b| {
        let (i, j) = (perm[a], perm[b]);
        up[i].contains(j)
    })
}

/// A granulation that covers the universe; with `reflexive`, `x ∈ γ(x)`.
pub fn random_granulation<R: Rng>(rng: &mut R, n: usize, reflexive: bool) -> Vec<Subset> {
    let mut gamma: Vec<Subset> = (0..n).map(|_| random_subset(rng, n)).collect();
    if reflexive {
        for (x, g) in gamma.iter_mut().enumerate() {
            *g = g.with(x);
        }
    }
    let covered = gamma.iter().fold(Subset::EMPTY, |a, &g| a | g);
    for y in (Subset::full(n) - covered).iter() {
        let x = rng.gen_range(0..n);
        gamma[x] = gamma[x].with(y);
    }
    gamma
}

/// A random partition into nonempty blocks.
pub fn random_partition<R: Rng>(rng: &mut R, n: usize) -> Vec<Subset> {
    let k = rng.gen_range(1..=n);
    let mut blocks = vec![Subset::EMPTY; k];
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for (i, &x) in order.iter().enumerate() {
        let b = if i < k { i } else { rng.gen_range(0..k) };
        blocks[b] = blocks[b].with(x);
    }
    blocks
}

/// A random antichain of nonempty members, built greedily from a shuffle.
pub fn random_antichain<R: Rng>(rng: &mut R, family: &SubsetFamily) -> Vec<Subset> {
    let mut pool: Vec<Subset> = family.iter().filter(|s| !s.is_empty()).collect();
    pool.shuffle(rng);
    let take = rng.gen_range(1..=pool.len().max(1));
    let mut out: Vec<Subset> = Vec::new();
    for s in pool.into_iter().take(take) {
        if out.iter().all(|&t| !s.is_subset(t) && !t.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// `count` relations with sizes drawn from `sizes`, replayable from `seed`.
pub fn seeded_relations(
    seed: u64,
    count: usize,
    sizes: std::ops::RangeInclusive<usize>,
    p: f64,
) -> impl Iterator<Item = BinaryRelation> {
    let mut rng = rng(seed);
    (0..count).map(move |_| {
        let n = rng.gen_range(sizes.clone());
        random_relation(&mut rng, n, p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(reflexive_relations(3).count(), 64);
        assert_eq!(all_relations(3).count(), 512);
        assert!(reflexive_relations(3).all(|r| r.is_reflexive()));
        let mut seen: Vec<_> = all_relations(2).map(|r| r.pairs().collect::<Vec<_>>()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn seeded_streams_replay() {
        let a: Vec<_> = seeded_relations(7, 20, 4..=6, 0.3).collect();
        let b: Vec<_> = seeded_relations(7, 20, 4..=6, 0.3).collect();
        assert_eq!(a, b);
        let c: Vec<_> = seeded_relations(8, 20, 4..=6, 0.3).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn tree_orders_are_supremal_partial_orders() {
        let mut r = rng(1);
        for n in 1..=6 {
            for t in [random_tree_order(&mut r, n), random_capped_tree_order(&mut r, n)] {
                assert!(t.is_reflexive() && t.is_transitive() && t.is_antisymmetric());
                let st = crate::sigma::SigmaStructure::new(crate::Universe::numbered(n).unwrap(), t).unwrap();
                assert!(st.is_supremal());
            }
        }
    }

    #[test]
    fn granulations_cover() {
        let mut r = rng(3);
        for _ in 0..50 {
            let g = random_granulation(&mut r, 5, false);
            assert_eq!(g.iter().fold(Subset::EMPTY, |a, &b| a | b), Subset::full(5));
            let g = random_granulation(&mut r, 5, true);
            assert!(g.iter().enumerate().all(|(x, s)| s.contains(x)));
        }
    }

    #[test]
    fn partitions_and_antichains() {
        let mut r = rng(5);
        for _ in 0..50 {
            let p = random_partition(&mut r, 4);
            assert_eq!(p.iter().fold(Subset::EMPTY, |a, &b| a | b), Subset::full(4));
            assert_eq!(p.iter().map(|b| b.len()).sum::<usize>(), 4);
            assert!(p.iter().all(|b| !b.is_empty()));
        }
        let fam = SubsetFamily::power_set(3).unwrap();
        for _ in 0..50 {
            let a = random_antichain(&mut r, &fam);
            assert!(!a.is_empty());
            assert!(SubsetFamily::new(3, a).unwrap().is_antichain());
        }
    }
}
