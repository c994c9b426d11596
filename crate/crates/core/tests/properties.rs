use proptest::prelude::*;

use idealrough::approx::{
    approx_antichain, approx_gosi, approx_gosih, approx_strong, rough_compare, ApproxResult, Granulation, Op,
    PointwiseSpace,
};
use idealrough::family::partition_algebra;
use idealrough::harness::{run_suite, LawSuite};
use idealrough::instance::InstanceDocument;
use idealrough::lattice::{enumerate_lattice_ideals, generated_lattice_ideal, is_lattice_ideal};
use idealrough::mereo::{gamma_for, mereo_approx, ClanKind, ContactStructure, DiscreteSpace, GammaChoice, Scheme};
use idealrough::{BinaryRelation, Directedness, EmptyMeet, Error, LatticeIdeal, SigmaStructure, Subset, SubsetFamily, Universe};

fn mask(n: usize) -> impl Strategy<Value = Subset> {
    (0..1u64 << n).prop_map(Subset::from_bits)
}

fn relation(max: usize) -> impl Strategy<Value = BinaryRelation> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.35), n * n)
            .prop_map(move |bits| BinaryRelation::from_fn(n, |a, b| bits[a * n + b]))
    })
}

/// Ancestor order of the tree given by `parent[i] < i`: `σ a b` iff `b` is `a` or above it.
fn tree(max: usize) -> impl Strategy<Value = BinaryRelation> {
    (2..=max).prop_flat_map(|n| {
        (1..n)
            .map(|i| (0..i).boxed())
            .collect::<Vec<_>>()
            .prop_map(move |ps| {
                let mut up = vec![Subset::singleton(0)];
                for (i, p) in ps.into_iter().enumerate() {
                    let i = i + 1;
                    up.push(up[p].with(i));
                }
                BinaryRelation::from_fn(n, |a, b| up[a].contains(b))
            })
    })
}

fn reflexive(max: usize) -> impl Strategy<Value = BinaryRelation> {
    relation(max).prop_map(|r| BinaryRelation::from_fn(r.size(), |a, b| a == b || r.contains(a, b)))
}

fn granulation(n: usize) -> impl Strategy<Value = Vec<Subset>> {
    prop::collection::vec(mask(n), n)
}

fn ranks(s: Subset) -> Vec<usize> {
    s.iter().collect()
}

fn oracle_ideals(rel: &BinaryRelation, mode: Directedness, allow_empty: bool) -> Vec<Subset> {
    let n = rel.size();
    let mut out: Vec<Subset> = Subset::full(n)
        .subsets()
        .filter(|&k| {
            if k == Subset::full(n) || (k.is_empty() && !allow_empty) {
                return false;
            }
            let closed = (0..n).all(|a| !k.contains(a) || (0..n).all(|x| !rel.contains(x, a) || k.contains(x)));
            let directed = k.iter().all(|a| {
                k.iter().all(|b| {
                    let ub: Vec<usize> = (0..n).filter(|&x| rel.contains(a, x) && rel.contains(b, x)).collect();
                    let required = mode == Directedness::Strict || !ub.is_empty();
                    !required || ub.iter().any(|&x| k.contains(x))
                })
            });
            closed && directed
        })
        .collect();
    out.sort();
    out
}

type Run<'a> = Box<dyn Fn(Subset) -> ApproxResult + 'a>;

fn boundary(r_full: &ApproxResult, r_empty: &ApproxResult, full: Subset) -> (bool, bool) {
    let bottom = r_empty.lower.is_empty() && r_empty.upper.is_empty();
    let top = r_full.lower == full && r_full.upper == full;
    (bottom, top)
}

fn included(r: &ApproxResult) -> bool {
    r.lower.is_subset(r.set) && r.set.is_subset(r.upper)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn subset_complement_laws(n in 1usize..=20, a in any::<u64>(), b in any::<u64>()) {
        let full = Subset::full(n);
        let (a, b) = (Subset::from_bits(a) & full, Subset::from_bits(b) & full);
        prop_assert_eq!((a | b).complement(n), a.complement(n) & b.complement(n));
        prop_assert_eq!((a & b).complement(n), a.complement(n) | b.complement(n));
        prop_assert_eq!(a.complement(n).complement(n), a);
        prop_assert_eq!(a - b, a & b.complement(n));
        prop_assert_eq!(a.len() + a.complement(n).len(), n);
    }

    #[test]
    fn subset_order_is_cardinality_then_lexicographic(a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = (Subset::from_bits(a as u64), Subset::from_bits(b as u64));
        let key = |s: Subset| (s.len(), ranks(s));
        prop_assert_eq!(a.cmp(&b), key(a).cmp(&key(b)));
    }

    #[test]
    fn relation_flags_match_naive(rel in relation(6)) {
        let n = rel.size();
        let all = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|a| (0..n).all(|b| f(a, b)));
        let r = |a, b| rel.contains(a, b);
        let reflexive = (0..n).all(|a| r(a, a));
        let transitive = all(&|a, b| !r(a, b) || (0..n).all(|c| !r(b, c) || r(a, c)));
        let p = rel.properties(EmptyMeet::Empty);
        prop_assert_eq!(p.reflexive, reflexive);
        prop_assert_eq!(p.symmetric, all(&|a, b| r(a, b) == r(b, a)));
        prop_assert_eq!(p.transitive, transitive);
        prop_assert_eq!(p.quasi_order, reflexive && transitive);
        prop_assert_eq!(p.antisymmetric, all(&|a, b| !(r(a, b) && r(b, a)) || a == b));
        prop_assert_eq!(p.quasi_reflexive, all(&|a, b| !r(a, b) || r(a, a)));
        for x in 0..n {
            let preds: Vec<usize> = (0..n).filter(|&b| r(b, x)).collect();
            let naive: Subset = (0..n).filter(|&y| preds.iter().all(|&b| r(b, y))).collect();
            let expect_empty = if preds.is_empty() { Subset::EMPTY } else { naive };
            prop_assert_eq!(rel.min_neighborhood_with(x, EmptyMeet::Empty), expect_empty);
            prop_assert_eq!(rel.min_neighborhood_with(x, EmptyMeet::Universe), naive);
        }
    }

    #[test]
    fn min_neighborhoods_nest(rel in relation(5)) {
        for meet in [EmptyMeet::Empty, EmptyMeet::Universe] {
            let mins = rel.min_neighborhoods(meet);
            for x in 0..rel.size() {
                for y in mins[x].iter() {
                    prop_assert!(mins[y].is_subset(mins[x]), "x={x} y={y} {meet:?}");
                }
            }
        }
    }

    #[test]
    fn lattice_ideals_of_partition_algebras(n in 2usize..=5, labels in prop::collection::vec(0usize..3, 5)) {
        let mut blocks = [Subset::EMPTY; 3];
        for x in 0..n {
            blocks[labels[x]] = blocks[labels[x]].with(x);
        }
        let blocks: Vec<Subset> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        let alg = partition_algebra(n, &blocks).unwrap();
        let ideals = enumerate_lattice_ideals(&alg).unwrap();
        prop_assert!(!ideals.is_empty());
        for i in &ideals {
            prop_assert!(is_lattice_ideal(&alg, i.members()));
        }
        for a in &ideals {
            for b in &ideals {
                let meet: Vec<Subset> = a.members().iter().filter(|&s| b.contains(s)).collect();
                let meet = SubsetFamily::new(n, meet).unwrap();
                prop_assert!(is_lattice_ideal(&alg, &meet));
            }
        }
        for seed in alg.iter() {
            let seed_fam = SubsetFamily::new(n, [seed]).unwrap();
            let got = generated_lattice_ideal(&alg, &seed_fam).unwrap();
            let containing: Vec<&LatticeIdeal> = ideals.iter().filter(|i| i.contains(seed)).collect();
            let meet: Vec<Subset> = alg.iter().filter(|&s| containing.iter().all(|i| i.contains(s))).collect();
            prop_assert_eq!(got.members().members(), &meet[..]);
        }
    }

    #[test]
    fn sigma_enumeration_matches_oracle(rel in relation(7)) {
        let u = Universe::numbered(rel.size()).unwrap();
        for mode in [Directedness::Strict, Directedness::Weak] {
            for allow in [true, false] {
                let st = SigmaStructure::new(u.clone(), rel.clone()).unwrap().with_mode(mode).with_allow_empty(allow);
                let fam = st.enumerate_ideals().unwrap();
                prop_assert_eq!(fam.members(), &oracle_ideals(&rel, mode, allow)[..]);
                for k in fam.iter() {
                    prop_assert!(st.is_convex(k) && st.is_u_directed(k));
                }
            }
        }
    }

    #[test]
    fn generated_ideal_is_least_on_trees(rel in tree(7), pick in any::<u64>()) {
        let n = rel.size();
        let st = SigmaStructure::new(Universe::numbered(n).unwrap(), rel).unwrap();
        let fam = st.enumerate_ideals().unwrap();
        let x = Subset::from_bits(pick) & Subset::full(n);
        prop_assume!(!x.is_empty());
        let least = st.intersection_ideal(&fam, x);
        match st.generated_ideal(x) {
            Ok(g) => prop_assert_eq!(Some(g.ideal), least),
            Err(Error::NotProper) => prop_assert!(fam.iter().all(|k| !x.is_subset(k))),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn pointwise_boundaries(rel in reflexive(4), top in any::<u64>(), a in any::<u64>(), drop in 0usize..4) {
        let n = rel.size();
        let full = Subset::full(n);
        let space = PointwiseSpace::new(rel).unwrap();
        let ring = SubsetFamily::power_set(n).unwrap();
        let ideal = LatticeIdeal::principal_in_power_set(n, Subset::from_bits(top) & full).unwrap();
        let prime = LatticeIdeal::principal_in_power_set(n, full.without(drop % n)).unwrap();
        let a = Subset::from_bits(a) & full;
        let runs: Vec<(Op, Run)> = vec![
            (Op::Kappa, Box::new(|s| space.kappa(&ideal, s).unwrap())),
            (Op::Iad, Box::new(|s| space.iad(&ring, &ideal, s).unwrap())),
            (Op::IadPrime, Box::new(|s| space.iad_prime(&ring, &prime, s).unwrap())),
            (Op::Iasd, Box::new(|s| space.iasd(&ring, &ideal, s).unwrap())),
        ];
        for (op, f) in &runs {
            let r = f(a);
            prop_assert_eq!(r.op, *op);
            prop_assert!(included(&r), "{op}");
            let (bottom, top) = boundary(&f(full), &f(Subset::EMPTY), full);
            prop_assert!(bottom && top, "{op}");
        }
        let (iad, iasd) = (space.iad(&ring, &ideal, a).unwrap(), space.iasd(&ring, &ideal, a).unwrap());
        prop_assert_eq!((iad.lower, iad.upper), (iasd.lower, iasd.upper));
    }

    #[test]
    fn cogranular_boundaries(rel in tree(5), g in granulation(5), a in any::<u64>(), d in any::<u64>()) {
        let n = rel.size();
        let full = Subset::full(n);
        let u = Universe::numbered(n).unwrap();
        let gran = Granulation::new(n, g[..n].iter().map(|&s| s & full).collect()).unwrap();
        let a = Subset::from_bits(a) & full;
        let st = SigmaStructure::new(u.clone(), rel).unwrap();
        let ideals = st.enumerate_ideals().unwrap();

        let gosi = |s| approx_gosi(&st, &gran, s).unwrap();
        prop_assert!(included(&gosi(a)));
        prop_assert_eq!(boundary(&gosi(full), &gosi(Subset::EMPTY), full), (true, true));

        let chain: Vec<Subset> = ideals.iter().filter(|k| !k.is_empty()).take(1).collect();
        let anti = |s| approx_antichain(&st, &ideals, &gran, &chain, s).unwrap();
        prop_assert!(included(&anti(a)));
        prop_assert_eq!(boundary(&anti(full), &anti(Subset::EMPTY), full), (true, true));

        let strong_full = approx_strong(&st, &gran, full).unwrap();
        let strong_empty = approx_strong(&st, &gran, Subset::EMPTY).unwrap();
        prop_assert!(boundary(&strong_full, &strong_empty, full).0);
        prop_assert!(strong_full.lower.is_empty());
        prop_assert_eq!(strong_full.upper, full);
        match approx_strong(&st, &gran, a) {
            Ok(r) => prop_assert!(included(&r)),
            Err(e) => prop_assert!(matches!(e, Error::UpsilonUndefined { .. }), "{e}"),
        }

        let small = n.min(4);
        let ps = SigmaStructure::subset_order(&Universe::numbered(small).unwrap()).unwrap();
        let sfull = Subset::full(small);
        let sgran = Granulation::new(small, g[..small].iter().map(|&s| s & sfull).collect()).unwrap();
        let top = Subset::from_bits(d) & sfull;
        prop_assume!(top != sfull);
        let fixed: Subset = (0..1usize << small).filter(|&m| Subset::from_bits(m as u64).is_subset(top)).collect();
        let gosih = |s| approx_gosih(&ps, &sgran, fixed, s).unwrap();
        prop_assert!(included(&gosih(a & sfull)));
        prop_assert_eq!(boundary(&gosih(sfull), &gosih(Subset::EMPTY), sfull), (true, true));
    }

    #[test]
    fn mereo_boundaries(n in 2usize..=3, xa in any::<u64>(), a in any::<u64>()) {
        let full = Subset::full(n);
        let xa = Subset::from_bits(xa) & full;
        prop_assume!(!xa.is_empty() && xa != full);
        let a = Subset::from_bits(a) & full;
        let space = DiscreteSpace::new(Universe::numbered(n).unwrap(), xa).unwrap();
        let cs = ContactStructure::discrete(&space);
        let gamma = gamma_for(&space, &cs, &GammaChoice::Min(None)).unwrap();
        let actual = cs.clans(ClanKind::Actual).unwrap();
        let clans = cs.clans(ClanKind::Clan).unwrap();
        prop_assert!(!actual.is_empty());
        for &k in &actual {
            prop_assert!(clans.contains(&k));
            for scheme in [Scheme::Cg, Scheme::G, Scheme::Clan] {
                let f = |s| mereo_approx(&cs, &gamma, k, s, scheme).unwrap();
                prop_assert!(included(&f(a)), "{scheme:?}");
                let (bottom, top) = boundary(&f(full), &f(Subset::EMPTY), full);
                prop_assert!(bottom, "{scheme:?}");
                if scheme == Scheme::G {
                    prop_assert_eq!(f(full).lower, xa);
                } else {
                    prop_assert!(top, "{scheme:?}");
                }
            }
        }
    }

    #[test]
    fn rough_inclusion_matches_definition(rel in reflexive(3), top in any::<u64>()) {
        let n = rel.size();
        let full = Subset::full(n);
        let space = PointwiseSpace::new(rel).unwrap();
        let ideal = LatticeIdeal::principal_in_power_set(n, Subset::from_bits(top) & full).unwrap();
        let results: Vec<ApproxResult> = full.subsets().map(|s| space.kappa(&ideal, s).unwrap()).collect();
        let order = rough_compare(&results).unwrap();
        for (i, x) in results.iter().enumerate() {
            for (j, y) in results.iter().enumerate() {
                let want = x.lower.is_subset(y.lower) && x.upper.is_subset(y.upper);
                prop_assert_eq!(order.roughly_included(i, j), want);
            }
        }
        let mut seen: Vec<usize> = order.classes.iter().flatten().copied().collect();
        seen.sort();
        prop_assert_eq!(seen, (0..results.len()).collect::<Vec<_>>());
        for class in &order.classes {
            prop_assert!(class.iter().all(|&i| order.roughly_equal(class[0], i)));
        }
    }

    #[test]
    fn instance_documents_round_trip(rel in relation(5), g in granulation(5), a in any::<u64>()) {
        let n = rel.size();
        let full = Subset::full(n);
        let u = Universe::numbered(n).unwrap();
        let gamma: Vec<Subset> = g[..n].iter().map(|&s| s & full).collect();
        let a = Subset::from_bits(a) & full;
        let doc = InstanceDocument::from_parts(&u, Some(&rel), Some(&gamma), &[("A", a)]);
        let text = serde_json::to_string(&doc.to_json()).unwrap();
        let back = InstanceDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        let inst = back.resolve().unwrap();
        prop_assert_eq!(inst.relation.as_ref(), Some(&rel));
        prop_assert_eq!(inst.granulation.as_ref().unwrap().granules(), &gamma[..]);
        prop_assert_eq!(inst.sets["A"], a);
    }

    #[test]
    fn reports_are_deterministic(seed in any::<u64>(), idx in 0usize..4) {
        let id = ["kappa", "antichain", "neighborhood", "gosi"][idx];
        let run = || {
            let gen = LawSuite::default_generator(id, seed, Some(5)).unwrap();
            let suite = LawSuite::named(id, gen).unwrap();
            run_suite(&suite).unwrap().to_json_string()
        };
        prop_assert_eq!(run(), run());
    }
}

#[test]
fn strong_lower_of_whole_set_is_empty() {
    let n = 3;
    let rel = BinaryRelation::from_fn(n, |a, b| a == b || b == 0);
    let st = SigmaStructure::new(Universe::numbered(n).unwrap(), rel).unwrap();
    let gran = Granulation::new(n, (0..n).map(Subset::singleton).collect()).unwrap();
    let r = approx_strong(&st, &gran, Subset::full(n)).unwrap();
    assert!(r.lower.is_empty());
    let r = approx_gosi(&st, &gran, Subset::full(n)).unwrap();
    assert_eq!(r.lower, Subset::full(n));
}
