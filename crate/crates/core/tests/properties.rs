use std::sync::OnceLock;

use fqgraph::corpus::{generate_corpus, CorpusBounds, Instance};
use fqgraph::field::FieldCtx;
use fqgraph::graph::{
    elementary_tree_level, graphs_isomorphic, Component, GraphSummary, RootedTree,
};
use fqgraph::number_theory::{coprime_split, divisors, mobius, GcdSeries};
use fqgraph::oracle::{build_functional_graph, preimage_count_layers, tabulate, MapTable};
use fqgraph::poly::{closed_form_iterate, index_decompose, iterate_map, IndexedForm, Polynomial};
use fqgraph::structure::{
    analyze_form, predict_nonzero_components, predict_zero_component, psi_map, tau_tables,
    CycleRepData, TauArithmetic, ZeroTailConvention,
};
use proptest::prelude::*;

const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 31, 61, 97, 101, 181, 257];

fn corpus() -> &'static [Instance] {
    static C: OnceLock<Vec<Instance>> = OnceLock::new();
    C.get_or_init(|| {
        generate_corpus(&CorpusBounds {
            q_max: 113,
            ..Default::default()
        })
    })
}

fn corpus_instance() -> impl Strategy<Value = Instance> {
    (0..corpus().len()).prop_map(|i| corpus()[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mobius_inversion(u in 1u64..10_000, seed in any::<u64>()) {
        let divs = divisors(u);
        let g: Vec<i64> = divs.iter().map(|&d| ((seed ^ d.wrapping_mul(0x9e37_79b9)) % 1000) as i64 - 500).collect();
        let at = |d: u64| g[divs.binary_search(&d).unwrap()];
        let big_g = |e: u64| -> i64 { divisors(e).into_iter().map(at).sum() };
        for &e in &divs {
            let back: i64 = divisors(e).into_iter().map(|d| mobius(e / d) * big_g(d)).sum();
            prop_assert_eq!(back, at(e));
        }
    }

    #[test]
    fn mobius_sums(u in 1u64..100_000) {
        let s: i64 = divisors(u).into_iter().map(mobius).sum();
        prop_assert_eq!(s, i64::from(u == 1));
    }

    #[test]
    fn coprime_split_parts(total in 1u64..100_000, n in 1u64..1000) {
        let c = coprime_split(total, n);
        prop_assert_eq!(c.omega * c.nu, total);
        prop_assert_eq!(num_integer::gcd(c.omega, n), 1);
        // every prime of nu divides n
        let mut r = c.nu;
        loop {
            let g = num_integer::gcd(r, n);
            if g == 1 { break; }
            r /= g;
        }
        prop_assert_eq!(r, 1);
    }

    #[test]
    fn field_axioms(pi in 0usize..PRIMES.len(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let ctx = FieldCtx::prime(PRIMES[pi]).unwrap();
        let e = |x: u32| ctx.from_int(x as i64);
        let (a, b, c) = (e(a), e(b), e(c));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.add(a, ctx.neg(a)), ctx.zero());
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), ctx.one());
        }
    }

    #[test]
    fn extension_field_axioms(fi in 0usize..4, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (p, k) = [(2, 8), (3, 4), (5, 3), (7, 2)][fi];
        let ctx = FieldCtx::extension(p, k, None).unwrap();
        let q = ctx.q() as u32;
        let e = |x: u32| ctx.element((x % q) as u64).unwrap();
        let (a, b, c) = (e(a), e(b), e(c));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        if !a.is_zero() {
            let l = ctx.discrete_log(a).unwrap();
            prop_assert_eq!(ctx.pow_u64(ctx.alpha(), l), a);
        }
    }

    #[test]
    fn discrete_log_round_trip(p in prop::sample::select(vec![181u64, 7919, 65_537, 1_000_003, 2_147_483_647]), x in 1u64..u64::MAX) {
        let ctx = FieldCtx::prime(p).unwrap();
        let a = ctx.from_int((x % (p - 1) + 1) as i64);
        let l = ctx.discrete_log(a).unwrap();
        prop_assert!(l < p - 1);
        prop_assert_eq!(ctx.pow_u64(ctx.alpha(), l), a);
    }

    #[test]
    fn canonical_code_ignores_child_order(code_seed in prop::collection::vec(0usize..6, 1..40), shuffle in any::<u64>()) {
        // Grow a tree by attaching each new vertex under an earlier one.
        let n = code_seed.len() + 1;
        let mut parent = vec![0usize; n];
        for (i, &s) in code_seed.iter().enumerate() {
            parent[i + 1] = s % (i + 1);
        }
        let build = |order_key: u64| -> RootedTree {
            let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
            for v in 1..n { kids[parent[v]].push(v); }
            for (v, k) in kids.iter_mut().enumerate() {
                let key = order_key.wrapping_mul(v as u64 + 1);
                k.sort_by_key(|&c| (c as u64).wrapping_mul(key) % 97);
            }
            let mut built: Vec<Option<RootedTree>> = vec![None; n];
            for v in (0..n).rev() {
                let children = kids[v].iter().map(|&c| built[c].take().unwrap()).collect();
                built[v] = Some(RootedTree::from_children(children));
            }
            built[0].take().unwrap()
        };
        let a = build(1);
        let b = build(shuffle | 1);
        prop_assert_eq!(a.code(), b.code());
        prop_assert_eq!(a.size(), n);
        prop_assert_eq!(RootedTree::from_code(a.code()).unwrap(), a);
    }

    #[test]
    fn rotation_invariance(codes in prop::collection::vec(prop::sample::select(vec!["()", "(())", "(()())", "((()))"]), 1..8), r in 0usize..8) {
        let trees: Vec<RootedTree> = codes.iter().map(|c| RootedTree::from_code(c).unwrap()).collect();
        let mut rotated = trees.clone();
        let len = rotated.len();
        rotated.rotate_left(r % len);
        let a = GraphSummary::new(vec![Component::new(trees).unwrap()]);
        let b = GraphSummary::new(vec![Component::new(rotated).unwrap()]);
        prop_assert!(graphs_isomorphic(&a, &b));
        let json = serde_json::to_string(&a).unwrap();
        let back: GraphSummary = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn functional_graph_conserves_vertices(image in prop::collection::vec(0u32..300, 1..300)) {
        let n = image.len() as u32;
        let t = MapTable::new(image.into_iter().map(|b| b % n).collect());
        prop_assert_eq!(build_functional_graph(&t).vertex_count(), n as usize);
    }

    #[test]
    fn closed_form_matches_iteration(inst in corpus_instance(), k in 0u64..=6) {
        let ctx = inst.field();
        let form = inst.form(&ctx);
        let f = form.to_polynomial(&ctx);
        for a in ctx.elements() {
            prop_assert_eq!(closed_form_iterate(&ctx, &form, a, k), iterate_map(&ctx, &f, a, k));
        }
    }

    #[test]
    fn decomposition_round_trip(inst in corpus_instance()) {
        let ctx = inst.field();
        let f = inst.polynomial(&ctx);
        let form = index_decompose(&ctx, &f).unwrap();
        let g = form.to_polynomial(&ctx);
        for a in ctx.elements() {
            prop_assert_eq!(f.evaluate(&ctx, a), g.evaluate(&ctx, a));
        }
    }

    #[test]
    fn commutation_identity(inst in corpus_instance()) {
        let ctx = inst.field();
        let form = inst.form(&ctx);
        let f = form.to_polynomial(&ctx);
        let dy = psi_map(&ctx, &form);
        let s = form.s(&ctx);
        for a in ctx.elements() {
            let lhs = if a.is_zero() { ctx.zero() } else { dy.psi(ctx.pow_u64(a, s)).unwrap() };
            prop_assert_eq!(lhs, ctx.pow_u64(f.evaluate(&ctx, a), s));
        }
    }

    #[test]
    fn preimage_sizes_and_lemma(inst in corpus_instance()) {
        let ctx = inst.field();
        let form = inst.form(&ctx);
        let f = form.to_polynomial(&ctx);
        let dy = psi_map(&ctx, &form);
        let s = form.s(&ctx);
        let table = tabulate(&ctx, &f);
        let layers = preimage_count_layers(&table, 4);
        for (k, layer) in layers.iter().enumerate().skip(1) {
            let expected = num_integer::gcd((form.n as u128).pow(k as u32), s as u128);
            for b in ctx.nonzero_elements() {
                let c = layer[b.index() as usize] as u128;
                prop_assert!(c == 0 || c == expected, "k = {}, b = {}, count = {}", k, b, c);
            }
            // x^s is the unique k-fold psi-preimage of b^s inside mu_m
            for x in ctx.nonzero_elements() {
                let b = iterate_map(&ctx, &f, x, k as u64);
                if b.is_zero() { continue; }
                let target = ctx.pow_u64(b, s);
                let pre: Vec<_> = dy.mu_m.iter().copied().filter(|&xi| {
                    let mut y = xi;
                    for _ in 0..k { y = dy.psi(y).unwrap_or(ctx.zero()); if y.is_zero() { break; } }
                    y == target
                }).collect();
                prop_assert_eq!(pre, vec![ctx.pow_u64(x, s)]);
            }
        }
    }

    #[test]
    fn level_population_law(entries in prop::collection::vec(1u64..=4, 1..=4), k in 0usize..=5) {
        let mut e = entries;
        e.sort_unstable_by(|a, b| b.cmp(a));
        let v = GcdSeries::new(e).unwrap();
        let t = elementary_tree_level(&v, k);
        let counts = t.level_counts();
        prop_assert_eq!(counts.len(), k + 1);
        for (j, &c) in counts.iter().enumerate() {
            prop_assert_eq!(c as u128, v.prefix_product(j));
        }
    }

    #[test]
    fn reduced_tau_matches_exact(inst in corpus_instance()) {
        let ctx = inst.field();
        let form = inst.form(&ctx);
        let dy = psi_map(&ctx, &form);
        let reps = CycleRepData::new(&ctx, &form, &dy).unwrap();
        let exact = tau_tables(&ctx, &form, &dy, &reps, TauArithmetic::Exact).unwrap();
        let reduced = tau_tables(&ctx, &form, &dy, &reps, TauArithmetic::Reduced).unwrap();
        prop_assert_eq!(exact, reduced);
    }

    #[test]
    fn predictions_do_not_depend_on_alpha_or_representatives(inst in corpus_instance(), pick in any::<u64>()) {
        let ctx = inst.field();
        let form = inst.form(&ctx);
        let base = analyze_form(&ctx, &form).unwrap().graph();
        let generators: Vec<_> = ctx.nonzero_elements().filter(|&g| ctx.is_primitive(g)).collect();
        let other = ctx.with_generator(generators[(pick % generators.len() as u64) as usize]).unwrap();
        prop_assert!(graphs_isomorphic(&base, &analyze_form(&other, &form).unwrap().graph()));

        let dy = psi_map(&ctx, &form);
        let choices: Vec<usize> = dy.cycles.iter().enumerate().map(|(i, c)| ((pick >> i) as usize) % c.len()).collect();
        let reps = CycleRepData::with_choices(&ctx, &form, &dy, &choices).unwrap();
        let zero = predict_zero_component(&ctx, &form, &dy, ZeroTailConvention::PerDepth).unwrap();
        let g = GraphSummary::new(vec![zero]).union(predict_nonzero_components(&ctx, &form, &dy, &reps).unwrap());
        prop_assert!(graphs_isomorphic(&base, &g));
    }

    #[test]
    fn fixed_points_and_vertices(inst in corpus_instance()) {
        let ctx = inst.field();
        let form = inst.form(&ctx);
        let f = form.to_polynomial(&ctx);
        let g = analyze_form(&ctx, &form).unwrap().graph();
        prop_assert_eq!(g.vertex_count() as u64, ctx.q());
        let fixed = ctx.elements().filter(|&a| f.evaluate(&ctx, a) == a).count();
        prop_assert_eq!(g.fixed_point_count(), fixed);
    }

    #[test]
    fn nonzero_cycle_trees_are_uniform(inst in corpus_instance()) {
        let ctx = inst.field();
        let f = inst.polynomial(&ctx);
        let oracle = build_functional_graph(&tabulate(&ctx, &f));
        // vertex 0 is cyclic and has the least index, so its component comes first
        prop_assert_eq!(oracle.components[0].cycle_len, 1);
        let mut codes: Vec<&str> = oracle.components[1..].iter().flat_map(|c| c.trees.iter().map(|t| t.code())).collect();
        codes.dedup();
        prop_assert!(codes.len() <= 1);
    }
}

#[test]
fn indexed_form_rejects_bad_index() {
    let ctx = FieldCtx::prime(13).unwrap();
    let h = Polynomial::from_ints(&ctx, &[1, 1]);
    assert!(IndexedForm::new(&ctx, 2, h, 5).is_err());
}
