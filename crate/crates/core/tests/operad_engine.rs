use braidop::io::{operad_to_json, parse_operad, OperadFile};
use braidop::linalg::{frac, rank, rat, Matrix, Rational};
use braidop::operad::{
    enumerate_trees, relation_vectors, star_tower, FreeOperadElement, LabeledTree, LeftTerm,
    OpElement, OperadComponents, QuadraticRelation, RightTerm,
};
use braidop::presets;
use proptest::prelude::*;

/// Arity-3 hand count: free trees minus the rank of the relation vectors.
fn arity_three_by_hand(n: usize, rels: &[FreeOperadElement]) -> usize {
    let trees = enumerate_trees(3, n);
    let rows: Vec<Vec<Rational>> = rels
        .iter()
        .map(|r| trees.iter().map(|t| r.coeff(t)).collect())
        .collect();
    trees.len() - rank(&Matrix::from_rows(trees.len(), rows).unwrap())
}

#[test]
fn dendriform_dimensions() {
    let (p, _) = presets::dendriform();
    let c = OperadComponents::build(&p, 4).unwrap();
    assert_eq!(c.dims(), vec![1, 2, 5, 14]);
    assert_eq!(arity_three_by_hand(2, &relation_vectors(&p)), 5);
    assert_eq!(c.ideal_rank(3), 3);
}

#[test]
fn tridendriform_dimensions() {
    let (p, _) = presets::tridendriform();
    let c = OperadComponents::build(&p, 4).unwrap();
    assert_eq!(c.dims(), vec![1, 3, 11, 45]);
    assert_eq!(arity_three_by_hand(3, &relation_vectors(&p)), 11);
}

#[test]
fn associative_is_one_dimensional() {
    let (p, _) = presets::associative();
    let c = OperadComponents::build(&p, 5).unwrap();
    assert_eq!(c.dims(), vec![1; 5]);
    let t = star_tower(&c).unwrap();
    assert!(t.all_hold());
    for k in 1..=5 {
        assert_eq!(c.star_power(k).coords, vec![rat(1)]);
    }
}

#[test]
fn dendriform_relation_one_in_coordinates() {
    let (p, _) = presets::dendriform();
    let c = OperadComponents::build(&p, 3).unwrap();
    let (prec, succ, id) = (c.generator(0), c.generator(1), OpElement::identity());
    let lhs = c.compose(&prec, &[prec.clone(), id.clone()]).unwrap();
    let rhs = c
        .compose(&prec, &[id.clone(), prec.clone()])
        .unwrap()
        .add(&c.compose(&prec, &[id, succ]).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn star_towers_hold_for_presets() {
    for (p, _) in [presets::dendriform(), presets::tridendriform()] {
        let c = OperadComponents::build(&p, 4).unwrap();
        let tower = star_tower(&c).unwrap();
        assert!(tower.all_hold());
        // splits 1 ≤ i < n for 2 ≤ n ≤ 4
        assert_eq!(tower.splits.len(), 1 + 2 + 3);
    }
}

#[test]
fn composition_is_associative_on_generators() {
    let (p, _) = presets::tridendriform();
    let c = OperadComponents::build(&p, 4).unwrap();
    let id = OpElement::identity();
    for m in 0..3 {
        for n in 0..3 {
            for r in 0..3 {
                let (mu, nu, rho) = (c.generator(m), c.generator(n), c.generator(r));
                let inner = c.compose(&mu, &[nu.clone(), id.clone()]).unwrap();
                let lhs = c
                    .compose(&inner, &[rho.clone(), id.clone(), id.clone()])
                    .unwrap();
                let nr = c.compose(&nu, &[rho.clone(), id.clone()]).unwrap();
                let rhs = c.compose(&mu, &[nr, id.clone()]).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn trees_reduce_consistently_with_composition() {
    let (p, _) = presets::dendriform();
    let c = OperadComponents::build(&p, 4).unwrap();
    for t in enumerate_trees(4, 2) {
        let LabeledTree::Node { label, left, right } = &t else {
            unreachable!()
        };
        let l = c.reduce_tree(left).unwrap();
        let r = c.reduce_tree(right).unwrap();
        let via_compose = c.compose(&c.generator(*label), &[l, r]).unwrap();
        assert_eq!(c.reduce_tree(&t).unwrap(), via_compose);
    }
}

fn relation_strategy() -> impl Strategy<Value = QuadraticRelation> {
    let left = prop::collection::vec((0usize..3, 0usize..3, -4i64..=4, 1i64..=3), 0..4);
    let right = prop::collection::vec((0usize..3, 0usize..3, -4i64..=4, 1i64..=3), 0..4);
    (left, right).prop_map(|(l, r)| QuadraticRelation {
        left: l
            .into_iter()
            .map(|(inner, outer, n, d)| LeftTerm {
                inner,
                outer,
                coeff: frac(n, d),
            })
            .collect(),
        right: r
            .into_iter()
            .map(|(outer, inner, n, d)| RightTerm {
                outer,
                inner,
                coeff: frac(n, d),
            })
            .collect(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn operad_files_round_trip(rels in prop::collection::vec(relation_strategy(), 0..4)) {
        let (p, ua) = presets::tridendriform();
        let Ok(q) = p.with_relations(rels) else { return Ok(()) };
        let file = OperadFile { presentation: q, unit_action: Some(ua) };
        let text = operad_to_json(&file);
        let again = parse_operad(&text).unwrap();
        prop_assert_eq!(operad_to_json(&again), text);
        let n = again.presentation.generator_count();
        for (a, b) in file.presentation.relations().iter().zip(again.presentation.relations()) {
            prop_assert_eq!(a.pair_vector(n), b.pair_vector(n));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 20,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn ideal_is_closed_under_composition(
        preset in prop::sample::select(vec!["dendriform", "tridendriform"]),
        which in any::<prop::sample::Index>(),
        context in any::<prop::sample::Index>(),
        slot in 0usize..4,
        outer in any::<bool>(),
    ) {
        let (p, _) = presets::load(preset).unwrap();
        let c = OperadComponents::build(&p, 4).unwrap();
        let ideal = c.ideal_basis(3);
        let r = which.get(&ideal);
        // arity-2 context: either r inside a generator, or a generator inside r
        let trees = enumerate_trees(2, p.generator_count());
        let t = FreeOperadElement::from_tree(context.get(&trees).clone());
        let composed = if outer {
            t.graft(slot % 2, r).unwrap()
        } else {
            r.graft(slot % 3, &t).unwrap()
        };
        prop_assert_eq!(composed.arity(), 4);
        prop_assert!(c.reduce(&composed).unwrap().is_zero());
        prop_assert!(c.reduce(r).unwrap().is_zero());
    }
}
