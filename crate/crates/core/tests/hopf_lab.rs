use braidop::braid::BraidedSpace;
use braidop::coherence::UnitAction;
use braidop::hopf::{
    check_twisted_cocommutativity, verify_axioms, AlgebraElement, CheckStatus, FreeAlgebra,
    HopfError, HopfOptions, Key, TensorElement,
};
use braidop::linalg::{rat, Rational};
use braidop::operad::{LabeledTree, OperadComponents};
use braidop::presets;

fn build(name: &str, space: BraidedSpace, k: usize) -> FreeAlgebra {
    let (p, ua) = presets::load(name).unwrap();
    let c = OperadComponents::build(&p, k).unwrap();
    FreeAlgebra::new(c, ua, space).unwrap()
}

fn algebra(name: &str, dim: usize, k: usize) -> FreeAlgebra {
    build(name, BraidedSpace::flip(dim), k)
}

fn assert_all_pass(alg: &FreeAlgebra) {
    let report = verify_axioms(alg, HopfOptions { antipode: true });
    for item in &report.items {
        assert_eq!(item.status, CheckStatus::Pass, "{item:?}");
        assert!(item.checked > 0, "{} checked nothing", item.name);
    }
    assert!(report.pass);
}

#[test]
fn dendriform_flip_dim2_k4_passes() {
    assert_all_pass(&algebra("dendriform", 2, 4));
}

#[test]
fn tridendriform_flip_k4_passes() {
    assert_all_pass(&algebra("tridendriform", 1, 4));
    assert_all_pass(&algebra("tridendriform", 2, 4));
}

#[test]
fn associative_flip_passes() {
    assert_all_pass(&algebra("associative", 1, 4));
    assert_all_pass(&algebra("associative", 2, 4));
}

#[test]
fn diagonal_braiding_passes() {
    let q = vec![vec![rat(1), rat(2)], vec![rat(3), rat(-1)]];
    assert_all_pass(&build("dendriform", BraidedSpace::diagonal(&q), 3));
}

#[test]
fn coproduct_of_x_prec_y() {
    let alg = algebra("dendriform", 2, 3);
    let prec = LabeledTree::corolla(0);
    let xy = alg.tree_element(&prec, &[0, 1]);
    let delta = alg.coproduct(&xy);

    let mut expected = xy.to_tensor().tensor(&TensorElement::units(1));
    expected = expected.add(&TensorElement::units(1).tensor(&xy.to_tensor()));
    expected.add_term(vec![Key::letter(1), Key::letter(0)], rat(1));
    assert_eq!(delta, expected, "{}", alg.render_tensor(&delta));
}

#[test]
fn letters_are_primitive_and_antipode_negates() {
    let alg = algebra("dendriform", 2, 3);
    for a in 0..2 {
        let x = AlgebraElement::letter(a);
        let mut expected = TensorElement::zero(2);
        expected.add_term(vec![Key::letter(a), Key::Unit], rat(1));
        expected.add_term(vec![Key::Unit, Key::letter(a)], rat(1));
        assert_eq!(alg.coproduct(&x), expected);
        assert_eq!(alg.antipode(&x).unwrap(), x.scale(&rat(-1)));
        assert_eq!(alg.counit(&x), rat(0));
    }
    assert_eq!(alg.counit(&AlgebraElement::unit()), rat(1));
}

#[test]
fn unit_products() {
    let alg = algebra("dendriform", 1, 3);
    let x = AlgebraElement::letter(0);
    let one = AlgebraElement::unit();
    let prec = alg.generator(0);
    let succ = alg.generator(1);
    // a ≺ 1 = a, 1 ≺ a = 0, a ≻ 1 = 0, 1 ≻ a = a.
    assert_eq!(alg.product(&prec, &x, &one).unwrap(), x);
    assert!(alg.product(&prec, &one, &x).unwrap().is_zero());
    assert!(alg.product(&succ, &x, &one).unwrap().is_zero());
    assert_eq!(alg.product(&succ, &one, &x).unwrap(), x);
    assert_eq!(alg.star_product(&one, &one).unwrap(), one);
    assert!(matches!(
        alg.product(&prec, &one, &one),
        Err(HopfError::UndefinedComposite(_))
    ));
}

#[test]
fn sigma_on_diagonal_braiding() {
    let q01 = Rational::new(5.into(), 3.into());
    let q = vec![vec![rat(2), q01.clone()], vec![rat(7), rat(-1)]];
    let alg = build("dendriform", BraidedSpace::diagonal(&q), 3);
    let b = Key::Graded {
        arity: 2,
        basis: 1,
        word: vec![1, 1],
    };
    let image = alg.sigma(&TensorElement::pure(vec![Key::letter(0), b.clone()]));
    let mut expected = TensorElement::zero(2);
    expected.add_term(vec![b.clone(), Key::letter(0)], &q01 * &q01);
    assert_eq!(image, expected);

    let back = alg.sigma(&TensorElement::pure(vec![b.clone(), Key::letter(0)]));
    let mut expected = TensorElement::zero(2);
    expected.add_term(vec![Key::letter(0), b], rat(49));
    assert_eq!(back, expected);
}

#[test]
fn relations_vanish_under_coproduct() {
    for name in presets::NAMES {
        let alg = algebra(name, 2, 3);
        let p = alg.components().presentation().clone();
        for r in p.relations() {
            let fv = r.free_vector();
            for word in [[0, 1, 0], [1, 1, 0], [0, 0, 0]] {
                let mut elem = AlgebraElement::zero();
                let mut delta = TensorElement::zero(2);
                for (tree, c) in fv.terms() {
                    elem = elem.add(&alg.tree_element(tree, &word).scale(c));
                    delta = delta.add(&alg.coproduct_tree(tree, &word).unwrap().scale(c));
                }
                assert!(elem.is_zero(), "{name}");
                assert!(delta.is_zero(), "{name}: {}", alg.render_tensor(&delta));
            }
        }
    }
}

#[test]
fn corrupted_unit_action_breaks_well_definedness() {
    let (p, _) = presets::dendriform();
    let ua = UnitAction::new(vec![rat(1), rat(0)], vec![rat(1), rat(0)]);
    let c = OperadComponents::build(&p, 3).unwrap();
    let alg = FreeAlgebra::new(c, ua, BraidedSpace::flip(1)).unwrap();
    let report = verify_axioms(&alg, HopfOptions { antipode: false });
    assert!(!report.pass);
    let item = report.item("well_definedness").unwrap();
    assert_eq!(item.status, CheckStatus::Fail);
    assert!(item.witness.is_some());
    assert_eq!(report.item("antipode").map(|i| i.status), None);
}

#[test]
fn twisted_cocommutativity_implication() {
    let q_inv = vec![
        vec![rat(1), rat(2)],
        vec![Rational::new(1.into(), 2.into()), rat(-1)],
    ];
    let q_non = vec![vec![rat(1), rat(2)], vec![rat(3), rat(-1)]];
    let mut spaces = vec![
        BraidedSpace::flip(1),
        BraidedSpace::flip(2),
        BraidedSpace::diagonal(&q_inv),
        BraidedSpace::diagonal(&q_non),
    ];
    spaces.push(BraidedSpace::diagonal(&[vec![rat(-1)]]));
    let mut morphism_seen = false;
    for name in presets::NAMES {
        for space in &spaces {
            let alg = build(name, space.clone(), 3);
            let t = check_twisted_cocommutativity(&alg);
            if t.invertible && t.morphism_holds {
                morphism_seen = true;
                assert!(t.cocomm_holds, "{name}: {:?}", t.cocomm_witness);
            }
        }
    }
    assert!(morphism_seen);
}
