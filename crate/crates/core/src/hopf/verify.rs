//! Exhaustive verification of the braided bialgebra and Hopf axioms on
//! every basis element of total degree `≤ K`.

use std::collections::HashMap;

use serde::Serialize;

use super::{AlgebraElement, FreeAlgebra, HopfError, Key, TensorElement};
use crate::linalg::Rational;
use crate::operad::LabeledTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Every instance left the truncation.
    Inconclusive,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportItem {
    pub name: String,
    pub status: CheckStatus,
    /// Instances compared exactly.
    pub checked: usize,
    /// Instances that left the truncation.
    pub inconclusive: usize,
    /// Instances needing an undefined product of two units.
    pub skipped: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub pass: bool,
    pub items: Vec<ReportItem>,
}

impl HopfReport {
    fn new(items: Vec<ReportItem>) -> Self {
        Self {
            pass: items.iter().all(|i| i.status != CheckStatus::Fail),
            items,
        }
    }

    pub fn item(&self, name: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| i.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HopfOptions {
    /// Also build the antipode and check both convolution identities.
    pub antipode: bool,
}

struct Tally {
    name: String,
    checked: usize,
    inconclusive: usize,
    skipped: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            inconclusive: 0,
            skipped: 0,
            witness: None,
        }
    }

    fn compare(
        &mut self,
        lhs: &TensorElement,
        rhs: &TensorElement,
        witness: impl FnOnce() -> String,
    ) {
        if lhs.overflow() || rhs.overflow() {
            self.inconclusive += 1;
            return;
        }
        self.checked += 1;
        if lhs != rhs && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    /// Runs one instance, counting an undefined unit product as skipped.
    fn run(
        &mut self,
        f: impl FnOnce() -> Result<(TensorElement, TensorElement), HopfError>,
        witness: impl FnOnce() -> String,
    ) {
        match f() {
            Ok((l, r)) => self.compare(&l, &r, witness),
            Err(_) => self.skipped += 1,
        }
    }

    fn finish(self) -> ReportItem {
        let status = if self.witness.is_some() {
            CheckStatus::Fail
        } else if self.checked > 0 {
            CheckStatus::Pass
        } else if self.inconclusive > 0 {
            CheckStatus::Inconclusive
        } else {
            CheckStatus::Skipped
        };
        ReportItem {
            name: self.name,
            status,
            checked: self.checked,
            inconclusive: self.inconclusive,
            skipped: self.skipped,
            witness: self.witness,
        }
    }
}

fn pairs(keys: &[Key], max: usize) -> Vec<(&Key, &Key)> {
    let mut out = Vec::new();
    for a in keys {
        for b in keys {
            if a.degree() + b.degree() <= max {
                out.push((a, b));
            }
        }
    }
    out
}

fn triples(keys: &[Key], max: usize) -> Vec<(&Key, &Key, &Key)> {
    let mut out = Vec::new();
    for (a, b) in pairs(keys, max) {
        for c in keys {
            if a.degree() + b.degree() + c.degree() <= max {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn describe_pair(alg: &FreeAlgebra, a: &Key, b: &Key) -> String {
    format!("{} ⊗ {}", alg.render_key(a), alg.render_key(b))
}

fn describe_triple(alg: &FreeAlgebra, a: &Key, b: &Key, c: &Key) -> String {
    format!(
        "{} ⊗ {} ⊗ {}",
        alg.render_key(a),
        alg.render_key(b),
        alg.render_key(c)
    )
}

fn render_decorated(alg: &FreeAlgebra, t: &LabeledTree, word: &[usize]) -> String {
    match t {
        LabeledTree::Leaf => format!("x{}", word[0]),
        LabeledTree::Node { label, left, right } => {
            let (u, v) = word.split_at(left.arity());
            format!(
                "{}({}, {})",
                alg.components().presentation().generator_names()[*label],
                render_decorated(alg, left, u),
                render_decorated(alg, right, v)
            )
        }
    }
}

/// `Δ` through every free tree of arity `3..=K` against `Δ` of its class.
/// A mismatch exhibits two representatives of one class with different
/// coproducts.
fn well_definedness(alg: &FreeAlgebra) -> ReportItem {
    let mut tally = Tally::new("well_definedness");
    let d = alg.space().dim();
    for k in 3..=alg.max_degree() {
        for t in alg.components().free_trees(k) {
            for word in crate::braid::TensorVector::all_words(d, k) {
                let class = alg.tree_element(t, &word);
                tally.run(
                    || Ok((alg.coproduct_tree(t, &word)?, alg.coproduct(&class))),
                    || {
                        let reps: Vec<String> = class
                            .terms()
                            .map(|(key, c)| {
                                format!(
                                    "{}·{}",
                                    crate::linalg::format_rational(c),
                                    alg.render_key(key)
                                )
                            })
                            .collect();
                        format!(
                            "{} = {} in P_{k}, but Δ through the two trees differs",
                            render_decorated(alg, t, &word),
                            reps.join(" + ")
                        )
                    },
                );
            }
        }
    }
    tally.finish()
}

/// `Δ(μ(a, b)) = μ(Δa, Δb)` for every generator, with `μ` acting on
/// `A⁺ ⊗ A⁺` by the `⊠` rule.
fn algebra_morphism(alg: &FreeAlgebra, keys: &[Key]) -> ReportItem {
    let mut tally = Tally::new("algebra_morphism");
    let n = alg.components().generator_count();
    for g in 0..n {
        let mu = alg.generator(g);
        for (a, b) in pairs(keys, alg.max_degree()) {
            tally.run(
                || {
                    let p = alg.product_keys(&mu, a, b)?;
                    let lhs = alg.coproduct(&p);
                    let rhs =
                        alg.boxtimes_apply(&mu, &alg.coproduct_key(a), &alg.coproduct_key(b))?;
                    Ok((lhs, rhs))
                },
                || {
                    format!(
                        "generator {}: {}",
                        alg.components().presentation().generator_names()[g],
                        describe_pair(alg, a, b)
                    )
                },
            );
        }
    }
    tally.finish()
}

/// `σ(Id ⊗ μ) = (μ ⊗ Id)σ₂σ₁` and `σ(μ ⊗ Id) = (Id ⊗ μ)σ₁σ₂`.
fn braided_product(alg: &FreeAlgebra, keys: &[Key], name: String, mu: &[Rational]) -> ReportItem {
    let mut tally = Tally::new(name);
    for (a, b, c) in triples(keys, alg.max_degree()) {
        let t = TensorElement::pure(vec![a.clone(), b.clone(), c.clone()]);
        tally.run(
            || {
                let lhs = alg.sigma(&alg.multiply_at(&t, 1, mu)?);
                let rhs = alg.multiply_at(&alg.sigma_at(&alg.sigma_at(&t, 0), 1), 0, mu)?;
                Ok((lhs, rhs))
            },
            || format!("σ(Id ⊗ μ) on {}", describe_triple(alg, a, b, c)),
        );
        tally.run(
            || {
                let lhs = alg.sigma(&alg.multiply_at(&t, 0, mu)?);
                let rhs = alg.multiply_at(&alg.sigma_at(&alg.sigma_at(&t, 1), 0), 1, mu)?;
                Ok((lhs, rhs))
            },
            || format!("σ(μ ⊗ Id) on {}", describe_triple(alg, a, b, c)),
        );
    }
    tally.finish()
}

/// `σ(a ⊗ 1) = 1 ⊗ a` and `σ(1 ⊗ a) = a ⊗ 1`.
fn unit_crossing(alg: &FreeAlgebra, keys: &[Key]) -> ReportItem {
    let mut tally = Tally::new("ba2");
    for a in keys {
        let l = TensorElement::pure(vec![a.clone(), Key::Unit]);
        let r = TensorElement::pure(vec![Key::Unit, a.clone()]);
        tally.compare(&alg.sigma(&l), &r, || {
            format!("σ({} ⊗ 1)", alg.render_key(a))
        });
        tally.compare(&alg.sigma(&r), &l, || {
            format!("σ(1 ⊗ {})", alg.render_key(a))
        });
    }
    tally.finish()
}

/// `σ₁σ₂(Δ ⊗ Id) = (Id ⊗ Δ)σ` and `σ₂σ₁(Id ⊗ Δ) = (Δ ⊗ Id)σ`.
fn braided_coproduct(alg: &FreeAlgebra, keys: &[Key]) -> ReportItem {
    let mut tally = Tally::new("bc1");
    for (a, b) in pairs(keys, alg.max_degree()) {
        let t = TensorElement::pure(vec![a.clone(), b.clone()]);
        let st = alg.sigma(&t);
        let lhs = alg.sigma_at(&alg.sigma_at(&alg.coproduct_at(&t, 0), 1), 0);
        let rhs = alg.coproduct_at(&st, 1);
        tally.compare(&lhs, &rhs, || {
            format!("σ₁σ₂(Δ ⊗ Id) on {}", describe_pair(alg, a, b))
        });
        let lhs = alg.sigma_at(&alg.sigma_at(&alg.coproduct_at(&t, 1), 0), 1);
        let rhs = alg.coproduct_at(&st, 0);
        tally.compare(&lhs, &rhs, || {
            format!("σ₂σ₁(Id ⊗ Δ) on {}", describe_pair(alg, a, b))
        });
    }
    tally.finish()
}

/// `(ε ⊗ Id)σ = Id ⊗ ε` and `(Id ⊗ ε)σ = ε ⊗ Id` on `A⁺ ⊗ A⁺`.
fn braided_counit(alg: &FreeAlgebra, keys: &[Key]) -> ReportItem {
    let mut tally = Tally::new("bc2");
    for (a, b) in pairs(keys, alg.max_degree()) {
        let t = TensorElement::pure(vec![a.clone(), b.clone()]);
        let st = alg.sigma(&t);
        tally.compare(&alg.counit_at(&st, 0), &alg.counit_at(&t, 1), || {
            format!("(ε ⊗ Id)σ on {}", describe_pair(alg, a, b))
        });
        tally.compare(&alg.counit_at(&st, 1), &alg.counit_at(&t, 0), || {
            format!("(Id ⊗ ε)σ on {}", describe_pair(alg, a, b))
        });
    }
    tally.finish()
}

fn counit_law(alg: &FreeAlgebra, keys: &[Key]) -> ReportItem {
    let mut tally = Tally::new("counit");
    for a in keys {
        let delta = alg.coproduct_key(a);
        let id = TensorElement::pure(vec![a.clone()]);
        tally.compare(&alg.counit_at(&delta, 0), &id, || {
            format!("(ε ⊗ Id)Δ({})", alg.render_key(a))
        });
        tally.compare(&alg.counit_at(&delta, 1), &id, || {
            format!("(Id ⊗ ε)Δ({})", alg.render_key(a))
        });
    }
    tally.finish()
}

fn coassociativity(alg: &FreeAlgebra, keys: &[Key]) -> ReportItem {
    let mut tally = Tally::new("coassociativity");
    for a in keys {
        let delta = alg.coproduct_key(a);
        tally.compare(
            &alg.coproduct_at(&delta, 0),
            &alg.coproduct_at(&delta, 1),
            || format!("Δ({})", alg.render_key(a)),
        );
    }
    tally.finish()
}

/// `Δ(a ⋆ b) = (⋆ ⊗ ⋆)σ₂(Δa ⊗ Δb)`.
fn compatibility(alg: &FreeAlgebra, keys: &[Key]) -> ReportItem {
    let mut tally = Tally::new("compatibility");
    let star = alg.star().to_vec();
    for (a, b) in pairs(keys, alg.max_degree()) {
        tally.run(
            || {
                let lhs = alg.coproduct(&alg.product_keys(&star, a, b)?);
                let t = alg.coproduct_key(a).tensor(&alg.coproduct_key(b));
                let crossed = alg.sigma_at(&t, 1);
                let rhs = alg.multiply_at(&alg.multiply_at(&crossed, 0, &star)?, 1, &star)?;
                Ok((lhs, rhs))
            },
            || describe_pair(alg, a, b),
        );
    }
    tally.finish()
}

/// `Δ(A^{(n)}) ⊆ Σ A^{(i)} ⊗ A^{(n−i)}`.
fn grading(alg: &FreeAlgebra, keys: &[Key]) -> ReportItem {
    let mut tally = Tally::new("grading");
    for a in keys {
        let delta = alg.coproduct_key(a);
        let kept = delta.filter(|k| k[0].degree() + k[1].degree() == a.degree());
        tally.compare(&delta, &kept, || format!("Δ({})", alg.render_key(a)));
    }
    tally.finish()
}

/// `⋆(S ⊗ Id)Δ = ε1 = ⋆(Id ⊗ S)Δ`.
fn antipode_identity(
    alg: &FreeAlgebra,
    keys: &[Key],
    table: &HashMap<Key, AlgebraElement>,
) -> ReportItem {
    let mut tally = Tally::new("antipode");
    let star = alg.star().to_vec();
    for a in keys {
        let delta = alg.coproduct_key(a);
        let expected = if a.is_unit() {
            TensorElement::units(1)
        } else {
            TensorElement::zero(1)
        };
        for side in [0, 1] {
            tally.run(
                || {
                    Ok((
                        alg.multiply_at(&alg.antipode_at(&delta, side, table), 0, &star)?,
                        expected.clone(),
                    ))
                },
                || {
                    let form = if side == 0 {
                        "⋆(S ⊗ Id)Δ"
                    } else {
                        "⋆(Id ⊗ S)Δ"
                    };
                    format!("{form}({})", alg.render_key(a))
                },
            );
        }
    }
    tally.finish()
}

/// Runs the full axiom suite.
pub fn verify_axioms(alg: &FreeAlgebra, opts: HopfOptions) -> HopfReport {
    let keys = alg.basis_keys();
    let mut items = vec![
        well_definedness(alg),
        algebra_morphism(alg, &keys),
        braided_product(alg, &keys, "ba1".to_string(), alg.star()),
        unit_crossing(alg, &keys),
    ];
    let names = alg.components().presentation().generator_names().to_vec();
    for (g, name) in names.iter().enumerate() {
        items.push(braided_product(
            alg,
            &keys,
            format!("braided_compatibility:{name}"),
            &alg.generator(g),
        ));
    }
    items.extend([
        braided_coproduct(alg, &keys),
        braided_counit(alg, &keys),
        counit_law(alg, &keys),
        coassociativity(alg, &keys),
        compatibility(alg, &keys),
        grading(alg, &keys),
    ]);
    if opts.antipode {
        let item = match alg.antipode_table() {
            Ok(table) => antipode_identity(alg, &keys, &table),
            Err(e) => ReportItem {
                name: "antipode".to_string(),
                status: CheckStatus::Fail,
                checked: 0,
                inconclusive: 0,
                skipped: 0,
                witness: Some(e.to_string()),
            },
        };
        items.push(item);
    }
    HopfReport::new(items)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistedCocommutativity {
    /// `σ` on `V` is invertible, hence so is `σ_A` on the truncation.
    pub invertible: bool,
    pub morphism_holds: bool,
    pub cocomm_holds: bool,
    pub morphism_witness: Option<String>,
    pub cocomm_witness: Option<String>,
}

/// `morphism_holds`: `σ_A` is invertible and commutes with every generator
/// acting on `A⁺ ⊗ A⁺`. `cocomm_holds`: `σ_A Δ = Δ` on every basis element.
pub fn check_twisted_cocommutativity(alg: &FreeAlgebra) -> TwistedCocommutativity {
    let keys = alg.basis_keys();
    let max = alg.max_degree();
    let invertible = alg.space().is_invertible();

    let tensor_keys: Vec<(usize, TensorElement, String)> = pairs(&keys, max)
        .into_iter()
        .map(|(a, b)| {
            (
                a.degree() + b.degree(),
                TensorElement::pure(vec![a.clone(), b.clone()]),
                describe_pair(alg, a, b),
            )
        })
        .collect();
    let mut morphism = Tally::new("morphism");
    let names = alg.components().presentation().generator_names().to_vec();
    for (g, name) in names.iter().enumerate() {
        let mu = alg.generator(g);
        for (dx, x, dsx) in &tensor_keys {
            for (dy, y, dsy) in &tensor_keys {
                if dx + dy > max {
                    continue;
                }
                morphism.run(
                    || {
                        let lhs = alg.sigma(&alg.boxtimes_apply(&mu, x, y)?);
                        let rhs = alg.boxtimes_apply(&mu, &alg.sigma(x), &alg.sigma(y))?;
                        Ok((lhs, rhs))
                    },
                    || format!("{name}({dsx}, {dsy})"),
                );
            }
        }
    }
    let mut cocomm = Tally::new("cocomm");
    for a in &keys {
        let delta = alg.coproduct_key(a);
        cocomm.compare(&alg.sigma(&delta), &delta, || {
            format!("Δ({})", alg.render_key(a))
        });
    }
    let morphism = morphism.finish();
    let cocomm = cocomm.finish();
    TwistedCocommutativity {
        invertible,
        morphism_holds: invertible && morphism.status != CheckStatus::Fail,
        cocomm_holds: cocomm.status != CheckStatus::Fail,
        morphism_witness: if invertible {
            morphism.witness
        } else {
            Some("braiding is not invertible".to_string())
        },
        cocomm_witness: cocomm.witness,
    }
}
