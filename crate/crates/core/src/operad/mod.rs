//! Binary nonsymmetric operads given by generators and quadratic relations.
//!
//! The free operad in arity `k` has the labeled planar binary trees with `k`
//! leaves as a basis. The ideal generated by the relations is computed
//! arity by arity and the components `P_k = Free_k / Ideal_k` are realized
//! by row reduction: the trees that are not pivots of the ideal's reduced
//! echelon form are the basis representatives, and every other tree is
//! rewritten in terms of them.

mod presentation;
mod tree;

pub use presentation::{
    relation_vectors, LeftTerm, OperadPresentation, QuadraticRelation, RightTerm,
};
pub use tree::{enumerate_trees, FreeOperadElement, LabeledTree};

use std::collections::HashMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{rref, Matrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperadError {
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("star must be a nonzero vector over the generators")]
    BadStar,
    #[error("relation {0} has no terms")]
    EmptyRelation(usize),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("leaf position {position} out of range for arity {arity}")]
    IndexOutOfRange { position: usize, arity: usize },
    #[error("arity {arity} exceeds the truncation degree {max}")]
    ArityOverflow { arity: usize, max: usize },
    #[error("truncation degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("expected {expected} arguments, got {found}")]
    ArgumentCount { expected: usize, found: usize },
    #[error("star is not associative")]
    NotAssociative { difference: Vec<Rational> },
}

/// Element of `P_k` in the coordinates of its representative basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpElement {
    pub arity: usize,
    pub coords: Vec<Rational>,
}

impl OpElement {
    pub fn zero(arity: usize, dim: usize) -> Self {
        Self {
            arity,
            coords: vec![Rational::zero(); dim],
        }
    }

    /// The operadic identity `I` in `P₁`.
    pub fn identity() -> Self {
        Self {
            arity: 1,
            coords: vec![Rational::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        Self {
            arity: self.arity,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        Self {
            arity: self.arity,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            arity: self.arity,
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }

    fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

type Sparse = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
struct ArityComponent {
    trees: Vec<LabeledTree>,
    index: HashMap<LabeledTree, usize>,
    /// Nonzero rows of the ideal's reduced echelon form, sparse.
    ideal_rows: Vec<Sparse>,
    /// Free-tree indices of the basis representatives.
    basis: Vec<usize>,
    /// For every free tree, its class in basis coordinates.
    reduce_table: Vec<Sparse>,
}

impl ArityComponent {
    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The truncated operad `P_1, …, P_K` with composition tables.
#[derive(Clone, Debug)]
pub struct OperadComponents {
    presentation: OperadPresentation,
    max_arity: usize,
    arities: Vec<ArityComponent>,
    /// `products[g][i-1][j-1][b1 * dim_j + b2]` is the class of
    /// `γ(g; rep(b1), rep(b2))`, for `i + j ≤ K`.
    products: Vec<Vec<Vec<Vec<Sparse>>>>,
    star_powers: Vec<OpElement>,
    warnings: Vec<String>,
}

fn compositions3(k: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..k {
        for b in 1..k - a {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

impl OperadComponents {
    pub fn build(p: &OperadPresentation, max_arity: usize) -> Result<Self, OperadError> {
        if max_arity < 2 {
            return Err(OperadError::DegreeTooSmall(max_arity));
        }
        let n = p.generator_count();
        let mut warnings = Vec::new();
        let relations: Vec<FreeOperadElement> = relation_vectors(p)
            .into_iter()
            .enumerate()
            .filter_map(|(i, v)| {
                if v.is_zero() {
                    warnings.push(format!("relation {} vanishes identically; skipped", i + 1));
                    None
                } else {
                    Some(v)
                }
            })
            .collect();

        let mut arities: Vec<ArityComponent> = Vec::with_capacity(max_arity);
        for k in 1..=max_arity {
            let trees = enumerate_trees(k, n);
            let index: HashMap<LabeledTree, usize> = trees
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, t)| (t, i))
                .collect();
            let spanning = if k >= 3 {
                ideal_spanning_set(k, n, &relations, &arities, &index)
            } else {
                Vec::new()
            };
            let ech = rref(
                &Matrix::from_rows(trees.len(), spanning).expect("rows sized to the free basis"),
            );
            let ideal_rows: Vec<Sparse> = (0..ech.rank)
                .map(|r| {
                    ech.reduced
                        .row(r)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| (j, c.clone()))
                        .collect()
                })
                .collect();
            let mut pivot_row = vec![None; trees.len()];
            for (r, &p) in ech.pivot_cols.iter().enumerate() {
                pivot_row[p] = Some(r);
            }
            let basis: Vec<usize> = (0..trees.len())
                .filter(|&t| pivot_row[t].is_none())
                .collect();
            let mut basis_pos = vec![None; trees.len()];
            for (b, &t) in basis.iter().enumerate() {
                basis_pos[t] = Some(b);
            }
            let reduce_table = (0..trees.len())
                .map(|t| match pivot_row[t] {
                    None => vec![(basis_pos[t].unwrap(), Rational::one())],
                    // t ≡ t − row = −Σ_{free f} row[f]·f
                    Some(r) => ideal_rows[r]
                        .iter()
                        .filter(|(f, _)| *f != t)
                        .map(|(f, c)| (basis_pos[*f].expect("rref row off-pivot"), -c.clone()))
                        .collect(),
                })
                .collect();
            arities.push(ArityComponent {
                trees,
                index,
                ideal_rows,
                basis,
                reduce_table,
            });
        }

        let mut comps = Self {
            presentation: p.clone(),
            max_arity,
            arities,
            products: Vec::new(),
            star_powers: Vec::new(),
            warnings,
        };
        comps.products = (0..n)
            .map(|g| {
                (1..max_arity)
                    .map(|i| {
                        (1..max_arity)
                            .map(|j| {
                                if i + j > max_arity {
                                    return Vec::new();
                                }
                                let mut cells = Vec::new();
                                for b1 in 0..comps.dim(i) {
                                    for b2 in 0..comps.dim(j) {
                                        let t = LabeledTree::node(
                                            g,
                                            comps.representative(i, b1).clone(),
                                            comps.representative(j, b2).clone(),
                                        );
                                        cells.push(comps.reduce_tree_sparse(&t).to_vec());
                                    }
                                }
                                cells
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();

        let star2 = OpElement {
            arity: 2,
            coords: p.star().to_vec(),
        };
        let mut powers = vec![OpElement::identity(), star2.clone()];
        for k in 3..=max_arity {
            let prev = powers[k - 2].clone();
            powers.push(comps.compose(&star2, &[prev, OpElement::identity()])?);
        }
        comps.star_powers = powers;
        Ok(comps)
    }

    pub fn presentation(&self) -> &OperadPresentation {
        &self.presentation
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn generator_count(&self) -> usize {
        self.presentation.generator_count()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `dim P_k`, zero beyond the truncation.
    pub fn dim(&self, k: usize) -> usize {
        self.arities
            .get(k.wrapping_sub(1))
            .map_or(0, ArityComponent::dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        (1..=self.max_arity).map(|k| self.dim(k)).collect()
    }

    pub fn free_trees(&self, k: usize) -> &[LabeledTree] {
        &self.arities[k - 1].trees
    }

    /// Rank of the ideal in arity `k`.
    pub fn ideal_rank(&self, k: usize) -> usize {
        self.arities[k - 1].ideal_rows.len()
    }

    /// Spanning vectors of `Ideal_k` as free-operad elements.
    pub fn ideal_basis(&self, k: usize) -> Vec<FreeOperadElement> {
        let comp = &self.arities[k - 1];
        comp.ideal_rows
            .iter()
            .map(|row| {
                let mut e = FreeOperadElement::zero(k);
                for (t, c) in row {
                    e.add_term(comp.trees[*t].clone(), c.clone());
                }
                e
            })
            .collect()
    }

    pub fn representative(&self, k: usize, b: usize) -> &LabeledTree {
        let comp = &self.arities[k - 1];
        &comp.trees[comp.basis[b]]
    }

    fn check_arity(&self, k: usize) -> Result<(), OperadError> {
        if k == 0 || k > self.max_arity {
            Err(OperadError::ArityOverflow {
                arity: k,
                max: self.max_arity,
            })
        } else {
            Ok(())
        }
    }

    fn reduce_tree_sparse(&self, t: &LabeledTree) -> &[(usize, Rational)] {
        let comp = &self.arities[t.arity() - 1];
        &comp.reduce_table[comp.index[t]]
    }

    pub fn reduce_tree(&self, t: &LabeledTree) -> Result<OpElement, OperadError> {
        let k = t.arity();
        self.check_arity(k)?;
        let mut out = OpElement::zero(k, self.dim(k));
        for (b, c) in self.reduce_tree_sparse(t) {
            out.coords[*b] += c;
        }
        Ok(out)
    }

    /// Class of a free element in `P_k`.
    pub fn reduce(&self, e: &FreeOperadElement) -> Result<OpElement, OperadError> {
        let k = e.arity();
        self.check_arity(k)?;
        let mut out = OpElement::zero(k, self.dim(k));
        for (t, c) in e.terms() {
            for (b, d) in self.reduce_tree_sparse(t) {
                out.coords[*b] += c * d;
            }
        }
        Ok(out)
    }

    /// The element of `P₂` for a generator.
    pub fn generator(&self, g: usize) -> OpElement {
        OpElement {
            arity: 2,
            coords: self.presentation.generator_vector(g),
        }
    }

    /// `γ(root; args…)`, multilinear, through representatives.
    pub fn compose(&self, root: &OpElement, args: &[OpElement]) -> Result<OpElement, OperadError> {
        if args.len() != root.arity {
            return Err(OperadError::ArgumentCount {
                expected: root.arity,
                found: args.len(),
            });
        }
        let total: usize = args.iter().map(|a| a.arity).sum();
        self.check_arity(total)?;
        let mut out = OpElement::zero(total, self.dim(total));
        for (b, c) in root.support() {
            let rep = self.representative(root.arity, b);
            let mut chosen = Vec::with_capacity(args.len());
            self.expand_args(rep, args, &mut chosen, c.clone(), &mut out);
        }
        Ok(out)
    }

    fn expand_args(
        &self,
        rep: &LabeledTree,
        args: &[OpElement],
        chosen: &mut Vec<LabeledTree>,
        coeff: Rational,
        out: &mut OpElement,
    ) {
        let depth = chosen.len();
        if depth == args.len() {
            let t = rep.substitute_leaves(chosen);
            for (b, d) in self.reduce_tree_sparse(&t) {
                out.coords[*b] += &coeff * d;
            }
            return;
        }
        let arg = &args[depth];
        for (b, c) in arg.support() {
            chosen.push(self.representative(arg.arity, b).clone());
            self.expand_args(rep, args, chosen, &coeff * c, out);
            chosen.pop();
        }
    }

    /// Class of `γ(g; rep(b1), rep(b2))` with `rep(b1) ∈ P_i`,
    /// `rep(b2) ∈ P_j`, or `None` past the truncation.
    pub fn binary_product(
        &self,
        g: usize,
        (i, b1): (usize, usize),
        (j, b2): (usize, usize),
    ) -> Option<&[(usize, Rational)]> {
        if i + j > self.max_arity {
            return None;
        }
        Some(&self.products[g][i - 1][j - 1][b1 * self.dim(j) + b2])
    }

    /// `⋆_k` for `1 ≤ k ≤ K`, via `⋆_k = γ(⋆; ⋆_{k-1}, I)`.
    pub fn star_power(&self, k: usize) -> &OpElement {
        &self.star_powers[k - 1]
    }

    pub fn star(&self) -> &OpElement {
        self.star_power(2)
    }
}

fn sparse_to_dense(
    len: usize,
    terms: impl IntoIterator<Item = (usize, Rational)>,
) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    for (i, c) in terms {
        v[i] += c;
    }
    v
}

/// Spanning set of `Ideal_k` for `k ≥ 3`: relations with arbitrary trees in
/// their three leaves, plus a generator at the root over one lower-arity
/// ideal element and one arbitrary tree.
fn ideal_spanning_set(
    k: usize,
    n: usize,
    relations: &[FreeOperadElement],
    lower: &[ArityComponent],
    index: &HashMap<LabeledTree, usize>,
) -> Vec<Vec<Rational>> {
    let len = index.len();
    let mut out = Vec::new();
    for parts in compositions3(k) {
        let [a, b, c] = parts.map(|s| &lower[s - 1].trees);
        for r in relations {
            for t1 in a {
                for t2 in b {
                    for t3 in c {
                        let subs = [t1.clone(), t2.clone(), t3.clone()];
                        let terms = r
                            .terms()
                            .map(|(t, coeff)| (index[&t.substitute_leaves(&subs)], coeff.clone()));
                        out.push(sparse_to_dense(len, terms));
                    }
                }
            }
        }
    }
    for i in 3..k {
        let j = k - i;
        let ideal = &lower[i - 1];
        for g in 0..n {
            for row in &ideal.ideal_rows {
                for t in &lower[j - 1].trees {
                    let left = row.iter().map(|(u, coeff)| {
                        let tree = LabeledTree::node(g, ideal.trees[*u].clone(), t.clone());
                        (index[&tree], coeff.clone())
                    });
                    out.push(sparse_to_dense(len, left));
                    let right = row.iter().map(|(u, coeff)| {
                        let tree = LabeledTree::node(g, t.clone(), ideal.trees[*u].clone());
                        (index[&tree], coeff.clone())
                    });
                    out.push(sparse_to_dense(len, right));
                }
            }
        }
    }
    out
}

/// `γ(⋆; ⋆_i, ⋆_{n-i}) = ⋆_n` for one split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCheck {
    pub n: usize,
    pub i: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarTower {
    pub powers: Vec<OpElement>,
    pub splits: Vec<SplitCheck>,
}

impl StarTower {
    pub fn all_hold(&self) -> bool {
        self.splits.iter().all(|s| s.holds)
    }
}

/// Checks that `⋆` is associative in `P₃` and, if so, that
/// `γ(⋆; ⋆_i, ⋆_{n-i}) = ⋆_n` for every `1 ≤ i < n ≤ K`. The endpoint splits
/// `i ∈ {0, n}` involve the adjoined unit and are checked by
/// [`crate::coherence::verify_star_units`].
pub fn star_tower(c: &OperadComponents) -> Result<StarTower, OperadError> {
    c.check_arity(3)?;
    let star = c.star();
    let id = OpElement::identity();
    let lhs = c.compose(star, &[star.clone(), id.clone()])?;
    let rhs = c.compose(star, &[id, star.clone()])?;
    let difference = lhs.sub(&rhs);
    if !difference.is_zero() {
        return Err(OperadError::NotAssociative {
            difference: difference.coords,
        });
    }
    let mut splits = Vec::new();
    for n in 2..=c.max_arity() {
        for i in 1..n {
            let v = c.compose(
                star,
                &[c.star_power(i).clone(), c.star_power(n - i).clone()],
            )?;
            splits.push(SplitCheck {
                n,
                i,
                holds: &v == c.star_power(n),
            });
        }
    }
    Ok(StarTower {
        powers: c.star_powers.clone(),
        splits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::presets;

    #[test]
    fn free_binary_operad_is_catalan() {
        let p = OperadPresentation::new("free", vec!["m".into()], vec![rat(1)], vec![]).unwrap();
        let c = OperadComponents::build(&p, 4).unwrap();
        assert_eq!(c.dims(), vec![1, 1, 2, 5]);
    }

    #[test]
    fn dendriform_relation_vectors() {
        let p = presets::dendriform().0;
        let v = relation_vectors(&p);
        let (prec, succ) = (0, 1);
        assert_eq!(v[0].coeff(&LabeledTree::left_comb(prec, prec)), rat(1));
        assert_eq!(v[0].coeff(&LabeledTree::right_comb(prec, prec)), rat(-1));
        assert_eq!(v[0].coeff(&LabeledTree::right_comb(prec, succ)), rat(-1));
        assert_eq!(v[0].terms().count(), 3);
        assert_eq!(v[1].coeff(&LabeledTree::left_comb(prec, succ)), rat(1));
        assert_eq!(v[1].coeff(&LabeledTree::right_comb(succ, prec)), rat(-1));
        assert_eq!(v[1].terms().count(), 2);
    }

    #[test]
    fn tridendriform_relation_seven() {
        let p = presets::tridendriform().0;
        let v = relation_vectors(&p);
        let mid = p.generator_index("mid").unwrap();
        assert_eq!(v[6].coeff(&LabeledTree::left_comb(mid, mid)), rat(1));
        assert_eq!(v[6].coeff(&LabeledTree::right_comb(mid, mid)), rat(-1));
        assert_eq!(v[6].terms().count(), 2);
    }

    #[test]
    fn representatives_reduce_to_unit_vectors() {
        let c = OperadComponents::build(&presets::dendriform().0, 4).unwrap();
        for k in 1..=4 {
            for b in 0..c.dim(k) {
                let v = c.reduce_tree(c.representative(k, b)).unwrap();
                let mut e = vec![rat(0); c.dim(k)];
                e[b] = rat(1);
                assert_eq!(v.coords, e);
            }
            for r in c.ideal_basis(k) {
                assert!(c.reduce(&r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn compose_units_and_overflow() {
        let c = OperadComponents::build(&presets::dendriform().0, 3).unwrap();
        let prec = c.generator(0);
        assert_eq!(
            c.compose(&OpElement::identity(), std::slice::from_ref(&prec))
                .unwrap(),
            prec
        );
        assert_eq!(
            c.compose(&prec, &[OpElement::identity(), OpElement::identity()])
                .unwrap(),
            prec
        );
        let err = c.compose(&prec, &[c.star_power(3).clone(), OpElement::identity()]);
        assert!(matches!(
            err,
            Err(OperadError::ArityOverflow { arity: 4, max: 3 })
        ));
        let err = c.compose(&prec, &[OpElement::identity()]);
        assert!(matches!(err, Err(OperadError::ArgumentCount { .. })));
    }

    #[test]
    fn zero_relation_is_skipped_with_warning() {
        let rel = QuadraticRelation {
            left: vec![
                LeftTerm {
                    inner: 0,
                    outer: 0,
                    coeff: rat(1),
                },
                LeftTerm {
                    inner: 0,
                    outer: 0,
                    coeff: rat(-1),
                },
            ],
            right: vec![],
        };
        let p = OperadPresentation::new("z", vec!["m".into()], vec![rat(1)], vec![rel]).unwrap();
        let c = OperadComponents::build(&p, 3).unwrap();
        assert_eq!(c.warnings().len(), 1);
        assert_eq!(c.dims(), vec![1, 1, 2]);
    }

    #[test]
    fn bad_presentations() {
        assert_eq!(
            OperadPresentation::new("x", vec![], vec![], vec![]),
            Err(OperadError::NoGenerators)
        );
        assert_eq!(
            OperadPresentation::new("x", vec!["m".into()], vec![rat(0)], vec![]),
            Err(OperadError::BadStar)
        );
        let rel = QuadraticRelation {
            left: vec![LeftTerm {
                inner: 3,
                outer: 0,
                coeff: rat(1),
            }],
            right: vec![],
        };
        assert!(matches!(
            OperadPresentation::new("x", vec!["m".into()], vec![rat(1)], vec![rel]),
            Err(OperadError::UnknownGenerator(_))
        ));
        let p = OperadPresentation::new("x", vec!["m".into()], vec![rat(1)], vec![]).unwrap();
        assert!(matches!(
            OperadComponents::build(&p, 1),
            Err(OperadError::DegreeTooSmall(1))
        ));
    }

    #[test]
    fn non_associative_star_is_reported() {
        // dendriform relations with ⋆ = ≺ alone
        let (p, _) = presets::dendriform();
        let q = OperadPresentation::new(
            "d",
            p.generator_names().to_vec(),
            vec![rat(1), rat(0)],
            p.relations().to_vec(),
        )
        .unwrap();
        let c = OperadComponents::build(&q, 4).unwrap();
        assert!(matches!(
            star_tower(&c),
            Err(OperadError::NotAssociative { .. })
        ));
    }
}
