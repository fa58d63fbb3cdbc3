use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use super::OperadError;
use crate::linalg::Rational;

/// Planar binary tree whose internal vertices carry generator indices.
/// A bare leaf is the operadic identity `I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabeledTree {
    Leaf,
    Node {
        label: usize,
        left: Box<LabeledTree>,
        right: Box<LabeledTree>,
    },
}

impl LabeledTree {
    pub fn node(label: usize, left: LabeledTree, right: LabeledTree) -> Self {
        LabeledTree::Node {
            label,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    /// The binary generator itself, `μ(I, I)`.
    pub fn corolla(label: usize) -> Self {
        Self::node(label, LabeledTree::Leaf, LabeledTree::Leaf)
    }

    /// `outer(inner(a, b), c)`.
    pub fn left_comb(outer: usize, inner: usize) -> Self {
        Self::node(outer, Self::corolla(inner), LabeledTree::Leaf)
    }

    /// `outer(a, inner(b, c))`.
    pub fn right_comb(outer: usize, inner: usize) -> Self {
        Self::node(outer, LabeledTree::Leaf, Self::corolla(inner))
    }

    pub fn arity(&self) -> usize {
        match self {
            LabeledTree::Leaf => 1,
            LabeledTree::Node { left, right, .. } => left.arity() + right.arity(),
        }
    }

    /// Labels in preorder.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<usize>) {
        if let LabeledTree::Node { label, left, right } = self {
            out.push(*label);
            left.collect_labels(out);
            right.collect_labels(out);
        }
    }

    fn relabel(&self, labels: &mut impl Iterator<Item = usize>) -> Self {
        match self {
            LabeledTree::Leaf => LabeledTree::Leaf,
            LabeledTree::Node { left, right, .. } => {
                let label = labels.next().expect("enough labels");
                let l = left.relabel(labels);
                let r = right.relabel(labels);
                Self::node(label, l, r)
            }
        }
    }

    /// Substitutes `inner` for the leaf at `position` (0-indexed, left to
    /// right).
    pub fn graft(&self, position: usize, inner: &LabeledTree) -> Result<Self, OperadError> {
        let arity = self.arity();
        if position >= arity {
            return Err(OperadError::IndexOutOfRange { position, arity });
        }
        let mut subs: Vec<LabeledTree> = vec![LabeledTree::Leaf; arity];
        subs[position] = inner.clone();
        Ok(self.substitute_leaves(&subs))
    }

    /// Substitutes one tree into every leaf; `subs.len()` must equal the
    /// arity.
    pub fn substitute_leaves(&self, subs: &[LabeledTree]) -> Self {
        assert_eq!(subs.len(), self.arity());
        let mut it = subs.iter();
        self.substitute_from(&mut it)
    }

    fn substitute_from<'a>(&self, subs: &mut impl Iterator<Item = &'a LabeledTree>) -> Self {
        match self {
            LabeledTree::Leaf => subs.next().expect("one tree per leaf").clone(),
            LabeledTree::Node { label, left, right } => {
                let l = left.substitute_from(subs);
                let r = right.substitute_from(subs);
                Self::node(*label, l, r)
            }
        }
    }

    /// Renders as nested applications, e.g. `prec(I, succ(I, I))`.
    pub fn render(&self, names: &[String]) -> String {
        let mut s = String::new();
        self.render_into(names, &mut s);
        s
    }

    fn render_into(&self, names: &[String], out: &mut String) {
        match self {
            LabeledTree::Leaf => out.push('I'),
            LabeledTree::Node { label, left, right } => {
                let name = names.get(*label).map_or("?", String::as_str);
                let _ = write!(out, "{name}(");
                left.render_into(names, out);
                out.push_str(", ");
                right.render_into(names, out);
                out.push(')');
            }
        }
    }
}

fn shapes(k: usize) -> Vec<LabeledTree> {
    if k == 1 {
        return vec![LabeledTree::Leaf];
    }
    let mut out = Vec::new();
    for left in (1..k).rev() {
        for l in shapes(left) {
            for r in shapes(k - left) {
                out.push(LabeledTree::node(0, l.clone(), r));
            }
        }
    }
    out
}

/// All labeled planar binary trees with `k` leaves over `n` generators.
///
/// Shapes come first ordered by left-subtree size, largest first (so the
/// left comb leads), and within a shape the preorder label sequences are
/// lexicographic.
pub fn enumerate_trees(k: usize, n: usize) -> Vec<LabeledTree> {
    assert!(k >= 1);
    let internal = k - 1;
    let mut out = Vec::new();
    for shape in shapes(k) {
        let mut labels = vec![0usize; internal];
        loop {
            out.push(shape.relabel(&mut labels.iter().copied()));
            // odometer over label vectors, last position fastest
            let mut pos = internal;
            let exhausted = loop {
                if pos == 0 {
                    break true;
                }
                pos -= 1;
                labels[pos] += 1;
                if labels[pos] < n {
                    break false;
                }
                labels[pos] = 0;
            };
            if exhausted {
                break;
            }
        }
    }
    out
}

/// Linear combination of trees of a common arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeOperadElement {
    arity: usize,
    coeffs: BTreeMap<LabeledTree, Rational>,
}

impl FreeOperadElement {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_tree(tree: LabeledTree) -> Self {
        let mut e = Self::zero(tree.arity());
        e.add_term(tree, Rational::from_integer(1.into()));
        e
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, tree: LabeledTree, c: Rational) {
        assert_eq!(tree.arity(), self.arity, "mixed arities");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(tree).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, tree: &LabeledTree) -> Rational {
        self.coeffs
            .get(tree)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LabeledTree, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.arity);
        for (t, c) in &self.coeffs {
            out.add_term(t.clone(), c * s);
        }
        out
    }

    /// Grafts every term of `inner` at `position` of every term of `self`.
    pub fn graft(&self, position: usize, inner: &FreeOperadElement) -> Result<Self, OperadError> {
        let mut out = Self::zero(self.arity + inner.arity - 1);
        for (t, c) in &self.coeffs {
            for (u, d) in &inner.coeffs {
                out.add_term(t.graft(position, u)?, c * d);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        assert_eq!(enumerate_trees(1, 2), vec![LabeledTree::Leaf]);
        assert_eq!(enumerate_trees(2, 3).len(), 3);
        assert_eq!(enumerate_trees(3, 2).len(), 8);
        assert_eq!(enumerate_trees(4, 2).len(), 40);
        assert_eq!(enumerate_trees(4, 3).len(), 135);
        assert_eq!(enumerate_trees(5, 1).len(), 14);
    }

    #[test]
    fn enumeration_order() {
        let trees = enumerate_trees(3, 2);
        assert_eq!(trees[0], LabeledTree::left_comb(0, 0));
        assert_eq!(trees[1], LabeledTree::left_comb(0, 1));
        assert_eq!(trees[2], LabeledTree::left_comb(1, 0));
        assert_eq!(trees[4], LabeledTree::right_comb(0, 0));
        let mut sorted = trees.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
    }

    #[test]
    fn grafting_units_and_combs() {
        let mu = LabeledTree::corolla(0);
        let nu = LabeledTree::corolla(1);
        assert_eq!(LabeledTree::Leaf.graft(0, &nu).unwrap(), nu);
        assert_eq!(mu.graft(1, &LabeledTree::Leaf).unwrap(), mu);
        assert_eq!(nu.graft(0, &mu).unwrap(), LabeledTree::left_comb(1, 0));
        assert_eq!(nu.graft(1, &mu).unwrap(), LabeledTree::right_comb(1, 0));
        assert!(matches!(
            mu.graft(2, &nu),
            Err(OperadError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn render_uses_names() {
        let names = vec!["prec".to_string(), "succ".to_string()];
        assert_eq!(
            LabeledTree::right_comb(0, 1).render(&names),
            "prec(I, succ(I, I))"
        );
    }
}
