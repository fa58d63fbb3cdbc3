//! The truncated free unitary algebra `A⁺ = 𝕜 ⊕ ⊕_{1≤k≤K} P_k ⊗ V^{⊗k}`
//! over a braided vector space, its braiding, the `⊠` products on
//! `A⁺ ⊗ A⁺`, the coproduct and the antipode.
//!
//! A basis element of `A⁺` is either the unit or a triple `(k, b, word)`:
//! basis index `b` of `P_k` decorated by a word of length `k` over the basis
//! of `V`. The braiding `σ_A` acts on words only and carries the `P`-classes
//! along unchanged.

mod verify;

pub use verify::{
    check_twisted_cocommutativity, verify_axioms, CheckStatus, HopfOptions, HopfReport, ReportItem,
    TwistedCocommutativity,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::braid::{block_transposition, reduced_word, BraidedSpace};
use crate::coherence::{CoherenceError, UnitAction};
use crate::linalg::{format_rational, Rational};
use crate::operad::{LabeledTree, OperadComponents};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("operation {0} applied to two units is undefined")]
    UndefinedComposite(String),
    #[error(transparent)]
    UnitAction(#[from] CoherenceError),
}

/// Basis element of `A⁺`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    Unit,
    Graded {
        arity: usize,
        basis: usize,
        word: Vec<usize>,
    },
}

impl Key {
    /// The letter `e_a ∈ V` as an element of `P₁ ⊗ V`.
    pub fn letter(a: usize) -> Self {
        Key::Graded {
            arity: 1,
            basis: 0,
            word: vec![a],
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Key::Unit => 0,
            Key::Graded { arity, .. } => *arity,
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Key::Unit)
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Element of `A⁺`. `overflow` records that a product left the truncation;
/// such an element is only known modulo degree `> K`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Key, Rational>,
    overflow: bool,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::basis(Key::Unit)
    }

    pub fn basis(key: Key) -> Self {
        let mut e = Self::zero();
        e.add_term(key, Rational::one());
        e
    }

    pub fn letter(a: usize) -> Self {
        Self::basis(Key::letter(a))
    }

    pub fn overflowed() -> Self {
        Self {
            terms: BTreeMap::new(),
            overflow: true,
        }
    }

    pub fn add_term(&mut self, key: Key, c: Rational) {
        accumulate(&mut self.terms, key, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &Key) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// The `𝕜`-component.
    pub fn unit_coeff(&self) -> Rational {
        self.coeff(&Key::Unit)
    }

    pub fn overflow(&self) -> bool {
        self.overflow
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.overflow |= other.overflow;
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self {
            terms: BTreeMap::new(),
            overflow: self.overflow,
        };
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * s);
        }
        out
    }

    pub fn to_tensor(&self) -> TensorElement {
        let mut t = TensorElement::zero(1);
        t.overflow = self.overflow;
        for (k, c) in &self.terms {
            t.add_term(vec![k.clone()], c.clone());
        }
        t
    }
}

/// Element of `(A⁺)^{⊗order}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    order: usize,
    terms: BTreeMap<Vec<Key>, Rational>,
    overflow: bool,
}

impl TensorElement {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
            overflow: false,
        }
    }

    pub fn pure(keys: Vec<Key>) -> Self {
        let mut t = Self::zero(keys.len());
        t.add_term(keys, Rational::one());
        t
    }

    /// `1 ⊗ … ⊗ 1`
    pub fn units(order: usize) -> Self {
        Self::pure(vec![Key::Unit; order])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn overflow(&self) -> bool {
        self.overflow
    }

    pub fn add_term(&mut self, keys: Vec<Key>, c: Rational) {
        assert_eq!(keys.len(), self.order, "tensor order");
        accumulate(&mut self.terms, keys, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Key>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, keys: &[Key]) -> Rational {
        self.terms.get(keys).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty() && !self.overflow
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let mut out = self.clone();
        out.overflow |= other.overflow;
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.order);
        out.overflow = self.overflow;
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * s);
        }
        out
    }

    /// `self ⊗ other`
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order + other.order);
        out.overflow = self.overflow || other.overflow;
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend(k2.iter().cloned());
                out.add_term(k, c1 * c2);
            }
        }
        out
    }

    /// The order-1 tensor as an algebra element.
    pub fn to_element(&self) -> AlgebraElement {
        assert_eq!(self.order, 1);
        let mut e = AlgebraElement::zero();
        e.overflow = self.overflow;
        for (k, c) in &self.terms {
            e.add_term(k[0].clone(), c.clone());
        }
        e
    }

    /// Keeps the terms satisfying `pred`.
    fn filter(&self, pred: impl Fn(&[Key]) -> bool) -> Self {
        let mut out = Self::zero(self.order);
        out.overflow = self.overflow;
        for (k, c) in &self.terms {
            if pred(k) {
                out.terms.insert(k.clone(), c.clone());
            }
        }
        out
    }
}

/// Replaces factor `pos` of every term by the tensor `f(key)`.
fn replace_factor(
    t: &TensorElement,
    pos: usize,
    new_len: usize,
    mut f: impl FnMut(&Key) -> Result<TensorElement, HopfError>,
) -> Result<TensorElement, HopfError> {
    let mut out = TensorElement::zero(t.order - 1 + new_len);
    out.overflow = t.overflow;
    for (keys, c) in &t.terms {
        let image = f(&keys[pos])?;
        out.overflow |= image.overflow;
        for (mid, d) in &image.terms {
            let mut k = keys[..pos].to_vec();
            k.extend(mid.iter().cloned());
            k.extend(keys[pos + 1..].iter().cloned());
            out.add_term(k, c * d);
        }
    }
    Ok(out)
}

/// The free algebra `A⁺` over a braided space with a unit action, with the
/// coproduct of every basis element precomputed.
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    comps: OperadComponents,
    ua: UnitAction,
    space: BraidedSpace,
    star: Vec<Rational>,
    block_words: HashMap<(usize, usize), Vec<usize>>,
    coproducts: HashMap<Key, TensorElement>,
    warnings: Vec<String>,
}

impl FreeAlgebra {
    pub fn new(
        comps: OperadComponents,
        ua: UnitAction,
        space: BraidedSpace,
    ) -> Result<Self, HopfError> {
        let star = comps.presentation().star().to_vec();
        ua.check_normalized(&star)?;
        let k = comps.max_arity();
        let mut block_words = HashMap::new();
        for i in 1..k {
            for j in 1..=k - i {
                block_words.insert((i, j), reduced_word(&block_transposition(i, j)).letters);
            }
        }
        let mut warnings = comps.warnings().to_vec();
        if !space.is_invertible() {
            warnings.push("braiding is not invertible".to_string());
        }
        let mut alg = Self {
            comps,
            ua,
            space,
            star,
            block_words,
            coproducts: HashMap::new(),
            warnings,
        };
        let mut coproducts = HashMap::new();
        for key in alg.basis_keys() {
            let delta = match &key {
                Key::Unit => TensorElement::units(2),
                Key::Graded { arity, basis, word } => {
                    let rep = alg.comps.representative(*arity, *basis).clone();
                    alg.coproduct_tree(&rep, word)?
                }
            };
            coproducts.insert(key, delta);
        }
        alg.coproducts = coproducts;
        Ok(alg)
    }

    pub fn components(&self) -> &OperadComponents {
        &self.comps
    }

    pub fn unit_action(&self) -> &UnitAction {
        &self.ua
    }

    pub fn space(&self) -> &BraidedSpace {
        &self.space
    }

    pub fn max_degree(&self) -> usize {
        self.comps.max_arity()
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `⋆` in generator coordinates.
    pub fn star(&self) -> &[Rational] {
        &self.star
    }

    pub fn generator(&self, g: usize) -> Vec<Rational> {
        self.comps.presentation().generator_vector(g)
    }

    /// All basis elements of degree `≤ K`, the unit first, then by degree.
    pub fn basis_keys(&self) -> Vec<Key> {
        let d = self.space.dim();
        let mut keys = vec![Key::Unit];
        for arity in 1..=self.max_degree() {
            let words = crate::braid::TensorVector::all_words(d, arity);
            for basis in 0..self.comps.dim(arity) {
                for word in &words {
                    keys.push(Key::Graded {
                        arity,
                        basis,
                        word: word.clone(),
                    });
                }
            }
        }
        keys
    }

    /// The class of the tree with its leaves decorated by `word`.
    pub fn tree_element(&self, t: &LabeledTree, word: &[usize]) -> AlgebraElement {
        let k = t.arity();
        assert_eq!(word.len(), k);
        if k > self.max_degree() {
            return AlgebraElement::overflowed();
        }
        let class = self.comps.reduce_tree(t).expect("arity checked");
        let mut out = AlgebraElement::zero();
        for (b, c) in class.coords.iter().enumerate() {
            out.add_term(
                Key::Graded {
                    arity: k,
                    basis: b,
                    word: word.to_vec(),
                },
                c.clone(),
            );
        }
        out
    }

    /// Writes a basis element with its letters in the leaves, e.g.
    /// `prec(x0, succ(x1, x0))`.
    pub fn render_key(&self, key: &Key) -> String {
        match key {
            Key::Unit => "1".to_string(),
            Key::Graded { arity, basis, word } => {
                let t = self.comps.representative(*arity, *basis);
                let mut letters = word.iter();
                let mut s = String::new();
                self.render_tree(t, &mut letters, &mut s);
                s
            }
        }
    }

    fn render_tree<'a>(
        &self,
        t: &LabeledTree,
        letters: &mut impl Iterator<Item = &'a usize>,
        out: &mut String,
    ) {
        match t {
            LabeledTree::Leaf => {
                let _ = write!(out, "x{}", letters.next().expect("one letter per leaf"));
            }
            LabeledTree::Node { label, left, right } => {
                let _ = write!(
                    out,
                    "{}(",
                    self.comps.presentation().generator_names()[*label]
                );
                self.render_tree(left, letters, out);
                out.push_str(", ");
                self.render_tree(right, letters, out);
                out.push(')');
            }
        }
    }

    pub fn render_tensor(&self, t: &TensorElement) -> String {
        if t.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = t
            .terms()
            .map(|(keys, c)| {
                let body: Vec<String> = keys.iter().map(|k| self.render_key(k)).collect();
                format!("{}·{}", format_rational(c), body.join(" ⊗ "))
            })
            .collect();
        parts.join(" + ")
    }

    fn unit_multiple_of_star(&self, mu: &[Rational]) -> Option<Rational> {
        let (i, s) = self.star.iter().enumerate().find(|(_, s)| !s.is_zero())?;
        let lambda = &mu[i] / s;
        let matches = mu.iter().zip(&self.star).all(|(m, s)| *m == &lambda * s);
        matches.then_some(lambda)
    }

    fn render_operation(&self, mu: &[Rational]) -> String {
        let names = self.comps.presentation().generator_names();
        let parts: Vec<String> = mu
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| {
                if c.is_one() {
                    n.clone()
                } else {
                    format!("{}·{}", format_rational(c), n)
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// `a μ b` for basis elements.
    pub fn product_keys(
        &self,
        mu: &[Rational],
        a: &Key,
        b: &Key,
    ) -> Result<AlgebraElement, HopfError> {
        match (a, b) {
            (Key::Unit, Key::Unit) => match self.unit_multiple_of_star(mu) {
                Some(lambda) => Ok(AlgebraElement::unit().scale(&lambda)),
                None => Err(HopfError::UndefinedComposite(self.render_operation(mu))),
            },
            (Key::Unit, x) => {
                Ok(AlgebraElement::basis(x.clone()).scale(&crate::linalg::dot(self.ua.beta(), mu)))
            }
            (x, Key::Unit) => Ok(
                AlgebraElement::basis(x.clone()).scale(&crate::linalg::dot(self.ua.alpha(), mu))
            ),
            (
                Key::Graded {
                    arity: i,
                    basis: b1,
                    word: u,
                },
                Key::Graded {
                    arity: j,
                    basis: b2,
                    word: v,
                },
            ) => {
                if i + j > self.max_degree() {
                    return Ok(AlgebraElement::overflowed());
                }
                let mut word = u.clone();
                word.extend(v.iter().copied());
                let mut out = AlgebraElement::zero();
                for (g, m) in mu.iter().enumerate() {
                    if m.is_zero() {
                        continue;
                    }
                    let cells = self
                        .comps
                        .binary_product(g, (*i, *b1), (*j, *b2))
                        .expect("within truncation");
                    for (b, c) in cells {
                        out.add_term(
                            Key::Graded {
                                arity: i + j,
                                basis: *b,
                                word: word.clone(),
                            },
                            m * c,
                        );
                    }
                }
                Ok(out)
            }
        }
    }

    /// `x μ y`, bilinear.
    pub fn product(
        &self,
        mu: &[Rational],
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, HopfError> {
        let mut out = AlgebraElement::zero();
        out.overflow = x.overflow || y.overflow;
        for (a, c1) in x.terms() {
            for (b, c2) in y.terms() {
                let p = self.product_keys(mu, a, b)?;
                out = out.add(&p.scale(&(c1 * c2)));
            }
        }
        Ok(out)
    }

    pub fn star_product(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, HopfError> {
        self.product(&self.star, x, y)
    }

    /// `σ_A(a ⊗ b)` for basis elements: units cross trivially, otherwise the
    /// word is acted on by the positive lift of the block transposition.
    pub fn sigma_keys(&self, a: &Key, b: &Key) -> Vec<(Key, Key, Rational)> {
        match (a, b) {
            (Key::Unit, _) | (_, Key::Unit) => vec![(b.clone(), a.clone(), Rational::one())],
            (
                Key::Graded {
                    arity: i,
                    basis: b1,
                    word: u,
                },
                Key::Graded {
                    arity: j,
                    basis: b2,
                    word: v,
                },
            ) => {
                let letters = match self.block_words.get(&(*i, *j)) {
                    Some(l) => l.clone(),
                    None => reduced_word(&block_transposition(*i, *j)).letters,
                };
                let mut word = u.clone();
                word.extend(v.iter().copied());
                self.space
                    .apply_letters_to_word(&letters, &word)
                    .into_iter()
                    .map(|(w, c)| {
                        let (first, second) = w.split_at(*j);
                        (
                            Key::Graded {
                                arity: *j,
                                basis: *b2,
                                word: first.to_vec(),
                            },
                            Key::Graded {
                                arity: *i,
                                basis: *b1,
                                word: second.to_vec(),
                            },
                            c,
                        )
                    })
                    .collect()
            }
        }
    }

    /// `σ_A` on factors `pos` and `pos + 1`.
    pub fn sigma_at(&self, t: &TensorElement, pos: usize) -> TensorElement {
        let mut out = TensorElement::zero(t.order);
        out.overflow = t.overflow;
        for (keys, c) in t.terms() {
            for (x, y, s) in self.sigma_keys(&keys[pos], &keys[pos + 1]) {
                let mut k = keys.clone();
                k[pos] = x;
                k[pos + 1] = y;
                out.add_term(k, c * s);
            }
        }
        out
    }

    /// `σ_A` on `A⁺ ⊗ A⁺`.
    pub fn sigma(&self, t: &TensorElement) -> TensorElement {
        assert_eq!(t.order, 2);
        self.sigma_at(t, 0)
    }

    /// Multiplies factors `pos` and `pos + 1` with `μ`.
    pub fn multiply_at(
        &self,
        t: &TensorElement,
        pos: usize,
        mu: &[Rational],
    ) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(t.order - 1);
        out.overflow = t.overflow;
        for (keys, c) in t.terms() {
            let p = self.product_keys(mu, &keys[pos], &keys[pos + 1])?;
            out.overflow |= p.overflow;
            for (k, d) in p.terms() {
                let mut nk = keys[..pos].to_vec();
                nk.push(k.clone());
                nk.extend(keys[pos + 2..].iter().cloned());
                out.add_term(nk, c * d);
            }
        }
        Ok(out)
    }

    /// `μ(x₁ ⊗ y₁, x₂ ⊗ y₂)` on `A⁺ ⊗ A⁺`: when a right factor is not the
    /// unit, `σ` crosses the middle factors and the result is
    /// `⋆(x₁, x₂′) ⊗ μ(y₁′, y₂)`; otherwise it is `μ(x₁, x₂) ⊗ 1`.
    pub fn boxtimes_apply(
        &self,
        mu: &[Rational],
        x: &TensorElement,
        y: &TensorElement,
    ) -> Result<TensorElement, HopfError> {
        assert_eq!((x.order, y.order), (2, 2));
        let mut out = TensorElement::zero(2);
        out.overflow = x.overflow || y.overflow;
        for (k1, c1) in x.terms() {
            for (k2, c2) in y.terms() {
                let (a1, b1, a2, b2) = (&k1[0], &k1[1], &k2[0], &k2[1]);
                let c = c1 * c2;
                if !b1.is_unit() || !b2.is_unit() {
                    for (a2p, b1p, s) in self.sigma_keys(b1, a2) {
                        let left = self.product_keys(&self.star, a1, &a2p)?;
                        if left.is_zero() && !left.overflow {
                            continue;
                        }
                        let right = self.product_keys(mu, &b1p, b2)?;
                        let term = left.to_tensor().tensor(&right.to_tensor());
                        out = out.add(&term.scale(&(&c * s)));
                    }
                } else {
                    let p = self.product_keys(mu, a1, a2)?;
                    let term = p.to_tensor().tensor(&TensorElement::units(1));
                    out = out.add(&term.scale(&c));
                }
            }
        }
        Ok(out)
    }

    /// `Δ` computed through the given tree: `x ⊗ 1 + 1 ⊗ x` at each leaf and
    /// the `⊠` product of the vertex label at each internal vertex.
    pub fn coproduct_tree(
        &self,
        t: &LabeledTree,
        word: &[usize],
    ) -> Result<TensorElement, HopfError> {
        match t {
            LabeledTree::Leaf => {
                let x = Key::letter(word[0]);
                let mut out = TensorElement::zero(2);
                out.add_term(vec![x.clone(), Key::Unit], Rational::one());
                out.add_term(vec![Key::Unit, x], Rational::one());
                Ok(out)
            }
            LabeledTree::Node { label, left, right } => {
                let (u, v) = word.split_at(left.arity());
                let dl = self.coproduct_tree(left, u)?;
                let dr = self.coproduct_tree(right, v)?;
                self.boxtimes_apply(&self.generator(*label), &dl, &dr)
            }
        }
    }

    /// `Δ` of a basis element, from the precomputed table.
    pub fn coproduct_key(&self, key: &Key) -> TensorElement {
        self.coproducts.get(key).cloned().unwrap_or_else(|| {
            let mut t = TensorElement::zero(2);
            t.overflow = true;
            t
        })
    }

    pub fn coproduct(&self, e: &AlgebraElement) -> TensorElement {
        let mut out = TensorElement::zero(2);
        out.overflow = e.overflow;
        for (k, c) in e.terms() {
            out = out.add(&self.coproduct_key(k).scale(c));
        }
        out
    }

    /// `Δ` on factor `pos`.
    pub fn coproduct_at(&self, t: &TensorElement, pos: usize) -> TensorElement {
        replace_factor(t, pos, 2, |k| Ok(self.coproduct_key(k))).expect("infallible")
    }

    pub fn counit(&self, e: &AlgebraElement) -> Rational {
        e.unit_coeff()
    }

    /// `ε` on factor `pos`.
    pub fn counit_at(&self, t: &TensorElement, pos: usize) -> TensorElement {
        replace_factor(t, pos, 0, |k| {
            Ok(if k.is_unit() {
                TensorElement::pure(vec![])
            } else {
                TensorElement::zero(0)
            })
        })
        .expect("infallible")
    }

    /// `Δ′(a) = Δ(a) − a ⊗ 1 − 1 ⊗ a`
    pub fn reduced_coproduct(&self, key: &Key) -> TensorElement {
        let delta = self.coproduct_key(key);
        delta.filter(|k| !k[0].is_unit() && !k[1].is_unit())
    }

    /// `S` on every basis element: `S(1) = 1` and
    /// `S(a) = −a − Σ S(a′) ⋆ a″` over `Δ′(a)`.
    pub fn antipode_table(&self) -> Result<HashMap<Key, AlgebraElement>, HopfError> {
        let mut table: HashMap<Key, AlgebraElement> = HashMap::new();
        for key in self.basis_keys() {
            let s = if key.is_unit() {
                AlgebraElement::unit()
            } else {
                let mut s = AlgebraElement::basis(key.clone()).scale(&-Rational::one());
                for (keys, c) in self.reduced_coproduct(&key).terms() {
                    let sa = &table[&keys[0]];
                    let p = self.star_product(sa, &AlgebraElement::basis(keys[1].clone()))?;
                    s = s.sub(&p.scale(c));
                }
                s
            };
            table.insert(key, s);
        }
        Ok(table)
    }

    pub fn antipode(&self, e: &AlgebraElement) -> Result<AlgebraElement, HopfError> {
        let table = self.antipode_table()?;
        let mut out = AlgebraElement::zero();
        out.overflow = e.overflow;
        for (k, c) in e.terms() {
            match table.get(k) {
                Some(s) => out = out.add(&s.scale(c)),
                None => out.overflow = true,
            }
        }
        Ok(out)
    }

    /// `S` on factor `pos`, using a precomputed table.
    pub fn antipode_at(
        &self,
        t: &TensorElement,
        pos: usize,
        table: &HashMap<Key, AlgebraElement>,
    ) -> TensorElement {
        replace_factor(t, pos, 1, |k| {
            Ok(match table.get(k) {
                Some(s) => s.to_tensor(),
                None => {
                    let mut z = TensorElement::zero(1);
                    z.overflow = true;
                    z
                }
            })
        })
        .expect("infallible")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::presets;

    fn dendriform(dim: usize, k: usize) -> FreeAlgebra {
        let (p, ua) = presets::dendriform();
        let c = OperadComponents::build(&p, k).unwrap();
        FreeAlgebra::new(c, ua, BraidedSpace::flip(dim)).unwrap()
    }

    #[test]
    fn unit_products_follow_the_unit_action() {
        let a = dendriform(2, 3);
        let prec = a.generator(0);
        let x = AlgebraElement::letter(0);
        let one = AlgebraElement::unit();
        assert_eq!(a.product(&prec, &x, &one).unwrap(), x);
        assert!(a.product(&prec, &one, &x).unwrap().is_zero());
        assert_eq!(a.star_product(&one, &x).unwrap(), x);
        assert_eq!(a.star_product(&x, &one).unwrap(), x);
        assert_eq!(a.star_product(&one, &one).unwrap(), one);
        assert!(matches!(
            a.product(&prec, &one, &one),
            Err(HopfError::UndefinedComposite(_))
        ));
    }

    #[test]
    fn sigma_crosses_units_trivially() {
        let a = dendriform(2, 3);
        let x = Key::letter(1);
        assert_eq!(
            a.sigma_keys(&x, &Key::Unit),
            vec![(Key::Unit, x.clone(), rat(1))]
        );
        assert_eq!(a.sigma_keys(&Key::Unit, &x), vec![(x, Key::Unit, rat(1))]);
    }

    #[test]
    fn overflowing_products_are_flagged() {
        let a = dendriform(1, 2);
        let x = AlgebraElement::letter(0);
        let xx = a.star_product(&x, &x).unwrap();
        assert!(!xx.overflow());
        assert!(a.star_product(&xx, &x).unwrap().overflow());
    }
}
