//! Permutations, their positive braid lifts, and braided vector spaces.
//!
//! Conventions used throughout the crate:
//!
//! * A [`Permutation`] stores 1-indexed images, `images[i - 1] = w(i)`.
//! * Acting on tensors, `w` moves the factor in position `i` to position
//!   `w(i)`, so `v1 ⊗ … ⊗ vn ↦ v_{w⁻¹(1)} ⊗ … ⊗ v_{w⁻¹(n)}`.
//! * A [`ReducedWord`] lists generator indices in the order they are
//!   *applied*: the first letter acts first. The word `[1, 2]` therefore
//!   stands for the operator `σ₂σ₁` and projects to `s₂ ∘ s₁ = [3, 1, 2]`.
//! * The braiding matrix of a space of dimension `d` has the flattened pair
//!   index `(i, j) ↦ i·d + j`; rows index outputs, columns inputs.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{rank, Matrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("tensor degree {found} does not match permutation degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(BraidError::NotAPermutation(n));
            }
            seen[x - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The adjacent transposition `s_i` of `𝔖_n`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for 1-indexed `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// All of `𝔖_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

/// Generator indices of a positive braid, first letter applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

/// Canonical reduced word.
///
/// Starts from the identity arrangement and repeatedly swaps the largest
/// value that still sits immediately left of a value it must end up
/// behind. Every swap removes one inversion, so the length is `inv(w)`.
pub fn reduced_word(w: &Permutation) -> ReducedWord {
    let n = w.degree();
    // target[j] = original position of the factor that ends in slot j
    let inv = w.inverse();
    let mut rank_in_target = vec![0; n + 1];
    for (slot, &orig) in inv.images.iter().enumerate() {
        rank_in_target[orig] = slot;
    }
    let mut current: Vec<usize> = (1..=n).collect();
    let mut letters = Vec::with_capacity(w.inversions());
    loop {
        let candidate = (0..n.saturating_sub(1))
            .filter(|&p| rank_in_target[current[p]] > rank_in_target[current[p + 1]])
            .max_by_key(|&p| current[p]);
        let Some(p) = candidate else { break };
        current.swap(p, p + 1);
        letters.push(p + 1);
    }
    ReducedWord { letters }
}

/// Composite of the transpositions `s_{letters[0]}`, then
/// `s_{letters[1]}`, … in `𝔖_n`.
pub fn project_to_symmetric(n: usize, letters: &[usize]) -> Result<Permutation, BraidError> {
    let mut w = Permutation::identity(n);
    for &i in letters {
        if i == 0 || i >= n {
            return Err(BraidError::IndexOutOfRange {
                index: i,
                strands: n,
            });
        }
        w = Permutation::transposition(n, i).compose(&w);
    }
    Ok(w)
}

/// `β_{ij} ∈ 𝔖_{i+j}`: the first `i` positions move past the last `j`.
pub fn block_transposition(i: usize, j: usize) -> Permutation {
    let images = (1..=i + j)
        .map(|k| if k <= i { j + k } else { k - i })
        .collect();
    Permutation { images }
}

/// `w_n ∈ 𝔖_{2n}` with `w(2i-1) = i`, `w(2i) = n + i`: sorts
/// `a1 b1 a2 b2 …` into `a1 a2 … b1 b2 …`.
pub fn interleave(n: usize) -> Permutation {
    let mut images = vec![0; 2 * n];
    for i in 1..=n {
        images[2 * i - 2] = i;
        images[2 * i - 1] = n + i;
    }
    Permutation { images }
}

/// Sparse action of the braiding on one basis pair.
type PairImage = Vec<(usize, usize, Rational)>;

/// A vector space with basis `e_0..e_{d-1}` and an operator on `V ⊗ V`.
#[derive(Clone, Debug)]
pub struct BraidedSpace {
    dim: usize,
    sigma: Matrix,
    columns: Vec<PairImage>,
}

impl PartialEq for BraidedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.sigma == other.sigma
    }
}

impl BraidedSpace {
    pub fn new(dim: usize, sigma: Matrix) -> Result<Self, BraidError> {
        let dd = dim * dim;
        if dim == 0 || sigma.rows() != dd || sigma.cols() != dd {
            return Err(BraidError::DimMismatch {
                expected: dd,
                found: sigma.rows().max(sigma.cols()),
            });
        }
        let columns = (0..dd)
            .map(|col| {
                (0..dd)
                    .filter(|&row| !sigma[(row, col)].is_zero())
                    .map(|row| (row / dim, row % dim, sigma[(row, col)].clone()))
                    .collect()
            })
            .collect();
        Ok(Self {
            dim,
            sigma,
            columns,
        })
    }

    /// The flip `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
    pub fn flip(dim: usize) -> Self {
        Self::diagonal(&vec![vec![Rational::one(); dim]; dim])
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(dim, Matrix::identity(dim * dim)).expect("square")
    }

    /// `e_i ⊗ e_j ↦ q[i][j] · e_j ⊗ e_i`.
    pub fn diagonal(q: &[Vec<Rational>]) -> Self {
        let dim = q.len();
        let mut m = Matrix::zeros(dim * dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(j * dim + i, i * dim + j)] = q[i][j].clone();
            }
        }
        Self::new(dim, m).expect("square")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    /// `σ(e_a ⊗ e_b)` as a list of `(c, d, coeff)`.
    pub fn image(&self, a: usize, b: usize) -> &[(usize, usize, Rational)] {
        &self.columns[a * self.dim + b]
    }

    pub fn is_invertible(&self) -> bool {
        rank(&self.sigma) == self.dim * self.dim
    }

    /// Applies `σ_i` (1-indexed, on positions `i` and `i + 1`) to every
    /// word of a linear combination.
    fn apply_generator(
        &self,
        i: usize,
        terms: BTreeMap<Vec<usize>, Rational>,
    ) -> BTreeMap<Vec<usize>, Rational> {
        let mut out = BTreeMap::new();
        for (word, c) in terms {
            for (x, y, s) in self.image(word[i - 1], word[i]) {
                let mut w = word.clone();
                w[i - 1] = *x;
                w[i] = *y;
                accumulate(&mut out, w, &c * s);
            }
        }
        out
    }

    /// Applies the letters of a positive braid word, first letter first.
    pub fn apply_letters_to_word(
        &self,
        letters: &[usize],
        word: &[usize],
    ) -> Vec<(Vec<usize>, Rational)> {
        let mut terms = BTreeMap::new();
        terms.insert(word.to_vec(), Rational::one());
        for &i in letters {
            terms = self.apply_generator(i, terms);
        }
        terms.into_iter().collect()
    }
}

fn accumulate(map: &mut BTreeMap<Vec<usize>, Rational>, key: Vec<usize>, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.retain(|_, v| !v.is_zero());
    }
}

/// Element of `V^{⊗n}` in the word basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    degree: usize,
    dim: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

impl TensorVector {
    pub fn zero(degree: usize, dim: usize) -> Self {
        Self {
            degree,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(dim: usize, word: &[usize]) -> Self {
        assert!(word.iter().all(|&a| a < dim));
        let mut t = Self::zero(word.len(), dim);
        t.coeffs.insert(word.to_vec(), Rational::one());
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, word: &[usize]) -> Rational {
        self.coeffs
            .get(word)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: Rational) {
        assert_eq!(word.len(), self.degree);
        accumulate(&mut self.coeffs, word, c);
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.degree, self.dim);
        for (w, c) in &self.coeffs {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Every basis tensor of `V^{⊗n}`, in lexicographic word order.
    pub fn all_words(dim: usize, n: usize) -> Vec<Vec<usize>> {
        let mut words = vec![vec![]];
        for _ in 0..n {
            words = words
                .into_iter()
                .flat_map(|w| {
                    (0..dim).map(move |a| {
                        let mut w = w.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        words
    }
}

/// `T^τ_w`: permutes tensor positions without any braiding coefficients.
pub fn permute_tensor(w: &Permutation, t: &TensorVector) -> Result<TensorVector, BraidError> {
    if w.degree() != t.degree {
        return Err(BraidError::DegreeMismatch {
            expected: w.degree(),
            found: t.degree,
        });
    }
    let mut out = TensorVector::zero(t.degree, t.dim);
    for (word, c) in &t.coeffs {
        let mut moved = vec![0; word.len()];
        for (i, &a) in word.iter().enumerate() {
            moved[w.apply(i + 1) - 1] = a;
        }
        out.add_term(moved, c.clone());
    }
    Ok(out)
}

/// Applies a positive braid word to a tensor, first letter first.
pub fn apply_letters(
    space: &BraidedSpace,
    letters: &[usize],
    t: &TensorVector,
) -> Result<TensorVector, BraidError> {
    if t.dim != space.dim {
        return Err(BraidError::DimMismatch {
            expected: space.dim,
            found: t.dim,
        });
    }
    if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= t.degree) {
        return Err(BraidError::IndexOutOfRange {
            index: bad,
            strands: t.degree,
        });
    }
    let mut terms = t.coeffs.clone();
    for &i in letters {
        terms = space.apply_generator(i, terms);
    }
    Ok(TensorVector {
        degree: t.degree,
        dim: t.dim,
        coeffs: terms,
    })
}

/// `T^σ_w`: the action of the positive lift of `w`, computed along the
/// canonical reduced word.
pub fn apply_positive_lift(
    space: &BraidedSpace,
    w: &Permutation,
    t: &TensorVector,
) -> Result<TensorVector, BraidError> {
    if w.degree() != t.degree {
        return Err(BraidError::DegreeMismatch {
            expected: w.degree(),
            found: t.degree,
        });
    }
    apply_letters(space, &reduced_word(w).letters, t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeVerdict {
    pub holds: bool,
    /// First basis word of `V^{⊗3}` on which the two sides differ.
    pub witness: Option<Vec<usize>>,
}

/// Checks `σ₁σ₂σ₁ = σ₂σ₁σ₂` on all `d³` basis tensors.
pub fn check_yang_baxter(space: &BraidedSpace) -> YbeVerdict {
    for word in TensorVector::all_words(space.dim, 3) {
        let t = TensorVector::basis(space.dim, &word);
        let lhs = apply_letters(space, &[1, 2, 1], &t).expect("degree 3");
        let rhs = apply_letters(space, &[2, 1, 2], &t).expect("degree 3");
        if lhs != rhs {
            return YbeVerdict {
                holds: false,
                witness: Some(word),
            };
        }
    }
    YbeVerdict {
        holds: true,
        witness: None,
    }
}

pub fn check_involutive(space: &BraidedSpace) -> bool {
    let sq = space.sigma.mul(&space.sigma).expect("square");
    sq == Matrix::identity(space.dim * space.dim)
}

/// Whether `(f⊗f)σ_V = σ_W(f⊗f)` for a linear map `f: V → W` given as a
/// `dim W × dim V` matrix.
pub fn check_braided_morphism(
    f: &Matrix,
    source: &BraidedSpace,
    target: &BraidedSpace,
) -> Result<bool, BraidError> {
    if f.rows() != target.dim || f.cols() != source.dim {
        return Err(BraidError::DimMismatch {
            expected: target.dim * source.dim,
            found: f.rows() * f.cols(),
        });
    }
    let ff = f.kron(f);
    let lhs = ff.mul(&source.sigma).expect("shapes checked");
    let rhs = target.sigma.mul(&ff).expect("shapes checked");
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn reduced_word_examples() {
        assert!(reduced_word(&Permutation::identity(3)).letters.is_empty());
        assert_eq!(reduced_word(&perm(&[2, 1])).letters, vec![1]);
        let longest = reduced_word(&perm(&[3, 2, 1]));
        assert_eq!(longest.letters.len(), 3);
        assert_eq!(
            project_to_symmetric(3, &longest.letters).unwrap(),
            perm(&[3, 2, 1])
        );
        assert_eq!(reduced_word(&block_transposition(1, 2)).letters, vec![1, 2]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn permute_tensor_examples() {
        let t = TensorVector::basis(3, &[0, 1, 2]);
        assert_eq!(permute_tensor(&Permutation::identity(3), &t).unwrap(), t);
        let s1 = permute_tensor(&perm(&[2, 1]), &TensorVector::basis(2, &[0, 1])).unwrap();
        assert_eq!(s1, TensorVector::basis(2, &[1, 0]));
        let cyc = permute_tensor(&perm(&[2, 3, 1]), &t).unwrap();
        assert_eq!(cyc, TensorVector::basis(3, &[2, 0, 1]));
        assert!(matches!(
            permute_tensor(&perm(&[2, 1]), &t),
            Err(BraidError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn positive_lift_examples() {
        let flip = BraidedSpace::flip(4);
        let t = TensorVector::basis(4, &[0, 1, 2, 3]);
        assert_eq!(
            apply_positive_lift(&flip, &Permutation::identity(4), &t).unwrap(),
            t
        );
        let w2 = interleave(2);
        assert_eq!(reduced_word(&w2).letters, vec![2]);
        assert_eq!(
            apply_positive_lift(&flip, &w2, &t).unwrap(),
            TensorVector::basis(4, &[0, 2, 1, 3])
        );

        let q = vec![vec![rat(1), rat(2)], vec![rat(1), rat(1)]];
        let diag = BraidedSpace::diagonal(&q);
        let out =
            apply_positive_lift(&diag, &perm(&[2, 1]), &TensorVector::basis(2, &[0, 1])).unwrap();
        assert_eq!(out, TensorVector::basis(2, &[1, 0]).scale(&rat(2)));
    }

    #[test]
    fn yang_baxter_examples() {
        assert!(check_yang_baxter(&BraidedSpace::flip(2)).holds);
        assert!(check_yang_baxter(&BraidedSpace::identity(2)).holds);
        // Rescaling a nonzero entry of the flip only yields another diagonal
        // braiding, which still satisfies the equation.
        let mut m = BraidedSpace::flip(2).sigma().clone();
        m[(2, 1)] = rat(2);
        assert!(check_yang_baxter(&BraidedSpace::new(2, m).unwrap()).holds);
        // e0⊗e1 ↦ e1⊗e0 + e0⊗e0
        let mut m = BraidedSpace::flip(2).sigma().clone();
        m[(0, 1)] = rat(1);
        let bad = BraidedSpace::new(2, m).unwrap();
        let v = check_yang_baxter(&bad);
        assert!(!v.holds);
        assert!(v.witness.is_some());
    }

    #[test]
    fn involutive_examples() {
        assert!(check_involutive(&BraidedSpace::flip(2)));
        let doubled = BraidedSpace::diagonal(&[vec![rat(2); 2], vec![rat(2); 2]]);
        assert!(!check_involutive(&doubled));
        let q = vec![vec![rat(-1), rat(3)], vec![frac(1, 3), rat(1)]];
        assert!(check_involutive(&BraidedSpace::diagonal(&q)));
    }

    #[test]
    fn block_and_interleave() {
        assert_eq!(block_transposition(1, 1), perm(&[2, 1]));
        assert_eq!(block_transposition(1, 2), perm(&[3, 1, 2]));
        assert_eq!(block_transposition(3, 0), Permutation::identity(3));
        assert_eq!(interleave(1), Permutation::identity(2));
        assert_eq!(interleave(2), perm(&[1, 3, 2, 4]));
        assert_eq!(interleave(3), perm(&[1, 4, 2, 5, 3, 6]));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            project_to_symmetric(3, &[]).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            project_to_symmetric(3, &[1, 1]).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(project_to_symmetric(3, &[1, 2]).unwrap(), perm(&[3, 1, 2]));
        assert!(matches!(
            project_to_symmetric(3, &[3]),
            Err(BraidError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn braided_morphisms() {
        let flip = BraidedSpace::flip(2);
        assert!(check_braided_morphism(&Matrix::identity(2), &flip, &flip).unwrap());
        let f = Matrix::from_i64(&[&[1, 2], &[3, -1]]);
        assert!(check_braided_morphism(&f, &flip, &flip).unwrap());

        // a braiding that mixes basis vectors: e0⊗e0 ↦ e0⊗e0 + e1⊗e1
        let mut m = BraidedSpace::flip(2).sigma().clone();
        m[(3, 0)] = rat(1);
        let mixing = BraidedSpace::new(2, m).unwrap();
        let scale = Matrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(!check_braided_morphism(&scale, &mixing, &mixing).unwrap());
        assert!(check_braided_morphism(&Matrix::identity(3), &flip, &flip).is_err());
    }
}
