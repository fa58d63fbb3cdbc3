use num_traits::{One, Zero};

use super::{FreeOperadElement, LabeledTree, OperadError};
use crate::linalg::Rational;

/// `(a inner b) outer c` with a coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftTerm {
    pub inner: usize,
    pub outer: usize,
    pub coeff: Rational,
}

/// `a outer (b inner c)` with a coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightTerm {
    pub outer: usize,
    pub inner: usize,
    pub coeff: Rational,
}

/// `Σ (a 𝔞ᵢ b) 𝔟ᵢ c = Σ a 𝔠ⱼ (b 𝔡ⱼ c)`.
///
/// As a pair in `P₂^{⊗2} ⊕ P₂^{⊗2}` the left side is `Σ 𝔞ᵢ ⊗ 𝔟ᵢ`
/// (inner first) and the right side `Σ 𝔠ⱼ ⊗ 𝔡ⱼ` (outer first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRelation {
    pub left: Vec<LeftTerm>,
    pub right: Vec<RightTerm>,
}

impl QuadraticRelation {
    /// `L[a][b]`: coefficient of `𝔞 = a` (inner), `𝔟 = b` (outer).
    pub fn left_matrix(&self, n: usize) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![Rational::zero(); n]; n];
        for t in &self.left {
            m[t.inner][t.outer] += &t.coeff;
        }
        m
    }

    /// `R[c][d]`: coefficient of `𝔠 = c` (outer), `𝔡 = d` (inner).
    pub fn right_matrix(&self, n: usize) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![Rational::zero(); n]; n];
        for t in &self.right {
            m[t.outer][t.inner] += &t.coeff;
        }
        m
    }

    /// The relation as one vector of length `2n²`: left block then right
    /// block, each flattened as `first·n + second`.
    pub fn pair_vector(&self, n: usize) -> Vec<Rational> {
        self.left_matrix(n)
            .into_iter()
            .chain(self.right_matrix(n))
            .flatten()
            .collect()
    }

    /// `Σ left-combs − Σ right-combs` in the free operad.
    pub fn free_vector(&self) -> FreeOperadElement {
        let mut v = FreeOperadElement::zero(3);
        for t in &self.left {
            v.add_term(LabeledTree::left_comb(t.outer, t.inner), t.coeff.clone());
        }
        for t in &self.right {
            v.add_term(LabeledTree::right_comb(t.outer, t.inner), -t.coeff.clone());
        }
        v
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            left: self
                .left
                .iter()
                .map(|t| LeftTerm {
                    coeff: &t.coeff * s,
                    ..t.clone()
                })
                .collect(),
            right: self
                .right
                .iter()
                .map(|t| RightTerm {
                    coeff: &t.coeff * s,
                    ..t.clone()
                })
                .collect(),
        }
    }
}

/// Binary generators, a designated associative candidate `⋆`, and
/// quadratic relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadPresentation {
    name: String,
    generator_names: Vec<String>,
    star: Vec<Rational>,
    relations: Vec<QuadraticRelation>,
}

impl OperadPresentation {
    pub fn new(
        name: impl Into<String>,
        generator_names: Vec<String>,
        star: Vec<Rational>,
        relations: Vec<QuadraticRelation>,
    ) -> Result<Self, OperadError> {
        let n = generator_names.len();
        if n == 0 {
            return Err(OperadError::NoGenerators);
        }
        if star.len() != n || star.iter().all(Zero::is_zero) {
            return Err(OperadError::BadStar);
        }
        for (idx, r) in relations.iter().enumerate() {
            if r.left.is_empty() && r.right.is_empty() {
                return Err(OperadError::EmptyRelation(idx));
            }
            let used = r
                .left
                .iter()
                .flat_map(|t| [t.inner, t.outer])
                .chain(r.right.iter().flat_map(|t| [t.outer, t.inner]));
            for g in used {
                if g >= n {
                    return Err(OperadError::UnknownGenerator(g.to_string()));
                }
            }
        }
        Ok(Self {
            name: name.into(),
            generator_names,
            star,
            relations,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|g| g == name)
    }

    /// `⋆` in generator coordinates.
    pub fn star(&self) -> &[Rational] {
        &self.star
    }

    pub fn relations(&self) -> &[QuadraticRelation] {
        &self.relations
    }

    pub fn with_relations(&self, relations: Vec<QuadraticRelation>) -> Result<Self, OperadError> {
        Self::new(
            self.name.clone(),
            self.generator_names.clone(),
            self.star.clone(),
            relations,
        )
    }

    /// Unit vector of generator `g` in `P₂`.
    pub fn generator_vector(&self, g: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.generator_count()];
        v[g] = Rational::one();
        v
    }
}

/// One arity-3 vector per relation: left entries become left combs with the
/// outer generator at the root, right entries right combs, and the vector
/// is `left − right`.
pub fn relation_vectors(p: &OperadPresentation) -> Vec<FreeOperadElement> {
    p.relations
        .iter()
        .map(QuadraticRelation::free_vector)
        .collect()
}
