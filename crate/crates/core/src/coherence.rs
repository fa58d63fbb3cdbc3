//! Unit actions, the coherence equations C1–C5, and the relation subspaces
//! `Λ′` and `Λ″`.
//!
//! For a relation `Σ (a 𝔞ᵢ b) 𝔟ᵢ c = Σ a 𝔠ⱼ (b 𝔡ⱼ c)` and a unit action
//! `(α, β)`, the equations compare vectors in `P₂`:
//!
//! | tag | left                    | right                    |
//! |-----|-------------------------|--------------------------|
//! | C1  | `Σ β(𝔞ᵢ) 𝔟ᵢ`            | `Σ β(𝔠ⱼ) 𝔡ⱼ`             |
//! | C2  | `Σ α(𝔞ᵢ) 𝔟ᵢ`            | `Σ β(𝔡ⱼ) 𝔠ⱼ`             |
//! | C3  | `Σ α(𝔟ᵢ) 𝔞ᵢ`            | `Σ α(𝔡ⱼ) 𝔠ⱼ`             |
//! | C4  | `Σ β(𝔟ᵢ) 𝔞ᵢ`            | `Σ β(𝔠ⱼ) β(𝔡ⱼ) ⋆`        |
//! | C5  | `Σ α(𝔞ᵢ) α(𝔟ᵢ) ⋆`       | `Σ α(𝔠ⱼ) 𝔡ⱼ`             |

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{
    dot, eliminate_quadratics, format_rational, is_zero_vector, kron, rank, solve_affine,
    subspace_contains, AffineSolutionSet, LinalgError, Matrix, Poly, Rational, SmallPolySystem,
    Variety,
};
use crate::operad::{LabeledTree, OpElement, OperadComponents, OperadError, OperadPresentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoherenceError {
    #[error("unit action has {found} coordinates, expected {expected}")]
    DimMismatch { expected: usize, found: usize },
    #[error("unit action is not normalized: α(⋆) = {alpha}, β(⋆) = {beta}")]
    NotNormalized { alpha: String, beta: String },
    #[error("linear coherence equations are inconsistent")]
    Infeasible,
    #[error("the basis does not sum to ⋆")]
    StarMismatch,
    #[error("the supplied operations are not a basis of P₂")]
    NotABasis,
    #[error("the prime case needs at least two basis operations")]
    CaseNeedsTwo,
    #[error(transparent)]
    Operad(#[from] OperadError),
}

/// `γ(μ; I, 𝒾) = α(μ) I` and `γ(μ; 𝒾, I) = β(μ) I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitAction {
    alpha: Vec<Rational>,
    beta: Vec<Rational>,
}

/// Which slot of a binary operation receives the adjoined unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `a μ 1 = α(μ) a`
    RightUnit,
    /// `1 μ a = β(μ) a`
    LeftUnit,
}

impl UnitAction {
    pub fn new(alpha: Vec<Rational>, beta: Vec<Rational>) -> Self {
        assert_eq!(alpha.len(), beta.len());
        Self { alpha, beta }
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Rational] {
        &self.beta
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// `(α₁, …, αₙ, β₁, …, βₙ)`
    pub fn coordinates(&self) -> Vec<Rational> {
        self.alpha.iter().chain(&self.beta).cloned().collect()
    }

    pub fn from_coordinates(x: &[Rational]) -> Self {
        let n = x.len() / 2;
        Self::new(x[..n].to_vec(), x[n..].to_vec())
    }

    /// Checks `α(⋆) = β(⋆) = 1` and the coordinate count.
    pub fn check_normalized(&self, star: &[Rational]) -> Result<(), CoherenceError> {
        if self.len() != star.len() {
            return Err(CoherenceError::DimMismatch {
                expected: star.len(),
                found: self.len(),
            });
        }
        let (a, b) = (dot(&self.alpha, star), dot(&self.beta, star));
        if a.is_one() && b.is_one() {
            Ok(())
        } else {
            Err(CoherenceError::NotNormalized {
                alpha: format_rational(&a),
                beta: format_rational(&b),
            })
        }
    }
}

impl fmt::Display for UnitAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "α = {}, β = {}",
            crate::linalg::format_vector(&self.alpha),
            crate::linalg::format_vector(&self.beta)
        )
    }
}

pub fn unit_eval(ua: &UnitAction, mu: &[Rational], side: Side) -> Rational {
    match side {
        Side::RightUnit => dot(&ua.alpha, mu),
        Side::LeftUnit => dot(&ua.beta, mu),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Equation {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl Equation {
    pub const ALL: [Equation; 5] = [
        Equation::C1,
        Equation::C2,
        Equation::C3,
        Equation::C4,
        Equation::C5,
    ];
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceEntry {
    /// 1-based relation index.
    pub relation: usize,
    pub equation: Equation,
    pub pass: bool,
    /// Left side minus right side, in generator coordinates.
    pub difference: Vec<Rational>,
}

#[derive(Serialize)]
struct EntryJson {
    relation: usize,
    equation: Equation,
    pass: bool,
    difference: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub entries: Vec<CoherenceEntry>,
}

impl CoherenceReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CoherenceEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn entry(&self, relation: usize, equation: Equation) -> Option<&CoherenceEntry> {
        self.entries
            .iter()
            .find(|e| e.relation == relation && e.equation == equation)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<EntryJson> = self
            .entries
            .iter()
            .map(|e| EntryJson {
                relation: e.relation,
                equation: e.equation,
                pass: e.pass,
                difference: e.difference.iter().map(format_rational).collect(),
            })
            .collect();
        serde_json::to_value(entries).expect("serializable")
    }
}

fn axpy(acc: &mut [Rational], s: &Rational, x: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        *a += s * b;
    }
}

fn unit_vec(n: usize, g: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[g] = Rational::one();
    v
}

/// Evaluates one equation on one relation; returns left minus right.
fn equation_difference(
    p: &OperadPresentation,
    rel: usize,
    eq: Equation,
    ua: &UnitAction,
) -> Vec<Rational> {
    let n = p.generator_count();
    let r = &p.relations()[rel];
    let star = p.star();
    let (a, b) = (&ua.alpha, &ua.beta);
    let mut d = vec![Rational::zero(); n];
    for t in &r.left {
        let (inner, outer) = (t.inner, t.outer);
        let (s, v) = match eq {
            Equation::C1 => (&b[inner] * &t.coeff, unit_vec(n, outer)),
            Equation::C2 => (&a[inner] * &t.coeff, unit_vec(n, outer)),
            Equation::C3 => (&a[outer] * &t.coeff, unit_vec(n, inner)),
            Equation::C4 => (&b[outer] * &t.coeff, unit_vec(n, inner)),
            Equation::C5 => (&a[inner] * &a[outer] * &t.coeff, star.to_vec()),
        };
        axpy(&mut d, &s, &v);
    }
    for t in &r.right {
        let (outer, inner) = (t.outer, t.inner);
        let (s, v) = match eq {
            Equation::C1 => (&b[outer] * &t.coeff, unit_vec(n, inner)),
            Equation::C2 => (&b[inner] * &t.coeff, unit_vec(n, outer)),
            Equation::C3 => (&a[inner] * &t.coeff, unit_vec(n, outer)),
            Equation::C4 => (&b[outer] * &b[inner] * &t.coeff, star.to_vec()),
            Equation::C5 => (&a[outer] * &t.coeff, unit_vec(n, inner)),
        };
        axpy(&mut d, &-s, &v);
    }
    d
}

/// Evaluates C1–C5 on every relation.
pub fn check_coherence(
    p: &OperadPresentation,
    ua: &UnitAction,
) -> Result<CoherenceReport, CoherenceError> {
    ua.check_normalized(p.star())?;
    let mut entries = Vec::new();
    for rel in 0..p.relations().len() {
        for eq in Equation::ALL {
            let difference = equation_difference(p, rel, eq, ua);
            entries.push(CoherenceEntry {
                relation: rel + 1,
                equation: eq,
                pass: is_zero_vector(&difference),
                difference,
            });
        }
    }
    Ok(CoherenceReport { entries })
}

/// The solution set of the coherence equations in `(α, β)` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSet {
    /// Every point `base + Σ tᵢ directions[i]`.
    Family {
        base: UnitAction,
        directions: Vec<Vec<Rational>>,
    },
    /// Finitely many rational solutions (possibly none).
    Points(Vec<UnitAction>),
    /// The quadratic stage could not be finished exactly; `points` are the
    /// rational solutions found, `system` the unsolved remainder in the
    /// parameters of `linear`.
    Residual {
        points: Vec<UnitAction>,
        system: SmallPolySystem,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceSolution {
    /// Solutions of C1–C3 and the normalizations.
    pub linear: AffineSolutionSet,
    /// C4 and C5 pulled back to the parameters of `linear`.
    pub quadratic: SmallPolySystem,
    pub set: SolutionSet,
}

impl CoherenceSolution {
    /// Explicit points: the listed points, or the base point of a family.
    pub fn points(&self) -> Vec<UnitAction> {
        match &self.set {
            SolutionSet::Family { base, .. } => vec![base.clone()],
            SolutionSet::Points(p) | SolutionSet::Residual { points: p, .. } => p.clone(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(&self.set, SolutionSet::Points(p) if p.is_empty())
    }

    /// Whether `ua` solves all five equations, decided from the stored
    /// description.
    pub fn contains(&self, ua: &UnitAction) -> bool {
        let x = ua.coordinates();
        match &self.set {
            SolutionSet::Family { base, directions } => {
                let diff: Vec<Rational> = x
                    .iter()
                    .zip(base.coordinates())
                    .map(|(a, b)| a - b)
                    .collect();
                is_zero_vector(&diff) || subspace_contains(directions, &diff)
            }
            SolutionSet::Points(p) => p.contains(ua),
            SolutionSet::Residual { points, system } => {
                if points.contains(ua) {
                    return true;
                }
                match linear_parameters(&self.linear, &x) {
                    Some(t) => system.is_satisfied_by(&t),
                    None => false,
                }
            }
        }
    }
}

/// Parameters `t` with `particular + Σ tᵢ dᵢ = x`, if any.
fn linear_parameters(set: &AffineSolutionSet, x: &[Rational]) -> Option<Vec<Rational>> {
    let m = set.directions.len();
    let rows: Vec<Vec<Rational>> = (0..x.len())
        .map(|r| set.directions.iter().map(|d| d[r].clone()).collect())
        .collect();
    let rhs: Vec<Rational> = x.iter().zip(&set.particular).map(|(a, b)| a - b).collect();
    if m == 0 {
        return is_zero_vector(&rhs).then(Vec::new);
    }
    let sol = solve_affine(&Matrix::from_rows(m, rows).ok()?, &rhs).ok()?;
    Some(sol.particular)
}

/// Solves C1–C5 for `(α, β)`: the linear equations C1–C3 with
/// `α(⋆) = β(⋆) = 1` first, then C4 and C5 on the resulting affine family.
pub fn solve_coherence(p: &OperadPresentation) -> Result<CoherenceSolution, CoherenceError> {
    let n = p.generator_count();
    let star = p.star();
    let unknowns = 2 * n;
    // Each equation is linear in x = (α, β); its coefficient columns come
    // from evaluating on unit vectors.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for rel in 0..p.relations().len() {
        for eq in [Equation::C1, Equation::C2, Equation::C3] {
            let cols: Vec<Vec<Rational>> = (0..unknowns)
                .map(|k| {
                    equation_difference(
                        p,
                        rel,
                        eq,
                        &UnitAction::from_coordinates(&unit_vec(unknowns, k)),
                    )
                })
                .collect();
            for comp in 0..n {
                rows.push(cols.iter().map(|c| c[comp].clone()).collect::<Vec<_>>());
                rhs.push(Rational::zero());
            }
        }
    }
    let mut alpha_row = star.to_vec();
    alpha_row.extend(vec![Rational::zero(); n]);
    let mut beta_row = vec![Rational::zero(); n];
    beta_row.extend(star.iter().cloned());
    rows.push(alpha_row);
    rows.push(beta_row);
    rhs.push(Rational::one());
    rhs.push(Rational::one());
    let linear = solve_affine(&Matrix::from_rows(unknowns, rows).expect("row width"), &rhs)
        .map_err(|_| CoherenceError::Infeasible)?;

    // x(t) = particular + Σ t_k d_k as affine polynomials in the parameters
    let m = linear.param_count();
    let coords: Vec<Poly> = (0..unknowns)
        .map(|i| {
            let lin: Vec<Rational> = linear.directions.iter().map(|d| d[i].clone()).collect();
            Poly::affine(linear.particular[i].clone(), &lin)
        })
        .collect();
    let ua_poly = (&coords[..n], &coords[n..]);
    let mut polys = Vec::new();
    for rel in 0..p.relations().len() {
        for eq in [Equation::C4, Equation::C5] {
            polys.extend(quadratic_difference(p, rel, eq, ua_poly, m));
        }
    }
    polys.retain(|q| !q.is_zero());
    polys.dedup();
    let variables = (1..=m).map(|k| format!("t{k}")).collect();
    let quadratic = SmallPolySystem::new(variables, polys);

    let to_ua = |t: &[Rational]| UnitAction::from_coordinates(&linear.point(t));
    let set = match eliminate_quadratics(&quadratic) {
        Ok(Variety::Affine { base, directions }) => {
            let origin = linear.point(&base);
            let zero = vec![Rational::zero(); m];
            let lifted = directions
                .iter()
                .map(|dir| {
                    let moved = linear.point(dir);
                    let at_zero = linear.point(&zero);
                    moved.iter().zip(&at_zero).map(|(a, b)| a - b).collect()
                })
                .collect();
            SolutionSet::Family {
                base: UnitAction::from_coordinates(&origin),
                directions: lifted,
            }
        }
        Ok(Variety::Points(points)) => {
            SolutionSet::Points(points.iter().map(|t| to_ua(t)).collect())
        }
        Ok(Variety::Residual {
            rational_points,
            system,
        }) => SolutionSet::Residual {
            points: rational_points.iter().map(|t| to_ua(t)).collect(),
            system,
        },
        Err(LinalgError::ParamOverflow(_)) => SolutionSet::Residual {
            points: Vec::new(),
            system: quadratic.clone(),
        },
        Err(_) => return Err(CoherenceError::Infeasible),
    };
    let solution = CoherenceSolution {
        linear,
        quadratic,
        set,
    };
    for ua in solution.points() {
        debug_assert!(check_coherence(p, &ua).map(|r| r.pass()).unwrap_or(false));
    }
    Ok(solution)
}

/// C4 or C5 with `(α, β)` replaced by affine polynomials; one polynomial per
/// coordinate of `P₂`.
fn quadratic_difference(
    p: &OperadPresentation,
    rel: usize,
    eq: Equation,
    (a, b): (&[Poly], &[Poly]),
    nvars: usize,
) -> Vec<Poly> {
    let n = p.generator_count();
    let star = p.star();
    let r = &p.relations()[rel];
    let mut out = vec![Poly::zero(nvars); n];
    let mut add = |s: Poly, v: &[Rational]| {
        for (o, c) in out.iter_mut().zip(v) {
            if !c.is_zero() {
                *o = o.add(&s.scale(c));
            }
        }
    };
    for t in &r.left {
        match eq {
            Equation::C4 => add(b[t.outer].scale(&t.coeff), &unit_vec(n, t.inner)),
            Equation::C5 => add(a[t.inner].mul(&a[t.outer]).scale(&t.coeff), star),
            _ => unreachable!(),
        }
    }
    for t in &r.right {
        let c = -t.coeff.clone();
        match eq {
            Equation::C4 => add(b[t.outer].mul(&b[t.inner]).scale(&c), star),
            Equation::C5 => add(a[t.outer].scale(&c), &unit_vec(n, t.inner)),
            _ => unreachable!(),
        }
    }
    out
}

/// `Λ′` (`α ≠ β`) or `Λ″` (`α = β`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaCase {
    Prime,
    DoublePrime,
}

/// Spanning vectors of `Λ′_n` or `Λ″_n` in `P₂^{⊗2} ⊕ P₂^{⊗2}`, using the
/// same coordinates as [`crate::operad::QuadraticRelation::pair_vector`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSpace {
    pub case: LambdaCase,
    pub basis_ops: Vec<Vec<Rational>>,
    pub generators: Vec<Vec<Rational>>,
}

impl LambdaSpace {
    pub fn dimension(&self) -> usize {
        let n = self.basis_ops.len();
        if self.generators.is_empty() {
            return 0;
        }
        rank(&Matrix::from_rows(2 * n * n, self.generators.clone()).expect("row width"))
    }
}

/// Number of listed generators for `n` basis operations.
pub fn lambda_generator_count(n: usize, case: LambdaCase) -> usize {
    match case {
        LambdaCase::Prime => {
            let m = n.saturating_sub(2);
            2 + (n - 1) + 2 * m + 2 * m * m
        }
        LambdaCase::DoublePrime => 1 + 2 * (n - 1) * (n - 1),
    }
}

pub fn lambda_space(
    star: &[Rational],
    basis_ops: &[Vec<Rational>],
    case: LambdaCase,
) -> Result<LambdaSpace, CoherenceError> {
    let n = star.len();
    if basis_ops.len() != n || basis_ops.iter().any(|v| v.len() != n) {
        return Err(CoherenceError::NotABasis);
    }
    if rank(&Matrix::from_rows(n, basis_ops.to_vec()).expect("row width")) != n {
        return Err(CoherenceError::NotABasis);
    }
    let mut sum = vec![Rational::zero(); n];
    for v in basis_ops {
        axpy(&mut sum, &Rational::one(), v);
    }
    if sum != star {
        return Err(CoherenceError::StarMismatch);
    }
    if case == LambdaCase::Prime && n < 2 {
        return Err(CoherenceError::CaseNeedsTwo);
    }
    let zero = vec![Rational::zero(); n * n];
    let t = |x: &[Rational], y: &[Rational]| kron(x, y);
    let pair =
        |l: Vec<Rational>, r: Vec<Rational>| -> Vec<Rational> { l.into_iter().chain(r).collect() };
    // 1-based access to the basis
    let pb = |i: usize| basis_ops[i - 1].as_slice();
    let mut gens = Vec::new();
    match case {
        LambdaCase::Prime => {
            gens.push(pair(t(star, pb(2)), t(pb(2), pb(2))));
            gens.push(pair(t(pb(1), pb(1)), t(pb(1), star)));
            for i in 2..=n {
                gens.push(pair(t(pb(i), pb(1)), t(pb(i), pb(1))));
            }
            for j in 3..=n {
                gens.push(pair(t(pb(2), pb(j)), t(pb(2), pb(j))));
            }
            for i in 3..=n {
                gens.push(pair(t(pb(1), pb(i)), t(pb(i), pb(2))));
            }
            for i in 3..=n {
                for j in 3..=n {
                    gens.push(pair(t(pb(i), pb(j)), zero.clone()));
                    gens.push(pair(zero.clone(), t(pb(i), pb(j))));
                }
            }
        }
        LambdaCase::DoublePrime => {
            let first = pair(t(pb(1), star), t(pb(1), star));
            let second = pair(t(star, pb(1)), t(star, pb(1)));
            let third = pair(t(pb(1), pb(1)), t(pb(1), pb(1)));
            gens.push(
                first
                    .iter()
                    .zip(&second)
                    .zip(&third)
                    .map(|((x, y), z)| x + y - z)
                    .collect(),
            );
            for i in 2..=n {
                for j in 2..=n {
                    gens.push(pair(t(pb(i), pb(j)), zero.clone()));
                    gens.push(pair(zero.clone(), t(pb(i), pb(j))));
                }
            }
        }
    }
    Ok(LambdaSpace {
        case,
        basis_ops: basis_ops.to_vec(),
        generators: gens,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentReport {
    pub contained: bool,
    /// 1-based index of the first relation outside the subspace.
    pub offending: Option<usize>,
    /// For each relation, the 0-based index of a listed generator it equals
    /// exactly, if any.
    pub matches: Vec<Option<usize>>,
}

pub fn check_containment(p: &OperadPresentation, ls: &LambdaSpace) -> ContainmentReport {
    let n = p.generator_count();
    let mut offending = None;
    let mut matches = Vec::new();
    for (i, r) in p.relations().iter().enumerate() {
        let v = r.pair_vector(n);
        if offending.is_none() && !is_zero_vector(&v) && !subspace_contains(&ls.generators, &v) {
            offending = Some(i + 1);
        }
        matches.push(ls.generators.iter().position(|g| *g == v));
    }
    ContainmentReport {
        contained: offending.is_none(),
        offending,
        matches,
    }
}

/// Removes leaf `position` of a tree by plugging in the adjoined unit,
/// returning the scalar picked up and the contracted tree.
fn contract_tree(t: &LabeledTree, position: usize, ua: &UnitAction) -> (Rational, LabeledTree) {
    match t {
        LabeledTree::Leaf => unreachable!("arity-1 contraction handled by the caller"),
        LabeledTree::Node { label, left, right } => {
            let la = left.arity();
            if position < la {
                if **left == LabeledTree::Leaf {
                    return (ua.beta[*label].clone(), (**right).clone());
                }
                let (s, l) = contract_tree(left, position, ua);
                (s, LabeledTree::node(*label, l, (**right).clone()))
            } else {
                if **right == LabeledTree::Leaf {
                    return (ua.alpha[*label].clone(), (**left).clone());
                }
                let (s, r) = contract_tree(right, position - la, ua);
                (s, LabeledTree::node(*label, (**left).clone(), r))
            }
        }
    }
}

/// `γ(x; I, …, 𝒾, …, I)` with the unit in slot `position` (0-based), for
/// `x ∈ P_k` with `k ≥ 2`.
pub fn unit_contract(
    c: &OperadComponents,
    ua: &UnitAction,
    x: &OpElement,
    position: usize,
) -> Result<OpElement, OperadError> {
    let k = x.arity;
    if position >= k {
        return Err(OperadError::IndexOutOfRange { position, arity: k });
    }
    assert!(k >= 2, "contracting P₁ gives the adjoined unit itself");
    let mut out = OpElement::zero(k - 1, c.dim(k - 1));
    for (b, coeff) in x.coords.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (s, t) = contract_tree(c.representative(k, b), position, ua);
        if s.is_zero() {
            continue;
        }
        out = out.add(&c.reduce_tree(&t)?.scale(&(s * coeff)));
    }
    Ok(out)
}

/// One unit identity of the star tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarUnitCheck {
    pub n: usize,
    /// 1-based slot receiving the unit in `γ(⋆_n; I, …, 𝒾, …, I) = ⋆_{n-1}`;
    /// `0` encodes `γ(⋆; 𝒾, ⋆_n)` and `n + 1` encodes `γ(⋆; ⋆_n, 𝒾)`.
    pub slot: usize,
    pub holds: bool,
}

/// Checks the unit identities of `⋆_n` for `2 ≤ n ≤ K` and the endpoint
/// splits `γ(⋆; 𝒾, ⋆_n) = γ(⋆; ⋆_n, 𝒾) = ⋆_n` for `1 ≤ n ≤ K`.
pub fn verify_star_units(
    c: &OperadComponents,
    ua: &UnitAction,
) -> Result<Vec<StarUnitCheck>, CoherenceError> {
    ua.check_normalized(c.presentation().star())?;
    let star = c.presentation().star();
    let (left, right) = (
        unit_eval(ua, star, Side::LeftUnit),
        unit_eval(ua, star, Side::RightUnit),
    );
    let mut checks = Vec::new();
    for n in 1..=c.max_arity() {
        let sn = c.star_power(n);
        checks.push(StarUnitCheck {
            n,
            slot: 0,
            holds: left.is_one(),
        });
        if n >= 2 {
            for i in 0..n {
                let v = unit_contract(c, ua, sn, i)?;
                checks.push(StarUnitCheck {
                    n,
                    slot: i + 1,
                    holds: &v == c.star_power(n - 1),
                });
            }
        }
        checks.push(StarUnitCheck {
            n,
            slot: n + 1,
            holds: right.is_one(),
        });
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::presets;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn unit_eval_dendriform() {
        let (_, ua) = presets::dendriform();
        assert_eq!(unit_eval(&ua, &v(&[1, 0]), Side::RightUnit), rat(1));
        assert_eq!(unit_eval(&ua, &v(&[0, 1]), Side::RightUnit), rat(0));
        assert_eq!(unit_eval(&ua, &v(&[1, 1]), Side::LeftUnit), rat(1));
        assert_eq!(unit_eval(&ua, &v(&[1, 1]), Side::RightUnit), rat(1));
    }

    #[test]
    fn dendriform_relation_three_c4() {
        let (p, ua) = presets::dendriform();
        let report = check_coherence(&p, &ua).unwrap();
        assert!(report.pass());
        assert_eq!(report.entries.len(), 15);
        // β(≻)(≺ + ≻) against β(≻)² ⋆ with β(≻) = 1
        assert_eq!(equation_difference(&p, 2, Equation::C4, &ua), v(&[0, 0]));
    }

    #[test]
    fn corrupted_beta_fails_first_at_c1() {
        let (p, _) = presets::dendriform();
        let ua = UnitAction::new(v(&[1, 0]), v(&[1, 0]));
        let report = check_coherence(&p, &ua).unwrap();
        let first = report.failures().next().unwrap();
        assert_eq!((first.relation, first.equation), (1, Equation::C1));
        // ≺ − (≺ + ≻)
        assert_eq!(first.difference, v(&[0, -1]));
    }

    #[test]
    fn unnormalized_is_rejected() {
        let (p, _) = presets::dendriform();
        let ua = UnitAction::new(v(&[1, 1]), v(&[0, 1]));
        assert!(matches!(
            check_coherence(&p, &ua),
            Err(CoherenceError::NotNormalized { .. })
        ));
    }

    #[test]
    fn associative_solution_is_unique() {
        let (p, ua) = presets::associative();
        let sol = solve_coherence(&p).unwrap();
        assert_eq!(sol.set, SolutionSet::Points(vec![ua]));
    }

    #[test]
    fn generator_counts() {
        assert_eq!(lambda_generator_count(2, LambdaCase::Prime), 3);
        assert_eq!(lambda_generator_count(3, LambdaCase::Prime), 8);
        assert_eq!(lambda_generator_count(2, LambdaCase::DoublePrime), 3);
        assert_eq!(lambda_generator_count(1, LambdaCase::DoublePrime), 1);
    }

    #[test]
    fn lambda_errors() {
        let star = v(&[1, 1]);
        assert_eq!(
            lambda_space(&star, &[v(&[1, 0]), v(&[0, 2])], LambdaCase::Prime),
            Err(CoherenceError::StarMismatch)
        );
        assert_eq!(
            lambda_space(&star, &[v(&[1, 1]), v(&[1, 1])], LambdaCase::Prime),
            Err(CoherenceError::NotABasis)
        );
        assert_eq!(
            lambda_space(&v(&[1]), &[v(&[1])], LambdaCase::Prime),
            Err(CoherenceError::CaseNeedsTwo)
        );
    }
}
