//! Tiny polynomial systems in at most two unknowns.
//!
//! After the linear part of a solve has been eliminated, what remains is a
//! handful of polynomials of total degree at most two in at most two free
//! parameters. They are solved exactly: univariate gcds, resultants for the
//! two-variable case, and rational-root search. Anything with irrational
//! coordinates (or a positive-dimensional nonlinear component) is handed
//! back unsolved.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{format_rational, LinalgError, Rational};

/// Dense univariate polynomial, coefficients from the constant term up.
/// Always trimmed: the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / d.lead();
            for (i, dc) in d.0.iter().enumerate() {
                rem[shift + i] -= &c * dc;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    fn monic(&self) -> UPoly {
        let l = self.lead().clone();
        UPoly(self.0.iter().map(|c| c / &l).collect())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Distinct rational roots, plus whether a factor without rational
    /// roots remains (irrational or complex roots, or a search that was
    /// abandoned because the coefficients were too large to factor).
    pub fn rational_roots(&self) -> (Vec<Rational>, bool) {
        let mut roots = Vec::new();
        let Some(_) = self.degree() else {
            return (roots, false);
        };
        let mut g = self.clone();
        if g.0[0].is_zero() {
            roots.push(Rational::zero());
            while !g.is_zero() && g.0[0].is_zero() {
                g.0.remove(0);
            }
        }
        if g.degree() == Some(0) {
            return (roots, false);
        }
        let ints = integer_coefficients(&g);
        let (c0, cn) = (ints[0].abs(), ints[ints.len() - 1].abs());
        let (Some(ps), Some(qs)) = (divisors(&c0), divisors(&cn)) else {
            return (roots, true);
        };
        for p in &ps {
            for q in &qs {
                for sign in [1, -1] {
                    let r = BigRational::new(p * BigInt::from(sign), q.clone());
                    if g.degree().unwrap_or(0) == 0 {
                        break;
                    }
                    let linear = UPoly::new(vec![-r.clone(), Rational::one()]);
                    let mut hit = false;
                    while g.degree().unwrap_or(0) > 0 && g.eval(&r).is_zero() {
                        g = g.div_rem(&linear).0;
                        hit = true;
                    }
                    if hit && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        (roots, g.degree().unwrap_or(0) > 0)
    }
}

fn integer_coefficients(p: &UPoly) -> Vec<BigInt> {
    let lcm = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.0.iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect()
}

const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

/// Positive divisors by trial division; `None` when the number is too big.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64().filter(|&n| n <= DIVISOR_SEARCH_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out.sort();
    Some(out)
}

/// Sparse multivariate polynomial keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    /// `c + Σ coeffs[i] · t_i`.
    pub fn affine(c: Rational, coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, c);
        for (i, a) in coeffs.iter().enumerate() {
            p = p.add(&Self::var(n, i).scale(a));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Replaces variable `var` by `value` (a polynomial over the same
    /// variables).
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[var];
            rest[var] = 0;
            let mut term = Poly::zero(self.nvars);
            term.add_term(rest, c.clone());
            for _ in 0..k {
                term = term.mul(value);
            }
            out = out.add(&term);
        }
        out
    }

    /// The univariate polynomial in `var`, if no other variable occurs.
    pub fn as_univariate(&self, var: usize) -> Option<UPoly> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(var) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return None;
            }
            coeffs[e[var] as usize] += c;
        }
        Some(UPoly::new(coeffs))
    }

    /// Coefficients of `var^k`, each univariate in `other`. Only meaningful
    /// for two-variable polynomials.
    fn coefficients_in(&self, var: usize, other: usize) -> Vec<UPoly> {
        let dv = self.degree_in(var) as usize;
        let dw = self.degree_in(other) as usize;
        let mut grid = vec![vec![Rational::zero(); dw + 1]; dv + 1];
        for (e, c) in &self.terms {
            grid[e[var] as usize][e[other] as usize] += c;
        }
        grid.into_iter().map(UPoly::new).collect()
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                parts.push(format_rational(c));
            } else if c.is_one() {
                parts.push(mono.join("*"));
            } else {
                parts.push(format!("{}*{}", format_rational(c), mono.join("*")));
            }
        }
        parts.join(" + ")
    }
}

/// Polynomials of total degree at most two over named unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallPolySystem {
    pub variables: Vec<String>,
    pub polynomials: Vec<Poly>,
}

impl SmallPolySystem {
    pub fn new(variables: Vec<String>, polynomials: Vec<Poly>) -> Self {
        debug_assert!(polynomials.iter().all(|p| p.nvars() == variables.len()));
        Self {
            variables,
            polynomials,
        }
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        self.polynomials.iter().all(|p| p.eval(point).is_zero())
    }
}

impl fmt::Display for SmallPolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<_> = self.polynomials.iter().filter(|p| !p.is_zero()).collect();
        if nonzero.is_empty() {
            return write!(f, "{{}}");
        }
        let eqs: Vec<String> = nonzero
            .iter()
            .map(|p| format!("{} = 0", p.render(&self.variables)))
            .collect();
        write!(f, "{{{}}}", eqs.join(", "))
    }
}

/// Exact solution set of a [`SmallPolySystem`].
///
/// With zero unknowns, `Points(vec![vec![]])` means every polynomial
/// vanished (accept) and `Points(vec![])` means one did not (reject).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variety {
    /// Every point of `base + span(directions)` is a solution.
    Affine {
        base: Vec<Rational>,
        directions: Vec<Vec<Rational>>,
    },
    /// Finitely many solutions, all rational.
    Points(Vec<Vec<Rational>>),
    /// Not reduced to rational points: irrational coordinates or a
    /// nonlinear curve of solutions. Rational points found on the way are
    /// kept.
    Residual {
        rational_points: Vec<Vec<Rational>>,
        system: SmallPolySystem,
    },
}

impl Variety {
    pub fn accepts(&self) -> bool {
        matches!(self, Variety::Points(p) if p.len() == 1 && p[0].is_empty())
    }
}

enum Univariate {
    All,
    Roots {
        roots: Vec<Rational>,
        leftover: bool,
    },
}

fn solve_univariate(polys: impl IntoIterator<Item = UPoly>) -> Univariate {
    let g = polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .fold(UPoly::default(), |acc, p| acc.gcd(&p));
    if g.is_zero() {
        return Univariate::All;
    }
    let (roots, leftover) = g.rational_roots();
    Univariate::Roots { roots, leftover }
}

/// Solves a system with at most two unknowns exactly.
pub fn eliminate_quadratics(sys: &SmallPolySystem) -> Result<Variety, LinalgError> {
    let nvars = sys.variables.len();
    let polys: Vec<Poly> = sys
        .polynomials
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    match nvars {
        0 => Ok(Variety::Points(if polys.is_empty() {
            vec![vec![]]
        } else {
            vec![]
        })),
        1 => {
            let uni = polys
                .iter()
                .map(|p| p.as_univariate(0).expect("one variable"));
            Ok(match solve_univariate(uni) {
                Univariate::All => Variety::Affine {
                    base: vec![Rational::zero()],
                    directions: vec![vec![Rational::one()]],
                },
                Univariate::Roots { roots, leftover } => {
                    let points = roots.into_iter().map(|r| vec![r]).collect();
                    if leftover {
                        Variety::Residual {
                            rational_points: points,
                            system: sys.clone(),
                        }
                    } else {
                        Variety::Points(points)
                    }
                }
            })
        }
        2 => Ok(solve_bivariate(sys, polys)),
        n => Err(LinalgError::ParamOverflow(n)),
    }
}

fn solve_bivariate(sys: &SmallPolySystem, polys: Vec<Poly>) -> Variety {
    let (zero, one) = (Rational::zero(), Rational::one());
    if polys.is_empty() {
        return Variety::Affine {
            base: vec![zero.clone(), zero.clone()],
            directions: vec![vec![one.clone(), zero.clone()], vec![zero, one]],
        };
    }
    if polys.iter().any(|p| p.total_degree() == Some(0)) {
        return Variety::Points(vec![]);
    }
    let residual = |points: Vec<Vec<Rational>>| Variety::Residual {
        rational_points: points,
        system: sys.clone(),
    };

    if let Some(lin) = polys.iter().find(|p| p.total_degree() == Some(1)) {
        let coeff = |e: [u32; 2]| {
            lin.terms
                .get(e.as_slice())
                .cloned()
                .unwrap_or_else(Rational::zero)
        };
        let (a, b, c) = (coeff([1, 0]), coeff([0, 1]), coeff([0, 0]));
        // Solve the linear polynomial for one unknown as an affine function
        // of the other, then finish univariately.
        let (solved, free) = if !a.is_zero() { (0, 1) } else { (1, 0) };
        let (ks, kf) = if solved == 0 { (&a, &b) } else { (&b, &a) };
        let slope = -(kf / ks);
        let offset = -(&c / ks);
        let mut sub_coeffs = vec![Rational::zero(); 2];
        sub_coeffs[free] = slope.clone();
        let value = Poly::affine(offset.clone(), &sub_coeffs);
        let rest = polys.iter().map(|p| {
            p.substitute(solved, &value)
                .as_univariate(free)
                .expect("eliminated")
        });
        let lift = |t: Rational| {
            let mut pt = vec![Rational::zero(), Rational::zero()];
            pt[solved] = &offset + &slope * &t;
            pt[free] = t;
            pt
        };
        return match solve_univariate(rest) {
            Univariate::All => {
                let mut dir = vec![Rational::zero(), Rational::zero()];
                dir[solved] = slope.clone();
                dir[free] = Rational::one();
                Variety::Affine {
                    base: lift(Rational::zero()),
                    directions: vec![dir],
                }
            }
            Univariate::Roots { roots, leftover } => {
                let points = roots.into_iter().map(lift).collect();
                if leftover {
                    residual(points)
                } else {
                    Variety::Points(points)
                }
            }
        };
    }

    // Purely quadratic: eliminate one unknown by resultants, trying both.
    for (elim, keep) in [(0, 1), (1, 0)] {
        let mut eliminants: Vec<UPoly> = Vec::new();
        let with_var: Vec<&Poly> = polys.iter().filter(|p| p.degree_in(elim) > 0).collect();
        for p in polys.iter().filter(|p| p.degree_in(elim) == 0) {
            eliminants.push(p.as_univariate(keep).expect("two variables"));
        }
        for i in 0..with_var.len() {
            for j in i + 1..with_var.len() {
                eliminants.push(resultant(
                    &with_var[i].coefficients_in(elim, keep),
                    &with_var[j].coefficients_in(elim, keep),
                ));
            }
        }
        let Univariate::Roots { roots, leftover } = solve_univariate(eliminants) else {
            continue;
        };
        let mut points = Vec::new();
        let mut incomplete = leftover;
        for r in roots {
            let mut fixed = vec![Rational::zero(); 2];
            fixed[keep] = Rational::one();
            let value = Poly::constant(2, r.clone());
            let rest = polys.iter().map(|p| {
                p.substitute(keep, &value)
                    .as_univariate(elim)
                    .expect("one left")
            });
            match solve_univariate(rest) {
                Univariate::All => incomplete = true,
                Univariate::Roots {
                    roots: inner,
                    leftover,
                } => {
                    incomplete |= leftover;
                    for s in inner {
                        let mut pt = vec![Rational::zero(), Rational::zero()];
                        pt[keep] = r.clone();
                        pt[elim] = s;
                        points.push(pt);
                    }
                }
            }
        }
        points.sort();
        return if incomplete {
            residual(points)
        } else {
            Variety::Points(points)
        };
    }
    residual(vec![])
}

/// Resultant of two polynomials given by their coefficient lists in the
/// eliminated variable, via the Sylvester determinant.
fn resultant(f: &[UPoly], g: &[UPoly]) -> UPoly {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut syl = vec![vec![UPoly::default(); size]; size];
    for row in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            syl[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            syl[n + row][row + k] = c.clone();
        }
    }
    determinant(&syl)
}

fn determinant(m: &[Vec<UPoly>]) -> UPoly {
    match m.len() {
        0 => UPoly::constant(Rational::one()),
        1 => m[0][0].clone(),
        n => {
            let mut acc = UPoly::default();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<UPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].mul(&determinant(&minor));
                acc = if col % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.add(&term.neg())
                };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    fn t1() -> Poly {
        Poly::var(1, 0)
    }

    fn sys1(polys: Vec<Poly>) -> SmallPolySystem {
        SmallPolySystem::new(vec!["t".into()], polys)
    }

    #[test]
    fn zero_params_accept_and_reject() {
        let ok = SmallPolySystem::new(vec![], vec![Poly::zero(0)]);
        assert!(eliminate_quadratics(&ok).unwrap().accepts());
        let bad = SmallPolySystem::new(vec![], vec![Poly::constant(0, rat(1))]);
        assert_eq!(eliminate_quadratics(&bad).unwrap(), Variety::Points(vec![]));
    }

    #[test]
    fn idempotent_equation_has_two_points() {
        let p = t1().mul(&t1()).sub(&t1());
        assert_eq!(
            eliminate_quadratics(&sys1(vec![p])).unwrap(),
            Variety::Points(vec![vec![rat(0)], vec![rat(1)]])
        );
    }

    #[test]
    fn irrational_roots_are_reported_not_approximated() {
        let p = t1().mul(&t1()).sub(&Poly::constant(1, rat(2)));
        match eliminate_quadratics(&sys1(vec![p])).unwrap() {
            Variety::Residual {
                rational_points, ..
            } => assert!(rational_points.is_empty()),
            other => panic!("expected residual, got {other:?}"),
        }
    }

    #[test]
    fn three_params_overflow() {
        let s = SmallPolySystem::new(vec!["a".into(), "b".into(), "c".into()], vec![]);
        assert_eq!(eliminate_quadratics(&s), Err(LinalgError::ParamOverflow(3)));
    }

    #[test]
    fn univariate_all_zero_is_a_line() {
        let v = eliminate_quadratics(&sys1(vec![Poly::zero(1)])).unwrap();
        assert!(matches!(v, Variety::Affine { .. }));
    }

    #[test]
    fn bivariate_linear_then_quadratic() {
        // s - t = 0, s^2 - 4 = 0  ->  (2,2), (-2,-2)
        let s = Poly::var(2, 0);
        let t = Poly::var(2, 1);
        let sys = SmallPolySystem::new(
            vec!["s".into(), "t".into()],
            vec![s.sub(&t), s.mul(&s).sub(&Poly::constant(2, rat(4)))],
        );
        assert_eq!(
            eliminate_quadratics(&sys).unwrap(),
            Variety::Points(vec![vec![rat(-2), rat(-2)], vec![rat(2), rat(2)]])
        );
    }

    #[test]
    fn bivariate_quadratic_intersection() {
        // s^2 + t^2 - 2 = 0, s*t - 1 = 0  ->  (1,1), (-1,-1)
        let s = Poly::var(2, 0);
        let t = Poly::var(2, 1);
        let sys = SmallPolySystem::new(
            vec!["s".into(), "t".into()],
            vec![
                s.mul(&s).add(&t.mul(&t)).sub(&Poly::constant(2, rat(2))),
                s.mul(&t).sub(&Poly::constant(2, rat(1))),
            ],
        );
        let v = eliminate_quadratics(&sys).unwrap();
        assert_eq!(
            v,
            Variety::Points(vec![vec![rat(-1), rat(-1)], vec![rat(1), rat(1)]])
        );
    }

    #[test]
    fn single_conic_stays_residual() {
        let s = Poly::var(2, 0);
        let t = Poly::var(2, 1);
        let sys = SmallPolySystem::new(vec!["s".into(), "t".into()], vec![s.mul(&t)]);
        assert!(matches!(
            eliminate_quadratics(&sys).unwrap(),
            Variety::Residual { .. }
        ));
    }

    #[test]
    fn rational_root_search() {
        // (2t - 1)(t + 3) t
        let p = UPoly::new(vec![rat(-1), rat(2)])
            .mul(&UPoly::new(vec![rat(3), rat(1)]))
            .mul(&UPoly::new(vec![rat(0), rat(1)]));
        let (roots, leftover) = p.rational_roots();
        assert_eq!(roots, vec![rat(-3), rat(0), frac(1, 2)]);
        assert!(!leftover);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = UPoly::new(vec![rat(-1), rat(0), rat(1)]); // t^2 - 1
        let b = UPoly::new(vec![rat(-1), rat(1)]); // t - 1
        assert_eq!(a.gcd(&b), b);
    }
}
