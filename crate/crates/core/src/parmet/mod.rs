//! Partial metric spaces and their tight spans, in exact rational arithmetic.
//!
//! A space carries a symmetric matrix `α` over `[0, ∞]` with
//!
//! ```text
//! α(x,x) ∨ α(y,y) ≤ α(x,y)
//! α(x,z) ≤ α(x,y) − α(y,y) + α(y,z)
//! ```
//!
//! Self-distances may be nonzero and infinite values are allowed. All
//! comparisons below are in the numeric order of `[0, ∞]`, and subtraction is
//! [`ExtRat::monus`]. The space is the symmetric category over the Lawvere
//! quantale with `|x| = α(x,x)`; [`ParMetSpace::to_category`] exposes it so
//! the generic machinery can cross-check everything here.

mod files;
mod generate;

use serde::Serialize;

use crate::diagonal::DiagonalQuantaloid;
use crate::error::{Error, Result};
use crate::extrat::ExtRat;
use crate::qcat::QCategory;
use crate::qrel::TypedSet;
use crate::quantale::Lawvere;

pub use files::{FamilyEntry, HyperfamilyFile, RadiusFile, SpaceFile};
pub use generate::{random_space, sample_ambient};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum Violation {
    /// `α(x,x) ∨ α(y,y) > α(x,y)`.
    SelfDistance { x: String, y: String },
    Asymmetric { x: String, y: String },
    /// `α(x,z) > α(x,y) − α(y,y) + α(y,z)`.
    Triangle { x: String, y: String, z: String },
}

/// Checks the axioms, reporting every violation in point order.
pub fn validate_parmet(points: &[String], alpha: &[Vec<ExtRat>]) -> Result<Vec<Violation>> {
    let n = points.len();
    if alpha.len() != n || alpha.iter().any(|row| row.len() != n) {
        return Err(Error::Schema(format!("alpha must be a {n}×{n} matrix")));
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(Error::Schema(format!("duplicate point {p:?}")));
        }
    }
    let name = |i: usize| points[i].clone();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if alpha[x][x] > alpha[x][y] || alpha[y][y] > alpha[x][y] {
                out.push(Violation::SelfDistance { x: name(x), y: name(y) });
            }
            if x < y && alpha[x][y] != alpha[y][x] {
                out.push(Violation::Asymmetric { x: name(x), y: name(y) });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if alpha[x][z] > &alpha[x][y].monus(&alpha[y][y]) + &alpha[y][z] {
                    out.push(Violation::Triangle {
                        x: name(x),
                        y: name(y),
                        z: name(z),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParMetSpace {
    points: Vec<String>,
    alpha: Vec<Vec<ExtRat>>,
}

impl ParMetSpace {
    pub fn new(points: Vec<String>, alpha: Vec<Vec<ExtRat>>) -> Result<Self> {
        if let Some(v) = validate_parmet(&points, &alpha)?.into_iter().next() {
            return Err(Error::Precondition(format!("not a partial metric: {v:?}")));
        }
        Ok(ParMetSpace { points, alpha })
    }

    /// Parses names and `"p/q" | "inf"` entries.
    pub fn parse(points: &[&str], alpha: &[&[&str]]) -> Result<Self> {
        let alpha = alpha
            .iter()
            .map(|row| row.iter().map(|v| v.parse()).collect())
            .collect::<Result<_>>()?;
        ParMetSpace::new(points.iter().map(|p| p.to_string()).collect(), alpha)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn alpha(&self, x: usize, y: usize) -> &ExtRat {
        &self.alpha[x][y]
    }

    pub fn matrix(&self) -> &[Vec<ExtRat>] {
        &self.alpha
    }

    /// The same space with points listed in `order`.
    pub fn reorder(&self, order: &[usize]) -> Result<Self> {
        let mut seen = order.to_vec();
        seen.sort_unstable();
        if seen != (0..self.len()).collect::<Vec<_>>() {
            return Err(Error::Precondition("order is not a permutation of the points".into()));
        }
        Ok(ParMetSpace {
            points: order.iter().map(|&i| self.points[i].clone()).collect(),
            alpha: order
                .iter()
                .map(|&i| order.iter().map(|&j| self.alpha[i][j].clone()).collect())
                .collect(),
        })
    }

    /// Finite entries and `x = y ⟺ α(x,x) = α(y,y) = α(x,y)`.
    pub fn is_matthews(&self) -> bool {
        let n = self.len();
        let finite = self.alpha.iter().flatten().all(|v| !v.is_infinite());
        let separated = (0..n).all(|x| {
            (x + 1..n).all(|y| !(self.alpha[x][x] == self.alpha[y][y] && self.alpha[x][x] == self.alpha[x][y]))
        });
        finite && separated
    }

    /// Zero self-distances.
    pub fn is_classical(&self) -> bool {
        (0..self.len()).all(|x| self.alpha[x][x].is_zero())
    }

    pub fn to_category(&self) -> QCategory<ExtRat> {
        let d = DiagonalQuantaloid::new(Lawvere);
        let types = (0..self.len()).map(|x| self.alpha[x][x].clone()).collect();
        let set = TypedSet::from_parts(self.points.clone(), types);
        QCategory::from_rows(&d, set, self.alpha.clone()).expect("a partial metric is a symmetric category")
    }
}

/// `μ: X → [r, ∞]` with `α(x,x) ≤ μ(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadiusFunction {
    pub r: ExtRat,
    pub values: Vec<ExtRat>,
}

impl RadiusFunction {
    pub fn new(r: ExtRat, values: Vec<ExtRat>) -> Self {
        RadiusFunction { r, values }
    }

    pub fn parse(r: &str, values: &[&str]) -> Result<Self> {
        Ok(RadiusFunction {
            r: r.parse()?,
            values: values.iter().map(|v| v.parse()).collect::<Result<_>>()?,
        })
    }

    /// `α(−, x)` with type `α(x,x)`.
    pub fn yoneda(m: &ParMetSpace, x: usize) -> Self {
        RadiusFunction {
            r: m.alpha[x][x].clone(),
            values: (0..m.len()).map(|y| m.alpha[y][x].clone()).collect(),
        }
    }

    /// Pointwise numeric `≤`.
    pub fn below(&self, other: &RadiusFunction) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    fn check_typed(&self, m: &ParMetSpace) -> Result<()> {
        if self.values.len() != m.len() {
            return Err(Error::Precondition(format!(
                "radius function has {} values for {} points",
                self.values.len(),
                m.len()
            )));
        }
        if let Some(x) = (0..m.len()).find(|&x| self.values[x] < self.r || self.values[x] < m.alpha[x][x]) {
            return Err(Error::Precondition(format!(
                "value at {} is below max(r, α(x,x))",
                m.points[x]
            )));
        }
        Ok(())
    }
}

/// `(α(x,y) + r) ⊖ μ(y)`.
fn reach(m: &ParMetSpace, mu: &RadiusFunction, x: usize, y: usize) -> ExtRat {
    (&m.alpha[x][y] + &mu.r).monus(&mu.values[y])
}

/// `r ∨ α(x,x) ∨ sup_y (α(x,y) + r − μ(y))`.
fn tight_value(m: &ParMetSpace, mu: &RadiusFunction, x: usize) -> ExtRat {
    (0..m.len())
        .map(|y| reach(m, mu, x, y))
        .fold(mu.r.clone().max(m.alpha[x][x].clone()), ExtRat::max)
}

/// The first point where `μ` differs from its tight value.
pub fn tight_defect(m: &ParMetSpace, mu: &RadiusFunction) -> Result<Option<usize>> {
    mu.check_typed(m)?;
    Ok((0..m.len()).find(|&x| mu.values[x] != tight_value(m, mu, x)))
}

pub fn tight_member(m: &ParMetSpace, mu: &RadiusFunction) -> Result<bool> {
    Ok(tight_defect(m, mu)?.is_none())
}

/// `α(x,y) ≤ μ(x) − r + μ(y)` for all pairs, plus typing. Returns the first
/// failing pair.
pub fn ambient_defect(m: &ParMetSpace, mu: &RadiusFunction) -> Result<Option<(usize, usize)>> {
    mu.check_typed(m)?;
    let n = m.len();
    Ok((0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| m.alpha[x][y] > &mu.values[x].monus(&mu.r) + &mu.values[y]))
}

pub fn is_ambient(m: &ParMetSpace, mu: &RadiusFunction) -> Result<bool> {
    Ok(ambient_defect(m, mu)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tightened {
    pub function: RadiusFunction,
    /// Sweeps run, at least one.
    pub sweeps: usize,
}

/// Gauss–Seidel sweeps in point order, setting
/// `μ(z) ← r ∨ α(z,z) ∨ max_{y ≠ z} (α(z,y) + r − μ(y))`.
pub fn tighten_sweep(m: &ParMetSpace, mu: &RadiusFunction) -> Result<Tightened> {
    if let Some((x, y)) = ambient_defect(m, mu)? {
        return Err(Error::Precondition(format!(
            "not ambient at ({}, {})",
            m.points[x], m.points[y]
        )));
    }
    let n = m.len();
    let cap = (n * n).max(1);
    let mut cur = mu.clone();
    for sweep in 1..=cap {
        for z in 0..n {
            let floor = cur.r.clone().max(m.alpha[z][z].clone());
            // the self term is dominated by the floor
            debug_assert!(reach(m, &cur, z, z) <= floor);
            cur.values[z] = (0..n)
                .filter(|&y| y != z)
                .map(|y| reach(m, &cur, z, y))
                .fold(floor, ExtRat::max);
        }
        if tight_member(m, &cur)? {
            if !cur.below(mu) || !is_ambient(m, &cur)? {
                return Err(Error::Invariant("sweep left the ambient functions below the input".into()));
            }
            return Ok(Tightened {
                function: cur,
                sweeps: sweep,
            });
        }
    }
    Err(Error::Invariant(format!("no fixed point after {cap} sweeps")))
}

/// `σ(μ, λ) = r ∨ s ∨ sup_x (λ(x) + r − μ(x))` for tight `μ, λ`.
pub fn sigma(m: &ParMetSpace, mu: &RadiusFunction, lam: &RadiusFunction) -> Result<ExtRat> {
    for f in [mu, lam] {
        if let Some(x) = tight_defect(m, f)? {
            return Err(Error::Precondition(format!("not tight at {}", m.points[x])));
        }
    }
    let one_way = |a: &RadiusFunction, b: &RadiusFunction| {
        (0..m.len())
            .map(|x| (&b.values[x] + &a.r).monus(&a.values[x]))
            .fold(a.r.clone().max(b.r.clone()), ExtRat::max)
    };
    let there = one_way(mu, lam);
    if there != one_way(lam, mu) {
        return Err(Error::Invariant("σ is not symmetric".into()));
    }
    Ok(there)
}

/// The space of the given tight functions under `σ`.
pub fn tight_span_space(m: &ParMetSpace, members: &[(String, RadiusFunction)]) -> Result<ParMetSpace> {
    let alpha = members
        .iter()
        .map(|(_, a)| members.iter().map(|(_, b)| sigma(m, a, b)).collect())
        .collect::<Result<_>>()?;
    ParMetSpace::new(members.iter().map(|(n, _)| n.clone()).collect(), alpha)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenseCheck {
    pub dense: bool,
    /// First `(y, y')` where the identity fails.
    pub witness: Option<(String, String)>,
}

/// For isometric `f: X → Y`, checks at every `(y, y')`
///
/// ```text
/// β(y,y') = β(y,y) ∨ β(y',y') ∨ sup_x (β(fx,y') + β(y,y) − β(fx,y))
/// ```
pub fn dense_isometry_check(f: &[usize], x: &ParMetSpace, y: &ParMetSpace) -> Result<DenseCheck> {
    if f.len() != x.len() || f.iter().any(|&b| b >= y.len()) {
        return Err(Error::Precondition("map does not fit the spaces".into()));
    }
    for a in 0..x.len() {
        for b in 0..x.len() {
            if y.alpha[f[a]][f[b]] != x.alpha[a][b] {
                return Err(Error::Precondition(format!(
                    "not isometric at ({}, {})",
                    x.points[a], x.points[b]
                )));
            }
        }
    }
    let n = y.len();
    let witness = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).find(|&(s, t)| {
        let rhs = f
            .iter()
            .map(|&fx| (&y.alpha[fx][t] + &y.alpha[s][s]).monus(&y.alpha[fx][s]))
            .fold(y.alpha[s][s].clone().max(y.alpha[t][t].clone()), ExtRat::max);
        y.alpha[s][t] != rhs
    });
    Ok(DenseCheck {
        dense: witness.is_none(),
        witness: witness.map(|(s, t)| (y.points[s].clone(), y.points[t].clone())),
    })
}

/// The first pair `(i, j)` of the family violating
/// `α(xᵢ,xⱼ) ≤ rᵢ − r + rⱼ`, after checking each radius is well typed.
pub fn family_inadmissible_pair(
    m: &ParMetSpace,
    r: &ExtRat,
    family: &[(usize, ExtRat)],
) -> Result<Option<(usize, usize)>> {
    for (x, rad) in family {
        if *x >= m.len() {
            return Err(Error::Precondition(format!("family point {x} out of range")));
        }
        if rad < r || *rad < m.alpha[*x][*x] {
            return Err(Error::Precondition(format!(
                "radius {rad} at {} is below max(r, α(x,x))",
                m.points[*x]
            )));
        }
    }
    let k = family.len();
    Ok((0..k).flat_map(|i| (0..k).map(move |j| (i, j))).find(|&(i, j)| {
        let ((xi, ri), (xj, rj)) = (&family[i], &family[j]);
        m.alpha[*xi][*xj] > &ri.monus(r) + rj
    }))
}

/// The first `z` with `α(xⱼ, z) ≤ rⱼ` for every member of an admissible
/// family. With `strict`, `z` must also have `α(z,z) = r`.
pub fn hyperconvex_family_check(
    m: &ParMetSpace,
    r: &ExtRat,
    family: &[(usize, ExtRat)],
    strict: bool,
) -> Result<Option<usize>> {
    if let Some((i, j)) = family_inadmissible_pair(m, r, family)? {
        return Err(Error::Precondition(format!(
            "family members {} and {} are too far apart",
            m.points[family[i].0], m.points[family[j].0]
        )));
    }
    Ok((0..m.len()).find(|&z| {
        (!strict || m.alpha[z][z] == *r) && family.iter().all(|(x, rad)| m.alpha[*x][z] <= *rad)
    }))
}

/// For a classical metric and `r = 0`, checks `μ(x) = sup_y (α(x,y) − μ(y))`
/// in signed arithmetic and that it agrees with [`tight_member`].
pub fn classical_tight_check(m: &ParMetSpace, mu: &RadiusFunction) -> Result<bool> {
    let (alpha, vals) = classical_parts(m, mu)?;
    let n = m.len();
    let holds = (0..n).all(|x| {
        let sup = (0..n).map(|y| &alpha[x][y] - &vals[y]).max().expect("nonempty");
        vals[x] == sup
    });
    let tight = tight_member(m, mu)?;
    if holds != tight {
        return Err(Error::Invariant("classical and typed tightness disagree".into()));
    }
    Ok(holds)
}

/// `sup_x (μ(x) − λ(x))` for tight `μ, λ` on a classical metric, checked
/// against the reverse difference and [`sigma`].
pub fn classical_sigma(m: &ParMetSpace, mu: &RadiusFunction, lam: &RadiusFunction) -> Result<ExtRat> {
    let (_, a) = classical_parts(m, mu)?;
    let (_, b) = classical_parts(m, lam)?;
    let sup = |p: &[num_rational::BigRational], q: &[num_rational::BigRational]| {
        p.iter().zip(q).map(|(u, v)| u - v).max()
    };
    let there = sup(&a, &b);
    let typed = sigma(m, mu, lam)?;
    let Some(there) = there else {
        return Ok(typed);
    };
    if Some(&there) != sup(&b, &a).as_ref() || there < num_rational::BigRational::default() {
        return Err(Error::Invariant("sup differences are not symmetric and nonnegative".into()));
    }
    let there = ExtRat::from_rational(there)?;
    if there != typed {
        return Err(Error::Invariant("classical distance disagrees with σ".into()));
    }
    Ok(there)
}

type Classical = (Vec<Vec<num_rational::BigRational>>, Vec<num_rational::BigRational>);

fn classical_parts(m: &ParMetSpace, mu: &RadiusFunction) -> Result<Classical> {
    if !m.is_classical() {
        return Err(Error::Precondition("self-distances must be zero".into()));
    }
    if !mu.r.is_zero() {
        return Err(Error::Precondition("classical functions have r = 0".into()));
    }
    mu.check_typed(m)?;
    let fin = |v: &ExtRat| {
        v.as_rational()
            .cloned()
            .ok_or_else(|| Error::Precondition("classical inputs must be finite".into()))
    };
    let alpha = m
        .alpha
        .iter()
        .map(|row| row.iter().map(fin).collect())
        .collect::<Result<_>>()?;
    let vals = mu.values.iter().map(fin).collect::<Result<_>>()?;
    Ok((alpha, vals))
}
