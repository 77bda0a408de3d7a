//! Exhaustive verification suites over all small symmetric categories.
//!
//! Each suite walks [`symmetric_categories_up_to`] in its documented order,
//! optionally split across worker threads by index modulo the worker count.
//! Per-category results are merged by index, so the outcome does not depend
//! on the number of workers.

use serde::Serialize;
use serde_json::{json, Value};

use super::{
    check_maximality, check_retraction_functor, dense_columns_tight, enumerate_tx, essential_bruteforce,
    extend_along, extension_from_witness, find_one_point_retraction, is_codense, is_dense, is_hypercomplete,
    tx_transport, yoneda_map, Typing, DEFAULT_NODE_BUDGET,
};
use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::qcat::{
    is_fully_faithful, one_point_extensions, symmetric_categories_up_to, validate_functor, CategoryFile, Presheaf,
    QCategory, QFunctor,
};

/// Largest object count accepted by [`run_suite`].
pub const MAX_BOUND: usize = 4;

/// Objects allowed in the domain and middle category of the extension
/// problems `(f, g)` checked by [`Suite::Injectivity`].
const EXTENSION_SIZE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Hypercomplete ⟺ every one-point extension retracts ⟺ every
    /// extension problem into the category is solvable.
    Injectivity,
    /// Every tight span is hypercomplete.
    TightSpanHypercomplete,
    /// Yoneda into the tight span is fully faithful, dense and essential.
    InjectiveHull,
    /// For fully faithful functors: dense ⟺ codense ⟺ essential.
    DenseEssential,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Injectivity,
        Suite::TightSpanHypercomplete,
        Suite::InjectiveHull,
        Suite::DenseEssential,
    ];

    /// The command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Injectivity => "t36",
            Suite::TightSpanHypercomplete => "l43",
            Suite::InjectiveHull => "t44",
            Suite::DenseEssential => "t54",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub bound: usize,
    pub typing: Typing,
    pub categories: usize,
    pub cases: usize,
    pub discrepancies: usize,
    /// Cases skipped because a brute-force search exceeded its budget.
    pub refused: usize,
    pub first_counterexample: Option<Value>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.discrepancies == 0
    }
}

#[derive(Default)]
struct Partial {
    cases: usize,
    discrepancies: usize,
    refused: usize,
    first: Option<Value>,
}

impl Partial {
    fn fail(&mut self, v: Value) {
        self.discrepancies += 1;
        self.first.get_or_insert(v);
    }

    fn absorb(&mut self, other: Partial) {
        self.cases += other.cases;
        self.discrepancies += other.discrepancies;
        self.refused += other.refused;
        if self.first.is_none() {
            self.first = other.first;
        }
    }
}

/// Runs `suite` over every symmetric category with at most `bound` objects.
pub fn run_suite<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    suite: Suite,
    bound: usize,
    typing: Typing,
    workers: usize,
) -> Result<SuiteOutcome> {
    if bound > MAX_BOUND {
        return Err(Error::BoundExceeded(format!(
            "bound {bound} exceeds the supported maximum {MAX_BOUND}"
        )));
    }
    let cats = symmetric_categories_up_to(d, bound)?;
    let small = symmetric_categories_up_to(d, bound.min(EXTENSION_SIZE))?;
    let problems = if suite == Suite::Injectivity {
        extension_problems(d, &small)
    } else {
        Vec::new()
    };
    let ctx = Ctx {
        d,
        typing,
        cats: &cats,
        small: &small,
        problems: &problems,
    };
    let parts = sharded(cats.len(), workers.max(1), |i| match suite {
        Suite::Injectivity => ctx.injectivity(i),
        Suite::TightSpanHypercomplete => ctx.tight_span_hypercomplete(i),
        Suite::InjectiveHull => ctx.injective_hull(i),
        Suite::DenseEssential => ctx.dense_essential(i),
    });
    let mut total = Partial::default();
    for p in parts {
        total.absorb(p?);
    }
    Ok(SuiteOutcome {
        suite: suite.name().to_string(),
        bound,
        typing,
        categories: cats.len(),
        cases: total.cases,
        discrepancies: total.discrepancies,
        refused: total.refused,
        first_counterexample: total.first,
    })
}

/// Evaluates `f(0..n)` on `workers` threads, returning results by index.
fn sharded<R: Send>(n: usize, workers: usize, f: impl Fn(usize) -> R + Sync) -> Vec<R> {
    if workers <= 1 {
        return (0..n).map(f).collect();
    }
    let mut slots: Vec<Option<R>> = (0..n).map(|_| None).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                s.spawn(move || (w..n).step_by(workers).map(|i| (i, f(i))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every index evaluated")).collect()
}

/// `(domain index, codomain index, g)` for every fully faithful `g`.
fn extension_problems<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    small: &[QCategory<Q::Elem>],
) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for (i, x) in small.iter().enumerate() {
        for (j, y) in small.iter().enumerate() {
            for g in typed_maps(x, y) {
                if is_fully_faithful(d, &QFunctor::new(x, y, &g)) {
                    out.push((i, j, g));
                }
            }
        }
    }
    out
}

/// Every type-preserving map of objects, lexicographic.
pub(crate) fn typed_maps<E: Clone + Eq>(a: &QCategory<E>, b: &QCategory<E>) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(a.len())];
    for x in 0..a.len() {
        out = out
            .into_iter()
            .flat_map(|m: Vec<usize>| {
                (0..b.len()).filter(move |&y| a.ty(x) == b.ty(y)).map(move |y| {
                    let mut m = m.clone();
                    m.push(y);
                    m
                })
            })
            .collect();
    }
    out
}

struct Ctx<'a, Q: DiagonalImplication> {
    d: &'a DiagonalQuantaloid<Q>,
    typing: Typing,
    cats: &'a [QCategory<Q::Elem>],
    small: &'a [QCategory<Q::Elem>],
    problems: &'a [(usize, usize, Vec<usize>)],
}

impl<Q: DiagonalImplication> Ctx<'_, Q> {
    fn cat_json(&self, c: &QCategory<Q::Elem>) -> Value {
        serde_json::to_value(CategoryFile::store(self.d.quantale(), c)).expect("serializes")
    }

    fn col_json(&self, mu: &Presheaf<Q::Elem>) -> Value {
        json!(mu.label(self.d.quantale()))
    }

    fn injectivity(&self, i: usize) -> Result<Partial> {
        let (d, z) = (self.d, &self.cats[i]);
        let mut p = Partial::default();
        let hc = is_hypercomplete(d, z, self.typing)?;
        p.cases += 1;

        let exts = one_point_extensions(d, z)?;
        let mut stuck_ext = None;
        for e in &exts {
            p.cases += 1;
            if find_one_point_retraction(d, z, e)?.is_none() && stuck_ext.is_none() {
                stuck_ext = Some(e);
            }
        }
        if let Some(w) = &hc.witness {
            p.cases += 1;
            let e = extension_from_witness(d, z, w, &crate::qcat::fresh_name(z.set(), "y"))?;
            if find_one_point_retraction(d, z, &e)?.is_some() {
                p.fail(json!({
                    "category": self.cat_json(z),
                    "detail": "extension by the witness column retracts",
                    "column": self.col_json(w),
                }));
            }
        }

        let mut stuck_problem: Option<Value> = None;
        for (xi, yi, g) in self.problems {
            let (x, y) = (&self.small[*xi], &self.small[*yi]);
            for f in typed_maps(x, z) {
                let ff = QFunctor::new(x, z, &f);
                if !validate_functor(d, &ff).is_functor() {
                    continue;
                }
                p.cases += 1;
                if extend_along(d, &ff, &QFunctor::new(x, y, g))?.is_none() && stuck_problem.is_none() {
                    stuck_problem = Some(json!({"x": self.cat_json(x), "y": self.cat_json(y), "f": f, "g": g}));
                }
            }
        }
        let id: Vec<usize> = (0..z.len()).collect();
        for e in &exts {
            p.cases += 1;
            let f = QFunctor::new(z, z, &id);
            if extend_along(d, &f, &QFunctor::new(z, e, &id))?.is_none() && stuck_problem.is_none() {
                stuck_problem = Some(json!({"y": self.cat_json(e), "f": id, "g": id}));
            }
        }

        let retracts = stuck_ext.is_none();
        let extends = stuck_problem.is_none();
        if hc.hypercomplete != retracts || retracts != extends {
            p.fail(json!({
                "category": self.cat_json(z),
                "hypercomplete": hc.hypercomplete,
                "retracts": retracts,
                "extends": extends,
                "column": hc.witness.as_ref().map(|w| self.col_json(w)),
                "extension": stuck_ext.map(|e| self.cat_json(e)),
                "problem": stuck_problem,
            }));
        }
        Ok(p)
    }

    fn tight_span_hypercomplete(&self, i: usize) -> Result<Partial> {
        let x = &self.cats[i];
        let mut p = Partial::default();
        let tx = enumerate_tx(self.d, x)?;
        let hc = is_hypercomplete(self.d, &tx.category, self.typing)?;
        p.cases += 1;
        if !hc.hypercomplete {
            p.fail(json!({
                "category": self.cat_json(x),
                "column": hc.witness.as_ref().map(|w| self.col_json(w)),
            }));
        }
        Ok(p)
    }

    fn injective_hull(&self, i: usize) -> Result<Partial> {
        let (d, x) = (self.d, &self.cats[i]);
        let mut p = Partial::default();
        let tx = enumerate_tx(d, x)?;
        let y = yoneda_map(x, &tx)?;
        let f = QFunctor::new(x, &tx.category, &y);
        let mut failed = Vec::new();
        p.cases += 1;
        if !is_fully_faithful(d, &f) {
            failed.push("fully-faithful");
        }
        if !is_dense(d, &f) {
            failed.push("dense");
        }
        if !is_codense(d, &f) {
            failed.push("codense");
        }
        if !is_hypercomplete(d, &tx.category, self.typing)?.hypercomplete {
            failed.push("hypercomplete");
        }
        if dense_columns_tight(d, &f).is_some() {
            failed.push("dense-columns-tight");
        }
        if check_maximality(d, x)?.is_some() {
            failed.push("maximality");
        }
        if check_retraction_functor(d, x)?.is_some() {
            failed.push("tighten-functor");
        }
        if !tx_transport(d, &f)?.is_isomorphism() {
            failed.push("transport");
        }
        match essential_bruteforce(d, &f, DEFAULT_NODE_BUDGET) {
            Ok(e) if !e.essential => failed.push("essential"),
            Ok(_) => {}
            Err(Error::BoundExceeded(_)) => p.refused += 1,
            Err(e) => return Err(e),
        }
        if !failed.is_empty() {
            p.fail(json!({"category": self.cat_json(x), "failed": failed}));
        }
        Ok(p)
    }

    fn dense_essential(&self, i: usize) -> Result<Partial> {
        let (d, x) = (self.d, &self.cats[i]);
        let mut p = Partial::default();
        for y in self.cats {
            for m in typed_maps(x, y) {
                let f = QFunctor::new(x, y, &m);
                if !is_fully_faithful(d, &f) {
                    continue;
                }
                p.cases += 1;
                let dense = is_dense(d, &f);
                let codense = is_codense(d, &f);
                let essential = match essential_bruteforce(d, &f, DEFAULT_NODE_BUDGET) {
                    Ok(e) => Some(e.essential),
                    Err(Error::BoundExceeded(_)) => {
                        p.refused += 1;
                        None
                    }
                    Err(e) => return Err(e),
                };
                let mut ok = dense == codense && essential.is_none_or(|e| e == dense);
                if dense {
                    ok &= dense_columns_tight(d, &f).is_none();
                    ok &= tx_transport(d, &f)?.is_isomorphism();
                }
                if !ok {
                    p.fail(json!({
                        "x": self.cat_json(x),
                        "y": self.cat_json(y),
                        "f": m,
                        "dense": dense,
                        "codense": codense,
                        "essential": essential,
                    }));
                }
            }
        }
        Ok(p)
    }
}
