use serde::Serialize;

use super::finite::QuantaleTables;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
    /// Not evaluated because a law it depends on failed.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub law: String,
    pub status: LawStatus,
    /// Element names of a counterexample, in the order the law quantifies them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub laws: Vec<LawOutcome>,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.status == LawStatus::Pass)
    }

    pub fn get(&self, law: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.law == law)
    }
}

pub const LAW_NAMES: [&str; 12] = [
    "partial-order",
    "complete-lattice",
    "associativity",
    "unit",
    "integrality",
    "tensor-preserves-joins-left",
    "tensor-preserves-joins-right",
    "involution-involutive",
    "involution-reverses-tensor",
    "involution-preserves-joins",
    "residuation",
    "involution-swaps-residuals",
];

/// Exhaustively checks the laws of an integral involutive quantale.
///
/// Each law is reported with the first counterexample found in load order.
/// Laws that need joins are skipped when the order is not a complete lattice.
pub fn check_quantale_laws(t: &QuantaleTables) -> LawReport {
    let n = t.len();
    let names = |xs: &[usize]| Some(xs.iter().map(|&i| t.elements[i].clone()).collect());
    let mut laws = Vec::with_capacity(LAW_NAMES.len());
    let mut push = |law: &str, witness: Option<Option<Vec<String>>>| {
        let (status, witness) = match witness {
            None => (LawStatus::Skipped, None),
            Some(None) => (LawStatus::Pass, None),
            Some(Some(w)) => (LawStatus::Fail, Some(w)),
        };
        laws.push(LawOutcome {
            law: law.to_string(),
            status,
            witness,
        });
    };

    let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let leq = &t.leq;
    let ten = &t.tensor;
    let inv = &t.involution;

    let order_bad = (0..n)
        .find(|&a| !leq[a][a])
        .map(|a| vec![a])
        .or_else(|| pairs().find(|&(a, b)| a != b && leq[a][b] && leq[b][a]).map(|(a, b)| vec![a, b]))
        .or_else(|| {
            triples()
                .find(|&(a, b, c)| leq[a][b] && leq[b][c] && !leq[a][c])
                .map(|(a, b, c)| vec![a, b, c])
        });
    let order_ok = order_bad.is_none();
    push("partial-order", Some(order_bad.and_then(|w| names(&w))));

    // A finite poset with a bottom and binary joins is a complete lattice.
    let lattice_ok;
    if order_ok {
        let bad = if t.order_bottom().is_none() {
            Some(Vec::new())
        } else {
            pairs()
                .find(|&(a, b)| t.order_join(a, b).is_none())
                .map(|(a, b)| vec![a, b])
        };
        lattice_ok = bad.is_none();
        push("complete-lattice", Some(bad.and_then(|w| names(&w))));
    } else {
        lattice_ok = false;
        push("complete-lattice", None);
    }

    let assoc = triples().find(|&(a, b, c)| ten[ten[a][b]][c] != ten[a][ten[b][c]]);
    push("associativity", Some(assoc.and_then(|(a, b, c)| names(&[a, b, c]))));

    let unit = (0..n).find(|&a| ten[t.unit][a] != a || ten[a][t.unit] != a);
    push("unit", Some(unit.and_then(|a| names(&[a]))));

    if order_ok {
        let top = (0..n).find(|&a| !leq[a][t.unit]);
        push("integrality", Some(top.and_then(|a| names(&[a]))));
    } else {
        push("integrality", None);
    }

    let inv_ok = (0..n).find(|&a| inv[inv[a]] != a);
    let rev = pairs().find(|&(a, b)| inv[ten[a][b]] != ten[inv[b]][inv[a]]);

    if lattice_ok {
        let join = |a: usize, b: usize| t.order_join(a, b).expect("lattice");
        let bot = t.order_bottom().expect("lattice");
        // (b ∨ c) ⊗ a = (b ⊗ a) ∨ (c ⊗ a) and ⊥ ⊗ a = ⊥
        let left = (0..n)
            .find(|&a| ten[bot][a] != bot)
            .map(|a| vec![a])
            .or_else(|| {
                triples()
                    .find(|&(a, b, c)| ten[join(b, c)][a] != join(ten[b][a], ten[c][a]))
                    .map(|(a, b, c)| vec![a, b, c])
            });
        push("tensor-preserves-joins-left", Some(left.and_then(|w| names(&w))));
        let right = (0..n)
            .find(|&a| ten[a][bot] != bot)
            .map(|a| vec![a])
            .or_else(|| {
                triples()
                    .find(|&(a, b, c)| ten[a][join(b, c)] != join(ten[a][b], ten[a][c]))
                    .map(|(a, b, c)| vec![a, b, c])
            });
        push("tensor-preserves-joins-right", Some(right.and_then(|w| names(&w))));
        push("involution-involutive", Some(inv_ok.and_then(|a| names(&[a]))));
        push("involution-reverses-tensor", Some(rev.and_then(|(a, b)| names(&[a, b]))));
        let inv_join = (inv[bot] != bot)
            .then(Vec::new)
            .or_else(|| {
                pairs()
                    .find(|&(a, b)| inv[join(a, b)] != join(inv[a], inv[b]))
                    .map(|(a, b)| vec![a, b])
            });
        push("involution-preserves-joins", Some(inv_join.and_then(|w| names(&w))));

        let sup = |xs: &mut dyn Iterator<Item = usize>| xs.fold(bot, join);
        let lres = |r: usize, q: usize| sup(&mut (0..n).filter(|&p| leq[ten[p][q]][r]));
        let rres = |p: usize, r: usize| sup(&mut (0..n).filter(|&q| leq[ten[p][q]][r]));
        let adj = triples().find(|&(a, b, c)| {
            let lhs = leq[ten[a][b]][c];
            lhs != leq[a][lres(c, b)] || lhs != leq[b][rres(a, c)]
        });
        push("residuation", Some(adj.and_then(|(a, b, c)| names(&[a, b, c]))));
        // (w / u)° = u° \ w°
        let swap = pairs().find(|&(w, u)| inv[lres(w, u)] != rres(inv[u], inv[w]));
        push("involution-swaps-residuals", Some(swap.and_then(|(w, u)| names(&[w, u]))));
    } else {
        push("tensor-preserves-joins-left", None);
        push("tensor-preserves-joins-right", None);
        push("involution-involutive", Some(inv_ok.and_then(|a| names(&[a]))));
        push("involution-reverses-tensor", Some(rev.and_then(|(a, b)| names(&[a, b]))));
        push("involution-preserves-joins", None);
        push("residuation", None);
        push("involution-swaps-residuals", None);
    }

    LawReport { laws }
}
