use std::sync::Arc;

use super::{validate_category, QCategory};
use crate::diagonal::{DiagonalImplication, DiagonalQuantaloid};
use crate::error::{Error, Result};
use crate::qrel::{QRelation, TypedSet};

fn symmetric_objects<Q: DiagonalImplication>(d: &DiagonalQuantaloid<Q>) -> Result<Vec<Q::Elem>> {
    d.symmetric_objects()
        .ok_or_else(|| Error::Unsupported("enumeration over an infinite quantale".into()))
}

/// Every symmetric category on objects `x0, …, x(n-1)`.
///
/// Type tuples run lexicographically in load order; for each, the strict
/// upper triangle of the hom matrix runs lexicographically in row-major
/// order, and the lower triangle is its involution.
pub fn enumerate_symmetric_categories<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    n: usize,
) -> Result<Vec<QCategory<Q::Elem>>> {
    let objs = symmetric_objects(d)?;
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for types in tuples(&objs, n) {
        let set = Arc::new(TypedSet::from_parts(names.clone(), types.clone()));
        let homs = pairs
            .iter()
            .map(|&(i, j)| d.hom(&types[i], &types[j]))
            .collect::<Result<Vec<_>>>()?;
        for choice in tuples_of(&homs) {
            let c = from_upper(d, &set, &pairs, &choice);
            if validate_category(d, &c).is_valid() {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// All symmetric categories with at most `n` objects, smallest first.
pub fn symmetric_categories_up_to<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    n: usize,
) -> Result<Vec<QCategory<Q::Elem>>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_symmetric_categories(d, k)?);
    }
    Ok(out)
}

/// Every symmetric category `c ∪ {y}` containing `c` as a full subcategory,
/// with the new object last.
pub fn one_point_extensions<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    c: &QCategory<Q::Elem>,
) -> Result<Vec<QCategory<Q::Elem>>> {
    let objs = symmetric_objects(d)?;
    let name = fresh_name(c.set(), "y");
    let n = c.len();
    let qn = d.quantale();
    let mut out = Vec::new();
    for q in objs {
        let set = Arc::new(c.set().with_point(name.clone(), q.clone()));
        let homs = (0..n)
            .map(|x| d.hom(&q, c.ty(x)))
            .collect::<Result<Vec<_>>>()?;
        for row in tuples_of(&homs) {
            let hom = QRelation::from_fn(set.clone(), set.clone(), |a, b| match (a == n, b == n) {
                (false, false) => c.get(a, b).clone(),
                (true, true) => q.clone(),
                (true, false) => row[b].clone(),
                (false, true) => qn.involve(&row[a]),
            });
            let ext = QCategory::new(hom).expect("square");
            if validate_category(d, &ext).is_valid() {
                out.push(ext);
            }
        }
    }
    Ok(out)
}

pub(crate) fn fresh_name<E>(set: &TypedSet<E>, stem: &str) -> String
where
    E: Clone + Eq,
{
    if set.index_of(stem).is_none() {
        return stem.to_string();
    }
    (1..)
        .map(|k| format!("{stem}{k}"))
        .find(|s| set.index_of(s).is_none())
        .expect("unbounded supply of names")
}

fn from_upper<Q: DiagonalImplication>(
    d: &DiagonalQuantaloid<Q>,
    set: &Arc<TypedSet<Q::Elem>>,
    pairs: &[(usize, usize)],
    choice: &[Q::Elem],
) -> QCategory<Q::Elem> {
    let s = set.clone();
    let hom = QRelation::from_fn(set.clone(), set.clone(), |a, b| {
        if a == b {
            s.ty(a).clone()
        } else {
            let (i, j) = (a.min(b), a.max(b));
            let k = pairs.iter().position(|&p| p == (i, j)).expect("pair listed");
            if a < b {
                choice[k].clone()
            } else {
                d.quantale().involve(&choice[k])
            }
        }
    });
    QCategory::new(hom).expect("square")
}

/// `items^n` in lexicographic order.
fn tuples<T: Clone>(items: &[T], n: usize) -> Vec<Vec<T>> {
    tuples_of(&vec![items.to_vec(); n])
}

/// The product of the given lists in lexicographic order.
fn tuples_of<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    out
}
