//! Finite groups as complete multiplication tables.
//!
//! Element `0` is always the identity. Groups are generated from explicit
//! tables, permutation generators, or exact orthogonal rational matrices; a
//! generated group remembers the concrete realization of each element.

pub mod catalog;
pub mod identify;

use crate::rat::{parse_rat, RatMat};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::hash::Hash;
use thiserror::Error;

/// Default closure cap for generated groups.
pub const DEFAULT_CAP: usize = 64;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("closure exceeds the order cap of {0}")]
    ClosureExceedsCap(usize),
    #[error("generator is not invertible")]
    NotInvertible,
    #[error("generator is not orthogonal (g^T g != I)")]
    NotOrthogonal,
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("the given elements do not generate the group")]
    DoesNotGenerate,
    #[error("not a homomorphism")]
    NotAHomomorphism,
    #[error("element index out of range")]
    BadIndex,
    #[error("subgroup is not normal")]
    NotNormal,
}

/// A finite group on indices `0..order` with `0` the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validating constructor: checks that the table is a group table with
    /// identity at index 0 (unit laws, inverses, associativity on all
    /// triples).
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(GroupError::InvalidTable("table is not square".into()));
            }
            for &v in row {
                if v >= n {
                    return Err(GroupError::InvalidTable("index out of range".into()));
                }
                mul.push(v);
            }
        }
        for a in 0..n {
            if mul[a] != a || mul[a * n] != a {
                return Err(GroupError::InvalidTable(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| mul[a * n + b] == 0 && mul[b * n + a] == 0) {
                Some(b) => inv[a] = b,
                None => {
                    return Err(GroupError::InvalidTable(format!(
                        "element {a} has no two-sided inverse"
                    )))
                }
            }
        }
        let g = FiniteGroup { order: n, mul, inv, labels: None };
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Constructor for tables that are group tables by construction
    /// (products, quotients, cocycle extensions). Unit/inverse structure is
    /// still derived; associativity is trusted.
    pub(crate) fn from_table_unchecked(mul: Vec<usize>, order: usize) -> FiniteGroup {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| mul[a * order + b] == 0)
                .expect("group table without inverses");
            debug_assert_eq!(mul[b * order + a], 0);
            inv[a] = b;
        }
        FiniteGroup { order, mul, inv, labels: None }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Full axiom check, exhaustive over all triples. Used by tests.
    pub fn is_valid(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a)
            && (0..n).all(|a| self.mul(a, self.inv(a)) == 0 && self.mul(self.inv(a), a) == 0)
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))
                })
            })
    }

    /// y^-1 x y (conjugation by y).
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// x^-1 y^-1 x y.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1usize, |acc, x| num_integer::lcm(acc, self.element_order(x)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// BFS closure of a generating set inside this group; elements come out
    /// in breadth-first discovery order starting at the identity.
    pub fn closure(&self, gens: &[usize]) -> Result<Vec<usize>, GroupError> {
        if gens.iter().any(|&g| g >= self.order) {
            return Err(GroupError::BadIndex);
        }
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut elems = vec![0usize];
        let mut head = 0;
        while head < elems.len() {
            let e = elems[head];
            head += 1;
            for &g in gens {
                let x = self.mul(e, g);
                if !seen[x] {
                    seen[x] = true;
                    elems.push(x);
                }
            }
        }
        Ok(elems)
    }

    /// The subgroup generated by `gens`, as its own group, plus the
    /// inclusion homomorphism.
    pub fn subgroup(&self, gens: &[usize]) -> Result<(FiniteGroup, GroupHom), GroupError> {
        let elems = self.closure(gens)?;
        let mut index = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            index[e] = i;
        }
        let k = elems.len();
        let mut mul = vec![0usize; k * k];
        for a in 0..k {
            for b in 0..k {
                let p = self.mul(elems[a], elems[b]);
                debug_assert_ne!(index[p], usize::MAX);
                mul[a * k + b] = index[p];
            }
        }
        let sub = FiniteGroup::from_table_unchecked(mul, k);
        let incl = GroupHom::new_unchecked(sub.clone(), self.clone(), elems);
        Ok((sub, incl))
    }

    pub fn is_normal(&self, subset: &[usize]) -> bool {
        let member: std::collections::HashSet<usize> = subset.iter().copied().collect();
        subset
            .iter()
            .all(|&h| (0..self.order).all(|g| member.contains(&self.conj(h, g))))
    }

    /// Quotient by a normal subgroup (given as its full element set).
    /// Cosets are indexed by least representative, in ascending order, so
    /// the coset of the identity is index 0.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, GroupHom), GroupError> {
        if normal.iter().any(|&h| h >= self.order) {
            return Err(GroupError::BadIndex);
        }
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order;
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &h in normal {
                coset[self.mul(g, h)] = id;
            }
        }
        let k = reps.len();
        if k * normal.len() != n {
            // normal did not contain the identity or was not a subgroup
            return Err(GroupError::InvalidTable("not a subgroup".into()));
        }
        let mut mul = vec![0usize; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = coset[self.mul(reps[a], reps[b])];
            }
        }
        let q = FiniteGroup::from_table_unchecked(mul, k);
        let proj = GroupHom::new_unchecked(self.clone(), q.clone(), coset);
        Ok((q, proj))
    }

    /// The derived subgroup, as its element set in BFS order.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut seen = vec![false; self.order];
        for x in 0..self.order {
            for y in 0..self.order {
                let c = self.commutator(x, y);
                if !seen[c] {
                    seen[c] = true;
                    if c != 0 {
                        gens.push(c);
                    }
                }
            }
        }
        self.closure(&gens).expect("indices in range")
    }

    /// Quotient by the derived subgroup, with the projection.
    pub fn abelianization(&self) -> (FiniteGroup, GroupHom) {
        let d = self.derived_subgroup();
        self.quotient(&d).expect("derived subgroup is normal")
    }

    /// Direct product; pairs (a, b) are indexed a * |B| + b.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (self.order, other.order);
        let n = na * nb;
        let mut mul = vec![0usize; n * n];
        for a1 in 0..na {
            for b1 in 0..nb {
                for a2 in 0..na {
                    for b2 in 0..nb {
                        let i = a1 * nb + b1;
                        let j = a2 * nb + b2;
                        mul[i * n + j] = self.mul(a1, a2) * nb + other.mul(b1, b2);
                    }
                }
            }
        }
        FiniteGroup::from_table_unchecked(mul, n)
    }

    /// Relabel the table by a permutation with `perm[0] == 0`; the result is
    /// isomorphic to `self` via `x -> perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteGroup {
        assert_eq!(perm.len(), self.order);
        assert_eq!(perm[0], 0);
        let n = self.order;
        let mut mul = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteGroup::from_table_unchecked(mul, n)
    }
}

/// A homomorphism between finite groups, stored as the full image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: FiniteGroup,
    pub target: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    /// Validating constructor: identity goes to identity, and
    /// f(xy) = f(x) f(y) on every pair.
    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        map: Vec<usize>,
    ) -> Result<GroupHom, GroupError> {
        if map.len() != source.order() || map.iter().any(|&v| v >= target.order()) {
            return Err(GroupError::BadIndex);
        }
        if map[0] != 0 {
            return Err(GroupError::NotAHomomorphism);
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    pub(crate) fn new_unchecked(
        source: FiniteGroup,
        target: FiniteGroup,
        map: Vec<usize>,
    ) -> GroupHom {
        debug_assert_eq!(map.len(), source.order());
        GroupHom { source, target, map }
    }

    pub fn identity_hom(g: &FiniteGroup) -> GroupHom {
        GroupHom::new_unchecked(g.clone(), g.clone(), (0..g.order()).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `other` after `self`: source(self) -> target(other).
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(self.target, other.source, "non-composable homomorphisms");
        let map = self.map.iter().map(|&x| other.apply(x)).collect();
        GroupHom::new_unchecked(self.source.clone(), other.target.clone(), map)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&x| self.map[x] == 0).collect()
    }

    pub fn image_set(&self) -> Vec<usize> {
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        (0..self.target.order()).filter(|&x| seen[x]).collect()
    }

    /// The inner automorphism x -> g^-1 x g of the target, pulled to a hom
    /// of `g`'s group onto itself.
    pub fn inner(group: &FiniteGroup, g: usize) -> GroupHom {
        let map = (0..group.order()).map(|x| group.conj(x, g)).collect();
        GroupHom::new_unchecked(group.clone(), group.clone(), map)
    }
}

/// Extend generator images to a homomorphism. The keys must generate the
/// source; multiplicativity is verified on every pair.
pub fn hom_from_gen_images(
    source: &FiniteGroup,
    target: &FiniteGroup,
    images: &[(usize, usize)],
) -> Result<GroupHom, GroupError> {
    for &(g, i) in images {
        if g >= source.order() || i >= target.order() {
            return Err(GroupError::BadIndex);
        }
    }
    let mut map = vec![usize::MAX; source.order()];
    map[0] = 0;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &(g, img) in images {
            let y = source.mul(x, g);
            if map[y] == usize::MAX {
                map[y] = target.mul(map[x], img);
                frontier.push(y);
            }
        }
    }
    if map.contains(&usize::MAX) {
        return Err(GroupError::DoesNotGenerate);
    }
    GroupHom::new(source.clone(), target.clone(), map)
}

/// Every homomorphism source -> target, by backtracking over images of a
/// fixed generating sequence of the source. Intended for small groups.
pub fn all_homs(source: &FiniteGroup, target: &FiniteGroup) -> Vec<GroupHom> {
    let gens = identify::generating_sequence(source);
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    fn rec(
        source: &FiniteGroup,
        target: &FiniteGroup,
        gens: &[usize],
        images: &mut Vec<usize>,
        pos: usize,
        out: &mut Vec<GroupHom>,
    ) {
        if pos == gens.len() {
            let pairs: Vec<(usize, usize)> =
                gens.iter().copied().zip(images.iter().copied()).collect();
            if let Ok(h) = hom_from_gen_images(source, target, &pairs) {
                out.push(h);
            }
            return;
        }
        let need = source.element_order(gens[pos]);
        for img in 0..target.order() {
            // image order must divide generator order
            if need.is_multiple_of(target.element_order(img)) {
                images[pos] = img;
                rec(source, target, gens, images, pos + 1, out);
            }
        }
    }
    rec(source, target, &gens, &mut images, 0, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Group specs and generation
// ---------------------------------------------------------------------------

/// Ingestion form of a group: an explicit table, permutation generators
/// (cycles on 1-based points), or exact orthogonal matrix generators with
/// entries "p/q".
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Table { mul: Vec<Vec<usize>> },
    Perm { degree: usize, gens: Vec<Vec<Vec<usize>>> },
    Orth { dim: usize, gens: Vec<Vec<Vec<String>>> },
}

/// Concrete form of each element of a generated group, aligned with the
/// element indexing.
#[derive(Clone, Debug)]
pub enum Realization {
    Table,
    Perm { degree: usize, elems: Vec<Vec<usize>> },
    Orth { dim: usize, mats: Vec<RatMat> },
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub group: FiniteGroup,
    pub realization: Realization,
}

fn bfs_closure<R, F>(
    identity: R,
    gens: &[R],
    mul: F,
    cap: usize,
) -> Result<(Vec<R>, FiniteGroup), GroupError>
where
    R: Clone + Eq + Hash,
    F: Fn(&R, &R) -> R,
{
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<R, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        let e = elems[head].clone();
        head += 1;
        for g in gens {
            let x = mul(&e, g);
            if !index.contains_key(&x) {
                if elems.len() >= cap {
                    return Err(GroupError::ClosureExceedsCap(cap));
                }
                index.insert(x.clone(), elems.len());
                elems.push(x);
            }
        }
    }
    let n = elems.len();
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            let p = mul(&elems[a], &elems[b]);
            table[a * n + b] = *index
                .get(&p)
                .expect("closure under right multiplication by generators is a group");
        }
    }
    Ok((elems, FiniteGroup::from_table_unchecked(table, n)))
}

fn word_labels(group: &FiniteGroup, gen_ids: &[usize]) -> Vec<String> {
    // gen_ids[i] = element index of generator i; rebuild BFS discovery words
    let n = group.order();
    let mut labels = vec![String::new(); n];
    labels[0] = "e".to_string();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let e = queue[head];
        head += 1;
        for (i, &g) in gen_ids.iter().enumerate() {
            let x = group.mul(e, g);
            if !seen[x] {
                seen[x] = true;
                labels[x] = if e == 0 {
                    format!("g{i}")
                } else {
                    format!("{}*g{i}", labels[e])
                };
                queue.push(x);
            }
        }
    }
    labels
}

fn perm_from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>, GroupError> {
    let mut perm: Vec<usize> = (0..degree).collect();
    for cycle in cycles {
        let mut cperm: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for &pt in cycle {
            if pt == 0 || pt > degree {
                return Err(GroupError::InvalidPerm(format!(
                    "point {pt} outside 1..={degree}"
                )));
            }
            if std::mem::replace(&mut seen[pt - 1], true) {
                return Err(GroupError::InvalidPerm("repeated point in cycle".into()));
            }
        }
        for w in 0..cycle.len() {
            let from = cycle[w] - 1;
            let to = cycle[(w + 1) % cycle.len()] - 1;
            cperm[from] = to;
        }
        // compose: apply existing perm, then this cycle
        perm = perm.iter().map(|&x| cperm[x]).collect();
    }
    Ok(perm)
}

/// Generate a finite group from a spec, capped at `cap` elements.
///
/// Generation is deterministic: elements are discovered breadth-first from
/// the identity, multiplying on the right by the generators in input order.
pub fn generate(spec: &GroupSpec, cap: usize) -> Result<Generated, GroupError> {
    match spec {
        GroupSpec::Table { mul } => {
            let group = FiniteGroup::from_table(mul.clone())?;
            if group.order() > cap {
                return Err(GroupError::ClosureExceedsCap(cap));
            }
            Ok(Generated { group, realization: Realization::Table })
        }
        GroupSpec::Perm { degree, gens } => {
            let parsed: Vec<Vec<usize>> = gens
                .iter()
                .map(|cycles| perm_from_cycles(*degree, cycles))
                .collect::<Result<_, _>>()?;
            let id: Vec<usize> = (0..*degree).collect();
            // product s*t acts as s after t: (s*t)(i) = s(t(i))
            let (elems, mut group) =
                bfs_closure(id, &parsed, |s, t| t.iter().map(|&x| s[x]).collect(), cap)?;
            let gen_ids: Vec<usize> = parsed
                .iter()
                .map(|p| elems.iter().position(|e| e == p).unwrap())
                .collect();
            let labels = word_labels(&group, &gen_ids);
            group.set_labels(labels);
            Ok(Generated {
                group,
                realization: Realization::Perm { degree: *degree, elems },
            })
        }
        GroupSpec::Orth { dim, gens } => {
            let mut mats = Vec::new();
            for g in gens {
                let mut rows = Vec::new();
                for row in g {
                    if row.len() != *dim {
                        return Err(GroupError::InvalidMatrix("row of wrong length".into()));
                    }
                    let parsed: Option<Vec<_>> = row.iter().map(|s| parse_rat(s)).collect();
                    rows.push(parsed.ok_or_else(|| {
                        GroupError::InvalidMatrix("unparsable rational entry".into())
                    })?);
                }
                if rows.len() != *dim {
                    return Err(GroupError::InvalidMatrix("wrong number of rows".into()));
                }
                let m = RatMat::from_rows(rows).unwrap();
                if m.det() == num_traits::Zero::zero() {
                    return Err(GroupError::NotInvertible);
                }
                if !m.is_orthogonal() {
                    return Err(GroupError::NotOrthogonal);
                }
                mats.push(m);
            }
            let (elems, mut group) =
                bfs_closure(RatMat::identity(*dim), &mats, |a, b| a.mul(b), cap)?;
            let gen_ids: Vec<usize> = mats
                .iter()
                .map(|m| elems.iter().position(|e| e == m).unwrap())
                .collect();
            let labels = word_labels(&group, &gen_ids);
            group.set_labels(labels);
            Ok(Generated {
                group,
                realization: Realization::Orth { dim: *dim, mats: elems },
            })
        }
    }
}
