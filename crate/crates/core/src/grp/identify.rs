//! Identification of small groups up to isomorphism.
//!
//! Abelian groups of any order are named from their invariant factors
//! (element-order counts determine the primary decomposition). Nonabelian
//! groups of order <= 16 are screened against the catalog by cheap
//! invariants and confirmed by a backtracking isomorphism search on
//! generator images; beyond the catalog the answer is `None`.

use super::{catalog, FiniteGroup};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// A deterministic generating sequence: the shortest tuple of distinct
/// non-identity elements (in index order) whose closure is the whole group.
pub fn generating_sequence(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return Vec::new();
    }
    for k in 1..=n {
        let mut combo: Vec<usize> = (1..=k).collect();
        loop {
            if g.closure(&combo).unwrap().len() == n {
                return combo;
            }
            // next k-combination of 1..n in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if combo[i] < n - (k - i) {
                    combo[i] += 1;
                    for j in i + 1..k {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    combo.clear();
                    break;
                }
            }
            if combo.is_empty() {
                break;
            }
        }
    }
    unreachable!("the full element set generates")
}

fn try_map(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    // extend gens -> images multiplicatively over g and verify bijectivity
    // plus the homomorphism law
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &img) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &map {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

/// Backtracking isomorphism test. Intended for small orders; the search is
/// over images of a fixed generating sequence, pruned by element orders and
/// by the size of the partially generated subgroup.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() {
        return false;
    }
    if g.order_multiset() != h.order_multiset() {
        return false;
    }
    let gens = generating_sequence(g);
    let sub_sizes: Vec<usize> =
        (1..=gens.len()).map(|k| g.closure(&gens[..k]).unwrap().len()).collect();
    let mut images = Vec::new();
    fn rec(
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[usize],
        sub_sizes: &[usize],
        images: &mut Vec<usize>,
        pos: usize,
    ) -> bool {
        if pos == gens.len() {
            return try_map(g, h, gens, images);
        }
        let need = g.element_order(gens[pos]);
        for cand in 0..h.order() {
            if h.element_order(cand) != need {
                continue;
            }
            images.push(cand);
            if h.closure(images).unwrap().len() == sub_sizes[pos]
                && rec(g, h, gens, sub_sizes, images, pos + 1)
            {
                return true;
            }
            images.pop();
        }
        false
    }
    if gens.is_empty() {
        return true; // both trivial
    }
    rec(g, h, &gens, &sub_sizes, &mut images, 0)
}

/// Invariant factors of a finite abelian group (each dividing the previous),
/// derived from element-order counts.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<u64> {
    assert!(g.is_abelian());
    let n = g.order() as u64;
    if n == 1 {
        return Vec::new();
    }
    // primary partitions per prime from the counts of p^k-torsion
    let mut primes = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            primes.push(p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &p in &primes {
        // c_k = #{x : x^(p^k) = 1}; m_k = log_p(c_k / c_{k-1}) counts the
        // parts of the partition that are >= k
        let mut mks = Vec::new();
        let mut prev = 1u64;
        let mut pk = 1u64;
        loop {
            pk *= p;
            let c = (0..g.order())
                .filter(|&x| g.power(x, pk as usize) == 0)
                .count() as u64;
            if c == prev {
                break;
            }
            let ratio = c / prev;
            let mut mk = 0u32;
            let mut r = ratio;
            while r > 1 {
                r /= p;
                mk += 1;
            }
            mks.push(mk);
            prev = c;
        }
        // m is the conjugate of the exponent partition; conjugating back
        // gives the exponents of the cyclic p-factors, largest first
        let mut exps = Vec::new();
        for i in 1..=*mks.iter().max().unwrap_or(&0) {
            exps.push(mks.iter().filter(|&&m| m >= i).count() as u32);
        }
        primary.insert(p, exps);
    }
    let rank = primary.values().map(|v| v.len()).max().unwrap_or(0);
    let mut factors = Vec::new();
    for i in 0..rank {
        let mut d = 1u64;
        for (&p, exps) in &primary {
            if let Some(&e) = exps.get(i) {
                d *= p.pow(e);
            }
        }
        factors.push(d);
    }
    factors
}

fn abelian_name(g: &FiniteGroup) -> String {
    let inv = abelian_invariants(g);
    if inv.is_empty() {
        return "C1".to_string();
    }
    inv.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x")
}

struct CatalogEntry {
    name: String,
    group: FiniteGroup,
    screen: ScreenKey,
}

#[derive(PartialEq, Eq)]
struct ScreenKey {
    order_multiset: Vec<usize>,
    center: usize,
    ab_invariants: Vec<u64>,
    exponent: usize,
}

fn screen_key(g: &FiniteGroup) -> ScreenKey {
    ScreenKey {
        order_multiset: g.order_multiset(),
        center: g.center().len(),
        ab_invariants: abelian_invariants(&g.abelianization().0),
        exponent: g.exponent(),
    }
}

fn catalog_nonabelian() -> &'static Vec<CatalogEntry> {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut entries = Vec::new();
        for order in 1..=16 {
            for (name, group) in catalog::groups_of_order(order) {
                if !group.is_abelian() {
                    let screen = screen_key(&group);
                    entries.push(CatalogEntry { name, group, screen });
                }
            }
        }
        entries
    })
}

/// Catalog name of the isomorphism type: abelian groups of any order, all
/// groups of order <= 16. `None` beyond the catalog. Invariants only screen;
/// the verdict is confirmed by an explicit isomorphism search.
pub fn identify(g: &FiniteGroup) -> Option<String> {
    if g.is_abelian() {
        return Some(abelian_name(g));
    }
    if g.order() > 16 {
        return None;
    }
    let key = screen_key(g);
    for entry in catalog_nonabelian() {
        if entry.group.order() == g.order() && entry.screen == key && is_isomorphic(g, &entry.group)
        {
            return Some(entry.name.clone());
        }
    }
    unreachable!("the catalog is complete for order <= 16")
}
