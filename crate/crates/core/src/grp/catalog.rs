//! Constructions for the standard small groups: cyclic and abelian groups,
//! dihedral/quaternion/semidihedral families via metacyclic presentations,
//! semidirect and central products. These back both the test corpus and the
//! isomorphism catalog for order <= 16.

use super::{generate, FiniteGroup, GroupError, GroupSpec, DEFAULT_CAP};

/// Cyclic group of order n.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let mut mul = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = (a + b) % n;
        }
    }
    FiniteGroup::from_table_unchecked(mul, n)
}

/// Direct product of cyclic groups of the given orders, elements indexed in
/// mixed radix with the first factor fastest. `abelian(&[2, 2])` is the
/// Klein four-group.
pub fn abelian(moduli: &[u64]) -> FiniteGroup {
    let n: usize = moduli.iter().map(|&m| m as usize).product::<usize>().max(1);
    let idx = |tuple: &[u64]| -> usize {
        let mut acc = 0usize;
        let mut stride = 1usize;
        for (a, &m) in tuple.iter().zip(moduli) {
            acc += (*a as usize) * stride;
            stride *= m as usize;
        }
        acc
    };
    let tuple_of = |mut i: usize| -> Vec<u64> {
        moduli
            .iter()
            .map(|&m| {
                let a = (i % m as usize) as u64;
                i /= m as usize;
                a
            })
            .collect()
    };
    let mut mul = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let (ti, tj) = (tuple_of(i), tuple_of(j));
            let sum: Vec<u64> =
                ti.iter().zip(&tj).zip(moduli).map(|((a, b), &m)| (a + b) % m).collect();
            mul[i * n + j] = idx(&sum);
        }
    }
    FiniteGroup::from_table_unchecked(mul, n)
}

/// The metacyclic group < a, b | a^n = 1, b^m = a^t, b^-1 a b = a^k >,
/// with elements a^i b^j indexed i * m + j. The parameters must satisfy the
/// usual consistency conditions; the table is fully validated.
pub fn metacyclic(n: usize, m: usize, k: usize, t: usize) -> Result<FiniteGroup, GroupError> {
    let order = n * m;
    let mut table = vec![vec![0usize; order]; order];
    let kpow = |j: usize| -> usize {
        let mut acc = 1usize;
        for _ in 0..j {
            acc = acc * k % n;
        }
        acc
    };
    for i1 in 0..n {
        for j1 in 0..m {
            for i2 in 0..n {
                for j2 in 0..m {
                    // a^i1 b^j1 a^i2 b^j2 = a^(i1 + k^j1 i2) b^(j1+j2),
                    // with b^m = a^t folded in when j1 + j2 wraps
                    let js = j1 + j2;
                    let wrap = js / m;
                    let i = (i1 + kpow(j1) * i2 + wrap * t) % n;
                    table[i1 * m + j1][i2 * m + j2] = i * m + (js % m);
                }
            }
        }
    }
    FiniteGroup::from_table(table)
}

/// Dihedral group of order 2n (symmetries of the n-gon).
pub fn dihedral(n: usize) -> FiniteGroup {
    metacyclic(n, 2, n - 1, 0).expect("dihedral parameters are consistent")
}

/// The quaternion group of order 8.
pub fn quaternion8() -> FiniteGroup {
    metacyclic(4, 2, 3, 2).expect("quaternion parameters are consistent")
}

/// Generalized quaternion of order 16.
pub fn quaternion16() -> FiniteGroup {
    metacyclic(8, 2, 7, 4).expect("quaternion parameters are consistent")
}

/// Semidirect product A x| B for an action of B on A by automorphisms,
/// given as a permutation of A per element of B. Pairs (a, b) are indexed
/// a * |B| + b. The table is fully validated, so a non-action is rejected.
pub fn semidirect<F>(a: &FiniteGroup, b: &FiniteGroup, act: F) -> Result<FiniteGroup, GroupError>
where
    F: Fn(usize) -> Vec<usize>,
{
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let actions: Vec<Vec<usize>> = (0..nb).map(&act).collect();
    let mut table = vec![vec![0usize; n]; n];
    for a1 in 0..na {
        for b1 in 0..nb {
            for a2 in 0..na {
                for b2 in 0..nb {
                    let i = a1 * nb + b1;
                    let j = a2 * nb + b2;
                    table[i][j] = a.mul(a1, actions[b1][a2]) * nb + b.mul(b1, b2);
                }
            }
        }
    }
    FiniteGroup::from_table(table)
}

/// The alternating group A4 from permutation generators.
pub fn alternating4() -> FiniteGroup {
    let spec = GroupSpec::Perm {
        degree: 4,
        gens: vec![vec![vec![1, 2, 3]], vec![vec![1, 2], vec![3, 4]]],
    };
    generate(&spec, DEFAULT_CAP).expect("A4 generates").group
}

/// All groups of a given order up to isomorphism, 1 <= order <= 16, with
/// their catalog names. Abelian groups are named by invariant factors.
pub fn groups_of_order(order: usize) -> Vec<(String, FiniteGroup)> {
    let named = |s: &str, g: FiniteGroup| (s.to_string(), g);
    let mc = |n, m, k, t| metacyclic(n, m, k, t).expect("catalog parameters are consistent");
    match order {
        1 => vec![named("C1", cyclic(1))],
        2 => vec![named("C2", cyclic(2))],
        3 => vec![named("C3", cyclic(3))],
        4 => vec![named("C4", cyclic(4)), named("C2xC2", abelian(&[2, 2]))],
        5 => vec![named("C5", cyclic(5))],
        6 => vec![named("C6", cyclic(6)), named("S3", dihedral(3))],
        7 => vec![named("C7", cyclic(7))],
        8 => vec![
            named("C8", cyclic(8)),
            named("C4xC2", abelian(&[4, 2])),
            named("C2xC2xC2", abelian(&[2, 2, 2])),
            named("D4", dihedral(4)),
            named("Q8", quaternion8()),
        ],
        9 => vec![named("C9", cyclic(9)), named("C3xC3", abelian(&[3, 3]))],
        10 => vec![named("C10", cyclic(10)), named("D5", dihedral(5))],
        11 => vec![named("C11", cyclic(11))],
        12 => vec![
            named("C12", cyclic(12)),
            named("C6xC2", abelian(&[6, 2])),
            named("D6", dihedral(6)),
            named("A4", alternating4()),
            named("Dic3", mc(6, 2, 5, 3)),
        ],
        13 => vec![named("C13", cyclic(13))],
        14 => vec![named("C14", cyclic(14)), named("D7", dihedral(7))],
        15 => vec![named("C15", cyclic(15))],
        16 => {
            let d4 = dihedral(4);
            let c2 = cyclic(2);
            let c4 = cyclic(4);
            let q8 = quaternion8();
            // central product D4 * C4: quotient of D4 x C4 by the diagonal
            // central involution (z, c^2)
            let prod = d4.direct_product(&c4);
            let z = *d4
                .center()
                .iter()
                .find(|&&x| x != 0)
                .expect("D4 has a central involution");
            let diag = prod.closure(&[z * 4 + 2]).unwrap();
            let (pauli, _) = prod.quotient(&diag).unwrap();
            // (C2 x C2) x| C4 with the order-4 generator swapping factors
            let klein = abelian(&[2, 2]);
            let swap = |b: usize| -> Vec<usize> {
                if b % 2 == 1 {
                    vec![0, 2, 1, 3]
                } else {
                    vec![0, 1, 2, 3]
                }
            };
            let k4_by_c4 = semidirect(&klein, &c4, swap).expect("swap action is by automorphisms");
            vec![
                named("C16", cyclic(16)),
                named("C8xC2", abelian(&[8, 2])),
                named("C4xC4", abelian(&[4, 4])),
                named("C4xC2xC2", abelian(&[4, 2, 2])),
                named("C2xC2xC2xC2", abelian(&[2, 2, 2, 2])),
                named("D8", dihedral(8)),
                named("Q16", quaternion16()),
                named("SD16", mc(8, 2, 3, 0)),
                named("M16", mc(8, 2, 5, 0)),
                named("D4xC2", d4.direct_product(&c2)),
                named("Q8xC2", q8.direct_product(&c2)),
                named("C4:C4", mc(4, 4, 3, 0)),
                named("(C2xC2):C4", k4_by_c4),
                named("D4*C4", pauli),
            ]
        }
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::identify::is_isomorphic;

    #[test]
    fn construction_sanity() {
        assert!(quaternion8().is_valid());
        assert_eq!(
            quaternion8().order_multiset(),
            vec![1, 2, 4, 4, 4, 4, 4, 4]
        );
        assert_eq!(dihedral(4).order_multiset(), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert_eq!(alternating4().order(), 12);
        assert_eq!(quaternion16().order_multiset().iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn catalog_is_complete_and_distinct() {
        let expected = [1usize, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];
        for (order, &count) in (1..=16).zip(&expected) {
            let gs = groups_of_order(order);
            assert_eq!(gs.len(), count, "group count at order {order}");
            for (_, g) in &gs {
                assert_eq!(g.order(), order);
                assert!(g.is_valid());
            }
            for i in 0..gs.len() {
                for j in i + 1..gs.len() {
                    assert!(
                        !is_isomorphic(&gs[i].1, &gs[j].1),
                        "{} and {} are isomorphic at order {order}",
                        gs[i].0,
                        gs[j].0
                    );
                }
            }
        }
    }
}
