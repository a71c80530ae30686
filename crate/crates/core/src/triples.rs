//! Pythagorean triples: validation, Euclid-parametrized enumeration and
//! grouping by common hypotenuse.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// `(l, m, n)` with `l² + m² = n²` and `l ≤ m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PythTriple {
    l: u64,
    m: u64,
    n: u64,
}

impl PythTriple {
    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Primitive triple this one is a multiple of, with the multiplier.
    pub fn primitive(&self) -> (PythTriple, u64) {
        let k = self.l.gcd(&self.m);
        let base = PythTriple {
            l: self.l / k,
            m: self.m / k,
            n: self.n / k,
        };
        (base, k)
    }
}

impl fmt::Display for PythTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l, self.m, self.n)
    }
}

/// Check `l² + m² = n²` and return the triple with legs in canonical order.
pub fn validate_triple(l: u64, m: u64, n: u64) -> Result<PythTriple> {
    let not = Error::NotPythagorean { l, m, n };
    if l == 0 || m == 0 || n == 0 {
        return Err(not);
    }
    let (l2, m2, n2) = (
        (l as u128) * (l as u128),
        (m as u128) * (m as u128),
        (n as u128) * (n as u128),
    );
    if l2 + m2 != n2 {
        return Err(not);
    }
    Ok(PythTriple {
        l: l.min(m),
        m: l.max(m),
        n,
    })
}

/// All triples with `n ≤ max_hypotenuse`, primitive or not, sorted by `(n, l)`.
///
/// Primitives come from `(p² − q², 2pq, p² + q²)` with `p > q ≥ 1`, coprime
/// and of opposite parity; every multiple `k·t` within the bound is added.
pub fn generate_triples(max_hypotenuse: u64) -> Vec<PythTriple> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p < max_hypotenuse {
        for q in 1..p {
            if (p - q).is_multiple_of(2) || p.gcd(&q) != 1 {
                continue;
            }
            let n = p * p + q * q;
            if n > max_hypotenuse {
                break;
            }
            let a = p * p - q * q;
            let b = 2 * p * q;
            for k in 1..=max_hypotenuse / n {
                out.push(PythTriple {
                    l: k * a.min(b),
                    m: k * a.max(b),
                    n: k * n,
                });
            }
        }
        p += 1;
    }
    out.sort_by_key(|t| (t.n, t.l));
    out
}

/// Unordered pairs of distinct triples sharing a hypotenuse, sorted by
/// `(n, first.l)`; within a pair the triple with the smaller `l` comes first.
pub fn hypotenuse_pairs(max_hypotenuse: u64) -> Vec<(PythTriple, PythTriple)> {
    let triples = generate_triples(max_hypotenuse);
    let mut pairs = Vec::new();
    for group in triples.chunk_by(|a, b| a.n == b.n) {
        for (i, first) in group.iter().enumerate() {
            for second in &group[i + 1..] {
                pairs.push((*first, *second));
            }
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn brute_force(max: u64) -> Vec<PythTriple> {
        let mut out = Vec::new();
        for n in 1..=max {
            for l in 1..n {
                for m in l..n {
                    if l * l + m * m == n * n {
                        out.push(PythTriple { l, m, n });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate_triple(15, 20, 25).unwrap(), PythTriple { l: 15, m: 20, n: 25 });
        assert_eq!(validate_triple(7, 24, 25).unwrap().n(), 25);
        assert_eq!(validate_triple(24, 7, 25).unwrap(), validate_triple(7, 24, 25).unwrap());
        assert_eq!(
            validate_triple(3, 4, 6),
            Err(Error::NotPythagorean { l: 3, m: 4, n: 6 })
        );
        assert!(validate_triple(0, 4, 4).is_err());
    }

    #[test]
    fn generation_examples() {
        assert_eq!(generate_triples(5), vec![PythTriple { l: 3, m: 4, n: 5 }]);
        assert!(generate_triples(4).is_empty());
        let upto25: Vec<(u64, u64, u64)> = generate_triples(25).iter().map(|t| (t.l, t.m, t.n)).collect();
        assert_eq!(
            upto25,
            vec![
                (3, 4, 5),
                (6, 8, 10),
                (5, 12, 13),
                (9, 12, 15),
                (8, 15, 17),
                (12, 16, 20),
                (7, 24, 25),
                (15, 20, 25)
            ]
        );
    }

    #[test]
    fn generation_matches_brute_force() {
        let mut expected = brute_force(200);
        expected.sort_by_key(|t| (t.n, t.l));
        assert_eq!(generate_triples(200), expected);
    }

    #[test]
    fn generated_triples_validate_and_are_unique() {
        let all = generate_triples(1000);
        for t in &all {
            assert_eq!(validate_triple(t.l, t.m, t.n).unwrap(), *t);
        }
        let unique: HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
    }

    #[test]
    fn pair_examples() {
        let pairs = hypotenuse_pairs(25);
        let wanted = (validate_triple(7, 24, 25).unwrap(), validate_triple(15, 20, 25).unwrap());
        assert!(pairs.contains(&wanted));
        assert_eq!(pairs.len(), 1);
        assert!(hypotenuse_pairs(20).iter().all(|(a, _)| a.n != 15));
        assert!(hypotenuse_pairs(5).is_empty());
        // n = 65 has four triples, hence six pairs
        let at65 = hypotenuse_pairs(65).into_iter().filter(|(a, _)| a.n == 65).count();
        assert_eq!(at65, 6);
    }

    #[test]
    fn primitive_part() {
        let (base, k) = validate_triple(15, 20, 25).unwrap().primitive();
        assert_eq!((base.l, base.m, base.n, k), (3, 4, 5, 5));
    }
}
