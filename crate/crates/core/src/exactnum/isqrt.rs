use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Calculate the integer square root `⌊√n⌋` by Newton iteration.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    if let Some(small) = n.to_u64() {
        return BigUint::from(isqrt_u64(small));
    }
    // initial guess 2^⌈bits/2⌉ is always >= √n, so the iteration decreases
    // monotonically until it reaches the floor
    let bits = n.bits();
    let mut x = BigUint::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = 1u64 << ((64 - n.leading_zeros()).div_ceil(2));
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub fn is_perfect_square(n: &BigUint) -> bool {
    let r = isqrt(n);
    &r * &r == *n
}

/// Split `n` as `root² · free` with `free` squarefree. `n = 0` yields `(0, 1)`.
pub fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = n.to_u128() {
        let (root, free) = square_free_split_u128(small);
        return (BigUint::from(root), BigUint::from(free));
    }
    let mut rest = n.clone();
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    // every prime factor of `rest` is >= p; once p³ > rest, `rest` has at most
    // two prime factors and is squarefree unless it is a perfect square
    while &p * &p * &p <= rest {
        let mut count = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            count += 1;
        }
        for _ in 0..count / 2 {
            root *= &p;
        }
        if count % 2 == 1 {
            free *= &p;
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigUint::one() && is_perfect_square(&rest) {
        root *= isqrt(&rest);
    } else {
        free *= rest;
    }
    (root, free)
}

fn square_free_split_u128(n: u128) -> (u128, u128) {
    let mut rest = n;
    let mut root = 1u128;
    let mut free = 1u128;
    let mut p = 2u128;
    while p.saturating_mul(p).saturating_mul(p) <= rest {
        let mut count = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            count += 1;
        }
        root *= p.pow(count / 2);
        if count % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        let r = isqrt(&BigUint::from(rest)).to_u128().unwrap_or(0);
        if r * r == rest {
            root *= r;
        } else {
            free *= rest;
        }
    }
    (root, free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Roots;

    fn brute_isqrt(n: u64) -> u64 {
        let mut r = 0u64;
        while (r + 1) * (r + 1) <= n {
            r += 1;
        }
        r
    }

    fn is_squarefree(mut n: u64) -> bool {
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p * p) {
                return false;
            }
            if n.is_multiple_of(p) {
                n /= p;
            }
            p += 1;
        }
        true
    }

    #[test]
    fn small_values_match_brute_force() {
        for n in 0..5000u64 {
            assert_eq!(isqrt_u64(n), brute_isqrt(n), "n = {n}");
            assert_eq!(isqrt(&BigUint::from(n)), BigUint::from(brute_isqrt(n)));
        }
    }

    #[test]
    fn large_values_match_num_integer() {
        let mut n = BigUint::from(19800u32) * BigUint::from(10u32).pow(100);
        for _ in 0..50 {
            let r = isqrt(&n);
            assert_eq!(r, n.sqrt());
            assert!(&r * &r <= n && (&r + 1u32) * (&r + 1u32) > n);
            n = n * 7u32 + 3u32;
        }
        assert_eq!(isqrt_u64(u64::MAX), u64::MAX.sqrt());
    }

    #[test]
    fn square_free_split_examples() {
        let split = |n: u64| {
            let (r, f) = square_free_split(&BigUint::from(n));
            (r.to_u64().unwrap(), f.to_u64().unwrap())
        };
        assert_eq!(split(19800), (30, 22));
        assert_eq!(split(9), (3, 1));
        assert_eq!(split(1), (1, 1));
        assert_eq!(split(0), (0, 1));
        assert_eq!(split(12), (2, 3));
        // p² with p above the cube-root bound
        assert_eq!(split(1_000_003 * 1_000_003), (1_000_003, 1));
    }

    #[test]
    fn square_free_split_reconstructs_and_is_squarefree() {
        for n in 1..3000u64 {
            let (r, f) = square_free_split(&BigUint::from(n));
            let (r, f) = (r.to_u64().unwrap(), f.to_u64().unwrap());
            assert_eq!(r * r * f, n);
            assert!(is_squarefree(f), "{n} -> {f}");
        }
    }

    #[test]
    fn big_path_agrees_with_u128_path() {
        // 2^130 · 3 · 5² · 7³ exceeds u128
        let n = (BigUint::one() << 130u32) * 3u32 * 25u32 * 343u32;
        let (r, f) = square_free_split(&n);
        assert_eq!(f, BigUint::from(21u32));
        assert_eq!(r, (BigUint::one() << 65u32) * 5u32 * 7u32);
    }
}
