use serde::Serialize;

use crate::error::{Error, Result};

/// Trial division runs up to this bound, so cofactors below its square are prime.
const TRIAL_BOUND: u64 = 1_000_000;

/// A prime number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);
    pub const FIVE: Prime = Prime(5);

    pub fn new(p: u64) -> Result<Self> {
        if p > TRIAL_BOUND * TRIAL_BOUND {
            return Err(Error::FactorizationOverflow(p));
        }
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) || p.is_multiple_of(3) {
        return false;
    }
    let mut d = 5;
    while d * d <= p {
        if p.is_multiple_of(d) || p.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Largest `e` with `p^e | n`; `n = 0` has no finite valuation and returns 0.
pub fn p_adic_valuation(p: Prime, n: u64) -> u32 {
    if n == 0 {
        return 0;
    }
    if p.0 == 2 {
        return n.trailing_zeros();
    }
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p.0) {
        n /= p.0;
        e += 1;
    }
    e
}

/// Prime factorization `[(p, e)]` in ascending order of `p`.
pub fn factorize(n: u64) -> Result<Vec<(Prime, u32)>> {
    if n == 0 {
        return Err(Error::Domain {
            function: "factorize",
            value: 0.0,
            constraint: "n >= 1",
        });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut take = |d: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(d) {
            *rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((Prime(d), e));
        }
    };
    take(2, &mut rest);
    take(3, &mut rest);
    let mut d = 5;
    while d <= TRIAL_BOUND && d * d <= rest {
        take(d, &mut rest);
        take(d + 2, &mut rest);
        d += 6;
    }
    if rest > 1 {
        if d * d > rest || rest <= TRIAL_BOUND * TRIAL_BOUND {
            factors.push((Prime(rest), 1));
        } else {
            return Err(Error::FactorizationOverflow(n));
        }
    }
    Ok(factors)
}

/// Coefficient of `ln p` in the expansion of index `n` (over the common
/// factor `1/(8pi)`): `4n (1 - v_2(n))` for `p = 2`, `-4n v_p(n)` otherwise.
pub fn coefficient_law(p: Prime, n: u64) -> i64 {
    let v = p_adic_valuation(p, n) as i64;
    let n = n as i64;
    if p.0 == 2 {
        4 * n * (1 - v)
    } else {
        -4 * n * v
    }
}

/// [`coefficient_law`] for `n = 1..=n_max`.
pub fn coeff_sequence(p: Prime, n_max: u64) -> Vec<i64> {
    (1..=n_max).map(|n| coefficient_law(p, n)).collect()
}

/// Normalized coefficient subsequence: `-a(8n)/(32n) = v_2(n) + 2` for `p = 2`
/// and `-a(pn)/(4pn) = v_p(n) + 1` for odd `p`.
pub fn ruler_normalized(p: Prime, n: u64) -> i64 {
    let v = p_adic_valuation(p, n) as i64;
    if p.0 == 2 {
        v + 2
    } else {
        v + 1
    }
}
