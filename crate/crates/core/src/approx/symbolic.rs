use std::fmt;

use serde::Serialize;

use super::arith::{factorize, Prime};
use super::{gamma_wrap_multiple, main_term_dd};
use crate::dd::{self, DoubleDouble};
use crate::error::{Error, Result};

/// Largest index accepted by the symbolic builders; keeps every coefficient
/// and the main term exactly representable.
pub const SYMBOLIC_MAX_N: u64 = 1_000_000_000_000;

/// `(1/(8pi)) (c_pi pi + c_const + c_lnpi ln(pi) + sum c_p ln(p))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicArgExpression {
    #[serde(rename = "pi")]
    pub c_pi: i64,
    #[serde(rename = "const")]
    pub c_const: i64,
    #[serde(rename = "lnpi")]
    pub c_lnpi: i64,
    /// Nonzero `(p, c_p)` in ascending order of `p`.
    #[serde(rename = "primes")]
    pub prime_terms: Vec<(u64, i64)>,
}

impl SymbolicArgExpression {
    /// Coefficient of `ln p`, zero when absent.
    pub fn coefficient(&self, p: u64) -> i64 {
        self.prime_terms
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, c)| c)
    }

    pub(crate) fn evaluate_dd(&self) -> DoubleDouble {
        let mut acc =
            dd::PI * self.c_pi as f64 + self.c_const as f64 + dd::LN_PI * self.c_lnpi as f64;
        for &(p, c) in &self.prime_terms {
            acc = acc + DoubleDouble::ln(p as f64) * c as f64;
        }
        acc / (dd::PI * 8.0)
    }

    pub fn evaluate(&self) -> f64 {
        self.evaluate_dd().to_f64()
    }
}

/// Canonical text: terms ordered pi, constant, ln(pi), then primes ascending.
impl fmt::Display for SymbolicArgExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1/(8*pi))*({}*pi", self.c_pi)?;
        let mut term = |c: i64, basis: &str| -> fmt::Result {
            let sign = if c < 0 { '-' } else { '+' };
            write!(f, " {sign} {}*{basis}", c.unsigned_abs())
        };
        term(self.c_const, "1")?;
        if self.c_lnpi != 0 {
            term(self.c_lnpi, "ln(pi)")?;
        }
        for &(p, c) in &self.prime_terms {
            term(c, &format!("ln({p})"))?;
        }
        write!(f, ")")
    }
}

fn check_index(function: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            function,
            value: 0.0,
            constraint: "n >= 1",
        });
    }
    if n > SYMBOLIC_MAX_N {
        return Err(Error::FactorizationOverflow(n));
    }
    Ok(())
}

/// `ln p` coefficients of `-4n ln n + 4n ln 2`, scaled by `sign`.
fn log_terms(n: u64, sign: i64) -> Result<Vec<(u64, i64)>> {
    let four_n = 4 * n as i64;
    let factors = factorize(n)?;
    let v2 = factors
        .iter()
        .find(|(p, _)| *p == Prime::TWO)
        .map_or(0, |&(_, e)| e as i64);
    let mut terms = Vec::with_capacity(factors.len() + 1);
    if v2 != 1 {
        terms.push((2, sign * four_n * (1 - v2)));
    }
    terms.extend(
        factors
            .iter()
            .filter(|(p, _)| *p != Prime::TWO)
            .map(|&(p, e)| (p.get(), -sign * four_n * e as i64)),
    );
    Ok(terms)
}

/// Exact expansion of the zeta approximation at index `n`.
pub fn symbolic_expression(n: u64) -> Result<SymbolicArgExpression> {
    check_index("symbolic_expression", n)?;
    let rounded = main_term_dd(n as f64).round_ties_even() as i64;
    let four_n = 4 * n as i64;
    Ok(SymbolicArgExpression {
        c_pi: 8 * rounded - 7,
        c_const: four_n,
        c_lnpi: four_n,
        prime_terms: log_terms(n, 1)?,
    })
}

/// Exact expansion of the gamma approximation at index `n`.
pub fn symbolic_gamma_expression(n: u64) -> Result<SymbolicArgExpression> {
    check_index("symbolic_gamma_expression", n)?;
    let m = gamma_wrap_multiple(n);
    Ok(SymbolicArgExpression {
        c_pi: -1 - 16 * m,
        c_const: -4 * n as i64,
        c_lnpi: 0,
        prime_terms: log_terms(n, -1)?,
    })
}
