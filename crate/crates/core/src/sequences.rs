//! Exact integer sequences used as expected counts. All arithmetic is checked;
//! overflow is reported as [`Error::Overflow`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    /// `M_0 = 1`, `M_{n+1} = M_n + Σ_{k<n} M_k M_{n-1-k}`.
    Motzkin,
    /// `C_0 = 1`.
    Catalan,
    /// `F_0 = 0`, `F_1 = F_2 = 1`.
    Fibonacci,
    /// `t_0 = t_1 = 0`, `t_2 = 1`, `t_{n+3} = t_{n+2} + t_{n+1} + t_n`.
    Tribonacci,
    /// `binom(n, ⌊n/2⌋)`.
    CentralBinomial,
    /// `2^n`.
    PowerOfTwo,
    /// Number of Motzkin prefixes of length `h`:
    /// `Σ_{i=0}^{h} h! / ((h-i)! ⌊i/2⌋! ⌈i/2⌉!)`.
    MotzkinPrefix,
    /// `I(n) = I(n-1) + (n-1) I(n-2)`, the number of involutions.
    Involutions,
}

impl Sequence {
    pub const ALL: [Sequence; 8] = [
        Sequence::Motzkin,
        Sequence::Catalan,
        Sequence::Fibonacci,
        Sequence::Tribonacci,
        Sequence::CentralBinomial,
        Sequence::PowerOfTwo,
        Sequence::MotzkinPrefix,
        Sequence::Involutions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::Motzkin => "motzkin",
            Sequence::Catalan => "catalan",
            Sequence::Fibonacci => "fibonacci",
            Sequence::Tribonacci => "tribonacci",
            Sequence::CentralBinomial => "central_binomial",
            Sequence::PowerOfTwo => "power_of_two",
            Sequence::MotzkinPrefix => "motzkin_prefix",
            Sequence::Involutions => "involutions",
        }
    }

    pub fn value(self, n: u64) -> Result<u64> {
        let overflow = || Error::Overflow {
            sequence: self.name(),
            n,
        };
        match self {
            Sequence::Motzkin => {
                let mut m: Vec<u64> = vec![1];
                for k in 0..n as usize {
                    let mut next = m[k];
                    for j in 0..k {
                        let term = m[j].checked_mul(m[k - 1 - j]).ok_or_else(overflow)?;
                        next = next.checked_add(term).ok_or_else(overflow)?;
                    }
                    m.push(next);
                }
                Ok(m[n as usize])
            }
            Sequence::Catalan => {
                let mut c: Vec<u64> = vec![1];
                for k in 0..n as usize {
                    let mut next = 0u64;
                    for j in 0..=k {
                        let term = c[j].checked_mul(c[k - j]).ok_or_else(overflow)?;
                        next = next.checked_add(term).ok_or_else(overflow)?;
                    }
                    c.push(next);
                }
                Ok(c[n as usize])
            }
            Sequence::Fibonacci => {
                if n == 0 {
                    return Ok(0);
                }
                let (mut a, mut b) = (0u64, 1u64);
                for _ in 1..n {
                    let c = a.checked_add(b).ok_or_else(overflow)?;
                    a = b;
                    b = c;
                }
                Ok(b)
            }
            Sequence::Tribonacci => {
                if n < 3 {
                    return Ok([0, 0, 1][n as usize]);
                }
                let (mut a, mut b, mut c) = (0u64, 0u64, 1u64);
                for _ in 3..=n {
                    let d = a
                        .checked_add(b)
                        .and_then(|x| x.checked_add(c))
                        .ok_or_else(overflow)?;
                    a = b;
                    b = c;
                    c = d;
                }
                Ok(c)
            }
            Sequence::CentralBinomial => binomial(n, n / 2).ok_or_else(overflow),
            Sequence::PowerOfTwo => u32::try_from(n)
                .ok()
                .and_then(|e| 2u64.checked_pow(e))
                .ok_or_else(overflow),
            Sequence::MotzkinPrefix => {
                let mut total = 0u64;
                for i in 0..=n {
                    let term = binomial(n, i)
                        .and_then(|b| b.checked_mul(binomial(i, i / 2)?))
                        .ok_or_else(overflow)?;
                    total = total.checked_add(term).ok_or_else(overflow)?;
                }
                Ok(total)
            }
            Sequence::Involutions => {
                let (mut prev, mut cur) = (1u64, 1u64);
                for k in 1..n {
                    let next = k
                        .checked_mul(prev)
                        .and_then(|x| x.checked_add(cur))
                        .ok_or_else(overflow)?;
                    prev = cur;
                    cur = next;
                }
                Ok(cur)
            }
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sequence::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

/// `binom(n, k)`, `None` on overflow. Zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // acc * (n - k + i) / i is binom(n - k + i, i), always integral.
        acc = acc.checked_mul(n as u128 - k as u128 + i)? / i;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Looks up a sequence by name and evaluates it.
pub fn oracle(name: &str, n: u64) -> Result<u64> {
    name.parse::<Sequence>()?.value(n)
}
