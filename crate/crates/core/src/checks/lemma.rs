//! Exhaustive check of the root-of-unity ratio dichotomy: for a primitive
//! `n`-th root `zeta` and `b, d != 0 (mod n)`,
//! `(zeta^a - 1)/(zeta^b - 1) = (zeta^c - 1)/(zeta^d - 1)` should force
//! `a = b, c = d` or `a = c, b = d` modulo `n`.

use super::CheckError;
use crate::field::{FieldDescriptor, Scalar};

/// A quadruple `(a, b, c, d)` (residues mod `n`) where the ratios agree but
/// neither alternative of the dichotomy holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LemmaCounterexample {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl LemmaCounterexample {
    /// Both ratios are zero (`a = c = 0`), so the equality carries no
    /// information about `b` and `d`.
    pub fn is_degenerate(&self) -> bool {
        self.a == 0 && self.c == 0
    }
}

/// Enumerates all `(a, b, c, d)` in `(Z/n)^4` with `b, d != 0` and returns
/// every violation of the dichotomy, in lexicographic order.
///
/// Equality of ratios is tested cross-multiplied:
/// `(zeta^a - 1)(zeta^d - 1) = (zeta^c - 1)(zeta^b - 1)`.
pub fn verify_root_ratio_lemma(
    n: u64,
    field: FieldDescriptor,
) -> Result<Vec<LemmaCounterexample>, CheckError> {
    if n < 2 {
        return Err(CheckError::NTooSmall(n));
    }
    let zeta = field.primitive_root_of_unity(n)?;
    let one = field.one();
    let shifted: Vec<Scalar> = (0..n).map(|k| &zeta.pow(k) - &one).collect();
    let nu = n as usize;
    // products[x][y] = (zeta^x - 1)(zeta^y - 1)
    let products: Vec<Vec<Scalar>> = shifted
        .iter()
        .map(|x| shifted.iter().map(|y| x * y).collect())
        .collect();
    let mut out = Vec::new();
    for a in 0..nu {
        for b in 1..nu {
            for c in 0..nu {
                for d in 1..nu {
                    if products[a][d] != products[c][b] {
                        continue;
                    }
                    let first = a == b && c == d;
                    let second = a == c && b == d;
                    if !(first || second) {
                        out.push(LemmaCounterexample {
                            a: a as u64,
                            b: b as u64,
                            c: c as u64,
                            d: d as u64,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}
