use std::fmt;
use std::time::Duration;

use crate::field::Scalar;
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckName {
    Homomorphism,
    Characteristic,
    MinimalCharacteristic,
    NoncommutativeCharacteristic,
    RootsOfUnity,
}

impl CheckName {
    pub const ALL: [CheckName; 5] = [
        CheckName::Homomorphism,
        CheckName::Characteristic,
        CheckName::MinimalCharacteristic,
        CheckName::NoncommutativeCharacteristic,
        CheckName::RootsOfUnity,
    ];

    /// Short name used on the command line.
    pub fn short(&self) -> &'static str {
        match self {
            CheckName::Homomorphism => "hom",
            CheckName::Characteristic => "char",
            CheckName::MinimalCharacteristic => "minchar",
            CheckName::NoncommutativeCharacteristic => "nc",
            CheckName::RootsOfUnity => "roots",
        }
    }

    pub fn from_short(s: &str) -> Option<CheckName> {
        Self::ALL.into_iter().find(|c| c.short() == s)
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Which relation or equation failed. Indices are 0-based; `Display`
/// renders them 1-based to match the usual `e_1, ..., e_d` numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// `sum alpha_i - id`
    Unit,
    /// `alpha_i^2 - alpha_i`
    Idempotent { i: usize },
    /// `alpha_i alpha_j` for `i != j`
    Orthogonal { i: usize, j: usize },
    /// Coefficient of `x^exponents` in `prod_i (T - x_i)`.
    Monomial { exponents: Vec<u32> },
    /// Coefficient of `y^exponents` in the minimal-polynomial identity of one partition stratum.
    PartitionMonomial {
        partition: Vec<Vec<usize>>,
        exponents: Vec<u32>,
    },
    /// Residual of the word `x_{i_1} ... x_{i_d}` in the symmetrized identity.
    MultiIndex { indices: Vec<usize> },
    /// `phi(a)^n - id` for the torsion element `a = (zeta^{c_1}, ..., zeta^{c_d})`.
    Torsion { exponents: Vec<u64> },
}

fn one_based(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| (x + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn plain<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::Unit => write!(f, "unit: sum(alpha) != id"),
            ViolationKind::Idempotent { i } => {
                write!(f, "idempotent: alpha_{0}^2 != alpha_{0}", i + 1)
            }
            ViolationKind::Orthogonal { i, j } => {
                write!(f, "orthogonal: alpha_{}*alpha_{} != 0", i + 1, j + 1)
            }
            ViolationKind::Monomial { exponents } => write!(f, "monomial x^({})", plain(exponents)),
            ViolationKind::PartitionMonomial {
                partition,
                exponents,
            } => {
                let blocks: Vec<String> = partition
                    .iter()
                    .map(|b| format!("{{{}}}", one_based(b)))
                    .collect();
                write!(
                    f,
                    "partition {} monomial y^({})",
                    blocks.join(""),
                    plain(exponents)
                )
            }
            ViolationKind::MultiIndex { indices } => {
                write!(f, "multi-index ({})", one_based(indices))
            }
            ViolationKind::Torsion { exponents } => {
                write!(f, "torsion zeta^({})", plain(exponents))
            }
        }
    }
}

/// The nonzero residual that witnesses a violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Matrix(Matrix),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Matrix(m) => {
                let rows: Vec<String> = m
                    .rows()
                    .map(|r| {
                        r.iter()
                            .map(Scalar::to_compact_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                write!(f, "[{}]", rows.join("; "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Witness,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckStats {
    /// Number of relations or coefficient equations evaluated.
    pub equations: usize,
    pub elapsed: Duration,
    /// Free-form remarks (e.g. a mode fallback).
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: CheckName,
    violations: Vec<Violation>,
    pub stats: CheckStats,
}

impl CheckReport {
    pub(crate) fn new(check: CheckName) -> Self {
        CheckReport {
            check,
            violations: Vec::new(),
            stats: CheckStats::default(),
        }
    }

    /// Records a residual if it is nonzero, counting the equation either way.
    pub(crate) fn record_matrix(&mut self, kind: ViolationKind, residual: Matrix) {
        self.stats.equations += 1;
        if !residual.is_zero() {
            self.violations.push(Violation {
                kind,
                witness: Witness::Matrix(residual),
            });
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn find(&self, kind: &ViolationKind) -> Option<&Violation> {
        self.violations.iter().find(|v| &v.kind == kind)
    }
}
