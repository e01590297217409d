//! Memoized induction relations for the class-expansion coefficients.
//!
//! Every family is computed by removing one part `m` from the partition, `λ = ρ ∪ (m)`, and
//! expressing the coefficient through values at degree `k - 1` (plus, when `m = 1`, a value
//! at the same degree on a smaller partition). The part removed is the largest one unless
//! the engine is built with [`Peel::Smallest`]; both choices give the same numbers.

mod cache;
mod transforms;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use cache::{load_cache, save_cache, CACHE_HEADER};
pub use transforms::lassalle_identity_check;

/// Which coefficient family a table entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// `h_k(J) = Σ a^k_λ C_λ`.
    A,
    /// `p_k(J) = Σ a^{p_k}_λ C_λ`.
    APower,
    /// `h_k(X) = Σ c^k_λ PC_λ` in the partial-permutation algebra.
    C,
    /// `h_k(J⁽²⁾) p_n = Σ b^k_μ C⁽²⁾_μ`.
    B,
    /// `p_k(J⁽²⁾) p_n = Σ b^{p_k}_μ C⁽²⁾_μ`.
    BPower,
    /// The solution of `b^k_ρ = Σ_i d^k_{ρ̄ ∪ 1^i} C(m_1(ρ), i)`.
    D,
}

impl Kind {
    pub const ALL: [Kind; 6] = [Kind::A, Kind::APower, Kind::C, Kind::B, Kind::BPower, Kind::D];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::A => "a",
            Kind::APower => "a-power",
            Kind::C => "c",
            Kind::B => "b",
            Kind::BPower => "b-power",
            Kind::D => "d",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown coefficient family {s:?}")))
    }
}

/// Which part the recursion removes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Peel {
    #[default]
    Largest,
    Smallest,
}

type Key = (Kind, usize, Partition);

/// Coefficient tables shared by all families. Reads and inserts are synchronized; two
/// threads may compute the same entry, but they always insert equal values.
#[derive(Debug, Default)]
pub struct Engine {
    peel: Peel,
    table: RwLock<HashMap<Key, BigInt>>,
}

/// Shape of the `a`/`b` style relations:
/// `δ_{m,1} v^k_ρ + w Σ ρ_i v^{k-1}_{ρ∖ρ_i∪(ρ_i+m)} + Σ_{r+s=m} v^{k-1}_{ρ∪(r,s)}
///  + β (m-1) v^{k-1}_{ρ∪(m)} - γ δ_{m>1} v^{k-1}_{ρ∪(m-1)}`.
#[derive(Clone, Copy)]
struct Shape {
    kind: Kind,
    merge_weight: u32,
    self_weight: bool,
    power: bool,
}

const A_SHAPE: Shape = Shape {
    kind: Kind::A,
    merge_weight: 1,
    self_weight: false,
    power: false,
};
const A_POWER_SHAPE: Shape = Shape {
    kind: Kind::APower,
    power: true,
    ..A_SHAPE
};
const B_SHAPE: Shape = Shape {
    kind: Kind::B,
    merge_weight: 2,
    self_weight: true,
    power: false,
};
const B_POWER_SHAPE: Shape = Shape {
    kind: Kind::BPower,
    power: true,
    ..B_SHAPE
};

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_peel(peel: Peel) -> Self {
        Engine {
            peel,
            table: RwLock::default(),
        }
    }

    /// A process-wide engine peeling the largest part.
    pub fn global() -> &'static Engine {
        static GLOBAL: OnceLock<Engine> = OnceLock::new();
        GLOBAL.get_or_init(Engine::new)
    }

    pub fn peel(&self) -> Peel {
        self.peel
    }

    /// Number of memoized entries.
    pub fn len(&self) -> usize {
        self.table.read().expect("table lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every memoized entry, sorted by kind, degree and partition.
    pub fn entries(&self) -> Vec<(Kind, usize, Partition, BigInt)> {
        let table = self.table.read().expect("table lock");
        let mut out: Vec<_> = table
            .iter()
            .map(|((kind, k, lam), v)| (*kind, *k, lam.clone(), v.clone()))
            .collect();
        out.sort();
        out
    }

    /// Seeds the table, e.g. from a cache file. Conflicting values are rejected.
    pub fn insert(&self, kind: Kind, k: usize, lambda: Partition, value: BigInt) -> Result<()> {
        let mut table = self.table.write().expect("table lock");
        match table.get(&(kind, k, lambda.clone())) {
            Some(old) if *old != value => Err(Error::Cache(format!(
                "conflicting values {old} and {value} for {kind} {k} {lambda}"
            ))),
            _ => {
                table.insert((kind, k, lambda), value);
                Ok(())
            }
        }
    }

    fn memo(&self, kind: Kind, k: usize, lambda: &Partition, compute: impl FnOnce() -> BigInt) -> BigInt {
        let key = (kind, k, lambda.clone());
        if let Some(v) = self.table.read().expect("table lock").get(&key) {
            return v.clone();
        }
        let v = compute();
        self.table
            .write()
            .expect("table lock")
            .entry(key)
            .or_insert_with(|| v.clone());
        v
    }

    fn split(&self, lambda: &Partition) -> (Partition, usize) {
        let m = match self.peel {
            Peel::Largest => lambda.largest(),
            Peel::Smallest => lambda.smallest(),
        }
        .expect("nonempty partition");
        let rho = lambda.remove_part(m).expect("part is present");
        (rho, m)
    }

    /// Coefficient of `C_ρ` in `h_k(J_1, ..., J_{|ρ|})`.
    pub fn a_coeff(&self, k: usize, rho: &Partition) -> BigInt {
        self.shaped(A_SHAPE, k, rho)
    }

    /// Coefficient of `C_ρ` in `p_k(J_1, ..., J_{|ρ|})`. For `k = 0` this is `n δ_{ρ,1^n}`.
    pub fn a_power_coeff(&self, k: usize, rho: &Partition) -> BigInt {
        self.shaped(A_POWER_SHAPE, k, rho)
    }

    /// Coefficient of `C⁽²⁾_μ` in `h_k(J⁽²⁾_1, ..., J⁽²⁾_{|μ|}) p_{|μ|}`.
    pub fn b_coeff(&self, k: usize, mu: &Partition) -> BigInt {
        self.shaped(B_SHAPE, k, mu)
    }

    /// Coefficient of `C⁽²⁾_μ` in `p_k(J⁽²⁾_1, ..., J⁽²⁾_{|μ|}) p_{|μ|}`.
    pub fn b_power_coeff(&self, k: usize, mu: &Partition) -> BigInt {
        self.shaped(B_POWER_SHAPE, k, mu)
    }

    fn shaped(&self, shape: Shape, k: usize, lambda: &Partition) -> BigInt {
        if lambda.is_empty() {
            return BigInt::from(u8::from(k == 0 && !shape.power));
        }
        let all_ones = lambda.ones_count() == lambda.len();
        if k == 0 {
            if !all_ones {
                return BigInt::zero();
            }
            return if shape.power {
                BigInt::from(lambda.size())
            } else {
                BigInt::one()
            };
        }
        if shape.power && k == 1 {
            // p_1 = h_1
            return self.shaped(if shape.kind == Kind::APower { A_SHAPE } else { B_SHAPE }, 1, lambda);
        }
        self.memo(shape.kind, k, lambda, || {
            let (rho, m) = self.split(lambda);
            let prev = |p: &Partition| self.shaped(shape, k - 1, p);
            let mut v = BigInt::zero();
            if m == 1 {
                v += self.shaped(shape, k, &rho);
            }
            let mut merged = BigInt::zero();
            for (part, mult) in rho.grouped() {
                merged += BigInt::from(part * mult) * prev(&rho.replace_part(part, part + m));
            }
            v += merged * shape.merge_weight;
            for r in 1..m {
                v += prev(&rho.inserted(&[r, m - r]));
            }
            if shape.self_weight && m > 1 {
                v += BigInt::from(m - 1) * prev(lambda);
            }
            if shape.power && m > 1 {
                v -= prev(&rho.inserted(&[m - 1]));
            }
            v
        })
    }

    /// Coefficient of `PC_λ` in `h_k(X_1, X_2, ...)`.
    pub fn c_coeff(&self, k: usize, lambda: &Partition) -> BigInt {
        if k == 0 || lambda.is_empty() {
            return BigInt::from(u8::from(k == 0 && lambda.is_empty()));
        }
        self.memo(Kind::C, k, lambda, || {
            let (rho, m) = self.split(lambda);
            let prev = |p: &Partition| self.c_coeff(k - 1, p);
            let mut v = BigInt::zero();
            for (part, mult) in rho.grouped() {
                v += BigInt::from(part * mult) * prev(&rho.replace_part(part, part + m));
            }
            match m {
                1 => {}
                2 => {
                    v += prev(&rho.inserted(&[1, 1]));
                    v += 2 * prev(&rho.inserted(&[1]));
                    v += prev(&rho);
                }
                _ => {
                    for r in 1..m {
                        v += prev(&rho.inserted(&[r, m - r]));
                    }
                    v += 2 * prev(&rho.inserted(&[m - 1]));
                }
            }
            v
        })
    }

    /// Solution of the triangular system `b^k_ρ = Σ_i d^k_{ρ̄ ∪ 1^i} C(m_1(ρ), i)`.
    pub fn d_coeff(&self, k: usize, rho: &Partition) -> BigInt {
        self.memo(Kind::D, k, rho, || {
            transforms::triangular_solve(rho, |p| self.b_coeff(k, p), |p| self.d_coeff(k, p))
        })
    }

    /// Dispatch by family.
    pub fn coeff(&self, kind: Kind, k: usize, lambda: &Partition) -> BigInt {
        match kind {
            Kind::A => self.a_coeff(k, lambda),
            Kind::APower => self.a_power_coeff(k, lambda),
            Kind::C => self.c_coeff(k, lambda),
            Kind::B => self.b_coeff(k, lambda),
            Kind::BPower => self.b_power_coeff(k, lambda),
            Kind::D => self.d_coeff(k, lambda),
        }
    }
}

/// `a^k_ρ` from the process-wide engine.
pub fn a_coeff(k: usize, rho: &Partition) -> BigInt {
    Engine::global().a_coeff(k, rho)
}

/// `a^{p_k}_ρ` from the process-wide engine.
pub fn a_power_coeff(k: usize, rho: &Partition) -> BigInt {
    Engine::global().a_power_coeff(k, rho)
}

/// `c^k_λ` from the process-wide engine.
pub fn c_coeff(k: usize, lambda: &Partition) -> BigInt {
    Engine::global().c_coeff(k, lambda)
}

/// `b^k_μ` from the process-wide engine.
pub fn b_coeff(k: usize, mu: &Partition) -> BigInt {
    Engine::global().b_coeff(k, mu)
}

/// `b^{p_k}_μ` from the process-wide engine.
pub fn b_power_coeff(k: usize, mu: &Partition) -> BigInt {
    Engine::global().b_power_coeff(k, mu)
}

/// `d^k_ρ` from the process-wide engine.
pub fn d_from_b(k: usize, rho: &Partition) -> BigInt {
    Engine::global().d_coeff(k, rho)
}

pub use transforms::{a_from_c, b_from_d, c_from_a, polynomial_in_t};
