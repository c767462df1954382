//! Seeded random `InducingData` generation and the batch theorem check.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jordan::{JordanBlock, JordanData};
use crate::levi::{verify_theorem, InducingData, VerificationResult};
use crate::oracle::OracleOptions;
use crate::param::{tensor_type, CuspidalSymbol, DualityType, GroupFamily, GroupSpec, Summand};

const SYMBOLS_PER_DIM: u32 = 3;
const SIGMA_ATTEMPTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzBounds {
    pub max_deltas: usize,
    /// Largest `d_ρ`.
    pub max_dim: u32,
    pub max_a: u32,
    pub max_mult: u32,
    pub max_residual_rank: u32,
    pub family: GroupFamily,
}

impl Default for FuzzBounds {
    fn default() -> Self {
        Self {
            max_deltas: 5,
            max_dim: 4,
            max_a: 5,
            max_mult: 3,
            max_residual_rank: 6,
            family: GroupFamily::Symplectic,
        }
    }
}

impl FuzzBounds {
    pub fn with_family(family: GroupFamily) -> Self {
        Self {
            family,
            ..Self::default()
        }
    }

    fn check(&self) -> Result<()> {
        if self.family == GroupFamily::Unitary {
            return Err(Error::BoundsInfeasible(
                "the fuzzer covers Sp, SO(2n+1) and O(2n) only".into(),
            ));
        }
        if self.max_dim == 0 || self.max_a == 0 || self.max_mult == 0 {
            return Err(Error::BoundsInfeasible(
                "max_dim, max_a and max_mult must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Symbols the generator draws from.
struct Pool {
    self_dual: Vec<CuspidalSymbol>,
    not_self_dual: Vec<CuspidalSymbol>,
}

impl Pool {
    fn new(max_dim: u32) -> Result<Self> {
        let mut self_dual = Vec::new();
        let mut not_self_dual = Vec::new();
        for d in 1..=max_dim {
            for i in 0..SYMBOLS_PER_DIM {
                self_dual.push(CuspidalSymbol::self_dual(
                    format!("o{d}.{i}"),
                    d,
                    DualityType::Orthogonal,
                )?);
                if d % 2 == 0 {
                    self_dual.push(CuspidalSymbol::self_dual(
                        format!("s{d}.{i}"),
                        d,
                        DualityType::Symplectic,
                    )?);
                }
                let c = CuspidalSymbol::not_self_dual(format!("c{d}.{i}"), d, format!("c{d}.{i}~"))?;
                not_self_dual.push(c.dual());
                not_self_dual.push(c);
            }
        }
        Ok(Self {
            self_dual,
            not_self_dual,
        })
    }
}

/// Random Jordan data of total dimension `target` and dual type `want`.
fn random_sigma(
    rng: &mut ChaCha8Rng,
    pool: &Pool,
    group: GroupSpec,
    max_a: u32,
) -> Option<JordanData> {
    let want = group.dual_type()?;
    let target = group.dual_dimension();
    let candidates: Vec<(CuspidalSymbol, u32)> = pool
        .self_dual
        .iter()
        .flat_map(|rho| (1..=max_a).map(move |a| (rho.clone(), a)))
        .filter(|(rho, a)| tensor_type(rho.duality(), *a) == want && rho.dim() * a <= target)
        .collect();
    for _ in 0..SIGMA_ATTEMPTS {
        let mut blocks: Vec<JordanBlock> = Vec::new();
        let mut remaining = target;
        while remaining > 0 {
            let open: Vec<&(CuspidalSymbol, u32)> = candidates
                .iter()
                .filter(|(rho, a)| {
                    rho.dim() * a <= remaining
                        && !blocks.iter().any(|b| b.matches(rho, *a))
                        && blocks
                            .iter()
                            .all(|b| b.rho.label() != rho.label() || b.a % 2 == a % 2)
                })
                .collect();
            let Some((rho, a)) = open.choose(rng) else {
                break;
            };
            remaining -= rho.dim() * a;
            blocks.push(JordanBlock::new(rho.clone(), *a));
        }
        if remaining == 0 {
            return Some(JordanData::new(group, blocks));
        }
    }
    None
}

#[derive(Debug, Clone, Copy)]
enum Bucket {
    NotSelfDual,
    OppositeType,
    JordanBlock,
    SameTypeFree,
}

const BUCKETS: [Bucket; 4] = [
    Bucket::NotSelfDual,
    Bucket::OppositeType,
    Bucket::JordanBlock,
    Bucket::SameTypeFree,
];

fn random_delta(
    rng: &mut ChaCha8Rng,
    pool: &Pool,
    sigma: &JordanData,
    bounds: &FuzzBounds,
) -> Option<Summand> {
    let want = sigma.group().dual_type()?;
    let bucket = *BUCKETS.choose(rng)?;
    let (rho, a) = match bucket {
        Bucket::NotSelfDual => (
            pool.not_self_dual.choose(rng)?.clone(),
            rng.random_range(1..=bounds.max_a),
        ),
        Bucket::JordanBlock => {
            let b = sigma
                .blocks()
                .iter()
                .filter(|b| b.rho.dim() <= bounds.max_dim && b.a <= bounds.max_a)
                .collect::<Vec<_>>()
                .choose(rng)
                .copied()?;
            (b.rho.clone(), b.a)
        }
        Bucket::OppositeType | Bucket::SameTypeFree => {
            let rho = pool.self_dual.choose(rng)?.clone();
            let same = matches!(bucket, Bucket::SameTypeFree);
            let options: Vec<u32> = (1..=bounds.max_a)
                .filter(|&a| (tensor_type(rho.duality(), a) == want) == same)
                .filter(|&a| !same || !sigma.contains(&rho, a))
                .collect();
            (rho, *options.choose(rng)?)
        }
    };
    Summand::new(rho, a).ok()
}

/// Deterministic in `seed`. The result always passes `validate_inducing`.
pub fn random_instance(seed: u64, bounds: &FuzzBounds) -> Result<InducingData> {
    bounds.check()?;
    let pool = Pool::new(bounds.max_dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let ranks: Vec<u32> = (0..=bounds.max_residual_rank)
        .filter(|&m| !(bounds.family == GroupFamily::EvenOrthogonal && m == 1))
        .collect();
    let mut order = ranks.clone();
    // Try a random residual rank first, then the rest in order.
    let first = rng.random_range(0..order.len());
    order.swap(0, first);
    let sigma = order
        .iter()
        .find_map(|&m| random_sigma(&mut rng, &pool, GroupSpec::new(bounds.family, m), bounds.max_a))
        .ok_or_else(|| {
            Error::BoundsInfeasible(format!(
                "no Jordan data for {} with residual rank ≤ {}",
                bounds.family.short_name(),
                bounds.max_residual_rank
            ))
        })?;

    let count = rng.random_range(0..=bounds.max_deltas);
    let mut deltas: Vec<(Summand, u32)> = Vec::with_capacity(count);
    let mut tries = 0;
    while deltas.len() < count && tries < 20 * count {
        tries += 1;
        let Some(delta) = random_delta(&mut rng, &pool, &sigma, bounds) else {
            continue;
        };
        if deltas.iter().any(|(d, _)| d.same_class(&delta)) {
            continue;
        }
        let m = rng.random_range(1..=bounds.max_mult);
        deltas.push((delta, m));
    }
    Ok(InducingData::new(deltas, sigma))
}

#[derive(Debug, Clone)]
pub struct FuzzFailure {
    pub index: u64,
    pub seed: u64,
    pub instance: InducingData,
    pub result: VerificationResult,
}

#[derive(Debug, Clone)]
pub struct FuzzSummary {
    pub total: u64,
    pub agreed: u64,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzSummary {
    pub fn all_agree(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Instance `i` uses seed `seed + i`. Failures are listed by index.
pub fn run_fuzz(
    seed: u64,
    count: u64,
    bounds: &FuzzBounds,
    oracle: Option<OracleOptions>,
) -> Result<FuzzSummary> {
    bounds.check()?;
    let outcomes: Vec<Result<Option<FuzzFailure>>> = (0..count)
        .into_par_iter()
        .map(|index| {
            let instance_seed = seed.wrapping_add(index);
            let instance = random_instance(instance_seed, bounds)?;
            let result = verify_theorem(&instance, oracle)?;
            Ok((!result.all_agree()).then(|| FuzzFailure {
                index,
                seed: instance_seed,
                instance,
                result,
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for outcome in outcomes {
        if let Some(f) = outcome? {
            failures.push(f);
        }
    }
    Ok(FuzzSummary {
        total: count,
        agreed: count - failures.len() as u64,
        failures,
    })
}
