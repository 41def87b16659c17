//! Seeded generation of m-nice instances and searches for them.
//!
//! Each `(q, m)` pair draws from its own ChaCha stream derived from the seed,
//! so the corpus is identical whether it is built serially or in parallel.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::{FieldCtx, FieldElement};
use crate::number_theory::{divisors, is_prime};
use crate::poly::{index_decompose, IndexedForm, Polynomial};
use crate::report::{verify, VerificationReport};
use crate::structure::{psi_map, roots_of_unity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusBounds {
    pub q_max: u64,
    pub n_max: u64,
    pub deg_max: usize,
    pub seed: u64,
    /// Random draws per `(q, m)` pair.
    pub attempts: usize,
    /// Nice instances kept per `(q, m)` pair.
    pub keep: usize,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        Self {
            q_max: 199,
            n_max: 30,
            deg_max: 4,
            seed: 0x5eed,
            attempts: 256,
            keep: 3,
        }
    }
}

/// One instance over a prime field, stored by its minimal decomposition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Instance {
    pub q: u64,
    pub n: u64,
    pub m: u64,
    /// Coefficients of `h`, low to high, as residues mod `q`.
    pub h: Vec<u32>,
}

impl Instance {
    pub fn field(&self) -> FieldCtx {
        FieldCtx::prime(self.q).expect("corpus fields are prime")
    }

    pub fn form(&self, ctx: &FieldCtx) -> IndexedForm {
        let h = Polynomial::new(self.h.iter().map(|&c| ctx.from_int(c as i64)).collect());
        IndexedForm::new(ctx, self.n, h, self.m).expect("stored forms are valid")
    }

    pub fn polynomial(&self, ctx: &FieldCtx) -> Polynomial {
        self.form(ctx).to_polynomial(ctx)
    }

    fn from_form(q: u64, form: &IndexedForm) -> Self {
        Self {
            q,
            n: form.n,
            m: form.m,
            h: form.h.coeffs().iter().map(|c| c.index()).collect(),
        }
    }
}

fn pair_rng(seed: u64, q: u64, m: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((q << 32) | m);
    rng
}

fn random_h(ctx: &FieldCtx, rng: &mut impl Rng, deg_max: usize) -> Polynomial {
    random_h_from(ctx, rng, 0, deg_max)
}

fn random_h_from(ctx: &FieldCtx, rng: &mut impl Rng, deg_min: usize, deg_max: usize) -> Polynomial {
    let q = ctx.q();
    let deg = rng.gen_range(deg_min.min(deg_max)..=deg_max);
    let mut c: Vec<FieldElement> = (0..=deg)
        .map(|_| ctx.from_int(rng.gen_range(0..q) as i64))
        .collect();
    c[0] = ctx.from_int(rng.gen_range(1..q) as i64);
    c[deg] = ctx.from_int(rng.gen_range(1..q) as i64);
    Polynomial::new(c)
}

/// Decomposes `x^n h(x^s)` after reduction, keeping it if it is m-nice.
fn nice_instance(ctx: &FieldCtx, n: u64, h: Polynomial, m: u64) -> Option<Instance> {
    let raw = IndexedForm::new(ctx, n, h, m).ok()?;
    let f = raw.to_polynomial(ctx);
    let form = index_decompose(ctx, &f).ok()?;
    psi_map(ctx, &form)
        .nice
        .then(|| Instance::from_form(ctx.q(), &form))
}

/// Every `(q, m)` pair in range, with its draws; m-nice survivors,
/// deduplicated and sorted.
pub fn generate_corpus(bounds: &CorpusBounds) -> Vec<Instance> {
    let pairs: Vec<(u64, u64)> = (2..=bounds.q_max)
        .filter(|&q| is_prime(q))
        .flat_map(|q| divisors(q - 1).into_iter().map(move |m| (q, m)))
        .collect();
    let found: Vec<Vec<Instance>> = pairs
        .par_iter()
        .map(|&(q, m)| {
            let ctx = FieldCtx::prime(q).expect("prime");
            let mut rng = pair_rng(bounds.seed, q, m);
            let mu = roots_of_unity(&ctx, m);
            let mut kept: BTreeSet<Instance> = BTreeSet::new();
            for _ in 0..bounds.attempts {
                if kept.len() >= bounds.keep {
                    break;
                }
                let n = rng.gen_range(1..=bounds.n_max.max(1));
                let h = if m > 1 && bounds.deg_max > 0 && rng.gen_bool(0.5) {
                    // A root on mu_m gives psi_f a nonempty zero tail.
                    let zeta = mu[rng.gen_range(0..mu.len())];
                    let linear = Polynomial::new(vec![ctx.neg(zeta), ctx.one()]);
                    linear.mul(&ctx, &random_h(&ctx, &mut rng, bounds.deg_max - 1))
                } else {
                    random_h_from(&ctx, &mut rng, usize::from(m > 1), bounds.deg_max)
                };
                kept.extend(nice_instance(&ctx, n, h, m).filter(|inst| inst.m == m));
            }
            kept.into_iter().collect::<Vec<_>>()
        })
        .collect();
    let set: BTreeSet<Instance> = found.into_iter().flatten().collect();
    set.into_iter().collect()
}

/// Verifies every instance in parallel; results keep corpus order.
pub fn verify_corpus(corpus: &[Instance]) -> Vec<VerificationReport> {
    corpus
        .par_iter()
        .map(|inst| {
            let ctx = inst.field();
            verify(&ctx, &inst.polynomial(&ctx)).expect("corpus instances decompose")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub q: u64,
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub deg_max: usize,
    pub n_max: u64,
    /// Fixed `h`; otherwise every `h` is tried when there are at most
    /// `exhaustive_limit` of them, else `samples` are drawn.
    pub h: Option<Vec<u32>>,
    pub seed: u64,
    pub samples: usize,
    pub exhaustive_limit: u64,
}

impl SearchParams {
    pub fn new(q: u64) -> Self {
        Self {
            q,
            n: None,
            m: None,
            deg_max: 4,
            n_max: 30,
            h: None,
            seed: 0x5eed,
            samples: 64,
            exhaustive_limit: 20_000,
        }
    }
}

/// All `h` of degree at most `deg_max` with `h(0) != 0`, low to high.
fn all_h(q: u64, deg_max: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..=deg_max).flat_map(move |deg| {
        let count = (q - 1)
            * if deg == 0 {
                1
            } else {
                (q - 1) * q.pow(deg as u32 - 1)
            };
        (0..count).map(move |mut idx| {
            let mut c = vec![0u32; deg + 1];
            c[0] = (idx % (q - 1)) as u32 + 1;
            idx /= q - 1;
            if deg > 0 {
                c[deg] = (idx % (q - 1)) as u32 + 1;
                idx /= q - 1;
                for slot in c.iter_mut().take(deg).skip(1) {
                    *slot = (idx % q) as u32;
                    idx /= q;
                }
            }
            c
        })
    })
}

/// m-nice instances over a prime field whose minimal decomposition has the
/// requested `n` and `m`, sorted and deduplicated.
pub fn search_nice(params: &SearchParams) -> Vec<Instance> {
    let q = params.q;
    let Ok(ctx) = FieldCtx::prime(q) else {
        return Vec::new();
    };
    let ms: Vec<u64> = match params.m {
        Some(m) if (q - 1).is_multiple_of(m) => vec![m],
        Some(_) => return Vec::new(),
        None => divisors(q - 1),
    };
    let ns: Vec<u64> = match params.n {
        Some(n) => vec![n],
        None => (1..=params.n_max).collect(),
    };
    let hs: Vec<Vec<u32>> = match &params.h {
        Some(h) => vec![h.clone()],
        None => {
            let total: u64 = (0..=params.deg_max as u32)
                .map(|d| {
                    (q - 1)
                        * if d == 0 {
                            1
                        } else {
                            (q - 1) * q.saturating_pow(d - 1)
                        }
                })
                .fold(0u64, |a, b| a.saturating_add(b));
            if total <= params.exhaustive_limit {
                all_h(q, params.deg_max).collect()
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
                (0..params.samples)
                    .map(|_| {
                        random_h(&ctx, &mut rng, params.deg_max)
                            .coeffs()
                            .iter()
                            .map(|c| c.index())
                            .collect()
                    })
                    .collect()
            }
        }
    };
    let mut jobs: Vec<(u64, u64, &Vec<u32>)> = Vec::with_capacity(ms.len() * ns.len() * hs.len());
    for &m in &ms {
        for &n in &ns {
            jobs.extend(hs.iter().map(|h| (m, n, h)));
        }
    }
    let hits: BTreeSet<Instance> = jobs
        .par_iter()
        .filter_map(|&(m, n, h)| {
            let hp = Polynomial::new(h.iter().map(|&c| ctx.from_int(c as i64)).collect());
            nice_instance(&ctx, n, hp, m).filter(|inst| inst.m == m && inst.n == n)
        })
        .collect();
    hits.into_iter().collect()
}
