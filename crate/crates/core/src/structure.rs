//! Closed-form functional graphs for `f(x) = x^n h(x^((q-1)/m))`.
//!
//! Everything is driven by the companion map `psi_f(x) = x^n h(x)^((q-1)/m)`
//! restricted to the m-th roots of unity `mu_m`. When `psi_f` is injective on
//! `mu_m` minus the elements it sends to zero (the map is *m-nice*), the
//! component of `0` and all remaining components are determined by
//!
//! - the zero tail of `psi_f`: how many roots of unity reach `0` after exactly
//!   `i` steps, which fixes the multiplicities of the elementary trees
//!   `T^i` hanging from the fixed point `0`;
//! - the cycles `S_1, ..., S_t` of `psi_f`: for each one, a divisibility test
//!   counts the elements returning after `d` laps, and Möbius inversion over
//!   the divisors of a multiplicative order turns those counts into numbers
//!   of cycles of each exact length.
//!
//! Every non-root vertex tree in the nonzero part is the elementary tree
//! `T_V` for `V = gcd_n(nu)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{mod_pow, FieldCtx, FieldElement, FieldError};
use crate::graph::{elementary_levels, elementary_tree, Component, GraphSummary, RootedTree};
use crate::number_theory::{
    big_pow, coprime_split, divisors, gcd_with_power, iterated_gcd, mobius, mult_order_big,
    GcdSeries, NumberTheoryError,
};
use crate::oracle::{cyclic_vertices, MapTable};
use crate::poly::{index_decompose, IndexedForm, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictError {
    #[error("map is not {m}-nice: psi_f collides on {witnesses:?}")]
    NotNice { m: u64, witnesses: Vec<u32> },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    NumberTheory(#[from] NumberTheoryError),
    #[error("tree multiplicity for depth {depth} is not a non-negative integer")]
    BadMultiplicity { depth: usize },
    #[error("cycle count for psi-cycle {cycle}, u = {u} is not an integer (B = {b})")]
    NonIntegerCount { cycle: usize, u: u64, b: i128 },
    #[error("representative choice {choice} out of range for psi-cycle {cycle}")]
    BadRepresentative { cycle: usize, choice: usize },
    #[error("a must be nonzero")]
    ZeroCoefficient,
}

/// How the zero-tail counts `r_i` are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroTailConvention {
    /// `r_i` counts roots of unity whose first visit to `0` is at step `i`.
    PerDepth,
    /// `r_i` counts roots of unity with `psi_f^(i)(xi) = 0`.
    Cumulative,
}

impl ZeroTailConvention {
    pub const ALL: [ZeroTailConvention; 2] =
        [ZeroTailConvention::PerDepth, ZeroTailConvention::Cumulative];
}

/// Orbit structure of `psi_f` on `mu_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuMDynamics {
    pub m: u64,
    /// `mu_m`, ascending by canonical index.
    pub mu_m: Vec<FieldElement>,
    /// `psi_f(xi)` for each entry of `mu_m`; zero or a root of unity.
    pub psi_images: Vec<FieldElement>,
    /// First `i >= 1` with `psi_f^(i)(xi) = 0`, if any.
    pub zero_depth: Vec<Option<usize>>,
    /// `r_i` for `i = 0..=m+1`, per-depth reading (`r_0 = 0`).
    pub r_per_depth: Vec<u64>,
    /// `r_i` for `i = 0..=m+1`, cumulative reading (`r_0 = 0`).
    pub r_cumulative: Vec<u64>,
    /// Cycles of `psi_f` inside `mu_m`, each listed in `psi` order from its
    /// least element; sorted by that least element.
    pub cycles: Vec<Vec<FieldElement>>,
    /// Whether `psi_f` is injective on `mu_m` minus the preimages of zero.
    pub nice: bool,
    /// Sets of distinct roots of unity sharing a nonzero `psi_f` image.
    pub collisions: Vec<Vec<FieldElement>>,
}

impl MuMDynamics {
    pub fn r(&self, convention: ZeroTailConvention, i: usize) -> u64 {
        let r = match convention {
            ZeroTailConvention::PerDepth => &self.r_per_depth,
            ZeroTailConvention::Cumulative => &self.r_cumulative,
        };
        r.get(i).copied().unwrap_or(match convention {
            ZeroTailConvention::PerDepth => 0,
            ZeroTailConvention::Cumulative => *r.last().expect("non-empty"),
        })
    }

    /// `psi_f(xi)` for a root of unity.
    pub fn psi(&self, xi: FieldElement) -> Option<FieldElement> {
        self.mu_m
            .binary_search(&xi)
            .ok()
            .map(|i| self.psi_images[i])
    }

    /// The zero tail `psi_f^(-inf)(0)`.
    pub fn zero_tail(&self) -> Vec<FieldElement> {
        self.mu_m
            .iter()
            .zip(&self.zero_depth)
            .filter(|(_, d)| d.is_some())
            .map(|(&x, _)| x)
            .collect()
    }

    /// Every root of unity involved in a collision, ascending.
    pub fn witnesses(&self) -> Vec<FieldElement> {
        let mut w: Vec<FieldElement> = self.collisions.iter().flatten().copied().collect();
        w.sort_unstable();
        w
    }
}

/// The m-th roots of unity `{alpha^(s j) : 0 <= j < m}`, ascending.
pub fn roots_of_unity(ctx: &FieldCtx, m: u64) -> Vec<FieldElement> {
    let zeta = ctx.pow_u64(ctx.alpha(), ctx.group_order() / m);
    let mut out = Vec::with_capacity(m as usize);
    let mut acc = ctx.one();
    for _ in 0..m {
        out.push(acc);
        acc = ctx.mul(acc, zeta);
    }
    out.sort_unstable();
    out
}

/// Orbit data of `psi_f` on `mu_m`.
pub fn psi_map(ctx: &FieldCtx, form: &IndexedForm) -> MuMDynamics {
    let m = form.m as usize;
    let mu_m = roots_of_unity(ctx, form.m);
    let psi_images: Vec<FieldElement> = mu_m.iter().map(|&x| form.psi(ctx, x)).collect();

    // psi on mu_m + {0} as a small table; index m stands for 0.
    let idx = |y: FieldElement| -> u32 {
        if y.is_zero() {
            m as u32
        } else {
            mu_m.binary_search(&y)
                .expect("psi maps mu_m into mu_m or 0") as u32
        }
    };
    let mut image: Vec<u32> = psi_images.iter().map(|&y| idx(y)).collect();
    image.push(m as u32);
    let table = MapTable::new(image);

    // First hitting time of 0, memoised along paths.
    let mut depth: Vec<Option<Option<usize>>> = vec![None; m + 1];
    depth[m] = Some(Some(0));
    let cyclic = cyclic_vertices(&table);
    for (i, &c) in cyclic.iter().enumerate().take(m) {
        if c {
            depth[i] = Some(None);
        }
    }
    let mut path = Vec::new();
    for start in 0..m {
        let mut x = start;
        while depth[x].is_none() {
            path.push(x);
            x = table.get(x as u32) as usize;
        }
        let mut d = depth[x].unwrap();
        while let Some(v) = path.pop() {
            d = d.map(|k| k + 1);
            depth[v] = Some(d);
        }
    }
    let zero_depth: Vec<Option<usize>> = depth[..m].iter().map(|d| d.unwrap()).collect();

    let mut r_per_depth = vec![0u64; m + 2];
    for d in zero_depth.iter().flatten() {
        if *d < r_per_depth.len() {
            r_per_depth[*d] += 1;
        }
    }
    let mut r_cumulative = vec![0u64; m + 2];
    for i in 1..m + 2 {
        r_cumulative[i] = r_cumulative[i - 1] + r_per_depth[i];
    }

    let mut seen = vec![false; m];
    let mut cycles = Vec::new();
    for start in 0..m {
        if !cyclic[start] || seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        loop {
            seen[x] = true;
            cyc.push(mu_m[x]);
            x = table.get(x as u32) as usize;
            if x == start {
                break;
            }
        }
        cycles.push(cyc);
    }

    let mut by_image: std::collections::BTreeMap<FieldElement, Vec<FieldElement>> =
        Default::default();
    for (&x, &y) in mu_m.iter().zip(&psi_images) {
        if !y.is_zero() {
            by_image.entry(y).or_default().push(x);
        }
    }
    let collisions: Vec<Vec<FieldElement>> =
        by_image.into_values().filter(|v| v.len() > 1).collect();
    let nice = collisions.is_empty();

    MuMDynamics {
        m: form.m,
        mu_m,
        psi_images,
        zero_depth,
        r_per_depth,
        r_cumulative,
        cycles,
        nice,
        collisions,
    }
}

pub fn is_m_nice(dynamics: &MuMDynamics) -> bool {
    dynamics.nice
}

fn require_nice(dynamics: &MuMDynamics) -> Result<(), PredictError> {
    if dynamics.nice {
        Ok(())
    } else {
        Err(PredictError::NotNice {
            m: dynamics.m,
            witnesses: dynamics.witnesses().iter().map(|x| x.index()).collect(),
        })
    }
}

/// `gcd_n(nu)`.
pub fn tree_series(form: &IndexedForm) -> GcdSeries {
    iterated_gcd(form.n, form.nu)
}

/// Multiplicity of `T^i_{gcd_n(nu)}` among the children of `0`, for
/// `i = 0..m`:
/// `(q-1) r_{i+1} / (m d_i) - (q-1) r_{i+2} / (m d_{i+1})`, `d_j = gcd(nu, n^j)`.
pub fn zero_tree_multiplicities(
    ctx: &FieldCtx,
    form: &IndexedForm,
    dynamics: &MuMDynamics,
    convention: ZeroTailConvention,
) -> Result<Vec<u64>, PredictError> {
    require_nice(dynamics)?;
    let order = ctx.group_order() as u128;
    let m = form.m as u128;
    let d = |j: usize| gcd_with_power(form.nu, form.n, j as u32) as u128;
    // |B_i| = (q-1) r_{i+1} / (m d_i): number of children of 0 with depth >= i
    let reaching = |i: usize| -> Result<u128, PredictError> {
        let num = order * dynamics.r(convention, i + 1) as u128;
        let den = m * d(i);
        if !num.is_multiple_of(den) {
            return Err(PredictError::BadMultiplicity { depth: i });
        }
        Ok(num / den)
    };
    let mut out = Vec::with_capacity(form.m as usize);
    for i in 0..form.m as usize {
        let hi = reaching(i)?;
        let lo = reaching(i + 1)?;
        if hi < lo {
            return Err(PredictError::BadMultiplicity { depth: i });
        }
        out.push((hi - lo) as u64);
    }
    Ok(out)
}

/// The component of `0`: `cyc(1, T)` with `T` assembled from elementary trees.
pub fn predict_zero_component(
    ctx: &FieldCtx,
    form: &IndexedForm,
    dynamics: &MuMDynamics,
    convention: ZeroTailConvention,
) -> Result<Component, PredictError> {
    let mult = zero_tree_multiplicities(ctx, form, dynamics, convention)?;
    let depth = mult.iter().rposition(|&c| c > 0).unwrap_or(0);
    let levels = elementary_levels(&tree_series(form), depth);
    let tree = RootedTree::from_multiset(mult.iter().zip(&levels).map(|(&c, t)| (c as usize, t)));
    Ok(Component::uniform(1, &tree))
}

/// Per-cycle constants: `xi = alpha^(s * rep_exp)` and
/// `alpha^ell = prod_{j<k} h(psi^(j)(xi))^(n^(k-j-1))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRep {
    pub cycle_len: u64,
    pub representative: FieldElement,
    pub ell: u64,
    pub rep_exp: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRepData {
    pub cycles: Vec<CycleRep>,
}

impl CycleRepData {
    /// Uses the least element of each cycle as its representative.
    pub fn new(
        ctx: &FieldCtx,
        form: &IndexedForm,
        dynamics: &MuMDynamics,
    ) -> Result<Self, PredictError> {
        Self::with_choices(ctx, form, dynamics, &vec![0; dynamics.cycles.len()])
    }

    /// `choices[i]` selects the position within cycle `i` (in `psi` order).
    pub fn with_choices(
        ctx: &FieldCtx,
        form: &IndexedForm,
        dynamics: &MuMDynamics,
        choices: &[usize],
    ) -> Result<Self, PredictError> {
        let order = ctx.group_order();
        let s = form.s(ctx);
        let mut cycles = Vec::with_capacity(dynamics.cycles.len());
        for (i, cyc) in dynamics.cycles.iter().enumerate() {
            let choice = choices.get(i).copied().unwrap_or(0);
            let xi = *cyc
                .get(choice)
                .ok_or(PredictError::BadRepresentative { cycle: i, choice })?;
            let k = cyc.len() as u64;
            let mut prod = ctx.one();
            let mut x = xi;
            for j in 0..k {
                let hx = form.h.evaluate(ctx, x);
                prod = ctx.mul(prod, ctx.pow_u64(hx, mod_pow(form.n, k - j - 1, order)));
                x = form.psi(ctx, x);
            }
            let ell = ctx.discrete_log(prod)?;
            let log_xi = ctx.discrete_log(xi)?;
            debug_assert_eq!(log_xi % s, 0, "roots of unity are s-th powers of alpha");
            cycles.push(CycleRep {
                cycle_len: k,
                representative: xi,
                ell,
                rep_exp: log_xi / s,
            });
        }
        Ok(Self { cycles })
    }
}

/// How `tau_i(d)` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TauArithmetic {
    /// Exact arbitrary-precision integers throughout.
    Exact,
    /// `n^(dk) - 1` and the geometric sum carried modulo `q - 1`; every
    /// quantity in the test depends only on those residues.
    Reduced,
    /// Exact unless `n^(dk)` would exceed [`EXACT_BIT_LIMIT`] bits.
    Auto,
}

/// Size limit for exact `n^(dk)` in [`TauArithmetic::Auto`].
pub const EXACT_BIT_LIMIT: u64 = 1 << 22;

/// Inputs of one `tau_i(d)` evaluation.
#[derive(Debug, Clone, Copy)]
pub struct TauInput {
    pub order: u64,
    pub m: u64,
    pub n: u64,
    pub k: u64,
    pub ell: u64,
    pub rep_exp: u64,
}

/// `tau_i(d) = gcd((q-1)/m, n^(dk) - 1)` when
/// `gcd(q-1, (n^(dk)-1) m)` divides `ell (n^(dk)-1)/(n^k-1) + rep_exp (n^(dk)-1)`,
/// and `0` otherwise. The quotient `(n^(dk)-1)/(n^k-1)` is the geometric sum
/// `1 + n^k + ... + n^((d-1)k)`, which stays defined for `n = 1`.
pub fn tau(input: TauInput, d: u64, arithmetic: TauArithmetic) -> u64 {
    let TauInput {
        order,
        m,
        n,
        k,
        ell,
        rep_exp,
    } = input;
    let s = order / m;
    let exact = match arithmetic {
        TauArithmetic::Exact => true,
        TauArithmetic::Reduced => false,
        TauArithmetic::Auto => {
            let bits = 64 - n.leading_zeros() as u64;
            d.saturating_mul(k).saturating_mul(bits) <= EXACT_BIT_LIMIT
        }
    };
    if exact {
        let nk = big_pow(n, k);
        let big_n = big_pow(n, d * k) - 1u32;
        let geom = if n == 1 {
            BigUint::from(d)
        } else {
            &big_n / (&nk - 1u32)
        };
        let modulus = BigUint::from(order).gcd(&(&big_n * m));
        let target = &geom * ell + &big_n * rep_exp;
        if (target % modulus).is_zero() {
            BigUint::from(s).gcd(&big_n).to_u64().expect("divides s")
        } else {
            0
        }
    } else {
        let o = order as u128;
        let nk = mod_pow(n, k, order) as u128;
        let big_n = (mod_pow(n, d * k, order) as u128 + o - 1) % o;
        // 1 + nk + nk^2 + ... (d terms) mod order
        let mut geom = 0u128;
        let mut term = 1 % o;
        for _ in 0..d {
            geom = (geom + term) % o;
            term = term * nk % o;
        }
        let modulus = o.gcd(&(big_n * m as u128 % o));
        let modulus = if modulus == 0 { o } else { modulus };
        let target = (geom * ell as u128 + big_n * rep_exp as u128) % o;
        if target.is_multiple_of(modulus) {
            (s as u128).gcd(&big_n) as u64
        } else {
            0
        }
    }
}

/// The bound `ord_{omega' (n^k - 1)}(n^k)`; every cycle over a `psi` cycle of
/// length `k` has length `k u` with `u` dividing it. For `n = 1` the bound is
/// `q - 1`.
pub fn lap_order_bound(order: u64, n: u64, k: u64) -> Result<u64, PredictError> {
    if n == 1 {
        return Ok(order);
    }
    let omega_prime = coprime_split(order, n).omega;
    let nk = big_pow(n, k);
    let modulus = BigUint::from(omega_prime) * (&nk - 1u32);
    if !nk.gcd(&modulus).is_one() {
        return Err(NumberTheoryError::NotCoprime {
            b: nk.to_string(),
            d: modulus.to_string(),
        }
        .into());
    }
    Ok(mult_order_big(&nk, &modulus, omega_prime + 1)?)
}

/// `tau` values and resulting cycle counts for one `psi` cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauTable {
    pub cycle_len: u64,
    pub representative: FieldElement,
    pub ell: u64,
    pub rep_exp: u64,
    pub order_bound: u64,
    /// `(d, tau(d))` for `d` dividing `order_bound`.
    pub tau: Vec<(u64, u64)>,
    /// `(u, number of cycles of length k u)`, zero counts omitted.
    pub cycle_counts: Vec<(u64, u64)>,
}

pub fn tau_tables(
    ctx: &FieldCtx,
    form: &IndexedForm,
    dynamics: &MuMDynamics,
    reps: &CycleRepData,
    arithmetic: TauArithmetic,
) -> Result<Vec<TauTable>, PredictError> {
    require_nice(dynamics)?;
    let order = ctx.group_order();
    let mut out = Vec::with_capacity(reps.cycles.len());
    for (i, rep) in reps.cycles.iter().enumerate() {
        let k = rep.cycle_len;
        let bound = lap_order_bound(order, form.n, k)?;
        let input = TauInput {
            order,
            m: form.m,
            n: form.n,
            k,
            ell: rep.ell,
            rep_exp: rep.rep_exp,
        };
        let divs = divisors(bound);
        let tau_vals: Vec<(u64, u64)> = divs
            .iter()
            .map(|&d| (d, tau(input, d, arithmetic)))
            .collect();
        let mut counts = Vec::new();
        for &u in &divs {
            let b: i128 = divisors(u)
                .into_iter()
                .map(|d| {
                    let t = tau_vals
                        .iter()
                        .find(|(dd, _)| *dd == d)
                        .expect("d | u | bound")
                        .1;
                    mobius(u / d) as i128 * t as i128
                })
                .sum();
            if b < 0 || b % u as i128 != 0 {
                return Err(PredictError::NonIntegerCount { cycle: i, u, b });
            }
            if b > 0 {
                counts.push((u, (b / u as i128) as u64));
            }
        }
        out.push(TauTable {
            cycle_len: k,
            representative: rep.representative,
            ell: rep.ell,
            rep_exp: rep.rep_exp,
            order_bound: bound,
            tau: tau_vals,
            cycle_counts: counts,
        });
    }
    Ok(out)
}

/// Every component not containing `0`.
pub fn predict_nonzero_components(
    ctx: &FieldCtx,
    form: &IndexedForm,
    dynamics: &MuMDynamics,
    reps: &CycleRepData,
) -> Result<GraphSummary, PredictError> {
    let tables = tau_tables(ctx, form, dynamics, reps, TauArithmetic::Auto)?;
    Ok(assemble_nonzero(form, &tables))
}

fn assemble_nonzero(form: &IndexedForm, tables: &[TauTable]) -> GraphSummary {
    let tree = elementary_tree(&tree_series(form));
    let mut g = GraphSummary::default();
    for t in tables {
        for &(u, count) in &t.cycle_counts {
            let c = Component::uniform((t.cycle_len * u) as usize, &tree);
            g.push_copies(count as usize, &c);
        }
    }
    g
}

/// The functional graph of `x -> a x^n`, from the monomial specialization:
/// `0` is an isolated fixed point and the nonzero part consists of
/// `sum_{d|u} mu(u/d) tau(d) / u` cycles of length `u` for each `u` dividing
/// `ord_{omega'(n-1)}(n)`, with `tau(d) = gcd(q-1, n^d-1)` when that gcd
/// divides `ell (n^d-1)/(n-1)` (`alpha^ell = a`), else `0`.
pub fn monomial_graph(
    ctx: &FieldCtx,
    a: FieldElement,
    n: u64,
) -> Result<GraphSummary, PredictError> {
    if a.is_zero() {
        return Err(PredictError::ZeroCoefficient);
    }
    assert!(n >= 1, "exponent must be positive");
    let order = ctx.group_order();
    let ell = ctx.discrete_log(a)?;
    let nu = coprime_split(order, n).nu;
    let tree = elementary_tree(&iterated_gcd(n, nu));
    let bound = lap_order_bound(order, n, 1)?;
    let tau = |d: u64| -> u64 {
        let nd = big_pow(n, d) - 1u32;
        let geom = if n == 1 {
            BigUint::from(d)
        } else {
            &nd / BigUint::from(n - 1)
        };
        let g = BigUint::from(order).gcd(&nd);
        if (geom * ell % &g).is_zero() {
            g.to_u64().expect("divides q - 1")
        } else {
            0
        }
    };
    let mut graph = GraphSummary::new(vec![Component::uniform(1, &RootedTree::leaf())]);
    for u in divisors(bound) {
        let b: i128 = divisors(u)
            .into_iter()
            .map(|d| mobius(u / d) as i128 * tau(d) as i128)
            .sum();
        if b < 0 || b % u as i128 != 0 {
            return Err(PredictError::NonIntegerCount { cycle: 0, u, b });
        }
        graph.push_copies(
            (b / u as i128) as usize,
            &Component::uniform(u as usize, &tree),
        );
    }
    Ok(graph)
}

/// Everything computed on the way to a prediction.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub form: IndexedForm,
    pub dynamics: MuMDynamics,
    pub series: GcdSeries,
    pub reps: CycleRepData,
    pub zero_multiplicities: Vec<u64>,
    pub tau_tables: Vec<TauTable>,
    pub zero_component: Component,
    pub nonzero: GraphSummary,
}

impl Analysis {
    pub fn graph(&self) -> GraphSummary {
        GraphSummary::new(vec![self.zero_component.clone()]).union(self.nonzero.clone())
    }
}

/// Decomposition, companion dynamics and both predictions for `f`.
pub fn analyze(ctx: &FieldCtx, f: &Polynomial) -> Result<Analysis, PredictError> {
    let form = index_decompose(ctx, f)?;
    analyze_form(ctx, &form)
}

pub fn analyze_form(ctx: &FieldCtx, form: &IndexedForm) -> Result<Analysis, PredictError> {
    let dynamics = psi_map(ctx, form);
    require_nice(&dynamics)?;
    let convention = ZeroTailConvention::PerDepth;
    let zero_multiplicities = zero_tree_multiplicities(ctx, form, &dynamics, convention)?;
    let zero_component = predict_zero_component(ctx, form, &dynamics, convention)?;
    let reps = CycleRepData::new(ctx, form, &dynamics)?;
    let tau_tables = tau_tables(ctx, form, &dynamics, &reps, TauArithmetic::Auto)?;
    let nonzero = assemble_nonzero(form, &tau_tables);
    Ok(Analysis {
        series: tree_series(form),
        form: form.clone(),
        dynamics,
        reps,
        zero_multiplicities,
        tau_tables,
        zero_component,
        nonzero,
    })
}

/// The predicted functional graph of `f`, `G^(0) + G^(1)`.
pub fn predict_full(ctx: &FieldCtx, f: &Polynomial) -> Result<GraphSummary, PredictError> {
    analyze(ctx, f).map(|a| a.graph())
}
