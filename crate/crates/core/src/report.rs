//! Prediction-versus-oracle verification reports.

use serde::{Deserialize, Serialize};

use crate::field::FieldCtx;
use crate::graph::{graphs_isomorphic, GraphSummary};
use crate::oracle::oracle_graph;
use crate::poly::{index_decompose, Polynomial};
use crate::structure::{
    monomial_graph, predict_zero_component, psi_map, tau_tables, zero_tree_multiplicities,
    CycleRepData, PredictError, TauArithmetic, ZeroTailConvention,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub p: u64,
    pub degree: u32,
    /// Monic modulus, low to high (`[c, 1]` style for prime fields).
    pub modulus: Vec<u64>,
    pub alpha: u32,
}

impl FieldInfo {
    pub fn of(ctx: &FieldCtx) -> Self {
        Self {
            p: ctx.characteristic(),
            degree: ctx.degree(),
            modulus: ctx.modulus_poly().to_vec(),
            alpha: ctx.alpha().index(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormInfo {
    pub n: u64,
    pub m: u64,
    pub h: String,
    pub nu: u64,
    pub omega: u64,
    pub omega_prime: u64,
    pub tree_series: Vec<u64>,
}

/// Which route produced the prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Companion-map theorems on an m-nice map.
    Theorem,
    /// The `a x^n` specialization.
    Monomial,
    /// Not m-nice; only the oracle graph is available.
    OracleOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionCheck {
    pub convention: ZeroTailConvention,
    /// `None` when the multiplicities are not non-negative integers.
    pub zero_multiplicities: Option<Vec<u64>>,
    pub matches_oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub elements: Vec<u32>,
    pub representative: u32,
    pub ell: u64,
    pub rep_exp: u64,
    pub order_bound: u64,
    pub tau: Vec<(u64, u64)>,
    pub cycle_counts: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub field: FieldInfo,
    pub polynomial: String,
    pub form: Option<FormInfo>,
    pub m_nice: bool,
    pub witnesses: Vec<u32>,
    pub method: Method,
    pub convention: Option<ZeroTailConvention>,
    pub convention_checks: Vec<ConventionCheck>,
    pub cycles: Vec<CycleReport>,
    pub predicted: Option<GraphSummary>,
    pub oracle: GraphSummary,
    pub isomorphic: Option<bool>,
}

impl VerificationReport {
    /// True when a prediction exists and agrees with the oracle.
    pub fn passed(&self) -> bool {
        self.isomorphic == Some(true)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// `Some((a, n))` when `f = a x^n`.
pub fn as_monomial(f: &Polynomial) -> Option<(crate::FieldElement, u64)> {
    let mut terms = f.terms();
    let (e, a) = terms.next()?;
    terms.next().is_none().then_some((a, e as u64))
}

/// Predicts `f`, tabulates it, and compares.
pub fn verify(ctx: &FieldCtx, f: &Polynomial) -> Result<VerificationReport, PredictError> {
    let f = f.reduce_functional(ctx);
    let form = index_decompose(ctx, &f)?;
    let oracle = oracle_graph(ctx, &f).canonical();
    let dynamics = psi_map(ctx, &form);
    let form_info = FormInfo {
        n: form.n,
        m: form.m,
        h: form.h.display(ctx).to_string(),
        nu: form.nu,
        omega: form.omega,
        omega_prime: form.omega_prime,
        tree_series: crate::structure::tree_series(&form).entries().to_vec(),
    };
    let mut report = VerificationReport {
        field: FieldInfo::of(ctx),
        polynomial: f.display(ctx).to_string(),
        form: Some(form_info),
        m_nice: dynamics.nice,
        witnesses: dynamics.witnesses().iter().map(|x| x.index()).collect(),
        method: Method::OracleOnly,
        convention: None,
        convention_checks: Vec::new(),
        cycles: Vec::new(),
        predicted: None,
        oracle,
        isomorphic: None,
    };

    if let Some((a, n)) = as_monomial(&f) {
        let predicted = monomial_graph(ctx, a, n)?.canonical();
        report.isomorphic = Some(graphs_isomorphic(&predicted, &report.oracle));
        report.predicted = Some(predicted);
        report.method = Method::Monomial;
        return Ok(report);
    }
    if !dynamics.nice {
        return Ok(report);
    }

    let reps = CycleRepData::new(ctx, &form, &dynamics)?;
    let tables = tau_tables(ctx, &form, &dynamics, &reps, TauArithmetic::Auto)?;
    let nonzero = crate::structure::predict_nonzero_components(ctx, &form, &dynamics, &reps)?;
    for convention in ZeroTailConvention::ALL {
        let mult = zero_tree_multiplicities(ctx, &form, &dynamics, convention).ok();
        let matches = match predict_zero_component(ctx, &form, &dynamics, convention) {
            Ok(zero) => {
                let g = GraphSummary::new(vec![zero]).union(nonzero.clone());
                graphs_isomorphic(&g, &report.oracle)
            }
            Err(_) => false,
        };
        report.convention_checks.push(ConventionCheck {
            convention,
            zero_multiplicities: mult,
            matches_oracle: matches,
        });
    }
    let convention = ZeroTailConvention::PerDepth;
    let zero = predict_zero_component(ctx, &form, &dynamics, convention)?;
    let predicted = GraphSummary::new(vec![zero]).union(nonzero).canonical();
    report.cycles = dynamics
        .cycles
        .iter()
        .zip(&tables)
        .map(|(c, t)| CycleReport {
            elements: c.iter().map(|x| x.index()).collect(),
            representative: t.representative.index(),
            ell: t.ell,
            rep_exp: t.rep_exp,
            order_bound: t.order_bound,
            tau: t.tau.clone(),
            cycle_counts: t.cycle_counts.clone(),
        })
        .collect();
    report.isomorphic = Some(graphs_isomorphic(&predicted, &report.oracle));
    report.predicted = Some(predicted);
    report.method = Method::Theorem;
    report.convention = Some(convention);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f181_report_round_trips() {
        let ctx = FieldCtx::prime(181).unwrap();
        let f = Polynomial::parse(&ctx, "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)").unwrap();
        let r = verify(&ctx, &f).unwrap();
        assert!(r.passed());
        assert_eq!(r.method, Method::Theorem);
        let by_conv: Vec<bool> = r
            .convention_checks
            .iter()
            .map(|c| c.matches_oracle)
            .collect();
        assert_eq!(by_conv, vec![true, false]);
        let json = r.to_json();
        let back = VerificationReport::from_json(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn non_nice_is_oracle_only() {
        let ctx = FieldCtx::prime(97).unwrap();
        let f = Polynomial::parse(&ctx, "x^6*(x^24-1)").unwrap();
        let r = verify(&ctx, &f).unwrap();
        assert_eq!(r.method, Method::OracleOnly);
        assert_eq!(r.witnesses, vec![22, 75]);
        assert_eq!(r.isomorphic, None);
        assert_eq!(r.oracle.vertex_count(), 97);
    }

    #[test]
    fn monomial_route() {
        let ctx = FieldCtx::prime(13).unwrap();
        let f = Polynomial::parse(&ctx, "x^2").unwrap();
        let r = verify(&ctx, &f).unwrap();
        assert_eq!(r.method, Method::Monomial);
        assert!(r.passed());
    }
}
