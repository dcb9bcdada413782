//! Verification runs that turn verifier results into [`Record`]s: one
//! function per input kind, and the whole-catalog run.

use std::fmt::Display;
use std::str::FromStr;

use serde_json::json;

use crate::additive::{all_complete_skew_factorizations, all_skew_polys, verify_ore_invariance, SkewPoly};
use crate::chains::{
    chain_invariants, exchange_walk_with, first_non_normal_subgroup, maximal_chains, scan_trivial_cores, verify_aut_invariant,
    verify_divisibility, verify_indecomposable_equivalences, verify_monodromy_invariant,
    verify_rho_bijection, verify_ritt_first_with, witness_nondedekind_failure, ChainContext,
    AutQuotient, Hypothesis,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::fixtures;
use crate::laurent::{monodromy_at_infinity, verify_branch, verify_composition_compatibility};
use crate::oracle::check_engine_against_oracle;
use crate::polyfield::{
    all_complete_decompositions, aut_group, check_tame, dickson, factorable_core, gamma_order, is_factorable,
    verify_poly_theorems, Poly, FACTORABLE_DEGREE_CAP,
};
use crate::ratfunc::{counterexample_harness, cubic_reciprocal_harness, RationalFunction};
use crate::report::{Record, RunReport};

/// Largest degree at which decompositions are cross-checked by the oracle.
pub const ORACLE_DEGREE_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupCheck {
    RittFirst,
    Monodromy,
    Aut,
    Divisibility,
    Indecomposable,
    Rho,
    Cores,
}

impl GroupCheck {
    pub const ALL: [GroupCheck; 7] = [
        GroupCheck::RittFirst,
        GroupCheck::Monodromy,
        GroupCheck::Aut,
        GroupCheck::Divisibility,
        GroupCheck::Indecomposable,
        GroupCheck::Rho,
        GroupCheck::Cores,
    ];

    pub const DEFAULT: [GroupCheck; 6] = [
        GroupCheck::RittFirst,
        GroupCheck::Monodromy,
        GroupCheck::Aut,
        GroupCheck::Divisibility,
        GroupCheck::Indecomposable,
        GroupCheck::Rho,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupCheck::RittFirst => "ritt1",
            GroupCheck::Monodromy => "mon",
            GroupCheck::Aut => "aut",
            GroupCheck::Divisibility => "div",
            GroupCheck::Indecomposable => "indec",
            GroupCheck::Rho => "rho",
            GroupCheck::Cores => "cores",
        }
    }
}

impl FromStr for GroupCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupCheck::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown theorem {s:?}")))
    }
}

fn joined<T: Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn group_record(ctx: &ChainContext, check: GroupCheck, hypothesis: Hypothesis) -> Record {
    let name = ctx.name();
    let theorem = check.name();
    match check {
        GroupCheck::RittFirst => Record::from_result(name, theorem, verify_ritt_first_with(ctx, hypothesis), |r| {
            format!(
                "{} chains of length {}, indices {{{}}}, {} walks",
                r.chains.len(),
                r.length,
                joined(&r.index_multiset),
                r.walks
            )
        }),
        GroupCheck::Monodromy => Record::from_result(name, theorem, verify_monodromy_invariant(ctx), |r| {
            format!("{} chains, quotients {{{}}}", r.chains.len(), r.multiset.join(", "))
        }),
        GroupCheck::Aut => Record::from_result(name, theorem, verify_aut_invariant(ctx), |r| {
            let triples: Vec<String> =
                r.multiset.iter().map(|(i, o, l)| format!("({i},{o},{l})")).collect();
            format!("{} chains, (index,|Aut|,type) {{{}}}", r.chains.len(), triples.join(" "))
        }),
        GroupCheck::Divisibility => {
            let result: Result<Vec<_>> =
                maximal_chains(ctx).iter().map(|c| verify_divisibility(ctx, c)).collect();
            Record::from_result(name, theorem, result, |rs| {
                let parts: Vec<String> =
                    rs.iter().map(|r| format!("{} | {}", r.aut_total, r.product)).collect();
                format!("{} chains: {}", rs.len(), parts.join(", "))
            })
        }
        GroupCheck::Indecomposable => {
            Record::from_result(name, theorem, verify_indecomposable_equivalences(ctx), |r| {
                format!("degree {}, nontrivial Aut: {}", r.degree, r.nontrivial_aut)
            })
        }
        GroupCheck::Rho => Record::from_result(name, theorem, verify_rho_bijection(ctx), |r| {
            format!("{} members, {} pairs", r.members, r.pairs)
        }),
        GroupCheck::Cores => Record::from_result(name, theorem, scan_trivial_cores(ctx), |r| {
            format!("{} two-step pairs, {} with N = C = 1", r.length_two_pairs, r.trivial_core_cases.len())
        }),
    }
}

pub fn group_records(ctx: &ChainContext, checks: &[GroupCheck], hypothesis: Hypothesis) -> Vec<Record> {
    checks.iter().map(|&c| group_record(ctx, c, hypothesis)).collect()
}

/// The divisibility failure in the regular action of a quasi-Hamiltonian,
/// non-Dedekind group, through its first non-normal subgroup.
pub fn witness_record(ctx: &ChainContext) -> Record {
    let result = first_non_normal_subgroup(ctx.g()).and_then(|u| {
        let u = u.ok_or_else(|| Error::HypothesisFailed("every subgroup is normal".into()))?;
        witness_nondedekind_failure(ctx.g(), &u)
    });
    Record::from_result(ctx.name(), "witness", result, |r| {
        format!("|G| = {} does not divide |U|·|N_G(U)/U| = {}", r.group_order, r.product)
    })
}

pub fn poly_records(name: &str, f: &Poly) -> Vec<Record> {
    let tame = check_tame(f).is_ok();
    let mut out = Vec::new();
    if tame && f.degree() <= ORACLE_DEGREE_CAP {
        out.push(Record::from_result(name, "decompose", check_engine_against_oracle(f), |r| {
            format!("{} decompositions, oracle agrees: {}", r.decompositions.len(), r.decompositions.join("; "))
        }));
    }
    out.push(Record::from_result(name, "poly-theorems", verify_poly_theorems(f), |r| {
        let pairs: Vec<String> = r.aut_multiset.iter().map(|(d, a)| format!("({d},{a})")).collect();
        format!("length {}, (degree,|Aut|) {{{}}}, |Aut(f)| = {}", r.length, pairs.join(" "), r.aut_order)
    }));
    out.push(Record::from_result(name, "invariants", poly_invariants(f), |r| {
        format!(
            "|Aut| = {}, |Γ| = {}, core degree {}, factorable: {}",
            r.aut_order,
            r.gamma_order,
            r.core_degree,
            r.factorable.map_or("n/a".into(), |b| b.to_string())
        )
    }));
    out
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PolyInvariants {
    pub aut: Vec<String>,
    pub aut_order: usize,
    pub gamma_order: String,
    pub core_outer: String,
    pub core: String,
    pub core_degree: usize,
    pub factorable: Option<bool>,
}

pub fn poly_invariants(f: &Poly) -> Result<PolyInvariants> {
    let aut = aut_group(f)?;
    let (g, h) = factorable_core(f)?;
    let factorable = if f.degree() <= FACTORABLE_DEGREE_CAP { Some(is_factorable(f)?) } else { None };
    Ok(PolyInvariants {
        aut_order: aut.len(),
        aut: aut.iter().map(ToString::to_string).collect(),
        gamma_order: gamma_order(f)?.to_string(),
        core_outer: g.to_string(),
        core_degree: h.degree(),
        core: h.to_string(),
        factorable,
    })
}

/// `D_6 = D_2 ∘ D_3 = D_3 ∘ D_2` for the Dickson polynomials with `a = 1`.
pub fn dickson_record() -> Record {
    let q = Field::Rational;
    let one = q.one();
    let result = (|| -> Result<serde_json::Value> {
        let (d6, d2, d3) = (dickson(&q, 6, &one), dickson(&q, 2, &one), dickson(&q, 3, &one));
        let left = d2.compose(&d3)?;
        let right = d3.compose(&d2)?;
        if left != d6 || right != d6 {
            return Err(Error::TheoremViolated(format!("D2∘D3 = {left}, D3∘D2 = {right}, D6 = {d6}")));
        }
        Ok(json!({ "d6": d6.to_string(), "d2": d2.to_string(), "d3": d3.to_string() }))
    })();
    Record::from_result("dickson_q", "dickson-identity", result, |_| "D6 = D2∘D3 = D3∘D2".into())
}

pub fn skew_record(name: &str, f: &SkewPoly) -> Record {
    Record::from_result(name, "ore", verify_ore_invariance(f), |r| {
        let general = match &r.general {
            Some(g) => format!(", general right degrees {{{}}}", joined(&g.general_right_degrees)),
            None => String::new(),
        };
        format!(
            "{} factorizations, length {}, τ-degrees {{{}}}{general}",
            r.factorizations.len(),
            r.length,
            joined(&r.degree_multiset)
        )
    })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SweepReport {
    pub field: String,
    pub max_degree: usize,
    pub polynomials: usize,
    pub with_general_check: usize,
}

/// Ore invariance for every skew polynomial of τ-degree `1..=max_degree`.
pub fn ore_sweep(field: &Field, max_degree: usize) -> Result<SweepReport> {
    let all = all_skew_polys(field, max_degree)?;
    let mut with_general_check = 0;
    for f in &all {
        if verify_ore_invariance(f)?.general.is_some() {
            with_general_check += 1;
        }
    }
    Ok(SweepReport { field: field.to_string(), max_degree, polynomials: all.len(), with_general_check })
}

pub fn sweep_record(field: &Field, max_degree: usize) -> Record {
    Record::from_result(&format!("sweep_{field}"), "ore-sweep", ore_sweep(field, max_degree), |r| {
        format!("{} skew polynomials up to τ-degree {}", r.polynomials, r.max_degree)
    })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct BranchReport {
    pub theta: String,
    pub precision: usize,
    pub branches: Vec<BranchRow>,
    pub cycle: String,
    pub stable_to: usize,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct BranchRow {
    pub lead: String,
    pub tail: Vec<String>,
    pub vanishes: bool,
}

/// Branches of `f` at precision `m`, their re-expansion check, the inertia
/// cycle, and agreement with the branches at precision `2m`.
pub fn branch_report(f: &Poly, m: usize) -> Result<BranchReport> {
    let cycle = monodromy_at_infinity(f, m)?;
    let longer = monodromy_at_infinity(f, 2 * m)?;
    let mut rows = Vec::new();
    for (b, l) in cycle.branches.iter().zip(&longer.branches) {
        let check = verify_branch(f, b);
        if !check.vanishes {
            return Err(Error::TheoremViolated(format!("branch {} fails re-expansion", b.lead())));
        }
        if l.tail()[..b.tail().len()] != *b.tail() {
            return Err(Error::TheoremViolated(format!("branch {} changes with precision", b.lead())));
        }
        rows.push(BranchRow {
            lead: b.lead().to_string(),
            tail: b.tail().iter().map(ToString::to_string).collect(),
            vanishes: check.vanishes,
        });
    }
    Ok(BranchReport {
        theta: cycle.theta.to_string(),
        precision: m,
        branches: rows,
        cycle: cycle.cycle_notation(),
        stable_to: 2 * m,
    })
}

pub fn branch_record(name: &str, f: &Poly, m: usize) -> Record {
    Record::from_result(name, "branches", branch_report(f, m), |r| {
        format!("θ = {}, cycle {}, stable {} -> {}", r.theta, r.cycle, r.precision, r.stable_to)
    })
}

fn catalog_branch_records() -> Result<Vec<Record>> {
    let f7 = Field::fq(7)?;
    let f5 = Field::fq(5)?;
    let mut out = vec![
        branch_record("x3_f7", &Poly::from_i64s(&f7, &[0, 0, 0, 1]), 10),
        branch_record("x3_plus_x_f7", &Poly::from_i64s(&f7, &[0, 1, 0, 1]), 10),
        branch_record("x2_plus_1_f5", &Poly::from_i64s(&f5, &[1, 0, 1]), 4),
    ];
    let (g, h) = (Poly::from_i64s(&f7, &[0, 0, 0, 1]), Poly::from_i64s(&f7, &[0, 0, 1]));
    out.push(Record::from_result("x6_f7", "branch-composition", verify_composition_compatibility(&g, &h, 12), |r| {
        format!("X^6 = X^3∘X^2: projects onto {}", r.outer_cycle)
    }));
    Ok(out)
}

pub fn counterexample_record(p: u64) -> Record {
    let result = cubic_reciprocal_harness(p).and_then(|r| {
        if (r.aut_f, r.aut_f2, r.aut_f1) != (6, 1, 2) || r.divides {
            return Err(Error::TheoremViolated(format!(
                "expected (6, 1, 2) without divisibility, found ({}, {}, {})",
                r.aut_f, r.aut_f2, r.aut_f1
            )));
        }
        Ok(r)
    });
    Record::from_result(&format!("cubic_reciprocal_f{p}"), "counterexample", result, |r| {
        format!("|Aut(f)| = {}, |Aut(f2)| = {}, |Aut(f1)| = {}, {} does not divide {}", r.aut_f, r.aut_f2, r.aut_f1, r.aut_f, r.product)
    })
}

/// Automorphism orders along a user-supplied pair; nothing is asserted.
pub fn pair_record(name: &str, f2: &RationalFunction, f1: &RationalFunction) -> Record {
    Record::from_result(name, "aut-orders", counterexample_harness(f2, f1), |r| {
        let rel = if r.divides { "divides" } else { "does not divide" };
        format!("|Aut(f)| = {} {rel} {}·{} = {}", r.aut_f, r.aut_f2, r.aut_f1, r.product)
    })
}

/// Every verifier over the whole fixture catalog, in catalog order.
pub fn run_all() -> RunReport {
    let mut report = RunReport::new("fixtures run-all");
    match fixtures::contexts() {
        Ok(ctxs) => {
            for ctx in &ctxs {
                report.extend(group_records(ctx, &GroupCheck::ALL, Hypothesis::QuasiHamiltonian));
                let a_ok = ctx.a().is_some_and(|a| a.is_quasi_hamiltonian() && !a.is_dedekind());
                if a_ok && ctx.g().is_regular() {
                    report.push(witness_record(ctx));
                }
            }
        }
        Err(e) => report.push(Record::fail("catalog", "load-contexts", e.to_string())),
    }
    match fixtures::polys() {
        Ok(polys) => {
            for (name, f) in &polys {
                report.extend(poly_records(name, f));
            }
        }
        Err(e) => report.push(Record::fail("catalog", "load-polys", e.to_string())),
    }
    report.push(dickson_record());
    match fixtures::skews() {
        Ok(skews) => {
            for (name, f) in &skews {
                report.push(skew_record(name, f));
            }
        }
        Err(e) => report.push(Record::fail("catalog", "load-skews", e.to_string())),
    }
    for q in [2, 4] {
        match Field::fq(q) {
            Ok(field) => report.push(sweep_record(&field, 3)),
            Err(e) => report.push(Record::fail("catalog", "ore-sweep", e.to_string())),
        }
    }
    match catalog_branch_records() {
        Ok(rs) => report.extend(rs),
        Err(e) => report.push(Record::fail("catalog", "branches", e.to_string())),
    }
    for p in [7, 13] {
        report.push(counterexample_record(p));
    }
    match fixtures::pairs() {
        Ok(pairs) => {
            for (name, (f2, f1)) in &pairs {
                report.push(pair_record(name, f2, f1));
            }
        }
        Err(e) => report.push(Record::fail("catalog", "load-pairs", e.to_string())),
    }
    report
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ChainListing {
    pub chain: String,
    pub orders: Vec<usize>,
    pub indices: Vec<usize>,
    pub monodromy: Vec<String>,
    pub aut: Vec<AutQuotient>,
}

/// One record per maximal chain, numbered from 0 in lattice order.
pub fn chain_records(ctx: &ChainContext) -> Vec<Record> {
    let lat = ctx.lattice();
    maximal_chains(ctx)
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let inv = chain_invariants(ctx, c);
            let listing = ChainListing {
                chain: c.to_string(),
                orders: c.members().iter().map(|&m| lat.get(m).order()).collect(),
                monodromy: inv.monodromy_labels(),
                indices: inv.indices,
                aut: inv.aut,
            };
            let note = format!(
                "{}  indices [{}]  orders [{}]",
                listing.chain,
                joined(&listing.indices),
                joined(&listing.orders)
            );
            let details = serde_json::to_value(&listing).unwrap_or_default();
            Record::pass(ctx.name(), &format!("chain {i}"), details, note)
        })
        .collect()
}

/// The exchange walk between maximal chains number `from` and `to`.
pub fn walk_record(ctx: &ChainContext, from: usize, to: usize, hypothesis: Hypothesis) -> Record {
    let chains = maximal_chains(ctx);
    let result = match (chains.get(from), chains.get(to)) {
        (Some(a), Some(b)) => exchange_walk_with(ctx, a, b, hypothesis),
        _ => Err(Error::InvalidInput(format!(
            "chain numbers must be below {}, got {from} and {to}",
            chains.len()
        ))),
    };
    let result = result.map(|w| w.chains.iter().map(ToString::to_string).collect::<Vec<_>>());
    Record::from_result(ctx.name(), &format!("walk {from} -> {to}"), result, |steps| {
        format!("{} steps: {}", steps.len() - 1, steps.join(" | "))
    })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct DecompositionListing {
    pub factors: Vec<String>,
    pub degrees: Vec<usize>,
    pub aut_orders: Vec<usize>,
}

/// One record per complete decomposition in canonical form.
pub fn decomposition_records(name: &str, f: &Poly) -> Vec<Record> {
    let listed = all_complete_decompositions(f).and_then(|ds| {
        ds.iter()
            .map(|d| {
                let d = d.canonical();
                let aut_orders =
                    d.factors().iter().map(|g| aut_group(g).map(|a| a.len())).collect::<Result<Vec<_>>>()?;
                Ok(DecompositionListing {
                    factors: d.factors().iter().map(ToString::to_string).collect(),
                    degrees: d.degrees(),
                    aut_orders,
                })
            })
            .collect::<Result<Vec<_>>>()
    });
    match listed {
        Ok(ls) => ls
            .into_iter()
            .enumerate()
            .map(|(i, l)| {
                let note = format!(
                    "{}  degrees [{}]  |Aut| [{}]",
                    l.factors.iter().map(|g| format!("[{g}]")).collect::<Vec<_>>().join(" ∘ "),
                    joined(&l.degrees),
                    joined(&l.aut_orders)
                );
                let details = serde_json::to_value(&l).unwrap_or_default();
                Record::pass(name, &format!("decomposition {i}"), details, note)
            })
            .collect(),
        Err(e) => vec![Record::from_result::<()>(name, "decompose", Err(e), |_| String::new())],
    }
}

/// The factorization listing of a skew polynomial, followed by its Ore check.
pub fn skew_records(name: &str, f: &SkewPoly) -> Vec<Record> {
    let mut out = Vec::new();
    let x = f.to_additive();
    out.push(Record::pass(
        name,
        "forms",
        json!({ "skew": f.to_string(), "additive": x.to_string() }),
        format!("{f}  =  {x}"),
    ));
    match all_complete_skew_factorizations(f) {
        Ok(fs) => {
            for (i, fac) in fs.iter().enumerate() {
                let parts: Vec<String> = fac.iter().map(|g| format!("({g})")).collect();
                let degrees: Vec<usize> = fac.iter().map(SkewPoly::tau_degree).collect();
                out.push(Record::pass(
                    name,
                    &format!("factorization {i}"),
                    json!({ "factors": fac.iter().map(ToString::to_string).collect::<Vec<_>>(), "degrees": degrees }),
                    parts.join(" · "),
                ));
            }
        }
        Err(e) => out.push(Record::fail(name, "factor", e.to_string())),
    }
    out.push(skew_record(name, f));
    out
}

/// One record per branch with its re-expansion check, then the inertia cycle.
pub fn laurent_records(name: &str, f: &Poly, m: usize) -> Vec<Record> {
    let cycle = match monodromy_at_infinity(f, m) {
        Ok(c) => c,
        Err(e) => return vec![Record::from_result::<()>(name, "inertia", Err(e), |_| String::new())],
    };
    let mut out = Vec::new();
    for b in &cycle.branches {
        let check = verify_branch(f, b);
        let details = json!({
            "lead": b.lead().to_string(),
            "coefficients": b.tail().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "check": check,
        });
        let theorem = format!("branch {}", b.lead());
        if check.vanishes {
            out.push(Record::pass(name, &theorem, details, b.to_string()));
        } else {
            out.push(Record::fail(name, &theorem, format!("f(x_c) - s^n does not vanish: {b}")));
        }
    }
    out.push(Record::pass(
        name,
        "inertia",
        json!({ "theta": cycle.theta.to_string(), "cycle": cycle.cycle_notation(), "leads": cycle.leads().iter().map(ToString::to_string).collect::<Vec<_>>() }),
        format!("θ = {}, cycle {}", cycle.theta, cycle.cycle_notation()),
    ));
    out
}
