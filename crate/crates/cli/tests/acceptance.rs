//! Acceptance criteria, one line each. Runs with `harness = false` so the
//! lines are always printed.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use ritt_core::additive::{is_irreducible, verify_ore_invariance, SkewPoly};
use ritt_core::chains::{
    chain_invariants, exchange_walk, maximal_chains, validate_walk, verify_aut_invariant,
    verify_divisibility, verify_monodromy_invariant, verify_rho_bijection, verify_ritt_first,
    witness_nondedekind_failure, first_non_normal_subgroup, ChainContext,
};
use ritt_core::field::Field;
use ritt_core::fixtures;
use ritt_core::laurent::{monodromy_at_infinity, verify_branch};
use ritt_core::oracle::{check_engine_against_oracle, exhaustive_right_factors};
use ritt_core::polyfield::{check_tame, dickson, verify_poly_theorems, Poly};
use ritt_core::suite::ore_sweep;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ritt-lab"))
}

fn run_bin(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let v = f();
    let took = start.elapsed();
    assert!(took < limit, "{what} took {took:?}, limit {limit:?}");
    v
}

fn contexts_with_a() -> Vec<ChainContext> {
    fixtures::contexts().unwrap().into_iter().filter(|c| c.a().is_some()).collect()
}

fn dedekind_contexts() -> Vec<ChainContext> {
    contexts_with_a().into_iter().filter(|c| c.a().unwrap().is_dedekind()).collect()
}

fn counterexample() {
    for p in ["7", "13"] {
        let (code, out) = timed(Duration::from_secs(5), "counterexample", || {
            run_bin(&["counterexample", "--prime", p, "--json"])
        });
        assert_eq!(code, 0, "exit code for p = {p}");
        let v: Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
        assert_eq!(v["status"], "pass");
        let d = &v["details"];
        assert_eq!((d["aut_f"].as_u64(), d["aut_f2"].as_u64(), d["aut_f1"].as_u64()), (Some(6), Some(1), Some(2)));
        assert_eq!(d["product"].as_u64(), Some(2));
        assert_eq!(d["divides"], false);
        assert_ne!(d["product"].as_u64().unwrap() % 6, 0);
    }
}

fn ritt_first() {
    timed(Duration::from_secs(60), "Ritt First", || {
        let mut checked = 0;
        for ctx in contexts_with_a() {
            let a = ctx.a().unwrap();
            if !(a.is_transitive() && a.is_quasi_hamiltonian()) {
                continue;
            }
            let report = verify_ritt_first(&ctx).unwrap();
            let chains = maximal_chains(&ctx);
            let mut reference = chain_invariants(&ctx, &chains[0]).indices;
            reference.sort_unstable();
            for c in &chains {
                assert_eq!(c.len(), report.length, "{}", ctx.name());
                let mut idx = chain_invariants(&ctx, c).indices;
                idx.sort_unstable();
                assert_eq!(idx, reference, "{}", ctx.name());
                for d in &chains {
                    let walk = exchange_walk(&ctx, c, d).unwrap();
                    assert_eq!(walk.chains.first(), Some(c));
                    assert_eq!(walk.chains.last(), Some(d));
                    validate_walk(&ctx, &walk).unwrap();
                }
            }
            checked += 1;
        }
        assert!(checked >= 9, "only {checked} contexts checked");
    });
}

fn monodromy() {
    for ctx in dedekind_contexts() {
        verify_monodromy_invariant(&ctx).unwrap();
    }
    let d6 = fixtures::context("d6").unwrap();
    let report = verify_monodromy_invariant(&d6).unwrap();
    assert_eq!(report.multiset, vec!["C2 on 2 points".to_string(), "S3 on 3 points".to_string()]);
}

fn aut_and_divisibility() {
    for ctx in dedekind_contexts() {
        verify_aut_invariant(&ctx).unwrap();
        for c in maximal_chains(&ctx) {
            let r = verify_divisibility(&ctx, &c).unwrap();
            assert_eq!(r.product % r.aut_total, 0, "{} {}", ctx.name(), r.chain);
        }
    }
    let m16 = fixtures::context("m16_regular").unwrap();
    let u = first_non_normal_subgroup(m16.g()).unwrap().expect("M16 has a non-normal subgroup");
    let w = witness_nondedekind_failure(m16.g(), &u).unwrap();
    assert_eq!(w.group_order, 16);
    assert_eq!(w.product, w.subgroup_order * w.normalizer_quotient);
    assert_ne!(w.product % w.group_order, 0);
    assert!(!w.divides);
}

fn rho() {
    let mut members = 0;
    for ctx in contexts_with_a() {
        let r = verify_rho_bijection(&ctx).unwrap();
        let lat = ctx.lattice();
        assert_eq!(r.members, lat.len());
        assert_eq!(r.permutable_in_a, lat.len());
        let a = ctx.a().unwrap();
        for u in lat.members() {
            let j = ctx.rho_restrict(u).unwrap();
            assert_eq!(&ctx.rho_inverse(&j).unwrap(), u);
            assert_eq!(ctx.g().order() / u.order(), a.order() / j.order());
        }
        members += lat.len();
    }
    assert!(members > 0);
}

fn poly_oracle() {
    let mut compared = 0;
    for (name, f) in fixtures::polys().unwrap() {
        if f.degree() <= 12 && check_tame(&f).is_ok() {
            check_engine_against_oracle(&f).unwrap_or_else(|e| panic!("{name}: {e}"));
            compared += 1;
        }
    }
    assert!(compared >= 10, "only {compared} polynomials compared");

    let x6 = Poly::parse_terms(&Field::Rational, "6:1").unwrap();
    let r = verify_poly_theorems(&x6).unwrap();
    assert_eq!(r.decompositions.len(), 2);
    assert_eq!(r.degree_multiset, vec![2, 3]);
    let mut aut: Vec<usize> = r.aut_multiset.iter().map(|&(_, a)| a).collect();
    aut.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(aut, vec![2, 1]);

    let q = Field::Rational;
    let one = q.one();
    let d6 = dickson(&q, 6, &one);
    assert_eq!(dickson(&q, 2, &one).compose(&dickson(&q, 3, &one)).unwrap(), d6);
    assert_eq!(dickson(&q, 3, &one).compose(&dickson(&q, 2, &one)).unwrap(), d6);
    assert_eq!(d6.to_terms(), "6:1 4:-6 2:9 0:-2");
}

fn additive() {
    let f2 = Field::fq(2).unwrap();
    let f = SkewPoly::from_i64s(&f2, &[0, 1, 1]).unwrap();
    let r = verify_ore_invariance(&f).unwrap();
    assert_eq!(r.factorizations.len(), 2);
    assert_eq!(r.length, 2);
    assert_eq!(r.degree_multiset, vec![1, 1]);

    let g = SkewPoly::from_i64s(&f2, &[1, 1, 1]).unwrap();
    assert!(is_irreducible(&g).unwrap());
    let x = g.to_additive();
    assert_eq!(x.to_terms(), "4:1 2:1 1:1");
    assert!(exhaustive_right_factors(&x, 2).unwrap().is_empty());

    timed(Duration::from_secs(120), "Ore sweep", || {
        for q in [2, 4] {
            let r = ore_sweep(&Field::fq(q).unwrap(), 3).unwrap();
            let expected: usize = (1..=3u32).map(|d| (q as usize - 1) * (q as usize).pow(d)).sum();
            assert_eq!(r.polynomials, expected);
        }
    });
}

fn laurent() {
    let f7 = Field::fq(7).unwrap();
    for terms in ["3:1", "3:1 1:1"] {
        let f = Poly::parse_terms(&f7, terms).unwrap();
        let short = monodromy_at_infinity(&f, 10).unwrap();
        let long = monodromy_at_infinity(&f, 20).unwrap();
        assert!(short.is_full_cycle());
        assert_eq!(short.branches.len(), 3);
        for (b, l) in short.branches.iter().zip(&long.branches) {
            let check = verify_branch(&f, b);
            assert!(check.vanishes, "{terms}: {b}");
            assert!(check.degrees.len() >= 11, "{terms}: {} degrees checked", check.degrees.len());
            assert_eq!(b.lead(), l.lead());
            assert_eq!(&l.tail()[..b.tail().len()], b.tail(), "{terms}: unstable coefficients");
        }
    }
}

fn determinism() {
    let (c1, a) = run_bin(&["fixtures", "run-all"]);
    let (c2, b) = run_bin(&["fixtures", "run-all"]);
    assert_eq!((c1, c2), (0, 0));
    assert!(!a.is_empty());
    assert!(a == b, "fixtures run-all output differs between runs");
}

fn main() {
    let criteria: [(&str, fn()); 9] = [
        ("cubic reciprocal counterexample (6, 1, 2) at p = 7, 13", counterexample),
        ("Ritt First with validated exchange walks", ritt_first),
        ("monodromy invariant on Dedekind A", monodromy),
        ("Aut invariant, divisibility and the M16 witness", aut_and_divisibility),
        ("ρ bijection on every lattice member", rho),
        ("polynomial engine agrees with the oracle", poly_oracle),
        ("additive factorizations and Ore sweep", additive),
        ("Laurent branches and inertia cycles", laurent),
        ("fixtures run-all is byte-identical", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    let _ = panic::take_hook();
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
