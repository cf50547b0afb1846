use std::fmt::Write as _;

use mullineux_core::superweights::RootOrdering;
use mullineux_core::{
    embed_x, embed_y, enumerate_lambda_plus, from_symbol, in_lambda_plusplus, in_lambda_plusplus_dt,
    in_lambda_plusplus_tilde, j_chain, mullineux_symbolic, mullineux_xu, serganova_tilde, symbol, tilde,
    verify_algebra, verify_mullineux, xu_j_count, xu_j_map, Partition, SchurAlgebra, SerganovaTrace, Weight,
};
use serde_json::{json, Value};

use crate::render::{eps_sum, partition as show};
use crate::{Algo, CliError, CommandResult, SerganovaArgs, Suite, VerifyArgs};

/// Failures listed individually in sweep reports; the count is always exact.
const LISTED_FAILURES: usize = 20;

fn parse_partition(text: &str) -> Result<Partition, CliError> {
    Ok(text.parse::<Partition>()?)
}

pub fn cmd_mullineux(text: &str, p: u64, algo: Algo) -> Result<CommandResult, CliError> {
    let lambda = parse_partition(text)?;
    let by_symbol = matches!(algo, Algo::Symbol | Algo::Both).then(|| mullineux_symbolic(&lambda, p)).transpose()?;
    let by_xu = matches!(algo, Algo::Xu | Algo::Both).then(|| mullineux_xu(&lambda, p)).transpose()?;
    let result = by_symbol.clone().or_else(|| by_xu.clone()).expect("at least one algorithm runs");
    let agree = match (&by_symbol, &by_xu) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let mut payload = json!({"p": p, "lambda": lambda, "algo": algo, "result": result});
    if let Some(s) = &by_symbol {
        payload["symbol"] = json!(s);
    }
    if let Some(x) = &by_xu {
        payload["xu"] = json!(x);
    }
    let mut human = format!("M{} = {} = {}", show(&lambda), show(&result), result.exponent_notation());
    if let Some(agree) = agree {
        payload["agree"] = json!(agree);
        human.push_str(if agree { "\nsymbol and xu algorithms agree" } else { "\nsymbol and xu algorithms DISAGREE" });
    }
    Ok(CommandResult::new(agree != Some(false), payload, human))
}

pub fn cmd_symbol(text: &str, p: u64, round_trip: bool) -> Result<CommandResult, CliError> {
    let lambda = parse_partition(text)?;
    let sym = symbol(&lambda, p)?;
    let mut payload = json!({"p": p, "lambda": lambda, "a": sym.a_row(), "r": sym.r_row()});
    let mut human = format!("G{} with p = {p}:\n{sym}", show(&lambda));
    let mut pass = true;
    if round_trip {
        let back = from_symbol(&sym)?;
        pass = back == lambda;
        payload["round_trip"] = json!(back);
        payload["round_trip_ok"] = json!(pass);
        let _ = write!(human, "\nround trip: {} {}", show(&back), if pass { "ok" } else { "MISMATCH" });
    }
    Ok(CommandResult::new(pass, payload, human))
}

pub fn cmd_jchain(text: &str, p: u64) -> Result<CommandResult, CliError> {
    let lambda = parse_partition(text)?;
    let chain = j_chain(&lambda, p)?;
    let total: usize = chain.iter().map(|s| s.j).sum();
    let mut human = String::new();
    for (k, step) in chain.iter().enumerate() {
        let _ = writeln!(human, "J^{k} = {:<20} j = {}", show(&step.partition), step.j);
    }
    let _ = write!(human, "J^{} = ()\nsum of j = {total} = |λ|", chain.len());
    let payload = json!({"p": p, "lambda": lambda, "chain": chain, "total": total});
    Ok(CommandResult::new(total == lambda.size(), payload, human))
}

fn parse_order(text_or_path: &str, m: usize, n: usize) -> Result<RootOrdering, CliError> {
    match text_or_path {
        "default" => Ok(RootOrdering::column_major(m, n)),
        "row-major" => Ok(RootOrdering::row_major(m, n)),
        _ => {
            let text = match text_or_path.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?,
                None => text_or_path.to_string(),
            };
            Ok(text.parse()?)
        }
    }
}

fn parse_weight(text: &str, m: usize, n: usize) -> Result<Weight, CliError> {
    let coords = text
        .split(|c: char| c == ',' || c == '|' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad weight coordinate {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Weight::new(m, n, coords)?)
}

fn trace_text(trace: &SerganovaTrace) -> String {
    let mut out = format!("λ^(0) = {}", eps_sum(&trace.start));
    for (k, step) in trace.steps.iter().enumerate() {
        let i = k + 1;
        let decision = if step.subtracted {
            "subtract".to_string()
        } else if trace.p == 0 {
            "= 0, keep".to_string()
        } else {
            format!("≡ 0 (mod {}), keep", trace.p)
        };
        let _ = write!(
            out,
            "\nβ{i} = {}: (λ^({}), β{i}) = {} {decision}; λ^({i}) = {}",
            step.root,
            k,
            step.form_value,
            eps_sum(&step.weight)
        );
    }
    let _ = write!(out, "\nλ̃ = {}", eps_sum(trace.result()));
    out
}

pub fn cmd_serganova(args: &SerganovaArgs) -> Result<CommandResult, CliError> {
    if let Some(text) = &args.bridge {
        let lambda = parse_partition(text)?;
        let d = lambda.size();
        let order = parse_order(&args.order, d, d)?;
        let x = embed_x(&lambda, d, d, d)?;
        let trace = serganova_tilde(&x, args.p, &order)?;
        let m_lambda = mullineux_xu(&lambda, args.p)?;
        let expected = embed_y(&m_lambda, d, d, d)?;
        let agree = *trace.result() == expected;
        let human = format!(
            "{}\ny(M{}) = y{} = {}\n{}",
            trace_text(&trace),
            show(&lambda),
            show(&m_lambda),
            eps_sum(&expected),
            if agree { "bridge holds" } else { "bridge FAILS" }
        );
        let payload = json!({
            "mode": "bridge", "lambda": lambda, "p": args.p, "m": d, "n": d,
            "order": order.to_string(), "trace": trace, "m_lambda": m_lambda,
            "expected": expected, "agree": agree,
        });
        return Ok(CommandResult::new(agree, payload, human));
    }
    let (Some(m), Some(n)) = (args.m, args.n) else {
        return Err(CliError::Usage("serganova needs --m and --n (or --bridge)".into()));
    };
    let weight = parse_weight(args.weight.as_deref().unwrap_or_default(), m, n)?;
    let order = parse_order(&args.order, m, n)?;
    let trace = serganova_tilde(&weight, args.p, &order)?;
    let payload = json!({
        "m": m, "n": n, "p": args.p, "order": order.to_string(),
        "start": trace.start, "steps": trace.steps, "result": trace.result(),
    });
    Ok(CommandResult::new(true, payload, trace_text(&trace)))
}

pub fn cmd_classify(m: usize, n: usize, d: usize, p: u64) -> Result<CommandResult, CliError> {
    let mut rows = Vec::new();
    let mut members = Vec::new();
    let mut consistent = true;
    let mut human = format!("Λ⁺({m}|{n},{d}) at p = {p}");
    for lambda in enumerate_lambda_plus(m, n, d) {
        let last = in_lambda_plusplus(&lambda, p, d)?;
        let dt = if d <= m { Some(in_lambda_plusplus_dt(&lambda, p, d)?) } else { None };
        let via_tilde = in_lambda_plusplus_tilde(&lambda, p, d)?;
        let agree = dt.map_or(true, |x| x == last) && via_tilde == last;
        consistent &= agree;
        if last {
            members.push(lambda.clone());
        }
        let _ = write!(
            human,
            "\n{:<16} {}{}{}",
            lambda.to_string(),
            if last { "in Λ⁺⁺" } else { "not in Λ⁺⁺" },
            dt.map_or(String::new(), |x| format!(", divisibility test {}", if x { "yes" } else { "no" })),
            if agree { "" } else { "  DISAGREEMENT" }
        );
        rows.push(json!({"weight": lambda.coords(), "last": last, "dt": dt, "tilde": via_tilde}));
    }
    let _ = write!(human, "\n{} of {} weights lie in Λ⁺⁺", members.len(), rows.len());
    let payload = json!({
        "m": m, "n": n, "d": d, "p": p, "weights": rows,
        "members": members.iter().map(|w| w.coords()).collect::<Vec<_>>(),
        "consistent": consistent,
    });
    Ok(CommandResult::new(consistent, payload, human))
}

fn need<T: Copy>(value: Option<T>, flag: &str, suite: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("suite {suite} needs {flag}")))
}

fn need_primes<'a>(p: &'a [u64], suite: &str) -> Result<&'a [u64], CliError> {
    if p.is_empty() {
        return Err(CliError::Usage(format!("suite {suite} needs --p")));
    }
    Ok(p)
}

struct Sweep {
    checked: usize,
    failures: Vec<String>,
    failure_count: usize,
}

impl Sweep {
    fn new() -> Self {
        Sweep { checked: 0, failures: Vec::new(), failure_count: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < LISTED_FAILURES {
                self.failures.push(what());
            }
        }
    }
}

fn mullineux_maps(primes: &[u64], max_size: usize) -> Result<Sweep, CliError> {
    let mut sweep = Sweep::new();
    for &p in primes {
        for size in 0..=max_size {
            for lambda in Partition::restricted(size, p)? {
                let m = mullineux_symbolic(&lambda, p)?;
                let m_xu = mullineux_xu(&lambda, p)?;
                sweep.check(m == m_xu, || format!("p={p} ({lambda}): symbol and xu differ"));
                sweep.check(mullineux_xu(&m_xu, p)? == lambda, || format!("p={p} ({lambda}): M is not an involution"));
                sweep.check(m_xu.first() == xu_j_count(&lambda, p)?, || format!("p={p} ({lambda}): first part is not j"));
                let after_j = mullineux_xu(&xu_j_map(&lambda, p)?, p)?;
                sweep.check(after_j == m_xu.remove_first_row(), || format!("p={p} ({lambda}): M∘J differs from R∘M"));
            }
        }
    }
    Ok(sweep)
}

fn serganova_bridge(primes: &[u64], max_d: usize) -> Result<Sweep, CliError> {
    let mut sweep = Sweep::new();
    for &p in primes {
        for d in 0..=max_d {
            for lambda in Partition::restricted(d, p)? {
                let lhs = tilde(&embed_x(&lambda, d, d, d)?, p)?;
                let rhs = embed_y(&mullineux_xu(&lambda, p)?, d, d, d)?;
                sweep.check(lhs == rhs, || format!("p={p} ({lambda}): {lhs} != {rhs}"));
            }
        }
    }
    Ok(sweep)
}

fn sweep_result(suite: Suite, sweep: Sweep, bounds: Value) -> CommandResult {
    let pass = sweep.failure_count == 0;
    let mut human = format!("{} checks, {} failures", sweep.checked, sweep.failure_count);
    for f in &sweep.failures {
        let _ = write!(human, "\n  {f}");
    }
    let _ = write!(human, "\n{}", if pass { "PASS" } else { "FAIL" });
    let payload = json!({
        "suite": suite, "bounds": bounds, "checked": sweep.checked,
        "failure_count": sweep.failure_count, "failures": sweep.failures, "pass": pass,
    });
    CommandResult::new(pass, payload, human)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<CommandResult, CliError> {
    match args.suite {
        Suite::MullineuxMaps => {
            let max_size = need(args.max_size, "--max-size", "mullineux-maps")?;
            let primes = need_primes(&args.p, "mullineux-maps")?;
            let sweep = mullineux_maps(primes, max_size)?;
            Ok(sweep_result(args.suite, sweep, json!({"p": primes, "max_size": max_size})))
        }
        Suite::SerganovaBridge => {
            let max_d = need(args.max_size, "--max-size", "serganova-bridge")?;
            let primes = need_primes(&args.p, "serganova-bridge")?;
            let sweep = serganova_bridge(primes, max_d)?;
            Ok(sweep_result(args.suite, sweep, json!({"p": primes, "max_size": max_d})))
        }
        Suite::Schur => {
            let m = need(args.m, "--m", "schur")?;
            let n = need(args.n, "--n", "schur")?;
            let d = need(args.d, "--d", "schur")?;
            let primes: &[u64] = if args.p.is_empty() { &[3, 5] } else { &args.p };
            let report = verify_algebra(m, n, d, primes)?;
            let mut human = format!("S({m}|{n},{d}) has dimension {}", report.dim);
            for c in &report.checks {
                let _ = write!(human, "\n{:<30} {:<4} {} ({})", c.name, c.ring, if c.pass { "ok" } else { "FAIL" }, c.detail);
            }
            let _ = write!(human, "\n{}", if report.pass { "PASS" } else { "FAIL" });
            let mut payload = json!(report);
            payload["suite"] = json!(args.suite);
            Ok(CommandResult::new(report.pass, payload, human))
        }
        Suite::Conjecture => {
            let max_d = need(args.d, "--d", "conjecture")?;
            let primes = need_primes(&args.p, "conjecture")?;
            let mut reports = Vec::new();
            let mut human = String::new();
            for &p in primes {
                for d in 1..=max_d {
                    let report = verify_mullineux(d, p)?;
                    for c in &report.cases {
                        let _ = writeln!(
                            human,
                            "p={p} d={d}: D^{} ⊗ sgn ≅ D^{} (dim {}) {}",
                            show(&c.mu),
                            show(&c.m_mu),
                            c.dim,
                            if c.pass { "ok" } else { "FAIL" }
                        );
                    }
                    reports.push(report);
                }
            }
            let pass = reports.iter().all(|r| r.pass);
            human.push_str(if pass { "PASS" } else { "FAIL" });
            let payload = json!({"suite": args.suite, "reports": reports, "pass": pass});
            Ok(CommandResult::new(pass, payload, human))
        }
    }
}

pub fn cmd_schur_table(m: usize, n: usize, d: usize, max_size: usize) -> Result<CommandResult, CliError> {
    let alg = SchurAlgebra::new(m, n, d)?;
    if alg.dim() > max_size {
        return Err(CliError::Usage(format!(
            "S({m}|{n},{d}) has {} basis elements, above --max-size {max_size}",
            alg.dim()
        )));
    }
    let table = alg.structure_table();
    let mut human = format!("S({m}|{n},{d}): {} basis elements", table.basis.len());
    for (k, b) in table.basis.iter().enumerate() {
        let _ = write!(human, "\n  ξ{k} = ξ{b}");
    }
    let mut last = None;
    for [a, b, r, c] in &table.products {
        if last != Some((*a, *b)) {
            let _ = write!(human, "\nξ{a}·ξ{b} =");
            last = Some((*a, *b));
        }
        let _ = write!(human, " {c:+}ξ{r}");
    }
    Ok(CommandResult::new(true, json!(table), human))
}
