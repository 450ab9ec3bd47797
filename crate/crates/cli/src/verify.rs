//! Oracle sweeps behind `cohrep verify`.

use std::fmt;
use std::str::FromStr;

use cohrep::autdegrees::{divisors, lemc_bruteforce, n_bound};
use cohrep::cohomreps::{enumerate, full_cohomology, poincare_closed};
use cohrep::isolation::{isolated_o, isolated_u_explicit, isolated_u_search, t1intro_inequalities};
use cohrep::poly::gaussian_binomial;
use cohrep::{CohRep, Family, FamilyKind, Partition, Poly};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    LemC,
    Gaussian,
    T1Intro,
    IsolU,
    All,
}

impl Suite {
    pub fn default_max_n(self) -> u32 {
        match self {
            Suite::LemC => 12,
            Suite::Gaussian => 5,
            Suite::T1Intro => 10,
            Suite::IsolU => 8,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::LemC => "lemC",
            Suite::Gaussian => "gaussian",
            Suite::T1Intro => "t1intro",
            Suite::IsolU => "isolU",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lemc" => Ok(Suite::LemC),
            "gaussian" => Ok(Suite::Gaussian),
            "t1intro" => Ok(Suite::T1Intro),
            "isolu" => Ok(Suite::IsolU),
            "all" => Ok(Suite::All),
            _ => Err(format!(
                "unknown suite {s:?}, expected lemC, gaussian, t1intro, isolU or all"
            )),
        }
    }
}

/// Result of one suite: a table of cases and the number of failures.
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: u32,
    pub rows: Vec<Value>,
    pub failures: usize,
}

impl SuiteReport {
    fn new(suite: Suite, max_n: u32) -> Self {
        SuiteReport {
            suite,
            max_n,
            rows: Vec::new(),
            failures: 0,
        }
    }

    fn push(&mut self, pass: bool, mut row: Value) {
        row["pass"] = json!(pass);
        self.failures += usize::from(!pass);
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.to_string(),
            "max_n": self.max_n,
            "cases": self.rows.len(),
            "failures": self.failures,
            "pass": self.failures == 0,
            "rows": self.rows,
        })
    }
}

pub fn run(suite: Suite, max_n: Option<u32>) -> Result<Vec<SuiteReport>, cohrep::Error> {
    let suites = match suite {
        Suite::All => vec![Suite::LemC, Suite::Gaussian, Suite::T1Intro, Suite::IsolU],
        s => vec![s],
    };
    suites
        .into_iter()
        .map(|s| {
            let n = max_n.unwrap_or(s.default_max_n());
            log::info!("running {s} up to {n}");
            match s {
                Suite::LemC => lemc(n),
                Suite::Gaussian => gaussian(n),
                Suite::T1Intro => t1intro(n),
                Suite::IsolU => isol_u(n),
                Suite::All => unreachable!(),
            }
        })
        .collect()
}

fn signatures(max_n: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=max_n).flat_map(|n| (1..n).map(move |p| (p, n - p)))
}

fn lemc(max_n: u32) -> Result<SuiteReport, cohrep::Error> {
    let mut report = SuiteReport::new(Suite::LemC, max_n);
    for n in 1..=u64::from(max_n) {
        for b in divisors(n) {
            for p in 0..=n {
                let expected = n_bound(b, n, p)?;
                let brute = lemc_bruteforce(n / b, b, p)?;
                report.push(
                    brute.max == expected && brute.parity_uniform,
                    json!({"n": n, "b": b, "p": p, "N": expected, "brute": brute.max,
                           "parity_uniform": brute.parity_uniform}),
                );
            }
        }
    }
    Ok(report)
}

/// The quaternionic check is bounded by rank 3 whatever `max_n` is.
const QUATERNIONIC_MAX: u32 = 3;

fn gaussian(max_n: u32) -> Result<SuiteReport, cohrep::Error> {
    let mut report = SuiteReport::new(Suite::Gaussian, max_n);
    let from_terms = |terms: Vec<(u32, u64)>| {
        let mut coeffs = vec![0; terms.last().map_or(0, |t| t.0 as usize + 1)];
        for (d, c) in terms {
            coeffs[d as usize] = c;
        }
        Poly::from_coeffs(coeffs)
    };
    for (p, q) in signatures(max_n) {
        for rep in enumerate(Family::unitary(p, q)?) {
            let closed = poincare_closed(&rep)?;
            let oracle = from_terms(full_cohomology(&rep)?);
            report.push(
                closed == oracle,
                json!({"rep": rep.to_string(), "closed": closed.coeffs(), "oracle": oracle.coeffs()}),
            );
        }
    }
    for (a, b) in signatures(max_n.min(QUATERNIONIC_MAX)) {
        let rep = CohRep::symplectic(a, b, Partition::empty(), Partition::rectangle(a, b), 0)?;
        let closed = gaussian_binomial(a + b, a).stretch(4);
        let oracle = from_terms(full_cohomology(&rep)?);
        report.push(
            closed == oracle,
            json!({"rep": format!("Sp({})/(Sp({a})×Sp({b}))", a + b), "closed": closed.coeffs(),
                   "oracle": oracle.coeffs()}),
        );
    }
    Ok(report)
}

fn t1intro(max_n: u32) -> Result<SuiteReport, cohrep::Error> {
    let mut report = SuiteReport::new(Suite::T1Intro, max_n);
    for (p, q) in signatures(max_n) {
        for r in 0..=q / 2 {
            let rep = CohRep::orthogonal(p, q, Partition::rectangle(p, r))?;
            let search = isolated_o(&rep)?.isolated;
            let formula = t1intro_inequalities(p, q, r);
            report.push(
                search == formula,
                json!({"p": p, "q": q, "r": r, "search": search, "inequalities": formula}),
            );
        }
    }
    Ok(report)
}

fn isol_u(max_n: u32) -> Result<SuiteReport, cohrep::Error> {
    let mut report = SuiteReport::new(Suite::IsolU, max_n);
    for (p, q) in signatures(max_n) {
        for rep in enumerate(Family::new(FamilyKind::U, p, q)?) {
            let explicit = isolated_u_explicit(&rep)?.isolated;
            let search = isolated_u_search(&rep)?.isolated;
            report.push(
                explicit == search,
                json!({"rep": rep.to_string(), "explicit": explicit, "search": search}),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::LemC,
            Suite::Gaussian,
            Suite::T1Intro,
            Suite::IsolU,
            Suite::All,
        ] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn small_sweeps_pass() {
        assert_eq!(lemc(6).unwrap().failures, 0);
        assert_eq!(isol_u(5).unwrap().failures, 0);
        assert_eq!(gaussian(3).unwrap().failures, 0);
    }
}
