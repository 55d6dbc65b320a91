//! Compact textual distribution specs for the command line.
//!
//! Grammar:
//!   exp:RATE
//!   nh:ALPHA,LAMBDA
//!   ge:LAMBDA,BETA
//!   enh:ALPHA,LAMBDA,BETA
//!   es:ALPHA,LAMBDA,exp
//!   es:ALPHA,LAMBDA,nh(ALPHA0)
//!   max:SPEC|SPEC|...        independent maximum of the listed marginals

use stochord::dist::{Baseline, Dist, EnhParams, EsSpec};
use stochord::extremes::{Marginal, MaxDist};

pub fn parse_dist(spec: &str) -> Result<Box<dyn Dist>, String> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| format!("`{spec}`: expected KIND:PARAMS"))?;
    match kind {
        "max" => {
            let marginals: Result<Vec<Marginal>, String> =
                rest.split('|').map(parse_marginal).collect();
            let marginals = marginals?;
            MaxDist::new(marginals)
                .map(|d| Box::new(d) as Box<dyn Dist>)
                .map_err(|e| e.to_string())
        }
        _ => parse_marginal(spec).map(|m| match m {
            Marginal::Enh(p) => Box::new(p) as Box<dyn Dist>,
            Marginal::Es(s) => Box::new(s) as Box<dyn Dist>,
        }),
    }
}

pub fn parse_marginal(spec: &str) -> Result<Marginal, String> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| format!("`{spec}`: expected KIND:PARAMS"))?;
    let nums = |s: &str, want: usize, names: &[&str]| -> Result<Vec<f64>, String> {
        let vals: Result<Vec<f64>, String> = s
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                tok.trim().parse::<f64>().map_err(|_| {
                    format!(
                        "`{spec}`: {} is not a number (`{tok}`)",
                        names.get(i).unwrap_or(&"parameter")
                    )
                })
            })
            .collect();
        let vals = vals?;
        if vals.len() != want {
            return Err(format!(
                "`{spec}`: expected {want} parameters ({}), got {}",
                names.join(","),
                vals.len()
            ));
        }
        Ok(vals)
    };
    let err = |e: stochord::Error| e.to_string();
    match kind {
        "exp" => {
            let v = nums(rest, 1, &["lambda"])?;
            EnhParams::exponential(v[0]).map(Marginal::Enh).map_err(err)
        }
        "nh" => {
            let v = nums(rest, 2, &["alpha", "lambda"])?;
            EnhParams::new(v[0], v[1], 1.0)
                .map(Marginal::Enh)
                .map_err(err)
        }
        "ge" => {
            let v = nums(rest, 2, &["lambda", "beta"])?;
            EnhParams::new(1.0, v[0], v[1])
                .map(Marginal::Enh)
                .map_err(err)
        }
        "enh" => {
            let v = nums(rest, 3, &["alpha", "lambda", "beta"])?;
            EnhParams::new(v[0], v[1], v[2])
                .map(Marginal::Enh)
                .map_err(err)
        }
        "es" => {
            let parts: Vec<&str> = rest.splitn(3, ',').collect();
            if parts.len() != 3 {
                return Err(format!(
                    "`{spec}`: expected es:ALPHA,LAMBDA,BASELINE with BASELINE = exp | nh(A0)"
                ));
            }
            let alpha: f64 = parts[0]
                .trim()
                .parse()
                .map_err(|_| format!("`{spec}`: alpha is not a number"))?;
            let lambda: f64 = parts[1]
                .trim()
                .parse()
                .map_err(|_| format!("`{spec}`: lambda is not a number"))?;
            let baseline = parse_baseline(parts[2].trim())?;
            EsSpec::new(alpha, lambda, baseline)
                .map(Marginal::Es)
                .map_err(err)
        }
        other => Err(format!(
            "`{spec}`: unknown family `{other}` (expected exp, nh, ge, enh, es, max)"
        )),
    }
}

fn parse_baseline(s: &str) -> Result<Baseline, String> {
    if s == "exp" {
        return Ok(Baseline::Exponential);
    }
    if let Some(inner) = s.strip_prefix("nh(").and_then(|r| r.strip_suffix(')')) {
        let a0: f64 = inner
            .trim()
            .parse()
            .map_err(|_| format!("baseline `{s}`: alpha is not a number"))?;
        return Baseline::nh(a0).map_err(|e| e.to_string());
    }
    Err(format!("baseline `{s}`: expected exp or nh(ALPHA)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_family() {
        for spec in [
            "exp:1.5",
            "nh:2,1",
            "ge:1,2.5",
            "enh:0.5,1,2",
            "es:2,1,exp",
            "es:2,1,nh(0.7)",
            "max:enh:1,1,1|enh:2,1,1",
        ] {
            assert!(parse_dist(spec).is_ok(), "{spec}");
        }
    }

    #[test]
    fn errors_name_the_field() {
        let e = parse_marginal("enh:-1,1,1").unwrap_err();
        assert!(e.contains("alpha"), "{e}");
        let e = parse_marginal("enh:1,0,1").unwrap_err();
        assert!(e.contains("lambda"), "{e}");
        let e = parse_marginal("enh:1,1,x").unwrap_err();
        assert!(e.contains("beta"), "{e}");
    }

    #[test]
    fn ge_equals_enh_reduction() {
        let ge = parse_dist("ge:1.3,2.0").unwrap();
        let enh = parse_dist("enh:1,1.3,2.0").unwrap();
        for i in 1..20 {
            let x = i as f64 * 0.3;
            assert!((ge.cdf(x) - enh.cdf(x)).abs() < 1e-15);
        }
    }
}
