//! Command implementations. Each returns a report and whether the command's
//! claim held (exit 0) or not (exit 1).

use num_complex::Complex64;
use num_traits::{One, Zero};
use thiserror::Error;

use slicereg_core::algebra::{CQuat, Quaternion};
use slicereg_core::equiv::{
    classify_orbit, find_intertwiners, orbit_relation, r3_equivalent, verify_conjugator,
    CentralDivisor, EquivError, IntertwinerSpace, Mismatch, OrbitMismatch,
};
use slicereg_core::series::{
    approximate_roots, check_conjugation_identity, default_samples, eval_numeric, numeric::cquatf_abs,
    CQuatF, SeriesError, SeriesKind,
};
use slicereg_core::stem::StemError;
use slicereg_core::{equivalent, invariants, R3StemPoly, StemPoly, TruncSeries};

use crate::parse::{parse_pair, parse_point, parse_stem, ParseError};
use crate::report::{Check, OrbitJson, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Stem(#[from] StemError),
    #[error(transparent)]
    Equiv(#[from] EquivError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Outcome = Result<(Report, bool), CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Algebra {
    #[default]
    H,
    R3,
}

fn cdiv_text(f: &StemPoly) -> String {
    invariants(f).central_divisor.to_string()
}

fn pair_text(a: String, b: String) -> String {
    format!("({a} ; {b})")
}

pub fn invariants_cmd(text: &str, algebra: Algebra) -> Outcome {
    let mut r = Report::new("invariants", &[text]);
    match algebra {
        Algebra::H => {
            let b = invariants(&parse_stem(text)?);
            r.trace = Some(b.trace.to_string());
            r.norm = Some(b.norm.to_string());
            r.cdiv = Some(b.central_divisor.to_string());
        }
        Algebra::R3 => {
            let f = parse_pair(text)?;
            let (t, n) = (f.trace(), f.norm());
            r.trace = Some(pair_text(t.0.to_string(), t.1.to_string()));
            r.norm = Some(pair_text(n.0.to_string(), n.1.to_string()));
            r.cdiv = Some(pair_text(cdiv_text(&f.first), cdiv_text(&f.second)));
        }
    }
    Ok((r, true))
}

pub fn cdiv_cmd(text: &str, roots: bool) -> Outcome {
    let f = parse_stem(text)?;
    let mut r = Report::new("cdiv", &[text]);
    let bundle = invariants(&f);
    r.cdiv = Some(bundle.central_divisor.to_string());
    if let (true, CentralDivisor::Divisor(d)) = (roots, &bundle.central_divisor) {
        for (z, m) in approximate_roots(d.poly()) {
            r.push_check(Check::new("root", true, format!("z ≈ {:.12} {:+.12}*E, multiplicity {m}", z.re, z.im)));
        }
    }
    Ok((r, true))
}

fn reason_text(m: Mismatch, f: &StemPoly, h: &StemPoly) -> String {
    let (a, b) = (invariants(f), invariants(h));
    match m {
        Mismatch::Trace => format!("trace mismatch: {} vs {}", a.trace, b.trace),
        Mismatch::Norm => format!("norm mismatch: {} vs {}", a.norm, b.norm),
        Mismatch::Cdiv => format!("cdiv mismatch: {} vs {}", a.central_divisor, b.central_divisor),
        Mismatch::Identity => "identity mismatch: a slice preserving input is only equivalent to itself".into(),
    }
}

pub fn equiv_cmd(f_text: &str, h_text: &str, algebra: Algebra, allow_swap: bool) -> Outcome {
    match algebra {
        Algebra::H => {
            let (f, h) = (parse_stem(f_text)?, parse_stem(h_text)?);
            let v = equivalent(&f, &h);
            let mut r = Report::new("equiv", &[f_text, h_text]);
            r.equivalent = Some(v.equivalent);
            r.branch = Some(v.branch.as_str().into());
            r.reason = Some(v.reason.map(|m| reason_text(m, &f, &h)));
            Ok((r, v.equivalent))
        }
        Algebra::R3 => r3_equiv_cmd(f_text, h_text, allow_swap),
    }
}

fn r3_reason(f: &R3StemPoly, h: &R3StemPoly) -> Option<String> {
    [(&f.first, &h.first), (&f.second, &h.second)]
        .iter()
        .enumerate()
        .find_map(|(n, (a, b))| {
            equivalent(a, b)
                .reason
                .map(|m| format!("component {}: {}", n + 1, reason_text(m, a, b)))
        })
}

pub fn r3_equiv_cmd(f_text: &str, h_text: &str, allow_swap: bool) -> Outcome {
    let (f, h) = (parse_pair(f_text)?, parse_pair(h_text)?);
    let v = r3_equivalent(&f, &h, allow_swap);
    let mut r = Report::new("r3-equiv", &[f_text, h_text]);
    r.equivalent = Some(v.equivalent());
    r.branch = Some(v.pairing().map_or("none", |p| p.as_str()).into());
    r.reason = Some(if v.equivalent() { None } else { r3_reason(&f, &h) });
    Ok((r, v.equivalent()))
}

fn orbit_reason(m: OrbitMismatch) -> &'static str {
    match m {
        OrbitMismatch::Center => "traces differ",
        OrbitMismatch::Form => "norms differ",
        OrbitMismatch::CentralVersusNullCone => {
            "equal trace and norm, but one point is central and the other lies on the null cone"
        }
        OrbitMismatch::ZeroVersusNonzero => "zero is only equivalent to itself",
    }
}

pub fn orbit_cmd(p_text: &str, q_text: &str) -> Outcome {
    let (p, q) = (parse_point(p_text)?, parse_point(q_text)?);
    let rel = orbit_relation(&p, &q);
    let mut r = Report::new("orbit", &[p_text, q_text]);
    r.orbit = Some(OrbitJson::from(&classify_orbit(&p)));
    r.equivalent = Some(rel.is_ok());
    r.reason = Some(rel.err().map(|m| format!("{}: {}", m.as_str(), orbit_reason(m))));
    Ok((r, rel.is_ok()))
}

pub fn classify_cmd(p_text: &str) -> Outcome {
    let p = parse_point(p_text)?;
    let mut r = Report::new("classify", &[p_text]);
    r.orbit = Some(OrbitJson::from(&classify_orbit(&p)));
    Ok((r, true))
}

pub fn intertwine_cmd(f_text: &str, h_text: &str, dmax: usize, trace_free: bool) -> Outcome {
    let (f, h) = (parse_stem(f_text)?, parse_stem(h_text)?);
    let space = if trace_free {
        IntertwinerSpace::TraceFree
    } else {
        IntertwinerSpace::All
    };
    let basis = find_intertwiners(&f, &h, dmax, space);
    let mut r = Report::new("intertwine", &[f_text, h_text]);
    r.intertwiners = Some(basis.iter().map(ToString::to_string).collect());
    // a single generator determines alpha up to scale
    if let [alpha] = basis.as_slice() {
        let rep = verify_conjugator(&f, &h, alpha)?;
        r.norm_alpha = Some(rep.norm_alpha.to_string());
        r.invertible_on_c = Some(rep.invertible_on_c);
    }
    Ok((r, !basis.is_empty()))
}

pub fn verify_cmd(f_text: &str, h_text: &str, alpha_text: &str) -> Outcome {
    let (f, h, alpha) = (parse_stem(f_text)?, parse_stem(h_text)?, parse_stem(alpha_text)?);
    let rep = verify_conjugator(&f, &h, &alpha)?;
    let mut r = Report::new("verify", &[f_text, h_text, alpha_text]);
    r.norm_alpha = Some(rep.norm_alpha.to_string());
    r.invertible_on_c = Some(rep.invertible_on_c);
    r.push_check(Check::new("intertwines", rep.intertwines, "alpha*F = H*alpha"));
    if let Some(ok) = rep.conjugation_identity {
        r.push_check(Check::new("conjugation", ok, "F = alpha^-1*H*alpha"));
    }
    Ok((r, rep.verified()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EvalMode {
    #[default]
    Slice,
    Stem,
}

pub fn eval_cmd(f_text: &str, at: &str, mode: EvalMode) -> Outcome {
    let f = parse_stem(f_text)?;
    let p = parse_point(at)?;
    let value = match mode {
        EvalMode::Slice => {
            let q = real_part(&p).ok_or_else(|| {
                CliError::Usage("slice evaluation needs a point without E; use --stem for complex points".into())
            })?;
            f.eval_slice(&q).to_string()
        }
        EvalMode::Stem => {
            if !p.is_central() {
                return Err(CliError::Usage("stem evaluation needs a point of the form a + b*E".into()));
            }
            f.eval_stem(p.re()).to_string()
        }
    };
    let mut r = Report::new("eval", &[f_text, at]);
    r.value = Some(value);
    Ok((r, true))
}

fn real_part(p: &CQuat) -> Option<Quaternion> {
    p.c.iter().all(|x| x.im.is_zero()).then(|| Quaternion {
        c: p.c.clone().map(|x| x.re),
    })
}

/// Parses comma separated complex numbers such as `0.3, -1.2E, 0.5+0.5E`.
pub fn parse_samples(text: &str) -> Result<Vec<Complex64>, CliError> {
    text.split(',').map(|s| parse_complex(s.trim())).collect()
}

fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::Usage(format!("cannot read sample '{s}'"));
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = s.strip_suffix('E') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split before the sign of the E term, skipping exponent signs
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&n| matches!(bytes[n], b'+' | b'-') && !matches!(bytes[n - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(n) => (&body[..n], &body[n..]),
        None => ("0", body),
    };
    let im = match im.trim_end_matches('*') {
        "" | "+" => "1",
        "-" => "-1",
        t => t,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

/// `a + b*E` text for a float sample.
pub fn complex_text(z: Complex64) -> String {
    match (z.re, z.im) {
        (re, 0.0) => format!("{re}"),
        (0.0, im) => format!("{im}*E"),
        (re, im) if im < 0.0 => format!("{re} - {}*E", -im),
        (re, im) => format!("{re} + {im}*E"),
    }
}

/// The rotating unit `cos·i + sin·j` truncated at `order`.
pub fn rotating_unit(order: usize) -> Result<TruncSeries, SeriesError> {
    let cos = TruncSeries::build(SeriesKind::Cos, order)?;
    let sin = TruncSeries::build(SeriesKind::Sin, order)?;
    Ok(cos.scale_right(&Quaternion::i()).add(&sin.scale_right(&Quaternion::j())))
}

/// `cos(z/2) − k·sin(z/2)`.
pub fn half_angle_conjugator(order: usize) -> Result<TruncSeries, SeriesError> {
    let ch = TruncSeries::build(SeriesKind::CosHalf, order)?;
    let sh = TruncSeries::build(SeriesKind::SinHalf, order)?;
    Ok(ch.sub(&sh.scale_right(&Quaternion::k())))
}

/// Tolerance for the closed-form values along the slice through `j`.
pub const SLICE_TOL: f64 = 1e-10;

pub fn series_checks(order: usize, tol: f64, samples: &[Complex64]) -> Result<Vec<Check>, CliError> {
    let g = rotating_unit(order)?;
    let one = TruncSeries::constant(Quaternion::one(), order)?;
    let mut checks = vec![
        Check::new(
            "series-norm",
            g.norm().sub(&one).is_zero_mod_order(),
            format!("Nm(g) - 1 = 0 mod z^{order}"),
        ),
        Check::new("series-trace", g.trace().is_zero_mod_order(), format!("Tr(g) = 0 mod z^{order}")),
        Check::new("series-conj", g.conj() == g.neg(), "g^c = -g"),
    ];
    for (label, t) in [("1/2", 0.5f64), ("1", 1.0)] {
        let q = CQuatF::new(Complex64::zero(), Complex64::zero(), Complex64::new(t, 0.0), Complex64::zero());
        let v = eval_numeric(&g, &q);
        let expect = CQuatF::new(
            Complex64::new(-t.sinh(), 0.0),
            Complex64::new(t.cosh(), 0.0),
            Complex64::zero(),
            Complex64::zero(),
        );
        let err = cquatf_abs(&(&v.value - &expect));
        checks.push(Check::new(
            format!("series-slice t={label}"),
            err <= SLICE_TOL && v.tail_bound <= SLICE_TOL,
            format!("|g(tj) - (cosh(t)i - sinh(t))| = {err:.3e}, tail <= {:.3e}", v.tail_bound),
        ));
    }
    let f = TruncSeries::constant(Quaternion::i(), order)?;
    let hc = half_angle_conjugator(order)?;
    let report = check_conjugation_identity(&f, &g, &hc, samples, tol)?;
    for s in &report.samples {
        checks.push(Check::new(
            format!("series-conjugation z={}", complex_text(s.z)),
            s.pass,
            format!(
                "residual {:.3e}, trace {:.3e}, norm {:.3e}, tail <= {:.3e}, tol {tol:e}",
                s.residual, s.trace_residual, s.norm_residual, s.tail_bound
            ),
        ));
    }
    Ok(checks)
}

pub fn series_check_cmd(order: usize, tol: f64, samples: Option<&str>) -> Outcome {
    let samples = match samples {
        Some(s) => parse_samples(s)?,
        None => default_samples(),
    };
    let mut r = Report::new("series-check", &[]);
    r.checks = Some(series_checks(order, tol, &samples)?);
    let ok = r.all_checks_pass();
    Ok((r, ok))
}
