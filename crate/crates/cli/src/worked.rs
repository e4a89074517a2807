//! Embedded worked examples with their expected values, run by
//! `paper-examples`.

use slicereg_core::algebra::scalar::{gint, ratio};
use slicereg_core::algebra::Quaternion;
use slicereg_core::equiv::{
    classify_orbit, find_intertwiner, find_intertwiners, orbit_equivalent, verify_conjugator,
    IntertwinerSpace, Isotropy, OrbitKind,
};
use slicereg_core::series::default_samples;
use slicereg_core::{equivalent, invariants, StemPoly};

use crate::commands::{series_checks, CliError};
use crate::parse::{parse_point, parse_stem};
use crate::report::{Check, Report};

pub const F_TEXT: &str = "i + z*j + (1/2)*z^2*k";
pub const G_TEXT: &str = "(1 + (1/2)*z^2)*i";
pub const ALPHA_TEXT: &str = "(2 + (1/2)*z^2)*i + z*j + (1/2)*z^2*k";
pub const CDIV_TEXT: &str = "z + i*z^2*(z - 1) + j*z^3*(z - 1)^2";
pub const CAVEAT_F: &str = "1 + z*i";
pub const CAVEAT_G: &str = "1 + j + z*j";

fn eq_check(name: &str, got: String, want: &str) -> Check {
    let pass = got == want;
    Check::new(name, pass, format!("got {got}, expected {want}"))
}

fn stem(text: &str) -> Result<StemPoly, CliError> {
    Ok(parse_stem(text)?)
}

fn invariant_checks(out: &mut Vec<Check>) -> Result<(), CliError> {
    let (f, g) = (stem(F_TEXT)?, stem(G_TEXT)?);
    let (a, b) = (invariants(&f), invariants(&g));
    out.push(eq_check("pair trace F", a.trace.to_string(), "0"));
    out.push(eq_check("pair trace G", b.trace.to_string(), "0"));
    out.push(eq_check("pair norm F", a.norm.to_string(), "1 + z^2 + 1/4*z^4"));
    out.push(eq_check("pair norm G", b.norm.to_string(), "1 + z^2 + 1/4*z^4"));
    out.push(eq_check("pair cdiv F", a.central_divisor.to_string(), "1"));
    out.push(eq_check("pair cdiv G", b.central_divisor.to_string(), "2 + z^2"));
    let v = equivalent(&f, &g);
    out.push(Check::new(
        "pair verdict",
        !v.equivalent && v.reason.map(|m| m.as_str()) == Some("cdiv"),
        format!("equivalent = {}, reason = {}", v.equivalent, v.reason.map_or("none", |m| m.as_str())),
    ));
    Ok(())
}

fn intertwiner_checks(out: &mut Vec<Check>) -> Result<(), CliError> {
    let (f, g, alpha) = (stem(F_TEXT)?, stem(G_TEXT)?, stem(ALPHA_TEXT)?);
    let tf = find_intertwiners(&f, &g, 2, IntertwinerSpace::TraceFree);
    // the generator is normalized to a leading coordinate of 1: alpha/2
    let scaled = alpha.scale_right(&Quaternion::scalar(ratio(1, 2)));
    out.push(Check::new(
        "intertwiner trace-free space",
        tf.len() == 1 && tf[0] == scaled,
        format!("dimension {}, generator {}", tf.len(), tf.first().map_or("-".into(), ToString::to_string)),
    ));
    let all = find_intertwiner(&f, &g, 2);
    out.push(Check::new(
        "intertwiner full space",
        all.len() == 4,
        format!("dimension {} for degree <= 2", all.len()),
    ));
    let rep = verify_conjugator(&f, &g, &alpha)?;
    out.push(Check::new("intertwiner identity", rep.intertwines, "alpha*F = G*alpha exactly"));
    out.push(eq_check("intertwiner norm", rep.norm_alpha.to_string(), "4 + 3*z^2 + 1/2*z^4"));
    out.push(Check::new(
        "intertwiner invertible_on_C",
        !rep.invertible_on_c,
        format!("invertible_on_C = {}", rep.invertible_on_c),
    ));
    Ok(())
}

fn cdiv_checks(out: &mut Vec<Check>) -> Result<(), CliError> {
    let f = stem(CDIV_TEXT)?;
    let d = f.cdiv()?;
    out.push(eq_check("cdiv value", d.to_string(), "-z^2 + z^3"));
    let (m0, m1) = (d.multiplicity_at(&gint(0, 0)), d.multiplicity_at(&gint(1, 0)));
    out.push(Check::new(
        "cdiv multiplicities",
        m0 == 2 && m1 == 1,
        format!("order {m0} at 0, order {m1} at 1"),
    ));
    let (f, g) = (stem(CAVEAT_F)?, stem(CAVEAT_G)?);
    let (df, dg, dfg) = (f.cdiv()?, g.cdiv()?, f.star(&g).cdiv()?);
    out.push(eq_check("cdiv caveat F", df.to_string(), "z"));
    out.push(eq_check("cdiv caveat G", dg.to_string(), "1 + z"));
    out.push(eq_check("cdiv caveat F*G", dfg.to_string(), "1"));
    Ok(())
}

/// Points covering the three orbit kinds, with the expected kind.
pub const ORBIT_POINTS: [(&str, OrbitKind); 12] = [
    ("1", OrbitKind::CenterFixed),
    ("0", OrbitKind::CenterFixed),
    ("1/2 + E", OrbitKind::CenterFixed),
    ("-3*E", OrbitKind::CenterFixed),
    ("i + E*j", OrbitKind::NullCone),
    ("1 + i + E*j", OrbitKind::NullCone),
    ("j - E*k", OrbitKind::NullCone),
    ("2 + (1 + E)*i + (1 - E)*j", OrbitKind::NullCone),
    ("i", OrbitKind::Generic),
    ("3/5*i + 4/5*j", OrbitKind::Generic),
    ("E*k", OrbitKind::Generic),
    ("1 + i + j + E*k", OrbitKind::Generic),
];

fn isotropy_of(kind: OrbitKind) -> Isotropy {
    match kind {
        OrbitKind::CenterFixed => Isotropy::FullGroup,
        OrbitKind::NullCone => Isotropy::AdditiveC,
        OrbitKind::Generic => Isotropy::TorusCstar,
    }
}

pub fn orbit_checks(out: &mut Vec<Check>) -> Result<(), CliError> {
    for (text, kind) in ORBIT_POINTS {
        let c = classify_orbit(&parse_point(text)?);
        out.push(Check::new(
            format!("orbit classify {text}"),
            c.kind == kind && c.isotropy == isotropy_of(kind),
            format!("{} / {}", c.kind.as_str(), c.isotropy.as_str()),
        ));
    }
    let (p, q) = (parse_point("1")?, parse_point("1 + i + E*j")?);
    let same_invariants = p.trace() == q.trace() && p.norm() == q.norm();
    let verdict = orbit_equivalent(&p, &q)?;
    out.push(Check::new(
        "orbit guard 1 vs 1 + i + E*j",
        same_invariants && !verdict,
        "equal trace and norm; central versus null-cone, not equivalent",
    ));
    let (p, q) = (parse_point("i")?, parse_point("5/4*i + 3/4*E*j")?);
    out.push(Check::new("orbit i vs 5/4*i + 3/4*E*j", orbit_equivalent(&p, &q)?, "same generic orbit"));
    Ok(())
}

pub fn worked_examples() -> Result<Report, CliError> {
    let mut checks = Vec::new();
    invariant_checks(&mut checks)?;
    intertwiner_checks(&mut checks)?;
    cdiv_checks(&mut checks)?;
    checks.extend(series_checks(40, 1e-9, &default_samples())?);
    orbit_checks(&mut checks)?;
    let mut r = Report::new("paper-examples", &[F_TEXT, G_TEXT, ALPHA_TEXT, CDIV_TEXT, CAVEAT_F, CAVEAT_G]);
    r.checks = Some(checks);
    Ok(r)
}
