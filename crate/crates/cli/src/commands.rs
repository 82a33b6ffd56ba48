//! Subcommand bodies. Each returns the full stdout text.

use serde_json::json;
use thiserror::Error;

use pstat_core::series::{
    self, bell_poly_cf, bell_poly_enum_with, bell_poly_paths_with, e_poly_cf, touchard_L,
    SeriesError,
};
use pstat_core::stats::sweep;
use pstat_core::*;

use crate::render::{render_partition, render_trace};
use crate::verify::{self, Suite};

/// Exit code for malformed input or arguments.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for a failed identity check.
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Violation(_) => EXIT_VIOLATION,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(format!("cannot parse partition: {e}"))
    }
}

impl From<PathError> for CliError {
    fn from(e: PathError) -> Self {
        CliError::Usage(format!("invalid Charlier diagram: {e}"))
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Enumerate(e) => e.into(),
            other => CliError::Violation(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Svg,
}

fn set_text(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn json_out(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json");
    s.push('\n');
    s
}

fn no_svg(cmd: &str) -> CliError {
    CliError::Usage(format!("`{cmd}` has no svg output"))
}

pub fn stats(input: &str, format: Format) -> Result<String, CliError> {
    let pi = parse_partition(input)?;
    let ty = pi.partition_type();
    let t = StatTriple::of(&pi);
    let c = count_stats(&pi);
    let rows: Vec<(usize, usize, usize, StatTriple)> = sweep(&pi)
        .iter()
        .enumerate()
        .filter_map(|(k, s)| {
            s.gamma.map(|g| (k + 1, s.vacancies, g, stats_at(&pi, k + 1).expect("closing element")))
        })
        .collect();
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("n={}\n", pi.n()));
            out.push_str(&format!("blocks={pi}\n"));
            out.push_str(&format!(
                "O={} C={} S={} T={}\n",
                set_text(&ty.openers()),
                set_text(&ty.closers()),
                set_text(&ty.singletons()),
                set_text(&ty.transients())
            ));
            out.push_str(&format!("cr={} ne={} al={}\n", t.cr, t.ne, t.al));
            out.push_str(&format!("sg={} bl={} tr={} ed={}\n", c.sg, c.bl, c.tr, c.ed));
            out.push_str("j\tl_j\tgamma_j\tcr_at\tne_at\tal_at\n");
            for (j, l, g, at) in rows {
                out.push_str(&format!("{j}\t{l}\t{g}\t{}\t{}\t{}\n", at.cr, at.ne, at.al));
            }
            Ok(out)
        }
        Format::Json => Ok(json_out(json!({
            "n": pi.n(),
            "blocks": pi.blocks(),
            "type": {
                "O": ty.openers(), "C": ty.closers(), "S": ty.singletons(), "T": ty.transients(),
            },
            "cr": t.cr, "ne": t.ne, "al": t.al,
            "sg": c.sg, "bl": c.bl, "tr": c.tr, "ed": c.ed,
            "per_endpoint": rows.iter().map(|(j, l, g, at)| json!({
                "j": j, "l_j": l, "gamma_j": g, "cr_at": at.cr, "ne_at": at.ne, "al_at": at.al,
            })).collect::<Vec<_>>(),
        }))),
        Format::Svg => Err(no_svg("stats")),
    }
}

pub fn involute(input: &str, check: bool, format: Format) -> Result<String, CliError> {
    let pi = parse_partition(input)?;
    let image = phi(&pi);
    let mut failures = Vec::new();
    if check {
        if phi(&image) != pi {
            failures.push(format!("phi(phi(pi)) = {}", phi(&image)));
        }
        if image.partition_type() != pi.partition_type() {
            failures.push("type not preserved".to_string());
        }
        let (a, b) = (StatTriple::of(&pi), StatTriple::of(&image));
        if b != a.swapped() {
            failures.push(format!("statistics {a:?} -> {b:?}"));
        }
    }
    let out = match format {
        Format::Text => {
            let mut s = format!("{image}\n");
            if check {
                if failures.is_empty() {
                    s.push_str("PASS\n");
                } else {
                    s.push_str(&format!("FAIL: {}\n", failures.join("; ")));
                }
            }
            s
        }
        Format::Json => {
            let mut v = json!({ "input": pi.to_string(), "image": image.to_string() });
            if check {
                v["check"] = json!(if failures.is_empty() { "PASS" } else { "FAIL" });
                v["failures"] = json!(failures);
            }
            json_out(v)
        }
        Format::Svg => render_partition(&image),
    };
    if failures.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Violation(out))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    Encode,
    DecodeLeft,
    DecodeRight,
}

pub fn charlier(direction: Direction, input: &str, format: Format) -> Result<String, CliError> {
    match direction {
        Direction::Encode => {
            let pi = parse_partition(input)?;
            let (l, r) = (phi_l_inv(&pi), phi_r_inv(&pi));
            match format {
                Format::Text => Ok(format!("left: {l}\nright: {r}\n")),
                Format::Json => Ok(json_out(json!({ "left": l, "right": r }))),
                Format::Svg => Err(no_svg("charlier encode")),
            }
        }
        Direction::DecodeLeft | Direction::DecodeRight => {
            let h: CharlierDiagram = match serde_json::from_str(input) {
                Ok(h) => h,
                Err(_) => input.parse()?,
            };
            let pi = if direction == Direction::DecodeLeft { phi_l(&h) } else { phi_r(&h) };
            match format {
                Format::Text => Ok(format!("{pi}\n")),
                Format::Json => Ok(json_out(json!({ "diagram": h, "partition": pi }))),
                Format::Svg => Ok(render_partition(&pi)),
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "E", alias = "e")]
    E,
    #[value(name = "F", alias = "f")]
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Route {
    Enum,
    Paths,
    #[default]
    Cf,
    All,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::Enum => "enum",
            Route::Paths => "paths",
            Route::Cf => "cf",
            Route::All => "all",
        }
    }
}

/// Routes available per family: `B` has all three; the others have an
/// enumeration route and a continued-fraction route.
fn routes(family: Family) -> &'static [Route] {
    match family {
        Family::B => &[Route::Enum, Route::Paths, Route::Cf],
        _ => &[Route::Enum, Route::Cf],
    }
}

/// `Σ q^{C(k,2)} e_k(1/q)` for `E = Σ e_k v^k`.
fn alignments_from_e(e: &MultiPoly) -> Result<MultiPoly, CliError> {
    let mut out = MultiPoly::zero();
    for k in 0..=e.max_exp(Var::V) {
        let bound = k * k.saturating_sub(1) / 2;
        let slice = e.coeff_of(Var::V, k).reflect(Var::Q, bound);
        out += &slice.ok_or_else(|| CliError::Violation(format!("negative exponent at k={k}")))?;
    }
    Ok(out)
}

fn compute(family: Family, n: usize, route: Route, limits: Limits) -> Result<MultiPoly, CliError> {
    let p = match (family, route) {
        (Family::B, Route::Enum) => bell_poly_enum_with(n, limits)?,
        (Family::B, Route::Paths) => bell_poly_paths_with(n, limits)?,
        (Family::B, Route::Cf) => bell_poly_cf(n),
        (Family::L, Route::Enum) => {
            limits.check_matchings(2 * n)?;
            series::touchard_l_enum(n)?
        }
        (Family::L, Route::Cf) => touchard_L(n),
        (Family::T, Route::Enum) => {
            limits.check_matchings(2 * n)?;
            series::t_poly_direct(n)?
        }
        (Family::T, Route::Cf) => series::t_poly(n)?,
        (Family::E, Route::Enum) => {
            limits.check_partitions(n)?;
            series::e_poly(n)?
        }
        (Family::E, Route::Cf) => e_poly_cf(n),
        (Family::F, Route::Enum) => {
            limits.check_partitions(n)?;
            series::f_poly_direct(n)?
        }
        (Family::F, Route::Cf) => alignments_from_e(&e_poly_cf(n))?,
        (_, r) => {
            return Err(CliError::Usage(format!("route `{}` is not available for {family:?}", r.name())))
        }
    };
    Ok(p)
}

pub fn poly(family: Family, n: usize, route: Route, format: Format, limits: Limits) -> Result<String, CliError> {
    let chosen: Vec<Route> = if route == Route::All { routes(family).to_vec() } else { vec![route] };
    let mut results = Vec::new();
    for r in &chosen {
        results.push((*r, compute(family, n, *r, limits)?));
    }
    let first = &results[0].1;
    let mismatch: Vec<String> = results
        .iter()
        .filter(|(_, p)| p != first)
        .map(|(r, p)| format!("route {} gave {p}, route {} gave {first}", r.name(), results[0].0.name()))
        .collect();
    let out = match format {
        Format::Text => format!("{first}\n"),
        Format::Json => json_out(json!({
            "family": format!("{family:?}"),
            "n": n,
            "routes": chosen.iter().map(|r| r.name()).collect::<Vec<_>>(),
            "text": first.to_text(),
            "terms": first,
        })),
        Format::Svg => return Err(no_svg("poly")),
    };
    if mismatch.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Violation(mismatch.join("\n")))
    }
}

pub fn verify(suite: Suite, n_max: usize, format: Format, limits: Limits) -> Result<String, CliError> {
    match verify::run(suite, n_max, limits)? {
        Ok(report) => match format {
            Format::Text => Ok(format!(
                "suite={} n_max={} checked={} PASS\n",
                report.suite,
                report.n_max,
                report.total()
            )),
            Format::Json => Ok(json_out(json!({
                "suite": report.suite,
                "n_max": report.n_max,
                "checked": report.checked,
                "total": report.total(),
                "result": "PASS",
            }))),
            Format::Svg => Err(no_svg("verify")),
        },
        Err(violation) => Err(CliError::Violation(format!("FAIL {violation}"))),
    }
}

pub fn render(input: &str, traces: Option<usize>) -> Result<String, CliError> {
    let pi = parse_partition(input)?;
    match traces {
        None => Ok(render_partition(&pi)),
        Some(i) => {
            let t = trace(&pi, i).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(render_trace(&t))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_STAR: &str = "1,9,10/2,3,7/4/5,6,11/8";

    #[test]
    fn stats_report() {
        let out = stats(PI_STAR, Format::Text).unwrap();
        assert!(out.contains("cr=2 ne=5 al=8"));
        assert!(out.contains("O={1,2,5} C={7,10,11} S={4,8} T={3,6,9}"));
        assert!(out.contains("\n6\t3\t3\t0\t2\t"), "{out}");
        assert!(stats("1", Format::Text).unwrap().contains("cr=0 ne=0 al=0"));
        assert!(stats("1,3/2,4", Format::Text).unwrap().contains("cr=1 ne=0 al=0"));
        let json: serde_json::Value = serde_json::from_str(&stats(PI_STAR, Format::Json).unwrap()).unwrap();
        assert_eq!(json["ne"], 5);
        assert_eq!(json["per_endpoint"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn involute_output() {
        assert_eq!(involute(PI_STAR, false, Format::Text).unwrap(), "1,3,10/2,6,9,11/4/5,7/8\n");
        assert_eq!(involute(PI_STAR, true, Format::Text).unwrap(), "1,3,10/2,6,9,11/4/5,7/8\nPASS\n");
        assert_eq!(involute("1/2/3", false, Format::Text).unwrap(), "1/2/3\n");
    }

    #[test]
    fn charlier_round() {
        let enc = charlier(Direction::Encode, PI_STAR, Format::Text).unwrap();
        assert!(enc.starts_with("left: UUBRUBDRBDD | 1,1,2,1,1,3,2,1,1,2,1\n"), "{enc}");
        let h = "UUBRUBDRBDD | 1,1,2,1,1,3,2,1,1,2,1";
        assert_eq!(charlier(Direction::DecodeLeft, h, Format::Text).unwrap(), format!("{PI_STAR}\n"));
        assert_eq!(charlier(Direction::DecodeRight, h, Format::Text).unwrap(), "1,3,10/2,6,9,11/4/5,7/8\n");
        let json = r#"{"steps":"UUBRUBDRBDD","xi":[1,1,2,1,1,3,2,1,1,2,1]}"#;
        assert_eq!(charlier(Direction::DecodeLeft, json, Format::Text).unwrap(), format!("{PI_STAR}\n"));
        let bad = charlier(Direction::DecodeLeft, "UD | 2,1", Format::Text).unwrap_err();
        assert_eq!(bad.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn poly_routes() {
        let lim = Limits::default();
        assert_eq!(
            poly(Family::L, 3, Route::Cf, Format::Text, lim).unwrap(),
            "1+2p+2q+p^2+2pq+q^2+p^3+2p^2q+2pq^2+q^3\n"
        );
        assert_eq!(poly(Family::T, 2, Route::All, Format::Text, lim).unwrap(), "2+q\n");
        assert_eq!(poly(Family::B, 0, Route::All, Format::Text, lim).unwrap(), "1\n");
        assert_eq!(poly(Family::F, 3, Route::All, Format::Text, lim).unwrap(), "4+q\n");
        assert_eq!(poly(Family::E, 3, Route::All, Format::Text, lim).unwrap(), "1+3v+v^2\n");
        let err = poly(Family::L, 2, Route::Paths, Format::Text, lim).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
        let capped = Limits { partitions: 3, matchings: 3 };
        assert_eq!(poly(Family::B, 4, Route::Enum, Format::Text, capped).unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn render_counts() {
        let svg = render(PI_STAR, Some(6)).unwrap();
        assert_eq!(svg.matches(r#"class="half-edge""#).count(), 3);
        assert!(render(PI_STAR, Some(12)).is_err());
    }
}
