//! Text renderings: CSV with LF endings and aligned tables.

use std::fmt::Write as _;

use soltes_core::reproduce::RowReport;
use soltes_core::search::HitReport;
use soltes_core::{decimal3, r_m, show_ratio, DeltaSpectrum, SweepHit};

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn spectrum_csv(spectrum: &DeltaSpectrum) -> String {
    let mut out = String::from("m,count\n");
    for (m, count) in &spectrum.counts {
        let _ = writeln!(out, "{m},{count}");
    }
    let _ = writeln!(out, "# order,{}", spectrum.order);
    let _ = writeln!(out, "# disconnecting,{}", spectrum.disconnecting);
    for m in spectrum.counts.keys() {
        let r = r_m(spectrum, *m);
        let _ = writeln!(out, "# R_{m},{}/{},{}", r.numer(), r.denom(), decimal3(&r));
    }
    out
}

pub fn spectrum_table(spectrum: &DeltaSpectrum) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>12}  {:>8}  R_m", "m", "count");
    for (m, count) in &spectrum.counts {
        let _ = writeln!(
            out,
            "{m:>12}  {count:>8}  {}",
            show_ratio(&r_m(spectrum, *m))
        );
    }
    let _ = writeln!(out, "{:>12}  {:>8}", "cut", spectrum.disconnecting);
    let _ = writeln!(out, "{:>12}  {:>8}", "|V|", spectrum.order);
    out
}

fn status(r: &RowReport) -> &'static str {
    if r.skipped.is_some() {
        "SKIP"
    } else if r.passed() {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn reports_table(reports: &[RowReport]) -> String {
    let mut out = String::new();
    let width = reports.iter().map(|r| r.label.len()).max().unwrap_or(0);
    for r in reports {
        let _ = write!(out, "{}  {:<width$}", status(r), r.label);
        if let Some(reason) = &r.skipped {
            let _ = writeln!(out, "  ({reason})");
            continue;
        }
        if let Some(order) = r.order {
            let _ = write!(out, "  |V|={order}");
        }
        if let Some(w) = r.wiener {
            let _ = write!(out, "  W={w}");
        }
        if let Some(m) = r.m {
            let _ = write!(out, "  m={m}");
        }
        if let Some(ratio) = &r.r_m {
            let _ = write!(out, "  R_m={}", show_ratio(ratio));
        }
        out.push('\n');
        for c in r.checks.iter().filter(|c| !c.pass) {
            let _ = writeln!(
                out,
                "      {}: expected {}, got {}",
                c.name, c.expected, c.actual
            );
        }
    }
    let count = |s: &str| reports.iter().filter(|r| status(r) == s).count();
    let _ = writeln!(
        out,
        "{} passed, {} failed, {} skipped",
        count("PASS"),
        count("FAIL"),
        count("SKIP")
    );
    out
}

pub fn reports_csv(reports: &[RowReport]) -> String {
    let mut out = String::from("label,status,order,wiener,m,r_num,r_den,r_decimal\n");
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            csv_field(&r.label),
            status(r),
            opt(r.order.map(|v| v.to_string())),
            opt(r.wiener.map(|v| v.to_string())),
            opt(r.m.map(|v| v.to_string())),
            opt(r.r_m.map(|v| v.numer().to_string())),
            opt(r.r_m.map(|v| v.denom().to_string())),
            opt(r.r_m.as_ref().map(decimal3)),
        );
    }
    out
}

pub fn hits_csv(hits: &[SweepHit], reports: Option<&[Option<HitReport>]>) -> String {
    let mut out = String::from("n,k,n0,t0,m,bound_num,bound_den,realized,order");
    if reports.is_some() {
        out.push_str(",verified,r_num,r_den");
    }
    out.push('\n');
    for (i, h) in hits.iter().enumerate() {
        let realized = h
            .realization
            .as_ref()
            .map_or("none".to_string(), |f| f.to_string());
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            h.n,
            h.k,
            h.n0,
            h.t0,
            h.m,
            h.bound.numer(),
            h.bound.denom(),
            csv_field(&realized),
            h.order()
        );
        if let Some(reports) = reports {
            match &reports[i] {
                Some(rep) => {
                    let r = rep.r_m().unwrap_or_default();
                    let verdict = if rep.passed() { "pass" } else { "fail" };
                    let _ = write!(out, ",{verdict},{},{}", r.numer(), r.denom());
                }
                None => out.push_str(",skipped,,"),
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use soltes_core::{delta_spectrum, Graph};

    #[test]
    fn spectrum_csv_for_c11() {
        let s = delta_spectrum(&Graph::cycle(11)).unwrap();
        assert_eq!(
            spectrum_csv(&s),
            "m,count\n0,11\n# order,11\n# disconnecting,0\n# R_0,1/1,1.000\n"
        );
    }

    #[test]
    fn quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("ab"), "ab");
    }
}
