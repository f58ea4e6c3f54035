use std::fmt::Write as _;
use std::ops::RangeInclusive;

use fanspec_core::eigen::{group_multiplicities, symmetric_eigenvalues};
use fanspec_core::quotient::{quotient_eigenvalue_list, quotient_matrix, DEFAULT_EQUITABLE_TOL};
use fanspec_core::tables::{reproduce_table, AppendixTable};
use fanspec_core::verify::{
    canonical_partition, closed_form_for, compare_spectra, sweep, SweepOutcome,
};
use fanspec_core::{ClosedFormCase, ClosedFormKind, Family, Graph, MatrixKind, Partition};
use serde::Serialize;

use crate::render::{csv_line, g6, set, table};
use crate::{CliError, ExportFormat, Mode, OutputFormat};

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn full(x: f64) -> String {
    x.to_string()
}

fn check_tol(name: &str, tol: f64, allow_zero: bool) -> Result<(), CliError> {
    if tol.is_finite() && (tol > 0.0 || (allow_zero && tol == 0.0)) {
        Ok(())
    } else {
        Err(fanspec_core::Error::InvalidParameter(format!(
            "{name} must be a finite {} number (got {tol})",
            if allow_zero {
                "non-negative"
            } else {
                "positive"
            }
        ))
        .into())
    }
}

#[derive(Serialize)]
struct SpectrumRow {
    value: f64,
    multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deviation: Option<f64>,
}

#[derive(Serialize)]
struct SpectrumOutput {
    family: Family,
    m: usize,
    n: usize,
    kind: String,
    mode: Mode,
    grouping_tol: f64,
    rows: Vec<SpectrumRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_abs_deviation: Option<f64>,
    errata_notes: Vec<String>,
}

pub struct SpectrumArgs {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub kind: MatrixKind,
    pub mode: Mode,
    pub convergence_tol: f64,
    pub grouping_tol: f64,
}

pub fn spectrum(a: &SpectrumArgs, format: OutputFormat) -> Result<String, CliError> {
    check_tol("convergence tol", a.convergence_tol, false)?;
    check_tol("grouping tol", a.grouping_tol, true)?;
    let closed = if a.mode == Mode::Numeric {
        None
    } else {
        let kind = ClosedFormKind::try_from(a.kind).map_err(|_| {
            CliError::Unsupported(format!(
                "no closed form for {} of {}; use numeric mode",
                a.kind, a.family
            ))
        })?;
        Some(closed_form_for(a.family, kind, a.m, a.n)?)
    };
    let numeric = if a.mode == Mode::Closed {
        None
    } else {
        let g = a.family.build(a.m, a.n)?;
        Some(symmetric_eigenvalues(
            &a.kind.build(&g)?,
            a.convergence_tol,
        )?)
    };

    let mut max_abs_deviation = None;
    let rows: Vec<SpectrumRow> = match (&closed, &numeric) {
        (Some(c), Some(num)) => {
            let expanded = c.expanded();
            max_abs_deviation = Some(compare_spectra(&expanded, num)?);
            let mut start = 0;
            group_multiplicities(&expanded, a.grouping_tol)
                .pairs()
                .iter()
                .map(|&(value, k)| {
                    let block = &num[start..start + k];
                    let dev = expanded[start..start + k]
                        .iter()
                        .zip(block)
                        .map(|(x, y)| (x - y).abs())
                        .fold(0.0, f64::max);
                    start += k;
                    SpectrumRow {
                        value,
                        multiplicity: k,
                        numeric: Some(block.iter().sum::<f64>() / k as f64),
                        deviation: Some(dev),
                    }
                })
                .collect()
        }
        (Some(c), None) => group_rows(&c.expanded(), a.grouping_tol),
        (None, Some(num)) => group_rows(num, a.grouping_tol),
        (None, None) => unreachable!("every mode computes at least one spectrum"),
    };

    let out = SpectrumOutput {
        family: a.family,
        m: a.m,
        n: a.n,
        kind: a.kind.to_string(),
        mode: a.mode,
        grouping_tol: a.grouping_tol,
        rows,
        max_abs_deviation,
        errata_notes: closed.map(|c| c.errata_notes).unwrap_or_default(),
    };
    Ok(match format {
        OutputFormat::Json => json(&out),
        OutputFormat::Csv => {
            let both = out.mode == Mode::Both;
            let mut s = if both {
                csv_line(&[
                    "closed".into(),
                    "multiplicity".into(),
                    "numeric".into(),
                    "deviation".into(),
                ])
            } else {
                csv_line(&["value".into(), "multiplicity".into()])
            };
            for r in &out.rows {
                let mut f = vec![full(r.value), r.multiplicity.to_string()];
                if both {
                    f.extend([
                        full(r.numeric.unwrap_or_default()),
                        full(r.deviation.unwrap_or_default()),
                    ]);
                }
                s.push_str(&csv_line(&f));
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!(
                "# {} m={} n={} {} ({})\n",
                out.family, out.m, out.n, out.kind, out.mode
            );
            let body: Vec<Vec<String>> = out
                .rows
                .iter()
                .map(|r| {
                    let mut f = vec![g6(r.value), r.multiplicity.to_string()];
                    if let (Some(x), Some(d)) = (r.numeric, r.deviation) {
                        f.extend([g6(x), format!("{d:.2e}")]);
                    }
                    f
                })
                .collect();
            if out.mode == Mode::Both {
                s.push_str(&table(
                    &["closed", "multiplicity", "numeric", "deviation"],
                    &body,
                ));
            } else {
                s.push_str(&table(&["value", "multiplicity"], &body));
            }
            if let Some(d) = out.max_abs_deviation {
                let _ = writeln!(s, "# max deviation {d:.2e}");
            }
            for note in &out.errata_notes {
                let _ = writeln!(s, "# corrected: {note}");
            }
            s
        }
    })
}

fn group_rows(values: &[f64], tol: f64) -> Vec<SpectrumRow> {
    group_multiplicities(values, tol)
        .pairs()
        .iter()
        .map(|&(value, multiplicity)| SpectrumRow {
            value,
            multiplicity,
            numeric: None,
            deviation: None,
        })
        .collect()
}

pub fn tables(which: u8, format: OutputFormat) -> Result<String, CliError> {
    let t = reproduce_table(which)?;
    Ok(match format {
        OutputFormat::Json => json(&t),
        OutputFormat::Csv => tables_csv(&t),
        OutputFormat::Text => tables_text(&t),
    })
}

fn columns(
    t: &AppendixTable,
) -> impl Iterator<
    Item = (
        &fanspec_core::tables::TableRow,
        &'static str,
        &[f64],
        &[f64],
        bool,
    ),
> {
    t.rows.iter().flat_map(|r| {
        [
            (
                r,
                "adjacency",
                r.printed_adjacency.as_slice(),
                r.computed_adjacency.as_slice(),
                r.adjacency_matches,
            ),
            (
                r,
                "laplacian",
                r.printed_laplacian.as_slice(),
                r.computed_laplacian.as_slice(),
                r.laplacian_matches,
            ),
        ]
    })
}

fn tables_text(t: &AppendixTable) -> String {
    let mut s = if t.id == 1 {
        "# table 1: F_{1,n}, printed label (n, 1)\n".to_owned()
    } else {
        format!(
            "# table 2: F_{{m,n}}; {}\n",
            t.label_note.as_deref().unwrap_or_default()
        )
    };
    let rows: Vec<Vec<String>> = columns(t)
        .map(|(r, col, printed, computed, ok)| {
            vec![
                format!("({}, {})", r.printed_label.0, r.printed_label.1),
                format!("F_{{{},{}}}", r.m, r.n),
                col.to_owned(),
                set(printed),
                set(computed),
                if ok { "ok" } else { "ERRATUM" }.to_owned(),
            ]
        })
        .collect();
    s.push_str(&table(
        &[
            "printed",
            "graph",
            "column",
            "printed values",
            "computed (rounded)",
            "status",
        ],
        &rows,
    ));
    for note in t.rows.iter().flat_map(|r| &r.notes) {
        let _ = writeln!(s, "# {note}");
    }
    s
}

fn tables_csv(t: &AppendixTable) -> String {
    let join = |v: &[f64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = csv_line(
        &[
            "table",
            "printed_label",
            "m",
            "n",
            "column",
            "printed",
            "computed",
            "match",
        ]
        .map(String::from),
    );
    for (r, col, printed, computed, ok) in columns(t) {
        s.push_str(&csv_line(&[
            t.id.to_string(),
            format!("{} {}", r.printed_label.0, r.printed_label.1),
            r.m.to_string(),
            r.n.to_string(),
            col.to_owned(),
            join(printed),
            join(computed),
            ok.to_string(),
        ]));
    }
    s
}

/// Returns the rendered sweep and whether every case passed.
pub fn verify(
    m_range: RangeInclusive<usize>,
    n_range: RangeInclusive<usize>,
    kinds: &[ClosedFormCase],
    tol: f64,
    format: OutputFormat,
) -> Result<(String, bool), CliError> {
    check_tol("tol", tol, false)?;
    let outcome = sweep(m_range, n_range, kinds, tol)?;
    let text = match format {
        OutputFormat::Json => json(&outcome),
        OutputFormat::Csv => verify_csv(&outcome),
        OutputFormat::Text => {
            let mut s = String::new();
            for r in &outcome.reports {
                s.push_str(&r.summary_line());
                s.push('\n');
            }
            let _ = writeln!(
                s,
                "# {} cases, {} failed, {} skipped (NC needs m, n >= 2)",
                outcome.reports.len(),
                outcome.failures(),
                outcome.skipped
            );
            s
        }
    };
    Ok((text, outcome.all_pass()))
}

fn verify_csv(o: &SweepOutcome) -> String {
    let opt = |x: Option<f64>| x.map(full).unwrap_or_default();
    let mut s = csv_line(
        &[
            "family",
            "m",
            "n",
            "kind",
            "max_abs_deviation",
            "trace_residual",
            "min_eigenvalue",
            "psd_ok",
            "quotient_ok",
            "errata",
            "pass",
        ]
        .map(String::from),
    );
    for r in &o.reports {
        s.push_str(&csv_line(&[
            r.case.family.to_string(),
            r.case.m.to_string(),
            r.case.n.to_string(),
            r.case.kind.to_string(),
            opt(r.max_abs_deviation),
            full(r.trace_residual),
            opt(r.min_eigenvalue),
            r.psd_ok.to_string(),
            r.quotient_containment_ok.to_string(),
            r.errata_flags.len().to_string(),
            r.pass.to_string(),
        ]));
    }
    s
}

#[derive(Serialize)]
struct MatrixOutput {
    family: Family,
    m: usize,
    n: usize,
    kind: String,
    order: usize,
    entries: Vec<f64>,
}

pub fn matrix(
    family: Family,
    m: usize,
    n: usize,
    kind: MatrixKind,
    format: OutputFormat,
) -> Result<String, CliError> {
    let mat = kind.build(&family.build(m, n)?)?;
    Ok(match format {
        OutputFormat::Json => json(&MatrixOutput {
            family,
            m,
            n,
            kind: kind.to_string(),
            order: mat.order(),
            entries: mat.entries().to_vec(),
        }),
        OutputFormat::Csv => mat
            .rows()
            .map(|r| csv_line(&r.iter().map(|&x| full(x)).collect::<Vec<_>>()))
            .collect(),
        OutputFormat::Text => {
            let mut s = format!("# {family} m={m} n={n} {kind}, order {}\n", mat.order());
            let rows: Vec<Vec<f64>> = mat.rows().map(<[f64]>::to_vec).collect();
            s.push_str(&aligned(&rows));
            s
        }
    })
}

/// Right-aligned numeric grid.
fn aligned(rows: &[Vec<f64>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| g6(x)).collect())
        .collect();
    let w = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut s = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>w$}")).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

fn vertex_label(family: Family, m: usize, n: usize, v: usize) -> String {
    match family {
        Family::Fan if v < n => format!("p{v}"),
        Family::Fan => format!("h{}", v - n),
        Family::Nc if v < n => format!("p{v}"),
        Family::Nc if v < n + m => format!("h{}", v - n),
        Family::Nc if v < n + 2 * m => format!("h{}'", v - n - m),
        Family::Nc => format!("p{}'", v - n - 2 * m),
    }
}

pub fn export(
    family: Family,
    m: usize,
    n: usize,
    format: ExportFormat,
) -> Result<String, CliError> {
    let g: Graph = family.build(m, n)?;
    Ok(match format {
        ExportFormat::Edgelist => g
            .edges()
            .iter()
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect(),
        ExportFormat::Dot => {
            let mut s = format!("graph {family}_{m}_{n} {{\n");
            for v in 0..g.order() {
                let label = vertex_label(family, m, n, v);
                let shape = if label.starts_with('h') {
                    "box"
                } else {
                    "ellipse"
                };
                let _ = writeln!(s, "  {v} [label=\"{label}\", shape={shape}];");
            }
            for (u, v) in g.edges() {
                let _ = writeln!(s, "  {u} -- {v};");
            }
            s.push_str("}\n");
            s
        }
    })
}

#[derive(Serialize)]
struct QuotientOutput {
    family: Family,
    m: usize,
    n: usize,
    kind: String,
    blocks: Vec<Vec<usize>>,
    quotient: Vec<Vec<f64>>,
    eigenvalues: Vec<f64>,
    /// Largest distance from a quotient eigenvalue to the full spectrum.
    containment_distance: f64,
    contained: bool,
    tol: f64,
}

pub fn quotient(
    family: Family,
    m: usize,
    n: usize,
    kind: MatrixKind,
    partition: Option<&str>,
    tol: f64,
    format: OutputFormat,
) -> Result<String, CliError> {
    check_tol("tol", tol, false)?;
    let mat = kind.build(&family.build(m, n)?)?;
    let p = match partition {
        Some(s) => Partition::parse(s, mat.order())?,
        None => canonical_partition(family, m, n)?,
    };
    let eigenvalues = quotient_eigenvalue_list(&mat, &p, DEFAULT_EQUITABLE_TOL)?;
    let b = quotient_matrix(&mat, &p)?;
    let full_spectrum = fanspec_core::eigen::eigenvalues(&mat)?;
    let containment_distance = eigenvalues
        .iter()
        .map(|q| {
            full_spectrum
                .iter()
                .map(|x| (x - q).abs())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    let out = QuotientOutput {
        family,
        m,
        n,
        kind: kind.to_string(),
        blocks: p.blocks().to_vec(),
        quotient: b.rows(),
        eigenvalues,
        containment_distance,
        contained: containment_distance <= tol,
        tol,
    };
    Ok(match format {
        OutputFormat::Json => json(&out),
        OutputFormat::Csv => {
            let mut s = String::new();
            for r in &out.quotient {
                s.push_str(&csv_line(&r.iter().map(|&x| full(x)).collect::<Vec<_>>()));
            }
            s
        }
        OutputFormat::Text => {
            let sizes: Vec<String> = p.block_sizes().iter().map(usize::to_string).collect();
            let mut s = format!(
                "# {family} m={m} n={n} {kind}, block sizes [{}]\n# quotient matrix\n",
                sizes.join(", ")
            );
            s.push_str(&aligned(&out.quotient));
            let _ = writeln!(s, "# eigenvalues {}", set(&out.eigenvalues));
            let _ = writeln!(
                s,
                "# contained in the spectrum of {kind}: {} (max distance {:.2e}, tol {:.0e})",
                if out.contained { "yes" } else { "no" },
                out.containment_distance,
                tol
            );
            s
        }
    })
}
