//! Table rows, the clustering ECDF and its SVG rendering.

use std::fmt::Write as _;

use wedge_core::{
    dominate_clustered_core, ego_traversing_partition, local_clustering, transfer_diagnostics, wedge_summary, Graph,
    Partition, QuotientDiagnostics, Result,
};

/// One row of the summary table. `dom` is the size of the greedy
/// dominating set of the clustered core, so it depends on the tie-break
/// rule and is not comparable across implementations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub triangles: u64,
    pub m2: u64,
    pub omega: u64,
    pub vc: usize,
    pub vt: usize,
    pub dom: usize,
}

impl AnalysisRow {
    pub const HEADER: &'static str = "name,n,m,triangles,m2,omega,Vc,Vt,dom";

    pub fn compute(name: &str, g: &Graph) -> Result<Self> {
        let s = wedge_summary(g)?;
        Ok(Self {
            name: name.to_string(),
            n: s.n,
            m: s.m,
            triangles: s.tau,
            m2: s.m2,
            omega: s.omega,
            vc: s.n_clustered,
            vt: s.n_traversing,
            dom: dominate_clustered_core(g)?.len(),
        })
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.name, self.n, self.m, self.triangles, self.m2, self.omega, self.vc, self.vt, self.dom
        )
    }
}

/// One row of the contraction table. Like `dom`, the ratio depends on the
/// greedy dominating set.
#[derive(Debug, Clone, PartialEq)]
pub struct ContractionRow {
    pub name: String,
    pub blocks: usize,
    pub ego_blocks: usize,
    pub tr_singletons: usize,
    pub b_edges: i64,
    pub b_internal: i64,
    pub ratio: f64,
}

impl ContractionRow {
    pub const HEADER: &'static str = "name,blocks,egoblocks,TR_singletons,B_edges,B_internal,ratio";

    pub fn from_diagnostics(name: &str, d: &QuotientDiagnostics<i64>) -> Self {
        Self {
            name: name.to_string(),
            blocks: d.blocks,
            ego_blocks: d.ego_blocks,
            tr_singletons: d.traversing_singletons,
            b_edges: d.b_edges,
            b_internal: d.b_internal,
            ratio: d.rho,
        }
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:?}",
            self.name, self.blocks, self.ego_blocks, self.tr_singletons, self.b_edges, self.b_internal, self.ratio
        )
    }
}

/// The ego-traversing partition of `g` built on the greedy dominating set.
pub fn ego_partition(g: &Graph) -> Result<Partition> {
    let s = dominate_clustered_core(g)?;
    ego_traversing_partition(g, &s)
}

/// Diagnostics for `partition`, or for the ego-traversing partition when
/// none is given.
pub fn contraction(g: &Graph, partition: Option<&Partition>) -> Result<QuotientDiagnostics<i64>> {
    match partition {
        Some(p) => transfer_diagnostics(g, p),
        None => transfer_diagnostics(g, &ego_partition(g)?),
    }
}

/// Empirical CDF: each distinct value `x` with the fraction of values `≤ x`.
pub fn ecdf(values: &[f64]) -> Vec<(f64, f64)> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut out: Vec<(f64, f64)> = Vec::new();
    for (k, &x) in sorted.iter().enumerate() {
        let f = (k + 1) as f64 / n;
        match out.last_mut() {
            Some(last) if last.0 == x => last.1 = f,
            _ => out.push((x, f)),
        }
    }
    out
}

/// ECDF of the local clustering coefficients of `g`.
pub fn clustering_ecdf(g: &Graph) -> Result<Vec<(f64, f64)>> {
    Ok(ecdf(&local_clustering(g)?.per_vertex))
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// Step plot with one polyline per curve on `[0, 1] × [0, 1]`.
pub fn ecdf_svg(curves: &[(String, Vec<(f64, f64)>)]) -> String {
    let (w, h, pad) = (520.0, 380.0, 48.0);
    let (pw, ph) = (w - 2.0 * pad, h - 2.0 * pad);
    let sx = |x: f64| pad + x * pw;
    let sy = |y: f64| h - pad - y * ph;
    let mut svg = String::new();
    writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
    writeln!(svg, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    writeln!(
        svg,
        r#"<rect x="{pad}" y="{pad}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    )
    .unwrap();
    for tick in 0..=4 {
        let v = tick as f64 / 4.0;
        writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{v}</text>"#,
            sx(v),
            h - pad + 16.0
        )
        .unwrap();
        writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="end">{v}</text>"#,
            pad - 6.0,
            sy(v) + 4.0
        )
        .unwrap();
    }
    writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" font-size="12" text-anchor="middle">local clustering C(v)</text>"#,
        w / 2.0,
        h - 10.0
    )
    .unwrap();
    writeln!(svg, r#"<text x="14" y="{:.1}" font-size="12" transform="rotate(-90 14 {:.1})" text-anchor="middle">F(x)</text>"#, h / 2.0, h / 2.0).unwrap();
    for (i, (name, steps)) in curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut points = vec![(0.0, 0.0)];
        let mut level = 0.0;
        for &(x, f) in steps {
            points.push((x, level));
            points.push((x, f));
            level = f;
        }
        points.push((1.0, level));
        let coords: Vec<String> = points.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"><title>{}</title></polyline>"#,
            coords.join(" "),
            escape(name)
        )
        .unwrap();
        writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" fill="{color}">{}</text>"#,
            pad + 8.0,
            pad + 14.0 * (i + 1) as f64,
            escape(name)
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use wedge_core::{generate, GraphKind};

    #[test]
    fn triangle_rows() {
        let k3 = generate(&GraphKind::Complete(3), 0).unwrap();
        assert_eq!(AnalysisRow::compute("k3", &k3).unwrap().to_csv(), "k3,3,3,1,3,0,3,0,1");
        let d = contraction(&k3, None).unwrap();
        assert_eq!(ContractionRow::from_diagnostics("k3", &d).to_csv(), "k3,1,1,0,0,3,1.0");
    }

    #[test]
    fn ecdf_steps() {
        let k3 = generate(&GraphKind::Complete(3), 0).unwrap();
        assert_eq!(clustering_ecdf(&k3).unwrap(), [(1.0, 1.0)]);
        let p3 = generate(&GraphKind::Path(3), 0).unwrap();
        assert_eq!(clustering_ecdf(&p3).unwrap(), [(0.0, 1.0)]);
        assert_eq!(ecdf(&[0.5, 0.0, 0.5, 1.0]), [(0.0, 0.25), (0.5, 0.75), (1.0, 1.0)]);
        assert!(ecdf(&[]).is_empty());
    }

    #[test]
    fn svg_has_one_polyline_per_curve() {
        let svg = ecdf_svg(&[("a".into(), vec![(0.5, 1.0)]), ("b<c".into(), vec![(0.0, 1.0)])]);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("b&lt;c"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
