//! Structure-panel statistics.
//!
//! Everything here is a pure function over an immutable [`Graph`]: degree
//! summaries, average local clustering, connectivity and diameter,
//! degree assortativity, reciprocity of directed links, and the negative
//! fraction of signed weights. [`structure_panel`] assembles the full
//! panel in one pass.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DegreeMode, Graph, GraphError};
use crate::util::{ser_real, ser_real_vec};

/// Preferred style for summarizing a distribution with more than five
/// values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SummaryStyle {
    /// `average [min, max]`
    #[default]
    MeanMinMax,
    /// `median [5th percentile, 95th percentile]`
    MedianP5P95,
}

/// A summarized numeric distribution.
///
/// Distributions with five or fewer values are kept as an explicit value
/// list (sorted descending); larger ones are reduced to a center statistic
/// and a range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "style", rename_all = "snake_case")]
pub enum DistributionSummary {
    ValueList {
        #[serde(serialize_with = "ser_real_vec")]
        values: Vec<f64>,
    },
    MeanMinMax {
        #[serde(serialize_with = "ser_real")]
        center: f64,
        #[serde(serialize_with = "ser_real")]
        lo: f64,
        #[serde(serialize_with = "ser_real")]
        hi: f64,
    },
    MedianP5P95 {
        #[serde(serialize_with = "ser_real")]
        center: f64,
        #[serde(serialize_with = "ser_real")]
        lo: f64,
        #[serde(serialize_with = "ser_real")]
        hi: f64,
    },
}

impl DistributionSummary {
    pub fn is_value_list(&self) -> bool {
        matches!(self, DistributionSummary::ValueList { .. })
    }

    /// Center statistic; for a value list, the mean of the values.
    pub fn center(&self) -> f64 {
        match self {
            DistributionSummary::ValueList { values } => {
                values.iter().sum::<f64>() / values.len() as f64
            }
            DistributionSummary::MeanMinMax { center, .. }
            | DistributionSummary::MedianP5P95 { center, .. } => *center,
        }
    }

    /// Largest observed value (`hi` bound, or max of a value list).
    pub fn max(&self) -> f64 {
        match self {
            DistributionSummary::ValueList { values } => {
                values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            }
            DistributionSummary::MeanMinMax { hi, .. } => *hi,
            DistributionSummary::MedianP5P95 { hi, .. } => *hi,
        }
    }
}

/// Connectivity of a graph: component structure and diameter.
///
/// `diameter` is present only for connected graphs and
/// `largest_component_diameter` only for disconnected ones; both are
/// absent with `diameter_skipped` set when the graph exceeds the
/// configured diameter budget.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub is_connected: bool,
    pub n_components: usize,
    pub fraction_in_largest: f64,
    pub component_sizes: DistributionSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diameter: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub largest_component_diameter: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub diameter_skipped: bool,
}

/// All computed statistics of one graph's structure panel.
#[derive(Debug, Clone, PartialEq)]
pub struct StructurePanel {
    pub n_nodes: usize,
    pub n_links: usize,
    pub n_self_loops: usize,
    /// Total-degree summary; undirected graphs only.
    pub degree: Option<DistributionSummary>,
    pub degree_in: Option<DistributionSummary>,
    pub degree_out: Option<DistributionSummary>,
    /// Summary of in + out degrees; directed graphs only.
    pub degree_undirected: Option<DistributionSummary>,
    pub bidirectional_fraction: Option<f64>,
    /// Per-set degree summaries for bipartite graphs, when requested.
    pub bipartite_degrees: Option<(DistributionSummary, DistributionSummary)>,
    pub clustering: f64,
    pub connectivity: ConnectivityReport,
    /// Absent when the correlation is undefined (zero degree variance).
    pub assortativity: Option<f64>,
    /// Fraction of negative link weights; present only for signed graphs.
    pub signed_negative_fraction: Option<f64>,
    pub bipartite_counts: Option<(usize, usize)>,
}

/// Knobs for [`structure_panel`] and [`connectivity_report`].
#[derive(Debug, Clone)]
pub struct StatsConfig {
    pub summary_style: SummaryStyle,
    /// Above this many nodes the diameter is reported as not computed.
    pub diameter_budget: usize,
    /// Also summarize degrees separately for each bipartite node set.
    pub split_bipartite_degrees: bool,
}

impl Default for StatsConfig {
    fn default() -> Self {
        StatsConfig {
            summary_style: SummaryStyle::MeanMinMax,
            diameter_budget: 100_000,
            split_bipartite_degrees: false,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("cannot summarize an empty distribution")]
    EmptyDistribution,
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("zero weight has no sign")]
    ZeroWeight,
    #[error("operation requires a directed graph")]
    NotDirected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Percentile by linear interpolation between closest ranks.
/// `sorted` must be ascending and nonempty.
fn percentile(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    let h = (n - 1) as f64 * p / 100.0;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if lo + 1 >= n {
        sorted[n - 1]
    } else {
        sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
    }
}

/// Summarize a distribution: an explicit descending value list when there
/// are five or fewer values, otherwise the preferred center-plus-range
/// form.
pub fn summarize_distribution(
    values: &[f64],
    style: SummaryStyle,
) -> Result<DistributionSummary, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyDistribution);
    }
    if values.len() <= 5 {
        let mut v = values.to_vec();
        v.sort_by(|a, b| b.partial_cmp(a).expect("finite values"));
        return Ok(DistributionSummary::ValueList { values: v });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
    Ok(match style {
        SummaryStyle::MeanMinMax => DistributionSummary::MeanMinMax {
            center: sorted.iter().sum::<f64>() / sorted.len() as f64,
            lo: sorted[0],
            hi: sorted[sorted.len() - 1],
        },
        SummaryStyle::MedianP5P95 => DistributionSummary::MedianP5P95 {
            center: percentile(&sorted, 50.0),
            lo: percentile(&sorted, 5.0),
            hi: percentile(&sorted, 95.0),
        },
    })
}

/// Mean over all nodes of the local clustering coefficient
/// `c_i = 2 T_i / (k_i (k_i - 1))` on the undirected simple skeleton.
/// Nodes of skeleton degree < 2 contribute 0.
pub fn average_local_clustering(g: &Graph) -> Result<f64, StatsError> {
    if g.n_nodes() == 0 {
        return Err(StatsError::EmptyGraph);
    }
    let adj = g.skeleton_adjacency();
    let n = adj.len();
    let mut marked = vec![false; n];
    let mut total = 0.0;
    for i in 0..n {
        let k = adj[i].len();
        if k < 2 {
            continue;
        }
        for &u in &adj[i] {
            marked[u] = true;
        }
        // twice the triangle count through i
        let mut wedges_closed = 0usize;
        for &u in &adj[i] {
            wedges_closed += adj[u].iter().filter(|&&w| marked[w]).count();
        }
        for &u in &adj[i] {
            marked[u] = false;
        }
        total += wedges_closed as f64 / (k * (k - 1)) as f64;
    }
    Ok(total / n as f64)
}

fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut members = vec![start];
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        comps.push(members);
    }
    comps
}

/// Diameter of a connected node set by breadth-first search from every
/// member.
fn bfs_diameter(adj: &[Vec<usize>], members: &[usize]) -> usize {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    let mut diameter = 0;
    for &src in members {
        for &v in members {
            dist[v] = usize::MAX;
        }
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    diameter = diameter.max(dist[w]);
                    queue.push_back(w);
                }
            }
        }
    }
    diameter
}

/// Component structure and diameter. Components are computed on the
/// undirected skeleton (weak connectivity for directed graphs); distances
/// are unweighted breadth-first hops.
pub fn connectivity_report(g: &Graph, config: &StatsConfig) -> Result<ConnectivityReport, StatsError> {
    if g.n_nodes() == 0 {
        return Err(StatsError::EmptyGraph);
    }
    let adj = g.skeleton_adjacency();
    let comps = components(&adj);
    let sizes: Vec<f64> = comps.iter().map(|c| c.len() as f64).collect();
    let largest = comps
        .iter()
        .max_by_key(|c| c.len())
        .expect("at least one component");
    let is_connected = comps.len() == 1;

    let (diameter, largest_component_diameter, diameter_skipped) =
        if g.n_nodes() > config.diameter_budget {
            (None, None, true)
        } else if is_connected {
            (Some(bfs_diameter(&adj, largest)), None, false)
        } else {
            (None, Some(bfs_diameter(&adj, largest)), false)
        };

    Ok(ConnectivityReport {
        is_connected,
        n_components: comps.len(),
        fraction_in_largest: largest.len() as f64 / g.n_nodes() as f64,
        component_sizes: summarize_distribution(&sizes, config.summary_style)?,
        diameter,
        largest_component_diameter,
        diameter_skipped,
    })
}

/// Pearson correlation of degrees across link endpoints.
///
/// Undirected links contribute both endpoint orderings of total degrees;
/// directed links contribute (out-degree of source, in-degree of target).
/// Self-loops are excluded. Returns `None` when the correlation is
/// undefined (zero variance on either side).
pub fn degree_assortativity(g: &Graph) -> Result<Option<f64>, StatsError> {
    let pairs: Vec<(usize, usize)> = if g.kind().directed {
        let din = g.degrees(DegreeMode::In)?;
        let dout = g.degrees(DegreeMode::Out)?;
        g.links()
            .iter()
            .filter(|l| !l.is_self_loop())
            .map(|l| (dout[l.source], din[l.target]))
            .collect()
    } else {
        let deg = g.degrees(DegreeMode::Total)?;
        g.links()
            .iter()
            .filter(|l| !l.is_self_loop())
            .flat_map(|l| {
                [
                    (deg[l.source], deg[l.target]),
                    (deg[l.target], deg[l.source]),
                ]
            })
            .collect()
    };
    if pairs.is_empty() {
        return Ok(None);
    }
    // integer sums keep the zero-variance test exact
    let n = pairs.len() as i128;
    let (mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0i128, 0i128, 0i128, 0i128, 0i128);
    for &(x, y) in &pairs {
        let (x, y) = (x as i128, y as i128);
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    let var_x = n * sxx - sx * sx;
    let var_y = n * syy - sy * sy;
    if var_x == 0 || var_y == 0 {
        return Ok(None);
    }
    let cov = (n * sxy - sx * sy) as f64;
    Ok(Some(cov / ((var_x as f64).sqrt() * (var_y as f64).sqrt())))
}

/// Fraction of directed links whose reverse link also exists. A self-loop
/// is its own reverse and counts as bidirectional.
pub fn bidirectional_fraction(g: &Graph) -> Result<f64, StatsError> {
    if !g.kind().directed {
        return Err(StatsError::NotDirected);
    }
    if g.n_links() == 0 {
        return Err(StatsError::EmptyDistribution);
    }
    let set: HashSet<(usize, usize)> = g.links().iter().map(|l| (l.source, l.target)).collect();
    let reciprocated = g
        .links()
        .iter()
        .filter(|l| set.contains(&(l.target, l.source)))
        .count();
    Ok(reciprocated as f64 / g.n_links() as f64)
}

/// Fraction of weights strictly below zero. Zero weights have no sign and
/// are an error.
pub fn signed_negative_fraction(weights: &[f64]) -> Result<f64, StatsError> {
    if weights.is_empty() {
        return Err(StatsError::EmptyDistribution);
    }
    if weights.iter().any(|w| *w == 0.0) {
        return Err(StatsError::ZeroWeight);
    }
    Ok(weights.iter().filter(|w| **w < 0.0).count() as f64 / weights.len() as f64)
}

fn degrees_f64(g: &Graph, mode: DegreeMode) -> Result<Vec<f64>, StatsError> {
    Ok(g.degrees(mode)?.into_iter().map(|d| d as f64).collect())
}

/// Compute the full structure panel for one graph.
pub fn structure_panel(g: &Graph, config: &StatsConfig) -> Result<StructurePanel, StatsError> {
    if g.n_nodes() == 0 {
        return Err(StatsError::EmptyGraph);
    }
    let style = config.summary_style;

    let (degree, degree_in, degree_out, degree_undirected, bidir) = if g.kind().directed {
        let din = summarize_distribution(&degrees_f64(g, DegreeMode::In)?, style)?;
        let dout = summarize_distribution(&degrees_f64(g, DegreeMode::Out)?, style)?;
        let dtot = summarize_distribution(&degrees_f64(g, DegreeMode::Total)?, style)?;
        let bidir = if g.n_links() > 0 {
            Some(bidirectional_fraction(g)?)
        } else {
            None
        };
        (None, Some(din), Some(dout), Some(dtot), bidir)
    } else {
        let dtot = summarize_distribution(&degrees_f64(g, DegreeMode::Total)?, style)?;
        (Some(dtot), None, None, None, None)
    };

    let bipartite_degrees = match (config.split_bipartite_degrees, g.bipartite_sets()) {
        (true, Some((first, second))) => {
            let all = degrees_f64(g, DegreeMode::Total)?;
            let pick = |set: &[usize]| -> Vec<f64> { set.iter().map(|&i| all[i]).collect() };
            Some((
                summarize_distribution(&pick(first), style)?,
                summarize_distribution(&pick(second), style)?,
            ))
        }
        _ => None,
    };

    let signed_negative_fraction = if g.kind().weighted {
        let weights: Vec<f64> = g.link_weights().collect();
        if weights.iter().any(|w| *w < 0.0) {
            Some(crate::stats::signed_negative_fraction(&weights)?)
        } else {
            None
        }
    } else {
        None
    };

    Ok(StructurePanel {
        n_nodes: g.n_nodes(),
        n_links: g.n_links(),
        n_self_loops: g.n_self_loops(),
        degree,
        degree_in,
        degree_out,
        degree_undirected,
        bidirectional_fraction: bidir,
        bipartite_degrees,
        clustering: average_local_clustering(g)?,
        connectivity: connectivity_report(g, config)?,
        assortativity: degree_assortativity(g)?,
        signed_negative_fraction,
        bipartite_counts: g.bipartite_sets().map(|(a, b)| (a.len(), b.len())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;

    fn undirected(links: &[(&str, &str)]) -> Graph {
        let links: Vec<_> = links
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string(), None))
            .collect();
        Graph::build(GraphKind::undirected(false), &[], &links, None).unwrap()
    }

    fn directed(links: &[(&str, &str)]) -> Graph {
        let links: Vec<_> = links
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string(), None))
            .collect();
        Graph::build(GraphKind::directed(false), &[], &links, None).unwrap()
    }

    #[test]
    fn short_distributions_are_listed_descending() {
        let summary = summarize_distribution(&[2.0, 111.0], SummaryStyle::MeanMinMax).unwrap();
        assert_eq!(
            summary,
            DistributionSummary::ValueList {
                values: vec![111.0, 2.0]
            }
        );
    }

    #[test]
    fn mean_min_max_summary() {
        let summary =
            summarize_distribution(&[4.0, 2.0, 6.0, 1.0, 3.0, 5.0], SummaryStyle::MeanMinMax)
                .unwrap();
        assert_eq!(
            summary,
            DistributionSummary::MeanMinMax {
                center: 3.5,
                lo: 1.0,
                hi: 6.0
            }
        );
    }

    #[test]
    fn median_percentiles_use_linear_interpolation() {
        let values: Vec<f64> = (1..=10).map(|v| v as f64).collect();
        match summarize_distribution(&values, SummaryStyle::MedianP5P95).unwrap() {
            DistributionSummary::MedianP5P95 { center, lo, hi } => {
                assert!((center - 5.5).abs() < 1e-12);
                assert!((lo - 1.45).abs() < 1e-12);
                assert!((hi - 9.55).abs() < 1e-12);
            }
            other => panic!("unexpected summary {other:?}"),
        }
    }

    #[test]
    fn empty_distribution_is_an_error() {
        assert_eq!(
            summarize_distribution(&[], SummaryStyle::MeanMinMax).unwrap_err(),
            StatsError::EmptyDistribution
        );
    }

    #[test]
    fn clustering_of_triangle_is_one() {
        let g = undirected(&[("a", "b"), ("b", "c"), ("a", "c")]);
        assert_eq!(average_local_clustering(&g).unwrap(), 1.0);
    }

    #[test]
    fn clustering_of_star_is_zero() {
        let g = undirected(&[("h", "a"), ("h", "b"), ("h", "c"), ("h", "d")]);
        assert_eq!(average_local_clustering(&g).unwrap(), 0.0);
    }

    #[test]
    fn clustering_of_triangle_with_pendant() {
        let g = undirected(&[("a", "b"), ("b", "c"), ("a", "c"), ("a", "d")]);
        let got = average_local_clustering(&g).unwrap();
        assert!((got - 7.0 / 12.0).abs() < 1e-12);
    }

    #[test]
    fn self_loops_do_not_count_toward_clustering() {
        let with_loop = Graph::build(
            GraphKind::undirected(false),
            &[],
            &[
                ("a".into(), "b".into(), None),
                ("b".into(), "c".into(), None),
                ("a".into(), "c".into(), None),
                ("a".into(), "a".into(), None),
            ],
            None,
        )
        .unwrap();
        assert_eq!(average_local_clustering(&with_loop).unwrap(), 1.0);
    }

    #[test]
    fn path_graph_is_connected_with_diameter_three() {
        let g = undirected(&[("a", "b"), ("b", "c"), ("c", "d")]);
        let report = connectivity_report(&g, &StatsConfig::default()).unwrap();
        assert!(report.is_connected);
        assert_eq!(report.n_components, 1);
        assert_eq!(report.diameter, Some(3));
        assert_eq!(report.largest_component_diameter, None);
        assert_eq!(report.fraction_in_largest, 1.0);
    }

    #[test]
    fn two_disjoint_links_make_two_components() {
        let g = undirected(&[("a", "b"), ("c", "d")]);
        let report = connectivity_report(&g, &StatsConfig::default()).unwrap();
        assert!(!report.is_connected);
        assert_eq!(report.n_components, 2);
        assert_eq!(report.fraction_in_largest, 0.5);
        assert_eq!(
            report.component_sizes,
            DistributionSummary::ValueList {
                values: vec![2.0, 2.0]
            }
        );
        assert_eq!(report.diameter, None);
        assert_eq!(report.largest_component_diameter, Some(1));
    }

    #[test]
    fn single_node_is_connected_with_diameter_zero() {
        let g = Graph::build(GraphKind::undirected(false), &["a".into()], &[], None).unwrap();
        let report = connectivity_report(&g, &StatsConfig::default()).unwrap();
        assert!(report.is_connected);
        assert_eq!(report.diameter, Some(0));
    }

    #[test]
    fn diameter_budget_skips_computation() {
        let g = undirected(&[("a", "b"), ("b", "c")]);
        let config = StatsConfig {
            diameter_budget: 2,
            ..StatsConfig::default()
        };
        let report = connectivity_report(&g, &config).unwrap();
        assert!(report.diameter_skipped);
        assert_eq!(report.diameter, None);
        assert_eq!(report.largest_component_diameter, None);
    }

    #[test]
    fn star_assortativity_is_minus_one() {
        let g = undirected(&[("h", "a"), ("h", "b"), ("h", "c")]);
        let r = degree_assortativity(&g).unwrap().unwrap();
        assert!((r - (-1.0)).abs() < 1e-12);
    }

    #[test]
    fn path_assortativity_is_minus_half() {
        let g = undirected(&[("a", "b"), ("b", "c"), ("c", "d")]);
        let r = degree_assortativity(&g).unwrap().unwrap();
        assert!((r - (-0.5)).abs() < 1e-12);
    }

    #[test]
    fn regular_graph_assortativity_is_undefined() {
        let g = undirected(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]);
        assert_eq!(degree_assortativity(&g).unwrap(), None);
    }

    #[test]
    fn reciprocity_counts_reverse_pairs() {
        let g = directed(&[("a", "b"), ("b", "a"), ("b", "c")]);
        let f = bidirectional_fraction(&g).unwrap();
        assert!((f - 2.0 / 3.0).abs() < 1e-12);

        let single = directed(&[("a", "b")]);
        assert_eq!(bidirectional_fraction(&single).unwrap(), 0.0);

        let looped = directed(&[("a", "a")]);
        assert_eq!(bidirectional_fraction(&looped).unwrap(), 1.0);
    }

    #[test]
    fn reciprocity_requires_directed_graph() {
        let g = undirected(&[("a", "b")]);
        assert_eq!(
            bidirectional_fraction(&g).unwrap_err(),
            StatsError::NotDirected
        );
    }

    #[test]
    fn signed_fraction_counts_strictly_negative() {
        assert_eq!(
            signed_negative_fraction(&[1.0, -1.0, -1.0, 1.0]).unwrap(),
            0.5
        );
        assert_eq!(signed_negative_fraction(&[2.0, 3.0]).unwrap(), 0.0);
        assert_eq!(
            signed_negative_fraction(&[1.0, 0.0]).unwrap_err(),
            StatsError::ZeroWeight
        );
    }

    #[test]
    fn panel_fields_follow_graph_kind() {
        let g = undirected(&[("a", "b"), ("b", "c")]);
        let panel = structure_panel(&g, &StatsConfig::default()).unwrap();
        assert!(panel.degree.is_some());
        assert!(panel.degree_in.is_none());
        assert!(panel.bidirectional_fraction.is_none());

        let d = directed(&[("a", "b"), ("b", "a"), ("b", "c")]);
        let panel = structure_panel(&d, &StatsConfig::default()).unwrap();
        assert!(panel.degree.is_none());
        assert!(panel.degree_in.is_some());
        assert!(panel.degree_out.is_some());
        assert!(panel.degree_undirected.is_some());
        assert!(panel.bidirectional_fraction.is_some());
    }

    #[test]
    fn panel_marks_signed_weighted_graphs() {
        let g = Graph::build(
            GraphKind::undirected(true),
            &[],
            &[
                ("a".into(), "b".into(), Some(1.0)),
                ("b".into(), "c".into(), Some(-2.0)),
            ],
            None,
        )
        .unwrap();
        let panel = structure_panel(&g, &StatsConfig::default()).unwrap();
        assert_eq!(panel.signed_negative_fraction, Some(0.5));

        let positive = Graph::build(
            GraphKind::undirected(true),
            &[],
            &[("a".into(), "b".into(), Some(1.0))],
            None,
        )
        .unwrap();
        let panel = structure_panel(&positive, &StatsConfig::default()).unwrap();
        assert_eq!(panel.signed_negative_fraction, None);
    }

    #[test]
    fn panel_reports_bipartite_counts_and_split_degrees() {
        let nodes: Vec<String> = ["p1", "p2", "q1", "q2", "q3", "q4"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let links: Vec<_> = [("p1", "q1"), ("p1", "q2"), ("p2", "q3"), ("p2", "q4")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string(), None))
            .collect();
        let first: Vec<String> = vec!["p1".into(), "p2".into()];
        let second: Vec<String> = vec!["q1".into(), "q2".into(), "q3".into(), "q4".into()];
        let g = Graph::build(
            GraphKind::undirected(false),
            &nodes,
            &links,
            Some((&first, &second)),
        )
        .unwrap();

        let panel = structure_panel(&g, &StatsConfig::default()).unwrap();
        assert_eq!(panel.bipartite_counts, Some((2, 4)));
        assert!(panel.bipartite_degrees.is_none());

        let config = StatsConfig {
            split_bipartite_degrees: true,
            ..StatsConfig::default()
        };
        let panel = structure_panel(&g, &config).unwrap();
        let (a, b) = panel.bipartite_degrees.unwrap();
        assert_eq!(
            a,
            DistributionSummary::ValueList {
                values: vec![2.0, 2.0]
            }
        );
        assert_eq!(
            b,
            DistributionSummary::ValueList {
                values: vec![1.0, 1.0, 1.0, 1.0]
            }
        );
    }

    #[test]
    fn empty_graph_has_no_panel() {
        let g = Graph::build(GraphKind::undirected(false), &[], &[], None).unwrap();
        assert_eq!(
            structure_panel(&g, &StatsConfig::default()).unwrap_err(),
            StatsError::EmptyGraph
        );
    }

    #[test]
    fn undirected_mean_degree_is_two_m_over_n() {
        let g = undirected(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")]);
        let panel = structure_panel(&g, &StatsConfig::default()).unwrap();
        let mean = panel.degree.unwrap().center();
        let expected = 2.0 * g.n_links() as f64 / g.n_nodes() as f64;
        assert!((mean - expected).abs() <= 1e-12 * expected.abs());
    }
}
