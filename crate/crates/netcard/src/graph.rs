//! Immutable in-memory network values.
//!
//! A [`Graph`] is a canonicalized node set plus link set: nodes are kept
//! sorted by identifier, undirected links are stored with their endpoints
//! ordered, and the link list itself is sorted. Two graphs built from the
//! same data in any input order therefore compare equal with `==`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Whether a graph is directed and whether its links carry weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphKind {
    pub directed: bool,
    pub weighted: bool,
}

impl GraphKind {
    pub const fn undirected(weighted: bool) -> Self {
        GraphKind {
            directed: false,
            weighted,
        }
    }

    pub const fn directed(weighted: bool) -> Self {
        GraphKind {
            directed: true,
            weighted,
        }
    }

    /// Human-readable kind description, e.g. `"Undirected, unweighted"`.
    pub fn describe(&self) -> String {
        format!(
            "{}, {}",
            if self.directed {
                "Directed"
            } else {
                "Undirected"
            },
            if self.weighted {
                "weighted"
            } else {
                "unweighted"
            }
        )
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// A single link between two nodes, referenced by index into the node list.
///
/// For undirected graphs `source <= target` always holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Link {
    pub source: usize,
    pub target: usize,
    pub weight: Option<f64>,
}

impl Link {
    pub fn is_self_loop(&self) -> bool {
        self.source == self.target
    }
}

/// Which degree to compute for [`Graph::degree_sequence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    /// Undirected: each incident link once, self-loops twice.
    /// Directed: in-degree + out-degree.
    Total,
    /// Incoming links only (directed graphs).
    In,
    /// Outgoing links only (directed graphs).
    Out,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("link endpoint `{0}` is not in the node list")]
    EndpointUnknown(String),
    #[error("link ({0}, {1}) {2} a weight but the graph kind says otherwise")]
    WeightMismatch(String, String, &'static str),
    #[error("link ({0}, {1}) joins two nodes of the same bipartite set")]
    BipartiteViolation(String, String),
    #[error("bipartite sets are not a disjoint cover of the node set (node `{0}`)")]
    BipartiteCover(String),
    #[error("duplicate link ({0}, {1})")]
    DuplicateLink(String, String),
    #[error("degree mode {0:?} is only valid for directed graphs")]
    ModeInvalid(DegreeMode),
}

/// An immutable network: node set, link set, directedness, optional
/// weights, optional bipartite partition.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    kind: GraphKind,
    nodes: Vec<String>,
    links: Vec<Link>,
    bipartite: Option<(Vec<usize>, Vec<usize>)>,
}

impl Graph {
    /// Build a canonical graph, collapsing duplicate links silently.
    ///
    /// Nodes are the union of `node_ids` and all link endpoints; pass an
    /// empty `node_ids` to infer the node set from the links alone.
    /// Listing a node with no links keeps it as an isolated node.
    pub fn build(
        kind: GraphKind,
        node_ids: &[String],
        links: &[(String, String, Option<f64>)],
        bipartite: Option<(&[String], &[String])>,
    ) -> Result<Graph, GraphError> {
        Self::build_inner(kind, node_ids, links, bipartite, false)
    }

    /// Like [`Graph::build`] but duplicate links are an error instead of
    /// being collapsed.
    pub fn build_strict(
        kind: GraphKind,
        node_ids: &[String],
        links: &[(String, String, Option<f64>)],
        bipartite: Option<(&[String], &[String])>,
    ) -> Result<Graph, GraphError> {
        Self::build_inner(kind, node_ids, links, bipartite, true)
    }

    fn build_inner(
        kind: GraphKind,
        node_ids: &[String],
        links: &[(String, String, Option<f64>)],
        bipartite: Option<(&[String], &[String])>,
        strict: bool,
    ) -> Result<Graph, GraphError> {
        let explicit_nodes = !node_ids.is_empty();
        let mut nodes: Vec<String> = node_ids.to_vec();
        if !explicit_nodes {
            for (s, t, _) in links {
                nodes.push(s.clone());
                nodes.push(t.clone());
            }
        }
        nodes.sort();
        nodes.dedup();

        let index: HashMap<&str, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();

        let lookup = |id: &String| -> Result<usize, GraphError> {
            index
                .get(id.as_str())
                .copied()
                .ok_or_else(|| GraphError::EndpointUnknown(id.clone()))
        };

        let mut canonical: Vec<Link> = Vec::with_capacity(links.len());
        for (s, t, w) in links {
            match (kind.weighted, w) {
                (true, None) => {
                    return Err(GraphError::WeightMismatch(s.clone(), t.clone(), "lacks"))
                }
                (false, Some(_)) => {
                    return Err(GraphError::WeightMismatch(s.clone(), t.clone(), "carries"))
                }
                _ => {}
            }
            let (mut a, mut b) = (lookup(s)?, lookup(t)?);
            if !kind.directed && a > b {
                std::mem::swap(&mut a, &mut b);
            }
            canonical.push(Link {
                source: a,
                target: b,
                weight: *w,
            });
        }

        canonical.sort_by(|x, y| (x.source, x.target).cmp(&(y.source, y.target)));
        let mut deduped: Vec<Link> = Vec::with_capacity(canonical.len());
        for link in canonical {
            match deduped.last() {
                Some(prev) if (prev.source, prev.target) == (link.source, link.target) => {
                    if strict {
                        return Err(GraphError::DuplicateLink(
                            nodes[link.source].clone(),
                            nodes[link.target].clone(),
                        ));
                    }
                    // collapse: the first occurrence wins
                }
                _ => deduped.push(link),
            }
        }

        let bipartite = match bipartite {
            None => None,
            Some((first, second)) => {
                let mut a: Vec<usize> = first.iter().map(&lookup).collect::<Result<_, _>>()?;
                let mut b: Vec<usize> = second.iter().map(&lookup).collect::<Result<_, _>>()?;
                a.sort_unstable();
                a.dedup();
                b.sort_unstable();
                b.dedup();
                let mut membership = vec![None; nodes.len()];
                for &ix in &a {
                    membership[ix] = Some(0u8);
                }
                for &ix in &b {
                    if membership[ix].is_some() {
                        return Err(GraphError::BipartiteCover(nodes[ix].clone()));
                    }
                    membership[ix] = Some(1);
                }
                if let Some(ix) = membership.iter().position(Option::is_none) {
                    return Err(GraphError::BipartiteCover(nodes[ix].clone()));
                }
                for link in &deduped {
                    if !link.is_self_loop() && membership[link.source] == membership[link.target] {
                        return Err(GraphError::BipartiteViolation(
                            nodes[link.source].clone(),
                            nodes[link.target].clone(),
                        ));
                    }
                }
                Some((a, b))
            }
        };

        Ok(Graph {
            kind,
            nodes,
            links: deduped,
            bipartite,
        })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Number of nodes, N.
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Number of links, M (self-loops included).
    pub fn n_links(&self) -> usize {
        self.links.len()
    }

    pub fn n_self_loops(&self) -> usize {
        self.links.iter().filter(|l| l.is_self_loop()).count()
    }

    /// Node identifiers in canonical (sorted) order.
    pub fn node_ids(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_id(&self, ix: usize) -> &str {
        &self.nodes[ix]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.nodes.binary_search_by(|n| n.as_str().cmp(id)).ok()
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn link_weights(&self) -> impl Iterator<Item = f64> + '_ {
        self.links.iter().filter_map(|l| l.weight)
    }

    /// Bipartite node sets as indices, when annotated.
    pub fn bipartite_sets(&self) -> Option<(&[usize], &[usize])> {
        self.bipartite
            .as_ref()
            .map(|(a, b)| (a.as_slice(), b.as_slice()))
    }

    /// Returns the same graph re-annotated with the given bipartite sets.
    pub fn with_bipartite(
        &self,
        first: &[String],
        second: &[String],
    ) -> Result<Graph, GraphError> {
        let links: Vec<(String, String, Option<f64>)> = self
            .links
            .iter()
            .map(|l| {
                (
                    self.nodes[l.source].clone(),
                    self.nodes[l.target].clone(),
                    l.weight,
                )
            })
            .collect();
        Graph::build(self.kind, &self.nodes, &links, Some((first, second)))
    }

    /// Per-node degrees as `(node id, degree)` in node order.
    ///
    /// Undirected total degree counts each incident link once and each
    /// self-loop twice, so the degrees sum to 2M. Directed in/out count a
    /// self-loop once each; total = in + out.
    pub fn degree_sequence(&self, mode: DegreeMode) -> Result<Vec<(&str, usize)>, GraphError> {
        if !self.kind.directed && mode != DegreeMode::Total {
            return Err(GraphError::ModeInvalid(mode));
        }
        let mut deg = vec![0usize; self.nodes.len()];
        for link in &self.links {
            match (self.kind.directed, mode) {
                (false, _) => {
                    deg[link.source] += 1;
                    deg[link.target] += 1;
                }
                (true, DegreeMode::Total) => {
                    deg[link.source] += 1;
                    deg[link.target] += 1;
                }
                (true, DegreeMode::In) => deg[link.target] += 1,
                (true, DegreeMode::Out) => deg[link.source] += 1,
            }
        }
        Ok(self
            .nodes
            .iter()
            .map(String::as_str)
            .zip(deg)
            .collect())
    }

    /// Degrees only, in node order.
    pub fn degrees(&self, mode: DegreeMode) -> Result<Vec<usize>, GraphError> {
        Ok(self
            .degree_sequence(mode)?
            .into_iter()
            .map(|(_, d)| d)
            .collect())
    }

    /// Adjacency lists of the undirected simple skeleton: direction and
    /// weights dropped, self-loops removed, reciprocal links merged.
    /// Neighbor lists are sorted and deduplicated.
    pub fn skeleton_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for link in &self.links {
            if link.is_self_loop() {
                continue;
            }
            adj[link.source].push(link.target);
            adj[link.target].push(link.source);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }
}
