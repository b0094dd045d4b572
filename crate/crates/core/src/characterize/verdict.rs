use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// The outcome of a structural test: a certificate when the property holds
/// and a concrete witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<C> {
    Holds(C),
    Fails(Witness),
}

impl<C> Verdict<C> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            Verdict::Holds(c) => Some(c),
            Verdict::Fails(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds(_) => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn map<D>(self, f: impl FnOnce(C) -> D) -> Verdict<D> {
        match self {
            Verdict::Holds(c) => Verdict::Holds(f(c)),
            Verdict::Fails(w) => Verdict::Fails(w),
        }
    }
}

/// Serialized as `{"value": bool, "certificate": ...}` or
/// `{"value": bool, "witness": ...}`.
impl<C: Serialize> Serialize for Verdict<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("value", &self.holds())?;
        match self {
            Verdict::Holds(c) => m.serialize_entry("certificate", c)?,
            Verdict::Fails(w) => m.serialize_entry("witness", w)?,
        }
        m.end()
    }
}

/// A cover relation or bipartite edge, as `(lower, upper)` ids.
pub type Edge = (String, String);

/// Why a structural test failed. Elements are given by id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Rank `rank` has fewer elements than rank `rank + 1`.
    ShrinkingLayers { rank: usize, lower: usize, upper: usize },
    /// The non-maximal elements of rank `rank` and the elements of rank
    /// `rank + 1` differ in number.
    UnbalancedLayer {
        rank: usize,
        non_maximal: usize,
        upper: usize,
    },
    /// `elements` have only the smaller set `neighbors` as possible partners,
    /// so no perfect matching exists.
    HallViolation {
        rank: Option<usize>,
        elements: Vec<String>,
        neighbors: Vec<String>,
    },
    /// Two saturated chains as in the named recombination condition for
    /// which no recombined chain exists.
    ChainPair {
        condition: String,
        first: Vec<String>,
        second: Vec<String>,
    },
    /// Different numbers of minimal and maximal elements.
    MinimalMaximalMismatch { minimal: usize, maximal: usize },
    /// No decomposition into disjoint maximal chains admits a labeling with
    /// every cover going from a lower to a higher label. `cycle` lists covers
    /// forming a cycle of chains in the first decomposition explored.
    NoCompatibleLabeling { cycle: Vec<Edge> },
    /// Two edges with no edge between their endpoints.
    TwoK2 { layer: Option<usize>, edges: [Edge; 2] },
    /// A vertex with no edges.
    IsolatedVertex { layer: Option<usize>, vertex: String },
    /// A maximal element below the top rank.
    Impure {
        element: String,
        rank: usize,
        top_rank: usize,
    },
    /// The two sides of a bipartite graph differ in size.
    UnequalSides { bottom: usize, top: usize },
    /// Two different perfect matchings.
    MultiplePerfectMatchings { first: Vec<Edge>, second: Vec<Edge> },
    /// Edges `a_i b_j` and `a_j b_k` are present but `a_i b_k` is not.
    NotTransitive { present: [Edge; 2], missing: Edge },
    /// Cohen-Macaulay with a linear resolution, yet no isomorphism to the
    /// poset of isotone maps `[rank] -> [width]` was found.
    NotIsomorphic { rank: usize, width: usize },
}
