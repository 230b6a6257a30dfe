#ifndef CDANS_TYPES_HPP
#define CDANS_TYPES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cdans {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct SingularConditioning : Error {
    using Error::Error;
};
struct NumericalError : Error {
    using Error::Error;
};
struct InternalInvariantViolation : Error {
    using Error::Error;
};
struct UndefinedMetric : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};
struct VersionError : Error {
    using Error::Error;
};

/// Parse failure carrying 0-based coordinates of the offending cell/token.
struct ParseError : Error {
    ParseError(const std::string& what, long row_, long column_)
        : Error(what), row(row_), column(column_) {}
    long row = -1;
    long column = -1;
};

// ---------------------------------------------------------------------------
// Graph nodes
// ---------------------------------------------------------------------------

/// A node of the window graph: either a (variable, lag) pair with
/// lag 0 meaning contemporaneous, or the surrogate time-index node C.
struct NodeId {
    static constexpr int kSurrogateVar = -1;

    int var = 0;
    int lag = 0;

    static NodeId lagged(int var, int lag) { return NodeId{var, lag}; }
    static NodeId contemporaneous(int var) { return NodeId{var, 0}; }
    static NodeId surrogate() { return NodeId{kSurrogateVar, 0}; }

    bool is_surrogate() const { return var == kSurrogateVar; }
    bool is_lag0() const { return !is_surrogate() && lag == 0; }

    friend bool operator==(const NodeId& a, const NodeId& b) {
        return a.var == b.var && a.lag == b.lag;
    }
    friend bool operator!=(const NodeId& a, const NodeId& b) { return !(a == b); }

    // Canonical ordering: (variable index, lag) with the surrogate last.
    friend bool operator<(const NodeId& a, const NodeId& b) {
        if (a.is_surrogate() != b.is_surrogate()) return b.is_surrogate();
        if (a.var != b.var) return a.var < b.var;
        return a.lag < b.lag;
    }
};

std::string to_string(const NodeId& n);

/// Orientation mark of a present edge, relative to the canonical endpoint
/// order of its EdgeKey. Absent edges are simply not stored.
enum class Mark : std::uint8_t {
    Undirected,
    DirectedAB,  // key.a -> key.b
    DirectedBA,  // key.b -> key.a
};

/// Unordered node pair in canonical order (a < b).
struct EdgeKey {
    NodeId a;
    NodeId b;

    EdgeKey(NodeId u, NodeId v) {
        if (u == v) throw InvalidInput("edge endpoints must differ: " + to_string(u));
        if (v < u) std::swap(u, v);
        a = u;
        b = v;
    }

    friend bool operator==(const EdgeKey& x, const EdgeKey& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const EdgeKey& x, const EdgeKey& y) {
        if (x.a < y.a) return true;
        if (y.a < x.a) return false;
        return x.b < y.b;
    }
};

/// A present edge with its mark, as returned by WindowGraph::edges().
struct Edge {
    EdgeKey key;
    Mark mark;

    bool directed() const { return mark != Mark::Undirected; }
    NodeId source() const { return mark == Mark::DirectedBA ? key.b : key.a; }
    NodeId target() const { return mark == Mark::DirectedBA ? key.a : key.b; }
};

// ---------------------------------------------------------------------------
// WindowGraph
// ---------------------------------------------------------------------------

/// Mixed graph over (variable, lag) nodes for lags 0..tau_max plus the
/// surrogate node C. Structural rules enforced on every mutation:
///   - every edge touches at least one lag-0 node (no lagged-lagged or
///     C-lagged edges), no self loops;
///   - directed edges never point into C and never from a smaller to a
///     larger lag.
class WindowGraph {
  public:
    WindowGraph(int n_vars, int tau_max);

    int n_vars() const { return n_vars_; }
    int tau_max() const { return tau_max_; }

    void set_undirected(NodeId u, NodeId v);
    void set_directed(NodeId from, NodeId to);
    void remove_edge(NodeId u, NodeId v);

    bool has_edge(NodeId u, NodeId v) const;
    std::optional<Mark> mark(NodeId u, NodeId v) const;
    bool is_directed(NodeId from, NodeId to) const;
    bool is_undirected(NodeId u, NodeId v) const;

    std::size_t edge_count() const { return edges_.size(); }
    std::vector<Edge> edges() const;

    /// Neighbors of u in canonical order (any mark counts as adjacency).
    std::vector<NodeId> neighbors(NodeId u) const;
    /// Lag-0 variable indices adjacent to the lag-0 node of `var`
    /// (the surrogate is not included).
    std::vector<int> lag0_neighbor_vars(int var) const;
    /// Lag-0 variable indices adjacent to the surrogate node.
    std::vector<int> changing_modules() const;

    /// Full invariant check; throws InternalInvariantViolation on failure.
    void validate() const;

    friend bool operator==(const WindowGraph& a, const WindowGraph& b) {
        return a.n_vars_ == b.n_vars_ && a.tau_max_ == b.tau_max_ && a.edges_ == b.edges_;
    }

  private:
    void check_node(NodeId n) const;
    void check_pair(NodeId u, NodeId v) const;

    int n_vars_;
    int tau_max_;
    std::map<EdgeKey, Mark> edges_;
};

// ---------------------------------------------------------------------------
// SummaryGraph
// ---------------------------------------------------------------------------

/// Edge of the lag-collapsed summary graph. Endpoints are variable indices
/// with kSurrogate = -1 standing for C; undirected edges are stored with
/// from <= to.
struct SummaryEdge {
    static constexpr int kSurrogate = NodeId::kSurrogateVar;

    int from = 0;
    int to = 0;
    bool directed = true;
    std::set<int> lags;

    friend bool operator==(const SummaryEdge& a, const SummaryEdge& b) {
        return a.from == b.from && a.to == b.to && a.directed == b.directed && a.lags == b.lags;
    }
};

struct SummaryGraph {
    int n_vars = 0;
    int tau_max = 0;
    std::vector<std::string> names;  // size n_vars; "C" is implicit
    std::vector<SummaryEdge> edges;  // deterministic canonical order

    friend bool operator==(const SummaryGraph& a, const SummaryGraph& b) {
        return a.n_vars == b.n_vars && a.tau_max == b.tau_max && a.edges == b.edges;
    }
};

/// Collapses a window graph into its summary graph: a window edge from
/// (var i, lag tau) into (var j, lag 0) contributes lag tau to the summary
/// edge i->j; contemporaneous and C edges map at lag 0; marks are preserved.
SummaryGraph summary_from_window(const WindowGraph& g, std::vector<std::string> names = {});

// ---------------------------------------------------------------------------
// Dataset
// ---------------------------------------------------------------------------

/// Immutable multivariate series: T rows (time) by N columns (variables).
/// Construction rejects non-finite values, duplicate/empty names and
/// zero-variance columns.
class TimeSeriesDataset {
  public:
    TimeSeriesDataset(std::vector<std::string> names, Eigen::MatrixXd values,
                      std::string metadata = {});

    int n_vars() const { return static_cast<int>(values_.cols()); }
    Eigen::Index length() const { return values_.rows(); }

    const std::vector<std::string>& names() const { return names_; }
    const Eigen::MatrixXd& values() const { return values_; }
    const std::string& metadata() const { return metadata_; }

    Eigen::VectorXd column(int var) const { return values_.col(var); }

    /// The surrogate time-index column: c_t = t / T, monotone in [0, 1).
    Eigen::VectorXd surrogate_column() const;

  private:
    std::vector<std::string> names_;
    Eigen::MatrixXd values_;
    std::string metadata_;
};

// ---------------------------------------------------------------------------
// Discovery configuration
// ---------------------------------------------------------------------------

enum class CiTestKind : std::uint8_t { PartialCorrelation, Kci };

std::string to_string(CiTestKind k);

struct KciParams {
    enum class BandwidthRule : std::uint8_t { MedianHeuristic, Fixed };
    enum class NullMethod : std::uint8_t { Gamma, Permutation };

    BandwidthRule bandwidth_rule = BandwidthRule::MedianHeuristic;
    double fixed_bandwidth = 1.0;
    NullMethod null_method = NullMethod::Gamma;
    int permutation_count = 500;
    // Ridge strength for kernel regression, relative to the mean diagonal of
    // the conditioning Gram matrix.
    double ridge_epsilon = 1e-3;

    void validate() const;
};

struct DiscoveryConfig {
    int tau_max = 1;
    double alpha_lagged = 0.05;
    double alpha_contemp = 0.05;
    CiTestKind lagged_test = CiTestKind::PartialCorrelation;
    CiTestKind contemp_test = CiTestKind::Kci;
    int max_condset = 3;
    KciParams kci;
    std::uint64_t seed = 0;

    void validate() const;

    /// Checks the dataset against this config (T >= 3 * (tau_max + 1)).
    void validate_against(const TimeSeriesDataset& data) const;
};

}  // namespace cdans

#endif  // CDANS_TYPES_HPP
