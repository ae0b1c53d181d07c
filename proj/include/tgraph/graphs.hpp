#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tgraph {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 1..n. Immutable once built.
class LabeledGraph {
public:
    /// Always stored with first < second.
    using Edge = std::pair<int, int>;

    LabeledGraph() = default;
    explicit LabeledGraph(int n);
    /// Throws GraphError on loops, repeated edges or out-of-range endpoints.
    LabeledGraph(int n, std::span<const Edge> edges);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] long long size() const noexcept { return static_cast<long long>(edges_.size()); }
    /// Sorted lexicographically.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] bool adjacent(int u, int v) const;
    [[nodiscard]] int degree(int v) const;
    /// Entry v-1 holds the degree of vertex v.
    [[nodiscard]] std::vector<int> degrees() const;
    [[nodiscard]] std::vector<int> neighbors(int v) const;

    [[nodiscard]] bool connected() const;
    /// Components in order of their smallest vertex; each list sorted.
    [[nodiscard]] std::vector<std::vector<int>> components() const;

    [[nodiscard]] LabeledGraph with_edge(int u, int v) const;
    [[nodiscard]] LabeledGraph without_edge(int u, int v) const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    [[nodiscard]] std::size_t slot(int u, int v) const noexcept
    {
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
    }
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adj_;
};

/// How vertex i joins the graph on vertices 1..i-1.
enum class Creation : std::uint8_t { isolated, dominating };

/// Threshold graph stored by its creation sequence. The first symbol is
/// always `isolated`; with that convention the sequence is a complete
/// invariant, so structural equality is sequence equality.
class ThresholdGraph {
public:
    /// Throws GraphError when the sequence is empty or starts with `dominating`.
    static ThresholdGraph from_creation_sequence(std::span<const Creation> seq);
    /// Text form over {I, D}, e.g. "IDDDDI".
    static ThresholdGraph parse(std::string_view text);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(seq_.size()); }
    [[nodiscard]] long long size() const noexcept { return m_; }
    [[nodiscard]] const std::vector<Creation>& creation() const noexcept { return seq_; }

    /// Entry i-1 holds the degree of the i-th created vertex.
    [[nodiscard]] std::vector<int> creation_degrees() const;
    /// Non-increasing.
    [[nodiscard]] std::vector<int> degree_sequence() const;
    [[nodiscard]] bool connected() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const ThresholdGraph&, const ThresholdGraph&) = default;
    friend bool operator==(const ThresholdGraph&, const ThresholdGraph&) = default;

private:
    explicit ThresholdGraph(std::vector<Creation> seq);

    std::vector<Creation> seq_;
    long long m_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ThresholdGraph& g);

/// Relabels by non-increasing degree, ties broken later-created first. The
/// resulting adjacency matrix is stepwise.
[[nodiscard]] LabeledGraph to_labeled(const ThresholdGraph& g);

/// label[i] is the 1-based label that to_labeled gives the (i+1)-th created vertex.
[[nodiscard]] std::vector<int> stepwise_labels(const ThresholdGraph& g);

/// True iff the 0/1 pattern satisfies: a_hk = 1 with h > k forces
/// a_ij = 1 for all j < i <= h, j <= k.
[[nodiscard]] bool is_stepwise(const LabeledGraph& g);

// Three independent threshold tests. is_threshold() uses the first.
[[nodiscard]] bool has_forbidden_induced_subgraph(const LabeledGraph& g); // 2K2, C4 or P4
[[nodiscard]] bool reduces_to_empty(const LabeledGraph& g);              // peel isolated/dominating
[[nodiscard]] bool is_threshold(const LabeledGraph& g);

/// Error from from_degree_sequence, carrying the reduction step that failed.
class DegreeSequenceError : public GraphError {
public:
    DegreeSequenceError(std::string message, int step)
        : GraphError(std::move(message)), step_(step) {}
    [[nodiscard]] int step() const noexcept { return step_; }

private:
    int step_;
};

/// Unique threshold graph with this degree sequence. The sequence is sorted
/// internally; any order is accepted.
[[nodiscard]] ThresholdGraph from_degree_sequence(std::span<const int> degrees);

/// Recovers the canonical form of a labeled threshold graph.
[[nodiscard]] ThresholdGraph to_threshold(const LabeledGraph& g);

struct SplitParams {
    int k = 0;        // largest k <= n-1 with m >= sum_{i=1..k} (n-i)
    long long a = 0;  // m minus that sum
    int kbar = 0;     // largest kbar with m-n+1 >= sum_{i=1..kbar-1} i
    long long abar = 0;
};

[[nodiscard]] SplitParams split_params(int n, long long m);

/// K_k v (K_{1,a} u (n-a-k-1)K_1).
[[nodiscard]] ThresholdGraph quasi_star(int n, long long m);
/// The two-case L_{n,m} family built from kbar and abar.
[[nodiscard]] ThresholdGraph l_graph(int n, long long m);
/// K_k v (K_3 u (n-k-3)K_1); defined only when m = kn - k(k+1)/2 + 3 with n-k-3 >= 0.
[[nodiscard]] ThresholdGraph tilde_s(int n, long long m);

enum class FerrersCell : std::uint8_t { plus, filled, empty };

/// n x n diagram of the degree sequence: '+' on the diagonal, row i has
/// d_i filled cells packed to the left among off-diagonal positions.
struct FerrersMatrix {
    int n = 0;
    std::vector<FerrersCell> cells;

    [[nodiscard]] FerrersCell at(int row, int col) const { return cells[static_cast<std::size_t>((row - 1) * n + (col - 1))]; }
    [[nodiscard]] bool symmetric() const;
    /// Rows of '+', '*', 'o'.
    [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] FerrersMatrix ferrers_matrix(const LabeledGraph& g);

[[nodiscard]] LabeledGraph join(const LabeledGraph& g1, const LabeledGraph& g2);
[[nodiscard]] LabeledGraph disjoint_union(const LabeledGraph& g1, const LabeledGraph& g2);

[[nodiscard]] LabeledGraph complete_graph(int n);
[[nodiscard]] LabeledGraph empty_graph(int n);
[[nodiscard]] LabeledGraph star_graph(int n); // K_{1,n-1}, centre is vertex 1
[[nodiscard]] LabeledGraph path_graph(int n);
[[nodiscard]] LabeledGraph cycle_graph(int n);

/// "n m" followed by one "u v" line per edge, 1-indexed, u < v.
[[nodiscard]] std::string format_edge_list(const LabeledGraph& g);
[[nodiscard]] LabeledGraph parse_edge_list(std::istream& in);
[[nodiscard]] LabeledGraph parse_edge_list(std::string_view text);

} // namespace tgraph
