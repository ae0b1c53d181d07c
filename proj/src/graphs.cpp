#include "tgraph/graphs.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tgraph {

// ---------------------------------------------------------------- LabeledGraph

LabeledGraph::LabeledGraph(int n) : n_(n)
{
    if (n < 0)
        throw GraphError("graph order must be non-negative");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

LabeledGraph::LabeledGraph(int n, std::span<const Edge> edges) : LabeledGraph(n)
{
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n)
            throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (u == v)
            throw GraphError("loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (adj_[slot(u, v)])
            throw GraphError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[slot(u, v)] = adj_[slot(v, u)] = 1;
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

void LabeledGraph::check_vertex(int v) const
{
    if (v < 1 || v > n_)
        throw GraphError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

bool LabeledGraph::adjacent(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj_[slot(u, v)] != 0;
}

int LabeledGraph::degree(int v) const
{
    check_vertex(v);
    int d = 0;
    for (int w = 1; w <= n_; ++w)
        d += adj_[slot(v, w)];
    return d;
}

std::vector<int> LabeledGraph::degrees() const
{
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : edges_) {
        ++d[static_cast<std::size_t>(u - 1)];
        ++d[static_cast<std::size_t>(v - 1)];
    }
    return d;
}

std::vector<int> LabeledGraph::neighbors(int v) const
{
    check_vertex(v);
    std::vector<int> out;
    for (int w = 1; w <= n_; ++w)
        if (adj_[slot(v, w)])
            out.push_back(w);
    return out;
}

std::vector<std::vector<int>> LabeledGraph::components() const
{
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n_; ++s) {
        if (comp[static_cast<std::size_t>(s - 1)] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s - 1)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (int w = 1; w <= n_; ++w) {
                if (adj_[slot(u, w)] && comp[static_cast<std::size_t>(w - 1)] < 0) {
                    comp[static_cast<std::size_t>(w - 1)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool LabeledGraph::connected() const
{
    return n_ <= 1 || components().size() == 1;
}

LabeledGraph LabeledGraph::with_edge(int u, int v) const
{
    auto e = edges_;
    e.emplace_back(u, v);
    return LabeledGraph(n_, e);
}

LabeledGraph LabeledGraph::without_edge(int u, int v) const
{
    if (u > v)
        std::swap(u, v);
    auto e = edges_;
    auto it = std::find(e.begin(), e.end(), Edge{u, v});
    if (it == e.end())
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    e.erase(it);
    return LabeledGraph(n_, e);
}

// -------------------------------------------------------------- ThresholdGraph

ThresholdGraph::ThresholdGraph(std::vector<Creation> seq) : seq_(std::move(seq))
{
    for (std::size_t i = 0; i < seq_.size(); ++i)
        if (seq_[i] == Creation::dominating)
            m_ += static_cast<long long>(i);
}

ThresholdGraph ThresholdGraph::from_creation_sequence(std::span<const Creation> seq)
{
    if (seq.empty())
        throw GraphError("creation sequence is empty");
    if (seq.front() != Creation::isolated)
        throw GraphError("creation sequence must start with an isolated vertex");
    return ThresholdGraph(std::vector<Creation>(seq.begin(), seq.end()));
}

ThresholdGraph ThresholdGraph::parse(std::string_view text)
{
    std::vector<Creation> seq;
    seq.reserve(text.size());
    for (char c : text) {
        if (c == 'I' || c == 'i')
            seq.push_back(Creation::isolated);
        else if (c == 'D' || c == 'd')
            seq.push_back(Creation::dominating);
        else
            throw GraphError("creation sequence '" + std::string(text) + "' has a symbol other than I/D");
    }
    return from_creation_sequence(seq);
}

std::vector<int> ThresholdGraph::creation_degrees() const
{
    const int n = order();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int later_dominating = 0;
    for (int i = n - 1; i >= 0; --i) {
        deg[static_cast<std::size_t>(i)] = later_dominating + (seq_[static_cast<std::size_t>(i)] == Creation::dominating ? i : 0);
        if (seq_[static_cast<std::size_t>(i)] == Creation::dominating)
            ++later_dominating;
    }
    return deg;
}

std::vector<int> ThresholdGraph::degree_sequence() const
{
    auto d = creation_degrees();
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool ThresholdGraph::connected() const noexcept
{
    return seq_.size() == 1 || seq_.back() == Creation::dominating;
}

std::string ThresholdGraph::to_string() const
{
    std::string s;
    s.reserve(seq_.size());
    for (auto c : seq_)
        s.push_back(c == Creation::dominating ? 'D' : 'I');
    return s;
}

std::ostream& operator<<(std::ostream& os, const ThresholdGraph& g)
{
    return os << g.to_string();
}

std::vector<int> stepwise_labels(const ThresholdGraph& g)
{
    const auto deg = g.creation_degrees();
    std::vector<int> by_rank(deg.size());
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
        if (deg[static_cast<std::size_t>(a)] != deg[static_cast<std::size_t>(b)])
            return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
        return a > b;
    });
    std::vector<int> label(deg.size());
    for (std::size_t r = 0; r < by_rank.size(); ++r)
        label[static_cast<std::size_t>(by_rank[r])] = static_cast<int>(r) + 1;
    return label;
}

LabeledGraph to_labeled(const ThresholdGraph& g)
{
    const auto label = stepwise_labels(g);
    const auto& seq = g.creation();
    std::vector<LabeledGraph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.size()));
    for (std::size_t j = 0; j < seq.size(); ++j) {
        if (seq[j] != Creation::dominating)
            continue;
        for (std::size_t i = 0; i < j; ++i)
            edges.emplace_back(std::minmax(label[i], label[j]));
    }
    return LabeledGraph(g.order(), edges);
}

bool is_stepwise(const LabeledGraph& g)
{
    const int n = g.order();
    for (int h = 2; h <= n; ++h) {
        for (int k = 1; k < h; ++k) {
            if (!g.adjacent(h, k))
                continue;
            for (int i = 2; i <= h; ++i)
                for (int j = 1; j < i && j <= k; ++j)
                    if (!g.adjacent(i, j))
                        return false;
        }
    }
    return true;
}

// ---------------------------------------------------------- threshold testing

bool has_forbidden_induced_subgraph(const LabeledGraph& g)
{
    const int n = g.order();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    const int v[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y)
                            if (g.adjacent(v[x], v[y])) {
                                ++edges;
                                ++deg[x];
                                ++deg[y];
                            }
                    const bool all_one = deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1;
                    const bool all_two = deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2;
                    const bool no_isolated = deg[0] > 0 && deg[1] > 0 && deg[2] > 0 && deg[3] > 0;
                    if (edges == 2 && all_one)
                        return true; // 2K2
                    if (edges == 4 && all_two)
                        return true; // C4
                    if (edges == 3 && no_isolated && !(deg[0] == 3 || deg[1] == 3 || deg[2] == 3 || deg[3] == 3))
                        return true; // P4
                }
    return false;
}

bool is_threshold(const LabeledGraph& g)
{
    return !has_forbidden_induced_subgraph(g);
}

bool reduces_to_empty(const LabeledGraph& g)
{
    const int n = g.order();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> deg = g.degrees();
    for (int remaining = n; remaining > 0; --remaining) {
        int pick = -1;
        for (int v = 1; v <= n && pick < 0; ++v) {
            const auto i = static_cast<std::size_t>(v - 1);
            if (alive[i] && (deg[i] == 0 || deg[i] == remaining - 1))
                pick = v;
        }
        if (pick < 0)
            return false;
        alive[static_cast<std::size_t>(pick - 1)] = false;
        for (int w = 1; w <= n; ++w)
            if (alive[static_cast<std::size_t>(w - 1)] && g.adjacent(pick, w))
                --deg[static_cast<std::size_t>(w - 1)];
    }
    return true;
}

ThresholdGraph from_degree_sequence(std::span<const int> degrees)
{
    const int n = static_cast<int>(degrees.size());
    if (n == 0)
        throw DegreeSequenceError("degree sequence is empty", 0);
    std::vector<int> rest(degrees.begin(), degrees.end());
    for (int d : rest)
        if (d < 0 || d > n - 1)
            throw DegreeSequenceError("degree " + std::to_string(d) + " impossible on " + std::to_string(n) + " vertices", 0);

    auto describe = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };

    // peeled[i] is the symbol of the vertex removed at step i (last-created first)
    std::vector<Creation> peeled;
    peeled.reserve(static_cast<std::size_t>(n));
    for (int step = 1; !rest.empty(); ++step) {
        std::sort(rest.begin(), rest.end(), std::greater<>());
        const int r = static_cast<int>(rest.size());
        if (r == 1) {
            if (rest.front() != 0)
                throw DegreeSequenceError("step " + std::to_string(step) + ": last vertex has degree " + std::to_string(rest.front()), step);
            peeled.push_back(Creation::isolated);
            rest.clear();
        } else if (rest.front() == r - 1) {
            if (rest.back() == 0)
                throw DegreeSequenceError("step " + std::to_string(step) + ": remaining degrees " + describe(rest) + " have both a dominating and an isolated vertex", step);
            rest.erase(rest.begin());
            for (int& d : rest)
                --d;
            peeled.push_back(Creation::dominating);
        } else if (rest.back() == 0) {
            rest.pop_back();
            peeled.push_back(Creation::isolated);
        } else {
            throw DegreeSequenceError("step " + std::to_string(step) + ": remaining degrees " + describe(rest) + " have no dominating or isolated vertex", step);
        }
    }
    std::reverse(peeled.begin(), peeled.end());
    return ThresholdGraph::from_creation_sequence(peeled);
}

ThresholdGraph to_threshold(const LabeledGraph& g)
{
    // Threshold degree sequences have exactly one realization, so success
    // of the reduction already proves g is that realization.
    const auto d = g.degrees();
    return from_degree_sequence(d);
}

// ------------------------------------------------------------- constructions

namespace {

long long max_edges(int n)
{
    return static_cast<long long>(n) * (n - 1) / 2;
}

void check_connected_range(int n, long long m, const char* what)
{
    if (n < 1)
        throw GraphError(std::string(what) + ": order must be positive");
    if (m < n - 1 || m > max_edges(n))
        throw GraphError(std::string(what) + ": m=" + std::to_string(m) + " outside [" + std::to_string(n - 1) + ", " +
                         std::to_string(max_edges(n)) + "] for n=" + std::to_string(n));
}

void append(std::vector<Creation>& seq, Creation c, long long count)
{
    for (long long i = 0; i < count; ++i)
        seq.push_back(c);
}

} // namespace

SplitParams split_params(int n, long long m)
{
    check_connected_range(n, m, "split_params");
    SplitParams p;
    long long acc = 0;
    while (p.k < n - 1 && acc + (n - (p.k + 1)) <= m) {
        ++p.k;
        acc += n - p.k;
    }
    p.a = m - acc;

    const long long extra = m - n + 1;
    p.kbar = 1;
    long long tri = 0; // sum_{i=1}^{kbar-1} i
    while (tri + p.kbar <= extra) {
        tri += p.kbar;
        ++p.kbar;
    }
    p.abar = extra - tri;
    return p;
}

ThresholdGraph quasi_star(int n, long long m)
{
    const auto p = split_params(n, m);
    std::vector<Creation> seq;
    seq.reserve(static_cast<std::size_t>(n));
    // K_{1,a}: a leaves then the centre; K_{1,0} is a single vertex
    append(seq, Creation::isolated, std::max<long long>(p.a, 1));
    if (p.a > 0)
        seq.push_back(Creation::dominating);
    append(seq, Creation::isolated, n - p.a - p.k - 1);
    append(seq, Creation::dominating, p.k);
    return ThresholdGraph::from_creation_sequence(seq);
}

ThresholdGraph l_graph(int n, long long m)
{
    const auto p = split_params(n, m);
    std::vector<Creation> seq;
    seq.reserve(static_cast<std::size_t>(n));
    if (p.abar == 0) {
        // (K_kbar u (n-kbar-1)K_1) v K_1
        seq.push_back(Creation::isolated);
        append(seq, Creation::dominating, p.kbar - 1);
        append(seq, Creation::isolated, n - p.kbar - 1);
    } else {
        // (K_abar v (K_{kbar-abar} u K_1) u (n-kbar-2)K_1) v K_1
        seq.push_back(Creation::isolated);
        append(seq, Creation::dominating, p.kbar - p.abar - 1);
        seq.push_back(Creation::isolated);
        append(seq, Creation::dominating, p.abar);
        append(seq, Creation::isolated, n - p.kbar - 2);
    }
    if (n > 1)
        seq.push_back(Creation::dominating);
    return ThresholdGraph::from_creation_sequence(seq);
}

ThresholdGraph tilde_s(int n, long long m)
{
    check_connected_range(n, m, "tilde_s");
    for (int k = 0; n - k - 3 >= 0; ++k) {
        const long long target = static_cast<long long>(k) * n - static_cast<long long>(k) * (k + 1) / 2 + 3;
        if (target > m)
            break;
        if (target != m || (k == 0 && n > 3))
            continue; // k = 0 leaves isolated vertices
        std::vector<Creation> seq{Creation::isolated, Creation::dominating, Creation::dominating};
        append(seq, Creation::isolated, n - k - 3);
        append(seq, Creation::dominating, k);
        return ThresholdGraph::from_creation_sequence(seq);
    }
    throw GraphError("tilde_s: m=" + std::to_string(m) + " is not of the form kn - k(k+1)/2 + 3 for n=" + std::to_string(n) +
                     " (a != 3)");
}

// ------------------------------------------------------------------- Ferrers

FerrersMatrix ferrers_matrix(const LabeledGraph& g)
{
    auto d = g.degrees();
    std::sort(d.begin(), d.end(), std::greater<>());
    FerrersMatrix f;
    f.n = g.order();
    f.cells.assign(static_cast<std::size_t>(f.n) * static_cast<std::size_t>(f.n), FerrersCell::empty);
    for (int i = 1; i <= f.n; ++i) {
        int left = d[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= f.n; ++j) {
            auto& cell = f.cells[static_cast<std::size_t>((i - 1) * f.n + (j - 1))];
            if (i == j) {
                cell = FerrersCell::plus;
            } else if (left > 0) {
                cell = FerrersCell::filled;
                --left;
            }
        }
    }
    return f;
}

bool FerrersMatrix::symmetric() const
{
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

std::string FerrersMatrix::to_string() const
{
    std::string s;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            switch (at(i, j)) {
            case FerrersCell::plus: s.push_back('+'); break;
            case FerrersCell::filled: s.push_back('*'); break;
            case FerrersCell::empty: s.push_back('o'); break;
            }
        }
        s.push_back('\n');
    }
    return s;
}

// ------------------------------------------------------------ graph algebra

LabeledGraph join(const LabeledGraph& g1, const LabeledGraph& g2)
{
    const int n1 = g1.order();
    std::vector<LabeledGraph::Edge> e(g1.edges());
    for (auto [u, v] : g2.edges())
        e.emplace_back(u + n1, v + n1);
    for (int u = 1; u <= n1; ++u)
        for (int v = 1; v <= g2.order(); ++v)
            e.emplace_back(u, v + n1);
    return LabeledGraph(n1 + g2.order(), e);
}

LabeledGraph disjoint_union(const LabeledGraph& g1, const LabeledGraph& g2)
{
    const int n1 = g1.order();
    std::vector<LabeledGraph::Edge> e(g1.edges());
    for (auto [u, v] : g2.edges())
        e.emplace_back(u + n1, v + n1);
    return LabeledGraph(n1 + g2.order(), e);
}

LabeledGraph complete_graph(int n)
{
    std::vector<LabeledGraph::Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            e.emplace_back(u, v);
    return LabeledGraph(n, e);
}

LabeledGraph empty_graph(int n)
{
    return LabeledGraph(n);
}

LabeledGraph star_graph(int n)
{
    std::vector<LabeledGraph::Edge> e;
    for (int v = 2; v <= n; ++v)
        e.emplace_back(1, v);
    return LabeledGraph(n, e);
}

LabeledGraph path_graph(int n)
{
    std::vector<LabeledGraph::Edge> e;
    for (int v = 1; v < n; ++v)
        e.emplace_back(v, v + 1);
    return LabeledGraph(n, e);
}

LabeledGraph cycle_graph(int n)
{
    if (n < 3)
        throw GraphError("cycle needs at least 3 vertices");
    auto e = path_graph(n).edges();
    e.emplace_back(1, n);
    return LabeledGraph(n, e);
}

// ----------------------------------------------------------------------- I/O

std::string format_edge_list(const LabeledGraph& g)
{
    std::string s = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

LabeledGraph parse_edge_list(std::istream& in)
{
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m))
        throw GraphError("edge list: missing 'n m' header");
    if (n < 0 || m < 0 || n > 100000)
        throw GraphError("edge list: bad header");
    std::vector<LabeledGraph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u = 0;
        int v = 0;
        if (!(in >> u >> v))
            throw GraphError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
        if (u >= v)
            throw GraphError("edge list: line " + std::to_string(i + 2) + " must have u < v");
        edges.emplace_back(u, v);
    }
    std::string trailing;
    if (in >> trailing)
        throw GraphError("edge list: unexpected trailing token '" + trailing + "'");
    return LabeledGraph(static_cast<int>(n), edges);
}

LabeledGraph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

} // namespace tgraph
