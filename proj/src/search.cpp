#include "tgraph/search.hpp"

#include "tgraph/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace tgraph {

namespace {

long long max_edges(int n)
{
    return static_cast<long long>(n) * (n - 1) / 2;
}

using Clock = std::chrono::steady_clock;

} // namespace

void FamilySpec::validate() const
{
    if (n < 1)
        throw FamilyError("family: order must be positive");
    if (n > 64)
        throw FamilyError("family: order " + std::to_string(n) + " too large for enumeration");
    const long long lo = connected_only ? n - 1 : 0;
    if (m < lo || m > max_edges(n))
        throw FamilyError("family: m=" + std::to_string(m) + " infeasible for n=" + std::to_string(n) + " (range " +
                          std::to_string(lo) + ".." + std::to_string(max_edges(n)) + ")");
    if (universe == Universe::all && n > max_exhaustive_order)
        throw FamilyError("family: exhaustive enumeration of all graphs limited to n <= " +
                          std::to_string(max_exhaustive_order));
}

// ------------------------------------------------------------- threshold walk

std::vector<ThresholdGraph> enumerate_threshold(const FamilySpec& f)
{
    f.validate();
    if (f.universe != Universe::threshold)
        throw FamilyError("enumerate_threshold: universe must be threshold");

    const int n = f.n;
    // reach[i] = largest edge count positions i..n (1-based) can still add
    std::vector<long long> reach(static_cast<std::size_t>(n) + 2, 0);
    for (int i = n; i >= 2; --i)
        reach[static_cast<std::size_t>(i)] = reach[static_cast<std::size_t>(i) + 1] + (i - 1);

    std::vector<ThresholdGraph> out;
    std::vector<Creation> seq(static_cast<std::size_t>(n), Creation::isolated);

    auto walk = [&](auto&& self, int pos, long long edges) -> void {
        if (edges > f.m || edges + reach[static_cast<std::size_t>(pos)] < f.m)
            return;
        if (pos > n) {
            if (!f.connected_only || n == 1 || seq.back() == Creation::dominating)
                out.push_back(ThresholdGraph::from_creation_sequence(seq));
            return;
        }
        auto& slot = seq[static_cast<std::size_t>(pos - 1)];
        if (!(f.connected_only && pos == n && n > 1)) {
            slot = Creation::isolated;
            self(self, pos + 1, edges);
        }
        slot = Creation::dominating;
        self(self, pos + 1, edges + (pos - 1));
        slot = Creation::isolated;
    };
    walk(walk, 2, 0);
    return out;
}

// ---------------------------------------------------- general graphs, n <= 7

namespace {

int edge_index(int u, int v) // 0-based, u < v
{
    return v * (v - 1) / 2 + u;
}

struct PermutationTable {
    int n = 0;
    int edge_count = 0;
    std::vector<std::vector<std::uint8_t>> maps; // per permutation: edge -> edge
};

const PermutationTable& permutations_for(int n)
{
    static std::mutex mutex;
    static std::map<int, PermutationTable> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    PermutationTable t;
    t.n = n;
    t.edge_count = n * (n - 1) / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint8_t> map(static_cast<std::size_t>(t.edge_count));
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                int a = perm[static_cast<std::size_t>(u)];
                int b = perm[static_cast<std::size_t>(v)];
                if (a > b)
                    std::swap(a, b);
                map[static_cast<std::size_t>(edge_index(u, v))] = static_cast<std::uint8_t>(edge_index(a, b));
            }
        t.maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache.emplace(n, std::move(t)).first->second;
}

std::uint32_t canonical_mask(std::uint32_t mask, const PermutationTable& t)
{
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (const auto& map : t.maps) {
        std::uint32_t image = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const int e = std::countr_zero(rest);
            image |= std::uint32_t{1} << map[static_cast<std::size_t>(e)];
        }
        best = std::min(best, image);
    }
    return best;
}

std::uint32_t mask_of(const LabeledGraph& g)
{
    std::uint32_t mask = 0;
    for (auto [u, v] : g.edges())
        mask |= std::uint32_t{1} << edge_index(u - 1, v - 1);
    return mask;
}

LabeledGraph graph_of(int n, std::uint32_t mask)
{
    std::vector<LabeledGraph::Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (mask & (std::uint32_t{1} << edge_index(u, v)))
                edges.emplace_back(u + 1, v + 1);
    return LabeledGraph(n, edges);
}

const std::vector<std::vector<std::uint32_t>>& class_masks(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<std::uint32_t>>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    const auto& perms = permutations_for(n);
    std::vector<std::vector<std::uint32_t>> levels(static_cast<std::size_t>(perms.edge_count) + 1);
    levels[0] = {0};
    for (int m = 1; m <= perms.edge_count; ++m) {
        std::set<std::uint32_t> found;
        for (std::uint32_t base : levels[static_cast<std::size_t>(m - 1)])
            for (int e = 0; e < perms.edge_count; ++e) {
                const std::uint32_t bit = std::uint32_t{1} << e;
                if (!(base & bit))
                    found.insert(canonical_mask(base | bit, perms));
            }
        levels[static_cast<std::size_t>(m)].assign(found.begin(), found.end());
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(levels)).first->second;
}

void check_small(int n)
{
    if (n < 1 || n > max_exhaustive_order)
        throw FamilyError("exhaustive enumeration needs 1 <= n <= " + std::to_string(max_exhaustive_order));
}

} // namespace

LabeledGraph canonical_form(const LabeledGraph& g)
{
    check_small(g.order());
    return graph_of(g.order(), canonical_mask(mask_of(g), permutations_for(g.order())));
}

std::vector<std::vector<LabeledGraph>> graph_classes_by_size(int n)
{
    check_small(n);
    std::vector<std::vector<LabeledGraph>> out;
    for (const auto& level : class_masks(n)) {
        out.emplace_back();
        for (auto mask : level)
            out.back().push_back(graph_of(n, mask));
    }
    return out;
}

std::vector<LabeledGraph> enumerate_all(const FamilySpec& f)
{
    f.validate();
    if (f.universe != Universe::all)
        throw FamilyError("enumerate_all: universe must be all");
    std::vector<LabeledGraph> out;
    for (auto mask : class_masks(f.n)[static_cast<std::size_t>(f.m)]) {
        auto g = graph_of(f.n, mask);
        if (!f.connected_only || g.connected())
            out.push_back(std::move(g));
    }
    return out;
}

std::string edge_key(const LabeledGraph& g)
{
    if (g.edges().empty())
        return "E";
    std::string s;
    for (auto [u, v] : g.edges()) {
        if (!s.empty())
            s.push_back('|');
        s += std::to_string(u) + "-" + std::to_string(v);
    }
    return s;
}

// ----------------------------------------------------------------- argmax

namespace {

std::vector<double> radii(const std::vector<LabeledGraph>& graphs, Alpha alpha, unsigned threads)
{
    std::vector<double> rho(graphs.size(), 0.0);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, graphs.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    constexpr std::size_t chunk = 16;

    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(chunk);
                if (begin >= graphs.size())
                    return;
                const std::size_t end = std::min(graphs.size(), begin + chunk);
                for (std::size_t i = begin; i < end; ++i)
                    rho[i] = spectral_radius(graphs[i], alpha).rho;
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next.store(graphs.size());
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return rho;
}

std::string format_double(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

VerificationReport reduce(const FamilySpec& f, Alpha alpha, const std::vector<std::string>& keys,
                          const std::vector<double>& rho, Clock::time_point start)
{
    VerificationReport r;
    r.family = f;
    r.alpha = alpha;
    r.family_size = keys.size();
    r.rho_max = *std::max_element(rho.begin(), rho.end());
    double best_other = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] >= r.rho_max - rho_tolerance)
            r.maximizers.push_back(keys[i]);
        else
            best_other = std::max(best_other, rho[i]);
    }
    r.tie_gap = r.rho_max - best_other;
    if (std::isfinite(r.tie_gap) && r.tie_gap < near_tie_band)
        r.warnings.push_back("near tie: gap " + format_double(r.tie_gap) + " below " + format_double(near_tie_band));
    r.elapsed = Clock::now() - start;
    return r;
}

} // namespace

VerificationReport argmax_rho(const FamilySpec& f, Alpha alpha, const SearchOptions& opts)
{
    const auto start = Clock::now();
    f.validate();
    std::vector<LabeledGraph> graphs;
    std::vector<std::string> keys;
    if (f.universe == Universe::threshold) {
        for (const auto& g : enumerate_threshold(f)) {
            graphs.push_back(to_labeled(g));
            keys.push_back(g.to_string());
        }
    } else {
        graphs = enumerate_all(f);
        for (const auto& g : graphs)
            keys.push_back(edge_key(g));
    }
    if (graphs.empty())
        throw FamilyError("family is empty");
    return reduce(f, alpha, keys, radii(graphs, alpha, opts.threads), start);
}

namespace {

std::vector<std::string> expected_keys(std::vector<ThresholdGraph> graphs)
{
    std::sort(graphs.begin(), graphs.end());
    graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
    std::vector<std::string> keys;
    for (const auto& g : graphs)
        keys.push_back(g.to_string());
    return keys;
}

void require_half_or_more(std::span<const Alpha> alphas, const char* what)
{
    for (const auto& a : alphas)
        if (!a.at_least_half())
            throw FamilyError(std::string(what) + ": alpha " + a.to_string() + " below 1/2 is outside the claim");
}

VerificationReport check(const FamilySpec& f, Alpha alpha, std::vector<ThresholdGraph> expected,
                         const SearchOptions& opts)
{
    auto r = argmax_rho(f, alpha, opts);
    r.expected = expected_keys(std::move(expected));
    r.matches_theorem = r.maximizers == r.expected;
    return r;
}

} // namespace

std::vector<VerificationReport> verify_theorem_41(int n_lo, int n_hi, std::span<const Alpha> alphas,
                                                  const SearchOptions& opts)
{
    if (n_lo < 4 || n_hi < n_lo)
        throw FamilyError("verify_theorem_41: needs 4 <= n_lo <= n_hi");
    require_half_or_more(alphas, "verify_theorem_41");
    std::vector<VerificationReport> out;
    for (int n = n_lo; n <= n_hi; ++n)
        for (long long m = n - 1; m <= std::min<long long>(2LL * n - 2, max_edges(n)); ++m)
            for (const auto& alpha : alphas) {
                std::vector<ThresholdGraph> expected{quasi_star(n, m)};
                if (alpha.is_half() && m == n + 2)
                    expected.push_back(tilde_s(n, m));
                out.push_back(check({n, m, true, Universe::threshold}, alpha, std::move(expected), opts));
            }
    return out;
}

std::vector<VerificationReport> verify_theorem_12(int n_lo, int n_hi, const SearchOptions& opts)
{
    if (n_lo < 4 || n_hi < n_lo)
        throw FamilyError("verify_theorem_12: needs 4 <= n_lo <= n_hi");
    std::vector<VerificationReport> out;
    const Alpha half(1, 2);
    for (int n = n_lo; n <= n_hi; ++n) {
        const long long m = 2LL * n - 2;
        auto expected = n == 6 ? ThresholdGraph::parse("IDDDDI") : quasi_star(n, m);
        out.push_back(check({n, m, false, Universe::threshold}, half, {expected}, opts));
    }
    return out;
}

double theorem_42_order_bound(int r)
{
    const double rr = r;
    return (30.0 * rr - 63.0 + 5.0 * std::sqrt(32.0 * rr * rr - 136.0 * rr + 137.0)) / 2.0;
}

std::vector<VerificationReport> verify_theorem_42(int r, int n, std::span<const Alpha> alphas,
                                                  const SearchOptions& opts)
{
    if (r < 3)
        throw FamilyError("verify_theorem_42: needs r >= 3");
    if (r > n - 1)
        throw FamilyError("verify_theorem_42: needs r <= n-1");
    require_half_or_more(alphas, "verify_theorem_42");
    const bool outside = !(n > theorem_42_order_bound(r));
    const long long lo = static_cast<long long>(r - 1) * n - static_cast<long long>(r) * (r - 1) / 2;
    const long long hi = static_cast<long long>(r) * n - static_cast<long long>(r) * (r + 1) / 2;
    const long long tie = lo + 3;

    std::vector<VerificationReport> out;
    for (long long m = lo + 1; m <= hi; ++m)
        for (const auto& alpha : alphas) {
            std::vector<ThresholdGraph> expected{quasi_star(n, m)};
            if (alpha.is_half() && m == tie)
                expected.push_back(tilde_s(n, m));
            auto rep = check({n, m, true, Universe::threshold}, alpha, std::move(expected), opts);
            rep.outside_hypothesis = outside;
            if (outside)
                rep.warnings.push_back("n=" + std::to_string(n) + " not above the order bound " +
                                       format_double(theorem_42_order_bound(r)));
            out.push_back(std::move(rep));
        }
    return out;
}

Lemma24Result verify_lemma_24(int n, long long m, Alpha alpha)
{
    const FamilySpec all{n, m, true, Universe::all};
    const FamilySpec thr{n, m, true, Universe::threshold};
    all.validate();

    Lemma24Result res;
    res.report = argmax_rho(all, alpha);
    res.all_max = res.report.rho_max;
    res.threshold_max = argmax_rho(thr, alpha).rho_max;
    res.all_maximizers = res.report.maximizers;

    res.maximizers_threshold = true;
    for (const auto& g : enumerate_all(all))
        if (std::find(res.all_maximizers.begin(), res.all_maximizers.end(), edge_key(g)) != res.all_maximizers.end())
            res.maximizers_threshold = res.maximizers_threshold && is_threshold(g);

    res.holds = std::abs(res.all_max - res.threshold_max) <= rho_tolerance && res.maximizers_threshold;
    res.report.matches_theorem = res.holds;
    return res;
}

ExtremalAudit audit(const ThresholdGraph& g, int r)
{
    if (!g.connected() || g.order() < 2)
        throw GraphError("audit: needs a connected threshold graph with at least two vertices");
    if (r < 1)
        throw GraphError("audit: r must be positive");
    const auto lab = to_labeled(g);
    const int n = g.order();
    const auto d = lab.degrees(); // non-increasing in stepwise order
    auto deg = [&](int v) { return d[static_cast<std::size_t>(v - 1)]; };

    ExtremalAudit a;
    for (int j = 1; j <= n - 1; ++j)
        if (lab.adjacent(j + 1, j))
            a.kappa = j;
    for (int i = 1; i <= n; ++i) {
        const int j = deg(i);
        if (j >= 1 && j <= a.kappa && i > j)
            ++a.delta[j];
    }

    int high = 0;
    while (high < n && deg(high + 1) >= r + 1)
        ++high;
    if (high - r >= 1) {
        a.s = high - r;
        a.theta = deg(high) - r;
    }

    int total = a.kappa;
    for (auto [j, count] : a.delta)
        total += count;
    a.identity_holds = total == n;
    return a;
}

std::string format_record(const VerificationReport& r)
{
    std::string s = "family=";
    s.push_back(r.family.letter());
    s += ",n=" + std::to_string(r.family.n) + ",m=" + std::to_string(r.family.m) + ",alpha=" + r.alpha.to_string();
    s += " rho=" + format_double(r.rho_max) + " maximizers=";
    for (std::size_t i = 0; i < r.maximizers.size(); ++i)
        s += (i ? ";" : "") + r.maximizers[i];
    s += " tie_gap=" + format_double(r.tie_gap) + " ok=" + (r.matches_theorem ? "1" : "0");
    return s;
}

} // namespace tgraph
