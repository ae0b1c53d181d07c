#pragma once

#include "tgraph/alpha.hpp"
#include "tgraph/graphs.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgraph {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Universe { threshold, all };

/// H_{n,m} (connected_only) or G_{n,m}, restricted to threshold graphs or not.
struct FamilySpec {
    int n = 0;
    long long m = 0;
    bool connected_only = true;
    Universe universe = Universe::threshold;

    /// Throws FamilyError for an infeasible (n, m) or an ALL universe above n = 7.
    void validate() const;
    [[nodiscard]] char letter() const noexcept { return connected_only ? 'H' : 'G'; }
};

inline constexpr int max_exhaustive_order = 7;

/// Canonical creation sequences in lexicographic order (isolated < dominating).
[[nodiscard]] std::vector<ThresholdGraph> enumerate_threshold(const FamilySpec& f);

/// One representative per isomorphism class, each in canonical labelling.
[[nodiscard]] std::vector<LabeledGraph> enumerate_all(const FamilySpec& f);

/// All isomorphism classes on n <= 7 vertices, indexed by edge count.
[[nodiscard]] std::vector<std::vector<LabeledGraph>> graph_classes_by_size(int n);

/// Relabelling minimising the upper-triangle bit string; n <= 7.
[[nodiscard]] LabeledGraph canonical_form(const LabeledGraph& g);

/// "1-2|1-3|..." for labelled graphs; the creation sequence for threshold ones.
[[nodiscard]] std::string edge_key(const LabeledGraph& g);

struct SearchOptions {
    unsigned threads = 1;
};

struct VerificationReport {
    FamilySpec family;
    Alpha alpha;
    std::vector<std::string> maximizers; // sorted canonical keys
    std::vector<std::string> expected;   // empty when no claim is checked
    double rho_max = 0.0;
    double tie_gap = 0.0;                // +inf when every member is a maximizer
    std::size_t family_size = 0;
    bool matches_theorem = true;
    bool outside_hypothesis = false;
    std::vector<std::string> warnings;
    std::chrono::duration<double> elapsed{};
};

/// Near-tie band reported as a warning rather than silently classified.
inline constexpr double near_tie_band = 1e-6;

[[nodiscard]] VerificationReport argmax_rho(const FamilySpec& f, Alpha alpha, const SearchOptions& opts = {});

/// m from n-1 to 2n-2 over connected threshold graphs: S_{n,m} alone, except
/// {S_{n,n+2}, tilde S_{n,n+2}} at alpha = 1/2.
[[nodiscard]] std::vector<VerificationReport> verify_theorem_41(int n_lo, int n_hi, std::span<const Alpha> alphas,
                                                                const SearchOptions& opts = {});

/// m = 2n-2 at alpha = 1/2 over all threshold graphs: K_5 u K_1 at n = 6,
/// S_{n,2n-2} otherwise.
[[nodiscard]] std::vector<VerificationReport> verify_theorem_12(int n_lo, int n_hi, const SearchOptions& opts = {});

/// Lower bound on n for the rank-r statement: (30r - 63 + 5 sqrt(32r^2 - 136r + 137)) / 2.
[[nodiscard]] double theorem_42_order_bound(int r);

/// (r-1)n - r(r-1)/2 < m <= rn - r(r+1)/2; the tie case is m = (r-1)n - r(r-1)/2 + 3.
[[nodiscard]] std::vector<VerificationReport> verify_theorem_42(int r, int n, std::span<const Alpha> alphas,
                                                                const SearchOptions& opts = {});

struct Lemma24Result {
    bool holds = false;
    double all_max = 0.0;
    double threshold_max = 0.0;
    std::vector<std::string> all_maximizers;
    bool maximizers_threshold = false;
    VerificationReport report; // over the ALL universe
};

/// Compares the best connected graph with the best connected threshold graph; n <= 7.
[[nodiscard]] Lemma24Result verify_lemma_24(int n, long long m, Alpha alpha);

struct ExtremalAudit {
    int kappa = 0;                    // max j with a_{j+1,j} = 1
    std::map<int, int> delta;         // j -> #{i > j : d(v_i) = j}, nonzero entries only
    std::optional<int> s;             // largest s with d(v_{r+s}) >= r+1
    std::optional<int> theta;         // d(v_{r+s}) - r
    bool identity_holds = false;      // n == sum delta + kappa
};

/// Throws GraphError for disconnected or single-vertex input.
[[nodiscard]] ExtremalAudit audit(const ThresholdGraph& g, int r);

/// `family=H,n=6,m=8,alpha=1/2 rho=... maximizers=a;b tie_gap=... ok=1`
[[nodiscard]] std::string format_record(const VerificationReport& r);

} // namespace tgraph
