#pragma once

#include "tgraph/alpha.hpp"
#include "tgraph/graphs.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tgraph {

class TransformError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Edge rewirings on the stepwise adjacency matrix of a connected threshold
/// graph. Indices are 1-based positions in to_labeled() order.
///
///   basic: drop v_h v_k, add v_p v_q                      (2 <= q < k < h < p)
///   row:   drop v_h v_{k+j}, add v_{p-j} v_q, j = 0..l   (q < k <= k+l < h < p-l)
///   col:   drop v_{h-j} v_k, add v_p v_{q-j}, j = 0..l   (2 <= q-l <= q < k < h-l <= h < p)
enum class TransformKind { basic, row, col };

struct TransformSpec {
    TransformKind kind = TransformKind::basic;
    int p = 0;
    int q = 0;
    int h = 0;
    int k = 0;
    int l = 0;

    /// "BASIC p q h k", "ROW p q h k l" or "COL p q h k l".
    static TransformSpec parse(std::string_view text);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

struct Validation {
    bool valid = false;
    std::string diagnostic; // first violated clause, empty when valid
    /// Row transformations only: whether the l = 1 wording of the
    /// missing-column clause (rows p-1..p) gives the same verdict as the
    /// general rows p-l..p reading used here.
    bool literal_reading_agrees = true;

    explicit operator bool() const noexcept { return valid; }
};

/// Throws TransformError when an index lies outside 1..n.
[[nodiscard]] Validation validate(const ThresholdGraph& g, const TransformSpec& spec);

/// Result in the labelling of to_labeled(g). Throws TransformError for an invalid spec.
[[nodiscard]] LabeledGraph apply_labeled(const ThresholdGraph& g, const TransformSpec& spec);
/// Canonical form of apply_labeled.
[[nodiscard]] ThresholdGraph apply(const ThresholdGraph& g, const TransformSpec& spec);

enum class Coverage {
    basic_adjacent,   // basic, k = q+1
    row_adjacent,     // row, k = q+1
    col_adjacent,     // col, k = q+1
    basic_gap_two,    // basic, k = q+2, p > h+1: strict increase
    not_covered,
};

[[nodiscard]] std::string to_string(Coverage c);

struct IdentityResiduals {
    double eq1 = 0.0;
    double eq2 = 0.0;
};

struct MonotonicityCertificate {
    TransformSpec spec;
    Alpha alpha;
    Coverage coverage = Coverage::not_covered;
    double rho_before = 0.0;
    double rho_after = 0.0;
    bool predicted_equality = false;
    bool observed_equality = false;
    std::optional<IdentityResiduals> residuals; // single-edge moves only

    /// For covered specs: no decrease beyond 1e-10, strictness above 1e-9
    /// when equality is not predicted, and predicted == observed equality.
    [[nodiscard]] bool holds() const;
};

inline constexpr double monotonicity_slack = 1e-10;

/// Requires a valid spec; alpha below 1/2 is reported as not covered.
[[nodiscard]] MonotonicityCertificate certify(const ThresholdGraph& g, const TransformSpec& spec, Alpha alpha);

/// The two eigen-equation identities of a single-edge move, with (rho1, x)
/// the Perron pair of the host and (rho2, y) that of the result, both in the
/// host's stepwise labelling. Only kinds with l = 0 are accepted.
[[nodiscard]] IdentityResiduals eq12_residuals(const TransformSpec& spec, Alpha alpha, double rho1,
                                               std::span<const double> x, double rho2, std::span<const double> y);
[[nodiscard]] IdentityResiduals eq12_residuals(const ThresholdGraph& g, const TransformSpec& spec, Alpha alpha);

/// Every valid spec of one kind, optionally restricted to k - q == gap.
[[nodiscard]] std::vector<TransformSpec> valid_specs(const ThresholdGraph& g, TransformKind kind,
                                                     std::optional<int> gap = std::nullopt);

} // namespace tgraph
