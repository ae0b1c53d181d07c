#pragma once

#include "tgraph/alpha.hpp"
#include "tgraph/graphs.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tgraph {

/// Dense square matrix, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    [[nodiscard]] int rows() const noexcept { return n_; }
    double& operator()(int i, int j) { return data_[index(i, j)]; }
    double operator()(int i, int j) const { return data_[index(i, j)]; }

    /// y = M x
    void multiply(std::span<const double> x, std::span<double> y) const;
    [[nodiscard]] bool symmetric() const noexcept;
    [[nodiscard]] bool nonnegative() const noexcept;

private:
    [[nodiscard]] std::size_t index(int i, int j) const noexcept
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<double> data_;
};

/// alpha*D + (1-alpha)*A, indexed 0..n-1 for vertices 1..n.
[[nodiscard]] DenseMatrix alpha_matrix(const LabeledGraph& g, Alpha alpha);
/// D + A.
[[nodiscard]] DenseMatrix signless_laplacian(const LabeledGraph& g);

struct Spectrum {
    double rho = 0.0;
    std::vector<double> perron; // unit 2-norm, entrywise >= 0
    long iterations = 0;
    double residual = 0.0;      // ||M x - rho x||_inf
};

struct SolverOptions {
    double rayleigh_tolerance = 1e-13; // relative change of the Rayleigh quotient
    double residual_tolerance = 1e-11;
    long max_iterations = 1'000'000;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double residual, long iterations)
        : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
    [[nodiscard]] double residual() const noexcept { return residual_; }
    [[nodiscard]] long iterations() const noexcept { return iterations_; }

private:
    double residual_;
    long iterations_;
};

/// Dominant eigenpair of a nonnegative irreducible matrix by shifted power
/// iteration from the normalised all-ones vector.
[[nodiscard]] Spectrum dominant_eigenpair(const DenseMatrix& m, const SolverOptions& opts = {});

/// Largest eigenvalue of A_alpha(g) with a nonnegative Perron vector.
/// Disconnected graphs are solved per component; the vector is supported on
/// the first component attaining the maximum.
[[nodiscard]] Spectrum spectral_radius(const LabeledGraph& g, Alpha alpha, const SolverOptions& opts = {});
/// Same, with vertices in stepwise order (see to_labeled).
[[nodiscard]] Spectrum spectral_radius(const ThresholdGraph& g, Alpha alpha, const SolverOptions& opts = {});

/// q(G) = 2 rho_{1/2}(G).
[[nodiscard]] double signless_laplacian_radius(const LabeledGraph& g);

/// 2m/(n-1) + n - 2, an upper bound on q over connected graphs.
[[nodiscard]] double q_upper_bound(int n, long long m);

struct QuotientMatrix {
    std::vector<std::vector<int>> partition; // 0-based row indices
    DenseMatrix entries;                     // block-average row sums
    bool equitable = false;
};

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Blocks are lists of 0-based indices covering 0..n-1 exactly once.
[[nodiscard]] QuotientMatrix quotient_matrix(const DenseMatrix& m, const std::vector<std::vector<int>>& partition,
                                             double tolerance = 1e-12);

struct CharPoly {
    /// Monic, highest degree first: x^k + c1 x^{k-1} + ... + ck.
    std::vector<double> coefficients;
    /// Present when every entry is an integer; then the expansion is exact.
    std::optional<std::vector<long long>> exact;
};

/// det(xI - Q) by cofactor expansion. Sizes above 6 are rejected.
[[nodiscard]] CharPoly char_poly(const QuotientMatrix& q);
[[nodiscard]] CharPoly char_poly(const DenseMatrix& m);

struct PerronViolation {
    int u = 0; // 1-based
    int v = 0;
    enum class Kind { strict_containment, equal_neighbourhood, degree_order } kind{};
    double xu = 0.0;
    double xv = 0.0;
};

/// Checks x_u > x_v when N(u)\{v} strictly contains N(v)\{u}, x_u = x_v when
/// they coincide, and x_1 >= ... >= x_n when g is stepwise. Throws
/// GraphError on disconnected input.
[[nodiscard]] std::vector<PerronViolation> perron_order_check(const LabeledGraph& g, Alpha alpha,
                                                              double equal_tolerance = 1e-9);

/// Comparison tolerance for rho values of different graphs.
inline constexpr double rho_tolerance = 1e-9;

} // namespace tgraph
