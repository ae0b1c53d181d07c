#include "tgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tgraph {

void DenseMatrix::multiply(std::span<const double> x, std::span<double> y) const
{
    for (int i = 0; i < n_; ++i) {
        const double* row = data_.data() + index(i, 0);
        double s = 0.0;
        for (int j = 0; j < n_; ++j)
            s += row[j] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
}

bool DenseMatrix::symmetric() const noexcept
{
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool DenseMatrix::nonnegative() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](double v) { return v >= 0.0; });
}

DenseMatrix alpha_matrix(const LabeledGraph& g, Alpha alpha)
{
    const double a = alpha.value();
    // 1 - alpha evaluated exactly before rounding
    const auto rest = Alpha::Rational(1) - alpha.exact();
    const double b = static_cast<double>(rest.numerator()) / static_cast<double>(rest.denominator());
    DenseMatrix m(g.order());
    const auto deg = g.degrees();
    for (int v = 0; v < g.order(); ++v)
        m(v, v) = a * deg[static_cast<std::size_t>(v)];
    for (auto [u, v] : g.edges()) {
        m(u - 1, v - 1) = b;
        m(v - 1, u - 1) = b;
    }
    return m;
}

DenseMatrix signless_laplacian(const LabeledGraph& g)
{
    DenseMatrix m(g.order());
    const auto deg = g.degrees();
    for (int v = 0; v < g.order(); ++v)
        m(v, v) = deg[static_cast<std::size_t>(v)];
    for (auto [u, v] : g.edges()) {
        m(u - 1, v - 1) = 1.0;
        m(v - 1, u - 1) = 1.0;
    }
    return m;
}

namespace {

double residual_inf(const DenseMatrix& m, std::span<const double> x, double rho)
{
    std::vector<double> y(x.size());
    m.multiply(x, y);
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        r = std::max(r, std::abs(y[i] - rho * x[i]));
    return r;
}

} // namespace

Spectrum dominant_eigenpair(const DenseMatrix& m, const SolverOptions& opts)
{
    const int n = m.rows();
    if (n == 0)
        throw std::invalid_argument("dominant_eigenpair: empty matrix");
    if (n == 1)
        return Spectrum{m(0, 0), {1.0}, 0, 0.0};

    // A shift of at least 1/2 keeps -rho away from +rho for bipartite blocks at alpha = 0.
    double shift = 0.5;
    for (int i = 0; i < n; ++i)
        shift = std::max(shift, m(i, i));

    const auto un = static_cast<std::size_t>(n);
    std::vector<double> x(un, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(un);
    double previous = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::infinity();

    for (long it = 1; it <= opts.max_iterations; ++it) {
        m.multiply(x, y);
        const double rq = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        residual = 0.0;
        for (std::size_t i = 0; i < un; ++i)
            residual = std::max(residual, std::abs(y[i] - rq * x[i]));

        if (residual <= opts.residual_tolerance &&
            std::abs(rq - previous) <= opts.rayleigh_tolerance * std::max(1.0, std::abs(rq)))
            return Spectrum{rq, x, it, residual};
        previous = rq;

        double norm = 0.0;
        for (std::size_t i = 0; i < un; ++i) {
            y[i] += shift * x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < un; ++i)
            x[i] = y[i] / norm;
    }
    throw NonConvergence("power iteration did not converge after " + std::to_string(opts.max_iterations) +
                             " iterations (residual " + std::to_string(residual) + ")",
                         residual, opts.max_iterations);
}

Spectrum spectral_radius(const LabeledGraph& g, Alpha alpha, const SolverOptions& opts)
{
    const int n = g.order();
    if (n < 1)
        throw GraphError("spectral_radius: empty graph");
    const DenseMatrix full = alpha_matrix(g, alpha);
    const auto comps = g.components();
    if (comps.size() == 1)
        return dominant_eigenpair(full, opts);

    Spectrum best;
    best.rho = -1.0;
    long iterations = 0;
    std::size_t best_comp = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& comp = comps[c];
        const int k = static_cast<int>(comp.size());
        DenseMatrix sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                sub(i, j) = full(comp[static_cast<std::size_t>(i)] - 1, comp[static_cast<std::size_t>(j)] - 1);
        Spectrum s = dominant_eigenpair(sub, opts);
        iterations += s.iterations;
        if (s.rho > best.rho) {
            best = std::move(s);
            best_comp = c;
        }
    }

    Spectrum out;
    out.rho = best.rho;
    out.iterations = iterations;
    out.perron.assign(static_cast<std::size_t>(n), 0.0);
    const auto& comp = comps[best_comp];
    for (std::size_t i = 0; i < comp.size(); ++i)
        out.perron[static_cast<std::size_t>(comp[i] - 1)] = best.perron[i];
    out.residual = residual_inf(full, out.perron, out.rho);
    return out;
}

Spectrum spectral_radius(const ThresholdGraph& g, Alpha alpha, const SolverOptions& opts)
{
    return spectral_radius(to_labeled(g), alpha, opts);
}

double signless_laplacian_radius(const LabeledGraph& g)
{
    return 2.0 * spectral_radius(g, Alpha(1, 2)).rho;
}

double q_upper_bound(int n, long long m)
{
    if (n < 2)
        throw GraphError("q_upper_bound: needs n >= 2");
    return 2.0 * static_cast<double>(m) / (n - 1) + n - 2;
}

QuotientMatrix quotient_matrix(const DenseMatrix& m, const std::vector<std::vector<int>>& partition, double tolerance)
{
    const int n = m.rows();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty())
            throw PartitionError("partition block " + std::to_string(b) + " is empty");
        for (int v : partition[b]) {
            if (v < 0 || v >= n)
                throw PartitionError("partition index " + std::to_string(v) + " out of range");
            if (owner[static_cast<std::size_t>(v)] >= 0)
                throw PartitionError("index " + std::to_string(v) + " appears in two blocks");
            owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end())
        throw PartitionError("partition does not cover every index");

    const int k = static_cast<int>(partition.size());
    QuotientMatrix q{partition, DenseMatrix(k), true};
    for (int bi = 0; bi < k; ++bi) {
        const auto& rows = partition[static_cast<std::size_t>(bi)];
        for (int bj = 0; bj < k; ++bj) {
            const auto& cols = partition[static_cast<std::size_t>(bj)];
            std::vector<double> sums;
            sums.reserve(rows.size());
            for (int r : rows) {
                double s = 0.0;
                for (int c : cols)
                    s += m(r, c);
                sums.push_back(s);
            }
            const double avg = std::accumulate(sums.begin(), sums.end(), 0.0) / static_cast<double>(sums.size());
            q.entries(bi, bj) = avg;
            for (double s : sums)
                if (std::abs(s - avg) > tolerance)
                    q.equitable = false;
        }
    }
    return q;
}

namespace {

template <class T>
using Poly = std::vector<T>; // lowest degree first

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b)
{
    Poly<T> c(a.size() + b.size() - 1, T{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

template <class T>
void poly_add(Poly<T>& acc, const Poly<T>& p, int sign)
{
    if (acc.size() < p.size())
        acc.resize(p.size(), T{});
    for (std::size_t i = 0; i < p.size(); ++i)
        acc[i] += sign > 0 ? p[i] : -p[i];
}

template <class T>
Poly<T> det_poly(const std::vector<std::vector<Poly<T>>>& a)
{
    const std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    Poly<T> det{T{}};
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Poly<T>>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly<T>> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col)
                    row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        poly_add(det, poly_mul(a[0][col], det_poly(minor)), col % 2 == 0 ? 1 : -1);
    }
    return det;
}

template <class T>
std::vector<T> characteristic(const DenseMatrix& m, auto convert)
{
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<std::vector<Poly<T>>> a(n, std::vector<Poly<T>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const T entry = convert(m(static_cast<int>(i), static_cast<int>(j)));
            a[i][j] = i == j ? Poly<T>{-entry, T{1}} : Poly<T>{-entry};
        }
    auto p = det_poly(a);
    p.resize(n + 1, T{});
    std::reverse(p.begin(), p.end());
    return p;
}

} // namespace

CharPoly char_poly(const DenseMatrix& m)
{
    const int n = m.rows();
    if (n < 1 || n > 6)
        throw std::invalid_argument("char_poly: size " + std::to_string(n) + " outside 1..6");

    bool integral = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v != std::nearbyint(v) || std::abs(v) > 1e9)
                integral = false;
        }

    CharPoly out;
    if (integral) {
        auto exact = characteristic<long long>(m, [](double v) { return static_cast<long long>(std::llround(v)); });
        out.coefficients.assign(exact.begin(), exact.end());
        out.exact = std::move(exact);
    } else {
        out.coefficients = characteristic<double>(m, [](double v) { return v; });
    }
    return out;
}

CharPoly char_poly(const QuotientMatrix& q)
{
    return char_poly(q.entries);
}

std::vector<PerronViolation> perron_order_check(const LabeledGraph& g, Alpha alpha, double equal_tolerance)
{
    if (!g.connected())
        throw GraphError("perron_order_check: graph is disconnected");
    const int n = g.order();
    const auto x = spectral_radius(g, alpha).perron;
    auto val = [&](int v) { return x[static_cast<std::size_t>(v - 1)]; };

    std::vector<PerronViolation> out;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            bool u_has_extra = false; // some w in N(u)\{v} not in N(v)\{u}
            bool v_has_extra = false;
            for (int w = 1; w <= n; ++w) {
                if (w == u || w == v)
                    continue;
                const bool in_u = g.adjacent(u, w);
                const bool in_v = g.adjacent(v, w);
                u_has_extra |= in_u && !in_v;
                v_has_extra |= in_v && !in_u;
            }
            using K = PerronViolation::Kind;
            if (!u_has_extra && !v_has_extra) {
                if (std::abs(val(u) - val(v)) > equal_tolerance)
                    out.push_back({u, v, K::equal_neighbourhood, val(u), val(v)});
            } else if (u_has_extra && !v_has_extra) {
                if (!(val(u) > val(v)))
                    out.push_back({u, v, K::strict_containment, val(u), val(v)});
            } else if (v_has_extra && !u_has_extra) {
                if (!(val(v) > val(u)))
                    out.push_back({v, u, K::strict_containment, val(v), val(u)});
            }
        }
    }

    const auto deg = g.degrees();
    if (std::is_sorted(deg.begin(), deg.end(), std::greater<>()) && is_threshold(g)) {
        for (int v = 1; v < n; ++v)
            if (val(v) < val(v + 1) - equal_tolerance)
                out.push_back({v, v + 1, PerronViolation::Kind::degree_order, val(v), val(v + 1)});
    }
    return out;
}

} // namespace tgraph
