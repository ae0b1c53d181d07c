#include <doctest.h>

#include "tgraph/search.hpp"
#include "tgraph/spectra.hpp"

#include <Eigen/Dense>

#include <cmath>

using namespace tgraph;

namespace {

double eigen_largest(const DenseMatrix& m)
{
    Eigen::MatrixXd e(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            e(i, j) = m(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

// quotient matrices are not symmetric in general
double eigen_largest_general(const DenseMatrix& m)
{
    Eigen::MatrixXd e(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            e(i, j) = m(i, j);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(e, false);
    return solver.eigenvalues().real().maxCoeff();
}

const Alpha half(1, 2);

} // namespace

TEST_SUITE("A_alpha matrix")
{
    TEST_CASE("K2 at one half")
    {
        const auto m = alpha_matrix(complete_graph(2), half);
        CHECK(m(0, 0) == 0.5);
        CHECK(m(0, 1) == 0.5);
        CHECK(m(1, 0) == 0.5);
        CHECK(m(1, 1) == 0.5);
    }

    TEST_CASE("complete graph entries")
    {
        const Alpha a(3, 4);
        const auto m = alpha_matrix(complete_graph(5), a);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK(m(i, j) == doctest::Approx(i == j ? 0.75 * 4 : 0.25));
    }

    TEST_CASE("one half gives half the signless Laplacian")
    {
        const auto g = to_labeled(quasi_star(7, 11));
        const auto a = alpha_matrix(g, half);
        const auto q = signless_laplacian(g);
        CHECK(a.symmetric());
        CHECK(a.nonnegative());
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                CHECK(a(i, j) == doctest::Approx(q(i, j) / 2));
    }
}

TEST_SUITE("spectral radius")
{
    TEST_CASE("closed forms")
    {
        for (int n = 2; n <= 9; ++n)
            for (const Alpha a : {Alpha(0, 1), Alpha(1, 3), half, Alpha(9, 10)})
                CHECK(spectral_radius(complete_graph(n), a).rho == doctest::Approx(n - 1).epsilon(1e-12));
        CHECK(spectral_radius(star_graph(5), Alpha(0, 1)).rho == doctest::Approx(2.0).epsilon(1e-12));
        for (int n = 2; n <= 10; ++n)
            CHECK(spectral_radius(star_graph(n), half).rho == doctest::Approx(n / 2.0).epsilon(1e-12));
        CHECK(spectral_radius(LabeledGraph(1), half).rho == 0.0);
        CHECK(spectral_radius(ThresholdGraph::parse("IDDDDI"), half).rho == doctest::Approx(4.0));
    }

    TEST_CASE("bipartite graphs converge at alpha = 0")
    {
        CHECK(spectral_radius(path_graph(2), Alpha(0, 1)).rho == doctest::Approx(1.0));
        CHECK(spectral_radius(cycle_graph(6), Alpha(0, 1)).rho == doctest::Approx(2.0));
        CHECK(spectral_radius(path_graph(5), Alpha(0, 1)).rho == doctest::Approx(std::sqrt(3.0)));
    }

    TEST_CASE("Perron vector is a unit nonnegative eigenvector")
    {
        const auto g = to_labeled(quasi_star(9, 17));
        const auto s = spectral_radius(g, Alpha(3, 5));
        double norm = 0.0;
        for (double x : s.perron) {
            CHECK(x >= 0.0);
            norm += x * x;
        }
        CHECK(norm == doctest::Approx(1.0));
        CHECK(s.residual <= 1e-10);
        const auto m = alpha_matrix(g, Alpha(3, 5));
        std::vector<double> y(9);
        m.multiply(s.perron, y);
        for (int i = 0; i < 9; ++i)
            CHECK(std::abs(y[static_cast<std::size_t>(i)] - s.rho * s.perron[static_cast<std::size_t>(i)]) <= 1e-9);
    }

    TEST_CASE("disconnected input uses the dominant component")
    {
        const auto g = disjoint_union(star_graph(3), complete_graph(4));
        const auto s = spectral_radius(g, half);
        CHECK(s.rho == doctest::Approx(3.0));
        for (int i = 0; i < 3; ++i)
            CHECK(s.perron[static_cast<std::size_t>(i)] == 0.0);
        CHECK(s.perron[3] == doctest::Approx(0.5));
        CHECK(spectral_radius(empty_graph(3), half).rho == 0.0);
    }

    TEST_CASE("agrees with a dense symmetric eigensolver on every graph with n <= 6")
    {
        for (int n = 1; n <= 6; ++n)
            for (const auto& level : graph_classes_by_size(n))
                for (const auto& g : level)
                    for (const Alpha a : {Alpha(0, 1), Alpha(1, 4), half, Alpha(3, 4), Alpha(9, 10)}) {
                        const double ours = spectral_radius(g, a).rho;
                        const double oracle = eigen_largest(alpha_matrix(g, a));
                        CHECK(std::abs(ours - oracle) <= 1e-9 * std::max(1.0, oracle));
                    }
    }

    TEST_CASE("agrees with the dense solver on larger threshold graphs")
    {
        for (int n = 10; n <= 30; n += 5)
            for (long long m = n - 1; m <= 3LL * n; m += 4)
                for (const Alpha a : {Alpha(0, 1), half, Alpha(3, 4)}) {
                    const auto g = to_labeled(quasi_star(n, m));
                    CHECK(std::abs(spectral_radius(g, a).rho - eigen_largest(alpha_matrix(g, a))) <= 1e-9 * n);
                }
    }

    TEST_CASE("iteration cap raises NonConvergence")
    {
        SolverOptions tight;
        tight.max_iterations = 2;
        CHECK_THROWS_AS((void)spectral_radius(to_labeled(quasi_star(12, 20)), Alpha(0, 1), tight), NonConvergence);
    }
}

TEST_SUITE("signless Laplacian bounds")
{
    TEST_CASE("closed-form bound values")
    {
        for (int n = 2; n <= 12; ++n) {
            CHECK(q_upper_bound(n, n - 1) == doctest::Approx(n));
            CHECK(q_upper_bound(n, static_cast<long long>(n) * (n - 1) / 2) == doctest::Approx(2.0 * (n - 1)));
        }
        CHECK(q_upper_bound(6, 10) == doctest::Approx(8.0));
        CHECK_THROWS_AS((void)q_upper_bound(1, 0), GraphError);
    }

    TEST_CASE("every connected graph in H_{6,10} respects the bound")
    {
        for (const auto& g : enumerate_all({6, 10, true, Universe::all}))
            CHECK(signless_laplacian_radius(g) <= 8.0 + 1e-9);
    }

    TEST_CASE("quasi-stars at 2n-2 and 2n-1 edges")
    {
        CHECK(signless_laplacian_radius(to_labeled(quasi_star(10, 18))) >= 11.6);
        CHECK(signless_laplacian_radius(to_labeled(quasi_star(10, 19))) >= 11.75);
        CHECK(signless_laplacian_radius(complete_graph(7)) == doctest::Approx(12.0));
    }
}

TEST_SUITE("quotient matrices")
{
    std::vector<std::vector<int>> range_block(int lo, int hi) // 1-based inclusive, as one block
    {
        std::vector<int> b;
        for (int v = lo; v <= hi; ++v)
            b.push_back(v - 1);
        return {b};
    }

    TEST_CASE("S_{n,2n-2} three-block partition")
    {
        for (int n = 5; n <= 12; ++n) {
            const auto q = signless_laplacian(to_labeled(quasi_star(n, 2LL * n - 2)));
            std::vector<std::vector<int>> pi{{0, 1}, {2, 3}};
            pi.push_back(range_block(5, n)[0]);
            const auto qm = quotient_matrix(q, pi);
            CHECK(qm.equitable);
            const double expect[3][3] = {{double(n), 2, double(n - 4)}, {2, 4, 0}, {2, 0, 2}};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    CHECK(qm.entries(i, j) == expect[i][j]);
            const auto cp = char_poly(qm);
            REQUIRE(cp.exact);
            CHECK(*cp.exact == std::vector<long long>{1, -n - 6, 4LL * n + 12, -24});
            CHECK(eigen_largest(q) == doctest::Approx(eigen_largest_general(qm.entries)).epsilon(1e-12));
        }
    }

    TEST_CASE("S_{n,2n-1} four-block partition")
    {
        for (int n = 6; n <= 12; ++n) {
            const auto q = signless_laplacian(to_labeled(quasi_star(n, 2LL * n - 1)));
            std::vector<std::vector<int>> pi{{0, 1}, {2}, {3, 4}};
            pi.push_back(range_block(6, n)[0]);
            const auto qm = quotient_matrix(q, pi);
            CHECK(qm.equitable);
            const auto cp = char_poly(qm);
            REQUIRE(cp.exact);
            CHECK(*cp.exact == std::vector<long long>{1, -n - 9, 7LL * n + 28, -10LL * n - 64, 72});
        }
    }

    TEST_CASE("singletons reproduce the matrix")
    {
        const auto m = alpha_matrix(to_labeled(quasi_star(5, 6)), Alpha(3, 4));
        std::vector<std::vector<int>> pi;
        for (int i = 0; i < 5; ++i)
            pi.push_back({i});
        const auto qm = quotient_matrix(m, pi);
        CHECK(qm.equitable);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK(qm.entries(i, j) == m(i, j));
    }

    TEST_CASE("non-equitable partitions are flagged, malformed ones rejected")
    {
        const auto q = signless_laplacian(path_graph(4));
        CHECK_FALSE(quotient_matrix(q, {{0, 1}, {2, 3}}).equitable);
        CHECK(quotient_matrix(q, {{0, 3}, {1, 2}}).equitable);
        CHECK_THROWS_AS((void)quotient_matrix(q, {{0, 1}, {1, 2, 3}}), PartitionError);
        CHECK_THROWS_AS((void)quotient_matrix(q, {{0, 1}, {2}}), PartitionError);
        CHECK_THROWS_AS((void)quotient_matrix(q, {{0, 1, 2, 3}, {}}), PartitionError);
    }

    TEST_CASE("characteristic polynomials")
    {
        DenseMatrix one(1);
        one(0, 0) = 7;
        CHECK(*char_poly(one).exact == std::vector<long long>{1, -7});
        const auto k3 = signless_laplacian(complete_graph(3)); // eigenvalues 4, 1, 1
        CHECK(*char_poly(k3).exact == std::vector<long long>{1, -6, 9, -4});
        DenseMatrix frac(2);
        frac(0, 0) = 0.5;
        frac(1, 1) = 0.25;
        const auto cp = char_poly(frac);
        CHECK_FALSE(cp.exact);
        CHECK(cp.coefficients[1] == doctest::Approx(-0.75));
        CHECK(cp.coefficients[2] == doctest::Approx(0.125));
        CHECK_THROWS((void)char_poly(DenseMatrix(7)));
    }
}

TEST_SUITE("Perron vector ordering")
{
    TEST_CASE("quasi-star at one half")
    {
        const auto g = to_labeled(quasi_star(6, 9));
        CHECK(perron_order_check(g, half).empty());
        const auto x = spectral_radius(g, half).perron;
        CHECK(x[0] == doctest::Approx(x[1]).epsilon(1e-12));
        for (int i = 3; i < 6; ++i)
            CHECK(x[2] == doctest::Approx(x[static_cast<std::size_t>(i)]).epsilon(1e-12));
    }

    TEST_CASE("complete graph and star")
    {
        CHECK(perron_order_check(complete_graph(6), Alpha(3, 4)).empty());
        const auto x = spectral_radius(star_graph(6), Alpha(1, 4)).perron;
        for (int i = 1; i < 6; ++i)
            CHECK(x[0] > x[static_cast<std::size_t>(i)]);
        CHECK(perron_order_check(star_graph(6), Alpha(0, 1)).empty());
    }

    TEST_CASE("disconnected input is rejected")
    {
        CHECK_THROWS_AS((void)perron_order_check(empty_graph(3), half), GraphError);
    }
}
