// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "tgraph/search.hpp"
#include "tgraph/spectra.hpp"
#include "tgraph/transforms.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace tgraph;

namespace {

const Alpha half(1, 2);

struct Outcome {
    bool pass = true;
    std::ostringstream detail; // first few failures

    void fail(const std::string& why)
    {
        if (pass || detail.str().size() < 600)
            detail << "\n    " << why;
        pass = false;
    }
    void expect(bool ok, const std::string& why)
    {
        if (!ok)
            fail(why);
    }
};

unsigned workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ThresholdGraph> connected_threshold_up_to(int n_max)
{
    std::vector<ThresholdGraph> out;
    for (int n = 2; n <= n_max; ++n)
        for (long long m = n - 1; m <= static_cast<long long>(n) * (n - 1) / 2; ++m)
            for (auto& g : enumerate_threshold({n, m, true, Universe::threshold}))
                out.push_back(std::move(g));
    return out;
}

void check_reports(Outcome& o, const std::vector<VerificationReport>& reports)
{
    for (const auto& r : reports) {
        o.expect(r.matches_theorem, "mismatch: " + format_record(r));
        for (const auto& w : r.warnings)
            o.fail("warning: " + w + " in " + format_record(r));
    }
}

Outcome criterion_1()
{
    Outcome o;
    const std::vector<Alpha> alphas{half, Alpha(3, 5), Alpha(3, 4), Alpha(9, 10)};
    const auto reports = verify_theorem_41(4, 12, alphas);
    check_reports(o, reports);
    std::size_t expected_records = 0;
    for (int n = 4; n <= 12; ++n)
        expected_records += static_cast<std::size_t>(n) * alphas.size();
    o.expect(reports.size() == expected_records, "unexpected record count");
    for (const auto& r : reports) {
        // at n = 4 both tie partners are K_4
        const bool tie = r.alpha.is_half() && r.family.m == r.family.n + 2 && r.family.n > 4;
        o.expect(r.maximizers.size() == (tie ? 2u : 1u), "wrong maximizer count: " + format_record(r));
        if (tie) {
            const double gap = std::abs(spectral_radius(quasi_star(r.family.n, r.family.m), half).rho -
                                        spectral_radius(tilde_s(r.family.n, r.family.m), half).rho);
            o.expect(gap <= 1e-9, "tie gap too large at n=" + std::to_string(r.family.n));
            o.expect(l_graph(r.family.n, r.family.m) == tilde_s(r.family.n, r.family.m),
                     "tie partner names differ at n=" + std::to_string(r.family.n));
        }
    }
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    SearchOptions opts;
    opts.threads = workers();
    const auto reports = verify_theorem_12(4, 16, opts);
    check_reports(o, reports);
    o.expect(reports.size() == 13, "unexpected record count");
    for (const auto& r : reports)
        o.expect(r.maximizers == (r.family.n == 6 ? std::vector<std::string>{"IDDDDI"}
                                                  : std::vector<std::string>{quasi_star(r.family.n, 2LL * r.family.n - 2).to_string()}),
                 "unexpected maximizers: " + format_record(r));
    return o;
}

Outcome criterion_3()
{
    Outcome o;
    SearchOptions opts;
    opts.threads = workers();
    const std::vector<Alpha> alphas{half, Alpha(3, 4)};
    o.expect(24 > theorem_42_order_bound(3), "n = 24 is not above the order bound");
    const auto reports = verify_theorem_42(3, 24, alphas, opts);
    check_reports(o, reports);
    o.expect(reports.size() == 2 * 21, "expected m in (45, 66] at two weights");
    for (const auto& r : reports) {
        o.expect(r.family.m > 45 && r.family.m <= 66, "m out of range");
        o.expect(!r.outside_hypothesis, "flagged outside hypothesis");
        const bool tie = r.alpha.is_half() && r.family.m == 48;
        o.expect(r.maximizers.size() == (tie ? 2u : 1u), "wrong maximizer count: " + format_record(r));
        o.expect(r.maximizers.front() == quasi_star(24, r.family.m).to_string() ||
                     r.maximizers.back() == quasi_star(24, r.family.m).to_string(),
                 "quasi-star missing: " + format_record(r));
    }
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    for (int n = 4; n <= 100; ++n) {
        const auto tag = " at n=" + std::to_string(n);
        const auto g2 = to_labeled(quasi_star(n, 2LL * n - 2));
        const double q2 = signless_laplacian_radius(g2);
        o.expect(q2 >= n + 1.6, "q(S_{n,2n-2}) below n+1.6" + tag);
        if (n >= 5) {
            std::vector<std::vector<int>> pi{{0, 1}, {2, 3}, {}};
            for (int v = 4; v < n; ++v)
                pi[2].push_back(v);
            const auto qm = quotient_matrix(signless_laplacian(g2), pi);
            o.expect(qm.equitable, "3-block partition not equitable" + tag);
            o.expect(std::abs(dominant_eigenpair(qm.entries).rho - q2) <= 1e-8, "3-block quotient radius differs" + tag);
            const auto cp = char_poly(qm);
            o.expect(cp.exact && *cp.exact == std::vector<long long>{1, -n - 6, 4LL * n + 12, -24},
                     "cubic coefficients differ" + tag);
        }
        if (2LL * n - 1 > static_cast<long long>(n) * (n - 1) / 2)
            continue; // no such graph at n = 4
        const auto g1 = to_labeled(quasi_star(n, 2LL * n - 1));
        const double q1 = signless_laplacian_radius(g1);
        o.expect(q1 >= n + 1.75, "q(S_{n,2n-1}) below n+1.75" + tag);
        if (n >= 6) {
            std::vector<std::vector<int>> pi{{0, 1}, {2}, {3, 4}, {}};
            for (int v = 5; v < n; ++v)
                pi[3].push_back(v);
            const auto qm = quotient_matrix(signless_laplacian(g1), pi);
            o.expect(qm.equitable, "4-block partition not equitable" + tag);
            o.expect(std::abs(dominant_eigenpair(qm.entries).rho - q1) <= 1e-8, "4-block quotient radius differs" + tag);
            const auto cp = char_poly(qm);
            o.expect(cp.exact && *cp.exact == std::vector<long long>{1, -n - 9, 7LL * n + 28, -10LL * n - 64, 72},
                     "quartic coefficients differ" + tag);
        }
    }
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    const std::vector<Alpha> alphas{half, Alpha(3, 5), Alpha(3, 4), Alpha(9, 10)};
    std::size_t certified = 0;
    std::size_t equalities = 0;
    for (const auto& g : connected_threshold_up_to(10)) {
        std::vector<TransformSpec> specs;
        for (auto kind : {TransformKind::basic, TransformKind::row, TransformKind::col})
            for (const auto& s : valid_specs(g, kind, 1))
                specs.push_back(s);
        for (const auto& s : valid_specs(g, TransformKind::basic, 2))
            if (s.p > s.h + 1)
                specs.push_back(s);
        for (const auto& s : specs)
            for (const auto& a : alphas) {
                const auto c = certify(g, s, a);
                ++certified;
                const auto where = g.to_string() + " " + s.to_string() + " alpha=" + a.to_string();
                o.expect(c.coverage != Coverage::not_covered, "not covered: " + where);
                o.expect(c.holds(), "certificate fails: " + where);
                const bool shape = a.is_half() && s.l == 0 && s.k == s.q + 1 && s.p == s.h + 1 && s.h + 1 == s.q + 3;
                o.expect(c.observed_equality == shape, "equality pattern differs: " + where);
                equalities += c.observed_equality;
                if (c.residuals)
                    o.expect(c.residuals->eq1 <= 1e-8 && c.residuals->eq2 <= 1e-8, "identity residual: " + where);
            }
    }
    o.expect(certified > 0 && equalities > 0, "sweep is empty");

    o.expect(apply(l_graph(7, 12), TransformSpec::parse("ROW 7 2 5 3 1")) == quasi_star(7, 12),
             "row instance does not give S_{7,12}");
    const std::vector<int> d923{8, 7, 7, 7, 4, 4, 4, 4, 1};
    o.expect(apply(from_degree_sequence(d923), TransformSpec::parse("COL 9 3 8 4 1")) == quasi_star(9, 23),
             "column instance does not give S_{9,23}");
    if (o.pass)
        o.detail << " (" << certified << " certificates, " << equalities << " equalities)";
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    for (int n = 2; n <= 7; ++n)
        for (long long m = n - 1; m <= static_cast<long long>(n) * (n - 1) / 2; ++m)
            for (const Alpha a : {Alpha(0, 1), half, Alpha(3, 4)}) {
                const auto r = verify_lemma_24(n, m, a);
                o.expect(r.holds, "threshold maximum differs: " + format_record(r.report));
            }
    return o;
}

Outcome criterion_7()
{
    Outcome o;
    const std::vector<Alpha> alphas{half, Alpha(3, 5), Alpha(3, 4), Alpha(9, 10)};
    for (const auto& g : connected_threshold_up_to(10)) {
        const auto lab = to_labeled(g);
        const auto d = lab.degrees();
        for (const auto& a : alphas) {
            const auto where = g.to_string() + " alpha=" + a.to_string();
            o.expect(perron_order_check(lab, a).empty(), "Perron ordering violated: " + where);
            const auto x = spectral_radius(lab, a).perron;
            for (int i = 0; i + 1 < lab.order(); ++i) {
                const auto ui = static_cast<std::size_t>(i);
                o.expect(x[ui] >= x[ui + 1] - 1e-12, "entries not non-increasing: " + where);
                if (d[ui] == d[ui + 1])
                    o.expect(std::abs(x[ui] - x[ui + 1]) <= 1e-9, "equal degrees, unequal entries: " + where);
            }
        }
    }
    std::size_t equal_cases = 0;
    for (int n = 2; n <= 7; ++n)
        for (long long m = n - 1; m <= static_cast<long long>(n) * (n - 1) / 2; ++m)
            for (const auto& g : enumerate_all({n, m, true, Universe::all})) {
                const double q = signless_laplacian_radius(g);
                const double bound = q_upper_bound(n, m);
                const auto d = g.degrees();
                const bool star = m == n - 1 && std::find(d.begin(), d.end(), n - 1) != d.end();
                const bool complete = m == static_cast<long long>(n) * (n - 1) / 2;
                o.expect(q <= bound + 1e-9, "bound exceeded by " + edge_key(g));
                const bool equal = std::abs(q - bound) <= 1e-9;
                o.expect(equal == (star || complete), "equality pattern differs at " + edge_key(g));
                equal_cases += equal;
            }
    o.expect(equal_cases > 0, "no equality cases seen");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"extremal connected threshold graphs, n=4..12, n-1<=m<=2n-2, four weights", criterion_1},
        {"extremal threshold graphs with 2n-2 edges at alpha=1/2, n=4..16", criterion_2},
        {"rank-3 instance n=24, 45<m<=66, alpha in {1/2, 3/4}", criterion_3},
        {"signless Laplacian bounds, quotients and characteristic polynomials, n=4..100", criterion_4},
        {"transformation monotonicity sweep, n<=10", criterion_5},
        {"threshold maxima equal general maxima, n<=7", criterion_6},
        {"Perron vector structure and the q upper bound", criterion_7},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        char head[64];
        std::snprintf(head, sizeof head, "criterion %zu: %s (%.2fs) ", i + 1, o.pass ? "PASS" : "FAIL", took.count());
        std::cout << head << criteria[i].first << o.detail.str() << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
