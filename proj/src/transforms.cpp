#include "tgraph/transforms.hpp"

#include "tgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tgraph {

TransformSpec TransformSpec::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string word;
    in >> word;
    TransformSpec s;
    int fields = 5;
    if (word == "BASIC" || word == "basic") {
        s.kind = TransformKind::basic;
        fields = 4;
    } else if (word == "ROW" || word == "row") {
        s.kind = TransformKind::row;
    } else if (word == "COL" || word == "col") {
        s.kind = TransformKind::col;
    } else {
        throw TransformError("transform spec: unknown kind '" + word + "'");
    }
    int* slots[] = {&s.p, &s.q, &s.h, &s.k, &s.l};
    for (int i = 0; i < fields; ++i)
        if (!(in >> *slots[i]))
            throw TransformError("transform spec '" + std::string(text) + "': expected " + std::to_string(fields) + " integers");
    std::string extra;
    if (in >> extra)
        throw TransformError("transform spec '" + std::string(text) + "': trailing token '" + extra + "'");
    if (s.l < 0)
        throw TransformError("transform spec: width l must be non-negative");
    return s;
}

std::string TransformSpec::to_string() const
{
    std::string head = kind == TransformKind::basic ? "BASIC" : kind == TransformKind::row ? "ROW" : "COL";
    std::string s = head + " " + std::to_string(p) + " " + std::to_string(q) + " " + std::to_string(h) + " " + std::to_string(k);
    if (kind != TransformKind::basic)
        s += " " + std::to_string(l);
    return s;
}

std::string to_string(Coverage c)
{
    switch (c) {
    case Coverage::basic_adjacent: return "basic-adjacent";
    case Coverage::row_adjacent: return "row-adjacent";
    case Coverage::col_adjacent: return "col-adjacent";
    case Coverage::basic_gap_two: return "basic-gap-two";
    case Coverage::not_covered: return "NOT-COVERED";
    }
    return "?";
}

namespace {

class Checker {
public:
    explicit Checker(const LabeledGraph& g) : g_(g), n_(g.order()) {}

    bool a(int i, int j) const { return i != j && g_.adjacent(i, j); }

    // row i holds exactly the columns 1..(first-1) among j < first, and misses col
    bool row_prefix(int i, int first) const
    {
        for (int j = 1; j < first; ++j)
            if (!a(i, j))
                return false;
        return true;
    }

    bool row_empty_after(int i, int last) const
    {
        for (int j = last + 1; j <= n_; ++j)
            if (a(i, j))
                return false;
        return true;
    }

    bool column_full_between(int col, int lo, int hi) const // rows lo < i < hi
    {
        for (int i = lo + 1; i < hi; ++i)
            if (i != col && !a(i, col))
                return false;
        return true;
    }

    bool column_empty_below(int col, int row) const // rows i > row
    {
        for (int i = row + 1; i <= n_; ++i)
            if (a(i, col))
                return false;
        return true;
    }

    int n() const { return n_; }

private:
    const LabeledGraph& g_;
    int n_;
};

Validation fail(std::string why)
{
    return Validation{false, std::move(why), true};
}

Validation check_basic(const Checker& c, const TransformSpec& s)
{
    const auto [kind, p, q, h, k, l] = s;
    if (!(2 <= q && q < k && k < h && h < p))
        return fail("(i) requires 2 <= q < k < h < p");
    if (c.a(p, q))
        return fail("(ii) a_pq must be 0");
    if (!c.row_prefix(p, q))
        return fail("(ii) a_pj must be 1 for j < q");
    if (!c.column_full_between(q, q, p))
        return fail("(ii) a_iq must be 1 for q < i < p");
    if (!c.a(h, k))
        return fail("(iii) a_hk must be 1");
    if (!c.row_empty_after(h, k))
        return fail("(iii) a_hj must be 0 for j > k");
    if (!c.column_empty_below(k, h))
        return fail("(iii) a_ik must be 0 for i > h");
    return Validation{true, {}, true};
}

bool row_missing_clause(const Checker& c, const TransformSpec& s, int first_row)
{
    for (int i = first_row; i <= s.p; ++i)
        if (c.a(i, s.q) || !c.row_prefix(i, s.q))
            return false;
    return true;
}

Validation check_row(const Checker& c, const TransformSpec& s)
{
    const auto [kind, p, q, h, k, l] = s;
    if (!(1 <= q && q < k && k + l < h && h < p - l))
        return fail("(i) requires q < k <= k+l < h < p-l");

    const bool general = row_missing_clause(c, s, p - l);
    const bool literal = p - 1 > q && row_missing_clause(c, s, p - 1);
    Validation v;
    v.literal_reading_agrees = general == literal;
    if (!general) {
        v.diagnostic = "(ii) rows p-l..p must hold columns j < q and miss column q";
        return v;
    }
    if (!c.column_full_between(q, q, p - l)) {
        v.diagnostic = "(ii) a_iq must be 1 for q < i < p-l";
        return v;
    }
    for (int i = k; i <= k + l; ++i) {
        if (!c.a(h, i)) {
            v.diagnostic = "(iii) a_hi must be 1 for k <= i <= k+l";
            return v;
        }
        if (h + 1 <= c.n() && c.a(h + 1, i)) {
            v.diagnostic = "(iii) a_{h+1,i} must be 0 for k <= i <= k+l";
            return v;
        }
    }
    if (!c.row_empty_after(h, k + l)) {
        v.diagnostic = "(iii) a_hj must be 0 for j > k+l";
        return v;
    }
    v.valid = true;
    return v;
}

Validation check_col(const Checker& c, const TransformSpec& s)
{
    const auto [kind, p, q, h, k, l] = s;
    if (!(2 <= q - l && q < k && k < h - l && h < p))
        return fail("(i) requires 2 <= q-l <= q < k < h-l <= h < p");
    for (int col = q - l; col <= q; ++col) {
        if (c.a(p, col))
            return fail("(ii) a_ps must be 0 for q-l <= s <= q");
        if (!c.column_full_between(col, col, p))
            return fail("(ii) a_is must be 1 for s < i < p");
    }
    if (!c.row_prefix(p, q - l))
        return fail("(ii) a_pj must be 1 for j < q-l");
    for (int row = h - l; row <= h; ++row) {
        if (!c.a(row, k))
            return fail("(iii) a_sk must be 1 for h-l <= s <= h");
        if (!c.row_empty_after(row, k))
            return fail("(iii) a_sj must be 0 for j > k");
    }
    if (!c.column_empty_below(k, h))
        return fail("(iii) a_ik must be 0 for i > h");
    return Validation{true, {}, true};
}

Validation validate_on(const LabeledGraph& stepwise, bool connected, const TransformSpec& s)
{
    const int n = stepwise.order();
    for (int idx : {s.p, s.q, s.h, s.k})
        if (idx < 1 || idx > n)
            throw TransformError("transform index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    if (s.l < 0)
        throw TransformError("transform width l must be non-negative");
    if (s.kind == TransformKind::basic && s.l != 0)
        return fail("basic transformation has l = 0");
    if (!connected)
        return fail("host graph must be connected");
    const Checker c(stepwise);
    switch (s.kind) {
    case TransformKind::basic: return check_basic(c, s);
    case TransformKind::row: return check_row(c, s);
    case TransformKind::col: return check_col(c, s);
    }
    return fail("unknown kind");
}

LabeledGraph rewire(const LabeledGraph& host, const TransformSpec& s)
{
    std::vector<LabeledGraph::Edge> drop;
    std::vector<LabeledGraph::Edge> add;
    for (int j = 0; j <= s.l; ++j) {
        switch (s.kind) {
        case TransformKind::basic:
        case TransformKind::row:
            drop.emplace_back(std::minmax(s.h, s.k + j));
            add.emplace_back(std::minmax(s.p - j, s.q));
            break;
        case TransformKind::col:
            drop.emplace_back(std::minmax(s.h - j, s.k));
            add.emplace_back(std::minmax(s.p, s.q - j));
            break;
        }
    }
    std::vector<LabeledGraph::Edge> edges;
    for (const auto& e : host.edges())
        if (std::find(drop.begin(), drop.end(), e) == drop.end())
            edges.push_back(e);
    edges.insert(edges.end(), add.begin(), add.end());
    return LabeledGraph(host.order(), edges);
}

} // namespace

Validation validate(const ThresholdGraph& g, const TransformSpec& spec)
{
    return validate_on(to_labeled(g), g.connected(), spec);
}

LabeledGraph apply_labeled(const ThresholdGraph& g, const TransformSpec& spec)
{
    const auto host = to_labeled(g);
    const auto v = validate_on(host, g.connected(), spec);
    if (!v)
        throw TransformError("cannot apply " + spec.to_string() + ": " + v.diagnostic);
    return rewire(host, spec);
}

ThresholdGraph apply(const ThresholdGraph& g, const TransformSpec& spec)
{
    const auto out = apply_labeled(g, spec);
    try {
        return to_threshold(out);
    } catch (const DegreeSequenceError& e) {
        throw TransformError("transform " + spec.to_string() + " produced a non-threshold graph: " + e.what());
    }
}

IdentityResiduals eq12_residuals(const TransformSpec& s, Alpha alpha, double rho1, std::span<const double> x,
                                 double rho2, std::span<const double> y)
{
    if (s.l != 0)
        throw TransformError("eq12_residuals: only single-edge moves (l = 0)");
    const double a = alpha.value();
    const double b = 1.0 - a;
    auto at = [](std::span<const double> v, int i) { return v[static_cast<std::size_t>(i - 1)]; };

    double sum_x = 0.0;
    for (int i = s.q; i <= s.k; ++i)
        sum_x += at(x, i);
    const double lhs1 = (rho1 - s.k * a) * (at(x, s.h) - at(x, s.p));
    const double rhs1 = (s.k - s.q + 1) * a * at(x, s.p) + b * sum_x;

    double sum_y = 0.0;
    for (int i = s.h; i <= s.p; ++i)
        sum_y += at(y, i);
    const double lhs2 = (rho2 - s.p * a + 1.0) * (at(y, s.q) - at(y, s.k));
    const double rhs2 = (s.p - s.h + 1) * a * at(y, s.k) + b * sum_y;

    return IdentityResiduals{std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)};
}

IdentityResiduals eq12_residuals(const ThresholdGraph& g, const TransformSpec& spec, Alpha alpha)
{
    const auto host = to_labeled(g);
    const auto after = apply_labeled(g, spec);
    if (!host.connected() || !after.connected())
        throw GraphError("eq12_residuals: both graphs must be connected");
    const auto s1 = spectral_radius(host, alpha);
    const auto s2 = spectral_radius(after, alpha);
    return eq12_residuals(spec, alpha, s1.rho, s1.perron, s2.rho, s2.perron);
}

bool MonotonicityCertificate::holds() const
{
    if (coverage == Coverage::not_covered)
        return false;
    const double delta = rho_after - rho_before;
    if (delta < -monotonicity_slack)
        return false;
    if (predicted_equality != observed_equality)
        return false;
    if (residuals) {
        const double scale = std::max(1.0, std::max(rho_before, rho_after));
        if (residuals->eq1 > 1e-8 * scale || residuals->eq2 > 1e-8 * scale)
            return false;
    }
    return true;
}

MonotonicityCertificate certify(const ThresholdGraph& g, const TransformSpec& spec, Alpha alpha)
{
    const auto host = to_labeled(g);
    const auto v = validate_on(host, g.connected(), spec);
    if (!v)
        throw TransformError("cannot certify " + spec.to_string() + ": " + v.diagnostic);
    const auto after = rewire(host, spec);

    MonotonicityCertificate c;
    c.spec = spec;
    c.alpha = alpha;
    const auto s1 = spectral_radius(host, alpha);
    const auto s2 = spectral_radius(after, alpha);
    c.rho_before = s1.rho;
    c.rho_after = s2.rho;
    c.observed_equality = std::abs(c.rho_after - c.rho_before) <= rho_tolerance;
    if (spec.l == 0)
        c.residuals = eq12_residuals(spec, alpha, s1.rho, s1.perron, s2.rho, s2.perron);

    if (!alpha.at_least_half())
        return c;

    const bool adjacent = spec.k == spec.q + 1;
    if (adjacent) {
        c.coverage = spec.kind == TransformKind::basic ? Coverage::basic_adjacent
                     : spec.kind == TransformKind::row ? Coverage::row_adjacent
                                                       : Coverage::col_adjacent;
        c.predicted_equality = alpha.is_half() && spec.l == 0 && spec.p == spec.h + 1 && spec.h + 1 == spec.q + 3;
    } else if (spec.kind == TransformKind::basic && spec.k == spec.q + 2 && spec.p > spec.h + 1) {
        c.coverage = Coverage::basic_gap_two;
        c.predicted_equality = false;
    }
    return c;
}

std::vector<TransformSpec> valid_specs(const ThresholdGraph& g, TransformKind kind, std::optional<int> gap)
{
    const auto host = to_labeled(g);
    const bool connected = g.connected();
    const int n = g.order();
    std::vector<TransformSpec> out;
    const int max_l = kind == TransformKind::basic ? 0 : n;
    for (int q = 1; q <= n; ++q)
        for (int k = q + 1; k <= n; ++k) {
            if (gap && k - q != *gap)
                continue;
            for (int h = k + 1; h <= n; ++h)
                for (int p = h + 1; p <= n; ++p)
                    for (int l = 0; l <= max_l; ++l) {
                        TransformSpec s{kind, p, q, h, k, l};
                        if (kind == TransformKind::row && !(k + l < h && h < p - l))
                            break;
                        if (kind == TransformKind::col && !(q - l >= 2 && k < h - l))
                            break;
                        if (validate_on(host, connected, s))
                            out.push_back(s);
                    }
        }
    return out;
}

} // namespace tgraph
