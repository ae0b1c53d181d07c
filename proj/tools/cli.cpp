#include "cli.hpp"

#include "tgraph/alpha.hpp"
#include "tgraph/graphs.hpp"
#include "tgraph/search.hpp"
#include "tgraph/spectra.hpp"
#include "tgraph/transforms.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>
#include <variant>

namespace tgraph::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_sequence(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == 'I' || c == 'D'; });
}

using GraphInput = std::variant<ThresholdGraph, LabeledGraph>;

GraphInput read_graph(const std::string& source)
{
    if (is_sequence(source))
        return ThresholdGraph::parse(source);
    std::ifstream in(source);
    if (!in)
        throw UsageError("cannot open graph file '" + source + "' (expected an I/D sequence or an edge-list file)");
    return parse_edge_list(in);
}

ThresholdGraph read_threshold(const std::string& source)
{
    auto g = read_graph(source);
    if (auto* t = std::get_if<ThresholdGraph>(&g))
        return *t;
    const auto& lab = std::get<LabeledGraph>(g);
    if (!is_threshold(lab))
        throw UsageError("graph in '" + source + "' is not a threshold graph");
    return to_threshold(lab);
}

LabeledGraph labeled(const GraphInput& g)
{
    if (auto* t = std::get_if<ThresholdGraph>(&g))
        return to_labeled(*t);
    return std::get<LabeledGraph>(g);
}

std::pair<int, int> parse_range(const std::string& text)
{
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw UsageError("bad range '" + text + "' (expected a or a..b)");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo)
        throw UsageError("empty range '" + text + "'");
    return {lo, hi};
}

std::vector<Alpha> parse_alphas(const std::string& text)
{
    std::vector<Alpha> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        out.push_back(Alpha::parse(item));
    if (out.empty())
        throw UsageError("empty alpha list");
    return out;
}

std::vector<int> parse_ints(const std::vector<std::string>& items)
{
    std::vector<int> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        for (std::string tok; std::getline(ss, tok, ',');) {
            if (tok.empty())
                continue;
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != tok.size())
                throw UsageError("not an integer: '" + tok + "'");
            out.push_back(v);
        }
    }
    return out;
}

void emit_graph(std::ostream& os, const ThresholdGraph& g, bool structured)
{
    const auto lab = to_labeled(g);
    if (structured) {
        os << "sequence=" << g.to_string() << " n=" << g.order() << " m=" << g.size() << " edges=" << edge_key(lab)
           << '\n';
        return;
    }
    os << "creation sequence: " << g.to_string() << '\n';
    os << "edge list (stepwise labelling):\n" << format_edge_list(lab);
}

struct Settings {
    std::string format = "text";
    bool structured() const { return format == "structured"; }
};

int do_construct(const std::string& kind, const std::vector<std::string>& params, const Settings& s, std::ostream& os)
{
    auto two = [&]() -> std::pair<int, long long> {
        const auto v = parse_ints(params);
        if (v.size() != 2)
            throw UsageError("construct " + kind + " takes <n> <m>");
        return {v[0], v[1]};
    };
    ThresholdGraph g = ThresholdGraph::parse("I");
    if (kind == "quasi-star") {
        auto [n, m] = two();
        g = quasi_star(n, m);
    } else if (kind == "l-graph") {
        auto [n, m] = two();
        g = l_graph(n, m);
    } else if (kind == "tilde-s") {
        auto [n, m] = two();
        g = tilde_s(n, m);
    } else if (kind == "from-seq") {
        if (params.size() != 1)
            throw UsageError("construct from-seq takes one I/D sequence");
        g = ThresholdGraph::parse(params[0]);
    } else if (kind == "from-degseq") {
        const auto d = parse_ints(params);
        if (d.empty())
            throw UsageError("construct from-degseq needs a degree sequence");
        g = from_degree_sequence(d);
    } else {
        throw UsageError("unknown construction '" + kind + "' (quasi-star, l-graph, tilde-s, from-seq, from-degseq)");
    }
    emit_graph(os, g, s.structured());
    return ok;
}

int do_rho(const std::string& graph, const std::string& alpha_text, const Settings& s, std::ostream& os)
{
    const auto alpha = Alpha::parse(alpha_text);
    const auto g = read_graph(graph);
    const auto sp = spectral_radius(labeled(g), alpha);
    if (s.structured()) {
        os << "rho=" << num(sp.rho) << " perron=";
        for (std::size_t i = 0; i < sp.perron.size(); ++i)
            os << (i ? "," : "") << num(sp.perron[i]);
        os << " iterations=" << sp.iterations << " residual=" << num(sp.residual) << '\n';
        return ok;
    }
    os << "alpha: " << alpha.to_string() << '\n';
    os << "rho: " << num(sp.rho) << '\n';
    if (alpha.is_half())
        os << "q: " << num(2.0 * sp.rho) << '\n';
    os << "perron vector:";
    for (double x : sp.perron)
        os << ' ' << num(x);
    os << "\niterations: " << sp.iterations << "\nresidual: " << num(sp.residual) << '\n';
    return ok;
}

int do_transform(const std::string& graph, const std::string& spec_text, const std::string& alpha_text,
                 const Settings& s, std::ostream& os)
{
    const auto g = read_threshold(graph);
    const auto spec = TransformSpec::parse(spec_text);
    const auto v = validate(g, spec);
    if (!v)
        throw UsageError("invalid transformation " + spec.to_string() + ": " + v.diagnostic);
    const auto result = apply(g, spec);

    if (alpha_text.empty()) {
        if (s.structured())
            os << "spec=\"" << spec.to_string() << "\" before=" << g.to_string() << " after=" << result.to_string()
               << '\n';
        else {
            os << "transformation: " << spec.to_string() << '\n' << "before: " << g.to_string() << '\n';
            emit_graph(os, result, false);
        }
        return ok;
    }

    const auto c = certify(g, spec, Alpha::parse(alpha_text));
    const bool good = c.coverage == Coverage::not_covered || c.holds();
    if (s.structured()) {
        os << "spec=\"" << spec.to_string() << "\" before=" << g.to_string() << " after=" << result.to_string()
           << " alpha=" << c.alpha.to_string() << " coverage=" << to_string(c.coverage)
           << " rho_before=" << num(c.rho_before) << " rho_after=" << num(c.rho_after)
           << " predicted_equality=" << c.predicted_equality << " observed_equality=" << c.observed_equality;
        if (c.residuals)
            os << " eq1=" << num(c.residuals->eq1) << " eq2=" << num(c.residuals->eq2);
        os << " ok=" << good << '\n';
    } else {
        os << "transformation: " << spec.to_string() << '\n'
           << "before: " << g.to_string() << "\nafter: " << result.to_string() << '\n'
           << "alpha: " << c.alpha.to_string() << "\ncoverage: " << to_string(c.coverage) << '\n'
           << "rho before: " << num(c.rho_before) << "\nrho after: " << num(c.rho_after) << '\n'
           << "equality predicted: " << (c.predicted_equality ? "yes" : "no")
           << ", observed: " << (c.observed_equality ? "yes" : "no") << '\n';
        if (c.residuals)
            os << "identity residuals: " << num(c.residuals->eq1) << ' ' << num(c.residuals->eq2) << '\n';
        os << "certificate: " << (c.coverage == Coverage::not_covered ? "not covered" : good ? "holds" : "FAILS")
           << '\n';
    }
    return good ? ok : mismatch;
}

int do_enumerate(int n, long long m, bool connected, const std::string& universe, const Settings& s,
                 std::ostream& os)
{
    FamilySpec f{n, m, connected, Universe::threshold};
    if (universe == "all")
        f.universe = Universe::all;
    else if (universe != "threshold")
        throw UsageError("unknown universe '" + universe + "' (threshold or all)");

    std::vector<std::string> keys;
    if (f.universe == Universe::threshold)
        for (const auto& g : enumerate_threshold(f))
            keys.push_back(g.to_string());
    else
        for (const auto& g : enumerate_all(f))
            keys.push_back(edge_key(g));

    if (!s.structured())
        os << "# " << keys.size() << " graph(s) in " << f.letter() << "(" << n << "," << m << "), universe "
           << universe << '\n';
    for (const auto& k : keys)
        os << k << '\n';
    return ok;
}

struct VerifyArgs {
    std::string id;
    std::string n;
    std::string m;
    std::string alpha;
    int r = 0;
    unsigned threads = 0;
};

int do_verify(const VerifyArgs& a, const Settings& s, std::ostream& os, std::ostream& err)
{
    SearchOptions opts;
    opts.threads = a.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.threads;
    if (a.n.empty())
        throw UsageError("verify needs --n");
    const auto [n_lo, n_hi] = parse_range(a.n);

    std::vector<VerificationReport> reports;
    if (a.id == "t41") {
        const auto alphas = parse_alphas(a.alpha.empty() ? "1/2,3/5,3/4,9/10" : a.alpha);
        reports = verify_theorem_41(n_lo, n_hi, alphas, opts);
    } else if (a.id == "t12") {
        if (!a.alpha.empty() && !(parse_alphas(a.alpha).size() == 1 && parse_alphas(a.alpha)[0].is_half()))
            throw UsageError("verify t12 is stated at alpha = 1/2 only");
        reports = verify_theorem_12(n_lo, n_hi, opts);
    } else if (a.id == "t42") {
        if (a.r == 0)
            throw UsageError("verify t42 needs --r");
        const auto alphas = parse_alphas(a.alpha.empty() ? "1/2,3/4" : a.alpha);
        for (int n = n_lo; n <= n_hi; ++n)
            for (auto& rep : verify_theorem_42(a.r, n, alphas, opts))
                reports.push_back(std::move(rep));
    } else if (a.id == "lemma24") {
        const auto alphas = parse_alphas(a.alpha.empty() ? "0,1/2,3/4" : a.alpha);
        for (int n = n_lo; n <= n_hi; ++n) {
            if (n < 2 || n > max_exhaustive_order)
                throw UsageError("verify lemma24 needs 2 <= n <= " + std::to_string(max_exhaustive_order));
            int m_lo = n - 1;
            int m_hi = n * (n - 1) / 2;
            if (!a.m.empty())
                std::tie(m_lo, m_hi) = parse_range(a.m);
            for (long long m = m_lo; m <= m_hi; ++m)
                for (const auto& alpha : alphas)
                    reports.push_back(verify_lemma_24(n, m, alpha).report);
        }
    } else {
        throw UsageError("unknown verification '" + a.id + "' (t41, t12, t42, lemma24)");
    }

    bool all_ok = true;
    for (const auto& r : reports) {
        all_ok = all_ok && r.matches_theorem;
        os << format_record(r);
        if (!s.structured()) {
            os << " size=" << r.family_size;
            if (r.outside_hypothesis)
                os << " outside_hypothesis";
            if (!r.matches_theorem && !r.expected.empty()) {
                os << " expected=";
                for (std::size_t i = 0; i < r.expected.size(); ++i)
                    os << (i ? ";" : "") << r.expected[i];
            }
        }
        os << '\n';
        for (const auto& w : r.warnings)
            err << "warning: " << w << '\n';
    }
    return all_ok ? ok : mismatch;
}

int do_audit(const std::string& graph, int r, const Settings& s, std::ostream& os)
{
    const auto g = read_threshold(graph);
    const auto a = audit(g, r);
    std::string delta;
    for (auto [j, c] : a.delta)
        delta += (delta.empty() ? "" : ",") + std::to_string(j) + ":" + std::to_string(c);
    const std::string sv = a.s ? std::to_string(*a.s) : "none";
    const std::string tv = a.theta ? std::to_string(*a.theta) : "none";
    if (s.structured()) {
        os << "sequence=" << g.to_string() << " r=" << r << " kappa=" << a.kappa << " delta=" << delta
           << " s=" << sv << " theta=" << tv << " identity=" << a.identity_holds << '\n';
    } else {
        os << "graph: " << g.to_string() << "\nkappa: " << a.kappa << "\ndelta (j:count): " << delta
           << "\ns: " << sv << "\ntheta: " << tv
           << "\nn = sum delta + kappa: " << (a.identity_holds ? "holds" : "fails") << '\n';
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Threshold graphs and A_alpha spectral radii", "tgraph"};
    app.require_subcommand(1);
    Settings settings;
    app.add_option("--format", settings.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.fallthrough();

    std::string kind;
    std::vector<std::string> params;
    auto* construct = app.add_subcommand("construct", "Build a named threshold graph");
    construct->add_option("kind", kind, "quasi-star | l-graph | tilde-s | from-seq | from-degseq")->required();
    construct->add_option("params", params, "Parameters of the construction");

    std::string graph;
    std::string alpha;
    auto* rho = app.add_subcommand("rho", "A_alpha spectral radius and Perron vector");
    rho->add_option("graph", graph, "I/D creation sequence or edge-list file")->required();
    rho->add_option("alpha", alpha, "Exact alpha in [0,1), e.g. 1/2 or 0.75")->required();

    std::string spec;
    auto* transform = app.add_subcommand("transform", "Apply a stepwise-matrix transformation");
    transform->add_option("graph", graph, "I/D creation sequence or edge-list file")->required();
    transform->add_option("spec", spec, "\"BASIC p q h k\", \"ROW p q h k l\" or \"COL p q h k l\"")->required();
    transform->add_option("--alpha", alpha, "Also certify monotonicity at this alpha");

    int n = 0;
    long long m = 0;
    bool connected = false;
    std::string universe = "threshold";
    auto* enumerate = app.add_subcommand("enumerate", "List a graph family");
    enumerate->add_option("n", n)->required();
    enumerate->add_option("m", m)->required();
    enumerate->add_flag("--connected", connected, "Connected graphs only");
    enumerate->add_option("--universe", universe, "threshold | all")->capture_default_str();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Exhaustive extremal search against a stated characterisation");
    verify->add_option("id", va.id, "t41 | t12 | t42 | lemma24")->required();
    verify->add_option("--n", va.n, "Order or range a..b");
    verify->add_option("--m", va.m, "Size or range a..b (lemma24)");
    verify->add_option("--alpha", va.alpha, "Comma-separated alpha list");
    verify->add_option("--r", va.r, "Rank parameter (t42)");
    verify->add_option("--threads", va.threads, "Worker threads, 0 = available parallelism")->capture_default_str();

    int r = 0;
    auto* auditc = app.add_subcommand("audit", "Extremal-structure quantities of a threshold graph");
    auditc->add_option("graph", graph, "I/D creation sequence or edge-list file")->required();
    auditc->add_option("--r", r, "Rank parameter")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    std::ostringstream buffer;
    std::ostringstream diagnostics;
    int code = ok;
    try {
        if (*construct)
            code = do_construct(kind, params, settings, buffer);
        else if (*rho)
            code = do_rho(graph, alpha, settings, buffer);
        else if (*transform)
            code = do_transform(graph, spec, alpha, settings, buffer);
        else if (*enumerate)
            code = do_enumerate(n, m, connected, universe, settings, buffer);
        else if (*verify)
            code = do_verify(va, settings, buffer, diagnostics);
        else if (*auditc)
            code = do_audit(graph, r, settings, buffer);
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << '\n';
        return non_convergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    out << buffer.str();
    err << diagnostics.str();
    return code;
}

} // namespace tgraph::cli
