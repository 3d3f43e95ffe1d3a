#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kout/connectivity.hpp"
#include "kout/errors.hpp"
#include "kout/generators.hpp"
#include "kout/graph_io.hpp"
#include "kout/montecarlo.hpp"
#include "kout/pairwise_keys.hpp"
#include "kout/sweep_io.hpp"
#include "kout/thresholds.hpp"

namespace kout::cli {

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    unsigned n = 2000;
    std::string K = "1";
    std::string p = "1";
    int k = 1;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    std::string out = "-";
    std::string format = "csv";
    unsigned threads = 0;
    std::size_t ell_max = 10;
    std::string in;
    std::string keyrings;
};

std::string real(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

template <class T>
T parse_number(const std::string& text, const char* flag) {
    T value{};
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw InvalidParameter(std::string("--") + flag + ": cannot parse \"" + text + "\"");
    }
    return value;
}

// Writes to --out, or to `fallback` for "-".
void emit(const Flags& flags, std::ostream& fallback, const std::string& text) {
    if (flags.out == "-") {
        fallback << text;
        return;
    }
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) throw IoFailure("cannot open --out " + flags.out + " for writing");
    file << text;
    if (!file.flush()) throw IoFailure("write to " + flags.out + " failed");
}

void check_format(const Flags& flags) {
    if (flags.format != "csv" && flags.format != "json") {
        throw InvalidParameter("--format must be csv or json");
    }
}

int cmd_threshold(const Flags& flags, std::ostream& out) {
    if (flags.p.find("..") != std::string::npos) throw InvalidParameter("--p must be a single value");
    const double p = parse_number<double>(flags.p, "p");
    if (p >= 1.0) throw DomainError("p must be < 1");
    if (p <= 0.0) throw DomainError("p must be > 0");
    const auto crit = critical_K(flags.n, p, flags.k);
    const double er_p = er_threshold_p(flags.n, flags.k, 0.0);

    auto gamma_at = [&](NodeId K) { return gamma(ModelParams{flags.n, K, p, flags.k}); };
    if (flags.format == "json") {
        nlohmann::json doc{{"n", flags.n}, {"p", p}, {"k", flags.k}, {"er_threshold_p", er_p}};
        doc["critical_K"] = crit ? nlohmann::json(*crit) : nlohmann::json(nullptr);
        if (crit) doc["gamma_at_critical_K"] = gamma_at(*crit);
        if (crit && *crit > 1) doc["gamma_below_critical_K"] = gamma_at(*crit - 1);
        emit(flags, out, doc.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream s;
    s << "n=" << flags.n << " p=" << real(p) << " k=" << flags.k << '\n';
    if (crit) {
        s << "critical_K=" << *crit << '\n';
        s << "gamma(critical_K)=" << real(gamma_at(*crit)) << '\n';
        s << "gamma(critical_K-1)=" << (*crit > 1 ? real(gamma_at(*crit - 1)) : "n/a") << '\n';
    } else {
        s << "critical_K=none\n";
    }
    s << "er_threshold_p=" << real(er_p) << '\n';
    emit(flags, out, s.str());
    return kExitOk;
}

int cmd_sweep(const Flags& flags, std::ostream& out, std::ostream& err) {
    const bool K_range = flags.K.find("..") != std::string::npos;
    const bool p_range = flags.p.find("..") != std::string::npos;
    if (K_range && p_range) throw InvalidParameter("sweep one axis at a time: --K or --p may be a range, not both");

    ModelParams base{flags.n, 1, 1.0, flags.k};
    SweepAxis axis;
    if (p_range) {
        base.K = parse_number<unsigned>(flags.K, "K");
        axis = SweepAxis::over_p(parse_real_range(flags.p));
    } else {
        base.p = parse_number<double>(flags.p, "p");
        axis = SweepAxis::over_K(parse_int_range(flags.K));
    }
    if (flags.trials < 1) throw InvalidParameter("--trials must be >= 1");
    const std::vector<int> ks{flags.k};
    const SweepTable table = sweep(base, axis, ks, flags.trials, flags.seed, RunOptions{flags.threads});

    std::ostringstream s;
    if (flags.format == "json") {
        s << sweep_to_json(table) << '\n';
    } else {
        write_sweep_csv(s, table);
    }
    emit(flags, out, s.str());

    std::ostream& summary = flags.out == "-" ? err : out;
    const char* name = axis.kind == SweepAxis::Kind::K ? "transition_K" : "transition_p";
    auto hit = std::find_if(table.begin(), table.end(), [](const SweepRow& r) { return r.p_min_degree > 0.5; });
    summary << name << '=';
    if (hit == table.end()) {
        summary << "none";
    } else if (axis.kind == SweepAxis::Kind::K) {
        summary << hit->K;
    } else {
        summary << real(hit->p);
    }
    summary << " rows=" << table.size() << '\n';
    return kExitOk;
}

int cmd_degree_dist(const Flags& flags, std::ostream& out) {
    const NodeId K = parse_number<unsigned>(flags.K, "K");
    const double p = parse_number<double>(flags.p, "p");
    check_model_ranges(flags.n, K, p);
    if (flags.ell_max > flags.n - 1) throw InvalidParameter("--ell-max must be <= n-1");
    const DegreePmf pmf = degree_pmf_exact(flags.n, K, p, flags.ell_max);
    const bool has_asymptotic = p > 0.0 && p < 1.0;

    std::ostringstream s;
    if (flags.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t ell = 0; ell <= flags.ell_max; ++ell) {
            nlohmann::json row{{"ell", ell}, {"exact", pmf[ell]}, {"expected_count", flags.n * pmf[ell]}};
            row["asymptotic"] = has_asymptotic ? nlohmann::json(degree_pmf_asymptotic(flags.n, K, p, ell))
                                               : nlohmann::json(nullptr);
            rows.push_back(row);
        }
        s << rows.dump(2) << '\n';
    } else {
        s << "ell,exact,asymptotic,expected_count\n";
        for (std::size_t ell = 0; ell <= flags.ell_max; ++ell) {
            s << ell << ',' << real(pmf[ell]) << ','
              << (has_asymptotic ? real(degree_pmf_asymptotic(flags.n, K, p, ell)) : "NA") << ','
              << real(flags.n * pmf[ell]) << '\n';
        }
    }
    emit(flags, out, s.str());
    return kExitOk;
}

int cmd_sample(const Flags& flags, std::ostream& out) {
    const ModelParams params{flags.n, parse_number<unsigned>(flags.K, "K"), parse_number<double>(flags.p, "p"), 1};
    check_model_ranges(params.n, params.K, params.p);
    const SeedSpec seed{flags.seed, "sample", 0};
    const Graph g = sample_intersection(params, seed);
    std::ostringstream s;
    write_graph(s, g);
    emit(flags, out, s.str());
    if (!flags.keyrings.empty()) {
        // sample_intersection draws its pairing from this child stream
        const auto rings = build_key_rings(sample_pairing(params.n, params.K, seed.child("pairing")));
        std::ofstream file(flags.keyrings);
        if (!file || !(file << key_rings_to_json(rings) << '\n')) {
            throw IoFailure("cannot write --keyrings " + flags.keyrings);
        }
    }
    return kExitOk;
}

int cmd_analyze(const Flags& flags, std::ostream& out) {
    Graph g;
    if (flags.in.empty() || flags.in == "-") {
        g = read_graph(std::cin);
    } else {
        std::ifstream file(flags.in);
        if (!file) throw IoFailure("cannot open " + flags.in);
        g = read_graph(file);
    }
    const DegreeReport report = degree_report(g);
    const std::size_t kappa = vertex_connectivity(g);
    std::ostringstream s;
    if (flags.format == "json") {
        nlohmann::json hist = nlohmann::json::object();
        for (std::size_t d = 0; d < report.histogram.size(); ++d) {
            if (report.histogram[d] != 0) hist[std::to_string(d)] = report.histogram[d];
        }
        nlohmann::json doc{{"n", g.num_nodes()}, {"m", g.num_edges()}, {"min_degree", report.min_degree},
                           {"vertex_connectivity", kappa}, {"histogram", hist}};
        s << doc.dump(2) << '\n';
    } else {
        s << "n=" << g.num_nodes() << " m=" << g.num_edges() << '\n';
        s << "min_degree=" << report.min_degree << " vertex_connectivity=" << kappa << '\n';
        s << "degree,count\n";
        for (std::size_t d = 0; d < report.histogram.size(); ++d) {
            if (report.histogram[d] != 0) s << d << ',' << report.histogram[d] << '\n';
        }
    }
    emit(flags, out, s.str());
    return kExitOk;
}

} // namespace

std::vector<unsigned> parse_int_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_number<unsigned>(text, "K")};
    const auto colon = text.find(':', dots);
    const unsigned lo = parse_number<unsigned>(text.substr(0, dots), "K");
    const unsigned hi = parse_number<unsigned>(text.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2), "K");
    const unsigned step = colon == std::string::npos ? 1u : parse_number<unsigned>(text.substr(colon + 1), "K");
    if (step == 0) throw InvalidParameter("--K: range step must be positive");
    if (lo > hi) throw InvalidParameter("--K: empty range " + text);
    std::vector<unsigned> values;
    for (unsigned v = lo; v <= hi; v += step) {
        values.push_back(v);
        if (hi - v < step) break;
    }
    return values;
}

std::vector<double> parse_real_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_number<double>(text, "p")};
    const auto colon = text.find(':', dots);
    const double lo = parse_number<double>(text.substr(0, dots), "p");
    const double hi = parse_number<double>(text.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2), "p");
    const double step = colon == std::string::npos ? 0.05 : parse_number<double>(text.substr(colon + 1), "p");
    if (!(step > 0.0)) throw InvalidParameter("--p: range step must be positive");
    if (lo > hi) throw InvalidParameter("--p: empty range " + text);
    std::vector<double> values;
    for (std::size_t i = 0;; ++i) {
        // snap to 12 decimals so 0.3 + 0.05 * 2 prints as 0.4
        const double v = std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12;
        if (v > hi + 1e-12) break;
        values.push_back(v);
    }
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random K-out graphs with on/off channels: thresholds, sampling, sweeps"};
    app.require_subcommand(1);
    Flags flags;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", flags.seed, "master seed")->capture_default_str();
        sub->add_option("--out", flags.out, "output path, - for stdout")->capture_default_str();
        sub->add_option("--format", flags.format, "csv or json")->capture_default_str();
    };

    auto* threshold = app.add_subcommand("threshold", "critical K for min degree >= k");
    threshold->add_option("--n", flags.n)->capture_default_str();
    threshold->add_option("--p", flags.p)->required();
    threshold->add_option("--k", flags.k)->capture_default_str();
    add_common(threshold);

    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo estimates along a K or p axis");
    sweep_cmd->add_option("--n", flags.n)->capture_default_str();
    sweep_cmd->add_option("--K", flags.K, "value or lo..hi[:step]")->required();
    sweep_cmd->add_option("--p", flags.p, "value or lo..hi[:step]")->required();
    sweep_cmd->add_option("--k", flags.k)->capture_default_str();
    sweep_cmd->add_option("--trials", flags.trials)->capture_default_str();
    sweep_cmd->add_option("--threads", flags.threads, "0 = all cores")->capture_default_str();
    add_common(sweep_cmd);

    auto* dist = app.add_subcommand("degree-dist", "exact and asymptotic node-degree law");
    dist->add_option("--n", flags.n)->capture_default_str();
    dist->add_option("--K", flags.K)->required();
    dist->add_option("--p", flags.p)->required();
    dist->add_option("--ell-max", flags.ell_max)->capture_default_str();
    add_common(dist);

    auto* sample = app.add_subcommand("sample", "draw one intersection graph as an edge list");
    sample->add_option("--n", flags.n)->capture_default_str();
    sample->add_option("--K", flags.K)->required();
    sample->add_option("--p", flags.p)->required();
    sample->add_option("--keyrings", flags.keyrings, "also dump the key rings as JSON");
    add_common(sample);

    auto* analyze = app.add_subcommand("analyze", "degree and connectivity report for an edge list");
    analyze->add_option("--in,input", flags.in, "graph file, - for stdin");
    add_common(analyze);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        check_format(flags);
        if (threshold->parsed()) return cmd_threshold(flags, out);
        if (sweep_cmd->parsed()) return cmd_sweep(flags, out, err);
        if (dist->parsed()) return cmd_degree_dist(flags, out);
        if (sample->parsed()) return cmd_sample(flags, out);
        if (analyze->parsed()) return cmd_analyze(flags, out);
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace kout::cli
