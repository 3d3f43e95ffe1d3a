#include "kout/sweep_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kout/errors.hpp"

namespace kout {

namespace {

std::string format_real(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

template <class T>
T parse_field(std::string_view text, std::size_t line) {
    T value{};
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ParseError(line, "bad field \"" + std::string(text) + "\"");
    }
    return value;
}

} // namespace

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : table) {
        out << r.n << ',' << r.K << ',' << format_real(r.p) << ',' << r.k << ',' << r.trials << ','
            << format_real(r.p_min_degree) << ',' << format_real(r.p_kconn) << ','
            << format_real(r.se_min_degree) << ',' << format_real(r.se_kconn) << ',' << r.seed
            << '\n';
    }
}

SweepTable read_sweep_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || line != kSweepCsvHeader) {
        throw ParseError(line_no, "expected header " + std::string(kSweepCsvHeader));
    }
    SweepTable table;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string_view> f;
        std::string_view rest(line);
        for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
            f.push_back(rest.substr(0, pos));
            rest.remove_prefix(pos + 1);
        }
        f.push_back(rest);
        if (f.size() != 10) throw ParseError(line_no, "expected 10 fields");
        SweepRow r;
        r.n = parse_field<NodeId>(f[0], line_no);
        r.K = parse_field<NodeId>(f[1], line_no);
        r.p = parse_field<double>(f[2], line_no);
        r.k = parse_field<int>(f[3], line_no);
        r.trials = parse_field<std::size_t>(f[4], line_no);
        r.p_min_degree = parse_field<double>(f[5], line_no);
        r.p_kconn = parse_field<double>(f[6], line_no);
        r.se_min_degree = parse_field<double>(f[7], line_no);
        r.se_kconn = parse_field<double>(f[8], line_no);
        r.seed = parse_field<std::uint64_t>(f[9], line_no);
        table.push_back(r);
    }
    return table;
}

std::string sweep_to_json(const SweepTable& table) {
    nlohmann::json doc = nlohmann::json::array();
    for (const SweepRow& r : table) {
        doc.push_back({{"n", r.n},
                       {"K", r.K},
                       {"p", r.p},
                       {"k", r.k},
                       {"trials", r.trials},
                       {"p_min_degree", r.p_min_degree},
                       {"p_kconn", r.p_kconn},
                       {"se_min_degree", r.se_min_degree},
                       {"se_kconn", r.se_kconn},
                       {"seed", r.seed}});
    }
    return doc.dump(2);
}

SweepTable sweep_from_json(const std::string& text) {
    SweepTable table;
    for (const auto& o : nlohmann::json::parse(text)) {
        SweepRow r;
        r.n = o.at("n").get<NodeId>();
        r.K = o.at("K").get<NodeId>();
        r.p = o.at("p").get<double>();
        r.k = o.at("k").get<int>();
        r.trials = o.at("trials").get<std::size_t>();
        r.p_min_degree = o.at("p_min_degree").get<double>();
        r.p_kconn = o.at("p_kconn").get<double>();
        r.se_min_degree = o.at("se_min_degree").get<double>();
        r.se_kconn = o.at("se_kconn").get<double>();
        r.seed = o.at("seed").get<std::uint64_t>();
        table.push_back(r);
    }
    return table;
}

} // namespace kout
