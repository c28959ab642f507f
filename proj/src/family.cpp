#include "cftp/family.hpp"

#include <charconv>
#include <fstream>

#include "cftp/error.hpp"
#include "cftp/render/ascii.hpp"

namespace cftp {

namespace {

long long to_int(std::string_view key, std::string_view text) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorKind::InvalidArgument, "parameter " + std::string(key) + " is not an integer: " +
                                                    std::string(text));
    return v;
}

int int_param(const ParamMap& m, std::string_view key, std::optional<int> fallback = std::nullopt) {
    auto it = m.find(key);
    if (it == m.end()) {
        if (fallback) return *fallback;
        throw Error(ErrorKind::InvalidArgument, "missing parameter " + std::string(key));
    }
    const long long v = to_int(key, it->second);
    if (v < 0 || v > (1 << 20))
        throw Error(ErrorKind::InvalidArgument, "parameter " + std::string(key) + " out of range");
    return static_cast<int>(v);
}

std::string str_param(const ParamMap& m, std::string_view key) {
    auto it = m.find(key);
    if (it == m.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter " + std::string(key));
    return it->second;
}

std::vector<int> int_list(std::string_view key, std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(':', start), text.size());
        out.push_back(static_cast<int>(to_int(key, text.substr(start, end - start))));
        start = end + 1;
    }
    return out;
}

void reject_unknown(const ParamMap& m, std::initializer_list<std::string_view> known) {
    for (const auto& [k, v] : m) {
        bool ok = false;
        for (auto name : known) ok = ok || k == name;
        if (!ok) throw Error(ErrorKind::InvalidArgument, "unknown parameter " + k);
    }
}

Poset chain_poset(int n) {
    std::vector<Cover> covers;
    for (int i = 0; i + 1 < n; ++i) covers.push_back({static_cast<ElementId>(i), static_cast<ElementId>(i + 1)});
    return build_poset(static_cast<std::size_t>(n), std::move(covers));
}

Json int_matrix(const std::vector<int>& v, int rows, int cols) {
    Json out = Json::array();
    for (int i = 0; i < rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < cols; ++j) row.push_back(v[static_cast<std::size_t>(i) * cols + j]);
        out.push_back(row);
    }
    return out;
}

Json plane_partition_json(const PlanePartition& pp) {
    Json j;
    j["plane_partition"] = int_matrix(pp.parts, pp.rows, pp.cols);
    j["volume"] = pp.volume();
    return j;
}

}  // namespace

ParamMap parse_params(std::string_view text) {
    ParamMap out;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const auto item = text.substr(start, end - start);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw Error(ErrorKind::InvalidArgument, "expected key=value, got '" + std::string(item) + "'");
        if (!out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second)
            throw Error(ErrorKind::InvalidArgument, "repeated parameter " + std::string(item.substr(0, eq)));
        start = end + 1;
    }
    return out;
}

std::vector<std::string> family_names() {
    return {"boxes", "catalan", "paths", "asm", "indep", "domino", "chain", "chain2", "point", "antichain", "poset"};
}

FamilyInstance make_family(std::string_view family, const ParamMap& m) {
    FamilyInstance f{std::string(family), Json::object(), IdealSystem(Poset{}), std::nullopt, std::nullopt};
    if (family == "boxes") {
        reject_unknown(m, {"a", "b", "c", "moves"});
        BoxesParams p{int_param(m, "a"), int_param(m, "b"), int_param(m, "c")};
        validate(p);
        const std::string moves = m.contains("moves") ? str_param(m, "moves") : "site";
        f.params = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"moves", moves}};
        f.boxes = p;
        if (moves == "site")
            f.system = IdealSystem(boxes_poset(p));
        else if (moves == "filament")
            f.system = FilamentSystem(p);
        else
            throw Error(ErrorKind::InvalidArgument, "moves must be site or filament");
    } else if (family == "catalan") {
        reject_unknown(m, {"n"});
        const int n = int_param(m, "n");
        f.params = {{"n", n}};
        f.paths = catalan_paths_system(n);
        f.system = IdealSystem(f.paths->poset);
    } else if (family == "paths") {
        reject_unknown(m, {"a", "b", "lower", "upper"});
        const int a = int_param(m, "a"), b = int_param(m, "b");
        auto lower = m.contains("lower") ? int_list("lower", str_param(m, "lower")) : std::vector<int>(a, 0);
        auto upper = m.contains("upper") ? int_list("upper", str_param(m, "upper")) : std::vector<int>(a, b);
        f.params = {{"a", a}, {"b", b}, {"lower", lower}, {"upper", upper}};
        f.paths = path_region_poset(a, b, std::move(lower), std::move(upper));
        f.system = IdealSystem(f.paths->poset);
    } else if (family == "asm") {
        reject_unknown(m, {"n"});
        const int n = int_param(m, "n");
        f.params = {{"n", n}};
        f.system = AsmSystem(n);
    } else if (family == "indep") {
        reject_unknown(m, {"graph"});
        const std::string path = str_param(m, "graph");
        f.params = {{"graph", path}};
        f.system = IndependentSetSystem(graph_from_json(read_json_file(path)));
    } else if (family == "domino") {
        if (m.contains("region")) {
            reject_unknown(m, {"region"});
            const std::string path = str_param(m, "region");
            f.params = {{"region", path}};
            f.system = DominoSystem(region_from_json(read_json_file(path)));
        } else {
            reject_unknown(m, {"w", "h"});
            const int w = int_param(m, "w"), h = int_param(m, "h");
            f.params = {{"w", w}, {"h", h}};
            f.system = DominoSystem(rectangle_region(w, h));
        }
    } else if (family == "chain" || family == "chain2" || family == "point") {
        reject_unknown(m, {"n"});
        const int n = family == "chain" ? int_param(m, "n") : family == "chain2" ? 2 : 1;
        f.params = {{"n", n}};
        f.system = IdealSystem(chain_poset(n));
    } else if (family == "antichain") {
        reject_unknown(m, {"n"});
        const int n = int_param(m, "n");
        f.params = {{"n", n}};
        f.system = IdealSystem(build_poset(static_cast<std::size_t>(n), {}));
    } else if (family == "poset") {
        reject_unknown(m, {"file"});
        const std::string path = str_param(m, "file");
        f.params = {{"file", path}};
        f.system = IdealSystem(poset_from_json(read_json_file(path)));
    } else {
        throw Error(ErrorKind::UnsupportedFamily, "unknown family '" + std::string(family) + "'");
    }
    return f;
}

PlanePartition as_plane_partition(const FamilyInstance& f, const OrderIdeal& s) {
    if (!f.boxes) throw Error(ErrorKind::UnsupportedFamily, f.family + " states are not plane partitions");
    return ideal_to_plane_partition(s, *f.boxes);
}

Json encode_state(const FamilyInstance& f, const OrderIdeal& s) {
    if (f.boxes) return plane_partition_json(ideal_to_plane_partition(s, *f.boxes));
    Json j;
    if (f.paths) {
        j["row_lengths"] = ideal_to_row_lengths(*f.paths, s);
        j["path"] = path_word(*f.paths, s);
    }
    j["ideal"] = s.members();
    return j;
}

Json encode_state(const FamilyInstance&, const PlanePartition& s) { return plane_partition_json(s); }

Json encode_state(const FamilyInstance&, const CornerSumMatrix& s) {
    Json j;
    const SignMatrix m = corner_sum_to_asm(s);
    j["asm"] = int_matrix(m.e, m.n, m.n);
    j["corner_sum"] = int_matrix(s.c, s.n + 1, s.n + 1);
    return j;
}

Json encode_state(const FamilyInstance& f, const IndependentSetState& s) {
    const auto& g = std::get<IndependentSetSystem>(f.system).graph();
    Json black = Json::array(), white = Json::array();
    for (std::size_t i = 0; i < s.black_members.size(); ++i)
        if (s.black_members[i]) black.push_back(g.black[i]);
    for (std::size_t i = 0; i < s.white_members.size(); ++i)
        if (s.white_members[i]) white.push_back(g.white[i]);
    return Json{{"black", black}, {"white", white}};
}

Json encode_state(const FamilyInstance& f, const DominoHeight& s) {
    const auto& sys = std::get<DominoSystem>(f.system);
    Json dominoes = Json::array();
    for (const Domino& d : sys.tiling(s))
        dominoes.push_back(Json::array({Json::array({d.first.x, d.first.y}), Json::array({d.second.x, d.second.y})}));
    return Json{{"dominoes", dominoes}, {"heights", s.h}};
}

std::string ascii_state(const FamilyInstance& f, const OrderIdeal& s) {
    if (f.boxes) return render_ascii(ideal_to_plane_partition(s, *f.boxes));
    if (f.paths) return path_word(*f.paths, s);
    std::string out = "{";
    for (ElementId x : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

std::string ascii_state(const FamilyInstance&, const PlanePartition& s) { return render_ascii(s); }
std::string ascii_state(const FamilyInstance&, const CornerSumMatrix& s) { return render_ascii(corner_sum_to_asm(s)); }
std::string ascii_state(const FamilyInstance& f, const IndependentSetState& s) {
    return render_ascii(std::get<IndependentSetSystem>(f.system), s);
}
std::string ascii_state(const FamilyInstance& f, const DominoHeight& s) {
    return render_ascii(std::get<DominoSystem>(f.system), s);
}

Json poset_to_json(const Poset& p) {
    Json covers = Json::array();
    for (const Cover& c : p.covers()) covers.push_back(Json::array({c.lower, c.upper}));
    return Json{{"elements", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const nlohmann::json& j) {
    try {
        const auto m = j.at("elements").get<std::int64_t>();
        if (m < 0) throw Error(ErrorKind::InvalidArgument, "negative element count");
        std::vector<Cover> covers;
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) throw Error(ErrorKind::InvalidArgument, "covers are [lower, upper] pairs");
            const auto lo = c.at(0).get<std::int64_t>(), hi = c.at(1).get<std::int64_t>();
            if (lo < 0 || hi < 0 || lo >= m || hi >= m)
                throw Error(ErrorKind::IdentifierOutOfRange, "cover [" + std::to_string(lo) + "," +
                                                                 std::to_string(hi) + "] out of range");
            covers.push_back({static_cast<ElementId>(lo), static_cast<ElementId>(hi)});
        }
        return build_poset(static_cast<std::size_t>(m), std::move(covers));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed poset JSON: ") + e.what());
    }
}

BipartiteGraph graph_from_json(const nlohmann::json& j) {
    try {
        BipartiteGraph g;
        g.black = j.at("black").get<std::vector<std::int64_t>>();
        g.white = j.at("white").get<std::vector<std::int64_t>>();
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2) throw Error(ErrorKind::InvalidArgument, "edges are [u, v] pairs");
            g.edges.emplace_back(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>());
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed graph JSON: ") + e.what());
    }
}

std::vector<Cell> region_from_json(const nlohmann::json& j) {
    try {
        std::vector<Cell> cells;
        for (const auto& c : j) {
            if (c.size() != 2) throw Error(ErrorKind::InvalidArgument, "cells are [x, y] pairs");
            cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
        }
        return cells;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed region JSON: ") + e.what());
    }
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
    }
}

std::string rational_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    return num.str() + "/" + den.str();
}

double rational_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace cftp
