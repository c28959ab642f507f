#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>
#include <variant>

#include "doctest.h"

#include "cftp/error.hpp"
#include "cftp/family.hpp"
#include "cftp/render/ascii.hpp"
#include "cftp/render/svg.hpp"

using namespace cftp;

namespace {

template <class F>
ErrorKind error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

struct Polygon {
    std::string cls;
    std::vector<std::pair<double, double>> pts;
    std::pair<double, double> centre() const {
        double x = 0, y = 0;
        for (auto [a, b] : pts) x += a, y += b;
        return {x / static_cast<double>(pts.size()), y / static_cast<double>(pts.size())};
    }
};

std::vector<Polygon> polygons(const std::string& svg) {
    static const std::regex re(R"re(<polygon class="(\w+)"[^>]*points="([^"]*)")re");
    std::vector<Polygon> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        Polygon p{(*it)[1], {}};
        std::istringstream in((*it)[2].str());
        double x, y;
        char comma;
        while (in >> x >> comma >> y) p.pts.emplace_back(x, y);
        out.push_back(std::move(p));
    }
    return out;
}

PlanePartition full(const BoxesParams& p) {
    PlanePartition pp(p.a, p.b);
    for (int i = 0; i < p.a; ++i)
        for (int j = 0; j < p.b; ++j) pp(i, j) = p.c;
    return pp;
}

}  // namespace

TEST_CASE("ascii plane partitions") {
    PlanePartition pp(2, 3);
    pp(0, 0) = 2, pp(0, 1) = 1, pp(1, 0) = 1;
    CHECK(render_ascii(pp) == "210\n100");
    pp(0, 0) = 12;
    CHECK(render_ascii(pp) == "12 1 0\n1 0 0");
}

TEST_CASE("ascii sign matrices") {
    SignMatrix m(3);
    m(0, 1) = 1, m(1, 0) = 1, m(1, 1) = -1, m(1, 2) = 1, m(2, 1) = 1;
    CHECK(render_ascii(m) == "0+0\n+-+\n0+0");
}

TEST_CASE("ascii independent sets") {
    const IndependentSetSystem sys({{10, 12}, {11}, {{10, 11}, {12, 11}}});
    IndependentSetState s = sys.bottom();
    const std::string text = render_ascii(sys, s);
    CHECK(text.find("black:") == 0);
    CHECK(text.find("\nwhite: 11") != std::string::npos);
}

TEST_CASE("ascii domino tilings") {
    const DominoSystem sys(rectangle_region(2, 2));
    const std::string a = render_ascii(sys, sys.bottom());
    const std::string b = render_ascii(sys, sys.top());
    CHECK(a != b);
    CHECK((a == "--\n--" || a == "||\n||"));
    CHECK((b == "--\n--" || b == "||\n||"));
    const DominoSystem wide(rectangle_region(82, 2));
    CHECK(error_kind([&] { render_ascii(wide, wide.bottom()); }) == ErrorKind::UnsupportedFamily);
}

TEST_CASE("lozenge svg of the unit cube") {
    const BoxesParams p{1, 1, 1};
    const std::string svg = render_lozenge_svg(PlanePartition(1, 1), p, {});
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_of(svg, "<polygon") == 4);
    CHECK(count_of(svg, "class=\"X\"") == 1);
    CHECK(count_of(svg, "class=\"Y\"") == 1);
    CHECK(count_of(svg, "class=\"Z\"") == 1);
    CHECK(count_of(svg, "class=\"outline\"") == 1);
    CHECK(svg.find("-0.000") == std::string::npos);
}

TEST_CASE("lozenge svg is deterministic and follows the render settings") {
    const BoxesParams p{3, 2, 4};
    PlanePartition pp(3, 2);
    pp(0, 0) = 3, pp(0, 1) = 2, pp(1, 0) = 1;
    const std::string a = render_lozenge_svg(pp, p, {});
    CHECK(a == render_lozenge_svg(pp, p, {}));
    RenderSpec spec;
    spec.palette = {"red", "green", "blue"};
    spec.scale = 5;
    const std::string b = render_lozenge_svg(pp, p, spec);
    CHECK(b != a);
    CHECK(count_of(b, "fill=\"red\"") == count_of(a, "class=\"X\""));
}

TEST_CASE("full box renders as the empty box turned through the centre") {
    const BoxesParams p{2, 2, 2};
    const auto empty = polygons(render_lozenge_svg(PlanePartition(2, 2), p, {}));
    const auto filled = polygons(render_lozenge_svg(full(p), p, {}));
    REQUIRE(empty.size() == 13);
    REQUIRE(filled.size() == 13);
    REQUIRE(empty.back().cls == "outline");
    const auto [cx, cy] = empty.back().centre();
    auto key = [](const Polygon& g, double sx, double sy) {
        const auto [x, y] = g.centre();
        return std::make_tuple(g.cls, std::lround(10 * (sx - x)), std::lround(10 * (sy - y)));
    };
    std::vector<std::tuple<std::string, long, long>> e, f;
    for (std::size_t i = 0; i + 1 < empty.size(); ++i) e.push_back(key(empty[i], 2 * cx, 2 * cy));
    for (std::size_t i = 0; i + 1 < filled.size(); ++i) f.push_back(key(filled[i], 0, 0));
    for (auto& [c, x, y] : f) x = -x, y = -y;
    std::sort(e.begin(), e.end());
    std::sort(f.begin(), f.end());
    CHECK(e == f);
}

TEST_CASE("32-cube hexagon has 3072 rhombi, 1024 per orientation") {
    const BoxesParams p{32, 32, 32};
    PlanePartition pp(32, 32);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) pp(i, j) = std::max(0, 32 - i - j);
    const std::string svg = render_lozenge_svg(pp, p, {});
    CHECK(count_of(svg, "<polygon class=\"X\"") == 1024);
    CHECK(count_of(svg, "<polygon class=\"Y\"") == 1024);
    CHECK(count_of(svg, "<polygon class=\"Z\"") == 1024);
}

TEST_CASE("domino svg") {
    const DominoSystem sys(rectangle_region(2, 3));
    const auto region = rectangle_region(2, 3);
    const auto tiling = sys.tiling(sys.bottom());
    const std::string svg = render_domino_svg(tiling, region, {});
    CHECK(count_of(svg, "<rect class=") == 3);
    CHECK(svg == render_domino_svg(tiling, region, {}));
}

TEST_CASE("render spec validation") {
    RenderSpec s;
    CHECK_NOTHROW(s.validate());
    s.scale = 0;
    CHECK(error_kind([&] { s.validate(); }) == ErrorKind::InvalidArgument);
    s.scale = 4;
    s.palette[2] = "";
    CHECK(error_kind([&] { s.validate(); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([&] { render_lozenge_svg(PlanePartition(1, 1), {1, 1, 1}, s); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("parse_params") {
    const auto m = parse_params("a=2,b=3,moves=filament");
    CHECK(m.size() == 3);
    CHECK(m.at("b") == "3");
    CHECK(parse_params("").empty());
    CHECK(error_kind([] { parse_params("a=1,a=2"); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { parse_params("a"); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { parse_params("=3"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("make_family builds every family") {
    CHECK(std::holds_alternative<IdealSystem>(make_family("boxes", parse_params("a=2,b=2,c=2")).system));
    CHECK(std::holds_alternative<FilamentSystem>(
        make_family("boxes", parse_params("a=2,b=2,c=2,moves=filament")).system));
    CHECK(make_family("catalan", parse_params("n=3")).paths.has_value());
    CHECK(std::holds_alternative<AsmSystem>(make_family("asm", parse_params("n=3")).system));
    CHECK(std::holds_alternative<DominoSystem>(make_family("domino", parse_params("w=2,h=3")).system));
    CHECK(std::holds_alternative<IdealSystem>(make_family("chain", parse_params("n=4")).system));
    CHECK(std::holds_alternative<IdealSystem>(make_family("antichain", parse_params("n=4")).system));
    CHECK(std::holds_alternative<IdealSystem>(make_family("point", {}).system));
    CHECK(std::holds_alternative<IdealSystem>(make_family("chain2", {}).system));
    CHECK(make_family("paths", parse_params("a=2,b=2,lower=1:0,upper=2:2")).paths.has_value());
    CHECK(error_kind([] { make_family("hexagons", {}); }) == ErrorKind::UnsupportedFamily);
    CHECK(error_kind([] { make_family("boxes", parse_params("a=2,b=2,c=2,d=1")); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { make_family("boxes", parse_params("a=2,b=x,c=2")); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { make_family("indep", parse_params("graph=/nonexistent.json")); }) != ErrorKind::UnsupportedFamily);
    CHECK(family_names().size() >= 10);
}

TEST_CASE("poset json round trip") {
    const Poset p = build_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const Json j = poset_to_json(p);
    const Poset q = poset_from_json(nlohmann::json::parse(j.dump()));
    CHECK(q.size() == 4);
    CHECK(poset_to_json(q) == j);
    CHECK(error_kind([] { poset_from_json(nlohmann::json::parse(R"({"elements":2,"covers":[[0,5]]})")); }) ==
          ErrorKind::IdentifierOutOfRange);
}

TEST_CASE("graph and region json") {
    const auto g = graph_from_json(nlohmann::json::parse(R"({"black":[0,2],"white":[1],"edges":[[0,1],[2,1]]})"));
    CHECK(g.black.size() == 2);
    CHECK(g.edges.size() == 2);
    const auto r = region_from_json(nlohmann::json::parse("[[0,0],[1,0]]"));
    CHECK(r.size() == 2);
}

TEST_CASE("rational strings") {
    CHECK(rational_string(Rational(2, 6)) == "1/3");
    CHECK(rational_string(Rational(4)) == "4/1");
    CHECK(rational_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("sample record layout") {
    const auto f = make_family("boxes", parse_params("a=2,b=2,c=1"));
    const auto& sys = std::get<IdealSystem>(f.system);
    const auto rec = cftp_sample(sys, RandomnessOracle(9), Schedule::uniform(sys.site_count()));
    const Json j = record_to_json(f, rec);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"family", "params", "seed", "algorithm_id", "schedule", "q", "T_final",
                                           "update_count", "state", "tool_version"});
    CHECK(j["state"].contains("plane_partition"));
    CHECK(j["state"]["volume"] == sys.rank_of(rec.state));
    CHECK(j.dump() == record_to_json(f, cftp_sample(sys, RandomnessOracle(9), Schedule::uniform(4))).dump());
}

TEST_CASE("state encodings per family") {
    const auto a = make_family("asm", parse_params("n=3"));
    const auto& asys = std::get<AsmSystem>(a.system);
    const Json ja = encode_state(a, asys.top());
    CHECK(ja.contains("asm"));
    CHECK(ja.contains("corner_sum"));
    const auto c = make_family("catalan", parse_params("n=2"));
    const auto& csys = std::get<IdealSystem>(c.system);
    CHECK(encode_state(c, csys.bottom())["path"] == "UDUD");
    const auto d = make_family("domino", parse_params("w=2,h=2"));
    const auto& dsys = std::get<DominoSystem>(d.system);
    CHECK(encode_state(d, dsys.bottom())["dominoes"].size() == 2);
}
