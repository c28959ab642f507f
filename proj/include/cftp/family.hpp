#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cftp/bigint.hpp"
#include "cftp/families/asm.hpp"
#include "cftp/families/boxes.hpp"
#include "cftp/families/domino.hpp"
#include "cftp/families/filament.hpp"
#include "cftp/families/independent_sets.hpp"
#include "cftp/families/paths.hpp"
#include "cftp/ideal_system.hpp"
#include "cftp/oracle/census.hpp"
#include "cftp/oracle/enumerate.hpp"
#include "cftp/sampler.hpp"

namespace cftp {

inline constexpr std::string_view kToolVersion = "cftp 0.3.0";

using Json = nlohmann::ordered_json;
using ParamMap = std::map<std::string, std::string, std::less<>>;

/// "a=2,b=2,c=2" -> {a:2, b:2, c:2}.  Empty text gives an empty map.
ParamMap parse_params(std::string_view text);

using AnySystem = std::variant<IdealSystem, FilamentSystem, AsmSystem, IndependentSetSystem, DominoSystem>;

/// A built-in family resolved to a concrete system plus whatever the state
/// codecs need to decode its states.
struct FamilyInstance {
    std::string family;
    Json params;  // canonical echo, embedded in every record
    AnySystem system;
    std::optional<BoxesParams> boxes;
    std::optional<PathPoset> paths;
};

/// Families: boxes{a,b,c[,moves=site|filament]}, catalan{n},
/// paths{a,b,lower=l0:l1:..,upper=u0:u1:..}, asm{n}, indep{graph=FILE},
/// domino{region=FILE | w,h}, chain{n}, chain2, point, antichain{n},
/// poset{file=FILE}.  Throws UnsupportedFamily or InvalidArgument.
FamilyInstance make_family(std::string_view family, const ParamMap& params);

std::vector<std::string> family_names();

Json encode_state(const FamilyInstance& f, const OrderIdeal& s);
Json encode_state(const FamilyInstance& f, const PlanePartition& s);
Json encode_state(const FamilyInstance& f, const CornerSumMatrix& s);
Json encode_state(const FamilyInstance& f, const IndependentSetState& s);
Json encode_state(const FamilyInstance& f, const DominoHeight& s);

std::string ascii_state(const FamilyInstance& f, const OrderIdeal& s);
std::string ascii_state(const FamilyInstance& f, const PlanePartition& s);
std::string ascii_state(const FamilyInstance& f, const CornerSumMatrix& s);
std::string ascii_state(const FamilyInstance& f, const IndependentSetState& s);
std::string ascii_state(const FamilyInstance& f, const DominoHeight& s);

/// Plane partition behind a boxes state, whichever move set produced it.
PlanePartition as_plane_partition(const FamilyInstance& f, const OrderIdeal& s);
inline PlanePartition as_plane_partition(const FamilyInstance&, const PlanePartition& s) { return s; }

/// {"elements": m, "covers": [[lower, upper], ...]}
Json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);
/// {"black": [...], "white": [...], "edges": [[u, v], ...]}
BipartiteGraph graph_from_json(const nlohmann::json& j);
/// [[x, y], ...]
std::vector<Cell> region_from_json(const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

/// "p/q" in lowest terms.
std::string rational_string(const Rational& r);
double rational_double(const Rational& r);

template <class State>
Json record_to_json(const FamilyInstance& f, const SampleRecord<State>& r) {
    Json j;
    j["family"] = f.family;
    j["params"] = f.params;
    j["seed"] = r.seed;
    j["algorithm_id"] = r.algorithm_id;
    j["schedule"] = r.schedule;
    j["q"] = r.q;
    j["T_final"] = r.T_final;
    j["update_count"] = r.update_count;
    j["state"] = encode_state(f, r.state);
    j["tool_version"] = kToolVersion;
    return j;
}

template <class State>
Json enumeration_to_json(const FamilyInstance& f, const EnumerationResult<State>& e) {
    Json j;
    j["family"] = f.family;
    j["params"] = f.params;
    j["count"] = e.count.str();
    Json ranks = Json::array();
    for (const BigInt& c : e.by_rank) ranks.push_back(c.str());
    j["by_rank"] = ranks;
    Json states = Json::array();
    for (const State& s : e.states) states.push_back(encode_state(f, s));
    j["states"] = states;
    j["tool_version"] = kToolVersion;
    return j;
}

template <class State>
Json census_to_json(const FamilyInstance& f, const CensusResult<State>& c, const std::string& schedule) {
    Json j;
    j["family"] = f.family;
    j["params"] = f.params;
    j["schedule"] = schedule;
    j["horizon"] = c.horizon;
    j["sequences"] = c.sequences.str();
    j["uncoalesced"] = rational_string(c.uncoalesced);
    Json rows = Json::array();
    for (std::size_t i = 0; i < c.states.size(); ++i) {
        Json row;
        row["state"] = encode_state(f, c.states[i]);
        row["lower"] = rational_string(c.lower[i]);
        row["upper"] = rational_string(c.upper[i]);
        rows.push_back(row);
    }
    j["states"] = rows;
    j["tool_version"] = kToolVersion;
    return j;
}

}  // namespace cftp
