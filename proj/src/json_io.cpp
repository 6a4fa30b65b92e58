#include "ptiles/json_io.hpp"

#include <set>
#include <string>

#include "ptiles/errors.hpp"

namespace ptiles {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_keys(const json& j, const std::set<std::string>& keys,
                  const std::string& what) {
    if (!j.is_object()) throw FormatError(what + ": expected a JSON object");
    for (const std::string& k : keys)
        if (!j.contains(k)) throw FormatError(what + ": missing key \"" + k + "\"");
    for (const auto& item : j.items())
        if (keys.count(item.key()) == 0)
            throw FormatError(what + ": unexpected key \"" + item.key() + "\"");
}

long long read_integer(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw FormatError(what + ": expected an integer, got " + j.dump());
    return j.get<long long>();
}

std::vector<long long> read_integer_array(const json& j, const std::string& what) {
    if (!j.is_array()) throw FormatError(what + ": expected an array");
    std::vector<long long> out;
    out.reserve(j.size());
    for (const auto& el : j) out.push_back(read_integer(el, what));
    return out;
}

}  // namespace

PointSet read_point_set(const json& j) {
    require_keys(j, {"p", "precision", "points"}, "point set");
    PrimeBase base(read_integer(j.at("p"), "point set p"));
    int precision = static_cast<int>(read_integer(j.at("precision"), "point set precision"));
    return PointSet(base, precision, read_integer_array(j.at("points"), "point set points"));
}

LevelSet read_level_set(const json& j) {
    require_keys(j, {"p", "level", "members"}, "level set");
    PrimeBase base(read_integer(j.at("p"), "level set p"));
    int level = static_cast<int>(read_integer(j.at("level"), "level set level"));
    return LevelSet(base, level, read_integer_array(j.at("members"), "level set members"));
}

namespace {

std::vector<Ball> read_balls(const json& j, const PrimeBase& base) {
    if (!j.is_array()) throw FormatError("balls: expected an array");
    std::vector<Ball> balls;
    balls.reserve(j.size());
    for (const auto& el : j) {
        require_keys(el, {"level", "center"}, "ball");
        int level = static_cast<int>(read_integer(el.at("level"), "ball level"));
        long long center = read_integer(el.at("center"), "ball center");
        if (level >= 0 && (center < 0 || center >= base.pow(level)))
            throw DomainError("ball center " + std::to_string(center) +
                              " out of [0, p^level)");
        balls.emplace_back(base, level, center);
    }
    return balls;
}

}  // namespace

CompactOpenSet read_compact_open(const json& j) {
    require_keys(j, {"p", "balls"}, "compact open set");
    PrimeBase base(read_integer(j.at("p"), "compact open set p"));
    return canonicalize(base, read_balls(j.at("balls"), base));
}

CensusRecord read_census_record(const json& j, const PrimeBase& base, int level) {
    require_keys(j, {"omega", "complements", "gamma_t", "compact_open"}, "census record");
    LevelSet omega(base, level, read_integer_array(j.at("omega"), "census omega"));
    const json& comps = j.at("complements");
    if (!comps.is_array()) throw FormatError("census complements: expected an array");
    std::vector<PointSet> complements;
    complements.reserve(comps.size());
    for (const auto& el : comps)
        complements.emplace_back(base, level, read_integer_array(el, "census complement"));
    int gamma = static_cast<int>(read_integer(j.at("gamma_t"), "census gamma_t"));
    require_keys(j.at("compact_open"), {"balls"}, "census compact_open");
    CompactOpenSet shape = canonicalize(base, read_balls(j.at("compact_open").at("balls"), base));
    return CensusRecord{omega, std::move(complements), gamma, shape};
}

nlohmann::ordered_json write_point_set(const PointSet& t) {
    ordered_json j;
    j["p"] = t.base().p();
    j["precision"] = t.precision();
    j["points"] = t.points();
    return j;
}

nlohmann::ordered_json write_level_set(const LevelSet& omega) {
    ordered_json j;
    j["p"] = omega.base().p();
    j["level"] = omega.level();
    j["members"] = omega.members();
    return j;
}

nlohmann::ordered_json write_compact_open(const CompactOpenSet& s) {
    ordered_json j;
    j["p"] = s.base().p();
    j["balls"] = ordered_json::array();
    for (const Ball& b : s.balls()) {
        ordered_json jb;
        jb["level"] = b.level();
        jb["center"] = b.center();
        j["balls"].push_back(std::move(jb));
    }
    return j;
}

nlohmann::ordered_json write_census_record(const CensusRecord& record) {
    ordered_json j;
    j["omega"] = record.omega.members();
    j["complements"] = ordered_json::array();
    for (const PointSet& t : record.complements) j["complements"].push_back(t.points());
    j["gamma_t"] = record.gamma;
    ordered_json shape;
    shape["balls"] = ordered_json::array();
    for (const Ball& b : record.compact_open.balls()) {
        ordered_json jb;
        jb["level"] = b.level();
        jb["center"] = b.center();
        shape["balls"].push_back(std::move(jb));
    }
    j["compact_open"] = std::move(shape);
    return j;
}

}  // namespace ptiles
