#include "diskdecomp/json_io.hpp"

#include "diskdecomp/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace diskdecomp {

void to_json(Json& j, const Landmark& lm)
{
    j = Json{{"m", {lm.center.x, lm.center.y}}, {"r", lm.radius}};
}

void from_json(const Json& j, Landmark& lm)
{
    if (!j.is_object() || !j.contains("m") || !j.contains("r")) {
        throw FormatError("landmark must be an object with \"m\" and \"r\"");
    }
    const Json& m = j.at("m");
    if (!m.is_array() || m.size() != 2 || !m[0].is_number() || !m[1].is_number() ||
        !j.at("r").is_number()) {
        throw FormatError("landmark \"m\" must be [x, y] and \"r\" a number");
    }
    lm.center = {m[0].get<double>(), m[1].get<double>()};
    lm.radius = j.at("r").get<double>();
    if (!std::isfinite(lm.center.x) || !std::isfinite(lm.center.y) || !std::isfinite(lm.radius)) {
        throw FormatError("landmark values must be finite");
    }
    if (!(lm.radius > 0.0)) {
        throw FormatError("landmark radius must be positive");
    }
}

void to_json(Json& j, const Configuration& cfg)
{
    j = Json{{"landmarks", cfg.landmarks}};
}

void from_json(const Json& j, Configuration& cfg)
{
    if (!j.is_object() || !j.contains("landmarks") || !j.at("landmarks").is_array()) {
        throw FormatError("configuration must be an object with a \"landmarks\" array");
    }
    cfg.landmarks.clear();
    for (const Json& item : j.at("landmarks")) {
        cfg.landmarks.push_back(item.get<Landmark>());
    }
}

void to_json(Json& j, const Arc& arc)
{
    j = Json{{"start", arc.start.radians()}, {"end", arc.end.radians()}};
}

CircularSequence parse_sequence(std::string_view text)
{
    std::vector<Level> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
            token.remove_prefix(1);
        }
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
            token.remove_suffix(1);
        }
        Level v = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw FormatError("malformed sequence \"" + std::string(text) +
                              "\": expected comma-separated naturals");
        }
        values.push_back(v);
        pos = comma + 1;
    }
    return CircularSequence(std::move(values));
}

CircularSequence sequence_from_json(const Json& j)
{
    const Json& arr = j.is_object() && j.contains("seq") ? j.at("seq") : j;
    if (!arr.is_array() || arr.empty()) {
        throw FormatError("sequence must be a nonempty array of naturals");
    }
    std::vector<Level> values;
    for (const Json& v : arr) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            throw FormatError("sequence entries must be naturals");
        }
        const auto x = v.get<unsigned long long>();
        if (x > std::numeric_limits<Level>::max()) {
            throw FormatError("sequence entry out of range");
        }
        values.push_back(static_cast<Level>(x));
    }
    return CircularSequence(std::move(values));
}

Json sequence_json(const CircularSequence& s)
{
    return Json{{"seq", canonical_rotation(s).values()}};
}

Configuration configuration_from_json(const Json& j)
{
    try {
        return j.get<Configuration>();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("invalid configuration: ") + e.what());
    }
}

Json load_json(const std::string& path, std::istream& in)
{
    std::stringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) {
            throw FormatError("cannot read " + path);
        }
        buffer << file.rdbuf();
    }
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw FormatError("invalid JSON in " + path + ": " + e.what());
    }
}

Configuration load_configuration(const std::string& path, std::istream& in)
{
    return configuration_from_json(load_json(path, in));
}

Json count_json(const RobustCount& count)
{
    if (count.exact()) {
        return count.lower;
    }
    return Json{{"lower", count.lower}, {"upper", count.upper}};
}

Json stats_json(const CanonicalFunction& c, std::uint64_t cap)
{
    const SequenceStats st = stats(c);
    Json tau_k = Json::object();
    for (const auto& [k, t] : st.tau_k) {
        tau_k[std::to_string(k)] = t;
    }
    const auto [lo, hi] = signal_count_bounds(st);
    return Json{
        {"seq", c.values()},
        {"f_sup", st.f_sup},
        {"f_inf", st.f_inf},
        {"tau_k", tau_k},
        {"tau", st.tau},
        {"L", st.L},
        {"unit_jumps", st.unit_jumps},
        {"bounds", {lo, hi}},
        {"signal_counts", baseline_signal_counts(st)},
        {"robust_count", count_json(count_robust(c, cap))},
    };
}

Json decomposition_json(const CombinatorialDecomposition& d, bool with_landmarks)
{
    Json j{{"arcs", d.arcs}, {"full_circles", d.base}, {"signals", d.signal_count()}};
    if (with_landmarks) {
        j["landmarks"] = realize(d).landmarks;
    }
    return j;
}

Json verdict_json(const RobustnessVerdict& v)
{
    Json violations = Json::array();
    for (const Violation& violation : v.violations) {
        if (const auto* nr = std::get_if<NonRobustSignal>(&violation)) {
            Json count = nr->boundary_count == kInfiniteBoundary ? Json("infinite")
                                                                 : Json(nr->boundary_count);
            violations.push_back(
                {{"kind", "non_robust_signal"}, {"index", nr->index}, {"boundary_count", count}});
        } else {
            const auto& sb = std::get<SharedBoundary>(violation);
            violations.push_back({{"kind", "shared_boundary"},
                                  {"first", sb.first},
                                  {"second", sb.second},
                                  {"at", sb.at.radians()}});
        }
    }
    return Json{{"robust", v.robust}, {"violations", violations}};
}

Json dof_json(const DoFReport& r)
{
    return Json{{"N", r.N}, {"n", r.n}, {"rho", r.rho}, {"dof", r.dof}};
}

Json report_json(const PerturbationReport& r)
{
    Json counterexample = nullptr;
    if (r.first_counterexample) {
        counterexample = Json{{"direction", r.first_counterexample->direction},
                              {"seq", r.first_counterexample->sequence}};
    }
    Json observed = Json::array();
    for (const auto& [s, count] : r.observed) {
        observed.push_back({{"seq", s}, {"count", count}});
    }
    return Json{
        {"all_equal", r.all_equal},
        {"trials", r.spec.trials},
        {"epsilon", r.spec.epsilon},
        {"seed", r.spec.seed},
        {"rng", kRngAlgorithm},
        {"nominal", r.nominal},
        {"counterexample", counterexample},
        {"observed", observed},
    };
}

} // namespace diskdecomp
