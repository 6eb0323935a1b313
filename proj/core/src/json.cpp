#include "gkz/json.hpp"

#include "gkz/error.hpp"

#include <algorithm>

namespace gkz {

Json rationals_to_json(std::span<const Rational> values) {
    Json out = Json::array();
    for (const auto &q : values)
        out.push_back(to_string(q));
    return out;
}

namespace {

Rational rational_from_json(const Json &value) {
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(static_cast<long>(value.get<std::int64_t>()));
    throw Error(ErrorCode::InvalidInput,
                "expected a rational string, got " + value.dump());
}

std::int64_t integer_from_json(const Json &value, const char *what) {
    if (!value.is_number_integer())
        throw Error(ErrorCode::InvalidInput,
                    std::string(what) + ": expected an integer, got " + value.dump());
    return value.get<std::int64_t>();
}

Json window_json(Window w) { return Json::array({w.lo, w.hi}); }

} // namespace

RatVector rationals_from_json(const Json &array) {
    if (!array.is_array())
        throw Error(ErrorCode::InvalidInput, "expected an array, got " + array.dump());
    RatVector out;
    for (const auto &x : array)
        out.push_back(rational_from_json(x));
    return out;
}

Json to_json(const LogSeries &series, const LatticeConfig *config) {
    RatVector base = series.base_exponent();
    IntVector relation = series.relation();
    if (config) {
        base = config->to_user_order(std::span<const Rational>(base));
        relation = config->to_user_order(std::span<const std::int64_t>(relation));
    }
    Json out;
    out["base_exponent"] = rationals_to_json(base);
    out["relation"] = relation;
    out["window"] = window_json(series.window());
    out["log_degree"] = series.max_log_degree();
    out["complete"] = series.complete();
    Json terms = Json::array();
    for (const auto &t : series.terms())
        terms.push_back({{"z", t.z}, {"r", t.log_degree}, {"coeff", to_string(t.coeff)}});
    out["terms"] = std::move(terms);
    return out;
}

LogSeries series_from_json(const Json &json, const LatticeConfig *config) {
    if (!json.is_object())
        throw Error(ErrorCode::InvalidInput, "series must be a JSON object");
    for (const char *key : {"base_exponent", "relation", "terms"})
        if (!json.contains(key))
            throw Error(ErrorCode::InvalidInput, std::string("series lacks \"") + key + "\"");

    RatVector base = rationals_from_json(json["base_exponent"]);
    IntVector relation;
    for (const auto &x : json["relation"])
        relation.push_back(integer_from_json(x, "relation"));
    if (relation.size() != base.size())
        throw Error(ErrorCode::InvalidInput, "relation and base exponent differ in length");
    if (config) {
        if (base.size() != config->n())
            throw Error(ErrorCode::InvalidInput, "series does not match the configuration");
        base = config->from_user_order(std::span<const Rational>(base));
        relation = config->from_user_order(std::span<const std::int64_t>(relation));
    }

    struct Entry {
        std::int64_t z;
        std::size_t r;
        Rational c;
    };
    std::vector<Entry> entries;
    for (const auto &t : json["terms"]) {
        const auto r = integer_from_json(t.at("r"), "r");
        if (r < 0)
            throw Error(ErrorCode::InvalidInput, "negative log degree in series term");
        entries.push_back({integer_from_json(t.at("z"), "z"),
                           static_cast<std::size_t>(r), rational_from_json(t.at("coeff"))});
    }

    Window window{0, -1};
    if (json.contains("window")) {
        const auto &w = json["window"];
        if (!w.is_array() || w.size() != 2)
            throw Error(ErrorCode::InvalidInput, "window must be [lo, hi]");
        window = {integer_from_json(w[0], "window"), integer_from_json(w[1], "window")};
    } else if (!entries.empty()) {
        const auto [lo, hi] = std::minmax_element(
            entries.begin(), entries.end(),
            [](const Entry &a, const Entry &b) { return a.z < b.z; });
        window = {lo->z, hi->z};
    }
    std::size_t top = 0;
    if (json.contains("log_degree"))
        top = static_cast<std::size_t>(integer_from_json(json["log_degree"], "log_degree"));
    else
        for (const auto &e : entries)
            top = std::max(top, e.r);

    LogSeries series(std::move(base), std::move(relation), window, top);
    for (auto &e : entries) {
        if (!window.contains(e.z) || e.r > top)
            throw Error(ErrorCode::InvalidInput,
                        "term (z=" + std::to_string(e.z) + ", r=" + std::to_string(e.r) +
                            ") lies outside the declared window");
        series.add(e.z, e.r, e.c);
    }
    if (json.contains("complete"))
        series.set_complete(json["complete"].get<bool>());
    return series;
}

Json to_json(const OperatorReport &report) {
    Json out;
    out["operator"] = report.name();
    out["safe_window"] = window_json(report.safe_window);
    out["passed"] = report.passed;
    if (report.first_failure)
        out["first_failure"] = {{"z", report.first_failure->z},
                                {"r", report.first_failure->log_degree},
                                {"residual", to_string(report.first_failure->coeff)}};
    else
        out["first_failure"] = nullptr;
    return out;
}

} // namespace gkz
