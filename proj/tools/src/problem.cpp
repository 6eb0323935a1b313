#include "gkz_app/problem.hpp"

#include <gkz/error.hpp>

#include <toml.hpp>

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace gkz::app {

namespace {

[[noreturn]] void fail(const std::string &field, const std::string &message) {
    throw Error(ErrorCode::InvalidInput, field + ": " + message);
}

std::int64_t as_integer(const Json &value, const std::string &field) {
    if (!value.is_number_integer())
        fail(field, "expected an integer, got " + value.dump());
    return value.get<std::int64_t>();
}

Rational as_rational(const Json &value, const std::string &field) {
    if (value.is_number_integer())
        return Rational(static_cast<long>(value.get<std::int64_t>()));
    if (!value.is_string())
        fail(field, "expected a rational string such as \"3/4\", got " + value.dump());
    try {
        return parse_rational(value.get<std::string>());
    } catch (const Error &e) {
        fail(field, "malformed rational \"" + value.get<std::string>() + "\"");
    }
}

const Json &as_array(const Json &value, const std::string &field) {
    if (!value.is_array())
        fail(field, "expected an array, got " + value.dump());
    return value;
}

IntVector integer_vector(const Json &value, const std::string &field) {
    IntVector out;
    std::size_t idx = 0;
    for (const auto &x : as_array(value, field))
        out.push_back(as_integer(x, field + "[" + std::to_string(++idx) + "]"));
    return out;
}

RatVector rational_vector(const Json &value, const std::string &field) {
    RatVector out;
    std::size_t idx = 0;
    for (const auto &x : as_array(value, field))
        out.push_back(as_rational(x, field + "[" + std::to_string(++idx) + "]"));
    return out;
}

Json from_toml(const toml::node &node, const std::string &path) {
    if (const auto *table = node.as_table()) {
        Json out = Json::object();
        for (const auto &[key, value] : *table)
            out[std::string(key.str())] =
                from_toml(value, path.empty() ? std::string(key.str())
                                              : path + "." + std::string(key.str()));
        return out;
    }
    if (const auto *array = node.as_array()) {
        Json out = Json::array();
        std::size_t idx = 0;
        for (const auto &value : *array)
            out.push_back(from_toml(value, path + "[" + std::to_string(++idx) + "]"));
        return out;
    }
    if (const auto *v = node.as_integer())
        return v->get();
    if (const auto *v = node.as_string())
        return v->get();
    if (const auto *v = node.as_boolean())
        return v->get();
    fail(path, "floating point and date values are not accepted; write rationals as strings");
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void reject_floats(const Json &value, const std::string &path) {
    if (value.is_number_float())
        fail(path, "floating point values are not accepted; write rationals as strings");
    if (value.is_object())
        for (const auto &[key, child] : value.items())
            reject_floats(child, path.empty() ? key : path + "." + key);
    if (value.is_array()) {
        std::size_t idx = 0;
        for (const auto &child : value)
            reject_floats(child, path + "[" + std::to_string(++idx) + "]");
    }
}

} // namespace

Json parse_toml(const std::string &text, const std::string &source) {
    try {
        const auto table = toml::parse(text, std::string_view(source));
        return from_toml(table, "");
    } catch (const toml::parse_error &e) {
        const auto &begin = e.source().begin;
        throw Error(ErrorCode::InvalidInput,
                    source + ":" + std::to_string(begin.line) + ":" +
                        std::to_string(begin.column) + ": " + std::string(e.description()));
    }
}

Json parse_json(const std::string &text, const std::string &source) {
    try {
        Json out = Json::parse(text);
        reject_floats(out, "");
        return out;
    } catch (const Json::parse_error &e) {
        throw Error(ErrorCode::InvalidInput, source + ": " + e.what());
    }
}

Json load_document(const std::filesystem::path &path) {
    const std::string text = read_file(path);
    if (path.extension() == ".toml")
        return parse_toml(text, path.string());
    return parse_json(text, path.string());
}

ProblemSpec parse_problem(const Json &doc) {
    if (!doc.is_object())
        fail("document", "expected a table/object at the top level");
    static const std::set<std::string> known{"A", "beta", "u", "lift", "window",
                                             "r", "verify", "exponents"};
    for (const auto &[key, value] : doc.items())
        if (!known.contains(key))
            fail(key, "unknown field");

    ProblemSpec spec;
    if (!doc.contains("A"))
        fail("A", "missing list of points");
    std::size_t idx = 0;
    for (const auto &column : as_array(doc["A"], "A"))
        spec.points.columns.push_back(
            integer_vector(column, "A[" + std::to_string(++idx) + "]"));
    if (spec.points.columns.empty())
        fail("A", "no points given");
    spec.points.dim = spec.points.columns.front().size();
    for (std::size_t c = 0; c < spec.points.columns.size(); ++c)
        if (spec.points.columns[c].size() != spec.points.dim)
            fail("A[" + std::to_string(c + 1) + "]",
                 "has " + std::to_string(spec.points.columns[c].size()) +
                     " coordinates, expected " + std::to_string(spec.points.dim));

    if (doc.contains("beta")) {
        spec.beta = rational_vector(doc["beta"], "beta");
        if (spec.beta->size() != spec.points.dim)
            fail("beta", "has " + std::to_string(spec.beta->size()) +
                             " entries, expected " + std::to_string(spec.points.dim));
    }
    if (doc.contains("u")) {
        spec.u = integer_vector(doc["u"], "u");
        if (spec.u->size() != spec.points.dim)
            fail("u", "has " + std::to_string(spec.u->size()) + " entries, expected " +
                          std::to_string(spec.points.dim));
    }
    if (doc.contains("lift")) {
        spec.lift = integer_vector(doc["lift"], "lift");
        if (spec.lift->size() != spec.points.columns.size())
            fail("lift", "has " + std::to_string(spec.lift->size()) +
                             " entries, expected " +
                             std::to_string(spec.points.columns.size()));
    }
    if (doc.contains("window")) {
        const auto w = integer_vector(doc["window"], "window");
        if (w.size() != 2 || w[0] > w[1])
            fail("window", "expected [lo, hi] with lo <= hi");
        spec.window = {w[0], w[1]};
    }
    if (doc.contains("r")) {
        const auto r = as_integer(doc["r"], "r");
        if (r < 0)
            fail("r", "must be nonnegative");
        spec.r = static_cast<std::size_t>(r);
    }
    if (doc.contains("verify")) {
        if (!doc["verify"].is_boolean())
            fail("verify", "expected true or false");
        spec.verify = doc["verify"].get<bool>();
    }
    if (doc.contains("exponents")) {
        idx = 0;
        for (const auto &v : as_array(doc["exponents"], "exponents")) {
            const std::string field = "exponents[" + std::to_string(++idx) + "]";
            spec.exponents.push_back(rational_vector(v, field));
            if (spec.exponents.back().size() != spec.points.columns.size())
                fail(field, "has wrong length");
        }
    }
    return spec;
}

ProblemSpec load_problem(const std::filesystem::path &path) {
    return parse_problem(load_document(path));
}

Window parse_window(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        fail("--window", "expected LO:HI, got \"" + text + "\"");
    try {
        std::size_t used = 0;
        const std::string lo_text = text.substr(0, colon);
        const std::string hi_text = text.substr(colon + 1);
        const long long lo = std::stoll(lo_text, &used);
        if (used != lo_text.size())
            throw std::invalid_argument(lo_text);
        const long long hi = std::stoll(hi_text, &used);
        if (used != hi_text.size())
            throw std::invalid_argument(hi_text);
        if (lo > hi)
            fail("--window", "LO exceeds HI");
        return {lo, hi};
    } catch (const std::logic_error &) {
        fail("--window", "expected LO:HI, got \"" + text + "\"");
    }
}

IntVector parse_integer_list(const std::string &text, const std::string &field) {
    IntVector out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const long long value = std::stoll(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::logic_error &) {
            fail(field, "expected comma-separated integers, got \"" + text + "\"");
        }
    }
    if (out.empty())
        fail(field, "empty list");
    return out;
}

} // namespace gkz::app
