#include "gkz_app/commands.hpp"

#include <gkz/classify.hpp>
#include <gkz/error.hpp>
#include <gkz/exponents.hpp>
#include <gkz/verify.hpp>

#include <algorithm>
#include <sstream>

namespace gkz::app {

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidArgument:
    case ErrorCode::KernelRankNotOne:
    case ErrorCode::DependentSubset:
    case ErrorCode::ZeroRelationEntry:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::BetaNotInSpan:
    case ErrorCode::NotInLattice:
        return kInputError;
    case ErrorCode::NotNonresonant:
    case ErrorCode::NotMinimalSupport:
    case ErrorCode::HypothesisViolated:
    case ErrorCode::RNotLessThanMultiplicity:
    case ErrorCode::IrregularSingularity:
    case ErrorCode::SigmaIntegral:
        return kHypothesisViolation;
    case ErrorCode::CountMismatch:
    case ErrorCode::DegreeTooLarge:
    case ErrorCode::ExcludedCase:
    case ErrorCode::MismatchDetected:
    case ErrorCode::InternalInvariant:
        return kInternalFailure;
    }
    return kInternalFailure;
}

namespace {

struct Context {
    LatticeConfig config;
    std::optional<Parameter> beta;
    IntVector lift; // canonical order
    IntVector u;

    const Parameter &parameter() const {
        if (!beta)
            throw Error(ErrorCode::InvalidInput, "beta: missing parameter");
        return *beta;
    }
};

Context make_context(const ProblemSpec &spec) {
    Context ctx{build_config(spec.points), std::nullopt, {}, {}};
    const auto &config = ctx.config;
    if (spec.beta)
        ctx.beta = Parameter::make(config, *spec.beta);

    if (spec.lift) {
        ctx.lift = config.from_user_order(std::span<const std::int64_t>(*spec.lift));
        ctx.u = config.image(std::span<const std::int64_t>(ctx.lift));
        if (spec.u && *spec.u != ctx.u)
            throw Error(ErrorCode::InvalidInput, "lift: does not map to the given u");
    } else if (spec.u) {
        ctx.lift = canonical_lift(config, *spec.u);
        ctx.u = *spec.u;
    } else {
        ctx.lift.assign(config.n(), 0);
        ctx.u.assign(config.dim(), 0);
    }
    return ctx;
}

Json user_rationals(const LatticeConfig &config, const RatVector &canonical) {
    return rationals_to_json(config.to_user_order(std::span<const Rational>(canonical)));
}

Json user_integers(const LatticeConfig &config, const IntVector &canonical) {
    return config.to_user_order(std::span<const std::int64_t>(canonical));
}

std::size_t user_index(const LatticeConfig &config, std::size_t mu) {
    return config.perm()[mu] + 1;
}

Json user_indices(const LatticeConfig &config, const std::vector<std::size_t> &canonical) {
    std::vector<std::size_t> out;
    for (auto mu : canonical)
        out.push_back(user_index(config, mu));
    std::sort(out.begin(), out.end());
    return out;
}

template <typename T>
void sort_by_user_order(const LatticeConfig &config, std::vector<T> &items,
                        const RatVector &(*key)(const T &)) {
    std::stable_sort(items.begin(), items.end(), [&](const T &a, const T &b) {
        return lex_less(config.to_user_order(std::span<const Rational>(key(a))),
                        config.to_user_order(std::span<const Rational>(key(b))));
    });
}

const RatVector &exponent_key(const Exponent &e) { return e.v; }
const RatVector &bundle_key(const SolutionBundle &b) { return b.exponent.v; }

Json witness_json(const NonresonanceVerdict &verdict, const LatticeConfig &config) {
    if (verdict.nonresonant)
        return nullptr;
    return {{"i", user_index(config, verdict.witness->i)},
            {"j", user_index(config, verdict.witness->j)},
            {"value", verdict.witness->value.get_str()}};
}

Json labels_json(const LatticeConfig &config, const std::vector<ExponentLabel> &labels) {
    Json out = Json::array();
    for (const auto &l : labels)
        out.push_back({{"i", user_index(config, l.i)}, {"b", l.b}});
    return out;
}

Json certificate_json(const LatticeConfig &config, const SupportVerdict &v) {
    Json out;
    out["I"] = user_indices(config, v.I.elements());
    out["minimal"] = v.minimal;
    out["membership"] = v.membership.to_string();
    out["witness_z"] = v.witness_z ? Json(*v.witness_z) : Json(nullptr);
    return out;
}

Json certification_json(const Certification &c) {
    Json reports = Json::array();
    for (const auto &r : c.reports)
        reports.push_back(to_json(r));
    return {{"passed", c.passed}, {"reports", std::move(reports)}};
}

Json window_json(Window w) { return Json::array({w.lo, w.hi}); }

} // namespace

CommandResult cmd_analyze(const ProblemSpec &spec) {
    const Context ctx = make_context(spec);
    const auto &config = ctx.config;

    Json report;
    report["command"] = "analyze";
    Json points = Json::array();
    for (const auto &c : spec.points.columns)
        points.push_back(c);
    report["points"] = std::move(points);
    report["relation"] = user_integers(config, config.relation());
    std::vector<std::size_t> pos, neg;
    for (std::size_t mu = 0; mu < config.n(); ++mu)
        (config.positive(mu) ? pos : neg).push_back(mu);
    report["k"] = config.k();
    report["positive_indices"] = user_indices(config, pos);
    report["negative_indices"] = user_indices(config, neg);
    report["positive_sum"] = config.positive_sum();
    report["negative_sum"] = config.negative_sum();
    report["vol"] = config.volume();
    report["vol_crosscheck"] = volume_crosscheck(config);
    const bool regular = singularity_type(config) == SingularityType::Regular;
    report["singularity"] = regular ? "regular" : "irregular";
    report["regular"] = regular;

    Json facets = Json::array();
    for (std::size_t i = 0; i < config.k(); ++i)
        for (std::size_t j = config.k(); j < config.n(); ++j) {
            const auto h = facet_functional(config, i, j);
            std::vector<std::string> values;
            for (const auto &x : config.to_user_order(
                     std::span<const Integer>(h.values_on_A)))
                values.push_back(x.get_str());
            Json f{{"i", user_index(config, i)},
                   {"j", user_index(config, j)},
                   {"values_on_points", values}};
            if (ctx.beta)
                f["value_at_beta"] = to_string(h(ctx.beta->values()));
            facets.push_back(std::move(f));
        }
    report["facets"] = std::move(facets);

    if (ctx.beta) {
        const auto verdict = is_nonresonant(config, *ctx.beta);
        report["beta"] = rationals_to_json(ctx.beta->values());
        report["nonresonant"] = verdict.nonresonant;
        report["resonance_witness"] = witness_json(verdict, config);
    }
    if (report["vol"] != report["vol_crosscheck"])
        return {kInternalFailure, report};
    return {kOk, report};
}

CommandResult cmd_exponents(const ProblemSpec &spec) {
    const Context ctx = make_context(spec);
    const auto &config = ctx.config;
    const Parameter &beta = ctx.parameter();

    Json report;
    report["command"] = "exponents";
    report["beta"] = rationals_to_json(beta.values());

    auto fake = fake_exponents(config, beta);
    sort_by_user_order(config, fake, &exponent_key);
    Json fake_json = Json::array();
    for (const auto &e : fake)
        fake_json.push_back({{"v", user_rationals(config, e.v)},
                             {"labels", labels_json(config, e.labels)}});
    report["fake_exponents"] = std::move(fake_json);

    auto prime = exponent_set_prime(config, beta);
    sort_by_user_order(config, prime.exponents, &exponent_key);
    Json prime_json = Json::array();
    for (const auto &e : prime.exponents)
        prime_json.push_back({{"v", user_rationals(config, e.v)},
                              {"multiplicity", e.multiplicity()},
                              {"nonnegative_positions", user_indices(config, e.nonneg_positions)},
                              {"preimages", labels_json(config, e.labels)}});
    report["exponent_set"] = std::move(prime_json);
    report["multiplicity_sum"] = prime.multiplicity_sum;
    report["positive_sum"] = prime.positive_sum;
    report["count_check"] = prime.multiplicity_sum == prime.positive_sum;
    return {kOk, report};
}

namespace {

BundleOptions bundle_options(const ProblemSpec &spec, const LatticeConfig &config) {
    BundleOptions options;
    options.window = spec.window;
    options.max_log_degree = spec.r;
    for (const auto &v : spec.exponents)
        options.supplemental.push_back(config.from_user_order(std::span<const Rational>(v)));
    return options;
}

} // namespace

CommandResult cmd_solve(const ProblemSpec &spec) {
    const Context ctx = make_context(spec);
    const auto &config = ctx.config;
    const auto set = solution_bundle(config, ctx.parameter(), ctx.lift,
                                     bundle_options(spec, config));

    Json report;
    report["command"] = "solve";
    report["beta"] = rationals_to_json(ctx.parameter().values());
    report["u"] = ctx.u;
    report["lift"] = user_integers(config, ctx.lift);
    report["parameter"] = rationals_to_json(set.parameter.values());
    report["window"] = window_json(spec.window);
    report["expected_count"] = set.expected_count;
    report["independent_count"] = set.independent_count;
    report["supplemental_count"] = set.supplemental_count;
    report["complete"] = set.complete;

    auto bundles = set.bundles;
    std::stable_partition(bundles.begin(), bundles.end(),
                          [](const SolutionBundle &b) { return b.from_exponent_set; });
    const auto split = std::find_if(bundles.begin(), bundles.end(), [](const SolutionBundle &b) {
        return !b.from_exponent_set;
    });
    std::stable_sort(bundles.begin(), split, [&](const auto &a, const auto &b) {
        return lex_less(config.to_user_order(std::span<const Rational>(bundle_key(a))),
                        config.to_user_order(std::span<const Rational>(bundle_key(b))));
    });

    bool all_passed = true;
    Json bundles_json = Json::array();
    for (const auto &b : bundles) {
        Json bj;
        bj["exponent"] = user_rationals(config, b.exponent.v);
        bj["multiplicity"] = b.exponent.multiplicity();
        bj["from_exponent_set"] = b.from_exponent_set;
        bj["leading_series_zero"] = b.leading_series_zero;
        bj["diagnostic"] = b.diagnostic ? Json(*b.diagnostic) : Json(nullptr);
        Json certs = Json::array();
        for (const auto &c : b.certificates)
            certs.push_back(certificate_json(config, c));
        bj["certificates"] = std::move(certs);
        Json sols = Json::array();
        for (std::size_t r = 0; r < b.solutions.size(); ++r) {
            Json sj;
            sj["log_degree"] = r;
            sj["series"] = to_json(b.solutions[r], &config);
            if (spec.verify) {
                const auto cert = certify(config, b.parameter, b.solutions[r]);
                all_passed = all_passed && cert.passed;
                sj["certification"] = certification_json(cert);
            }
            sols.push_back(std::move(sj));
        }
        bj["solutions"] = std::move(sols);
        bundles_json.push_back(std::move(bj));
    }
    report["bundles"] = std::move(bundles_json);
    if (spec.verify)
        report["verified"] = all_passed;
    return {all_passed ? kOk : kInternalFailure, report};
}

CommandResult cmd_verify(const ProblemSpec &spec, const std::optional<Json> &series) {
    if (!series) {
        ProblemSpec forced = spec;
        forced.verify = true;
        auto result = cmd_solve(forced);
        result.report["command"] = "verify";
        return result;
    }

    const Context ctx = make_context(spec);
    const auto &config = ctx.config;
    const Json &body = series->contains("series") ? (*series)["series"] : *series;
    const LogSeries parsed = series_from_json(body, &config);
    const Parameter parameter = ctx.parameter().shifted(config, ctx.lift);
    const auto cert = certify(config, parameter.values(), parsed);

    Json report;
    report["command"] = "verify";
    report["parameter"] = rationals_to_json(parameter.values());
    report["series_window"] = window_json(parsed.window());
    report["certification"] = certification_json(cert);
    report["verified"] = cert.passed;
    return {cert.passed ? kOk : kInternalFailure, report};
}

CommandResult cmd_classify(const ProblemSpec &spec) {
    const Context ctx = make_context(spec);
    const auto &config = ctx.config;
    const auto c = classify(config, ctx.parameter());

    Json report;
    report["command"] = "classify";
    report["beta"] = rationals_to_json(ctx.parameter().values());
    report["singularity"] = c.regular() ? "regular" : "irregular";
    report["regular"] = c.regular();
    report["nonresonant"] = c.resonance.nonresonant;
    report["resonance_witness"] = witness_json(c.resonance, config);
    report["applicable"] = c.applicable;
    if (!c.applicable) {
        report["status"] = "not_applicable";
        report["reason"] = *c.reason;
        return {kHypothesisViolation, report};
    }
    const auto &r = *c.result;
    report["mum"] = r.mum.mum;
    report["mum_holomorphic"] = r.holomorphic;
    report["exponent_count"] = r.mum.exponent_count;
    report["beta_in_integral_cone_shift"] = r.mum.beta_in_cone;
    report["unit_positive_relation"] = r.mum.unit_positive;
    report["beta_in_negative_span"] = r.beta_in_negative_span;
    return {kOk, report};
}

CommandResult run_command(const std::string &name, const ProblemSpec &spec,
                          const std::optional<Json> &series) {
    try {
        if (name == "analyze")
            return cmd_analyze(spec);
        if (name == "exponents")
            return cmd_exponents(spec);
        if (name == "solve")
            return cmd_solve(spec);
        if (name == "verify")
            return cmd_verify(spec, series);
        if (name == "classify")
            return cmd_classify(spec);
        throw Error(ErrorCode::InvalidInput, "unknown command " + name);
    } catch (const Error &e) {
        Json report;
        report["command"] = name;
        report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        return {exit_code_for(e.code()), report};
    } catch (const std::exception &e) {
        Json report;
        report["command"] = name;
        report["error"] = {{"code", "InternalInvariant"}, {"message", e.what()}};
        return {kInternalFailure, report};
    }
}

namespace {

bool is_scalar(const Json &j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json &j) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "-";
    return j.dump();
}

void render(const Json &j, int indent, std::ostringstream &out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            if (is_scalar(value)) {
                out << pad << key << ": " << scalar_text(value) << "\n";
            } else if (value.is_array() &&
                       std::all_of(value.begin(), value.end(), is_scalar)) {
                out << pad << key << ": (";
                for (std::size_t t = 0; t < value.size(); ++t)
                    out << (t ? ", " : "") << scalar_text(value[t]);
                out << ")\n";
            } else {
                out << pad << key << ":\n";
                render(value, indent + 2, out);
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto &item : j) {
            if (is_scalar(item)) {
                out << pad << "- " << scalar_text(item) << "\n";
            } else {
                out << pad << "-\n";
                render(item, indent + 2, out);
            }
        }
        return;
    }
    out << pad << scalar_text(j) << "\n";
}

} // namespace

std::string render_text(const Json &report) {
    std::ostringstream out;
    render(report, 0, out);
    return out.str();
}

} // namespace gkz::app
