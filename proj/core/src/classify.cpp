#include "gkz/classify.hpp"

#include "gkz/error.hpp"

namespace gkz {

SingularityType singularity_type(const LatticeConfig &config) {
    return config.positive_sum() == config.volume() ? SingularityType::Regular
                                                    : SingularityType::Irregular;
}

bool in_integral_cone_shift(const LatticeConfig &config, const Parameter &beta) {
    const std::size_t n = config.n();
    std::vector<std::size_t> head(n - 1);
    for (std::size_t mu = 0; mu + 1 < n; ++mu)
        head[mu] = mu;
    const auto sol = solve(to_rational(config.points().select_columns(head)), beta.values());
    if (!sol)
        throw Error(ErrorCode::BetaNotInSpan, "parameter is not in the span of the points");
    RatVector c0 = *sol;
    c0.emplace_back(0);

    // All representations are c0 + t*l; integrality of c0_0 + t*l_0 pins t
    // modulo 1 to one of l_0 classes.
    const Rational l0 = static_cast<long>(config.ell(0));
    for (std::int64_t m = 0; m < config.ell(0); ++m) {
        const Rational t = (Rational(static_cast<long>(m)) - c0[0]) / l0;
        bool ok = true;
        for (std::size_t i = 0; i < config.k() && ok; ++i)
            ok = is_integer(c0[i] + t * static_cast<long>(config.relation()[i]));
        if (ok)
            return true;
    }
    return false;
}

bool in_negative_span(const LatticeConfig &config, const Parameter &beta) {
    std::vector<std::size_t> tail;
    for (std::size_t mu = config.k(); mu < config.n(); ++mu)
        tail.push_back(mu);
    if (tail.empty())
        return std::all_of(beta.values().begin(), beta.values().end(),
                           [](const Rational &q) { return sgn(q) == 0; });
    return solve(to_rational(config.points().select_columns(tail)), beta.values())
        .has_value();
}

bool unit_positive_relation(const LatticeConfig &config) {
    for (std::size_t i = 0; i < config.k(); ++i)
        if (config.ell(i) != 1)
            return false;
    return true;
}

namespace {

void require_scope(const LatticeConfig &config, const Parameter &beta) {
    if (singularity_type(config) != SingularityType::Regular)
        throw Error(ErrorCode::IrregularSingularity,
                    "positive relation sum " + std::to_string(config.positive_sum()) +
                        " differs from the volume " + std::to_string(config.volume()));
    const auto resonance = is_nonresonant(config, beta);
    if (!resonance.nonresonant)
        throw Error(ErrorCode::NotNonresonant,
                    "facet functional (" + std::to_string(resonance.witness->i + 1) +
                        ", " + std::to_string(resonance.witness->j + 1) +
                        ") takes the integer value " +
                        resonance.witness->value.get_str());
}

} // namespace

MumResult is_mum(const LatticeConfig &config, const Parameter &beta) {
    require_scope(config, beta);
    MumResult out;
    out.exponent_count = exponent_set_prime(config, beta).exponents.size();
    out.mum = out.exponent_count == 1;
    out.beta_in_cone = in_integral_cone_shift(config, beta);
    out.unit_positive = unit_positive_relation(config);
    if (out.mum != (out.beta_in_cone && out.unit_positive))
        throw Error(ErrorCode::InternalInvariant,
                    "singleton exponent test disagrees with the cone criterion");
    return out;
}

MumHolomorphicResult is_mum_holomorphic(const LatticeConfig &config,
                                        const Parameter &beta) {
    MumHolomorphicResult out;
    out.mum = is_mum(config, beta);
    out.beta_in_negative_span = in_negative_span(config, beta);
    if (out.mum.mum) {
        const auto exponents = exponent_set_prime(config, beta).exponents;
        const auto &v = exponents.front().v;
        out.holomorphic = true;
        for (std::size_t i = 0; i < config.k(); ++i)
            out.holomorphic = out.holomorphic && sgn(v[i]) == 0;
    }
    if (out.holomorphic != (out.beta_in_negative_span && out.mum.unit_positive))
        throw Error(ErrorCode::InternalInvariant,
                    "holomorphic exponent test disagrees with the span criterion");
    return out;
}

Classification classify(const LatticeConfig &config, const Parameter &beta) {
    Classification out;
    out.singularity = singularity_type(config);
    out.resonance = is_nonresonant(config, beta);
    if (!out.regular()) {
        out.reason = "x0 = 0 is an irregular singularity";
        return out;
    }
    if (!out.resonance.nonresonant) {
        out.reason = "parameter is resonant";
        return out;
    }
    out.applicable = true;
    out.result = is_mum_holomorphic(config, beta);
    return out;
}

} // namespace gkz
