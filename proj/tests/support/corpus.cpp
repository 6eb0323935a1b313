#include "corpus.hpp"

namespace gkz::testing {

PointConfig CorpusGenerator::next_points() {
    for (;;) {
        PointConfig points;
        points.dim = static_cast<std::size_t>(uniform(1, 4));
        const auto n = uniform(2, std::min<std::int64_t>(5, static_cast<std::int64_t>(points.dim) + 1));
        for (std::int64_t c = 0; c < n; ++c) {
            IntVector column(points.dim);
            for (auto &x : column)
                x = uniform(-4, 4);
            points.columns.push_back(std::move(column));
        }
        try {
            const auto config = build_config(points);
            if (config.volume() <= max_volume_)
                return points;
        } catch (const Error &) {
        }
    }
}

Rational CorpusGenerator::small_rational() {
    static constexpr long dens[] = {1, 2, 3, 5, 7};
    Rational q(static_cast<long>(uniform(-6, 6)), dens[uniform(0, 4)]);
    q.canonicalize();
    return q;
}

RatVector CorpusGenerator::random_beta(const LatticeConfig &config) {
    RatVector c(config.n());
    for (auto &x : c)
        x = small_rational();
    return config.image(std::span<const Rational>(c));
}

RatVector CorpusGenerator::nonresonant_beta(const LatticeConfig &config) {
    for (;;) {
        RatVector beta = random_beta(config);
        if (is_nonresonant(config, Parameter::make(config, beta)).nonresonant)
            return beta;
    }
}

RatVector CorpusGenerator::resonant_beta(const LatticeConfig &config) {
    RatVector c(config.n());
    for (auto &x : c)
        x = static_cast<long>(uniform(-3, 3));
    if (uniform(0, 1) == 1)
        c[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(config.n()) - 1))] +=
            small_rational();
    return config.image(std::span<const Rational>(c));
}

IntVector CorpusGenerator::random_lift(const LatticeConfig &config, std::int64_t bound) {
    IntVector lift(config.n());
    for (auto &x : lift)
        x = uniform(-bound, bound);
    return lift;
}

} // namespace gkz::testing
