#include "gkz/exponents.hpp"

#include "gkz/error.hpp"

#include <algorithm>
#include <map>

namespace gkz {

std::vector<std::size_t> IndexSet::elements() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::vector<std::size_t> nonneg_positions(const LatticeConfig &config,
                                          const RatVector &v) {
    std::vector<std::size_t> out;
    for (std::size_t mu = 0; mu < config.k(); ++mu)
        if (is_nonnegative_integer(v[mu]))
            out.push_back(mu);
    return out;
}

Exponent make_exponent(const LatticeConfig &config, RatVector v) {
    Exponent e;
    e.nonneg_positions = nonneg_positions(config, v);
    e.v = std::move(v);
    return e;
}

namespace {

struct LexLess {
    bool operator()(const RatVector &a, const RatVector &b) const {
        return lex_less(a, b);
    }
};

// Collects vectors with their labels, keyed by exact equality.
class ExponentCollector {
public:
    void add(RatVector v, const std::vector<ExponentLabel> &labels) {
        auto &slot = by_vector_[std::move(v)];
        slot.insert(slot.end(), labels.begin(), labels.end());
    }

    std::vector<Exponent> finish(const LatticeConfig &config) && {
        std::vector<Exponent> out;
        for (auto &[v, labels] : by_vector_) {
            auto e = make_exponent(config, v);
            e.labels = std::move(labels);
            std::sort(e.labels.begin(), e.labels.end(),
                      [](const ExponentLabel &a, const ExponentLabel &b) {
                          return a.i != b.i ? a.i < b.i : a.b < b.b;
                      });
            out.push_back(std::move(e));
        }
        return out;
    }

private:
    std::map<RatVector, std::vector<ExponentLabel>, LexLess> by_vector_;
};

} // namespace

std::vector<Exponent> fake_exponents(const LatticeConfig &config,
                                     const Parameter &beta) {
    const std::size_t n = config.n();
    ExponentCollector collector;
    for (std::size_t i = 0; i < config.k(); ++i) {
        std::vector<std::size_t> others;
        for (std::size_t mu = 0; mu < n; ++mu)
            if (mu != i)
                others.push_back(mu);
        const RatMatrix sub = to_rational(config.points().select_columns(others));
        const RatVector ai = config.column(i);

        for (std::int64_t b = 0; b < config.ell(i); ++b) {
            RatVector rhs = beta.values();
            for (std::size_t r = 0; r < rhs.size(); ++r)
                rhs[r] -= Rational(static_cast<long>(b)) * ai[r];
            const auto sol = solve(sub, rhs);
            if (!sol)
                throw Error(ErrorCode::BetaNotInSpan,
                            "parameter is not in the span of the points");
            RatVector v(n);
            v[i] = static_cast<long>(b);
            for (std::size_t t = 0; t < others.size(); ++t)
                v[others[t]] = (*sol)[t];
            collector.add(std::move(v), {ExponentLabel{i, b}});
        }
    }
    return std::move(collector).finish(config);
}

NormalizedExponent normalize_to_E_prime(const LatticeConfig &config,
                                        const RatVector &v) {
    std::optional<Integer> z0;
    for (std::size_t i = 0; i < config.k(); ++i) {
        if (!is_integer(v[i]))
            continue;
        const Integer need = ceil(-v[i] / Rational(static_cast<long>(config.ell(i))));
        if (!z0 || need > *z0)
            z0 = need;
    }
    if (!z0)
        throw Error(ErrorCode::InvalidArgument,
                    "exponent " + to_string(std::span<const Rational>(v)) +
                        " has no integral coordinate on the positive side");

    const std::int64_t shift = to_int64(*z0);
    RatVector out = v;
    for (std::size_t mu = 0; mu < out.size(); ++mu)
        out[mu] += Rational(static_cast<long>(shift * config.relation()[mu]));
    return {make_exponent(config, std::move(out)), shift};
}

ExponentSetPrime exponent_set_prime(const LatticeConfig &config,
                                    const Parameter &beta) {
    ExponentCollector collector;
    for (const auto &e : fake_exponents(config, beta))
        collector.add(normalize_to_E_prime(config, e.v).exponent.v, e.labels);

    ExponentSetPrime out;
    out.exponents = std::move(collector).finish(config);
    out.positive_sum = config.positive_sum();
    for (const auto &e : out.exponents) {
        if (e.labels.size() != e.multiplicity())
            throw Error(ErrorCode::CountMismatch,
                        "exponent " + to_string(std::span<const Rational>(e.v)) +
                            " has " + std::to_string(e.labels.size()) +
                            " preimages but multiplicity " +
                            std::to_string(e.multiplicity()));
        out.multiplicity_sum += static_cast<std::int64_t>(e.multiplicity());
    }
    if (out.multiplicity_sum != out.positive_sum)
        throw Error(ErrorCode::CountMismatch,
                    "multiplicities sum to " + std::to_string(out.multiplicity_sum) +
                        ", expected " + std::to_string(out.positive_sum));
    return out;
}

IndexSet negative_support(const RatVector &v, IndexSet I) {
    IndexSet out;
    for (auto mu : I.elements())
        if (mu < v.size() && is_negative_integer(v[mu]))
            out.insert(mu);
    return out;
}

bool ZSet::contains(std::int64_t z) const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [z](const ZInterval &p) { return p.contains(z); });
}

bool ZSet::bounded() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const ZInterval &p) { return p.lo && p.hi; });
}

std::string ZSet::to_string() const {
    std::string out = "{";
    for (std::size_t t = 0; t < parts_.size(); ++t) {
        const auto &p = parts_[t];
        if (t)
            out += ", ";
        if (p.lo && p.hi && *p.lo == *p.hi) {
            out += std::to_string(*p.lo);
            continue;
        }
        out += p.lo ? std::to_string(*p.lo) : "-inf";
        out += "..";
        out += p.hi ? std::to_string(*p.hi) : "+inf";
    }
    return out + "}";
}

SupportVerdict support_verdict(const LatticeConfig &config, const RatVector &v,
                               IndexSet I, std::span<const std::int64_t> lift) {
    SupportVerdict verdict;
    verdict.I = I;
    verdict.lift.assign(lift.begin(), lift.end());

    // Coordinate mu of v + lift + z*l is a negative integer exactly on a
    // half-line of z; record its endpoint.
    struct HalfLine {
        std::size_t mu;
        bool below; // z < t when true, z >= t otherwise
        std::int64_t t;
    };
    std::vector<HalfLine> lines;
    for (auto mu : I.elements()) {
        const Rational c = v[mu] + Rational(static_cast<long>(lift[mu]));
        if (!is_integer(c))
            continue;
        const std::int64_t s = config.relation()[mu];
        if (s > 0)
            lines.push_back({mu, true, to_int64(ceil(-c / Rational(static_cast<long>(s))))});
        else
            lines.push_back({mu, false, to_int64(floor(c / Rational(static_cast<long>(-s)))) + 1});
    }

    const auto pattern = [&](std::int64_t z) {
        IndexSet p;
        for (const auto &h : lines)
            if (h.below ? z < h.t : z >= h.t)
                p.insert(h.mu);
        return p;
    };
    const IndexSet target = negative_support(v, I);

    std::vector<std::int64_t> cuts;
    for (const auto &h : lines)
        cuts.push_back(h.t);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Segments: (-inf, cuts[0]-1], [cuts[0], cuts[1]-1], ..., [cuts.back(), +inf).
    std::vector<ZInterval> parts;
    const std::size_t segments = cuts.size() + 1;
    for (std::size_t s = 0; s < segments; ++s) {
        ZInterval seg;
        if (s > 0)
            seg.lo = cuts[s - 1];
        if (s < cuts.size())
            seg.hi = cuts[s] - 1;
        const std::int64_t probe = seg.lo ? *seg.lo : (seg.hi ? *seg.hi : 0);
        const IndexSet p = pattern(probe);
        if (p == target) {
            if (!parts.empty() && parts.back().hi && seg.lo &&
                *parts.back().hi + 1 == *seg.lo)
                parts.back().hi = seg.hi;
            else
                parts.push_back(seg);
        } else if (p.proper_subset_of(target) && verdict.minimal) {
            verdict.minimal = false;
            verdict.witness_z = probe;
        }
    }
    verdict.membership = ZSet(std::move(parts));
    return verdict;
}

ExponentMatch match_exponent(const LatticeConfig &config, const Parameter &beta,
                             std::span<const std::int64_t> lift,
                             const Exponent &v) {
    const auto resonance = is_nonresonant(config, beta);
    if (!resonance.nonresonant)
        throw Error(ErrorCode::NotNonresonant,
                    "facet functional (" + std::to_string(resonance.witness->i + 1) +
                        ", " + std::to_string(resonance.witness->j + 1) +
                        ") takes the integer value " +
                        resonance.witness->value.get_str());

    RatVector shifted = v.v;
    for (std::size_t mu = 0; mu < shifted.size(); ++mu)
        shifted[mu] += Rational(static_cast<long>(lift[mu]));
    auto normalized = normalize_to_E_prime(config, shifted);

    if (normalized.exponent.nonneg_positions != v.nonneg_positions)
        throw Error(ErrorCode::InternalInvariant,
                    "matched exponent changes the nonnegative positions");

    ExponentMatch out;
    out.lift.resize(v.v.size());
    for (std::size_t mu = 0; mu < v.v.size(); ++mu) {
        const Rational d = normalized.exponent.v[mu] - v.v[mu];
        if (!is_integer(d))
            throw Error(ErrorCode::InternalInvariant, "matched exponent not integral shift");
        out.lift[mu] = to_int64(d.get_num());
    }
    out.matched = std::move(normalized.exponent);
    return out;
}

} // namespace gkz
