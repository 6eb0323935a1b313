#include "gkz/series.hpp"

#include "gkz/coefficients.hpp"
#include "gkz/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace gkz {

LogSeries::LogSeries(RatVector base_exponent, IntVector relation, Window window,
                     std::size_t max_log_degree)
    : base_(std::move(base_exponent)), relation_(std::move(relation)),
      window_(window), max_log_degree_(max_log_degree),
      coeffs_(window.size() * (max_log_degree + 1)) {
    if (window_.empty())
        window_ = Window{0, -1};
}

const Rational &LogSeries::coeff(std::int64_t z, std::size_t r) const {
    static const Rational zero = 0;
    if (!window_.contains(z) || r > max_log_degree_)
        return zero;
    return coeffs_[offset(z, r)];
}

void LogSeries::set(std::int64_t z, std::size_t r, Rational value) {
    if (!window_.contains(z) || r > max_log_degree_)
        throw Error(ErrorCode::InvalidArgument,
                    "term (z=" + std::to_string(z) + ", r=" + std::to_string(r) +
                        ") outside the series grid");
    coeffs_[offset(z, r)] = std::move(value);
}

void LogSeries::add(std::int64_t z, std::size_t r, const Rational &value) {
    if (!window_.contains(z) || r > max_log_degree_)
        throw Error(ErrorCode::InvalidArgument,
                    "term (z=" + std::to_string(z) + ", r=" + std::to_string(r) +
                        ") outside the series grid");
    coeffs_[offset(z, r)] += value;
}

bool LogSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational &q) { return sgn(q) == 0; });
}

std::vector<SeriesTerm> LogSeries::terms() const {
    std::vector<SeriesTerm> out;
    for (std::int64_t z = window_.lo; z <= window_.hi; ++z)
        for (std::size_t r = 0; r <= max_log_degree_; ++r)
            if (const auto &c = coeffs_[offset(z, r)]; sgn(c) != 0)
                out.push_back({z, r, c});
    return out;
}

RatVector LogSeries::exponent_at(std::int64_t z) const {
    RatVector out = base_;
    for (std::size_t mu = 0; mu < out.size(); ++mu)
        out[mu] += Rational(static_cast<long>(z * relation_[mu]));
    return out;
}

LogSeries LogSeries::restricted(Window sub) const {
    const Window w{std::max(sub.lo, window_.lo), std::min(sub.hi, window_.hi)};
    LogSeries out(base_, relation_, w, max_log_degree_);
    for (std::int64_t z = w.lo; z <= w.hi; ++z)
        for (std::size_t r = 0; r <= max_log_degree_; ++r)
            out.set(z, r, coeff(z, r));
    return out;
}

namespace {

RatVector shifted_base(const RatVector &v, std::span<const std::int64_t> lift) {
    RatVector out = v;
    for (std::size_t mu = 0; mu < out.size(); ++mu)
        out[mu] += Rational(static_cast<long>(lift[mu]));
    return out;
}

std::string index_set_string(IndexSet I) {
    std::string out = "{";
    bool first = true;
    for (auto mu : I.elements()) {
        if (!first)
            out += ",";
        out += std::to_string(mu + 1);
        first = false;
    }
    return out + "}";
}

IndexSet support_complement(const Multiset &rho, std::size_t n) {
    IndexSet supp;
    for (std::size_t mu = 0; mu < rho.size(); ++mu)
        if (rho[mu] > 0)
            supp.insert(mu);
    return supp.complement(n);
}

bool covered_by(const ZSet &membership, Window window) {
    if (!membership.bounded())
        return false;
    return std::all_of(membership.parts().begin(), membership.parts().end(),
                       [&](const ZInterval &p) {
                           return *p.lo >= window.lo && *p.hi <= window.hi;
                       });
}

// M_{lift_mu + z l_mu, s}(v_mu), cached per (mu, z, s).
class MTable {
public:
    MTable(const LatticeConfig &config, const RatVector &v,
           std::span<const std::int64_t> lift, Window window, std::size_t s_max)
        : config_(config), v_(v), lift_(lift), window_(window), s_max_(s_max),
          cache_(config.n() * window.size() * (s_max + 1)) {}

    const Rational &operator()(std::size_t mu, std::int64_t z, std::size_t s) {
        auto &slot = cache_[(mu * window_.size() +
                             static_cast<std::size_t>(z - window_.lo)) *
                                (s_max_ + 1) +
                            s];
        if (!slot)
            slot = coefficient_M(lift_[mu] + z * config_.relation()[mu],
                                 static_cast<std::int64_t>(s), v_[mu]);
        return *slot;
    }

private:
    const LatticeConfig &config_;
    const RatVector &v_;
    std::span<const std::int64_t> lift_;
    Window window_;
    std::size_t s_max_;
    std::vector<std::optional<Rational>> cache_;
};

Rational phi_coefficient(MTable &table, const Multiset &rho, std::int64_t z) {
    Rational out = 1;
    for (std::size_t mu = 0; mu < rho.size(); ++mu) {
        out *= table(mu, z, rho[mu]);
        if (sgn(out) == 0)
            break;
    }
    return out;
}

void for_each_multiset(std::size_t n, std::size_t size,
                       const std::function<void(const Multiset &)> &visit) {
    Multiset rho(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t mu,
                                                             std::size_t left) {
        if (mu + 1 == n) {
            rho[mu] = static_cast<unsigned>(left);
            visit(rho);
            rho[mu] = 0;
            return;
        }
        for (std::size_t c = 0; c <= left; ++c) {
            rho[mu] = static_cast<unsigned>(c);
            rec(mu + 1, left - c);
        }
        rho[mu] = 0;
    };
    rec(0, size);
}

Integer factorial(std::size_t m) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), m);
    return out;
}

} // namespace

LogSeries phi_series(const LatticeConfig &config, const RatVector &v,
                     std::span<const std::int64_t> lift, const Multiset &rho,
                     Window window) {
    const std::size_t n = config.n();
    if (v.size() != n || lift.size() != n || rho.size() != n)
        throw Error(ErrorCode::InvalidArgument, "vector length does not match the configuration");

    const IndexSet I = support_complement(rho, n);
    const auto verdict = support_verdict(config, v, I, lift);
    if (!verdict.minimal)
        throw Error(ErrorCode::NotMinimalSupport,
                    "I = " + index_set_string(I) + " shrinks at z = " +
                        std::to_string(*verdict.witness_z));

    LogSeries series(shifted_base(v, lift), config.relation(), window, 0);
    if (window.empty()) {
        series.set_complete(verdict.membership.empty());
        return series;
    }
    const unsigned s_max = *std::max_element(rho.begin(), rho.end());
    MTable table(config, v, lift, window, s_max);
    for (std::int64_t z = window.lo; z <= window.hi; ++z)
        if (verdict.membership.contains(z))
            series.set(z, 0, phi_coefficient(table, rho, z));
    series.set_complete(covered_by(verdict.membership, window));
    return series;
}

std::vector<SupportVerdict> hypothesis_certificates(
    const LatticeConfig &config, const RatVector &v,
    std::span<const std::int64_t> lift, std::size_t r) {
    const std::size_t n = config.n();
    std::vector<IndexSet> sets;
    // Complements of size <= r.
    std::function<void(std::size_t, IndexSet)> rec = [&](std::size_t from,
                                                         IndexSet removed) {
        sets.push_back(removed.complement(n));
        if (removed.size() == r)
            return;
        for (std::size_t mu = from; mu < n; ++mu) {
            IndexSet next = removed;
            next.insert(mu);
            rec(mu + 1, next);
        }
    };
    rec(0, IndexSet{});
    std::sort(sets.begin(), sets.end(),
              [](IndexSet a, IndexSet b) { return a.bits() < b.bits(); });

    std::vector<SupportVerdict> out;
    out.reserve(sets.size());
    for (auto I : sets)
        out.push_back(support_verdict(config, v, I, lift));
    return out;
}

LogSeries log_solution(const LatticeConfig &config, const RatVector &v,
                       std::span<const std::int64_t> lift, std::size_t r,
                       Window window) {
    const std::size_t n = config.n();
    if (v.size() != n || lift.size() != n)
        throw Error(ErrorCode::InvalidArgument, "vector length does not match the configuration");

    const std::size_t m = nonneg_positions(config, v).size();
    if (r >= m)
        throw Error(ErrorCode::RNotLessThanMultiplicity,
                    "log degree " + std::to_string(r) + " needs multiplicity above " +
                        std::to_string(m));

    std::map<std::uint64_t, SupportVerdict> verdicts;
    for (auto &cert : hypothesis_certificates(config, v, lift, r)) {
        if (!cert.minimal)
            throw Error(ErrorCode::HypothesisViolated,
                        "I = " + index_set_string(cert.I) +
                            " lacks minimal negative support (shrinks at z = " +
                            std::to_string(*cert.witness_z) + ")");
        verdicts.emplace(cert.I.bits(), std::move(cert));
    }

    LogSeries series(shifted_base(v, lift), config.relation(), window, r);
    bool complete = true;
    if (window.empty()) {
        for (const auto &[bits, verdict] : verdicts)
            complete = complete && verdict.membership.empty();
        series.set_complete(complete);
        return series;
    }

    MTable table(config, v, lift, window, r);
    for (std::size_t s = 0; s <= r; ++s) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), r, s);
        const Integer s_fact = factorial(s);

        for_each_multiset(n, s, [&](const Multiset &rho) {
            // r!/(r-s)! prod l_mu^rho_mu: summing the sequence form over all
            // orderings of a repeated index leaves no 1/rho! factor.
            Integer weight = binom * s_fact;
            for (std::size_t mu = 0; mu < n; ++mu) {
                if (rho[mu] == 0)
                    continue;
                Integer power;
                mpz_pow_ui(power.get_mpz_t(),
                           Integer(static_cast<long>(config.relation()[mu])).get_mpz_t(),
                           rho[mu]);
                weight *= power;
            }
            const auto &verdict = verdicts.at(support_complement(rho, n).bits());
            for (std::int64_t z = window.lo; z <= window.hi; ++z) {
                if (!verdict.membership.contains(z))
                    continue;
                const Rational c = phi_coefficient(table, rho, z);
                if (sgn(c) == 0)
                    continue;
                series.add(z, r - s, Rational(weight) * c);
            }
            complete = complete && covered_by(verdict.membership, window);
        });
    }
    series.set_complete(complete);
    return series;
}

namespace {

std::string first_failure_text(const std::vector<SupportVerdict> &certs,
                               std::size_t r) {
    for (const auto &c : certs)
        if (!c.minimal)
            return "log degree " + std::to_string(r) + ": I = " +
                   index_set_string(c.I) +
                   " lacks minimal negative support (shrinks at z = " +
                   std::to_string(*c.witness_z) + ")";
    return {};
}

} // namespace

BundleSet solution_bundle(const LatticeConfig &config, const Parameter &beta,
                          std::span<const std::int64_t> lift,
                          const BundleOptions &options) {
    const std::size_t n = config.n();
    if (lift.size() != n)
        throw Error(ErrorCode::InvalidArgument, "lift length does not match the configuration");

    BundleSet set{beta.shifted(config, lift), {}, 0, 0, 0, false};
    set.expected_count = config.positive_sum();
    const RatVector parameter = set.parameter.values();

    for (const auto &e : exponent_set_prime(config, beta).exponents) {
        SolutionBundle bundle;
        bundle.parameter = parameter;
        bundle.exponent = e;
        bundle.lift.assign(lift.begin(), lift.end());

        std::size_t top = e.multiplicity() - 1;
        if (options.max_log_degree)
            top = std::min(top, *options.max_log_degree);
        for (std::size_t r = 0; r <= top; ++r) {
            auto certs = hypothesis_certificates(config, e.v, lift, r);
            if (!std::all_of(certs.begin(), certs.end(),
                             [](const SupportVerdict &c) { return c.minimal; })) {
                bundle.diagnostic = first_failure_text(certs, r);
                break;
            }
            bundle.solutions.push_back(log_solution(config, e.v, lift, r, options.window));
            bundle.certificates = std::move(certs);
        }

        bundle.leading_series_zero =
            bundle.solutions.empty() || bundle.solutions.front().is_zero();
        if (bundle.leading_series_zero && !bundle.diagnostic)
            bundle.diagnostic = "leading log-free series vanishes on the window";
        if (!bundle.leading_series_zero)
            set.independent_count += static_cast<std::int64_t>(bundle.solutions.size());
        set.bundles.push_back(std::move(bundle));
    }

    for (const auto &v : options.supplemental) {
        if (v.size() != n)
            throw Error(ErrorCode::InvalidArgument,
                        "supplemental exponent has wrong length");
        if (config.image(std::span<const Rational>(v)) != beta.values())
            throw Error(ErrorCode::InvalidArgument,
                        "supplemental exponent " + to_string(std::span<const Rational>(v)) +
                            " does not sum to the parameter");
        SolutionBundle bundle;
        bundle.parameter = parameter;
        bundle.exponent = make_exponent(config, v);
        bundle.lift.assign(lift.begin(), lift.end());
        bundle.from_exponent_set = false;

        auto certs = hypothesis_certificates(config, v, lift, 0);
        if (certs.front().minimal) {
            bundle.solutions.push_back(
                phi_series(config, v, lift, Multiset(n, 0), options.window));
            bundle.certificates = std::move(certs);
        } else {
            bundle.diagnostic = first_failure_text(certs, 0);
        }
        bundle.leading_series_zero =
            bundle.solutions.empty() || bundle.solutions.front().is_zero();
        if (!bundle.leading_series_zero)
            ++set.supplemental_count;
        set.bundles.push_back(std::move(bundle));
    }

    set.complete = set.independent_count == set.expected_count;
    return set;
}

Rational scalar_relation_check(const LatticeConfig &config, const Parameter &beta,
                               std::span<const std::int64_t> lift,
                               const Exponent &v, Window window) {
    const std::size_t n = config.n();
    const auto match = match_exponent(config, beta, lift, v);

    const LogSeries lhs = phi_series(config, v.v, match.lift, Multiset(n, 0), window);
    const IntVector zero(n, 0);
    const LogSeries rhs =
        phi_series(config, match.matched.v, zero, Multiset(n, 0), window);

    Rational scalar = 1;
    for (std::size_t mu = 0; mu < n; ++mu)
        scalar *= coefficient_M(match.lift[mu], 0, v.v[mu]);

    for (std::int64_t z = window.lo; z <= window.hi; ++z)
        if (lhs.coeff(z, 0) != scalar * rhs.coeff(z, 0))
            throw Error(ErrorCode::MismatchDetected,
                        "coefficients differ at z = " + std::to_string(z) + ": " +
                            to_string(lhs.coeff(z, 0)) + " vs " +
                            to_string(scalar) + " * " + to_string(rhs.coeff(z, 0)));
    return scalar;
}

} // namespace gkz
