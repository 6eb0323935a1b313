#include "gkz/verify.hpp"

#include "gkz/error.hpp"

namespace gkz {

std::string OperatorReport::name() const {
    return kind == OperatorKind::Box ? "box" : "euler[" + std::to_string(row + 1) + "]";
}

namespace {

using LogPoly = std::vector<Rational>;

LogPoly source_poly(const LogSeries &series, std::int64_t z) {
    LogPoly p(series.max_log_degree() + 1);
    for (std::size_t r = 0; r < p.size(); ++r)
        p[r] = series.coeff(z, r);
    return p;
}

// d_mu applied to x^w * sum_r p[r] log^r x0, in place.
void differentiate(LogPoly &p, RatVector &w, std::size_t mu, std::int64_t rel_mu) {
    for (std::size_t r = 0; r < p.size(); ++r) {
        p[r] *= w[mu];
        if (r + 1 < p.size())
            p[r] += Rational(static_cast<long>((r + 1) * rel_mu)) * p[r + 1];
    }
    w[mu] -= 1;
}

bool all_zero(const LogPoly &p) {
    for (const auto &x : p)
        if (sgn(x) != 0)
            return false;
    return true;
}

LogPoly apply_monomial_operator(const LatticeConfig &config, const LogSeries &series,
                                std::int64_t z, bool positive_side) {
    LogPoly p = source_poly(series, z);
    if (all_zero(p))
        return p;
    RatVector w = series.exponent_at(z);
    for (std::size_t mu = 0; mu < config.n(); ++mu) {
        if (config.positive(mu) != positive_side)
            continue;
        for (std::int64_t t = 0; t < config.ell(mu); ++t)
            differentiate(p, w, mu, config.relation()[mu]);
    }
    return p;
}

void finish(OperatorReport &report) {
    const auto terms = report.residual.terms();
    report.passed = terms.empty();
    if (!terms.empty())
        report.first_failure = terms.front();
}

} // namespace

OperatorReport apply_box(const LatticeConfig &config, const LogSeries &series) {
    if (series.base_exponent().size() != config.n())
        throw Error(ErrorCode::InvalidArgument, "series does not match the configuration");

    OperatorReport report;
    report.kind = OperatorKind::Box;
    report.input = series.window();
    // Residual index z receives the positive part from source z+1 and the
    // negative part from source z.
    report.safe_window = series.complete()
                             ? Window{series.window().lo - 1, series.window().hi}
                             : Window{series.window().lo, series.window().hi - 1};
    if (series.window().empty())
        report.safe_window = series.complete() ? Window{0, 0} : Window{0, -1};

    RatVector base = series.base_exponent();
    for (std::size_t mu = config.k(); mu < config.n(); ++mu)
        base[mu] -= static_cast<long>(config.ell(mu));
    report.residual = LogSeries(base, config.relation(), report.safe_window,
                                series.max_log_degree());

    for (std::int64_t z = report.safe_window.lo; z <= report.safe_window.hi; ++z) {
        const LogPoly plus = apply_monomial_operator(config, series, z + 1, true);
        const LogPoly minus = apply_monomial_operator(config, series, z, false);
        for (std::size_t r = 0; r < plus.size(); ++r)
            report.residual.set(z, r, plus[r] - minus[r]);
    }
    finish(report);
    return report;
}

std::vector<OperatorReport> apply_euler(const LatticeConfig &config,
                                        std::span<const Rational> parameter,
                                        const LogSeries &series) {
    if (parameter.size() != config.dim())
        throw Error(ErrorCode::InvalidArgument, "parameter does not match the configuration");
    if (series.base_exponent().size() != config.n())
        throw Error(ErrorCode::InvalidArgument, "series does not match the configuration");

    const Window window = series.window();
    const std::size_t top = series.max_log_degree();
    std::vector<OperatorReport> reports;
    for (std::size_t row = 0; row < config.dim(); ++row) {
        OperatorReport report;
        report.kind = OperatorKind::Euler;
        report.row = row;
        report.input = window;
        report.safe_window = window;
        report.residual =
            LogSeries(series.base_exponent(), series.relation(), window, top);

        // sum_j a_ij l_j is zero for a genuine relation; keep it general so
        // a malformed series shows up in the residual.
        Rational log_shift = 0;
        for (std::size_t mu = 0; mu < config.n(); ++mu)
            log_shift += Rational(config.points()(row, mu)) *
                         static_cast<long>(series.relation()[mu]);

        for (std::int64_t z = window.lo; z <= window.hi; ++z) {
            const RatVector w = series.exponent_at(z);
            Rational degree = -parameter[row];
            for (std::size_t mu = 0; mu < config.n(); ++mu)
                degree += Rational(config.points()(row, mu)) * w[mu];
            for (std::size_t r = 0; r <= top; ++r) {
                Rational value = degree * series.coeff(z, r);
                if (r + 1 <= top)
                    value += Rational(static_cast<long>(r + 1)) * log_shift *
                             series.coeff(z, r + 1);
                report.residual.set(z, r, std::move(value));
            }
        }
        finish(report);
        reports.push_back(std::move(report));
    }
    return reports;
}

Certification certify(const LatticeConfig &config, std::span<const Rational> parameter,
                      const LogSeries &series) {
    Certification out;
    out.reports.push_back(apply_box(config, series));
    for (auto &report : apply_euler(config, parameter, series))
        out.reports.push_back(std::move(report));
    for (const auto &report : out.reports)
        out.passed = out.passed && report.passed;
    return out;
}

} // namespace gkz
