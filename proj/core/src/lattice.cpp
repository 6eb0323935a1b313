#include "gkz/lattice.hpp"

#include "gkz/error.hpp"

#include <numeric>
#include <string>

namespace gkz {

RatVector LatticeConfig::column(std::size_t mu) const {
    RatVector out(dim());
    for (std::size_t r = 0; r < dim(); ++r)
        out[r] = Rational(points_(r, mu));
    return out;
}

std::int64_t LatticeConfig::ell(std::size_t mu) const {
    return relation_.at(mu) < 0 ? -relation_[mu] : relation_[mu];
}

IntVector LatticeConfig::image(std::span<const std::int64_t> lift) const {
    IntVector out(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        Integer acc = 0;
        for (std::size_t mu = 0; mu < n(); ++mu)
            acc += points_(r, mu) * Integer(static_cast<long>(lift[mu]));
        out[r] = to_int64(acc);
    }
    return out;
}

RatVector LatticeConfig::image(std::span<const Rational> coefficients) const {
    RatVector out(dim());
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t mu = 0; mu < n(); ++mu)
            out[r] += Rational(points_(r, mu)) * coefficients[mu];
    return out;
}

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n; ++c)
        if (c != skip)
            out.push_back(c);
    return out;
}

Integer product(const std::vector<Integer> &values) {
    Integer p = 1;
    for (const auto &x : values)
        p *= x;
    return p;
}

} // namespace

LatticeConfig build_config(const PointConfig &pc) {
    const std::size_t n = pc.columns.size();
    if (pc.dim == 0)
        throw Error(ErrorCode::InvalidInput, "ambient dimension must be positive");
    if (n < 2)
        throw Error(ErrorCode::InvalidInput, "need at least two points");
    if (n > 62)
        throw Error(ErrorCode::InvalidInput, "at most 62 points are supported");

    IntMatrix pts(pc.dim, n);
    for (std::size_t c = 0; c < n; ++c) {
        if (pc.columns[c].size() != pc.dim)
            throw Error(ErrorCode::InvalidInput,
                        "point " + std::to_string(c + 1) + " has " +
                            std::to_string(pc.columns[c].size()) +
                            " coordinates, expected " + std::to_string(pc.dim));
        for (std::size_t r = 0; r < pc.dim; ++r)
            pts(r, c) = Integer(static_cast<long>(pc.columns[c][r]));
    }

    const auto kernel = kernel_basis(to_rational(pts));
    if (kernel.size() != 1)
        throw Error(ErrorCode::KernelRankNotOne,
                    "relation lattice has rank " + std::to_string(kernel.size()));
    for (std::size_t mu = 0; mu < n; ++mu)
        if (rank(to_rational(pts.select_columns(all_but(n, mu)))) != n - 1)
            throw Error(ErrorCode::DependentSubset,
                        "points other than point " + std::to_string(mu + 1) +
                            " are linearly dependent");

    auto rel = primitive_integer_vector(kernel.front());
    const auto first = std::find_if(rel.begin(), rel.end(),
                                    [](const Integer &x) { return sgn(x) != 0; });
    if (sgn(*first) < 0)
        for (auto &x : rel)
            x = -x;
    for (std::size_t mu = 0; mu < n; ++mu)
        if (sgn(rel[mu]) == 0)
            throw Error(ErrorCode::ZeroRelationEntry,
                        "relation vanishes at point " + std::to_string(mu + 1));

    LatticeConfig cfg;
    for (std::size_t mu = 0; mu < n; ++mu)
        if (sgn(rel[mu]) > 0)
            cfg.perm_.push_back(mu);
    cfg.k_ = cfg.perm_.size();
    for (std::size_t mu = 0; mu < n; ++mu)
        if (sgn(rel[mu]) < 0)
            cfg.perm_.push_back(mu);

    cfg.points_ = pts.select_columns(cfg.perm_);
    for (auto mu : cfg.perm_) {
        const auto value = to_int64(rel[mu]);
        cfg.relation_.push_back(value);
        (value > 0 ? cfg.positive_sum_ : cfg.negative_sum_) +=
            value > 0 ? value : -value;
    }

    auto echelon = column_echelon(cfg.points_);
    if (echelon.basis.cols() != n - 1)
        throw Error(ErrorCode::InternalInvariant, "lattice basis has wrong rank");
    cfg.basis_ = std::move(echelon.basis);
    cfg.transform_ = std::move(echelon.transform);

    const RatMatrix basis = to_rational(cfg.basis_);
    cfg.coords_ = IntMatrix(n - 1, n);
    for (std::size_t mu = 0; mu < n; ++mu) {
        const auto c = solve(basis, cfg.column(mu));
        if (!c)
            throw Error(ErrorCode::InternalInvariant, "point outside its lattice");
        for (std::size_t t = 0; t < n - 1; ++t) {
            if (!is_integer((*c)[t]))
                throw Error(ErrorCode::InternalInvariant,
                            "non-integral lattice coordinates");
            cfg.coords_(t, mu) = (*c)[t].get_num();
        }
    }
    return cfg;
}

std::int64_t volume_crosscheck(const LatticeConfig &config) {
    const std::size_t n = config.n();
    const Integer full = product(smith_invariants(config.points()));
    const bool positive_side = config.positive_sum() >= config.negative_sum();

    Integer total = 0;
    for (std::size_t mu = 0; mu < n; ++mu) {
        if (config.positive(mu) != positive_side)
            continue;
        const Integer sub =
            product(smith_invariants(config.points().select_columns(all_but(n, mu))));
        if (sub % full != 0)
            throw Error(ErrorCode::InternalInvariant, "sublattice index not integral");
        total += sub / full;
    }
    return to_int64(total);
}

Rational FacetFunctional::operator()(std::span<const Rational> point) const {
    Rational acc = 0;
    for (std::size_t r = 0; r < coeffs.size(); ++r)
        acc += coeffs[r] * point[r];
    return acc;
}

FacetFunctional facet_functional(const LatticeConfig &config, std::size_t i,
                                 std::size_t j) {
    const std::size_t n = config.n();
    if (i >= config.k() || j < config.k() || j >= n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "facet pair (" + std::to_string(i + 1) + ", " +
                        std::to_string(j + 1) + ") not in 1 <= i <= k < j <= n");

    const IntMatrix &coords = config.basis_coordinates();
    const std::size_t rank = n - 1;

    // y in Z^{n-1} orthogonal to the coordinates of every other point.
    RatMatrix others(n - 2, rank);
    std::size_t row = 0;
    for (std::size_t sigma = 0; sigma < n; ++sigma) {
        if (sigma == i || sigma == j)
            continue;
        for (std::size_t t = 0; t < rank; ++t)
            others(row, t) = Rational(coords(t, sigma));
        ++row;
    }
    RatVector y_rat(rank, Rational(1));
    if (n > 2) {
        const auto kernel = kernel_basis(others);
        if (kernel.size() != 1)
            throw Error(ErrorCode::InternalInvariant, "facet kernel not rank one");
        y_rat = kernel.front();
    }
    auto y = primitive_integer_vector(y_rat);

    FacetFunctional h;
    h.i = i;
    h.j = j;
    h.values_on_A.assign(n, Integer(0));
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t t = 0; t < rank; ++t)
            h.values_on_A[mu] += y[t] * coords(t, mu);
    if (sgn(h.values_on_A[i]) < 0) {
        for (auto &x : y)
            x = -x;
        for (auto &x : h.values_on_A)
            x = -x;
    }

    // Extend to Q^d: g with basis^T g = y.
    const IntMatrix &basis = config.lattice_basis();
    RatMatrix bt(rank, config.dim());
    for (std::size_t t = 0; t < rank; ++t)
        for (std::size_t r = 0; r < config.dim(); ++r)
            bt(t, r) = Rational(basis(r, t));
    RatVector rhs(rank);
    for (std::size_t t = 0; t < rank; ++t)
        rhs[t] = Rational(y[t]);
    auto g = solve(bt, rhs);
    if (!g)
        throw Error(ErrorCode::InternalInvariant, "facet functional not extendable");
    h.coeffs = std::move(*g);
    return h;
}

Parameter Parameter::make(const LatticeConfig &config, RatVector beta) {
    if (beta.size() != config.dim())
        throw Error(ErrorCode::BetaNotInSpan,
                    "parameter has " + std::to_string(beta.size()) +
                        " entries, expected " + std::to_string(config.dim()));
    if (!solve(to_rational(config.points()), beta))
        throw Error(ErrorCode::BetaNotInSpan,
                    "parameter " + to_string(std::span<const Rational>(beta)) +
                        " is not in the span of the points");
    return Parameter(std::move(beta));
}

Parameter Parameter::shifted(const LatticeConfig &config,
                             std::span<const std::int64_t> lift) const {
    RatVector out = beta_;
    const auto u = config.image(lift);
    for (std::size_t r = 0; r < out.size(); ++r)
        out[r] += Rational(static_cast<long>(u[r]));
    return Parameter(std::move(out));
}

NonresonanceVerdict is_nonresonant(const LatticeConfig &config,
                                   const Parameter &beta) {
    for (std::size_t i = 0; i < config.k(); ++i)
        for (std::size_t j = config.k(); j < config.n(); ++j) {
            const Rational value = facet_functional(config, i, j)(beta.values());
            if (is_integer(value))
                return {false, ResonanceWitness{i, j, value.get_num()}};
        }
    return {};
}

IntVector canonical_lift(const LatticeConfig &config,
                         std::span<const std::int64_t> u) {
    const std::size_t n = config.n();
    if (u.size() != config.dim())
        throw Error(ErrorCode::NotInLattice,
                    "shift has " + std::to_string(u.size()) + " entries, expected " +
                        std::to_string(config.dim()));
    const RatVector target = to_rational(u);
    const auto y = solve(to_rational(config.lattice_basis()), target);
    if (!y || !std::all_of(y->begin(), y->end(),
                           [](const Rational &q) { return is_integer(q); }))
        throw Error(ErrorCode::NotInLattice,
                    "shift " + to_string(std::span<const Rational>(target)) +
                        " is not in the lattice generated by the points");

    const IntMatrix &transform = config.echelon_transform();
    std::vector<Integer> lift(n, Integer(0));
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t t = 0; t + 1 < n; ++t)
            lift[mu] += transform(mu, t) * (*y)[t].get_num();

    const Integer rel_last(static_cast<long>(config.relation()[n - 1]));
    const Integer modulus = abs(rel_last);
    Integer wanted = lift[n - 1] % modulus;
    if (sgn(wanted) < 0)
        wanted += modulus;
    const Integer z = (wanted - lift[n - 1]) / rel_last;

    IntVector out(n);
    for (std::size_t mu = 0; mu < n; ++mu)
        out[mu] = to_int64(lift[mu] + z * Integer(static_cast<long>(config.relation()[mu])));
    return out;
}

} // namespace gkz
