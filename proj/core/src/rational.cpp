#include "gkz/rational.hpp"

#include "gkz/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace gkz {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::KernelRankNotOne: return "KernelRankNotOne";
    case ErrorCode::DependentSubset: return "DependentSubset";
    case ErrorCode::ZeroRelationEntry: return "ZeroRelationEntry";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BetaNotInSpan: return "BetaNotInSpan";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::NotNonresonant: return "NotNonresonant";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ExcludedCase: return "ExcludedCase";
    case ErrorCode::NotMinimalSupport: return "NotMinimalSupport";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::RNotLessThanMultiplicity: return "RNotLessThanMultiplicity";
    case ErrorCode::SigmaIntegral: return "SigmaIntegral";
    case ErrorCode::MismatchDetected: return "MismatchDetected";
    case ErrorCode::IrregularSingularity: return "IrregularSingularity";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.remove_suffix(1);

    std::string_view body = trimmed;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                     : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorCode::InvalidInput,
                    "malformed rational \"" + std::string(text) + "\"");

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw Error(ErrorCode::InvalidInput,
                    "zero denominator in \"" + std::string(text) + "\"");
    if (negative)
        n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) { return q.get_str(10); }

Integer floor(const Rational &q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil(const Rational &q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

std::int64_t to_int64(const Integer &value) {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    if (!value.fits_slong_p())
        throw Error(ErrorCode::InternalInvariant,
                    "integer " + value.get_str() + " exceeds 64 bits");
    return value.get_si();
}

RatVector to_rational(std::span<const std::int64_t> values) {
    RatVector out;
    out.reserve(values.size());
    for (auto x : values)
        out.emplace_back(static_cast<long>(x));
    return out;
}

bool lex_less(const RatVector &a, const RatVector &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(std::span<const Rational> values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(values[i]);
    }
    return out + ")";
}

} // namespace gkz
