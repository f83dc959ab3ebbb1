#include "holonomic/asymptotics.hpp"

#include <ostream>

namespace holonomic {

HPFloat AsymptoticEval::relative_error() const {
    const long p = formula.precision();
    return abs(formula / HPFloat(exact, p) - HPFloat(1L, p));
}

HPFloat apery_growth(long precision) {
    HPFloat s2 = sqrt(HPFloat(2L, precision));
    return HPFloat(17L, precision) + HPFloat(12L, precision) * s2;
}

AsymptoticEval apery_asymptotic(long n, AsymptoticOrder order, long precision) {
    if (n < 1) {
        throw DomainError("apery_asymptotic: n must be >= 1");
    }
    const long p = precision;
    const HPFloat one(1L, p);
    const HPFloat s2 = sqrt(HPFloat(2L, p));
    const HPFloat base = one + s2;
    const HPFloat nn(n, p);
    HPFloat numerator = pow(base, 4 * n + 2);
    HPFloat inner = HPFloat(2L, p) * HPFloat::pi(p) * nn * s2;
    HPFloat denominator = pow(inner, HPFloat(1.5, p));
    HPFloat value = numerator / denominator;
    if (order == AsymptoticOrder::corrected) {
        HPFloat corr = (HPFloat(48L, p) - HPFloat(15L, p) * s2) / (HPFloat(64L, p) * nn);
        value *= one - corr;
    }
    return {n, Rational(apery(n)), value, order};
}

void write_asymptotic_csv(std::ostream& out, const std::vector<AsymptoticEval>& rows, int digits) {
    out << "n,exact,formula,relative_error,order\n";
    for (const auto& r : rows) {
        out << r.n << "," << to_string(r.exact) << "," << r.formula.to_string(digits) << ","
            << r.relative_error().to_string(digits) << ","
            << (r.order == AsymptoticOrder::main ? "main" : "corrected") << "\n";
    }
}

Rational weight_profile_eval(WeightKind kind, long n, long k) {
    if (n < 1) {
        throw DomainError("weight_profile_eval: n must be >= 1");
    }
    if (kind == WeightKind::a_profile) {
        if (k < 1) {
            throw DomainError("weight_profile_eval: a-profile needs k >= 1, got " + std::to_string(k));
        }
        Integer k2 = Integer(k) * k;
        return make_rational(k2 * k2, Integer(4 * (k - 1) * (k - 1) - 1) * (n + k) * (n + k));
    }
    if (k < 0 || k > n - 1) {
        throw DomainError("weight_profile_eval: b-profile needs 0 <= k <= n-1, got " + std::to_string(k));
    }
    return make_rational(Integer(n - k) * (3 * k * k + 3 * k + 1), pow(Integer(n), 4));
}

namespace {

// C(n,k)^2 C(n+k,k)^2
Integer apery_term(long n, long k) {
    Integer c = binomial(n, k) * binomial(n + k, k);
    return c * c;
}

}  // namespace

Rational a_weighted_sum(long n) {
    Rational sum = 0;
    for (long k = 1; k <= n; ++k) {
        sum += Rational(apery_term(n, k)) * weight_profile_eval(WeightKind::a_profile, n, k);
    }
    sum /= pow(Integer(n), 3);
    sum.canonicalize();
    return sum;
}

Rational b_weighted_sum(long n) {
    Rational sum = 0;
    for (long k = 0; k < n; ++k) {
        sum += Rational(apery_term(n, k)) * weight_profile_eval(WeightKind::b_profile, n, k) * make_rational(n - k, n);
    }
    sum.canonicalize();
    return sum;
}

Rational b_weighted_sum_unscaled(long n) {
    Rational sum = 0;
    for (long k = 0; k < n; ++k) {
        sum += Rational(apery_term(n, k)) * weight_profile_eval(WeightKind::b_profile, n, k);
    }
    sum.canonicalize();
    return sum;
}

HPFloat b_profile_at(long n, const HPFloat& k) {
    const long p = k.precision();
    const HPFloat nn(n, p);
    HPFloat poly = HPFloat(3L, p) * k * k + HPFloat(3L, p) * k + HPFloat(1L, p);
    return (nn - k) * poly / pow(nn, 4);
}

BoundProfile bound_profile(WeightKind kind, long n, long precision) {
    BoundProfile prof;
    prof.kind = kind;
    prof.n = n;
    prof.claimed_lower = make_rational(1, Integer(4) * n * n);
    prof.claimed_upper = kind == WeightKind::a_profile ? Rational(1, 16) : Rational(4, 9);
    const long k_first = kind == WeightKind::a_profile ? 1 : 0;
    const long k_last = kind == WeightKind::a_profile ? n : n - 1;
    for (long k = k_first; k <= k_last; ++k) {
        Rational w = weight_profile_eval(kind, n, k);
        if (k == k_first || w < prof.min_value) {
            prof.min_value = w;
            prof.argmin = k;
        }
        if (k == k_first || w > prof.max_value) {
            prof.max_value = w;
            prof.argmax = k;
        }
    }
    if (kind == WeightKind::b_profile) {
        const HPFloat root = sqrt(HPFloat(n * n + n, precision));
        const HPFloat base(n - 1, precision);
        const HPFloat three(3L, precision);
        prof.critical_plus = (base + root) / three;
        prof.critical_minus = (base - root) / three;
        prof.f_at_critical_plus = b_profile_at(n, *prof.critical_plus);
        prof.f_at_critical_minus = b_profile_at(n, *prof.critical_minus);
    }
    return prof;
}

AnalysisReport audit_bounds(const SequenceValues& vals, const std::string& property, IndexRange range,
                            const BoundFn& lower, const BoundFn& upper) {
    if (!vals.covers(range.first, range.last)) {
        throw CoverageError("audit_bounds: values for " + to_string(range) + " required");
    }
    std::vector<long> low_bad;
    std::vector<long> up_bad;
    nlohmann::ordered_json first = nullptr;
    std::optional<Rational> first_slack;
    for (long n = range.first; n <= range.last; ++n) {
        const Rational& u = vals.at(n);
        if (auto lo = lower(n); lo && !(*lo <= u)) {
            low_bad.push_back(n);
            if (first.is_null()) {
                first = {{"n", n}, {"side", "lower"}, {"bound", to_string(*lo)}, {"value", to_string(u)}};
                first_slack = u - *lo;
            }
        }
        if (auto hi = upper(n); hi && !(u <= *hi)) {
            up_bad.push_back(n);
            if (first.is_null()) {
                first = {{"n", n}, {"side", "upper"}, {"bound", to_string(*hi)}, {"value", to_string(u)}};
                first_slack = *hi - u;
            }
        }
    }
    auto threshold = [&](const std::vector<long>& bad) -> nlohmann::ordered_json {
        if (bad.empty()) {
            return range.first;
        }
        if (bad.back() == range.last) {
            return nullptr;
        }
        return bad.back() + 1;
    };
    AnalysisReport r;
    r.sequence = vals.name;
    r.property = property;
    r.range = range;
    r.details["lower_violations"] = low_bad;
    r.details["upper_violations"] = up_bad;
    r.details["lower_holds_from"] = threshold(low_bad);
    r.details["upper_holds_from"] = threshold(up_bad);
    r.details["first_violation"] = first;
    if (low_bad.empty() && up_bad.empty()) {
        r.verdict = Verdict::holds;
        return r;
    }
    const long last_bad = std::max(low_bad.empty() ? range.first - 1 : low_bad.back(),
                                   up_bad.empty() ? range.first - 1 : up_bad.back());
    if (last_bad == range.last) {
        r.verdict = Verdict::mixed;
        r.notes.push_back("a claimed bound fails at the end of the range");
    } else {
        r.verdict = Verdict::threshold;
        r.index = last_bad + 1;
    }
    r.witness = to_string(*first_slack);
    r.notes.push_back("witness is the signed slack at the first violation (negative means the bound fails)");
    return r;
}

AnalysisReport a_bounds_audit(IndexRange range) {
    SequenceValues a = sequence_table(SequenceId::a, range.first, range.last);
    SequenceValues big_a = sequence_table(SequenceId::apery, range.first, range.last);
    auto lower = [&](long n) -> std::optional<Rational> {
        return big_a.at(n) / Rational(Integer(4) * pow(Integer(n), 5));
    };
    auto upper = [&](long n) -> std::optional<Rational> {
        return big_a.at(n) / Rational(Integer(16) * pow(Integer(n), 3));
    };
    AnalysisReport r = audit_bounds(a, "A(n)/(4n^5) <= a(n) <= A(n)/(16n^3)", range, lower, upper);

    // Weight profile facts at the end of the range.
    const long n = range.last;
    BoundProfile prof = bound_profile(WeightKind::a_profile, n);
    r.details["profile"] = {
        {"n", n},
        {"claimed_lower", to_string(prof.claimed_lower)},
        {"claimed_upper", to_string(prof.claimed_upper)},
        {"min", to_string(prof.min_value)},
        {"argmin", prof.argmin},
        {"max", to_string(prof.max_value)},
        {"argmax", prof.argmax},
    };
    if (prof.min_value < prof.claimed_lower) {
        r.notes.push_back("h_k falls below 1/(4n^2) (h_1 = " + to_string(weight_profile_eval(WeightKind::a_profile, n, 1)) +
                          " < 0)");
    }
    if (prof.max_value > prof.claimed_upper) {
        r.notes.push_back("h_k exceeds 1/16 at k = " + std::to_string(prof.argmax));
    }
    return r;
}

AnalysisReport b_bounds_audit(IndexRange range) {
    SequenceValues b = sequence_table(SequenceId::b, range.first, range.last);
    SequenceValues s = sequence_table(SequenceId::s, range.first, range.last);
    auto lower = [&](long n) -> std::optional<Rational> { return s.at(n) / Rational(Integer(4) * n * n); };
    auto upper = [&](long n) -> std::optional<Rational> { return Rational(4, 9) * s.at(n); };
    AnalysisReport r = audit_bounds(b, "S(n)/(4n^2) <= b(n) <= (4/9)S(n)", range, lower, upper);

    const long n = range.last;
    BoundProfile prof = bound_profile(WeightKind::b_profile, n);
    r.details["profile"] = {
        {"n", n},
        {"f_first", to_string(weight_profile_eval(WeightKind::b_profile, n, 0))},
        {"f_last", to_string(weight_profile_eval(WeightKind::b_profile, n, n - 1))},
        {"min", to_string(prof.min_value)},
        {"argmin", prof.argmin},
        {"max", to_string(prof.max_value)},
        {"argmax", prof.argmax},
        {"critical_plus", prof.critical_plus->to_string(20)},
        {"f_at_critical_plus", prof.f_at_critical_plus->to_string(20)},
        {"critical_minus", prof.critical_minus->to_string(20)},
        {"f_at_critical_minus", prof.f_at_critical_minus->to_string(20)},
        {"claimed_min", to_string(prof.claimed_lower)},
        {"claimed_max", to_string(prof.claimed_upper)},
    };
    std::vector<long> below_claimed_min;
    for (long m = std::max(range.first, 1L); m <= range.last; ++m) {
        if (weight_profile_eval(WeightKind::b_profile, m, 0) < make_rational(1, Integer(4) * m * m)) {
            below_claimed_min.push_back(m);
        }
    }
    if (!below_claimed_min.empty()) {
        r.notes.push_back("f(0) = 1/n^3 lies below 1/(4n^2) for n in " + std::to_string(below_claimed_min.front()) +
                          ".." + std::to_string(below_claimed_min.back()));
    }
    if (prof.critical_minus->sign() < 0) {
        r.notes.push_back("the stationary point (n-1-sqrt(n^2+n))/3 is negative, outside [0, n-1]");
    }
    std::vector<long> unscaled_mismatch;
    const long check_last = std::min(range.last, range.first + 20);
    for (long m = range.first; m <= check_last; ++m) {
        if (b_weighted_sum_unscaled(m) != b.at(m)) {
            unscaled_mismatch.push_back(m);
        }
    }
    r.details["unscaled_weighted_sum_mismatch"] = unscaled_mismatch;
    if (!unscaled_mismatch.empty()) {
        r.notes.push_back("sum_k f_k C(n,k)^2 C(n+k,k)^2 differs from b(n) (first at n = " +
                          std::to_string(unscaled_mismatch.front()) + "); the exact weights are f_k (n-k)/n");
    }
    return r;
}

DecayFit decay_exponent_fit(const SequenceValues& vals, const HPFloat& growth_base, IndexRange window, long precision) {
    if (growth_base.sign() <= 0) {
        throw DomainError("decay_exponent_fit: growth base must be positive");
    }
    if (window.length() < 2 || window.first < 1 || !vals.covers(window.first, window.last)) {
        throw CoverageError("decay_exponent_fit: window " + to_string(window) + " not covered");
    }
    HPFloat base(precision);
    mpfr_set(base.get(), growth_base.get(), MPFR_RNDN);
    const HPFloat log_base = log(base);
    std::vector<HPFloat> xs;
    std::vector<HPFloat> ys;
    for (long n = window.first; n <= window.last; ++n) {
        if (vals.at(n) <= 0) {
            throw DomainError("decay_exponent_fit: nonpositive term at index " + std::to_string(n));
        }
        xs.push_back(log(HPFloat(n, precision)));
        ys.push_back(log_rational(vals.at(n), precision) - HPFloat(n, precision) * log_base);
    }
    const HPFloat count(static_cast<long>(xs.size()), precision);
    HPFloat mx(precision);
    HPFloat my(precision);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    HPFloat sxx(precision);
    HPFloat sxy(precision);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        HPFloat dx = xs[i] - mx;
        sxx += dx * dx;
        sxy += dx * (ys[i] - my);
    }
    const HPFloat slope = sxy / sxx;
    DecayFit fit{-slope, my - slope * mx, window, HPFloat(precision)};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        HPFloat dev = abs(ys[i] - (slope * xs[i] + fit.intercept));
        if (dev > fit.residual) {
            fit.residual = dev;
        }
    }
    return fit;
}

}  // namespace holonomic
