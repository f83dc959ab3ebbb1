#include "holonomic/log_behavior.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace holonomic {

namespace {

const Rational& nonzero_at(const SequenceValues& vals, long n) {
    const Rational& v = vals.at(n);
    if (v == 0) {
        throw DomainError("sequence '" + vals.name + "' has a zero term at index " + std::to_string(n));
    }
    return v;
}

}  // namespace

SequenceValues ratio_seq(const SequenceValues& vals) {
    SequenceValues out{"R(" + vals.name + ")", vals.offset, {}};
    for (long n = vals.first_index(); n < vals.last_index(); ++n) {
        Rational r = vals.at(n + 1) / nonzero_at(vals, n);
        r.canonicalize();
        out.values.push_back(std::move(r));
    }
    return out;
}

SequenceValues ratio2_seq(const SequenceValues& vals) {
    SequenceValues out{"R2(" + vals.name + ")", vals.offset, {}};
    for (long n = vals.first_index(); n + 2 <= vals.last_index(); ++n) {
        const Rational& mid = nonzero_at(vals, n + 1);
        Rational r = vals.at(n) * vals.at(n + 2) / (mid * mid);
        r.canonicalize();
        out.values.push_back(std::move(r));
    }
    return out;
}

SequenceValues L_operator(const SequenceValues& vals, int k) {
    if (k < 1) {
        throw DomainError("L_operator: k must be positive");
    }
    if (vals.size() < 2 * k + 1) {
        throw CoverageError("L_operator: " + std::to_string(k) + " applications need at least " +
                            std::to_string(2 * k + 1) + " terms");
    }
    SequenceValues cur = vals;
    for (int pass = 0; pass < k; ++pass) {
        SequenceValues next{"L(" + cur.name + ")", cur.offset, {}};
        for (long n = cur.first_index(); n + 2 <= cur.last_index(); ++n) {
            const Rational& m = cur.at(n + 1);
            next.values.push_back(cur.at(n + 2) * cur.at(n) - m * m);
        }
        cur = std::move(next);
    }
    return cur;
}

AnalysisReport classify_log_behavior(const SequenceValues& vals, long horizon) {
    if (!vals.covers(vals.first_index(), horizon)) {
        throw CoverageError("classify_log_behavior: values up to the horizon " + std::to_string(horizon) +
                            " required");
    }
    long positive_from = horizon + 1;
    while (positive_from - 1 >= vals.first_index() && vals.at(positive_from - 1) > 0) {
        --positive_from;
    }
    if (positive_from > horizon) {
        throw DomainError("classify_log_behavior: sequence '" + vals.name + "' is not positive at the horizon");
    }
    const long last = horizon - 2;
    if (last < positive_from) {
        throw CoverageError("classify_log_behavior: positive tail too short");
    }
    SequenceValues tail = vals.slice(positive_from, horizon);
    SequenceValues l = L_operator(tail, 1);

    // Walk back from the horizon while L keeps one (weak) sign.
    int tail_sign = 0;
    long n = last;
    for (; n >= positive_from; --n) {
        int s = sgn(l.at(n));
        if (s == 0) {
            continue;
        }
        if (tail_sign == 0) {
            tail_sign = s;
        } else if (s != tail_sign) {
            break;
        }
    }
    const long from = n + 1;
    const std::string property = tail_sign < 0 ? "log-concave" : "log-convex";
    AnalysisReport r;
    r.sequence = vals.name;
    r.range = {positive_from, horizon};
    r.details["positive_from"] = positive_from;
    if (from >= horizon - 10) {
        r.property = "log-behavior";
        r.verdict = Verdict::mixed;
        r.notes.push_back("no stable sign of L u_n found before horizon - 10");
        return r;
    }
    r.property = property;
    r.verdict = from == positive_from ? Verdict::holds : Verdict::threshold;
    r.index = from;
    if (from > positive_from) {
        r.witness = to_string(l.at(from - 1));
        r.notes.push_back("L u_n has the opposite sign at n = " + std::to_string(from - 1));
    }
    r.details["flavor"] = tail_sign < 0 ? "concave" : "convex";
    r.details["from"] = from;
    return r;
}

AnalysisReport monotone_ratio_certify(const SequenceValues& vals, Direction direction, IndexRange range) {
    if (!vals.covers(range.first, range.last + 1)) {
        throw CoverageError("monotone_ratio_certify: values for " + std::to_string(range.first) + ".." +
                            std::to_string(range.last + 1) + " required");
    }
    const bool increasing = direction == Direction::increasing;
    const std::string property = std::string("ratio u(n+1)/u(n) strictly ") + (increasing ? "increasing" : "decreasing");
    std::vector<Rational> ratios;
    for (long n = range.first; n <= range.last; ++n) {
        Rational r = vals.at(n + 1) / nonzero_at(vals, n);
        r.canonicalize();
        ratios.push_back(std::move(r));
    }
    // Scan backwards so the report can state where the property starts holding.
    long valid_from = range.last;
    std::optional<long> first_bad;
    for (long n = range.last - 1; n >= range.first; --n) {
        const Rational& a = ratios[static_cast<std::size_t>(n - range.first)];
        const Rational& b = ratios[static_cast<std::size_t>(n + 1 - range.first)];
        const bool ok = increasing ? a < b : a > b;
        if (!ok) {
            first_bad = n;
        } else if (!first_bad) {
            valid_from = n;
        }
    }
    if (!first_bad) {
        auto rep = AnalysisReport::pass(vals.name, property, range);
        rep.details["valid_from"] = range.first;
        return rep;
    }
    const long n = *first_bad;
    Rational diff = ratios[static_cast<std::size_t>(n + 1 - range.first)] - ratios[static_cast<std::size_t>(n - range.first)];
    auto rep = AnalysisReport::violation(vals.name, property, range, n, diff);
    rep.notes.push_back("witness is u(n+2)/u(n+1) - u(n+1)/u(n) at the first failing n");
    rep.details["valid_from"] = valid_from;
    return rep;
}

bool nth_root_step_exact(const Rational& prev, const Rational& cur, const Rational& next, long n) {
    // next^(n(n-1)) * prev^(n(n+1)) < cur^(2(n^2-1)), all exponents share gcd g.
    unsigned long e_next = static_cast<unsigned long>(n * (n - 1));
    unsigned long e_prev = static_cast<unsigned long>(n * (n + 1));
    unsigned long e_cur = static_cast<unsigned long>(2 * (n * n - 1));
    const unsigned long g = std::gcd(std::gcd(e_next, e_prev), e_cur);
    e_next /= g;
    e_prev /= g;
    e_cur /= g;
    Integer lhs = pow(next.get_num(), e_next) * pow(prev.get_num(), e_prev);
    Integer rhs = pow(cur.get_num(), e_cur);
    if (cur.get_den() != 1) {
        lhs *= pow(cur.get_den(), e_cur);
    }
    if (next.get_den() != 1 || prev.get_den() != 1) {
        rhs *= pow(next.get_den(), e_next) * pow(prev.get_den(), e_prev);
    }
    return lhs < rhs;
}

namespace {

struct LogBounds {
    HPFloat lo;
    HPFloat hi;
};

// Guaranteed enclosure of ln(u)/m.
LogBounds scaled_log_bounds(const Rational& u, long m, long precision) {
    LogBounds b{log_rational(u, precision, MPFR_RNDD), log_rational(u, precision, MPFR_RNDU)};
    mpfr_div_si(b.lo.get(), b.lo.get(), m, MPFR_RNDD);
    mpfr_div_si(b.hi.get(), b.hi.get(), m, MPFR_RNDU);
    return b;
}

enum class LogOutcome { holds, fails, undecided };

LogOutcome nth_root_step_log(const Rational& prev, const Rational& cur, const Rational& next, long n, long precision) {
    const LogBounds p = scaled_log_bounds(prev, n - 1, precision);
    const LogBounds c = scaled_log_bounds(cur, n, precision);
    const LogBounds x = scaled_log_bounds(next, n + 1, precision);
    // margin = 2 ln(u_n)/n - ln(u_{n+1})/(n+1) - ln(u_{n-1})/(n-1) > 0 means the step holds.
    HPFloat lo(precision);
    mpfr_mul_ui(lo.get(), c.lo.get(), 2, MPFR_RNDD);
    mpfr_sub(lo.get(), lo.get(), x.hi.get(), MPFR_RNDD);
    mpfr_sub(lo.get(), lo.get(), p.hi.get(), MPFR_RNDD);
    if (lo.sign() > 0) {
        return LogOutcome::holds;
    }
    HPFloat hi(precision);
    mpfr_mul_ui(hi.get(), c.hi.get(), 2, MPFR_RNDU);
    mpfr_sub(hi.get(), hi.get(), x.lo.get(), MPFR_RNDU);
    mpfr_sub(hi.get(), hi.get(), p.lo.get(), MPFR_RNDU);
    if (hi.sign() <= 0) {
        return LogOutcome::fails;
    }
    return LogOutcome::undecided;
}

std::string triple_witness(const Rational& prev, const Rational& cur, const Rational& next) {
    return to_string(prev) + ";" + to_string(cur) + ";" + to_string(next);
}

}  // namespace

AnalysisReport nth_root_ratio_certify(const SequenceValues& vals, IndexRange range, NthRootMode mode) {
    if (range.first < 2) {
        throw DomainError("nth_root_ratio_certify: range must start at index >= 2, got " +
                          std::to_string(range.first));
    }
    if (!vals.covers(range.first - 1, range.last + 1)) {
        throw CoverageError("nth_root_ratio_certify: values for " + std::to_string(range.first - 1) + ".." +
                            std::to_string(range.last + 1) + " required");
    }
    for (long m = range.first - 1; m <= range.last + 1; ++m) {
        if (vals.at(m) <= 0) {
            throw DomainError("nth_root_ratio_certify: nonpositive term at index " + std::to_string(m));
        }
    }
    const std::string property = "root ratio u(n+1)^(1/(n+1))/u(n)^(1/n) strictly decreasing";
    long exact_steps = 0;
    long log_steps = 0;
    long escalations = 0;
    long fallbacks = 0;
    for (long n = range.first; n <= range.last; ++n) {
        const Rational& prev = vals.at(n - 1);
        const Rational& cur = vals.at(n);
        const Rational& next = vals.at(n + 1);
        bool use_exact = mode == NthRootMode::exact || (mode == NthRootMode::automatic && n <= kExactNthRootLimit);
        std::optional<bool> verdict;
        if (!use_exact) {
            for (long precision : {256L, 512L, 1024L}) {
                LogOutcome o = nth_root_step_log(prev, cur, next, n, precision);
                if (o == LogOutcome::holds) {
                    verdict = true;
                    break;
                }
                if (o == LogOutcome::fails) {
                    // Certified failure; confirm exactly so the witness is exact.
                    break;
                }
                ++escalations;
            }
            if (verdict) {
                ++log_steps;
            } else {
                ++fallbacks;
            }
        }
        if (!verdict) {
            verdict = nth_root_step_exact(prev, cur, next, n);
            ++exact_steps;
        }
        if (!*verdict) {
            AnalysisReport r;
            r.sequence = vals.name;
            r.property = property;
            r.verdict = Verdict::first_violation;
            r.range = range;
            r.index = n;
            r.witness = triple_witness(prev, cur, next);
            r.notes.push_back("witness is u(n-1);u(n);u(n+1); u(n+1)^(n(n-1)) u(n-1)^(n(n+1)) < u(n)^(2(n^2-1)) fails");
            r.details["exact_steps"] = exact_steps;
            r.details["log_steps"] = log_steps;
            return r;
        }
    }
    auto r = AnalysisReport::pass(vals.name, property, range);
    r.details["exact_steps"] = exact_steps;
    r.details["log_steps"] = log_steps;
    r.details["precision_escalations"] = escalations;
    r.details["exact_fallbacks"] = fallbacks;
    return r;
}

std::vector<RootRatioSample> nth_root_limit_probe(const SequenceValues& vals, IndexRange range, long precision) {
    if (range.first < 1 || !vals.covers(range.first, range.last + 1)) {
        throw CoverageError("nth_root_limit_probe: values for " + std::to_string(range.first) + ".." +
                            std::to_string(range.last + 1) + " (indices >= 1) required");
    }
    const long work = precision + 32;
    std::vector<RootRatioSample> out;
    auto scaled = [&](long m) {
        if (vals.at(m) <= 0) {
            throw DomainError("nth_root_limit_probe: nonpositive term at index " + std::to_string(m));
        }
        HPFloat x = log_rational(vals.at(m), work);
        mpfr_div_si(x.get(), x.get(), m, MPFR_RNDN);
        return x;
    };
    HPFloat cur = scaled(range.first);
    for (long n = range.first; n <= range.last; ++n) {
        HPFloat next = scaled(n + 1);
        HPFloat ratio = exp(next - cur);
        HPFloat r(precision);
        mpfr_set(r.get(), ratio.get(), MPFR_RNDN);
        HPFloat d = r - HPFloat(1L, precision);
        out.push_back({n, r, d});
        cur = std::move(next);
    }
    return out;
}

IndexRange default_fit_window(IndexRange available) {
    const long count = available.length();
    long len = std::max<long>(32, (3 * count + 3) / 4);
    len = std::min(len, count);
    return {available.last - len + 1, available.last};
}

PuiseuxFit puiseux_fit(const SequenceValues& ratio2, std::optional<IndexRange> window,
                       std::optional<HPFloat> beta, long precision) {
    const IndexRange w = window ? *window : default_fit_window({ratio2.first_index(), ratio2.last_index()});
    if (w.length() < 8) {
        throw DomainError("puiseux_fit: window needs at least 8 points");
    }
    if (!ratio2.covers(w.first, w.last)) {
        throw CoverageError("puiseux_fit: window " + to_string(w) + " outside the R^2 values");
    }
    int data_sign = 0;
    std::vector<HPFloat> xs;
    std::vector<HPFloat> ys;
    for (long n = w.first; n <= w.last; ++n) {
        Rational d = ratio2.at(n) - 1;
        int s = sgn(d);
        if (s == 0 || (data_sign != 0 && s != data_sign)) {
            throw PreconditionError("puiseux_fit: R^2 - 1 changes sign or vanishes at index " + std::to_string(n));
        }
        data_sign = s;
        xs.push_back(log(HPFloat(n + 1, precision)));
        ys.push_back(log_rational(abs(d), precision));
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
    const HPFloat intercept = my - slope * mx;
    PuiseuxFit fit{exp(intercept), -slope, HPFloat(precision), w, HPFloat(precision), beta.has_value()};
    if (data_sign < 0) {
        fit.c = -fit.c;
    }
    if (fit.alpha.sign() <= 0) {
        throw PreconditionError("puiseux_fit: fitted exponent is not positive (" + fit.alpha.to_string(8) + ")");
    }
    fit.beta = beta ? *beta : fit.alpha + HPFloat(1L, precision);
    const HPFloat one(1L, precision);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        HPFloat dev = abs(exp(ys[i] - (slope * xs[i] + intercept)) - one);
        if (dev > fit.residual) {
            fit.residual = dev;
        }
    }
    return fit;
}

std::string to_string(LogFlavor f) { return f == LogFlavor::convex ? "convex" : "concave"; }

namespace {

ROrder r_order_impl(int c_sign, const HPFloat& alpha, const HPFloat& beta) {
    if (c_sign == 0) {
        throw DomainError("r_order: leading coefficient c must be nonzero");
    }
    if (alpha.sign() <= 0 || beta < alpha) {
        throw PreconditionError("r_order: requires 0 < alpha <= beta");
    }
    const HPFloat two(2L, alpha.precision());
    const bool small_alpha = alpha < two;
    if (c_sign < 0 && !small_alpha) {
        throw OutOfScopeError("r_order: c < 0 with alpha >= 2 is not covered by the criterion");
    }
    HPFloat r_value = small_alpha ? floor(beta / alpha) : floor((beta - alpha) / two) + HPFloat(1L, alpha.precision());
    return {mpfr_get_si(r_value.get(), MPFR_RNDN), c_sign > 0 ? LogFlavor::convex : LogFlavor::concave};
}

}  // namespace

ROrder r_order(const PuiseuxFit& fit) { return r_order_impl(fit.c.sign(), fit.alpha, fit.beta); }

ROrder r_order(double c, double alpha, double beta) {
    return r_order_impl(c > 0 ? 1 : (c < 0 ? -1 : 0), HPFloat(alpha, 64), HPFloat(beta, 64));
}

}  // namespace holonomic
