#include "holonomic/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace holonomic {

std::string to_string(RootKind k) {
    switch (k) {
        case RootKind::rational: return "rational";
        case RootKind::quadratic_surd: return "quadratic-surd";
        case RootKind::numeric: return "numeric";
    }
    return "?";
}

namespace {

int sign_at(const IntPolynomial& p, const Rational& x) { return sgn(p.evaluate(x)); }

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
    std::vector<IntPolynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        const IntPolynomial& a = seq[seq.size() - 2];
        const IntPolynomial& b = seq.back();
        PseudoDivision pd = pseudo_divide(a, b);
        if (pd.remainder.is_zero()) {
            break;
        }
        // pd.remainder = lc(b)^k * rem(a, b); keep the sign of -rem(a, b).
        const int k = a.degree() - b.degree() + 1;
        const bool flips = b.leading() < 0 && (k % 2 == 1);
        IntPolynomial next = flips ? pd.remainder : -pd.remainder;
        seq.push_back(next.divexact(next.content()));
    }
    return seq;
}

int variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& s : seq) {
        int v = sign_at(s, x);
        if (v == 0) {
            continue;
        }
        if (last != 0 && v != last) {
            ++count;
        }
        last = v;
    }
    return count;
}

struct Interval {
    Rational lo;  // open end, never a root
    Rational hi;  // closed end
};

// A split point strictly inside (lo, hi) at which p does not vanish.
Rational split_point(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    Rational step = (hi - lo) / 8;
    while (sign_at(p, mid) == 0) {
        mid += step;
        step /= 2;
    }
    mid.canonicalize();
    return mid;
}

std::vector<Interval> isolate(const IntPolynomial& p) {
    // Cauchy bound: every root satisfies |x| < 1 + max |a_i / a_n|.
    Rational bound = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r(abs(p.coefficient(i)), abs(p.leading()));
        r.canonicalize();
        bound = std::max(bound, r);
    }
    bound += 1;
    const auto seq = sturm_sequence(p);
    std::vector<Interval> out;
    std::vector<Interval> work{{-bound, bound}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        const int n = variations(seq, iv.lo) - variations(seq, iv.hi);
        if (n == 0) {
            continue;
        }
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rational mid = split_point(p, iv.lo, iv.hi);
        work.push_back({mid, iv.hi});
        work.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

// Shrinks (lo, hi] around its single simple root until hi - lo <= width.
// Returns true when the root was hit exactly (then lo == hi == root).
bool refine(const IntPolynomial& p, Interval& iv, const Rational& width) {
    if (sign_at(p, iv.hi) == 0) {
        iv.lo = iv.hi;
        return true;
    }
    const int s_lo = sign_at(p, iv.lo);
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        mid.canonicalize();
        int s = sign_at(p, mid);
        if (s == 0) {
            iv.lo = iv.hi = mid;
            return true;
        }
        if (s == s_lo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return false;
}

std::vector<Integer> small_divisors(const Integer& value) {
    std::vector<Integer> divs;
    Integer v = abs(value);
    if (!v.fits_ulong_p() || v > Integer("1000000000000")) {
        return {Integer(1)};
    }
    unsigned long x = v.get_ui();
    for (unsigned long d = 1; d * d <= x; ++d) {
        if (x % d == 0) {
            divs.emplace_back(d);
            if (d != x / d) {
                divs.emplace_back(x / d);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Exact quotient p / d in Z[x] for a primitive divisor d.
IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& d) {
    PseudoDivision pd = pseudo_divide(p, d);
    if (!pd.remainder.is_zero()) {
        throw std::logic_error("exact_quotient: divisor does not divide");
    }
    const Integer scale = holonomic::pow(d.leading(), static_cast<unsigned long>(p.degree() - d.degree() + 1));
    return pd.quotient.divexact(scale);
}

std::string format_surd(const Integer& a, const Integer& b, bool plus, const Integer& d, const Integer& c) {
    // (a ± b*sqrt(d)) / c with c > 0, b > 0.
    std::ostringstream num;
    std::string root = (b == 1 ? "" : b.get_str() + "*") + "sqrt(" + d.get_str() + ")";
    if (a == 0) {
        num << (plus ? "" : "-") << root;
    } else {
        num << a.get_str() << (plus ? " + " : " - ") << root;
    }
    if (c == 1) {
        return num.str();
    }
    return "(" + num.str() + ")/" + c.get_str();
}

void quadratic_roots(const IntPolynomial& q, long precision, std::vector<RealRoot>& out) {
    const Integer a = q.coefficient(2);
    const Integer b = q.coefficient(1);
    const Integer c = q.coefficient(0);
    const Integer disc = b * b - 4 * a * c;
    // disc = s^2 * d with d squarefree over the small primes tried.
    Integer s = 1;
    Integer d = disc;
    for (unsigned long p = 2; p < 100000; ++p) {
        const Integer p2 = Integer(p) * p;
        if (p2 > d) {
            break;
        }
        while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
            d /= p2;
            s *= p;
        }
    }
    Integer num_a = -b;
    Integer num_b = s;
    Integer den = 2 * a;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_a.get_mpz_t(), num_b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
    num_a /= g;
    num_b /= g;
    den /= g;
    const long work = precision + 32;
    HPFloat sq = sqrt(HPFloat(disc, work));
    HPFloat two_a(Integer(a * 2), work);
    HPFloat minus_b(Integer(-b), work);
    for (bool plus : {false, true}) {
        HPFloat v = (plus ? minus_b + sq : minus_b - sq) / two_a;
        HPFloat rounded(precision);
        mpfr_set(rounded.get(), v.get(), MPFR_RNDN);
        out.push_back({rounded, RootKind::quadratic_surd, format_surd(num_a, num_b, plus, d, den), q});
    }
}

std::vector<double> complex_moduli(const IntPolynomial& p, int expected) {
    if (expected <= 0) {
        return {};
    }
    const int n = p.degree();
    std::vector<std::complex<double>> coeff(static_cast<std::size_t>(n) + 1);
    const double lead = p.leading().get_d();
    for (int i = 0; i <= n; ++i) {
        coeff[static_cast<std::size_t>(i)] = p.coefficient(i).get_d() / lead;
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) {
            acc = acc * z + coeff[static_cast<std::size_t>(i)];
        }
        return acc;
    };
    // Durand-Kerner iteration.
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const std::complex<double> seed(0.4, 0.9);
    for (int i = 0; i < n; ++i) {
        z[static_cast<std::size_t>(i)] = std::pow(seed, i);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double change = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j) {
                if (i != j) {
                    den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                }
            }
            std::complex<double> delta = eval(z[static_cast<std::size_t>(i)]) / den;
            z[static_cast<std::size_t>(i)] -= delta;
            change = std::max(change, std::abs(delta));
        }
        if (change < 1e-15) {
            break;
        }
    }
    std::sort(z.begin(), z.end(), [](auto x, auto y) { return std::abs(x.imag()) > std::abs(y.imag()); });
    std::vector<double> out;
    for (int i = 0; i < expected && i < n; ++i) {
        out.push_back(std::abs(z[static_cast<std::size_t>(i)]));
    }
    return out;
}

}  // namespace

CharPolyResult roots_real(const IntPolynomial& poly, long precision) {
    if (poly.degree() < 1) {
        throw DomainError("roots_real: polynomial of degree >= 1 required");
    }
    const IntPolynomial p = primitive_part(poly);
    const IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() > 0) {
        throw PreconditionError("roots_real: polynomial is not squarefree; repeated factor " + g.to_string());
    }

    CharPolyResult result;
    result.poly = poly;
    std::vector<Interval> intervals = isolate(p);

    // Rational roots p/q have q | lc; two such rationals are >= 1/lc^2 apart.
    const Integer lc = abs(p.leading());
    const std::vector<Integer> dens = small_divisors(lc);
    Rational sep(1, lc * lc * 4);
    sep.canonicalize();
    IntPolynomial rest = p;
    std::vector<Interval> irrational;
    for (Interval iv : intervals) {
        std::optional<Rational> exact;
        if (refine(p, iv, sep)) {
            exact = iv.hi;
        } else {
            for (const Integer& q : dens) {
                Rational mid = (iv.lo + iv.hi) / 2;
                Integer num = mid.get_num() * q;
                mpz_fdiv_q(num.get_mpz_t(), num.get_mpz_t(), mid.get_den_mpz_t());
                for (Integer cand : {num, Integer(num + 1)}) {
                    Rational r = make_rational(cand, q);
                    if (r > iv.lo && r <= iv.hi && sign_at(p, r) == 0) {
                        exact = r;
                        break;
                    }
                }
                if (exact) {
                    break;
                }
            }
        }
        if (exact) {
            IntPolynomial factor(std::vector<Integer>{-exact->get_num(), exact->get_den()});
            rest = exact_quotient(rest, factor);
            result.roots.push_back({HPFloat(*exact, precision), RootKind::rational, to_string(*exact), factor});
        } else {
            irrational.push_back(iv);
        }
    }

    if (rest.degree() == 2) {
        const Integer disc = rest.coefficient(1) * rest.coefficient(1) - 4 * rest.coefficient(2) * rest.coefficient(0);
        if (disc > 0) {
            quadratic_roots(rest, precision, result.roots);
        } else {
            result.complex_count = 2;
            HPFloat m = sqrt(HPFloat(make_rational(rest.coefficient(0), rest.coefficient(2)), precision));
            result.complex_moduli = {m.to_double(), m.to_double()};
        }
    } else if (rest.degree() > 2) {
        // Bisect to an interval much narrower than the target precision.
        for (Interval iv : irrational) {
            Rational magnitude = std::max(abs(iv.lo), abs(iv.hi));
            if (magnitude < 1) {
                magnitude = 1;
            }
            Rational width = magnitude;
            mpz_mul_2exp(width.get_den_mpz_t(), width.get_den_mpz_t(), static_cast<mp_bitcnt_t>(precision + 16));
            width.canonicalize();
            refine(p, iv, width);
            Rational mid = (iv.lo + iv.hi) / 2;
            mid.canonicalize();
            result.roots.push_back({HPFloat(mid, precision), RootKind::numeric, "", rest});
        }
        result.complex_count = rest.degree() - static_cast<int>(irrational.size());
        result.complex_moduli = complex_moduli(rest, result.complex_count);
    }

    std::sort(result.roots.begin(), result.roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    for (std::size_t i = 1; i < result.roots.size(); ++i) {
        if (abs(result.roots[i].value) > abs(result.roots[result.dominant].value)) {
            result.dominant = i;
        }
    }
    return result;
}

}  // namespace holonomic
