#include "holonomic/exact_linear_algebra.hpp"
#include "holonomic/recurrence.hpp"

#include <utility>

namespace holonomic {

std::vector<std::size_t> fraction_free_rref(IntMatrix& m) {
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    Integer factor;
    Integer t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(p, j), m(r, j));
            }
        }
        const Integer pivot = m(r, c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) {
                continue;
            }
            factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                // (pivot * m_ij - m_ic * m_rj) / prev is exact (Bareiss).
                t = pivot * m(i, j);
                t -= factor * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) {
        return;
    }
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0) {
                g = -g;
            }
            break;
        }
    }
    for (auto& x : v) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<std::vector<Integer>> integer_nullspace(IntMatrix m) {
    const std::vector<std::size_t> pivots = fraction_free_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    // After fraction-free Gauss-Jordan every pivot entry equals the last pivot.
    const Integer scale = pivots.empty() ? Integer(1) : Integer(m(pivots.size() - 1, pivots.back()));
    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Integer> v(m.cols(), Integer(0));
        v[f] = scale;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -m(i, f);
        }
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Unknown layout: blocks p_d, p_{d-1}, ..., p_0, each in ascending powers of n.
// The nullspace vector with the earliest last-nonzero column then has the
// lowest possible degree of p_0.
std::size_t column_of(int order, int degree, int i, int j) {
    return static_cast<std::size_t>((order - i) * (degree + 1) + j);
}

std::optional<PRecurrence> try_shape(const SequenceValues& vals, int order, int degree) {
    const long equations = vals.size() - order;
    const long used = equations - kGuessMargin;
    const std::size_t unknowns = static_cast<std::size_t>((order + 1) * (degree + 1));
    if (used < static_cast<long>(unknowns)) {
        return std::nullopt;
    }
    IntMatrix m(static_cast<std::size_t>(used), unknowns);
    for (long row = 0; row < used; ++row) {
        const long n = vals.offset + row;
        const Rational* u = &vals.values[static_cast<std::size_t>(row)];
        Integer l = 1;
        for (int i = 0; i <= order; ++i) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), u[i].get_den_mpz_t());
        }
        for (int i = 0; i <= order; ++i) {
            // u_{n+i} * l is an integer.
            Integer scaled = u[i].get_num() * (l / u[i].get_den());
            for (int j = 0; j <= degree; ++j) {
                m(static_cast<std::size_t>(row), column_of(order, degree, i, j)) = scaled;
                scaled *= n;
            }
        }
    }
    for (const auto& v : integer_nullspace(std::move(m))) {
        std::vector<IntPolynomial> coeffs;
        for (int i = 0; i <= order; ++i) {
            std::vector<Integer> cs;
            for (int j = 0; j <= degree; ++j) {
                cs.push_back(v[column_of(order, degree, i, j)]);
            }
            coeffs.emplace_back(std::move(cs));
        }
        if (coeffs.front().is_zero() || coeffs.back().is_zero()) {
            continue;
        }
        PRecurrence rec(std::move(coeffs), vals.offset);
        IndexRange all{vals.first_index(), vals.last_index() - order};
        if (verify_recurrence(rec, vals, all).holds()) {
            return rec;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PRecurrence> guess_recurrence(const SequenceValues& vals, int max_order, int max_degree) {
    if (max_order < 1 || max_degree < 0) {
        throw DomainError("guess_recurrence: need max_order >= 1 and max_degree >= 0");
    }
    const long needed = static_cast<long>(max_order + 1) * (max_degree + 1) + max_order + kGuessMargin;
    if (vals.size() < needed) {
        throw CoverageError("guess_recurrence: " + std::to_string(needed) + " terms required for order <= " +
                            std::to_string(max_order) + ", degree <= " + std::to_string(max_degree) +
                            ", got " + std::to_string(vals.size()));
    }
    for (int order = 1; order <= max_order; ++order) {
        for (int degree = 0; degree <= max_degree; ++degree) {
            if (auto rec = try_shape(vals, order, degree)) {
                return rec;
            }
        }
    }
    return std::nullopt;
}

}  // namespace holonomic
