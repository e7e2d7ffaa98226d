#pragma once

#include <array>

#include "hek/radical.hpp"

namespace hek {

/** Point of P^5, stored as a coordinate 6-tuple (not normalized). */
template <class K>
struct PPoint {
    std::array<K, 6> x{};
};

using PPointR = PPoint<RadElem>;
using PPointC = PPoint<CNum>;
using PPointQ = PPoint<Rat>;

/** Line in P^5 spanned by two points; construction enforces that p, q span a line. */
template <class K>
struct LineP5 {
    PPoint<K> p, q;
};

/** Mixed-scalar scaling helpers so quadric code can stay generic. */
inline Rat scale_by(const Rat& c, const Rat& x) { return c * x; }
inline CNum scale_by(const Rat& c, const CNum& x) { return to_double(c) * x; }
inline RadElem scale_by(const Rat& c, const RadElem& x) { return c * x; }

template <class K>
bool coords_all_zero(const PPoint<K>& p) {
    for (const K& c : p.x)
        if (!(c == K{})) return false;
    return true;
}

/** Validating constructors; throw std::invalid_argument on a degenerate span. */
LineP5<RadElem> make_line(PPoint<RadElem> p, PPoint<RadElem> q);
LineP5<CNum> make_line(PPoint<CNum> p, PPoint<CNum> q, double eps_zero = 1e-9);

/** Diagonal quadric sum d_j x_j^2. */
struct DiagQuadric {
    std::array<Rat, 6> d{};
};

/**
 * Quadric with diagonal part d and mixed part m, Q = sum d_j x_j^2 +
 * sum_{i<j} m_{ij} x_i x_j, mixed coefficients in lexicographic pair order.
 */
struct GenQuadric {
    std::array<Rat, 6> d{};
    std::array<Rat, 15> m{};

    static constexpr int mixed_index(int i, int j) {
        // lex rank of the pair (i, j), i < j, within C({0..5}, 2)
        return i * 5 - i * (i - 1) / 2 + (j - i - 1);
    }
};

template <class K>
K quad_eval(const DiagQuadric& q, const PPoint<K>& p) {
    K acc{};
    for (int j = 0; j < 6; ++j) {
        const auto& xj = p.x[static_cast<std::size_t>(j)];
        acc += scale_by(q.d[static_cast<std::size_t>(j)], xj * xj);
    }
    return acc;
}

template <class K>
K quad_eval(const GenQuadric& q, const PPoint<K>& p) {
    K acc{};
    for (int j = 0; j < 6; ++j) {
        const auto& xj = p.x[static_cast<std::size_t>(j)];
        acc += scale_by(q.d[static_cast<std::size_t>(j)], xj * xj);
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const Rat& c = q.m[static_cast<std::size_t>(GenQuadric::mixed_index(i, j))];
            if (c == 0) continue;
            acc += scale_by(c, p.x[static_cast<std::size_t>(i)] * p.x[static_cast<std::size_t>(j)]);
        }
    return acc;
}

/**
 * Restriction of a quadric to the parametrized line t -> p + t (q - p),
 * returned as a degree <= 2 polynomial in t.  Identically-zero restriction
 * means the line lies on the quadric.
 */
RadPoly quad_on_line(const DiagQuadric& q, const LineP5<RadElem>& line);
RadPoly quad_on_line(const GenQuadric& q, const LineP5<RadElem>& line);

/**
 * Exact incidence test: two lines of P^5 meet iff the 4x6 matrix stacking
 * their spanning points has rank < 4, decided by zero-testing all fifteen
 * 4x4 minors in the radical algebra.
 */
bool lines_meet(const LineP5<RadElem>& l1, const LineP5<RadElem>& l2);

/** Numeric incidence: smallest singular value of the stacked rows below eps_zero. */
bool lines_meet(const LineP5<CNum>& l1, const LineP5<CNum>& l2, double eps_zero);

/** Projective coincidence of lines (stacked rank 2). */
bool lines_equal(const LineP5<RadElem>& l1, const LineP5<RadElem>& l2);

PPoint<CNum> embed_point(const PPoint<RadElem>& p, const std::array<CNum, 6>& roots);
LineP5<CNum> embed_line(const LineP5<RadElem>& line, const std::array<CNum, 6>& roots);

/** Cofactor-expansion minors over any commutative ring scalar. */
template <class K>
K det2(const K& a, const K& b, const K& c, const K& d) {
    return a * d - b * c;
}

template <class K>
K det3(const std::array<std::array<K, 3>, 3>& m) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

template <class K>
K det4(const std::array<std::array<K, 4>, 4>& m) {
    K acc{};
    for (int c = 0; c < 4; ++c) {
        std::array<std::array<K, 3>, 3> minor;
        for (int i = 1; i < 4; ++i) {
            int col = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == c) continue;
                minor[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(col++)] =
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
        K term = m[0][static_cast<std::size_t>(c)] * det3(minor);
        if (c % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

}  // namespace hek
