#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "hek/rational.hpp"

namespace hek {

/**
 * Multiquadratic coefficient algebra
 *
 *   Q[s_0,...,s_5] / (s_j^2 - b_j),
 *
 * a 64-dimensional commutative Q-algebra with basis {s_S : S subset of
 * {0..5}}, s_S = prod_{j in S} s_j.  Products follow
 *
 *   s_S * s_T = (prod_{j in S cap T} b_j) * s_{S xor T},
 *
 * so arithmetic never leaves the span and equality-to-zero is a finite
 * coefficient check.  That check is a faithful field computation exactly
 * when the basis is independent: no nonempty subset of the b_j multiplies
 * to a rational square.  Degenerate bases collapse some s_S into Q and the
 * exact zero test becomes one-sided; callers are expected to fall back to
 * numeric evaluation in that case.
 */
class RadBasis {
public:
    /** b_j must all be nonzero. */
    explicit RadBasis(const std::array<Rat, 6>& squares);

    const std::array<Rat, 6>& squares() const { return squares_; }
    const Rat& square(int j) const { return squares_.at(static_cast<std::size_t>(j)); }

    /** True iff no nonempty subset product of the b_j is a rational square (63 checks). */
    bool independent() const { return independent_; }

    /** Principal complex square roots of the b_j (positive real or positive imaginary). */
    std::array<CNum, 6> principal_roots() const;

    friend bool operator==(const RadBasis& x, const RadBasis& y) {
        return x.squares_ == y.squares_;
    }

private:
    std::array<Rat, 6> squares_;
    bool independent_;
};

using RadBasisPtr = std::shared_ptr<const RadBasis>;

RadBasisPtr make_rad_basis(const std::array<Rat, 6>& squares);

/**
 * Element of the radical algebra, stored sparsely as subset-mask ->
 * coefficient.  Bit j of a mask selects s_j.  Purely rational elements
 * (mask 0 only, or zero) carry no basis pointer and combine with elements
 * over any basis; mixing two distinct nontrivial bases throws.
 */
class RadElem {
public:
    RadElem() = default;  // zero
    explicit RadElem(const Rat& c);
    explicit RadElem(long c);

    static RadElem monomial(RadBasisPtr basis, unsigned mask, const Rat& coeff);
    static RadElem root(RadBasisPtr basis, int j);  // s_j

    const RadBasisPtr& basis() const { return basis_; }
    const std::map<unsigned, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(unsigned mask) const;

    /** Exact structural zero test (trustworthy iff the basis is independent). */
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    /** The value as a rational; throws unless is_rational(). */
    Rat rational_value() const;

    /**
     * Evaluate under s_j -> roots[j].  Each root must square back to b_j
     * within eps (relative); otherwise std::invalid_argument.  Purely
     * rational elements accept any roots.
     */
    CNum embed(const std::array<CNum, 6>& roots, double eps = 1e-9) const;
    /** Evaluate at the principal roots of the element's own basis. */
    CNum embed_principal() const;

    RadElem& operator+=(const RadElem& rhs);
    RadElem& operator-=(const RadElem& rhs);
    RadElem& operator*=(const RadElem& rhs);
    RadElem operator-() const;

    friend RadElem operator+(RadElem lhs, const RadElem& rhs) { return lhs += rhs; }
    friend RadElem operator-(RadElem lhs, const RadElem& rhs) { return lhs -= rhs; }
    friend RadElem operator*(const RadElem& lhs, const RadElem& rhs);
    friend RadElem operator*(const Rat& c, const RadElem& x);

    friend bool operator==(const RadElem& x, const RadElem& y);
    friend bool operator!=(const RadElem& x, const RadElem& y) { return !(x == y); }

private:
    void add_term(unsigned mask, const Rat& c);
    void normalize();
    static RadBasisPtr merged_basis(const RadElem& x, const RadElem& y);

    RadBasisPtr basis_;  // null for purely rational elements
    std::map<unsigned, Rat> coeffs_;  // no zero values stored
};

/**
 * Polynomial in one variable with RadElem coefficients, trimmed so the
 * leading coefficient is structurally nonzero.  Zero polynomial has
 * degree -1.
 */
class RadPoly {
public:
    RadPoly() = default;
    explicit RadPoly(std::vector<RadElem> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /** Coefficient of t^k (zero beyond the degree). */
    const RadElem& coeff(std::size_t k) const;
    RadElem eval(const Rat& t) const;

    friend bool operator==(const RadPoly& p, const RadPoly& q) {
        return p.coeffs_ == q.coeffs_;
    }

private:
    std::vector<RadElem> coeffs_;
    static const RadElem zero_;
};

}  // namespace hek
