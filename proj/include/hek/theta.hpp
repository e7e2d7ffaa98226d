#pragma once

#include "hek/hecurve.hpp"

namespace hek {

/**
 * A subgroup of coordinate sign flips generated by 1 to 3 hyperplane
 * involutions, indexed by the branch values they sit over.
 */
struct CoveringSpec {
    std::vector<int> generators;  // distinct indices in 0..5

    int degree() const { return 1 << generators.size(); }
};

CoveringSpec make_covering(std::vector<int> generators);

/**
 * Genus of the quotient of a type-5 curve (genus 17, so 2g - 2 = 32) by
 * the subgroup, via the exact ramification ledger: each generator
 * contributes 16 simple ramification points, so
 *
 *   32 = 2^k (2 g' - 2) + 16 k.
 *
 * Throws std::domain_error if the bookkeeping does not close (non-integral
 * or negative genus).  k = 1, 2, 3 give 5, 1, 0.
 */
long long quotient_genus(const CoveringSpec& c);

struct DegreeCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool ok() const { return lhs == rhs; }
};

/**
 * Bookkeeping of the odd theta characteristics and vanishing thetanulls of
 * a type-5 curve: 6 odd structures from the hyperplane ramification divisors
 * plus one per 3-subset covering (20), and one vanishing thetanull per
 * Rosenhain tetrahedron of the configuration.  Section counts are carried
 * as annotations from the classical theory, never computed here.
 */
struct ThetaReport {
    int odd_count = 0;
    std::vector<std::string> odd_structures;
    int vanishing_count = 0;
    std::vector<DegreeCheck> degree_checks;
    int h0_odd_annotation = 3;
    int h0_vanishing_annotation = 6;
    std::vector<std::string> not_computed;

    bool all_ok() const;
};

ThetaReport theta_report(const HECurve& x, const Config16& c, const Tolerance& tol = {});

/**
 * Intersection numbers on the Kummer quartic driven by the tetrahedron
 * divisor class D with D^2 = 8: the curve class X = 2D gives D.X = 16,
 * X^2 = 32, and adjunction genus X^2/2 + 1 = 17.
 */
struct IntersectionLedger {
    long long d_squared = 8;
    long long dx = 0;
    long long x_squared = 0;
    long long genus = 0;
    std::vector<DegreeCheck> checks;
};

IntersectionLedger rosenhain_ledger();

}  // namespace hek
