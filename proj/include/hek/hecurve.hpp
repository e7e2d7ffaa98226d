#pragma once

#include <optional>

#include "hek/kummer.hpp"
#include "hek/linalg.hpp"
#include "hek/moduli.hpp"

namespace hek {

/** Parameters lambda_1..lambda_{n-2}: pairwise distinct, none equal to 0 or 1. */
struct CGHRForm {
    std::vector<Rat> lambdas;
};

CGHRForm make_cghr(std::vector<Rat> lambdas);

/**
 * Curve of type n: the complete intersection of n-1 diagonal quadrics
 * sum_j c_{ij} x_j^2 = 0 in P^n, encoded by the (n-1) x (n+1) coefficient
 * matrix.  Smoothness is equivalent to every maximal minor being nonzero,
 * which the constructor enforces (std::domain_error otherwise).
 */
class HECurve {
public:
    HECurve(int n, MatQ coeffs);

    int n() const { return n_; }
    const MatQ& coeffs() const { return coeffs_; }

private:
    int n_;
    MatQ coeffs_;
};

/** Canonical diagonal model with quadric rows (lambda_k, 1, 0.., 1, ..0). */
HECurve from_lambda(const CGHRForm& form);

/** degree 2^{n-1}, genus 2^{n-2}(n-3)+1, moduli dimension n-2; requires n >= 4. */
struct TypeInvariants {
    int n = 0;
    long long degree = 0;
    long long genus = 0;
    long long moduli_dim = 0;
};

TypeInvariants invariants_of_type(int n);

/**
 * Result of putting six general-position coefficient points of P^3 on a
 * rational normal cubic: six distinct finite rational parameters a_0..a_5
 * (returned as branch data), plus an exact witness: a projectivity R and
 * column rescalings mu with R * A * diag(mu) equal to the Vandermonde
 * matrix (a_j^r).  The parameters are well defined up to Mobius maps; the
 * deterministic representative is produced by u = 1/(t - c) with c the
 * smallest positive integer avoiding the raw parameter set.
 */
struct NormalFormResult {
    BranchData branch;
    MatQ transform;          // 4x4, exact
    std::array<Rat, 6> mu;   // all nonzero
};

/** a must be 4x6 with all fifteen 4x4 minors nonzero (std::domain_error otherwise). */
NormalFormResult normal_form(const MatQ& a);

/** Exact check R * A * diag(mu) == (a_j^r). */
bool witness_holds(const MatQ& a, const NormalFormResult& w);

MatQ vandermonde_matrix(const std::array<Rat, 6>& a, int rows);

/** The branch parameters of a normal form, as a point set on P^1. */
BranchSet branch_set_of(const BranchData& b);

/** Kummer surface attached to recovered branch data. */
KummerSurface kummer_of(const NormalFormResult& nf);

/**
 * Intersection of a type-5 curve with the hyperplane x_i = 0: the
 * remaining quadrics become linear in the squares y_j = x_j^2 and cut out
 * a rational kernel direction y (exact, dimension must be 1), from which
 * the 2^5/2 = 16 section points are recovered numerically as sign choices
 * of sqrt(y_j).  branch_value is the exact value of the degree-32 map
 * (-x_1^2 : x_0^2) on the fiber.
 */
struct RamificationSet {
    int hyperplane = -1;
    VecQ y;                           // 6 entries, y[hyperplane] = 0, others nonzero
    std::vector<PPoint<CNum>> points; // 16, deterministic sign order
    double max_residual = 0.0;        // worst quadric residual over the fiber
    P1Point branch_value;
};

RamificationSet ramification_points(const HECurve& x, int i);

/** The pair (-x_1^2, x_0^2) defining the degree-32 map to P^1. */
template <class K>
std::pair<K, K> branch_map_pair(const PPoint<K>& p) {
    return {-(p.x[1] * p.x[1]), p.x[0] * p.x[0]};
}

/** Exact evaluation; throws std::invalid_argument when x_0 = x_1 = 0. */
P1Point branch_map_value(const PPoint<Rat>& p);

/**
 * Branch locus of the degree-32 map for a canonical model: one value per
 * coordinate hyperplane, expected to be {inf, 0, 1, lambda_1, ..,
 * lambda_{n-2}} in coordinate order.
 */
struct BranchLocus {
    std::array<P1Point, 6> value_by_hyperplane{};
    BranchSet locus;
    double max_residual = 0.0;
};

BranchLocus branch_locus(const CGHRForm& form);

/**
 * Recover the fourth diagonal quadric sum d_j x_j^2 + sum u_ij x_i x_j
 * vanishing to first order on the 16 lines of one parity class, by exact
 * elimination on the per-class leading-coefficient constraints
 *
 *   sum_j d_j / b_j + sum_{i<j} eps_i eps_j u_ij / (b_i b_j) = 0.
 *
 * Column order of the linear system: u_01..u_45 (lexicographic pairs),
 * then d_5, then d_0..d_4, so the reduced echelon form reads off u = 0 and
 * d_5 = - f'(a_5) * sum_{k<=4} d_k / f'(a_k) with d_0..d_4 free.
 */
enum class ConstraintSet { Tropes, Nodes };

struct QuadricSolution {
    int rank = 0;
    std::vector<int> free_diag;      // indices of the free diagonal unknowns
    bool mixed_all_zero = false;     // all u_ij forced to vanish
    std::array<Rat, 5> d5_coeffs{};  // d_5 = sum_k d5_coeffs[k] * d_k
    MatQ rref;                       // 16 x 21 reduced system
};

QuadricSolution recover_fourth_quadric(const BranchData& b, ConstraintSet which);

/** The quadric with free part (d_0..d_4) plugged into a recovered solution. */
GenQuadric quadric_from_solution(const QuadricSolution& s, const std::array<Rat, 5>& d_free);

}  // namespace hek
