#pragma once

#include <vector>

#include "hek/config16.hpp"
#include "hek/geom.hpp"

namespace hek {

/**
 * Six distinct rational branch values a_0..a_5 together with the derived
 * data every construction downstream needs: f'(a_j) = prod_{k != j}
 * (a_j - a_k) for f = prod (x - a_j), and the radical basis whose formal
 * roots s_j satisfy s_j^2 = f'(a_j).
 */
struct BranchData {
    std::array<Rat, 6> a{};
    std::array<Rat, 6> fprime{};
    RadBasisPtr basis;
};

/** Validates distinctness; throws std::invalid_argument on duplicates. */
BranchData make_branch(const std::array<Rat, 6>& a);

/**
 * Lagrange residue sum_j a_j^k / f'(a_j).  Vanishes for 0 <= k <= 4 and
 * equals 1 at k = 5; these identities are what place the 32 lines on the
 * surface, so they are computed here from scratch rather than assumed.
 */
Rat power_residue(unsigned k, const BranchData& b);

/** The three diagonal quadrics sum_j a_j^i x_j^2, i = 0, 1, 2, cutting out the surface in P^5. */
struct KummerSurface {
    std::array<DiagQuadric, 3> q{};
};

KummerSurface surface(const BranchData& b);

/** Diagonal quadric with d_j = a_j^power (rows of the Vandermonde family). */
DiagQuadric vandermonde_quadric(const BranchData& b, unsigned power);

/**
 * Sign class of a line: a subset S of {0..5} acting by x_j -> -x_j for
 * j in S, taken modulo the global flip S ~ complement(S).  The canonical
 * representative excludes index 0.  Even classes are the tropes (l, l_ij),
 * odd classes the nodes (l_i, l_ijk); 1 + 15 tropes and 6 + 10 nodes.
 */
class SignClass {
public:
    SignClass() = default;  // the identity class "l"
    explicit SignClass(unsigned flips);

    unsigned mask() const { return mask_; }
    /** Representative of minimal size, the one used in the name. */
    unsigned display_mask() const;
    bool odd() const { return std::popcount(mask_) % 2 == 1; }
    bool is_node() const { return odd(); }
    int sign(int j) const { return mask_ >> j & 1 ? -1 : 1; }
    std::string name() const;

    static std::array<SignClass, 32> all();
    static std::vector<SignClass> nodes();
    static std::vector<SignClass> tropes();

    friend bool operator==(SignClass a, SignClass b) { return a.mask_ == b.mask_; }
    friend bool operator<(SignClass a, SignClass b) { return a.mask_ < b.mask_; }

private:
    unsigned mask_ = 0;  // canonical: bit 0 clear
};

struct LabeledLine {
    SignClass cls;
    LineP5<RadElem> line;
};

/**
 * All 32 lines of the surface, in ascending sign-class order.  The class-S
 * line is t -> (eps_j (t + a_j) s_j / f'(a_j))_j with eps the sign vector
 * of S; its spanning points are the parameter values t = 0 and t = 1, so
 * quad_on_line restrictions read directly as polynomials in t.
 */
std::vector<LabeledLine> all_lines(const BranchData& b);

/**
 * Exact check that the line lies on all three surface quadrics and that
 * the cubic Vandermonde row restricts to the constant polynomial 1.
 */
bool verify_line(const LabeledLine& l, const KummerSurface& s, const DiagQuadric& row3);

enum class CheckMode { Exact, Numeric };

struct SuiteOptions {
    CheckMode mode = CheckMode::Exact;
    Tolerance tol{};
    bool parallel = false;
};

/**
 * Node-plane incidence matrix: rows are the 16 node lines, columns the 16
 * trope lines, both in ascending class order, entry 1 iff the lines meet.
 */
Config16 incidence(const BranchData& b, const SuiteOptions& opt);

/**
 * The combinatorial prediction: classes S, T meet iff |S xor T| lies in
 * {1, 5} (cardinality taken on any representatives; the verdict is
 * complement-invariant).  Depends on no branch data at all.
 */
Config16 incidence_rule_config();

/** Everything the line/configuration pipeline asserts, bundled for reports. */
struct KummerSuite {
    std::vector<LabeledLine> lines;
    bool identities_ok = false;
    bool lines_distinct = false;
    Config16 geometric;
    Config16 rule;
    bool rule_match = false;
    bool config_valid = false;
    bool config_nondegenerate = false;
    bool nodes_pairwise_disjoint = false;
    bool tropes_pairwise_disjoint = false;
    std::size_t tetrahedra_count = 0;
    bool used_numeric = false;
    double max_identity_residual = 0.0;

    bool all_ok() const {
        return identities_ok && lines_distinct && rule_match && config_valid &&
               config_nondegenerate && nodes_pairwise_disjoint &&
               tropes_pairwise_disjoint && tetrahedra_count == 80;
    }
};

KummerSuite run_kummer_suite(const BranchData& b, const SuiteOptions& opt);

}  // namespace hek
