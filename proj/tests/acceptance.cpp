// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <random>

#include "hek/fixtures.hpp"
#include "hek/theta.hpp"

using namespace hek;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int index, const char* label, bool pass, double ms, double budget_ms) {
    const bool in_budget = ms <= budget_ms;
    std::printf("%s  %2d. %s (%.1f ms, budget %.0f ms)\n",
                pass && in_budget ? "PASS" : "FAIL", index, label, ms, budget_ms);
    if (!(pass && in_budget)) ++failures;
}

template <class F>
void criterion(int index, const char* label, double budget_ms, F body) {
    const auto t0 = Clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
        pass = false;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(index, label, pass, ms, budget_ms);
}

P1Point fin(long n, long d = 1) { return P1Point::finite(Rat(n, d)); }

MobiusMap random_mobius(std::mt19937_64& rng) {
    for (;;) {
        const Rat a(static_cast<long>(rng() % 11) - 5), b(static_cast<long>(rng() % 11) - 5);
        const Rat c(static_cast<long>(rng() % 11) - 5), d(static_cast<long>(rng() % 11) - 5);
        if (a * d - b * c != 0) return MobiusMap(a, b, c, d);
    }
}

BranchSet random_p1_set(std::mt19937_64& rng) {
    std::vector<P1Point> pts;
    while (pts.size() < 6) {
        const P1Point p = rng() % 8 == 0
                              ? P1Point::infinity()
                              : fin(static_cast<long>(rng() % 41) - 20,
                                    static_cast<long>(rng() % 4) + 1);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return BranchSet(std::move(pts));
}

}  // namespace

int main() {
    const std::array<Rat, 6> sextic{0, 1, 2, 3, 4, 5};
    const std::array<Rat, 6> independent{0, 1, 2, 3, 9, 11};

    criterion(1, "exact line identities for a = (0,1,2,3,4,5)", 1000, [&] {
        const BranchData b = make_branch(sextic);
        const KummerSurface s = surface(b);
        const DiagQuadric row3 = vandermonde_quadric(b, 3);
        const auto lines = all_lines(b);
        if (lines.size() != 32) return false;
        for (const LabeledLine& l : lines)
            if (!verify_line(l, s, row3)) return false;
        return true;
    });

    KummerSuite suite;  // shared by criteria 2, 3 and 7
    criterion(2, "32 distinct lines, nondegenerate (16,6), 80 tetrahedra (exact)", 5000, [&] {
        const BranchData b = make_branch(independent);
        suite = run_kummer_suite(b, {CheckMode::Exact, {}, false});
        return suite.lines.size() == 32 && suite.lines_distinct && suite.identities_ok &&
               suite.config_valid && suite.config_nondegenerate && suite.rule_match &&
               suite.tetrahedra_count == 80;
    });

    criterion(3, "16 node lines pairwise disjoint (exact minors)", 5000, [&] {
        const BranchData b = make_branch(independent);
        const auto lines = all_lines(b);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (!lines[i].cls.is_node()) continue;
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                if (!lines[j].cls.is_node()) continue;
                if (lines_meet(lines[i].line, lines[j].line)) return false;
            }
        }
        return suite.nodes_pairwise_disjoint;
    });

    criterion(4, "fourth-quadric recovery on 20 random branch data (exact)", 10000, [&] {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 20; ++trial) {
            const BranchData b = make_branch(random_independent_branch(rng));
            const QuadricSolution t = recover_fourth_quadric(b, ConstraintSet::Tropes);
            const QuadricSolution n = recover_fourth_quadric(b, ConstraintSet::Nodes);
            if (t.rank != 16 || n.rank != 16) return false;
            if (!t.mixed_all_zero || !n.mixed_all_zero) return false;
            if (!(t.rref == n.rref)) return false;
            for (std::size_t k = 0; k < 5; ++k)
                if (t.d5_coeffs[k] != -b.fprime[5] / b.fprime[k]) return false;
        }
        return true;
    });

    criterion(5, "six 16-point fibers, residual < 1e-9, branch values (inf,0,1,2,3,4)", 5000, [&] {
        const HECurve x = from_lambda(make_cghr({Rat(2), Rat(3), Rat(4)}));
        const std::array<P1Point, 6> expected{P1Point::infinity(), fin(0), fin(1),
                                              fin(2),              fin(3), fin(4)};
        for (int i = 0; i < 6; ++i) {
            const RamificationSet rs = ramification_points(x, i);
            if (rs.points.size() != 16) return false;
            if (rs.max_residual >= 1e-9) return false;
            if (!(rs.branch_value == expected[static_cast<std::size_t>(i)])) return false;
        }
        const BranchLocus loc = branch_locus(make_cghr({Rat(2), Rat(3), Rat(4)}));
        return loc.value_by_hyperplane == expected && loc.max_residual < 1e-9;
    });

    criterion(6, "type invariants (16,17,3), g = d^2/16 + 1, and (64,129,5)", 1000, [&] {
        const TypeInvariants t5 = invariants_of_type(5);
        const TypeInvariants t7 = invariants_of_type(7);
        return t5.degree == 16 && t5.genus == 17 && t5.moduli_dim == 3 &&
               t5.genus == t5.degree * t5.degree / 16 + 1 && t7.degree == 64 &&
               t7.genus == 129 && t7.moduli_dim == 5;
    });

    criterion(7, "theta counts 26 = 6 + 20, 80 vanishing, genera (5,1,0), ledger", 2000, [&] {
        const HECurve x = from_lambda(make_cghr({Rat(2), Rat(3), Rat(4)}));
        const ThetaReport th = theta_report(x, suite.geometric, {});
        if (!th.all_ok() || th.odd_count != 26 || th.vanishing_count != 80) return false;
        if (quotient_genus(make_covering({0})) != 5) return false;
        if (quotient_genus(make_covering({0, 1})) != 1) return false;
        if (quotient_genus(make_covering({0, 1, 2})) != 0) return false;
        const IntersectionLedger led = rosenhain_ledger();
        return led.dx == 16 && led.x_squared == 32 && led.genus == 17;
    });

    criterion(8, "moduli witness x/2, 200 random key/witness agreements", 10000, [&] {
        const BranchSet lhs({fin(0), fin(1), P1Point::infinity(), fin(2), fin(3), fin(4)});
        const BranchSet rhs(
            {fin(0), fin(1), P1Point::infinity(), fin(1, 2), fin(3, 2), fin(2)});
        const auto w = is_isomorphic(lhs, rhs);
        if (!w || !(*w == MobiusMap(1, 0, 0, 2))) return false;

        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 200; ++trial) {
            const BranchSet a = random_p1_set(rng);
            const BranchSet b = apply(random_mobius(rng), a);
            const auto ab = is_isomorphic(a, b);
            if (!ab || !(apply(*ab, a) == b)) return false;
            if (!(canonical_key(a) == canonical_key(b))) return false;
            if (!(apply(ab->inverse(), b) == a)) return false;

            const BranchSet c = apply(random_mobius(rng), b);
            const auto bc = is_isomorphic(b, c);
            if (!bc || !(apply(bc->after(*ab), a) == c)) return false;

            const BranchSet other = random_p1_set(rng);
            const bool same_key = canonical_key(a) == canonical_key(other);
            if (same_key != is_isomorphic(a, other).has_value()) return false;
        }
        return true;
    });

    criterion(9, "normal-form round trip lands on key({0,1,inf,2,3,4}), exact witness", 2000, [&] {
        const HECurve x = from_lambda(make_cghr({Rat(2), Rat(3), Rat(4)}));
        const NormalFormResult nf = normal_form(x.coeffs());
        if (!witness_holds(x.coeffs(), nf)) return false;
        const BranchSet reference(
            {fin(0), fin(1), P1Point::infinity(), fin(2), fin(3), fin(4)});
        return canonical_key(branch_set_of(nf.branch)) == canonical_key(reference);
    });

    criterion(10, "exact/numeric agreement on 20 random data, 1000-element homomorphism",
              20000, [&] {
        std::mt19937_64 rng(10);
        const Tolerance tol{1e-7, 1e-7};
        for (int trial = 0; trial < 20; ++trial) {
            const BranchData b = make_branch(random_independent_branch(rng));
            const KummerSuite exact = run_kummer_suite(b, {CheckMode::Exact, tol, false});
            const KummerSuite numeric = run_kummer_suite(b, {CheckMode::Numeric, tol, false});
            if (!exact.all_ok() || !numeric.all_ok()) return false;
            if (!(exact.geometric == numeric.geometric)) return false;
            if (numeric.max_identity_residual >= 1e-7) return false;
        }

        auto basis = make_rad_basis({2, 3, 5, 7, 11, 13});
        const auto roots = basis->principal_roots();
        for (int k = 0; k < 1000; ++k) {
            RadElem x, y;
            for (int t = 0; t < 3; ++t) {
                x += RadElem::monomial(basis, static_cast<unsigned>(rng() % 64),
                                       Rat(static_cast<long>(rng() % 19) - 9));
                y += RadElem::monomial(basis, static_cast<unsigned>(rng() % 64),
                                       Rat(static_cast<long>(rng() % 19) - 9));
            }
            const CNum lhs = (x * y).embed(roots);
            const CNum rhs = x.embed(roots) * y.embed(roots);
            if (std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)) >= 1e-6) return false;
        }
        return true;
    });

    if (failures == 0) std::printf("acceptance: all 10 criteria hold\n");
    else std::printf("acceptance: %d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
