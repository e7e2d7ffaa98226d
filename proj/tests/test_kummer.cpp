#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hek/fixtures.hpp"
#include "hek/kummer.hpp"

using namespace hek;

namespace {

const std::array<Rat, 6> kSextic{0, 1, 2, 3, 4, 5};          // dependent basis
const std::array<Rat, 6> kIndependent{0, 1, 2, 3, 9, 11};    // independent basis

}  // namespace

TEST_CASE("make_branch computes f' and rejects duplicates") {
    const BranchData b = make_branch(kSextic);
    CHECK(b.fprime == std::array<Rat, 6>{-120, 24, -12, 12, -24, 120});
    CHECK_FALSE(b.basis->independent());

    const BranchData c = make_branch({0, 1, -1, 2, -2, 3});
    CHECK(c.fprime[0] == -12);

    CHECK_THROWS_AS(make_branch({0, 1, 2, 3, 4, 4}), std::invalid_argument);
    CHECK(make_branch(kIndependent).basis->independent());
}

TEST_CASE("power residues vanish below the top degree") {
    const BranchData b = make_branch(kSextic);
    for (unsigned k = 0; k <= 4; ++k) CHECK(power_residue(k, b) == 0);
    CHECK(power_residue(5, b) == 1);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const BranchData r = make_branch(random_branch_tuple(rng));
        for (unsigned k = 0; k <= 4; ++k) CHECK(power_residue(k, r) == 0);
        CHECK(power_residue(5, r) == 1);
    }
}

TEST_CASE("sign classes") {
    const auto classes = SignClass::all();
    CHECK(classes.size() == 32);
    std::set<unsigned> masks;
    for (const SignClass& c : classes) {
        masks.insert(c.mask());
        CHECK((c.mask() & 1u) == 0);  // canonical representative excludes index 0
    }
    CHECK(masks.size() == 32);

    CHECK(SignClass::nodes().size() == 16);
    CHECK(SignClass::tropes().size() == 16);

    // a flip set and its complement name the same class
    CHECK(SignClass(0b000001) == SignClass(0b111110));
    CHECK(SignClass(0) == SignClass(0b111111));
    CHECK(SignClass(0).name() == "l");
    CHECK(SignClass(0b000001).is_node());
    CHECK_FALSE(SignClass(0b000110).is_node());
}

TEST_CASE("all 32 lines satisfy the quadric identities") {
    for (const auto& a : {kSextic, kIndependent}) {
        const BranchData b = make_branch(a);
        const KummerSurface s = surface(b);
        const DiagQuadric row3 = vandermonde_quadric(b, 3);
        const auto lines = all_lines(b);
        REQUIRE(lines.size() == 32);
        for (const LabeledLine& l : lines) {
            CHECK(verify_line(l, s, row3));
            for (const DiagQuadric& q : s.q) {
                CHECK(quad_on_line(q, l.line).is_zero());
            }
        }
    }
}

TEST_CASE("fourth Vandermonde row restricts to the constant 1") {
    const BranchData b = make_branch(kIndependent);
    const DiagQuadric row3 = vandermonde_quadric(b, 3);
    for (const LabeledLine& l : all_lines(b)) {
        const RadPoly r = quad_on_line(row3, l.line);
        CHECK(r.degree() == 0);
        CHECK(r.coeff(0) == RadElem(Rat(1)));
    }
}

TEST_CASE("incidence matches the parity rule") {
    const BranchData b = make_branch(kIndependent);
    const SuiteOptions opt{CheckMode::Exact, {}, false};
    const Config16 geo = incidence(b, opt);
    const Config16 rule = incidence_rule_config();
    CHECK(geo == rule);
    CHECK(is_config(geo));
    CHECK(is_nondegenerate(geo));
}

TEST_CASE("rule configuration is combinatorial only") {
    const Config16 rule = incidence_rule_config();
    for (int i = 0; i < 16; ++i) {
        CHECK(rule.row_sum(i) == 6);
        CHECK(rule.col_sum(i) == 6);
    }
    CHECK(rosenhain_enumerate(rule).size() == 80);
}

TEST_CASE("exact suite on an independent sextuple") {
    const BranchData b = make_branch(kIndependent);
    const KummerSuite s = run_kummer_suite(b, {CheckMode::Exact, {}, false});
    CHECK(s.all_ok());
    CHECK(s.lines.size() == 32);
    CHECK(s.tetrahedra_count == 80);
    CHECK_FALSE(s.used_numeric);
    CHECK(s.max_identity_residual == 0.0);
}

TEST_CASE("numeric suite on the dependent sextuple") {
    const BranchData b = make_branch(kSextic);
    const KummerSuite s = run_kummer_suite(b, {CheckMode::Numeric, Tolerance{}, false});
    CHECK(s.all_ok());
    CHECK(s.used_numeric);
    CHECK(s.max_identity_residual < 1e-9);
}

TEST_CASE("parallel suite agrees with serial") {
    const BranchData b = make_branch(kIndependent);
    const KummerSuite serial = run_kummer_suite(b, {CheckMode::Exact, {}, false});
    const KummerSuite parallel = run_kummer_suite(b, {CheckMode::Exact, {}, true});
    CHECK(serial.geometric == parallel.geometric);
    CHECK(serial.tetrahedra_count == parallel.tetrahedra_count);
    CHECK(parallel.all_ok());
}

TEST_CASE("node lines are pairwise disjoint, trope lines too") {
    const BranchData b = make_branch(kIndependent);
    const auto lines = all_lines(b);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].cls.is_node() != lines[j].cls.is_node()) continue;
            CHECK_FALSE(lines_meet(lines[i].line, lines[j].line));
        }
}

TEST_CASE("incidence across parities follows |S xor T| in {1,5}") {
    const BranchData b = make_branch(kIndependent);
    const auto lines = all_lines(b);
    for (const LabeledLine& n : lines) {
        if (!n.cls.is_node()) continue;
        for (const LabeledLine& t : lines) {
            if (t.cls.is_node()) continue;
            const int d = std::popcount(n.cls.mask() ^ t.cls.mask());
            const bool expect = d == 1 || d == 5;
            CHECK(lines_meet(n.line, t.line) == expect);
        }
    }
}
