#include "hek/theta.hpp"

#include <algorithm>

namespace hek {

CoveringSpec make_covering(std::vector<int> generators) {
    if (generators.empty() || generators.size() > 3)
        throw std::invalid_argument("covering subgroup needs 1 to 3 generators");
    std::sort(generators.begin(), generators.end());
    for (int g : generators)
        if (g < 0 || g > 5) throw std::invalid_argument("generator index out of range");
    if (std::adjacent_find(generators.begin(), generators.end()) != generators.end())
        throw std::invalid_argument("generator indices must be distinct");
    return CoveringSpec{std::move(generators)};
}

long long quotient_genus(const CoveringSpec& c) {
    const long long k = static_cast<long long>(c.generators.size());
    const long long deg = 1LL << k;
    // 2g - 2 of the source curve, minus the 16 simple branch points each
    // generator contributes, must split evenly across the covering degree
    const long long upstairs = 32 - 16 * k;
    if (upstairs % deg != 0) throw std::domain_error("ramification ledger does not close");
    const long long two_g_minus_2 = upstairs / deg;
    if ((two_g_minus_2 + 2) % 2 != 0 || two_g_minus_2 + 2 < 0)
        throw std::domain_error("ramification ledger does not close");
    return (two_g_minus_2 + 2) / 2;
}

bool ThetaReport::all_ok() const {
    if (odd_count != static_cast<int>(odd_structures.size())) return false;
    return std::all_of(degree_checks.begin(), degree_checks.end(),
                       [](const DegreeCheck& c) { return c.ok(); });
}

ThetaReport theta_report(const HECurve& x, const Config16& c, const Tolerance& tol) {
    ThetaReport out;

    // one odd structure per hyperplane ramification divisor
    std::array<RamificationSet, 6> fibers;
    for (int i = 0; i < 6; ++i) {
        fibers[static_cast<std::size_t>(i)] = ramification_points(x, i);
        out.odd_structures.push_back("R_" + std::to_string(i));
        out.degree_checks.push_back(
            {"fiber_size_x" + std::to_string(i),
             static_cast<long long>(fibers[static_cast<std::size_t>(i)].points.size()), 16});
    }
    long long total = 0;
    double worst = 0.0;
    for (const auto& f : fibers) {
        total += static_cast<long long>(f.points.size());
        worst = std::max(worst, f.max_residual);
    }
    out.degree_checks.push_back({"ramification_total", total, 96});
    out.degree_checks.push_back(
        {"fiber_residual_below_eps", worst <= tol.eps_zero ? 1 : 0, 1});

    // fibers over distinct branch points never share a point
    long long coincidences = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (const auto& p : fibers[static_cast<std::size_t>(i)].points)
                for (const auto& q : fibers[static_cast<std::size_t>(j)].points) {
                    double pn = 0.0, qn = 0.0;
                    CNum dot(0.0, 0.0);
                    for (std::size_t k = 0; k < 6; ++k) {
                        pn += std::norm(p.x[k]);
                        qn += std::norm(q.x[k]);
                        dot += std::conj(p.x[k]) * q.x[k];
                    }
                    if (1.0 - std::abs(dot) / std::sqrt(pn * qn) < tol.eps_match) ++coincidences;
                }
    out.degree_checks.push_back({"fibers_disjoint", coincidences, 0});

    // one odd structure per triple covering
    std::vector<int> genera;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                out.odd_structures.push_back("pi_" + std::to_string(i) + std::to_string(j) +
                                             std::to_string(k));
                genera.push_back(static_cast<int>(quotient_genus(make_covering({i, j, k}))));
            }
    out.degree_checks.push_back(
        {"triple_quotients_rational",
         static_cast<long long>(std::count(genera.begin(), genera.end(), 0)),
         static_cast<long long>(genera.size())});
    out.degree_checks.push_back({"quotient_genus_k1", quotient_genus(make_covering({0})), 5});
    out.degree_checks.push_back({"quotient_genus_k2", quotient_genus(make_covering({0, 1})), 1});
    out.degree_checks.push_back({"quotient_genus_k3", quotient_genus(make_covering({0, 1, 2})), 0});

    out.odd_count = static_cast<int>(out.odd_structures.size());
    out.degree_checks.push_back({"odd_count", out.odd_count, 26});

    out.vanishing_count = static_cast<int>(rosenhain_enumerate(c).size());
    out.degree_checks.push_back({"vanishing_thetanulls", out.vanishing_count, 80});

    out.not_computed = {"h0 of odd structures (annotated: 3 sections)",
                        "h0 of vanishing structures (annotated: 6 sections)",
                        "Picard lattice of the quartic", "canonical class bookkeeping"};
    return out;
}

IntersectionLedger rosenhain_ledger() {
    IntersectionLedger out;
    out.dx = 2 * out.d_squared;       // X = 2D
    out.x_squared = 4 * out.d_squared;
    out.genus = out.x_squared / 2 + 1;
    out.checks.push_back({"d_squared", out.d_squared, 8});
    out.checks.push_back({"d_dot_x", out.dx, 16});
    out.checks.push_back({"x_squared", out.x_squared, 32});
    out.checks.push_back({"adjunction_genus", out.genus, invariants_of_type(5).genus});
    return out;
}

}  // namespace hek
