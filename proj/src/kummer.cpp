#include "hek/kummer.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <thread>

#include <Eigen/SVD>

namespace hek {

namespace {

/** Deterministic chunked parallel loop: body(i) for i in [0, n). */
template <class F>
void for_each_index(std::size_t n, bool parallel, F&& body) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (!parallel || hw < 2 || n < 2 * hw) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t chunk = (n + hw - 1) / hw;
    std::vector<std::future<void>> tasks;
    for (std::size_t lo = 0; lo < n; lo += chunk) {
        const std::size_t hi = std::min(n, lo + chunk);
        tasks.push_back(std::async(std::launch::async, [lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        }));
    }
    for (auto& t : tasks) t.get();
}

double diag_residual(const DiagQuadric& q, const PPoint<CNum>& x, double expect) {
    CNum acc(0.0, 0.0);
    double mag = 0.0;
    for (std::size_t j = 0; j < 6; ++j) {
        const CNum term = to_double(q.d[j]) * x.x[j] * x.x[j];
        acc += term;
        mag += std::abs(term);
    }
    return std::abs(acc - CNum(expect, 0.0)) / std::max({1.0, mag, std::abs(expect)});
}

PPoint<CNum> at_parameter(const LineP5<CNum>& l, double t) {
    PPoint<CNum> out;
    for (std::size_t j = 0; j < 6; ++j) out.x[j] = l.p.x[j] + t * (l.q.x[j] - l.p.x[j]);
    return out;
}

bool lines_distinct_numeric(const LineP5<CNum>& l1, const LineP5<CNum>& l2, double eps) {
    Eigen::Matrix<CNum, 4, 6> m;
    const std::array<const PPoint<CNum>*, 4> rows{&l1.p, &l1.q, &l2.p, &l2.q};
    for (int r = 0; r < 4; ++r) {
        double biggest = 0.0;
        for (int j = 0; j < 6; ++j)
            biggest = std::max(biggest, std::abs(rows[static_cast<std::size_t>(r)]->x[static_cast<std::size_t>(j)]));
        for (int j = 0; j < 6; ++j)
            m(r, j) = rows[static_cast<std::size_t>(r)]->x[static_cast<std::size_t>(j)] / biggest;
    }
    Eigen::JacobiSVD<Eigen::Matrix<CNum, 4, 6>> svd(m);
    return svd.singularValues()(2) > eps;
}

}  // namespace

BranchData make_branch(const std::array<Rat, 6>& a) {
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (a[i] == a[j])
                throw std::invalid_argument("branch values must be pairwise distinct");
    BranchData b;
    b.a = a;
    for (std::size_t j = 0; j < 6; ++j) {
        Rat prod = 1;
        for (std::size_t k = 0; k < 6; ++k)
            if (k != j) prod *= a[j] - a[k];
        b.fprime[j] = prod;
    }
    b.basis = make_rad_basis(b.fprime);
    return b;
}

Rat power_residue(unsigned k, const BranchData& b) {
    Rat acc = 0;
    for (std::size_t j = 0; j < 6; ++j) acc += rat_pow(b.a[j], k) / b.fprime[j];
    return acc;
}

KummerSurface surface(const BranchData& b) {
    KummerSurface s;
    for (unsigned i = 0; i < 3; ++i) s.q[i] = vandermonde_quadric(b, i);
    return s;
}

DiagQuadric vandermonde_quadric(const BranchData& b, unsigned power) {
    DiagQuadric q;
    for (std::size_t j = 0; j < 6; ++j) q.d[j] = rat_pow(b.a[j], power);
    return q;
}

SignClass::SignClass(unsigned flips) : mask_(flips & 0x3fu) {
    if (mask_ & 1u) mask_ ^= 0x3fu;
}

unsigned SignClass::display_mask() const {
    return std::popcount(mask_) <= 3 ? mask_ : mask_ ^ 0x3fu;
}

std::string SignClass::name() const {
    const unsigned d = display_mask();
    if (d == 0) return "l";
    std::string out = "l_";
    for (int j = 0; j < 6; ++j)
        if (d >> j & 1) out.push_back(static_cast<char>('0' + j));
    return out;
}

std::array<SignClass, 32> SignClass::all() {
    // canonical masks are exactly the even numbers below 64
    std::array<SignClass, 32> out{};
    std::size_t k = 0;
    for (unsigned m = 0; m < 64; m += 2) out[k++] = SignClass(m);
    return out;
}

std::vector<SignClass> SignClass::nodes() {
    std::vector<SignClass> out;
    for (SignClass c : all())
        if (c.is_node()) out.push_back(c);
    return out;
}

std::vector<SignClass> SignClass::tropes() {
    std::vector<SignClass> out;
    for (SignClass c : all())
        if (!c.is_node()) out.push_back(c);
    return out;
}

std::vector<LabeledLine> all_lines(const BranchData& b) {
    std::vector<LabeledLine> out;
    out.reserve(32);
    for (SignClass cls : SignClass::all()) {
        PPoint<RadElem> p, q;
        for (int j = 0; j < 6; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const Rat inv_b = Rat(cls.sign(j)) / b.fprime[ju];
            p.x[ju] = RadElem::monomial(b.basis, 1u << j, b.a[ju] * inv_b);
            q.x[ju] = RadElem::monomial(b.basis, 1u << j, (b.a[ju] + 1) * inv_b);
        }
        out.push_back({cls, make_line(std::move(p), std::move(q))});
    }
    return out;
}

bool verify_line(const LabeledLine& l, const KummerSurface& s, const DiagQuadric& row3) {
    for (const DiagQuadric& q : s.q)
        if (!quad_on_line(q, l.line).is_zero()) return false;
    return quad_on_line(row3, l.line) == RadPoly({RadElem(Rat(1))});
}

namespace {

Config16 incidence_of(const std::vector<LabeledLine>& lines,
                      const std::vector<LineP5<CNum>>& embedded,
                      const SuiteOptions& opt) {
    std::vector<std::size_t> node_idx, trope_idx;
    for (std::size_t i = 0; i < lines.size(); ++i)
        (lines[i].cls.is_node() ? node_idx : trope_idx).push_back(i);

    Config16 c;
    for (int i = 0; i < 16; ++i) {
        c.point_labels[static_cast<std::size_t>(i)] = lines[node_idx[static_cast<std::size_t>(i)]].cls.name();
        c.plane_labels[static_cast<std::size_t>(i)] = lines[trope_idx[static_cast<std::size_t>(i)]].cls.name();
    }
    for_each_index(16, opt.parallel, [&](std::size_t i) {
        for (int j = 0; j < 16; ++j) {
            const std::size_t ni = node_idx[i], tj = trope_idx[static_cast<std::size_t>(j)];
            const bool meet = opt.mode == CheckMode::Exact
                                  ? lines_meet(lines[ni].line, lines[tj].line)
                                  : lines_meet(embedded[ni], embedded[tj], opt.tol.eps_zero);
            if (meet) c.set(static_cast<int>(i), j, true);
        }
    });
    return c;
}

}  // namespace

Config16 incidence(const BranchData& b, const SuiteOptions& opt) {
    const auto lines = all_lines(b);
    std::vector<LineP5<CNum>> embedded;
    if (opt.mode == CheckMode::Numeric) {
        const auto roots = b.basis->principal_roots();
        embedded.reserve(lines.size());
        for (const auto& l : lines) embedded.push_back(embed_line(l.line, roots));
    }
    return incidence_of(lines, embedded, opt);
}

Config16 incidence_rule_config() {
    const auto nodes = SignClass::nodes();
    const auto tropes = SignClass::tropes();
    Config16 c;
    for (int i = 0; i < 16; ++i) {
        c.point_labels[static_cast<std::size_t>(i)] = nodes[static_cast<std::size_t>(i)].name();
        c.plane_labels[static_cast<std::size_t>(i)] = tropes[static_cast<std::size_t>(i)].name();
        for (int j = 0; j < 16; ++j) {
            const int size = std::popcount(nodes[static_cast<std::size_t>(i)].mask() ^
                                           tropes[static_cast<std::size_t>(j)].mask());
            if (size == 1 || size == 5) c.set(i, j, true);
        }
    }
    return c;
}

KummerSuite run_kummer_suite(const BranchData& b, const SuiteOptions& opt) {
    KummerSuite out;
    out.lines = all_lines(b);
    out.used_numeric = opt.mode == CheckMode::Numeric;

    const KummerSurface s = surface(b);
    const DiagQuadric row3 = vandermonde_quadric(b, 3);

    std::vector<LineP5<CNum>> embedded;
    if (out.used_numeric) {
        const auto roots = b.basis->principal_roots();
        embedded.reserve(out.lines.size());
        for (const auto& l : out.lines) embedded.push_back(embed_line(l.line, roots));
    }

    const std::size_t n = out.lines.size();
    std::vector<double> residual(n, 0.0);
    std::vector<char> line_ok(n, 0);
    for_each_index(n, opt.parallel, [&](std::size_t i) {
        if (!out.used_numeric) {
            line_ok[i] = verify_line(out.lines[i], s, row3) ? 1 : 0;
            return;
        }
        double worst = 0.0;
        for (double t : {0.0, 1.0, 2.0}) {
            const PPoint<CNum> x = at_parameter(embedded[i], t);
            for (unsigned r = 0; r < 3; ++r)
                worst = std::max(worst, diag_residual(s.q[r], x, 0.0));
            worst = std::max(worst, diag_residual(row3, x, 1.0));
        }
        residual[i] = worst;
        line_ok[i] = worst <= opt.tol.eps_match ? 1 : 0;
    });
    out.identities_ok = std::all_of(line_ok.begin(), line_ok.end(), [](char v) { return v != 0; });
    out.max_identity_residual = *std::max_element(residual.begin(), residual.end());

    out.lines_distinct = true;
    for (std::size_t i = 0; i < n && out.lines_distinct; ++i)
        for (std::size_t j = i + 1; j < n && out.lines_distinct; ++j) {
            const bool distinct = out.used_numeric
                                      ? lines_distinct_numeric(embedded[i], embedded[j], opt.tol.eps_zero)
                                      : !lines_equal(out.lines[i].line, out.lines[j].line);
            if (!distinct) out.lines_distinct = false;
        }

    out.geometric = incidence_of(out.lines, embedded, opt);
    out.rule = incidence_rule_config();
    out.rule_match = out.geometric == out.rule;
    out.config_valid = is_config(out.geometric);
    out.config_nondegenerate = out.config_valid && is_nondegenerate(out.geometric);
    out.tetrahedra_count = out.config_valid ? rosenhain_enumerate(out.geometric).size() : 0;

    auto pairwise_disjoint = [&](bool node_side) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (out.lines[i].cls.is_node() == node_side) idx.push_back(i);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j) {
                const bool meet = out.used_numeric
                                      ? lines_meet(embedded[idx[i]], embedded[idx[j]], opt.tol.eps_zero)
                                      : lines_meet(out.lines[idx[i]].line, out.lines[idx[j]].line);
                if (meet) return false;
            }
        return true;
    };
    out.nodes_pairwise_disjoint = pairwise_disjoint(true);
    out.tropes_pairwise_disjoint = pairwise_disjoint(false);
    return out;
}

}  // namespace hek
