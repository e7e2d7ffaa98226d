#include "hek/hecurve.hpp"

#include <algorithm>
#include <cmath>

namespace hek {

namespace {

void check_maximal_minors(const MatQ& m, const char* what) {
    const Eigen::Index r = m.rows(), c = m.cols();
    std::vector<int> cols(static_cast<std::size_t>(r));
    // iterate over all r-subsets of columns
    for (Eigen::Index i = 0; i < r; ++i) cols[static_cast<std::size_t>(i)] = static_cast<int>(i);
    while (true) {
        MatQ sub(r, r);
        for (Eigen::Index j = 0; j < r; ++j) sub.col(j) = m.col(cols[static_cast<std::size_t>(j)]);
        if (exact_det(sub) == 0) throw std::domain_error(what);
        Eigen::Index k = r - 1;
        while (k >= 0 && cols[static_cast<std::size_t>(k)] == static_cast<int>(c - r + k)) --k;
        if (k < 0) break;
        ++cols[static_cast<std::size_t>(k)];
        for (Eigen::Index j = k + 1; j < r; ++j)
            cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
    }
}

VecQ solve_invertible(const MatQ& p, const VecQ& rhs) {
    MatQ aug(p.rows(), p.cols() + 1);
    aug.leftCols(p.cols()) = p;
    aug.col(p.cols()) = rhs;
    std::vector<int> pivots;
    const MatQ r = row_echelon_form(aug, &pivots);
    if (static_cast<Eigen::Index>(pivots.size()) != p.rows())
        throw std::domain_error("singular frame matrix");
    return r.col(p.cols());
}

}  // namespace

CGHRForm make_cghr(std::vector<Rat> lambdas) {
    if (lambdas.size() < 2)
        throw std::invalid_argument("need at least two lambda values (type n >= 4)");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] == 0 || lambdas[i] == 1)
            throw std::invalid_argument("lambda values must avoid 0 and 1");
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw std::invalid_argument("lambda values must be pairwise distinct");
    }
    return CGHRForm{std::move(lambdas)};
}

HECurve::HECurve(int n, MatQ coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (n_ < 4) throw std::invalid_argument("type must be at least 4");
    if (coeffs_.rows() != n_ - 1 || coeffs_.cols() != n_ + 1)
        throw std::invalid_argument("coefficient matrix must be (n-1) x (n+1)");
    check_maximal_minors(coeffs_, "singular model: a maximal minor vanishes");
}

HECurve from_lambda(const CGHRForm& form) {
    const int n = static_cast<int>(form.lambdas.size()) + 2;
    MatQ m = MatQ::Zero(n - 1, n + 1);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(0, 2) = 1;
    for (int k = 1; k < n - 1; ++k) {
        m(k, 0) = form.lambdas[static_cast<std::size_t>(k - 1)];
        m(k, 1) = 1;
        m(k, k + 2) = 1;
    }
    return HECurve(n, std::move(m));
}

TypeInvariants invariants_of_type(int n) {
    if (n < 4) throw std::invalid_argument("type must be at least 4");
    return TypeInvariants{n, 1LL << (n - 1), (1LL << (n - 2)) * (n - 3) + 1, n - 2};
}

MatQ vandermonde_matrix(const std::array<Rat, 6>& a, int rows) {
    MatQ v(rows, 6);
    for (int r = 0; r < rows; ++r)
        for (int j = 0; j < 6; ++j)
            v(r, j) = rat_pow(a[static_cast<std::size_t>(j)], static_cast<unsigned>(r));
    return v;
}

NormalFormResult normal_form(const MatQ& a) {
    if (a.rows() != 4 || a.cols() != 6)
        throw std::invalid_argument("normal form expects a 4 x 6 coefficient matrix");
    check_maximal_minors(a, "coefficient points not in general position");

    const MatQ p = a.leftCols(4);
    const VecQ w = solve_invertible(p, a.col(4));
    const VecQ v = solve_invertible(p, a.col(5));
    // in the frame where p_0..p_3 are fundamental and p_4 is the unit point,
    // p_5 lands at q_r = v_r / w_r; general position makes the q_r distinct,
    // nonzero, and pairwise distinct
    std::array<Rat, 4> q;
    for (int r = 0; r < 4; ++r) {
        if (w(r) == 0) throw std::domain_error("unit point hits a coordinate plane");
        q[static_cast<std::size_t>(r)] = v(r) / w(r);
        if (q[static_cast<std::size_t>(r)] == 0)
            throw std::domain_error("sixth point hits a coordinate plane");
    }

    // the rational normal cubic x_r(t) = 1/(t - alpha_r) with alpha_r = -1/q_r
    // passes through all six points at parameters alpha_0..alpha_3, inf, 0
    std::array<Rat, 4> alpha;
    for (std::size_t r = 0; r < 4; ++r) alpha[r] = Rat(-1) / q[r];

    // reparametrize by u = 1/(t - c), c the smallest positive integer off the set
    Rat c = 0;
    for (bool clash = true; clash;) {
        c += 1;
        clash = false;
        for (const Rat& al : alpha)
            if (al == c) clash = true;
    }
    // params[j] is the parameter of coefficient point p_j; the order must
    // stay aligned with the columns for the witness pairing below
    std::array<Rat, 6> params;
    for (std::size_t r = 0; r < 4; ++r) params[r] = Rat(1) / (alpha[r] - c);
    params[4] = 0;             // image of t = inf
    params[5] = Rat(-1) / c;   // image of t = 0

    BranchData branch = make_branch(params);

    // witness: solve R * a_col_j = kappa_j * (1, a_j, a_j^2, a_j^3) as one
    // homogeneous system in (R, kappa); its kernel must be a line
    MatQ sys = MatQ::Zero(24, 22);
    for (int j = 0; j < 6; ++j)
        for (int r = 0; r < 4; ++r) {
            const Eigen::Index row = 4 * j + r;
            for (int col = 0; col < 4; ++col) sys(row, 4 * r + col) = a(col, j);
            sys(row, 16 + j) = -rat_pow(branch.a[static_cast<std::size_t>(j)],
                                        static_cast<unsigned>(r));
        }
    const MatQ null_basis = kernel(sys);
    if (null_basis.cols() != 1)
        throw std::domain_error("witness space has dimension != 1");

    NormalFormResult out{std::move(branch), MatQ(4, 4), {}};
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) out.transform(r, col) = null_basis(4 * r + col, 0);
    if (exact_det(out.transform) == 0) throw std::domain_error("witness transform is singular");
    for (int j = 0; j < 6; ++j) {
        const Rat kappa = null_basis(16 + j, 0);
        if (kappa == 0) throw std::domain_error("witness rescaling vanishes");
        out.mu[static_cast<std::size_t>(j)] = Rat(1) / kappa;
    }
    if (!witness_holds(a, out)) throw std::domain_error("witness verification failed");
    return out;
}

bool witness_holds(const MatQ& a, const NormalFormResult& w) {
    if (a.rows() != 4 || a.cols() != 6) return false;
    MatQ lhs = w.transform * a;
    for (int j = 0; j < 6; ++j) lhs.col(j) *= w.mu[static_cast<std::size_t>(j)];
    return lhs == vandermonde_matrix(w.branch.a, 4);
}

BranchSet branch_set_of(const BranchData& b) {
    std::vector<P1Point> pts;
    pts.reserve(6);
    for (const Rat& v : b.a) pts.push_back(P1Point::finite(v));
    return BranchSet(std::move(pts));
}

KummerSurface kummer_of(const NormalFormResult& nf) { return surface(nf.branch); }

RamificationSet ramification_points(const HECurve& x, int i) {
    if (x.n() != 5)
        throw std::invalid_argument("hyperplane sections are implemented for type 5");
    if (i < 0 || i > 5) throw std::invalid_argument("hyperplane index out of range");

    MatQ sub(4, 5);
    int out_col = 0;
    for (int j = 0; j < 6; ++j) {
        if (j == i) continue;
        sub.col(out_col++) = x.coeffs().col(j);
    }
    const MatQ null_basis = kernel(sub);
    if (null_basis.cols() != 1)
        throw std::domain_error("hyperplane section kernel has dimension != 1");

    RamificationSet out;
    out.hyperplane = i;
    out.y = VecQ::Zero(6);
    int pos = 0;
    for (int j = 0; j < 6; ++j) {
        if (j == i) continue;
        out.y(j) = null_basis(pos++, 0);
        if (out.y(j) == 0) throw std::domain_error("degenerate hyperplane section");
    }

    // 2^5 sign choices of sqrt(y_j), modulo the global flip: 16 points
    std::array<CNum, 6> root{};
    for (int j = 0; j < 6; ++j)
        if (j != i) root[static_cast<std::size_t>(j)] = std::sqrt(to_cnum(out.y(j)));
    std::vector<int> live;
    for (int j = 0; j < 6; ++j)
        if (j != i) live.push_back(j);

    out.points.reserve(16);
    for (unsigned pattern = 0; pattern < 16; ++pattern) {
        PPoint<CNum> pt;
        pt.x[static_cast<std::size_t>(i)] = CNum(0.0, 0.0);
        pt.x[static_cast<std::size_t>(live[0])] = root[static_cast<std::size_t>(live[0])];
        for (unsigned k = 0; k < 4; ++k) {
            const auto j = static_cast<std::size_t>(live[k + 1]);
            pt.x[j] = (pattern >> k & 1) ? -root[j] : root[j];
        }
        out.points.push_back(pt);
    }

    double worst = 0.0;
    for (const PPoint<CNum>& pt : out.points) {
        double biggest = 0.0;
        for (const CNum& c : pt.x) biggest = std::max(biggest, std::abs(c));
        for (int r = 0; r < 4; ++r) {
            CNum acc(0.0, 0.0);
            double mag = 0.0;
            for (int j = 0; j < 6; ++j) {
                const CNum xn = pt.x[static_cast<std::size_t>(j)] / biggest;
                const CNum term = to_double(x.coeffs()(r, j)) * xn * xn;
                acc += term;
                mag += std::abs(term);
            }
            worst = std::max(worst, std::abs(acc) / std::max(1.0, mag));
        }
    }
    out.max_residual = worst;

    out.branch_value = P1Point::from_pair(-out.y(1), out.y(0));
    return out;
}

P1Point branch_map_value(const PPoint<Rat>& p) {
    const auto [u, v] = branch_map_pair(p);
    if (u == 0 && v == 0)
        throw std::invalid_argument("branch map undefined where x_0 = x_1 = 0");
    return P1Point::from_pair(u, v);
}

BranchLocus branch_locus(const CGHRForm& form) {
    if (form.lambdas.size() != 3)
        throw std::invalid_argument("branch locus needs a type-5 model (three lambdas)");
    const HECurve x = from_lambda(form);

    std::array<P1Point, 6> values;
    double worst = 0.0;
    std::vector<P1Point> pts;
    for (int i = 0; i < 6; ++i) {
        const RamificationSet rs = ramification_points(x, i);
        values[static_cast<std::size_t>(i)] = rs.branch_value;
        worst = std::max(worst, rs.max_residual);

        // numeric fiber points must reproduce the exact value projectively
        const CNum eu = to_cnum(-rs.y(1)), ev = to_cnum(rs.y(0));
        const double escale = std::max(std::abs(eu), std::abs(ev));
        for (const PPoint<CNum>& pt : rs.points) {
            const auto [nu, nv] = branch_map_pair(pt);
            const double nscale = std::max(std::abs(nu), std::abs(nv));
            const double mismatch =
                std::abs(nu / nscale * (ev / escale) - nv / nscale * (eu / escale));
            worst = std::max(worst, mismatch);
        }
        pts.push_back(rs.branch_value);
    }
    return BranchLocus{values, BranchSet(std::move(pts)), worst};
}

QuadricSolution recover_fourth_quadric(const BranchData& b, ConstraintSet which) {
    const auto classes = which == ConstraintSet::Tropes ? SignClass::tropes() : SignClass::nodes();

    MatQ sys(16, 21);
    for (std::size_t row = 0; row < 16; ++row) {
        const SignClass& cls = classes[row];
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                const auto col = static_cast<Eigen::Index>(GenQuadric::mixed_index(i, j));
                sys(static_cast<Eigen::Index>(row), col) =
                    Rat(cls.sign(i) * cls.sign(j)) /
                    (b.fprime[static_cast<std::size_t>(i)] * b.fprime[static_cast<std::size_t>(j)]);
            }
        sys(static_cast<Eigen::Index>(row), 15) = Rat(1) / b.fprime[5];
        for (int k = 0; k < 5; ++k)
            sys(static_cast<Eigen::Index>(row), 16 + k) = Rat(1) / b.fprime[static_cast<std::size_t>(k)];
    }

    QuadricSolution out;
    std::vector<int> pivots;
    out.rref = row_echelon_form(sys, &pivots);
    out.rank = static_cast<int>(pivots.size());

    std::vector<bool> is_pivot(21, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < 21; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    for (int c : free_cols)
        if (c >= 16) out.free_diag.push_back(c - 16);

    // every mixed unknown vanishes iff its pivot row has no free-column support
    out.mixed_all_zero = true;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= 15) continue;
        for (int c : free_cols)
            if (out.rref(static_cast<Eigen::Index>(r), c) != 0) out.mixed_all_zero = false;
    }
    if (std::count(is_pivot.begin(), is_pivot.begin() + 15, false) != 0)
        out.mixed_all_zero = false;

    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] != 15) continue;
        for (int k = 0; k < 5; ++k)
            out.d5_coeffs[static_cast<std::size_t>(k)] = -out.rref(static_cast<Eigen::Index>(r), 16 + k);
    }
    return out;
}

GenQuadric quadric_from_solution(const QuadricSolution& s, const std::array<Rat, 5>& d_free) {
    if (s.rank != 16 || !s.mixed_all_zero || s.free_diag != std::vector<int>{0, 1, 2, 3, 4})
        throw std::domain_error("solution does not have the diagonal-family shape");
    GenQuadric q;
    for (std::size_t k = 0; k < 5; ++k) q.d[k] = d_free[k];
    Rat d5 = 0;
    for (std::size_t k = 0; k < 5; ++k) d5 += s.d5_coeffs[k] * d_free[k];
    q.d[5] = d5;
    return q;
}

}  // namespace hek
