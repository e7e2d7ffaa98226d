#include "hek/geom.hpp"

#include <Eigen/SVD>

namespace hek {

namespace {

// rows of the 4x6 incidence matrix for a line pair
std::array<const PPoint<RadElem>*, 4> stacked(const LineP5<RadElem>& l1,
                                              const LineP5<RadElem>& l2) {
    return {&l1.p, &l1.q, &l2.p, &l2.q};
}

bool minor4_all_zero(const std::array<const PPoint<RadElem>*, 4>& rows) {
    std::array<int, 4> cols{};
    for (cols[0] = 0; cols[0] < 3; ++cols[0])
        for (cols[1] = cols[0] + 1; cols[1] < 4; ++cols[1])
            for (cols[2] = cols[1] + 1; cols[2] < 5; ++cols[2])
                for (cols[3] = cols[2] + 1; cols[3] < 6; ++cols[3]) {
                    std::array<std::array<RadElem, 4>, 4> m;
                    for (std::size_t i = 0; i < 4; ++i)
                        for (std::size_t j = 0; j < 4; ++j)
                            m[i][j] = rows[i]->x[static_cast<std::size_t>(cols[j])];
                    if (!det4(m).is_zero()) return false;
                }
    return true;
}

Eigen::Matrix<CNum, 1, 6> unit_row(const PPoint<CNum>& p) {
    Eigen::Matrix<CNum, 1, 6> row;
    double biggest = 0.0;
    for (int j = 0; j < 6; ++j) {
        row(j) = p.x[static_cast<std::size_t>(j)];
        biggest = std::max(biggest, std::abs(row(j)));
    }
    if (biggest == 0.0) throw std::invalid_argument("zero coordinate vector");
    return row / biggest;
}

}  // namespace

LineP5<RadElem> make_line(PPoint<RadElem> p, PPoint<RadElem> q) {
    if (coords_all_zero(p) || coords_all_zero(q))
        throw std::invalid_argument("line through a zero coordinate vector");
    bool distinct = false;
    for (int i = 0; i < 6 && !distinct; ++i)
        for (int j = i + 1; j < 6 && !distinct; ++j) {
            const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
            if (!det2(p.x[a], p.x[b], q.x[a], q.x[b]).is_zero()) distinct = true;
        }
    if (!distinct) throw std::invalid_argument("degenerate line: points coincide");
    return {std::move(p), std::move(q)};
}

LineP5<CNum> make_line(PPoint<CNum> p, PPoint<CNum> q, double eps_zero) {
    Eigen::Matrix<CNum, 2, 6> m;
    m.row(0) = unit_row(p);
    m.row(1) = unit_row(q);
    Eigen::JacobiSVD<Eigen::Matrix<CNum, 2, 6>> svd(m);
    if (svd.singularValues()(1) < eps_zero)
        throw std::invalid_argument("degenerate line: points coincide");
    return {std::move(p), std::move(q)};
}

namespace {

template <class Q>
RadPoly restrict_to_line(const Q& quad, const LineP5<RadElem>& line) {
    PPoint<RadElem> dir;
    for (std::size_t j = 0; j < 6; ++j) dir.x[j] = line.q.x[j] - line.p.x[j];

    const RadElem c0 = quad_eval(quad, line.p);
    const RadElem c2 = quad_eval(quad, dir);
    // polarization without dividing by 2: Q(p + t v) = Q(p) + t B(p, v) + t^2 Q(v)
    RadElem c1;
    if constexpr (std::is_same_v<Q, DiagQuadric>) {
        for (std::size_t j = 0; j < 6; ++j)
            c1 += (2 * quad.d[j]) * (line.p.x[j] * dir.x[j]);
    } else {
        for (std::size_t j = 0; j < 6; ++j)
            c1 += (2 * quad.d[j]) * (line.p.x[j] * dir.x[j]);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                const Rat& c = quad.m[static_cast<std::size_t>(GenQuadric::mixed_index(i, j))];
                if (c == 0) continue;
                const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
                c1 += c * (line.p.x[a] * dir.x[b] + line.p.x[b] * dir.x[a]);
            }
    }
    return RadPoly({c0, c1, c2});
}

}  // namespace

RadPoly quad_on_line(const DiagQuadric& q, const LineP5<RadElem>& line) {
    return restrict_to_line(q, line);
}

RadPoly quad_on_line(const GenQuadric& q, const LineP5<RadElem>& line) {
    return restrict_to_line(q, line);
}

bool lines_meet(const LineP5<RadElem>& l1, const LineP5<RadElem>& l2) {
    return minor4_all_zero(stacked(l1, l2));
}

bool lines_meet(const LineP5<CNum>& l1, const LineP5<CNum>& l2, double eps_zero) {
    Eigen::Matrix<CNum, 4, 6> m;
    m.row(0) = unit_row(l1.p);
    m.row(1) = unit_row(l1.q);
    m.row(2) = unit_row(l2.p);
    m.row(3) = unit_row(l2.q);
    Eigen::JacobiSVD<Eigen::Matrix<CNum, 4, 6>> svd(m);
    return svd.singularValues()(3) < eps_zero;
}

bool lines_equal(const LineP5<RadElem>& l1, const LineP5<RadElem>& l2) {
    // coincide iff both points of l2 lie in span{p1, q1}: every 3x3 minor of
    // the 3x6 stack (p1, q1, r) vanishes for r = p2 and r = q2
    for (const PPoint<RadElem>* r : {&l2.p, &l2.q}) {
        std::array<int, 3> cols{};
        for (cols[0] = 0; cols[0] < 4; ++cols[0])
            for (cols[1] = cols[0] + 1; cols[1] < 5; ++cols[1])
                for (cols[2] = cols[1] + 1; cols[2] < 6; ++cols[2]) {
                    std::array<std::array<RadElem, 3>, 3> m;
                    for (std::size_t j = 0; j < 3; ++j) {
                        const auto c = static_cast<std::size_t>(cols[j]);
                        m[0][j] = l1.p.x[c];
                        m[1][j] = l1.q.x[c];
                        m[2][j] = r->x[c];
                    }
                    if (!det3(m).is_zero()) return false;
                }
    }
    return true;
}

PPoint<CNum> embed_point(const PPoint<RadElem>& p, const std::array<CNum, 6>& roots) {
    PPoint<CNum> out;
    for (std::size_t j = 0; j < 6; ++j) out.x[j] = p.x[j].embed(roots);
    return out;
}

LineP5<CNum> embed_line(const LineP5<RadElem>& line, const std::array<CNum, 6>& roots) {
    return {embed_point(line.p, roots), embed_point(line.q, roots)};
}

}  // namespace hek
