#include "hek/moduli.hpp"

#include <algorithm>

#include "hek/hecurve.hpp"

namespace hek {

P1Point P1Point::finite(const Rat& v) {
    P1Point p;
    p.v_ = v;
    return p;
}

P1Point P1Point::infinity() {
    P1Point p;
    p.infinite_ = true;
    return p;
}

P1Point P1Point::from_pair(const Rat& u, const Rat& v) {
    if (v == 0) {
        if (u == 0) throw std::invalid_argument("(0 : 0) is not a point of P^1");
        return infinity();
    }
    return finite(u / v);
}

const Rat& P1Point::value() const {
    if (infinite_) throw std::domain_error("point at infinity has no finite value");
    return v_;
}

bool operator<(const P1Point& a, const P1Point& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_;
    if (a.infinite_) return false;
    return a.v_ < b.v_;
}

std::string p1_str(const P1Point& p) { return p.is_infinity() ? "inf" : rat_str(p.value()); }

MobiusMap::MobiusMap(const Rat& a, const Rat& b, const Rat& c, const Rat& d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (a_ * d_ - b_ * c_ == 0) throw std::invalid_argument("singular Mobius map");
    normalize();
}

void MobiusMap::normalize() {
    Int l = 1;
    for (const Rat* e : {&a_, &b_, &c_, &d_}) l = lcm(l, denominator(*e));
    std::array<Int, 4> n;
    const std::array<Rat*, 4> entries{&a_, &b_, &c_, &d_};
    for (std::size_t i = 0; i < 4; ++i) n[i] = numerator(*entries[i] * Rat(l));
    Int g = 0;
    for (const Int& v : n) g = gcd(g, v);
    Int sign = 1;
    for (const Int& v : n)
        if (v != 0) {
            if (v < 0) sign = -1;
            break;
        }
    g *= sign;
    for (std::size_t i = 0; i < 4; ++i) *entries[i] = Rat(n[i] / g);
}

P1Point MobiusMap::operator()(const P1Point& p) const {
    if (p.is_infinity()) return P1Point::from_pair(a_, c_);
    const Rat& t = p.value();
    return P1Point::from_pair(a_ * t + b_, c_ * t + d_);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

MobiusMap MobiusMap::after(const MobiusMap& m) const {
    return MobiusMap(a_ * m.a_ + b_ * m.c_, a_ * m.b_ + b_ * m.d_,
                     c_ * m.a_ + d_ * m.c_, c_ * m.b_ + d_ * m.d_);
}

bool MobiusMap::is_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

MobiusMap mobius_through(const P1Point& p, const P1Point& q, const P1Point& r) {
    if (p == q || p == r || q == r)
        throw std::invalid_argument("mobius_through needs three distinct points");
    auto pair_of = [](const P1Point& x) -> std::array<Rat, 2> {
        if (x.is_infinity()) return {Rat(1), Rat(0)};
        return {x.value(), Rat(1)};
    };
    const auto P = pair_of(p), Q = pair_of(q), R = pair_of(r);
    // columns of the matrix are kappa1 * R and kappa0 * P with [R P] kappa = Q
    const Rat det = R[0] * P[1] - R[1] * P[0];
    const Rat kappa1 = (Q[0] * P[1] - P[0] * Q[1]) / det;
    const Rat kappa0 = (R[0] * Q[1] - Q[0] * R[1]) / det;
    return MobiusMap(kappa1 * R[0], kappa0 * P[0], kappa1 * R[1], kappa0 * P[1]);
}

BranchSet::BranchSet(std::vector<P1Point> points) : points_(std::move(points)) {
    if (points_.size() < 3)
        throw std::invalid_argument("branch set needs at least three points");
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw std::invalid_argument("branch set points must be distinct");
}

bool BranchSet::contains(const P1Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

BranchSet apply(const MobiusMap& m, const BranchSet& s) {
    std::vector<P1Point> out;
    out.reserve(s.size());
    for (const P1Point& p : s.points()) out.push_back(m(p));
    return BranchSet(std::move(out));
}

std::optional<MobiusMap> is_isomorphic(const BranchSet& lhs, const BranchSet& rhs) {
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("branch sets of different size");

    const P1Point zero = P1Point::finite(Rat(0));
    const P1Point one = P1Point::finite(Rat(1));
    const P1Point inf = P1Point::infinity();

    MobiusMap to_frame;  // carries the anchor triple of lhs to (0, 1, inf)
    if (lhs.contains(zero) && lhs.contains(one) && lhs.contains(inf)) {
        to_frame = MobiusMap();
    } else {
        const auto& p = lhs.points();
        to_frame = mobius_through(p[0], p[1], p[2]).inverse();
    }

    const auto& t = rhs.points();
    const std::size_t m = t.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                if (i == j || i == k || j == k) continue;
                const MobiusMap cand = mobius_through(t[i], t[j], t[k]).after(to_frame);
                if (apply(cand, lhs) == rhs) return cand;
            }
    return std::nullopt;
}

CanonicalKey canonical_key(const BranchSet& s) {
    const auto& p = s.points();
    const std::size_t m = p.size();
    CanonicalKey best;
    bool have = false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                if (i == j || i == k || j == k) continue;
                const MobiusMap frame = mobius_through(p[i], p[j], p[k]).inverse();
                CanonicalKey key;
                key.reserve(m - 3);
                for (std::size_t x = 0; x < m; ++x) {
                    if (x == i || x == j || x == k) continue;
                    key.push_back(frame(p[x]));
                }
                std::sort(key.begin(), key.end());
                if (!have || key < best) {
                    best = std::move(key);
                    have = true;
                }
            }
    return best;
}

ModuliRecord moduli_map_f(const std::vector<Rat>& lambdas) {
    const int n = static_cast<int>(lambdas.size()) + 2;
    if (n % 2 == 0)
        throw std::invalid_argument("moduli pairing needs odd type n (got n = " +
                                    std::to_string(n) + ")");
    std::vector<P1Point> pts{P1Point::finite(Rat(0)), P1Point::finite(Rat(1)),
                             P1Point::infinity()};
    for (const Rat& l : lambdas) {
        if (l == 0 || l == 1)
            throw std::invalid_argument("lambda values must avoid 0 and 1");
        pts.push_back(P1Point::finite(l));
    }
    BranchSet branch(std::move(pts));  // ctor rejects duplicate lambdas
    CanonicalKey key = canonical_key(branch);
    const TypeInvariants inv = invariants_of_type(n);
    return ModuliRecord{n, std::move(branch), std::move(key), (n - 1) / 2, inv.genus};
}

}  // namespace hek
