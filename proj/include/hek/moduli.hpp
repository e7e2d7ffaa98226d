#pragma once

#include <optional>
#include <vector>

#include "hek/rational.hpp"

namespace hek {

/** Point of P^1(Q): a finite rational value or the point at infinity. */
class P1Point {
public:
    P1Point() = default;  // 0
    static P1Point finite(const Rat& v);
    static P1Point infinity();
    /** Projective pair (u : v); throws if both are zero. */
    static P1Point from_pair(const Rat& u, const Rat& v);

    bool is_infinity() const { return infinite_; }
    /** Finite value; throws std::domain_error at infinity. */
    const Rat& value() const;

    /** Total order used everywhere: infinity first, then finite values ascending. */
    friend bool operator<(const P1Point& a, const P1Point& b);
    friend bool operator==(const P1Point& a, const P1Point& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }

private:
    Rat v_ = 0;
    bool infinite_ = false;
};

std::string p1_str(const P1Point& p);

/**
 * Fractional linear map t -> (a t + b) / (c t + d) with ad - bc != 0,
 * acting on P^1(Q).  Kept in a normalized integral form (entries coprime
 * integers, first nonzero entry positive) so equal projective maps compare
 * equal and serialize identically.
 */
class MobiusMap {
public:
    MobiusMap() = default;  // identity
    MobiusMap(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

    P1Point operator()(const P1Point& p) const;
    /** Projective inverse (the adjugate; no division needed). */
    MobiusMap inverse() const;
    /** Composition: (this o inner)(t) = this(inner(t)). */
    MobiusMap after(const MobiusMap& inner) const;
    bool is_identity() const;

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }
    const Rat& d() const { return d_; }

    friend bool operator==(const MobiusMap& x, const MobiusMap& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

private:
    void normalize();
    Rat a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

/** The unique Mobius map with 0 -> p, 1 -> q, infinity -> r (p, q, r distinct). */
MobiusMap mobius_through(const P1Point& p, const P1Point& q, const P1Point& r);

/** Finite set of at least three points of P^1(Q), kept sorted. */
class BranchSet {
public:
    explicit BranchSet(std::vector<P1Point> points);

    const std::vector<P1Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const P1Point& p) const;

    friend bool operator==(const BranchSet& a, const BranchSet& b) {
        return a.points_ == b.points_;
    }

private:
    std::vector<P1Point> points_;
};

BranchSet apply(const MobiusMap& m, const BranchSet& s);

/**
 * Decide whether some Mobius map carries lhs onto rhs and return the first
 * witness found.  The search fixes an anchor triple of lhs ((0, 1, inf)
 * when all three are present, otherwise the first three points in sorted
 * order) and tries every ordered triple of rhs as its image, in
 * lexicographic index order over the sorted rhs, so the returned witness
 * is deterministic.  Total frames: m(m-1)(m-2) for sets of size m.
 */
std::optional<MobiusMap> is_isomorphic(const BranchSet& lhs, const BranchSet& rhs);

/**
 * Complete Mobius invariant: the lexicographically smallest sorted image
 * of the remaining points over all frames sending an ordered triple of the
 * set to (0, 1, infinity).  Two branch sets are Mobius equivalent iff
 * their keys coincide.
 */
using CanonicalKey = std::vector<P1Point>;
CanonicalKey canonical_key(const BranchSet& s);

/**
 * Moduli pairing for odd type n: the branch set {0, 1, inf, lambda_1, ...,
 * lambda_{n-2}} is shared by a hyperelliptic curve of genus (n-1)/2 and a
 * type-n curve of genus 2^{n-2}(n-3)+1, so one canonical key classifies
 * both.  Throws std::invalid_argument for even n or invalid lambdas.
 */
struct ModuliRecord {
    int n = 0;
    BranchSet branch;
    CanonicalKey key;
    long long hyper_genus = 0;
    long long curve_genus = 0;
};

ModuliRecord moduli_map_f(const std::vector<Rat>& lambdas);

}  // namespace hek
