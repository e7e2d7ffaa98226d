#include "hek/radical.hpp"

#include <bit>
#include <cmath>

namespace hek {

namespace {

bool subset_products_independent(const std::array<Rat, 6>& b) {
    for (unsigned mask = 1; mask < 64; ++mask) {
        Rat prod = 1;
        for (int j = 0; j < 6; ++j)
            if (mask >> j & 1) prod *= b[static_cast<std::size_t>(j)];
        if (is_square(prod)) return false;
    }
    return true;
}

}  // namespace

RadBasis::RadBasis(const std::array<Rat, 6>& squares) : squares_(squares) {
    for (const Rat& b : squares_)
        if (b == 0) throw std::invalid_argument("radical basis entry b_j = 0");
    independent_ = subset_products_independent(squares_);
}

std::array<CNum, 6> RadBasis::principal_roots() const {
    std::array<CNum, 6> roots;
    for (std::size_t j = 0; j < 6; ++j) roots[j] = std::sqrt(to_cnum(squares_[j]));
    return roots;
}

RadBasisPtr make_rad_basis(const std::array<Rat, 6>& squares) {
    return std::make_shared<const RadBasis>(squares);
}

RadElem::RadElem(const Rat& c) {
    if (c != 0) coeffs_.emplace(0u, c);
}

RadElem::RadElem(long c) : RadElem(Rat(c)) {}

RadElem RadElem::monomial(RadBasisPtr basis, unsigned mask, const Rat& coeff) {
    if (mask >= 64) throw std::invalid_argument("radical monomial mask out of range");
    if (mask != 0 && !basis)
        throw std::invalid_argument("radical monomial with roots requires a basis");
    RadElem out;
    if (coeff != 0) {
        out.coeffs_.emplace(mask, coeff);
        if (mask != 0) out.basis_ = std::move(basis);
    }
    return out;
}

RadElem RadElem::root(RadBasisPtr basis, int j) {
    if (j < 0 || j > 5) throw std::invalid_argument("root index out of range");
    return monomial(std::move(basis), 1u << j, Rat(1));
}

Rat RadElem::coeff(unsigned mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool RadElem::is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rat RadElem::rational_value() const {
    if (coeffs_.empty()) return Rat(0);
    if (!is_rational()) throw std::domain_error("element has nontrivial radical part");
    return coeffs_.begin()->second;
}

CNum RadElem::embed(const std::array<CNum, 6>& roots, double eps) const {
    if (basis_) {
        for (int j = 0; j < 6; ++j) {
            const double bj = to_double(basis_->square(j));
            const CNum sq = roots[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>(j)];
            if (std::abs(sq - CNum(bj, 0.0)) > eps * (1.0 + std::abs(bj)))
                throw std::invalid_argument("inconsistent root choice for radical basis");
        }
    }
    CNum acc(0.0, 0.0);
    for (const auto& [mask, c] : coeffs_) {
        CNum term = to_cnum(c);
        for (int j = 0; j < 6; ++j)
            if (mask >> j & 1) term *= roots[static_cast<std::size_t>(j)];
        acc += term;
    }
    return acc;
}

CNum RadElem::embed_principal() const {
    if (!basis_) return coeffs_.empty() ? CNum(0.0, 0.0) : to_cnum(coeffs_.begin()->second);
    return embed(basis_->principal_roots());
}

void RadElem::add_term(unsigned mask, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void RadElem::normalize() {
    if (is_rational()) basis_.reset();
}

RadBasisPtr RadElem::merged_basis(const RadElem& x, const RadElem& y) {
    if (x.basis_ && y.basis_) {
        if (x.basis_ == y.basis_ || *x.basis_ == *y.basis_) return x.basis_;
        throw std::invalid_argument("radical basis mismatch");
    }
    return x.basis_ ? x.basis_ : y.basis_;
}

RadElem& RadElem::operator+=(const RadElem& rhs) {
    basis_ = merged_basis(*this, rhs);
    for (const auto& [mask, c] : rhs.coeffs_) add_term(mask, c);
    normalize();
    return *this;
}

RadElem& RadElem::operator-=(const RadElem& rhs) {
    basis_ = merged_basis(*this, rhs);
    for (const auto& [mask, c] : rhs.coeffs_) add_term(mask, -c);
    normalize();
    return *this;
}

RadElem operator*(const RadElem& lhs, const RadElem& rhs) {
    RadElem out;
    out.basis_ = RadElem::merged_basis(lhs, rhs);
    for (const auto& [s, cs] : lhs.coeffs_)
        for (const auto& [t, ct] : rhs.coeffs_) {
            Rat c = cs * ct;
            if (const unsigned common = s & t) {
                for (int j = 0; j < 6; ++j)
                    if (common >> j & 1) c *= out.basis_->square(j);
            }
            out.add_term(s ^ t, c);
        }
    out.normalize();
    return out;
}

RadElem& RadElem::operator*=(const RadElem& rhs) { return *this = *this * rhs; }

RadElem RadElem::operator-() const {
    RadElem out = *this;
    for (auto& [mask, c] : out.coeffs_) c = -c;
    return out;
}

RadElem operator*(const Rat& c, const RadElem& x) {
    RadElem out;
    if (c == 0) return out;
    out = x;
    for (auto& [mask, v] : out.coeffs_) v *= c;
    return out;
}

bool operator==(const RadElem& x, const RadElem& y) {
    if (x.coeffs_ != y.coeffs_) return false;
    if (x.basis_ && y.basis_) return x.basis_ == y.basis_ || *x.basis_ == *y.basis_;
    return true;  // a missing basis only ever holds rational values
}

const RadElem RadPoly::zero_{};

RadPoly::RadPoly(std::vector<RadElem> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const RadElem& RadPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : zero_;
}

RadElem RadPoly::eval(const Rat& t) const {
    RadElem acc;
    Rat tk = 1;
    for (const RadElem& c : coeffs_) {
        acc += tk * c;
        tk *= t;
    }
    return acc;
}

}  // namespace hek
