#include "mirrorhodge/cyclotomic.hpp"

#include <sstream>
#include <utility>

namespace mhodge {

CycElem::CycElem(int r) : r_(r) {
    require_prime(r, "cyclotomic order");
    coords_.assign(static_cast<std::size_t>(r - 1), Int(0));
}

CycElem CycElem::integer(int r, Int value) {
    CycElem out(r);
    out.coords_[0] = std::move(value);
    return out;
}

CycElem CycElem::zeta_pow(int r, long long k) {
    CycElem out(r);
    int e = mod_norm(k, r);
    if (e < r - 1) {
        out.coords_[static_cast<std::size_t>(e)] = 1;
    } else {
        // zeta^{r-1} = -(1 + zeta + ... + zeta^{r-2})
        for (auto& c : out.coords_) c = -1;
    }
    return out;
}

bool CycElem::is_zero() const {
    for (const auto& c : coords_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CycElem::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) return false;
    }
    return true;
}

const Int& CycElem::rational_part() const {
    if (!is_rational()) {
        throw InternalCheckError("cyclotomic value is not a rational integer");
    }
    return coords_[0];
}

CycElem CycElem::from_folded(int r, std::vector<Int> acc) {
    CycElem out(r);
    const Int& top = acc[static_cast<std::size_t>(r - 1)];
    for (int i = 0; i < r - 1; ++i) {
        out.coords_[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)] - top;
    }
    return out;
}

void CycElem::require_same_ring(const CycElem& a, const CycElem& b) {
    if (a.r_ != b.r_) {
        std::ostringstream os;
        os << "incompatible cyclotomic rings: Z[zeta_" << a.r_ << "] vs Z[zeta_" << b.r_ << "]";
        throw ParameterError(os.str());
    }
}

CycElem operator+(const CycElem& a, const CycElem& b) {
    CycElem::require_same_ring(a, b);
    CycElem out(a.r_);
    for (std::size_t i = 0; i < out.coords_.size(); ++i) {
        out.coords_[i] = a.coords_[i] + b.coords_[i];
    }
    return out;
}

CycElem operator-(const CycElem& a, const CycElem& b) {
    CycElem::require_same_ring(a, b);
    CycElem out(a.r_);
    for (std::size_t i = 0; i < out.coords_.size(); ++i) {
        out.coords_[i] = a.coords_[i] - b.coords_[i];
    }
    return out;
}

CycElem CycElem::operator-() const {
    CycElem out(r_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = -coords_[i];
    return out;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    CycElem::require_same_ring(a, b);
    const int r = a.r_;
    std::vector<Int> acc(static_cast<std::size_t>(r), Int(0));
    for (int i = 0; i < r - 1; ++i) {
        if (a.coords_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < r - 1; ++j) {
            if (b.coords_[static_cast<std::size_t>(j)].is_zero()) continue;
            acc[static_cast<std::size_t>((i + j) % r)] +=
                a.coords_[static_cast<std::size_t>(i)] * b.coords_[static_cast<std::size_t>(j)];
        }
    }
    return CycElem::from_folded(r, std::move(acc));
}

bool operator==(const CycElem& a, const CycElem& b) {
    return a.r_ == b.r_ && a.coords_ == b.coords_;
}

CycElem CycElem::galois_conjugate(long long k) const {
    if (mod_norm(k, r_) == 0) {
        throw ParameterError("galois_conjugate exponent must be coprime to the prime order");
    }
    std::vector<Int> acc(static_cast<std::size_t>(r_), Int(0));
    for (int i = 0; i < r_ - 1; ++i) {
        acc[static_cast<std::size_t>(mod_norm(static_cast<long long>(i) * k, r_))] +=
            coords_[static_cast<std::size_t>(i)];
    }
    return from_folded(r_, std::move(acc));
}

CycBiPoly character_term_poly(int r, int j, int g) {
    require_prime(r, "rank");
    if (g < 1) throw ParameterError("genus must be >= 1");
    CycBiPoly base = CycBiPoly::monomial(CycElem::one(r), 0, 0);
    for (int i = 1; i < r; ++i) {
        CycElem w = CycElem::zeta_pow(r, static_cast<long long>(i) * j);
        CycBiPoly fu;
        fu.add_term(0, 0, CycElem::one(r));
        fu.add_term(1, 0, -w);
        CycBiPoly fv;
        fv.add_term(0, 0, CycElem::one(r));
        fv.add_term(0, 1, -w);
        base = base * fu * fv;
    }
    return pow(base, static_cast<unsigned>(g - 1), r);
}

BiPoly rou_filter(const std::function<CycBiPoly(int)>& evaluate, long long twist, int r) {
    require_prime(r, "rou_filter order");
    const int t = mod_norm(twist, r);
    CycBiPoly sum;
    for (int j = 0; j < r; ++j) {
        CycElem w = CycElem::zeta_pow(r, -static_cast<long long>(j) * t);
        sum = sum + evaluate(j).scaled(w);
    }
    BiPoly out;
    const Int divisor(r);
    for (const auto& [e, c] : sum.terms()) {
        if (!c.is_rational()) {
            std::ostringstream os;
            os << "rou_filter: coefficient of u^" << e.first << " v^" << e.second
               << " is not a rational integer";
            throw InternalCheckError(os.str());
        }
        Int q, rem;
        boost::multiprecision::divide_qr(c.rational_part(), divisor, q, rem);
        if (!rem.is_zero()) {
            std::ostringstream os;
            os << "rou_filter: coefficient " << c.rational_part() << " of u^" << e.first
               << " v^" << e.second << " is not divisible by " << r;
            throw InternalCheckError(os.str());
        }
        out.add_term(e.first, e.second, q);
    }
    return out;
}

} // namespace mhodge
