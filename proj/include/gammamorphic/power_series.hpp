#ifndef GAMMAMORPHIC_POWER_SERIES_HPP
#define GAMMAMORPHIC_POWER_SERIES_HPP

// Truncated power series over complex coefficients.  The Malmsten-type
// integrands all suffer catastrophic cancellation as u -> 0+: their braces
// vanish to some known order while individual pieces blow up like u^-2.
// Each module builds the brace numerator as an exact series, cancels the
// leading zeros analytically, and evaluates the quotient near the origin.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gammamorphic/types.hpp"

namespace gammamorphic {

class pseries {
public:
    explicit pseries(std::size_t order) : c_(order + 1, cplx(0.0)) {}

    static pseries constant(cplx v, std::size_t order) {
        pseries p(order);
        p.c_[0] = v;
        return p;
    }

    // e^{a u}
    static pseries exponential(cplx a, std::size_t order) {
        pseries p(order);
        cplx t = 1.0;
        p.c_[0] = t;
        for (std::size_t k = 1; k <= order; ++k) {
            t *= a / static_cast<double>(k);
            p.c_[k] = t;
        }
        return p;
    }

    std::size_t order() const { return c_.size() - 1; }
    cplx& operator[](std::size_t k) { return c_[k]; }
    cplx operator[](std::size_t k) const { return c_[k]; }

    pseries& operator+=(const pseries& o) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    pseries& operator-=(const pseries& o) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    pseries& operator*=(cplx v) {
        for (auto& x : c_) x *= v;
        return *this;
    }

    friend pseries operator*(const pseries& a, const pseries& b) {
        pseries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == cplx(0.0)) continue;
            for (std::size_t j = 0; i + j < r.c_.size() && j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    // Divide by u^m.  The dropped leading coefficients must already be zero
    // analytically; their floating-point residue is returned so callers
    // (and tests) can assert the cancellation really happened.
    double shift_down(std::size_t m) {
        const std::size_t n = c_.size();
        double residue = 0.0;
        for (std::size_t k = 0; k < m && k < n; ++k)
            residue = std::max(residue, std::abs(c_[k]));
        c_.erase(c_.begin(),
                 c_.begin() + static_cast<std::ptrdiff_t>(std::min(m, n)));
        c_.resize(n, cplx(0.0));
        return residue;
    }

    // Long division; requires den[0] != 0.  Result truncated at this order.
    friend pseries operator/(const pseries& num, const pseries& den) {
        pseries q(num.order());
        std::vector<cplx> rem(num.c_);
        for (std::size_t k = 0; k < q.c_.size(); ++k) {
            const cplx qk = rem[k] / den.c_[0];
            q.c_[k] = qk;
            for (std::size_t j = 0; k + j < rem.size() && j < den.c_.size(); ++j)
                rem[k + j] -= qk * den.c_[j];
        }
        return q;
    }

    cplx eval(double u) const {
        cplx acc = 0.0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * u + c_[k];
        return acc;
    }

    // Magnitude of the last retained term at |u|; crude truncation check.
    double last_term_at(double u) const {
        return std::abs(c_.back()) * std::pow(u, static_cast<double>(order()));
    }

private:
    std::vector<cplx> c_;
};

} // namespace gammamorphic

#endif
