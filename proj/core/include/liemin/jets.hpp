#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "liemin/errors.hpp"

namespace liemin {

/// Truncated bivariate Taylor expansion of a scalar field in (u, v).
///
/// Coefficients are stored Taylor-normalized, c(i,j) = d^{i+j}f/du^i dv^j / (i! j!),
/// in graded-lexicographic order for all i+j <= order. Multiplication is then a
/// plain truncated convolution and partial() rescales on read.
///
/// Taking a u- or v-derivative of a truncated jet loses the top total degree:
/// the returned jet keeps the same storage order with zeros in the top slots and
/// a decremented valid_order(). valid_order() propagates through arithmetic
/// (min over operands) so reads of unreliable coefficients can be rejected.
/// Jets are immutable values; every operation is pure.
class Jet2 {
  public:
    static constexpr int kDefaultOrder = 4;
    static constexpr int kMinOrder = 4; // k_{i,uv} needs two derivative orders twice

    enum class Seed { Constant, VarU, VarV };

    Jet2() : Jet2(kDefaultOrder) {}

    explicit Jet2(int order)
        : order_(order), valid_(order), c_(static_cast<std::size_t>(count(order)), 0.0) {
        if (order < kMinOrder)
            throw DomainError("Jet2: order must be >= 4, got " + std::to_string(order));
    }

    static Jet2 seed(double value, Seed which, int order = kDefaultOrder) {
        Jet2 j(order);
        j.c_[0] = value;
        if (which == Seed::VarU)
            j.c_[index(1, 0)] = 1.0;
        else if (which == Seed::VarV)
            j.c_[index(0, 1)] = 1.0;
        return j;
    }

    static Jet2 constant(double value, int order = kDefaultOrder) {
        return seed(value, Seed::Constant, order);
    }
    static Jet2 var_u(double value, int order = kDefaultOrder) {
        return seed(value, Seed::VarU, order);
    }
    static Jet2 var_v(double value, int order = kDefaultOrder) {
        return seed(value, Seed::VarV, order);
    }

    int order() const { return order_; }
    int valid_order() const { return valid_; }
    double value() const { return c_[0]; }

    /// Taylor-normalized coefficient (i,j).
    double coeff(int i, int j) const {
        check_index(i, j);
        return c_[index(i, j)];
    }

    /// Mixed partial derivative d^{i+j}f / du^i dv^j, rescaled by i!*j!.
    double partial(int i, int j) const {
        check_index(i, j);
        if (i + j > valid_)
            throw DomainError("Jet2::partial: index beyond valid derivative order (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
        return factorial(i) * factorial(j) * c_[index(i, j)];
    }

    /// Derivative in u. Top total degree becomes unreliable; valid_order drops by one.
    Jet2 du() const {
        Jet2 r(order_);
        for (int d = 0; d < order_; ++d)
            for (int j = 0; j <= d; ++j) {
                int i = d - j;
                r.c_[index(i, j)] = (i + 1) * c_[index(i + 1, j)];
            }
        r.valid_ = valid_ - 1;
        return r;
    }

    /// Derivative in v.
    Jet2 dv() const {
        Jet2 r(order_);
        for (int d = 0; d < order_; ++d)
            for (int j = 0; j <= d; ++j) {
                int i = d - j;
                r.c_[index(i, j)] = (j + 1) * c_[index(i, j + 1)];
            }
        r.valid_ = valid_ - 1;
        return r;
    }

    /// Antiderivative in v with integration constant: g with g_v = *this, g(0,0) = value_at_base.
    Jet2 antiderivative_v(double value_at_base) const {
        Jet2 r(order_);
        r.c_[0] = value_at_base;
        for (int d = 0; d < order_; ++d)
            for (int j = 0; j <= d; ++j) {
                int i = d - j;
                r.c_[index(i, j + 1)] = c_[index(i, j)] / (j + 1);
            }
        r.valid_ = std::min(order_, valid_ + 1);
        return r;
    }

    Jet2 operator-() const {
        Jet2 r(*this);
        for (double& x : r.c_)
            x = -x;
        return r;
    }

    Jet2& operator+=(const Jet2& b) {
        check_same_order(b);
        for (std::size_t k = 0; k < c_.size(); ++k)
            c_[k] += b.c_[k];
        valid_ = std::min(valid_, b.valid_);
        return *this;
    }
    Jet2& operator-=(const Jet2& b) {
        check_same_order(b);
        for (std::size_t k = 0; k < c_.size(); ++k)
            c_[k] -= b.c_[k];
        valid_ = std::min(valid_, b.valid_);
        return *this;
    }
    Jet2& operator+=(double s) {
        c_[0] += s;
        return *this;
    }
    Jet2& operator-=(double s) {
        c_[0] -= s;
        return *this;
    }
    Jet2& operator*=(double s) {
        for (double& x : c_)
            x *= s;
        return *this;
    }
    Jet2& operator/=(double s) {
        for (double& x : c_)
            x /= s;
        return *this;
    }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator+(Jet2 a, double s) { return a += s; }
    friend Jet2 operator+(double s, Jet2 a) { return a += s; }
    friend Jet2 operator-(Jet2 a, double s) { return a -= s; }
    friend Jet2 operator-(double s, const Jet2& a) { return (-a) += s; }
    friend Jet2 operator*(Jet2 a, double s) { return a *= s; }
    friend Jet2 operator*(double s, Jet2 a) { return a *= s; }
    friend Jet2 operator/(Jet2 a, double s) { return a /= s; }

    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        a.check_same_order(b);
        const int n = a.order_;
        Jet2 r(n);
        for (int da = 0; da <= n; ++da)
            for (int ja = 0; ja <= da; ++ja) {
                const double ca = a.c_[index(da - ja, ja)];
                if (ca == 0.0)
                    continue;
                const int ia = da - ja;
                for (int db = 0; db + da <= n; ++db)
                    for (int jb = 0; jb <= db; ++jb)
                        r.c_[index(ia + db - jb, ja + jb)] += ca * b.c_[index(db - jb, jb)];
            }
        r.valid_ = std::min(a.valid_, b.valid_);
        return r;
    }

    /// Division by recursive coefficient solving: c with c*b = a, degree by degree.
    friend Jet2 operator/(const Jet2& a, const Jet2& b) {
        a.check_same_order(b);
        const double b0 = b.c_[0];
        if (std::abs(b0) < kDivFloor)
            throw DivisionBySmallValue("Jet2: division by value " + std::to_string(b0));
        const int n = a.order_;
        Jet2 r(n);
        for (int d = 0; d <= n; ++d)
            for (int j = 0; j <= d; ++j) {
                const int i = d - j;
                double acc = a.c_[index(i, j)];
                // subtract sum over (p,q) <= (i,j), (p,q) != (0,0): b(p,q)*c(i-p,j-q)
                for (int p = 0; p <= i; ++p)
                    for (int q = 0; q <= j; ++q) {
                        if (p == 0 && q == 0)
                            continue;
                        acc -= b.c_[index(p, q)] * r.c_[index(i - p, j - q)];
                    }
                r.c_[index(i, j)] = acc / b0;
            }
        r.valid_ = std::min(a.valid_, b.valid_);
        return r;
    }
    friend Jet2 operator/(double s, const Jet2& b) {
        return Jet2::constant(s, b.order_) / b;
    }

    /// Square root by recursive coefficient solving.
    friend Jet2 sqrt(const Jet2& a) {
        if (a.c_[0] <= 0.0)
            throw DomainError("Jet2: sqrt of nonpositive value " + std::to_string(a.c_[0]));
        const int n = a.order_;
        Jet2 r(n);
        r.c_[0] = std::sqrt(a.c_[0]);
        const double inv2s0 = 1.0 / (2.0 * r.c_[0]);
        for (int d = 1; d <= n; ++d)
            for (int j = 0; j <= d; ++j) {
                const int i = d - j;
                double acc = a.c_[index(i, j)];
                // subtract cross terms s(p,q)*s(i-p,j-q) with both factors != s(i,j)
                for (int p = 0; p <= i; ++p)
                    for (int q = 0; q <= j; ++q) {
                        if ((p == 0 && q == 0) || (p == i && q == j))
                            continue;
                        acc -= r.c_[index(p, q)] * r.c_[index(i - p, j - q)];
                    }
                r.c_[index(i, j)] = acc * inv2s0;
            }
        r.valid_ = a.valid_;
        return r;
    }

    friend Jet2 exp(const Jet2& a) {
        const double f0 = std::exp(a.c_[0]);
        std::vector<double> series(a.order_ + 1);
        double fact = 1.0;
        for (int k = 0; k <= a.order_; ++k) {
            series[k] = f0 / fact;
            fact *= (k + 1);
        }
        return a.compose(series);
    }

    friend Jet2 log(const Jet2& a) {
        const double a0 = a.c_[0];
        if (a0 <= 0.0)
            throw DomainError("Jet2: log of nonpositive value " + std::to_string(a0));
        std::vector<double> series(a.order_ + 1);
        series[0] = std::log(a0);
        double p = 1.0;
        for (int k = 1; k <= a.order_; ++k) {
            p *= a0;
            series[k] = ((k % 2 == 1) ? 1.0 : -1.0) / (k * p);
        }
        return a.compose(series);
    }

    friend Jet2 sin(const Jet2& a) { return a.compose(trig_series(a.order_, std::sin(a.c_[0]), std::cos(a.c_[0]), true)); }
    friend Jet2 cos(const Jet2& a) { return a.compose(trig_series(a.order_, std::cos(a.c_[0]), -std::sin(a.c_[0]), true)); }
    friend Jet2 sinh(const Jet2& a) { return a.compose(trig_series(a.order_, std::sinh(a.c_[0]), std::cosh(a.c_[0]), false)); }
    friend Jet2 cosh(const Jet2& a) { return a.compose(trig_series(a.order_, std::cosh(a.c_[0]), std::sinh(a.c_[0]), false)); }

    /// a^r for real exponent r; requires a positive value part.
    friend Jet2 pow(const Jet2& a, double r) {
        const double a0 = a.c_[0];
        if (a0 <= 0.0)
            throw DomainError("Jet2: pow base must be positive, got " + std::to_string(a0));
        std::vector<double> series(a.order_ + 1);
        // series[k] = binom(r, k) * a0^(r-k)
        double coef = std::pow(a0, r);
        series[0] = coef;
        for (int k = 1; k <= a.order_; ++k) {
            coef *= (r - (k - 1)) / (k * a0);
            series[k] = coef;
        }
        return a.compose(series);
    }

  private:
    static constexpr double kDivFloor = 1e-150;

    static int count(int order) { return (order + 1) * (order + 2) / 2; }
    static int index(int i, int j) {
        const int d = i + j;
        return d * (d + 1) / 2 + j;
    }
    static double factorial(int n) {
        double f = 1.0;
        for (int k = 2; k <= n; ++k)
            f *= k;
        return f;
    }
    // Taylor series of sin/cos-type functions at a.value(): derivatives cycle with
    // period 4 (sign = -1) or 2 (sign = +1 for sinh/cosh).
    static std::vector<double> trig_series(int order, double f0, double f1, bool alternating) {
        std::vector<double> s(order + 1);
        double fact = 1.0;
        double d0 = f0, d1 = f1;
        for (int k = 0; k <= order; ++k) {
            s[k] = d0 / fact;
            fact *= (k + 1);
            const double next = alternating ? -d0 : d0;
            d0 = d1;
            d1 = next;
        }
        return s;
    }

    void check_index(int i, int j) const {
        if (i < 0 || j < 0 || i + j > order_)
            throw DomainError("Jet2: coefficient index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") beyond order " + std::to_string(order_));
    }
    void check_same_order(const Jet2& b) const {
        if (order_ != b.order_)
            throw DomainError("Jet2: mixed orders " + std::to_string(order_) + " and " +
                              std::to_string(b.order_));
    }

    /// Compose the univariate Taylor series `series` (coefficients f^(k)(a0)/k!)
    /// with the zero-constant part of this jet, by Horner evaluation.
    Jet2 compose(const std::vector<double>& series) const {
        Jet2 p(*this);
        p.c_[0] = 0.0;
        Jet2 r = Jet2::constant(series.back(), order_);
        for (int k = static_cast<int>(series.size()) - 2; k >= 0; --k) {
            r = r * p;
            r.c_[0] += series[static_cast<std::size_t>(k)];
        }
        r.valid_ = valid_;
        return r;
    }

    int order_;
    int valid_;
    std::vector<double> c_;
};

} // namespace liemin
