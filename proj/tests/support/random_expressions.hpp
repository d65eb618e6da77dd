#pragma once

// Seeded random expression trees over the jet primitive set, evaluable both as
// plain doubles (for the finite-difference oracle) and as jets. Generation
// rejects trees that leave the safe domain near the sample point (division by
// small values, sqrt/log near zero, runaway magnitudes), so every accepted
// sample is well-scaled for differencing.

#include <cmath>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "liemin/jets.hpp"
#include "liemin/numerics.hpp"

namespace liemin::testing {

struct ExprNode {
    enum class Op {
        LeafU,
        LeafV,
        LeafConst,
        Add,
        Sub,
        Mul,
        Div,
        Sqrt,
        Sin,
        Cos,
        Sinh,
        Cosh,
        Exp,
        Log,
        Pow
    };
    Op op;
    int a = -1, b = -1;
    double constant = 0.0;
};

struct Expression {
    std::vector<ExprNode> nodes; // last node is the root
    double u0 = 0.0, v0 = 0.0;

    template <typename T>
    T eval(const T& u, const T& v) const {
        std::vector<T> vals;
        vals.reserve(nodes.size());
        using std::cos;
        using std::cosh;
        using std::exp;
        using std::log;
        using std::pow;
        using std::sin;
        using std::sinh;
        using std::sqrt;
        for (const ExprNode& n : nodes) {
            switch (n.op) {
            case ExprNode::Op::LeafU: vals.push_back(u); break;
            case ExprNode::Op::LeafV: vals.push_back(v); break;
            case ExprNode::Op::LeafConst:
                if constexpr (std::is_same_v<T, double>)
                    vals.push_back(n.constant);
                else
                    vals.push_back(Jet2::constant(n.constant, u.order()));
                break;
            case ExprNode::Op::Add: vals.push_back(vals[n.a] + vals[n.b]); break;
            case ExprNode::Op::Sub: vals.push_back(vals[n.a] - vals[n.b]); break;
            case ExprNode::Op::Mul: vals.push_back(vals[n.a] * vals[n.b]); break;
            case ExprNode::Op::Div: vals.push_back(vals[n.a] / vals[n.b]); break;
            case ExprNode::Op::Sqrt: vals.push_back(sqrt(vals[n.a])); break;
            case ExprNode::Op::Sin: vals.push_back(sin(vals[n.a])); break;
            case ExprNode::Op::Cos: vals.push_back(cos(vals[n.a])); break;
            case ExprNode::Op::Sinh: vals.push_back(sinh(vals[n.a])); break;
            case ExprNode::Op::Cosh: vals.push_back(cosh(vals[n.a])); break;
            case ExprNode::Op::Exp: vals.push_back(exp(vals[n.a])); break;
            case ExprNode::Op::Log: vals.push_back(log(vals[n.a])); break;
            case ExprNode::Op::Pow: vals.push_back(pow(vals[n.a], n.constant)); break;
            }
        }
        return vals.back();
    }

    double eval_plain(double u, double v) const { return eval<double>(u, v); }
    Jet2 eval_jets(int order = Jet2::kDefaultOrder) const {
        return eval<Jet2>(Jet2::var_u(u0, order), Jet2::var_v(v0, order));
    }
};

class ExpressionGen {
  public:
    explicit ExpressionGen(std::uint64_t seed) : rng_(seed) {}

    /// Next well-scaled random expression (rejection sampling).
    Expression next() {
        for (;;) {
            Expression e = candidate();
            if (safe(e))
                return e;
        }
    }

  private:
    Expression candidate() {
        Expression e;
        e.u0 = rng_.uniform(-1.0, 1.0);
        e.v0 = rng_.uniform(-1.0, 1.0);
        // Leaves first, then a few random combining/unary nodes.
        e.nodes.push_back({ExprNode::Op::LeafU});
        e.nodes.push_back({ExprNode::Op::LeafV});
        e.nodes.push_back({ExprNode::Op::LeafConst, -1, -1, rng_.uniform(0.5, 2.5)});
        const int extra = rng_.uniform_int(3, 7);
        for (int k = 0; k < extra; ++k) {
            const int m = static_cast<int>(e.nodes.size());
            const int pick = rng_.uniform_int(0, 13);
            ExprNode n;
            switch (pick) {
            case 0: n = {ExprNode::Op::Add, rng_.uniform_int(0, m - 1), rng_.uniform_int(0, m - 1)}; break;
            case 1: n = {ExprNode::Op::Sub, rng_.uniform_int(0, m - 1), rng_.uniform_int(0, m - 1)}; break;
            case 2:
            case 3: n = {ExprNode::Op::Mul, rng_.uniform_int(0, m - 1), rng_.uniform_int(0, m - 1)}; break;
            case 4: n = {ExprNode::Op::Div, rng_.uniform_int(0, m - 1), rng_.uniform_int(0, m - 1)}; break;
            case 5: n = {ExprNode::Op::Sqrt, shifted(e, rng_.uniform_int(0, m - 1))}; break;
            case 6: n = {ExprNode::Op::Sin, rng_.uniform_int(0, m - 1)}; break;
            case 7: n = {ExprNode::Op::Cos, rng_.uniform_int(0, m - 1)}; break;
            case 8: n = {ExprNode::Op::Sinh, rng_.uniform_int(0, m - 1)}; break;
            case 9: n = {ExprNode::Op::Cosh, rng_.uniform_int(0, m - 1)}; break;
            case 10: n = {ExprNode::Op::Exp, rng_.uniform_int(0, m - 1)}; break;
            case 11: n = {ExprNode::Op::Log, shifted(e, rng_.uniform_int(0, m - 1))}; break;
            case 12:
                n = {ExprNode::Op::Pow, shifted(e, rng_.uniform_int(0, m - 1)), -1,
                     rng_.uniform(0.5, 2.5)};
                break;
            default: n = {ExprNode::Op::Add, rng_.uniform_int(0, m - 1), 2}; break;
            }
            e.nodes.push_back(n);
        }
        return e;
    }

    // sqrt/log/pow argument: |arg| + offset, guaranteed positive at the point.
    int shifted(Expression& e, int arg) {
        const int m = static_cast<int>(e.nodes.size());
        e.nodes.push_back({ExprNode::Op::Mul, arg, arg});
        e.nodes.push_back({ExprNode::Op::LeafConst, -1, -1, rng_.uniform(0.5, 1.5)});
        e.nodes.push_back({ExprNode::Op::Add, m, m + 1});
        return m + 2;
    }

    bool safe(const Expression& e) {
        // Domain margins around the sample point (FD stencils reach +-2h).
        const double h = 0.05;
        for (int du = -2; du <= 2; ++du)
            for (int dv = -2; dv <= 2; ++dv)
                if (!safe_at(e, e.u0 + du * h, e.v0 + dv * h))
                    return false;
        // Keep derivative magnitudes sane so relative FD comparison is
        // meaningful: bound the Taylor-normalized coefficients through order 8,
        // which controls the truncation terms the difference stencils see.
        const Jet2 j = e.eval_jets(8);
        for (int i = 0; i <= 8; ++i)
            for (int jj = 0; i + jj <= 8; ++jj)
                if (!std::isfinite(j.coeff(i, jj)) || std::abs(j.coeff(i, jj)) > 5.0)
                    return false;
        return true;
    }

    bool safe_at(const Expression& e, double u, double v) {
        std::vector<double> vals;
        vals.reserve(e.nodes.size());
        for (const ExprNode& n : e.nodes) {
            double x = 0.0;
            switch (n.op) {
            case ExprNode::Op::LeafU: x = u; break;
            case ExprNode::Op::LeafV: x = v; break;
            case ExprNode::Op::LeafConst: x = n.constant; break;
            case ExprNode::Op::Add: x = vals[n.a] + vals[n.b]; break;
            case ExprNode::Op::Sub: x = vals[n.a] - vals[n.b]; break;
            case ExprNode::Op::Mul: x = vals[n.a] * vals[n.b]; break;
            case ExprNode::Op::Div:
                if (std::abs(vals[n.b]) < 0.3)
                    return false;
                x = vals[n.a] / vals[n.b];
                break;
            case ExprNode::Op::Sqrt:
                if (vals[n.a] < 0.2)
                    return false;
                x = std::sqrt(vals[n.a]);
                break;
            case ExprNode::Op::Sin: x = std::sin(vals[n.a]); break;
            case ExprNode::Op::Cos: x = std::cos(vals[n.a]); break;
            case ExprNode::Op::Sinh:
                if (std::abs(vals[n.a]) > 3.0)
                    return false;
                x = std::sinh(vals[n.a]);
                break;
            case ExprNode::Op::Cosh:
                if (std::abs(vals[n.a]) > 3.0)
                    return false;
                x = std::cosh(vals[n.a]);
                break;
            case ExprNode::Op::Exp:
                if (vals[n.a] > 3.0)
                    return false;
                x = std::exp(vals[n.a]);
                break;
            case ExprNode::Op::Log:
                if (vals[n.a] < 0.2)
                    return false;
                x = std::log(vals[n.a]);
                break;
            case ExprNode::Op::Pow:
                if (vals[n.a] < 0.2)
                    return false;
                x = std::pow(vals[n.a], n.constant);
                break;
            }
            if (!std::isfinite(x) || std::abs(x) > 20.0)
                return false;
            vals.push_back(x);
        }
        return true;
    }

    Rng rng_;
};

} // namespace liemin::testing
