#include "triwalk/quadrature.hpp"

#include "triwalk/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace triwalk {

namespace {

constexpr int kOrder = 16;

struct GaussRule {
    double node[kOrder];
    double weight[kOrder];
};

// Legendre roots by Newton iteration on P_16.
GaussRule make_rule() {
    GaussRule r;
    const int n = kOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.node[i] = x;
        r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& rule() {
    static const GaussRule r = make_rule();
    return r;
}

template <class V, class F>
V tensor_pass(const F& f, double ax, double bx, double ay, double by, int panels) {
    const GaussRule& g = rule();
    double hx = (bx - ax) / panels, hy = (by - ay) / panels;
    V total{};
    for (int px = 0; px < panels; ++px) {
        double cx = ax + px * hx;
        for (int py = 0; py < panels; ++py) {
            double cy = ay + py * hy;
            V acc{};
            for (int i = 0; i < kOrder; ++i) {
                double x = cx + hx * 0.5 * (g.node[i] + 1.0);
                for (int j = 0; j < kOrder; ++j) {
                    double y = cy + hy * 0.5 * (g.node[j] + 1.0);
                    acc += f(x, y) * (g.weight[i] * g.weight[j]);
                }
            }
            total += acc * (hx * hy * 0.25);
        }
    }
    return total;
}

template <class V, class F>
V refine(const F& f, double ax, double bx, double ay, double by, double tol) {
    V prev = tensor_pass<V>(f, ax, bx, ay, by, 1);
    for (int panels = 2; panels <= 64; panels *= 2) {
        V cur = tensor_pass<V>(f, ax, bx, ay, by, panels);
        if (std::abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw QuadratureFailure("2-D quadrature did not converge within the panel budget");
}

}  // namespace

double integrate2d(const std::function<double(double, double)>& f, double ax, double bx,
                   double ay, double by, double tol) {
    return refine<double>(f, ax, bx, ay, by, tol);
}

std::complex<double> integrate2d_complex(const std::function<std::complex<double>(double, double)>& f,
                                         double ax, double bx, double ay, double by, double tol) {
    return refine<std::complex<double>>(f, ax, bx, ay, by, tol);
}

}  // namespace triwalk
