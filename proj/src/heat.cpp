#include "triwalk/heat.hpp"

#include "triwalk/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace triwalk {

TestFunction TestFunction::gaussian(double sigma, double amplitude) {
    TestFunction f;
    f.kind_ = Kind::Gaussian;
    f.scale_ = sigma;
    f.amplitude_ = amplitude;
    f.support_ = 8.5 * sigma;
    return f;
}

TestFunction TestFunction::bump(double R, double amplitude) {
    TestFunction f;
    f.kind_ = Kind::Bump;
    f.scale_ = R;
    f.amplitude_ = amplitude;
    f.support_ = R;
    return f;
}

TestFunction TestFunction::poly_bump(double R, double amplitude) {
    TestFunction f;
    f.kind_ = Kind::PolyBump;
    f.scale_ = R;
    f.amplitude_ = amplitude;
    f.support_ = R;
    return f;
}

namespace {

// Bump profile g(s) = exp(1 - R^2/(R^2 - s)) with s = r^2, plus derivatives.
struct BumpEval {
    double g = 0.0, g1 = 0.0, g2 = 0.0;  // value, dg/ds, d2g/ds2
};

BumpEval bump_profile(double R, double s) {
    BumpEval out;
    double R2 = R * R;
    if (s >= R2) return out;
    double d = R2 - s;
    double w = R2 / d;
    double w1 = R2 / (d * d);       // dw/ds
    double w2 = 2.0 * R2 / (d * d * d);
    out.g = std::exp(1.0 - w);
    out.g1 = -out.g * w1;
    out.g2 = out.g * (w1 * w1 - w2);
    return out;
}

}  // namespace

double TestFunction::operator()(Vec2 z) const {
    double s = z.norm2();
    switch (kind_) {
        case Kind::Gaussian:
            if (s > support_ * support_) return 0.0;
            return amplitude_ * std::exp(-s / (2.0 * scale_ * scale_));
        case Kind::Bump:
            return amplitude_ * bump_profile(scale_, s).g;
        case Kind::PolyBump:
            return amplitude_ * z.x * bump_profile(scale_, s).g;
    }
    return 0.0;
}

double TestFunction::laplacian(Vec2 z) const {
    double s = z.norm2();
    switch (kind_) {
        case Kind::Gaussian: {
            if (s > support_ * support_) return 0.0;
            double s2 = scale_ * scale_;
            return amplitude_ * std::exp(-s / (2.0 * s2)) * (s / (s2 * s2) - 2.0 / s2);
        }
        case Kind::Bump: {
            // f = g(s), s = |z|^2: Lap f = 4 g'(s) + 4 s g''(s).
            BumpEval b = bump_profile(scale_, s);
            return amplitude_ * (4.0 * b.g1 + 4.0 * s * b.g2);
        }
        case Kind::PolyBump: {
            // f = x g(s): Lap f = x Lap g + 2 d/dx g = x(4g' + 4sg'') + 4 x g'.
            BumpEval b = bump_profile(scale_, s);
            return amplitude_ * z.x * (4.0 * b.g1 + 4.0 * s * b.g2 + 4.0 * b.g1);
        }
    }
    return 0.0;
}

double TestFunction::sup_norm() const {
    // All three families peak with |f| = amplitude (bump profile maxes at 1;
    // x * bump maxes below amplitude * R, scan once).
    if (kind_ != Kind::PolyBump) return std::abs(amplitude_);
    double best = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        double x = scale_ * i / 1000.0;
        best = std::max(best, std::abs(x * bump_profile(scale_, x * x).g));
    }
    return std::abs(amplitude_) * best / 1.0;
}

double discrete_laplacian(const StepDistribution& p, const GridFunction& f, LatticePoint x) {
    double fx = f.at(x);
    double s = 0.0;
    for (const Step& st : steps(p))
        s += to_double(st.probability) * (fx - f.at(x + st.offset));
    return s;
}

GridFunction transition_apply(const StepDistribution& p, const GridFunction& f, int n) {
    KernelTable t = KernelTable::delta(p, KernelMode::Float);
    t.evolve(n);
    GridFunction out(f.radius());
    int R = f.radius(), r = t.radius();
    for (std::int64_t i = -R; i <= R; ++i) {
        for (std::int64_t j = -R; j <= R; ++j) {
            double acc = 0.0;
            for (std::int64_t a = -r; a <= r; ++a)
                for (std::int64_t b = -r; b <= r; ++b)
                    acc += t.value_at({a, b}) * f.at({i + a, j + b});
            out.set({i, j}, acc);
        }
    }
    return out;
}

GridFunction transition_apply_stepwise(const StepDistribution& p, const GridFunction& f, int n) {
    GridFunction cur = f;
    for (int s = 0; s < n; ++s) {
        GridFunction next(f.radius());
        next.fill([&](LatticePoint x) { return cur.at(x) - discrete_laplacian(p, cur, x); });
        cur = next;
    }
    return cur;
}

double heat_apply(double t, const TestFunction& f, Vec2 x, double tol) {
    if (t <= 0.0) throw DomainError("heat_apply requires t > 0");
    double R = f.support_radius();
    auto integrand = [&](double z1, double z2) {
        Vec2 z{z1, z2};
        double d2 = (x - z).norm2();
        return std::exp(-d2 / (2.0 * t)) * f(z);
    };
    double val = integrate2d(integrand, -R, R, -R, R, tol * 2.0 * std::numbers::pi * t);
    return val / (2.0 * std::numbers::pi * t);
}

double generator_gap(const StepDistribution& p, const StandardBasis& sb, const TestFunction& f,
                     double delta) {
    // Scan all lattice points whose scaled embedding can touch the support
    // (one lattice step of margin so the stencil sees the boundary).
    double reach = f.support_radius() / delta + 3.0;
    Mat2 Tinv = Mat2::from_columns(sb.h1, sb.h2).inverse();
    double b1 = std::abs(Tinv.a11) + std::abs(Tinv.a12);
    double b2 = std::abs(Tinv.a21) + std::abs(Tinv.a22);
    auto st = steps(p);
    std::int64_t r1 = static_cast<std::int64_t>(std::ceil(reach * b1));
    std::int64_t r2 = static_cast<std::int64_t>(std::ceil(reach * b2));

    double sup = 0.0;
#pragma omp parallel for schedule(static) reduction(max : sup)
    for (std::int64_t i = -r1; i <= r1; ++i) {
        for (std::int64_t j = -r2; j <= r2; ++j) {
            LatticePoint x{i, j};
            Vec2 zx = sb.embed(x) * delta;
            double lap_d = 0.0;
            double fx = f(zx);
            for (const Step& s : st)
                lap_d += to_double(s.probability) * (fx - f(sb.embed(x + s.offset) * delta));
            double v = 3.0 / (delta * delta) * lap_d + 0.5 * f.laplacian(zx);
            sup = std::max(sup, std::abs(v));
        }
    }
    return sup;
}

double semigroup_gap(const StepDistribution& p, const StandardBasis& sb, const TestFunction& f,
                     double t, int n, LatticePoint x_n) {
    double delta_n = std::sqrt(3.0 * t / n);
    KernelTable tab = KernelTable::delta(p, KernelMode::Float);
    tab.evolve(n);
    double acc = 0.0;
    int r = tab.radius();
    double reach2 = f.support_radius() * f.support_radius();
    for (std::int64_t a = -r; a <= r; ++a) {
        for (std::int64_t b = -r; b <= r; ++b) {
            Vec2 z = sb.embed(x_n + LatticePoint{a, b}) * delta_n;
            if (z.norm2() > reach2) continue;
            acc += tab.value_at({a, b}) * f(z);
        }
    }
    double ht = heat_apply(t, f, sb.embed(x_n) * delta_n);
    return std::abs(acc - ht);
}

}  // namespace triwalk
