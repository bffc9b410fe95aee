#include "fdaloha/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace fdaloha {

namespace {

// Gauss(7)/Kronrod(15) nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double integral;
    double error;
    double resabs;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    const double fc = f(c);
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        fv[i] = f(c - dx);
        fv[14 - i] = f(c + dx);
    }

    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const double sum = fv[i] + fv[14 - i];
        resk += kWgk[i] * sum;
        resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1) resg += kWg[i / 2] * sum;
    }

    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

    double err = std::abs((resk - resg) * h);
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);

    return {resk * h, err, resabs};
}

struct Interval {
    double a, b, integral, error;
    int depth;
    bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace

QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            const QuadConfig& cfg) {
    if (!(a <= b)) throw std::invalid_argument("integrate_finite: requires a <= b");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("integrate_finite: tolerances must be > 0");

    QuadResult res;
    if (a == b) {
        res.evaluations = 1;
        (void)f(a);
        return res;
    }

    std::priority_queue<Interval> queue;
    PanelResult first = gk15(f, a, b);
    res.evaluations = 15;
    queue.push({a, b, first.integral, first.error, 0});
    double total = first.integral;
    double total_err = first.error;

    while (true) {
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (total_err <= target) break;

        Interval worst = queue.top();
        if (worst.depth >= cfg.max_depth) {
            res.value = total;
            res.abs_error_estimate = total_err;
            throw QuadratureError("integrate_finite: max_depth reached with error " +
                                      std::to_string(total_err) + " above tolerance " +
                                      std::to_string(target),
                                  res);
        }
        queue.pop();

        const double mid = 0.5 * (worst.a + worst.b);
        PanelResult left = gk15(f, worst.a, mid);
        PanelResult right = gk15(f, mid, worst.b);
        res.evaluations += 30;

        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        queue.push({worst.a, mid, left.integral, left.error, worst.depth + 1});
        queue.push({mid, worst.b, right.integral, right.error, worst.depth + 1});
    }

    res.value = total;
    res.abs_error_estimate = total_err;
    return res;
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadConfig& cfg) {
    auto g = [&f](double t) {
        const double om = 1.0 - t;
        const double u = t / om;
        if (!std::isfinite(u)) return 0.0;
        const double v = f(u);
        return v / (om * om);
    };
    return integrate_finite(g, 0.0, 1.0, cfg);
}

QuadResult integrate_semi_infinite_algebraic(const std::function<double(double)>& f,
                                             double tail_exponent, double tail_start,
                                             const QuadConfig& cfg) {
    if (!(tail_exponent > 1.0))
        throw std::invalid_argument("integrate_semi_infinite_algebraic: tail exponent must be > 1");
    if (!(tail_start > 0.0))
        throw std::invalid_argument("integrate_semi_infinite_algebraic: tail start must be > 0");

    QuadConfig half = cfg;
    half.rel_tol = cfg.rel_tol / 2.0;
    half.abs_tol = cfg.abs_tol / 2.0;

    QuadResult head = integrate_finite(f, 0.0, tail_start, half);

    const double inv = 1.0 / (tail_exponent - 1.0);
    auto mapped = [&](double t) {
        const double u = tail_start * std::pow(t, -inv);
        if (!std::isfinite(u)) return 0.0;
        const double jac = tail_start * inv * std::pow(t, -1.0 - inv);
        const double v = f(u);
        return std::isfinite(jac) ? v * jac : 0.0;
    };
    QuadResult tail = integrate_finite(mapped, 0.0, 1.0, half);

    return {head.value + tail.value, head.abs_error_estimate + tail.abs_error_estimate,
            head.evaluations + tail.evaluations};
}

namespace {

// z - log1p(z), stable for small |z|.
double xm_log1p(double z) {
    if (std::abs(z) < 1e-4)
        return z * z * (0.5 - z / 3.0 + z * z / 4.0 - z * z * z / 5.0);
    return z - std::log1p(z);
}

}  // namespace

double log_ratio_kernel(double x, double y, double s) {
    if (!(s > 0.0) || !(x >= 0.0) || !(y >= 0.0))
        throw std::invalid_argument("log_ratio_kernel: requires x, y >= 0 and s > 0");
    if (!std::isfinite(x) || !std::isfinite(y)) return 0.0;
    if (std::abs(x - y) <= 1e-9 * std::max({x, y, 1.0}))
        return 1.0 / (1.0 + s * 0.5 * (x + y));
    const double d = s * (x - y);
    return std::log1p(d / (1.0 + s * y)) / d;
}

double log_ratio_kernel_complement(double x, double y, double s) {
    if (!(s > 0.0) || !(x >= 0.0) || !(y >= 0.0))
        throw std::invalid_argument("log_ratio_kernel_complement: requires x, y >= 0 and s > 0");
    if (!std::isfinite(x) || !std::isfinite(y)) return 1.0;
    if (std::abs(x - y) <= 1e-9 * std::max({x, y, 1.0})) {
        const double m = s * 0.5 * (x + y);
        return m / (1.0 + m);
    }
    const double d = s * (x - y);
    const double w = s * y;
    const double z = d / (1.0 + w);
    return w / (1.0 + w) + xm_log1p(z) / d;
}

}  // namespace fdaloha
