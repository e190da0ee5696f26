#include "sigbayes/numerics.hpp"
#include "sigbayes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace sigbayes {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Convergence contract shared by the incomplete-beta routines: 1e-12 relative,
// hard cap of 300 iterations, failure is an error rather than an approximation.
constexpr double kRelTol = 1e-12;
constexpr int kMaxIter = 300;

} // namespace

// Lanczos approximation, g = 607/128, 15 terms. Good to ~1e-14 relative
// across the supported range; the test suite pins it against exact
// big-integer factorials.
double log_gamma(double x) {
    static constexpr double kCoef[14] = {
        57.1562356658629235,     -59.5979603554754912,
        14.1360979747417471,     -0.491913816097620199,
        0.339946499848118887e-4, 0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3,
        -0.210264441724104883e-3, 0.217439618115212643e-3,
        -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5,
    };
    if (!(x > 0.0))
        throw domain_error("log_gamma: argument must be positive, got " + std::to_string(x));

    const double tmp0 = x + 5.24218750000000000; // x + g + 1/2
    const double tmp = (x + 0.5) * std::log(tmp0) - tmp0;
    double ser = 0.999999999999997092;
    double y = x;
    for (double c : kCoef) ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("log_beta: arguments must be positive, got a=" +
                           std::to_string(a) + " b=" + std::to_string(b));
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

namespace detail {

// Continued-fraction factor for I_x(a,b), modified Lentz. Returns NaN when
// the 300-iteration cap is hit so the caller can fall back to the series.
double inc_beta_cf(double x, double a, double b) {
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kRelTol) return h;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

// ln I_x(a,b) via the ascending power series
//   I_x(a,b) = x^a (1-x)^b / (a B(a,b)) * sum_{k>=0} c_k x^k,
//   c_0 = 1, c_k = c_{k-1} (a+b+k-1)/(a+k).
// Convergent for x below the CF switch point; used only as a fallback.
double inc_beta_series_log(double x, double a, double b) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= kMaxIter; ++k) {
        term *= x * (a + b + k - 1.0) / (a + k);
        sum += term;
        if (term < kRelTol * sum)
            return a * std::log(x) + b * std::log1p(-x) - log_beta(a, b) -
                   std::log(a) + std::log(sum);
    }
    throw numeric_failure("log_reg_inc_beta: series failed to converge within " +
                          std::to_string(kMaxIter) + " terms (x=" + std::to_string(x) +
                          ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
}

} // namespace detail

double log_reg_inc_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("log_reg_inc_beta: shape parameters must be positive, got a=" +
                           std::to_string(a) + " b=" + std::to_string(b));
    if (!(x >= 0.0 && x <= 1.0))
        throw domain_error("log_reg_inc_beta: x must lie in [0,1], got " + std::to_string(x));

    if (x == 0.0) return kNegInf;
    if (x == 1.0) return 0.0;

    // Direct evaluation below the switch point, complement above it; the CF
    // converges fast on the side it is applied to.
    const bool direct = x < (a + 1.0) / (a + b + 2.0);
    const double xa = direct ? x : 1.0 - x;
    const double aa = direct ? a : b;
    const double bb = direct ? b : a;

    const double log_prefactor =
        aa * std::log(xa) + bb * std::log1p(-xa) - log_beta(aa, bb);

    double log_tail;
    const double cf = detail::inc_beta_cf(xa, aa, bb);
    if (std::isnan(cf)) {
        log_tail = detail::inc_beta_series_log(xa, aa, bb);
    } else {
        log_tail = log_prefactor + std::log(cf / aa);
    }

    if (direct) return std::min(log_tail, 0.0);

    // I_x(a,b) = 1 - I_{1-x}(b,a); the computed tail is bounded away from 1
    // by the switch, so the complement is well conditioned.
    if (log_tail >= 0.0)
        throw numeric_failure("log_reg_inc_beta: complementary tail reached 1 (x=" +
                              std::to_string(x) + ", a=" + std::to_string(a) +
                              ", b=" + std::to_string(b) + ")");
    return std::log1p(-std::exp(log_tail));
}

double log_trunc_beta_integral(std::size_t positives, std::size_t n, double q_max) {
    if (positives > n)
        throw domain_error("log_trunc_beta_integral: positives (" + std::to_string(positives) +
                           ") exceeds n (" + std::to_string(n) + ")");
    if (!(q_max > 0.0 && q_max <= 1.0))
        throw domain_error("log_trunc_beta_integral: q_max must lie in (0,1], got " +
                           std::to_string(q_max));

    const double a = static_cast<double>(positives) + 1.0;
    const double b = static_cast<double>(n - positives) + 1.0;
    return log_beta(a, b) + log_reg_inc_beta(q_max, a, b);
}

namespace {

struct LogIntegrand {
    double h;  // exponent on q
    double t;  // exponent on (1-q)

    double operator()(double q) const {
        double v = 0.0;
        if (h > 0.0) v += h * std::log(q);      // -inf at q=0 is fine
        if (t > 0.0) v += t * std::log1p(-q);   // -inf at q=1 is fine
        return v;
    }
    double slope(double q) const { return h / q - t / (1.0 - q); }
    double curvature_scale(double q) const {
        double c = 0.0;
        if (h > 0.0) c += h / (q * q);
        if (t > 0.0) c += t / ((1.0 - q) * (1.0 - q));
        return c > 0.0 ? 1.0 / std::sqrt(c) : std::numeric_limits<double>::infinity();
    }
};

template <typename F>
double adaptive_simpson(const F& g, double a, double fa, double b, double fb,
                        double fm, double whole, double eps, int depth) {
    if (depth > 60)
        throw numeric_failure("quadrature_oracle: adaptive subdivision exceeded depth limit");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = g(lm);
    const double frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(g, a, fa, m, fm, flm, left, 0.5 * eps, depth + 1) +
           adaptive_simpson(g, m, fm, b, fb, frm, right, 0.5 * eps, depth + 1);
}

template <typename F>
double simpson_panel(const F& g, double a, double b, double eps) {
    const double m = 0.5 * (a + b);
    const double fa = g(a);
    const double fb = g(b);
    const double fm = g(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(g, a, fa, b, fb, fm, whole, eps, 0);
}

} // namespace

double quadrature_oracle(std::size_t positives, std::size_t n, double q_max) {
    if (positives > n)
        throw domain_error("quadrature_oracle: positives exceeds n");
    if (n > 10000)
        throw domain_error("quadrature_oracle: n is limited to 10000, got " + std::to_string(n));
    if (!(q_max > 0.0 && q_max <= 1.0))
        throw domain_error("quadrature_oracle: q_max must lie in (0,1], got " +
                           std::to_string(q_max));

    if (n == 0) return std::log(q_max);

    const LogIntegrand f{static_cast<double>(positives), static_cast<double>(n - positives)};

    // Peak of the integrand restricted to [0, q_max].
    const double mode = static_cast<double>(positives) / static_cast<double>(n);
    const double peak = std::clamp(mode, 0.0, q_max);
    const double fpeak = f(peak);

    // Characteristic width: Laplace curvature scale at the peak, sharpened by
    // the slope scale when the peak sits on the boundary.
    double width = f.curvature_scale(std::clamp(peak, 1e-12, 1.0 - 1e-12));
    if (peak == 0.0 || peak == q_max) {
        const double q_eval = (peak == 0.0) ? std::min(1e-12, q_max) : peak;
        const double s = std::fabs(f.slope(std::min(q_eval, 1.0 - 1e-12)));
        if (s > 0.0) width = std::min(width, 1.0 / s);
    }
    width = std::min(width, q_max);
    width = std::max(width, q_max * 1e-15);

    // Panel boundaries fan out geometrically from the peak so that the mass
    // near the peak is resolved before the flat tails.
    std::vector<double> below{peak};
    for (double step = width; below.back() - step > 0.0; step *= 2.0)
        below.push_back(below.back() - step);
    below.push_back(0.0);

    std::vector<double> knots(below.rbegin(), below.rend());
    for (double step = width; knots.back() + step < q_max; step *= 2.0)
        knots.push_back(knots.back() + step);
    if (knots.back() < q_max) knots.push_back(q_max);

    const auto g = [&](double q) {
        const double v = f(q) - fpeak;
        return v == kNegInf ? 0.0 : std::exp(v);
    };

    // First a coarse pass to scale the error budget, then the adaptive pass.
    double coarse = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i], b = knots[i + 1];
        const double m = 0.5 * (a + b);
        coarse += (b - a) / 6.0 * (g(a) + 4.0 * g(m) + g(b));
    }
    if (!(coarse > 0.0)) coarse = width; // peak panel alone carries ~width of mass

    const double eps_total = 1e-11 * coarse;
    double total = 0.0;
    const double eps_panel = eps_total / static_cast<double>(knots.size());
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        total += simpson_panel(g, knots[i], knots[i + 1], eps_panel);

    if (!(total > 0.0))
        throw numeric_failure("quadrature_oracle: integral evaluated to zero mass");
    return fpeak + std::log(total);
}

} // namespace sigbayes
