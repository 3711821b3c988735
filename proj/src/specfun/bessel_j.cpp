#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "besselq/specfun.hpp"
#include "series.hpp"

namespace besselq::specfun {

namespace {

// Power series below this argument; the rounding loss is ~ eps * I_a(x).
constexpr double kSeriesLimit = 10.0;
constexpr double kHankelMin = 40.0;
// Step used to isolate the first zeros; smaller than any zero spacing of J_a, a > -1.
constexpr double kScanStep = 0.25;

struct GaussLegendre16 {
    std::array<double, 16> nodes{};
    std::array<double, 16> weights{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_16.
const GaussLegendre16& gauss_legendre16()
{
    static const GaussLegendre16 rule = [] {
        GaussLegendre16 r;
        constexpr int n = 16;
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                dp = n * (x * p0 - p1) / (x * x - 1.0);
                const double dx = p0 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) {
                    break;
                }
            }
            r.nodes[i] = -x;
            r.nodes[n - 1 - i] = x;
            r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

template <class F>
double integrate_panels(F&& f, double a, double b, int panels)
{
    const auto& rule = gauss_legendre16();
    const double width = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * width;
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
        }
        total += 0.5 * width * sum;
    }
    return total;
}

double bessel_j_series(double order, double x)
{
    const double q = -0.25 * x * x;
    double term = 1.0 / gamma_real(order + 1.0);
    double sum = term;
    for (int m = 0; m < 200; ++m) {
        term *= q / ((m + 1.0) * (m + 1.0 + order));
        sum += term;
        if (std::abs(term) <= 0.25 * detail::kEpsilon * std::abs(sum)) {
            break;
        }
    }
    return std::pow(0.5 * x, order) * sum;
}

// J_a(x) = (1/pi) Int_0^pi cos(a t - x sin t) dt
//          - (sin a pi / pi) Int_0^inf exp(-x sinh t - a t) dt.
double bessel_j_integral(double order, double x)
{
    const int panels = 2 + static_cast<int>(std::ceil((x + std::abs(order)) * std::numbers::pi / 8.0));
    const double oscillatory = integrate_panels(
        [&](double t) { return std::cos(order * t - x * std::sin(t)); }, 0.0, std::numbers::pi, panels);
    double result = oscillatory / std::numbers::pi;

    const double sin_a = detail::sin_pi(order);
    if (sin_a != 0.0) {
        // Integrand below e^-45 beyond t_max.
        const double t_max = std::asinh((45.0 + std::max(0.0, -order) * 4.0) / x) + 1.0;
        const double tail = integrate_panels(
            [&](double t) { return std::exp(-x * std::sinh(t) - order * t); }, 0.0, t_max, 12);
        result -= sin_a / std::numbers::pi * tail;
    }
    return result;
}

// sqrt(2/(pi x)) (P cos chi - Q sin chi), chi = x - (a/2 + 1/4) pi.
// Returns false if the expansion cannot reach full accuracy.
bool bessel_j_hankel(double order, double x, double& value)
{
    const double mu = 4.0 * order * order;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double previous = INFINITY;
    bool converged = false;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (mu - odd * odd) / (8.0 * k * x);
        const double size = std::abs(next);
        if (size >= previous && odd * odd > mu) {
            break;
        }
        term = next;
        previous = size;
        // a_k/x^k enters P or Q with sign (-1)^floor(k/2).
        const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
        if (k % 2 == 0) {
            p += signed_term;
        } else {
            q += signed_term;
        }
        if (size <= 0.25 * detail::kEpsilon * (std::abs(p) + std::abs(q))) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        return false;
    }
    // cos(x - phi) expanded so the large argument is reduced by the library.
    const double phi_turns = 0.5 * order + 0.25;
    const double cphi = detail::cos_pi(phi_turns);
    const double sphi = detail::sin_pi(phi_turns);
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cos_chi = cx * cphi + sx * sphi;
    const double sin_chi = sx * cphi - cx * sphi;
    value = std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
    return true;
}

// McMahon's expansion in 1/beta, beta = (k + a/2 - 1/4) pi.
double mcmahon_guess(double order, int k)
{
    const double mu = 4.0 * order * order;
    const double beta = (k + 0.5 * order - 0.25) * std::numbers::pi;
    const double inv = 1.0 / (8.0 * beta);
    const double inv2 = inv * inv;
    double t = (mu - 1.0) * inv;
    double x = beta - t;
    t *= (4.0 / 3.0) * inv2;
    x -= (7.0 * mu - 31.0) * t;
    t *= (8.0 / 5.0) * inv2;
    x -= ((83.0 * mu - 982.0) * mu + 3779.0) * t;
    t *= (2.0 / 7.0) * inv2;
    x -= (((6949.0 * mu - 153855.0) * mu + 1585743.0) * mu - 6277237.0) * t;
    return x;
}

// McMahon is used once beta is large against the order.
bool mcmahon_reliable(double order, int k)
{
    const double beta = (k + 0.5 * order - 0.25) * std::numbers::pi;
    return beta >= 6.0 * std::abs(order) + 12.0;
}

// Safeguarded Newton inside a verified sign change [lo, hi].
double refine_root(double order, double lo, double hi)
{
    double f_lo = bessel_j(order, lo);
    double f_hi = bessel_j(order, hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw ConvergenceError("bessel_j_zero: bracket has no sign change (order " +
                               std::to_string(order) + ")");
    }
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double fx = bessel_j(order, x);
        if (fx == 0.0) {
            return x;
        }
        if ((fx > 0.0) == (f_lo > 0.0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }
        const double width_tol = std::max(1e-12, 4.0 * detail::kEpsilon * hi);
        if (hi - lo <= width_tol) {
            return 0.5 * (lo + hi);
        }
        const double slope = order / x * fx - bessel_j(order + 1.0, x);
        double next = slope != 0.0 ? x - fx / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        // Newton has converged to rounding: accept once a sign change is
        // verified on both sides, otherwise fall back to bisection.
        if (std::abs(next - x) <= 0.25 * width_tol) {
            const double a = std::max(lo, next - width_tol);
            const double b = std::min(hi, next + width_tol);
            if ((bessel_j(order, a) > 0.0) != (bessel_j(order, b) > 0.0)) {
                return next;
            }
            next = 0.5 * (lo + hi);
        }
        x = next;
    }
    throw ConvergenceError("bessel_j_zero: refinement did not converge");
}

}  // namespace

double bessel_j(double order, double x)
{
    detail::require_order(order, "bessel_j");
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("bessel_j: argument must be finite and >= 0");
    }
    if (x == 0.0) {
        if (order < 0.0) {
            throw DomainError("bessel_j: J_a(0) is unbounded for negative order");
        }
        return order == 0.0 ? 1.0 : 0.0;
    }
    if (x <= kSeriesLimit) {
        return bessel_j_series(order, x);
    }
    if (x >= std::max(kHankelMin, order * order)) {
        double value = 0.0;
        if (bessel_j_hankel(order, x, value)) {
            return value;
        }
    }
    return bessel_j_integral(order, x);
}

double bessel_j_zero(double order, int k)
{
    detail::require_order(order, "bessel_j_zero");
    if (k < 1) {
        throw DomainError("bessel_j_zero: k must be >= 1");
    }

    if (mcmahon_reliable(order, k)) {
        const double guess = mcmahon_guess(order, k);
        return refine_root(order, guess - 1.0, guess + 1.0);
    }

    // j_{a,1} > max(a, 2 sqrt(a+1)) and J_a > 0 below its first zero.
    double lo = std::max(order, 2.0 * std::sqrt(order + 1.0));
    double f_lo = bessel_j(order, lo);
    int found = 0;
    for (int step = 0; step < 1000000; ++step) {
        const double hi = lo + kScanStep;
        const double f_hi = bessel_j(order, hi);
        if (f_hi == 0.0 || (f_lo > 0.0) != (f_hi > 0.0)) {
            if (++found == k) {
                return f_hi == 0.0 ? hi : refine_root(order, lo, hi);
            }
        }
        lo = hi;
        f_lo = f_hi;
    }
    throw ConvergenceError("bessel_j_zero: scan failed to isolate the root");
}

BesselZeroTable::BesselZeroTable(double order, std::size_t count) : order_(order)
{
    zeros_.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
        const double z = bessel_j_zero(order, static_cast<int>(k));
        if (!zeros_.empty() && !(z > zeros_.back())) {
            throw ConvergenceError("BesselZeroTable: zeros out of order at k = " + std::to_string(k));
        }
        zeros_.push_back(z);
    }
}

}  // namespace besselq::specfun
