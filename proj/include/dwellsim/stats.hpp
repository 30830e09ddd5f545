#pragma once

// Small numeric statistics kit: sample moments, mean absolute error, and
// Welch's unequal-variance t-test with a two-sided p-value computed from
// the regularized incomplete beta function.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "dwellsim/error.hpp"

namespace dwellsim {

inline double sample_mean(std::span<const double> xs) {
    if (xs.empty()) {
        throw EmptyInput("sample_mean: empty sample");
    }
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    return sum / static_cast<double>(xs.size());
}

// Unbiased (n-1 denominator) sample variance.
inline double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) {
        throw DomainError("sample_variance needs at least 2 values");
    }
    double mean = sample_mean(xs);
    double ss = 0.0;
    for (double x : xs) {
        double d = x - mean;
        ss += d * d;
    }
    return ss / static_cast<double>(xs.size() - 1);
}

inline double sample_stddev(std::span<const double> xs) {
    return std::sqrt(sample_variance(xs));
}

inline double mae(std::span<const double> predictions, std::span<const double> actuals) {
    if (predictions.size() != actuals.size()) {
        throw LengthMismatch("mae: size mismatch");
    }
    if (predictions.empty()) {
        throw EmptyInput("mae: empty input");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        sum += std::fabs(predictions[i] - actuals[i]);
    }
    return sum / static_cast<double>(predictions.size());
}

namespace detail {

// Continued-fraction evaluation of the regularized incomplete beta
// function I_x(a, b) (Lentz's method).
inline double incomplete_beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double eps = 1e-15;
    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) {
            break;
        }
    }
    return h;
}

inline double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * incomplete_beta_cf(a, b, x) / a;
    }
    return 1.0 - front * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

// Two-sided p-value of a t statistic with df degrees of freedom.
inline double student_t_two_sided_p(double t, double df) {
    double x = df / (df + t * t);
    return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

}  // namespace detail

struct WelchResult {
    double t_stat = 0.0;
    double df = 0.0;
    double p_value = 1.0;
};

// Welch's unequal-variance two-sample t-test with Welch-Satterthwaite
// degrees of freedom and a two-sided p-value. Two constant samples with
// equal means compare as identical (t = 0, p = 1); two constant samples
// with different means are degenerate and rejected.
inline WelchResult welch_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw DomainError("welch_t_test needs at least 2 values per sample");
    }
    double mean_a = sample_mean(a);
    double mean_b = sample_mean(b);
    double var_a = sample_variance(a);
    double var_b = sample_variance(b);
    double na = static_cast<double>(a.size());
    double nb = static_cast<double>(b.size());
    double se2 = var_a / na + var_b / nb;
    WelchResult result;
    if (se2 == 0.0) {
        if (mean_a == mean_b) {
            return result;  // identical constant samples
        }
        throw DomainError("welch_t_test: both samples have zero variance");
    }
    result.t_stat = (mean_a - mean_b) / std::sqrt(se2);
    result.df = se2 * se2 /
                (var_a * var_a / (na * na * (na - 1.0)) + var_b * var_b / (nb * nb * (nb - 1.0)));
    result.p_value = detail::student_t_two_sided_p(result.t_stat, result.df);
    return result;
}

inline WelchResult welch_t_test(const std::vector<double>& a, const std::vector<double>& b) {
    return welch_t_test(std::span<const double>(a), std::span<const double>(b));
}

}  // namespace dwellsim
