#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "pathloss/errors.hpp"
#include "pathloss/rng.hpp"
#include "pathloss/special.hpp"

namespace pathloss {

enum class Family { normal, skew_normal, cauchy, student_t, gmm };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::normal: return "normal";
        case Family::skew_normal: return "skew_normal";
        case Family::cauchy: return "cauchy";
        case Family::student_t: return "student_t";
        case Family::gmm: return "gmm";
    }
    return "unknown";
}

inline Family family_from_name(const std::string& s) {
    if (s == "normal") return Family::normal;
    if (s == "skew_normal") return Family::skew_normal;
    if (s == "cauchy") return Family::cauchy;
    if (s == "student_t") return Family::student_t;
    if (s == "gmm") return Family::gmm;
    throw DataError("unknown distribution family: " + s);
}

// Mixture parameters in canonical (mean-sorted) order.
struct GmmParams {
    std::vector<double> weights;
    std::vector<double> means;
    std::vector<double> variances;

    std::size_t components() const { return weights.size(); }
};

namespace dist {

inline constexpr double kLogSqrt2Pi = 0.9189385332046727;  // log(sqrt(2*pi))

inline double normal_logpdf(double x, double mu, double sigma) {
    const double z = (x - mu) / sigma;
    return -0.5 * z * z - std::log(sigma) - kLogSqrt2Pi;
}

inline double normal_cdf(double x, double mu, double sigma) {
    return special::normal_cdf((x - mu) / sigma);
}

inline double cauchy_logpdf(double x, double loc, double scale) {
    const double z = (x - loc) / scale;
    return -std::log(std::numbers::pi * scale * (1.0 + z * z));
}

inline double cauchy_cdf(double x, double loc, double scale) {
    return 0.5 + std::atan((x - loc) / scale) / std::numbers::pi;
}

// Normalization constant cached by callers that loop over data.
inline double student_t_lognorm(double df, double scale) {
    return special::lgamma(0.5 * (df + 1.0)) - special::lgamma(0.5 * df) -
           0.5 * std::log(df * std::numbers::pi) - std::log(scale);
}

inline double student_t_logpdf_z(double z, double df, double lognorm) {
    return lognorm - 0.5 * (df + 1.0) * std::log1p(z * z / df);
}

inline double student_t_logpdf(double x, double df, double loc, double scale) {
    return student_t_logpdf_z((x - loc) / scale, df,
                              student_t_lognorm(df, scale));
}

inline double student_t_cdf(double x, double df, double loc, double scale) {
    return special::student_t_cdf((x - loc) / scale, df);
}

inline double skew_normal_logpdf(double x, double shape, double loc,
                                 double scale) {
    const double z = (x - loc) / scale;
    return std::numbers::ln2 - std::log(scale) - 0.5 * z * z - kLogSqrt2Pi +
           special::log_normal_cdf(shape * z);
}

inline double skew_normal_cdf(double x, double shape, double loc,
                              double scale) {
    const double z = (x - loc) / scale;
    return special::normal_cdf(z) - 2.0 * special::owens_t(z, shape);
}

inline double logsumexp2(const double* vals, std::size_t n) {
    double m = vals[0];
    for (std::size_t i = 1; i < n; ++i) m = std::max(m, vals[i]);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::exp(vals[i] - m);
    return m + std::log(s);
}

inline double gmm_logpdf(const GmmParams& g, double x) {
    double vals[16];
    const std::size_t m = g.components();
    for (std::size_t k = 0; k < m; ++k) {
        const double sd = std::sqrt(g.variances[k]);
        vals[k] = std::log(g.weights[k]) + normal_logpdf(x, g.means[k], sd);
    }
    return logsumexp2(vals, m);
}

inline double gmm_pdf(const GmmParams& g, double x) {
    return std::exp(gmm_logpdf(g, x));
}

inline double gmm_cdf(const GmmParams& g, double x) {
    double c = 0.0;
    for (std::size_t k = 0; k < g.components(); ++k) {
        c += g.weights[k] * normal_cdf(x, g.means[k], std::sqrt(g.variances[k]));
    }
    return c;
}

// ---- Samplers (deterministic given the Rng stream) ----

inline double sample_normal(Rng& rng, double mu, double sigma) {
    return rng.normal(mu, sigma);
}

inline double sample_cauchy(Rng& rng, double loc, double scale) {
    return rng.cauchy(loc, scale);
}

inline double sample_student_t(Rng& rng, double df, double loc, double scale) {
    return loc + scale * rng.student_t(df);
}

// Conditioning representation: delta*|Z0| + sqrt(1-delta^2)*Z1 is standard
// skew-normal with shape alpha = delta / sqrt(1 - delta^2).
inline double sample_skew_normal(Rng& rng, double shape, double loc,
                                 double scale) {
    const double delta = shape / std::sqrt(1.0 + shape * shape);
    const double z0 = rng.normal();
    const double z1 = rng.normal();
    const double z = delta * std::fabs(z0) + std::sqrt(1.0 - delta * delta) * z1;
    return loc + scale * z;
}

inline double sample_gmm(Rng& rng, const GmmParams& g) {
    const double u = rng.uniform01();
    double acc = 0.0;
    std::size_t pick = g.components() - 1;
    for (std::size_t k = 0; k < g.components(); ++k) {
        acc += g.weights[k];
        if (u < acc) {
            pick = k;
            break;
        }
    }
    return rng.normal(g.means[pick], std::sqrt(g.variances[pick]));
}

}  // namespace dist
}  // namespace pathloss
