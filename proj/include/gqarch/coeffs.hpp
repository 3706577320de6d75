#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gqarch/common.hpp"

namespace gqarch {

enum class TailKind { power_law, finite };

/// Moving-average coefficient sequence b_1, b_2, ... with either an exact
/// hyperbolic tail b_j = beta * j^(d-1) continuing past the stored values,
/// or a finitely supported sequence that is exactly zero past the end.
struct CoefficientSeq {
    std::vector<double> values;  // b_1 .. b_{n_trunc}
    double beta = 0.0;           // tail scale (power_law only)
    double d = 0.0;              // memory parameter, 0 < d < 1/2 (power_law only)
    std::size_t n_trunc = 0;
    TailKind tail_kind = TailKind::finite;

    /// b_j for any j >= 1: stored value, hyperbolic continuation, or exact zero.
    double at(std::size_t j) const {
        if (j == 0) throw std::invalid_argument("coefficient index starts at 1");
        if (j <= values.size()) return values[j - 1];
        if (tail_kind == TailKind::power_law)
            return beta * std::pow(static_cast<double>(j), d - 1.0);
        return 0.0;
    }

    bool operator==(const CoefficientSeq&) const = default;
};

inline CoefficientSeq finite_coeffs(std::vector<double> values) {
    if (values.empty()) values.push_back(0.0);
    CoefficientSeq seq;
    seq.n_trunc = values.size();
    seq.values = std::move(values);
    seq.tail_kind = TailKind::finite;
    return seq;
}

/// b_j = beta * j^(d-1), j = 1..n_trunc, with the tail continuing hyperbolically.
inline CoefficientSeq power_law_coeffs(double beta, double d, std::size_t n_trunc) {
    if (!(d > 0.0 && d < 0.5)) throw std::invalid_argument("memory parameter d must lie in (0, 1/2)");
    if (n_trunc < 1) throw std::invalid_argument("n_trunc must be >= 1");
    CoefficientSeq seq;
    seq.beta = beta;
    seq.d = d;
    seq.n_trunc = n_trunc;
    seq.tail_kind = TailKind::power_law;
    seq.values.resize(n_trunc);
    const double expo = d - 1.0;
    for (std::size_t j = 1; j <= n_trunc; ++j)
        seq.values[j - 1] = beta * std::pow(static_cast<double>(j), expo);
    return seq;
}

/// Sequence norms B_p and their gamma-weighted counterparts.
///
///   B_p       = sum |b_j|^p            (0 < p < 2)
///             = (sum b_j^2)^(p/2)      (p >= 2)
///   B_{p,g}   = B_p / (1 - g^(p/2))    (0 < p < 2)
///             = B_p / (1 - g)^(p/2)    (p >= 2)
///
/// tail_bound bounds the part of the defining sum discarded by truncation:
/// the remainder of sum |b_j|^p for p < 2, and of sum b_j^2 for p >= 2
/// (integral comparison for the hyperbolic tail; zero for finite sequences;
/// +inf when the tail series diverges).
struct BpNorms {
    double b_p = 0.0;
    double b_p_gamma = 0.0;
    double tail_bound = 0.0;
};

inline BpNorms norm_Bp(const CoefficientSeq& seq, double p, double gamma) {
    if (!(p > 0.0)) throw std::invalid_argument("norm order p must be positive");
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0, 1)");

    const double q = std::min(p, 2.0);
    NeumaierSum acc;
    for (double b : seq.values) acc.add(std::pow(std::abs(b), q));
    const double base = acc.value();

    BpNorms out;
    if (seq.tail_kind == TailKind::power_law) {
        // sum_{j>N} |beta|^q j^{(d-1)q} <= |beta|^q \int_N^inf x^{(d-1)q} dx
        const double expo = (seq.d - 1.0) * q;
        if (expo >= -1.0) {
            out.tail_bound = std::numeric_limits<double>::infinity();
        } else {
            const double n = static_cast<double>(seq.n_trunc);
            out.tail_bound = std::pow(std::abs(seq.beta), q) * std::pow(n, expo + 1.0) / (-expo - 1.0);
        }
    }

    if (p < 2.0) {
        out.b_p = base;
        out.b_p_gamma = base / (1.0 - std::pow(gamma, p / 2.0));
    } else {
        out.b_p = std::pow(base, p / 2.0);
        out.b_p_gamma = out.b_p / std::pow(1.0 - gamma, p / 2.0);
    }
    return out;
}

/// Geometrically smoothed transforms of a coefficient sequence, index t = 1..horizon:
///   b_{t,g}      = sum_{j=0}^{t-1} g^j b_{t-j}
///   |b|_{t,g}    = sum_{j=0}^{t-1} g^j |b_{t-j}|
///   bsq_{t,g}    = sum_{j=0}^{t-1} g^j b_{t-j}^2
struct SmoothedSeq {
    std::vector<double> b_gamma;
    std::vector<double> b_abs_gamma;
    std::vector<double> b_sq_gamma;
    double gamma = 0.0;
};

inline SmoothedSeq gamma_smooth(const CoefficientSeq& seq, double gamma, std::size_t horizon) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0, 1)");
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    SmoothedSeq out;
    out.gamma = gamma;
    out.b_gamma.resize(horizon);
    out.b_abs_gamma.resize(horizon);
    out.b_sq_gamma.resize(horizon);
    // One-step recursion: x_{t,g} = x_t + g x_{t-1,g}, exact for each transform.
    double bg = 0.0, ba = 0.0, bs = 0.0;
    for (std::size_t t = 1; t <= horizon; ++t) {
        const double b = seq.at(t);
        bg = b + gamma * bg;
        ba = std::abs(b) + gamma * ba;
        bs = b * b + gamma * bs;
        out.b_gamma[t - 1] = bg;
        out.b_abs_gamma[t - 1] = ba;
        out.b_sq_gamma[t - 1] = bs;
    }
    return out;
}

/// Cross-lag weight w_{i,t,g} = sum_{l=0}^{t-1} g^l b_{t-l} b_{i+t-l}.
/// For finite sequences the index i+t must stay within the stored support.
inline double cross_weights(const CoefficientSeq& seq, double gamma, std::size_t i, std::size_t t) {
    if (i < 1 || t < 1) throw std::invalid_argument("cross_weights requires i >= 1 and t >= 1");
    if (seq.tail_kind == TailKind::finite && i + t > seq.n_trunc)
        throw std::out_of_range("cross_weights: i + t exceeds the stored support of a finite sequence");
    NeumaierSum acc;
    double g_pow = 1.0;
    for (std::size_t l = 0; l < t; ++l) {
        acc.add(g_pow * seq.at(t - l) * seq.at(i + t - l));
        g_pow *= gamma;
    }
    return acc.value();
}

/// Coefficients of (1 - sum_j bsq_{j,g} z^j)^{-1} via convolution inversion:
/// phi_0 = 1, phi_j = sum_{i=1}^{j} bsq_{i,g} phi_{j-i}.  All terms are
/// nonnegative, and sum phi_j converges to (1-g)/(1-g-B_2) when B_{2,g} < 1.
inline std::vector<double> phi_coeffs(const CoefficientSeq& seq, double gamma, std::size_t order) {
    const BpNorms n2 = norm_Bp(seq, 2.0, gamma);
    if (!(n2.b_p_gamma < 1.0))
        throw condition_error("phi_coeffs requires B_{2,gamma} < 1 for the inverse series to converge");
    const SmoothedSeq sm = gamma_smooth(seq, gamma, std::max<std::size_t>(order, 1));
    std::vector<double> phi(order + 1, 0.0);
    phi[0] = 1.0;
    for (std::size_t j = 1; j <= order; ++j) {
        NeumaierSum acc;
        for (std::size_t i = 1; i <= j; ++i) acc.add(sm.b_sq_gamma[i - 1] * phi[j - i]);
        phi[j] = acc.value();
    }
    return phi;
}

/// Renewal-type sequence A_k = alpha_k + sum_{0<i<k} alpha_i A_{k-i},
/// defined for nonnegative alpha with sum alpha < 1.  For alpha_j <= c j^{-g},
/// g > 1, the output inherits the same decay rate.
inline std::vector<double> renewal_Ak(const std::vector<double>& alpha, std::size_t k_max) {
    NeumaierSum total;
    for (double a : alpha) {
        if (a < 0.0) throw std::invalid_argument("renewal_Ak requires nonnegative alpha");
        total.add(a);
    }
    if (!(total.value() < 1.0)) throw condition_error("renewal_Ak requires sum(alpha) < 1");
    auto alpha_at = [&](std::size_t j) { return j <= alpha.size() ? alpha[j - 1] : 0.0; };
    std::vector<double> A(k_max, 0.0);
    for (std::size_t k = 1; k <= k_max; ++k) {
        NeumaierSum acc;
        acc.add(alpha_at(k));
        for (std::size_t i = 1; i < k; ++i) acc.add(alpha_at(i) * A[k - i - 1]);
        A[k - 1] = acc.value();
    }
    return A;
}

}  // namespace gqarch
