// SPDX-License-Identifier: Apache-2.0
//
// zfaging - uplink performance toolkit for multi-cell massive MIMO with
// zero-forcing receivers under channel aging and pilot contamination
// Copyright (C) 2026 zfaging contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "zfaging/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zfaging/quadrature.hpp"
#include "zfaging/specfun.hpp"

namespace zfaging::analytics {

using specfun::detail::e1_scaled_q;
using specfun::detail::ebg_q;
using specfun::detail::upper_gamma_scaled_int_q;

namespace {

constexpr double kLog2 = 0.6931471805599453;

void require(bool cond, const char *msg) {
    if (!cond) throw std::domain_error(msg);
}

qfloat sorted_sum(std::vector<qfloat> &terms, qfloat *max_term = nullptr) {
    if (max_term)
        for (qfloat t : terms) *max_term = std::max(*max_term, qf::abs(t));
    std::sort(terms.begin(), terms.end(),
              [](qfloat x, qfloat y) { return qf::abs(x) < qf::abs(y); });
    qfloat acc = 0;
    for (qfloat t : terms) acc += t;
    return acc;
}

// E[ln(1 + c X)] for X ~ Erlang(n+1, scale): the one-dimensional reduction
// used when the error sum Y is degenerate at zero.
qfloat log_moment_erlang(int n, qfloat scale, qfloat c, qfloat *max_term) {
    const qfloat z = 1 / (c * scale);
    const qfloat e1s = e1_scaled_q(z); // e^z E1(z)
    std::vector<qfloat> terms;
    terms.reserve((n + 1) * (n + 2) / 2 + n + 1);
    qfloat zpow = 1; // z^nu
    qfloat sign = 1; // (-1)^nu
    for (int nu = 0; nu <= n; ++nu) {
        const qfloat w = sign / qf::factorial(nu);
        terms.push_back(w * e1s * zpow);
        qfloat upow = qf::powi(z, nu - 1); // z^{nu-u-1} at u=0
        qfloat uf = 1, usign = 1;
        for (int u = 0; u <= nu - 1; ++u) {
            terms.push_back(-w * usign * uf * upow);
            upow /= z;
            uf *= (u + 1);
            usign = -usign;
        }
        zpow *= z;
        sign = -sign;
    }
    return sorted_sum(terms, max_term);
}

struct LawView {
    double alpha, p_r, C, bh;
    int N, K, n; // n = N - K
};

LawView view(const SinrLaw &law, double p_r) {
    return {law.alpha, p_r, law.C, law.erlang.scale, law.N, law.K,
            law.N - law.K};
}

RateResult finish(qfloat acc_ln, qfloat max_term) {
    RateResult r;
    r.bits_per_sym = qf::to_double(acc_ln) / kLog2;
    const double mt = qf::to_double(max_term) / kLog2;
    r.condition = r.bits_per_sym != 0.0
                      ? std::fabs(mt / r.bits_per_sym)
                      : (mt > 0 ? INFINITY : 1.0);
    r.cancellation = std::fabs(r.bits_per_sym) < 1e-9 * mt;
    return r;
}

// Shared assembly of the closed-form rate. `coeffs` supplies the signed
// spectral coefficient X_{p,q} for the active (p, q); loops cover every
// eigenvalue p with its multiplicity.
RateResult rate_closed_form(const LawView &v,
                            const std::vector<double> &eigenvalues,
                            const std::vector<int> &multiplicities,
                            const std::vector<std::vector<qfloat>> &coeffs) {
    const qfloat al2 = qfloat(v.alpha) * qfloat(v.alpha);
    const qfloat pr = v.p_r;
    const qfloat bh = v.bh;
    const qfloat C = v.C;
    const int n = v.n;
    const bool two_sided = v.C > 0.0;

    // outer-x integral constants for the two log terms
    const qfloat a1 = 1 / (bh * al2 * (C + 1));
    const qfloat b1 = a1 / pr;
    const qfloat a2 = two_sided ? 1 / (bh * al2 * C) : qfloat(0);
    const qfloat b2 = two_sided ? a2 / pr : qfloat(0);

    qfloat max_term = 0;
    std::vector<qfloat> outer;

    const int P = static_cast<int>(eigenvalues.size());
    for (int p = 0; p < P; ++p) {
        const qfloat mu = eigenvalues[p];
        const int tau = multiplicities[p];
        const qfloat z = 1 / (mu * pr);

        // e^{b_j}-folded G tables, order up to n + tau - 1
        const int gmax = n + tau - 1;
        std::vector<qfloat> G1(gmax + 1), G2(gmax + 1);
        {
            const qfloat lam1 = (1 / mu - a1) / a1;
            for (int nu = 0; nu <= gmax; ++nu)
                G1[nu] = ebg_q(nu, lam1, b1, &max_term);
            if (two_sided) {
                const qfloat lam2 = (1 / mu - a2) / a2;
                for (int nu = 0; nu <= gmax; ++nu)
                    G2[nu] = ebg_q(nu, lam2, b2, &max_term);
            }
        }
        // W[s] = Gamma(s) z^{-s} for the hypergeometric reduction
        std::vector<qfloat> W(tau + n + 1);
        W[1] = 1 / z;
        for (int s = 2; s <= tau + n; ++s) W[s] = W[s - 1] * qfloat(s - 1) / z;

        for (int q = 1; q <= tau; ++q) {
            const qfloat xq = coeffs[p][q - 1];
            if (xq == 0) continue;
            const qfloat coef =
                xq / (qf::powi(mu, q) * qf::factorial(q - 1));

            // U-sum table: Wq[c] = sum_i C(c,i) Gamma(q+i) z^{-(q+i)}
            std::vector<qfloat> Wq(n, 0);
            for (int c = 0; c < n; ++c) {
                qfloat bin = 1, acc = 0;
                for (int i = 0; i <= c; ++i) {
                    acc += bin * W[q + i];
                    bin = bin * qfloat(c - i) / qfloat(i + 1);
                }
                Wq[c] = acc;
            }
            const qfloat prq = qf::powi(pr, -long(q));

            std::vector<qfloat> terms;
            terms.reserve(2 * (n + 1) + n * (n + 1) / 2);
            const int m = q - 1;
            const qfloat inv_a1 = 1 / qf::powi(a1, m + 1);
            const qfloat inv_a2 = two_sided ? 1 / qf::powi(a2, m + 1) : qfloat(0);
            for (int t = 0; t <= n; ++t) {
                const int nu = n - t;
                const qfloat wfac = 1 / qf::factorial(nu);
                // J part: -(1/nu!) (e^{b1} J_1 - e^{b2} J_2); the binomial
                // r-sum of the closed form reads the shared G tables
                {
                    qfloat j1 = 0, j2 = 0, cb = 1; // C(m,r)(-b)^{m-r}
                    // iterate r = m down to 0 so the power accumulates
                    qfloat pw1 = 1, pw2 = 1;
                    for (int r = m; r >= 0; --r) {
                        const qfloat bin = qf::binomial(m, r);
                        j1 += bin * pw1 * G1[nu + r];
                        if (two_sided) j2 += bin * pw2 * G2[nu + r];
                        pw1 *= -b1;
                        pw2 *= -b2;
                    }
                    (void)cb;
                    terms.push_back(-wfac * inv_a1 * j1);
                    if (two_sided) terms.push_back(wfac * inv_a2 * j2);
                }
                // hypergeometric part: the (C+1) and C branches share the
                // Gamma(q+i) z^{-...} table and differ only in b_j^{nu-u}
                qfloat uf = 1; // (u-1)!
                qfloat s1 = qf::powi(b1, nu - 1), s2 = qf::powi(b2, nu - 1);
                qfloat usign = -1; // (-1)^u
                for (int u = 1; u <= nu; ++u) {
                    const qfloat diff = two_sided ? (s1 - s2) : s1;
                    terms.push_back(usign * wfac * uf * diff * prq * Wq[nu - u]);
                    s1 /= b1;
                    if (two_sided) s2 /= b2;
                    uf *= u;
                    usign = -usign;
                }
            }
            qfloat pq_max = 0;
            const qfloat s_pq = sorted_sum(terms, &pq_max);
            outer.push_back(coef * s_pq);
            max_term = std::max(max_term, qf::abs(coef) * pq_max);
        }
    }
    const qfloat total = sorted_sum(outer, &max_term);
    return finish(total, max_term);
}

double y_upper_bound(const SinrLaw &law) {
    double mean = 0.0, var = 0.0, mx = 0.0;
    const auto &s = law.spectral;
    for (int p = 0; p < s.distinct_count(); ++p) {
        mean += s.eigenvalues[p] * s.multiplicities[p];
        var += s.eigenvalues[p] * s.eigenvalues[p] * s.multiplicities[p];
        mx = std::max(mx, s.eigenvalues[p]);
    }
    return mean + 14.0 * std::sqrt(var) + 40.0 * mx;
}

double x_upper_bound(const SinrLaw &law) {
    const double m = law.erlang.shape, b = law.erlang.scale;
    return b * (m + 14.0 * std::sqrt(m) + 40.0);
}

} // namespace

SinrLaw sinr_law(const model::SystemConfig &cfg,
                 const model::FadingProfile &profile, int user_k,
                 int home_cell) {
    require(user_k >= 0 && user_k < cfg.users_per_cell, "sinr_law: bad user index");
    require(home_cell >= 0 && home_cell < cfg.cells, "sinr_law: bad cell index");
    SinrLaw law;
    law.alpha = profile.alpha();
    law.p_r = cfg.uplink_power;
    law.C = profile.contamination(home_cell, user_k);
    law.N = cfg.antennas;
    law.K = cfg.users_per_cell;
    law.home_cell = home_cell;
    law.user = user_k;
    law.erlang = {cfg.antennas - cfg.users_per_cell + 1,
                  profile.beta_hat(home_cell, home_cell, user_k)};

    const std::vector<double> diag = profile.error_diagonal(home_cell);
    double beta_max = 0.0;
    for (int i = 0; i < profile.cells(); ++i)
        for (int k = 0; k < profile.users(); ++k)
            beta_max = std::max(beta_max, profile.beta(home_cell, i, k));
    std::vector<double> nonzero;
    double total = 0.0;
    for (double d : diag) {
        total += std::max(d, 0.0);
        if (d > 1e-15 * beta_max) nonzero.push_back(d);
    }
    law.error_sum = total;
    law.y_degenerate = nonzero.empty();
    if (!law.y_degenerate)
        law.spectral = specfun::characteristic_coefficients(nonzero);
    return law;
}

RateResult ergodic_rate_exact(const SinrLaw &law) {
    return ergodic_rate_exact(law, law.p_r);
}

RateResult ergodic_rate_exact(const SinrLaw &law, double p_r) {
    require(law.N > law.K, "ergodic_rate_exact: requires N > K");
    require(p_r > 0.0, "ergodic_rate_exact: requires p_r > 0");
    if (law.alpha == 0.0) return {0.0, false, 1.0};
    const LawView v = view(law, p_r);
    if (law.y_degenerate) {
        const qfloat al2 = qfloat(v.alpha) * qfloat(v.alpha);
        const qfloat c1 = al2 * qfloat(p_r) * (qfloat(v.C) + 1);
        qfloat max_term = 0;
        qfloat acc = log_moment_erlang(v.n, v.bh, c1, &max_term);
        if (v.C > 0.0) {
            const qfloat c2 = al2 * qfloat(p_r) * qfloat(v.C);
            acc -= log_moment_erlang(v.n, v.bh, c2, &max_term);
        }
        return finish(acc, max_term);
    }
    return rate_closed_form(v, law.spectral.eigenvalues,
                            law.spectral.multiplicities, law.spectral.coeffs);
}

RateResult ergodic_rate_distinct(const SinrLaw &law) {
    require(law.N > law.K, "ergodic_rate_distinct: requires N > K");
    if (law.alpha == 0.0) return {0.0, false, 1.0};
    require(!law.y_degenerate,
            "ergodic_rate_distinct: degenerate law has no spectrum");
    const auto &s = law.spectral;
    for (int m : s.multiplicities)
        if (m != 1)
            throw std::domain_error(
                "ergodic_rate_distinct: repeated eigenvalues; use "
                "ergodic_rate_exact");
    // product-formula coefficients (an independent route to the same
    // spectrum; deliberately not reusing the recursion)
    const int P = s.distinct_count();
    std::vector<std::vector<qfloat>> coeffs(P);
    for (int p = 0; p < P; ++p) {
        qfloat prod = 1;
        for (int q = 0; q < P; ++q) {
            if (q == p) continue;
            prod *= 1 / (1 - qfloat(s.eigenvalues[q]) / qfloat(s.eigenvalues[p]));
        }
        coeffs[p] = {prod};
    }
    return rate_closed_form(view(law, law.p_r), s.eigenvalues,
                            s.multiplicities, coeffs);
}

double ergodic_rate_quadrature(const SinrLaw &law, double abs_tol) {
    return ergodic_rate_quadrature(law, law.p_r, abs_tol);
}

double ergodic_rate_quadrature(const SinrLaw &law, double p_r,
                               double abs_tol) {
    require(p_r > 0.0, "ergodic_rate_quadrature: requires p_r > 0");
    if (law.alpha == 0.0) return 0.0;
    const double a2p = law.alpha * law.alpha * p_r;
    const double C = law.C;
    const double x_hi = x_upper_bound(law);
    auto inner = [&](double y) {
        auto f = [&](double x) {
            const double g = a2p * x / (a2p * C * x + p_r * y + 1.0);
            return std::log1p(g) * specfun::erlang_pdf(law.erlang, x);
        };
        return quad::integrate(f, 0.0, x_hi, abs_tol * 0.5).value;
    };
    if (law.y_degenerate) return inner(0.0) / kLog2;
    auto outer = [&](double y) {
        return specfun::hypoexp_pdf(law.spectral, y) * inner(y);
    };
    return quad::integrate(outer, 0.0, y_upper_bound(law), abs_tol * 0.5).value /
           kLog2;
}

double ceiling_rate(const SinrLaw &law, double abs_tol) {
    if (law.alpha == 0.0) return 0.0;
    const double a2 = law.alpha * law.alpha;
    const double C = law.C;
    if (law.y_degenerate) {
        if (C <= 0.0)
            throw std::domain_error("ceiling_rate: unbounded (C = 0, no error)");
        return std::log2(1.0 + 1.0 / C);
    }
    const double x_hi = x_upper_bound(law);
    auto inner = [&](double y) {
        auto f = [&](double x) {
            const double g = a2 * x / (a2 * C * x + y);
            return std::log1p(g) * specfun::erlang_pdf(law.erlang, x);
        };
        return quad::integrate(f, 0.0, x_hi, abs_tol * 0.5).value;
    };
    auto outer = [&](double y) {
        return specfun::hypoexp_pdf(law.spectral, y) * inner(y);
    };
    return quad::integrate(outer, 1e-12, y_upper_bound(law), abs_tol * 0.5)
               .value /
           kLog2;
}

double rate_lower_bound(const SinrLaw &law) {
    return rate_lower_bound(law, law.p_r);
}

double rate_lower_bound(const SinrLaw &law, double p_r) {
    require(law.N > law.K, "rate_lower_bound: requires N > K");
    require(p_r > 0.0, "rate_lower_bound: requires p_r > 0");
    if (law.alpha == 0.0) return 0.0;
    const double a2 = law.alpha * law.alpha;
    const double denom = law.C + (law.error_sum + 1.0 / p_r) /
                                     ((law.N - law.K) * a2 * law.erlang.scale);
    return std::log2(1.0 + 1.0 / denom);
}

double outage_probability(const SinrLaw &law, double gamma_th) {
    require(gamma_th > 0.0, "outage_probability: requires gamma_th > 0");
    if (law.alpha == 0.0) return 1.0;
    if (law.C > 0.0 && gamma_th >= 1.0 / law.C) return 1.0;
    const double a2 = law.alpha * law.alpha;
    const double gbar_d = law.erlang.scale * a2 * (1.0 - law.C * gamma_th);
    if (law.y_degenerate) {
        const double x = gamma_th / (a2 * law.p_r * (1.0 - law.C * gamma_th));
        return specfun::erlang_cdf(law.erlang, x);
    }
    const qfloat gbar = gbar_d;
    const qfloat g = gamma_th;
    const qfloat pr = law.p_r;
    const qfloat r = g / gbar;
    const int n = law.N - law.K;
    const auto &s = law.spectral;

    qfloat total = 0;
    for (int p = 0; p < s.distinct_count(); ++p) {
        const qfloat mu = s.eigenvalues[p];
        const qfloat rho = 1 / mu + r;
        const int tau = s.multiplicities[p];
        for (int q = 1; q <= tau; ++q) {
            const qfloat xq = s.coeffs[p][q - 1];
            if (xq == 0) continue;
            // R[s] = Gamma(s+q) rho^{-(s+q)}
            std::vector<qfloat> R(n + 1);
            R[0] = qf::factorial(q - 1) / qf::powi(rho, q);
            for (int i = 1; i <= n; ++i) R[i] = R[i - 1] * qfloat(q + i - 1) / rho;
            qfloat inner = 0;
            qfloat wt = 1; // r^t / t!
            for (int t = 0; t <= n; ++t) {
                qfloat bin = qf::powi(1 / pr, t); // C(t,s) p^{s-t} at s=0
                qfloat ss = 0;
                for (int si = 0; si <= t; ++si) {
                    ss += bin * R[si];
                    bin = bin * qfloat(t - si) / qfloat(si + 1) * pr;
                }
                inner += wt * ss;
                wt *= r / (t + 1);
            }
            total += xq / (qf::powi(mu, q) * qf::factorial(q - 1)) * inner;
        }
    }
    const qfloat P =
        1 - qf::exp(-g / (pr * gbar)) * total;
    return std::min(1.0, std::max(0.0, qf::to_double(P)));
}

double outage_probability_paper_literal(const SinrLaw &law, double gamma_th) {
    require(gamma_th > 0.0, "outage: requires gamma_th > 0");
    if (law.alpha == 0.0) return 1.0;
    if (law.C > 0.0 && gamma_th >= 1.0 / law.C) return 1.0;
    if (law.y_degenerate) return outage_probability(law, gamma_th);
    const double a2 = law.alpha * law.alpha;
    // printed form: no (g/gbar)^t/t! weight, no p^{s-t}, gbar^{s+q} in
    // place of (1/mu + g/gbar)^{-(s+q)}; the printed 1/(q-1) is read as
    // 1/(q-1)! to keep q = 1 finite
    const qfloat gbar = law.erlang.scale * a2 * (1.0 - law.C * gamma_th);
    const qfloat g = gamma_th;
    const qfloat pr = law.p_r;
    const int n = law.N - law.K;
    const auto &s = law.spectral;
    qfloat total = 0;
    for (int p = 0; p < s.distinct_count(); ++p) {
        const qfloat mu = s.eigenvalues[p];
        for (int q = 1; q <= s.multiplicities[p]; ++q) {
            const qfloat xq = s.coeffs[p][q - 1];
            qfloat inner = 0;
            for (int t = 0; t <= n; ++t) {
                qfloat bin = 1;
                for (int si = 0; si <= t; ++si) {
                    inner += bin * qf::tgamma(qfloat(si + q)) *
                             qf::powi(gbar, si + q);
                    bin = bin * qfloat(t - si) / qfloat(si + 1);
                }
            }
            total += xq / (qf::powi(mu, q) * qf::factorial(q - 1)) * inner;
        }
    }
    const qfloat P = 1 - qf::exp(-g / (pr * gbar)) * total;
    return std::min(1.0, std::max(0.0, qf::to_double(P)));
}

double outage_semi_analytic(const SinrLaw &law, double gamma_th,
                            double abs_tol) {
    require(gamma_th > 0.0, "outage_semi_analytic: requires gamma_th > 0");
    if (law.alpha == 0.0) return 1.0;
    if (law.C > 0.0 && gamma_th >= 1.0 / law.C) return 1.0;
    const double a2 = law.alpha * law.alpha;
    const double scale = gamma_th / (a2 * law.p_r * (1.0 - law.C * gamma_th));
    if (law.y_degenerate) return specfun::erlang_cdf(law.erlang, scale);
    auto f = [&](double y) {
        return specfun::erlang_cdf(law.erlang, scale * (law.p_r * y + 1.0)) *
               specfun::hypoexp_pdf(law.spectral, y);
    };
    return std::min(
        1.0, quad::integrate(f, 0.0, y_upper_bound(law), abs_tol).value);
}

LowSnrMetrics low_snr_metrics(const SinrLaw &law) {
    require(law.alpha != 0.0, "low_snr_metrics: alpha = 0 carries no rate");
    require(law.N >= law.K, "low_snr_metrics: requires N >= K");
    const double a2 = law.alpha * law.alpha;
    const int m = law.erlang.shape;
    const double bh = law.erlang.scale;
    const double ey = law.error_sum;
    LowSnrMetrics out;
    out.ebn0_min = kLog2 / (a2 * m * bh);
    out.ebn0_min_db = 10.0 * std::log10(out.ebn0_min);
    // second-order expansion of E[ln(1 + gamma)] around p_r = 0:
    //   Rdot(0)  = a2 E[X] / ln 2
    //   Rddot(0) = -(a2^2 (2C+1) E[X^2] + 2 a2 E[X] E[Y]) / ln 2
    const double ex = m * bh;
    const double ex2 = static_cast<double>(m) * (m + 1) * bh * bh;
    const double rdot = a2 * ex / kLog2;
    const double rddot =
        -(a2 * a2 * (2.0 * law.C + 1.0) * ex2 + 2.0 * a2 * ex * ey) / kLog2;
    out.wideband_slope = -2.0 * rdot * rdot * kLog2 / rddot;
    // printed closed form, reported for comparison only
    {
        const int nk = law.N - law.K;
        qfloat sum = 0;
        const auto &s = law.spectral;
        for (int p = 0; p < s.distinct_count(); ++p)
            for (int q = 1; q <= s.multiplicities[p]; ++q)
                sum += s.coeffs[p][q - 1] * qfloat(q) /
                       (qf::powi(qfloat(s.eigenvalues[p]), q) *
                        qf::factorial(q - 1));
        const qfloat denom = qfloat(a2) * qfloat(a2) +
                             2 * qfloat(a2) * qfloat(law.C) * qfloat(nk + 3) +
                             2 / qfloat(nk + 2) * sum / qfloat(bh);
        out.wideband_slope_printed =
            qf::to_double(-2 * qfloat(nk + 1) / qfloat(nk + 2) / denom);
    }
    return out;
}

double asymptotic_sinr_infinite_n(const model::FadingProfile &profile,
                                  int user_k, int home_cell) {
    const double C = profile.contamination(home_cell, user_k);
    if (C <= 0.0)
        throw std::domain_error(
            "asymptotic_sinr_infinite_n: single cell, SINR limit unbounded");
    return 1.0 / C;
}

double de_sinr_fixed_ratio(const model::FadingProfile &profile, int user_k,
                           double kappa, int home_cell) {
    require(kappa > 1.0, "de_sinr_fixed_ratio: requires kappa > 1");
    const double a2 = profile.alpha() * profile.alpha();
    const double bh = profile.beta_hat(home_cell, home_cell, user_k);
    const double C = profile.contamination(home_cell, user_k);
    double err = 0.0;
    for (int i = 0; i < profile.cells(); ++i)
        err += profile.error_trace(home_cell, i) / profile.users();
    const double sig = a2 * bh * (kappa - 1.0);
    return sig / (C * sig + err);
}

double power_scaling_limit(const model::FadingProfile &profile, int user_k,
                           double energy, int pilot_length, int home_cell) {
    require(energy > 0.0, "power_scaling_limit: requires E > 0");
    const double a2 = profile.alpha() * profile.alpha();
    const double b = profile.beta(home_cell, home_cell, user_k);
    const double C = profile.contamination(home_cell, user_k);
    const double s = a2 * pilot_length * energy * energy * b * b;
    return s / (s * C + 1.0);
}

double sum_spectral_efficiency(const model::SystemConfig &cfg,
                               const model::FadingProfile &profile,
                               RateMethod method, int home_cell) {
    double sum = 0.0;
    for (int k = 0; k < cfg.users_per_cell; ++k) {
        const SinrLaw law = sinr_law(cfg, profile, k, home_cell);
        switch (method) {
        case RateMethod::exact: {
            const RateResult r = ergodic_rate_exact(law);
            // a flagged closed form is not trustworthy; use the reference
            sum += r.cancellation ? ergodic_rate_quadrature(law)
                                  : r.bits_per_sym;
            break;
        }
        case RateMethod::bound:
            sum += rate_lower_bound(law);
            break;
        case RateMethod::quadrature:
            sum += ergodic_rate_quadrature(law);
            break;
        }
    }
    return cfg.prelog() * sum;
}

} // namespace zfaging::analytics
