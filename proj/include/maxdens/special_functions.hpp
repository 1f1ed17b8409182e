#pragma once

// Scalar special functions used by the densities, constraints, and
// quantiles in this library. All functions are pure and thread-safe.

namespace maxdens {

// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// Digamma psi(x) = d/dx ln Gamma(x), x > 0.
double digamma(double x);

// Trigamma psi'(x), x > 0.
double trigamma(double x);

// ln B(a,b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b), a,b > 0.
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a,b), x in [0,1], a,b > 0.
double reg_inc_beta(double x, double a, double b);

// Inverse of reg_inc_beta in x: returns x in (0,1) with I_x(a,b) = p.
double inv_reg_inc_beta(double p, double a, double b);

// ln P(Y = y) for Y ~ Binomial(n, theta), 0 <= y <= n, theta in (0,1).
double log_binomial_pmf(long long y, long long n, double theta);

// log(1 + e^x) without overflow or rounding to zero.
double softplus(double x);

// 1 / (1 + e^{-x}).
double sigmoid(double x);

// log(x / (1-x)) for x in (0,1).
double logit(double x);

// log(e^r + e^s).
double log_sum_exp(double r, double s);

namespace detail {
// I_x(a,b) given both x and its complement xc = 1-x. Callers that know
// xc to full precision (e.g. quantile iterations in logit space) avoid
// the cancellation in computing 1-x near 1.
double reg_inc_beta_xc(double x, double xc, double a, double b);
}  // namespace detail

}  // namespace maxdens
