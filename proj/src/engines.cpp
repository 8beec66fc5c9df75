#include "lambert/engines.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lambert {

namespace {

using cld = std::complex<long double>;

cld widen(std::complex<double> x) { return cld(x.real(), x.imag()); }

std::complex<double> narrow(cld x) {
    return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
}

void check_unit_disc(std::complex<double> x, double margin, const char* msg) {
    if (!(std::abs(x) <= 1.0 - margin)) throw std::domain_error(msg);
}

}  // namespace

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::tolerance_met: return "tolerance_met";
        case StopReason::term_cap: return "term_cap";
        case StopReason::divergence_guard: return "divergence_guard";
    }
    return "unknown";
}

const char* to_string(Coeff c) {
    switch (c) {
        case Coeff::one: return "one";
        case Coeff::mobius: return "mobius";
        case Coeff::phi: return "phi";
        case Coeff::liouville: return "liouville";
        case Coeff::mangoldt: return "mangoldt";
    }
    return "unknown";
}

Coeff coeff_from_name(std::string_view name) {
    if (name == "one") return Coeff::one;
    if (name == "mobius") return Coeff::mobius;
    if (name == "phi") return Coeff::phi;
    if (name == "liouville") return Coeff::liouville;
    if (name == "mangoldt") return Coeff::mangoldt;
    throw std::invalid_argument("unknown coefficient name: " + std::string(name));
}

CoeffFn coefficient_one() {
    return [](std::uint64_t) { return 1.0; };
}

CoeffFn coefficient_source(Coeff c, const ArithTable& table) {
    if (c == Coeff::one) return coefficient_one();
    const ArithTable* t = &table;  // caller keeps the table alive
    auto guard = [t](std::uint64_t n) {
        if (n == 0 || n > t->limit)
            throw std::out_of_range(
                "coefficient source: n exceeds the table limit; raise the "
                "table size");
    };
    switch (c) {
        case Coeff::mobius:
            return [t, guard](std::uint64_t n) { guard(n); return (double)t->mu[n]; };
        case Coeff::phi:
            return [t, guard](std::uint64_t n) { guard(n); return (double)t->phi[n]; };
        case Coeff::liouville:
            return [t, guard](std::uint64_t n) { guard(n); return (double)t->liouville[n]; };
        case Coeff::mangoldt:
            return [t, guard](std::uint64_t n) { guard(n); return t->von_mangoldt[n]; };
        default:
            return coefficient_one();
    }
}

EvalReport eval_naive(const CoeffFn& a, std::complex<double> x, double tol,
                      std::uint64_t term_cap) {
    check_unit_disc(x, 1e-9, "eval_naive: requires |x| <= 1 - 1e-9");
    if (!(tol > 0.0)) throw std::invalid_argument("eval_naive: tol must be positive");
    if (term_cap < 1) throw std::invalid_argument("eval_naive: term_cap must be >= 1");

    cld lx = widen(x);
    cld xn = 1.0L;
    cld partial = 0.0L;
    int streak = 0;
    std::uint64_t n = 0;
    long double last_mag = 0.0L;
    while (n < term_cap) {
        ++n;
        xn *= lx;
        cld term = (long double)a(n) * xn / (1.0L - xn);
        partial += term;
        last_mag = std::abs(term);
        long double thr = (long double)tol * std::max(1.0L, std::abs(partial));
        // A streak step requires the unit-coefficient envelope |x^n/(1-x^n)|
        // to be sub-threshold too: zero coefficients (mu, Lambda have runs of
        // three) say nothing about the tail and must not trigger a stop.
        if (last_mag < thr && std::abs(xn / (1.0L - xn)) < thr) {
            if (++streak == 3) break;
        } else {
            streak = 0;
        }
    }

    EvalReport r;
    r.value = narrow(partial);
    r.terms_used = n;
    r.stop_reason = streak == 3 ? StopReason::tolerance_met : StopReason::term_cap;
    try {
        cld xnext = xn * lx;
        r.error_estimate =
            (double)std::abs((long double)a(n + 1) * xnext / (1.0L - xnext));
    } catch (const std::out_of_range&) {
        r.error_estimate = (double)last_mag;  // next coefficient unavailable
    }
    return r;
}

EvalReport eval_power_series(const CoeffFn& a, std::complex<double> x,
                             std::uint64_t n_terms) {
    check_unit_disc(x, 1e-9, "eval_power_series: requires |x| <= 1 - 1e-9");
    if (n_terms < 1 || n_terms > 10'000'000)
        throw std::invalid_argument("eval_power_series: N must be in [1, 1e7]");

    std::vector<double> as(n_terms);
    for (std::uint64_t n = 1; n <= n_terms; ++n) as[n - 1] = a(n);
    std::vector<double> b = divisor_convolve_with_one(as);

    cld lx = widen(x);
    cld horner = 0.0L;  // sum b_n x^n = x(b_1 + x(b_2 + ...)) from the top
    for (std::uint64_t n = n_terms; n >= 1; --n)
        horner = horner * lx + (long double)b[n - 1];
    horner *= lx;

    double ax = std::abs(x);
    EvalReport r;
    r.value = narrow(horner);
    r.terms_used = n_terms;
    r.stop_reason = StopReason::term_cap;  // fixed budget by construction
    r.error_estimate =
        std::abs(b[n_terms - 1]) * std::pow(ax, (double)n_terms + 1.0) / (1.0 - ax);
    return r;
}

EvalReport eval_clausen(double x, double tol) {
    if (!(x >= 0.0 && x <= 1.0 - 1e-9))
        throw std::domain_error("eval_clausen: requires 0 <= x <= 1 - 1e-9");
    if (!(tol > 0.0)) throw std::invalid_argument("eval_clausen: tol must be positive");

    long double lx = x;
    long double xsq = lx;   // x^{n^2}
    long double xn = lx;    // x^n
    long double sum = 0.0L;
    EvalReport r;
    std::uint64_t n = 0;
    while (n < kDefaultTermCap) {
        ++n;
        if (n > 1) {
            xsq *= xn * xn * lx;  // x^{(n)^2} = x^{(n-1)^2} * x^{2n-1}
            xn *= lx;
        }
        long double term = xsq * (1.0L + xn) / (1.0L - xn);
        if (n > 1 && term < (long double)tol) {
            r.stop_reason = StopReason::tolerance_met;
            r.error_estimate = (double)term;  // first omitted term
            --n;
            break;
        }
        sum += term;
    }
    if (n == kDefaultTermCap) {
        r.stop_reason = StopReason::term_cap;
        long double xn2 = xn * lx;
        r.error_estimate =
            (double)(xsq * xn * xn * lx * (1.0L + xn2) / (1.0L - xn2));
    }
    r.value = (double)sum;
    r.terms_used = n;
    return r;
}

EvalReport eval_eisenstein_qseries(std::complex<double> z, std::uint64_t n_terms) {
    check_unit_disc(z, 1e-9, "eval_eisenstein_qseries: requires |z| <= 1 - 1e-9");
    if (n_terms < 1 || n_terms > 10'000)
        throw std::invalid_argument("eval_eisenstein_qseries: N must be in [1, 1e4]");

    cld lz = widen(z);
    long double az = std::abs(z);

    // q-Pochhammer prefactor prod_j (1 - z^j), truncated when |z|^j is
    // negligible; the dropped log-tail is ~ |z|^{J+1}/(1-|z|), folded into
    // the error estimate below.
    cld pref = 1.0L;
    long double zj = az;
    cld zjc = lz;
    long double pref_tail = 0.0L;
    if (az > 0.0L) {
        std::uint64_t j = 0;
        while (j < 2'000'000) {
            ++j;
            pref *= (1.0L - zjc);
            zjc *= lz;
            zj *= az;
            if (zj < 1e-19L * (1.0L - az)) break;
        }
        pref_tail = zj / (1.0L - az);
    }

    cld inner = 0.0L;
    cld zn = 1.0L;    // z^n
    cld ztri = 1.0L;  // z^{n(n+1)/2}
    cld poch = 1.0L;  // prod_{k<=n} (1 - z^k)
    long double sign = 1.0L;
    std::uint64_t n = 0;
    EvalReport r;
    r.stop_reason = StopReason::term_cap;
    bool exhausted = false;
    while (n < n_terms) {
        ++n;
        zn *= lz;
        ztri *= zn;  // z^{T_n} = z^{T_{n-1}} * z^n
        poch *= (1.0L - zn);
        inner += sign * (long double)n * ztri / poch;
        sign = -sign;
        if (std::abs(ztri) == 0.0L) {  // remaining terms are exactly zero
            r.stop_reason = StopReason::tolerance_met;
            exhausted = true;
            break;
        }
    }

    if (std::abs(pref) == 0.0L) {
        r.value = {std::nan(""), std::nan("")};
        r.terms_used = n;
        r.stop_reason = StopReason::divergence_guard;
        r.error_estimate = std::numeric_limits<double>::infinity();
        return r;
    }

    cld value = inner / pref;
    long double inner_tail = 0.0L;
    if (!exhausted) {
        cld zn2 = zn * lz;
        inner_tail = std::abs((long double)(n + 1) * ztri * zn2 / (poch * (1.0L - zn2)));
    }
    r.value = narrow(value);
    r.terms_used = n;
    r.error_estimate =
        (double)(inner_tail / std::abs(pref) + std::abs(value) * pref_tail);
    return r;
}

namespace {

// Bottom-up evaluation of the depth-D truncation in the rescaled z-form:
// value = a'_1/(b'_1 - a'_2/(b'_2 - ... a'_D/b'_D)), a'_1 = z, b'_k = 1-z^k,
// a'_2j = z^j (1-z^j)^2, a'_{2j+1} = z^{j+1} (1-z^j)^2.
long double cf_truncation(long double z, int depth, const std::vector<long double>& zp,
                          bool* vanished) {
    auto bprime = [&](int k) { return 1.0L - zp[k]; };
    auto aprime = [&](int k) {
        int j = k / 2;
        long double u = 1.0L - zp[j];
        return (k % 2 == 0 ? zp[j] : zp[j + 1]) * u * u;
    };
    long double g = bprime(depth);
    for (int k = depth - 1; k >= 1; --k) {
        if (fabsl(g) < 1e-200L) {
            *vanished = true;
            return 0.0L;
        }
        g = bprime(k) - aprime(k + 1) / g;
    }
    if (fabsl(g) < 1e-200L) {
        *vanished = true;
        return 0.0L;
    }
    return z / g;
}

}  // namespace

EvalReport eval_eisenstein_cf(double z, int depth) {
    if (!(z > 0.0 && z <= 1.0 - 1e-6))
        throw std::domain_error("eval_eisenstein_cf: requires 0 < z <= 1 - 1e-6");
    if (depth < 1 || depth > 500)
        throw std::invalid_argument("eval_eisenstein_cf: depth must be in [1, 500]");

    std::vector<long double> zp(depth + 2);
    zp[0] = 1.0L;
    for (int j = 1; j <= depth + 1; ++j) zp[j] = zp[j - 1] * (long double)z;

    bool vanished = false;
    long double v = cf_truncation(z, depth, zp, &vanished);
    EvalReport r;
    r.terms_used = (std::uint64_t)depth;
    if (vanished) {
        r.value = {std::nan(""), 0.0};
        r.stop_reason = StopReason::divergence_guard;
        r.error_estimate = std::numeric_limits<double>::infinity();
        return r;
    }
    long double prev = 0.0L;
    if (depth >= 2) {
        bool prev_vanished = false;
        prev = cf_truncation(z, depth - 1, zp, &prev_vanished);
        if (prev_vanished) prev = 0.0L;
    }
    r.value = (double)v;
    r.stop_reason = StopReason::term_cap;  // fixed depth by construction
    r.error_estimate = (double)fabsl(v - prev);
    return r;
}

double identity_residual(Coeff name, double x, double tol, const ArithTable& table) {
    if (!(std::abs(x) <= 0.95))
        throw std::domain_error("identity_residual: requires |x| <= 0.95");
    if (name == Coeff::one)
        throw std::invalid_argument(
            "identity_residual: coefficient must be mobius, phi, liouville or mangoldt");

    double lhs = eval_naive(coefficient_source(name, table), x, tol).value.real();
    long double lx = x;
    long double rhs = 0.0L;
    switch (name) {
        case Coeff::mobius:
            rhs = lx;
            break;
        case Coeff::phi:
            rhs = lx / ((1.0L - lx) * (1.0L - lx));
            break;
        case Coeff::liouville: {
            // sum x^{n^2}
            long double xsq = lx, xn = lx;
            for (std::uint64_t n = 1; n <= 100000; ++n) {
                if (n > 1) {
                    xsq *= xn * xn * lx;
                    xn *= lx;
                }
                rhs += xsq;
                if (fabsl(xsq) < 1e-19L * (fabsl(rhs) + 1.0L)) break;
            }
            break;
        }
        case Coeff::mangoldt: {
            // sum log(n) x^n
            long double xn = lx;
            for (std::uint64_t n = 2; n <= kDefaultTermCap; ++n) {
                xn *= lx;
                long double term = logl((long double)n) * xn;
                rhs += term;
                if (fabsl(term) < 1e-19L * (fabsl(rhs) + 1.0L)) break;
            }
            break;
        }
        default:
            break;
    }
    return std::abs(lhs - (double)rhs);
}

double burhenne_fk_derivative(std::uint64_t k, std::uint64_t n) {
    if (k < 1 || n < 1 || k > 170 || n > 170)
        throw std::range_error("burhenne_fk_derivative: requires 1 <= k, n <= 170");
    if (n % k != 0) return 0.0;
    long double fact = 1.0L;
    for (std::uint64_t i = 2; i <= n; ++i) fact *= (long double)i;
    if (k % 2 == 1) return (double)fact;
    // even k | n: n! - (n!/k)(1 + (-1)^{n+1}); the parenthesis vanishes since
    // k | n with k even forces n even, which the column-sum test confirms.
    long double parity = (n % 2 == 0) ? -1.0L : 1.0L;  // (-1)^{n+1}
    return (double)(fact - fact / (long double)k * (1.0L + parity));
}

mpz_class burhenne_fk_exact(std::uint64_t k, std::uint64_t n) {
    if (k < 1 || n < 1 || k > 170 || n > 170)
        throw std::range_error("burhenne_fk_exact: requires 1 <= k, n <= 170");
    if (n % k != 0) return 0;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), (unsigned long)n);
    if (k % 2 == 1) return fact;
    long parity_factor = (n % 2 == 0) ? 0 : 2;  // 1 + (-1)^{n+1}
    return fact - fact / (long)k * parity_factor;
}

SingularityProbe singularity_probe(std::uint64_t p, std::uint64_t q, double r,
                                   double tol) {
    if (q < 2 || p < 1 || std::gcd(p, q) != 1)
        throw std::invalid_argument("singularity_probe: p, q must be coprime, q >= 2");
    if (!(r > 0.0 && r <= 1.0 - 1e-7))
        throw std::domain_error("singularity_probe: requires 0 < r <= 1 - 1e-7");
    if (!(tol > 0.0)) throw std::invalid_argument("singularity_probe: tol > 0 required");

    const long double pi = 3.141592653589793238462643383279503L;
    long double lr = r;
    long double theta = 2.0L * pi * (long double)p / (long double)q;
    cld zstep(cosl(theta) * lr, sinl(theta) * lr);

    // Uniform minor-arc denominator bound: for q !| n, |1 - z^n| >= s_q with
    // s_q = 1 for q = 2 and sin(2 pi/q) for q >= 3 (minimum of |1 - u e^{i a}|
    // over u in [0,1) at the nearest admissible angle a).
    long double s_q = q == 2 ? 1.0L : sinl(2.0L * pi / (long double)q);
    long double rq = powl(lr, (long double)q);
    long double one_minus_r = 1.0L - lr;

    long double major = 0.0L;
    cld minor = 0.0L;
    cld zn = 1.0L;
    long double rn = 1.0L;
    for (std::uint64_t n = 1; n <= 500'000'000ULL; ++n) {
        zn *= zstep;
        rn *= lr;
        if (n % q == 0) {
            zn = cld(rn, 0.0L);  // z^n is exactly real here; kills angle drift
            major += rn / (1.0L - rn);
        } else {
            minor += zn / (1.0L - zn);
        }
        if (n % q == 0) {
            // Scaled tails: minor <= r^{n+1}/s_q, major <= (1-r) r^{q(n/q+1)}
            // /(1-r^q)^2; both from geometric sums with the uniform bounds.
            long double rn1 = rn * lr;
            long double minor_tail = rn1 / s_q;
            long double major_tail = one_minus_r * rn * rq / ((1.0L - rq) * (1.0L - rq));
            if (minor_tail + major_tail < (long double)tol) break;
        }
    }

    SingularityProbe probe;
    probe.p = p;
    probe.q = q;
    probe.r = r;
    probe.major_arc = (double)(one_minus_r * major);
    probe.minor_arc = narrow(one_minus_r * minor);
    probe.major_lower_bound = (double)(-log1pl(-rq) / (long double)q);
    probe.minor_upper_bound = (double)(1.0L / sinl(pi / (long double)q));
    return probe;
}

}  // namespace lambert
