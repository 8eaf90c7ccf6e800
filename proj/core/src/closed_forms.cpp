#include "allmatch/closed_forms.hpp"

#include "allmatch/counting.hpp"
#include "allmatch/errors.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace allmatch {

namespace {

void require_m_le_n(int m, int n, const char* what) {
    if (m < 0 || n < 0)
        throw ValidationError(std::string(what) + " requires nonnegative sizes");
    if (m > n)
        throw ValidationError(std::string(what) + " requires m <= n, got m = " +
                              std::to_string(m) + ", n = " + std::to_string(n));
}

ExactRational rational_pow(const ExactRational& base, int e) {
    ExactRational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

CoefficientPlan t3_plan() {
    return {
        [](int) { return ExactRational(1); },
        [](int l) { return make_rational(l, 2); },
    };
}

CoefficientPlan t4_plan() {
    return {
        [](int l) { return make_rational(l + 2, 2); },
        [](int l) { return make_rational(static_cast<long>(l) * l + 3 * l, 4); },
    };
}

ExactRational lemma1_eval(int m, int n, const CoefficientPlan& plan) {
    require_m_le_n(m, n, "lemma1_eval");
    if (!plan.a || !plan.c) throw ValidationError("coefficient plan is incomplete");
    // f[l] holds f(i,l); descending l keeps f[l-1] at the previous row.
    std::vector<ExactRational> f(static_cast<std::size_t>(n) + 1, ExactRational(1));
    for (int i = 1; i <= m; ++i)
        for (int l = n; l >= 0; --l) {
            ExactRational v = plan.a(l) * f[static_cast<std::size_t>(l)];
            if (l >= 1) v += plan.c(l) * f[static_cast<std::size_t>(l) - 1];
            f[static_cast<std::size_t>(l)] = std::move(v);
        }
    return f[static_cast<std::size_t>(n)];
}

namespace {

// sum over s_0 + ... + s_k = budget of prod_i a(n - i)^{s_i}
ExactRational composition_sum(int i, int k, int budget, int n,
                              const CoefficientPlan& plan) {
    if (i == k) return rational_pow(plan.a(n - k), budget);
    ExactRational acc = 0;
    for (int s = 0; s <= budget; ++s)
        acc += rational_pow(plan.a(n - i), s) *
               composition_sum(i + 1, k, budget - s, n, plan);
    return acc;
}

} // namespace

ExactRational lemma1_composition_sum(int m, int n, const CoefficientPlan& plan) {
    require_m_le_n(m, n, "lemma1_composition_sum");
    ExactRational total = rational_pow(plan.a(n), m);
    ExactRational cprod = 1;
    for (int k = 1; k <= m; ++k) {
        cprod *= plan.c(n - k + 1);
        total += cprod * composition_sum(0, k, m - k, n, plan);
    }
    return total;
}

ExactRational t3_mean(int m, int n) {
    require_m_le_n(m, n, "t3_mean");
    ExactRational acc = 0;
    for (int k = 0; k <= m; ++k) {
        ExactCount num = binomial(static_cast<unsigned long>(m),
                                  static_cast<unsigned long>(k)) *
                         arrangements(static_cast<unsigned long>(n),
                                      static_cast<unsigned long>(k));
        acc += make_rational(num, pow2(static_cast<unsigned long>(k)));
    }
    return acc;
}

ExactRational t4_second_moment(int m, int n) {
    require_m_le_n(m, n, "t4_second_moment");
    return lemma1_eval(m, n, t4_plan());
}

T5Report t5_bounds(int n) {
    if (n < 1) throw ValidationError("t5_bounds requires n >= 1");
    T5Report r;
    r.n = n;
    ExactCount root;
    ExactCount arg(2 * static_cast<long>(n) + 3);
    mpz_sqrt(root.get_mpz_t(), arg.get_mpz_t()); // floor sqrt
    r.k_star = static_cast<unsigned>(root.get_ui()) - 1;

    auto b = [n](unsigned k) {
        ExactCount den = factorial(static_cast<unsigned>(n) - k);
        ExactCount kf = factorial(k);
        return make_rational(pow2(k), den * kf * kf);
    };
    const ExactRational b_star = b(r.k_star);
    r.kstar_is_argmax = true;
    for (unsigned k = 0; k <= static_cast<unsigned>(n); ++k)
        if (b(k) > b_star) r.kstar_is_argmax = false;

    const ExactCount nf = factorial(static_cast<unsigned>(n));
    r.h = make_rational(nf * nf, pow2(static_cast<unsigned long>(n))) * b_star;
    r.mean = t3_mean(n, n);
    r.upper_paper = ExactRational(n) * r.h;
    r.upper_rigorous = ExactRational(n + 1) * r.h;
    r.lower_holds = r.h <= r.mean;
    r.upper_paper_holds = r.mean <= r.upper_paper;
    r.upper_rigorous_holds = r.mean <= r.upper_rigorous;
    return r;
}

namespace {

ExactRational mpfr_to_rational(mpfr_t x) {
    if (mpfr_zero_p(x)) return ExactRational(0);
    ExactCount z;
    const mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x);
    ExactRational q(z);
    if (e >= 0) {
        ExactCount scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= ExactRational(scale);
    } else {
        ExactCount scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= ExactRational(scale);
    }
    return q;
}

// Decides ratio >= n^{sqrt(n)/2} exactly: the threshold is bracketed by
// directed-rounding bounds tightened until the comparison is unambiguous.
bool threshold_comparison(const ExactRational& ratio, int n, double* approx) {
    bool holds = false;
    bool decided = false;
    for (mpfr_prec_t prec = 128; prec <= 4096 && !decided; prec *= 2) {
        mpfr_t nn, e_lo, e_hi, lo, hi;
        mpfr_inits2(prec, nn, e_lo, e_hi, lo, hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_si(nn, n, MPFR_RNDN);
        // exponent sqrt(n)/2 with outward rounding; base n >= 1 keeps pow monotone
        mpfr_sqrt_ui(e_lo, static_cast<unsigned long>(n), MPFR_RNDD);
        mpfr_div_ui(e_lo, e_lo, 2, MPFR_RNDD);
        mpfr_sqrt_ui(e_hi, static_cast<unsigned long>(n), MPFR_RNDU);
        mpfr_div_ui(e_hi, e_hi, 2, MPFR_RNDU);
        mpfr_pow(lo, nn, e_lo, MPFR_RNDD);
        mpfr_pow(hi, nn, e_hi, MPFR_RNDU);
        if (prec == 128 && approx) {
            *approx = mpfr_get_d(hi, MPFR_RNDN);
        }
        const ExactRational rlo = mpfr_to_rational(lo);
        const ExactRational rhi = mpfr_to_rational(hi);
        if (ratio >= rhi) {
            holds = true;
            decided = true;
        } else if (ratio < rlo) {
            holds = false;
            decided = true;
        }
        mpfr_clears(nn, e_lo, e_hi, lo, hi, static_cast<mpfr_ptr>(nullptr));
    }
    if (!decided)
        throw std::logic_error("threshold comparison did not converge at 4096 bits");
    return holds;
}

} // namespace

RatioReport t6_ratio(int n) {
    if (n < 1) throw ValidationError("t6_ratio requires n >= 1");
    RatioReport r;
    r.n = n;
    r.numerator = t4_second_moment(n, n);
    const ExactRational mean = t3_mean(n, n);
    r.denominator = mean * mean;
    r.ratio = r.numerator / r.denominator;
    r.holds = threshold_comparison(r.ratio, n, &r.threshold);
    return r;
}

namespace {

void require_edge_range(long m, int n, const char* what) {
    if (n < 0) throw ValidationError(std::string(what) + " requires n >= 0");
    const long cells = static_cast<long>(n) * n;
    if (m < 0 || m > cells)
        throw ValidationError(std::string(what) + " requires 0 <= m <= n^2, got m = " +
                              std::to_string(m) + ", n = " + std::to_string(n));
}

// E(X_{M(t)}) = C(n^2-t, m-t) / C(n^2, m); zero once t > m.
ExactRational match_indicator_mean(long t, long m, int n) {
    if (t > m) return ExactRational(0);
    const unsigned long cells = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    ExactCount num = binomial(cells - static_cast<unsigned long>(t),
                              static_cast<unsigned long>(m - t));
    ExactCount den = binomial(cells, static_cast<unsigned long>(m));
    return make_rational(num, den);
}

} // namespace

ExactRational lemma2_mean(long m_ones, int n) {
    require_edge_range(m_ones, n, "lemma2_mean");
    ExactRational acc = 0;
    for (int k = 0; k <= n; ++k) {
        const ExactCount ch = binomial(static_cast<unsigned long>(n),
                                       static_cast<unsigned long>(k));
        acc += ExactRational(ch * ch * factorial(static_cast<unsigned>(k))) *
               match_indicator_mean(k, m_ones, n);
    }
    return acc;
}

ExactRational t7_tail(int n, const ExactRational& eps) {
    if (n < 0) throw ValidationError("t7_tail requires n >= 0");
    if (eps < 0 || eps > ExactRational(1, 2))
        throw ValidationError("t7_tail requires 0 <= eps <= 1/2");
    const unsigned long cells = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    const ExactRational start = (ExactRational(1, 2) + eps) * ExactRational(static_cast<long>(cells));
    ExactCount i0;
    mpz_cdiv_q(i0.get_mpz_t(), start.get_num().get_mpz_t(), start.get_den().get_mpz_t());
    ExactCount sum = 0;
    for (unsigned long i = static_cast<unsigned long>(i0.get_ui()); i <= cells; ++i)
        sum += binomial(cells, i);
    return make_rational(sum, pow2(cells));
}

T8Moments t8_moments(long m_edges, int n) {
    require_edge_range(m_edges, n, "t8_moments");
    T8Moments out;
    out.mean = lemma2_mean(m_edges, n);

    // sum_{M'(i)} E(X_{M(k)} X'_{M(i)}) for one fixed k-matching
    auto cross_sum = [&](int k, int i) {
        ExactRational acc = 0;
        const int pmax = std::min(i, n - k);
        for (int p = 0; p <= pmax; ++p) {
            const ExactCount ways =
                binomial(static_cast<unsigned long>(n - k), static_cast<unsigned long>(p)) *
                binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i - p)) *
                arrangements(static_cast<unsigned long>(n - i + p),
                             static_cast<unsigned long>(p));
            if (ways == 0) continue;
            ExactRational inner = 0;
            for (int j = 0; j <= i - p; ++j) {
                const ExactCount fits =
                    binomial(static_cast<unsigned long>(i - p), static_cast<unsigned long>(j)) *
                    fit_count(static_cast<unsigned>(n - j), static_cast<unsigned>(i - p - j));
                inner += ExactRational(fits) *
                         match_indicator_mean(static_cast<long>(k) + i - j, m_edges, n);
            }
            acc += ExactRational(ways) * inner;
        }
        return acc;
    };

    ExactRational second = 0;
    for (int k = 0; k <= n; ++k) {
        const ExactCount ch = binomial(static_cast<unsigned long>(n),
                                       static_cast<unsigned long>(k));
        const ExactRational outer(ch * ch * factorial(static_cast<unsigned>(k)));
        ExactRational part = 0;
        for (int i = 0; i <= k; ++i) part += cross_sum(k, i);      // i <= k block
        for (int i = 0; i <= k - 1; ++i) part += cross_sum(k, i);  // i < k block
        second += outer * part;
    }
    out.second = second;
    return out;
}

ExactRational lemma2_ratio(long m_edges, int n) {
    const T8Moments m = t8_moments(m_edges, n);
    return m.second / (m.mean * m.mean);
}

} // namespace allmatch
