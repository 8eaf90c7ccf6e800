#pragma once

#include "allmatch/exact.hpp"

#include <functional>

namespace allmatch {

// Coefficient series a_l, c_l for the two-index recursion
//   f(m,n) = a_n f(m-1,n) + c_n f(m-1,n-1),  f(0,l) = 1.
// a is queried for levels 0..n, c for levels 1..n.
struct CoefficientPlan {
    std::function<ExactRational(int)> a;
    std::function<ExactRational(int)> c;
};

// Mean plan: a == 1, c_l = l/2 (ensemble AM mean over A(m,n,1/2)).
CoefficientPlan t3_plan();

// Second-moment plan: a_l = (l+2)/2, c_l = (l^2+3l)/4.
CoefficientPlan t4_plan();

// f(m,n) by the O(m n) dynamic program.
ExactRational lemma1_eval(int m, int n, const CoefficientPlan& plan);

// The composition-sum closed form, term by term:
//   sum_{k=1}^{m} sum_{s_0+..+s_k=m-k} c_n..c_{n-k+1} a_n^{s_0}..a_{n-k}^{s_k}
//   + a_n^m.
// Exponential; oracle for lemma1_eval at small sizes.
ExactRational lemma1_composition_sum(int m, int n, const CoefficientPlan& plan);

// E_A(AM(A_{m,n})) = sum_{k=0}^{m} C(m,k) P(n,k) / 2^k over A(m,n,1/2).
ExactRational t3_mean(int m, int n);

// E_A(E_sigma(X^2)) over A(m,n,1/2), via lemma1_eval with the t4 plan.
ExactRational t4_second_moment(int m, int n);

struct T5Report {
    int n = 0;
    unsigned k_star = 0;          // floor(-1 + sqrt(2n+3))
    ExactRational h;              // (n!)^2 / 2^n * b_{k*}
    ExactRational mean;           // t3_mean(n,n)
    ExactRational upper_paper;    // n * h, reported only (fails at n = 1)
    ExactRational upper_rigorous; // (n+1) * h
    bool kstar_is_argmax = false; // b_{k*} = max_k b_k
    bool lower_holds = false;     // h <= mean
    bool upper_paper_holds = false;
    bool upper_rigorous_holds = false;
};

// Bounds on the ensemble mean via the summand sequence
// b_k = 2^k / ((n-k)! (k!)^2).
T5Report t5_bounds(int n);

struct RatioReport {
    int n = 0;
    ExactRational numerator;     // t4_second_moment(n,n)
    ExactRational denominator;   // t3_mean(n,n)^2
    ExactRational ratio;
    double threshold = 0.0;      // n^{sqrt(n)/2}, 128-bit rounded
    bool holds = false;          // ratio >= threshold, decided via outward
                                 // rational bounds on the threshold
};

// The ensemble critical ratio against the claimed n^{sqrt(n)/2} growth.
RatioReport t6_ratio(int n);

// E(AM(B)) over B(m_ones, n):
// sum_{k} (C(n,k))^2 k! C(n^2-k, m-k) / C(n^2, m).
ExactRational lemma2_mean(long m_ones, int n);

// Tail sum_{i=ceil((1/2+eps) n^2)}^{n^2} C(n^2, i) / 2^{n^2}.
ExactRational t7_tail(int n, const ExactRational& eps);

struct T8Moments {
    ExactRational mean;
    ExactRational second;
};

// First and second moments of AM(G) over G(m_edges, n); the second moment
// is the nested (k, i, p, j) sum with the F_{n-j} inclusion-exclusion count.
T8Moments t8_moments(long m_edges, int n);

// second / mean^2; always >= 1.
ExactRational lemma2_ratio(long m_edges, int n);

} // namespace allmatch
