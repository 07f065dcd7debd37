#pragma once
#ifndef ELK_ROUHANI_HPP
#define ELK_ROUHANI_HPP

// Parameter sequences for the smooth-cocycle construction on the 2-torus:
// the tower nu_1 = 1, nu_{k+1} = 2^{nu_k} + nu_k + 1, the twist sizes
// n_k = 2^{nu_k}, the dyadic partial sums theta_K = sum 2^{-nu_k}, the
// Fourier-tail certificate |beta_k| <= 2*pi*2^{-n_k}/|k|, and exact partial
// sums of the derivative-bound series sum n^m/2^n.  Everything is verified
// in exact arithmetic; the tail certificate works on power-of-two exponents
// alone so depth 4 (where n_4 = 2^2097174) stays representable.

#include <elk/zlinalg.hpp>

#include <algorithm>
#include <vector>

namespace elk {

struct RouhaniParameters {
    int depth = 0;                 // K
    std::vector<Int> nu;           // nu_1 .. nu_{K+1}
    std::vector<Int> n;            // n_k = 2^{nu_k}, k = 1..K
    Rat theta_partial;             // sum_{k<=K} 2^{-nu_k}
    bool beta_bound_certified = false;
    int derivative_orders = 0;     // M
    int derivative_terms = 0;      // N
    // derivative_partials[m][j] = sum_{i=1}^{j+1} i^m / 2^i, exact.
    std::vector<std::vector<Rat>> derivative_partials;
};

namespace detail {

/// Certify sum_i 2^{-d_i} <= 1 for a finite multiset of nonnegative big
/// exponents: merge equal pairs (2*2^{-d} = 2^{-(d-1)}) until all entries are
/// distinct; the sum is <= 1 iff the result is exactly {0} or has min >= 1.
inline bool dyadic_sum_at_most_one(std::vector<Int> d) {
    for (const Int& x : d)
        if (x < 0) return false;
    for (;;) {
        std::sort(d.begin(), d.end());
        bool merged = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] == d[i + 1]) {
                Int v = d[i] - 1;
                if (v < 0) return false;  // pair of 2^0 terms already exceeds 1
                d.erase(d.begin() + i, d.begin() + i + 2);
                d.push_back(v);
                merged = true;
                break;
            }
        if (!merged) break;
    }
    if (d.empty()) return true;
    if (d.size() == 1 && d[0] == 0) return true;
    return *std::min_element(d.begin(), d.end()) >= 1;
}

}  // namespace detail

/// Exact partial sums S_m(j) = sum_{i=1}^{j} i^m / 2^i for m = 0..orders,
/// j = 1..terms.
inline std::vector<std::vector<Rat>> derivative_series_partials(int orders, int terms) {
    require(orders >= 0 && terms >= 1, "derivative series: bad shape");
    std::vector<std::vector<Rat>> out(orders + 1);
    for (int m = 0; m <= orders; ++m) {
        Rat acc = 0;
        Int pow2 = 1;
        for (int i = 1; i <= terms; ++i) {
            pow2 *= 2;
            Int im = 1;
            for (int p = 0; p < m; ++p) im *= i;
            acc += Rat(im, pow2);
            out[m].push_back(acc);
        }
    }
    return out;
}

inline RouhaniParameters rouhani_parameters(int depth, int orders = 6, int terms = 60) {
    require(depth >= 1, "rouhani_parameters: depth must be >= 1");
    if (depth > 4)
        throw std::invalid_argument(
            "rouhani_parameters: depth > 4 is not representable (nu_6 has about 2^2097174 "
            "bits); supported depths are 1..4");
    require(orders >= 0 && orders <= 16, "rouhani_parameters: orders out of range");
    require(terms >= 1 && terms <= 100000, "rouhani_parameters: terms out of range");

    RouhaniParameters p;
    p.depth = depth;
    p.derivative_orders = orders;
    p.derivative_terms = terms;

    // nu_1 = 1, nu_{k+1} = 2^{nu_k} + nu_k + 1; one term past the depth
    // feeds the tail certificate.
    p.nu.push_back(1);
    for (int k = 0; k < depth; ++k) {
        const Int& prev = p.nu.back();
        Int next = (Int(1) << prev.convert_to<unsigned>()) + prev + 1;
        p.nu.push_back(next);
    }
    for (int k = 0; k < depth; ++k)
        p.n.push_back(Int(1) << p.nu[k].convert_to<unsigned>());

    // theta_K = sum_{k<=K} 2^{-nu_k} over the common denominator 2^{nu_K}.
    {
        unsigned top = p.nu[depth - 1].convert_to<unsigned>();
        Int num = 0;
        for (int k = 0; k < depth; ++k)
            num += Int(1) << (top - p.nu[k].convert_to<unsigned>());
        p.theta_partial = Rat(num, Int(1) << top);
    }

    // Certificate for |beta_k| <= 2*pi*2^{-n_k}/|k|: the Fourier tail is
    // dominated by eps_k = sum_{j>k} 2^{-(nu_j - nu_k)}, and with the
    // computed prefix plus a doubled final term (the gaps nu_{j+1} - nu_j
    // grow, so the uncomputed tail is at most one more copy of the last
    // term) it suffices that the dyadic sum of exponents
    // (nu_j - nu_k) - n_k is at most 1.  The driving identity
    // nu_{k+1} - nu_k = n_k + 1 is checked exactly as well.
    p.beta_bound_certified = true;
    for (int k = 1; k <= depth; ++k) {
        if (p.nu[k] - p.nu[k - 1] != p.n[k - 1] + 1) {
            p.beta_bound_certified = false;
            break;
        }
        std::vector<Int> exps;
        for (int j = k; j < depth + 1; ++j) exps.push_back(p.nu[j] - p.nu[k - 1] - p.n[k - 1]);
        exps.push_back(p.nu[depth] - p.nu[k - 1] - p.n[k - 1]);  // tail bound
        if (!detail::dyadic_sum_at_most_one(std::move(exps))) {
            p.beta_bound_certified = false;
            break;
        }
    }

    p.derivative_partials = derivative_series_partials(orders, terms);
    return p;
}

}  // namespace elk

#endif  // ELK_ROUHANI_HPP
