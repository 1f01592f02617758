// series.hpp: Compensated summation and tail-tested truncation of multipole series

#pragma once

#include <algorithm>
#include <complex>
#include <string>
#include <vector>

#include "nanogp/errors.hpp"
#include "nanogp/mie_green.hpp"

namespace nanogp::mie::detail {

inline constexpr int tail_terms = 10;

struct KahanSum {
    Complex sum{};
    Complex carry{};

    void add(Complex x) {
        const Complex y = x - carry;
        const Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

inline Complex kahan(const std::vector<Complex>& terms, int first, int last) {
    KahanSum k;
    for (int n = first; n <= last; ++n) {
        k.add(terms[n]);
    }
    return k.sum;
}

// build(total) returns terms[0..total] (index 0 is skipped) together with any state the
// caller keeps. The accepted order N satisfies
//   Σ_{N<n<=N+10} measure(terms[n]) <= rel_tol * reference(terms, N).
// N starts at `start` and doubles up to hard_cap.
template <class Build, class Measure, class Reference>
SeriesResult truncated_sum(int start, const SeriesControl& ctl, Build&& build, Measure&& measure,
                           Reference&& reference, const char* who) {
    if (ctl.hard_cap < 1 || !(ctl.rel_tol > 0.0) || ctl.n_max < 0 || ctl.n_max > ctl.hard_cap) {
        throw DomainError(std::string(who) + ": invalid SeriesControl");
    }
    int n = std::clamp(start, 1, ctl.hard_cap);
    while (true) {
        const std::vector<Complex> terms = build(n + tail_terms);
        double tail = 0.0;
        for (int k = n + 1; k <= n + tail_terms; ++k) {
            tail += measure(terms[k]);
        }
        const Complex value = kahan(terms, 1, n);
        const double ref = reference(terms, n, value);
        if (tail == 0.0 || tail <= ctl.rel_tol * ref) {
            return {value, ref > 0.0 ? tail / ref : 0.0, n};
        }
        if (n >= ctl.hard_cap) {
            throw ConvergenceError(std::string(who) + ": series tail above rel_tol at hard_cap " +
                                       std::to_string(ctl.hard_cap),
                                   value, tail);
        }
        n = std::min(2 * n, ctl.hard_cap);
    }
}

} // namespace nanogp::mie::detail
