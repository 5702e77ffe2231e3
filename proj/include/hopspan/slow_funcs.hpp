#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopspan/common.hpp"

namespace hopspan::slow_funcs {

// Values of the A_k/B_k hierarchy explode past any integer type almost
// immediately; everything above this ceiling is clamped to it. The inverse
// functions only ever compare values against n, so saturation is lossless.
inline constexpr std::int64_t kValueCeiling = std::int64_t{1} << 62;

// A_k(n) = A_{k-1}(A_k(n-1)), A_0(n) = 2n, A_k(0) = 1. Saturating.
std::int64_t ackermann_a(int k, std::int64_t n);

// B_k(n) = B_{k-1}(B_k(n-1)), B_0(n) = n^2, B_k(0) = 2. Saturating.
std::int64_t ackermann_b(int k, std::int64_t n);

// ceil(log2 n) on integers, with log 0 = 0 and log 1 = 0.
std::int64_t ceil_log2(std::int64_t n);

// Exact evaluator for alpha_k and alpha'_k over [0, max_n].
//
// For k >= 2 the evaluator holds per-k step tables: the sorted list of
// arguments where the function value jumps, together with the new value.
// alpha_0/alpha_1 (and their primed twins) use the closed forms directly.
// Immutable after construction; concurrent reads are safe.
class AlphaEvaluator {
  public:
    AlphaEvaluator(int max_k, std::int64_t max_n);

    int max_k() const { return max_k_; }
    std::int64_t max_n() const { return max_n_; }

    // alpha_k(n) = min{s >= 0 : A_{k/2}(s) >= n} (even k; B for odd k).
    std::int64_t alpha(int k, std::int64_t n) const;

    // alpha'_k(n) = 2 + alpha'_k(alpha'_{k-2}(n)) for k >= 2, n >= k+2;
    // alpha'_k(n) = alpha_k(n) for n <= k+1; alpha'_0/1 = alpha_0/1.
    std::int64_t alpha_prime(int k, std::int64_t n) const;

    // Fault-injection hook for tests: returns a copy whose table entry
    // covering `at_n` is overwritten with `value`.
    AlphaEvaluator corrupted_copy(int k, std::int64_t at_n, std::int64_t value, bool prime) const;

  private:
    struct StepTable {
        std::vector<std::int64_t> start;  // ascending; value holds on [start[i], start[i+1])
        std::vector<std::int64_t> value;
        std::int64_t lookup(std::int64_t n) const;
    };

    StepTable build_alpha_table(int k) const;
    StepTable build_alpha_prime_table(int k) const;

    int max_k_;
    std::int64_t max_n_;
    std::vector<StepTable> alpha_memo_;        // index k, populated for k >= 2
    std::vector<StepTable> alpha_prime_memo_;  // index k, populated for k >= 2
};

// One-parameter inverse Ackermann: alpha(n) = min{s >= 0 : A_s(s) >= n}.
std::int64_t inverse_ackermann(std::int64_t n);

// Two-parameter inverse: alpha(m, n) = min{s >= 1 : A_s(4*ceil(m/n)) >= ceil(log2 n)}.
// Requires n >= 1.
std::int64_t inverse_ackermann_two(std::int64_t m, std::int64_t n);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::string counterexample;  // empty when pass
};

struct IdentityReport {
    int max_k = 0;
    std::int64_t max_n = 0;
    std::vector<IdentityCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Machine-checked invariant suite over k in [0, max_k], n in [0, max_n].
IdentityReport identity_suite(int max_k, std::int64_t max_n);
IdentityReport identity_suite(const AlphaEvaluator& ev, int max_k, std::int64_t max_n);

}  // namespace hopspan::slow_funcs
