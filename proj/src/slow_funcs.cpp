#include "hopspan/slow_funcs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <sstream>

namespace hopspan::slow_funcs {

namespace {

std::int64_t sat_double(std::int64_t n) {
    return n >= kValueCeiling / 2 ? kValueCeiling : 2 * n;
}

std::int64_t sat_square(std::int64_t n) {
    if (n >= (std::int64_t{1} << 31)) return kValueCeiling;
    std::int64_t v = n * n;
    return v >= kValueCeiling ? kValueCeiling : v;
}

std::int64_t sat_pow2(std::int64_t n) {
    return n >= 62 ? kValueCeiling : std::int64_t{1} << n;
}

// ceil(sqrt(n)) on integers.
std::int64_t ceil_isqrt(std::int64_t n) {
    if (n <= 0) return 0;
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (s * s < n) ++s;
    while (s > 0 && (s - 1) * (s - 1) >= n) --s;
    return s;
}

}  // namespace

std::int64_t ceil_log2(std::int64_t n) {
    if (n <= 1) return 0;  // log 0 = 0 by convention
    return std::bit_width(static_cast<std::uint64_t>(n - 1));
}

std::int64_t ackermann_a(int k, std::int64_t n) {
    if (k < 0 || n < 0) throw domain_error("ackermann_a: negative argument");
    if (k == 0) return sat_double(n);
    if (n == 0) return 1;
    if (k == 1) return sat_pow2(n);
    // A_k(n) >= A_1(n) = 2^n for k,n >= 1, so anything at n >= 62 saturates.
    if (n >= 62) return kValueCeiling;
    std::int64_t v = 1;  // A_k(0)
    for (std::int64_t t = 1; t <= n; ++t) {
        v = ackermann_a(k - 1, v);
        if (v >= kValueCeiling) return kValueCeiling;
    }
    return v;
}

std::int64_t ackermann_b(int k, std::int64_t n) {
    if (k < 0 || n < 0) throw domain_error("ackermann_b: negative argument");
    if (k == 0) return sat_square(n);
    if (n == 0) return 2;
    if (k == 1) {
        // B_1(n) = 2^(2^n)
        if (n >= 6) return kValueCeiling;
        return sat_pow2(std::int64_t{1} << n);
    }
    if (n >= 62) return kValueCeiling;
    std::int64_t v = 2;  // B_k(0)
    for (std::int64_t t = 1; t <= n; ++t) {
        v = ackermann_b(k - 1, v);
        if (v >= kValueCeiling) return kValueCeiling;
    }
    return v;
}

std::int64_t AlphaEvaluator::StepTable::lookup(std::int64_t n) const {
    auto it = std::upper_bound(start.begin(), start.end(), n);
    return value[static_cast<std::size_t>(it - start.begin()) - 1];
}

AlphaEvaluator::AlphaEvaluator(int max_k, std::int64_t max_n) : max_k_(max_k), max_n_(max_n) {
    if (max_k < 0 || max_n < 0) throw domain_error("AlphaEvaluator: negative bound");
    alpha_memo_.resize(static_cast<std::size_t>(max_k) + 1);
    alpha_prime_memo_.resize(static_cast<std::size_t>(max_k) + 1);
    for (int k = 2; k <= max_k; ++k) {
        alpha_memo_[static_cast<std::size_t>(k)] = build_alpha_table(k);
        alpha_prime_memo_[static_cast<std::size_t>(k)] = build_alpha_prime_table(k);
    }
}

AlphaEvaluator::StepTable AlphaEvaluator::build_alpha_table(int k) const {
    StepTable t;
    t.start.push_back(0);
    t.value.push_back(0);
    const bool even = (k % 2 == 0);
    const int j = k / 2;
    for (std::int64_t v = 1;; ++v) {
        std::int64_t prev = even ? ackermann_a(j, v - 1) : ackermann_b(j, v - 1);
        if (prev >= max_n_) break;  // no jump to value v within [0, max_n]
        t.start.push_back(prev + 1);
        t.value.push_back(v);
    }
    return t;
}

AlphaEvaluator::StepTable AlphaEvaluator::build_alpha_prime_table(int k) const {
    // Single ascending pass; alpha'_k(n) depends on alpha'_{k-2}(n) < n and on
    // this table's already-built prefix.
    StepTable t;
    std::int64_t cur = -1;
    for (std::int64_t n = 0; n <= max_n_; ++n) {
        std::int64_t v;
        if (n <= k + 1) {
            v = alpha(k, n);
        } else {
            std::int64_t inner = (k - 2 >= 2) ? alpha_prime_memo_[static_cast<std::size_t>(k - 2)].lookup(n)
                                              : (k - 2 == 0 ? (n + 1) / 2 : ceil_isqrt(n));
            v = 2 + t.lookup(inner);
        }
        if (v != cur) {
            t.start.push_back(n);
            t.value.push_back(v);
            cur = v;
        }
    }
    return t;
}

std::int64_t AlphaEvaluator::alpha(int k, std::int64_t n) const {
    if (n < 0) throw domain_error("alpha: negative n");
    if (k < 0) throw domain_error("alpha: negative k");
    if (n > max_n_) throw capacity_error("alpha: n exceeds evaluator max_n");
    if (k == 0) return (n + 1) / 2;
    if (k == 1) return ceil_isqrt(n);
    if (k > max_k_) throw capacity_error("alpha: k exceeds evaluator max_k");
    return alpha_memo_[static_cast<std::size_t>(k)].lookup(n);
}

std::int64_t AlphaEvaluator::alpha_prime(int k, std::int64_t n) const {
    if (n < 0) throw domain_error("alpha_prime: negative n");
    if (k < 0) throw domain_error("alpha_prime: negative k");
    if (n > max_n_) throw capacity_error("alpha_prime: n exceeds evaluator max_n");
    if (k == 0) return (n + 1) / 2;
    if (k == 1) return ceil_isqrt(n);
    if (k > max_k_) throw capacity_error("alpha_prime: k exceeds evaluator max_k");
    return alpha_prime_memo_[static_cast<std::size_t>(k)].lookup(n);
}

AlphaEvaluator AlphaEvaluator::corrupted_copy(int k, std::int64_t at_n, std::int64_t value,
                                              bool prime) const {
    if (k < 2 || k > max_k_) throw domain_error("corrupted_copy: k has no table");
    AlphaEvaluator copy = *this;
    StepTable& t = prime ? copy.alpha_prime_memo_[static_cast<std::size_t>(k)]
                         : copy.alpha_memo_[static_cast<std::size_t>(k)];
    auto it = std::upper_bound(t.start.begin(), t.start.end(), at_n);
    t.value[static_cast<std::size_t>(it - t.start.begin()) - 1] = value;
    return copy;
}

std::int64_t inverse_ackermann(std::int64_t n) {
    if (n < 0) throw domain_error("inverse_ackermann: negative n");
    for (std::int64_t s = 0;; ++s) {
        if (ackermann_a(static_cast<int>(s), s) >= n) return s;
    }
}

std::int64_t inverse_ackermann_two(std::int64_t m, std::int64_t n) {
    if (n < 1) throw domain_error("inverse_ackermann_two: n must be >= 1");
    if (m < 0) throw domain_error("inverse_ackermann_two: negative m");
    const std::int64_t t = 4 * ((m + n - 1) / n);
    const std::int64_t target = ceil_log2(n);
    for (std::int64_t s = 1; s <= 64; ++s) {
        if (ackermann_a(static_cast<int>(s), t) >= target) return s;
    }
    throw domain_error("inverse_ackermann_two: unsatisfiable (m = 0 with n > 2)");
}

namespace {

std::string cex2(int k, std::int64_t n, std::int64_t lhs, std::int64_t rhs) {
    std::ostringstream os;
    os << "k=" << k << " n=" << n << " lhs=" << lhs << " rhs=" << rhs;
    return os.str();
}

// Expands a monotone step function into a dense array by galloping for jumps.
void fill_dense(const std::function<std::int64_t(std::int64_t)>& f, std::int64_t hi_n,
                std::vector<std::uint8_t>& out) {
    std::int64_t n = 0;
    while (n <= hi_n) {
        const std::int64_t v = f(n);
        std::int64_t lo = n, hi = n + 1, step = 1;
        while (hi <= hi_n && f(hi) == v) {
            lo = hi;
            hi += step;
            step *= 2;
        }
        if (hi <= hi_n) {
            std::int64_t a = lo, b = hi;  // f(a) == v, f(b) != v
            while (b - a > 1) {
                const std::int64_t m = a + (b - a) / 2;
                (f(m) == v ? a : b) = m;
            }
            hi = b;
        } else {
            hi = hi_n + 1;
        }
        std::fill(out.begin() + n, out.begin() + hi, static_cast<std::uint8_t>(v));
        n = hi;
    }
}

struct Flaw {
    bool ok = true;
    std::string cex;
    void fail(int k, std::int64_t n, std::int64_t lhs, std::int64_t rhs) {
        if (ok) {
            ok = false;
            cex = cex2(k, n, lhs, rhs);
        }
    }
};

}  // namespace

IdentityReport identity_suite(const AlphaEvaluator& ev, int max_k, std::int64_t max_n) {
    const std::int64_t need_n = 2 * max_n + 4;
    const int need_k = std::max(max_k + 2, static_cast<int>(2 * inverse_ackermann(max_n) + 2));
    if (ev.max_n() < need_n || ev.max_k() < need_k)
        throw capacity_error("identity_suite: evaluator too small for requested ranges");

    IdentityReport report;
    report.max_k = max_k;
    report.max_n = max_n;

    const auto N = static_cast<std::size_t>(need_n) + 1;
    // Dense expansions for the current k and the last k of each parity.
    std::vector<std::uint8_t> a_cur(N), p_cur(N);
    std::vector<std::uint8_t> a_par[2], p_par[2];
    bool have_par[2] = {false, false};

    Flaw mono_a, mono_p, shrink_a, shrink_p, coll_a, coll_p, recur, sandwich, b1, b2, a1_lin,
        a1_02, a1_42, collapse_top;

    auto closed = [](int k, std::int64_t n) -> std::int64_t {
        return k == 0 ? (n + 1) / 2 : ceil_isqrt(n);
    };

    for (int k = 0; k <= max_k + 2; ++k) {
        const bool dense = k >= 2;
        const bool in_range = k <= max_k;
        if (dense) {
            fill_dense([&](std::int64_t n) { return ev.alpha(k, n); }, need_n, a_cur);
            fill_dense([&](std::int64_t n) { return ev.alpha_prime(k, n); }, need_n, p_cur);
        }
        auto A = [&](std::int64_t n) -> std::int64_t {
            return dense ? a_cur[static_cast<std::size_t>(n)] : closed(k, n);
        };
        auto P = [&](std::int64_t n) -> std::int64_t {
            return dense ? p_cur[static_cast<std::size_t>(n)] : closed(k, n);
        };
        const int par = k % 2;
        const bool have_lower = (k - 2 <= 1) || have_par[par];
        auto A2 = [&](std::int64_t n) -> std::int64_t {  // alpha_{k-2}
            return (k - 2 >= 2) ? a_par[par][static_cast<std::size_t>(n)] : closed(k - 2, n);
        };

        if (in_range) {
            for (std::int64_t n = 0; n <= max_n; ++n) {
                const std::int64_t a = A(n), p = P(n);
                if (n > 0 && a < A(n - 1)) mono_a.fail(k, n, a, A(n - 1));
                if (n > 0 && k >= 2 && p < P(n - 1)) mono_p.fail(k, n, p, P(n - 1));
                const std::int64_t shrink_from = (k >= 2) ? 1 : (k == 0 ? 2 : 3);
                if (n >= shrink_from && a >= n) shrink_a.fail(k, n, a, n);
                if (n >= shrink_from && p >= n) shrink_p.fail(k, n, p, n);
                if (!(a <= p && p <= 2 * a + 4)) sandwich.fail(k, n, p, 2 * a + 4);
                if (k >= 2 && n >= 3 && have_lower) {
                    const std::int64_t rhs = 1 + A(A2(n));
                    if (a != rhs) recur.fail(k, n, a, rhs);
                }
                if (A(2 * (n + 2)) >= 2 * (a + 2)) b1.fail(k, n, A(2 * (n + 2)), 2 * (a + 2));
                if (P(2 * (n + 2)) > 2 * (a + 2)) b2.fail(k, n, P(2 * (n + 2)), 2 * (a + 2));
            }
        }

        // Level collapse also covers k in (max_k, max_k+2] so that the claim
        // holds for every k <= max_k on the alpha_{k+2} side.
        if (k >= 2 && have_lower) {
            for (std::int64_t n = 0; n <= max_n; ++n) {
                if (A(n) > A2(n)) coll_a.fail(k, n, A(n), A2(n));
                if (k - 2 >= 2) {
                    const std::int64_t lo_p = p_par[par][static_cast<std::size_t>(n)];
                    if (P(n) > lo_p) coll_p.fail(k, n, P(n), lo_p);
                }
            }
        }

        if (k == 2) {
            for (std::int64_t n = 0; n <= max_n; ++n) {
                const std::int64_t p = P(n);
                if ((n >= 1 && p > n - 1) || (n >= 6 && p > n - 2))
                    a1_lin.fail(2, n, p, n >= 6 ? n - 2 : n - 1);
                if (n > 10 && p > (n + 1) / 2) a1_02.fail(2, n, p, (n + 1) / 2);
            }
        }
        if (k == 4) {
            for (std::int64_t n = 0; n <= max_n; ++n) {
                const std::int64_t hi = p_par[0][static_cast<std::size_t>(n)];  // alpha'_2
                if (P(n) > hi) a1_42.fail(4, n, P(n), hi);
            }
        }

        if (dense) {
            a_par[par] = a_cur;
            p_par[par] = p_cur;
            have_par[par] = true;
        }
    }

    // Collapse at k = 2*alpha(n)+2: alpha <= 4 and alpha' <= 12.
    {
        std::vector<std::int64_t> thresholds;  // A(s) for s = 0,1,...
        for (std::int64_t s = 0;; ++s) {
            thresholds.push_back(ackermann_a(static_cast<int>(s), s));
            if (thresholds.back() >= max_n || thresholds.back() >= kValueCeiling) break;
        }
        std::int64_t s = 0;
        for (std::int64_t n = 0; n <= max_n; ++n) {
            while (thresholds[static_cast<std::size_t>(s)] < n) ++s;  // s = alpha(n)
            const int ks = static_cast<int>(2 * s + 2);
            const std::int64_t a = ev.alpha(ks, n), p = ev.alpha_prime(ks, n);
            if (a > 4 || p > 12) collapse_top.fail(ks, n, a, p);
        }
    }

    auto rec = [&](const char* name, const Flaw& f) {
        report.checks.push_back({name, f.ok, f.ok ? std::string() : f.cex});
    };
    rec("monotone_alpha", mono_a);
    rec("monotone_alpha_prime", mono_p);
    rec("strict_shrink_alpha", shrink_a);
    rec("strict_shrink_alpha_prime", shrink_p);
    rec("level_collapse_alpha", coll_a);
    rec("level_collapse_alpha_prime", coll_p);
    rec("recurrence_alpha", recur);
    rec("sandwich_alpha_le_prime_le_2alpha_plus_4", sandwich);
    rec("claim_b1_doubling_strict", b1);
    rec("lemma_b2_doubling_prime", b2);
    rec("claim_a1_prime2_linear", a1_lin);
    rec("claim_a1_prime2_le_prime0_above_10", a1_02);
    rec("claim_a1_prime4_le_prime2", a1_42);
    rec("collapse_at_2alpha_plus_2", collapse_top);

    return report;
}

IdentityReport identity_suite(int max_k, std::int64_t max_n) {
    const int need_k = std::max(max_k + 2, static_cast<int>(2 * inverse_ackermann(max_n) + 2));
    AlphaEvaluator ev(need_k, 2 * max_n + 4);
    return identity_suite(ev, max_k, max_n);
}

}  // namespace hopspan::slow_funcs
