#pragma once

// Exhaustive verification sweeps. Each check compares exact integer
// quantities and tallies cases; nothing here uses a tolerance.

#include "hurwitz/metacomm.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

struct VerifyScope {
    std::int64_t p_max = 13;
    std::int64_t q_max = 13;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
};

struct VerifyReport {
    static constexpr std::size_t kMaxFailures = 10;

    std::string check;
    VerifyScope scope;
    std::size_t cases_run = 0;
    std::size_t cases_failed = 0;
    std::vector<std::string> first_failures;
    std::map<std::string, std::size_t> tallies;
    double elapsed_seconds = 0.0;

    bool ok() const { return cases_run > 0 && cases_failed == 0; }

    template <typename Describe>
    void record(bool pass, Describe&& describe) {
        ++cases_run;
        if (pass) return;
        ++cases_failed;
        if (first_failures.size() < kMaxFailures) first_failures.push_back(describe());
    }
};

/// Names accepted by run_check, in a stable order.
const std::vector<std::string>& check_names();

/// Scope a check uses when the caller does not override it.
VerifyScope default_scope(std::string_view check);

/// Every MetaQuery with odd prime p ≤ p_max, prime q ≤ q_max, q ≠ p and
/// N(Q) = q, ordered by (p, q, doubled coordinates of Q).
std::vector<MetaQuery> sweep_queries(std::int64_t p_max, std::int64_t q_max);

/// Class counts and conic counts equal p+1; trace_zero_rep is a bijection (p ≤ 13).
VerifyReport verify_counts(const VerifyScope& scope);
/// Splitting map: products, sums, det = norm, trace = trace, defining relations, inverse.
VerifyReport verify_phi(const VerifyScope& scope);
/// meta_divide = meta_conj = meta_permutation, and P·Q = Q'·P' exactly.
VerifyReport verify_oracle(const VerifyScope& scope);
/// Permutation sign equals (q/p).
VerifyReport verify_signs(const VerifyScope& scope);
/// Fixed points equal 1 + ((tr² − 4q)/p), or p+1 for central Q̄.
VerifyReport verify_fixed(const VerifyScope& scope);
/// Non-trivial cycles share one length dividing p+1, p or p−1 by fixed count.
VerifyReport verify_cycles(const VerifyScope& scope);
/// Brute-force order census equals order_count for every k.
VerifyReport verify_orders(const VerifyScope& scope);

/// Dispatches by name; throws Error for an unknown check. Fills elapsed_seconds.
VerifyReport run_check(std::string_view check, const VerifyScope& scope);

nlohmann::json to_json(const VerifyReport& report, bool with_elapsed);

} // namespace hurwitz
