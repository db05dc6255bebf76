#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrg/bijection.hpp"
#include "rrg/partition.hpp"

namespace rrg {

struct CheckResult {
    std::string name;
    std::string params;
    bool pass = false;
    std::string expected;
    std::string actual;
    double elapsed_ms = 0.0;  // logged to stderr only, never serialized
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    // Both serializations are deterministic for fixed inputs: fixed
    // ordering, no timings, no timestamps.
    std::string to_text() const;
    std::string to_json() const;
};

struct VerifyOptions {
    int a = 0;           // 0 = all of 1, 2, 3
    int qmax = 0;        // 0 = per-suite default
    int max_weight = 35; // bijection roundtrip bound
    int threads = 0;     // 0 = hardware parallelism
    bool log_progress = true;
};

/* Suites, in report order when run as "all":
 *   theorem    sum sides match enumeration cell by cell (default q <= 50)
 *   rrg        sum sides at x=1 match the product sides (default q <= 200)
 *   andrews    double sum matches product and t3 at x=1 (default q <= 200)
 *   bijection  roundtrips both directions through weight max_weight
 *   examples   the two worked move sessions, byte-exact
 *   base       minimal_with_shape agrees with base_partition, m,n <= 6
 *   sanity     classical counts: p(4), Euler, first identities at n=9 */
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options);

std::vector<std::string> suite_names();

/* Canonical text of a full backward (to_triple) or forward (from_triple)
 * session: header, every move with its snapshot, and the end state. */
std::string format_backward_session(int a, const Partition& lambda);
std::string format_forward_session(const MoveTriple& t);

/* The two checked-in reference sessions the examples suite compares
 * against. */
std::string_view golden_backward_session_a3();
std::string_view golden_forward_session_a2();

}  // namespace rrg
