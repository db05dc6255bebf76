/* Acceptance gate: every headline claim at its full bound, exact integers
 * only, one verdict line per criterion. Exits nonzero on any failure. */

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "rrg/verify.hpp"

namespace {

int failures = 0;

void verdict(const char* name, bool pass, const std::string& detail) {
    std::printf("%s %s%s%s\n", pass ? "PASS" : "FAIL", name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string first_failure(const rrg::VerificationReport& r) {
    for (const rrg::CheckResult& c : r.checks)
        if (!c.pass)
            return c.name + " (" + c.params + "): expected " + c.expected + ", got " +
                   c.actual;
    return {};
}

void run_report(const char* name, const std::string& suite, const rrg::VerifyOptions& o) {
    try {
        const rrg::VerificationReport r = rrg::run_suite(suite, o);
        verdict(name, r.all_pass(), first_failure(r));
    } catch (const std::exception& e) {
        verdict(name, false, e.what());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return in ? buf.str() : std::string("<unreadable: " + path + ">");
}

}  // namespace

int main() {
    rrg::VerifyOptions o;
    o.log_progress = true;  // progress to stderr, verdicts to stdout

    /* 1. each sum side matches brute-force enumeration, x and q through 50 */
    {
        rrg::VerifyOptions c = o;
        c.qmax = 50;
        run_report("criterion-1 sum-sides-vs-enumeration", "theorem", c);
    }

    /* 2. at x=1 each sum side matches the classical product, q through 200 */
    {
        rrg::VerifyOptions c = o;
        c.qmax = 200;
        run_report("criterion-2 sum-sides-vs-products", "rrg", c);
    }

    /* 3. the double sum matches the product and the a=3 sum, q through 200 */
    {
        rrg::VerifyOptions c = o;
        c.qmax = 200;
        run_report("criterion-3 double-sum", "andrews", c);
    }

    /* 4. both roundtrips are the identity for every weight through 35 */
    {
        rrg::VerifyOptions c = o;
        c.max_weight = 35;
        run_report("criterion-4 bijection-roundtrips", "bijection", c);
    }

    /* 5. the worked sessions reproduce byte for byte, embedded and on disk */
    {
        try {
            const rrg::VerificationReport r = rrg::run_suite("examples", o);
            bool pass = r.all_pass();
            std::string detail = first_failure(r);
            const std::string backward = slurp(std::string(GOLDEN_DIR) +
                                               "/example21_backward.txt");
            const std::string forward = slurp(std::string(GOLDEN_DIR) +
                                              "/example22_forward.txt");
            if (pass && backward != rrg::golden_backward_session_a3()) {
                pass = false;
                detail = "example21_backward.txt differs from the embedded session";
            }
            if (pass && forward != rrg::golden_forward_session_a2()) {
                pass = false;
                detail = "example22_forward.txt differs from the embedded session";
            }
            verdict("criterion-5 worked-examples", pass, detail);
        } catch (const std::exception& e) {
            verdict("criterion-5 worked-examples", false, e.what());
        }
    }

    /* 6. the constructed base is the unique minimum for every shape to 6 */
    run_report("criterion-6 base-partitions", "base", o);

    /* 7. classical sanity counts, Euler through 100 */
    {
        rrg::VerifyOptions c = o;
        c.qmax = 100;
        run_report("criterion-7 sanity-counts", "sanity", c);
    }

    if (failures) std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    else std::printf("ACCEPTANCE: all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
