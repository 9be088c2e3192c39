// Acceptance suite: one PASS/FAIL line per criterion, each with its
// worst observed gap and wall-clock time. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "trigdunkl/format.hpp"
#include "trigdunkl/verify.hpp"

using namespace trigdunkl;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    double time_limit;  // seconds; 0 for none
    std::function<Outcome()> run;
};

// All rows of `suite` whose check name is in `checks` (every row if empty).
std::vector<CheckRow> rows_of(Suite suite, const std::vector<std::string>& checks = {}) {
    std::vector<CheckRow> out;
    for (CheckRow& r : run_suite(suite)) {
        bool keep = checks.empty();
        for (const std::string& c : checks) keep = keep || r.check == c;
        if (keep) out.push_back(std::move(r));
    }
    return out;
}

// Rows with a tolerance report their largest gap relative to it; pass/fail
// flag rows (tol = 0) report the first failure, if any.
Outcome summarize(const std::vector<CheckRow>& rows) {
    if (rows.empty()) return Outcome{false, "no checks ran"};
    std::size_t failed = 0;
    const CheckRow* worst = nullptr;
    const CheckRow* first_failure = nullptr;
    for (const CheckRow& r : rows) {
        if (!r.pass) {
            ++failed;
            if (!first_failure) first_failure = &r;
        }
        if (r.tol > 0.0 && (!worst || r.gap / r.tol > worst->gap / worst->tol)) worst = &r;
    }
    std::string detail = std::to_string(rows.size()) + " checks, " + std::to_string(failed) + " failed";
    if (worst) detail += ", worst " + worst->check + " gap " + format_double(worst->gap) + " at " + worst->point;
    if (!worst && first_failure)
        detail += ", first failure " + first_failure->check + " (" + format_double(first_failure->gap) + ") at " +
                  first_failure->point;
    return Outcome{failed == 0, detail};
}

Outcome both(Outcome a, const Outcome& b) {
    return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const std::vector<Criterion> criteria = {
        {"AC1", "eigenfunction identity V e^{i lambda .} = G", 30.0, [] { return summarize(rows_of(Suite::eigen)); }},
        {"AC2", "kernel vs. Jacobi-kernel assembly", 10.0,
         [] { return summarize(rows_of(Suite::kernel_consistency, {"kernel-oracle"})); }},
        {"AC3", "integration by parts and derivative of K~", 0.0,
         [] {
             return both(summarize(rows_of(Suite::kernel_consistency, {"ktilde-byparts"})),
                         summarize(rows_of(Suite::kernel_consistency, {"dktilde-fd"})));
         }},
        {"AC4", "limit kernels at k1 = 0 and k2 = 0", 0.0,
         [] {
             return both(summarize(rows_of(Suite::limits, {"limit-k1"})),
                         summarize(rows_of(Suite::limits, {"limit-k2"})));
         }},
        {"AC5", "strict positivity of the kernel", 0.0, [] { return summarize(rows_of(Suite::positivity)); }},
        {"AC6", "duality of V and tV", 0.0, [] { return summarize(rows_of(Suite::duality)); }},
        {"AC7", "intertwining D V = V d/dx", 0.0, [] { return summarize(rows_of(Suite::intertwine)); }},
        {"AC8", "Cherednik operator forms and eigenvalue", 0.0,
         [] {
             return both(summarize(rows_of(Suite::cherednik, {"cherednik-forms"})),
                         summarize(rows_of(Suite::cherednik, {"cherednik-eigen"})));
         }},
        {"AC9", "delta_0 o V = delta_0 as a limit", 0.0, [] { return summarize(rows_of(Suite::delta0)); }},
        {"AC10", "quadrature self-tests and suite wall clock", 0.0,
         [&start] {
             Outcome o = summarize(rows_of(Suite::quadrature));
             const double total = std::chrono::duration<double>(clock::now() - start).count();
             o.detail += "; full suite " + format_double(total) + " s, budget 60 s";
             o.pass = o.pass && total < 60.0;
             return o;
         }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = Outcome{false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (c.time_limit > 0.0 && secs > c.time_limit) {
            o.pass = false;
            o.detail += "; runtime above " + format_double(c.time_limit) + " s";
        }
        if (!o.pass) ++failures;
        std::printf("%s %-5s %-45s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
