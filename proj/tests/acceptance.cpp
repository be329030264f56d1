// Acceptance suite: runs every exit criterion at full depth and prints one
// pass/fail line per criterion. All comparisons are exact. Depth can be
// scaled with --max-n / --max-t; randomized removal orders take --seed.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corequot/enumeration.hpp"
#include "corequot/littlewood.hpp"
#include "corequot/qseries.hpp"
#include "corequot/special_classes.hpp"
#include "corequot/textio.hpp"

using json = nlohmann::json;
using namespace corequot;

namespace {

struct Options {
    long long max_n = 25;
    long long max_t = 6;
    unsigned seed = 20250301;
    int order = 40;
};

struct Criterion {
    std::string title;
    std::function<bool(const Options&, std::string&)> run;
};

std::string cli_output(const std::string& args, int& exit_code) {
    std::string output;
    FILE* pipe = popen((std::string(COREQUOT_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) {
        exit_code = -1;
        return output;
    }
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        output.append(buffer, got);
    exit_code = WEXITSTATUS(pclose(pipe));
    return output;
}

bool check(bool condition, const std::string& message, std::string& detail) {
    if (!condition && detail.empty())
        detail = message;
    return condition;
}

// 1. The worked decompositions, through the CLI and the library.
bool criterion_worked_examples(const Options&, std::string& detail) {
    bool ok = true;

    int exit_code = 0;
    const std::string payload = cli_output("decompose --t 3 8,7,7,4,4,2 --json", exit_code);
    ok &= check(exit_code == 0, "CLI decompose exited nonzero", detail);
    const json expected = {{"t", 3},
                           {"core", {3, 1, 1}},
                           {"quotient", {{2}, {3, 3}, {1}}},
                           {"charvec", {-1, 0, 1}}};
    ok &= check(json::parse(payload, nullptr, false) == expected,
                "CLI decompose JSON differs from the worked example", detail);

    const Decomposition sc = decompose(Partition{8, 5, 5, 4, 3, 1, 1, 1}, 3);
    ok &= check(sc.core == Partition{1} &&
                    sc.quotient == std::vector<Partition>{Partition{1, 1}, Partition{3, 1, 1},
                                                          Partition{2}},
                "self-conjugate worked example differs", detail);
    ok &= check(verify_sc_decomposition(Partition{8, 5, 5, 4, 3, 1, 1, 1}, 3).pass,
                "self-conjugate report failed", detail);

    const Decomposition dd = decompose(Partition{9, 6, 6, 5, 3, 1, 1, 1}, 3);
    ok &= check(dd.core == Partition{2} &&
                    dd.quotient == std::vector<Partition>{Partition{2}, Partition{1, 1, 1, 1},
                                                          Partition{4}},
                "doubled distinct worked example differs", detail);
    ok &= check(verify_dd_decomposition(Partition{9, 6, 6, 5, 3, 1, 1, 1}, 3).pass,
                "doubled distinct report failed", detail);
    ok &= check(double_distinct(DistinctPartition{8, 4, 3, 1}) == Partition{9, 6, 6, 5, 3, 1, 1, 1},
                "doubling (8,4,3,1) differs", detail);
    ok &= check(to_frobenius(Partition{8, 5, 5, 4, 3, 1, 1, 1}) ==
                    FrobeniusSymbol({7, 3, 2, 0}, {7, 3, 2, 0}),
                "symbol of the self-conjugate example differs", detail);
    return ok;
}

// 2. Both bijection directions.
bool criterion_bijection(const Options& opt, std::string& detail) {
    bool ok = true;
    long long forward = 0;
    for (long long n = 0; n <= opt.max_n && ok; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            for (long long t = 1; t <= opt.max_t; ++t) {
                const Decomposition d = decompose(*p, t);
                ok &= check(compose(d.core, d.quotient, t) == *p,
                            "compose(decompose) != id at " + format_partition(*p) +
                                " t=" + std::to_string(t),
                            detail);
                ++forward;
            }
            if (!ok)
                break;
        }
    }

    for (long long t = 2; t <= 3 && ok; ++t) {
        std::vector<Partition> cores;
        for (long long n = 0; n <= 8; ++n) {
            PartitionStream stream(n, PartitionClass::t_core, t);
            while (auto core = stream.next())
                cores.push_back(*core);
        }
        std::vector<std::vector<Partition>> tuples;
        std::vector<Partition> tuple(static_cast<std::size_t>(t));
        auto rec = [&](auto&& self, long long slot, long long budget) -> void {
            if (slot == t) {
                tuples.push_back(tuple);
                return;
            }
            for (long long k = 0; k <= budget; ++k) {
                PartitionStream stream(k);
                while (auto q = stream.next()) {
                    tuple[static_cast<std::size_t>(slot)] = *q;
                    self(self, slot + 1, budget - k);
                }
            }
        };
        rec(rec, 0, 4);
        for (const Partition& core : cores) {
            for (const auto& quotient : tuples) {
                const Decomposition d = decompose(compose(core, quotient, t), t);
                ok &= check(d.core == core && d.quotient == quotient,
                            "decompose(compose) != id at core " + format_partition(core), detail);
            }
            if (!ok)
                break;
        }
    }
    if (ok)
        detail = std::to_string(forward) + " forward roundtrips";
    return ok;
}

// 3. The size identity across the same sweep as the bijection suite.
bool criterion_size_identity(const Options& opt, std::string& detail) {
    bool ok = true;
    for (long long n = 0; n <= opt.max_n && ok; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            for (long long t = 1; t <= opt.max_t; ++t) {
                const Decomposition d = decompose(*p, t);
                long long quotient_size = 0;
                for (const Partition& q : d.quotient)
                    quotient_size += q.size();
                ok &= check(n == d.core.size() + t * quotient_size,
                            "size identity failed at " + format_partition(*p) +
                                " t=" + std::to_string(t),
                            detail);
            }
            if (!ok)
                break;
        }
    }
    return ok;
}

// 4. Hook divisibility vs the symbol conditions vs the colored conditions.
bool criterion_predicates(const Options& opt, std::string& detail) {
    bool ok = true;
    for (long long n = 0; n <= opt.max_n && ok; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            const FrobeniusSymbol f = to_frobenius(*p);
            for (long long t = 1; t <= opt.max_t; ++t) {
                const bool hooks = is_t_core_bruteforce(*p, t);
                ok &= check(hooks == is_t_core_frobenius(f, t) &&
                                hooks == is_t_core_colored(to_colored(f, t)),
                            "predicates disagree at " + format_partition(*p) +
                                " t=" + std::to_string(t),
                            detail);
            }
            if (!ok)
                break;
        }
    }
    return ok;
}

// 5. The rim-hook oracle, first-box and randomized removal orders.
bool criterion_core_oracle(const Options& opt, std::string& detail) {
    bool ok = true;
    std::mt19937 rng(opt.seed);
    const long long limit = std::min<long long>(opt.max_n, 20);
    for (long long n = 0; n <= limit && ok; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            for (long long t = 1; t <= 5; ++t) {
                const Partition core = decompose(*p, t).core;
                ok &= check(core == strip_t_core(*p, t),
                            "strip oracle disagrees at " + format_partition(*p) +
                                " t=" + std::to_string(t),
                            detail);
                for (int round = 0; round < 2; ++round) {
                    Partition cur = *p;
                    for (;;) {
                        auto boxes = hooks_of_length(cur, t);
                        if (boxes.empty())
                            break;
                        std::uniform_int_distribution<std::size_t> pick(0, boxes.size() - 1);
                        const auto [i, j] = boxes[pick(rng)];
                        cur = remove_rim_hook(cur, i, j);
                    }
                    ok &= check(cur == core, "randomized removal order changed the core at " +
                                    format_partition(*p) + " t=" + std::to_string(t),
                                detail);
                }
            }
            if (!ok)
                break;
        }
    }
    return ok;
}

// 6. Hooks of length t map to hooks of length 1 in the quotient.
bool criterion_hook_transfer(const Options& opt, std::string& detail) {
    bool ok = true;
    for (long long n = 0; n <= opt.max_n && ok; ++n) {
        PartitionStream stream(n);
        while (auto p = stream.next()) {
            for (long long t = 2; t <= opt.max_t; ++t)
                ok &= check(count_hooks_of_length(*p, t) ==
                                quotient_hook1_count(decompose(*p, t)),
                            "hook transfer failed at " + format_partition(*p) +
                                " t=" + std::to_string(t),
                            detail);
            if (!ok)
                break;
        }
    }
    return ok;
}

// 7. Wright's map: the dot-diagram examples and both exhaustive roundtrips.
bool criterion_wright(const Options&, std::string& detail) {
    bool ok = true;
    const WrightImage fig21 = wright_forward(TwoRowedArray({6, 5, 3, 2, 0}, {4, 2, 1}));
    ok &= check(fig21.offset == 2 && fig21.mu == Partition{5, 5, 4, 4, 3, 3, 1},
                "first dot-diagram example differs", detail);
    const WrightImage fig22 = wright_forward(TwoRowedArray({4, 2, 1}, {6, 5, 3, 2, 0}));
    ok &= check(fig22.offset == -2 && fig22.mu == Partition{7, 6, 6, 4, 2},
                "second dot-diagram example differs", detail);
    ok &= check(array_weight(TwoRowedArray({6, 5, 3, 2, 0}, {4, 2, 1})) == 28 &&
                    array_weight(TwoRowedArray({4, 2, 1}, {6, 5, 3, 2, 0})) == 26,
                "array weights differ", detail);

    std::vector<std::vector<long long>> rows;
    {
        std::vector<long long> row;
        auto rec = [&](auto&& self, long long below) -> void {
            rows.push_back(row);
            if (row.size() == 5)
                return;
            for (long long e = below - 1; e >= 0; --e) {
                row.push_back(e);
                self(self, e);
                row.pop_back();
            }
        };
        rec(rec, 12);
    }
    long long arrays = 0;
    for (const auto& top : rows) {
        for (const auto& bottom : rows) {
            const TwoRowedArray a(top, bottom);
            const WrightImage image = wright_forward(a);
            ++arrays;
            if (staircase_size(image.offset) + image.mu.size() != array_weight(a) ||
                wright_backward(image.offset, image.mu) != a) {
                ok = check(false, "array roundtrip failed at " + format_array(a), detail);
                break;
            }
        }
        if (!ok)
            break;
    }
    for (long long d = -4; d <= 4 && ok; ++d) {
        for (long long n = 0; n <= 15 && ok; ++n) {
            PartitionStream stream(n);
            while (auto mu = stream.next()) {
                const TwoRowedArray a = wright_backward(d, *mu);
                const WrightImage image = wright_forward(a);
                if (image.offset != d || image.mu != *mu ||
                    array_weight(a) != staircase_size(d) + n) {
                    ok = check(false, "image roundtrip failed at d=" + std::to_string(d) + " mu=" +
                                   format_partition(*mu),
                               detail);
                    break;
                }
            }
        }
    }
    if (ok)
        detail = std::to_string(arrays) + " arrays round-tripped";
    return ok;
}

// 8. Every generating-function identity at order 40, both parities of t.
bool criterion_generating_functions(const Options& opt, std::string& detail) {
    bool ok = true;
    auto absorb = [&](const IdentityReport& report) {
        if (!report.pass()) {
            const CheckResult* failure = report.first_failure();
            std::ostringstream msg;
            msg << report.identity << ": " << failure->name;
            if (failure->mismatch_exponent >= 0)
                msg << " first mismatch at q^" << failure->mismatch_exponent << " (lhs "
                    << failure->lhs << ", rhs " << failure->rhs << ")";
            check(false, msg.str(), detail);
            ok = false;
        }
    };
    for (long long t = 2; t <= 5; ++t)
        absorb(verify_littlewood_gf(t, opt.order));
    absorb(jacobi_triple_product_check(opt.order, laurent_window_bound(opt.order) + 4));
    for (long long t = 1; t <= 5; ++t)
        absorb(verify_constant_term_gf(t, opt.order));
    for (long long t = 2; t <= 5; ++t)
        absorb(gf_self_conjugate(t, opt.order));
    for (long long t = 2; t <= 5; ++t)
        absorb(gf_doubled_distinct(t, opt.order));
    return ok;
}

// 9. The colored Frobenius counts.
bool criterion_colored_counts(const Options&, std::string& detail) {
    bool ok = check(count_colored_frobenius(2, 2) == 9, "2-colored count of 2 differs", detail);
    for (long long n = 0; n <= 10; ++n)
        ok &= check(count_colored_frobenius(n, 1) == count_partitions(n),
                    "1-colored count differs from p(" + std::to_string(n) + ")", detail);
    return ok;
}

// 10. Structural sweeps for self-conjugate and doubled distinct partitions.
bool criterion_class_sweeps(const Options& opt, std::string& detail) {
    bool ok = true;
    long long checked = 0;
    const long long limit = std::min<long long>(opt.max_n, 20);
    for (long long n = 0; n <= limit && ok; ++n) {
        for (long long t = 2; t <= 5; ++t) {
            PartitionStream sc(n, PartitionClass::self_conjugate);
            while (auto p = sc.next()) {
                ++checked;
                ok &= check(verify_sc_decomposition(*p, t).pass,
                            "self-conjugate sweep failed at " + format_partition(*p) +
                                " t=" + std::to_string(t),
                            detail);
            }
            PartitionStream dd(n, PartitionClass::doubled_distinct);
            while (auto p = dd.next()) {
                ++checked;
                ok &= check(verify_dd_decomposition(*p, t).pass,
                            "doubled distinct sweep failed at " + format_partition(*p) +
                                " t=" + std::to_string(t),
                            detail);
            }
        }
    }
    if (ok)
        detail = std::to_string(checked) + " reports, all conditions green";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"acceptance suite"};
    app.add_option("--max-n", opt.max_n, "sweep depth (default 25)");
    app.add_option("--max-t", opt.max_t, "largest modulus in the sweeps (default 6)");
    app.add_option("--seed", opt.seed, "seed for randomized removal orders");
    app.add_option("--order", opt.order, "series truncation order (default 40)");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {"worked-example fidelity (running, self-conjugate, doubled distinct)",
         criterion_worked_examples},
        {"bijection suite: compose/decompose both directions, t in 1.." +
             std::to_string(opt.max_t),
         criterion_bijection},
        {"size identity |p| = |core| + t*|quotient| over the full sweep",
         criterion_size_identity},
        {"core-predicate equivalence (hooks = symbol = colored)", criterion_predicates},
        {"core oracle: decompose vs rim-hook stripping, randomized orders", criterion_core_oracle},
        {"hook transfer: t-hooks of p = 1-hooks of its quotient", criterion_hook_transfer},
        {"Wright suite: dot-diagram examples and exhaustive roundtrips", criterion_wright},
        {"generating-function identities at order " + std::to_string(opt.order),
         criterion_generating_functions},
        {"colored Frobenius counts", criterion_colored_counts},
        {"self-conjugate / doubled distinct decomposition sweeps", criterion_class_sweeps},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        const bool pass = criteria[i].run(opt, detail);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << i + 1
                  << ": " << criteria[i].title;
        if (!detail.empty())
            std::cout << " -- " << detail;
        std::cout << " [" << ms << " ms]" << std::endl;
        if (!pass)
            ++failures;
    }
    std::cout << "acceptance: " << criteria.size() - failures << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
