#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corequot/enumeration.hpp"
#include "corequot/littlewood.hpp"
#include "corequot/qseries.hpp"
#include "corequot/special_classes.hpp"
#include "corequot/textio.hpp"

using json = nlohmann::ordered_json;
using namespace corequot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

json partition_json(const Partition& p) {
    return json(p.parts());
}

json frobenius_json(const FrobeniusSymbol& f) {
    return json{{"top", f.top}, {"bottom", f.bottom}};
}

json colored_json(const ColoredFrobeniusSymbol& c) {
    auto row = [](const std::vector<ColoredInteger>& entries) {
        json out = json::array();
        for (const ColoredInteger& e : entries)
            out.push_back(json::array({e.value, e.color}));
        return out;
    };
    return json{{"top", row(c.top)}, {"bottom", row(c.bottom)}};
}

json array_json(const TwoRowedArray& a) {
    return json{{"top", a.top}, {"bottom", a.bottom}};
}

json decomposition_json(const Decomposition& d) {
    json quotient = json::array();
    for (const Partition& q : d.quotient)
        quotient.push_back(q.parts());
    return json{{"t", d.modulus},
                {"core", d.core.parts()},
                {"quotient", quotient},
                {"charvec", d.charvec}};
}

json class_report_json(const ClassReport& report) {
    json checks = json::object();
    for (const auto& [name, ok] : report.checks)
        checks[name] = ok;
    return json{{"input", report.input.parts()},
                {"t", report.modulus},
                {"checks", checks},
                {"pass", report.pass}};
}

void print_decomposition_text(const Decomposition& d) {
    std::cout << "core: " << format_partition(d.core) << '\n';
    for (std::size_t j = 0; j < d.quotient.size(); ++j)
        std::cout << "quotient[" << j << "]: " << format_partition(d.quotient[j]) << '\n';
    std::cout << "charvec: ";
    for (std::size_t j = 0; j < d.charvec.size(); ++j)
        std::cout << (j ? "," : "") << d.charvec[j];
    std::cout << '\n';
}

PartitionClass parse_class(const std::string& name) {
    if (name == "all")
        return PartitionClass::all;
    if (name == "tcore")
        return PartitionClass::t_core;
    if (name == "sc" || name == "self-conjugate")
        return PartitionClass::self_conjugate;
    if (name == "dd" || name == "doubled-distinct")
        return PartitionClass::doubled_distinct;
    if (name == "distinct")
        return PartitionClass::distinct;
    throw std::invalid_argument("unknown class '" + name +
                                "' (expected all|tcore|self-conjugate|doubled-distinct|distinct)");
}

Partition random_partition(std::mt19937& rng, long long max_size) {
    std::uniform_int_distribution<long long> size_dist(0, max_size);
    long long budget = size_dist(rng);
    std::vector<long long> parts;
    long long cap = budget;
    while (budget > 0) {
        std::uniform_int_distribution<long long> part_dist(1, std::min(cap, budget));
        const long long part = part_dist(rng);
        parts.push_back(part);
        cap = part;
        budget -= part;
    }
    return Partition(std::move(parts));
}

struct VerifyOptions {
    std::string name;
    long long t = 0;
    int order = 40;
    int window = 0;  // 0: derived from the order
    long long max_n = -1;
    long long max_t = 6;
    unsigned seed = 1;
    bool json_out = false;
};

long long enum_depth(const VerifyOptions& opt) {
    if (opt.max_n >= 0)
        return opt.max_n;
    if (const char* env = std::getenv("COREQUOT_MAX_N"))
        return std::atoll(env);
    return -1;  // full order
}

int run_verify(const VerifyOptions& opt) {
    IdentityReport report;
    std::vector<ClassReport> failing_reports;
    const long long depth = enum_depth(opt);

    if (opt.name == "frobenius-gf") {
        report = verify_constant_term_gf(opt.t > 0 ? opt.t : 1, opt.order, depth);
    } else if (opt.name == "jtp") {
        const int window =
            opt.window > 0 ? opt.window : laurent_window_bound(opt.order) + 4;
        report = jacobi_triple_product_check(opt.order, window);
    } else if (opt.name == "littlewood") {
        report = verify_littlewood_gf(opt.t, opt.order);
        // Seeded spot-check of the bijection behind the identity.
        std::mt19937 rng(opt.seed);
        const long long sweep = depth >= 0 ? depth : 25;
        bool ok = true;
        for (int round = 0; round < 200 && ok; ++round) {
            const Partition p = random_partition(rng, sweep);
            for (long long t = 1; t <= opt.max_t && ok; ++t) {
                const Decomposition d = decompose(p, t);
                long long quotient_size = 0;
                for (const Partition& q : d.quotient)
                    quotient_size += q.size();
                ok = compose(d.core, d.quotient, t) == p &&
                     p.size() == d.core.size() + t * quotient_size;
            }
        }
        CheckResult spot;
        spot.name = "bijection spot-check (200 seeded samples, t <= " +
                    std::to_string(opt.max_t) + ")";
        spot.pass = ok;
        report.checks.push_back(std::move(spot));
    } else if (opt.name == "tcore-theta") {
        report = verify_theta_tcore(opt.t, opt.order, depth);
    } else if (opt.name == "sc" || opt.name == "dd") {
        const bool sc = opt.name == "sc";
        report = sc ? gf_self_conjugate(opt.t, opt.order, depth)
                    : gf_doubled_distinct(opt.t, opt.order, depth);
        const long long sweep = depth >= 0 ? depth : 20;
        bool all_pass = true;
        long long checked = 0;
        for (long long n = 0; n <= sweep; ++n) {
            PartitionStream stream(n, sc ? PartitionClass::self_conjugate
                                         : PartitionClass::doubled_distinct);
            while (auto p = stream.next()) {
                const ClassReport cr = sc ? verify_sc_decomposition(*p, opt.t)
                                          : verify_dd_decomposition(*p, opt.t);
                ++checked;
                if (!cr.pass) {
                    all_pass = false;
                    failing_reports.push_back(cr);
                }
            }
        }
        CheckResult sweep_check;
        sweep_check.name = "decomposition sweep (" + std::to_string(checked) +
                           " partitions, n <= " + std::to_string(sweep) + ")";
        sweep_check.pass = all_pass;
        report.checks.push_back(std::move(sweep_check));
    } else {
        throw std::invalid_argument(
            "unknown identity '" + opt.name +
            "' (expected frobenius-gf|jtp|littlewood|tcore-theta|sc|dd)");
    }

    if (opt.json_out) {
        json checks = json::array();
        for (const CheckResult& c : report.checks) {
            json entry{{"name", c.name}, {"pass", c.pass}};
            if (!c.pass && c.mismatch_exponent >= 0) {
                entry["mismatch_exponent"] = c.mismatch_exponent;
                entry["lhs"] = c.lhs.str();
                entry["rhs"] = c.rhs.str();
            }
            checks.push_back(std::move(entry));
        }
        json out{{"identity", report.identity},
                 {"order", opt.order},
                 {"pass", report.pass()},
                 {"checks", checks}};
        if (opt.t > 0)
            out["t"] = opt.t;
        if (!failing_reports.empty()) {
            json reports = json::array();
            for (const ClassReport& cr : failing_reports)
                reports.push_back(class_report_json(cr));
            out["failing_reports"] = reports;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const CheckResult& c : report.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << '\n';
            if (!c.pass && c.mismatch_exponent >= 0)
                std::cout << "       first differing coefficient at q^" << c.mismatch_exponent
                          << ": lhs=" << c.lhs << " rhs=" << c.rhs << '\n';
        }
        for (const ClassReport& cr : failing_reports) {
            std::cout << "       failing input: " << format_partition(cr.input) << " checks:";
            for (const auto& [name, ok] : cr.checks)
                if (!ok)
                    std::cout << ' ' << name;
            std::cout << '\n';
        }
    }
    return report.pass() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-cores, t-quotients, and Frobenius symbols of integer partitions"};
    app.require_subcommand(1);

    bool json_out = false;
    bool invert = false;
    bool with_hooks = false;
    long long t = 0;
    long long offset = 0;
    std::string input;
    std::string class_name = "all";
    long long n = 0;
    std::string core_text;
    std::vector<std::string> quotient_texts;
    std::string from_json;
    VerifyOptions verify;

    auto* cmd_frobenius =
        app.add_subcommand("frobenius", "Frobenius symbol of a partition (or back)");
    cmd_frobenius->add_option("input", input, "partition, or symbol with --invert")->required();
    cmd_frobenius->add_flag("--invert", invert, "decode a symbol back to its partition");
    cmd_frobenius->add_flag("--json", json_out);

    auto* cmd_colored =
        app.add_subcommand("colored", "t-colored Frobenius symbol of a partition (or back)");
    cmd_colored->add_option("input", input, "partition, or colored symbol with --invert")
        ->required();
    cmd_colored->add_option("--t", t, "modulus")->required();
    cmd_colored->add_flag("--invert", invert);
    cmd_colored->add_flag("--json", json_out);

    auto* cmd_wright = app.add_subcommand("wright", "Wright's map on a two-rowed array");
    cmd_wright->add_option("input", input, "array 'a1 a2 .. / b1 b2 ..', or partition with --invert")
        ->required();
    cmd_wright->add_flag("--invert", invert, "rebuild the array from --d and a partition");
    cmd_wright->add_option("--d", offset, "staircase offset (with --invert)");
    cmd_wright->add_flag("--json", json_out);

    auto* cmd_decompose = app.add_subcommand("decompose", "core, quotient, and charvec at t");
    cmd_decompose->add_option("partition", input)->required();
    cmd_decompose->add_option("--t", t, "modulus")->required();
    cmd_decompose->add_flag("--json", json_out);

    auto* cmd_compose = app.add_subcommand("compose", "rebuild a partition from core and quotient");
    cmd_compose->add_option("--t", t, "modulus");
    cmd_compose->add_option("--core", core_text, "t-core partition");
    cmd_compose->add_option("--quotient", quotient_texts, "quotient component (repeat t times)");
    cmd_compose->add_option("--from-json", from_json,
                            "read a decompose --json payload from a file, or '-' for stdin");
    cmd_compose->add_flag("--json", json_out);

    auto* cmd_core = app.add_subcommand("core", "the t-core");
    cmd_core->add_option("partition", input)->required();
    cmd_core->add_option("--t", t, "modulus")->required();
    cmd_core->add_flag("--json", json_out);

    auto* cmd_quotient = app.add_subcommand("quotient", "the t-quotient, one component per line");
    cmd_quotient->add_option("partition", input)->required();
    cmd_quotient->add_option("--t", t, "modulus")->required();
    cmd_quotient->add_flag("--json", json_out);

    auto* cmd_charvec = app.add_subcommand("charvec", "the characteristic vector");
    cmd_charvec->add_option("partition", input)->required();
    cmd_charvec->add_option("--t", t, "modulus")->required();
    cmd_charvec->add_flag("--json", json_out);

    std::string method = "all";
    auto* cmd_iscore = app.add_subcommand("is-core", "test whether a partition is a t-core");
    cmd_iscore->add_option("partition", input)->required();
    cmd_iscore->add_option("--t", t, "modulus")->required();
    cmd_iscore->add_option("--method", method, "hooks|frobenius|colored|all (default all)");
    cmd_iscore->add_flag("--json", json_out);

    auto* cmd_hooks = app.add_subcommand("hooks", "hook multiset, or the count of hooks of length t");
    cmd_hooks->add_option("partition", input)->required();
    cmd_hooks->add_option("--t", t, "count hooks of exactly this length");
    cmd_hooks->add_flag("--json", json_out);

    auto* cmd_double = app.add_subcommand("double", "doubled distinct partition of a distinct one");
    cmd_double->add_option("partition", input)->required();
    cmd_double->add_flag("--json", json_out);

    auto* cmd_list = app.add_subcommand("list", "list the partitions of n");
    cmd_list->add_option("n", n)->required();
    cmd_list->add_option("--class", class_name,
                         "all|tcore|self-conjugate|doubled-distinct|distinct");
    cmd_list->add_option("--t", t, "modulus for --class tcore");
    cmd_list->add_flag("--json", json_out);

    auto* cmd_count = app.add_subcommand("count", "count the partitions of n");
    cmd_count->add_option("n", n)->required();
    cmd_count->add_option("--class", class_name,
                          "all|tcore|self-conjugate|doubled-distinct|distinct");
    cmd_count->add_option("--t", t, "modulus for --class tcore");
    cmd_count->add_flag("--json", json_out);

    auto* cmd_verify = app.add_subcommand("verify", "check a generating-function identity");
    cmd_verify->add_option("identity", verify.name,
                           "frobenius-gf|jtp|littlewood|tcore-theta|sc|dd")
        ->required();
    cmd_verify->add_option("--t", verify.t, "modulus");
    cmd_verify->add_option("--order", verify.order, "truncation order (default 40)");
    cmd_verify->add_option("--window", verify.window, "z-window for jtp");
    cmd_verify->add_option("--max-n", verify.max_n,
                           "depth of enumeration cross-checks and sweeps");
    cmd_verify->add_option("--max-t", verify.max_t, "spot-check moduli bound (littlewood)");
    cmd_verify->add_option("--seed", verify.seed, "seed for randomized spot-checks");
    cmd_verify->add_flag("--json", json_out);

    auto* cmd_render = app.add_subcommand("render", "ASCII Young diagram");
    cmd_render->add_option("partition", input)->required();
    cmd_render->add_flag("--hooks", with_hooks, "show hook lengths in the boxes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_frobenius) {
            if (invert) {
                const Partition p = from_frobenius(parse_frobenius(input));
                std::cout << (json_out ? partition_json(p).dump() : format_partition(p)) << '\n';
            } else {
                const FrobeniusSymbol f = to_frobenius(parse_partition(input));
                std::cout << (json_out ? frobenius_json(f).dump() : format_frobenius(f)) << '\n';
            }
        } else if (*cmd_colored) {
            if (invert) {
                const Partition p = from_frobenius(from_colored(parse_colored(input, t)));
                std::cout << (json_out ? partition_json(p).dump() : format_partition(p)) << '\n';
            } else {
                const ColoredFrobeniusSymbol c = to_colored(to_frobenius(parse_partition(input)), t);
                std::cout << (json_out ? colored_json(c).dump() : format_colored(c)) << '\n';
            }
        } else if (*cmd_wright) {
            if (invert) {
                const TwoRowedArray a = wright_backward(offset, parse_partition(input));
                std::cout << (json_out ? array_json(a).dump() : format_array(a)) << '\n';
            } else {
                const WrightImage image = wright_forward(parse_array(input));
                if (json_out) {
                    std::cout << json{{"d", image.offset}, {"mu", image.mu.parts()}}.dump()
                              << '\n';
                } else {
                    std::cout << "d: " << image.offset << '\n'
                              << "mu: " << format_partition(image.mu) << '\n';
                }
            }
        } else if (*cmd_decompose) {
            const Decomposition d = decompose(parse_partition(input), t);
            if (json_out)
                std::cout << decomposition_json(d).dump(2) << '\n';
            else
                print_decomposition_text(d);
        } else if (*cmd_compose) {
            Partition core;
            std::vector<Partition> quotient;
            if (!from_json.empty()) {
                json payload;
                if (from_json == "-") {
                    payload = json::parse(std::cin);
                } else {
                    std::ifstream in(from_json);
                    if (!in)
                        throw std::invalid_argument("cannot open '" + from_json + "'");
                    payload = json::parse(in);
                }
                t = payload.at("t").get<long long>();
                core = Partition(payload.at("core").get<std::vector<long long>>());
                for (const auto& q : payload.at("quotient"))
                    quotient.emplace_back(q.get<std::vector<long long>>());
                if (payload.contains("charvec")) {
                    const auto charvec = payload.at("charvec").get<std::vector<long long>>();
                    if (charvec != core_char_vector(core, t))
                        throw std::invalid_argument("charvec in payload disagrees with the core");
                }
            } else {
                core = parse_partition(core_text);
                for (const std::string& q : quotient_texts)
                    quotient.push_back(parse_partition(q));
            }
            const Partition p = compose(core, quotient, t);
            std::cout << (json_out ? partition_json(p).dump() : format_partition(p)) << '\n';
        } else if (*cmd_core) {
            const Partition core = decompose(parse_partition(input), t).core;
            std::cout << (json_out ? partition_json(core).dump() : format_partition(core)) << '\n';
        } else if (*cmd_quotient) {
            const Decomposition d = decompose(parse_partition(input), t);
            if (json_out) {
                json quotient = json::array();
                for (const Partition& q : d.quotient)
                    quotient.push_back(q.parts());
                std::cout << quotient.dump() << '\n';
            } else {
                for (const Partition& q : d.quotient)
                    std::cout << format_partition(q) << '\n';
            }
        } else if (*cmd_charvec) {
            const std::vector<long long> w = char_vector(parse_partition(input), t);
            if (json_out) {
                std::cout << json(w).dump() << '\n';
            } else {
                for (std::size_t j = 0; j < w.size(); ++j)
                    std::cout << (j ? "," : "") << w[j];
                std::cout << '\n';
            }
        } else if (*cmd_iscore) {
            const Partition p = parse_partition(input);
            bool result = false;
            if (method == "hooks") {
                result = is_t_core_bruteforce(p, t);
            } else if (method == "frobenius") {
                result = is_t_core_frobenius(to_frobenius(p), t);
            } else if (method == "colored") {
                result = is_t_core_colored(to_colored(to_frobenius(p), t));
            } else if (method == "all") {
                result = is_t_core_bruteforce(p, t);
                if (result != is_t_core_frobenius(to_frobenius(p), t) ||
                    result != is_t_core_colored(to_colored(to_frobenius(p), t)))
                    throw std::logic_error("t-core predicates disagree");
            } else {
                throw std::invalid_argument("unknown method '" + method + "'");
            }
            if (json_out)
                std::cout << json{{"partition", p.parts()}, {"t", t}, {"is_core", result}}.dump()
                          << '\n';
            else
                std::cout << (result ? "true" : "false") << '\n';
        } else if (*cmd_hooks) {
            const Partition p = parse_partition(input);
            if (cmd_hooks->count("--t") > 0) {
                const long long count = count_hooks_of_length(p, t);
                std::cout << (json_out ? json(count).dump() : std::to_string(count)) << '\n';
            } else {
                const std::vector<long long> hooks = hook_multiset(p);
                if (json_out) {
                    std::cout << json(hooks).dump() << '\n';
                } else {
                    for (std::size_t i = 0; i < hooks.size(); ++i)
                        std::cout << (i ? " " : "") << hooks[i];
                    std::cout << '\n';
                }
            }
        } else if (*cmd_double) {
            const Partition p = double_distinct(DistinctPartition(parse_partition(input)));
            std::cout << (json_out ? partition_json(p).dump() : format_partition(p)) << '\n';
        } else if (*cmd_list || *cmd_count) {
            const PartitionClass cls = parse_class(class_name);
            PartitionStream stream(n, cls, cls == PartitionClass::t_core ? t : 0);
            if (*cmd_count) {
                long long count = 0;
                while (stream.next())
                    ++count;
                std::cout << (json_out ? json(count).dump() : std::to_string(count)) << '\n';
            } else if (json_out) {
                json out = json::array();
                while (auto p = stream.next())
                    out.push_back(p->parts());
                std::cout << out.dump() << '\n';
            } else {
                while (auto p = stream.next())
                    std::cout << format_partition(*p) << '\n';
            }
        } else if (*cmd_verify) {
            verify.json_out = json_out;
            return run_verify(verify);
        } else if (*cmd_render) {
            std::cout << render_young(parse_partition(input), with_hooks);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
