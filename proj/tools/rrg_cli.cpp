/* rrg — count, expand, transform and verify Rogers-Ramanujan-Gordon partitions (k=3). */

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "rrg/bijection.hpp"
#include "rrg/enumerate.hpp"
#include "rrg/partition.hpp"
#include "rrg/qseries.hpp"
#include "rrg/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

/* Bad data (as opposed to bad flags) reports a machine-readable reason. */
int bad_input(const std::string& where, const std::string& reason) {
    nlohmann::json j;
    j["error"] = reason;
    j["where"] = where;
    std::cout << j.dump() << "\n";
    return kExitBadInput;
}

struct CountArgs {
    std::string side = "difference";
    int k = 3;
    int a = 1;
    int max_n = 40;
    bool by_parts = false;
    int threads = 0;
};

int run_count(const CountArgs& args) {
    const rrg::Side side =
        args.side == "modulus" ? rrg::Side::modulus : rrg::Side::difference;
    const rrg::CountTable table = rrg::count_table(args.k, args.a, side, args.max_n,
                                                   args.threads);
    std::cout << (args.by_parts ? table.to_tsv() : table.totals_tsv());
    return 0;
}

struct SeriesArgs {
    std::string which = "product";
    int a = 1;
    int qmax = 40;
    int xmax = 40;
    bool json = false;
};

int run_series(const SeriesArgs& args) {
    rrg::XQSeries series(args.qmax, args.xmax);
    if (args.which == "t1" || args.which == "t2" || args.which == "t3") {
        series = rrg::t_series(args.which[1] - '0', args.qmax, args.xmax);
    } else if (args.which == "andrews3") {
        series.add_shifted(0, rrg::andrews_sum_k3(args.qmax), 0);
    } else if (args.which == "product") {
        series.add_shifted(0, rrg::product_side(3, args.a, args.qmax), 0);
    } else {
        return bad_input("series", "unknown series '" + args.which + "'");
    }
    std::cout << (args.json ? series.to_json() + "\n" : series.to_tsv());
    return 0;
}

struct BijectionArgs {
    std::string direction;
    int a = 0;
    std::string partition;
    int pairs = 0;
    int singletons = 0;
    std::string mu;
    std::string nu;
    bool trace = false;
};

nlohmann::json parts_json(const rrg::Partition& p) {
    return std::vector<int>(p.parts().begin(), p.parts().end());
}

nlohmann::json trace_json(const rrg::MoveTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const rrg::MoveStep& step : trace) {
        nlohmann::json j;
        j["partition"] = parts_json(step.after);
        j["kind"] = rrg::kind_name(step.kind);
        j["dir"] = rrg::direction_name(step.direction);
        j["from"] = step.from;
        j["to"] = step.to;
        steps.push_back(std::move(j));
    }
    return steps;
}

/* mu/nu entries may repeat and include zero, so they get their own parser
   rather than the partition one with its ordering checks. */
std::vector<int> parse_move_counts(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
        if (pos > text.size()) break;
    }
    return out;
}

int run_bijection(const BijectionArgs& args) {
    nlohmann::json j;
    try {
        if (args.direction == "backward") {
            const rrg::Partition lambda = rrg::Partition::parse(args.partition);
            const rrg::TripleResult result = rrg::to_triple(args.a, lambda);
            j["a"] = result.triple.a;
            j["pairs"] = result.triple.pair_count;
            j["singletons"] = result.triple.singleton_count;
            j["mu"] = result.triple.mu;
            j["nu"] = result.triple.nu;
            j["lambda"] = parts_json(lambda);
            j["base"] = parts_json(rrg::base_partition(args.a, result.triple.pair_count,
                                                       result.triple.singleton_count));
            if (args.trace) j["trace"] = trace_json(result.trace);
        } else {
            rrg::MoveTriple t;
            t.a = args.a;
            t.pair_count = args.pairs;
            t.singleton_count = args.singletons;
            t.mu = parse_move_counts(args.mu);
            t.nu = parse_move_counts(args.nu);
            const rrg::PartitionResult result = rrg::from_triple(t);
            j["a"] = t.a;
            j["pairs"] = t.pair_count;
            j["singletons"] = t.singleton_count;
            j["mu"] = t.mu;
            j["nu"] = t.nu;
            j["lambda"] = parts_json(result.partition);
            j["base"] = parts_json(rrg::base_partition(t.a, t.pair_count, t.singleton_count));
            if (args.trace) j["trace"] = trace_json(result.trace);
        }
    } catch (const rrg::StuckError& e) {
        return bad_input("bijection", e.what());
    } catch (const std::exception& e) {
        return bad_input("bijection", e.what());
    }
    std::cout << j.dump() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    int a = 0;
    int qmax = 0;
    int max_weight = 35;
    int threads = 0;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    rrg::VerifyOptions options;
    options.a = args.a;
    options.qmax = args.qmax;
    options.max_weight = args.max_weight;
    options.threads = args.threads;
    rrg::VerificationReport report;
    try {
        report = rrg::run_suite(args.suite, options);
    } catch (const std::invalid_argument& e) {
        return bad_input("verify", e.what());
    }
    std::cout << (args.json ? report.to_json() + "\n" : report.to_text());
    return report.all_pass() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rogers-Ramanujan-Gordon partitions at k=3: counting, series, bijection"};
    app.require_subcommand(1);

    CountArgs count_args;
    CLI::App* count = app.add_subcommand("count", "tabulate partition counts by weight");
    count->add_option("--side", count_args.side, "difference or modulus")
        ->check(CLI::IsMember({"difference", "modulus"}))
        ->capture_default_str();
    count->add_option("--k", count_args.k, "difference-condition depth")
        ->check(CLI::Range(2, 16))
        ->capture_default_str();
    count->add_option("--a", count_args.a, "residue parameter, 1..k")
        ->capture_default_str();
    count->add_option("--max-n", count_args.max_n, "largest weight to tabulate")
        ->check(CLI::Range(0, 400))
        ->capture_default_str();
    count->add_flag("--by-parts", count_args.by_parts, "split each weight by part count");
    count->add_option("--threads", count_args.threads, "worker threads (0 = auto)")
        ->capture_default_str();

    SeriesArgs series_args;
    CLI::App* series = app.add_subcommand("series", "print series coefficients");
    series->add_option("--which", series_args.which,
                       "t1, t2, t3, andrews3 or product")
        ->check(CLI::IsMember({"t1", "t2", "t3", "andrews3", "product"}))
        ->capture_default_str();
    series->add_option("--a", series_args.a, "residue parameter for the product side")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    series->add_option("--qmax", series_args.qmax, "truncation order in q")
        ->check(CLI::Range(0, 2000))
        ->capture_default_str();
    series->add_option("--xmax", series_args.xmax, "largest x power kept")
        ->check(CLI::Range(0, 2000))
        ->capture_default_str();
    series->add_flag("--json", series_args.json, "emit JSON instead of TSV");

    BijectionArgs bijection_args;
    CLI::App* bijection =
        app.add_subcommand("bijection", "run the move sequence in either direction");
    bijection->add_option("direction", bijection_args.direction, "forward or backward")
        ->required()
        ->check(CLI::IsMember({"forward", "backward"}));
    bijection->add_option("--a", bijection_args.a, "residue parameter, 1..3")
        ->required()
        ->check(CLI::Range(1, 3));
    bijection->add_option("--partition", bijection_args.partition,
                          "comma-separated parts (backward input)");
    bijection->add_option("--pairs", bijection_args.pairs, "pair count (forward input)");
    bijection->add_option("--singletons", bijection_args.singletons,
                          "singleton count (forward input)");
    bijection->add_option("--mu", bijection_args.mu,
                          "comma-separated pair move totals, largest pair first");
    bijection->add_option("--nu", bijection_args.nu,
                          "comma-separated singleton move totals, largest first");
    bijection->add_flag("--trace", bijection_args.trace, "include every move in the output");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_help = "one of:";
    for (const std::string& name : rrg::suite_names()) suite_help += " " + name;
    verify->add_option("--suite", verify_args.suite, suite_help)
        ->check(CLI::IsMember(rrg::suite_names()))
        ->capture_default_str();
    verify->add_option("--a", verify_args.a, "restrict to one residue (0 = all)")
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    verify->add_option("--qmax", verify_args.qmax, "series bound (0 = suite default)")
        ->check(CLI::Range(0, 2000))
        ->capture_default_str();
    verify->add_option("--max-weight", verify_args.max_weight,
                       "largest weight in the roundtrip sweep")
        ->check(CLI::Range(0, 200))
        ->capture_default_str();
    verify->add_option("--threads", verify_args.threads, "worker threads (0 = auto)")
        ->capture_default_str();
    verify->add_flag("--json", verify_args.json, "emit JSON instead of text");

    VerifyArgs roundtrip_args;
    roundtrip_args.suite = "bijection";
    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "both bijection roundtrips (verify --suite bijection)");
    roundtrip->add_option("--a", roundtrip_args.a, "restrict to one residue (0 = all)")
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    roundtrip->add_option("--max-weight", roundtrip_args.max_weight,
                          "largest weight in the roundtrip sweep")
        ->check(CLI::Range(0, 200))
        ->capture_default_str();
    roundtrip->add_option("--threads", roundtrip_args.threads, "worker threads (0 = auto)")
        ->capture_default_str();
    roundtrip->add_flag("--json", roundtrip_args.json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (count->parsed()) {
            if (count_args.a < 1 || count_args.a > count_args.k) {
                std::cerr << "count: --a must lie in 1..k\n";
                return kExitUsage;
            }
            return run_count(count_args);
        }
        if (series->parsed()) return run_series(series_args);
        if (bijection->parsed()) return run_bijection(bijection_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (roundtrip->parsed()) return run_verify(roundtrip_args);
    } catch (const std::invalid_argument& e) {
        return bad_input(app.get_subcommands().front()->get_name(), e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitUsage;
}
