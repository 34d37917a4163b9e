#include "cores/cli.hpp"

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cores/beta_set.hpp"
#include "cores/counting.hpp"
#include "cores/enumeration.hpp"
#include "cores/finiteness.hpp"
#include "cores/interval_poset.hpp"
#include "cores/partition.hpp"
#include "cores/power_series.hpp"

namespace cores::cli {
namespace {

using nlohmann::ordered_json;

CoreSpec spec_from(const std::vector<std::int64_t>& moduli) {
    return CoreSpec::from_moduli(moduli);
}

mpz_class count_by_method(std::int64_t t, std::int64_t p,
                          const std::string& method) {
    if (method == "recurrence") {
        return core_count(t, p);
    }
    if (method == "poset") {
        return count_good_subsets(build_poset(t, p));
    }
    if (method == "enumerate") {
        const CoreFamily family = enumerate_cores(CoreSpec::consecutive(t, p));
        return mpz_class(static_cast<unsigned long>(family.size()));
    }
    // series: expand the closed form to order t and read coefficient t,
    // the slowest route but an end-to-end exercise of the expansion.
    const Series s = closed_form_series(p, static_cast<std::size_t>(t));
    return mpz_class(s.coeff(static_cast<std::size_t>(t)).get_num());
}

void run_count(std::ostream& out, std::ostream& err,
               const std::vector<std::int64_t>& moduli, bool consecutive_mode,
               std::int64_t t, std::int64_t p, const std::string& method,
               int& code) {
    if (consecutive_mode) {
        if (!moduli.empty()) {
            throw std::invalid_argument(
                "give positional moduli or --consecutive, not both");
        }
        out << count_by_method(t, p, method) << '\n';
        return;
    }
    if (moduli.empty()) {
        throw std::invalid_argument("no moduli given");
    }
    if (method != "recurrence") {
        throw std::invalid_argument("--method applies only with --consecutive");
    }
    const CoreSpec spec = spec_from(moduli);
    const CoreFamily family = enumerate_cores(spec);
    out << family.size() << '\n';
    if (spec.is_consecutive()) {
        const std::int64_t tc = spec.moduli().front();
        const std::int64_t pc =
            static_cast<std::int64_t>(spec.moduli().size()) - 1;
        const mpz_class f = core_count(tc, pc);
        out << "recurrence: " << f << '\n';
        if (f != static_cast<unsigned long>(family.size())) {
            err << "error: enumeration and recurrence disagree for "
                << spec.str() << '\n';
            code = kInternal;
        }
    }
}

void run_enumerate(std::ostream& out, const std::vector<std::int64_t>& moduli,
                   const std::string& format) {
    const CoreSpec spec = spec_from(moduli);
    const CoreFamily family = enumerate_cores(spec);
    if (format == "lines") {
        for (const Partition& p : family) out << p.str() << '\n';
        return;
    }
    ordered_json result;
    result["count"] = family.size();
    std::vector<std::string> members;
    members.reserve(family.size());
    for (const Partition& p : family) members.push_back(p.str());
    result["members"] = members;
    ordered_json doc;
    doc["command"] = "enumerate";
    doc["spec"] = spec.moduli();
    doc["result"] = result;
    out << doc.dump() << '\n';
}

void run_check(std::ostream& out, const std::string& partition_text,
               const std::vector<std::int64_t>& moduli, int& code) {
    const Partition p = Partition::parse(partition_text);
    const CoreSpec spec = spec_from(moduli);
    const bool core = is_simultaneous_core(p, spec);
    out << (core ? "yes" : "no") << '\n';
    code = core ? kOk : kNegative;
}

void run_stats(std::ostream& out, const std::vector<std::int64_t>& moduli) {
    const FamilyStats s = stats(spec_from(moduli));
    out << "count: " << s.count << '\n';
    out << "max_size: " << s.max_size << '\n';
    out << "total_size: " << s.total_size << '\n';
    out << "average: " << s.average_size << '\n';
    out << "self_conjugate_count: " << s.self_conjugate_count << '\n';
}

void run_series(std::ostream& out, std::int64_t p, std::int64_t n,
                bool closed_form) {
    const auto order = static_cast<std::size_t>(n);
    const Series s =
        closed_form ? closed_form_series(p, order) : series_from_recurrence(p, order);
    out << s.str() << '\n';
}

void run_witness(std::ostream& out, const std::vector<std::int64_t>& moduli,
                 std::int64_t n) {
    const CoreSpec spec = spec_from(moduli);
    if (spec.gcd() == 1) {
        throw std::invalid_argument(
            "moduli are coprime: the family is finite and has no witness chain");
    }
    for (std::int64_t k = 0; k <= n; ++k) {
        out << witness(spec, k).str() << '\n';
    }
}

void run_poset(std::ostream& out, std::int64_t t, std::int64_t p) {
    const CorePoset poset = build_poset(t, p);
    ordered_json result;
    result["index_bound"] = interval_index_bound(t, p);
    ordered_json intervals = ordered_json::array();
    for (const Interval& s : poset.intervals()) {
        intervals.push_back({s.lo, s.hi});
    }
    result["intervals"] = intervals;
    result["ground"] = poset.ground();
    ordered_json covers = ordered_json::array();
    for (const auto& [y, x] : poset.cover_pairs()) {
        covers.push_back({y, x});
    }
    result["covers"] = covers;
    ordered_json doc;
    doc["command"] = "poset";
    doc["spec"] = CoreSpec::consecutive(t, p).moduli();
    doc["result"] = result;
    out << doc.dump() << '\n';
}

// Cross-validation matrix: every counting route must agree, and every
// structural law must hold, across the whole (t, p) grid.
void run_selftest(std::ostream& out, std::int64_t t_max, std::int64_t p_max,
                  int& code) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok,
                      const std::string& detail) {
        out << (ok ? "ok " : "FAIL ") << name;
        if (!ok && !detail.empty()) out << ": " << detail;
        out << '\n';
        if (!ok) all_ok = false;
    };
    auto grid_label = [&](std::int64_t p) {
        std::ostringstream os;
        os << " p=" << p << " t<=" << t_max;
        return os.str();
    };

    for (std::int64_t p = 1; p <= p_max; ++p) {
        bool ok = true;
        std::string detail;
        std::vector<CoreFamily> families(static_cast<std::size_t>(t_max) + 1);
        for (std::int64_t t = 1; t <= t_max && ok; ++t) {
            families[static_cast<std::size_t>(t)] =
                enumerate_cores(CoreSpec::consecutive(t, p));
        }

        for (std::int64_t t = 1; t <= t_max && ok; ++t) {
            const mpz_class expected = core_count(t, p);
            const auto& family = families[static_cast<std::size_t>(t)];
            const mpz_class by_enum(static_cast<unsigned long>(family.size()));
            const mpz_class by_poset = count_good_subsets(build_poset(t, p));
            const mpz_class by_series(
                closed_form_series(p, static_cast<std::size_t>(t))
                    .coeff(static_cast<std::size_t>(t))
                    .get_num());
            if (by_enum != expected || by_poset != expected ||
                by_series != expected) {
                ok = false;
                detail = "t=" + std::to_string(t);
            }
        }
        report("methods-agree" + grid_label(p), ok, detail);

        const auto order = static_cast<std::size_t>(std::max(t_max, p + 1));
        report("functional-equation" + grid_label(p),
               check_functional_equation(series_from_recurrence(p, order), p),
               "");
        report("closed-form-matches-recurrence" + grid_label(p),
               closed_form_series(p, order) == series_from_recurrence(p, order),
               "");

        ok = true;
        detail.clear();
        for (std::int64_t t = 1; t <= t_max && ok; ++t) {
            const auto classes = r_class_counts(t, p);
            mpz_class sum = 0;
            for (std::int64_t j = 1; j <= t && ok; ++j) {
                const mpz_class expected =
                    j <= p - 1 ? core_count(t - j, p)
                               : core_count(j - p, p) * core_count(t - j, p);
                if (classes[static_cast<std::size_t>(j - 1)] != expected) {
                    ok = false;
                    detail = "t=" + std::to_string(t) + " j=" + std::to_string(j);
                }
                sum += classes[static_cast<std::size_t>(j - 1)];
            }
            if (ok && sum != core_count(t, p)) {
                ok = false;
                detail = "class sum t=" + std::to_string(t);
            }
        }
        report("r-class-laws" + grid_label(p), ok, detail);

        ok = true;
        detail.clear();
        for (std::int64_t t = 1; t <= t_max && ok; ++t) {
            CoreFamily from_poset;
            for (const auto& subset : enumerate_good_subsets(build_poset(t, p))) {
                from_poset.push_back(
                    BetaSet::from_elements(subset).to_partition());
            }
            std::sort(from_poset.begin(), from_poset.end(), family_order_less);
            if (from_poset != families[static_cast<std::size_t>(t)]) {
                ok = false;
                detail = "t=" + std::to_string(t);
            }
        }
        report("poset-family-match" + grid_label(p), ok, detail);

        bool routes_ok = true;
        bool exclusion_ok = true;
        bool bound_ok = true;
        bool round_trip_ok = true;
        std::string routes_detail, exclusion_detail, bound_detail,
            round_trip_detail;
        for (std::int64_t t = 1; t <= t_max; ++t) {
            const CoreSpec spec = CoreSpec::consecutive(t, p);
            const std::int64_t bound = *analyze(spec).bound;
            for (const Partition& member :
                 families[static_cast<std::size_t>(t)]) {
                const BetaSet b = BetaSet::of(member);
                for (std::int64_t m : spec.moduli()) {
                    if (is_t_core_beta(b, m) != is_t_core_hooks(member, m) ||
                        !is_t_core_beta(b, m)) {
                        routes_ok = false;
                        routes_detail = "t=" + std::to_string(t);
                    }
                }
                if (!excludes_linear_combinations(b, spec)) {
                    exclusion_ok = false;
                    exclusion_detail = "t=" + std::to_string(t);
                }
                if (!b.is_empty() && b.max() >= bound) {
                    bound_ok = false;
                    bound_detail = "t=" + std::to_string(t);
                }
                if (b.to_partition() != member) {
                    round_trip_ok = false;
                    round_trip_detail = "t=" + std::to_string(t);
                }
            }
        }
        report("core-routes-agree" + grid_label(p), routes_ok, routes_detail);
        report("combination-exclusion" + grid_label(p), exclusion_ok,
               exclusion_detail);
        report("beta-bound" + grid_label(p), bound_ok, bound_detail);
        report("beta-round-trip" + grid_label(p), round_trip_ok,
               round_trip_detail);
    }

    if (!all_ok) code = kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact toolkit for simultaneous core partitions"};
    app.name("cores");
    app.require_subcommand(1);
    int code = kOk;

    auto* count_cmd = app.add_subcommand(
        "count", "Count the simultaneous cores for a modulus list");
    std::vector<std::int64_t> count_moduli;
    std::int64_t count_t = 0;
    std::int64_t count_p = 1;
    std::string count_method = "recurrence";
    count_cmd->add_option("moduli", count_moduli,
                          "strictly increasing moduli, e.g. 3 4");
    auto* consecutive_opt =
        count_cmd->add_option("--consecutive", count_t,
                              "count for the moduli (t, ..., t+p)")
            ->check(CLI::PositiveNumber);
    auto* p_opt = count_cmd->add_option("--p", count_p,
                                        "span p of the consecutive moduli")
                      ->check(CLI::PositiveNumber);
    consecutive_opt->needs(p_opt);
    p_opt->needs(consecutive_opt);
    count_cmd
        ->add_option("--method", count_method,
                     "counting route (with --consecutive)")
        ->check(CLI::IsMember({"recurrence", "poset", "enumerate", "series"}));
    count_cmd->callback([&] {
        run_count(out, err, count_moduli, consecutive_opt->count() > 0,
                  count_t, count_p, count_method, code);
    });

    auto* enumerate_cmd = app.add_subcommand(
        "enumerate", "List every simultaneous core in canonical order");
    std::vector<std::int64_t> enumerate_moduli;
    std::string enumerate_format = "lines";
    enumerate_cmd
        ->add_option("moduli", enumerate_moduli, "strictly increasing moduli")
        ->required();
    enumerate_cmd
        ->add_option("--format", enumerate_format, "lines or structured")
        ->check(CLI::IsMember({"lines", "structured"}));
    enumerate_cmd->callback(
        [&] { run_enumerate(out, enumerate_moduli, enumerate_format); });

    auto* check_cmd = app.add_subcommand(
        "check", "Decide whether a partition is a simultaneous core");
    std::string check_partition;
    std::vector<std::int64_t> check_moduli;
    check_cmd
        ->add_option("partition", check_partition,
                     "partition in bracket form, e.g. [5,2,2]")
        ->required();
    check_cmd->add_option("moduli", check_moduli, "strictly increasing moduli")
        ->required();
    check_cmd->callback(
        [&] { run_check(out, check_partition, check_moduli, code); });

    auto* stats_cmd = app.add_subcommand(
        "stats", "Aggregate statistics of a finite core family");
    std::vector<std::int64_t> stats_moduli;
    stats_cmd->add_option("moduli", stats_moduli, "strictly increasing moduli")
        ->required();
    stats_cmd->callback([&] { run_stats(out, stats_moduli); });

    auto* series_cmd = app.add_subcommand(
        "series", "Print the count generating function's coefficients");
    std::int64_t series_p = 1;
    std::int64_t series_n = 0;
    bool series_closed_form = false;
    series_cmd->add_option("--p", series_p, "span p of the consecutive moduli")
        ->required()
        ->check(CLI::PositiveNumber);
    series_cmd->add_option("-N", series_n, "highest coefficient index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    series_cmd->add_flag("--closed-form", series_closed_form,
                         "expand the square-root closed form instead of "
                         "running the recurrence");
    series_cmd->callback(
        [&] { run_series(out, series_p, series_n, series_closed_form); });

    auto* witness_cmd = app.add_subcommand(
        "witness",
        "Print members 0..n of the infinite core chain of a gcd>1 spec");
    std::vector<std::int64_t> witness_moduli;
    std::int64_t witness_n = 0;
    witness_cmd
        ->add_option("moduli", witness_moduli, "moduli sharing a factor")
        ->required();
    witness_cmd->add_option("-n", witness_n, "last chain index to print")
        ->required()
        ->check(CLI::NonNegativeNumber);
    witness_cmd->callback([&] { run_witness(out, witness_moduli, witness_n); });

    auto* poset_cmd = app.add_subcommand(
        "poset", "Export the interval poset of a consecutive spec");
    std::int64_t poset_t = 1;
    std::int64_t poset_p = 1;
    poset_cmd->add_option("t", poset_t, "first modulus")
        ->required()
        ->check(CLI::PositiveNumber);
    poset_cmd->add_option("p", poset_p, "span of the consecutive moduli")
        ->required()
        ->check(CLI::PositiveNumber);
    poset_cmd->callback([&] { run_poset(out, poset_t, poset_p); });

    auto* selftest_cmd = app.add_subcommand(
        "selftest", "Cross-validate every counting route and structural law");
    std::int64_t selftest_t_max = 8;
    std::int64_t selftest_p_max = 3;
    selftest_cmd->add_option("--t-max", selftest_t_max, "largest t to test")
        ->check(CLI::PositiveNumber);
    selftest_cmd->add_option("--p-max", selftest_p_max, "largest p to test")
        ->check(CLI::PositiveNumber);
    selftest_cmd->callback(
        [&] { run_selftest(out, selftest_t_max, selftest_p_max, code); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    } catch (const infinite_family_error& e) {
        out << "infinite" << '\n';
        err << "error: " << e.what() << '\n';
        return kInfinite;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternal;
    }
    return code;
}

}  // namespace cores::cli
