// permspec: exact checks on finite permutation groups from the command
// line. `permspec --help` lists the subcommands; see README.md for the
// input formats and the exit-code contract.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permspec/classify.hpp"
#include "permspec/corpus.hpp"
#include "permspec/errors.hpp"
#include "permspec/families.hpp"
#include "permspec/group_io.hpp"
#include "permspec/report_json.hpp"
#include "permspec/spectrum.hpp"

#ifndef PERMSPEC_DATA_DIR
#define PERMSPEC_DATA_DIR "data"
#endif

namespace {

// Exit codes are a stable contract for scripting.
enum ExitCode : int {
    kExitOk = 0,
    kExitDivisibilityFails = 1,
    kExitParseError = 2,
    kExitAssertionMismatch = 3,
    kExitCapExceeded = 4,
    kExitIntegralityViolation = 5,
};

struct GroupOptions {
    std::string file;
    std::string inline_gens;
    int degree = 0;
    std::string family;
    int n = 0;
    int p = 0;
    int m = 1;
    int q = 0;
    std::string data_dir = PERMSPEC_DATA_DIR;
    std::uint64_t cap = permspec::kDefaultElementCap;
};

void add_group_options(CLI::App* cmd, GroupOptions& opts) {
    cmd->add_option("--file", opts.file, "group file (degree/order/generator lines)");
    cmd->add_option("--gens", opts.inline_gens,
                    "inline generators, cycle notations separated by ';'");
    cmd->add_option("--degree", opts.degree, "degree for --gens");
    cmd->add_option("--family", opts.family,
                    "built-in family: symmetric, alternating, cyclic, dihedral, affine, "
                    "pgl2, mathieu11, mathieu12, counterexample");
    cmd->add_option("--n", opts.n, "size parameter for symmetric/alternating/cyclic/dihedral");
    cmd->add_option("--p", opts.p, "field characteristic for --family affine");
    cmd->add_option("--m", opts.m, "field extension degree for --family affine (default 1)");
    cmd->add_option("--q", opts.q, "field size for --family pgl2");
    cmd->add_option("--data-dir", opts.data_dir, "directory with the Mathieu generator files");
    cmd->add_option("--cap", opts.cap, "element-stream cap override");
}

permspec::GroupEngine resolve_engine(const GroupOptions& opts) {
    using namespace permspec;
    int sources = 0;
    sources += !opts.file.empty();
    sources += !opts.inline_gens.empty();
    sources += !opts.family.empty();
    if (sources != 1)
        throw ParseError("exactly one of --file, --gens, --family is required");
    if (!opts.file.empty())
        return engine_from_file(load_group_file(opts.file));
    if (!opts.inline_gens.empty()) {
        if (opts.degree < 1)
            throw ParseError("--gens requires --degree");
        return build_engine(parse_inline_generators(opts.inline_gens, opts.degree));
    }
    if (opts.family == "symmetric")
        return symmetric_group(opts.n);
    if (opts.family == "alternating")
        return alternating_group(opts.n);
    if (opts.family == "cyclic")
        return cyclic_regular(opts.n);
    if (opts.family == "dihedral")
        return dihedral(opts.n);
    if (opts.family == "affine")
        return affine_group(opts.p, opts.m);
    if (opts.family == "pgl2")
        return pgl2(opts.q);
    if (opts.family == "mathieu11")
        return mathieu(11, opts.data_dir);
    if (opts.family == "mathieu12")
        return mathieu(12, opts.data_dir);
    if (opts.family == "counterexample")
        return counterexample_group();
    throw ParseError("unknown family: " + opts.family);
}

std::string spectrum_text(const permspec::Spectrum& spectrum) {
    std::string out = "{";
    for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(spectrum.values[i]);
    }
    return out + "}";
}

void print_divisibility(const permspec::DivisibilityReport& report) {
    std::cout << "degree:   " << report.degree << "\n"
              << "order:    " << report.group_order.to_decimal() << "\n"
              << "filter:   " << permspec::filter_name(report.spectrum.filter) << "\n"
              << "spectrum: " << spectrum_text(report.spectrum) << "\n"
              << "product:  " << report.product.to_decimal() << "\n"
              << "divides:  " << (report.divides ? "yes" : "no") << "\n";
    if (report.quotient)
        std::cout << "quotient: " << report.quotient->to_decimal() << "\n";
    std::cout << "sharp:    " << (report.is_sharp ? "yes" : "no") << "\n";
}

int cmd_order(const GroupOptions& opts) {
    permspec::GroupEngine engine = resolve_engine(opts);
    std::cout << engine.order().to_decimal() << "\n";
    return kExitOk;
}

int cmd_check(const GroupOptions& opts, const std::string& filter_name, bool as_json,
              std::uint64_t order_cap) {
    using Filter = permspec::ElementFilter;
    auto filter = permspec::filter_from_name(filter_name);
    if (!filter)
        throw permspec::ParseError("unknown filter: " + filter_name);
    permspec::GroupEngine engine = resolve_engine(opts);
    permspec::DivisibilityReport report =
        *filter == Filter::AllNontrivialSubgroups
            ? permspec::maillet_check(engine, order_cap)
            : permspec::blichfeldt_check(engine, *filter, opts.cap);
    if (as_json)
        std::cout << permspec::to_json(report).dump(2) << "\n";
    else
        print_divisibility(report);
    return report.divides ? kExitOk : kExitDivisibilityFails;
}

int cmd_moments(const GroupOptions& opts, unsigned max_k, const std::string& method) {
    permspec::GroupEngine engine = resolve_engine(opts);
    bool direct = method == "direct" || method == "both";
    bool recursive = method == "recursive" || method == "both";
    if (!direct && !recursive)
        throw permspec::ParseError("unknown method: " + method);
    std::cout << "k";
    if (direct)
        std::cout << "\tdirect";
    if (recursive)
        std::cout << "\trecursive";
    std::cout << "\n";
    bool mismatch = false;
    for (unsigned k = 0; k <= max_k; ++k) {
        std::cout << k;
        std::optional<permspec::BigCount> d, r;
        if (direct) {
            d = permspec::moment_direct(engine, k, opts.cap).value;
            std::cout << "\t" << d->to_decimal();
        }
        if (recursive) {
            r = permspec::moment_recursive(engine, k).value;
            std::cout << "\t" << r->to_decimal();
        }
        std::cout << "\n";
        if (d && r && *d != *r)
            mismatch = true;
    }
    if (mismatch) {
        std::cerr << "error: direct and recursive moments disagree\n";
        return kExitAssertionMismatch;
    }
    return kExitOk;
}

int cmd_classify(const GroupOptions& opts, bool as_json) {
    permspec::GroupEngine engine = resolve_engine(opts);
    permspec::ClassificationReport report = permspec::classify_report(engine, opts.cap);
    if (as_json) {
        std::cout << permspec::to_json(report).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "degree:              " << report.degree << "\n"
              << "order:               " << report.order.to_decimal() << "\n"
              << "orbits:              " << report.num_orbits << "\n"
              << "transitive:          " << (report.transitive ? "yes" : "no") << "\n"
              << "transitivity degree: " << report.transitivity_degree << "\n";
    if (report.sharply_transitive_k)
        std::cout << "sharply transitive:  k = " << *report.sharply_transitive_k << "\n";
    if (report.rank)
        std::cout << "rank:                " << *report.rank << "\n";
    std::cout << "primitive:           " << (report.primitivity.primitive ? "yes" : "no") << "\n";
    if (report.bochert && report.bochert->applicable)
        std::cout << "bochert bound:       " << report.bochert->bound.to_decimal() << " ("
                  << (report.bochert->satisfied ? "satisfied" : "VIOLATED") << ")\n";
    if (report.is_sharp)
        std::cout << "sharp:               " << (*report.is_sharp ? "yes" : "no") << "\n";
    if (report.spectrum_all)
        std::cout << "spectrum (all):      " << spectrum_text(*report.spectrum_all) << "\n";
    if (report.spectrum_prime_power)
        std::cout << "spectrum (p-power):  " << spectrum_text(*report.spectrum_prime_power)
                  << "\n";
    if (report.spectrum_prime)
        std::cout << "spectrum (prime):    " << spectrum_text(*report.spectrum_prime) << "\n";
    if (report.frobenius)
        std::cout << "frobenius:           " << (report.frobenius->is_frobenius ? "yes" : "no")
                  << (report.frobenius->is_frobenius
                          ? " (kernel size " + std::to_string(report.frobenius->kernel_size) + ")"
                          : "")
                  << "\n";
    std::cout << "moments F_0..F_6:   ";
    for (const auto& m : report.moments)
        std::cout << " " << m.value.to_decimal();
    std::cout << "\n";
    return kExitOk;
}

int cmd_corpus(const std::string& data_dir, bool as_json, std::uint64_t cap) {
    using namespace permspec;
    std::vector<CorpusEntry> corpus = builtin_corpus(data_dir);
    JsonDocument rows = JsonDocument::array();
    bool all_ok = true;
    if (!as_json)
        std::printf("%-22s %6s %10s %-12s %10s %-7s %-5s %s\n", "name", "degree", "order",
                    "spectrum", "product", "divides", "sharp", "tags");
    for (const CorpusEntry& entry : corpus) {
        DivisibilityReport report =
            blichfeldt_check(entry.engine, ElementFilter::AllNontrivialElements, cap);
        bool ok = report.divides;
        ok = ok && blichfeldt_check(entry.engine, ElementFilter::PrimePowerOrder, cap).divides;
        for (unsigned k = 0; k <= 3 && ok; ++k)
            ok = moment_direct(entry.engine, k, cap).value ==
                 moment_recursive(entry.engine, k).value;
        for (int point = 0; point < entry.engine.degree() && ok; ++point) {
            BigCount orbit_size(entry.engine.orbit_of(point).size());
            ok = orbit_size * entry.engine.point_stabilizer(point).order() ==
                 entry.engine.order();
        }
        all_ok = all_ok && ok;

        std::string tags;
        for (const auto& tag : entry.tags)
            tags += (tags.empty() ? "" : ",") + tag;
        if (as_json) {
            rows.push_back({{"name", entry.name},
                            {"degree", entry.engine.degree()},
                            {"order", entry.engine.order().to_decimal()},
                            {"spectrum", report.spectrum.values},
                            {"product", report.product.to_decimal()},
                            {"divides", report.divides},
                            {"sharp", report.is_sharp},
                            {"tags", entry.tags},
                            {"invariants_ok", ok}});
        } else {
            std::printf("%-22s %6d %10s %-12s %10s %-7s %-5s %s\n", entry.name.c_str(),
                        entry.engine.degree(), entry.engine.order().to_decimal().c_str(),
                        spectrum_text(report.spectrum).c_str(), report.product.to_decimal().c_str(),
                        report.divides ? "yes" : "NO", report.is_sharp ? "yes" : "no",
                        tags.c_str());
            if (!ok)
                std::printf("  ^ INVARIANT FAILURE\n");
        }
    }
    if (as_json)
        std::cout << rows.dump(2) << "\n";
    else
        std::cout << (all_ok ? "all invariants hold" : "INVARIANT FAILURES PRESENT") << "\n";
    return all_ok ? kExitOk : kExitDivisibilityFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisibility and structure checks for finite permutation groups"};
    app.require_subcommand(1);

    GroupOptions order_opts;
    CLI::App* order_cmd = app.add_subcommand("order", "print |G|");
    add_group_options(order_cmd, order_opts);

    GroupOptions check_opts;
    std::string check_filter = "all";
    bool check_json = false;
    std::uint64_t check_order_cap = permspec::kDefaultSubgroupOrderCap;
    CLI::App* check_cmd =
        app.add_subcommand("check", "fixed-point spectrum divisibility verdict");
    add_group_options(check_cmd, check_opts);
    check_cmd->add_option("--filter", check_filter, "all | prime-power | prime | subgroups");
    check_cmd->add_flag("--json", check_json, "machine-readable output");
    check_cmd->add_option("--order-cap", check_order_cap,
                          "subgroup-lattice order cap (subgroups filter)");

    GroupOptions moments_opts;
    unsigned moments_max_k = 6;
    std::string moments_method = "both";
    CLI::App* moments_cmd = app.add_subcommand("moments", "fixed-point moments F_0..F_K");
    add_group_options(moments_cmd, moments_opts);
    moments_cmd->add_option("--max-k", moments_max_k, "largest k (default 6)");
    moments_cmd->add_option("--method", moments_method, "direct | recursive | both");

    GroupOptions classify_opts;
    bool classify_json = false;
    CLI::App* classify_cmd = app.add_subcommand("classify", "full structural report");
    add_group_options(classify_cmd, classify_opts);
    classify_cmd->add_flag("--json", classify_json, "machine-readable output");

    bool corpus_json = false;
    std::string corpus_data_dir = PERMSPEC_DATA_DIR;
    std::uint64_t corpus_cap = permspec::kDefaultElementCap;
    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "run every check over the built-in corpus");
    corpus_cmd->add_flag("--json", corpus_json, "machine-readable output");
    corpus_cmd->add_option("--data-dir", corpus_data_dir,
                           "directory with the Mathieu generator files");
    corpus_cmd->add_option("--cap", corpus_cap, "element-stream cap override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (*order_cmd)
            return cmd_order(order_opts);
        if (*check_cmd)
            return cmd_check(check_opts, check_filter, check_json, check_order_cap);
        if (*moments_cmd)
            return cmd_moments(moments_opts, moments_max_k, moments_method);
        if (*classify_cmd)
            return cmd_classify(classify_opts, classify_json);
        if (*corpus_cmd)
            return cmd_corpus(corpus_data_dir, corpus_json, corpus_cap);
    } catch (const permspec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const permspec::OrderAssertionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertionMismatch;
    } catch (const permspec::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const permspec::IntegralityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIntegralityViolation;
    } catch (const permspec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitOk;
}
