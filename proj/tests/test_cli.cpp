// Exercises the installed CLI binary end to end: output, JSON shape and
// the exit-code contract (0 ok/divides, 1 divisibility fails, 2 parse,
// 3 assertion, 4 cap, 5 integrality).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "permspec/report_json.hpp"

#ifndef PERMSPEC_CLI_PATH
#error "PERMSPEC_CLI_PATH must point at the permspec binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = std::string(PERMSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

const std::string kD10 = "--gens \"(1,2,3,4,5);(2,5)(3,4)\" --degree 5";

} // namespace

TEST_CASE("order command") {
    CHECK(run("order " + kD10).output == "10\n");
    CHECK(run("order " + kD10).exit_code == 0);
    CHECK(run("order --gens \"()\" --degree 4").output == "1\n");
    CHECK(run("order --family mathieu11").output == "7920\n");
    CHECK(run("order --family symmetric --n 5").output == "120\n");
}

TEST_CASE("check command exit codes follow the divisibility verdict") {
    RunResult failing = run("check --family counterexample --filter prime");
    CHECK(failing.exit_code == 1);
    CHECK(failing.output.find("product:  4") != std::string::npos);
    CHECK(failing.output.find("divides:  no") != std::string::npos);

    RunResult passing = run("check --family counterexample --filter all");
    CHECK(passing.exit_code == 0);
    CHECK(passing.output.find("product:  24") != std::string::npos);
    CHECK(passing.output.find("quotient: 3") != std::string::npos);

    RunResult sharp = run("check --family dihedral --n 4 --filter all");
    CHECK(sharp.exit_code == 0);
    CHECK(sharp.output.find("sharp:    yes") != std::string::npos);

    RunResult subgroups = run("check " + kD10 + " --filter subgroups");
    CHECK(subgroups.exit_code == 0);
    CHECK(subgroups.output.find("quotient: 2") != std::string::npos);
}

TEST_CASE("check --json emits a parseable report") {
    RunResult result = run("check --family counterexample --filter prime-power --json");
    CHECK(result.exit_code == 0);
    auto doc = permspec::JsonDocument::parse(result.output);
    permspec::DivisibilityReport report = permspec::divisibility_report_from_json(doc);
    CHECK(report.degree == 6);
    CHECK(report.product == permspec::BigCount(24));
    CHECK(report.spectrum.values == std::vector<int>{0, 2});
}

TEST_CASE("moments command") {
    RunResult result = run("moments " + kD10 + " --max-k 2 --method both");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("0\t1\t1") != std::string::npos);
    CHECK(result.output.find("1\t1\t1") != std::string::npos);
    CHECK(result.output.find("2\t3\t3") != std::string::npos);

    RunResult trivial = run("moments --gens \"()\" --degree 4 --max-k 1 --method direct");
    CHECK(trivial.output.find("1\t4") != std::string::npos);
}

TEST_CASE("classify command") {
    RunResult d10 = run("classify " + kD10);
    CHECK(d10.exit_code == 0);
    CHECK(d10.output.find("frobenius:           yes") != std::string::npos);

    RunResult json = run("classify --family affine --p 5 --m 1 --json");
    CHECK(json.exit_code == 0);
    auto doc = permspec::JsonDocument::parse(json.output);
    auto report = permspec::classification_report_from_json(doc);
    REQUIRE(report.sharply_transitive_k.has_value());
    CHECK(*report.sharply_transitive_k == 2);
    REQUIRE(report.is_sharp.has_value());
    CHECK(*report.is_sharp);
    REQUIRE(report.frobenius.has_value());
    CHECK(report.frobenius->is_frobenius);

    RunResult pgl = run("classify --family pgl2 --q 4 --json");
    auto pgl_report =
        permspec::classification_report_from_json(permspec::JsonDocument::parse(pgl.output));
    CHECK(pgl_report.sharply_transitive_k == 3);
}

TEST_CASE("file input and the order assertion") {
    {
        std::ofstream out("cli_good.gens");
        out << "degree 5\norder 10\n(1,2,3,4,5)\n(2,5)(3,4)\n";
    }
    CHECK(run("order --file cli_good.gens").output == "10\n");
    {
        std::ofstream out("cli_bad_order.gens");
        out << "degree 5\norder 11\n(1,2,3,4,5)\n";
    }
    CHECK(run("order --file cli_bad_order.gens").exit_code == 3);
    {
        std::ofstream out("cli_syntax.gens");
        out << "degree 5\n(1,2\n";
    }
    CHECK(run("order --file cli_syntax.gens").exit_code == 2);
    CHECK(run("order --file does_not_exist.gens").exit_code == 2);
}

TEST_CASE("parse errors exit with 2") {
    CHECK(run("order").exit_code == 2);                            // no source
    CHECK(run("order --family nosuch").exit_code == 2);
    CHECK(run("order --gens \"(1,9)\" --degree 4").exit_code == 2);
    CHECK(run("order --gens \"(1,2)\"").exit_code == 2);           // missing degree
    CHECK(run("check " + kD10 + " --filter bogus").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
}

TEST_CASE("cap overruns exit with 4") {
    CHECK(run("check --family mathieu12 --cap 1000 --filter all").exit_code == 4);
    CHECK(run("check --family symmetric --n 7 --filter subgroups").exit_code == 4);
}

TEST_CASE("corpus command") {
    RunResult result = run("corpus --json");
    CHECK(result.exit_code == 0);
    auto rows = permspec::JsonDocument::parse(result.output);
    CHECK(rows.size() >= 20);
    int sharp_rows = 0;
    for (const auto& row : rows) {
        CHECK(row.at("divides").get<bool>());
        CHECK(row.at("invariants_ok").get<bool>());
        sharp_rows += row.at("sharp").get<bool>();
    }
    CHECK(sharp_rows > 0);

    // the sharp rows are exactly the regular/sharply-transitive/square ones
    for (const auto& row : rows) {
        bool tagged = false;
        for (const auto& tag : row.at("tags"))
            if (tag == "regular" || tag == "sharply-k-transitive" || tag == "square-symmetry" ||
                tag == "sharp")
                tagged = true;
        CHECK(row.at("sharp").get<bool>() == tagged);
    }
}
