#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "cacheopt/cli.hpp"
#include "cacheopt/model.hpp"
#include "cacheopt/workload_json.hpp"

using namespace cacheopt;

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path, std::ios::binary);
    file << text;
    return path.string();
}

const std::string kFixtureJson =
    R"({"free_memory": 20, "files": [
        {"name": "alpha", "size_blocks": 10, "scan_count": 3},
        {"name": "beta", "size_blocks": 30, "scan_count": 1}]})";

std::string fixture_path() {
    static std::string path = write_temp("cacheopt_fixture.json", kFixtureJson);
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_workload_text accepts the documented schema") {
    Workload w = parse_workload_text(kFixtureJson);
    REQUIRE(w.file_count() == 2);
    CHECK(w.free_memory == 20);
    CHECK(w.files[0].name == "alpha");
    CHECK(w.files[0].size_blocks == 10);
    CHECK(w.files[0].scan_count == 3);
    CHECK(w.files[1].name == "beta");
}

TEST_CASE("parse_workload_text names the offending field") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_workload_text(text, "doc");
            FAIL("expected ParseError, document: " << text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("[1, 2]", "top level");
    expect_error(R"({"files": []})", "free_memory");
    expect_error(R"({"free_memory": 0, "files": []})", "free_memory");
    expect_error(R"({"free_memory": 2.5, "files": []})", "free_memory");
    expect_error(R"({"free_memory": 5})", "files");
    expect_error(R"({"free_memory": 5, "files": []})", "files");
    expect_error(R"({"free_memory": 5, "files": {}})", "files");
    expect_error(R"({"free_memory": 5, "files": [{"size_blocks": 1, "scan_count": 1}]})",
                 "files[0].name");
    expect_error(
        R"({"free_memory": 5, "files": [{"name": "", "size_blocks": 1, "scan_count": 1}]})",
        "files[0].name");
    expect_error(
        R"({"free_memory": 5, "files": [{"name": "a", "size_blocks": 0, "scan_count": 1}]})",
        "files[0].size_blocks");
    expect_error(
        R"({"free_memory": 5, "files": [{"name": "a", "size_blocks": 1}]})",
        "files[0].scan_count");
    expect_error(R"({"free_memory": 5, "files": [
                     {"name": "a", "size_blocks": 1, "scan_count": 1},
                     {"name": "a", "size_blocks": 2, "scan_count": 1}]})",
                 "files[1].name");
    expect_error(R"({"free_memory": 5, "budget": 3, "files": []})", "budget");
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_workload_text("{\n  \"free_memory\": oops\n}", "doc");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("doc: 2:") != std::string::npos);
    }
}

TEST_CASE("allocate prints the fixture report byte for byte") {
    const std::string expected =
        "workload: files=2 free_memory=20 budget=20\n"
        "strategy: total-calls\n"
        "  real: f1=3 f2=3 f3=3 f4=400\n"
        "    file alpha: buffer=10 ratio=1 utilization=1 cached=yes\n"
        "    file beta: buffer=10 ratio=3 utilization=0.333333 cached=no\n"
        "  integral: f1=3 f2=3 f3=3 f4=400\n"
        "    file alpha: buffer=10 ratio=1 utilization=1 cached=yes\n"
        "    file beta: buffer=10 ratio=3 utilization=0.333333 cached=no\n";
    CliResult result = run({"allocate", "--input", fixture_path(), "--strategy",
                            "total-calls", "--integral"});
    CHECK(result.exit_code == 0);
    CHECK(result.err.empty());
    CHECK(result.out == expected);
}

TEST_CASE("allocate csv output is byte-stable") {
    const std::string expected =
        "strategy,file,buffer_real,buffer_int,ratio,f1,f2,f3,f4\n"
        "total-calls,alpha,10,10,1,3,3,3,400\n"
        "total-calls,beta,10,10,3,3,3,3,400\n";
    CliResult result = run({"allocate", "--input", fixture_path(), "--strategy",
                            "total-calls", "--integral", "--format", "csv"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == expected);

    // Without --integral the buffer_int column stays empty.
    CliResult bare = run({"allocate", "--input", fixture_path(), "--strategy",
                          "total-calls", "--format", "csv"});
    CHECK(bare.out.find("total-calls,alpha,10,,1,") != std::string::npos);
}

TEST_CASE("csv quotes file names containing separators") {
    std::string path = write_temp(
        "cacheopt_comma.json",
        R"({"free_memory": 4, "files": [{"name": "a,b", "size_blocks": 9, "scan_count": 1}]})");
    CliResult result = run({"allocate", "--input", path, "--strategy", "minimax-ratio",
                            "--format", "csv"});
    CHECK(result.out.find("minimax-ratio,\"a,b\",4,") != std::string::npos);
}

TEST_CASE("compare reports all four strategies with the worked values") {
    CliResult result = run({"compare", "--input", fixture_path()});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("strategy: total-calls\n  real: f1=3 f2=3 f3=3 f4=400") !=
          std::string::npos);
    CHECK(result.out.find("strategy: minimax-ratio\n  real: f1=8 f2=2 f3=6 f4=250") !=
          std::string::npos);
    CHECK(result.out.find("strategy: weighted-minimax\n  real: f1=3 f2=3 f3=3 f4=400") !=
          std::string::npos);
    CHECK(result.out.find("strategy: nearest-ideal\n  real: f1=31.5789 f2=10 f3=30 f4=202") !=
          std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    for (std::string format : {"table", "json", "csv"}) {
        CliResult first = run({"compare", "--input", fixture_path(), "--format", format});
        CliResult second = run({"compare", "--input", fixture_path(), "--format", format});
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("json reports round-trip through the evaluators bit for bit") {
    CliResult result = run({"compare", "--input", fixture_path(), "--format", "json"});
    REQUIRE(result.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(result.out);
    Workload w = parse_workload_text(kFixtureJson);

    REQUIRE(doc.at("strategies").size() == 4);
    for (const auto& node : doc.at("strategies")) {
        for (const char* section : {"real", "integral"}) {
            const auto& block = node.at(section);
            auto buffers = block.at("buffers").get<std::vector<double>>();
            Allocation a{buffers, section == std::string("integral")};
            ObjectiveReport report = evaluate_all(w, a);
            CHECK(report.f1 == block.at("f1").get<double>());
            CHECK(report.f2 == block.at("f2").get<double>());
            CHECK(report.f3 == block.at("f3").get<double>());
            CHECK(report.f4 == block.at("f4").get<double>());
        }
    }
    CHECK(doc.at("workload").at("free_memory") == 20);
}

TEST_CASE("oracle-check reports the optimum and a zero gap on the fixture") {
    CliResult f1 = run({"oracle-check", "--input", fixture_path(), "--objective", "f1"});
    CHECK(f1.exit_code == 0);
    CHECK(f1.out.find("oracle: objective=f1 optimum=3 enumerated=10 ties=1\n"
                      "  closed-form=3 rounded=3 absolute-gap=0 relative-gap=0\n") !=
          std::string::npos);

    CliResult f4 = run({"oracle-check", "--input", fixture_path(), "--objective", "f4"});
    CHECK(f4.out.find("oracle: objective=f4 optimum=202 enumerated=10 ties=1") !=
          std::string::npos);
}

TEST_CASE("simulate reports calls, prediction, and reconciliation") {
    CliResult chunked = run({"simulate", "--input", fixture_path(), "--strategy",
                             "minimax-ratio"});
    CHECK(chunked.exit_code == 0);
    CHECK(chunked.out.find(
              "simulation: policy=chunked interleaving=concat predicted=8 fully-cached=0\n"
              "  file alpha: calls=6\n"
              "  file beta: calls=2\n"
              "  total-calls=8 blocks-transferred=60\n") != std::string::npos);

    CliResult cached = run({"simulate", "--input", fixture_path(), "--strategy",
                            "total-calls"});
    CHECK(cached.out.find("predicted=3 fully-cached=1") != std::string::npos);
    CHECK(cached.out.find("total-calls=4") != std::string::npos);

    CliResult lru = run({"simulate", "--input", fixture_path(), "--strategy",
                         "minimax-ratio", "--policy", "lru-block", "--interleaving",
                         "round-robin"});
    CHECK(lru.out.find("policy=lru-block interleaving=round-robin") != std::string::npos);
    CHECK(lru.out.find("total-calls=60 blocks-transferred=60") != std::string::npos);
}

TEST_CASE("exit code 1 covers parse and usage failures") {
    std::string bad = write_temp("cacheopt_bad.json", "{\"free_memory\": 5, ");
    CliResult parse = run({"allocate", "--input", bad, "--strategy", "total-calls"});
    CHECK(parse.exit_code == 1);
    CHECK(parse.err.find("cacheopt_bad.json") != std::string::npos);

    CliResult missing = run({"allocate", "--input", "/nonexistent/w.json", "--strategy",
                             "total-calls"});
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    CliResult usage = run({"allocate", "--input", fixture_path(), "--strategy", "bogus"});
    CHECK(usage.exit_code == 1);

    CliResult none = run({});
    CHECK(none.exit_code == 1);
}

TEST_CASE("exit code 2 flags a budget below the file count") {
    std::string path = write_temp(
        "cacheopt_small.json",
        R"({"free_memory": 1, "files": [
            {"name": "a", "size_blocks": 10, "scan_count": 1},
            {"name": "b", "size_blocks": 30, "scan_count": 1}]})");
    for (std::string cmd : {"allocate", "compare", "oracle-check", "simulate"}) {
        std::vector<std::string> args = {cmd, "--input", path};
        if (cmd == "allocate" || cmd == "simulate")
            args.insert(args.end(), {"--strategy", "total-calls"});
        if (cmd == "oracle-check") args.insert(args.end(), {"--objective", "f1"});
        CliResult result = run(args);
        CHECK(result.exit_code == 2);
        CHECK(result.err.find("budget below file count") != std::string::npos);
    }
}

TEST_CASE("exit code 3 flags instances beyond the oracle limit") {
    std::string path = write_temp(
        "cacheopt_huge.json",
        R"({"free_memory": 1000, "files": [
            {"name": "a", "size_blocks": 1000, "scan_count": 1},
            {"name": "b", "size_blocks": 1000, "scan_count": 1},
            {"name": "c", "size_blocks": 1000, "scan_count": 1}]})");
    CliResult result = run({"oracle-check", "--input", path, "--objective", "f2"});
    CHECK(result.exit_code == 3);
    CHECK(result.err.find("enumeration limit") != std::string::npos);

    // The other commands never enumerate and stay usable at this size.
    CliResult ok = run({"allocate", "--input", path, "--strategy", "minimax-ratio"});
    CHECK(ok.exit_code == 0);
}

TEST_CASE("help exits cleanly") {
    CliResult help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("allocate") != std::string::npos);
}

TEST_CASE("the standalone binary matches the in-process driver") {
    std::string cmd = std::string(CACHEOPT_BINARY_PATH) + " allocate --input " +
                      fixture_path() + " --strategy total-calls --integral 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[256];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);

    CliResult in_process = run({"allocate", "--input", fixture_path(), "--strategy",
                                "total-calls", "--integral"});
    CHECK(output == in_process.out);
}

}  // TEST_SUITE
