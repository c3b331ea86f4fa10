#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exitCode;
    std::string output;
};

std::string cliPath() {
    const char* p = std::getenv("GRM_CLI");
    REQUIRE_MESSAGE(p != nullptr, "GRM_CLI must point at the command-line binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = cliPath() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path tempFile(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("params prints the derived quantities") {
    auto res = run("params -r 6 -m 2 -q 8");
    CHECK(res.exitCode == 0);
    CHECK(res.output == "n=64 k=28 d=16 locality=7 lines=72 lines_per_point=9\n");
}

TEST_CASE("invalid parameters exit with the usage code") {
    CHECK(run("params -r 7 -m 2 -q 8").exitCode == 2);
    CHECK(run("params -r 1 -m 2 -q 6").exitCode == 2);
    CHECK(run("decode --in /nonexistent --decoder warp").exitCode == 2);
    CHECK(run("").exitCode != 0);
}

TEST_CASE("encode and decode round trip through files") {
    auto msgPath = tempFile("grm_cli_msg.txt");
    auto cwPath = tempFile("grm_cli_cw.txt");
    {
        std::ofstream msg(msgPath);
        for (int i = 0; i < 6; ++i) msg << (i % 3) << "\n"; // k = 6 for (2, 2, 4)
    }
    auto enc = run("encode -r 2 -m 2 -q 4 --in " + msgPath.string() + " --out " + cwPath.string());
    REQUIRE(enc.exitCode == 0);

    for (const char* dec : {"ld", "pld", "ge", "ld-ge"}) {
        CAPTURE(dec);
        auto outPath = tempFile(std::string("grm_cli_out_") + dec + ".txt");
        auto res = run("decode --in " + cwPath.string() + " --decoder " + dec + " --out " +
                       outPath.string());
        CHECK(res.exitCode == 0);
        CHECK(res.output.find("full=yes") != std::string::npos);
        CHECK(slurp(outPath) == slurp(cwPath));
        std::filesystem::remove(outPath);
    }
    std::filesystem::remove(msgPath);
    std::filesystem::remove(cwPath);
}

TEST_CASE("an undecodable file exits with the incomplete code") {
    auto inPath = tempFile("grm_cli_sparse.txt");
    {
        std::ofstream in(inPath);
        in << "1 2 3\n0\n";
        for (int i = 0; i < 8; ++i) in << "?\n";
    }
    auto outPath = tempFile("grm_cli_sparse_out.txt");
    auto res = run("decode --in " + inPath.string() + " --decoder ld --out " + outPath.string());
    CHECK(res.exitCode == 1);
    CHECK(res.output.find("full=no") != std::string::npos);
    std::filesystem::remove(inPath);
    std::filesystem::remove(outPath);
}

TEST_CASE("a corrupted file exits with the integrity code") {
    auto inPath = tempFile("grm_cli_corrupt.txt");
    {
        std::ofstream in(inPath);
        in << "1 2 3\n0\nbogus\n";
        for (int i = 0; i < 7; ++i) in << "0\n";
    }
    auto res = run("decode --in " + inPath.string() + " --decoder ld --out /dev/null");
    CHECK(res.exitCode == 3);
    std::filesystem::remove(inPath);
}

TEST_CASE("geometry self-check reports and passes") {
    auto res = run("verify-geometry -q 3 -m 2");
    CHECK(res.exitCode == 0);
    CHECK(res.output == "12 lines, brute-force 12, PASS\n");
}

TEST_CASE("simulate writes a reproducible csv") {
    auto cfgPath = tempFile("grm_cli_sim.json");
    {
        std::ofstream cfg(cfgPath);
        cfg << R"({"r":1,"m":2,"q":3,"decoder":"ge","trials":40,"seed":2024})";
    }
    auto out1 = tempFile("grm_cli_sim1.csv");
    auto out2 = tempFile("grm_cli_sim2.csv");
    auto r1 = run("simulate --config " + cfgPath.string() + " --out " + out1.string());
    auto r2 = run("simulate --config " + cfgPath.string() + " --out " + out2.string());
    REQUIRE(r1.exitCode == 0);
    REQUIRE(r2.exitCode == 0);
    auto text = slurp(out1);
    CHECK(text == slurp(out2));
    CHECK(text.find("# prng=mt19937_64 code=(1,2,3) decoder=ge model=random_order trials=40 seed=2024\n") == 0);
    CHECK(text.find("received_fraction,mean_info_fraction,prob_full_decode,mean_elapsed_us\n") != std::string::npos);
    std::filesystem::remove(cfgPath);
    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
}
