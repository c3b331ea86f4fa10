#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grm/decoders.hpp"
#include "grm/errors.hpp"
#include "grm/geometry.hpp"
#include "grm/sim.hpp"
#include "grm/symbol_io.hpp"

namespace {

using nlohmann::json;

std::ifstream openIn(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return in;
}

std::ofstream openOut(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    return out;
}

uint64_t resolveSeed(const std::optional<uint64_t>& flag, const json& cfg) {
    if (flag) return *flag;
    if (cfg.contains("seed")) return cfg.at("seed").get<uint64_t>();
    std::random_device rd;
    uint64_t s = (static_cast<uint64_t>(rd()) << 32) | rd();
    std::cout << "seed drawn: " << s << "\n";
    return s;
}

grm::TrialConfig loadTrialConfig(const json& j) {
    grm::TrialConfig cfg;
    cfg.codeParams = grm::makeCodeParams(j.at("r").get<int>(), j.at("m").get<int>(), j.at("q").get<int>());
    cfg.decoder = grm::parseDecoder(j.value("decoder", "ld"));
    cfg.trials = j.value("trials", 1);
    std::string model = j.value("reception_model", "random_order");
    if (model == "random_order") {
        cfg.receptionModel = grm::ReceptionModel::RandomOrder;
    } else if (model == "iid_erasure") {
        cfg.receptionModel = grm::ReceptionModel::IidErasure;
        cfg.epsilon = j.at("epsilon").get<double>();
    } else {
        throw std::invalid_argument("unknown reception_model: " + model);
    }
    cfg.measureTime = j.value("measure_time", false);
    cfg.threads = j.value("threads", 0);
    return cfg;
}

int cmdParams(int r, int m, int q) {
    auto p = grm::makeCodeParams(r, m, q);
    std::cout << "n=" << p.n << " k=" << p.k << " d=" << p.d << " locality=" << p.locality
              << " lines=" << grm::lineCount(q, m) << " lines_per_point=" << grm::linesPerPoint(q, m)
              << "\n";
    return 0;
}

int cmdEncode(int r, int m, int q, const std::string& inPath, const std::string& outPath) {
    grm::GrmCode code(r, m, q);
    auto in = openIn(inPath);
    auto msg = grm::readValues(in, code.params().k, q);
    auto cw = code.encode(msg);
    auto out = openOut(outPath);
    grm::writeSymbolFile(out, code.params(), cw);
    return 0;
}

int cmdDecode(const std::string& inPath, const std::string& decoderName, const std::string& outPath) {
    auto in = openIn(inPath);
    auto sf = grm::readSymbolFile(in);
    grm::GrmCode code(sf.params.r, sf.params.m, sf.params.q);
    auto kind = grm::parseDecoder(decoderName);

    int received = 0;
    for (int v : sf.symbols)
        if (v != grm::kErased) ++received;

    grm::DecodeReport rep = [&] {
        if (kind == grm::DecoderKind::PLD) {
            std::vector<std::pair<int, int>> arrivals;
            for (int j = 0; j < sf.params.n; ++j)
                if (sf.symbols[j] != grm::kErased) arrivals.emplace_back(j, sf.symbols[j]);
            auto reports = grm::decodePLD(code, arrivals);
            if (!reports.empty()) return std::move(reports.back());
            grm::DecodeReport empty{grm::ReceptionState(code)};
            return empty;
        }
        grm::ReceptionState st(code);
        for (int j = 0; j < sf.params.n; ++j)
            if (sf.symbols[j] != grm::kErased) st.receive(j, sf.symbols[j]);
        switch (kind) {
        case grm::DecoderKind::LD:
            return grm::decodeLD(code, std::move(st));
        case grm::DecoderKind::GE:
            return grm::decodeGE(code, std::move(st));
        default:
            return grm::decodeLDThenGE(code, std::move(st));
        }
    }();

    std::vector<int> outSymbols(sf.params.n);
    for (int j = 0; j < sf.params.n; ++j)
        outSymbols[j] = rep.finalState.known(j) ? rep.finalState.value(j) : grm::kErased;
    auto out = openOut(outPath);
    grm::writeSymbolFile(out, sf.params, outSymbols);

    std::cout << "decoder=" << grm::decoderName(kind) << " received=" << received
              << " recovered=" << rep.recoveredCount << " full=" << (rep.fullDecode ? "yes" : "no")
              << " info=" << (rep.infoDecode ? "yes" : "no") << " line_ops=" << rep.lineDecodeOps
              << " rank=" << rep.rrefPivots << "\n";
    return rep.fullDecode ? 0 : 1;
}

int cmdSimulate(const std::string& configPath, const std::optional<uint64_t>& seedFlag,
                const std::string& decoderFlag, int trialsFlag, const std::string& outPath) {
    auto in = openIn(configPath);
    json j = json::parse(in);
    auto cfg = loadTrialConfig(j);
    if (!decoderFlag.empty()) cfg.decoder = grm::parseDecoder(decoderFlag);
    if (trialsFlag > 0) cfg.trials = trialsFlag;
    cfg.seed = resolveSeed(seedFlag, j);

    auto curve = grm::runCurve(cfg);
    openOut(outPath) << grm::curveCsv(grm::curveMetaComment(cfg), curve);
    std::cout << "wrote " << outPath << " (seed=" << cfg.seed << ")\n";

    if (j.contains("rs_baseline")) {
        const auto& rb = j.at("rs_baseline");
        int bk = rb.at("k").get<int>();
        std::string rbOut = rb.at("out").get<std::string>();
        auto base = grm::runRsBaselineCurve(cfg.codeParams.q, bk, cfg.trials, cfg.seed);
        char meta[192];
        std::snprintf(meta, sizeof meta, "prng=mt19937_64 baseline=rs(%d,%d) model=random_order trials=%d seed=%llu",
                      cfg.codeParams.q, bk, cfg.trials, static_cast<unsigned long long>(cfg.seed));
        openOut(rbOut) << grm::curveCsv(meta, base);
        std::cout << "wrote " << rbOut << "\n";
    }
    return 0;
}

int cmdBench(const std::string& configPath, const std::optional<uint64_t>& seedFlag, int trialsFlag,
             const std::string& outPath) {
    auto in = openIn(configPath);
    json j = json::parse(in);
    auto cfg = loadTrialConfig(j);
    if (trialsFlag > 0) cfg.trials = trialsFlag;
    cfg.seed = resolveSeed(seedFlag, j);

    std::vector<double> fractions = j.value("fractions", std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5});
    std::vector<grm::DecoderKind> decoders;
    for (const auto& name : j.value("decoders", std::vector<std::string>{"ld", "pld", "ge"}))
        decoders.push_back(grm::parseDecoder(name));

    auto rows = grm::runBench(cfg, fractions, decoders);
    openOut(outPath) << grm::benchCsv(grm::benchMetaComment(cfg), rows);
    std::cout << "wrote " << outPath << " (seed=" << cfg.seed << ")\n";
    return 0;
}

int cmdVerifyGeometry(int q, int m) {
    grm::Field f(q);
    long long n = 1;
    for (int i = 0; i < m; ++i) {
        n *= q;
        if (n > 2048) throw std::invalid_argument("q^m too large for the quadratic brute force");
    }
    auto lines = grm::enumerateLines(f, m);
    std::set<std::vector<int>> enumerated;
    for (const auto& line : lines) {
        auto pts = line.points;
        std::sort(pts.begin(), pts.end());
        enumerated.insert(pts);
    }
    auto brute = grm::bruteForceLinePointSets(f, m);
    bool pass = enumerated.size() == lines.size() && enumerated == brute;
    std::cout << lines.size() << " lines, brute-force " << brute.size() << ", "
              << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) throw grm::IntegrityError("line enumeration disagrees with the pair brute force");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Reed-Muller erasure codec and channel simulator"};
    app.require_subcommand(1);

    int r = 0, m = 0, q = 0;
    std::string inPath, outPath, configPath, decoder = "ld", decoderOverride;
    std::optional<uint64_t> seed;
    int trials = 0;
    int rc = 0;

    auto* pParams = app.add_subcommand("params", "Print code parameters");
    pParams->add_option("-r", r)->required();
    pParams->add_option("-m", m)->required();
    pParams->add_option("-q", q)->required();
    pParams->callback([&] { rc = cmdParams(r, m, q); });

    auto* pEncode = app.add_subcommand("encode", "Encode a message file");
    pEncode->add_option("-r", r)->required();
    pEncode->add_option("-m", m)->required();
    pEncode->add_option("-q", q)->required();
    pEncode->add_option("--in", inPath)->required();
    pEncode->add_option("--out", outPath)->required();
    pEncode->callback([&] { rc = cmdEncode(r, m, q, inPath, outPath); });

    auto* pDecode = app.add_subcommand("decode", "Decode a received file with ? erasures");
    pDecode->add_option("--in", inPath)->required();
    pDecode->add_option("--decoder", decoder)->check(CLI::IsMember({"ld", "pld", "ge", "ld-ge"}));
    pDecode->add_option("--out", outPath)->required();
    pDecode->callback([&] { rc = cmdDecode(inPath, decoder, outPath); });

    auto* pSim = app.add_subcommand("simulate", "Run reception curves from a JSON config");
    pSim->add_option("--config", configPath)->required();
    pSim->add_option("--decoder", decoderOverride)->check(CLI::IsMember({"ld", "pld", "ge", "ld-ge"}));
    pSim->add_option("--seed", seed);
    pSim->add_option("--trials", trials);
    pSim->add_option("--out", outPath)->required();
    pSim->callback([&] { rc = cmdSimulate(configPath, seed, decoderOverride, trials, outPath); });

    auto* pBench = app.add_subcommand("bench", "Time the decoders from a JSON config");
    pBench->add_option("--config", configPath)->required();
    pBench->add_option("--seed", seed);
    pBench->add_option("--trials", trials);
    pBench->add_option("--out", outPath)->required();
    pBench->callback([&] { rc = cmdBench(configPath, seed, trials, outPath); });

    auto* pVerify = app.add_subcommand("verify-geometry", "Cross-check line enumeration by brute force");
    pVerify->add_option("-q", q)->required();
    pVerify->add_option("-m", m)->required();
    pVerify->callback([&] { rc = cmdVerifyGeometry(q, m); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const grm::IntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
