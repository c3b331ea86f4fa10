#include "grm/sim.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace grm {

namespace {

using Clock = std::chrono::steady_clock;

// Stream ids keep the RNG draws of the different harness modes disjoint.
constexpr uint32_t kCurveStream = 0;
constexpr uint32_t kRsStream = 1;
constexpr uint32_t kBenchStreamBase = 1000;

std::vector<int> randomMessage(std::mt19937_64& rng, int k, int q) {
    std::vector<int> msg(k);
    for (int i = 0; i < k; ++i) msg[i] = uniformBelow(rng, q);
    return msg;
}

std::vector<int> randomOrder(std::mt19937_64& rng, int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle(rng, order);
    return order;
}

double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

void checkAgainstTruth(const ReceptionState& st, const std::vector<int>& cw) {
    for (int j = 0; j < st.size(); ++j)
        if (st.known(j) && st.value(j) != cw[j])
            throw std::logic_error("decoder produced a wrong symbol value");
}

DecodeReport decodeWith(const GrmCode& code, DecoderKind d, ReceptionState state) {
    switch (d) {
    case DecoderKind::LD:
        return decodeLD(code, std::move(state));
    case DecoderKind::GE:
        return decodeGE(code, std::move(state));
    case DecoderKind::LD_THEN_GE:
        return decodeLDThenGE(code, std::move(state));
    default:
        throw std::invalid_argument("decoder cannot run on a fixed state");
    }
}

PrefixSummary summarize(const DecodeReport& rep, long long elapsedNs) {
    PrefixSummary s;
    s.known = rep.finalState.knownCount();
    s.infoKnown = rep.finalState.infoKnownCount();
    s.infoDecode = rep.infoDecode;
    s.fullDecode = rep.fullDecode;
    s.elapsedNs = elapsedNs;
    return s;
}

TrialRecord runOneCurveTrial(const GrmCode& code, const TrialConfig& cfg, uint32_t trial) {
    const int n = code.params().n;
    auto rng = makeRng(cfg.seed, kCurveStream, trial);
    auto msg = randomMessage(rng, code.params().k, code.params().q);
    auto cw = code.encode(msg);
    auto order = randomOrder(rng, n);

    TrialRecord rec;
    rec.seed = cfg.seed;
    rec.orderDigest = fnv1a64(order.data(), order.size() * sizeof(int));
    rec.prefixes.resize(n + 1);

    if (cfg.decoder == DecoderKind::PLD) {
        std::vector<std::pair<int, int>> arrivals;
        arrivals.reserve(n);
        for (int pos : order) arrivals.emplace_back(pos, cw[pos]);
        auto reports = decodePLD(code, arrivals);
        for (int t = 1; t <= n; ++t) {
            checkAgainstTruth(reports[t - 1].finalState, cw);
            rec.prefixes[t] = summarize(reports[t - 1], reports[t - 1].elapsed.count());
        }
    } else {
        for (int t = 1; t <= n; ++t) {
            ReceptionState st(code);
            for (int i = 0; i < t; ++i) st.receive(order[i], cw[order[i]]);
            auto rep = decodeWith(code, cfg.decoder, std::move(st));
            checkAgainstTruth(rep.finalState, cw);
            rec.prefixes[t] = summarize(rep, rep.elapsed.count());
        }
    }

    rec.fullRankThreshold = n;
    for (int t = 0; t <= n; ++t)
        if (rec.prefixes[t].fullDecode) {
            rec.fullRankThreshold = t;
            break;
        }
    return rec;
}

void forEachTrial(int trials, int threads, const std::function<void(int)>& body) {
    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::clamp(nthreads, 1, trials);
    if (nthreads == 1) {
        for (int tr = 0; tr < trials; ++tr) body(tr);
        return;
    }
    std::mutex errMu;
    std::exception_ptr err;
    auto worker = [&](int w) {
        try {
            for (int tr = w; tr < trials; tr += nthreads) body(tr);
        } catch (...) {
            std::lock_guard<std::mutex> lk(errMu);
            if (!err) err = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace

const char* decoderName(DecoderKind d) {
    switch (d) {
    case DecoderKind::LD:
        return "ld";
    case DecoderKind::PLD:
        return "pld";
    case DecoderKind::GE:
        return "ge";
    case DecoderKind::LD_THEN_GE:
        return "ld-ge";
    }
    return "?";
}

DecoderKind parseDecoder(const std::string& name) {
    if (name == "ld") return DecoderKind::LD;
    if (name == "pld") return DecoderKind::PLD;
    if (name == "ge") return DecoderKind::GE;
    if (name == "ld-ge") return DecoderKind::LD_THEN_GE;
    throw std::invalid_argument("unknown decoder: " + name);
}

std::vector<CurvePoint> runCurve(const TrialConfig& cfg, std::vector<TrialRecord>* records) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.receptionModel != ReceptionModel::RandomOrder)
        throw std::invalid_argument("curves run under the RandomOrder model");
    GrmCode code(cfg.codeParams.r, cfg.codeParams.m, cfg.codeParams.q);
    const int n = code.params().n;
    const int k = code.params().k;

    std::vector<TrialRecord> recs(cfg.trials);
    forEachTrial(cfg.trials, cfg.threads,
                 [&](int tr) { recs[tr] = runOneCurveTrial(code, cfg, static_cast<uint32_t>(tr)); });

    std::vector<CurvePoint> out(n + 1);
    for (int t = 0; t <= n; ++t) {
        long long infoSum = 0;
        long long timeSum = 0;
        long long fullInfo = 0;
        for (const auto& rec : recs) {
            infoSum += rec.prefixes[t].infoKnown;
            timeSum += rec.prefixes[t].elapsedNs;
            fullInfo += rec.prefixes[t].infoDecode ? 1 : 0;
        }
        out[t].receivedFraction = static_cast<double>(t) / n;
        out[t].meanInfoKnownFraction = static_cast<double>(infoSum) / (static_cast<double>(cfg.trials) * k);
        out[t].probFullInfoDecode = static_cast<double>(fullInfo) / cfg.trials;
        out[t].meanElapsedUs =
            cfg.measureTime ? static_cast<double>(timeSum) / (cfg.trials * 1000.0) : 0.0;
    }
    if (records) *records = std::move(recs);
    return out;
}

std::vector<BenchRow> runBench(const TrialConfig& cfg, const std::vector<double>& fractions,
                               const std::vector<DecoderKind>& decoders) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (decoders.empty()) throw std::invalid_argument("need at least one decoder");
    for (double f : fractions)
        if (f < 0.0 || f > 1.0) throw std::invalid_argument("erasure fractions must be in [0, 1]");
    GrmCode code(cfg.codeParams.r, cfg.codeParams.m, cfg.codeParams.q);
    const int n = code.params().n;

    std::vector<BenchRow> rows;
    rows.reserve(fractions.size() * decoders.size());
    for (size_t fi = 0; fi < fractions.size(); ++fi) {
        const double eps = fractions[fi];
        std::vector<long long> sums(decoders.size(), 0);
        for (int tr = 0; tr < cfg.trials; ++tr) {
            auto rng = makeRng(cfg.seed, kBenchStreamBase + static_cast<uint32_t>(fi),
                               static_cast<uint32_t>(tr));
            auto msg = randomMessage(rng, code.params().k, code.params().q);
            auto cw = code.encode(msg);
            std::vector<int> received;
            received.reserve(n);
            for (int j = 0; j < n; ++j)
                if (canonical(rng) >= eps) received.push_back(j);

            for (size_t di = 0; di < decoders.size(); ++di) {
                if (decoders[di] == DecoderKind::PLD) {
                    std::vector<std::pair<int, int>> arrivals;
                    arrivals.reserve(received.size());
                    for (int pos : received) arrivals.emplace_back(pos, cw[pos]);
                    // The per-arrival reports carry the cumulative processing
                    // time with the snapshot bookkeeping already excluded.
                    auto reports = decodePLD(code, arrivals);
                    if (!reports.empty()) {
                        sums[di] += reports.back().elapsed.count();
                        checkAgainstTruth(reports.back().finalState, cw);
                    }
                } else {
                    ReceptionState st(code);
                    for (int pos : received) st.receive(pos, cw[pos]);
                    auto rep = decodeWith(code, decoders[di], std::move(st));
                    sums[di] += rep.elapsed.count();
                    checkAgainstTruth(rep.finalState, cw);
                }
            }
        }
        for (size_t di = 0; di < decoders.size(); ++di) {
            BenchRow row;
            row.fractionErased = eps;
            row.decoder = decoders[di];
            row.meanElapsedUs = static_cast<double>(sums[di]) / (cfg.trials * 1000.0);
            rows.push_back(row);
        }
    }
    return rows;
}

ThresholdSummary measureFullRankThreshold(const TrialConfig& cfg) {
    if (cfg.decoder != DecoderKind::GE)
        throw std::invalid_argument("full-rank threshold is defined for the GE decoder");
    if (cfg.receptionModel != ReceptionModel::RandomOrder)
        throw std::invalid_argument("full-rank threshold runs under the RandomOrder model");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    GrmCode code(cfg.codeParams.r, cfg.codeParams.m, cfg.codeParams.q);
    const int n = code.params().n;
    const int k = code.params().k;

    std::vector<int> thresholds(cfg.trials);
    forEachTrial(cfg.trials, cfg.threads, [&](int tr) {
        auto rng = makeRng(cfg.seed, kCurveStream, static_cast<uint32_t>(tr));
        auto msg = randomMessage(rng, k, code.params().q);
        auto cw = code.encode(msg);
        auto order = randomOrder(rng, n);
        auto fullAt = [&](int t) {
            ReceptionState st(code);
            for (int i = 0; i < t; ++i) st.receive(order[i], cw[order[i]]);
            return decodeGE(code, std::move(st)).fullDecode;
        };
        // Recovery is monotone in the prefix, and t < k can never determine
        // all symbols, so the answer lies in [k, n].
        int lo = k, hi = n;
        while (lo < hi) {
            int mid = lo + (hi - lo) / 2;
            if (fullAt(mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        thresholds[tr] = lo;
    });

    ThresholdSummary s;
    s.trials = cfg.trials;
    s.minT = *std::min_element(thresholds.begin(), thresholds.end());
    long long sum = std::accumulate(thresholds.begin(), thresholds.end(), 0LL);
    s.meanT = static_cast<double>(sum) / cfg.trials;
    std::sort(thresholds.begin(), thresholds.end());
    int mid = cfg.trials / 2;
    s.medianT = cfg.trials % 2 ? thresholds[mid] : (thresholds[mid - 1] + thresholds[mid]) / 2.0;
    return s;
}

std::vector<CurvePoint> runRsBaselineCurve(int q, int k, int trials, uint64_t seed) {
    Field f(q);
    if (k < 1 || k > q) throw std::invalid_argument("baseline needs 1 <= k <= q");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    std::vector<int> gammas(q);
    for (int i = 0; i < q; ++i) gammas[i] = f.element(i);

    std::vector<long long> infoSums(q + 1, 0);
    for (int tr = 0; tr < trials; ++tr) {
        auto rng = makeRng(seed, kRsStream, static_cast<uint32_t>(tr));
        LineView enc;
        enc.gamma = gammas;
        enc.values.assign(q, kErased);
        for (int i = 0; i < k; ++i) enc.values[i] = uniformBelow(rng, q);
        auto cw = interpolateLine(f, enc, k - 1);
        auto order = randomOrder(rng, q);

        std::vector<bool> have(q, false);
        int infoDirect = 0;
        for (int t = 1; t <= q; ++t) {
            have[order[t - 1]] = true;
            if (order[t - 1] < k) ++infoDirect;
            if (t >= k) {
                LineView rx;
                rx.gamma = gammas;
                rx.values.assign(q, kErased);
                for (int j = 0; j < q; ++j)
                    if (have[j]) rx.values[j] = cw[j];
                if (interpolateLine(f, rx, k - 1) != cw)
                    throw std::logic_error("baseline reconstruction mismatch");
                infoSums[t] += k;
            } else {
                infoSums[t] += infoDirect;
            }
        }
    }

    std::vector<CurvePoint> out(q + 1);
    for (int t = 0; t <= q; ++t) {
        out[t].receivedFraction = static_cast<double>(t) / q;
        out[t].meanInfoKnownFraction = static_cast<double>(infoSums[t]) / (static_cast<double>(trials) * k);
        out[t].probFullInfoDecode = t >= k ? 1.0 : 0.0;
        out[t].meanElapsedUs = 0.0;
    }
    return out;
}

std::string curveCsv(const std::string& meta, const std::vector<CurvePoint>& points) {
    std::string s;
    if (!meta.empty()) s += "# " + meta + "\n";
    s += "received_fraction,mean_info_fraction,prob_full_decode,mean_elapsed_us\n";
    char buf[160];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.3f\n", p.receivedFraction,
                      p.meanInfoKnownFraction, p.probFullInfoDecode, p.meanElapsedUs);
        s += buf;
    }
    return s;
}

std::string benchCsv(const std::string& meta, const std::vector<BenchRow>& rows) {
    std::string s;
    if (!meta.empty()) s += "# " + meta + "\n";
    s += "fraction_erased,decoder,mean_elapsed_us\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f,%s,%.3f\n", r.fractionErased, decoderName(r.decoder),
                      r.meanElapsedUs);
        s += buf;
    }
    return s;
}

std::string curveMetaComment(const TrialConfig& cfg) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "prng=mt19937_64 code=(%d,%d,%d) decoder=%s model=random_order trials=%d seed=%llu",
                  cfg.codeParams.r, cfg.codeParams.m, cfg.codeParams.q, decoderName(cfg.decoder),
                  cfg.trials, static_cast<unsigned long long>(cfg.seed));
    return buf;
}

std::string benchMetaComment(const TrialConfig& cfg) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "prng=mt19937_64 code=(%d,%d,%d) model=iid_erasure trials=%d seed=%llu",
                  cfg.codeParams.r, cfg.codeParams.m, cfg.codeParams.q, cfg.trials,
                  static_cast<unsigned long long>(cfg.seed));
    return buf;
}

std::mt19937_64 makeRng(uint64_t seed, uint32_t stream, uint32_t trial) {
    std::seed_seq sq{static_cast<uint32_t>(seed & 0xffffffffu), static_cast<uint32_t>(seed >> 32),
                     stream, trial};
    return std::mt19937_64(sq);
}

int uniformBelow(std::mt19937_64& rng, int bound) {
    if (bound <= 0) throw std::invalid_argument("bound must be positive");
    const uint64_t r = static_cast<uint64_t>(bound);
    const uint64_t rem = (UINT64_MAX % r + 1) % r;
    const uint64_t cutoff = UINT64_MAX - rem;
    uint64_t x;
    do {
        x = rng();
    } while (x > cutoff);
    return static_cast<int>(x % r);
}

void shuffle(std::mt19937_64& rng, std::vector<int>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
        std::swap(v[i], v[uniformBelow(rng, i + 1)]);
}

uint64_t fnv1a64(const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = 14695981039346656037ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace grm
