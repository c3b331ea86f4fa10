#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "grm/code.hpp"
#include "grm/decoders.hpp"

namespace grm {

enum class DecoderKind { LD, PLD, GE, LD_THEN_GE };

const char* decoderName(DecoderKind d);
DecoderKind parseDecoder(const std::string& name);

enum class ReceptionModel { RandomOrder, IidErasure };

/// One Monte-Carlo run description. RandomOrder delivers the n symbols of a
/// random codeword in a uniformly random order (curves sweep the prefix
/// length); IidErasure erases each symbol independently with probability
/// epsilon (the bench model). measureTime gates the elapsed columns: when
/// false they are written as 0 so output bytes depend on nothing but the
/// seed; when true they carry wall-clock values and reproducibility is
/// limited to the non-time columns. threads = 0 picks the hardware count;
/// the thread count never changes any non-time output.
struct TrialConfig {
    CodeParams codeParams;
    DecoderKind decoder = DecoderKind::LD;
    int trials = 1;
    uint64_t seed = 0;
    ReceptionModel receptionModel = ReceptionModel::RandomOrder;
    double epsilon = 0.0;
    bool measureTime = false;
    int threads = 0;
};

/// Aggregated curve sample at one prefix length t.
struct CurvePoint {
    double receivedFraction = 0.0;
    double meanInfoKnownFraction = 0.0;
    double probFullInfoDecode = 0.0;
    double meanElapsedUs = 0.0;
};

/// Per-prefix outcome within one trial.
struct PrefixSummary {
    int known = 0;
    int infoKnown = 0;
    bool infoDecode = false;
    bool fullDecode = false;
    long long elapsedNs = 0;
};

/// One trial's full trace: the reception order digest (FNV-1a over the
/// order), outcomes for every prefix t = 0..n, and the smallest t at which
/// the configured decoder reached fullDecode (always between k and n).
struct TrialRecord {
    uint64_t seed = 0;
    uint64_t orderDigest = 0;
    std::vector<PrefixSummary> prefixes;
    int fullRankThreshold = 0;
};

/// Sweep prefix lengths t = 0..n under RandomOrder reception and aggregate
/// across trials: mean fraction of known information symbols, probability of
/// full information decode, mean decode time. For LD/GE/LD_THEN_GE each
/// prefix is decoded from scratch and elapsed is that decode's time; for PLD
/// elapsed at t is the cumulative arrival-processing time through t. Every
/// recovered symbol is checked against the transmitted codeword. Aggregation
/// sums integers in trial order, so results are independent of the thread
/// count. Pass records to receive the per-trial traces (indexed by trial).
std::vector<CurvePoint> runCurve(const TrialConfig& cfg, std::vector<TrialRecord>* records = nullptr);

struct BenchRow {
    double fractionErased = 0.0;
    DecoderKind decoder = DecoderKind::LD;
    double meanElapsedUs = 0.0;
};

/// Paired runtime comparison: at each erasure fraction, draw trial patterns
/// once and feed the identical pattern to every decoder, timing only the
/// decode call (for PLD: the whole arrival feed). Rows are ordered fraction
/// first, then decoder in the given order. Times are wall clock, so bench
/// output is not byte-reproducible; everything else about the patterns is
/// seed-determined.
std::vector<BenchRow> runBench(const TrialConfig& cfg, const std::vector<double>& fractions,
                               const std::vector<DecoderKind>& decoders = {DecoderKind::LD,
                                                                           DecoderKind::PLD,
                                                                           DecoderKind::GE});

struct ThresholdSummary {
    int minT = 0;
    double medianT = 0.0;
    double meanT = 0.0;
    int trials = 0;
};

/// Distribution of the full-rank threshold: per trial, the smallest prefix t
/// at which GE decodes everything (found by binary search; recovery is
/// monotone in t). Requires decoder = GE and RandomOrder.
ThresholdSummary measureFullRankThreshold(const TrialConfig& cfg);

/// Word-wise (q, k) Reed-Solomon baseline under the same RandomOrder model:
/// systematic in the first k abscissae, full decode exactly when k symbols
/// of the q are in; below that only directly received information symbols
/// count. Elapsed is reported as 0 (the baseline is about success rates).
std::vector<CurvePoint> runRsBaselineCurve(int q, int k, int trials, uint64_t seed);

/// CSV renderings. meta is emitted verbatim as a leading `# ...` comment
/// line; both tables carry a fixed header row. Numeric formatting is fixed
/// (six decimals for fractions, three for microseconds) so equal inputs give
/// equal bytes.
std::string curveCsv(const std::string& meta, const std::vector<CurvePoint>& points);
std::string benchCsv(const std::string& meta, const std::vector<BenchRow>& rows);
std::string curveMetaComment(const TrialConfig& cfg);
std::string benchMetaComment(const TrialConfig& cfg);

/// The PRNG behind every random draw: mt19937_64 seeded from a seed_seq over
/// (seed low word, seed high word, stream, trial). Draws go through
/// rejection sampling, never std::uniform_int_distribution, so traces match
/// across standard libraries.
std::mt19937_64 makeRng(uint64_t seed, uint32_t stream, uint32_t trial);
int uniformBelow(std::mt19937_64& rng, int bound);
void shuffle(std::mt19937_64& rng, std::vector<int>& v);
uint64_t fnv1a64(const void* data, size_t len);

} // namespace grm
