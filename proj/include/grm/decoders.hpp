#pragma once

#include <chrono>
#include <utility>
#include <vector>

#include "grm/code.hpp"
#include "grm/rsline.hpp"

namespace grm {

enum class SymbolStatus { Erased, Received, Recovered };

/// Per-coordinate view of a partially received codeword. Symbols enter as
/// Received (from the channel, via receive()) or Recovered (filled in by a
/// decoder, via recover()); both count as known. The info counters track how
/// many of the systematic positions are known, which is the success metric
/// the simulator aggregates.
///
/// receive() on an already Received position throws std::invalid_argument.
/// On a Recovered position it cross-checks the value: agreement upgrades the
/// status to Received, disagreement raises IntegrityError since a correct
/// decoder can only have produced the transmitted value.
class ReceptionState {
  public:
    explicit ReceptionState(const GrmCode& code)
        : infoMask_(code.infoMask()), status_(code.params().n, SymbolStatus::Erased),
          values_(code.params().n, kErased), infoTotal_(code.params().k) {}

    int size() const { return static_cast<int>(values_.size()); }
    SymbolStatus status(int pos) const { return status_[pos]; }
    int value(int pos) const { return values_[pos]; }
    bool known(int pos) const { return status_[pos] != SymbolStatus::Erased; }
    int knownCount() const { return known_; }
    int infoKnownCount() const { return infoKnown_; }
    int infoTotal() const { return infoTotal_; }
    /// Positions currently carrying a decoder-supplied value. An arrival
    /// confirming a Recovered slot moves it out of this count.
    int recoveredCount() const { return recovered_; }

    /// True once the arrival actually added information (i.e. the position
    /// was Erased before), false for a Recovered slot confirmation.
    bool receive(int pos, int value);
    void recover(int pos, int value);

  private:
    void markKnown(int pos, int value, SymbolStatus st);

    std::vector<bool> infoMask_;
    std::vector<SymbolStatus> status_;
    std::vector<int> values_;
    int known_ = 0;
    int infoKnown_ = 0;
    int infoTotal_ = 0;
    int recovered_ = 0;
};

struct DecodeReport {
    ReceptionState finalState;
    int recoveredCount = 0;
    bool fullDecode = false;
    bool infoDecode = false;
    long long lineDecodeOps = 0;
    int rrefPivots = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Exhaustive local decoding: sweep every canonical line; any line with at
/// least r+1 known symbols and at least one erasure is completed by
/// single-line erasure decoding; repeat until a full sweep makes no
/// progress. The fixpoint does not depend on sweep order.
DecodeReport decodeLD(const GrmCode& code, ReceptionState state);

/// Progressive local decoding: feed channel arrivals one at a time. Each
/// newly known symbol (received or just recovered) is queued and its
/// incident lines are examined; decodable lines fire immediately and their
/// recoveries cascade. One report is returned per arrival, with cumulative
/// lineDecodeOps and elapsed; the final state equals decodeLD's fixpoint on
/// the same received set. Duplicate arrival positions throw
/// std::invalid_argument.
std::vector<DecodeReport> decodePLD(const GrmCode& code,
                                    const std::vector<std::pair<int, int>>& arrivals);

/// Maximum-likelihood erasure decoding: solve the parity-check system
/// restricted to the erased columns by Gauss-Jordan elimination. Every unit
/// row of the reduced system pins one erased symbol, so partial recovery is
/// supported; rrefPivots reports the achieved rank and fullDecode holds iff
/// it equals the erasure count. Recovers a superset of what local decoding
/// recovers from the same state.
DecodeReport decodeGE(const GrmCode& code, ReceptionState state);

/// Run LD to its fixpoint, then GE on whatever is still erased.
DecodeReport decodeLDThenGE(const GrmCode& code, ReceptionState state);

} // namespace grm
