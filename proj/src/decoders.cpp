#include "grm/decoders.hpp"

#include <deque>
#include <stdexcept>

#include "grm/errors.hpp"
#include "grm/matrix.hpp"

namespace grm {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> lineGammas(const Field& f) {
    std::vector<int> g(f.q());
    for (int i = 0; i < f.q(); ++i) g[i] = f.element(i);
    return g;
}

/// Complete one line from state; returns the full q values. The caller has
/// already checked that at least r+1 slots are known. For r = q-2 a
/// decodable line has exactly one erasure, so the parity shortcut applies.
std::vector<int> decodeOneLine(const GrmCode& code, const Line& line,
                               const ReceptionState& state, const std::vector<int>& gammas) {
    const Field& f = code.field();
    LineView view;
    view.gamma = gammas;
    view.values.resize(gammas.size());
    for (size_t i = 0; i < line.points.size(); ++i) view.values[i] = state.value(line.points[i]);
    int r = code.params().r;
    if (r == f.q() - 2) return paritySumDecode(f, view, r);
    return interpolateLine(f, view, r);
}

void fillReport(DecodeReport& rep) {
    const ReceptionState& s = rep.finalState;
    rep.recoveredCount = s.recoveredCount();
    rep.fullDecode = s.knownCount() == s.size();
    rep.infoDecode = s.infoKnownCount() == s.infoTotal();
}

} // namespace

bool ReceptionState::receive(int pos, int value) {
    switch (status_[pos]) {
    case SymbolStatus::Erased:
        markKnown(pos, value, SymbolStatus::Received);
        return true;
    case SymbolStatus::Recovered:
        if (values_[pos] != value)
            throw IntegrityError("arriving symbol contradicts a recovered value");
        status_[pos] = SymbolStatus::Received;
        --recovered_;
        return false;
    case SymbolStatus::Received:
    default:
        throw std::invalid_argument("duplicate arrival position");
    }
}

void ReceptionState::recover(int pos, int value) {
    if (status_[pos] != SymbolStatus::Erased)
        throw std::invalid_argument("recover on a known position");
    markKnown(pos, value, SymbolStatus::Recovered);
    ++recovered_;
}

void ReceptionState::markKnown(int pos, int value, SymbolStatus st) {
    status_[pos] = st;
    values_[pos] = value;
    ++known_;
    if (infoMask_[pos]) ++infoKnown_;
}

DecodeReport decodeLD(const GrmCode& code, ReceptionState state) {
    auto t0 = Clock::now();
    const int locality = code.params().locality;
    const auto gammas = lineGammas(code.field());
    DecodeReport rep{std::move(state)};

    bool progress = true;
    while (progress) {
        progress = false;
        for (const Line& line : code.lines()) {
            int known = 0;
            for (int p : line.points)
                if (rep.finalState.known(p)) ++known;
            if (known < locality || known == static_cast<int>(line.points.size())) continue;
            auto full = decodeOneLine(code, line, rep.finalState, gammas);
            ++rep.lineDecodeOps;
            for (size_t i = 0; i < line.points.size(); ++i)
                if (!rep.finalState.known(line.points[i]))
                    rep.finalState.recover(line.points[i], full[i]);
            progress = true;
        }
    }
    fillReport(rep);
    rep.elapsed = Clock::now() - t0;
    return rep;
}

std::vector<DecodeReport> decodePLD(const GrmCode& code,
                                    const std::vector<std::pair<int, int>>& arrivals) {
    const int locality = code.params().locality;
    const auto gammas = lineGammas(code.field());
    ReceptionState state(code);
    std::vector<DecodeReport> reports;
    reports.reserve(arrivals.size());

    long long ops = 0;
    std::chrono::nanoseconds elapsed{0};
    std::deque<int> work;
    for (const auto& [pos, value] : arrivals) {
        auto t0 = Clock::now();
        if (state.receive(pos, value)) work.push_back(pos);
        while (!work.empty()) {
            int u = work.front();
            work.pop_front();
            for (int li : code.linesAt(u)) {
                const Line& line = code.lines()[li];
                int known = 0;
                for (int p : line.points)
                    if (state.known(p)) ++known;
                if (known < locality || known == static_cast<int>(line.points.size())) continue;
                auto full = decodeOneLine(code, line, state, gammas);
                ++ops;
                for (size_t i = 0; i < line.points.size(); ++i)
                    if (!state.known(line.points[i])) {
                        state.recover(line.points[i], full[i]);
                        work.push_back(line.points[i]);
                    }
            }
        }
        elapsed += Clock::now() - t0;
        DecodeReport rep{state};
        rep.lineDecodeOps = ops;
        fillReport(rep);
        rep.elapsed = elapsed;
        reports.push_back(std::move(rep));
    }
    return reports;
}

DecodeReport decodeGE(const GrmCode& code, ReceptionState state) {
    auto t0 = Clock::now();
    const Field& f = code.field();
    const FqMatrix& parity = code.parityCheck();
    const int n = code.params().n;
    const int rows = parity.rows();

    std::vector<int> erased;
    for (int j = 0; j < n; ++j)
        if (!state.known(j)) erased.push_back(j);
    const int ecount = static_cast<int>(erased.size());

    DecodeReport rep{std::move(state)};
    if (ecount == 0) {
        rep.rrefPivots = 0;
        fillReport(rep);
        rep.elapsed = Clock::now() - t0;
        return rep;
    }

    // Augmented system: unknown columns of the parity check, then the
    // constants moved over from the known columns.
    FqMatrix a(rows, ecount + 1);
    for (int i = 0; i < rows; ++i) {
        const int* h = parity.row(i);
        for (int j = 0; j < ecount; ++j) a.at(i, j) = h[erased[j]];
        int c = 0;
        for (int j = 0; j < n; ++j)
            if (rep.finalState.known(j) && h[j] != 0)
                c = f.add(c, f.mul(h[j], rep.finalState.value(j)));
        a.at(i, ecount) = f.neg(c);
    }

    auto pivots = reducedRowEchelon(f, a);
    for (int p : pivots)
        if (p == ecount) throw IntegrityError("received symbols violate the parity checks");
    rep.rrefPivots = static_cast<int>(pivots.size());

    // A row that touches exactly one unknown pins it.
    for (size_t row = 0; row < pivots.size(); ++row) {
        int nz = 0;
        for (int j = 0; j < ecount; ++j)
            if (a.at(static_cast<int>(row), j) != 0) ++nz;
        if (nz == 1) rep.finalState.recover(erased[pivots[row]], a.at(static_cast<int>(row), ecount));
    }

    fillReport(rep);
    rep.elapsed = Clock::now() - t0;
    return rep;
}

DecodeReport decodeLDThenGE(const GrmCode& code, ReceptionState state) {
    DecodeReport ld = decodeLD(code, std::move(state));
    if (ld.fullDecode) return ld;
    DecodeReport ge = decodeGE(code, std::move(ld.finalState));
    ge.lineDecodeOps = ld.lineDecodeOps;
    ge.elapsed += ld.elapsed;
    return ge;
}

} // namespace grm
