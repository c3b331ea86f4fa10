#include "grm/symbol_io.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "grm/errors.hpp"
#include "grm/rsline.hpp"

namespace grm {

namespace {

int parseSymbol(const std::string& tok, int q, bool allowErased) {
    if (tok == "?") {
        if (!allowErased) throw IntegrityError("erasure marker not allowed here");
        return kErased;
    }
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw IntegrityError("bad symbol token: " + tok);
    }
    if (pos != tok.size() || v < 0 || v >= q)
        throw IntegrityError("symbol out of range: " + tok);
    return v;
}

} // namespace

SymbolFile readSymbolFile(std::istream& in) {
    int r, m, q;
    if (!(in >> r >> m >> q)) throw IntegrityError("missing r m q header");
    SymbolFile sf;
    sf.params = makeCodeParams(r, m, q);
    sf.symbols.reserve(sf.params.n);
    std::string tok;
    while (static_cast<int>(sf.symbols.size()) < sf.params.n && in >> tok)
        sf.symbols.push_back(parseSymbol(tok, q, true));
    if (static_cast<int>(sf.symbols.size()) < sf.params.n)
        throw IntegrityError("expected " + std::to_string(sf.params.n) + " symbols");
    if (in >> tok) throw IntegrityError("trailing content after " + std::to_string(sf.params.n) + " symbols");
    return sf;
}

void writeSymbolFile(std::ostream& out, const CodeParams& params, const std::vector<int>& symbols) {
    out << params.r << ' ' << params.m << ' ' << params.q << '\n';
    for (int v : symbols) {
        if (v == kErased)
            out << "?\n";
        else
            out << v << '\n';
    }
}

std::vector<int> readValues(std::istream& in, int expectCount, int q) {
    std::vector<int> values;
    values.reserve(expectCount);
    std::string tok;
    while (static_cast<int>(values.size()) < expectCount && in >> tok)
        values.push_back(parseSymbol(tok, q, false));
    if (static_cast<int>(values.size()) < expectCount)
        throw IntegrityError("expected " + std::to_string(expectCount) + " values");
    if (in >> tok) throw IntegrityError("trailing content after " + std::to_string(expectCount) + " values");
    return values;
}

void writeValues(std::ostream& out, const std::vector<int>& values) {
    for (int v : values) out << v << '\n';
}

} // namespace grm
