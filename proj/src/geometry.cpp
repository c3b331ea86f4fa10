#include "grm/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace grm {

namespace {

// Enumerate all coordinate vectors of length len in packed order.
void nextVector(std::vector<int>& v, int q) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < q) return;
        v[i] = 0;
    }
}

Line makeLine(const Field& f, Point base, Direction dir) {
    const int m = static_cast<int>(base.coords.size());
    Line line;
    line.points.reserve(f.q());
    std::vector<int> pt(m);
    for (int i = 0; i < f.q(); ++i) {
        int gamma = f.element(i);
        for (int j = 0; j < m; ++j) pt[j] = f.add(base.coords[j], f.mul(gamma, dir.coords[j]));
        line.points.push_back(pointIndex(f, pt));
    }
    line.base = std::move(base);
    line.direction = std::move(dir);
    return line;
}

} // namespace

int pointIndex(const Field& f, const std::vector<int>& coords) {
    int v = 0;
    for (size_t j = coords.size(); j-- > 0;) v = v * f.q() + coords[j];
    return v;
}

Point pointFromIndex(const Field& f, int m, int index) {
    Point p;
    p.index = index;
    p.coords.resize(m);
    for (int j = 0; j < m; ++j) {
        p.coords[j] = index % f.q();
        index /= f.q();
    }
    return p;
}

std::vector<Point> enumeratePoints(const Field& f, int m) {
    long long n = 1;
    for (int i = 0; i < m; ++i) n *= f.q();
    if (n > (1 << 24)) throw std::invalid_argument("q^m too large");
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(pointFromIndex(f, m, i));
    return pts;
}

std::vector<Line> enumerateLines(const Field& f, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const int q = f.q();
    std::vector<Line> lines;
    lines.reserve(static_cast<size_t>(lineCount(q, m)));
    for (int pivot = 0; pivot < m; ++pivot) {
        // Monic directions with this pivot: free coordinates after it.
        std::vector<int> free(m - pivot - 1, 0);
        long long dirCount = 1;
        for (int i = 0; i < m - pivot - 1; ++i) dirCount *= q;
        for (long long di = 0; di < dirCount; ++di, nextVector(free, q)) {
            Direction dir;
            dir.pivot = pivot;
            dir.coords.assign(m, 0);
            dir.coords[pivot] = 1;
            for (int i = 0; i < m - pivot - 1; ++i) dir.coords[pivot + 1 + i] = free[i];
            // Base points with coordinate `pivot` equal to zero.
            std::vector<int> baseFree(m - 1, 0);
            long long baseCount = 1;
            for (int i = 0; i < m - 1; ++i) baseCount *= q;
            for (long long bi = 0; bi < baseCount; ++bi, nextVector(baseFree, q)) {
                Point base;
                base.coords.assign(m, 0);
                int fi = 0;
                for (int j = 0; j < m; ++j)
                    if (j != pivot) base.coords[j] = baseFree[fi++];
                base.index = pointIndex(f, base.coords);
                lines.push_back(makeLine(f, std::move(base), dir));
            }
        }
    }
    return lines;
}

std::vector<Line> linesThroughPoint(const Field& f, int m, const Point& u) {
    const int q = f.q();
    std::vector<Line> lines;
    lines.reserve(static_cast<size_t>(linesPerPoint(q, m)));
    for (int pivot = 0; pivot < m; ++pivot) {
        std::vector<int> free(m - pivot - 1, 0);
        long long dirCount = 1;
        for (int i = 0; i < m - pivot - 1; ++i) dirCount *= q;
        for (long long di = 0; di < dirCount; ++di, nextVector(free, q)) {
            Direction dir;
            dir.pivot = pivot;
            dir.coords.assign(m, 0);
            dir.coords[pivot] = 1;
            for (int i = 0; i < m - pivot - 1; ++i) dir.coords[pivot + 1 + i] = free[i];
            // Slide u to the canonical base: base = u - u[pivot] * dir.
            Point base;
            base.coords.resize(m);
            int shift = u.coords[pivot];
            for (int j = 0; j < m; ++j) base.coords[j] = f.sub(u.coords[j], f.mul(shift, dir.coords[j]));
            base.index = pointIndex(f, base.coords);
            lines.push_back(makeLine(f, std::move(base), std::move(dir)));
        }
    }
    return lines;
}

long long lineCount(int q, int m) {
    long long qm1 = 1; // q^(m-1)
    for (int i = 0; i < m - 1; ++i) qm1 *= q;
    return qm1 * ((qm1 * q - 1) / (q - 1));
}

long long linesPerPoint(int q, int m) {
    long long qm = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    return (qm - 1) / (q - 1);
}

std::set<std::vector<int>> bruteForceLinePointSets(const Field& f, int m) {
    const int q = f.q();
    auto pts = enumeratePoints(f, m);
    const int n = static_cast<int>(pts.size());
    std::set<std::vector<int>> sets;
    std::vector<int> d(m), pt(m), span;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            for (int j = 0; j < m; ++j) d[j] = f.sub(pts[b].coords[j], pts[a].coords[j]);
            span.clear();
            for (int t = 0; t < q; ++t) {
                int gamma = f.element(t);
                for (int j = 0; j < m; ++j) pt[j] = f.add(pts[a].coords[j], f.mul(gamma, d[j]));
                span.push_back(pointIndex(f, pt));
            }
            std::sort(span.begin(), span.end());
            sets.insert(span);
        }
    return sets;
}

std::string formatLine(const Field& f, const Line& line) {
    return std::to_string(line.direction.pivot) + "/" +
           std::to_string(pointIndex(f, line.direction.coords)) + "/" +
           std::to_string(line.base.index);
}

} // namespace grm
