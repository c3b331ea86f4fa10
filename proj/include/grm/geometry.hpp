#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "grm/gf.hpp"

namespace grm {

/// A point of the affine space F_q^m. index = sum coords[j] * q^j
/// (little-endian base-q digits), so point order is fixed across runs.
struct Point {
    std::vector<int> coords;
    int index = 0;
};

/// A monic line direction: coords[pivot] == 1 and coords[j] == 0 for
/// j < pivot. Every 1-dimensional direction class has exactly one monic
/// representative, which is what makes line enumeration duplicate-free.
struct Direction {
    std::vector<int> coords;
    int pivot = 0;
};

/// A canonical line {base + gamma * direction : gamma in F_q}.
/// base.coords[direction.pivot] == 0, and points[i] is the point index at
/// abscissa gamma_i. Exactly one point on the line has pivot coordinate 0,
/// and it is the base, so equal point sets yield identical (base, direction).
struct Line {
    Point base;
    Direction direction;
    std::vector<int> points;
};

int pointIndex(const Field& f, const std::vector<int>& coords);
Point pointFromIndex(const Field& f, int m, int index);

/// All q^m points in index order.
std::vector<Point> enumeratePoints(const Field& f, int m);

/// All lines of F_q^m, each exactly once: for pivot i = 0..m-1, every monic
/// direction with that pivot paired with every base point whose i-th
/// coordinate is 0. Count: q^(m-1) * (q^m-1)/(q-1).
std::vector<Line> enumerateLines(const Field& f, int m);

/// The (q^m-1)/(q-1) canonical lines through u, one per monic direction.
std::vector<Line> linesThroughPoint(const Field& f, int m, const Point& u);

long long lineCount(int q, int m);
long long linesPerPoint(int q, int m);

/// Reference count by pair grouping: puts every unordered pair of distinct
/// points on the line it spans and collects distinct point sets. Quadratic
/// and independent of the enumeration above; used by `verify-geometry`.
std::set<std::vector<int>> bruteForceLinePointSets(const Field& f, int m);

/// Debug rendering as pivot/directionIndex/baseIndex (indices base-q packed).
std::string formatLine(const Field& f, const Line& line);

} // namespace grm
