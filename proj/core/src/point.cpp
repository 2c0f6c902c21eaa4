#include "hvkit/point.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "hvkit/errors.hpp"

namespace hvkit {

namespace {

void check_coords(const std::vector<double>& coords, const char* what) {
  if (coords.size() < 2) {
    throw InvalidPointError(std::string(what) + ": at least 2 coordinates required, got " +
                            std::to_string(coords.size()));
  }
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (!std::isfinite(coords[j])) {
      throw InvalidPointError(std::string(what) + ": coordinate " + std::to_string(j) +
                              " is not finite");
    }
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  check_coords(coords_, "Point");
}

ReferencePoint::ReferencePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  check_coords(coords_, "ReferencePoint");
}

ReferencePoint ReferencePoint::unit(std::size_t dim) {
  return ReferencePoint(std::vector<double>(dim, 1.0));
}

bool dominates(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("dominates: dimensions " + std::to_string(a.dim()) + " vs " +
                                 std::to_string(b.dim()));
  }
  bool strict = false;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (a[j] > b[j]) {
      return false;
    }
    if (a[j] < b[j]) {
      strict = true;
    }
  }
  return strict;
}

bool weakly_dominates(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("weakly_dominates: dimensions " + std::to_string(a.dim()) +
                                 " vs " + std::to_string(b.dim()));
  }
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (a[j] > b[j]) {
      return false;
    }
  }
  return true;
}

}  // namespace hvkit
