#pragma once

#include <stdexcept>
#include <string>

namespace arrangebij {

// Base class for every domain-level failure (bad window, infeasible region,
// malformed tree, ...). The CLI maps these to exit code 1; usage errors from
// the argument parser map to exit code 2.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A window is not one of the legal unit/ray intervals for the arrangement.
struct InvalidWindow : DomainError {
  explicit InvalidWindow(const std::string& what) : DomainError(what) {}
};

// A query point lies on some hyperplane, so it belongs to no open region.
struct OnHyperplane : DomainError {
  int i, j, offset;
  OnHyperplane(int i_, int j_, int offset_)
      : DomainError("point lies on hyperplane x" + std::to_string(i_) + " - x" +
                    std::to_string(j_) + " = " + std::to_string(offset_)),
        i(i_),
        j(j_),
        offset(offset_) {}
};

// The window system has no solution.
struct InfeasibleRegion : DomainError {
  explicit InfeasibleRegion(const std::string& what) : DomainError(what) {}
};

// A column slice has two or more positive entries tied for the minimum, so the
// point is not in an open region (it lies on a hyperplane of the arrangement).
struct TieOnMinimum : DomainError {
  explicit TieOnMinimum(const std::string& what) : DomainError(what) {}
};

// The father map has a directed cycle (self-loops included).
struct Cyclic : DomainError {
  explicit Cyclic(const std::string& what) : DomainError(what) {}
};

// A labeled-vertex father set violates the clique-intersection rule.
struct BadClique : DomainError {
  explicit BadClique(const std::string& what) : DomainError(what) {}
};

// A father tuple has the wrong arity or references an unknown vertex.
struct WrongDegree : DomainError {
  explicit WrongDegree(const std::string& what) : DomainError(what) {}
};

// The tree is not in the image of the region -> tree map.
struct EmptyFiber : DomainError {
  explicit EmptyFiber(const std::string& what) : DomainError(what) {}
};

// A height sequence is not weakly increasing.
struct NotMonotone : DomainError {
  explicit NotMonotone(const std::string& what) : DomainError(what) {}
};

// A height violates 0 <= h_i <= r*(i-1).
struct HeightBound : DomainError {
  explicit HeightBound(const std::string& what) : DomainError(what) {}
};

}  // namespace arrangebij
