#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cprforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Raised when the smaller of two groups to intersect exceeds the enumeration cap.
class IntersectionTooLarge : public Error {
 public:
  IntersectionTooLarge(unsigned long long smaller_order, unsigned long long cap)
      : Error("intersection needs to enumerate " + std::to_string(smaller_order) +
              " elements, cap is " + std::to_string(cap)),
        smaller_order_(smaller_order),
        cap_(cap) {}

  unsigned long long smaller_order() const noexcept { return smaller_order_; }
  unsigned long long cap() const noexcept { return cap_; }

  // Label subsets being intersected, filled in by the sggi checkers.
  std::vector<int> left_labels;
  std::vector<int> right_labels;

 private:
  unsigned long long smaller_order_;
  unsigned long long cap_;
};

class NotTransitive : public Error {
 public:
  NotTransitive() : Error("group is not transitive") {}
};

class DomainNotInvariant : public Error {
 public:
  using Error::Error;
};

/// PRG text could not be parsed. `line()` is 1-based, 0 when not tied to a line.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MatchingViolation : public Error {
 public:
  using Error::Error;
};

class DuplicateEdge : public Error {
 public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A label of the window has no edge, so its generator would be the identity.
class IdentityGenerator : public Error {
 public:
  explicit IdentityGenerator(int label)
      : Error("label " + std::to_string(label) + " has no edge (identity generator)"), label_(label) {}
  int label() const noexcept { return label_; }

 private:
  int label_;
};

class LabelOutsideWindow : public Error {
 public:
  using Error::Error;
};

class RankTooLarge : public Error {
 public:
  using Error::Error;
};

/// A gluing input does not have the shape the construction requires.
class ShapeViolation : public Error {
 public:
  using Error::Error;
};

class ParameterRange : public Error {
 public:
  using Error::Error;
};

class NoFractureGraph : public Error {
 public:
  explicit NoFractureGraph(std::vector<int> labels)
      : Error("graph has no fracture graph"), failing_labels(std::move(labels)) {}
  std::vector<int> failing_labels;
};

}  // namespace cprforge
