#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace radchaos {

/// Default cap on objective updates for exhaustive enumerations.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

/// Execution knobs shared by every enumeration kernel.
/// threads == 0 means "use all hardware threads"; results are identical
/// for every thread count (fixed work blocks, ordered reductions).
struct ExecOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
};

/// Thrown when an enumeration would exceed the objective-update budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t needed, std::uint64_t limit)
      : std::runtime_error("enumeration budget exceeded: needs " +
                           std::to_string(needed) + " updates, limit " +
                           std::to_string(limit)),
        needed(needed),
        limit(limit) {}
  std::uint64_t needed;
  std::uint64_t limit;
};

/// Thrown on malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

/// One hyperedge: strictly increasing 0-based vertex indices plus a weight.
struct Edge {
  std::vector<int> vertices;
  double weight = 0.0;
};

/// Edge-weighted d-homogeneous hypergraph. Immutable once constructed;
/// safe to share across threads. Edge order is preserved from input since
/// colorings align with edges by index.
class WeightedHypergraph {
 public:
  WeightedHypergraph(int vertex_count, int arity, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int arity() const { return d_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Edge> edges_;
};

/// Dense d-dimensional coefficient array, row-major. Order >= 1.
class CoeffTensor {
 public:
  CoeffTensor(std::vector<int> dims, std::vector<double> values);

  int order() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  double operator[](std::size_t flat) const { return values_[flat]; }
  /// Row-major flat index of a multi-index (0-based entries).
  std::size_t flat_index(const std::vector<int>& idx) const;

 private:
  std::vector<int> dims_;
  std::vector<double> values_;
};

/// Coefficients on strictly increasing d-tuples over [1, n] (1-based keys).
/// Absent keys are zero. Order >= 2, n >= d.
class SimplexCoeffs {
 public:
  using KeyMap = std::map<std::vector<int>, double>;

  SimplexCoeffs(int order, int ground_size, KeyMap values);

  int order() const { return d_; }
  int ground_size() const { return n_; }
  const KeyMap& values() const { return values_; }

 private:
  int d_ = 0;
  int n_ = 0;
  KeyMap values_;
};

/// +-1 assignment to the edges of a hypergraph, aligned by edge index.
struct Coloring {
  Coloring() = default;
  explicit Coloring(std::vector<std::int8_t> s);
  std::vector<std::int8_t> signs;
};

/// +-1 array aligned with a CoeffTensor's cells (row-major) or a
/// SimplexCoeffs' keys (map order).
struct SignPattern {
  SignPattern() = default;
  explicit SignPattern(std::vector<std::int8_t> s);
  std::vector<std::int8_t> signs;
};

/// Per-axis l1(l2) slice norms M_1..M_d.
struct MixedNormProfile {
  std::vector<double> m;
  double max_entry() const;
};

}  // namespace radchaos
