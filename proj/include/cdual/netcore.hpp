#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdual/rational.hpp"

namespace cdual {

struct MultiIndex2 {
  std::size_t i = 0;
  std::size_t j = 0;

  std::size_t total() const { return i + j; }
  MultiIndex2 operator+(const MultiIndex2& o) const { return {i + o.i, j + o.j}; }
  bool operator==(const MultiIndex2&) const = default;
};

// Truncated two-parameter net a(m, n), 0 <= m < width, 0 <= n < height,
// stored row-major in m.
class Net2 {
 public:
  Net2(std::size_t width, std::size_t height, std::vector<Rational> values);
  // Zero net.
  Net2(std::size_t width, std::size_t height);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }

  const Rational& operator()(std::size_t m, std::size_t n) const { return values_[m * height_ + n]; }
  Rational& operator()(std::size_t m, std::size_t n) { return values_[m * height_ + n]; }
  const Rational& at(MultiIndex2 a) const;

  std::span<const Rational> values() const { return values_; }

  // Entrywise product on the common window.
  Net2 hadamard(const Net2& other) const;
  // Sub-window with origin `offset` and the given extent.
  Net2 window(MultiIndex2 offset, std::size_t width, std::size_t height) const;

  bool operator==(const Net2&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Rational> values_;
};

// Generating function for net_from_function; nullopt marks a point where the
// function is undefined (e.g. a pole).
using NetFunction = std::function<std::optional<Rational>(MultiIndex2)>;

// Throws ConstructionError naming the first undefined point, DimensionError on
// an empty window.
Net2 net_from_function(const NetFunction& f, std::size_t width, std::size_t height);

// Delta_1^i Delta_2^j of the net on the (width - i) x (height - j) window.
Net2 forward_difference(const Net2& net, MultiIndex2 order);

enum class CmMode { joint, separate };

struct CmWitness {
  MultiIndex2 order;
  MultiIndex2 base;
  // Delta^order a at base. The violation is (-1)^|order| * value < 0.
  Rational value;
};

struct CmVerdict {
  bool passed = false;
  std::optional<CmWitness> witness;
  std::size_t max_order_checked = 0;
  std::size_t grid_width = 0;
  std::size_t grid_height = 0;

  // "no violation up to order K on WxH" or the witness. A pass is only a
  // statement about the truncated grid.
  std::string label() const;
};

// Brute-force complete monotonicity test. Joint mode checks every beta with
// |beta| <= max_order, separate mode only (k,0) and (0,k). Each order is
// checked at every base point keeping alpha + beta in the window. The first
// violation in (|beta|, beta, alpha) lexicographic order is reported.
// jobs > 1 evaluates the orders of one total degree concurrently; the result
// does not depend on jobs.
CmVerdict check_complete_monotone(const Net2& net, std::size_t max_order, CmMode mode, unsigned jobs = 1);

// One-parameter version for sequences, used for line restrictions.
struct SequenceCmVerdict {
  bool passed = false;
  std::size_t order = 0;  // witness order, when failed
  std::size_t index = 0;  // witness base index, when failed
  Rational value;
  std::size_t max_order_checked = 0;
};
SequenceCmVerdict check_sequence_complete_monotone(std::span<const Rational> sequence, std::size_t max_order);

// "m,n,value" with a header line, values as rational strings.
std::string net_to_csv(const Net2& net);

}  // namespace cdual
