#include "cdual/netcore.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "cdual/errors.hpp"

namespace cdual {

Net2::Net2(std::size_t width, std::size_t height, std::vector<Rational> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (width_ == 0 || height_ == 0) throw DimensionError("net window must be at least 1x1");
  if (values_.size() != width_ * height_) {
    throw DimensionError("net expects " + std::to_string(width_ * height_) + " values, got " +
                         std::to_string(values_.size()));
  }
}

Net2::Net2(std::size_t width, std::size_t height) : Net2(width, height, std::vector<Rational>(width * height)) {}

const Rational& Net2::at(MultiIndex2 a) const {
  if (a.i >= width_ || a.j >= height_) {
    throw DimensionError("point (" + std::to_string(a.i) + "," + std::to_string(a.j) + ") outside " +
                         std::to_string(width_) + "x" + std::to_string(height_) + " net");
  }
  return (*this)(a.i, a.j);
}

Net2 Net2::hadamard(const Net2& other) const {
  const std::size_t w = std::min(width_, other.width_);
  const std::size_t h = std::min(height_, other.height_);
  Net2 out(w, h);
  for (std::size_t m = 0; m < w; ++m) {
    for (std::size_t n = 0; n < h; ++n) out(m, n) = (*this)(m, n) * other(m, n);
  }
  return out;
}

Net2 Net2::window(MultiIndex2 offset, std::size_t width, std::size_t height) const {
  if (offset.i + width > width_ || offset.j + height > height_) {
    throw DimensionError("sub-window exceeds the net");
  }
  Net2 out(width, height);
  for (std::size_t m = 0; m < width; ++m) {
    for (std::size_t n = 0; n < height; ++n) out(m, n) = (*this)(offset.i + m, offset.j + n);
  }
  return out;
}

Net2 net_from_function(const NetFunction& f, std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw DimensionError("net window must be at least 1x1");
  std::vector<Rational> values;
  values.reserve(width * height);
  for (std::size_t m = 0; m < width; ++m) {
    for (std::size_t n = 0; n < height; ++n) {
      auto v = f({m, n});
      if (!v) {
        throw ConstructionError("function undefined at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      }
      values.push_back(std::move(*v));
    }
  }
  return Net2(width, height, std::move(values));
}

namespace {

Net2 delta1(const Net2& a) {
  Net2 out(a.width() - 1, a.height());
  for (std::size_t m = 0; m + 1 < a.width(); ++m) {
    for (std::size_t n = 0; n < a.height(); ++n) out(m, n) = a(m + 1, n) - a(m, n);
  }
  return out;
}

Net2 delta2(const Net2& a) {
  Net2 out(a.width(), a.height() - 1);
  for (std::size_t m = 0; m < a.width(); ++m) {
    for (std::size_t n = 0; n + 1 < a.height(); ++n) out(m, n) = a(m, n + 1) - a(m, n);
  }
  return out;
}

// First base point (lexicographic) where (-1)^order * d < 0.
std::optional<MultiIndex2> first_violation(const Net2& d, std::size_t order) {
  const bool odd = order % 2 == 1;
  for (std::size_t m = 0; m < d.width(); ++m) {
    for (std::size_t n = 0; n < d.height(); ++n) {
      const int s = sgn(d(m, n));
      if (odd ? s > 0 : s < 0) return MultiIndex2{m, n};
    }
  }
  return std::nullopt;
}

struct OrderResult {
  std::optional<Net2> diff;
  std::optional<MultiIndex2> violation;
};

}  // namespace

Net2 forward_difference(const Net2& net, MultiIndex2 order) {
  if (order.i >= net.width() || order.j >= net.height()) {
    throw DimensionError("difference order (" + std::to_string(order.i) + "," + std::to_string(order.j) +
                         ") does not fit a " + std::to_string(net.width()) + "x" + std::to_string(net.height()) +
                         " net");
  }
  Net2 out = net;
  for (std::size_t k = 0; k < order.i; ++k) out = delta1(out);
  for (std::size_t k = 0; k < order.j; ++k) out = delta2(out);
  return out;
}

std::string CmVerdict::label() const {
  std::ostringstream os;
  if (passed) {
    os << "no violation up to order " << max_order_checked << " on " << grid_width << "x" << grid_height;
  } else {
    os << "violation: order (" << witness->order.i << "," << witness->order.j << ") at (" << witness->base.i << ","
       << witness->base.j << "), difference " << to_string(witness->value);
  }
  return os.str();
}

CmVerdict check_complete_monotone(const Net2& net, std::size_t max_order, CmMode mode, unsigned jobs) {
  if (max_order >= std::min(net.width(), net.height())) {
    throw DimensionError("max order " + std::to_string(max_order) + " needs a window larger than " +
                         std::to_string(net.width()) + "x" + std::to_string(net.height()));
  }
  CmVerdict verdict;
  verdict.grid_width = net.width();
  verdict.grid_height = net.height();
  verdict.max_order_checked = max_order;

  // previous[i] holds Delta^(i, k-1-i) a.
  std::vector<std::optional<Net2>> previous{net};
  if (auto v = first_violation(net, 0)) {
    verdict.witness = CmWitness{{0, 0}, *v, net.at(*v)};
    return verdict;
  }

  for (std::size_t k = 1; k <= max_order; ++k) {
    // Orders (i, k - i) in increasing i, as lexicographic order requires.
    std::vector<std::size_t> wanted;
    for (std::size_t i = 0; i <= k; ++i) {
      if (mode == CmMode::separate && i != 0 && i != k) continue;
      wanted.push_back(i);
    }

    auto compute = [&](std::size_t i) {
      OrderResult r;
      // (0,k) extends (0,k-1) in direction 2; everything else extends
      // (i-1, k-i) in direction 1.
      if (i == 0) {
        r.diff = delta2(*previous[0]);
      } else {
        const auto& source = mode == CmMode::separate ? previous.back() : previous[i - 1];
        r.diff = delta1(*source);
      }
      r.violation = first_violation(*r.diff, k);
      return r;
    };

    std::vector<OrderResult> results(wanted.size());
    if (jobs <= 1 || wanted.size() == 1) {
      for (std::size_t idx = 0; idx < wanted.size(); ++idx) results[idx] = compute(wanted[idx]);
    } else {
      const std::size_t workers = std::min<std::size_t>(jobs, wanted.size());
      std::vector<std::future<void>> pending;
      for (std::size_t w = 0; w < workers; ++w) {
        pending.push_back(std::async(std::launch::async, [&, w] {
          for (std::size_t idx = w; idx < wanted.size(); idx += workers) results[idx] = compute(wanted[idx]);
        }));
      }
      for (auto& f : pending) f.get();
    }

    for (std::size_t idx = 0; idx < wanted.size(); ++idx) {
      if (results[idx].violation) {
        const std::size_t i = wanted[idx];
        const MultiIndex2 base = *results[idx].violation;
        verdict.witness = CmWitness{{i, k - i}, base, results[idx].diff->at(base)};
        return verdict;
      }
    }

    if (mode == CmMode::separate) {
      // Keep the two axis chains: front is (0,k), back is (k,0).
      std::vector<std::optional<Net2>> next;
      next.push_back(std::move(results.front().diff));
      next.push_back(std::move(results.back().diff));
      previous = std::move(next);
    } else {
      std::vector<std::optional<Net2>> next(k + 1);
      for (std::size_t idx = 0; idx < wanted.size(); ++idx) next[wanted[idx]] = std::move(results[idx].diff);
      previous = std::move(next);
    }
  }
  verdict.passed = true;
  return verdict;
}

SequenceCmVerdict check_sequence_complete_monotone(std::span<const Rational> sequence, std::size_t max_order) {
  if (max_order >= sequence.size()) {
    throw DimensionError("max order " + std::to_string(max_order) + " needs more than " +
                         std::to_string(sequence.size()) + " terms");
  }
  SequenceCmVerdict out;
  out.max_order_checked = max_order;
  std::vector<Rational> d(sequence.begin(), sequence.end());
  for (std::size_t k = 0; k <= max_order; ++k) {
    const bool odd = k % 2 == 1;
    for (std::size_t m = 0; m < d.size(); ++m) {
      const int s = sgn(d[m]);
      if (odd ? s > 0 : s < 0) {
        out.order = k;
        out.index = m;
        out.value = d[m];
        return out;
      }
    }
    for (std::size_t m = 0; m + 1 < d.size(); ++m) d[m] = d[m + 1] - d[m];
    d.pop_back();
  }
  out.passed = true;
  return out;
}

std::string net_to_csv(const Net2& net) {
  std::ostringstream os;
  os << "m,n,value\n";
  for (std::size_t m = 0; m < net.width(); ++m) {
    for (std::size_t n = 0; n < net.height(); ++n) os << m << "," << n << "," << to_string(net(m, n)) << "\n";
  }
  return os.str();
}

}  // namespace cdual
