#include "copwin/finite_graph.hpp"

#include <algorithm>
#include <bit>

namespace copwin {

namespace {

constexpr std::size_t kWordBits = 64;

inline bool get_bit(std::span<const std::uint64_t> row, std::size_t v) {
  return (row[v / kWordBits] >> (v % kWordBits)) & 1u;
}

inline void set_bit(std::uint64_t* row, std::size_t v) {
  row[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

}  // namespace

FiniteGraph::FiniteGraph(std::size_t vertex_count,
                         std::vector<std::string> labels)
    : n_(vertex_count),
      words_((vertex_count + kWordBits - 1) / kWordBits),
      labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n_)
    throw std::invalid_argument("label count does not match vertex count");
  open_rows_.assign(n_ * words_, 0);
  closed_rows_.assign(n_ * words_, 0);
  for (std::size_t v = 0; v < n_; ++v)
    set_bit(closed_rows_.data() + v * words_, v);
}

void FiniteGraph::check_index(std::size_t v) const {
  if (v >= n_) throw std::out_of_range("vertex index out of range");
}

void FiniteGraph::add_edge(std::size_t u, std::size_t v) {
  check_index(u);
  check_index(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  set_bit(open_rows_.data() + u * words_, v);
  set_bit(open_rows_.data() + v * words_, u);
  set_bit(closed_rows_.data() + u * words_, v);
  set_bit(closed_rows_.data() + v * words_, u);
}

bool FiniteGraph::adjacent(std::size_t u, std::size_t v) const {
  check_index(u);
  check_index(v);
  return get_bit({open_rows_.data() + u * words_, words_}, v);
}

std::optional<std::size_t> FiniteGraph::find_vertex(
    const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::span<const std::uint64_t> FiniteGraph::closed_row(std::size_t v) const {
  check_index(v);
  return {closed_rows_.data() + v * words_, words_};
}

std::vector<std::size_t> FiniteGraph::closed_neighborhood(
    std::size_t v) const {
  auto row = closed_row(v);
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (get_bit(row, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::size_t FiniteGraph::degree(std::size_t v) const {
  check_index(v);
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w)
    d += static_cast<std::size_t>(
        std::popcount(open_rows_[v * words_ + w]));
  return d;
}

bool FiniteGraph::dominates(std::size_t y, std::size_t x) const {
  auto rx = closed_row(x);
  auto ry = closed_row(y);
  for (std::size_t w = 0; w < words_; ++w)
    if (rx[w] & ~ry[w]) return false;
  return true;
}

std::optional<std::vector<std::size_t>> dismantle(const FiniteGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return std::vector<std::size_t>{};
  // Masked domination over the surviving vertex set; greedy removal is
  // safe because domination is preserved under vertex deletion.
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> order;
  order.reserve(n);
  const std::size_t words = g.words();
  std::vector<std::uint64_t> mask(words, 0);
  for (std::size_t v = 0; v < n; ++v)
    mask[v / 64] |= std::uint64_t{1} << (v % 64);

  std::size_t remaining = n;
  while (remaining > 1) {
    std::size_t pick = n;
    for (std::size_t x = 0; x < n && pick == n; ++x) {
      if (!alive[x]) continue;
      auto rx = g.closed_row(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || !alive[y]) continue;
        auto ry = g.closed_row(y);
        bool dom = true;
        for (std::size_t w = 0; w < words && dom; ++w)
          if (rx[w] & mask[w] & ~ry[w]) dom = false;
        if (dom) {
          pick = x;
          break;
        }
      }
    }
    if (pick == n) return std::nullopt;
    alive[pick] = false;
    mask[pick / 64] &= ~(std::uint64_t{1} << (pick % 64));
    order.push_back(pick);
    --remaining;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) order.push_back(v);
  return order;
}

}  // namespace copwin
