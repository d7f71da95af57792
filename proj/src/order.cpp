#include "balrig/order.hpp"

#include <algorithm>
#include <string>

#include "balrig/errors.hpp"

namespace balrig {

VertexOrder::VertexOrder(std::vector<int> color_sizes, std::vector<Vertex> sequence)
    : color_sizes_(std::move(color_sizes)), sequence_(std::move(sequence)) {
  position_.resize(color_sizes_.size());
  std::size_t total = 0;
  for (std::size_t c = 0; c < color_sizes_.size(); ++c) {
    if (color_sizes_[c] < 0) throw InvalidInput("negative color size");
    position_[c].assign(static_cast<std::size_t>(color_sizes_[c]), -1);
    total += static_cast<std::size_t>(color_sizes_[c]);
  }
  if (sequence_.size() != total) throw InvalidInput("vertex order does not list every vertex once");
  std::vector<int> next(color_sizes_.size(), 0);
  for (std::size_t p = 0; p < sequence_.size(); ++p) {
    const Vertex& v = sequence_[p];
    if (v.color < 0 || v.color >= static_cast<int>(color_sizes_.size()) || v.index < 0 ||
        v.index >= color_sizes_[v.color]) {
      throw InvalidInput("vertex order names an unknown vertex");
    }
    if (v.index != next[v.color]) {
      throw InvalidInput("vertex order must list each color in increasing index order");
    }
    ++next[v.color];
    position_[v.color][v.index] = static_cast<int>(p);
  }
}

VertexOrder VertexOrder::interleaved(std::vector<int> color_sizes) {
  std::vector<Vertex> seq;
  const int longest = color_sizes.empty() ? 0 : *std::max_element(color_sizes.begin(), color_sizes.end());
  for (int r = 0; r < longest; ++r) {
    for (int c = 0; c < static_cast<int>(color_sizes.size()); ++c) {
      if (r < color_sizes[c]) seq.push_back({c, r});
    }
  }
  return VertexOrder(std::move(color_sizes), std::move(seq));
}

VertexOrder VertexOrder::admissible(int a_size, int b_size, int k, int l) {
  if (k < 0 || l < 0 || k > a_size || l > b_size) {
    throw InvalidInput("no (" + std::to_string(k) + "," + std::to_string(l) +
                       ")-admissible order on sides " + std::to_string(a_size) + "," +
                       std::to_string(b_size));
  }
  std::vector<Vertex> seq;
  for (int i = 0; i < k; ++i) seq.push_back({kSideA, i});
  for (int j = 0; j < l; ++j) seq.push_back({kSideB, j});
  int a = k, b = l;
  while (a < a_size || b < b_size) {
    if (a < a_size) seq.push_back({kSideA, a++});
    if (b < b_size) seq.push_back({kSideB, b++});
  }
  return VertexOrder({a_size, b_size}, std::move(seq));
}

bool VertexOrder::is_admissible(int k, int l) const {
  if (color_sizes_.size() != 2) return false;
  if (k < 0 || l < 0 || k > color_sizes_[0] || l > color_sizes_[1]) return false;
  int a_count = 0;
  for (int p = 0; p < k + l; ++p) a_count += sequence_[p].color == kSideA ? 1 : 0;
  return a_count == k;
}

bool VertexOrder::is_uniformly_admissible(int l) const {
  if (l < 0) return false;
  std::vector<int> want(color_sizes_.size());
  int segment = 0;
  for (std::size_t c = 0; c < color_sizes_.size(); ++c) {
    want[c] = std::min(l, color_sizes_[c]);
    segment += want[c];
  }
  std::vector<int> seen(color_sizes_.size(), 0);
  for (int p = 0; p < segment; ++p) ++seen[sequence_[p].color];
  return seen == want;
}

namespace {

VertexOrder cone_order(const VertexOrder& order, int color) {
  std::vector<int> sizes = order.color_sizes();
  ++sizes[color];
  std::vector<Vertex> seq{{color, 0}};
  for (Vertex v : order.sequence()) {
    if (v.color == color) ++v.index;
    seq.push_back(v);
  }
  return VertexOrder(std::move(sizes), std::move(seq));
}

}  // namespace

VertexOrder cone_left_order(const VertexOrder& order) { return cone_order(order, kSideA); }
VertexOrder cone_right_order(const VertexOrder& order) { return cone_order(order, kSideB); }

EdgeKey lex_key(const VertexOrder& order, const Edge& e) {
  const int pa = order.position({kSideA, e.a});
  const int pb = order.position({kSideB, e.b});
  return {std::min(pa, pb), std::max(pa, pb)};
}

std::vector<Edge> lex_sorted_pairs(const VertexOrder& order) {
  if (order.color_sizes().size() != 2) throw InvalidInput("edge order needs a two-color vertex order");
  std::vector<Edge> pairs;
  for (int a = 0; a < order.color_sizes()[0]; ++a) {
    for (int b = 0; b < order.color_sizes()[1]; ++b) pairs.push_back({a, b});
  }
  std::sort(pairs.begin(), pairs.end(), [&](const Edge& x, const Edge& y) {
    return lex_key(order, x) < lex_key(order, y);
  });
  return pairs;
}

}  // namespace balrig
