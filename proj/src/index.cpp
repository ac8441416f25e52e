#include "frechet/index.hpp"

#include <algorithm>

namespace frechet {

namespace {

constexpr std::size_t kDims = 8;
constexpr std::size_t kChildren = std::size_t{1} << kDims;

// Beyond this depth a region has been halved enough times that any distinct
// points would have separated long ago; stop splitting to stay safe against
// floating-point degeneracies.
constexpr std::size_t kMaxDepth = 128;

} // namespace

struct SpatialIndex::Node {
  Key lo{}, hi{}; // region box
  std::vector<std::uint32_t> points;
  std::unique_ptr<std::array<std::unique_ptr<Node>, kChildren>> children;

  bool is_leaf() const { return children == nullptr; }

  Key center() const {
    Key c;
    for (std::size_t k = 0; k < kDims; ++k)
      c[k] = 0.5 * (lo[k] + hi[k]);
    return c;
  }
};

SpatialIndex::SpatialIndex(int leaf_capacity)
    : leaf_capacity_(leaf_capacity < 1 ? 1 : leaf_capacity) {}

SpatialIndex::~SpatialIndex() = default;
SpatialIndex::SpatialIndex(SpatialIndex &&) noexcept = default;
SpatialIndex &SpatialIndex::operator=(SpatialIndex &&) noexcept = default;

namespace {

std::size_t sign_pattern(const SpatialIndex::Key &point,
                         const SpatialIndex::Key &center) {
  std::size_t pattern = 0;
  for (std::size_t k = 0; k < kDims; ++k)
    if (point[k] >= center[k])
      pattern |= std::size_t{1} << k;
  return pattern;
}

bool all_keys_equal(const std::vector<std::uint32_t> &points,
                    const std::vector<SpatialIndex::Key> &keys) {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (keys[points[i]] != keys[points[0]])
      return false;
  return true;
}

} // namespace

void SpatialIndex::build(const std::vector<CurveSummary> &summaries) {
  keys_.clear();
  summaries_ = summaries;
  keys_.reserve(summaries.size());
  for (const CurveSummary &s : summaries)
    keys_.push_back(key_of(s));
  root_.reset();
  if (keys_.empty())
    return;

  // Root region: bounding box of all points, padded 1% per side so that no
  // point sits exactly on the outer boundary.
  Key lo = keys_[0], hi = keys_[0];
  for (const Key &k : keys_)
    for (std::size_t d = 0; d < kDims; ++d) {
      lo[d] = std::min(lo[d], k[d]);
      hi[d] = std::max(hi[d], k[d]);
    }
  for (std::size_t d = 0; d < kDims; ++d) {
    const double pad = 0.01 * (hi[d] - lo[d]);
    lo[d] -= pad;
    hi[d] += pad;
  }

  root_ = std::make_unique<Node>();
  root_->lo = lo;
  root_->hi = hi;
  for (std::uint32_t id = 0; id < keys_.size(); ++id)
    insert(root_.get(), id, 0);
}

void SpatialIndex::insert(Node *node, std::uint32_t id, std::size_t depth) {
  while (!node->is_leaf()) {
    const Key center = node->center();
    const std::size_t pattern = sign_pattern(keys_[id], center);
    std::unique_ptr<Node> &child = (*node->children)[pattern];
    if (!child) {
      child = std::make_unique<Node>();
      for (std::size_t k = 0; k < kDims; ++k) {
        const bool high = (pattern >> k) & 1;
        child->lo[k] = high ? center[k] : node->lo[k];
        child->hi[k] = high ? node->hi[k] : center[k];
      }
    }
    node = child.get();
    ++depth;
  }
  node->points.push_back(id);
  if (node->points.size() > static_cast<std::size_t>(leaf_capacity_))
    split(node, depth);
}

void SpatialIndex::split(Node *node, std::size_t depth) {
  if (depth >= kMaxDepth || all_keys_equal(node->points, keys_))
    return; // identical points share a leaf; no further split possible
  node->children =
      std::make_unique<std::array<std::unique_ptr<Node>, kChildren>>();
  std::vector<std::uint32_t> points = std::move(node->points);
  node->points.clear();
  for (std::uint32_t id : points)
    insert(node, id, depth);
}

void SpatialIndex::box_query(const Key &lo, const Key &hi,
                             std::vector<std::uint32_t> &out) const {
  if (!root_)
    return;
  // Iterative depth-first traversal; closed-bound overlap tests on both the
  // node regions and the point keys.
  std::vector<const Node *> stack{root_.get()};
  while (!stack.empty()) {
    const Node *node = stack.back();
    stack.pop_back();
    bool overlaps = true;
    for (std::size_t k = 0; k < kDims && overlaps; ++k)
      overlaps = node->lo[k] <= hi[k] && lo[k] <= node->hi[k];
    if (!overlaps)
      continue;
    if (node->is_leaf()) {
      for (std::uint32_t id : node->points) {
        const Key &key = keys_[id];
        bool inside = true;
        for (std::size_t k = 0; k < kDims && inside; ++k)
          inside = lo[k] <= key[k] && key[k] <= hi[k];
        if (inside)
          out.push_back(id);
      }
    } else {
      for (const auto &child : *node->children)
        if (child)
          stack.push_back(child.get());
    }
  }
}

std::vector<std::uint32_t> SpatialIndex::candidates(const CurveSummary &query,
                                                    double delta) const {
  const Key q = key_of(query);
  Key lo, hi;
  for (std::size_t k = 0; k < kDims; ++k) {
    lo[k] = q[k] - delta;
    hi[k] = q[k] + delta;
  }
  std::vector<std::uint32_t> out;
  box_query(lo, hi, out);
  std::erase_if(out, [&](std::uint32_t id) {
    return lb_frechet(query, summaries_[id]) > delta;
  });
  return out;
}

SpatialIndex::TreeStats SpatialIndex::tree_stats() const {
  TreeStats stats;
  stats.points = keys_.size();
  if (!root_)
    return stats;
  struct Item {
    const Node *node;
    std::size_t depth;
  };
  std::vector<Item> stack{{root_.get(), 1}};
  while (!stack.empty()) {
    auto [node, depth] = stack.back();
    stack.pop_back();
    stats.depth = std::max(stats.depth, depth);
    if (node->is_leaf()) {
      ++stats.leaves;
      stats.max_leaf_size = std::max(stats.max_leaf_size, node->points.size());
    } else {
      ++stats.internals;
      for (const auto &child : *node->children)
        if (child)
          stack.push_back({child.get(), depth + 1});
    }
  }
  return stats;
}

} // namespace frechet
