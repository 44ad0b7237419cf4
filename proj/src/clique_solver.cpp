#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <thread>

#include "ringpoints/cliquegraph.hpp"
#include "ringpoints/errors.hpp"

namespace ringpoints {

BitGraph::BitGraph(std::uint32_t vertices)
    : size_(vertices), words_((vertices + 63) / 64), bits_(static_cast<std::size_t>(vertices) * words_, 0) {}

void BitGraph::add_edge(std::uint32_t i, std::uint32_t j) {
  if (i >= size_ || j >= size_ || i == j)
    throw invalid_input("bad edge");
  bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

std::uint32_t BitGraph::degree(std::uint32_t i) const {
  std::uint32_t d = 0;
  for (std::uint32_t w = 0; w < words_; ++w)
    d += static_cast<std::uint32_t>(std::popcount(row(i)[w]));
  return d;
}

std::uint64_t BitGraph::edge_count() const {
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < size_; ++i)
    total += degree(i);
  return total / 2;
}

bool BitGraph::is_consistent() const {
  for (std::uint32_t i = 0; i < size_; ++i) {
    if (adjacent(i, i))
      return false;
    for (std::uint32_t j = i + 1; j < size_; ++j)
      if (adjacent(i, j) != adjacent(j, i))
        return false;
  }
  return true;
}

bool BitGraph::is_clique(std::span<const std::uint32_t> vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] >= size_)
      return false;
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!adjacent(vertices[a], vertices[b]))
        return false;
  }
  return true;
}

namespace {

using clock_type = std::chrono::steady_clock;

/// Vertices ordered so that the last one has minimum degree, the one
/// before it minimum degree in what remains, and so on.
std::vector<std::uint32_t> degeneracy_order(const BitGraph& g) {
  const auto n = g.size();
  std::vector<std::uint32_t> degree(n);
  std::vector<char> removed(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    degree[v] = g.degree(v);
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t pos = n; pos-- > 0;) {
    std::uint32_t pick = n;
    for (std::uint32_t v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || degree[v] < degree[pick]))
        pick = v;
    order[pos] = pick;
    removed[pick] = 1;
    const auto* r = g.row(pick);
    for (std::uint32_t w = 0; w < g.words(); ++w)
      for (auto bits = r[w]; bits; bits &= bits - 1) {
        auto u = w * 64 + static_cast<std::uint32_t>(std::countr_zero(bits));
        if (!removed[u])
          --degree[u];
      }
  }
  return order;
}

BitGraph permuted(const BitGraph& g, const std::vector<std::uint32_t>& order) {
  std::vector<std::uint32_t> position(g.size());
  for (std::uint32_t i = 0; i < order.size(); ++i)
    position[order[i]] = i;
  BitGraph h(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i)
    for (std::uint32_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(order[i], order[j]))
        h.add_edge(i, j);
  return h;
}

struct Shared {
  std::atomic<std::uint32_t> best{0};
  std::mutex mutex;
  std::vector<std::uint32_t> best_clique;
  std::atomic<bool> aborted{false};
  std::atomic<std::uint64_t> nodes{0};
  std::optional<clock_type::time_point> deadline;

  void offer(const std::vector<std::uint32_t>& clique) {
    auto size = static_cast<std::uint32_t>(clique.size());
    auto current = best.load();
    while (size > current)
      if (best.compare_exchange_weak(current, size)) {
        std::lock_guard lock(mutex);
        if (best_clique.size() < clique.size())
          best_clique = clique;
        return;
      }
  }
};

class Worker {
public:
  Worker(const BitGraph& g, Shared& shared) : g_(g), shared_(shared), words_(g.words()) {}

  /// Colour-sort P into (vertex, colour) pairs; only colours > kmin are kept.
  std::uint32_t colour_sort(const std::uint64_t* p, std::uint32_t kmin, std::vector<std::uint32_t>& verts,
                            std::vector<std::uint32_t>& colours) {
    uncoloured_.assign(p, p + words_);
    std::uint32_t count = 0, k = 0;
    verts.resize(g_.size());
    colours.resize(g_.size());
    std::uint32_t first_word = 0;
    for (;;) {
      while (first_word < words_ && uncoloured_[first_word] == 0)
        ++first_word;
      if (first_word == words_)
        break;
      ++k;
      candidates_.assign(uncoloured_.begin(), uncoloured_.end());
      for (auto w = first_word; w < words_; ++w) {
        while (candidates_[w]) {
          auto bit = static_cast<std::uint32_t>(std::countr_zero(candidates_[w]));
          auto v = w * 64 + bit;
          auto mask = ~(std::uint64_t{1} << bit);
          candidates_[w] &= mask;
          uncoloured_[w] &= mask;
          const auto* nv = g_.row(v);
          for (auto x = w; x < words_; ++x)
            candidates_[x] &= ~nv[x];
          if (k > kmin) {
            verts[count] = v;
            colours[count] = k;
            ++count;
          }
        }
      }
    }
    return count;
  }

  void expand(std::size_t depth) {
    if (shared_.aborted.load(std::memory_order_relaxed))
      return;
    if ((++local_nodes_ & 1023) == 0) {
      shared_.nodes.fetch_add(1024, std::memory_order_relaxed);
      if (shared_.deadline && clock_type::now() > *shared_.deadline) {
        shared_.aborted = true;
        return;
      }
    }
    ensure_depth(depth + 1);
    auto& p = sets_[depth];
    auto& verts = verts_[depth];
    auto& colours = colours_[depth];
    auto best = shared_.best.load(std::memory_order_relaxed);
    auto csize = static_cast<std::uint32_t>(clique_.size());
    auto kmin = best > csize ? best - csize : 0;
    auto count = colour_sort(p.data(), kmin, verts, colours);
    for (auto idx = count; idx-- > 0;) {
      if (csize + colours[idx] <= shared_.best.load(std::memory_order_relaxed))
        return;
      auto v = verts[idx];
      descend(depth, p.data(), v);
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      if (shared_.aborted.load(std::memory_order_relaxed))
        return;
    }
  }

  /// Add v to the current clique, recurse on P & N(v), remove v again.
  void descend(std::size_t depth, const std::uint64_t* p, std::uint32_t v) {
    ensure_depth(depth + 1);
    auto& next = sets_[depth + 1];
    const auto* nv = g_.row(v);
    bool empty = true;
    for (std::uint32_t w = 0; w < words_; ++w) {
      next[w] = p[w] & nv[w];
      empty = empty && next[w] == 0;
    }
    clique_.push_back(v);
    if (empty)
      shared_.offer(clique_);
    else
      expand(depth + 1);
    clique_.pop_back();
  }

  void flush_nodes() { shared_.nodes.fetch_add(local_nodes_ & 1023, std::memory_order_relaxed); }

  std::vector<std::uint64_t>& root_set() {
    ensure_depth(0);
    return sets_[0];
  }

  std::uint32_t clique_size() const { return static_cast<std::uint32_t>(clique_.size()); }

private:
  void ensure_depth(std::size_t depth) {
    while (sets_.size() <= depth) {
      sets_.emplace_back(words_, 0);
      verts_.emplace_back();
      colours_.emplace_back();
    }
  }

  const BitGraph& g_;
  Shared& shared_;
  std::uint32_t words_;
  std::deque<std::vector<std::uint64_t>> sets_;
  std::deque<std::vector<std::uint32_t>> verts_, colours_;
  std::vector<std::uint64_t> uncoloured_, candidates_;
  std::vector<std::uint32_t> clique_;
  std::uint64_t local_nodes_ = 0;
};

/// Greedy cliques started from the densest vertices.
std::vector<std::uint32_t> greedy_clique(const BitGraph& g) {
  std::vector<std::uint32_t> best;
  const auto words = g.words();
  std::vector<std::uint64_t> cand(words);
  for (std::uint32_t start = 0; start < std::min<std::uint32_t>(g.size(), 64); ++start) {
    std::vector<std::uint32_t> clique{start};
    std::copy(g.row(start), g.row(start) + words, cand.begin());
    for (;;) {
      std::uint32_t pick = g.size(), pick_deg = 0;
      for (std::uint32_t w = 0; w < words; ++w)
        for (auto bits = cand[w]; bits; bits &= bits - 1) {
          auto v = w * 64 + static_cast<std::uint32_t>(std::countr_zero(bits));
          std::uint32_t d = 0;
          for (std::uint32_t x = 0; x < words; ++x)
            d += static_cast<std::uint32_t>(std::popcount(cand[x] & g.row(v)[x]));
          if (pick == g.size() || d > pick_deg) {
            pick = v;
            pick_deg = d;
          }
        }
      if (pick == g.size())
        break;
      clique.push_back(pick);
      for (std::uint32_t x = 0; x < words; ++x)
        cand[x] &= g.row(pick)[x];
    }
    if (clique.size() > best.size())
      best = clique;
  }
  return best;
}

} // namespace

CliqueResult max_clique(const BitGraph& input, const SolverOptions& options) {
  const auto start = clock_type::now();
  CliqueResult result;
  if (!options.seed.empty() && !input.is_clique(options.seed))
    throw invalid_input("seed is not a clique of the graph");
  if (input.size() == 0) {
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start);
    return result;
  }

  const auto order = degeneracy_order(input);
  std::vector<std::uint32_t> position(input.size());
  for (std::uint32_t i = 0; i < order.size(); ++i)
    position[order[i]] = i;
  const BitGraph g = permuted(input, order);

  Shared shared;
  if (options.budget.count() > 0)
    shared.deadline = start + options.budget;
  shared.best = options.lower_bound;
  if (options.seed.size() > options.lower_bound) {
    std::vector<std::uint32_t> seed;
    for (auto v : options.seed)
      seed.push_back(position[v]);
    shared.offer(seed);
  }
  shared.offer(greedy_clique(g));

  // Root level: colour once, then farm the branches out to the workers.
  Worker root(g, shared);
  auto& p = root.root_set();
  for (std::uint32_t v = 0; v < g.size(); ++v)
    p[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<std::uint32_t> verts, colours;
  auto count = root.colour_sort(p.data(), 0, verts, colours);
  // Branch idx sees P minus every vertex branched on before it.
  std::vector<std::vector<std::uint64_t>> branch_sets(count);
  {
    auto remaining = p;
    for (auto idx = count; idx-- > 0;) {
      branch_sets[idx] = remaining;
      auto v = verts[idx];
      remaining[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  std::atomic<std::int64_t> next{static_cast<std::int64_t>(count) - 1};
  auto run = [&] {
    Worker worker(g, shared);
    for (;;) {
      auto idx = next.fetch_sub(1);
      if (idx < 0 || shared.aborted)
        break;
      if (colours[idx] <= shared.best.load())
        break;
      worker.descend(0, branch_sets[idx].data(), verts[idx]);
    }
    worker.flush_nodes();
  };
  const auto threads = std::max(1u, options.threads);
  if (threads == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(run);
  }

  {
    std::lock_guard lock(shared.mutex);
    for (auto v : shared.best_clique)
      result.witness.push_back(order[v]);
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.size = static_cast<std::uint32_t>(result.witness.size());
  if (shared.best > result.size && result.size < options.lower_bound)
    result.size = 0;
  result.exact = !shared.aborted;
  result.nodes_explored = shared.nodes;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start);
  return result;
}

} // namespace ringpoints
