#include "sysgraph/isoperimetry.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "sysgraph/bounds.hpp"

namespace sysgraph {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const auto g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

const char* to_string(ProfileMethod m) { return m == ProfileMethod::Exact ? "exact" : "heuristic"; }

namespace {

std::vector<char> membership(const ColoredGraph& g, std::span<const Vertex> set,
                             std::uint64_t* size) {
  std::vector<char> in(g.num_vertices(), 0);
  std::uint64_t count = 0;
  for (Vertex v : set) {
    if (v >= g.num_vertices()) {
      throw IsoperimetryError(IsoperimetryError::Kind::IdOutOfRange,
                              "vertex id " + std::to_string(v) + " out of range");
    }
    if (!in[v]) {
      in[v] = 1;
      ++count;
    }
  }
  if (size) *size = count;
  return in;
}

}  // namespace

std::uint64_t boundary(const ColoredGraph& g, std::span<const Vertex> set) {
  const auto in = membership(g, set, nullptr);
  std::uint64_t count = 0;
  for (const auto& e : g.edges()) count += static_cast<std::uint64_t>(in[e.u] != in[e.v]);
  return count;
}

Rational expansion(const ColoredGraph& g, std::span<const Vertex> set) {
  std::uint64_t size = 0;
  const auto in = membership(g, set, &size);
  if (size == 0) {
    throw IsoperimetryError(IsoperimetryError::Kind::EmptySet, "expansion of the empty set");
  }
  std::uint64_t count = 0;
  for (const auto& e : g.edges()) count += static_cast<std::uint64_t>(in[e.u] != in[e.v]);
  return {static_cast<std::int64_t>(count), static_cast<std::int64_t>(size)};
}

std::vector<std::uint64_t> inner_edges_by_color(const ColoredGraph& g,
                                                std::span<const Vertex> set) {
  std::uint64_t size = 0;
  const auto in = membership(g, set, &size);
  std::vector<std::uint64_t> inner(g.dimension(), 0);
  std::uint64_t cut = 0;
  for (const auto& e : g.edges()) {
    if (in[e.u] && in[e.v]) {
      ++inner[e.color - 1];
    } else if (in[e.u] != in[e.v]) {
      ++cut;
    }
  }
  const std::uint64_t total_inner = std::accumulate(inner.begin(), inner.end(), std::uint64_t{0});
  if (static_cast<std::uint64_t>(g.dimension()) * size != cut + 2 * total_inner) {
    throw std::logic_error("degree identity d|U| = boundary + 2 sum e_i(U) violated");
  }
  return inner;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

struct Best {
  std::uint64_t boundary = std::numeric_limits<std::uint64_t>::max();
  VertexSet witness;

  // Smaller boundary wins; ties go to the lexicographically smaller set.
  bool improved_by(std::uint64_t b, const VertexSet& w) const {
    return b < boundary || (b == boundary && w < witness);
  }
};

// Depth-first enumeration of all sets whose smallest element is `lead`, up to
// `max_size` elements. Visits sets of equal size in lexicographic order, so a
// strict improvement test keeps the lexicographically smallest minimizer.
class SubsetSearch {
 public:
  SubsetSearch(const ColoredGraph& g, std::uint64_t max_size)
      : g_(g), max_size_(max_size), in_(g.num_vertices(), 0), best_(max_size + 1) {
    current_.reserve(max_size);
  }

  void run_from(Vertex lead) {
    push(lead);
    descend();
    pop();
  }

  const std::vector<Best>& best() const { return best_; }

 private:
  void push(Vertex v) {
    std::uint64_t inside = 0;
    for (Vertex w : g_.neighbors(v)) inside += static_cast<std::uint64_t>(in_[w]);
    deltas_.push_back(static_cast<std::int64_t>(g_.dimension()) - 2 * static_cast<std::int64_t>(inside));
    boundary_ += deltas_.back();
    in_[v] = 1;
    current_.push_back(v);
    auto& slot = best_[current_.size()];
    if (static_cast<std::uint64_t>(boundary_) < slot.boundary) {
      slot.boundary = static_cast<std::uint64_t>(boundary_);
      slot.witness = current_;
    }
  }

  void pop() {
    in_[current_.back()] = 0;
    current_.pop_back();
    boundary_ -= deltas_.back();
    deltas_.pop_back();
  }

  void descend() {
    if (current_.size() >= max_size_) return;
    for (Vertex v = current_.back() + 1; v < g_.num_vertices(); ++v) {
      push(v);
      descend();
      pop();
    }
  }

  const ColoredGraph& g_;
  std::uint64_t max_size_;
  std::vector<char> in_;
  std::vector<Vertex> current_;
  std::vector<std::int64_t> deltas_;
  std::int64_t boundary_ = 0;
  std::vector<Best> best_;
};

VertexSet complement_of(const VertexSet& set, std::uint64_t n) {
  VertexSet out;
  out.reserve(n - set.size());
  std::size_t k = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (k < set.size() && set[k] == v) {
      ++k;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

ProfileReport exact_profile(const ColoredGraph& g, const ExactProfileOptions& options) {
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t max_size = std::min(options.max_size, n);
  if (max_size == 0) {
    throw IsoperimetryError(IsoperimetryError::Kind::BadSize, "max size must be at least 1");
  }
  if (n > kMaxFullSweepVertices) {
    for (std::uint64_t s = 1; s <= max_size; ++s) {
      if (binomial(n, s) > kMaxSubsetsPerRow) {
        throw IsoperimetryError(IsoperimetryError::Kind::TooLarge,
                                "C(" + std::to_string(n) + ", " + std::to_string(s) +
                                    ") exceeds the enumeration limit of " +
                                    std::to_string(kMaxSubsetsPerRow),
                                s, kMaxSubsetsPerRow);
      }
    }
  }

  const unsigned threads = std::max(1U, options.threads);
  std::vector<std::vector<Best>> partial(threads);
  std::atomic<Vertex> next_lead{0};
  auto worker = [&](unsigned t) {
    SubsetSearch search(g, max_size);
    for (Vertex lead = next_lead++; lead < n; lead = next_lead++) search.run_from(lead);
    partial[t] = search.best();
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  std::vector<Best> best(max_size + 1);
  for (const auto& part : partial) {
    for (std::uint64_t s = 1; s <= max_size; ++s) {
      if (best[s].improved_by(part[s].boundary, part[s].witness)) best[s] = part[s];
    }
  }

  ProfileReport report;
  report.dimension = g.dimension();
  report.num_vertices = n;
  for (std::uint64_t s = 1; s <= max_size; ++s) {
    report.rows.push_back({s, best[s].boundary,
                           Rational(static_cast<std::int64_t>(best[s].boundary),
                                    static_cast<std::int64_t>(s)),
                           best[s].witness, ProfileMethod::Exact});
  }
  if (options.include_complements) {
    // s = 0 contributes the whole vertex set.
    for (std::uint64_t s = 0; s <= max_size; ++s) {
      const std::uint64_t t = n - s;
      if (t <= max_size) continue;
      const std::uint64_t b = s == 0 ? 0 : best[s].boundary;
      const VertexSet w = s == 0 ? complement_of({}, n) : complement_of(best[s].witness, n);
      report.rows.push_back({t, b,
                             Rational(static_cast<std::int64_t>(b), static_cast<std::int64_t>(t)),
                             w, ProfileMethod::Exact});
    }
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const ProfileRow& a, const ProfileRow& b) { return a.size < b.size; });
  return report;
}

namespace {

// Grows and refines a single vertex set, tracking for every vertex how many of
// its neighbors are inside the set.
class LocalSearch {
 public:
  explicit LocalSearch(const ColoredGraph& g)
      : g_(g), in_(g.num_vertices(), 0), inside_(g.num_vertices(), 0) {}

  void reset() {
    for (Vertex v : members_) {
      in_[v] = 0;
      for (Vertex w : g_.neighbors(v)) --inside_[w];
    }
    members_.clear();
    boundary_ = 0;
  }

  void add(Vertex v) {
    boundary_ += g_.dimension() - 2 * static_cast<std::int64_t>(inside_[v]);
    in_[v] = 1;
    for (Vertex w : g_.neighbors(v)) ++inside_[w];
    members_.push_back(v);
  }

  void remove(Vertex v) {
    in_[v] = 0;
    for (Vertex w : g_.neighbors(v)) --inside_[w];
    boundary_ -= g_.dimension() - 2 * static_cast<std::int64_t>(inside_[v]);
    members_.erase(std::find(members_.begin(), members_.end(), v));
  }

  // Outside vertex with the most neighbors inside; smallest id on ties. Falls
  // back to a random outside vertex when the set has no outside neighbor.
  Vertex best_addition(std::mt19937_64& rng) const {
    Vertex best = 0;
    std::int64_t best_inside = -1;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (!in_[v] && static_cast<std::int64_t>(inside_[v]) > best_inside) {
        best = v;
        best_inside = inside_[v];
      }
    }
    if (best_inside == 0) {
      const auto outside = g_.num_vertices() - members_.size();
      auto k = rng() % outside;
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        if (!in_[v] && k-- == 0) return v;
      }
    }
    return best;
  }

  // First-improvement swaps of an inside vertex with an outside vertex that
  // touches the set. Returns after a full pass without improvement.
  void improve(unsigned max_passes) {
    for (unsigned pass = 0; pass < max_passes; ++pass) {
      bool improved = false;
      for (std::size_t i = 0; i < members_.size(); ++i) {
        const Vertex u = members_[i];
        for (Vertex w = 0; w < g_.num_vertices(); ++w) {
          if (in_[w] || inside_[w] == 0) continue;
          const bool adjacent = std::ranges::find(g_.neighbors(u), w) != g_.neighbors(u).end();
          const std::int64_t delta = 2 * static_cast<std::int64_t>(inside_[u]) -
                                     2 * static_cast<std::int64_t>(inside_[w]) +
                                     (adjacent ? 2 : 0);
          if (delta < 0) {
            remove(u);
            add(w);
            improved = true;
            break;
          }
        }
      }
      if (!improved) return;
    }
  }

  std::int64_t boundary() const { return boundary_; }
  std::size_t size() const { return members_.size(); }
  VertexSet members() const {
    VertexSet out = members_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const ColoredGraph& g_;
  std::vector<char> in_;
  std::vector<std::uint32_t> inside_;
  std::vector<Vertex> members_;
  std::int64_t boundary_ = 0;
};

constexpr unsigned kMaxSwapPasses = 64;

}  // namespace

HeuristicResult heuristic_min_expansion(const ColoredGraph& g, std::uint64_t size, unsigned trials,
                                        std::uint64_t seed) {
  const std::uint64_t n = g.num_vertices();
  if (size < 1 || size > n) {
    throw IsoperimetryError(IsoperimetryError::Kind::BadSize, "set size must be in 1..n", size, n);
  }
  HeuristicResult result;
  if (size == n) {
    result.witness.resize(n);
    std::iota(result.witness.begin(), result.witness.end(), Vertex{0});
    result.expansion = Rational(0, static_cast<std::int64_t>(n));
    return result;
  }

  std::mt19937_64 rng(seed);
  LocalSearch search(g);
  Best best;
  for (unsigned t = 0; t < std::max(1U, trials); ++t) {
    search.reset();
    search.add(static_cast<Vertex>(rng() % n));
    while (search.size() < size) search.add(search.best_addition(rng));
    search.improve(kMaxSwapPasses);
    const auto b = static_cast<std::uint64_t>(search.boundary());
    auto members = search.members();
    if (best.improved_by(b, members)) {
      best.boundary = b;
      best.witness = std::move(members);
    }
  }
  result.boundary = best.boundary;
  result.witness = std::move(best.witness);
  result.expansion =
      Rational(static_cast<std::int64_t>(result.boundary), static_cast<std::int64_t>(size));
  return result;
}

ProfileReport heuristic_profile(const ColoredGraph& g, std::span<const std::uint64_t> sizes,
                                unsigned trials, std::uint64_t seed) {
  ProfileReport report;
  report.dimension = g.dimension();
  report.num_vertices = g.num_vertices();
  std::vector<std::uint64_t> sorted(sizes.begin(), sizes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto s : sorted) {
    // Each size gets its own stream so rows are independent of the size list.
    auto h = heuristic_min_expansion(g, s, trials, seed ^ (s * 0x9E3779B97F4A7C15ULL));
    report.rows.push_back({s, h.boundary, h.expansion, std::move(h.witness),
                           ProfileMethod::Heuristic});
  }
  return report;
}

std::vector<BoundCheckRow> check_profile_against_bounds(const ProfileReport& report) {
  std::vector<BoundCheckRow> out;
  const int d = report.dimension;
  for (const auto& row : report.rows) {
    BoundCheckRow c;
    c.size = row.size;
    c.value = row.min_expansion;
    c.method = row.method;
    const auto s = static_cast<double>(row.size);
    c.bound_pseudo = bounds::pseudo_cube_bound(d, s);
    c.bound_dualsys = row.size <= 1 ? static_cast<double>(d) - 8.0
                                    : bounds::dual_systolic_bound(d, s);
    const double value = row.min_expansion.to_double();
    c.pass_pseudo = value >= c.bound_pseudo - kBoundSlack;
    c.pass_dualsys = value >= c.bound_dualsys - kBoundSlack;
    out.push_back(c);
  }
  return out;
}

bool all_pass(std::span<const BoundCheckRow> rows, BoundKind kind) {
  return std::ranges::all_of(rows, [kind](const BoundCheckRow& r) {
    return kind == BoundKind::PseudoCube ? r.pass_pseudo : r.pass_dualsys;
  });
}

}  // namespace sysgraph
