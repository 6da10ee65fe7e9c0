#include "ifam/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ifam/analysis.hpp"
#include "ifam/bounds.hpp"
#include "ifam/errors.hpp"

namespace ifam {

namespace {

using Clock = std::chrono::steady_clock;

void check_search_universe(int n, const char* who) {
  if (n < 1 || n > kMaxSearchGroundSize)
    throw std::invalid_argument(std::string(who) + ": n must be in [1, " +
                                std::to_string(kMaxSearchGroundSize) + "]");
}

// All masks over n bits whose popcount the size window admits, ascending.
// Within one popcount class the enumeration itself ascends; classes are
// merged by a final sort.
std::vector<std::uint64_t> enumerate_masks(int n, const IntersectionConstraint& c,
                                           std::uint64_t cap) {
  mpz_class total = 0;
  const int hi = std::min(c.size_max(), n);
  for (int m = c.size_min(); m <= hi; ++m) total += binomial(n, m);
  if (total > mpz_class(static_cast<unsigned long>(cap)))
    throw InstanceTooLarge("candidate count " + total.get_str() + " exceeds cap " +
                           std::to_string(cap));

  std::vector<std::uint64_t> masks;
  masks.reserve(total.get_ui());
  for (int m = c.size_min(); m <= hi; ++m) {
    std::uint64_t v = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    while (true) {
      masks.push_back(v);
      const std::uint64_t low = v & (~v + 1);
      const std::uint64_t r = v + low;
      if (r < v || r == 0) break;  // carry ran off the top word
      const std::uint64_t next = r | (((v ^ r) >> 2) / low);
      if (n < 64 && next >= (std::uint64_t{1} << n)) break;
      v = next;
    }
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

// Compatibility rows over the candidate indices: bit j of row i set iff the
// constraint admits |cand_i meet cand_j|. Vertices are never self-adjacent.
std::vector<SubsetBits> build_adjacency(const std::vector<std::uint64_t>& masks,
                                        const IntersectionConstraint& c) {
  const int m = static_cast<int>(masks.size());
  std::vector<SubsetBits> adj(static_cast<std::size_t>(m), SubsetBits(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (c.admits(std::popcount(masks[static_cast<std::size_t>(i)] &
                                 masks[static_cast<std::size_t>(j)]))) {
        adj[static_cast<std::size_t>(i)].set_pos(j);
        adj[static_cast<std::size_t>(j)].set_pos(i);
      }
    }
  }
  return adj;
}

struct Shared {
  std::atomic<std::uint64_t> best_size{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::optional<std::uint64_t> node_budget;
  std::optional<Clock::time_point> deadline;
  std::mutex mu;
  std::vector<std::uint64_t> best_masks;  // guarded by mu

  // Counts one search-tree node; false means stop (budget or flag).
  bool tick() {
    if (stop.load(std::memory_order_relaxed)) return false;
    const std::uint64_t seen = 1 + nodes.fetch_add(1, std::memory_order_relaxed);
    if (node_budget && seen > *node_budget) {
      nodes.fetch_sub(1, std::memory_order_relaxed);  // this node was not explored
      budget_hit.store(true);
      stop.store(true);
      return false;
    }
    if (deadline && Clock::now() >= *deadline) {
      budget_hit.store(true);
      stop.store(true);
      return false;
    }
    return true;
  }

  void offer(const std::vector<int>& clique, const std::vector<std::uint64_t>& cand_masks) {
    std::lock_guard<std::mutex> lk(mu);
    if (clique.size() <= best_size.load(std::memory_order_relaxed)) return;
    best_masks.clear();
    for (int v : clique) best_masks.push_back(cand_masks[static_cast<std::size_t>(v)]);
    best_size.store(clique.size(), std::memory_order_relaxed);
  }

  void offer_masks(std::vector<std::uint64_t> masks) {
    std::lock_guard<std::mutex> lk(mu);
    if (masks.size() <= best_size.load(std::memory_order_relaxed)) return;
    best_size.store(masks.size(), std::memory_order_relaxed);
    best_masks = std::move(masks);
  }
};

// One branch at the root of a (possibly anchored) run: branch vertex, the
// candidate set after taking it, and the vertex's greedy color (an upper
// bound on how much the branch can add).
struct RootTask {
  int v;
  SubsetBits p;
  int color;
};

struct Bnb {
  const std::vector<SubsetBits>& adj;
  const std::vector<std::uint64_t>& cand_masks;
  Shared& sh;
  std::vector<int> clique;

  struct Frame {
    SubsetBits p, q, c;
    std::vector<int> order;
    std::vector<int> color;
  };
  // deque: growth at the back never invalidates references held across the
  // recursive call.
  std::deque<Frame> frames;

  Bnb(const std::vector<SubsetBits>& adj_, const std::vector<std::uint64_t>& masks_, Shared& sh_)
      : adj(adj_), cand_masks(masks_), sh(sh_) {}

  // Greedy sequential coloring of f.p into f.order/f.color (color classes
  // are independent sets, so |clique extension| <= #colors), then branch in
  // reverse color order. f.p must be nonempty.
  void expand(std::size_t depth) {
    if (!sh.tick()) return;
    while (frames.size() < depth + 2) frames.emplace_back();
    Frame& f = frames[depth];
    Frame& child = frames[depth + 1];

    f.order.clear();
    f.color.clear();
    f.q = f.p;
    int color = 0;
    while (!f.q.empty()) {
      ++color;
      f.c = f.q;
      while (!f.c.empty()) {
        const int v = f.c.lowest_pos();
        f.order.push_back(v);
        f.color.push_back(color);
        f.q.reset_pos(v);
        f.c.reset_pos(v);
        f.c.subtract(adj[static_cast<std::size_t>(v)]);
      }
    }

    for (int i = static_cast<int>(f.order.size()) - 1; i >= 0; --i) {
      if (sh.stop.load(std::memory_order_relaxed)) return;
      if (clique.size() + static_cast<std::size_t>(f.color[static_cast<std::size_t>(i)]) <=
          sh.best_size.load(std::memory_order_relaxed))
        return;  // colors only shrink leftwards
      const int v = f.order[static_cast<std::size_t>(i)];
      clique.push_back(v);
      child.p = f.p;
      child.p &= adj[static_cast<std::size_t>(v)];
      if (child.p.empty())
        sh.offer(clique, cand_masks);
      else
        expand(depth + 1);
      clique.pop_back();
      f.p.reset_pos(v);
    }
  }

  void run_task(const RootTask& task, const std::vector<int>& base) {
    clique = base;
    clique.push_back(task.v);
    if (task.p.empty()) {
      sh.offer(clique, cand_masks);
      return;
    }
    if (frames.empty()) frames.emplace_back();
    frames[0].p = task.p;
    expand(0);
  }
};

// Root coloring of one run, identical to the in-tree coloring; counts as one
// node. Tasks come back in branch order (highest color first).
std::vector<RootTask> make_root_tasks(SubsetBits root_p, const std::vector<SubsetBits>& adj,
                                      Shared& sh) {
  std::vector<RootTask> tasks;
  if (root_p.empty() || !sh.tick()) return tasks;
  std::vector<int> order;
  std::vector<int> colors;
  SubsetBits q = root_p;
  SubsetBits cls(root_p.universe());
  int color = 0;
  while (!q.empty()) {
    ++color;
    cls = q;
    while (!cls.empty()) {
      const int v = cls.lowest_pos();
      order.push_back(v);
      colors.push_back(color);
      q.reset_pos(v);
      cls.reset_pos(v);
      cls.subtract(adj[static_cast<std::size_t>(v)]);
    }
  }
  tasks.reserve(order.size());
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    const int v = order[static_cast<std::size_t>(i)];
    RootTask t;
    t.v = v;
    t.color = colors[static_cast<std::size_t>(i)];
    t.p = root_p;
    t.p &= adj[static_cast<std::size_t>(v)];
    tasks.push_back(std::move(t));
    root_p.reset_pos(v);
  }
  return tasks;
}

void run_tasks(const std::vector<RootTask>& tasks, const std::vector<int>& base,
               const std::vector<SubsetBits>& adj, const std::vector<std::uint64_t>& cand_masks,
               Shared& sh, int threads) {
  if (tasks.empty()) return;
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (workers == 1) {
    Bnb solver(adj, cand_masks, sh);
    for (const RootTask& t : tasks) {
      if (sh.stop.load(std::memory_order_relaxed)) return;
      if (base.size() + static_cast<std::size_t>(t.color) <=
          sh.best_size.load(std::memory_order_relaxed))
        continue;
      solver.run_task(t, base);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Bnb solver(adj, cand_masks, sh);
    while (!sh.stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= tasks.size()) return;
      const RootTask& t = tasks[i];
      if (base.size() + static_cast<std::size_t>(t.color) <=
          sh.best_size.load(std::memory_order_relaxed))
        continue;
      solver.run_task(t, base);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

SetFamily masks_to_family(int n, std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  SetFamily out{GroundSet(n)};
  for (std::uint64_t m : masks) out.add(SubsetBits::from_mask(n, m));
  return out;
}

}  // namespace

std::string_view bound_verdict_name(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::Holds: return "true";
    case BoundVerdict::Fails: return "false";
    case BoundVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<SubsetBits> build_candidates(int n, const IntersectionConstraint& constraint,
                                         std::uint64_t cap) {
  check_search_universe(n, "build_candidates");
  std::vector<SubsetBits> out;
  const auto masks = enumerate_masks(n, constraint, cap);
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(SubsetBits::from_mask(n, m));
  return out;
}

SearchResult max_family(int n, const IntersectionConstraint& constraint,
                        const SearchOptions& options) {
  const auto t0 = Clock::now();
  check_search_universe(n, "max_family");
  std::vector<std::uint64_t> masks = enumerate_masks(n, constraint, options.candidate_cap);
  if (masks.size() > kMaxAdjacencyCandidates)
    throw InstanceTooLarge("adjacency for " + std::to_string(masks.size()) +
                           " candidates exceeds the supported " +
                           std::to_string(kMaxAdjacencyCandidates));

  Shared sh;
  sh.node_budget = options.node_budget;
  if (options.time_budget) sh.deadline = t0 + *options.time_budget;

  if (options.lower_bound_seed) {
    const SetFamily& seed = *options.lower_bound_seed;
    if (seed.ground_size() != n)
      throw std::invalid_argument("max_family: seed family ground set differs from instance");
    if (!validate_family(seed, constraint).valid)
      throw std::invalid_argument("max_family: seed family violates the constraint");
    std::vector<std::uint64_t> seed_masks;
    seed_masks.reserve(seed.size());
    for (const auto& m : seed.members()) seed_masks.push_back(m.mask64());
    sh.offer_masks(std::move(seed_masks));
  }

  const int m = static_cast<int>(masks.size());
  if (m > 0) {
    // Vertex order: compatibility degree descending, ties by ascending mask.
    // The sort is stable and masks arrive ascending, so ties stay canonical.
    {
      const auto adj0 = build_adjacency(masks, constraint);
      std::vector<int> order(static_cast<std::size_t>(m));
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adj0[static_cast<std::size_t>(a)].size() > adj0[static_cast<std::size_t>(b)].size();
      });
      std::vector<std::uint64_t> permuted;
      permuted.reserve(masks.size());
      for (int idx : order) permuted.push_back(masks[static_cast<std::size_t>(idx)]);
      masks = std::move(permuted);
    }
    const auto adj = build_adjacency(masks, constraint);

    const int threads =
        options.parallel
            ? (options.threads > 0 ? options.threads
                                   : std::max(1u, std::thread::hardware_concurrency()))
            : 1;

    if (options.symmetry_breaking) {
      // One run per canonical prefix {1..t}: any valid family can be
      // relabeled so that a member of minimum cardinality t becomes that
      // prefix, so the best anchored clique over all t is the global best.
      const int t_hi = std::min(constraint.size_max(), n);
      for (int t = constraint.size_min(); t <= t_hi; ++t) {
        const std::uint64_t anchor_mask =
            (t == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << t) - 1);
        const auto it = std::find(masks.begin(), masks.end(), anchor_mask);
        if (it == masks.end()) continue;
        const int anchor = static_cast<int>(it - masks.begin());
        const std::vector<int> base{anchor};
        sh.offer(base, masks);
        if (sh.stop.load(std::memory_order_relaxed)) break;
        const auto tasks = make_root_tasks(adj[static_cast<std::size_t>(anchor)], adj, sh);
        run_tasks(tasks, base, adj, masks, sh, threads);
      }
    } else {
      SubsetBits all = SubsetBits::full(m);
      const auto tasks = make_root_tasks(all, adj, sh);
      run_tasks(tasks, {}, adj, masks, sh, threads);
    }
  }

  SearchResult result;
  result.max_size = sh.best_size.load();
  result.witness = masks_to_family(n, sh.best_masks);
  result.nodes_explored = sh.nodes.load();
  result.status = sh.budget_hit.load() ? SearchStatus::BudgetExhausted : SearchStatus::Exact;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  if (!validate_family(result.witness, constraint).valid)
    throw std::logic_error("max_family: internal error, witness fails validation");
  return result;
}

SearchResult brute_force_oracle(int n, const IntersectionConstraint& constraint) {
  const auto t0 = Clock::now();
  check_search_universe(n, "brute_force_oracle");
  const auto masks = enumerate_masks(n, constraint, kDefaultCandidateCap);
  if (masks.size() > kOracleCandidateCap)
    throw InstanceTooLarge("brute_force_oracle supports at most " +
                           std::to_string(kOracleCandidateCap) + " candidates, got " +
                           std::to_string(masks.size()));
  const int m = static_cast<int>(masks.size());
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (constraint.admits(std::popcount(masks[static_cast<std::size_t>(i)] &
                                          masks[static_cast<std::size_t>(j)]))) {
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }

  std::vector<int> best;
  std::vector<int> r;
  std::uint64_t nodes = 0;

  // Bron-Kerbosch with a max-degree pivot: every maximal clique is reported
  // exactly once; the maximum is the largest of them.
  auto bk = [&](auto&& self, std::uint64_t p, std::uint64_t x) -> void {
    ++nodes;
    if (p == 0 && x == 0) {
      if (r.size() > best.size()) best = r;
      return;
    }
    std::uint64_t px = p | x;
    int pivot = -1;
    int pivot_deg = -1;
    for (std::uint64_t w = px; w != 0; w &= w - 1) {
      const int u = std::countr_zero(w);
      const int deg = std::popcount(p & adj[static_cast<std::size_t>(u)]);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = u;
      }
    }
    std::uint64_t ext = p & ~adj[static_cast<std::size_t>(pivot)];
    for (std::uint64_t w = ext; w != 0; w &= w - 1) {
      const int v = std::countr_zero(w);
      const std::uint64_t bit = std::uint64_t{1} << v;
      r.push_back(v);
      self(self, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)]);
      r.pop_back();
      p &= ~bit;
      x |= bit;
    }
  };
  const std::uint64_t full =
      (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  if (m > 0) bk(bk, full, 0);

  SearchResult result;
  result.max_size = best.size();
  std::vector<std::uint64_t> best_masks;
  for (int v : best) best_masks.push_back(masks[static_cast<std::size_t>(v)]);
  result.witness = masks_to_family(n, std::move(best_masks));
  result.nodes_explored = nodes;
  result.status = SearchStatus::Exact;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  if (!validate_family(result.witness, constraint).valid)
    throw std::logic_error("brute_force_oracle: internal error, witness fails validation");
  return result;
}

std::vector<ScanRow> threshold_scan(int s, int k, int n_from, int n_to,
                                    const SearchOptions& options) {
  if (k < 2) throw std::invalid_argument("threshold_scan: k must be >= 2");
  if (s < k + 2) throw std::invalid_argument("threshold_scan: s must be >= k+2");
  if (n_from < 1 || n_from > n_to || n_to > kMaxSearchGroundSize)
    throw std::invalid_argument("threshold_scan: need 1 <= n_from <= n_to <= 64");

  std::vector<ScanRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    const auto constraint = IntersectionConstraint::interval(1, k, s, s);
    SearchOptions row_options = options;
    row_options.lower_bound_seed.reset();
    if (options.lower_bound_seed && options.lower_bound_seed->ground_size() == n &&
        validate_family(*options.lower_bound_seed, constraint).valid)
      row_options.lower_bound_seed = options.lower_bound_seed;
    const SearchResult res = max_family(n, constraint, row_options);
    const BoundReport bound = thm15_bound(n, s, k);
    ScanRow row;
    row.n = n;
    row.max_size = res.max_size;
    row.bound_floor = bound.floor;
    if (res.status != SearchStatus::Exact)
      row.bound_holds = BoundVerdict::Unknown;
    else
      row.bound_holds = (mpz_class(static_cast<unsigned long>(res.max_size)) <= bound.floor)
                            ? BoundVerdict::Holds
                            : BoundVerdict::Fails;
    row.status = res.status;
    row.nodes = res.nodes_explored;
    row.elapsed_ms = static_cast<std::uint64_t>(res.elapsed.count());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ifam
