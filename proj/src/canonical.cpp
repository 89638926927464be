#include "qspec/canonical.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>

namespace qspec {

namespace {

using Cells = std::vector<std::vector<int>>;

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {
    adj_.resize(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) adj_[static_cast<size_t>(v)] = g.neighbor_mask(v);
  }

  std::vector<int> run() {
    Cells cells(1);
    cells[0].resize(static_cast<size_t>(n_));
    std::iota(cells[0].begin(), cells[0].end(), 0);
    dfs(std::move(cells));
    std::vector<int> perm(static_cast<size_t>(n_));
    for (int pos = 0; pos < n_; ++pos)
      perm[static_cast<size_t>(best_labeling_[static_cast<size_t>(pos)])] = pos;
    return perm;  // perm[old] = new
  }

 private:
  // Split every cell by neighbor counts against all cells until stable.
  void refine(Cells& cells) const {
    bool changed = true;
    std::vector<uint64_t> masks;
    while (changed) {
      changed = false;
      masks.assign(cells.size(), 0);
      for (size_t i = 0; i < cells.size(); ++i)
        for (int v : cells[i]) masks[i] |= uint64_t{1} << v;
      for (size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].size() < 2) continue;
        auto sig = [&](int v) {
          std::vector<int> s(cells.size());
          for (size_t j = 0; j < cells.size(); ++j)
            s[j] = std::popcount(adj_[static_cast<size_t>(v)] & masks[j]);
          return s;
        };
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cells[ci].size());
        for (int v : cells[ci]) keyed.emplace_back(sig(v), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Cells groups;
        for (size_t k = 0; k < keyed.size(); ++k) {
          if (k == 0 || keyed[k].first != keyed[k - 1].first) groups.emplace_back();
          groups.back().push_back(keyed[k].second);
        }
        cells.erase(cells.begin() + static_cast<long>(ci));
        cells.insert(cells.begin() + static_cast<long>(ci),
                     std::make_move_iterator(groups.begin()),
                     std::make_move_iterator(groups.end()));
        changed = true;
        break;  // masks are stale; restart the sweep
      }
    }
  }

  std::string encode(const std::vector<int>& labeling) const {
    std::string bytes(1, static_cast<char>(n_));
    int acc = 0, nbits = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        acc = (acc << 1) | static_cast<int>((adj_[static_cast<size_t>(labeling[static_cast<size_t>(i)])] >>
                                             labeling[static_cast<size_t>(j)]) & 1u);
        if (++nbits == 8) {
          bytes.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    }
    if (nbits) bytes.push_back(static_cast<char>(acc << (8 - nbits)));
    return bytes;
  }

  void handle_leaf(const Cells& cells) {
    std::vector<int> labeling;
    labeling.reserve(static_cast<size_t>(n_));
    for (const auto& c : cells) labeling.push_back(c[0]);
    std::string bytes = encode(labeling);
    if (!have_best_ || bytes < best_) {
      best_ = std::move(bytes);
      best_labeling_ = std::move(labeling);
      have_best_ = true;
      return;
    }
    if (bytes != best_) return;
    // Equal encodings: labeling = sigma(best_labeling) for an automorphism.
    std::vector<int> sigma(static_cast<size_t>(n_));
    for (int pos = 0; pos < n_; ++pos)
      sigma[static_cast<size_t>(best_labeling_[static_cast<size_t>(pos)])] =
          labeling[static_cast<size_t>(pos)];
    generators_.push_back(sigma);
    // Backjump: find the shallowest node whose current child is equivalent
    // to an already-explored sibling under sigma.
    for (size_t d = 0; d < frames_.size(); ++d) {
      bool fixes_prefix = true;
      for (size_t i = 0; i < d; ++i) {
        int p = frames_[i].current;
        if (sigma[static_cast<size_t>(p)] != p) {
          fixes_prefix = false;
          break;
        }
      }
      if (!fixes_prefix) break;  // deeper prefixes contain this one
      int cur = frames_[d].current;
      for (int u : frames_[d].tried) {
        if (u != cur && (sigma[static_cast<size_t>(u)] == cur ||
                         sigma[static_cast<size_t>(cur)] == u)) {
          abort_depth_ = static_cast<int>(d);
          return;
        }
      }
    }
  }

  // Orbit partition of the generators fixing prefix[0..depth) pointwise.
  std::vector<int> prefix_orbits(size_t depth) const {
    std::vector<int> uf(static_cast<size_t>(n_));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[static_cast<size_t>(x)] != x) {
        uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
        x = uf[static_cast<size_t>(x)];
      }
      return x;
    };
    for (const auto& sigma : generators_) {
      bool fixes = true;
      for (size_t i = 0; i < depth; ++i) {
        int p = frames_[i].current;
        if (sigma[static_cast<size_t>(p)] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int w = 0; w < n_; ++w) {
        int a = find(w), b = find(sigma[static_cast<size_t>(w)]);
        if (a != b) uf[static_cast<size_t>(a)] = b;
      }
    }
    for (int w = 0; w < n_; ++w) uf[static_cast<size_t>(w)] = find(w);
    return uf;
  }

  void dfs(Cells cells) {
    if (++nodes_ > kNodeBudget)
      throw std::runtime_error("canonical_form: search budget exceeded");
    refine(cells);
    size_t target = cells.size();
    size_t target_size = SIZE_MAX;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && cells[i].size() < target_size) {
        target = i;
        target_size = cells[i].size();
      }
    }
    if (target == cells.size()) {
      handle_leaf(cells);
      return;
    }

    frames_.push_back({});
    size_t depth = frames_.size() - 1;
    std::vector<int> orbits;
    size_t orbit_gen_count = SIZE_MAX;  // force initial build
    for (int v : cells[target]) {
      if (orbit_gen_count != generators_.size()) {
        orbits = prefix_orbits(depth);
        orbit_gen_count = generators_.size();
      }
      bool skip = false;
      for (int u : frames_[depth].tried) {
        if (orbits[static_cast<size_t>(u)] == orbits[static_cast<size_t>(v)]) {
          skip = true;
          break;
        }
      }
      if (!skip) {
        Cells child = cells;
        std::vector<int> rest;
        for (int w : cells[target])
          if (w != v) rest.push_back(w);
        child[target] = {v};
        child.insert(child.begin() + static_cast<long>(target) + 1, std::move(rest));
        frames_[depth].current = v;
        dfs(std::move(child));
        if (abort_depth_ != INT_MAX) {
          if (abort_depth_ < static_cast<int>(depth)) {
            frames_.pop_back();
            return;  // unwind further
          }
          abort_depth_ = INT_MAX;  // this node was the backjump target
        }
      }
      frames_[depth].tried.push_back(v);
    }
    frames_.pop_back();
  }

  struct Frame {
    std::vector<int> tried;
    int current = -1;
  };

  static constexpr long long kNodeBudget = 50'000'000;

  const Graph& g_;
  int n_;
  std::vector<uint64_t> adj_;
  std::string best_;
  std::vector<int> best_labeling_;
  bool have_best_ = false;
  std::vector<std::vector<int>> generators_;
  std::vector<Frame> frames_;
  int abort_depth_ = INT_MAX;
  long long nodes_ = 0;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, int max_n) {
  if (g.order() > max_n)
    throw std::invalid_argument("canonical_labeling: order " +
                                std::to_string(g.order()) + " exceeds bound " +
                                std::to_string(max_n));
  return Searcher(g).run();
}

CanonicalForm canonical_form(const Graph& g, int max_n) {
  std::vector<int> perm = canonical_labeling(g, max_n);
  Graph h = g.relabeled(perm);
  std::string bytes(1, static_cast<char>(h.order()));
  int acc = 0, nbits = 0;
  int n = h.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = (acc << 1) | (h.has_edge(i, j) ? 1 : 0);
      if (++nbits == 8) {
        bytes.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) bytes.push_back(static_cast<char>(acc << (8 - nbits)));
  return {std::move(bytes)};
}

bool is_isomorphic(const Graph& a, const Graph& b, int max_n) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, max_n) == canonical_form(b, max_n);
}

}  // namespace qspec
