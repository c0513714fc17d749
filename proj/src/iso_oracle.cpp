#include "sandwich/iso_oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace sandwich {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct ElementStats {
  std::vector<int> left_image_size;
  std::vector<int> right_image_size;
  std::vector<char> idempotent;
  std::vector<int> row_fiber_size;
};

ElementStats element_stats(const CayleyTable& t) {
  int n = t.size();
  ElementStats st;
  st.left_image_size.resize(n);
  st.right_image_size.resize(n, 0);
  st.idempotent.resize(n);
  st.row_fiber_size.resize(n);

  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    int distinct = 0;
    for (int y = 0; y < n; ++y) {
      int p = t.product(x, y);
      distinct += !seen[p];
      seen[p] = 1;
    }
    st.left_image_size[x] = distinct;
    st.idempotent[x] = t.product(x, x) == x;
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    int distinct = 0;
    for (int x = 0; x < n; ++x) {
      int p = t.product(x, y);
      distinct += !seen[p];
      seen[p] = 1;
    }
    st.right_image_size[y] = distinct;
  }

  // fibers of x -> row of x
  std::map<std::vector<std::int32_t>, std::vector<int>> fibers;
  std::vector<std::int32_t> row(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) row[y] = t.product(x, y);
    fibers[row].push_back(x);
  }
  for (const auto& [_, members] : fibers)
    for (int x : members) st.row_fiber_size[x] = static_cast<int>(members.size());
  return st;
}

// iterated invariant coloring of the elements: the signature of x combines
// its color with the multiset of (color(y), color(xy), color(yx)) over y
std::vector<std::uint64_t> refine_colors(const CayleyTable& t, const ElementStats& st, int rounds) {
  int n = t.size();
  std::vector<std::uint64_t> color(n);
  for (int x = 0; x < n; ++x) {
    std::uint64_t c = 1469598103934665603ULL;
    c = mix(c, st.left_image_size[x]);
    c = mix(c, st.right_image_size[x]);
    c = mix(c, st.idempotent[x]);
    c = mix(c, st.row_fiber_size[x]);
    color[x] = c;
  }
  std::vector<std::uint64_t> sig(n);
  std::vector<std::uint64_t> neighborhood(n);
  for (int r = 0; r < rounds; ++r) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::uint64_t h = 0x100000001b3ULL;
        h = mix(h, color[y]);
        h = mix(h, color[t.product(x, y)]);
        h = mix(h, color[t.product(y, x)]);
        neighborhood[y] = h;
      }
      std::sort(neighborhood.begin(), neighborhood.end());
      std::uint64_t s = color[x];
      for (auto h : neighborhood) s = mix(s, h);
      sig[x] = s;
    }
    if (sig == color) break;
    color = sig;
  }
  return color;
}

struct Search {
  const CayleyTable& s;
  const CayleyTable& t;
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> scolor, tcolor;
  std::vector<std::vector<int>> candidates;  // per source: matching targets ascending
  std::vector<int> order;                    // assignment order, rarest class first
  std::vector<int> h, hinv;                  // -1 = unassigned
  std::vector<int> trail;                    // assigned sources, in assignment order

  enum class Step { ok, conflict, budget };

  bool raw_assign(int x, int y) {
    if (h[x] != -1) return h[x] == y;
    if (hinv[y] != -1) return false;
    if (scolor[x] != tcolor[y]) return false;
    h[x] = y;
    hinv[y] = x;
    trail.push_back(x);
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      hinv[h[x]] = -1;
      h[x] = -1;
    }
  }

  // assign x -> y, then close under h(uv) = h(u)h(v) over all assigned pairs
  Step assign_and_close(int x, int y) {
    size_t mark = trail.size();
    if (!raw_assign(x, y)) return Step::conflict;
    for (size_t qi = mark; qi < trail.size(); ++qi) {
      int u = trail[qi];
      for (size_t vj = 0; vj < trail.size(); ++vj) {
        int v = trail[vj];
        if (!raw_assign(s.product(u, v), t.product(h[u], h[v])) ||
            !raw_assign(s.product(v, u), t.product(h[v], h[u]))) {
          undo(mark);
          return Step::conflict;
        }
      }
    }
    return Step::ok;
  }

  Step dfs(size_t pos) {
    while (pos < order.size() && h[order[pos]] != -1) ++pos;
    if (pos == order.size()) {
      return verify_isomorphism(s, t, h) ? Step::ok : Step::conflict;
    }
    int x = order[pos];
    // the self-candidate first: identical tables then resolve immediately
    const auto& cands = candidates[x];
    auto try_one = [&](int y) -> Step {
      if (hinv[y] != -1) return Step::conflict;
      if (++nodes > budget) return Step::budget;
      size_t mark = trail.size();
      if (assign_and_close(x, y) == Step::ok) {
        Step r = dfs(pos + 1);
        if (r != Step::conflict) return r;
        undo(mark);
      }
      return Step::conflict;
    };
    if (x < static_cast<int>(candidates.size()) &&
        std::binary_search(cands.begin(), cands.end(), x)) {
      Step r = try_one(x);
      if (r != Step::conflict) return r;
    }
    for (int y : cands) {
      if (y == x) continue;  // already tried
      Step r = try_one(y);
      if (r != Step::conflict) return r;
    }
    return Step::conflict;
  }
};

}  // namespace

Fingerprint fingerprint(const CayleyTable& t) {
  auto st = element_stats(t);
  Fingerprint fp;
  fp.element_count = t.size();
  fp.idempotent_count = static_cast<int>(std::count(st.idempotent.begin(), st.idempotent.end(), 1));
  for (int x = 0; x < t.size(); ++x)
    fp.translation_profile.emplace_back(st.left_image_size[x], st.right_image_size[x],
                                        st.idempotent[x] != 0);
  std::sort(fp.translation_profile.begin(), fp.translation_profile.end());

  std::map<int, int> fiber_histogram;  // fiber size -> number of elements in such fibers
  for (int x = 0; x < t.size(); ++x) ++fiber_histogram[st.row_fiber_size[x]];
  for (auto [size, elements] : fiber_histogram)
    for (int c = 0; c < elements / size; ++c) fp.row_fiber_sizes.push_back(size);
  return fp;
}

bool verify_isomorphism(const CayleyTable& s, const CayleyTable& t, const std::vector<int>& mapping) {
  int n = s.size();
  if (t.size() != n || static_cast<int>(mapping.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int y : mapping) {
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mapping[s.product(x, y)] != t.product(mapping[x], mapping[y])) return false;
  return true;
}

CayleyTable transpose(const CayleyTable& t) {
  int n = t.size();
  std::vector<std::int32_t> products(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) products[static_cast<size_t>(i) * n + j] = t.product(j, i);
  return CayleyTable(t.labels(), std::move(products));
}

IsoResult find_isomorphism(const CayleyTable& s, const CayleyTable& t, std::uint64_t node_budget) {
  IsoResult result;
  if (s.size() != t.size()) return result;
  if (!(fingerprint(s) == fingerprint(t))) return result;

  int n = s.size();
  auto sstats = element_stats(s);
  auto tstats = element_stats(t);
  auto scolor = refine_colors(s, sstats, 3);
  auto tcolor = refine_colors(t, tstats, 3);

  // the color multisets must match, else the tables are non-isomorphic
  {
    auto ssorted = scolor;
    auto tsorted = tcolor;
    std::sort(ssorted.begin(), ssorted.end());
    std::sort(tsorted.begin(), tsorted.end());
    if (ssorted != tsorted) return result;
  }

  std::unordered_map<std::uint64_t, std::vector<int>> targets_by_color;
  for (int y = 0; y < n; ++y) targets_by_color[tcolor[y]].push_back(y);

  Search search{s, t, n, node_budget, 0, std::move(scolor), std::move(tcolor), {}, {}, {}, {}, {}};
  search.candidates.resize(n);
  for (int x = 0; x < n; ++x) search.candidates[x] = targets_by_color[search.scolor[x]];
  search.order.resize(n);
  for (int x = 0; x < n; ++x) search.order[x] = x;
  std::stable_sort(search.order.begin(), search.order.end(), [&](int lhs, int rhs) {
    return search.candidates[lhs].size() < search.candidates[rhs].size();
  });
  search.h.assign(n, -1);
  search.hinv.assign(n, -1);

  Search::Step r = search.dfs(0);
  result.nodes = search.nodes;
  if (r == Search::Step::budget) {
    result.status = IsoStatus::budget_exceeded;
  } else if (r == Search::Step::ok) {
    result.status = IsoStatus::found;
    result.mapping = search.h;
  }
  return result;
}

}  // namespace sandwich
