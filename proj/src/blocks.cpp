#include "primex/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace primex {

Partition::Partition(int degree_, std::vector<std::vector<int>> parts_)
  : degree(degree_), parts(std::move(parts_))
{
  if (degree < 1)
    fail(ErrorCode::Domain, "partition: degree must be positive");

  std::vector<bool> seen(degree, false);
  int covered = 0;
  for (auto &part : parts) {
    if (part.empty())
      fail(ErrorCode::Domain, "partition: empty part");
    std::sort(part.begin(), part.end());
    for (int p : part) {
      if (p < 0 || p >= degree || seen[p])
        fail(ErrorCode::Domain, "partition: parts must partition the point set");
      seen[p] = true;
      ++covered;
    }
  }
  if (covered != degree)
    fail(ErrorCode::Domain, "partition: parts must cover the point set");

  std::sort(parts.begin(), parts.end(),
            [](auto const &a, auto const &b) { return a.front() < b.front(); });
}

bool is_essential(Partition const &p)
{
  if (p.parts.size() < 2)
    return false;
  for (auto const &part : p.parts)
    if (part.size() > 1)
      return true;
  return false;
}

bool is_g_stable(PermutationGroup const &g, Partition const &p)
{
  if (g.degree() != p.degree)
    fail(ErrorCode::Domain, "is_g_stable: degree mismatch");

  std::set<std::vector<int>> parts(p.parts.begin(), p.parts.end());
  for (auto const &gen : g.generators())
    for (auto const &part : p.parts) {
      std::vector<int> image;
      image.reserve(part.size());
      for (int x : part)
        image.push_back(gen[x]);
      std::sort(image.begin(), image.end());
      if (!parts.count(image))
        return false;
    }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n)
  {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Merges the classes of x and y; returns false if already merged.
  bool unite(int x, int y)
  {
    x = find(x);
    y = find(y);
    if (x == y)
      return false;
    if (y < x)
      std::swap(x, y);
    parent[y] = x;
    return true;
  }
};

} // namespace

std::vector<int> minimal_block(PermutationGroup const &g, int a, int b)
{
  if (a < 0 || a >= g.degree() || b < 0 || b >= g.degree())
    fail(ErrorCode::Domain, "minimal_block: point out of range");
  if (a == b)
    fail(ErrorCode::Domain, "minimal_block: points must be distinct");
  if (!is_transitive(g))
    fail(ErrorCode::Precondition, "minimal_block: group is not transitive");

  // Saturate the pair (a, b) under the generators: whenever two points are
  // identified, their generator images must be identified as well.
  UnionFind uf(g.degree());
  std::vector<std::pair<int, int>> work;
  uf.unite(a, b);
  work.emplace_back(a, b);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (auto const &gen : g.generators()) {
      int u = uf.find(gen[x]);
      int v = uf.find(gen[y]);
      if (uf.unite(u, v))
        work.emplace_back(u, v);
    }
  }

  std::vector<int> block;
  int cls = uf.find(a);
  for (int p = 0; p < g.degree(); ++p)
    if (uf.find(p) == cls)
      block.push_back(p);
  return block;
}

Partition block_system(PermutationGroup const &g, std::vector<int> const &block)
{
  std::set<std::vector<int>> parts;
  std::vector<std::vector<int>> queue;

  std::vector<int> b = block;
  std::sort(b.begin(), b.end());
  parts.insert(b);
  queue.push_back(b);
  while (!queue.empty()) {
    std::vector<int> cur = queue.back();
    queue.pop_back();
    for (auto const &gen : g.generators()) {
      std::vector<int> image;
      image.reserve(cur.size());
      for (int x : cur)
        image.push_back(gen[x]);
      std::sort(image.begin(), image.end());
      if (parts.insert(image).second)
        queue.push_back(image);
    }
  }

  return Partition(g.degree(),
                   std::vector<std::vector<int>>(parts.begin(), parts.end()));
}

bool is_primitive(PermutationGroup const &g)
{
  if (g.degree() < 2)
    fail(ErrorCode::Domain, "is_primitive: degree must be at least 2");
  if (g.is_trivial())
    return false;
  if (!is_transitive(g))
    return false;
  for (int b = 1; b < g.degree(); ++b)
    if (static_cast<int>(minimal_block(g, 0, b).size()) != g.degree())
      return false;
  return true;
}

} // namespace primex
