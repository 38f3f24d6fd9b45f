#ifndef GPH_UNION_FIND_HPP
#define GPH_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace gph {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int p) {
    int root = p;
    while (root != parent_[root]) root = parent_[root];
    while (p != root) {
      int next = parent_[p];
      parent_[p] = root;
      p = next;
    }
    return root;
  }

  // Returns true when the two sets were distinct.
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool connected(int a, int b) { return find(a) == find(b); }
  int element_count() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace gph

#endif  // GPH_UNION_FIND_HPP
