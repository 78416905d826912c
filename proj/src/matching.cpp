#include "matching.hpp"

#include <queue>

namespace magic::detail {

namespace {

class Blossom {
 public:
  Blossom(int n, const std::vector<std::pair<int, int>>& edges)
      : n_(n), adj_(n), mate_(n, -1), parent_(n), base_(n), used_(n), in_blossom_(n) {
    for (const auto& [a, b] : edges) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }

  std::vector<int> run() {
    // Greedy start, then augment from every free vertex.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int next = mate_[pv];
        mate_[u] = pv;
        mate_[pv] = u;
        u = next;
      }
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges) {
  return Blossom(n, edges).run();
}

}  // namespace magic::detail
