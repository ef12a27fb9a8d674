#include "spexlab/planarity.hpp"

#include <algorithm>
#include <cassert>

namespace spexlab {

namespace {

// Left-right planarity test (Brandes' formulation of de Fraysseix--Rosenstiehl).
// Only the orientation and testing phases are run; no embedding is produced.
class LeftRightTest {
 public:
  explicit LeftRightTest(const Graph& g) : g_(g), n_(g.order()) {
    auto edge_list = g.edges();
    m_ = static_cast<int>(edge_list.size());
    to_.resize(2 * m_);
    adj_.resize(n_);
    for (int k = 0; k < m_; ++k) {
      auto [u, v] = edge_list[k];
      to_[2 * k] = v;
      to_[2 * k + 1] = u;
      adj_[u].push_back(2 * k);
      adj_[v].push_back(2 * k + 1);
    }
    oriented_.assign(m_, false);
    lowpt_.assign(2 * m_, 0);
    lowpt2_.assign(2 * m_, 0);
    nesting_depth_.assign(2 * m_, 0);
    ref_.assign(2 * m_, kNone);
    side_.assign(2 * m_, 1);
    lowpt_edge_.assign(2 * m_, kNone);
    stack_bottom_.assign(2 * m_, 0);
    height_.assign(n_, kNone);
    parent_edge_.assign(n_, kNone);
    out_edges_.resize(n_);
  }

  bool run() {
    if (n_ > 2 && m_ > 3 * n_ - 6) return false;
    for (int v = 0; v < n_; ++v)
      if (height_[v] == kNone) {
        height_[v] = 0;
        dfs_orientation(v);
      }
    for (int v = 0; v < n_; ++v)
      std::stable_sort(out_edges_[v].begin(), out_edges_[v].end(),
                       [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
    for (int v = 0; v < n_; ++v)
      if (parent_edge_[v] == kNone)
        if (!dfs_testing(v)) return false;
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
  };

  void dfs_orientation(int v) {
    int e = parent_edge_[v];
    for (int vw : adj_[v]) {
      if (oriented_[vw >> 1]) continue;
      oriented_[vw >> 1] = true;
      out_edges_[v].push_back(vw);
      int w = to_[vw];
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == kNone) {  // tree edge
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        dfs_orientation(w);
      } else {  // back edge
        lowpt_[vw] = height_[w];
      }
      nesting_depth_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) ++nesting_depth_[vw];  // chordal
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool dfs_testing(int v) {
    int e = parent_edge_[v];
    for (int ei : out_edges_[v]) {
      stack_bottom_[ei] = static_cast<int>(stack_.size());
      int w = to_[ei];
      if (ei == parent_edge_[w]) {  // tree edge
        if (!dfs_testing(w)) return false;
      } else {  // back edge
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {  // ei has a return edge
        if (ei == out_edges_[v].front()) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // merge return edges of ei into p.right
    do {
      assert(!stack_.empty());
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;  // not planar
      if (lowpt_[q.right.low] > lowpt_[e]) {  // merge intervals
        if (p.right.empty())
          p.right.high = q.right.high;
        else
          ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {  // align
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (static_cast<int>(stack_.size()) != stack_bottom_[ei]);
    // merge conflicting return edges of previous siblings into p.left
    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;  // not planar
      // merge interval below lowpt(ei) into p.right
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty())
        p.left.high = q.left.high;
      else
        ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    int u = to_[e ^ 1];  // source of e is the target of its twin
    // drop entire conflict pairs whose lowest return point is u
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != kNone) side_[p.left.low] = -1;
    }
    if (!stack_.empty()) {  // one more conflict pair to consider
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && to_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {  // just emptied
        ref_[p.left.low] = p.right.low;
        side_[p.left.low] = -1;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && to_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        side_[p.right.low] = -1;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    // side of e is the side of a highest return edge
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      int hl = stack_.back().left.high;
      int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
        ref_[e] = hl;
      else
        ref_[e] = hr;
    }
  }

  const Graph& g_;
  int n_;
  int m_;
  std::vector<int> to_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> oriented_;
  std::vector<int> lowpt_, lowpt2_, nesting_depth_, ref_, lowpt_edge_, stack_bottom_;
  std::vector<signed char> side_;
  std::vector<int> height_, parent_edge_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<ConflictPair> stack_;
};

}  // namespace

bool is_planar(const Graph& g) {
  if (g.order() <= 4) return true;
  return LeftRightTest(g).run();
}

KuratowskiWitness kuratowski_witness(const Graph& g) {
  if (is_planar(g)) throw std::invalid_argument("graph is planar, no Kuratowski witness");
  Graph h = g;
  // Delete edges while non-planarity persists; the edge-minimal remainder is
  // a subdivision of K_5 or K_{3,3} by Kuratowski's theorem.
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (auto [u, v] : h.edges()) {
      h.remove_edge(u, v);
      if (is_planar(h)) {
        h.add_edge(u, v);
      } else {
        shrunk = true;
      }
    }
  }
  int branch3 = 0, branch4 = 0;
  for (int u = 0; u < h.order(); ++u) {
    int d = h.degree(u);
    if (d == 3) ++branch3;
    if (d == 4) ++branch4;
  }
  KuratowskiWitness w;
  w.kind = branch4 == 5 ? KuratowskiWitness::Kind::K5 : KuratowskiWitness::Kind::K33;
  if (w.kind == KuratowskiWitness::Kind::K33 && branch3 != 6)
    throw std::logic_error("edge-minimal reduction did not yield a Kuratowski subdivision");
  w.edges = h.edges();
  return w;
}

}  // namespace spexlab
