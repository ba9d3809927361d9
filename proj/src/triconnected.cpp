#include "triconnected.hpp"

#include <algorithm>
#include <list>

#include "big_stack.hpp"

namespace lpt::detail {

namespace {

enum class EType : unsigned char { Unseen, Tree, Frond, Removed };

using Iter = std::list<int>::iterator;

class PathSearch {
 public:
  PathSearch(int n, const std::vector<std::pair<int, int>>& input) : n_(n) {
    m_ = static_cast<int>(input.size());
    for (auto [a, b] : input) new_edge(a, b);
    for (auto& t : type_) t = EType::Unseen;
    incident_.resize(n_);
    for (int e = 0; e < m_; ++e) {
      incident_[src_[e]].push_back(e);
      incident_[tgt_[e]].push_back(e);
    }
  }

  TriconnectedResult run() {
    number_.assign(n_, 0);
    lowpt1_.assign(n_, 0);
    lowpt2_.assign(n_, 0);
    father_.assign(n_, -1);
    nd_.assign(n_, 0);
    degree_.assign(n_, 0);
    tree_arc_.assign(n_, -1);
    nodeat_.assign(n_ + 1, -1);
    count_ = 0;
    dfs1(start_, -1);

    for (int e = 0; e < m_; ++e) {
      bool up = number_[tgt_[e]] - number_[src_[e]] > 0;
      if ((up && type_[e] == EType::Frond) || (!up && type_[e] == EType::Tree)) std::swap(src_[e], tgt_[e]);
    }

    adj_.assign(n_, {});
    build_acceptable_adjacency();
    dfs2();

    int cap = 4 * m_ + 8;
    th_.assign(cap, 0);
    ta_.assign(cap, 0);
    tb_.assign(cap, 0);
    ta_[top_ = 0] = -1;

    path_search(start_);

    SplitComponent last{CompType::Polygon, {}};
    while (!estack_.empty()) {
      last.edges.push_back(estack_.back());
      estack_.pop_back();
    }
    last.type = last.edges.size() > 4 ? CompType::Triconnected : CompType::Polygon;
    comps_.push_back(std::move(last));

    return assemble();
  }

 private:
  int new_edge(int a, int b) {
    src_.push_back(a);
    tgt_.push_back(b);
    type_.push_back(EType::Unseen);
    in_adj_.emplace_back();
    has_in_adj_.push_back(0);
    in_high_.emplace_back();
    has_in_high_.push_back(0);
    start_flag_.push_back(0);
    return static_cast<int>(src_.size()) - 1;
  }

  int other(int e, int v) const { return src_[e] == v ? tgt_[e] : src_[e]; }

  void dfs1(int v, int u) {
    number_[v] = ++count_;
    father_[v] = u;
    degree_[v] = static_cast<int>(incident_[v].size());
    lowpt1_[v] = lowpt2_[v] = number_[v];
    nd_[v] = 1;
    for (int e : incident_[v]) {
      if (type_[e] != EType::Unseen) continue;
      int w = other(e, v);
      if (number_[w] == 0) {
        type_[e] = EType::Tree;
        tree_arc_[w] = e;
        dfs1(w, v);
        if (lowpt1_[w] < lowpt1_[v]) {
          lowpt2_[v] = std::min(lowpt1_[v], lowpt2_[w]);
          lowpt1_[v] = lowpt1_[w];
        } else if (lowpt1_[w] == lowpt1_[v]) {
          lowpt2_[v] = std::min(lowpt2_[v], lowpt2_[w]);
        } else {
          lowpt2_[v] = std::min(lowpt2_[v], lowpt1_[w]);
        }
        nd_[v] += nd_[w];
      } else {
        type_[e] = EType::Frond;
        if (number_[w] < lowpt1_[v]) {
          lowpt2_[v] = lowpt1_[v];
          lowpt1_[v] = number_[w];
        } else if (number_[w] > lowpt1_[v]) {
          lowpt2_[v] = std::min(lowpt2_[v], number_[w]);
        }
      }
    }
  }

  void build_acceptable_adjacency() {
    int max = 3 * n_ + 2;
    std::vector<std::vector<int>> bucket(max + 1);
    for (int e = 0; e < m_; ++e) {
      if (type_[e] == EType::Removed) continue;
      int w = tgt_[e];
      int phi = type_[e] == EType::Frond ? 3 * number_[w] + 1
                : lowpt2_[w] < number_[src_[e]] ? 3 * lowpt1_[w]
                                                : 3 * lowpt1_[w] + 2;
      bucket[phi].push_back(e);
    }
    for (int i = 1; i <= max; ++i)
      for (int e : bucket[i]) set_adj(e, adj_[src_[e]].insert(adj_[src_[e]].end(), e));
  }

  void set_adj(int e, Iter it) {
    in_adj_[e] = it;
    has_in_adj_[e] = 1;
  }

  void replace_at(Iter it, int e) {
    has_in_adj_[*it] = 0;
    *it = e;
    set_adj(e, it);
  }

  void path_finder(int v) {
    newnum_[v] = count_ - nd_[v] + 1;
    for (int e : adj_[v]) {
      int w = tgt_[e];
      if (new_path_) {
        new_path_ = false;
        start_flag_[e] = 1;
      }
      if (type_[e] == EType::Tree) {
        path_finder(w);
        --count_;
      } else {
        in_high_[e] = highpt_[w].insert(highpt_[w].end(), newnum_[v]);
        has_in_high_[e] = 1;
        new_path_ = true;
      }
    }
  }

  void dfs2() {
    newnum_.assign(n_, 0);
    highpt_.assign(n_, {});
    count_ = n_;
    new_path_ = true;
    path_finder(start_);
    std::vector<int> old2new(n_ + 1);
    for (int v = 0; v < n_; ++v) old2new[number_[v]] = newnum_[v];
    for (int v = 0; v < n_; ++v) {
      nodeat_[newnum_[v]] = v;
      lowpt1_[v] = old2new[lowpt1_[v]];
      lowpt2_[v] = old2new[lowpt2_[v]];
    }
  }

  int high(int v) const { return highpt_[v].empty() ? 0 : highpt_[v].front(); }

  void del_high(int e) {
    if (!has_in_high_[e]) return;
    highpt_[tgt_[e]].erase(in_high_[e]);
    has_in_high_[e] = 0;
  }

  void del_adj(int e) {
    if (!has_in_adj_[e]) return;
    adj_[src_[e]].erase(in_adj_[e]);
    has_in_adj_[e] = 0;
  }

  void tpush(int h, int a, int b) {
    if (top_ + 2 >= static_cast<int>(ta_.size())) {
      th_.resize(2 * ta_.size());
      tb_.resize(2 * ta_.size());
      ta_.resize(2 * ta_.size());
    }
    ++top_;
    th_[top_] = h;
    ta_[top_] = a;
    tb_[top_] = b;
  }
  void tpush_eos() { tpush(0, -1, 0); }
  bool not_eos() const { return ta_[top_] != -1; }

  SplitComponent& new_comp(CompType t = CompType::Polygon) {
    comps_.push_back({t, {}});
    return comps_.back();
  }
  static void finish_tric_or_poly(SplitComponent& c, int e) {
    c.edges.push_back(e);
    c.type = c.edges.size() >= 4 ? CompType::Triconnected : CompType::Polygon;
  }

  int pop_estack() {
    int e = estack_.back();
    estack_.pop_back();
    return e;
  }

  void path_search(int v) {
    int vnum = newnum_[v];
    std::list<int>& adj = adj_[v];
    int outv = static_cast<int>(adj.size());

    for (Iter it = adj.begin(), next; it != adj.end(); it = next) {
      next = std::next(it);
      int e = *it;
      int w = tgt_[e];
      int wnum = newnum_[w];

      if (type_[e] == EType::Tree) {
        if (start_flag_[e]) {
          int y = 0, b = 0;
          if (ta_[top_] > lowpt1_[w]) {
            do {
              y = std::max(y, th_[top_]);
              b = tb_[top_--];
            } while (ta_[top_] > lowpt1_[w]);
            tpush(y, lowpt1_[w], b);
          } else {
            tpush(wnum + nd_[w] - 1, lowpt1_[w], vnum);
          }
          tpush_eos();
        }

        path_search(w);

        estack_.push_back(tree_arc_[w]);

        while (vnum != 1 && (ta_[top_] == vnum || (degree_[w] == 2 && newnum_[tgt_[adj_[w].front()]] > wnum))) {
          int a = ta_[top_];
          int b = tb_[top_];
          int x = -1;
          int e_virt = -1;

          if (a == vnum && father_[nodeat_[b]] == nodeat_[a]) {
            --top_;
            continue;
          }
          int e_ab = -1;
          if (degree_[w] == 2 && newnum_[tgt_[adj_[w].front()]] > wnum) {
            int e1 = pop_estack();
            int e2 = pop_estack();
            del_adj(e2);
            x = tgt_[e2];
            e_virt = new_edge(v, x);
            --degree_[x];
            --degree_[v];
            SplitComponent& c = new_comp(CompType::Polygon);
            c.edges = {e1, e2, e_virt};
            if (!estack_.empty()) {
              int top = estack_.back();
              if (src_[top] == x && tgt_[top] == v) {
                e_ab = pop_estack();
                del_adj(e_ab);
                del_high(e_ab);
              }
            }
          } else {
            int h = th_[top_--];
            SplitComponent comp{CompType::Polygon, {}};
            while (!estack_.empty()) {
              int xy = estack_.back();
              int sx = newnum_[src_[xy]], sy = newnum_[tgt_[xy]];
              if (!(a <= sx && sx <= h && a <= sy && sy <= h)) break;
              if ((sx == a && sy == b) || (sy == a && sx == b)) {
                e_ab = pop_estack();
                del_adj(e_ab);
                del_high(e_ab);
              } else {
                int eh = pop_estack();
                if (!(has_in_adj_[eh] && in_adj_[eh] == it)) {
                  del_adj(eh);
                  del_high(eh);
                }
                comp.edges.push_back(eh);
                --degree_[src_[xy]];
                --degree_[tgt_[xy]];
              }
            }
            e_virt = new_edge(nodeat_[a], nodeat_[b]);
            finish_tric_or_poly(comp, e_virt);
            comps_.push_back(std::move(comp));
            x = nodeat_[b];
          }

          if (e_ab >= 0) {
            SplitComponent bond{CompType::Bond, {e_ab, e_virt}};
            e_virt = new_edge(v, x);
            bond.edges.push_back(e_virt);
            comps_.push_back(std::move(bond));
            --degree_[x];
            --degree_[v];
          }

          estack_.push_back(e_virt);
          replace_at(it, e_virt);
          ++degree_[x];
          ++degree_[v];
          father_[x] = v;
          tree_arc_[x] = e_virt;
          type_[e_virt] = EType::Tree;
          w = x;
          wnum = newnum_[w];
        }

        if (lowpt2_[w] >= vnum && lowpt1_[w] < vnum && (father_[v] != start_ || outv >= 2)) {
          SplitComponent comp{CompType::Polygon, {}};
          int x = 0, y = 0;
          while (!estack_.empty()) {
            int xy = estack_.back();
            x = newnum_[src_[xy]];
            y = newnum_[tgt_[xy]];
            if (!((wnum <= x && x < wnum + nd_[w]) || (wnum <= y && y < wnum + nd_[w]))) break;
            comp.edges.push_back(pop_estack());
            del_high(xy);
            --degree_[nodeat_[x]];
            --degree_[nodeat_[y]];
          }
          int low = nodeat_[lowpt1_[w]];
          int e_virt = new_edge(v, low);
          finish_tric_or_poly(comp, e_virt);
          comps_.push_back(std::move(comp));

          if ((x == vnum && y == lowpt1_[w]) || (y == vnum && x == lowpt1_[w])) {
            int eh = pop_estack();
            if (!(has_in_adj_[eh] && in_adj_[eh] == it)) del_adj(eh);
            SplitComponent bond{CompType::Bond, {eh, e_virt}};
            e_virt = new_edge(v, low);
            bond.edges.push_back(e_virt);
            comps_.push_back(std::move(bond));
            in_high_[e_virt] = in_high_[eh];
            has_in_high_[e_virt] = has_in_high_[eh];
            --degree_[v];
            --degree_[low];
          }

          if (low != father_[v]) {
            estack_.push_back(e_virt);
            replace_at(it, e_virt);
            if (!has_in_high_[e_virt] && high(low) < vnum) {
              highpt_[low].push_front(vnum);
              in_high_[e_virt] = highpt_[low].begin();
              has_in_high_[e_virt] = 1;
            }
            ++degree_[v];
            ++degree_[low];
          } else {
            has_in_adj_[*it] = 0;
            adj.erase(it);
            SplitComponent bond{CompType::Bond, {e_virt}};
            e_virt = new_edge(low, v);
            bond.edges.push_back(e_virt);
            int eh = tree_arc_[v];
            bond.edges.push_back(eh);
            comps_.push_back(std::move(bond));
            tree_arc_[v] = e_virt;
            type_[e_virt] = EType::Tree;
            in_adj_[e_virt] = in_adj_[eh];
            has_in_adj_[e_virt] = has_in_adj_[eh];
            has_in_adj_[eh] = 0;
            *in_adj_[e_virt] = e_virt;
          }
        }

        if (start_flag_[e]) {
          while (not_eos()) --top_;
          --top_;
        }
        while (not_eos() && tb_[top_] != vnum && high(v) > th_[top_]) --top_;
        --outv;
      } else {
        if (start_flag_[e]) {
          int y = 0, b = 0;
          if (ta_[top_] > wnum) {
            do {
              y = std::max(y, th_[top_]);
              b = tb_[top_--];
            } while (ta_[top_] > wnum);
            tpush(y, wnum, b);
          } else {
            tpush(vnum, wnum, vnum);
          }
        }
        estack_.push_back(e);
      }
    }
  }

  TriconnectedResult assemble() {
    int total = static_cast<int>(src_.size());
    int k = static_cast<int>(comps_.size());
    std::vector<std::list<int>> lists(k);
    std::vector<int> comp1(total, -1), comp2(total, -1);
    std::vector<Iter> item1(total), item2(total);
    for (int i = 0; i < k; ++i) {
      for (int e : comps_[i].edges) {
        Iter it = lists[i].insert(lists[i].end(), e);
        if (comp1[e] < 0) {
          comp1[e] = i;
          item1[e] = it;
        } else {
          comp2[e] = i;
          item2[e] = it;
        }
      }
    }
    std::vector<char> visited(k, 0);
    for (int i = 0; i < k; ++i) {
      visited[i] = 1;
      std::list<int>& l1 = lists[i];
      if (l1.empty()) continue;
      CompType t1 = comps_[i].type;
      if (t1 != CompType::Polygon && t1 != CompType::Bond) continue;
      for (Iter it = l1.begin(), next; it != l1.end(); it = next) {
        next = std::next(it);
        int e = *it;
        if (e < m_) continue;
        int j = comp1[e];
        Iter it2;
        if (visited[j]) {
          j = comp2[e];
          if (j < 0 || visited[j]) continue;
          it2 = item2[e];
        } else {
          it2 = item1[e];
        }
        if (comps_[j].type != t1) continue;
        visited[j] = 1;
        std::list<int>& l2 = lists[j];
        l2.erase(it2);
        l1.splice(l1.end(), l2);
        if (next == l1.end()) next = std::next(it);
        l1.erase(it);
      }
    }
    TriconnectedResult out;
    out.real_edges = m_;
    out.endpoints.resize(total);
    for (int e = 0; e < total; ++e) out.endpoints[e] = {src_[e], tgt_[e]};
    for (int i = 0; i < k; ++i) {
      if (lists[i].empty()) continue;
      out.components.push_back({comps_[i].type, std::vector<int>(lists[i].begin(), lists[i].end())});
    }
    return out;
  }

  int n_, m_ = 0;
  int start_ = 0;
  std::vector<int> src_, tgt_;
  std::vector<EType> type_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> number_, lowpt1_, lowpt2_, father_, nd_, degree_, tree_arc_, nodeat_, newnum_;
  std::vector<std::list<int>> adj_;
  std::vector<Iter> in_adj_;
  std::vector<char> has_in_adj_;
  std::vector<std::list<int>> highpt_;
  std::vector<Iter> in_high_;
  std::vector<char> has_in_high_;
  std::vector<char> start_flag_;
  std::vector<int> estack_;
  std::vector<int> th_, ta_, tb_;
  int top_ = 0;
  int count_ = 0;
  bool new_path_ = true;
  std::vector<SplitComponent> comps_;
};

}  // namespace

TriconnectedResult triconnected_components(int n, const std::vector<std::pair<int, int>>& edges) {
  TriconnectedResult result;
  with_large_stack([&] {
    PathSearch search(n, edges);
    result = search.run();
  });
  return result;
}

}  // namespace lpt::detail
