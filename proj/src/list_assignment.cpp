#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "majcol/recolour.hpp"
#include "majcol/repair.hpp"

namespace majcol {

std::size_t ListAssignment::u_size() const {
  return static_cast<std::size_t>(
      std::count_if(lists.begin(), lists.end(), [](ColourList l) { return !l.empty(); }));
}

std::vector<Vertex> ListAssignment::listed_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < lists.size(); ++v)
    if (listed(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> ListAssignment::defective_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < lists.size(); ++v)
    if (defective(v)) out.push_back(v);
  return out;
}

DefectKindCounts count_defect_kinds(const ListAssignment& la) {
  DefectKindCounts k;
  for (auto f : la.defect_kind) {
    if (f & kDefectColour) ++k.colour;
    if (f & kDefectPath) ++k.path;
    if (f & kDefectCycle) ++k.cycle;
    if (f & kDefectDuplicate) ++k.duplicate;
  }
  return k;
}

namespace {

// gamma-critical test given v's out-colour tally.
bool critical_for(Colour gamma, Colour cv, const ColourCounts& counts, std::size_t deg) {
  return cv == gamma && counts[index_of(gamma)] == deg / 2;
}

}  // namespace

bool single_change_breaks(const Digraph& d, const Colouring3& c, Vertex u, Colour gamma, Vertex v) {
  if (!d.has_arc(v, u)) throw std::invalid_argument("single_change_breaks: u is not an out-neighbour of v");
  if (gamma == c[u]) throw std::invalid_argument("single_change_breaks: gamma equals c(u)");
  return critical_for(gamma, c[v], out_colour_counts(d, c, v), d.out_degree(v));
}

namespace {

class ListProcess {
 public:
  ListProcess(const Digraph& d, const Colouring3& c, std::size_t ell) : d_(d), c_(c) {
    const std::size_t n = d.n();
    la_.ell = ell;
    la_.lists.assign(n, ColourList{});
    la_.pd.assign(n, 0);
    la_.defect_kind.assign(n, kDefectNone);
    counts_.resize(n);
    for (Vertex v = 0; v < n; ++v) counts_[v] = out_colour_counts(d, c, v);
    listed_out_.assign(n, 0);
  }

  ListAssignment run() {
    const std::size_t n = d_.n();
    for (Vertex v = 0; v < n; ++v)
      if (more_than_half(counts_[v][index_of(c_[v])], d_.out_degree(v))) {
        make_defective(v, kDefectColour);
        ++la_.actions;
      }

    for (;;) {
      if (!path_.empty()) {
        const Vertex v = pop(path_);
        if (!la_.defective(v) && la_.pd[v] == la_.ell + 1) {
          make_defective(v, kDefectPath);
          ++la_.actions;
        }
      } else if (!dup_.empty()) {
        const Vertex v = pop(dup_);
        if (!la_.defective(v)) {
          make_defective(v, kDefectDuplicate);
          ++la_.actions;
        }
      } else if (!pending_.empty()) {
        const Vertex x = pop(pending_);
        auto cycle = find_cycle_through(x);
        if (!cycle.empty()) {
          for (Vertex y : cycle) make_defective(y, kDefectCycle);
          ++la_.actions;
          pending_.insert(x);
        }
      } else if (!prop_.empty()) {
        const Vertex v = pop(prop_);
        if (la_.listed(v)) continue;
        propagate_to(v);
        ++la_.actions;
      } else {
        break;
      }
    }
    return std::move(la_);
  }

 private:
  static Vertex pop(std::set<Vertex>& s) {
    const Vertex v = *s.begin();
    s.erase(s.begin());
    return v;
  }

  // Some gamma in L(u) \ {c(u)} makes v lose majority status.
  bool breaks(Vertex u, Vertex v) const {
    for (Colour g : la_.lists[u].without(c_[u]).colours())
      if (critical_for(g, c_[v], counts_[v], d_.out_degree(v))) return true;
    return false;
  }

  void set_list(Vertex v, ColourList list) {
    const bool joined = !la_.listed(v);
    la_.lists[v] = list;
    if (joined) {
      pending_.insert(v);
      prop_.erase(v);
      for (Vertex w : d_.in(v))
        if (++listed_out_[w] >= 2 && !la_.defective(w)) dup_.insert(w);
    }
    for (Vertex w : d_.in(v))
      if (!la_.listed(w) && breaks(v, w)) prop_.insert(w);
  }

  void make_defective(Vertex v, std::uint8_t kind) {
    if (la_.defective(v)) return;
    la_.defect_kind[v] |= kind;
    la_.pd[v] = 0;
    dup_.erase(v);
    set_list(v, ColourList::all());
  }

  void propagate_to(Vertex v) {
    std::optional<Vertex> parent;
    for (Vertex u : d_.out(v))
      if (la_.listed(u) && breaks(u, v)) {
        parent = u;
        break;
      }
    if (!parent) throw std::logic_error("list process: propagation candidate without a parent");
    la_.pd[v] = la_.pd[*parent] + 1;
    set_list(v, ColourList::of(c_[v], next_colour(c_[v])));
    if (la_.pd[v] == la_.ell + 1) path_.insert(v);
  }

  // A directed cycle through x inside U with at most one defective vertex,
  // or empty. BFS over (vertex, defective vertices seen so far).
  std::vector<Vertex> find_cycle_through(Vertex x) const {
    auto key = [](Vertex v, unsigned k) { return (static_cast<std::uint64_t>(v) << 1) | k; };
    const unsigned k0 = la_.defective(x) ? 1u : 0u;
    std::unordered_map<std::uint64_t, std::uint64_t> parent;
    std::deque<std::uint64_t> queue;
    const std::uint64_t start = key(x, k0);
    parent[start] = start;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::uint64_t s = queue.front();
      queue.pop_front();
      const auto y = static_cast<Vertex>(s >> 1);
      const unsigned k = static_cast<unsigned>(s & 1);
      for (Vertex z : d_.out(y)) {
        if (!la_.listed(z)) continue;
        if (z == x) {
          std::vector<Vertex> walk;
          for (std::uint64_t cur = s;; cur = parent.at(cur)) {
            walk.push_back(static_cast<Vertex>(cur >> 1));
            if (cur == start) break;
          }
          std::reverse(walk.begin(), walk.end());
          return simple_cycle(walk);
        }
        const unsigned k2 = k + (la_.defective(z) ? 1u : 0u);
        if (k2 > 1) continue;
        const std::uint64_t t = key(z, k2);
        if (parent.emplace(t, s).second) queue.push_back(t);
      }
    }
    return {};
  }

  // Closed walk w0..wm (wm -> w0 implied) to a simple cycle.
  static std::vector<Vertex> simple_cycle(const std::vector<Vertex>& walk) {
    std::unordered_map<Vertex, std::size_t> seen;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      auto [it, fresh] = seen.emplace(walk[i], i);
      if (!fresh) return {walk.begin() + static_cast<std::ptrdiff_t>(it->second),
                          walk.begin() + static_cast<std::ptrdiff_t>(i)};
    }
    return walk;
  }

  const Digraph& d_;
  const Colouring3& c_;
  ListAssignment la_;
  std::vector<ColourCounts> counts_;
  std::vector<std::uint32_t> listed_out_;
  std::set<Vertex> path_, dup_, pending_, prop_;
};

}  // namespace

ListAssignment list_assignment_run(const Digraph& d, const Colouring3& c, std::size_t ell) {
  if (c.size() != d.n()) throw std::invalid_argument("colouring has wrong length");
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  return ListProcess(d, c, ell).run();
}

}  // namespace majcol
