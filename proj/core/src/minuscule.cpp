#include "cayley/minuscule.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cayley {

WeightDiagram WeightDiagram::build(const RootSystem& rs, int minuscule_index) {
  WeightDiagram d(rs);
  const Weight highest = rs.fundamental_weight(minuscule_index);

  // Breadth-first closure. Every pairing of a minuscule weight with a simple
  // root lies in {-1, 0, 1}; anything else means the orbit is not a single
  // saturated chain structure and the Schubert interpretation fails.
  std::vector<Weight> found = {highest};
  std::unordered_map<Weight, std::size_t> seen = {{highest, 0}};
  std::vector<std::vector<Edge>> raw_down(1);
  std::deque<std::size_t> queue = {0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      const Rational p = inner(found[cur], rs.simple_root(i));
      if (sgn(p) <= 0) continue;
      if (p != 1) {
        throw DiagramError("weight " + found[cur].to_string() + " pairs to " + to_string(p) +
                           " with alpha_" + std::to_string(i) + ": representation is not minuscule");
      }
      Weight next = rs.reflect(i, found[cur]);
      auto [it, inserted] = seen.try_emplace(next, found.size());
      if (inserted) {
        found.push_back(next);
        raw_down.emplace_back();
        queue.push_back(it->second);
      }
      raw_down[cur].push_back({it->second, i});
    }
    if (found.size() > 100000) throw DiagramError("weight orbit does not close");
  }

  // Renumber by (length, weight) so ids are deterministic.
  const Rational top_height = rs.height(highest);
  std::vector<std::size_t> order(found.size());
  std::vector<int> lengths(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) {
    const Rational l = top_height - rs.height(found[k]);
    if (!is_integer(l)) throw DiagramError("non-integral length for " + found[k].to_string());
    lengths[k] = static_cast<int>(l.get_num().get_si());
    order[k] = k;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
    return found[b] < found[a];
  });
  std::vector<NodeId> new_id(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = k;

  d.nodes_.resize(found.size());
  for (std::size_t old = 0; old < found.size(); ++old) {
    DiagramNode& n = d.nodes_[new_id[old]];
    n.weight = found[old];
    n.length = lengths[old];
  }
  for (std::size_t old = 0; old < found.size(); ++old) {
    for (const Edge& e : raw_down[old]) {
      const NodeId from = new_id[old];
      const NodeId to = new_id[e.target];
      if (d.nodes_[to].length != d.nodes_[from].length + 1)
        throw DiagramError("edge does not raise length by one");
      d.nodes_[from].down.push_back({to, e.label});
      d.nodes_[to].up.push_back({from, e.label});
    }
  }
  for (auto& n : d.nodes_) {
    auto by_target = [](const Edge& a, const Edge& b) { return a.target < b.target; };
    std::sort(n.down.begin(), n.down.end(), by_target);
    std::sort(n.up.begin(), n.up.end(), by_target);
  }
  if (d.nodes_.size() > 1 && d.nodes_[d.bottom()].length == d.nodes_[d.bottom() - 1].length)
    throw DiagramError("diagram has no unique lowest weight");

  d.levels_.assign(static_cast<std::size_t>(d.max_length() + 1), {});
  d.index_in_level_.resize(d.size());
  for (NodeId id = 0; id < d.size(); ++id) {
    auto& lvl = d.levels_[static_cast<std::size_t>(d.nodes_[id].length)];
    d.index_in_level_[id] = lvl.size();
    lvl.push_back(id);
    d.by_weight_.emplace(d.nodes_[id].weight, id);
  }

  d.degree_.assign(d.size(), 0);
  for (NodeId id = d.size(); id-- > 0;) {
    if (id == d.bottom()) {
      d.degree_[id] = 1;
      continue;
    }
    for (const Edge& e : d.nodes_[id].down) d.degree_[id] += d.degree_[e.target];
  }

  d.dual_.resize(d.size());
  for (NodeId id = 0; id < d.size(); ++id) {
    const auto dual = d.find(rs.apply_longest(d.nodes_[id].weight));
    if (!dual) throw DiagramError("longest element does not preserve the weight set");
    d.dual_[id] = *dual;
  }

  d.names_.resize(d.size());
  for (NodeId id = 0; id < d.size(); ++id) d.names_[id] = d.dot_id(id);
  return d;
}

const std::vector<NodeId>& WeightDiagram::level(int length) const {
  return levels_.at(static_cast<std::size_t>(length));
}

std::vector<std::size_t> WeightDiagram::level_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.size());
  return out;
}

std::optional<NodeId> WeightDiagram::find(const Weight& w) const {
  const auto it = by_weight_.find(w);
  if (it == by_weight_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> WeightDiagram::reduced_word(NodeId id) const {
  std::vector<int> word;
  NodeId cur = id;
  while (cur != top()) {
    const Edge& e = nodes_.at(cur).up.front();
    word.push_back(e.label);
    cur = e.target;
  }
  return word;
}

std::vector<std::vector<int>> WeightDiagram::reduced_words(NodeId id, std::size_t cap) const {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  // Depth-first over upward chains.
  auto walk = [&](auto&& self, NodeId cur) -> void {
    if (out.size() >= cap) return;
    if (cur == top()) {
      out.push_back(word);
      return;
    }
    for (const Edge& e : nodes_[cur].up) {
      word.push_back(e.label);
      self(self, e.target);
      word.pop_back();
    }
  };
  walk(walk, id);
  return out;
}

std::uint64_t WeightDiagram::path_count(NodeId u, NodeId v) const {
  const int lu = length(u);
  const int lv = length(v);
  if (lv < lu) return 0;
  std::map<NodeId, std::uint64_t> frontier = {{u, 1}};
  for (int l = lu; l < lv; ++l) {
    std::map<NodeId, std::uint64_t> next;
    for (const auto& [id, count] : frontier)
      for (const Edge& e : nodes_[id].down) next[e.target] += count;
    frontier = std::move(next);
  }
  const auto it = frontier.find(v);
  return it == frontier.end() ? 0 : it->second;
}

std::optional<NodeId> WeightDiagram::find_name(std::string_view name) const {
  if (name == "h" && size() > 1 && names_[level(1).front()] == "s1") return level(1).front();
  for (NodeId id = 0; id < size(); ++id)
    if (names_[id] == name) return id;
  return std::nullopt;
}

std::string WeightDiagram::dot_id(NodeId id) const {
  return "w" + std::to_string(length(id)) + "_" + std::to_string(index_in_level(id));
}

void WeightDiagram::set_names(std::vector<std::string> names) {
  if (names.size() != size()) throw std::invalid_argument("set_names: wrong number of names");
  names_ = std::move(names);
}

namespace {

// Degrees of the primed classes read off the Hasse diagram, codim 4..8.
const std::map<int, std::map<std::uint64_t, std::string>>& primed_by_degree() {
  static const std::map<int, std::map<std::uint64_t, std::string>> table = {
      {4, {{33, "p"}, {45, "pp"}}},
      {5, {{33, "p"}, {12, "pp"}}},
      {6, {{21, "p"}, {12, "pp"}}},
      {7, {{9, "p"}, {12, "pp"}}},
      {8, {{2, ""}, {7, "p"}, {5, "pp"}}},
  };
  return table;
}

}  // namespace

WeightDiagram cayley_plane_diagram() {
  WeightDiagram d = WeightDiagram::build(build_e6(), 6);
  if (d.size() != 27 || d.max_length() != 16)
    throw DiagramError("unexpected shape for the E6/P6 diagram");

  std::vector<std::string> names(d.size());
  std::vector<std::string> suffix(d.size());
  for (NodeId id = 0; id < d.size(); ++id) {
    const int l = d.length(id);
    if (d.level(l).size() == 1) continue;
    if (l <= 8) {
      const auto& by_deg = primed_by_degree().at(l);
      const auto it = by_deg.find(d.degree(id));
      if (it == by_deg.end())
        throw DiagramError("no class of degree " + std::to_string(d.degree(id)) +
                           " in codimension " + std::to_string(l));
      suffix[id] = it->second;
    }
  }
  for (NodeId id = 0; id < d.size(); ++id) {
    const int l = d.length(id);
    if (l > 8 && d.level(l).size() > 1) suffix[id] = suffix[d.dual(id)];
    names[id] = "s" + std::to_string(l) + suffix[id];
  }
  d.set_names(std::move(names));
  return d;
}

WeightDiagram spinor_diagram() { return WeightDiagram::build(build_d5(), 5); }

}  // namespace cayley
