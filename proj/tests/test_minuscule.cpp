#include "cayley/minuscule.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

using namespace cayley;

TEST_CASE("Cayley plane diagram shape") {
  WeightDiagram d = cayley_plane_diagram();
  CHECK(d.size() == 27);
  CHECK(d.max_length() == 16);
  std::vector<std::size_t> expected = {1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  CHECK(d.level_sizes() == expected);
  CHECK(d.node(d.top()).weight == d.root_system().fundamental_weight(6));
  CHECK(d.node(d.bottom()).weight == -d.root_system().fundamental_weight(1));
}

TEST_CASE("edges raise the length by one and follow reflections") {
  WeightDiagram d = cayley_plane_diagram();
  std::size_t edges = 0;
  for (NodeId id = 0; id < d.size(); ++id) {
    for (const Edge& e : d.node(id).down) {
      CHECK(d.length(e.target) == d.length(id) + 1);
      CHECK(d.root_system().reflect(e.label, d.node(id).weight) == d.node(e.target).weight);
      ++edges;
    }
  }
  std::size_t raising = 0;
  for (NodeId id = 0; id < d.size(); ++id)
    for (int i = 1; i <= 6; ++i)
      if (inner(d.node(id).weight, d.root_system().simple_root(i)) > 0) ++raising;
  CHECK(edges == raising);
}

TEST_CASE("degrees") {
  WeightDiagram d = cayley_plane_diagram();
  CHECK(d.degree(d.top()) == 78);
  CHECK(d.degree(*d.find_name("s4p")) == 33);
  CHECK(d.degree(*d.find_name("s4pp")) == 45);
  CHECK(d.degree(*d.find_name("s8")) == 2);
  CHECK(d.degree(*d.find_name("s8p")) == 7);
  CHECK(d.degree(*d.find_name("s8pp")) == 5);
  CHECK(d.degree(d.bottom()) == 1);
  std::vector<std::multiset<std::uint64_t>> by_level = {
      {78}, {78}, {78}, {78}, {33, 45}, {12, 33}, {12, 21}, {9, 12}, {2, 5, 7},
      {2, 5}, {2, 3}, {1, 2}, {1, 1}, {1}, {1}, {1}, {1}};
  for (int k = 0; k <= 16; ++k) {
    std::multiset<std::uint64_t> got;
    for (NodeId id : d.level(k)) got.insert(d.degree(id));
    CHECK(got == by_level[k]);
  }
}

TEST_CASE("degree equals the sum of the degrees one level down") {
  WeightDiagram d = cayley_plane_diagram();
  for (NodeId id = 0; id + 1 < d.size(); ++id) {
    std::uint64_t sum = 0;
    for (const Edge& e : d.node(id).down) sum += d.degree(e.target);
    CHECK(sum == d.degree(id));
  }
}

TEST_CASE("duality is an involution complementing lengths") {
  WeightDiagram d = cayley_plane_diagram();
  for (NodeId id = 0; id < d.size(); ++id) {
    CHECK(d.dual(d.dual(id)) == id);
    CHECK(d.length(d.dual(id)) == 16 - d.length(id));
  }
  CHECK(d.dual(d.top()) == d.bottom());
  for (const char* s : {"s8", "s8p", "s8pp"}) CHECK(d.dual(*d.find_name(s)) == *d.find_name(s));
  CHECK(d.name(d.dual(*d.find_name("s4p"))) == "s12p");
  CHECK(d.name(d.dual(*d.find_name("s7pp"))) == "s9pp");
}

TEST_CASE("names") {
  WeightDiagram d = cayley_plane_diagram();
  std::set<std::string> names(d.names().begin(), d.names().end());
  CHECK(names.size() == 27);
  CHECK(d.find_name("h") == d.find_name("s1"));
  CHECK_FALSE(d.find_name("s17").has_value());
  CHECK(d.name(d.top()) == "s0");
  CHECK(d.name(d.bottom()) == "s16");
  CHECK(d.dot_id(d.top()) == "w0_0");
  CHECK(d.dot_id(d.bottom()) == "w16_0");
}

TEST_CASE("reduced words") {
  WeightDiagram d = cayley_plane_diagram();
  const RootSystem& rs = d.root_system();
  for (NodeId id = 0; id < d.size(); ++id) {
    auto words = d.reduced_words(id, 100);
    CHECK_FALSE(words.empty());
    CHECK(words.size() == std::min<std::uint64_t>(100, d.path_count(d.top(), id)));
    CHECK(std::find(words.begin(), words.end(), d.reduced_word(id)) != words.end());
    for (const auto& word : words) {
      CHECK(word.size() == static_cast<std::size_t>(d.length(id)));
      Weight x = d.node(d.top()).weight;
      for (auto it = word.rbegin(); it != word.rend(); ++it) x = rs.reflect(*it, x);
      CHECK(x == d.node(id).weight);
    }
  }
  CHECK(d.reduced_word(d.top()).empty());
}

TEST_CASE("spinor variety diagram") {
  WeightDiagram s = spinor_diagram();
  CHECK(s.size() == 16);
  CHECK(s.max_length() == 10);
  std::vector<std::size_t> expected = {1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1};
  CHECK(s.level_sizes() == expected);
  CHECK(s.path_count(s.top(), s.bottom()) == 12);
}

TEST_CASE("labels 1..5 below the hyperplane class span a spinor diagram") {
  WeightDiagram d = cayley_plane_diagram();
  WeightDiagram s = spinor_diagram();
  NodeId start = *d.find_name("s1");
  std::vector<int> dist(d.size(), -1);
  std::deque<NodeId> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (const Edge& e : d.node(u).down) {
      if (e.label == 6 || dist[e.target] >= 0) continue;
      dist[e.target] = dist[u] + 1;
      queue.push_back(e.target);
    }
  }
  std::vector<std::size_t> sizes(11);
  std::size_t count = 0;
  for (NodeId id = 0; id < d.size(); ++id) {
    if (dist[id] < 0) continue;
    ++count;
    CHECK(dist[id] == d.length(id) - 1);
    sizes.at(dist[id]) += 1;
  }
  CHECK(count == 16);
  CHECK(sizes == s.level_sizes());
}

TEST_CASE("non-minuscule weights are rejected") {
  CHECK_THROWS_AS(WeightDiagram::build(build_e6(), 2), DiagramError);
}
