#pragma once

// Weight diagrams of minuscule representations and the induced Hasse
// diagram of Schubert classes.
//
// Orientation: the highest weight is the top node (length 0, the
// fundamental class); the lowest weight is the bottom node (the point
// class). A node's length is its codimension.

#include "cayley/lattice.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cayley {

using NodeId = std::size_t;

struct Edge {
  NodeId target;
  int label;  // simple reflection index, 1-based
};

struct DiagramNode {
  Weight weight;
  int length = 0;
  std::vector<Edge> down;  // towards the bottom (length + 1)
  std::vector<Edge> up;    // towards the top (length - 1)
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WeightDiagram {
 public:
  /// Closure of the orbit of ω_{minuscule_index} under simple reflections
  /// that lower the height. Throws DiagramError if the representation is
  /// not minuscule.
  static WeightDiagram build(const RootSystem& rs, int minuscule_index);

  const RootSystem& root_system() const { return rs_; }
  std::size_t size() const { return nodes_.size(); }
  const DiagramNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<DiagramNode>& nodes() const { return nodes_; }
  NodeId top() const { return 0; }
  NodeId bottom() const { return nodes_.size() - 1; }
  int max_length() const { return nodes_.back().length; }
  int length(NodeId id) const { return nodes_.at(id).length; }
  int dimension(NodeId id) const { return max_length() - length(id); }

  /// Nodes of the given length, in id order.
  const std::vector<NodeId>& level(int length) const;
  std::vector<std::size_t> level_sizes() const;
  /// Position of a node within its level.
  std::size_t index_in_level(NodeId id) const { return index_in_level_.at(id); }

  std::optional<NodeId> find(const Weight& w) const;

  /// Labels i1..ik of a shortest chain from the node up to the top, so that
  /// s_{i1}···s_{ik} applied to the highest weight gives node.weight.
  std::vector<int> reduced_word(NodeId id) const;
  /// All such words (up to `cap`), in lexicographic order of the chain.
  std::vector<std::vector<int>> reduced_words(NodeId id, std::size_t cap) const;

  /// Number of length-increasing paths from u down to v.
  std::uint64_t path_count(NodeId u, NodeId v) const;
  /// path_count(u, bottom).
  std::uint64_t degree(NodeId u) const { return degree_.at(u); }

  /// Poincaré dual node: the weight moved by the longest Weyl element.
  NodeId dual(NodeId id) const { return dual_.at(id); }

  const std::string& name(NodeId id) const { return names_.at(id); }
  /// Looks up a node by name; "h" is accepted for the hyperplane class when
  /// conventional names are assigned.
  std::optional<NodeId> find_name(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

  /// "w<length>_<index in level>", the DOT node identifier.
  std::string dot_id(NodeId id) const;

  void set_names(std::vector<std::string> names);

 private:
  explicit WeightDiagram(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  std::vector<DiagramNode> nodes_;
  std::vector<std::vector<NodeId>> levels_;
  std::vector<std::size_t> index_in_level_;
  std::vector<std::uint64_t> degree_;
  std::vector<NodeId> dual_;
  std::vector<std::string> names_;
  std::unordered_map<Weight, NodeId> by_weight_;
};

/// The Hasse diagram of the Cayley plane E6/P6 (weights of ω6) carrying the
/// conventional class names: s0..s3 and s13..s16 for the unique classes,
/// s8 for the class of an octonionic line, and s<k>p / s<k>pp for the
/// pairs. s4p has degree 33 and s4pp degree 45; the other primes in
/// codimensions 5..8 are fixed by degree and codimensions 9..12 by duality
/// (s<16-k>x is dual to s<k>x).
WeightDiagram cayley_plane_diagram();

/// Hasse diagram of the spinor variety S10 (D5, half-spin weight ω5).
WeightDiagram spinor_diagram();

}  // namespace cayley
