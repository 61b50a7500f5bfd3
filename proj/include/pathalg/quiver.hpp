// Quivers, paths, and the word combinatorics (subpaths, overlaps,
// maximal overlaps) that everything else is built on.
#ifndef PATHALG_QUIVER_HPP
#define PATHALG_QUIVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathalg/error.hpp"

namespace pathalg {

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
};

// Finite directed multigraph. Vertex/arrow declaration order is kept and
// used for lexicographic tie-breaking in term orders.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices,
         std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  bool operator==(const Quiver& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> vertex_by_name_;
  std::unordered_map<std::string, int> arrow_by_name_;
};

// A directed path: a composable arrow sequence, or a single vertex when
// the sequence is empty. Stored as indices into the quiver's arrow table;
// equality is structural.
class Path {
 public:
  Path() = default;
  static Path vertex(const Quiver& q, int v);
  static Path of_arrows(const Quiver& q, std::vector<int> arrows);
  static Path from_names(const Quiver& q, const std::vector<std::string>& arrow_names);

  const Quiver& quiver() const { return *quiver_; }
  int length() const { return static_cast<int>(arrows_.size()); }
  bool is_vertex() const { return arrows_.empty(); }
  const std::vector<int>& arrows() const { return arrows_; }
  int arrow_at(int i) const { return arrows_.at(i); }

  int source() const;
  int target() const;

  // Contiguous subword [begin, begin+len); len == 0 yields the vertex at
  // that position.
  Path slice(int begin, int len) const;

  std::string str() const;

  bool operator==(const Path& other) const;
  bool operator!=(const Path& other) const { return !(*this == other); }
  // Structural order (length, then arrow indices, then base vertex); used
  // for canonical containers, not for term comparison.
  bool operator<(const Path& other) const;

 private:
  const Quiver* quiver_ = nullptr;
  std::vector<int> arrows_;
  int base_vertex_ = -1;  // meaningful only when arrows_ is empty
};

// "p then q"; requires target(p) == source(q).
Path compose(const Path& p, const Path& q);
std::optional<Path> try_compose(const Path& p, const Path& q);

// All offsets at which q occurs as a contiguous subword of p. With
// `proper`, at least one arrow must remain on each side.
std::vector<int> subpath_occurrences(const Path& q, const Path& p, bool proper);
bool is_subpath(const Path& q, const Path& p, bool proper = false);

struct OverlapWitness {
  Path r;  // right extension of p
  Path s;  // left extension of q
  Path word() const;
  int amount() const;  // ℓ(p) - ℓ(s) = number of shared arrows
 private:
  friend std::vector<OverlapWitness> overlaps(const Path&, const Path&);
  Path p_, q_;
};

// Proper overlaps of p with q: pairs (r, s) with p·r = s·q, ℓ(r) ≥ 1,
// ℓ(s) ≥ 1 and ℓ(s) < ℓ(p). The shared segment has length ≥ 1 and the
// overlap word p·r is strictly longer than both p and q.
std::vector<OverlapWitness> overlaps(const Path& p, const Path& q);

// Overlap words w = t_prime·s = u·t (ℓ(u) ≥ 1) of two rho elements such
// that no element of rho is a proper subpath of w. rho must be an
// anti-chain under subpath; one pair can contribute several words.
std::vector<Path> maximal_overlaps(const Path& t_prime, const Path& t,
                                   const std::vector<Path>& rho);

}  // namespace pathalg

#endif
