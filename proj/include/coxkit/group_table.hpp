#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coxkit/coxeter_system.hpp"

namespace coxkit {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 10'000'000;

/// Enumeration cap: COXKIT_CAP if set, else kDefaultCap.
std::size_t default_cap();

/// Which concrete model to enumerate irreducible components with.
///   Native: permutations (A), signed permutations (B, D), dihedral normal
///           form (I2), weight-orbit models over Z[phi] (E, F, H).
///   Cartan: the weight-orbit model for every component that admits one
///           (everything except I2(n) for n outside {2,3,4,5,6}).
/// Both must give identical tables; the second route exists as a cross-check.
enum class Realization { Native, Cartan };

/// The enumerated group. Elements are numbered in shortlex order of their
/// minimal words (BFS from the identity, generators tried in index order),
/// so element 0 is the identity and lengths are nondecreasing in the index.
class GroupTable {
 public:
  std::size_t size() const { return length_.size(); }
  int rank() const { return rank_; }

  /// Index of w * s_i.
  Elem act(Elem w, int i) const { return action_[static_cast<std::size_t>(w) * rank_ + i]; }
  int length(Elem w) const { return length_[w]; }
  GenSet descent(Elem w) const { return descent_[w]; }
  int descent_number(Elem w) const { return gen_count(descent_[w]); }
  int max_length() const { return length_.back(); }

  /// BFS tree: w = parent(w) * s_{parent_gen(w)}; undefined for the identity.
  Elem parent(Elem w) const { return parent_[w]; }
  int parent_gen(Elem w) const { return parent_gen_[w]; }

  /// The shortlex-minimal word of w, as 0-based generator indices.
  std::vector<int> word(Elem w) const;
  /// "e" for the identity, otherwise "s1 s3 s2"-style with 1-based indices.
  std::string word_string(Elem w) const;

  /// Index of the product of the given generators (applied left to right).
  Elem from_word(const std::vector<int>& word) const;
  Elem inverse(Elem w) const;

  /// perm[u] = index of w*u, for all u.
  std::vector<Elem> left_multiplication(Elem w) const;

  const std::vector<Elem>& raw_action() const { return action_; }

 private:
  friend GroupTable enumerate_group(const CoxeterSystem&, std::size_t, Realization);
  int rank_ = 0;
  std::vector<Elem> action_;
  std::vector<std::uint16_t> length_;
  std::vector<GenSet> descent_;
  std::vector<Elem> parent_;
  std::vector<std::int8_t> parent_gen_;
};

/// Throws CapExceeded if |W| > cap.
GroupTable enumerate_group(const CoxeterSystem& system, std::size_t cap = default_cap(),
                           Realization route = Realization::Native);

/// A standard coset w<J>.
struct StandardCoset {
  Elem representative = 0;  // unique minimal-length member
  GenSet gens = 0;
  std::vector<Elem> members;  // ascending
  int rank() const { return gen_count(gens); }
};

StandardCoset standard_coset(const GroupTable& table, Elem w, GenSet J);

/// Partition of W into the cosets of <J>.
struct CosetPartition {
  GenSet gens = 0;
  std::vector<Elem> label;            // label[u] = position of u's coset in `representatives`
  std::vector<Elem> representatives;  // minimal members, ascending
  std::size_t coset_size = 0;
};

CosetPartition coset_partition(const GroupTable& table, GenSet J);

/// Members of each coset listed contiguously: members[offset[c] .. offset[c+1]).
struct CosetMembers {
  std::vector<Elem> offset;
  std::vector<Elem> members;
};
CosetMembers coset_members(const CosetPartition& partition);

/// w is the minimal element of w<J> iff D(w) and J are disjoint.
inline bool is_minimal_in_coset(const GroupTable& table, Elem w, GenSet J) {
  return (table.descent(w) & J) == 0;
}

/// Undirected DOT graph of the Cayley graph; edge colour is the 1-based
/// generator index, vertex label the shortlex word.
std::string export_cayley_dot(const GroupTable& table, const CoxeterSystem& system);

}  // namespace coxkit
