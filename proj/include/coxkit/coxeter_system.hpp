#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxkit/bigint.hpp"

namespace coxkit {

/// Bitmask over the generators of a system; bit i is generator s_{i+1}.
using GenSet = std::uint64_t;

inline constexpr int kMaxRank = 63;

constexpr int gen_count(GenSet set) { return __builtin_popcountll(set); }
constexpr bool has_gen(GenSet set, int i) { return (set >> i) & 1U; }
constexpr GenSet full_set(int rank) { return rank == 64 ? ~GenSet{0} : (GenSet{1} << rank) - 1; }

using CoxeterMatrix = std::vector<std::vector<int>>;

enum class ComponentKind { A, B, D, E, F, H, I2 };

/// One irreducible factor of a Coxeter system.
///
/// `generators` lists global generator indices in the diagram's canonical
/// order: A is a path, B starts at the 4-labelled end, D is
/// (short arm, short arm, branch node, long arm outward), H starts at the
/// 5-labelled end, I2 is the pair in index order. For E and F the order
/// is ascending (their realization reads the submatrix directly).
struct Component {
  ComponentKind kind = ComponentKind::A;
  int rank = 0;
  int label = 0;  // I2(n): n; otherwise unused
  std::vector<int> generators;

  std::string name() const;
  BigInt order() const;
};

BigInt component_order(ComponentKind kind, int rank, int label);

/// Classifies the diagram of `matrix` restricted to `subset`. Throws
/// NotFinite if some connected part is not in the finite list.
std::vector<Component> classify(const CoxeterMatrix& matrix, GenSet subset);

/// A validated finite Coxeter system. Immutable after construction.
class CoxeterSystem {
 public:
  /// Validates and classifies `matrix`. `name` is a display label; when empty
  /// one is derived from the classification.
  explicit CoxeterSystem(CoxeterMatrix matrix, std::string name = {});

  int rank() const { return static_cast<int>(matrix_.size()); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  int entry(int i, int j) const { return matrix_[i][j]; }
  const std::vector<Component>& components() const { return components_; }
  const BigInt& order() const { return order_; }
  const std::string& name() const { return name_; }

  /// "A1xA1", "A3", "I2(3)xI2(3)", ...: the classification, in component order.
  std::string classification() const;

  /// True when built from a family with parameters below the canonical range
  /// (D_2, D_3) and classified as something else.
  bool is_alias() const { return alias_; }
  void mark_alias() { alias_ = true; }

 private:
  CoxeterMatrix matrix_;
  std::vector<Component> components_;
  BigInt order_;
  std::string name_;
  bool alias_ = false;
};

/// Order of the standard parabolic subgroup <J>, from the classification of
/// the restricted matrix. No enumeration.
BigInt subgroup_order(const CoxeterSystem& system, GenSet subset);

// Family constructors. Generator order follows the defining matrices used
// throughout the project (A: chain; B: 4 on (s1,s2); D: s1,s2 both attached
// to s3; E: Bourbaki numbering; F4: 3,4,3; H: 5 on (s1,s2); I2(n)^mu: pairs).
CoxeterSystem family_a(int m);
CoxeterSystem family_b(int m);
CoxeterSystem family_d(int m);
CoxeterSystem family_e(int m);
CoxeterSystem family_f4();
CoxeterSystem family_h(int m);
CoxeterSystem family_i2(int n, int mu = 1);
CoxeterSystem family_z2(int m);

/// Direct product: block-diagonal matrices, all cross entries 2.
CoxeterSystem direct_product(const std::vector<CoxeterSystem>& factors);

/// Parses a family token such as "A3", "B4", "D5", "E6", "F4", "H3",
/// "I2(5)", "I2(3)^2", "Z2^4". Products use 'x' or ',' separators:
/// "I2(3)xB2".
CoxeterSystem parse_system(std::string_view text);

/// Builds a system from a JSON descriptor text:
/// {"family": "A", "m": 3}, {"family": "I2", "n": 3, "mu": 2},
/// {"matrix": [[1,3],[3,1]]}, {"product": [desc, ...]}, or a bare matrix
/// array.
CoxeterSystem system_from_json(std::string_view json_text);

}  // namespace coxkit
