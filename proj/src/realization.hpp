#pragma once

// Concrete faithful models of the irreducible finite Coxeter groups. Each
// model stores an element as a fixed-width vector of int32 and implements
// right multiplication by a generator.

#include <cstdint>
#include <memory>
#include <vector>

#include "coxkit/coxeter_system.hpp"

namespace coxkit::detail {

class Model {
 public:
  virtual ~Model() = default;
  virtual int state_size() const = 0;
  virtual int rank() const = 0;
  virtual void identity(std::int32_t* out) const = 0;
  /// out = in * s_gen (local generator index, canonical component order).
  virtual void apply(const std::int32_t* in, int gen, std::int32_t* out) const = 0;
};

/// A model for `component` of `matrix`. With `cartan` set, the weight-orbit
/// model is used whenever one exists; returns nullptr if it does not.
std::unique_ptr<Model> make_model(const Component& component, const CoxeterMatrix& matrix,
                                  bool cartan);

/// Local Cayley table of one component: action[u * rank + i], BFS order.
struct ComponentTable {
  int rank = 0;
  std::size_t size = 0;
  std::vector<std::uint32_t> action;
};

ComponentTable enumerate_model(const Model& model, std::size_t expected_size);

}  // namespace coxkit::detail
