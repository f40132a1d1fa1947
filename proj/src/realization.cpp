#include "realization.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace coxkit::detail {
namespace {

// Permutations of {0..k} in one-line notation; s_i swaps positions i, i+1.
class SymmetricModel final : public Model {
 public:
  explicit SymmetricModel(int k) : k_(k) {}
  int state_size() const override { return k_ + 1; }
  int rank() const override { return k_; }
  void identity(std::int32_t* out) const override {
    for (int i = 0; i <= k_; ++i) out[i] = i;
  }
  void apply(const std::int32_t* in, int gen, std::int32_t* out) const override {
    std::copy(in, in + k_ + 1, out);
    std::swap(out[gen], out[gen + 1]);
  }

 private:
  int k_;
};

// Signed permutations of {1..k}. Generator 0 negates the first entry; the
// others swap adjacent positions. With `even` set (type D), generator 0
// instead swaps the first two entries and negates both.
class SignedModel final : public Model {
 public:
  SignedModel(int k, bool even) : k_(k), even_(even) {}
  int state_size() const override { return k_; }
  int rank() const override { return k_; }
  void identity(std::int32_t* out) const override {
    for (int i = 0; i < k_; ++i) out[i] = i + 1;
  }
  void apply(const std::int32_t* in, int gen, std::int32_t* out) const override {
    std::copy(in, in + k_, out);
    if (!even_) {
      if (gen == 0) {
        out[0] = -out[0];
      } else {
        std::swap(out[gen - 1], out[gen]);
      }
      return;
    }
    if (gen == 0) {
      std::swap(out[0], out[1]);
      out[0] = -out[0];
      out[1] = -out[1];
    } else if (gen == 1) {
      std::swap(out[0], out[1]);
    } else {
      std::swap(out[gen - 1], out[gen]);
    }
  }

 private:
  int k_;
  bool even_;
};

// Dihedral normal form r^k s^f with r = s1 s2.
class DihedralModel final : public Model {
 public:
  explicit DihedralModel(int n) : n_(n) {}
  int state_size() const override { return 2; }
  int rank() const override { return 2; }
  void identity(std::int32_t* out) const override { out[0] = out[1] = 0; }
  void apply(const std::int32_t* in, int gen, std::int32_t* out) const override {
    const int k = in[0];
    const int f = in[1];
    if (gen == 0) {
      out[0] = k;
      out[1] = 1 - f;
    } else if (f == 0) {
      // r^k s2 = r^{k-1} s1
      out[0] = (k + n_ - 1) % n_;
      out[1] = 1;
    } else {
      // r^k s1 s2 = r^{k+1}
      out[0] = (k + 1) % n_;
      out[1] = 0;
    }
  }

 private:
  int n_;
};

// Element of Z[phi], phi^2 = phi + 1, as a + b*phi.
struct Zphi {
  std::int32_t a = 0;
  std::int32_t b = 0;
};

Zphi mul(Zphi x, Zphi y) { return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b}; }

// Orbit of rho = (1,...,1) in weight coordinates under the contragredient
// reflection representation. Tracking w^{-1}(rho) turns the natural left
// action into right multiplication. The stabilizer of rho is trivial, so
// the orbit is a faithful copy of W.
class WeightOrbitModel final : public Model {
 public:
  explicit WeightOrbitModel(std::vector<std::vector<Zphi>> cartan)
      : k_(static_cast<int>(cartan.size())), cartan_(std::move(cartan)) {}
  int state_size() const override { return 2 * k_; }
  int rank() const override { return k_; }
  void identity(std::int32_t* out) const override {
    for (int i = 0; i < k_; ++i) {
      out[2 * i] = 1;
      out[2 * i + 1] = 0;
    }
  }
  void apply(const std::int32_t* in, int gen, std::int32_t* out) const override {
    const Zphi ci{in[2 * gen], in[2 * gen + 1]};
    for (int j = 0; j < k_; ++j) {
      const Zphi d = mul(ci, cartan_[gen][j]);
      out[2 * j] = in[2 * j] - d.a;
      out[2 * j + 1] = in[2 * j + 1] - d.b;
    }
  }

 private:
  int k_;
  std::vector<std::vector<Zphi>> cartan_;
};

std::unique_ptr<Model> weight_orbit(const Component& c, const CoxeterMatrix& m) {
  const int k = c.rank;
  std::vector<std::vector<Zphi>> cartan(k, std::vector<Zphi>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) {
        cartan[i][j] = {2, 0};
        continue;
      }
      const int label = m[c.generators[i]][c.generators[j]];
      // Entries chosen so that A_ij * A_ji = 4 cos^2(pi / label); the longer
      // entry sits below the diagonal.
      switch (label) {
        case 2:
          break;
        case 3:
          cartan[i][j] = {-1, 0};
          break;
        case 4:
          cartan[i][j] = {i < j ? -1 : -2, 0};
          break;
        case 5:
          cartan[i][j] = {0, -1};
          break;
        case 6:
          cartan[i][j] = {i < j ? -1 : -3, 0};
          break;
        default:
          return nullptr;
      }
    }
  }
  return std::make_unique<WeightOrbitModel>(std::move(cartan));
}

}  // namespace

std::unique_ptr<Model> make_model(const Component& c, const CoxeterMatrix& m, bool cartan) {
  if (cartan) return weight_orbit(c, m);
  switch (c.kind) {
    case ComponentKind::A:
      return std::make_unique<SymmetricModel>(c.rank);
    case ComponentKind::B:
      return std::make_unique<SignedModel>(c.rank, false);
    case ComponentKind::D:
      return std::make_unique<SignedModel>(c.rank, true);
    case ComponentKind::I2:
      return std::make_unique<DihedralModel>(c.label);
    case ComponentKind::E:
    case ComponentKind::F:
    case ComponentKind::H:
      return weight_orbit(c, m);
  }
  return nullptr;
}

ComponentTable enumerate_model(const Model& model, std::size_t expected) {
  const int width = model.state_size();
  const int rank = model.rank();
  std::size_t capacity = 16;
  while (capacity < 2 * expected) capacity <<= 1;
  const std::uint32_t empty = 0xFFFFFFFFu;
  std::vector<std::uint32_t> slots(capacity, empty);
  std::vector<std::int32_t> states;
  states.reserve(expected * width);

  auto hash = [&](const std::int32_t* s) {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (int i = 0; i < width; ++i) {
      h ^= static_cast<std::uint32_t>(s[i]);
      h *= 0xFF51AFD7ED558CCDull;
      h ^= h >> 29;
    }
    return h;
  };
  // Returns the index of s, inserting it if absent.
  auto intern = [&](const std::int32_t* s) -> std::uint32_t {
    std::size_t pos = hash(s) & (capacity - 1);
    while (true) {
      const std::uint32_t at = slots[pos];
      if (at == empty) {
        const auto idx = static_cast<std::uint32_t>(states.size() / width);
        if (idx >= expected) {
          throw std::logic_error("realization produced more elements than the group order");
        }
        states.insert(states.end(), s, s + width);
        slots[pos] = idx;
        return idx;
      }
      if (std::memcmp(&states[static_cast<std::size_t>(at) * width], s, width * sizeof(std::int32_t)) == 0) {
        return at;
      }
      pos = (pos + 1) & (capacity - 1);
    }
  };

  ComponentTable t;
  t.rank = rank;
  t.action.reserve(expected * rank);
  std::vector<std::int32_t> cur(width), next(width);
  model.identity(cur.data());
  intern(cur.data());
  for (std::size_t u = 0; u < states.size() / width; ++u) {
    std::copy_n(&states[u * width], width, cur.begin());
    for (int g = 0; g < rank; ++g) {
      model.apply(cur.data(), g, next.data());
      t.action.push_back(intern(next.data()));
    }
  }
  t.size = states.size() / width;
  if (t.size != expected) {
    throw std::logic_error("realization produced " + std::to_string(t.size) +
                           " elements, expected " + std::to_string(expected));
  }
  return t;
}

}  // namespace coxkit::detail
