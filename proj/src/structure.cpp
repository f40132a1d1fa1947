#include "coxkit/structure.hpp"

#include <algorithm>
#include <sstream>

#include "coxkit/codes.hpp"
#include "coxkit/gf2.hpp"

namespace coxkit {

bool StructureReport::ok() const { return failures() == 0; }

std::size_t StructureReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.ok; }));
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }
  // Records one assertion; keeps the first counterexample only.
  template <typename Describe>
  void expect(bool cond, Describe&& describe) {
    ++result_.cases;
    if (!cond && result_.ok) {
      result_.ok = false;
      result_.counterexample = describe();
    }
  }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string order_label(int r) { return "C(" + std::to_string(r) + ")"; }

}  // namespace

StructureReport structural_verify(const GroupTable& table, const CoxeterSystem& system,
                                  const StructureOptions& options) {
  StructureReport report;
  report.system = system.name();
  const int m = system.rank();
  const std::size_t n = table.size();

  // codes[r + 1] = C(r), r = -1..m
  std::vector<LinearCode> codes;
  std::vector<RowSpace> spaces;
  for (int r = -1; r <= m; ++r) {
    codes.push_back(build_code(table, system, r));
    spaces.emplace_back(codes.back().generators);
  }
  auto code = [&](int r) -> const LinearCode& { return codes[r + 1]; };
  auto space = [&](int r) -> const RowSpace& { return spaces[r + 1]; };

  {
    Recorder rec("nesting");
    for (int r = -1; r < m; ++r) {
      rec.expect(space(r + 1).contains_all(code(r).generators),
                 [&] { return order_label(r) + " not contained in " + order_label(r + 1); });
      rec.expect(code(r).dimension < code(r + 1).dimension,
                 [&] { return order_label(r) + " and " + order_label(r + 1) + " have equal dimension"; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("duality");
    for (int r = -1; r <= m; ++r) {
      const LinearCode d = dual_code(code(r));
      rec.expect(same_rowspace(d.generators, code(m - r - 1).generators),
                 [&] { return "dual of " + order_label(r) + " differs from " + order_label(m - r - 1); });
      rec.expect(code(r).dimension + code(m - r - 1).dimension == n,
                 [&] { return "dimensions of " + order_label(r) + " and its dual do not sum to |W|"; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("multiplication");
    for (int r1 = 0; r1 <= m; ++r1) {
      for (int r2 = r1; r2 <= m; ++r2) {
        const int target = std::min(r1 + r2, m);
        const auto& g1 = code(r1).generators;
        const auto& g2 = code(r2).generators;
        for (std::size_t a = 0; a < g1.row_count(); ++a) {
          for (std::size_t b = 0; b < g2.row_count(); ++b) {
            rec.expect(space(target).contains(schur(g1.row(a), g2.row(b))), [&] {
              std::ostringstream os;
              os << "row " << a << " of " << order_label(r1) << " times row " << b << " of "
                 << order_label(r2) << " is outside " << order_label(target);
              return os.str();
            });
          }
        }
      }
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("translation");
    std::vector<Elem> elements;
    if (n <= options.exhaustive_translation_limit) {
      for (Elem w = 0; w < n; ++w) elements.push_back(w);
    } else {
      const std::size_t step = std::max<std::size_t>(1, n / options.translation_samples);
      for (std::size_t w = 0; w < n; w += step) elements.push_back(static_cast<Elem>(w));
      elements.push_back(static_cast<Elem>(n - 1));
    }
    for (Elem w : elements) {
      const std::vector<Elem> perm = table.left_multiplication(w);
      for (int r = 0; r < m; ++r) {
        const auto& g = code(r).generators;
        for (std::size_t i = 0; i < g.row_count(); ++i) {
          rec.expect(space(r).contains(left_translate(perm, g.row(i))), [&] {
            std::ostringstream os;
            os << "translate of row " << i << " of " << order_label(r) << " by element " << w
               << " (" << table.word_string(w) << ") leaves the code";
            return os.str();
          });
        }
      }
    }
    report.checks.push_back(rec.take());
  }
  for (Direction dir : {Direction::Forward, Direction::Reverse}) {
    Recorder rec(dir == Direction::Forward ? "extension-basis" : "reverse-extension-basis");
    for (int r = -1; r <= m; ++r) {
      const BitMatrix basis = extension_basis(table, r, dir);
      rec.expect(basis.row_count() == code(r).dimension,
                 [&] { return order_label(r) + ": basis has " + std::to_string(basis.row_count()) + " rows"; });
      rec.expect(basis.rank() == basis.row_count(),
                 [&] { return order_label(r) + ": basis rows are dependent"; });
      rec.expect(space(r).contains_all(basis), [&] { return order_label(r) + ": basis leaves the code"; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("degenerate-orders");
    rec.expect(code(-1).dimension == 0, [] { return std::string("C(-1) is not the zero code"); });
    rec.expect(code(0).dimension == 1 && space(0).contains(BitVector::ones(n)),
               [] { return std::string("C(0) is not the repetition code"); });
    if (m >= 1) {
      bool all_even = true;
      for (const auto& row : code(m - 1).generators.rows()) all_even &= row.weight() % 2 == 0;
      rec.expect(code(m - 1).dimension == n - 1 && all_even,
                 [] { return std::string("C(m-1) is not the even-weight code"); });
    }
    rec.expect(code(m).dimension == n, [] { return std::string("C(m) is not the full space"); });
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("even-weight");
    for (int r = -1; r < m; ++r) {
      const auto& g = code(r).generators;
      for (std::size_t i = 0; i < g.row_count(); ++i) {
        rec.expect(g.row(i).weight() % 2 == 0,
                   [&] { return "row " + std::to_string(i) + " of " + order_label(r) + " has odd weight"; });
      }
      const BitMatrix ext = extension_basis(table, r, Direction::Forward);
      for (std::size_t i = 0; i < ext.row_count(); ++i) {
        rec.expect(ext.row(i).weight() % 2 == 0,
                   [&] { return "extension " + std::to_string(i) + " of " + order_label(r) + " has odd weight"; });
      }
    }
    report.checks.push_back(rec.take());
  }
  return report;
}

}  // namespace coxkit
