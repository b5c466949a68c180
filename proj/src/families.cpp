#include "lch/families.hpp"

#include <map>

#include "lch/errors.hpp"
#include "lch/io.hpp"

namespace lch {

namespace {

class Builder {
 public:
  void gen(const std::string& name, int degree) { gens_ += "gen " + name + " " + std::to_string(degree) + "\n"; }
  void d(const std::string& name, const std::string& poly) { diffs_ += "d " + name + " = " + poly + "\n"; }

  // Leg generators L1..L{count+1} of degree 0 and cusps tL1..tL{count} with d = 1 + L_i L_{i+1}.
  void leg(const std::string& letter, int count) {
    for (int i = 1; i <= count + 1; ++i) gen(letter + std::to_string(i), 0);
    for (int i = 1; i <= count; ++i) {
      const std::string t = "t" + letter + std::to_string(i);
      cusps_.emplace_back(t, 1);
      d(t, "1 + " + letter + std::to_string(i) + " " + letter + std::to_string(i + 1));
    }
  }

  Dga build() {
    for (const auto& [name, degree] : cusps_) gen(name, degree);
    ParseResult parsed = parse_dga("modulus 0\n" + gens_ + diffs_);
    const ValidationReport report = validate_dga(parsed.dga);
    if (!report.valid()) {
      const auto& v = report.structural.empty() ? report.violations.front() : report.structural.front();
      throw InternalError("family DGA fails validation: " + v.message);
    }
    return parsed.dga;
  }

 private:
  std::string gens_;
  std::string diffs_;
  std::vector<std::pair<std::string, int>> cusps_;
};

std::vector<std::string> grading_warnings(const std::vector<std::pair<std::string, int>>& letters) {
  std::vector<std::string> out;
  std::map<int, std::string> first;
  for (const auto& [name, degree] : letters) {
    if (degree == 0) out.push_back("|" + name + "| = 0");
    if (degree == 1 || degree == -1)
      out.push_back("|" + name + "| = " + std::to_string(degree) + " collides with the cusp degree or its dual");
    auto [it, fresh] = first.emplace(degree, name);
    if (!fresh) out.push_back("|" + name + "| = |" + it->second + "| = " + std::to_string(degree));
  }
  return out;
}

void require_positive(const std::vector<int>& params) {
  for (int p : params)
    if (p <= 0) throw ContractError("family parameters must be positive integers");
}

std::string last(const std::string& letter, int count) { return letter + std::to_string(count + 1); }

}  // namespace

FamilyResult cupex(int k, int l, int m) {
  require_positive({k, l, m});
  const std::vector<std::pair<std::string, int>> letters{
      {"a1", k - l - 1}, {"a2", l - k + 1}, {"b1", k - m - 1}, {"b2", m - k + 1}, {"c1", l - m - 1}, {"c2", m - l + 1}};
  Builder b;
  for (const auto& [name, degree] : letters) b.gen(name, degree);
  for (int i = 0; i <= 3; ++i) b.gen("t" + std::to_string(i), 1);
  b.d("a2", "y1 c1 b2");
  b.d("b1", "a1 y1 c1");
  b.d("c2", "b2 a1 y1");
  b.d("t0", "1 + " + last("x", k) + " " + last("y", l) + " " + last("z", m));
  b.d("t1", "1 + x1 + x1 a1 a2 + x1 b1 b2");
  b.d("t2", "1 + y1 + a2 a1 y1 + y1 c1 c2");
  b.d("t3", "1 + z1 + b2 b1 z1 + c2 c1 z1");
  b.leg("x", k);
  b.leg("y", l);
  b.leg("z", m);
  return {b.build(), grading_warnings(letters)};
}

FamilyResult masseyex(int k, int l, int m, int n) {
  require_positive({k, l, m, n});
  const std::vector<std::pair<std::string, int>> letters{
      {"a1", k - l - 1}, {"a2", l - k + 1}, {"b1", k - n - 1}, {"b2", n - k + 1}, {"c0", l - m - 1},
      {"c1", m - n},     {"d", n - m},      {"e0", n - l + 1}, {"e1", n - l},     {"f", m - l + 1}};
  Builder b;
  for (const auto& [name, degree] : letters) b.gen(name, degree);
  for (int i = 0; i <= 4; ++i) b.gen("t" + std::to_string(i), 1);
  b.d("a2", "y1 c0 c1 b2");
  b.d("b1", "a1 y1 c0 c1");
  b.d("d", "e1 c0");
  b.d("f", "c1 e1");
  b.d("e0", "e1 + b2 a1 y1");
  b.d("t0", "1 + " + last("x", k) + " " + last("y", l) + " " + last("z", m) + " " + last("w", n));
  b.d("t1", "1 + x1 + x1 a1 a2 + x1 b1 b2");
  b.d("t2", "1 + y1 + a2 a1 y1 + y1 c0 f + y1 c0 c1 e0");
  b.d("t3", "1 + w1 + b2 b1 w1 + d c1 w1 + e0 c0 c1 w1");
  b.d("t4", "1 + z1 + f c0 z1 + c1 d z1");
  b.leg("x", k);
  b.leg("y", l);
  b.leg("z", m);
  b.leg("w", n);
  return {b.build(), grading_warnings(letters)};
}

FamilyResult generate_family(const std::string& name, const std::vector<int>& params) {
  if (name == "cupex") {
    if (params.size() != 3) throw ContractError("cupex takes parameters K,L,M");
    return cupex(params[0], params[1], params[2]);
  }
  if (name == "masseyex") {
    if (params.size() != 4) throw ContractError("masseyex takes parameters K,L,M,N");
    return masseyex(params[0], params[1], params[2], params[3]);
  }
  throw ContractError("unknown family '" + name + "' (expected cupex or masseyex)");
}

}  // namespace lch
