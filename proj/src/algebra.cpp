#include "lch/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "lch/errors.hpp"

namespace lch {

int Grading::reduce(int v, int modulus) {
  if (modulus <= 0) return v;
  int r = v % modulus;
  return r < 0 ? r + modulus : r;
}

Grading::Grading(int value, int modulus) : value_(reduce(value, modulus)), modulus_(modulus) {
  if (modulus < 0) throw ContractError("grading modulus must be non-negative");
}

Grading Grading::operator+(Grading other) const {
  if (modulus_ != other.modulus_) throw ContractError("adding gradings with different moduli");
  return Grading(value_ + other.value_, modulus_);
}

Poly Poly::from_terms(std::vector<Word> terms, std::size_t* cancelled) {
  std::sort(terms.begin(), terms.end(), WordLess{});
  Poly p;
  p.terms_.reserve(terms.size());
  std::size_t gone = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) & 1) {
      p.terms_.push_back(std::move(terms[i]));
      gone += j - i - 1;
    } else {
      gone += j - i;
    }
    i = j;
  }
  if (cancelled) *cancelled = gone;
  return p;
}

bool Poly::contains(const Word& w) const {
  return std::binary_search(terms_.begin(), terms_.end(), w, WordLess{});
}

std::size_t Poly::max_length() const {
  std::size_t m = 0;
  for (const auto& w : terms_) m = std::max(m, w.size());
  return m;
}

Poly& Poly::operator+=(const Poly& other) {
  std::vector<Word> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out), WordLess{});
  terms_ = std::move(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Word> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      terms.push_back(std::move(w));
    }
  }
  return Poly::from_terms(std::move(terms));
}

Poly component(const Poly& p, std::size_t k) {
  std::vector<Word> terms;
  for (const auto& w : p.terms())
    if (w.size() == k) terms.push_back(w);
  return Poly::from_terms(std::move(terms));
}

Poly reversed(const Poly& p) {
  std::vector<Word> terms;
  terms.reserve(p.size());
  for (const auto& w : p.terms()) terms.emplace_back(w.rbegin(), w.rend());
  return Poly::from_terms(std::move(terms));
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
  std::vector<Word> terms;
  for (const auto& w : p.terms()) {
    // Expand the product of images letter by letter.
    std::vector<Word> partial{Word{}};
    for (GenId g : w) {
      const auto& img = images.at(g).terms();
      std::vector<Word> next;
      next.reserve(partial.size() * img.size());
      for (const auto& pre : partial)
        for (const auto& t : img) {
          Word x = pre;
          x.insert(x.end(), t.begin(), t.end());
          next.push_back(std::move(x));
        }
      partial = std::move(next);
      if (partial.empty()) break;
    }
    terms.insert(terms.end(), std::make_move_iterator(partial.begin()),
                 std::make_move_iterator(partial.end()));
  }
  return Poly::from_terms(std::move(terms));
}

Dga::Dga(int modulus, std::vector<Generator> generators, std::vector<Poly> differential)
    : modulus_(modulus), generators_(std::move(generators)), differential_(std::move(differential)) {
  if (modulus_ < 0) throw ContractError("grading modulus must be non-negative");
  if (differential_.size() != generators_.size())
    throw ContractError("every generator needs a differential entry");
  for (GenId g = 0; g < generators_.size(); ++g) {
    auto& gen = generators_[g];
    gen.degree = reduce(gen.degree);
    if (!index_.emplace(gen.name, g).second)
      throw ContractError("duplicate generator name '" + gen.name + "'");
  }
}

int Dga::degree(const Word& w) const {
  int s = 0;
  for (GenId g : w) s += generators_.at(g).degree;
  return reduce(s);
}

Poly Dga::d(const Word& w) const {
  std::vector<Word> terms;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Poly& dg = differential_.at(w[i]);
    for (const auto& t : dg.terms()) {
      Word x(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      x.insert(x.end(), t.begin(), t.end());
      x.insert(x.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
      terms.push_back(std::move(x));
    }
  }
  return Poly::from_terms(std::move(terms));
}

Poly Dga::d(const Poly& p) const {
  if (!in_range(p)) throw ContractError("polynomial mentions an undeclared generator");
  std::vector<Word> terms;
  for (const auto& w : p.terms()) {
    Poly dw = d(w);
    terms.insert(terms.end(), dw.terms().begin(), dw.terms().end());
  }
  return Poly::from_terms(std::move(terms));
}

std::optional<GenId> Dga::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GenId Dga::id(std::string_view name) const {
  auto g = find(name);
  if (!g) throw ContractError("undeclared generator '" + std::string(name) + "'");
  return *g;
}

bool Dga::in_range(const Poly& p) const {
  for (const auto& w : p.terms())
    for (GenId g : w)
      if (g >= generators_.size()) return false;
  return true;
}

std::string Dga::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i] < generators_.size() ? generators_[w[i]].name : "?" + std::to_string(w[i]);
  }
  return out;
}

std::string Dga::format(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " + ";
    out += format(p.terms()[i]);
  }
  return out;
}

ValidationReport validate_dga(const Dga& d) {
  ValidationReport report;
  for (GenId q = 0; q < d.size(); ++q) {
    for (const auto& w : d.d(q).terms())
      for (GenId g : w)
        if (g >= d.size())
          report.structural.push_back({Violation::Kind::Structural, q,
                                       "d " + d.name(q) + " mentions undeclared generator index " +
                                           std::to_string(g)});
  }
  if (!report.structural.empty()) return report;

  for (GenId q = 0; q < d.size(); ++q) {
    const int expected = d.reduce(d.degree(q) - 1);
    for (const auto& w : d.d(q).terms()) {
      if (d.degree(w) != expected) {
        std::ostringstream msg;
        msg << "term " << d.format(w) << " of d " << d.name(q) << " has degree " << d.degree(w)
            << ", expected " << expected;
        report.violations.push_back({Violation::Kind::Inhomogeneous, q, msg.str()});
      }
    }
    Poly dd = d.d(d.d(q));
    if (!dd.is_zero()) {
      report.violations.push_back(
          {Violation::Kind::SquareNonzero, q, "d(d " + d.name(q) + ") = " + d.format(dd)});
    }
  }
  return report;
}

Dga mirror_dga(const Dga& d) {
  std::vector<Poly> diff;
  diff.reserve(d.size());
  for (const auto& p : d.differential()) diff.push_back(reversed(p));
  return Dga(d.modulus(), d.generators(), std::move(diff));
}

Dga stabilize(const Dga& d, Grading degree, const std::pair<std::string, std::string>& names) {
  if (degree.modulus() != d.modulus()) throw ContractError("stabilization degree uses a different modulus");
  if (names.first == names.second) throw ContractError("stabilization names must differ");
  for (const auto& n : {names.first, names.second})
    if (d.find(n)) throw ContractError("stabilization name '" + n + "' is already used");
  auto gens = d.generators();
  auto diff = d.differential();
  const auto e1 = static_cast<GenId>(gens.size());
  const auto e2 = e1 + 1;
  gens.push_back({names.first, degree.value()});
  gens.push_back({names.second, (degree - Grading(1, d.modulus())).value()});
  diff.push_back(Poly::generator(e2));
  diff.push_back(Poly{});
  return Dga(d.modulus(), std::move(gens), std::move(diff));
}

Poly apply_iso(const Poly& p, const ElementaryIso& iso, std::size_t num_generators) {
  std::vector<Poly> images;
  images.reserve(num_generators);
  for (GenId g = 0; g < num_generators; ++g) images.push_back(Poly::generator(g));
  images.at(iso.target) += iso.shift;
  return substitute(p, images);
}

Dga apply_elementary_iso(const Dga& d, const ElementaryIso& iso) {
  if (iso.target >= d.size()) throw ContractError("elementary isomorphism targets an unknown generator");
  if (!d.in_range(iso.shift)) throw ContractError("elementary isomorphism shift mentions an undeclared generator");
  for (const auto& w : iso.shift.terms()) {
    if (std::find(w.begin(), w.end(), iso.target) != w.end())
      throw ContractError("elementary isomorphism shift mentions its target " + d.name(iso.target));
    if (d.degree(w) != d.degree(iso.target))
      throw ContractError("elementary isomorphism shift term " + d.format(w) + " is not of degree |" +
                          d.name(iso.target) + "|");
  }
  // phi is an involution, so phi d phi^{-1} (q) = phi(d(phi(q))).
  std::vector<Poly> diff;
  diff.reserve(d.size());
  for (GenId q = 0; q < d.size(); ++q) {
    Poly pre = apply_iso(Poly::generator(q), iso, d.size());
    diff.push_back(apply_iso(d.d(pre), iso, d.size()));
  }
  return Dga(d.modulus(), d.generators(), std::move(diff));
}

}  // namespace lch
