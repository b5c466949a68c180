#include "lch/report.hpp"

#include <algorithm>

#include "lch/errors.hpp"

namespace lch {

namespace {

bool is_scalar(const Document& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const Document& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render_text(const Document& v, std::size_t indent, std::vector<std::string>& out);

void render_entry(const std::string& key, const Document& v, std::size_t indent, std::vector<std::string>& out) {
  const std::string pad(indent, ' ');
  if (is_scalar(v)) {
    out.push_back(pad + key + ": " + scalar_text(v));
    return;
  }
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Document& x) { return is_scalar(x); })) {
    std::string line = pad + key + ":";
    if (v.empty()) line += " (none)";
    for (std::size_t i = 0; i < v.size(); ++i) line += (i ? ", " : " ") + scalar_text(v[i]);
    out.push_back(line);
    return;
  }
  out.push_back(pad + key + ":");
  render_text(v, indent + 2, out);
}

void render_text(const Document& v, std::size_t indent, std::vector<std::string>& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) render_entry(key, value, indent, out);
    return;
  }
  if (v.is_array()) {
    const std::string pad(indent, ' ');
    for (const auto& item : v) {
      if (is_scalar(item)) {
        out.push_back(pad + "- " + scalar_text(item));
        continue;
      }
      std::vector<std::string> inner;
      render_text(item, indent + 2, inner);
      if (inner.empty()) {
        out.push_back(pad + "-");
        continue;
      }
      inner[0].replace(indent, 2, "- ");
      out.insert(out.end(), inner.begin(), inner.end());
    }
    return;
  }
  out.push_back(std::string(indent, ' ') + scalar_text(v));
}

Document support(const Dga& d, const Augmentation& e) {
  Document out = Document::array();
  for (GenId g = 0; g < d.size(); ++g)
    if (e(g)) out.push_back(d.name(g));
  return out;
}

Document dims_document(const std::map<int, std::size_t>& dims) {
  Document out = Document::array();
  for (const auto& [k, n] : dims)
    if (n > 0) out.push_back(Document{{"degree", k}, {"dim", n}});
  return out;
}

Document classes_document(const Homology& h) {
  Document out = Document::array();
  for (int k : h.classes().degree_set()) {
    Document reps = Document::array();
    for (auto c : h.classes_of_degree(k)) reps.push_back("[" + h.classes().labels[c] + "]");
    out.push_back(Document{{"degree", k}, {"dim", h.dim(k)}, {"classes", reps}});
  }
  return out;
}

Document products_document(const Homology& h, const AInftyStructure& s) {
  Document out = Document::array();
  const std::size_t n = h.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const BitVec v = cup_product(h, s, BitVec::unit(n, x), BitVec::unit(n, y));
      if (v.none()) continue;
      out.push_back(Document{{"x", "[" + h.classes().labels[x] + "]"},
                             {"y", "[" + h.classes().labels[y] + "]"},
                             {"product", format_class(h, v)},
                             {"degree", h.classes().degrees[x] + h.classes().degrees[y] + 1}});
    }
  return out;
}

Document augmentation_header(const Dga& d, std::size_t index, const Augmentation& e) {
  return Document{{"augmentation", index}, {"support", support(d, e)}};
}

}  // namespace

std::string render(const Document& doc, Format format) {
  if (format == Format::Structured) return doc.dump(2) + "\n";
  std::vector<std::string> lines;
  render_text(doc, 0, lines);
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string format_class(const Homology& h, const BitVec& v) {
  if (v.none()) return "0";
  std::string out;
  for (auto c : v.ones()) out += (out.empty() ? "[" : " + [") + h.classes().labels[c] + "]";
  return out;
}

BitVec parse_cochain(const Dga& d, const std::string& spec) {
  BitVec v(d.size());
  std::string token;
  bool any = false;
  auto flush = [&] {
    if (token.empty()) throw ContractError("empty term in class '" + spec + "'");
    if (token != "0") v.flip(d.id(token));
    any = true;
    token.clear();
  };
  for (char c : spec) {
    if (c == '+') {
      flush();
    } else if (c != ' ') {
      token += c;
    }
  }
  flush();
  if (!any) throw ContractError("empty class specification");
  return v;
}

Augmentation select_augmentation(const Dga& d, std::size_t index) {
  const auto augs = enumerate_augmentations(d);
  if (augs.empty()) throw ContractError("no augmentations; linearization unavailable");
  if (index >= augs.size())
    throw ContractError("augmentation index " + std::to_string(index) + " out of range (0.." +
                        std::to_string(augs.size() - 1) + ")");
  return augs[index];
}

Document validate_document(const Dga& d, const std::vector<std::string>& warnings) {
  const ValidationReport r = validate_dga(d);
  Document doc{{"generators", d.size()}, {"modulus", d.modulus()}, {"valid", r.valid()}};
  Document structural = Document::array();
  for (const auto& v : r.structural) structural.push_back(v.message);
  Document violations = Document::array();
  for (const auto& v : r.violations) violations.push_back(v.message);
  doc["structural_errors"] = structural;
  doc["violations"] = violations;
  doc["warnings"] = warnings;
  return doc;
}

Document augmentations_document(const Dga& d) {
  const auto augs = enumerate_augmentations(d);
  Document list = Document::array();
  for (std::size_t a = 0; a < augs.size(); ++a) list.push_back(augmentation_header(d, a, augs[a]));
  Document doc{{"count", augs.size()}, {"augmentations", list}};
  if (augs.empty()) doc["note"] = "no augmentations; linearization unavailable";
  return doc;
}

Document linhom_document(const Dga& d, std::size_t aug) {
  const Augmentation e = select_augmentation(d, aug);
  const LinearizedComplexes lc = linearized_complexes(d, e);
  const Homology chain(lc.chain);
  const Homology cochain(lc.cochain);
  Document doc = augmentation_header(d, aug, e);
  doc["cohomology"] = classes_document(cochain);
  doc["homology"] = classes_document(chain);
  return doc;
}

Document ring_document(const Dga& d, std::size_t aug) {
  const Augmentation e = select_augmentation(d, aug);
  const AInftyStructure s = adjoint_structure(d, e);
  const Homology h = homology_of(s);
  Document doc = augmentation_header(d, aug, e);
  doc["cohomology"] = classes_document(h);
  doc["products"] = products_document(h, s);
  doc["note"] = "products not listed are zero";
  return doc;
}

Document massey_document(const Dga& d, std::size_t aug, const std::vector<std::string>& classes,
                         const MasseyOptions& options) {
  if (classes.size() < 3) throw ContractError("a Massey product needs at least three classes");
  const Augmentation e = select_augmentation(d, aug);
  const AInftyStructure s = adjoint_structure(d, e);
  const Homology h = homology_of(s);
  std::vector<BitVec> cochains;
  std::vector<BitVec> class_vectors;
  Document inputs = Document::array();
  for (const auto& spec : classes) {
    BitVec a = parse_cochain(d, spec);
    if (!h.is_cycle(a)) throw ContractError("'" + spec + "' is not a cocycle");
    if (!s.space.degree_of(a)) throw ContractError("'" + spec + "' is not homogeneous");
    class_vectors.push_back(h.p(a));
    inputs.push_back(Document{{"cochain", spec}, {"class", format_class(h, class_vectors.back())}});
    cochains.push_back(std::move(a));
  }

  const MasseyResult r = classes.size() == 3 ? massey_triple_cochains(h, s, cochains[0], cochains[1], cochains[2])
                                             : massey_higher(h, s, class_vectors, options);
  Document doc = augmentation_header(d, aug, e);
  doc["order"] = classes.size();
  doc["inputs"] = inputs;
  doc["status"] = r.defined() ? "defined" : "undefined";
  if (r.defined()) {
    doc["degree"] = r.degree;
    doc["value"] = format_class(h, r.representative);
    doc["nonzero"] = r.nonzero();
    Document ind = Document::array();
    for (const auto& v : r.indeterminacy) ind.push_back(format_class(h, v));
    doc["indeterminacy"] = ind;
    if (classes.size() > 3) {
      Document values = Document::array();
      for (const auto& v : r.values) values.push_back(format_class(h, v));
      doc["values"] = values;
      doc["systems"] = r.systems;
    }
  } else {
    doc["reason"] = r.reason;
    if (r.witness.any()) doc["witness"] = format_class(h, r.witness);
  }
  doc["truncated"] = r.truncated;
  return doc;
}

Document minimal_document(const Dga& d, std::size_t aug, std::size_t arity) {
  if (arity < 2) throw ContractError("--arity must be at least 2");
  const Augmentation e = select_augmentation(d, aug);
  const AInftyStructure s = adjoint_structure(d, e);
  const Homology h = homology_of(s);
  const MinimalModel mm = transfer_minimal_model(h, s, arity);
  const RelationReport morphism = check_ainfty_morphism(mm.i, mm.mu, s, arity);
  Document doc = augmentation_header(d, aug, e);
  doc["classes"] = classes_document(h);
  Document ops = Document::array();
  for (std::size_t k = 2; k <= arity; ++k) {
    Document entries = Document::array();
    if (const MultilinearMap* mu = mm.mu.op(k))
      for (const auto& [tuple, value] : mu->entries()) {
        Document in = Document::array();
        for (auto c : tuple) in.push_back("[" + h.classes().labels[c] + "]");
        entries.push_back(Document{{"inputs", in}, {"output", format_class(h, value)}});
      }
    ops.push_back(Document{{"arity", k}, {"trees", enumerate_trees(k).size()}, {"entries", entries}});
  }
  doc["mu"] = ops;
  doc["inclusion_is_morphism"] = morphism.ok;
  if (!morphism.ok) throw InternalError("minimal-model inclusion fails the morphism equation: " + morphism.message);
  return doc;
}

Document ordern_document(const Dga& d, std::size_t aug, std::size_t n) {
  if (n < 1) throw ContractError("--n must be at least 1");
  const Augmentation e = select_augmentation(d, aug);
  const OrderNResult r = order_n_cohomology(d, e, n);
  Document doc = augmentation_header(d, aug, e);
  doc["order"] = n;
  doc["words"] = r.words;
  doc["edges"] = r.edges;
  doc["chain_side_matches"] = r.lemma_matches;
  doc["cohomology"] = dims_document(r.dims);
  return doc;
}

Document duality_document(const Dga& d, std::size_t aug) {
  const Augmentation e = select_augmentation(d, aug);
  const AInftyStructure s = adjoint_structure(d, e);
  const LinearizedComplexes lc = linearized_complexes(d, e);
  const Homology chain(lc.chain);
  const Homology cochain = homology_of(s);
  const DualityReport r = duality_search(chain, cochain, s);
  const auto violation = duality_dimension_violation(chain, cochain);

  Document doc = augmentation_header(d, aug, e);
  doc["dimension_relations"] = violation ? *violation : "hold";
  doc["candidates"] = r.candidates;
  if (!r.certificate) {
    doc["certificate"] = nullptr;
    doc["reason"] = r.reason;
    return doc;
  }
  const DualityCertificate& c = *r.certificate;
  Document cert{{"kappa", format_class(chain, c.kappa)}, {"c", format_class(cochain, c.c)}};
  Document complement = Document::array();
  for (const auto& v : c.complement) complement.push_back(format_class(cochain, v));
  cert["complement"] = complement;
  Document gram = Document::array();
  for (const auto& row : c.gram) {
    std::string bits;
    for (std::size_t j = 0; j < row.size(); ++j) bits += row.get(j) ? '1' : '0';
    gram.push_back(bits);
  }
  cert["gram"] = gram;
  Document pairs = Document::array();
  for (const auto& [a, b] : c.pairs) pairs.push_back(complement[a].get<std::string>() + " <-> " + complement[b].get<std::string>());
  cert["pairs"] = pairs;
  doc["certificate"] = cert;
  return doc;
}

Document compare_document(const MirrorVerdict& v) {
  Document doc{{"verdict", v.distinguished ? "DISTINGUISHED" : "INDISTINGUISHABLE-BY-THESE-INVARIANTS"}};
  if (v.distinguished) doc["invariant"] = v.invariant;
  doc["witness"] = v.witness;
  doc["augmentations"] = v.knot.augmentations.size();
  bool truncated = false;
  for (const auto* f : {&v.knot, &v.mirror})
    for (const auto& a : f->augmentations) truncated |= a.truncated;
  doc["truncated"] = truncated;
  if (!v.distinguished) doc["note"] = "equal fingerprints are inconclusive";
  return doc;
}

Document full_report(const Dga& d, const FingerprintOptions& options) {
  const ValidationReport r = validate_dga(d);
  Document doc{{"generators", d.size()}, {"modulus", d.modulus()}, {"valid", r.valid()}};
  if (!r.valid()) return doc;
  const auto augs = enumerate_augmentations(d);
  doc["augmentation_count"] = augs.size();
  if (augs.empty()) {
    doc["note"] = "no augmentations; linearization unavailable";
    return doc;
  }
  Document list = Document::array();
  for (std::size_t a = 0; a < augs.size(); ++a) {
    const AInftyStructure s = adjoint_structure(d, augs[a]);
    const Homology h = homology_of(s);
    Document entry = augmentation_header(d, a, augs[a]);
    entry["cohomology"] = dims_document(h.dims());
    entry["products"] = products_document(h, s);
    list.push_back(entry);
  }
  doc["augmentations"] = list;
  doc["mirror"] = compare_document(compare_mirror(d, options));
  return doc;
}

}  // namespace lch
