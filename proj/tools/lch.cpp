#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lch/errors.hpp"
#include "lch/families.hpp"
#include "lch/io.hpp"
#include "lch/report.hpp"

using namespace lch;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  return out;
}

std::vector<int> parse_params(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ContractError("invalid parameter '" + part + "'");
    }
  }
  return out;
}

ParseResult load(const std::string& path) {
  ParseResult r = parse_dga(read_file(path));
  for (const auto& w : r.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  return r;
}

Dga load_valid(const std::string& path) {
  ParseResult r = load(path);
  const ValidationReport v = validate_dga(r.dga);
  if (!v.valid()) {
    const auto& first = v.structural.empty() ? v.violations.front() : v.structural.front();
    throw ContractError(path + ": invalid DGA: " + first.message);
  }
  return std::move(r.dga);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linearized Legendrian contact homology over GF(2)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::size_t max_systems = MasseyOptions{}.max_systems;
  std::size_t threads = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--max-systems", max_systems, "Cap on higher-Massey defining systems")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for per-augmentation work")->capture_default_str();

  std::string file;
  std::size_t aug = 0;
  auto with_file = [&](CLI::App* cmd) { cmd->add_option("FILE", file, "DGA file")->required(); };
  auto with_aug = [&](CLI::App* cmd) {
    with_file(cmd);
    cmd->add_option("--aug", aug, "Augmentation index (from 'augs')")->required();
  };

  auto* validate = app.add_subcommand("validate", "Check degrees and d^2 = 0");
  with_file(validate);
  auto* augs = app.add_subcommand("augs", "Enumerate graded augmentations");
  with_file(augs);
  auto* linhom = app.add_subcommand("linhom", "Linearized homology and cohomology");
  with_aug(linhom);
  auto* ring = app.add_subcommand("ring", "Cup products on linearized cohomology");
  with_aug(ring);
  std::string class_spec;
  auto* massey = app.add_subcommand("massey", "Massey product of cocycles");
  with_aug(massey);
  massey->add_option("--classes", class_spec, "Comma-separated cocycles, each a '+'-sum of generators")
      ->required();
  std::size_t arity = 3;
  auto* minimal = app.add_subcommand("minimal", "Minimal model by homotopy transfer");
  with_aug(minimal);
  minimal->add_option("--arity", arity, "Highest arity")->capture_default_str();
  std::size_t order = 2;
  auto* ordern = app.add_subcommand("ordern", "Order-n linearized cohomology");
  with_aug(ordern);
  ordern->add_option("--n", order, "Order")->capture_default_str();
  auto* duality = app.add_subcommand("duality", "Duality pairing certificate");
  with_aug(duality);
  auto* mirror = app.add_subcommand("mirror", "Emit the mirror DGA");
  with_file(mirror);
  std::string family_name;
  std::string params;
  auto* family = app.add_subcommand("family", "Emit a family DGA");
  family->add_option("NAME", family_name, "cupex or masseyex")->required();
  family->add_option("--params", params, "K,L,M or K,L,M,N")->required();
  std::size_t massey_order = FingerprintOptions{}.massey_order;
  auto* compare = app.add_subcommand("compare-mirror", "Compare knot and mirror fingerprints");
  with_file(compare);
  compare->add_option("--massey-order", massey_order, "Highest Massey order in fingerprints")
      ->capture_default_str();
  auto* report = app.add_subcommand("report", "Full report");
  with_file(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const Format format = format_name == "structured" ? Format::Structured : Format::Text;
  MasseyOptions massey_options;
  massey_options.max_systems = max_systems;
  FingerprintOptions fingerprint_options;
  fingerprint_options.massey = massey_options;
  fingerprint_options.threads = threads;
  fingerprint_options.massey_order = massey_order;

  try {
    if (validate->parsed()) {
      ParseResult r = load(file);
      const Document doc = validate_document(r.dga, r.warnings);
      std::cout << render(doc, format);
      return doc["valid"].get<bool>() ? 0 : 1;
    }
    if (mirror->parsed()) {
      std::cout << serialize_dga(mirror_dga(load(file).dga));
      return 0;
    }
    if (family->parsed()) {
      FamilyResult r = generate_family(family_name, parse_params(params));
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << serialize_dga(r.dga);
      return 0;
    }

    const Dga d = load_valid(file);
    Document doc;
    if (augs->parsed()) doc = augmentations_document(d);
    if (linhom->parsed()) doc = linhom_document(d, aug);
    if (ring->parsed()) doc = ring_document(d, aug);
    if (massey->parsed()) doc = massey_document(d, aug, split(class_spec, ','), massey_options);
    if (minimal->parsed()) doc = minimal_document(d, aug, arity);
    if (ordern->parsed()) doc = ordern_document(d, aug, order);
    if (duality->parsed()) doc = duality_document(d, aug);
    if (compare->parsed()) doc = compare_document(compare_mirror(d, fingerprint_options));
    if (report->parsed()) doc = full_report(d, fingerprint_options);
    std::cout << render(doc, format);
    return 0;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
