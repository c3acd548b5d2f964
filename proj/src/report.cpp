#include "weightvar/report.hpp"

#include <sstream>

#include "weightvar/errors.hpp"
#include "weightvar/schubert.hpp"

namespace weightvar {

namespace {

std::string tuple(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

nlohmann::json rational_array(const std::vector<Rational>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

std::vector<Rational> rationals_from(const nlohmann::json& arr) {
  std::vector<Rational> out;
  for (const auto& item : arr) out.push_back(parse_rational(item.get<std::string>()));
  return out;
}

std::string describe(const ReductionInput& in) {
  std::ostringstream os;
  if (in.is_grassmannian())
    os << "Gr(" << in.k << "," << in.n() << "), nu = (" << to_string(in.nu1) << ", " << to_string(in.nu2)
       << "), mu = " << tuple(in.mu);
  else
    os << "generic SU(" << in.n() << ") orbit, lambda = " << tuple(in.spectrum) << ", mu = " << tuple(in.mu);
  return os.str();
}

std::string variables(const Ring& ring) {
  std::string out;
  for (int s = 0; s < ring.num_vars(); ++s) {
    out += (s ? ", " : "") + ring.var_name(s);
    if (ring.weight(s) != 1) out += "(" + std::to_string(ring.weight(s)) + ")";
  }
  return out;
}

}  // namespace

std::string text_report(const QuotientPresentation& pres, const ReportOptions& opts) {
  const Ring& ring = pres.ring();
  std::ostringstream os;
  os << "input: " << describe(pres.input) << "\n";
  os << "ring: " << variables(ring) << "\n";
  os << "order: " << order_name(pres.groebner.order) << "\n";
  os << "relations:\n";
  for (std::size_t i = 0; i < pres.num_relations; ++i) os << "  " << format(pres.ideal.generators[i], ring) << "\n";
  os << "kernel certificates: " << pres.kernel.certificates.size() << "\n";
  os << "kernel generators: " << pres.kernel_generators.size();
  if (!pres.kernel_generators.empty()) {
    const int d = pres.kernel.min_degree();
    os << " (" << pres.kernel.generators_of_degree(d).size() << " of minimal degree " << 2 * d << ")";
  }
  os << "\n";
  if (opts.emit_certificates) {
    for (const auto& g : pres.kernel_generators) {
      const auto& c = g.certificate;
      os << "  v=" << c.v.to_string() << " tau=" << c.tau.to_string() << " k=" << c.k_witness << ": "
         << format(g.generator, ring) << "\n";
    }
  }
  os << "groebner basis: " << pres.groebner.elements.size() << " elements\n";
  for (const auto& g : pres.groebner.elements) os << "  " << format(g, ring) << "\n";
  if (opts.chern && ring.scheme == Ring::Scheme::Flag) {
    const auto parts = chern_class(ring.n, pres);
    os << "chern:\n";
    for (std::size_t d = 0; d < parts.size(); ++d) os << "  c(" << 2 * d << "): " << format(parts[d], ring) << "\n";
  }
  os << "poincare: " << format_poincare(pres.poincare) << "\n";
  return os.str();
}

nlohmann::json to_json(const QuotientPresentation& pres, const ReportOptions& opts) {
  using nlohmann::json;
  const Ring& ring = pres.ring();
  const auto& in = pres.input;
  json doc;
  doc["format"] = kJsonFormat;
  doc["version"] = kJsonVersion;

  json inputs;
  inputs["kind"] = in.is_grassmannian() ? "grassmannian" : "flag";
  inputs["n"] = in.n();
  if (in.is_grassmannian()) {
    inputs["k"] = in.k;
    inputs["nu1"] = to_string(in.nu1);
    inputs["nu2"] = to_string(in.nu2);
  } else {
    inputs["lambda"] = rational_array(in.spectrum);
  }
  inputs["mu"] = rational_array(in.mu);
  doc["inputs"] = inputs;

  json vars = json::array();
  for (int s = 0; s < ring.num_vars(); ++s) vars.push_back({{"name", ring.var_name(s)}, {"weight", ring.weight(s)}});
  doc["ring"] = {{"variables", vars}, {"order", std::string(order_name(pres.groebner.order))}};

  json rel = json::array();
  for (std::size_t i = 0; i < pres.num_relations; ++i) rel.push_back(format(pres.ideal.generators[i], ring));
  doc["relations"] = rel;

  json gens = json::array();
  for (const auto& g : pres.kernel_generators) {
    const auto& c = g.certificate;
    gens.push_back({{"poly", format(c.poly)},
                    {"generator", format(g.generator, ring)},
                    {"v", c.v.to_string()},
                    {"tau", c.tau.to_string()},
                    {"k", c.k_witness}});
  }
  doc["kernel_generators"] = gens;

  json gb = json::array();
  for (const auto& g : pres.groebner.elements) gb.push_back(format(g, ring));
  doc["groebner_basis"] = gb;

  json poincare = json::array();
  for (std::size_t d = 0; d < pres.poincare.size(); ++d)
    poincare.push_back({{"degree", 2 * d}, {"dimension", pres.poincare[d].get_str()}});
  doc["poincare"] = poincare;

  if (opts.chern && ring.scheme == Ring::Scheme::Flag) {
    const auto parts = chern_class(ring.n, pres);
    json chern = json::array();
    for (std::size_t d = 0; d < parts.size(); ++d) chern.push_back({{"degree", 2 * d}, {"class", format(parts[d], ring)}});
    doc["chern"] = chern;
  }
  return doc;
}

ReductionInput input_from_json(const nlohmann::json& doc) {
  if (doc.value("format", "") != kJsonFormat) throw ParseError("not a weightvar presentation document");
  if (doc.value("version", 0) != kJsonVersion)
    throw ParseError("unsupported document version " + std::to_string(doc.value("version", 0)));
  const auto& in = doc.at("inputs");
  auto mu = rationals_from(in.at("mu"));
  if (in.at("kind").get<std::string>() == "grassmannian")
    return ReductionInput::grassmannian(in.at("n").get<int>(), in.at("k").get<int>(),
                                        parse_rational(in.at("nu1").get<std::string>()),
                                        parse_rational(in.at("nu2").get<std::string>()), std::move(mu));
  return ReductionInput::generic(rationals_from(in.at("lambda")), std::move(mu));
}

std::vector<std::string> verify_certificates(const nlohmann::json& doc) {
  const ReductionInput in = input_from_json(doc);
  const Ring flag = Ring::flag(in.n());
  std::vector<std::string> failures;
  std::size_t index = 0;
  for (const auto& g : doc.at("kernel_generators")) {
    const std::string where = "kernel_generators[" + std::to_string(index++) + "]";
    try {
      const KernelPair pair{Permutation::parse(g.at("v").get<std::string>()),
                            Permutation::parse(g.at("tau").get<std::string>()), g.at("k").get<int>()};
      if (!certificate_holds(pair, in.spectrum, in.mu)) failures.push_back(where + ": inequality does not hold");
      const Poly recorded = parse_poly(g.at("poly").get<std::string>(), flag);
      if (recorded != kernel_class(pair.v, pair.tau)) failures.push_back(where + ": polynomial does not match");
    } catch (const std::exception& e) {
      failures.push_back(where + ": " + e.what());
    }
  }
  return failures;
}

}  // namespace weightvar
