#include "weightvar/presentation.hpp"

#include <stdexcept>

#include "weightvar/errors.hpp"
#include "weightvar/symmetric.hpp"

namespace weightvar {

std::vector<Poly> flag_relations(int n) {
  if (n < 2) throw std::invalid_argument("flag_relations requires n >= 2");
  std::vector<Poly> out;
  for (int i = 1; i <= n; ++i) out.push_back(elementary_symmetric_x(n, i) - elementary_symmetric_u(n, i));
  out.push_back(elementary_symmetric_u(n, 1));
  return out;
}

std::vector<Poly> grassmannian_relations(int n, int k) {
  Ring::block(n, k);  // range check
  auto a = [&](int p) { return p == 0 ? Poly::constant(n, 1) : p <= k ? Poly::variable(n, p - 1) : Poly(n); };
  auto b = [&](int q) { return q == 0 ? Poly::constant(n, 1) : q <= n - k ? Poly::variable(n, k + q - 1) : Poly(n); };
  std::vector<Poly> out;
  for (int i = 1; i <= n; ++i) {
    Poly r(n);
    for (int p = 0; p <= i; ++p) r += a(p) * b(i - p);
    out.push_back(r - elementary_symmetric_u(n, i));
  }
  out.push_back(elementary_symmetric_u(n, 1));
  return out;
}

namespace {

QuotientPresentation assemble(const ReductionInput& input, Ring ring, std::vector<Poly> relations, KernelSet kernel,
                              const PresentationOptions& opts) {
  QuotientPresentation pres;
  pres.input = input;
  pres.ideal.ring = ring;
  pres.ideal.order = opts.order;
  pres.num_relations = relations.size();
  pres.ideal.generators = std::move(relations);
  for (auto idx : kernel.generators) {
    const auto& cert = kernel.certificates[idx];
    Poly g = ring.scheme == Ring::Scheme::Block ? rewrite_in_block_esp(cert.poly, ring.k) : cert.poly;
    pres.ideal.generators.push_back(g);
    pres.kernel_generators.push_back(KernelGenerator{cert, std::move(g)});
  }
  pres.kernel = std::move(kernel);
  pres.groebner = groebner(pres.ideal, GroebnerOptions{opts.budget});
  pres.poincare = hilbert_series(pres.groebner);
  return pres;
}

}  // namespace

QuotientPresentation flag_quotient(const ReductionInput& input, const PresentationOptions& opts) {
  if (input.is_grassmannian()) throw std::invalid_argument("flag_quotient expects a generic spectrum");
  validate(input, ValidationOptions{opts.skip_regularity});
  auto kernel = kernel_pairs(input, KernelOptions{opts.prune_kernel, opts.exec});
  const int n = input.n();
  return assemble(input, Ring::flag(n), flag_relations(n), std::move(kernel), opts);
}

QuotientPresentation grassmannian_quotient(const ReductionInput& input, const PresentationOptions& opts) {
  if (!input.is_grassmannian()) throw std::invalid_argument("grassmannian_quotient expects Grassmannian data");
  validate(input, ValidationOptions{opts.skip_regularity});
  auto kernel = grassmannian_kernel(input, KernelOptions{opts.prune_kernel, opts.exec});
  const int n = input.n();
  return assemble(input, Ring::block(n, input.k), grassmannian_relations(n, input.k), std::move(kernel), opts);
}

Poly normal_form(const Poly& f, const QuotientPresentation& pres) { return normal_form(f, pres.groebner); }

std::vector<Poly> chern_class(int n, const QuotientPresentation& pres) {
  if (pres.ring().scheme != Ring::Scheme::Flag || pres.ring().n != n)
    throw std::invalid_argument("chern_class requires a generic presentation of matching size");
  Poly c = Poly::constant(n, 1);
  for (int i = 1; i <= n - 1; ++i) c *= pow(Poly::constant(n, 1) - Poly::x(n, i), n + 1 - i);
  const Poly nf = normal_form(c, pres);
  std::vector<Poly> parts;
  for (int d = 0; d <= std::max(0, nf.degree()); ++d) parts.push_back(nf.homogeneous_component(d));
  return parts;
}

}  // namespace weightvar
