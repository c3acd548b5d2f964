#pragma once

#include <cstddef>
#include <vector>

#include "weightvar/groebner.hpp"
#include "weightvar/hilbert.hpp"
#include "weightvar/kirwan.hpp"
#include "weightvar/parallel.hpp"
#include "weightvar/poly.hpp"

namespace weightvar {

/// e_i(x) − e_i(u) for i = 1..n, then e_1(u).
std::vector<Poly> flag_relations(int n);

/// The same relations in the block ring: Σ_{p+q=i} a_p b_q − e_i(u) for
/// i = 1..n (a_0 = b_0 = 1), then e_1(u).
std::vector<Poly> grassmannian_relations(int n, int k);

struct PresentationOptions {
  MonomialOrder order = MonomialOrder::Grevlex;
  bool prune_kernel = false;
  bool skip_regularity = false;
  std::size_t budget = 0;  // 0 selects default_budget()
  Exec exec = Exec::Parallel;
};

struct KernelGenerator {
  KernelCertificate certificate;
  /// The class as an element of the presentation's ring (equal to
  /// certificate.poly in the flag case, rewritten in a/b otherwise).
  Poly generator;
};

struct QuotientPresentation {
  ReductionInput input;
  GradedIdeal ideal;
  std::size_t num_relations = 0;  // ideal.generators starts with the relations
  KernelSet kernel;
  std::vector<KernelGenerator> kernel_generators;
  GroebnerBasis groebner;
  /// Entry d is the coefficient of t^{2d}.
  std::vector<Integer> poincare;

  const Ring& ring() const noexcept { return ideal.ring; }
};

/// Validates, enumerates the kernel, and computes the Gröbner basis and
/// Poincaré polynomial of the generic quotient.
QuotientPresentation flag_quotient(const ReductionInput& input, const PresentationOptions& opts = {});

/// The Grassmannian quotient in the a/b/u variables.
QuotientPresentation grassmannian_quotient(const ReductionInput& input, const PresentationOptions& opts = {});

Poly normal_form(const Poly& f, const QuotientPresentation& pres);

/// Normal form of (1−x_1)^n (1−x_2)^{n−1} ⋯ (1−x_{n−1})^2 split into
/// homogeneous components; entry d has algebraic degree d.
std::vector<Poly> chern_class(int n, const QuotientPresentation& pres);

}  // namespace weightvar
