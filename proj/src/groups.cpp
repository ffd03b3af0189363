#include "hirsch/groups.hpp"

#include "hirsch/errors.hpp"

namespace hirsch {

namespace {

IntMatrix relation_matrix(const FGAbelianGroup& g) {
  const Index n = g.generator_count();
  IntMatrix r = IntMatrix::Constant(n, n, Integer(0));
  for (Index i = 0; i < n; ++i) r(i, i) = g.generator_order(i);
  return r;
}

IntMatrix kernel_of(const IntMatrix& m) {
  if (m.cols() == 0) return IntMatrix(0, 0);
  if (m.rows() == 0) return IntMatrix::Identity(m.cols(), m.cols());
  return solve_integer(m, IntVector::Constant(m.rows(), Integer(0)))->kernel;
}

/// Generators of {x : m x in span(rel)}.
IntMatrix preimage_of_span(const IntMatrix& m, const IntMatrix& rel) {
  IntMatrix joined(m.rows(), m.cols() + rel.cols());
  joined << m, -rel;
  return kernel_of(joined).topRows(m.cols());
}

}  // namespace

void GroupHom::validate() const {
  if (matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count()) {
    throw DomainError("homomorphism matrix is " + std::to_string(matrix.rows()) + "x" +
                      std::to_string(matrix.cols()) + ", expected " +
                      std::to_string(target.generator_count()) + "x" +
                      std::to_string(source.generator_count()));
  }
  for (Index j = 0; j < matrix.cols(); ++j) {
    const Integer d = source.generator_order(j);
    for (Index i = 0; i < matrix.rows(); ++i) {
      const Integer e = target.generator_order(i);
      const Integer v = d * matrix(i, j);
      const bool ok = e.is_zero() ? v.is_zero() : (v % e).is_zero();
      if (!ok) {
        throw DomainError("homomorphism " + source.to_string() + " -> " + target.to_string() +
                          " is not well defined on generator " + std::to_string(j));
      }
    }
  }
}

GroupHom GroupHom::multiplication(const FGAbelianGroup& g, const Integer& k) {
  const Index n = g.generator_count();
  return GroupHom{g, g, IntMatrix::Identity(n, n) * k};
}

GroupHom GroupHom::zero(const FGAbelianGroup& source, const FGAbelianGroup& target) {
  return GroupHom{source, target,
                  IntMatrix::Constant(target.generator_count(), source.generator_count(), Integer(0))};
}

FGAbelianGroup quotient_group(const IntMatrix& relations) {
  const Index n = relations.rows();
  if (relations.cols() == 0 || n == 0) return FGAbelianGroup::free(n);
  const auto snf = smith_normal_form(relations);
  return FGAbelianGroup::from_cyclic(n - snf.rank, snf.invariant_factors());
}

FGAbelianGroup tor(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Integer> orders;
  for (const auto& d : a.torsion()) {
    for (const auto& e : b.torsion()) orders.push_back(gcd(d, e));
  }
  return FGAbelianGroup::from_cyclic(0, std::move(orders));
}

FGAbelianGroup cokernel(const GroupHom& h) {
  h.validate();
  const IntMatrix rel = relation_matrix(h.target);
  IntMatrix joined(rel.rows(), rel.cols() + h.matrix.cols());
  joined << rel, h.matrix;
  return quotient_group(joined);
}

FGAbelianGroup kernel(const GroupHom& h) {
  h.validate();
  // x in Z^m with h(x) = 0 in the target, modulo the relations of the source
  const IntMatrix gens = preimage_of_span(h.matrix, relation_matrix(h.target));
  if (gens.cols() == 0) return {};
  return quotient_group(preimage_of_span(gens, relation_matrix(h.source)));
}

bool is_injective(const GroupHom& h) { return kernel(h).is_trivial(); }

HypothesisReport check_hypotheses(const HypothesisInstance& inst) {
  HypothesisReport r;
  r.condition = "u_i injective and Tor(H^{i+1}(X), Coker u_i) = 0 for 1 <= i < m with pi_i != 0";
  for (const auto& [i, h] : inst.hurewicz) {
    if (i < 1) throw DomainError("Hurewicz degree " + std::to_string(i) + " below 1");
  }
  for (int i = 1; i < inst.m; ++i) {
    DegreeVerdict v;
    v.degree = i;
    const auto c = inst.cohomology.find(i + 1);
    if (c != inst.cohomology.end()) v.cohomology = c->second;
    const auto it = inst.hurewicz.find(i);
    if (it == inst.hurewicz.end() || it->second.source.is_trivial()) {
      v.note = "pi_i = 0";
      r.degrees.push_back(std::move(v));
      continue;
    }
    const GroupHom& u = it->second;
    v.checked = true;
    v.kernel = kernel(u);
    v.injective = v.kernel.is_trivial();
    v.cokernel = cokernel(u);
    v.tor = tor(v.cohomology, v.cokernel);
    v.passed = v.injective && v.tor.is_trivial();
    if (!v.injective) {
      v.note = "u_i has kernel " + v.kernel.to_string();
    } else if (!v.tor.is_trivial()) {
      v.note = "Tor(" + v.cohomology.to_string() + ", " + v.cokernel.to_string() + ") = " + v.tor.to_string();
    }
    if (i == 1) v.note += std::string(v.note.empty() ? "" : "; ") + "u_1 is assumed an isomorphism, checked by the same rule";
    if (!v.passed && r.passed) {
      r.passed = false;
      r.failed_degree = i;
    }
    r.degrees.push_back(std::move(v));
  }
  return r;
}

HypothesisInstance unitary_instance(int n, std::map<int, FGAbelianGroup> cohomology) {
  if (n < 1) throw DomainError("U(n) needs n >= 1");
  if (n > 20) throw SizeError("U(n) instance above n = 20");
  HypothesisInstance inst;
  inst.m = 2 * n;
  inst.cohomology = std::move(cohomology);
  Integer fact = 1;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) fact *= Integer(i - 1);
    const auto z = FGAbelianGroup::free(1);
    inst.hurewicz.emplace(2 * i - 1, GroupHom{z, z, IntMatrix::Constant(1, 1, fact)});
  }
  return inst;
}

}  // namespace hirsch
