#pragma once

#include <utility>
#include <vector>

#include "ohasse/algebra/fp_poly.hpp"
#include "ohasse/algebra/function_field.hpp"
#include "ohasse/algebra/rational_field.hpp"

namespace ohasse {

// Roots in the coefficient field with multiplicity (ascending), plus the
// degrees of what is left once every linear factor is divided out.
template <Field F>
struct RootReport {
    std::vector<std::pair<typename F::Element, unsigned>> roots;
    std::vector<unsigned> residual_degrees;
};

// Square-free decomposition f = u * prod g_i^(m_i), g_i pairwise coprime and
// square-free, m_i ascending. In characteristic p a part whose derivative
// vanishes is split further only when p-th roots of coefficients are available
// (finite fields); over F_p(t) such a part is returned whole.
template <Field F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& f);

// Residual degrees: over finite fields, degrees of the irreducible factors
// (with multiplicity); over Q and F_p(t), degrees of the square-free
// decomposition blocks (with multiplicity), which need not be irreducible.
RootReport<FiniteField> find_roots(const FqPoly& f);
RootReport<RationalField> find_roots(const Poly<RationalField>& f);
RootReport<RationalFunctionField> find_roots(const Poly<RationalFunctionField>& f);

}  // namespace ohasse
