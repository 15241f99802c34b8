#pragma once

#include "schur/idealgen.hpp"
#include "schur/linalg.hpp"
#include "schur/rootdata.hpp"
#include "schur/weylgroup.hpp"

#include <string>
#include <vector>

namespace schur {

/// Classical representation matrices of e_i, f_i, H_a for gl_n on a weight basis.
struct RepBlock {
  /// Highest weights of the irreducible summands, in block order.
  std::vector<Weight> components;
  std::vector<std::string> labels;
  /// Weight of each basis vector.
  std::vector<Weight> weights;
  std::vector<QMatrix> e, f, H;

  std::size_t dim() const { return weights.size(); }
};

/// Gelfand-Tsetlin pattern, row k (top row first) holding n - k entries.
using Pattern = std::vector<IntVector>;

std::vector<Pattern> gt_patterns(const Weight& lambda);
std::string to_string(const Pattern& p);

/// L(lambda) for the gl datum; throws std::invalid_argument for other data or non-dominant lambda.
RepBlock build_block(const RootDatum& d, const Weight& lambda);
/// Block-diagonal sum; throws std::invalid_argument on an empty list.
RepBlock direct_sum(const std::vector<RepBlock>& blocks);
/// direct_sum of build_block over pi.
RepBlock model_for(const RootDatum& d, const WeightSet& pi);

/// p(H_1, ..., H_n) for commuting matrices.
QMatrix evaluate_at(const HPolynomial& p, const std::vector<QMatrix>& h);

/// Relations of the classical idempotent presentation with 1_lambda taken as the
/// classical idempotent polynomials evaluated at the H-matrices, plus the defining
/// relations of U in every block and the ranks of the 1_lambda.
CheckReport check_presentation(const RootDatum& d, const RepBlock& model, const WeightSet& pi);
/// Every generator evaluated at the H-matrices is zero.
CheckReport check_ideal_vanishing(const RepBlock& model, const std::vector<HPolynomial>& generators);

/// SCHUR_MAX_DIM, 4096 when unset or unparsable.
std::size_t max_closure_dim();
/// Dimension of the unital algebra generated by e_i, f_i, H_a; throws std::length_error past `cap`.
std::size_t closure_dimension(const RepBlock& model, std::size_t cap = max_closure_dim());

}  // namespace schur
