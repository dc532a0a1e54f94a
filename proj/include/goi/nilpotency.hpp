// Nilpotency of Φ(N ⊗ 1) on the finite basis (π, a_0..a_p; σ; e), and the
// check that it matches the machine's verdict.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "goi/integer_rep.hpp"
#include "goi/ndpm.hpp"
#include "goi/operators.hpp"

namespace goi {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultCapacity = 5'000'000;

// GOI_NILPOTENCY_CAP if set to a positive integer, else kDefaultCapacity.
std::uint64_t capacity_from_environment();

struct ProductDynamics {
  ProductDynamics(const Observation& o, BinaryWord w);

  const Observation* observation;
  BinaryWord word;
  IntegerGraph graph;

  // 6 (k+1)^(p+1) (p+1)! 6^p |Q ∪ B|
  std::uint64_t dimension() const;
};

// N first, then Φ.
std::vector<Weighted> step_product(const ProductDynamics& dyn, const BasisVector& v);

struct NilpotencyResult {
  bool nilpotent = true;
  std::uint64_t degree = 0;           // smallest n with (Φ(N⊗1))^n = 0, when nilpotent
  std::vector<BasisVector> cycle;     // a witness when not nilpotent
  std::uint64_t basis_size = 0;
  std::uint64_t edges = 0;
};

// Depth-first search over every basis vector of the successor digraph.
// Coefficients are positive, so nothing cancels and nilpotency is acyclicity.
NilpotencyResult is_nilpotent(const ProductDynamics& dyn, std::uint64_t cap = kDefaultCapacity);

struct MatrixNilpotency {
  bool nilpotent = true;
  std::uint64_t degree = 0;
  std::uint64_t basis_size = 0;
  std::uint64_t nonzeros = 0;
  bool power_checked = false;  // the vanishing power was confirmed by multiplication
};

// Independent oracle: materializes the whole sparse matrix with exact
// coefficients, then runs Kahn's algorithm. When the dimension is at most
// power_check_limit and the matrix is nilpotent, it also multiplies the
// all-ones vector until it vanishes and confirms the degree.
MatrixNilpotency is_nilpotent_matrix(const ProductDynamics& dyn, std::uint64_t cap = kDefaultCapacity,
                                     std::uint64_t power_check_limit = 20'000);

struct CrossvalReport {
  Verdict verdict = Verdict::Accept;
  bool nilpotent = false;
  std::uint64_t degree = 0;
  std::uint64_t dimension = 0;
  bool degree_within_bound = true;
  bool acyclic_everywhere = false;
  std::optional<bool> matrix_nilpotent;
  std::optional<std::uint64_t> matrix_degree;
  bool consistent = false;
};

struct CrossvalOptions {
  bool with_matrix = false;
  std::uint64_t cap = kDefaultCapacity;
};

// Runs the machine, normalizes and encodes it, and checks that it accepts
// exactly when the product is nilpotent.
CrossvalReport crossval(const Machine& m, const PseudoConfiguration& c, const BinaryWord& word,
                        const CrossvalOptions& options = {});

}  // namespace goi
