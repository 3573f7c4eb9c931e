#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "borelreg/ideal.hpp"
#include "borelreg/monomial.hpp"

namespace borelreg {

/// 1 = d_0 | d_1 | ... | d_s, strictly increasing.
class DSequence {
 public:
  /// Throws std::invalid_argument unless the entries form such a chain.
  explicit DSequence(std::vector<Exponent> entries);

  /// d_t = p^t for t = 0 .. top.
  static DSequence powers(Exponent p, std::size_t top);

  const std::vector<Exponent>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Exponent operator[](std::size_t t) const { return entries_[t]; }
  std::size_t top() const { return entries_.size() - 1; }

  /// "1|2|4|12"
  std::string to_string() const;

  friend bool operator==(const DSequence&, const DSequence&) = default;

 private:
  std::vector<Exponent> entries_;
};

/// a = sum_t a_t d_t with 0 <= a_t < d_{t+1}/d_t below the top index.
struct DDecomposition {
  std::vector<Exponent> digits;
  Exponent value = 0;

  /// max { t : a_t > 0 }, nullopt for 0.
  std::optional<std::size_t> top_index() const;
  friend bool operator==(const DDecomposition&, const DDecomposition&) = default;
};

/// Greedy from the top digit down.
DDecomposition d_decompose(Exponent a, const DSequence& d);
/// Digit-wise a_t <= b_t.
bool leq_d(Exponent a, Exponent b, const DSequence& d);

/// Generator-level d-fixed test: for every u in G(I), j < i and
/// 0 < t <=_d nu_i(u), u x_j^t / x_i^t lies in I.
bool is_d_fixed(const MonomialIdeal& ideal, const DSequence& d);

struct DFixedViolation {
  Monomial generator;
  std::size_t i = 0;
  std::size_t j = 0;
  Exponent t = 0;
};
std::optional<DFixedViolation> d_fixed_violation(const MonomialIdeal& ideal, const DSequence& d);

/// <x_var^alpha>_d = prod_t (x_1^{d_t}, ..., x_var^{d_t})^{alpha_t} in
/// `ambient` variables.
MonomialIdeal principal_d_fixed(std::size_t ambient, std::size_t var, Exponent alpha,
                                const DSequence& d);

/// reg <x_n^alpha>_d = alpha_s d_s + (n - 1)(d_s - 1) for n >= 2. For a single
/// variable the ideal is (x_1^alpha), with regularity alpha.
Exponent reg_principal_d_fixed(std::size_t ambient, Exponent alpha, const DSequence& d);

/// J with Soc(S / <x_n^alpha>_d) = (J + I) / I:
///   J = sum over t with alpha_t > 0 of
///       (x_1 ... x_n)^{d_t - 1} (m^[d_t])^{alpha_t - 1} prod_{j > t} (m^[d_j])^{alpha_j}.
/// For a single variable J = (x_1^{alpha - 1}).
MonomialIdeal socle_principal_d_fixed(std::size_t ambient, Exponent alpha, const DSequence& d);

struct VariablePower {
  std::size_t var = 0;  ///< 0-based
  Exponent exponent = 0;
  friend bool operator==(const VariablePower&, const VariablePower&) = default;
};

/// Generators x_{i_1}^{alpha_1}, ..., x_{i_r}^{alpha_r} of a d-fixed ideal.
/// After normalize_spec: i_1 < ... < i_r and alpha_1 < ... < alpha_r.
struct VariablePowerSpec {
  std::size_t ambient = 0;
  std::vector<VariablePower> pairs;

  std::string to_string() const;
  friend bool operator==(const VariablePowerSpec&, const VariablePowerSpec&) = default;
};

/// Drops every pair dominated by another: <x_j^alpha>_d lies in <x_j'^beta>_d
/// when j <= j' and alpha >= beta. Throws std::invalid_argument on an empty
/// list, a zero exponent, or a variable outside the ambient.
VariablePowerSpec normalize_spec(std::size_t ambient, std::vector<VariablePower> pairs);
bool is_normalized(const VariablePowerSpec& spec);

/// sum_q <x_{i_q}^{alpha_q}>_d. Throws std::invalid_argument on an
/// unnormalized spec.
MonomialIdeal dfixed_from_powers(const VariablePowerSpec& spec, const DSequence& d);

/// Admissibility rule for the gamma tuples.
enum class GammaRule {
  /// Partial sums digit-wise bounded by alpha_q (no carries), total digits
  /// equal to alpha_q's. Reproduces the ideal exactly.
  kDigitwise,
  /// Partial sums compared with <=_d after carrying; admits carry tuples
  /// whose products fall outside the ideal.
  kPartialSums,
};

/// Tuples (gamma_1, ..., gamma_q) with gamma_e <=_d alpha_q,
/// gamma_1 + ... + gamma_i < alpha_i and <_d alpha_q for i < q, and
/// gamma_1 + ... + gamma_q = alpha_q. `q` is 1-based.
struct GammaFamily {
  std::size_t q = 0;
  std::vector<std::vector<Exponent>> tuples;  ///< sorted lexicographically
};

GammaFamily gamma_families(const VariablePowerSpec& spec, const DSequence& d, std::size_t q,
                           GammaRule rule = GammaRule::kDigitwise);

/// I^{(q)} = sum over the gamma family of prod_e prod_t (n_e^[d_t])^{gamma_et},
/// where n_e = {x_{i_{e-1}+1}, ..., x_{i_e}}.
MonomialIdeal gamma_component(const VariablePowerSpec& spec, const DSequence& d, std::size_t q,
                              GammaRule rule = GammaRule::kDigitwise);

struct DFixedDecomposition {
  std::vector<MonomialIdeal> components;  ///< I^{(1)}, ..., I^{(r)}
  MonomialIdeal total;
};

DFixedDecomposition dfixed_decomposition(const VariablePowerSpec& spec, const DSequence& d,
                                         GammaRule rule = GammaRule::kDigitwise);

/// Which coefficient the recursive chi branch compares alpha_{q+m-2, s_{q+m-2}}
/// against.
enum class BranchRule {
  /// alpha_{q+m-1, s_{q+m-2}}: the next generator's digit at the previous
  /// top index. Agrees with the socle enumeration.
  kPreviousTopDigit,
  /// alpha_{q+m-1, s_{q+m-1}}: the next generator's own top digit.
  kOwnTopDigit,
};

enum class BlockBranch { kDirect, kRecursive };

struct Block {
  std::size_t first = 0;  ///< 0-based generator index q_{j-1}
  std::size_t last = 0;   ///< 0-based generator index q_j - 1
  std::size_t top = 0;    ///< common s_q
  std::size_t gap = 0;    ///< i_{q_j} - i_{q_{j-1}}, with i_{q_0} = 0
  BlockBranch branch = BlockBranch::kDirect;
  Exponent chi = 0;
};

struct BlockStructure {
  std::vector<DDecomposition> decompositions;  ///< per generator
  std::vector<Block> blocks;
  Exponent chi_sum() const;
};

/// Groups generators by equal top digit index and evaluates chi_j: the
/// direct form (d - 1) gap + d (alpha_{q_j, s} - 1) for gaps >= 2, and
/// the pairwise recursion over maximal runs of gap-1 blocks otherwise. A run
/// starting at the first generator treats the missing predecessor as
/// chi = alpha_1 - 1. Requires a normalized spec with i_r = n.
BlockStructure block_structure(const VariablePowerSpec& spec, const DSequence& d,
                               BranchRule rule = BranchRule::kPreviousTopDigit);
std::vector<Exponent> chi_sequence(const VariablePowerSpec& spec, const DSequence& d,
                                   BranchRule rule = BranchRule::kPreviousTopDigit);

/// sum_j chi_j.
Exponent max_socle_degree(const VariablePowerSpec& spec, const DSequence& d,
                          BranchRule rule = BranchRule::kPreviousTopDigit);
/// sum_j chi_j + 1.
Exponent reg_dfixed_powers(const VariablePowerSpec& spec, const DSequence& d,
                           BranchRule rule = BranchRule::kPreviousTopDigit);

/// J = J_1 ... J_k with J_j = (x_{i_{q_j}}^{chi_j}) for gap-1 blocks and
/// (x_{i_{q_{j-1}}+1} ... x_{i_{q_j}})^{d-1} sum_e (n_e^[d])^{alpha_{e,s}-1}
/// otherwise, together with the audit of its three claimed properties.
struct SocleWitness {
  MonomialIdeal ideal;
  bool inside_colon = false;     ///< J in (I : m)
  bool avoids_ideal = false;     ///< no generator of J lies in I
  bool degree_matches = false;   ///< deg(J) = sum chi_j
  bool holds() const { return inside_colon && avoids_ideal && degree_matches; }
};

/// Which summands the direct-branch factor keeps.
enum class WitnessForm {
  /// Every generator e of the block: sum_e (n_e^[d])^{alpha_{e,s}-1}. A block
  /// holding several generators can leave J outside (I : m).
  kPublished,
  /// Only the block's last generator.
  kLastGenerator,
};

SocleWitness socle_witness_ideal(const VariablePowerSpec& spec, const DSequence& d,
                                 BranchRule rule = BranchRule::kPreviousTopDigit,
                                 WitnessForm form = WitnessForm::kPublished);

}  // namespace borelreg
