#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walg/system.hpp"

namespace walg {

class pda_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The selected component has a nonzero epsilon coefficient; the caller may
/// strip it (see without_epsilon) and add it back to the finite behavior.
class pda_epsilon_error : public pda_error {
 public:
  pda_epsilon_error(const std::string& what, const Value& e) : pda_error(what), eps(e) {}
  Value eps;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix zero_poly_matrix(Kind k, std::size_t n);

/// Simple reset pushdown matrix stored by its generating blocks.  All other
/// blocks follow: M_{p,p} = M_{eps,eps}, M_{p,qp} = M_{eps,q}, zero otherwise.
struct ResetPDMatrix {
  Kind kind = Kind::boolean;
  Alphabet sigma;
  std::vector<std::string> states;
  std::vector<std::string> gamma;
  PolyMatrix neutral;            // M_{eps,eps}
  std::vector<PolyMatrix> push;  // push[p] = M_{eps,p}
  std::vector<PolyMatrix> pop;   // pop[p] = M_{p,eps}

  std::size_t n() const { return states.size(); }
};

ResetPDMatrix empty_pd_matrix(Kind k, Alphabet sigma, std::vector<std::string> states,
                              std::vector<std::string> gamma);

/// Block shapes, and every entry a combination of single letters.
void validate(const ResetPDMatrix& m);

struct SimpleOmegaPDA {
  ResetPDMatrix matrix;
  std::vector<Value> initial;
  std::vector<Value> final;
  std::optional<std::size_t> buchi;  // states 0..l-1 are repeated; unset for finite automata

  std::size_t n() const { return matrix.n(); }
};

void validate(const SimpleOmegaPDA& a);

/// Stack contents, top at index 0.
using Stack = std::vector<std::size_t>;

struct Configuration {
  std::size_t state = 0;
  Stack stack;
  bool operator==(const Configuration& o) const { return state == o.state && stack == o.stack; }
};

/// Block M_{from,to} of the infinite matrix.
PolyMatrix expand_entry(const ResetPDMatrix& m, const Stack& from, const Stack& to);

bool is_sink(const ResetPDMatrix& m, std::size_t q);

/// p without its epsilon monomial.
Polynomial without_epsilon(const Polynomial& p);

/// States x_1..x_n, f; stack symbols x_1..x_n; start x_start.
SimpleOmegaPDA induced_finite_pda(const AlgebraicSystem& s, std::size_t start);

/// States z_1..z_m, x_1..x_n, f; stack symbols X_1..X_n, Z_1..Z_m; both x_start
/// and z_start initial; z_1..z_l repeated.
SimpleOmegaPDA induced_omega_pda(const MixedSystem& s, std::size_t x_start, std::size_t z_start,
                                 std::size_t l);

/// Configurations reachable in one step reading a, with step weights.
std::vector<std::pair<Configuration, Value>> successors(const SimpleOmegaPDA& a,
                                                        const Configuration& c, Sym letter);

/// Coefficient of w in I (M*)_{eps,eps} P.
Value behavior_finite(const SimpleOmegaPDA& a, const Word& w);

/// Sum over runs from `from` to `to` reading w.
Value run_value(const SimpleOmegaPDA& a, const Configuration& from, const Configuration& to,
                const Word& w);

struct PdaCaps {
  std::size_t max_rounds = 0;  // 0: default_pda_rounds
};

constexpr std::size_t default_pda_rounds = 256;

/// Coefficient of u v^omega in I (M^{omega,l})_eps.
OmegaResult behavior_omega_lasso(const SimpleOmegaPDA& a, const Lasso& w, PdaCaps caps = {});

/// Same, for runs started in configuration c.
OmegaResult omega_from(const SimpleOmegaPDA& a, const Configuration& c, const Lasso& w,
                       PdaCaps caps = {});

/// Lower bound from runs whose stack height stays <= height.
Value omega_lasso_bounded(const SimpleOmegaPDA& a, const Lasso& w, std::size_t height,
                          std::size_t max_configs = 1000000);

}  // namespace walg
