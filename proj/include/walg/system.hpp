#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "walg/series.hpp"

namespace walg {

/// x = p(x) over S<<Sigma*>>.
struct AlgebraicSystem {
  Kind kind = Kind::boolean;
  Alphabet sigma;
  std::vector<std::string> vars;
  std::vector<Polynomial> rhs;

  std::size_t size() const { return vars.size(); }
};

/// y = p(y) over the quemiring; rhs[i] is a polynomial over (Sigma u Y).
struct OmegaSystem {
  Kind kind = Kind::boolean;
  Alphabet sigma;
  std::vector<std::string> vars;
  std::vector<Polynomial> rhs;

  std::size_t size() const { return vars.size(); }
};

/// x = p(x), z = rho(x) z.  Variables inside x_rhs and rho refer to x_vars.
struct MixedSystem {
  Kind kind = Kind::boolean;
  Alphabet sigma;
  std::vector<std::string> x_vars;
  std::vector<Polynomial> x_rhs;
  std::vector<std::string> z_vars;
  std::vector<std::vector<Polynomial>> rho;

  std::size_t n() const { return x_vars.size(); }
  std::size_t m() const { return z_vars.size(); }
};

class system_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const AlgebraicSystem& s);
void validate(const OmegaSystem& s);
void validate(const MixedSystem& s);

/// Zero-initialised rho of size m x m.
std::vector<std::vector<Polynomial>> empty_rho(Kind k, std::size_t m);

MixedSystem induce_mixed(const OmegaSystem& s);
AlgebraicSystem x_part(const MixedSystem& s);

bool is_gnf_x_poly(const Polynomial& p);    // {eps} u Sigma u Sigma X u Sigma X X
bool is_gnf_rho_poly(const Polynomial& p);  // Sigma u Sigma X
bool is_strict_gnf_x_poly(const Polynomial& p);  // as above without eps
bool is_gnf(const AlgebraicSystem& s);
bool is_strict_gnf(const AlgebraicSystem& s);
bool is_gnf_mixed(const MixedSystem& s);
bool is_gnf_omega(const OmegaSystem& s);

class not_stabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t default_max_iter(std::size_t n, std::size_t max_len);

/// Kleene iteration from 0, truncated to the domain; returns once an
/// iteration changes nothing, throws not_stabilized after max_iter rounds.
std::vector<TruncatedSeries> least_solution_finite(Kind k, const std::vector<Polynomial>& rhs,
                                                   const Domain& d, std::size_t max_iter);
std::vector<TruncatedSeries> least_solution_finite(Kind k, const std::vector<Polynomial>& rhs,
                                                   std::size_t max_len);

/// Independent oracle: sum over leftmost derivations of w from x_comp.
/// Requires the GNF x shape.
Value oracle_coeff_gnf(Kind k, const std::vector<Polynomial>& rhs, std::size_t comp,
                       const Word& w);

struct LassoCaps {
  std::size_t factor_len = 0;  // 0: |u| + 4|v|
  std::size_t periods = 0;     // 0: 2 * m * |v| + 4
};

enum class Status { exact, inconclusive };

struct OmegaResult {
  Status status = Status::exact;
  Value value;
  std::size_t cap_used = 0;  // factor length (systems) or summary rounds (automata)
};

/// Component i of rho(sigma)^{omega,k} at u v^omega, with every factor of
/// the word no longer than factor_len.  Exact for that restricted run set.
Value canonical_omega_at_cap(const MixedSystem& s, std::size_t k, std::size_t i, const Lasso& w,
                             std::size_t factor_len);

/// Stabilisation ladder over factor lengths F, F+|v|, ... up to
/// |u| + periods*|v|.  Two consecutive equal values settle the result.
OmegaResult canonical_omega_lasso(const MixedSystem& s, std::size_t k, std::size_t i,
                                  const Lasso& w, LassoCaps caps = {});

}  // namespace walg
