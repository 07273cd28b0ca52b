#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "walg/system.hpp"

namespace walg {

class gnf_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GnfResult {
  AlgebraicSystem sys;
  std::vector<std::size_t> component;  // variable carrying the series of input variable i
  std::vector<std::size_t> proper;     // its epsilon-free part, strict GNF (empty if unchanged)
  std::vector<Value> eps;              // epsilon coefficient of input variable i
  bool unchanged = false;
};

/// Epsilon coefficients of the least solution (scalar fixed point; arctic and
/// counting components that grow without bound become top).
std::vector<Value> epsilon_coefficients(const AlgebraicSystem& s);

/// GNF with the same least solution on mapped components.  Input already in
/// GNF is returned unchanged unless `force` is set.
GnfResult finite_gnf(const AlgebraicSystem& s, bool force = false);

/// Subsystem of the variables reachable from c, with c renumbered to 0.
AlgebraicSystem extract_component(const AlgebraicSystem& s, std::size_t c);

/// Variables whose least-solution component is nonzero.
std::vector<char> productive(const AlgebraicSystem& s);

/// A series as component 0 of an algebraic system.
struct SeriesRef {
  AlgebraicSystem sys;
  std::size_t comp = 0;
};

struct DecompositionTerm {
  SeriesRef s;
  SeriesRef t;
  // set after normalisation when s = eps_scalar * epsilon
  std::optional<Value> eps_scalar;
};

/// upsilon = sum_j s_j t_j^omega.
struct OmegaDecomposition {
  Kind kind = Kind::boolean;
  Alphabet sigma;
  std::vector<DecompositionTerm> terms;
};

/// Every t_j epsilon-free in strict GNF, every s_j either strict GNF and
/// epsilon-free or a scalar multiple of epsilon; zero terms dropped.
OmegaDecomposition normalize_decomposition(const OmegaDecomposition& d);

/// A mixed system plus the indices selecting one series of a canonical solution.
struct SelectedMixed {
  MixedSystem sys;
  std::size_t buchi = 0;
  std::size_t x_comp = 0;
  std::size_t z_comp = 0;
};

enum class PairCase { eps_zero, eps_scalar };

/// Mixed GNF system whose first canonical solution carries s t^omega at
/// z_comp.  For eps_scalar, s is ignored and e is used.
SelectedMixed build_pair_system(const SeriesRef& s, const SeriesRef& t, PairCase c,
                                const Value& e);

/// Sum of first-canonical-solution series, each part having its Büchi
/// variable at z-index 0.  Result: l-th canonical solution, last z-variable.
SelectedMixed sum_systems(Kind k, const Alphabet& sigma, const std::vector<SelectedMixed>& parts);

/// Omega GNF system whose t-th canonical solution has (sigma_k, omega_l) as
/// its last component.  Variable order: hat y (m), bar y (n), dot y.
OmegaSystem unmix(const MixedSystem& s, std::size_t k, std::size_t l, std::size_t t);

/// x-system with s_j at j and t_j at l+j; z_j = x_{l+j} z_j,
/// z_{l+1} = sum_j x_j z_j.  Selector: buchi l, z_comp l.
SelectedMixed char_to_mixed(const OmegaDecomposition& d);

/// Normalised decomposition to mixed GNF: pair systems joined by sum_systems.
SelectedMixed decomposition_to_mixed_gnf(const OmegaDecomposition& d);

/// Component z_comp of rho(sigma)^{omega,k} written as sum_j s_j t_j^omega.
OmegaDecomposition mixed_to_decomposition(const MixedSystem& s, std::size_t k,
                                          std::size_t z_comp);

enum class GnfTarget { mixed, omega };

struct PipelineStage {
  std::string name;
  std::variant<AlgebraicSystem, MixedSystem, OmegaSystem> system;
  bool claims_gnf = false;
  bool is_gnf = false;
  std::size_t buchi = 0;
  std::size_t x_comp = 0;
  std::size_t z_comp = 0;  // for omega systems: the selected component
};

struct GnfPipelineReport {
  std::vector<PipelineStage> stages;
  bool skipped = false;  // input already in the requested normal form
  std::vector<std::string> warnings;
};

/// (sigma_x_comp, omega_z_comp of the buchi-th canonical solution) carried to GNF.
GnfPipelineReport gnf_pipeline(const MixedSystem& s, std::size_t buchi, std::size_t x_comp,
                               std::size_t z_comp, GnfTarget target);
GnfPipelineReport gnf_pipeline(const OmegaSystem& s, std::size_t buchi, std::size_t comp,
                               GnfTarget target);

}  // namespace walg
