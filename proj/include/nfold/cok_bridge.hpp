#pragma once
// Factorizations as modules over the matrix ring Gamma_n, chains of
// Abar-modules (modules over the triangular matrix ring), the zeroth cokernel
// functor into chains, and the constructive inverse on objects.
//
// Assumption: every finitely generated Abar-module is treated as Gorenstein
// projective. Abar is a finite-dimensional quotient of a univariate
// polynomial ring here; the linearization checks finite dimension at runtime.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfold/factorization.hpp"
#include "nfold/homotopy.hpp"
#include "nfold/module.hpp"

namespace nfold {

inline constexpr bool kAbarModulesGorensteinProjective = true;

// Gamma_n-module on free components. Component i (1-based) is X^{n-i};
// f(i, j) is the structure map from component j to component i, twist 0
// above the diagonal and twist 1 (the A*omega entries) below it.
struct GammaModuleData {
  Ring ring;
  std::size_t n = 0;
  std::vector<std::size_t> ranks;   // ranks[i-1] = rank of component i
  std::vector<TwistedMatrix> maps;  // n*n, row-major over (i-1, j-1)

  const TwistedMatrix& f(std::size_t i, std::size_t j) const { return maps.at((i - 1) * n + (j - 1)); }
  TwistedMatrix& f(std::size_t i, std::size_t j) { return maps.at((i - 1) * n + (j - 1)); }
};

struct GammaReport {
  bool ok = true;
  std::string message;
};
// Checks shapes, twists, identities on the diagonal and the composition law
// f(j,k) then f(i,j) = f(i,k), times omega when the path wraps once more.
GammaReport check_gamma(const GammaModuleData& g);

GammaModuleData phi(const NFactorization& x);
NFactorization psi(const GammaModuleData& g);
// Morphisms: components are listed in Gamma order (X^{n-1}, ..., X^0).
std::vector<TwistedMatrix> phi(const FactorMorphism& f);
FactorMorphism psi(const GammaModuleData& source, const GammaModuleData& target,
                   const std::vector<TwistedMatrix>& components);

// M^1 -> M^2 -> ... -> M^{n-1}; maps[i] : modules[i] -> modules[i+1] on
// generators.
class ChainModule {
 public:
  ChainModule(Ring ring, std::vector<ModulePresentation> modules, std::vector<TwistedMatrix> maps);

  const Ring& ring() const { return ring_; }
  std::size_t length() const { return modules_.size(); }
  const ModulePresentation& module(std::size_t i) const { return modules_.at(i); }
  const std::vector<ModulePresentation>& modules() const { return modules_; }
  const TwistedMatrix& map(std::size_t i) const { return maps_.at(i); }
  const std::vector<TwistedMatrix>& maps() const { return maps_; }
  const KLinearization& lin(std::size_t i) const { return lins_.at(i); }
  // Matrix of maps[i] in linear coordinates.
  const KMatrix& linear(std::size_t i) const { return linear_.at(i); }
  std::vector<std::size_t> dims() const;

 private:
  Ring ring_;
  std::vector<ModulePresentation> modules_;
  std::vector<TwistedMatrix> maps_;
  std::vector<KLinearization> lins_;
  std::vector<KMatrix> linear_;
};

// Chain maps in linear coordinates, one matrix per module.
using LinearChainMap = std::vector<KMatrix>;

ChainModule cok0(const NFactorization& x);
// Generator images f^1..f^{n-1} of the induced chain map.
std::vector<TwistedMatrix> cok0(const FactorMorphism& f);
LinearChainMap linear_chain_map(const ChainModule& src, const ChainModule& dst,
                                const std::vector<TwistedMatrix>& generator_images);
bool is_chain_map(const ChainModule& src, const ChainModule& dst, const LinearChainMap& m);
bool is_zero_chain_map(const LinearChainMap& m);

struct MonoReport {
  bool mono = true;
  std::size_t failing_index = 0;  // 1-based map index s^i when not mono
};
MonoReport chain_is_mono(const ChainModule& c);

// Density construction: minimal free cover of the top module, kernels down
// the chain, and the wrapping map by exact division by omega.
NFactorization lift(const ChainModule& c);

// Basis of the space of chain maps c -> d over the linearization field.
std::vector<LinearChainMap> chain_map_basis(const ChainModule& c, const ChainModule& d);

enum class IsoVerdict { Isomorphic, NotIsomorphic, NotFound };
const char* to_string(IsoVerdict v);
struct ChainIsoResult {
  IsoVerdict verdict = IsoVerdict::NotFound;
  std::string reason;
  LinearChainMap forward, backward;
};
ChainIsoResult chain_iso(const ChainModule& c, const ChainModule& d, std::uint64_t seed = 1, int budget = 32);

// Components are free and d^0..d^{n-2} are injective.
bool in_mono_class(const NFactorization& x);

struct FaithfulnessReport {
  bool cok_zero = false;
  Verdict through_theta0 = Verdict::No;
  bool through_projective = false;
  Verdict null_homotopic = Verdict::No;
  bool agree_zero() const { return cok_zero == (through_theta0 == Verdict::Yes); }
  bool agree_projective() const { return through_projective == (null_homotopic == Verdict::Yes); }
};
// Decides whether Cok0(f) vanishes and whether it factors through the
// projective chain Cok0(T) (T the trivial cover of the target), and compares
// with the homotopy solvers.
FaithfulnessReport faithfulness_check(const FactorMorphism& f);

}  // namespace nfold
