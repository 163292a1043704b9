#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "copwin/strategy.hpp"
#include "copwin/symbolic.hpp"

namespace copwin {

/// The audited claim families: upper-bound cases plus the assembly
/// arguments that combine them.
enum class ClaimFamily {
  AxisX,         // cop on the x-axis beyond the robber
  AxisY,         // mirrored
  DiagonalPair,  // both on the diagonal, no tail
  GridAssembly,  // generic grid pair related within gamma
  TailDiagonal,  // diagonal pair in the tailed graph
  GridCop,       // any robber against a grid cop, within gamma+1
  TailCop        // cop on the tail path
};

std::string claim_family_name(ClaimFamily f);
std::optional<ClaimFamily> claim_family_from_name(std::string_view name);

struct Claim {
  SymbolicVertex u;  // robber
  SymbolicVertex v;  // cop
  Ordinal rank;
};

/// One witness step and the sub-certificate it leads to.
struct CertificateNode {
  Claim claim;
  struct Step {
    SymbolicVertex challenge;  // x in N[u]
    SymbolicVertex witness;    // y in N[v] (or v itself)
    Ordinal delta;             // strictly below the parent rank
    std::unique_ptr<CertificateNode> child;  // null for rank-0 leaves
  };
  std::vector<Step> steps;
};

struct DescentStats {
  std::size_t total_steps = 0;
  std::size_t max_depth = 0;
  std::size_t challenges = 0;
};

struct CertifyResult {
  bool ok = false;
  std::string violation;  // empty when ok
  std::unique_ptr<CertificateNode> certificate;
  DescentStats stats;
};

struct CertifyOptions {
  std::size_t root_samples = 100;
  std::size_t child_samples = 2;  // fan-out at depths 1..deep_depth
  std::size_t deep_depth = 2;     // single challenge below this depth
  std::size_t step_budget = 1'000'000;
  /// Test hook: may corrupt a witness response before the checks run.
  std::function<void(SymbolicVertex& y, Ordinal& delta, std::size_t depth)>
      tamper;
};

/// The proof's witness map for one challenge: the cop reply y and the
/// strictly smaller rank delta such that x relates to y within delta.
/// Throws HypothesisViolation when (u, v, x) falls outside the family's
/// cases (including the uncovered cop vertices with no diagonal
/// neighbor).
std::pair<SymbolicVertex, Ordinal> witness(const SymbolicGraph& g,
                                           ClaimFamily family,
                                           const SymbolicVertex& u,
                                           const SymbolicVertex& v,
                                           const SymbolicVertex& x);

/// Full recursive descent of a sampled claim: for each sampled
/// challenge x of N[u], obtains a witness, checks y in N[v] and
/// delta < rank, and recurses on (x, y, delta) down to equality or
/// domination leaves.
CertifyResult certify(const SymbolicGraph& g, const Claim& claim,
                      ClaimFamily family, std::uint64_t seed,
                      const CertifyOptions& options = {});

/// A hypothesis-satisfying instance claim for the family, built from
/// seeded samples; used by the harness and the CLI.
Claim make_family_claim(const SymbolicGraph& g, ClaimFamily family,
                        std::mt19937_64& rng);

}  // namespace copwin
