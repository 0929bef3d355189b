#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "markgraph/complex.hpp"
#include "markgraph/conflict.hpp"
#include "markgraph/enumerate.hpp"
#include "markgraph/graph.hpp"

namespace markgraph {

struct VerificationResult {
  std::string check;
  std::string scope;    // graph key, graph key + sector, or "family(r,l)"
  bool passed = true;
  std::string witness;  // non-empty whenever passed == false
  std::string detail;   // optional facts recorded on success
  double elapsed_ms = 0.0;
};

// Per-system and per-graph checks. `scope` is copied into the result.

/// delta^2 = 0, d^2 = 0, delta d + d delta = 0 and D^2 = 0 in every degree;
/// for systems with both edge and cycle elements also total^2 = 0.
VerificationResult verify_differential_algebra(const ConflictSystem& cs,
                                               const std::string& scope,
                                               SignRules rules = {});

/// Transport to the vertex model of the edge or cycle system intertwines
/// delta with mu and d with u.
VerificationResult verify_universal(const Graph& g, Sector sector, const std::string& scope,
                                    SignRules rules = {});

/// Cohomology of (cs, kind) is Z in degree 0 and zero elsewhere.
VerificationResult verify_acyclicity(const ConflictSystem& cs, DifferentialKind kind,
                                     const std::string& scope, SignRules rules = {});

/// delta-only homology of cs is Z at k = 0, and every fully-marked model on
/// n = 1..top_degree(cs) independent elements has no homology at all.
VerificationResult verify_mu_homology(const ConflictSystem& cs, const std::string& scope);

/// exp generators are killed by S (edge system), T (cycle system), U
/// (vertex system) and the total differential (mixed system).
VerificationResult verify_cocycles(const Graph& g, const std::string& scope,
                                   SignRules rules = {});

/// S T - T S = 0 on the mixed system of g in every degree.
VerificationResult verify_commutation(const Graph& g, const std::string& scope,
                                      SignRules rules = {});

/// Cohomology reports of random re-orderings of cs match the original.
VerificationResult verify_order_independence(const ConflictSystem& cs,
                                             DifferentialKind kind, std::size_t trials,
                                             std::uint64_t seed, const std::string& scope);

/// Total-complex cohomology over the family has rank |family| in degree 0
/// and vanishes above; each exp generator is a degree-0 cocycle.
VerificationResult verify_main_theorem(const FamilySpec& spec,
                                       const std::vector<FamilyMember>& family,
                                       SignRules rules = {});

struct VerifyOptions {
  std::set<std::string> checks;  // empty = all
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  SignRules rules;
  EnumerationLimits limits;
  std::size_t workers = 1;
};

/// Names accepted in VerifyOptions::checks, in run order.
const std::vector<std::string>& check_names();

/// Statements the suite is obliged to cover, and which check covers each.
struct ClaimCoverage {
  std::string claim;
  std::string check;
};
const std::vector<ClaimCoverage>& claim_manifest();

/// Runs the selected checks over every member of the family. Results are
/// ordered by check, then by canonical key, independent of scheduling.
std::vector<VerificationResult> verify_family(const FamilySpec& spec,
                                              const VerifyOptions& options);

/// Worker count from MARKGRAPH_WORKERS, defaulting to 1.
std::size_t workers_from_environment();

}  // namespace markgraph
