#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootpoly/corpus.hpp"

namespace rootpoly {

enum class CheckKind {
  Dimension,
  OracleEquivalence,
  OrderingInvariance,
  DeletionMonotone,
  ContractionMonotone,
  DeletionPredicate,
  ContractionPredicate,
  VolumeIdentity,
  ContractionLemma,
  FacetClassification,
  FundamentalCircuitShape,
  AcyclicityCertificate,
};

const char* check_name(CheckKind k);

struct CheckFailure {
  CheckKind kind;
  std::string detail;
};

struct CheckOptions {
  int ordering_samples = 24;  // distinct orderings per graph, exhaustive below the cap
  std::uint64_t seed = 0;
};

// Run the full per-graph battery: oracle equivalence, ordering invariance,
// minor monotonicity, equality predicates, volume/dissection certificate,
// contraction lemma, facet classification, and the signature property tests.
std::vector<CheckFailure> check_digraph(const Digraph& d, const CheckOptions& opts);

// Coefficient-multiset and reversal comparison of T_G(x,1) against the h* of
// the subdivided-and-oriented digraph.
std::optional<std::string> check_tutte_correspondence(const UndirectedGraph& g);

// Up to `count` distinct orderings of the given edges; exhaustive when there
// are at most `count` permutations, otherwise seeded sampling.
std::vector<EdgeOrdering> sample_orderings(std::vector<EdgeId> ids, int count, std::uint64_t seed);

std::string digraph_str(const Digraph& d);

}  // namespace rootpoly
