#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "olab/caps.hpp"
#include "olab/oracle.hpp"
#include "olab/states.hpp"

namespace olab {

enum class UselessnessKind { weak, strong, pairwise, quantum };

std::string to_string(UselessnessKind kind);

// Transcript witnessing that some class is distinguishable: the conditional
// law of `first` (and `second`, for pairwise checks) differs between the two
// named classes. Strong witnesses carry the fixed seed tuple.
struct ClassicalWitness {
  std::string class_a;
  std::string class_b;
  QueryTuple first;
  std::optional<QueryTuple> second;
  std::optional<std::vector<std::int64_t>> seed_tuple;
  std::vector<std::string> seed_labels;
  Rational prob_a{0};
  Rational prob_b{0};
};

struct QuantumWitness {
  std::string class_a;
  std::string class_b;
  std::int64_t row = 0;
  std::int64_t col = 0;
  Rational entry_a{0};
  Rational entry_b{0};
};

struct UselessnessVerdict {
  UselessnessKind kind = UselessnessKind::weak;
  int queries = 0;  // pairwise verdicts report 2k
  bool useless = false;
  std::optional<ClassicalWitness> classical_witness;
  std::optional<QuantumWitness> quantum_witness;
};

using Distribution = std::map<std::vector<int>, Rational>;

// Pr(z | x, y, C_label) for k parallel queries, exact; sums to 1 over z.
Distribution class_transcript_law(const OracleProblem& problem, const std::string& label,
                                  const std::vector<int>& controls,
                                  const std::vector<int>& probes);

// The full law of one class: a distribution over outcome tuples for every
// (controls, probes) pair.
struct TranscriptLaw {
  int k = 0;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Distribution> by_query;
};
TranscriptLaw full_transcript_law(const OracleProblem& problem, const std::string& label, int k,
                                  const Caps& caps = {});

// Seed-averaged transcripts reveal nothing about the class.
UselessnessVerdict weak_classical_useless(const OracleProblem& problem, int k,
                                          const Caps& caps = {}, int workers = 1);

// Transcripts reveal nothing even jointly with the seed tuple itself; with
// per-class seed distributions the seed's likelihood is part of the
// observation, so unequal seed laws already break strong uselessness.
UselessnessVerdict strong_classical_useless(const OracleProblem& problem, int k,
                                            const Caps& caps = {}, int workers = 1);

// 2k queries in k pairs, each pair sharing one fresh joint-seed sample.
UselessnessVerdict pairwise_classical_useless(const OracleProblem& problem, int k_pairs,
                                              const Caps& caps = {}, int workers = 1);

// Class-averaged k-slot encoding of the class's oracles.
DensityMatrix sigma(const OracleProblem& problem, const std::string& label, int k,
                    const Caps& caps = {});

// k quantum queries are useless iff all class-averaged encodings coincide
// exactly; the witness names the first differing matrix entry.
UselessnessVerdict quantum_useless(const OracleProblem& problem, int k, const Caps& caps = {});

// Runs the quantum and pairwise deciders, asserts the biconditional between
// them, and checks entrywise that sigma_j equals 1/(NM)^k times the paired
// transcript law. A false flag here is a critical defect, not a verdict.
struct EquivalenceReport {
  UselessnessVerdict quantum;
  UselessnessVerdict pairwise;
  bool biconditional_holds = false;
  bool trace_identity_holds = false;
};
EquivalenceReport check_equivalence_theorem(const OracleProblem& problem, int k,
                                            const Caps& caps = {});

// Binary problems: k-query uselessness under the balanced reweighting of the
// two classes certifies unbounded-error query complexity > k.
struct UnboundedErrorReport {
  bool quantum_model = false;
  int k = 0;
  bool useless = false;
  bool complexity_greater_than_k = false;
  Rational guessing_baseline{0};  // max_j mu(C_j) under the given prior
  std::string note;
};
UnboundedErrorReport unbounded_error_link(const OracleProblem& problem, int k, bool quantum_model,
                                          bool allow_non_binary = false, const Caps& caps = {});

// Weak uselessness of the T-fold batch of `base` at `ell` queries, decided by
// the exact product factorization: with one oracle per class and fresh seeds
// per sub-query the batched law is a slot-wise product, and equality of
// products over all tuples holds iff the single-slot laws are equal (compare
// constant tuples). Cross-checked against the exhaustive decider at small T.
UselessnessVerdict weak_useless_iid_batch(const OracleProblem& base, int T, int ell,
                                          const Caps& caps = {});

}  // namespace olab
