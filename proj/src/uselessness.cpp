#include "olab/uselessness.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "olab/encoding.hpp"
#include "olab/errors.hpp"
#include "olab/transforms.hpp"

namespace olab {

std::string to_string(UselessnessKind kind) {
  switch (kind) {
    case UselessnessKind::weak:
      return "weak";
    case UselessnessKind::strong:
      return "strong";
    case UselessnessKind::pairwise:
      return "pairwise";
    case UselessnessKind::quantum:
      return "quantum";
  }
  return "?";
}

namespace {

std::int64_t ipow_or_minus_one(std::int64_t base, int exp, std::int64_t limit) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > limit / base) return -1;
    v *= base;
  }
  return v;
}

// Eagerly cached action images: images(o, x, seed)[y-1] is the image of y.
class ActionTable {
 public:
  ActionTable(const OracleProblem& problem,
              const std::vector<std::set<std::int64_t>>& seeds_per_oracle)
      : problem_(problem), table_(problem.oracle_count()) {
    for (std::size_t o = 0; o < problem.oracle_count(); ++o) {
      const auto& oracle = problem.oracle(o);
      for (auto seed : seeds_per_oracle[o]) {
        const SeedValue value = oracle.seeds().value(seed);
        auto& per_x = table_[o][seed];
        per_x.reserve(static_cast<std::size_t>(oracle.control_size()));
        for (int x = 1; x <= oracle.control_size(); ++x) {
          per_x.push_back(oracle.action_value(x, value).images());
        }
      }
    }
  }

  const std::vector<int>& images(std::size_t oracle, int x, std::int64_t seed) const {
    return table_[oracle].at(seed)[static_cast<std::size_t>(index0(x))];
  }

 private:
  const OracleProblem& problem_;
  std::vector<std::map<std::int64_t, std::vector<std::vector<int>>>> table_;
};

struct JointSupport {
  std::vector<std::vector<std::int64_t>> tuples;
  std::vector<Rational> weights;
  std::map<std::vector<std::int64_t>, Rational> by_tuple;
};

struct DeciderContext {
  const OracleProblem& problem;
  int k;
  std::vector<JointSupport> joints;           // per oracle
  std::vector<Rational> class_conditional;    // prior(o) / class_prior(class_of(o))
  ActionTable actions;

  DeciderContext(const OracleProblem& p, int k_queries)
      : problem(p), k(k_queries), actions(make_actions(p, k_queries, joints)) {
    for (std::size_t o = 0; o < p.oracle_count(); ++o) {
      class_conditional.push_back(p.prior(o) / p.class_prior(p.class_of(o)));
    }
  }

 private:
  // Fills `joints` and returns the action table over every referenced seed.
  static ActionTable make_actions(const OracleProblem& p, int k,
                                  std::vector<JointSupport>& joints) {
    std::vector<std::set<std::int64_t>> seeds(p.oracle_count());
    joints.clear();
    joints.reserve(p.oracle_count());
    for (std::size_t o = 0; o < p.oracle_count(); ++o) {
      const SeedDistribution dist = p.joint_seeds(o, k);
      JointSupport support;
      support.tuples = dist.support;
      support.weights = dist.weights;
      for (std::size_t t = 0; t < dist.support.size(); ++t) {
        support.by_tuple.emplace(dist.support[t], dist.weights[t]);
        for (auto seed : dist.support[t]) seeds[o].insert(seed);
      }
      joints.push_back(std::move(support));
    }
    return ActionTable(p, seeds);
  }
};

std::optional<std::tuple<std::vector<int>, Rational, Rational>> first_difference(
    const Distribution& a, const Distribution& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      return std::tuple{ia->first, ia->second, Rational(0)};
    }
    if (ia == a.end() || ib->first < ia->first) {
      return std::tuple{ib->first, Rational(0), ib->second};
    }
    if (ia->second != ib->second) return std::tuple{ia->first, ia->second, ib->second};
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

// Scans packed indices [1, count] in order; with several workers, contiguous
// chunks run concurrently and the earliest hit wins, so the selected witness
// is independent of scheduling.
std::optional<ClassicalWitness> scan_first(
    std::int64_t count, int workers,
    const std::function<std::optional<ClassicalWitness>(std::int64_t)>& probe) {
  if (workers <= 1 || count < 2 * workers) {
    for (std::int64_t i = 1; i <= count; ++i) {
      if (auto hit = probe(i)) return hit;
    }
    return std::nullopt;
  }
  const std::int64_t chunk = (count + workers - 1) / workers;
  using Hit = std::pair<std::int64_t, std::optional<ClassicalWitness>>;
  std::vector<std::future<Hit>> futures;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = 1 + w * chunk;
    const std::int64_t end = std::min<std::int64_t>(count, begin + chunk - 1);
    if (begin > count) break;
    futures.push_back(std::async(std::launch::async, [begin, end, &probe]() -> Hit {
      for (std::int64_t i = begin; i <= end; ++i) {
        if (auto hit = probe(i)) return {i, hit};
      }
      return {INT64_MAX, std::nullopt};
    }));
  }
  std::optional<ClassicalWitness> best;
  std::int64_t best_index = INT64_MAX;
  for (auto& f : futures) {
    auto [index, hit] = f.get();
    if (hit && index < best_index) {
      best_index = index;
      best = hit;
    }
  }
  return best;
}

void check_transcript_cap(std::int64_t count, const Caps& caps, const std::string& what) {
  if (count < 0 || count > caps.max_transcripts) {
    throw_cap(what + " enumeration exceeds the transcript cap of " +
              std::to_string(caps.max_transcripts));
  }
}

std::vector<int> apply_tuple(const DeciderContext& ctx, std::size_t oracle,
                             const std::vector<std::int64_t>& seed_tuple,
                             const std::vector<int>& controls, const std::vector<int>& probes) {
  std::vector<int> outcome(controls.size());
  for (std::size_t i = 0; i < controls.size(); ++i) {
    outcome[i] =
        ctx.actions.images(oracle, controls[i], seed_tuple[i])[static_cast<std::size_t>(
            index0(probes[i]))];
  }
  return outcome;
}

Distribution law_for_class(const DeciderContext& ctx, const std::string& label,
                           const std::vector<int>& controls, const std::vector<int>& probes) {
  Distribution law;
  for (auto o : ctx.problem.class_members(label)) {
    const auto& joint = ctx.joints[o];
    for (std::size_t t = 0; t < joint.tuples.size(); ++t) {
      auto outcome = apply_tuple(ctx, o, joint.tuples[t], controls, probes);
      law[std::move(outcome)] += ctx.class_conditional[o] * joint.weights[t];
    }
  }
  return law;
}

}  // namespace

Distribution class_transcript_law(const OracleProblem& problem, const std::string& label,
                                  const std::vector<int>& controls,
                                  const std::vector<int>& probes) {
  if (controls.size() != probes.size() || controls.empty()) {
    throw_contract("transcript law requires equal-length nonempty control/probe tuples");
  }
  DeciderContext ctx(problem, static_cast<int>(controls.size()));
  return law_for_class(ctx, label, controls, probes);
}

TranscriptLaw full_transcript_law(const OracleProblem& problem, const std::string& label, int k,
                                  const Caps& caps) {
  const std::int64_t n_tuples = ipow_or_minus_one(problem.control_size(), k, INT64_MAX / 2);
  const std::int64_t m_tuples = ipow_or_minus_one(problem.target_size(), k, INT64_MAX / 2);
  if (n_tuples < 0 || m_tuples < 0) throw_cap("transcript law index space overflows");
  check_transcript_cap(n_tuples * m_tuples, caps, "transcript law");

  DeciderContext ctx(problem, k);
  TranscriptLaw law;
  law.k = k;
  for (std::int64_t xi = 1; xi <= n_tuples; ++xi) {
    const auto controls = unpack_tuple(xi, problem.control_size(), k);
    for (std::int64_t yi = 1; yi <= m_tuples; ++yi) {
      const auto probes = unpack_tuple(yi, problem.target_size(), k);
      auto dist = law_for_class(ctx, label, controls, probes);
      Rational total(0);
      for (const auto& [z, p] : dist) total += p;
      if (total != 1) throw_contract("transcript law does not sum to 1");
      law.by_query.emplace(std::pair{controls, probes}, std::move(dist));
    }
  }
  return law;
}

UselessnessVerdict weak_classical_useless(const OracleProblem& problem, int k, const Caps& caps,
                                          int workers) {
  if (k < 1) throw_contract("weak uselessness requires k >= 1");
  const std::int64_t n_tuples = ipow_or_minus_one(problem.control_size(), k, INT64_MAX / 2);
  const std::int64_t m_tuples = ipow_or_minus_one(problem.target_size(), k, INT64_MAX / 2);
  if (n_tuples < 0 || m_tuples < 0) throw_cap("weak decider index space overflows");
  check_transcript_cap(n_tuples * m_tuples * m_tuples, caps, "weak decider");

  const DeciderContext ctx(problem, k);
  const auto& labels = problem.class_labels();

  auto probe = [&](std::int64_t xi) -> std::optional<ClassicalWitness> {
    const auto controls = unpack_tuple(xi, problem.control_size(), k);
    for (std::int64_t yi = 1; yi <= m_tuples; ++yi) {
      const auto probes = unpack_tuple(yi, problem.target_size(), k);
      const Distribution reference = law_for_class(ctx, labels.front(), controls, probes);
      for (std::size_t j = 1; j < labels.size(); ++j) {
        const Distribution other = law_for_class(ctx, labels[j], controls, probes);
        if (auto diff = first_difference(reference, other)) {
          ClassicalWitness witness;
          witness.class_a = labels.front();
          witness.class_b = labels[j];
          witness.first = QueryTuple{controls, probes, std::get<0>(*diff)};
          witness.prob_a = std::get<1>(*diff);
          witness.prob_b = std::get<2>(*diff);
          return witness;
        }
      }
    }
    return std::nullopt;
  };

  UselessnessVerdict verdict;
  verdict.kind = UselessnessKind::weak;
  verdict.queries = k;
  verdict.classical_witness = scan_first(n_tuples, workers, probe);
  verdict.useless = !verdict.classical_witness.has_value();
  return verdict;
}

UselessnessVerdict strong_classical_useless(const OracleProblem& problem, int k, const Caps& caps,
                                            int workers) {
  if (k < 1) throw_contract("strong uselessness requires k >= 1");
  const std::int64_t n_tuples = ipow_or_minus_one(problem.control_size(), k, INT64_MAX / 2);
  const std::int64_t m_tuples = ipow_or_minus_one(problem.target_size(), k, INT64_MAX / 2);
  if (n_tuples < 0 || m_tuples < 0) throw_cap("strong decider index space overflows");

  const DeciderContext ctx(problem, k);
  const auto& labels = problem.class_labels();

  // Union of the per-class joint supports, in lexicographic order.
  std::set<std::vector<std::int64_t>> tuple_union;
  for (const auto& joint : ctx.joints) {
    for (const auto& tuple : joint.tuples) tuple_union.insert(tuple);
  }
  const std::vector<std::vector<std::int64_t>> tuples(tuple_union.begin(), tuple_union.end());
  check_transcript_cap(static_cast<std::int64_t>(tuples.size()) * n_tuples * m_tuples * m_tuples,
                       caps, "strong decider");

  // Joint law of (outcome, fixed seed tuple) per class; the seed likelihood
  // R^k(r | class) multiplies each branch, so classes with different seed
  // laws are already distinguishable.
  auto law_with_seed = [&](const std::string& label, const std::vector<std::int64_t>& seed_tuple,
                           const std::vector<int>& controls, const std::vector<int>& probes) {
    Distribution law;
    for (auto o : ctx.problem.class_members(label)) {
      const auto it = ctx.joints[o].by_tuple.find(seed_tuple);
      if (it == ctx.joints[o].by_tuple.end()) continue;
      auto outcome = apply_tuple(ctx, o, seed_tuple, controls, probes);
      law[std::move(outcome)] += ctx.class_conditional[o] * it->second;
    }
    return law;
  };

  auto probe = [&](std::int64_t packed) -> std::optional<ClassicalWitness> {
    const auto tuple_index = static_cast<std::size_t>((packed - 1) / n_tuples);
    const std::int64_t xi = (packed - 1) % n_tuples + 1;
    const auto& seed_tuple = tuples[tuple_index];
    const auto controls = unpack_tuple(xi, problem.control_size(), k);
    for (std::int64_t yi = 1; yi <= m_tuples; ++yi) {
      const auto probes = unpack_tuple(yi, problem.target_size(), k);
      const Distribution reference = law_with_seed(labels.front(), seed_tuple, controls, probes);
      for (std::size_t j = 1; j < labels.size(); ++j) {
        const Distribution other = law_with_seed(labels[j], seed_tuple, controls, probes);
        if (auto diff = first_difference(reference, other)) {
          ClassicalWitness witness;
          witness.class_a = labels.front();
          witness.class_b = labels[j];
          witness.first = QueryTuple{controls, probes, std::get<0>(*diff)};
          witness.seed_tuple = seed_tuple;
          for (auto seed : seed_tuple) {
            witness.seed_labels.push_back(problem.seeds().label(seed));
          }
          witness.prob_a = std::get<1>(*diff);
          witness.prob_b = std::get<2>(*diff);
          return witness;
        }
      }
    }
    return std::nullopt;
  };

  UselessnessVerdict verdict;
  verdict.kind = UselessnessKind::strong;
  verdict.queries = k;
  verdict.classical_witness =
      scan_first(static_cast<std::int64_t>(tuples.size()) * n_tuples, workers, probe);
  verdict.useless = !verdict.classical_witness.has_value();
  return verdict;
}

UselessnessVerdict pairwise_classical_useless(const OracleProblem& problem, int k_pairs,
                                              const Caps& caps, int workers) {
  if (k_pairs < 1) throw_contract("pairwise uselessness requires k >= 1 pairs");
  const int k = k_pairs;
  const std::int64_t n_tuples = ipow_or_minus_one(problem.control_size(), k, INT64_MAX / 2);
  const std::int64_t m_tuples = ipow_or_minus_one(problem.target_size(), k, INT64_MAX / 2);
  if (n_tuples < 0 || m_tuples < 0) throw_cap("pairwise decider index space overflows");
  const std::int64_t per_side = n_tuples * m_tuples * m_tuples;
  check_transcript_cap(per_side > INT64_MAX / per_side ? -1 : per_side * per_side, caps,
                       "pairwise decider");

  const DeciderContext ctx(problem, k);
  const auto& labels = problem.class_labels();

  // Joint law over (z, z') with both halves driven by one shared seed tuple.
  auto paired_law = [&](const std::string& label, const std::vector<int>& controls,
                        const std::vector<int>& probes, const std::vector<int>& controls2,
                        const std::vector<int>& probes2) {
    Distribution law;
    for (auto o : ctx.problem.class_members(label)) {
      const auto& joint = ctx.joints[o];
      for (std::size_t t = 0; t < joint.tuples.size(); ++t) {
        auto outcome = apply_tuple(ctx, o, joint.tuples[t], controls, probes);
        const auto second = apply_tuple(ctx, o, joint.tuples[t], controls2, probes2);
        outcome.insert(outcome.end(), second.begin(), second.end());
        law[std::move(outcome)] += ctx.class_conditional[o] * joint.weights[t];
      }
    }
    return law;
  };

  auto probe = [&](std::int64_t packed) -> std::optional<ClassicalWitness> {
    const std::int64_t xi = (packed - 1) / n_tuples + 1;
    const std::int64_t xj = (packed - 1) % n_tuples + 1;
    const auto controls = unpack_tuple(xi, problem.control_size(), k);
    const auto controls2 = unpack_tuple(xj, problem.control_size(), k);
    for (std::int64_t yi = 1; yi <= m_tuples; ++yi) {
      const auto probes = unpack_tuple(yi, problem.target_size(), k);
      for (std::int64_t yj = 1; yj <= m_tuples; ++yj) {
        const auto probes2 = unpack_tuple(yj, problem.target_size(), k);
        const Distribution reference = paired_law(labels.front(), controls, probes, controls2, probes2);
        for (std::size_t j = 1; j < labels.size(); ++j) {
          const Distribution other = paired_law(labels[j], controls, probes, controls2, probes2);
          if (auto diff = first_difference(reference, other)) {
            const auto& both = std::get<0>(*diff);
            ClassicalWitness witness;
            witness.class_a = labels.front();
            witness.class_b = labels[j];
            witness.first = QueryTuple{
                controls, probes,
                std::vector<int>(both.begin(), both.begin() + k)};
            witness.second = QueryTuple{
                controls2, probes2,
                std::vector<int>(both.begin() + k, both.end())};
            witness.prob_a = std::get<1>(*diff);
            witness.prob_b = std::get<2>(*diff);
            return witness;
          }
        }
      }
    }
    return std::nullopt;
  };

  UselessnessVerdict verdict;
  verdict.kind = UselessnessKind::pairwise;
  verdict.queries = 2 * k_pairs;
  verdict.classical_witness = scan_first(n_tuples * n_tuples, workers, probe);
  verdict.useless = !verdict.classical_witness.has_value();
  return verdict;
}

DensityMatrix sigma(const OracleProblem& problem, const std::string& label, int k,
                    const Caps& caps) {
  if (k < 1) throw_contract("sigma requires k >= 1");
  const int n = problem.control_size();
  const int m = problem.target_size();
  if (!encoding_dim_within(n, m, k, caps.max_state_dim)) {
    throw_cap("sigma dimension (N*M^2)^k exceeds the configured state-size cap");
  }
  std::vector<int> dims;
  for (int slot = 0; slot < k; ++slot) {
    dims.push_back(n);
    dims.push_back(m);
    dims.push_back(m);
  }
  DensityMatrix result(std::move(dims));
  for (auto o : problem.class_members(label)) {
    const Rational conditional = problem.prior(o) / problem.class_prior(label);
    const SeedDistribution joint = problem.joint_seeds(o, k);
    for (std::size_t t = 0; t < joint.support.size(); ++t) {
      result.add_pure(conditional * joint.weights[t],
                      encode_pure_tuple(problem.oracle(o), joint.support[t]));
    }
  }
  return result;
}

namespace {

std::optional<QuantumWitness> first_matrix_difference(const std::string& label_a,
                                                      const std::string& label_b,
                                                      const SparseRationalMatrix& a,
                                                      const SparseRationalMatrix& b) {
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    QuantumWitness witness;
    witness.class_a = label_a;
    witness.class_b = label_b;
    if (ib == b.entries().end() ||
        (ia != a.entries().end() && ia->first < ib->first)) {
      witness.row = ia->first.first;
      witness.col = ia->first.second;
      witness.entry_a = ia->second;
      return witness;
    }
    if (ia == a.entries().end() || ib->first < ia->first) {
      witness.row = ib->first.first;
      witness.col = ib->first.second;
      witness.entry_b = ib->second;
      return witness;
    }
    if (ia->second != ib->second) {
      witness.row = ia->first.first;
      witness.col = ia->first.second;
      witness.entry_a = ia->second;
      witness.entry_b = ib->second;
      return witness;
    }
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

}  // namespace

UselessnessVerdict quantum_useless(const OracleProblem& problem, int k, const Caps& caps) {
  const auto& labels = problem.class_labels();
  UselessnessVerdict verdict;
  verdict.kind = UselessnessKind::quantum;
  verdict.queries = k;

  const DensityMatrix reference = sigma(problem, labels.front(), k, caps);
  for (std::size_t j = 1; j < labels.size(); ++j) {
    const DensityMatrix other = sigma(problem, labels[j], k, caps);
    if (auto witness = first_matrix_difference(labels.front(), labels[j], reference.matrix(),
                                               other.matrix())) {
      verdict.quantum_witness = witness;
      verdict.useless = false;
      return verdict;
    }
  }
  verdict.useless = true;
  return verdict;
}

EquivalenceReport check_equivalence_theorem(const OracleProblem& problem, int k,
                                            const Caps& caps) {
  EquivalenceReport report;
  report.quantum = quantum_useless(problem, k, caps);
  report.pairwise = pairwise_classical_useless(problem, k, caps);
  report.biconditional_holds = report.quantum.useless == report.pairwise.useless;

  // sigma_j[(x,y,z), (x',y',z')] must equal Pr(pi_{x,r}(y)=z, pi_{x',r}(y')=z' | C_j) / (NM)^k.
  const int n = problem.control_size();
  const int m = problem.target_size();
  const std::int64_t slot_dim = static_cast<std::int64_t>(n) * m * m;
  const std::int64_t dim = ipow_or_minus_one(slot_dim, k, INT64_MAX / 2);
  if (dim < 0 || dim > INT64_MAX / dim) throw_cap("trace identity dimension overflows");
  check_transcript_cap(dim * dim, caps, "trace identity");

  const DeciderContext ctx(problem, k);
  const Rational norm = rational_pow(Rational(1, static_cast<std::int64_t>(n) * m),
                                     static_cast<unsigned>(k));

  auto decode = [&](std::int64_t flat) {
    std::vector<int> controls(static_cast<std::size_t>(k));
    std::vector<int> probes(static_cast<std::size_t>(k));
    std::vector<int> outcomes(static_cast<std::size_t>(k));
    for (int slot = k - 1; slot >= 0; --slot) {
      const std::int64_t v = flat % slot_dim;
      flat /= slot_dim;
      controls[static_cast<std::size_t>(slot)] = value1(static_cast<int>(v / (m * m)));
      probes[static_cast<std::size_t>(slot)] = value1(static_cast<int>((v / m) % m));
      outcomes[static_cast<std::size_t>(slot)] = value1(static_cast<int>(v % m));
    }
    return QueryTuple{std::move(controls), std::move(probes), std::move(outcomes)};
  };

  report.trace_identity_holds = true;
  for (const auto& label : problem.class_labels()) {
    const DensityMatrix sigma_j = sigma(problem, label, k, caps);
    for (std::int64_t row = 0; row < dim && report.trace_identity_holds; ++row) {
      const QueryTuple left = decode(row);
      for (std::int64_t col = 0; col < dim; ++col) {
        const QueryTuple right = decode(col);
        Rational probability(0);
        for (auto o : problem.class_members(label)) {
          const auto& joint = ctx.joints[o];
          for (std::size_t t = 0; t < joint.tuples.size(); ++t) {
            if (apply_tuple(ctx, o, joint.tuples[t], left.controls, left.probes) ==
                    left.outcomes &&
                apply_tuple(ctx, o, joint.tuples[t], right.controls, right.probes) ==
                    right.outcomes) {
              probability += ctx.class_conditional[o] * joint.weights[t];
            }
          }
        }
        if (sigma_j.matrix().at(row, col) != probability * norm) {
          report.trace_identity_holds = false;
          break;
        }
      }
    }
  }
  return report;
}

UnboundedErrorReport unbounded_error_link(const OracleProblem& problem, int k, bool quantum_model,
                                          bool allow_non_binary, const Caps& caps) {
  UnboundedErrorReport report;
  report.quantum_model = quantum_model;
  report.k = k;
  for (const auto& label : problem.class_labels()) {
    report.guessing_baseline = std::max(report.guessing_baseline, problem.class_prior(label));
  }

  const auto& labels = problem.class_labels();
  if (labels.size() != 2) {
    if (!allow_non_binary) {
      throw_contract("unbounded-error linkage is defined for binary problems (pass the "
                     "generalization flag to report the guessing baseline only)");
    }
    report.note = "non-binary problem: uselessness is strictly stronger than preserving the "
                  "guessing baseline; reporting baseline only";
    return report;
  }

  const Rational half(1, 2);
  const OracleProblem balanced =
      problem.with_class_priors({{labels[0], half}, {labels[1], half}});
  const UselessnessVerdict verdict = quantum_model ? quantum_useless(balanced, k, caps)
                                                   : weak_classical_useless(balanced, k, caps);
  report.useless = verdict.useless;
  report.complexity_greater_than_k = verdict.useless;
  report.note = verdict.useless
                    ? "k queries are useless under the balanced prior, so the unbounded-error "
                      "query complexity exceeds k"
                    : "k queries are not useless under the balanced prior";
  return report;
}

UselessnessVerdict weak_useless_iid_batch(const OracleProblem& base, int T, int ell,
                                          const Caps& caps) {
  if (T < 1 || ell < 1) throw_contract("batch reduction requires T >= 1 and ell >= 1");
  for (const auto& label : base.class_labels()) {
    if (base.class_members(label).size() != 1) {
      throw_contract("the batch factorization requires exactly one oracle per class");
    }
  }
  // With singleton classes and fresh per-slot seeds the batched law is the
  // slot-wise product of the base single-query law, and products over all
  // tuples agree between classes iff the single-slot laws agree (take
  // constant tuples and positive real roots).
  const UselessnessVerdict base_verdict = weak_classical_useless(base, 1, caps);

  UselessnessVerdict verdict;
  verdict.kind = UselessnessKind::weak;
  verdict.queries = ell;
  verdict.useless = base_verdict.useless;
  if (base_verdict.classical_witness) {
    const auto& base_witness = *base_verdict.classical_witness;
    const unsigned slots = static_cast<unsigned>(T) * static_cast<unsigned>(ell);
    ClassicalWitness witness;
    witness.class_a = base_witness.class_a;
    witness.class_b = base_witness.class_b;
    const std::vector<int> controls(static_cast<std::size_t>(T), base_witness.first.controls[0]);
    const std::vector<int> probes(static_cast<std::size_t>(T), base_witness.first.probes[0]);
    const std::vector<int> outcomes(static_cast<std::size_t>(T), base_witness.first.outcomes[0]);
    const int packed_x = static_cast<int>(pack_tuple(controls, base.control_size()));
    const int packed_y = static_cast<int>(pack_tuple(probes, base.target_size()));
    const int packed_z = static_cast<int>(pack_tuple(outcomes, base.target_size()));
    witness.first = QueryTuple{std::vector<int>(static_cast<std::size_t>(ell), packed_x),
                               std::vector<int>(static_cast<std::size_t>(ell), packed_y),
                               std::vector<int>(static_cast<std::size_t>(ell), packed_z)};
    witness.prob_a = rational_pow(base_witness.prob_a, slots);
    witness.prob_b = rational_pow(base_witness.prob_b, slots);
    verdict.classical_witness = std::move(witness);
  }
  return verdict;
}

}  // namespace olab
