#include "antisym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "antisym/errors.hpp"

namespace antisym {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const CoordinateEntry* entry_at(const Coordinate& coord, const std::string& zeta) {
  auto it = std::lower_bound(coord.begin(), coord.end(), zeta,
                             [](const CoordinateEntry& e, const std::string& z) { return e.zeta < z; });
  return it != coord.end() && it->zeta == zeta ? &*it : nullptr;
}

int parity_at(const Coordinate& coord, const std::string& zeta) {
  const CoordinateEntry* e = entry_at(coord, zeta);
  return e == nullptr ? 0 : e->parity;
}

/// Lex-least label where the coefficients of a and b differ.
std::optional<Label> first_differing_label(const HamelVector& a, const HamelVector& b) {
  std::set<Label> labels;
  for (const auto& [label, q] : a.terms()) labels.insert(label);
  for (const auto& [label, q] : b.terms()) labels.insert(label);
  for (const auto& label : labels) {
    if (a.coefficient(label) != b.coefficient(label)) return label;
  }
  return std::nullopt;
}

bool branch_claim_holds(const BranchTrace& t, const Coordinate& minus, const Coordinate& plus) {
  if (t.branch == ProofBranch::ShorterSide) {
    if (t.n_minus < t.n_x) return minus.empty() && !plus.empty();
    return plus.empty() && !minus.empty();
  }
  if (t.branch == ProofBranch::EtaPrimeOneSide) return parity_at(minus, t.zeta) != parity_at(plus, t.zeta);
  const CoordinateEntry* m = entry_at(minus, t.zeta);
  const CoordinateEntry* p = entry_at(plus, t.zeta);
  if (m == nullptr || p == nullptr) return false;
  if (t.branch == ProofBranch::Case3) return m->k_xi != p->k_xi;
  return m->k_eta != p->k_eta;
}

std::string describe_trace(const BranchTrace& t) {
  std::string out = std::string(to_string(t.branch)) + " n_x=" + std::to_string(t.n_x) +
                    " n_minus=" + std::to_string(t.n_minus) + " n_plus=" + std::to_string(t.n_plus);
  if (t.eta_hat) out += " eta_hat=\"" + t.eta_hat->bits() + "\"";
  if (t.branch != ProofBranch::ShorterSide) out += " zeta=\"" + t.zeta + "\"";
  if (t.eta_prime) out += " eta_prime=\"" + t.eta_prime->bits() + "\"";
  return out;
}

void record_lemma(std::size_t index, const HamelVector& x, const HamelVector& s, VerificationReport& partial) {
  partial.bump("pairs_enumerated");
  if (s.is_zero()) {
    partial.bump("s_zero_skipped");
    return;
  }
  ++partial.pairs_checked;
  {
    const LazyEncoding minus(x - s);
    const LazyEncoding plus(x + s);
    const auto first_diff = first_differing_coordinate(minus, plus);
    if (!first_diff || *first_diff > n_of(x)) {
      partial.bump("close_pairs");
      if (minus.n() != plus.n()) {
        partial.violations.push_back({index, "equal_n", to_string(x), to_string(s),
                                      std::to_string(minus.n()) + " != " + std::to_string(plus.n())});
      }
    }
  }
  const LemmaOutcome outcome = check_lemma_pair(x, s);
  if (!outcome.antecedent) {
    partial.bump("antecedent_failed");
    return;
  }
  partial.bump("antecedent_held");
  partial.record(outcome.trace->branch);
  if (!outcome.consequent || !outcome.branch_claim) {
    partial.violations.push_back(
        {index, outcome.consequent ? "branch_claim" : "lemma", to_string(x), to_string(s), outcome.detail});
  }
}

/// Either the exact gap or a certified enclosure, for reporting.
std::string describe_gap(const LazyEncoding& minus, const LazyEncoding& plus, std::optional<std::size_t> first_diff,
                         const EmbeddingConfig& config) {
  if (!first_diff) return "0";
  const auto fits = [&](const LazyEncoding& e) { return e.vector().is_zero() || e.n() <= config.n_max; };
  if (fits(minus) && fits(plus)) {
    const auto diff = TernaryFraction::difference(embed_ternary(plus.materialize(), config),
                                                  embed_ternary(minus.materialize(), config));
    TernaryFraction magnitude = diff;
    magnitude.numerator = abs(magnitude.numerator);
    std::string exact = magnitude.to_factored_string();
    if (exact.size() <= 96) return exact;
  }
  // First difference in coordinate i puts the leading differing digit in
  // block i, which pins the gap between the block boundaries.
  const std::size_t i = *first_diff;
  auto offset = [](std::size_t k) {
    return k <= kLayoutLimit ? std::to_string(block_offset(k)) : "B(" + std::to_string(k) + ")";
  };
  return "in (3^-" + offset(i + 1) + ", 3^-" + offset(i) + ")";
}

}  // namespace

std::uint64_t z_set_size(const HamelVector& x) {
  const std::uint64_t n = n_of(x);
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < x.support_size(); ++k) {
    if (size > std::numeric_limits<std::uint64_t>::max() / n) return std::numeric_limits<std::uint64_t>::max();
    size *= n;
  }
  return size;
}

std::vector<HamelVector> z_set(const HamelVector& x, std::uint64_t cap) {
  const std::size_t n = n_of(x);
  const std::uint64_t size = z_set_size(x);
  if (size > cap) throw CapacityError("z_set would hold " + std::to_string(size) + " vectors, above the cap " + std::to_string(cap));
  const std::vector<Label> labels = x.support();
  std::vector<std::size_t> digits(labels.size(), 0);
  std::vector<HamelVector> out;
  out.reserve(size);
  for (;;) {
    HamelVector v;
    for (std::size_t k = 0; k < labels.size(); ++k) v.accumulate(labels[k], enumerated(digits[k]));
    out.push_back(v - x);
    // Odometer over {0..n-1}^|w|.
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_z_set(const HamelVector& x, const HamelVector& s) {
  const std::size_t n = n_of(x);
  const HamelVector v = x + s;
  for (const auto& [label, q] : v.terms()) {
    if (!x.in_support(label)) return false;
    if (index_of(q).value >= n) return false;
  }
  return true;
}

bool membership_predicate(const HamelVector& x, const HamelVector& s) {
  const HamelVector v = x + s;
  for (const auto& [label, q] : v.terms()) {
    if (!x.in_support(label)) return false;
  }
  return n_below(v, n_of(x));
}

Rational gap(const HamelVector& x, const HamelVector& s, const EmbeddingConfig& config) {
  const TernaryFraction plus = f_ternary(x + s, config);
  const TernaryFraction minus = f_ternary(x - s, config);
  return TernaryFraction::difference(plus, minus).to_rational().abs();
}

GapEnclosure gap_enclosure(const HamelVector& x, const HamelVector& s, std::uint64_t digit_limit) {
  return embed_gap_enclosure(LazyEncoding(x - s), LazyEncoding(x + s), digit_limit);
}

std::string describe_gap(const HamelVector& x, const HamelVector& s, const EmbeddingConfig& config) {
  const LazyEncoding minus(x - s);
  const LazyEncoding plus(x + s);
  return describe_gap(minus, plus, first_differing_coordinate(minus, plus), config);
}

BranchTrace trace_branch(const HamelVector& x, const HamelVector& s) {
  if (s.is_zero()) throw PreconditionError("classify_branch requires s != 0");
  const HamelVector minus = x - s;
  const HamelVector plus = x + s;
  BranchTrace t;
  t.n_x = n_of(x);
  t.n_minus = n_of(minus);
  t.n_plus = n_of(plus);
  if (t.n_x > std::max(t.n_minus, t.n_plus)) {
    throw PreconditionError("classify_branch requires n_x <= max(n_{x-s}, n_{x+s})");
  }
  if (std::min(t.n_minus, t.n_plus) < t.n_x) {
    t.branch = ProofBranch::ShorterSide;
    return t;
  }
  t.eta_hat = first_differing_label(minus, plus);
  t.zeta = restrict(*t.eta_hat, t.n_x);

  std::vector<Label> extending;
  for (const auto& [label, q] : x.terms()) {
    if (extends(label, t.zeta)) extending.push_back(label);
  }
  if (extending.size() > 1) throw std::logic_error("n_x failed to separate the support");
  if (extending.empty()) {
    t.branch = ProofBranch::SEmpty;
    return t;
  }
  t.eta_prime = extending.front();
  if (minus.in_support(*t.eta_prime) != plus.in_support(*t.eta_prime)) {
    t.branch = ProofBranch::EtaPrimeOneSide;
    return t;
  }
  const Label eta_minus = eta_selector(minus, t.zeta);
  if (*t.eta_prime != eta_minus) {
    t.branch = ProofBranch::Case1;
  } else if (minus.coefficient(eta_minus) != plus.coefficient(eta_minus)) {
    t.branch = ProofBranch::Case2;
  } else {
    t.branch = ProofBranch::Case3;
  }
  return t;
}

ProofBranch classify_branch(const HamelVector& x, const HamelVector& s) { return trace_branch(x, s).branch; }

LemmaOutcome check_lemma_pair(const HamelVector& x, const HamelVector& s) {
  LemmaOutcome out;
  if (s.is_zero()) return out;
  const HamelVector minus = x - s;
  const HamelVector plus = x + s;
  const std::size_t n_x = n_of(x);
  out.antecedent = n_x <= std::max(n_of(minus), n_of(plus));
  if (!out.antecedent) return out;

  const Coordinate c_minus = encode_coordinate(minus, n_x);
  const Coordinate c_plus = encode_coordinate(plus, n_x);
  out.consequent = c_minus != c_plus;
  out.trace = trace_branch(x, s);
  out.branch_claim = branch_claim_holds(*out.trace, c_minus, c_plus);
  if (!out.consequent || !out.branch_claim) out.detail = describe_trace(*out.trace);
  return out;
}

std::vector<HamelVector> enumerate_vectors(const std::vector<Label>& universe, std::size_t max_index) {
  std::vector<HamelVector> out;
  if (max_index == 0) return out;
  std::vector<std::size_t> digits(universe.size(), 0);
  for (;;) {
    HamelVector v;
    for (std::size_t k = 0; k < universe.size(); ++k) v.accumulate(universe[k], enumerated(digits[k]));
    out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == max_index) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

HamelVector random_vector(std::mt19937_64& rng, const std::vector<Label>& labels, std::size_t max_index) {
  if (max_index == 0) return {};
  std::uniform_int_distribution<std::size_t> pick(0, max_index - 1);
  HamelVector v;
  for (const auto& label : labels) v.accumulate(label, enumerated(pick(rng)));
  return v;
}

VerificationReport exhaustive_lemma_check(const std::vector<Label>& universe, std::size_t max_index,
                                          const LemmaCheckConfig& config) {
  const auto start = Clock::now();
  const std::vector<HamelVector> vectors = enumerate_vectors(universe, max_index);
  const std::uint64_t count = static_cast<std::uint64_t>(vectors.size()) * vectors.size();
  if (count > config.pair_cap) {
    throw CapacityError("exhaustive check needs " + std::to_string(count) + " pairs, above the cap " +
                        std::to_string(config.pair_cap));
  }
  VerificationReport report;
  report.campaign = "exhaustive_lemma";
  report.counts["vectors"] = vectors.size();
  const std::size_t v = vectors.size();
  kernels::run(config.execution, count,
               [&](std::size_t index, VerificationReport& partial) {
                 record_lemma(index, vectors[index / v], vectors[index % v], partial);
               },
               report);
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

VerificationReport random_lemma_campaign(const std::vector<Label>& labels, std::size_t max_index, std::uint64_t pairs,
                                         std::uint64_t seed, const LemmaCheckConfig& config) {
  const auto start = Clock::now();
  if (max_index < 2 || labels.empty()) throw PreconditionError("random campaign needs a label and a nonzero coefficient");
  // Draws happen up front so the result does not depend on the schedule.
  std::mt19937_64 rng(seed);
  std::vector<std::pair<HamelVector, HamelVector>> drawn;
  drawn.reserve(pairs);
  for (std::uint64_t k = 0; k < pairs; ++k) {
    HamelVector x = random_vector(rng, labels, max_index);
    HamelVector s;
    do {
      s = random_vector(rng, labels, max_index);
    } while (s.is_zero());
    drawn.emplace_back(std::move(x), std::move(s));
  }
  VerificationReport report;
  report.campaign = "random_lemma";
  report.seed = seed;
  kernels::run(config.execution, drawn.size(),
               [&](std::size_t index, VerificationReport& partial) {
                 record_lemma(index, drawn[index].first, drawn[index].second, partial);
               },
               report);
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

std::vector<Label> default_fresh_labels() {
  std::vector<Label> out;
  for (const char* bits : {"", "1", "01", "11", "001", "101", "0001"}) out.push_back(Label::parse(bits));
  return out;
}

VerificationReport containment_campaign(const HamelVector& x, const ContainmentConfig& config) {
  const auto start = Clock::now();
  const std::size_t n_x = n_of(x);
  const std::uint64_t eps_exponent = epsilon_exponent(x, config.embedding);
  const std::vector<HamelVector> zx = z_set(x, config.z_cap);

  VerificationReport report;
  report.campaign = "containment";
  report.seed = config.seed;
  report.counts["n_x"] = n_x;
  report.counts["z_set_size"] = zx.size();
  if (zx.size() != z_set_size(x)) {
    report.violations.push_back({0, "z_set_cardinality", to_string(x), "",
                                 std::to_string(zx.size()) + " != " + std::to_string(z_set_size(x))});
  }

  // Draw the samples outside Z_x, checking the predicate on every raw draw.
  std::set<Label> label_pool(config.fresh_labels.begin(), config.fresh_labels.end());
  for (const auto& label : x.support()) label_pool.insert(label);
  const std::vector<Label> labels(label_pool.begin(), label_pool.end());
  std::mt19937_64 rng(config.seed);
  std::vector<HamelVector> samples;
  samples.reserve(config.sample_count);
  const std::uint64_t max_draws = 1000 * config.sample_count + 1000;
  std::uint64_t draws = 0;
  while (samples.size() < config.sample_count) {
    if (++draws > max_draws) throw CapacityError("could not draw enough samples outside z_set(x)");
    HamelVector s = random_vector(rng, labels, config.max_index);
    const bool member = std::binary_search(zx.begin(), zx.end(), s);
    if (membership_predicate(x, s)) {
      report.bump("predicate_true");
      if (!member) report.violations.push_back({draws, "predicate_outside_z", to_string(x), to_string(s), ""});
    }
    if (in_z_set(x, s) != member) {
      report.violations.push_back({draws, "z_membership_mismatch", to_string(x), to_string(s), ""});
    }
    if (member) {
      report.bump("draws_rejected");
      continue;
    }
    samples.push_back(std::move(s));
  }
  report.counts["draws"] = draws;

  const std::size_t inside = zx.size();
  const auto& embedding = config.embedding;
  auto task = [&](std::size_t index, VerificationReport& partial) {
    const bool in_z = index < inside;
    const HamelVector& s = in_z ? zx[index] : samples[index - inside];
    const LazyEncoding minus(x - s);
    const LazyEncoding plus(x + s);
    const auto first_diff = first_differing_coordinate(minus, plus);
    // distance < delta  <=>  the points agree on coordinates 0..n_x
    const bool close = !first_diff || *first_diff > n_x;
    ++partial.pairs_checked;

    if (close) partial.bump("close_pairs");
    if (close && minus.n() != plus.n()) {
      partial.violations.push_back({index, "equal_n", to_string(x), to_string(s),
                                    std::to_string(minus.n()) + " != " + std::to_string(plus.n())});
    }
    if (in_z) {
      partial.bump("z_checked");
      if (!in_z_set(x, s)) partial.violations.push_back({index, "z_membership_mismatch", to_string(x), to_string(s), ""});
      if (close) {
        partial.exceptional.push_back({index, to_string(s), distance_from_index(first_diff).to_string(),
                                       describe_gap(minus, plus, first_diff, embedding)});
      }
      return;
    }

    partial.bump("samples_checked");
    if (close) {
      partial.violations.push_back({index, "distance_below_delta", to_string(x), to_string(s),
                                    "distance " + distance_from_index(first_diff).to_string()});
    }
    const auto fits = [&](const LazyEncoding& e) { return e.vector().is_zero() || e.n() <= embedding.n_max; };
    bool reaches_epsilon = false;
    if (fits(minus) && fits(plus)) {
      partial.bump("gap_exact");
      const auto diff = TernaryFraction::difference(embed_ternary(plus.materialize(), embedding),
                                                    embed_ternary(minus.materialize(), embedding));
      reaches_epsilon = diff.compare_abs_to_pow3_inverse(eps_exponent) >= 0;
    } else {
      partial.bump("gap_enclosed");
      const GapEnclosure e = embed_gap_enclosure(minus, plus, eps_exponent + 1);
      reaches_epsilon = e.lower_reaches_pow3_inverse(eps_exponent);
    }
    if (!reaches_epsilon) {
      partial.violations.push_back({index, "gap_below_epsilon", to_string(x), to_string(s), ""});
    }
  };
  kernels::run(config.execution, inside + samples.size(), task, report);
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

}  // namespace antisym
